//! Verification suites. Each suite runs one family of checks over its default parameter set, or
//! over a single `(n, q)` when both are given, and returns a serializable report.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomics::Cyclotomic;
use crate::dlcox::{cuspidal, rw_full, rw_semisimple, sigma_plus_min, steinberg, CoxeterChar};
use crate::ffield::{norm_inflate_char, MultChar};
use crate::glnq::GroupContext;
use crate::hcseries::{self, SimpleSupport};
use crate::jlmod;
use crate::nilstrata::{jordan_partition, stratum_compare, NilpotentOp};
use crate::oracle::{self, enumerate_group_and_classes};
use crate::partitions::{green_polynomial, leq, partitions, Partition};
use crate::{domain, Error, Result};

/// Groups small enough for the oracle under the default limit, with supported field towers.
pub const SUPPORTED_GROUPS: &[(u32, u64)] = &[
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 7),
    (1, 8),
    (1, 9),
    (2, 2),
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 7),
    (2, 8),
    (2, 9),
    (3, 2),
    (3, 3),
    (4, 2),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Cuspdim,
    Oracleid,
    Sigmamax,
    Dualbasis,
    Compare,
    Jlell,
    Typedim,
    Serre,
    Green,
    Strata,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Cuspdim,
        Suite::Oracleid,
        Suite::Sigmamax,
        Suite::Dualbasis,
        Suite::Compare,
        Suite::Jlell,
        Suite::Typedim,
        Suite::Serre,
        Suite::Green,
        Suite::Strata,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cuspdim => "cuspdim",
            Suite::Oracleid => "oracleid",
            Suite::Sigmamax => "sigmamax",
            Suite::Dualbasis => "dualbasis",
            Suite::Compare => "compare",
            Suite::Jlell => "jlell",
            Suite::Typedim => "typedim",
            Suite::Serre => "serre",
            Suite::Green => "green",
            Suite::Strata => "strata",
            Suite::Oracle => "oracle",
        }
    }

    /// Position in the acceptance list, 1-based.
    pub fn number(self) -> usize {
        Suite::ALL.iter().position(|&s| s == self).unwrap() + 1
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Cuspdim => "cuspidal dimension is Π_{i<n}(q^i - 1)",
            Suite::Oracleid => "cuspidals and Steinberg are single rows of the oracle table",
            Suite::Sigmamax => "(R_w(θ), π_P') = (-1)^{n+1} δ_{P',P_min}",
            Suite::Dualbasis => "Kostka multiplicities, dual basis, σ⁺_{P_min} = analytic",
            Suite::Compare => "jl_p ∘ br_p = br_p ∘ (-1)^{n+1} R_w on semisimple classes",
            Suite::Jlell => "congruent inputs give congruent outputs mod ℓ",
            Suite::Typedim => "dim σ⁺_{P_min} = (|GL_n(F_q)| / (q^n - 1))_{p'}",
            Suite::Serre => "Serre weight count equals semisimple class count",
            Suite::Green => "full and semisimple R_w agree; Q^{(1^m)}_{(m)}",
            Suite::Strata => "kernel-dimension order equals dominance; Jordan type invariant",
            Suite::Oracle => "oracle orthogonality, fusion, Gelfand–Graev, class numbers",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// Optional overrides of a suite's parameter set.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SuiteParams {
    pub n: Option<u32>,
    pub q: Option<u64>,
    pub m: Option<u32>,
    pub ell: Option<u64>,
}

impl SuiteParams {
    fn groups(&self, defaults: &[(u32, u64)]) -> Vec<(u32, u64)> {
        match (self.n, self.q) {
            (Some(n), Some(q)) => vec![(n, q)],
            (Some(n), None) => defaults.iter().copied().filter(|g| g.0 == n).collect(),
            (None, Some(q)) => defaults.iter().copied().filter(|g| g.1 == q).collect(),
            (None, None) => defaults.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub criterion: usize,
    pub description: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// `PASS cuspdim (1): 84/84 checks`.
    pub fn summary_line(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.pass).count();
        format!(
            "{} {} ({}): {}/{} checks, {}",
            if self.pass() { "PASS" } else { "FAIL" },
            self.suite,
            self.criterion,
            ok,
            self.checks.len(),
            self.description
        )
    }
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Cuspdim => cuspdim(params)?,
        Suite::Oracleid => oracleid(params)?,
        Suite::Sigmamax => sigmamax(params)?,
        Suite::Dualbasis => dualbasis(params)?,
        Suite::Compare => compare(params)?,
        Suite::Jlell => jlell(params)?,
        Suite::Typedim => typedim(params)?,
        Suite::Serre => serre(params)?,
        Suite::Green => green(params)?,
        Suite::Strata => strata(params)?,
        Suite::Oracle => oracle_suite(params)?,
    };
    Ok(SuiteReport {
        suite,
        criterion: suite.number(),
        description: suite.description().to_string(),
        checks,
    })
}

const CUSPIDAL_GROUPS: &[(u32, u64)] = &[(2, 2), (2, 3), (2, 5), (3, 2), (3, 3)];

fn regular_exponents(n: u32, q: u64) -> Result<Vec<i64>> {
    let m = q.pow(n) - 1;
    let mut out = Vec::new();
    for e in 0..m as i64 {
        if MultChar::new(q, n, e)?.is_regular() {
            out.push(e);
        }
    }
    Ok(out)
}

fn cuspdim(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for (n, q) in params.groups(CUSPIDAL_GROUPS) {
        let expected = (1..n).fold(BigInt::from(1), |acc, i| acc * (BigInt::from(q).pow(i) - 1));
        let expected = Cyclotomic::from_bigint(expected);
        for e in regular_exponents(n, q)? {
            let got = cuspidal(&CoxeterChar::from_exponent(n, q, e)?)?.degree();
            out.push(CheckResult::new(
                format!("GL_{n}(F_{q}) e={e}"),
                got == expected,
                format!("dim {got}, expected {expected}"),
            ));
        }
    }
    Ok(out)
}

fn oracleid(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for (n, q) in params.groups(CUSPIDAL_GROUPS) {
        let ctx = GroupContext::get(n, q)?;
        let g = enumerate_group_and_classes(&ctx)?;
        let table = oracle::character_table(&g)?;
        let exps = regular_exponents(n, q)?;
        let rows: Vec<Vec<usize>> = exps
            .par_iter()
            .map(|&e| {
                let f = cuspidal(&CoxeterChar::new(ctx.clone(), MultChar::new(q, n, e)?)?)?;
                Ok(table.matching_rows(&f))
            })
            .collect::<Result<_>>()?;
        for (e, r) in exps.iter().zip(rows) {
            out.push(CheckResult::new(
                format!("GL_{n}(F_{q}) cuspidal e={e}"),
                r.len() == 1,
                format!("matching rows {r:?}"),
            ));
        }
        let r = table.matching_rows(&steinberg(&ctx));
        out.push(CheckResult::new(
            format!("GL_{n}(F_{q}) Steinberg"),
            r.len() == 1,
            format!("matching rows {r:?}"),
        ));
    }
    Ok(out)
}

const SIGMAMAX_CASES: &[(u32, u64, u32)] = &[(2, 2, 1), (2, 3, 1), (2, 5, 1), (3, 2, 1), (4, 2, 2)];

fn sigmamax(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let cases: Vec<(u32, u64, u32)> = match (params.n, params.q) {
        (Some(n), Some(q)) => {
            let listed: Vec<_> = SIGMAMAX_CASES
                .iter()
                .copied()
                .filter(|c| c.0 == n && c.1 == q && params.m.is_none_or(|m| m == c.2))
                .collect();
            if listed.is_empty() {
                vec![(n, q, params.m.unwrap_or(1))]
            } else {
                listed
            }
        }
        _ => SIGMAMAX_CASES
            .iter()
            .copied()
            .filter(|c| params.n.is_none_or(|n| n == c.0) && params.q.is_none_or(|q| q == c.1))
            .collect(),
    };
    let mut out = Vec::new();
    for (n, q, m) in cases {
        if m == 0 || n % m != 0 {
            return domain(format!("m = {m} does not divide n = {n}"));
        }
        let ctx = GroupContext::get(n, q)?;
        let r = n / m;
        let p_min = Partition::single_row(r);
        let sign = ctx.eps_g() * ctx.eps_w();
        for e_m in regular_exponents(m, q)? {
            let support = SimpleSupport::new(ctx.clone(), m, e_m)?;
            let theta = norm_inflate_char(&support.theta(), n)?;
            let rw = rw_full(&CoxeterChar::new(ctx.clone(), theta)?)?;
            for p in partitions(r) {
                let pi = hcseries::pi_p(&support, &p)?;
                let got = rw.inner_product(&pi)?;
                let expected = Cyclotomic::from_int(if p == p_min { sign } else { 0 });
                out.push(CheckResult::new(
                    format!("GL_{n}(F_{q}) m={m} θ_m=χ_{e_m} P'={p}"),
                    got == expected,
                    format!("(R_w(θ), π_P') = {got}, expected {expected}"),
                ));
            }
        }
    }
    Ok(out)
}

fn dualbasis(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let mut supports: Vec<SimpleSupport> = Vec::new();
    for (n, q) in params.groups(&[(3, 2), (2, 2), (2, 3), (2, 5)]) {
        let ctx = GroupContext::get(n, q)?;
        let m = params.m.unwrap_or(1);
        let exps = if n == 3 && params.m.is_none() {
            vec![0]
        } else {
            regular_exponents(m, q)?
        };
        for e in exps {
            supports.push(SimpleSupport::new(ctx.clone(), m, e)?);
        }
    }
    let mut out = Vec::new();
    for s in supports {
        let label = format!("{s:?}");
        match hcseries::sigma_family(&s) {
            Ok(fam) => {
                let p_min = Partition::single_row(s.r());
                let oracle_side = fam.sigma_plus(&p_min)?.to_class_function()?;
                let analytic = sigma_plus_min(s.ctx(), &s.theta())?;
                out.push(CheckResult::new(
                    format!("{label} Kostka pattern and duality"),
                    true,
                    format!("decomposition {:?}", fam.decomposition_matrix()),
                ));
                out.push(CheckResult::new(
                    format!("{label} σ⁺_P_min oracle = analytic"),
                    oracle_side.equals(&analytic),
                    format!("differences at classes {:?}", oracle_side.differences(&analytic)),
                ));
            }
            Err(Error::Inconsistent(msg)) => {
                out.push(CheckResult::new(format!("{label} Kostka pattern and duality"), false, msg));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn compare(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for (n, q) in params.groups(&[(2, 2), (2, 3), (2, 5), (3, 2)]) {
        for v in jlmod::comparison_suite(n, q)? {
            out.push(CheckResult::new(
                format!("GL_{n}(F_{q}) e={}", v.inputs["e"]),
                v.pass,
                if v.pass {
                    String::new()
                } else {
                    format!("expected {} got {}", v.expected, v.got)
                },
            ));
        }
    }
    Ok(out)
}

fn jlell(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let cases = match (params.n, params.q, params.ell) {
        (Some(n), Some(q), Some(l)) => vec![(n, q, l)],
        _ => vec![(2, 2, 3), (2, 3, 2), (2, 5, 3), (2, 5, 2)]
            .into_iter()
            .filter(|c| {
                params.n.is_none_or(|n| n == c.0)
                    && params.q.is_none_or(|q| q == c.1)
                    && params.ell.is_none_or(|l| l == c.2)
            })
            .collect(),
    };
    let mut out = Vec::new();
    for (n, q, ell) in cases {
        let s = jlmod::jl_ell_sweep(n, q, ell)?;
        out.push(CheckResult::new(
            format!("GL_{n}(F_{q}) ℓ={ell} congruent inputs ⟹ congruent outputs"),
            s.implication_holds,
            format!("{} of {} pairs congruent", s.congruent_pairs, s.pairs),
        ));
        let m = q.pow(n) - 1;
        let ell_part = m / crate::arith::prime_to_part(m as u128, ell as u128) as u64;
        if ell_part < m {
            out.push(CheckResult::new(
                format!("GL_{n}(F_{q}) ℓ={ell} some non-congruent pair separates"),
                s.separating_pair.is_some(),
                format!("{:?}", s.separating_pair),
            ));
        }
        if (n, q, ell) == (2, 3, 2) {
            let ctx = GroupContext::get(2, 3)?;
            let id = ctx.identity_index();
            let one = ctx.poly_of_root(1, 0)?;
            let reg = ctx
                .class_index(&crate::GLnClassData::new(
                    [(one, Partition::single_row(2))].into_iter().collect(),
                ))
                .unwrap();
            let all = (0..m as i64).all(|e| {
                let f = jlmod::jl_ell(2, 3, 2, e).unwrap();
                f.value(id) == Cyclotomic::from_int(-2) && f.value(reg) == Cyclotomic::one()
            });
            out.push(CheckResult::new(
                "GL_2(F_3) ℓ=2 all inputs congruent",
                s.congruent_pairs == s.pairs,
                format!("{} of {} pairs", s.congruent_pairs, s.pairs),
            ));
            out.push(CheckResult::new(
                "GL_2(F_3) ℓ=2 output −2 at 1, 1 at regular unipotent",
                all,
                "",
            ));
        }
        if (n, q, ell) == (2, 5, 3) {
            let v = jlmod::jl_ell_check(2, 5, 3, 1, 17)?;
            out.push(CheckResult::new(
                "GL_2(F_5) ℓ=3 (1,17)",
                v.congruent_inputs && v.congruent_outputs,
                format!("{v:?}"),
            ));
        }
    }
    Ok(out)
}

fn typedim(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    params
        .groups(CUSPIDAL_GROUPS)
        .into_iter()
        .map(|(n, q)| {
            let v = jlmod::typedim_check(n, q)?;
            Ok(CheckResult::new(
                format!("GL_{n}(F_{q})"),
                v.pass,
                format!("expected {} got {}", v.expected, v.got),
            ))
        })
        .collect()
}

fn serre(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let cases: Vec<(u32, u32, u32)> = match (params.n, params.q) {
        (Some(n), Some(p)) => vec![(n, p as u32, params.m.unwrap_or(1))],
        _ => vec![(2, 3, 1), (2, 5, 1), (3, 2, 1), (3, 3, 1)],
    };
    cases
        .into_iter()
        .map(|(n, p, f0)| {
            let w = jlmod::serre_weights(n, p, f0)?;
            Ok(CheckResult::new(
                format!("n={n} p={p} f0={f0}"),
                w.count_matches(),
                format!("{} weights, {} semisimple classes", w.weights.len(), w.semisimple_classes),
            ))
        })
        .collect()
}

fn green(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let groups = params.groups(&[(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2)]);
    for &(n, q) in &groups {
        let ctx = GroupContext::get(n, q)?;
        let m = q.pow(n) - 1;
        let bad: Vec<i64> = (0..m as i64)
            .into_par_iter()
            .filter(|&e| {
                let spec = CoxeterChar::new(ctx.clone(), MultChar::new(q, n, e).unwrap()).unwrap();
                let full = rw_full(&spec).unwrap();
                !ctx.semisimple_indices()
                    .into_iter()
                    .all(|c| rw_semisimple(&spec, &ctx.classes()[c]).unwrap() == full.value(c))
            })
            .collect();
        out.push(CheckResult::new(
            format!("GL_{n}(F_{q}) full = semisimple on semisimple classes"),
            bad.is_empty(),
            format!("failing exponents {bad:?}"),
        ));
    }
    let qs: Vec<u64> = match params.q {
        Some(q) => vec![q],
        None => vec![2, 3, 4, 5, 7, 8, 9],
    };
    for q in qs {
        for m in 1..=5u32 {
            let got = green_polynomial(&Partition::single_column(m), &Partition::single_row(m), q)?;
            let sign = if m % 2 == 1 { 1 } else { -1 };
            let expected = (1..m).fold(BigInt::from(sign), |acc, i| acc * (BigInt::from(q).pow(i) - 1));
            out.push(CheckResult::new(
                format!("Q^(1^{m})_({m})({q})"),
                got == expected,
                format!("{got} vs {expected}"),
            ));
        }
    }
    Ok(out)
}

/// Random invertible integer matrix with small entries.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize, p: Option<u64>) -> Vec<Vec<i64>> {
    loop {
        let g: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        let big: Vec<Vec<BigInt>> = g
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let full_rank = match p {
            None => crate::linalg::bareiss_rank(&big) == n,
            Some(p) => {
                let m: Vec<Vec<u64>> = g
                    .iter()
                    .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
                    .collect();
                crate::linalg::modp::rank(&m, p) == n
            }
        };
        if full_rank {
            return g;
        }
    }
}

fn strata(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let max = params.n.unwrap_or(6);
    let mut out = Vec::new();
    for n in 1..=max {
        let parts = partitions(n);
        let mut agree = 0;
        let mut disagree = Vec::new();
        for lambda in &parts {
            let op = NilpotentOp::from_partition(lambda, None)?;
            for p in &parts {
                if stratum_compare(&op, p)? == leq(p, lambda) {
                    agree += 1;
                } else {
                    disagree.push(format!("{p} vs {lambda}"));
                }
            }
        }
        out.push(CheckResult::new(
            format!("degree {n}: kernel order = dominance"),
            disagree.is_empty(),
            format!("{agree} pairs agree; disagreements {disagree:?}"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 1..=max {
        for lambda in partitions(n) {
            let mut ok = true;
            for trial in 0..200 {
                let p = if trial % 2 == 0 { None } else { Some(5) };
                let g = random_invertible(&mut rng, n as usize, p);
                let op = NilpotentOp::from_partition(&lambda, p)?.conjugate_by(&g)?;
                ok &= jordan_partition(&op) == lambda;
            }
            out.push(CheckResult::new(
                format!("type {lambda}: 200 random conjugates"),
                ok,
                "",
            ));
        }
    }
    Ok(out)
}

fn oracle_suite(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let groups = params.groups(SUPPORTED_GROUPS);
    groups
        .into_iter()
        .map(|(n, q)| {
            let ctx = GroupContext::get(n, q)?;
            let g = enumerate_group_and_classes(&ctx)?;
            let t = oracle::character_table(&g)?;
            let rep = oracle::self_consistency(&g, &t)?;
            Ok(CheckResult::new(format!("GL_{n}(F_{q})"), rep.pass(), format!("{rep:?}")))
        })
        .collect()
}
