//! Level-zero transfer maps from `F_{q^n}^×` to `GL_n(F_q)`.
//!
//! `jl_p` sends a function on the torus to a Brauer class function on the semisimple classes;
//! it is evaluated here from its closed form and compared against the reduction of
//! `(-1)^{n+1} R_w`. The mod-`ℓ` map is checked through congruences of exponents. Also: the
//! dimension relation, Serre weights and the trace formulas on both sides.
//!
//! At level zero every sign coming from symplectic modules is `1`; no such parameter is exposed.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{is_prime, prime_to_part};
use crate::classfun::{ClassFunction, Support};
use crate::cyclotomics::Cyclotomic;
use crate::dlcox::{rw_full, rw_semisimple, CoxeterChar};
use crate::ffield::MultChar;
use crate::glnq::{gl_order, GroupContext};
use crate::{domain, Error, Result};

/// A function on `F_{q^n}^×`, stored by discrete logarithm against the tower generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusClassFunction {
    q: u64,
    n: u32,
    values: Vec<Cyclotomic>,
}

impl TorusClassFunction {
    pub fn new(q: u64, n: u32, values: Vec<Cyclotomic>) -> Result<Self> {
        let m = q
            .checked_pow(n)
            .ok_or_else(|| Error::Config(format!("{q}^{n} overflows")))?
            - 1;
        if values.len() as u64 != m {
            return domain(format!("{} values for a cyclic group of order {m}", values.len()));
        }
        Ok(TorusClassFunction { q, n, values })
    }

    /// The character `χ_e` itself; on the torus the Brauer lift is the identity since
    /// `q^n - 1` is prime to `p`.
    pub fn from_char(chi: &MultChar) -> Self {
        let values = (0..chi.modulus()).map(|j| chi.value_at_dlog(j)).collect();
        TorusClassFunction {
            q: chi.q,
            n: chi.n,
            values,
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn value(&self, j: u64) -> &Cyclotomic {
        &self.values[(j % self.modulus()) as usize]
    }

    /// `x ↦ f(x^{q^k})`.
    pub fn frobenius_twist(&self, k: u32) -> Self {
        let m = self.modulus();
        let step = (self.q as u128).pow(k) % m as u128;
        let values = (0..m)
            .map(|j| self.value((j as u128 * step % m as u128) as u64).clone())
            .collect();
        TorusClassFunction { values, ..*self }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.q, self.n) != (other.q, other.n) {
            return domain("torus functions on different fields");
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TorusClassFunction { values, ..*self })
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        TorusClassFunction {
            values: self.values.iter().map(|v| v * c).collect(),
            ..*self
        }
    }
}

/// `(|GL_{n/d}(F_{q^d})| / (q^n - 1))_{p'}`.
pub fn torus_index_p_prime(n: u32, q: u64, d: u32) -> Result<u64> {
    if d == 0 || n % d != 0 {
        return domain(format!("{d} does not divide {n}"));
    }
    let (p, _) = crate::ffield::prime_power(q)?;
    let order = gl_order(n / d, q.pow(d))
            .to_u128()
            .ok_or_else(|| Error::Config(format!("|GL_{}(F_{})| overflows", n / d, q.pow(d))))?;
    let torus = (q as u128).pow(n) - 1;
    if order % torus != 0 {
        return Err(Error::Inconsistent(format!("{torus} does not divide {order}")));
    }
    Ok(prime_to_part(order / torus, p as u128) as u64)
}

fn galois_sum(f: &TorusClassFunction, j: u64, d: u32) -> Cyclotomic {
    let m = f.modulus() as u128;
    let mut x = j as u128 % m;
    let mut acc = Cyclotomic::zero();
    for _ in 0..d {
        acc = &acc + f.value(x as u64);
        x = x * f.q as u128 % m;
    }
    acc
}

/// `JL_p(f)` on the semisimple classes: at the class of `x ∈ F_{q^n}^×` of degree `d`,
/// `(-1)^{n+n/d} (index)_{p'} Σ_{γ ∈ Gal(F_{q^d}/F_q)} f(γx)`; zero on classes not met by the
/// torus.
pub fn jl_p(ctx: &Arc<GroupContext>, f: &TorusClassFunction) -> Result<ClassFunction> {
    if (f.q, f.n) != (ctx.q(), ctx.n()) {
        return domain(format!(
            "function on F_{{{}^{}}}^× does not match {ctx:?}",
            f.q, f.n
        ));
    }
    let n = ctx.n();
    let mut out = ClassFunction::zero(ctx.clone(), Support::EllRegular(ctx.p() as u64));
    for c in ctx.semisimple_indices() {
        let Some((poly, _)) = ctx.classes()[c].single() else {
            continue;
        };
        let d = poly.degree();
        if n % d != 0 {
            continue;
        }
        let j = ctx.root_dlog_in_top(poly)?;
        let sign = if (n + n / d) % 2 == 0 { 1 } else { -1 };
        let idx = torus_index_p_prime(n, ctx.q(), d)? as i64;
        out.set(c, galois_sum(f, j, d).scale_int(sign * idx));
    }
    Ok(out)
}

/// Machine-readable outcome of one check.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Verdict {
    pub inputs: Value,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
}

fn values_json(f: &ClassFunction) -> Value {
    let ctx = f.ctx();
    let map: serde_json::Map<String, Value> = f
        .support_indices()
        .into_iter()
        .map(|i| (ctx.classes()[i].to_string(), json!(f.value(i))))
        .collect();
    Value::Object(map)
}

/// `jl_p(br_p χ_e) = br_p((-1)^{n+1} R_w(χ_e))` on the semisimple classes.
pub fn comparison_check(n: u32, q: u64, e: i64) -> Result<Verdict> {
    let ctx = GroupContext::get(n, q)?;
    let chi = MultChar::new(q, n, e)?;
    let got = jl_p(&ctx, &TorusClassFunction::from_char(&chi))?;
    let spec = CoxeterChar::new(ctx.clone(), chi)?;
    let expected = rw_full(&spec)?
        .scale_int(spec.sign())
        .brauer_restrict(ctx.p() as u64)?;
    Ok(Verdict {
        inputs: json!({"n": n, "q": q, "e": chi.e}),
        pass: got.equals(&expected),
        expected: values_json(&expected),
        got: values_json(&got),
    })
}

/// Every exponent of `F_{q^n}^×`.
pub fn comparison_suite(n: u32, q: u64) -> Result<Vec<Verdict>> {
    let m = q.pow(n) - 1;
    (0..m as i64)
        .into_par_iter()
        .map(|e| comparison_check(n, q, e))
        .collect()
}

/// `ε ∈ Z/(q^n - 1)` with `ε ≡ 1` mod the `ℓ'`-part and `ε ≡ 0` mod the `ℓ`-part.
pub fn ell_prime_idempotent(n: u32, q: u64, ell: u64) -> u64 {
    let m = q.pow(n) - 1;
    let m_ell = m / prime_to_part(m as u128, ell as u128) as u64;
    let m_rest = m / m_ell;
    (0..m)
        .step_by(m_ell as usize)
        .find(|&x| x % m_rest == 1 % m_rest)
        .expect("CRT solution exists")
}

/// `ℓ'`-component of `χ_e` as an exponent.
pub fn ell_prime_component(n: u32, q: u64, ell: u64, e: u64) -> u64 {
    let m = q.pow(n) - 1;
    (e as u128 * ell_prime_idempotent(n, q, ell) as u128 % m as u128) as u64
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct EllVerdict {
    pub congruent_inputs: bool,
    pub congruent_outputs: bool,
}

impl EllVerdict {
    /// Congruent inputs force congruent outputs.
    pub fn consistent(&self) -> bool {
        !self.congruent_inputs || self.congruent_outputs
    }
}

fn check_ell(q: u64, ell: u64) -> Result<()> {
    if !is_prime(ell) {
        return domain(format!("{ell} is not prime"));
    }
    if q % ell == 0 {
        return domain(format!("ℓ = {ell} divides q = {q}"));
    }
    Ok(())
}

/// The `ℓ'`-parts of `χ_{e1}` and `χ_{e2}` are Frobenius-conjugate.
pub fn congruent_inputs(n: u32, q: u64, ell: u64, e1: i64, e2: i64) -> Result<bool> {
    check_ell(q, ell)?;
    let m = q.pow(n) - 1;
    let a = ell_prime_component(n, q, ell, e1.rem_euclid(m as i64) as u64);
    let mut b = ell_prime_component(n, q, ell, e2.rem_euclid(m as i64) as u64);
    for _ in 0..n {
        if a == b {
            return Ok(true);
        }
        b = (b as u128 * q as u128 % m as u128) as u64;
    }
    Ok(false)
}

/// `JL_ℓ` of `χ_e`: `br_ℓ R_w(χ_e)` on the `ℓ`-regular classes.
pub fn jl_ell(n: u32, q: u64, ell: u64, e: i64) -> Result<ClassFunction> {
    check_ell(q, ell)?;
    rw_full(&CoxeterChar::from_exponent(n, q, e)?)?.brauer_restrict(ell)
}

pub fn jl_ell_check(n: u32, q: u64, ell: u64, e1: i64, e2: i64) -> Result<EllVerdict> {
    let inputs = congruent_inputs(n, q, ell, e1, e2)?;
    let outputs = jl_ell(n, q, ell, e1)?.equals(&jl_ell(n, q, ell, e2)?);
    Ok(EllVerdict {
        congruent_inputs: inputs,
        congruent_outputs: outputs,
    })
}

/// All exponent pairs for one `(n, q, ℓ)`.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct EllSweep {
    pub pairs: usize,
    pub congruent_pairs: usize,
    pub implication_holds: bool,
    pub separating_pair: Option<(u64, u64)>,
}

pub fn jl_ell_sweep(n: u32, q: u64, ell: u64) -> Result<EllSweep> {
    check_ell(q, ell)?;
    let m = q.pow(n) - 1;
    let outs = (0..m as i64)
        .into_par_iter()
        .map(|e| jl_ell(n, q, ell, e))
        .collect::<Result<Vec<_>>>()?;
    let mut sweep = EllSweep {
        pairs: 0,
        congruent_pairs: 0,
        implication_holds: true,
        separating_pair: None,
    };
    for e1 in 0..m {
        for e2 in e1 + 1..m {
            sweep.pairs += 1;
            let ci = congruent_inputs(n, q, ell, e1 as i64, e2 as i64)?;
            let co = outs[e1 as usize].equals(&outs[e2 as usize]);
            if ci {
                sweep.congruent_pairs += 1;
                sweep.implication_holds &= co;
            } else if !co && sweep.separating_pair.is_none() {
                sweep.separating_pair = Some((e1, e2));
            }
        }
    }
    Ok(sweep)
}

/// `dim σ⁺_{P_min} = (|GL_n(F_q)| / (q^n - 1))_{p'}` for every exponent.
pub fn typedim_check(n: u32, q: u64) -> Result<Verdict> {
    let ctx = GroupContext::get(n, q)?;
    let expected = torus_index_p_prime(n, q, 1)?;
    let id = ctx.identity_index();
    let m = q.pow(n) - 1;
    let dims = (0..m as i64)
        .into_par_iter()
        .map(|e| {
            let spec = CoxeterChar::new(ctx.clone(), MultChar::new(q, n, e)?)?;
            Ok(rw_full(&spec)?.value(id).scale_int(spec.sign()))
        })
        .collect::<Result<Vec<Cyclotomic>>>()?;
    let distinct: std::collections::BTreeSet<&Cyclotomic> = dims.iter().collect();
    let pass = distinct.len() == 1 && **distinct.first().unwrap() == Cyclotomic::from_int(expected as i64);
    Ok(Verdict {
        inputs: json!({"n": n, "q": q}),
        expected: json!(expected),
        got: json!(distinct.into_iter().collect::<Vec<_>>()),
        pass,
    })
}

/// A Serre weight of `GL_n(F_{p^{f0}})`: one weakly decreasing tuple per embedding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SerreWeight {
    pub a: Vec<Vec<u32>>,
}

impl std::fmt::Display for SerreWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .a
            .iter()
            .map(|t| {
                let s: Vec<String> = t.iter().map(u32::to_string).collect();
                format!("({})", s.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SerreWeights {
    pub weights: Vec<SerreWeight>,
    pub semisimple_classes: usize,
}

impl SerreWeights {
    pub fn count_matches(&self) -> bool {
        self.weights.len() == self.semisimple_classes
    }
}

fn tuples(n: usize, p: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut diffs = vec![0u32; n];
    loop {
        let mut t = vec![0u32; n];
        let mut acc = 0;
        for i in (0..n).rev() {
            acc += diffs[i];
            t[i] = acc;
        }
        out.push(t);
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return out;
            }
            diffs[k] += 1;
            if diffs[k] < p {
                break;
            }
            diffs[k] = 0;
            k += 1;
        }
    }
}

pub fn serre_weights(n: u32, p: u32, f0: u32) -> Result<SerreWeights> {
    if !is_prime(p as u64) {
        return domain(format!("{p} is not prime"));
    }
    if n == 0 || f0 == 0 {
        return domain("n and f0 must be positive");
    }
    let total = (p as u64)
        .checked_pow(n * f0)
        .filter(|&t| t <= 1_000_000)
        .ok_or_else(|| Error::Config(format!("p^(n·f0) = {p}^{} weights is too many", n * f0)))?;
    let per = tuples(n as usize, p);
    let mut weights: Vec<SerreWeight> = vec![SerreWeight { a: Vec::new() }];
    for _ in 0..f0 {
        weights = weights
            .into_iter()
            .flat_map(|w| {
                per.iter().map(move |t| {
                    let mut a = w.a.clone();
                    a.push(t.clone());
                    SerreWeight { a }
                })
            })
            .collect();
    }
    debug_assert_eq!(weights.len() as u64, total);
    weights.retain(|w| !w.a.iter().all(|t| t[n as usize - 1] == p - 1));
    let ctx = GroupContext::get(n, (p as u64).pow(f0))?;
    Ok(SerreWeights {
        weights,
        semisimple_classes: ctx.semisimple_indices().len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TraceSide {
    Gl,
    D,
}

impl std::str::FromStr for TraceSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(TraceSide::Gl),
            "d" => Ok(TraceSide::D),
            _ => domain(format!("unknown side {s:?}")),
        }
    }
}

/// Traces at the elements generating `F_{q^{d0}}`, keyed by discrete log in `F_{q^n}`.
pub fn trace_level_zero(
    n: u32,
    q: u64,
    side: TraceSide,
    d0: u32,
    e: i64,
) -> Result<BTreeMap<u64, Cyclotomic>> {
    if d0 == 0 || n % d0 != 0 {
        return domain(format!("d0 = {d0} does not divide n = {n}"));
    }
    let ctx = GroupContext::get(n, q)?;
    let chi = MultChar::new(q, n, e)?;
    let f = TorusClassFunction::from_char(&chi);
    let sign = if (n + n / d0) % 2 == 0 { 1 } else { -1 };
    let dim = torus_index_p_prime(n, q, d0)? as i64;
    Ok((0..f.modulus())
        .filter(|&j| ctx.degree_of_dlog(j) == d0)
        .map(|j| {
            let v = match side {
                TraceSide::D => f.value(j).clone(),
                TraceSide::Gl => galois_sum(&f, j, d0).scale_int(sign * dim),
            };
            (j, v)
        })
        .collect())
}

/// The `GL` trace agrees with `(-1)^{n+1} R_w(χ_e)` at each generator's class, and `jl_p`
/// vanishes on semisimple classes that the torus does not meet.
pub fn trace_check(n: u32, q: u64, d0: u32, e: i64) -> Result<bool> {
    let ctx = GroupContext::get(n, q)?;
    let spec = CoxeterChar::from_exponent(n, q, e)?;
    let gl = trace_level_zero(n, q, TraceSide::Gl, d0, e)?;
    for (j, v) in &gl {
        let c = ctx.class_of_torus_dlog(*j);
        if rw_semisimple(&spec, &c)?.scale_int(spec.sign()) != *v {
            return Ok(false);
        }
    }
    let jl = jl_p(&ctx, &TorusClassFunction::from_char(&spec.chi()))?;
    let off_torus = ctx
        .semisimple_indices()
        .into_iter()
        .filter(|&i| ctx.classes()[i].len() > 1)
        .all(|i| jl.value(i).is_zero());
    Ok(off_torus)
}
