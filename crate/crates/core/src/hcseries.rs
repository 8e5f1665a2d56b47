//! Harish-Chandra series over a simple cuspidal support `(GL_m^r, π_0^{⊗r})`.
//!
//! Everything here is computed inside the oracle: the cuspidal `π_0` is an oracle row of
//! `GL_m(F_q)`, the generalized Steinberg characters are picked out of full parabolic
//! inductions by their Gelfand–Graev pairing, and the series members `σ_P` are peeled off the
//! inductions `π_P` using the Kostka matrix as the expected multiplicity pattern.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::classfun::ClassFunction;
use crate::cyclotomics::Cyclotomic;
use crate::dlcox::{cuspidal, CoxeterChar};
use crate::ffield::MultChar;
use crate::glnq::GroupContext;
use crate::oracle::{self, enumerate_group_and_classes, gelfand_graev, CharTable};
use crate::partitions::{kostka_matrix, partitions, KostkaMatrix, Partition};
use crate::{domain, Error, Result};

/// `r` copies of a cuspidal `π_m` of `GL_m(F_q)`, `n = m·r`.
#[derive(Clone)]
pub struct SimpleSupport {
    ctx: Arc<GroupContext>,
    theta: MultChar,
    r: u32,
}

impl std::fmt::Debug for SimpleSupport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SimpleSupport({:?}, m = {}, θ_m = χ_{}, r = {})",
            self.ctx, self.theta.n, self.theta.e, self.r
        )
    }
}

impl SimpleSupport {
    pub fn new(ctx: Arc<GroupContext>, m: u32, e_m: i64) -> Result<Self> {
        if m == 0 || ctx.n() % m != 0 {
            return domain(format!("m = {m} does not divide n = {}", ctx.n()));
        }
        let theta = MultChar::new(ctx.q(), m, e_m)?;
        if !theta.is_regular() {
            return domain(format!("χ_{e_m} of F_{{{}^{m}}}^× is not regular", ctx.q()));
        }
        let r = ctx.n() / m;
        Ok(SimpleSupport { ctx, theta, r })
    }

    /// The trivial character of the diagonal torus: the unipotent series.
    pub fn unipotent(ctx: Arc<GroupContext>) -> Self {
        let theta = MultChar::trivial(ctx.q(), 1);
        let r = ctx.n();
        SimpleSupport { ctx, theta, r }
    }

    pub fn ctx(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn m(&self) -> u32 {
        self.theta.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn theta(&self) -> MultChar {
        self.theta
    }

    /// Smallest exponent in the Frobenius orbit of `θ_m`.
    pub fn label(&self) -> u64 {
        *self.theta.orbit(1).expect("1 divides m").orbit.first().unwrap()
    }

    fn key(&self, i: u32) -> (u64, u32, u64, u32) {
        (self.ctx.q(), self.m(), self.label(), i)
    }
}

/// A series member `σ_P`.
#[derive(Debug, Clone)]
pub struct HCLabel {
    pub support: SimpleSupport,
    pub partition: Partition,
}

/// Virtual character as integer coefficients over the rows of an oracle table.
#[derive(Clone)]
pub struct GrothElt {
    table: Arc<CharTable>,
    coeffs: BTreeMap<usize, i64>,
}

impl std::fmt::Debug for GrothElt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(i, c)| format!("{c}·X{}", i + 1))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl GrothElt {
    pub fn new(table: Arc<CharTable>, coeffs: BTreeMap<usize, i64>) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| *c != 0).collect();
        GrothElt { table, coeffs }
    }

    pub fn coefficients(&self) -> &BTreeMap<usize, i64> {
        &self.coeffs
    }

    pub fn table(&self) -> &Arc<CharTable> {
        &self.table
    }

    pub fn to_class_function(&self) -> Result<ClassFunction> {
        let terms: Vec<(i64, &ClassFunction)> = self
            .coeffs
            .iter()
            .map(|(&i, &c)| (c, self.table.row(i)))
            .collect();
        if terms.is_empty() {
            return Ok(ClassFunction::zero(self.table.ctx().clone(), crate::Support::All));
        }
        ClassFunction::linear_combination(&terms)
    }

    pub fn degree(&self) -> i64 {
        self.coeffs
            .iter()
            .map(|(&i, &c)| c * self.table.degrees()[i] as i64)
            .sum()
    }
}

type StKey = (u64, u32, u64, u32);

fn st_cache() -> &'static Mutex<HashMap<StKey, ClassFunction>> {
    static CACHE: OnceLock<Mutex<HashMap<StKey, ClassFunction>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `π_0`: the row of the `GL_m(F_q)` table equal to the cuspidal attached to `θ_m`.
pub fn base_cuspidal(support: &SimpleSupport) -> Result<ClassFunction> {
    let ctx_m = GroupContext::get(support.m(), support.ctx.q())?;
    let g = enumerate_group_and_classes(&ctx_m)?;
    let table = oracle::character_table(&g)?;
    let target = cuspidal(&CoxeterChar::new(ctx_m, support.theta)?)?;
    match table.matching_rows(&target)[..] {
        [i] => Ok(table.row(i).clone()),
        ref rows => Err(Error::Inconsistent(format!(
            "{} table rows match the cuspidal of {support:?}",
            rows.len()
        ))),
    }
}

/// `St(π_0, i)` on `GL_{mi}(F_q)`.
pub fn st_of_level(support: &SimpleSupport, i: u32) -> Result<ClassFunction> {
    if i == 0 || i > support.r {
        return domain(format!("level {i} outside 1..={}", support.r));
    }
    let key = support.key(i);
    if let Some(f) = st_cache().lock().unwrap().get(&key) {
        return Ok(f.clone());
    }
    let pi0 = base_cuspidal(support)?;
    let f = if i == 1 {
        pi0
    } else {
        let ctx = GroupContext::get(support.m() * i, support.ctx.q())?;
        let g = enumerate_group_and_classes(&ctx)?;
        let table = oracle::character_table(&g)?;
        let composition = vec![support.m(); i as usize];
        let factors = vec![pi0; i as usize];
        let ind = oracle::parabolic_induction(&g, &composition, &factors)?;
        let gg = gelfand_graev(&g)?;
        let mult = table.multiplicities(&ind)?;
        let candidates: Vec<usize> = (0..table.len())
            .filter(|&j| mult[j] > 0 && !table.row(j).inner_product(&gg).unwrap().is_zero())
            .collect();
        match candidates[..] {
            [j] => table.row(j).clone(),
            _ => {
                return Err(Error::Inconsistent(format!(
                    "{} nondegenerate constituents in π_0^×{i} for {support:?}",
                    candidates.len()
                )))
            }
        }
    };
    st_cache().lock().unwrap().insert(key, f.clone());
    Ok(f)
}

/// `St(π_0, r)` on the full group.
pub fn st_character(support: &SimpleSupport) -> Result<ClassFunction> {
    for i in 1..support.r {
        st_of_level(support, i)?;
    }
    st_of_level(support, support.r)
}

/// `π_P(π_0)`: parabolic induction of `⊠_i St(π_0, P_i)`.
pub fn pi_p(support: &SimpleSupport, p: &Partition) -> Result<ClassFunction> {
    if p.degree() != support.r {
        return domain(format!("{p} is not a partition of r = {}", support.r));
    }
    if p.len() == 1 {
        return st_character(support);
    }
    let factors = p
        .parts()
        .iter()
        .map(|&i| st_of_level(support, i))
        .collect::<Result<Vec<_>>>()?;
    let composition: Vec<u32> = p.parts().iter().map(|&i| i * support.m()).collect();
    let g = enumerate_group_and_classes(&support.ctx)?;
    oracle::parabolic_induction(&g, &composition, &factors)
}

/// The series with its induced characters, members and dual basis.
#[derive(Clone)]
pub struct SigmaFamily {
    pub support: SimpleSupport,
    pub kostka: KostkaMatrix,
    pub table: Arc<CharTable>,
    /// `π_{P'}` in partition order.
    pub pi: Vec<ClassFunction>,
    /// `mult[P'][j]`: multiplicity of table row `j` in `π_{P'}`.
    pub mult: Vec<Vec<i64>>,
    /// Table row of `σ_P`.
    pub sigma_rows: Vec<usize>,
    pub sigma_plus: Vec<GrothElt>,
}

impl std::fmt::Debug for SigmaFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SigmaFamily({:?}, σ rows {:?})", self.support, self.sigma_rows)
    }
}

impl SigmaFamily {
    pub fn partitions(&self) -> &[Partition] {
        &self.kostka.partitions
    }

    fn index(&self, p: &Partition) -> Result<usize> {
        self.kostka
            .index_of(p)
            .ok_or_else(|| Error::Domain(format!("{p} is not a partition of {}", self.support.r)))
    }

    pub fn label(&self, p: &Partition) -> HCLabel {
        HCLabel {
            support: self.support.clone(),
            partition: p.clone(),
        }
    }

    pub fn sigma(&self, p: &Partition) -> Result<&ClassFunction> {
        Ok(self.table.row(self.sigma_rows[self.index(p)?]))
    }

    pub fn sigma_plus(&self, p: &Partition) -> Result<&GrothElt> {
        Ok(&self.sigma_plus[self.index(p)?])
    }

    /// `mult(σ_P in π_{P'})`, rows `P`, columns `P'`.
    pub fn decomposition_matrix(&self) -> Vec<Vec<i64>> {
        self.sigma_rows
            .iter()
            .map(|&j| self.mult.iter().map(|m| m[j]).collect())
            .collect()
    }

    /// `(σ⁺_P, π_{P'})`, rows `P`, columns `P'`.
    pub fn dual_pairings(&self) -> Result<Vec<Vec<Cyclotomic>>> {
        self.sigma_plus
            .iter()
            .map(|s| {
                let f = s.to_class_function()?;
                self.pi.iter().map(|pi| f.inner_product(pi)).collect()
            })
            .collect()
    }

    pub fn decomposition_csv(&self) -> String {
        let parts = self.partitions();
        let mut out = String::from("sigma");
        for p in parts {
            out.push_str(&format!(",\"pi{p}\""));
        }
        out.push('\n');
        for (p, row) in parts.iter().zip(self.decomposition_matrix()) {
            out.push_str(&format!("\"sigma{p}\""));
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Series members and dual basis; fails if the induced characters do not follow the Kostka
/// multiplicity pattern.
pub fn sigma_family(support: &SimpleSupport) -> Result<SigmaFamily> {
    let r = support.r;
    let kostka = kostka_matrix(r)?;
    let parts = partitions(r);
    let g = enumerate_group_and_classes(&support.ctx)?;
    let table = oracle::character_table(&g)?;
    st_character(support)?;
    let pi = parts
        .par_iter()
        .map(|p| pi_p(support, p))
        .collect::<Result<Vec<_>>>()?;
    let mult = pi
        .par_iter()
        .map(|f| table.multiplicities(f))
        .collect::<Result<Vec<_>>>()?;
    let mut sigma_rows: Vec<usize> = Vec::with_capacity(parts.len());
    for (b, p_prime) in parts.iter().enumerate() {
        let mut residual = mult[b].clone();
        for (a, &row) in sigma_rows.iter().enumerate() {
            residual[row] -= kostka.k[a][b];
        }
        let support_rows: Vec<usize> = (0..residual.len()).filter(|&j| residual[j] != 0).collect();
        match support_rows[..] {
            [j] if residual[j] == 1 && !sigma_rows.contains(&j) => sigma_rows.push(j),
            _ => {
                return Err(Error::Inconsistent(format!(
                    "π_{p_prime} does not follow the Kostka pattern for {support:?}"
                )))
            }
        }
    }
    for (a, &row) in sigma_rows.iter().enumerate() {
        for b in 0..parts.len() {
            if mult[b][row] != kostka.k[a][b] {
                return Err(Error::Inconsistent(format!(
                    "mult(σ_{}, π_{}) = {} but K = {}",
                    parts[a], parts[b], mult[b][row], kostka.k[a][b]
                )));
            }
        }
    }
    let sigma_plus: Vec<GrothElt> = (0..parts.len())
        .map(|a| {
            let coeffs = sigma_rows
                .iter()
                .enumerate()
                .map(|(c, &row)| (row, kostka.k_inv[a][c]))
                .collect();
            GrothElt::new(table.clone(), coeffs)
        })
        .collect();
    let fam = SigmaFamily {
        support: support.clone(),
        kostka,
        table,
        pi,
        mult,
        sigma_rows,
        sigma_plus,
    };
    let pairings = fam.dual_pairings()?;
    for (a, row) in pairings.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            if *v != Cyclotomic::from_int(i64::from(a == b)) {
                return Err(Error::Inconsistent(format!(
                    "(σ⁺_{}, π_{}) = {v}",
                    parts[a], parts[b]
                )));
            }
        }
    }
    Ok(fam)
}

/// `br_ℓ(σ_P) = Σ K_{P,P'} br_ℓ(σ⁺_{P'})` and `br_ℓ(σ⁺_P) = Σ K⁻¹_{P,P'} br_ℓ(σ_{P'})` on
/// `ℓ`-regular classes.
pub fn groth_relations_check(support: &SimpleSupport, ell: u64) -> Result<bool> {
    let fam = sigma_family(support)?;
    let n = fam.partitions().len();
    let sigma = (0..n)
        .map(|a| fam.table.row(fam.sigma_rows[a]).brauer_restrict(ell))
        .collect::<Result<Vec<_>>>()?;
    let plus = fam
        .sigma_plus
        .iter()
        .map(|s| s.to_class_function()?.brauer_restrict(ell))
        .collect::<Result<Vec<_>>>()?;
    for a in 0..n {
        let terms: Vec<(i64, &ClassFunction)> =
            (0..n).map(|b| (fam.kostka.k[a][b], &plus[b])).collect();
        if !ClassFunction::linear_combination(&terms)?.equals(&sigma[a]) {
            return Ok(false);
        }
        let terms: Vec<(i64, &ClassFunction)> =
            (0..n).map(|b| (fam.kostka.k_inv[a][b], &sigma[b])).collect();
        if !ClassFunction::linear_combination(&terms)?.equals(&plus[a]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dlcox::sigma_plus_min;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn unipotent_series_gl3_f2() {
        let ctx = GroupContext::get(3, 2).unwrap();
        let s = SimpleSupport::unipotent(ctx.clone());
        assert_eq!(st_character(&s).unwrap().degree(), Cyclotomic::from_int(8));
        assert_eq!(pi_p(&s, &p(&[1, 1, 1])).unwrap().degree(), Cyclotomic::from_int(21));
        assert_eq!(pi_p(&s, &p(&[2, 1])).unwrap().degree(), Cyclotomic::from_int(14));
        let fam = sigma_family(&s).unwrap();
        let dims: Vec<u64> = fam.sigma_rows.iter().map(|&j| fam.table.degrees()[j]).collect();
        assert_eq!(dims, vec![8, 6, 1]);
        let plus = fam.sigma_plus(&p(&[2, 1])).unwrap();
        assert_eq!(plus.degree(), 6 - 2);
        let top = fam.sigma_plus(&p(&[3])).unwrap().to_class_function().unwrap();
        let analytic = sigma_plus_min(&ctx, &MultChar::trivial(2, 1)).unwrap();
        assert!(top.equals(&analytic));
        assert!(groth_relations_check(&s, 2).unwrap());
    }

    #[test]
    fn gl2_f3_two_regular() {
        let ctx = GroupContext::get(2, 3).unwrap();
        let s = SimpleSupport::unipotent(ctx);
        assert_eq!(st_character(&s).unwrap().degree(), Cyclotomic::from_int(3));
        assert!(groth_relations_check(&s, 2).unwrap());
    }

    #[test]
    fn rejects_bad_support() {
        let ctx = GroupContext::get(3, 2).unwrap();
        assert!(SimpleSupport::new(ctx.clone(), 2, 1).is_err());
        let ctx = GroupContext::get(2, 3).unwrap();
        assert!(SimpleSupport::new(ctx, 2, 4).is_err());
    }
}
