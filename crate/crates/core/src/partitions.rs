//! Partitions, the reversed dominance order, Kostka numbers, symmetric-group characters and
//! Green polynomials.
//!
//! Partitions of `r` are listed in reverse-lexicographic order, `(r)` first and `(1^r)` last;
//! every matrix indexed by partitions uses this order.
//!
//! The order `P ≤ P'` used throughout the crate is the *reverse* of dominance: `P ≤ P'` iff
//! `P` dominates `P'` classically. So `(r)` is the minimum and `(1^r)` the maximum.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomics::Rational;
use crate::linalg;
use crate::{domain, Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&x| x == 0) {
            return domain("partition parts must be positive");
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("parts {parts:?} are not weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(r)`, the minimum of the order.
    pub fn single_row(r: u32) -> Self {
        Partition(if r == 0 { vec![] } else { vec![r] })
    }

    /// `(1^r)`, the maximum of the order.
    pub fn single_column(r: u32) -> Self {
        Partition(vec![1; r as usize])
    }

    /// Builds a partition from its multiplicity function `i ↦ P(i)`.
    pub fn from_multiplicities(mults: &[(u32, u32)]) -> Self {
        Self::from_parts(
            mults
                .iter()
                .flat_map(|&(i, m)| std::iter::repeat(i).take(m as usize))
                .collect(),
        )
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `P(i)`: the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.0.iter().filter(|&&x| x == i).count() as u32
    }

    /// `(i, P(i))` for each distinct part, ascending.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &x in self.0.iter().rev() {
            match out.last_mut() {
                Some((v, m)) if *v == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Self {
        let Some(&first) = self.0.first() else {
            return Partition(vec![]);
        };
        Partition(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&x| x >= i).count() as u32)
                .collect(),
        )
    }

    /// `n(λ) = Σ (i-1)·λ_i`.
    pub fn n_statistic(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &x)| i as u64 * x as u64)
            .sum()
    }

    /// `Σ_k min(λ_k, i)`: the kernel dimension of the `i`-th power of a nilpotent of this type.
    pub fn kernel_dim(&self, i: u32) -> u32 {
        self.0.iter().map(|&x| x.min(i)).sum()
    }

    pub fn partial_sums(&self) -> Vec<u32> {
        self.0
            .iter()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    /// `z_λ = Π i^{m_i} m_i!`, the centralizer order of cycle type `λ` in `S_n`.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (i, m)| {
                let mut t = acc;
                for k in 1..=m {
                    t *= BigInt::from(i) * BigInt::from(k);
                }
                t
            })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Domain(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `r`, reverse-lexicographic: `(r)` first, `(1^r)` last.
pub fn partitions(r: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for x in (1..=rem.min(max)).rev() {
            cur.push(x);
            rec(rem - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, &mut Vec::new(), &mut out);
    out
}

/// Classical dominance: `a ⊵ b`.
pub fn dominates(a: &Partition, b: &Partition) -> bool {
    if a.degree() != b.degree() {
        return false;
    }
    let sa = a.partial_sums();
    let sb = b.partial_sums();
    let len = sa.len().max(sb.len());
    (0..len).all(|i| {
        let x = sa.get(i).or(sa.last()).copied().unwrap_or(0);
        let y = sb.get(i).or(sb.last()).copied().unwrap_or(0);
        x >= y
    })
}

/// The crate's order: `leq(P, P')` iff `P` dominates `P'`.
pub fn leq(p: &Partition, p_prime: &Partition) -> bool {
    dominates(p, p_prime)
}

/// Partitions of `r` together with the comparator.
pub fn enumerate_and_order(r: u32) -> (Vec<Partition>, fn(&Partition, &Partition) -> bool) {
    (partitions(r), leq)
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
pub fn kostka_number(shape: &Partition, content: &[u32]) -> u64 {
    fn rec(shape: &[u32], content: &[u32], memo: &mut HashMap<(Vec<u32>, usize), u64>) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return u64::from(shape.iter().all(|&x| x == 0));
        };
        let key = (shape.to_vec(), content.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        // remove a horizontal strip of size `last`: 0 ≤ shape_i - nu_i ≤ shape_i - shape_{i+1}
        let mut total = 0;
        let mut nu = shape.to_vec();
        strips(shape, 0, last, &mut nu, &mut |nu| total += rec(nu, rest, memo));
        memo.insert(key, total);
        total
    }
    fn strips(shape: &[u32], i: usize, left: u32, nu: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if i == shape.len() {
            if left == 0 {
                f(nu);
            }
            return;
        }
        let next = shape.get(i + 1).copied().unwrap_or(0);
        let room = shape[i] - next;
        for take in 0..=room.min(left) {
            nu[i] = shape[i] - take;
            strips(shape, i + 1, left - take, nu, f);
        }
        nu[i] = shape[i];
    }
    if shape.degree() != content.iter().sum::<u32>() {
        return 0;
    }
    let content: Vec<u32> = content.iter().copied().filter(|&c| c > 0).collect();
    rec(shape.parts(), &content, &mut HashMap::new())
}

/// `K` and its exact inverse, rows and columns in [`partitions`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostkaMatrix {
    pub partitions: Vec<Partition>,
    pub k: Vec<Vec<i64>>,
    pub k_inv: Vec<Vec<i64>>,
}

impl KostkaMatrix {
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|x| x == p)
    }

    pub fn get(&self, p: &Partition, p_prime: &Partition) -> i64 {
        self.k[self.index_of(p).unwrap()][self.index_of(p_prime).unwrap()]
    }

    pub fn get_inv(&self, p: &Partition, p_prime: &Partition) -> i64 {
        self.k_inv[self.index_of(p).unwrap()][self.index_of(p_prime).unwrap()]
    }

    fn csv_of(&self, m: &[Vec<i64>]) -> String {
        let mut out = String::from("partition");
        for p in &self.partitions {
            out.push_str(&format!(",\"{p}\""));
        }
        out.push('\n');
        for (p, row) in self.partitions.iter().zip(m) {
            out.push_str(&format!("\"{p}\""));
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        self.csv_of(&self.k)
    }

    pub fn inverse_to_csv(&self) -> String {
        self.csv_of(&self.k_inv)
    }
}

pub fn kostka_matrix(r: u32) -> Result<KostkaMatrix> {
    if r == 0 {
        return domain("Kostka matrix of degree 0");
    }
    let parts = partitions(r);
    let k: Vec<Vec<i64>> = parts
        .iter()
        .map(|shape| {
            parts
                .iter()
                .map(|content| kostka_number(shape, content.parts()) as i64)
                .collect()
        })
        .collect();
    let k_inv = linalg::unitriangular_inverse(&k)?;
    Ok(KostkaMatrix {
        partitions: parts,
        k,
        k_inv,
    })
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule on beta-sets.
pub fn sn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.degree() != rho.degree() {
        return domain(format!(
            "{lambda} and {rho} have different degrees"
        ));
    }
    fn rec(beta: &mut Vec<u32>, rho: &[u32]) -> i64 {
        let Some((&k, rest)) = rho.split_first() else {
            return 1;
        };
        let mut total = 0;
        for idx in 0..beta.len() {
            let b = beta[idx];
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            beta[idx] = b - k;
            total += sign * rec(beta, rest);
            beta[idx] = b;
        }
        total
    }
    let l = lambda.len() as u32;
    let mut beta: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| x + l - 1 - i as u32)
        .collect();
    Ok(rec(&mut beta, rho.parts()))
}

/// Coefficient of `x^μ` in `p_ρ`: ways to distribute the parts of `ρ` into rows summing to `μ`.
fn power_to_monomial(rho: &Partition, mu: &Partition) -> i64 {
    fn rec(parts: &[u32], rows: &mut Vec<u32>) -> i64 {
        let Some((&k, rest)) = parts.split_first() else {
            return i64::from(rows.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for j in 0..rows.len() {
            if rows[j] >= k {
                rows[j] -= k;
                total += rec(rest, rows);
                rows[j] += k;
            }
        }
        total
    }
    rec(rho.parts(), &mut mu.parts().to_vec())
}

/// Transition coefficients `X^λ_ρ(t)` at a rational `t`, defined by
/// `p_ρ = Σ_λ X^λ_ρ(t) P_λ(x; t)`. Returned as `x[λ][ρ]` in [`partitions`] order.
pub fn hall_littlewood_transition(r: u32, t: &Rational) -> Result<Vec<Vec<Rational>>> {
    let parts = partitions(r);
    let np = parts.len();
    let lmat: Vec<Vec<Rational>> = parts
        .iter()
        .map(|rho| {
            parts
                .iter()
                .map(|mu| Rational::from_integer(BigInt::from(power_to_monomial(rho, mu))))
                .collect()
        })
        .collect();
    // m_μ = Σ_ρ (L^{-1})_{μρ} p_ρ
    let linv = linalg::rational_inverse(&lmat)
        .ok_or_else(|| Error::Inconsistent("power-sum transition is singular".into()))?;
    let zt: Vec<Rational> = parts
        .iter()
        .map(|rho| {
            let mut z = Rational::from_integer(rho.z());
            for &k in rho.parts() {
                let denom = Rational::one() - pow_rat(t, k);
                if denom.is_zero() {
                    return Err(Error::Domain(format!("t = {t} is a root of unity")));
                }
                z /= denom;
            }
            Ok(z)
        })
        .collect::<Result<_>>()?;
    let inner = |a: &[Rational], b: &[Rational]| -> Rational {
        a.iter()
            .zip(b)
            .zip(&zt)
            .fold(Rational::zero(), |acc, ((x, y), z)| acc + x * y * z)
    };
    // Gram–Schmidt from (1^r) upwards; reverse-lex extends dominance.
    let mut hl: Vec<Option<Vec<Rational>>> = vec![None; np];
    let mut norms: Vec<Option<Rational>> = vec![None; np];
    for li in (0..np).rev() {
        let mut v = linv[li].clone();
        for mj in (li + 1)..np {
            let pm = hl[mj].as_ref().unwrap();
            let c = inner(&linv[li], pm) / norms[mj].as_ref().unwrap();
            for (a, b) in v.iter_mut().zip(pm) {
                *a -= &c * b;
            }
        }
        let nv = inner(&v, &v);
        if nv.is_zero() {
            return Err(Error::Inconsistent("degenerate Hall–Littlewood norm".into()));
        }
        norms[li] = Some(nv);
        hl[li] = Some(v);
    }
    Ok((0..np)
        .map(|li| {
            let v = hl[li].as_ref().unwrap();
            let n = norms[li].as_ref().unwrap();
            (0..np).map(|ri| &zt[ri] * &v[ri] / n).collect()
        })
        .collect())
}

fn pow_rat(t: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * t)
}

type GreenKey = (u32, u64);

fn green_cache() -> &'static Mutex<HashMap<GreenKey, Arc<Vec<Vec<BigInt>>>>> {
    static CACHE: OnceLock<Mutex<HashMap<GreenKey, Arc<Vec<Vec<BigInt>>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All Green polynomial values `Q^λ_ρ(Q)` for partitions of `r`, as `table[λ][ρ]`.
pub fn green_table(r: u32, q: u64) -> Result<Arc<Vec<Vec<BigInt>>>> {
    if q < 2 {
        return domain("Green polynomials are evaluated at Q ≥ 2");
    }
    if let Some(t) = green_cache().lock().unwrap().get(&(r, q)) {
        return Ok(t.clone());
    }
    let parts = partitions(r);
    let t = Rational::new(BigInt::one(), BigInt::from(q));
    let x = hall_littlewood_transition(r, &t)?;
    let mut table = Vec::with_capacity(parts.len());
    for (lam, row) in parts.iter().zip(x) {
        let scale = BigInt::from(q).pow(lam.n_statistic() as u32);
        let mut out = Vec::with_capacity(row.len());
        for v in row {
            let val = v * Rational::from_integer(scale.clone());
            if !val.is_integer() {
                return Err(Error::Inconsistent(format!(
                    "Green polynomial value {val} for {lam} at Q = {q} is not an integer"
                )));
            }
            out.push(val.to_integer());
        }
        table.push(out);
    }
    let arc = Arc::new(table);
    green_cache().lock().unwrap().insert((r, q), arc.clone());
    Ok(arc)
}

/// `Q^λ_ρ(Q) = Q^{n(λ)} X^λ_ρ(1/Q)`.
pub fn green_polynomial(lambda: &Partition, rho: &Partition, q: u64) -> Result<BigInt> {
    if lambda.degree() != rho.degree() {
        return domain(format!("{lambda} and {rho} have different degrees"));
    }
    let r = lambda.degree();
    let parts = partitions(r);
    let li = parts.iter().position(|p| p == lambda).unwrap();
    let ri = parts.iter().position(|p| p == rho).unwrap();
    Ok(green_table(r, q)?[li][ri].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_and_order() {
        let (ps, le) = enumerate_and_order(3);
        assert_eq!(ps, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert!(le(&ps[0], &ps[1]) && le(&ps[1], &ps[2]));
        assert!(le(&p(&[3, 1]), &p(&[2, 2])));
        assert!(!le(&p(&[3, 3]), &p(&[4, 1, 1])) && !le(&p(&[4, 1, 1]), &p(&[3, 3])));
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(partitions(8).len(), 22);
    }

    #[test]
    fn partition_validation_and_parsing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("(3,1,1)".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!(p(&[3, 1, 1]).conjugate(), p(&[3, 1, 1]));
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
        assert_eq!(p(&[2, 2, 1]).multiplicities(), vec![(1, 1), (2, 2)]);
        assert_eq!(p(&[2, 1]).n_statistic(), 1);
    }

    #[test]
    fn kostka_examples() {
        let k2 = kostka_matrix(2).unwrap();
        assert_eq!(k2.k, vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(k2.k_inv[0], vec![1, -1]);
        let k3 = kostka_matrix(3).unwrap();
        assert_eq!(k3.get(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(k3.k_inv[0], vec![1, -1, 1]);
        assert_eq!(k3.k_inv[1], vec![0, 1, -2]);
        assert!(k3.to_csv().starts_with("partition,\"(3)\",\"(2,1)\",\"(1,1,1)\"\n"));
    }

    #[test]
    fn sn_character_examples() {
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        for k in 1..=7 {
            let sign = sn_character(&Partition::single_column(k), &Partition::single_row(k));
            assert_eq!(sign.unwrap(), if k % 2 == 1 { 1 } else { -1 });
        }
        for rho in partitions(5) {
            assert_eq!(sn_character(&p(&[5]), &rho).unwrap(), 1);
        }
        assert!(sn_character(&p(&[2]), &p(&[3])).is_err());
        // dimension of (3,2) is 5
        assert_eq!(sn_character(&p(&[3, 2]), &p(&[1, 1, 1, 1, 1])).unwrap(), 5);
    }

    #[test]
    fn green_examples() {
        for q in [2u64, 3, 4, 5] {
            let q_i = BigInt::from(q);
            assert_eq!(green_polynomial(&p(&[1, 1]), &p(&[2]), q).unwrap(), BigInt::one() - &q_i);
            assert_eq!(green_polynomial(&p(&[2]), &p(&[2]), q).unwrap(), BigInt::one());
            // at the identity class the Green function is the degree of Ind_B 1 ... for (1^n)
            // cycle type, Q^{(1^2)}_{(1^2)} = q + 1
            assert_eq!(
                green_polynomial(&p(&[1, 1]), &p(&[1, 1]), q).unwrap(),
                &q_i + BigInt::one()
            );
        }
        assert!(green_polynomial(&p(&[2]), &p(&[1]), 3).is_err());
    }
}
