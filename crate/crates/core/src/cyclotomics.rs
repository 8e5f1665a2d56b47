//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! An element is stored in the power basis `{ζ_N^i : 0 ≤ i < φ(N)}`, i.e. as a polynomial
//! reduced modulo the `N`-th cyclotomic polynomial, with `N` the smallest conductor of a
//! cyclotomic field containing the element. Every operation re-establishes both conditions, so
//! two elements are equal exactly when their representations are equal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::arith::{ext_gcd, factorize, gcd, lcm};
use crate::{domain, Result};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Element of a cyclotomic number field in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: BTreeMap<u64, Rational>,
}

fn cyclotomic_poly_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = cyclotomic_poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = div_monic(&num, &phi_d);
        }
    }
    let arc = Arc::new(num);
    cyclotomic_poly_cache()
        .lock()
        .unwrap()
        .insert(n, arc.clone());
    arc
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Reduces a dense vector of coefficients of `ζ_n^i` (`0 ≤ i < n`) modulo `Φ_n`.
fn reduce_dense(n: u64, mut dense: Vec<Rational>) -> BTreeMap<u64, Rational> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    for i in (deg..dense.len()).rev() {
        if dense[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut dense[i], Rational::zero());
        for (j, &a) in phi.iter().enumerate().take(deg) {
            if a != 0 {
                let t = &c * Rational::from_integer(BigInt::from(a));
                dense[i - deg + j] -= t;
            }
        }
    }
    dense
        .into_iter()
        .take(deg)
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as u64, c))
        .collect()
}

/// Brings a reduced element of `Q(ζ_n)` to its minimal conductor.
fn canonicalize(mut n: u64, mut coeffs: BTreeMap<u64, Rational>) -> Cyclotomic {
    'outer: loop {
        if coeffs.is_empty() {
            return Cyclotomic::zero();
        }
        if n == 1 {
            break;
        }
        for (p, k) in factorize(n) {
            if k >= 2 {
                // Φ_n(x) = Φ_{n/p}(x^p): the subfield is spanned by exponents divisible by p.
                if coeffs.keys().all(|e| e % p == 0) {
                    coeffs = coeffs.into_iter().map(|(e, c)| (e / p, c)).collect();
                    n /= p;
                    continue 'outer;
                }
            } else if let Some(sub) = descend_squarefree(n, p, &coeffs) {
                coeffs = sub;
                n /= p;
                continue 'outer;
            }
        }
        break;
    }
    Cyclotomic {
        conductor: n,
        coeffs,
    }
}

/// For `n = p·m` with `p ∤ m`, writes the element in the basis `ζ_p^s ⊗ Q(ζ_m)` and returns
/// its `Q(ζ_m)` coordinates when every `s ≥ 1` component vanishes.
fn descend_squarefree(
    n: u64,
    p: u64,
    coeffs: &BTreeMap<u64, Rational>,
) -> Option<BTreeMap<u64, Rational>> {
    let m = n / p;
    // u·m + v·p = 1, so i/n = i·u/p + i·v/m.
    let (_, u, v) = ext_gcd(m as i128, p as i128);
    let u = u.rem_euclid(p as i128) as u64;
    let v = v.rem_euclid(m as i128) as u64;
    let mut parts: Vec<Vec<Rational>> = vec![vec![Rational::zero(); m as usize]; p as usize];
    for (&i, c) in coeffs {
        let s = ((i as u128 * u as u128) % p as u128) as usize;
        let t = ((i as u128 * v as u128) % m as u128) as usize;
        parts[s][t] += c;
    }
    // ζ_p^{p-1} = -(1 + ζ_p + … + ζ_p^{p-2})
    let top = parts.pop().unwrap();
    for part in parts.iter_mut() {
        for (a, b) in part.iter_mut().zip(top.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
    let mut reduced = parts.into_iter().map(|d| reduce_dense(m, d));
    let base = reduced.next().unwrap();
    if reduced.all(|r| r.is_empty()) {
        Some(base)
    } else {
        None
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyclotomic {
            conductor: 1,
            coeffs,
        }
    }

    /// `ζ_n^k` in canonical form.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "root of unity of order 0");
        let e = k.rem_euclid(n as i64) as u64;
        let mut dense = vec![Rational::zero(); n as usize];
        dense[e as usize] = Rational::one();
        canonicalize(n, reduce_dense(n, dense))
    }

    /// `Σ_j mults[j] ζ_n^j` for integer multiplicities.
    pub fn from_root_multiplicities(n: u64, mults: &[i64]) -> Self {
        let mut dense = vec![Rational::zero(); n as usize];
        for (j, &m) in mults.iter().enumerate() {
            dense[j % n as usize] += Rational::from_integer(BigInt::from(m));
        }
        canonicalize(n, reduce_dense(n, dense))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Nonzero power-basis coefficients, exponent ascending.
    pub fn coefficients(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.conductor != 1 {
            return None;
        }
        Some(self.coeffs.get(&0).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    /// Dense vector of length `n`, coefficient of `ζ_n^i` at index `i` (not reduced).
    fn lift_dense(&self, n: u64) -> Vec<Rational> {
        debug_assert_eq!(n % self.conductor, 0);
        let step = n / self.conductor;
        let mut dense = vec![Rational::zero(); n as usize];
        for (e, c) in &self.coeffs {
            dense[(e * step) as usize] = c.clone();
        }
        dense
    }

    /// Coordinates in the power basis of `Q(ζ_n)`, which must contain the element.
    pub fn coordinates_in(&self, n: u64) -> Result<Vec<Rational>> {
        if n % self.conductor != 0 {
            return domain(format!(
                "element of conductor {} does not lie in Q(ζ_{n})",
                self.conductor
            ));
        }
        let deg = cyclotomic_polynomial(n).len() - 1;
        let red = reduce_dense(n, self.lift_dense(n));
        let mut out = vec![Rational::zero(); deg];
        for (e, c) in red {
            out[e as usize] = c;
        }
        Ok(out)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        if self.conductor == 1 && other.conductor == 1 {
            let a = self.to_rational().unwrap();
            let b = other.to_rational().unwrap();
            return Self::from_rational(if negate { a - b } else { a + b });
        }
        let n = lcm(self.conductor, other.conductor);
        let mut dense = self.lift_dense(n);
        let step = n / other.conductor;
        for (e, c) in &other.coeffs {
            let slot = &mut dense[(e * step) as usize];
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        canonicalize(n, reduce_dense(n, dense))
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.conductor == 1 {
            let r = other.to_rational().unwrap();
            return self.scale(&r);
        }
        if self.conductor == 1 {
            let r = self.to_rational().unwrap();
            return other.scale(&r);
        }
        let n = lcm(self.conductor, other.conductor);
        let sa = n / self.conductor;
        let sb = n / other.conductor;
        let mut dense = vec![Rational::zero(); n as usize];
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e = (ea * sa + eb * sb) % n;
                dense[e as usize] += ca * cb;
            }
        }
        canonicalize(n, reduce_dense(n, dense))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(k)))
    }

    /// The automorphism `ζ_N ↦ ζ_N^k`; `k = -1` is complex conjugation.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.conductor;
        if gcd(k.unsigned_abs() % n.max(1), n) != 1 && n != 1 {
            return domain(format!("Galois exponent {k} is not a unit modulo {n}"));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let k = k.rem_euclid(n as i64) as u64;
        let mut dense = vec![Rational::zero(); n as usize];
        for (e, c) in &self.coeffs {
            dense[((e * k) % n) as usize] += c;
        }
        Ok(canonicalize(n, reduce_dense(n, dense)))
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    /// Product of all Galois conjugates: a rational number.
    pub fn norm(&self) -> Rational {
        let n = self.conductor;
        let mut acc = Self::one();
        for k in 1..n.max(2) {
            if gcd(k, n) == 1 {
                acc = &acc * &self.galois(k as i64).unwrap();
            }
        }
        acc.to_rational().expect("field norm is rational")
    }

    /// Multiplicative inverse; the zero element signals a domain error.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return domain("division by zero in a cyclotomic field");
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let n = self.conductor;
        let mut others = Self::one();
        for k in 2..n {
            if gcd(k, n) == 1 {
                others = &others * &self.galois(k as i64).unwrap();
            }
        }
        let norm = (&others * self)
            .to_rational()
            .expect("field norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Image under `ζ_N ↦ exp(2πi/N)`, for diagnostics and tests.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.coeffs.iter().fold((0.0, 0.0), |(re, im), (e, c)| {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let a = 2.0 * std::f64::consts::PI * (*e as f64) / n;
            (re + v * a.cos(), im + v * a.sin())
        })
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Cyclotomic>) -> Self {
        let items: Vec<&Cyclotomic> = items.into_iter().collect();
        if items.is_empty() {
            return Self::zero();
        }
        let n = items.iter().fold(1, |acc, x| lcm(acc, x.conductor));
        if n == 1 {
            return Self::from_rational(
                items
                    .iter()
                    .fold(Rational::zero(), |acc, x| acc + x.to_rational().unwrap()),
            );
        }
        let mut dense = vec![Rational::zero(); n as usize];
        for x in items {
            let step = n / x.conductor;
            for (e, c) in &x.coeffs {
                dense[(e * step) as usize] += c;
            }
        }
        canonicalize(n, reduce_dense(n, dense))
    }
}

/// The five field operations, as one entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

pub fn field_op(a: &Cyclotomic, b: &Cyclotomic, op: FieldOp) -> Result<Cyclotomic> {
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.try_div(b)?,
        FieldOp::Neg => -a,
    })
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.combine(rhs, false)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        self.combine(&rhs, false)
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.combine(rhs, false);
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.combine(rhs, true)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self.combine(&rhs, true)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.product(rhs)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        self.product(&rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(n, d))
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if *e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            if *e == 1 {
                write!(f, "E({})", self.conductor)?;
            } else {
                write!(f, "E({})^{}", self.conductor, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    conductor: u64,
    coeffs: Vec<(u64, String)>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (*e, fmt_rational(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        if w.conductor == 0 {
            return Err(de::Error::custom("conductor must be positive"));
        }
        let mut dense = vec![Rational::zero(); w.conductor as usize];
        for (e, c) in w.coeffs {
            let r = parse_rational(&c).map_err(de::Error::custom)?;
            dense[(e % w.conductor) as usize] += r;
        }
        Ok(canonicalize(w.conductor, reduce_dense(w.conductor, dense)))
    }
}

/// Convenience for building a rational from machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // first coefficient outside {-1,0,1}
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn root_of_unity_examples() {
        assert_eq!(z(1, 0), Cyclotomic::one());
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::from_int(-1));
        let zeta6 = z(6, 1);
        assert_eq!(zeta6.conductor(), 3);
        assert_eq!(zeta6, &Cyclotomic::one() + &z(3, 1));
        assert_eq!(z(4, 2), Cyclotomic::from_int(-1));
        assert_eq!(z(2, 1).conductor(), 1);
    }

    #[test]
    fn field_op_examples() {
        let i = z(4, 1);
        let one = Cyclotomic::one();
        assert_eq!(&(&one + &i) * &(&one - &i), Cyclotomic::from_int(2));
        let s = Cyclotomic::sum(&[z(8, 1), z(8, 3), z(8, 5), z(8, 7)]);
        assert!(s.is_zero());
        assert_eq!(
            field_op(&z(3, 1), &z(3, 1), FieldOp::Div).unwrap(),
            Cyclotomic::one()
        );
        assert!(matches!(
            field_op(&one, &Cyclotomic::zero(), FieldOp::Div),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn galois_examples() {
        assert_eq!(z(3, 1).galois(2).unwrap(), z(3, 2));
        assert_eq!(z(8, 1).galois(-1).unwrap(), z(8, 7));
        assert_eq!(Cyclotomic::from_int(5).galois(2).unwrap(), Cyclotomic::from_int(5));
        assert!(z(8, 1).galois(2).is_err());
    }

    #[test]
    fn conductor_descends_through_subfields() {
        // sqrt(-3) = ζ_3 - ζ_3^2 lives in Q(ζ_3) even when built from ζ_12.
        let s = &z(12, 4) - &z(12, 8);
        assert_eq!(s.conductor(), 3);
        // sqrt(2) = ζ_8 + ζ_8^7
        let r2 = &z(8, 1) + &z(8, 7);
        assert_eq!(r2.conductor(), 8);
        assert_eq!(&r2 * &r2, Cyclotomic::from_int(2));
        // sqrt(5) from fifth roots of unity, mixed with a 3rd root cancelled out
        let g = &(&z(5, 1) - &z(5, 2)) - &(&z(5, 3) - &z(5, 4));
        let mixed = &(&g + &z(15, 5)) - &z(3, 1);
        assert_eq!(mixed.conductor(), 5);
    }

    #[test]
    fn inverse_and_norm() {
        let x = &Cyclotomic::from_int(2) + &z(7, 3);
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Cyclotomic::one());
        let n = x.norm();
        assert!(n.is_integer());
    }

    #[test]
    fn serde_round_trip() {
        let x = &z(8, 3).scale(&rat(-3, 4)) + &Cyclotomic::from_int(7);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"conductor":8,"coeffs":[[0,"7/1"],[3,"-3/4"]]}"#);
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        let back: Cyclotomic =
            serde_json::from_str(r#"{"conductor":6,"coeffs":[[1,"1"]]}"#).unwrap();
        assert_eq!(back, z(6, 1));
    }

    #[test]
    fn display() {
        assert_eq!(z(8, 3).to_string(), "E(8)^3");
        assert_eq!((&Cyclotomic::from_int(1) - &z(4, 1)).to_string(), "1 - E(4)");
    }
}
