//! Conjugacy classes of `GL_n(F_q)`.
//!
//! A class is a finite map `f ↦ λ_f` from monic irreducible polynomials `f ≠ x` over `F_q` to
//! partitions, with `Σ deg(f)·|λ_f| = n`. The class is semisimple iff every `λ_f` is a single
//! column `(1^m)`.
//!
//! Field elements of `F_q` are encoded as in [`SmallField`]: packed coefficient vectors over
//! `F_p` in the Conway basis, so for prime `q` the code is the residue itself.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::arith::gcd;
use crate::ffield::{self, FieldTower, FqElem, SmallField};
use crate::partitions::{self, Partition};
use crate::{domain, Error, Result};

/// Monic irreducible polynomial over `F_q`, `f ≠ x`.
#[derive(Clone)]
pub struct IrrPoly {
    degree: u32,
    coeffs: Vec<u32>,
    root_dlog: u64,
    p: u32,
}

impl IrrPoly {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Ascending coefficients in the `F_q` encoding, ending in the leading `1`.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Smallest discrete log among the roots, inside `F_{q^d}`.
    pub fn root_dlog(&self) -> u64 {
        self.root_dlog
    }

    fn fmt_coeff(&self, c: u32) -> String {
        if c < self.p {
            return c.to_string();
        }
        let mut terms = Vec::new();
        let mut k = 0;
        let mut x = c;
        while x > 0 {
            let a = x % self.p;
            if a != 0 {
                terms.push(match (k, a) {
                    (0, a) => a.to_string(),
                    (1, 1) => "a".to_string(),
                    (1, a) => format!("{a}a"),
                    (k, 1) => format!("a^{k}"),
                    (k, a) => format!("{a}a^{k}"),
                });
            }
            x /= self.p;
            k += 1;
        }
        terms.reverse();
        format!("({})", terms.join("+"))
    }
}

impl PartialEq for IrrPoly {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.coeffs == other.coeffs
    }
}

impl Eq for IrrPoly {}

impl std::hash::Hash for IrrPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.coeffs.hash(state);
    }
}

impl PartialOrd for IrrPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IrrPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree, &self.coeffs).cmp(&(other.degree, &other.coeffs))
    }
}

impl fmt::Display for IrrPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && k > 0 {
                String::new()
            } else {
                self.fmt_coeff(c)
            };
            terms.push(match k {
                0 => coeff,
                1 => format!("{coeff}x"),
                k => format!("{coeff}x^{k}"),
            });
        }
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for IrrPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A conjugacy class `{f ↦ λ_f}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GLnClassData(BTreeMap<IrrPoly, Partition>);

impl GLnClassData {
    pub fn new(map: BTreeMap<IrrPoly, Partition>) -> Self {
        GLnClassData(map)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&IrrPoly, &Partition)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, f: &IrrPoly) -> Option<&Partition> {
        self.0.get(f)
    }

    /// `Σ deg(f)·|λ_f|`.
    pub fn dimension(&self) -> u32 {
        self.0.iter().map(|(f, l)| f.degree * l.degree()).sum()
    }

    pub fn is_semisimple(&self) -> bool {
        self.0.values().all(|l| l.parts().iter().all(|&x| x == 1))
    }

    pub fn semisimple_part(&self) -> GLnClassData {
        GLnClassData(
            self.0
                .iter()
                .map(|(f, l)| (f.clone(), Partition::single_column(l.degree())))
                .collect(),
        )
    }

    /// The pair `(f, λ_f)` when the class has a single polynomial.
    pub fn single(&self) -> Option<(&IrrPoly, &Partition)> {
        if self.0.len() == 1 {
            self.0.iter().next()
        } else {
            None
        }
    }
}

impl fmt::Display for GLnClassData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (poly, part)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{poly} ↦ {part}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for GLnClassData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regularity {
    pub p_regular: bool,
    pub ell_regular: bool,
    pub semisimple_part: GLnClassData,
}

/// `GL_n(F_q)` together with its class list, in canonical order.
pub struct GroupContext {
    n: u32,
    q: u64,
    p: u32,
    d0: u32,
    tower: Arc<FieldTower>,
    field: SmallField,
    polys: Vec<Vec<IrrPoly>>,
    root_index: HashMap<(u32, u64), usize>,
    classes: Vec<GLnClassData>,
    index: HashMap<GLnClassData, usize>,
    centralizers: Vec<BigInt>,
    sizes: Vec<BigInt>,
    order: BigInt,
}

impl fmt::Debug for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GL_{}(F_{})", self.n, self.q)
    }
}

fn context_cache() -> &'static Mutex<HashMap<(u32, u64), Arc<GroupContext>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u64), Arc<GroupContext>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `|GL_m(F_Q)| = Q^{m(m-1)/2} Π_{i=1}^m (Q^i - 1)`.
pub fn gl_order(m: u32, big_q: u64) -> BigInt {
    let qb = BigInt::from(big_q);
    let mut acc = qb.pow(m * (m.saturating_sub(1)) / 2);
    for i in 1..=m {
        acc *= qb.pow(i) - BigInt::one();
    }
    acc
}

/// `a_λ(Q) = Q^{|λ|+2n(λ)} Π_i Π_{j=1}^{m_i(λ)} (1 - Q^{-j})`, the centralizer order of a
/// unipotent element of type `λ` in `GL_{|λ|}(F_Q)`.
pub fn unipotent_centralizer(lambda: &Partition, big_q: u64) -> BigInt {
    let qb = BigInt::from(big_q);
    let mults = lambda.multiplicities();
    let exp = lambda.degree() as u64 + 2 * lambda.n_statistic()
        - mults
            .iter()
            .map(|&(_, m)| m as u64 * (m as u64 + 1) / 2)
            .sum::<u64>();
    let mut acc = qb.pow(exp as u32);
    for (_, m) in mults {
        for j in 1..=m {
            acc *= qb.pow(j) - BigInt::one();
        }
    }
    acc
}

impl GroupContext {
    /// Shared context for `GL_n(F_q)`, built once per process.
    pub fn get(n: u32, q: u64) -> Result<Arc<GroupContext>> {
        if let Some(c) = context_cache().lock().unwrap().get(&(n, q)) {
            return Ok(c.clone());
        }
        let ctx = Arc::new(GroupContext::build(n, q)?);
        Ok(context_cache()
            .lock()
            .unwrap()
            .entry((n, q))
            .or_insert(ctx)
            .clone())
    }

    fn build(n: u32, q: u64) -> Result<GroupContext> {
        if n == 0 {
            return domain("GL_0 is not supported");
        }
        let (p, d0) = ffield::prime_power(q)?;
        let needed = d0 * n;
        if needed > ffield::max_supported_degree(p) {
            return Err(Error::Config(format!(
                "F_{{{q}^{n}}} needs a degree-{needed} Conway polynomial over F_{p}, not tabulated"
            )));
        }
        let tower = FieldTower::shared(p, needed)?;
        let field = SmallField::new(&tower, d0)?;
        let mut polys = Vec::with_capacity(n as usize);
        let mut root_index = HashMap::new();
        for d in 1..=n {
            let list = irreducible_polys_in(&tower, q, d0, d)?;
            for (i, f) in list.iter().enumerate() {
                root_index.insert((d, f.root_dlog), i);
            }
            polys.push(list);
        }
        let mut classes = Vec::new();
        let flat: Vec<&IrrPoly> = polys.iter().flatten().collect();
        enumerate_rec(&flat, 0, n, &mut BTreeMap::new(), &mut classes);
        classes.sort();
        let index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        let order = gl_order(n, q);
        let centralizers: Vec<BigInt> = classes.iter().map(|c| centralizer_of(c, q)).collect();
        let sizes = centralizers.iter().map(|z| &order / z).collect();
        Ok(GroupContext {
            n,
            q,
            p,
            d0,
            tower,
            field,
            polys,
            root_index,
            classes,
            index,
            centralizers,
            sizes,
            order,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// `d0` with `q = p^d0`.
    pub fn d0(&self) -> u32 {
        self.d0
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn field(&self) -> &SmallField {
        &self.field
    }

    /// `ε_G = (-1)^n`.
    pub fn eps_g(&self) -> i64 {
        if self.n % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `ε_w = -1` for the Coxeter torus.
    pub fn eps_w(&self) -> i64 {
        -1
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn classes(&self) -> &[GLnClassData] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_index(&self, c: &GLnClassData) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn centralizer(&self, i: usize) -> &BigInt {
        &self.centralizers[i]
    }

    pub fn class_size(&self, i: usize) -> &BigInt {
        &self.sizes[i]
    }

    pub fn centralizer_order(&self, c: &GLnClassData) -> Result<BigInt> {
        if c.dimension() != self.n {
            return domain(format!("{c} is not a class of GL_{}", self.n));
        }
        Ok(centralizer_of(c, self.q))
    }

    /// Monic irreducible polynomials of degree `d` other than `x`, canonically ordered.
    pub fn irreducible_polys(&self, d: u32) -> &[IrrPoly] {
        if d == 0 || d > self.n {
            return &[];
        }
        &self.polys[d as usize - 1]
    }

    /// Multiplicative order of the roots of `f`.
    pub fn root_order(&self, f: &IrrPoly) -> u64 {
        let m = self.q.pow(f.degree) - 1;
        m / gcd(f.root_dlog, m)
    }

    /// Discrete log of the canonical root of `f` inside `F_{q^n}`; requires `deg f | n`.
    pub fn root_dlog_in_top(&self, f: &IrrPoly) -> Result<u64> {
        if self.n % f.degree != 0 {
            return domain(format!("deg {f} does not divide {}", self.n));
        }
        let ratio = (self.q.pow(self.n) - 1) / (self.q.pow(f.degree) - 1);
        Ok(f.root_dlog * ratio)
    }

    pub fn identity_class(&self) -> GLnClassData {
        let one = self.poly_of_root(1, 0).expect("x - 1 is always present");
        GLnClassData(BTreeMap::from([(one, Partition::single_column(self.n))]))
    }

    pub fn identity_index(&self) -> usize {
        self.index[&self.identity_class()]
    }

    pub fn semisimple_indices(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i].is_semisimple())
            .collect()
    }

    /// Classes whose elements have order prime to `ell` (`ell = p`: the semisimple classes).
    pub fn ell_regular_indices(&self, ell: u64) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.is_ell_regular(&self.classes[i], ell))
            .collect()
    }

    fn is_ell_regular(&self, c: &GLnClassData, ell: u64) -> bool {
        if ell == self.p as u64 {
            return c.is_semisimple();
        }
        c.entries().all(|(f, _)| self.root_order(f) % ell != 0)
    }

    /// The irreducible polynomial of degree `d` having the element of `F_{q^d}` with discrete
    /// log `j` as a root.
    pub fn poly_of_root(&self, d: u32, j: u64) -> Result<IrrPoly> {
        if d == 0 || d > self.n {
            return domain(format!("degree {d} outside 1..={}", self.n));
        }
        let m = self.q.pow(d) - 1;
        let mut best = j % m;
        let mut x = best;
        for _ in 0..d {
            x = (x as u128 * self.q as u128 % m as u128) as u64;
            best = best.min(x);
        }
        match self.root_index.get(&(d, best)) {
            Some(&i) => Ok(self.polys[d as usize - 1][i].clone()),
            None => domain(format!("element with dlog {j} has degree < {d} over F_{}", self.q)),
        }
    }

    /// Degree over `F_q` of the element of `F_{q^n}` with discrete log `j`.
    pub fn degree_of_dlog(&self, j: u64) -> u32 {
        let m = self.q.pow(self.n) - 1;
        let j = j % m;
        let mut x = (j as u128 * self.q as u128 % m as u128) as u64;
        let mut d = 1;
        while x != j {
            x = (x as u128 * self.q as u128 % m as u128) as u64;
            d += 1;
        }
        d
    }

    /// `{minpoly(x) ↦ (1^{n/d})}` for the element of `F_{q^n}^×` with discrete log `j`.
    pub fn class_of_torus_dlog(&self, j: u64) -> GLnClassData {
        let m = self.q.pow(self.n) - 1;
        let j = j % m;
        let d = self.degree_of_dlog(j);
        let ratio = m / (self.q.pow(d) - 1);
        let f = self
            .poly_of_root(d, j / ratio)
            .expect("degree computed from the orbit");
        GLnClassData(BTreeMap::from([(f, Partition::single_column(self.n / d))]))
    }

    pub fn class_of_torus_element(&self, x: &FqElem) -> Result<GLnClassData> {
        if x.degree() != self.d0 * self.n {
            return domain(format!(
                "element of degree {} is not in F_{{{}^{}}}",
                x.degree(),
                self.q,
                self.n
            ));
        }
        Ok(self.class_of_torus_dlog(self.tower.dlog(x)?))
    }

    pub fn regularity_predicates(&self, c: &GLnClassData, ell: u64) -> Result<Regularity> {
        if c.dimension() != self.n {
            return domain(format!("{c} is not a class of GL_{}", self.n));
        }
        if !crate::arith::is_prime(ell) {
            return domain(format!("{ell} is not prime"));
        }
        Ok(Regularity {
            p_regular: c.is_semisimple(),
            ell_regular: self.is_ell_regular(c, ell),
            semisimple_part: c.semisimple_part(),
        })
    }

    /// `f(M)` for a row-major matrix over `F_q`.
    fn poly_at_matrix(&self, f: &IrrPoly, m: &[u32]) -> Vec<u32> {
        let n = self.n as usize;
        let k = &self.field;
        let mut acc = vec![0u32; n * n];
        for &c in f.coeffs.iter().rev() {
            acc = k.mat_mul(n, &acc, m);
            for i in 0..n {
                acc[i * n + i] = k.add(acc[i * n + i], c);
            }
        }
        acc
    }

    /// Class of an invertible matrix, by kernel dimensions of `f(M)^i` for each irreducible `f`.
    pub fn class_of_matrix(&self, m: &[u32]) -> Result<GLnClassData> {
        let n = self.n as usize;
        if m.len() != n * n || m.iter().any(|&x| x >= self.field.q()) {
            return domain(format!("expected {n}×{n} matrix over F_{}", self.q));
        }
        if self.field.rank(n, n, m) < n {
            return domain("singular matrix");
        }
        let k = &self.field;
        let mut out = BTreeMap::new();
        let mut found = 0u32;
        'outer: for list in &self.polys {
            for f in list {
                if found == self.n {
                    break 'outer;
                }
                let fm = self.poly_at_matrix(f, m);
                let mut power = fm.clone();
                let mut prev = 0usize;
                let mut counts = Vec::new();
                loop {
                    let kd = n - k.rank(n, n, &power);
                    if kd == prev {
                        break;
                    }
                    counts.push(((kd - prev) / f.degree as usize) as u32);
                    prev = kd;
                    power = k.mat_mul(n, &power, &fm);
                }
                if prev > 0 {
                    // counts[i] = #parts ≥ i+1, i.e. the conjugate partition
                    let conj = Partition::from_parts(counts);
                    found += prev as u32;
                    out.insert(f.clone(), conj.conjugate());
                }
            }
        }
        Ok(GLnClassData(out))
    }

    /// `{"polys":[{"coeffs","partition"}], "size", "centralizer", "semisimple"}`.
    pub fn class_json(&self, i: usize) -> Value {
        let c = &self.classes[i];
        json!({
            "polys": c.entries().map(|(f, l)| json!({
                "coeffs": f.coeffs,
                "partition": l.parts(),
            })).collect::<Vec<_>>(),
            "size": big_json(&self.sizes[i]),
            "centralizer": big_json(&self.centralizers[i]),
            "semisimple": c.is_semisimple(),
        })
    }
}

pub(crate) fn big_json(x: &BigInt) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn centralizer_of(c: &GLnClassData, q: u64) -> BigInt {
    c.entries()
        .map(|(f, l)| unipotent_centralizer(l, q.pow(f.degree)))
        .fold(BigInt::one(), |a, b| a * b)
}

fn enumerate_rec(
    polys: &[&IrrPoly],
    start: usize,
    rem: u32,
    cur: &mut BTreeMap<IrrPoly, Partition>,
    out: &mut Vec<GLnClassData>,
) {
    if rem == 0 {
        out.push(GLnClassData(cur.clone()));
        return;
    }
    for i in start..polys.len() {
        let f = polys[i];
        let d = f.degree;
        if d > rem {
            break;
        }
        for k in 1..=rem / d {
            for lam in partitions::partitions(k) {
                cur.insert(f.clone(), lam);
                enumerate_rec(polys, i + 1, rem - k * d, cur, out);
            }
        }
        cur.remove(f);
    }
}

/// Monic irreducible polynomials of degree `d` over `F_q` (excluding `x`), via Frobenius orbits
/// in `F_{q^d}^×`, canonically ordered.
fn irreducible_polys_in(tower: &FieldTower, q: u64, d0: u32, d: u32) -> Result<Vec<IrrPoly>> {
    let big = d0 * d;
    let m = q.pow(d) - 1;
    let p = tower.p();
    let mut out = Vec::new();
    for j in 0..m {
        let mut orbit = vec![j];
        let mut x = (j as u128 * q as u128 % m as u128) as u64;
        let mut minimal = true;
        while x != j {
            if x < j {
                minimal = false;
                break;
            }
            orbit.push(x);
            x = (x as u128 * q as u128 % m as u128) as u64;
        }
        if !minimal || orbit.len() as u32 != d {
            continue;
        }
        // Π (X - r)
        let mut poly: Vec<FqElem> = vec![tower.one(big)?];
        for &e in &orbit {
            let r = tower.neg(&tower.from_dlog(big, e)?);
            let mut next = vec![tower.zero(big)?; poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = tower.add(&next[i + 1], c)?;
                next[i] = tower.add(&next[i], &tower.mul(c, &r)?)?;
            }
            poly = next;
        }
        let coeffs = poly
            .iter()
            .map(|c| Ok(tower.pack(&tower.restrict(c, d0)?)))
            .collect::<Result<Vec<u32>>>()?;
        out.push(IrrPoly {
            degree: d,
            coeffs,
            root_dlog: j,
            p,
        });
    }
    out.sort();
    Ok(out)
}

/// Number of monic irreducible polynomials of degree `d` over `F_q`, excluding `x`.
pub fn count_irreducible(q: u64, d: u32) -> u64 {
    let mut total: i64 = 0;
    for e in 1..=d {
        if d % e != 0 {
            continue;
        }
        total += mobius((d / e) as u64) * q.pow(e) as i64;
    }
    let n = (total / d as i64) as u64;
    if d == 1 {
        n - 1
    } else {
        n
    }
}

fn mobius(n: u64) -> i64 {
    let f = crate::arith::factorize(n);
    if f.iter().any(|&(_, k)| k > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Every class of `GL_n(F_q)`.
pub fn enumerate_classes(ctx: &GroupContext) -> Vec<GLnClassData> {
    ctx.classes.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn class_counts() {
        let g = GroupContext::get(2, 3).unwrap();
        assert_eq!(g.num_classes(), 8);
        assert_eq!(g.semisimple_indices().len(), 6);
        assert_eq!(g.order(), &BigInt::from(48));
        let g = GroupContext::get(3, 2).unwrap();
        assert_eq!(g.num_classes(), 6);
        for (n, q) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2), (2, 7), (3, 4)] {
            let g = GroupContext::get(n, q).unwrap();
            let total: BigInt = (0..g.num_classes()).map(|i| g.class_size(i).clone()).sum();
            assert_eq!(&total, g.order(), "GL_{n}(F_{q})");
            assert_eq!(g.semisimple_indices().len() as u64, q.pow(n - 1) * (q - 1));
            for d in 1..=n {
                assert_eq!(g.irreducible_polys(d).len() as u64, count_irreducible(q, d));
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let g = GroupContext::get(2, 2).unwrap();
        let one = g.poly_of_root(1, 0).unwrap();
        let reg = GLnClassData::new(BTreeMap::from([(one, part(&[2]))]));
        assert_eq!(g.centralizer_order(&reg).unwrap(), BigInt::from(2));
        let g = GroupContext::get(2, 3).unwrap();
        assert_eq!(g.centralizer_order(&g.identity_class()).unwrap(), BigInt::from(48));
        let ell = g.class_of_torus_dlog(1);
        assert_eq!(g.centralizer_order(&ell).unwrap(), BigInt::from(8));
    }

    #[test]
    fn torus_classes() {
        let g = GroupContext::get(3, 2).unwrap();
        let c = g.class_of_torus_dlog(1);
        let (f, l) = c.single().unwrap();
        assert_eq!((f.degree(), l.clone()), (3, part(&[1])));
        assert_eq!(g.class_of_torus_dlog(0), g.identity_class());
        let g = GroupContext::get(2, 3).unwrap();
        // order-4 element of F_9^× is i with minpoly X^2 + 1
        let c = g.class_of_torus_dlog(2);
        let (f, l) = c.single().unwrap();
        assert_eq!(f.coeffs(), &[1, 0, 1]);
        assert_eq!(l, &part(&[1]));
        // Galois invariance
        for j in 0..8u64 {
            assert_eq!(g.class_of_torus_dlog(j), g.class_of_torus_dlog(3 * j));
        }
        assert_eq!(g.class_of_torus_dlog(4).to_string(), "{x+1 ↦ (1,1)}");
    }

    #[test]
    fn matrices() {
        let g = GroupContext::get(2, 2).unwrap();
        let c = g.class_of_matrix(&[1, 1, 0, 1]).unwrap();
        assert_eq!(c.single().unwrap().1, &part(&[2]));
        assert!(g.class_of_matrix(&[1, 1, 1, 1]).is_err());
        let g = GroupContext::get(2, 3).unwrap();
        let c = g.class_of_matrix(&[1, 0, 0, 2]).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.is_semisimple());
        // companion matrix of X^2 + 1
        let c = g.class_of_matrix(&[0, 2, 1, 0]).unwrap();
        assert_eq!(c, g.class_of_torus_dlog(2));
    }

    #[test]
    fn regularity() {
        let g = GroupContext::get(2, 3).unwrap();
        let minus_one = g.class_of_torus_dlog(4);
        let r = g.regularity_predicates(&minus_one, 3).unwrap();
        assert!(r.p_regular && r.ell_regular);
        let r = g.regularity_predicates(&minus_one, 2).unwrap();
        assert!(!r.ell_regular);
        let f = minus_one.single().unwrap().0.clone();
        let mixed = GLnClassData::new(BTreeMap::from([(f, part(&[2]))]));
        let r = g.regularity_predicates(&mixed, 2).unwrap();
        assert!(!r.p_regular && !r.ell_regular);
        assert_eq!(r.semisimple_part, minus_one);
        assert!(g.regularity_predicates(&mixed, 5).unwrap().ell_regular);
    }

    #[test]
    fn json_descriptor() {
        let g = GroupContext::get(2, 3).unwrap();
        let i = g.identity_index();
        let v = g.class_json(i);
        assert_eq!(v["size"], json!(1));
        assert_eq!(v["centralizer"], json!(48));
        assert_eq!(v["semisimple"], json!(true));
        assert_eq!(v["polys"][0]["partition"], json!([1, 1]));
    }
}
