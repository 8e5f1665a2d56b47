//! Finite fields in Conway-polynomial towers.
//!
//! Every field `F_{p^k}` of the tower is `F_p[x]/(C_{p,k})` with `C_{p,k}` the Conway
//! polynomial; the residue class of `x` is a primitive element, and these primitive elements are
//! norm-compatible: `N_{F_{p^b}/F_{p^a}}(x_b) = x_a` whenever `a | b`. Elements are coefficient
//! vectors over `F_p`; multiplication and characters go through full discrete-log tables built
//! at construction.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::arith::{checked_pow, is_prime};
use crate::cyclotomics::Cyclotomic;
use crate::{domain, Error, Result};

/// Default bound on `p^k` for a field whose log tables are built.
pub const DEFAULT_TABLE_LIMIT: u64 = 10_000_000;

// Conway polynomials, constant term first, monic.
const CONWAY_2: &[&[u32]] = &[
    &[1, 1],
    &[1, 1, 1],
    &[1, 1, 0, 1],
    &[1, 1, 0, 0, 1],
    &[1, 0, 1, 0, 0, 1],
    &[1, 1, 0, 1, 1, 0, 1],
    &[1, 1, 0, 0, 0, 0, 0, 1],
    &[1, 0, 1, 1, 1, 0, 0, 0, 1],
    &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1],
    &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1],
    &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1],
];
const CONWAY_3: &[&[u32]] = &[
    &[1, 1],
    &[2, 2, 1],
    &[1, 2, 0, 1],
    &[2, 0, 0, 2, 1],
    &[1, 2, 0, 0, 0, 1],
    &[2, 2, 1, 0, 2, 0, 1],
];
const CONWAY_5: &[&[u32]] = &[&[3, 1], &[2, 4, 1], &[3, 3, 0, 1], &[2, 4, 4, 0, 1]];
const CONWAY_7: &[&[u32]] = &[&[4, 1], &[3, 6, 1], &[4, 0, 6, 1], &[3, 4, 5, 0, 1]];

/// The hardcoded Conway polynomial `C_{p,k}`, if tabulated.
pub fn conway_polynomial(p: u32, k: u32) -> Option<&'static [u32]> {
    let table = match p {
        2 => CONWAY_2,
        3 => CONWAY_3,
        5 => CONWAY_5,
        7 => CONWAY_7,
        _ => return None,
    };
    table.get((k as usize).checked_sub(1)?).copied()
}

/// Largest tabulated degree for `p`.
pub fn max_supported_degree(p: u32) -> u32 {
    match p {
        2 => CONWAY_2.len() as u32,
        3 => CONWAY_3.len() as u32,
        5 => CONWAY_5.len() as u32,
        7 => CONWAY_7.len() as u32,
        _ => 0,
    }
}

/// Element of the degree-`k` field of a tower.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem {
    degree: u32,
    coeffs: Vec<u32>,
}

impl FqElem {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

struct Level {
    poly: Vec<u32>,
    order: u64,
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub struct FieldTower {
    p: u32,
    levels: Vec<Level>,
}

impl std::fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldTower")
            .field("p", &self.p)
            .field("max_degree", &self.max_degree())
            .finish()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub degree: u32,
    pub poly: Vec<u32>,
    pub generator_dlog_base: &'static str,
}

fn tower_cache() -> &'static Mutex<HashMap<u32, Arc<FieldTower>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<FieldTower>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl FieldTower {
    /// Builds `F_p ⊂ … ⊂ F_{p^max_degree}` with log tables, within the default size limit.
    pub fn build(p: u32, max_degree: u32) -> Result<Self> {
        Self::build_with_limit(p, max_degree, DEFAULT_TABLE_LIMIT)
    }

    pub fn build_with_limit(p: u32, max_degree: u32, limit: u64) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::Config(format!("{p} is not prime")));
        }
        if max_degree == 0 {
            return Err(Error::Config("tower degree must be positive".into()));
        }
        if max_degree > max_supported_degree(p) {
            return Err(Error::Config(format!(
                "no Conway polynomial tabulated for p = {p}, degree {max_degree}"
            )));
        }
        match checked_pow(p as u64, max_degree) {
            Some(size) if size <= limit => {}
            _ => {
                return Err(Error::Config(format!(
                    "field of order {p}^{max_degree} exceeds the table limit {limit}"
                )))
            }
        }
        let levels = (1..=max_degree).map(|k| build_level(p, k)).collect();
        Ok(FieldTower { p, levels })
    }

    /// Process-wide shared tower over `F_p` covering every tabulated degree.
    pub fn shared(p: u32, min_degree: u32) -> Result<Arc<Self>> {
        let mut cache = tower_cache().lock().unwrap();
        if let Some(t) = cache.get(&p) {
            if t.max_degree() >= min_degree {
                return Ok(t.clone());
            }
            return Err(Error::Config(format!(
                "no Conway polynomial tabulated for p = {p}, degree {min_degree}"
            )));
        }
        let tower = Arc::new(FieldTower::build(p, max_supported_degree(p).max(1))?);
        cache.insert(p, tower.clone());
        if tower.max_degree() < min_degree {
            return Err(Error::Config(format!(
                "no Conway polynomial tabulated for p = {p}, degree {min_degree}"
            )));
        }
        Ok(tower)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn max_degree(&self) -> u32 {
        self.levels.len() as u32
    }

    fn level(&self, k: u32) -> Result<&Level> {
        if k == 0 || k > self.max_degree() {
            return domain(format!(
                "degree {k} outside the tower (max {})",
                self.max_degree()
            ));
        }
        Ok(&self.levels[k as usize - 1])
    }

    pub fn order(&self, k: u32) -> Result<u64> {
        Ok(self.level(k)?.order)
    }

    pub fn defining_polynomial(&self, k: u32) -> Result<&[u32]> {
        Ok(&self.level(k)?.poly)
    }

    pub fn descriptor(&self, k: u32) -> Result<FieldDescriptor> {
        Ok(FieldDescriptor {
            p: self.p,
            degree: k,
            poly: self.level(k)?.poly.clone(),
            generator_dlog_base: "x",
        })
    }

    pub fn pack(&self, x: &FqElem) -> u32 {
        x.coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * self.p + c)
    }

    pub fn unpack(&self, k: u32, mut idx: u32) -> FqElem {
        let mut coeffs = vec![0; k as usize];
        for c in coeffs.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        FqElem { degree: k, coeffs }
    }

    pub fn elem(&self, k: u32, coeffs: &[u32]) -> Result<FqElem> {
        self.level(k)?;
        if coeffs.len() > k as usize {
            return domain(format!("{} coefficients for a degree-{k} field", coeffs.len()));
        }
        let mut c: Vec<u32> = coeffs.iter().map(|&a| a % self.p).collect();
        c.resize(k as usize, 0);
        Ok(FqElem {
            degree: k,
            coeffs: c,
        })
    }

    pub fn from_int(&self, k: u32, a: i64) -> Result<FqElem> {
        self.elem(k, &[a.rem_euclid(self.p as i64) as u32])
    }

    pub fn zero(&self, k: u32) -> Result<FqElem> {
        self.elem(k, &[])
    }

    pub fn one(&self, k: u32) -> Result<FqElem> {
        self.elem(k, &[1])
    }

    /// The fixed primitive element `x mod C_{p,k}`.
    pub fn generator(&self, k: u32) -> Result<FqElem> {
        self.from_dlog(k, 1)
    }

    pub fn from_dlog(&self, k: u32, j: u64) -> Result<FqElem> {
        let lv = self.level(k)?;
        let idx = lv.exp[(j % (lv.order - 1)) as usize];
        Ok(self.unpack(k, idx))
    }

    /// Discrete logarithm to the base of the fixed generator, in `[0, p^k - 1)`.
    pub fn dlog(&self, x: &FqElem) -> Result<u64> {
        let lv = self.level(x.degree)?;
        let l = lv.log[self.pack(x) as usize];
        if l == u32::MAX {
            return domain("discrete logarithm of zero");
        }
        Ok(l as u64)
    }

    fn same_field(&self, a: &FqElem, b: &FqElem) -> Result<u32> {
        if a.degree != b.degree {
            return domain(format!(
                "elements of degrees {} and {} are in different fields",
                a.degree, b.degree
            ));
        }
        self.level(a.degree)?;
        Ok(a.degree)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> Result<FqElem> {
        let k = self.same_field(a, b)?;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        Ok(FqElem { degree: k, coeffs })
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        FqElem {
            degree: a.degree,
            coeffs: a.coeffs.iter().map(|x| (self.p - x) % self.p).collect(),
        }
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> Result<FqElem> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> Result<FqElem> {
        let k = self.same_field(a, b)?;
        if a.is_zero() || b.is_zero() {
            return self.zero(k);
        }
        let lv = self.level(k)?;
        let s = (self.dlog(a)? + self.dlog(b)?) % (lv.order - 1);
        self.from_dlog(k, s)
    }

    pub fn inv(&self, a: &FqElem) -> Result<FqElem> {
        let lv = self.level(a.degree)?;
        let l = self.dlog(a)?;
        self.from_dlog(a.degree, (lv.order - 1 - l) % (lv.order - 1))
    }

    pub fn pow(&self, a: &FqElem, e: u64) -> Result<FqElem> {
        if a.is_zero() {
            return if e == 0 { self.one(a.degree) } else { Ok(a.clone()) };
        }
        let lv = self.level(a.degree)?;
        let l = self.dlog(a)? as u128 * e as u128 % (lv.order - 1) as u128;
        self.from_dlog(a.degree, l as u64)
    }

    /// `x ↦ x^{p^times}`.
    pub fn frobenius(&self, a: &FqElem, times: u32) -> Result<FqElem> {
        let mut x = a.clone();
        for _ in 0..times {
            x = self.pow(&x, self.p as u64)?;
        }
        Ok(x)
    }

    /// Image of `a ∈ F_{p^{deg a}}` in `F_{p^target}`.
    pub fn embed(&self, a: &FqElem, target: u32) -> Result<FqElem> {
        self.level(target)?;
        if target % a.degree != 0 {
            return domain(format!("degree {} does not divide {target}", a.degree));
        }
        if a.is_zero() {
            return self.zero(target);
        }
        let small = self.order(a.degree)? - 1;
        let big = self.order(target)? - 1;
        self.from_dlog(target, self.dlog(a)? * (big / small))
    }

    /// Recognises an element of `F_{p^{deg a}}` lying in the subfield of degree `target`.
    pub fn restrict(&self, a: &FqElem, target: u32) -> Result<FqElem> {
        self.level(target)?;
        if a.degree % target != 0 {
            return domain(format!("degree {target} does not divide {}", a.degree));
        }
        if a.is_zero() {
            return self.zero(target);
        }
        let ratio = (self.order(a.degree)? - 1) / (self.order(target)? - 1);
        let l = self.dlog(a)?;
        if l % ratio != 0 {
            return domain("element does not lie in the requested subfield");
        }
        self.from_dlog(target, l / ratio)
    }

    /// `N_{F_{p^b}/F_{p^a}}(x) = Π_j Frob^{a·j}(x)`, computed by field multiplication.
    pub fn norm(&self, x: &FqElem, target: u32) -> Result<FqElem> {
        let b = x.degree;
        self.level(target)?;
        if b % target != 0 {
            return domain(format!("degree {target} does not divide {b}"));
        }
        let mut acc = self.one(b)?;
        let mut conj = x.clone();
        for _ in 0..b / target {
            acc = self.mul(&acc, &conj)?;
            conj = self.frobenius(&conj, target)?;
        }
        self.restrict(&acc, target)
    }
}

fn build_level(p: u32, k: u32) -> Level {
    let poly: Vec<u32> = conway_polynomial(p, k).expect("tabulated").to_vec();
    let order = (p as u64).pow(k);
    let mut exp = Vec::with_capacity(order as usize - 1);
    let mut log = vec![u32::MAX; order as usize];
    let mut cur = vec![0u32; k as usize];
    cur[0] = 1;
    let pack = |c: &[u32]| c.iter().rev().fold(0u32, |acc, &x| acc * p + x);
    for i in 0..order - 1 {
        let idx = pack(&cur);
        assert_eq!(log[idx as usize], u32::MAX, "Conway polynomial is not primitive");
        log[idx as usize] = i as u32;
        exp.push(idx);
        // multiply by x modulo the monic defining polynomial
        let top = cur[k as usize - 1];
        for j in (1..k as usize).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for (j, c) in cur.iter_mut().enumerate() {
                *c = (*c + (p - top) * poly[j]) % p;
            }
        }
    }
    Level {
        poly,
        order,
        exp,
        log,
    }
}

/// Multiplicative character `χ_e: g ↦ ζ_{q^n-1}^e` of `F_{q^n}^×`, `g` the tower generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultChar {
    pub q: u64,
    pub n: u32,
    pub e: u64,
}

/// Orbit of a character exponent under `e ↦ q^d·e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharOrbit {
    pub orbit: BTreeSet<u64>,
    pub size: u64,
    pub regular: bool,
}

impl MultChar {
    pub fn new(q: u64, n: u32, e: i64) -> Result<Self> {
        if n == 0 {
            return domain("character of a degree-0 field");
        }
        let m = q
            .checked_pow(n)
            .ok_or_else(|| Error::Config(format!("{q}^{n} overflows")))?
            - 1;
        Ok(MultChar {
            q,
            n,
            e: e.rem_euclid(m as i64) as u64,
        })
    }

    pub fn trivial(q: u64, n: u32) -> Self {
        MultChar { q, n, e: 0 }
    }

    /// `q^n - 1`, the order of the cyclic group.
    pub fn modulus(&self) -> u64 {
        self.q.pow(self.n) - 1
    }

    pub fn orbit(&self, over_subfield_degree: u32) -> Result<CharOrbit> {
        char_orbit(self, over_subfield_degree)
    }

    pub fn is_regular(&self) -> bool {
        char_orbit(self, 1).map(|o| o.regular).unwrap_or(false)
    }

    /// Value at the element with discrete log `j` in `F_{q^n}`.
    pub fn value_at_dlog(&self, j: u64) -> Cyclotomic {
        let m = self.modulus();
        let k = (self.e as u128 * j as u128 % m as u128) as i64;
        Cyclotomic::root_of_unity(m, k)
    }
}

/// `χ(x)` for `x ≠ 0` in the field `F_{q^n}` of the character.
pub fn character_evaluation(tower: &FieldTower, chi: &MultChar, x: &FqElem) -> Result<Cyclotomic> {
    let d0 = base_degree(tower.p(), chi.q)?;
    if x.degree() != d0 * chi.n {
        return domain(format!(
            "element of degree {} is not in F_{{{}^{}}}",
            x.degree(),
            chi.q,
            chi.n
        ));
    }
    if x.is_zero() {
        return domain("multiplicative character evaluated at zero");
    }
    Ok(chi.value_at_dlog(tower.dlog(x)?))
}

/// `d0` with `q = p^d0`.
pub fn base_degree(p: u32, q: u64) -> Result<u32> {
    let mut d0 = 0;
    let mut x = 1u64;
    while x < q {
        x *= p as u64;
        d0 += 1;
    }
    if x != q || q < 2 {
        return domain(format!("{q} is not a power of {p}"));
    }
    Ok(d0)
}

/// `(p, d0)` with `q = p^d0`, for a prime power `q`.
pub fn prime_power(q: u64) -> Result<(u32, u32)> {
    let f = crate::arith::factorize(q);
    if f.len() != 1 {
        return domain(format!("{q} is not a prime power"));
    }
    Ok((f[0].0 as u32, f[0].1))
}

pub fn char_orbit(chi: &MultChar, d: u32) -> Result<CharOrbit> {
    if d == 0 || chi.n % d != 0 {
        return domain(format!("{d} does not divide {}", chi.n));
    }
    let m = chi.modulus();
    let step = (chi.q.pow(d) % m.max(1)) as u128;
    let mut orbit = BTreeSet::new();
    let mut e = chi.e;
    while orbit.insert(e) {
        e = if m == 0 {
            0
        } else {
            (e as u128 * step % m as u128) as u64
        };
    }
    let size = orbit.len() as u64;
    Ok(CharOrbit {
        orbit,
        size,
        regular: size == (chi.n / d) as u64,
    })
}

/// `θ_m ∘ N_{F_{q^n}/F_{q^m}}` as a character of `F_{q^n}^×`.
pub fn norm_inflate_char(theta: &MultChar, n: u32) -> Result<MultChar> {
    if n % theta.n != 0 {
        return domain(format!("{} does not divide {n}", theta.n));
    }
    let big = theta.q.pow(n) - 1;
    let ratio = big / theta.modulus();
    Ok(MultChar {
        q: theta.q,
        n,
        e: (theta.e as u128 * ratio as u128 % big as u128) as u64,
    })
}

/// Arithmetic of a single small field `F_q`, `q = p^d0`, with elements encoded as the packed
/// coefficient vectors of the tower (`0` is zero, `1` is one, and for prime `q` the encoding
/// is the integer itself).
#[derive(Debug, Clone)]
pub struct SmallField {
    p: u32,
    d0: u32,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    primitive: u32,
}

impl SmallField {
    pub fn new(tower: &FieldTower, d0: u32) -> Result<Self> {
        let q = tower.order(d0)? as u32;
        let qq = q as usize;
        let mut add = vec![0; qq * qq];
        let mut mul = vec![0; qq * qq];
        let mut neg = vec![0; qq];
        let mut inv = vec![0; qq];
        for a in 0..q {
            let ea = tower.unpack(d0, a);
            neg[a as usize] = tower.pack(&tower.neg(&ea));
            if a != 0 {
                inv[a as usize] = tower.pack(&tower.inv(&ea)?);
            }
            for b in 0..q {
                let eb = tower.unpack(d0, b);
                add[a as usize * qq + b as usize] = tower.pack(&tower.add(&ea, &eb)?);
                mul[a as usize * qq + b as usize] = tower.pack(&tower.mul(&ea, &eb)?);
            }
        }
        Ok(SmallField {
            p: tower.p(),
            d0,
            q,
            add,
            mul,
            neg,
            inv,
            primitive: tower.pack(&tower.generator(d0)?),
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn d0(&self) -> u32 {
        self.d0
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The tower generator of `F_q^×`.
    pub fn primitive(&self) -> u32 {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return domain("inverse of zero in F_q");
        }
        Ok(self.inv[a as usize])
    }

    /// Absolute trace `F_q → F_p`, as an integer in `[0, p)`.
    pub fn trace_to_prime(&self, a: u32) -> u32 {
        // a + a^p + … + a^{p^{d0-1}}
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.d0 {
            acc = self.add(acc, x);
            let mut y = 1;
            for _ in 0..self.p {
                y = self.mul(y, x);
            }
            x = y;
        }
        debug_assert!(acc < self.p);
        acc
    }

    /// Row-major `n × n` product.
    pub fn mat_mul(&self, n: usize, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut c = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i * n + k];
                if aik == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = self.mul(aik, b[k * n + j]);
                    c[i * n + j] = self.add(c[i * n + j], t);
                }
            }
        }
        c
    }

    pub fn identity(&self, n: usize) -> Vec<u32> {
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        m
    }

    /// Rank of a row-major `rows × cols` matrix.
    pub fn rank(&self, rows: usize, cols: usize, m: &[u32]) -> usize {
        let mut a = m.to_vec();
        let mut rank = 0;
        for col in 0..cols {
            let Some(piv) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
                continue;
            };
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
            let inv = self.inv[a[rank * cols + col] as usize];
            for r in 0..rows {
                if r == rank || a[r * cols + col] == 0 {
                    continue;
                }
                let f = self.mul(a[r * cols + col], inv);
                for j in 0..cols {
                    let t = self.mul(f, a[rank * cols + j]);
                    a[r * cols + j] = self.sub(a[r * cols + j], t);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Inverse of an invertible `n × n` matrix.
    pub fn mat_inv(&self, n: usize, m: &[u32]) -> Result<Vec<u32>> {
        let w = 2 * n;
        let mut a = vec![0; n * w];
        for i in 0..n {
            a[i * w..i * w + n].copy_from_slice(&m[i * n..i * n + n]);
            a[i * w + n + i] = 1;
        }
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * w + col] != 0) else {
                return domain("singular matrix");
            };
            for j in 0..w {
                a.swap(piv * w + j, col * w + j);
            }
            let inv = self.inv[a[col * w + col] as usize];
            for j in 0..w {
                a[col * w + j] = self.mul(a[col * w + j], inv);
            }
            for r in 0..n {
                if r == col || a[r * w + col] == 0 {
                    continue;
                }
                let f = a[r * w + col];
                for j in 0..w {
                    let t = self.mul(f, a[col * w + j]);
                    a[r * w + j] = self.sub(a[r * w + j], t);
                }
            }
        }
        Ok((0..n)
            .flat_map(|i| a[i * w + n..i * w + w].to_vec())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_and_f9() {
        let t2 = FieldTower::build(2, 2).unwrap();
        assert_eq!(t2.defining_polynomial(2).unwrap(), &[1, 1, 1]);
        let g = t2.generator(2).unwrap();
        assert_eq!(g.coeffs(), &[0, 1]);
        assert_eq!(t2.pow(&g, 3).unwrap(), t2.one(2).unwrap());

        let t3 = FieldTower::build(3, 2).unwrap();
        assert_eq!(t3.defining_polynomial(2).unwrap(), &[2, 2, 1]);
        let g = t3.generator(2).unwrap();
        assert_eq!(t3.pow(&g, 4).unwrap(), t3.from_int(2, 2).unwrap());
        assert_eq!(t3.norm(&g, 1).unwrap(), t3.from_int(1, 2).unwrap());
        assert_eq!(t3.frobenius(&g, 1).unwrap(), t3.pow(&g, 3).unwrap());
        assert_eq!(t3.dlog(&t3.from_int(2, 2).unwrap()).unwrap(), 4);
    }

    #[test]
    fn build_errors() {
        assert!(matches!(FieldTower::build(4, 2), Err(Error::Config(_))));
        assert!(matches!(FieldTower::build(5, 9), Err(Error::Config(_))));
        assert!(matches!(
            FieldTower::build_with_limit(2, 12, 1000),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn embed_and_domain_errors() {
        let t = FieldTower::build(2, 4).unwrap();
        let one = t.one(1).unwrap();
        assert_eq!(t.embed(&one, 2).unwrap(), t.one(2).unwrap());
        assert!(t.embed(&t.one(3).unwrap(), 4).is_err());
        assert!(t.norm(&t.one(3).unwrap(), 2).is_err());
        assert!(t.dlog(&t.zero(3).unwrap()).is_err());
    }

    #[test]
    fn character_examples() {
        let t = FieldTower::build(3, 2).unwrap();
        let g = t.generator(2).unwrap();
        let chi = MultChar::new(3, 2, 1).unwrap();
        assert_eq!(
            character_evaluation(&t, &chi, &g).unwrap(),
            Cyclotomic::root_of_unity(8, 1)
        );
        let chi4 = MultChar::new(3, 2, 4).unwrap();
        let g2 = t.pow(&g, 2).unwrap();
        assert_eq!(character_evaluation(&t, &chi4, &g2).unwrap(), Cyclotomic::one());
        assert!(character_evaluation(&t, &chi, &t.zero(2).unwrap()).is_err());
    }

    #[test]
    fn orbit_examples() {
        let o = char_orbit(&MultChar::new(2, 2, 1).unwrap(), 1).unwrap();
        assert_eq!(o.orbit.into_iter().collect::<Vec<_>>(), vec![1, 2]);
        assert!(o.regular && o.size == 2);
        let o = char_orbit(&MultChar::new(2, 2, 0).unwrap(), 1).unwrap();
        assert!(!o.regular && o.size == 1);
        let o = char_orbit(&MultChar::new(3, 2, 4).unwrap(), 1).unwrap();
        assert_eq!(o.orbit.into_iter().collect::<Vec<_>>(), vec![4]);
        assert!(!o.regular);
    }

    #[test]
    fn norm_inflation_examples() {
        let th = MultChar::new(3, 1, 1).unwrap();
        assert_eq!(norm_inflate_char(&th, 2).unwrap().e, 4);
        assert_eq!(norm_inflate_char(&MultChar::trivial(5, 1), 2).unwrap().e, 0);
        for e in 0..1 {
            let th = MultChar::new(2, 1, e).unwrap();
            assert_eq!(norm_inflate_char(&th, 3).unwrap().e, 0);
        }
        assert!(norm_inflate_char(&MultChar::new(2, 2, 1).unwrap(), 3).is_err());
    }

    #[test]
    fn small_field_tables() {
        let t = FieldTower::build(3, 2).unwrap();
        let f9 = SmallField::new(&t, 2).unwrap();
        for a in 1..9 {
            assert_eq!(f9.mul(a, f9.inv(a).unwrap()), 1);
            assert_eq!(f9.add(a, f9.neg(a)), 0);
        }
        let m = vec![1, 2, 3, 4];
        let mi = f9.mat_inv(2, &m).unwrap();
        assert_eq!(f9.mat_mul(2, &m, &mi), f9.identity(2));
        let f3 = SmallField::new(&t, 1).unwrap();
        assert_eq!(f3.rank(2, 2, &[1, 2, 2, 1]), 1);
        assert_eq!(f9.rank(2, 2, &[1, 2, 2, 4]), 2);
    }
}
