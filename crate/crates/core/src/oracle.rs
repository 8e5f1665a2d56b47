//! Brute-force reference engine for small `GL_n(F_q)`.
//!
//! The group is enumerated element by element, classes are found as conjugation orbits and
//! fused onto the canonical class list of [`GroupContext`], and the character table is computed
//! from class-algebra structure constants by the Dixon–Schneider method: simultaneous
//! eigenvectors of the class matrices over a prime field `F_P` with `P ≡ 1 mod exp(G)`,
//! lifted to cyclotomic integers through eigenvalue multiplicities.
//!
//! Nothing here evaluates a character formula; the analytic modules are checked against it.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::{factorize, is_prime, lcm, pow_mod};
use crate::classfun::ClassFunction;
use crate::cyclotomics::{Cyclotomic, Rational};
use crate::glnq::GroupContext;
use crate::linalg::modp;
use crate::{domain, Error, Result};

pub const DEFAULT_GROUP_LIMIT: u64 = 25_000;

/// `GL_n(F_q)` as an explicit list of matrices.
pub struct DenseGroup {
    ctx: Arc<GroupContext>,
    n: usize,
    mats: Vec<u32>,
    index: HashMap<u64, u32>,
    inverse: Vec<u32>,
    class_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    orders: Vec<u64>,
    power_map: Vec<Vec<u32>>,
}

impl std::fmt::Debug for DenseGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DenseGroup({:?}, {} elements)", self.ctx, self.len())
    }
}

fn group_cache() -> &'static Mutex<HashMap<(u32, u64), Arc<DenseGroup>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u64), Arc<DenseGroup>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn table_cache() -> &'static Mutex<HashMap<(u32, u64), Arc<CharTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u64), Arc<CharTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared enumeration of `GL_n(F_q)` under the default size limit.
pub fn enumerate_group_and_classes(ctx: &Arc<GroupContext>) -> Result<Arc<DenseGroup>> {
    let key = (ctx.n(), ctx.q());
    if let Some(g) = group_cache().lock().unwrap().get(&key) {
        return Ok(g.clone());
    }
    let g = Arc::new(DenseGroup::build(ctx.clone(), DEFAULT_GROUP_LIMIT)?);
    Ok(group_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(g)
        .clone())
}

impl DenseGroup {
    pub fn build(ctx: Arc<GroupContext>, limit: u64) -> Result<DenseGroup> {
        let order = ctx.order().to_u64().unwrap_or(u64::MAX);
        if order > limit {
            return Err(Error::Config(format!(
                "|{ctx:?}| = {} exceeds the oracle limit {limit}",
                ctx.order()
            )));
        }
        let n = ctx.n() as usize;
        let q = ctx.q();
        let k = ctx.field();
        let total = q.pow((n * n) as u32);
        let mut mats = Vec::with_capacity(order as usize * n * n);
        let mut index = HashMap::with_capacity(order as usize);
        let mut m = vec![0u32; n * n];
        for code in 0..total {
            let mut c = code;
            for x in m.iter_mut() {
                *x = (c % q) as u32;
                c /= q;
            }
            if k.rank(n, n, &m) == n {
                index.insert(code, (mats.len() / (n * n)) as u32);
                mats.extend_from_slice(&m);
            }
        }
        let size = mats.len() / (n * n);
        if size as u64 != order {
            return Err(Error::Inconsistent(format!(
                "enumerated {size} invertible matrices, expected {order}"
            )));
        }
        let mut g = DenseGroup {
            ctx: ctx.clone(),
            n,
            mats,
            index,
            inverse: Vec::new(),
            class_of: vec![u32::MAX; size],
            members: Vec::new(),
            orders: Vec::new(),
            power_map: Vec::new(),
        };
        g.inverse = (0..size)
            .into_par_iter()
            .map(|i| {
                let inv = k.mat_inv(n, g.element(i)).expect("element is invertible");
                g.index_of(&inv)
            })
            .collect();
        g.find_classes()?;
        Ok(g)
    }

    pub fn ctx(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.inverse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inverse.is_empty()
    }

    pub fn element(&self, i: usize) -> &[u32] {
        let s = self.n * self.n;
        &self.mats[i * s..(i + 1) * s]
    }

    fn code(&self, m: &[u32]) -> u64 {
        let q = self.ctx.q();
        m.iter().rev().fold(0u64, |acc, &x| acc * q + x as u64)
    }

    pub fn index_of(&self, m: &[u32]) -> u32 {
        self.index[&self.code(m)]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let m = self.ctx.field().mat_mul(self.n, self.element(a), self.element(b));
        self.index_of(&m) as usize
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// Canonical class index of an element.
    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    pub fn class_members(&self, c: usize) -> &[u32] {
        &self.members[c]
    }

    /// Order of the elements of class `c`.
    pub fn element_order(&self, c: usize) -> u64 {
        self.orders[c]
    }

    /// Class of `g^t` for `g` in class `c`.
    pub fn power_class(&self, c: usize, t: u64) -> usize {
        self.power_map[c][(t % self.orders[c]) as usize] as usize
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |a, &b| lcm(a, b))
    }

    fn generators(&self) -> Vec<usize> {
        let n = self.n;
        let k = self.ctx.field();
        let mut gens = Vec::new();
        let mut coeffs = vec![1u32];
        if k.primitive() != 1 {
            coeffs.push(k.primitive());
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for &a in &coeffs {
                    let mut m = k.identity(n);
                    m[i * n + j] = a;
                    gens.push(self.index_of(&m) as usize);
                }
            }
        }
        let mut d = k.identity(n);
        d[0] = k.primitive();
        gens.push(self.index_of(&d) as usize);
        gens.sort_unstable();
        gens.dedup();
        gens
    }

    fn find_classes(&mut self) -> Result<()> {
        let size = self.len();
        let gens = self.generators();
        let gen_inv: Vec<usize> = gens.iter().map(|&s| self.inverse(s)).collect();
        let mut raw: Vec<Vec<u32>> = Vec::new();
        let mut seen = vec![false; size];
        for start in 0..size {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start as u32];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for (&s, &si) in gens.iter().zip(&gen_inv) {
                    let y = self.mul(self.mul(s, x), si);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y as u32);
                        queue.push_back(y);
                    }
                }
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }
        let ctx = self.ctx.clone();
        if raw.len() != ctx.num_classes() {
            return Err(Error::Inconsistent(format!(
                "{} conjugation orbits but {} parametrized classes",
                raw.len(),
                ctx.num_classes()
            )));
        }
        let mut members = vec![Vec::new(); raw.len()];
        for orbit in raw {
            let data = ctx.class_of_matrix(self.element(orbit[0] as usize))?;
            let Some(c) = ctx.class_index(&data) else {
                return Err(Error::Inconsistent(format!("{data} is not in the class list")));
            };
            if !members[c].is_empty() {
                return Err(Error::Inconsistent(format!("two orbits fuse onto {data}")));
            }
            if BigInt::from(orbit.len()) != *ctx.class_size(c) {
                return Err(Error::Inconsistent(format!(
                    "orbit of {data} has {} elements, centralizer formula predicts {}",
                    orbit.len(),
                    ctx.class_size(c)
                )));
            }
            for &x in &orbit {
                self.class_of[x as usize] = c as u32;
            }
            members[c] = orbit;
        }
        self.members = members;
        let reps: Vec<usize> = self.members.iter().map(|m| m[0] as usize).collect();
        let mut orders = Vec::with_capacity(reps.len());
        let mut power_map = Vec::with_capacity(reps.len());
        let id = self.index_of(&ctx.field().identity(self.n)) as usize;
        for &g in &reps {
            let mut pw = vec![self.class_of(id) as u32];
            let mut x = g;
            while x != id {
                pw.push(self.class_of(x) as u32);
                x = self.mul(x, g);
            }
            orders.push(pw.len() as u64);
            power_map.push(pw);
        }
        self.orders = orders;
        self.power_map = power_map;
        Ok(())
    }

    /// Class indices are in canonical order, so fusion is the identity; this re-derives it from
    /// the matrices and reports whether it is a bijection onto the class list.
    pub fn fusion_is_bijective(&self) -> bool {
        let mut hit = vec![false; self.ctx.num_classes()];
        for (c, m) in self.members.iter().enumerate() {
            let Ok(data) = self.ctx.class_of_matrix(self.element(m[0] as usize)) else {
                return false;
            };
            match self.ctx.class_index(&data) {
                Some(i) if i == c && !hit[i] => hit[i] = true,
                _ => return false,
            }
        }
        hit.iter().all(|&h| h)
    }

    /// `a[i][j][k] = #{x ∈ C_i : x^{-1} z_k ∈ C_j}` for a fixed `z_k ∈ C_k`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<u64>>> {
        let r = self.members.len();
        (0..r)
            .into_par_iter()
            .map(|i| {
                let mut a = vec![vec![0u64; r]; r];
                for k in 0..r {
                    let z = self.members[k][0] as usize;
                    for &x in &self.members[i] {
                        let y = self.mul(self.inverse(x as usize), z);
                        a[self.class_of(y)][k] += 1;
                    }
                }
                a
            })
            .collect()
    }
}

/// Exact character table; rows sorted by degree, then by value tuple in class order.
pub struct CharTable {
    ctx: Arc<GroupContext>,
    rows: Vec<ClassFunction>,
    degrees: Vec<u64>,
    prime: u64,
}

impl std::fmt::Debug for CharTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CharTable({:?}, degrees {:?})", self.ctx, self.degrees)
    }
}

impl CharTable {
    pub fn ctx(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &ClassFunction {
        &self.rows[i]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// The Dixon prime that produced the table.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Rows equal to `f` on every class.
    pub fn matching_rows(&self, f: &ClassFunction) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&i| self.rows[i].equals(f))
            .collect()
    }

    /// Inner products `(f, χ_i)` for every row; the rows are orthonormal, so these are the
    /// multiplicities of a virtual character.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<Cyclotomic>> {
        self.rows.iter().map(|r| f.inner_product(r)).collect()
    }

    /// Integer multiplicities; errors if some inner product is not an integer.
    pub fn multiplicities(&self, f: &ClassFunction) -> Result<Vec<i64>> {
        self.decompose(f)?
            .into_iter()
            .map(|v| {
                v.to_i64().ok_or_else(|| {
                    Error::Inconsistent(format!("non-integral multiplicity {v}"))
                })
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let names: Vec<String> = (0..self.rows.len()).map(|i| format!("X{}", i + 1)).collect();
        let fs: Vec<(&str, &ClassFunction)> = names
            .iter()
            .map(String::as_str)
            .zip(self.rows.iter())
            .collect();
        crate::classfun::table_csv_rows(&fs).expect("rows share a group")
    }

    pub fn to_json(&self) -> Value {
        let ctx = &self.ctx;
        let classes: Vec<Value> = (0..ctx.num_classes()).map(|i| ctx.class_json(i)).collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .zip(&self.degrees)
            .enumerate()
            .map(|(i, (r, d))| {
                json!({
                    "label": format!("X{}", i + 1),
                    "degree": d,
                    "values": r.dense_values(),
                })
            })
            .collect();
        json!({"n": ctx.n(), "q": ctx.q(), "prime": self.prime, "classes": classes, "characters": rows})
    }
}

/// The shared character table of `GL_n(F_q)`.
pub fn character_table(g: &DenseGroup) -> Result<Arc<CharTable>> {
    let key = (g.ctx.n(), g.ctx.q());
    if let Some(t) = table_cache().lock().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let t = Arc::new(dixon_schneider(g)?);
    Ok(table_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(t)
        .clone())
}

/// Enumeration plus table for `GL_n(F_q)`.
pub fn table_for(n: u32, q: u64) -> Result<Arc<CharTable>> {
    let ctx = GroupContext::get(n, q)?;
    let g = enumerate_group_and_classes(&ctx)?;
    character_table(&g)
}

fn primitive_root(p: u64) -> u64 {
    let fs = factorize(p - 1);
    (2..p)
        .find(|&g| fs.iter().all(|&(f, _)| pow_mod(g, (p - 1) / f, p) != 1))
        .expect("prime has a primitive root")
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

/// Distinct roots in `F_P` of a monic polynomial, with multiplicities.
fn roots_mod(poly: &[u64], p: u64) -> Vec<(u64, usize)> {
    let mut f = poly.to_vec();
    let mut out = Vec::new();
    let mut x = 0;
    while f.len() > 1 && x < p {
        let mut mult = 0;
        while f.len() > 1 && modp::poly_eval(&f, x, p) == 0 {
            // synthetic division by (X - x)
            let deg = f.len() - 1;
            let mut quot = vec![0u64; deg];
            let mut carry = 0u64;
            for i in (0..deg).rev() {
                carry = (f[i + 1] + mulm(carry, x, p)) % p;
                quot[i] = carry;
            }
            f = quot;
            mult += 1;
        }
        if mult > 0 {
            out.push((x, mult));
        }
        x += 1;
    }
    out
}

enum Split {
    Done(Vec<Vec<u64>>),
    Escalate,
}

/// Simultaneous eigenvectors of the class matrices over `F_P`.
fn common_eigenvectors(mats: &[Vec<Vec<u64>>], r: usize, p: u64) -> Split {
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect()];
    for m in mats {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let dim = space.len();
            let pivots: Vec<usize> = space
                .iter()
                .map(|row| row.iter().position(|&x| x != 0).unwrap())
                .collect();
            let images: Vec<Vec<u64>> = space.iter().map(|b| modp::mat_vec(m, b, p)).collect();
            let a: Vec<Vec<u64>> = (0..dim)
                .map(|s| (0..dim).map(|t| images[t][pivots[s]]).collect())
                .collect();
            let roots = roots_mod(&modp::charpoly(&a, p), p);
            let found: usize = roots.iter().map(|r| r.1).sum();
            if found != dim {
                return Split::Escalate;
            }
            if roots.len() == 1 {
                next.push(space);
                continue;
            }
            for (lambda, _) in roots {
                let shifted: Vec<Vec<u64>> = (0..dim)
                    .map(|s| {
                        (0..dim)
                            .map(|t| {
                                if s == t {
                                    (a[s][t] + p - lambda) % p
                                } else {
                                    a[s][t]
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ns = modp::nullspace(&shifted, dim, p);
                let mut vecs: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|j| {
                                (0..dim).fold(0u64, |acc, t| (acc + mulm(c[t], space[t][j], p)) % p)
                            })
                            .collect()
                    })
                    .collect();
                modp::rref(&mut vecs, p);
                next.push(vecs);
            }
        }
        spaces = next;
    }
    if spaces.iter().all(|s| s.len() == 1) && spaces.len() == r {
        Split::Done(spaces.into_iter().map(|mut s| s.remove(0)).collect())
    } else {
        Split::Escalate
    }
}

fn isqrt(v: u64) -> u64 {
    let mut x = (v as f64).sqrt() as u64;
    while x * x > v {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= v {
        x += 1;
    }
    x
}

fn dixon_schneider(g: &DenseGroup) -> Result<CharTable> {
    let ctx = g.ctx.clone();
    let r = ctx.num_classes();
    let order = g.len() as u64;
    let sizes: Vec<u64> = g.members.iter().map(|m| m.len() as u64).collect();
    let id = ctx.identity_index();
    let exp = g.exponent();
    let consts = g.structure_constants();
    let inv_class: Vec<usize> = (0..r)
        .map(|k| g.power_class(k, g.element_order(k) - 1))
        .collect();
    // class matrices ordered by class size, largest first, identity dropped
    let mut mat_order: Vec<usize> = (0..r).filter(|&i| i != id).collect();
    mat_order.sort_by_key(|&i| std::cmp::Reverse(sizes[i]));
    let mut p = (2 * order / exp + 1) * exp + 1;
    for _attempt in 0..64 {
        while !is_prime(p) {
            p += exp;
        }
        match table_mod(g, &consts, &mat_order, &sizes, &inv_class, order, p) {
            Some(chars) => {
                let mut rows: Vec<(u64, Vec<Cyclotomic>)> = chars;
                rows.sort();
                let degrees = rows.iter().map(|r| r.0).collect();
                let rows = rows
                    .into_iter()
                    .map(|(_, v)| ClassFunction::from_values(ctx.clone(), v))
                    .collect::<Result<Vec<_>>>()?;
                return Ok(CharTable {
                    ctx,
                    rows,
                    degrees,
                    prime: p,
                });
            }
            None => p += exp,
        }
    }
    Err(Error::Inconsistent(format!(
        "Dixon–Schneider failed to split for {:?}",
        g.ctx
    )))
}

fn table_mod(
    g: &DenseGroup,
    consts: &[Vec<Vec<u64>>],
    mat_order: &[usize],
    sizes: &[u64],
    inv_class: &[usize],
    order: u64,
    p: u64,
) -> Option<Vec<(u64, Vec<Cyclotomic>)>> {
    let r = sizes.len();
    let id = g.ctx.identity_index();
    let mats: Vec<Vec<Vec<u64>>> = mat_order
        .iter()
        .map(|&i| {
            consts[i]
                .iter()
                .map(|row| row.iter().map(|&x| x % p).collect())
                .collect()
        })
        .collect();
    let Split::Done(vecs) = common_eigenvectors(&mats, r, p) else {
        return None;
    };
    let root = primitive_root(p);
    let inv_sizes: Vec<u64> = sizes.iter().map(|&h| modp::inv(h % p, p)).collect();
    let mut out = Vec::with_capacity(r);
    for v in vecs {
        if v[id] == 0 {
            return None;
        }
        let s = modp::inv(v[id], p);
        let omega: Vec<u64> = v.iter().map(|&x| mulm(x, s, p)).collect();
        let denom = (0..r).fold(0u64, |acc, k| {
            (acc + mulm(mulm(omega[k], omega[inv_class[k]], p), inv_sizes[k], p)) % p
        });
        if denom == 0 {
            return None;
        }
        let d2 = mulm(order % p, modp::inv(denom, p), p);
        let d = isqrt(d2);
        if d * d != d2 || d == 0 || order % d != 0 {
            return None;
        }
        let chi: Vec<u64> = (0..r)
            .map(|k| mulm(mulm(omega[k], d % p, p), inv_sizes[k], p))
            .collect();
        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let o = g.element_order(k);
            let z = pow_mod(root, (p - 1) / o, p);
            let zinv = modp::inv(z, p);
            let oinv = modp::inv(o % p, p);
            let mut mults = vec![0i64; o as usize];
            for (j, slot) in mults.iter_mut().enumerate() {
                let step = pow_mod(zinv, j as u64, p);
                let mut w = 1u64;
                let mut acc = 0u64;
                for t in 0..o {
                    acc = (acc + mulm(chi[g.power_class(k, t)], w, p)) % p;
                    w = mulm(w, step, p);
                }
                let m = mulm(acc, oinv, p);
                if m > d {
                    return None;
                }
                *slot = m as i64;
            }
            values.push(Cyclotomic::from_root_multiplicities(o, &mults));
        }
        if values[id] != Cyclotomic::from_int(d as i64) {
            return None;
        }
        out.push((d, values));
    }
    Some(out)
}

/// Levi block structure of a composition: `(offset, size)` per block.
fn blocks(composition: &[u32]) -> Vec<(usize, usize)> {
    let mut off = 0;
    composition
        .iter()
        .map(|&s| {
            let b = (off, s as usize);
            off += s as usize;
            b
        })
        .collect()
}

fn in_parabolic(m: &[u32], n: usize, bl: &[(usize, usize)]) -> bool {
    bl.iter().all(|&(off, s)| {
        (off..off + s).all(|i| (0..off).all(|j| m[i * n + j] == 0))
    })
}

/// `Ind_P^G` of a function on the Levi `Π GL_{n_i}` given on tuples of block class indices.
pub fn parabolic_induction_general(
    g: &DenseGroup,
    composition: &[u32],
    levi: impl Fn(&[usize]) -> Cyclotomic,
) -> Result<ClassFunction> {
    let ctx = g.ctx.clone();
    let n = g.n;
    if composition.iter().any(|&s| s == 0) || composition.iter().sum::<u32>() != ctx.n() {
        return domain(format!(
            "{composition:?} is not a composition of {}",
            ctx.n()
        ));
    }
    let bl = blocks(composition);
    let block_ctx = composition
        .iter()
        .map(|&s| GroupContext::get(s, ctx.q()))
        .collect::<Result<Vec<_>>>()?;
    let mut block_cache: Vec<HashMap<Vec<u32>, usize>> = vec![HashMap::new(); bl.len()];
    let mut counts: BTreeMap<(usize, Vec<usize>), u64> = BTreeMap::new();
    let mut p_order = 0u64;
    for e in 0..g.len() {
        let m = g.element(e);
        if !in_parabolic(m, n, &bl) {
            continue;
        }
        p_order += 1;
        let mut key = Vec::with_capacity(bl.len());
        for (b, &(off, s)) in bl.iter().enumerate() {
            let block: Vec<u32> = (0..s)
                .flat_map(|i| (0..s).map(move |j| (i, j)))
                .map(|(i, j)| m[(off + i) * n + off + j])
                .collect();
            let c = match block_cache[b].get(&block) {
                Some(&c) => c,
                None => {
                    let data = block_ctx[b].class_of_matrix(&block)?;
                    let c = block_ctx[b].class_index(&data).expect("block class exists");
                    block_cache[b].insert(block, c);
                    c
                }
            };
            key.push(c);
        }
        *counts.entry((g.class_of(e), key)).or_insert(0) += 1;
    }
    let mut sums: Vec<Cyclotomic> = vec![Cyclotomic::zero(); ctx.num_classes()];
    for ((c, key), cnt) in counts {
        let v = levi(&key);
        if !v.is_zero() {
            sums[c] = &sums[c] + &v.scale_int(cnt as i64);
        }
    }
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(c, s)| s.scale(&Rational::new(ctx.centralizer(c).clone(), BigInt::from(p_order))))
        .collect();
    ClassFunction::from_values(ctx, values)
}

/// `Ind_P^G(f_1 ⊠ … ⊠ f_k)` for the block upper-triangular parabolic of the composition.
pub fn parabolic_induction(
    g: &DenseGroup,
    composition: &[u32],
    factors: &[ClassFunction],
) -> Result<ClassFunction> {
    if factors.len() != composition.len() {
        return domain(format!(
            "{} factors for composition {composition:?}",
            factors.len()
        ));
    }
    for (f, &s) in factors.iter().zip(composition) {
        if f.ctx().n() != s || f.ctx().q() != g.ctx.q() {
            return domain(format!("factor on {:?} does not fit block of size {s}", f.ctx()));
        }
    }
    parabolic_induction_general(g, composition, |key| {
        key.iter()
            .zip(factors)
            .fold(Cyclotomic::one(), |acc, (&c, f)| &acc * &f.value(c))
    })
}

/// `Ind_U^G ψ`, `ψ(u) = ζ_p^{Tr(Σ_i u_{i,i+1})}` on the upper unitriangular group.
pub fn gelfand_graev(g: &DenseGroup) -> Result<ClassFunction> {
    let ctx = g.ctx.clone();
    let n = g.n;
    let k = ctx.field();
    let p = ctx.p() as usize;
    let mut counts: Vec<Vec<i64>> = vec![vec![0; p]; ctx.num_classes()];
    let mut u_order = 0u64;
    for e in 0..g.len() {
        let m = g.element(e);
        let unitri = (0..n).all(|i| {
            m[i * n + i] == 1 && (0..i).all(|j| m[i * n + j] == 0)
        });
        if !unitri {
            continue;
        }
        u_order += 1;
        let s = (0..n - 1).fold(0u32, |acc, i| k.add(acc, m[i * n + i + 1]));
        counts[g.class_of(e)][k.trace_to_prime(s) as usize] += 1;
    }
    let values = counts
        .into_iter()
        .enumerate()
        .map(|(c, cnt)| {
            Cyclotomic::from_root_multiplicities(p as u64, &cnt)
                .scale(&Rational::new(ctx.centralizer(c).clone(), BigInt::from(u_order)))
        })
        .collect();
    ClassFunction::from_values(ctx, values)
}

/// Outcome of the oracle self-checks on one group.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct OracleReport {
    pub group: String,
    pub classes: usize,
    pub characters: usize,
    pub row_orthogonality: bool,
    pub column_orthogonality: bool,
    pub structure_constants: bool,
    pub fusion_bijective: bool,
    pub gelfand_graev_multiplicity_free: bool,
    pub degrees_divide_order: bool,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.classes == self.characters
            && self.row_orthogonality
            && self.column_orthogonality
            && self.structure_constants
            && self.fusion_bijective
            && self.gelfand_graev_multiplicity_free
            && self.degrees_divide_order
    }
}

pub fn self_consistency(g: &DenseGroup, t: &CharTable) -> Result<OracleReport> {
    let ctx = g.ctx.clone();
    let r = ctx.num_classes();
    let rows = t.rows();
    let gram: Vec<Vec<Cyclotomic>> = rows
        .par_iter()
        .map(|a| rows.iter().map(|b| a.inner_product(b)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let row_ok = (0..rows.len()).all(|i| {
        (0..rows.len()).all(|j| gram[i][j] == Cyclotomic::from_int(i64::from(i == j)))
    });
    let col_ok = (0..r).all(|c| {
        let s = Cyclotomic::sum(
            &rows
                .iter()
                .map(|x| {
                    let v = x.value(c);
                    &v * &v.conj()
                })
                .collect::<Vec<_>>(),
        );
        s == Cyclotomic::from_bigint(ctx.centralizer(c).clone())
    });
    let consts = g.structure_constants();
    let sizes: Vec<u64> = (0..r).map(|c| g.class_members(c).len() as u64).collect();
    let sc_ok = (0..r).all(|i| {
        (0..r).all(|j| (0..r).map(|k| consts[i][j][k] * sizes[k]).sum::<u64>() == sizes[i] * sizes[j])
    });
    let gg = gelfand_graev(g)?;
    let gg_ok = t
        .decompose(&gg)?
        .iter()
        .all(|v| *v == Cyclotomic::zero() || *v == Cyclotomic::one());
    let ord = g.len() as u64;
    Ok(OracleReport {
        group: format!("{ctx:?}"),
        classes: r,
        characters: rows.len(),
        row_orthogonality: row_ok,
        column_orthogonality: col_ok,
        structure_constants: sc_ok,
        fusion_bijective: g.fusion_is_bijective(),
        gelfand_graev_multiplicity_free: gg_ok,
        degrees_divide_order: t.degrees().iter().all(|&d| ord % d == 0),
    })
}
