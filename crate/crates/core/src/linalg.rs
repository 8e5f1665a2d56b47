//! Exact dense linear algebra over `Q`, `Z` and prime fields `F_P`.
//!
//! Rational elimination pivots on the first nonzero entry. Integer rank uses the fraction-free
//! Bareiss scheme so intermediate entries stay integral.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclotomics::Rational;
use crate::{Error, Result};

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    rref(&mut m.to_vec()).len()
}

/// Solves `A x = b` for `A` given by its columns. `None` if `b` is not in the column span.
/// Free variables are set to zero.
pub fn solve_columns(columns: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let k = columns.len();
    let mut aug: Vec<Vec<Rational>> = (0..b.len())
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug[row][k].clone();
    }
    Some(x)
}

pub fn rational_inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Inverse of an upper unitriangular integer matrix, by back substitution.
pub fn unitriangular_inverse(m: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n || row[i] != 1 || row[..i].iter().any(|&x| x != 0) {
            return Err(Error::Inconsistent(
                "matrix is not upper unitriangular".into(),
            ));
        }
    }
    let mut inv = vec![vec![0i64; n]; n];
    for j in 0..n {
        inv[j][j] = 1;
        for i in (0..j).rev() {
            let s: i64 = ((i + 1)..=j).map(|k| m[i][k] * inv[k][j]).sum();
            inv[i][j] = -s;
        }
    }
    Ok(inv)
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(m: &[Vec<BigInt>]) -> usize {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

pub fn integer_matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let k = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..k).fold(BigInt::zero(), |acc, t| acc + &row[t] * &b[t][j]))
                .collect()
        })
        .collect()
}

/// Linear algebra over the prime field `F_P`, entries in `0..P`.
pub mod modp {
    fn mul(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        crate::arith::pow_mod(a, p - 2, p)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(m: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, pr);
            let iv = inv(m[r][c], p);
            for x in m[r].iter_mut() {
                *x = mul(*x, iv, p);
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c] == 0 {
                    continue;
                }
                let f = p - row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    if y != 0 {
                        *x = (*x + mul(f, y, p)) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        pivots
    }

    pub fn rank(m: &[Vec<u64>], p: u64) -> usize {
        rref(&mut m.to_vec(), p).len()
    }

    /// Basis of the right null space `{x : M x = 0}`.
    pub fn nullspace(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
        let mut a = m.to_vec();
        let pivots = rref(&mut a, p);
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; cols];
                v[f] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - a[row][f]) % p;
                }
                v
            })
            .collect()
    }

    pub fn mat_vec(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
        m.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + mul(a, b, p)) % p)
            })
            .collect()
    }

    pub fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
        let k = b.len();
        let cols = b.first().map_or(0, |r| r.len());
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| (0..k).fold(0u64, |acc, t| (acc + mul(row[t], b[t][j], p)) % p))
                    .collect()
            })
            .collect()
    }

    /// Characteristic polynomial via Hessenberg reduction, coefficients ascending, monic.
    pub fn charpoly(m: &[Vec<u64>], p: u64) -> Vec<u64> {
        let n = m.len();
        let mut h = m.to_vec();
        for c in 0..n.saturating_sub(2) {
            let Some(pr) = ((c + 1)..n).find(|&i| h[i][c] != 0) else {
                continue;
            };
            if pr != c + 1 {
                h.swap(pr, c + 1);
                for row in h.iter_mut() {
                    row.swap(pr, c + 1);
                }
            }
            let iv = inv(h[c + 1][c], p);
            for i in (c + 2)..n {
                let f = mul(h[i][c], iv, p);
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = mul(f, h[c + 1][j], p);
                    h[i][j] = (h[i][j] + p - t) % p;
                }
                for row in h.iter_mut() {
                    let t = mul(f, row[i], p);
                    row[c + 1] = (row[c + 1] + t) % p;
                }
            }
        }
        // p_k(x) = (x - h_kk) p_{k-1} - Σ_{i<k} h_ik Π_{j=i+1}^{k} h_{j,j-1} p_{i-1}
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let prev = &polys[k];
            let mut next = vec![0u64; k + 2];
            for (i, &c) in prev.iter().enumerate() {
                next[i + 1] = (next[i + 1] + c) % p;
                next[i] = (next[i] + p - mul(h[k][k], c, p)) % p;
            }
            let mut prod = 1u64;
            for i in (0..k).rev() {
                prod = mul(prod, h[i + 1][i], p);
                if prod == 0 {
                    break;
                }
                let f = mul(prod, h[i][k], p);
                for (t, &c) in polys[i].iter().enumerate() {
                    next[t] = (next[t] + p - mul(f, c, p)) % p;
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn poly_eval(poly: &[u64], x: u64, p: u64) -> u64 {
        poly.iter().rev().fold(0u64, |acc, &c| (mul(acc, x, p) + c) % p)
    }
}
