//! Jordan types of nilpotent operators and the kernel-dimension criterion for strata.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::Value;

use crate::cyclotomics::Rational;
use crate::linalg::{bareiss_rank, integer_matmul, modp};
use crate::partitions::{leq, Partition};
use crate::{domain, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Entries {
    /// A nonzero rational multiple of the operator with integer entries.
    Rational(Vec<Vec<BigInt>>),
    Prime(Vec<Vec<u64>>, u64),
}

/// A nilpotent square matrix over `Q` or `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentOp {
    n: usize,
    entries: Entries,
}

impl NilpotentOp {
    pub fn rational(rows: &[Vec<Rational>]) -> Result<Self> {
        let n = square(rows.len(), rows.iter().map(Vec::len))?;
        let den = rows
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let m = rows
            .iter()
            .map(|r| r.iter().map(|x| x.numer() * (&den / x.denom())).collect())
            .collect();
        NilpotentOp {
            n,
            entries: Entries::Rational(m),
        }
        .checked()
    }

    pub fn integer(rows: &[Vec<i64>]) -> Result<Self> {
        let n = square(rows.len(), rows.iter().map(Vec::len))?;
        let m = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        NilpotentOp {
            n,
            entries: Entries::Rational(m),
        }
        .checked()
    }

    pub fn mod_p(rows: &[Vec<i64>], p: u64) -> Result<Self> {
        if !crate::arith::is_prime(p) {
            return domain(format!("{p} is not prime"));
        }
        let n = square(rows.len(), rows.iter().map(Vec::len))?;
        let m = rows
            .iter()
            .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
            .collect();
        NilpotentOp {
            n,
            entries: Entries::Prime(m, p),
        }
        .checked()
    }

    /// Block-diagonal nilpotent with Jordan blocks of sizes `λ`; `p = None` for `Q`.
    pub fn from_partition(lambda: &Partition, p: Option<u64>) -> Result<Self> {
        let n = lambda.degree() as usize;
        let mut m = vec![vec![0i64; n]; n];
        let mut off = 0;
        for &b in lambda.parts() {
            for i in 0..b as usize - 1 {
                m[off + i][off + i + 1] = 1;
            }
            off += b as usize;
        }
        match p {
            None => Self::integer(&m),
            Some(p) => Self::mod_p(&m, p),
        }
    }

    /// Reads `[[..],..]` (over `Q`, entries integers or `"a/b"` strings) or
    /// `{"p": p, "matrix": [[..],..]}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let (rows, p) = match v {
            Value::Array(_) => (v, None),
            Value::Object(o) => {
                let rows = o
                    .get("matrix")
                    .ok_or_else(|| Error::Domain("missing \"matrix\"".into()))?;
                let p = match o.get("p") {
                    None | Some(Value::Null) => None,
                    Some(x) => Some(
                        x.as_u64()
                            .ok_or_else(|| Error::Domain("\"p\" must be an integer".into()))?,
                    ),
                };
                (rows, p)
            }
            _ => return domain("matrix must be a JSON array or object"),
        };
        let rows: Vec<Vec<Rational>> = rows
            .as_array()
            .ok_or_else(|| Error::Domain("matrix must be an array of rows".into()))?
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| Error::Domain("row must be an array".into()))?
                    .iter()
                    .map(parse_entry)
                    .collect()
            })
            .collect::<Result<_>>()?;
        match p {
            None => Self::rational(&rows),
            Some(p) => {
                let ints = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|x| {
                                let inv = x.denom().modpow(&BigInt::from(p - 2), &BigInt::from(p));
                                if (x.denom() % p).is_zero() {
                                    return domain(format!("denominator of {x} vanishes mod {p}"));
                                }
                                let v = (x.numer() * inv).mod_floor(&BigInt::from(p));
                                Ok(v.to_i64().unwrap())
                            })
                            .collect::<Result<Vec<i64>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Self::mod_p(&ints, p)
            }
        }
    }

    fn checked(self) -> Result<Self> {
        if self.rank_of_power(self.n as u32) != 0 {
            return domain(format!("{}×{} matrix is not nilpotent", self.n, self.n));
        }
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `None` for `Q`.
    pub fn characteristic(&self) -> Option<u64> {
        match &self.entries {
            Entries::Rational(_) => None,
            Entries::Prime(_, p) => Some(*p),
        }
    }

    fn rank_of_power(&self, i: u32) -> usize {
        let n = self.n;
        match &self.entries {
            Entries::Rational(m) => {
                let mut acc: Vec<Vec<BigInt>> = (0..n)
                    .map(|a| (0..n).map(|b| BigInt::from(u8::from(a == b))).collect())
                    .collect();
                for _ in 0..i {
                    acc = integer_matmul(&acc, m);
                }
                bareiss_rank(&acc)
            }
            Entries::Prime(m, p) => {
                let mut acc: Vec<Vec<u64>> = (0..n)
                    .map(|a| (0..n).map(|b| u64::from(a == b)).collect())
                    .collect();
                for _ in 0..i {
                    acc = modp::mat_mul(&acc, m, *p);
                }
                modp::rank(&acc, *p)
            }
        }
    }

    /// `dim ker N^i` for `i = 1..=n`.
    pub fn kernel_dims(&self) -> Vec<u32> {
        (1..=self.n as u32)
            .map(|i| (self.n - self.rank_of_power(i)) as u32)
            .collect()
    }

    /// `g N g^{-1}` for an invertible `g` over the same field.
    pub fn conjugate_by(&self, g: &[Vec<i64>]) -> Result<Self> {
        let n = self.n;
        if g.len() != n || g.iter().any(|r| r.len() != n) {
            return domain("conjugating matrix has the wrong size");
        }
        match &self.entries {
            Entries::Rational(m) => {
                let gq: Vec<Vec<Rational>> = g
                    .iter()
                    .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                    .collect();
                let gi = crate::linalg::rational_inverse(&gq)
                    .ok_or_else(|| Error::Domain("conjugating matrix is singular".into()))?;
                let mq: Vec<Vec<Rational>> = m
                    .iter()
                    .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
                    .collect();
                let prod = rat_mul(&rat_mul(&gq, &mq), &gi);
                Self::rational(&prod)
            }
            Entries::Prime(m, p) => {
                let gp: Vec<Vec<u64>> = g
                    .iter()
                    .map(|r| r.iter().map(|&x| x.rem_euclid(*p as i64) as u64).collect())
                    .collect();
                let gi = modp_inverse(&gp, *p)
                    .ok_or_else(|| Error::Domain("conjugating matrix is singular".into()))?;
                let prod = modp::mat_mul(&modp::mat_mul(&gp, m, *p), &gi, *p);
                let rows: Vec<Vec<i64>> = prod
                    .iter()
                    .map(|r| r.iter().map(|&x| x as i64).collect())
                    .collect();
                Self::mod_p(&rows, *p)
            }
        }
    }
}

fn square(rows: usize, lens: impl Iterator<Item = usize>) -> Result<usize> {
    if rows == 0 {
        return domain("empty matrix");
    }
    let mut lens = lens;
    if lens.any(|l| l != rows) {
        return domain("matrix is not square");
    }
    Ok(rows)
}

fn parse_entry(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(x) => x
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| Error::Domain(format!("{x} is not an integer"))),
        Value::String(s) => s
            .parse::<Rational>()
            .map_err(|_| Error::Domain(format!("cannot parse {s:?} as a rational"))),
        _ => domain(format!("unexpected matrix entry {v}")),
    }
}

fn rat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = b[0].len();
    a.iter()
        .map(|r| {
            (0..n)
                .map(|j| {
                    r.iter()
                        .zip(b)
                        .fold(Rational::zero(), |acc, (x, row)| acc + x * &row[j])
                })
                .collect()
        })
        .collect()
}

fn modp_inverse(g: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = g.len();
    let mut aug: Vec<Vec<u64>> = g
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    let pivots = modp::rref(&mut aug, p);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// The Jordan type: `λ` with `Σ_k min(λ_k, i) = dim ker N^i`.
pub fn jordan_partition(op: &NilpotentOp) -> Partition {
    let dims = op.kernel_dims();
    let mut prev = 0;
    let conj: Vec<u32> = dims
        .iter()
        .map(|&d| {
            let c = d - prev;
            prev = d;
            c
        })
        .filter(|&c| c > 0)
        .collect();
    Partition::from_parts(conj).conjugate()
}

/// `dim ker N^i ≥ Σ_k min(P_k, i)` for all `i`.
pub fn stratum_compare(op: &NilpotentOp, p: &Partition) -> Result<bool> {
    if p.degree() as usize != op.n {
        return domain(format!("{p} is not a partition of {}", op.n));
    }
    let by_kernels = op
        .kernel_dims()
        .iter()
        .enumerate()
        .all(|(i, &d)| d >= p.kernel_dim(i as u32 + 1));
    debug_assert_eq!(by_kernels, leq(p, &jordan_partition(op)));
    Ok(by_kernels)
}

/// `dim ker N^i` as a function of the Jordan type alone.
pub fn kernel_profile(lambda: &Partition) -> Vec<u32> {
    (1..=lambda.degree()).map(|i| lambda.kernel_dim(i)).collect()
}
