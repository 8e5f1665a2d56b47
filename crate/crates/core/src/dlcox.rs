//! Deligne–Lusztig characters `R_w(χ)` of `GL_n(F_q)` induced from the Coxeter torus
//! `T_w(F_q) ≅ F_{q^n}^×`.
//!
//! On a semisimple class `R_w(χ)` vanishes unless the class has a single minimal polynomial
//! `f` of degree `d | n`, where
//!
//! ```text
//! R_w(χ)(x) = ε_G ε_w (-1)^{n + n/d} (GL_{n/d}(F_{q^d}) : F_{q^n}^×)_{p'} Σ_{γ ∈ Gal(F_{q^d}/F_q)} χ(γx)
//! ```
//!
//! with `ε_G = (-1)^n`, `ε_w = -1`. On an arbitrary class `{f ↦ μ}` with `|μ| = n/d` the
//! value is `Q^μ_{(n/d)}(q^d)·Σ_γ χ(γx)`, a Green polynomial times the same Galois sum; this
//! agrees with the semisimple formula at `μ = (1^{n/d})`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::classfun::{ClassFunction, Support};
use crate::cyclotomics::{Cyclotomic, Rational};
use crate::ffield::{self, MultChar};
use crate::glnq::{GLnClassData, GroupContext, IrrPoly};
use crate::partitions::{self, Partition};
use crate::{domain, Result};

/// The pair `(T_w, χ)` with `T_w` the Coxeter torus of `GL_n(F_q)`.
#[derive(Clone)]
pub struct CoxeterChar {
    ctx: Arc<GroupContext>,
    chi: MultChar,
}

impl std::fmt::Debug for CoxeterChar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "R_w(χ_{}) on {:?}", self.chi.e, self.ctx)
    }
}

impl CoxeterChar {
    pub fn new(ctx: Arc<GroupContext>, chi: MultChar) -> Result<Self> {
        if chi.q != ctx.q() || chi.n != ctx.n() {
            return domain(format!(
                "character of F_{{{}^{}}}^× does not match {:?}",
                chi.q, chi.n, ctx
            ));
        }
        Ok(CoxeterChar { ctx, chi })
    }

    /// `χ_e` for `GL_n(F_q)`.
    pub fn from_exponent(n: u32, q: u64, e: i64) -> Result<Self> {
        let ctx = GroupContext::get(n, q)?;
        Self::new(ctx, MultChar::new(q, n, e)?)
    }

    pub fn ctx(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn chi(&self) -> MultChar {
        self.chi
    }

    /// `ε_G ε_w = (-1)^{n+1}`.
    pub fn sign(&self) -> i64 {
        self.ctx.eps_g() * self.ctx.eps_w()
    }

    /// `Σ_{i<d} χ(x^{q^i})` for a root `x` of `f`, `deg f = d | n`.
    pub fn galois_sum(&self, f: &IrrPoly) -> Result<Cyclotomic> {
        let j = self.ctx.root_dlog_in_top(f)?;
        let m = self.chi.modulus();
        let mut terms = Vec::with_capacity(f.degree() as usize);
        let mut x = j;
        for _ in 0..f.degree() {
            terms.push(self.chi.value_at_dlog(x));
            x = (x as u128 * self.ctx.q() as u128 % m as u128) as u64;
        }
        Ok(Cyclotomic::sum(&terms))
    }
}

/// `(|GL_m(F_Q)| / (Q^m - 1))_{p'} = Π_{i=1}^{m-1} (Q^i - 1)`.
pub fn coxeter_index_p_prime(m: u32, big_q: u64) -> BigInt {
    let qb = BigInt::from(big_q);
    (1..m).fold(BigInt::one(), |acc, i| acc * (qb.pow(i) - BigInt::one()))
}

fn sign_of(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn rw_semisimple(spec: &CoxeterChar, c: &GLnClassData) -> Result<Cyclotomic> {
    if !c.is_semisimple() {
        return domain(format!("{c} is not semisimple"));
    }
    if c.dimension() != spec.ctx.n() {
        return domain(format!("{c} is not a class of {:?}", spec.ctx));
    }
    let Some((f, _)) = c.single() else {
        return Ok(Cyclotomic::zero());
    };
    let n = spec.ctx.n();
    let d = f.degree();
    let m = n / d;
    let index = coxeter_index_p_prime(m, spec.ctx.q().pow(d));
    let sign = spec.sign() * sign_of(n + m);
    Ok(spec
        .galois_sum(f)?
        .scale(&Rational::from_integer(index * BigInt::from(sign))))
}

/// `R_w(χ)` on a single class.
pub fn rw_value(spec: &CoxeterChar, c: &GLnClassData) -> Result<Cyclotomic> {
    let Some((f, mu)) = c.single() else {
        return Ok(Cyclotomic::zero());
    };
    let d = f.degree();
    let m = spec.ctx.n() / d;
    let green = partitions::green_polynomial(mu, &Partition::single_row(m), spec.ctx.q().pow(d))?;
    if green.is_zero() {
        return Ok(Cyclotomic::zero());
    }
    Ok(spec.galois_sum(f)?.scale(&Rational::from_integer(green)))
}

pub fn rw_full(spec: &CoxeterChar) -> Result<ClassFunction> {
    let ctx = spec.ctx.clone();
    let values = ctx
        .classes()
        .par_iter()
        .map(|c| rw_value(spec, c))
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::from_values(ctx, values)
}

/// `(-1)^{n+1} R_w(χ)` for regular `χ`: an irreducible cuspidal character.
pub fn cuspidal(spec: &CoxeterChar) -> Result<ClassFunction> {
    if !spec.chi.is_regular() {
        return domain(format!(
            "χ_{} of F_{{{}^{}}}^× is not regular",
            spec.chi.e, spec.chi.q, spec.chi.n
        ));
    }
    Ok(rw_full(spec)?.scale_int(spec.sign()))
}

/// Steinberg character: `ε_G (-1)^{Σ m_f} |C(s)|_p` at a semisimple class
/// `{f ↦ (1^{m_f})}`, zero elsewhere.
pub fn steinberg(ctx: &Arc<GroupContext>) -> ClassFunction {
    let p = BigInt::from(ctx.p());
    let c = ctx.clone();
    ClassFunction::from_fn(ctx.clone(), move |i| {
        let cl = &c.classes()[i];
        if !cl.is_semisimple() {
            return Cyclotomic::zero();
        }
        let total_m: u32 = cl.entries().map(|(_, l)| l.degree()).sum();
        let mut z = c.centralizer(i).clone();
        let mut p_part = BigInt::one();
        while (&z % &p).is_zero() {
            z /= &p;
            p_part *= &p;
        }
        Cyclotomic::from_bigint(p_part * BigInt::from(c.eps_g() * sign_of(total_m)))
    })
}

/// Semisimple values of `Ind_{F_{q^n}^×}^{GL_n(F_q)} χ`, supported on the semisimple classes.
pub fn induced_from_coxeter_ss(spec: &CoxeterChar) -> Result<ClassFunction> {
    let ctx = spec.ctx.clone();
    let mut out = ClassFunction::zero(ctx.clone(), Support::EllRegular(ctx.p() as u64));
    let torus = BigInt::from(spec.chi.modulus());
    for i in ctx.semisimple_indices() {
        let Some((f, _)) = ctx.classes()[i].single() else {
            continue;
        };
        let ratio = Rational::new(ctx.centralizer(i).clone(), torus.clone());
        out.set(i, spec.galois_sum(f)?.scale(&ratio));
    }
    Ok(out)
}

/// Coefficients `χ^λ(w)` of `R_w(1) = Σ_λ χ^λ(w) R_λ`, over partitions of `n` in
/// reverse-lexicographic order.
pub fn unipotent_coeffs(n: u32, w_cycle_type: &Partition) -> Result<Vec<(Partition, i64)>> {
    if w_cycle_type.degree() != n {
        return domain(format!("{w_cycle_type} is not a cycle type in S_{n}"));
    }
    partitions::partitions(n)
        .into_iter()
        .map(|l| {
            let v = partitions::sn_character(&l, w_cycle_type)?;
            Ok((l, v))
        })
        .collect()
}

/// Lusztig-series label of `(T_w, χ_e)`: the class of `ζ^e`, `ζ` the tower generator.
pub fn geometric_class_of_char(spec: &CoxeterChar) -> GLnClassData {
    spec.ctx.class_of_torus_dlog(spec.chi.e)
}

/// `σ⁺_{P_min}(π_m) = (-1)^{n+1} R_w(θ)` with `θ = θ_m ∘ N_{F_{q^n}/F_{q^m}}`.
pub fn sigma_plus_min(ctx: &Arc<GroupContext>, theta_m: &MultChar) -> Result<ClassFunction> {
    if theta_m.q != ctx.q() {
        return domain(format!("θ_m is a character over F_{}, not F_{}", theta_m.q, ctx.q()));
    }
    if ctx.n() % theta_m.n != 0 {
        return domain(format!("{} does not divide {}", theta_m.n, ctx.n()));
    }
    if !theta_m.is_regular() {
        return domain(format!("θ_m = χ_{} is not regular", theta_m.e));
    }
    let theta = ffield::norm_inflate_char(theta_m, ctx.n())?;
    let spec = CoxeterChar::new(ctx.clone(), theta)?;
    Ok(rw_full(&spec)?.scale_int(spec.sign()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semisimple_examples() {
        let s = CoxeterChar::from_exponent(2, 3, 1).unwrap();
        let ctx = s.ctx().clone();
        assert_eq!(
            rw_semisimple(&s, &ctx.identity_class()).unwrap(),
            Cyclotomic::from_int(-2)
        );
        let split = ctx
            .classes()
            .iter()
            .find(|c| c.len() == 2)
            .unwrap();
        assert!(rw_semisimple(&s, split).unwrap().is_zero());
        let s = CoxeterChar::from_exponent(3, 2, 1).unwrap();
        let x = s.ctx().class_of_torus_dlog(1);
        let expected = Cyclotomic::sum(&[1i64, 2, 4].map(|k| Cyclotomic::root_of_unity(7, k)));
        assert_eq!(rw_semisimple(&s, &x).unwrap(), expected);
    }

    #[test]
    fn full_values_and_cuspidals() {
        for q in [2u64, 3] {
            let s = CoxeterChar::from_exponent(2, q, 1).unwrap();
            let ctx = s.ctx().clone();
            let one = ctx.poly_of_root(1, 0).unwrap();
            let reg = GLnClassData::new([(one, Partition::single_row(2))].into());
            assert_eq!(rw_value(&s, &reg).unwrap(), Cyclotomic::one());
        }
        let c = cuspidal(&CoxeterChar::from_exponent(2, 2, 1).unwrap()).unwrap();
        assert_eq!(c.degree(), Cyclotomic::one());
        let c = cuspidal(&CoxeterChar::from_exponent(2, 3, 1).unwrap()).unwrap();
        assert_eq!(c.degree(), Cyclotomic::from_int(2));
        assert_eq!(c.inner_product(&c).unwrap(), Cyclotomic::one());
        assert!(cuspidal(&CoxeterChar::from_exponent(2, 3, 4).unwrap()).is_err());
    }

    #[test]
    fn steinberg_values() {
        let ctx = GroupContext::get(2, 3).unwrap();
        let st = steinberg(&ctx);
        assert_eq!(st.degree(), Cyclotomic::from_int(3));
        assert_eq!(st.inner_product(&st).unwrap(), Cyclotomic::one());
        for (q, n) in [(2u64, 3u32), (3, 3), (2, 4)] {
            let ctx = GroupContext::get(n, q).unwrap();
            let st = steinberg(&ctx);
            assert_eq!(st.degree(), Cyclotomic::from_int(q.pow(n * (n - 1) / 2) as i64));
            assert_eq!(st.inner_product(&st).unwrap(), Cyclotomic::one());
        }
    }

    #[test]
    fn induced_identity() {
        for (n, q) in [(2u32, 3u64), (3, 2), (2, 4)] {
            let ctx = GroupContext::get(n, q).unwrap();
            let st = steinberg(&ctx).brauer_restrict(ctx.p() as u64).unwrap();
            for e in 0..(q.pow(n) - 1) as i64 {
                let s = CoxeterChar::new(ctx.clone(), MultChar::new(q, n, e).unwrap()).unwrap();
                let ind = induced_from_coxeter_ss(&s).unwrap();
                let rw = rw_full(&s).unwrap().brauer_restrict(ctx.p() as u64).unwrap();
                let lhs = rw.mul(&st).unwrap().scale_int(s.sign());
                assert!(lhs.equals(&ind), "n={n} q={q} e={e}");
            }
        }
        let s = CoxeterChar::from_exponent(2, 3, 0).unwrap();
        let ind = induced_from_coxeter_ss(&s).unwrap();
        assert_eq!(ind.degree(), Cyclotomic::from_int(6));
    }

    #[test]
    fn unipotent_and_labels() {
        let c = unipotent_coeffs(3, &Partition::single_row(3)).unwrap();
        assert_eq!(c.iter().map(|x| x.1).collect::<Vec<_>>(), vec![1, -1, 1]);
        let c = unipotent_coeffs(3, &Partition::single_column(3)).unwrap();
        assert_eq!(c.iter().map(|x| x.1).collect::<Vec<_>>(), vec![1, 2, 1]);
        let s = CoxeterChar::from_exponent(2, 2, 1).unwrap();
        let g = geometric_class_of_char(&s);
        assert_eq!(g.single().unwrap().0.coeffs(), &[1, 1, 1]);
        let s = CoxeterChar::from_exponent(2, 3, 4).unwrap();
        assert_eq!(geometric_class_of_char(&s).to_string(), "{x+1 ↦ (1,1)}");
        let s = CoxeterChar::from_exponent(2, 3, 0).unwrap();
        assert_eq!(geometric_class_of_char(&s), s.ctx().identity_class());
    }

    #[test]
    fn sigma_plus_min_unipotent() {
        let ctx = GroupContext::get(2, 3).unwrap();
        let sp = sigma_plus_min(&ctx, &MultChar::trivial(3, 1)).unwrap();
        let one = ClassFunction::constant(ctx.clone(), Cyclotomic::one());
        assert!(sp.equals(&steinberg(&ctx).sub(&one).unwrap()));
        assert!(sigma_plus_min(&ctx, &MultChar::new(3, 2, 4).unwrap()).is_err());
    }
}
