//! Cyclotomic-valued class functions on `GL_n(F_q)`.
//!
//! Values are stored sparsely by class index (canonical order of the [`GroupContext`]); a
//! missing class means zero. A function is supported either on all classes or on the
//! `ℓ`-regular classes for one prime `ℓ`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cyclotomics::{Cyclotomic, Rational};
use crate::glnq::{GLnClassData, GroupContext};
use crate::{domain, linalg, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Support {
    All,
    /// Classes of elements of order prime to `ℓ`; for `ℓ = p` these are the semisimple classes.
    EllRegular(u64),
}

#[derive(Clone)]
pub struct ClassFunction {
    ctx: Arc<GroupContext>,
    support: Support,
    values: BTreeMap<usize, Cyclotomic>,
}

/// Outcome of [`decompose_in_basis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Coefficients(Vec<Rational>),
    NotInSpan,
}

impl Decomposition {
    pub fn coefficients(&self) -> Option<&[Rational]> {
        match self {
            Decomposition::Coefficients(c) => Some(c),
            Decomposition::NotInSpan => None,
        }
    }
}

fn same_group(a: &GroupContext, b: &GroupContext) -> bool {
    a.n() == b.n() && a.q() == b.q()
}

impl ClassFunction {
    pub fn zero(ctx: Arc<GroupContext>, support: Support) -> Self {
        ClassFunction {
            ctx,
            support,
            values: BTreeMap::new(),
        }
    }

    /// Builds a function on all classes from a value per class index.
    pub fn from_fn(ctx: Arc<GroupContext>, mut f: impl FnMut(usize) -> Cyclotomic) -> Self {
        let values = (0..ctx.num_classes())
            .map(|i| (i, f(i)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        ClassFunction {
            ctx,
            support: Support::All,
            values,
        }
    }

    /// Dense value list in class order.
    pub fn from_values(ctx: Arc<GroupContext>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != ctx.num_classes() {
            return domain(format!(
                "{} values for {} classes",
                values.len(),
                ctx.num_classes()
            ));
        }
        let values = values
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Ok(ClassFunction {
            ctx,
            support: Support::All,
            values,
        })
    }

    pub fn constant(ctx: Arc<GroupContext>, c: Cyclotomic) -> Self {
        Self::from_fn(ctx, |_| c.clone())
    }

    pub fn ctx(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn support(&self) -> Support {
        self.support
    }

    /// Class indices in the support, ascending.
    pub fn support_indices(&self) -> Vec<usize> {
        match self.support {
            Support::All => (0..self.ctx.num_classes()).collect(),
            Support::EllRegular(l) => self.ctx.ell_regular_indices(l),
        }
    }

    pub fn value(&self, i: usize) -> Cyclotomic {
        self.values.get(&i).cloned().unwrap_or_default()
    }

    pub fn value_at(&self, c: &GLnClassData) -> Result<Cyclotomic> {
        match self.ctx.class_index(c) {
            Some(i) => Ok(self.value(i)),
            None => domain(format!("{c} is not a class of {:?}", self.ctx)),
        }
    }

    pub fn set(&mut self, i: usize, v: Cyclotomic) {
        if v.is_zero() {
            self.values.remove(&i);
        } else {
            self.values.insert(i, v);
        }
    }

    /// Nonzero values, by class index.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Cyclotomic)> {
        self.values.iter().map(|(i, v)| (*i, v))
    }

    /// Value at the identity.
    pub fn degree(&self) -> Cyclotomic {
        self.value(self.ctx.identity_index())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if !same_group(&self.ctx, &other.ctx) {
            return domain(format!(
                "class functions on {:?} and {:?}",
                self.ctx, other.ctx
            ));
        }
        if self.support != other.support {
            return domain(format!(
                "support mismatch: {:?} vs {:?}",
                self.support, other.support
            ));
        }
        Ok(())
    }

    /// `|G|^{-1} Σ_c |c|·f(c)·conj(g(c))`.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        self.check_compatible(other)?;
        if self.support != Support::All {
            return domain("inner products need functions on all classes");
        }
        let idx: Vec<usize> = self
            .values
            .keys()
            .filter(|i| other.values.contains_key(i))
            .copied()
            .collect();
        let terms: Vec<Cyclotomic> = idx
            .par_iter()
            .map(|&i| {
                let v = &self.values[&i] * &other.values[&i].conj();
                v.scale(&Rational::from_integer(self.ctx.class_size(i).clone()))
            })
            .collect();
        let total = Cyclotomic::sum(&terms);
        Ok(total.scale(&Rational::new(BigInt::from(1), self.ctx.order().clone())))
    }

    /// Restriction to the `ℓ`-regular classes.
    pub fn brauer_restrict(&self, ell: u64) -> Result<Self> {
        match self.support {
            Support::EllRegular(l) if l == ell => Ok(self.clone()),
            Support::EllRegular(l) => domain(format!(
                "function already restricted to {l}-regular classes"
            )),
            Support::All => {
                if !crate::arith::is_prime(ell) {
                    return domain(format!("{ell} is not prime"));
                }
                let keep = self.ctx.ell_regular_indices(ell);
                let values = keep
                    .into_iter()
                    .filter_map(|i| self.values.get(&i).map(|v| (i, v.clone())))
                    .collect();
                Ok(ClassFunction {
                    ctx: self.ctx.clone(),
                    support: Support::EllRegular(ell),
                    values,
                })
            }
        }
    }

    /// Exact equality of values over the support.
    pub fn equals(&self, other: &Self) -> bool {
        self.check_compatible(other).is_ok() && self.values == other.values
    }

    /// Indices of classes where the two functions differ.
    pub fn differences(&self, other: &Self) -> Vec<usize> {
        self.support_indices()
            .into_iter()
            .filter(|&i| self.value(i) != other.value(i))
            .collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = ClassFunction::zero(self.ctx.clone(), self.support);
        let keys: std::collections::BTreeSet<usize> =
            self.values.keys().chain(other.values.keys()).copied().collect();
        for i in keys {
            out.set(i, f(&self.value(i), &other.value(i)));
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = ClassFunction::zero(self.ctx.clone(), self.support);
        for (&i, v) in &self.values {
            out.set(i, v * c);
        }
        out
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Cyclotomic::from_int(k))
    }

    pub fn neg(&self) -> Self {
        self.scale_int(-1)
    }

    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        for v in out.values.values_mut() {
            *v = v.conj();
        }
        out
    }

    /// Integer combination `Σ c_i f_i`; all functions must share group and support.
    pub fn linear_combination(terms: &[(i64, &ClassFunction)]) -> Result<Self> {
        let Some((_, first)) = terms.first() else {
            return domain("empty linear combination");
        };
        let mut acc = ClassFunction::zero(first.ctx.clone(), first.support);
        for (c, f) in terms {
            acc = acc.add(&f.scale_int(*c))?;
        }
        Ok(acc)
    }

    /// Values as a dense list over the support, in class order.
    pub fn dense_values(&self) -> Vec<Cyclotomic> {
        self.support_indices()
            .into_iter()
            .map(|i| self.value(i))
            .collect()
    }
}

impl std::fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClassFunction")
            .field("group", &self.ctx)
            .field("support", &self.support)
            .field("values", &self.values)
            .finish()
    }
}

/// Exact rational coefficients `c` with `Σ c_i basis_i = f`, or [`Decomposition::NotInSpan`].
pub fn decompose_in_basis(f: &ClassFunction, basis: &[ClassFunction]) -> Result<Decomposition> {
    for b in basis {
        f.check_compatible(b)?;
    }
    let idx = f.support_indices();
    let conductor = basis
        .iter()
        .chain(std::iter::once(f))
        .flat_map(|g| g.values.values())
        .fold(1u64, |acc, v| crate::arith::lcm(acc, v.conductor()));
    let flatten = |g: &ClassFunction| -> Result<Vec<Rational>> {
        let mut out = Vec::new();
        for &i in &idx {
            out.extend(g.value(i).coordinates_in(conductor)?);
        }
        Ok(out)
    };
    let columns = basis.iter().map(flatten).collect::<Result<Vec<_>>>()?;
    let target = flatten(f)?;
    if linalg::rank(&transpose(&columns)) < basis.len() {
        return domain("basis functions are linearly dependent");
    }
    Ok(match linalg::solve_columns(&columns, &target) {
        Some(c) => Decomposition::Coefficients(c),
        None => Decomposition::NotInSpan,
    })
}

fn transpose(cols: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let rows = cols.first().map_or(0, |c| c.len());
    (0..rows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

/// CSV table: one row per supported class, one column per function.
pub fn table_csv(functions: &[(&str, &ClassFunction)]) -> Result<String> {
    let Some((_, first)) = functions.first() else {
        return Ok("class\n".to_string());
    };
    for (_, g) in functions {
        first.check_compatible(g)?;
    }
    let mut out = String::from("class");
    for (name, _) in functions {
        out.push_str(&format!(",{}", csv_field(name)));
    }
    out.push('\n');
    for i in first.support_indices() {
        out.push_str(&csv_field(&first.ctx.classes()[i].to_string()));
        for (_, g) in functions {
            out.push(',');
            out.push_str(&csv_field(&g.value(i).to_string()));
        }
        out.push('\n');
    }
    Ok(out)
}

/// CSV table transposed: one row per function, one column per supported class.
pub fn table_csv_rows(functions: &[(&str, &ClassFunction)]) -> Result<String> {
    let Some((_, first)) = functions.first() else {
        return Ok("character\n".to_string());
    };
    for (_, g) in functions {
        first.check_compatible(g)?;
    }
    let support = first.support_indices();
    let mut out = String::from("character");
    for &i in &support {
        out.push(',');
        out.push_str(&csv_field(&first.ctx.classes()[i].to_string()));
    }
    out.push('\n');
    for (name, g) in functions {
        out.push_str(&csv_field(name));
        for &i in &support {
            out.push(',');
            out.push_str(&csv_field(&g.value(i).to_string()));
        }
        out.push('\n');
    }
    Ok(out)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', ' ', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// JSON table: `{"classes": [descriptor…], "functions": {name: [value…]}}`.
pub fn table_json(functions: &[(&str, &ClassFunction)]) -> Result<Value> {
    let Some((_, first)) = functions.first() else {
        return Ok(json!({"classes": [], "functions": {}}));
    };
    for (_, g) in functions {
        first.check_compatible(g)?;
    }
    let idx = first.support_indices();
    let classes: Vec<Value> = idx.iter().map(|&i| first.ctx.class_json(i)).collect();
    let mut funcs = serde_json::Map::new();
    for (name, g) in functions {
        let vals: Vec<Value> = idx
            .iter()
            .map(|&i| serde_json::to_value(g.value(i)).expect("cyclotomic serializes"))
            .collect();
        funcs.insert(name.to_string(), Value::Array(vals));
    }
    Ok(json!({"classes": classes, "functions": funcs}))
}

/// `Σ_c |c|·|f(c)|²` divided by `|G|`, as a rational; the squared norm of `f`.
pub fn norm_squared(f: &ClassFunction) -> Result<Rational> {
    f.inner_product(f)?
        .to_rational()
        .ok_or_else(|| crate::Error::Inconsistent("norm is not rational".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomics::rat;

    fn steinberg_2_3() -> ClassFunction {
        // St on GL_2(F_3): q at 1, 1 at split regular, -1 at elliptic, q·ε at central -1, 0 off
        let ctx = GroupContext::get(2, 3).unwrap();
        let c = ctx.clone();
        ClassFunction::from_fn(ctx, move |i| {
            let cl = &c.classes()[i];
            if !cl.is_semisimple() {
                return Cyclotomic::zero();
            }
            match cl.single() {
                Some((f, _)) if f.degree() == 1 => Cyclotomic::from_int(3),
                Some(_) => Cyclotomic::from_int(-1),
                None => Cyclotomic::one(),
            }
        })
    }

    #[test]
    fn steinberg_norm_and_restriction() {
        let st = steinberg_2_3();
        assert_eq!(st.inner_product(&st).unwrap(), Cyclotomic::one());
        let ctx = st.ctx().clone();
        let one = ClassFunction::constant(ctx.clone(), Cyclotomic::one());
        assert_eq!(st.inner_product(&one).unwrap(), Cyclotomic::zero());
        let ind = st.add(&one).unwrap();
        assert_eq!(ind.inner_product(&ind).unwrap(), Cyclotomic::from_int(2));
        let br = st.sub(&one).unwrap().brauer_restrict(3).unwrap();
        assert_eq!(br.support_indices().len(), 6);
        assert_eq!(br.value(ctx.identity_index()), Cyclotomic::from_int(2));
        assert!(br.brauer_restrict(3).unwrap().equals(&br));
        assert!(br.brauer_restrict(2).is_err());
        assert!(br.inner_product(&br).is_err());
        let triv = one.brauer_restrict(2).unwrap();
        assert!(triv.dense_values().iter().all(|v| *v == Cyclotomic::one()));
    }

    #[test]
    fn decomposition() {
        let st = steinberg_2_3();
        let ctx = st.ctx().clone();
        let one = ClassFunction::constant(ctx.clone(), Cyclotomic::one());
        let rw1 = one.sub(&st).unwrap();
        let d = decompose_in_basis(&rw1, &[one.clone(), st.clone()]).unwrap();
        assert_eq!(d, Decomposition::Coefficients(vec![rat(1, 1), rat(-1, 1)]));
        let mut off = one.clone();
        off.set(0, Cyclotomic::root_of_unity(4, 1));
        assert_eq!(
            decompose_in_basis(&off, &[one.clone(), st.clone()]).unwrap(),
            Decomposition::NotInSpan
        );
        assert!(decompose_in_basis(&one, &[one.clone(), one.scale_int(2)]).is_err());
    }

    #[test]
    fn tables() {
        let st = steinberg_2_3();
        let csv = table_csv(&[("St", &st)]).unwrap();
        assert_eq!(csv.lines().count(), 9);
        let js = table_json(&[("St", &st)]).unwrap();
        assert_eq!(js["classes"].as_array().unwrap().len(), 8);
    }
}
