//! Sparse homogeneous polynomials over an exact field.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::field::Field;

/// Exponent vector of a monomial.
///
/// Ordered graded-lexicographically with `x1` largest, so that iterating a
/// degree-`d` term map visits monomials in [`monomial_index`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial(e)
    }

    /// Monomial with the listed variables (repeats allowed).
    pub fn from_vars(num_vars: usize, vars: &[usize]) -> Self {
        let mut e = vec![0; num_vars];
        for &v in vars {
            e[v] += 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Variables with multiplicity, in increasing index order.
    pub fn vars(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| core::iter::repeat_n(i, e as usize))
            .collect()
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

/// `C(n + d - 1, d)`: the number of degree-`d` monomials in `n` variables.
pub fn count_monomials(num_vars: usize, degree: u32) -> usize {
    if num_vars == 0 {
        return usize::from(degree == 0);
    }
    binomial(num_vars + degree as usize - 1, degree as usize)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Position of `m` among the degree-`d` monomials in graded-lex order.
pub fn monomial_index(m: &Monomial, degree: u32, num_vars: usize) -> Result<usize> {
    if m.num_vars() != num_vars {
        return Err(Error::DimensionMismatch {
            expected: num_vars,
            found: m.num_vars(),
        });
    }
    if m.degree() != degree {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: m.degree(),
        });
    }
    let mut index = 0;
    let mut remaining = degree;
    for (i, &e) in m.0.iter().enumerate() {
        let rest = num_vars - i - 1;
        // Monomials with a larger exponent at position i come first.
        for a in (e + 1)..=remaining {
            index += count_monomials(rest, remaining - a);
        }
        remaining -= e;
    }
    Ok(index)
}

/// Inverse of [`monomial_index`].
pub fn monomial_from_index(mut index: usize, degree: u32, num_vars: usize) -> Result<Monomial> {
    if index >= count_monomials(num_vars, degree) {
        return Err(Error::InvalidParameters(alloc::format!(
            "monomial index {index} out of range for degree {degree} in {num_vars} variables"
        )));
    }
    let mut exps = vec![0; num_vars];
    let mut remaining = degree;
    for i in 0..num_vars {
        let rest = num_vars - i - 1;
        if rest == 0 {
            exps[i] = remaining;
            break;
        }
        let mut a = remaining;
        loop {
            let block = count_monomials(rest, remaining - a);
            if index < block {
                break;
            }
            index -= block;
            a -= 1;
        }
        exps[i] = a;
        remaining -= a;
    }
    Ok(Monomial(exps))
}

/// All degree-`d` monomials in `n` variables, in index order.
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(count_monomials(num_vars, degree));
    let mut current = vec![0u32; num_vars];
    fill_monomials(&mut current, 0, degree, &mut out);
    out
}

fn fill_monomials(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 >= current.len() {
        if let Some(last) = current.last_mut() {
            *last = remaining;
            out.push(Monomial(current.clone()));
            *current.last_mut().unwrap() = 0;
        } else if remaining == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_monomials(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

/// A homogeneous polynomial with nonzero coefficients only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<K: Field> {
    field: K,
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, K::Elem>,
}

impl<K: Field> Polynomial<K> {
    pub fn zero(field: &K, num_vars: usize, degree: u32) -> Self {
        Polynomial {
            field: field.clone(),
            num_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial, merging repeated monomials and dropping zeros.
    /// Every monomial must have `num_vars` entries and total degree `degree`.
    pub fn from_terms(
        field: &K,
        num_vars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, K::Elem)>,
    ) -> Result<Self> {
        let mut p = Self::zero(field, num_vars, degree);
        for (m, c) in terms {
            if m.num_vars() != num_vars {
                return Err(Error::DimensionMismatch {
                    expected: num_vars,
                    found: m.num_vars(),
                });
            }
            if m.degree() != degree {
                return Err(Error::Inhomogeneous);
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// The linear form `Σ coeffs[i] x_i`.
    pub fn linear(field: &K, coeffs: &[K::Elem]) -> Self {
        let n = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(n, i), c.clone()));
        Self::from_terms(field, n, 1, terms).expect("linear terms are homogeneous")
    }

    pub fn constant(field: &K, num_vars: usize, c: K::Elem) -> Self {
        Self::from_terms(field, num_vars, 0, [(Monomial::one(num_vars), c)]).expect("constant is homogeneous")
    }

    fn add_term(&mut self, m: Monomial, c: K::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        let f = self.field.clone();
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(o.get(), &c);
                if f.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K::Elem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> K::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.field != other.field || self.num_vars != other.num_vars {
            return Err(Error::AmbientMismatch);
        }
        if self.degree != other.degree {
            return Err(Error::Inhomogeneous);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.field.neg(&self.field.one())))
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let f = &self.field;
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), f.mul(x, c)));
        Self::from_terms(f, self.num_vars, self.degree, terms).expect("scaling keeps homogeneity")
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field || self.num_vars != other.num_vars {
            return Err(Error::AmbientMismatch);
        }
        let f = &self.field;
        let mut out = Self::zero(f, self.num_vars, self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), f.mul(ca, cb));
            }
        }
        Ok(out)
    }

    /// Dense coefficients in degree-`d` graded-lex coordinates.
    pub fn coefficient_vector(&self) -> Vec<K::Elem> {
        let mut v = vec![self.field.zero(); count_monomials(self.num_vars, self.degree)];
        for (m, c) in &self.terms {
            let i = monomial_index(m, self.degree, self.num_vars).expect("stored monomials are homogeneous");
            v[i] = c.clone();
        }
        v
    }

    pub fn from_coefficient_vector(field: &K, num_vars: usize, degree: u32, v: &[K::Elem]) -> Result<Self> {
        let expected = count_monomials(num_vars, degree);
        if v.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: v.len(),
            });
        }
        let terms = monomials_of_degree(num_vars, degree).into_iter().zip(v.iter().cloned());
        Self::from_terms(field, num_vars, degree, terms)
    }

    /// Linear change of variables: `x_i ↦ images[i]`, each image a linear
    /// form over `target_vars` variables.
    pub fn substitute(&self, target_vars: usize, images: &[Vec<K::Elem>]) -> Result<Self> {
        if images.len() < self.num_vars {
            return Err(Error::UnassignedVariable(images.len()));
        }
        if images.len() > self.num_vars {
            return Err(Error::VariableOutOfRange {
                index: self.num_vars,
                num_vars: self.num_vars,
            });
        }
        if let Some(bad) = images.iter().find(|im| im.len() != target_vars) {
            return Err(Error::DimensionMismatch {
                expected: target_vars,
                found: bad.len(),
            });
        }
        let f = &self.field;
        let linear: Vec<_> = images.iter().map(|im| Polynomial::linear(f, im)).collect();
        let mut out = Self::zero(f, target_vars, self.degree);
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(f, target_vars, c.clone());
            for v in m.vars() {
                acc = acc.mul(&linear[v])?;
                if acc.is_zero() {
                    break;
                }
            }
            for (mm, cc) in acc.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    /// Formal partial derivative; coefficients are multiplied by the
    /// exponent inside the field, so they vanish when `p` divides it.
    pub fn partial_derivative(&self, var: usize) -> Result<Self> {
        if var >= self.num_vars {
            return Err(Error::VariableOutOfRange {
                index: var,
                num_vars: self.num_vars,
            });
        }
        let f = &self.field;
        let degree = self.degree.saturating_sub(1);
        let terms = self.terms.iter().filter(|(m, _)| m.0[var] > 0).map(|(m, c)| {
            let e = m.0[var];
            let mut exps = m.0.clone();
            exps[var] -= 1;
            (Monomial(exps), f.mul(c, &f.from_i64(i64::from(e))))
        });
        Self::from_terms(f, self.num_vars, degree, terms)
    }

    /// `f mod (ℓ)` in the chart that solves `ℓ = 0` for its first nonzero
    /// variable and drops that variable.
    pub fn reduce_mod_linear(&self, linear: &[K::Elem]) -> Result<Self> {
        if linear.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: linear.len(),
            });
        }
        let f = &self.field;
        let pivot = linear.iter().position(|c| !f.is_zero(c)).ok_or(Error::ZeroLinearForm)?;
        let inv = f.inv(&linear[pivot]);
        let target = self.num_vars - 1;
        let images: Vec<Vec<K::Elem>> = (0..self.num_vars)
            .map(|i| {
                let mut im = vec![f.zero(); target];
                if i == pivot {
                    // x_pivot = -(1/c) Σ_{j≠pivot} c_j x_j
                    for (j, c) in linear.iter().enumerate().filter(|&(j, _)| j != pivot) {
                        let slot = if j < pivot { j } else { j - 1 };
                        im[slot] = f.neg(&f.mul(c, &inv));
                    }
                } else {
                    im[if i < pivot { i } else { i - 1 }] = f.one();
                }
                im
            })
            .collect();
        self.substitute(target, &images)
    }

    /// Renders in the text grammar `c*x^e*y + ...` using the given names.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mut coeff = alloc::format!("{c}");
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            match (i, negative) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            let mut parts: Vec<String> = Vec::new();
            if coeff != "1" || m.degree() == 0 {
                parts.push(coeff);
            }
            for (v, &e) in m.0.iter().enumerate().filter(|(_, &e)| e > 0) {
                let mut s = names.get(v).cloned().unwrap_or_else(|| alloc::format!("x{}", v + 1));
                if e > 1 {
                    let _ = write!(s, "^{e}");
                }
                parts.push(s);
            }
            out.push_str(&parts.join("*"));
        }
        out
    }
}

/// Default names `x1, …, xn`.
pub fn default_names(num_vars: usize) -> Vec<String> {
    (1..=num_vars).map(|i| alloc::format!("x{i}")).collect()
}
