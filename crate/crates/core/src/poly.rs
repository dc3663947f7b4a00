//! Sparse multivariate polynomials over Q(ξ_r).
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under graded
//! reverse-lexicographic order, so every polynomial has one canonical form and
//! printing is deterministic. No zero coefficient is ever stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exponent vector of a single monomial x1^e1 … xn^en.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exponents: vec![0; nvars],
        }
    }

    /// x_i as a monomial, 0-based variable index.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[i] = 1;
        Monomial { exponents }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: other
                .exponents
                .iter()
                .zip(&self.exponents)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }
}

/// Graded reverse-lexicographic order: higher total degree wins; at equal
/// degree the monomial whose last differing exponent is smaller is larger.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for j in (0..self.exponents.len()).rev() {
            match self.exponents[j].cmp(&other.exponents[j]) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse exact polynomial in `nvars` variables.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize, r: u32) -> Self {
        Self::constant(nvars, Scalar::one(r))
    }

    /// The variable x_{i+1} (0-based index) with coefficients of order r.
    pub fn variable(nvars: usize, i: usize, r: u32) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(nvars, i), Scalar::one(r));
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(nvars: usize, iter: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in iter {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn monomial_term(nvars: usize, m: Monomial, c: Scalar) -> Self {
        Self::from_terms(nvars, [(m, c)])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Some(d) when all terms share total degree d; zero counts as homogeneous
    /// of every degree and reports None here.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let first = it.next()?.degree();
        if it.all(|m| m.degree() == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().degree() == 0)
    }

    pub fn constant_value(&self, r: u32) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero(r));
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    fn add_term(&mut self, m: &Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::MixedVariableCount(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, &c.neg());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(&ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let r = self.scalar_order().unwrap_or(1);
        let mut acc = MultiPoly::one(self.nvars, r);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same nvars");
        }
        acc
    }

    /// The cyclotomic order of the coefficients, None for the zero polynomial.
    pub fn scalar_order(&self) -> Option<u32> {
        self.terms.values().next().map(|c| c.order())
    }

    /// Exact quotient p / q; `NotDivisible` when none exists. Division by the
    /// leading term under grevlex terminates because the order is
    /// multiplicative, and a failed leading-term step certifies
    /// indivisibility for a single divisor.
    pub fn exact_divide(&self, q: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(q)?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (qm, qc) = q.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading() {
            if !qm.divides(rm) {
                return Err(Error::NotDivisible(format!("{self} by {q}")));
            }
            let m = qm.quotient_into(rm);
            let c = rc.try_div(qc)?;
            let piece = MultiPoly::monomial_term(self.nvars, m, c);
            rem = rem.try_sub(&piece.try_mul(q)?)?;
            quot = quot.try_add(&piece)?;
        }
        Ok(quot)
    }

    pub fn divides(&self, other: &MultiPoly) -> bool {
        other.exact_divide(self).is_ok()
    }

    /// Formal partial derivative with respect to x_{i+1} (0-based index).
    pub fn partial_derivative(&self, i: usize) -> Result<MultiPoly> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange(i, self.nvars));
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents.clone();
            exps[i] = e - 1;
            let factor = Scalar::from_int(e as i64, c.order());
            out.add_term(&Monomial::new(exps), &(c * &factor));
        }
        Ok(out)
    }

    /// Directional derivative Σ v_i ∂_i with exact rational direction.
    pub fn directional_derivative(&self, v: &[num_rational::BigRational]) -> Result<MultiPoly> {
        let r = self.scalar_order().unwrap_or(2);
        let mut out = MultiPoly::zero(self.nvars);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let d = self.partial_derivative(i)?;
            out = out.try_add(&d.scale(&Scalar::from_rational(vi.clone(), r)))?;
        }
        Ok(out)
    }

    /// Remap variables and scale them: x_i ↦ factor_i * x_{target(i)}.
    /// This is the substitution primitive behind the group action.
    pub fn substitute_scaled_vars(&self, target: &[usize], factor: &[Scalar]) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; self.nvars];
            let mut coeff = c.clone();
            for (i, &e) in m.exponents.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                exps[target[i]] += e;
                coeff = &coeff * &factor[i].pow(e as u64);
            }
            out.add_term(&Monomial::new(exps), &coeff);
        }
        out
    }
}

fn monomial_string(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(format!("x{}", i + 1));
        } else {
            parts.push(format!("x{}^{}", i + 1, e));
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    /// Canonical text form: terms in descending grevlex order, rationals as
    /// `a/b`, root-of-unity powers as `ξ^k`, e.g. `3/2*x1^2*x2 + ξ^1*x3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let ms = monomial_string(m);
            let cs = if !c.is_single_term() {
                format!("{c}")
            } else if c.is_one() {
                if ms.is_empty() {
                    "1".to_string()
                } else {
                    String::new()
                }
            } else if c.neg().is_one() {
                if ms.is_empty() {
                    "-1".to_string()
                } else {
                    "-".to_string()
                }
            } else {
                format!("{c}")
            };
            let term = match (cs.as_str(), ms.as_str()) {
                ("", m) => m.to_string(),
                ("-", m) => format!("-{m}"),
                (c, "") => c.to_string(),
                (c, m) => format!("{c}*{m}"),
            };
            if idx == 0 {
                out.push_str(&term);
            } else if let Some(stripped) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All monomials of the given total degree in `nvars` variables, in a fixed
/// deterministic order (first exponent descending).
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(nvars: usize, pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == nvars - 1 {
            current[pos] = left;
            out.push(Monomial::new(current.clone()));
            return;
        }
        for e in (0..=left).rev() {
            current[pos] = e;
            rec(nvars, pos + 1, left - e, current, out);
        }
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::new(vec![]));
        }
        return out;
    }
    rec(nvars, 0, degree, &mut current, &mut out);
    out
}

/// Dimension of the space of homogeneous degree-d polynomials in n variables.
pub fn homogeneous_dimension(nvars: usize, degree: u32) -> usize {
    // binom(d + n - 1, n - 1)
    let n = nvars as u128;
    let d = degree as u128;
    if n == 0 {
        return if d == 0 { 1 } else { 0 };
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for k in 1..n {
        num *= d + k;
        den *= k;
    }
    (num / den) as usize
}
