//! Exact rational functions: fractions of multivariate polynomials.
//!
//! No gcd reduction is attempted; equality is decided by cross-multiplication.
//! A light normalization (common monomial content, monic denominator) keeps
//! chained derivatives from accumulating spurious factors.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { num, den }.normalized())
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let r = p.scalar_order().unwrap_or(2);
        let den = MultiPoly::one(p.nvars(), r);
        RationalFunction { num: p, den }
    }

    pub fn zero(nvars: usize, r: u32) -> Self {
        RationalFunction {
            num: MultiPoly::zero(nvars),
            den: MultiPoly::one(nvars, r),
        }
    }

    pub fn one(nvars: usize, r: u32) -> Self {
        Self::from_poly(MultiPoly::one(nvars, r))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn order(&self) -> u32 {
        self.den.scalar_order().unwrap_or(2)
    }

    /// Strip a common monomial factor and make the denominator's leading
    /// coefficient 1.
    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            let r = self.order();
            self.den = MultiPoly::one(self.den.nvars(), r);
            return self;
        }
        let content = |p: &MultiPoly| -> Monomial {
            let nvars = p.nvars();
            let mut min = vec![u32::MAX; nvars];
            for (m, _) in p.terms() {
                for (i, &e) in m.exponents.iter().enumerate() {
                    min[i] = min[i].min(e);
                }
            }
            Monomial::new(min)
        };
        let cn = content(&self.num);
        let cd = content(&self.den);
        let common = Monomial::new(
            cn.exponents
                .iter()
                .zip(&cd.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        );
        if common.degree() > 0 {
            let strip = |p: &MultiPoly, c: &Monomial| {
                MultiPoly::from_terms(
                    p.nvars(),
                    p.terms()
                        .map(|(m, k)| (c.quotient_into(m), k.clone())),
                )
            };
            self.num = strip(&self.num, &common);
            self.den = strip(&self.den, &common);
        }
        let lead = self.den.leading().map(|(_, c)| c.clone()).unwrap();
        if !lead.is_one() {
            let inv = lead.inv().expect("nonzero leading coefficient");
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
        self
    }

    pub fn add(&self, other: &RationalFunction) -> Result<RationalFunction> {
        if self.den == other.den {
            return RationalFunction::new(self.num.try_add(&other.num)?, self.den.clone());
        }
        let num = self
            .num
            .try_mul(&other.den)?
            .try_add(&other.num.try_mul(&self.den)?)?;
        RationalFunction::new(num, self.den.try_mul(&other.den)?)
    }

    pub fn sub(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RationalFunction) -> Result<RationalFunction> {
        RationalFunction::new(
            self.num.try_mul(&other.num)?,
            self.den.try_mul(&other.den)?,
        )
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFunction::new(
            self.num.try_mul(&other.den)?,
            self.den.try_mul(&other.num)?,
        )
    }

    pub fn scale(&self, c: &Scalar) -> RationalFunction {
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Quotient-rule partial derivative; keeps the denominator when the
    /// derivative of the denominator vanishes.
    pub fn partial_derivative(&self, i: usize) -> Result<RationalFunction> {
        let dn = self.num.partial_derivative(i)?;
        let dd = self.den.partial_derivative(i)?;
        if dd.is_zero() {
            return RationalFunction::new(dn, self.den.clone());
        }
        let num = dn.try_mul(&self.den)?.try_sub(&self.num.try_mul(&dd)?)?;
        RationalFunction::new(num, self.den.try_mul(&self.den)?)
    }

    /// Equality by cross-multiplication: n1·d2 = n2·d1.
    pub fn equals(&self, other: &RationalFunction) -> bool {
        match (
            self.num.try_mul(&other.den),
            other.num.try_mul(&self.den),
        ) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    /// Some(c) when the fraction is a constant scalar.
    pub fn constant_value(&self) -> Option<Scalar> {
        let r = self.order();
        if self.is_zero() {
            return Some(Scalar::zero(r));
        }
        let q = self.num.exact_divide(&self.den).ok()?;
        q.constant_value(r)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_value(self.order()).is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, n: usize) -> MultiPoly {
        MultiPoly::variable(n, i, 2)
    }

    #[test]
    fn add_and_equality_by_cross_multiplication() {
        // 1/x1 + 1/x2 = (x1+x2)/(x1*x2)
        let one = MultiPoly::one(2, 2);
        let a = RationalFunction::new(one.clone(), x(0, 2)).unwrap();
        let b = RationalFunction::new(one.clone(), x(1, 2)).unwrap();
        let sum = a.add(&b).unwrap();
        let expect = RationalFunction::new(
            x(0, 2).try_add(&x(1, 2)).unwrap(),
            x(0, 2).try_mul(&x(1, 2)).unwrap(),
        )
        .unwrap();
        assert!(sum.equals(&expect));
    }

    #[test]
    fn derivative_of_inverse() {
        // d/dx (1/x) = -1/x^2
        let one = MultiPoly::one(1, 2);
        let f = RationalFunction::new(one.clone(), x(0, 1)).unwrap();
        let d = f.partial_derivative(0).unwrap();
        let expect = RationalFunction::new(one.neg(), x(0, 1).pow(2)).unwrap();
        assert!(d.equals(&expect));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RationalFunction::new(MultiPoly::one(1, 2), MultiPoly::zero(1)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn constant_detection() {
        let f = RationalFunction::new(
            x(0, 2).scale(&Scalar::from_int(3, 2)),
            x(0, 2),
        )
        .unwrap();
        assert_eq!(f.constant_value(), Some(Scalar::from_int(3, 2)));
        let g = RationalFunction::new(x(0, 2), x(1, 2)).unwrap();
        assert_eq!(g.constant_value(), None);
    }

    #[test]
    fn monomial_content_is_stripped() {
        // (x1^2 x2) / (x1 x2^2) normalizes to x1 / x2
        let f = RationalFunction::new(
            x(0, 2).pow(2).try_mul(&x(1, 2)).unwrap(),
            x(0, 2).try_mul(&x(1, 2).pow(2)).unwrap(),
        )
        .unwrap();
        assert_eq!(f.num, x(0, 2));
        assert_eq!(f.den, x(1, 2));
    }
}
