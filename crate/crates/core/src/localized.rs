//! Polynomials over a declared power of the discriminant Δ.
//!
//! A [`LocalizedElement`] is a pair (numerator, k) standing for num / Δ^k.
//! Arithmetic needs the ambient Δ, carried by a [`Localization`] context.
//! Canonical form: either k = 0 or Δ does not divide the numerator; Δ-powers
//! are stripped greedily by exact division so degrees stay minimal across
//! chained operator applications.

use std::fmt;

use crate::error::Result;
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalizedElement {
    pub num: MultiPoly,
    pub delta_power: usize,
}

impl LocalizedElement {
    pub fn from_poly(p: MultiPoly) -> Self {
        LocalizedElement {
            num: p,
            delta_power: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Homogeneous degree num − k·deg Δ, when the numerator is homogeneous.
    pub fn homogeneous_degree(&self, delta_degree: u32) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        self.num
            .homogeneous_degree()
            .map(|d| d as i64 - (self.delta_power as i64) * delta_degree as i64)
    }
}

impl fmt::Display for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.delta_power == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / Δ^{}", self.num, self.delta_power)
        }
    }
}

/// The localization of the polynomial ring at a fixed discriminant Δ.
#[derive(Clone, Debug)]
pub struct Localization {
    pub delta: MultiPoly,
}

impl Localization {
    pub fn new(delta: MultiPoly) -> Self {
        assert!(!delta.is_zero(), "cannot localize at zero");
        Localization { delta }
    }

    pub fn zero(&self) -> LocalizedElement {
        LocalizedElement::from_poly(MultiPoly::zero(self.delta.nvars()))
    }

    /// Strip Δ-powers while the numerator divides exactly.
    pub fn canonicalize(&self, mut a: LocalizedElement) -> LocalizedElement {
        if a.num.is_zero() {
            a.delta_power = 0;
            return a;
        }
        while a.delta_power > 0 {
            match a.num.exact_divide(&self.delta) {
                Ok(q) => {
                    a.num = q;
                    a.delta_power -= 1;
                }
                Err(_) => break,
            }
        }
        a
    }

    pub fn is_canonical(&self, a: &LocalizedElement) -> bool {
        a.delta_power == 0 || (!a.num.is_zero() && a.num.exact_divide(&self.delta).is_err())
    }

    pub fn add(&self, a: &LocalizedElement, b: &LocalizedElement) -> Result<LocalizedElement> {
        let k = a.delta_power.max(b.delta_power);
        let na = a.num.try_mul(&self.delta.pow((k - a.delta_power) as u32))?;
        let nb = b.num.try_mul(&self.delta.pow((k - b.delta_power) as u32))?;
        Ok(self.canonicalize(LocalizedElement {
            num: na.try_add(&nb)?,
            delta_power: k,
        }))
    }

    pub fn sub(&self, a: &LocalizedElement, b: &LocalizedElement) -> Result<LocalizedElement> {
        self.add(a, &LocalizedElement {
            num: b.num.neg(),
            delta_power: b.delta_power,
        })
    }

    pub fn mul(&self, a: &LocalizedElement, b: &LocalizedElement) -> Result<LocalizedElement> {
        Ok(self.canonicalize(LocalizedElement {
            num: a.num.try_mul(&b.num)?,
            delta_power: a.delta_power + b.delta_power,
        }))
    }

    pub fn mul_poly(&self, a: &LocalizedElement, p: &MultiPoly) -> Result<LocalizedElement> {
        Ok(self.canonicalize(LocalizedElement {
            num: a.num.try_mul(p)?,
            delta_power: a.delta_power,
        }))
    }

    pub fn scale(&self, a: &LocalizedElement, c: &Scalar) -> LocalizedElement {
        let scaled = LocalizedElement {
            num: a.num.scale(c),
            delta_power: a.delta_power,
        };
        if scaled.num.is_zero() {
            self.zero()
        } else {
            scaled
        }
    }
}
