//! Exact arithmetic in the cyclotomic field Q(ξ_r) = Q[t]/Φ_r(t).
//!
//! A [`Scalar`] is stored as a coordinate vector of length φ(r) (the degree of
//! the r-th cyclotomic polynomial Φ_r) with arbitrary-precision rational
//! entries. For r ∈ {1, 2} the field degenerates to Q and a scalar is a plain
//! rational. Reduction data per r is computed once and cached globally.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// Reduction data for one cyclotomic order: the monic coefficients of Φ_r.
struct CycInfo {
    /// Coefficients of Φ_r in ascending degree, length φ(r) + 1, leading 1.
    modulus: Vec<BigRational>,
    degree: usize,
}

static CYC_CACHE: Lazy<RwLock<HashMap<u32, Arc<CycInfo>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn cyc_info(r: u32) -> Arc<CycInfo> {
    assert!(r >= 1, "cyclotomic order must be positive");
    if let Some(info) = CYC_CACHE.read().unwrap().get(&r) {
        return Arc::clone(info);
    }
    let modulus = cyclotomic_polynomial(r);
    let degree = modulus.len() - 1;
    let info = Arc::new(CycInfo { modulus, degree });
    CYC_CACHE
        .write()
        .unwrap()
        .entry(r)
        .or_insert_with(|| Arc::clone(&info));
    info
}

/// Φ_r computed by dividing t^r − 1 by every proper cyclotomic factor Φ_d, d | r.
fn cyclotomic_polynomial(r: u32) -> Vec<BigRational> {
    if r == 1 {
        // t − 1
        return vec![-BigRational::one(), BigRational::one()];
    }
    let mut num = vec![BigRational::zero(); r as usize + 1];
    num[0] = -BigRational::one();
    num[r as usize] = BigRational::one();
    for d in 1..r {
        if r.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of univariate rational polynomials (ascending coefficients).
fn poly_div_exact(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let mut rem: Vec<BigRational> = num.to_vec();
    let dd = den.len() - 1;
    let lead = &den[dd];
    assert!(!lead.is_zero());
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = &rem[i] / lead;
        let shift = i - dd;
        for (k, dc) in den.iter().enumerate() {
            let v = &c * dc;
            rem[shift + k] -= v;
        }
        quot[shift] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact division");
    while quot.len() > 1 && quot.last().is_some_and(|c| c.is_zero()) {
        quot.pop();
    }
    quot
}

/// Euler totient φ(r), the coordinate length of a scalar of order r.
pub fn euler_phi(r: u32) -> usize {
    cyc_info(r).degree
}

/// An element of Q(ξ_r), with ξ a fixed primitive r-th root of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    r: u32,
    /// Coordinates in the power basis 1, ξ, …, ξ^{φ(r)−1}.
    coords: Vec<BigRational>,
}

impl Scalar {
    pub fn zero(r: u32) -> Self {
        Scalar {
            r,
            coords: vec![BigRational::zero(); euler_phi(r)],
        }
    }

    pub fn one(r: u32) -> Self {
        Self::from_rational(BigRational::one(), r)
    }

    pub fn from_rational(q: BigRational, r: u32) -> Self {
        let mut coords = vec![BigRational::zero(); euler_phi(r)];
        coords[0] = q;
        Scalar { r, coords }
    }

    pub fn from_int(v: i64, r: u32) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)), r)
    }

    pub fn from_ratio(p: i64, q: i64, r: u32) -> Self {
        Self::from_rational(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            r,
        )
    }

    /// The primitive root ξ itself. For r = 1 this is 1, for r = 2 it is −1.
    pub fn xi(r: u32) -> Self {
        Self::xi_pow(r, 1)
    }

    /// ξ^k reduced modulo Φ_r.
    pub fn xi_pow(r: u32, k: i64) -> Self {
        let k = k.rem_euclid(r as i64) as usize;
        let mut raw = vec![BigRational::zero(); k + 1];
        raw[k] = BigRational::one();
        Scalar {
            r,
            coords: reduce(raw, r),
        }
    }

    pub fn order(&self) -> u32 {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// Some(q) when the scalar lies in Q ⊂ Q(ξ_r).
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    fn check_order(&self, other: &Scalar) -> Result<()> {
        if self.r != other.r {
            Err(Error::MixedCyclotomicOrder(self.r, other.r))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_order(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Scalar { r: self.r, coords })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check_order(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Scalar { r: self.r, coords })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_order(other)?;
        let n = self.coords.len();
        let mut raw = vec![BigRational::zero(); 2 * n.max(1) - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        Ok(Scalar {
            r: self.r,
            coords: reduce(raw, self.r),
        })
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            r: self.r,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_r.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Scalar::from_rational(q.recip(), self.r));
        }
        let info = cyc_info(self.r);
        // Bezout: u * self + v * Φ_r = gcd = constant (Φ_r irreducible over Q).
        let (g, u) = half_ext_gcd(&self.coords, &info.modulus);
        debug_assert_eq!(g.len(), 1, "cyclotomic modulus must be coprime to a nonzero element");
        let ginv = g[0].recip();
        let coords = reduce(u.iter().map(|c| c * &ginv).collect(), self.r);
        Ok(Scalar { r: self.r, coords })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.r);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("same order");
            }
            base = base.try_mul(&base).expect("same order");
            e >>= 1;
        }
        acc
    }

    /// Field automorphism ξ ↦ ξ^{r−1} = ξ^{−1} (complex conjugation on Q(ξ_r)).
    pub fn conj(&self) -> Scalar {
        let mut acc = Scalar::zero(self.r);
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pow = Scalar::xi_pow(self.r, -(k as i64));
            let term = pow.scale(c);
            acc = acc.try_add(&term).expect("same order");
        }
        acc
    }

    fn scale(&self, q: &BigRational) -> Scalar {
        Scalar {
            r: self.r,
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    /// Canonical text form, e.g. `3/2`, `ξ^1`, `(1+ξ^1)`, `-1/2`.
    pub fn canonical_string(&self) -> String {
        format!("{self}")
    }

    /// True when the printed form needs no parentheses as a coefficient.
    pub(crate) fn is_single_term(&self) -> bool {
        self.coords.iter().filter(|c| !c.is_zero()).count() <= 1
    }
}

/// Reduce an ascending coefficient vector modulo Φ_r, truncating to φ(r) coords.
fn reduce(mut raw: Vec<BigRational>, r: u32) -> Vec<BigRational> {
    let info = cyc_info(r);
    let deg = info.degree;
    for i in (deg..raw.len()).rev() {
        if raw[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut raw[i], BigRational::zero());
        // t^i = t^{i-deg} * (t^deg) and t^deg = -(lower part of Φ_r).
        for (k, m) in info.modulus[..deg].iter().enumerate() {
            let v = &c * m;
            raw[i - deg + k] -= v;
        }
    }
    raw.truncate(deg.max(1));
    raw.resize(deg.max(1), BigRational::zero());
    raw
}

/// Extended gcd in Q[t] returning (gcd, u) with u·a ≡ gcd (mod b).
fn half_ext_gcd(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0: Vec<BigRational> = trim(a.to_vec());
    let mut r1: Vec<BigRational> = trim(b.to_vec());
    let mut u0 = vec![BigRational::one()];
    let mut u1 = vec![BigRational::zero()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, rem) = poly_div_rem(&r0, &r1);
        let nu = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = nu;
    }
    (r0, u0)
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        v.push(BigRational::zero());
    }
    v
}

fn poly_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() <= db {
        return (vec![BigRational::zero()], trim(rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = &rem[i] / lead;
        let shift = i - db;
        for (k, bc) in b.iter().enumerate() {
            let v = &c * bc;
            rem[shift + k] -= v;
        }
        quot[shift] = c;
    }
    (trim(quot), trim(rem))
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

/// `p` or `p/q` text for an exact rational.
pub fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut pieces: Vec<String> = Vec::new();
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let piece = if k == 0 {
                rational_string(c)
            } else if c.is_one() {
                format!("ξ^{k}")
            } else if (-c).is_one() {
                format!("-ξ^{k}")
            } else {
                format!("{}*ξ^{}", rational_string(c), k)
            };
            pieces.push(piece);
        }
        let mut out = String::new();
        for (i, p) in pieces.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push('-');
                out.push_str(stripped);
            } else {
                out.push('+');
                out.push_str(p);
            }
        }
        if pieces.len() > 1 {
            write!(f, "({out})")
        } else {
            write!(f, "{out}")
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar(r={}, {})", self.r, self)
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("mixed cyclotomic orders")
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("mixed cyclotomic orders")
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("mixed cyclotomic orders")
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        // Φ_2 = t + 1, Φ_3 = t^2 + t + 1, Φ_4 = t^2 + 1, Φ_6 = t^2 - t + 1
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(3), 2);
        assert_eq!(euler_phi(4), 2);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(5), 4);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn xi_squared_at_r2_is_one() {
        let xi = Scalar::xi(2);
        assert_eq!(&xi * &xi, Scalar::one(2));
    }

    #[test]
    fn xi_squared_at_r4_is_minus_one() {
        let xi = Scalar::xi(4);
        assert_eq!(&xi * &xi, Scalar::from_int(-1, 4));
    }

    #[test]
    fn r3_product_example() {
        // (1+ξ)(1+ξ²) = 1 expanded and reduced mod Φ_3.
        let one = Scalar::one(3);
        let a = &one + &Scalar::xi(3);
        let b = &one + &Scalar::xi_pow(3, 2);
        assert_eq!(&a * &b, one);
    }

    #[test]
    fn xi_has_order_r() {
        for r in 1..=8u32 {
            let xi = Scalar::xi(r);
            assert!(xi.pow(r as u64).is_one(), "ξ^{r} must be 1");
            for k in 1..r {
                if r > 1 {
                    assert!(!xi.pow(k as u64).is_one(), "ξ must be primitive at r={r}, k={k}");
                }
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let a = &Scalar::from_ratio(3, 7, 5) + &Scalar::xi_pow(5, 3);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(Scalar::zero(5).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_orders_rejected() {
        let a = Scalar::one(2);
        let b = Scalar::one(3);
        assert!(matches!(
            a.try_add(&b),
            Err(Error::MixedCyclotomicOrder(2, 3))
        ));
        assert!(matches!(
            a.try_mul(&b),
            Err(Error::MixedCyclotomicOrder(2, 3))
        ));
    }

    #[test]
    fn conjugation_is_an_involution() {
        let a = &Scalar::from_ratio(1, 2, 5) + &Scalar::xi_pow(5, 2);
        assert_eq!(a.conj().conj(), a);
        // conj fixes rationals
        let q = Scalar::from_ratio(-4, 9, 5);
        assert_eq!(q.conj(), q);
        // ξ * conj(ξ) = 1
        let xi = Scalar::xi(5);
        assert!((&xi * &xi.conj()).is_one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::from_ratio(3, 2, 2).to_string(), "3/2");
        assert_eq!(Scalar::from_int(-2, 2).to_string(), "-2");
        assert_eq!(Scalar::xi(3).to_string(), "ξ^1");
        assert_eq!(Scalar::zero(3).to_string(), "0");
        let mixed = &Scalar::one(3) + &Scalar::xi(3);
        assert_eq!(mixed.to_string(), "(1+ξ^1)");
    }

    #[test]
    fn r2_is_rational_arithmetic() {
        // ξ = -1 at r = 2.
        assert_eq!(Scalar::xi(2), Scalar::from_int(-1, 2));
        assert_eq!(Scalar::xi(1), Scalar::one(1));
    }
}
