//! The type-B root system with exact rational coordinates, its reflections as
//! wreath-group elements, conjugation-invariant couplings, and the axiom
//! validation report.
//!
//! Positive representatives are chosen with first nonzero coordinate
//! positive. Flipping a representative negates the pairing and the linear
//! form together, so Dunkl terms are representative-independent; the suite
//! pins this with a swap test.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::group::{GroupElement, WreathGroup};
use crate::linalg::ScalarMatrix;
use crate::poly::MultiPoly;
use crate::report::{CheckRecord, OpReport};
use crate::scalar::Scalar;

/// Conjugacy class of a reflection in the signed-permutation group: the
/// coordinate sign changes (short roots ±ε_i) and the transposition-like
/// reflections (long roots ±ε_i±ε_j).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReflectionClass {
    Short,
    Long,
}

/// One reflection with its chosen positive root.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub root: Vec<BigRational>,
    /// The root as the linear form Σ α_k x_k.
    pub form: MultiPoly,
    pub element: GroupElement,
    pub class: ReflectionClass,
    pub norm_sq: BigRational,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub n: usize,
    pub group: WreathGroup,
    /// All 2n + 2n(n−1) roots.
    pub roots: Vec<Vec<BigRational>>,
    /// One reflection per {α, −α} pair.
    pub reflections: Vec<Reflection>,
}

/// Rational couplings, constant on the two reflection classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouplingMap {
    pub short: BigRational,
    pub long: BigRational,
}

impl CouplingMap {
    pub fn new(short: BigRational, long: BigRational) -> Self {
        CouplingMap { short, long }
    }

    pub fn from_ints(short: i64, long: i64) -> Self {
        CouplingMap {
            short: BigRational::from_integer(BigInt::from(short)),
            long: BigRational::from_integer(BigInt::from(long)),
        }
    }

    pub fn value(&self, class: ReflectionClass) -> &BigRational {
        match class {
            ReflectionClass::Short => &self.short,
            ReflectionClass::Long => &self.long,
        }
    }

    /// Couplings must agree on conjugate reflections; brute-force validation
    /// against the group.
    pub fn validate(&self, rs: &RootSystem) -> Result<OpReport> {
        let mut report = OpReport::new();
        for a in &rs.reflections {
            for b in &rs.reflections {
                let conj = rs.group.conjugacy_test(&a.element, &b.element)?;
                let same_value = self.value(a.class) == self.value(b.class);
                if conj && !same_value {
                    report.push(CheckRecord::fail(
                        "coupling constant on conjugacy classes",
                        format!("{} ~ {} but couplings differ", a.element, b.element),
                    ));
                }
                // class labels must match conjugacy exactly
                if conj != (a.class == b.class) {
                    report.push(CheckRecord::fail(
                        "class labels match conjugacy",
                        format!("{} vs {}", a.element, b.element),
                    ));
                }
            }
        }
        if report.checks.is_empty() {
            report.push(CheckRecord::pass(
                "couplings constant on reflection conjugacy classes",
            ));
        }
        Ok(report)
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Linear form Σ α_k x_k as a polynomial with coefficients in Q ⊂ Q(ξ_2).
fn linear_form(alpha: &[BigRational]) -> MultiPoly {
    let n = alpha.len();
    let mut p = MultiPoly::zero(n);
    for (i, a) in alpha.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        p = p
            .try_add(&MultiPoly::variable(n, i, 2).scale(&Scalar::from_rational(a.clone(), 2)))
            .expect("same nvars");
    }
    p
}

/// The rank-n system of type B: roots ±ε_i (short) and ±ε_i±ε_j, i<j (long).
pub fn type_b(n: usize) -> RootSystem {
    let group = WreathGroup::new(2, n);
    let mut roots = Vec::new();
    let mut reflections = Vec::new();
    let basis = |i: usize, sign: i64| -> Vec<BigRational> {
        let mut v = vec![rat(0); n];
        v[i] = rat(sign);
        v
    };
    for i in 0..n {
        let alpha = basis(i, 1);
        roots.push(alpha.clone());
        roots.push(basis(i, -1));
        reflections.push(Reflection {
            form: linear_form(&alpha),
            norm_sq: dot(&alpha, &alpha),
            root: alpha,
            element: group.scaling(i),
            class: ReflectionClass::Short,
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            for sign in [1i64, -1] {
                let mut alpha = basis(i, 1);
                alpha[j] = rat(sign);
                roots.push(alpha.clone());
                roots.push(alpha.iter().map(|c| -c).collect());
                let element = if sign > 0 {
                    // ε_i + ε_j: x_i ↦ −x_j, x_j ↦ −x_i
                    let mut exps = vec![0; n];
                    exps[i] = 1;
                    exps[j] = 1;
                    GroupElement {
                        r: 2,
                        exps,
                        perm: crate::perm::Perm::transposition(n, i, j),
                    }
                } else {
                    group.transposition(i, j)
                };
                reflections.push(Reflection {
                    form: linear_form(&alpha),
                    norm_sq: dot(&alpha, &alpha),
                    root: alpha,
                    element,
                    class: ReflectionClass::Long,
                });
            }
        }
    }
    RootSystem {
        n,
        group,
        roots,
        reflections,
    }
}

/// Reflection formula s_α(v) = v − 2(v,α)/(α,α)·α.
pub fn reflect_vector(alpha: &[BigRational], v: &[BigRational]) -> Vec<BigRational> {
    let factor = dot(v, alpha) * rat(2) / dot(alpha, alpha);
    v.iter()
        .zip(alpha)
        .map(|(vi, ai)| vi - &factor * ai)
        .collect()
}

/// Checks the five root-system axioms exhaustively, plus the expected root
/// count 2n + 2n(n−1) and the consistency of the reflection elements with the
/// vector reflections.
pub fn validate_root_system(rs: &RootSystem) -> Result<OpReport> {
    let mut report = OpReport::new();
    let n = rs.n;

    // (1) R spans the ambient space
    let mut rows = Vec::new();
    for root in &rs.roots {
        rows.push(
            root.iter()
                .map(|c| Scalar::from_rational(c.clone(), 2))
                .collect::<Vec<_>>(),
        );
    }
    let rank = ScalarMatrix::from_rows(rows, 2).rank();
    report.push(CheckRecord::of(
        "axiom 1: roots span the space",
        rank == n,
        format!("rank {rank} of {n}"),
    ));

    // (2) R ∩ Rα = {α, −α}
    let mut axiom2 = true;
    for alpha in &rs.roots {
        for beta in &rs.roots {
            // collinear iff β = cα for a scalar c
            let c = alpha
                .iter()
                .zip(beta)
                .find(|(a, _)| !a.is_zero())
                .map(|(a, b)| b / a);
            if let Some(c) = c {
                let collinear = alpha
                    .iter()
                    .zip(beta)
                    .all(|(a, b)| b == &(&c * a));
                if collinear && !c.is_one() && !(-&c).is_one() {
                    axiom2 = false;
                }
            }
        }
    }
    report.push(CheckRecord::of(
        "axiom 2: only ±α on each line",
        axiom2,
        "a root line holds more than ±α",
    ));

    // (3) s_α(R) = R
    let mut axiom3 = true;
    for alpha in &rs.roots {
        for beta in &rs.roots {
            let image = reflect_vector(alpha, beta);
            if !rs.roots.contains(&image) {
                axiom3 = false;
            }
        }
    }
    report.push(CheckRecord::of(
        "axiom 3: reflections permute the roots",
        axiom3,
        "some s_α(β) is not a root",
    ));

    // (4) 2(α,β)/(β,β) integral
    let mut axiom4 = true;
    for alpha in &rs.roots {
        for beta in &rs.roots {
            let v = rat(2) * dot(alpha, beta) / dot(beta, beta);
            if !v.denom().is_one() {
                axiom4 = false;
            }
        }
    }
    report.push(CheckRecord::of(
        "axiom 4: Cartan integers",
        axiom4,
        "2(α,β)/(β,β) is not an integer",
    ));

    // (5) reflections generate the group (closure against the enumeration)
    let full = rs.group.enumerate()?;
    let mut generated: std::collections::BTreeSet<GroupElement> =
        rs.reflections.iter().map(|f| f.element.clone()).collect();
    generated.insert(rs.group.identity());
    loop {
        let snapshot: Vec<GroupElement> = generated.iter().cloned().collect();
        let before = generated.len();
        for a in &snapshot {
            for b in &snapshot {
                generated.insert(a.product(b)?);
            }
        }
        if generated.len() == before {
            break;
        }
    }
    report.push(CheckRecord::of(
        "axiom 5: reflections generate the group",
        generated.len() as u128 == rs.group.order() && full.iter().all(|g| generated.contains(g)),
        format!("closure size {} of {}", generated.len(), rs.group.order()),
    ));

    let expected_count = 2 * n + 2 * n * (n - 1);
    report.push(CheckRecord::of(
        format!("root count 2n + 2n(n−1) = {expected_count}"),
        rs.roots.len() == expected_count,
        format!("got {}", rs.roots.len()),
    ));

    // group elements implement the vector reflections on linear forms
    let mut consistent = true;
    for refl in &rs.reflections {
        for beta in rs.roots.iter().take(2 * n) {
            let acted = refl.element.act(&linear_form(beta));
            let expect = linear_form(&reflect_vector(&refl.root, beta));
            if acted != expect {
                consistent = false;
            }
        }
    }
    report.push(CheckRecord::of(
        "reflection elements act as the vector reflections",
        consistent,
        "group action and reflection formula disagree",
    ));

    Ok(report)
}

/// A root list that violates the axioms, for negative tests: {ε₁} alone.
pub fn broken_single_root(n: usize) -> RootSystem {
    let mut rs = type_b(n);
    rs.roots = vec![rs.roots[0].clone()];
    rs
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn b2_passes_with_eight_roots() {
        let rs = type_b(2);
        assert_eq!(rs.roots.len(), 8);
        assert_eq!(rs.reflections.len(), 4);
        let report = validate_root_system(&rs).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn b1_passes_with_two_roots() {
        let rs = type_b(1);
        assert_eq!(rs.roots.len(), 2);
        let report = validate_root_system(&rs).unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn single_root_fails_negation_closure() {
        let rs = broken_single_root(2);
        let report = validate_root_system(&rs).unwrap();
        assert!(report.has_failure());
    }

    #[test]
    fn b3_passes() {
        let rs = type_b(3);
        assert_eq!(rs.roots.len(), 18);
        assert_eq!(rs.reflections.len(), 9);
        let report = validate_root_system(&rs).unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn positive_representatives_start_positive() {
        for refl in type_b(3).reflections {
            let first = refl.root.iter().find(|c| !c.is_zero()).unwrap();
            assert!(first.is_positive());
        }
    }

    #[test]
    fn couplings_validate_on_classes() {
        let rs = type_b(2);
        let c = CouplingMap::from_ints(1, 2);
        let report = c.validate(&rs).unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn reflection_elements_are_involutions() {
        for refl in type_b(3).reflections {
            assert!(refl.element.product(&refl.element).unwrap().is_identity());
        }
    }
}
