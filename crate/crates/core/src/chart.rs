//! The invariant chart y_j = Σ_i x_i^{2j} for the signed-permutation group,
//! its Jacobian, the discriminant Δ = det(Jacobian), and the exact action of
//! ∂/∂y_j on the localization at Δ.
//!
//! The derivation uses the adjugate of the Jacobian so that denominators stay
//! powers of Δ: ∂f/∂y_j = Σ_i adj_{j,i}·∂f/∂x_i / Δ. The Jacobian carries the
//! factor 2j from ∂(x_i^{2j})/∂x_i, which is what makes det equal the closed
//! form 2^n n! x_1⋯x_n Π_{i<j}(x_j²−x_i²) constant included.

use crate::error::{Error, Result};
use crate::localized::{LocalizedElement, Localization};
use crate::poly::MultiPoly;
use crate::report::{CheckRecord, OpReport};
use crate::scalar::Scalar;
use crate::tableaux::factorial;

#[derive(Clone, Debug)]
pub struct InvariantChart {
    pub n: usize,
    /// y_j = Σ_i x_i^{2j}, j = 1..n.
    pub y_gens: Vec<MultiPoly>,
    /// jacobian[i][j] = ∂y_{j+1}/∂x_{i+1} = 2(j+1)·x_{i+1}^{2j+1}.
    pub jacobian: Vec<Vec<MultiPoly>>,
    /// adjugate[j][i] = cofactor of entry (i,j); Σ_i adjugate[j][i]·jacobian[i][k] = δ_{jk}·Δ.
    pub adjugate: Vec<Vec<MultiPoly>>,
    pub delta: MultiPoly,
    pub localization: Localization,
}

const R: u32 = 2;

impl InvariantChart {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("chart needs n ≥ 1".into()));
        }
        let y_gens: Vec<MultiPoly> = (1..=n)
            .map(|j| {
                let mut acc = MultiPoly::zero(n);
                for i in 0..n {
                    acc = acc
                        .try_add(&MultiPoly::variable(n, i, R).pow(2 * j as u32))
                        .expect("same nvars");
                }
                acc
            })
            .collect();
        let jacobian: Vec<Vec<MultiPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| y_gens[j].partial_derivative(i).expect("index in range"))
                    .collect()
            })
            .collect();
        let delta = determinant(&jacobian, n)?;
        // closed form 2^n n! x1⋯xn Π_{i<j} (x_j² − x_i²)
        let mut closed = MultiPoly::constant(
            n,
            Scalar::from_int((1i64 << n) * factorial(n as u64) as i64, R),
        );
        for i in 0..n {
            closed = closed.try_mul(&MultiPoly::variable(n, i, R))?;
        }
        for i in 0..n {
            for j in i + 1..n {
                let diff = MultiPoly::variable(n, j, R)
                    .pow(2)
                    .try_sub(&MultiPoly::variable(n, i, R).pow(2))?;
                closed = closed.try_mul(&diff)?;
            }
        }
        if delta != closed {
            return Err(Error::ValidationFailed(format!(
                "Jacobian determinant {delta} differs from the closed form {closed}"
            )));
        }
        let mut adjugate = vec![vec![MultiPoly::zero(n); n]; n];
        for j in 0..n {
            for i in 0..n {
                let minor = minor_matrix(&jacobian, i, j);
                let det = determinant(&minor, n - 1)?;
                adjugate[j][i] = if (i + j) % 2 == 0 { det } else { det.neg() };
            }
        }
        // adj · J = Δ · I, exercised once per chart
        for j in 0..n {
            for k in 0..n {
                let mut acc = MultiPoly::zero(n);
                for i in 0..n {
                    acc = acc.try_add(&adjugate[j][i].try_mul(&jacobian[i][k])?)?;
                }
                let expect = if j == k { delta.clone() } else { MultiPoly::zero(n) };
                if acc != expect {
                    return Err(Error::ValidationFailed(format!(
                        "adjugate identity fails at ({j},{k})"
                    )));
                }
            }
        }
        let localization = Localization::new(delta.clone());
        Ok(InvariantChart {
            n,
            y_gens,
            jacobian,
            adjugate,
            delta,
            localization,
        })
    }

    /// ∂f/∂y_{j+1} on a localized element, canonicalized; the denominator is a
    /// Δ-power by construction.
    pub fn dy(&self, j: usize, f: &LocalizedElement) -> Result<LocalizedElement> {
        if j >= self.n {
            return Err(Error::IndexOutOfRange(j, self.n));
        }
        if f.is_zero() {
            return Ok(self.localization.zero());
        }
        let k = f.delta_power as i64;
        let mut num = MultiPoly::zero(self.n);
        for i in 0..self.n {
            // ∂_i (p/Δ^k) = (Δ·∂_i p − k·p·∂_i Δ) / Δ^{k+1}
            let mut term = self.delta.try_mul(&f.num.partial_derivative(i)?)?;
            if k != 0 {
                let correction = f
                    .num
                    .try_mul(&self.delta.partial_derivative(i)?)?
                    .scale(&Scalar::from_int(k, R));
                term = term.try_sub(&correction)?;
            }
            num = num.try_add(&self.adjugate[j][i].try_mul(&term)?)?;
        }
        Ok(self.localization.canonicalize(LocalizedElement {
            num,
            delta_power: f.delta_power + 2,
        }))
    }

    /// ∂p/∂y_{j+1} of a plain polynomial.
    pub fn dy_poly(&self, j: usize, p: &MultiPoly) -> Result<LocalizedElement> {
        self.dy(j, &LocalizedElement::from_poly(p.clone()))
    }

    /// ∂y_k/∂y_j = δ_{jk} and commutation of mixed derivatives on samples.
    pub fn generators_check(&self, samples: &[MultiPoly]) -> Result<OpReport> {
        let mut report = OpReport::new();
        for j in 0..self.n {
            for k in 0..self.n {
                let image = self.dy_poly(j, &self.y_gens[k])?;
                let expect = if j == k {
                    LocalizedElement::from_poly(MultiPoly::one(self.n, R))
                } else {
                    self.localization.zero()
                };
                report.push(CheckRecord::of(
                    format!("∂y{}/∂y{} = δ", k + 1, j + 1),
                    image == expect,
                    format!("got {image}"),
                ));
            }
        }
        for f in samples {
            let loc = LocalizedElement::from_poly(f.clone());
            for j in 0..self.n {
                for k in j + 1..self.n {
                    let jk = self.dy(k, &self.dy(j, &loc)?)?;
                    let kj = self.dy(j, &self.dy(k, &loc)?)?;
                    report.push(CheckRecord::of(
                        format!("mixed ∂y{}∂y{} commute on {f}", j + 1, k + 1),
                        jk == kj,
                        format!("{jk} vs {kj}"),
                    ));
                }
            }
        }
        Ok(report)
    }
}

fn minor_matrix(m: &[Vec<MultiPoly>], drop_row: usize, drop_col: usize) -> Vec<Vec<MultiPoly>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != drop_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != drop_col)
                .map(|(_, e)| e.clone())
                .collect()
        })
        .collect()
}

/// Laplace expansion along the first row; fine at chart sizes.
fn determinant(m: &[Vec<MultiPoly>], n: usize) -> Result<MultiPoly> {
    if n == 0 {
        let nvars = m.first().map_or(1, |r| r.first().map_or(1, |e| e.nvars()));
        return Ok(MultiPoly::one(nvars, R));
    }
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let nvars = m[0][0].nvars();
    let mut acc = MultiPoly::zero(nvars);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub = minor_matrix(m, 0, j);
        let d = determinant(&sub, n - 1)?;
        let term = m[0][j].try_mul(&d)?;
        acc = if j % 2 == 0 {
            acc.try_add(&term)?
        } else {
            acc.try_sub(&term)?
        };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_chart() {
        let chart = InvariantChart::new(1).unwrap();
        assert_eq!(chart.delta.to_string(), "2*x1");
        assert_eq!(chart.y_gens[0].to_string(), "x1^2");
    }

    #[test]
    fn rank_two_delta() {
        let chart = InvariantChart::new(2).unwrap();
        // 8 x1 x2 (x2² − x1²) = -8*x1^3*x2 + 8*x1*x2^3
        let x1 = MultiPoly::variable(2, 0, 2);
        let x2 = MultiPoly::variable(2, 1, 2);
        let expect = x1
            .try_mul(&x2)
            .unwrap()
            .try_mul(&x2.pow(2).try_sub(&x1.pow(2)).unwrap())
            .unwrap()
            .scale(&Scalar::from_int(8, 2));
        assert_eq!(chart.delta, expect);
    }

    #[test]
    fn delta_vanishes_on_the_first_axis() {
        for n in 1..=3usize {
            let chart = InvariantChart::new(n).unwrap();
            // every term carries x1
            assert!(chart
                .delta
                .terms()
                .all(|(m, _)| m.exponents[0] > 0));
        }
    }

    #[test]
    fn dy_examples_rank_one() {
        let chart = InvariantChart::new(1).unwrap();
        let x = MultiPoly::variable(1, 0, 2);
        // ∂/∂y (x²) = 1
        let d = chart.dy_poly(0, &x.pow(2)).unwrap();
        assert_eq!(d, LocalizedElement::from_poly(MultiPoly::one(1, 2)));
        // ∂/∂y (x⁴) = 2x² (x⁴ = y²)
        let d = chart.dy_poly(0, &x.pow(4)).unwrap();
        assert_eq!(
            d,
            LocalizedElement::from_poly(x.pow(2).scale(&Scalar::from_int(2, 2)))
        );
        // ∂/∂y (x) = 1/(2x) = 1/Δ
        let d = chart.dy_poly(0, &x).unwrap();
        assert_eq!(d.delta_power, 1);
        assert_eq!(d.num.to_string(), "1");
    }

    #[test]
    fn generator_checks_at_rank_two() {
        let chart = InvariantChart::new(2).unwrap();
        let x1 = MultiPoly::variable(2, 0, 2);
        let x2 = MultiPoly::variable(2, 1, 2);
        let samples = vec![
            x1.pow(2).try_mul(&x2.pow(2)).unwrap(),
            x1.pow(4).try_add(&x2.pow(4)).unwrap(),
            x1.clone(),
        ];
        let report = chart.generators_check(&samples).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn dy_is_a_derivation() {
        // Leibniz on localized elements at n = 2
        let chart = InvariantChart::new(2).unwrap();
        let x1 = MultiPoly::variable(2, 0, 2);
        let x2 = MultiPoly::variable(2, 1, 2);
        let loc = &chart.localization;
        let a = LocalizedElement {
            num: x1.pow(3).try_add(&x2.clone()).unwrap(),
            delta_power: 0,
        };
        let b = loc.canonicalize(LocalizedElement {
            num: x1.try_mul(&x2).unwrap(),
            delta_power: 1,
        });
        for j in 0..2 {
            let lhs = chart.dy(j, &loc.mul(&a, &b).unwrap()).unwrap();
            let rhs = loc
                .add(
                    &loc.mul(&a, &chart.dy(j, &b).unwrap()).unwrap(),
                    &loc.mul(&b, &chart.dy(j, &a).unwrap()).unwrap(),
                )
                .unwrap();
            assert_eq!(lhs, rhs, "Leibniz fails at j={j}");
        }
    }

    #[test]
    fn chain_rule_recovers_x_derivatives() {
        // Σ_j (∂y_j/∂x_i)·(∂f/∂y_j) = ∂f/∂x_i
        let chart = InvariantChart::new(2).unwrap();
        let x1 = MultiPoly::variable(2, 0, 2);
        let x2 = MultiPoly::variable(2, 1, 2);
        let samples = vec![
            x1.pow(4).try_add(&x1.pow(2).try_mul(&x2.pow(2)).unwrap()).unwrap(),
            x1.pow(2).clone(),
            x1.pow(3).try_mul(&x2.clone()).unwrap(),
        ];
        let loc = &chart.localization;
        for f in samples {
            for i in 0..2 {
                let mut acc = loc.zero();
                for j in 0..2 {
                    let dj = chart.dy_poly(j, &f).unwrap();
                    acc = loc
                        .add(&acc, &loc.mul_poly(&dj, &chart.jacobian[i][j]).unwrap())
                        .unwrap();
                }
                let expect = LocalizedElement::from_poly(f.partial_derivative(i).unwrap());
                assert_eq!(loc.canonicalize(acc), expect);
            }
        }
    }

    #[test]
    fn invariant_round_trip_through_y_coordinates() {
        // p = Q(y₁,y₂) expanded; ∂p/∂y_j must equal (∂Q/∂y_j)(y) expanded
        let chart = InvariantChart::new(2).unwrap();
        let y1 = chart.y_gens[0].clone();
        let y2 = chart.y_gens[1].clone();
        // Q = y1³ + 2 y1 y2
        let p = y1
            .pow(3)
            .try_add(&y1.try_mul(&y2).unwrap().scale(&Scalar::from_int(2, 2)))
            .unwrap();
        // ∂Q/∂y1 = 3y1² + 2y2, ∂Q/∂y2 = 2y1
        let dq1 = y1
            .pow(2)
            .scale(&Scalar::from_int(3, 2))
            .try_add(&y2.scale(&Scalar::from_int(2, 2)))
            .unwrap();
        let dq2 = y1.scale(&Scalar::from_int(2, 2));
        assert_eq!(
            chart.dy_poly(0, &p).unwrap(),
            LocalizedElement::from_poly(dq1)
        );
        assert_eq!(
            chart.dy_poly(1, &p).unwrap(),
            LocalizedElement::from_poly(dq2)
        );
    }
}
