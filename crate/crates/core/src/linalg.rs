//! Exact dense linear algebra over Q(ξ_r): rank, solve, nullspace.
//!
//! Elimination uses the Bareiss one-step division scheme (division-controlled
//! fraction-free elimination) to bound intermediate coefficient growth on the
//! graded checks, which produce matrices with hundreds of columns. Solutions
//! are re-verified by substitution before being returned.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct ScalarMatrix {
    pub rows: usize,
    pub cols: usize,
    r: u32,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize, r: u32) -> Self {
        ScalarMatrix {
            rows,
            cols,
            r,
            data: vec![Scalar::zero(r); rows * cols],
        }
    }

    pub fn identity(n: usize, r: u32) -> Self {
        let mut m = Self::zeros(n, n, r);
        for i in 0..n {
            m.set(i, i, Scalar::one(r));
        }
        m
    }

    pub fn from_rows(rows_data: Vec<Vec<Scalar>>, r: u32) -> Self {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(rows * cols);
        for row in rows_data {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        ScalarMatrix { rows, cols, r, data }
    }

    pub fn order(&self) -> u32 {
        self.r
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut t = Self::zeros(self.cols, self.rows, self.r);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Append the columns of `other` on the right.
    pub fn hstack(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols, self.r);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero(self.r);
                for j in 0..self.cols {
                    let e = self.get(i, j);
                    if !e.is_zero() && !v[j].is_zero() {
                        acc = &acc + &(e * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Bareiss forward elimination; returns (echelon matrix, pivot columns).
    fn row_echelon(&self) -> (ScalarMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prev = Scalar::one(self.r);
        let mut pr = 0usize;
        for col in 0..m.cols {
            if pr >= m.rows {
                break;
            }
            let Some(pivot_row) = (pr..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pr, pivot_row);
            let pivot = m.get(pr, col).clone();
            for i in pr + 1..m.rows {
                let head = m.get(i, col).clone();
                for j in col..m.cols {
                    let v = &(&pivot * m.get(i, j)) - &(&head * m.get(pr, j));
                    let v = v.try_div(&prev).expect("field division");
                    m.set(i, j, v);
                }
            }
            prev = pivot;
            pivots.push(col);
            pr += 1;
        }
        (m, pivots)
    }

    /// Reduced row echelon form (pivots normalized to 1, cleared above).
    fn rref(&self) -> (ScalarMatrix, Vec<usize>) {
        let (mut m, pivots) = self.row_echelon();
        for (pr, &pc) in pivots.iter().enumerate().rev() {
            let inv = m.get(pr, pc).inv().expect("pivot nonzero");
            for j in pc..m.cols {
                let v = m.get(pr, j) * &inv;
                m.set(pr, j, v);
            }
            for i in 0..pr {
                let f = m.get(i, pc).clone();
                if f.is_zero() {
                    continue;
                }
                for j in pc..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(pr, j));
                    m.set(i, j, v);
                }
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().1.len()
    }

    /// Solve self · x = rhs exactly; free variables are set to zero and the
    /// returned vector is verified by substitution.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1, self.r);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut x = vec![Scalar::zero(self.r); self.cols];
        for (pr, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get(pr, self.cols).clone();
        }
        let check = self.mul_vec(&x);
        if check != rhs {
            return Err(Error::Inconsistent);
        }
        Ok(x)
    }

    /// Basis of the right nullspace; every vector is verified to annihilate
    /// the matrix.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (red, pivots) = self.rref();
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(self.r); self.cols];
            v[free] = Scalar::one(self.r);
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = red.get(pr, free).neg();
            }
            debug_assert!(self.mul_vec(&v).iter().all(|c| c.is_zero()));
            basis.push(v);
        }
        basis
    }
}

/// Coefficient matrix of a polynomial family: one column per polynomial, one
/// row per monomial appearing anywhere in the family. Returns the row index.
pub fn family_matrix(polys: &[MultiPoly], r: u32) -> (ScalarMatrix, Vec<Monomial>) {
    let monomials: BTreeSet<Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    let index: Vec<Monomial> = monomials.into_iter().collect();
    let mut m = ScalarMatrix::zeros(index.len(), polys.len(), r);
    for (j, p) in polys.iter().enumerate() {
        for (i, mono) in index.iter().enumerate() {
            if let Some(c) = p.coeff(mono) {
                m.set(i, j, c.clone());
            }
        }
    }
    (m, index)
}

/// Coefficient vector of `p` against a fixed monomial index.
pub fn coefficient_vector(p: &MultiPoly, index: &[Monomial], r: u32) -> Result<Vec<Scalar>> {
    let mut v = vec![Scalar::zero(r); index.len()];
    let mut hit = 0usize;
    for (i, m) in index.iter().enumerate() {
        if let Some(c) = p.coeff(m) {
            v[i] = c.clone();
            hit += 1;
        }
    }
    if hit != p.num_terms() {
        return Err(Error::ExpansionFailed(format!(
            "polynomial {p} has monomials outside the index"
        )));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, 2)
    }

    #[test]
    fn identity_rank() {
        assert_eq!(ScalarMatrix::identity(3, 2).rank(), 3);
    }

    #[test]
    fn duplicated_rows_rank_one() {
        let m = ScalarMatrix::from_rows(vec![vec![s(1), s(1)], vec![s(1), s(1)]], 2);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_upper_triangular() {
        let m = ScalarMatrix::from_rows(vec![vec![s(1), s(1)], vec![s(0), s(1)]], 2);
        let x = m.solve(&[s(3), s(1)]).unwrap();
        assert_eq!(x, vec![s(2), s(1)]);
    }

    #[test]
    fn solve_inconsistent() {
        let m = ScalarMatrix::from_rows(vec![vec![s(1), s(1)], vec![s(1), s(1)]], 2);
        assert_eq!(m.solve(&[s(1), s(2)]), Err(Error::Inconsistent));
    }

    #[test]
    fn nullspace_annihilates() {
        let m = ScalarMatrix::from_rows(
            vec![vec![s(1), s(2), s(3)], vec![s(2), s(4), s(6)]],
            2,
        );
        let basis = m.nullspace();
        assert_eq!(basis.len(), 2);
        for v in basis {
            assert!(m.mul_vec(&v).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn rank_over_cyclotomic_field() {
        // rows (1, ξ) and (ξ^2, ξ^3) over Q(ξ_4) are proportional by ξ^2.
        let xi = Scalar::xi(4);
        let m = ScalarMatrix::from_rows(
            vec![
                vec![Scalar::one(4), xi.clone()],
                vec![xi.pow(2), xi.pow(3)],
            ],
            4,
        );
        assert_eq!(m.rank(), 1);
    }
}
