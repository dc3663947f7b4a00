//! Higher Specht polynomials for G(r,n) and the graded verification of their
//! basis properties.
//!
//! For a standard tableau S and a tableau T of the same shape, the polynomial
//! is built per component: raise the variables indexed by T's entries to r
//! times the index of S at the same cell, apply the Young symmetrizer of T's
//! component, and multiply by Π x_k^{ν−1} over the entries k of component ν.
//! The component exponent ν−1 (components counted from 1) is the convention
//! under which the family is a free module basis over the fundamental
//! invariants; `module_basis_rank_check` falsifies any other choice.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::{young_symmetrizer, GroupElement, WreathGroup};
use crate::linalg::{coefficient_vector, family_matrix};
use crate::poly::{homogeneous_dimension, Monomial, MultiPoly};
use crate::report::{CheckRecord, OpReport};
use crate::scalar::Scalar;
use crate::tableaux::{
    enumerate_rdiagrams, enumerate_standard_tableaux, index_map, RDiagram, RTableau,
};

/// A higher Specht polynomial together with its defining pair of tableaux.
#[derive(Clone, Debug)]
pub struct SpechtPolynomial {
    pub value: MultiPoly,
    pub source: RTableau,
    pub filling: RTableau,
    pub degree: u32,
}

/// The fundamental invariants e_j(x_1^r, …, x_n^r), j = 1..n.
#[derive(Clone, Debug)]
pub struct FundamentalInvariants {
    pub group: WreathGroup,
    pub gens: Vec<MultiPoly>,
}

impl FundamentalInvariants {
    pub fn new(group: &WreathGroup) -> Self {
        let n = group.n;
        let r = group.r;
        // elementary symmetric polynomials in the r-th powers
        let powers: Vec<MultiPoly> = (0..n)
            .map(|i| MultiPoly::variable(n, i, r).pow(group.r))
            .collect();
        // e[k] after processing each power: dynamic products
        let mut es: Vec<MultiPoly> = (0..=n)
            .map(|k| {
                if k == 0 {
                    MultiPoly::one(n, r)
                } else {
                    MultiPoly::zero(n)
                }
            })
            .collect();
        for p in &powers {
            for k in (1..=n).rev() {
                let bump = es[k - 1].try_mul(p).expect("same nvars");
                es[k] = es[k].try_add(&bump).expect("same nvars");
            }
        }
        FundamentalInvariants {
            group: *group,
            gens: es.into_iter().skip(1).collect(),
        }
    }

    /// Degrees r·1, r·2, …, r·n.
    pub fn degrees(&self) -> Vec<u32> {
        (1..=self.group.n as u32).map(|j| self.group.r * j).collect()
    }
}

/// The defining construction. S must be standard; T may be any filling of the
/// same shape.
pub fn higher_specht(group: &WreathGroup, s: &RTableau, t: &RTableau) -> Result<SpechtPolynomial> {
    if s.shape != t.shape {
        return Err(Error::ShapeMismatch(
            s.shape.canonical_string(),
            t.shape.canonical_string(),
        ));
    }
    let indices = index_map(s)?;
    let n = group.n;
    let r = group.r;
    let mut value = MultiPoly::one(n, r);
    for (nu, comp) in t.rows.iter().enumerate() {
        if comp.is_empty() {
            continue;
        }
        // monomial Π x_{T(cell)}^{r · i(S)(cell)} over the component's cells
        let mut exps = vec![0u32; n];
        for (row, line) in comp.iter().enumerate() {
            for (col, &entry) in line.iter().enumerate() {
                exps[entry - 1] += r * indices.index((nu, row, col)) as u32;
            }
        }
        let monomial = MultiPoly::monomial_term(n, Monomial::new(exps), Scalar::one(r));
        let symmetrized = young_symmetrizer(group, comp).apply(&monomial);
        // component factor Π_{k in T^ν} x_k^{ν−1}
        let mut factor_exps = vec![0u32; n];
        for line in comp {
            for &entry in line {
                factor_exps[entry - 1] += nu as u32;
            }
        }
        let factor = MultiPoly::monomial_term(n, Monomial::new(factor_exps), Scalar::one(r));
        value = value.try_mul(&symmetrized)?.try_mul(&factor)?;
    }
    let degree = value.homogeneous_degree().ok_or_else(|| {
        Error::ValidationFailed(format!(
            "higher Specht polynomial is not homogeneous or vanished: S={s}, T={t}"
        ))
    })?;
    // degree = Σ cells (r·index + component), components counted from 0
    let mut expect = 0u32;
    for (nu, comp) in t.rows.iter().enumerate() {
        for (row, line) in comp.iter().enumerate() {
            for (col, _) in line.iter().enumerate() {
                expect += r * indices.index((nu, row, col)) as u32 + nu as u32;
            }
        }
    }
    if degree != expect {
        return Err(Error::ValidationFailed(format!(
            "degree {degree} does not match the index formula {expect}"
        )));
    }
    Ok(SpechtPolynomial {
        value,
        source: s.clone(),
        filling: t.clone(),
        degree,
    })
}

/// {F_T^S : T standard of the shape}, verified exactly linearly independent.
pub fn specht_module_basis(
    group: &WreathGroup,
    shape: &RDiagram,
    s: &RTableau,
) -> Result<Vec<SpechtPolynomial>> {
    let tableaux = enumerate_standard_tableaux(shape);
    let family: Vec<SpechtPolynomial> = tableaux
        .iter()
        .map(|t| higher_specht(group, s, t))
        .collect::<Result<_>>()?;
    let polys: Vec<MultiPoly> = family.iter().map(|f| f.value.clone()).collect();
    let (matrix, _) = family_matrix(&polys, group.r);
    let rank = matrix.rank();
    if rank != family.len() {
        return Err(Error::DependenceDetected(format!(
            "shape {shape}, source {s}: rank {rank} of {} polynomials",
            family.len()
        )));
    }
    Ok(family)
}

/// Report of the stability check of span{F_T^S} under the group generators.
#[derive(Clone, Debug)]
pub struct IrreducibleReport {
    pub shape: RDiagram,
    pub dimension: usize,
    pub report: OpReport,
}

/// Verifies that the span of the basis is stable under every generator by
/// re-expanding each image exactly in the basis.
pub fn irreducible_check(
    group: &WreathGroup,
    shape: &RDiagram,
    s: &RTableau,
) -> Result<IrreducibleReport> {
    let family = specht_module_basis(group, shape, s)?;
    let polys: Vec<MultiPoly> = family.iter().map(|f| f.value.clone()).collect();
    let mut report = OpReport::new();
    for g in group.generators() {
        for f in &family {
            let image = g.act(&f.value);
            if expand_in_family(&polys, &image, group.r).is_err() {
                report.push(CheckRecord::fail(
                    format!("stability of {shape} under {g}"),
                    format!("g={g}, F={}", f.value),
                ));
                return Err(Error::NotStable(format!(
                    "shape {shape}: image of {} under {g} leaves the span",
                    f.value
                )));
            }
        }
        report.push(CheckRecord::pass(format!(
            "span of {} polynomials at {shape} stable under {g}",
            family.len()
        )));
    }
    Ok(IrreducibleReport {
        shape: shape.clone(),
        dimension: family.len(),
        report,
    })
}

/// Exact expansion coefficients of `target` in the given family.
pub fn expand_in_family(
    family: &[MultiPoly],
    target: &MultiPoly,
    r: u32,
) -> Result<Vec<Scalar>> {
    let (matrix, index) = family_matrix(family, r);
    let rhs = coefficient_vector(target, &index, r)?;
    matrix.solve(&rhs)
}

/// Result of the coinvariant-degree comparison.
#[derive(Clone, Debug)]
pub struct HilbertReport {
    pub group: WreathGroup,
    /// coefficient k = number of polynomials of degree k
    pub degree_counts: Vec<usize>,
    pub total: usize,
    pub report: OpReport,
}

/// Collects the degrees of every F_T^S over all shapes and all pairs (S,T) of
/// standard tableaux and compares the generating polynomial with
/// Π_j (1 + t + … + t^{r·j−1}), plus the regular-representation count.
pub fn coinvariant_hilbert_check(group: &WreathGroup) -> Result<HilbertReport> {
    let r = group.r;
    let n = group.n;
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    let mut total = 0usize;
    let mut sum_f_squared = 0u128;
    for shape in enumerate_rdiagrams(r as usize, n) {
        let tabs = enumerate_standard_tableaux(&shape);
        sum_f_squared += (tabs.len() as u128) * (tabs.len() as u128);
        for s in &tabs {
            for t in &tabs {
                let f = higher_specht(group, s, t)?;
                *counts.entry(f.degree).or_insert(0) += 1;
                total += 1;
            }
        }
    }
    // expected generating polynomial Π_j (1 + t + ... + t^{r j - 1})
    let mut expected = vec![1usize];
    for j in 1..=n as u32 {
        let d = (r * j) as usize;
        let mut next = vec![0usize; expected.len() + d - 1];
        for (i, &c) in expected.iter().enumerate() {
            for k in 0..d {
                next[i + k] += c;
            }
        }
        expected = next;
    }
    let max_deg = counts.keys().max().copied().unwrap_or(0) as usize;
    let mut degree_counts = vec![0usize; max_deg.max(expected.len() - 1) + 1];
    for (&d, &c) in &counts {
        degree_counts[d as usize] = c;
    }
    let mut expected_padded = expected.clone();
    expected_padded.resize(degree_counts.len(), 0);

    let mut report = OpReport::new();
    report.push(CheckRecord::of(
        format!("degree generating polynomial at (r,n)=({r},{n})"),
        degree_counts == expected_padded,
        format!("got {degree_counts:?}, expected {expected_padded:?}"),
    ));
    let order = group.order();
    report.push(CheckRecord::of(
        format!("family size equals the group order {order}"),
        total as u128 == order,
        format!("got {total}"),
    ));
    report.push(CheckRecord::of(
        format!("Σ (f^λ)² = {order}"),
        sum_f_squared == order,
        format!("got {sum_f_squared}"),
    ));
    Ok(HilbertReport {
        group: *group,
        degree_counts,
        total,
        report,
    })
}

/// Per-degree outcome of the free-module rank verification.
#[derive(Clone, Debug)]
pub struct RankCheckReport {
    pub group: WreathGroup,
    pub degree_bound: u32,
    /// (degree, number of products, rank, space dimension)
    pub rows: Vec<(u32, usize, usize, usize)>,
    pub report: OpReport,
}

/// For each degree d ≤ bound, assembles every product
/// (monomial in the fundamental invariants) · F_T^S of total degree d and
/// verifies by exact rank that the products are independent and span the full
/// degree-d space.
pub fn module_basis_rank_check(group: &WreathGroup, degree_bound: u32) -> Result<RankCheckReport> {
    let r = group.r;
    let n = group.n;
    let invariants = FundamentalInvariants::new(group);
    let inv_degrees = invariants.degrees();

    // all Specht polynomials over all shapes and standard pairs
    let mut family: Vec<SpechtPolynomial> = Vec::new();
    for shape in enumerate_rdiagrams(r as usize, n) {
        let tabs = enumerate_standard_tableaux(&shape);
        for s in &tabs {
            for t in &tabs {
                family.push(higher_specht(group, s, t)?);
            }
        }
    }

    // invariant monomials e^a by total degree
    let mut inv_monomials: BTreeMap<u32, Vec<MultiPoly>> = BTreeMap::new();
    let mut stack: Vec<(usize, u32, MultiPoly)> = vec![(0, 0, MultiPoly::one(n, r))];
    while let Some((next_gen, deg, poly)) = stack.pop() {
        inv_monomials.entry(deg).or_default().push(poly.clone());
        for j in next_gen..n {
            let d = deg + inv_degrees[j];
            if d > degree_bound {
                continue;
            }
            stack.push((j, d, poly.try_mul(&invariants.gens[j])?));
        }
    }

    let mut rows = Vec::new();
    let mut report = OpReport::new();
    for d in 0..=degree_bound {
        let mut products: Vec<MultiPoly> = Vec::new();
        for f in &family {
            if f.degree > d {
                continue;
            }
            if let Some(ms) = inv_monomials.get(&(d - f.degree)) {
                for m in ms {
                    products.push(m.try_mul(&f.value)?);
                }
            }
        }
        let dim = homogeneous_dimension(n, d);
        let (matrix, _) = family_matrix(&products, r);
        let rank = matrix.rank();
        rows.push((d, products.len(), rank, dim));
        let ok = rank == dim && products.len() == dim;
        report.push(CheckRecord::of(
            format!("degree {d}: {} products, rank {rank}, dim {dim}", products.len()),
            ok,
            format!(
                "(r,n)=({r},{n}), degree {d}: {} products, rank {rank}, expected dim {dim}",
                products.len()
            ),
        ));
        if rank != dim {
            return Err(Error::RankDeficient(d as usize, rank, dim));
        }
    }
    Ok(RankCheckReport {
        group: *group,
        degree_bound,
        rows,
        report,
    })
}

/// Characters of two sources S₁, S₂ of the same shape agree on every group
/// element (trace comparison of the representation matrices).
pub fn equal_characters_across_sources(
    group: &WreathGroup,
    shape: &RDiagram,
    s1: &RTableau,
    s2: &RTableau,
) -> Result<bool> {
    let trace_map = |s: &RTableau| -> Result<Vec<(GroupElement, Scalar)>> {
        let family = specht_module_basis(group, shape, s)?;
        let polys: Vec<MultiPoly> = family.iter().map(|f| f.value.clone()).collect();
        let mut traces = Vec::new();
        for g in group.enumerate()? {
            let mut tr = Scalar::zero(group.r);
            for (j, f) in family.iter().enumerate() {
                let coeffs = expand_in_family(&polys, &g.act(&f.value), group.r)
                    .map_err(|e| Error::ExpansionFailed(e.to_string()))?;
                tr = &tr + &coeffs[j];
            }
            traces.push((g, tr));
        }
        Ok(traces)
    };
    Ok(trace_map(s1)? == trace_map(s2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::RDiagram;

    fn tab(shape: &RDiagram, rows: Vec<Vec<Vec<usize>>>) -> RTableau {
        RTableau::new(shape.clone(), rows).unwrap()
    }

    #[test]
    fn rank_one_cases() {
        let g = WreathGroup::new(2, 1);
        // shape ((1),∅): F = 1
        let d = RDiagram::new(vec![vec![1], vec![]]).unwrap();
        let t = tab(&d, vec![vec![vec![1]], vec![]]);
        let f = higher_specht(&g, &t, &t).unwrap();
        assert_eq!(f.value.to_string(), "1");
        assert_eq!(f.degree, 0);
        // shape (∅,(1)): F = x1
        let d = RDiagram::new(vec![vec![], vec![1]]).unwrap();
        let t = tab(&d, vec![vec![], vec![vec![1]]]);
        let f = higher_specht(&g, &t, &t).unwrap();
        assert_eq!(f.value.to_string(), "x1");
        assert_eq!(f.degree, 1);
    }

    #[test]
    fn classical_column_case() {
        // r = 1, shape (1,1): F = (x2 - x1)/2
        let g = WreathGroup::new(1, 2);
        let d = RDiagram::new(vec![vec![1, 1]]).unwrap();
        let t = tab(&d, vec![vec![vec![1], vec![2]]]);
        let f = higher_specht(&g, &t, &t).unwrap();
        assert_eq!(f.value.to_string(), "-1/2*x1 + 1/2*x2");
    }

    #[test]
    fn shape_mismatch_rejected() {
        let g = WreathGroup::new(2, 2);
        let d1 = RDiagram::new(vec![vec![2], vec![]]).unwrap();
        let d2 = RDiagram::new(vec![vec![1], vec![1]]).unwrap();
        let s = tab(&d1, vec![vec![vec![1, 2]], vec![]]);
        let t = tab(&d2, vec![vec![vec![1]], vec![vec![2]]]);
        assert!(matches!(
            higher_specht(&g, &s, &t),
            Err(Error::ShapeMismatch(_, _))
        ));
    }

    #[test]
    fn basis_ranks() {
        // shape ((1),(1)) at r=2: two polynomials, rank 2
        let g = WreathGroup::new(2, 2);
        let d = RDiagram::new(vec![vec![1], vec![1]]).unwrap();
        let s = tab(&d, vec![vec![vec![1]], vec![vec![2]]]);
        let family = specht_module_basis(&g, &d, &s).unwrap();
        assert_eq!(family.len(), 2);
        // r=1, shape (2,1): two polynomials, rank 2
        let g = WreathGroup::new(1, 3);
        let d = RDiagram::new(vec![vec![2, 1]]).unwrap();
        let s = tab(&d, vec![vec![vec![1, 2], vec![3]]]);
        let family = specht_module_basis(&g, &d, &s).unwrap();
        assert_eq!(family.len(), 2);
        // single-tableau shape: family of size 1
        let g = WreathGroup::new(2, 2);
        let d = RDiagram::new(vec![vec![2], vec![]]).unwrap();
        let s = tab(&d, vec![vec![vec![1, 2]], vec![]]);
        assert_eq!(specht_module_basis(&g, &d, &s).unwrap().len(), 1);
    }

    #[test]
    fn degree_one_family_at_22() {
        // shape ((1),(1)), source (1|2): the basis is {x2, x1}
        let g = WreathGroup::new(2, 2);
        let d = RDiagram::new(vec![vec![1], vec![1]]).unwrap();
        let s = tab(&d, vec![vec![vec![1]], vec![vec![2]]]);
        let tabs = enumerate_standard_tableaux(&d);
        let values: Vec<String> = tabs
            .iter()
            .map(|t| higher_specht(&g, &s, t).unwrap().value.to_string())
            .collect();
        assert_eq!(values, vec!["x2".to_string(), "x1".to_string()]);
    }

    #[test]
    fn irreducibility_dimensions_at_22() {
        let g = WreathGroup::new(2, 2);
        for (comps, dim) in [
            (vec![vec![2], vec![]], 1usize),
            (vec![vec![], vec![1, 1]], 1),
            (vec![vec![1], vec![1]], 2),
        ] {
            let d = RDiagram::new(comps).unwrap();
            let s = enumerate_standard_tableaux(&d).into_iter().next().unwrap();
            let rep = irreducible_check(&g, &d, &s).unwrap();
            assert_eq!(rep.dimension, dim, "shape {d}");
            assert!(rep.report.all_passed());
        }
    }

    #[test]
    fn sign_like_character_at_0_11() {
        // shape (∅,(1,1)): one-dimensional, g·F = det(g)·F
        let g = WreathGroup::new(2, 2);
        let d = RDiagram::new(vec![vec![], vec![1, 1]]).unwrap();
        let s = tab(&d, vec![vec![], vec![vec![1], vec![2]]]);
        let f = higher_specht(&g, &s, &s).unwrap();
        for el in g.enumerate().unwrap() {
            assert_eq!(el.act(&f.value), f.value.scale(&el.det_character()));
        }
    }

    #[test]
    fn hilbert_series_small_cases() {
        // (2,2): 1 + 2t + 2t² + 2t³ + t⁴, total 8
        let rep = coinvariant_hilbert_check(&WreathGroup::new(2, 2)).unwrap();
        assert_eq!(rep.degree_counts, vec![1, 2, 2, 2, 1]);
        assert_eq!(rep.total, 8);
        assert!(rep.report.all_passed());
        // (1,2): 1 + t
        let rep = coinvariant_hilbert_check(&WreathGroup::new(1, 2)).unwrap();
        assert_eq!(rep.degree_counts, vec![1, 1]);
        assert_eq!(rep.total, 2);
        // (2,1): 1 + t
        let rep = coinvariant_hilbert_check(&WreathGroup::new(2, 1)).unwrap();
        assert_eq!(rep.degree_counts, vec![1, 1]);
        assert!(rep.report.all_passed());
    }

    #[test]
    fn module_rank_small_cases() {
        // (2,2) at d=2: three products, rank 3
        let rep = module_basis_rank_check(&WreathGroup::new(2, 2), 2).unwrap();
        assert!(rep.report.all_passed());
        assert_eq!(rep.rows[2], (2, 3, 3, 3));
        assert_eq!(rep.rows[0], (0, 1, 1, 1));
        // (1,1): rank 1 at every degree
        let rep = module_basis_rank_check(&WreathGroup::new(1, 1), 4).unwrap();
        for (_, count, rank, dim) in rep.rows {
            assert_eq!((count, rank, dim), (1, 1, 1));
        }
    }

    #[test]
    fn characters_agree_across_sources() {
        let g = WreathGroup::new(2, 2);
        let d = RDiagram::new(vec![vec![1], vec![1]]).unwrap();
        let tabs = enumerate_standard_tableaux(&d);
        assert!(equal_characters_across_sources(&g, &d, &tabs[0], &tabs[1]).unwrap());
        // a three-dimensional shape at (2,3)
        let g = WreathGroup::new(2, 3);
        let d = RDiagram::new(vec![vec![2], vec![1]]).unwrap();
        let tabs = enumerate_standard_tableaux(&d);
        assert_eq!(tabs.len(), 3);
        for pair in tabs.windows(2) {
            assert!(equal_characters_across_sources(&g, &d, &pair[0], &pair[1]).unwrap());
        }
    }
}
