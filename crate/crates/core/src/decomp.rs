//! Representation matrices on the Specht bases, characters, central and
//! primitive idempotents, and the degree-graded decomposition of the
//! polynomial ring under the invariant differential operators.
//!
//! Primitive idempotents come from matrix-unit averaging over the enumerated
//! group using the representation in the Specht basis itself; this makes the
//! projection test e_i F_{T_j} = δ_{ij} F_{T_i} sharp. One source tableau per
//! shape (the first in enumeration order) fixes the generator F_{T_i} paired
//! with every idempotent, and reports record that choice.

use std::collections::{BTreeMap, BTreeSet};

use crate::chart::InvariantChart;
use crate::error::{Error, Result};
use crate::group::{GroupAlgebraElement, GroupElement, WreathGroup};
use crate::linalg::{coefficient_vector, family_matrix, ScalarMatrix};
use crate::localized::LocalizedElement;
use crate::poly::{monomials_of_degree, MultiPoly};
use crate::report::{CheckRecord, OpReport};
use crate::scalar::Scalar;
use crate::specht::{specht_module_basis, SpechtPolynomial};
use crate::tableaux::{enumerate_rdiagrams, enumerate_standard_tableaux, RDiagram, RTableau};

/// The matrices of a shape's irreducible representation in its Specht basis.
#[derive(Clone, Debug)]
pub struct Representation {
    pub group: WreathGroup,
    pub shape: RDiagram,
    pub source: RTableau,
    pub basis: Vec<SpechtPolynomial>,
    pub dim: usize,
    pub matrices: BTreeMap<GroupElement, ScalarMatrix>,
    pub character: BTreeMap<GroupElement, Scalar>,
}

/// Expands g·F_T exactly in the basis for every group element; the columns of
/// ρ(g) are the expansion coefficients, so ρ(gh) = ρ(g)ρ(h).
pub fn rep_matrices(group: &WreathGroup, shape: &RDiagram, source: &RTableau) -> Result<Representation> {
    let basis = specht_module_basis(group, shape, source)?;
    let dim = basis.len();
    let polys: Vec<MultiPoly> = basis.iter().map(|f| f.value.clone()).collect();
    let (matrix, index) = family_matrix(&polys, group.r);
    let mut matrices = BTreeMap::new();
    let mut character = BTreeMap::new();
    for g in group.enumerate()? {
        let mut rho = ScalarMatrix::zeros(dim, dim, group.r);
        for (j, f) in basis.iter().enumerate() {
            let image = g.act(&f.value);
            let rhs = coefficient_vector(&image, &index, group.r)
                .map_err(|e| Error::ExpansionFailed(e.to_string()))?;
            let coeffs = matrix
                .solve(&rhs)
                .map_err(|_| Error::ExpansionFailed(format!("g={g}, T index {j}")))?;
            for (i, c) in coeffs.into_iter().enumerate() {
                rho.set(i, j, c);
            }
        }
        let mut tr = Scalar::zero(group.r);
        for i in 0..dim {
            tr = &tr + rho.get(i, i);
        }
        character.insert(g.clone(), tr);
        matrices.insert(g, rho);
    }
    let rep = Representation {
        group: *group,
        shape: shape.clone(),
        source: source.clone(),
        basis,
        dim,
        matrices,
        character,
    };
    rep.validate()?;
    Ok(rep)
}

impl Representation {
    fn validate(&self) -> Result<()> {
        let id = self.group.identity();
        let rho_id = &self.matrices[&id];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let expect = if i == j {
                    Scalar::one(self.group.r)
                } else {
                    Scalar::zero(self.group.r)
                };
                if rho_id.get(i, j) != &expect {
                    return Err(Error::ValidationFailed("ρ(identity) ≠ I".into()));
                }
            }
        }
        // homomorphism on a deterministic sample of pairs
        let elements: Vec<&GroupElement> = self.matrices.keys().collect();
        for a in elements.iter().step_by(3) {
            for b in elements.iter().step_by(2) {
                let prod = a.product(b)?;
                let lhs = &self.matrices[&prod];
                let rhs = mat_mul(&self.matrices[*a], &self.matrices[*b]);
                if !mat_eq(lhs, &rhs) {
                    return Err(Error::ValidationFailed(format!(
                        "ρ({a})ρ({b}) ≠ ρ(product)"
                    )));
                }
            }
        }
        // character constant on conjugacy classes
        for class in self.group.conjugacy_classes()? {
            let v = &self.character[&class[0]];
            if class.iter().any(|g| &self.character[g] != v) {
                return Err(Error::ValidationFailed(
                    "character not constant on a conjugacy class".into(),
                ));
            }
        }
        Ok(())
    }

    /// χ(g), looked up.
    pub fn chi(&self, g: &GroupElement) -> &Scalar {
        &self.character[g]
    }
}

fn mat_mul(a: &ScalarMatrix, b: &ScalarMatrix) -> ScalarMatrix {
    let r = a.order();
    let mut out = ScalarMatrix::zeros(a.rows, b.cols, r);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = Scalar::zero(r);
            for k in 0..a.cols {
                let x = a.get(i, k);
                let y = b.get(k, j);
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            out.set(i, j, acc);
        }
    }
    out
}

fn mat_eq(a: &ScalarMatrix, b: &ScalarMatrix) -> bool {
    if a.rows != b.rows || a.cols != b.cols {
        return false;
    }
    for i in 0..a.rows {
        for j in 0..a.cols {
            if a.get(i, j) != b.get(i, j) {
                return false;
            }
        }
    }
    true
}

/// r_λ = (f^λ/|G|) Σ_g χ(g^{-1})·g, validated idempotent and central.
pub fn central_idempotent(rep: &Representation) -> Result<GroupAlgebraElement> {
    let group = rep.group;
    let order = group.order() as i64;
    let norm = Scalar::from_ratio(rep.dim as i64, order, group.r);
    let mut out = GroupAlgebraElement::zero(group);
    for g in rep.matrices.keys() {
        let coeff = &norm * rep.chi(&g.inverse());
        out = out.add(&GroupAlgebraElement::from_terms(group, [(g.clone(), coeff)]));
    }
    if out.mul(&out)? != out {
        return Err(Error::ValidationFailed(format!(
            "central idempotent of {} is not idempotent",
            rep.shape
        )));
    }
    for gen in group.generators() {
        let left = GroupAlgebraElement::from_element(group, gen.clone()).mul(&out)?;
        let right = out.mul(&GroupAlgebraElement::from_element(group, gen))?;
        if left != right {
            return Err(Error::ValidationFailed(format!(
                "central idempotent of {} is not central",
                rep.shape
            )));
        }
    }
    Ok(out)
}

/// The group-algebra element whose Fourier coefficient at this representation
/// is the matrix unit E_{ij} (and zero at every other shape):
/// a(g) = (f/|G|)·[ρ(g^{-1})]_{ji}. It maps the image of e_j into the image
/// of e_i.
pub fn matrix_unit(rep: &Representation, i: usize, j: usize) -> GroupAlgebraElement {
    let group = rep.group;
    let order = group.order() as i64;
    let norm = Scalar::from_ratio(rep.dim as i64, order, group.r);
    let mut out = GroupAlgebraElement::zero(group);
    for g in rep.matrices.keys() {
        let coeff = &norm * rep.matrices[&g.inverse()].get(j, i);
        out = out.add(&GroupAlgebraElement::from_terms(group, [(g.clone(), coeff)]));
    }
    out
}

/// One primitive idempotent per standard tableau position:
/// e_i = (f/|G|) Σ_g [ρ(g^{-1})]_{ii}·g. Validates e_i² = e_i, e_i e_j = 0,
/// and Σ_i e_i = r_λ.
pub fn primitive_idempotents(rep: &Representation) -> Result<Vec<GroupAlgebraElement>> {
    let es: Vec<GroupAlgebraElement> = (0..rep.dim).map(|i| matrix_unit(rep, i, i)).collect();
    let mut sum = GroupAlgebraElement::zero(rep.group);
    for (i, e) in es.iter().enumerate() {
        if e.mul(e)? != *e {
            return Err(Error::ValidationFailed(format!(
                "e_{i} at {} is not idempotent",
                rep.shape
            )));
        }
        for (j, f) in es.iter().enumerate() {
            if i != j && !e.mul(f)?.is_zero() {
                return Err(Error::ValidationFailed(format!(
                    "e_{i}·e_{j} ≠ 0 at {}",
                    rep.shape
                )));
            }
        }
        sum = sum.add(e);
    }
    if sum != central_idempotent(rep)? {
        return Err(Error::ValidationFailed(format!(
            "Σ e_i ≠ r_λ at {}",
            rep.shape
        )));
    }
    Ok(es)
}

/// All idempotents of the group algebra, organized by shape, with the fixed
/// source tableau per shape and the paired Specht generators.
#[derive(Clone, Debug)]
pub struct IdempotentSet {
    pub group: WreathGroup,
    pub shapes: Vec<RDiagram>,
    pub reps: Vec<Representation>,
    pub central: Vec<GroupAlgebraElement>,
    /// (shape index, tableau index within the shape, idempotent).
    pub primitive: Vec<(usize, usize, GroupAlgebraElement)>,
}

pub fn build_idempotent_set(group: &WreathGroup) -> Result<IdempotentSet> {
    let shapes = enumerate_rdiagrams(group.r as usize, group.n);
    let mut reps = Vec::new();
    let mut central = Vec::new();
    let mut primitive = Vec::new();
    for (si, shape) in shapes.iter().enumerate() {
        let source = enumerate_standard_tableaux(shape)
            .into_iter()
            .next()
            .expect("every shape has a standard tableau");
        let rep = rep_matrices(group, shape, &source)?;
        central.push(central_idempotent(&rep)?);
        for (ti, e) in primitive_idempotents(&rep)?.into_iter().enumerate() {
            primitive.push((si, ti, e));
        }
        reps.push(rep);
    }
    Ok(IdempotentSet {
        group: *group,
        shapes,
        reps,
        central,
        primitive,
    })
}

impl IdempotentSet {
    /// Completeness Σ_λ r_λ = 1, pairwise central orthogonality, cross-shape
    /// orthogonality of the primitives, and character orthogonality.
    pub fn validate(&self) -> Result<OpReport> {
        let group = self.group;
        let mut report = OpReport::new();
        let mut total = GroupAlgebraElement::zero(group);
        for r in &self.central {
            total = total.add(r);
        }
        report.push(CheckRecord::of(
            "Σ r_λ = 1",
            total == GroupAlgebraElement::one(group),
            format!("got {total}"),
        ));
        for (i, a) in self.central.iter().enumerate() {
            for (j, b) in self.central.iter().enumerate() {
                if i < j {
                    report.push(CheckRecord::of(
                        format!("r_{} · r_{} = 0", self.shapes[i], self.shapes[j]),
                        a.mul(b)?.is_zero(),
                        "nonzero product of distinct central idempotents",
                    ));
                }
            }
        }
        for (si, ti, e) in &self.primitive {
            for (sj, tj, f) in &self.primitive {
                if (si, ti) < (sj, tj) {
                    report.push(CheckRecord::of(
                        format!("e[{si},{ti}] · e[{sj},{tj}] = 0"),
                        e.mul(f)?.is_zero(),
                        "nonzero product of distinct primitive idempotents",
                    ));
                }
            }
        }
        // character orthogonality (1/|G|) Σ_g χ_λ(g)·conj(χ_μ(g)) = δ_{λμ}
        let order = group.order() as i64;
        let inv_order = Scalar::from_ratio(1, order, group.r);
        for (i, a) in self.reps.iter().enumerate() {
            for (j, b) in self.reps.iter().enumerate() {
                let mut acc = Scalar::zero(group.r);
                for (g, chi) in &a.character {
                    acc = &acc + &(chi * &b.character[g].conj());
                }
                acc = &acc * &inv_order;
                let expect = if i == j {
                    Scalar::one(group.r)
                } else {
                    Scalar::zero(group.r)
                };
                report.push(CheckRecord::of(
                    format!(
                        "character orthogonality ({}, {})",
                        self.shapes[i], self.shapes[j]
                    ),
                    acc == expect,
                    format!("got {acc}"),
                ));
            }
        }
        Ok(report)
    }

    /// The sharp projection test: e_i applied to the Specht basis of its own
    /// shape picks out exactly the matching generator.
    pub fn idempotent_on_specht(&self) -> Result<OpReport> {
        let mut report = OpReport::new();
        for (si, ti, e) in &self.primitive {
            let rep = &self.reps[*si];
            for (tj, f) in rep.basis.iter().enumerate() {
                let image = e.apply(&f.value);
                let expect = if ti == &tj {
                    f.value.clone()
                } else {
                    MultiPoly::zero(self.group.n)
                };
                report.push(CheckRecord::of(
                    format!("e[{si},{ti}]·F_{tj} = δ·F at {}", rep.shape),
                    image == expect,
                    format!("source {}, got {image}", rep.source),
                ));
            }
        }
        Ok(report)
    }

    /// The Specht generator paired with a primitive idempotent.
    pub fn generator(&self, index: usize) -> &SpechtPolynomial {
        let (si, ti, _) = &self.primitive[index];
        &self.reps[*si].basis[*ti]
    }
}

/// Per-degree ranks for the graded direct-sum verification.
#[derive(Clone, Debug)]
pub struct GradedReport {
    pub degree_bound: u32,
    /// (degree, per-idempotent ranks, space dimension)
    pub rows: Vec<(u32, Vec<usize>, usize)>,
    pub report: OpReport,
}

/// For each degree d ≤ bound: the images of the primitive idempotents on the
/// degree-d space have ranks summing to its dimension and intersect pairwise
/// in zero (joint rank additivity).
pub fn graded_direct_sum_check(set: &IdempotentSet, degree_bound: u32) -> Result<GradedReport> {
    let group = set.group;
    let n = group.n;
    let mut rows = Vec::new();
    let mut report = OpReport::new();
    for d in 0..=degree_bound {
        let monomials = monomials_of_degree(n, d);
        let dim = monomials.len();
        let mut images: Vec<Vec<MultiPoly>> = Vec::new();
        for (_, _, e) in &set.primitive {
            images.push(
                monomials
                    .iter()
                    .map(|m| e.apply(&MultiPoly::monomial_term(n, m.clone(), Scalar::one(group.r))))
                    .collect(),
            );
        }
        let matrices: Vec<ScalarMatrix> = images
            .iter()
            .map(|polys| family_matrix_on(polys, &monomials, group.r))
            .collect::<Result<_>>()?;
        let ranks: Vec<usize> = matrices.iter().map(|m| m.rank()).collect();
        let sum: usize = ranks.iter().sum();
        report.push(CheckRecord::of(
            format!("degree {d}: Σ ranks = dim {dim}"),
            sum == dim,
            format!("ranks {ranks:?}"),
        ));
        let mut pairwise = true;
        for i in 0..matrices.len() {
            for j in i + 1..matrices.len() {
                if ranks[i] == 0 || ranks[j] == 0 {
                    continue;
                }
                let joint = matrices[i].hstack(&matrices[j]).rank();
                if joint != ranks[i] + ranks[j] {
                    pairwise = false;
                }
            }
        }
        report.push(CheckRecord::of(
            format!("degree {d}: pairwise image intersections are zero"),
            pairwise,
            "joint rank below the sum of ranks",
        ));
        rows.push((d, ranks, dim));
    }
    Ok(GradedReport {
        degree_bound,
        rows,
        report,
    })
}

/// Coefficient matrix of a family against a fixed monomial basis.
fn family_matrix_on(
    polys: &[MultiPoly],
    monomials: &[crate::poly::Monomial],
    r: u32,
) -> Result<ScalarMatrix> {
    let mut m = ScalarMatrix::zeros(monomials.len(), polys.len(), r);
    for (j, p) in polys.iter().enumerate() {
        let col = coefficient_vector(p, monomials, r)?;
        for (i, c) in col.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// Group-algebra action on a localized element: g·(p/Δ^k) = det(g)^k·(g·p)/Δ^k
/// since Δ transforms by the determinant character.
pub fn algebra_apply_localized(
    a: &GroupAlgebraElement,
    f: &LocalizedElement,
    chart: &InvariantChart,
) -> Result<LocalizedElement> {
    let mut acc = chart.localization.zero();
    for (g, c) in a.terms() {
        let mut coeff = c.clone();
        if f.delta_power % 2 == 1 {
            coeff = &coeff * &g.det_character();
        }
        let piece = LocalizedElement {
            num: g.act(&f.num).scale(&coeff),
            delta_power: f.delta_power,
        };
        acc = chart.localization.add(&acc, &piece)?;
    }
    Ok(acc)
}

/// Words in {multiply by y_j, ∂/∂y_j} of length ≤ depth applied to the seed,
/// canonicalized and deduplicated.
pub fn orbit_family(
    chart: &InvariantChart,
    seed: &MultiPoly,
    depth: usize,
) -> Result<Vec<LocalizedElement>> {
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut family: Vec<LocalizedElement> = Vec::new();
    let mut frontier = vec![chart
        .localization
        .canonicalize(LocalizedElement::from_poly(seed.clone()))];
    let key = |e: &LocalizedElement| format!("{}|{}", e.delta_power, e.num);
    seen.insert(key(&frontier[0]));
    family.push(frontier[0].clone());
    for _ in 0..depth {
        let mut next = Vec::new();
        for f in &frontier {
            for j in 0..chart.n {
                let by_y = chart.localization.mul_poly(f, &chart.y_gens[j])?;
                let by_d = chart.dy(j, f)?;
                for candidate in [by_y, by_d] {
                    if candidate.is_zero() {
                        continue;
                    }
                    if seen.insert(key(&candidate)) {
                        family.push(candidate.clone());
                        next.push(candidate);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(family)
}

/// Outcome of the orbit-span decision. `Inconclusive` means the bounds were
/// exhausted, which is distinct from disproof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member { clearing: usize },
    Inconclusive,
}

/// Decides whether Δ^{2k}·target lies in the span of the family cleared to
/// the common power Δ^{2k}, for some k ≤ delta_order_bound. Clearing always
/// multiplies by even powers, which are polynomial invariants, so success is
/// a sound membership certificate.
pub fn orbit_membership(
    chart: &InvariantChart,
    family: &[LocalizedElement],
    target: &MultiPoly,
    delta_order_bound: usize,
) -> Result<Membership> {
    if target.is_zero() {
        return Ok(Membership::Member { clearing: 0 });
    }
    let delta_degree = chart.delta.total_degree();
    let target_degree = target
        .homogeneous_degree()
        .ok_or_else(|| Error::InvalidParameter("orbit target must be homogeneous".into()))? as i64;
    for k in 0..=delta_order_bound {
        let mut cleared: Vec<MultiPoly> = Vec::new();
        for f in family {
            if f.delta_power > 2 * k {
                continue;
            }
            let deg = match f.homogeneous_degree(delta_degree) {
                Some(d) => d,
                None => continue,
            };
            if deg != target_degree {
                continue;
            }
            let power = chart.delta.pow((2 * k - f.delta_power) as u32);
            cleared.push(f.num.try_mul(&power)?);
        }
        if cleared.is_empty() {
            continue;
        }
        let goal = target.try_mul(&chart.delta.pow(2 * k as u32))?;
        let (matrix, index) = family_matrix(&cleared, 2);
        let rhs = match coefficient_vector(&goal, &index, 2) {
            Ok(v) => v,
            Err(_) => continue,
        };
        if matrix.solve(&rhs).is_ok() {
            return Ok(Membership::Member { clearing: k });
        }
    }
    Ok(Membership::Inconclusive)
}

/// Full sweep: every e_i·monomial up to the degree bound must certify inside
/// the orbit span of the paired Specht generator.
#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub report: OpReport,
    pub members: usize,
    pub inconclusive: usize,
}

pub fn orbit_membership_sweep(
    set: &IdempotentSet,
    chart: &InvariantChart,
    degree_bound: u32,
    depth: usize,
    delta_order_bound: usize,
) -> Result<OrbitReport> {
    let n = set.group.n;
    let mut report = OpReport::new();
    let mut members = 0usize;
    let mut inconclusive = 0usize;
    for (index, (si, ti, e)) in set.primitive.iter().enumerate() {
        let generator = set.generator(index);
        let family = orbit_family(chart, &generator.value, depth)?;
        for d in 0..=degree_bound {
            for m in monomials_of_degree(n, d) {
                let target =
                    e.apply(&MultiPoly::monomial_term(n, m.clone(), Scalar::one(set.group.r)));
                if target.is_zero() {
                    continue;
                }
                match orbit_membership(chart, &family, &target, delta_order_bound)? {
                    Membership::Member { clearing } => {
                        members += 1;
                        report.push(CheckRecord::pass_with(
                            format!("e[{si},{ti}]·monomial degree {d} inside orbit"),
                            format!("target {target}, clearing Δ^{}", 2 * clearing),
                        ));
                    }
                    Membership::Inconclusive => {
                        inconclusive += 1;
                        report.push(CheckRecord::inconclusive(
                            format!("e[{si},{ti}]·monomial degree {d} inside orbit"),
                            format!(
                                "target {target} not certified within depth {depth}, Δ-order {delta_order_bound}"
                            ),
                        ));
                    }
                }
            }
        }
    }
    Ok(OrbitReport {
        report,
        members,
        inconclusive,
    })
}

/// Graded intertwiner comparison for two primitive idempotents of the same
/// shape, and annihilation across shapes.
pub fn isomorphism_class_check(
    set: &IdempotentSet,
    shape_index: usize,
    i: usize,
    j: usize,
    degree_bound: u32,
) -> Result<OpReport> {
    let group = set.group;
    let n = group.n;
    let rep = &set.reps[shape_index];
    let mut report = OpReport::new();
    // u corresponds to the matrix unit E_{ji}: u = e_j·u·e_i, carrying the
    // image of e_i onto the image of e_j.
    let u = matrix_unit(rep, j, i);
    let e_i = matrix_unit(rep, i, i);
    let e_j = matrix_unit(rep, j, j);
    report.push(CheckRecord::of(
        "intertwiner is supported between the two idempotents",
        u.mul(&e_i)? == u && e_j.mul(&u)? == u,
        "e_j·u·e_i ≠ u",
    ));
    for d in 0..=degree_bound {
        let monomials = monomials_of_degree(n, d);
        let images_i: Vec<MultiPoly> = monomials
            .iter()
            .map(|m| e_i.apply(&MultiPoly::monomial_term(n, m.clone(), Scalar::one(group.r))))
            .collect();
        let images_j: Vec<MultiPoly> = monomials
            .iter()
            .map(|m| e_j.apply(&MultiPoly::monomial_term(n, m.clone(), Scalar::one(group.r))))
            .collect();
        let mapped: Vec<MultiPoly> = images_i.iter().map(|p| u.apply(p)).collect();
        let mi = family_matrix_on(&images_i, &monomials, group.r)?;
        let mj = family_matrix_on(&images_j, &monomials, group.r)?;
        let mu = family_matrix_on(&mapped, &monomials, group.r)?;
        let (ri, rj, ru) = (mi.rank(), mj.rank(), mu.rank());
        let inside = mj.hstack(&mu).rank() == rj;
        report.push(CheckRecord::of(
            format!("degree {d}: graded ranks agree and u maps bijectively"),
            ri == rj && ru == ri && inside,
            format!("rank_i {ri}, rank_j {rj}, rank_u {ru}, contained: {inside}"),
        ));
    }
    Ok(report)
}

/// The commutation of the group algebra with the invariant operators on
/// samples: e·(y_j f) = y_j·(e f) and e·∂y(f̃) = ∂y(e·f̃).
pub fn idempotents_commute_with_invariant_operators(
    set: &IdempotentSet,
    chart: &InvariantChart,
    degree_bound: u32,
) -> Result<OpReport> {
    let n = set.group.n;
    let mut report = OpReport::new();
    let mut samples: Vec<MultiPoly> = Vec::new();
    for d in 0..=degree_bound {
        for m in monomials_of_degree(n, d) {
            samples.push(MultiPoly::monomial_term(n, m, Scalar::one(set.group.r)));
        }
    }
    for (si, ti, e) in &set.primitive {
        let mut mult_ok = true;
        let mut deriv_ok = true;
        for f in &samples {
            for j in 0..n {
                let yf = f.try_mul(&chart.y_gens[j])?;
                if e.apply(&yf) != e.apply(f).try_mul(&chart.y_gens[j])? {
                    mult_ok = false;
                }
                let loc = LocalizedElement::from_poly(f.clone());
                let lhs = algebra_apply_localized(e, &chart.dy(j, &loc)?, chart)?;
                let rhs = chart.dy(
                    j,
                    &algebra_apply_localized(e, &loc, chart)?,
                )?;
                if lhs != rhs {
                    deriv_ok = false;
                }
            }
        }
        report.push(CheckRecord::of(
            format!("e[{si},{ti}] commutes with multiplication by invariants"),
            mult_ok,
            "a y-multiplication does not commute",
        ));
        report.push(CheckRecord::of(
            format!("e[{si},{ti}] commutes with the invariant derivations"),
            deriv_ok,
            "an invariant derivation does not commute",
        ));
    }
    Ok(report)
}
