//! Dunkl-Opdam operators for the type-B root system, the commuting integrals
//! of the rational Olshanetsky-Perelomov system, and the Hamiltonian with its
//! singular potential.
//!
//! D_y f = ∂_y f − Σ_s c_s (α_s, y)·(f − s·f)/α_s, the division being exact
//! because f − s·f vanishes on the reflection hyperplane. The integral of
//! order 2j acts on invariant polynomials as Σ_i D_{ε_i}^{2j}, realized by
//! iterated application; on invariants this agrees with the group-free
//! operator obtained by summing coefficients.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::ratfunc::RationalFunction;
use crate::report::{CheckRecord, OpReport};
use crate::roots::{CouplingMap, RootSystem};
use crate::scalar::Scalar;
use crate::specht::FundamentalInvariants;

/// D_y applied to a polynomial; the result is a polynomial of degree
/// deg f − 1 on homogeneous input. A `NotDivisible` escape here signals an
/// implementation bug upstream and is propagated as-is.
pub fn dunkl_apply(
    direction: &[BigRational],
    f: &MultiPoly,
    rs: &RootSystem,
    c: &CouplingMap,
) -> Result<MultiPoly> {
    let mut out = f.directional_derivative(direction)?;
    for refl in &rs.reflections {
        let coupling = c.value(refl.class);
        if coupling.is_zero() {
            continue;
        }
        let pairing = refl
            .root
            .iter()
            .zip(direction)
            .map(|(a, y)| a * y)
            .sum::<BigRational>();
        if pairing.is_zero() {
            continue;
        }
        let diff = f.try_sub(&refl.element.act(f))?;
        if diff.is_zero() {
            continue;
        }
        let quotient = diff.exact_divide(&refl.form)?;
        let weight = Scalar::from_rational(coupling * &pairing, 2);
        out = out.try_sub(&quotient.scale(&weight))?;
    }
    Ok(out)
}

/// D along the i-th coordinate direction (0-based).
pub fn dunkl_coordinate(i: usize, f: &MultiPoly, rs: &RootSystem, c: &CouplingMap) -> Result<MultiPoly> {
    let mut dir = vec![BigRational::zero(); rs.n];
    dir[i] = BigRational::from_integer(1.into());
    dunkl_apply(&dir, f, rs, c)
}

/// The commuting integral of order 2j: f ↦ Σ_i D_{ε_i}^{2j} f.
#[derive(Clone, Debug)]
pub struct CommutingIntegral {
    pub j: usize,
    pub rs: RootSystem,
    pub c: CouplingMap,
    /// When set, non-invariant input is rejected instead of processed.
    pub restricted: bool,
}

impl CommutingIntegral {
    pub fn new(j: usize, rs: RootSystem, c: CouplingMap) -> Result<Self> {
        if j < 1 || j > rs.n {
            return Err(Error::InvalidParameter(format!(
                "integral order j={j} outside 1..={}",
                rs.n
            )));
        }
        Ok(CommutingIntegral {
            j,
            rs,
            c,
            restricted: false,
        })
    }

    pub fn restricted(mut self) -> Self {
        self.restricted = true;
        self
    }

    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if self.restricted && !is_invariant(f, &self.rs) {
            return Err(Error::InvalidParameter(format!(
                "restricted integral applied to a non-invariant polynomial: {f}"
            )));
        }
        let mut acc = MultiPoly::zero(f.nvars());
        for i in 0..self.rs.n {
            let mut w = f.clone();
            for _ in 0..2 * self.j {
                w = dunkl_coordinate(i, &w, &self.rs, &self.c)?;
                if w.is_zero() {
                    break;
                }
            }
            acc = acc.try_add(&w)?;
        }
        Ok(acc)
    }
}

/// Invariance under the signed-permutation group, checked on generators.
pub fn is_invariant(f: &MultiPoly, rs: &RootSystem) -> bool {
    rs.group.generators().iter().all(|g| &g.act(f) == f)
}

/// Spanning set of the invariants up to the degree bound: monomials in the
/// fundamental invariants e_j(x²).
pub fn invariant_basis(rs: &RootSystem, degree_bound: u32) -> Vec<MultiPoly> {
    let inv = FundamentalInvariants::new(&rs.group);
    let degrees = inv.degrees();
    let n = rs.n;
    let mut out = Vec::new();
    let mut stack: Vec<(usize, u32, MultiPoly)> = vec![(0, 0, MultiPoly::one(n, 2))];
    while let Some((next, deg, poly)) = stack.pop() {
        out.push(poly.clone());
        for j in next..n {
            let d = deg + degrees[j];
            if d > degree_bound {
                continue;
            }
            stack.push((j, d, poly.try_mul(&inv.gens[j]).expect("same nvars")));
        }
    }
    out.sort_by_key(|p| (p.total_degree(), p.to_string()));
    out
}

/// The singular potential Σ_s c_s(c_s+1)(α_s,α_s)/α_s² as a rational function.
pub fn potential(rs: &RootSystem, c: &CouplingMap) -> Result<RationalFunction> {
    let n = rs.n;
    let mut acc = RationalFunction::zero(n, 2);
    for refl in &rs.reflections {
        let cs = c.value(refl.class);
        let weight = cs * (cs + BigRational::from_integer(1.into())) * &refl.norm_sq;
        if weight.is_zero() {
            continue;
        }
        let num = MultiPoly::constant(n, Scalar::from_rational(weight, 2));
        let den = refl.form.try_mul(&refl.form)?;
        acc = acc.add(&RationalFunction::new(num, den)?)?;
    }
    Ok(acc)
}

/// H f = Δ f − V·f exactly, for a rational function f.
pub fn hamiltonian_apply(
    f: &RationalFunction,
    rs: &RootSystem,
    c: &CouplingMap,
) -> Result<RationalFunction> {
    let mut lap = RationalFunction::zero(rs.n, 2);
    for i in 0..rs.n {
        lap = lap.add(&f.partial_derivative(i)?.partial_derivative(i)?)?;
    }
    lap.sub(&potential(rs, c)?.mul(f)?)
}

/// The polynomial-gauge second-order operator Δ − Σ_s (2c_s/α_s)·∂_{α_s},
/// applied to a rational function.
pub fn gauged_laplacian_apply(
    f: &RationalFunction,
    rs: &RootSystem,
    c: &CouplingMap,
) -> Result<RationalFunction> {
    let n = rs.n;
    let mut acc = RationalFunction::zero(n, 2);
    for i in 0..n {
        acc = acc.add(&f.partial_derivative(i)?.partial_derivative(i)?)?;
    }
    for refl in &rs.reflections {
        let cs = c.value(refl.class);
        if cs.is_zero() {
            continue;
        }
        let mut dir = RationalFunction::zero(n, 2);
        for (i, a) in refl.root.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            dir = dir.add(
                &f.partial_derivative(i)?
                    .scale(&Scalar::from_rational(a.clone(), 2)),
            )?;
        }
        let term = dir
            .mul(&RationalFunction::new(
                MultiPoly::constant(n, Scalar::from_rational(cs * BigRational::from_integer(2.into()), 2)),
                refl.form.clone(),
            )?)?;
        acc = acc.sub(&term)?;
    }
    Ok(acc)
}

/// Independent oracle for the restriction of Σ_i D_{ε_i}² to invariants:
/// Δ p − Σ_s (2 c_s / α_s) ∂_{α_s} p, every division exact because the
/// directional derivative of an invariant is anti-invariant under s.
pub fn invariant_restriction_oracle(
    p: &MultiPoly,
    rs: &RootSystem,
    c: &CouplingMap,
) -> Result<MultiPoly> {
    let n = rs.n;
    let mut acc = MultiPoly::zero(n);
    for i in 0..n {
        acc = acc.try_add(&p.partial_derivative(i)?.partial_derivative(i)?)?;
    }
    for refl in &rs.reflections {
        let cs = c.value(refl.class);
        if cs.is_zero() {
            continue;
        }
        let dir = p.directional_derivative(&refl.root)?;
        if dir.is_zero() {
            continue;
        }
        let quotient = dir.exact_divide(&refl.form)?;
        let weight = Scalar::from_rational(cs * BigRational::from_integer(2.into()), 2);
        acc = acc.try_sub(&quotient.scale(&weight))?;
    }
    Ok(acc)
}

/// The conjugator Π_s α_s^{c_s} for integer couplings.
pub fn gauge_conjugator(rs: &RootSystem, c: &CouplingMap) -> Result<MultiPoly> {
    let mut delta = MultiPoly::one(rs.n, 2);
    for refl in &rs.reflections {
        let cs = c.value(refl.class);
        if !cs.denom().is_one() || cs.is_negative() {
            return Err(Error::InvalidParameter(format!(
                "gauge conjugator needs nonnegative integer couplings, got {cs}"
            )));
        }
        let e: u32 = cs.numer().try_into().map_err(|_| {
            Error::InvalidParameter("coupling exponent too large".into())
        })?;
        delta = delta.try_mul(&refl.form.pow(e))?;
    }
    Ok(delta)
}

/// Outcome of the gauge comparison: the additive constant κ with
/// δ^{-1}·L(δ·f) − H(f) = κ·f on every sample, or the first counterexample.
#[derive(Clone, Debug)]
pub struct GaugeReport {
    pub constant: Option<Scalar>,
    pub report: OpReport,
}

/// Verifies the gauge relation between the polynomial-gauge operator and the
/// Hamiltonian at integer couplings, reporting the additive constant found.
pub fn gauge_relation_check(
    rs: &RootSystem,
    c: &CouplingMap,
    samples: &[RationalFunction],
) -> Result<GaugeReport> {
    let n = rs.n;
    let delta = gauge_conjugator(rs, c)?;
    let delta_rf = RationalFunction::from_poly(delta.clone());
    let one = RationalFunction::one(n, 2);

    let residue = |f: &RationalFunction| -> Result<RationalFunction> {
        let conjugated = gauged_laplacian_apply(&f.mul(&delta_rf)?, rs, c)?.div(&delta_rf)?;
        conjugated.sub(&hamiltonian_apply(f, rs, c)?)
    };

    let kappa_rf = residue(&one)?;
    let mut report = OpReport::new();
    let Some(kappa) = kappa_rf.constant_value() else {
        report.push(CheckRecord::fail(
            "gauge residue at f = 1 is a constant",
            format!("got {kappa_rf}"),
        ));
        return Ok(GaugeReport {
            constant: None,
            report,
        });
    };
    report.push(CheckRecord::pass_with(
        "gauge residue at f = 1 is a constant",
        format!("κ = {kappa}"),
    ));
    for f in samples {
        let lhs = residue(f)?;
        let rhs = f.scale(&kappa);
        report.push(CheckRecord::of(
            format!("gauge relation on {f}"),
            lhs.equals(&rhs),
            format!("residue {lhs} vs κ·f = {rhs}"),
        ));
    }
    Ok(GaugeReport {
        constant: Some(kappa),
        report,
    })
}

/// Exact commutator sweep: (A∘B − B∘A) f = 0 for every test polynomial.
pub fn commutator_check<A, B>(
    op_a: A,
    op_b: B,
    tests: &[MultiPoly],
) -> Result<OpReport>
where
    A: Fn(&MultiPoly) -> Result<MultiPoly>,
    B: Fn(&MultiPoly) -> Result<MultiPoly>,
{
    let mut report = OpReport::new();
    let mut max_degree = 0u32;
    for f in tests {
        max_degree = max_degree.max(f.total_degree());
        let ab = op_a(&op_b(f)?)?;
        let ba = op_b(&op_a(f)?)?;
        if ab != ba {
            report.push(CheckRecord::fail(
                "commutator vanishes",
                format!("counterexample f = {f}: {ab} vs {ba}"),
            ));
            return Ok(report);
        }
    }
    report.push(CheckRecord::pass_with(
        "commutator vanishes on the test set",
        format!("{} polynomials, max degree {max_degree}", tests.len()),
    ));
    Ok(report)
}
