//! Formal elements of the semidirect product of differential operators with
//! the group algebra, kept in normal form: rational-function coefficients on
//! the left, derivatives in the middle, group elements on the right.
//!
//! Needed for the lowering map (sum of the differential coefficients), which
//! sends an invariant operator to the operator it induces on invariant
//! functions. Products move group elements to the right through derivatives
//! (picking up root-of-unity factors and permuted directions) and derivatives
//! through coefficients by the general Leibniz rule.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::group::{GroupElement, WreathGroup};
use crate::poly::MultiPoly;
use crate::ratfunc::RationalFunction;
use crate::roots::{CouplingMap, RootSystem};
use crate::scalar::Scalar;

/// Derivative multi-index: ∂^β = ∂₁^{β₁}⋯∂ₙ^{βₙ}.
pub type MultiIndex = Vec<u32>;

/// A group-free differential operator Σ_β R_β(x) ∂^β.
#[derive(Clone, Debug)]
pub struct DiffOp {
    pub nvars: usize,
    terms: BTreeMap<MultiIndex, RationalFunction>,
}

impl DiffOp {
    pub fn zero(nvars: usize) -> Self {
        DiffOp {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, RationalFunction)>>(
        nvars: usize,
        iter: I,
    ) -> Self {
        let mut out = Self::zero(nvars);
        for (beta, c) in iter {
            out.add_term(&beta, &c);
        }
        out
    }

    /// ∂ in the i-th coordinate.
    pub fn derivative(nvars: usize, i: usize, r: u32) -> Self {
        let mut beta = vec![0u32; nvars];
        beta[i] = 1;
        Self::from_terms(nvars, [(beta, RationalFunction::one(nvars, r))])
    }

    pub fn identity(nvars: usize, r: u32) -> Self {
        Self::from_terms(nvars, [(vec![0; nvars], RationalFunction::one(nvars, r))])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &RationalFunction)> {
        self.terms.iter()
    }

    fn add_term(&mut self, beta: &MultiIndex, c: &RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(beta) {
            Some(existing) => {
                let sum = existing.add(c).expect("same nvars");
                if sum.is_zero() {
                    self.terms.remove(beta);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(beta.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (beta, c) in &other.terms {
            out.add_term(beta, c);
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> Result<DiffOp> {
        let mut out = Self::zero(self.nvars);
        for (beta, k) in &self.terms {
            out.add_term(beta, &k.mul(c)?);
        }
        Ok(out)
    }

    /// Operator composition: (R ∂^β)(R' ∂^γ) expanded by the general Leibniz
    /// rule ∂^β∘R' = Σ_{δ≤β} binom(β,δ) (∂^{β−δ}R') ∂^δ.
    pub fn compose(&self, other: &DiffOp) -> Result<DiffOp> {
        let mut out = Self::zero(self.nvars);
        for (beta, r1) in &self.terms {
            for (gamma, r2) in &other.terms {
                for (delta, binom) in sub_indices(beta) {
                    let mut deriv = r2.clone();
                    let order: MultiIndex = beta
                        .iter()
                        .zip(&delta)
                        .map(|(b, d)| b - d)
                        .collect();
                    for (i, &o) in order.iter().enumerate() {
                        for _ in 0..o {
                            deriv = deriv.partial_derivative(i)?;
                        }
                        if deriv.is_zero() {
                            break;
                        }
                    }
                    if deriv.is_zero() {
                        continue;
                    }
                    let coeff = r1
                        .mul(&deriv)?
                        .scale(&Scalar::from_int(binom as i64, scalar_order(r1)));
                    let index: MultiIndex = delta
                        .iter()
                        .zip(gamma)
                        .map(|(d, g)| d + g)
                        .collect();
                    out.add_term(&index, &coeff);
                }
            }
        }
        Ok(out)
    }

    /// Apply to a rational function.
    pub fn apply(&self, f: &RationalFunction) -> Result<RationalFunction> {
        let r = scalar_order(
            self.terms
                .values()
                .next()
                .unwrap_or(&RationalFunction::one(self.nvars, 2)),
        );
        let mut acc = RationalFunction::zero(self.nvars, r);
        for (beta, c) in &self.terms {
            let mut w = f.clone();
            for (i, &o) in beta.iter().enumerate() {
                for _ in 0..o {
                    w = w.partial_derivative(i)?;
                }
                if w.is_zero() {
                    break;
                }
            }
            if w.is_zero() {
                continue;
            }
            acc = acc.add(&c.mul(&w)?)?;
        }
        Ok(acc)
    }

    pub fn apply_poly(&self, f: &MultiPoly) -> Result<RationalFunction> {
        self.apply(&RationalFunction::from_poly(f.clone()))
    }

    /// Termwise equality of coefficients, by cross-multiplication.
    pub fn equals(&self, other: &DiffOp) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms.iter().all(|(beta, c)| {
            other
                .terms
                .get(beta)
                .is_some_and(|d| c.equals(d))
        })
    }
}

fn scalar_order(rf: &RationalFunction) -> u32 {
    rf.den.scalar_order().unwrap_or(2)
}

/// All δ ≤ β with Π binom(β_i, δ_i).
fn sub_indices(beta: &MultiIndex) -> Vec<(MultiIndex, u64)> {
    let mut out: Vec<(MultiIndex, u64)> = vec![(Vec::new(), 1)];
    for &b in beta {
        let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
        for (prefix, w) in &out {
            for d in 0..=b {
                let mut p = prefix.clone();
                p.push(d);
                next.push((p, w * binomial(b as u64, d as u64)));
            }
        }
        out = next;
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// An element Σ_g B_g·g with B_g group-free differential operators.
#[derive(Clone, Debug)]
pub struct SemidirectOperator {
    pub group: WreathGroup,
    terms: BTreeMap<GroupElement, DiffOp>,
}

impl SemidirectOperator {
    pub fn zero(group: WreathGroup) -> Self {
        SemidirectOperator {
            group,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (GroupElement, DiffOp)>>(
        group: WreathGroup,
        iter: I,
    ) -> Self {
        let mut out = Self::zero(group);
        for (g, op) in iter {
            out.add_term(&g, &op);
        }
        out
    }

    /// A single group element as an operator.
    pub fn from_element(group: WreathGroup, g: GroupElement) -> Self {
        Self::from_terms(group, [(g, DiffOp::identity(group.n, group.r))])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &DiffOp)> {
        self.terms.iter()
    }

    fn add_term(&mut self, g: &GroupElement, op: &DiffOp) {
        if op.is_zero() {
            return;
        }
        match self.terms.get_mut(g) {
            Some(existing) => {
                let sum = existing.add(op);
                if sum.is_zero() {
                    self.terms.remove(g);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(g.clone(), op.clone());
            }
        }
    }

    pub fn add(&self, other: &SemidirectOperator) -> SemidirectOperator {
        let mut out = self.clone();
        for (g, op) in &other.terms {
            out.add_term(g, op);
        }
        out
    }

    /// The Dunkl operator in the given direction as a normal-form element:
    /// [∂_y − Σ_s c_s(α_s,y)/α_s]·1 + Σ_s [c_s(α_s,y)/α_s]·s.
    pub fn dunkl(
        direction: &[num_rational::BigRational],
        rs: &RootSystem,
        c: &CouplingMap,
    ) -> Result<Self> {
        use num_traits::Zero;
        let group = rs.group;
        let n = group.n;
        let r = group.r;
        let mut identity_part = DiffOp::zero(n);
        for (i, v) in direction.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let coeff = RationalFunction::from_poly(MultiPoly::constant(
                n,
                Scalar::from_rational(v.clone(), r),
            ));
            let mut beta = vec![0u32; n];
            beta[i] = 1;
            identity_part.add_term(&beta, &coeff);
        }
        let mut out = Self::from_terms(group, [(group.identity(), identity_part)]);
        for refl in &rs.reflections {
            let cs = c.value(refl.class);
            let pairing: num_rational::BigRational = refl
                .root
                .iter()
                .zip(direction)
                .map(|(a, y)| a * y)
                .sum();
            let weight = cs * &pairing;
            if weight.is_zero() {
                continue;
            }
            let coeff = RationalFunction::new(
                MultiPoly::constant(n, Scalar::from_rational(weight, r)),
                refl.form.clone(),
            )?;
            let zero_idx = vec![0u32; n];
            out.add_term(
                &group.identity(),
                &DiffOp::from_terms(n, [(zero_idx.clone(), coeff.neg())]),
            );
            out.add_term(
                &refl.element,
                &DiffOp::from_terms(n, [(zero_idx, coeff)]),
            );
        }
        Ok(out)
    }

    /// Conjugate a group-free operator: g·(R ∂^γ)·g^{-1} =
    /// (g·R)·ξ^{-Σ a_{σ(j)}γ_j}·∂^{γ∘σ^{-1}}.
    fn conjugate_diffop(g: &GroupElement, op: &DiffOp) -> Result<DiffOp> {
        let n = op.nvars;
        let mut out = DiffOp::zero(n);
        for (gamma, coeff) in &op.terms {
            let num = g.act(&coeff.num);
            let den = g.act(&coeff.den);
            let mut new_coeff = RationalFunction::new(num, den)?;
            let mut phase: i64 = 0;
            let mut new_gamma = vec![0u32; n];
            for (j, &e) in gamma.iter().enumerate() {
                let target = g.perm.apply(j);
                new_gamma[target] = e;
                phase -= (g.exps[target] as i64) * e as i64;
            }
            if phase != 0 {
                new_coeff = new_coeff.scale(&Scalar::xi_pow(g.r, phase));
            }
            out.add_term(&new_gamma, &new_coeff);
        }
        Ok(out)
    }

    /// Normal-form product: A·B = Σ_{g,h} [A_g ∘ (g B_h g^{-1})]·(g h).
    pub fn compose(&self, other: &SemidirectOperator) -> Result<SemidirectOperator> {
        let mut out = Self::zero(self.group);
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                let conj = Self::conjugate_diffop(g, b)?;
                let op = a.compose(&conj)?;
                out.add_term(&g.product(h)?, &op);
            }
        }
        Ok(out)
    }

    /// w · self · w^{-1} for a single group element.
    pub fn conjugate_by(&self, w: &GroupElement) -> Result<SemidirectOperator> {
        let winv = w.inverse();
        let mut out = Self::zero(self.group);
        for (g, op) in &self.terms {
            out.add_term(
                &w.product(g)?.product(&winv)?,
                &Self::conjugate_diffop(w, op)?,
            );
        }
        Ok(out)
    }

    /// Average of w·self·w^{-1} over the whole group: an invariant element.
    pub fn group_average(&self) -> Result<SemidirectOperator> {
        let mut out = Self::zero(self.group);
        for w in self.group.enumerate()? {
            out = out.add(&self.conjugate_by(&w)?);
        }
        Ok(out)
    }

    /// The lowering map: the sum of the differential coefficients, a
    /// group-free operator. On invariant inputs it computes the same images
    /// as the full element.
    pub fn lower(&self) -> DiffOp {
        let mut out = DiffOp::zero(self.group.n);
        for op in self.terms.values() {
            out = out.add(op);
        }
        out
    }

    /// Apply as an operator: Σ_g B_g (g·f).
    pub fn apply(&self, f: &RationalFunction) -> Result<RationalFunction> {
        let n = self.group.n;
        let mut acc = RationalFunction::zero(n, self.group.r);
        for (g, op) in &self.terms {
            let moved = RationalFunction::new(g.act(&f.num), g.act(&f.den))?;
            acc = acc.add(&op.apply(&moved)?)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::type_b;
    use num_rational::BigRational;

    fn e(i: usize, n: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::from_integer(0.into()); n];
        v[i] = BigRational::from_integer(1.into());
        v
    }

    #[test]
    fn lowering_the_dunkl_operator_gives_the_derivative() {
        // the ±c/α pieces cancel in the sum of coefficients
        for n in [1usize, 2] {
            let rs = type_b(n);
            let c = CouplingMap::new(
                BigRational::new(1.into(), 2.into()),
                BigRational::new(2.into(), 3.into()),
            );
            let d = SemidirectOperator::dunkl(&e(0, n), &rs, &c).unwrap();
            let lowered = d.lower();
            assert!(lowered.equals(&DiffOp::derivative(n, 0, 2)));
        }
    }

    #[test]
    fn lowering_a_group_element_gives_the_identity_operator() {
        let rs = type_b(2);
        let g = rs.group.scaling(0);
        let op = SemidirectOperator::from_element(rs.group, g);
        assert!(op.lower().equals(&DiffOp::identity(2, 2)));
    }

    #[test]
    fn lowering_is_the_coefficient_sum() {
        // m(B₁·g + B₂·h) = B₁ + B₂
        let rs = type_b(1);
        let b1 = DiffOp::derivative(1, 0, 2);
        let b2 = DiffOp::from_terms(
            1,
            [(
                vec![0],
                RationalFunction::from_poly(MultiPoly::variable(1, 0, 2)),
            )],
        );
        let op = SemidirectOperator::from_terms(
            rs.group,
            [
                (rs.group.identity(), b1.clone()),
                (rs.group.scaling(0), b2.clone()),
            ],
        );
        assert!(op.lower().equals(&b1.add(&b2)));
    }

    #[test]
    fn semidirect_apply_matches_direct_dunkl() {
        let rs = type_b(2);
        let c = CouplingMap::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 3.into()),
        );
        let d = SemidirectOperator::dunkl(&e(0, 2), &rs, &c).unwrap();
        let f = MultiPoly::variable(2, 0, 2)
            .pow(3)
            .try_mul(&MultiPoly::variable(2, 1, 2))
            .unwrap();
        let via_operator = d.apply(&RationalFunction::from_poly(f.clone())).unwrap();
        let via_direct = crate::dunkl::dunkl_apply(&e(0, 2), &f, &rs, &c).unwrap();
        assert!(via_operator.equals(&RationalFunction::from_poly(via_direct)));
    }

    #[test]
    fn composition_matches_iterated_application() {
        let rs = type_b(2);
        let c = CouplingMap::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 3.into()),
        );
        let d1 = SemidirectOperator::dunkl(&e(0, 2), &rs, &c).unwrap();
        let d2 = SemidirectOperator::dunkl(&e(1, 2), &rs, &c).unwrap();
        let prod = d1.compose(&d2).unwrap();
        let f = RationalFunction::from_poly(
            MultiPoly::variable(2, 0, 2)
                .pow(2)
                .try_mul(&MultiPoly::variable(2, 1, 2).pow(2))
                .unwrap(),
        );
        let via_composition = prod.apply(&f).unwrap();
        let via_steps = d1.apply(&d2.apply(&f).unwrap()).unwrap();
        assert!(via_composition.equals(&via_steps));
    }

    #[test]
    fn dunkl_squares_sum_lowers_to_the_oracle() {
        // m(Σ_i D_i²) agrees with the restriction oracle on invariants
        let rs = type_b(2);
        let c = CouplingMap::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 3.into()),
        );
        let mut sum = SemidirectOperator::zero(rs.group);
        for i in 0..2 {
            let d = SemidirectOperator::dunkl(&e(i, 2), &rs, &c).unwrap();
            sum = sum.add(&d.compose(&d).unwrap());
        }
        let lowered = sum.lower();
        for p in crate::dunkl::invariant_basis(&rs, 6) {
            let via_lowered = lowered.apply_poly(&p).unwrap();
            let via_oracle = crate::dunkl::invariant_restriction_oracle(&p, &rs, &c).unwrap();
            assert!(via_lowered.equals(&RationalFunction::from_poly(via_oracle)));
        }
    }

    #[test]
    fn lowering_is_multiplicative_against_invariant_factors() {
        // m(A·B) f = m(A)(m(B) f) for invariant B and invariant test f
        let rs = type_b(2);
        let group = rs.group;
        // B: averaged single term x1·∂1·s, made invariant by group averaging
        let seed = SemidirectOperator::from_terms(
            group,
            [(
                group.scaling(0),
                DiffOp::from_terms(
                    2,
                    [(
                        vec![1, 0],
                        RationalFunction::from_poly(MultiPoly::variable(2, 0, 2)),
                    )],
                ),
            )],
        );
        let b = seed.group_average().unwrap();
        // A: a generic non-invariant element
        let a = SemidirectOperator::from_terms(
            group,
            [
                (
                    group.transposition(0, 1),
                    DiffOp::from_terms(
                        2,
                        [(
                            vec![0, 1],
                            RationalFunction::from_poly(MultiPoly::variable(2, 1, 2).pow(2)),
                        )],
                    ),
                ),
                (group.identity(), DiffOp::derivative(2, 0, 2)),
            ],
        );
        let m_ab = a.compose(&b).unwrap().lower();
        let m_a = a.lower();
        let m_b = b.lower();
        for f in crate::dunkl::invariant_basis(&rs, 6) {
            let lhs = m_ab.apply_poly(&f).unwrap();
            let rhs = m_a.apply(&m_b.apply_poly(&f).unwrap()).unwrap();
            assert!(lhs.equals(&rhs), "multiplicativity fails on {f}");
        }
    }

    #[test]
    fn lowering_multiplicativity_on_random_pairs() {
        use crate::sampling::{random_poly, rng_from_seed};
        let rs = type_b(2);
        let group = rs.group;
        let mut rng = rng_from_seed(0x51);
        let elements = group.enumerate().unwrap();
        for trial in 0..3 {
            let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
                use rand::Rng;
                elements[rng.gen_range(0..elements.len())].clone()
            };
            let random_op = |rng: &mut rand_chacha::ChaCha8Rng| {
                use rand::Rng;
                let mut beta = vec![0u32; 2];
                beta[rng.gen_range(0..2)] = rng.gen_range(0..=2);
                let coeff = random_poly(rng, 2, 2, 2, 2);
                let coeff = if coeff.is_zero() {
                    MultiPoly::one(2, 2)
                } else {
                    coeff
                };
                SemidirectOperator::from_terms(
                    group,
                    [(
                        pick(rng),
                        DiffOp::from_terms(2, [(beta, RationalFunction::from_poly(coeff))]),
                    )],
                )
            };
            let a = random_op(&mut rng);
            let b = random_op(&mut rng).group_average().unwrap();
            let m_ab = a.compose(&b).unwrap().lower();
            let m_a = a.lower();
            let m_b = b.lower();
            for f in crate::dunkl::invariant_basis(&rs, 4) {
                let lhs = m_ab.apply_poly(&f).unwrap();
                let rhs = m_a.apply(&m_b.apply_poly(&f).unwrap()).unwrap();
                assert!(lhs.equals(&rhs), "trial {trial} fails on {f}");
            }
        }
    }

    #[test]
    fn invariant_element_is_fixed_by_conjugation() {
        let rs = type_b(2);
        let seed = SemidirectOperator::from_terms(
            rs.group,
            [(rs.group.identity(), DiffOp::derivative(2, 0, 2))],
        );
        let avg = seed.group_average().unwrap();
        for w in rs.group.enumerate().unwrap() {
            let conj = avg.conjugate_by(&w).unwrap();
            // compare by application to a generic polynomial
            let f = RationalFunction::from_poly(
                MultiPoly::variable(2, 0, 2)
                    .pow(3)
                    .try_add(&MultiPoly::variable(2, 1, 2).pow(2))
                    .unwrap(),
            );
            assert!(conj.apply(&f).unwrap().equals(&avg.apply(&f).unwrap()));
        }
    }
}
