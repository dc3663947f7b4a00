//! The wreath product G(r,n) = (Z/rZ)^n ⋊ S_n, its action on polynomials,
//! the group algebra over Q(ξ_r), and Young symmetrizers.
//!
//! An element (ξ^{i_1},…,ξ^{i_n}; σ) acts on a polynomial by the substitution
//! x_k ↦ ξ^{i_{σ(k)}} x_{σ(k)}. The product twists the exponent vector by
//! σ^{-1}, which is exactly what makes the action a left group action; the
//! convention is pinned by `action_is_compatible_with_product` below.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{all_perms, Perm};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::tableaux::hook_product;

/// The ambient group parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WreathGroup {
    pub r: u32,
    pub n: usize,
}

/// One element (exponent vector mod r; permutation).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroupElement {
    pub r: u32,
    pub exps: Vec<u32>,
    pub perm: Perm,
}

impl WreathGroup {
    pub fn new(r: u32, n: usize) -> Self {
        assert!(r >= 1 && n >= 1);
        WreathGroup { r, n }
    }

    pub fn order(&self) -> u128 {
        let mut o: u128 = 1;
        for _ in 0..self.n {
            o *= self.r as u128;
        }
        for k in 1..=self.n {
            o *= k as u128;
        }
        o
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            r: self.r,
            exps: vec![0; self.n],
            perm: Perm::identity(self.n),
        }
    }

    pub fn from_perm(&self, perm: Perm) -> GroupElement {
        GroupElement {
            r: self.r,
            exps: vec![0; self.n],
            perm,
        }
    }

    /// ξ-scaling of the single coordinate i (0-based).
    pub fn scaling(&self, i: usize) -> GroupElement {
        let mut exps = vec![0; self.n];
        exps[i] = 1 % self.r;
        GroupElement {
            r: self.r,
            exps,
            perm: Perm::identity(self.n),
        }
    }

    pub fn transposition(&self, a: usize, b: usize) -> GroupElement {
        self.from_perm(Perm::transposition(self.n, a, b))
    }

    /// Generators: the first-coordinate scaling (when r > 1) and the adjacent
    /// transpositions.
    pub fn generators(&self) -> Vec<GroupElement> {
        let mut gens = Vec::new();
        if self.r > 1 {
            gens.push(self.scaling(0));
        }
        for i in 0..self.n.saturating_sub(1) {
            gens.push(self.transposition(i, i + 1));
        }
        gens
    }

    fn check_enumerable(&self) -> Result<()> {
        if self.r <= 3 && self.n <= 4 {
            Ok(())
        } else {
            Err(Error::GroupTooLarge(self.order()))
        }
    }

    /// All r^n n! elements, in a fixed deterministic order. Groups outside the
    /// materialization gate (n ≤ 4, r ≤ 3) are rejected explicitly.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        self.check_enumerable()?;
        let perms = all_perms(self.n);
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut exps = vec![0u32; self.n];
        loop {
            for p in &perms {
                out.push(GroupElement {
                    r: self.r,
                    exps: exps.clone(),
                    perm: p.clone(),
                });
            }
            // odometer over exponent vectors
            let mut i = 0;
            loop {
                if i == self.n {
                    out.sort();
                    return Ok(out);
                }
                exps[i] += 1;
                if exps[i] < self.r {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Conjugacy classes by brute force over the enumerated group.
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<GroupElement>>> {
        let elements = self.enumerate()?;
        let mut class_of: BTreeMap<GroupElement, usize> = BTreeMap::new();
        let mut classes: Vec<Vec<GroupElement>> = Vec::new();
        for a in &elements {
            if class_of.contains_key(a) {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            for g in &elements {
                let c = g.product(a)?.product(&g.inverse())?;
                if class_of.insert(c.clone(), id).is_none() {
                    class.push(c);
                }
            }
            class.sort();
            classes.push(class);
        }
        Ok(classes)
    }

    /// True when some g conjugates a onto b; brute force over the group.
    pub fn conjugacy_test(&self, a: &GroupElement, b: &GroupElement) -> Result<bool> {
        a.check_same_group(b)?;
        if a == b {
            return Ok(true);
        }
        for g in self.enumerate()? {
            if g.product(a)?.product(&g.inverse())? == *b {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

impl GroupElement {
    fn check_same_group(&self, other: &GroupElement) -> Result<()> {
        if self.r != other.r || self.exps.len() != other.exps.len() {
            return Err(Error::MixedGroup(
                self.r,
                self.exps.len(),
                other.r,
                other.exps.len(),
            ));
        }
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0) && self.perm.is_identity()
    }

    /// (a; σ)(b; π) = ((a_k + b_{σ^{-1}(k)})_k ; σ∘π).
    pub fn product(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_same_group(other)?;
        let sigma_inv = self.perm.inverse();
        let exps = (0..self.exps.len())
            .map(|k| (self.exps[k] + other.exps[sigma_inv.apply(k)]) % self.r)
            .collect();
        Ok(GroupElement {
            r: self.r,
            exps,
            perm: self.perm.compose(&other.perm),
        })
    }

    pub fn inverse(&self) -> GroupElement {
        let n = self.exps.len();
        let exps = (0..n)
            .map(|k| (self.r - self.exps[self.perm.apply(k)]) % self.r)
            .collect();
        GroupElement {
            r: self.r,
            exps,
            perm: self.perm.inverse(),
        }
    }

    /// Substitution action x_k ↦ ξ^{a_{σ(k)}} x_{σ(k)}, a ring automorphism.
    pub fn act(&self, f: &MultiPoly) -> MultiPoly {
        let n = self.exps.len();
        debug_assert_eq!(f.nvars(), n);
        let target: Vec<usize> = (0..n).map(|k| self.perm.apply(k)).collect();
        let factor: Vec<Scalar> = (0..n)
            .map(|k| Scalar::xi_pow(self.r, self.exps[self.perm.apply(k)] as i64))
            .collect();
        f.substitute_scaled_vars(&target, &factor)
    }

    /// Determinant of the element acting on the span of the variables.
    /// For r = 2 this is the sign character (−1)^{Σ exps} · sgn(σ).
    pub fn det_character(&self) -> Scalar {
        let mut s = Scalar::xi_pow(self.r, self.exps.iter().map(|&e| e as i64).sum());
        if self.perm.sign() < 0 {
            s = s.neg();
        }
        s
    }
}

impl fmt::Display for GroupElement {
    /// Text form `(e1,...,en; cycles)`, e.g. `(0,1; (1 2))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<String> = self.exps.iter().map(|e| e.to_string()).collect();
        write!(f, "({}; {})", exps.join(","), self.perm)
    }
}

/// A finite formal Q(ξ_r)-combination of group elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    pub group: WreathGroup,
    terms: BTreeMap<GroupElement, Scalar>,
}

impl GroupAlgebraElement {
    pub fn zero(group: WreathGroup) -> Self {
        GroupAlgebraElement {
            group,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(group: WreathGroup) -> Self {
        Self::from_element(group, group.identity())
    }

    pub fn from_element(group: WreathGroup, g: GroupElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(g, Scalar::one(group.r));
        GroupAlgebraElement { group, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (GroupElement, Scalar)>>(
        group: WreathGroup,
        iter: I,
    ) -> Self {
        let mut out = Self::zero(group);
        for (g, c) in iter {
            out.add_term(&g, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &GroupElement) -> Option<&Scalar> {
        self.terms.get(g)
    }

    fn add_term(&mut self, g: &GroupElement, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(g) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(g);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(g.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g, c);
        }
        out
    }

    pub fn sub(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g, &c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> GroupAlgebraElement {
        if c.is_zero() {
            return Self::zero(self.group);
        }
        GroupAlgebraElement {
            group: self.group,
            terms: self
                .terms
                .iter()
                .map(|(g, k)| (g.clone(), k * c))
                .collect(),
        }
    }

    /// Algebra product, bilinear over the group product.
    pub fn mul(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        let mut out = Self::zero(self.group);
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(&g.product(h)?, &(a * b));
            }
        }
        Ok(out)
    }

    /// Linear extension of the polynomial action.
    pub fn apply(&self, f: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(f.nvars());
        for (g, c) in &self.terms {
            out = out
                .try_add(&g.act(f).scale(c))
                .expect("same variable count");
        }
        out
    }

    /// Conjugate w · self · w^{-1}.
    pub fn conjugate_by(&self, w: &GroupElement) -> Result<GroupAlgebraElement> {
        let winv = w.inverse();
        let mut out = Self::zero(self.group);
        for (g, c) in &self.terms {
            out.add_term(&w.product(g)?.product(&winv)?, c);
        }
        Ok(out)
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (idx, (g, c)) in self.terms.iter().enumerate() {
            let part = format!("{c}*{g}");
            if idx == 0 {
                out.push_str(&part);
            } else if let Some(stripped) = part.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(&part);
            }
        }
        write!(f, "{out}")
    }
}

/// The normalized Young symmetrizer of one tableau component:
/// (1/α) Σ_{σ∈R, τ∈C} sgn(τ) τσ, embedded with zero exponent vector.
pub fn young_symmetrizer(
    group: &WreathGroup,
    component_rows: &[Vec<usize>],
) -> GroupAlgebraElement {
    let partition: Vec<usize> = component_rows.iter().map(|row| row.len()).collect();
    let alpha = hook_product(&partition);
    let (rows, cols) = crate::tableaux::stabilizers(component_rows, group.n);
    let norm = Scalar::from_ratio(1, alpha as i64, group.r);
    let mut out = GroupAlgebraElement::zero(*group);
    for tau in &cols {
        let sgn = tau.sign();
        for sigma in &rows {
            let g = group.from_perm(tau.compose(sigma));
            let c = if sgn < 0 { norm.neg() } else { norm.clone() };
            out.add_term(&g, &c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;

    fn x(i: usize, n: usize, r: u32) -> MultiPoly {
        MultiPoly::variable(n, i, r)
    }

    #[test]
    fn product_twists_by_sigma_inverse() {
        // ((0,1);(12)) · ((1,0); id) = ((0,0); (12))
        let g = WreathGroup::new(2, 2);
        let a = GroupElement {
            r: 2,
            exps: vec![0, 1],
            perm: Perm::transposition(2, 0, 1),
        };
        let b = GroupElement {
            r: 2,
            exps: vec![1, 0],
            perm: Perm::identity(2),
        };
        let p = a.product(&b).unwrap();
        assert_eq!(p.exps, vec![0, 0]);
        assert_eq!(p.perm, Perm::transposition(2, 0, 1));
        // a · identity = a
        assert_eq!(a.product(&g.identity()).unwrap(), a);
        // a sign flip is an involution
        let s = g.scaling(0);
        assert!(s.product(&s).unwrap().is_identity());
    }

    #[test]
    fn inverses_and_associativity() {
        let g = WreathGroup::new(3, 2);
        let elements = g.enumerate().unwrap();
        assert_eq!(elements.len(), 18);
        for a in &elements {
            assert!(a.product(&a.inverse()).unwrap().is_identity());
        }
        // associativity on a slice of triples
        for a in elements.iter().take(6) {
            for b in elements.iter().skip(4).take(5) {
                for c in elements.iter().skip(9).take(4) {
                    let left = a.product(b).unwrap().product(c).unwrap();
                    let right = a.product(&b.product(c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(WreathGroup::new(2, 2).enumerate().unwrap().len(), 8);
        assert_eq!(WreathGroup::new(2, 3).enumerate().unwrap().len(), 48);
        assert_eq!(WreathGroup::new(3, 2).enumerate().unwrap().len(), 18);
        assert!(matches!(
            WreathGroup::new(2, 5).enumerate(),
            Err(Error::GroupTooLarge(_))
        ));
    }

    #[test]
    fn action_examples() {
        let g = WreathGroup::new(2, 2);
        let flip = g.scaling(0);
        // even power invariant
        assert_eq!(flip.act(&x(0, 2, 2).pow(2)), x(0, 2, 2).pow(2));
        // x1*x2 picks up a sign
        let p = x(0, 2, 2).try_mul(&x(1, 2, 2)).unwrap();
        assert_eq!(flip.act(&p), p.neg());
        // transposition substitutes
        let q = x(0, 2, 2).pow(2).try_mul(&x(1, 2, 2)).unwrap();
        let swapped = g.transposition(0, 1).act(&q);
        assert_eq!(swapped, x(1, 2, 2).pow(2).try_mul(&x(0, 2, 2)).unwrap());
    }

    #[test]
    fn action_is_compatible_with_product() {
        // (g·h)·f = g·(h·f) over all of G(2,2) on a generic polynomial
        let g = WreathGroup::new(2, 2);
        let f = x(0, 2, 2)
            .pow(2)
            .try_mul(&x(1, 2, 2))
            .unwrap()
            .try_add(&x(1, 2, 2).pow(3))
            .unwrap()
            .try_add(&x(0, 2, 2))
            .unwrap();
        for a in g.enumerate().unwrap() {
            for b in g.enumerate().unwrap() {
                let via_product = a.product(&b).unwrap().act(&f);
                let via_steps = a.act(&b.act(&f));
                assert_eq!(via_product, via_steps);
            }
        }
    }

    #[test]
    fn action_at_r3_uses_roots_of_unity() {
        let g = WreathGroup::new(3, 1);
        let s = g.scaling(0);
        let p = x(0, 1, 3);
        assert_eq!(s.act(&p), p.scale(&Scalar::xi(3)));
        // ξ^3 = 1 restores the cube
        assert_eq!(s.act(&p.pow(3)), p.pow(3));
    }

    #[test]
    fn algebra_apply_examples() {
        let g = WreathGroup::new(2, 2);
        // (1/2)(1 + (12)) averages x1 to (x1+x2)/2
        let avg = GroupAlgebraElement::from_terms(
            g,
            [
                (g.identity(), Scalar::from_ratio(1, 2, 2)),
                (g.transposition(0, 1), Scalar::from_ratio(1, 2, 2)),
            ],
        );
        let applied = avg.apply(&x(0, 2, 2));
        let expect = x(0, 2, 2)
            .try_add(&x(1, 2, 2))
            .unwrap()
            .scale(&Scalar::from_ratio(1, 2, 2));
        assert_eq!(applied, expect);
        // zero element annihilates
        assert!(GroupAlgebraElement::zero(g).apply(&x(0, 2, 2)).is_zero());
        // (1 - s)/2 fixes an odd function at n = 1
        let g1 = WreathGroup::new(2, 1);
        let proj = GroupAlgebraElement::from_terms(
            g1,
            [
                (g1.identity(), Scalar::from_ratio(1, 2, 2)),
                (g1.scaling(0), Scalar::from_ratio(-1, 2, 2)),
            ],
        );
        assert_eq!(proj.apply(&x(0, 1, 2)), x(0, 1, 2));
    }

    #[test]
    fn young_symmetrizer_forms() {
        let g = WreathGroup::new(2, 2);
        // single row [1,2] → (1/2)(1 + (12))
        let e = young_symmetrizer(&g, &[vec![1, 2]]);
        assert_eq!(e.num_terms(), 2);
        assert_eq!(
            e.coeff(&g.identity()),
            Some(&Scalar::from_ratio(1, 2, 2))
        );
        assert_eq!(
            e.coeff(&g.transposition(0, 1)),
            Some(&Scalar::from_ratio(1, 2, 2))
        );
        // single column [1,2] → (1/2)(1 − (12))
        let e = young_symmetrizer(&g, &[vec![1], vec![2]]);
        assert_eq!(
            e.coeff(&g.transposition(0, 1)),
            Some(&Scalar::from_ratio(-1, 2, 2))
        );
        // single cell → identity element
        let e = young_symmetrizer(&g, &[vec![1]]);
        assert_eq!(e, GroupAlgebraElement::one(g));
    }

    #[test]
    fn young_symmetrizer_is_idempotent() {
        // components of size ≤ 4 inside S_4, r = 1
        let g = WreathGroup::new(1, 4);
        let components: Vec<Vec<Vec<usize>>> = vec![
            vec![vec![1, 2, 3, 4]],
            vec![vec![1, 2], vec![3, 4]],
            vec![vec![1, 3], vec![2, 4]],
            vec![vec![1, 2, 3], vec![4]],
            vec![vec![1], vec![2], vec![3], vec![4]],
            vec![vec![1, 2], vec![3], vec![4]],
        ];
        for rows in components {
            let e = young_symmetrizer(&g, &rows);
            assert_eq!(e.mul(&e).unwrap(), e, "component {rows:?}");
        }
    }

    #[test]
    fn conjugacy_examples() {
        let g = WreathGroup::new(2, 3);
        let t12 = g.transposition(0, 1);
        let t13 = g.transposition(0, 2);
        assert!(g.conjugacy_test(&t12, &t13).unwrap());
        let g2 = WreathGroup::new(2, 2);
        let flip = g2.scaling(0);
        let swap = g2.transposition(0, 1);
        assert!(!g2.conjugacy_test(&flip, &swap).unwrap());
        assert!(g2.conjugacy_test(&flip, &flip).unwrap());
    }

    #[test]
    fn fundamental_invariants_are_fixed() {
        // e_j(x^r) fixed by every generator at (r,n) = (2,2) and (3,2)
        for (r, n) in [(2u32, 2usize), (3, 2)] {
            let g = WreathGroup::new(r, n);
            let inv = crate::specht::FundamentalInvariants::new(&g);
            for gen in g.generators() {
                for e in &inv.gens {
                    assert_eq!(&gen.act(e), e);
                }
            }
        }
    }

    #[test]
    fn det_character_matches_action_on_discriminant() {
        let g = WreathGroup::new(2, 2);
        let chart = crate::chart::InvariantChart::new(2).unwrap();
        for el in g.enumerate().unwrap() {
            let acted = el.act(&chart.delta);
            assert_eq!(acted, chart.delta.scale(&el.det_character()));
        }
    }
}
