//! Named verification suites over the core modules.
//!
//! Each suite is a fixed ordered list of steps; steps run in a rayon pool
//! (worker count from `SPECHT_WORKERS`) and their records are reassembled in
//! step order, so report content is deterministic for a given config.

use std::time::Instant;

use num_rational::BigRational;
use rayon::prelude::*;

use specht_core::chart::InvariantChart;
use specht_core::decomp::{
    build_idempotent_set, graded_direct_sum_check, idempotents_commute_with_invariant_operators,
    orbit_membership_sweep,
};
use specht_core::dunkl::{
    commutator_check, dunkl_coordinate, gauge_relation_check, invariant_basis, is_invariant,
    CommutingIntegral,
};
use specht_core::error::Error;
use specht_core::group::WreathGroup;
use specht_core::poly::{monomials_of_degree, MultiPoly};
use specht_core::ratfunc::RationalFunction;
use specht_core::report::{CheckRecord, CheckStatus, OpReport};
use specht_core::roots::{type_b, CouplingMap};
use specht_core::sampling::{random_coupling, rng_from_seed};
use specht_core::scalar::{rational_string, Scalar};
use specht_core::specht::{
    coinvariant_hilbert_check, irreducible_check, module_basis_rank_check,
};
use specht_core::tableaux::{enumerate_rdiagrams, enumerate_standard_tableaux};

use crate::report::{CheckOut, ConfigEcho, SuiteReport};

pub const SUITE_NAMES: [&str; 9] = [
    "root-axioms",
    "specht-basis",
    "coinvariant-hilbert",
    "dunkl-commute",
    "olshanetsky-L",
    "chart-derivations",
    "idempotents",
    "graded-decomposition",
    "orbit-membership",
];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: String,
    pub r: u32,
    pub n: usize,
    pub degree: u32,
    pub c_short: BigRational,
    pub c_long: BigRational,
    pub seed: u64,
}

impl SuiteConfig {
    fn couplings(&self) -> CouplingMap {
        CouplingMap::new(self.c_short.clone(), self.c_long.clone())
    }

    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            r: self.r,
            n: self.n,
            degree: self.degree,
            c_short: rational_string(&self.c_short),
            c_long: rational_string(&self.c_long),
            seed: self.seed,
        }
    }

    fn check_bounds(&self, needs_enumeration: bool) -> Result<(), Error> {
        if self.n == 0 || self.r == 0 {
            return Err(Error::InvalidParameter("r and n must be positive".into()));
        }
        if needs_enumeration && (self.n > 4 || self.r > 3) {
            return Err(Error::InvalidParameter(format!(
                "suite {} enumerates the group; bounds are n ≤ 4, r ≤ 3, got (r,n)=({},{})",
                self.suite, self.r, self.n
            )));
        }
        Ok(())
    }
}

type Step = (String, Box<dyn Fn() -> Result<OpReport, Error> + Send + Sync>);

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let steps = build_steps(cfg)?;
    let started = Instant::now();
    let outcomes: Vec<(String, Result<OpReport, Error>, u128)> = steps
        .into_par_iter()
        .map(|(name, step)| {
            let t0 = Instant::now();
            let result = step();
            (name, result, t0.elapsed().as_millis())
        })
        .collect();
    let mut checks = Vec::new();
    for (name, result, millis) in outcomes {
        match result {
            Ok(report) => {
                for record in report.checks {
                    checks.push(CheckOut {
                        name: format!("{name}: {}", record.name),
                        status: match record.status {
                            CheckStatus::Pass => "pass".into(),
                            CheckStatus::Fail => "fail".into(),
                            CheckStatus::Inconclusive => "inconclusive".into(),
                        },
                        witness: record.witness,
                        millis,
                    });
                }
            }
            Err(e) => checks.push(CheckOut {
                name,
                status: "fail".into(),
                witness: Some(e.to_string()),
                millis,
            }),
        }
    }
    Ok(SuiteReport {
        suite: cfg.suite.clone(),
        config: cfg.echo(),
        checks,
        total_millis: started.elapsed().as_millis(),
    })
}

fn build_steps(cfg: &SuiteConfig) -> Result<Vec<Step>, Error> {
    let mut steps: Vec<Step> = Vec::new();
    let c = cfg.couplings();
    match cfg.suite.as_str() {
        "root-axioms" => {
            cfg.check_bounds(true)?;
            let n = cfg.n;
            let cc = c.clone();
            steps.push((
                "root axioms".into(),
                Box::new(move || {
                    let rs = type_b(n);
                    let mut report = specht_core::roots::validate_root_system(&rs)?;
                    report.extend(cc.validate(&rs)?);
                    Ok(report)
                }),
            ));
        }
        "specht-basis" => {
            cfg.check_bounds(true)?;
            let group = WreathGroup::new(cfg.r, cfg.n);
            for shape in enumerate_rdiagrams(cfg.r as usize, cfg.n) {
                let name = format!("irreducible span at {shape}");
                steps.push((
                    name,
                    Box::new(move || {
                        let source = enumerate_standard_tableaux(&shape)
                            .into_iter()
                            .next()
                            .expect("standard tableau exists");
                        Ok(irreducible_check(&group, &shape, &source)?.report)
                    }),
                ));
            }
            let degree = cfg.degree;
            steps.push((
                "free module ranks".into(),
                Box::new(move || Ok(module_basis_rank_check(&group, degree)?.report)),
            ));
            steps.push((
                "characters agree across source tableaux".into(),
                Box::new(move || {
                    let mut report = OpReport::new();
                    for shape in enumerate_rdiagrams(group.r as usize, group.n) {
                        let tabs = enumerate_standard_tableaux(&shape);
                        for pair in tabs.windows(2) {
                            let equal = specht_core::specht::equal_characters_across_sources(
                                &group, &shape, &pair[0], &pair[1],
                            )?;
                            report.push(CheckRecord::of(
                                format!("equal characters at {shape}"),
                                equal,
                                format!("sources {} and {}", pair[0], pair[1]),
                            ));
                        }
                    }
                    if report.checks.is_empty() {
                        report.push(CheckRecord::pass(
                            "no multi-source shapes at this rank",
                        ));
                    }
                    Ok(report)
                }),
            ));
        }
        "coinvariant-hilbert" => {
            cfg.check_bounds(true)?;
            let group = WreathGroup::new(cfg.r, cfg.n);
            steps.push((
                "degree multiset".into(),
                Box::new(move || Ok(coinvariant_hilbert_check(&group)?.report)),
            ));
        }
        "dunkl-commute" => {
            cfg.check_bounds(false)?;
            let n = cfg.n;
            let degree = cfg.degree;
            let seed = cfg.seed;
            let base = c.clone();
            steps.push((
                "pairwise Dunkl commutators".into(),
                Box::new(move || {
                    let rs = type_b(n);
                    let mut tests = Vec::new();
                    for d in 0..=degree {
                        for m in monomials_of_degree(n, d) {
                            tests.push(MultiPoly::monomial_term(n, m, Scalar::one(2)));
                        }
                    }
                    let mut rng = rng_from_seed(seed);
                    let mut couplings = vec![base.clone()];
                    for _ in 0..3 {
                        couplings.push(random_coupling(&mut rng, 5));
                    }
                    let mut report = OpReport::new();
                    if n < 2 {
                        report.push(CheckRecord::pass(
                            "no operator pairs at rank one; nothing to commute",
                        ));
                        return Ok(report);
                    }
                    for cc in &couplings {
                        for i in 0..n {
                            for j in i + 1..n {
                                let inner = commutator_check(
                                    |f| dunkl_coordinate(i, f, &rs, cc),
                                    |f| dunkl_coordinate(j, f, &rs, cc),
                                    &tests,
                                )?;
                                let ok = inner.all_passed();
                                report.push(CheckRecord::of(
                                    format!(
                                        "[D_{},D_{}] = 0 at couplings ({}, {})",
                                        i + 1,
                                        j + 1,
                                        rational_string(&cc.short),
                                        rational_string(&cc.long)
                                    ),
                                    ok,
                                    format!("{:?}", inner.failures().collect::<Vec<_>>()),
                                ));
                            }
                        }
                    }
                    Ok(report)
                }),
            ));
        }
        "olshanetsky-L" => {
            cfg.check_bounds(false)?;
            let n = cfg.n;
            let degree = cfg.degree;
            let cc = c.clone();
            steps.push((
                "integral homogeneity and invariance".into(),
                Box::new(move || {
                    let rs = type_b(n);
                    let basis = invariant_basis(&rs, degree);
                    let mut report = OpReport::new();
                    for j in 1..=n.min(2) {
                        let l = CommutingIntegral::new(j, rs.clone(), cc.clone())?;
                        let mut ok = true;
                        for p in &basis {
                            let image = l.apply(p)?;
                            if !image.is_zero() {
                                if !is_invariant(&image, &rs) {
                                    ok = false;
                                }
                                let drop = p.homogeneous_degree().unwrap() as i64 - 2 * j as i64;
                                if image.homogeneous_degree().map(|d| d as i64) != Some(drop) {
                                    ok = false;
                                }
                            }
                        }
                        report.push(CheckRecord::of(
                            format!("L{j} invariant-preserving and homogeneous of degree -{}", 2 * j),
                            ok,
                            "image non-invariant or wrong degree",
                        ));
                    }
                    Ok(report)
                }),
            ));
            if cfg.n >= 2 {
                let cc = c.clone();
                steps.push((
                    "commuting integrals".into(),
                    Box::new(move || {
                        let rs = type_b(n);
                        let basis = invariant_basis(&rs, degree);
                        let l1 = CommutingIntegral::new(1, rs.clone(), cc.clone())?;
                        let l2 = CommutingIntegral::new(2, rs.clone(), cc.clone())?;
                        commutator_check(|f| l1.apply(f), |f| l2.apply(f), &basis)
                    }),
                ));
            }
            let cc = c.clone();
            steps.push((
                "restriction identity".into(),
                Box::new(move || {
                    let rs = type_b(n);
                    let mut report = OpReport::new();
                    let mut ok = true;
                    for p in invariant_basis(&rs, degree) {
                        let lhs = CommutingIntegral::new(1, rs.clone(), cc.clone())?.apply(&p)?;
                        let rhs =
                            specht_core::dunkl::invariant_restriction_oracle(&p, &rs, &cc)?;
                        if lhs != rhs {
                            ok = false;
                        }
                    }
                    report.push(CheckRecord::of(
                        "iterated Dunkl equals the divided-difference oracle on invariants",
                        ok,
                        "routes disagree",
                    ));
                    Ok(report)
                }),
            ));
            let n2 = cfg.n;
            steps.push((
                "gauge relation at integer couplings".into(),
                Box::new(move || {
                    let rs = type_b(n2);
                    let x1 = MultiPoly::variable(n2, 0, 2);
                    let samples = vec![
                        RationalFunction::one(n2, 2),
                        RationalFunction::from_poly(x1.clone()),
                        RationalFunction::from_poly(x1.pow(2)),
                        RationalFunction::new(MultiPoly::one(n2, 2), x1.clone())?,
                    ];
                    let mut report = OpReport::new();
                    for cs in 0..=1i64 {
                        for cl in 0..=1i64 {
                            if n2 == 1 && cl == 1 {
                                continue;
                            }
                            let imap = CouplingMap::from_ints(cs, cl);
                            let gauge = gauge_relation_check(&rs, &imap, &samples)?;
                            let constant = gauge
                                .constant
                                .map(|k| k.to_string())
                                .unwrap_or_else(|| "none".into());
                            report.push(CheckRecord::of(
                                format!("gauge relation at couplings ({cs},{cl}), κ = {constant}"),
                                gauge.report.all_passed(),
                                format!("{:?}", gauge.report.failures().collect::<Vec<_>>()),
                            ));
                        }
                    }
                    Ok(report)
                }),
            ));
        }
        "chart-derivations" => {
            cfg.check_bounds(false)?;
            let n = cfg.n;
            steps.push((
                "chart construction and derivations".into(),
                Box::new(move || {
                    let chart = InvariantChart::new(n)?;
                    let mut samples = Vec::new();
                    for d in 0..=4u32 {
                        for m in monomials_of_degree(n, d).into_iter().take(4) {
                            samples.push(MultiPoly::monomial_term(n, m, Scalar::one(2)));
                        }
                    }
                    let mut report = OpReport::new();
                    report.push(CheckRecord::pass_with(
                        "Δ equals the closed form",
                        chart.delta.to_string(),
                    ));
                    report.extend(chart.generators_check(&samples)?);
                    Ok(report)
                }),
            ));
        }
        "idempotents" => {
            cfg.check_bounds(true)?;
            let group = WreathGroup::new(cfg.r, cfg.n);
            steps.push((
                "idempotent algebra".into(),
                Box::new(move || {
                    let set = build_idempotent_set(&group)?;
                    let mut report = set.validate()?;
                    report.extend(set.idempotent_on_specht()?);
                    Ok(report)
                }),
            ));
            if cfg.r == 2 {
                let group = WreathGroup::new(cfg.r, cfg.n);
                let n = cfg.n;
                let sample_degree = cfg.degree.min(6);
                steps.push((
                    "commutation with invariant operators".into(),
                    Box::new(move || {
                        let set = build_idempotent_set(&group)?;
                        let chart = InvariantChart::new(n)?;
                        idempotents_commute_with_invariant_operators(&set, &chart, sample_degree)
                    }),
                ));
            }
        }
        "graded-decomposition" => {
            cfg.check_bounds(true)?;
            if cfg.r != 2 {
                return Err(Error::InvalidParameter(
                    "graded decomposition is defined for the signed-permutation group (r = 2)"
                        .into(),
                ));
            }
            let group = WreathGroup::new(2, cfg.n);
            let degree = cfg.degree;
            steps.push((
                "graded direct sum".into(),
                Box::new(move || {
                    let set = build_idempotent_set(&group)?;
                    Ok(graded_direct_sum_check(&set, degree)?.report)
                }),
            ));
            let degree2 = cfg.degree.min(4);
            steps.push((
                "intertwiners within isomorphism classes".into(),
                Box::new(move || {
                    let set = build_idempotent_set(&group)?;
                    let mut report = OpReport::new();
                    for (si, rep) in set.reps.iter().enumerate() {
                        for i in 0..rep.dim {
                            for j in i + 1..rep.dim {
                                report.extend(specht_core::decomp::isomorphism_class_check(
                                    &set, si, i, j, degree2,
                                )?);
                            }
                        }
                        report.push(CheckRecord::pass_with(
                            format!("multiplicity at {}", rep.shape),
                            format!("{} isomorphic summands", rep.dim),
                        ));
                    }
                    Ok(report)
                }),
            ));
        }
        "orbit-membership" => {
            cfg.check_bounds(true)?;
            if cfg.r != 2 {
                return Err(Error::InvalidParameter(
                    "orbit membership runs over the signed-permutation group (r = 2)".into(),
                ));
            }
            let group = WreathGroup::new(2, cfg.n);
            let n = cfg.n;
            let degree = cfg.degree.min(4);
            steps.push((
                "generator membership".into(),
                Box::new(move || {
                    let set = build_idempotent_set(&group)?;
                    let chart = InvariantChart::new(n)?;
                    Ok(orbit_membership_sweep(&set, &chart, degree, 4, 2)?.report)
                }),
            ));
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown suite {other:?}; valid names: {}",
                SUITE_NAMES.join(", ")
            )));
        }
    }
    Ok(steps)
}
