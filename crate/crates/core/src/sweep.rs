//! Exhaustive cross-validation over every multiset up to a given size.
//!
//! Each multiplicity class is visited once (as its non-increasing
//! representative). Per multiset the sweep checks route agreement, the
//! polynomiality of the truncated MacMahon series and, inside the
//! multiplicity-{1,2} scope, operator commutativity, expansion type and the
//! bi-gamma-positivity claim with `n = m`.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::bivariate_brute;
use crate::error::Error;
use crate::gamma::{classify_expansion_type, ExpansionType, PositivityReport};
use crate::macmahon::{macmahon_polynomial, polynomiality_check};
use crate::multiset::MultisetSpec;
use crate::operators::{commutator_is_zero, polynomial_via_operators};

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_m: u32,
    pub multiplicities: Vec<u32>,
    pub budget: u64,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Extra series terms for the polynomiality check.
    pub extra_terms: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_m: 8,
            multiplicities: vec![1, 2],
            budget: crate::enumeration::default_budget(),
            jobs: 0,
            extra_terms: 8,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecOutcome {
    pub spec: MultisetSpec,
    pub m: u32,
    pub words: String,
    pub enumerated: bool,
    pub operator_route: bool,
    pub routes_agree: bool,
    pub polynomiality: bool,
    pub commutator: Option<bool>,
    pub expansion_type: Option<ExpansionType>,
    pub bi_gamma_positive: Option<bool>,
    pub alternatingly_increasing: Option<bool>,
    pub unimodal: Option<bool>,
    pub modes: BTreeSet<u32>,
    /// `Some` only inside the multiplicity-{1,2} scope, where the claim is asserted.
    pub theorem_holds: Option<bool>,
    pub violations: Vec<String>,
}

/// Modes allowed for an `m`-letter multiset: the middle of `0..=m` and of `0..=m+1`.
pub fn allowed_modes(m: u32) -> BTreeSet<u32> {
    [m / 2, m.div_ceil(2), m.div_ceil(2), (m + 1).div_ceil(2)]
        .into_iter()
        .collect()
}

pub fn check_spec(spec: &MultisetSpec, budget: u64, extra_terms: u32) -> SpecOutcome {
    let m = spec.total();
    let mut violations = Vec::new();
    let mac = macmahon_polynomial(spec);
    let mac_bi = mac.homogenize(m + 1).expect("deg A <= m");

    let brute = match bivariate_brute(spec, budget) {
        Ok(p) => Some(p),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => {
            violations.push(format!("enumeration failed: {e}"));
            None
        }
    };
    let ops = polynomial_via_operators(spec).ok();

    let mut routes_agree = true;
    if let Some(b) = &brute {
        if *b != mac_bi {
            routes_agree = false;
            violations.push(format!("enumeration {b} != macmahon {mac_bi}"));
        }
    }
    if let Some(o) = &ops {
        if *o != mac_bi {
            routes_agree = false;
            violations.push(format!("operators {o} != macmahon {mac_bi}"));
        }
    }

    let polynomiality = polynomiality_check(spec, extra_terms);
    if !polynomiality {
        violations.push("macmahon series times (1-x)^(m+1) is not a polynomial".into());
    }

    let in_scope = ops.is_some();
    let commutator = ops.as_ref().map(commutator_is_zero);
    if commutator == Some(false) {
        violations.push("TG != GT on A_m(x,y)".into());
    }

    let expansion_type = ops
        .as_ref()
        .and_then(|p| match classify_expansion_type(spec, p) {
            Ok(t) => Some(t),
            Err(e) => {
                violations.push(format!("expansion type: {e}"));
                None
            }
        });

    let report = match PositivityReport::build(&mac, m) {
        Ok(r) => Some(r),
        Err(e) => {
            violations.push(format!("positivity report: {e}"));
            None
        }
    };

    let theorem_holds = if in_scope {
        let mut ok = report.is_some() && expansion_type.is_some();
        if let Some(r) = &report {
            let d = &r.witnesses.decomposition;
            let mut check = |cond: bool, what: &str| {
                if !cond {
                    ok = false;
                    violations.push(what.to_string());
                }
            };
            check(r.bi_gamma_positive, "not bi-gamma-positive");
            check(r.alternatingly_increasing, "not alternatingly increasing");
            check(r.unimodal, "not unimodal");
            check(
                r.modes.is_subset(&allowed_modes(m)),
                &format!("modes {:?} outside the middle", r.modes),
            );
            if spec.count_of(2) == 0 {
                check(d.a.is_zero(), "all-1 multiset with a != 0");
            }
            if spec.count_of(1) == 0 {
                check(d.b.is_zero(), "all-2 multiset with b != 0");
            }
        }
        Some(ok && violations.is_empty())
    } else {
        None
    };

    SpecOutcome {
        spec: spec.clone(),
        m,
        words: spec.word_count().to_string(),
        enumerated: brute.is_some(),
        operator_route: in_scope,
        routes_agree,
        polynomiality,
        commutator,
        expansion_type,
        bi_gamma_positive: report.as_ref().map(|r| r.bi_gamma_positive),
        alternatingly_increasing: report.as_ref().map(|r| r.alternatingly_increasing),
        unimodal: report.as_ref().map(|r| r.unimodal),
        modes: report.map(|r| r.modes).unwrap_or_default(),
        theorem_holds,
        violations,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub max_m: u32,
    pub multiplicities: Vec<u32>,
    pub budget: u64,
    pub specs: usize,
    pub enumerated: usize,
    pub enumerated_words: String,
    pub operator_route: usize,
    pub route_failures: usize,
    pub polynomiality_failures: usize,
    pub commutator_failures: usize,
    pub theorem_checked: usize,
    pub theorem_failures: usize,
    pub reported_only: usize,
    pub reported_only_not_bi_gamma: usize,
    pub violations: usize,
    pub first_counterexample: Option<SpecOutcome>,
    pub outcomes: Vec<SpecOutcome>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

pub fn run_verify(cfg: &VerifyConfig) -> VerifySummary {
    let specs = MultisetSpec::sweep(cfg.max_m, &cfg.multiplicities);
    let work = || -> Vec<SpecOutcome> {
        specs
            .par_iter()
            .map(|s| check_spec(s, cfg.budget, cfg.extra_terms))
            .collect()
    };
    let outcomes = if cfg.jobs == 0 {
        work()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("thread pool")
            .install(work)
    };
    summarize(cfg, outcomes)
}

fn summarize(cfg: &VerifyConfig, outcomes: Vec<SpecOutcome>) -> VerifySummary {
    let count = |f: &dyn Fn(&SpecOutcome) -> bool| outcomes.iter().filter(|o| f(o)).count();
    let enumerated_words: u128 = outcomes
        .iter()
        .filter(|o| o.enumerated)
        .map(|o| {
            o.words
                .parse::<num_bigint::BigUint>()
                .ok()
                .and_then(|w| w.to_u128())
                .unwrap_or(0)
        })
        .sum();
    let violations = count(&|o| !o.violations.is_empty());
    VerifySummary {
        max_m: cfg.max_m,
        multiplicities: cfg.multiplicities.clone(),
        budget: cfg.budget,
        specs: outcomes.len(),
        enumerated: count(&|o| o.enumerated),
        enumerated_words: enumerated_words.to_string(),
        operator_route: count(&|o| o.operator_route),
        route_failures: count(&|o| !o.routes_agree),
        polynomiality_failures: count(&|o| !o.polynomiality),
        commutator_failures: count(&|o| o.commutator == Some(false)),
        theorem_checked: count(&|o| o.theorem_holds.is_some()),
        theorem_failures: count(&|o| o.theorem_holds == Some(false)),
        reported_only: count(&|o| o.theorem_holds.is_none()),
        reported_only_not_bi_gamma: count(&|o| {
            o.theorem_holds.is_none() && o.bi_gamma_positive == Some(false)
        }),
        violations,
        first_counterexample: outcomes.iter().find(|o| !o.violations.is_empty()).cloned(),
        outcomes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn allowed_mode_sets() {
        assert_eq!(allowed_modes(5).into_iter().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(allowed_modes(4).into_iter().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(allowed_modes(1).into_iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn small_sweep_is_clean() {
        let cfg = VerifyConfig {
            max_m: 6,
            ..VerifyConfig::default()
        };
        let s = run_verify(&cfg);
        assert!(s.passed(), "{:?}", s.first_counterexample);
        assert_eq!(s.specs, MultisetSpec::sweep(6, &[1, 2]).len());
        assert_eq!(s.theorem_checked, s.specs);
    }

    #[test]
    fn out_of_scope_specs_are_reported_only() {
        let cfg = VerifyConfig {
            max_m: 5,
            multiplicities: vec![1, 2, 3],
            ..VerifyConfig::default()
        };
        let s = run_verify(&cfg);
        assert!(s.passed());
        assert!(s.reported_only > 0);
        let o = s
            .outcomes
            .iter()
            .find(|o| o.spec.max_multiplicity() == 3)
            .unwrap();
        assert!(o.theorem_holds.is_none());
        assert!(o.commutator.is_none());
        assert!(o.bi_gamma_positive.is_some());
    }

    #[test]
    fn empty_sweep() {
        let s = run_verify(&VerifyConfig {
            max_m: 0,
            ..VerifyConfig::default()
        });
        assert_eq!(s.specs, 0);
        assert!(s.passed());
    }

    #[test]
    fn jobs_do_not_change_results() {
        let a = run_verify(&VerifyConfig {
            max_m: 7,
            jobs: 1,
            ..VerifyConfig::default()
        });
        let b = run_verify(&VerifyConfig {
            max_m: 7,
            jobs: 4,
            ..VerifyConfig::default()
        });
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
