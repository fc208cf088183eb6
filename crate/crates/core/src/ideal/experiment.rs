//! Saturation from many pseudo-random seeds.

use std::sync::Arc;

use num_traits::One;

use crate::element::Element;
use crate::error::Result;
use crate::monomial::MonoKey;
use crate::random::{rng, Sampler};
use crate::signature::{AlgebraSignature, Var};
use crate::window::TruncationCaps;
use crate::Rational;

use super::closure::{closure_saturate, closure_saturate_with, ClosureConfig, ClosureReport, ZeroBracket};

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSummary {
    pub algebra: String,
    pub caps: TruncationCaps,
    pub rng_seed: u64,
    pub reports: Vec<ClosureReport>,
}

impl ExperimentSummary {
    pub fn coverages(&self) -> Vec<Rational> {
        self.reports.iter().map(ClosureReport::coverage).collect()
    }

    pub fn min_coverage(&self) -> Rational {
        self.coverages().into_iter().min().unwrap_or_else(Rational::one)
    }

    /// Every seed reached the largest coverage its obstructions allow.
    pub fn attains_bounds(&self) -> bool {
        self.reports.iter().all(ClosureReport::attains_bound)
    }

    /// Every seed regenerated the whole window.
    pub fn corroborated(&self) -> bool {
        !self.reports.is_empty() && self.reports.iter().all(ClosureReport::is_complete)
    }
}

/// Run [`closure_saturate`] from `num_seeds` seeds drawn deterministically
/// from `rng_seed`.
pub fn simplicity_experiment(
    sig: &Arc<AlgebraSignature>,
    caps: &TruncationCaps,
    num_seeds: usize,
    rng_seed: u64,
    config: &ClosureConfig,
) -> Result<ExperimentSummary> {
    let sampler = Sampler::new(caps.clone());
    let mut r = rng(rng_seed);
    let seeds: Vec<Element> = (0..num_seeds).map(|_| sampler.element(sig, &mut r)).collect();
    let reports = seeds
        .iter()
        .map(|s| closure_saturate(s, caps, config))
        .collect::<Result<_>>()?;
    Ok(ExperimentSummary {
        algebra: sig.to_string(),
        caps: caps.clone(),
        rng_seed,
        reports,
    })
}

/// The span of `x_1` under the zero bracket: an ideal that is not the
/// whole window, so its coverage stays below one.
pub fn abelian_control(sig: &Arc<AlgebraSignature>, caps: &TruncationCaps) -> Result<ClosureReport> {
    let seed = match Element::basis(sig.clone(), MonoKey::one().with_poly(Var::x(0), 1)) {
        Ok(e) if !e.is_zero() && caps.contains(sig, &e.terms()[0].key) => e,
        _ => {
            let first = caps.enumerate(sig)?.into_iter().next().expect("nonempty window");
            Element::basis(sig.clone(), first)?
        }
    };
    let config = ClosureConfig {
        tactics: false,
        escalations: 0,
        ..ClosureConfig::default()
    };
    closure_saturate_with(&seed, caps, &config, &ZeroBracket)
}
