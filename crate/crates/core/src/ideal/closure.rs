//! Truncated ideal saturation by exact row reduction.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bracket::bracket;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::linalg::{RowSpace, SparseRow};
use crate::monomial::{MonoKey, Monomial};
use crate::signature::AlgebraSignature;
use crate::window::TruncationCaps;
use crate::Rational;

use super::obstruction::coverage_bound;
use super::tactics::{drive_to_grade_zero, DEFAULT_SEARCH_BOUND};
use super::trace::{Finding, Trace};

/// The bracket a saturation run uses.
pub trait LieBracket: Sync {
    fn apply(&self, a: &Element, b: &Element) -> Result<Element>;
    fn describe(&self) -> &'static str;
}

/// The algebra's own bracket.
#[derive(Debug, Clone, Copy, Default)]
pub struct AlgebraBracket;

impl LieBracket for AlgebraBracket {
    fn apply(&self, a: &Element, b: &Element) -> Result<Element> {
        bracket(a, b)
    }

    fn describe(&self) -> &'static str {
        "algebra bracket"
    }
}

/// The zero bracket, which makes every subspace an ideal.
#[derive(Debug, Clone, Copy, Default)]
pub struct ZeroBracket;

impl LieBracket for ZeroBracket {
    fn apply(&self, a: &Element, _b: &Element) -> Result<Element> {
        Ok(Element::zero(a.sig_arc().clone()))
    }

    fn describe(&self) -> &'static str {
        "zero bracket"
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureConfig {
    pub max_rounds: usize,
    /// Extra room, beyond the target window, in which intermediate
    /// results are kept.
    pub margin_poly: u32,
    pub margin_exp: u32,
    /// Further attempts, each with both margins one larger, while coverage
    /// stays below the certified bound.
    pub escalations: u32,
    /// Seed the span with the strip/reduce chain of the seed as well.
    pub tactics: bool,
    pub search_bound: u32,
}

impl Default for ClosureConfig {
    fn default() -> Self {
        ClosureConfig {
            max_rounds: 16,
            margin_poly: 0,
            margin_exp: 0,
            escalations: 2,
            tactics: true,
            search_bound: DEFAULT_SEARCH_BOUND,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosureReport {
    pub seed: Element,
    pub caps: TruncationCaps,
    pub working_caps: TruncationCaps,
    pub bracket: &'static str,
    pub multiplier_budget: String,
    pub multiplier_count: usize,
    /// Window monomials inside the reached span.
    pub reached_count: usize,
    /// Window monomials outside it, in window order.
    pub unreached: Vec<MonoKey>,
    /// Largest coverage any ideal containing the seed can have in this
    /// window, from the bracket obstructions; one when there are none.
    pub coverage_bound: Rational,
    /// Margin enlargements performed before this run.
    pub escalations: u32,
    pub window_size: usize,
    pub working_size: usize,
    pub rank: usize,
    pub rounds: usize,
    /// `reached_count` after seeding and after each round.
    pub reached_by_round: Vec<usize>,
    pub evaluated: usize,
    /// Nonzero brackets that left the working window.
    pub discarded: usize,
    pub fixed_point: bool,
    pub round_limit_hit: bool,
    pub tactic_trace: Option<Trace>,
    pub findings: Vec<Finding>,
}

impl ClosureReport {
    pub fn coverage(&self) -> Rational {
        if self.window_size == 0 {
            return Rational::one();
        }
        Rational::new(
            (self.reached_count as i64).into(),
            (self.window_size as i64).into(),
        )
    }

    pub fn is_complete(&self) -> bool {
        self.reached_count == self.window_size
    }

    /// Coverage equals the certified bound.
    pub fn attains_bound(&self) -> bool {
        self.coverage() == self.coverage_bound
    }

    pub fn discard_rate(&self) -> Rational {
        if self.evaluated == 0 {
            return Rational::zero();
        }
        Rational::new((self.discarded as i64).into(), (self.evaluated as i64).into())
    }
}

struct Coordinates {
    keys: Vec<MonoKey>,
    index: HashMap<MonoKey, usize>,
}

impl Coordinates {
    fn new(keys: Vec<MonoKey>) -> Self {
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Coordinates { keys, index }
    }

    fn row(&self, e: &Element) -> Option<SparseRow> {
        e.terms()
            .iter()
            .map(|m| self.index.get(&m.key).map(|&i| (i, m.coeff.clone())))
            .collect()
    }

    fn element(&self, row: &SparseRow, sig: &Arc<AlgebraSignature>) -> Element {
        let terms = row
            .iter()
            .map(|(&i, c)| Monomial::new(c.clone(), self.keys[i].clone()))
            .collect();
        Element::normalize(terms, sig.clone()).expect("window keys are valid")
    }
}

fn monic(mut row: SparseRow) -> SparseRow {
    if let Some(lead) = row.values().next().cloned() {
        let inv = Rational::one() / lead;
        for v in row.values_mut() {
            *v *= &inv;
        }
    }
    row
}

/// Saturate the span of `seed` under brackets with every window monomial,
/// using the algebra's bracket.
pub fn closure_saturate(
    seed: &Element,
    caps: &TruncationCaps,
    config: &ClosureConfig,
) -> Result<ClosureReport> {
    closure_saturate_with(seed, caps, config, &AlgebraBracket)
}

/// As [`closure_saturate`] with an explicit bracket.
///
/// The span lives in the working window (the target window enlarged by the
/// configured margins, enlarged on retries). Each round brackets every reduced row that is new
/// modulo the rows expanded before against every multiplier; results
/// leaving the working window are counted and dropped. A window monomial counts as reached when its
/// unit vector lies in the span.
pub fn closure_saturate_with<B: LieBracket>(
    seed: &Element,
    caps: &TruncationCaps,
    config: &ClosureConfig,
    lie: &B,
) -> Result<ClosureReport> {
    if seed.is_zero() {
        return Err(Error::Precondition(
            "the seed of a closure run must be nonzero".into(),
        ));
    }
    let bound = coverage_bound(seed, caps)?;
    let mut step = 0;
    loop {
        let report = saturate_once(seed, caps, config, step, &bound, lie)?;
        if step == config.escalations || report.coverage() >= bound {
            return Ok(report);
        }
        step += 1;
    }
}

fn saturate_once<B: LieBracket>(
    seed: &Element,
    caps: &TruncationCaps,
    config: &ClosureConfig,
    step: u32,
    bound: &Rational,
    lie: &B,
) -> Result<ClosureReport> {
    let sig = seed.sig_arc().clone();
    let target_keys = caps.enumerate(&sig)?;
    let working_caps = caps.enlarged(&sig, config.margin_poly + step, config.margin_exp + step);
    let coords = Coordinates::new(working_caps.enumerate(&sig)?);
    let target_cols: Vec<usize> = target_keys.iter().map(|k| coords.index[k]).collect();
    let multipliers: Vec<Element> = target_keys
        .iter()
        .map(|k| Element::basis(sig.clone(), k.clone()))
        .collect::<Result<_>>()?;

    let mut space = RowSpace::new();
    let seed_row = coords.row(seed).ok_or_else(|| {
        Error::OutOfWindow(format!(
            "seed {} lies outside the working window {}",
            seed, working_caps
        ))
    })?;
    space.insert(&seed_row);

    let (tactic_trace, findings) = if config.tactics {
        let (trace, findings) = drive_to_grade_zero(seed, config.search_bound, 64);
        for state in trace.states()? {
            if let Some(row) = coords.row(&state) {
                space.insert(&row);
            }
        }
        (Some(trace), findings)
    } else {
        (None, Vec::new())
    };

    let reached = |space: &RowSpace| target_cols.iter().filter(|&&c| space.contains_unit(c)).count();
    let mut reached_by_round = vec![reached(&space)];
    let mut evaluated = 0usize;
    let mut discarded = 0usize;
    let mut rounds = 0usize;
    let mut fixed_point = false;
    let mut round_limit_hit = false;

    // Span of the rows already bracketed against every multiplier. Each
    // round expands a basis of the reached space modulo this span, drawn
    // from the current reduced rows, which are short.
    let mut done = RowSpace::new();
    loop {
        if *reached_by_round.last().expect("seeded") == target_cols.len() {
            break;
        }
        let mut candidates: Vec<&SparseRow> = space.rows().map(|(_, r)| r).collect();
        candidates.sort_by_key(|r| r.len());
        let mut todo: Vec<SparseRow> = Vec::new();
        for r in candidates {
            if done.insert(r).is_some() {
                todo.push(r.clone());
            }
        }
        if todo.is_empty() {
            fixed_point = true;
            break;
        }
        if rounds == config.max_rounds {
            round_limit_hit = true;
            break;
        }
        rounds += 1;
        let elements: Vec<Element> = todo.iter().map(|r| coords.element(r, &sig)).collect();
        let pairs: Vec<(usize, usize)> = (0..elements.len())
            .flat_map(|i| (0..multipliers.len()).map(move |j| (i, j)))
            .collect();
        let snapshot = &space;
        let outcomes: Vec<(usize, usize, Option<SparseRow>)> = pairs
            .par_iter()
            .map(|&(i, j)| -> Result<(usize, usize, Option<SparseRow>)> {
                let r = lie.apply(&multipliers[j], &elements[i])?;
                if r.is_zero() {
                    return Ok((0, 0, None));
                }
                match coords.row(&r) {
                    None => Ok((1, 1, None)),
                    Some(row) => {
                        let rem = snapshot.reduce(&row);
                        Ok((1, 0, (!rem.is_empty()).then(|| monic(rem))))
                    }
                }
            })
            .collect::<Result<_>>()?;
        let mut seen: HashSet<SparseRow> = HashSet::new();
        for (e, d, row) in outcomes {
            evaluated += e;
            discarded += d;
            if let Some(row) = row {
                if seen.insert(row.clone()) {
                    space.insert(&row);
                }
            }
        }
        reached_by_round.push(reached(&space));
    }

    let unreached = target_keys
        .iter()
        .zip(&target_cols)
        .filter(|(_, &c)| !space.contains_unit(c))
        .map(|(k, _)| k.clone())
        .collect();
    Ok(ClosureReport {
        seed: seed.clone(),
        unreached,
        coverage_bound: bound.clone(),
        escalations: step,
        caps: caps.clone(),
        working_caps: working_caps.clone(),
        bracket: lie.describe(),
        multiplier_budget: format!("all {} monomials of the window ({})", multipliers.len(), caps),
        multiplier_count: multipliers.len(),
        reached_count: *reached_by_round.last().expect("seeded"),
        window_size: target_cols.len(),
        working_size: coords.keys.len(),
        rank: space.rank(),
        rounds,
        reached_by_round,
        evaluated,
        discarded,
        fixed_point,
        round_limit_hit,
        tactic_trace,
        findings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_element;

    fn sig(s: &str) -> Arc<AlgebraSignature> {
        Arc::new(s.parse().unwrap())
    }

    #[test]
    fn witt_window_is_regenerated_from_d() {
        let w = sig("W(1)");
        let caps = TruncationCaps::for_signature(&w, 4, 0);
        let seed = parse_element("D1", w.clone()).unwrap();
        let report = closure_saturate(&seed, &caps, &ClosureConfig::default()).unwrap();
        assert_eq!(report.coverage(), Rational::one());
        assert!(report.reached_by_round.windows(2).all(|p| p[0] <= p[1]));
    }

    #[test]
    fn zero_seed_is_refused() {
        let w = sig("W(1)");
        let caps = TruncationCaps::for_signature(&w, 4, 0);
        let zero = Element::zero(w.clone());
        assert!(matches!(
            closure_saturate(&zero, &caps, &ClosureConfig::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn abelian_span_stays_put() {
        let h = sig("H(1)");
        let caps = TruncationCaps::for_signature(&h, 2, 0);
        let seed = parse_element("x1", h.clone()).unwrap();
        let config = ClosureConfig {
            tactics: false,
            ..ClosureConfig::default()
        };
        let report = closure_saturate_with(&seed, &caps, &config, &ZeroBracket).unwrap();
        assert_eq!(report.reached_count, 1);
        assert!(report.coverage() < Rational::one());
        assert!(report.fixed_point);
    }
}
