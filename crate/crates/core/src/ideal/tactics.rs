//! Ideal-generation tactics. Every output is `ad(m_k)…ad(m_1)` applied to
//! the input for recorded multipliers `m_i`, so it lies in the ideal the
//! input generates.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::bracket::ad_power;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::grading::{decompose, max_grade, min_grade, stat_hp, GradeKey};
use crate::monomial::MonoKey;
use crate::signature::{AlgebraSignature, BracketKind, ExpSlot, Family, Side, Var};

use super::trace::{Finding, Tactic, Trace};

/// Bound for the "sufficiently large" searches.
pub const DEFAULT_SEARCH_BOUND: u32 = 6;

fn basis(sig: &Arc<AlgebraSignature>, key: MonoKey) -> Option<Element> {
    Element::basis(sig.clone(), key).ok().filter(|e| !e.is_zero())
}

fn partner(var: Var) -> Var {
    match var.side {
        Side::X => Var::y(var.index as usize),
        Side::Y => Var::x(var.index as usize),
    }
}

fn poly_powers_at_least(l: &Element, floor: i64) -> bool {
    let vars = l.sig().variables();
    l.terms()
        .iter()
        .all(|m| vars.iter().all(|&v| m.key.poly.get(v) >= floor))
}

/// Smallest polynomial power every term must reach: none for Witt-type and
/// exponential-only algebras, one for the others.
fn positivity_floor(sig: &AlgebraSignature) -> Option<i64> {
    match (sig.kind(), sig.family()) {
        (BracketKind::Witt, _) | (_, Family::PoissonExpOnly) => None,
        _ => Some(1),
    }
}

/// A nonzero element of the ideal of `l` all of whose polynomial powers
/// are at least one (Poisson-type) or nonnegative (Witt-type, where every
/// element already qualifies).
///
/// The multiplier is `x_1^{k_1}…x_n^{k_n} y_1^{h_1}…y_n^{h_n}` with
/// `k_1 > … > k_n > h_1 > … > h_n`, scaled up until the bracket qualifies
/// or `search_bound` is exhausted.
pub fn tactic_positivize(l: &Element, search_bound: u32) -> Result<Trace> {
    if l.is_zero() {
        return Err(Error::EmptyElement);
    }
    let sig = l.sig_arc();
    let floor = match positivity_floor(sig) {
        None => return Ok(Trace::identity(l)),
        Some(f) => f,
    };
    if poly_powers_at_least(l, floor) {
        return Ok(Trace::identity(l));
    }
    let vars = sig.variables();
    let len = vars.len() as i64;
    for s in 1..=search_bound as i64 {
        let mut key = MonoKey::one();
        for (p, &v) in vars.iter().enumerate() {
            key.poly.add(v, s * (len - p as i64) + 1);
        }
        let m = basis(sig, key).expect("positive powers are valid");
        let out = ad_power(&m, l, 1)?;
        if !out.is_zero() && poly_powers_at_least(&out, floor) {
            let mut trace = Trace::identity(l);
            trace.push(Tactic::Positivize, m, 1)?;
            return Ok(trace);
        }
    }
    Err(Error::SearchExhausted { bound: search_bound })
}

/// Which end of the grading the strip step moves toward zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StripTarget {
    /// The lex-largest grade is positive; every grade moves down.
    Max(GradeKey),
    /// No grade is positive; every grade moves up, the smallest to zero.
    Min(GradeKey),
}

impl StripTarget {
    pub fn of(l: &Element) -> Option<Self> {
        let hi = max_grade(l)?;
        if hi.signum() == Ordering::Greater {
            return Some(StripTarget::Max(hi));
        }
        let lo = min_grade(l)?;
        (lo.signum() == Ordering::Less).then_some(StripTarget::Min(lo))
    }

    pub fn grade(&self) -> &GradeKey {
        match self {
            StripTarget::Max(g) | StripTarget::Min(g) => g,
        }
    }

    /// Whether `out` moved strictly in the promised direction.
    pub fn improved_by(&self, out: &Element) -> bool {
        match self {
            StripTarget::Max(g) => max_grade(out).is_some_and(|h| h < *g),
            StripTarget::Min(g) => min_grade(out).is_some_and(|h| h > *g),
        }
    }
}

fn exp_key(slots: &[ExpSlot], coords: &[(usize, i64)]) -> MonoKey {
    let mut key = MonoKey::one();
    for &(i, a) in coords {
        key.exp.add(slots[i], a);
    }
    key
}

/// Candidate multiplier chains for the strip step, most canonical first.
fn strip_candidates(sig: &Arc<AlgebraSignature>, target: &GradeKey, bound: u32) -> Vec<Vec<Element>> {
    let slots = sig.grade_slots();
    let s = target.leading_position().expect("target grade is nonzero");
    let lead = slots[s];
    let bound = bound as i64;
    let mut out: Vec<Vec<Element>> = Vec::new();
    let mut push = |chain: Vec<Option<Element>>| {
        if let Some(chain) = chain.into_iter().collect::<Option<Vec<_>>>() {
            out.push(chain);
        }
    };
    match sig.kind() {
        BracketKind::Witt => {
            // e^{-g} x_t^k ∂_t, starting from t = u, k = 0.
            let neg: Vec<(usize, i64)> = target.0.iter().enumerate().map(|(i, &a)| (i, -a)).collect();
            let u = lead.var.index as usize;
            let mut derivs = vec![u];
            derivs.extend((0..sig.n()).filter(|&t| t != u));
            for k in 0..=bound {
                for &t in &derivs {
                    let key = exp_key(&slots, &neg).with_poly(Var::x(t), k).with_deriv(t);
                    push(vec![basis(sig, key)]);
                }
            }
        }
        BracketKind::Poisson => {
            let shift = exp_key(&slots, &[(s, -target.0[s])]);
            push(vec![basis(sig, shift.clone())]);
            let other = partner(lead.var);
            for r in 2..=bound + 1 {
                push(vec![
                    basis(sig, MonoKey::one().with_poly(other, r)),
                    basis(sig, shift.clone()),
                ]);
            }
            for k in 1..=bound {
                for v in sig.variables() {
                    for p in [k, -k] {
                        push(vec![basis(sig, shift.clone().with_poly(v, p))]);
                    }
                }
            }
            for w in s + 1..slots.len() {
                for t in 1..=bound {
                    for c in [t, -t] {
                        let key = exp_key(&slots, &[(s, -target.0[s]), (w, c)]);
                        push(vec![basis(sig, key)]);
                    }
                }
            }
        }
    }
    out
}

/// Bracket with an exponential multiplier so that every grade moves
/// strictly toward zero: down when the largest grade is positive, up when
/// no grade is positive. An exponential-free element is returned unchanged.
pub fn tactic_strip_exponentials(l: &Element, search_bound: u32) -> Result<Trace> {
    if l.is_zero() {
        return Err(Error::EmptyElement);
    }
    let target = match StripTarget::of(l) {
        None => return Ok(Trace::identity(l)),
        Some(t) => t,
    };
    for chain in strip_candidates(l.sig_arc(), target.grade(), search_bound) {
        let mut out = l.clone();
        for m in &chain {
            out = ad_power(m, &out, 1)?;
        }
        if !out.is_zero() && target.improved_by(&out) {
            let mut trace = Trace::identity(l);
            for m in chain {
                trace.push(Tactic::StripExponentials, m, 1)?;
            }
            return Ok(trace);
        }
    }
    Err(Error::TacticFailed(format!(
        "every multiplier within bound {} annihilates {} or fails to move grade {}",
        search_bound,
        l,
        target.grade()
    )))
}

/// The variable the reduce step differentiates along, taken from the
/// leading coordinate of the extreme nonzero grade.
fn reduce_variable(l: &Element) -> Option<Var> {
    let target = StripTarget::of(l)?;
    let s = target.grade().leading_position()?;
    Some(l.sig().grade_slots()[s].var)
}

/// Conditions under which [`tactic_reduce_components`] applies.
pub fn reduce_precondition(l: &Element) -> Result<()> {
    let parts = decompose(l);
    if parts.len() < 2 {
        return Err(Error::Precondition(format!(
            "{} has {} homogeneous component(s), at least two are needed",
            l,
            parts.len()
        )));
    }
    let zero = GradeKey::zero(l.sig().grade_len());
    let base = parts
        .get(&zero)
        .ok_or_else(|| Error::Precondition(format!("{} has no exponential-free component", l)))?;
    if l.sig().is_poisson() {
        let var = reduce_variable(l).expect("a nonzero grade exists");
        if base.terms().iter().any(|m| m.key.poly.get(var) < 0) {
            return Err(Error::Precondition(format!(
                "the exponential-free component of {} has a negative power of {}",
                l, var
            )));
        }
    }
    Ok(())
}

fn reduce_candidates(l: &Element, bound: u32) -> Vec<(Element, usize)> {
    let sig = l.sig_arc();
    let times = stat_hp(l).unwrap_or(0).max(0) as usize + 1;
    let mut out = Vec::new();
    let var = match reduce_variable(l) {
        Some(v) => v,
        None => return out,
    };
    match sig.kind() {
        BracketKind::Witt => {
            let u = var.index as usize;
            let mut derivs = vec![u];
            derivs.extend((0..sig.n()).filter(|&t| t != u));
            for t in derivs {
                if let Some(m) = basis(sig, MonoKey::one().with_deriv(t)) {
                    out.push((m, times));
                }
            }
        }
        BracketKind::Poisson => {
            // ad(y_r) = -∂/∂x_r and ad(x_r) = ∂/∂y_r.
            let mut vars = vec![partner(var)];
            vars.extend(sig.variables().into_iter().filter(|&v| v != partner(var)));
            for v in vars {
                if let Some(m) = basis(sig, MonoKey::one().with_poly(v, 1)) {
                    out.push((m, times));
                }
            }
            let slots = sig.grade_slots();
            for t in 1..=bound as i64 {
                for (i, _) in slots.iter().enumerate() {
                    for c in [t, -t] {
                        if let Some(m) = basis(sig, exp_key(&slots, &[(i, c)])) {
                            out.push((m, 1));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Annihilate the exponential-free component by repeated adjoint action
/// of `∂_u` (Witt-type) or `y_r` / `x_r` (Poisson-type), `hp + 1` resp.
/// `lp + 1` times, keeping the exponential components alive.
pub fn tactic_reduce_components(l: &Element, search_bound: u32) -> Result<Trace> {
    reduce_precondition(l)?;
    let before = decompose(l).len();
    for (m, times) in reduce_candidates(l, search_bound) {
        let out = ad_power(&m, l, times)?;
        if !out.is_zero() && decompose(&out).len() < before {
            let mut trace = Trace::identity(l);
            trace.push(Tactic::ReduceComponents, m, times)?;
            return Ok(trace);
        }
    }
    Err(Error::TacticFailed(format!(
        "no candidate reduced the {} components of {} without annihilating it",
        before, l
    )))
}

/// Drive `l` to a nonzero exponential-free element of its ideal by
/// alternating strip and reduce steps. Failures end the run and are
/// returned as findings alongside the partial trace.
pub fn drive_to_grade_zero(l: &Element, search_bound: u32, max_steps: usize) -> (Trace, Vec<Finding>) {
    let mut trace = Trace::identity(l);
    let mut findings = Vec::new();
    let record = |tactic: Tactic, input: &Element, error: Error, findings: &mut Vec<Finding>| {
        findings.push(Finding {
            tactic,
            input: input.clone(),
            error,
        });
    };
    if l.is_zero() {
        return (trace, findings);
    }
    match tactic_positivize(l, search_bound) {
        Ok(t) => trace.extend(t),
        Err(e) => {
            record(Tactic::Positivize, l, e, &mut findings);
            return (trace, findings);
        }
    }
    for _ in 0..max_steps {
        let cur = trace.output.clone();
        let parts = decompose(&cur);
        if parts.keys().all(GradeKey::is_zero) {
            break;
        }
        let zero_present = parts.keys().any(GradeKey::is_zero);
        let (tactic, result) = if zero_present && parts.len() >= 2 {
            match reduce_precondition(&cur) {
                Ok(()) => (
                    Tactic::ReduceComponents,
                    tactic_reduce_components(&cur, search_bound),
                ),
                Err(_) => (Tactic::Positivize, tactic_positivize(&cur, search_bound)),
            }
        } else {
            (
                Tactic::StripExponentials,
                tactic_strip_exponentials(&cur, search_bound),
            )
        };
        match result {
            Ok(t) if t.steps.is_empty() => break,
            Ok(t) => trace.extend(t),
            Err(e) => {
                record(tactic, &cur, e, &mut findings);
                break;
            }
        }
    }
    (trace, findings)
}
