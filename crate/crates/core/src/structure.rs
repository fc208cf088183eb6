//! Structural probes on truncated windows: centers, ad-diagonal elements,
//! derivation residuals and the `W+(1)` automorphism constraint.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

use crate::bracket::bracket;
use crate::element::{Accumulator, Element};
use crate::error::{Error, Result};
use crate::linalg::{RowSpace, SparseRow};
use crate::monomial::{MonoKey, Monomial};
use crate::signature::{AlgebraSignature, Family, Var};
use crate::window::TruncationCaps;
use crate::Rational;

/// Drop the constant term.
pub fn quotient_project(l: &Element) -> Element {
    l.filter_terms(|m| !m.key.is_constant())
}

fn window_elements(sig: &Arc<AlgebraSignature>, caps: &TruncationCaps) -> Result<Vec<Element>> {
    caps.enumerate(sig)?
        .into_iter()
        .map(|k| Element::basis(sig.clone(), k))
        .collect()
}

/// A spanning set of the elements of the window that commute with every
/// window basis monomial. The answer is exact: brackets are taken in the
/// full algebra, not truncated.
pub fn center_probe(sig: &Arc<AlgebraSignature>, caps: &TruncationCaps) -> Result<Vec<Element>> {
    let keys = caps.enumerate(sig)?;
    let basis = window_elements(sig, caps)?;
    // One block of constraint rows per test monomial b: the coefficient of
    // each output monomial in Σ_k c_k [b_k, b].
    let blocks: Vec<Vec<SparseRow>> = basis
        .par_iter()
        .map(|b| -> Result<Vec<SparseRow>> {
            let mut by_output: HashMap<MonoKey, SparseRow> = HashMap::new();
            for (k, bk) in basis.iter().enumerate() {
                for m in bracket(bk, b)?.terms() {
                    by_output
                        .entry(m.key.clone())
                        .or_default()
                        .insert(k, m.coeff.clone());
                }
            }
            let mut rows: Vec<(MonoKey, SparseRow)> = by_output.into_iter().collect();
            rows.sort_by(|a, b| a.0.cmp(&b.0));
            Ok(rows.into_iter().map(|(_, r)| r).collect())
        })
        .collect::<Result<_>>()?;
    let mut space = RowSpace::new();
    for row in blocks.iter().flatten() {
        space.insert(row);
        if space.rank() == keys.len() {
            break;
        }
    }
    space
        .kernel_basis(keys.len())
        .into_iter()
        .map(|v| {
            let terms = v
                .into_iter()
                .map(|(k, c)| Monomial::new(c, keys[k].clone()))
                .collect();
            Element::normalize(terms, sig.clone())
        })
        .collect()
}

/// Outcome of testing one candidate against every window monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct AdDiagonalReport {
    pub candidate: Element,
    pub diagonal: bool,
    /// `λ_b` with `[candidate, b] = λ_b b`, for every window monomial `b`
    /// checked before the first failure.
    pub eigenvalues: Vec<(MonoKey, Rational)>,
    /// A monomial whose bracket is not a multiple of itself, with that bracket.
    pub witness: Option<(MonoKey, Element)>,
}

impl AdDiagonalReport {
    pub fn eigenvalue(&self, key: &MonoKey) -> Option<&Rational> {
        self.eigenvalues.iter().find(|(k, _)| k == key).map(|(_, l)| l)
    }
}

/// Whether `ad(candidate)` is diagonal on the window monomials.
pub fn is_ad_diagonal(candidate: &Element, caps: &TruncationCaps) -> Result<AdDiagonalReport> {
    let sig = candidate.sig_arc().clone();
    let mut eigenvalues = Vec::new();
    for key in caps.enumerate(&sig)? {
        let b = Element::basis(sig.clone(), key.clone())?;
        let r = bracket(candidate, &b)?;
        let lambda = match r.terms() {
            [] => Some(Rational::zero()),
            [m] if m.key == key => Some(m.coeff.clone()),
            _ => None,
        };
        match lambda {
            Some(l) => eigenvalues.push((key, l)),
            None => {
                return Ok(AdDiagonalReport {
                    candidate: candidate.clone(),
                    diagonal: false,
                    eigenvalues,
                    witness: Some((key, r)),
                })
            }
        }
    }
    Ok(AdDiagonalReport {
        candidate: candidate.clone(),
        diagonal: true,
        eigenvalues,
        witness: None,
    })
}

/// Window monomials, other than the constant, whose adjoint action is
/// diagonal on the window.
pub fn find_ad_diagonal(sig: &Arc<AlgebraSignature>, caps: &TruncationCaps) -> Result<Vec<Element>> {
    let keys = caps.enumerate(sig)?;
    let found: Vec<Option<Element>> = keys
        .par_iter()
        .filter(|k| !k.is_constant())
        .map(|k| -> Result<Option<Element>> {
            let candidate = Element::basis(sig.clone(), k.clone())?;
            let report = is_ad_diagonal(&candidate, caps)?;
            Ok(report.diagonal.then_some(candidate))
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// A linear map given by its values on window monomials.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMapTable {
    sig: Arc<AlgebraSignature>,
    assignments: BTreeMap<MonoKey, Element>,
}

impl LinearMapTable {
    pub fn new(sig: Arc<AlgebraSignature>) -> Self {
        LinearMapTable {
            sig,
            assignments: BTreeMap::new(),
        }
    }

    /// Tabulate `f` on every window monomial.
    pub fn from_fn(
        sig: &Arc<AlgebraSignature>,
        caps: &TruncationCaps,
        mut f: impl FnMut(&Element) -> Result<Element>,
    ) -> Result<Self> {
        let mut table = LinearMapTable::new(sig.clone());
        for key in caps.enumerate(sig)? {
            let b = Element::basis(sig.clone(), key.clone())?;
            table.assign(key, f(&b)?)?;
        }
        Ok(table)
    }

    /// `ad(z)` on the window.
    pub fn inner(z: &Element, caps: &TruncationCaps) -> Result<Self> {
        Self::from_fn(z.sig_arc(), caps, |b| bracket(z, b))
    }

    /// The scalar derivation on the window.
    pub fn scalar(sig: &Arc<AlgebraSignature>, caps: &TruncationCaps) -> Result<Self> {
        Self::from_fn(sig, caps, scalar_derivation)
    }

    pub fn identity(sig: &Arc<AlgebraSignature>, caps: &TruncationCaps) -> Result<Self> {
        Self::from_fn(sig, caps, |b| Ok(b.clone()))
    }

    pub fn sig(&self) -> &Arc<AlgebraSignature> {
        &self.sig
    }

    pub fn assign(&mut self, key: MonoKey, image: Element) -> Result<()> {
        key.validate(&self.sig)?;
        self.sig.ensure_same(image.sig())?;
        self.assignments.insert(key, image);
        Ok(())
    }

    pub fn get(&self, key: &MonoKey) -> Option<&Element> {
        self.assignments.get(key)
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn defines(&self, e: &Element) -> bool {
        e.terms().iter().all(|m| self.assignments.contains_key(&m.key))
    }

    pub fn apply(&self, e: &Element) -> Result<Element> {
        let mut acc = Accumulator::new();
        for m in e.terms() {
            let image = self
                .assignments
                .get(&m.key)
                .ok_or_else(|| Error::OutOfWindow(format!("no image assigned to {}", m.key)))?;
            image.accumulate_into(&mut acc, &m.coeff);
        }
        Ok(acc.finish(self.sig.clone()))
    }

    /// `α·self + β·other` on the common domain.
    pub fn combine(&self, alpha: &Rational, other: &LinearMapTable, beta: &Rational) -> Result<Self> {
        self.sig.ensure_same(&other.sig)?;
        let mut out = LinearMapTable::new(self.sig.clone());
        for (key, image) in &self.assignments {
            let theirs = other
                .assignments
                .get(key)
                .ok_or_else(|| Error::OutOfWindow(format!("no image assigned to {}", key)))?;
            out.assignments
                .insert(key.clone(), image.scale(alpha).add(&theirs.scale(beta))?);
        }
        Ok(out)
    }
}

/// `D([a,b]) − [D(a),b] − [a,D(b)]` for one pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual {
    pub a: MonoKey,
    pub b: MonoKey,
    pub residual: Element,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DerivationReport {
    pub pairs_checked: usize,
    /// Pairs whose bracket leaves the table's domain.
    pub pairs_skipped: usize,
    /// Nonzero residuals only.
    pub residuals: Vec<Residual>,
}

impl DerivationReport {
    pub fn is_derivation(&self) -> bool {
        self.residuals.is_empty()
    }

    /// Fraction of window pairs that could be checked.
    pub fn coverage(&self) -> Rational {
        let total = self.pairs_checked + self.pairs_skipped;
        if total == 0 {
            return Rational::zero();
        }
        Rational::new((self.pairs_checked as i64).into(), (total as i64).into())
    }
}

/// Check the Leibniz rule for `d` on all ordered pairs of window monomials.
pub fn check_derivation(d: &LinearMapTable, caps: &TruncationCaps) -> Result<DerivationReport> {
    let sig = d.sig().clone();
    let basis = window_elements(&sig, caps)?;
    for b in &basis {
        if !d.defines(b) {
            return Err(Error::OutOfWindow(format!("no image assigned to {}", b)));
        }
    }
    let outcomes: Vec<Vec<Option<Residual>>> = basis
        .par_iter()
        .map(|a| -> Result<Vec<Option<Residual>>> {
            let da = d.apply(a)?;
            let mut out = Vec::with_capacity(basis.len());
            for b in &basis {
                let ab = bracket(a, b)?;
                if !d.defines(&ab) {
                    out.push(None);
                    continue;
                }
                let db = d.apply(b)?;
                let residual = d.apply(&ab)?.sub(&bracket(&da, b)?)?.sub(&bracket(a, &db)?)?;
                out.push(Some(Residual {
                    a: a.terms()[0].key.clone(),
                    b: b.terms()[0].key.clone(),
                    residual,
                }));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut report = DerivationReport {
        pairs_checked: 0,
        pairs_skipped: 0,
        residuals: Vec::new(),
    };
    for o in outcomes.into_iter().flatten() {
        match o {
            None => report.pairs_skipped += 1,
            Some(r) => {
                report.pairs_checked += 1;
                if !r.residual.is_zero() {
                    report.residuals.push(r);
                }
            }
        }
    }
    Ok(report)
}

/// `S(m) = (2 − total degree)·m` on a single exponential-free Poisson monomial.
pub fn scalar_derivation_apply(m: &Monomial, sig: &Arc<AlgebraSignature>) -> Result<Element> {
    if !sig.is_poisson() {
        return Err(Error::mismatch(sig, "a Poisson-type algebra"));
    }
    if !m.key.is_exponential_free() {
        return Err(Error::SignatureViolation(format!(
            "the scalar derivation is defined on polynomial monomials, not {}",
            m.key
        )));
    }
    let degree: i64 = m.key.poly.iter().map(|(_, p)| p).sum();
    let factor = Rational::from_integer((2 - degree).into());
    Element::from_monomial(sig.clone(), Monomial::new(&m.coeff * factor, m.key.clone()))
}

/// The scalar derivation extended linearly.
pub fn scalar_derivation(e: &Element) -> Result<Element> {
    let mut out = Element::zero(e.sig_arc().clone());
    for m in e.terms() {
        out = out.add(&scalar_derivation_apply(m, e.sig_arc())?)?;
    }
    Ok(out)
}

/// Verdict on a candidate pair `(θ(∂), θ(x∂))` for an automorphism of `W+(1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AutomorphismVerdict {
    /// `[θ(∂), θ(x∂)] = θ(∂)`.
    pub relation_holds: bool,
    /// `θ(x∂) = α x∂ + β ∂` with `α ≠ 0`.
    pub shape_holds: bool,
    pub alpha: Option<Rational>,
    pub beta: Option<Rational>,
    pub relation_residual: Element,
}

impl AutomorphismVerdict {
    pub fn accepted(&self) -> bool {
        self.relation_holds && self.shape_holds
    }
}

pub fn wplus_automorphism_check(theta_d: &Element, theta_xd: &Element) -> Result<AutomorphismVerdict> {
    let sig = theta_d.sig();
    if !matches!(sig.family(), Family::WittPlusOne | Family::Witt) || sig.n() != 1 {
        return Err(Error::mismatch(sig, "W+(1)"));
    }
    sig.ensure_same(theta_xd.sig())?;
    let relation_residual = bracket(theta_d, theta_xd)?.sub(theta_d)?;
    let x = Var::x(0);
    let xd = MonoKey::one().with_poly(x, 1).with_deriv(0);
    let d = MonoKey::one().with_deriv(0);
    let alpha = theta_xd.coeff_of(&xd);
    let beta = theta_xd.coeff_of(&d);
    let shape_holds = !alpha.is_zero() && theta_xd.terms().iter().all(|m| m.key == xd || m.key == d);
    Ok(AutomorphismVerdict {
        relation_holds: relation_residual.is_zero(),
        shape_holds,
        alpha: shape_holds.then(|| alpha.clone()),
        beta: shape_holds.then(|| beta.clone()),
        relation_residual,
    })
}

/// `true` when `key` is `x_i y_i` for some `i` (the basis-relative
/// ad-diagonal monomials of the polynomial Poisson algebra).
pub fn is_diagonal_pair(key: &MonoKey, sig: &AlgebraSignature) -> bool {
    key.exp.is_empty()
        && key.poly.len() == 2
        && (0..sig.n()).any(|i| key.poly.get(Var::x(i)) == 1 && key.poly.get(Var::y(i)) == 1)
}
