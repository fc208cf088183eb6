//! Finite truncation windows of the infinite monomial bases.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::MonoKey;
use crate::signature::{AlgebraSignature, ExpSlot, Family, PolyDomain, Var};

/// Default bound on the number of basis monomials in a window.
pub const DEFAULT_MAX_WINDOW: usize = 4096;

/// A box of basis monomials: every polynomial power in
/// `min_poly..=max_poly`, every exponential coefficient in `-max_exp..=max_exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationCaps {
    pub max_poly: i64,
    pub min_poly: i64,
    pub max_exp: i64,
    /// Largest window that operations agree to enumerate.
    pub max_window: usize,
}

impl TruncationCaps {
    /// Caps `P` and `A` with the lower polynomial bound implied by `sig`.
    pub fn for_signature(sig: &AlgebraSignature, max_poly: u32, max_exp: u32) -> Self {
        let p = max_poly as i64;
        let (min_poly, max_poly) = match (sig.family(), sig.poly_domain()) {
            (Family::PoissonExpOnly, _) => (0, 0),
            (_, PolyDomain::Naturals) => (0, p),
            (_, PolyDomain::Integers) => (-p, p),
        };
        let max_exp = if sig.grade_len() == 0 { 0 } else { max_exp as i64 };
        TruncationCaps {
            max_poly,
            min_poly,
            max_exp,
            max_window: DEFAULT_MAX_WINDOW,
        }
    }

    pub fn with_max_window(mut self, max_window: usize) -> Self {
        self.max_window = max_window;
        self
    }

    /// The same box grown by `poly` in each polynomial direction that is
    /// open for `sig` and by `exp` in each exponential direction.
    pub fn enlarged(&self, sig: &AlgebraSignature, poly: u32, exp: u32) -> Self {
        let grown = Self::for_signature(
            sig,
            (self.max_poly + poly as i64) as u32,
            (self.max_exp + exp as i64) as u32,
        );
        TruncationCaps {
            max_window: self.max_window,
            ..grown
        }
    }

    fn poly_range_len(&self) -> usize {
        (self.max_poly - self.min_poly + 1).max(0) as usize
    }

    /// Number of monomials in the window, saturating on overflow.
    pub fn window_size(&self, sig: &AlgebraSignature) -> usize {
        let exp_choices = (2 * self.max_exp + 1) as usize;
        let mut size: usize = 1;
        for _ in 0..sig.grade_len() {
            size = size.saturating_mul(exp_choices);
        }
        for _ in sig.variables() {
            size = size.saturating_mul(self.poly_range_len());
        }
        if sig.carries_derivations() {
            size = size.saturating_mul(sig.n());
        }
        if sig.is_quotient() {
            size = size.saturating_sub(1);
        }
        size
    }

    /// Whether `key` is a basis monomial of `sig` inside the window.
    pub fn contains(&self, sig: &AlgebraSignature, key: &MonoKey) -> bool {
        if sig.is_quotient() && key.is_constant() {
            return false;
        }
        key.exp.iter().all(|(_, a)| a.abs() <= self.max_exp)
            && key
                .poly
                .iter()
                .all(|(_, p)| (self.min_poly..=self.max_poly).contains(&p))
            && key.validate(sig).is_ok()
    }

    /// All window monomials in descending monomial order.
    pub fn enumerate(&self, sig: &AlgebraSignature) -> Result<Vec<MonoKey>> {
        let size = self.window_size(sig);
        if size > self.max_window {
            return Err(Error::CapTooLarge {
                size,
                limit: self.max_window,
            });
        }
        let slots: Vec<ExpSlot> = sig.grade_slots();
        let vars: Vec<Var> = sig.variables();
        let mut keys = vec![MonoKey::one()];
        for &slot in &slots {
            keys = keys
                .into_iter()
                .flat_map(|k| {
                    (-self.max_exp..=self.max_exp).map(move |a| {
                        let mut k = k.clone();
                        k.exp.add(slot, a);
                        k
                    })
                })
                .collect();
        }
        for &var in &vars {
            keys = keys
                .into_iter()
                .flat_map(|k| {
                    (self.min_poly..=self.max_poly).map(move |p| {
                        let mut k = k.clone();
                        k.poly.add(var, p);
                        k
                    })
                })
                .collect();
        }
        if sig.carries_derivations() {
            keys = keys
                .into_iter()
                .flat_map(|k| (0..sig.n()).map(move |t| k.clone().with_deriv(t)))
                .collect();
        }
        if sig.is_quotient() {
            keys.retain(|k| !k.is_constant());
        }
        keys.sort_unstable_by(|a, b| b.cmp(a));
        Ok(keys)
    }
}

impl fmt::Display for TruncationCaps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "poly {}..={}, exp |a| <= {}",
            self.min_poly, self.max_poly, self.max_exp
        )
    }
}
