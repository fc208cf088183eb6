//! Generating every basis monomial of `W(n, i*)` from the ideal that
//! contains the operators `∂_t`.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::bracket::bracket;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::monomial::{MonoKey, Monomial};
use crate::signature::{AlgebraSignature, Var};
use crate::Rational;

/// Which bracket pattern produced the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma2Pattern {
    /// The target is `∂_t` itself.
    Seed,
    /// `x_t` does not occur: `[∂_t, x_t T] = T`.
    Lift,
    /// `j_t = 0` and `x_t` occurs in an exponential:
    /// `[∂_t, x_t T] − [x_t ∂_t, T] = 2T`.
    ZeroPower,
    /// `j_t > 0`: `[∂_t, x_t T] − [x_t^{j_t+1} ∂_t, x_t^{-j_t} T] = 2(j_t+1) T`.
    PositivePower,
}

/// A linear combination of brackets claimed to equal `multiple · target`.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma2Trace {
    pub target: Element,
    pub pattern: Lemma2Pattern,
    /// `(c, a, b)` contributing `c·[a, b]`.
    pub combination: Vec<(Rational, Element, Element)>,
    pub multiple: Rational,
}

impl Lemma2Trace {
    pub fn evaluate(&self) -> Result<Element> {
        let mut out = Element::zero(self.target.sig_arc().clone());
        for (c, a, b) in &self.combination {
            out = out.add(&bracket(a, b)?.scale(c))?;
        }
        Ok(out)
    }

    /// Exact check that the combination reproduces `multiple · target`.
    pub fn verify(&self) -> Result<()> {
        if self.pattern == Lemma2Pattern::Seed {
            return Ok(());
        }
        let got = self.evaluate()?;
        let want = self.target.scale(&self.multiple);
        if got == want && !self.multiple.is_zero() {
            Ok(())
        } else {
            Err(Error::TraceInvalid(format!(
                "combination evaluates to {} instead of {}",
                got, want
            )))
        }
    }
}

fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

/// Build and verify the bracket combination that yields `target`.
pub fn lemma2_generate(target: &MonoKey, sig: &Arc<AlgebraSignature>) -> Result<Lemma2Trace> {
    if !sig.is_witt() {
        return Err(Error::mismatch(sig, "a Witt-type algebra"));
    }
    target.validate(sig)?;
    let t = target.deriv.expect("validated Witt keys carry a slot") as usize;
    let x = Var::x(t);
    let el = |key: MonoKey| Element::from_monomial(sig.clone(), Monomial::unit(key));
    let d_t = el(MonoKey::one().with_deriv(t))?;
    let target_el = el(target.clone())?;
    let j = target.poly.get(x);
    let lifted = el(target.clone().with_poly(x, 1))?;
    let (pattern, combination, multiple) = if target.exp.is_empty() && target.poly.is_empty() {
        (Lemma2Pattern::Seed, Vec::new(), Rational::one())
    } else if !target.involves(x) {
        (
            Lemma2Pattern::Lift,
            vec![(Rational::one(), d_t, lifted)],
            Rational::one(),
        )
    } else if j == 0 {
        let x_dt = el(MonoKey::one().with_poly(x, 1).with_deriv(t))?;
        (
            Lemma2Pattern::ZeroPower,
            vec![
                (Rational::one(), d_t, lifted),
                (-Rational::one(), x_dt, target_el.clone()),
            ],
            int(2),
        )
    } else {
        let high = el(MonoKey::one().with_poly(x, j + 1).with_deriv(t))?;
        let lowered = el(target.clone().with_poly(x, -j))?;
        (
            Lemma2Pattern::PositivePower,
            vec![(Rational::one(), d_t, lifted), (-Rational::one(), high, lowered)],
            int(2 * (j + 1)),
        )
    };
    let trace = Lemma2Trace {
        target: target_el,
        pattern,
        combination,
        multiple,
    };
    trace.verify()?;
    Ok(trace)
}
