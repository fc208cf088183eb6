//! Linear functionals that vanish on every bracket of a Laurent-type
//! Poisson algebra, and the coverage bound they impose on any ideal.
//!
//! A Poisson bracket is a sum of total derivatives,
//! `{F,G} = Σ ∂_{x_i}(F ∂_{y_i}G) − ∂_{y_i}(F ∂_{x_i}G)`. On the exponential
//! class `e^{Σ c_v v}` the derivative `∂_v` acts on the Laurent factor as
//! `c_v + ∂_v`. The one-variable functional `φ_c` below kills the image of
//! `c + ∂` on `F[v, v^{-1}]`, so the product functional over all variables
//! kills every bracket landing in that class.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::Result;
use crate::grading::{grade_key_of, GradeKey};
use crate::monomial::MonoKey;
use crate::signature::{AlgebraSignature, PolyDomain};
use crate::window::TruncationCaps;
use crate::Rational;

/// `φ_c(v^k)`: for `c = 0` the residue `[k = −1]`; for `c ≠ 0` zero on
/// `k ≥ 0`, one at `k = −1`, and `φ_c(v^{−k−1}) = (c/k) φ_c(v^{−k})`.
pub fn residue(c: i64, k: i64) -> Rational {
    if k >= 0 {
        return Rational::zero();
    }
    if c == 0 {
        return if k == -1 {
            Rational::one()
        } else {
            Rational::zero()
        };
    }
    let c = Rational::from_integer(c.into());
    let mut v = Rational::one();
    for j in 1..-k {
        v = v * &c / Rational::from_integer(j.into());
    }
    v
}

/// Whether the obstruction applies: Poisson bracket, Laurent polynomial
/// parts, and only linear exponentials.
pub fn has_obstructions(sig: &AlgebraSignature) -> bool {
    sig.is_poisson()
        && sig.poly_domain() == PolyDomain::Integers
        && sig.grade_slots().iter().all(|s| s.power == 1)
}

/// Value of the functional of `key`'s own exponential class on `key`.
pub fn class_functional(key: &MonoKey, sig: &AlgebraSignature) -> Rational {
    let exp_of = |v| {
        key.exp
            .iter()
            .find(|(s, _)| s.var == v && s.power == 1)
            .map_or(0, |(_, a)| a)
    };
    sig.variables()
        .into_iter()
        .map(|v| residue(exp_of(v), key.poly.get(v)))
        .fold(Rational::one(), |acc, r| acc * r)
}

/// The functional values of `l`, one entry per exponential class that has a
/// nonzero value.
pub fn functional_vector(l: &Element) -> BTreeMap<GradeKey, Rational> {
    let sig = l.sig();
    let mut out: BTreeMap<GradeKey, Rational> = BTreeMap::new();
    if !has_obstructions(sig) {
        return out;
    }
    for m in l.terms() {
        let g = grade_key_of(&m.key, sig).expect("element terms are valid");
        *out.entry(g).or_insert_with(Rational::zero) += class_functional(&m.key, sig) * &m.coeff;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Whether every bracket avoids the obstruction: all functionals vanish.
pub fn annihilated(l: &Element) -> bool {
    functional_vector(l).is_empty()
}

/// Window monomials that no ideal generated by `seed` can contain.
///
/// The ideal lies in `F·seed + [L, L]`, so `m` can only be reached when its
/// functional vector is a multiple of the seed's.
pub fn unreachable_keys(seed: &Element, caps: &TruncationCaps) -> Result<Vec<MonoKey>> {
    let sig = seed.sig_arc().clone();
    let keys = caps.enumerate(&sig)?;
    if !has_obstructions(&sig) {
        return Ok(Vec::new());
    }
    let target = functional_vector(seed);
    Ok(keys
        .into_iter()
        .filter(|k| {
            let phi = class_functional(k, &sig);
            if phi.is_zero() {
                return false;
            }
            let g = grade_key_of(k, &sig).expect("window keys are valid");
            !(target.len() == 1 && target.contains_key(&g))
        })
        .collect())
}

/// Largest coverage any closure run from `seed` can certify.
pub fn coverage_bound(seed: &Element, caps: &TruncationCaps) -> Result<Rational> {
    let size = caps.window_size(seed.sig());
    if size == 0 {
        return Ok(Rational::one());
    }
    let blocked = unreachable_keys(seed, caps)?.len();
    Ok(Rational::new(
        ((size - blocked) as i64).into(),
        (size as i64).into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::bracket;
    use crate::random::{rng, Sampler};
    use crate::text::parse_element;
    use std::sync::Arc;

    #[test]
    fn residues() {
        assert_eq!(residue(0, -1), Rational::one());
        assert!(residue(0, -2).is_zero());
        assert!(residue(3, 0).is_zero());
        // (3 + ∂)v^{-1} = 3v^{-1} − v^{-2}, so φ_3(v^{-2}) = 3.
        assert_eq!(residue(3, -2), Rational::from_integer(3.into()));
        assert_eq!(residue(3, -3), Rational::new(9.into(), 2.into()));
    }

    #[test]
    fn brackets_are_annihilated() {
        let sig: Arc<AlgebraSignature> = Arc::new("H(1,1)".parse().unwrap());
        let caps = TruncationCaps::for_signature(&sig, 2, 1);
        let sampler = Sampler::new(caps);
        let mut r = rng(11);
        for _ in 0..200 {
            let a = sampler.element(&sig, &mut r);
            let b = sampler.element(&sig, &mut r);
            assert!(annihilated(&bracket(&a, &b).unwrap()));
        }
    }

    #[test]
    fn residue_monomial_is_not_a_bracket_value() {
        let sig: Arc<AlgebraSignature> = Arc::new("H(1,1)".parse().unwrap());
        let m = parse_element("x1^-1*y1^-1", sig).unwrap();
        assert!(!annihilated(&m));
    }

    #[test]
    fn bound_counts_blocked_monomials() {
        let sig: Arc<AlgebraSignature> = Arc::new("Hbar(1,1)".parse().unwrap());
        let caps = TruncationCaps::for_signature(&sig, 2, 1);
        let seed = parse_element("e^{1*x1}*y1", sig.clone()).unwrap();
        // One blocked monomial in class 0, two in each of the four classes
        // with one zero coefficient, four in each of the other four.
        assert_eq!(unreachable_keys(&seed, &caps).unwrap().len(), 25);
        assert_eq!(
            coverage_bound(&seed, &caps).unwrap(),
            Rational::new(199.into(), 224.into())
        );
        let h0: Arc<AlgebraSignature> = Arc::new("Hbar(1,0)".parse().unwrap());
        let seed = parse_element("e^{1*x1}", h0.clone()).unwrap();
        let caps = TruncationCaps::for_signature(&h0, 0, 2);
        assert_eq!(coverage_bound(&seed, &caps).unwrap(), Rational::one());
    }
}
