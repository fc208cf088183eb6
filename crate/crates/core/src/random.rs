//! Seeded sampling of monomials and elements inside a truncation window.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::element::Element;
use crate::grading::GradeKey;
use crate::monomial::{MonoKey, Monomial};
use crate::signature::AlgebraSignature;
use crate::window::TruncationCaps;
use crate::Rational;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of sampled elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sampler {
    pub caps: TruncationCaps,
    pub max_terms: usize,
    pub coeff_bound: i64,
}

impl Sampler {
    /// At most four terms with coefficients in `-3..=3`.
    pub fn new(caps: TruncationCaps) -> Self {
        Sampler {
            caps,
            max_terms: 4,
            coeff_bound: 3,
        }
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms.max(1);
        self
    }

    fn poly_part<R: Rng>(&self, sig: &AlgebraSignature, rng: &mut R, key: &mut MonoKey) {
        for var in sig.variables() {
            key.poly
                .add(var, rng.gen_range(self.caps.min_poly..=self.caps.max_poly));
        }
        if sig.carries_derivations() {
            key.deriv = Some(rng.gen_range(0..sig.n()) as u16);
        }
    }

    /// A window monomial key with the given grade, or `None` when the
    /// quotient leaves no monomial of that grade.
    pub fn key_in_grade<R: Rng>(
        &self,
        sig: &AlgebraSignature,
        grade: &GradeKey,
        rng: &mut R,
    ) -> Option<MonoKey> {
        let only_constant =
            grade.is_zero() && (self.caps.max_poly == self.caps.min_poly || sig.variables().is_empty());
        if sig.is_quotient() && only_constant {
            return None;
        }
        loop {
            let mut key = MonoKey::one();
            for (slot, &a) in sig.grade_slots().iter().zip(&grade.0) {
                key.exp.add(*slot, a);
            }
            self.poly_part(sig, rng, &mut key);
            if !(sig.is_quotient() && key.is_constant()) {
                return Some(key);
            }
        }
    }

    /// A grade key with every coordinate in `-A..=A`.
    pub fn grade<R: Rng>(&self, sig: &AlgebraSignature, rng: &mut R) -> GradeKey {
        GradeKey(
            (0..sig.grade_len())
                .map(|_| rng.gen_range(-self.caps.max_exp..=self.caps.max_exp))
                .collect(),
        )
    }

    /// A uniformly drawn window monomial key.
    pub fn key<R: Rng>(&self, sig: &AlgebraSignature, rng: &mut R) -> MonoKey {
        loop {
            let g = self.grade(sig, rng);
            if let Some(key) = self.key_in_grade(sig, &g, rng) {
                return key;
            }
        }
    }

    pub fn coeff<R: Rng>(&self, rng: &mut R) -> Rational {
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-self.coeff_bound..=self.coeff_bound);
        }
        Rational::from_integer(c.into())
    }

    pub fn monomial<R: Rng>(&self, sig: &AlgebraSignature, rng: &mut R) -> Monomial {
        Monomial::new(self.coeff(rng), self.key(sig, rng))
    }

    /// A nonzero element with between one and `max_terms` terms.
    pub fn element<R: Rng>(&self, sig: &Arc<AlgebraSignature>, rng: &mut R) -> Element {
        loop {
            let count = rng.gen_range(1..=self.max_terms);
            let terms: Vec<Monomial> = (0..count).map(|_| self.monomial(sig, rng)).collect();
            let e = Element::normalize(terms, sig.clone()).expect("window keys are valid");
            if !e.is_zero() {
                return e;
            }
        }
    }

    /// A nonzero element all of whose terms have grade `grade`, or `None`
    /// when the window holds no such monomial.
    pub fn homogeneous<R: Rng>(
        &self,
        sig: &Arc<AlgebraSignature>,
        grade: &GradeKey,
        rng: &mut R,
    ) -> Option<Element> {
        loop {
            let count = rng.gen_range(1..=self.max_terms);
            let mut terms = Vec::with_capacity(count);
            for _ in 0..count {
                terms.push(Monomial::new(
                    self.coeff(rng),
                    self.key_in_grade(sig, grade, rng)?,
                ));
            }
            let e = Element::normalize(terms, sig.clone()).expect("window keys are valid");
            if !e.is_zero() {
                return Some(e);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::decompose;

    #[test]
    fn deterministic_and_in_window() {
        let sig: Arc<AlgebraSignature> = Arc::new("Hbar(1,1)".parse().unwrap());
        let caps = TruncationCaps::for_signature(&sig, 2, 1);
        let s = Sampler::new(caps.clone());
        let a: Vec<Element> = {
            let mut r = rng(7);
            (0..20).map(|_| s.element(&sig, &mut r)).collect()
        };
        let b: Vec<Element> = {
            let mut r = rng(7);
            (0..20).map(|_| s.element(&sig, &mut r)).collect()
        };
        assert_eq!(a, b);
        for e in &a {
            assert!(!e.is_zero() && e.len() <= 4);
            assert!(e.terms().iter().all(|m| caps.contains(&sig, &m.key)));
        }
    }

    #[test]
    fn homogeneous_samples_have_one_grade() {
        let sig: Arc<AlgebraSignature> = Arc::new("W(1; x1:[1,2])".parse().unwrap());
        let s = Sampler::new(TruncationCaps::for_signature(&sig, 3, 2));
        let mut r = rng(1);
        for _ in 0..50 {
            let g = s.grade(&sig, &mut r);
            let e = s.homogeneous(&sig, &g, &mut r).unwrap();
            let parts = decompose(&e);
            assert_eq!(parts.keys().collect::<Vec<_>>(), vec![&g]);
        }
    }
}
