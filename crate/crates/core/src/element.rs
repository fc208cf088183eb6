//! Canonical sparse elements: sums of monomials over exact rationals.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{MonoKey, Monomial};
use crate::signature::{AlgebraSignature, Var};
use crate::Rational;

/// A finite linear combination of basis monomials in canonical form.
///
/// Terms have distinct keys, nonzero coefficients and are sorted in
/// descending monomial order, so the first term is the leading one. In a
/// quotient signature the constant term is dropped on normalization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    sig: Arc<AlgebraSignature>,
    terms: Vec<Monomial>,
}

/// Scratch space for building an element term by term.
#[derive(Debug, Default)]
pub(crate) struct Accumulator {
    map: HashMap<MonoKey, Rational>,
}

impl Accumulator {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add(&mut self, key: MonoKey, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.map.entry(key) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub(crate) fn merge(&mut self, other: Accumulator) {
        for (k, c) in other.map {
            self.add(k, c);
        }
    }

    pub(crate) fn finish(self, sig: Arc<AlgebraSignature>) -> Element {
        let quotient = sig.is_quotient();
        let mut terms: Vec<Monomial> = self
            .map
            .into_iter()
            .filter(|(k, c)| !c.is_zero() && !(quotient && k.is_constant()))
            .map(|(key, coeff)| Monomial { coeff, key })
            .collect();
        terms.sort_unstable_by(|a, b| b.key.cmp(&a.key));
        Element { sig, terms }
    }
}

impl Element {
    pub fn zero(sig: Arc<AlgebraSignature>) -> Self {
        Element {
            sig,
            terms: Vec::new(),
        }
    }

    /// Merge like terms, drop zeros and sort into canonical order.
    pub fn normalize(raw: Vec<Monomial>, sig: Arc<AlgebraSignature>) -> Result<Self> {
        let mut acc = Accumulator::new();
        for m in raw {
            m.key.validate(&sig)?;
            acc.add(m.key, m.coeff);
        }
        Ok(acc.finish(sig))
    }

    pub fn from_monomial(sig: Arc<AlgebraSignature>, m: Monomial) -> Result<Self> {
        Self::normalize(vec![m], sig)
    }

    /// The basis monomial `key` with coefficient one.
    pub fn basis(sig: Arc<AlgebraSignature>, key: MonoKey) -> Result<Self> {
        Self::from_monomial(sig, Monomial::unit(key))
    }

    /// A scalar multiple of the identity monomial (Poisson families only).
    pub fn constant(sig: Arc<AlgebraSignature>, c: Rational) -> Result<Self> {
        Self::from_monomial(sig, Monomial::new(c, MonoKey::one()))
    }

    pub(crate) fn from_sorted_unchecked(sig: Arc<AlgebraSignature>, terms: Vec<Monomial>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].key > w[1].key));
        Element { sig, terms }
    }

    pub fn sig(&self) -> &AlgebraSignature {
        &self.sig
    }

    pub fn sig_arc(&self) -> &Arc<AlgebraSignature> {
        &self.sig
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximal term in the monomial order.
    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.first()
    }

    pub fn coeff_of(&self, key: &MonoKey) -> Rational {
        match self.terms.binary_search_by(|m| key.cmp(&m.key)) {
            Ok(i) => self.terms[i].coeff.clone(),
            Err(_) => Rational::zero(),
        }
    }

    fn ensure_same(&self, other: &Element) -> Result<()> {
        if Arc::ptr_eq(&self.sig, &other.sig) {
            return Ok(());
        }
        self.sig.ensure_same(&other.sig)
    }

    pub(crate) fn accumulate_into(&self, acc: &mut Accumulator, factor: &Rational) {
        for m in &self.terms {
            acc.add(m.key.clone(), &m.coeff * factor);
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.ensure_same(other)?;
        Ok(self.merge_linear(other, &Rational::one()))
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.ensure_same(other)?;
        Ok(self.merge_linear(other, &-Rational::one()))
    }

    /// `self + factor·other` by a sorted merge.
    fn merge_linear(&self, other: &Element, factor: &Rational) -> Element {
        use std::cmp::Ordering;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => b.key.cmp(&a.key),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let m = &other.terms[j];
                    out.push(Monomial::new(&m.coeff * factor, m.key.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].coeff + &other.terms[j].coeff * factor;
                    if !c.is_zero() {
                        out.push(Monomial::new(c, self.terms[i].key.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Element {
            sig: self.sig.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero(self.sig.clone());
        }
        Element {
            sig: self.sig.clone(),
            terms: self
                .terms
                .iter()
                .map(|m| Monomial::new(&m.coeff * c, m.key.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Element {
        self.scale(&-Rational::one())
    }

    /// Equality of canonical forms; errors if the signatures differ.
    pub fn equal(&self, other: &Element) -> Result<bool> {
        self.ensure_same(other)?;
        Ok(self.terms == other.terms)
    }

    /// Termwise `∂/∂var`, derivation slots kept.
    pub fn partial(&self, var: Var) -> Result<Element> {
        if !self.sig.has_variable(var) {
            return Err(Error::SignatureViolation(format!(
                "variable {} does not exist in {}",
                var, self.sig
            )));
        }
        let mut acc = Accumulator::new();
        for m in &self.terms {
            for (k, key) in m.key.partial(var) {
                acc.add(key, &m.coeff * Rational::from_integer(k.into()));
            }
        }
        Ok(acc.finish(self.sig.clone()))
    }

    /// Same terms under another signature, revalidated.
    pub fn with_signature(&self, sig: Arc<AlgebraSignature>) -> Result<Element> {
        Element::normalize(self.terms.clone(), sig)
    }

    /// Keep the terms satisfying `pred`; canonical order is preserved.
    pub fn filter_terms(&self, mut pred: impl FnMut(&Monomial) -> bool) -> Element {
        Element {
            sig: self.sig.clone(),
            terms: self.terms.iter().filter(|m| pred(m)).cloned().collect(),
        }
    }
}

/// `∂/∂var` of a single monomial as an element of `sig`.
pub fn partial(var: Var, m: &Monomial, sig: Arc<AlgebraSignature>) -> Result<Element> {
    let e = Element::from_monomial(sig, m.clone())?;
    e.partial(var)
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::print_element(self))
    }
}
