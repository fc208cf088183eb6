//! Grade keys, homogeneous decomposition, the two lexicographic monomial
//! orders and the element statistics `w_h`, `T`, `hp`, `lp`, `h_h`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::monomial::{MonoKey, Monomial};
use crate::signature::{AlgebraSignature, BracketKind};

/// Exponential multi-index of a homogeneous component.
///
/// Coordinates follow variable order then ascending allowed power, with the
/// x-block before the y-block for Poisson families. Derived `Ord` is the
/// natural lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradeKey(pub Vec<i64>);

impl GradeKey {
    pub fn zero(len: usize) -> Self {
        GradeKey(vec![0; len])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self, other: &GradeKey) -> GradeKey {
        GradeKey(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Sign in the lexicographic order.
    pub fn signum(&self) -> Ordering {
        self.0
            .iter()
            .find(|&&a| a != 0)
            .map(|a| a.cmp(&0))
            .unwrap_or(Ordering::Equal)
    }

    /// Index of the first nonzero coordinate.
    pub fn leading_position(&self) -> Option<usize> {
        self.0.iter().position(|&a| a != 0)
    }
}

impl fmt::Display for GradeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Grade key of a monomial key; polynomial powers and `∂_t` are ignored.
pub fn grade_key_of(key: &MonoKey, sig: &AlgebraSignature) -> Result<GradeKey> {
    let slots = sig.grade_slots();
    for (slot, _) in key.exp.iter() {
        if !sig.allows_slot(slot) {
            return Err(Error::SignatureViolation(format!(
                "exponential factor at {} is not allowed in {}",
                slot, sig
            )));
        }
    }
    Ok(GradeKey(slots.iter().map(|&s| key.exp.get(s)).collect()))
}

pub fn grade_key(m: &Monomial, sig: &AlgebraSignature) -> Result<GradeKey> {
    grade_key_of(&m.key, sig)
}

/// Split `l` into homogeneous components; the parts sum to `l`.
pub fn decompose(l: &Element) -> BTreeMap<GradeKey, Element> {
    let sig = l.sig_arc().clone();
    let mut parts: BTreeMap<GradeKey, Vec<Monomial>> = BTreeMap::new();
    for m in l.terms() {
        let g = grade_key_of(&m.key, &sig).expect("element terms are validated");
        parts.entry(g).or_default().push(m.clone());
    }
    parts
        .into_iter()
        .map(|(g, terms)| (g, Element::from_sorted_unchecked(sig.clone(), terms)))
        .collect()
}

fn compare_in(kind: BracketKind, m1: &Monomial, m2: &Monomial, sig: &AlgebraSignature) -> Result<Ordering> {
    if sig.kind() != kind {
        let wanted = match kind {
            BracketKind::Witt => "a Witt-type algebra",
            BracketKind::Poisson => "a Poisson-type algebra",
        };
        return Err(Error::mismatch(sig, wanted));
    }
    m1.key.validate(sig)?;
    m2.key.validate(sig)?;
    Ok(m1.key.cmp(&m2.key))
}

/// `>_o`: compare `(a_11,…,a_nr, j_1,…,j_n, t)` lexicographically.
pub fn compare_o(m1: &Monomial, m2: &Monomial, sig: &AlgebraSignature) -> Result<Ordering> {
    compare_in(BracketKind::Witt, m1, m2, sig)
}

/// `>_h`: compare `(a_1,…,a_n, b_1,…,b_n, i_1,…,i_n, j_1,…,j_n)` lexicographically.
pub fn compare_h(m1: &Monomial, m2: &Monomial, sig: &AlgebraSignature) -> Result<Ordering> {
    compare_in(BracketKind::Poisson, m1, m2, sig)
}

/// Number of distinct homogeneous components.
pub fn stat_wh(l: &Element) -> usize {
    decompose(l).len()
}

/// Number of terms in the `g`-component.
pub fn stat_t(l: &Element, g: &GradeKey) -> usize {
    decompose(l).get(g).map_or(0, Element::len)
}

/// Highest polynomial power that appears; a term without polynomial factors
/// contributes 0.
fn highest_power(l: &Element) -> Result<i64> {
    l.terms()
        .iter()
        .map(|m| m.key.poly.max_value().unwrap_or(0))
        .max()
        .ok_or(Error::EmptyElement)
}

/// `hp(l)` for Witt-type elements.
pub fn stat_hp(l: &Element) -> Result<i64> {
    highest_power(l)
}

/// `lp(l)` for Poisson-type elements.
pub fn stat_lp(l: &Element) -> Result<i64> {
    highest_power(l)
}

/// `h_h(l)`: the number of distinct grade keys of a Poisson-type element.
pub fn stat_hh(l: &Element) -> Result<usize> {
    if !l.sig().is_poisson() {
        return Err(Error::mismatch(l.sig(), "a Poisson-type algebra"));
    }
    Ok(stat_wh(l))
}

/// Lexicographically largest grade key present.
pub fn max_grade(l: &Element) -> Option<GradeKey> {
    decompose(l).into_keys().next_back()
}

pub fn min_grade(l: &Element) -> Option<GradeKey> {
    decompose(l).into_keys().next()
}

pub fn is_homogeneous(l: &Element) -> bool {
    stat_wh(l) <= 1
}
