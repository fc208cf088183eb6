//! Basis monomials `e^{a·x^i}…·x^j…·∂_t` and their keys.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::signature::{AlgebraSignature, ExpSlot, Var};
use crate::Rational;

/// Sorted sparse map from a coordinate to a nonzero integer.
///
/// Absent coordinates are zero, so comparing two maps lexicographically is
/// the same as comparing the dense vectors they stand for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseExponents<K>(Vec<(K, i64)>);

impl<K> Default for SparseExponents<K> {
    fn default() -> Self {
        SparseExponents(Vec::new())
    }
}

impl<K: Ord + Copy> SparseExponents<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: K) -> i64 {
        match self.0.binary_search_by(|(k, _)| k.cmp(&key)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn set(&mut self, key: K, value: i64) {
        match self.0.binary_search_by(|(k, _)| k.cmp(&key)) {
            Ok(i) if value == 0 => {
                self.0.remove(i);
            }
            Ok(i) => self.0[i].1 = value,
            Err(_) if value == 0 => {}
            Err(i) => self.0.insert(i, (key, value)),
        }
    }

    pub fn add(&mut self, key: K, delta: i64) {
        let value = self.get(key) + delta;
        self.set(key, value);
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (K, i64)> + '_ {
        self.0.iter().copied()
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let pick = match (self.0.get(i), other.0.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match pick {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let v = self.0[i].1 + other.0[j].1;
                    if v != 0 {
                        out.push((self.0[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SparseExponents(out)
    }

    pub fn negated(&self) -> Self {
        SparseExponents(self.0.iter().map(|&(k, v)| (k, -v)).collect())
    }

    /// Lexicographic comparison of the dense vectors.
    pub fn cmp_dense(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            let (a, b) = match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(ka, va)), Some(&(kb, vb))) => match ka.cmp(&kb) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, vb)
                    }
                    Ordering::Less => {
                        i += 1;
                        (va, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (0, vb)
                    }
                },
                (Some(&(_, va)), None) => {
                    i += 1;
                    (va, 0)
                }
                (None, Some(&(_, vb))) => {
                    j += 1;
                    (0, vb)
                }
            };
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
    }

    pub fn max_value(&self) -> Option<i64> {
        self.0.iter().map(|&(_, v)| v).max()
    }
}

impl<K: Ord + Copy> FromIterator<(K, i64)> for SparseExponents<K> {
    fn from_iter<I: IntoIterator<Item = (K, i64)>>(iter: I) -> Self {
        let mut out = SparseExponents::new();
        for (k, v) in iter {
            out.add(k, v);
        }
        out
    }
}

/// Everything about a basis monomial except its coefficient.
///
/// The derived order compares exponential coefficients, then polynomial
/// powers, then the derivation index, each block lexicographically. This is
/// the monomial order used for Witt-type and Poisson-type algebras alike.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonoKey {
    pub exp: SparseExponents<ExpSlot>,
    pub poly: SparseExponents<Var>,
    /// Zero-based index `t` of `∂_t`.
    pub deriv: Option<u16>,
}

impl Ord for MonoKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exp
            .cmp_dense(&other.exp)
            .then_with(|| self.poly.cmp_dense(&other.poly))
            .then_with(|| self.deriv.cmp(&other.deriv))
    }
}

impl PartialOrd for MonoKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl MonoKey {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn with_exp(mut self, var: Var, power: u32, coeff: i64) -> Self {
        self.exp.add(ExpSlot { var, power }, coeff);
        self
    }

    pub fn with_poly(mut self, var: Var, power: i64) -> Self {
        self.poly.add(var, power);
        self
    }

    pub fn with_deriv(mut self, index: usize) -> Self {
        self.deriv = Some(index as u16);
        self
    }

    /// No exponential factor, no polynomial factor, no derivation slot.
    pub fn is_constant(&self) -> bool {
        self.exp.is_empty() && self.poly.is_empty() && self.deriv.is_none()
    }

    pub fn is_exponential_free(&self) -> bool {
        self.exp.is_empty()
    }

    pub fn function_part(&self) -> MonoKey {
        MonoKey {
            deriv: None,
            ..self.clone()
        }
    }

    /// Product of the function parts; the result has no derivation slot.
    pub fn mul_fn(&self, other: &MonoKey) -> MonoKey {
        MonoKey {
            exp: self.exp.sum(&other.exp),
            poly: self.poly.sum(&other.poly),
            deriv: None,
        }
    }

    /// Whether `var` occurs through an exponential factor or a nonzero power.
    pub fn involves(&self, var: Var) -> bool {
        self.poly.get(var) != 0 || self.exp.iter().any(|(slot, _)| slot.var == var)
    }

    /// `∂/∂var` by the product rule on `e^{a x^i}·x^j`, derivation slot kept.
    ///
    /// Each exponential factor contributes `a·i·x^{j+i-1}` and the polynomial
    /// factor contributes `j·x^{j-1}`.
    pub fn partial(&self, var: Var) -> Vec<(i64, MonoKey)> {
        let mut out = Vec::new();
        for (slot, a) in self.exp.iter() {
            if slot.var != var {
                continue;
            }
            let mut key = self.clone();
            key.poly.add(var, slot.power as i64 - 1);
            out.push((a * slot.power as i64, key));
        }
        let j = self.poly.get(var);
        if j != 0 {
            let mut key = self.clone();
            key.poly.add(var, -1);
            out.push((j, key));
        }
        out
    }

    pub fn validate(&self, sig: &AlgebraSignature) -> Result<()> {
        for (slot, _) in self.exp.iter() {
            if !sig.allows_slot(slot) {
                return Err(Error::SignatureViolation(format!(
                    "exponential factor e^(a*{}) is not allowed in {}",
                    slot, sig
                )));
            }
        }
        for (var, p) in self.poly.iter() {
            if !sig.has_variable(var) {
                return Err(Error::SignatureViolation(format!(
                    "variable {} does not exist in {}",
                    var, sig
                )));
            }
            if !sig.allows_poly_power(p) {
                return Err(Error::SignatureViolation(format!(
                    "power {}^{} lies outside the polynomial domain of {}",
                    var, p, sig
                )));
            }
        }
        match (self.deriv, sig.carries_derivations()) {
            (Some(t), true) if (t as usize) < sig.n() => Ok(()),
            (Some(t), true) => Err(Error::SignatureViolation(format!(
                "derivation D{} does not exist in {}",
                t + 1,
                sig
            ))),
            (None, true) => Err(Error::MissingDerivationSlot(self.to_string())),
            (Some(t), false) => Err(Error::SignatureViolation(format!(
                "{} carries no derivations but the term has D{}",
                sig,
                t + 1
            ))),
            (None, false) => Ok(()),
        }
    }
}

impl fmt::Display for MonoKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<String> = Vec::new();
        for (slot, a) in self.exp.iter() {
            if slot.power == 1 {
                factors.push(format!("e^{{{}*{}}}", a, slot.var));
            } else {
                factors.push(format!("e^{{{}*{}^{}}}", a, slot.var, slot.power));
            }
        }
        for (var, p) in self.poly.iter() {
            if p == 1 {
                factors.push(var.to_string());
            } else {
                factors.push(format!("{}^{}", var, p));
            }
        }
        let body = factors.join("*");
        match (body.is_empty(), self.deriv) {
            (true, None) => write!(f, "1"),
            (true, Some(t)) => write!(f, "D{}", t + 1),
            (false, None) => write!(f, "{}", body),
            (false, Some(t)) => write!(f, "{} D{}", body, t + 1),
        }
    }
}

/// A single term: nonzero rational coefficient times a basis monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: Rational,
    pub key: MonoKey,
}

impl Monomial {
    pub fn new(coeff: Rational, key: MonoKey) -> Self {
        Monomial { coeff, key }
    }

    pub fn unit(key: MonoKey) -> Self {
        Monomial {
            coeff: Rational::one(),
            key,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}
