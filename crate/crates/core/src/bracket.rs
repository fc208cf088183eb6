//! Lie brackets: the Witt bracket of vector fields, the Poisson bracket,
//! Hamiltonian vector fields and divergence.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::element::{Accumulator, Element};
use crate::error::{Error, Result};
use crate::monomial::{MonoKey, Monomial};
use crate::signature::{AlgebraSignature, BracketKind, Family, Var};
use crate::Rational;

/// Term-pair products above this count are expanded in parallel.
const PARALLEL_PAIRS: usize = 4096;

fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn same_signature(a: &Element, b: &Element) -> Result<()> {
    if Arc::ptr_eq(a.sig_arc(), b.sig_arc()) || a.sig() == b.sig() {
        Ok(())
    } else {
        Err(Error::mismatch(a.sig(), b.sig()))
    }
}

fn expand<F>(a: &Element, b: &Element, pair: F) -> Element
where
    F: Fn(&Monomial, &Monomial, &mut Accumulator) + Sync,
{
    let run = |m: &Monomial| {
        let mut acc = Accumulator::new();
        for n in b.terms() {
            pair(m, n, &mut acc);
        }
        acc
    };
    let acc = if a.len() * b.len() >= PARALLEL_PAIRS {
        a.terms()
            .par_iter()
            .map(run)
            .reduce(Accumulator::new, |mut x, y| {
                x.merge(y);
                x
            })
    } else {
        let mut acc = Accumulator::new();
        for m in a.terms() {
            acc.merge(run(m));
        }
        acc
    };
    acc.finish(a.sig_arc().clone())
}

/// `[f ∂_p, g ∂_q] = f ∂_p(g) ∂_q − g ∂_q(f) ∂_p`, extended bilinearly.
pub fn witt_bracket(a: &Element, b: &Element) -> Result<Element> {
    same_signature(a, b)?;
    if a.sig().kind() != BracketKind::Witt {
        return Err(Error::mismatch(a.sig(), "a Witt-type algebra"));
    }
    for m in a.terms().iter().chain(b.terms()) {
        if m.key.deriv.is_none() {
            return Err(Error::MissingDerivationSlot(m.key.to_string()));
        }
    }
    Ok(expand(a, b, witt_pair))
}

fn witt_pair(m: &Monomial, n: &Monomial, acc: &mut Accumulator) {
    let p = m.key.deriv.expect("checked") as usize;
    let q = n.key.deriv.expect("checked") as usize;
    let c = &m.coeff * &n.coeff;
    let f = m.key.function_part();
    let g = n.key.function_part();
    for (k, dg) in g.partial(Var::x(p)) {
        let mut key = f.mul_fn(&dg);
        key.deriv = Some(q as u16);
        acc.add(key, &c * int(k));
    }
    for (k, df) in f.partial(Var::x(q)) {
        let mut key = g.mul_fn(&df);
        key.deriv = Some(p as u16);
        acc.add(key, -(&c * int(k)));
    }
}

/// `{f, g} = Σ_i (∂f/∂x_i ∂g/∂y_i − ∂f/∂y_i ∂g/∂x_i)`, extended bilinearly.
///
/// Constant terms are kept unless the signature is a quotient.
pub fn poisson_bracket(f: &Element, g: &Element) -> Result<Element> {
    same_signature(f, g)?;
    if f.sig().kind() != BracketKind::Poisson {
        return Err(Error::mismatch(f.sig(), "a Poisson-type algebra"));
    }
    let n = f.sig().n();
    Ok(expand(f, g, |m, o, acc| poisson_pair(n, m, o, acc)))
}

fn poisson_pair(n: usize, m: &Monomial, o: &Monomial, acc: &mut Accumulator) {
    let c = &m.coeff * &o.coeff;
    for i in 0..n {
        let (x, y) = (Var::x(i), Var::y(i));
        let fx = m.key.partial(x);
        let gy = o.key.partial(y);
        for (k1, a) in &fx {
            for (k2, b) in &gy {
                acc.add(a.mul_fn(b), &c * int(k1 * k2));
            }
        }
        let fy = m.key.partial(y);
        let gx = o.key.partial(x);
        for (k1, a) in &fy {
            for (k2, b) in &gx {
                acc.add(a.mul_fn(b), -(&c * int(k1 * k2)));
            }
        }
    }
}

/// The algebra's own bracket. Quotient signatures drop constants.
pub fn bracket(a: &Element, b: &Element) -> Result<Element> {
    same_signature(a, b)?;
    match a.sig().kind() {
        BracketKind::Witt => witt_bracket(a, b),
        BracketKind::Poisson => poisson_bracket(a, b),
    }
}

/// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]`.
pub fn jacobi_residual(a: &Element, b: &Element, c: &Element) -> Result<Element> {
    let t1 = bracket(a, &bracket(b, c)?)?;
    let t2 = bracket(b, &bracket(c, a)?)?;
    let t3 = bracket(c, &bracket(a, b)?)?;
    t1.add(&t2)?.add(&t3)
}

/// `ad(x)^times (l)`, i.e. `[x,[x,…,[x,l]…]]`.
pub fn ad_power(x: &Element, l: &Element, times: usize) -> Result<Element> {
    let mut out = l.clone();
    for _ in 0..times {
        if out.is_zero() {
            break;
        }
        out = bracket(x, &out)?;
    }
    Ok(out)
}

/// Signature of `W(2n)` that hosts the Hamiltonian fields of `H(n)`.
pub fn hamiltonian_target(sig: &AlgebraSignature) -> Result<AlgebraSignature> {
    match sig.family() {
        Family::PoissonPoly => AlgebraSignature::witt(2 * sig.n()),
        _ => Err(Error::mismatch(sig, "H(n) (polynomial Poisson algebra)")),
    }
}

fn relabel_into_witt(key: &MonoKey, n: usize, deriv: usize) -> MonoKey {
    let mut out = MonoKey::one().with_deriv(deriv);
    for (var, p) in key.poly.iter() {
        let index = match var.side {
            crate::signature::Side::X => var.index as usize,
            crate::signature::Side::Y => n + var.index as usize,
        };
        out.poly.add(Var::x(index), p);
    }
    out
}

/// `−Σ_i (∂u/∂y_i) ∂_{x_i} + Σ_i (∂u/∂x_i) ∂_{y_i}` in `W(2n)`, with `y_i`
/// renamed to `x_{n+i}`.
pub fn hamiltonian_field(u: &Element) -> Result<Element> {
    let target = Arc::new(hamiltonian_target(u.sig())?);
    hamiltonian_field_in(u, target)
}

/// As [`hamiltonian_field`], reusing a target signature built once.
pub fn hamiltonian_field_in(u: &Element, target: Arc<AlgebraSignature>) -> Result<Element> {
    let expected = hamiltonian_target(u.sig())?;
    if *target != expected {
        return Err(Error::mismatch(&*target, expected));
    }
    let n = u.sig().n();
    let mut acc = Accumulator::new();
    for m in u.terms() {
        for i in 0..n {
            for (k, key) in m.key.partial(Var::y(i)) {
                acc.add(relabel_into_witt(&key, n, i), -(&m.coeff * int(k)));
            }
            for (k, key) in m.key.partial(Var::x(i)) {
                acc.add(relabel_into_witt(&key, n, n + i), &m.coeff * int(k));
            }
        }
    }
    Ok(acc.finish(target))
}

/// A function in the coefficient ring (no derivation slot), kept canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientFunction {
    terms: Vec<Monomial>,
}

impl CoefficientFunction {
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for CoefficientFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::print_terms(&self.terms))
    }
}

/// `Σ_t ∂(f_t)/∂x_t` for `a = Σ_t f_t ∂_t`.
pub fn divergence(a: &Element) -> Result<CoefficientFunction> {
    if a.sig().kind() != BracketKind::Witt {
        return Err(Error::mismatch(a.sig(), "a Witt-type algebra"));
    }
    let mut acc = Accumulator::new();
    for m in a.terms() {
        let t = m
            .key
            .deriv
            .ok_or_else(|| Error::MissingDerivationSlot(m.key.to_string()))?;
        for (k, key) in m.key.function_part().partial(Var::x(t as usize)) {
            acc.add(key, &m.coeff * int(k));
        }
    }
    // The accumulator only needs a signature to attach; the terms carry no slot.
    let e = acc.finish(a.sig_arc().clone());
    Ok(CoefficientFunction {
        terms: e.terms().to_vec(),
    })
}

pub fn is_divergence_free(a: &Element) -> Result<bool> {
    Ok(divergence(a)?.is_zero())
}

/// Error unless `a` lies in the divergence-free subalgebra.
pub fn ensure_divergence_free(a: &Element) -> Result<()> {
    let div = divergence(a)?;
    if div.is_zero() {
        Ok(())
    } else {
        Err(Error::NotDivergenceFree(div.to_string()))
    }
}
