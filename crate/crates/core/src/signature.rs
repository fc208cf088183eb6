//! Algebra signatures: which family, how many variables, which exponential
//! powers are allowed per variable and where polynomial powers may range.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `W(n)`: polynomial vector fields.
    Witt,
    /// `W(n, i*)`: vector fields with coefficients in the exponential ring.
    WittExp,
    /// `W+(1)`: one-variable polynomial Witt algebra.
    WittPlusOne,
    /// `H(n)`: polynomial Poisson algebra.
    PoissonPoly,
    /// `H(n,n)`: Laurent polynomials times `e^{a x}`, `e^{b y}`.
    PoissonExpFull,
    /// `H(n,0)`: exponentials only, no polynomial parts.
    PoissonExpOnly,
    /// `H(n,n,i*)`: Laurent polynomials times `e^{a x^i}` for listed powers.
    PoissonExpPowers,
    /// `S(n)`: divergence-free polynomial vector fields.
    Special,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyDomain {
    Naturals,
    Integers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BracketKind {
    Witt,
    Poisson,
}

impl Family {
    pub fn bracket_kind(self) -> BracketKind {
        match self {
            Family::Witt | Family::WittExp | Family::WittPlusOne | Family::Special => BracketKind::Witt,
            _ => BracketKind::Poisson,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

/// A variable `x_k` or `y_k`; `index` is zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub side: Side,
    pub index: u16,
}

impl Var {
    pub fn x(index: usize) -> Self {
        Var {
            side: Side::X,
            index: index as u16,
        }
    }

    pub fn y(index: usize) -> Self {
        Var {
            side: Side::Y,
            index: index as u16,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.side {
            Side::X => 'x',
            Side::Y => 'y',
        };
        write!(f, "{}{}", letter, self.index + 1)
    }
}

/// One exponential factor position `e^{a * var^power}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpSlot {
    pub var: Var,
    pub power: u32,
}

impl fmt::Display for ExpSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.var, self.power)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraSignature {
    family: Family,
    n: usize,
    exp_powers: Vec<Vec<u32>>,
    poly_domain: PolyDomain,
    quotient: bool,
}

impl AlgebraSignature {
    fn build(family: Family, n: usize, exp_powers: Vec<Vec<u32>>, poly_domain: PolyDomain) -> Result<Self> {
        if n == 0 {
            return Err(Error::SignatureViolation(
                "number of variables must be positive".into(),
            ));
        }
        if exp_powers.len() != n {
            return Err(Error::SignatureViolation(format!(
                "expected {} exponential power lists, got {}",
                n,
                exp_powers.len()
            )));
        }
        for (k, powers) in exp_powers.iter().enumerate() {
            if powers.contains(&0) {
                return Err(Error::SignatureViolation(format!(
                    "exponential powers for x{} must be >= 1",
                    k + 1
                )));
            }
            if powers.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::SignatureViolation(format!(
                    "exponential powers for x{} must be strictly increasing",
                    k + 1
                )));
            }
        }
        Ok(AlgebraSignature {
            family,
            n,
            exp_powers,
            poly_domain,
            quotient: false,
        })
    }

    /// `W(n)`.
    pub fn witt(n: usize) -> Result<Self> {
        Self::build(Family::Witt, n, vec![Vec::new(); n], PolyDomain::Naturals)
    }

    /// `W(n, i*)` with one strictly increasing power list per variable.
    pub fn witt_exp(exp_powers: Vec<Vec<u32>>) -> Result<Self> {
        let n = exp_powers.len();
        Self::build(Family::WittExp, n, exp_powers, PolyDomain::Naturals)
    }

    /// `W+(1)`.
    pub fn witt_plus_one() -> Self {
        Self::build(Family::WittPlusOne, 1, vec![Vec::new()], PolyDomain::Naturals).expect("static signature")
    }

    /// `H(n)`.
    pub fn poisson(n: usize) -> Result<Self> {
        Self::build(Family::PoissonPoly, n, vec![Vec::new(); n], PolyDomain::Naturals)
    }

    /// `H(n,n)`.
    pub fn poisson_exp(n: usize) -> Result<Self> {
        Self::build(Family::PoissonExpFull, n, vec![vec![1]; n], PolyDomain::Integers)
    }

    /// `H(n,0)`.
    pub fn poisson_exp_only(n: usize) -> Result<Self> {
        Self::build(Family::PoissonExpOnly, n, vec![vec![1]; n], PolyDomain::Naturals)
    }

    /// `H(n,n,i*)`; the list for `x_k` also applies to `y_k`.
    pub fn poisson_exp_powers(exp_powers: Vec<Vec<u32>>) -> Result<Self> {
        let n = exp_powers.len();
        Self::build(Family::PoissonExpPowers, n, exp_powers, PolyDomain::Integers)
    }

    /// `S(n)`.
    pub fn special(n: usize) -> Result<Self> {
        Self::build(Family::Special, n, vec![Vec::new(); n], PolyDomain::Naturals)
    }

    /// The centerless quotient by the constants. Only Poisson families have one.
    pub fn quotient(mut self) -> Result<Self> {
        if !self.is_poisson() {
            return Err(Error::SignatureViolation(format!(
                "{} has no constant center to quotient by",
                self
            )));
        }
        self.quotient = true;
        Ok(self)
    }

    /// Same algebra without the quotient convention.
    pub fn unquotiented(&self) -> Self {
        AlgebraSignature {
            quotient: false,
            ..self.clone()
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly_domain(&self) -> PolyDomain {
        self.poly_domain
    }

    pub fn is_quotient(&self) -> bool {
        self.quotient
    }

    pub fn kind(&self) -> BracketKind {
        self.family.bracket_kind()
    }

    pub fn is_witt(&self) -> bool {
        self.kind() == BracketKind::Witt
    }

    pub fn is_poisson(&self) -> bool {
        self.kind() == BracketKind::Poisson
    }

    pub fn carries_derivations(&self) -> bool {
        self.is_witt()
    }

    /// Allowed exponential powers for `var`.
    pub fn exp_powers(&self, var: Var) -> &[u32] {
        &self.exp_powers[var.index as usize]
    }

    pub fn exp_power_lists(&self) -> &[Vec<u32>] {
        &self.exp_powers
    }

    /// Variables in canonical order: `x_1..x_n`, then `y_1..y_n` for Poisson families.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = (0..self.n).map(Var::x).collect();
        if self.is_poisson() {
            vars.extend((0..self.n).map(Var::y));
        }
        vars
    }

    pub fn has_variable(&self, var: Var) -> bool {
        (var.index as usize) < self.n && (var.side == Side::X || self.is_poisson())
    }

    /// Grade-key coordinates in order: variable order, then ascending power.
    pub fn grade_slots(&self) -> Vec<ExpSlot> {
        self.variables()
            .into_iter()
            .flat_map(|var| {
                self.exp_powers(var)
                    .iter()
                    .map(move |&power| ExpSlot { var, power })
            })
            .collect()
    }

    /// Length `M` of a grade key.
    pub fn grade_len(&self) -> usize {
        let per_side: usize = self.exp_powers.iter().map(Vec::len).sum();
        if self.is_poisson() {
            2 * per_side
        } else {
            per_side
        }
    }

    pub fn allows_slot(&self, slot: ExpSlot) -> bool {
        self.has_variable(slot.var) && self.exp_powers(slot.var).contains(&slot.power)
    }

    pub fn allows_poly_power(&self, power: i64) -> bool {
        if self.family == Family::PoissonExpOnly {
            return power == 0;
        }
        match self.poly_domain {
            PolyDomain::Naturals => power >= 0,
            PolyDomain::Integers => true,
        }
    }

    pub(crate) fn ensure_same(&self, other: &AlgebraSignature) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::mismatch(self, other))
        }
    }

    fn fmt_power_lists(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, powers) in self.exp_powers.iter().enumerate() {
            let sep = if k == 0 { "; " } else { ", " };
            let list: Vec<String> = powers.iter().map(u32::to_string).collect();
            write!(f, "{}x{}:[{}]", sep, k + 1, list.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Display for AlgebraSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = if self.quotient { "Hbar" } else { "H" };
        match self.family {
            Family::Witt => write!(f, "W({})", self.n),
            Family::WittPlusOne => write!(f, "W+(1)"),
            Family::Special => write!(f, "S({})", self.n),
            Family::WittExp => {
                write!(f, "W({}", self.n)?;
                self.fmt_power_lists(f)?;
                write!(f, ")")
            }
            Family::PoissonPoly => write!(f, "{}({})", h, self.n),
            Family::PoissonExpFull => write!(f, "{}({},{})", h, self.n, self.n),
            Family::PoissonExpOnly => write!(f, "{}({},0)", h, self.n),
            Family::PoissonExpPowers => {
                write!(f, "{}({},{}", h, self.n, self.n)?;
                self.fmt_power_lists(f)?;
                write!(f, ")")
            }
        }
    }
}
