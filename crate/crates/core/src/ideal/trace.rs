use std::fmt;

use crate::bracket::ad_power;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::grading::{decompose, max_grade, min_grade, stat_hp, GradeKey};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tactic {
    Positivize,
    StripExponentials,
    ReduceComponents,
}

impl Tactic {
    pub fn name(self) -> &'static str {
        match self {
            Tactic::Positivize => "positivize",
            Tactic::StripExponentials => "strip-exponentials",
            Tactic::ReduceComponents => "reduce-components",
        }
    }
}

impl fmt::Display for Tactic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Element statistics recorded around each tactic step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stats {
    /// Number of homogeneous components (`w_h` or `h_h`).
    pub components: usize,
    /// Highest polynomial power (`hp` or `lp`); `None` for zero.
    pub highest_power: Option<i64>,
    pub max_grade: Option<GradeKey>,
    pub min_grade: Option<GradeKey>,
    pub has_zero_component: bool,
    pub poisson: bool,
}

impl Stats {
    pub fn of(l: &Element) -> Self {
        let parts = decompose(l);
        Stats {
            components: parts.len(),
            highest_power: stat_hp(l).ok(),
            max_grade: max_grade(l),
            min_grade: min_grade(l),
            has_zero_component: parts.keys().any(GradeKey::is_zero),
            poisson: l.sig().is_poisson(),
        }
    }

    pub fn w_h(&self) -> Option<usize> {
        (!self.poisson).then_some(self.components)
    }

    pub fn h_h(&self) -> Option<usize> {
        self.poisson.then_some(self.components)
    }

    pub fn hp(&self) -> Option<i64> {
        if self.poisson {
            None
        } else {
            self.highest_power
        }
    }

    pub fn lp(&self) -> Option<i64> {
        if self.poisson {
            self.highest_power
        } else {
            None
        }
    }
}

/// One application of `ad(multiplier)^times`.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep {
    pub tactic: Tactic,
    pub multiplier: Element,
    pub times: usize,
    pub before: Stats,
    pub after: Stats,
}

/// A replayable chain `input → … → output` of adjoint actions, so every
/// intermediate lies in the ideal generated by `input`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub input: Element,
    pub steps: Vec<TraceStep>,
    pub output: Element,
}

impl Trace {
    pub fn identity(l: &Element) -> Self {
        Trace {
            input: l.clone(),
            steps: Vec::new(),
            output: l.clone(),
        }
    }

    pub(crate) fn push(&mut self, tactic: Tactic, multiplier: Element, times: usize) -> Result<()> {
        let before = Stats::of(&self.output);
        let next = ad_power(&multiplier, &self.output, times)?;
        let after = Stats::of(&next);
        self.steps.push(TraceStep {
            tactic,
            multiplier,
            times,
            before,
            after,
        });
        self.output = next;
        Ok(())
    }

    pub fn extend(&mut self, other: Trace) {
        debug_assert_eq!(self.output, other.input);
        self.steps.extend(other.steps);
        self.output = other.output;
    }

    /// Recompute the output from the input and the recorded multipliers.
    pub fn replay(&self) -> Result<Element> {
        let mut l = self.input.clone();
        for step in &self.steps {
            l = ad_power(&step.multiplier, &l, step.times)?;
        }
        Ok(l)
    }

    pub fn verify(&self) -> Result<()> {
        let replayed = self.replay()?;
        if replayed == self.output {
            Ok(())
        } else {
            Err(Error::TraceInvalid(format!(
                "replay gives {} but the trace records {}",
                replayed, self.output
            )))
        }
    }

    /// Intermediate results in order, the input included.
    pub fn states(&self) -> Result<Vec<Element>> {
        let mut out = vec![self.input.clone()];
        let mut l = self.input.clone();
        for step in &self.steps {
            l = ad_power(&step.multiplier, &l, step.times)?;
            out.push(l.clone());
        }
        Ok(out)
    }
}

/// A tactic that did not produce what it promises, kept as data.
#[derive(Debug, Clone, PartialEq)]
pub struct Finding {
    pub tactic: Tactic,
    pub input: Element,
    pub error: Error,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}: {}", self.tactic, self.input, self.error)
    }
}
