//! Ideal-generation tactics with replayable traces.

use std::sync::Arc;

use lieexp::ideal::{
    drive_to_grade_zero, tactic_positivize, tactic_reduce_components, tactic_strip_exponentials, Trace,
    DEFAULT_SEARCH_BOUND,
};
use lieexp::{parse_element, AlgebraSignature};

fn show(name: &str, trace: &Trace) -> lieexp::Result<()> {
    trace.verify()?;
    println!("{name}: {}  ->  {}", trace.input, trace.output);
    for step in &trace.steps {
        println!("    ad({})^{}  [{}]", step.multiplier, step.times, step.tactic);
    }
    Ok(())
}

fn main() -> lieexp::Result<()> {
    let h: Arc<AlgebraSignature> = Arc::new("H(1,1)".parse()?);
    let l = parse_element("x1^2*y1^-1 + 3*x1*y1^-2", h.clone())?;
    show("positivize", &tactic_positivize(&l, DEFAULT_SEARCH_BOUND)?)?;

    let l = parse_element("e^{2*x1}*y1 + e^{1*x1}*x1 + y1^2", h.clone())?;
    show(
        "strip exponentials",
        &tactic_strip_exponentials(&l, DEFAULT_SEARCH_BOUND)?,
    )?;

    let l = parse_element("e^{1*y1} + x1^2", h.clone())?;
    show(
        "reduce components",
        &tactic_reduce_components(&l, DEFAULT_SEARCH_BOUND)?,
    )?;

    let w: Arc<AlgebraSignature> = Arc::new("W(1; x1:[1])".parse()?);
    let l = parse_element("e^{2*x1}*x1 D1 + e^{-1*x1} D1 + x1^2 D1", w)?;
    let (trace, findings) = drive_to_grade_zero(&l, DEFAULT_SEARCH_BOUND, 16);
    show("drive to grade zero", &trace)?;
    for f in findings {
        println!("    finding: {f}");
    }
    Ok(())
}
