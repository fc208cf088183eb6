//! Saturate the ideal generated by one element inside a truncation window
//! and read the report.

use std::sync::Arc;

use lieexp::ideal::{closure_saturate, ClosureConfig};
use lieexp::{parse_element, AlgebraSignature, TruncationCaps};

fn main() -> lieexp::Result<()> {
    let sig: Arc<AlgebraSignature> = Arc::new("W(1; x1:[1])".parse()?);
    let caps = TruncationCaps::for_signature(&sig, 3, 1);
    let seed = parse_element("e^{1*x1}*x1^2 D1 - 2*x1 D1", sig)?;
    let report = closure_saturate(&seed, &caps, &ClosureConfig::default())?;
    println!("seed            {}", report.seed);
    println!(
        "window          {} ({} monomials)",
        report.caps, report.window_size
    );
    println!(
        "working window  {} ({} monomials)",
        report.working_caps, report.working_size
    );
    println!("multipliers     {}", report.multiplier_budget);
    println!("reached by round {:?}", report.reached_by_round);
    println!(
        "coverage        {} (bound {})",
        report.coverage(),
        report.coverage_bound
    );
    println!(
        "rank {}  rounds {}  evaluated {}  discarded {}",
        report.rank, report.rounds, report.evaluated, report.discarded
    );
    if let Some(trace) = &report.tactic_trace {
        println!(
            "tactic chain    {} step(s), ends at {}",
            trace.steps.len(),
            trace.output
        );
    }
    Ok(())
}
