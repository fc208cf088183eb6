//! Saturate the ideals of pseudo-random seeds in three truncated algebras
//! and the abelian control.

use std::sync::Arc;
use std::time::Instant;

use lieexp::ideal::{abelian_control, simplicity_experiment, ClosureConfig};
use lieexp::{AlgebraSignature, TruncationCaps};

fn main() -> lieexp::Result<()> {
    let runs = [("W(1; x1:[1])", 3, 1), ("Hbar(1,1)", 2, 1), ("Hbar(1,0)", 0, 2)];
    for (algebra, p, a) in runs {
        let sig: Arc<AlgebraSignature> = Arc::new(algebra.parse()?);
        let caps = TruncationCaps::for_signature(&sig, p, a);
        let start = Instant::now();
        let summary = simplicity_experiment(&sig, &caps, 20, 7, &ClosureConfig::default())?;
        let rounds: Vec<usize> = summary.reports.iter().map(|r| r.rounds).collect();
        println!(
            "{algebra:<14} {caps}  window {:>4}  min coverage {}  bounds attained {}  rounds {:?}  {:.1?}",
            caps.window_size(&sig),
            summary.min_coverage(),
            summary.attains_bounds(),
            rounds,
            start.elapsed()
        );
    }
    let sig: Arc<AlgebraSignature> = Arc::new("H(1)".parse()?);
    let caps = TruncationCaps::for_signature(&sig, 2, 0);
    let control = abelian_control(&sig, &caps)?;
    println!("abelian control: coverage {}", control.coverage());
    Ok(())
}
