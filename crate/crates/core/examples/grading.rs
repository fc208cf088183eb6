//! Grade keys, homogeneous decomposition, the two monomial orders and the
//! component statistics.

use std::sync::Arc;

use lieexp::grading::{compare_h, decompose, stat_hh, stat_hp, stat_lp, stat_wh};
use lieexp::{parse_element, AlgebraSignature};

fn main() -> lieexp::Result<()> {
    let h: Arc<AlgebraSignature> = Arc::new("H(2,2)".parse()?);
    let l = parse_element(
        "e^{3*x1}*e^{4*x2}*x1^5*x2^7 + 5*e^{3*x1}*e^{4*x2}*x1^6*x2^-7 + 9*e^{4*x1}*x2^7",
        h.clone(),
    )?;
    println!("l = {l}");
    for (g, c) in decompose(&l) {
        println!("  grade {g}: {c}");
    }
    println!(
        "w_h = {}, h_h = {}, hp = {}, lp = {}",
        stat_wh(&l),
        stat_hh(&l)?,
        stat_hp(&l)?,
        stat_lp(&l)?
    );

    let mut terms = l.terms().to_vec();
    terms.sort_by(|a, b| compare_h(a, b, &h).expect("terms share the signature"));
    println!("terms in increasing order:");
    for m in terms {
        println!("  {}", m.key);
    }
    Ok(())
}
