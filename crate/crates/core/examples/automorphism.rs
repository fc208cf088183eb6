//! Leading-term constraint on automorphisms of W+(1).

use std::sync::Arc;

use lieexp::structure::wplus_automorphism_check;
use lieexp::{parse_element, AlgebraSignature};

fn main() -> lieexp::Result<()> {
    let sig: Arc<AlgebraSignature> = Arc::new("W+(1)".parse()?);
    for (d, xd) in [
        ("D1", "x1 D1 + 3 D1"),
        ("D1", "2*x1 D1"),
        ("D1", "x1^2 D1"),
        ("-1 D1", "x1 D1 - 1/2 D1"),
    ] {
        let v = wplus_automorphism_check(&parse_element(d, sig.clone())?, &parse_element(xd, sig.clone())?)?;
        println!(
            "theta(D1) = {d:<6} theta(x1 D1) = {xd:<16} accepted {:<5} relation {:<5} shape {:<5} residual {}",
            v.accepted(),
            v.relation_holds,
            v.shape_holds,
            v.relation_residual
        );
    }
    Ok(())
}
