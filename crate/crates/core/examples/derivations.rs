//! Derivation residuals of the scalar derivation, inner derivations, their
//! combinations and the identity map.

use std::sync::Arc;

use num_traits::One;

use lieexp::structure::{check_derivation, LinearMapTable};
use lieexp::{parse_element, AlgebraSignature, Rational, TruncationCaps};

fn main() -> lieexp::Result<()> {
    let sig: Arc<AlgebraSignature> = Arc::new("H(1)".parse()?);
    let caps = TruncationCaps::for_signature(&sig, 3, 0);
    let s = LinearMapTable::scalar(&sig, &caps)?;
    let z = parse_element("x1^2*y1 - 3*y1^2", sig.clone())?;
    let ad = LinearMapTable::inner(&z, &caps)?;
    let mixed = s.combine(&Rational::new(5.into(), 2.into()), &ad, &Rational::one())?;
    let id = LinearMapTable::identity(&sig, &caps)?;
    for (name, map) in [
        ("S", &s),
        ("ad(z)", &ad),
        ("5/2*S + ad(z)", &mixed),
        ("identity", &id),
    ] {
        let report = check_derivation(map, &caps)?;
        println!(
            "{name:<14} derivation: {:<5}  pairs checked {}  residuals {}",
            report.is_derivation(),
            report.pairs_checked,
            report.residuals.len()
        );
    }
    Ok(())
}
