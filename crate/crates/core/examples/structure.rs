//! Structural probes: the center of a window, ad-diagonal elements and
//! their eigenvalues.

use std::sync::Arc;

use lieexp::structure::{center_probe, find_ad_diagonal, is_ad_diagonal};
use lieexp::{parse_element, AlgebraSignature, TruncationCaps};

fn main() -> lieexp::Result<()> {
    let h11: Arc<AlgebraSignature> = Arc::new("H(1,1)".parse()?);
    let caps = TruncationCaps::for_signature(&h11, 2, 1);
    let center = center_probe(&h11, &caps)?;
    println!(
        "center of H(1,1) in {caps}: {center:?}",
        center = center.iter().map(|e| e.to_string()).collect::<Vec<_>>()
    );

    for algebra in ["H(2)", "Hbar(1,0)", "Hbar(1,1)"] {
        let sig: Arc<AlgebraSignature> = Arc::new(algebra.parse()?);
        let caps = TruncationCaps::for_signature(&sig, 2, 1);
        let found: Vec<String> = find_ad_diagonal(&sig, &caps)?
            .iter()
            .map(|e| e.to_string())
            .collect();
        println!("ad-diagonal monomials of {algebra}: {found:?}");
    }

    let h1: Arc<AlgebraSignature> = Arc::new("H(1)".parse()?);
    let caps = TruncationCaps::for_signature(&h1, 3, 0);
    let report = is_ad_diagonal(&parse_element("x1*y1", h1.clone())?, &caps)?;
    println!("ad(x1*y1) eigenvalues:");
    for (key, value) in &report.eigenvalues {
        println!("  {key:<12} {value}");
    }
    let report = is_ad_diagonal(&parse_element("x1^2*y1", h1)?, &caps)?;
    if let Some((key, image)) = &report.witness {
        println!("x1^2*y1 is not ad-diagonal: [x1^2*y1, {key}] = {image}");
    }
    Ok(())
}
