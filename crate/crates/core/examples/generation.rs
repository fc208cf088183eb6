//! Explicit bracket combinations producing a nonzero multiple of each
//! basis monomial of W(1; x1:[1]) from brackets of basis monomials.

use std::sync::Arc;

use lieexp::ideal::lemma2_generate;
use num_traits::{One, Signed, Zero};

use lieexp::{AlgebraSignature, Rational, TruncationCaps};

fn main() -> lieexp::Result<()> {
    let sig: Arc<AlgebraSignature> = Arc::new("W(1; x1:[1])".parse()?);
    let caps = TruncationCaps::for_signature(&sig, 2, 1);
    for key in caps.enumerate(&sig)? {
        let t = lemma2_generate(&key, &sig)?;
        t.verify()?;
        let combination = t.combination.iter().fold(String::new(), |out, (c, a, b)| {
            let sign = if c < &Rational::zero() {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            format!(
                "{out} {sign} {}[{a}, {b}]",
                if c.abs().is_one() {
                    String::new()
                } else {
                    format!("{}*", c.abs())
                }
            )
        });
        let combination = if combination.is_empty() {
            "seed element"
        } else {
            combination.trim_start()
        };
        println!(
            "{:<20} {:<14} {} * target = {combination}",
            key.to_string(),
            format!("{:?}", t.pattern),
            t.multiple
        );
    }
    Ok(())
}
