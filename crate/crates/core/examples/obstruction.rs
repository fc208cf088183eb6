//! Linear functionals vanishing on every Poisson bracket of Hbar(1,1), and
//! the coverage bound they impose on ideals inside a window.

use std::sync::Arc;

use lieexp::bracket::bracket;
use lieexp::ideal::{annihilated, coverage_bound, functional_vector, unreachable_keys};
use lieexp::random::{rng, Sampler};
use lieexp::{parse_element, AlgebraSignature, TruncationCaps};

fn main() -> lieexp::Result<()> {
    let sig: Arc<AlgebraSignature> = Arc::new("Hbar(1,1)".parse()?);
    let caps = TruncationCaps::for_signature(&sig, 2, 1);

    let sampler = Sampler::new(caps.clone());
    let mut r = rng(1);
    let mut killed = 0;
    for _ in 0..100 {
        let (a, b) = (sampler.element(&sig, &mut r), sampler.element(&sig, &mut r));
        killed += annihilated(&bracket(&a, &b)?) as usize;
    }
    println!("random brackets annihilated: {killed}/100");

    let residue = parse_element("x1^-1*y1^-1 + e^{2*x1}*x1^-2*y1^-1", sig.clone())?;
    println!("functionals of {residue}:");
    for (class, value) in functional_vector(&residue) {
        println!("  class {class}: {value}");
    }

    let seed = parse_element("e^{1*x1}*y1", sig)?;
    let blocked = unreachable_keys(&seed, &caps)?;
    println!(
        "seed {seed}: {} of {} window monomials unreachable, coverage bound {}",
        blocked.len(),
        caps.window_size(seed.sig()),
        coverage_bound(&seed, &caps)?
    );
    Ok(())
}
