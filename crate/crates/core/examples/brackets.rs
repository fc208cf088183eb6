//! Brackets in the Witt and Poisson families, the Jacobi residual and
//! Hamiltonian fields.

use std::sync::Arc;

use lieexp::bracket::{bracket, divergence, hamiltonian_field, jacobi_residual};
use lieexp::{parse_element, AlgebraSignature, Element};

fn parse(src: &str, sig: &Arc<AlgebraSignature>) -> lieexp::Result<Element> {
    parse_element(src, sig.clone())
}

fn main() -> lieexp::Result<()> {
    let w: Arc<AlgebraSignature> = Arc::new("W(1; x1:[1])".parse()?);
    let a = parse("e^{2*x1}*x1^3 D1", &w)?;
    let b = parse("x1 D1 + e^{-1*x1} D1", &w)?;
    println!("[{a}, {b}] = {}", bracket(&a, &b)?);

    let h: Arc<AlgebraSignature> = Arc::new("H(1,1)".parse()?);
    for (a, b) in [(2, 3), (-1, 4)] {
        let f = parse(&format!("e^{{{a}*x1}}*e^{{{b}*y1}}*y1"), &h)?;
        let g = parse(&format!("e^{{{}*x1}}*e^{{{}*y1}}", -a, -b), &h)?;
        println!("{{{f}, {g}}} = {}", bracket(&f, &g)?);
    }

    let w2: Arc<AlgebraSignature> = Arc::new("W(2)".parse()?);
    let (x, y, z) = (
        parse("x1 D2", &w2)?,
        parse("x2^2 D1", &w2)?,
        parse("x1*x2 D1 + D2", &w2)?,
    );
    println!(
        "Jacobi residual of ({x}, {y}, {z}) = {}",
        jacobi_residual(&x, &y, &z)?
    );

    let h2: Arc<AlgebraSignature> = Arc::new("H(2)".parse()?);
    let u = parse("x1^2*y2 + x2*y1^3", &h2)?;
    let field = hamiltonian_field(&u)?;
    println!("H({u}) = {field}");
    println!("div H({u}) = {}", divergence(&field)?);
    Ok(())
}
