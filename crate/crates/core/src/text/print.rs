use num_traits::{One, Signed};

use crate::element::Element;
use crate::monomial::Monomial;

pub fn print_element(e: &Element) -> String {
    print_terms(e.terms())
}

pub fn print_terms(terms: &[Monomial]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, m) in terms.iter().enumerate() {
        let negative = m.coeff.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let c = m.coeff.abs();
        let body = m.key.to_string();
        let has_factors = !m.key.exp.is_empty() || !m.key.poly.is_empty();
        if m.key.is_constant() {
            out.push_str(&c.to_string());
        } else if c.is_one() {
            out.push_str(&body);
        } else if has_factors {
            out.push_str(&format!("{}*{}", c, body));
        } else {
            out.push_str(&format!("{} {}", c, body));
        }
    }
    out
}
