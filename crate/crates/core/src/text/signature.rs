use std::str::FromStr;

use crate::error::{Error, Result};
use crate::signature::AlgebraSignature;

fn bad(src: &str, why: &str) -> Error {
    Error::SignatureViolation(format!("cannot parse algebra \"{}\": {}", src, why))
}

fn parse_count(s: &str, src: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| bad(src, &format!("\"{}\" is not a variable count", s)))
}

/// `x1:[1,2], x2:[3]` into one list per variable (missing variables get none).
fn parse_power_lists(s: &str, n: usize, src: &str) -> Result<Vec<Vec<u32>>> {
    let mut lists = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    let mut rest = s;
    while !rest.is_empty() {
        let colon = rest.find(':').ok_or_else(|| bad(src, "expected var:[powers]"))?;
        let var = &rest[..colon];
        let index = var
            .strip_prefix('x')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&k| k >= 1 && k <= n)
            .ok_or_else(|| bad(src, &format!("unknown variable \"{}\"", var)))?;
        if seen[index - 1] {
            return Err(bad(src, &format!("variable {} listed twice", var)));
        }
        seen[index - 1] = true;
        let after = &rest[colon + 1..];
        let body = after
            .strip_prefix('[')
            .ok_or_else(|| bad(src, "expected '[' after ':'"))?;
        let close = body.find(']').ok_or_else(|| bad(src, "missing ']'"))?;
        let items = &body[..close];
        if !items.is_empty() {
            for item in items.split(',') {
                let p = item
                    .parse::<u32>()
                    .map_err(|_| bad(src, &format!("\"{}\" is not a power", item)))?;
                lists[index - 1].push(p);
            }
        }
        rest = &body[close + 1..];
        if let Some(r) = rest.strip_prefix(',') {
            rest = r;
        } else if !rest.is_empty() {
            return Err(bad(src, "expected ',' between power lists"));
        }
    }
    Ok(lists)
}

impl FromStr for AlgebraSignature {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let open = s.find('(').ok_or_else(|| bad(src, "missing '('"))?;
        let body = s[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| bad(src, "missing ')'"))?;
        let head = &s[..open];
        let (args, lists) = match body.split_once(';') {
            Some((a, l)) => (a, Some(l)),
            None => (body, None),
        };
        let args: Vec<&str> = args.split(',').collect();
        match (head, args.as_slice(), lists) {
            ("W", [n], None) => AlgebraSignature::witt(parse_count(n, src)?),
            ("W", [n], Some(l)) => {
                let n = parse_count(n, src)?;
                AlgebraSignature::witt_exp(parse_power_lists(l, n, src)?)
            }
            ("W+", ["1"], None) => Ok(AlgebraSignature::witt_plus_one()),
            ("S", [n], None) => AlgebraSignature::special(parse_count(n, src)?),
            ("H" | "Hbar", rest, lists) => {
                let sig = match (rest, lists) {
                    ([n], None) => AlgebraSignature::poisson(parse_count(n, src)?)?,
                    ([n, "0"], None) => AlgebraSignature::poisson_exp_only(parse_count(n, src)?)?,
                    ([n, m], l) => {
                        let n = parse_count(n, src)?;
                        if parse_count(m, src)? != n {
                            return Err(bad(src, "expected H(n,n) or H(n,0)"));
                        }
                        match l {
                            None => AlgebraSignature::poisson_exp(n)?,
                            Some(l) => AlgebraSignature::poisson_exp_powers(parse_power_lists(l, n, src)?)?,
                        }
                    }
                    _ => return Err(bad(src, "unrecognized Poisson algebra")),
                };
                if head == "Hbar" {
                    sig.quotient()
                } else {
                    Ok(sig)
                }
            }
            _ => Err(bad(src, "unrecognized algebra")),
        }
    }
}
