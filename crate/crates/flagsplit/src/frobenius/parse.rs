//! Plain text grammar for chart polynomials: sums of terms like
//! `2*x21^3*x31`, with `-` accepted between terms and bare integer terms
//! allowed.

use super::poly::PolyFp;
use crate::error::{Error, Result};

/// Parses `src` over the named variables, e.g.
/// `parse_poly("x21*x32 - x31 + 2", 3, &names)`.
pub fn parse_poly(src: &str, p: u64, names: &[String]) -> Result<PolyFp> {
    let nvars = names.len();
    let mut out = PolyFp::zero(p, nvars);
    for (sign, term) in split_terms(src)? {
        let mut coeff: i64 = sign;
        let mut exps = vec![0u32; nvars];
        for factor in term.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in `{term}`")));
            }
            if factor.chars().next().unwrap().is_ascii_digit() {
                let c: i64 = factor
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient `{factor}`")))?;
                coeff *= c.rem_euclid(p as i64);
                coeff = coeff.rem_euclid(p as i64);
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                None => (factor, 1u32),
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                ),
            };
            let idx = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            exps[idx] += exp;
        }
        out = out.add(&PolyFp::monomial(p, nvars, exps, coeff));
    }
    Ok(out)
}

/// Splits on top-level + and -, yielding `(sign, term)` pairs.
fn split_terms(src: &str) -> Result<Vec<(i64, String)>> {
    let mut out = Vec::new();
    let mut sign = 1i64;
    let mut cur = String::new();
    let flush = |sign: i64, cur: &mut String, out: &mut Vec<(i64, String)>| -> Result<()> {
        let t = cur.trim().to_string();
        if t.is_empty() {
            return Err(Error::Parse("empty term".into()));
        }
        out.push((sign, t));
        cur.clear();
        Ok(())
    };
    let mut seen_any = false;
    for c in src.chars() {
        match c {
            '+' | '-' if seen_any && !cur.trim().is_empty() => {
                flush(sign, &mut cur, &mut out)?;
                sign = if c == '-' { -1 } else { 1 };
            }
            '-' if cur.trim().is_empty() => {
                sign = -sign;
                seen_any = true;
            }
            '+' if cur.trim().is_empty() => {
                seen_any = true;
            }
            _ => {
                if !c.is_whitespace() {
                    seen_any = true;
                }
                cur.push(c);
            }
        }
    }
    flush(sign, &mut cur, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["x21".into(), "x31".into(), "x32".into()]
    }

    #[test]
    fn parses_terms_and_signs() {
        let p = 5;
        let f = parse_poly("x21*x32 - x31", p, &names()).unwrap();
        let x21 = PolyFp::var(p, 3, 0);
        let x31 = PolyFp::var(p, 3, 1);
        let x32 = PolyFp::var(p, 3, 2);
        assert_eq!(f, x21.mul(&x32).sub(&x31));

        let g = parse_poly("2*x21^3*x31 + 4", p, &names()).unwrap();
        assert_eq!(g, x21.pow(3).mul(&x31).scale(2).add(&PolyFp::constant(p, 3, 4)));

        let h = parse_poly("-x31 + x31", p, &names()).unwrap();
        assert!(h.is_zero());

        // parse matches display for a nontrivial value
        let shown = g.display(&names());
        assert_eq!(parse_poly(&shown, p, &names()).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        let p = 3;
        assert!(parse_poly("y12", p, &names()).is_err());
        assert!(parse_poly("x21^a", p, &names()).is_err());
        assert!(parse_poly("", p, &names()).is_err());
        assert!(parse_poly("x21 * * x31", p, &names()).is_err());
    }
}
