use super::{mono_mul, AlgebraContext, ExtElement, ExtMonomial};
use crate::textfmt::{parse_terms, ParseFail};

/// Parses an exterior element such as `3*e0*e2 - e1*e2`. Unsorted monomials
/// pick up the sign of the sorting permutation; repeated variables give zero.
/// A zero element takes `zero_degree`.
pub fn parse_element(s: &str, ctx: &AlgebraContext, zero_degree: i32) -> Result<ExtElement, ParseFail> {
    let field = ctx.field();
    let raw = parse_terms(s, 'e')?;
    let mut terms = Vec::new();
    let mut degree: Option<i32> = None;
    for t in raw {
        let mut mono = ExtMonomial::ONE;
        let mut negative = t.coeff < 0;
        let mut vanished = false;
        for &(idx, power, col) in &t.factors {
            if idx > ctx.n() {
                return Err(ParseFail::new(col, format!("variable e{idx} exceeds n = {}", ctx.n())));
            }
            if power == 0 {
                continue;
            }
            if power > 1 {
                vanished = true;
                continue;
            }
            match mono_mul(mono, ExtMonomial::var(idx)) {
                Some((neg, m)) => {
                    mono = m;
                    negative ^= neg;
                }
                None => vanished = true,
            }
        }
        let d = mono.degree();
        match degree {
            Some(prev) if prev != d => {
                let col = t.factors.first().map(|f| f.2).unwrap_or(0);
                return Err(ParseFail::new(col, format!("inhomogeneous: degree {d} after degree {prev}")));
            }
            _ => degree = Some(d),
        }
        if vanished {
            continue;
        }
        let c = field.from_i64(t.coeff.abs());
        terms.push((mono, if negative { field.neg(c) } else { c }));
    }
    let degree = degree.unwrap_or(zero_degree);
    let el = ExtElement::from_terms(field, degree, terms).map_err(|e| ParseFail::new(0, e.to_string()))?;
    if el.is_zero() {
        Ok(ExtElement::zero(zero_degree))
    } else {
        Ok(el)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_text() {
        let ctx = AlgebraContext::with_prime(5, 32003).unwrap();
        let el = parse_element("e0*e3*e5 - 2*e1*e2*e4", &ctx, 0).unwrap();
        assert_eq!(el.degree(), -3);
        let back = parse_element(&el.to_text(ctx.field()), &ctx, 0).unwrap();
        assert_eq!(el, back);
    }

    #[test]
    fn unsorted_monomial_sign() {
        let ctx = AlgebraContext::with_prime(2, 32003).unwrap();
        let a = parse_element("e1*e0", &ctx, 0).unwrap();
        let b = parse_element("-e0*e1", &ctx, 0).unwrap();
        assert_eq!(a, b);
        assert!(parse_element("e1*e1", &ctx, -2).unwrap().is_zero());
    }

    #[test]
    fn rejects_bad_input() {
        let ctx = AlgebraContext::with_prime(2, 32003).unwrap();
        assert!(parse_element("e0 + e1*e2", &ctx, 0).is_err());
        assert_eq!(parse_element("e0 + e7", &ctx, 0).unwrap_err().col, 5);
    }
}
