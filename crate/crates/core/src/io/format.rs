use num_traits::{One, Signed};

use crate::coeff::Coefficient;
use crate::poly::MixedPoly;

/// Canonical text for `p`: terms in decreasing graded-lex order, `z`
/// factors before `~z` factors. Always re-parses to `p`.
pub fn format(p: &MixedPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, t) in p.terms().enumerate() {
        let (negative, magnitude) = split_sign(t.coeff);
        let monomial = monomial_text(t.alpha, t.beta);
        let body = match (magnitude, monomial.is_empty()) {
            (None, true) => "1".to_string(),
            (None, false) => monomial,
            (Some(m), true) => m,
            (Some(m), false) => format!("{}*{}", m, monomial),
        };
        match (n, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

/// Sign and printed magnitude of a coefficient; `None` means a unit factor
/// that can be omitted in front of a monomial.
fn split_sign(c: &Coefficient) -> (bool, Option<String>) {
    if c.is_real() {
        let neg = c.re.is_negative();
        let abs = c.re.abs();
        let mag = if abs.is_one() { None } else { Some(abs.to_string()) };
        (neg, mag)
    } else if c.is_imaginary() {
        let neg = c.im.is_negative();
        let abs = c.im.abs();
        let mag = if abs.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", abs)
        };
        (neg, Some(mag))
    } else {
        (false, Some(c.to_string()))
    }
}

fn monomial_text(alpha: &[u32], beta: &[u32]) -> String {
    let mut factors = Vec::new();
    for (prefix, exps) in [("z", alpha), ("~z", beta)] {
        for (i, &e) in exps.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("{}{}", prefix, i + 1)),
                _ => factors.push(format!("{}{}^{}", prefix, i + 1, e)),
            }
        }
    }
    factors.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse;

    #[test]
    fn zero_prints_as_zero() {
        assert_eq!(format(&MixedPoly::zero(2)), "0");
    }

    #[test]
    fn conjugates_follow_holomorphic_factors() {
        assert_eq!(format(&parse("~z1*z1", 1).unwrap()), "z1*~z1");
    }

    #[test]
    fn mixed_coefficients() {
        let p = parse("-z1^2 + (1/2 - 3*i)*z2*~z1 - i*~z2 + 7/3", 2).unwrap();
        assert_eq!(format(&p), "-z1^2 + (1/2 - 3*i)*z2*~z1 - i*~z2 + 7/3");
    }

    #[test]
    fn constant_terms() {
        assert_eq!(format(&parse("-1", 1).unwrap()), "-1");
        assert_eq!(format(&parse("z1 - 2*i", 1).unwrap()), "z1 - 2*i");
    }
}
