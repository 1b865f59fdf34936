use rug::ops::Pow;
use rug::{Complex, Integer, Rational};

/// Exact value of a decimal literal such as `-0.25`, `3` or `1e-20`.
pub fn parse_decimal(text: &str) -> Option<Rational> {
    let s = text.trim();
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let n = Integer::from_str_radix(if all.is_empty() { "0" } else { &all }, 10).ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = Integer::from(10);
    let mut value = if scale >= 0 {
        Rational::from(n * ten.pow(scale as u32))
    } else {
        Rational::from((n, ten.pow(scale.unsigned_abs())))
    };
    if negative {
        value = -value;
    }
    Some(value)
}

/// `"re,im"` as a complex number at `prec` bits.
pub fn parse_complex(text: &str, prec: u32) -> Option<Complex> {
    let (re, im) = text.split_once(',')?;
    Some(Complex::with_val(prec, (parse_decimal(re)?, parse_decimal(im)?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_decimal("0.25"), Some(Rational::from((1, 4))));
        assert_eq!(parse_decimal("-1.5"), Some(Rational::from((-3, 2))));
        assert_eq!(parse_decimal("3"), Some(Rational::from(3)));
        assert_eq!(parse_decimal(".5"), Some(Rational::from((1, 2))));
        assert_eq!(parse_decimal("1e-3"), Some(Rational::from((1, 1000))));
        assert_eq!(parse_decimal("2.5E2"), Some(Rational::from(250)));
    }

    #[test]
    fn malformed_decimals() {
        for bad in ["", "-", ".", "1.2.3", "abc", "1e", "0x10", "1,5"] {
            assert_eq!(parse_decimal(bad), None, "{bad}");
        }
    }

    #[test]
    fn complex_pairs() {
        let z = parse_complex("0.5,-2", 64).unwrap();
        assert_eq!(z.real().to_f64(), 0.5);
        assert_eq!(z.imag().to_f64(), -2.0);
        assert!(parse_complex("0.5", 64).is_none());
    }
}
