//! Exact rational values.
//!
//! Weights are ratios of set sizes bounded by the vertex count and filtration
//! values never leave `[0, 1]` (or small integer stages), so an `i64`-backed
//! ratio never overflows here.

use num_rational::Ratio;
use num_traits::ToPrimitive;

pub type Rational = Ratio<i64>;

/// Shorthand constructor; reduces to lowest terms.
pub fn rat(num: i64, den: i64) -> Rational {
    Ratio::new(num, den)
}

/// Float view for plotting and `--float` output.
pub fn to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `p`, `p/q` or a plain decimal such as `0.25` into an exact value.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().ok()?;
        let den: i64 = den.trim().parse().ok()?;
        if den == 0 {
            return None;
        }
        return Some(Ratio::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int: i64 = if int.is_empty() || int == "-" { 0 } else { int.parse().ok()? };
        if frac.is_empty() {
            return Some(Ratio::from_integer(int));
        }
        if !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 15 {
            return None;
        }
        let digits: i64 = frac.parse().ok()?;
        let scale = 10i64.pow(frac.len() as u32);
        let frac_part = Ratio::new(digits, scale);
        let whole = Ratio::from_integer(int.abs());
        let abs = whole + frac_part;
        return Some(if neg { -abs } else { abs });
    }
    s.parse::<i64>().ok().map(Ratio::from_integer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("1/5"), Some(rat(1, 5)));
        assert_eq!(parse_rational("3"), Some(rat(3, 1)));
        assert_eq!(parse_rational(" 10/4 "), Some(rat(5, 2)));
        assert_eq!(parse_rational("-2/3"), Some(rat(-2, 3)));
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rational("0.25"), Some(rat(1, 4)));
        assert_eq!(parse_rational("1.5"), Some(rat(3, 2)));
        assert_eq!(parse_rational("-0.2"), Some(rat(-1, 5)));
        assert_eq!(parse_rational(".5"), Some(rat(1, 2)));
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("a/b"), None);
        assert_eq!(parse_rational("1.2.3"), None);
        assert_eq!(parse_rational(""), None);
    }

    #[test]
    fn display_round_trips() {
        for r in [rat(1, 5), rat(5, 6), rat(1, 1), rat(0, 1), rat(7, 3)] {
            let shown = format!("{r}");
            assert_eq!(parse_rational(&shown), Some(r));
        }
    }
}
