//! Exact rational scalars used throughout the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type Int = BigInt;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn is_zero(x: &Rat) -> bool {
    x.is_zero()
}

pub fn is_one(x: &Rat) -> bool {
    x.is_one()
}

/// Parse a rational written as `p` or `p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().ok()?;
            let q: Int = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: Int = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Format as `p` or `p/q`, matching the file formats.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact conversion to f64 (numerator / denominator in floating point).
pub fn rat_to_f64(x: &Rat) -> f64 {
    // Good enough for desk-scale magnitudes; large values only occur in
    // numerics where f64 is the contract anyway.
    let n = x.numer();
    let d = x.denom();
    let nf = bigint_to_f64(n);
    let df = bigint_to_f64(d);
    nf / df
}

fn bigint_to_f64(n: &Int) -> f64 {
    // BigInt implements ToPrimitive, but going through a string is robust for
    // the sizes we meet and keeps the sign handling obvious.
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or_else(|| {
        if n.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat("-4/6").unwrap(), rat_frac(-2, 3));
        assert_eq!(format_rat(&rat_frac(-2, 3)), "-2/3");
        assert_eq!(format_rat(&rat(5)), "5");
        assert!(parse_rat("1/0").is_none());
    }
}
