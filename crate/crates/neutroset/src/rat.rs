use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "-1.2", "3", "0.05", "1/3", or "2.5e-1" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let err = || Error::BadRational(s.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rat::new(n, d));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| err())?),
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    let all: String = format!("{int_part}{frac_part}");
    if !all.chars().all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let numer: BigInt = all.parse().map_err(|_| err())?;
    let mut value = Rat::new(numer * BigInt::from(sign), BigInt::one());
    let scale = exp - frac_part.len() as i32;
    let ten = Rat::from_integer(BigInt::from(10));
    if scale > 0 {
        for _ in 0..scale {
            value *= ten.clone();
        }
    } else {
        for _ in 0..(-scale) {
            value /= ten.clone();
        }
    }
    Ok(value)
}

/// Renders exactly: finite decimal when the denominator is 2^a * 5^b, else "p/q".
pub fn format_rational(r: &Rat) -> String {
    let r = r.clone().reduced();
    let mut den = r.denom().clone();
    if den.is_one() {
        return r.numer().to_string();
    }
    let mut twos = 0u32;
    let mut fives = 0u32;
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let places = twos.max(fives);
    let mut scaled = r.numer().clone();
    for _ in 0..places.saturating_sub(twos) {
        scaled *= &two;
    }
    for _ in 0..places.saturating_sub(fives) {
        scaled *= &five;
    }
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let digits = if digits.len() <= places as usize {
        format!("{}{}", "0".repeat(places as usize + 1 - digits.len()), digits)
    } else {
        digits
    };
    let split = digits.len() - places as usize;
    format!(
        "{}{}.{}",
        if neg { "-" } else { "" },
        &digits[..split],
        &digits[split..]
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parses_decimals() {
        assert_eq!(r("1.2"), frac(6, 5));
        assert_eq!(r("-0.725"), frac(-29, 40));
        assert_eq!(r("3"), int(3));
        assert_eq!(r("6/15"), frac(2, 5));
        assert_eq!(r("-1.4"), frac(-7, 5));
        assert_eq!(r("2.5e-1"), frac(1, 4));
        assert_eq!(r("0.05"), frac(1, 20));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn formats_exactly() {
        assert_eq!(format_rational(&frac(6, 5)), "1.2");
        assert_eq!(format_rational(&frac(-29, 40)), "-0.725");
        assert_eq!(format_rational(&int(3)), "3");
        assert_eq!(format_rational(&frac(1, 3)), "1/3");
        assert_eq!(format_rational(&frac(-13, 160)), "-0.08125");
        assert_eq!(format_rational(&frac(0, 7)), "0");
    }

    #[test]
    fn round_trips() {
        for s in ["1.25", "-0.05", "0.14375", "2", "-1.2"] {
            assert_eq!(format_rational(&r(s)), s);
        }
    }
}
