//! Text forms of numbers, points and foliations used on the command line,
//! in config files and in point lists.
//!
//! Numbers are read exactly: `p/q`, plain decimals and decimals with an
//! exponent all become rationals.

use anyhow::{anyhow, bail, Context, Result};
use gmcone::teich::IdealPoint;
use gmcone::{MeasuredFoliation, Real, TeichPoint};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

pub fn parse_real(s: &str) -> Result<Real> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p
            .trim()
            .parse()
            .with_context(|| format!("bad numerator in {s:?}"))?;
        let q: BigInt = q
            .trim()
            .parse()
            .with_context(|| format!("bad denominator in {s:?}"))?;
        if q == BigInt::from(0) {
            bail!("zero denominator in {s:?}");
        }
        return Ok(Real::from(BigRational::new(p, q)));
    }
    parse_decimal(s).ok_or_else(|| anyhow!("not a number: {s:?}"))
}

fn parse_decimal(s: &str) -> Option<Real> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(k) => (&s[..k], s[k + 1..].parse::<i32>().ok()?),
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
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let factor = if scale >= 0 {
        Pow::pow(&ten, scale as u32)
    } else {
        BigRational::one() / Pow::pow(&ten, (-scale) as u32)
    };
    let mut value = BigRational::from_integer(all) * factor;
    if negative {
        value = -value;
    }
    Some(Real::from(value))
}

fn split_pair(s: &str) -> Result<(Real, Real)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("expected two comma-separated numbers, got {s:?}"))?;
    Ok((parse_real(a)?, parse_real(b)?))
}

/// `"x,y"`, or `"i"` for the square torus.
pub fn parse_tau(s: &str) -> Result<TeichPoint> {
    if s.trim() == "i" {
        return Ok(TeichPoint::i());
    }
    let (x, y) = split_pair(s)?;
    Ok(TeichPoint::new(x, y)?)
}

/// `"a,b"`.
pub fn parse_foliation(s: &str) -> Result<MeasuredFoliation> {
    let (a, b) = split_pair(s)?;
    Ok(MeasuredFoliation::new(a, b))
}

/// `"inf"` or a real number.
pub fn parse_ideal(s: &str) -> Result<IdealPoint> {
    match s.trim() {
        "inf" | "infinity" | "∞" => Ok(IdealPoint::Infinity),
        other => Ok(IdealPoint::Finite(parse_real(other)?)),
    }
}

/// Inverse of [`parse_tau`] for exact points.
pub fn format_tau(t: &TeichPoint) -> String {
    format!("{},{}", t.re(), t.im())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_are_exact() {
        assert_eq!(parse_real("3/4").unwrap(), Real::ratio(3, 4));
        assert_eq!(parse_real("-0.25").unwrap(), Real::ratio(-1, 4));
        assert_eq!(parse_real("1e-3").unwrap(), Real::ratio(1, 1000));
        assert_eq!(parse_real("2.5E2").unwrap(), Real::from(250));
        assert_eq!(parse_real(".5").unwrap(), Real::ratio(1, 2));
        assert!(parse_real("0.1").unwrap().is_exact());
        assert!(parse_real("abc").is_err());
        assert!(parse_real("1/0").is_err());
        assert!(parse_real("").is_err());
    }

    #[test]
    fn points() {
        assert_eq!(parse_tau("i").unwrap(), TeichPoint::i());
        assert_eq!(parse_tau("0,1").unwrap(), TeichPoint::i());
        assert!(parse_tau("0,-1").is_err());
        assert_eq!(
            parse_foliation("3, 4").unwrap(),
            MeasuredFoliation::new(3, 4)
        );
        assert_eq!(parse_ideal("inf").unwrap(), IdealPoint::Infinity);
        assert_eq!(
            parse_ideal("-3/2").unwrap(),
            IdealPoint::Finite(Real::ratio(-3, 2))
        );
        let t = TeichPoint::new(Real::ratio(1, 2), 3).unwrap();
        assert_eq!(parse_tau(&format_tau(&t)).unwrap(), t);
    }
}
