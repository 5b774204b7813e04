//! Rational scalars and dense vectors over them.
//!
//! `BigRational` already keeps itself in lowest terms with a positive
//! denominator, and its `Display`/`FromStr` use the `p/q` (or `p`) form used
//! in every report this crate produces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;
pub type Vector = Vec<Scalar>;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn ivec(v: &[i64]) -> Vector {
    v.iter().map(|&x| int(x)).collect()
}

pub fn zeros(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"-0.25"`.
pub fn parse(s: &str) -> Result<Scalar> {
    let t = s.trim();
    if let Some((whole, fracpart)) = t.split_once('.') {
        if fracpart.is_empty() || !fracpart.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad rational literal {s:?}")));
        }
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), fracpart);
        let num: BigInt = digits.parse().map_err(|_| Error::Parse(format!("bad rational literal {s:?}")))?;
        let den = num_traits::pow(BigInt::from(10), fracpart.len());
        let r = Scalar::new(num, den);
        return Ok(if neg { -r } else { r });
    }
    t.parse::<Scalar>().map_err(|_| Error::Parse(format!("bad rational literal {s:?}")))
}

/// Parses a comma separated list of rationals, e.g. `"0,0,1/2"`.
pub fn parse_list(s: &str) -> Result<Vector> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Scalar], c: &Scalar) -> Vector {
    a.iter().map(|x| x * c).collect()
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn sign(x: &Scalar) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub fn is_integer_vec(a: &[Scalar]) -> bool {
    a.iter().all(|x| x.is_integer())
}

/// Divides an integer vector by the gcd of its entries. Non-integer or zero
/// vectors are returned unchanged.
pub fn primitive(a: &[Scalar]) -> Vector {
    if !is_integer_vec(a) || is_zero_vec(a) {
        return a.to_vec();
    }
    let g = a.iter().fold(BigInt::zero(), |g, x| g.gcd(x.numer()));
    a.iter().map(|x| Scalar::from_integer(x.numer() / &g)).collect()
}

/// Positive rescaling that makes the first nonzero entry equal to `±1`.
/// Two vectors are positive multiples of each other iff their normalized
/// forms agree.
pub fn normalize_direction(a: &[Scalar]) -> Vector {
    match a.iter().find(|x| !x.is_zero()) {
        Some(p) => {
            let c = p.abs().recip();
            scale(a, &c)
        }
        None => a.to_vec(),
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_literals() {
        let x = parse("6/-4").unwrap();
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(parse("7").unwrap().to_string(), "7");
        assert_eq!(parse("-0.25").unwrap(), frac(-1, 4));
        assert!(parse("1/0x").is_err());
        assert_eq!(parse_list("0, 0,1/2").unwrap(), vec![int(0), int(0), frac(1, 2)]);
    }

    #[test]
    fn primitive_divides_gcd() {
        assert_eq!(primitive(&ivec(&[2, -4, 6])), ivec(&[1, -2, 3]));
        assert_eq!(primitive(&ivec(&[0, 0])), ivec(&[0, 0]));
    }
}
