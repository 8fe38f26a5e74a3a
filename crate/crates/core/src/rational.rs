//! Exact rationals. A thin layer over `num_rational::Ratio<i64>` adding the
//! text form used in descriptors and reports (`-3/7`, `5`).

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::Ratio<i64>;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n)
}

pub fn parse_rat(text: &str) -> Result<Rat> {
    let t = text.trim();
    let bad = || Error::Malformed(format!("`{t}` is not a rational number"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(Error::Malformed(format!("`{t}` has a zero denominator")));
            }
            Ok(Rat::new(n, d))
        }
        None => t.parse::<i64>().map(int).map_err(|_| bad()),
    }
}

pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of two positive rationals: the generator of
/// `aZ ∩ bZ`. For `a = p/q`, `b = r/s` in lowest terms this is
/// `lcm(p, r) / gcd(q, s)`.
pub fn rat_lcm(a: &Rat, b: &Rat) -> Rat {
    let num = a.numer().abs().lcm(&b.numer().abs());
    let den = a.denom().gcd(b.denom());
    Rat::new(num, den)
}

/// Generator of `aZ + bZ`: `gcd(p, r) / lcm(q, s)`.
pub fn rat_gcd(a: &Rat, b: &Rat) -> Rat {
    let num = a.numer().abs().gcd(&b.numer().abs());
    let den = a.denom().lcm(b.denom());
    Rat::new(num, den)
}

pub fn is_int(r: &Rat) -> bool {
    r.is_integer()
}

pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn one() -> Rat {
    Rat::one()
}

pub mod text {
    //! Serde adapter storing a `Rat` as its text form.
    use super::{format_rat, parse_rat, Rat};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rat(" -6 ").unwrap(), int(-6));
        assert_eq!(parse_rat("4/-8").unwrap(), rat(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(format_rat(&rat(30, 7)), "30/7");
        assert_eq!(format_rat(&int(-3)), "-3");
    }

    #[test]
    fn rational_lcm() {
        assert_eq!(rat_lcm(&rat(1, 2), &int(2)), int(2));
        assert_eq!(rat_lcm(&rat(2, 3), &rat(3, 4)), int(6));
        assert_eq!(rat_lcm(&rat(1, 2), &rat(1, 3)), int(1));
        assert_eq!(rat_gcd(&rat(1, 2), &rat(1, 3)), rat(1, 6));
    }
}
