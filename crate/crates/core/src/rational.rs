//! Exact rationals and the small helpers built around them.
//!
//! `Rational` is `num_rational::BigRational`: arbitrary precision, always in
//! lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"7"`, `"-3/4"` or `" 2 / 6 "`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A small random rational `n/d` with `|n| <= num_bound`, `1 <= d <= den_bound`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, num_bound: i64, den_bound: i64) -> Rational {
    let n = rng.gen_range(-num_bound..=num_bound);
    let d = rng.gen_range(1..=den_bound.max(1));
    q_frac(n, d)
}

pub fn random_point<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_rational(rng, 9, 5)).collect()
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn rational_pow(r: &Rational, e: i32) -> Result<Rational> {
    if e >= 0 {
        Ok(num_traits::pow(r.clone(), e as usize))
    } else if r.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(num_traits::pow(r.recip(), e.unsigned_abs() as usize))
    }
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

/// Serde adapter writing rationals as `"num/den"` strings.
///
/// Deserialization also accepts bare JSON integers.
pub mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(i64),
        Str(String),
    }

    impl Raw {
        fn into_rational<E: serde::de::Error>(self) -> std::result::Result<Rational, E> {
            match self {
                Raw::Int(i) => Ok(q(i)),
                Raw::Str(s) => parse_rational(&s).map_err(E::custom),
            }
        }
    }

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        Raw::deserialize(d)?.into_rational()
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(
            v: &[Rational],
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&format_rational(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Rational>, D::Error> {
            Vec::<Raw>::deserialize(d)?
                .into_iter()
                .map(Raw::into_rational)
                .collect()
        }
    }

    pub mod opt_vec {
        use super::*;

        pub fn serialize<S: Serializer>(
            v: &Option<Vec<Rational>>,
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            match v {
                Some(v) => vec::serialize(v, s),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Option<Vec<Rational>>, D::Error> {
            Option::<Vec<Raw>>::deserialize(d)?
                .map(|v| v.into_iter().map(Raw::into_rational).collect())
                .transpose()
        }
    }
}
