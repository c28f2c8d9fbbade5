//! Exact coefficient fields: the rationals and prime fields GF(p).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default prime used for rank computations.
pub const DEFAULT_PRIME: u32 = 32003;

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u32),
}

/// A field element. The variant always matches the owning [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    P(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::InvalidField(format!("{p} is not a prime")))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(BigRational::zero()),
            Field::Prime(_) => Coeff::P(0),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            Field::Rationals => Coeff::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Coeff::P(v.rem_euclid(*p as i64) as u32),
        }
    }

    /// Maps a rational into this field. Fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff> {
        match self {
            Field::Rationals => Ok(Coeff::Q(q.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let num = reduce_mod(q.numer(), &pb);
                let den = reduce_mod(q.denom(), &pb);
                if den == 0 {
                    return Err(Error::InvalidField(format!("denominator of {q} vanishes in GF({p})")));
                }
                Ok(self.mul(&Coeff::P(num), &self.inv(&Coeff::P(den))))
            }
        }
    }

    pub fn is_zero(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Q(q) => q.is_zero(),
            Coeff::P(v) => *v == 0,
        }
    }

    pub fn is_one(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Q(q) => q.is_one(),
            Coeff::P(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::P(x), Coeff::P(y)) => Coeff::P(((*x as u64 + *y as u64) % *p as u64) as u32),
            (Field::Rationals, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x + y),
            _ => mismatch(),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Prime(p), Coeff::P(x)) => Coeff::P(if *x == 0 { 0 } else { p - x }),
            (Field::Rationals, Coeff::Q(x)) => Coeff::Q(-x),
            _ => mismatch(),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Prime(p), Coeff::P(x), Coeff::P(y)) => Coeff::P(((*x as u64 * *y as u64) % *p as u64) as u32),
            (Field::Rationals, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x * y),
            _ => mismatch(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!self.is_zero(a), "inverse of zero");
        match (self, a) {
            (Field::Prime(p), Coeff::P(x)) => Coeff::P(inv_mod(*x, *p)),
            (Field::Rationals, Coeff::Q(x)) => Coeff::Q(x.recip()),
            _ => mismatch(),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    /// True when the element prints with a leading minus sign.
    pub fn is_negative(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Q(q) => q.is_negative(),
            Coeff::P(_) => false,
        }
    }

    pub fn parse_coeff(&self, s: &str) -> Result<Coeff> {
        let bad = || Error::Parse(format!("bad coefficient `{s}`"));
        let q = if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            BigRational::new(n, d)
        } else {
            BigRational::from_integer(s.trim().parse::<BigInt>().map_err(|_| bad())?)
        };
        self.from_rational(&q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "QQ" || s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("rationals") {
            return Ok(Field::Rationals);
        }
        let inner = s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')).unwrap_or(s);
        let p: u32 = inner
            .parse()
            .map_err(|_| Error::InvalidField(format!("unknown field `{s}`")))?;
        Field::prime(p)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(q) => write!(f, "{q}"),
            Coeff::P(v) => write!(f, "{v}"),
        }
    }
}

impl Coeff {
    /// Absolute value as printed (sign is emitted separately by the text format).
    pub(crate) fn abs_string(&self) -> String {
        match self {
            Coeff::Q(q) => q.abs().to_string(),
            Coeff::P(v) => v.to_string(),
        }
    }

    /// The element of GF(p) for a prime-field coefficient.
    pub fn as_mod(&self) -> Option<u32> {
        match self {
            Coeff::P(v) => Some(*v),
            Coeff::Q(_) => None,
        }
    }
}

#[cold]
fn mismatch() -> ! {
    panic!("coefficient does not belong to the ring's field")
}

fn reduce_mod(v: &BigInt, p: &BigInt) -> u32 {
    let r = ((v % p) + p) % p;
    r.to_u32().expect("residue fits in u32")
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let m = p as u64;
    let mut acc = 1u64;
    let mut base = a as u64 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = Field::Prime(DEFAULT_PRIME);
        for v in [1i64, 2, 3, 31999, -5] {
            let c = f.from_i64(v);
            assert!(f.is_one(&f.mul(&c, &f.inv(&c))));
        }
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(Field::prime(32004).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }

    #[test]
    fn rational_maps_into_prime_field() {
        let f = Field::Prime(7);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.from_rational(&half).unwrap(), Coeff::P(4));
        let bad = BigRational::new(BigInt::from(1), BigInt::from(7));
        assert!(f.from_rational(&bad).is_err());
    }

    #[test]
    fn field_text_round_trip() {
        for f in [Field::Rationals, Field::Prime(32003), Field::Prime(2)] {
            assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
        }
    }
}
