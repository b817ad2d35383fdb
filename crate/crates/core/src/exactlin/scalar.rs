use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prime moduli must be below this bound so that products fit in a u64.
pub const PRIME_BOUND: u64 = 1 << 31;

/// The ground field of a computation: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Field {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "Fp")]
    Prime { p: u64 },
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field F_p. Fails unless `p` is a prime below [`PRIME_BOUND`].
    pub fn prime(p: u64) -> Result<Field> {
        if p >= PRIME_BOUND {
            return Err(Error::InvalidField(format!("modulus {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime { p })
    }

    /// Parses `q`, `Q`, or `fp:<p>`.
    pub fn parse(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let lower = t.to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad modulus in {s:?}")))?;
            return Field::prime(p);
        }
        Err(Error::InvalidField(format!(
            "expected q or fp:<p>, got {s:?}"
        )))
    }

    /// Re-checks a deserialized field.
    pub fn validate(self) -> Result<Field> {
        match self {
            Field::Rational => Ok(self),
            Field::Prime { p } => Field::prime(p),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime { p } => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime { p } => Scalar::Fp {
                value: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// The element `num/den`; fails when `den` vanishes in the field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.int(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::NotInvertible(format!("{den} is zero in {self}")))?;
        Ok(&self.int(num) * &inv)
    }

    /// Maps a rational number into the field.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Q(q.clone())),
            Field::Prime { p } => {
                let pm = BigInt::from(p);
                let n = q.numer().mod_floor(&pm).to_u64().unwrap_or(0);
                let d = q.denom().mod_floor(&pm).to_u64().unwrap_or(0);
                if d == 0 {
                    return Err(Error::NotInvertible(format!(
                        "denominator of {q} vanishes mod {p}"
                    )));
                }
                let den = Scalar::Fp { value: d, p };
                Ok(&Scalar::Fp { value: n, p } * &den.inv().expect("nonzero"))
            }
        }
    }

    /// Parses a scalar written as `n`, `n/d`, or `r mod p`.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let t = s.trim();
        if let Some((r, m)) = t.split_once("mod") {
            let p: u64 = m
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad modulus in {s:?}")))?;
            if self != (Field::Prime { p }) {
                return Err(Error::FieldMismatch(self, Field::Prime { p }));
            }
            let q = parse_rational(r.trim())?;
            return self.from_rational(&q);
        }
        self.from_rational(&parse_rational(t)?)
    }

    pub fn contains(self, s: &Scalar) -> bool {
        s.field() == self
    }
}

fn parse_rational(t: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not an exact rational: {t:?}"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {t:?}")));
    }
    Ok(BigRational::new(n, d))
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime { p } => write!(f, "F{p}"),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator; residues lie in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { value: u64, p: u64 },
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

#[track_caller]
fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { value, p } => Scalar::Fp {
                value: mod_pow(*value, p - 2, *p),
                p: *p,
            },
        })
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self * other)
    }

    /// `self += a * b`, the inner step of every matrix product.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        match (&mut *self, a, b) {
            (Scalar::Q(s), Scalar::Q(x), Scalar::Q(y)) => *s += x * y,
            (
                Scalar::Fp { value, p },
                Scalar::Fp { value: x, p: px },
                Scalar::Fp { value: y, p: py },
            ) if p == px && p == py => *value = (*value + x * y % *p) % *p,
            _ => {
                let f = self.field();
                panic!(
                    "scalar field mismatch in add_mul: {f}, {}, {}",
                    a.field(),
                    b.field()
                )
            }
        }
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    #[track_caller]
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => Scalar::Fp {
                value: (a + b) % p,
                p: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    #[track_caller]
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => Scalar::Fp {
                value: (a + p - b) % p,
                p: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    #[track_caller]
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => Scalar::Fp {
                value: a * b % p,
                p: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { value, p } => Scalar::Fp {
                value: (p - value) % p,
                p: *p,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            #[track_caller]
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else if q.is_negative() {
                    write!(f, "-{}/{}", q.numer().abs(), q.denom())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { value, p } => write!(f, "{value} mod {p}"),
        }
    }
}

/// Scalars serialize as their display string, e.g. `"-3/4"` or `"2 mod 5"`.
impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(7).is_ok());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(PRIME_BOUND + 11).is_err());
        assert_eq!(Field::parse("fp:5").unwrap(), Field::Prime { p: 5 });
        assert_eq!(Field::parse("Q").unwrap(), Field::Rational);
        assert!(Field::parse("fp:4").is_err());
    }

    #[test]
    fn rational_display_roundtrip() {
        let q = Field::Rational;
        for s in ["0", "1", "-3/4", "5/2", "-7"] {
            assert_eq!(q.parse_scalar(s).unwrap().to_string(), s);
        }
        assert_eq!(q.parse_scalar("6/4").unwrap().to_string(), "3/2");
        assert!(q.parse_scalar("0.5").is_err());
    }

    #[test]
    fn prime_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.int(3);
        let b = f.int(5);
        assert_eq!((&a + &b).to_string(), "1 mod 7");
        assert_eq!((&a * &b).to_string(), "1 mod 7");
        assert_eq!(&a * &a.inv().unwrap(), f.one());
        assert_eq!(f.ratio(1, 2).unwrap(), f.int(4));
        assert_eq!(f.parse_scalar("3 mod 7").unwrap(), a);
        assert!(f.parse_scalar("3 mod 5").is_err());
        assert!(f.ratio(1, 7).is_err());
    }

    #[test]
    fn mixed_fields_error() {
        let a = Field::Rational.one();
        let b = Field::prime(3).unwrap().one();
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_fields_panic_in_operator() {
        let _ = &Field::Rational.one() + &Field::prime(3).unwrap().one();
    }
}
