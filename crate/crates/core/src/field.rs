//! Exact scalars over the rationals and prime fields.
//!
//! Every other module works with [`Scalar`] values tagged by a [`FieldSpec`].
//! Rationals are arbitrary precision and always reduced; residues are kept in
//! `[0, p)` with `p < 2^31`, so a product of two residues fits in a `u64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// The prime field `F_p`; `p` must be a prime below `2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= MAX_MODULUS {
            return Err(Error::InvalidField(format!("modulus {p} exceeds 2^31")));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// Number of elements for a finite field.
    pub fn order(self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(p as u64),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p as u64,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(Box::new(BigRational::from_integer(n.into()))),
            FieldSpec::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// `num / den` in this field; `den` must be nonzero in the field.
    pub fn fraction(self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        Ok(Scalar::mul(&self.from_i64(num), &d.inv()?))
    }

    /// All field elements in the order `0, 1, ..., p-1` (finite fields only).
    pub fn elements(self) -> Result<impl Iterator<Item = Scalar>> {
        match self {
            FieldSpec::Rationals => Err(Error::FieldNotFinite(self)),
            FieldSpec::Prime(p) => Ok((0..p).map(move |value| Scalar::Modular { value, modulus: p })),
        }
    }

    /// Parses the scalar text encoding: `a` or `a/b` over Q, a decimal residue over F_p.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let bad = || Error::ScalarParse {
            text: text.to_string(),
            field: self,
        };
        let t = text.trim();
        match self {
            FieldSpec::Rationals => {
                let (num, den) = match t.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (t, "1"),
                };
                let num = BigInt::from_str(num).map_err(|_| bad())?;
                let den = BigInt::from_str(den).map_err(|_| bad())?;
                if !den.is_positive() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(Box::new(BigRational::new(num, den))))
            }
            FieldSpec::Prime(p) => {
                let n = BigInt::from_str(t).map_err(|_| bad())?;
                let r = ((n % p) + p) % p;
                Ok(Scalar::Modular {
                    value: r.to_u32().ok_or_else(bad)?,
                    modulus: p,
                })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q` or `F_p` (also `F<p>` and `GF(<p>)`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Q" || t.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("F_")
            .or_else(|| t.strip_prefix('F'))
            .or_else(|| t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| Error::InvalidField(format!("unrecognised field {s:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("unrecognised field {s:?}")))?;
        FieldSpec::prime(p)
    }
}

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for all
/// `n < 3.3 * 10^24`, which covers every `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for &a in &BASES {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// An exact field element. Arithmetic operators panic on mixed fields; the
/// `try_*` methods report [`Error::FieldMismatch`] instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Box<BigRational>),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn spec(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.spec() == other.spec() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.spec(),
                right: other.spec(),
            })
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(Box::new(&**a + &**b)),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => Scalar::Modular {
                value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(Box::new(&**a - &**b)),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => Scalar::Modular {
                value: ((*a as u64 + *modulus as u64 - *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(Box::new(&**a * &**b)),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => Scalar::Modular {
                value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(Box::new(q.recip())),
            Scalar::Modular { value, modulus } => {
                // Fermat: a^(p-2)
                let p = *modulus as u64;
                let (mut base, mut e, mut acc) = (*value as u64, p - 2, 1u64);
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    e >>= 1;
                }
                Scalar::Modular {
                    value: acc as u32,
                    modulus: *modulus,
                }
            }
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.try_add(other).expect("scalar field mismatch")
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.try_sub(other).expect("scalar field mismatch")
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.try_mul(other).expect("scalar field mismatch")
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(Box::new(-&**q)),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// `self += a * b`, the inner step of every elimination loop.
    pub fn add_mul_assign(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (
                Scalar::Modular { value, modulus },
                Scalar::Modular { value: x, modulus: m1 },
                Scalar::Modular { value: y, modulus: m2 },
            ) => {
                assert!(*modulus == *m1 && *m1 == *m2, "scalar field mismatch");
                let p = *modulus as u64;
                *value = ((*value as u64 + (*x as u64 * *y as u64) % p) % p) as u32;
            }
            _ => *self = Scalar::add(self, &Scalar::mul(a, b)),
        }
    }

    /// Canonical form: reduced fraction or residue in range. Stored values are
    /// always canonical, so this is the identity on them.
    pub fn canonical(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(Box::new(BigRational::new(q.numer().clone(), q.denom().clone()))),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: value % modulus,
                modulus: *modulus,
            },
        }
    }

    /// Residue for F_p scalars.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Modular { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => {
                (p, a).cmp(&(q, b))
            }
            (Scalar::Rational(_), Scalar::Modular { .. }) => Ordering::Less,
            (Scalar::Modular { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$method(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        FieldSpec::Rationals.fraction(n, d).unwrap()
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(Scalar::mul(&q(1, 2), &q(2, 3)), q(1, 3));
        assert_eq!(q(-2, 5).inv().unwrap(), q(-5, 2));
        assert_eq!(q(1, 1).inv().unwrap(), q(1, 1));
        assert_eq!(q(2, 4).to_string(), "1/2");
        assert_eq!(q(-6, 3).to_string(), "-2");
    }

    #[test]
    fn modular_arithmetic() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(Scalar::add(&f5.from_i64(4), &f5.from_i64(3)), f5.from_i64(2));
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.from_i64(3).inv().unwrap(), f7.from_i64(5));
        assert_eq!(f7.zero().neg(), f7.zero());
        assert_eq!(FieldSpec::Rationals.zero().neg(), FieldSpec::Rationals.zero());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(FieldSpec::Rationals.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(FieldSpec::prime(3).unwrap().zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = FieldSpec::prime(3).unwrap().one();
        let b = FieldSpec::prime(5).unwrap().one();
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch { .. })));
        assert!(matches!(a.try_mul(&FieldSpec::Rationals.one()), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(2_147_483_659).is_err());
    }

    #[test]
    fn text_encoding() {
        let f = FieldSpec::Rationals;
        assert_eq!(f.parse_scalar("-3/6").unwrap(), q(-1, 2));
        assert_eq!(f.parse_scalar("7").unwrap(), q(7, 1));
        assert!(f.parse_scalar("1/0").is_err());
        assert!(f.parse_scalar("1/-2").is_err());
        assert!(f.parse_scalar("x").is_err());
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.parse_scalar("2").unwrap(), f3.from_i64(2));
        assert_eq!(f3.parse_scalar("-1").unwrap(), f3.from_i64(2));
        assert_eq!("F_3".parse::<FieldSpec>().unwrap(), f3);
        assert_eq!("GF(3)".parse::<FieldSpec>().unwrap(), f3);
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert!("F_9".parse::<FieldSpec>().is_err());
    }
}
