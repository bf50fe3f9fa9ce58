use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u32 = 17;

/// Coefficient field: a prime field F_p (p odd, below 2^31) or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u32),
    Rational,
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(DEFAULT_PRIME)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) || p >= 1 << 31 {
            return Err(Error::InvalidField(format!(
                "{p} is not an odd prime below 2^31"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }

    pub fn zero(&self) -> Coefficient {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coefficient {
        match *self {
            Field::Prime(p) => Coefficient::Mod {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
            Field::Rational => Coefficient::Rational(BigRational::from_integer(v.into())),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coefficient {
        match *self {
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Coefficient::Mod {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
            Field::Rational => Coefficient::Rational(BigRational::from_integer(v.clone())),
        }
    }

    /// Parses `"n"` or `"n/d"` with arbitrary-size integers; over F_p the
    /// value is reduced and a denominator is inverted.
    pub fn parse(&self, text: &str) -> Result<Coefficient> {
        let bad = || Error::MalformedCoefficient(text.to_string());
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        let n = self.from_bigint(&num);
        let d = self.from_bigint(&den);
        let inv = d.inv().ok_or_else(bad)?;
        Ok(&n * &inv)
    }

    pub fn contains(&self, c: &Coefficient) -> bool {
        c.field() == *self
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

/// A field element. Residues are kept in `[0, p)`; rationals are reduced
/// with a positive denominator.
///
/// Arithmetic between elements of different fields is a programming error
/// and panics; containers check their field before combining values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Mod { value: u32, modulus: u32 },
    Rational(BigRational),
}

impl Coefficient {
    pub fn field(&self) -> Field {
        match self {
            Coefficient::Mod { modulus, .. } => Field::Prime(*modulus),
            Coefficient::Rational(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Mod { value, .. } => *value == 0,
            Coefficient::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Mod { value, .. } => *value == 1,
            Coefficient::Rational(q) => q.is_one(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Coefficient> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Coefficient::Mod { value, modulus } => Coefficient::Mod {
                value: inverse_mod(*value, *modulus),
                modulus: *modulus,
            },
            Coefficient::Rational(q) => Coefficient::Rational(q.recip()),
        })
    }

    /// The residue, when this is an F_p element.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Coefficient::Mod { value, .. } => Some(*value),
            Coefficient::Rational(_) => None,
        }
    }
}

/// Inverse of a nonzero residue by the extended Euclidean algorithm.
pub(crate) fn inverse_mod(a: u32, p: u32) -> u32 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "{a} is not invertible mod {p}");
    t0.rem_euclid(p as i64) as u32
}

fn check_same(a: &Coefficient, b: &Coefficient) -> u32 {
    match (a, b) {
        (Coefficient::Mod { modulus: p, .. }, Coefficient::Mod { modulus: q, .. }) if p == q => *p,
        (Coefficient::Rational(_), Coefficient::Rational(_)) => 0,
        _ => panic!("coefficient field mismatch: {} vs {}", a.field(), b.field()),
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        let p = check_same(self, rhs);
        match (self, rhs) {
            (Coefficient::Mod { value: a, .. }, Coefficient::Mod { value: b, .. }) => {
                Coefficient::Mod {
                    value: ((*a as u64 + *b as u64) % p as u64) as u32,
                    modulus: p,
                }
            }
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            _ => unreachable!(),
        }
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        let p = check_same(self, rhs);
        match (self, rhs) {
            (Coefficient::Mod { value: a, .. }, Coefficient::Mod { value: b, .. }) => {
                Coefficient::Mod {
                    value: ((*a as u64 * *b as u64) % p as u64) as u32,
                    modulus: p,
                }
            }
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            _ => unreachable!(),
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        match self {
            Coefficient::Mod { value, modulus } => Coefficient::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            Coefficient::Rational(q) => Coefficient::Rational(-q),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Coefficient {
            type Output = Coefficient;
            fn $m(self, rhs: Coefficient) -> Coefficient {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Mod { value, .. } => write!(f, "{value}"),
            Coefficient::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

impl Coefficient {
    /// True when the value prints with a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Mod { .. } => false,
            Coefficient::Rational(q) => q.is_negative(),
        }
    }
}
