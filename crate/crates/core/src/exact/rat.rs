use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// An exact rational number, always in canonical form: the denominator is
/// positive and coprime to the numerator, and zero is `0/1`.
///
/// The textual form used everywhere (display, parsing, serialization) is
/// `p/q`, with the `/q` part omitted when the denominator is one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `numer/denom` and reduces it to canonical form.
    ///
    /// Panics if `denom` is zero; use [`Rat::from_str`] for untrusted input.
    pub fn new<N, D>(numer: N, denom: D) -> Rat
    where
        N: Into<BigInt>,
        D: Into<BigInt>,
    {
        Rat(BigRational::new(numer.into(), denom.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Rat {
        Rat(self.0.recip())
    }

    pub fn square(&self) -> Rat {
        Rat(&self.0 * &self.0)
    }

    /// Integer power, with negative exponents inverting. Panics when raising
    /// zero to a negative power.
    pub fn pow(&self, exp: i32) -> Rat {
        Rat(self.0.pow(exp))
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }
}

impl From<u64> for Rat {
    fn from(n: u64) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat(BigRational::from_integer(n))
    }
}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Canonical form makes the (numer, denom) pair a faithful key.
        self.0.numer().hash(state);
        self.0.denom().hash(state);
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }

        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }

        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({self})")
    }
}

/// Failure to parse a `p/q` literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRatError {
    #[error("expected a rational in the form p or p/q")]
    Malformed,
    #[error("denominator is zero")]
    ZeroDenominator,
}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `p` or `p/q` where `p` is a (possibly negative) integer and
    /// `q` a positive integer; any sign belongs on the numerator.
    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        fn int(s: &str, signed: bool) -> Result<BigInt, ParseRatError> {
            let digits = s.strip_prefix('-').filter(|_| signed).unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseRatError::Malformed);
            }
            s.parse().map_err(|_| ParseRatError::Malformed)
        }

        match s.split_once('/') {
            None => Ok(Rat(BigRational::from_integer(int(s, true)?))),
            Some((n, d)) => {
                let numer = int(n, true)?;
                let denom = int(d, false)?;
                if denom.is_zero() {
                    return Err(ParseRatError::ZeroDenominator);
                }
                Ok(Rat(BigRational::new(numer, denom)))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
