//! Classification of positive rationals modulo nonzero rational squares.

use crate::error::{Error, Result};
use crate::exact::factor::{factorize, FactorConfig};
use crate::exact::rat::Rat;
use num::{BigInt, BigUint, One};
use std::fmt;

/// The squarefree integer representing a positive rational modulo squares.
///
/// Two positive rationals have equal classes exactly when their ratio is the
/// square of a rational, so this is a complete invariant of `Q>0 / (Q*)^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquarefreeClass(BigUint);

impl SquarefreeClass {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_value(self) -> BigUint {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn as_rat(&self) -> Rat {
        Rat::from(BigInt::from(self.0.clone()))
    }
}

impl fmt::Display for SquarefreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl PartialEq<u64> for SquarefreeClass {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

/// Reduces a positive rational to its squarefree class representative.
///
/// `p/q` differs from `p*q` by the square `q^2`, and numerator and
/// denominator are coprime in canonical form, so the class is the product of
/// their individual squarefree parts.
pub fn squarefree_class(q: &Rat) -> Result<SquarefreeClass> {
    squarefree_class_with(q, &FactorConfig::default())
}

/// [`squarefree_class`] under an explicit factorization effort limit.
pub fn squarefree_class_with(q: &Rat, config: &FactorConfig) -> Result<SquarefreeClass> {
    if !q.is_positive() {
        return Err(Error::NonPositiveInput);
    }
    let numer = squarefree_part(q.numer().magnitude(), config)?;
    let denom = squarefree_part(q.denom().magnitude(), config)?;
    Ok(SquarefreeClass(numer * denom))
}

fn squarefree_part(n: &BigUint, config: &FactorConfig) -> Result<BigUint> {
    let mut part = BigUint::one();
    for (p, e) in factorize(n, config)? {
        if e % 2 == 1 {
            part *= p;
        }
    }
    Ok(part)
}

/// Whether a rational is the square of a rational.
///
/// Decided by integer square roots alone — in lowest terms a ratio is a
/// square exactly when numerator and denominator both are — so this route is
/// independent of the factorization above. Zero counts; negatives do not.
pub fn is_rational_square(q: &Rat) -> bool {
    if q.is_negative() {
        return false;
    }
    is_square(q.numer().magnitude()) && is_square(q.denom().magnitude())
}

fn is_square(n: &BigUint) -> bool {
    let root = n.sqrt();
    &root * &root == *n
}
