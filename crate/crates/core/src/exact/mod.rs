//! Exact scalar arithmetic: arbitrary-precision rationals, integer
//! factorization, squarefree reduction, and a deterministic enumeration of
//! the positive rationals.

mod factor;
mod rat;
mod rationals;
mod squarefree;

pub use factor::{factorize, signed_divisors, signed_divisors_with, FactorConfig};
pub use rat::{ParseRatError, Rat};
pub use rationals::SternBrocot;
pub use squarefree::{
    is_rational_square, squarefree_class, squarefree_class_with, SquarefreeClass,
};
