//! Exact rational arithmetic for four families of rational triangles and the
//! congruent-number classes they generate.
//!
//! Everything is computed over arbitrary-precision rationals; no float ever
//! appears. The four families, each a genus-zero curve with an explicit
//! rational parametrization:
//!
//! * [`tau_curve`] — Heron triangles with a prescribed angle `θ`
//!   (through `τ = tan(θ/2)`) circumscribing the unit circle, the curve
//!   `xy = τ(x + y) + 1`, its integer points, and the numbers `n = τxy`.
//! * [`ellipse`] — right triangles tightly circumscribing an ellipse of area
//!   π, reduced by a determinant-one affine map to the unit circle and the
//!   curve `xy = x + y + 1`; includes the triangles of area `t(t+1)(t+2)`.
//! * [`circumcircle`] — right triangles inscribed in a circle of rational
//!   radius, parametrized over the open unit interval.
//! * [`excircle`] — right triangles normalized so a chosen excircle has
//!   radius one, one family per excircle.
//!
//! Areas are classified modulo nonzero rational squares by
//! [`exact::squarefree_class`], which maps every positive rational to the
//! unique squarefree positive integer in its class. The [`record`] module
//! serializes generated triangles as self-verifying JSON lines.

pub mod circumcircle;
pub mod ellipse;
mod error;
pub mod exact;
pub mod excircle;
pub mod record;
pub mod right_triangle;
pub mod tables;
pub mod tau_curve;

pub use error::{Error, Result};
pub use exact::{FactorConfig, Rat, SquarefreeClass};
pub use right_triangle::RightTriangle;
