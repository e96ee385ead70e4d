//! Right triangles inscribed in a circle of rational radius.
//!
//! By Thales' theorem a right triangle inscribed in a circle of radius `R`
//! has its hypotenuse on a diameter, so `c = 2R`. Writing `t` for the tangent
//! of half an acute vertex angle, the sides are
//!
//! ```text
//! a = 2R (1 - t^2) / (1 + t^2),   b = 4R t / (1 + t^2),   c = 2R,
//! ```
//!
//! rational for `0 < t < 1`, with area `4 R^2 t (1 - t^2) / (1 + t^2)^2`.
//! Modulo rational squares the area reduces to `t (1 - t^2)`: the class does
//! not depend on the radius at all.

use crate::error::{Error, Result};
use crate::exact::{squarefree_class_with, FactorConfig, Rat, SquarefreeClass};
use crate::right_triangle::RightTriangle;

/// Radius and half-angle parameter for an inscribed right triangle, with
/// `radius > 0` and `0 < t < 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircumParam {
    radius: Rat,
    t: Rat,
}

impl CircumParam {
    pub fn new(radius: Rat, t: Rat) -> Result<CircumParam> {
        if !radius.is_positive() {
            return Err(Error::InvalidParameter("radius must be positive"));
        }
        if !t.is_positive() || t >= Rat::one() {
            return Err(Error::InvalidParameter(
                "t must lie strictly between 0 and 1",
            ));
        }
        Ok(CircumParam { radius, t })
    }

    pub fn radius(&self) -> &Rat {
        &self.radius
    }

    pub fn t(&self) -> &Rat {
        &self.t
    }
}

/// The inscribed right triangle at the given radius and parameter.
pub fn inscribed_triangle(param: &CircumParam) -> RightTriangle {
    let one = Rat::one();
    let t2 = param.t.square();
    let diameter = Rat::from(2) * &param.radius;
    let denom = &one + &t2;
    RightTriangle::new_unchecked(
        &diameter * (&one - &t2) / &denom,
        Rat::from(2) * &diameter * &param.t / &denom,
        diameter.clone(),
    )
}

/// The inscribed triangle's area together with its class modulo squares,
/// the squarefree part of `t (1 - t^2)`.
pub fn area_and_class(param: &CircumParam) -> Result<(Rat, SquarefreeClass)> {
    area_and_class_with(param, &FactorConfig::default())
}

/// [`area_and_class`] under an explicit factorization effort limit.
pub fn area_and_class_with(
    param: &CircumParam,
    config: &FactorConfig,
) -> Result<(Rat, SquarefreeClass)> {
    let area = inscribed_triangle(param).area();
    let class = squarefree_class_with(
        &(&param.t * (Rat::one() - param.t.square())),
        config,
    )?;
    Ok((area, class))
}
