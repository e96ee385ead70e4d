//! Right triangles circumscribing an ellipse of unit area.
//!
//! The ellipse `E_a` with equation
//!
//! ```text
//! (x - a)^2 / a^2  +  a^2 (y - 1/a)^2  =  1
//! ```
//!
//! has center `(a, 1/a)`, semi-axes `a` and `1/a`, and area pi. The affine
//! map `(x, y) -> (x/a, a y)` has determinant one and carries `E_a` onto the
//! circle of radius one centered at `(1, 1)`, so right triangles with legs on
//! the coordinate axes circumscribing `E_a` correspond, area for area, to
//! triangles circumscribing that circle.
//!
//! A circumscribing triangle in the circle picture has axis intercepts
//! `(x + 1, 0)` and `(0, y + 1)` where `(x, y)` runs over the hyperbola
//!
//! ```text
//! x y = x + y + 1,    equivalently    (x - 1)(y - 1) = 2,
//! ```
//!
//! rationally parametrized by `x = 1 + t`, `y = 1 + 2/t`. Pulling back gives
//! legs `u = a (t + 2)` and `v = (2 + 2/t) / a` and area
//! `(t + 1)(t + 2)/t`, whose class modulo rational squares is the squarefree
//! part of `t (t + 1)(t + 2)` — so products of consecutive integers appear as
//! areas of rational right triangles.

use crate::error::{Error, Result};
use crate::exact::{squarefree_class_with, FactorConfig, Rat, SquarefreeClass};
use crate::right_triangle::RightTriangle;

/// The unit-area ellipse `E_axis` with semi-axes `axis` and `1/axis`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipseSpec {
    axis: Rat,
}

impl EllipseSpec {
    pub fn new(axis: Rat) -> Result<EllipseSpec> {
        if !axis.is_positive() {
            return Err(Error::InvalidParameter("axis must be positive"));
        }
        Ok(EllipseSpec { axis })
    }

    pub fn axis(&self) -> &Rat {
        &self.axis
    }

    pub fn center(&self) -> (Rat, Rat) {
        (self.axis.clone(), self.axis.recip())
    }

    /// The determinant-one map `(x, y) -> (x/axis, axis * y)` sending
    /// `E_axis` to the unit circle centered at `(1, 1)`.
    pub fn affine_map(&self, point: &(Rat, Rat)) -> (Rat, Rat) {
        (&point.0 / &self.axis, &self.axis * &point.1)
    }

    /// Membership test for `E_axis`.
    pub fn contains(&self, point: &(Rat, Rat)) -> bool {
        let (u, v) = self.affine_map(point);
        (u - Rat::one()).square() + (v - Rat::one()).square() == Rat::one()
    }
}

/// A point of `x y = x + y + 1`, the locus of intercept pairs (shifted by
/// one) of lines tangent to the unit circle centered at `(1, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitCircleCurvePoint {
    x: Rat,
    y: Rat,
}

impl UnitCircleCurvePoint {
    /// Checks the curve equation before accepting the coordinates.
    pub fn new(x: Rat, y: Rat) -> Result<UnitCircleCurvePoint> {
        if &x * &y != &x + &y + Rat::one() {
            return Err(Error::NotOnCurve);
        }
        Ok(UnitCircleCurvePoint { x, y })
    }

    /// The parametrization `x = 1 + t`, `y = 1 + 2/t` for nonzero `t`.
    pub fn from_t(t: &Rat) -> Result<UnitCircleCurvePoint> {
        if t.is_zero() {
            return Err(Error::InvalidParameter("t must be nonzero"));
        }
        Ok(UnitCircleCurvePoint {
            x: Rat::one() + t,
            y: Rat::one() + Rat::from(2) / t,
        })
    }

    pub fn x(&self) -> &Rat {
        &self.x
    }

    pub fn y(&self) -> &Rat {
        &self.y
    }

    /// Recovers the parameter: `t = x - 1`.
    pub fn t(&self) -> Rat {
        &self.x - Rat::one()
    }
}

/// A right triangle with legs `u`, `v` on the coordinate axes circumscribing
/// `E_axis`.
///
/// `hypotenuse` is the hypotenuse length of the triangle's unit-circle image
/// `(u/axis, axis * v)`; the circumscribing triangle's own hypotenuse is
/// generally irrational, while the image's equals `x + y` exactly. Areas
/// agree because the map has determinant one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightTriangleLegs {
    axis: Rat,
    u: Rat,
    v: Rat,
    hypotenuse: Rat,
}

impl RightTriangleLegs {
    pub fn axis(&self) -> &Rat {
        &self.axis
    }

    pub fn u(&self) -> &Rat {
        &self.u
    }

    pub fn v(&self) -> &Rat {
        &self.v
    }

    pub fn hypotenuse(&self) -> &Rat {
        &self.hypotenuse
    }

    pub fn to_sides(&self) -> [Rat; 3] {
        [self.u.clone(), self.v.clone(), self.hypotenuse.clone()]
    }

    pub fn area(&self) -> Rat {
        &self.u * &self.v / Rat::from(2)
    }

    /// The unit-circle image `(u/axis, axis v, hypotenuse)` — a genuine
    /// rational right triangle.
    pub fn unit_image(&self) -> RightTriangle {
        RightTriangle::new_unchecked(
            &self.u / &self.axis,
            &self.axis * &self.v,
            self.hypotenuse.clone(),
        )
    }

    /// Scales all three lengths by a positive factor.
    pub fn scaled(&self, factor: &Rat) -> Result<RightTriangleLegs> {
        if !factor.is_positive() {
            return Err(Error::InvalidParameter("scale factor must be positive"));
        }
        Ok(RightTriangleLegs {
            axis: self.axis.clone(),
            u: &self.u * factor,
            v: &self.v * factor,
            hypotenuse: &self.hypotenuse * factor,
        })
    }
}

/// The circumscribing triangle at a curve point, which bounds a triangle
/// exactly when `x > 1` (both intercepts beyond the tangency window).
pub fn triangle_from_point(
    ellipse: &EllipseSpec,
    point: &UnitCircleCurvePoint,
) -> Result<RightTriangleLegs> {
    if point.x() <= &Rat::one() {
        return Err(Error::DegenerateTriangle);
    }
    let one = Rat::one();
    Ok(RightTriangleLegs {
        axis: ellipse.axis().clone(),
        u: ellipse.axis() * (point.x() + &one),
        v: (point.y() + &one) / ellipse.axis(),
        hypotenuse: point.x() + point.y(),
    })
}

/// [`triangle_from_point`] at the parameter value `t`, defined for `t > 0`.
pub fn triangle_from_t(ellipse: &EllipseSpec, t: &Rat) -> Result<RightTriangleLegs> {
    triangle_from_point(ellipse, &UnitCircleCurvePoint::from_t(t)?)
}

/// Area `(t + 1)(t + 2)/t` of the circumscribing triangle at `t > 0`, with
/// its class modulo squares: the squarefree part of `t (t + 1)(t + 2)`.
pub fn area_and_class(t: &Rat) -> Result<(Rat, SquarefreeClass)> {
    area_and_class_with(t, &FactorConfig::default())
}

/// [`area_and_class`] under an explicit factorization effort limit.
pub fn area_and_class_with(t: &Rat, config: &FactorConfig) -> Result<(Rat, SquarefreeClass)> {
    if t.is_zero() {
        return Err(Error::InvalidParameter("t must be nonzero"));
    }
    if !t.is_positive() {
        return Err(Error::DegenerateTriangle);
    }
    let one = Rat::one();
    let two = Rat::from(2);
    let area = (t + &one) * (t + &two) / t;
    let class = squarefree_class_with(&(t * (t + &one) * (t + &two)), config)?;
    Ok((area, class))
}

/// Clears denominators at an integer parameter: scaling the `axis = 1`
/// triangle at `t` by `t` gives the Pythagorean triple
/// `(t(t + 2), 2t + 2, t^2 + 2t + 2)` with area `t (t + 1)(t + 2)` — the
/// product of three consecutive integers, realized on the nose.
pub fn consecutive_product_triangle(t: u64) -> Result<RightTriangle> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be a positive integer"));
    }
    let t = Rat::from(t);
    let unit = EllipseSpec::new(Rat::one())?;
    let legs = triangle_from_t(&unit, &t)?.scaled(&t)?;
    RightTriangle::new(
        legs.u().clone(),
        legs.v().clone(),
        legs.hypotenuse().clone(),
    )
}
