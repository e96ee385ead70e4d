//! Heron triangles with a prescribed angle, tightly circumscribing the unit
//! circle.
//!
//! Fix a positive rational `tau = tan(theta/2)`. Rational points of the
//! hyperbola
//!
//! ```text
//! x y = tau (x + y) + 1
//! ```
//!
//! with `x, y > 0` correspond to triangles with sides
//! `(y + 1/tau, x + 1/tau, x + y)`, angle `theta` between the first two, and
//! inscribed circle of radius exactly one. Every such triangle has rational
//! area `x y / tau`, so its area class modulo rational squares — the
//! squarefree part of `n = tau x y` — is realized by a rational triangle
//! with angle `theta`.

use crate::error::{Error, Result};
use crate::exact::{
    signed_divisors_with, squarefree_class_with, FactorConfig, Rat, SquarefreeClass,
};
use num::{BigInt, Zero};

/// A positive rational `tau = tan(theta/2)` pinning the angle `theta`.
///
/// `tau = 1` is the right angle, where the construction specializes to the
/// classical congruent-number setting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tau(Rat);

impl Tau {
    pub fn new(value: Rat) -> Result<Tau> {
        if !value.is_positive() {
            return Err(Error::InvalidParameter("tau must be positive"));
        }
        Ok(Tau(value))
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    pub fn recip(&self) -> Rat {
        self.0.recip()
    }

    /// `sin(theta) = 2 tau / (1 + tau^2)`
    pub fn sin(&self) -> Rat {
        Rat::from(2) * &self.0 / (Rat::one() + self.0.square())
    }

    /// `cos(theta) = (1 - tau^2) / (1 + tau^2)`
    pub fn cos(&self) -> Rat {
        (Rat::one() - self.0.square()) / (Rat::one() + self.0.square())
    }
}

/// A rational point on `x y = tau (x + y) + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XTauPoint {
    tau: Tau,
    x: Rat,
    y: Rat,
}

impl XTauPoint {
    /// Checks the curve equation before accepting the coordinates.
    pub fn new(tau: Tau, x: Rat, y: Rat) -> Result<XTauPoint> {
        if &x * &y != tau.value() * (&x + &y) + Rat::one() {
            return Err(Error::NotOnCurve);
        }
        Ok(XTauPoint { tau, x, y })
    }

    pub fn tau(&self) -> &Tau {
        &self.tau
    }

    pub fn x(&self) -> &Rat {
        &self.x
    }

    pub fn y(&self) -> &Rat {
        &self.y
    }

    /// The curve is symmetric in `x` and `y`; swapping reflects the triangle.
    pub fn swapped(&self) -> XTauPoint {
        XTauPoint {
            tau: self.tau.clone(),
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }
}

/// Solves the curve equation for `y`: the point `(x, (tau x + 1)/(x - tau))`.
///
/// `x = tau` is the pole of the parametrization.
pub fn point_from_x(tau: &Tau, x: &Rat) -> Result<XTauPoint> {
    if x == tau.value() {
        return Err(Error::PoleInput);
    }
    let y = (tau.value() * x + Rat::one()) / (x - tau.value());
    Ok(XTauPoint {
        tau: tau.clone(),
        x: x.clone(),
        y,
    })
}

/// All integer points of the curve, for `m = 1/tau` a positive integer.
///
/// Substituting `x = tau (d + 1)` turns the curve equation into a divisor
/// condition: integer points correspond to divisors `d` of `m^2 + 1` (either
/// sign) with `d = -1 (mod m)`, via
///
/// ```text
/// (x, y) = ( (d + 1)/m , ((m^2 + 1)/d + 1)/m )
/// ```
///
/// and the congruence for the complementary divisor comes for free because
/// `m^2 + 1 = 1 (mod m)`. Points come back sorted by `x`.
pub fn integer_points(tau: &Tau) -> Result<Vec<(BigInt, BigInt)>> {
    integer_points_with(tau, &FactorConfig::default())
}

/// [`integer_points`] under an explicit factorization effort limit.
pub fn integer_points_with(tau: &Tau, config: &FactorConfig) -> Result<Vec<(BigInt, BigInt)>> {
    let recip = tau.recip();
    if !recip.is_integer() {
        return Err(Error::NonIntegralInverseTau);
    }
    let m = recip.numer().clone();
    let mm1: BigInt = &m * &m + 1;
    let mut points = Vec::new();
    for d in signed_divisors_with(mm1.magnitude(), config)? {
        if ((&d + 1u8) % &m).is_zero() {
            let e: BigInt = &mm1 / &d;
            let x = (&d + 1u8) / &m;
            let y = (&e + 1u8) / &m;
            points.push((x, y));
        }
    }
    points.sort();
    Ok(points)
}

/// Brute-force scan of the box `|x|, |y| <= bound` for integer points.
///
/// Slow and assumption-free (no integrality condition on `1/tau`), which
/// makes it the cross-check for the divisor construction above.
pub fn integer_points_in_box(tau: &Tau, bound: u32) -> Vec<(BigInt, BigInt)> {
    let limit = Rat::from(i64::from(bound));
    let mut points = Vec::new();
    for xi in -i64::from(bound)..=i64::from(bound) {
        let x = Rat::from(xi);
        if &x == tau.value() {
            continue;
        }
        let point = point_from_x(tau, &x).expect("pole excluded");
        if point.y().is_integer() && point.y().abs() <= limit {
            points.push((BigInt::from(xi), point.y().numer().clone()));
        }
    }
    points
}

/// The triangle attached to a curve point with `x, y > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeronTriangle {
    tau: Tau,
    a: Rat,
    b: Rat,
    c: Rat,
}

/// Builds the triangle `(y + 1/tau, x + 1/tau, x + y)` at a curve point.
///
/// Points with `x <= 0` or `y <= 0` do not bound a triangle and are refused.
pub fn heron_triangle(point: &XTauPoint) -> Result<HeronTriangle> {
    if !(point.x().is_positive() && point.y().is_positive()) {
        return Err(Error::DegenerateTriangle);
    }
    let inv = point.tau().recip();
    Ok(HeronTriangle {
        tau: point.tau().clone(),
        a: point.y() + &inv,
        b: point.x() + &inv,
        c: point.x() + point.y(),
    })
}

impl HeronTriangle {
    pub fn tau(&self) -> &Tau {
        &self.tau
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    pub fn to_sides(&self) -> [Rat; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    /// `s = x + y + 1/tau`
    pub fn semiperimeter(&self) -> Rat {
        (&self.a + &self.b + &self.c) / Rat::from(2)
    }

    /// Half the product of the enclosing sides times `sin(theta)`.
    pub fn area(&self) -> Rat {
        &self.a * &self.b * self.tau.sin() / Rat::from(2)
    }

    /// Area over semiperimeter — equal to one for every curve triangle.
    pub fn inradius(&self) -> Rat {
        self.area() / self.semiperimeter()
    }
}

/// The value `n = tau x y` realized by the triangle at this point, together
/// with its squarefree class.
///
/// `n` differs from the triangle area `x y / tau` by the square `tau^2`, so
/// the class is the area's class: a `tau`-congruent number.
pub fn tau_congruent_number(point: &XTauPoint) -> Result<(Rat, SquarefreeClass)> {
    tau_congruent_number_with(point, &FactorConfig::default())
}

/// [`tau_congruent_number`] under an explicit factorization effort limit.
pub fn tau_congruent_number_with(
    point: &XTauPoint,
    config: &FactorConfig,
) -> Result<(Rat, SquarefreeClass)> {
    if !(point.x().is_positive() && point.y().is_positive()) {
        return Err(Error::DegenerateTriangle);
    }
    let n = point.tau().value() * point.x() * point.y();
    let class = squarefree_class_with(&n, config)?;
    Ok((n, class))
}
