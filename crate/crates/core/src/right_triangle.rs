//! Right triangles with rational sides.

use crate::error::{Error, Result};
use crate::exact::Rat;

/// A right triangle with rational legs `a`, `b` and hypotenuse `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightTriangle {
    a: Rat,
    b: Rat,
    c: Rat,
}

impl RightTriangle {
    /// Validates positivity and `a^2 + b^2 = c^2`.
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<RightTriangle> {
        if !(a.is_positive() && b.is_positive() && c.is_positive()) {
            return Err(Error::InvalidParameter("side lengths must be positive"));
        }
        if a.square() + b.square() != c.square() {
            return Err(Error::InvalidParameter(
                "sides do not satisfy a^2 + b^2 = c^2",
            ));
        }
        Ok(RightTriangle { a, b, c })
    }

    pub(crate) fn new_unchecked(a: Rat, b: Rat, c: Rat) -> RightTriangle {
        debug_assert!(a.square() + b.square() == c.square());
        RightTriangle { a, b, c }
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

    pub fn legs(&self) -> (&Rat, &Rat) {
        (&self.a, &self.b)
    }

    pub fn hypotenuse(&self) -> &Rat {
        &self.c
    }

    pub fn to_sides(&self) -> [Rat; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn area(&self) -> Rat {
        &self.a * &self.b / Rat::from(2)
    }

    pub fn semiperimeter(&self) -> Rat {
        (&self.a + &self.b + &self.c) / Rat::from(2)
    }

    /// Half the hypotenuse: the circumscribed circle of a right triangle is
    /// centered on the hypotenuse midpoint.
    pub fn circumradius(&self) -> Rat {
        &self.c / Rat::from(2)
    }

    /// Scales every side by `factor`, which must be positive.
    pub fn scaled(&self, factor: &Rat) -> Result<RightTriangle> {
        if !factor.is_positive() {
            return Err(Error::InvalidParameter("scale factor must be positive"));
        }
        Ok(RightTriangle {
            a: &self.a * factor,
            b: &self.b * factor,
            c: &self.c * factor,
        })
    }
}
