//! Right triangles normalized so that a chosen excircle has radius one.
//!
//! For a triangle with area `D` and semiperimeter `s`, the excircle opposite
//! the side of length `x` has radius `D / (s - x)`. In a right triangle with
//! legs `a`, `b` and hypotenuse `c` these collapse to
//!
//! ```text
//! r_a = (a - b + c)/2,   r_b = (b - a + c)/2,   r_c = s = (a + b + c)/2,
//! ```
//!
//! and satisfy `r_a * r_b = D`. Fixing one exradius at one cuts out a
//! rational curve, giving a one-parameter family of triangles per choice:
//!
//! * opposite the first leg (`0 < x < 1`):  `(x + 1, 2x/(1 - x), (1 + x^2)/(1 - x))`
//! * opposite the second leg: the same family with the legs swapped
//! * opposite the hypotenuse: `(1 - y, 1 - x, x + y)` with `y = (1 - x)/(1 + x)`,
//!   the points of `x y + x + y = 1`
//!
//! with areas `x(x + 1)/(1 - x)` for the leg families and `x(1 - x)/(1 + x)`
//! opposite the hypotenuse. Scaling a triangle rescales every exradius by the
//! same factor and the area by its square, so each family catalogues the
//! congruent-number classes of all right triangles.

use crate::error::{Error, Result};
use crate::exact::{squarefree_class_with, FactorConfig, Rat, SquarefreeClass};
use crate::right_triangle::RightTriangle;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Which excircle is pinned: opposite the first leg, the second leg, or the
/// hypotenuse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExcircleKind {
    A,
    B,
    C,
}

impl ExcircleKind {
    pub const ALL: [ExcircleKind; 3] = [ExcircleKind::A, ExcircleKind::B, ExcircleKind::C];

    pub fn as_str(self) -> &'static str {
        match self {
            ExcircleKind::A => "a",
            ExcircleKind::B => "b",
            ExcircleKind::C => "c",
        }
    }
}

impl fmt::Display for ExcircleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExcircleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ExcircleKind> {
        match s {
            "a" | "A" => Ok(ExcircleKind::A),
            "b" | "B" => Ok(ExcircleKind::B),
            "c" | "C" => Ok(ExcircleKind::C),
            _ => Err(Error::InvalidParameter("excircle kind must be a, b, or c")),
        }
    }
}

/// The three exradii of a right triangle, by opposite side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exradii {
    pub r_a: Rat,
    pub r_b: Rat,
    pub r_c: Rat,
}

impl Exradii {
    pub fn get(&self, kind: ExcircleKind) -> &Rat {
        match kind {
            ExcircleKind::A => &self.r_a,
            ExcircleKind::B => &self.r_b,
            ExcircleKind::C => &self.r_c,
        }
    }
}

/// The exradii `D / (s - side)`, straight from the definition.
pub fn exradii(triangle: &RightTriangle) -> Exradii {
    let area = triangle.area();
    let s = triangle.semiperimeter();
    Exradii {
        r_a: &area / (&s - triangle.a()),
        r_b: &area / (&s - triangle.b()),
        r_c: &area / (&s - triangle.c()),
    }
}

/// The triangle of the one-parameter family for `kind`, at `0 < x < 1`.
pub fn triangle_with_unit_exradius(kind: ExcircleKind, x: &Rat) -> Result<RightTriangle> {
    if !x.is_positive() || x >= &Rat::one() {
        return Err(Error::InvalidParameter(
            "x must lie strictly between 0 and 1",
        ));
    }
    let one = Rat::one();
    match kind {
        ExcircleKind::A | ExcircleKind::B => {
            let first = x + &one;
            let second = Rat::from(2) * x / (&one - x);
            let hyp = (&one + x.square()) / (&one - x);
            match kind {
                ExcircleKind::A => RightTriangle::new(first, second, hyp),
                _ => RightTriangle::new(second, first, hyp),
            }
        }
        ExcircleKind::C => {
            let y = (&one - x) / (&one + x);
            RightTriangle::new(&one - &y, &one - x, x + &y)
        }
    }
}

/// Area and class modulo squares for the family triangle at `x`.
pub fn area_and_class(kind: ExcircleKind, x: &Rat) -> Result<(Rat, SquarefreeClass)> {
    area_and_class_with(kind, x, &FactorConfig::default())
}

/// [`area_and_class`] under an explicit factorization effort limit.
pub fn area_and_class_with(
    kind: ExcircleKind,
    x: &Rat,
    config: &FactorConfig,
) -> Result<(Rat, SquarefreeClass)> {
    let area = triangle_with_unit_exradius(kind, x)?.area();
    let class = squarefree_class_with(&area, config)?;
    Ok((area, class))
}

/// Scales the triangle so the chosen excircle has radius one. Exradii scale
/// linearly and the area by the square, so the class is untouched.
pub fn normalize_to_unit_exradius(triangle: &RightTriangle, kind: ExcircleKind) -> RightTriangle {
    let radius = exradii(triangle);
    triangle
        .scaled(&radius.get(kind).recip())
        .expect("exradii of a valid triangle are positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn tri(a: &str, b: &str, c: &str) -> RightTriangle {
        RightTriangle::new(r(a), r(b), r(c)).unwrap()
    }

    #[test]
    fn kinds_parse_and_print() {
        for kind in ExcircleKind::ALL {
            assert_eq!(kind.as_str().parse::<ExcircleKind>().unwrap(), kind);
        }
        assert_eq!("B".parse::<ExcircleKind>().unwrap(), ExcircleKind::B);
        assert!("d".parse::<ExcircleKind>().is_err());
        assert_eq!(serde_json::to_string(&ExcircleKind::C).unwrap(), "\"c\"");
    }

    #[test]
    fn exradii_of_the_three_four_five_triangle() {
        let e = exradii(&tri("3", "4", "5"));
        assert_eq!((e.r_a, e.r_b, e.r_c), (r("2"), r("3"), r("6")));
    }

    #[test]
    fn right_triangle_exradii_collapse_to_linear_forms() {
        for (a, b, c) in [("3", "4", "5"), ("5", "12", "13"), ("3/2", "2", "5/2")] {
            let t = tri(a, b, c);
            let e = exradii(&t);
            let two = Rat::from(2);
            assert_eq!(e.r_a, (t.a() - t.b() + t.c()) / &two);
            assert_eq!(e.r_b, (t.b() - t.a() + t.c()) / &two);
            assert_eq!(e.r_c, t.semiperimeter());
            assert_eq!(&e.r_a * &e.r_b, t.area());
        }
    }

    #[test]
    fn builds_the_published_family_triangles() {
        assert_eq!(
            triangle_with_unit_exradius(ExcircleKind::A, &r("1/2"))
                .unwrap()
                .to_sides(),
            [r("3/2"), r("2"), r("5/2")]
        );
        assert_eq!(
            triangle_with_unit_exradius(ExcircleKind::B, &r("1/2"))
                .unwrap()
                .to_sides(),
            [r("2"), r("3/2"), r("5/2")]
        );
        assert_eq!(
            triangle_with_unit_exradius(ExcircleKind::C, &r("1/3"))
                .unwrap()
                .to_sides(),
            [r("1/2"), r("2/3"), r("5/6")]
        );
    }

    #[test]
    fn the_selected_exradius_is_one() {
        for kind in ExcircleKind::ALL {
            for x in ["1/2", "1/3", "2/3", "9/10", "1/10"] {
                let t = triangle_with_unit_exradius(kind, &r(x)).unwrap();
                assert!(
                    exradii(&t).get(kind).is_one(),
                    "kind {kind}, x = {x}"
                );
            }
        }
    }

    #[test]
    fn the_parameter_window_is_enforced() {
        for kind in ExcircleKind::ALL {
            for x in ["0", "1", "3/2", "-1/2"] {
                assert!(triangle_with_unit_exradius(kind, &r(x)).is_err());
            }
        }
    }

    #[test]
    fn areas_and_classes_match_the_published_values() {
        let (area, class) = area_and_class(ExcircleKind::A, &r("1/2")).unwrap();
        assert_eq!(area, r("3/2"));
        assert!(class == 6);
        let (area, class) = area_and_class(ExcircleKind::C, &r("1/3")).unwrap();
        assert_eq!(area, r("1/6"));
        assert!(class == 6);
    }

    #[test]
    fn normalization_rescales_to_the_published_families() {
        let t = tri("3", "4", "5");
        assert_eq!(
            normalize_to_unit_exradius(&t, ExcircleKind::C).to_sides(),
            [r("1/2"), r("2/3"), r("5/6")]
        );
        assert_eq!(
            normalize_to_unit_exradius(&t, ExcircleKind::A).to_sides(),
            [r("3/2"), r("2"), r("5/2")]
        );
    }

    proptest! {
        #[test]
        fn families_close_under_normalization(
            xn in 1i64..60, xd in 2i64..61, kind_index in 0usize..3,
        ) {
            prop_assume!(xn < xd);
            let kind = ExcircleKind::ALL[kind_index];
            let x = Rat::new(xn, xd);
            let t = triangle_with_unit_exradius(kind, &x).unwrap();
            prop_assert!(exradii(&t).get(kind).is_one());

            // closed-form areas
            let one = Rat::one();
            let expected = match kind {
                ExcircleKind::A | ExcircleKind::B => &x * (&x + &one) / (&one - &x),
                ExcircleKind::C => &x * (&one - &x) / (&one + &x),
            };
            prop_assert_eq!(t.area(), expected);

            // scaling away and normalizing back is the identity on the family
            let scaled = t.scaled(&Rat::new(xn + 5, 3)).unwrap();
            prop_assert_eq!(normalize_to_unit_exradius(&scaled, kind), t);

            // r_a r_b = area survives scaling
            let e = exradii(&scaled);
            prop_assert_eq!(&e.r_a * &e.r_b, scaled.area());
        }
    }
}
