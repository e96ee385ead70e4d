//! Machine-readable triangle records and their verification.
//!
//! An [`OutputRecord`] is one generated triangle (or degenerate point),
//! serialized as a single JSON line. The record stores the generating
//! parameters alongside the derived data, so [`OutputRecord::check`] can
//! recompute every claim from scratch: curve membership, the side
//! parametrization, the defining metric identity of the family, the area, and
//! the class modulo squares. A record is honest exactly when `check` returns
//! no failures and its `verified` flag matches.

use crate::circumcircle::{self, CircumParam};
use crate::ellipse::{self, EllipseSpec};
use crate::error::Result;
use crate::exact::{squarefree_class_with, FactorConfig, Rat, SquarefreeClass};
use crate::excircle::{self, ExcircleKind};
use crate::tau_curve::{self, Tau};
use num::BigUint;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The four triangle families a record can belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Tau,
    Ellipse,
    Circumcircle,
    Excircle,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Tau => "tau",
            Family::Ellipse => "ellipse",
            Family::Circumcircle => "circumcircle",
            Family::Excircle => "excircle",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One generated triangle, self-describing enough to be re-verified.
///
/// Degenerate curve points (the τ family at `x ≤ 0` or `y ≤ 0`) set
/// `degenerate` and carry no sides, area, or class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputRecord {
    pub family: Family,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kind: Option<ExcircleKind>,
    pub parameters: Vec<(String, Rat)>,
    pub degenerate: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sides: Option<[Rat; 3]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub area: Option<Rat>,
    #[serde(with = "decimal", skip_serializing_if = "Option::is_none", default)]
    pub class: Option<BigUint>,
    pub verified: bool,
}

mod decimal {
    use num::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &Option<BigUint>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match value {
            Some(n) => serializer.collect_str(n),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Option<BigUint>, D::Error> {
        let digits = Option::<String>::deserialize(deserializer)?;
        digits
            .map(|s| s.parse().map_err(de::Error::custom))
            .transpose()
    }
}

fn named(pairs: &[(&str, &Rat)]) -> Vec<(String, Rat)> {
    pairs
        .iter()
        .map(|(name, value)| (name.to_string(), (*value).clone()))
        .collect()
}

impl OutputRecord {
    /// The τ-family record at the curve point above `x`, degenerate when the
    /// point leaves the positive quadrant.
    pub fn tau(tau: &Rat, x: &Rat) -> Result<OutputRecord> {
        OutputRecord::tau_with(tau, x, &FactorConfig::default())
    }

    pub fn tau_with(tau: &Rat, x: &Rat, config: &FactorConfig) -> Result<OutputRecord> {
        let angle = Tau::new(tau.clone())?;
        let point = tau_curve::point_from_x(&angle, x)?;
        let parameters = named(&[("tau", tau), ("x", point.x()), ("y", point.y())]);
        if !point.x().is_positive() || !point.y().is_positive() {
            return Ok(OutputRecord {
                family: Family::Tau,
                kind: None,
                parameters,
                degenerate: true,
                sides: None,
                area: None,
                class: None,
                verified: true,
            });
        }
        let triangle = tau_curve::heron_triangle(&point)?;
        let (_, class) = tau_curve::tau_congruent_number_with(&point, config)?;
        Ok(OutputRecord {
            family: Family::Tau,
            kind: None,
            parameters,
            degenerate: false,
            sides: Some(triangle.to_sides()),
            area: Some(triangle.area()),
            class: Some(class.into_value()),
            verified: true,
        })
    }

    /// The triangle circumscribing the ellipse with the given axis at
    /// parameter `t > 0`, scaled by a positive factor.
    pub fn ellipse(axis: &Rat, t: &Rat, scale: &Rat) -> Result<OutputRecord> {
        OutputRecord::ellipse_with(axis, t, scale, &FactorConfig::default())
    }

    pub fn ellipse_with(
        axis: &Rat,
        t: &Rat,
        scale: &Rat,
        config: &FactorConfig,
    ) -> Result<OutputRecord> {
        let spec = EllipseSpec::new(axis.clone())?;
        let legs = ellipse::triangle_from_t(&spec, t)?.scaled(scale)?;
        let (_, class) = ellipse::area_and_class_with(t, config)?;
        Ok(OutputRecord {
            family: Family::Ellipse,
            kind: None,
            parameters: named(&[("axis", axis), ("t", t), ("scale", scale)]),
            degenerate: false,
            sides: Some(legs.to_sides()),
            area: Some(legs.area()),
            class: Some(class.into_value()),
            verified: true,
        })
    }

    /// The triangle inscribed in the circle of the given radius at `t`.
    pub fn circumcircle(radius: &Rat, t: &Rat) -> Result<OutputRecord> {
        OutputRecord::circumcircle_with(radius, t, &FactorConfig::default())
    }

    pub fn circumcircle_with(radius: &Rat, t: &Rat, config: &FactorConfig) -> Result<OutputRecord> {
        let param = CircumParam::new(radius.clone(), t.clone())?;
        let triangle = circumcircle::inscribed_triangle(&param);
        let (_, class) = circumcircle::area_and_class_with(&param, config)?;
        Ok(OutputRecord {
            family: Family::Circumcircle,
            kind: None,
            parameters: named(&[("radius", radius), ("t", t)]),
            degenerate: false,
            sides: Some(triangle.to_sides()),
            area: Some(triangle.area()),
            class: Some(class.into_value()),
            verified: true,
        })
    }

    /// The triangle whose excircle of the given kind has radius one, at `x`.
    pub fn excircle(kind: ExcircleKind, x: &Rat) -> Result<OutputRecord> {
        OutputRecord::excircle_with(kind, x, &FactorConfig::default())
    }

    pub fn excircle_with(
        kind: ExcircleKind,
        x: &Rat,
        config: &FactorConfig,
    ) -> Result<OutputRecord> {
        let triangle = excircle::triangle_with_unit_exradius(kind, x)?;
        let (_, class) = excircle::area_and_class_with(kind, x, config)?;
        Ok(OutputRecord {
            family: Family::Excircle,
            kind: Some(kind),
            parameters: named(&[("x", x)]),
            degenerate: false,
            sides: Some(triangle.to_sides()),
            area: Some(triangle.area()),
            class: Some(class.into_value()),
            verified: true,
        })
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }

    pub fn from_json_line(line: &str) -> serde_json::Result<OutputRecord> {
        serde_json::from_str(line)
    }

    fn parameter(&self, name: &str) -> Option<&Rat> {
        self.parameters
            .iter()
            .find_map(|(key, value)| (key.as_str() == name).then_some(value))
    }

    fn triangle_data(&self, failures: &mut Vec<String>) -> Option<(&[Rat; 3], &Rat, &BigUint)> {
        match (self.sides.as_ref(), self.area.as_ref(), self.class.as_ref()) {
            (Some(sides), Some(area), Some(class)) => Some((sides, area, class)),
            _ => {
                failures.push("missing triangle data".into());
                None
            }
        }
    }

    /// Recomputes every invariant of the record from its parameters and
    /// returns the failures, in check order. An empty list means the record
    /// is exactly what it claims to be.
    pub fn check(&self) -> Vec<String> {
        self.check_with(&FactorConfig::default())
    }

    /// [`check`](OutputRecord::check) under an explicit factorization effort
    /// limit.
    pub fn check_with(&self, config: &FactorConfig) -> Vec<String> {
        let mut failures = Vec::new();
        match self.family {
            Family::Tau => self.check_tau(config, &mut failures),
            Family::Ellipse => self.check_ellipse(config, &mut failures),
            Family::Circumcircle => self.check_circumcircle(config, &mut failures),
            Family::Excircle => self.check_excircle(config, &mut failures),
        }
        if self.verified != failures.is_empty() {
            failures.push("verified flag does not match the checks".into());
        }
        failures
    }

    fn check_tau(&self, config: &FactorConfig, failures: &mut Vec<String>) {
        if self.kind.is_some() {
            failures.push("unexpected excircle kind".into());
        }
        let (tau, x, y) = match (
            self.parameter("tau"),
            self.parameter("x"),
            self.parameter("y"),
        ) {
            (Some(tau), Some(x), Some(y)) => (tau, x, y),
            _ => {
                failures.push("missing parameter tau, x, or y".into());
                return;
            }
        };
        if !tau.is_positive() {
            failures.push("invalid parameter tau".into());
            return;
        }
        if x * y != tau * (x + y) + Rat::one() {
            failures.push("point is not on the curve".into());
        }
        let positive = x.is_positive() && y.is_positive();
        if self.degenerate == positive {
            failures.push("degenerate flag does not match the point".into());
        }
        if self.degenerate {
            if self.sides.is_some() || self.area.is_some() || self.class.is_some() {
                failures.push("degenerate record must not carry triangle data".into());
            }
            return;
        }
        let Some((sides, area, class)) = self.triangle_data(failures) else {
            return;
        };
        let recip = tau.recip();
        let expected = [y + &recip, x + &recip, x + y];
        if sides != &expected {
            failures.push("sides do not match the parameters".into());
        }
        let [a, b, c] = sides;
        let tau_sq = tau.square();
        let cos = (Rat::one() - &tau_sq) / (Rat::one() + &tau_sq);
        if c.square() != a.square() + b.square() - Rat::from(2) * a * b * cos {
            failures.push("law of cosines failed".into());
        }
        if area != &((a + b + c) / Rat::from(2)) {
            failures.push("inradius is not 1".into());
        }
        if area != &(x * y / tau) {
            failures.push("area mismatch".into());
        }
        push_class_check(
            squarefree_class_with(&(tau * x * y), config),
            class,
            failures,
        );
    }

    fn check_ellipse(&self, config: &FactorConfig, failures: &mut Vec<String>) {
        if self.kind.is_some() {
            failures.push("unexpected excircle kind".into());
        }
        if self.degenerate {
            failures.push("unexpected degenerate flag".into());
        }
        let (axis, t, scale) = match (
            self.parameter("axis"),
            self.parameter("t"),
            self.parameter("scale"),
        ) {
            (Some(axis), Some(t), Some(scale)) => (axis, t, scale),
            _ => {
                failures.push("missing parameter axis, t, or scale".into());
                return;
            }
        };
        for (value, name) in [(axis, "axis"), (t, "t"), (scale, "scale")] {
            if !value.is_positive() {
                failures.push(format!("invalid parameter {name}"));
                return;
            }
        }
        let Some((sides, area, class)) = self.triangle_data(failures) else {
            return;
        };
        let [u, v, hypotenuse] = sides;
        let image = [u / axis, axis * v];
        if image[0].square() + image[1].square() != hypotenuse.square() {
            failures.push("Pythagoras failed".into());
        }
        if scale.is_one() {
            let tangent = &image[0] + &image[1] - u * v;
            if !tangent.is_negative()
                || tangent.square() != image[0].square() + image[1].square()
            {
                failures.push("tangency identity failed".into());
            }
        }
        let spec = EllipseSpec::new(axis.clone()).expect("axis was validated above");
        let expected = ellipse::triangle_from_t(&spec, t)
            .and_then(|legs| legs.scaled(scale))
            .expect("parameters were validated above");
        if sides != &expected.to_sides() {
            failures.push("sides do not match the parameters".into());
        }
        let one = Rat::one();
        let base_area = (t + &one) * (t + Rat::from(2)) / t;
        if area != &(u * v / Rat::from(2)) || area != &(scale.square() * base_area) {
            failures.push("area mismatch".into());
        }
        push_class_check(
            ellipse::area_and_class_with(t, config).map(|(_, class)| class),
            class,
            failures,
        );
    }

    fn check_circumcircle(&self, config: &FactorConfig, failures: &mut Vec<String>) {
        if self.kind.is_some() {
            failures.push("unexpected excircle kind".into());
        }
        if self.degenerate {
            failures.push("unexpected degenerate flag".into());
        }
        let (radius, t) = match (self.parameter("radius"), self.parameter("t")) {
            (Some(radius), Some(t)) => (radius, t),
            _ => {
                failures.push("missing parameter radius or t".into());
                return;
            }
        };
        if !radius.is_positive() {
            failures.push("invalid parameter radius".into());
            return;
        }
        if !t.is_positive() || t >= &Rat::one() {
            failures.push("invalid parameter t".into());
            return;
        }
        let Some((sides, area, class)) = self.triangle_data(failures) else {
            return;
        };
        let [a, b, c] = sides;
        if a.square() + b.square() != c.square() {
            failures.push("Pythagoras failed".into());
        }
        if c != &(Rat::from(2) * radius) {
            failures.push("hypotenuse is not the diameter".into());
        }
        let param = CircumParam::new(radius.clone(), t.clone())
            .expect("parameters were validated above");
        if sides != &circumcircle::inscribed_triangle(&param).to_sides() {
            failures.push("sides do not match the parameters".into());
        }
        if area != &(a * b / Rat::from(2)) {
            failures.push("area mismatch".into());
        }
        push_class_check(
            circumcircle::area_and_class_with(&param, config).map(|(_, class)| class),
            class,
            failures,
        );
    }

    fn check_excircle(&self, config: &FactorConfig, failures: &mut Vec<String>) {
        let Some(kind) = self.kind else {
            failures.push("missing excircle kind".into());
            return;
        };
        if self.degenerate {
            failures.push("unexpected degenerate flag".into());
        }
        let Some(x) = self.parameter("x") else {
            failures.push("missing parameter x".into());
            return;
        };
        if !x.is_positive() || x >= &Rat::one() {
            failures.push("invalid parameter x".into());
            return;
        }
        let Some((sides, area, class)) = self.triangle_data(failures) else {
            return;
        };
        let [a, b, c] = sides;
        if a.square() + b.square() != c.square() {
            failures.push("Pythagoras failed".into());
        }
        // the selected exradius, straight from area/(s - side)
        let raw_area = a * b / Rat::from(2);
        let opposite = match kind {
            ExcircleKind::A => a,
            ExcircleKind::B => b,
            ExcircleKind::C => c,
        };
        let gap = (a + b + c) / Rat::from(2) - opposite;
        if gap.is_zero() || raw_area != gap {
            failures.push("exradius is not 1".into());
        }
        let expected = excircle::triangle_with_unit_exradius(kind, x)
            .expect("parameters were validated above");
        if sides != &expected.to_sides() {
            failures.push("sides do not match the parameters".into());
        }
        let one = Rat::one();
        let closed_form = match kind {
            ExcircleKind::A | ExcircleKind::B => x * (x + &one) / (&one - x),
            ExcircleKind::C => x * (&one - x) / (&one + x),
        };
        if area != &raw_area || area != &closed_form {
            failures.push("area mismatch".into());
        }
        push_class_check(
            excircle::area_and_class_with(kind, x, config).map(|(_, class)| class),
            class,
            failures,
        );
    }
}

fn push_class_check(
    expected: Result<SquarefreeClass>,
    stored: &BigUint,
    failures: &mut Vec<String>,
) {
    match expected {
        Ok(expected) if expected.value() == stored => {}
        Ok(_) => failures.push("class mismatch".into()),
        Err(err) => failures.push(format!("class could not be recomputed: {err}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn sample_records() -> Vec<OutputRecord> {
        vec![
            OutputRecord::tau(&r("1"), &r("2")).unwrap(),
            OutputRecord::tau(&r("1"), &r("-3")).unwrap(),
            OutputRecord::ellipse(&r("2"), &r("3"), &r("2")).unwrap(),
            OutputRecord::ellipse(&r("1"), &r("1"), &r("1")).unwrap(),
            OutputRecord::circumcircle(&r("5/2"), &r("1/2")).unwrap(),
            OutputRecord::excircle(ExcircleKind::C, &r("1/3")).unwrap(),
        ]
    }

    #[test]
    fn the_canonical_tau_record_line_is_stable() {
        let record = OutputRecord::tau(&r("1"), &r("2")).unwrap();
        assert_eq!(
            record.to_json_line(),
            "{\"family\":\"tau\",\"parameters\":[[\"tau\",\"1\"],[\"x\",\"2\"],[\"y\",\"3\"]],\
             \"degenerate\":false,\"sides\":[\"4\",\"3\",\"5\"],\"area\":\"6\",\"class\":\"6\",\
             \"verified\":true}"
        );
    }

    #[test]
    fn records_round_trip_through_json() {
        for record in sample_records() {
            let line = record.to_json_line();
            assert_eq!(OutputRecord::from_json_line(&line).unwrap(), record);
        }
    }

    #[test]
    fn fresh_records_pass_their_own_checks() {
        for record in sample_records() {
            assert_eq!(record.check(), Vec::<String>::new(), "{record:?}");
        }
    }

    #[test]
    fn negative_branch_points_become_degenerate_records() {
        let record = OutputRecord::tau(&r("1"), &r("-3")).unwrap();
        assert!(record.degenerate);
        assert_eq!(record.parameter("y"), Some(&r("1/2")));
        assert_eq!((record.sides, record.area, record.class), (None, None, None));

        // x below the pole keeps y negative
        let record = OutputRecord::tau(&r("1"), &r("1/3")).unwrap();
        assert!(record.degenerate);
        assert_eq!(record.parameter("y"), Some(&r("-2")));

        assert!(matches!(
            OutputRecord::tau(&r("1"), &r("1")),
            Err(Error::PoleInput)
        ));
    }

    #[test]
    fn tampered_sides_are_reported() {
        let mut record = OutputRecord::tau(&r("1"), &r("2")).unwrap();
        let sides = record.sides.take().unwrap();
        record.sides = Some(sides.map(|side| side * Rat::from(4)));
        assert_eq!(
            record.check(),
            [
                "sides do not match the parameters",
                "inradius is not 1",
                "verified flag does not match the checks",
            ]
        );
    }

    #[test]
    fn a_tampered_class_is_reported() {
        let mut record = OutputRecord::excircle(ExcircleKind::A, &r("1/2")).unwrap();
        record.class = record.class.map(|class| class + 1u32);
        assert_eq!(
            record.check(),
            ["class mismatch", "verified flag does not match the checks"]
        );
    }

    #[test]
    fn a_point_off_the_curve_is_reported() {
        let mut record = OutputRecord::tau(&r("1"), &r("2")).unwrap();
        record.parameters[2].1 = r("4");
        assert_eq!(
            record.check(),
            [
                "point is not on the curve",
                "sides do not match the parameters",
                "area mismatch",
                "class mismatch",
                "verified flag does not match the checks",
            ]
        );
    }

    #[test]
    fn degenerate_records_must_stay_bare() {
        let mut record = OutputRecord::tau(&r("1"), &r("-3")).unwrap();
        record.sides = Some([r("3"), r("4"), r("5")]);
        assert_eq!(
            record.check(),
            [
                "degenerate record must not carry triangle data",
                "verified flag does not match the checks",
            ]
        );
    }

    #[test]
    fn the_scaled_image_stays_pythagorean() {
        let record = OutputRecord::ellipse(&r("2"), &r("3"), &r("2")).unwrap();
        assert_eq!(record.sides, Some([r("20"), r("8/3"), r("34/3")]));
        assert_eq!(record.area, Some(r("80/3")));
        assert_eq!(record.class, Some(15u32.into()));
        assert_eq!(record.check(), Vec::<String>::new());
    }

    #[test]
    fn malformed_lines_are_rejected() {
        for line in [
            "",
            "{",
            "{\"family\":\"tau\"}",
            "{\"family\":\"spiral\",\"parameters\":[],\"degenerate\":false,\"verified\":true}",
            "{\"family\":\"tau\",\"parameters\":[],\"degenerate\":false,\"verified\":true,\
             \"surprise\":1}",
            "{\"family\":\"tau\",\"parameters\":[[\"tau\",\"1/0\"]],\"degenerate\":false,\
             \"verified\":true}",
        ] {
            assert!(OutputRecord::from_json_line(line).is_err(), "{line}");
        }
    }
}
