//! Recomputed rows of the three reference catalogues: sample τ-congruent
//! numbers, areas of right triangles circumscribing the unit ellipse at
//! integer parameters, and the excircle parametrization summary.
//!
//! Every numeric entry is computed by the owning module. Each sampled row
//! also carries the class as previously published, and [`TauNumberRow::erratum`]
//! / [`EllipseAreaRow::erratum`] surface any disagreement instead of silently
//! adopting either value.

use crate::ellipse;
use crate::error::Result;
use crate::exact::{Rat, SquarefreeClass};
use crate::excircle::ExcircleKind;
use crate::tau_curve::{self, Tau};

/// A sampled point of `X_τ` with its τ-congruent number `n = τxy` and class.
#[derive(Debug, Clone)]
pub struct TauNumberRow {
    pub tau: Rat,
    pub x: Rat,
    pub y: Rat,
    pub n: Rat,
    pub class: SquarefreeClass,
    pub published_class: u64,
}

impl TauNumberRow {
    /// `Some("published value …")` when the recomputed class disagrees with
    /// the published one.
    pub fn erratum(&self) -> Option<String> {
        erratum(&self.class, self.published_class)
    }
}

/// The scaled unit-ellipse triangle at integer `t`, whose area is the product
/// `t(t+1)(t+2)` of three consecutive integers, with its class.
#[derive(Debug, Clone)]
pub struct EllipseAreaRow {
    pub t: u64,
    pub area: Rat,
    pub class: SquarefreeClass,
    pub published_class: u64,
}

impl EllipseAreaRow {
    /// `Some("published value …")` when the recomputed class disagrees with
    /// the published one.
    pub fn erratum(&self) -> Option<String> {
        erratum(&self.class, self.published_class)
    }

    /// The area spelled as its three consecutive factors, e.g. `5·6·7`.
    pub fn factored_area(&self) -> String {
        format!("{}·{}·{}", self.t, self.t + 1, self.t + 2)
    }
}

/// One family of right triangles with unit exradius: the parametrized sides,
/// the curve the parameters satisfy, and the closed-form area. `z` abbreviates
/// `(x+1)/(1-x)` in the leg families; the hypotenuse family uses the second
/// coordinate `y` of its defining curve.
#[derive(Debug, Clone, Copy)]
pub struct ExcircleSummaryRow {
    pub kind: ExcircleKind,
    pub sides: [&'static str; 3],
    pub defining_curve: &'static str,
    pub area: &'static str,
}

fn erratum(computed: &SquarefreeClass, published: u64) -> Option<String> {
    if *computed == published {
        None
    } else {
        Some(format!("published value {published}"))
    }
}

/// The five sampled τ-congruent numbers, recomputed from `(τ, x)`.
pub fn tau_number_rows() -> Result<Vec<TauNumberRow>> {
    const SAMPLES: [(i64, i64, i64, u64); 5] = [
        (1, 2, 2, 3),
        (1, 1, 2, 6),
        (3, 2, 2, 6),
        (2, 1, 3, 42),
        (3, 1, 4, 39),
    ];
    SAMPLES
        .iter()
        .map(|&(tn, td, x, published_class)| {
            let tau = Tau::new(Rat::new(tn, td))?;
            let point = tau_curve::point_from_x(&tau, &Rat::from(x))?;
            let (n, class) = tau_curve::tau_congruent_number(&point)?;
            Ok(TauNumberRow {
                tau: tau.value().clone(),
                x: point.x().clone(),
                y: point.y().clone(),
                n,
                class,
                published_class,
            })
        })
        .collect()
}

/// The sampled consecutive-product areas `t(t+1)(t+2)`, recomputed from `t`.
pub fn ellipse_area_rows() -> Result<Vec<EllipseAreaRow>> {
    const SAMPLES: [(u64, u64); 5] = [(1, 6), (3, 15), (4, 30), (5, 210), (6, 42)];
    SAMPLES
        .iter()
        .map(|&(t, published_class)| {
            let area = ellipse::consecutive_product_triangle(t)?.area();
            let (_, class) = ellipse::area_and_class(&Rat::from(t))?;
            Ok(EllipseAreaRow {
                t,
                area,
                class,
                published_class,
            })
        })
        .collect()
}

/// The excircle parametrization summary, one row per pinned excircle.
pub fn excircle_summary_rows() -> [ExcircleSummaryRow; 3] {
    [
        ExcircleSummaryRow {
            kind: ExcircleKind::A,
            sides: ["x+1", "z-1", "z-x"],
            defining_curve: "z(1-x) - x - 1 = 0",
            area: "x(x+1)/(1-x)",
        },
        ExcircleSummaryRow {
            kind: ExcircleKind::B,
            sides: ["z-1", "x+1", "z-x"],
            defining_curve: "z(x-1) + x + 1 = 0",
            area: "x(x+1)/(1-x)",
        },
        ExcircleSummaryRow {
            kind: ExcircleKind::C,
            sides: ["1-y", "1-x", "x+y"],
            defining_curve: "xy + x + y = 1",
            area: "x(1-x)/(1+x)",
        },
    ]
}
