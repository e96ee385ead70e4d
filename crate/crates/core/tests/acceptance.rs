//! End-to-end acceptance run: every shipped guarantee, one line of output
//! each, with a pinned wall-clock budget. The binary exits nonzero if any
//! criterion fails, but always runs all of them.

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::panic::catch_unwind;
use std::time::{Duration, Instant};
use taucong::circumcircle::{self, CircumParam};
use taucong::ellipse::{self, EllipseSpec};
use taucong::exact::{is_rational_square, squarefree_class};
use taucong::excircle::{self, ExcircleKind};
use taucong::tables;
use taucong::tau_curve::{self, Tau};
use taucong::{Rat, RightTriangle};

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

type Criterion = (&'static str, Duration, fn() -> Result<(), String>);

fn main() {
    let criteria: &[Criterion] = &[
        ("tau-class-table", Duration::from_secs(1), tau_class_table),
        ("integer-points", Duration::from_secs(5), integer_points),
        ("ellipse-class-table", Duration::from_secs(1), ellipse_class_table),
        ("unit-incircle", Duration::from_secs(10), unit_incircle),
        ("ellipse-tangency", Duration::from_secs(10), ellipse_tangency),
        (
            "consecutive-product-areas",
            Duration::from_secs(5),
            consecutive_product_areas,
        ),
        ("circumcircle", Duration::from_secs(10), circumcircle_invariants),
        ("unit-exradius", Duration::from_secs(10), unit_exradius),
        (
            "exradius-normalization",
            Duration::from_secs(5),
            exradius_normalization,
        ),
        ("squarefree-engine", Duration::from_secs(30), squarefree_engine),
    ];

    let mut failed = 0usize;
    for (index, (name, budget, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = catch_unwind(run)
            .unwrap_or_else(|panic| Err(describe_panic(panic.as_ref())))
            .and_then(|()| {
                let elapsed = started.elapsed();
                if elapsed <= *budget {
                    Ok(())
                } else {
                    Err(format!("exceeded the {budget:?} budget"))
                }
            });
        let elapsed = started.elapsed();
        match outcome {
            Ok(()) => println!("acceptance {:02} {name}: pass ({elapsed:.2?})", index + 1),
            Err(reason) => {
                failed += 1;
                println!(
                    "acceptance {:02} {name}: FAIL ({elapsed:.2?}) — {reason}",
                    index + 1
                );
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

fn describe_panic(panic: &(dyn std::any::Any + Send)) -> String {
    if let Some(message) = panic.downcast_ref::<&str>() {
        format!("panicked: {message}")
    } else if let Some(message) = panic.downcast_ref::<String>() {
        format!("panicked: {message}")
    } else {
        "panicked".into()
    }
}

fn rat(s: &str) -> Rat {
    s.parse().expect("literal rational")
}

fn random_pythagorean(rng: &mut ChaCha8Rng) -> RightTriangle {
    let m = rng.random_range(2..=60i64);
    let n = rng.random_range(1..m);
    let scale = Rat::new(rng.random_range(1..=40i64), rng.random_range(1..=40i64));
    RightTriangle::new(
        Rat::from(m * m - n * n) * &scale,
        Rat::from(2 * m * n) * &scale,
        Rat::from(m * m + n * n) * &scale,
    )
    .expect("scaled Pythagorean triple")
}

/// The five sampled rows of the τ-class catalogue come out exactly.
fn tau_class_table() -> Result<(), String> {
    let expected = [
        ("1/2", "2", "4/3", "4/3", 3u64),
        ("1", "2", "3", "6", 6),
        ("3/2", "2", "8", "24", 6),
        ("2", "3", "7", "42", 42),
        ("3", "4", "13", "156", 39),
    ];
    for (tau, x, y, n, class) in expected {
        let angle = Tau::new(rat(tau)).map_err(|e| e.to_string())?;
        let point = tau_curve::point_from_x(&angle, &rat(x)).map_err(|e| e.to_string())?;
        ensure!(
            point.y() == &rat(y),
            "tau = {tau}, x = {x}: expected y = {y}, got {}",
            point.y()
        );
        let (number, got) = tau_curve::tau_congruent_number(&point).map_err(|e| e.to_string())?;
        ensure!(
            number == rat(n),
            "tau = {tau}, x = {x}: expected n = {n}, got {number}"
        );
        ensure!(
            got == class,
            "tau = {tau}, x = {x}: expected class {class}, got {got}"
        );
    }
    Ok(())
}

/// The divisor construction lists exactly the curve's integer points,
/// cross-checked against a brute-force box scan.
fn integer_points() -> Result<(), String> {
    let angle = Tau::new(Rat::one()).expect("tau = 1");
    let points = tau_curve::integer_points(&angle).map_err(|e| e.to_string())?;
    let expected: Vec<(BigInt, BigInt)> = [(-1, 0), (0, -1), (2, 3), (3, 2)]
        .map(|(x, y)| (BigInt::from(x), BigInt::from(y)))
        .to_vec();
    ensure!(points == expected, "tau = 1 gave {points:?}");

    for (num, den) in [(1i64, 1i64), (1, 2), (1, 3)] {
        let angle = Tau::new(Rat::new(num, den)).expect("positive tau");
        let constructed = tau_curve::integer_points(&angle).map_err(|e| e.to_string())?;
        let scanned = tau_curve::integer_points_in_box(&angle, 1000);
        ensure!(
            constructed == scanned,
            "tau = {num}/{den}: divisors gave {constructed:?}, box scan gave {scanned:?}"
        );
    }
    Ok(())
}

/// The consecutive-product classes come out exactly, and the one row whose
/// recomputed class disagrees with the published value is annotated.
fn ellipse_class_table() -> Result<(), String> {
    let rows = tables::ellipse_area_rows().map_err(|e| e.to_string())?;
    let expected = [
        (1u64, 6u64, None),
        (3, 15, None),
        (4, 30, None),
        (5, 210, None),
        (6, 21, Some("published value 42")),
    ];
    ensure!(rows.len() == expected.len(), "expected 5 rows, got {}", rows.len());
    for (row, (t, class, erratum)) in rows.iter().zip(expected) {
        ensure!(row.t == t, "row order changed: expected t = {t}, got {}", row.t);
        ensure!(
            row.class == class,
            "t = {t}: expected class {class}, got {}",
            row.class
        );
        let annotation = row.erratum();
        ensure!(
            annotation.as_deref() == erratum,
            "t = {t}: expected erratum {erratum:?}, got {annotation:?}"
        );
        if let Some(annotation) = annotation {
            ensure!(
                annotation.contains("42"),
                "t = {t}: the annotation must cite the published class"
            );
        }
    }
    Ok(())
}

/// Every sampled curve point bounds a triangle with inradius exactly one
/// whose sides satisfy the law of cosines for the prescribed angle.
fn unit_incircle() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x04);
    for round in 0..1000 {
        let den = rng.random_range(1..=50i64);
        let num = rng.random_range(1..=10 * den);
        let angle = Tau::new(Rat::new(num, den)).expect("tau in (0, 10]");
        let step = Rat::new(rng.random_range(1..=100i64), rng.random_range(1..=100i64));
        let x = angle.value() + &step;
        let point =
            tau_curve::point_from_x(&angle, &x).map_err(|e| format!("round {round}: {e}"))?;
        let triangle =
            tau_curve::heron_triangle(&point).map_err(|e| format!("round {round}: {e}"))?;
        ensure!(
            triangle.inradius().is_one(),
            "round {round}: tau = {num}/{den} gave inradius {}",
            triangle.inradius()
        );
        let [a, b, c] = triangle.to_sides();
        ensure!(
            c.square() == a.square() + b.square() - Rat::from(2) * &a * &b * angle.cos(),
            "round {round}: law of cosines failed at tau = {num}/{den}, x = {x}"
        );
    }
    Ok(())
}

/// Sampled circumscribing triangles satisfy the tangency identity and map to
/// Pythagorean triangles whose area does not depend on the ellipse axis.
fn ellipse_tangency() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x05);
    for round in 0..1000 {
        let axis = Rat::new(rng.random_range(1..=60i64), rng.random_range(1..=60i64));
        let t = Rat::new(rng.random_range(1..=80i64), rng.random_range(1..=80i64));
        let spec = EllipseSpec::new(axis.clone()).expect("positive axis");
        let legs =
            ellipse::triangle_from_t(&spec, &t).map_err(|e| format!("round {round}: {e}"))?;
        let iu = legs.u() / legs.axis();
        let iv = legs.axis() * legs.v();
        let tangent = &iu + &iv - legs.u() * legs.v();
        ensure!(
            tangent.square() == iu.square() + iv.square(),
            "round {round}: tangency identity failed at axis = {axis}, t = {t}"
        );
        ensure!(
            iu.square() + iv.square() == legs.hypotenuse().square(),
            "round {round}: image triangle is not Pythagorean at axis = {axis}, t = {t}"
        );
        let wider = EllipseSpec::new(&axis + Rat::one()).expect("positive axis");
        let second =
            ellipse::triangle_from_t(&wider, &t).map_err(|e| format!("round {round}: {e}"))?;
        ensure!(
            second.area() == legs.area(),
            "round {round}: area depends on the axis at t = {t}"
        );
    }
    Ok(())
}

/// Every integer parameter up to 200 yields an exact rational right triangle
/// whose area is the product of three consecutive integers.
fn consecutive_product_areas() -> Result<(), String> {
    for t in 1..=200u64 {
        let triangle =
            ellipse::consecutive_product_triangle(t).map_err(|e| format!("t = {t}: {e}"))?;
        let expected = Rat::from(t) * Rat::from(t + 1) * Rat::from(t + 2);
        ensure!(
            triangle.area() == expected,
            "t = {t}: area {} instead of {expected}",
            triangle.area()
        );
    }
    Ok(())
}

/// Sampled inscribed triangles are Pythagorean with the diameter as
/// hypotenuse, and their class is a function of the parameter alone.
fn circumcircle_invariants() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x07);
    for round in 0..334 {
        let den = rng.random_range(2..=100i64);
        let t = Rat::new(rng.random_range(1..den), den);
        let radius = Rat::new(rng.random_range(1..=90i64), rng.random_range(1..=90i64));
        let mut classes = Vec::new();
        for bump in 0..3i64 {
            let r = &radius + Rat::from(bump);
            let param = CircumParam::new(r.clone(), t.clone()).expect("validated parameters");
            let [a, b, c] = circumcircle::inscribed_triangle(&param).to_sides();
            ensure!(
                a.square() + b.square() == c.square(),
                "round {round}: not Pythagorean at radius = {r}, t = {t}"
            );
            ensure!(
                c == Rat::from(2) * &r,
                "round {round}: hypotenuse {c} is not the diameter of radius {r}"
            );
            let (_, class) =
                circumcircle::area_and_class(&param).map_err(|e| format!("round {round}: {e}"))?;
            classes.push(class);
        }
        ensure!(
            classes[0] == classes[1] && classes[1] == classes[2],
            "round {round}: class varies with the radius at t = {t}"
        );
    }
    Ok(())
}

/// Sampled unit-exradius triangles are Pythagorean with the chosen exradius
/// exactly one and the closed-form area; the definitional exradii agree with
/// the collapsed right-triangle forms on random Pythagorean triangles.
fn unit_exradius() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x08);
    let one = Rat::one();
    for kind in ExcircleKind::ALL {
        for round in 0..1000 {
            let den = rng.random_range(2..=100i64);
            let x = Rat::new(rng.random_range(1..den), den);
            let triangle = excircle::triangle_with_unit_exradius(kind, &x)
                .map_err(|e| format!("kind {kind}, round {round}: {e}"))?;
            let [a, b, c] = triangle.to_sides();
            ensure!(
                a.square() + b.square() == c.square(),
                "kind {kind}, round {round}: not Pythagorean at x = {x}"
            );
            ensure!(
                excircle::exradii(&triangle).get(kind).is_one(),
                "kind {kind}, round {round}: exradius differs from 1 at x = {x}"
            );
            let closed_form = match kind {
                ExcircleKind::A | ExcircleKind::B => &x * (&x + &one) / (&one - &x),
                ExcircleKind::C => &x * (&one - &x) / (&one + &x),
            };
            ensure!(
                triangle.area() == closed_form,
                "kind {kind}, round {round}: area differs from the closed form at x = {x}"
            );
        }
    }
    for round in 0..1000 {
        let triangle = random_pythagorean(&mut rng);
        let radii = excircle::exradii(&triangle);
        let two = Rat::from(2);
        let (a, b, c) = (triangle.a(), triangle.b(), triangle.c());
        ensure!(
            radii.r_a == (a - b + c) / &two
                && radii.r_b == (b - a + c) / &two
                && radii.r_c == triangle.semiperimeter(),
            "round {round}: exradii disagree with the collapsed forms for {triangle:?}"
        );
    }
    Ok(())
}

/// Normalizing any Pythagorean triangle to a unit exradius preserves the
/// class of its area.
fn exradius_normalization() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x09);
    for round in 0..100 {
        let triangle = random_pythagorean(&mut rng);
        let before =
            squarefree_class(&triangle.area()).map_err(|e| format!("round {round}: {e}"))?;
        for kind in ExcircleKind::ALL {
            let normalized = excircle::normalize_to_unit_exradius(&triangle, kind);
            ensure!(
                excircle::exradii(&normalized).get(kind).is_one(),
                "round {round}, kind {kind}: exradius differs from 1"
            );
            let after = squarefree_class(&normalized.area())
                .map_err(|e| format!("round {round}: {e}"))?;
            ensure!(
                after == before,
                "round {round}, kind {kind}: class changed from {before} to {after}"
            );
        }
    }
    Ok(())
}

/// The class computation is idempotent, multiplicative modulo squares, and
/// insensitive to square factors, over ten thousand random rationals.
fn squarefree_engine() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0A);
    for round in 0..10_000 {
        let p = Rat::new(
            rng.random_range(1..1_000_000_000i64),
            rng.random_range(1..1_000_000_000i64),
        );
        let q = Rat::new(
            rng.random_range(1..1_000_000_000i64),
            rng.random_range(1..1_000_000_000i64),
        );
        let fail = |e: taucong::Error| format!("round {round}: {e}");

        let class_q = squarefree_class(&q).map_err(fail)?;
        let again = squarefree_class(&class_q.as_rat()).map_err(fail)?;
        ensure!(
            again == class_q,
            "round {round}: idempotence failed on q = {q}"
        );
        ensure!(
            is_rational_square(&(&q / class_q.as_rat())),
            "round {round}: q = {q} is not a square times its class"
        );

        let class_p = squarefree_class(&p).map_err(fail)?;
        let product = squarefree_class(&(&p * &q)).map_err(fail)?;
        let reduced = squarefree_class(&(class_p.as_rat() * class_q.as_rat())).map_err(fail)?;
        ensure!(
            product == reduced,
            "round {round}: multiplicativity failed on p = {p}, q = {q}"
        );

        let sign = if rng.random_range(0..2) == 0 { 1 } else { -1 };
        let r = Rat::new(
            sign * rng.random_range(1..10_000i64),
            rng.random_range(1..10_000i64),
        );
        let stripped = squarefree_class(&(&q * r.square())).map_err(fail)?;
        ensure!(
            stripped == class_q,
            "round {round}: square factor {r}^2 changed the class of q = {q}"
        );
    }
    Ok(())
}
