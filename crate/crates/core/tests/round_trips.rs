use proptest::prelude::*;
use squaremap_core::{DiscPoint, MappingId, MappingKind, SquarePoint, SquelchParam};

fn catalog() -> Vec<MappingId> {
    let mut all = MappingId::catalog(SquelchParam::new(0.5).unwrap());
    all.push(MappingId::squelched(1.0).unwrap());
    all
}

fn tolerance(m: &MappingId) -> f64 {
    if m.kind().is_conformal() {
        1e-8
    } else if m.kind().has_numeric_inverse() {
        1e-10
    } else {
        1e-12
    }
}

fn square_round_trip(m: &MappingId, x: f64, y: f64) -> f64 {
    let p = SquarePoint::new(x, y).unwrap();
    let back = m.disc_to_square(m.square_to_disc(p)).unwrap();
    (back.x - x).abs().max((back.y - y).abs())
}

#[test]
fn interior_grid_round_trips() {
    let n = 201;
    for m in catalog() {
        let margin = if m.kind().is_conformal() { 0.05 } else { 0.001 };
        let span = 1.0 - margin;
        let mut worst = 0.0f64;
        for j in 0..n {
            for i in 0..n {
                let x = -span + 2.0 * span * i as f64 / (n - 1) as f64;
                let y = -span + 2.0 * span * j as f64 / (n - 1) as f64;
                worst = worst.max(square_round_trip(&m, x, y));
            }
        }
        assert!(worst < tolerance(&m), "{m}: {worst:e}");
    }
}

#[test]
fn tiny_squelch_round_trip() {
    let m = MappingId::squelched(1e-5).unwrap();
    for j in 0..101 {
        for i in 0..101 {
            let x = -0.999 + 1.998 * i as f64 / 100.0;
            let y = -0.999 + 1.998 * j as f64 / 100.0;
            assert!(square_round_trip(&m, x, y) < 1e-8, "({x}, {y})");
        }
    }
}

#[test]
fn boundary_to_boundary() {
    for m in catalog() {
        for k in 0..720 {
            let theta = k as f64 * std::f64::consts::TAU / 720.0;
            let (s, c) = theta.sin_cos();
            let d = DiscPoint::new(c, s).unwrap();
            let q = m.disc_to_square(d).unwrap();
            assert!((q.sup_norm() - 1.0).abs() < 1e-9, "{m} θ={theta}: {q}");

            let scale = 1.0 / c.abs().max(s.abs());
            let p = SquarePoint::new(c * scale, s * scale).unwrap();
            let d = m.square_to_disc(p);
            assert!((d.norm() - 1.0).abs() < 1e-9, "{m} θ={theta}: {d}");
        }
    }
}

#[test]
fn corners_map_to_rim_diagonals() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for m in catalog() {
        for (sx, sy) in [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)] {
            let d = m.square_to_disc(SquarePoint::new(sx, sy).unwrap());
            assert!((d.u - sx * h).abs() < 1e-9 && (d.v - sy * h).abs() < 1e-9, "{m}: {d}");
        }
    }
}

fn closed_form() -> impl Strategy<Value = MappingId> {
    prop::sample::select(
        catalog()
            .into_iter()
            .filter(|m| m.kind() != MappingKind::SchwarzChristoffel)
            .collect::<Vec<_>>(),
    )
}

proptest! {
    #[test]
    fn square_disc_square(m in closed_form(), x in -0.999f64..=0.999, y in -0.999f64..=0.999) {
        prop_assert!(square_round_trip(&m, x, y) < tolerance(&m));
    }

    #[test]
    fn disc_square_disc(m in closed_form(), r in 0.0f64..0.999, t in -std::f64::consts::PI..std::f64::consts::PI) {
        let d = DiscPoint::new(r * t.cos(), r * t.sin()).unwrap();
        let back = m.square_to_disc(m.disc_to_square(d).unwrap());
        prop_assert!((back.u - d.u).abs().max((back.v - d.v).abs()) < 10.0 * tolerance(&m));
    }

    #[test]
    fn outputs_stay_in_their_domains(m in closed_form(), x in -1.0f64..=1.0, y in -1.0f64..=1.0) {
        let d = m.square_to_disc(SquarePoint::new(x, y).unwrap());
        prop_assert!(DiscPoint::new(d.u, d.v).is_ok());
    }

    #[test]
    fn conformal_round_trip(x in -0.95f64..=0.95, y in -0.95f64..=0.95) {
        let m = MappingId::parse("schwarz-christoffel", None).unwrap();
        prop_assert!(square_round_trip(&m, x, y) < 1e-8);
    }
}
