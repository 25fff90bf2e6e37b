//! Polygon radii against a direct construction in the hyperboloid model.

use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use csl_core::links::{polygon_radii, LinkError};

type P3 = [f64; 3];

/// Minkowski form `-x0 y0 + x1 y1 + x2 y2`.
fn b(x: P3, y: P3) -> f64 {
    -x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

fn vertex(r: f64, theta: f64) -> P3 {
    [r.cosh(), r.sinh() * theta.cos(), r.sinh() * theta.sin()]
}

/// Interior angle at a vertex of the regular p-gon of circumradius `r`.
fn interior_angle(p: u32, r: f64) -> f64 {
    let step = 2.0 * PI / p as f64;
    let (v, prev, next) = (vertex(r, 0.0), vertex(r, -step), vertex(r, step));
    let tangent = |w: P3| {
        let c = b(v, w);
        [w[0] + c * v[0], w[1] + c * v[1], w[2] + c * v[2]]
    };
    let (s, t) = (tangent(prev), tangent(next));
    (b(s, t) / (b(s, s) * b(t, t)).sqrt())
        .clamp(-1.0, 1.0)
        .acos()
}

/// Circumradius with interior angle `2π/q`, by bisection.
fn circumradius(p: u32, q: u32) -> f64 {
    let target = 2.0 * PI / q as f64;
    let (mut lo, mut hi) = (1e-9, 20.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if interior_angle(p, mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn edge_midpoint_distance(p: u32, r: f64) -> f64 {
    let (v, w) = (vertex(r, 0.0), vertex(r, 2.0 * PI / p as f64));
    let s = [v[0] + w[0], v[1] + w[1], v[2] + w[2]];
    let m = s.map(|x| x / (-b(s, s)).sqrt());
    (-b([1.0, 0.0, 0.0], m)).acosh()
}

#[test]
fn hyperbolic_radii_match_the_hyperboloid() {
    for (p, q) in [
        (6, 4),
        (7, 7),
        (5, 5),
        (4, 5),
        (3, 7),
        (8, 8),
        (12, 12),
        (10, 3),
    ] {
        let (r1, r2) = polygon_radii(p, q).unwrap();
        let oracle_r2 = circumradius(p, q);
        assert_abs_diff_eq!(r2, oracle_r2, epsilon = 1e-9);
        assert_abs_diff_eq!(r1, edge_midpoint_distance(p, oracle_r2), epsilon = 1e-9);
    }
}

#[test]
fn euclidean_hexagon_and_triangle() {
    let (r1, r2) = polygon_radii(6, 3).unwrap();
    assert_abs_diff_eq!(r2, 1.0, epsilon = 1e-15);
    assert_abs_diff_eq!(r1, 3f64.sqrt() / 2.0, epsilon = 1e-15);
    let (r1, r2) = polygon_radii(3, 6).unwrap();
    assert_abs_diff_eq!(r2, 1.0 / 3f64.sqrt(), epsilon = 1e-15);
    assert_abs_diff_eq!(r1, 1.0 / (2.0 * 3f64.sqrt()), epsilon = 1e-15);
}

#[test]
fn spherical_tilings_are_rejected() {
    for (p, q) in [(3, 3), (4, 3), (3, 5), (5, 3)] {
        assert_eq!(polygon_radii(p, q), Err(LinkError::Spherical { p, q }));
    }
}
