//! Characteristic radii of a regular face.

use std::f64::consts::PI;

use serde::Serialize;

use super::LinkError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

/// Geometry of a tiling by regular p-gons meeting q at a vertex.
pub fn tiling_geometry(p: u32, q: u32) -> Geometry {
    match ((p as i64 - 2) * (q as i64 - 2)).cmp(&4) {
        std::cmp::Ordering::Less => Geometry::Spherical,
        std::cmp::Ordering::Equal => Geometry::Euclidean,
        std::cmp::Ordering::Greater => Geometry::Hyperbolic,
    }
}

/// Inradius `r1` (center to edge midpoint) and circumradius `r2` (center to
/// vertex) of a regular p-gon with interior angle `2π/q`.
///
/// The face splits into `2p` right triangles with angle `π/p` at the center,
/// `π/q` at the vertex and a right angle at the edge midpoint. Euclidean faces
/// are scaled to unit edge length; hyperbolic faces live in curvature −1,
/// where the angle form of the law of cosines gives
/// `cosh r2 = cot(π/p) cot(π/q)` and `cosh r1 = cos(π/q) / sin(π/p)`.
pub fn polygon_radii(p: u32, q: u32) -> Result<(f64, f64), LinkError> {
    if p < 3 || q < 3 {
        return Err(LinkError::BadPolygon { p, q });
    }
    let a = PI / p as f64;
    let b = PI / q as f64;
    match tiling_geometry(p, q) {
        Geometry::Spherical => Err(LinkError::Spherical { p, q }),
        Geometry::Euclidean => Ok((0.5 / a.tan(), 0.5 / a.sin())),
        Geometry::Hyperbolic => {
            let r2 = (1.0 / (a.tan() * b.tan())).acosh();
            let r1 = (b.cos() / a.sin()).acosh();
            Ok((r1, r2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn unit_square() {
        let (r1, r2) = polygon_radii(4, 4).unwrap();
        assert_abs_diff_eq!(r1, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(r2, std::f64::consts::SQRT_2 / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn preconditions() {
        assert_eq!(
            polygon_radii(3, 3),
            Err(LinkError::Spherical { p: 3, q: 3 })
        );
        assert_eq!(
            polygon_radii(2, 5),
            Err(LinkError::BadPolygon { p: 2, q: 5 })
        );
        assert_eq!(tiling_geometry(6, 3), Geometry::Euclidean);
        assert_eq!(tiling_geometry(7, 7), Geometry::Hyperbolic);
    }

    #[test]
    fn hyperbolic_hexagon() {
        let (r1, r2) = polygon_radii(6, 4).unwrap();
        assert!(0.0 < r1 && r1 < r2);
    }
}
