//! Links built from great circles on the unit sphere.
//!
//! Each circle is the intersection of the sphere with a plane through the
//! origin, oriented counterclockwise about the plane normal. Two circles meet
//! in two antipodal points; each meeting point becomes a crossing, and the
//! crossings are resolved so that every circle alternates over and under.
//! Crossings are viewed from outside the sphere.

use super::LinkError;
use crate::perm::Permutation;

pub type Vec3 = [f64; 3];
pub type Mat3 = [[f64; 3]; 3];

const EPS: f64 = 1e-9;

fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn normalize(a: Vec3) -> Vec3 {
    let n = dot(a, a).sqrt();
    [a[0] / n, a[1] / n, a[2] / n]
}

fn close(a: Vec3, b: Vec3) -> bool {
    (0..3).all(|i| (a[i] - b[i]).abs() < EPS)
}

pub fn rotate(r: &Mat3, v: Vec3) -> Vec3 {
    [dot(r[0], v), dot(r[1], v), dot(r[2], v)]
}

/// Rotation by `angle` about `axis` (Rodrigues).
pub fn axis_rotation(axis: Vec3, angle: f64) -> Mat3 {
    let [x, y, z] = normalize(axis);
    let (s, c) = angle.sin_cos();
    let t = 1.0 - c;
    [
        [c + x * x * t, x * y * t - z * s, x * z * t + y * s],
        [y * x * t + z * s, c + y * y * t, y * z * t - x * s],
        [z * x * t - y * s, z * y * t + x * s, c + z * z * t],
    ]
}

#[derive(Debug, Clone)]
struct Crossing {
    circles: (usize, usize),
    point: Vec3,
    over: usize,
}

#[derive(Debug, Clone)]
pub struct CircleArrangement {
    normals: Vec<Vec3>,
    crossings: Vec<Crossing>,
}

impl CircleArrangement {
    /// Alternating resolution of the great circles with the given normals.
    /// Fails if two circles coincide, three meet in a point, or no
    /// alternating choice exists.
    pub fn alternating(normals: &[Vec3]) -> Result<Self, LinkError> {
        let normals: Vec<Vec3> = normals.iter().map(|&n| normalize(n)).collect();
        let m = normals.len();
        let mut points: Vec<((usize, usize), Vec3)> = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let c = cross(normals[i], normals[j]);
                if dot(c, c).sqrt() < EPS {
                    return Err(LinkError::Arrangement(format!(
                        "circles {i} and {j} coincide"
                    )));
                }
                let c = normalize(c);
                points.push(((i, j), c));
                points.push(((i, j), [-c[0], -c[1], -c[2]]));
            }
        }
        for (a, (_, p)) in points.iter().enumerate() {
            if points[a + 1..].iter().any(|(_, q)| close(*p, *q)) {
                return Err(LinkError::Arrangement(
                    "three circles meet in a point".into(),
                ));
            }
        }

        // crossings met along each circle, in counterclockwise order
        let along: Vec<Vec<usize>> = (0..m)
            .map(|i| {
                let n = normals[i];
                let helper = if n[0].abs() < 0.9 {
                    [1.0, 0.0, 0.0]
                } else {
                    [0.0, 1.0, 0.0]
                };
                let a = normalize(cross(n, helper));
                let b = cross(n, a);
                let mut ks: Vec<(f64, usize)> = points
                    .iter()
                    .enumerate()
                    .filter(|(_, ((x, y), _))| *x == i || *y == i)
                    .map(|(k, (_, p))| (dot(*p, b).atan2(dot(*p, a)), k))
                    .collect();
                ks.sort_by(|x, y| x.0.total_cmp(&y.0));
                ks.into_iter().map(|(_, k)| k).collect()
            })
            .collect();

        // 2-color the (crossing, circle) slots: neighbors along a circle differ,
        // and the two circles at one crossing differ
        let slot = |k: usize, i: usize| 2 * k + usize::from(points[k].0 .1 == i);
        let mut over: Vec<Option<bool>> = vec![None; 2 * points.len()];
        for start in 0..points.len() {
            if over[2 * start].is_some() {
                continue;
            }
            over[2 * start] = Some(true);
            let mut stack = vec![(start, points[start].0 .0)];
            while let Some((k, i)) = stack.pop() {
                let v = over[slot(k, i)].unwrap();
                let (a, b) = points[k].0;
                let other = if a == i { b } else { a };
                let ring = &along[i];
                let pos = ring.iter().position(|&x| x == k).unwrap();
                let next = ring[(pos + 1) % ring.len()];
                let prev = ring[(pos + ring.len() - 1) % ring.len()];
                for (kk, ii) in [(k, other), (next, i), (prev, i)] {
                    match over[slot(kk, ii)] {
                        Some(w) if w == v => {
                            return Err(LinkError::Arrangement("no alternating resolution".into()))
                        }
                        Some(_) => {}
                        None => {
                            over[slot(kk, ii)] = Some(!v);
                            stack.push((kk, ii));
                        }
                    }
                }
            }
        }

        let crossings = points
            .iter()
            .enumerate()
            .map(|(k, &(circles, point))| {
                let over_circle = if over[2 * k] == Some(true) {
                    circles.0
                } else {
                    circles.1
                };
                Crossing {
                    circles,
                    point,
                    over: over_circle,
                }
            })
            .collect();
        Ok(CircleArrangement { normals, crossings })
    }

    pub fn circle_count(&self) -> usize {
        self.normals.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    fn tangent(&self, circle: usize, p: Vec3) -> Vec3 {
        cross(self.normals[circle], p)
    }

    /// Sign of a crossing: +1 when it is right-handed.
    fn sign(&self, c: &Crossing) -> i64 {
        let under = if c.over == c.circles.0 {
            c.circles.1
        } else {
            c.circles.0
        };
        let t = cross(self.tangent(c.over, c.point), self.tangent(under, c.point));
        if dot(t, c.point) > 0.0 {
            1
        } else {
            -1
        }
    }

    /// Pairwise linking numbers: half the signed crossing count.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let m = self.circle_count();
        let mut twice = vec![vec![0i64; m]; m];
        for c in &self.crossings {
            let (i, j) = c.circles;
            let s = self.sign(c);
            twice[i][j] += s;
            twice[j][i] += s;
        }
        twice
            .iter()
            .map(|r| r.iter().map(|x| x / 2).collect())
            .collect()
    }

    /// Action of a rotation on the circles: the induced permutation and, per
    /// circle, whether the rotation keeps (+1) or reverses (−1) orientation.
    /// Fails unless the rotation carries the resolved link onto itself.
    pub fn signed_action(&self, r: &Mat3) -> Result<(Permutation, Vec<i8>), LinkError> {
        let mut images = Vec::with_capacity(self.circle_count());
        let mut signs = Vec::with_capacity(self.circle_count());
        for &n in &self.normals {
            let rn = rotate(r, n);
            let (j, s) = self
                .normals
                .iter()
                .enumerate()
                .find_map(|(j, &m)| {
                    let d = dot(rn, m);
                    ((d.abs() - 1.0).abs() < EPS).then_some((j, if d > 0.0 { 1 } else { -1 }))
                })
                .ok_or_else(|| {
                    LinkError::Arrangement("rotation does not permute the circles".into())
                })?;
            images.push(j);
            signs.push(s);
        }
        let perm = Permutation::from_images(images)?;
        for c in &self.crossings {
            let q = rotate(r, c.point);
            let image = self
                .crossings
                .iter()
                .find(|d| close(d.point, q))
                .ok_or_else(|| {
                    LinkError::Arrangement("rotation does not permute the crossings".into())
                })?;
            if image.over != perm.apply(c.over) {
                return Err(LinkError::Arrangement(
                    "rotation mirrors the resolution".into(),
                ));
            }
        }
        Ok((perm, signs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coincident_and_concurrent_circles_are_rejected() {
        assert!(CircleArrangement::alternating(&[[0.0, 0.0, 1.0], [0.0, 0.0, -2.0]]).is_err());
        // three planes sharing the z axis
        let err =
            CircleArrangement::alternating(&[[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [1.0, 1.0, 0.0]]);
        assert!(err.is_err());
    }

    #[test]
    fn two_circles_form_a_hopf_link() {
        let a = CircleArrangement::alternating(&[[0.0, 0.0, 1.0], [1.0, 0.0, 0.0]]).unwrap();
        assert_eq!(a.crossing_count(), 2);
        assert_eq!(a.linking_matrix()[0][1].abs(), 1);
    }

    #[test]
    fn rotation_helper() {
        let r = axis_rotation([0.0, 0.0, 1.0], std::f64::consts::FRAC_PI_2);
        let v = rotate(&r, [1.0, 0.0, 0.0]);
        assert!(close(v, [0.0, 1.0, 0.0]));
    }
}
