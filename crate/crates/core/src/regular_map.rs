//! Combinatorial rotation systems and the Biggs regular maps over finite fields.
//!
//! A map is a set of darts with a fixed-point-free involution `alpha` (the two
//! sides of an edge) and a face rotation `phi`. Faces are the cycles of `phi`,
//! edges the cycles of `alpha`, and vertices the cycles of `phi ∘ alpha`
//! (apply `alpha`, then `phi`).
//!
//! The Biggs map of order `n` has one dart `(a, b)` for every ordered pair of
//! distinct field elements: the side of face `a` facing face `b`. Going around
//! face `a`, the neighbor offset `b - a` is multiplied by the primitive element.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::field::{prime_power, FieldSpec};
use crate::par::Exec;
use crate::perm::{affine_permutation, PermError, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("Biggs maps need a field of order greater than 3, got {0}")]
    OrderTooSmall(usize),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("genus formula is not an integer at n = {0}")]
    NonIntegerGenus(u64),
    #[error("alpha must be a fixed-point-free involution")]
    BadAlpha,
    #[error("alpha and phi act on different dart sets ({0} vs {1})")]
    DartMismatch(usize, usize),
    #[error("affine multiplier must be nonzero")]
    ZeroMultiplier,
    #[error("map has no field labels")]
    Unlabeled,
    #[error("field of order {field} does not label a map of order {map}")]
    FieldMismatch { field: usize, map: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationMap {
    alpha: Permutation,
    phi: Permutation,
    /// `(a, b)` field indices of each dart, for maps built over a field.
    labels: Option<Vec<(usize, usize)>>,
    field_order: Option<usize>,
}

/// Euler-characteristic bookkeeping for a map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapSummary {
    pub n: usize,
    #[serde(rename = "V")]
    pub vertices: usize,
    #[serde(rename = "E")]
    pub edges: usize,
    #[serde(rename = "F")]
    pub faces: usize,
    #[serde(skip)]
    pub euler: i64,
    pub genus: i64,
    pub formula_genus: Option<i64>,
    /// Common vertex-cycle length, if all vertices have the same degree.
    pub vertex_degree: Option<usize>,
}

impl MapSummary {
    pub fn genus_matches(&self) -> bool {
        self.formula_genus == Some(self.genus)
    }
}

/// Genus of the Biggs map of order `n`.
pub fn genus_formula(n: u64) -> Result<i64, MapError> {
    let small = u32::try_from(n).ok().and_then(prime_power);
    if small.is_none() {
        return Err(MapError::NotPrimePower(n));
    }
    if n <= 3 {
        return Err(MapError::OrderTooSmall(n as usize));
    }
    let n = n as i64;
    let num = if n % 4 == 3 { n * (n - 7) } else { n * (n - 5) };
    if num % 4 != 0 {
        return Err(MapError::NonIntegerGenus(n as u64));
    }
    Ok(1 + num / 4)
}

/// The Biggs regular map with faces labeled by the elements of `spec`.
pub fn biggs_map(spec: &FieldSpec) -> Result<RotationMap, MapError> {
    let n = spec.order();
    if n <= 3 {
        return Err(MapError::OrderTooSmall(n));
    }
    let omega = spec.primitive_idx();
    let labels: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let index = |a: usize, b: usize| a * (n - 1) + if b < a { b } else { b - 1 };

    let alpha: Vec<usize> = labels.iter().map(|&(a, b)| index(b, a)).collect();
    let phi: Vec<usize> = labels
        .iter()
        .map(|&(a, b)| {
            let step = spec.mul_idx(omega, spec.sub_idx(b, a));
            index(a, spec.add_idx(a, step))
        })
        .collect();

    let mut map = RotationMap::new(
        Permutation::from_images(alpha)?,
        Permutation::from_images(phi)?,
    )?;
    map.labels = Some(labels);
    map.field_order = Some(n);
    Ok(map)
}

fn orbits_of(p: &Permutation) -> Vec<Vec<usize>> {
    p.cycles()
}

impl RotationMap {
    pub fn new(alpha: Permutation, phi: Permutation) -> Result<Self, MapError> {
        if alpha.degree() != phi.degree() {
            return Err(MapError::DartMismatch(alpha.degree(), phi.degree()));
        }
        let involutive =
            (0..alpha.degree()).all(|d| alpha.apply(d) != d && alpha.apply(alpha.apply(d)) == d);
        if !involutive {
            return Err(MapError::BadAlpha);
        }
        Ok(RotationMap {
            alpha,
            phi,
            labels: None,
            field_order: None,
        })
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn phi(&self) -> &Permutation {
        &self.phi
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.degree()
    }

    pub fn labels(&self) -> Option<&[(usize, usize)]> {
        self.labels.as_deref()
    }

    /// `phi ∘ alpha`: apply `alpha`, then `phi`.
    pub fn vertex_rotation(&self) -> Permutation {
        self.alpha.then(&self.phi)
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        orbits_of(&self.phi)
    }

    pub fn edges(&self) -> Vec<Vec<usize>> {
        orbits_of(&self.alpha)
    }

    pub fn vertices(&self) -> Vec<Vec<usize>> {
        orbits_of(&self.vertex_rotation())
    }

    /// Face index of every dart, faces numbered in `faces()` order.
    pub fn face_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.dart_count()];
        for (f, cycle) in self.faces().iter().enumerate() {
            for &d in cycle {
                out[d] = f;
            }
        }
        out
    }

    /// Number of connected components of the dart graph under `alpha`, `phi`.
    pub fn components(&self) -> usize {
        let n = self.dart_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for d in 0..n {
            for e in [self.alpha.apply(d), self.phi.apply(d)] {
                let (a, b) = (find(&mut parent, d), find(&mut parent, e));
                parent[a] = b;
            }
        }
        (0..n).filter(|&d| find(&mut parent, d) == d).count()
    }

    pub fn summary(&self) -> MapSummary {
        let faces = self.faces().len();
        let edges = self.edges().len();
        let vertex_cycles = self.vertices();
        let vertices = vertex_cycles.len();
        let euler = vertices as i64 - edges as i64 + faces as i64;
        let genus = (2 * self.components() as i64 - euler) / 2;
        let first = vertex_cycles.first().map_or(0, Vec::len);
        let vertex_degree = vertex_cycles
            .iter()
            .all(|c| c.len() == first)
            .then_some(first);
        let formula_genus = self.field_order.and_then(|n| genus_formula(n as u64).ok());
        MapSummary {
            n: faces,
            vertices,
            edges,
            faces,
            euler,
            genus,
            formula_genus,
            vertex_degree,
        }
    }

    /// True iff every pair of distinct faces shares exactly one edge and no
    /// edge borders the same face twice.
    pub fn face_adjacency_complete(&self) -> bool {
        let face_of = self.face_of();
        let nf = self.faces().len();
        let mut count: HashMap<(usize, usize), usize> = HashMap::new();
        for edge in self.edges() {
            let (f, g) = (face_of[edge[0]], face_of[edge[1]]);
            if f == g {
                return false;
            }
            *count.entry((f.min(g), f.max(g))).or_default() += 1;
        }
        count.len() == nf * (nf - 1) / 2 && count.values().all(|&c| c == 1)
    }

    fn field_labels(&self, spec: &FieldSpec) -> Result<&[(usize, usize)], MapError> {
        let labels = self.labels.as_deref().ok_or(MapError::Unlabeled)?;
        let map = self.field_order.unwrap_or(0);
        if spec.order() != map {
            return Err(MapError::FieldMismatch {
                field: spec.order(),
                map,
            });
        }
        Ok(labels)
    }

    /// Dart permutation `(a, b) -> (s a + t, s b + t)` (field indices).
    pub fn affine_automorphism(
        &self,
        spec: &FieldSpec,
        s: usize,
        t: usize,
    ) -> Result<Permutation, MapError> {
        if s == 0 {
            return Err(MapError::ZeroMultiplier);
        }
        let labels = self.field_labels(spec)?;
        let n = spec.order();
        let index = |a: usize, b: usize| a * (n - 1) + if b < a { b } else { b - 1 };
        let f = |x: usize| spec.add_idx(spec.mul_idx(s, x), t);
        let images = labels.iter().map(|&(a, b)| index(f(a), f(b))).collect();
        Ok(Permutation::from_images(images)?)
    }

    /// Checks one affine automorphism against both map permutations and the
    /// affine action on face labels.
    pub fn check_affine_automorphism(
        &self,
        spec: &FieldSpec,
        s: usize,
        t: usize,
    ) -> Result<AutomorphismCheck, MapError> {
        let g = self.affine_automorphism(spec, s, t)?;
        let labels = self.field_labels(spec)?;
        let commutes_alpha = self.alpha.then(&g) == g.then(&self.alpha);
        let commutes_phi = self.phi.then(&g) == g.then(&self.phi);

        let mut face_sets: Vec<Vec<usize>> = self
            .faces()
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        face_sets.sort();
        let mut moved: Vec<Vec<usize>> = face_sets
            .iter()
            .map(|c| {
                let mut m: Vec<usize> = c.iter().map(|&d| g.apply(d)).collect();
                m.sort_unstable();
                m
            })
            .collect();
        moved.sort();
        let preserves_faces = moved == face_sets;

        // a face is named by the first coordinate of any of its darts
        let mut induced = vec![usize::MAX; spec.order()];
        for (d, &(a, _)) in labels.iter().enumerate() {
            induced[a] = labels[g.apply(d)].0;
        }
        let face_perm_matches = induced == affine_permutation(spec, s, t).images();

        Ok(AutomorphismCheck {
            commutes_alpha,
            commutes_phi,
            preserves_faces,
            face_perm_matches,
        })
    }

    /// Runs [`Self::check_affine_automorphism`] over all `n (n - 1)` pairs.
    pub fn all_affine_automorphisms_hold(
        &self,
        spec: &FieldSpec,
        exec: Exec,
    ) -> Result<bool, MapError> {
        self.field_labels(spec)?;
        let n = spec.order();
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|s| (0..n).map(move |t| (s, t))).collect();
        let results = exec.map(&pairs, |&(s, t)| self.check_affine_automorphism(spec, s, t));
        let mut ok = true;
        for r in results {
            ok &= r?.holds();
        }
        Ok(ok)
    }

    fn face_names(&self, spec: Option<&FieldSpec>) -> Vec<String> {
        let nf = self.faces().len();
        match (spec, &self.labels) {
            (Some(spec), Some(labels)) => {
                let mut names = vec![String::new(); nf];
                let face_of = self.face_of();
                for (d, &(a, _)) in labels.iter().enumerate() {
                    names[face_of[d]] = spec.element(a).to_string();
                }
                names
            }
            _ => (0..nf).map(|f| f.to_string()).collect(),
        }
    }

    /// DOT graph with one node per face and one edge per map edge.
    pub fn face_adjacency_dot(&self, spec: Option<&FieldSpec>) -> String {
        let names = self.face_names(spec);
        let face_of = self.face_of();
        let mut out = String::from("graph faces {\n");
        for (f, name) in names.iter().enumerate() {
            let _ = writeln!(out, "  f{f} [label=\"{name}\"];");
        }
        for edge in self.edges() {
            let _ = writeln!(out, "  f{} -- f{};", face_of[edge[0]], face_of[edge[1]]);
        }
        out.push_str("}\n");
        out
    }

    /// DOT digraph of darts: solid arrows for `phi`, undirected dashed for `alpha`.
    pub fn dart_dot(&self) -> String {
        let mut out = String::from("digraph darts {\n");
        for d in 0..self.dart_count() {
            let label = match &self.labels {
                Some(l) => format!("({},{})", l[d].0, l[d].1),
                None => d.to_string(),
            };
            let _ = writeln!(out, "  d{d} [label=\"{label}\"];");
        }
        for d in 0..self.dart_count() {
            let _ = writeln!(out, "  d{d} -> d{};", self.phi.apply(d));
            let a = self.alpha.apply(d);
            if d < a {
                let _ = writeln!(out, "  d{d} -> d{a} [style=dashed, dir=none];");
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutomorphismCheck {
    pub commutes_alpha: bool,
    pub commutes_phi: bool,
    pub preserves_faces: bool,
    pub face_perm_matches: bool,
}

impl AutomorphismCheck {
    pub fn holds(&self) -> bool {
        self.commutes_alpha && self.commutes_phi && self.preserves_faces && self.face_perm_matches
    }
}

/// Two 2-gon faces glued along both of their edges.
pub fn double_edge_fixture() -> RotationMap {
    let alpha = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
    let phi = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
    RotationMap::new(alpha, phi).unwrap()
}
