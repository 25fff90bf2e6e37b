//! Blueprints of symmetric link families: components, linking data, the
//! symmetry action on components, and hyperbolicity status.
//!
//! A blueprint is not a planar diagram. It records exactly what the
//! transitivity questions need: which components there are, how they link,
//! and how the symmetries permute them.

mod circles;
mod polygon;

use std::collections::HashMap;

use serde::Serialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

pub use circles::{axis_rotation, CircleArrangement, Mat3, Vec3};
pub use polygon::{polygon_radii, tiling_geometry, Geometry};

use crate::field::{prime_power, FieldError, FieldSpec};
use crate::par::Exec;
use crate::perm::{affine_generators, group_closure, PermError, PermGroup, Permutation};
use crate::regular_map::{biggs_map, MapError};
use crate::report::json_num;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinkError {
    #[error("a chain needs at least 2 components, got {0}")]
    TooFewComponents(usize),
    #[error("braid generator {index} is out of range for {strands} strands")]
    BraidIndex { index: i32, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("braid permutation {0} is not a single cycle through every strand")]
    NotCyclic(String),
    #[error("power m must be at least 1")]
    BadPower,
    #[error("helical links need a prime power greater than 3, got {0}")]
    BadOrder(u32),
    #[error("regular {p}-gon with vertex degree {q} is spherical")]
    Spherical { p: u32, q: u32 },
    #[error("no regular {p}-gon with vertex degree {q}")]
    BadPolygon { p: u32, q: u32 },
    #[error("great-circle arrangement: {0}")]
    Arrangement(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Chain,
    BraidClosure,
    CubeDiagonal,
    CubeEdge,
    Icosahedral,
    Helical,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Chain => "chain",
            Family::BraidClosure => "braid_closure",
            Family::CubeDiagonal => "cube_diagonal",
            Family::CubeEdge => "cube_edge",
            Family::Icosahedral => "icosahedral",
            Family::Helical => "helical",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Ambient {
    S3,
    SxS1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HyperbolicityStatus {
    /// Established in the literature; the note names the source.
    Asserted,
    /// Holds once a power parameter is large enough.
    Conditional,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hyperbolicity {
    pub status: HyperbolicityStatus,
    pub note: String,
}

impl Hyperbolicity {
    fn new(status: HyperbolicityStatus, note: &str) -> Self {
        Hyperbolicity {
            status,
            note: note.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Linking {
    /// Symmetric integer matrix with zero diagonal.
    Matrix(Vec<Vec<i64>>),
    /// Every pair of components links.
    Complete,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinkBlueprint {
    pub family: Family,
    pub ambient: Ambient,
    pub components: Vec<String>,
    pub linking: Linking,
    pub crossings: Option<usize>,
    pub symmetry_generators: Vec<Permutation>,
    /// Per generator, +1/−1 per component for kept/reversed orientation.
    /// Empty when every generator keeps every orientation.
    pub orientation_signs: Vec<Vec<i8>>,
    pub hyperbolicity: Hyperbolicity,
    pub params: Map<String, Value>,
}

impl LinkBlueprint {
    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    pub fn symmetry_group(&self) -> Result<PermGroup, PermError> {
        group_closure(self.symmetry_generators.clone())
    }

    pub fn transitivity_degree(&self) -> Result<usize, PermError> {
        Ok(self.symmetry_group()?.transitivity_degree())
    }

    fn sign(&self, generator: usize, component: usize) -> i64 {
        self.orientation_signs
            .get(generator)
            .map_or(1, |s| s[component] as i64)
    }

    /// Linking matrix symmetric with zero diagonal, and carried to itself by
    /// every generator (up to the recorded orientation reversals).
    pub fn check_invariants(&self) -> bool {
        let n = self.n_components();
        if self.symmetry_generators.iter().any(|g| g.degree() != n) {
            return false;
        }
        let Linking::Matrix(m) = &self.linking else {
            return true;
        };
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return false;
        }
        let symmetric = (0..n).all(|i| m[i][i] == 0 && (0..n).all(|j| m[i][j] == m[j][i]));
        symmetric
            && self.symmetry_generators.iter().enumerate().all(|(k, g)| {
                (0..n).all(|i| {
                    (0..n).all(|j| {
                        m[g.apply(i)][g.apply(j)] == self.sign(k, i) * self.sign(k, j) * m[i][j]
                    })
                })
            })
    }

    /// JSON export with the fields `family, ambient, n_components, linking,
    /// symmetry_order, transitivity_degree, hyperbolicity, params`.
    pub fn export(&self) -> Result<Value, PermError> {
        let group = self.symmetry_group()?;
        let linking = match &self.linking {
            Linking::Matrix(m) => json!(m),
            Linking::Complete => json!("complete"),
        };
        Ok(json!({
            "family": self.family,
            "ambient": self.ambient,
            "n_components": self.n_components(),
            "linking": linking,
            "symmetry_order": group.order(),
            "transitivity_degree": group.transitivity_degree(),
            "hyperbolicity": self.hyperbolicity,
            "params": self.params,
        }))
    }
}

fn cyclic_shift(n: usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("shift is a bijection")
}

/// Cycle of `n` loops, each linked with its two neighbors, with `t` half-twists.
pub fn chain_link(n: usize, t: i64) -> Result<LinkBlueprint, LinkError> {
    if n < 2 {
        return Err(LinkError::TooFewComponents(n));
    }
    let sign = if t >= 0 { 1 } else { -1 };
    let mut m = vec![vec![0i64; n]; n];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        let j = (i + 1) % n;
        // with two loops, each is the other's neighbor on both sides
        m[i][j] += sign;
        m[j][i] += sign;
    }
    let hyperbolicity = if n >= 5 {
        Hyperbolicity::new(
            HyperbolicityStatus::Asserted,
            "Neumann-Reid: hyperbolic for every t when n >= 5",
        )
    } else {
        Hyperbolicity::new(
            HyperbolicityStatus::Unknown,
            "Neumann-Reid: hyperbolic for all but 5-n values of t; the exceptional t are not enumerated",
        )
    };
    let mut params = Map::new();
    params.insert("n".into(), json!(n));
    params.insert("t".into(), json!(t));
    Ok(LinkBlueprint {
        family: Family::Chain,
        ambient: Ambient::S3,
        components: (0..n).map(|i| format!("loop {i}")).collect(),
        linking: Linking::Matrix(m),
        crossings: None,
        symmetry_generators: vec![cyclic_shift(n)],
        orientation_signs: Vec::new(),
        hyperbolicity,
        params,
    })
}

/// Braid word on `strands` strands; letter `±i` is the generator `σ_i^{±1}`
/// crossing strands at positions `i` and `i+1` (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, LinkError> {
        if strands == 0 {
            return Err(LinkError::NoStrands);
        }
        if let Some(&index) = word
            .iter()
            .find(|&&g| g == 0 || g.unsigned_abs() as usize >= strands)
        {
            return Err(LinkError::BraidIndex { index, strands });
        }
        Ok(BraidWord { strands, word })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn power(&self, e: usize) -> BraidWord {
        BraidWord {
            strands: self.strands,
            word: self.word.repeat(e),
        }
    }
}

/// A 5-strand braid `σ1 σ3 σ2⁻¹ σ4⁻¹` whose permutation is the 5-cycle
/// `(1 3 5 4 2)`. Mixed signs keep it from being a positive braid.
pub fn five_cycle_braid() -> BraidWord {
    BraidWord::new(5, vec![1, 3, -2, -4]).expect("valid word")
}

/// Permutation taking each strand's starting position to its final position
/// (0-based), reading the word left to right.
pub fn braid_permutation(b: &BraidWord) -> Permutation {
    // occupant[pos] = strand currently at pos
    let mut occupant: Vec<usize> = (0..b.strands).collect();
    for &g in &b.word {
        let i = g.unsigned_abs() as usize - 1;
        occupant.swap(i, i + 1);
    }
    let mut images = vec![0; b.strands];
    for (pos, &strand) in occupant.iter().enumerate() {
        images[strand] = pos;
    }
    Permutation::from_images(images).expect("braid permutation is a bijection")
}

/// Closure of `B^(n·m)` for a braid `B` whose permutation is an n-cycle.
pub fn cyclic_braid_closure(b: &BraidWord, m: usize) -> Result<LinkBlueprint, LinkError> {
    if m == 0 {
        return Err(LinkError::BadPower);
    }
    let n = b.strands;
    let pi = braid_permutation(b);
    if pi.cycles().len() != 1 {
        return Err(LinkError::NotCyclic(pi.cycle_notation(1)));
    }
    let full = b.power(n * m);

    // components are the cycles of the full permutation, labeled by the
    // least starting position they pass through
    let cycles = braid_permutation(&full).cycles();
    let mut component = vec![0usize; n];
    for (c, cycle) in cycles.iter().enumerate() {
        for &s in cycle {
            component[s] = c;
        }
    }

    let k = cycles.len();
    let mut twice = vec![vec![0i64; k]; k];
    let mut occupant: Vec<usize> = (0..n).collect();
    let mut crossings = 0;
    for &g in &full.word {
        let i = g.unsigned_abs() as usize - 1;
        let (a, c) = (component[occupant[i]], component[occupant[i + 1]]);
        if a != c {
            twice[a][c] += g.signum() as i64;
            twice[c][a] += g.signum() as i64;
        }
        occupant.swap(i, i + 1);
        crossings += 1;
    }
    let linking: Vec<Vec<i64>> = twice
        .iter()
        .map(|r| r.iter().map(|x| x / 2).collect())
        .collect();

    // shifting the closed diagram by one copy of B sends the strand found at
    // position s below the first copy to the one found at s below the second
    let shift: Vec<usize> = (0..k)
        .map(|c| component[pi.inverse().apply(cycles[c][0])])
        .collect();

    let mut params = Map::new();
    params.insert("strands".into(), json!(n));
    params.insert("word".into(), json!(b.word));
    params.insert("m".into(), json!(m));
    params.insert("permutation".into(), json!(pi.cycle_notation(1)));
    Ok(LinkBlueprint {
        family: Family::BraidClosure,
        ambient: Ambient::S3,
        components: (0..k).map(|c| format!("strand cycle {c}")).collect(),
        linking: Linking::Matrix(linking),
        crossings: Some(crossings),
        symmetry_generators: vec![Permutation::from_images(shift)?],
        orientation_signs: Vec::new(),
        hyperbolicity: Hyperbolicity::new(
            HyperbolicityStatus::Conditional,
            "hyperbolic for sufficiently large m by the 2π theorem",
        ),
        params,
    })
}

fn great_circle_blueprint(
    family: Family,
    normals: &[Vec3],
    names: Vec<String>,
    rotations: &[Mat3],
    hyperbolicity: Hyperbolicity,
) -> LinkBlueprint {
    let arrangement = CircleArrangement::alternating(normals).expect("generic great circles");
    let (generators, signs): (Vec<_>, Vec<_>) = rotations
        .iter()
        .map(|r| {
            arrangement
                .signed_action(r)
                .expect("rotation is a symmetry of the link")
        })
        .unzip();
    let mut params = Map::new();
    params.insert("great_circles".into(), json!(arrangement.circle_count()));
    params.insert("crossings".into(), json!(arrangement.crossing_count()));
    params.insert("alternating".into(), json!(true));
    LinkBlueprint {
        family,
        ambient: Ambient::S3,
        components: names,
        linking: Linking::Matrix(arrangement.linking_matrix()),
        crossings: Some(arrangement.crossing_count()),
        symmetry_generators: generators,
        orientation_signs: signs,
        hyperbolicity,
        params,
    }
}

const QUARTER_TURN_Z: Mat3 = [[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]];
/// `(x, y, z) -> (z, x, y)`, a third turn about `(1, 1, 1)`.
const CYCLE_XYZ: Mat3 = [[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]];

/// Four great circles in the planes `Ax + By + z = 0`, `A, B ∈ {±1}`,
/// alternately resolved; the cube's rotations permute them.
pub fn cube_link() -> LinkBlueprint {
    let signs = [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)];
    let normals: Vec<Vec3> = signs.iter().map(|&(a, b)| [a, b, 1.0]).collect();
    let names = signs
        .iter()
        .map(|&(a, b)| format!("plane {a:+}x {b:+}y +z = 0"))
        .collect();
    great_circle_blueprint(
        Family::CubeDiagonal,
        &normals,
        names,
        &[QUARTER_TURN_Z, CYCLE_XYZ],
        Hyperbolicity::new(
            HyperbolicityStatus::Asserted,
            "hyperbolicity verified with SnapPea",
        ),
    )
}

/// Six great circles perpendicular to the vertex axes of an icosahedron.
pub fn icosahedral_link() -> LinkBlueprint {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let axes: [Vec3; 6] = [
        [0.0, 1.0, phi],
        [0.0, 1.0, -phi],
        [1.0, phi, 0.0],
        [1.0, -phi, 0.0],
        [phi, 0.0, 1.0],
        [-phi, 0.0, 1.0],
    ];
    let names = axes
        .iter()
        .map(|a| format!("axis ({:.3}, {:.3}, {:.3})", a[0], a[1], a[2]))
        .collect();
    let fifth_turn = axis_rotation(axes[0], 2.0 * std::f64::consts::PI / 5.0);
    great_circle_blueprint(
        Family::Icosahedral,
        &axes,
        names,
        &[fifth_turn, CYCLE_XYZ],
        Hyperbolicity::new(
            HyperbolicityStatus::Asserted,
            "hyperbolicity verified with SnapPea",
        ),
    )
}

/// Twelve components following the edges of a cube; at each corner the three
/// incident components interlock.
pub fn cube_edge_link() -> LinkBlueprint {
    let vertices: Vec<[i32; 3]> = (0..8)
        .map(|b| {
            [
                (b & 1) * 2 - 1,
                ((b >> 1) & 1) * 2 - 1,
                ((b >> 2) & 1) * 2 - 1,
            ]
        })
        .collect();
    let edges: Vec<(usize, usize)> = (0..8)
        .flat_map(|a| (a + 1..8).map(move |b| (a, b)))
        .filter(|&(a, b)| (0..3).filter(|&i| vertices[a][i] != vertices[b][i]).count() == 1)
        .collect();
    let vertex_index: HashMap<[i32; 3], usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edge_index: HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    let act = |r: &Mat3| -> Permutation {
        let rot = |v: [i32; 3]| -> usize {
            let w: Vec<i32> = (0..3)
                .map(|i| (0..3).map(|j| r[i][j] as i32 * v[j]).sum())
                .collect();
            vertex_index[&[w[0], w[1], w[2]]]
        };
        let images = edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (rot(vertices[a]), rot(vertices[b]));
                edge_index[&(x.min(y), x.max(y))]
            })
            .collect();
        Permutation::from_images(images).expect("rotation permutes edges")
    };

    let n = edges.len();
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if i != j && (a == c || a == d || b == c || b == d) {
                m[i][j] = 1;
            }
        }
    }
    let fmt_v = |v: [i32; 3]| format!("({:+},{:+},{:+})", v[0], v[1], v[2]);
    let mut params = Map::new();
    params.insert("corners".into(), json!(8));
    params.insert("half_loops_per_corner".into(), json!(3));
    LinkBlueprint {
        family: Family::CubeEdge,
        ambient: Ambient::S3,
        components: edges
            .iter()
            .map(|&(a, b)| format!("edge {}-{}", fmt_v(vertices[a]), fmt_v(vertices[b])))
            .collect(),
        linking: Linking::Matrix(m),
        crossings: None,
        symmetry_generators: vec![act(&QUARTER_TURN_Z), act(&CYCLE_XYZ)],
        orientation_signs: Vec::new(),
        hyperbolicity: Hyperbolicity::new(
            HyperbolicityStatus::Asserted,
            "hyperbolicity verified with SnapPea",
        ),
        params,
    }
}

/// Geometric parameters of the helical-arc construction over a Biggs map.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HelicalSpec {
    pub n: usize,
    pub strands_per_face: usize,
    /// Numerator of the helix slope `(n-1)/σ`; `σ` stays symbolic.
    pub slope_numerator: usize,
    pub slope: String,
    pub geometry: Geometry,
    /// Open interval `(r1, r2)` for the helix radius; `None` on the sphere.
    pub rho_window: Option<(f64, f64)>,
    pub arc_count: usize,
    pub puncture_count_per_fiber: usize,
}

impl HelicalSpec {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "strands_per_face": self.strands_per_face,
            "slope": self.slope,
            "geometry": self.geometry,
            "rho_window": self.rho_window.map(|(a, b)| json!([json_num(a), json_num(b)])),
            "arc_count": self.arc_count,
            "puncture_count_per_fiber": self.puncture_count_per_fiber,
        })
    }
}

/// One `(n-1, 1)` torus knot per face of the Biggs map of order `n`, in
/// `S × S¹`, with the affine group acting on the face labels.
pub fn helical_link(spec: &FieldSpec) -> Result<(LinkBlueprint, HelicalSpec), LinkError> {
    let n = spec.order();
    if n <= 3 {
        return Err(LinkError::BadOrder(n as u32));
    }
    let map = biggs_map(spec)?;
    let summary = map.summary();
    let p = (n - 1) as u32;
    let q = summary
        .vertex_degree
        .expect("Biggs maps are vertex-regular") as u32;
    let geometry = tiling_geometry(p, q);
    let rho_window = match polygon_radii(p, q) {
        Ok(w) => Some(w),
        Err(LinkError::Spherical { .. }) => None,
        Err(e) => return Err(e),
    };
    let helical = HelicalSpec {
        n,
        strands_per_face: n - 1,
        slope_numerator: n - 1,
        slope: format!("{}/sigma", n - 1),
        geometry,
        rho_window,
        arc_count: n * (n - 1),
        puncture_count_per_fiber: n * (n - 1),
    };
    // a face's circle crosses into every neighboring face, so components
    // link exactly when their faces share an edge
    let linking = if map.face_adjacency_complete() {
        Linking::Complete
    } else {
        let face_of = map.face_of();
        let labels = map.labels().expect("Biggs maps are labeled");
        let mut m = vec![vec![0i64; n]; n];
        for edge in map.edges() {
            let (a, b) = (labels[edge[0]].0, labels[edge[1]].0);
            debug_assert_eq!(face_of[edge[0]] == face_of[edge[1]], a == b);
            if a != b {
                m[a][b] = 1;
                m[b][a] = 1;
            }
        }
        Linking::Matrix(m)
    };
    let mut params = Map::new();
    params.insert("genus".into(), json!(summary.genus));
    params.insert("vertex_degree".into(), json!(q));
    params.insert("helical".into(), helical.to_json());
    let blueprint = LinkBlueprint {
        family: Family::Helical,
        ambient: Ambient::SxS1,
        components: spec
            .enumerate()
            .iter()
            .map(|e| format!("face {e}"))
            .collect(),
        linking,
        crossings: None,
        symmetry_generators: affine_generators(spec),
        orientation_signs: Vec::new(),
        hyperbolicity: Hyperbolicity::new(
            HyperbolicityStatus::Asserted,
            "fibers over the circle with pseudo-Anosov point-pushing monodromy of dilatation 3+2√2",
        ),
        params,
    };
    Ok((blueprint, helical))
}

/// One row of the cusp-count census over prime powers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub components: usize,
    pub complete_linking: bool,
    pub symmetry_order: usize,
    pub transitivity_degree: usize,
    pub invariants_hold: bool,
}

impl CensusRow {
    pub fn passes(&self) -> bool {
        self.components == self.n
            && self.complete_linking
            && self.transitivity_degree == 2
            && self.symmetry_order == self.n * (self.n - 1)
            && self.invariants_hold
    }
}

/// Helical links for every prime power `n` with `3 < n` in `lo..=hi`.
pub fn census(lo: u32, hi: u32, exec: Exec) -> Result<Vec<CensusRow>, LinkError> {
    let ns: Vec<u32> = (lo.max(4)..=hi)
        .filter(|&n| prime_power(n).is_some())
        .collect();
    exec.map(&ns, |&n| {
        let spec = FieldSpec::of_order(n)?;
        let (blueprint, _) = helical_link(&spec)?;
        let group = blueprint.symmetry_group()?;
        Ok(CensusRow {
            n: n as usize,
            components: blueprint.n_components(),
            complete_linking: blueprint.linking == Linking::Complete,
            symmetry_order: group.order(),
            transitivity_degree: group.transitivity_degree(),
            invariants_hold: blueprint.check_invariants(),
        })
    })
    .into_iter()
    .collect()
}

/// One blueprint of each family, with default parameters.
pub fn menagerie() -> Result<Vec<LinkBlueprint>, LinkError> {
    Ok(vec![
        chain_link(6, 0)?,
        cyclic_braid_closure(&five_cycle_braid(), 1)?,
        cube_link(),
        cube_edge_link(),
        icosahedral_link(),
        helical_link(&FieldSpec::of_order(5)?)?.0,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_links() {
        let c = chain_link(6, 0).unwrap();
        assert_eq!(c.n_components(), 6);
        assert_eq!(c.hyperbolicity.status, HyperbolicityStatus::Asserted);
        assert_eq!(c.transitivity_degree().unwrap(), 1);
        assert!(c.check_invariants());

        assert_eq!(
            chain_link(3, 2).unwrap().hyperbolicity.status,
            HyperbolicityStatus::Unknown
        );

        let Linking::Matrix(m) = chain_link(5, 2).unwrap().linking else {
            panic!()
        };
        for (i, row) in m.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate() {
                let neighbors = (i + 1) % 5 == j || (j + 1) % 5 == i;
                assert_eq!(entry, i64::from(neighbors));
            }
        }
        let Linking::Matrix(m) = chain_link(2, 0).unwrap().linking else {
            panic!()
        };
        assert_eq!(m, [[0, 2], [2, 0]]);
        assert_eq!(chain_link(1, 0), Err(LinkError::TooFewComponents(1)));
    }

    #[test]
    fn braid_words() {
        assert!(matches!(
            BraidWord::new(3, vec![3]),
            Err(LinkError::BraidIndex { .. })
        ));
        assert!(matches!(
            BraidWord::new(3, vec![0]),
            Err(LinkError::BraidIndex { .. })
        ));
        assert_eq!(BraidWord::new(0, vec![]), Err(LinkError::NoStrands));

        assert_eq!(
            braid_permutation(&five_cycle_braid()).cycle_notation(1),
            "(1 3 5 4 2)"
        );
        assert!(braid_permutation(&BraidWord::new(4, vec![]).unwrap()).is_identity());
        let s1 = BraidWord::new(2, vec![1]).unwrap();
        assert_eq!(braid_permutation(&s1), Permutation::transposition(2, 0, 1));
    }

    #[test]
    fn braid_closures() {
        let b = cyclic_braid_closure(&five_cycle_braid(), 1).unwrap();
        assert_eq!(b.n_components(), 5);
        assert_eq!(b.crossings, Some(20));
        assert!(b.check_invariants());
        assert_eq!(b.transitivity_degree().unwrap(), 1);
        assert_eq!(b.hyperbolicity.status, HyperbolicityStatus::Conditional);

        let hopf = cyclic_braid_closure(&BraidWord::new(2, vec![1]).unwrap(), 1).unwrap();
        assert_eq!(hopf.n_components(), 2);
        assert_eq!(hopf.linking, Linking::Matrix(vec![vec![0, 1], vec![1, 0]]));

        let not_cyclic = BraidWord::new(3, vec![1]).unwrap();
        assert!(matches!(
            cyclic_braid_closure(&not_cyclic, 1),
            Err(LinkError::NotCyclic(_))
        ));
        assert_eq!(
            cyclic_braid_closure(&five_cycle_braid(), 0),
            Err(LinkError::BadPower)
        );
    }

    #[test]
    fn component_count_is_cycle_count() {
        for m in 1..=3 {
            let b = five_cycle_braid();
            let pi = braid_permutation(&b);
            let blueprint = cyclic_braid_closure(&b, m).unwrap();
            assert_eq!(
                blueprint.n_components(),
                pi.pow((5 * m) as u64).cycles().len()
            );
        }
    }

    #[test]
    fn cube_diagonal_link() {
        let c = cube_link();
        assert_eq!(c.n_components(), 4);
        assert_eq!(c.crossings, Some(12));
        let g = c.symmetry_group().unwrap();
        assert_eq!((g.order(), g.transitivity_degree()), (24, 4));
        assert!(c.check_invariants());
        let Linking::Matrix(m) = &c.linking else {
            panic!()
        };
        assert!((0..4).all(|i| (0..4).all(|j| i == j || m[i][j].abs() == 1)));
    }

    #[test]
    fn cube_edges() {
        let c = cube_edge_link();
        assert_eq!(c.n_components(), 12);
        let g = c.symmetry_group().unwrap();
        assert_eq!((g.order(), g.transitivity_degree()), (24, 1));
        assert!(c.check_invariants());
    }

    #[test]
    fn icosahedral() {
        let c = icosahedral_link();
        assert_eq!(c.n_components(), 6);
        assert_eq!(c.crossings, Some(30));
        let g = c.symmetry_group().unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(g.transitivity_degree(), 2);
        assert!(!g.is_k_transitive(3).unwrap());
        assert!(c.check_invariants());
    }

    #[test]
    fn helical() {
        let (b, h) = helical_link(&FieldSpec::of_order(5).unwrap()).unwrap();
        assert_eq!(b.n_components(), 5);
        assert_eq!(b.linking, Linking::Complete);
        assert_eq!(b.transitivity_degree().unwrap(), 2);
        assert_eq!(h.strands_per_face, 4);
        assert_eq!(h.geometry, Geometry::Euclidean);
        let (r1, r2) = h.rho_window.unwrap();
        assert!((r1 - 0.5).abs() < 1e-15 && r1 < r2);

        let (b7, h7) = helical_link(&FieldSpec::of_order(7).unwrap()).unwrap();
        assert_eq!((b7.n_components(), h7.puncture_count_per_fiber), (7, 42));

        let (_, h4) = helical_link(&FieldSpec::of_order(4).unwrap()).unwrap();
        assert_eq!((h4.geometry, h4.rho_window), (Geometry::Spherical, None));

        let f3 = FieldSpec::of_order(3).unwrap();
        assert_eq!(helical_link(&f3).unwrap_err(), LinkError::BadOrder(3));
    }

    #[test]
    fn census_rows() {
        let rows = census(4, 13, Exec::Sequential).unwrap();
        let ns: Vec<usize> = rows.iter().map(|r| r.n).collect();
        assert_eq!(ns, [4, 5, 7, 8, 9, 11, 13]);
        assert!(rows.iter().all(CensusRow::passes));
        assert_eq!(rows, census(4, 13, Exec::Parallel).unwrap());
        assert!(census(14, 15, Exec::Sequential).unwrap().is_empty());
        assert!(census(10, 4, Exec::Sequential).unwrap().is_empty());
    }

    #[test]
    fn exports() {
        for b in menagerie().unwrap() {
            let v = b.export().unwrap();
            let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
            assert_eq!(
                keys,
                [
                    "family",
                    "ambient",
                    "n_components",
                    "linking",
                    "symmetry_order",
                    "transitivity_degree",
                    "hyperbolicity",
                    "params"
                ]
            );
        }
        let helical = helical_link(&FieldSpec::of_order(5).unwrap())
            .unwrap()
            .0
            .export()
            .unwrap();
        assert_eq!(helical["linking"], "complete");
        assert_eq!(helical["ambient"], "SxS1");
    }
}
