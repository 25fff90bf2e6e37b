//! Measured train tracks for the point-pushing monodromy of the Biggs link
//! complements, and the Perron–Frobenius machinery that extracts the
//! dilatation from them.
//!
//! The reduced track has two branch classes, `w~` and `z~`. The monodromy
//! stretches a `w~` edge over `w~ z~ w~ z~ w~` and a `z~` edge over
//! `w~ z~ w~ z~ w~ z~ w~`. The letter-count matrix of these rules governs edge
//! lengths (the tangential measure); its transpose governs branch weights
//! (the transverse measure). Both have dominant eigenvalue `3 + 2√2`.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

/// Default residual tolerance for [`perron_eigen`].
pub const DEFAULT_TOL: f64 = 1e-13;

/// Iteration cap for [`perron_eigen`].
pub const MAX_ITERATIONS: usize = 1_000_000;

pub const W_TILDE: &str = "w~";
pub const Z_TILDE: &str = "z~";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TrackError {
    #[error("rule for {0:?} is empty")]
    EmptyRule(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("label {0:?} appears twice")]
    DuplicateLabel(String),
    #[error("matrix is empty or not square")]
    NotSquare,
    #[error("matrix is not primitive")]
    NotPrimitive,
    #[error("power iteration did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error("measure has no weight for class {0:?}")]
    MissingClass(String),
}

/// Edge-path images of each branch class under the monodromy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionRules {
    labels: Vec<String>,
    rules: Vec<Vec<usize>>,
}

impl SubstitutionRules {
    pub fn new(rules: &[(&str, &[&str])]) -> Result<Self, TrackError> {
        let mut labels: Vec<String> = Vec::with_capacity(rules.len());
        for (label, _) in rules {
            if labels.iter().any(|l| l == label) {
                return Err(TrackError::DuplicateLabel(label.to_string()));
            }
            labels.push(label.to_string());
        }
        let words = rules
            .iter()
            .map(|(label, word)| {
                if word.is_empty() {
                    return Err(TrackError::EmptyRule(label.to_string()));
                }
                word.iter()
                    .map(|w| {
                        labels
                            .iter()
                            .position(|l| l == w)
                            .ok_or_else(|| TrackError::UnknownLabel(w.to_string()))
                    })
                    .collect()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SubstitutionRules {
            labels,
            rules: words,
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rule(&self, label: usize) -> &[usize] {
        &self.rules[label]
    }

    pub fn rule_of(&self, label: &str) -> Option<Vec<&str>> {
        let i = self.labels.iter().position(|l| l == label)?;
        Some(
            self.rules[i]
                .iter()
                .map(|&j| self.labels[j].as_str())
                .collect(),
        )
    }

    /// Applies the rules `times` times to `word`, materializing the result.
    pub fn iterate(&self, word: &[usize], times: usize) -> Vec<usize> {
        let mut cur = word.to_vec();
        for _ in 0..times {
            cur = cur
                .iter()
                .flat_map(|&l| self.rules[l].iter().copied())
                .collect();
        }
        cur
    }

    /// Lengths of the first `times` iterated images of `word` (index 0 is the
    /// word itself), computed from letter counts.
    pub fn iterated_lengths(&self, word: &[usize], times: usize) -> Vec<u128> {
        let m = transition_matrix(self);
        let d = self.labels.len();
        let mut counts = vec![0u128; d];
        for &l in word {
            counts[l] += 1;
        }
        let mut out = vec![counts.iter().sum()];
        for _ in 0..times {
            let next: Vec<u128> = (0..d)
                .map(|j| (0..d).map(|i| counts[i] * m.entries[i][j] as u128).sum())
                .collect();
            counts = next;
            out.push(counts.iter().sum());
        }
        out
    }

    /// DOT multigraph: one arrow `a -> b` for every letter `b` in the rule of `a`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph substitution {\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  s{i} [label=\"{l}\"];");
        }
        for (i, word) in self.rules.iter().enumerate() {
            for (pos, &j) in word.iter().enumerate() {
                let _ = writeln!(out, "  s{i} -> s{j} [label=\"{pos}\"];");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The reduced two-class track of the point-pushing monodromy.
pub fn biggs_substitution() -> SubstitutionRules {
    let (w, z) = (W_TILDE, Z_TILDE);
    SubstitutionRules::new(&[(w, &[w, z, w, z, w]), (z, &[w, z, w, z, w, z, w])])
        .expect("fixed rules are well formed")
}

/// Square nonnegative integer matrix with labeled rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitionMatrix {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<u64>>,
}

/// Row `i` counts the letters in the rule of label `i`: entry `(i, j)` is the
/// number of `j` edges the image of an `i` edge crosses.
pub fn transition_matrix(rules: &SubstitutionRules) -> TransitionMatrix {
    let d = rules.labels.len();
    let entries = rules
        .rules
        .iter()
        .map(|word| {
            let mut row = vec![0u64; d];
            for &j in word {
                row[j] += 1;
            }
            row
        })
        .collect();
    TransitionMatrix {
        labels: rules.labels.clone(),
        entries,
    }
}

impl TransitionMatrix {
    pub fn from_rows(entries: Vec<Vec<u64>>) -> Result<Self, TrackError> {
        let d = entries.len();
        if d == 0 || entries.iter().any(|r| r.len() != d) {
            return Err(TrackError::NotSquare);
        }
        let labels = (0..d).map(|i| format!("e{i}")).collect();
        Ok(TransitionMatrix { labels, entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> TransitionMatrix {
        let d = self.dim();
        let entries = (0..d)
            .map(|i| (0..d).map(|j| self.entries[j][i]).collect())
            .collect();
        TransitionMatrix {
            labels: self.labels.clone(),
            entries,
        }
    }

    /// Some power is strictly positive. By Wielandt's bound it suffices to
    /// look at powers up to `(d - 1)^2 + 1`.
    pub fn is_primitive(&self) -> bool {
        let d = self.dim();
        let base: Vec<Vec<bool>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&x| x > 0).collect())
            .collect();
        let mut power = base.clone();
        for _ in 0..(d - 1) * (d - 1) + 1 {
            if power.iter().all(|r| r.iter().all(|&x| x)) {
                return true;
            }
            power = (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| (0..d).any(|k| power[i][k] && base[k][j]))
                        .collect()
                })
                .collect();
        }
        false
    }

    fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.entries
            .iter()
            .map(|r| r.iter().zip(v).map(|(&a, &x)| a as f64 * x).sum())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerronEigen {
    pub lambda: f64,
    /// Strictly positive, last entry 1.
    pub vector: Vec<f64>,
    pub iterations: usize,
    /// `‖Mv − λv‖∞` at the returned pair.
    pub residual: f64,
}

fn sup_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Dominant eigenpair by power iteration from the all-ones vector, with the
/// Rayleigh quotient as eigenvalue estimate. Stops once
/// `‖Mv − λv‖∞ ≤ tol · ‖v‖∞`.
pub fn perron_eigen(m: &TransitionMatrix, tol: f64) -> Result<PerronEigen, TrackError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(TrackError::BadTolerance(tol));
    }
    if m.dim() == 0 {
        return Err(TrackError::NotSquare);
    }
    if !m.is_primitive() {
        return Err(TrackError::NotPrimitive);
    }
    let d = m.dim();
    let mut v = vec![1.0; d];
    for iterations in 1..=MAX_ITERATIONS {
        let u = m.apply(&v);
        let last = u[d - 1];
        v = u.iter().map(|x| x / last).collect();
        let mv = m.apply(&v);
        let lambda = dot(&v, &mv) / dot(&v, &v);
        let residual = sup_norm(
            &mv.iter()
                .zip(&v)
                .map(|(a, b)| a - lambda * b)
                .collect::<Vec<_>>(),
        );
        if residual <= tol * sup_norm(&v) {
            return Ok(PerronEigen {
                lambda,
                vector: v,
                iterations,
                residual,
            });
        }
    }
    Err(TrackError::NoConvergence(MAX_ITERATIONS))
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Eigenvalues of a 2×2 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Eigenvalues2 {
    /// Larger first.
    Real {
        hi: f64,
        lo: f64,
    },
    Complex {
        re: f64,
        im: f64,
    },
}

/// Closed-form eigenvalues from trace and determinant.
pub fn eigenvalues_2x2(m: [[i64; 2]; 2]) -> Eigenvalues2 {
    let tr = (m[0][0] + m[1][1]) as f64;
    let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) as f64;
    let disc = tr * tr - 4.0 * det;
    if disc >= 0.0 {
        let s = disc.sqrt();
        // avoid cancellation in the smaller root
        let hi = if tr >= 0.0 {
            (tr + s) / 2.0
        } else {
            (tr - s) / 2.0
        };
        let lo = if hi != 0.0 { det / hi } else { (tr - s) / 2.0 };
        let (hi, lo) = if hi >= lo { (hi, lo) } else { (lo, hi) };
        Eigenvalues2::Real { hi, lo }
    } else {
        Eigenvalues2::Complex {
            re: tr / 2.0,
            im: (-disc).sqrt() / 2.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnosovReport {
    pub det: i64,
    pub trace: i64,
    pub eigenvalues: Eigenvalues2,
    /// Unimodular with no eigenvalue on the unit circle.
    pub is_anosov: bool,
}

pub fn anosov_check(m: [[i64; 2]; 2]) -> AnosovReport {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let trace = m[0][0] + m[1][1];
    // for det = ±1, hyperbolicity is an integer condition on the trace
    let is_anosov = match det {
        1 => trace.abs() > 2,
        -1 => trace != 0,
        _ => false,
    };
    AnosovReport {
        det,
        trace,
        eigenvalues: eigenvalues_2x2(m),
        is_anosov,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureKind {
    Transverse,
    Tangential,
}

/// Positive weights on branch classes together with their stretch factor.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureSystem {
    pub kind: MeasureKind,
    pub labels: Vec<String>,
    pub weights: Vec<f64>,
    pub lambda: f64,
}

impl MeasureSystem {
    pub fn weight(&self, class: &str) -> Result<f64, TrackError> {
        self.labels
            .iter()
            .position(|l| l == class)
            .map(|i| self.weights[i])
            .ok_or_else(|| TrackError::MissingClass(class.to_string()))
    }

    /// Weight `w + 2z` of a branch half-surrounding a puncture.
    pub fn semicircular(&self) -> Result<f64, TrackError> {
        Ok(self.weight("w")? + 2.0 * self.weight("z")?)
    }

    /// Weight `2w + 2z` of a short branch between neighboring punctures.
    pub fn short_branch(&self) -> Result<f64, TrackError> {
        Ok(2.0 * self.weight("w")? + 2.0 * self.weight("z")?)
    }
}

/// Transverse weights `(w, z)` normalized to `z = 1`.
pub fn transverse_weights() -> Result<MeasureSystem, TrackError> {
    transverse_weights_with_tol(DEFAULT_TOL)
}

pub fn transverse_weights_with_tol(tol: f64) -> Result<MeasureSystem, TrackError> {
    let m = transition_matrix(&biggs_substitution()).transpose();
    let eig = perron_eigen(&m, tol)?;
    Ok(MeasureSystem {
        kind: MeasureKind::Transverse,
        labels: vec!["w".into(), "z".into()],
        weights: eig.vector,
        lambda: eig.lambda,
    })
}

/// Tangential lengths `(w~, z~)` normalized to `z~ = 1`.
pub fn tangential_weights() -> Result<MeasureSystem, TrackError> {
    let m = transition_matrix(&biggs_substitution());
    let eig = perron_eigen(&m, DEFAULT_TOL)?;
    Ok(MeasureSystem {
        kind: MeasureKind::Tangential,
        labels: m.labels,
        weights: eig.vector,
        lambda: eig.lambda,
    })
}

/// Residuals of the three weight equations at `(w, z, λ)`:
/// `10w + 14z = λ(2w + 2z)`, `2w + 3z = λz` and their combination
/// `3w + 4z = λw`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeightResiduals {
    pub eq1: f64,
    pub eq2: f64,
    pub eq3: f64,
}

pub fn weight_residuals(w: f64, z: f64, lambda: f64) -> WeightResiduals {
    WeightResiduals {
        eq1: (10.0 * w + 14.0 * z - lambda * (2.0 * w + 2.0 * z)).abs(),
        eq2: (2.0 * w + 3.0 * z - lambda * z).abs(),
        eq3: (3.0 * w + 4.0 * z - lambda * w).abs(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Dilatation {
    pub lambda: f64,
    pub lambda_inverse: f64,
    /// Closed-form root of the characteristic polynomial, for comparison.
    pub exact_lambda: f64,
}

/// Dilatation of the monodromy, from the reduced track. The track does not
/// depend on the field order, so neither does the result.
pub fn dilatation() -> Result<Dilatation, TrackError> {
    dilatation_with_tol(DEFAULT_TOL)
}

pub fn dilatation_with_tol(tol: f64) -> Result<Dilatation, TrackError> {
    let m = transition_matrix(&biggs_substitution());
    let eig = perron_eigen(&m, tol)?;
    let e = &m.entries;
    let exact_lambda = match eigenvalues_2x2([
        [e[0][0] as i64, e[0][1] as i64],
        [e[1][0] as i64, e[1][1] as i64],
    ]) {
        Eigenvalues2::Real { hi, .. } => hi,
        Eigenvalues2::Complex { .. } => f64::NAN,
    };
    Ok(Dilatation {
        lambda: eig.lambda,
        lambda_inverse: 1.0 / eig.lambda,
        exact_lambda,
    })
}

/// Everything the `dilatation` command reports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DilatationReport {
    pub lambda: f64,
    pub lambda_inverse: f64,
    pub w: f64,
    pub z: f64,
    pub residuals: DilatationResiduals,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DilatationResiduals {
    pub eq1: f64,
    pub eq2: f64,
    pub eq3: f64,
    /// `|λ² − 6λ + 1|`
    pub char_poly: f64,
    /// `|λ · λ⁻¹ − 1|`
    pub inverse: f64,
    /// `|λ_transverse − λ_tangential|`
    pub transpose: f64,
    /// `|λ − λ_exact|`
    pub exact: f64,
}

impl DilatationResiduals {
    pub fn max(&self) -> f64 {
        [
            self.eq1,
            self.eq2,
            self.eq3,
            self.char_poly,
            self.inverse,
            self.transpose,
            self.exact,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

pub fn dilatation_report(tol: f64) -> Result<DilatationReport, TrackError> {
    let dil = dilatation_with_tol(tol)?;
    let transverse = transverse_weights_with_tol(tol)?;
    let (w, z) = (transverse.weight("w")?, transverse.weight("z")?);
    let eqs = weight_residuals(w, z, dil.lambda);
    let l = dil.lambda;
    Ok(DilatationReport {
        lambda: l,
        lambda_inverse: dil.lambda_inverse,
        w,
        z,
        residuals: DilatationResiduals {
            eq1: eqs.eq1,
            eq2: eqs.eq2,
            eq3: eqs.eq3,
            char_poly: (l * l - 6.0 * l + 1.0).abs(),
            inverse: (l * dil.lambda_inverse - 1.0).abs(),
            transpose: (transverse.lambda - l).abs(),
            exact: (l - dil.exact_lambda).abs(),
        },
    })
}

/// Transverse arc and the primitive weight classes it crosses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcCrossing {
    pub label: String,
    pub crossings: Vec<(String, u32)>,
    /// Number of track branches crossed, when known.
    pub branches: Option<u32>,
}

impl ArcCrossing {
    pub fn new(label: &str, w_units: u32, z_units: u32, branches: Option<u32>) -> Self {
        ArcCrossing {
            label: label.to_string(),
            crossings: vec![("w".to_string(), w_units), ("z".to_string(), z_units)],
            branches,
        }
    }
}

pub fn crossing_measure(arc: &ArcCrossing, m: &MeasureSystem) -> Result<f64, TrackError> {
    arc.crossings
        .iter()
        .map(|(class, count)| Ok(*count as f64 * m.weight(class)?))
        .sum()
}

/// Arcs read off the full track, each paired with its image under the
/// monodromy: `AB -> CD` and `DF -> EF`.
pub fn dilatation_arcs() -> [(ArcCrossing, ArcCrossing); 2] {
    [
        (
            ArcCrossing::new("AB", 10, 14, Some(17)),
            ArcCrossing::new("CD", 2, 2, None),
        ),
        (
            ArcCrossing::new("DF", 2, 3, None),
            ArcCrossing::new("EF", 0, 1, None),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn biggs_rules() {
        let r = biggs_substitution();
        assert_eq!(r.labels(), [W_TILDE, Z_TILDE]);
        assert_eq!(r.rule(0).len(), 5);
        assert_eq!(r.rule(1).len(), 7);
        assert_eq!(
            r.rule_of(Z_TILDE).unwrap().join(" "),
            "w~ z~ w~ z~ w~ z~ w~"
        );
    }

    #[test]
    fn rule_validation() {
        assert_eq!(
            SubstitutionRules::new(&[("a", &[])]),
            Err(TrackError::EmptyRule("a".into()))
        );
        assert_eq!(
            SubstitutionRules::new(&[("a", &["b"])]),
            Err(TrackError::UnknownLabel("b".into()))
        );
        assert_eq!(
            SubstitutionRules::new(&[("a", &["a"]), ("a", &["a"])]),
            Err(TrackError::DuplicateLabel("a".into()))
        );
    }

    #[test]
    fn letter_count_matrices() {
        assert_eq!(
            transition_matrix(&biggs_substitution()).entries,
            [[3, 2], [4, 3]]
        );
        let id = SubstitutionRules::new(&[("a", &["a"])]).unwrap();
        assert_eq!(transition_matrix(&id).entries, [[1]]);
        let fib = SubstitutionRules::new(&[("a", &["a", "b"]), ("b", &["a"])]).unwrap();
        assert_eq!(transition_matrix(&fib).entries, [[1, 1], [1, 0]]);
    }

    #[test]
    fn perron_on_transverse_matrix() {
        let m = TransitionMatrix::from_rows(vec![vec![3, 4], vec![2, 3]]).unwrap();
        let e = perron_eigen(&m, DEFAULT_TOL).unwrap();
        assert_abs_diff_eq!(e.lambda, 3.0 + 2.0 * SQRT2, epsilon = 1e-12);
        assert_abs_diff_eq!(e.vector[0], SQRT2, epsilon = 1e-12);
        assert_eq!(e.vector[1], 1.0);
    }

    #[test]
    fn perron_rejects_bad_input() {
        let id = TransitionMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(
            perron_eigen(&id, DEFAULT_TOL),
            Err(TrackError::NotPrimitive)
        );
        let m = TransitionMatrix::from_rows(vec![vec![1]]).unwrap();
        assert_eq!(perron_eigen(&m, 0.0), Err(TrackError::BadTolerance(0.0)));
        assert_eq!(
            TransitionMatrix::from_rows(vec![vec![1, 2]]),
            Err(TrackError::NotSquare)
        );
        // period 2: irreducible but not primitive
        let swap = TransitionMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(!swap.is_primitive());
    }

    #[test]
    fn golden_ratio() {
        let m = TransitionMatrix::from_rows(vec![vec![1, 1], vec![1, 0]]).unwrap();
        let e = perron_eigen(&m, DEFAULT_TOL).unwrap();
        let oracle = (1.0 + 5f64.sqrt()) / 2.0;
        assert_abs_diff_eq!(e.lambda, oracle, epsilon = 1e-12);
    }

    #[test]
    fn wielandt_matrix_is_primitive() {
        // needs (d-1)^2 + 1 = 10 powers before turning positive
        let m = TransitionMatrix::from_rows(vec![
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![1, 1, 0, 0],
        ])
        .unwrap();
        assert!(m.is_primitive());
        let e = perron_eigen(&m, 1e-12).unwrap();
        assert!(e.vector.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn dilatation_values() {
        let d = dilatation().unwrap();
        assert_abs_diff_eq!(d.lambda, 5.828_427_124_746_19, epsilon = 1e-12);
        assert_abs_diff_eq!(d.lambda_inverse, 0.171572875253810, epsilon = 1e-12);
        assert_abs_diff_eq!(d.lambda * d.lambda_inverse, 1.0, epsilon = 1e-12);
        assert!((d.lambda * d.lambda - 6.0 * d.lambda + 1.0).abs() < 1e-12);
        assert_abs_diff_eq!(d.lambda, d.exact_lambda, epsilon = 1e-12);
    }

    #[test]
    fn transverse_and_tangential_weights() {
        let t = transverse_weights().unwrap();
        let (w, z) = (t.weight("w").unwrap(), t.weight("z").unwrap());
        assert_abs_diff_eq!(w, SQRT2, epsilon = 1e-12);
        assert_eq!(z, 1.0);
        let r = weight_residuals(w, z, t.lambda);
        assert!(r.eq1 < 1e-12 && r.eq2 < 1e-12 && r.eq3 < 1e-12);
        assert_abs_diff_eq!(t.semicircular().unwrap(), SQRT2 + 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            t.short_branch().unwrap(),
            2.0 * SQRT2 + 2.0,
            epsilon = 1e-12
        );

        let g = tangential_weights().unwrap();
        // reciprocal up to scale: w~ * w == z~ * z
        assert_abs_diff_eq!(g.weights[0] * w, g.weights[1] * z, epsilon = 1e-12);
        assert!(matches!(g.semicircular(), Err(TrackError::MissingClass(_))));
    }

    #[test]
    fn arc_measures() {
        let t = transverse_weights().unwrap();
        let [(ab, cd), (df, ef)] = dilatation_arcs();
        let mab = crossing_measure(&ab, &t).unwrap();
        assert_abs_diff_eq!(mab, 10.0 * SQRT2 + 14.0, epsilon = 1e-12);
        assert_abs_diff_eq!(mab, 28.142_135_623_730_95, epsilon = 1e-9);
        let mcd = crossing_measure(&cd, &t).unwrap();
        assert_abs_diff_eq!(mab / mcd, t.lambda, epsilon = 1e-12);
        let ratio = crossing_measure(&df, &t).unwrap() / crossing_measure(&ef, &t).unwrap();
        assert_abs_diff_eq!(ratio, t.lambda, epsilon = 1e-12);
    }

    #[test]
    fn anosov_reports() {
        let r = anosov_check([[3, 4], [2, 3]]);
        assert_eq!((r.det, r.trace, r.is_anosov), (1, 6, true));
        let Eigenvalues2::Real { hi, lo } = r.eigenvalues else {
            panic!("real spectrum")
        };
        assert_abs_diff_eq!(hi, 3.0 + 2.0 * SQRT2, epsilon = 1e-12);
        assert_abs_diff_eq!(lo, 3.0 - 2.0 * SQRT2, epsilon = 1e-12);

        let id = anosov_check([[1, 0], [0, 1]]);
        assert_eq!(id.eigenvalues, Eigenvalues2::Real { hi: 1.0, lo: 1.0 });
        assert!(!id.is_anosov);

        let cat = anosov_check([[2, 1], [1, 1]]);
        let Eigenvalues2::Real { hi, lo } = cat.eigenvalues else {
            panic!("real spectrum")
        };
        assert_abs_diff_eq!(hi, (3.0 + 5f64.sqrt()) / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(lo, (3.0 - 5f64.sqrt()) / 2.0, epsilon = 1e-12);
        assert!(cat.is_anosov);

        assert!(matches!(
            eigenvalues_2x2([[0, -1], [1, 0]]),
            Eigenvalues2::Complex { .. }
        ));
    }

    #[test]
    fn growth_counts_match_materialized_words() {
        let r = biggs_substitution();
        let lengths = r.iterated_lengths(&[0], 7);
        for (k, &len) in lengths.iter().enumerate() {
            assert_eq!(r.iterate(&[0], k).len() as u128, len);
        }
    }

    #[test]
    fn dot_export() {
        let dot = biggs_substitution().to_dot();
        assert_eq!(dot.matches(" -> ").count(), 12);
    }
}
