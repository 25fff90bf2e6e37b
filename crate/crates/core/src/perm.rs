//! Permutation groups given by generators and exact k-transitivity tests.
//!
//! Points are abstract indices `0..d`. A group acts k-transitively when every
//! ordered k-tuple of distinct points can be carried to every other one. Since
//! orbits partition the tuple space, this holds iff the orbit of a single tuple
//! has size `d (d-1) ... (d-k+1)`, which is what [`PermGroup::is_k_transitive`]
//! checks. [`PermGroup::is_k_transitive_literal`] checks every source/target
//! pair directly and serves as the reference for small groups.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::FieldSpec;
use crate::par::Exec;

/// Default cap on the number of group elements materialized by a closure.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_ELEMENT_CAP`].
pub const ELEMENT_CAP_ENV: &str = "CSL_MAX_GROUP";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image array is not a bijection of 0..{0}")]
    NotBijection(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group closure exceeded the element cap of {0}")]
    CapExceeded(usize),
    #[error("k = {k} is out of range 1..={degree}")]
    KOutOfRange { k: usize, degree: usize },
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("cycle entry {0} repeats or is out of range")]
    BadCycle(usize),
}

/// A bijection of `0..d`, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || seen[i] {
                return Err(PermError::NotBijection(d));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation of degree `degree` from disjoint cycles (0-based).
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree || used[x] {
                    return Err(PermError::BadCycle(x));
                }
                used[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, e: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        result
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// All cycles including fixed points, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |l, c| l / gcd(l, c) * c)
    }

    /// Cycle notation without fixed points, with points shifted by `offset`.
    pub fn cycle_notation(&self, offset: usize) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| (x + offset).to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect();
        if parts.is_empty() {
            "()".to_string()
        } else {
            parts.concat()
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation(0))
    }
}

/// `d (d-1) ... (d-k+1)`, the number of ordered k-tuples of distinct points.
pub fn falling_factorial(d: usize, k: usize) -> u128 {
    (0..k).map(|i| (d - i) as u128).product()
}

/// Element cap honoring the `CSL_MAX_GROUP` override.
pub fn default_element_cap() -> usize {
    std::env::var(ELEMENT_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ELEMENT_CAP)
}

/// A permutation group with its full element list.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

/// Breadth-first closure of `generators` under composition.
pub fn group_closure(generators: Vec<Permutation>) -> Result<PermGroup, PermError> {
    group_closure_with_cap(generators, default_element_cap())
}

pub fn group_closure_with_cap(
    generators: Vec<Permutation>,
    cap: usize,
) -> Result<PermGroup, PermError> {
    let degree = generators.first().ok_or(PermError::NoGenerators)?.degree();
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(PermError::DegreeMismatch {
            expected: degree,
            found: g.degree(),
        });
    }

    // in a finite group, closure under right multiplication by generators
    // already contains all inverses
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in &generators {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                if elements.len() >= cap {
                    return Err(PermError::CapExceeded(cap));
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(PermGroup {
        degree,
        generators,
        elements,
    })
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// Orbit of an ordered tuple under the generators, in discovery order.
    pub fn tuple_orbit(&self, tuple: &[usize]) -> Vec<Vec<usize>> {
        let start = tuple.to_vec();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(t) = queue.pop_front() {
            for g in &self.generators {
                let image: Vec<usize> = t.iter().map(|&x| g.apply(x)).collect();
                if seen.insert(image.clone()) {
                    out.push(image.clone());
                    queue.push_back(image);
                }
            }
        }
        out
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut o: Vec<usize> = self
            .tuple_orbit(&[point])
            .into_iter()
            .map(|t| t[0])
            .collect();
        o.sort_unstable();
        o
    }

    /// Point orbits, sorted by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let o = self.orbit(x);
                for &y in &o {
                    seen[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn stabilizer_order(&self, point: usize) -> usize {
        self.elements
            .iter()
            .filter(|g| g.apply(point) == point)
            .count()
    }

    fn check_k(&self, k: usize) -> Result<(), PermError> {
        if k == 0 || k > self.degree {
            return Err(PermError::KOutOfRange {
                k,
                degree: self.degree,
            });
        }
        Ok(())
    }

    /// True iff the orbit of `(0, 1, ..., k-1)` covers every ordered k-tuple
    /// of distinct points.
    pub fn is_k_transitive(&self, k: usize) -> Result<bool, PermError> {
        self.check_k(k)?;
        let tuple: Vec<usize> = (0..k).collect();
        Ok(self.tuple_orbit(&tuple).len() as u128 == falling_factorial(self.degree, k))
    }

    /// Direct check over every source tuple: the images of the source under
    /// all group elements must hit every target tuple.
    pub fn is_k_transitive_literal(&self, k: usize, exec: Exec) -> Result<bool, PermError> {
        self.check_k(k)?;
        let tuples = distinct_tuples(self.degree, k);
        let total = tuples.len();
        Ok(exec.all(&tuples, |src| {
            let images: HashSet<Vec<usize>> = self
                .elements
                .iter()
                .map(|g| src.iter().map(|&x| g.apply(x)).collect())
                .collect();
            images.len() == total
        }))
    }

    /// Largest k with a k-transitive action; 0 when not transitive.
    pub fn transitivity_degree(&self) -> usize {
        for k in 1..=self.degree {
            if !self.is_k_transitive(k).expect("k in range") {
                return k - 1;
            }
        }
        self.degree
    }

    pub fn report(&self) -> GroupReport {
        GroupReport {
            degree: self.degree,
            generators: self.generators.clone(),
            order: self.order(),
            transitivity_degree: self.transitivity_degree(),
        }
    }
}

/// JSON form of a group: generators plus computed invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub order: usize,
    pub transitivity_degree: usize,
}

/// Every ordered k-tuple of distinct points of `0..d`, lexicographically.
pub fn distinct_tuples(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(d: usize, k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..d {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(d, k, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        d,
        k,
        &mut Vec::with_capacity(k),
        &mut vec![false; d],
        &mut out,
    );
    out
}

/// `x -> s x + t` on field indices (ordered as in `FieldSpec::enumerate`).
pub fn affine_permutation(spec: &FieldSpec, s: usize, t: usize) -> Permutation {
    assert!(s != 0, "affine multiplier must be nonzero");
    Permutation {
        images: (0..spec.order())
            .map(|x| spec.add_idx(spec.mul_idx(s, x), t))
            .collect(),
    }
}

/// Generators of the affine group `A(1, F)`: translations by an additive
/// basis of F, and multiplication by the primitive element.
pub fn affine_generators(spec: &FieldSpec) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = spec
        .additive_basis()
        .iter()
        .map(|b| affine_permutation(spec, 1, spec.index_of(b).expect("basis element")))
        .collect();
    gens.push(affine_permutation(spec, spec.primitive_idx(), 0));
    gens
}

/// The affine group `A(1, F)` acting on the n field elements.
pub fn affine_group(spec: &FieldSpec) -> PermGroup {
    group_closure_with_cap(affine_generators(spec), usize::MAX)
        .expect("affine generators share one degree")
}
