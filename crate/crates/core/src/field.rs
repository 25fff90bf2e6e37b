//! Arithmetic in a finite field of order `n = p^k`.
//!
//! Elements are dense coefficient vectors `c0 + c1 x + ... + c(k-1) x^(k-1)`
//! reduced modulo a monic irreducible polynomial. Every field in scope is tiny,
//! so `FieldSpec` precomputes full addition and multiplication tables indexed by
//! the canonical element index `sum c_i p^i`.

use std::fmt;

use thiserror::Error;

/// Default cap on the field order.
pub const DEFAULT_ORDER_CAP: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1, got {0}")]
    BadDegree(u32),
    #[error("field order {p}^{k} exceeds the cap {cap}")]
    OrderTooLarge { p: u32, k: u32, cap: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    BadModulus(u32),
    #[error("element does not belong to GF({p}^{k})")]
    MismatchedSpec { p: u32, k: u32 },
    #[error("cannot parse field element from {0:?}")]
    Parse(String),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// A field element as its coefficient vector, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }
}

/// Serializes as `"c0,c1,...,c(k-1)"`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite field `GF(p^k)` with its defining modulus and operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    modulus: Vec<u32>,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `n` into `(p, k)` with `n = p^k`, if `n` is a prime power.
pub fn prime_power(n: u32) -> Option<(u32, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// Remainder of `a` modulo the monic polynomial `m` over Z/p (coefficients low-first).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dm;
            for (i, &mi) in m[..dm].iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * mi) % p;
            }
        }
    }
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `tail`.
fn monic_from_index(tail: usize, deg: usize, p: u32) -> Vec<u32> {
    let mut coeffs = digits(tail, deg, p);
    coeffs.push(1);
    coeffs
}

fn digits(mut idx: usize, len: usize, p: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((idx % p as usize) as u32);
        idx /= p as usize;
    }
    out
}

/// Irreducibility by exhaustive trial division with every monic polynomial of
/// degree `1..=deg/2`.
pub fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    if modulus.len() < 2 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
        return false;
    }
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        for tail in 0..(p as usize).pow(d as u32) {
            let factor = monic_from_index(tail, d, p);
            if poly_rem(modulus, &factor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// `GF(p^k)` with the smallest monic irreducible modulus, ordering
    /// candidates by the base-`p` value of their lower coefficients.
    pub fn new(p: u32, k: u32) -> Result<Self, FieldError> {
        Self::with_cap(p, k, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(p: u32, k: u32, cap: u32) -> Result<Self, FieldError> {
        Self::check_params(p, k, cap)?;
        let deg = k as usize;
        let modulus = (0..(p as usize).pow(k))
            .map(|tail| monic_from_index(tail, deg, p))
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial exists in every degree");
        Ok(Self::build(p, k, modulus))
    }

    /// The field of order `n`, which must be a prime power.
    pub fn of_order(n: u32) -> Result<Self, FieldError> {
        let (p, k) = prime_power(n).ok_or(FieldError::NotPrimePower(n))?;
        Self::new(p, k)
    }

    /// `GF(p^k)` with a caller-chosen modulus (low-first, monic, degree k).
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self, FieldError> {
        let k = modulus.len().saturating_sub(1) as u32;
        Self::check_params(p, k, DEFAULT_ORDER_CAP)?;
        if !is_irreducible(&modulus, p) {
            return Err(FieldError::BadModulus(k));
        }
        Ok(Self::build(p, k, modulus))
    }

    fn check_params(p: u32, k: u32, cap: u32) -> Result<(), FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k < 1 {
            return Err(FieldError::BadDegree(k));
        }
        match p.checked_pow(k) {
            Some(n) if n <= cap => Ok(()),
            _ => Err(FieldError::OrderTooLarge { p, k, cap }),
        }
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Self {
        let order = (p as usize).pow(k);
        let deg = k as usize;
        let elems: Vec<Vec<u32>> = (0..order).map(|i| digits(i, deg, p)).collect();
        let index = |c: &[u32]| {
            c.iter()
                .rev()
                .fold(0usize, |acc, &d| acc * p as usize + d as usize)
        };

        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
                add[i * order + j] = index(&sum) as u16;

                let mut prod = vec![0u32; 2 * deg - 1];
                for (s, x) in a.iter().enumerate() {
                    for (t, y) in b.iter().enumerate() {
                        prod[s + t] = (prod[s + t] + x * y) % p;
                    }
                }
                let mut rem = poly_rem(&prod, &modulus, p);
                rem.resize(deg, 0);
                mul[i * order + j] = index(&rem) as u16;
            }
        }
        let neg = (0..order)
            .map(|i| (0..order).find(|&j| add[i * order + j] == 0).unwrap() as u16)
            .collect();
        // brute-force inverse search; index 0 maps to itself as a sentinel
        let inv = (0..order)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    (1..order).find(|&j| mul[i * order + j] == 1).unwrap() as u16
                }
            })
            .collect();

        FieldSpec {
            p,
            k,
            modulus,
            order,
            add,
            mul,
            neg,
            inv,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Order `n = p^k`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Modulus coefficients, lowest degree first; length `k + 1`, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, idx: usize) -> FieldElement {
        assert!(
            idx < self.order,
            "index {idx} out of range for GF({})",
            self.order
        );
        FieldElement {
            coeffs: digits(idx, self.k as usize, self.p),
        }
    }

    pub fn from_coeffs(&self, coeffs: Vec<u32>) -> Result<FieldElement, FieldError> {
        let e = FieldElement { coeffs };
        self.check(&e)?;
        Ok(e)
    }

    /// Canonical index of a valid element.
    pub fn index_of(&self, e: &FieldElement) -> Result<usize, FieldError> {
        self.check(e)?;
        Ok(e.coeffs
            .iter()
            .rev()
            .fold(0usize, |acc, &d| acc * self.p as usize + d as usize))
    }

    fn check(&self, e: &FieldElement) -> Result<(), FieldError> {
        if e.coeffs.len() != self.k as usize || e.coeffs.iter().any(|&c| c >= self.p) {
            return Err(FieldError::MismatchedSpec {
                p: self.p,
                k: self.k,
            });
        }
        Ok(())
    }

    /// Parses `"c0,c1,...,c(k-1)"`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement, FieldError> {
        let coeffs = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| FieldError::Parse(s.to_string()))?;
        self.from_coeffs(coeffs)
            .map_err(|_| FieldError::Parse(s.to_string()))
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// All elements in canonical order (`sum c_i p^i` ascending).
    pub fn enumerate(&self) -> Vec<FieldElement> {
        (0..self.order).map(|i| self.element(i)).collect()
    }

    /// The additive basis `1, x, ..., x^(k-1)`.
    pub fn additive_basis(&self) -> Vec<FieldElement> {
        (0..self.k as usize)
            .map(|i| self.element((self.p as usize).pow(i as u32)))
            .collect()
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.element(self.add_idx(self.index_of(a)?, self.index_of(b)?)))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.element(self.sub_idx(self.index_of(a)?, self.index_of(b)?)))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.element(self.mul_idx(self.index_of(a)?, self.index_of(b)?)))
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.element(self.neg_idx(self.index_of(a)?)))
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        let i = self.index_of(a)?;
        if i == 0 {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.element(self.inv_idx(i)))
    }

    #[inline]
    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg_idx(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub_idx(&self, a: usize, b: usize) -> usize {
        self.add_idx(a, self.neg_idx(b))
    }

    /// Inverse of a nonzero index. Panics on zero.
    #[inline]
    pub fn inv_idx(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        self.inv[a] as usize
    }

    /// Multiplicative order of a nonzero index.
    pub fn mult_order_idx(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no multiplicative order");
        let mut x = a;
        let mut ord = 1;
        while x != 1 {
            x = self.mul_idx(x, a);
            ord += 1;
        }
        ord
    }

    /// Index of the least generator of the multiplicative group.
    pub fn primitive_idx(&self) -> usize {
        (1..self.order)
            .find(|&a| self.mult_order_idx(a) == self.order - 1)
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// The least element generating the multiplicative group.
    pub fn primitive(&self) -> FieldElement {
        self.element(self.primitive_idx())
    }

    /// Human-readable polynomial form, e.g. `x+1`.
    pub fn poly_string(&self, e: &FieldElement) -> String {
        let terms: Vec<String> = e
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}
