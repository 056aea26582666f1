//! Grassmann algebras `Λ(q)`: the free supercommutative algebra on `q` odd
//! generators. Monomials are subsets of `{0..q}` stored as bitmasks; a product
//! of monomials picks up `(-1)^{inversions}` from merging the sorted subsets.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{One, Zero};

use crate::config::{check_budget, HARD_GENERATOR_LIMIT};
use crate::error::{Error, Result};
use crate::scalar::{signed, write_term, Parity, Scalar};

pub type Mask = u32;

/// Sign of `m(a) * m(b)` rewritten in sorted order, or `None` if they overlap.
pub fn merge_sign(a: Mask, b: Mask) -> Option<i64> {
    if a & b != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += (a >> (j + 1)).count_ones();
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

pub fn mask_parity(m: Mask) -> Parity {
    Parity::from_bit(m.count_ones() as usize)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GrassmannElement {
    q: usize,
    terms: BTreeMap<Mask, Scalar>,
}

impl GrassmannElement {
    /// Zero of `Λ(q)`; checks the generator budget.
    pub fn try_zero(q: usize) -> Result<Self> {
        check_budget(q)?;
        Ok(Self::zero(q))
    }

    pub fn zero(q: usize) -> Self {
        assert!(q <= HARD_GENERATOR_LIMIT, "too many Grassmann generators: {q}");
        GrassmannElement { q, terms: BTreeMap::new() }
    }

    pub fn one(q: usize) -> Self {
        Self::scalar(q, Scalar::one())
    }

    pub fn scalar(q: usize, c: Scalar) -> Self {
        Self::monomial(q, 0, c)
    }

    pub fn monomial(q: usize, mask: Mask, c: Scalar) -> Self {
        let mut e = Self::zero(q);
        assert!(q >= 32 || mask >> q == 0, "monomial uses a generator beyond q = {q}");
        if !c.is_zero() {
            e.terms.insert(mask, c);
        }
        e
    }

    /// The generator `θ_{i+1}` (zero-based index `i`).
    pub fn generator(q: usize, i: usize) -> Self {
        assert!(i < q, "generator index {i} out of range for q = {q}");
        Self::monomial(q, 1 << i, Scalar::one())
    }

    pub fn from_terms(q: usize, terms: impl IntoIterator<Item = (Mask, Scalar)>) -> Self {
        let mut e = Self::zero(q);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, mask: Mask) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, mask: Mask, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&mask);
                }
            }
            None => {
                self.terms.insert(mask, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the empty monomial.
    pub fn body(&self) -> Scalar {
        self.coefficient(0)
    }

    /// Parity if homogeneous; zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| mask_parity(*m));
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.parity().is_some()
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Some(Parity::Even)
    }

    pub fn part(&self, parity: Parity) -> Self {
        GrassmannElement {
            q: self.q,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| mask_parity(**m) == parity)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Component of polynomial degree `k`.
    pub fn degree_part(&self, k: usize) -> Self {
        GrassmannElement {
            q: self.q,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() as usize == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.q);
        }
        GrassmannElement { q: self.q, terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Image under the inclusion `Λ(q) -> Λ(q')` with generators shifted by `offset`.
    pub fn embed(&self, q: usize, offset: usize) -> Self {
        assert!(self.q + offset <= q);
        GrassmannElement { q, terms: self.terms.iter().map(|(m, c)| (m << offset, c.clone())).collect() }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.q != other.q {
            return Err(Error::DimensionMismatch { expected: self.q, found: other.q });
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.q);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some(s) = merge_sign(*a, *b) {
                    out.add_term(a | b, signed(s, x * y));
                }
            }
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.q != other.q {
            return Err(Error::DimensionMismatch { expected: self.q, found: other.q });
        }
        Ok(self + other)
    }

    /// Inverse of an even element with nonzero body, via the terminating series
    /// `c^{-1} Σ_k (1 - a/c)^k`.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.body();
        if c.is_zero() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        if !self.is_even() {
            return Err(Error::Parity(format!("{self} is not even")));
        }
        let c_inv = c.recip();
        let nil = &Self::one(self.q) - &self.scale(&c_inv);
        let mut sum = Self::one(self.q);
        let mut power = Self::one(self.q);
        loop {
            power = &power * &nil;
            if power.is_zero() {
                break;
            }
            sum = &sum + &power;
        }
        Ok(sum.scale(&c_inv))
    }

    /// Supercommutator `ab - (-1)^{|a||b|} ba` for homogeneous inputs.
    pub fn supercommutator(&self, other: &Self) -> Self {
        let s = match (self.parity(), other.parity()) {
            (Some(p), Some(r)) => p.koszul(r),
            _ => 1,
        };
        &(self * other) - &(other * self).scale(&crate::scalar::int(s))
    }

    pub fn format_with(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let label: String = (0..self.q)
                .filter(|b| m >> b & 1 == 1)
                .map(|b| format!("{prefix}{}", b + 1))
                .collect();
            write_term(&mut out, i == 0, c, &label);
        }
        out
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("θ"))
    }
}

impl fmt::Debug for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ({})[{}]", self.q, self)
    }
}

impl Add for &GrassmannElement {
    type Output = GrassmannElement;
    fn add(self, rhs: &GrassmannElement) -> GrassmannElement {
        assert_eq!(self.q, rhs.q, "Grassmann generator counts differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl AddAssign<&GrassmannElement> for GrassmannElement {
    fn add_assign(&mut self, rhs: &GrassmannElement) {
        assert_eq!(self.q, rhs.q, "Grassmann generator counts differ");
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub for &GrassmannElement {
    type Output = GrassmannElement;
    fn sub(self, rhs: &GrassmannElement) -> GrassmannElement {
        self + &(-rhs)
    }
}

impl Neg for &GrassmannElement {
    type Output = GrassmannElement;
    fn neg(self) -> GrassmannElement {
        GrassmannElement { q: self.q, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

/// Panics if the generator counts differ; use [`GrassmannElement::checked_mul`]
/// at API boundaries.
impl Mul for &GrassmannElement {
    type Output = GrassmannElement;
    fn mul(self, rhs: &GrassmannElement) -> GrassmannElement {
        assert_eq!(self.q, rhs.q, "Grassmann generator counts differ");
        self.mul_unchecked(rhs)
    }
}

/// `a * b` in `Λ(q)`, with a dimension error on mismatched generator counts.
pub fn grassmann_mul(a: &GrassmannElement, b: &GrassmannElement) -> Result<GrassmannElement> {
    a.checked_mul(b)
}

pub fn grassmann_inverse(a: &GrassmannElement) -> Result<GrassmannElement> {
    a.inverse()
}
