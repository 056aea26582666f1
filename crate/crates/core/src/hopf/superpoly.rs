//! Free supercommutative algebras on odd, even-polynomial and group-like
//! (Laurent) generators, and their tensor products.
//!
//! A tensor product `A ⊗ B` is the free algebra on the concatenated
//! generator list: `a ⊗ b` is the product `a·b` with `a`'s generators first,
//! which carries no reordering sign, and `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb'`
//! falls out of supercommutativity.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Zero};

use crate::scalar::{format_scalar, int, Parity, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    Odd,
    /// Polynomial generator, exponent `>= 0`.
    Even,
    /// Invertible even generator, exponent in `Z`.
    GroupLike,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub names: Vec<String>,
    pub kinds: Vec<GenKind>,
}

impl Block {
    pub fn new(gens: impl IntoIterator<Item = (String, GenKind)>) -> Self {
        let (names, kinds) = gens.into_iter().unzip();
        Block { names, kinds }
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty()
    }
}

/// Generators of `A_1 ⊗ ... ⊗ A_s`, one block per tensor factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    blocks: Vec<Arc<Block>>,
    offsets: Vec<usize>,
    kinds: Vec<GenKind>,
}

pub type Sig = Arc<Signature>;

impl Signature {
    pub fn new(blocks: Vec<Arc<Block>>) -> Sig {
        let mut offsets = Vec::new();
        let mut kinds = Vec::new();
        for b in &blocks {
            offsets.push(kinds.len());
            kinds.extend_from_slice(&b.kinds);
        }
        Arc::new(Signature { blocks, offsets, kinds })
    }

    pub fn single(block: Block) -> Sig {
        Self::new(vec![Arc::new(block)])
    }

    pub fn tensor(a: &Signature, b: &Signature) -> Sig {
        Self::new(a.blocks.iter().chain(&b.blocks).cloned().collect())
    }

    pub fn power(a: &Signature, n: usize) -> Sig {
        Self::new((0..n).flat_map(|_| a.blocks.iter().cloned()).collect())
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty()
    }

    pub fn blocks(&self) -> &[Arc<Block>] {
        &self.blocks
    }

    pub fn kind(&self, i: usize) -> GenKind {
        self.kinds[i]
    }

    pub fn block_range(&self, b: usize) -> std::ops::Range<usize> {
        self.offsets[b]..self.offsets[b] + self.blocks[b].len()
    }

    /// Signature of blocks `range`.
    pub fn sub(&self, range: std::ops::Range<usize>) -> Sig {
        Self::new(self.blocks[range].to_vec())
    }

    pub fn name(&self, i: usize) -> &str {
        let b = self.offsets.partition_point(|&o| o <= i) - 1;
        &self.blocks[b].names[i - self.offsets[b]]
    }
}

pub type Exps = Vec<i32>;

/// Sign of `m1 · m2` for canonical monomials, or `None` if an odd generator repeats.
pub fn monomial_product(sig: &Signature, m1: &[i32], m2: &[i32]) -> Option<(Exps, i64)> {
    let mut inversions = 0usize;
    let mut odd_seen_after = 0usize;
    // walk from the right: count odd generators of m1 to the right of each odd generator of m2
    for i in (0..sig.len()).rev() {
        if sig.kind(i) != GenKind::Odd {
            continue;
        }
        if m2[i] != 0 {
            if m1[i] != 0 {
                return None;
            }
            inversions += odd_seen_after;
        }
        if m1[i] != 0 {
            odd_seen_after += 1;
        }
    }
    let exps = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
    Some((exps, if inversions.is_multiple_of(2) { 1 } else { -1 }))
}

pub fn monomial_parity(sig: &Signature, m: &[i32]) -> Parity {
    let odd = (0..sig.len()).filter(|&i| sig.kind(i) == GenKind::Odd && m[i] != 0).count();
    Parity::from_bit(odd % 2)
}

#[derive(Clone, PartialEq, Eq)]
pub struct SuperPoly {
    sig: Sig,
    terms: BTreeMap<Exps, Scalar>,
}

impl SuperPoly {
    pub fn zero(sig: &Sig) -> Self {
        SuperPoly { sig: sig.clone(), terms: BTreeMap::new() }
    }

    pub fn one(sig: &Sig) -> Self {
        Self::monomial(sig, vec![0; sig.len()], Scalar::one())
    }

    pub fn scalar(sig: &Sig, c: Scalar) -> Self {
        Self::monomial(sig, vec![0; sig.len()], c)
    }

    pub fn monomial(sig: &Sig, exps: Exps, c: Scalar) -> Self {
        assert_eq!(exps.len(), sig.len());
        let mut p = Self::zero(sig);
        p.add_term(exps, c);
        p
    }

    pub fn generator(sig: &Sig, i: usize) -> Self {
        let mut e = vec![0; sig.len()];
        e[i] = 1;
        Self::monomial(sig, e, Scalar::one())
    }

    pub fn sig(&self) -> &Sig {
        &self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[i32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, exps: Exps, c: Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert!(exps.iter().enumerate().all(|(i, &e)| match self.sig.kind(i) {
            GenKind::Odd => e == 0 || e == 1,
            GenKind::Even => e >= 0,
            GenKind::GroupLike => true,
        }));
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.sig);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn parity(&self) -> Option<Parity> {
        let mut ps = self.terms.keys().map(|e| monomial_parity(&self.sig, e));
        let first = ps.next().unwrap_or(Parity::Even);
        ps.all(|p| p == first).then_some(first)
    }

    /// Every term contains an odd generator, so the element is nilpotent.
    pub fn has_odd_factor_in_every_term(&self) -> bool {
        self.terms
            .keys()
            .all(|e| (0..self.sig.len()).any(|i| self.sig.kind(i) == GenKind::Odd && e[i] != 0))
    }

    /// Terms whose total absolute degree in the generators `gens` is `k`.
    pub fn degree_part(&self, gens: &[usize], k: i32) -> Self {
        let mut out = Self::zero(&self.sig);
        for (e, c) in &self.terms {
            if gens.iter().map(|&i| e[i].abs()).sum::<i32>() == k {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.sig);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `Σ_{k>=0} x^k / k!` for nilpotent `x`; `None` if it does not terminate within `cap` terms.
    pub fn exp_nilpotent(&self, cap: usize) -> Option<Self> {
        let mut sum = Self::one(&self.sig);
        let mut term = Self::one(&self.sig);
        for k in 1..=cap {
            term = (&term * self).scale(&(Scalar::one() / int(k as i64)));
            if term.is_zero() {
                return Some(sum);
            }
            sum = &sum + &term;
        }
        None
    }

    /// Reinterprets the element in a signature with identical generators.
    pub fn with_sig(&self, sig: &Sig) -> Self {
        assert_eq!(sig.kinds, self.sig.kinds);
        SuperPoly { sig: sig.clone(), terms: self.terms.clone() }
    }

    /// Places this element of block range `blocks` into a larger signature at
    /// generator offset `offset`.
    pub fn embed(&self, target: &Sig, offset: usize) -> Self {
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut full = vec![0; target.len()];
            full[offset..offset + e.len()].copy_from_slice(e);
            out.add_term(full, c.clone());
        }
        out
    }

    /// Applies an even linear map to tensor factor `block`, replacing it by the
    /// blocks of `f`'s codomain. Because `f` is even no signs arise.
    pub fn map_block(&self, block: usize, target: &Sig, f: impl Fn(&[i32]) -> SuperPoly) -> Self {
        let range = self.sig.block_range(block);
        let mut out = Self::zero(target);
        let mut cache: BTreeMap<Exps, SuperPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let part = e[range.clone()].to_vec();
            let img = cache.entry(part.clone()).or_insert_with(|| f(&part));
            let before = &e[..range.start];
            let after = &e[range.end..];
            for (ie, ic) in img.terms() {
                let mut full = Vec::with_capacity(target.len());
                full.extend_from_slice(before);
                full.extend_from_slice(ie);
                full.extend_from_slice(after);
                out.add_term(full, c * ic);
            }
        }
        out
    }

    /// Algebra morphism determined by generator images. Group-like generators
    /// need the image of their inverse as well.
    pub fn substitute(&self, target: &Sig, images: &[GenImage]) -> Self {
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            out = &out + &monomial_image(target, e, images).scale(c);
        }
        out
    }

    pub fn format(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let deg = |e: &Exps| e.iter().map(|x| x.abs()).sum::<i32>();
            deg(a).cmp(&deg(b)).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mono = format_monomial(&self.sig, e);
            let neg = c < &Scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mono == "1" {
                out.push_str(&format_scalar(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format_scalar(&abs));
                out.push_str(&mono);
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct GenImage {
    pub image: SuperPoly,
    pub inverse: Option<SuperPoly>,
}

impl GenImage {
    pub fn plain(image: SuperPoly) -> Self {
        GenImage { image, inverse: None }
    }

    pub fn invertible(image: SuperPoly, inverse: SuperPoly) -> Self {
        GenImage { image, inverse: Some(inverse) }
    }
}

fn monomial_image(target: &Sig, e: &[i32], images: &[GenImage]) -> SuperPoly {
    let mut acc = SuperPoly::one(target);
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let base = if k > 0 {
            &images[i].image
        } else {
            images[i].inverse.as_ref().expect("inverse image of a group-like generator")
        };
        for _ in 0..k.unsigned_abs() {
            acc = &acc * base;
        }
    }
    acc
}

/// `t z1^2 ⊗ u` style rendering; factors are separated by `⊗`.
pub fn format_monomial(sig: &Signature, e: &[i32]) -> String {
    let mut factors = Vec::new();
    for b in 0..sig.blocks().len() {
        let mut s = String::new();
        for i in sig.block_range(b) {
            match e[i] {
                0 => {}
                1 => s.push_str(sig.name(i)),
                k => s.push_str(&format!("{}^{}", sig.name(i), k)),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        factors.push(s);
    }
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("⊗")
    }
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl fmt::Debug for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperPoly({})", self.format())
    }
}

impl Add for &SuperPoly {
    type Output = SuperPoly;
    fn add(self, rhs: &SuperPoly) -> SuperPoly {
        assert_eq!(self.sig.kinds, rhs.sig.kinds, "adding elements of different algebras");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SuperPoly {
    type Output = SuperPoly;
    fn sub(self, rhs: &SuperPoly) -> SuperPoly {
        self + &(-rhs)
    }
}

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        self.scale(&-Scalar::one())
    }
}

impl Mul for &SuperPoly {
    type Output = SuperPoly;
    fn mul(self, rhs: &SuperPoly) -> SuperPoly {
        assert_eq!(self.sig.kinds, rhs.sig.kinds, "multiplying elements of different algebras");
        let mut out = SuperPoly::zero(&self.sig);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                if let Some((e, s)) = monomial_product(&self.sig, e1, e2) {
                    let c = c1 * c2;
                    out.add_term(e, if s < 0 { -c } else { c });
                }
            }
        }
        out
    }
}
