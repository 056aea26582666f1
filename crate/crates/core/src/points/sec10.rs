//! The supergroup of matrices `(A|B) = [[A, B], [B, A]]` in `GL(2|2)` with
//! `A = [[α₁, α₂], [0, α₁]]` and `B = [[t, (1 + α₁⁻¹α₂)t], [0, t]]`, and its Lie
//! superalgebra spanned by `x = (E|0)`, `y = (E₁₂|0)`, `v = (0|E + E₁₂)`.

use num::Zero;

use super::gl::DualNumberPoint;
use crate::error::{Error, Result};
use crate::grassmann::GrassmannElement;
use crate::jordan::{one_dim_algebraicity, Algebraicity};
use crate::lie::{section10_algebra, LieSuperAlgebra};
use crate::linalg::Matrix;
use crate::random::{self, TestRng};
use crate::scalar::{int, Parity};
use crate::supermatrix::SuperMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section10Point {
    pub alpha1: GrassmannElement,
    pub alpha2: GrassmannElement,
    pub t: GrassmannElement,
}

type Block = [[GrassmannElement; 2]; 2];

fn block_mul(a: &Block, b: &Block) -> Block {
    let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn block_add(a: &Block, b: &Block) -> Block {
    let e = |i: usize, j: usize| &a[i][j] + &b[i][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn block_neg(a: &Block) -> Block {
    let e = |i: usize, j: usize| -&a[i][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

impl Section10Point {
    pub fn new(alpha1: GrassmannElement, alpha2: GrassmannElement, t: GrassmannElement) -> Result<Self> {
        if !alpha1.is_even() || !alpha2.is_even() {
            return Err(Error::Parity("α₁ and α₂ must be even".into()));
        }
        if !(t.is_zero() || t.parity() == Some(Parity::Odd)) {
            return Err(Error::Parity("t must be odd".into()));
        }
        if alpha1.body().is_zero() {
            return Err(Error::NotAUnit(alpha1.to_string()));
        }
        if alpha1.q() != alpha2.q() || alpha1.q() != t.q() {
            return Err(Error::DimensionMismatch { expected: alpha1.q(), found: alpha2.q().max(t.q()) });
        }
        Ok(Section10Point { alpha1, alpha2, t })
    }

    pub fn identity(q: usize) -> Self {
        Section10Point { alpha1: GrassmannElement::one(q), alpha2: GrassmannElement::zero(q), t: GrassmannElement::zero(q) }
    }

    /// Seeded point with small integer coefficients.
    pub fn random(rng: &mut TestRng, q: usize) -> Self {
        let alpha1 = random::even_unit(rng, q);
        let alpha2 = random::grassmann(rng, q, Parity::Even, 0.5);
        let t = random::grassmann(rng, q, Parity::Odd, 0.5);
        Section10Point { alpha1, alpha2, t }
    }

    pub fn q(&self) -> usize {
        self.alpha1.q()
    }

    pub fn a_block(&self) -> Block {
        let z = GrassmannElement::zero(self.q());
        [[self.alpha1.clone(), self.alpha2.clone()], [z, self.alpha1.clone()]]
    }

    pub fn b_block(&self) -> Block {
        let q = self.q();
        let inv = self.alpha1.inverse().expect("α₁ is a unit");
        let c = &GrassmannElement::one(q) + &(&inv * &self.alpha2);
        [[self.t.clone(), &c * &self.t], [GrassmannElement::zero(q), self.t.clone()]]
    }

    pub fn to_matrix(&self) -> SuperMatrix {
        from_blocks(&self.a_block(), &self.b_block())
    }

    /// Recognizes matrices of the constrained shape.
    pub fn from_matrix(x: &SuperMatrix) -> Option<Self> {
        if (x.even_dim(), x.odd_dim()) != (2, 2) {
            return None;
        }
        let p = Section10Point::new(x.entry(0, 0).clone(), x.entry(0, 1).clone(), x.entry(0, 2).clone()).ok()?;
        (p.to_matrix() == *x).then_some(p)
    }

    /// `A = (α₁E)(E + α₁⁻¹α₂E₁₂)`: commuting semisimple and unipotent factors.
    pub fn jordan_factors(&self) -> (Block, Block) {
        let q = self.q();
        let z = GrassmannElement::zero(q);
        let one = GrassmannElement::one(q);
        let inv = self.alpha1.inverse().expect("α₁ is a unit");
        let s = [[self.alpha1.clone(), z.clone()], [z.clone(), self.alpha1.clone()]];
        let u = [[one.clone(), &inv * &self.alpha2], [z, one]];
        (s, u)
    }
}

fn from_blocks(a: &Block, b: &Block) -> SuperMatrix {
    let q = a[0][0].q();
    let mut x = SuperMatrix::zeros(2, 2, q);
    for i in 0..2 {
        for j in 0..2 {
            x.set(i, j, a[i][j].clone());
            x.set(i + 2, j + 2, a[i][j].clone());
            x.set(i, j + 2, b[i][j].clone());
            x.set(i + 2, j, b[i][j].clone());
        }
    }
    x
}

fn blocks_of(x: &SuperMatrix) -> (Block, Block) {
    let e = |i: usize, j: usize| x.entry(i, j).clone();
    ([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]], [[e(0, 2), e(0, 3)], [e(1, 2), e(1, 3)]])
}

fn read_point(a: &Block, b: &Block, what: &str) -> Result<Section10Point> {
    let x = from_blocks(a, b);
    Section10Point::from_matrix(&x).ok_or_else(|| Error::Precondition(format!("{what} leaves the supergroup")))
}

fn agree(closed: &Section10Point, raw: &SuperMatrix, what: &str) -> Result<()> {
    if closed.to_matrix() != *raw {
        return Err(Error::Precondition(format!("{what}: block formula disagrees with 4x4 arithmetic")));
    }
    Ok(())
}

/// `(A|B)(A'|B') = (AA' + BB' | AB' + BA')`, checked against the 4×4 product.
pub fn section10_group(p: &Section10Point, r: &Section10Point) -> Result<Section10Point> {
    let (a, b, a2, b2) = (p.a_block(), p.b_block(), r.a_block(), r.b_block());
    let closed = read_point(
        &block_add(&block_mul(&a, &a2), &block_mul(&b, &b2)),
        &block_add(&block_mul(&a, &b2), &block_mul(&b, &a2)),
        "product",
    )?;
    agree(&closed, &p.to_matrix().checked_mul(&r.to_matrix())?, "product")?;
    Ok(closed)
}

/// `(A|B)⁻¹ = (A⁻¹ | -A⁻²B)`, checked against the supermatrix inverse.
pub fn section10_inverse(p: &Section10Point) -> Result<Section10Point> {
    let q = p.q();
    let inv = p.alpha1.inverse()?;
    let z = GrassmannElement::zero(q);
    // (α₁E + α₂E₁₂)⁻¹ = α₁⁻¹E - α₁⁻²α₂E₁₂
    let a_inv: Block = [[inv.clone(), -&(&(&inv * &inv) * &p.alpha2)], [z.clone(), inv.clone()]];
    let b = block_neg(&block_mul(&block_mul(&a_inv, &a_inv), &p.b_block()));
    let closed = read_point(&a_inv, &b, "inverse")?;
    agree(&closed, &p.to_matrix().inverse()?, "inverse")?;
    Ok(closed)
}

/// `p p' p⁻¹ p'⁻¹ = (E + 2A⁻¹A'⁻¹BB' | 0)`, checked against the 4×4 computation.
pub fn section10_commutator(p: &Section10Point, r: &Section10Point) -> Result<Section10Point> {
    let q = p.q();
    let pi = section10_inverse(p)?;
    let ri = section10_inverse(r)?;
    let one = GrassmannElement::one(q);
    let z = GrassmannElement::zero(q);
    let e: Block = [[one.clone(), z.clone()], [z.clone(), one]];
    let two_ab = block_mul(&block_mul(&pi.a_block(), &ri.a_block()), &block_mul(&p.b_block(), &r.b_block()));
    let a = block_add(&e, &block_add(&two_ab, &two_ab));
    let zero: Block = [[z.clone(), z.clone()], [z.clone(), z]];
    let closed = read_point(&a, &zero, "commutator")?;
    let raw = p
        .to_matrix()
        .checked_mul(&r.to_matrix())?
        .checked_mul(&pi.to_matrix())?
        .checked_mul(&ri.to_matrix())?;
    agree(&closed, &raw, "commutator")?;
    let via_group = section10_group(&section10_group(&section10_group(p, r)?, &pi)?, &ri)?;
    if via_group != closed {
        return Err(Error::Precondition("commutator: group law disagrees with the closed form".into()));
    }
    Ok(closed)
}

#[derive(Clone, Debug)]
pub struct Section10Lie {
    pub x: SuperMatrix,
    pub y: SuperMatrix,
    pub v: SuperMatrix,
    /// `([a, b], value)` for all pairs.
    pub brackets: Vec<(String, SuperMatrix)>,
    pub commuting: bool,
    pub vv_is_2x_plus_4y: bool,
    /// `I + ε₀x`, `I + ε₀y`, `I + ε₁v` lie in the supergroup and reduce to the identity.
    pub dual_points: Vec<(String, bool)>,
    /// `a = 2x + 4y` acting on the even part of the natural module.
    pub even_rep: Matrix,
    pub verdict: Algebraicity,
    pub algebra: LieSuperAlgebra,
}

impl Section10Lie {
    pub fn holds(&self) -> bool {
        self.commuting
            && self.vv_is_2x_plus_4y
            && self.dual_points.iter().all(|(_, ok)| *ok)
            && matches!(self.verdict, Algebraicity::NotAlgebraic { .. })
    }
}

pub fn section10_lie() -> Result<Section10Lie> {
    let one = || GrassmannElement::one(0);
    let x = SuperMatrix::identity(2, 2, 0);
    let mut y = SuperMatrix::zeros(2, 2, 0);
    y.set(0, 1, one());
    y.set(2, 3, one());
    let mut v = SuperMatrix::zeros(2, 2, 0);
    for (i, j) in [(0, 2), (0, 3), (1, 3), (2, 0), (2, 1), (3, 1)] {
        v.set(i, j, one());
    }
    let named = [("x", &x), ("y", &y), ("v", &v)];
    let mut brackets = Vec::new();
    for (i, (na, a)) in named.iter().enumerate() {
        for (nb, b) in &named[i..] {
            brackets.push((format!("[{na}, {nb}]"), a.bracket(b)?));
        }
    }
    let zero = SuperMatrix::zeros(2, 2, 0);
    let get = |name: &str| brackets.iter().find(|(n, _)| n == name).map(|(_, m)| m.clone()).unwrap();
    let commuting = ["[x, y]", "[x, v]", "[y, v]"].iter().all(|n| get(n) == zero);
    let a = &x.scale(&int(2)) + &y.scale(&int(4));
    let vv_is_2x_plus_4y = get("[v, v]") == a;

    let dual_points = [("I + ε0 x", &x, Parity::Even), ("I + ε0 y", &y, Parity::Even), ("I + ε1 v", &v, Parity::Odd)]
        .into_iter()
        .map(|(name, m, p)| {
            let base = SuperMatrix::identity(2, 2, 0);
            let point = if p.is_odd() {
                DualNumberPoint { base, eps0: zero.clone(), eps1: m.clone() }
            } else {
                DualNumberPoint { base, eps0: m.clone(), eps1: zero.clone() }
            };
            let ok = point.in_kernel() && Section10Point::from_matrix(&point.to_matrix()).is_some();
            (name.to_string(), ok)
        })
        .collect();

    let (a_block, _) = blocks_of(&a);
    let even_rep = Matrix::from_rows(a_block.iter().map(|row| row.iter().map(|e| e.body()).collect()).collect())?;
    let verdict = one_dim_algebraicity(&even_rep)?;
    Ok(Section10Lie {
        x,
        y,
        v,
        brackets,
        commuting,
        vv_is_2x_plus_4y,
        dual_points,
        even_rep,
        verdict,
        algebra: section10_algebra(),
    })
}
