//! Square supermatrices with Grassmann entries, arranged in `(m|n)` blocks.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;

use crate::error::{Error, Result};
use crate::grassmann::GrassmannElement;
use crate::linalg::Matrix;
use crate::scalar::{int, Parity, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperMatrix {
    m: usize,
    n: usize,
    q: usize,
    entries: Vec<GrassmannElement>,
}

impl SuperMatrix {
    pub fn zeros(m: usize, n: usize, q: usize) -> Self {
        let d = m + n;
        SuperMatrix { m, n, q, entries: vec![GrassmannElement::zero(q); d * d] }
    }

    pub fn identity(m: usize, n: usize, q: usize) -> Self {
        let mut x = Self::zeros(m, n, q);
        for i in 0..m + n {
            x.set(i, i, GrassmannElement::one(q));
        }
        x
    }

    pub fn from_scalars(m: usize, n: usize, q: usize, mat: &Matrix) -> Result<Self> {
        let d = m + n;
        if mat.rows() != d || mat.cols() != d {
            return Err(Error::DimensionMismatch { expected: d, found: mat.rows().max(mat.cols()) });
        }
        let mut x = Self::zeros(m, n, q);
        for i in 0..d {
            for j in 0..d {
                x.set(i, j, GrassmannElement::scalar(q, mat[(i, j)].clone()));
            }
        }
        Ok(x)
    }

    /// Elementary matrix `E_{ij}` (zero-based) with entry `c`.
    pub fn unit(m: usize, n: usize, q: usize, i: usize, j: usize, c: GrassmannElement) -> Self {
        let mut x = Self::zeros(m, n, q);
        x.set(i, j, c);
        x
    }

    pub fn from_entries(m: usize, n: usize, q: usize, entries: Vec<GrassmannElement>) -> Result<Self> {
        let d = m + n;
        if entries.len() != d * d {
            return Err(Error::DimensionMismatch { expected: d * d, found: entries.len() });
        }
        if let Some(e) = entries.iter().find(|e| e.q() != q) {
            return Err(Error::DimensionMismatch { expected: q, found: e.q() });
        }
        Ok(SuperMatrix { m, n, q, entries })
    }

    pub fn even_dim(&self) -> usize {
        self.m
    }

    pub fn odd_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn entry(&self, i: usize, j: usize) -> &GrassmannElement {
        &self.entries[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: GrassmannElement) {
        assert_eq!(value.q(), self.q);
        let d = self.dim();
        self.entries[i * d + j] = value;
    }

    pub fn index_parity(&self, i: usize) -> Parity {
        if i < self.m {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Parity `p` with every entry `(i, j)` homogeneous of parity `p + |i| + |j|`.
    pub fn parity(&self) -> Option<Parity> {
        let d = self.dim();
        let mut found: Option<Parity> = None;
        for i in 0..d {
            for j in 0..d {
                let e = self.entry(i, j);
                if e.is_zero() {
                    continue;
                }
                let p = e.parity()? + self.index_parity(i) + self.index_parity(j);
                match found {
                    None => found = Some(p),
                    Some(f) if f != p => return None,
                    _ => {}
                }
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Some(Parity::Even)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GrassmannElement::is_zero)
    }

    pub fn body(&self) -> Matrix {
        let d = self.dim();
        let data = self.entries.iter().map(GrassmannElement::body).collect();
        Matrix::from_flat(d, d, data)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.map(|e| e.scale(c))
    }

    /// Entrywise left multiplication `a * X`.
    pub fn left_mul(&self, a: &GrassmannElement) -> Self {
        self.map(|e| a * e)
    }

    pub fn map(&self, f: impl Fn(&GrassmannElement) -> GrassmannElement) -> Self {
        SuperMatrix { m: self.m, n: self.n, q: self.q, entries: self.entries.iter().map(f).collect() }
    }

    pub fn embed(&self, q: usize, offset: usize) -> Self {
        SuperMatrix {
            m: self.m,
            n: self.n,
            q,
            entries: self.entries.iter().map(|e| e.embed(q, offset)).collect(),
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        if self.q != other.q {
            return Err(Error::DimensionMismatch { expected: self.q, found: other.q });
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self * other)
    }

    /// `[X, Y] = XY - (-1)^{|X||Y|} YX` for homogeneous supermatrices.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let p = self.parity().ok_or_else(|| Error::Parity("left operand is not homogeneous".into()))?;
        let r = other.parity().ok_or_else(|| Error::Parity("right operand is not homogeneous".into()))?;
        Ok(&(self * other) - &(other * self).scale(&int(p.koszul(r))))
    }

    fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Vec<GrassmannElement> {
        rows.flat_map(|i| cols.clone().map(move |j| (i, j)))
            .map(|(i, j)| self.entry(i, j).clone())
            .collect()
    }

    /// Inverse of an even supermatrix by block elimination: invert the even
    /// block `A`, then the Schur complement `D - C A^{-1} B`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_even() {
            return Err(Error::Parity("only even supermatrices are invertible here".into()));
        }
        let (m, n, q) = (self.m, self.n, self.q);
        let d = m + n;
        let a = self.block(0..m, 0..m);
        let b = self.block(0..m, m..d);
        let c = self.block(m..d, 0..m);
        let dd = self.block(m..d, m..d);
        let a_inv = invert_even_block(&a, m, q)?;
        let a_inv_b = block_mul(&a_inv, &b, m, m, n, q);
        let c_a_inv = block_mul(&c, &a_inv, n, m, m, q);
        let c_a_inv_b = block_mul(&c_a_inv, &b, n, m, n, q);
        let schur: Vec<_> = dd.iter().zip(&c_a_inv_b).map(|(x, y)| x - y).collect();
        let s_inv = invert_even_block(&schur, n, q)?;
        // [[A^{-1} + A^{-1}B S^{-1} C A^{-1}, -A^{-1}B S^{-1}], [-S^{-1} C A^{-1}, S^{-1}]]
        let a_inv_b_s_inv = block_mul(&a_inv_b, &s_inv, m, n, n, q);
        let top_left_corr = block_mul(&a_inv_b_s_inv, &c_a_inv, m, n, m, q);
        let s_inv_c_a_inv = block_mul(&s_inv, &c_a_inv, n, n, m, q);
        let mut out = Self::zeros(m, n, q);
        for i in 0..m {
            for j in 0..m {
                out.set(i, j, &a_inv[i * m + j] + &top_left_corr[i * m + j]);
            }
            for j in 0..n {
                out.set(i, m + j, -&a_inv_b_s_inv[i * n + j]);
            }
        }
        for i in 0..n {
            for j in 0..m {
                out.set(m + i, j, -&s_inv_c_a_inv[i * m + j]);
            }
            for j in 0..n {
                out.set(m + i, m + j, s_inv[i * n + j].clone());
            }
        }
        Ok(out)
    }
}

fn block_mul(
    x: &[GrassmannElement],
    y: &[GrassmannElement],
    rows: usize,
    inner: usize,
    cols: usize,
    q: usize,
) -> Vec<GrassmannElement> {
    let mut out = vec![GrassmannElement::zero(q); rows * cols];
    for i in 0..rows {
        for k in 0..inner {
            let a = &x[i * inner + k];
            if a.is_zero() {
                continue;
            }
            for j in 0..cols {
                let b = &y[k * cols + j];
                if !b.is_zero() {
                    out[i * cols + j] += &(a * b);
                }
            }
        }
    }
    out
}

/// Gauss-Jordan over the commutative ring of even Grassmann elements,
/// pivoting on entries with nonzero body.
fn invert_even_block(block: &[GrassmannElement], k: usize, q: usize) -> Result<Vec<GrassmannElement>> {
    let mut a = block.to_vec();
    let mut inv = vec![GrassmannElement::zero(q); k * k];
    for i in 0..k {
        inv[i * k + i] = GrassmannElement::one(q);
    }
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !a[r * k + col].body().is_zero())
            .ok_or_else(|| Error::Singular(format!("diagonal block body is singular at column {}", col + 1)))?;
        if pivot != col {
            for j in 0..k {
                a.swap(pivot * k + j, col * k + j);
                inv.swap(pivot * k + j, col * k + j);
            }
        }
        let p_inv = a[col * k + col].inverse()?;
        for j in 0..k {
            a[col * k + j] = &p_inv * &a[col * k + j];
            inv[col * k + j] = &p_inv * &inv[col * k + j];
        }
        for r in 0..k {
            if r == col || a[r * k + col].is_zero() {
                continue;
            }
            let f = a[r * k + col].clone();
            for j in 0..k {
                let t = &f * &a[col * k + j];
                a[r * k + j] = &a[r * k + j] - &t;
                let t = &f * &inv[col * k + j];
                inv[r * k + j] = &inv[r * k + j] - &t;
            }
        }
    }
    Ok(inv)
}

impl Mul for &SuperMatrix {
    type Output = SuperMatrix;
    fn mul(self, rhs: &SuperMatrix) -> SuperMatrix {
        self.check_shape(rhs).expect("supermatrix shape mismatch");
        let d = self.dim();
        let entries = block_mul(&self.entries, &rhs.entries, d, d, d, self.q);
        SuperMatrix { m: self.m, n: self.n, q: self.q, entries }
    }
}

impl Add for &SuperMatrix {
    type Output = SuperMatrix;
    fn add(self, rhs: &SuperMatrix) -> SuperMatrix {
        self.check_shape(rhs).expect("supermatrix shape mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        SuperMatrix { m: self.m, n: self.n, q: self.q, entries }
    }
}

impl Sub for &SuperMatrix {
    type Output = SuperMatrix;
    fn sub(self, rhs: &SuperMatrix) -> SuperMatrix {
        self.check_shape(rhs).expect("supermatrix shape mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        SuperMatrix { m: self.m, n: self.n, q: self.q, entries }
    }
}

impl Neg for &SuperMatrix {
    type Output = SuperMatrix;
    fn neg(self) -> SuperMatrix {
        self.map(|e| -e)
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..d {
            if i == self.m && self.m > 0 {
                writeln!(f, "{}", "-".repeat((width + 1) * d + 2))?;
            }
            f.write_str("[")?;
            for j in 0..d {
                if j == self.m && self.m > 0 {
                    f.write_str(" |")?;
                }
                let c = &cells[i * d + j];
                let pad = width - c.chars().count();
                write!(f, " {}{}", " ".repeat(pad), c)?;
            }
            f.write_str(" ]")?;
            if i + 1 < d {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SuperMatrix({}|{}) over Λ({})", self.m, self.n, self.q)?;
        write!(f, "{self}")
    }
}

pub fn supermatrix_bracket(x: &SuperMatrix, y: &SuperMatrix) -> Result<SuperMatrix> {
    x.bracket(y)
}
