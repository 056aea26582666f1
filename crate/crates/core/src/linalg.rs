//! Exact linear algebra over the rationals: dense matrices and an incremental
//! sparse row-echelon basis used for rank, span membership and null spaces.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, int, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a * xi;
        }
    }
}

pub fn scale_vector(v: &[Scalar], a: &Scalar) -> Vector {
    v.iter().map(|x| x * a).collect()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Matrix::from_rows(rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Row-major flattening, used to treat matrices as vectors.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vector) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, a: &Scalar) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: scale_vector(&self.data, a) }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Ordinary commutator `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i));
        }
        e.rank()
    }

    /// Basis of `{x : Mx = 0}`.
    pub fn nullspace(&self) -> Vec<Vector> {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i));
        }
        e.nullspace()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or_else(|| Error::Singular(format!("no pivot in column {}", col + 1)))?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] /= &p;
                inv[(col, j)] /= &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    if !a[(col, j)].is_zero() {
                        let t = &f * &a[(col, j)];
                        a[(r, j)] -= t;
                    }
                    if !inv[(col, j)].is_zero() {
                        let t = &f * &inv[(col, j)];
                        inv[(r, j)] -= t;
                    }
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(format_scalar).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

type SparseRow = BTreeMap<usize, Scalar>;

fn sparse_from(v: &[Scalar]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

fn sparse_axpy(y: &mut SparseRow, a: &Scalar, x: &SparseRow) {
    for (k, xv) in x {
        let t = a * xv;
        match y.get_mut(k) {
            Some(yv) => {
                *yv += t;
                if yv.is_zero() {
                    y.remove(k);
                }
            }
            None => {
                y.insert(*k, t);
            }
        }
    }
}

/// A fully reduced row-echelon basis that grows one row at a time.
///
/// Every stored row has leading coefficient one and vanishes at the pivots of
/// all other rows, so the stored basis is canonical for the span.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    width: usize,
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, ..Default::default() }
    }

    pub fn from_vectors<'a>(width: usize, vectors: impl IntoIterator<Item = &'a Vector>) -> Self {
        let mut e = Echelon::new(width);
        for v in vectors {
            e.insert(v);
        }
        e
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_sparse(&self, mut v: SparseRow) -> SparseRow {
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter(|(k, _)| self.pivot_row.contains_key(k))
            .map(|(k, x)| (*k, x.clone()))
            .collect();
        for (col, coeff) in hits {
            let row = &self.rows[self.pivot_row[&col]];
            sparse_axpy(&mut v, &-coeff, row);
        }
        v
    }

    /// Residue of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.width);
        let r = self.reduce_sparse(sparse_from(v));
        let mut out = zero_vector(self.width);
        for (k, x) in r {
            out[k] = x;
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.width);
        self.reduce_sparse(sparse_from(v)).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank increased.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.width, "echelon width mismatch");
        self.insert_sparse(sparse_from(v))
    }

    fn insert_sparse(&mut self, v: SparseRow) -> bool {
        let mut r = self.reduce_sparse(v);
        let Some((&pivot, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for x in r.values_mut() {
            *x *= &inv;
        }
        for row in &mut self.rows {
            if let Some(c) = row.get(&pivot).cloned() {
                sparse_axpy(row, &-c, &r);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(r);
        self.pivots.push(pivot);
        true
    }

    /// Basis rows sorted by pivot column.
    pub fn basis(&self) -> Vec<Vector> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        order
            .into_iter()
            .map(|i| {
                let mut out = zero_vector(self.width);
                for (k, x) in &self.rows[i] {
                    out[*k] = x.clone();
                }
                out
            })
            .collect()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    /// Basis of the solutions `x` of `row . x = 0` for every stored row.
    pub fn nullspace(&self) -> Vec<Vector> {
        let free: Vec<usize> = (0..self.width).filter(|c| !self.pivot_row.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = zero_vector(self.width);
                x[f] = Scalar::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if let Some(c) = row.get(&f) {
                        x[p] = -c;
                    }
                }
                x
            })
            .collect()
    }

    /// Coordinates of `v` with respect to `basis()`, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        Some(order.iter().map(|&i| v[self.pivots[i]].clone()).collect())
    }

    pub fn same_span(&self, other: &Echelon) -> bool {
        self.width == other.width && self.rank() == other.rank() && self.basis() == other.basis()
    }
}

/// A fixed linearly independent family with exact coordinate lookup.
///
/// Each vector is stored augmented by a unit tag; reducing `[t | 0]` against
/// the echelon form leaves `[0 | -coords]` exactly when `t` is in the span.
#[derive(Clone, Debug)]
pub struct CoordinateBasis {
    vectors: Vec<Vector>,
    width: usize,
    echelon: Echelon,
}

impl CoordinateBasis {
    /// Keeps the vectors that are independent of the ones before them.
    pub fn new(width: usize, candidates: impl IntoIterator<Item = Vector>) -> Self {
        let mut b = CoordinateBasis { vectors: Vec::new(), width, echelon: Echelon::new(width) };
        let candidates: Vec<Vector> = candidates.into_iter().collect();
        let mut plain = Echelon::new(width);
        for v in candidates {
            if plain.insert(&v) {
                b.vectors.push(v);
            }
        }
        let n = b.vectors.len();
        b.echelon = Echelon::new(width + n);
        for (k, v) in b.vectors.iter().enumerate() {
            let mut aug = v.clone();
            aug.extend((0..n).map(|j| if j == k { Scalar::one() } else { Scalar::zero() }));
            b.echelon.insert(&aug);
        }
        b
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.width);
        let mut aug = v.to_vec();
        aug.extend(std::iter::repeat_n(Scalar::zero(), self.len()));
        let r = self.echelon.reduce(&aug);
        if !r[..self.width].iter().all(Zero::is_zero) {
            return None;
        }
        Some(r[self.width..].iter().map(|c| -c).collect())
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.width);
        for (c, v) in coords.iter().zip(&self.vectors) {
            if !c.is_zero() {
                axpy(&mut out, c, v);
            }
        }
        out
    }
}

/// Solves `coeffs . x = target` for the coordinates `x` of `target` in the
/// span of `vectors` (not necessarily independent). Returns `None` if no
/// solution exists.
pub fn solve_in_span(vectors: &[Vector], target: &[Scalar]) -> Option<Vector> {
    let n = vectors.len();
    let width = target.len();
    // Augmented system: columns are the given vectors plus the target.
    let mut e = Echelon::new(n + 1);
    for row in 0..width {
        let mut eq: Vector = vectors.iter().map(|v| v[row].clone()).collect();
        eq.push(-target[row].clone());
        e.insert(&eq);
    }
    let ns = e.nullspace();
    let sol = ns.into_iter().find(|v| !v[n].is_zero())?;
    let t = sol[n].clone();
    Some(sol[..n].iter().map(|x| x / &t).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn coordinate_basis_round_trip() {
        let b = CoordinateBasis::new(3, [vec![int(1), int(1), int(0)], vec![int(2), int(2), int(0)], vec![int(0), int(1), int(1)]]);
        assert_eq!(b.len(), 2);
        let t = vec![int(2), int(5), int(3)];
        let c = b.coordinates(&t).unwrap();
        assert_eq!(c, vec![int(2), int(3)]);
        assert_eq!(b.combine(&c), t);
        assert!(b.coordinates(&[int(1), int(0), int(0)]).is_none());
    }

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vector(&m.apply(&ns[0])));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_ints(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn echelon_is_canonical() {
        let a = Echelon::from_vectors(3, &[vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)]]);
        let b = Echelon::from_vectors(3, &[vec![int(1), int(2), int(1)], vec![int(1), int(0), int(-1)]]);
        assert!(a.same_span(&b));
        assert!(a.contains(&[int(2), int(3), int(1)]));
        assert!(!a.contains(&[int(0), int(0), int(1)]));
    }

    #[test]
    fn coordinates_in_basis() {
        let e = Echelon::from_vectors(2, &[vec![int(2), int(4)]]);
        let c = e.coordinates(&[int(1), int(2)]).unwrap();
        assert_eq!(c, vec![int(1)]);
        let basis = e.basis();
        assert_eq!(basis[0], vec![int(1), int(2)]);
    }

    #[test]
    fn solve_in_span_finds_combination() {
        let vs = vec![vec![int(1), int(0)], vec![int(1), int(1)], vec![int(2), int(1)]];
        let x = solve_in_span(&vs, &[int(3), int(1)]).unwrap();
        let mut acc = zero_vector(2);
        for (c, v) in x.iter().zip(&vs) {
            axpy(&mut acc, c, v);
        }
        assert_eq!(acc, vec![int(3), int(1)]);
        assert!(solve_in_span(&[vec![int(1), int(1)]], &[int(1), ratio(1, 2)]).is_none());
    }

    #[test]
    fn matrix_power() {
        let n = Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(!n.pow(2).is_zero());
        assert!(n.pow(3).is_zero());
    }
}
