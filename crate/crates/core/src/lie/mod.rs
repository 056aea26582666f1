//! Lie superalgebras presented by structure constants on a homogeneous basis.
//!
//! Basis elements are ordered even-first: `x_0 .. x_{m-1}` are even and
//! `x_m .. x_{m+n-1}` are odd. `[x_i, x_j] = Σ_k c_{ijk} x_k`.

mod constructors;
mod radical;
mod structure;
mod subspace;
mod tensor;

pub use constructors::{abelian, make_gl, make_sl2, nonabelian_2d, section10_algebra};
pub use radical::{even_center, even_part, even_radical, is_quasireductive, killing_form, QuasiReductivity};
pub use structure::{
    bracket_subspaces, center, centralizer, combine, commutant, derived_series, direct_sum, ideal_witness, is_ideal,
    is_subalgebra, quotient, restrict,
};
pub use subspace::Subspace;
pub use tensor::{tensor_with_grassmann, GrassmannTensor, TensorElement};

use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Matrix, Vector};
use crate::par;
use crate::scalar::{format_scalar, signed, write_term, Parity, Scalar};

type SparseBracket = Vec<(usize, Scalar)>;

#[derive(Clone, PartialEq, Eq)]
pub struct LieSuperAlgebra {
    name: String,
    labels: Vec<String>,
    parities: Vec<Parity>,
    even_dim: usize,
    table: Vec<SparseBracket>,
}

impl LieSuperAlgebra {
    /// Builds an algebra from `(i, j, k, c)` entries meaning `c_{ijk} = c`
    /// (zero-based). Omitted entries are zero; later entries overwrite earlier ones.
    pub fn from_constants(
        name: impl Into<String>,
        even_dim: usize,
        odd_dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let d = even_dim + odd_dim;
        let mut dense = vec![zero_vector(d); d * d];
        for (i, j, k, c) in entries {
            let bad = [i, j, k].into_iter().find(|&x| x >= d);
            if let Some(found) = bad {
                return Err(Error::DimensionMismatch { expected: d, found: found + 1 });
            }
            dense[i * d + j][k] = c;
        }
        let labels = default_labels(d);
        Ok(Self::from_dense(name, labels, even_dim, odd_dim, dense))
    }

    /// Builds an algebra from the bracket of basis elements given as dense vectors.
    pub fn from_bracket_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        even_dim: usize,
        odd_dim: usize,
        bracket: impl Fn(usize, usize) -> Vector + Send + Sync,
    ) -> Self {
        let d = even_dim + odd_dim;
        assert_eq!(labels.len(), d, "one label per basis element");
        let dense = par::map_range(d * d, |ij| bracket(ij / d, ij % d));
        Self::from_dense(name, labels, even_dim, odd_dim, dense)
    }

    fn from_dense(name: impl Into<String>, labels: Vec<String>, even_dim: usize, odd_dim: usize, dense: Vec<Vector>) -> Self {
        let d = even_dim + odd_dim;
        let parities = (0..d).map(|i| if i < even_dim { Parity::Even } else { Parity::Odd }).collect();
        let table = dense
            .into_iter()
            .map(|v| {
                assert_eq!(v.len(), d, "bracket vector has wrong length");
                v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        LieSuperAlgebra { name: name.into(), labels, parities, even_dim, table }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn even_dim(&self) -> usize {
        self.even_dim
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.bracket_basis(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// Nonzero entries of `[x_i, x_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    /// All nonzero structure constants `(i, j, k, c)` in lexicographic order.
    pub fn nonzero_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim();
        (0..d * d)
            .flat_map(|ij| self.table[ij].iter().map(move |(k, c)| (ij / d, ij % d, *k, c.clone())))
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        crate::linalg::unit_vector(self.dim(), i)
    }

    /// Bilinear expansion `Σ v_i w_j c_{ijk} x_k`.
    pub fn bracket(&self, v: &[Scalar], w: &[Scalar]) -> Result<Vector> {
        let d = self.dim();
        for len in [v.len(), w.len()] {
            if len != d {
                return Err(Error::DimensionMismatch { expected: d, found: len });
            }
        }
        Ok(self.bracket_unchecked(v, w))
    }

    pub(crate) fn bracket_unchecked(&self, v: &[Scalar], w: &[Scalar]) -> Vector {
        let d = self.dim();
        let mut out = zero_vector(d);
        for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, wj) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let entries = self.bracket_basis(i, j);
                if entries.is_empty() {
                    continue;
                }
                let f = vi * wj;
                for (k, c) in entries {
                    out[*k] += &f * c;
                }
            }
        }
        out
    }

    /// `[x_i, w]` for a basis element and a vector.
    pub(crate) fn bracket_basis_vector(&self, i: usize, w: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim());
        for (j, wj) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (k, c) in self.bracket_basis(i, j) {
                out[*k] += wj * c;
            }
        }
        out
    }

    /// Parity of a vector if it is homogeneous (zero counts as even).
    pub fn vector_parity(&self, v: &[Scalar]) -> Option<Parity> {
        let mut it = v.iter().zip(&self.parities).filter(|(c, _)| !c.is_zero()).map(|(_, p)| *p);
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    /// Matrix of `y -> [y, z]` in the row convention used for right
    /// derivations: row `i` holds the coordinates of `[x_i, z]`.
    pub fn ad_right(&self, z: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for i in 0..d {
            let row = self.bracket_unchecked(&self.basis_vector(i), z);
            for (k, c) in row.into_iter().enumerate() {
                m[(i, k)] = c;
            }
        }
        m
    }

    /// Matrix of `y -> [z, y]` acting on column vectors.
    pub fn ad_left(&self, z: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            let col = self.bracket_unchecked(z, &self.basis_vector(j));
            for (k, c) in col.into_iter().enumerate() {
                m[(k, j)] = c;
            }
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    pub fn format_vector(&self, v: &[Scalar]) -> String {
        format_combination(v, &self.labels)
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }
}

pub(crate) fn default_labels(d: usize) -> Vec<String> {
    (1..=d).map(|i| format!("x{i}")).collect()
}

pub fn format_combination(v: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    let mut first = true;
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        write_term(&mut out, first, c, l);
        first = false;
    }
    if first {
        out.push('0');
    }
    out
}

impl fmt::Debug for LieSuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LieSuperAlgebra {} ({}|{})", self.name, self.even_dim(), self.odd_dim())?;
        for (i, j, k, c) in self.nonzero_constants() {
            writeln!(f, "  c[{},{},{}] = {}", self.labels[i], self.labels[j], self.labels[k], format_scalar(&c))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `c_{ijk} != 0` although `|x_i| + |x_j| != |x_k|`.
    Parity { i: usize, j: usize, k: usize },
    /// `[x_i, x_j] != -(-1)^{|x_i||x_j|} [x_j, x_i]`.
    Antisymmetry { i: usize, j: usize },
    /// `[x_i, [x_j, x_k]] != [[x_i, x_j], x_k] + (-1)^{|x_i||x_j|} [x_j, [x_i, x_k]]`.
    Jacobi { i: usize, j: usize, k: usize, defect: Vector },
}

impl Violation {
    pub fn describe(&self, l: &LieSuperAlgebra) -> String {
        match self {
            Violation::Parity { i, j, k } => format!(
                "parity: c[{},{},{}] is nonzero but the parities do not add up",
                l.label(*i),
                l.label(*j),
                l.label(*k)
            ),
            Violation::Antisymmetry { i, j } => {
                format!("antisymmetry: [{0},{1}] and [{1},{0}] are not super antisymmetric", l.label(*i), l.label(*j))
            }
            Violation::Jacobi { i, j, k, defect } => format!(
                "jacobi: triple ({}, {}, {}) has defect {}",
                l.label(*i),
                l.label(*j),
                l.label(*k),
                l.format_vector(defect)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violation: Option<Violation>,
    pub triples_checked: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks parity homogeneity, super antisymmetry and the super Jacobi identity
/// on every basis triple; reports the first violation in that order.
pub fn validate(l: &LieSuperAlgebra) -> ValidationReport {
    let d = l.dim();
    let parity = par::find_first(d * d, |ij| {
        let (i, j) = (ij / d, ij % d);
        l.bracket_basis(i, j)
            .iter()
            .find(|(k, _)| l.parity(i) + l.parity(j) != l.parity(*k))
            .map(|(k, _)| Violation::Parity { i, j, k: *k })
    });
    if let Some(v) = parity {
        return ValidationReport { violation: Some(v), triples_checked: 0 };
    }
    let anti = par::find_first(d * d, |ij| {
        let (i, j) = (ij / d, ij % d);
        if j < i {
            return None;
        }
        let s = -l.parity(i).koszul(l.parity(j));
        let lhs = l.bracket_basis(i, j);
        let rhs: SparseBracket = l.bracket_basis(j, i).iter().map(|(k, c)| (*k, signed(s, c.clone()))).collect();
        (lhs != rhs.as_slice()).then_some(Violation::Antisymmetry { i, j })
    });
    if let Some(v) = anti {
        return ValidationReport { violation: Some(v), triples_checked: 0 };
    }
    let jacobi = par::find_first(d * d * d, |ijk| {
        let (i, j, k) = (ijk / (d * d), (ijk / d) % d, ijk % d);
        let defect = jacobi_defect(l, i, j, k);
        (!defect.iter().all(Zero::is_zero)).then_some(Violation::Jacobi { i, j, k, defect })
    });
    ValidationReport { violation: jacobi, triples_checked: d * d * d }
}

fn jacobi_defect(l: &LieSuperAlgebra, i: usize, j: usize, k: usize) -> Vector {
    let d = l.dim();
    let mut out = zero_vector(d);
    // [x_i, [x_j, x_k]]
    for (m, c) in l.bracket_basis(j, k) {
        for (r, e) in l.bracket_basis(i, *m) {
            out[*r] += c * e;
        }
    }
    // - [[x_i, x_j], x_k]
    for (m, c) in l.bracket_basis(i, j) {
        for (r, e) in l.bracket_basis(*m, k) {
            out[*r] -= c * e;
        }
    }
    // - (-1)^{|i||j|} [x_j, [x_i, x_k]]
    let s = l.parity(i).koszul(l.parity(j));
    for (m, c) in l.bracket_basis(i, k) {
        for (r, e) in l.bracket_basis(j, *m) {
            out[*r] -= signed(s, c * e);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn zero_bracket_is_valid() {
        let l = LieSuperAlgebra::from_constants("ab", 2, 3, []).unwrap();
        assert!(l.validate().is_valid());
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let err = LieSuperAlgebra::from_constants("bad", 1, 0, [(0, 0, 3, int(1))]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn parity_violation_is_reported_first() {
        // [x1, x1] = x2 with x1 even and x2 odd
        let l = LieSuperAlgebra::from_constants("bad", 1, 1, [(0, 0, 1, int(1))]).unwrap();
        let r = l.validate();
        assert_eq!(r.violation, Some(Violation::Parity { i: 0, j: 0, k: 1 }));
    }

    #[test]
    fn antisymmetry_violation() {
        let l = LieSuperAlgebra::from_constants("bad", 2, 0, [(0, 1, 1, int(1))]).unwrap();
        assert_eq!(l.validate().violation, Some(Violation::Antisymmetry { i: 0, j: 1 }));
    }

    #[test]
    fn sl2_perturbation_breaks_jacobi() {
        let sl2 = make_sl2();
        assert!(sl2.validate().is_valid());
        // flip the sign of [h,e] = 2e on both orderings so antisymmetry still holds
        let entries = sl2.nonzero_constants().into_iter().map(|(i, j, k, c)| {
            if (i, j, k) == (0, 1, 1) || (i, j, k) == (1, 0, 1) {
                (i, j, k, -c)
            } else {
                (i, j, k, c)
            }
        });
        let bad = LieSuperAlgebra::from_constants("sl2'", 3, 0, entries).unwrap();
        assert!(matches!(bad.validate().violation, Some(Violation::Jacobi { .. })));
    }

    #[test]
    fn bracket_rejects_wrong_length() {
        let sl2 = make_sl2();
        assert!(sl2.bracket(&[int(1)], &[int(1), int(0), int(0)]).is_err());
    }
}
