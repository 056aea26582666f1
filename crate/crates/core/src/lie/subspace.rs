//! Graded subspaces of a superspace, stored as a reduced echelon basis.

use crate::linalg::{Echelon, Vector};
use crate::scalar::{Parity, Scalar};

/// A graded subspace. Mixed vectors are split into their even and odd parts on
/// insertion, so the reduced echelon basis is automatically homogeneous.
#[derive(Clone, Debug)]
pub struct Subspace {
    parities: Vec<Parity>,
    echelon: Echelon,
}

impl Subspace {
    pub fn zero(parities: &[Parity]) -> Self {
        Subspace { parities: parities.to_vec(), echelon: Echelon::new(parities.len()) }
    }

    pub fn full(parities: &[Parity]) -> Self {
        let d = parities.len();
        Self::span(parities, (0..d).map(|i| crate::linalg::unit_vector(d, i)))
    }

    pub fn span(parities: &[Parity], vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut s = Self::zero(parities);
        for v in vectors {
            s.insert(&v);
        }
        s
    }

    /// Adds the homogeneous parts of `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let even = self.part(v, Parity::Even);
        let odd = self.part(v, Parity::Odd);
        let a = self.echelon.insert(&even);
        let b = self.echelon.insert(&odd);
        a || b
    }

    fn part(&self, v: &[Scalar], p: Parity) -> Vector {
        v.iter()
            .zip(&self.parities)
            .map(|(c, q)| if *q == p { c.clone() } else { num::Zero::zero() })
            .collect()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn ambient_dim(&self) -> usize {
        self.parities.len()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Homogeneous basis in reduced echelon form, sorted by pivot column.
    pub fn basis(&self) -> Vec<Vector> {
        self.echelon.basis()
    }

    pub fn basis_with_parity(&self) -> Vec<(Vector, Parity)> {
        self.basis()
            .into_iter()
            .map(|v| {
                let p = self.echelon_parity(&v);
                (v, p)
            })
            .collect()
    }

    fn echelon_parity(&self, v: &[Scalar]) -> Parity {
        v.iter()
            .zip(&self.parities)
            .find(|(c, _)| !num::Zero::is_zero(*c))
            .map(|(_, p)| *p)
            .unwrap_or(Parity::Even)
    }

    /// `(even dimension, odd dimension)`.
    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.basis_with_parity().iter().filter(|(_, p)| p.is_odd()).count();
        (self.dim() - odd, odd)
    }

    pub fn parity_part(&self, p: Parity) -> Subspace {
        Subspace::span(&self.parities, self.basis_with_parity().into_iter().filter(|(_, q)| *q == p).map(|(v, _)| v))
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.echelon.contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        self.echelon.reduce(v)
    }

    /// Coordinates with respect to `basis()`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        self.echelon.coordinates(v)
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.echelon.pivot_columns()
    }

    /// Coordinate indices not used as pivots; their unit vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let pivots = self.pivot_columns();
        (0..self.ambient_dim()).filter(|i| !pivots.contains(i)).collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(&v);
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // solve a·A = b·B over the stacked basis
        let a = self.basis();
        let b = other.basis();
        let d = self.ambient_dim();
        let unknowns = a.len() + b.len();
        let mut eqs = Echelon::new(unknowns);
        for coord in 0..d {
            let mut row: Vector = a.iter().map(|v| v[coord].clone()).collect();
            row.extend(b.iter().map(|v| -v[coord].clone()));
            eqs.insert(&row);
        }
        let vectors = eqs.nullspace().into_iter().map(|sol| {
            let mut out = crate::linalg::zero_vector(d);
            for (c, v) in sol.iter().zip(&a) {
                crate::linalg::axpy(&mut out, c, v);
            }
            out
        });
        Subspace::span(&self.parities, vectors)
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.parities == other.parities && self.echelon.same_span(&other.echelon)
    }
}

impl Eq for Subspace {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn par(bits: &[usize]) -> Vec<Parity> {
        bits.iter().map(|&b| Parity::from_bit(b)).collect()
    }

    #[test]
    fn mixed_vectors_are_split() {
        let s = Subspace::span(&par(&[0, 1]), [vec![int(1), int(1)]]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.sdim(), (1, 1));
    }

    #[test]
    fn intersection_of_planes() {
        let p = par(&[0, 0, 0]);
        let a = Subspace::span(&p, [vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]]);
        let b = Subspace::span(&p, [vec![int(0), int(1), int(0)], vec![int(0), int(0), int(1)]]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::span(&p, [vec![int(0), int(2), int(0)]]));
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.complement_indices(), vec![2]);
    }
}
