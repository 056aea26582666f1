//! Superderivations of Lie superalgebras and of Grassmann algebras.
//!
//! Derivations act on the right. A derivation `δ` is stored as the matrix with
//! `x_i δ = Σ_k M_ik x_k`, and the Leibniz rule reads
//! `([x,y])δ = [x, yδ] + (-1)^{|δ||y|} [xδ, y]`.

mod grassmann_der;
mod kac;
mod notalg;
mod tensor_der;

pub use grassmann_der::{grassmann_derivations, right_partial, GrassmannDerAlgebra, GrassmannDerivation};
pub use kac::{kac_semisimple_check, KacReport, KacSummand};
pub use notalg::{non_algebraic_example, NonAlgebraicExample};
pub use tensor_der::{tensor_der, Summand, TensorDerAlgebra, TensorDerBasis};

use num::Zero;

use crate::error::{Error, Result};
use crate::lie::{LieSuperAlgebra, Subspace};
use crate::linalg::{CoordinateBasis, Echelon, Matrix, Vector};
use crate::par;
use crate::scalar::{signed, Parity, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperDerivation {
    pub parity: Parity,
    pub matrix: Matrix,
}

impl SuperDerivation {
    /// Wraps a matrix, checking that it shifts parities by `parity`.
    pub fn new(l: &LieSuperAlgebra, parity: Parity, matrix: Matrix) -> Result<Self> {
        let d = l.dim();
        if matrix.rows() != d || matrix.cols() != d {
            return Err(Error::DimensionMismatch { expected: d, found: matrix.rows() });
        }
        for i in 0..d {
            for k in 0..d {
                if !matrix[(i, k)].is_zero() && l.parity(i) + parity != l.parity(k) {
                    return Err(Error::Parity(format!(
                        "entry ({}, {}) breaks parity {parity}",
                        l.label(i),
                        l.label(k)
                    )));
                }
            }
        }
        Ok(SuperDerivation { parity, matrix })
    }

    /// `v δ` for a vector in coordinates.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.transpose().apply(v)
    }

    fn image_of_basis(&self, i: usize) -> &[Scalar] {
        self.matrix.row(i)
    }

    /// First basis pair violating the Leibniz rule.
    pub fn leibniz_violation(&self, l: &LieSuperAlgebra) -> Option<(usize, usize)> {
        let d = l.dim();
        par::find_first(d * d, |ij| {
            let (i, j) = (ij / d, ij % d);
            let lhs = self.apply(&l.bracket_unchecked(&l.basis_vector(i), &l.basis_vector(j)));
            let a = l.bracket_unchecked(&l.basis_vector(i), self.image_of_basis(j));
            let b = l.bracket_unchecked(self.image_of_basis(i), &l.basis_vector(j));
            let s = self.parity.koszul(l.parity(j));
            let ok = (0..d).all(|k| lhs[k] == &a[k] + signed(s, b[k].clone()));
            (!ok).then_some((i, j))
        })
    }

    pub fn is_derivation(&self, l: &LieSuperAlgebra) -> bool {
        self.leibniz_violation(l).is_none()
    }

    /// `[δ1, δ2]` for right operators: `x[δ1,δ2] = (xδ1)δ2 - (-1)^{|δ1||δ2|}(xδ2)δ1`.
    pub fn bracket(&self, other: &SuperDerivation) -> SuperDerivation {
        let s = self.parity.koszul(other.parity);
        let a = &self.matrix * &other.matrix;
        let b = (&other.matrix * &self.matrix).scale(&crate::scalar::int(s));
        SuperDerivation { parity: self.parity + other.parity, matrix: &a - &b }
    }
}

/// `ad(z) = [-, z]` for homogeneous `z`.
pub fn inner_derivation(l: &LieSuperAlgebra, z: &[Scalar]) -> Result<SuperDerivation> {
    let parity = l
        .vector_parity(z)
        .ok_or_else(|| Error::Parity("inner derivation of an inhomogeneous element".into()))?;
    Ok(SuperDerivation { parity, matrix: l.ad_right(z) })
}

/// Parity of each entry of a flattened `d x d` operator matrix.
pub fn operator_parities(l: &LieSuperAlgebra) -> Vec<Parity> {
    let d = l.dim();
    (0..d * d).map(|ik| l.parity(ik / d) + l.parity(ik % d)).collect()
}

#[derive(Clone, Debug)]
pub struct DerivationSpace {
    pub even: Vec<SuperDerivation>,
    pub odd: Vec<SuperDerivation>,
}

impl DerivationSpace {
    pub fn dims(&self) -> (usize, usize) {
        (self.even.len(), self.odd.len())
    }

    pub fn all(&self) -> impl Iterator<Item = &SuperDerivation> {
        self.even.iter().chain(&self.odd)
    }

    /// The span as a graded subspace of flattened operator matrices.
    pub fn subspace(&self, l: &LieSuperAlgebra) -> Subspace {
        Subspace::span(&operator_parities(l), self.all().map(|d| d.matrix.flatten()))
    }
}

/// All superderivations, by solving the Leibniz system for each parity.
pub fn derivation_space(l: &LieSuperAlgebra) -> DerivationSpace {
    let solve = |p: Parity| {
        let d = l.dim();
        let vars: Vec<(usize, usize)> =
            (0..d).flat_map(|m| (0..d).map(move |r| (m, r))).filter(|&(m, r)| l.parity(m) + p == l.parity(r)).collect();
        let mut var_of = vec![usize::MAX; d * d];
        for (v, &(m, r)) in vars.iter().enumerate() {
            var_of[m * d + r] = v;
        }
        let rows = par::flat_map_range(d * d, |ij| {
            let (i, j) = (ij / d, ij % d);
            let s = p.koszul(l.parity(j));
            (0..d)
                .filter_map(|r| {
                    let mut row = vec![Scalar::zero(); vars.len()];
                    // Σ_m c_ijm D_mr
                    for (m, c) in l.bracket_basis(i, j) {
                        let v = var_of[m * d + r];
                        if v != usize::MAX {
                            row[v] += c;
                        }
                    }
                    // - Σ_k D_jk c_ikr
                    for k in 0..d {
                        let c = l.structure_constant(i, k, r);
                        if !c.is_zero() {
                            let v = var_of[j * d + k];
                            if v != usize::MAX {
                                row[v] -= c;
                            }
                        }
                    }
                    // - s Σ_k D_ik c_kjr
                    for k in 0..d {
                        let c = l.structure_constant(k, j, r);
                        if !c.is_zero() {
                            let v = var_of[i * d + k];
                            if v != usize::MAX {
                                row[v] -= signed(s, c);
                            }
                        }
                    }
                    (!row.iter().all(Zero::is_zero)).then_some(row)
                })
                .collect::<Vec<_>>()
        });
        let mut eqs = Echelon::new(vars.len());
        for row in &rows {
            eqs.insert(row);
        }
        eqs.nullspace()
            .into_iter()
            .map(|sol| {
                let mut m = Matrix::zeros(d, d);
                for (v, &(a, b)) in vars.iter().enumerate() {
                    m[(a, b)] = sol[v].clone();
                }
                SuperDerivation { parity: p, matrix: m }
            })
            .collect::<Vec<_>>()
    };
    DerivationSpace { even: solve(Parity::Even), odd: solve(Parity::Odd) }
}

/// `Der(L)` as a Lie superalgebra. The basis lists the independent inner
/// derivations `ad(x_i)` first within each parity, then outer complements.
#[derive(Clone, Debug)]
pub struct DerivationAlgebra {
    base: LieSuperAlgebra,
    basis: Vec<SuperDerivation>,
    coords: CoordinateBasis,
    inner_positions: Vec<usize>,
    algebra: LieSuperAlgebra,
}

pub fn derivation_algebra(l: &LieSuperAlgebra) -> Result<DerivationAlgebra> {
    let space = derivation_space(l);
    let flat = space.subspace(l);
    let d = l.dim();
    let ads: Vec<SuperDerivation> =
        (0..d).map(|i| inner_derivation(l, &l.basis_vector(i))).collect::<Result<_>>()?;
    for (i, ad) in ads.iter().enumerate() {
        if !ad.is_derivation(l) || !flat.contains(&ad.matrix.flatten()) {
            return Err(Error::Precondition(format!(
                "ad({}) fails the Leibniz rule; the input is not a Lie superalgebra",
                l.label(i)
            )));
        }
    }
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    let mut inner_positions = Vec::new();
    let mut echelon = Echelon::new(d * d);
    for p in [Parity::Even, Parity::Odd] {
        let solved = if p.is_odd() { &space.odd } else { &space.even };
        for (i, ad) in ads.iter().enumerate().filter(|(_, a)| a.parity == p) {
            if echelon.insert(&ad.matrix.flatten()) {
                inner_positions.push(basis.len());
                labels.push(format!("ad({})", l.label(i)));
                basis.push(ad.clone());
            }
        }
        let mut outer = 0;
        for der in solved {
            if echelon.insert(&der.matrix.flatten()) {
                outer += 1;
                labels.push(format!("D{}{outer}", if p.is_odd() { "o" } else { "e" }));
                basis.push(der.clone());
            }
        }
    }
    let coords = CoordinateBasis::new(d * d, basis.iter().map(|b| b.matrix.flatten()));
    debug_assert_eq!(coords.len(), basis.len());
    let even_dim = basis.iter().filter(|b| !b.parity.is_odd()).count();
    let odd_dim = basis.len() - even_dim;
    let algebra = LieSuperAlgebra::from_bracket_fn(format!("Der({})", l.name()), labels, even_dim, odd_dim, |a, b| {
        let m = basis[a].bracket(&basis[b]).matrix.flatten();
        coords.coordinates(&m).expect("derivations are closed under the bracket")
    });
    Ok(DerivationAlgebra { base: l.clone(), basis, coords, inner_positions, algebra })
}

impl DerivationAlgebra {
    pub fn base(&self) -> &LieSuperAlgebra {
        &self.base
    }

    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.algebra
    }

    pub fn basis(&self) -> &[SuperDerivation] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a derivation with respect to `basis()`.
    pub fn coordinates(&self, der: &SuperDerivation) -> Option<Vector> {
        self.coords.coordinates(&der.matrix.flatten())
    }

    /// Coordinates of `ad(z)`.
    pub fn inner_coordinates(&self, z: &[Scalar]) -> Result<Vector> {
        let ad = inner_derivation(&self.base, z)?;
        Ok(self.coordinates(&ad).expect("inner derivations lie in Der(L)"))
    }

    /// Inner derivations as a subspace of `Der(L)` coordinates.
    pub fn inner(&self) -> Subspace {
        let n = self.dim();
        Subspace::span(
            self.algebra.parities(),
            self.inner_positions.iter().map(|&k| crate::linalg::unit_vector(n, k)),
        )
    }

    /// `(even, odd)` dimensions of `Der(L) / Inder(L)`.
    pub fn outer_dims(&self) -> (usize, usize) {
        let (ie, io) = self.inner().sdim();
        (self.algebra.even_dim() - ie, self.algebra.odd_dim() - io)
    }
}

pub fn inner_derivations(l: &LieSuperAlgebra) -> Subspace {
    let d = l.dim();
    Subspace::span(&operator_parities(l), (0..d).map(|i| l.ad_right(&l.basis_vector(i)).flatten()))
}

pub fn outer_quotient_dim(l: &LieSuperAlgebra) -> Result<(usize, usize)> {
    Ok(derivation_algebra(l)?.outer_dims())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{abelian, make_gl, make_sl2, section10_algebra};
    use crate::scalar::int;

    #[test]
    fn ad_satisfies_leibniz() {
        for l in [make_sl2(), make_gl(1, 1), section10_algebra()] {
            for i in 0..l.dim() {
                assert!(inner_derivation(&l, &l.basis_vector(i)).unwrap().is_derivation(&l));
            }
        }
    }

    #[test]
    fn sl2_derivations_are_inner() {
        let l = make_sl2();
        let space = derivation_space(&l);
        assert_eq!(space.dims(), (3, 0));
        assert_eq!(space.subspace(&l), inner_derivations(&l));
        assert_eq!(outer_quotient_dim(&l).unwrap(), (0, 0));
    }

    #[test]
    fn abelian_derivations_are_gl() {
        let space = derivation_space(&abelian(3, 0));
        assert_eq!(space.dims(), (9, 0));
        let one = abelian(1, 0);
        assert!(inner_derivations(&one).is_zero());
        assert_eq!(outer_quotient_dim(&one).unwrap(), (1, 0));
    }

    #[test]
    fn section10_contains_ad_v() {
        let l = section10_algebra();
        let ad_v = inner_derivation(&l, &l.basis_vector(2)).unwrap();
        assert!(derivation_space(&l).subspace(&l).contains(&ad_v.matrix.flatten()));
        assert_eq!(ad_v.apply(&l.basis_vector(2)), vec![int(2), int(4), int(0)]);
    }

    #[test]
    fn derivation_algebra_validates_and_ad_is_hom() {
        let l = make_gl(1, 1);
        let der = derivation_algebra(&l).unwrap();
        assert!(der.algebra().validate().is_valid());
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                let x = l.basis_vector(i);
                let y = l.basis_vector(j);
                let lhs = inner_derivation(&l, &l.bracket(&x, &y).unwrap()).ok();
                let rhs = inner_derivation(&l, &x).unwrap().bracket(&inner_derivation(&l, &y).unwrap());
                if let Some(lhs) = lhs {
                    assert_eq!(lhs.matrix, rhs.matrix);
                }
            }
        }
    }

    #[test]
    fn parity_checked_on_construction() {
        let l = make_gl(1, 1);
        let mut m = Matrix::zeros(4, 4);
        m[(0, 2)] = int(1);
        assert!(SuperDerivation::new(&l, Parity::Even, m.clone()).is_err());
        assert!(SuperDerivation::new(&l, Parity::Odd, m).is_ok());
    }
}
