//! Radical of the even part and the quasireductivity test.

use num::Zero;

use super::structure::{bracket_subspaces, centralizer};
use super::{LieSuperAlgebra, Subspace};
use crate::jordan::jordan_chevalley;
use crate::linalg::{Echelon, Matrix, Vector};
use crate::scalar::{signed, Parity, Scalar};

/// `L_0` as a Lie algebra on the even basis elements of `L`.
pub fn even_part(l: &LieSuperAlgebra) -> LieSuperAlgebra {
    let m = l.even_dim();
    let labels = l.labels()[..m].to_vec();
    LieSuperAlgebra::from_bracket_fn(format!("{}_0", l.name()), labels, m, 0, |i, j| {
        let mut out = vec![Scalar::zero(); m];
        for (k, c) in l.bracket_basis(i, j) {
            out[*k] = c.clone();
        }
        out
    })
}

/// Gram matrix of `(x, y) -> str(ad x ad y)`. On a purely even algebra this is the Killing form.
pub fn killing_form(l: &LieSuperAlgebra) -> Matrix {
    let d = l.dim();
    let ads: Vec<Matrix> = (0..d).map(|i| l.ad_left(&l.basis_vector(i))).collect();
    let mut b = Matrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let p = &ads[i] * &ads[j];
            let st = (0..d).fold(Scalar::zero(), |acc, k| acc + signed(l.parity(k).koszul(Parity::Odd), p[(k, k)].clone()));
            b[(i, j)] = st.clone();
            b[(j, i)] = st;
        }
    }
    b
}

fn embed_even(l: &LieSuperAlgebra, v: &[Scalar]) -> Vector {
    let mut out = vec![Scalar::zero(); l.dim()];
    out[..v.len()].clone_from_slice(v);
    out
}

/// Solvable radical of `L_0`: the Killing-orthogonal of `[L_0, L_0]` inside `L_0`.
/// Returned in the coordinates of `L`.
pub fn even_radical(l: &LieSuperAlgebra) -> Subspace {
    let l0 = even_part(l);
    let m = l0.dim();
    let full = Subspace::full(l0.parities());
    let derived = bracket_subspaces(&l0, &full, &full);
    let b = killing_form(&l0);
    let mut eqs = Echelon::new(m);
    for w in derived.basis() {
        let row = b.apply(&w);
        eqs.insert(&row);
    }
    Subspace::span(l.parities(), eqs.nullspace().iter().map(|v| embed_even(l, v)))
}

/// Center of `L_0` inside `L_0`, in the coordinates of `L`.
pub fn even_center(l: &LieSuperAlgebra) -> Subspace {
    let l0 = even_part(l);
    let z = centralizer(&l0, &Subspace::full(l0.parities()));
    Subspace::span(l.parities(), z.basis().iter().map(|v| embed_even(l, v)))
}

#[derive(Debug, Clone)]
pub struct QuasiReductivity {
    pub radical: Subspace,
    pub even_center: Subspace,
    /// Central even elements whose adjoint action has a nonzero nilpotent part.
    pub non_semisimple: Vec<Vector>,
}

impl QuasiReductivity {
    pub fn radical_is_center(&self) -> bool {
        self.radical == self.even_center
    }

    pub fn is_quasireductive(&self) -> bool {
        self.radical_is_center() && self.non_semisimple.is_empty()
    }

    /// Names the failing condition, if any.
    pub fn failure(&self) -> Option<String> {
        if !self.radical_is_center() {
            Some(format!(
                "radical of the even part (dim {}) differs from its center (dim {})",
                self.radical.dim(),
                self.even_center.dim()
            ))
        } else if !self.non_semisimple.is_empty() {
            Some("a central even element acts with nonzero nilpotent part".to_string())
        } else {
            None
        }
    }
}

pub fn is_quasireductive(l: &LieSuperAlgebra) -> QuasiReductivity {
    let radical = even_radical(l);
    let even_center = even_center(l);
    let non_semisimple = even_center
        .basis()
        .into_iter()
        .filter(|z| {
            let split = jordan_chevalley(&l.ad_left(z)).expect("square matrix");
            !split.nilpotent.is_zero()
        })
        .collect();
    QuasiReductivity { radical, even_center, non_semisimple }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{abelian, make_gl, make_sl2, nonabelian_2d};

    #[test]
    fn gl11_is_quasireductive() {
        let q = is_quasireductive(&make_gl(1, 1));
        assert_eq!(q.radical.dim(), 2);
        assert!(q.is_quasireductive());
    }

    #[test]
    fn nonabelian_2d_is_not() {
        let q = is_quasireductive(&nonabelian_2d());
        assert_eq!(q.radical.dim(), 2);
        assert_eq!(q.even_center.dim(), 0);
        assert!(!q.is_quasireductive());
        assert!(q.failure().unwrap().contains("radical"));
    }

    #[test]
    fn abelian_and_sl2() {
        assert!(is_quasireductive(&abelian(3, 0)).is_quasireductive());
        let q = is_quasireductive(&make_sl2());
        assert_eq!(q.radical.dim(), 0);
        assert!(q.is_quasireductive());
    }

    #[test]
    fn killing_form_of_sl2() {
        let b = killing_form(&make_sl2());
        // B(h,h) = 8, B(e,f) = 4
        assert_eq!(b[(0, 0)], crate::scalar::int(8));
        assert_eq!(b[(1, 2)], crate::scalar::int(4));
    }
}
