//! A semisimple `U ⊆ H ⊆ Der(U)` that is not algebraic, for `U = sl2 ⊗ Λ(2)`.
//!
//! `H = U ⊕ K(id⊗∂1) ⊕ K(id⊗∂2) ⊕ K(id⊗δ)` with `δ = ∂1(z1+z2) + ∂2 z2`.
//! `V = sl2 ⊗ (Kz1 + Kz2)` is an `H_0`-module, and the Jordan parts of
//! `id⊗δ` on `V` would have to lie in the image of `H_0` if `H` were algebraic.

use super::{kac_semisimple_check, tensor_der, GrassmannDerivation, KacReport, TensorDerAlgebra};
use crate::error::Result;
use crate::grassmann::GrassmannElement;
use crate::jordan::{jordan_chevalley, JordanSplit};
use crate::lie::{is_subalgebra, make_sl2, Subspace};
use crate::linalg::{CoordinateBasis, Echelon, Matrix, Vector};
use crate::scalar::Parity;

#[derive(Clone, Debug)]
pub struct NonAlgebraicExample {
    pub der: TensorDerAlgebra,
    pub h: Subspace,
    pub h_closed: bool,
    pub h0_dim: usize,
    pub v_labels: Vec<String>,
    pub v_is_submodule: bool,
    /// Action of `id⊗δ` on `V`; row `i` holds the image of the `i`-th basis vector.
    pub operator: Matrix,
    pub split: JordanSplit,
    pub semisimple_in_image: bool,
    pub nilpotent_in_image: bool,
    pub kac: KacReport,
}

impl NonAlgebraicExample {
    pub fn not_algebraic(&self) -> bool {
        !(self.semisimple_in_image && self.nilpotent_in_image)
    }
}

/// `id⊗δ` as a grading element, `δ = ∂1(z1+z2) + ∂2 z2`.
pub fn example_delta() -> GrassmannDerivation {
    let z1 = GrassmannElement::generator(2, 0);
    let z2 = GrassmannElement::generator(2, 1);
    GrassmannDerivation::new(vec![&z1 + &z2, z2])
}

pub fn non_algebraic_example() -> Result<NonAlgebraicExample> {
    let sl2 = make_sl2();
    let der = tensor_der(&[(sl2.clone(), 2)])?;
    let l = der.algebra();
    let d1 = der.grading_vector(0, &GrassmannDerivation::basis_element(2, 0, 0));
    let d2 = der.grading_vector(0, &GrassmannDerivation::basis_element(2, 1, 0));
    let delta = der.grading_vector(0, &example_delta());
    let mut h = der.inner();
    for v in [&d1, &d2, &delta] {
        h.insert(v);
    }
    let h_closed = is_subalgebra(l, &h);
    let h0: Vec<Vector> = h.parity_part(Parity::Even).basis();

    let mut v_basis = Vec::new();
    let mut v_labels = Vec::new();
    for z in 0..2 {
        for j in 0..sl2.dim() {
            v_basis.push(der.inner_vector(0, &sl2.basis_vector(j), &GrassmannElement::generator(2, z))?);
            v_labels.push(format!("{}⊗z{}", sl2.label(j), z + 1));
        }
    }
    let v_coords = CoordinateBasis::new(l.dim(), v_basis.clone());

    // right adjoint action of w on V; None if V is not stable
    let action = |w: &[crate::Scalar]| -> Option<Matrix> {
        let rows: Option<Vec<Vector>> =
            v_basis.iter().map(|v| v_coords.coordinates(&l.bracket_unchecked(v, w))).collect();
        rows.map(|r| Matrix::from_rows(r).expect("rectangular"))
    };
    let images: Option<Vec<Matrix>> = h0.iter().map(|w| action(w)).collect();
    let v_is_submodule = images.is_some();
    let images = images.unwrap_or_default();
    let operator = action(&delta).expect("V is stable under id⊗δ");
    let split = jordan_chevalley(&operator)?;
    let span = Echelon::from_vectors(operator.rows() * operator.cols(), &images.iter().map(Matrix::flatten).collect::<Vec<_>>());
    let semisimple_in_image = span.contains(&split.semisimple.flatten());
    let nilpotent_in_image = span.contains(&split.nilpotent.flatten());
    let kac = kac_semisimple_check(&der, &h)?;
    Ok(NonAlgebraicExample {
        h0_dim: h0.len(),
        der,
        h,
        h_closed,
        v_labels,
        v_is_submodule,
        operator,
        split,
        semisimple_in_image,
        nilpotent_in_image,
        kac,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn reproduces_contradiction() {
        let ex = non_algebraic_example().unwrap();
        assert_eq!(ex.h.dim(), 15);
        assert!(ex.h_closed);
        assert_eq!(ex.h0_dim, 7);
        assert!(ex.v_is_submodule);
        assert!(!ex.split.nilpotent.is_zero());
        assert!(!ex.split.semisimple.is_zero());
        assert!(!ex.semisimple_in_image);
        assert!(ex.not_algebraic());
        assert!(ex.kac.is_semisimple());
    }

    #[test]
    fn delta_acts_as_unipotent_block() {
        let ex = non_algebraic_example().unwrap();
        // z1 -> z1 + z2, z2 -> z2 on each sl2 copy
        let mut expected = Matrix::identity(6);
        for j in 0..3 {
            expected[(j, j + 3)] = int(1);
        }
        assert_eq!(ex.operator, expected);
        assert_eq!(ex.split.semisimple, Matrix::identity(6));
    }
}
