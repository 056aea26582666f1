//! Semisimplicity test for subalgebras `U ⊆ H ⊆ Der(U)`: `H` is semisimple
//! iff its projection onto each `id ⊗ Der(Λ(n_i))(-1)` is onto.

use super::TensorDerAlgebra;
use crate::error::{Error, Result};
use crate::lie::Subspace;
use crate::linalg::Echelon;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KacSummand {
    pub name: String,
    pub n: usize,
    pub rank: usize,
}

impl KacSummand {
    pub fn is_onto(&self) -> bool {
        self.rank == self.n
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KacReport {
    pub summands: Vec<KacSummand>,
}

impl KacReport {
    pub fn is_semisimple(&self) -> bool {
        self.summands.iter().all(KacSummand::is_onto)
    }
}

pub fn kac_semisimple_check(t: &TensorDerAlgebra, h: &Subspace) -> Result<KacReport> {
    if h.ambient_dim() != t.dim() {
        return Err(Error::DimensionMismatch { expected: t.dim(), found: h.ambient_dim() });
    }
    if let Some((label, _)) = t.inner_basis().into_iter().find(|(_, v)| !h.contains(v)) {
        return Err(Error::Precondition(format!("H does not contain the inner element ad({label})")));
    }
    let basis = h.basis();
    let summands = t
        .summands()
        .iter()
        .enumerate()
        .map(|(s, part)| {
            let cols = t.degree_minus_one(s);
            let projected: Vec<_> = basis.iter().map(|v| cols.iter().map(|&c| v[c].clone()).collect()).collect();
            let rank = Echelon::from_vectors(cols.len(), &projected).rank();
            KacSummand { name: format!("{}⊗Λ({})", part.base.name(), part.n), n: part.n, rank }
        })
        .collect();
    Ok(KacReport { summands })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::tensor_der;
    use crate::lie::make_sl2;

    #[test]
    fn full_and_inner() {
        let t = tensor_der(&[(make_sl2(), 2)]).unwrap();
        let full = Subspace::full(t.algebra().parities());
        let r = kac_semisimple_check(&t, &full).unwrap();
        assert!(r.is_semisimple());
        assert_eq!(r.summands[0].rank, 2);
        let inner = kac_semisimple_check(&t, &t.inner()).unwrap();
        assert!(!inner.is_semisimple());
        assert_eq!(inner.summands[0].rank, 0);
    }

    #[test]
    fn missing_inner_vector_is_named() {
        let t = tensor_der(&[(make_sl2(), 1)]).unwrap();
        let zero = Subspace::zero(t.algebra().parities());
        let err = kac_semisimple_check(&t, &zero).unwrap_err();
        assert!(err.to_string().contains("ad(h⊗1)"), "{err}");
    }
}
