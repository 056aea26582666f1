//! Exact Jordan-Chevalley decomposition over the rationals.
//!
//! The semisimple part is a polynomial in `M`. It is found by Newton iteration
//! on the square-free part `p` of the characteristic polynomial, working in
//! `Q[x] / (χ)` so every step stays exact.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{characteristic_polynomial, Poly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanSplit {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
    /// Square-free part of the characteristic polynomial; annihilates `S`.
    pub squarefree: Poly,
    pub iterations: usize,
}

pub fn jordan_chevalley(m: &Matrix) -> Result<JordanSplit> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let d = m.rows();
    if d == 0 {
        return Ok(JordanSplit {
            semisimple: m.clone(),
            nilpotent: m.clone(),
            squarefree: Poly::constant(num::One::one()),
            iterations: 0,
        });
    }
    let chi = characteristic_polynomial(m);
    let p = chi.squarefree_part();
    let dp = p.derivative();
    let bound = (usize::BITS - (d - 1).leading_zeros()) as usize + 1;

    let mut x = Poly::x().rem(&chi);
    let mut iterations = 0;
    loop {
        let px = p.compose_mod(&x, &chi);
        if px.is_zero() {
            break;
        }
        if iterations > bound {
            return Err(Error::Precondition(format!(
                "Newton iteration did not converge within {bound} steps"
            )));
        }
        let dpx = dp.compose_mod(&x, &chi);
        let inv = dpx
            .inverse_mod(&chi)
            .ok_or_else(|| Error::Precondition("p'(X) is not invertible modulo the characteristic polynomial".into()))?;
        x = (&x - &(&px * &inv)).rem(&chi);
        iterations += 1;
    }

    let s = x.eval_matrix(m);
    let n = m - &s;
    let split = JordanSplit { semisimple: s, nilpotent: n, squarefree: p, iterations };
    verify_split(m, &split)?;
    Ok(split)
}

/// Checks `S + N = M`, `SN = NS`, `N^d = 0` and `p(S) = 0` for square-free `p`.
pub fn verify_split(m: &Matrix, split: &JordanSplit) -> Result<()> {
    let (s, n) = (&split.semisimple, &split.nilpotent);
    let fail = |what: &str| Err(Error::Precondition(format!("Jordan split check failed: {what}")));
    if &(s + n) != m {
        return fail("S + N != M");
    }
    if !s.commutator(n).is_zero() {
        return fail("S and N do not commute");
    }
    if !is_nilpotent(n) {
        return fail("N is not nilpotent");
    }
    let p = &split.squarefree;
    if p.gcd(&p.derivative()).degree() != Some(0) {
        return fail("annihilating polynomial is not square-free");
    }
    if !p.eval_matrix(s).is_zero() {
        return fail("p(S) != 0");
    }
    Ok(())
}

pub fn is_nilpotent(m: &Matrix) -> bool {
    m.pow(m.rows() as u32).is_zero()
}

/// True when the minimal polynomial of `m` is square-free.
pub fn is_semisimple(m: &Matrix) -> bool {
    characteristic_polynomial(m).squarefree_part().eval_matrix(m).is_zero()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Algebraicity {
    /// Both Jordan parts are nonzero, so the line spanned by `M` is not algebraic.
    NotAlgebraic { semisimple: Matrix, nilpotent: Matrix },
    /// `M` is semisimple. No claim about algebraicity is made.
    SemisimpleCase,
    /// `M` is nilpotent. No claim about algebraicity is made.
    NilpotentCase,
}

impl Algebraicity {
    pub fn name(&self) -> &'static str {
        match self {
            Algebraicity::NotAlgebraic { .. } => "NotAlgebraic",
            Algebraicity::SemisimpleCase => "SemisimpleCase",
            Algebraicity::NilpotentCase => "NilpotentCase",
        }
    }
}

pub fn one_dim_algebraicity(m: &Matrix) -> Result<Algebraicity> {
    if m.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let split = jordan_chevalley(m)?;
    Ok(match (split.semisimple.is_zero(), split.nilpotent.is_zero()) {
        (false, false) => Algebraicity::NotAlgebraic { semisimple: split.semisimple, nilpotent: split.nilpotent },
        (true, _) => Algebraicity::NilpotentCase,
        (false, true) => Algebraicity::SemisimpleCase,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn two_by_two_mixed() {
        let m = Matrix::from_ints(&[&[2, 4], &[0, 2]]);
        let split = jordan_chevalley(&m).unwrap();
        assert_eq!(split.semisimple, Matrix::identity(2).scale(&int(2)));
        assert_eq!(split.nilpotent, Matrix::from_ints(&[&[0, 4], &[0, 0]]));
        assert!(matches!(one_dim_algebraicity(&m).unwrap(), Algebraicity::NotAlgebraic { .. }));
    }

    #[test]
    fn nilpotent_input() {
        let m = Matrix::from_ints(&[&[0, 1, 5], &[0, 0, 3], &[0, 0, 0]]);
        let split = jordan_chevalley(&m).unwrap();
        assert!(split.semisimple.is_zero());
        assert_eq!(split.nilpotent, m);
        assert_eq!(one_dim_algebraicity(&m).unwrap(), Algebraicity::NilpotentCase);
    }

    #[test]
    fn irrational_eigenvalues_stay_rational() {
        // companion matrix of x^2 - 2
        let m = Matrix::from_ints(&[&[0, 2], &[1, 0]]);
        let split = jordan_chevalley(&m).unwrap();
        assert_eq!(split.semisimple, m);
        assert!(split.nilpotent.is_zero());
        assert_eq!(split.squarefree, Poly::from_ints(&[-2, 0, 1]));
    }

    #[test]
    fn diagonal_is_semisimple_case() {
        let m = Matrix::from_ints(&[&[1, 0], &[0, 3]]);
        assert_eq!(one_dim_algebraicity(&m).unwrap(), Algebraicity::SemisimpleCase);
    }

    #[test]
    fn zero_matrix_is_rejected() {
        assert!(matches!(one_dim_algebraicity(&Matrix::zeros(2, 2)), Err(Error::ZeroMatrix)));
    }

    #[test]
    fn non_square_is_rejected() {
        assert!(matches!(jordan_chevalley(&Matrix::zeros(2, 3)), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn repeated_block_with_irrational_part() {
        // (x^2 - 2)^2 companion: semisimple part is nontrivial and not diagonalizable over Q
        let c = Matrix::from_ints(&[&[0, 0, 0, -4], &[1, 0, 0, 0], &[0, 1, 0, 4], &[0, 0, 1, 0]]);
        let split = jordan_chevalley(&c).unwrap();
        assert!(!split.nilpotent.is_zero());
        assert!(is_semisimple(&split.semisimple));
    }
}
