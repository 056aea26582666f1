//! Seeded generators for the randomized exact tests. Coefficients are small
//! integers so that failures stay readable.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::grassmann::{mask_parity, GrassmannElement};
use crate::linalg::Matrix;
use crate::scalar::{int, Parity, Scalar};
use crate::supermatrix::SuperMatrix;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_scalar(rng: &mut TestRng, bound: i64) -> Scalar {
    int(rng.gen_range(-bound..=bound))
}

pub fn nonzero_scalar(rng: &mut TestRng, bound: i64) -> Scalar {
    loop {
        let x = rng.gen_range(-bound..=bound);
        if x != 0 {
            return int(x);
        }
    }
}

/// Random element of `Λ(q)` supported on monomials of the given parity.
pub fn grassmann(rng: &mut TestRng, q: usize, parity: Parity, density: f64) -> GrassmannElement {
    let mut e = GrassmannElement::zero(q);
    for m in 0..(1u32 << q) {
        if mask_parity(m) == parity && rng.gen_bool(density) {
            e.add_term(m, small_scalar(rng, 3));
        }
    }
    e
}

/// Random even element with nonzero body.
pub fn even_unit(rng: &mut TestRng, q: usize) -> GrassmannElement {
    let mut e = grassmann(rng, q, Parity::Even, 0.5);
    let body = e.body();
    e.add_term(0, -body);
    e.add_term(0, nonzero_scalar(rng, 3));
    e
}

/// Homogeneous supermatrix of the given parity over `Λ(q)`.
pub fn supermatrix(rng: &mut TestRng, m: usize, n: usize, q: usize, parity: Parity) -> SuperMatrix {
    let mut x = SuperMatrix::zeros(m, n, q);
    for i in 0..m + n {
        for j in 0..m + n {
            let p = parity + x.index_parity(i) + x.index_parity(j);
            x.set(i, j, grassmann(rng, q, p, 0.4));
        }
    }
    x
}

/// Even supermatrix whose diagonal blocks have invertible bodies.
pub fn gl_point(rng: &mut TestRng, m: usize, n: usize, q: usize) -> SuperMatrix {
    loop {
        let x = supermatrix(rng, m, n, q, Parity::Even);
        let body = x.body();
        let a = Matrix::from_flat(m, m, (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).map(|(i, j)| body[(i, j)].clone()).collect());
        let d = Matrix::from_flat(
            n,
            n,
            (m..m + n).flat_map(|i| (m..m + n).map(move |j| (i, j))).map(|(i, j)| body[(i, j)].clone()).collect(),
        );
        if a.inverse().is_ok() && d.inverse().is_ok() {
            return x;
        }
    }
}

pub fn matrix(rng: &mut TestRng, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows * cols).map(|_| small_scalar(rng, bound)).collect();
    Matrix::from_flat(rows, cols, data)
}

pub fn invertible_matrix(rng: &mut TestRng, n: usize, bound: i64) -> Matrix {
    loop {
        let m = matrix(rng, n, n, bound);
        if m.inverse().is_ok() {
            return m;
        }
    }
}
