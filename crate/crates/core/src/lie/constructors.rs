//! Standard algebras used as fixtures.

use super::LieSuperAlgebra;
use crate::linalg::zero_vector;
use crate::scalar::{int, signed, Parity};

/// The zero bracket on an `(m|n)` superspace.
pub fn abelian(m: usize, n: usize) -> LieSuperAlgebra {
    LieSuperAlgebra::from_constants(format!("abelian({m}|{n})"), m, n, []).expect("indices in range")
}

/// `gl(m|n)` on elementary matrices `E_ij`, even ones first, each group in row-major order.
pub fn make_gl(m: usize, n: usize) -> LieSuperAlgebra {
    assert!(m + n >= 1, "gl(0|0) is not supported");
    let size = m + n;
    let block = |i: usize| Parity::from_bit(usize::from(i >= m));
    let pairs: Vec<(usize, usize)> = {
        let all: Vec<_> = (0..size).flat_map(|i| (0..size).map(move |j| (i, j))).collect();
        let (even, odd): (Vec<_>, Vec<_>) = all.into_iter().partition(|&(i, j)| block(i) == block(j));
        even.into_iter().chain(odd).collect()
    };
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).expect("pair present");
    let labels = pairs
        .iter()
        .map(|&(i, j)| if size < 10 { format!("E{}{}", i + 1, j + 1) } else { format!("E{},{}", i + 1, j + 1) })
        .collect();
    let even_dim = m * m + n * n;
    let d = size * size;
    LieSuperAlgebra::from_bracket_fn(format!("gl({m}|{n})"), labels, even_dim, d - even_dim, |a, b| {
        let (i, j) = pairs[a];
        let (k, l) = pairs[b];
        let mut out = zero_vector(d);
        // E_ij E_kl - (-1)^{|a||b|} E_kl E_ij
        if j == k {
            out[index(i, l)] += int(1);
        }
        if l == i {
            let s = (block(i) + block(j)).koszul(block(k) + block(l));
            out[index(k, j)] -= signed(s, int(1));
        }
        out
    })
}

/// `sl2` on `(h, e, f)` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn make_sl2() -> LieSuperAlgebra {
    let c = [(0, 1, 1, 2), (1, 0, 1, -2), (0, 2, 2, -2), (2, 0, 2, 2), (1, 2, 0, 1), (2, 1, 0, -1)];
    LieSuperAlgebra::from_constants("sl2", 3, 0, c.into_iter().map(|(i, j, k, v)| (i, j, k, int(v))))
        .expect("indices in range")
        .with_labels(vec!["h".into(), "e".into(), "f".into()])
}

/// The purely even two-dimensional algebra `[h, e] = e`.
pub fn nonabelian_2d() -> LieSuperAlgebra {
    LieSuperAlgebra::from_constants("nonabelian2", 2, 0, [(0, 1, 1, int(1)), (1, 0, 1, int(-1))])
        .expect("indices in range")
        .with_labels(vec!["h".into(), "e".into()])
}

/// `span{x, y | v}` with `[v, v] = 2x + 4y` and all other brackets zero.
pub fn section10_algebra() -> LieSuperAlgebra {
    LieSuperAlgebra::from_constants("sec10", 2, 1, [(2, 2, 0, int(2)), (2, 2, 1, int(4))])
        .expect("indices in range")
        .with_labels(vec!["x".into(), "y".into(), "v".into()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::supermatrix::SuperMatrix;
    use crate::grassmann::GrassmannElement;

    #[test]
    fn gl_matches_matrix_brackets() {
        let (m, n) = (2, 1);
        let gl = make_gl(m, n);
        assert!(gl.validate().is_valid());
        let size = m + n;
        let elementary = |label: &str| {
            let b = label.as_bytes();
            let (i, j) = ((b[1] - b'1') as usize, (b[2] - b'1') as usize);
            SuperMatrix::unit(m, n, 0, i, j, GrassmannElement::one(0))
        };
        for a in 0..gl.dim() {
            for b in 0..gl.dim() {
                let expected = elementary(gl.label(a)).bracket(&elementary(gl.label(b))).unwrap();
                let got = gl.bracket_basis_vector(a, &gl.basis_vector(b));
                let mut rebuilt = SuperMatrix::zeros(m, n, 0);
                for (k, c) in got.iter().enumerate() {
                    rebuilt = &rebuilt + &elementary(gl.label(k)).scale(c);
                }
                assert_eq!(rebuilt, expected, "[{}, {}] in gl({m}|{n}) of size {size}", gl.label(a), gl.label(b));
            }
        }
    }

    #[test]
    fn gl11_shape() {
        let gl = make_gl(1, 1);
        assert_eq!((gl.dim(), gl.odd_dim()), (4, 2));
        // [E11, E12] = E12
        let e11 = gl.basis_vector(0);
        let e12 = gl.basis_vector(2);
        assert_eq!(gl.bracket(&e11, &e12).unwrap(), e12);
    }

    #[test]
    fn sl2_and_section10_validate() {
        assert!(make_sl2().validate().is_valid());
        assert!(section10_algebra().validate().is_valid());
        assert!(nonabelian_2d().validate().is_valid());
        let s = section10_algebra();
        let v = s.basis_vector(2);
        assert_eq!(s.format_vector(&s.bracket(&v, &v).unwrap()), "2x + 4y");
    }
}
