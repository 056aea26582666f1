use crate::error::{Error, Result};
use crate::grassmann::{mask_parity, GrassmannElement};
use crate::scalar::{int, Parity};
use crate::supermatrix::SuperMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupTag {
    Gl11,
    Gl22,
}

impl GroupTag {
    pub fn from_dims(m: usize, n: usize) -> Result<Self> {
        match (m, n) {
            (1, 1) => Ok(GroupTag::Gl11),
            (2, 2) => Ok(GroupTag::Gl22),
            _ => Err(Error::UnsupportedGroup(format!("GL({m}|{n})"))),
        }
    }

    pub fn dims(self) -> (usize, usize) {
        match self {
            GroupTag::Gl11 => (1, 1),
            GroupTag::Gl22 => (2, 2),
        }
    }
}

/// A point `g ∈ GL(m|n)(Λ(q))`: an even supermatrix whose diagonal blocks have invertible bodies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLPoint {
    matrix: SuperMatrix,
    inverse: SuperMatrix,
}

impl GLPoint {
    pub fn new(matrix: SuperMatrix) -> Result<Self> {
        if !matrix.is_even() {
            return Err(Error::Parity("a group point must be an even supermatrix".into()));
        }
        let inverse = matrix.inverse()?;
        Ok(GLPoint { matrix, inverse })
    }

    pub fn identity(m: usize, n: usize, q: usize) -> Self {
        let i = SuperMatrix::identity(m, n, q);
        GLPoint { matrix: i.clone(), inverse: i }
    }

    pub fn matrix(&self) -> &SuperMatrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &SuperMatrix {
        &self.inverse
    }

    pub fn mul(&self, other: &GLPoint) -> Result<GLPoint> {
        Ok(GLPoint { matrix: self.matrix.checked_mul(&other.matrix)?, inverse: other.inverse.checked_mul(&self.inverse)? })
    }

    pub fn inverse(&self) -> GLPoint {
        GLPoint { matrix: self.inverse.clone(), inverse: self.matrix.clone() }
    }

    pub fn q(&self) -> usize {
        self.matrix.q()
    }
}

/// A `Λ(q)`-valued functional on `m/m²`, stored as its values `U_ij = u(c_ij - δ_ij)`.
/// Entry `(i, j)` has parity `|u| + |i| + |j|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    parity: Parity,
    values: SuperMatrix,
}

fn sign_of(d: &SuperMatrix, i: usize, p: Parity) -> i64 {
    if p.is_odd() && d.index_parity(i).is_odd() {
        -1
    } else {
        1
    }
}

impl Functional {
    pub fn new(parity: Parity, values: SuperMatrix) -> Result<Self> {
        match values.parity() {
            Some(p) if p == parity || values.is_zero() => Ok(Functional { parity, values }),
            _ => Err(Error::Parity(format!(
                "functional values do not have parity {}",
                if parity.is_odd() { "odd" } else { "even" }
            ))),
        }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn values(&self) -> &SuperMatrix {
        &self.values
    }

    /// Functional whose image under [`Functional::to_matrix`] is `x`.
    pub fn from_matrix(x: &SuperMatrix) -> Result<Self> {
        let parity = x.parity().ok_or_else(|| Error::Parity("matrix is not homogeneous".into()))?;
        Ok(Functional { parity, values: twist(x, parity) })
    }

    /// `D^{|u|} U` with `D = diag((-1)^{|i|})`. This is a Lie superalgebra
    /// isomorphism from the convolution bracket to the supermatrix bracket,
    /// and it turns the Hopf-side adjoint action into conjugation.
    pub fn to_matrix(&self) -> SuperMatrix {
        twist(&self.values, self.parity)
    }

    pub fn scale_left(&self, a: &GrassmannElement) -> Result<Self> {
        let p = a.parity().ok_or_else(|| Error::Parity("coefficient is not homogeneous".into()))?;
        Ok(Functional { parity: self.parity + p, values: self.values.left_mul(a) })
    }
}

fn twist(x: &SuperMatrix, p: Parity) -> SuperMatrix {
    let d = x.dim();
    let mut out = x.clone();
    for i in 0..d {
        if sign_of(x, i, p) < 0 {
            for j in 0..d {
                out.set(i, j, -x.entry(i, j));
            }
        }
    }
    out
}

/// `g x g^{-1}`.
pub fn adjoint_matrix(g: &GLPoint, x: &SuperMatrix) -> Result<SuperMatrix> {
    g.matrix.checked_mul(x)?.checked_mul(&g.inverse)
}

/// `(Ad(g)u)(f) = Σ (-1)^{|u||f_1|} g(f_1) u(f_2) g(s(f_3))` on `f = c_ij`, with
/// `Δ²(c_ij) = Σ c_ik ⊗ c_kl ⊗ c_lj` and `g(s(c_lj)) = (g^{-1})_lj`.
pub fn adjoint_hopf(g: &GLPoint, u: &Functional) -> Result<Functional> {
    let (m, n) = (g.matrix.even_dim(), g.matrix.odd_dim());
    GroupTag::from_dims(m, n)?;
    if (u.values.even_dim(), u.values.odd_dim()) != (m, n) || u.values.q() != g.q() {
        return Err(Error::DimensionMismatch { expected: g.matrix.dim(), found: u.values.dim() });
    }
    let d = m + n;
    let q = g.q();
    let gm = &g.matrix;
    let gi = &g.inverse;
    let mut out = SuperMatrix::zeros(m, n, q);
    for i in 0..d {
        for j in 0..d {
            let mut acc = GrassmannElement::zero(q);
            for k in 0..d {
                let f1 = gm.index_parity(i) + gm.index_parity(k);
                let sign = if u.parity.is_odd() && f1.is_odd() { -1 } else { 1 };
                let gik = gm.entry(i, k);
                if gik.is_zero() {
                    continue;
                }
                for l in 0..d {
                    let term = &(gik * u.values.entry(k, l)) * gi.entry(l, j);
                    acc += &term.scale(&int(sign));
                }
            }
            out.set(i, j, acc);
        }
    }
    Ok(Functional { parity: u.parity, values: out })
}

/// `[φ, ψ] = φ⋆ψ - (-1)^{|φ||ψ|} ψ⋆φ` with `(φ⋆ψ)(c_ij) = Σ_k (-1)^{|ψ||c_ik|} φ(c_ik) ψ(c_kj)`.
pub fn convolution_bracket(u: &Functional, v: &Functional) -> Result<Functional> {
    let (a, b) = (&u.values, &v.values);
    if (a.even_dim(), a.odd_dim(), a.q()) != (b.even_dim(), b.odd_dim(), b.q()) {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    let star = |x: &Functional, y: &Functional| {
        let d = x.values.dim();
        let mut out = SuperMatrix::zeros(x.values.even_dim(), x.values.odd_dim(), x.values.q());
        for i in 0..d {
            for j in 0..d {
                let mut acc = GrassmannElement::zero(x.values.q());
                for k in 0..d {
                    let c = x.values.index_parity(i) + x.values.index_parity(k);
                    let t = x.values.entry(i, k) * y.values.entry(k, j);
                    acc += &t.scale(&int(y.parity.koszul(c)));
                }
                out.set(i, j, acc);
            }
        }
        out
    };
    let values = &star(u, v) - &star(v, u).scale(&int(u.parity.koszul(v.parity)));
    Ok(Functional { parity: u.parity + v.parity, values })
}

/// `g + ε_0 X_0 + ε_1 X_1` over `Λ(q)[ε_0, ε_1]` with `ε_i ε_j = 0`, `|ε_i| = i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualNumberPoint {
    pub base: SuperMatrix,
    pub eps0: SuperMatrix,
    pub eps1: SuperMatrix,
}

impl DualNumberPoint {
    /// `I + ε_{|u|} u`, whose value on `c_ij` is `δ_ij + ε u(c_ij)`.
    pub fn from_functional(u: &Functional) -> Self {
        let v = &u.values;
        let zero = SuperMatrix::zeros(v.even_dim(), v.odd_dim(), v.q());
        let base = SuperMatrix::identity(v.even_dim(), v.odd_dim(), v.q());
        if u.parity.is_odd() {
            DualNumberPoint { base, eps0: zero, eps1: v.clone() }
        } else {
            DualNumberPoint { base, eps0: v.clone(), eps1: zero }
        }
    }

    /// Realizes the dual numbers inside `Λ(q+2)`: `ε_1 = θ_{q+1}`, `ε_0 = θ_{q+1}θ_{q+2}`.
    pub fn to_matrix(&self) -> SuperMatrix {
        let q = self.base.q();
        let e1 = GrassmannElement::generator(q + 2, q);
        let e0 = &e1 * &GrassmannElement::generator(q + 2, q + 1);
        let lift = |x: &SuperMatrix| x.embed(q + 2, 0);
        &(&lift(&self.base) + &lift(&self.eps0).left_mul(&e0)) + &lift(&self.eps1).left_mul(&e1)
    }

    /// Inverse of [`DualNumberPoint::to_matrix`]; `None` if the matrix is not of that form.
    pub fn from_matrix(x: &SuperMatrix) -> Option<Self> {
        let q = x.q().checked_sub(2)?;
        let (m, n) = (x.even_dim(), x.odd_dim());
        let mut base = SuperMatrix::zeros(m, n, q);
        let mut eps0 = SuperMatrix::zeros(m, n, q);
        let mut eps1 = SuperMatrix::zeros(m, n, q);
        let low = (1u32 << q) - 1;
        let e1 = 1u32 << q;
        let e0 = e1 | (1u32 << (q + 1));
        for i in 0..x.dim() {
            for j in 0..x.dim() {
                let mut parts = [GrassmannElement::zero(q), GrassmannElement::zero(q), GrassmannElement::zero(q)];
                for (mask, c) in x.entry(i, j).terms() {
                    let rest = mask & low;
                    // θ^rest ε = (-1)^{|ε||rest|} ε θ^rest
                    let flip = |eps_odd: bool| {
                        if eps_odd && mask_parity(rest).is_odd() {
                            -c.clone()
                        } else {
                            c.clone()
                        }
                    };
                    match mask & !low {
                        0 => parts[0].add_term(rest, c.clone()),
                        h if h == e1 => parts[2].add_term(rest, flip(true)),
                        h if h == e0 => parts[1].add_term(rest, flip(false)),
                        _ => return None,
                    }
                }
                let [b, z0, z1] = parts;
                base.set(i, j, b);
                eps0.set(i, j, z0);
                eps1.set(i, j, z1);
            }
        }
        Some(DualNumberPoint { base, eps0, eps1 })
    }

    /// Membership in `ker G(p_A)`: the point reduces to the identity when `ε_i ↦ 0`.
    pub fn in_kernel(&self) -> bool {
        self.base == SuperMatrix::identity(self.base.even_dim(), self.base.odd_dim(), self.base.q())
    }
}

/// `Ad(g)u` read off as the `ε`-part of `g (I + ε u) g^{-1}`.
pub fn adjoint_dual(g: &GLPoint, u: &Functional) -> Result<Functional> {
    let q = g.q();
    let point = DualNumberPoint::from_functional(u).to_matrix();
    let gl = g.matrix.embed(q + 2, 0);
    let gi = g.inverse.embed(q + 2, 0);
    let conj = gl.checked_mul(&point)?.checked_mul(&gi)?;
    let parts = DualNumberPoint::from_matrix(&conj).ok_or_else(|| Error::Precondition("not a dual number point".into()))?;
    let values = if u.parity.is_odd() { parts.eps1 } else { parts.eps0 };
    Ok(Functional { parity: u.parity, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;

    fn th(q: usize, i: usize) -> GrassmannElement {
        GrassmannElement::generator(q, i)
    }

    #[test]
    fn conjugation_example() {
        let g = &SuperMatrix::identity(1, 1, 2) + &SuperMatrix::unit(1, 1, 2, 0, 1, th(2, 0));
        let g = GLPoint::new(g).unwrap();
        let u = SuperMatrix::unit(1, 1, 2, 1, 1, GrassmannElement::one(2));
        let expected = &u + &SuperMatrix::unit(1, 1, 2, 0, 1, th(2, 0));
        assert_eq!(adjoint_matrix(&g, &u).unwrap(), expected);
    }

    #[test]
    fn odd_pair_bracket() {
        let one = GrassmannElement::one(0);
        let e12 = SuperMatrix::unit(1, 1, 0, 0, 1, one.clone());
        let e21 = SuperMatrix::unit(1, 1, 0, 1, 0, one);
        let u = Functional::from_matrix(&e12).unwrap();
        let v = Functional::from_matrix(&e21).unwrap();
        let b = convolution_bracket(&u, &v).unwrap();
        assert_eq!(b.to_matrix(), SuperMatrix::identity(1, 1, 0));
    }

    #[test]
    fn hopf_side_matches_conjugation() {
        let mut rng = random::rng(7);
        for _ in 0..10 {
            let g = GLPoint::new(random::gl_point(&mut rng, 1, 1, 3)).unwrap();
            for p in [Parity::Even, Parity::Odd] {
                let x = random::supermatrix(&mut rng, 1, 1, 3, p);
                let u = Functional::new(p, twist(&x, p)).unwrap();
                let h = adjoint_hopf(&g, &u).unwrap();
                assert_eq!(h.to_matrix(), adjoint_matrix(&g, &u.to_matrix()).unwrap());
                assert_eq!(h, adjoint_dual(&g, &u).unwrap());
            }
        }
    }

    #[test]
    fn unsupported_group() {
        let g = GLPoint::identity(2, 1, 0);
        let u = Functional::new(Parity::Even, SuperMatrix::zeros(2, 1, 0)).unwrap();
        assert!(matches!(adjoint_hopf(&g, &u), Err(Error::UnsupportedGroup(_))));
    }

    #[test]
    fn dual_round_trip() {
        let mut rng = random::rng(3);
        let x = random::supermatrix(&mut rng, 2, 2, 2, Parity::Odd);
        let u = Functional::new(Parity::Odd, x).unwrap();
        let p = DualNumberPoint::from_functional(&u);
        assert!(p.in_kernel());
        assert_eq!(DualNumberPoint::from_matrix(&p.to_matrix()).unwrap(), p);
    }
}
