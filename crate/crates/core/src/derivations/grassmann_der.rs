//! Right superderivations `Σ_i (d/dz_i) f_i` of the Grassmann algebra on `z_1..z_n`.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::config::check_budget;
use crate::error::Result;
use crate::grassmann::{mask_parity, GrassmannElement, Mask};
use crate::lie::LieSuperAlgebra;
use crate::linalg::{zero_vector, Vector};
use crate::scalar::{signed, Parity, Scalar};

/// Right partial derivative: move `z_i` to the right end of each monomial, then drop it.
pub fn right_partial(a: &GrassmannElement, i: usize) -> GrassmannElement {
    let bit: Mask = 1 << i;
    let mut out = GrassmannElement::zero(a.q());
    for (m, c) in a.terms() {
        if m & bit == 0 {
            continue;
        }
        let after = (m >> (i + 1)).count_ones() as i64;
        out.add_term(m & !bit, signed(if after % 2 == 0 { 1 } else { -1 }, c.clone()));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannDerivation {
    comps: Vec<GrassmannElement>,
}

impl GrassmannDerivation {
    /// `Σ_i (d/dz_i) f_i`; `comps[i]` is `f_i`, which is also the image of `z_i`.
    pub fn new(comps: Vec<GrassmannElement>) -> Self {
        let n = comps.len();
        assert!(comps.iter().all(|f| f.q() == n), "components must live in Λ(n)");
        GrassmannDerivation { comps }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![GrassmannElement::zero(n); n])
    }

    /// `(d/dz_i) z^mask`.
    pub fn basis_element(n: usize, i: usize, mask: Mask) -> Self {
        let mut d = Self::zero(n);
        d.comps[i] = GrassmannElement::monomial(n, mask, Scalar::one());
        d
    }

    pub fn n(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[GrassmannElement] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(GrassmannElement::is_zero)
    }

    /// Parity `1 + |f_i|` when all components agree.
    pub fn parity(&self) -> Option<Parity> {
        let mut ps = self.comps.iter().filter(|f| !f.is_zero()).map(|f| f.parity());
        let first = ps.next().unwrap_or(Some(Parity::Even))?;
        ps.all(|p| p == Some(first)).then_some(first + Parity::Odd)
    }

    /// Graded degree `k` when every component is homogeneous of degree `k + 1`.
    pub fn degree(&self) -> Option<i64> {
        let mut degs = self.comps.iter().flat_map(|f| f.terms().map(|(m, _)| m.count_ones() as i64));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first - 1)
    }

    /// `a δ = Σ_i (a d/dz_i) f_i`.
    pub fn apply(&self, a: &GrassmannElement) -> GrassmannElement {
        let mut out = GrassmannElement::zero(self.n());
        for (i, f) in self.comps.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            out += &(&right_partial(a, i) * f);
        }
        out
    }

    /// `z_j [δ1, δ2] = (z_j δ1) δ2 - (-1)^{|δ1||δ2|} (z_j δ2) δ1`, for homogeneous arguments.
    pub fn bracket(&self, other: &Self) -> Self {
        let p1 = self.parity().unwrap_or_default();
        let p2 = other.parity().unwrap_or_default();
        let s = p1.koszul(p2);
        let comps = (0..self.n())
            .map(|j| {
                let a = other.apply(&self.comps[j]);
                let b = self.apply(&other.comps[j]);
                &a - &b.scale(&crate::scalar::int(s))
            })
            .collect();
        Self::new(comps)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.comps.iter().map(|a| a.scale(c)).collect())
    }
}

/// `Der(Λ(n))` on the basis `(d/dz_i) z^S`, even elements first.
#[derive(Clone, Debug)]
pub struct GrassmannDerAlgebra {
    n: usize,
    basis: Vec<(usize, Mask)>,
    algebra: LieSuperAlgebra,
}

pub fn grassmann_derivations(n: usize) -> Result<GrassmannDerAlgebra> {
    check_budget(n)?;
    let mut masks: Vec<Mask> = (0..(1 as Mask) << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let all: Vec<(usize, Mask)> = masks.iter().flat_map(|&m| (0..n).map(move |i| (i, m))).collect();
    let (even, odd): (Vec<_>, Vec<_>) = all.into_iter().partition(|&(_, m)| mask_parity(m).is_odd());
    let even_dim = even.len();
    let basis: Vec<(usize, Mask)> = even.into_iter().chain(odd).collect();
    let labels = basis.iter().map(|&(i, m)| basis_label(n, i, m)).collect();
    let index: BTreeMap<(usize, Mask), usize> = basis.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let elems: Vec<GrassmannDerivation> =
        basis.iter().map(|&(i, m)| GrassmannDerivation::basis_element(n, i, m)).collect();
    let algebra = LieSuperAlgebra::from_bracket_fn(
        format!("Der(Λ({n}))"),
        labels,
        even_dim,
        basis.len() - even_dim,
        |a, b| {
            let r = elems[a].bracket(&elems[b]);
            let mut out = zero_vector(elems.len());
            for (i, f) in r.comps.iter().enumerate() {
                for (m, c) in f.terms() {
                    out[index[&(i, m)]] += c;
                }
            }
            out
        },
    );
    Ok(GrassmannDerAlgebra { n, basis, algebra })
}

fn basis_label(n: usize, i: usize, m: Mask) -> String {
    let mono: String = (0..n).filter(|b| m >> b & 1 == 1).map(|b| format!("z{}", b + 1)).collect();
    format!("∂{}{}", i + 1, mono)
}

impl GrassmannDerAlgebra {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(usize, Mask)] {
        &self.basis
    }

    pub fn position(&self, i: usize, mask: Mask) -> usize {
        self.basis.iter().position(|&p| p == (i, mask)).expect("basis element exists")
    }

    /// Graded degree `|S| - 1` of basis element `k`.
    pub fn degree(&self, k: usize) -> i64 {
        self.basis[k].1.count_ones() as i64 - 1
    }

    pub fn element(&self, k: usize) -> GrassmannDerivation {
        let (i, m) = self.basis[k];
        GrassmannDerivation::basis_element(self.n, i, m)
    }

    pub fn coordinates(&self, d: &GrassmannDerivation) -> Vector {
        let mut out = zero_vector(self.dim());
        for (i, f) in d.components().iter().enumerate() {
            for (m, c) in f.terms() {
                out[self.position(i, m)] += c;
            }
        }
        out
    }

    pub fn from_coordinates(&self, v: &[Scalar]) -> GrassmannDerivation {
        let mut d = GrassmannDerivation::zero(self.n);
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                d = d.add(&self.element(k).scale(c));
            }
        }
        d
    }

    /// Dimension of each graded component.
    pub fn graded_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for k in 0..self.dim() {
            *out.entry(self.degree(k)).or_insert(0) += 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn right_partial_sign() {
        // (z1 z2) d/dz1 = -z2
        let a = GrassmannElement::monomial(2, 0b11, int(1));
        assert_eq!(right_partial(&a, 0), GrassmannElement::monomial(2, 0b10, int(-1)));
        assert_eq!(right_partial(&a, 1), GrassmannElement::monomial(2, 0b01, int(1)));
    }

    #[test]
    fn n1_shape_and_bracket() {
        let g = grassmann_derivations(1).unwrap();
        assert_eq!(g.dim(), 2);
        assert_eq!(g.graded_dims(), BTreeMap::from([(-1, 1), (0, 1)]));
        let zdz = g.element(g.position(0, 1));
        let dz = g.element(g.position(0, 0));
        assert_eq!(zdz.parity(), Some(Parity::Even));
        assert_eq!(dz.parity(), Some(Parity::Odd));
        // right action: [(d/dz) z, d/dz] = + d/dz
        assert_eq!(zdz.bracket(&dz), dz);
    }

    #[test]
    fn n2_graded_dims() {
        let g = grassmann_derivations(2).unwrap();
        assert_eq!(g.graded_dims(), BTreeMap::from([(-1, 2), (0, 4), (1, 2)]));
        assert!(g.algebra().validate().is_valid());
    }

    #[test]
    fn leibniz_on_products() {
        let g = grassmann_derivations(3).unwrap();
        let mut rng = crate::random::rng(7);
        for k in 0..g.dim() {
            let d = g.element(k);
            let p = d.parity().unwrap();
            for pb in [Parity::Even, Parity::Odd, Parity::Even, Parity::Odd] {
                let a = crate::random::grassmann(&mut rng, 3, Parity::Odd, 0.6);
                let b = crate::random::grassmann(&mut rng, 3, pb, 0.6);
                let lhs = d.apply(&(&a * &b));
                let rhs = &(&a * &d.apply(&b)) + &(&d.apply(&a) * &b).scale(&int(p.koszul(pb)));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
