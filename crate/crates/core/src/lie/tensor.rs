//! `L ⊗ Λ(q)` with `[x⊗a, y⊗b] = (-1)^{|a||y|} [x,y] ⊗ ab`.

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use super::LieSuperAlgebra;
use crate::config::check_budget;
use crate::error::Result;
use crate::grassmann::{mask_parity, merge_sign, GrassmannElement, Mask};
use crate::linalg::{zero_vector, Vector};
use crate::scalar::{signed, Parity, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(usize, Mask), Scalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(i: usize, mask: Mask, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(i, mask, c);
        e
    }

    pub fn add_term(&mut self, i: usize, mask: Mask, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, mask)).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, mask));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, Mask, &Scalar)> {
        self.terms.iter().map(|(&(i, m), c)| (i, m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, m, c) in other.terms() {
            out.add_term(i, m, c.clone());
        }
        out
    }

    pub fn scale(&self, a: &Scalar) -> Self {
        let mut out = Self::zero();
        for (i, m, c) in self.terms() {
            out.add_term(i, m, c * a);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct GrassmannTensor {
    base: LieSuperAlgebra,
    q: usize,
    prefix: String,
    basis: Vec<(usize, Mask)>,
    position: HashMap<(usize, Mask), usize>,
    even_dim: usize,
}

pub fn tensor_with_grassmann(l: &LieSuperAlgebra, q: usize) -> Result<GrassmannTensor> {
    check_budget(q)?;
    Ok(GrassmannTensor::new(l.clone(), q, "θ"))
}

impl GrassmannTensor {
    pub(crate) fn new(base: LieSuperAlgebra, q: usize, prefix: &str) -> Self {
        let mut masks: Vec<Mask> = (0..(1 as Mask) << q).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for &m in &masks {
            for i in 0..base.dim() {
                if (base.parity(i) + mask_parity(m)).is_odd() {
                    odd.push((i, m));
                } else {
                    even.push((i, m));
                }
            }
        }
        let even_dim = even.len();
        let basis: Vec<_> = even.into_iter().chain(odd).collect();
        let position = basis.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        GrassmannTensor { base, q, prefix: prefix.to_string(), basis, position, even_dim }
    }

    pub fn with_prefix(mut self, prefix: &str) -> Self {
        self.prefix = prefix.to_string();
        self
    }

    pub fn base(&self) -> &LieSuperAlgebra {
        &self.base
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn even_dim(&self) -> usize {
        self.even_dim
    }

    /// Basis of the assembled algebra as `(base index, monomial)` pairs, even first.
    pub fn basis(&self) -> &[(usize, Mask)] {
        &self.basis
    }

    pub fn position(&self, i: usize, mask: Mask) -> usize {
        self.position[&(i, mask)]
    }

    pub fn parity_of(&self, i: usize, mask: Mask) -> Parity {
        self.base.parity(i) + mask_parity(mask)
    }

    pub fn monomial_label(&self, mask: Mask) -> String {
        if mask == 0 {
            return "1".to_string();
        }
        (0..self.q).filter(|b| mask >> b & 1 == 1).map(|b| format!("{}{}", self.prefix, b + 1)).collect()
    }

    pub fn label(&self, i: usize, mask: Mask) -> String {
        format!("{}⊗{}", self.base.label(i), self.monomial_label(mask))
    }

    /// `x ⊗ a` for a base vector `x`.
    pub fn pure(&self, x: &[Scalar], a: &GrassmannElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (m, c) in a.terms() {
                out.add_term(i, m, xi * c);
            }
        }
        out
    }

    pub fn bracket(&self, u: &TensorElement, v: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (i, a, cu) in u.terms() {
            for (j, b, cv) in v.terms() {
                let Some(s) = merge_sign(a, b) else { continue };
                let s = s * mask_parity(a).koszul(self.base.parity(j));
                let f = signed(s, cu * cv);
                for (k, c) in self.base.bracket_basis(i, j) {
                    out.add_term(*k, a | b, &f * c);
                }
            }
        }
        out
    }

    pub fn to_vector(&self, e: &TensorElement) -> Vector {
        let mut v = zero_vector(self.dim());
        for (i, m, c) in e.terms() {
            v[self.position(i, m)] += c;
        }
        v
    }

    pub fn from_vector(&self, v: &[Scalar]) -> TensorElement {
        let mut e = TensorElement::zero();
        for (k, c) in v.iter().enumerate() {
            let (i, m) = self.basis[k];
            e.add_term(i, m, c.clone());
        }
        e
    }

    pub fn to_algebra(&self) -> LieSuperAlgebra {
        let labels = self.basis.iter().map(|&(i, m)| self.label(i, m)).collect();
        let name = format!("{}⊗Λ({})", self.base.name(), self.q);
        LieSuperAlgebra::from_bracket_fn(name, labels, self.even_dim, self.dim() - self.even_dim, |a, b| {
            let (i, ma) = self.basis[a];
            let (j, mb) = self.basis[b];
            let r = self.bracket(&TensorElement::term(i, ma, num::One::one()), &TensorElement::term(j, mb, num::One::one()));
            self.to_vector(&r)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{make_gl, make_sl2};
    use crate::scalar::int;

    #[test]
    fn theta_squared_kills_bracket() {
        let t = tensor_with_grassmann(&make_sl2(), 2).unwrap();
        let a = TensorElement::term(0, 0b01, int(1));
        let b = TensorElement::term(1, 0b01, int(1));
        assert!(t.bracket(&a, &b).is_zero());
    }

    #[test]
    fn even_elements_get_plus_sign() {
        let t = tensor_with_grassmann(&make_sl2(), 2).unwrap();
        // [h⊗θ1, e⊗θ2] = 2e⊗θ1θ2
        let r = t.bracket(&TensorElement::term(0, 0b01, int(1)), &TensorElement::term(1, 0b10, int(1)));
        assert_eq!(r, TensorElement::term(1, 0b11, int(2)));
    }

    #[test]
    fn odd_partner_gives_minus_sign() {
        let gl = make_gl(1, 1);
        let t = tensor_with_grassmann(&gl, 1).unwrap();
        // [E11⊗θ1, E12⊗1] = -[E11, E12]⊗θ1 = -E12⊗θ1
        let r = t.bracket(&TensorElement::term(0, 1, int(1)), &TensorElement::term(2, 0, int(1)));
        assert_eq!(r, TensorElement::term(2, 1, int(-1)));
    }

    #[test]
    fn assembled_algebra_validates() {
        let t = tensor_with_grassmann(&make_gl(1, 1), 2).unwrap();
        let l = t.to_algebra();
        assert_eq!(l.dim(), 16);
        assert!(l.validate().is_valid());
    }
}
