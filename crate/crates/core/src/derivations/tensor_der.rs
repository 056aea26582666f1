//! `Der(U)` for `U = ⊕ U_i ⊗ Λ(n_i)`, assembled from `Der(U_i) ⊗ Λ(n_i)` and
//! `id ⊗ Der(Λ(n_i))` with the bracket given by the standard formulas
//!
//! 1. `[δ⊗a, δ'⊗a'] = (-1)^{|a||δ'|} [δ,δ'] ⊗ aa'`
//! 2. `[δ⊗a, id⊗∂] = δ ⊗ a∂`
//! 3. `[id⊗∂, id⊗∂'] = id ⊗ [∂,∂']`
//!
//! Here `a∂` is the right action of `∂` on `a`, with no further sign.

use std::collections::HashMap;

use num::{One, Zero};

use super::{derivation_algebra, grassmann_derivations, DerivationAlgebra, GrassmannDerAlgebra, GrassmannDerivation};
use crate::error::Result;
use crate::grassmann::{mask_parity, merge_sign, GrassmannElement, Mask};
use crate::lie::{center, LieSuperAlgebra, Subspace};
use crate::linalg::{zero_vector, Matrix, Vector};
use crate::par;
use crate::scalar::{signed, Parity, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TensorDerBasis {
    /// `δ ⊗ z^mask` with `δ` the `der`-th basis element of `Der(U_i)`.
    Tensor { summand: usize, der: usize, mask: Mask },
    /// `id ⊗ ∂` with `∂` the `der`-th basis element of `Der(Λ(n_i))`.
    Grading { summand: usize, der: usize },
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub base: LieSuperAlgebra,
    pub n: usize,
    pub der: DerivationAlgebra,
    pub gder: GrassmannDerAlgebra,
}

#[derive(Clone, Debug)]
pub struct TensorDerAlgebra {
    summands: Vec<Summand>,
    basis: Vec<TensorDerBasis>,
    parities: Vec<Parity>,
    index: HashMap<TensorDerBasis, usize>,
    algebra: LieSuperAlgebra,
    u_basis: Vec<(usize, usize, Mask)>,
    u_index: HashMap<(usize, usize, Mask), usize>,
    u_algebra: LieSuperAlgebra,
    warnings: Vec<String>,
}

fn sorted_masks(n: usize) -> Vec<Mask> {
    let mut masks: Vec<Mask> = (0..(1 as Mask) << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
}

fn mono_label(mask: Mask) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..Mask::BITS).filter(|b| mask >> b & 1 == 1).map(|b| format!("z{}", b + 1)).collect()
}

pub fn tensor_der(summands: &[(LieSuperAlgebra, usize)]) -> Result<TensorDerAlgebra> {
    let mut parts = Vec::new();
    let mut warnings = Vec::new();
    for (base, n) in summands {
        if center(base).dim() > 0 {
            warnings.push(format!("summand {} has a nonzero center", base.name()));
        }
        parts.push(Summand { base: base.clone(), n: *n, der: derivation_algebra(base)?, gder: grassmann_derivations(*n)? });
    }
    let tag = |s: usize| if summands.len() > 1 { format!("[{}]", s + 1) } else { String::new() };

    // Der(U) basis, even first.
    let mut items: Vec<(TensorDerBasis, Parity, String)> = Vec::new();
    for (s, part) in parts.iter().enumerate() {
        for mask in sorted_masks(part.n) {
            for a in 0..part.der.dim() {
                let p = part.der.algebra().parity(a) + mask_parity(mask);
                let label = format!("{}⊗{}{}", part.der.algebra().label(a), mono_label(mask), tag(s));
                items.push((TensorDerBasis::Tensor { summand: s, der: a, mask }, p, label));
            }
        }
        for g in 0..part.gder.dim() {
            let label = format!("id⊗{}{}", part.gder.algebra().label(g), tag(s));
            items.push((TensorDerBasis::Grading { summand: s, der: g }, part.gder.algebra().parity(g), label));
        }
    }
    items.sort_by_key(|(_, p, _)| *p);
    let even_dim = items.iter().filter(|(_, p, _)| !p.is_odd()).count();
    let basis: Vec<TensorDerBasis> = items.iter().map(|(b, _, _)| *b).collect();
    let parities: Vec<Parity> = items.iter().map(|(_, p, _)| *p).collect();
    let labels: Vec<String> = items.into_iter().map(|(_, _, l)| l).collect();
    let index: HashMap<TensorDerBasis, usize> = basis.iter().enumerate().map(|(k, b)| (*b, k)).collect();

    // U itself, even first.
    let mut u_items: Vec<((usize, usize, Mask), Parity, String)> = Vec::new();
    for (s, part) in parts.iter().enumerate() {
        for mask in sorted_masks(part.n) {
            for j in 0..part.base.dim() {
                let p = part.base.parity(j) + mask_parity(mask);
                u_items.push(((s, j, mask), p, format!("{}⊗{}{}", part.base.label(j), mono_label(mask), tag(s))));
            }
        }
    }
    u_items.sort_by_key(|(_, p, _)| *p);
    let u_even = u_items.iter().filter(|(_, p, _)| !p.is_odd()).count();
    let u_basis: Vec<(usize, usize, Mask)> = u_items.iter().map(|(b, _, _)| *b).collect();
    let u_labels: Vec<String> = u_items.into_iter().map(|(_, _, l)| l).collect();
    let u_index: HashMap<_, _> = u_basis.iter().enumerate().map(|(k, b)| (*b, k)).collect();
    let u_name = parts.iter().map(|p| format!("{}⊗Λ({})", p.base.name(), p.n)).collect::<Vec<_>>().join("+");
    let u_algebra = LieSuperAlgebra::from_bracket_fn(u_name.clone(), u_labels, u_even, u_basis.len() - u_even, |a, b| {
        let (s, i, ma) = u_basis[a];
        let (t, j, mb) = u_basis[b];
        let mut out = zero_vector(u_basis.len());
        if s != t {
            return out;
        }
        let Some(sg) = merge_sign(ma, mb) else { return out };
        let base = &parts[s].base;
        let sign = sg * mask_parity(ma).koszul(base.parity(j));
        for (k, c) in base.bracket_basis(i, j) {
            out[u_index[&(s, *k, ma | mb)]] += signed(sign, c.clone());
        }
        out
    });

    let mut t = TensorDerAlgebra {
        summands: parts,
        basis,
        parities,
        index,
        algebra: LieSuperAlgebra::from_constants("", 0, 0, []).expect("empty algebra"),
        u_basis,
        u_index,
        u_algebra,
        warnings,
    };
    let algebra = {
        let t = &t;
        LieSuperAlgebra::from_bracket_fn(format!("Der({u_name})"), labels, even_dim, t.basis.len() - even_dim, |a, b| {
            t.formula_bracket(a, b)
        })
    };
    t.algebra = algebra;
    Ok(t)
}

impl TensorDerAlgebra {
    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.algebra
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn basis(&self) -> &[TensorDerBasis] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn position(&self, b: TensorDerBasis) -> usize {
        self.index[&b]
    }

    /// The algebra `U = ⊕ U_i ⊗ Λ(n_i)` on which `Der(U)` acts.
    pub fn u(&self) -> &LieSuperAlgebra {
        &self.u_algebra
    }

    pub fn u_position(&self, summand: usize, j: usize, mask: Mask) -> usize {
        self.u_index[&(summand, j, mask)]
    }

    fn parity_of(&self, b: TensorDerBasis) -> Parity {
        self.parities[self.index[&b]]
    }

    /// Bracket of basis elements `a`, `b` by formulas (1)-(3).
    fn formula_bracket(&self, a: usize, b: usize) -> Vector {
        let mut out = zero_vector(self.basis.len());
        match (self.basis[a], self.basis[b]) {
            (TensorDerBasis::Tensor { summand: s, der: da, mask: ma }, TensorDerBasis::Tensor { summand: t, der: db, mask: mb }) => {
                if s != t {
                    return out;
                }
                let Some(sg) = merge_sign(ma, mb) else { return out };
                let der = self.summands[s].der.algebra();
                let sign = sg * mask_parity(ma).koszul(der.parity(db));
                for (k, c) in der.bracket_basis(da, db) {
                    out[self.index[&TensorDerBasis::Tensor { summand: s, der: *k, mask: ma | mb }]] += signed(sign, c.clone());
                }
            }
            (TensorDerBasis::Tensor { summand: s, der, mask }, TensorDerBasis::Grading { summand: t, der: g }) => {
                if s == t {
                    self.add_formula_two(&mut out, s, der, mask, g, 1);
                }
            }
            (TensorDerBasis::Grading { summand: t, der: g }, TensorDerBasis::Tensor { summand: s, der, mask }) => {
                if s == t {
                    let sign = -self.parity_of(self.basis[a]).koszul(self.parity_of(self.basis[b]));
                    self.add_formula_two(&mut out, s, der, mask, g, sign);
                }
            }
            (TensorDerBasis::Grading { summand: s, der: g }, TensorDerBasis::Grading { summand: t, der: h }) => {
                if s == t {
                    for (k, c) in self.summands[s].gder.algebra().bracket_basis(g, h) {
                        out[self.index[&TensorDerBasis::Grading { summand: s, der: *k }]] += c;
                    }
                }
            }
        }
        out
    }

    /// Adds `sign * δ ⊗ (z^mask ∂)`.
    fn add_formula_two(&self, out: &mut Vector, s: usize, der: usize, mask: Mask, g: usize, sign: i64) {
        let part = &self.summands[s];
        let a = GrassmannElement::monomial(part.n, mask, Scalar::one());
        for (m, c) in part.gder.element(g).apply(&a).terms() {
            out[self.index[&TensorDerBasis::Tensor { summand: s, der, mask: m }]] += signed(sign, c.clone());
        }
    }

    /// Coordinates of `ad(x) ⊗ a` for `x` in `U_s`.
    pub fn inner_vector(&self, s: usize, x: &[Scalar], a: &GrassmannElement) -> Result<Vector> {
        let coords = self.summands[s].der.inner_coordinates(x)?;
        let mut out = zero_vector(self.dim());
        for (da, c) in coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (m, e) in a.terms() {
                out[self.index[&TensorDerBasis::Tensor { summand: s, der: da, mask: m }]] += c * e;
            }
        }
        Ok(out)
    }

    /// Coordinates of `id ⊗ ∂`.
    pub fn grading_vector(&self, s: usize, d: &GrassmannDerivation) -> Vector {
        let coords = self.summands[s].gder.coordinates(d);
        let mut out = zero_vector(self.dim());
        for (g, c) in coords.into_iter().enumerate() {
            out[self.index[&TensorDerBasis::Grading { summand: s, der: g }]] = c;
        }
        out
    }

    /// The inner ideal `U ⊆ Der(U)`, spanned by `ad(x_j) ⊗ z^S`.
    pub fn inner_basis(&self) -> Vec<(String, Vector)> {
        self.u_basis
            .iter()
            .enumerate()
            .map(|(k, &(s, j, mask))| {
                let part = &self.summands[s];
                let a = GrassmannElement::monomial(part.n, mask, Scalar::one());
                let v = self.inner_vector(s, &part.base.basis_vector(j), &a).expect("basis vectors are homogeneous");
                (self.u_algebra.label(k).to_string(), v)
            })
            .collect()
    }

    pub fn inner(&self) -> Subspace {
        Subspace::span(self.algebra.parities(), self.inner_basis().into_iter().map(|(_, v)| v))
    }

    /// Positions of `id ⊗ (d/dz_j) 1` for summand `s`.
    pub fn degree_minus_one(&self, s: usize) -> Vec<usize> {
        let part = &self.summands[s];
        (0..part.n).map(|j| self.index[&TensorDerBasis::Grading { summand: s, der: part.gder.position(j, 0) }]).collect()
    }

    /// Matrix of the right action of basis element `k` on `U`.
    pub fn operator(&self, k: usize) -> Matrix {
        let d = self.u_basis.len();
        let mut m = Matrix::zeros(d, d);
        match self.basis[k] {
            TensorDerBasis::Tensor { summand: s, der, mask } => {
                let part = &self.summands[s];
                let delta = &part.der.basis()[der];
                for (row, &(t, j, b)) in self.u_basis.iter().enumerate() {
                    if t != s {
                        continue;
                    }
                    // (x⊗b)(δ⊗z^S) = (-1)^{|b||δ|} xδ ⊗ b z^S
                    let Some(sg) = merge_sign(b, mask) else { continue };
                    let sign = sg * mask_parity(b).koszul(delta.parity);
                    for (i, c) in delta.matrix.row(j).iter().enumerate() {
                        if !c.is_zero() {
                            m[(row, self.u_index[&(s, i, b | mask)])] += signed(sign, c.clone());
                        }
                    }
                }
            }
            TensorDerBasis::Grading { summand: s, der } => {
                let part = &self.summands[s];
                let delta = part.gder.element(der);
                for (row, &(t, j, b)) in self.u_basis.iter().enumerate() {
                    if t != s {
                        continue;
                    }
                    let img = delta.apply(&GrassmannElement::monomial(part.n, b, Scalar::one()));
                    for (mm, c) in img.terms() {
                        m[(row, self.u_index[&(s, j, mm)])] += c;
                    }
                }
            }
        }
        m
    }

    pub fn operator_of(&self, v: &[Scalar]) -> Matrix {
        let d = self.u_basis.len();
        let mut m = Matrix::zeros(d, d);
        for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            m = &m + &self.operator(k).scale(c);
        }
        m
    }

    /// First basis pair where the formula bracket differs from the operator
    /// supercommutator on `U`.
    pub fn formula_mismatch(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        let ops: Vec<Matrix> = par::map_range(n, |k| self.operator(k));
        par::find_first(n * n, |ab| {
            let (a, b) = (ab / n, ab % n);
            let s = self.algebra.parity(a).koszul(self.algebra.parity(b));
            let comm = &(&ops[a] * &ops[b]) - &(&ops[b] * &ops[a]).scale(&crate::scalar::int(s));
            let formula = self.algebra.bracket_basis_vector(a, &self.algebra.basis_vector(b));
            let mut via = Matrix::zeros(comm.rows(), comm.cols());
            for (k, c) in formula.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                via = &via + &ops[k].scale(c);
            }
            (via != comm).then_some((a, b))
        })
    }

    /// Span of all basis operators, as flattened matrices on `U`.
    pub fn operator_span(&self) -> Subspace {
        let parities = super::operator_parities(&self.u_algebra);
        Subspace::span(&parities, par::map_range(self.dim(), |k| self.operator(k).flatten()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::make_sl2;

    #[test]
    fn sl2_without_grassmann() {
        let t = tensor_der(&[(make_sl2(), 0)]).unwrap();
        assert_eq!(t.dim(), 3);
        assert!(t.warnings().is_empty());
    }

    #[test]
    fn sl2_tensor_two_dimensions() {
        let t = tensor_der(&[(make_sl2(), 2)]).unwrap();
        assert_eq!(t.dim(), 20);
        assert_eq!(t.inner().dim(), 12);
        assert!(t.algebra().validate().is_valid());
        assert!(crate::lie::is_ideal(t.algebra(), &t.inner()));
        assert_eq!(t.formula_mismatch(), None);
    }

    #[test]
    fn formula_two_example() {
        let t = tensor_der(&[(make_sl2(), 2)]).unwrap();
        let sl2 = make_sl2();
        let x = sl2.basis_vector(1);
        let xz1 = t.inner_vector(0, &x, &GrassmannElement::generator(2, 0)).unwrap();
        let d1 = t.grading_vector(0, &GrassmannDerivation::basis_element(2, 0, 0));
        let r = t.algebra().bracket(&xz1, &d1).unwrap();
        assert_eq!(r, t.inner_vector(0, &x, &GrassmannElement::one(2)).unwrap());
    }

    #[test]
    fn inner_vectors_act_as_adjoint() {
        let t = tensor_der(&[(make_sl2(), 1)]).unwrap();
        let u = t.u();
        for (k, (_, v)) in t.inner_basis().into_iter().enumerate() {
            assert_eq!(t.operator_of(&v), u.ad_right(&u.basis_vector(k)));
        }
    }
}
