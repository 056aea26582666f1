//! Hopf superalgebras of abelian supergroups, free Hopf superalgebras on
//! primitive and group-like generators, and coactions of the latter on the former.

mod abelian;
mod coaction;
mod free;
mod sec8;
mod superpoly;

pub use abelian::{k_sign_pairs, AbelianHopfAlgebra};
pub use coaction::{Coaction, CoactionData, CoactionReport, NamedCheck};
pub use free::{FreeGen, FreeHopfSuperalgebra};
pub use sec8::{
    hopf_ideal_exclusion, residue_argument, section8_data, section8_fixture, section8_with_f12, HopfIdealExclusion, ResidueArgument, LineCheck, Section8,
    SubspaceFamily,
};
pub use superpoly::{format_monomial, monomial_product, Block, Exps, GenImage, GenKind, Sig, Signature, SuperPoly};

use num::One;

use crate::par;
use crate::scalar::Scalar;

pub trait HopfAlgebra: Sync {
    fn name(&self) -> String;

    /// Single-block signature of the algebra.
    fn sig(&self) -> &Sig;

    /// `Δ` on a basis monomial, valued in `A ⊗ A`.
    fn coproduct(&self, m: &[i32]) -> SuperPoly;

    fn counit(&self, m: &[i32]) -> Scalar;

    fn antipode(&self, m: &[i32]) -> SuperPoly;

    /// Basis monomials of total absolute degree at most `d`.
    fn basis(&self, d: usize) -> Vec<Exps> {
        basis_up_to(self.sig(), d)
    }
}

pub fn basis_up_to(sig: &Signature, d: usize) -> Vec<Exps> {
    let mut out = Vec::new();
    let mut cur = vec![0i32; sig.len()];
    fn rec(sig: &Signature, i: usize, left: i32, cur: &mut Exps, out: &mut Vec<Exps>) {
        if i == sig.len() {
            out.push(cur.clone());
            return;
        }
        let range: Vec<i32> = match sig.kind(i) {
            GenKind::Odd => (0..=left.min(1)).collect(),
            GenKind::Even => (0..=left).collect(),
            GenKind::GroupLike => (-left..=left).collect(),
        };
        for e in range {
            cur[i] = e;
            rec(sig, i + 1, left - e.abs(), cur, out);
        }
        cur[i] = 0;
    }
    rec(sig, 0, d as i32, &mut cur, &mut out);
    out.sort_by_key(|e| (e.iter().map(|x| x.abs()).sum::<i32>(), e.clone()));
    out
}

/// Linear extension of `Δ`.
pub fn coproduct_of<H: HopfAlgebra + ?Sized>(h: &H, x: &SuperPoly) -> SuperPoly {
    let target = Signature::power(h.sig(), 2);
    x.map_block(0, &target, |m| h.coproduct(m))
}

/// Multiplication `A ⊗ A -> A`.
pub fn multiply_out(sig: &Sig, p: &SuperPoly) -> SuperPoly {
    let n = sig.len();
    let mut out = SuperPoly::zero(sig);
    for (e, c) in p.terms() {
        if let Some((m, s)) = monomial_product(sig, &e[..n], &e[n..]) {
            out.add_term(m, if s < 0 { -c.clone() } else { c.clone() });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfFailure {
    pub axiom: &'static str,
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub algebra: String,
    pub truncation: usize,
    pub monomials_checked: usize,
    pub failure: Option<HopfFailure>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Coassociativity, both counit laws, both antipode laws and multiplicativity
/// of `Δ` on every basis monomial of degree at most `d`.
pub fn verify_hopf<H: HopfAlgebra + ?Sized>(h: &H, d: usize) -> HopfReport {
    let sig = h.sig().clone();
    let sig2 = Signature::power(&sig, 2);
    let sig3 = Signature::power(&sig, 3);
    let empty = Signature::new(vec![]);
    let basis = h.basis(d);
    let fail = |axiom, m: &[i32], lhs: &SuperPoly, rhs: &SuperPoly| {
        Some(HopfFailure { axiom, monomial: format_monomial(&sig, m), lhs: lhs.format(), rhs: rhs.format() })
    };
    let failure = par::find_first(basis.len(), |idx| {
        let m = &basis[idx];
        let x = SuperPoly::monomial(&sig, m.clone(), Scalar::one());
        let dx = h.coproduct(m);
        let left = dx.map_block(0, &sig3, |a| h.coproduct(a));
        let right = dx.map_block(1, &sig3, |a| h.coproduct(a));
        if left != right {
            return fail("coassociativity", m, &left, &right);
        }
        let eps = |a: &[i32]| SuperPoly::scalar(&empty, h.counit(a));
        let c1 = dx.map_block(0, &sig, eps).with_sig(&sig);
        let c2 = dx.map_block(1, &sig, eps).with_sig(&sig);
        if c1 != x {
            return fail("left counit", m, &c1, &x);
        }
        if c2 != x {
            return fail("right counit", m, &c2, &x);
        }
        let unit = SuperPoly::scalar(&sig, h.counit(m));
        let s1 = multiply_out(&sig, &dx.map_block(0, &sig2, |a| h.antipode(a)));
        if s1 != unit {
            return fail("left antipode", m, &s1, &unit);
        }
        let s2 = multiply_out(&sig, &dx.map_block(1, &sig2, |a| h.antipode(a)));
        if s2 != unit {
            return fail("right antipode", m, &s2, &unit);
        }
        None
    });
    let failure = failure.or_else(|| multiplicativity_failure(h, &basis, d));
    HopfReport { algebra: h.name(), truncation: d, monomials_checked: basis.len(), failure }
}

fn multiplicativity_failure<H: HopfAlgebra + ?Sized>(h: &H, basis: &[Exps], d: usize) -> Option<HopfFailure> {
    let sig = h.sig().clone();
    let deg = |e: &Exps| e.iter().map(|x| x.unsigned_abs() as usize).sum::<usize>();
    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| deg(&basis[i]) + deg(&basis[j]) <= d)
        .collect();
    par::find_first(pairs.len(), |k| {
        let (i, j) = pairs[k];
        let a = SuperPoly::monomial(&sig, basis[i].clone(), Scalar::one());
        let b = SuperPoly::monomial(&sig, basis[j].clone(), Scalar::one());
        let ab = &a * &b;
        let lhs = coproduct_of(h, &ab);
        let rhs = &h.coproduct(&basis[i]) * &h.coproduct(&basis[j]);
        (lhs != rhs).then(|| HopfFailure {
            axiom: "multiplicativity",
            monomial: format!("{} * {}", format_monomial(&sig, &basis[i]), format_monomial(&sig, &basis[j])),
            lhs: lhs.format(),
            rhs: rhs.format(),
        })
    })
}
