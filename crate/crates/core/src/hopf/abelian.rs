//! `K[Z^r] ⊗ K[z_1..z_l] ⊗ Λ(z_{l+1}..z_{l+k})`, the Hopf superalgebra of the
//! abelian supergroup `G_m^r × G_a^l × G_a^{0|k}`: the `t_a` are group-like and
//! the `z_i` primitive.

use num::{One, Zero};

use super::superpoly::{Block, Exps, GenImage, GenKind, Sig, Signature, SuperPoly};
use super::{basis_up_to, HopfAlgebra};
use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

#[derive(Clone, Debug)]
pub struct AbelianHopfAlgebra {
    r: usize,
    l: usize,
    k: usize,
    sig: Sig,
    mutation: Option<(Exps, Exps)>,
}

/// Number of pairs `j < i` of odd positions with `μ_i = 1` and `(λ-μ)_j = 1`:
/// the transpositions needed to bring `z^μ ⊗ z^{λ-μ}` back out of `z^λ`.
pub fn k_sign_pairs(l: usize, lambda: &[i32], mu: &[i32]) -> usize {
    let n = lambda.len();
    let mut count = 0;
    for i in l..n {
        if mu[i] == 0 {
            continue;
        }
        count += (l..i).filter(|&j| lambda[j] - mu[j] == 1).count();
    }
    count
}

fn binomial(n: i32, k: i32) -> Scalar {
    let mut c = Scalar::one();
    for i in 0..k {
        c = c * int((n - i) as i64) / int((i + 1) as i64);
    }
    c
}

impl AbelianHopfAlgebra {
    pub fn new(r: usize, l: usize, k: usize) -> Self {
        let mut gens = Vec::new();
        for a in 0..r {
            let name = if r == 1 { "t".to_string() } else { format!("t{}", a + 1) };
            gens.push((name, GenKind::GroupLike));
        }
        for i in 0..l + k {
            gens.push((format!("z{}", i + 1), if i < l { GenKind::Even } else { GenKind::Odd }));
        }
        AbelianHopfAlgebra { r, l, k, sig: Signature::single(Block::new(gens)), mutation: None }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.r, self.l, self.k)
    }

    pub fn z_offset(&self) -> usize {
        self.r
    }

    pub fn z(&self, i: usize) -> SuperPoly {
        SuperPoly::generator(&self.sig, self.r + i)
    }

    pub fn t(&self, a: usize) -> SuperPoly {
        SuperPoly::generator(&self.sig, a)
    }

    pub fn t_inverse(&self, a: usize) -> SuperPoly {
        let mut e = vec![0; self.sig.len()];
        e[a] = -1;
        SuperPoly::monomial(&self.sig, e, Scalar::one())
    }

    pub fn mutation(&self) -> Option<(&Exps, &Exps)> {
        self.mutation.as_ref().map(|(l, m)| (l, m))
    }

    /// Pairs `(λ, μ)` with `|λ| >= 3`, `|λ| <= d` and `0 < μ < λ`: the terms of `Δ(z^λ)` a mutation may flip.
    pub fn mutation_candidates(&self, d: usize) -> Vec<(Exps, Exps)> {
        let zsig = self.sig.sub(0..1);
        let n = self.l + self.k;
        let mut out = Vec::new();
        for full in basis_up_to(&zsig, d) {
            if full[..self.r].iter().any(|&e| e != 0) {
                continue;
            }
            let lambda: Exps = full[self.r..].to_vec();
            if lambda.iter().sum::<i32>() < 3 {
                continue;
            }
            for mu in sub_exponents(&lambda) {
                let total: i32 = mu.iter().sum();
                if total > 0 && total < lambda.iter().sum::<i32>() {
                    out.push((lambda.clone(), mu));
                }
            }
        }
        debug_assert!(out.iter().all(|(l, _)| l.len() == n));
        out
    }

    /// Copy with the sign of one `k_{λ,μ}` term flipped, chosen from `seed`.
    pub fn mutated(&self, seed: u64, d: usize) -> Result<Self> {
        let candidates = self.mutation_candidates(d);
        if candidates.is_empty() {
            return Err(Error::Precondition(format!(
                "no coproduct term of degree >= 3 within truncation {d} for (r, l, k) = ({}, {}, {})",
                self.r, self.l, self.k
            )));
        }
        let pick = candidates[(seed % candidates.len() as u64) as usize].clone();
        Ok(AbelianHopfAlgebra { mutation: Some(pick), ..self.clone() })
    }

    pub fn format_mutation(&self) -> Option<String> {
        let (lambda, mu) = self.mutation.as_ref()?;
        let mono = |e: &Exps| {
            let mut full = vec![0; self.r];
            full.extend_from_slice(e);
            super::format_monomial(&self.sig, &full)
        };
        let rest: Exps = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        Some(format!("Δ({}) term {}⊗{}", mono(lambda), mono(mu), mono(&rest)))
    }

    /// `Δ` built as the algebra morphism `t ↦ t⊗t`, `z ↦ z⊗1 + 1⊗z`, used as an oracle for the closed formula.
    pub fn coproduct_by_morphism(&self, m: &[i32]) -> SuperPoly {
        let s2 = Signature::power(&self.sig, 2);
        let n = self.sig.len();
        let images: Vec<GenImage> = (0..n)
            .map(|i| {
                let left = SuperPoly::generator(&s2, i);
                let right = SuperPoly::generator(&s2, n + i);
                if i < self.r {
                    let mut inv = vec![0; 2 * n];
                    inv[i] = -1;
                    inv[n + i] = -1;
                    GenImage::invertible(&left * &right, SuperPoly::monomial(&s2, inv, Scalar::one()))
                } else {
                    GenImage::plain(&left + &right)
                }
            })
            .collect();
        SuperPoly::monomial(&self.sig, m.to_vec(), Scalar::one()).substitute(&s2, &images)
    }
}

fn sub_exponents(lambda: &[i32]) -> Vec<Exps> {
    let mut out = vec![Vec::new()];
    for &e in lambda {
        out = out.into_iter().flat_map(|p: Exps| (0..=e).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

impl HopfAlgebra for AbelianHopfAlgebra {
    fn name(&self) -> String {
        let base = format!("O(G_m^{} x G_a^{} x G_a^(0|{}))", self.r, self.l, self.k);
        match self.format_mutation() {
            Some(m) => format!("{base} with flipped {m}"),
            None => base,
        }
    }

    fn sig(&self) -> &Sig {
        &self.sig
    }

    /// `Δ(g z^λ) = Σ_{μ<=λ} (-1)^{k_{λ,μ}} C(λ,μ) g z^μ ⊗ g z^{λ-μ}`.
    fn coproduct(&self, m: &[i32]) -> SuperPoly {
        let s2 = Signature::power(&self.sig, 2);
        let g = &m[..self.r];
        let lambda = &m[self.r..];
        let mut out = SuperPoly::zero(&s2);
        for mu in sub_exponents(lambda) {
            let mut c = Scalar::one();
            for i in 0..self.l {
                c *= binomial(lambda[i], mu[i]);
            }
            let mut sign = k_sign_pairs(self.l, lambda, &mu) % 2 == 1;
            if let Some((fl, fm)) = &self.mutation {
                if fl.as_slice() == lambda && *fm == mu {
                    sign = !sign;
                }
            }
            if sign {
                c = -c;
            }
            let mut e = g.to_vec();
            e.extend_from_slice(&mu);
            e.extend_from_slice(g);
            e.extend(lambda.iter().zip(&mu).map(|(a, b)| a - b));
            out.add_term(e, c);
        }
        out
    }

    fn counit(&self, m: &[i32]) -> Scalar {
        if m[self.r..].iter().all(|&e| e == 0) {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    /// `s(g z^λ) = (-1)^{|λ|} g^{-1} z^λ`.
    fn antipode(&self, m: &[i32]) -> SuperPoly {
        let degree: i32 = m[self.r..].iter().sum();
        let mut e = m.to_vec();
        for x in &mut e[..self.r] {
            *x = -*x;
        }
        let c = if degree % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        SuperPoly::monomial(&self.sig, e, c)
    }
}
