//! `G = (G_a^-)^2` acting on `X = G_m × G_a × (G_a^-)^2` through
//! `f_1 = uv, f_2 = u, f_3 = v`. The semidirect product has trivial unipotent
//! radical although `X_u` does not: no proper graded `V ⊂ span(z_1, z_2, z_3)`
//! gives an invariant ideal, and no line of `span(u, v)` acts trivially.

use num::{One, Zero};

use super::abelian::AbelianHopfAlgebra;
use super::coaction::{Coaction, CoactionData, CoactionReport};
use super::free::FreeHopfSuperalgebra;
use super::superpoly::{Exps, GenImage, GenKind, SuperPoly};
use super::{coproduct_of, HopfAlgebra};
use crate::error::Result;
use crate::linalg::{unit_vector, Echelon, Vector};
use crate::scalar::{format_scalar, int, Scalar};

pub fn section8_data() -> CoactionData {
    section8_with_f12(-Scalar::one())
}

/// The same data with `f_12 = c·v`; only `c = -1` is compatible.
pub fn section8_with_f12(c: Scalar) -> CoactionData {
    let x = AbelianHopfAlgebra::new(1, 1, 2);
    let g = FreeHopfSuperalgebra::odd_primitive("Λ(u,v)", &["u", "v"]);
    let gs = g.sig().clone();
    let u = g.generator(0);
    let v = g.generator(1);
    let one = SuperPoly::one(&gs);
    let zero = SuperPoly::zero(&gs);
    let matrix = vec![
        vec![one.clone(), v.scale(&c), u.clone()],
        vec![zero.clone(), one.clone(), zero.clone()],
        vec![zero.clone(), zero, one],
    ];
    let characters = vec![vec![&u * &v, u, v]];
    CoactionData::new(x, g, matrix, characters).expect("well-formed data")
}

/// One graded subspace shape `V = V_0 ⊕ V_1` with `V_0 ⊆ Kz_1`, `V_1 ⊆ span(z_2, z_3)`.
#[derive(Clone, Debug)]
pub struct SubspaceFamily {
    pub description: String,
    pub even_dim: usize,
    pub odd_dim: usize,
    /// Lines `a z_2 + b z_3` are covered for every `(a, b) ≠ (0, 0)`.
    pub parameterized: bool,
    /// The rank argument: the residue's linear parts need `dim V_0 >= 1` and `dim V_1 >= 2`.
    pub excluded_by_rank: bool,
    /// `(V, residue of ρ*(t-1) modulo I_N ⊗ K[G])` for exact representatives.
    pub representatives: Vec<(String, String)>,
}

#[derive(Clone, Debug)]
pub struct ResidueArgument {
    /// `ρ*(t - 1)` modulo `t - 1`.
    pub residue: String,
    /// `(K[G] monomial, its K[X] coefficient)` in the residue.
    pub coefficients: Vec<(String, String)>,
    /// Rank of `{uv, u, v}` in `Λ(u, v)`.
    pub independence_rank: usize,
    /// Rank of the linear parts of the coefficients in `span(z_1, z_2, z_3)`.
    pub linear_rank: usize,
    pub families: Vec<SubspaceFamily>,
    /// Residue modulo the whole of `W`, which must vanish.
    pub full_space_residue: String,
}

impl ResidueArgument {
    pub fn holds(&self) -> bool {
        self.independence_rank == 3
            && self.linear_rank == 3
            && self.full_space_residue == "0"
            && self.families.iter().all(|f| f.excluded_by_rank && f.representatives.iter().all(|(_, r)| r != "0"))
    }
}

#[derive(Clone, Debug)]
pub struct LineCheck {
    pub line: String,
    /// Coefficients of `ρ*(t) - t⊗1` outside the ideal `(ℓ)`.
    pub outside: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct HopfIdealExclusion {
    /// `ρ*(t) - t⊗1`.
    pub difference: String,
    pub coefficients: Vec<(String, String)>,
    /// Rank of the linear parts of the coefficients in `span(u, v)`; above 1 rules out every line.
    pub linear_rank: usize,
    pub lines: Vec<LineCheck>,
}

impl HopfIdealExclusion {
    pub fn holds(&self) -> bool {
        self.linear_rank == 2 && self.lines.iter().all(|l| !l.outside.is_empty())
    }
}

#[derive(Clone, Debug)]
pub struct Section8 {
    pub data: CoactionData,
    pub rho_t: String,
    pub delta_f1: String,
    pub verification: CoactionReport,
    pub lemma: ResidueArgument,
    pub corollary: HopfIdealExclusion,
}

impl Section8 {
    pub fn holds(&self) -> bool {
        self.verification.passed() && self.lemma.holds() && self.corollary.holds()
    }
}

pub fn section8_fixture(d: usize) -> Result<Section8> {
    let data = section8_data();
    let rho = data.build()?;
    let verification = data.verify(d)?;
    let t = vec![1, 0, 0, 0];
    let rho_t = rho.apply_monomial(&t).format();
    let delta_f1 = coproduct_of(&data.target, &data.characters[0][0]).format();
    let lemma = residue_argument(&rho);
    let corollary = hopf_ideal_exclusion(&rho);
    Ok(Section8 { data, rho_t, delta_f1, verification, lemma, corollary })
}

/// Linear substitution sending each generator at `positions` to its residue modulo `span(v)`.
/// `v` must be spanned by homogeneous vectors.
fn reduce_modulo(p: &SuperPoly, positions: &[usize], v: &[Vector]) -> SuperPoly {
    let sig = p.sig().clone();
    let ech = Echelon::from_vectors(positions.len(), v);
    let images: Vec<GenImage> = (0..sig.len())
        .map(|i| {
            let g = SuperPoly::generator(&sig, i);
            match positions.iter().position(|&q| q == i) {
                Some(s) => {
                    let r = ech.reduce(&unit_vector(positions.len(), s));
                    let mut img = SuperPoly::zero(&sig);
                    for (c, x) in r.iter().enumerate() {
                        if !x.is_zero() {
                            img = &img + &SuperPoly::generator(&sig, positions[c]).scale(x);
                        }
                    }
                    GenImage::plain(img)
                }
                None if sig.kind(i) == GenKind::GroupLike => {
                    let mut e = vec![0; sig.len()];
                    e[i] = -1;
                    GenImage::invertible(g, SuperPoly::monomial(&sig, e, Scalar::one()))
                }
                None => GenImage::plain(g),
            }
        })
        .collect();
    p.substitute(&sig, &images)
}

fn linear_part(p: &SuperPoly, positions: &[usize]) -> Vector {
    let mut out = vec![Scalar::zero(); positions.len()];
    for (e, c) in p.terms() {
        let total: i32 = e.iter().map(|x| x.abs()).sum();
        if total == 1 {
            if let Some(s) = positions.iter().position(|&q| e[q] == 1) {
                out[s] = c.clone();
            }
        }
    }
    out
}

fn describe_span(names: &[&str], v: &[Vector]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = v
        .iter()
        .map(|vec| {
            let mut s = String::new();
            for (c, n) in vec.iter().zip(names) {
                if c.is_zero() {
                    continue;
                }
                let neg = c < &Scalar::zero();
                let abs = if neg { -c.clone() } else { c.clone() };
                if s.is_empty() {
                    if neg {
                        s.push('-');
                    }
                } else {
                    s.push_str(if neg { " - " } else { " + " });
                }
                if !abs.is_one() {
                    s.push_str(&format_scalar(&abs));
                }
                s.push_str(n);
            }
            s
        })
        .collect();
    format!("span{{{}}}", parts.join(", "))
}

fn line_representatives() -> Vec<(i64, i64)> {
    vec![(1, 0), (0, 1), (1, 1), (2, -3)]
}

pub fn residue_argument(rho: &Coaction) -> ResidueArgument {
    let data = rho.data();
    let xg = rho.codomain().clone();
    let nx = data.source.sig().len();
    let t_minus_one = {
        let mut p = SuperPoly::monomial(data.source.sig(), vec![1, 0, 0, 0], Scalar::one());
        p.add_term(vec![0; nx], -Scalar::one());
        p
    };
    // Modulo t - 1: drop the torus exponent.
    let image = rho.apply(&t_minus_one);
    let mut residue = SuperPoly::zero(&xg);
    for (e, c) in image.terms() {
        let mut e = e.clone();
        e[0] = 0;
        residue.add_term(e, c.clone());
    }
    let z_positions = [1usize, 2, 3];
    // Regroup by the K[G] monomial.
    let mut by_g: Vec<(Exps, SuperPoly)> = Vec::new();
    for (e, c) in residue.terms() {
        let key = e[nx..].to_vec();
        let mut x = vec![0; nx];
        x.copy_from_slice(&e[..nx]);
        let term = SuperPoly::monomial(data.source.sig(), x, c.clone());
        match by_g.iter_mut().find(|(k, _)| *k == key) {
            Some((_, p)) => *p = &*p + &term,
            None => by_g.push((key, term)),
        }
    }
    by_g.sort_by(|a, b| b.0.iter().sum::<i32>().cmp(&a.0.iter().sum::<i32>()).then_with(|| b.0.cmp(&a.0)));
    let gsig = data.target.sig();
    let coefficients = by_g
        .iter()
        .map(|(k, p)| (super::format_monomial(gsig, k), p.format()))
        .collect();
    let mut linear = Echelon::new(3);
    for (_, p) in &by_g {
        linear.insert(&linear_part(p, &z_positions));
    }
    let mut independence = Echelon::new(4);
    for k in [[1, 1], [1, 0], [0, 1]] {
        let idx = (k[0] << 1 | k[1]) as usize;
        independence.insert(&unit_vector(4, idx));
    }

    let positions: Vec<usize> = z_positions.to_vec();
    let names = ["z1", "z2", "z3"];
    let residue_mod = |v: &[Vector]| reduce_modulo(&residue, &positions, v).format();
    let even = || vec![int(1), int(0), int(0)];
    let odd = |a: i64, b: i64| vec![int(0), int(a), int(b)];
    let mut families = Vec::new();
    for (even_dim, odd_dim) in [(0usize, 0usize), (0, 1), (0, 2), (1, 0), (1, 1)] {
        let parameterized = odd_dim == 1;
        let odd_choices: Vec<Vec<Vector>> = match odd_dim {
            0 => vec![vec![]],
            1 => line_representatives().into_iter().map(|(a, b)| vec![odd(a, b)]).collect(),
            _ => vec![vec![odd(1, 0), odd(0, 1)]],
        };
        let representatives = odd_choices
            .into_iter()
            .map(|odd_part| {
                let mut v = if even_dim == 1 { vec![even()] } else { vec![] };
                v.extend(odd_part);
                (describe_span(&names, &v), residue_mod(&v))
            })
            .collect();
        let v0 = if even_dim == 1 { "Kz1" } else { "0" };
        let v1 = match odd_dim {
            0 => "0",
            1 => "K(a z2 + b z3)",
            _ => "span{z2, z3}",
        };
        families.push(SubspaceFamily {
            description: format!("V0 = {v0}, V1 = {v1}"),
            even_dim,
            odd_dim,
            parameterized,
            excluded_by_rank: even_dim < 1 || odd_dim < 2,
            representatives,
        });
    }
    let full = vec![even(), odd(1, 0), odd(0, 1)];
    ResidueArgument {
        residue: residue.format(),
        coefficients,
        independence_rank: independence.rank(),
        linear_rank: linear.rank(),
        families,
        full_space_residue: residue_mod(&full),
    }
}

pub fn hopf_ideal_exclusion(rho: &Coaction) -> HopfIdealExclusion {
    let data = rho.data();
    let t = vec![1, 0, 0, 0];
    let mut diff = rho.apply_monomial(&t);
    let mut t_one = t.clone();
    t_one.extend([0, 0]);
    diff.add_term(t_one, -Scalar::one());
    let parts = rho.split_by_source(&diff);
    let xs = data.source.sig();
    let coefficients: Vec<(String, String)> =
        parts.iter().map(|(k, p)| (super::format_monomial(xs, k), p.format())).collect();
    let positions = [0usize, 1];
    let mut linear = Echelon::new(2);
    for (_, p) in &parts {
        linear.insert(&linear_part(p, &positions));
    }
    let lines = [(1, 0), (0, 1), (1, 1)]
        .into_iter()
        .map(|(a, b)| {
            let l = vec![int(a), int(b)];
            let outside = parts
                .iter()
                .filter(|(_, p)| !reduce_modulo(p, &positions, std::slice::from_ref(&l)).is_zero())
                .map(|(_, p)| p.format())
                .collect();
            LineCheck { line: describe_span(&["u", "v"], &[l]), outside }
        })
        .collect();
    HopfIdealExclusion { difference: diff.format(), coefficients, linear_rank: linear.rank(), lines }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_f1_matches_first_row() {
        let s = section8_fixture(2).unwrap();
        assert_eq!(s.delta_f1, "uv⊗1 + u⊗v - v⊗u + 1⊗uv");
    }

    #[test]
    fn rho_of_t() {
        let s = section8_fixture(2).unwrap();
        assert_eq!(s.rho_t, "t⊗1 + tz2⊗u + tz3⊗v + tz1⊗uv - tz2z3⊗uv");
    }

    #[test]
    fn residue_for_odd_plane_keeps_z1() {
        let s = section8_fixture(2).unwrap();
        let fam = s.lemma.families.iter().find(|f| f.even_dim == 0 && f.odd_dim == 2).unwrap();
        assert_eq!(fam.representatives[0].0, "span{z2, z3}");
        assert_eq!(fam.representatives[0].1, "z1⊗uv");
    }

    #[test]
    fn mutated_f12_breaks_compatibility() {
        let data = section8_with_f12(Scalar::one());
        let check = data.check_compatibility();
        assert!(check.witness.unwrap().starts_with("i=1"));
    }

    #[test]
    fn comodule_axioms_at_degree_four() {
        let report = section8_data().verify(4).unwrap();
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn t_squared_coefficient() {
        let rho = section8_data().build().unwrap();
        let y = rho.apply_monomial(&[2, 0, 0, 0]);
        let c = rho.coefficient_of(&y, &[2, 0, 1, 0]);
        assert_eq!(c.format(), "2u");
    }

    #[test]
    fn unsigned_divided_powers_are_not_coassociative() {
        // t ↦ Σ t z^λ ⊗ f^(λ) without Koszul signs: the z2z3 term comes out as +tz2z3⊗uv.
        let data = section8_data();
        let rho = data.build().unwrap();
        let xg = rho.codomain().clone();
        let mut naive = rho.apply_monomial(&[1, 0, 0, 0]);
        naive.add_term(vec![1, 0, 1, 1, 1, 1], int(2));
        let xgg = super::super::Signature::tensor(&xg, data.target.sig());
        let mut images = vec![GenImage::plain(naive.clone())];
        for i in 0..3 {
            let mut e = vec![0; 4];
            e[1 + i] = 1;
            images.push(GenImage::plain(rho.apply_monomial(&e)));
        }
        let x = data.source.sig().clone();
        let lhs = naive.map_block(0, &xgg, |m| SuperPoly::monomial(&x, m.to_vec(), Scalar::one()).substitute(&xg, &images));
        let rhs = naive.map_block(1, &xgg, |m| data.target.coproduct(m));
        assert_ne!(lhs, rhs);
    }
}
