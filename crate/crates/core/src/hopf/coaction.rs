//! Coactions `ρ* : K[X] -> K[X] ⊗ K[G]` of a free Hopf superalgebra `G` on an
//! abelian `X`, reconstructed from a matrix `(f_ij)` and the additive maps
//! `f_i : D -> K[G]` on the character group `D = Z^r`.

use num::{One, Zero};

use super::abelian::AbelianHopfAlgebra;
use super::free::FreeHopfSuperalgebra;
use super::superpoly::{monomial_product, Exps, GenImage, GenKind, Sig, Signature, SuperPoly};
use super::{coproduct_of, HopfAlgebra};
use crate::error::{Error, Result};
use crate::par;
use crate::scalar::{int, Parity, Scalar};

#[derive(Clone, Debug)]
pub struct CoactionData {
    pub source: AbelianHopfAlgebra,
    pub target: FreeHopfSuperalgebra,
    /// `matrix[i][j] = f_ij`.
    pub matrix: Vec<Vec<SuperPoly>>,
    /// `characters[a][i] = f_i(t_a)`.
    pub characters: Vec<Vec<SuperPoly>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCheck {
    pub name: &'static str,
    pub checked: usize,
    pub witness: Option<String>,
}

impl NamedCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionReport {
    pub truncation: usize,
    pub checks: Vec<NamedCheck>,
}

impl CoactionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(NamedCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&NamedCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &NamedCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl CoactionData {
    pub fn new(
        source: AbelianHopfAlgebra,
        target: FreeHopfSuperalgebra,
        matrix: Vec<Vec<SuperPoly>>,
        characters: Vec<Vec<SuperPoly>>,
    ) -> Result<Self> {
        let n = source.l() + source.k();
        if matrix.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: matrix.len() });
        }
        if characters.len() != source.r() {
            return Err(Error::DimensionMismatch { expected: source.r(), found: characters.len() });
        }
        let z_parity = |i: usize| Parity::from_bit(usize::from(i >= source.l()));
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            for (j, f) in row.iter().enumerate() {
                check_element(f, target.sig(), z_parity(i) + z_parity(j), &format!("f_{}{}", i + 1, j + 1))?;
            }
        }
        for (a, row) in characters.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            for (i, f) in row.iter().enumerate() {
                check_element(f, target.sig(), z_parity(i), &format!("f_{}(t{})", i + 1, a + 1))?;
            }
        }
        Ok(CoactionData { source, target, matrix, characters })
    }

    /// `f_ij = δ_ij`, `f_i = 0`.
    pub fn trivial(source: AbelianHopfAlgebra, target: FreeHopfSuperalgebra) -> Self {
        let n = source.l() + source.k();
        let g = target.sig().clone();
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { SuperPoly::one(&g) } else { SuperPoly::zero(&g) }).collect())
            .collect();
        let characters = (0..source.r()).map(|_| vec![SuperPoly::zero(&g); n]).collect();
        CoactionData { source, target, matrix, characters }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn build(&self) -> Result<Coaction> {
        Coaction::new(self.clone())
    }

    /// All checks: comodule data, the compatibility condition, comodule
    /// coassociativity and counit on generators, multiplicativity of the
    /// closed form, coassociativity on the whole truncated basis, round trip
    /// of the `f_i`, and stability of the primitives.
    pub fn verify(&self, d: usize) -> Result<CoactionReport> {
        let mut checks = vec![self.check_matrix_coproduct(), self.check_matrix_counit(), self.check_nilpotent()];
        checks.push(self.check_compatibility());
        let rho = match self.build() {
            Ok(rho) => rho,
            Err(Error::Precondition(msg)) => {
                checks.push(NamedCheck { name: "coaction", checked: 0, witness: Some(msg) });
                return Ok(CoactionReport { truncation: d, checks });
            }
            Err(e) => return Err(e),
        };
        checks.push(rho.check_generator_coassociativity());
        checks.push(rho.check_counit());
        checks.push(rho.check_morphism(d));
        checks.push(rho.check_basis_coassociativity(d));
        checks.push(rho.check_round_trip());
        checks.push(rho.check_primitives());
        Ok(CoactionReport { truncation: d, checks })
    }

    fn gg(&self) -> Sig {
        Signature::power(self.target.sig(), 2)
    }

    pub fn check_matrix_coproduct(&self) -> NamedCheck {
        let n = self.dim();
        let gg = self.gg();
        let ng = self.target.sig().len();
        let witness = par::find_first(n * n, |idx| {
            let (i, j) = (idx / n, idx % n);
            let lhs = coproduct_of(&self.target, &self.matrix[i][j]);
            let mut rhs = SuperPoly::zero(&gg);
            for t in 0..n {
                rhs = &rhs + &(&self.matrix[i][t].embed(&gg, 0) * &self.matrix[t][j].embed(&gg, ng));
            }
            (lhs != rhs).then(|| format!("Δ(f_{}{}) = {} but Σ f_{}t⊗f_t{} = {}", i + 1, j + 1, lhs, i + 1, j + 1, rhs))
        });
        NamedCheck { name: "matrix coproduct", checked: n * n, witness }
    }

    pub fn check_matrix_counit(&self) -> NamedCheck {
        let n = self.dim();
        let witness = (0..n * n).find_map(|idx| {
            let (i, j) = (idx / n, idx % n);
            let e = self.target.counit_of(&self.matrix[i][j]);
            let expected = if i == j { Scalar::one() } else { Scalar::zero() };
            (e != expected).then(|| format!("ε(f_{}{}) = {}", i + 1, j + 1, e))
        });
        NamedCheck { name: "matrix counit", checked: n * n, witness }
    }

    pub fn check_nilpotent(&self) -> NamedCheck {
        let mut checked = 0;
        let mut witness = None;
        for (a, row) in self.characters.iter().enumerate() {
            for (i, f) in row.iter().enumerate() {
                checked += 1;
                if witness.is_none() && !f.has_odd_factor_in_every_term() {
                    witness = Some(format!("f_{}(t{}) = {} is not nilpotent", i + 1, a + 1, f));
                }
            }
        }
        NamedCheck { name: "nilpotent characters", checked, witness }
    }

    /// `Δ_G(f_i(g)) = f_i(g)⊗1 + Σ_j f_ij ⊗ f_j(g)` for each torus generator `g`.
    pub fn check_compatibility(&self) -> NamedCheck {
        let n = self.dim();
        let gg = self.gg();
        let ng = self.target.sig().len();
        let pairs: Vec<(usize, usize)> =
            (0..self.characters.len()).flat_map(|a| (0..n).map(move |i| (a, i))).collect();
        let witness = pairs.iter().find_map(|&(a, i)| {
            let f = &self.characters[a];
            let lhs = coproduct_of(&self.target, &f[i]);
            let mut rhs = f[i].embed(&gg, 0);
            for (j, fj) in f.iter().enumerate() {
                rhs = &rhs + &(&self.matrix[i][j].embed(&gg, 0) * &fj.embed(&gg, ng));
            }
            (lhs != rhs).then(|| {
                format!(
                    "i={}, g={}: Δ(f_{}(g)) = {} but f_{}(g)⊗1 + Σ f_{}j⊗f_j(g) = {}",
                    i + 1,
                    self.source.sig().name(a),
                    i + 1,
                    lhs,
                    i + 1,
                    i + 1,
                    rhs
                )
            })
        });
        NamedCheck { name: "compatibility", checked: pairs.len(), witness }
    }
}

fn check_element(f: &SuperPoly, sig: &Sig, parity: Parity, what: &str) -> Result<()> {
    if f.sig().as_ref() != sig.as_ref() {
        return Err(Error::Precondition(format!("{what} does not live in the target algebra")));
    }
    match f.parity() {
        Some(p) if p != parity && !f.is_zero() => {
            Err(Error::Parity(format!("{what} = {f} should be {}", if parity.is_odd() { "odd" } else { "even" })))
        }
        None => Err(Error::Parity(format!("{what} = {f} is not homogeneous"))),
        _ => Ok(()),
    }
}

/// The evaluator `ρ*`.
#[derive(Clone, Debug)]
pub struct Coaction {
    data: CoactionData,
    xg: Sig,
    xgg: Sig,
    images: Vec<GenImage>,
    /// `z(t_a) = Σ_i z_i ⊗ f_i(t_a)`.
    z_of_t: Vec<SuperPoly>,
}

impl Coaction {
    pub fn new(data: CoactionData) -> Result<Self> {
        let x = data.source.sig().clone();
        let g = data.target.sig().clone();
        let xg = Signature::tensor(&x, &g);
        let xgg = Signature::tensor(&xg, &g);
        let r = data.source.r();
        let n = data.dim();
        let nx = x.len();
        for (a, row) in data.characters.iter().enumerate() {
            for (i, f) in row.iter().enumerate() {
                if !f.has_odd_factor_in_every_term() {
                    return Err(Error::Precondition(format!("f_{}(t{}) = {} is not nilpotent", i + 1, a + 1, f)));
                }
            }
        }
        let z = |i: usize| SuperPoly::generator(&xg, r + i);
        let lift = |f: &SuperPoly| f.embed(&xg, nx);
        let z_of_t: Vec<SuperPoly> = data
            .characters
            .iter()
            .map(|row| {
                let mut acc = SuperPoly::zero(&xg);
                for (i, f) in row.iter().enumerate() {
                    acc = &acc + &(&z(i) * &lift(f));
                }
                acc
            })
            .collect();
        let mut images = Vec::with_capacity(nx);
        for (a, za) in z_of_t.iter().enumerate() {
            let mut inv = vec![0; xg.len()];
            inv[a] = -1;
            let t_inv = SuperPoly::monomial(&xg, inv, Scalar::one());
            let t = SuperPoly::generator(&xg, a);
            images.push(GenImage::invertible(&t * &exp(za)?, &t_inv * &exp(&-za)?));
        }
        for i in 0..n {
            let mut acc = SuperPoly::zero(&xg);
            for j in 0..n {
                acc = &acc + &(&z(j) * &lift(&data.matrix[j][i]));
            }
            images.push(GenImage::plain(acc));
        }
        Ok(Coaction { data, xg, xgg, images, z_of_t })
    }

    pub fn data(&self) -> &CoactionData {
        &self.data
    }

    /// Signature of `K[X] ⊗ K[G]`.
    pub fn codomain(&self) -> &Sig {
        &self.xg
    }

    pub fn apply(&self, x: &SuperPoly) -> SuperPoly {
        x.substitute(&self.xg, &self.images)
    }

    pub fn apply_monomial(&self, m: &[i32]) -> SuperPoly {
        self.apply(&SuperPoly::monomial(self.data.source.sig(), m.to_vec(), Scalar::one()))
    }

    /// `ρ*(g z^λ) = (g⊗1)·exp(z(g))·Π ρ*(z_i)^{λ_i}`, with `z(t^n) = n z(t)`.
    /// The exponential is the divided-power sum `Σ_λ z^λ ⊗ f^{(λ)}(g)` with the
    /// Koszul signs of the products `(z_i ⊗ f_i(g))^{λ_i}`.
    pub fn closed_form(&self, m: &[i32]) -> Result<SuperPoly> {
        let r = self.data.source.r();
        let mut g = vec![0; self.xg.len()];
        g[..r].copy_from_slice(&m[..r]);
        let mut acc = SuperPoly::monomial(&self.xg, g, Scalar::one());
        let mut zg = SuperPoly::zero(&self.xg);
        for a in 0..r {
            zg = &zg + &self.z_of_t[a].scale(&int(m[a] as i64));
        }
        acc = &acc * &exp(&zg)?;
        for (i, &e) in m[r..].iter().enumerate() {
            acc = &acc * &self.images[r + i].image.pow(e as u32);
        }
        Ok(acc)
    }

    fn rho_tensor_id(&self, p: &SuperPoly) -> SuperPoly {
        p.map_block(0, &self.xgg, |m| self.apply_monomial(m))
    }

    fn id_tensor_delta(&self, p: &SuperPoly) -> SuperPoly {
        p.map_block(1, &self.xgg, |m| self.data.target.coproduct(m))
    }

    fn generators(&self) -> Vec<(String, Exps)> {
        let x = self.data.source.sig();
        let r = self.data.source.r();
        let mut out = Vec::new();
        for i in 0..x.len() {
            let mut e = vec![0; x.len()];
            e[i] = 1;
            out.push((x.name(i).to_string(), e.clone()));
            if i < r {
                e[i] = -1;
                out.push((format!("{}^-1", x.name(i)), e));
            }
        }
        out
    }

    fn coassociativity_witness(&self, label: &str, m: &[i32]) -> Option<String> {
        let y = self.apply_monomial(m);
        let lhs = self.rho_tensor_id(&y);
        let rhs = self.id_tensor_delta(&y);
        (lhs != rhs).then(|| format!("{label}: (ρ*⊗id)ρ* = {lhs} but (id⊗Δ)ρ* = {rhs}"))
    }

    pub fn check_generator_coassociativity(&self) -> NamedCheck {
        let gens = self.generators();
        let witness = gens.iter().find_map(|(name, e)| self.coassociativity_witness(name, e));
        NamedCheck { name: "comodule coassociativity", checked: gens.len(), witness }
    }

    pub fn check_counit(&self) -> NamedCheck {
        let gens = self.generators();
        let x = self.data.source.sig().clone();
        let empty = Signature::new(vec![]);
        let witness = gens.iter().find_map(|(name, e)| {
            let y = self.apply_monomial(e);
            let back = y.map_block(1, &x, |m| SuperPoly::scalar(&empty, self.data.target.counit(m)));
            let expected = SuperPoly::monomial(&x, e.clone(), Scalar::one());
            (back != expected).then(|| format!("{name}: (id⊗ε)ρ* = {back}"))
        });
        NamedCheck { name: "counit", checked: gens.len(), witness }
    }

    /// `ρ*(ab) = ρ*(a)ρ*(b)` for the closed form on basis pairs of total degree `<= d`.
    pub fn check_morphism(&self, d: usize) -> NamedCheck {
        let x = self.data.source.sig().clone();
        let basis = self.data.source.basis(d);
        let deg = |e: &Exps| e.iter().map(|v| v.unsigned_abs() as usize).sum::<usize>();
        let pairs: Vec<(usize, usize)> = (0..basis.len())
            .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| deg(&basis[i]) + deg(&basis[j]) <= d)
            .collect();
        let witness = par::find_first(pairs.len(), |k| {
            let (a, b) = (&basis[pairs[k].0], &basis[pairs[k].1]);
            let label = format!("{} * {}", super::format_monomial(&x, a), super::format_monomial(&x, b));
            let (ra, rb) = match (self.closed_form(a), self.closed_form(b)) {
                (Ok(ra), Ok(rb)) => (ra, rb),
                (Err(e), _) | (_, Err(e)) => return Some(format!("{label}: {e}")),
            };
            let rhs = &ra * &rb;
            let lhs = match monomial_product(&x, a, b) {
                None => SuperPoly::zero(&self.xg),
                Some((e, s)) => match self.closed_form(&e) {
                    Ok(p) => p.scale(&int(s)),
                    Err(err) => return Some(format!("{label}: {err}")),
                },
            };
            (lhs != rhs).then(|| format!("{label}: ρ*(ab) = {lhs} but ρ*(a)ρ*(b) = {rhs}"))
        });
        NamedCheck { name: "morphism", checked: pairs.len(), witness }
    }

    pub fn check_basis_coassociativity(&self, d: usize) -> NamedCheck {
        let x = self.data.source.sig().clone();
        let basis = self.data.source.basis(d);
        let witness = par::find_first(basis.len(), |k| {
            self.coassociativity_witness(&super::format_monomial(&x, &basis[k]), &basis[k])
        });
        NamedCheck { name: "basis coassociativity", checked: basis.len(), witness }
    }

    /// Reads `f_i(t_a)` back as the coefficient of `t_a z_i` in `ρ*(t_a)`.
    pub fn check_round_trip(&self) -> NamedCheck {
        let r = self.data.source.r();
        let n = self.data.dim();
        let mut witness = None;
        for a in 0..r {
            let mut e = vec![0; self.data.source.sig().len()];
            e[a] = 1;
            let y = self.apply_monomial(&e);
            for i in 0..n {
                let mut key = e.clone();
                key[r + i] = 1;
                let back = self.coefficient_of(&y, &key);
                if witness.is_none() && back != self.data.characters[a][i] {
                    witness = Some(format!("f_{}(t{}) read back as {back}", i + 1, a + 1));
                }
            }
        }
        NamedCheck { name: "round trip", checked: r * n, witness }
    }

    /// Primitive elements `z_i` are mapped into `span(z_j) ⊗ K[G]`.
    pub fn check_primitives(&self) -> NamedCheck {
        let r = self.data.source.r();
        let nx = self.data.source.sig().len();
        let n = self.data.dim();
        let witness = (0..n).find_map(|i| {
            let y = &self.images[r + i].image;
            let bad = y.terms().any(|(e, _)| {
                e[..r].iter().any(|&v| v != 0) || e[r..nx].iter().map(|&v| v.abs()).sum::<i32>() != 1
            });
            bad.then(|| format!("ρ*(z{}) = {}", i + 1, y))
        });
        NamedCheck { name: "primitive stability", checked: n, witness }
    }

    /// The `K[G]` coefficient of the `K[X]` monomial `key` in `y`.
    pub fn coefficient_of(&self, y: &SuperPoly, key: &[i32]) -> SuperPoly {
        let nx = key.len();
        let g = self.data.target.sig();
        let mut out = SuperPoly::zero(g);
        for (e, c) in y.terms() {
            if &e[..nx] == key {
                out.add_term(e[nx..].to_vec(), c.clone());
            }
        }
        out
    }

    /// Terms of `y` grouped by their `K[X]` monomial.
    pub fn split_by_source(&self, y: &SuperPoly) -> Vec<(Exps, SuperPoly)> {
        let nx = self.data.source.sig().len();
        let mut keys: Vec<Exps> = y.terms().map(|(e, _)| e[..nx].to_vec()).collect();
        keys.dedup();
        keys.sort();
        keys.dedup();
        keys.into_iter().map(|k| (k.clone(), self.coefficient_of(y, &k))).collect()
    }
}

fn exp(x: &SuperPoly) -> Result<SuperPoly> {
    let odd = (0..x.sig().len()).filter(|&i| x.sig().kind(i) == GenKind::Odd).count();
    x.exp_nilpotent(odd + 2).ok_or_else(|| Error::Precondition(format!("{x} is not nilpotent")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_coaction() {
        let x = AbelianHopfAlgebra::new(1, 1, 1);
        let g = FreeHopfSuperalgebra::odd_primitive("Λ(u)", &["u"]);
        let data = CoactionData::trivial(x.clone(), g);
        let rho = data.build().unwrap();
        for m in x.basis(3) {
            let y = rho.apply_monomial(&m);
            let expected = SuperPoly::monomial(x.sig(), m.clone(), Scalar::one()).embed(rho.codomain(), 0);
            assert_eq!(y, expected);
        }
        assert!(data.verify(3).unwrap().passed());
    }

    #[test]
    fn non_nilpotent_character_is_rejected() {
        let x = AbelianHopfAlgebra::new(1, 1, 0);
        let g = FreeHopfSuperalgebra::new("G_a", vec![("s".into(), super::super::FreeGen::EvenPrimitive)]);
        let mut data = CoactionData::trivial(x, g.clone());
        data.characters[0][0] = g.generator(0);
        assert!(matches!(data.build(), Err(Error::Precondition(_))));
        assert!(!data.verify(2).unwrap().passed());
    }
}
