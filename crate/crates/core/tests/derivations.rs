use proptest::prelude::*;
use superlie::derivations::{
    derivation_space, grassmann_derivations, outer_quotient_dim, right_partial, tensor_der, GrassmannDerivation,
};
use superlie::fixtures;
use superlie::grassmann::GrassmannElement;
use superlie::lie::{make_sl2, LieSuperAlgebra};
use superlie::linalg::Vector;
use superlie::scalar::int;
use superlie::{random, Parity};

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn grassmann_derivation_dimensions() {
    for n in 0..=4 {
        let der = grassmann_derivations(n).unwrap();
        assert_eq!(der.dim(), n << n);
        assert!(der.algebra().validate().is_valid());
        for (deg, dim) in der.graded_dims() {
            assert_eq!(dim, n * binomial(n, (deg + 1) as usize), "Der(Λ({n})) degree {deg}");
        }
    }
}

fn rand_element(seed: u64, n: usize, p: Parity) -> GrassmannElement {
    random::grassmann(&mut random::rng(seed), n, p, 0.6)
}

proptest! {
    #[test]
    fn right_partials_obey_leibniz(s in any::<u64>(), t in any::<u64>(), n in 1usize..6, i in 0usize..6, pa in any::<bool>(), pb in any::<bool>()) {
        let i = i % n;
        let par = |b: bool| if b { Parity::Odd } else { Parity::Even };
        let (a, b) = (rand_element(s, n, par(pa)), rand_element(t, n, par(pb)));
        // (ab)∂ = a(b∂) + (-1)^{|b|} (a∂)b
        let lhs = right_partial(&(&a * &b), i);
        let rhs = &(&a * &right_partial(&b, i)) + &(&right_partial(&a, i) * &b).scale(&int(par(pb).koszul(Parity::Odd)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn grassmann_derivation_bracket_is_commutator(s in any::<u64>(), n in 1usize..5, i in any::<usize>(), j in any::<usize>()) {
        let der = grassmann_derivations(n).unwrap();
        let mut rng = random::rng(s);
        let (d, e): (GrassmannDerivation, GrassmannDerivation) = (der.element(i % der.dim()), der.element(j % der.dim()));
        let a = random::grassmann(&mut rng, n, Parity::Even, 0.7);
        let (pd, pe) = (d.parity().unwrap(), e.parity().unwrap());
        let commutator = &e.apply(&d.apply(&a)) - &d.apply(&e.apply(&a)).scale(&int(pd.koszul(pe)));
        prop_assert_eq!(d.bracket(&e).apply(&a), commutator);
    }
}

/// `[x,y]δ = [x, yδ] + (-1)^{|y||δ|} [xδ, y]` on all basis pairs.
fn leibniz_holds(l: &LieSuperAlgebra, parity: Parity, apply: impl Fn(&Vector) -> Vector) -> bool {
    (0..l.dim()).all(|i| {
        (0..l.dim()).all(|j| {
            let (x, y) = (l.basis_vector(i), l.basis_vector(j));
            let lhs = apply(&l.bracket(&x, &y).unwrap());
            let a = l.bracket(&x, &apply(&y)).unwrap();
            let b = l.bracket(&apply(&x), &y).unwrap();
            let s = int(l.parity(j).koszul(parity));
            let rhs: Vector = a.iter().zip(&b).map(|(p, q)| p + &s * q).collect();
            lhs == rhs
        })
    })
}

#[test]
fn solved_derivations_obey_leibniz() {
    for name in fixtures::ALGEBRAS {
        let l = fixtures::algebra(name).unwrap();
        for d in derivation_space(&l).all() {
            assert!(leibniz_holds(&l, d.parity, |v| d.apply(v)), "{name}");
        }
    }
}

#[test]
fn outer_derivations() {
    // sl2 is complete; gl(1|1) has the central shift E11 -> E11 + E22 and the odd grading
    assert_eq!(outer_quotient_dim(&make_sl2()).unwrap(), (0, 0));
    assert_eq!(outer_quotient_dim(&fixtures::algebra("gl11").unwrap()).unwrap(), (2, 0));
    assert_eq!(derivation_space(&fixtures::algebra("nonabelian2").unwrap()).dims(), (2, 0));
}

#[test]
fn tensor_formula_matches_leibniz_solver() {
    for n in 0..=3 {
        let t = tensor_der(&[(make_sl2(), n)]).unwrap();
        let direct = derivation_space(t.u());
        assert_eq!(direct.subspace(t.u()), t.operator_span(), "sl2 ⊗ Λ({n})");
        // Der(sl2 ⊗ Λ(n)) = sl2 ⊗ Λ(n) ⋊ Der Λ(n)
        assert_eq!(t.dim(), 3 * (1 << n) + (n << n));
        assert_eq!(t.formula_mismatch(), None);
    }
}
