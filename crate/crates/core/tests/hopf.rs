use proptest::prelude::*;
use superlie::format::{parse_coaction, parse_superpoly};
use superlie::hopf::{
    basis_up_to, coproduct_of, k_sign_pairs, section8_fixture, section8_with_f12, verify_hopf, AbelianHopfAlgebra,
    FreeGen, FreeHopfSuperalgebra, HopfAlgebra,
};
use superlie::scalar::int;
use superlie::{fixtures, Error};

#[test]
fn generators_have_the_expected_coproducts() {
    let h = AbelianHopfAlgebra::new(1, 1, 2);
    assert_eq!(coproduct_of(&h, &h.t(0)).format(), "t⊗t");
    assert_eq!(coproduct_of(&h, &h.z(0)).format(), "z1⊗1 + 1⊗z1");
    assert_eq!(coproduct_of(&h, &h.z(2)).format(), "z3⊗1 + 1⊗z3");
    let x = parse_superpoly("z2z3", &h).unwrap();
    assert_eq!(coproduct_of(&h, &x).format(), "z2z3⊗1 + z2⊗z3 - z3⊗z2 + 1⊗z2z3");
}

#[test]
fn sign_pair_count() {
    // odd coordinates only: λ = (1,1,1), μ = (0,1,0) leaves z1 left of z2
    assert_eq!(k_sign_pairs(0, &[1, 1, 1], &[0, 1, 0]), 1);
    assert_eq!(k_sign_pairs(0, &[1, 1, 1], &[0, 0, 1]), 2);
    assert_eq!(k_sign_pairs(0, &[1, 1, 1], &[1, 0, 0]), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn closed_formula_matches_morphism(r in 0usize..2, l in 0usize..3, k in 0usize..4) {
        let h = AbelianHopfAlgebra::new(r, l, k);
        for m in basis_up_to(h.sig(), 3) {
            prop_assert_eq!(h.coproduct(&m), h.coproduct_by_morphism(&m));
        }
    }

    #[test]
    fn mutations_are_caught(seed in any::<u64>()) {
        let h = AbelianHopfAlgebra::new(1, 1, 3).mutated(seed, 4).unwrap();
        let failure = verify_hopf(&h, 4).failure;
        prop_assert!(failure.is_some(), "{}", h.name());
        let failure = failure.unwrap();
        prop_assert!(failure.lhs != failure.rhs);
    }
}

#[test]
fn axioms_hold_up_to_degree_four() {
    for (r, l, k) in [(0, 0, 3), (1, 0, 0), (1, 2, 1), (0, 2, 2)] {
        let report = verify_hopf(&AbelianHopfAlgebra::new(r, l, k), 4);
        assert!(report.passed(), "({r},{l},{k}): {:?}", report.failure);
        assert!(report.monomials_checked > 0);
    }
}

#[test]
fn no_mutation_without_three_odd_or_even_factors() {
    assert!(matches!(AbelianHopfAlgebra::new(1, 0, 1).mutated(0, 4), Err(Error::Precondition(_))));
}

#[test]
fn free_hopf_superalgebra() {
    let h = FreeHopfSuperalgebra::new(
        "mixed",
        vec![("a".into(), FreeGen::EvenPrimitive), ("u".into(), FreeGen::OddPrimitive), ("g".into(), FreeGen::GroupLike)],
    );
    assert!(verify_hopf(&h, 3).passed());
    let lambda = FreeHopfSuperalgebra::odd_primitive("Λ", &["u", "v"]);
    let uv = parse_superpoly("uv", &lambda).unwrap();
    assert_eq!(coproduct_of(&lambda, &uv).format(), "uv⊗1 + u⊗v - v⊗u + 1⊗uv");
}

#[test]
fn bundled_coaction_file() {
    let data = parse_coaction(fixtures::file("sec8.coaction").unwrap()).unwrap();
    let report = data.verify(4).unwrap();
    assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    let s = section8_fixture(4).unwrap();
    assert_eq!(data.matrix, s.data.matrix);
}

#[test]
fn coaction_of_the_counterexample() {
    let s = section8_fixture(4).unwrap();
    assert!(s.holds());
    assert_eq!(s.rho_t, "t⊗1 + tz2⊗u + tz3⊗v + tz1⊗uv - tz2z3⊗uv");
    assert_eq!(s.lemma.families.len(), 5);
    assert!(s.lemma.families.iter().all(|f| f.representatives.iter().all(|(_, r)| r != "0")));
    assert_eq!(s.lemma.full_space_residue, "0");
    assert_eq!(s.corollary.linear_rank, 2);
}

#[test]
fn sign_flip_in_the_matrix_breaks_compatibility() {
    let data = section8_with_f12(int(1));
    let report = data.verify(4).unwrap();
    assert!(!report.passed());
    let c = report.check("compatibility").unwrap();
    assert!(c.witness.as_ref().unwrap().starts_with("i=1"));
}

#[test]
fn malformed_coaction_reports_line() {
    let text = "source 1 0 1\ntarget u:odd\nf 1 1 = 1\nchar 1 1 = u +\n";
    match parse_coaction(text) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
}
