use proptest::prelude::*;
use superlie::grassmann::{GrassmannElement, Mask};
use superlie::scalar::int;
use superlie::{random, Parity, Scalar};

/// Product of two monomials by sorting the concatenated index list, one sign per swap.
fn naive_monomial_product(a: Mask, b: Mask) -> Option<(Mask, i64)> {
    if a & b != 0 {
        return None;
    }
    let bits = |m: Mask| (0..32).filter(move |i| m >> i & 1 == 1);
    let mut idx: Vec<u32> = bits(a).chain(bits(b)).collect();
    let mut sign = 1;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    Some((a | b, sign))
}

fn naive_product(x: &GrassmannElement, y: &GrassmannElement) -> GrassmannElement {
    let mut out = GrassmannElement::zero(x.q());
    for (a, c) in x.terms() {
        for (b, d) in y.terms() {
            if let Some((m, s)) = naive_monomial_product(a, b) {
                out.add_term(m, c * d * int(s));
            }
        }
    }
    out
}

fn element(seed: u64, q: usize, parity: Parity) -> GrassmannElement {
    random::grassmann(&mut random::rng(seed), q, parity, 0.6)
}

fn parity() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
}

proptest! {
    #[test]
    fn product_matches_sorting_oracle(s in any::<u64>(), t in any::<u64>(), q in 0usize..7, p in parity(), r in parity()) {
        let (x, y) = (element(s, q, p), element(t, q, r));
        prop_assert_eq!(&x * &y, naive_product(&x, &y));
    }

    #[test]
    fn supercommutative(s in any::<u64>(), t in any::<u64>(), q in 0usize..7, p in parity(), r in parity()) {
        let (x, y) = (element(s, q, p), element(t, q, r));
        let sign = int(p.koszul(r));
        prop_assert_eq!(&x * &y, (&y * &x).scale(&sign));
        prop_assert!(x.supercommutator(&y).is_zero());
    }

    #[test]
    fn associative(s in any::<u64>(), q in 0usize..6) {
        let mut rng = random::rng(s);
        let [x, y, z] = [0; 3].map(|_| random::grassmann(&mut rng, q, Parity::Odd, 0.5));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn units_invert(s in any::<u64>(), q in 0usize..7) {
        let mut rng = random::rng(s);
        let x = random::even_unit(&mut rng, q);
        let inv = x.inverse().unwrap();
        prop_assert_eq!(&x * &inv, GrassmannElement::one(q));
    }

    #[test]
    fn odd_elements_square_to_zero(s in any::<u64>(), q in 0usize..7) {
        let x = element(s, q, Parity::Odd);
        prop_assert!((&x * &x).is_zero());
    }
}

#[test]
fn nilpotent_elements_have_no_inverse() {
    let x = GrassmannElement::generator(2, 0);
    assert!(x.inverse().is_err());
    let zero: Scalar = int(0);
    assert_eq!(x.body(), zero);
}
