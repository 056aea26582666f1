use proptest::prelude::*;
use superlie::format::{parse_algebra, parse_kac_input, parse_matrix, write_algebra, write_matrix};
use superlie::lie::LieSuperAlgebra;
use superlie::scalar::Scalar;
use superlie::{fixtures, random, Error};

fn parse_line(text: &str) -> usize {
    match parse_algebra(text) {
        Err(Error::Parse { line, .. }) => line,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn every_bundled_algebra_round_trips() {
    for name in fixtures::ALGEBRAS {
        let l = fixtures::algebra(name).unwrap();
        let text = write_algebra(&l);
        assert_eq!(parse_algebra(&text).unwrap(), l, "{name}");
        assert_eq!(write_algebra(&parse_algebra(&text).unwrap()), text);
    }
}

#[test]
fn diagnostics_carry_line_numbers() {
    assert_eq!(parse_line("dims 2 0\n1 2 2 1\n\n1 2 2 5\n"), 4);
    assert_eq!(parse_line("# c\ndims 1 1\n1 1 2 1\n"), 3);
    assert_eq!(parse_line("dims 2 0\nlabels a b\na c b 1\n"), 3);
    assert_eq!(parse_line("dims 2 0\n1 2 3 1\n"), 2);
    assert_eq!(parse_line("dims 2 0\n1 2 2 x\n"), 2);
    assert_eq!(parse_line("1 2 2 1\ndims 2 0\n"), 1);
    assert_eq!(parse_line("dims 2 0\nlabels a dims\n"), 2);
    assert!(matches!(parse_matrix("1 2\n3\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(parse_kac_input("sym 2\ngrading z1 ; \n"), Err(Error::Parse { line: 2, .. })));
}

fn random_algebra(seed: u64, m: usize, n: usize) -> LieSuperAlgebra {
    let mut rng = random::rng(seed);
    let d = m + n;
    let parity = |x: usize| usize::from(x >= m);
    let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if (parity(i) + parity(j)) % 2 == parity(k) {
                    entries.push((i, j, k, random::small_scalar(&mut rng, 2) / Scalar::from_integer(3.into())));
                }
            }
        }
    }
    LieSuperAlgebra::from_constants("random", m, n, entries).unwrap()
}

proptest! {
    #[test]
    fn constants_round_trip(seed in any::<u64>(), m in 0usize..4, n in 0usize..3) {
        prop_assume!(m + n > 0);
        let l = random_algebra(seed, m, n);
        prop_assert_eq!(parse_algebra(&write_algebra(&l)).unwrap(), l);
    }

    #[test]
    fn matrices_round_trip(seed in any::<u64>(), r in 1usize..5, c in 1usize..5) {
        let m = random::matrix(&mut random::rng(seed), r, c, 7);
        prop_assert_eq!(parse_matrix(&write_matrix(&m)).unwrap(), m);
    }
}
