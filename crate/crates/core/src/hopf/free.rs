//! Free supercommutative Hopf superalgebra on even primitive, odd primitive
//! and group-like generators.

use num::{One, Zero};

use super::superpoly::{Block, GenImage, GenKind, Sig, Signature, SuperPoly};
use super::HopfAlgebra;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeGen {
    EvenPrimitive,
    OddPrimitive,
    GroupLike,
}

impl FreeGen {
    fn kind(self) -> GenKind {
        match self {
            FreeGen::EvenPrimitive => GenKind::Even,
            FreeGen::OddPrimitive => GenKind::Odd,
            FreeGen::GroupLike => GenKind::GroupLike,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FreeHopfSuperalgebra {
    name: String,
    gens: Vec<FreeGen>,
    sig: Sig,
}

impl FreeHopfSuperalgebra {
    pub fn new(name: &str, gens: Vec<(String, FreeGen)>) -> Self {
        let sig = Signature::single(Block::new(gens.iter().map(|(n, g)| (n.clone(), g.kind()))));
        FreeHopfSuperalgebra { name: name.into(), gens: gens.into_iter().map(|(_, g)| g).collect(), sig }
    }

    /// `Λ(u_1..u_n)` with primitive odd generators.
    pub fn odd_primitive(name: &str, names: &[&str]) -> Self {
        Self::new(name, names.iter().map(|n| (n.to_string(), FreeGen::OddPrimitive)).collect())
    }

    pub fn generators(&self) -> &[FreeGen] {
        &self.gens
    }

    pub fn generator(&self, i: usize) -> SuperPoly {
        SuperPoly::generator(&self.sig, i)
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        (0..self.sig.len()).find(|&i| self.sig.name(i) == name)
    }

    /// Linear extension of `ε`.
    pub fn counit_of(&self, x: &SuperPoly) -> Scalar {
        x.terms().map(|(e, c)| c * self.counit(e)).fold(Scalar::zero(), |a, b| a + b)
    }

}

impl HopfAlgebra for FreeHopfSuperalgebra {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn sig(&self) -> &Sig {
        &self.sig
    }

    fn coproduct(&self, m: &[i32]) -> SuperPoly {
        let s2 = Signature::power(&self.sig, 2);
        let n = self.sig.len();
        let images: Vec<GenImage> = self.gens.iter().enumerate().map(|(i, &g)| {
            let left = SuperPoly::generator(&s2, i);
            let right = SuperPoly::generator(&s2, n + i);
            match g {
                FreeGen::GroupLike => {
                    let mut inv = vec![0; 2 * n];
                    inv[i] = -1;
                    inv[n + i] = -1;
                    GenImage::invertible(&left * &right, SuperPoly::monomial(&s2, inv, Scalar::one()))
                }
                _ => GenImage::plain(&left + &right),
            }
        }).collect();
        SuperPoly::monomial(&self.sig, m.to_vec(), Scalar::one()).substitute(&s2, &images)
    }

    fn counit(&self, m: &[i32]) -> Scalar {
        let primitive = m.iter().zip(&self.gens).any(|(&e, &g)| e != 0 && g != FreeGen::GroupLike);
        if primitive {
            Scalar::zero()
        } else {
            Scalar::one()
        }
    }

    fn antipode(&self, m: &[i32]) -> SuperPoly {
        let mut e = m.to_vec();
        let mut degree = 0;
        for (x, &g) in e.iter_mut().zip(&self.gens) {
            if g == FreeGen::GroupLike {
                *x = -*x;
            } else {
                degree += *x;
            }
        }
        let c = if degree % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        SuperPoly::monomial(&self.sig, e, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_hopf;

    #[test]
    fn mixed_generators_satisfy_axioms() {
        let h = FreeHopfSuperalgebra::new(
            "mixed",
            vec![
                ("x".into(), FreeGen::EvenPrimitive),
                ("g".into(), FreeGen::GroupLike),
                ("u".into(), FreeGen::OddPrimitive),
                ("v".into(), FreeGen::OddPrimitive),
            ],
        );
        let report = verify_hopf(&h, 3);
        assert!(report.passed(), "{:?}", report.failure);
    }
}
