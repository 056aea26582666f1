//! Structural queries computed by exact rank: centers, commutants, ideals,
//! quotients and direct sums.

use num::Zero;

use super::{LieSuperAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::linalg::{axpy, zero_vector, Echelon, Vector};
use crate::par;

/// `{ x : [x, s] = 0 for all s in S }`.
pub fn centralizer(l: &LieSuperAlgebra, s: &Subspace) -> Subspace {
    let d = l.dim();
    let mut eqs = Echelon::new(d);
    for b in s.basis() {
        // column i of the system is [x_i, b]
        let cols = par::map_range(d, |i| l.bracket_basis_vector(i, &b));
        for k in 0..d {
            let row: Vector = cols.iter().map(|c| c[k].clone()).collect();
            eqs.insert(&row);
        }
    }
    Subspace::span(l.parities(), eqs.nullspace())
}

pub fn center(l: &LieSuperAlgebra) -> Subspace {
    centralizer(l, &Subspace::full(l.parities()))
}

/// Span of `[a, b]` for `a` in `A`, `b` in `B`.
pub fn bracket_subspaces(l: &LieSuperAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let ab = a.basis();
    let bb = b.basis();
    let products = par::flat_map_range(ab.len(), |i| {
        bb.iter().map(|w| l.bracket_unchecked(&ab[i], w)).collect::<Vec<_>>()
    });
    Subspace::span(l.parities(), products)
}

pub fn commutant(l: &LieSuperAlgebra) -> Subspace {
    let full = Subspace::full(l.parities());
    bracket_subspaces(l, &full, &full)
}

/// `L^(1) = [L, L]`, `L^(k+1) = [L^(k), L^(k)]`, up to the last new term.
/// Empty when `[L, L] = L`.
pub fn derived_series(l: &LieSuperAlgebra) -> Vec<Subspace> {
    let mut out = Vec::new();
    let mut current = Subspace::full(l.parities());
    for _ in 0..=l.dim() {
        let next = bracket_subspaces(l, &current, &current);
        if next == current {
            break;
        }
        out.push(next.clone());
        current = next;
    }
    out
}

/// First basis element `x_i` and vector `s` of `S` with `[x_i, s]` outside `S`.
pub fn ideal_witness(l: &LieSuperAlgebra, s: &Subspace) -> Option<(usize, Vector)> {
    let basis = s.basis();
    par::find_first(l.dim() * basis.len().max(1), |idx| {
        if basis.is_empty() {
            return None;
        }
        let (i, j) = (idx / basis.len(), idx % basis.len());
        let w = l.bracket_basis_vector(i, &basis[j]);
        (!s.contains(&w)).then(|| (i, basis[j].clone()))
    })
}

pub fn is_ideal(l: &LieSuperAlgebra, s: &Subspace) -> bool {
    ideal_witness(l, s).is_none()
}

pub fn is_subalgebra(l: &LieSuperAlgebra, s: &Subspace) -> bool {
    let basis = s.basis();
    let n = basis.len();
    par::find_first(n * n, |idx| {
        let w = l.bracket_unchecked(&basis[idx / n], &basis[idx % n]);
        (!s.contains(&w)).then_some(())
    })
    .is_none()
}

/// `L / S`, with basis the images of the coordinate vectors not used as pivots by `S`.
pub fn quotient(l: &LieSuperAlgebra, s: &Subspace) -> Result<LieSuperAlgebra> {
    if let Some((i, v)) = ideal_witness(l, s) {
        return Err(Error::NotAnIdeal { basis: l.label(i).to_string(), vector: l.format_vector(&v) });
    }
    let keep = s.complement_indices();
    let even_dim = keep.iter().filter(|&&i| i < l.even_dim()).count();
    let odd_dim = keep.len() - even_dim;
    let labels = keep.iter().map(|&i| l.label(i).to_string()).collect();
    let name = format!("{}/ideal", l.name());
    let q = LieSuperAlgebra::from_bracket_fn(name, labels, even_dim, odd_dim, |a, b| {
        let w = l.bracket_basis_vector(keep[a], &l.basis_vector(keep[b]));
        let r = s.reduce(&w);
        keep.iter().map(|&k| r[k].clone()).collect()
    });
    Ok(q)
}

/// The subalgebra `S` as a Lie superalgebra on its reduced echelon basis.
pub fn restrict(l: &LieSuperAlgebra, s: &Subspace) -> Result<LieSuperAlgebra> {
    if !is_subalgebra(l, s) {
        return Err(Error::Precondition("subspace is not closed under the bracket".into()));
    }
    let basis = s.basis_with_parity();
    let even_dim = basis.iter().filter(|(_, p)| !p.is_odd()).count();
    let odd_dim = basis.len() - even_dim;
    let labels = basis.iter().map(|(v, _)| l.format_vector(v)).collect();
    let vectors: Vec<Vector> = basis.into_iter().map(|(v, _)| v).collect();
    Ok(LieSuperAlgebra::from_bracket_fn(format!("sub({})", l.name()), labels, even_dim, odd_dim, |a, b| {
        let w = l.bracket_unchecked(&vectors[a], &vectors[b]);
        s.coordinates(&w).expect("closed under bracket")
    }))
}

/// Expands coordinates relative to `basis` back into the ambient space.
pub fn combine(basis: &[Vector], coords: &[crate::Scalar], d: usize) -> Vector {
    let mut out = zero_vector(d);
    for (c, v) in coords.iter().zip(basis) {
        if !c.is_zero() {
            axpy(&mut out, c, v);
        }
    }
    out
}

/// `L1 ⊕ L2` with basis: even part of `L1`, even part of `L2`, odd part of `L1`, odd part of `L2`.
pub fn direct_sum(l1: &LieSuperAlgebra, l2: &LieSuperAlgebra) -> LieSuperAlgebra {
    let (m1, m2) = (l1.even_dim(), l2.even_dim());
    let (n1, n2) = (l1.odd_dim(), l2.odd_dim());
    let d = l1.dim() + l2.dim();
    // position in the sum of (summand, index)
    let place = |first: bool, i: usize| -> usize {
        match (first, i < if first { m1 } else { m2 }) {
            (true, true) => i,
            (false, true) => m1 + i,
            (true, false) => m1 + m2 + (i - m1),
            (false, false) => m1 + m2 + n1 + (i - m2),
        }
    };
    let mut origin = vec![(true, 0); d];
    for i in 0..l1.dim() {
        origin[place(true, i)] = (true, i);
    }
    for i in 0..l2.dim() {
        origin[place(false, i)] = (false, i);
    }
    let labels = origin
        .iter()
        .map(|&(first, i)| if first { l1.label(i).to_string() } else { format!("{}'", l2.label(i)) })
        .collect();
    let name = format!("{}+{}", l1.name(), l2.name());
    LieSuperAlgebra::from_bracket_fn(name, labels, m1 + m2, n1 + n2, |a, b| {
        let mut out = zero_vector(d);
        let ((fa, ia), (fb, ib)) = (origin[a], origin[b]);
        if fa == fb {
            let src = if fa { l1 } else { l2 };
            for (k, c) in src.bracket_basis(ia, ib) {
                out[place(fa, *k)] = c.clone();
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{abelian, make_gl, make_sl2, nonabelian_2d, section10_algebra};
    use crate::scalar::int;

    #[test]
    fn center_of_abelian_is_everything() {
        let l = abelian(2, 2);
        assert_eq!(center(&l).dim(), 4);
    }

    #[test]
    fn commutant_of_sl2() {
        assert_eq!(commutant(&make_sl2()).dim(), 3);
        assert_eq!(center(&make_sl2()).dim(), 0);
    }

    #[test]
    fn derived_series_of_section10() {
        let l = section10_algebra();
        let series = derived_series(&l);
        assert_eq!(series.len(), 2);
        assert_eq!(series[0], Subspace::span(l.parities(), [vec![int(2), int(4), int(0)]]));
        assert!(series[1].is_zero());
    }

    #[test]
    fn quotient_by_center_of_gl11() {
        let gl = make_gl(1, 1);
        let z = center(&gl);
        assert_eq!(z.dim(), 1);
        let q = quotient(&gl, &z).unwrap();
        assert_eq!(q.dim(), 3);
        assert!(q.validate().is_valid());
    }

    #[test]
    fn quotient_by_non_ideal_fails() {
        let l = nonabelian_2d();
        let h = Subspace::span(l.parities(), [vec![int(1), int(0)]]);
        assert!(matches!(quotient(&l, &h), Err(Error::NotAnIdeal { .. })));
    }

    #[test]
    fn direct_sum_keeps_even_first() {
        let s = direct_sum(&make_gl(1, 1), &make_sl2());
        assert_eq!((s.even_dim(), s.odd_dim()), (5, 2));
        assert!(s.validate().is_valid());
        assert_eq!(center(&s).dim(), 1);
    }

    #[test]
    fn restrict_to_even_part_of_gl11() {
        let gl = make_gl(1, 1);
        let s = Subspace::span(gl.parities(), [gl.basis_vector(0), gl.basis_vector(1)]);
        let r = restrict(&gl, &s).unwrap();
        assert!(r.is_abelian());
    }
}
