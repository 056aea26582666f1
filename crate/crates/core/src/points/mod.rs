//! Points of `GL(m|n)` and of the four-dimensional example supergroup over
//! Grassmann algebras, and the first-order (dual number) Lie functor.

mod gl;
mod sec10;

pub use gl::{
    adjoint_dual, adjoint_hopf, adjoint_matrix, convolution_bracket, DualNumberPoint, Functional, GLPoint, GroupTag,
};
pub use sec10::{
    section10_commutator, section10_group, section10_inverse, section10_lie, Section10Lie, Section10Point,
};
