//! Exact affine exterior algebra over the rationals.
//!
//! A [`GeometricForm`] lives in the graded algebra generated by the points of
//! an `n`-dimensional affine space, written in the frame basis
//! `{O, v1, ..., vn}`: the origin unit `O` (index 0) and the basis vectors.
//! Points are `O + sum c_i v_i`; products of points are alternating.
//!
//! The boundary operator [`GeometricForm::omega`] lowers grade by one,
//! sending a point to 1 and `P∧Q` to `Q - P`. Everything is exact: there is
//! no floating point anywhere in this crate.
//!
//! ```
//! use pointform_core::{Frame, GeometricForm, Scalar};
//!
//! let f = Frame::space();
//! let a = GeometricForm::point(f, &[0.into(), 0.into(), 0.into()]).unwrap();
//! let b = GeometricForm::point(f, &[1.into(), 0.into(), 0.into()]).unwrap();
//! let edge = &a ^ &b;
//! assert_eq!(edge.omega(), &b - &a);
//! assert_eq!(edge.omega().omega(), GeometricForm::zero(f));
//! # let _ = Scalar::one();
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod affine;
mod blade;
mod boundary;
mod error;
mod form;
mod linalg;
pub mod mechanics;
pub mod oracle;
mod scalar;
#[cfg(test)]
mod testing;

pub use affine::{
    barycenter, boundary_cycle, coords, coords_in_grade, dual_functional, factor, incidence,
    reduce_closed_surface, reduce_polygon, Incidence, PolygonReduction, SimplexBasis,
    SurfaceReduction, WeightedPoint,
};
pub use blade::{Blade, MAX_DIM};
pub use boundary::{classify, reduce_at, FormClass, Reduction};
pub use error::Error;
pub use form::{Frame, GeometricForm};
pub use mechanics::{AppliedForce, ForceSystem, PoinsotReduction, SystemClass};
pub use oracle::{canonicalize, free_equals, FreeForm};
pub use scalar::{ParseScalarError, Scalar};
