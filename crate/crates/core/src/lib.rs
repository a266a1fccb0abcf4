//! Strict complete intersections in Cox rings and their Galois descent.
//!
//! The crate is organized bottom-up:
//!
//! * [`field`]: `GF(p)` and `GF(p^d)` with Frobenius.
//! * [`ring`] and [`poly`]: multigraded polynomial rings and sparse polynomials.
//! * [`groebner`]: Buchberger's algorithm, normal forms, saturation, dimension and height.
//! * [`cox`]: Cox-ring ambients and the (strict) complete-intersection tests.
//! * [`galois`]: semilinear actions and the constructive descent of generators into orbits.
//! * [`sample`]: seeded random forms and regular sequences.
//!
//! ```
//! use std::sync::Arc;
//! use coxdescent::{cox::CoxAmbient, field::FieldTower, StrictCi};
//!
//! let amb = CoxAmbient::product_projective(&[1, 1], Arc::new(FieldTower::prime(101)?))?;
//! let fs = amb.parse_all(&["x0*y0", "x1*y1"])?;
//! match amb.is_strict_ci(&fs)? {
//!     StrictCi::NotStrict { witness } => assert_eq!(witness.to_string(), "x0*x1"),
//!     other => panic!("unexpected {other:?}"),
//! }
//! # Ok::<(), coxdescent::Error>(())
//! ```

pub mod cox;
pub mod error;
pub mod field;
pub mod galois;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod ring;
pub mod sample;
mod text;

pub use cox::{CoxAmbient, StrictCi};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldTower, Fq};
pub use galois::{DescentResult, SemilinearAction};
pub use groebner::Ideal;
pub use poly::Polynomial;
pub use ring::{Monomial, MonomialOrder, Multidegree, MultigradedRing, PolyRing};
