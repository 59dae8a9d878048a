//! Exact computer algebra for weighted complete intersections.
//!
//! The crate is layered bottom-up:
//!
//! * [`ring`], [`poly`], [`parse`]: graded polynomial rings over ℚ and the
//!   ASCII polynomial syntax;
//! * [`groebner`]: Buchberger bases and the ideal operations built on them;
//! * [`wps`]: weighted projective spaces and the well-formedness,
//!   quasi-smoothness and adjunction checks;
//! * [`coxsat`]: saturation of Cox-ring ideals, both `(I : B^∞)` and the
//!   index-`m` saturation `I^∞` for class group ℤ;
//! * [`torelli`]: the bigraded Jacobi ring and the infinitesimal Torelli map;
//! * [`wgrass`]: the weighted Grassmannian `wGr(2,4)`.

pub mod coxsat;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod par;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod torelli;
pub mod wgrass;
pub mod wps;

pub use error::{Error, Result};
pub use groebner::{Budget, GbConfig, Ideal, MonomialOrder};
pub use parse::parse_poly;
pub use poly::{Poly, Q};
pub use ring::{make_ring, GradedRing, Monomial};
