//! Boundary polynomials of graphs: `B(G; x, y) = Σ_S x^{|B(S)|} y^{|S|}`,
//! summed over all vertex subsets `S`, where `B(S)` is the set of vertices
//! outside `S` with a neighbour in `S`.
//!
//! The crate computes the polynomial by exhaustive enumeration or closed
//! forms, and reads graph parameters back out of its coefficients.

pub mod boundary;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod oracle;
pub mod poly;
pub mod verify;

pub use boundary::{BoundaryPolynomial, LaurentProfile, OutputFormat};
pub use enumerate::{boundary_polynomial, boundary_polynomial_with, EnumConfig};
pub use error::{Error, Result};
pub use families::{Family, FamilyKind};
pub use graph::{Edge, Graph};
pub use invariants::InvariantReport;
pub use poly::{BivarPoly, UniPoly};
