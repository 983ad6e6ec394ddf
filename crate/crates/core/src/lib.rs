//! Canonical right-coset representatives for the congruence subgroups
//! Γ₀(N), Γ₁(N) and Γ(N) of SL₂(ℤ), checked at runtime, and the connected
//! fundamental domains they cut out of the upper half-plane.
//!
//! The pieces, bottom-up:
//!
//! - [`residues`]: Z/NZ with symmetric representatives in `[-N1, N2]`.
//! - [`projline`]: P¹(Z/NZ), the function `M`, preferred elements, `M_j`.
//! - [`words`]: words in `S`, `T`, their matrices, subgroup membership.
//! - [`cosets`]: the lists Θ₀(N), Θ₁(N), Θ(N) and their verification.
//! - [`cayley`]: the adjacency graph on a list and its spanning trees.
//! - [`domain`]: ideal triangles, cusp classes and widths, SVG/JSON output.
//! - [`cli`]: the `fundom` command-line front end.
//!
//! ```
//! use fundom::{cosets, Level};
//!
//! let level = Level::new(30).unwrap();
//! let list = cosets::theta0(level).verified().unwrap();
//! assert_eq!(list.len(), 72);
//! ```

pub mod cayley;
pub mod cli;
pub mod cosets;
pub mod domain;
mod error;
pub mod projline;
pub mod residues;
pub mod words;

pub use error::{Error, Result};
pub use residues::{Level, Residue};
pub use words::{Cusp, GroupWord, Mat2, PslMat};
