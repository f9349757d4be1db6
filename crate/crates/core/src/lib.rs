//! Homological deciders for finite simplicial complexes.
//!
//! The crate answers, for a complex and a coefficient field, whether it is
//! Cohen-Macaulay, Buchsbaum, doubly Cohen-Macaulay, doubly Buchsbaum,
//! Buchsbaum*, m-Buchsbaum*, Gorenstein* or an orientable homology manifold,
//! and computes the f, h, h', h'' and g vectors that go with them.
//!
//! Everything is exact: homology is computed by elimination over the
//! rationals (big integers) or over a prime field.
//!
//! ```
//! use bstar_core::{constructions::named, properties, FieldSpec};
//!
//! let torus = named("torus7").unwrap();
//! assert!(properties::is_buchsbaum_star(&torus, FieldSpec::Rationals).unwrap().holds);
//!
//! let rp2 = named("rp2_6").unwrap();
//! assert!(!properties::is_buchsbaum_star(&rp2, FieldSpec::Rationals).unwrap().holds);
//! assert!(properties::is_buchsbaum_star(&rp2, FieldSpec::prime(2).unwrap()).unwrap().holds);
//! ```

pub mod complex;
pub mod constructions;
mod error;
pub mod graph;
pub mod homology;
pub mod io;
pub mod limits;
pub mod linalg;
pub mod macaulay;
pub mod properties;
pub mod report;
pub mod rigidity;
pub mod vectors;
pub mod verify;

pub use complex::{Complex, Face};
pub use error::{Error, Result};
pub use graph::Graph;
pub use homology::BettiTable;
pub use linalg::{FieldSpec, LinalgError};
pub use properties::{PropertyReport, Verdict, Witness};
pub use report::Outcome;
pub use vectors::FaceVectorBundle;
