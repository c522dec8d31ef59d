//! Exact symmetric functions over the rationals with row- and column-adding
//! vertex operators for the power, homogeneous, elementary, monomial,
//! forgotten and Schur bases, plus the bounded-height standard tableaux
//! counts those operators produce.

pub mod basis;
pub mod cli;
pub mod error;
pub mod exec;
pub mod expr;
pub mod oracle;
pub mod partition;
pub mod scalar;
pub mod symfunc;
pub mod tableaux;
pub mod verify;
pub mod vertex;

pub use basis::{basis_element, expand, BasisExpansion, BasisId};
pub use error::{Error, Result};
pub use exec::Exec;
pub use partition::{Composition, Partition, StraightenResult};
pub use scalar::Scalar;
pub use symfunc::SymFunc;
pub use vertex::{OpName, OperatorSpec};
