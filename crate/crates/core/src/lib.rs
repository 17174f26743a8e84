//! Exact-arithmetic tools for commutative algebras satisfying
//! `β{(yx²)x − ((yx)x)x} + γ{yx³ − ((yx)x)x} = 0` and their representations.

pub mod algebra;
pub mod commands;
pub mod corpus;
pub mod document;
pub mod error;
pub mod field;
pub mod identity;
pub mod linalg;
pub mod peirce;
pub mod representation;
pub mod submodule;
pub mod theorems;

pub use algebra::{Algebra, Element, GajParams};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use representation::Representation;
