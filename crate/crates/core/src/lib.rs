//! Linear extensions and descent polynomials of labeled posets, with the
//! product-with-a-chain constructions used to study canon permutations.

pub mod canon;
pub mod error;
pub mod limits;
pub mod linext;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
pub use linext::LinearExtension;
pub use poly::{GammaExpansion, IntPolynomial};
pub use poset::{Labeling, Poset};
