pub mod codes;
pub mod constructions;
pub mod error;
pub mod field;
pub mod linalg;
pub mod ore;
pub mod report;
pub mod sample;
pub mod verify;
pub mod skew;

pub use error::{Error, Hypothesis, Result};
pub use field::{Fe, Field};
pub use skew::{SkewPoly, SkewRing, Twist};
pub use linalg::Matrix;
pub use codes::{Alphabet, LinearCode};
