//! Exact computations with the enriched q-monomial basis of QSym and its
//! dual basis in NSym.

pub mod compositions;
pub mod error;
pub mod fshuffle;
pub mod json;
pub mod linear;
pub mod nsym;
pub mod oracle;
pub mod products;
pub mod qsym;
pub mod scalar;
pub mod tensor;
pub mod verify;

pub use compositions::{Composition, DescentSet};
pub use error::{Error, Result};
pub use fshuffle::{FreeWordElement, SharpParams};
pub use linear::LinComb;
pub use nsym::{NSymElement, NSymSeries};
pub use num_rational::BigRational;
pub use oracle::TruncatedPolynomial;
pub use products::{StufuffleStats, Stufufuffler};
pub use qsym::QSymElement;
pub use scalar::{IntPolynomial, Scalar};
pub use tensor::{Algebra, Basis, TensorElement};
