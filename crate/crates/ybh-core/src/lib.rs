//! Exact-arithmetic toolkit for the chain complex attached to the
//! normalized Jones R-matrix over the Laurent polynomial ring Q[y, y^-1].
//!
//! The chain module in degree n is V^(x)n for a rank-2 free module V, so
//! matrices in degree n have 2^n rows. Differentials are built three
//! independent ways (curtain composites, skein generator words, and the
//! Psi recursion) and homology is read off Smith normal forms.

pub mod differential;
pub mod homology;
pub mod laurent;
pub mod linalg;
pub mod skein;

pub use differential::{differential, GeneratorWord, Side};
pub use homology::{
    annihilator_report, cohomology, conjecture_prediction, conjecture_report, homology,
    special_image, AnnihilatorReport, ConjecturePrediction, ConjectureRow, HomologyGroup,
    SpecialVector,
};
pub use laurent::{LaurentPoly, ParseLaurentError, Rational};
pub use linalg::snf::{PivotStrategy, SmithNormalForm};
pub use linalg::{mat_equal_upto_column_order, ParseMatrixError, RingMatrix, TensorIndex};
