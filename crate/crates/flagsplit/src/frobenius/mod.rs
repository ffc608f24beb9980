//! Desk-scale Frobenius-splitting laboratory over F_p: sparse polynomial
//! arithmetic, Gröbner-backed chart ideals, the trace map and splitting
//! checks, Bruhat decomposition of F_p matrices, and the verified big-cell
//! models of SL_2 and SL_3.

pub mod bigcell;
pub mod decompose;
pub mod grobner;
pub mod parse;
pub mod poly;
pub mod trace;

pub use bigcell::{permutation_of_element, BigCellModel, CandidateVerdict, ChartPoint, SplitSweep};
pub use decompose::{FpMatrix, Permutation};
pub use grobner::{buchberger, normal_form, ChartIdeal};
pub use parse::parse_poly;
pub use poly::{MonomialOrder, PolyFp};
pub use trace::{
    compatibly_split, is_splitting, pth_minus_one_root, trace, CompatFailure, CompatVerdict,
    SplittingSection,
};
