//! Noncommutative polynomials over an exact field and the Buchberger
//! procedure for two-sided ideals of the free algebra.

mod basis;
mod buchberger;
mod poly;
mod scalar;

pub use basis::{Basis, ReductionStep};
pub use buchberger::{
    render_record, BbPassRecord, BbTrace, BuchbergerOutcome, BuchbergerPass, SPolyDisposition, SPolyRecord,
};
pub use poly::NcPolynomial;
pub use scalar::{is_prime, Field, Scalar};
