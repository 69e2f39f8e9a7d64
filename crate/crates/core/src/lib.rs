//! Exact enumerative counts of plane curves.
//!
//! * [`graded_ring`]: truncated graded rings modelling products of projective
//!   spaces and projectivized bundles, with integration.
//! * [`chern`]: formal bundles (duals, twists, sums, Euler classes, inverse
//!   Chern classes) and cycles to pair classes against.
//! * [`charnum`]: characteristic numbers of singular plane curves, numeric or
//!   symbolic in the degree `d`, with their boundary-correction ledgers.
//! * [`kontsevich`]: the number of rational plane curves through `3d - 1`
//!   points via the stable-maps recursion, in big integers.

pub mod charnum;
pub mod chern;
pub mod degree;
pub mod error;
pub mod graded_ring;
pub mod kontsevich;

pub use charnum::{
    charnum, charnum_all, excess, genus_smooth, nd_classical, CharNum, CharNumRecord,
    CorrectionTerm, Degree, Excess, PipelineStep, Pipelines, Quantity,
};
pub use chern::{Cycle, CycleFunctional, FormalBundle};
pub use degree::DegreeCoeff;
pub use error::{Error, Result};
pub use graded_ring::{CohClass, Relation, Ring, RingSpec};
pub use kontsevich::{binomial, BoundaryCount, BoundarySide, MemoTable, Source};
