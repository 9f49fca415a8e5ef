//! Partial group cohomology `H^n(G, alpha, K)` with values in the unit
//! groups of the ideals `K 1_{x_1} 1_{x_1 x_2} ...`.

mod cochain;
mod compute;
mod space;

pub use cochain::{coboundary, Cochain};
pub use compute::{
    coboundary_hom, cohomologous, cohomology, enumerate_cohomology, normalize_2cocycle, CohomologyResult, EnumCounts,
    Method,
};
pub use space::CochainSpace;
