//! Saturation and oversaturation checks, greedy completion, and the exact
//! minimum search used as a desk-scale oracle.

mod greedy;
mod satmin;
mod sample;
mod shape;
mod verify;

pub use greedy::{greedy_complete, greedy_over, GreedyOrder, GreedyOutcome};
pub use satmin::{min_saturation, SatMin};
pub use sample::{sample_absent, SAMPLER_NAME};
pub use shape::{expected_colex_shape, verify_colex_shape, ColexShape};
pub use verify::{verify_oversaturated, verify_saturated, OversaturationReport, SaturationReport, VerifyMode};
