//! Sampling oracle: random Schwarz functions, boundary checks and
//! implication trials.

pub mod sampling;
pub mod schwarz;
pub mod trials;

pub use sampling::{
    empirical_bounds, radius_containment, verify_subordination, SampledBounds, SubordinationCheck,
};
pub use schwarz::{random_schwarz, SchwarzPoly};
pub use trials::{implication_trial, implication_trial_with, run_trials, TheoremId, TrialParams, TrialReport};
