//! Run configuration shared by the CLI and long-running library entry points.

use crate::scalar::Tolerance;
use crate::state_sum::Strategy;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub tolerance: Tolerance,
    /// admissible-state cap for enumeration
    pub cap_states: u64,
    /// intermediate-tensor entry cap for contraction
    pub cap_entries: u64,
    pub strategy: Strategy,
    pub seed: u64,
    pub workers: usize,
    pub json: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            tolerance: Tolerance::default(),
            cap_states: 10_000_000,
            cap_entries: 10_000_000,
            strategy: Strategy::MinFill,
            seed: 0,
            workers: 1,
            json: false,
        }
    }
}
