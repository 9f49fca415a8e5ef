use serde::{Deserialize, Serialize};

/// Size limits guarding every enumeration in the library.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    pub group_order: usize,
    pub ring_size: usize,
    /// largest |C^n| walked by the enumeration path
    pub enumeration: u64,
    /// largest number of n-tuples G^n handled by the coordinate path
    pub tuples: usize,
    pub degree: usize,
    pub monoid_size: usize,
    pub bimodule_size: usize,
    /// largest graded ring flattened into explicit tables
    pub graded_ring: usize,
    /// largest number of candidate families in isomorphism/automorphism searches
    pub families: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group_order: 64,
            ring_size: 10_000,
            enumeration: 1 << 16,
            tuples: 1 << 14,
            degree: 3,
            monoid_size: 32,
            bimodule_size: 81,
            graded_ring: 729,
            families: 1 << 20,
        }
    }
}
