//! Runtime configuration for the verification suites and the CLI.

use serde::{Deserialize, Serialize};

/// Depths, sample counts and caps for the verification suites. Defaults are
/// sized so the full suite finishes comfortably on commodity hardware.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct WorkbenchConfig {
    /// Covering-interval generation used by `locate`/σ evaluation.
    pub depth: u32,
    /// Series-oracle depth for τ (tail bound `2^-oracle_depth`).
    pub oracle_depth: u32,
    /// Sample count for the recursion and Lipschitz checks.
    pub samples: u32,
    /// Cap for exhaustive enumeration of `B_n`.
    pub enum_max: u32,
    /// Cap for the recursion verifier.
    pub recursion_max: u32,
    /// Circle count of the truncated bouquet model.
    pub max_circle_index: u32,
    /// Grid size for the density suite checks.
    pub density_grid: u32,
    /// Seed for the deterministic pseudo-random generators in suites.
    pub seed: u64,
}

impl Default for WorkbenchConfig {
    fn default() -> Self {
        WorkbenchConfig {
            depth: 8,
            oracle_depth: 12,
            samples: 128,
            enum_max: 8,
            recursion_max: 4,
            max_circle_index: 8,
            density_grid: 200,
            seed: 7,
        }
    }
}

impl WorkbenchConfig {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain struct serializes")
    }
}

/// Small deterministic generator for the seeded random checks (64-bit LCG,
/// high bits).
#[derive(Debug, Clone)]
pub struct Lcg(pub u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        self.next_u64() % bound
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_round_trip() {
        let cfg = WorkbenchConfig::default();
        let text = cfg.to_json().to_string();
        let back = WorkbenchConfig::from_json(&text).unwrap();
        assert_eq!(back.depth, cfg.depth);
        assert_eq!(back.seed, cfg.seed);
        // partial configs fall back to defaults
        let partial = WorkbenchConfig::from_json("{\"depth\": 5}").unwrap();
        assert_eq!(partial.depth, 5);
        assert_eq!(partial.enum_max, 8);
    }

    #[test]
    fn lcg_is_deterministic() {
        let mut a = Lcg::new(7);
        let mut b = Lcg::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = Lcg::new(8);
        assert_ne!(a.next_u64(), c.next_u64());
    }
}
