/// SplitMix64 finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `i`: the `i+1`-th output of a SplitMix64 stream started at `master`.
pub fn trial_seed(master: u64, i: u64) -> u64 {
    mix64(master.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(i.wrapping_add(1))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_reference_splitmix_outputs() {
        // First outputs of SplitMix64 seeded with 0.
        assert_eq!(trial_seed(0, 0), 0xE220_A839_7B1D_CDAF);
        assert_eq!(trial_seed(0, 1), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn distinct_trials_get_distinct_seeds() {
        let seeds: std::collections::HashSet<u64> = (0..10_000).map(|i| trial_seed(42, i)).collect();
        assert_eq!(seeds.len(), 10_000);
    }
}
