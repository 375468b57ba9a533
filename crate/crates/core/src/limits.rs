/// Size guards for the enumerations that grow exponentially with rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest Weyl orbit that may be materialized.
    pub max_orbit: u64,
    /// Largest representation dimension whose weight system may be expanded.
    pub max_dim: u64,
    /// Largest rank for which the `2^r` subsets `J` are enumerated.
    pub max_subset_rank: usize,
    /// Largest Weyl group enumerated element by element.
    pub max_weyl_order: u64,
    /// Largest product `dim λ · dim μ` accepted by the character-product oracle.
    pub max_oracle_product: u64,
    /// Largest number of positive roots accepted by the subset-sum oracle.
    pub max_subset_roots: usize,
    /// Largest number of positive roots for full `ρ ⊗ ρ` verification
    /// without `allow_large`.
    pub max_verify_roots: usize,
    pub allow_large: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_orbit: 10_000_000,
            max_dim: 10_000_000,
            max_subset_rank: 20,
            max_weyl_order: 100_000,
            max_oracle_product: 1_000_000,
            max_subset_roots: 24,
            max_verify_roots: 16,
            allow_large: false,
        }
    }
}
