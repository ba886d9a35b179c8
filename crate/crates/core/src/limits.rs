/// Resource limits shared by the expensive operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Generator count above which Betti tables are refused.
    pub max_generators: usize,
    /// Cap on the number of divisors of the generator lcm visited by the
    /// Betti computation.
    pub max_divisors: u64,
    /// Cap on `2^(d - r)`, the subset count enumerated by the regularity bound.
    pub max_subsets: u64,
    /// S-pair budget for one Buchberger run.
    pub spair_budget: usize,
    /// Largest `q` accepted when building a Katzman instance.
    pub max_katzman_q: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_generators: 4096,
            max_divisors: 4_000_000,
            max_subsets: 1 << 16,
            spair_budget: 1_000_000,
            max_katzman_q: 32,
        }
    }
}
