//! Shared tunables for structure construction.

/// Construction parameters shared by the partition builders and the
/// query structures.
#[derive(Clone, Debug)]
pub struct Config {
    /// Branching parameter of each polynomial partition node.
    pub partition_d: u32,
    /// Verification slack: per-cell bounds are `(1 + delta) * m / D^k`.
    pub delta_num: u32,
    /// `delta` denominator; default slack is 1/2.
    pub delta_den: u32,
    /// Retry rounds with fresh randomness before escalating the degree.
    pub partition_retries: u32,
    /// Maximum total degree allowed for a partitioning polynomial.
    pub max_partition_degree: u32,
    /// Maximum total degree allowed for the plane-substituted 5-variate
    /// polynomial handed to the CAD builder.
    pub max_cad5_degree: u32,
    /// Leaf threshold mode for the primary tree.
    pub storage_mode: StorageMode,
    /// Leaf threshold for tradeoff mode (constant).
    pub tradeoff_leaf: usize,
    /// Leaf threshold for point-partition trees.
    pub ptree_leaf: usize,
    /// Number of canonical points placed along a supporting circle when
    /// replacing a short circular arc by a canonical semicircle.
    pub semicircle_points: u32,
    /// Maximum turning angle (degrees) of a convex arc piece. The value
    /// is enforced through an exact rational tangent threshold.
    pub max_turn_degrees: u32,
    /// RNG seed used by the randomized constructions.
    pub seed: u64,
}

/// Leaf-threshold policy of the primary partition tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StorageMode {
    /// Leaves of size about `n^(1/3)`.
    Basic,
    /// Constant-size leaves; more storage, faster queries.
    Tradeoff,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            partition_d: 2,
            delta_num: 1,
            delta_den: 2,
            partition_retries: 3,
            max_partition_degree: 4,
            max_cad5_degree: 8,
            storage_mode: StorageMode::Basic,
            tradeoff_leaf: 8,
            ptree_leaf: 16,
            semicircle_points: 36,
            max_turn_degrees: 10,
            seed: 0x9e3779b97f4a7c15,
        }
    }
}

impl Config {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_mode(mut self, mode: StorageMode) -> Self {
        self.storage_mode = mode;
        self
    }

    pub fn with_d(mut self, d: u32) -> Self {
        self.partition_d = d;
        self
    }

    /// Leaf threshold for a primary tree over `n` objects.
    pub fn leaf_threshold(&self, n: usize) -> usize {
        match self.storage_mode {
            StorageMode::Basic => {
                let mut t = 1usize;
                while (t + 1) * (t + 1) * (t + 1) <= n {
                    t += 1;
                }
                t.max(4)
            }
            StorageMode::Tradeoff => self.tradeoff_leaf,
        }
    }
}
