/// Environment variable that overrides [`Limits::max_order`].
pub const MAX_ORDER_ENV: &str = "PCL_MAX_ORDER";

/// Size caps for the brute-force parts of the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group accepted by the loaders and constructors.
    pub max_order: usize,
    /// Largest group whose full subgroup lattice will be enumerated.
    pub max_enumeration_order: usize,
    /// Largest order accepted by the isomorphism search.
    pub max_isomorphism_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 256,
            max_enumeration_order: 128,
            max_isomorphism_order: 64,
        }
    }
}

impl Limits {
    /// Defaults, with `max_order` taken from `PCL_MAX_ORDER` when it parses.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.max_order = n;
        }
        limits
    }

    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }
}
