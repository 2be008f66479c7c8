//! Order caps.
//!
//! `LESGP_MAX_N` overrides both caps when set to a positive integer.

use std::sync::OnceLock;

/// Largest structure accepted by the validators.
pub const DEFAULT_MAX_ORDER: usize = 12;

/// Largest order for lattice and le-semigroup enumeration.
pub const DEFAULT_MAX_ENUM_ORDER: usize = 6;

pub const MAX_N_ENV: &str = "LESGP_MAX_N";

fn env_override() -> Option<usize> {
    static CACHED: OnceLock<Option<usize>> = OnceLock::new();
    *CACHED.get_or_init(|| {
        std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&v| v >= 1)
    })
}

pub fn max_order() -> usize {
    env_override().unwrap_or(DEFAULT_MAX_ORDER)
}

pub fn max_enum_order() -> usize {
    env_override().unwrap_or(DEFAULT_MAX_ENUM_ORDER)
}
