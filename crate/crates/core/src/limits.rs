//! Enumeration caps for exhaustive checks.

use crate::error::{Error, Result};

/// Default bound on the number of vectors any exhaustive check enumerates.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

/// Environment variable that may lower (never raise) the cap.
pub const CAP_ENV_VAR: &str = "STEINBERG_MAX_ENUM";

/// The active cap: the default, lowered by `STEINBERG_MAX_ENUM` if set.
pub fn enumeration_cap() -> u64 {
    std::env::var(CAP_ENV_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<u64>().ok())
        .map_or(DEFAULT_ENUMERATION_CAP, |v| v.min(DEFAULT_ENUMERATION_CAP))
}

/// Checks `q^exponent <= cap` and returns `q^exponent`.
pub fn check_enumeration(q: u64, exponent: usize) -> Result<u64> {
    let cap = enumeration_cap();
    let mut count: u128 = 1;
    for _ in 0..exponent {
        count *= u128::from(q);
        if count > u128::from(cap) {
            let requested = (0..exponent).try_fold(1u128, |acc, _| acc.checked_mul(u128::from(q)));
            return Err(Error::SizeCap {
                requested: requested.unwrap_or(u128::MAX),
                cap,
            });
        }
    }
    Ok(count as u64)
}
