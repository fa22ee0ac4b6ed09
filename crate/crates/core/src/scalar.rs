//! Floating-point abstraction for the numeric parts of the pipeline.
//!
//! Scoring formulas, clustering, ranking metrics and the language model are
//! written against [`Scalar`] so they run in either `f32` or `f64`. The wire
//! types default to `f64`; see the aliases at the crate root.

use serde::{de::DeserializeOwned, Serialize};

/// Floating-point scalar usable throughout the numeric core.
///
/// Implemented by `f32` and `f64` via the blanket impl below. The serde
/// bounds let generic records round-trip through the JSON-lines formats.
pub trait Scalar:
    num_traits::Float
    + num_traits::FromPrimitive
    + std::fmt::Debug
    + std::fmt::Display
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Converts from `f64`, truncating precision when `Self` is narrower.
    fn of_f64(v: f64) -> Self {
        <Self as num_traits::FromPrimitive>::from_f64(v).expect("finite f64 converts")
    }

    /// Converts from `usize`; exact for the corpus sizes this crate handles.
    fn of_usize(v: usize) -> Self {
        Self::of_f64(v as f64)
    }

    /// Widens to `f64` (exact for `f32` and `f64`).
    fn as_f64(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).expect("scalar widens to f64")
    }
}

impl<T> Scalar for T where
    T: num_traits::Float
        + num_traits::FromPrimitive
        + std::fmt::Debug
        + std::fmt::Display
        + Serialize
        + DeserializeOwned
        + Send
        + Sync
        + 'static
{
}

/// Total order for scores: useful for argmax/argmin with deterministic
/// tie-breaking. NaN sorts below every number so it can never win an argmax.
pub fn cmp_scalars<S: Scalar>(a: S, b: S) -> std::cmp::Ordering {
    match a.partial_cmp(&b) {
        Some(ord) => ord,
        None if a.is_nan() && b.is_nan() => std::cmp::Ordering::Equal,
        None if a.is_nan() => std::cmp::Ordering::Less,
        None => std::cmp::Ordering::Greater,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn converts_both_ways() {
        assert_eq!(f64::of_f64(0.25), 0.25);
        assert_eq!(f32::of_f64(0.25), 0.25f32);
        assert_eq!(f64::of_usize(7), 7.0);
        assert_eq!(0.5f32.as_f64(), 0.5);
    }

    #[test]
    fn nan_never_wins() {
        use std::cmp::Ordering;
        assert_eq!(cmp_scalars(f64::NAN, 0.0), Ordering::Less);
        assert_eq!(cmp_scalars(0.0, f64::NAN), Ordering::Greater);
        assert_eq!(cmp_scalars(f64::NAN, f64::NAN), Ordering::Equal);
        assert_eq!(cmp_scalars(1.0, 2.0), Ordering::Less);
    }
}
