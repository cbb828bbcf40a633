use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("factor type parts must be positive")]
pub struct ZeroPartError;

/// A multiset of positive integers stored in ascending order.
///
/// This is the shared currency of the crate: cycle types of permutations,
/// degree patterns of factorizations modulo a prime, and orbit-length
/// multisets of a cyclic group acting on cosets are all `FactorType`s.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct FactorType(Vec<u32>);

impl FactorType {
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Self, ZeroPartError> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        if parts.contains(&0) {
            return Err(ZeroPartError);
        }
        parts.sort_unstable();
        Ok(FactorType(parts))
    }

    /// Builds a type from lengths already known to be positive.
    pub(crate) fn from_positive(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().map(|p| p as u32).collect();
        debug_assert!(!parts.contains(&0));
        parts.sort_unstable();
        FactorType(parts)
    }

    /// `{1, 1, ..., 1}` with `n` parts.
    pub fn all_ones(n: usize) -> Self {
        FactorType(vec![1; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// True when every part has the same size.
    pub fn is_uniform(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// Parity of a permutation with this cycle type.
    pub fn is_even_permutation(&self) -> bool {
        self.0.iter().map(|&p| p - 1).sum::<u32>() % 2 == 0
    }
}

impl TryFrom<Vec<u32>> for FactorType {
    type Error = ZeroPartError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        FactorType::new(parts)
    }
}

impl From<FactorType> for Vec<u32> {
    fn from(t: FactorType) -> Self {
        t.0
    }
}

impl fmt::Display for FactorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Shorthand for literal types in tests and tables.
#[macro_export]
macro_rules! ftype {
    ($($p:expr),* $(,)?) => {
        $crate::FactorType::new([$($p as u32),*]).expect("positive parts")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts_are_sorted_and_displayed() {
        let t = FactorType::new([2, 1, 2]).unwrap();
        assert_eq!(t.parts(), &[1, 2, 2]);
        assert_eq!(t.to_string(), "{1,2,2}");
        assert_eq!(t.total(), 5);
    }

    #[test]
    fn zero_part_rejected() {
        assert_eq!(FactorType::new([1, 0]), Err(ZeroPartError));
        assert!(serde_json::from_str::<FactorType>("[0,3]").is_err());
    }

    #[test]
    fn parity_and_uniformity() {
        assert!(ftype![1, 2, 2].is_even_permutation());
        assert!(!ftype![4].is_even_permutation());
        assert!(ftype![2, 2].is_uniform());
        assert!(!ftype![1, 3].is_uniform());
    }

    #[test]
    fn serializes_as_ascending_array() {
        assert_eq!(serde_json::to_string(&ftype![3, 1, 1]).unwrap(), "[1,1,3]");
    }
}
