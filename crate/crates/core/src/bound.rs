use std::fmt;

use crate::error::{Error, Result};

/// Maximum genus that can be explored with one-byte decomposition counters.
///
/// The largest entry of a table is `1 + floor(3G / 2)`, which must stay
/// below 256.
pub const MAX_GENUS: u32 = 169;

/// Upper bound `G` on the genus of the semigroups being explored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenusBound(u32);

impl GenusBound {
    pub fn new(genus: u32) -> Result<Self> {
        if genus > MAX_GENUS {
            return Err(Error::BoundExceeded {
                requested: genus,
                max: MAX_GENUS,
            });
        }
        Ok(GenusBound(genus))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of decomposition counters kept per semigroup: indices `0..=3G`.
    #[inline]
    pub fn table_len(self) -> usize {
        3 * self.0 as usize + 1
    }
}

impl TryFrom<u32> for GenusBound {
    type Error = Error;

    fn try_from(genus: u32) -> Result<Self> {
        GenusBound::new(genus)
    }
}

impl fmt::Display for GenusBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
