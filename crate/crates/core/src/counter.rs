//! Exact per-genus tallies, generic over the unsigned counter type.

use std::fmt::{Debug, Display};
use std::ops::Index;

use num_traits::{CheckedAdd, PrimInt, Unsigned};

use crate::error::{Error, Result};

/// An exact unsigned counter. Additions are checked; overflow is an error,
/// never a wrap.
pub trait Counter:
    PrimInt + Unsigned + CheckedAdd + Debug + Display + Send + Sync + 'static
{
}

impl<T> Counter for T where
    T: PrimInt + Unsigned + CheckedAdd + Debug + Display + Send + Sync + 'static
{
}

/// `counts[g]` is the number of semigroups of genus `g`, for `g` in `0..=G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Counts<C: Counter> {
    counts: Vec<C>,
}

impl<C: Counter> Counts<C> {
    /// All-zero tallies for genera `0..=max_genus`.
    pub fn zeros(max_genus: u32) -> Self {
        Counts {
            counts: vec![C::zero(); max_genus as usize + 1],
        }
    }

    pub fn from_vec(counts: Vec<C>) -> Self {
        Counts { counts }
    }

    #[inline]
    pub fn increment(&mut self, genus: u32) -> Result<()> {
        let slot = &mut self.counts[genus as usize];
        *slot = slot
            .checked_add(&C::one())
            .ok_or(Error::CountOverflow { genus })?;
        Ok(())
    }

    #[inline]
    pub fn add(&mut self, genus: u32, n: C) -> Result<()> {
        let slot = &mut self.counts[genus as usize];
        *slot = slot.checked_add(&n).ok_or(Error::CountOverflow { genus })?;
        Ok(())
    }

    /// Lane-wise sum. Both tallies must cover the same genus range.
    pub fn merge(&mut self, other: &Self) -> Result<()> {
        assert_eq!(self.counts.len(), other.counts.len(), "genus ranges differ");
        for (genus, (mine, theirs)) in self.counts.iter_mut().zip(&other.counts).enumerate() {
            *mine = mine.checked_add(theirs).ok_or(Error::CountOverflow {
                genus: genus as u32,
            })?;
        }
        Ok(())
    }

    /// Sum over all genera.
    pub fn total(&self) -> Result<C> {
        let mut sum = C::zero();
        for (genus, n) in self.counts.iter().enumerate() {
            sum = sum.checked_add(n).ok_or(Error::CountOverflow {
                genus: genus as u32,
            })?;
        }
        Ok(sum)
    }

    pub fn max_genus(&self) -> u32 {
        self.counts.len() as u32 - 1
    }

    pub fn as_slice(&self) -> &[C] {
        &self.counts
    }

    pub fn last(&self) -> C {
        *self.counts.last().expect("counts cover at least genus 0")
    }

    pub fn into_vec(self) -> Vec<C> {
        self.counts
    }
}

impl<C: Counter> Index<u32> for Counts<C> {
    type Output = C;

    fn index(&self, genus: u32) -> &C {
        &self.counts[genus as usize]
    }
}
