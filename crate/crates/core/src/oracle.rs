//! Brute-force reference implementations over explicit membership bitmaps.
//!
//! Nothing here touches decomposition tables; every quantity is recomputed
//! from the definition with quadratic scans. Use it to check the fast path,
//! never on it.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A numerical semigroup given by its members in `[0, B]`.
///
/// Construction certifies that the bitmap ends with a run of at least
/// `m(S)` members, so every integer past `B` is a member too.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NaiveSemigroup {
    member: Vec<bool>,
    conductor: u32,
    genus: u32,
}

/// Bitmap size used to mirror explorations up to genus `g`: the table range
/// `3g` plus one maximal multiplicity `g + 1`.
pub fn bitmap_bound(g: u32) -> usize {
    3 * g as usize + g as usize + 1
}

impl NaiveSemigroup {
    fn from_members(member: Vec<bool>) -> Result<Self> {
        let bound = member.len() - 1;
        let multiplicity = member.iter().skip(1).position(|&b| b).map(|i| i + 1);
        let tail_run = member.iter().rev().take_while(|&&b| b).count();
        match multiplicity {
            Some(m) if tail_run >= m => {}
            _ => return Err(Error::OracleBoundTooSmall { bound }),
        }
        let conductor = member.iter().rposition(|&b| !b).map_or(0, |gap| gap + 1) as u32;
        let genus = member.iter().filter(|&&b| !b).count() as u32;
        Ok(NaiveSemigroup {
            member,
            conductor,
            genus,
        })
    }

    /// The set `{0} ∪ [0, bound] \ gaps`, checked for closure under addition.
    pub fn from_gaps(gaps: &[u32], bound: usize) -> Option<Self> {
        let mut member = vec![true; bound + 1];
        for &gap in gaps {
            if gap == 0 || gap as usize > bound {
                return None;
            }
            member[gap as usize] = false;
        }
        if !is_additively_closed(&member) {
            return None;
        }
        NaiveSemigroup::from_members(member).ok()
    }

    pub fn bound(&self) -> usize {
        self.member.len() - 1
    }

    pub fn contains(&self, n: u64) -> bool {
        self.member.get(n as usize).copied().unwrap_or(true)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn multiplicity(&self) -> u32 {
        (1..).find(|&x| self.contains(x)).unwrap() as u32
    }

    pub fn members(&self) -> &[bool] {
        &self.member
    }

    pub fn gaps(&self) -> Vec<u32> {
        (0..self.member.len())
            .filter(|&x| !self.member[x])
            .map(|x| x as u32)
            .collect()
    }

    /// `S \ {x}` for an irreducible `x >= c(S)`.
    pub fn without(&self, x: u32) -> Self {
        let mut member = self.member.clone();
        member[x as usize] = false;
        debug_assert!(is_additively_closed(&member), "{x} is not removable");
        NaiveSemigroup {
            member,
            conductor: self.conductor.max(x + 1),
            genus: self.genus + 1,
        }
    }
}

/// Whether `a, b` members with `a + b` in range always gives a member.
pub fn is_additively_closed(member: &[bool]) -> bool {
    if !member.first().copied().unwrap_or(false) {
        return false;
    }
    let n = member.len();
    (1..n)
        .filter(|&a| member[a])
        .all(|a| (a..n - a).filter(|&b| member[b]).all(|b| member[a + b]))
}

/// Smallest set containing 0 and `generators`, closed under addition,
/// restricted to `[0, bound]`.
pub fn closure(generators: &[u32], bound: usize) -> Result<NaiveSemigroup> {
    let gcd = generators.iter().fold(0u32, |acc, &x| acc.gcd(&x));
    if gcd != 1 {
        return Err(Error::NotNumericalSemigroup { gcd });
    }
    let mut member = vec![false; bound + 1];
    member[0] = true;
    for x in 1..=bound {
        member[x] = generators
            .iter()
            .any(|&a| a as usize <= x && member[x - a as usize]);
    }
    NaiveSemigroup::from_members(member)
}

/// `|{y in S : x - y in S, 2y <= x}|`.
pub fn naive_decomp(s: &NaiveSemigroup, x: u32) -> u32 {
    (0..=x / 2)
        .filter(|&y| s.contains(y as u64) && s.contains((x - y) as u64))
        .count() as u32
}

/// Members `x >= 1` that are not the sum of two nonzero members.
pub fn naive_irreducibles(s: &NaiveSemigroup) -> Vec<u32> {
    (1..=s.bound() as u32)
        .filter(|&x| s.contains(x as u64))
        .filter(|&x| !(1..x).any(|y| s.contains(y as u64) && s.contains((x - y) as u64)))
        .collect()
}

/// Members `x` with `x - m(S)` not a member (0 included).
pub fn apery_set(s: &NaiveSemigroup) -> Vec<u32> {
    let m = s.multiplicity();
    (0..=s.bound() as u32)
        .filter(|&x| s.contains(x as u64) && (x < m || !s.contains((x - m) as u64)))
        .collect()
}

/// Gap sets of every semigroup of genus at most `max_genus`, grouped by
/// genus and sorted. Exponential; meant for `max_genus` up to about 14.
pub fn naive_enumerate(max_genus: u32) -> Vec<Vec<Vec<u32>>> {
    let mut by_genus: BTreeMap<u32, Vec<Vec<u32>>> =
        (0..=max_genus).map(|g| (g, Vec::new())).collect();
    let naturals = closure(&[1], bitmap_bound(max_genus)).expect("gcd 1");
    let mut pending = vec![naturals];
    while let Some(s) = pending.pop() {
        by_genus.get_mut(&s.genus()).unwrap().push(s.gaps());
        if s.genus() < max_genus {
            for x in naive_irreducibles(&s) {
                if x >= s.conductor() {
                    pending.push(s.without(x));
                }
            }
        }
    }
    by_genus
        .into_values()
        .map(|mut sets| {
            sets.sort();
            sets
        })
        .collect()
}
