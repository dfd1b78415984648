//! Numerical semigroups represented by their decomposition numbers.
//!
//! For a bound `G`, a semigroup `S` of genus at most `G` is stored as the
//! table `d_S(0), ..., d_S(3G)` where `d_S(x)` counts the pairs `y <= z` of
//! elements of `S` with `y + z = x`. Membership is `d_S(x) > 0` and the
//! irreducible elements are exactly the `x >= 1` with `d_S(x) = 1`. Every
//! structural quantity of `S` can be read off this table, and removing a
//! generator `x >= c(S)` is a single shifted decrement pass over it.

use std::fmt;
use std::ops::Deref;

use crate::bound::GenusBound;
use crate::kernel::Kernel;

/// Decomposition numbers `d[0..=3G]`, one byte per entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DecompTable(Box<[u8]>);

impl DecompTable {
    /// Table of the full monoid of non-negative integers: `d[x] = 1 + x/2`.
    pub fn naturals(bound: GenusBound) -> Self {
        let table = (0..bound.table_len()).map(|x| (1 + x / 2) as u8).collect();
        DecompTable(table)
    }

    pub fn from_vec(entries: Vec<u8>) -> Self {
        assert!(
            !entries.is_empty(),
            "a decomposition table holds at least d[0]"
        );
        DecompTable(entries.into_boxed_slice())
    }

    /// The genus bound `G` this table was sized for.
    pub fn bound(&self) -> u32 {
        ((self.0.len() - 1) / 3) as u32
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [u8] {
        &mut self.0
    }
}

impl Deref for DecompTable {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for DecompTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// `1 + max{i : d[i] = 0}`, or 0 when the table has no zero entry.
pub fn derive_conductor(delta: &[u8]) -> u32 {
    let mut conductor = 0;
    for (i, &d) in delta.iter().enumerate() {
        if d == 0 {
            conductor = i as u32 + 1;
        }
    }
    conductor
}

/// Number of zero entries.
pub fn derive_genus(delta: &[u8]) -> u32 {
    delta.iter().filter(|&&d| d == 0).count() as u32
}

/// Least `i >= 1` with `d[i] > 0`.
///
/// A table with no such entry can only be the bound-0 table `[1]`, whose
/// semigroup is the naturals; that case yields `delta.len()` (= 1), the first
/// index past the table.
pub fn derive_multiplicity(delta: &[u8]) -> u32 {
    delta
        .iter()
        .enumerate()
        .skip(1)
        .find(|&(_, &d)| d > 0)
        .map_or(delta.len(), |(i, _)| i) as u32
}

/// `{i >= 1 : d[i] = 1}`, the minimal generating set. Index 0 has `d = 1`
/// but is never irreducible.
pub fn derive_irreducibles(delta: &[u8]) -> Vec<u32> {
    delta
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, &d)| d == 1)
        .map(|(i, _)| i as u32)
        .collect()
}

/// Borrowed semigroup: cached conductor, genus, multiplicity and the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemigroupView<'a> {
    pub(crate) conductor: u32,
    pub(crate) genus: u32,
    pub(crate) multiplicity: u32,
    pub(crate) delta: &'a [u8],
}

impl<'a> SemigroupView<'a> {
    #[inline]
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    #[inline]
    pub fn genus(&self) -> u32 {
        self.genus
    }

    #[inline]
    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    #[inline]
    pub fn delta(&self) -> &'a [u8] {
        self.delta
    }

    pub fn bound(&self) -> u32 {
        ((self.delta.len() - 1) / 3) as u32
    }

    /// Membership. Anything past the table lies beyond `3G >= c(S)`.
    pub fn contains(&self, n: u64) -> bool {
        n >= self.delta.len() as u64 || self.delta[n as usize] > 0
    }

    /// Generators whose removal yields a son: `x` in `[c, c + m)` with
    /// `d[x] = 1`, in increasing order.
    #[inline]
    pub fn candidates(&self) -> impl Iterator<Item = u32> + 'a {
        let start = self.conductor as usize;
        let end = (start + self.multiplicity as usize).min(self.delta.len());
        let delta = self.delta;
        (start.min(end)..end)
            .filter(move |&x| delta[x] == 1)
            .map(|x| x as u32)
    }

    pub fn son_candidates(&self) -> Vec<u32> {
        self.candidates().collect()
    }

    /// Minimal generators. The naturals are `<1>` even at bound 0, where the
    /// table stops before 1.
    pub fn irreducibles(&self) -> Vec<u32> {
        if self.genus == 0 {
            return vec![1];
        }
        derive_irreducibles(self.delta)
    }

    pub fn gaps(&self) -> Vec<u32> {
        self.delta
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 0)
            .map(|(i, _)| i as u32)
            .collect()
    }

    pub fn is_ordinary(&self) -> bool {
        self.multiplicity == self.genus + 1
    }

    pub fn son(&self, x: u32) -> Semigroup {
        self.son_with(x, Kernel::default())
    }

    /// The son `S \ {x}`. The parent is left untouched.
    pub fn son_with(&self, x: u32, kernel: Kernel) -> Semigroup {
        let mut delta = DecompTable(self.delta.into());
        let (conductor, genus, multiplicity) = son_into(*self, x, delta.as_mut_slice(), kernel);
        Semigroup {
            conductor,
            genus,
            multiplicity,
            delta,
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate(*self)
    }

    pub fn to_owned(&self) -> Semigroup {
        Semigroup {
            conductor: self.conductor,
            genus: self.genus,
            multiplicity: self.multiplicity,
            delta: DecompTable(self.delta.into()),
        }
    }
}

/// Writes the table of `parent \ {x}` into `child` (same length as the
/// parent's table) and returns its conductor, genus and multiplicity.
#[inline]
pub(crate) fn son_into(
    parent: SemigroupView<'_>,
    x: u32,
    child: &mut [u8],
    kernel: Kernel,
) -> (u32, u32, u32) {
    debug_assert!(
        parent.genus < parent.bound(),
        "son of a node at the genus bound"
    );
    debug_assert!(
        x >= parent.conductor && x < parent.conductor + parent.multiplicity,
        "x = {x} outside [c, c + m)"
    );
    debug_assert_eq!(
        parent.delta.get(x as usize),
        Some(&1),
        "x = {x} is not irreducible"
    );

    let x = x as usize;
    let len = parent.delta.len();
    child.copy_from_slice(parent.delta);
    // d'[y] = d[y] - 1 for y >= x with d[y - x] > 0.
    kernel.apply(&parent.delta[..len - x], &mut child[x..], len - x);

    let multiplicity = if x as u32 > parent.multiplicity {
        parent.multiplicity
    } else {
        parent.multiplicity + 1
    };
    (x as u32 + 1, parent.genus + 1, multiplicity)
}

/// One node of the semigroup tree: conductor, genus and multiplicity cached
/// next to the decomposition table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    conductor: u32,
    genus: u32,
    multiplicity: u32,
    delta: DecompTable,
}

impl Semigroup {
    /// The naturals, prepared for exploring up to genus `bound`.
    ///
    /// The cached conductor is 1 rather than 0 so that the son window
    /// `[c, c + m)` starts past 0.
    pub fn root(bound: GenusBound) -> Self {
        Semigroup {
            conductor: 1,
            genus: 0,
            multiplicity: 1,
            delta: DecompTable::naturals(bound),
        }
    }

    /// Assembles a semigroup without any consistency check. Use
    /// [`Semigroup::validate`] to audit the result.
    pub fn from_raw_parts(
        conductor: u32,
        genus: u32,
        multiplicity: u32,
        delta: DecompTable,
    ) -> Self {
        Semigroup {
            conductor,
            genus,
            multiplicity,
            delta,
        }
    }

    #[inline]
    pub fn view(&self) -> SemigroupView<'_> {
        SemigroupView {
            conductor: self.conductor,
            genus: self.genus,
            multiplicity: self.multiplicity,
            delta: &self.delta,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn delta(&self) -> &DecompTable {
        &self.delta
    }

    pub fn bound(&self) -> u32 {
        self.delta.bound()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.view().contains(n)
    }

    pub fn son_candidates(&self) -> Vec<u32> {
        self.view().son_candidates()
    }

    pub fn son(&self, x: u32) -> Semigroup {
        self.view().son(x)
    }

    pub fn son_with(&self, x: u32, kernel: Kernel) -> Semigroup {
        self.view().son_with(x, kernel)
    }

    pub fn irreducibles(&self) -> Vec<u32> {
        self.view().irreducibles()
    }

    pub fn gaps(&self) -> Vec<u32> {
        self.view().gaps()
    }

    pub fn is_ordinary(&self) -> bool {
        self.view().is_ordinary()
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate(self.view())
    }
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semigroup")
            .field("c", &self.conductor)
            .field("g", &self.genus)
            .field("m", &self.multiplicity)
            .field("generators", &self.irreducibles())
            .finish()
    }
}

/// `<3, 7>` style rendering of the minimal generators.
impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, x) in self.irreducibles().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ">")
    }
}

/// A failed consistency check on a [`Semigroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `d[0]` must be 1.
    ZeroEntry {
        value: u8,
    },
    ConductorMismatch {
        cached: u32,
        derived: u32,
    },
    GenusMismatch {
        cached: u32,
        derived: u32,
    },
    MultiplicityMismatch {
        cached: u32,
        derived: u32,
    },
    GenusAboveBound {
        genus: u32,
        bound: u32,
    },
    /// `c <= 2g` for `g >= 1`.
    ConductorBound {
        conductor: u32,
        genus: u32,
    },
    /// `m <= g + 1`.
    MultiplicityBound {
        multiplicity: u32,
        genus: u32,
    },
    /// `d[x] <= 1 + x/2`.
    DecompositionBound {
        x: u32,
        value: u8,
    },
}

impl Violation {
    /// Short stable name of the failed check.
    pub fn check(&self) -> &'static str {
        match self {
            Violation::ZeroEntry { .. } => "d[0]=1",
            Violation::ConductorMismatch { .. } => "cached conductor",
            Violation::GenusMismatch { .. } => "cached genus",
            Violation::MultiplicityMismatch { .. } => "cached multiplicity",
            Violation::GenusAboveBound { .. } => "genus <= bound",
            Violation::ConductorBound { .. } => "c <= 2g",
            Violation::MultiplicityBound { .. } => "m <= g+1",
            Violation::DecompositionBound { .. } => "d[x] <= 1+x/2",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.check())?;
        match *self {
            Violation::ZeroEntry { value } => write!(f, "d[0] = {value}"),
            Violation::ConductorMismatch { cached, derived }
            | Violation::GenusMismatch { cached, derived }
            | Violation::MultiplicityMismatch { cached, derived } => {
                write!(f, "cached {cached}, table says {derived}")
            }
            Violation::GenusAboveBound { genus, bound } => write!(f, "g = {genus} > G = {bound}"),
            Violation::ConductorBound { conductor, genus } => {
                write!(f, "c = {conductor}, g = {genus}")
            }
            Violation::MultiplicityBound {
                multiplicity,
                genus,
            } => {
                write!(f, "m = {multiplicity}, g = {genus}")
            }
            Violation::DecompositionBound { x, value } => write!(f, "d[{x}] = {value}"),
        }
    }
}

fn validate(s: SemigroupView<'_>) -> Vec<Violation> {
    let mut violations = Vec::new();
    let delta = s.delta;

    if delta[0] != 1 {
        violations.push(Violation::ZeroEntry { value: delta[0] });
    }

    let derived_genus = derive_genus(delta);
    let derived_conductor = derive_conductor(delta);
    let derived_multiplicity = derive_multiplicity(delta);

    // The root caches c = 1 while its table says 0.
    let root_convention =
        s.genus == 0 && derived_genus == 0 && s.conductor == 1 && derived_conductor == 0;
    if s.conductor != derived_conductor && !root_convention {
        violations.push(Violation::ConductorMismatch {
            cached: s.conductor,
            derived: derived_conductor,
        });
    }
    if s.genus != derived_genus {
        violations.push(Violation::GenusMismatch {
            cached: s.genus,
            derived: derived_genus,
        });
    }
    if s.multiplicity != derived_multiplicity {
        violations.push(Violation::MultiplicityMismatch {
            cached: s.multiplicity,
            derived: derived_multiplicity,
        });
    }
    if s.genus > s.bound() {
        violations.push(Violation::GenusAboveBound {
            genus: s.genus,
            bound: s.bound(),
        });
    }
    if s.genus >= 1 && s.conductor > 2 * s.genus {
        violations.push(Violation::ConductorBound {
            conductor: s.conductor,
            genus: s.genus,
        });
    }
    if s.multiplicity > s.genus + 1 {
        violations.push(Violation::MultiplicityBound {
            multiplicity: s.multiplicity,
            genus: s.genus,
        });
    }
    for (x, &value) in delta.iter().enumerate() {
        if value as usize > 1 + x / 2 {
            violations.push(Violation::DecompositionBound { x: x as u32, value });
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bound(g: u32) -> GenusBound {
        GenusBound::new(g).unwrap()
    }

    /// Removes each gap in turn, starting from the root.
    fn by_gaps(g: u32, gaps: &[u32]) -> Semigroup {
        gaps.iter()
            .fold(Semigroup::root(bound(g)), |s, &x| s.son(x))
    }

    #[test]
    fn root_tables() {
        let r = Semigroup::root(bound(2));
        assert_eq!(r.delta().as_slice(), &[1, 1, 2, 2, 3, 3, 4]);
        assert_eq!((r.conductor(), r.genus(), r.multiplicity()), (1, 0, 1));

        let r = Semigroup::root(bound(0));
        assert_eq!(r.delta().as_slice(), &[1]);
        assert_eq!((r.conductor(), r.genus(), r.multiplicity()), (1, 0, 1));
        assert!(r.validate().is_empty());

        let r = Semigroup::root(bound(169));
        assert_eq!(r.delta().iter().copied().max(), Some(254));
    }

    #[test]
    fn first_son_is_two_three() {
        let g = 6;
        let t = Semigroup::root(bound(g)).son(1);
        assert_eq!((t.conductor(), t.genus(), t.multiplicity()), (2, 1, 2));
        // Brute force over {0, 2, 3, 4, ...}: pairs y <= z, both members.
        let member = |n: usize| n != 1;
        for y in 0..t.delta().len() {
            let pairs = (0..=y / 2).filter(|&a| member(a) && member(y - a)).count();
            assert_eq!(t.delta()[y] as usize, pairs, "d[{y}]");
        }
        assert_eq!(t.irreducibles(), vec![2, 3]);
        assert!(t.validate().is_empty());
    }

    #[test]
    fn three_seven_tables() {
        let s = by_gaps(6, &[1, 2, 4, 5, 8, 11]);
        // 14 = 0+14 = 7+7 (11 is a gap, so 3+11 is not a decomposition).
        assert_eq!(s.delta()[14], 2);
        assert_eq!(&s.delta()[..13], &[1, 0, 0, 1, 0, 0, 2, 1, 0, 2, 2, 0, 3]);
        assert_eq!(s.irreducibles(), vec![3, 7]);
        assert_eq!(derive_conductor(s.delta()), 12);
        assert_eq!(derive_genus(s.delta()), 6);
        assert_eq!(derive_multiplicity(s.delta()), 3);
        assert!(!s.contains(11));
        assert!(s.contains(0));
        assert!(s.contains(3 * 6 + 5));
        assert!(s.validate().is_empty());
    }

    #[test]
    fn ordinary_son_of_ordinary() {
        let mut o = Semigroup::root(bound(8));
        for g in 0..8 {
            assert_eq!(o.gaps(), (1..=g).collect::<Vec<_>>());
            o = o.son(o.conductor());
            assert_eq!(o.multiplicity(), g + 2);
        }
        assert_eq!(derive_multiplicity(by_gaps(5, &[1, 2, 3, 4, 5]).delta()), 6);
    }

    #[test]
    fn candidates() {
        let root = Semigroup::root(bound(4));
        assert_eq!(root.son_candidates(), vec![1]);
        let two_three = root.son(1);
        assert_eq!(two_three.son_candidates(), vec![2, 3]);
        assert_eq!(two_three.son(2).to_string(), "<3,4,5>");
        assert_eq!(two_three.son(3).to_string(), "<2,5>");
        // <3,7>: window [12, 15); 12 = 3+9, 13 = 3+10 and 14 = 7+7 are all reducible.
        let s_e = by_gaps(6, &[1, 2, 4, 5, 8, 11]);
        assert_eq!(s_e.son_candidates(), Vec::<u32>::new());
        // The bound-0 root has no table room for candidates.
        assert!(Semigroup::root(bound(0)).son_candidates().is_empty());
    }

    #[test]
    fn irreducibles_of_small_semigroups() {
        assert_eq!(Semigroup::root(bound(3)).irreducibles(), vec![1]);
        let four_to_seven = by_gaps(3, &[1, 2, 3]);
        assert_eq!(four_to_seven.irreducibles(), vec![4, 5, 6, 7]);
        assert_eq!(derive_conductor(Semigroup::root(bound(3)).delta()), 0);
        assert_eq!(derive_genus(Semigroup::root(bound(3)).delta()), 0);
        assert_eq!(derive_conductor(by_gaps(3, &[1]).delta()), 2);
        assert_eq!(derive_genus(by_gaps(3, &[1]).delta()), 1);
    }

    #[test]
    fn parent_is_not_modified() {
        let parent = by_gaps(5, &[1, 2]);
        let before = parent.clone();
        let _ = parent.son(4);
        let _ = parent.son_with(5, Kernel::Scalar);
        assert_eq!(parent, before);
    }

    #[test]
    fn corrupted_zero_lane_is_named() {
        let s = Semigroup::root(bound(3)).son(1);
        let mut delta = s.delta().clone();
        delta.as_mut_slice()[0] = 0;
        let bad = Semigroup::from_raw_parts(s.conductor(), s.genus(), s.multiplicity(), delta);
        let violations = bad.validate();
        assert!(
            violations.iter().any(|v| v.check() == "d[0]=1"),
            "{violations:?}"
        );
    }

    #[test]
    fn kernels_build_the_same_sons() {
        let s = by_gaps(20, &[1, 2, 4, 5]);
        for x in s.son_candidates() {
            assert_eq!(s.son_with(x, Kernel::Scalar), s.son_with(x, Kernel::Vector));
        }
    }
}
