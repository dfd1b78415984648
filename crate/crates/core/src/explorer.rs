//! Depth-first traversal of the semigroup tree with an explicit stack.
//!
//! Stack entries keep their tables in one flat byte arena. Slots increase
//! from the bottom of the stack to the top; the sons of a popped node go into
//! the slots just above its own, so the parent is read in place while they
//! are written. Each level of the current path wastes at most one slot.

use crate::bound::GenusBound;
use crate::counter::{Counter, Counts};
use crate::error::{Error, Result};
use crate::kernel::Kernel;
use crate::semigroup::{son_into, Semigroup, SemigroupView};

/// Receives every node of a traversal exactly once.
pub trait Visitor {
    type Error;

    /// When false, sons at the genus bound are not built; the traversal
    /// reports how many there are through [`Visitor::visit_leaves`].
    const NEEDS_LEAF_TABLES: bool = true;

    fn visit(&mut self, node: &SemigroupView<'_>) -> Result<(), Self::Error>;

    /// `count` unbuilt nodes of genus `genus`. Only called when
    /// `NEEDS_LEAF_TABLES` is false.
    fn visit_leaves(&mut self, genus: u32, count: u32) -> Result<(), Self::Error> {
        let _ = (genus, count);
        unreachable!("visitor asked for leaf tables")
    }
}

impl<E, F> Visitor for F
where
    F: FnMut(&SemigroupView<'_>) -> Result<(), E>,
{
    type Error = E;

    #[inline]
    fn visit(&mut self, node: &SemigroupView<'_>) -> Result<(), E> {
        self(node)
    }
}

/// Tallies nodes per genus.
pub struct Tally<C: Counter> {
    counts: Counts<C>,
}

impl<C: Counter> Tally<C> {
    pub fn new(bound: GenusBound) -> Self {
        Tally {
            counts: Counts::zeros(bound.get()),
        }
    }

    pub fn into_counts(self) -> Counts<C> {
        self.counts
    }
}

impl<C: Counter> Visitor for Tally<C> {
    type Error = Error;

    const NEEDS_LEAF_TABLES: bool = false;

    #[inline]
    fn visit(&mut self, node: &SemigroupView<'_>) -> Result<()> {
        self.counts.increment(node.genus())
    }

    #[inline]
    fn visit_leaves(&mut self, genus: u32, count: u32) -> Result<()> {
        let count = C::from(count).ok_or(Error::CountOverflow { genus })?;
        self.counts.add(genus, count)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct StackEntry {
    pub(crate) conductor: u32,
    pub(crate) genus: u32,
    pub(crate) multiplicity: u32,
    /// Visit index of the node this entry was generated from.
    pub(crate) parent: u64,
    /// Arena slot holding the table.
    pub(crate) slot: usize,
}

/// Hook called after each node's sons have been pushed.
pub(crate) trait StackProbe {
    fn after_expand(&mut self, _stack: &[StackEntry]) {}
}

pub(crate) struct NoProbe;

impl StackProbe for NoProbe {}

/// Upper bound on simultaneous stack entries when exploring up to `bound`:
/// at most `g + 1` pending sons per genus `g < G`.
pub fn stack_capacity(bound: GenusBound) -> usize {
    let g = bound.get() as usize;
    (g * (g + 1) / 2).max(1)
}

/// Configured depth-first explorer.
#[derive(Debug, Clone, Copy)]
pub struct Explorer {
    bound: GenusBound,
    kernel: Kernel,
}

impl Explorer {
    pub fn new(bound: GenusBound) -> Self {
        Explorer {
            bound,
            kernel: Kernel::default(),
        }
    }

    pub fn kernel(mut self, kernel: Kernel) -> Self {
        self.kernel = kernel;
        self
    }

    pub fn bound(&self) -> GenusBound {
        self.bound
    }

    /// `n_g` for every `g <= G`.
    pub fn count<C: Counter>(&self) -> Result<Counts<C>> {
        self.count_from(Semigroup::root(self.bound).view())
    }

    /// Per-genus counts of the subtree rooted at `root` (root included).
    pub fn count_from<C: Counter>(&self, root: SemigroupView<'_>) -> Result<Counts<C>> {
        let mut tally = Tally::new(self.bound);
        self.walk_from(root, &mut tally)?;
        Ok(tally.into_counts())
    }

    /// Visits every semigroup of genus at most `G`.
    pub fn walk<V: Visitor>(&self, visitor: &mut V) -> Result<(), V::Error>
    where
        V::Error: From<Error>,
    {
        let root = Semigroup::root(self.bound);
        self.walk_from(root.view(), visitor)
    }

    /// Visits the subtree rooted at `root`, down to genus `G`.
    pub fn walk_from<V: Visitor>(
        &self,
        root: SemigroupView<'_>,
        visitor: &mut V,
    ) -> Result<(), V::Error>
    where
        V::Error: From<Error>,
    {
        self.walk_probed(root, visitor, &mut NoProbe)
    }

    pub(crate) fn walk_probed<V: Visitor, P: StackProbe>(
        &self,
        root: SemigroupView<'_>,
        visitor: &mut V,
        probe: &mut P,
    ) -> Result<(), V::Error>
    where
        V::Error: From<Error>,
    {
        let bound = self.bound.get();
        if root.genus() > bound {
            return Err(Error::GenusAboveBound {
                genus: root.genus(),
                bound,
            }
            .into());
        }
        if root.bound() < bound {
            return Err(Error::TableTooShort {
                table: root.bound(),
                bound,
            }
            .into());
        }

        let stride = root.delta().len();
        let slots = stack_capacity(self.bound) + bound as usize + 2;
        let mut tables = vec![0u8; slots * stride];
        let mut stack = Vec::with_capacity(stack_capacity(self.bound));

        tables[..stride].copy_from_slice(root.delta());
        stack.push(StackEntry {
            conductor: root.conductor(),
            genus: root.genus(),
            multiplicity: root.multiplicity(),
            parent: u64::MAX,
            slot: 0,
        });

        let mut visited: u64 = 0;
        while let Some(entry) = stack.pop() {
            let (below, above) = tables.split_at_mut((entry.slot + 1) * stride);
            let node = SemigroupView {
                conductor: entry.conductor,
                genus: entry.genus,
                multiplicity: entry.multiplicity,
                delta: &below[entry.slot * stride..],
            };
            visitor.visit(&node)?;

            if !V::NEEDS_LEAF_TABLES && node.genus + 1 == bound {
                visitor.visit_leaves(bound, node.candidates().count() as u32)?;
            } else if node.genus < bound {
                for (i, x) in node.candidates().enumerate() {
                    let child = &mut above[i * stride..(i + 1) * stride];
                    let (conductor, genus, multiplicity) = son_into(node, x, child, self.kernel);
                    stack.push(StackEntry {
                        conductor,
                        genus,
                        multiplicity,
                        parent: visited,
                        slot: entry.slot + 1 + i,
                    });
                }
                probe.after_expand(&stack);
            }
            visited += 1;
        }
        Ok(())
    }
}

/// `[n_0, ..., n_G]` using the default kernel and 64-bit counters.
pub fn count(bound: GenusBound) -> Result<Counts<u64>> {
    Explorer::new(bound).count()
}

/// Counts restricted to the subtree rooted at `root`.
pub fn count_from(root: &Semigroup, bound: GenusBound) -> Result<Counts<u64>> {
    Explorer::new(bound).count_from(root.view())
}

/// Calls `visitor` on every semigroup of genus at most `bound`.
pub fn walk<V: Visitor>(bound: GenusBound, visitor: &mut V) -> Result<(), V::Error>
where
    V::Error: From<Error>,
{
    Explorer::new(bound).walk(visitor)
}

/// Owned copies of every semigroup of genus at most `bound`, in visit order.
pub fn collect(bound: GenusBound) -> Vec<Semigroup> {
    let mut nodes = Vec::new();
    let mut push = |node: &SemigroupView<'_>| -> Result<(), Error> {
        nodes.push(node.to_owned());
        Ok(())
    };
    walk(bound, &mut push).expect("collecting visitor never fails");
    nodes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bound(g: u32) -> GenusBound {
        GenusBound::new(g).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(bound(5)).unwrap().as_slice(), &[1, 1, 2, 4, 7, 12]);
        assert_eq!(count(bound(0)).unwrap().as_slice(), &[1]);
    }

    #[test]
    fn scalar_and_vector_kernels_count_alike() {
        let scalar: Counts<u64> = Explorer::new(bound(16))
            .kernel(Kernel::Scalar)
            .count()
            .unwrap();
        let vector: Counts<u64> = Explorer::new(bound(16))
            .kernel(Kernel::Vector)
            .count()
            .unwrap();
        assert_eq!(scalar, vector);
    }

    #[test]
    fn wider_counters_agree() {
        let narrow: Counts<u64> = Explorer::new(bound(12)).count().unwrap();
        let wide: Counts<u128> = Explorer::new(bound(12)).count().unwrap();
        let widened: Vec<u128> = narrow.as_slice().iter().map(|&n| n as u128).collect();
        assert_eq!(wide.as_slice(), widened.as_slice());
    }

    #[test]
    fn narrow_counter_overflow_is_an_error() {
        // n_14 = 1693 does not fit in a byte.
        let result: Result<Counts<u8>> = Explorer::new(bound(14)).count();
        assert!(matches!(result, Err(Error::CountOverflow { .. })));
    }

    #[test]
    fn whole_tree_from_root() {
        let b = bound(9);
        assert_eq!(
            count_from(&Semigroup::root(b), b).unwrap(),
            count(b).unwrap()
        );
    }

    #[test]
    fn leaf_at_the_bound() {
        let b = bound(3);
        let leaf = Semigroup::root(b).son(1).son(2).son(3);
        assert_eq!(leaf.genus(), 3);
        assert_eq!(count_from(&leaf, b).unwrap().as_slice(), &[0, 0, 0, 1]);
    }

    #[test]
    fn two_five_chain() {
        let b = bound(4);
        let two_five = Semigroup::root(b).son(1).son(3);
        assert_eq!(two_five.to_string(), "<2,5>");
        assert_eq!(
            count_from(&two_five, b).unwrap().as_slice(),
            &[0, 0, 1, 1, 1]
        );
    }

    #[test]
    fn root_above_bound_is_rejected() {
        let big = Semigroup::root(bound(6)).son(1).son(2).son(3);
        assert_eq!(
            count_from(&big, bound(2)),
            Err(Error::GenusAboveBound { genus: 3, bound: 2 })
        );
        let short = Semigroup::root(bound(2));
        assert_eq!(
            count_from(&short, bound(4)),
            Err(Error::TableTooShort { table: 2, bound: 4 })
        );
    }

    #[test]
    fn layers_up_to_two() {
        let names: Vec<String> = collect(bound(2)).iter().map(|s| s.to_string()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["<1>", "<2,3>", "<2,5>", "<3,4,5>"]);
        assert_eq!(names[0], "<1>");
        assert_eq!(collect(bound(0)).len(), 1);
    }

    #[test]
    fn walk_totals_match_counts() {
        let b = bound(12);
        let mut by_genus = vec![0u64; 13];
        let mut visits = 0u64;
        let mut visitor = |node: &SemigroupView<'_>| -> Result<(), Error> {
            by_genus[node.genus() as usize] += 1;
            visits += 1;
            Ok(())
        };
        walk(b, &mut visitor).unwrap();
        let counts = count(b).unwrap();
        assert_eq!(by_genus.as_slice(), counts.as_slice());
        assert_eq!(visits, counts.total().unwrap());
    }

    #[test]
    fn visitor_failure_aborts() {
        #[derive(Debug, PartialEq)]
        enum Stop {
            Here,
            Setup,
        }
        impl From<Error> for Stop {
            fn from(_: Error) -> Self {
                Stop::Setup
            }
        }
        let mut seen = 0;
        let mut visitor = |_: &SemigroupView<'_>| {
            seen += 1;
            if seen == 5 {
                Err(Stop::Here)
            } else {
                Ok(())
            }
        };
        assert_eq!(walk(bound(10), &mut visitor), Err(Stop::Here));
        assert_eq!(seen, 5);
    }

    struct DisciplineProbe {
        bound: u32,
        max_len: usize,
    }

    impl StackProbe for DisciplineProbe {
        fn after_expand(&mut self, stack: &[StackEntry]) {
            self.max_len = self.max_len.max(stack.len());
            for pair in stack.windows(2) {
                assert!(
                    pair[0].genus <= pair[1].genus,
                    "genus decreases up the stack"
                );
                if pair[0].genus == pair[1].genus {
                    assert_eq!(
                        pair[0].parent, pair[1].parent,
                        "siblings with different fathers"
                    );
                }
            }
            assert!(stack.len() <= stack_capacity(GenusBound::new(self.bound).unwrap()));
        }
    }

    /// Tallies through `visit` only, building every leaf.
    struct FullTally(Vec<u64>);

    impl Visitor for FullTally {
        type Error = Error;

        fn visit(&mut self, node: &SemigroupView<'_>) -> Result<()> {
            self.0[node.genus() as usize] += 1;
            Ok(())
        }
    }

    #[test]
    fn leaf_shortcut_matches_full_materialization() {
        for g in [0, 1, 2, 7, 16] {
            let mut full = FullTally(vec![0; g as usize + 1]);
            walk(bound(g), &mut full).unwrap();
            assert_eq!(
                full.0.as_slice(),
                count(bound(g)).unwrap().as_slice(),
                "G = {g}"
            );
        }
        // Subtree rooted one level above the bound.
        let b = bound(5);
        let s = Semigroup::root(b).son(1).son(2).son(4).son(5);
        let mut full = FullTally(vec![0; 6]);
        Explorer::new(b).walk_from(s.view(), &mut full).unwrap();
        assert_eq!(full.0, count_from(&s, b).unwrap().into_vec());
    }

    #[test]
    fn stack_discipline_and_size() {
        for g in [1, 5, 10, 15] {
            let mut probe = DisciplineProbe {
                bound: g,
                max_len: 0,
            };
            let mut tally = FullTally(vec![0; g as usize + 1]);
            let root = Semigroup::root(bound(g));
            Explorer::new(bound(g))
                .walk_probed(root.view(), &mut tally, &mut probe)
                .unwrap();
            assert!(probe.max_len <= (g * (g + 1) / 2) as usize);
        }
    }
}
