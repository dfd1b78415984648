//! Invariants of every node reachable from the root.

use proptest::prelude::*;

use nsg_core::kernel::{decrement_where_nonzero_scalar, decrement_where_nonzero_vector};
use nsg_core::semigroup::{derive_conductor, derive_genus, derive_multiplicity};
use nsg_core::{collect, count, GenusBound, Kernel, Semigroup};

#[test]
fn cached_fields_match_the_table() {
    for s in collect(GenusBound::new(12).unwrap()) {
        let delta = s.delta();
        if s.genus() == 0 {
            assert_eq!((s.conductor(), derive_conductor(delta)), (1, 0));
        } else {
            assert_eq!(s.conductor(), derive_conductor(delta));
        }
        assert_eq!(s.genus(), derive_genus(delta));
        assert_eq!(s.multiplicity(), derive_multiplicity(delta));
        assert!(s.validate().is_empty(), "{s:?}: {:?}", s.validate());
    }
}

#[test]
fn membership_is_closed_under_addition() {
    let g = 10;
    for s in collect(GenusBound::new(g).unwrap()) {
        let half = (3 * g / 2) as u64;
        for a in (0..=half).filter(|&a| s.contains(a)) {
            for b in (0..=half).filter(|&b| s.contains(b)) {
                assert!(s.contains(a + b), "{s:?}: {a} + {b}");
            }
        }
    }
}

#[test]
fn kernel_on_root_tables_builds_two_three() {
    let g = 7;
    let bound = GenusBound::new(g).unwrap();
    let root = Semigroup::root(bound);
    let len = root.delta().len();
    for kernel in [
        decrement_where_nonzero_scalar,
        decrement_where_nonzero_vector,
    ] {
        let mut child = root.delta().to_vec();
        kernel(&root.delta()[..len - 1], &mut child[1..], len - 1);
        // Oracle for {0, 2, 3, 4, ...}: pairs y <= z with neither equal to 1.
        let expected: Vec<u8> = (0..len)
            .map(|x| (0..=x / 2).filter(|&y| y != 1 && x - y != 1).count() as u8)
            .collect();
        assert_eq!(child, expected);
    }
}

fn arbitrary_path() -> impl Strategy<Value = Vec<prop::sample::Index>> {
    prop::collection::vec(any::<prop::sample::Index>(), 0..25)
}

proptest! {
    // Random descents down the tree at a large bound.
    #[test]
    fn random_descents_stay_consistent(path in arbitrary_path()) {
        let bound = GenusBound::new(40).unwrap();
        let mut s = Semigroup::root(bound);
        for step in path {
            let candidates = s.son_candidates();
            prop_assert!(candidates.len() as u32 <= s.multiplicity());
            if candidates.is_empty() {
                break;
            }
            let x = candidates[step.index(candidates.len())];
            let scalar = s.son_with(x, Kernel::Scalar);
            let vector = s.son_with(x, Kernel::Vector);
            prop_assert_eq!(&scalar, &vector);
            s = vector;
            prop_assert!(s.validate().is_empty(), "{:?}", s.validate());
            let c = s.conductor();
            for member in (0..c).filter(|&y| s.contains(y as u64)) {
                prop_assert!(!s.contains((c - 1 - member) as u64));
            }
        }
    }
}

#[test]
fn serial_counts_through_genus_eighteen() {
    let counts = count(GenusBound::new(18).unwrap()).unwrap();
    assert_eq!(counts.as_slice(), &nsg_core::known::KNOWN_COUNTS[..=18]);
}
