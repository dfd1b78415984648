//! Enumeration and counting of numerical semigroups by genus.
//!
//! A semigroup is stored through its decomposition numbers (see
//! [`semigroup`]), which turns the construction of each son in the
//! semigroup tree into one shifted, lane-parallel decrement pass
//! ([`kernel`]). [`explorer`] walks the tree depth-first, [`parallel`]
//! splits it along the ordinary semigroups, and [`oracle`] recomputes
//! everything from explicit membership bitmaps for verification.
//!
//! ```
//! use nsg_core::{count, GenusBound};
//!
//! let counts = count(GenusBound::new(7)?)?;
//! assert_eq!(counts.as_slice(), &[1, 1, 2, 4, 7, 12, 23, 39]);
//! # Ok::<(), nsg_core::Error>(())
//! ```

pub mod bound;
pub mod counter;
pub mod error;
pub mod explorer;
pub mod kernel;
pub mod known;
pub mod oracle;
pub mod parallel;
pub mod report;
pub mod semigroup;
pub mod verify;

pub use bound::{GenusBound, MAX_GENUS};
pub use counter::{Counter, Counts};
pub use error::{Error, Result};
pub use explorer::{collect, count, count_from, walk, Explorer, Visitor};
pub use kernel::Kernel;
pub use parallel::{frontier_tasks, ordinary, parallel_count, parallel_count_with, SubtreeTask};
pub use semigroup::{DecompTable, Semigroup, SemigroupView, Violation};

/// Per-genus counts with 64-bit counters; `n_60` is about `1.3e13`.
pub type GenusCounts = Counts<u64>;

/// Per-genus counts with 128-bit counters.
pub type WideGenusCounts = Counts<u128>;
