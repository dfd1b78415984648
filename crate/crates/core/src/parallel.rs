//! Parallel counting by cutting the tree along its ordinary spine.
//!
//! The ordinary semigroups `{0} ∪ [g+1, ∞)` form a chain from the root, each
//! one having exactly one ordinary son. Every other semigroup lies in the
//! subtree of exactly one non-ordinary son of an ordinary semigroup. Those
//! sons are independent work items; workers pull them from a shared stream
//! and keep private tallies that are summed at the end.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;
use std::thread;

use crate::bound::GenusBound;
use crate::counter::{Counter, Counts};
use crate::error::{Error, Result};
use crate::explorer::Explorer;
use crate::kernel::Kernel;
use crate::semigroup::Semigroup;

/// A subtree to explore: a non-ordinary son of an ordinary semigroup.
#[derive(Debug, Clone)]
pub struct SubtreeTask {
    pub root: Semigroup,
    pub bound: GenusBound,
}

/// The ordinary semigroup of genus `genus`, reached from the root through
/// its chain of ordinary sons.
pub fn ordinary(genus: u32, bound: GenusBound) -> Result<Semigroup> {
    if genus > bound.get() {
        return Err(Error::GenusAboveBound {
            genus,
            bound: bound.get(),
        });
    }
    let mut s = Semigroup::root(bound);
    for _ in 0..genus {
        s = s.son(s.conductor());
    }
    Ok(s)
}

/// Lazily generated frontier tasks, ordered by (genus of the ordinary
/// parent, removed generator).
#[derive(Debug, Clone)]
pub struct FrontierTasks {
    bound: GenusBound,
    ordinary: Option<Semigroup>,
    next_x: u32,
}

/// Frontier of the tree up to `bound`: for each ordinary semigroup of genus
/// `g` in `1..G`, its `g` non-ordinary sons (removing `x` in `g+2..=2g+1`).
/// Empty when `G < 2`.
pub fn frontier_tasks(bound: GenusBound) -> FrontierTasks {
    let ordinary = (bound.get() >= 2).then(|| Semigroup::root(bound).son(1));
    let next_x = ordinary.as_ref().map_or(0, |o| o.conductor() + 1);
    FrontierTasks {
        bound,
        ordinary,
        next_x,
    }
}

impl Iterator for FrontierTasks {
    type Item = SubtreeTask;

    fn next(&mut self) -> Option<SubtreeTask> {
        loop {
            let o = self.ordinary.as_ref()?;
            if o.genus() >= self.bound.get() {
                self.ordinary = None;
                return None;
            }
            // Candidates of an ordinary node are its generators c..c+m.
            if self.next_x < o.conductor() + o.multiplicity() {
                let x = self.next_x;
                self.next_x += 1;
                return Some(SubtreeTask {
                    root: o.son(x),
                    bound: self.bound,
                });
            }
            let next = o.son(o.conductor());
            self.next_x = next.conductor() + 1;
            self.ordinary = Some(next);
        }
    }
}

/// `count(G)` computed over `workers` threads.
pub fn parallel_count(bound: GenusBound, workers: usize) -> Result<Counts<u64>> {
    parallel_count_with(bound, workers, Kernel::default())
}

pub fn parallel_count_with<C: Counter>(
    bound: GenusBound,
    workers: usize,
    kernel: Kernel,
) -> Result<Counts<C>> {
    if workers == 0 {
        return Err(Error::NoWorkers);
    }
    let explorer = Explorer::new(bound).kernel(kernel);

    // One ordinary semigroup per genus.
    let mut total = Counts::<C>::zeros(bound.get());
    for g in 0..=bound.get() {
        total.increment(g)?;
    }

    let tasks = Mutex::new(frontier_tasks(bound));
    let abort = AtomicBool::new(false);

    let run = || -> Result<Counts<C>> {
        let mut mine = Counts::<C>::zeros(bound.get());
        while !abort.load(Ordering::Relaxed) {
            let task = match tasks.lock() {
                Ok(mut stream) => stream.next(),
                Err(_) => return Err(Error::Worker("task stream poisoned".into())),
            };
            let Some(task) = task else { break };
            let sub = explorer
                .count_from::<C>(task.root.view())
                .and_then(|sub| mine.merge(&sub));
            if let Err(e) = sub {
                abort.store(true, Ordering::Relaxed);
                return Err(e);
            }
        }
        Ok(mine)
    };

    if workers == 1 {
        total.merge(&run()?)?;
        return Ok(total);
    }

    let results: Vec<Result<Counts<C>>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers).map(|_| scope.spawn(run)).collect();
        handles
            .into_iter()
            .map(|h| {
                h.join().unwrap_or_else(|panic| {
                    abort.store(true, Ordering::Relaxed);
                    Err(Error::Worker(panic_message(&panic)))
                })
            })
            .collect()
    });
    for partial in results {
        total.merge(&partial?)?;
    }
    Ok(total)
}

fn panic_message(panic: &Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = panic.downcast_ref::<&str>() {
        (*s).to_owned()
    } else if let Some(s) = panic.downcast_ref::<String>() {
        s.clone()
    } else {
        "worker panicked".to_owned()
    }
}
