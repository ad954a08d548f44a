//! Multi-threaded driver for the partitioned search.
//!
//! Workers pull partition indices from a shared counter and return their
//! results; the merge sorts and deduplicates, so the output does not depend
//! on the worker count or on scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use bottloc_core::search::{merge_partitions, SearchPlan};
use bottloc_core::{Error, FixedPointProfile, SearchSpec};

pub fn enumerate_parallel(spec: &SearchSpec, workers: usize) -> Result<Vec<FixedPointProfile>, Error> {
    let plan = SearchPlan::new(spec)?;
    let workers = workers.max(1);
    if workers == 1 {
        return Ok(merge_partitions(
            (0..plan.partition_count()).map(|i| plan.enumerate_partition(i)),
        ));
    }
    let next = AtomicUsize::new(0);
    let parts: Vec<Vec<FixedPointProfile>> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= plan.partition_count() {
                            break;
                        }
                        local.push(plan.enumerate_partition(i));
                    }
                    local
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    Ok(merge_partitions(parts))
}
