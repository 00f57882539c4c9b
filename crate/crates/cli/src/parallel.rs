//! Ordered fan-out over independent work items.
//!
//! Items are processed in batches of `workers` scoped threads and results are
//! handed to the sink in item order, so output does not depend on the worker
//! count.

use std::cell::Cell;
use std::thread;
use std::time::{Duration, Instant};

use antipal::SearchRange;

/// Chunks per worker for range scans, for progress granularity and bounded
/// buffering.
const CHUNKS_PER_WORKER: usize = 16;
const MIN_CHUNKS: usize = 64;

const PROGRESS_INTERVAL: Duration = Duration::from_secs(1);

/// Chunk counts on standard error, at most once per interval.
pub struct Progress {
    enabled: bool,
    label: &'static str,
    last: Cell<Instant>,
}

impl Progress {
    pub fn new(label: &'static str, enabled: bool) -> Self {
        Progress { enabled, label, last: Cell::new(Instant::now()) }
    }

    fn report(&self, done: usize, total: usize) {
        if self.enabled && done < total && self.last.get().elapsed() >= PROGRESS_INTERVAL {
            eprintln!("{}: {done}/{total} chunks", self.label);
            self.last.set(Instant::now());
        }
    }
}

/// Applies `work` to every item and feeds the results to `sink` in order.
/// Stops at the first error from either side.
pub fn ordered_map<I, T, E, F, S>(
    items: &[I],
    workers: usize,
    progress: &Progress,
    work: F,
    mut sink: S,
) -> Result<(), E>
where
    I: Sync,
    T: Send,
    E: Send,
    F: Fn(&I) -> Result<T, E> + Sync,
    S: FnMut(T) -> Result<(), E>,
{
    let workers = workers.max(1);
    let mut done = 0;
    for batch in items.chunks(workers) {
        let results: Vec<Result<T, E>> = if workers == 1 {
            batch.iter().map(&work).collect()
        } else {
            thread::scope(|s| {
                let handles: Vec<_> = batch.iter().map(|item| s.spawn(|| work(item))).collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("worker panicked"))
                    .collect()
            })
        };
        for r in results {
            sink(r?)?;
        }
        done += batch.len();
        progress.report(done, items.len());
    }
    Ok(())
}

/// Splits a scan range into chunks independent of how it will be scheduled.
pub fn chunks(range: SearchRange, workers: usize) -> Vec<SearchRange> {
    range.split(MIN_CHUNKS.max(workers.max(1) * CHUNKS_PER_WORKER))
}
