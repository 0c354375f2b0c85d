//! Enumeration split by first value across worker threads.
//!
//! Each worker takes a strided share of the first values and returns
//! its partitions tagged by first value; the merge concatenates them in
//! first-value order, so output is identical for any worker count.

use std::thread;

use vincular_core::enumerate::{
    avoiders_with_first, count_with_first, AvoiderLevel, EnumerateOptions, MAX_LEVEL_LEN,
};
use vincular_core::{EnumerateError, PatternSet};

fn run_partitions<T, F>(n: usize, jobs: usize, work: F) -> Result<Vec<T>, EnumerateError>
where
    T: Send,
    F: Fn(u32) -> Result<T, EnumerateError> + Sync,
{
    let jobs = jobs.clamp(1, n.max(1));
    let firsts: Vec<u32> = (1..=n as u32).collect();
    let mut tagged: Vec<(u32, T)> = if jobs == 1 {
        firsts
            .iter()
            .map(|&f| work(f).map(|t| (f, t)))
            .collect::<Result<_, _>>()?
    } else {
        let work = &work;
        let firsts = &firsts;
        thread::scope(|s| {
            let handles: Vec<_> = (0..jobs)
                .map(|w| {
                    s.spawn(move || {
                        firsts
                            .iter()
                            .skip(w)
                            .step_by(jobs)
                            .map(|&f| work(f).map(|t| (f, t)))
                            .collect::<Result<Vec<_>, _>>()
                    })
                })
                .collect();
            let mut all = Vec::with_capacity(n);
            for h in handles {
                all.extend(h.join().expect("enumeration worker panicked")?);
            }
            Ok::<_, EnumerateError>(all)
        })?
    };
    tagged.sort_by_key(|(f, _)| *f);
    Ok(tagged.into_iter().map(|(_, t)| t).collect())
}

pub fn count_avoiders_parallel(
    n: usize,
    set: &PatternSet,
    options: &EnumerateOptions,
    jobs: usize,
) -> Result<u64, EnumerateError> {
    options.check(n)?;
    if n == 0 {
        return Ok(1);
    }
    Ok(run_partitions(n, jobs, |f| count_with_first(n, set, f))?
        .into_iter()
        .sum())
}

pub fn enumerate_avoiders_parallel(
    n: usize,
    set: &PatternSet,
    options: &EnumerateOptions,
    jobs: usize,
) -> Result<AvoiderLevel, EnumerateError> {
    options.check(n)?;
    if n > MAX_LEVEL_LEN {
        return Err(EnumerateError::TooLong(n));
    }
    if n == 0 {
        return AvoiderLevel::from_codes(0, set.name(), vec![0]);
    }
    let parts = run_partitions(n, jobs, |f| avoiders_with_first(n, set, f))?;
    AvoiderLevel::from_codes(n, set.name(), parts.concat())
}
