#![allow(dead_code)]

use clap::Parser;
use vincular::cli::{run, CliError, Outcome, RunConfig};

pub fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
        .join(name)
}

/// Runs the CLI in-process, returning the outcome and captured stdout.
pub fn cli(args: &[&str]) -> (Result<Outcome, CliError>, String) {
    let config = RunConfig::try_parse_from(std::iter::once("vincular").chain(args.iter().copied()))
        .expect("arguments parse");
    let mut out = Vec::new();
    let result = run(&config, &mut out);
    (result, String::from_utf8(out).unwrap())
}

/// Permutations of 1..=n by recursive insertion.
pub fn all_perms(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, n as u32);
            out.push(q);
        }
    }
    out
}

/// Every k-subset test, 1-based positions, lexicographic.
pub fn naive_occurrences(host: &[u32], letters: &[u32], glued: &[bool]) -> Vec<Vec<usize>> {
    let n = host.len();
    let k = letters.len();
    let mut out = Vec::new();
    if n < k {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let adjacent = glued
            .iter()
            .enumerate()
            .all(|(i, &g)| !g || idx[i + 1] == idx[i] + 1);
        let ordered = (0..k)
            .all(|i| (0..k).all(|j| (host[idx[i]] < host[idx[j]]) == (letters[i] < letters[j])));
        if adjacent && ordered {
            out.push(idx.iter().map(|i| i + 1).collect());
        }
        // next combination
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
