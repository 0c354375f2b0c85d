//! Reference implementations used only as test oracles. None of these
//! call into the library's matching or construction code.
#![allow(dead_code)]

/// All permutations of 1..=n, by recursive insertion (not lexicographic).
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

/// All increasing k-tuples of 0-based indices below n.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every vincular pattern of length 1..=max_k with every dash structure,
/// as (letters, glued).
pub fn all_patterns(max_k: usize) -> Vec<(Vec<u32>, Vec<bool>)> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        for letters in all_perms(k) {
            for mask in 0..(1u32 << (k - 1)) {
                let glued = (0..k - 1).map(|i| mask & (1 << i) != 0).collect();
                out.push((letters.clone(), glued));
            }
        }
    }
    out
}

/// Pairwise comparison of every index pair.
pub fn order_isomorphic(xs: &[u32], ys: &[u32]) -> bool {
    xs.len() == ys.len()
        && (0..xs.len()).all(|i| (0..xs.len()).all(|j| (xs[i] < xs[j]) == (ys[i] < ys[j])))
}

/// Naive matcher: test every k-subset of positions. 1-based output,
/// lexicographic order.
pub fn naive_occurrences(host: &[u32], letters: &[u32], glued: &[bool]) -> Vec<Vec<usize>> {
    let k = letters.len();
    if host.len() < k {
        return vec![];
    }
    subsets(host.len(), k)
        .into_iter()
        .filter(|pos| {
            glued
                .iter()
                .enumerate()
                .all(|(i, &g)| !g || pos[i + 1] == pos[i] + 1)
        })
        .filter(|pos| {
            let vals: Vec<u32> = pos.iter().map(|&p| host[p]).collect();
            order_isomorphic(&vals, letters)
        })
        .map(|pos| pos.into_iter().map(|p| p + 1).collect())
        .collect()
}

pub fn parse_literal(text: &str) -> (Vec<u32>, Vec<bool>) {
    let mut letters = Vec::new();
    let mut glued = Vec::new();
    let mut dash = false;
    for ch in text.chars() {
        if ch == '-' {
            dash = true;
        } else {
            if !letters.is_empty() {
                glued.push(!dash);
            }
            dash = false;
            letters.push(ch.to_digit(10).unwrap());
        }
    }
    (letters, glued)
}

pub const A: [&str; 4] = ["1-32-4", "1-42-3", "2-31-4", "2-41-3"];
pub const B: [&str; 4] = ["1-3-2-4", "1-4-2-3", "2-3-1-4", "2-4-1-3"];

pub fn naive_avoids(host: &[u32], set: &[&str]) -> bool {
    set.iter().all(|p| {
        let (l, g) = parse_literal(p);
        naive_occurrences(host, &l, &g).is_empty()
    })
}

/// Quadruple-loop B scan, 1-based, lexicographic.
pub fn naive_b_quadruples(host: &[u32]) -> Vec<[usize; 4]> {
    let n = host.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if host[a].max(host[c]) < host[b].min(host[d]) {
                        out.push([a + 1, b + 1, c + 1, d + 1]);
                    }
                }
            }
        }
    }
    out
}

/// Recurrence in u128, enough for the indices used in tests.
pub fn recurrence_u128(n: usize) -> u128 {
    let (mut prev, mut cur) = (1u128, 2u128); // a_1, a_2
    match n {
        0 => panic!("paper indexing starts at 1"),
        1 => return 1,
        _ => {}
    }
    for _ in 3..=n {
        let next = 4 * cur - 2 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

// Maps written from the value -> position point of view.

fn inverse(p: &[u32]) -> Vec<usize> {
    let mut pos = vec![0; p.len() + 1];
    for (i, &v) in p.iter().enumerate() {
        pos[v as usize] = i;
    }
    pos
}

/// Builds the result by placing each value at a computed slot.
fn place(len: usize, slots: impl Iterator<Item = (usize, u32)>) -> Vec<u32> {
    let mut out = vec![0; len];
    for (slot, v) in slots {
        assert_eq!(out[slot], 0);
        out[slot] = v;
    }
    out
}

pub fn naive_before(p: &[u32]) -> Vec<u32> {
    let at = inverse(p)[1];
    place(
        p.len() + 1,
        p.iter()
            .enumerate()
            .map(|(i, &v)| (if i >= at { i + 1 } else { i }, v + 1))
            .chain(std::iter::once((at, 1))),
    )
}

pub fn naive_after(p: &[u32]) -> Vec<u32> {
    let at = inverse(p)[1];
    place(
        p.len() + 1,
        p.iter()
            .enumerate()
            .map(|(i, &v)| (if i > at { i + 1 } else { i }, v + 1))
            .chain(std::iter::once((at + 1, 1))),
    )
}

pub fn naive_end_one(p: &[u32]) -> Vec<u32> {
    place(
        p.len() + 1,
        p.iter()
            .enumerate()
            .map(|(i, &v)| (i, v + 1))
            .chain(std::iter::once((p.len(), 1))),
    )
}

pub fn naive_end_two(p: &[u32]) -> Vec<u32> {
    place(
        p.len() + 1,
        p.iter()
            .enumerate()
            .map(|(i, &v)| (i, if v == 1 { 1 } else { v + 1 }))
            .chain(std::iter::once((p.len(), 2))),
    )
}
