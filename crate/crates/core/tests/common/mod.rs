//! Slow, direct reimplementations used to cross-check the library.
//!
//! Nothing here calls into the crate: each function works from the
//! definitions on plain `Vec<u64>` values.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// All partitions of `n`, built as nondecreasing part lists and reversed.
pub fn naive_partitions(n: u64) -> BTreeSet<Vec<u64>> {
    fn go(rem: u64, min: u64, acc: &mut Vec<u64>, out: &mut BTreeSet<Vec<u64>>) {
        if rem == 0 {
            let mut p = acc.clone();
            p.reverse();
            out.insert(p);
            return;
        }
        for part in min..=rem {
            acc.push(part);
            go(rem - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Every partition of every size up to `n`.
pub fn naive_partitions_upto(n: u64) -> Vec<Vec<u64>> {
    (0..=n).flat_map(naive_partitions).collect()
}

/// Conjugate by drawing the Young diagram and counting column heights.
pub fn transpose_conjugate(parts: &[u64]) -> Vec<u64> {
    let width = parts.first().copied().unwrap_or(0) as usize;
    let grid: Vec<Vec<bool>> = parts
        .iter()
        .map(|&row| (0..width).map(|c| (c as u64) < row).collect())
        .collect();
    (0..width)
        .map(|c| grid.iter().filter(|row| row[c]).count() as u64)
        .collect()
}

/// `λ_i ≡ λ_{i+1} (mod i)` and `λ_r ≡ 0 (mod r)`, straight from the definition.
pub fn seqcong_by_definition(parts: &[u64]) -> bool {
    let r = parts.len();
    (0..r).all(|i| {
        let next = if i + 1 < r { parts[i + 1] } else { 0 };
        (parts[i] - next).is_multiple_of(i as u64 + 1)
    })
}

/// `π` drawn geometrically: each column of height `h` becomes an `h × h`
/// square added to the first `h` rows.
pub fn stretch_columns(parts: &[u64]) -> Vec<u64> {
    let columns = transpose_conjugate(parts);
    let mut rows = vec![0u64; parts.len()];
    for h in columns {
        for row in rows.iter_mut().take(h as usize) {
            *row += h;
        }
    }
    rows
}

/// `σ` drawn geometrically: repeatedly cut an `r × r` square off the first
/// `r` rows, where `r` is the current length, recording `r`.
pub fn peel_squares(parts: &[u64]) -> Option<Vec<u64>> {
    let mut rows = parts.to_vec();
    let mut sides = Vec::new();
    while let Some(&last) = rows.last() {
        let r = rows.len() as u64;
        if last < r {
            return None;
        }
        for row in rows.iter_mut() {
            *row -= r;
        }
        sides.push(r);
        while rows.last() == Some(&0) {
            rows.pop();
        }
    }
    sides.sort_unstable_by(|a, b| b.cmp(a));
    Some(sides)
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Membership in `S(𝒜)` by its defining congruences
/// `λ_i ≡ λ_{i+1} (mod lcm(1, …, i))`, with `λ_{r+1} = 0`.
pub fn sa_by_lcm_congruences(parts: &[u64]) -> bool {
    let mut l = 1u64;
    for i in 0..parts.len() {
        l = lcm(l, i as u64 + 1);
        let next = parts.get(i + 1).copied().unwrap_or(0);
        if !(parts[i] - next).is_multiple_of(l) {
            return false;
        }
    }
    true
}

pub fn is_square(x: u64) -> bool {
    (1..=x).take_while(|r| r * r <= x).any(|r| r * r == x)
}

/// Number of partitions of `n` satisfying `pred`, by listing them all.
pub fn brute_count(n: u64, pred: impl Fn(&[u64]) -> bool) -> u64 {
    naive_partitions(n).iter().filter(|p| pred(p)).count() as u64
}

/// All vectors `[n_1, …, n_r]` with `n_r > 0` and `Σ weight(i)·n_i = total`.
pub fn weighted_vectors(total: u64, weight: &dyn Fn(u64) -> u64) -> Vec<Vec<u64>> {
    fn go(
        rem: u64,
        i: u64,
        weight: &dyn Fn(u64) -> u64,
        acc: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if rem == 0 {
            let mut v = acc.clone();
            while v.last() == Some(&0) {
                v.pop();
            }
            out.push(v);
            return;
        }
        let w = weight(i);
        if w > rem {
            return;
        }
        for k in 0..=rem / w {
            acc.push(k);
            go(rem - k * w, i + 1, weight, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(total, 1, weight, &mut Vec::new(), &mut out);
    out
}

/// Removes one copy of the part at `index`.
pub fn remove_at(parts: &[u64], index: usize) -> Vec<u64> {
    let mut out = parts.to_vec();
    out.remove(index);
    out
}
