//! Exhaustive enumerators.
//!
//! Every list comes out in reverse lexicographic order of the part vectors:
//! `(4), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)`. The `visit_*` functions
//! stream parts through a single reused buffer and are what the analysis
//! code uses; the `enumerate_*` functions collect [`Partition`]s.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::general::{is_in_sjk, is_in_sk};
use crate::ideal::IdealSpec;
use crate::partition::{is_self_conjugate, Partition};
use crate::seqcong::{first_congruence_failure, from_c_notation, CNotation};

/// Calls `f` on every partition of `n` with parts at most `max_part` and at
/// most `max_len` parts, in reverse lexicographic order.
pub fn visit_partitions(n: u64, max_part: u64, max_len: usize, f: &mut impl FnMut(&[u64])) {
    let _ = try_visit_partitions(n, max_part, max_len, &mut |parts| -> ControlFlow<()> {
        f(parts);
        ControlFlow::Continue(())
    });
}

/// [`visit_partitions`] that stops as soon as `f` breaks.
pub fn try_visit_partitions<B>(
    n: u64,
    max_part: u64,
    max_len: usize,
    f: &mut impl FnMut(&[u64]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let mut buf = Vec::with_capacity(max_len.min(n as usize));
    visit_rec(n, max_part, max_len, &mut buf, f)
}

fn visit_rec<B>(
    rem: u64,
    cap: u64,
    slots: usize,
    buf: &mut Vec<u64>,
    f: &mut impl FnMut(&[u64]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if rem == 0 {
        return f(buf);
    }
    if slots == 0 {
        return ControlFlow::Continue(());
    }
    let top = cap.min(rem);
    // The remaining parts can absorb at most `slots * part`.
    let floor = rem.div_ceil(slots as u64);
    for part in (floor.max(1)..=top).rev() {
        buf.push(part);
        let flow = visit_rec(rem - part, part, slots - 1, buf, f);
        buf.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Calls `f` on every partition whose parts are drawn from `allowed`
/// (any order, duplicates ignored) and which sum to `n`.
pub fn visit_with_parts_from(allowed: &[u64], n: u64, f: &mut impl FnMut(&[u64])) {
    let mut parts: Vec<u64> = allowed
        .iter()
        .copied()
        .filter(|&x| x > 0 && x <= n)
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts.dedup();
    let mut buf = Vec::new();
    restricted_rec(&parts, n, &mut buf, f);
}

fn restricted_rec(parts: &[u64], rem: u64, buf: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
    if rem == 0 {
        f(buf);
        return;
    }
    for (i, &part) in parts.iter().enumerate() {
        if part <= rem {
            buf.push(part);
            restricted_rec(&parts[i..], rem - part, buf, f);
            buf.pop();
        }
    }
}

fn collect(visit: impl FnOnce(&mut dyn FnMut(&[u64]))) -> Vec<Partition> {
    let mut out = Vec::new();
    visit(&mut |parts: &[u64]| out.push(Partition::from_parts_unchecked(parts.to_vec())));
    out
}

/// All partitions of `n`.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    collect(|f| visit_partitions(n, n, n as usize, &mut |p| f(p)))
}

/// All partitions of `n` with parts from `allowed`.
pub fn enumerate_with_parts_from(allowed: &[u64], n: u64) -> Vec<Partition> {
    collect(|f| visit_with_parts_from(allowed, n, &mut |p| f(p)))
}

/// Every coefficient vector (no trailing zeros) with `Σ weight(i)·c_i = n`.
fn coefficient_vectors(n: u64, weight: impl Fn(u64) -> u64) -> Vec<Vec<u64>> {
    let mut top = 0u64;
    while weight(top + 1) <= n && top < n {
        top += 1;
    }
    let mut out = Vec::new();
    let mut c = vec![0u64; top as usize];
    vectors_rec(n, top, &weight, &mut c, &mut out);
    out
}

fn vectors_rec(
    rem: u64,
    i: u64,
    weight: &impl Fn(u64) -> u64,
    c: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if i == 0 {
        if rem == 0 {
            let mut v = c.clone();
            while v.last() == Some(&0) {
                v.pop();
            }
            out.push(v);
        }
        return;
    }
    let w = weight(i);
    for k in 0..=rem / w {
        c[i as usize - 1] = k;
        vectors_rec(rem - k * w, i - 1, weight, c, out);
    }
    c[i as usize - 1] = 0;
}

fn decode_sorted(vectors: Vec<Vec<u64>>) -> Vec<Partition> {
    let mut out: Vec<Partition> = vectors
        .into_iter()
        .map(|c| from_c_notation(&CNotation::trimmed(c)).expect("coefficients fit"))
        .collect();
    out.sort_by(|a, b| b.parts().cmp(a.parts()));
    out
}

/// Sequentially congruent partitions of size `n`: c-vectors with
/// `Σ i²·c_i = n`.
pub fn enumerate_seqcong_by_size(n: u64) -> Vec<Partition> {
    decode_sorted(coefficient_vectors(n, |i| i * i))
}

/// Sequentially congruent partitions with largest part `n`: c-vectors with
/// `Σ i·c_i = n`. There are `p(n)` of them.
pub fn enumerate_seqcong_by_largest(n: u64) -> Vec<Partition> {
    decode_sorted(coefficient_vectors(n, |i| i))
}

/// Members of `S(k)` with largest part `n`: difference vectors `d` with
/// `λ_i − λ_{i+1} = d_i·i^k` and `Σ d_i·i^k = n`. Requires `k ≥ 1`; `k = 1`
/// gives [`enumerate_seqcong_by_largest`].
pub fn enumerate_sk_by_largest(n: u64, k: u32) -> Result<Vec<Partition>> {
    sk_vectors(n, k, 0)
}

/// Members of `S(k)` of size `n`: `Σ d_i·i^{k+1} = n`.
pub fn enumerate_sk_by_size(n: u64, k: u32) -> Result<Vec<Partition>> {
    sk_vectors(n, k, 1)
}

fn sk_vectors(n: u64, k: u32, extra: u32) -> Result<Vec<Partition>> {
    if k == 0 {
        return Err(Error::ParameterRange("S(k) needs k ≥ 1".into()));
    }
    let step = |i: u64| i.saturating_pow(k);
    let vectors = coefficient_vectors(n, |i| i.saturating_pow(k + extra));
    let mut out: Vec<Partition> = vectors
        .into_iter()
        .map(|d| {
            let mut rows = vec![0u64; d.len()];
            let mut acc = 0u64;
            for i in (0..d.len()).rev() {
                acc += d[i] * step(i as u64 + 1);
                rows[i] = acc;
            }
            Partition::from_parts_unchecked(rows)
        })
        .collect();
    out.sort_by(|a, b| b.parts().cmp(a.parts()));
    Ok(out)
}

/// Partition properties that the counting and enumeration front ends accept.
///
/// Text tags: `all`, `seqcong`, `squares`, `powers:k`, `sk:k`, `sjk:j:k`,
/// `selfconj`, or any ideal kind accepted by [`IdealSpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    All,
    SeqCong,
    /// Every part is a perfect square.
    Squares,
    /// Every part is a perfect `k`-th power.
    Powers(u32),
    /// `λ_i ≡ λ_{i+1} (mod i^k)`, `λ_r ≡ 0 (mod r^k)`.
    Sk(u32),
    /// `λ_i − λ_{i+1} = j·i^k`, `λ_r = j·r^k`.
    Sjk(u64, u32),
    SelfConjugate,
    Ideal(IdealSpec),
}

fn is_perfect_power(x: u64, k: u32) -> bool {
    if k <= 1 {
        return k == 1 || x == 1;
    }
    let mut root = (x as f64).powf(1.0 / k as f64).round() as u64;
    root = root.saturating_sub(1);
    (root..=root + 2).any(|r| r.checked_pow(k) == Some(x))
}

impl Predicate {
    pub fn test(&self, parts: &[u64]) -> bool {
        match self {
            Predicate::All => true,
            Predicate::SeqCong => first_congruence_failure(parts).is_none(),
            Predicate::Squares => parts.iter().all(|&x| is_perfect_power(x, 2)),
            Predicate::Powers(k) => parts.iter().all(|&x| is_perfect_power(x, *k)),
            Predicate::Sk(k) => is_in_sk(&Partition::from_parts_unchecked(parts.to_vec()), *k),
            Predicate::Sjk(j, k) => {
                is_in_sjk(&Partition::from_parts_unchecked(parts.to_vec()), *j, *k)
            }
            Predicate::SelfConjugate => {
                is_self_conjugate(&Partition::from_parts_unchecked(parts.to_vec()))
            }
            Predicate::Ideal(spec) => spec.contains(parts),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::All => write!(f, "all"),
            Predicate::SeqCong => write!(f, "seqcong"),
            Predicate::Squares => write!(f, "squares"),
            Predicate::Powers(k) => write!(f, "powers:{k}"),
            Predicate::Sk(k) => write!(f, "sk:{k}"),
            Predicate::Sjk(j, k) => write!(f, "sjk:{j}:{k}"),
            Predicate::SelfConjugate => write!(f, "selfconj"),
            Predicate::Ideal(spec) => write!(f, "{spec}"),
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| -> Result<u64> {
            t.parse()
                .map_err(|_| Error::ParameterRange(format!("bad number {t:?} in predicate {s:?}")))
        };
        let exp = |t: &str| -> Result<u32> {
            t.parse().map_err(|_| {
                Error::ParameterRange(format!("bad exponent {t:?} in predicate {s:?}"))
            })
        };
        Ok(match fields.as_slice() {
            ["all"] => Predicate::All,
            ["seqcong"] => Predicate::SeqCong,
            ["squares"] => Predicate::Squares,
            ["selfconj"] => Predicate::SelfConjugate,
            ["powers", k] => match exp(k)? {
                0 => return Err(Error::ParameterRange("powers:k needs k ≥ 1".into())),
                k => Predicate::Powers(k),
            },
            ["sk", k] => Predicate::Sk(exp(k)?),
            ["sjk", j, k] => Predicate::Sjk(num(j)?, exp(k)?),
            _ => Predicate::Ideal(s.parse()?),
        })
    }
}
