//! Integer partitions in standard and frequency notation, together with the
//! elementary algebra used throughout the crate.
//!
//! A [`Partition`] is stored as a weakly decreasing list of positive parts.
//! Indices in the documentation are 1-based, so `λ_1` is the largest part and
//! `λ_i = 0` for every `i > ℓ(λ)`; [`Partition::part`] follows that convention.
//!
//! | operation | meaning |
//! |-----------|---------|
//! | [`star_add`] | componentwise sum `λ ⋆ γ` |
//! | [`scalar_mul`] | `cλ = λ ⋆ … ⋆ λ` |
//! | [`oplus_merge`] | multiset union `λ ⊕ γ` |
//! | [`shift`] | add `m` to every part |
//! | [`tail`] | the parts `≤ m` |

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the partition of zero.
///
/// `Ord` compares part lists lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing, positive, and that the
    /// size fits in a `u64`.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        let ordered = parts.windows(2).all(|w| w[0] >= w[1]);
        if !ordered || parts.last() == Some(&0) {
            return Err(Error::NotAPartition(parts));
        }
        checked_size(&parts)?;
        Ok(Partition { parts })
    }

    /// Sorts `parts` into standard order first. Zero parts are rejected.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Caller guarantees ordering, positivity and a representable size.
    pub(crate) fn from_parts_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    /// `λ_i` with 1-based `i`; zero past the last part (and for `i = 0`).
    pub fn part(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Smallest part, 0 for the empty partition.
    pub fn smallest(&self) -> u64 {
        self.parts.last().copied().unwrap_or(0)
    }

    pub fn frequencies(&self) -> FrequencyMap {
        FrequencyMap::from(self)
    }
}

fn checked_size(parts: &[u64]) -> Result<u64> {
    parts
        .iter()
        .try_fold(0u64, |acc, &p| acc.checked_add(p))
        .ok_or(Error::Overflow("summing parts"))
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Frequency notation `⟨1^{f_1}, 2^{f_2}, …⟩`: a map from part to multiplicity.
/// Zero multiplicities are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct FrequencyMap {
    entries: BTreeMap<u64, u64>,
}

impl FrequencyMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a map from `(part, frequency)` pairs, adding up repeated parts
    /// and dropping zero frequencies. Part zero is rejected.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Result<Self> {
        let mut map = FrequencyMap::new();
        for (part, freq) in pairs {
            map.add(part, freq)?;
        }
        Ok(map)
    }

    /// Adds `freq` copies of `part`.
    pub fn add(&mut self, part: u64, freq: u64) -> Result<()> {
        if part == 0 {
            return Err(Error::NotAPartition(vec![0]));
        }
        if freq == 0 {
            return Ok(());
        }
        let slot = self.entries.entry(part).or_insert(0);
        *slot = slot
            .checked_add(freq)
            .ok_or(Error::Overflow("adding frequencies"))?;
        Ok(())
    }

    /// Frequency of `part` (zero if absent).
    pub fn get(&self, part: u64) -> u64 {
        self.entries.get(&part).copied().unwrap_or(0)
    }

    /// `(part, frequency)` pairs in increasing order of part.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&p, &f)| (p, f))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct parts.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    /// Materializes standard notation.
    pub fn to_partition(&self) -> Result<Partition> {
        let mut size = 0u64;
        let mut len = 0u64;
        for (p, f) in self.iter() {
            let block = p
                .checked_mul(f)
                .ok_or(Error::Overflow("materializing frequencies"))?;
            size = size
                .checked_add(block)
                .ok_or(Error::Overflow("materializing frequencies"))?;
            len += f;
        }
        let mut parts = Vec::with_capacity(len as usize);
        for (p, f) in self.iter().rev() {
            parts.extend(std::iter::repeat_n(p, f as usize));
        }
        Ok(Partition::from_parts_unchecked(parts))
    }
}

impl From<&Partition> for FrequencyMap {
    fn from(p: &Partition) -> Self {
        let mut entries = BTreeMap::new();
        for &part in p.parts() {
            *entries.entry(part).or_insert(0) += 1;
        }
        FrequencyMap { entries }
    }
}

impl fmt::Display for FrequencyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, (p, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}^{m}")?;
        }
        write!(f, "⟩")
    }
}

/// Conjugate partition, computed from successive differences of parts:
/// the conjugate of `(λ_1, …, λ_r)` is `⟨1^{λ_1−λ_2}, 2^{λ_2−λ_3}, …, r^{λ_r}⟩`.
pub fn conjugate(p: &Partition) -> Partition {
    let r = p.len();
    let mut parts = Vec::with_capacity(p.largest() as usize);
    // Walk from the largest index down so the output is already decreasing.
    for i in (1..=r).rev() {
        let freq = p.part(i) - p.part(i + 1);
        parts.extend(std::iter::repeat_n(i as u64, freq as usize));
    }
    Partition::from_parts_unchecked(parts)
}

/// Self-conjugacy via the piecewise description: `λ_i = k` exactly when
/// `λ_{k+1} < i ≤ λ_k`, for every `k = r, r−1, …, 1`, and `λ_i = 0` past `λ_1`.
pub fn is_self_conjugate(p: &Partition) -> bool {
    let r = p.len();
    if p.largest() != r as u64 {
        return false;
    }
    for k in 1..=r {
        let lo = p.part(k + 1);
        let hi = p.part(k);
        for i in (lo + 1)..=hi {
            if p.part(i as usize) != k as u64 {
                return false;
            }
        }
    }
    true
}

/// `a ⋆ b`: componentwise sum of parts, reading missing parts as zero.
pub fn star_add(a: &Partition, b: &Partition) -> Result<Partition> {
    let len = a.len().max(b.len());
    let parts = (1..=len)
        .map(|i| {
            a.part(i)
                .checked_add(b.part(i))
                .ok_or(Error::Overflow("adding parts"))
        })
        .collect::<Result<Vec<_>>>()?;
    checked_size(&parts)?;
    Ok(Partition::from_parts_unchecked(parts))
}

/// `c·p`; zero annihilates.
pub fn scalar_mul(c: u64, p: &Partition) -> Result<Partition> {
    if c == 0 {
        return Ok(Partition::empty());
    }
    let parts = p
        .parts()
        .iter()
        .map(|&x| x.checked_mul(c).ok_or(Error::Overflow("scaling parts")))
        .collect::<Result<Vec<_>>>()?;
    checked_size(&parts)?;
    Ok(Partition::from_parts_unchecked(parts))
}

/// `a ⊕ b`: all parts of both partitions, re-sorted.
pub fn oplus_merge(a: &Partition, b: &Partition) -> Result<Partition> {
    let mut parts = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (a.parts().iter().peekable(), b.parts().iter().peekable());
    loop {
        match (x.peek(), y.peek()) {
            (Some(&&u), Some(&&v)) => {
                if u >= v {
                    parts.push(u);
                    x.next();
                } else {
                    parts.push(v);
                    y.next();
                }
            }
            (Some(_), None) => parts.extend(x.by_ref()),
            (None, Some(_)) => parts.extend(y.by_ref()),
            (None, None) => break,
        }
    }
    checked_size(&parts)?;
    Ok(Partition::from_parts_unchecked(parts))
}

/// Adds `m` to every part (`φ^m`). The empty partition is fixed.
pub fn shift(p: &Partition, m: u64) -> Result<Partition> {
    let parts = p
        .parts()
        .iter()
        .map(|&x| x.checked_add(m).ok_or(Error::Overflow("shifting parts")))
        .collect::<Result<Vec<_>>>()?;
    checked_size(&parts)?;
    Ok(Partition::from_parts_unchecked(parts))
}

/// `Tail_m(p)`: the parts of `p` that are at most `m`.
pub fn tail(p: &Partition, m: u64) -> Partition {
    let start = p.parts().partition_point(|&x| x > m);
    Partition::from_parts_unchecked(p.parts()[start..].to_vec())
}

/// Side length of the Durfee square: the largest `d` with `λ_d ≥ d`.
pub fn durfee_size(p: &Partition) -> usize {
    p.parts()
        .iter()
        .enumerate()
        .take_while(|&(i, &x)| x >= (i + 1) as u64)
        .count()
}

/// Deletes the multiset `drop` from the parts of `p`.
pub fn remove_parts(p: &Partition, drop: &FrequencyMap) -> Result<Partition> {
    let mut have = p.frequencies();
    for (part, requested) in drop.iter() {
        let available = have.get(part);
        if requested > available {
            return Err(Error::NotContained {
                part,
                requested,
                available,
            });
        }
        if requested == available {
            have.entries.remove(&part);
        } else {
            have.entries.insert(part, available - requested);
        }
    }
    have.to_partition()
}

/// Cell glyph used by the diagram renderers.
pub const CELL: char = '■';

/// Monospace Young diagram: one line per part, cells separated by spaces.
pub fn render_diagram(p: &Partition) -> String {
    if p.is_empty() {
        return "(empty)".to_string();
    }
    p.parts()
        .iter()
        .map(|&n| {
            let mut row = String::new();
            for j in 0..n {
                if j > 0 {
                    row.push(' ');
                }
                row.push(CELL);
            }
            row
        })
        .collect::<Vec<_>>()
        .join("\n")
}
