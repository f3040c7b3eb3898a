//! Partition ideals: sets of partitions closed under removing parts.
//!
//! Order, modulus and linked-ness quantify over all partitions, so nothing
//! here can be decided outright. Every analysis runs over the finite box of
//! an [`AnalysisBound`] and returns a verdict together with the partition
//! that witnesses it. Within a bound, partitions are visited by size and then
//! in reverse lexicographic order, so witnesses are reproducible.

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumerate::try_visit_partitions;
use crate::error::{Error, Result};
use crate::partition::{oplus_merge, shift, tail, Partition};
use crate::seqcong::first_congruence_failure;

/// Default cap on the span `l(π)` tried by [`infer_linking`].
pub const DEFAULT_SPAN_CAP: u64 = 4;

/// The builtin ideals, plus the non-ideal `S` for comparison.
///
/// Text forms: `SA`, `SA_maxlen:r`, `S`, `D`, `R`, `Rprime`, `Adiff`,
/// `N_maxlen:n`, `P_parity`, `P_mod:k`, `Pprime`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealSpec {
    /// `λ_i ≡ λ_{i+1} (mod lcm(1, …, i))`; equivalently every `j ≤ i` divides `λ_i`.
    SA,
    /// [`IdealSpec::SA`] with at most `r` parts.
    SAMaxLen(usize),
    /// Sequentially congruent partitions. Not an ideal.
    S,
    /// Distinct parts.
    D,
    /// Adjacent parts differ by at least 2.
    R,
    /// No parts below the Durfee square: smallest part at least the length.
    RPrime,
    /// `λ_{r−i} − λ_{r−i+1} ≥ i` for `1 ≤ i ≤ r − 1`.
    ADiff,
    /// At most `n` parts.
    NMaxLen(usize),
    /// All parts of the same parity.
    PParity,
    /// All parts congruent modulo `k`.
    PMod(u64),
    /// Distinct parts of the same parity.
    PPrime,
}

/// `lcm(1, …, i)` for `i = 1, 2, …` until it leaves `u64`.
fn prefix_lcms() -> impl Iterator<Item = u64> {
    (1u64..).scan(1u64, |acc, i| {
        let g = gcd(*acc, i);
        *acc = (*acc / g).checked_mul(i)?;
        Some(*acc)
    })
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `lcm(1, …, r)`, if it fits.
pub fn lcm_upto(r: u64) -> Option<u64> {
    if r == 0 {
        return Some(1);
    }
    prefix_lcms().nth(r as usize - 1)
}

fn divisible_by_all_smaller_indices(parts: &[u64]) -> bool {
    let mut lcms = prefix_lcms();
    parts.iter().all(|&x| match lcms.next() {
        Some(l) => x % l == 0,
        // lcm(1, …, i) exceeds every u64 part.
        None => false,
    })
}

fn same_residue(parts: &[u64], k: u64) -> bool {
    parts.windows(2).all(|w| w[0] % k == w[1] % k)
}

fn strictly_decreasing(parts: &[u64]) -> bool {
    parts.windows(2).all(|w| w[0] > w[1])
}

impl IdealSpec {
    /// Every builtin kind with the parameters used by the test suites.
    pub fn builtins() -> Vec<IdealSpec> {
        vec![
            IdealSpec::SA,
            IdealSpec::SAMaxLen(2),
            IdealSpec::SAMaxLen(3),
            IdealSpec::S,
            IdealSpec::D,
            IdealSpec::R,
            IdealSpec::RPrime,
            IdealSpec::ADiff,
            IdealSpec::NMaxLen(3),
            IdealSpec::PParity,
            IdealSpec::PMod(3),
            IdealSpec::PPrime,
        ]
    }

    /// Whether the kind is closed under part removal. Only `S` is not.
    pub fn is_ideal(&self) -> bool {
        !matches!(self, IdealSpec::S)
    }

    /// Membership of a weakly decreasing vector of positive parts.
    pub fn contains(&self, parts: &[u64]) -> bool {
        match *self {
            IdealSpec::SA => divisible_by_all_smaller_indices(parts),
            IdealSpec::SAMaxLen(r) => parts.len() <= r && divisible_by_all_smaller_indices(parts),
            IdealSpec::S => first_congruence_failure(parts).is_none(),
            IdealSpec::D => strictly_decreasing(parts),
            IdealSpec::R => parts.windows(2).all(|w| w[0] - w[1] >= 2),
            IdealSpec::RPrime => parts.last().is_none_or(|&x| x >= parts.len() as u64),
            IdealSpec::ADiff => {
                let r = parts.len();
                (1..r).all(|i| parts[r - 1 - i] - parts[r - i] >= i as u64)
            }
            IdealSpec::NMaxLen(n) => parts.len() <= n,
            IdealSpec::PParity => same_residue(parts, 2),
            IdealSpec::PMod(k) => same_residue(parts, k),
            IdealSpec::PPrime => same_residue(parts, 2) && strictly_decreasing(parts),
        }
    }
}

/// Membership of `p` in the set described by `s`.
pub fn is_member(s: &IdealSpec, p: &Partition) -> bool {
    s.contains(p.parts())
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealSpec::SA => write!(f, "SA"),
            IdealSpec::SAMaxLen(r) => write!(f, "SA_maxlen:{r}"),
            IdealSpec::S => write!(f, "S"),
            IdealSpec::D => write!(f, "D"),
            IdealSpec::R => write!(f, "R"),
            IdealSpec::RPrime => write!(f, "Rprime"),
            IdealSpec::ADiff => write!(f, "Adiff"),
            IdealSpec::NMaxLen(n) => write!(f, "N_maxlen:{n}"),
            IdealSpec::PParity => write!(f, "P_parity"),
            IdealSpec::PMod(k) => write!(f, "P_mod:{k}"),
            IdealSpec::PPrime => write!(f, "Pprime"),
        }
    }
}

impl FromStr for IdealSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, param) = match s.split_once(':') {
            Some((name, param)) => (name, Some(param)),
            None => (s, None),
        };
        let number = || -> Result<u64> {
            let param = param.ok_or_else(|| {
                Error::InvalidIdeal(format!("{name} needs a parameter, as in {name}:3"))
            })?;
            param
                .parse()
                .map_err(|_| Error::InvalidIdeal(format!("bad parameter {param:?} for {name}")))
        };
        let spec = match name {
            "SA_maxlen" => match number()? {
                0 => return Err(Error::InvalidIdeal("SA_maxlen needs r ≥ 1".into())),
                r => IdealSpec::SAMaxLen(r as usize),
            },
            "N_maxlen" => IdealSpec::NMaxLen(number()? as usize),
            "P_mod" => match number()? {
                0 => return Err(Error::InvalidIdeal("P_mod needs k ≥ 1".into())),
                k => IdealSpec::PMod(k),
            },
            _ if param.is_some() => {
                return Err(Error::InvalidIdeal(format!("{name} takes no parameter")))
            }
            "SA" => IdealSpec::SA,
            "S" => IdealSpec::S,
            "D" => IdealSpec::D,
            "R" => IdealSpec::R,
            "Rprime" => IdealSpec::RPrime,
            "Adiff" => IdealSpec::ADiff,
            "P_parity" => IdealSpec::PParity,
            "Pprime" => IdealSpec::PPrime,
            _ => {
                return Err(Error::InvalidIdeal(format!(
                    "unknown kind {name:?}; expected SA, SA_maxlen:r, S, D, R, Rprime, Adiff, N_maxlen:n, P_parity, P_mod:k or Pprime"
                )))
            }
        };
        Ok(spec)
    }
}

impl Serialize for IdealSpec {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IdealSpec {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The search box: parts at most `max_part`, at most `max_length` parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisBound {
    pub max_part: u64,
    pub max_length: usize,
}

impl AnalysisBound {
    pub fn new(max_part: u64, max_length: usize) -> Result<Self> {
        if max_part == 0 || max_length == 0 {
            return Err(Error::ParameterRange(
                "analysis bounds must be at least 1".into(),
            ));
        }
        Ok(AnalysisBound {
            max_part,
            max_length,
        })
    }

    /// Visits the box by size, then in reverse lexicographic order.
    pub fn try_visit<B>(&self, f: &mut impl FnMut(&[u64]) -> ControlFlow<B>) -> ControlFlow<B> {
        let largest = self.max_part * self.max_length as u64;
        for n in 0..=largest {
            try_visit_partitions(n, self.max_part, self.max_length, f)?;
        }
        ControlFlow::Continue(())
    }

    pub fn visit(&self, f: &mut impl FnMut(&[u64])) {
        let _ = self.try_visit(&mut |parts| -> ControlFlow<()> {
            f(parts);
            ControlFlow::Continue(())
        });
    }

    /// First partition in the box satisfying `pred`.
    pub fn find(&self, mut pred: impl FnMut(&[u64]) -> bool) -> Option<Partition> {
        match self.try_visit(&mut |parts| {
            if pred(parts) {
                ControlFlow::Break(parts.to_vec())
            } else {
                ControlFlow::Continue(())
            }
        }) {
            ControlFlow::Break(parts) => Some(Partition::from_parts_unchecked(parts)),
            ControlFlow::Continue(()) => None,
        }
    }
}

fn without_one(parts: &[u64], index: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(parts.len() - 1);
    out.extend_from_slice(&parts[..index]);
    out.extend_from_slice(&parts[index + 1..]);
    out
}

/// A member that stops being a member once `removed` is taken out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureWitness {
    pub member: Partition,
    pub removed: u64,
    pub result: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ClosureVerdict {
    /// Every member in the box survives every single-part removal.
    Closed {
        members_checked: u64,
    },
    Counterexample(ClosureWitness),
}

impl ClosureVerdict {
    pub fn is_closed(&self) -> bool {
        matches!(self, ClosureVerdict::Closed { .. })
    }
}

/// Checks closure under removal of one part for every member in the box.
/// Removing several parts is a sequence of single removals, so this is the
/// whole ideal condition.
pub fn check_ideal_closure(s: &IdealSpec, b: &AnalysisBound) -> ClosureVerdict {
    let mut members = 0u64;
    let mut scratch = Vec::with_capacity(b.max_length);
    let flow = b.try_visit(&mut |parts| {
        if !s.contains(parts) {
            return ControlFlow::Continue(());
        }
        members += 1;
        for i in 0..parts.len() {
            // Removing any copy of a repeated part gives the same result.
            if i > 0 && parts[i] == parts[i - 1] {
                continue;
            }
            scratch.clear();
            scratch.extend_from_slice(&parts[..i]);
            scratch.extend_from_slice(&parts[i + 1..]);
            if !s.contains(&scratch) {
                return ControlFlow::Break(ClosureWitness {
                    member: Partition::from_parts_unchecked(parts.to_vec()),
                    removed: parts[i],
                    result: Partition::from_parts_unchecked(without_one(parts, i)),
                });
            }
        }
        ControlFlow::Continue(())
    });
    match flow {
        ControlFlow::Break(w) => ClosureVerdict::Counterexample(w),
        ControlFlow::Continue(()) => ClosureVerdict::Closed {
            members_checked: members,
        },
    }
}

/// Whether `parts ∉ 𝓘` while every restriction to parts in `[m, m + k − 1]`
/// is in `𝓘`: such a partition shows the order exceeds `k`.
pub fn is_order_witness(s: &IdealSpec, parts: &[u64], k: u64) -> bool {
    if s.contains(parts) || k == 0 {
        return false;
    }
    let largest = parts.first().copied().unwrap_or(0);
    let mut window = Vec::with_capacity(parts.len());
    (1..=largest).all(|m| {
        let hi = m.saturating_add(k - 1);
        window.clear();
        window.extend(parts.iter().copied().filter(|&x| x >= m && x <= hi));
        s.contains(&window)
    })
}

/// Whether `parts ∉ 𝓘` while every restriction to `k` consecutive distinct
/// part values (keeping their frequencies) is in `𝓘`: a weak-order witness.
pub fn is_weak_order_witness(s: &IdealSpec, parts: &[u64], k: usize) -> bool {
    if s.contains(parts) || k == 0 {
        return false;
    }
    let mut values: Vec<u64> = parts.to_vec();
    values.dedup();
    if values.len() <= k {
        return false;
    }
    let mut window = Vec::with_capacity(parts.len());
    values.windows(k).all(|w| {
        let (hi, lo) = (w[0], w[k - 1]);
        window.clear();
        window.extend(parts.iter().copied().filter(|&x| x >= lo && x <= hi));
        s.contains(&window)
    })
}

/// First partition in the box witnessing order greater than `k`.
pub fn order_refute(s: &IdealSpec, k: u64, b: &AnalysisBound) -> Option<Partition> {
    b.find(|parts| is_order_witness(s, parts, k))
}

/// First partition in the box witnessing weak order greater than `k`.
pub fn weak_order_refute(s: &IdealSpec, k: usize, b: &AnalysisBound) -> Option<Partition> {
    b.find(|parts| is_weak_order_witness(s, parts, k))
}

/// Bounded evidence about an order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "estimate", rename_all = "snake_case")]
pub enum OrderEstimate {
    /// The smallest `k` with no witness in the box.
    Finite { k: u64 },
    /// Witnesses exist for every `k` the box can distinguish; `witness` is
    /// the one for the largest such `k`.
    GrowingWithBound {
        refuted_up_to: u64,
        witness: Partition,
    },
}

/// Smallest `k < max_part` with no order witness in the box.
///
/// A window of width `max_part` covers every part in the box, so no `k ≥
/// max_part` can be refuted there; if every smaller `k` is refuted the
/// estimate is [`OrderEstimate::GrowingWithBound`].
pub fn order_estimate(s: &IdealSpec, b: &AnalysisBound) -> OrderEstimate {
    let mut last = None;
    for k in 1..b.max_part {
        match order_refute(s, k, b) {
            None => return OrderEstimate::Finite { k },
            Some(w) => last = Some(w),
        }
    }
    match last {
        Some(witness) => OrderEstimate::GrowingWithBound {
            refuted_up_to: b.max_part - 1,
            witness,
        },
        None => OrderEstimate::Finite { k: b.max_part },
    }
}

/// Weak-order analogue of [`order_estimate`]. A partition in the box has at
/// most `min(max_part, max_length)` distinct parts, which caps the `k` that
/// can be refuted.
pub fn weak_order_estimate(s: &IdealSpec, b: &AnalysisBound) -> OrderEstimate {
    let limit = (b.max_part as usize).min(b.max_length);
    let mut last = None;
    for k in 1..limit {
        match weak_order_refute(s, k, b) {
            None => return OrderEstimate::Finite { k: k as u64 },
            Some(w) => last = Some(w),
        }
    }
    match last {
        Some(witness) => OrderEstimate::GrowingWithBound {
            refuted_up_to: limit as u64 - 1,
            witness,
        },
        None => OrderEstimate::Finite { k: limit as u64 },
    }
}

/// Which half of `φ^m 𝓘 = 𝓘^{(m)}` broke.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModulusFailure {
    /// `member + m` (every part) is not a member.
    ShiftLeavesIdeal,
    /// `member` has all parts above `m`, but `member − m` is not a member.
    NotAShift,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModulusWitness {
    pub failure: ModulusFailure,
    pub member: Partition,
    pub image: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ModulusVerdict {
    Holds { members_checked: u64 },
    Fails(ModulusWitness),
}

impl ModulusVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, ModulusVerdict::Holds { .. })
    }
}

/// Checks `φ^m 𝓘 = 𝓘^{(m)}` on the box: shifting a member by `m` gives a
/// member, and every member whose parts all exceed `m` is such a shift.
pub fn check_modulus(s: &IdealSpec, m: u64, b: &AnalysisBound) -> ModulusVerdict {
    let mut members = 0u64;
    let mut scratch = Vec::with_capacity(b.max_length);
    let flow = b.try_visit(&mut |parts| {
        if !s.contains(parts) {
            return ControlFlow::Continue(());
        }
        members += 1;
        scratch.clear();
        scratch.extend(parts.iter().map(|&x| x + m));
        if !s.contains(&scratch) {
            return ControlFlow::Break(ModulusWitness {
                failure: ModulusFailure::ShiftLeavesIdeal,
                member: Partition::from_parts_unchecked(parts.to_vec()),
                image: Partition::from_parts_unchecked(scratch.clone()),
            });
        }
        if parts.last().is_none_or(|&x| x > m) {
            scratch.clear();
            scratch.extend(parts.iter().map(|&x| x - m));
            if !s.contains(&scratch) {
                return ControlFlow::Break(ModulusWitness {
                    failure: ModulusFailure::NotAShift,
                    member: Partition::from_parts_unchecked(parts.to_vec()),
                    image: Partition::from_parts_unchecked(scratch.clone()),
                });
            }
        }
        ControlFlow::Continue(())
    });
    match flow {
        ControlFlow::Break(w) => ModulusVerdict::Fails(w),
        ControlFlow::Continue(()) => ModulusVerdict::Holds {
            members_checked: members,
        },
    }
}

/// `L_𝓘` for modulus `m`: the members with every part at most `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LSet {
    Finite {
        members: Vec<Partition>,
    },
    /// Some member reaches `max_length` parts, so longer ones may exist.
    /// `members` lists what the box holds.
    InfiniteWithinBound {
        members: Vec<Partition>,
    },
}

impl LSet {
    pub fn members(&self) -> &[Partition] {
        match self {
            LSet::Finite { members } | LSet::InfiniteWithinBound { members } => members,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, LSet::Finite { .. })
    }
}

/// Members with parts at most `m` and at most `max_length` parts, ordered by
/// size and then reverse lexicographically. Finiteness is judged by whether
/// the length cap is reached.
pub fn compute_l(s: &IdealSpec, m: u64, b: &AnalysisBound) -> LSet {
    let capped = AnalysisBound {
        max_part: m,
        max_length: b.max_length,
    };
    let mut members = Vec::new();
    let mut at_cap = false;
    capped.visit(&mut |parts| {
        if s.contains(parts) {
            at_cap |= parts.len() == b.max_length;
            members.push(Partition::from_parts_unchecked(parts.to_vec()));
        }
    });
    if at_cap {
        LSet::InfiniteWithinBound { members }
    } else {
        LSet::Finite { members }
    }
}

fn require_modulus(m: u64) -> Result<()> {
    if m == 0 {
        Err(Error::ParameterRange(
            "the modulus must be at least 1".into(),
        ))
    } else {
        Ok(())
    }
}

/// Splits `p` into blocks of width `m`: `π_i` holds the parts in
/// `((i−1)m, im]`, each reduced by `(i−1)m`. The list has `⌈λ_1/m⌉`
/// entries, so the empty partition gives an empty list.
pub fn andrews_decompose(p: &Partition, m: u64) -> Result<Vec<Partition>> {
    require_modulus(m)?;
    let blocks = p.largest().div_ceil(m) as usize;
    let mut pieces = vec![Vec::new(); blocks];
    for &x in p.parts() {
        let i = ((x - 1) / m) as usize;
        pieces[i].push(x - i as u64 * m);
    }
    Ok(pieces
        .into_iter()
        .map(Partition::from_parts_unchecked)
        .collect())
}

/// Inverse of [`andrews_decompose`]: `π_1 ⊕ φ^m π_2 ⊕ φ^{2m} π_3 ⊕ …`.
pub fn andrews_compose(pieces: &[Partition], m: u64) -> Result<Partition> {
    require_modulus(m)?;
    let mut out = Partition::empty();
    for (i, piece) in pieces.iter().enumerate() {
        let offset = (i as u64)
            .checked_mul(m)
            .ok_or(Error::Overflow("composing blocks"))?;
        out = oplus_merge(&out, &shift(piece, offset)?)?;
    }
    Ok(out)
}

/// The `π̃ ∈ 𝓘` with `λ = π ⊕ φ^{span·m} π̃`, if there is one.
pub fn link_representation(
    s: &IdealSpec,
    lambda: &Partition,
    pi: &Partition,
    m: u64,
    span: u64,
) -> Option<Partition> {
    if tail(lambda, m) != *pi {
        return None;
    }
    let gap = span.checked_mul(m)?;
    let parts = lambda.parts();
    // Parts in (m, span·m] cannot come from either piece.
    if parts.iter().any(|&x| x > m && x <= gap) {
        return None;
    }
    let rest: Vec<u64> = parts
        .iter()
        .filter(|&&x| x > gap)
        .map(|&x| x - gap)
        .collect();
    s.contains(&rest)
        .then(|| Partition::from_parts_unchecked(rest))
}

/// Why a span does not work for some `π ∈ L_𝓘`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "conflict", rename_all = "snake_case")]
pub enum LinkConflict {
    /// A member with tail `π` has no representation `π ⊕ φ^{lm} π̃` with `π̃ ∈ 𝓘`.
    Unrepresentable { member: Partition },
    /// A member and a non-member share the tail of their `π̃`, so no linking
    /// set separates them.
    SharedTail {
        member: Partition,
        non_member: Partition,
        tail: Partition,
    },
}

/// A failed span with one conflict per offending tail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanAttempt {
    pub span: u64,
    pub conflicts: Vec<LinkConflict>,
}

/// Linking data for one `π ∈ L_𝓘`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkEntry {
    pub pi: Partition,
    pub span: u64,
    pub linking_set: Vec<Partition>,
}

/// A `π ∈ L_𝓘` for which every span up to the cap fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkFailure {
    pub pi: Partition,
    pub attempts: Vec<SpanAttempt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkVerdict {
    LinkedWithinBound,
    /// Some `π` has no consistent span and linking set; see `failures`.
    Refuted,
    /// `m` is not a modulus; see `modulus_witness`.
    NoModulus,
    LInfiniteWithinBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkReport {
    pub ideal: IdealSpec,
    pub modulus: u64,
    pub bound: AnalysisBound,
    pub span_cap: u64,
    pub verdict: LinkVerdict,
    pub modulus_witness: Option<ModulusWitness>,
    pub l_set: Vec<Partition>,
    pub entries: Vec<LinkEntry>,
    pub failures: Vec<LinkFailure>,
}

impl LinkReport {
    pub fn entry(&self, pi: &Partition) -> Option<&LinkEntry> {
        self.entries.iter().find(|e| e.pi == *pi)
    }

    pub fn failure(&self, pi: &Partition) -> Option<&LinkFailure> {
        self.failures.iter().find(|f| f.pi == *pi)
    }
}

/// [`infer_linking_with_cap`] with [`DEFAULT_SPAN_CAP`].
pub fn infer_linking(s: &IdealSpec, m: u64, b: &AnalysisBound) -> LinkReport {
    infer_linking_with_cap(s, m, b, DEFAULT_SPAN_CAP)
}

/// Searches for spans and linking sets such that, for every `λ` in the box
/// with `Tail_m(λ) = π`, `λ ∈ 𝓘` exactly when `λ = π ⊕ φ^{l(π)m} π̃` for some
/// `π̃ ∈ 𝓘` with `Tail_m(π̃) ∈ 𝓛(π)`.
///
/// For a fixed span, the tails of the members' `π̃` must all be in `𝓛(π)`
/// and the tails of the representable non-members must all be outside it.
/// The span works iff these two sets are disjoint, and then the first set is
/// the unique minimal linking set. Spans are tried from `span_cap` down to
/// 1 and the largest that works is kept.
pub fn infer_linking_with_cap(
    s: &IdealSpec,
    m: u64,
    b: &AnalysisBound,
    span_cap: u64,
) -> LinkReport {
    let mut report = LinkReport {
        ideal: *s,
        modulus: m,
        bound: *b,
        span_cap,
        verdict: LinkVerdict::LinkedWithinBound,
        modulus_witness: None,
        l_set: Vec::new(),
        entries: Vec::new(),
        failures: Vec::new(),
    };
    if m == 0 {
        report.verdict = LinkVerdict::NoModulus;
        return report;
    }
    if let ModulusVerdict::Fails(w) = check_modulus(s, m, b) {
        report.verdict = LinkVerdict::NoModulus;
        report.modulus_witness = Some(w);
        return report;
    }
    let l_set = compute_l(s, m, b);
    report.l_set = l_set.members().to_vec();
    if !l_set.is_finite() {
        report.verdict = LinkVerdict::LInfiniteWithinBound;
        return report;
    }

    let mut by_tail: HashMap<Vec<u64>, Vec<(Partition, bool)>> = HashMap::new();
    b.visit(&mut |parts| {
        let key: Vec<u64> = parts.iter().copied().filter(|&x| x <= m).collect();
        by_tail.entry(key).or_default().push((
            Partition::from_parts_unchecked(parts.to_vec()),
            s.contains(parts),
        ));
    });
    let position = |p: &Partition| {
        report
            .l_set
            .iter()
            .position(|q| q == p)
            .unwrap_or(usize::MAX)
    };

    for pi in &report.l_set {
        let group = by_tail.get(pi.parts()).map(Vec::as_slice).unwrap_or(&[]);
        let mut attempts = Vec::new();
        let mut found = None;
        for span in (1..=span_cap).rev() {
            match try_span(s, pi, m, span, group) {
                Ok(mut set) => {
                    set.sort_by_key(|p| position(p));
                    found = Some(LinkEntry {
                        pi: pi.clone(),
                        span,
                        linking_set: set,
                    });
                    break;
                }
                Err(conflicts) => attempts.push(SpanAttempt { span, conflicts }),
            }
        }
        match found {
            Some(entry) => report.entries.push(entry),
            None => {
                attempts.reverse();
                report.failures.push(LinkFailure {
                    pi: pi.clone(),
                    attempts,
                });
            }
        }
    }
    if !report.failures.is_empty() {
        report.verdict = LinkVerdict::Refuted;
    }
    report
}

fn try_span(
    s: &IdealSpec,
    pi: &Partition,
    m: u64,
    span: u64,
    group: &[(Partition, bool)],
) -> std::result::Result<Vec<Partition>, Vec<LinkConflict>> {
    // Tails in order of first appearance, with the partition that produced them.
    let mut required: Vec<(Partition, &Partition)> = Vec::new();
    let mut forbidden: HashMap<Partition, &Partition> = HashMap::new();
    for (lambda, member) in group {
        let rep = link_representation(s, lambda, pi, m, span).map(|t| tail(&t, m));
        match (rep, member) {
            (None, true) => {
                return Err(vec![LinkConflict::Unrepresentable {
                    member: lambda.clone(),
                }])
            }
            (None, false) => {}
            (Some(t), true) => {
                if !required.iter().any(|(r, _)| *r == t) {
                    required.push((t, lambda));
                }
            }
            (Some(t), false) => {
                forbidden.entry(t).or_insert(lambda);
            }
        }
    }
    let conflicts: Vec<LinkConflict> = required
        .iter()
        .filter_map(|(t, member)| {
            forbidden.get(t).map(|non_member| LinkConflict::SharedTail {
                member: (*member).clone(),
                non_member: (*non_member).clone(),
                tail: t.clone(),
            })
        })
        .collect();
    if conflicts.is_empty() {
        Ok(required.into_iter().map(|(t, _)| t).collect())
    } else {
        Err(conflicts)
    }
}

/// The obstruction to linking a length-bounded subideal of `SA`: with
/// `m = lcm(1, …, r)`, `(m + 2, 2)` is a member while `(2m + 2, m + 2, 2)`,
/// which a span-1 link from `(2)` would also admit, is not even
/// sequentially congruent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkingCounterexample {
    pub r: usize,
    pub modulus: u64,
    pub member: Partition,
    pub forced: Partition,
    pub member_in_ideal: bool,
    pub forced_sequentially_congruent: bool,
}

/// Builds [`LinkingCounterexample`] for `SA_maxlen:r`. Needs `r ≥ 2`.
pub fn linking_counterexample(r: usize) -> Result<LinkingCounterexample> {
    if r < 2 {
        return Err(Error::ParameterRange("the construction needs r ≥ 2".into()));
    }
    let m = lcm_upto(r as u64).ok_or(Error::Overflow("computing lcm(1, …, r)"))?;
    let overflow = Error::Overflow("building the counterexample");
    let m2 = m.checked_add(2).ok_or(overflow.clone())?;
    let top = m
        .checked_mul(2)
        .and_then(|x| x.checked_add(2))
        .ok_or(overflow)?;
    let member = Partition::new(vec![m2, 2])?;
    let forced = Partition::new(vec![top, m2, 2])?;
    Ok(LinkingCounterexample {
        r,
        modulus: m,
        member_in_ideal: IdealSpec::SAMaxLen(r).contains(member.parts()),
        forced_sequentially_congruent: IdealSpec::S.contains(forced.parts()),
        member,
        forced,
    })
}

/// For sequentially congruent `p ∉ SA`, a partition obtained from `p` by
/// removing parts that is not sequentially congruent: pick `λ_i` and
/// `k ≤ i` with `k ∤ λ_i`, drop the parts after `λ_i` and the first
/// `i − k`, leaving `λ_i` last at index `k`.
pub fn maximality_witness(p: &Partition) -> Option<Partition> {
    let parts = p.parts();
    if !IdealSpec::S.contains(parts) || IdealSpec::SA.contains(parts) {
        return None;
    }
    for (idx, &x) in parts.iter().enumerate() {
        let i = idx + 1;
        if let Some(k) = (1..=i).find(|&k| x % k as u64 != 0) {
            return Some(Partition::from_parts_unchecked(parts[i - k..i].to_vec()));
        }
    }
    None
}
