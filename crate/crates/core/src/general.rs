//! Generalized sequentially congruent partitions `S_B(A)`.
//!
//! Given a sequence `A = (a_1, a_2, …)` of positive integers and a strictly
//! increasing `B = (b_1, b_2, …)`, `S_B(A)` is the set of conjugates of the
//! partitions `⟨b_1^{n_1 a_1}, b_2^{n_2 a_2}, …⟩`. Its Young diagrams are
//! tiled by `n_i` rectangles of width `a_i` and height `b_i`, and the
//! coordinates `[n_1, …, n_r]_{A,B}` are the n-notation ([`NNotation`]).
//!
//! With `A = (1, 2, 3, …)` and `B = ℕ` everything here collapses to the
//! c-notation machinery in [`crate::seqcong`].
//!
//! Infinite sequences are realized lazily from a rule tag ([`Sequence`]).
//! Any computation that needs a term past [`GenSpec::horizon`] fails with
//! [`Error::HorizonExceeded`] instead of looping.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{conjugate, Partition};
use crate::seqcong::{coefficients_as_frequencies, differences};

/// Default number of sequence terms an operation may consult.
pub const DEFAULT_HORIZON: usize = 64;

/// Decoded partitions longer than this are refused rather than allocated.
pub const MAX_DECODED_LENGTH: u64 = 1 << 24;

/// A rule for an infinite sequence of positive integers, or a finite list.
///
/// Text grammar: `nat` | `pow:k` | `arith:a` | explicit comma list `1,3,4`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Sequence {
    /// `1, 2, 3, …`
    Naturals,
    /// `1^k, 2^k, 3^k, …`; `pow:0` is the constant sequence of ones.
    Powers(u32),
    /// `a, 2a, 3a, …`
    Arithmetic(u64),
    /// A finite list; terms past its end do not exist.
    Explicit(Vec<u64>),
}

impl Sequence {
    /// Collapses the aliases of `ℕ` (`pow:1`, `arith:1`) onto [`Sequence::Naturals`].
    pub fn canonical(&self) -> Sequence {
        match self {
            Sequence::Powers(1) | Sequence::Arithmetic(1) => Sequence::Naturals,
            other => other.clone(),
        }
    }

    /// Same sequence up to aliases.
    pub fn same_as(&self, other: &Sequence) -> bool {
        self.canonical() == other.canonical()
    }

    /// 1-based term `i`, consulting at most `horizon` terms.
    pub fn term(&self, i: usize, horizon: usize) -> Result<u64> {
        if i == 0 {
            return Err(Error::ParameterRange("sequence indices start at 1".into()));
        }
        if let Sequence::Explicit(list) = self {
            return list.get(i - 1).copied().ok_or(Error::HorizonExceeded {
                index: i,
                horizon: list.len().min(horizon),
            });
        }
        if i > horizon {
            return Err(Error::HorizonExceeded { index: i, horizon });
        }
        let i = i as u64;
        match self {
            Sequence::Naturals => Ok(i),
            Sequence::Powers(k) => i
                .checked_pow(*k)
                .ok_or(Error::Overflow("evaluating a power sequence")),
            Sequence::Arithmetic(a) => a
                .checked_mul(i)
                .ok_or(Error::Overflow("evaluating an arithmetic sequence")),
            Sequence::Explicit(_) => unreachable!(),
        }
    }

    /// Whether the rule yields pairwise distinct terms.
    pub fn has_distinct_terms(&self) -> bool {
        match self {
            Sequence::Naturals | Sequence::Arithmetic(_) => true,
            Sequence::Powers(k) => *k > 0,
            Sequence::Explicit(list) => {
                let mut sorted = list.clone();
                sorted.sort_unstable();
                sorted.windows(2).all(|w| w[0] != w[1])
            }
        }
    }

    fn is_strictly_increasing(&self) -> bool {
        match self {
            Sequence::Naturals | Sequence::Arithmetic(_) => true,
            Sequence::Powers(k) => *k > 0,
            Sequence::Explicit(list) => list.windows(2).all(|w| w[0] < w[1]),
        }
    }

    fn validate_positive(&self) -> Result<()> {
        match self {
            Sequence::Arithmetic(0) => Err(Error::InvalidSequence("arith:0 has zero terms".into())),
            Sequence::Explicit(list) if list.contains(&0) => {
                Err(Error::InvalidSequence("terms must be positive".into()))
            }
            _ => Ok(()),
        }
    }

    /// First 1-based position holding `value`, if any. Increasing rules are
    /// inverted arithmetically; explicit lists are scanned.
    pub fn position_of(&self, value: u64, horizon: usize) -> Result<Option<usize>> {
        let index = match self {
            Sequence::Explicit(list) => {
                return Ok(list.iter().position(|&x| x == value).map(|i| i + 1));
            }
            Sequence::Naturals => Some(value),
            Sequence::Arithmetic(a) => value.is_multiple_of(*a).then(|| value / a),
            Sequence::Powers(0) => (value == 1).then_some(1),
            Sequence::Powers(k) => integer_root(value, *k),
        };
        match index {
            None | Some(0) => Ok(None),
            Some(i) if i > horizon as u64 => Err(Error::HorizonExceeded {
                index: usize::try_from(i).unwrap_or(usize::MAX),
                horizon,
            }),
            Some(i) => Ok(Some(i as usize)),
        }
    }
}

/// `x` with `x^k = value`, if it exists.
fn integer_root(value: u64, k: u32) -> Option<u64> {
    if value == 0 {
        return None;
    }
    let mut x = (value as f64).powf(1.0 / k as f64).round() as u64;
    x = x.max(1);
    (x.saturating_sub(1)..=x + 1).find(|&c| c > 0 && c.checked_pow(k) == Some(value))
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sequence::Naturals => write!(f, "nat"),
            Sequence::Powers(k) => write!(f, "pow:{k}"),
            Sequence::Arithmetic(a) => write!(f, "arith:{a}"),
            Sequence::Explicit(list) => {
                let terms: Vec<String> = list.iter().map(u64::to_string).collect();
                write!(f, "{}", terms.join(","))
            }
        }
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |what: &str| Error::InvalidSequence(format!("{what}: {s:?}"));
        if s == "nat" {
            return Ok(Sequence::Naturals);
        }
        if let Some(k) = s.strip_prefix("pow:") {
            return k
                .parse()
                .map(Sequence::Powers)
                .map_err(|_| bad("bad exponent"));
        }
        if let Some(a) = s.strip_prefix("arith:") {
            let a: u64 = a.parse().map_err(|_| bad("bad step"))?;
            let seq = Sequence::Arithmetic(a);
            seq.validate_positive()?;
            return Ok(seq);
        }
        let list = s
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("expected nat, pow:k, arith:a or a comma list"))?;
        let seq = Sequence::Explicit(list);
        seq.validate_positive()?;
        Ok(seq)
    }
}

impl Serialize for Sequence {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Sequence {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The parameter pair `(A, B)`. Deserialized specs are validated like
/// [`GenSpec::new`] and get the default horizon.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "GenSpecRepr", into = "GenSpecRepr")]
pub struct GenSpec {
    a: Sequence,
    b: Sequence,
    horizon: usize,
}

#[derive(Serialize, Deserialize)]
struct GenSpecRepr {
    #[serde(rename = "A")]
    a: Sequence,
    #[serde(rename = "B")]
    b: Sequence,
}

impl TryFrom<GenSpecRepr> for GenSpec {
    type Error = Error;
    fn try_from(r: GenSpecRepr) -> Result<Self> {
        GenSpec::new(r.a, r.b)
    }
}

impl From<GenSpec> for GenSpecRepr {
    fn from(s: GenSpec) -> Self {
        GenSpecRepr { a: s.a, b: s.b }
    }
}

impl GenSpec {
    /// `A` must be positive; `B` must be positive and strictly increasing.
    pub fn new(a: Sequence, b: Sequence) -> Result<Self> {
        a.validate_positive()?;
        b.validate_positive()?;
        if !b.is_strictly_increasing() {
            return Err(Error::InvalidSequence(format!(
                "B = {b} is not strictly increasing"
            )));
        }
        Ok(GenSpec {
            a,
            b,
            horizon: DEFAULT_HORIZON,
        })
    }

    /// `A = (1, 2, 3, …)`, `B = ℕ`: the ordinary sequentially congruent case.
    pub fn classical() -> Self {
        GenSpec::new(Sequence::Naturals, Sequence::Naturals).unwrap()
    }

    /// `A = ℕ^k`, `B = ℕ^p`.
    pub fn powers(k: u32, p: u32) -> Result<Self> {
        GenSpec::new(Sequence::Powers(k), Sequence::Powers(p))
    }

    pub fn with_horizon(mut self, horizon: usize) -> Self {
        self.horizon = horizon;
        self
    }

    pub fn a(&self) -> &Sequence {
        &self.a
    }

    pub fn b(&self) -> &Sequence {
        &self.b
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn a_term(&self, i: usize) -> Result<u64> {
        self.a.term(i, self.horizon)
    }

    pub fn b_term(&self, i: usize) -> Result<u64> {
        self.b.term(i, self.horizon)
    }

    /// Distinct terms in `A`, required for `σ_AB` and `π_AB` to be injective.
    pub fn distinct_a(&self) -> bool {
        self.a.has_distinct_terms()
    }

    /// Same `(A, B)` up to aliases of `ℕ`.
    pub fn same_as(&self, other: &GenSpec) -> bool {
        self.a.same_as(&other.a) && self.b.same_as(&other.b)
    }

    fn require_distinct_a(&self) -> Result<()> {
        if self.distinct_a() {
            Ok(())
        } else {
            Err(Error::RepeatedTerms)
        }
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={}, B={}", self.a, self.b)
    }
}

/// n-notation `[n_1, …, n_r]_{A,B}` with `n_r ≠ 0`.
///
/// JSON form: `{"n":[0,1],"A":"nat","B":"nat"}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "NNotationRepr", into = "NNotationRepr")]
pub struct NNotation {
    coeffs: Vec<u64>,
    spec: GenSpec,
}

#[derive(Serialize, Deserialize)]
struct NNotationRepr {
    n: Vec<u64>,
    #[serde(rename = "A")]
    a: Sequence,
    #[serde(rename = "B")]
    b: Sequence,
}

impl TryFrom<NNotationRepr> for NNotation {
    type Error = Error;
    fn try_from(r: NNotationRepr) -> Result<Self> {
        NNotation::new(GenSpec::new(r.a, r.b)?, r.n)
    }
}

impl From<NNotation> for NNotationRepr {
    fn from(n: NNotation) -> Self {
        NNotationRepr {
            n: n.coeffs,
            a: n.spec.a,
            b: n.spec.b,
        }
    }
}

impl NNotation {
    pub fn new(spec: GenSpec, coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.last() == Some(&0) {
            return Err(Error::TrailingZero(coeffs));
        }
        Ok(NNotation { coeffs, spec })
    }

    fn trimmed(spec: GenSpec, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        NNotation { coeffs, spec }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn spec(&self) -> &GenSpec {
        &self.spec
    }

    /// Same coefficients, different `(A, B)`.
    pub fn retagged(&self, spec: GenSpec) -> NNotation {
        NNotation {
            coeffs: self.coeffs.clone(),
            spec,
        }
    }

    /// `Σ a_i n_i`, the largest part of the decoded partition.
    pub fn largest_part(&self) -> Result<u64> {
        self.weighted_sum(|i| self.spec.a_term(i))
    }

    /// `Σ a_i b_i n_i`, the size of the decoded partition.
    pub fn size(&self) -> Result<u64> {
        self.weighted_sum(|i| {
            self.spec
                .a_term(i)?
                .checked_mul(self.spec.b_term(i)?)
                .ok_or(Error::Overflow("computing a rectangle area"))
        })
    }

    fn weighted_sum(&self, weight: impl Fn(usize) -> Result<u64>) -> Result<u64> {
        let mut total = 0u64;
        for (i, &n) in self.coeffs.iter().enumerate() {
            if n == 0 {
                continue;
            }
            let term = weight(i + 1)?
                .checked_mul(n)
                .ok_or(Error::Overflow("summing n-notation"))?;
            total = total
                .checked_add(term)
                .ok_or(Error::Overflow("summing n-notation"))?;
        }
        Ok(total)
    }
}

/// Membership in `S_B(A)` read off the conjugate: every part of the
/// conjugate lies in `B`, and the part `b_i` occurs a multiple of `a_i` times.
pub fn is_in_sba(p: &Partition, s: &GenSpec) -> Result<bool> {
    for (part, freq) in conjugate(p).frequencies().iter() {
        let Some(i) = s.b.position_of(part, s.horizon)? else {
            return Ok(false);
        };
        if freq % s.a_term(i)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Standard notation of `[n_1, …, n_r]_{A,B}`: the rows in `(b_{i−1}, b_i]`
/// all equal `Σ_{j ≥ i} a_j n_j`.
pub fn n_decode(n: &NNotation) -> Result<Partition> {
    let r = n.coeffs.len();
    if r == 0 {
        return Ok(Partition::empty());
    }
    let s = &n.spec;
    let length = s.b_term(r)?;
    if length > MAX_DECODED_LENGTH {
        return Err(Error::ParameterRange(format!(
            "decoded partition would have {length} parts"
        )));
    }
    let mut parts = vec![0u64; length as usize];
    let mut acc = 0u64;
    for i in (1..=r).rev() {
        let width = s
            .a_term(i)?
            .checked_mul(n.coeffs[i - 1])
            .ok_or(Error::Overflow("decoding n-notation"))?;
        acc = acc
            .checked_add(width)
            .ok_or(Error::Overflow("decoding n-notation"))?;
        let lo = if i == 1 { 0 } else { s.b_term(i - 1)? };
        let hi = s.b_term(i)?;
        for slot in &mut parts[lo as usize..hi as usize] {
            *slot = acc;
        }
    }
    Partition::new(parts)
}

/// Inverse of [`n_decode`]: `n_i = (λ_{b_i} − λ_{b_i+1}) / a_i`.
pub fn n_encode(p: &Partition, s: &GenSpec) -> Result<NNotation> {
    let len = p.len() as u64;
    if len == 0 {
        return Ok(NNotation::trimmed(s.clone(), Vec::new()));
    }
    let r = s
        .b
        .position_of(len, s.horizon)?
        .ok_or_else(|| Error::NotInFamily(format!("length {len} is not a term of B = {}", s.b)))?;
    let mut coeffs = Vec::with_capacity(r);
    let mut prev_b = 0u64;
    for i in 1..=r {
        let b = s.b_term(i)?;
        // Rows strictly inside a run must be equal.
        let top = p.part(prev_b as usize + 1);
        let bottom = p.part(b as usize);
        if top != bottom {
            return Err(Error::NotInFamily(format!(
                "rows {}..={b} differ but only row {b} may end a block",
                prev_b + 1
            )));
        }
        let drop = bottom - p.part(b as usize + 1);
        let a = s.a_term(i)?;
        if !drop.is_multiple_of(a) {
            return Err(Error::NotInFamily(format!(
                "λ_{b} − λ_{} = {drop} is not a multiple of a_{i} = {a}",
                b + 1
            )));
        }
        coeffs.push(drop / a);
        prev_b = b;
    }
    Ok(NNotation::trimmed(s.clone(), coeffs))
}

/// `σ_AB([n_1, …, n_r]) = ⟨a_1^{n_1}, …, a_r^{n_r}⟩`, re-sorted when `A`
/// is not increasing. The size of the result is the largest part of the
/// decoded input.
pub fn sigma_ab(n: &NNotation) -> Result<Partition> {
    n.spec.require_distinct_a()?;
    coefficients_as_frequencies(&n.coeffs, |i| n.spec.a_term(i as usize))
}

/// `π_AB`: each column of height `a_i` becomes an `a_i × b_i` rectangle,
/// i.e. `n_i = λ_{a_i} − λ_{a_i+1}`.
///
/// Positions follow the order of `A` as given, so for a non-increasing
/// explicit `A` the coefficient `n_i` still belongs to the term `a_i`; with
/// increasing `A` this is exactly `n_r = λ_{a_r}` for the last term. Inputs
/// with a column height outside `A` are rejected.
pub fn pi_ab(p: &Partition, s: &GenSpec) -> Result<NNotation> {
    s.require_distinct_a()?;
    let mut coeffs: Vec<u64> = Vec::new();
    for (j, &d) in differences(p).iter().enumerate() {
        if d == 0 {
            continue;
        }
        let height = j as u64 + 1;
        let i = s.a.position_of(height, s.horizon)?.ok_or_else(|| {
            Error::NotInFamily(format!(
                "column of height {height} is not a term of A = {}",
                s.a
            ))
        })?;
        if coeffs.len() < i {
            coeffs.resize(i, 0);
        }
        coeffs[i - 1] = d;
    }
    Ok(NNotation::trimmed(s.clone(), coeffs))
}

/// Coefficients `[λ_1−λ_2, …, λ_r]` read in `(A, B)`; see [`pi_prime_ab`].
pub fn pi_prime_ab_coeffs(p: &Partition, s: &GenSpec) -> NNotation {
    NNotation::trimmed(s.clone(), differences(p))
}

/// `π′_AB`: the "stretch" of each column of height `i` into an
/// `a_i × b_i` rectangle. Defined on every partition.
pub fn pi_prime_ab(p: &Partition, s: &GenSpec) -> Result<Partition> {
    n_decode(&pi_prime_ab_coeffs(p, s))
}

/// `σ′_AB([n_1, …, n_r]) = ⟨1^{n_1}, …, r^{n_r}⟩`. `σ′_AB ∘ π′_AB` is
/// conjugation for every `(A, B)`.
pub fn sigma_prime_ab(p: &Partition, s: &GenSpec) -> Result<Partition> {
    let n = n_encode(p, s)?;
    coefficients_as_frequencies(&n.coeffs, Ok)
}

fn pow(i: u64, k: u32) -> Option<u64> {
    i.checked_pow(k)
}

/// `λ ∈ S(k)`: `λ_i ≡ λ_{i+1} (mod i^k)` and `λ_r ≡ 0 (mod r^k)`.
pub fn is_in_sk(p: &Partition, k: u32) -> bool {
    differences(p)
        .iter()
        .enumerate()
        .all(|(i, &d)| match pow(i as u64 + 1, k) {
            Some(m) => d % m == 0,
            // The modulus exceeds every possible difference.
            None => d == 0,
        })
}

/// `λ ∈ S(j, k)`: `λ_i − λ_{i+1} = j·i^k` for `i < r` and `λ_r = j·r^k`.
///
/// The second condition is read with the same exponent `k` as the first.
pub fn is_in_sjk(p: &Partition, j: u64, k: u32) -> bool {
    differences(p)
        .iter()
        .enumerate()
        .all(|(i, &d)| pow(i as u64 + 1, k).and_then(|m| m.checked_mul(j)) == Some(d))
}

fn require_spec(n: &NNotation, a: &Sequence, b: Option<&Sequence>) -> Result<()> {
    let a_ok = n.spec.a.same_as(a);
    let b_ok = b.is_none_or(|b| n.spec.b.same_as(b));
    if a_ok && b_ok {
        Ok(())
    } else {
        let want = match b {
            Some(b) => format!("A={a}, B={b}"),
            None => format!("A={a}"),
        };
        Err(Error::SpecMismatch(format!(
            "expected {want}, got {}",
            n.spec
        )))
    }
}

/// `σ_k([n_1, …, n_r]_{ℕ^k, B}) = ⟨(1^k)^{n_1}, …, (r^k)^{n_r}⟩`. Any `B`.
pub fn sigma_k(n: &NNotation, k: u32) -> Result<Partition> {
    require_spec(n, &Sequence::Powers(k), None)?;
    coefficients_as_frequencies(&n.coeffs, |i| {
        pow(i, k).ok_or(Error::Overflow("raising an index to the k-th power"))
    })
}

/// `ψ_k([n_1, …, n_r]_{ℕ^k, ℕ}) = ⟨(1^{k+1})^{n_1}, …, (r^{k+1})^{n_r}⟩`;
/// size preserving.
pub fn psi_k(n: &NNotation, k: u32) -> Result<Partition> {
    require_spec(n, &Sequence::Powers(k), Some(&Sequence::Naturals))?;
    coefficients_as_frequencies(&n.coeffs, |i| {
        pow(i, k + 1).ok_or(Error::Overflow("raising an index to the (k+1)-th power"))
    })
}

/// Inverse of [`psi_k`]: a partition into `(k+1)`-th powers back to
/// `[n_1, …, n_r]_{ℕ^k, ℕ}`.
pub fn psi_k_inverse(p: &Partition, k: u32, horizon: usize) -> Result<NNotation> {
    let spec = GenSpec::new(Sequence::Powers(k), Sequence::Naturals)?.with_horizon(horizon);
    let mut coeffs: Vec<u64> = Vec::new();
    for (part, f) in p.frequencies().iter() {
        let root = integer_root(part, k + 1)
            .ok_or_else(|| Error::NotInFamily(format!("part {part} is not a {}-th power", k + 1)))?
            as usize;
        if root > horizon {
            return Err(Error::HorizonExceeded {
                index: root,
                horizon,
            });
        }
        if coeffs.len() < root {
            coeffs.resize(root, 0);
        }
        coeffs[root - 1] = f;
    }
    Ok(NNotation::trimmed(spec, coeffs))
}

/// `σ_{k+1}` followed by `ψ_k^{-1}`: `S_B(ℕ^{k+1})` with largest part `n`
/// onto `S(ℕ^k)` of size `n`, keeping the coefficient vector.
pub fn power_lowering(n: &NNotation, k: u32) -> Result<NNotation> {
    let into_powers = sigma_k(n, k + 1)?;
    psi_k_inverse(&into_powers, k, n.spec.horizon)
}

fn check_exponents(k: u32, p: u32, name: &str) -> Result<()> {
    if p == 0 || p > k {
        return Err(Error::ParameterRange(format!(
            "{name} = {p} must lie in [1, k = {k}]"
        )));
    }
    Ok(())
}

/// `η_{k,p}`: `[n_1, …, n_r]_{ℕ^k, B}` ↦ `[n_1, …, n_r]_{ℕ^{k−p}, ℕ^p}`.
/// Each `i^k`-wide rectangle's top row becomes a rectangle of area `i^k`, so
/// largest part `n` maps to size `n`.
pub fn eta(n: &NNotation, k: u32, p: u32) -> Result<NNotation> {
    check_exponents(k, p, "p")?;
    require_spec(n, &Sequence::Powers(k), None)?;
    let spec = GenSpec::powers(k - p, p)?.with_horizon(n.spec.horizon);
    Ok(n.retagged(spec))
}

/// `τ_{k,p,q}`: `[n_1, …, n_r]_{ℕ^{k−p}, ℕ^p}` ↦ `[n_1, …, n_r]_{ℕ^{k−q}, ℕ^q}`,
/// trading rectangles for others of the same area; size preserving.
pub fn tau(n: &NNotation, k: u32, p: u32, q: u32) -> Result<NNotation> {
    check_exponents(k, p, "p")?;
    check_exponents(k, q, "q")?;
    require_spec(n, &Sequence::Powers(k - p), Some(&Sequence::Powers(p)))?;
    let spec = GenSpec::powers(k - q, q)?.with_horizon(n.spec.horizon);
    Ok(n.retagged(spec))
}
