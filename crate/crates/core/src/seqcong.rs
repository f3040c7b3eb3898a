//! Sequentially congruent partitions and their bijections.
//!
//! A partition `λ = (λ_1, …, λ_r)` is sequentially congruent when
//! `λ_i ≡ λ_{i+1} (mod i)` for `i < r` and `λ_r ≡ 0 (mod r)`. Every such
//! partition is uniquely `c_1(1) ⋆ c_2(2,2) ⋆ … ⋆ c_r(r,…,r)`, which gives the
//! c-notation `[c_1, …, c_r]`: its Young diagram is tiled by `c_i` squares of
//! side `i`.
//!
//! The maps here:
//!
//! * [`pi_map`]: partitions of `n` → sequentially congruent, largest part `n`
//!   (each column of height `i` is stretched into an `i × i` square);
//! * [`sigma_map`]: its inverse (each square keeps only its top row);
//! * [`pi_sigma_closed_form`]: `π ∘ σ` evaluated by its frequency formula;
//! * [`psi_map`]: size-preserving map onto partitions into perfect squares.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{FrequencyMap, Partition};

/// c-notation `[c_1, …, c_r]` with `c_r ≠ 0`; the empty vector encodes the
/// empty partition.
///
/// JSON form: `{"c":[2,1,0,1]}`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "CNotationRepr", into = "CNotationRepr")]
pub struct CNotation {
    coeffs: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct CNotationRepr {
    c: Vec<u64>,
}

impl TryFrom<CNotationRepr> for CNotation {
    type Error = Error;
    fn try_from(r: CNotationRepr) -> Result<Self> {
        CNotation::new(r.c)
    }
}

impl From<CNotation> for CNotationRepr {
    fn from(c: CNotation) -> Self {
        CNotationRepr { c: c.coeffs }
    }
}

impl CNotation {
    /// Rejects a trailing zero, which would break uniqueness.
    pub fn new(coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.last() == Some(&0) {
            return Err(Error::TrailingZero(coeffs));
        }
        Ok(CNotation { coeffs })
    }

    /// Drops trailing zeros instead of rejecting them.
    pub fn trimmed(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        CNotation { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Length of the encoded partition.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for CNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CNotation{self}")
    }
}

/// Returns the 1-based index of the first failing congruence, if any.
pub fn first_congruence_failure(parts: &[u64]) -> Option<usize> {
    let r = parts.len();
    (1..=r).find(|&i| {
        let next = if i < r { parts[i] } else { 0 };
        !(parts[i - 1] - next).is_multiple_of(i as u64)
    })
}

/// `λ_i ≡ λ_{i+1} (mod i)` for all `i`, reading `λ_{r+1} = 0`.
pub fn is_seq_congruent(p: &Partition) -> bool {
    first_congruence_failure(p.parts()).is_none()
}

fn require_seq_congruent(p: &Partition) -> Result<()> {
    match first_congruence_failure(p.parts()) {
        None => Ok(()),
        Some(index) => Err(Error::NotSequentiallyCongruent { index }),
    }
}

/// `c_i = (λ_i − λ_{i+1}) / i`.
pub fn to_c_notation(p: &Partition) -> Result<CNotation> {
    require_seq_congruent(p)?;
    let coeffs = (1..=p.len())
        .map(|i| (p.part(i) - p.part(i + 1)) / i as u64)
        .collect();
    Ok(CNotation { coeffs })
}

/// `λ_i = Σ_{j ≥ i} j·c_j`.
pub fn from_c_notation(c: &CNotation) -> Result<Partition> {
    let r = c.len();
    let mut parts = vec![0u64; r];
    let mut acc = 0u64;
    for j in (1..=r).rev() {
        let block = c.coeffs[j - 1]
            .checked_mul(j as u64)
            .ok_or(Error::Overflow("decoding c-notation"))?;
        acc = acc
            .checked_add(block)
            .ok_or(Error::Overflow("decoding c-notation"))?;
        parts[j - 1] = acc;
    }
    Partition::new(parts)
}

/// Successive differences `[λ_1−λ_2, …, λ_{r−1}−λ_r, λ_r]`; this vector is
/// simultaneously the c-notation of `π(λ)` and the frequency vector of the
/// conjugate of `λ`.
pub(crate) fn differences(p: &Partition) -> Vec<u64> {
    (1..=p.len()).map(|i| p.part(i) - p.part(i + 1)).collect()
}

/// `π(λ) = [λ_1−λ_2, λ_2−λ_3, …, λ_r]` in c-notation.
pub fn pi_map(p: &Partition) -> Result<Partition> {
    from_c_notation(&CNotation::trimmed(differences(p)))
}

/// `σ([c_1, …, c_r]) = ⟨1^{c_1}, …, r^{c_r}⟩`.
pub fn sigma_map(p: &Partition) -> Result<Partition> {
    let c = to_c_notation(p)?;
    coefficients_as_frequencies(c.coeffs(), Ok)
}

/// `⟨value(1)^{c_1}, value(2)^{c_2}, …⟩` materialized in standard notation.
pub(crate) fn coefficients_as_frequencies(
    coeffs: &[u64],
    value: impl Fn(u64) -> Result<u64>,
) -> Result<Partition> {
    let mut freq = FrequencyMap::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c > 0 {
            freq.add(value(i as u64 + 1)?, c)?;
        }
    }
    freq.to_partition()
}

/// `(π ∘ σ)(φ)` evaluated directly: the part
/// `Σ_{j=1}^{k} Σ_{i=j}^{r} (φ_i − φ_{i+1}) / i` occurs `(φ_k − φ_{k+1}) / k`
/// times. Entries whose exponent is zero are skipped.
pub fn pi_sigma_closed_form(phi: &Partition) -> Result<Partition> {
    require_seq_congruent(phi)?;
    let r = phi.len();
    let exponent = |i: usize| (phi.part(i) - phi.part(i + 1)) / i as u64;
    let mut freq = FrequencyMap::new();
    for k in 1..=r {
        let f = exponent(k);
        if f == 0 {
            continue;
        }
        let mut value = 0u64;
        for j in 1..=k {
            for i in j..=r {
                value = value
                    .checked_add(exponent(i))
                    .ok_or(Error::Overflow("evaluating the π∘σ formula"))?;
            }
        }
        freq.add(value, f)?;
    }
    freq.to_partition()
}

/// `ψ([c_1, …, c_r]) = ⟨(1²)^{c_1}, …, (r²)^{c_r}⟩`.
pub fn psi_map(p: &Partition) -> Result<Partition> {
    let c = to_c_notation(p)?;
    coefficients_as_frequencies(c.coeffs(), |i| {
        i.checked_mul(i).ok_or(Error::Overflow("squaring an index"))
    })
}

/// Exact integer square root, if `n` is a perfect square.
pub(crate) fn exact_sqrt(n: u64) -> Option<u64> {
    let mut s = (n as f64).sqrt() as u64;
    while s.checked_mul(s).is_none_or(|sq| sq > n) {
        s -= 1;
    }
    while (s + 1).checked_mul(s + 1).is_some_and(|sq| sq <= n) {
        s += 1;
    }
    (s * s == n).then_some(s)
}

/// Inverse of [`psi_map`]: the part `i²` occurring `d` times becomes `c_i = d`.
pub fn psi_inverse(p: &Partition) -> Result<Partition> {
    let freq = p.frequencies();
    let mut coeffs = Vec::new();
    for (part, f) in freq.iter() {
        let root = exact_sqrt(part).ok_or(Error::NotSquare { part })? as usize;
        if coeffs.len() < root {
            coeffs.resize(root, 0);
        }
        coeffs[root - 1] = f;
    }
    from_c_notation(&CNotation { coeffs })
}

/// Renders the square tiling of a sequentially congruent partition. Squares
/// are laid out largest first, as in the c-notation picture; adjacent
/// squares alternate between `■` and `□` and are separated by `|`.
///
/// Row `t` lists, for every square of side `i ≥ t`, one row of that square.
pub fn render_square_decomposition(p: &Partition) -> Result<String> {
    let c = to_c_notation(p)?;
    if c.is_empty() {
        return Ok("(empty)".to_string());
    }
    let r = c.len();
    // (side, glyph) for every square, largest side first.
    let mut squares = Vec::new();
    for side in (1..=r).rev() {
        for _ in 0..c.coeffs[side - 1] {
            let glyph = if squares.len() % 2 == 0 { '■' } else { '□' };
            squares.push((side, glyph));
        }
    }
    let rows = (1..=r)
        .map(|t| {
            squares
                .iter()
                .filter(|&&(side, _)| side >= t)
                .map(|&(side, glyph)| {
                    std::iter::repeat_n(glyph.to_string(), side)
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
                .join(" | ")
        })
        .collect::<Vec<_>>();
    Ok(rows.join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::conjugate;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c(coeffs: &[u64]) -> CNotation {
        CNotation::new(coeffs.to_vec()).unwrap()
    }

    #[test]
    fn membership() {
        assert!(is_seq_congruent(&p(&[21, 16, 14, 8])));
        assert!(!is_seq_congruent(&p(&[6, 4, 2])));
        assert_eq!(
            to_c_notation(&p(&[6, 4, 2])),
            Err(Error::NotSequentiallyCongruent { index: 3 })
        );
        assert!(is_seq_congruent(&Partition::empty()));
        for n in 1..20 {
            assert!(is_seq_congruent(&p(&[n])));
        }
        assert_eq!(first_congruence_failure(&[3, 2, 1]), Some(2));
    }

    #[test]
    fn c_notation_examples() {
        assert_eq!(to_c_notation(&p(&[8, 6, 4, 4])).unwrap(), c(&[2, 1, 0, 1]));
        assert_eq!(
            to_c_notation(&p(&[16, 15, 11, 5, 5])).unwrap(),
            c(&[1, 2, 2, 0, 1])
        );
        assert_eq!(
            to_c_notation(&p(&[21, 16, 14, 8])).unwrap(),
            c(&[5, 1, 2, 2])
        );
        assert_eq!(
            from_c_notation(&c(&[5, 1, 2, 2])).unwrap(),
            p(&[21, 16, 14, 8])
        );
        assert_eq!(
            from_c_notation(&c(&[2, 1, 0, 1])).unwrap(),
            p(&[8, 6, 4, 4])
        );
        assert_eq!(from_c_notation(&c(&[])).unwrap(), Partition::empty());
        assert_eq!(from_c_notation(&c(&[7])).unwrap(), p(&[7]));
        assert_eq!(
            CNotation::new(vec![1, 0]),
            Err(Error::TrailingZero(vec![1, 0]))
        );
        assert!(from_c_notation(&c(&[u64::MAX, 1])).is_err());
    }

    #[test]
    fn c_notation_json() {
        let v: CNotation = serde_json::from_str(r#"{"c":[2,1,0,1]}"#).unwrap();
        assert_eq!(v, c(&[2, 1, 0, 1]));
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"c":[2,1,0,1]}"#);
        assert!(serde_json::from_str::<CNotation>(r#"{"c":[1,0]}"#).is_err());
    }

    #[test]
    fn pi_examples() {
        assert_eq!(
            pi_map(&p(&[12, 8, 4, 3, 3])).unwrap(),
            p(&[30, 26, 18, 15, 15])
        );
        assert_eq!(pi_map(&Partition::empty()).unwrap(), Partition::empty());
        assert_eq!(pi_map(&p(&[1, 1, 1])).unwrap(), p(&[3, 3, 3]));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(
            sigma_map(&p(&[30, 26, 18, 15, 15])).unwrap(),
            p(&[5, 5, 5, 3, 2, 2, 2, 2, 1, 1, 1, 1])
        );
        assert_eq!(sigma_map(&Partition::empty()).unwrap(), Partition::empty());
        assert_eq!(sigma_map(&p(&[3, 3, 3])).unwrap(), p(&[3]));
        assert!(sigma_map(&p(&[3, 2, 1])).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            pi_sigma_closed_form(&p(&[30, 26, 18, 15, 15])).unwrap(),
            p(&[30, 30, 30, 24, 20, 20, 20, 20, 12, 12, 12, 12])
        );
        assert_eq!(
            pi_sigma_closed_form(&Partition::empty()).unwrap(),
            Partition::empty()
        );
        // σ((k)) = (1^k), whose π-image is the k×k square (k, …, k).
        for k in 1..8u64 {
            let square = Partition::new(vec![k; k as usize]).unwrap();
            assert_eq!(pi_sigma_closed_form(&p(&[k])).unwrap(), square);
            assert_eq!(pi_map(&sigma_map(&p(&[k])).unwrap()).unwrap(), square);
        }
    }

    #[test]
    fn psi_examples() {
        let x = p(&[16, 15, 11, 5, 5]);
        let image = psi_map(&x).unwrap();
        assert_eq!(image, p(&[25, 9, 9, 4, 4, 1]));
        assert_eq!(image.size(), 52);
        assert_eq!(x.size(), 52);
        assert_eq!(psi_map(&Partition::empty()).unwrap(), Partition::empty());
        assert_eq!(psi_map(&p(&[4, 4])).unwrap(), p(&[4, 4]));

        assert_eq!(psi_inverse(&p(&[4, 1, 1])).unwrap(), p(&[4, 2]));
        assert_eq!(
            psi_inverse(&Partition::empty()).unwrap(),
            Partition::empty()
        );
        assert_eq!(psi_inverse(&p(&[9])).unwrap(), p(&[3, 3, 3]));
        assert_eq!(psi_inverse(&p(&[4, 3])), Err(Error::NotSquare { part: 3 }));
        assert_eq!(psi_inverse(&image).unwrap(), x);
    }

    #[test]
    fn exact_sqrt_edges() {
        assert_eq!(exact_sqrt(0), Some(0));
        assert_eq!(exact_sqrt(1), Some(1));
        assert_eq!(exact_sqrt(2), None);
        assert_eq!(exact_sqrt(u64::MAX), None);
        assert_eq!(exact_sqrt(4294967295u64 * 4294967295u64), Some(4294967295));
    }

    #[test]
    fn conjugation_by_sigma_pi() {
        let x = p(&[12, 8, 4, 3, 3]);
        assert_eq!(sigma_map(&pi_map(&x).unwrap()).unwrap(), conjugate(&x));
    }

    #[test]
    fn square_decomposition_counts_blocks() {
        let text = render_square_decomposition(&p(&[16, 15, 11, 5, 5])).unwrap();
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows.len(), 5);
        let sides: Vec<usize> = rows[0]
            .split(" | ")
            .map(|block| block.split(' ').count())
            .collect();
        assert_eq!(sides, vec![5, 3, 3, 2, 2, 1]);
        // Row widths reproduce the parts.
        for (row, part) in rows.iter().zip([16, 15, 11, 5, 5]) {
            let cells = row.chars().filter(|&ch| ch == '■' || ch == '□').count();
            assert_eq!(cells, part);
        }
        assert_eq!(
            render_square_decomposition(&Partition::empty()).unwrap(),
            "(empty)"
        );
        assert_eq!(render_square_decomposition(&p(&[1])).unwrap(), "■");
        assert!(render_square_decomposition(&p(&[2, 1])).is_err());
    }
}
