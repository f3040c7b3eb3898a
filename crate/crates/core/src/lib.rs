//! Sequentially congruent partitions.
//!
//! A partition `λ = (λ_1, …, λ_r)` is *sequentially congruent* when
//! `λ_i ≡ λ_{i+1} (mod i)` for every `i < r` and `λ_r ≡ 0 (mod r)`. This crate
//! provides:
//!
//! * [`partition`]: the [`Partition`] type, frequency notation, conjugation,
//!   Durfee squares and the `⋆`/`⊕` operations;
//! * [`seqcong`]: c-notation and the bijections `π`, `σ`, `ψ`;
//! * [`general`]: the families `S_B(A)` with n-notation, `σ_AB`, `π_AB`,
//!   `π′_AB`, `σ′_AB`, `S(k)`, `ψ_k`, `η`, `τ`;
//! * [`ideal`]: bounded analysis of partition ideals (closure, order, modulus,
//!   Andrews decomposition, linking sets);
//! * [`enumerate`] and [`count`]: exhaustive enumerators and
//!   generating-function coefficients.
//!
//! ```
//! use seqcong::{pi_map, sigma_map, conjugate, Partition};
//!
//! let lambda = Partition::new(vec![12, 8, 4, 3, 3])?;
//! let image = pi_map(&lambda)?;
//! assert_eq!(image.parts(), &[30, 26, 18, 15, 15]);
//! // σ ∘ π is conjugation.
//! assert_eq!(sigma_map(&image)?, conjugate(&lambda));
//! # Ok::<(), seqcong::Error>(())
//! ```

pub mod count;
pub mod enumerate;
pub mod error;
pub mod general;
pub mod ideal;
pub mod partition;
pub mod seqcong;

pub use count::{count_into_powers, count_members, count_parity_ideal, CountSeries};
pub use enumerate::{
    enumerate_partitions, enumerate_seqcong_by_largest, enumerate_seqcong_by_size,
    enumerate_sk_by_largest, enumerate_sk_by_size, enumerate_with_parts_from, Predicate,
};
pub use error::{Error, Result};
pub use general::{GenSpec, NNotation, Sequence};
pub use ideal::{AnalysisBound, IdealSpec};
pub use partition::{conjugate, durfee_size, FrequencyMap, Partition};
pub use seqcong::{
    from_c_notation, is_seq_congruent, pi_map, pi_sigma_closed_form, psi_inverse, psi_map,
    sigma_map, to_c_notation, CNotation,
};

/// The guide chapters, compiled as doc-tests so their snippets stay current.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    pub mod partitions {}
    #[doc = include_str!("../../../book/src/seqcong.md")]
    pub mod seqcong {}
    #[doc = include_str!("../../../book/src/generalized.md")]
    pub mod generalized {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    pub mod ideals {}
    #[doc = include_str!("../../../book/src/counting.md")]
    pub mod counting {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
