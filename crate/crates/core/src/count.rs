//! Partition counts as arbitrary-precision integers.
//!
//! Product generating functions `∏_{m ∈ M} 1/(1 − q^m)` are expanded by the
//! usual coin-change recurrence. A computed prefix `[0..=n]` is cached per
//! product, so repeated queries for growing `n` only pay once.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::enumerate::{visit_partitions, Predicate};
use crate::error::{Error, Result};

/// Coefficients `c_0, c_1, …` of a power series in `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSeries {
    coefficients: Vec<BigUint>,
}

impl CountSeries {
    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    /// Coefficient of `q^n`, if computed.
    pub fn coefficient(&self, n: usize) -> Option<&BigUint> {
        self.coefficients.get(n)
    }

    /// Highest computed exponent.
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }
}

/// Which parts a product ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Product {
    /// `m^k` for `m ≥ 1`.
    Powers(u32),
    /// Odd parts.
    Odd,
    /// Even parts.
    Even,
}

impl Product {
    fn parts_up_to(self, n: u64) -> Vec<u64> {
        match self {
            Product::Powers(k) => (1u64..)
                .map(|m| m.checked_pow(k))
                .take_while(|v| v.is_some_and(|v| v <= n))
                .flatten()
                .collect(),
            Product::Odd => (1..=n).step_by(2).collect(),
            Product::Even => (2..=n).step_by(2).collect(),
        }
    }
}

fn cache() -> &'static Mutex<HashMap<Product, Vec<BigUint>>> {
    static CACHE: OnceLock<Mutex<HashMap<Product, Vec<BigUint>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn expand(product: Product, n: u64) -> Vec<BigUint> {
    let len = n as usize + 1;
    let mut coeffs = vec![BigUint::zero(); len];
    coeffs[0] = BigUint::one();
    for part in product.parts_up_to(n) {
        let part = part as usize;
        for i in part..len {
            let add = coeffs[i - part].clone();
            coeffs[i] += add;
        }
    }
    coeffs
}

fn series(product: Product, n: u64) -> CountSeries {
    let needed = n as usize + 1;
    if let Some(prefix) = cache().lock().unwrap().get(&product) {
        if prefix.len() >= needed {
            return CountSeries {
                coefficients: prefix[..needed].to_vec(),
            };
        }
    }
    // Computed outside the lock; a racing writer stores an equal or longer prefix.
    let coeffs = expand(product, n);
    let mut guard = cache().lock().unwrap();
    let entry = guard.entry(product).or_default();
    if entry.len() < coeffs.len() {
        *entry = coeffs.clone();
    }
    CountSeries {
        coefficients: coeffs,
    }
}

fn require_positive(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::ParameterRange("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `∏_{m ≥ 1} 1/(1 − q^{m^k})` up to `q^n`.
pub fn series_into_powers(n: u64, k: u32) -> Result<CountSeries> {
    require_positive(k)?;
    Ok(series(Product::Powers(k), n))
}

/// Number of partitions of `n` into perfect `k`-th powers.
pub fn count_into_powers(n: u64, k: u32) -> Result<BigUint> {
    require_positive(k)?;
    Ok(series(Product::Powers(k), n)
        .coefficients
        .swap_remove(n as usize))
}

/// Number of partitions of `n` whose parts all have the same parity:
/// `∏ 1/(1 − q^{2k−1}) + ∏ 1/(1 − q^{2k}) − 1`.
pub fn count_parity_ideal(n: u64) -> BigUint {
    let odd = series(Product::Odd, n).coefficients.swap_remove(n as usize);
    let even = series(Product::Even, n)
        .coefficients
        .swap_remove(n as usize);
    let total = odd + even;
    // The empty partition is counted by both products.
    if n == 0 {
        total - 1u32
    } else {
        total
    }
}

/// Number of partitions of `n` satisfying `pred`, by exhaustive listing.
pub fn count_members(pred: &Predicate, n: u64) -> BigUint {
    let mut count = 0u64;
    visit_partitions(n, n, n as usize, &mut |parts| {
        if pred.test(parts) {
            count += 1;
        }
    });
    BigUint::from(count)
}
