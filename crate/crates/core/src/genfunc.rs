//! Ground-truth oracles: power-series coefficients of
//! `1 / ((1 - t^p)(1 - t^q)(1 - t^l))`, a direct nested-loop count, and the
//! closed form for the generators `{1, 2, 3}`.
//!
//! None of these share code paths with [`crate::three_var`].

use serde::{Deserialize, Serialize};

use crate::arith::{self, nearest_integer};
use crate::error::{Error, Result};
use crate::three_var::ThreeVarInstance;

pub const DEFAULT_SERIES_LIMIT: u64 = 10_000_000;
pub const DEFAULT_BRUTE_BUDGET: u64 = 1_000_000;

/// Coefficients `c[0..=N]` of `Π 1/(1 - t^a)` over the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesPrefix {
    coefficients: Vec<u128>,
}

impl SeriesPrefix {
    pub fn new(generators: &[i64], max_degree: usize) -> Result<Self> {
        if generators.is_empty() || generators.len() > 3 {
            return Err(Error::InvalidInput(format!(
                "expected 1 to 3 generators, got {}",
                generators.len()
            )));
        }
        if let Some(bad) = generators.iter().find(|&&g| g < 1) {
            return Err(Error::InvalidInput(format!(
                "generator {bad} must be positive"
            )));
        }
        let mut c = vec![0u128; max_degree + 1];
        c[0] = 1;
        for &g in generators {
            let g = g as usize;
            for i in g..=max_degree {
                c[i] = arith::add_count(c[i], c[i - g])?;
            }
        }
        Ok(Self { coefficients: c })
    }

    pub fn coefficient(&self, n: usize) -> Option<u128> {
        self.coefficients.get(n).copied()
    }

    pub fn coefficients(&self) -> &[u128] {
        &self.coefficients
    }
}

/// Coefficient of `t^n` in `Π 1/(1 - t^a)`, with the default size limit.
pub fn series_count(generators: &[i64], n: u64) -> Result<u128> {
    series_count_within(generators, n, DEFAULT_SERIES_LIMIT)
}

pub fn series_count_within(generators: &[i64], n: u64, limit: u64) -> Result<u128> {
    if n > limit {
        return Err(Error::BudgetExceeded {
            budget: limit as u128,
            unit: "series terms",
        });
    }
    let series = SeriesPrefix::new(generators, n as usize)?;
    Ok(series.coefficients[n as usize])
}

/// Direct count over `x <= n/p`, `y <= (n - px)/q`, with `z` fixed by
/// divisibility. Uses the default iteration budget.
pub fn brute_force_count(inst: &ThreeVarInstance) -> Result<u128> {
    brute_force_count_within(inst, DEFAULT_BRUTE_BUDGET)
}

pub fn brute_force_count_within(inst: &ThreeVarInstance, budget: u64) -> Result<u128> {
    let (p, q, l, n) = (inst.p(), inst.q(), inst.l(), inst.n());
    let mut iterations = 0u64;
    let mut count = 0u128;
    for x in 0..=n / p {
        let after_x = n - p * x;
        for y in 0..=after_x / q {
            iterations += 1;
            if iterations > budget {
                return Err(Error::BudgetExceeded {
                    budget: budget as u128,
                    unit: "brute-force iterations",
                });
            }
            if (after_x - q * y) % l == 0 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `N(1, 2, 3, n)` as the integer nearest `(n + 3)^2 / 12`.
pub fn closed_form_123(n: u64) -> Result<u128> {
    let shifted = n as i128 + 3;
    // (n + 3)^2 mod 12 is one of 0, 1, 4, 9, so there is never a tie
    let nearest = nearest_integer(arith::mul(shifted, shifted)?, 12)?;
    Ok(nearest as u128)
}
