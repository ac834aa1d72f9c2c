//! Exact integer primitives shared by every solver.
//!
//! All functions work on `i128`. Callers feed values that originate in the
//! `i64` range, so products of two inputs cannot wrap; anything that could
//! still overflow goes through the checked helpers and reports
//! [`Error::Overflow`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Witness for `a·x + b·y = g` with `g = gcd(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BezoutCertificate {
    pub g: i128,
    pub x: i128,
    pub y: i128,
}

/// Greatest common divisor of `|a|` and `|b|`, with `gcd(0, 0) = 0`.
pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i128
}

pub fn gcd3(a: i128, b: i128, c: i128) -> i128 {
    gcd(gcd(a, b), c)
}

/// Extended Euclid. Negative inputs are handled by running on `|a|`, `|b|`
/// and flipping the sign of the matching witness.
pub fn extended_gcd(a: i128, b: i128) -> BezoutCertificate {
    let (mut old_r, mut r) = (a.abs(), b.abs());
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    BezoutCertificate {
        g: old_r,
        x: if a < 0 { -old_s } else { old_s },
        y: if b < 0 { -old_t } else { old_t },
    }
}

/// Inverse of `a` modulo `m`, in `[1, m)`.
pub fn mod_inverse(a: i128, m: i128) -> Result<i128> {
    if m < 2 {
        return Err(Error::InvalidInput(format!(
            "modulus {m} must be at least 2"
        )));
    }
    let cert = extended_gcd(a.rem_euclid(m), m);
    if cert.g != 1 {
        return Err(Error::NotCoprime { a, b: m });
    }
    Ok(cert.x.rem_euclid(m))
}

/// Smallest `x >= 0` with `a·x ≡ rhs (mod modulus)`.
///
/// `a` and `modulus` need not be coprime: the congruence is divided through
/// by `g = gcd(a, modulus)` first, and has no solution unless `g | rhs`.
pub fn solve_congruence(a: i128, rhs: i128, modulus: i128) -> Result<i128> {
    if a < 1 || modulus < 1 {
        return Err(Error::InvalidInput(format!(
            "congruence {a}·x ≡ {rhs} (mod {modulus}) needs a >= 1 and modulus >= 1"
        )));
    }
    let g = gcd(a, modulus);
    let rhs = rhs.rem_euclid(modulus);
    if rhs % g != 0 {
        return Err(Error::NoSolution);
    }
    let reduced = modulus / g;
    if reduced == 1 {
        return Ok(0);
    }
    let inv = mod_inverse((a / g) % reduced, reduced)?;
    Ok(mul(rhs / g, inv)?.rem_euclid(reduced))
}

/// The integer closest to `numerator / denominator`, computed exactly.
pub fn nearest_integer(numerator: i128, denominator: i128) -> Result<i128> {
    if denominator < 1 {
        return Err(Error::InvalidInput(format!(
            "denominator {denominator} must be positive"
        )));
    }
    let floor = numerator.div_euclid(denominator);
    let twice_rem = 2 * numerator.rem_euclid(denominator);
    match twice_rem.cmp(&denominator) {
        std::cmp::Ordering::Less => Ok(floor),
        std::cmp::Ordering::Greater => Ok(floor + 1),
        std::cmp::Ordering::Equal => Err(Error::ExactHalf {
            numerator,
            denominator,
        }),
    }
}

pub(crate) fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn add_count(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or(Error::Overflow)
}
