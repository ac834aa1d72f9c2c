//! Two-variable equations `a·x + b·y = m` over the nonnegative integers.
//!
//! Every three-variable method reduces to these. Three independent counting
//! routes live here: the residue/family formula ([`count_binner`]), the
//! four-case table keyed on `m mod ab` ([`count_bcs_table`]), and the
//! length of the nonnegative window on the integer solution line
//! ([`enumerate_nonneg`] / [`count_window`]).

use serde::{Deserialize, Serialize};

use crate::arith::{self, extended_gcd, gcd, solve_congruence};
use crate::error::{Error, Result};

/// `a·x + b·y = m` with `a, b >= 1` and `m >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoVarEquation {
    a: i64,
    b: i64,
    m: i64,
}

impl TwoVarEquation {
    pub fn new(a: i64, b: i64, m: i64) -> Result<Self> {
        if a < 1 || b < 1 {
            return Err(Error::InvalidInput(format!(
                "coefficients must be positive, got a={a}, b={b}"
            )));
        }
        if m < 0 {
            return Err(Error::InvalidInput(format!(
                "m must be nonnegative, got {m}"
            )));
        }
        Ok(Self { a, b, m })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    fn wide(&self) -> (i128, i128, i128) {
        (self.a as i128, self.b as i128, self.m as i128)
    }

    fn require_coprime(&self) -> Result<()> {
        let (a, b, _) = self.wide();
        if gcd(a, b) != 1 {
            return Err(Error::NotCoprime { a, b });
        }
        Ok(())
    }
}

/// All integer solutions `(x0 + k·step_x, y0 - k·step_y)`, `k ∈ ℤ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionLine {
    pub x0: i128,
    pub y0: i128,
    /// `b / d`
    pub step_x: i128,
    /// `a / d`
    pub step_y: i128,
    /// `gcd(a, b)`
    pub d: i128,
}

impl SolutionLine {
    pub fn point(&self, k: i128) -> (i128, i128) {
        (self.x0 + k * self.step_x, self.y0 - k * self.step_y)
    }

    /// Range of `k` for which both coordinates are nonnegative.
    pub fn nonneg_window(&self) -> NonnegWindow {
        NonnegWindow {
            k_min: (-self.x0).div_euclid(self.step_x)
                + i128::from((-self.x0).rem_euclid(self.step_x) != 0),
            k_max: self.y0.div_euclid(self.step_y),
        }
    }
}

/// Inclusive `k` range; empty when `k_min > k_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonnegWindow {
    pub k_min: i128,
    pub k_max: i128,
}

impl NonnegWindow {
    pub fn is_empty(&self) -> bool {
        self.k_min > self.k_max
    }

    pub fn len(&self) -> u128 {
        if self.is_empty() {
            0
        } else {
            (self.k_max - self.k_min) as u128 + 1
        }
    }
}

/// Residue data of the family formula for a coprime pair.
///
/// `a1` is the least `x >= 0` with `a·x ≡ m (mod b)`, `b1` the least
/// `y >= 0` with `b·y ≡ m (mod a)`. The solutions are
/// `(b·i + a1, (max_index - i)·a + b1)` for `0 <= i <= max_index`, and
/// `max_index = -1` encodes an empty family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinnerData {
    pub a1: i128,
    pub b1: i128,
    pub max_index: i128,
}

impl BinnerData {
    pub fn family_size(&self) -> u128 {
        (self.max_index + 1) as u128
    }

    /// The `i`-th family member for the pair `(a, b)` this data was built from.
    pub fn member(&self, a: i128, b: i128, i: i128) -> (i128, i128) {
        (b * i + self.a1, (self.max_index - i) * a + self.b1)
    }
}

/// The 1-based residues of the four-case table: `a·a' ≡ -n (mod b)` with
/// `1 <= a' <= b`, and `b·b' ≡ -n (mod a)` with `1 <= b' <= a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BcsResidues {
    pub a_prime: i128,
    pub b_prime: i128,
}

impl BcsResidues {
    pub fn new(a: i128, b: i128, n: i128) -> Result<Self> {
        let one_based = |x: i128, modulus: i128| if x == 0 { modulus } else { x };
        Ok(Self {
            a_prime: one_based(solve_congruence(a, -n, b)?, b),
            b_prime: one_based(solve_congruence(b, -n, a)?, a),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusPair {
    /// Largest non-representable integer, `-1` when every `n >= 0` is representable.
    pub frobenius: i128,
    pub non_representable_count: u128,
}

/// Some integer solution line of the equation, anchored at the least
/// nonnegative `x0`.
pub fn particular_solution(eq: &TwoVarEquation) -> Result<SolutionLine> {
    let (a, b, m) = eq.wide();
    let cert = extended_gcd(a, b);
    let d = cert.g;
    if m % d != 0 {
        return Err(Error::NoSolution);
    }
    let step_x = b / d;
    let step_y = a / d;
    let x0 = arith::mul(cert.x.rem_euclid(step_x), (m / d) % step_x)?.rem_euclid(step_x);
    let y0 = (m - a * x0) / b;
    Ok(SolutionLine {
        x0,
        y0,
        step_x,
        step_y,
        d,
    })
}

/// The nonnegative solution with the smallest `y`.
///
/// Reduce mod `a` to get the least `y' >= 0` with `b·y' ≡ m (mod a)`, read
/// off `x'`, and if `x'` is negative slide along the solution line into the
/// nonnegative window when there is one.
pub fn first_nonneg(eq: &TwoVarEquation) -> Result<(i64, i64)> {
    let (a, b, m) = eq.wide();
    let y_start = solve_congruence(b, m, a)?;
    let x_start = (m - b * y_start) / a;
    if x_start >= 0 {
        return Ok((x_start as i64, y_start as i64));
    }
    let d = gcd(a, b);
    let line = SolutionLine {
        x0: x_start,
        y0: y_start,
        step_x: b / d,
        step_y: a / d,
        d,
    };
    let window = line.nonneg_window();
    if window.is_empty() {
        return Err(Error::NoNonnegative);
    }
    let (x, y) = line.point(window.k_max);
    Ok((x as i64, y as i64))
}

/// Family-formula count for coprime `(a, b)`:
/// `1 + (m - a·a1 - b·b1) / (ab)` when that is at least one, else zero.
pub fn count_binner(eq: &TwoVarEquation) -> Result<(u128, BinnerData)> {
    eq.require_coprime()?;
    let (a, b, m) = eq.wide();
    // mod 1 has the single residue 0
    let a1 = if b == 1 {
        0
    } else {
        arith::mul(m % b, arith::mod_inverse(a, b)?)? % b
    };
    let b1 = if a == 1 {
        0
    } else {
        arith::mul(m % a, arith::mod_inverse(b, a)?)? % a
    };
    let slack = arith::sub(arith::sub(m, arith::mul(a, a1)?)?, arith::mul(b, b1)?)?;
    let max_index = if slack >= 0 {
        debug_assert_eq!(slack % (a * b), 0);
        slack / arith::mul(a, b)?
    } else {
        -1
    };
    let data = BinnerData { a1, b1, max_index };
    Ok((data.family_size(), data))
}

/// Every nonnegative solution, ascending in `x`. Works for any `gcd(a, b)`.
pub fn enumerate_nonneg(eq: &TwoVarEquation) -> Vec<(i64, i64)> {
    let Ok(line) = particular_solution(eq) else {
        return Vec::new();
    };
    let window = line.nonneg_window();
    if window.is_empty() {
        return Vec::new();
    }
    (window.k_min..=window.k_max)
        .map(|k| {
            let (x, y) = line.point(k);
            (x as i64, y as i64)
        })
        .collect()
}

/// Number of nonnegative solutions for any `gcd(a, b)`, from the window length.
pub fn count_window(eq: &TwoVarEquation) -> u128 {
    particular_solution(eq).map_or(0, |line| line.nonneg_window().len())
}

/// Count via the four-case table on `m = q·ab + r`, `0 <= r < ab`.
pub fn count_bcs_table(eq: &TwoVarEquation) -> Result<u128> {
    eq.require_coprime()?;
    let (a, b, m) = eq.wide();
    let ab = arith::mul(a, b)?;
    let q = (m / ab) as u128;
    let r = m % ab;
    let frobenius = ab - a - b;
    if r > frobenius {
        return Ok(q + 1);
    }
    if r == frobenius {
        return Ok(q);
    }
    let res = BcsResidues::new(a, b, r)?;
    let total = a * res.a_prime + b * res.b_prime + r;
    debug_assert!(total == ab || total == 2 * ab);
    Ok(if total == 2 * ab { q + 1 } else { q })
}

/// `ab - a - b` and `(a - 1)(b - 1) / 2` for coprime `a, b >= 1`.
pub fn frobenius_two(a: i64, b: i64) -> Result<FrobeniusPair> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidInput(format!(
            "coefficients must be positive, got a={a}, b={b}"
        )));
    }
    let (a, b) = (a as i128, b as i128);
    if gcd(a, b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    Ok(FrobeniusPair {
        frobenius: a * b - a - b,
        non_representable_count: ((a - 1) * (b - 1) / 2) as u128,
    })
}

/// Closed form of `p_{1,2}(n) = (2n + 3 + (-1)^n) / 4`.
pub fn closed_form_p12(n: u64) -> u128 {
    let n = n as u128;
    if n.is_multiple_of(2) {
        (2 * n + 4) / 4
    } else {
        (2 * n + 2) / 4
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(a: i64, b: i64, m: i64) -> TwoVarEquation {
        TwoVarEquation::new(a, b, m).unwrap()
    }

    #[test]
    fn rejects_bad_equations() {
        assert!(TwoVarEquation::new(0, 3, 1).is_err());
        assert!(TwoVarEquation::new(2, -3, 1).is_err());
        assert!(TwoVarEquation::new(2, 3, -1).is_err());
    }

    #[test]
    fn particular_solutions() {
        for (a, b, m) in [(2, 3, 28), (3, 4, 5), (6, 9, 84), (7, 11, 0)] {
            let line = particular_solution(&eq(a, b, m)).unwrap();
            for k in -3..=3 {
                let (x, y) = line.point(k);
                assert_eq!(a as i128 * x + b as i128 * y, m as i128);
            }
        }
        assert_eq!(particular_solution(&eq(6, 9, 5)), Err(Error::NoSolution));
    }

    #[test]
    fn first_nonneg_examples() {
        assert_eq!(first_nonneg(&eq(3, 5, 14)), Ok((3, 1)));
        assert_eq!(first_nonneg(&eq(3, 4, 5)), Err(Error::NoNonnegative));
        assert_eq!(first_nonneg(&eq(2, 3, 0)), Ok((0, 0)));
        assert_eq!(first_nonneg(&eq(6, 9, 5)), Err(Error::NoSolution));
        // 2x + 3y = 28: smallest y is 0
        assert_eq!(first_nonneg(&eq(2, 3, 28)), Ok((14, 0)));
    }

    #[test]
    fn binner_examples() {
        assert_eq!(
            count_binner(&eq(2, 3, 28)),
            Ok((
                5,
                BinnerData {
                    a1: 2,
                    b1: 0,
                    max_index: 4
                }
            ))
        );
        assert_eq!(
            count_binner(&eq(5, 7, 71)),
            Ok((
                2,
                BinnerData {
                    a1: 3,
                    b1: 3,
                    max_index: 1
                }
            ))
        );
        let (count, data) = count_binner(&eq(2, 3, 1)).unwrap();
        assert_eq!((count, data.max_index), (0, -1));
        assert_eq!(
            count_binner(&eq(6, 9, 84)),
            Err(Error::NotCoprime { a: 6, b: 9 })
        );
    }

    #[test]
    fn binner_unit_coefficients() {
        // p_{1,2}(n) for the values quoted in the reduction example
        for (n, expected) in [(14, 8), (11, 6), (8, 5), (5, 3), (2, 2)] {
            let (count, data) = count_binner(&eq(1, 2, n)).unwrap();
            assert_eq!(count, expected);
            assert_eq!(data.b1, 0);
        }
        assert_eq!(count_binner(&eq(1, 1, 4)).unwrap().0, 5);
    }

    #[test]
    fn binner_family_members_solve() {
        let (_, data) = count_binner(&eq(2, 3, 28)).unwrap();
        let members: Vec<_> = (0..=data.max_index).map(|i| data.member(2, 3, i)).collect();
        assert_eq!(members, vec![(2, 8), (5, 6), (8, 4), (11, 2), (14, 0)]);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_nonneg(&eq(2, 3, 28)),
            vec![(2, 8), (5, 6), (8, 4), (11, 2), (14, 0)]
        );
        assert_eq!(enumerate_nonneg(&eq(2, 3, 8)), vec![(1, 2), (4, 0)]);
        assert_eq!(enumerate_nonneg(&eq(9, 20, 84)), vec![]);
        assert_eq!(enumerate_nonneg(&eq(6, 9, 5)), vec![]);
        assert_eq!(enumerate_nonneg(&eq(6, 9, 24)), vec![(1, 2), (4, 0)]);
        assert_eq!(enumerate_nonneg(&eq(4, 6, 0)), vec![(0, 0)]);
    }

    #[test]
    fn bcs_examples() {
        assert_eq!(count_bcs_table(&eq(2, 3, 28)), Ok(5));
        assert_eq!(count_bcs_table(&eq(2, 3, 8)), Ok(2));
        assert_eq!(count_bcs_table(&eq(2, 3, 1)), Ok(0));
        assert_eq!(count_bcs_table(&eq(2, 3, 0)), Ok(1));
        assert_eq!(count_bcs_table(&eq(1, 2, 14)), Ok(8));
        assert!(matches!(
            count_bcs_table(&eq(4, 6, 8)),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn bcs_residues_are_one_based() {
        // n ≡ 0: the residues sit at the top of their ranges
        assert_eq!(
            BcsResidues::new(2, 3, 0),
            Ok(BcsResidues {
                a_prime: 3,
                b_prime: 2
            })
        );
        assert_eq!(
            BcsResidues::new(1, 1, 5),
            Ok(BcsResidues {
                a_prime: 1,
                b_prime: 1
            })
        );
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(
            frobenius_two(9, 20),
            Ok(FrobeniusPair {
                frobenius: 151,
                non_representable_count: 76
            })
        );
        assert_eq!(
            frobenius_two(2, 3),
            Ok(FrobeniusPair {
                frobenius: 1,
                non_representable_count: 1
            })
        );
        assert_eq!(
            frobenius_two(2, 5),
            Ok(FrobeniusPair {
                frobenius: 3,
                non_representable_count: 2
            })
        );
        assert_eq!(
            frobenius_two(1, 7),
            Ok(FrobeniusPair {
                frobenius: -1,
                non_representable_count: 0
            })
        );
        assert!(matches!(frobenius_two(6, 9), Err(Error::NotCoprime { .. })));
        assert!(matches!(frobenius_two(0, 9), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn p12_closed_form() {
        assert_eq!(closed_form_p12(14), 8);
        assert_eq!(closed_form_p12(0), 1);
        assert_eq!(closed_form_p12(5), 3);
        assert_eq!(closed_form_p12(11), 6);
    }

    #[test]
    fn window_count_matches_enumeration() {
        let e = eq(6, 9, 84);
        assert_eq!(count_window(&e), enumerate_nonneg(&e).len() as u128);
        assert_eq!(count_window(&eq(6, 9, 64)), 0);
    }
}
