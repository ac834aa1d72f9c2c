//! Counting and enumerating nonnegative solutions of `px + qy + lz = n`.
//!
//! Internally each instance is reordered so that the coefficients ascend and
//! the largest one drives the `z`-slices. Solutions handed back to callers
//! are always in the caller's original variable order.

use serde::{Deserialize, Serialize};

use crate::arith::{self, gcd, gcd3, solve_congruence};
use crate::error::{Error, Result};
use crate::two_var::{self, BinnerData, TwoVarEquation};

/// The equation `p·x + q·y + l·z = n` with `p, q, l >= 1` and `n >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawInstance", into = "RawInstance")]
pub struct ThreeVarInstance {
    coefficients: [i64; 3],
    n: i64,
    /// `order[i]` is the user-order index of the `i`-th smallest coefficient.
    order: [usize; 3],
}

#[derive(Serialize, Deserialize)]
struct RawInstance {
    p: i64,
    q: i64,
    l: i64,
    n: i64,
}

impl TryFrom<RawInstance> for ThreeVarInstance {
    type Error = Error;

    fn try_from(raw: RawInstance) -> Result<Self> {
        Self::new(raw.p, raw.q, raw.l, raw.n)
    }
}

impl From<ThreeVarInstance> for RawInstance {
    fn from(inst: ThreeVarInstance) -> Self {
        let [p, q, l] = inst.coefficients;
        RawInstance { p, q, l, n: inst.n }
    }
}

impl ThreeVarInstance {
    pub fn new(p: i64, q: i64, l: i64, n: i64) -> Result<Self> {
        if p < 1 || q < 1 || l < 1 {
            return Err(Error::InvalidInput(format!(
                "coefficients must be positive, got ({p}, {q}, {l})"
            )));
        }
        if n < 0 {
            return Err(Error::InvalidInput(format!(
                "n must be nonnegative, got {n}"
            )));
        }
        let coefficients = [p, q, l];
        let mut order = [0, 1, 2];
        order.sort_by_key(|&i| coefficients[i]);
        Ok(Self {
            coefficients,
            n,
            order,
        })
    }

    pub fn p(&self) -> i64 {
        self.coefficients[0]
    }

    pub fn q(&self) -> i64 {
        self.coefficients[1]
    }

    pub fn l(&self) -> i64 {
        self.coefficients[2]
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// `(p, q, l)` in the caller's order.
    pub fn coefficients(&self) -> [i64; 3] {
        self.coefficients
    }

    pub fn canonical_order(&self) -> [usize; 3] {
        self.order
    }

    /// Coefficients in ascending order, as the solvers see them.
    pub fn canonical_coefficients(&self) -> [i64; 3] {
        self.order.map(|i| self.coefficients[i])
    }

    /// Map a solution in canonical order back to the caller's order.
    pub fn to_user(&self, canonical: [i128; 3]) -> SolutionTriple {
        let mut user = [0i64; 3];
        for (i, &slot) in self.order.iter().enumerate() {
            user[slot] = canonical[i] as i64;
        }
        SolutionTriple::from(user)
    }

    pub fn to_canonical(&self, user: SolutionTriple) -> [i64; 3] {
        let user = user.to_array();
        self.order.map(|i| user[i])
    }

    pub fn is_solution(&self, s: &SolutionTriple) -> bool {
        let [p, q, l] = self.coefficients.map(i128::from);
        let [x, y, z] = s.to_array().map(i128::from);
        x >= 0 && y >= 0 && z >= 0 && p * x + q * y + l * z == self.n as i128
    }

    /// The same instance with its coefficients permuted: `perm[i]` names the
    /// current slot that moves to slot `i`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        let c = perm.map(|i| self.coefficients[i]);
        Self::new(c[0], c[1], c[2], self.n).expect("permutation keeps validity")
    }
}

/// One nonnegative solution `(x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 3]", into = "[i64; 3]")]
pub struct SolutionTriple {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl SolutionTriple {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Self { x, y, z }
    }

    pub fn to_array(self) -> [i64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[i64; 3]> for SolutionTriple {
    fn from([x, y, z]: [i64; 3]) -> Self {
        Self { x, y, z }
    }
}

impl From<SolutionTriple> for [i64; 3] {
    fn from(s: SolutionTriple) -> Self {
        s.to_array()
    }
}

impl std::fmt::Display for SolutionTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Family of solutions with a fixed value of the slice variable.
///
/// Everything here is in canonical order: `z` belongs to the largest
/// coefficient, and the binner data describes
/// `(p/u)·x + (q/u)·y = (n - z·l)/u` with `u = gcd(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZSliceFamily {
    pub z: i64,
    pub u: i64,
    pub binner: BinnerData,
}

impl ZSliceFamily {
    pub fn size(&self) -> u128 {
        self.binner.family_size()
    }

    /// Canonical-order members `((q/u)·i + a1, (M - i)·(p/u) + b1, z)`.
    pub fn members(&self, inst: &ThreeVarInstance) -> impl Iterator<Item = [i128; 3]> + '_ {
        let [p, q, _] = inst.canonical_coefficients().map(i128::from);
        let u = self.u as i128;
        let z = self.z as i128;
        (0..=self.binner.max_index).map(move |i| {
            let (x, y) = self.binner.member(p / u, q / u, i);
            [x, y, z]
        })
    }
}

fn sort_user_order(solutions: &mut [SolutionTriple]) {
    solutions.sort_unstable_by_key(|s| (s.z, s.x, s.y));
}

/// Slice-sum count through the residue class of the slice variable.
///
/// After dividing out `gcd(p, q, l)`, the slices with `u = gcd(p, q)`
/// dividing `n - z·l` are exactly `z = j + u·k` for the unique
/// `j ∈ [0, u)` with `l·j ≡ n (mod u)`. Each slice is counted with the
/// four-case table.
pub fn count_residue(inst: &ThreeVarInstance) -> Result<u128> {
    let [p, q, l] = inst.canonical_coefficients().map(i128::from);
    let n = inst.n() as i128;
    let g = gcd3(p, q, l);
    if n % g != 0 {
        return Ok(0);
    }
    let (p, q, l, n) = (p / g, q / g, l / g, n / g);
    let u = gcd(p, q);
    let j = solve_congruence(l, n, u)?;
    let first = arith::sub(n, arith::mul(j, l)?)?;
    if first < 0 {
        return Ok(0);
    }
    let base = first / u;
    let (a, b) = ((p / u) as i64, (q / u) as i64);
    let mut total = 0u128;
    for k in 0..=first / (u * l) {
        let m = base - l * k;
        let eq = TwoVarEquation::new(a, b, m as i64)?;
        total = arith::add_count(total, two_var::count_bcs_table(&eq)?)?;
    }
    Ok(total)
}

/// Slice-by-slice family formula, returning the data of every admissible
/// slice (including empty ones).
pub fn count_closed(inst: &ThreeVarInstance) -> Result<(u128, Vec<ZSliceFamily>)> {
    let [p, q, l] = inst.canonical_coefficients();
    let n = inst.n();
    let u = gcd(p as i128, q as i128) as i64;
    let (a, b) = (p / u, q / u);
    let mut total = 0u128;
    let mut slices = Vec::new();
    for z in 0..=n / l {
        let rest = n - z * l;
        if rest % u != 0 {
            continue;
        }
        let (count, binner) = two_var::count_binner(&TwoVarEquation::new(a, b, rest / u)?)?;
        total = arith::add_count(total, count)?;
        slices.push(ZSliceFamily { z, u, binner });
    }
    Ok((total, slices))
}

/// All solutions by expanding each slice family, sorted by `(z, x)` in the
/// caller's variable order.
pub fn enumerate_closed(inst: &ThreeVarInstance) -> Result<Vec<SolutionTriple>> {
    let (_, slices) = count_closed(inst)?;
    let mut out: Vec<SolutionTriple> = slices
        .iter()
        .flat_map(|slice| slice.members(inst))
        .map(|s| inst.to_user(s))
        .collect();
    sort_user_order(&mut out);
    Ok(out)
}

/// All solutions as the union of the two-variable solution sets of
/// `p·x + q·y = n - z·l` for `z = 0..=n/l`.
pub fn enumerate_exhaustive(inst: &ThreeVarInstance) -> Result<Vec<SolutionTriple>> {
    let [p, q, l] = inst.canonical_coefficients();
    let n = inst.n();
    let mut out = Vec::new();
    for z in 0..=n / l {
        let eq = TwoVarEquation::new(p, q, n - z * l)?;
        out.extend(
            two_var::enumerate_nonneg(&eq)
                .into_iter()
                .map(|(x, y)| inst.to_user([x as i128, y as i128, z as i128])),
        );
    }
    sort_user_order(&mut out);
    Ok(out)
}

/// `N(6, 9, 20, n)` through the hand-specialised residue dispatch: only
/// `z ≡ 0, 2, 1 (mod 3)` contribute for `n ≡ 0, 1, 2 (mod 3)`, and each
/// contributing slice is `p_{2,3}((n - 20z)/3)`.
pub fn mcnugget_count(n: u64) -> u128 {
    let n = n as i128;
    let j = match n % 3 {
        0 => 0,
        1 => 2,
        _ => 1,
    };
    if n < 20 * j {
        return 0;
    }
    let base = (n - 20 * j) / 3;
    (0..=(n - 20 * j) / 60)
        .map(|k| {
            let eq = TwoVarEquation::new(2, 3, (base - 20 * k) as i64)
                .expect("slice target is nonnegative");
            two_var::count_binner(&eq).expect("2 and 3 are coprime").0
        })
        .sum()
}
