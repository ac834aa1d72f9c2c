//! Order reduction through the coordinate faces.
//!
//! Setting one variable to zero turns `px + qy + lz = n` into a
//! two-variable equation. The nonnegative solutions on those three faces
//! are the boundary sets. This module builds them, runs the four-step
//! completion procedure that combines boundary points, and measures how far
//! the `s_a - s_b + s_c` representation reaches over the full solution set.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::three_var::{self, SolutionTriple, ThreeVarInstance};
use crate::two_var::{self, TwoVarEquation};

pub const DEFAULT_SEARCH_BUDGET: u128 = 100_000_000;

/// A coordinate face, named by the variable that is zero on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Face {
    /// `x = 0`: `q·y + l·z = n`
    #[serde(rename = "x=0")]
    X,
    /// `y = 0`: `p·x + l·z = n`
    #[serde(rename = "y=0")]
    Y,
    /// `z = 0`: `p·x + q·y = n`
    #[serde(rename = "z=0")]
    Z,
}

impl Face {
    pub const ALL: [Face; 3] = [Face::X, Face::Y, Face::Z];

    fn index(self) -> usize {
        self as usize
    }
}

/// The nonnegative solutions on each face, each list sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionSets {
    pub s1: Vec<SolutionTriple>,
    pub s2: Vec<SolutionTriple>,
    pub s3: Vec<SolutionTriple>,
    /// Whether the face equation has integer solutions at all, i.e. whether
    /// the gcd of its two coefficients divides `n`.
    pub face_solvable: [bool; 3],
}

impl ReductionSets {
    pub fn face(&self, face: Face) -> &[SolutionTriple] {
        match face {
            Face::X => &self.s1,
            Face::Y => &self.s2,
            Face::Z => &self.s3,
        }
    }

    /// `|S1| + |S2| + |S3|`, counting points shared by two faces twice.
    pub fn n_hat(&self) -> usize {
        self.s1.len() + self.s2.len() + self.s3.len()
    }

    /// Sorted, deduplicated union of the three faces.
    pub fn union(&self) -> Vec<SolutionTriple> {
        let mut all: Vec<_> = self
            .s1
            .iter()
            .chain(&self.s2)
            .chain(&self.s3)
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    fn faces_containing(&self, s: &SolutionTriple) -> Vec<Face> {
        Face::ALL
            .into_iter()
            .filter(|&f| self.face(f).binary_search(s).is_ok())
            .collect()
    }
}

/// `s_a - s_b + s_c` together with the faces each term lies on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinationWitness {
    pub target: SolutionTriple,
    pub s_a: SolutionTriple,
    pub s_b: SolutionTriple,
    pub s_c: SolutionTriple,
    pub signature: [Vec<Face>; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    Holds,
    Violated,
    /// `N > 0` but fewer than three boundary points, so `3·C(N̂, 3) = 0`.
    Review,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub instance: ThreeVarInstance,
    pub total_solutions: u128,
    /// Solutions with a witness `s_a ∈ S1, s_b ∈ S2, s_c ∈ S3`.
    pub witnessed_strict: u128,
    /// Solutions with a witness drawn from the union of the faces.
    pub witnessed_free: u128,
    pub counterexamples: Vec<SolutionTriple>,
    pub strict_witnesses: Vec<CombinationWitness>,
    pub free_witnesses: Vec<CombinationWitness>,
    pub face_sizes: [usize; 3],
    pub n_hat: u128,
    /// `3·C(N̂, 3)`
    pub bound: u128,
    pub bound_holds: bool,
    pub bound_status: BoundStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Completion {
    pub solutions: Vec<SolutionTriple>,
    /// Points produced in Step 3, before the union with the faces.
    pub combined: Vec<SolutionTriple>,
    /// Whether the procedure found every solution.
    pub complete: bool,
    pub expected: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCounterexample {
    pub instance: ThreeVarInstance,
    pub unwitnessed: Vec<SolutionTriple>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub instances: u64,
    pub fully_witnessed_free: u64,
    pub fully_witnessed_strict: u64,
    pub with_counterexamples: u64,
    pub bound_violations: u64,
    pub bound_reviews: u64,
    pub counterexamples: Vec<SweepCounterexample>,
    pub violations: Vec<ThreeVarInstance>,
    pub reviews: Vec<ThreeVarInstance>,
}

fn face_solutions(
    a: i64,
    b: i64,
    n: i64,
    place: impl Fn(i64, i64) -> SolutionTriple,
) -> Result<(Vec<SolutionTriple>, bool)> {
    let eq = TwoVarEquation::new(a, b, n)?;
    let solvable = n as i128 % gcd(a as i128, b as i128) == 0;
    let mut out: Vec<_> = two_var::enumerate_nonneg(&eq)
        .into_iter()
        .map(|(u, v)| place(u, v))
        .collect();
    out.sort_unstable();
    Ok((out, solvable))
}

/// Nonnegative solutions on the faces `x = 0`, `y = 0` and `z = 0`.
pub fn boundary_sets(inst: &ThreeVarInstance) -> Result<ReductionSets> {
    let [p, q, l] = inst.coefficients();
    let n = inst.n();
    let (s1, ok1) = face_solutions(q, l, n, |y, z| SolutionTriple::new(0, y, z))?;
    let (s2, ok2) = face_solutions(p, l, n, |x, z| SolutionTriple::new(x, 0, z))?;
    let (s3, ok3) = face_solutions(p, q, n, |x, y| SolutionTriple::new(x, y, 0))?;
    Ok(ReductionSets {
        s1,
        s2,
        s3,
        face_solvable: [ok1, ok2, ok3],
    })
}

/// `(a·s1 + b·s2 + c·s3) / (a + b + c)` when it is a nonnegative integer point.
pub fn combine(
    s1: SolutionTriple,
    s2: SolutionTriple,
    s3: SolutionTriple,
    a: i64,
    b: i64,
    c: i64,
) -> Result<SolutionTriple> {
    let (a, b, c) = (a as i128, b as i128, c as i128);
    let denominator = a + b + c;
    if denominator == 0 {
        return Err(Error::ZeroDenominator);
    }
    let (v1, v2, v3) = (
        s1.to_array().map(i128::from),
        s2.to_array().map(i128::from),
        s3.to_array().map(i128::from),
    );
    let mut out = [0i128; 3];
    for i in 0..3 {
        let numerator = a * v1[i] + b * v2[i] + c * v3[i];
        if numerator % denominator != 0 {
            return Err(Error::NotIntegral);
        }
        out[i] = numerator / denominator;
    }
    if out.iter().any(|&v| v < 0) {
        return Err(Error::NegativeComponent(out));
    }
    let [x, y, z] = out.map(|v| i64::try_from(v).map_err(|_| Error::Overflow));
    Ok(SolutionTriple::new(x?, y?, z?))
}

fn component_sum(s: &SolutionTriple) -> i128 {
    s.x as i128 + s.y as i128 + s.z as i128
}

/// The four-step completion procedure.
///
/// 1. Take the element with the smallest component sum from the smallest
///    face (ties: lexicographic element, lower face index).
/// 2. Subtract from it every element of the next smallest face, keeping
///    differences whose `z` component is positive.
/// 3. Add each difference to every element of the remaining face, keeping
///    sums with all components positive.
/// 4. Return the union of the faces and the Step 3 points.
///
/// Empty faces take no part. With two nonempty faces, Step 3 reuses the
/// Step 2 face; with one, all steps use it. `complete` compares against
/// the slice-formula count and is never patched up from an oracle.
pub fn heuristic_complete(inst: &ThreeVarInstance) -> Result<Completion> {
    let sets = boundary_sets(inst)?;
    let (expected, _) = three_var::count_closed(inst)?;

    let mut faces: Vec<Face> = Face::ALL
        .into_iter()
        .filter(|&f| !sets.face(f).is_empty())
        .collect();
    faces.sort_by_key(|&f| (sets.face(f).len(), f.index()));

    let mut combined = Vec::new();
    if let Some(&smallest) = faces.first() {
        let next = faces.get(1).copied().unwrap_or(smallest);
        let last = faces.get(2).copied().unwrap_or(next);
        let pivot = *sets
            .face(smallest)
            .iter()
            .min_by_key(|s| (component_sum(s), **s))
            .expect("face is nonempty");
        let pivot = pivot.to_array().map(i128::from);
        for t in sets.face(next) {
            let t = t.to_array().map(i128::from);
            let diff = [pivot[0] - t[0], pivot[1] - t[1], pivot[2] - t[2]];
            if diff[2] <= 0 {
                continue;
            }
            for r in sets.face(last) {
                let r = r.to_array().map(i128::from);
                let sum = [diff[0] + r[0], diff[1] + r[1], diff[2] + r[2]];
                if sum.iter().all(|&v| v > 0) {
                    combined.push(SolutionTriple::new(
                        sum[0] as i64,
                        sum[1] as i64,
                        sum[2] as i64,
                    ));
                }
            }
        }
    }
    combined.sort_unstable_by_key(|s| (s.z, s.x, s.y));
    combined.dedup();

    let mut solutions = sets.union();
    solutions.extend(&combined);
    solutions.sort_unstable_by_key(|s| (s.z, s.x, s.y));
    solutions.dedup();
    debug_assert!(solutions.iter().all(|s| inst.is_solution(s)));

    let complete = solutions.len() as u128 == expected;
    Ok(Completion {
        solutions,
        combined,
        complete,
        expected,
    })
}

type Diff = [i64; 3];

fn diff(a: &SolutionTriple, b: &SolutionTriple) -> Diff {
    [a.x - b.x, a.y - b.y, a.z - b.z]
}

/// `s_c - s_b` for every pair, mapped to its lexicographically first `(s_b, s_c)`.
fn difference_table(
    minuends: &[SolutionTriple],
    subtrahends: &[SolutionTriple],
) -> HashMap<Diff, (SolutionTriple, SolutionTriple)> {
    let mut table = HashMap::with_capacity(minuends.len() * subtrahends.len());
    for s_b in subtrahends {
        for s_c in minuends {
            table.entry(diff(s_c, s_b)).or_insert((*s_b, *s_c));
        }
    }
    table
}

/// Lexicographically first `(s_a, s_b, s_c)` with `s_a - s_b + s_c = target`.
fn find_witness(
    target: &SolutionTriple,
    firsts: &[SolutionTriple],
    table: &HashMap<Diff, (SolutionTriple, SolutionTriple)>,
) -> Option<(SolutionTriple, SolutionTriple, SolutionTriple)> {
    firsts.iter().find_map(|s_a| {
        table
            .get(&diff(target, s_a))
            .map(|&(s_b, s_c)| (*s_a, s_b, s_c))
    })
}

pub fn conjecture_check(inst: &ThreeVarInstance) -> Result<ConjectureReport> {
    conjecture_check_within(inst, DEFAULT_SEARCH_BUDGET)
}

/// Search every solution for `s_a - s_b + s_c` witnesses, both with the
/// terms tied to faces 1, 2, 3 in order and with all three drawn from the
/// union of the faces.
///
/// `budget` caps `|S|^3`, the size of the free search space.
pub fn conjecture_check_within(inst: &ThreeVarInstance, budget: u128) -> Result<ConjectureReport> {
    let sets = boundary_sets(inst)?;
    let union = sets.union();
    let space = (union.len() as u128).pow(3);
    if space > budget {
        return Err(Error::BudgetExceeded {
            budget,
            unit: "witness triples",
        });
    }
    let solutions = three_var::enumerate_exhaustive(inst)?;

    let strict_table = difference_table(&sets.s3, &sets.s2);
    let free_table = difference_table(&union, &union);
    let witness = |target: &SolutionTriple, (s_a, s_b, s_c)| CombinationWitness {
        target: *target,
        s_a,
        s_b,
        s_c,
        signature: [
            sets.faces_containing(&s_a),
            sets.faces_containing(&s_b),
            sets.faces_containing(&s_c),
        ],
    };

    let mut strict_witnesses = Vec::new();
    let mut free_witnesses = Vec::new();
    let mut counterexamples = Vec::new();
    for target in &solutions {
        if let Some(w) = find_witness(target, &sets.s1, &strict_table) {
            strict_witnesses.push(witness(target, w));
        }
        match find_witness(target, &union, &free_table) {
            Some(w) => free_witnesses.push(witness(target, w)),
            None => counterexamples.push(*target),
        }
    }

    let total = solutions.len() as u128;
    let n_hat = sets.n_hat() as u128;
    let bound = 3 * binomial3(n_hat);
    let bound_holds = total <= bound;
    let bound_status = if bound_holds {
        BoundStatus::Holds
    } else if n_hat < 3 {
        BoundStatus::Review
    } else {
        BoundStatus::Violated
    };
    Ok(ConjectureReport {
        instance: *inst,
        total_solutions: total,
        witnessed_strict: strict_witnesses.len() as u128,
        witnessed_free: free_witnesses.len() as u128,
        counterexamples,
        strict_witnesses,
        free_witnesses,
        face_sizes: [sets.s1.len(), sets.s2.len(), sets.s3.len()],
        n_hat,
        bound,
        bound_holds,
        bound_status,
    })
}

fn binomial3(n: u128) -> u128 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Instances `p <= q <= l` within the bounds with `gcd(p, q, l) = 1`, and
/// every `0 <= n <= n_max`, in lexicographic `(p, q, l, n)` order.
pub fn sweep_grid(p_max: i64, q_max: i64, l_max: i64, n_max: i64) -> Vec<ThreeVarInstance> {
    let mut grid = Vec::new();
    for p in 1..=p_max {
        for q in p..=q_max {
            for l in q..=l_max {
                if crate::arith::gcd3(p as i128, q as i128, l as i128) != 1 {
                    continue;
                }
                for n in 0..=n_max {
                    grid.push(ThreeVarInstance::new(p, q, l, n).expect("grid values are valid"));
                }
            }
        }
    }
    grid
}

/// Run [`conjecture_check_within`] over [`sweep_grid`] in parallel and merge
/// the results in grid order.
pub fn conjecture_sweep(
    p_max: i64,
    q_max: i64,
    l_max: i64,
    n_max: i64,
    budget: u128,
) -> Result<SweepReport> {
    let grid = sweep_grid(p_max, q_max, l_max, n_max);
    let reports: Vec<ConjectureReport> = grid
        .par_iter()
        .map(|inst| {
            conjecture_check_within(inst, budget).map(|mut r| {
                // witness lists are not needed for the aggregate
                r.strict_witnesses.clear();
                r.free_witnesses.clear();
                r
            })
        })
        .collect::<Result<_>>()?;

    let mut out = SweepReport::default();
    for r in reports {
        out.instances += 1;
        if r.witnessed_free == r.total_solutions {
            out.fully_witnessed_free += 1;
        } else {
            out.with_counterexamples += 1;
            out.counterexamples.push(SweepCounterexample {
                instance: r.instance,
                unwitnessed: r.counterexamples,
            });
        }
        if r.witnessed_strict == r.total_solutions {
            out.fully_witnessed_strict += 1;
        }
        match r.bound_status {
            BoundStatus::Holds => {}
            BoundStatus::Violated => {
                out.bound_violations += 1;
                out.violations.push(r.instance);
            }
            BoundStatus::Review => {
                out.bound_reviews += 1;
                out.reviews.push(r.instance);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(p: i64, q: i64, l: i64, n: i64) -> ThreeVarInstance {
        ThreeVarInstance::new(p, q, l, n).unwrap()
    }

    fn t(x: i64, y: i64, z: i64) -> SolutionTriple {
        SolutionTriple::new(x, y, z)
    }

    fn sorted(mut v: Vec<SolutionTriple>) -> Vec<SolutionTriple> {
        v.sort_unstable();
        v
    }

    #[test]
    fn boundary_sets_five_seven_eleven() {
        let sets = boundary_sets(&inst(5, 7, 11, 71)).unwrap();
        assert_eq!(sets.s1, vec![t(0, 7, 2)]);
        assert_eq!(sets.s2, vec![t(1, 0, 6), t(12, 0, 1)]);
        assert_eq!(sets.s3, vec![t(3, 8, 0), t(10, 3, 0)]);
        assert_eq!(sets.face_solvable, [true; 3]);
    }

    #[test]
    fn boundary_sets_mcnugget_84() {
        let sets = boundary_sets(&inst(6, 9, 20, 84)).unwrap();
        assert!(sets.s1.is_empty());
        assert_eq!(sets.s2, vec![t(4, 0, 3), t(14, 0, 0)]);
        assert_eq!(sets.s3.len(), 5);
        assert_eq!(sets.n_hat(), 7);
        assert_eq!(sets.union().len(), 6);
    }

    #[test]
    fn unsolvable_face_is_flagged() {
        // 6x + 9y = 7 has no integer solutions at all
        let sets = boundary_sets(&inst(6, 9, 20, 7)).unwrap();
        assert!(!sets.face_solvable[2]);
        assert!(sets.s3.is_empty());
    }

    #[test]
    fn combine_examples() {
        assert_eq!(
            combine(t(8, 4, 0), t(11, 2, 0), t(4, 0, 3), 1, -1, 1),
            Ok(t(1, 2, 3))
        );
        assert_eq!(
            combine(t(12, 0, 1), t(0, 7, 2), t(3, 8, 0), 1, -1, 1),
            Err(Error::NegativeComponent([15, 1, -1]))
        );
        let s = t(4, 5, 6);
        assert_eq!(combine(s, s, s, 1, 1, 1), Ok(s));
        assert_eq!(combine(s, s, s, 1, -1, 0), Err(Error::ZeroDenominator));
        assert_eq!(combine(t(1, 0, 0), s, s, 1, 0, 1), Err(Error::NotIntegral));
    }

    #[test]
    fn heuristic_one_two_three() {
        let c = heuristic_complete(&inst(1, 2, 3, 14)).unwrap();
        assert!(c.complete);
        assert_eq!(c.solutions.len(), 24);
        assert_eq!(
            sorted(c.combined),
            sorted(vec![
                t(1, 5, 1),
                t(3, 4, 1),
                t(5, 3, 1),
                t(7, 2, 1),
                t(9, 1, 1),
                t(2, 3, 2),
                t(4, 2, 2),
                t(6, 1, 2),
                t(1, 2, 3),
                t(3, 1, 3),
            ])
        );
    }

    #[test]
    fn heuristic_mcnugget_84() {
        let c = heuristic_complete(&inst(6, 9, 20, 84)).unwrap();
        assert!(c.complete);
        assert_eq!(c.solutions.len(), 7);
        assert!(c.combined.contains(&t(1, 2, 3)));
    }

    #[test]
    fn heuristic_five_seven_eleven_misses() {
        // Pivot (0,7,2); only (12,0,1) leaves a positive z difference, and
        // (-12,7,1) plus either z=0 point keeps a negative x.
        let c = heuristic_complete(&inst(5, 7, 11, 71)).unwrap();
        assert!(!c.complete);
        assert!(c.combined.is_empty());
        assert_eq!(c.solutions.len(), 5);
        assert_eq!(c.expected, 9);
    }

    #[test]
    fn heuristic_no_boundary_points() {
        let c = heuristic_complete(&inst(2, 4, 6, 5)).unwrap();
        assert!(c.solutions.is_empty());
        assert!(c.complete);
    }

    #[test]
    fn conjecture_zero_n() {
        let r = conjecture_check(&inst(3, 5, 7, 0)).unwrap();
        assert_eq!(r.total_solutions, 1);
        assert_eq!(r.witnessed_free, 1);
        assert_eq!(r.witnessed_strict, 1);
        assert_eq!(r.free_witnesses[0].s_a, t(0, 0, 0));
        assert_eq!(r.bound_status, BoundStatus::Holds);
    }

    #[test]
    fn conjecture_five_seven_eleven() {
        let r = conjecture_check(&inst(5, 7, 11, 71)).unwrap();
        assert_eq!(r.total_solutions, 9);
        assert_eq!(r.witnessed_free, 9);
        assert!(r.counterexamples.is_empty());
        for w in &r.free_witnesses {
            assert_eq!(combine(w.s_a, w.s_b, w.s_c, 1, -1, 1), Ok(w.target));
        }
        assert_eq!(r.n_hat, 5);
        assert_eq!(r.bound, 30);
    }

    #[test]
    fn witness_is_lexicographically_first() {
        let r = conjecture_check(&inst(5, 7, 11, 71)).unwrap();
        let sets = boundary_sets(&inst(5, 7, 11, 71)).unwrap();
        let union = sets.union();
        for w in &r.free_witnesses {
            let mut first = None;
            'outer: for a in &union {
                for b in &union {
                    for c in &union {
                        if combine(*a, *b, *c, 1, -1, 1) == Ok(w.target) {
                            first = Some((*a, *b, *c));
                            break 'outer;
                        }
                    }
                }
            }
            assert_eq!(first, Some((w.s_a, w.s_b, w.s_c)));
        }
    }

    #[test]
    fn conjecture_budget() {
        assert!(matches!(
            conjecture_check_within(&inst(1, 2, 3, 14), 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn review_status_for_tiny_boundary() {
        // 2x + 3y + 5z = 7 has (1,0,1) and (2,1,0); faces hold 2 points in total
        let r = conjecture_check(&inst(2, 3, 5, 7)).unwrap();
        assert_eq!(r.total_solutions, 2);
        assert_eq!(r.n_hat, 2);
        assert_eq!(r.bound_status, BoundStatus::Review);
        assert!(!r.bound_holds);
    }

    #[test]
    fn empty_sweep() {
        let r = conjecture_sweep(0, 5, 5, 10, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(r.instances, 0);
    }

    #[test]
    fn sweep_grid_order() {
        let grid = sweep_grid(2, 2, 2, 1);
        let keys: Vec<_> = grid.iter().map(|i| (i.coefficients(), i.n())).collect();
        assert_eq!(
            keys,
            vec![
                ([1, 1, 1], 0),
                ([1, 1, 1], 1),
                ([1, 1, 2], 0),
                ([1, 1, 2], 1),
                ([1, 2, 2], 0),
                ([1, 2, 2], 1),
            ]
        );
    }
}
