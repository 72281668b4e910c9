//! Symmetry-breaking invariants: the distinguishing number, the
//! distinguishing threshold, motion, and counts of non-equivalent
//! distinguishing colorings.
//!
//! A vertex coloring is distinguishing when no automorphism except the
//! identity preserves every color class. The threshold is the least palette
//! size past which every surjective coloring is distinguishing; it equals
//! one plus the largest cycle count over non-identity automorphisms, where
//! fixed points count as cycles.

use crate::autsearch::{automorphism_generators, has_nontrivial_colored_automorphism};
use crate::error::{Error, Result};
use crate::families::{binomial, factorial};
use crate::graph::Graph;
use crate::perm::{Perm, DEFAULT_GROUP_CAP};
use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

/// Coloring searches give up after testing this many candidates by default.
pub const DEFAULT_COLORING_BUDGET: u64 = 10_000_000;

/// A vertex coloring with colors `1, ..=, palette`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    palette: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, palette: usize) -> Result<Self> {
        if palette == 0 || colors.is_empty() {
            return Err(Error::InvalidParams(
                "coloring needs at least one vertex and one color".to_string(),
            ));
        }
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 || c > palette {
                return Err(Error::InvalidParams(format!(
                    "vertex {v} has color {c}, outside 1..={palette}"
                )));
            }
        }
        Ok(Coloring { colors, palette })
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually present.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette + 1];
        let mut used = 0;
        for &c in &self.colors {
            if !seen[c] {
                seen[c] = true;
                used += 1;
            }
        }
        used
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }
}

/// Outcome of a threshold computation. The witness attains the maximal cycle
/// count and is absent exactly for asymmetric graphs.
#[derive(Clone, Debug)]
pub struct ThresholdResult {
    pub theta: usize,
    pub witness: Option<Perm>,
    pub witness_order: Option<u64>,
}

/// Least number of points moved by any non-identity automorphism, with a
/// witness attaining it.
#[derive(Clone, Debug)]
pub struct MotionResult {
    pub motion: usize,
    pub witness: Perm,
}

/// Resource limits for group enumeration and coloring searches.
#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    pub group_cap: usize,
    pub coloring_budget: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            group_cap: DEFAULT_GROUP_CAP,
            coloring_budget: DEFAULT_COLORING_BUDGET,
        }
    }
}

pub(crate) fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Full automorphism group as a lexicographically sorted element list; the
/// identity comes first.
pub(crate) fn enumerated_aut(g: &Graph, cap: usize) -> Result<Vec<Perm>> {
    let mut group = automorphism_generators(g, None);
    group.close(cap)?;
    Ok(group.elements().unwrap().to_vec())
}

pub(crate) fn theta_from_elements(elements: &[Perm]) -> ThresholdResult {
    let mut best: Option<(usize, &Perm)> = None;
    for p in elements {
        if p.is_identity() || !is_prime(p.order()) {
            continue;
        }
        let c = p.cycle_count();
        if best.is_none_or(|(bc, _)| c > bc) {
            best = Some((c, p));
        }
    }
    // A cycle-count maximizer always has all cycles of one prime length:
    // otherwise a proper power has strictly more cycles. So restricting the
    // scan to prime-order elements loses nothing.
    debug_assert_eq!(
        best.map_or(0, |(c, _)| c),
        elements
            .iter()
            .filter(|p| !p.is_identity())
            .map(|p| p.cycle_count())
            .max()
            .unwrap_or(0)
    );
    match best {
        None => ThresholdResult {
            theta: 1,
            witness: None,
            witness_order: None,
        },
        Some((c, p)) => ThresholdResult {
            theta: c + 1,
            witness: Some(p.clone()),
            witness_order: Some(p.order()),
        },
    }
}

/// Distinguishing threshold: the least `t` such that every surjective
/// `t`-coloring is distinguishing.
pub fn theta(g: &Graph) -> Result<ThresholdResult> {
    theta_with(g, &Budgets::default())
}

pub fn theta_with(g: &Graph, budgets: &Budgets) -> Result<ThresholdResult> {
    let elements = enumerated_aut(g, budgets.group_cap)?;
    Ok(theta_from_elements(&elements))
}

/// Whether no non-identity automorphism preserves every color class.
pub fn is_distinguishing(g: &Graph, coloring: &Coloring) -> Result<bool> {
    if coloring.len() != g.n() {
        return Err(Error::InvalidParams(format!(
            "coloring has {} entries for a graph on {} vertices",
            coloring.len(),
            g.n()
        )));
    }
    Ok(!has_nontrivial_colored_automorphism(g, coloring.as_slice()))
}

/// Distinguishing number: the least `k` admitting a distinguishing coloring
/// with `k` colors.
pub fn distinguishing_number(g: &Graph) -> Result<usize> {
    distinguishing_number_with(g, &Budgets::default())
}

pub fn distinguishing_number_with(g: &Graph, budgets: &Budgets) -> Result<usize> {
    let mut tested = 0u64;
    for k in 1..=g.n() {
        let mut colors = Vec::with_capacity(g.n());
        if rgs_search(g, k, &mut colors, 0, budgets.coloring_budget, &mut tested)? {
            return Ok(k);
        }
    }
    unreachable!("an all-distinct coloring is always distinguishing")
}

/// Depth-first search over colorings in restricted-growth form (a fresh
/// color may only follow all smaller ones), requiring exactly `k` colors.
/// One representative per color partition suffices: whether a coloring is
/// distinguishing depends only on its partition into classes.
fn rgs_search(
    g: &Graph,
    k: usize,
    colors: &mut Vec<usize>,
    max_used: usize,
    budget: u64,
    tested: &mut u64,
) -> Result<bool> {
    let n = g.n();
    if colors.len() == n {
        *tested += 1;
        if *tested > budget {
            return Err(Error::SearchBudgetExceeded(budget));
        }
        return Ok(!has_nontrivial_colored_automorphism(g, colors));
    }
    let remaining = n - colors.len();
    for c in 1..=(max_used + 1).min(k) {
        let new_max = max_used.max(c);
        if new_max + (remaining - 1) < k {
            continue;
        }
        colors.push(c);
        if rgs_search(g, k, colors, new_max, budget, tested)? {
            return Ok(true);
        }
        colors.pop();
    }
    Ok(false)
}

pub(crate) fn motion_from_elements(elements: &[Perm]) -> Option<MotionResult> {
    let mut best: Option<(usize, &Perm)> = None;
    for p in elements {
        if p.is_identity() {
            continue;
        }
        let m = p.moved_points().len();
        if best.is_none_or(|(bm, _)| m < bm) {
            best = Some((m, p));
        }
    }
    best.map(|(m, p)| MotionResult {
        motion: m,
        witness: p.clone(),
    })
}

/// Motion: the least number of vertices moved by a non-identity
/// automorphism. Fails with `NoSymmetry` on asymmetric graphs.
pub fn motion(g: &Graph) -> Result<MotionResult> {
    motion_with(g, &Budgets::default())
}

pub fn motion_with(g: &Graph, budgets: &Budgets) -> Result<MotionResult> {
    let elements = enumerated_aut(g, budgets.group_cap)?;
    motion_from_elements(&elements).ok_or(Error::NoSymmetry)
}

/// Checks `theta >= n - motion + 2`, which holds for every graph with a
/// non-identity automorphism: a motion witness has at least `n - motion + 1`
/// cycles. Fails with `NoSymmetry` on asymmetric graphs.
pub fn motion_bound_check(g: &Graph) -> Result<bool> {
    let elements = enumerated_aut(g, Budgets::default().group_cap)?;
    let m = motion_from_elements(&elements).ok_or(Error::NoSymmetry)?;
    let t = theta_from_elements(&elements);
    Ok(t.theta >= g.n() - m.motion + 2)
}

/// Stirling number of the second kind: partitions of an `n`-set into `k`
/// non-empty blocks.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    // row[j] = S(i, j) for the current i, growing i from 0 to n.
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::from(1u32);
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = BigUint::from(j) * &row[j] + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

/// How `phi_k` is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiMode {
    /// Enumerate all `k^n` colorings and count orbits directly.
    Brute,
    /// `k! S(n,k) / |Aut|`, valid for `k >= theta` where every surjective
    /// coloring is distinguishing.
    Formula,
}

/// How `phi_le_k` is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiLeMode {
    /// Enumerate all `k^n` colorings and count orbits directly.
    Brute,
    /// Expand over the number of colors used: sum of `C(k,i) phi_i`.
    FormulaSum,
}

/// Number of non-equivalent distinguishing colorings using exactly `k`
/// colors, where two colorings are equivalent when an automorphism carries
/// one to the other.
pub fn phi_k(g: &Graph, k: usize, mode: PhiMode) -> Result<BigUint> {
    phi_k_with(g, k, mode, &Budgets::default())
}

pub fn phi_k_with(g: &Graph, k: usize, mode: PhiMode, budgets: &Budgets) -> Result<BigUint> {
    match mode {
        PhiMode::Brute => brute_orbit_count(g, k, true, budgets),
        PhiMode::Formula => {
            let elements = enumerated_aut(g, budgets.group_cap)?;
            let t = theta_from_elements(&elements);
            if k < t.theta {
                return Err(Error::FormulaInapplicable { k, theta: t.theta });
            }
            let numerator = factorial(k) * stirling2(g.n(), k);
            let aut = BigUint::from(elements.len());
            assert!(
                (&numerator % &aut).is_zero(),
                "surjective colorings split into free orbits"
            );
            Ok(numerator / aut)
        }
    }
}

/// Number of non-equivalent distinguishing colorings from a palette of `k`
/// labeled colors (at most `k` used).
pub fn phi_le_k(g: &Graph, k: usize, mode: PhiLeMode) -> Result<BigUint> {
    phi_le_k_with(g, k, mode, &Budgets::default())
}

pub fn phi_le_k_with(
    g: &Graph,
    k: usize,
    mode: PhiLeMode,
    budgets: &Budgets,
) -> Result<BigUint> {
    match mode {
        PhiLeMode::Brute => brute_orbit_count(g, k, false, budgets),
        PhiLeMode::FormulaSum => {
            let elements = enumerated_aut(g, budgets.group_cap)?;
            let t = theta_from_elements(&elements);
            let d = distinguishing_number_with(g, budgets)?;
            let mut sum = BigUint::zero();
            for i in d..=k {
                let mode = if i >= t.theta {
                    PhiMode::Formula
                } else {
                    PhiMode::Brute
                };
                sum += binomial(k, i) * phi_k_with(g, i, mode, budgets)?;
            }
            Ok(sum)
        }
    }
}

/// Counts orbits of distinguishing colorings by exhausting all `k^n` color
/// vectors. The automorphism group acts freely on distinguishing colorings,
/// so the orbit count is the raw count divided by the group order.
fn brute_orbit_count(
    g: &Graph,
    k: usize,
    surjective_only: bool,
    budgets: &Budgets,
) -> Result<BigUint> {
    let n = g.n();
    if k == 0 {
        return Ok(BigUint::zero());
    }
    let total = (k as u128)
        .checked_pow(n as u32)
        .filter(|&t| t <= budgets.coloring_budget as u128)
        .ok_or(Error::SearchBudgetExceeded(budgets.coloring_budget))?;
    let elements = enumerated_aut(g, budgets.group_cap)?;
    let kept = (0..total as u64)
        .into_par_iter()
        .filter(|&code| {
            let mut colors = vec![0usize; n];
            let mut rest = code;
            for slot in colors.iter_mut() {
                *slot = (rest % k as u64) as usize + 1;
                rest /= k as u64;
            }
            if surjective_only {
                let mut seen = vec![false; k + 1];
                for &c in &colors {
                    seen[c] = true;
                }
                if !seen[1..].iter().all(|&s| s) {
                    return false;
                }
            }
            elements[1..]
                .iter()
                .all(|p| (0..n).any(|v| colors[p.apply(v)] != colors[v]))
        })
        .count() as u64;
    let aut = elements.len() as u64;
    assert_eq!(kept % aut, 0, "distinguishing colorings form free orbits");
    Ok(BigUint::from(kept / aut))
}
