//! Verification suites that re-check the closed-form rules against direct
//! computation: an exhaustive scan of all labeled graphs up to a small
//! order, the generalized Johnson grid, randomized disjoint unions, and the
//! named fixture graphs. Each suite returns a serializable report.

use crate::autsearch::is_automorphism;
use crate::distinguishing::{
    distinguishing_number, enumerated_aut, is_prime, motion_from_elements, stirling2, theta,
    theta_from_elements, DEFAULT_COLORING_BUDGET,
};
use crate::error::{Error, Result};
use crate::families::{
    binomial, complete, complete_bipartite, cycle, fixtures, generalized_johnson,
    johnson_aut_order, johnson_dnum, johnson_theta, path, petersen, subset_masks,
    union_theta_with_case, JohnsonParams, UnionCase, UnionComponent, UnionSpec,
};
use crate::graph::{disjoint_union, Graph};
use crate::perm::{Perm, DEFAULT_GROUP_CAP};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

/// Largest group order the grid suite will enumerate element by element.
pub const ENUM_ORDER_LIMIT: u64 = 50_000;

const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

/// Outcome of one suite. `tested` counts the units examined (graphs, grid
/// rows, trials, or assertions), `skipped` the units whose expensive checks
/// were gated off, and `counterexamples` holds at most the first twenty
/// violations in full.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub tested: u64,
    pub violations: u64,
    pub skipped: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    fn new(check: &str) -> Self {
        VerificationReport {
            check: check.to_string(),
            tested: 0,
            violations: 0,
            skipped: 0,
            counterexamples: Vec::new(),
            elapsed_ms: 0,
        }
    }

    fn violation(&mut self, graph6: String, detail: String) {
        self.violations += 1;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample { graph6, detail });
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Invariant checks applied to every graph in the exhaustive scan. Returns
/// the list of violated invariants.
fn scan_one(g: &Graph) -> Result<Vec<String>> {
    let n = g.n();
    let elements = enumerated_aut(g, DEFAULT_GROUP_CAP)?;
    let t = theta_from_elements(&elements);
    let d = distinguishing_number(g)?;
    let asymmetric = elements.len() == 1;
    let is_complete = g.edge_count() == n * (n - 1) / 2;
    let is_empty = g.edge_count() == 0;
    let mut bad = Vec::new();
    if (t.theta == 2) != (n == 2) {
        bad.push(format!("threshold {} but n = {n}", t.theta));
    }
    if (t.theta == 1) != asymmetric {
        bad.push(format!(
            "threshold {} with automorphism count {}",
            t.theta,
            elements.len()
        ));
    }
    if (d == 1) != asymmetric {
        bad.push(format!(
            "distinguishing number {d} with automorphism count {}",
            elements.len()
        ));
    }
    if (t.theta == d) != (asymmetric || is_complete || is_empty) {
        bad.push(format!(
            "threshold {} equals distinguishing number {d} unexpectedly",
            t.theta
        ));
    }
    if d > t.theta || t.theta > n {
        bad.push(format!(
            "distinguishing number {d}, threshold {}, n = {n} out of order",
            t.theta
        ));
    }
    match (t.witness_order, asymmetric) {
        (Some(o), false) if !is_prime(o) => {
            bad.push(format!("threshold witness has composite order {o}"));
        }
        (Some(_), true) => bad.push("asymmetric graph has a threshold witness".to_string()),
        (None, false) => bad.push("threshold witness missing".to_string()),
        _ => {}
    }
    if !asymmetric {
        let m = motion_from_elements(&elements).expect("group is non-trivial");
        if t.theta < n - m.motion + 2 {
            bad.push(format!(
                "threshold {} below motion bound {} (motion {})",
                t.theta,
                n - m.motion + 2,
                m.motion
            ));
        }
    }
    Ok(bad)
}

/// Exhaustively scans every labeled graph on 1 to `nmax` vertices, checking
/// the threshold, distinguishing number, witness, and motion invariants on
/// each. `nmax` is capped at 7 (already 2^21 graphs).
pub fn scan_small_graphs(nmax: usize) -> Result<VerificationReport> {
    if nmax > 7 {
        return Err(Error::TooLarge(nmax));
    }
    if nmax == 0 {
        return Err(Error::InvalidParams("scan needs nmax >= 1".to_string()));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("small-graph invariant scan");
    for n in 1..=nmax {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let total = 1u64 << pairs.len();
        let failures: Vec<(u64, String)> = (0..total)
            .into_par_iter()
            .map(|mask| {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let g = Graph::new(n, &edges).expect("scan edges are valid");
                match scan_one(&g) {
                    Ok(bad) => bad
                        .into_iter()
                        .map(|detail| (mask, format!("{}: {detail}", g.to_graph6())))
                        .collect::<Vec<_>>(),
                    Err(e) => vec![(mask, format!("{}: {e}", g.to_graph6()))],
                }
            })
            .reduce(Vec::new, |mut a, b| {
                a.extend(b);
                a
            });
        report.tested += total;
        let mut failures = failures;
        failures.sort();
        for (_, detail) in failures {
            let graph6 = detail.split(':').next().unwrap_or("").to_string();
            report.violation(graph6, detail);
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

/// The vertex permutation induced on the `k`-subset graph by transposing
/// ground elements 1 and 2.
fn ground_transposition(n: usize, k: usize) -> Perm {
    let masks = subset_masks(n, k);
    let images: Vec<usize> = masks
        .iter()
        .map(|&m| {
            let swapped = if (m & 1 == 1) != (m >> 1 & 1 == 1) {
                m ^ 0b11
            } else {
                m
            };
            masks.binary_search(&swapped).expect("swap preserves size")
        })
        .collect();
    Perm::from_images(&images).unwrap()
}

fn check_johnson_row(params: JohnsonParams, report: &mut VerificationReport) -> Result<()> {
    let JohnsonParams { n, k, i } = params;
    let g = generalized_johnson(&params)?;
    let nu = g.n();
    let theta_f = johnson_theta(&params);
    let dnum_f = johnson_dnum(&params);
    let aut_f = johnson_aut_order(&params);
    report.tested += 1;
    let g6 = g.to_graph6();
    let label = format!("J({n},{k},{i})");

    let alpha = ground_transposition(n, k);
    if !is_automorphism(&g, &alpha)? {
        report.violation(g6.clone(), format!("{label}: ground transposition is not an automorphism"));
    }
    let expected_cycles = binomial(n, k) - binomial(n - 2, k - 1);
    if BigUint::from(alpha.cycle_count()) != expected_cycles {
        report.violation(
            g6.clone(),
            format!(
                "{label}: ground transposition has {} cycles, expected {expected_cycles}",
                alpha.cycle_count()
            ),
        );
    }

    let enumerable = aut_f <= BigUint::from(ENUM_ORDER_LIMIT);
    if enumerable {
        match enumerated_aut(&g, ENUM_ORDER_LIMIT as usize) {
            Ok(elements) => {
                if BigUint::from(elements.len()) != aut_f {
                    report.violation(
                        g6.clone(),
                        format!(
                            "{label}: enumerated {} automorphisms, formula says {aut_f}",
                            elements.len()
                        ),
                    );
                }
                let t = theta_from_elements(&elements);
                if BigUint::from(t.theta) != theta_f {
                    report.violation(
                        g6.clone(),
                        format!("{label}: enumerated threshold {}, formula says {theta_f}", t.theta),
                    );
                }
                match t.witness_order {
                    Some(o) if is_prime(o) => {}
                    Some(o) => report.violation(
                        g6.clone(),
                        format!("{label}: threshold witness has composite order {o}"),
                    ),
                    None => report
                        .violation(g6.clone(), format!("{label}: threshold witness missing")),
                }
                let m = motion_from_elements(&elements).expect("vertex-transitive graph");
                if t.theta < nu - m.motion + 2 {
                    report.violation(
                        g6.clone(),
                        format!(
                            "{label}: threshold {} below motion bound {}",
                            t.theta,
                            nu - m.motion + 2
                        ),
                    );
                }
                // The distinguishing search tries every coloring with up to
                // dnum colors in the worst case; gate on that count.
                let dnum_small = dnum_f.to_u64_digits();
                let affordable = dnum_small.len() == 1 && {
                    let d = dnum_small[0] as usize;
                    let candidates: BigUint = (1..=d).map(|j| stirling2(nu, j)).sum();
                    candidates <= BigUint::from(DEFAULT_COLORING_BUDGET)
                };
                if affordable {
                    let d = distinguishing_number(&g)?;
                    if BigUint::from(d) != dnum_f {
                        report.violation(
                            g6.clone(),
                            format!(
                                "{label}: computed distinguishing number {d}, formula says {dnum_f}"
                            ),
                        );
                    }
                } else {
                    report.skipped += 1;
                }
            }
            Err(Error::GroupTooLarge(_)) => {
                report.violation(
                    g6.clone(),
                    format!("{label}: group exceeds the {ENUM_ORDER_LIMIT} enumeration limit but formula says {aut_f}"),
                );
            }
            Err(e) => return Err(e),
        }
    } else {
        report.skipped += 1;
    }

    if n == 2 * k && i == k {
        // Disjoint perfect-matching case: the union rule must agree.
        let comps = g.connected_components();
        let parts: Result<Vec<Graph>> = comps.iter().map(|c| g.induced_subgraph(c)).collect();
        let spec = UnionSpec::from_graphs(parts?);
        let (t, case) = union_theta_with_case(&spec)?;
        if case != UnionCase::AllSymmetric || BigUint::from(t) != theta_f {
            report.violation(
                g6.clone(),
                format!("{label}: union rule gives {t} ({case:?}), formula says {theta_f}"),
            );
        }
    }
    Ok(())
}

/// Checks every generalized Johnson graph with at most `max_vertices`
/// vertices (and `k >= 2`) against the closed-form threshold,
/// distinguishing number, and automorphism count. Groups larger than
/// `ENUM_ORDER_LIMIT` and distinguishing searches past the coloring budget
/// are skipped, not failed.
pub fn verify_johnson_grid(max_vertices: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("generalized Johnson grid");
    let cap = max_vertices.min(crate::graph::MAX_VERTICES);
    for n in 4..=64usize {
        if binomial(n, 2) > BigUint::from(cap) {
            break;
        }
        for k in 2..=n / 2 {
            if binomial(n, k) > BigUint::from(cap) {
                continue;
            }
            for i in 1..=k {
                check_johnson_row(JohnsonParams::new(n, k, i)?, &mut report)?;
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Draws random multisets from pools of small symmetric and asymmetric
/// connected graphs, compares the union rule against a direct threshold
/// computation on the assembled union, and requires every branch of the
/// rule to be exercised at least once.
pub fn verify_union_random(trials: u64, seed: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("random disjoint unions");
    let symmetric: Vec<Graph> = vec![
        complete(2)?,
        path(3)?,
        complete(3)?,
        path(4)?,
        cycle(4)?,
        complete_bipartite(1, 3)?,
        cycle(5)?,
        path(5)?,
        complete(4)?,
        cycle(6)?,
    ];
    let sym_thetas: Vec<usize> = symmetric
        .iter()
        .map(|g| theta(g).map(|t| t.theta))
        .collect::<Result<_>>()?;
    let asymmetric: Vec<Graph> = vec![
        complete(1)?,
        fixtures::asym6(),
        fixtures::asym6().complement(),
    ];
    let pool_size = symmetric.len() + asymmetric.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = [false; 4]; // all-symmetric, all-asymmetric, mixed, mixed exception
    for _ in 0..trials {
        let picks = loop {
            let count = rng.gen_range(1..=4usize);
            let picks: Vec<usize> = (0..count).map(|_| rng.gen_range(0..pool_size)).collect();
            let total: usize = picks
                .iter()
                .map(|&i| {
                    if i < symmetric.len() {
                        symmetric[i].n()
                    } else {
                        asymmetric[i - symmetric.len()].n()
                    }
                })
                .sum();
            if total <= 14 {
                break picks;
            }
        };
        let mut components = Vec::new();
        let mut parts = Vec::new();
        for &idx in &picks {
            if idx < symmetric.len() {
                let mut c = UnionComponent::new(symmetric[idx].clone());
                if rng.gen_bool(0.5) {
                    c = c.with_theta(sym_thetas[idx]);
                }
                components.push(c);
                parts.push(symmetric[idx].clone());
            } else {
                let g = &asymmetric[idx - symmetric.len()];
                let mut c = UnionComponent::new(g.clone());
                if rng.gen_bool(0.5) {
                    c = c.with_asymmetric(true);
                }
                components.push(c);
                parts.push(g.clone());
            }
        }
        let (t, case) = union_theta_with_case(&UnionSpec::new(components))?;
        seen[match case {
            UnionCase::AllSymmetric => 0,
            UnionCase::AllAsymmetric => 1,
            UnionCase::Mixed { exception: false } => 2,
            UnionCase::Mixed { exception: true } => 3,
        }] = true;
        let union_graph = disjoint_union(&parts)?;
        let direct = theta(&union_graph)?.theta;
        report.tested += 1;
        if t != direct {
            report.violation(
                union_graph.to_graph6(),
                format!("union rule gives {t}, direct computation gives {direct}"),
            );
        }
    }
    let names = [
        "all-symmetric",
        "all-asymmetric",
        "mixed",
        "mixed exception",
    ];
    for (done, name) in seen.iter().zip(names) {
        if !done {
            report.violation(String::new(), format!("union case never exercised: {name}"));
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Recomputes the invariants of every named fixture graph and compares them
/// with their known values.
pub fn verify_fixtures() -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new("named fixtures");
    let check = |report: &mut VerificationReport, g: &Graph, ok: bool, detail: String| {
        report.tested += 1;
        if !ok {
            report.violation(g.to_graph6(), detail);
        }
    };

    let expect = |g: &Graph, aut: usize, th: usize| -> Result<Vec<(bool, String)>> {
        let elements = enumerated_aut(g, DEFAULT_GROUP_CAP)?;
        let t = theta_from_elements(&elements);
        let name = g.name().unwrap_or("fixture").to_string();
        let mut out = vec![
            (
                elements.len() == aut,
                format!("{name}: {} automorphisms, expected {aut}", elements.len()),
            ),
            (
                t.theta == th,
                format!("{name}: threshold {}, expected {th}", t.theta),
            ),
        ];
        if let Some(o) = t.witness_order {
            out.push((
                is_prime(o),
                format!("{name}: witness order {o} is not prime"),
            ));
        }
        Ok(out)
    };

    for (g, aut, th) in [
        (fixtures::g6(), 12, 5),
        (fixtures::g24(), 48, 17),
        (fixtures::g14(), 7, 3),
        (fixtures::g9(), 3, 4),
        (fixtures::g16(), 5, 5),
        (petersen(), 120, 8),
    ] {
        for (ok, detail) in expect(&g, aut, th)? {
            check(&mut report, &g, ok, detail);
        }
    }

    let g24 = fixtures::g24();
    let witness = theta(&g24)?.witness.expect("g24 is symmetric");
    check(
        &mut report,
        &g24,
        witness.cycle_count() == 16,
        format!("g24 witness has {} cycles, expected 16", witness.cycle_count()),
    );

    let p = petersen();
    let d = distinguishing_number(&p)?;
    check(
        &mut report,
        &p,
        d == 3,
        format!("Petersen distinguishing number {d}, expected 3"),
    );

    for (g, want) in fixtures::k3_k3bar_quartet().iter().zip([6, 5, 5, 6]) {
        let t = theta(g)?.theta;
        check(
            &mut report,
            g,
            t == want,
            format!("quartet member threshold {t}, expected {want}"),
        );
    }
    for (g, want) in fixtures::c5_k5bar_octet()
        .iter()
        .zip([10, 7, 7, 7, 7, 7, 7, 10])
    {
        let t = theta(g)?.theta;
        check(
            &mut report,
            g,
            t == want,
            format!("octet member threshold {t}, expected {want}"),
        );
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Runs every suite with the given limits.
pub fn run_all(
    nmax: usize,
    johnson_max_vertices: usize,
    trials: u64,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        scan_small_graphs(nmax)?,
        verify_johnson_grid(johnson_max_vertices)?,
        verify_union_random(trials, seed)?,
        verify_fixtures()?,
    ])
}
