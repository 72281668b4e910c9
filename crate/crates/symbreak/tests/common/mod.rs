//! Brute-force reference implementations used to cross-check the library
//! from the outside. Everything here enumerates permutations or colorings
//! directly and shares no code with the crate under test.

// Each integration test crate compiles its own copy and uses a subset.
#![allow(dead_code)]

use symbreak::graph::Graph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for v in 0..n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

/// Every automorphism of `g` as an image table, identity included, found by
/// filtering all n! permutations.
pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    permutations(n)
        .into_iter()
        .filter(|p| {
            (0..n).all(|u| ((u + 1)..n).all(|v| g.has_edge(u, v) == g.has_edge(p[u], p[v])))
        })
        .collect()
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &v)| i == v)
}

/// Number of cycles of an image table, fixed points included.
pub fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut cycles = 0;
    for start in 0..p.len() {
        if !seen[start] {
            cycles += 1;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = p[v];
            }
        }
    }
    cycles
}

pub fn moved_points(p: &[usize]) -> usize {
    p.iter().enumerate().filter(|&(i, &v)| i != v).count()
}

/// Threshold: one more than the largest cycle count over non-identity
/// automorphisms, or 1 for an asymmetric graph.
pub fn brute_theta(g: &Graph) -> usize {
    1 + brute_automorphisms(g)
        .iter()
        .filter(|p| !is_identity(p))
        .map(|p| cycle_count(p))
        .max()
        .unwrap_or(0)
}

pub fn brute_motion(g: &Graph) -> Option<usize> {
    brute_automorphisms(g)
        .iter()
        .filter(|p| !is_identity(p))
        .map(|p| moved_points(p))
        .min()
}

fn is_distinguishing(auts: &[Vec<usize>], colors: &[usize]) -> bool {
    auts.iter()
        .filter(|p| !is_identity(p))
        .all(|p| colors.iter().enumerate().any(|(v, &c)| colors[p[v]] != c))
}

fn for_each_coloring(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut colors = vec![1usize; n];
    loop {
        f(&colors);
        let mut pos = 0;
        loop {
            if pos == n {
                return;
            }
            if colors[pos] < k {
                colors[pos] += 1;
                break;
            }
            colors[pos] = 1;
            pos += 1;
        }
    }
}

/// Least `k` such that some coloring with palette `{1..k}` is preserved by
/// no non-identity automorphism.
pub fn brute_dnum(g: &Graph) -> usize {
    let auts = brute_automorphisms(g);
    for k in 1..=g.n() {
        let mut found = false;
        for_each_coloring(g.n(), k, |c| {
            if !found && is_distinguishing(&auts, c) {
                found = true;
            }
        });
        if found {
            return k;
        }
    }
    unreachable!("coloring every vertex distinctly is distinguishing");
}

/// Number of orbits of distinguishing colorings under the automorphism
/// action, counted via canonical representatives. `surjective` restricts to
/// colorings using every color in `{1..k}`.
pub fn brute_orbit_count(g: &Graph, k: usize, surjective: bool) -> u64 {
    let auts = brute_automorphisms(g);
    let n = g.n();
    let mut reps = std::collections::HashSet::new();
    for_each_coloring(n, k, |c| {
        if surjective {
            let mut used = vec![false; k + 1];
            for &x in c {
                used[x] = true;
            }
            if !used[1..=k].iter().all(|&u| u) {
                return;
            }
        }
        if !is_distinguishing(&auts, c) {
            return;
        }
        // Canonical orbit representative: the lexicographically least
        // relabeling of the coloring along any automorphism.
        let canon = auts
            .iter()
            .map(|p| (0..n).map(|v| c[p[v]]).collect::<Vec<_>>())
            .min()
            .expect("identity is always present");
        reps.insert(canon);
    });
    reps.len() as u64
}

pub fn brute_phi(g: &Graph, k: usize) -> u64 {
    brute_orbit_count(g, k, true)
}

pub fn brute_phi_le(g: &Graph, k: usize) -> u64 {
    brute_orbit_count(g, k, false)
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    permutations(n)
        .into_iter()
        .any(|p| (0..n).all(|u| ((u + 1)..n).all(|v| g.has_edge(u, v) == h.has_edge(p[u], p[v]))))
}
