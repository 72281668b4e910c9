//! Automorphism search by equitable refinement with individualization, plus
//! canonical forms and isomorphism testing built on the same tree.
//!
//! The search tree branches over the vertices of the first largest cell of an
//! equitable ordered partition. Every leaf is a discrete partition; pairing a
//! leaf against the first leaf yields a candidate automorphism which is then
//! validated edge by edge, so an invalid pairing can never leak out.

use crate::distinguishing::Coloring;
use crate::error::Result;
use crate::graph::Graph;
use crate::perm::{close_generators, Perm, PermGroup};
use std::collections::{BTreeMap, HashSet, VecDeque};

type Cells = Vec<Vec<usize>>;

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |m, &v| m | 1 << v)
}

/// Splits cells against queued splitter masks until no queued splitter
/// distinguishes any cell. Every new subcell is enqueued as an exact mask, so
/// the final partition is stable against each of its own cells: once a cell's
/// mask has been processed, later splits only make cells finer, and finer
/// cells stay uniform against it.
fn refine(adj: &[u64], cells: &mut Cells, queue: &mut VecDeque<u64>) {
    let mut scratch: Vec<(u32, usize)> = Vec::new();
    while let Some(splitter) = queue.pop_front() {
        let mut idx = 0;
        while idx < cells.len() {
            if cells[idx].len() <= 1 {
                idx += 1;
                continue;
            }
            scratch.clear();
            scratch.extend(
                cells[idx]
                    .iter()
                    .map(|&v| ((adj[v] & splitter).count_ones(), v)),
            );
            if scratch.windows(2).all(|w| w[0].0 == w[1].0) {
                idx += 1;
                continue;
            }
            scratch.sort_unstable();
            let mut parts: Cells = Vec::new();
            let mut start = 0;
            for end in 1..=scratch.len() {
                if end == scratch.len() || scratch[end].0 != scratch[start].0 {
                    parts.push(scratch[start..end].iter().map(|&(_, v)| v).collect());
                    start = end;
                }
            }
            for part in &parts {
                queue.push_back(cell_mask(part));
            }
            let added = parts.len();
            cells.splice(idx..=idx, parts);
            idx += added;
        }
    }
}

enum Mode {
    /// Collect a generating set, deduplicating against the closure of the
    /// generators found so far.
    Generators,
    /// Stop as soon as any non-identity automorphism is validated.
    Exists,
    /// Track the lexicographically smallest relabeled adjacency matrix over
    /// all leaves.
    Canonical,
}

struct Searcher<'a> {
    n: usize,
    adj: Vec<u64>,
    colors: Option<&'a [usize]>,
    mode: Mode,
    base: Option<Vec<usize>>,
    generators: Vec<Perm>,
    known: HashSet<Perm>,
    found: bool,
    best: Option<Vec<u64>>,
}

impl<'a> Searcher<'a> {
    fn new(g: &Graph, colors: Option<&'a [usize]>, mode: Mode) -> Self {
        let n = g.n();
        Searcher {
            n,
            adj: (0..n).map(|v| g.adjacency_row(v)).collect(),
            colors,
            mode,
            base: None,
            generators: Vec::new(),
            known: HashSet::from([Perm::identity(n)]),
            found: false,
            best: None,
        }
    }

    fn run(&mut self) {
        let mut cells: Cells = match self.colors {
            None => vec![(0..self.n).collect()],
            Some(colors) => {
                let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for (v, &c) in colors.iter().enumerate() {
                    classes.entry(c).or_default().push(v);
                }
                classes.into_values().collect()
            }
        };
        let mut queue: VecDeque<u64> = cells.iter().map(|c| cell_mask(c)).collect();
        refine(&self.adj, &mut cells, &mut queue);
        self.descend(&cells);
    }

    fn descend(&mut self, cells: &Cells) {
        if matches!(self.mode, Mode::Exists) && self.found {
            return;
        }
        let widest = cells.iter().map(|c| c.len()).max().unwrap_or(1);
        if widest == 1 {
            self.leaf(cells);
            return;
        }
        let target = cells.iter().position(|c| c.len() == widest).unwrap();
        for &v in &cells[target] {
            if matches!(self.mode, Mode::Exists) && self.found {
                return;
            }
            let child = self.individualize(cells, target, v);
            self.descend(&child);
        }
    }

    fn individualize(&self, cells: &Cells, target: usize, v: usize) -> Cells {
        let mut child: Cells = Vec::with_capacity(cells.len() + 1);
        let mut queue = VecDeque::new();
        for (i, cell) in cells.iter().enumerate() {
            if i == target {
                let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
                queue.push_back(1u64 << v);
                queue.push_back(cell_mask(&rest));
                child.push(vec![v]);
                child.push(rest);
            } else {
                child.push(cell.clone());
            }
        }
        // The parent partition was already stable, so only the two parts of
        // the split cell can reveal new distinctions.
        refine(&self.adj, &mut child, &mut queue);
        child
    }

    fn leaf(&mut self, cells: &Cells) {
        let seq: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        if let Mode::Canonical = self.mode {
            let rows = self.relabeled_rows(&seq);
            if self.best.as_ref().is_none_or(|b| rows < *b) {
                self.best = Some(rows);
            }
            return;
        }
        let Some(base) = &self.base else {
            self.base = Some(seq);
            return;
        };
        let mut images = vec![0usize; self.n];
        for (i, &b) in base.iter().enumerate() {
            images[b] = seq[i];
        }
        let Some(p) = self.validate(&images) else {
            return;
        };
        match self.mode {
            Mode::Exists => {
                if !p.is_identity() {
                    self.found = true;
                }
            }
            Mode::Generators => {
                if !self.known.contains(&p) {
                    self.generators.push(p);
                    let closed =
                        close_generators(self.n, self.generators.clone(), usize::MAX).unwrap();
                    self.known = closed.elements().unwrap().iter().cloned().collect();
                }
            }
            Mode::Canonical => unreachable!(),
        }
    }

    fn validate(&self, images: &[usize]) -> Option<Perm> {
        if let Some(colors) = self.colors {
            if (0..self.n).any(|v| colors[v] != colors[images[v]]) {
                return None;
            }
        }
        for v in 0..self.n {
            let mut mapped = 0u64;
            let mut row = self.adj[v];
            while row != 0 {
                let u = row.trailing_zeros() as usize;
                row &= row - 1;
                mapped |= 1 << images[u];
            }
            if mapped != self.adj[images[v]] {
                return None;
            }
        }
        Some(Perm::from_images(images).unwrap())
    }

    fn relabeled_rows(&self, seq: &[usize]) -> Vec<u64> {
        let mut pos = vec![0usize; self.n];
        for (i, &v) in seq.iter().enumerate() {
            pos[v] = i;
        }
        seq.iter()
            .map(|&v| {
                let mut out = 0u64;
                let mut row = self.adj[v];
                while row != 0 {
                    let u = row.trailing_zeros() as usize;
                    row &= row - 1;
                    out |= 1 << pos[u];
                }
                out
            })
            .collect()
    }
}

/// Generators of the automorphism group, or of the color-preserving subgroup
/// when `initial_colors` is given. The group is returned unenumerated; the
/// generator list is empty exactly when the (colored) graph is asymmetric.
///
/// Panics if the coloring length differs from the vertex count.
pub fn automorphism_generators(g: &Graph, initial_colors: Option<&Coloring>) -> PermGroup {
    if let Some(c) = initial_colors {
        assert_eq!(c.len(), g.n(), "coloring length must match vertex count");
    }
    let mut s = Searcher::new(g, initial_colors.map(|c| c.as_slice()), Mode::Generators);
    s.run();
    PermGroup::from_generators(g.n(), s.generators).unwrap()
}

pub fn is_asymmetric(g: &Graph) -> bool {
    automorphism_generators(g, None).is_trivial()
}

/// True iff some non-identity automorphism preserves every color class.
/// Exits on the first one found.
pub(crate) fn has_nontrivial_colored_automorphism(g: &Graph, colors: &[usize]) -> bool {
    assert_eq!(colors.len(), g.n(), "coloring length must match vertex count");
    let mut s = Searcher::new(g, Some(colors), Mode::Exists);
    s.run();
    s.found
}

/// A complete isomorphism invariant: the lexicographically smallest adjacency
/// matrix over the leaf relabelings of the search tree. Two graphs are
/// isomorphic iff their canonical forms agree.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let mut s = Searcher::new(g, None, Mode::Canonical);
    s.run();
    s.best.expect("search tree always reaches a leaf")
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}

/// Checks that `p` maps edges to edges and non-edges to non-edges.
pub fn is_automorphism(g: &Graph, p: &Perm) -> Result<bool> {
    Ok(g.permuted(p)? == *g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;

    fn path(n: usize) -> Graph {
        Graph::new(n, &(0..n - 1).map(|v| (v, v + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|v| (v, v + 1)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    fn group_order(g: &Graph) -> usize {
        let mut grp = automorphism_generators(g, None);
        grp.close(1_000_000).unwrap();
        grp.order().unwrap()
    }

    #[test]
    fn path_has_only_the_reversal() {
        assert_eq!(group_order(&path(4)), 2);
        let gens = automorphism_generators(&path(4), None);
        assert_eq!(gens.generators().len(), 1);
        assert_eq!(gens.generators()[0].cycle_notation(), "(0 3)(1 2)");
    }

    #[test]
    fn dihedral_and_symmetric_group_orders() {
        assert_eq!(group_order(&cycle(5)), 10);
        assert_eq!(group_order(&cycle(6)), 12);
        assert_eq!(group_order(&complete(4)), 24);
        assert_eq!(group_order(&Graph::new(5, &[]).unwrap()), 120);
    }

    #[test]
    fn complete_bipartite_group_order() {
        // K_{2,3}: parts {0,1} and {2,3,4}.
        let g = Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(group_order(&g), 12);
    }

    #[test]
    fn petersen_group_order() {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)];
        edges.extend([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]);
        edges.extend((0..5).map(|i| (i, i + 5)));
        let g = Graph::new(10, &edges).unwrap();
        assert_eq!(group_order(&g), 120);
    }

    #[test]
    fn asymmetric_graph_detection() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)]).unwrap();
        assert!(is_asymmetric(&g));
        assert!(!is_asymmetric(&path(2)));
        assert!(is_asymmetric(&Graph::new(1, &[]).unwrap()));
    }

    #[test]
    fn every_generator_is_validated() {
        for g in [path(6), cycle(7), complete(5)] {
            for p in automorphism_generators(&g, None).generators() {
                assert!(is_automorphism(&g, p).unwrap());
            }
        }
    }

    #[test]
    fn colored_search_respects_classes() {
        // C_4 with classes {0,1} and {2,3} keeps exactly (0 1)(2 3).
        let c4 = cycle(4);
        let coloring = Coloring::new(vec![1, 1, 2, 2], 2).unwrap();
        let mut grp = automorphism_generators(&c4, Some(&coloring));
        grp.close(100).unwrap();
        assert_eq!(grp.order(), Some(2));
        assert!(has_nontrivial_colored_automorphism(&c4, &[1, 1, 2, 2]));
        assert!(!has_nontrivial_colored_automorphism(&c4, &[1, 1, 2, 3]));
    }

    #[test]
    fn canonical_form_separates_same_degree_sequence() {
        let c6 = cycle(6);
        let two_triangles = disjoint_union(&[complete(3), complete(3)]).unwrap();
        assert_eq!(c6.degree_sequence(), two_triangles.degree_sequence());
        assert!(!isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)]).unwrap();
        let p = Perm::from_images(&[3, 5, 0, 1, 4, 2]).unwrap();
        let h = g.permuted(&p).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert!(isomorphic(&g, &h));
    }

    #[test]
    fn disconnected_graphs_compare_correctly() {
        // Same component multisets in different block orders.
        let a = disjoint_union(&[path(3), complete(3)]).unwrap();
        let b = disjoint_union(&[complete(3), path(3)]).unwrap();
        assert!(isomorphic(&a, &b));
        let c = disjoint_union(&[path(3), path(3)]).unwrap();
        assert!(!isomorphic(&a, &c));
    }
}
