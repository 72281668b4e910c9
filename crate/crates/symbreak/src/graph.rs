//! Simple undirected graphs on up to 62 vertices, stored as adjacency
//! bitmasks, with graph6 and plain edge-list serialization.

use crate::error::{Error, Result};
use crate::perm::Perm;
use std::fmt;

/// Hard limit on vertex count: adjacency rows are single `u64` words and the
/// graph6 short form stops at 62.
pub const MAX_VERTICES: usize = 62;

/// An undirected graph without loops or multi-edges. Vertices are
/// `0, .., n-1`; `adj[v]` has bit `u` set iff `u ~ v`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(name) => write!(f, "Graph({}, n={}, edges={:?})", name, self.n, self.edges()),
            None => write!(f, "Graph(n={}, edges={:?})", self.n, self.edges()),
        }
    }
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams(
                "graph needs at least one vertex".to_string(),
            ));
        }
        if n > MAX_VERTICES {
            return Err(Error::Unsupported(format!(
                "graphs are limited to {MAX_VERTICES} vertices; got {n}"
            )));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRange { vertex: w, n });
                }
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn adjacency_row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Ascending degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable();
        degs
    }

    pub fn complement(&self) -> Graph {
        let all = (1u64 << self.n) - 1;
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !(1 << v))
            .collect();
        Graph {
            n: self.n,
            adj,
            name: None,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Components as sorted vertex lists, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            if v >= self.n {
                return Err(Error::OutOfRange { vertex: v, n: self.n });
            }
        }
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), &edges)
    }

    /// Relabels along `p`: the result has an edge `(p(u), p(v))` for every
    /// edge `(u, v)` of `self`.
    pub fn permuted(&self, p: &Perm) -> Result<Graph> {
        if p.degree() != self.n {
            return Err(Error::DegreeError(self.n, p.degree()));
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .map(|&(u, v)| (p.apply(u), p.apply(v)))
            .collect();
        let mut g = Graph::new(self.n, &edges)?;
        g.name = self.name.clone();
        Ok(g)
    }

    /// Parses the graph6 short form (optionally prefixed with
    /// `>>graph6<<`). The long form for graphs past 62 vertices is not
    /// supported.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let text = text.trim_end_matches(['\n', '\r']);
        let body = text.strip_prefix(">>graph6<<").unwrap_or(text);
        let bytes = body.as_bytes();
        if bytes.is_empty() {
            return Err(Error::ParseError("empty graph6 string".to_string()));
        }
        if bytes[0] == b'~' {
            return Err(Error::Unsupported(
                "graph6 long form (more than 62 vertices)".to_string(),
            ));
        }
        for &b in bytes {
            if !(63..=126).contains(&b) {
                return Err(Error::ParseError(format!(
                    "byte {b} outside the graph6 alphabet"
                )));
            }
        }
        let n = (bytes[0] - 63) as usize;
        if n == 0 {
            return Err(Error::InvalidParams(
                "graph needs at least one vertex".to_string(),
            ));
        }
        let bit_len = n * (n - 1) / 2;
        let expect = 1 + bit_len.div_ceil(6);
        if bytes.len() != expect {
            return Err(Error::ParseError(format!(
                "expected {expect} bytes for {n} vertices, got {}",
                bytes.len()
            )));
        }
        let mut edges = Vec::new();
        // Bits run through the upper triangle column by column:
        // (0,1), (0,2), (1,2), (0,3), ..
        let (mut row, mut col) = (0usize, 1usize);
        let mut pos = 0usize;
        for &b in &bytes[1..] {
            let group = b - 63;
            for k in 0..6 {
                let bit = group >> (5 - k) & 1;
                if pos < bit_len {
                    if bit == 1 {
                        edges.push((row, col));
                    }
                    row += 1;
                    if row == col {
                        row = 0;
                        col += 1;
                    }
                } else if bit == 1 {
                    return Err(Error::ParseError("nonzero padding bits".to_string()));
                }
                pos += 1;
            }
        }
        Graph::new(n, &edges)
    }

    pub fn to_graph6(&self) -> String {
        let mut out = vec![self.n as u8 + 63];
        let mut group = 0u8;
        let mut filled = 0u8;
        for col in 1..self.n {
            for row in 0..col {
                group = group << 1 | u8::from(self.has_edge(row, col));
                filled += 1;
                if filled == 6 {
                    out.push(group + 63);
                    group = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((group << (6 - filled)) + 63);
        }
        String::from_utf8(out).unwrap()
    }

    /// Parses plain text: first non-empty line is the vertex count, each
    /// further non-empty line one `u v` edge.
    pub fn from_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::ParseError("empty edge list".to_string()))?;
        let n: usize = header
            .trim()
            .parse()
            .map_err(|_| Error::ParseError(format!("bad vertex count line: {header:?}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut fields = line.split_whitespace();
            let (u, v) = match (fields.next(), fields.next(), fields.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => {
                    return Err(Error::ParseError(format!(
                        "edge line must hold exactly two vertices: {line:?}"
                    )))
                }
            };
            let u: usize = u
                .parse()
                .map_err(|_| Error::ParseError(format!("bad vertex: {u:?}")))?;
            let v: usize = v
                .parse()
                .map_err(|_| Error::ParseError(format!("bad vertex: {v:?}")))?;
            edges.push((u, v));
        }
        Graph::new(n, &edges)
    }

    pub fn to_edge_list_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Disjoint union; part `j` occupies the vertex block starting at the sum of
/// the earlier part sizes.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::EmptyUnion);
    }
    let total: usize = parts.iter().map(|g| g.n()).sum();
    if total > MAX_VERTICES {
        return Err(Error::Unsupported(format!(
            "graphs are limited to {MAX_VERTICES} vertices; union has {total}"
        )));
    }
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        for (u, v) in g.edges() {
            edges.push((u + offset, v + offset));
        }
        offset += g.n();
    }
    Graph::new(total, &edges)
}
