//! Parameterized graph families: paths, cycles, complete and complete
//! bipartite graphs, circulants, Cayley graphs over explicit multiplication
//! tables, and generalized Johnson graphs with closed-form invariants, plus
//! the disjoint-union threshold rules and a set of named fixture graphs.

use crate::autsearch::canonical_form;
use crate::distinguishing::theta;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Perm;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::collections::BTreeSet;

/// Path on vertices `0 - 1 - .. - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParams("path needs n >= 1".to_string()));
    }
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|v| (v, v + 1)).collect();
    Ok(Graph::new(n, &edges)?.with_name(format!("P{n}")))
}

/// Cycle `0 - 1 - .. - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams("cycle needs n >= 3".to_string()));
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|v| (v, v + 1)).collect();
    edges.push((0, n - 1));
    Ok(Graph::new(n, &edges)?.with_name(format!("C{n}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParams(
            "complete graph needs n >= 1".to_string(),
        ));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::new(n, &edges)?.with_name(format!("K{n}")))
}

pub fn empty(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParams(
            "empty graph needs n >= 1".to_string(),
        ));
    }
    Ok(Graph::new(n, &[])?.with_name(format!("E{n}")))
}

/// Complete bipartite graph with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParams(
            "complete bipartite graph needs both parts non-empty".to_string(),
        ));
    }
    let mut edges = Vec::new();
    for u in 0..m {
        for v in m..m + n {
            edges.push((u, v));
        }
    }
    Ok(Graph::new(m + n, &edges)?.with_name(format!("K{m},{n}")))
}

/// Circulant graph: `v ~ v + s (mod n)` for every `s` in the connection
/// set, which must avoid 0 and be closed under negation mod `n`.
pub fn circulant(n: usize, connections: &[usize]) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParams("circulant needs n >= 2".to_string()));
    }
    let set: BTreeSet<usize> = connections.iter().copied().collect();
    if set.contains(&0) {
        return Err(Error::InvalidConnectionSet(
            "connection set contains 0".to_string(),
        ));
    }
    if let Some(&s) = set.iter().find(|&&s| s >= n) {
        return Err(Error::InvalidConnectionSet(format!(
            "connection {s} out of range mod {n}"
        )));
    }
    if set.iter().any(|&s| !set.contains(&(n - s))) {
        return Err(Error::NotSymmetric);
    }
    let mut edges = BTreeSet::new();
    for v in 0..n {
        for &s in &set {
            let u = (v + s) % n;
            edges.insert((v.min(u), v.max(u)));
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let g = Graph::new(n, &edges)?;
    debug_assert!({
        let rot = Perm::from_images(&(0..n).map(|v| (v + 1) % n).collect::<Vec<_>>()).unwrap();
        crate::autsearch::is_automorphism(&g, &rot).unwrap()
    });
    Ok(g)
}

/// A finite group as an explicit multiplication table: `mul[g][h]` is the
/// product `g * h`.
#[derive(Clone, Debug)]
pub struct GroupTable {
    order: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates a multiplication table: Latin square, two-sided identity,
    /// two-sided inverses, and associativity (checked exhaustively up to
    /// 32^3 triples, sampled deterministically beyond that).
    pub fn new(mul: Vec<Vec<usize>>) -> Result<Self> {
        let m = mul.len();
        if m == 0 {
            return Err(Error::InvalidParams("empty multiplication table".to_string()));
        }
        for row in &mul {
            if row.len() != m {
                return Err(Error::InvalidParams(
                    "multiplication table must be square".to_string(),
                ));
            }
            if row.iter().any(|&x| x >= m) {
                return Err(Error::InvalidParams(
                    "multiplication table entry out of range".to_string(),
                ));
            }
        }
        for g in 0..m {
            let mut row_seen = vec![false; m];
            let mut col_seen = vec![false; m];
            for h in 0..m {
                if row_seen[mul[g][h]] || col_seen[mul[h][g]] {
                    return Err(Error::InvalidParams(
                        "multiplication table is not a Latin square".to_string(),
                    ));
                }
                row_seen[mul[g][h]] = true;
                col_seen[mul[h][g]] = true;
            }
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| Error::InvalidParams("table has no identity".to_string()))?;
        let mut inv = vec![0usize; m];
        for g in 0..m {
            inv[g] = (0..m)
                .find(|&h| mul[g][h] == identity && mul[h][g] == identity)
                .ok_or_else(|| {
                    Error::InvalidParams(format!("element {g} has no two-sided inverse"))
                })?;
        }
        let assoc = |a: usize, b: usize, c: usize| mul[mul[a][b]][c] == mul[a][mul[b][c]];
        if m * m * m <= 32_768 {
            for a in 0..m {
                for b in 0..m {
                    for c in 0..m {
                        if !assoc(a, b, c) {
                            return Err(Error::InvalidParams(format!(
                                "table is not associative at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // Deterministic LCG sample; full verification is cubic.
            let mut state = 0x9E3779B97F4A7C15u64;
            for _ in 0..32_768 {
                let mut next = || {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    (state >> 33) as usize % m
                };
                let (a, b, c) = (next(), next(), next());
                if !assoc(a, b, c) {
                    return Err(Error::InvalidParams(format!(
                        "table is not associative at ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(GroupTable {
            order: m,
            mul,
            inv,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// Integers mod `n` under addition.
    pub fn cyclic(n: usize) -> Result<GroupTable> {
        if n == 0 {
            return Err(Error::InvalidParams("cyclic group needs n >= 1".to_string()));
        }
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        GroupTable::new(mul)
    }

    /// Direct product; element `(g, h)` gets index `g * other.order() + h`.
    pub fn direct_product(&self, other: &GroupTable) -> Result<GroupTable> {
        let m = other.order;
        let mul = (0..self.order * m)
            .map(|x| {
                (0..self.order * m)
                    .map(|y| self.mul[x / m][y / m] * m + other.mul[x % m][y % m])
                    .collect()
            })
            .collect();
        GroupTable::new(mul)
    }

    /// The symmetric group on `n` points with elements in lexicographic
    /// order by image table, returned alongside that element list.
    /// Multiplication composes right factor first.
    pub fn symmetric(n: usize) -> Result<(GroupTable, Vec<Perm>)> {
        if n == 0 || n > 6 {
            return Err(Error::Unsupported(
                "symmetric group tables are built for 1 <= n <= 6".to_string(),
            ));
        }
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for v in 0..n {
                    if !p.contains(&v) {
                        let mut q = p.clone();
                        q.push(v);
                        next.push(q);
                    }
                }
            }
            perms = next;
        }
        perms.sort();
        let elements: Vec<Perm> = perms
            .iter()
            .map(|p| Perm::from_images(p).unwrap())
            .collect();
        let index: BTreeMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mul = elements
            .iter()
            .map(|p| {
                elements
                    .iter()
                    .map(|q| index[&p.compose(q).unwrap().images()])
                    .collect()
            })
            .collect();
        Ok((GroupTable::new(mul)?, elements))
    }
}

/// Cayley graph: `g ~ h` iff `g * h^{-1}` lies in the connection set, which
/// must exclude the identity and be closed under inverses. Under this rule
/// every right translation `x -> x * a` is an automorphism.
pub fn cayley(table: &GroupTable, connection: &[usize]) -> Result<Graph> {
    let set: BTreeSet<usize> = connection.iter().copied().collect();
    if let Some(&s) = set.iter().find(|&&s| s >= table.order()) {
        return Err(Error::InvalidConnectionSet(format!(
            "element {s} out of range for a group of order {}",
            table.order()
        )));
    }
    if set.contains(&table.identity()) {
        return Err(Error::InvalidConnectionSet(
            "connection set contains the identity".to_string(),
        ));
    }
    if set.iter().any(|&s| !set.contains(&table.inverse(s))) {
        return Err(Error::NotSymmetric);
    }
    let m = table.order();
    let mut edges = Vec::new();
    for g in 0..m {
        for h in (g + 1)..m {
            if set.contains(&table.mul(g, table.inverse(h))) {
                edges.push((g, h));
            }
        }
    }
    let graph = Graph::new(m, &edges)?;
    debug_assert!((0..m).all(|a| {
        let rho = Perm::from_images(&(0..m).map(|x| table.mul(x, a)).collect::<Vec<_>>()).unwrap();
        crate::autsearch::is_automorphism(&graph, &rho).unwrap()
    }));
    Ok(graph)
}

/// Parameters of a generalized Johnson graph: vertices are the `k`-subsets
/// of an `n`-set, adjacent when the intersection has size `k - i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JohnsonParams {
    pub n: usize,
    pub k: usize,
    pub i: usize,
}

impl JohnsonParams {
    pub fn new(n: usize, k: usize, i: usize) -> Result<Self> {
        if k == 0 || 2 * k > n {
            return Err(Error::InvalidParams(format!(
                "need 1 <= k <= n/2, got n = {n}, k = {k}"
            )));
        }
        if i == 0 || i > k {
            return Err(Error::InvalidParams(format!(
                "need 1 <= i <= k, got i = {i}, k = {k}"
            )));
        }
        Ok(JohnsonParams { n, k, i })
    }
}

pub fn factorial(n: usize) -> BigUint {
    let mut f = BigUint::one();
    for x in 2..=n {
        f *= BigUint::from(x);
    }
    f
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut c = BigUint::one();
    for step in 1..=k {
        c = c * BigUint::from(n - k + step) / BigUint::from(step);
    }
    c
}

fn biguint_to_usize(x: &BigUint) -> Option<usize> {
    let digits = x.to_u64_digits();
    match digits.len() {
        0 => Some(0),
        1 => usize::try_from(digits[0]).ok(),
        _ => None,
    }
}

/// All `k`-subset bitmasks of `{1, .., n}` (element `e` is bit `e-1`) in
/// ascending numeric order.
pub(crate) fn subset_masks(n: usize, k: usize) -> Vec<u64> {
    let mut masks = Vec::new();
    if k == 0 || k > n {
        return masks;
    }
    let limit = 1u64 << n;
    let mut m = (1u64 << k) - 1;
    while m < limit {
        masks.push(m);
        // Gosper's hack: next mask with the same popcount.
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    masks
}

fn mask_to_subset(mask: u64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

/// Builds the generalized Johnson graph. Vertex `j` is the `j`-th `k`-subset
/// mask in ascending order.
pub fn generalized_johnson(params: &JohnsonParams) -> Result<Graph> {
    let JohnsonParams { n, k, i } = *params;
    let nu = binomial(n, k);
    let nu = biguint_to_usize(&nu)
        .filter(|&v| v <= crate::graph::MAX_VERTICES)
        .ok_or_else(|| {
            Error::Unsupported(format!(
                "J({n},{k},{i}) has more than {} vertices",
                crate::graph::MAX_VERTICES
            ))
        })?;
    let masks = subset_masks(n, k);
    debug_assert_eq!(masks.len(), nu);
    let mut edges = Vec::new();
    for a in 0..nu {
        for b in (a + 1)..nu {
            if (masks[a] & masks[b]).count_ones() as usize == k - i {
                edges.push((a, b));
            }
        }
    }
    Ok(Graph::new(nu, &edges)?.with_name(format!("J({n},{k},{i})")))
}

/// Kneser graph: `k`-subsets adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    let params = JohnsonParams::new(n, k, k)?;
    Ok(generalized_johnson(&params)?.with_name(format!("K({n},{k})")))
}

pub fn petersen() -> Graph {
    kneser(5, 2).unwrap().with_name("Petersen")
}

/// Distinguishing threshold of `J(n,k,i)` in closed form.
pub fn johnson_theta(params: &JohnsonParams) -> BigUint {
    let JohnsonParams { n, k, i } = *params;
    if k == 1 {
        return BigUint::from(n);
    }
    if n == 2 * k && (i == k || 2 * i == k) {
        return binomial(n, k);
    }
    binomial(n, k) - binomial(n - 2, k - 1) + BigUint::one()
}

/// Distinguishing number of `J(n,k,i)` in closed form.
pub fn johnson_dnum(params: &JohnsonParams) -> BigUint {
    let JohnsonParams { n, k, i } = *params;
    if k == 1 {
        return BigUint::from(n);
    }
    if n == 2 * k {
        if i == k {
            // e disjoint edges: color pairs must be distinct and ordered,
            // so the least d has C(d,2) >= e.
            let e = binomial(n, k) / BigUint::from(2u32);
            let disc = BigUint::from(8u32) * &e + BigUint::one();
            let s = isqrt(&disc);
            return if &s * &s == disc {
                (BigUint::one() + s) / BigUint::from(2u32)
            } else {
                (BigUint::one() + s) / BigUint::from(2u32) + BigUint::one()
            };
        }
        if 2 * i == k {
            return BigUint::from(3u32);
        }
        return BigUint::from(2u32);
    }
    if n == 5 && k == 2 {
        return BigUint::from(3u32);
    }
    BigUint::from(2u32)
}

/// Order of the automorphism group of `J(n,k,i)` in closed form.
pub fn johnson_aut_order(params: &JohnsonParams) -> BigUint {
    let JohnsonParams { n, k, i } = *params;
    if k == 1 {
        return factorial(n);
    }
    if n == 2 * k {
        if k == 2 {
            return BigUint::from(48u32);
        }
        let e = binomial(n, k) / BigUint::from(2u32);
        let e = biguint_to_usize(&e).expect("half the vertex count fits");
        if i == k {
            return (BigUint::one() << e) * factorial(e);
        }
        if 2 * i == k {
            return (BigUint::one() << e) * factorial(n);
        }
        return BigUint::from(2u32) * factorial(n);
    }
    if n == 2 * k + 1 && k % 2 == 1 && 2 * i == k + 1 {
        return factorial(n + 1);
    }
    factorial(n)
}

fn isqrt(x: &BigUint) -> BigUint {
    if x.is_zero() {
        return BigUint::zero();
    }
    let mut lo = BigUint::one();
    let mut hi = x.clone();
    while lo < hi {
        let mid: BigUint = (&lo + &hi + BigUint::one()) >> 1;
        if &mid * &mid <= *x {
            lo = mid;
        } else {
            hi = mid - BigUint::one();
        }
    }
    lo
}

/// Image of a `k`-subset of `{1, .., n}` under a permutation of `n + 1`
/// points acting through partitions: the subset is completed with the extra
/// point `n` (0-based), both halves are mapped, and the half containing the
/// extra point, with it removed, is the image.
///
/// This action exists exactly when `n = 2k + 1` and `i = (k+1)/2`.
pub fn sym_np1_image(
    sigma: &Perm,
    subset: &[usize],
    params: &JohnsonParams,
) -> Result<Vec<usize>> {
    let JohnsonParams { n, k, i } = *params;
    if n != 2 * k + 1 || 2 * i != k + 1 {
        return Err(Error::NotApplicable);
    }
    if sigma.degree() != n + 1 {
        return Err(Error::DegreeError(n + 1, sigma.degree()));
    }
    if subset.len() != k {
        return Err(Error::InvalidParams(format!(
            "subset must have {k} elements, got {}",
            subset.len()
        )));
    }
    let mut part1 = vec![false; n + 1];
    part1[n] = true;
    for &x in subset {
        if x == 0 || x > n {
            return Err(Error::OutOfRange { vertex: x, n });
        }
        if part1[x - 1] {
            return Err(Error::InvalidParams(format!("repeated element {x}")));
        }
        part1[x - 1] = true;
    }
    let image1: Vec<usize> = (0..=n).filter(|&x| part1[x]).map(|x| sigma.apply(x)).collect();
    let mut out: Vec<usize> = if image1.contains(&n) {
        image1.into_iter().filter(|&y| y != n).map(|y| y + 1).collect()
    } else {
        let in_image1: BTreeSet<usize> = image1.into_iter().collect();
        (0..n).filter(|y| !in_image1.contains(y)).map(|y| y + 1).collect()
    };
    out.sort_unstable();
    Ok(out)
}

/// The vertex permutation of `J(n,k,i)` induced by a permutation of `n + 1`
/// points through `sym_np1_image`.
pub fn sym_np1_automorphism(sigma: &Perm, params: &JohnsonParams) -> Result<Perm> {
    let JohnsonParams { n, k, i } = *params;
    if n != 2 * k + 1 || 2 * i != k + 1 {
        return Err(Error::NotApplicable);
    }
    if sigma.degree() != n + 1 {
        return Err(Error::DegreeError(n + 1, sigma.degree()));
    }
    let masks = subset_masks(n, k);
    if masks.len() > u16::MAX as usize {
        return Err(Error::Unsupported(format!(
            "J({n},{k},{i}) has more than {} vertices",
            u16::MAX
        )));
    }
    let mut images = Vec::with_capacity(masks.len());
    for &m in &masks {
        let image = sym_np1_image(sigma, &mask_to_subset(m), params)?;
        let image_mask = image.iter().fold(0u64, |acc, &e| acc | 1 << (e - 1));
        let pos = masks
            .binary_search(&image_mask)
            .expect("image of a k-subset is a k-subset");
        images.push(pos);
    }
    Ok(Perm::from_images(&images).unwrap())
}

/// One part of a disjoint union, optionally carrying already-known
/// invariants so the threshold rule can skip recomputing them.
#[derive(Clone, Debug)]
pub struct UnionComponent {
    pub graph: Graph,
    pub theta: Option<usize>,
    pub asymmetric: Option<bool>,
}

impl UnionComponent {
    pub fn new(graph: Graph) -> Self {
        UnionComponent {
            graph,
            theta: None,
            asymmetric: None,
        }
    }

    pub fn with_theta(mut self, theta: usize) -> Self {
        self.theta = Some(theta);
        self
    }

    pub fn with_asymmetric(mut self, asymmetric: bool) -> Self {
        self.asymmetric = Some(asymmetric);
        self
    }
}

#[derive(Clone, Debug)]
pub struct UnionSpec {
    pub components: Vec<UnionComponent>,
}

impl UnionSpec {
    pub fn new(components: Vec<UnionComponent>) -> Self {
        UnionSpec { components }
    }

    pub fn from_graphs(graphs: Vec<Graph>) -> Self {
        UnionSpec {
            components: graphs.into_iter().map(UnionComponent::new).collect(),
        }
    }
}

/// Which branch of the disjoint-union threshold rule applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnionCase {
    AllSymmetric,
    AllAsymmetric,
    Mixed { exception: bool },
}

pub fn union_theta(spec: &UnionSpec) -> Result<usize> {
    union_theta_with_case(spec).map(|(t, _)| t)
}

/// Threshold of a disjoint union of connected graphs, without building the
/// union:
///
/// * all parts symmetric: `max_i(theta_i + sum of the other part sizes)`;
/// * all parts asymmetric: `n - nu + 1` where `nu` is the smallest part
///   size among repeated isomorphism classes (`nu = n` when all classes are
///   distinct, making the union asymmetric);
/// * mixed, with `A` the symmetric and `B` the asymmetric side: the larger
///   of `theta(A) + |B|` and `theta(B) + |A|`, except that when `B` as a
///   whole is asymmetric and `theta(A) + |B|` does not exceed the other
///   bound, `theta(A) + |B|` wins outright.
pub fn union_theta_with_case(spec: &UnionSpec) -> Result<(usize, UnionCase)> {
    if spec.components.is_empty() {
        return Err(Error::EmptyUnion);
    }
    let mut symmetric: Vec<(usize, usize)> = Vec::new(); // (theta, n)
    let mut asymmetric: Vec<&Graph> = Vec::new();
    for (idx, comp) in spec.components.iter().enumerate() {
        if !comp.graph.is_connected() {
            return Err(Error::InvalidComponent(idx));
        }
        let th = match (comp.theta, comp.asymmetric) {
            (Some(t), Some(true)) if t != 1 => {
                return Err(Error::InvalidParams(format!(
                    "component {idx} claims asymmetry but threshold {t}"
                )))
            }
            (Some(t), _) => t,
            (None, Some(true)) => 1,
            (None, _) => theta(&comp.graph)?.theta,
        };
        if comp.asymmetric == Some(false) && th == 1 {
            return Err(Error::InvalidParams(format!(
                "component {idx} claims symmetry but has trivial automorphism group"
            )));
        }
        if th == 1 {
            asymmetric.push(&comp.graph);
        } else {
            symmetric.push((th, comp.graph.n()));
        }
    }

    let sym_total: usize = symmetric.iter().map(|&(_, n)| n).sum();
    let asym_total: usize = asymmetric.iter().map(|g| g.n()).sum();
    // Threshold of the asymmetric side alone: a repeated isomorphism class
    // admits a component swap whose cycles are one transposition per vertex
    // of the smaller... of the repeated part plus fixed points elsewhere.
    let theta_b = if asymmetric.is_empty() {
        0
    } else {
        let mut classes: BTreeMap<Vec<u64>, (usize, usize)> = BTreeMap::new(); // form -> (count, n)
        for g in &asymmetric {
            let entry = classes.entry(canonical_form(g)).or_insert((0, g.n()));
            entry.0 += 1;
        }
        let nu = classes
            .values()
            .filter(|&&(count, _)| count >= 2)
            .map(|&(_, n)| n)
            .min()
            .unwrap_or(asym_total);
        asym_total - nu + 1
    };
    let theta_a = symmetric
        .iter()
        .map(|&(t, n)| t + (sym_total - n))
        .max()
        .unwrap_or(0);

    if asymmetric.is_empty() {
        return Ok((theta_a, UnionCase::AllSymmetric));
    }
    if symmetric.is_empty() {
        return Ok((theta_b, UnionCase::AllAsymmetric));
    }
    let bound_a = theta_a + asym_total;
    let bound_b = theta_b + sym_total;
    let exception = theta_b == 1 && bound_a <= bound_b;
    let value = if exception { bound_a } else { bound_a.max(bound_b) };
    Ok((value, UnionCase::Mixed { exception }))
}

/// Named fixture graphs exercised throughout the test suites, with known
/// automorphism counts, thresholds, and distinguishing numbers.
pub mod fixtures {
    use super::*;
    use crate::graph::Graph;

    /// Cayley graph of `Z2 x Z3` with connections `(1,0), (0,1), (0,2)`:
    /// the triangular prism. `|Aut| = 12`, threshold 5.
    pub fn g6() -> Graph {
        let z2 = GroupTable::cyclic(2).unwrap();
        let z3 = GroupTable::cyclic(3).unwrap();
        let z6 = z2.direct_product(&z3).unwrap();
        // (0,1) -> 1, (0,2) -> 2, (1,0) -> 3 under index (a,b) = 3a + b.
        cayley(&z6, &[1, 2, 3]).unwrap().with_name("g6")
    }

    /// Cayley graph of `Sym(4)` with the adjacent transpositions
    /// `(0 1), (1 2), (2 3)` as connections: a connected cubic bipartite
    /// graph on 24 vertices. `|Aut| = 48`, threshold 17, attained by
    /// elements with eight transpositions and eight fixed points.
    pub fn g24() -> Graph {
        let (s4, elements) = GroupTable::symmetric(4).unwrap();
        let connection: Vec<usize> = [[0usize, 1], [1, 2], [2, 3]]
            .iter()
            .map(|&[a, b]| {
                let t = Perm::from_cycles(4, &[&[a, b]]).unwrap();
                elements.iter().position(|e| *e == t).unwrap()
            })
            .collect();
        cayley(&s4, &connection).unwrap().with_name("g24")
    }

    /// 14 vertices: a 7-cycle `0..6` with inner vertex `7+i` joined to
    /// `i, i+1, i+3 (mod 7)`. `|Aut| = 7`, threshold 3, motion 14.
    pub fn g14() -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        for i in 0..7 {
            edges.extend([(7 + i, i), (7 + i, (i + 1) % 7), (7 + i, (i + 3) % 7)]);
        }
        Graph::new(14, &edges).unwrap().with_name("g14")
    }

    /// 9 vertices, `|Aut| = 3` (no involutions), threshold 4, motion 9.
    pub fn g9() -> Graph {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 2),
            (3, 1),
            (3, 4),
            (5, 4),
            (3, 5),
            (6, 5),
            (3, 6),
            (6, 1),
            (6, 7),
            (6, 8),
            (8, 7),
            (1, 8),
        ];
        Graph::new(9, &edges).unwrap().with_name("g9")
    }

    /// 16 vertices, `|Aut| = 5`, threshold 5, motion 15.
    pub fn g16() -> Graph {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (3, 5),
            (5, 4),
            (1, 4),
            (6, 3),
            (6, 1),
            (7, 6),
            (7, 2),
            (7, 8),
            (9, 8),
            (7, 9),
            (6, 10),
            (9, 10),
            (11, 10),
            (12, 10),
            (11, 12),
            (13, 12),
            (13, 6),
            (14, 13),
            (15, 13),
            (15, 14),
            (15, 3),
        ];
        Graph::new(16, &edges).unwrap().with_name("g16")
    }

    /// Smallest standard asymmetric graph: a 5-path with one extra vertex
    /// adjacent to the two middle-left vertices.
    pub fn asym6() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)])
            .unwrap()
            .with_name("asym6")
    }

    /// Four graphs on a triangle `{0,1,2}` plus three extra vertices
    /// `{3,4,5}`: bare, pendant edges, doubled cross edges, and the full
    /// join. Thresholds 6, 5, 5, 6.
    pub fn k3_k3bar_quartet() -> [Graph; 4] {
        let tri = [(0, 1), (1, 2), (2, 0)];
        let build = |extra: &[(usize, usize)]| {
            let mut edges = tri.to_vec();
            edges.extend_from_slice(extra);
            Graph::new(6, &edges).unwrap()
        };
        [
            build(&[]),
            build(&[(0, 3), (1, 4), (2, 5)]),
            build(&[(2, 3), (0, 4), (1, 5), (1, 3), (2, 4), (0, 5)]),
            build(&[
                (0, 3),
                (1, 4),
                (2, 5),
                (1, 3),
                (2, 4),
                (0, 5),
                (2, 3),
                (0, 4),
                (1, 5),
            ]),
        ]
    }

    /// Eight graphs on a 5-cycle `0..4` plus five outer vertices `5..9`,
    /// attached with rotationally symmetric patterns of 0 to 5 neighbors.
    /// Thresholds 10, 7, 7, 7, 7, 7, 7, 10.
    pub fn c5_k5bar_octet() -> [Graph; 8] {
        let c5: Vec<(usize, usize)> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
        let build = |offsets: &[usize]| {
            let mut edges = c5.clone();
            for &o in offsets {
                edges.extend((0..5).map(|v| (5 + v, (o + v) % 5)));
            }
            Graph::new(10, &edges).unwrap()
        };
        [
            build(&[]),
            build(&[0]),
            build(&[2, 3]),
            build(&[4, 1]),
            build(&[4, 1, 0]),
            build(&[3, 2, 0]),
            build(&[4, 1, 0, 2]),
            build(&[0, 1, 2, 3, 4]),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autsearch::{is_automorphism, isomorphic};
    use crate::distinguishing::{distinguishing_number, motion, theta};
    use crate::graph::disjoint_union;

    fn aut_order(g: &Graph) -> usize {
        let mut grp = crate::autsearch::automorphism_generators(g, None);
        grp.close(2_000_000).unwrap();
        grp.order().unwrap()
    }

    #[test]
    fn family_constructors_validate() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(empty(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
        assert_eq!(path(4).unwrap().edge_count(), 3);
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        assert_eq!(empty(5).unwrap().edge_count(), 0);
        assert_eq!(complete_bipartite(2, 3).unwrap().degree_sequence(), vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn circulant_construction() {
        assert!(matches!(
            circulant(6, &[0, 1]),
            Err(Error::InvalidConnectionSet(_))
        ));
        assert!(matches!(circulant(6, &[2]), Err(Error::NotSymmetric)));
        assert!(matches!(
            circulant(6, &[7]),
            Err(Error::InvalidConnectionSet(_))
        ));
        let c8 = circulant(8, &[1, 7]).unwrap();
        assert!(isomorphic(&c8, &cycle(8).unwrap()));
        // Self-inverse connection n/2 gives a perfect matching.
        let m = circulant(6, &[3]).unwrap();
        assert_eq!(m.degree_sequence(), vec![1; 6]);
    }

    #[test]
    fn group_table_validation() {
        let z5 = GroupTable::cyclic(5).unwrap();
        assert_eq!(z5.order(), 5);
        assert_eq!(z5.identity(), 0);
        assert_eq!(z5.inverse(2), 3);
        assert_eq!(z5.mul(3, 4), 2);
        // Swapping one entry breaks the Latin square property.
        let mut bad = (0..3)
            .map(|a| (0..3).map(|b| (a + b) % 3).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        bad[1][1] = 0;
        assert!(GroupTable::new(bad).is_err());
    }

    #[test]
    fn symmetric_group_table() {
        let (s3, elements) = GroupTable::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(elements[0], Perm::identity(3));
        assert!(elements.windows(2).all(|w| w[0] < w[1]));
        // Table multiplication matches permutation composition.
        for (a, p) in elements.iter().enumerate() {
            for (b, q) in elements.iter().enumerate() {
                let prod = p.compose(q).unwrap();
                assert_eq!(elements[s3.mul(a, b)], prod);
            }
        }
        assert!(GroupTable::symmetric(7).is_err());
    }

    #[test]
    fn cayley_validation_and_translations() {
        let z5 = GroupTable::cyclic(5).unwrap();
        assert!(matches!(
            cayley(&z5, &[0, 1]),
            Err(Error::InvalidConnectionSet(_))
        ));
        assert!(matches!(cayley(&z5, &[1]), Err(Error::NotSymmetric)));
        let pentagon = cayley(&z5, &[1, 4]).unwrap();
        assert!(isomorphic(&pentagon, &cycle(5).unwrap()));
    }

    #[test]
    fn prism_fixture_invariants() {
        let g = fixtures::g6();
        assert_eq!(g.n(), 6);
        assert_eq!(aut_order(&g), 12);
        assert_eq!(theta(&g).unwrap().theta, 5);
        assert_eq!(distinguishing_number(&g).unwrap(), 2);
        assert_eq!(motion(&g).unwrap().motion, 4);
    }

    #[test]
    fn cubic_cayley_fixture_invariants() {
        let g = fixtures::g24();
        assert_eq!(g.n(), 24);
        assert!(g.is_connected());
        assert!(g.degree_sequence().iter().all(|&d| d == 3));
        assert_eq!(aut_order(&g), 48);
        let t = theta(&g).unwrap();
        assert_eq!(t.theta, 17);
        let w = t.witness.unwrap();
        assert_eq!(w.cycle_count(), 16);
        assert_eq!(w.degree() - w.moved_points().len(), 8);
    }

    #[test]
    fn small_fixture_invariants() {
        let g14 = fixtures::g14();
        assert_eq!(aut_order(&g14), 7);
        assert_eq!(theta(&g14).unwrap().theta, 3);
        assert_eq!(distinguishing_number(&g14).unwrap(), 2);
        assert_eq!(motion(&g14).unwrap().motion, 14);

        let g9 = fixtures::g9();
        assert_eq!(aut_order(&g9), 3);
        assert_eq!(theta(&g9).unwrap().theta, 4);
        assert_eq!(distinguishing_number(&g9).unwrap(), 2);
        assert_eq!(motion(&g9).unwrap().motion, 9);

        let g16 = fixtures::g16();
        assert_eq!(aut_order(&g16), 5);
        assert_eq!(theta(&g16).unwrap().theta, 5);
        assert_eq!(motion(&g16).unwrap().motion, 15);
    }

    #[test]
    fn quartet_thresholds() {
        let quartet = fixtures::k3_k3bar_quartet();
        let want_theta = [6, 5, 5, 6];
        let want_aut = [36, 6, 6, 36];
        let want_dnum = [3, 2, 2, 3];
        for (((g, &t), &a), &d) in quartet
            .iter()
            .zip(&want_theta)
            .zip(&want_aut)
            .zip(&want_dnum)
        {
            assert_eq!(theta(g).unwrap().theta, t);
            assert_eq!(aut_order(g), a);
            assert_eq!(distinguishing_number(g).unwrap(), d);
        }
    }

    #[test]
    fn octet_thresholds() {
        let octet = fixtures::c5_k5bar_octet();
        let want_theta = [10, 7, 7, 7, 7, 7, 7, 10];
        let want_aut = [1200, 10, 10, 10, 10, 10, 10, 1200];
        for ((g, &t), &a) in octet.iter().zip(&want_theta).zip(&want_aut) {
            assert_eq!(theta(g).unwrap().theta, t);
            assert_eq!(aut_order(g), a);
        }
    }

    #[test]
    fn johnson_graph_shapes() {
        assert!(JohnsonParams::new(4, 3, 1).is_err());
        assert!(JohnsonParams::new(6, 3, 4).is_err());
        assert!(JohnsonParams::new(6, 0, 1).is_err());
        let p = JohnsonParams::new(5, 2, 2).unwrap();
        let g = generalized_johnson(&p).unwrap();
        assert!(isomorphic(&g, &petersen()));
        let oct = generalized_johnson(&JohnsonParams::new(4, 2, 1).unwrap()).unwrap();
        assert_eq!(oct.n(), 6);
        assert_eq!(oct.degree_sequence(), vec![4; 6]);
        assert_eq!(aut_order(&oct), 48);
        assert!(generalized_johnson(&JohnsonParams::new(14, 7, 1).unwrap()).is_err());
    }

    #[test]
    fn johnson_closed_forms() {
        let th = |n, k, i| johnson_theta(&JohnsonParams::new(n, k, i).unwrap()).to_string();
        // Kneser K(n,2) thresholds: (n^2 - 3n + 6) / 2.
        assert_eq!(th(5, 2, 2), "8");
        assert_eq!(th(6, 2, 2), "12");
        assert_eq!(th(7, 2, 2), "17");
        assert_eq!(th(4, 2, 1), "6");
        assert_eq!(th(4, 2, 2), "6");
        assert_eq!(th(6, 3, 3), "20");
        assert_eq!(th(7, 3, 2), "26");
        assert_eq!(th(9, 1, 1), "9");

        let d = |n, k, i| johnson_dnum(&JohnsonParams::new(n, k, i).unwrap()).to_string();
        assert_eq!(d(5, 2, 1), "3");
        assert_eq!(d(5, 2, 2), "3");
        assert_eq!(d(7, 2, 1), "2");
        assert_eq!(d(4, 2, 1), "3");
        assert_eq!(d(4, 2, 2), "3");
        assert_eq!(d(6, 3, 3), "5");
        assert_eq!(d(8, 4, 4), "9");
        assert_eq!(d(8, 4, 2), "3");
        assert_eq!(d(8, 4, 1), "2");
        assert_eq!(d(6, 1, 1), "6");

        let a = |n, k, i| johnson_aut_order(&JohnsonParams::new(n, k, i).unwrap());
        assert_eq!(a(7, 3, 2), BigUint::from(40320u32));
        assert_eq!(a(7, 3, 1), BigUint::from(5040u32));
        assert_eq!(a(4, 2, 1), BigUint::from(48u32));
        assert_eq!(a(4, 2, 2), BigUint::from(48u32));
        assert_eq!(a(6, 3, 1), BigUint::from(1440u32));
        assert_eq!(a(6, 3, 3), (BigUint::one() << 10) * factorial(10));
        assert_eq!(a(8, 4, 2), (BigUint::one() << 35) * factorial(8));
        assert_eq!(a(5, 2, 1), BigUint::from(120u32));
        assert_eq!(a(3, 1, 1), BigUint::from(6u32));
    }

    #[test]
    fn partition_action_on_subsets() {
        let params = JohnsonParams::new(7, 3, 2).unwrap();
        let sigma = Perm::from_cycles(8, &[&[0, 1, 7], &[2, 3, 4], &[5, 6]]).unwrap();
        assert_eq!(
            sym_np1_image(&sigma, &[1, 2, 3], &params).unwrap(),
            vec![1, 2, 4]
        );
        assert_eq!(
            sym_np1_image(&sigma, &[3, 4, 5], &params).unwrap(),
            vec![2, 6, 7]
        );
        let wrong_regime = JohnsonParams::new(7, 3, 1).unwrap();
        assert!(matches!(
            sym_np1_image(&sigma, &[1, 2, 3], &wrong_regime),
            Err(Error::NotApplicable)
        ));
        assert!(matches!(
            sym_np1_image(&Perm::identity(6), &[1, 2, 3], &params),
            Err(Error::DegreeError(8, 6))
        ));
    }

    #[test]
    fn partition_action_induces_automorphisms() {
        let params = JohnsonParams::new(7, 3, 2).unwrap();
        let g = generalized_johnson(&params).unwrap();
        let sigma = Perm::from_cycles(8, &[&[0, 1, 7], &[2, 3, 4], &[5, 6]]).unwrap();
        let induced = sym_np1_automorphism(&sigma, &params).unwrap();
        assert!(is_automorphism(&g, &induced).unwrap());
        // The action is a homomorphism: composition carries over.
        let tau = Perm::from_cycles(8, &[&[0, 5], &[1, 6, 2]]).unwrap();
        let lhs = sym_np1_automorphism(&sigma.compose(&tau).unwrap(), &params).unwrap();
        let rhs = sym_np1_automorphism(&sigma, &params)
            .unwrap()
            .compose(&sym_np1_automorphism(&tau, &params).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn union_rule_all_symmetric() {
        let spec = UnionSpec::from_graphs(vec![complete(3).unwrap(), complete(3).unwrap()]);
        let (t, case) = union_theta_with_case(&spec).unwrap();
        assert_eq!((t, case), (6, UnionCase::AllSymmetric));
        let direct = theta(&disjoint_union(&[complete(3).unwrap(), complete(3).unwrap()]).unwrap())
            .unwrap()
            .theta;
        assert_eq!(t, direct);

        let spec = UnionSpec::from_graphs(vec![path(4).unwrap(), cycle(6).unwrap()]);
        let (t, _) = union_theta_with_case(&spec).unwrap();
        assert_eq!(t, 9);
    }

    #[test]
    fn union_rule_all_asymmetric() {
        let a = fixtures::asym6();
        let spec = UnionSpec::from_graphs(vec![a.clone(), a.clone()]);
        let (t, case) = union_theta_with_case(&spec).unwrap();
        assert_eq!((t, case), (7, UnionCase::AllAsymmetric));

        // Distinct asymmetric parts leave the union asymmetric.
        let spec = UnionSpec::from_graphs(vec![a.clone(), a.complement()]);
        let (t, case) = union_theta_with_case(&spec).unwrap();
        assert_eq!((t, case), (1, UnionCase::AllAsymmetric));
    }

    #[test]
    fn union_rule_mixed_cases() {
        let one = empty(1).unwrap();
        let spec = UnionSpec::from_graphs(vec![cycle(5).unwrap(), one.clone()]);
        let (t, case) = union_theta_with_case(&spec).unwrap();
        assert_eq!((t, case), (5, UnionCase::Mixed { exception: true }));
        let direct = theta(&disjoint_union(&[cycle(5).unwrap(), one]).unwrap())
            .unwrap()
            .theta;
        assert_eq!(t, direct);

        let spec = UnionSpec::from_graphs(vec![complete(3).unwrap(), fixtures::asym6()]);
        let (t, case) = union_theta_with_case(&spec).unwrap();
        assert_eq!((t, case), (9, UnionCase::Mixed { exception: false }));
        let direct = theta(
            &disjoint_union(&[complete(3).unwrap(), fixtures::asym6()]).unwrap(),
        )
        .unwrap()
        .theta;
        assert_eq!(t, direct);
    }

    #[test]
    fn union_component_hints() {
        let spec = UnionSpec::new(vec![
            UnionComponent::new(cycle(5).unwrap()).with_theta(4),
            UnionComponent::new(fixtures::asym6()).with_asymmetric(true),
        ]);
        assert_eq!(union_theta(&spec).unwrap(), 10);
        let direct = theta(&disjoint_union(&[cycle(5).unwrap(), fixtures::asym6()]).unwrap())
            .unwrap()
            .theta;
        assert_eq!(direct, 10);

        let disconnected = disjoint_union(&[path(2).unwrap(), path(2).unwrap()]).unwrap();
        let spec = UnionSpec::from_graphs(vec![cycle(5).unwrap(), disconnected]);
        assert!(matches!(
            union_theta(&spec),
            Err(Error::InvalidComponent(1))
        ));
        assert!(matches!(
            union_theta(&UnionSpec::new(vec![])),
            Err(Error::EmptyUnion)
        ));
    }

    #[test]
    fn kneser_union_cross_check() {
        // K(6,3) is ten disjoint edges; the all-symmetric rule gives
        // 2 + 18 = 20, matching the closed form.
        let g = kneser(6, 3).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 10);
        let spec = UnionSpec::from_graphs(
            comps
                .iter()
                .map(|c| g.induced_subgraph(c).unwrap())
                .collect(),
        );
        let (t, case) = union_theta_with_case(&spec).unwrap();
        assert_eq!((t, case), (20, UnionCase::AllSymmetric));
        assert_eq!(
            johnson_theta(&JohnsonParams::new(6, 3, 3).unwrap()),
            BigUint::from(20u32)
        );
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(binomial(7, 3), BigUint::from(35u32));
        assert_eq!(binomial(5, 0), BigUint::one());
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(isqrt(&BigUint::from(35u32)), BigUint::from(5u32));
        assert_eq!(isqrt(&BigUint::from(36u32)), BigUint::from(6u32));
        assert_eq!(isqrt(&BigUint::zero()), BigUint::zero());
    }
}
