//! Permutations on `{0, .., n-1}` and finitely generated permutation groups.
//!
//! Cycle counts follow the convention used by the threshold computation: for a
//! non-identity permutation, `cycle_count` counts every cycle including fixed
//! points; the identity counts as 0.

use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt;

/// Closure enumeration refuses to grow past this many elements by default.
pub const DEFAULT_GROUP_CAP: usize = 2_000_000;

/// A permutation of `{0, .., n-1}`, stored as its image table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).map(|v| v as u16).collect(),
        }
    }

    /// Builds a permutation from its image table; the table must be a
    /// bijection on `{0, .., n-1}`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in images {
            if img >= n {
                return Err(Error::OutOfRange { vertex: img, n });
            }
            if seen[img] {
                return Err(Error::InvalidParams(format!(
                    "image table repeats the value {img}"
                )));
            }
            seen[img] = true;
        }
        Ok(Perm {
            images: images.iter().map(|&v| v as u16).collect(),
        })
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u16> = (0..n).map(|v| v as u16).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for &p in *cycle {
                if p >= n {
                    return Err(Error::OutOfRange { vertex: p, n });
                }
                if touched[p] {
                    return Err(Error::InvalidParams(format!(
                        "point {p} appears in more than one cycle"
                    )));
                }
                touched[p] = true;
            }
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                images[from] = to as u16;
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &img)| v == img as usize)
    }

    /// Composition `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeError(self.degree(), other.degree()));
        }
        Ok(Perm {
            images: other
                .images
                .iter()
                .map(|&mid| self.images[mid as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (v, &img) in self.images.iter().enumerate() {
            images[img as usize] = v as u16;
        }
        Perm { images }
    }

    /// Multiplicative order: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, len| acc / gcd(acc, len) * len)
    }

    pub fn moved_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(v, &img)| v != img as usize)
            .map(|(v, _)| v)
            .collect()
    }

    /// All cycles, fixed points included. Each cycle starts at its smallest
    /// point; cycles are sorted by starting point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.apply(start);
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.apply(v);
            }
            out.push(cycle);
        }
        out
    }

    /// Number of cycles, fixed points included; 0 for the identity.
    pub fn cycle_count(&self) -> usize {
        if self.is_identity() {
            0
        } else {
            self.cycles().len()
        }
    }

    /// Number of cycles, fixed points included, with no special case: the
    /// identity on `n` points has `n` cycles.
    pub fn raw_cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle notation listing only cycles of length at least two; the
    /// identity renders as `()`.
    pub fn cycle_notation(&self) -> String {
        let nontrivial: Vec<Vec<usize>> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() >= 2)
            .collect();
        if nontrivial.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for cycle in nontrivial {
            s.push('(');
            for (idx, p) in cycle.iter().enumerate() {
                if idx > 0 {
                    s.push(' ');
                }
                s.push_str(&p.to_string());
            }
            s.push(')');
        }
        s
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

/// A permutation group given by generators, with optionally enumerated
/// elements.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Option<Vec<Perm>>,
}

impl PermGroup {
    /// Wraps generators without enumerating; identity generators are dropped
    /// and duplicates removed.
    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        let mut kept: Vec<Perm> = Vec::new();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeError(degree, g.degree()));
            }
            if !g.is_identity() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(PermGroup {
            degree,
            generators: kept,
            elements: None,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Enumerated elements in lexicographic order, if `close` has run.
    pub fn elements(&self) -> Option<&[Perm]> {
        self.elements.as_deref()
    }

    pub fn order(&self) -> Option<usize> {
        self.elements.as_ref().map(|e| e.len())
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Enumerates all elements, failing with `GroupTooLarge` past `cap`.
    pub fn close(&mut self, cap: usize) -> Result<()> {
        if self.elements.is_none() {
            let closed = close_generators(self.degree, self.generators.clone(), cap)?;
            self.elements = closed.elements;
        }
        Ok(())
    }
}

/// Enumerates the group generated by `generators` by breadth-first closure.
/// The result holds its elements sorted lexicographically by image table, so
/// the identity comes first.
pub fn close_generators(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<PermGroup> {
    let group = PermGroup::from_generators(degree, generators)?;
    let mut seen: HashSet<Perm> = HashSet::new();
    let identity = Perm::identity(degree);
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(e) = frontier.pop() {
        for g in &group.generators {
            let product = e.compose(g)?;
            if seen.insert(product.clone()) {
                if seen.len() > cap {
                    return Err(Error::GroupTooLarge(cap));
                }
                frontier.push(product);
            }
        }
    }
    let mut elements: Vec<Perm> = seen.into_iter().collect();
    elements.sort();
    Ok(PermGroup {
        degree: group.degree,
        generators: group.generators,
        elements: Some(elements),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_properties() {
        let id = Perm::identity(5);
        assert!(id.is_identity());
        assert_eq!(id.order(), 1);
        assert_eq!(id.cycle_count(), 0);
        assert_eq!(id.raw_cycle_count(), 5);
        assert_eq!(id.cycle_notation(), "()");
        assert!(id.moved_points().is_empty());
    }

    #[test]
    fn image_table_validation() {
        assert!(Perm::from_images(&[1, 0, 2]).is_ok());
        assert!(matches!(
            Perm::from_images(&[0, 0, 1]),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            Perm::from_images(&[0, 3]),
            Err(Error::OutOfRange { vertex: 3, n: 2 })
        ));
    }

    #[test]
    fn cycle_construction_and_notation() {
        let p = Perm::from_cycles(8, &[&[0, 1, 7], &[2, 3, 4], &[5, 6]]).unwrap();
        assert_eq!(p.cycle_notation(), "(0 1 7)(2 3 4)(5 6)");
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_count(), 3);
        assert_eq!(p.apply(7), 0);
        assert_eq!(p.inverse().apply(0), 7);
        assert!(matches!(
            Perm::from_cycles(4, &[&[0, 1], &[1, 2]]),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn transposition_cycle_count_includes_fixed_points() {
        let t = Perm::from_cycles(5, &[&[0, 1]]).unwrap();
        assert_eq!(t.cycle_count(), 4);
        assert_eq!(t.moved_points(), vec![0, 1]);
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // p = (0 1), q = (1 2); (p ∘ q)(1) = p(2) = 2, (p ∘ q)(2) = p(1) = 0.
        let p = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let q = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let pq = p.compose(&q).unwrap();
        assert_eq!(pq.images(), vec![1, 2, 0]);
        let id = p.compose(&p).unwrap();
        assert!(id.is_identity());
        assert!(p.compose(&Perm::identity(4)).is_err());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let p = Perm::from_images(&[2, 0, 3, 1, 4]).unwrap();
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn closure_of_symmetric_group_generators() {
        let gens = vec![
            Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
        ];
        let group = close_generators(3, gens, 100).unwrap();
        assert_eq!(group.order(), Some(6));
        let elements = group.elements().unwrap();
        assert!(elements[0].is_identity());
        assert!(elements.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn closure_of_cyclic_group() {
        let rot = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let group = close_generators(5, vec![rot], 100).unwrap();
        assert_eq!(group.order(), Some(5));
    }

    #[test]
    fn closure_respects_cap() {
        let gens = vec![
            Perm::from_cycles(6, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap(),
        ];
        assert!(matches!(
            close_generators(6, gens, 100),
            Err(Error::GroupTooLarge(100))
        ));
    }

    #[test]
    fn trivial_group_detection() {
        let g = PermGroup::from_generators(4, vec![Perm::identity(4)]).unwrap();
        assert!(g.is_trivial());
    }
}
