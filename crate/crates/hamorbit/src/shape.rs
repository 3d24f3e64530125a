//! Canonical edge sets of the drawn figures.
//!
//! A shape key is the undirected edge set of the subgraph a string
//! traverses, stored canonically; two strings draw the same figure exactly
//! when their keys are equal.

use crate::error::{Error, Result};
use crate::group::GraphKind;
use crate::perm::PermString;

/// Canonical undirected edge set over the vertices `{0, …, n-1}`.
/// Edges are `(min, max)` pairs, sorted; equal keys mean identical figures.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeKey {
    n: usize,
    edges: Vec<(u8, u8)>,
}

impl ShapeKey {
    fn from_raw_edges(n: usize, mut edges: Vec<(u8, u8)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        debug_assert!(edges.windows(2).all(|w| w[0] != w[1]), "multi-edge");
        ShapeKey { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    /// Vertex degrees, indexed by label.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        deg
    }

    /// Applies the geometric label map (`s` if `refl`, then `+rot` mod n)
    /// to both endpoints of every edge.
    pub fn transform(&self, rot: usize, refl: bool) -> ShapeKey {
        let n = self.n;
        let map = |a: u8| -> u8 {
            let v = if refl { (n - a as usize) % n } else { a as usize };
            ((v + rot) % n) as u8
        };
        let edges = self.edges.iter().map(|&(a, b)| (map(a), map(b))).collect();
        ShapeKey::from_raw_edges(n, edges)
    }

    /// True when some rotation or reflection carries `self` onto `other`.
    pub fn is_similar_to(&self, other: &ShapeKey) -> Result<bool> {
        self.matches(other, true)
    }

    /// True when some rotation alone carries `self` onto `other`.
    pub fn is_equivalent_to(&self, other: &ShapeKey) -> Result<bool> {
        self.matches(other, false)
    }

    fn matches(&self, other: &ShapeKey, allow_reflection: bool) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                a: self.n,
                b: other.n,
            });
        }
        for refl in [false, true] {
            if refl && !allow_reflection {
                continue;
            }
            for rot in 0..self.n {
                if &self.transform(rot, refl) == other {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// Edge set traversed by `x`, read as a path or as a closed cycle.
pub fn shape_key(x: &PermString, graph: GraphKind) -> Result<ShapeKey> {
    let n = x.len();
    let min = match graph {
        GraphKind::Path => 2,
        GraphKind::Cycle => 3,
    };
    if n < min {
        return Err(Error::TooShort {
            kind: match graph {
                GraphKind::Path => "path",
                GraphKind::Cycle => "cycle",
            },
            min,
            n,
        });
    }
    let e = x.entries();
    let mut edges: Vec<(u8, u8)> = e.windows(2).map(|w| (w[0], w[1])).collect();
    if graph == GraphKind::Cycle {
        edges.push((e[n - 1], e[0]));
    }
    Ok(ShapeKey::from_raw_edges(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PermString {
        s.parse().unwrap()
    }

    #[test]
    fn path_key_consecutive_edges() {
        let key = shape_key(&p("0123"), GraphKind::Path).unwrap();
        assert_eq!(key.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn cycle_key_adds_closing_edge() {
        let key = shape_key(&p("0123"), GraphKind::Cycle).unwrap();
        assert_eq!(key.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn reversal_same_key() {
        let a = shape_key(&p("0213"), GraphKind::Path).unwrap();
        let b = shape_key(&p("3120"), GraphKind::Path).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn too_short_rejected() {
        let x = PermString::new(vec![0, 1]).unwrap();
        assert!(shape_key(&x, GraphKind::Path).is_ok());
        assert!(matches!(
            shape_key(&x, GraphKind::Cycle),
            Err(Error::TooShort { .. })
        ));
    }

    #[test]
    fn transform_identity() {
        let key = shape_key(&p("0123"), GraphKind::Path).unwrap();
        assert_eq!(key.transform(0, false), key);
    }

    #[test]
    fn transform_rotates_path_key() {
        let key = shape_key(&p("0123"), GraphKind::Path).unwrap();
        let rotated = key.transform(1, false);
        assert_eq!(rotated.edges(), &[(0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn degrees_of_path_and_cycle() {
        let path = shape_key(&p("0123"), GraphKind::Path).unwrap();
        assert_eq!(path.degrees(), vec![1, 2, 2, 1]);
        let cycle = shape_key(&p("0123"), GraphKind::Cycle).unwrap();
        assert_eq!(cycle.degrees(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn square_and_bowtie_are_distinct() {
        let square = shape_key(&p("0123"), GraphKind::Cycle).unwrap();
        let bowtie = shape_key(&p("0213"), GraphKind::Cycle).unwrap();
        assert!(!square.is_similar_to(&bowtie).unwrap());
        assert!(!square.is_equivalent_to(&bowtie).unwrap());
        assert!(square.is_similar_to(&square).unwrap());
        assert!(square.is_similar_to(&square.transform(1, false)).unwrap());
    }

    #[test]
    fn size_mismatch_rejected() {
        let a = shape_key(&p("0123"), GraphKind::Path).unwrap();
        let b = shape_key(&p("012"), GraphKind::Path).unwrap();
        assert!(a.is_similar_to(&b).is_err());
    }
}
