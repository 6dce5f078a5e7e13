//! Theta graphs, fan graphs, and arbitrary 2-trees replayed from attachment
//! sequences, plus triangle enumeration, brute-force isomorphism testing, and
//! exhaustive generation of small 2-trees up to isomorphism.
//!
//! Vertex labeling is fixed so that outputs are reproducible: the theta
//! centrals are 0 and 1, the fan apex is 0, and attachment sequences create
//! vertices 3, 4, ... in order on top of the initial triangle {0, 1, 2}.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Permutation search bound for [`is_isomorphic`].
pub const MAX_ISO_N: usize = 10;
/// Exhaustive generation bound for [`enumerate_two_trees`].
pub const MAX_ENUM_N: usize = 8;

/// An undirected simple graph together with its full triangle list.
///
/// Edges are stored normalized (`u < v`); the triangle list is exactly the
/// set of 3-cliques, each triple ascending, sorted lexicographically. Every
/// 2-tree on `n` vertices has `2n - 3` edges and `n - 2` triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    triangles: Vec<(usize, usize, usize)>,
}

impl TriangleGraph {
    fn from_edge_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let triangles = triangles_of(n, &edges);
        TriangleGraph {
            n,
            edges,
            triangles,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn triangles(&self) -> &[(usize, usize, usize)] {
        &self.triangles
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&norm(u, v))
    }

    /// Vertex degrees sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.sort_unstable_by(|a, b| b.cmp(a));
        deg
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> TriangleGraph {
        assert_eq!(perm.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| norm(perm[u], perm[v]))
            .collect();
        TriangleGraph::from_edge_set(self.n, edges)
    }
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// All 3-cliques of the given edge set, each triple ascending, the list
/// sorted lexicographically.
pub fn triangles_of(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !edges.contains(&(i, j)) {
                continue;
            }
            for k in j + 1..n {
                if edges.contains(&(i, k)) && edges.contains(&(j, k)) {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// Theta graph on `n >= 3` vertices: centrals 0 and 1 joined by an edge and
/// by `n - 2` length-2 paths through the spoke vertices `2..n`. All triangles
/// share the central edge.
pub fn build_theta(n: usize) -> Result<TriangleGraph> {
    require_min_n(n, "build_theta")?;
    let mut edges = BTreeSet::new();
    edges.insert((0, 1));
    for c in 2..n {
        edges.insert((0, c));
        edges.insert((1, c));
    }
    Ok(TriangleGraph::from_edge_set(n, edges))
}

/// Fan graph on `n >= 3` vertices: apex 0 adjacent to every vertex of the
/// path `1 - 2 - ... - n-1`. Consecutive triangles share the apex and a path
/// vertex.
pub fn build_fan(n: usize) -> Result<TriangleGraph> {
    require_min_n(n, "build_fan")?;
    let mut edges = BTreeSet::new();
    for v in 1..n {
        edges.insert((0, v));
    }
    for v in 1..n - 1 {
        edges.insert((v, v + 1));
    }
    Ok(TriangleGraph::from_edge_set(n, edges))
}

fn require_min_n(n: usize, what: &'static str) -> Result<()> {
    if n < 3 {
        return Err(Error::TooSmall {
            what,
            got: n,
            min: 3,
        });
    }
    Ok(())
}

/// Construction recipe for an arbitrary 2-tree: the initial triangle
/// {0, 1, 2} plus, for each added vertex `i + 3`, the existing edge it
/// attaches to. Validated on construction, so replay cannot fail.
///
/// Textual form: `n;u1-v1;u2-v2;...` with exactly `n - 3` attachments,
/// e.g. `5;0-1;0-1` for the theta graph on five vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTreeSeq {
    n: usize,
    attachments: Vec<(usize, usize)>,
}

impl TwoTreeSeq {
    /// Validates the attachment list by replay: attachment `i` (creating
    /// vertex `i + 3`) must name an edge already present among the vertices
    /// `0..i+3`. Attachment pairs are normalized to `u < v`.
    pub fn new(n: usize, attachments: Vec<(usize, usize)>) -> Result<Self> {
        require_min_n(n, "TwoTreeSeq")?;
        if attachments.len() != n - 3 {
            return Err(Error::ParseSeq {
                input: format!("{n} vertices with {} attachments", attachments.len()),
                reason: format!("expected exactly {} attachments", n - 3),
            });
        }
        let attachments: Vec<(usize, usize)> =
            attachments.into_iter().map(|(u, v)| norm(u, v)).collect();
        let mut edges = BTreeSet::from([(0, 1), (0, 2), (1, 2)]);
        for (i, &(u, v)) in attachments.iter().enumerate() {
            let vertex = i + 3;
            if u == v || v >= vertex || !edges.contains(&(u, v)) {
                return Err(Error::BadAttachment { index: i, u, v });
            }
            edges.insert((u, vertex));
            edges.insert((v, vertex));
        }
        Ok(TwoTreeSeq { n, attachments })
    }

    /// Sequence replaying to exactly [`build_theta`]`(n)`: every vertex
    /// attaches to the central edge (0, 1).
    pub fn theta(n: usize) -> Result<Self> {
        require_min_n(n, "TwoTreeSeq::theta")?;
        Self::new(n, vec![(0, 1); n - 3])
    }

    /// Sequence replaying to exactly [`build_fan`]`(n)`: vertex `i` attaches
    /// to the spoke edge (0, i - 1), extending the path by one.
    pub fn fan(n: usize) -> Result<Self> {
        require_min_n(n, "TwoTreeSeq::fan")?;
        Self::new(n, (3..n).map(|i| (0, i - 1)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn attachments(&self) -> &[(usize, usize)] {
        &self.attachments
    }
}

impl fmt::Display for TwoTreeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        for &(u, v) in &self.attachments {
            write!(f, ";{u}-{v}")?;
        }
        Ok(())
    }
}

impl FromStr for TwoTreeSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::ParseSeq {
            input: s.to_string(),
            reason,
        };
        let mut parts = s.split(';');
        let n: usize = parts
            .next()
            .ok_or_else(|| bad("missing vertex count".into()))?
            .trim()
            .parse()
            .map_err(|e| bad(format!("vertex count: {e}")))?;
        let mut attachments = Vec::new();
        for part in parts {
            let (u, v) = part
                .split_once('-')
                .ok_or_else(|| bad(format!("attachment {part:?} is not of the form u-v")))?;
            let u: usize = u
                .trim()
                .parse()
                .map_err(|e| bad(format!("attachment {part:?}: {e}")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|e| bad(format!("attachment {part:?}: {e}")))?;
            attachments.push((u, v));
        }
        TwoTreeSeq::new(n, attachments)
    }
}

/// Replays a validated sequence into its graph. Each attachment adds exactly
/// one triangle: the attaching edge plus the new vertex.
pub fn build_two_tree(seq: &TwoTreeSeq) -> TriangleGraph {
    let mut edges = BTreeSet::from([(0, 1), (0, 2), (1, 2)]);
    let mut triangles = vec![(0, 1, 2)];
    for (i, &(u, v)) in seq.attachments.iter().enumerate() {
        let vertex = i + 3;
        edges.insert((u, vertex));
        edges.insert((v, vertex));
        triangles.push((u, v, vertex));
    }
    triangles.sort_unstable();
    debug_assert_eq!(triangles, triangles_of(seq.n, &edges));
    TriangleGraph {
        n: seq.n,
        edges,
        triangles,
    }
}

/// Edge-preserving bijection test by degree-sequence prefilter followed by a
/// backtracking permutation search. Both graphs must have at most
/// [`MAX_ISO_N`] vertices.
pub fn is_isomorphic(g1: &TriangleGraph, g2: &TriangleGraph) -> Result<bool> {
    for g in [g1, g2] {
        if g.n > MAX_ISO_N {
            return Err(Error::OutOfRange {
                what: "is_isomorphic",
                got: g.n,
                min: 1,
                max: MAX_ISO_N,
            });
        }
    }
    if g1.n != g2.n || g1.edges.len() != g2.edges.len() {
        return Ok(false);
    }
    if g1.degree_sequence() != g2.degree_sequence() {
        return Ok(false);
    }
    let n = g1.n;
    let adj = |g: &TriangleGraph| {
        let mut a = vec![vec![false; n]; n];
        for &(u, v) in &g.edges {
            a[u][v] = true;
            a[v][u] = true;
        }
        a
    };
    let deg = |g: &TriangleGraph| {
        let mut d = vec![0usize; n];
        for &(u, v) in &g.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    };
    struct Search {
        n: usize,
        a1: Vec<Vec<bool>>,
        a2: Vec<Vec<bool>>,
        d1: Vec<usize>,
        d2: Vec<usize>,
    }

    impl Search {
        fn extend(&self, i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
            if i == self.n {
                return true;
            }
            for c in 0..self.n {
                if used[c] || self.d2[c] != self.d1[i] {
                    continue;
                }
                if (0..i).any(|j| self.a1[i][j] != self.a2[c][map[j]]) {
                    continue;
                }
                map[i] = c;
                used[c] = true;
                if self.extend(i + 1, map, used) {
                    return true;
                }
                used[c] = false;
            }
            false
        }
    }

    let search = Search {
        n,
        a1: adj(g1),
        a2: adj(g2),
        d1: deg(g1),
        d2: deg(g2),
    };
    Ok(search.extend(0, &mut vec![usize::MAX; n], &mut vec![false; n]))
}

/// One representative per isomorphism class of 2-trees on `n` vertices,
/// generated by exhausting all attachment sequences and deduplicating with
/// [`is_isomorphic`]. Bounded by [`MAX_ENUM_N`]; representatives appear in
/// the deterministic order the sequence enumeration first reaches them.
pub fn enumerate_two_trees(n: usize) -> Result<Vec<TriangleGraph>> {
    if !(3..=MAX_ENUM_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "enumerate_two_trees",
            got: n,
            min: 3,
            max: MAX_ENUM_N,
        });
    }
    let mut reps: Vec<TriangleGraph> = Vec::new();
    let mut edges = BTreeSet::from([(0, 1), (0, 2), (1, 2)]);
    grow(n, 3, &mut edges, &mut reps)?;
    return Ok(reps);

    fn grow(
        n: usize,
        vertex: usize,
        edges: &mut BTreeSet<(usize, usize)>,
        reps: &mut Vec<TriangleGraph>,
    ) -> Result<()> {
        if vertex == n {
            let g = TriangleGraph::from_edge_set(n, edges.clone());
            for rep in reps.iter() {
                if is_isomorphic(rep, &g)? {
                    return Ok(());
                }
            }
            reps.push(g);
            return Ok(());
        }
        let candidates: Vec<(usize, usize)> = edges.iter().copied().collect();
        for (u, v) in candidates {
            edges.insert((u, vertex));
            edges.insert((v, vertex));
            grow(n, vertex + 1, edges, reps)?;
            edges.remove(&(u, vertex));
            edges.remove(&(v, vertex));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_shapes() {
        assert_eq!(
            build_theta(2).unwrap_err(),
            Error::TooSmall {
                what: "build_theta",
                got: 2,
                min: 3
            }
        );
        let k3 = build_theta(3).unwrap();
        assert_eq!(k3.triangles(), &[(0, 1, 2)]);
        let t5 = build_theta(5).unwrap();
        assert_eq!(t5.n(), 5);
        assert_eq!(t5.edges().len(), 7);
        assert_eq!(t5.triangles().len(), 3);
        assert!(t5.triangles().iter().all(|&(u, v, _)| (u, v) == (0, 1)));
        let diamond = build_theta(4).unwrap();
        assert_eq!(diamond.triangles(), &[(0, 1, 2), (0, 1, 3)]);
    }

    #[test]
    fn fan_shapes() {
        assert!(build_fan(2).is_err());
        let k3 = build_fan(3).unwrap();
        assert!(is_isomorphic(&k3, &build_theta(3).unwrap()).unwrap());
        let diamond = build_fan(4).unwrap();
        assert_eq!(diamond.triangles().len(), 2);
        assert_eq!(
            build_fan(6).unwrap().degree_sequence(),
            vec![5, 3, 3, 3, 2, 2]
        );
        let f7 = build_fan(7).unwrap();
        assert!(f7.triangles().iter().all(|&(a, _, _)| a == 0));
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(
            build_theta(6).unwrap().degree_sequence(),
            vec![5, 5, 2, 2, 2, 2]
        );
        assert_eq!(build_theta(3).unwrap().degree_sequence(), vec![2, 2, 2]);
    }

    #[test]
    fn triangles_of_edge_sets() {
        let k3 = BTreeSet::from([(0, 1), (0, 2), (1, 2)]);
        assert_eq!(triangles_of(3, &k3), vec![(0, 1, 2)]);
        let p4 = BTreeSet::from([(0, 1), (1, 2), (2, 3)]);
        assert_eq!(triangles_of(4, &p4), Vec::new());
    }

    #[test]
    fn two_tree_replay_matches_builders() {
        let k3 = build_two_tree(&TwoTreeSeq::new(3, vec![]).unwrap());
        assert_eq!(k3, build_theta(3).unwrap());
        for n in 3..=8 {
            let theta = build_two_tree(&TwoTreeSeq::theta(n).unwrap());
            assert_eq!(theta, build_theta(n).unwrap(), "theta n={n}");
            let fan = build_two_tree(&TwoTreeSeq::fan(n).unwrap());
            assert_eq!(fan, build_fan(n).unwrap(), "fan n={n}");
        }
    }

    #[test]
    fn two_tree_counts() {
        for n in 3..=8 {
            for seq in [TwoTreeSeq::theta(n).unwrap(), TwoTreeSeq::fan(n).unwrap()] {
                let g = build_two_tree(&seq);
                assert_eq!(g.edges().len(), 2 * n - 3);
                assert_eq!(g.triangles().len(), n - 2);
            }
        }
    }

    #[test]
    fn seq_validation_and_parsing() {
        assert!(TwoTreeSeq::new(4, vec![(0, 3)]).is_err());
        assert!(TwoTreeSeq::new(4, vec![(2, 2)]).is_err());
        assert!(TwoTreeSeq::new(5, vec![(0, 1)]).is_err()); // wrong count
                                                            // (2,3) does not exist when vertex 4 is attached in the theta order
        assert_eq!(
            TwoTreeSeq::new(5, vec![(0, 1), (2, 3)]).unwrap_err(),
            Error::BadAttachment {
                index: 1,
                u: 2,
                v: 3
            }
        );

        let seq: TwoTreeSeq = "5;0-1;0-1".parse().unwrap();
        assert_eq!(seq, TwoTreeSeq::theta(5).unwrap());
        assert_eq!(seq.to_string(), "5;0-1;0-1");
        let k3: TwoTreeSeq = "3".parse().unwrap();
        assert_eq!(k3.attachments(), &[]);
        // attachments normalize to u < v
        assert_eq!("4;1-0".parse::<TwoTreeSeq>().unwrap().to_string(), "4;0-1");

        assert!("x;0-1".parse::<TwoTreeSeq>().is_err());
        assert!("4;01".parse::<TwoTreeSeq>().is_err());
        assert!("4;0-9".parse::<TwoTreeSeq>().is_err());
    }

    #[test]
    fn isomorphism_basics() {
        let t5 = build_theta(5).unwrap();
        let f5 = build_fan(5).unwrap();
        assert!(!is_isomorphic(&t5, &f5).unwrap());
        assert_eq!(t5.degree_sequence(), vec![4, 4, 2, 2, 2]);
        assert_eq!(f5.degree_sequence(), vec![4, 3, 3, 2, 2]);

        let perm = [3, 0, 4, 1, 2];
        assert!(is_isomorphic(&t5, &t5.relabel(&perm)).unwrap());

        let big = build_theta(11).unwrap();
        assert!(is_isomorphic(&big, &big).is_err());
    }

    #[test]
    fn enumerate_small_two_trees() {
        assert_eq!(enumerate_two_trees(3).unwrap().len(), 1);
        assert_eq!(enumerate_two_trees(4).unwrap().len(), 1);
        assert!(enumerate_two_trees(2).is_err());
        assert!(enumerate_two_trees(9).is_err());

        let reps = enumerate_two_trees(6).unwrap();
        for (i, a) in reps.iter().enumerate() {
            assert_eq!(a.edges().len(), 9);
            assert_eq!(a.triangles().len(), 4);
            for b in &reps[i + 1..] {
                assert!(!is_isomorphic(a, b).unwrap());
            }
        }
        // the theta and fan shapes must both be present
        let t6 = build_theta(6).unwrap();
        let f6 = build_fan(6).unwrap();
        assert!(reps.iter().any(|g| is_isomorphic(g, &t6).unwrap()));
        assert!(reps.iter().any(|g| is_isomorphic(g, &f6).unwrap()));
    }
}
