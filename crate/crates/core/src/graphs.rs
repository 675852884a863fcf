//! Abstract graph structures, forbidden-subgraph tests, small-graph
//! enumeration, cycle analysis, and the triangle-chain rigidity predicate.

use crate::geometry::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Edge label of a bicolored ((1,d)-) graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeLabel {
    #[serde(rename = "UNIT")]
    Unit,
    #[serde(rename = "D")]
    D,
}

/// A two-edge-colored graph: UNIT edges target distance 1, D edges target
/// distance d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicoloredGraph {
    base: SimpleGraph,
    labels: BTreeMap<(usize, usize), EdgeLabel>,
}

/// A necessary range condition on d extracted from an off-color cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeConstraint {
    pub kind: RangeKind,
    pub bound: Scalar,
    pub witness_cycle: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RangeKind {
    MinD,
    MaxD,
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("input too large: {0}")]
    InputTooLarge(String),
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("edge ({0}, {1}) is missing a label")]
    MissingLabel(usize, usize),
    #[error("invalid graph JSON: {0}")]
    BadJson(String),
}

fn norm_edge(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.edges.insert((u, v));
            }
        }
        g
    }

    /// Cycle C_n.
    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            let (a, b) = norm_edge(u, (u + 1) % n);
            if a != b {
                g.edges.insert((a, b));
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v || u >= self.n || v >= self.n {
            return Err(GraphError::InvalidEdge(u, v));
        }
        self.edges.insert(norm_edge(u, v));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&norm_edge(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Adjacency as bitmasks (requires n <= 64).
    fn adj_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    /// The subgraph induced by `vertices` (relabeled 0..len in the given
    /// order).
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.edges.insert(norm_edge(i, j));
                }
            }
        }
        g
    }

    /// Canonical form under vertex relabeling: the lexicographically least
    /// edge set over all permutations. Exhaustive; guarded to n <= 8.
    pub fn canonical_form(&self) -> Result<BTreeSet<(usize, usize)>, GraphError> {
        if self.n > 8 {
            return Err(GraphError::InputTooLarge(format!(
                "canonical form is exhaustive and limited to 8 vertices, got {}",
                self.n
            )));
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best: Option<BTreeSet<(usize, usize)>> = None;
        permute(&mut perm, 0, &mut |p| {
            let relabeled: BTreeSet<(usize, usize)> = self
                .edges
                .iter()
                .map(|&(u, v)| norm_edge(p[u], p[v]))
                .collect();
            if best.as_ref().is_none_or(|b| relabeled < *b) {
                best = Some(relabeled);
            }
        });
        Ok(best.unwrap_or_default())
    }

    /// Serializes to the stable JSON form `{"n":…, "edges":[[u,v],…]}` with
    /// edges sorted lexicographically.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(u, v)| [u, v]).collect();
        serde_json::json!({ "n": self.n, "edges": edges })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, GraphError> {
        let n = v
            .get("n")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| GraphError::BadJson("missing \"n\"".into()))? as usize;
        let edges = v
            .get("edges")
            .and_then(|x| x.as_array())
            .ok_or_else(|| GraphError::BadJson("missing \"edges\"".into()))?;
        let mut g = SimpleGraph::new(n);
        for e in edges {
            let pair = e
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| GraphError::BadJson("edge must be a pair".into()))?;
            let u = pair[0].as_u64().ok_or_else(|| GraphError::BadJson("bad endpoint".into()))?;
            let v2 = pair[1].as_u64().ok_or_else(|| GraphError::BadJson("bad endpoint".into()))?;
            g.add_edge(u as usize, v2 as usize)
                .map_err(|e| GraphError::BadJson(e.to_string()))?;
        }
        Ok(g)
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

impl BicoloredGraph {
    pub fn new(
        n: usize,
        edges: &[(usize, usize, EdgeLabel)],
    ) -> Result<Self, GraphError> {
        let mut base = SimpleGraph::new(n);
        let mut labels = BTreeMap::new();
        for &(u, v, l) in edges {
            base.add_edge(u, v)?;
            labels.insert(norm_edge(u, v), l);
        }
        Ok(BicoloredGraph { base, labels })
    }

    pub fn from_parts(
        base: SimpleGraph,
        labels: BTreeMap<(usize, usize), EdgeLabel>,
    ) -> Result<Self, GraphError> {
        for &(u, v) in &base.edges {
            if !labels.contains_key(&(u, v)) {
                return Err(GraphError::MissingLabel(u, v));
            }
        }
        Ok(BicoloredGraph { base, labels })
    }

    pub fn base(&self) -> &SimpleGraph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    pub fn label(&self, u: usize, v: usize) -> Option<EdgeLabel> {
        self.labels.get(&norm_edge(u, v)).copied()
    }

    pub fn labeled_edges(&self) -> impl Iterator<Item = (usize, usize, EdgeLabel)> + '_ {
        self.base.edges().map(|(u, v)| (u, v, self.labels[&(u, v)]))
    }

    pub fn count_labels(&self) -> (usize, usize) {
        let unit = self
            .labels
            .values()
            .filter(|&&l| l == EdgeLabel::Unit)
            .count();
        (unit, self.labels.len() - unit)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.base.to_json();
        let mut labels = serde_json::Map::new();
        for (&(a, b), &l) in &self.labels {
            let tag = match l {
                EdgeLabel::Unit => "UNIT",
                EdgeLabel::D => "D",
            };
            labels.insert(format!("{a}-{b}"), serde_json::Value::String(tag.into()));
        }
        v["labels"] = serde_json::Value::Object(labels);
        v
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, GraphError> {
        let base = SimpleGraph::from_json(v)?;
        let raw = v
            .get("labels")
            .and_then(|x| x.as_object())
            .ok_or_else(|| GraphError::BadJson("missing \"labels\"".into()))?;
        let mut labels = BTreeMap::new();
        for (k, val) in raw {
            let mut it = k.split('-');
            let (a, b) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => (
                    a.parse::<usize>()
                        .map_err(|_| GraphError::BadJson(format!("bad label key {k}")))?,
                    b.parse::<usize>()
                        .map_err(|_| GraphError::BadJson(format!("bad label key {k}")))?,
                ),
                _ => return Err(GraphError::BadJson(format!("bad label key {k}"))),
            };
            let l = match val.as_str() {
                Some("UNIT") => EdgeLabel::Unit,
                Some("D") => EdgeLabel::D,
                _ => return Err(GraphError::BadJson(format!("bad label value for {k}"))),
            };
            labels.insert(norm_edge(a, b), l);
        }
        BicoloredGraph::from_parts(base, labels)
    }
}

/// Finds a K4 (4-clique), returning its vertices if present.
pub fn contains_k4(g: &SimpleGraph) -> Option<[usize; 4]> {
    let adj = g.adj_masks();
    let n = g.n;
    for a in 0..n {
        for b in a + 1..n {
            if adj[a] & (1 << b) == 0 {
                continue;
            }
            for c in b + 1..n {
                if adj[c] & (1 << a) == 0 || adj[c] & (1 << b) == 0 {
                    continue;
                }
                for d in c + 1..n {
                    if adj[d] & (1 << a) != 0 && adj[d] & (1 << b) != 0 && adj[d] & (1 << c) != 0
                    {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// Finds a K_{2,3} subgraph: two vertices with three common neighbors.
/// Returns (the 2-side, the 3-side) if present.
pub fn contains_k23(g: &SimpleGraph) -> Option<([usize; 2], [usize; 3])> {
    let adj = g.adj_masks();
    let n = g.n;
    for a in 0..n {
        for b in a + 1..n {
            let common = adj[a] & adj[b];
            if common.count_ones() >= 3 {
                let mut side = [0usize; 3];
                let mut m = common;
                for slot in &mut side {
                    let v = m.trailing_zeros() as usize;
                    *slot = v;
                    m &= m - 1;
                }
                return Some(([a, b], side));
            }
        }
    }
    None
}

/// Yields one representative per isomorphism class of simple graphs on `n`
/// vertices (1 <= n <= 5), by canonical-form deduplication over all edge
/// subsets.
pub fn enumerate_small_graphs(n: usize) -> Result<Vec<SimpleGraph>, GraphError> {
    if n == 0 || n > 5 {
        return Err(GraphError::InputTooLarge(format!(
            "enumeration supports 1..=5 vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut g = SimpleGraph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                g.edges.insert((u, v));
            }
        }
        let canon = g.canonical_form()?;
        if seen.insert(canon) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Whether a graph on at most 5 vertices is a unit distance graph
/// (characterized by excluding K4 and K_{2,3}).
pub fn is_udg_small(g: &SimpleGraph) -> Result<bool, GraphError> {
    if g.n > 5 {
        return Err(GraphError::InputTooLarge(format!(
            "the forbidden-subgraph characterization covers up to 5 vertices, got {}",
            g.n
        )));
    }
    Ok(contains_k4(g).is_none() && contains_k23(g).is_none())
}

/// Maximum edge count of a unit distance graph on n <= 5 vertices.
pub fn max_edges_small(n: usize) -> Result<usize, GraphError> {
    let classes = enumerate_small_graphs(n)?;
    let mut best = 0;
    for g in &classes {
        if is_udg_small(g)? {
            best = best.max(g.edge_count());
        }
    }
    Ok(best)
}

/// Triangle-chain rigidity: the edge set is exactly the union of triangles,
/// the triangle adjacency graph (sharing an edge) is connected, and every
/// vertex lies in a triangle. A sufficient condition for strong rigidity.
pub fn triangle_chain_rigid(g: &SimpleGraph) -> bool {
    if g.n == 0 {
        return false;
    }
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    for a in 0..g.n {
        for b in a + 1..g.n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..g.n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    triangles.push([a, b, c]);
                }
            }
        }
    }
    if triangles.is_empty() {
        return false;
    }
    // Every edge must lie in a triangle.
    let mut covered = BTreeSet::new();
    for t in &triangles {
        covered.insert(norm_edge(t[0], t[1]));
        covered.insert(norm_edge(t[0], t[2]));
        covered.insert(norm_edge(t[1], t[2]));
    }
    if covered != g.edges {
        return false;
    }
    // Every vertex must lie in a triangle.
    let mut in_tri = vec![false; g.n];
    for t in &triangles {
        for &v in t {
            in_tri[v] = true;
        }
    }
    if !in_tri.iter().all(|&b| b) {
        return false;
    }
    // Triangle graph connectivity (adjacency = shared edge).
    let m = triangles.len();
    let mut visited = vec![false; m];
    let mut stack = vec![0usize];
    visited[0] = true;
    let shares_edge = |s: &[usize; 3], t: &[usize; 3]| {
        s.iter().filter(|v| t.contains(v)).count() >= 2
    };
    while let Some(i) = stack.pop() {
        for j in 0..m {
            if !visited[j] && shares_edge(&triangles[i], &triangles[j]) {
                visited[j] = true;
                stack.push(j);
            }
        }
    }
    visited.iter().all(|&b| b)
}

/// Extracts necessary d-range constraints from cycles with exactly one
/// off-color edge: a cycle of length n with one UNIT edge forces d >= 1/(n-1);
/// one with one D edge forces d <= n-1.
pub fn offcolor_cycle_constraints(
    bg: &BicoloredGraph,
) -> Result<Vec<RangeConstraint>, GraphError> {
    let n = bg.n();
    if n > 12 {
        return Err(GraphError::InputTooLarge(format!(
            "cycle enumeration is limited to 12 vertices, got {n}"
        )));
    }
    let mut out = Vec::new();
    for cycle in enumerate_cycles(bg.base()) {
        let len = cycle.len();
        let mut unit = 0usize;
        let mut dcol = 0usize;
        for i in 0..len {
            match bg.label(cycle[i], cycle[(i + 1) % len]).unwrap() {
                EdgeLabel::Unit => unit += 1,
                EdgeLabel::D => dcol += 1,
            }
        }
        if unit == 1 {
            out.push(RangeConstraint {
                kind: RangeKind::MinD,
                bound: Scalar::one() / Scalar::from_i64((len - 1) as i64),
                witness_cycle: cycle.clone(),
            });
        }
        if dcol == 1 {
            out.push(RangeConstraint {
                kind: RangeKind::MaxD,
                bound: Scalar::from_i64((len - 1) as i64),
                witness_cycle: cycle.clone(),
            });
        }
    }
    Ok(out)
}

/// Enumerates all simple cycles (length >= 3), each exactly once, as vertex
/// sequences starting at their minimum vertex with the second vertex smaller
/// than the last (direction canonicalization). Deterministic order.
fn enumerate_cycles(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut cycles = Vec::new();
    let n = g.n;
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];

    fn dfs(
        g: &SimpleGraph,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for v in g.neighbors(last) {
            if v == start && path.len() >= 3 {
                // Canonical direction: second vertex < last vertex.
                if path[1] < *path.last().unwrap() {
                    cycles.push(path.clone());
                }
            } else if v > start && !on_path[v] {
                path.push(v);
                on_path[v] = true;
                dfs(g, start, path, on_path, cycles);
                on_path[v] = false;
                path.pop();
            }
        }
    }

    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        dfs(g, start, &mut path, &mut on_path, &mut cycles);
        on_path[start] = false;
        path.pop();
    }
    cycles
}

/// Swaps UNIT and D labels; the inverse graph is a (1,1/d)-graph.
pub fn inverse(bg: &BicoloredGraph) -> BicoloredGraph {
    let labels = bg
        .labels
        .iter()
        .map(|(&e, &l)| {
            let flipped = match l {
                EdgeLabel::Unit => EdgeLabel::D,
                EdgeLabel::D => EdgeLabel::Unit,
            };
            (e, flipped)
        })
        .collect();
    BicoloredGraph {
        base: bg.base.clone(),
        labels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embeddings::catalog;

    fn spindle() -> SimpleGraph {
        catalog::catalog("moser-spindle").unwrap().simple().clone()
    }

    #[test]
    fn k4_detection() {
        assert_eq!(contains_k4(&SimpleGraph::complete(4)), Some([0, 1, 2, 3]));
        assert!(contains_k4(&SimpleGraph::cycle(5)).is_none());
        assert!(contains_k4(&spindle()).is_none());
    }

    #[test]
    fn k23_detection() {
        let k23 = SimpleGraph::from_edges(
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        let ([a, b], side) = contains_k23(&k23).unwrap();
        assert_eq!([a, b], [0, 1]);
        assert_eq!(side, [2, 3, 4]);
        assert!(contains_k23(&spindle()).is_none());
        assert!(contains_k23(&SimpleGraph::complete(4)).is_none());
    }

    #[test]
    fn enumeration_class_counts() {
        assert_eq!(enumerate_small_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_small_graphs(2).unwrap().len(), 2);
        assert_eq!(enumerate_small_graphs(3).unwrap().len(), 4);
        assert_eq!(enumerate_small_graphs(4).unwrap().len(), 11);
        assert_eq!(enumerate_small_graphs(5).unwrap().len(), 34);
    }

    #[test]
    fn enumeration_yields_pairwise_nonisomorphic() {
        let classes = enumerate_small_graphs(4).unwrap();
        let canons: Vec<_> = classes
            .iter()
            .map(|g| g.canonical_form().unwrap())
            .collect();
        for i in 0..canons.len() {
            for j in i + 1..canons.len() {
                assert_ne!(canons[i], canons[j]);
            }
        }
    }

    #[test]
    fn udg_small_basics() {
        assert!(!is_udg_small(&SimpleGraph::complete(4)).unwrap());
        assert!(is_udg_small(&SimpleGraph::cycle(5)).unwrap());
        let k23 = SimpleGraph::from_edges(
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        assert!(!is_udg_small(&k23).unwrap());
        assert!(is_udg_small(&SimpleGraph::new(5)).unwrap());
        assert!(matches!(
            is_udg_small(&SimpleGraph::new(6)),
            Err(GraphError::InputTooLarge(_))
        ));
    }

    #[test]
    fn max_edges_match_table_prefix() {
        let expected = [0usize, 1, 3, 5, 7];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(max_edges_small(i + 1).unwrap(), e);
        }
    }

    #[test]
    fn rigidity_cases() {
        assert!(triangle_chain_rigid(&SimpleGraph::complete(3)));
        // Rhombus: two triangles sharing an edge.
        let rhombus =
            SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(triangle_chain_rigid(&rhombus));
        // The spindle's two rhombi share only a vertex, and edge DG lies in
        // no triangle.
        assert!(!triangle_chain_rigid(&spindle()));
        // C5 has no triangles at all.
        assert!(!triangle_chain_rigid(&SimpleGraph::cycle(5)));
    }

    #[test]
    fn rigidity_invariant_under_relabeling() {
        let rhombus =
            SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let relabeled =
            SimpleGraph::from_edges(4, &[(3, 2), (3, 1), (2, 1), (2, 0), (1, 0)]).unwrap();
        assert_eq!(
            triangle_chain_rigid(&rhombus),
            triangle_chain_rigid(&relabeled)
        );
    }

    #[test]
    fn offcolor_triangle_constraints() {
        let tri_1dd = BicoloredGraph::new(
            3,
            &[
                (0, 1, EdgeLabel::Unit),
                (1, 2, EdgeLabel::D),
                (0, 2, EdgeLabel::D),
            ],
        )
        .unwrap();
        let cons = offcolor_cycle_constraints(&tri_1dd).unwrap();
        assert_eq!(cons.len(), 1);
        assert_eq!(cons[0].kind, RangeKind::MinD);
        assert_eq!(cons[0].bound, Scalar::one() / Scalar::from_i64(2));

        let tri_d11 = inverse(&tri_1dd);
        let cons = offcolor_cycle_constraints(&tri_d11).unwrap();
        assert_eq!(cons.len(), 1);
        assert_eq!(cons[0].kind, RangeKind::MaxD);
        assert_eq!(cons[0].bound, Scalar::from_i64(2));
    }

    #[test]
    fn offcolor_square_constraint() {
        let mut edges = vec![(0usize, 1usize, EdgeLabel::D); 0];
        edges.push((0, 1, EdgeLabel::Unit));
        edges.push((1, 2, EdgeLabel::D));
        edges.push((2, 3, EdgeLabel::D));
        edges.push((0, 3, EdgeLabel::D));
        let sq = BicoloredGraph::new(4, &edges).unwrap();
        let cons = offcolor_cycle_constraints(&sq).unwrap();
        assert_eq!(cons.len(), 1);
        assert_eq!(cons[0].kind, RangeKind::MinD);
        assert_eq!(
            cons[0].bound,
            Scalar::one() / Scalar::from_i64(3)
        );
    }

    #[test]
    fn inversion_duality_on_constraints() {
        // MIN_D b of bg corresponds to MAX_D 1/b of inverse(bg).
        let bg = catalog::catalog("one-d-6").unwrap().bicolored().clone();
        let cons = offcolor_cycle_constraints(&bg).unwrap();
        let inv_cons = offcolor_cycle_constraints(&inverse(&bg)).unwrap();
        assert_eq!(cons.len(), inv_cons.len());
        for (c, ic) in cons.iter().zip(&inv_cons) {
            assert_eq!(c.witness_cycle, ic.witness_cycle);
            match (c.kind, ic.kind) {
                (RangeKind::MinD, RangeKind::MaxD) | (RangeKind::MaxD, RangeKind::MinD) => {}
                _ => panic!("kinds must swap under inversion"),
            }
            let product = &c.bound * &ic.bound;
            assert!((product - Scalar::one()).abs() <= Scalar::exp2i(-90));
        }
    }

    #[test]
    fn inverse_involution_and_labels() {
        let tri = BicoloredGraph::new(
            3,
            &[
                (0, 1, EdgeLabel::Unit),
                (1, 2, EdgeLabel::Unit),
                (0, 2, EdgeLabel::Unit),
            ],
        )
        .unwrap();
        let inv = inverse(&tri);
        assert!(inv.labeled_edges().all(|(_, _, l)| l == EdgeLabel::D));
        assert_eq!(inverse(&inv), tri);
        let empty = BicoloredGraph::new(3, &[]).unwrap();
        assert_eq!(inverse(&empty), empty);
    }

    #[test]
    fn json_round_trip() {
        let bg = BicoloredGraph::new(
            3,
            &[
                (0, 1, EdgeLabel::Unit),
                (1, 2, EdgeLabel::D),
            ],
        )
        .unwrap();
        let j = bg.to_json();
        let back = BicoloredGraph::from_json(&j).unwrap();
        assert_eq!(bg, back);
        let g = SimpleGraph::cycle(5);
        assert_eq!(SimpleGraph::from_json(&g.to_json()).unwrap(), g);
    }
}
