//! Immutable simple undirected graphs over dense 0-based vertex indices.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge ({0},{0}) is not allowed")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not connected")]
    NotConnected,
    #[error("operation requires order >= {required}, got {got}")]
    OrderTooSmall { required: usize, got: usize },
    #[error("not a valid bipartition of the graph: {0}")]
    InvalidBipartition(String),
    #[error("graph of order {0} exceeds the supported limit of {1} vertices")]
    TooLarge(usize, usize),
}

/// An immutable simple undirected graph: a vertex count and, for each
/// vertex, a sorted list of its neighbours.
///
/// Invariants (established at construction, relied on everywhere):
/// no self-loops, symmetric adjacency, all indices below the order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

/// The two colour classes of a bipartite graph. Every edge has one
/// endpoint in `x_side` and one in `y_side`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub x_side: Vec<usize>,
    pub y_side: Vec<usize>,
}

/// The ordered pair `(m, n)` with `m <= n` of part sizes of a connected
/// bipartite graph on at least two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SizeParameter {
    pub m: usize,
    pub n: usize,
}

impl SizeParameter {
    pub fn new(a: usize, b: usize) -> Self {
        SizeParameter {
            m: a.min(b),
            n: a.max(b),
        }
    }

    /// Difference `n - m` between the part sizes.
    pub fn difference(&self) -> usize {
        self.n - self.m
    }
}

/// Distances and diameters, which are infinite on disconnected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{}", d),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

/// Counts of independent sets grouped by type `(|A ∩ X|, |A ∩ Y|)` with
/// respect to a fixed bipartition. The empty set contributes to type
/// `(0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSetCensus {
    pub counts: BTreeMap<(usize, usize), u64>,
}

impl IndependentSetCensus {
    /// Total number of independent sets, the empty set included.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

impl Graph {
    /// Builds a graph from an explicit order and edge list. Symmetric
    /// duplicates are collapsed; loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); order];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Ok(Graph { adjacency })
    }

    /// The edgeless graph on `order` vertices.
    pub fn edgeless(order: usize) -> Graph {
        Graph {
            adjacency: vec![Vec::new(); order],
        }
    }

    /// The complete bipartite graph `K_{m,n}` with left part `0..m` and
    /// right part `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
        Graph::from_edges(m + n, edges).expect("complete bipartite edges are valid")
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographically
    /// sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// Disjoint union; the second graph's indices are shifted by
    /// `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|nbrs| nbrs.iter().map(|&v| v + shift).collect()),
        );
        Graph { adjacency }
    }

    /// Connected components in order of their smallest original vertex,
    /// each with the mapping from the component's vertices back to the
    /// vertices of `self`.
    pub fn connected_components(&self) -> Vec<(Graph, Vec<usize>)> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut verts = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                verts.push(u);
                for &v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            verts.sort_unstable();
            let sub = self
                .induced_subgraph(&verts)
                .expect("component vertices are in range");
            out.push((sub, verts));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.connected_components().len() == 1
    }

    /// Two-colours the graph by BFS. Returns `None` when an odd cycle
    /// makes this impossible. Within each component the side containing
    /// the component's smallest vertex goes to `x_side`, which makes the
    /// output deterministic.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.order();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(true);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &v in self.neighbors(u) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) => {
                            if cv == cu {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        let mut x_side = Vec::new();
        let mut y_side = Vec::new();
        for (v, c) in colour.iter().enumerate() {
            if c.unwrap() {
                x_side.push(v);
            } else {
                y_side.push(v);
            }
        }
        Some(Bipartition { x_side, y_side })
    }

    /// Size parameter of a connected bipartite graph on at least two
    /// vertices.
    pub fn size_parameter(&self) -> Result<SizeParameter, GraphError> {
        if self.order() < 2 {
            return Err(GraphError::OrderTooSmall {
                required: 2,
                got: self.order(),
            });
        }
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let b = self.bipartition().ok_or(GraphError::NotBipartite)?;
        Ok(SizeParameter::new(b.x_side.len(), b.y_side.len()))
    }

    /// Union of the neighbourhoods of the vertices in `s`, as a sorted
    /// vertex list. May intersect `s` in non-bipartite graphs.
    pub fn neighborhood(&self, s: &[usize]) -> Result<Vec<usize>, GraphError> {
        let mut mark = vec![false; self.order()];
        for &v in s {
            self.check_vertex(v)?;
            for &w in self.neighbors(v) {
                mark[w] = true;
            }
        }
        Ok((0..self.order()).filter(|&w| mark[w]).collect())
    }

    fn bfs_distances(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Maximum over vertex pairs of the shortest-path length; infinite
    /// for disconnected graphs and 0 for a single vertex.
    pub fn diameter(&self) -> Diameter {
        let n = self.order();
        if n == 0 {
            return Diameter::Infinite;
        }
        let mut best = 0usize;
        for start in 0..n {
            for d in self.bfs_distances(start) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Subgraph induced by `s`. The vertices of `s` are reindexed in
    /// ascending order.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Graph, GraphError> {
        let mut verts: Vec<usize> = s.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in verts.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut adjacency = vec![Vec::new(); verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            for &w in self.neighbors(v) {
                if index[w] != usize::MAX {
                    adjacency[i].push(index[w]);
                }
            }
        }
        // neighbor lists inherit sortedness from the ascending reindexing
        Ok(Graph { adjacency })
    }

    /// Searches for an isomorphism onto `other`, returning the witness
    /// vertex bijection when one exists.
    ///
    /// Candidate classes are first narrowed by iterated degree
    /// refinement (each round replaces a vertex's colour by the multiset
    /// of its neighbours' colours); backtracking then runs inside the
    /// stable colour classes.
    pub fn find_isomorphism(&self, other: &Graph) -> Option<Vec<usize>> {
        let n = self.order();
        if n != other.order() || self.edge_count() != other.edge_count() {
            return None;
        }
        if n == 0 {
            return Some(Vec::new());
        }

        let (cols_g, cols_h) = joint_refinement(self, other)?;

        // order source vertices by ascending colour-class size, then colour
        let mut class_size: BTreeMap<u64, usize> = BTreeMap::new();
        for &c in &cols_g {
            *class_size.entry(c).or_insert(0) += 1;
        }
        let mut order_vs: Vec<usize> = (0..n).collect();
        order_vs.sort_by_key(|&v| (class_size[&cols_g[v]], cols_g[v], v));

        let mut mapping = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if assign_iso(
            self, other, &cols_g, &cols_h, &order_vs, 0, &mut mapping, &mut used,
        ) {
            debug_assert!(verify_isomorphism(self, other, &mapping));
            Some(mapping)
        } else {
            None
        }
    }

    /// Counts independent sets by type with respect to `b`. Enumeration
    /// is a vertex-by-vertex backtracking that prunes as soon as a chosen
    /// vertex would see a chosen neighbour.
    pub fn independent_set_census(
        &self,
        b: &Bipartition,
    ) -> Result<IndependentSetCensus, GraphError> {
        let n = self.order();
        if n > 64 {
            return Err(GraphError::TooLarge(n, 64));
        }
        self.validate_bipartition(b)?;

        let mut adj_mask = vec![0u64; n];
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            for &w in nbrs {
                adj_mask[v] |= 1u64 << w;
            }
        }
        let mut x_mask = 0u64;
        for &v in &b.x_side {
            x_mask |= 1u64 << v;
        }

        let mut counts = BTreeMap::new();
        let mut stack = vec![(0usize, 0u64)];
        while let Some((next, chosen)) = stack.pop() {
            if next == n {
                let tx = (chosen & x_mask).count_ones() as usize;
                let ty = (chosen & !x_mask).count_ones() as usize;
                *counts.entry((tx, ty)).or_insert(0u64) += 1;
                continue;
            }
            stack.push((next + 1, chosen));
            if chosen & adj_mask[next] == 0 {
                stack.push((next + 1, chosen | (1u64 << next)));
            }
        }
        Ok(IndependentSetCensus { counts })
    }

    /// Checks that `b` partitions the vertex set and that every edge
    /// crosses between the sides.
    pub fn validate_bipartition(&self, b: &Bipartition) -> Result<(), GraphError> {
        let n = self.order();
        let mut side = vec![None; n];
        for &v in &b.x_side {
            self.check_vertex(v)?;
            side[v] = Some(true);
        }
        for &v in &b.y_side {
            self.check_vertex(v)?;
            if side[v].is_some() {
                return Err(GraphError::InvalidBipartition(format!(
                    "vertex {} appears on both sides",
                    v
                )));
            }
            side[v] = Some(false);
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return Err(GraphError::InvalidBipartition(format!(
                "vertex {} is on neither side",
                v
            )));
        }
        for (u, v) in self.edges() {
            if side[u] == side[v] {
                return Err(GraphError::InvalidBipartition(format!(
                    "edge ({},{}) does not cross the sides",
                    u, v
                )));
            }
        }
        Ok(())
    }
}

/// Iterated degree refinement run jointly over both graphs so colour
/// identifiers are comparable. Returns `None` as soon as the colour
/// class sizes of the two graphs disagree.
fn joint_refinement(g: &Graph, h: &Graph) -> Option<(Vec<u64>, Vec<u64>)> {
    let n = g.order();
    let mut cols_g: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let mut cols_h: Vec<u64> = (0..n).map(|v| h.degree(v) as u64).collect();
    loop {
        if !class_sizes_match(&cols_g, &cols_h) {
            return None;
        }
        let sig = |graph: &Graph, cols: &[u64], v: usize| {
            let mut nbr: Vec<u64> = graph.neighbors(v).iter().map(|&w| cols[w]).collect();
            nbr.sort_unstable();
            (cols[v], nbr)
        };
        let mut palette: BTreeMap<(u64, Vec<u64>), u64> = BTreeMap::new();
        let mut next_g = Vec::with_capacity(n);
        let mut next_h = Vec::with_capacity(n);
        for v in 0..n {
            let s = sig(g, &cols_g, v);
            let fresh = palette.len() as u64;
            next_g.push(*palette.entry(s).or_insert(fresh));
        }
        for v in 0..n {
            let s = sig(h, &cols_h, v);
            let fresh = palette.len() as u64;
            next_h.push(*palette.entry(s).or_insert(fresh));
        }
        let stable = count_classes(&next_g) == count_classes(&cols_g)
            && count_classes(&next_h) == count_classes(&cols_h);
        cols_g = next_g;
        cols_h = next_h;
        if stable {
            if !class_sizes_match(&cols_g, &cols_h) {
                return None;
            }
            return Some((cols_g, cols_h));
        }
    }
}

fn count_classes(cols: &[u64]) -> usize {
    let mut sorted = cols.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

fn class_sizes_match(a: &[u64], b: &[u64]) -> bool {
    let histogram = |cols: &[u64]| {
        let mut m: BTreeMap<u64, usize> = BTreeMap::new();
        for &c in cols {
            *m.entry(c).or_insert(0) += 1;
        }
        m
    };
    histogram(a) == histogram(b)
}

#[allow(clippy::too_many_arguments)]
fn assign_iso(
    g: &Graph,
    h: &Graph,
    cols_g: &[u64],
    cols_h: &[u64],
    order_vs: &[usize],
    depth: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order_vs.len() {
        return true;
    }
    let v = order_vs[depth];
    'candidates: for t in 0..h.order() {
        if used[t] || cols_h[t] != cols_g[v] {
            continue;
        }
        for &u in &order_vs[..depth] {
            if g.has_edge(v, u) != h.has_edge(t, mapping[u]) {
                continue 'candidates;
            }
        }
        mapping[v] = t;
        used[t] = true;
        if assign_iso(g, h, cols_g, cols_h, order_vs, depth + 1, mapping, used) {
            return true;
        }
        used[t] = false;
        mapping[v] = usize::MAX;
    }
    false
}

fn verify_isomorphism(g: &Graph, h: &Graph, mapping: &[usize]) -> bool {
    let n = g.order();
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) != h.has_edge(mapping[u], mapping[v]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn build_rejects_loops_and_bad_indices() {
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]),
            Err(GraphError::LoopEdge(1))
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, order: 2 })
        );
    }

    #[test]
    fn build_collapses_symmetric_duplicates() {
        let g = Graph::from_edges(4, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn disjoint_union_shifts_indices() {
        let k2 = path(2);
        let u = k2.disjoint_union(&k2);
        assert_eq!(u.order(), 4);
        assert_eq!(u.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(u.connected_components().len(), 2);
    }

    #[test]
    fn components_of_edgeless_graph() {
        let comps = Graph::edgeless(3).connected_components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[1].1, vec![1]);
    }

    #[test]
    fn component_mappings_cover_vertices() {
        let g = path(2).disjoint_union(&cycle(3));
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        let mut all: Vec<usize> = comps.iter().flat_map(|(_, m)| m.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, (0..5).collect::<Vec<_>>());
        assert!(comps[0].0.find_isomorphism(&path(2)).is_some());
        assert!(comps[1].0.find_isomorphism(&cycle(3)).is_some());
    }

    #[test]
    fn bipartition_of_even_and_odd_cycles() {
        assert!(cycle(4).bipartition().is_some());
        assert!(cycle(3).bipartition().is_none());
        assert!(cycle(5).bipartition().is_none());
    }

    #[test]
    fn bipartition_side_assignment_is_deterministic() {
        let b = path(2).bipartition().unwrap();
        assert_eq!(b.x_side, vec![0]);
        assert_eq!(b.y_side, vec![1]);

        // two components, each contributes the side of its smallest vertex
        let g = path(2).disjoint_union(&path(3));
        let b = g.bipartition().unwrap();
        assert_eq!(b.x_side, vec![0, 2, 4]);
        assert_eq!(b.y_side, vec![1, 3]);
    }

    #[test]
    fn size_parameter_basics() {
        assert_eq!(path(2).size_parameter().unwrap(), SizeParameter::new(1, 1));
        assert_eq!(
            Graph::complete_bipartite(2, 3).size_parameter().unwrap(),
            SizeParameter::new(2, 3)
        );
        assert_eq!(
            cycle(3).size_parameter(),
            Err(GraphError::NotBipartite)
        );
        assert_eq!(
            path(2).disjoint_union(&path(2)).size_parameter(),
            Err(GraphError::NotConnected)
        );
        assert_eq!(
            Graph::edgeless(1).size_parameter(),
            Err(GraphError::OrderTooSmall { required: 2, got: 1 })
        );
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(path(2).neighborhood(&[0]).unwrap(), vec![1]);
        let k23 = Graph::complete_bipartite(2, 3);
        assert_eq!(k23.neighborhood(&[0, 1]).unwrap(), vec![2, 3, 4]);
        assert!(path(2).neighborhood(&[7]).is_err());
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(
            Graph::complete_bipartite(2, 2).diameter(),
            Diameter::Finite(2)
        );
        assert_eq!(path(4).diameter(), Diameter::Finite(3));
        assert_eq!(Graph::edgeless(1).diameter(), Diameter::Finite(0));
        assert_eq!(
            path(2).disjoint_union(&path(2)).diameter(),
            Diameter::Infinite
        );
    }

    #[test]
    fn induced_subgraph_reindexes() {
        let k3 = cycle(3);
        let sub = k3.induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(sub.order(), 2);
        assert_eq!(sub.edges(), vec![(0, 1)]);
        assert!(k3.induced_subgraph(&[0, 3]).is_err());
    }

    #[test]
    fn isomorphism_finds_witness_under_relabelling() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        // relabel by v -> (2v + 1) mod 5
        let relabel = |v: usize| (2 * v + 1) % 5;
        let h = Graph::from_edges(
            5,
            g.edges().iter().map(|&(u, v)| (relabel(u), relabel(v))),
        )
        .unwrap();
        let w = g.find_isomorphism(&h).expect("must be isomorphic");
        assert!(verify_isomorphism(&g, &h, &w));
    }

    #[test]
    fn isomorphism_distinguishes_path_and_star() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(path(4).find_isomorphism(&star).is_none());
        assert!(star.find_isomorphism(&star).is_some());
    }

    #[test]
    fn isomorphism_agrees_with_exhaustive_search_on_small_graphs() {
        // deterministic bit-twiddled corpus of graphs on up to 6 vertices
        let mut graphs = Vec::new();
        for n in [4usize, 5, 6] {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
            for seed in [0x9e37u64, 0x1234, 0xbeef, 0x5a5a, 0x0f0f] {
                let mut x = seed.wrapping_mul(n as u64 + 1);
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| {
                        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        (x >> (i % 31)) & 1 == 1
                    })
                    .map(|(_, &e)| e)
                    .collect();
                graphs.push(Graph::from_edges(n, edges).unwrap());
            }
        }
        for g in &graphs {
            for h in &graphs {
                if g.order() != h.order() {
                    continue;
                }
                let fast = g.find_isomorphism(h).is_some();
                let slow = exhaustive_isomorphic(g, h);
                assert_eq!(fast, slow, "disagreement on {:?} vs {:?}", g, h);
            }
        }
    }

    fn exhaustive_isomorphic(g: &Graph, h: &Graph) -> bool {
        let n = g.order();
        if n != h.order() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if verify_isomorphism(g, h, &perm) {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn census_of_single_edge() {
        let k2 = path(2);
        let b = k2.bipartition().unwrap();
        let census = k2.independent_set_census(&b).unwrap();
        let expect: BTreeMap<(usize, usize), u64> =
            [((0, 0), 1), ((1, 0), 1), ((0, 1), 1)].into_iter().collect();
        assert_eq!(census.counts, expect);
        assert_eq!(census.total(), 3);
    }

    #[test]
    fn census_total_matches_subset_enumeration() {
        let g = cycle(6);
        let b = g.bipartition().unwrap();
        let census = g.independent_set_census(&b).unwrap();
        let mut brute = 0u64;
        for mask in 0u32..(1 << 6) {
            let verts: Vec<usize> = (0..6).filter(|&v| mask >> v & 1 == 1).collect();
            let independent = verts
                .iter()
                .all(|&u| verts.iter().all(|&v| u == v || !g.has_edge(u, v)));
            if independent {
                brute += 1;
            }
        }
        assert_eq!(census.total(), brute);
    }

    #[test]
    fn census_rejects_invalid_bipartition() {
        let k2 = path(2);
        let bad = Bipartition {
            x_side: vec![0, 1],
            y_side: vec![],
        };
        assert!(matches!(
            k2.independent_set_census(&bad),
            Err(GraphError::InvalidBipartition(_))
        ));
    }

    #[test]
    fn bipartition_agrees_with_exhaustive_odd_cycle_check() {
        for n in 1..=6usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
            let m = pairs.len();
            for mask in 0u32..(1u32 << m) {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::from_edges(n, edges).unwrap();
                let two_colourable = g.bipartition().is_some();
                assert_eq!(two_colourable, !has_odd_cycle(&g));
            }
            if n >= 5 {
                break; // 2^10 masks at n=5 is plenty
            }
        }
    }

    fn has_odd_cycle(g: &Graph) -> bool {
        // exhaustive: look for a closed walk of odd length <= order via
        // adjacency-matrix powers over booleans
        let n = g.order();
        let mut reach_odd = vec![vec![false; n]; n];
        let mut cur = vec![vec![false; n]; n];
        for u in 0..n {
            for &v in g.neighbors(u) {
                cur[u][v] = true;
            }
        }
        for step in 1..=(2 * n + 1) {
            if step % 2 == 1 {
                for u in 0..n {
                    for v in 0..n {
                        if cur[u][v] {
                            reach_odd[u][v] = true;
                        }
                    }
                }
            }
            let mut next = vec![vec![false; n]; n];
            for u in 0..n {
                for v in 0..n {
                    if cur[u][v] {
                        for &w in g.neighbors(v) {
                            next[u][w] = true;
                        }
                    }
                }
            }
            cur = next;
        }
        (0..n).any(|u| reach_odd[u][u])
    }
}
