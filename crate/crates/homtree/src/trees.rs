//! Free-tree enumeration, star/bistar constructors, and classification
//! of trees of diameter at most three.
//!
//! Enumeration generates canonical level sequences directly: rooted
//! level sequences in the usual successor order, restricted to sequences
//! whose root is the centroid (with the leftmost subtree correction that
//! jumps over non-canonical blocks in one step). Each isomorphism class
//! of free trees on the requested order is produced exactly once, in a
//! deterministic order.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Diameter, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("there are no trees of order 0")]
    ZeroOrder,
    #[error("a star or bistar needs at least one leaf on each center")]
    ZeroLeaves,
    #[error("not a tree: {0}")]
    NotATree(String),
}

/// A connected acyclic graph together with its (finite) diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
    diameter: usize,
}

/// The four kinds of trees of diameter at most three.
///
/// `Star(p)` has `p >= 2` leaves (`p = 1` would be an [`Edge`]);
/// `Bistar(p, q)` is normalized to `p <= q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TreeShape {
    Single,
    Edge,
    Star(usize),
    Bistar(usize, usize),
}

impl TreeShape {
    /// Builds the canonical tree of this shape.
    pub fn build(&self) -> Tree {
        match *self {
            TreeShape::Single => Tree {
                graph: Graph::edgeless(1),
                diameter: 0,
            },
            TreeShape::Edge => make_star(1).expect("p = 1 is valid"),
            TreeShape::Star(p) => make_star(p).expect("stored stars have p >= 2"),
            TreeShape::Bistar(p, q) => make_bistar(p, q).expect("stored bistars have p, q >= 1"),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            TreeShape::Single => 1,
            TreeShape::Edge => 2,
            TreeShape::Star(p) => p + 1,
            TreeShape::Bistar(p, q) => p + q + 2,
        }
    }
}

impl std::fmt::Display for TreeShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            TreeShape::Single => write!(f, "K1"),
            TreeShape::Edge => write!(f, "K2"),
            TreeShape::Star(p) => write!(f, "K(1,{})", p),
            TreeShape::Bistar(p, q) => write!(f, "B({},{})", p, q),
        }
    }
}

impl Tree {
    /// Validates the tree invariant (connected, `|E| = order - 1`) and
    /// records the diameter.
    pub fn from_graph(graph: Graph) -> Result<Tree, TreeError> {
        if graph.order() == 0 {
            return Err(TreeError::ZeroOrder);
        }
        if graph.edge_count() != graph.order() - 1 {
            return Err(TreeError::NotATree(format!(
                "{} vertices need {} edges, found {}",
                graph.order(),
                graph.order() - 1,
                graph.edge_count()
            )));
        }
        match graph.diameter() {
            Diameter::Finite(diameter) => Ok(Tree { graph, diameter }),
            Diameter::Infinite => Err(TreeError::NotATree("not connected".to_string())),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }
}

/// The star `K_{1,p}`: center 0 adjacent to leaves `1..=p`.
pub fn make_star(p: usize) -> Result<Tree, TreeError> {
    if p == 0 {
        return Err(TreeError::ZeroLeaves);
    }
    let graph = Graph::from_edges(p + 1, (1..=p).map(|leaf| (0, leaf)))
        .expect("star edges are valid");
    Ok(Tree {
        graph,
        diameter: if p == 1 { 1 } else { 2 },
    })
}

/// The bistar `B_{p,q}`: adjacent centers 0 and 1 carrying `p` and `q`
/// pendant leaves.
pub fn make_bistar(p: usize, q: usize) -> Result<Tree, TreeError> {
    if p == 0 || q == 0 {
        return Err(TreeError::ZeroLeaves);
    }
    let mut edges = vec![(0, 1)];
    edges.extend((2..p + 2).map(|leaf| (0, leaf)));
    edges.extend((p + 2..p + q + 2).map(|leaf| (1, leaf)));
    let graph = Graph::from_edges(p + q + 2, edges).expect("bistar edges are valid");
    Ok(Tree { graph, diameter: 3 })
}

/// Classifies a tree of diameter at most three; `None` for anything
/// deeper.
pub fn classify_tree(t: &Tree) -> Option<TreeShape> {
    match t.diameter() {
        0 => Some(TreeShape::Single),
        1 => Some(TreeShape::Edge),
        2 => Some(TreeShape::Star(t.order() - 1)),
        3 => {
            let g = t.graph();
            let centers: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 2).collect();
            debug_assert_eq!(centers.len(), 2);
            let p = g.degree(centers[0]) - 1;
            let q = g.degree(centers[1]) - 1;
            Some(TreeShape::Bistar(p.min(q), p.max(q)))
        }
        _ => None,
    }
}

/// One representative per isomorphism class of trees on `order`
/// vertices, in canonical level-sequence order.
pub fn enumerate_trees(order: usize) -> Result<Vec<Tree>, TreeError> {
    if order == 0 {
        return Err(TreeError::ZeroOrder);
    }
    if order == 1 {
        return Ok(vec![Tree {
            graph: Graph::edgeless(1),
            diameter: 0,
        }]);
    }
    let mut out = Vec::new();
    // the path rooted at its centre is the first canonical sequence
    let mut layout: Vec<usize> = (0..=order / 2).collect();
    layout.extend(1..order.div_ceil(2));
    let mut current = Some(layout);
    while let Some(candidate) = current {
        let valid = next_free_tree(candidate);
        out.push(layout_to_tree(&valid));
        current = next_rooted_layout(&valid, None);
    }
    Ok(out)
}

/// Splits a level sequence into the root's leftmost subtree (re-rooted
/// at level 0) and the remainder of the tree with that subtree removed.
fn split_layout(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut second_one = layout.len();
    let mut seen_one = false;
    for (i, &lvl) in layout.iter().enumerate() {
        if lvl == 1 {
            if seen_one {
                second_one = i;
                break;
            }
            seen_one = true;
        }
    }
    let left = layout[1..second_one].iter().map(|&l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[second_one..]);
    (left, rest)
}

/// Successor of a rooted level sequence: truncate at the last vertex of
/// level above one (or at `at` when given) and tile the tail with copies
/// of the segment starting at that vertex's parent. `None` once the star
/// is reached.
fn next_rooted_layout(layout: &[usize], at: Option<usize>) -> Option<Vec<usize>> {
    let p = match at {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
                if p == 0 {
                    return None;
                }
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    let mut result = layout.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Takes a rooted candidate to the nearest canonical free-tree sequence:
/// the candidate itself when its leftmost subtree is no taller, no
/// larger, and lexicographically no later than the rest; otherwise the
/// jump past the whole non-canonical block.
fn next_free_tree(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split_layout(&candidate);
    let left_height = *left.iter().max().expect("root has a child for order >= 2");
    let rest_height = *rest.iter().max().expect("rest contains the root");
    let valid = match rest_height.cmp(&left_height) {
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Equal => match left.len().cmp(&rest.len()) {
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Equal => left <= rest,
        },
    };
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut jumped =
        next_rooted_layout(&candidate, Some(p)).expect("jump index is positive");
    if candidate[p] > 2 {
        let (new_left, _) = split_layout(&jumped);
        let height = *new_left.iter().max().expect("left subtree is nonempty");
        let n = jumped.len();
        for (k, lvl) in (1..=height + 1).enumerate() {
            jumped[n - height - 1 + k] = lvl;
        }
    }
    jumped
}

/// Decodes a preorder level sequence (root at level 0) into a tree.
fn layout_to_tree(layout: &[usize]) -> Tree {
    let n = layout.len();
    let mut last_at_level = vec![0usize; n + 1];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut diameter_hint = 0;
    for (i, &lvl) in layout.iter().enumerate().skip(1) {
        edges.push((last_at_level[lvl - 1], i));
        last_at_level[lvl] = i;
        diameter_hint = diameter_hint.max(lvl);
    }
    let graph = Graph::from_edges(n, edges).expect("level sequence edges are valid");
    Tree::from_graph(graph).expect("level sequence decodes to a tree")
}

/// Multiset of shapes of the induced subtrees of diameter at most three
/// of `t`, one entry per connected vertex subset whose induced subgraph
/// has diameter at most three.
///
/// Connected subsets are enumerated once each: every subset is grown
/// from its minimal vertex, extending only through vertices above that
/// root, with newly reachable vertices added to the frontier exactly at
/// the step that first exposes them.
pub fn induced_diam3_subtrees(t: &Tree) -> BTreeMap<TreeShape, u64> {
    let g = t.graph();
    let n = g.order();
    assert!(n <= 64, "subtree enumeration uses 64-bit vertex masks");
    let mut adj = vec![0u64; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }

    let mut shapes: BTreeMap<TreeShape, u64> = BTreeMap::new();
    let mut record = |subset: u64| {
        if let Some(shape) = classify_subtree_mask(subset, &adj) {
            *shapes.entry(shape).or_insert(0) += 1;
        }
    };

    for root in 0..n {
        let above = u64::MAX.checked_shl(root as u32 + 1).unwrap_or(0);
        let subset = 1u64 << root;
        let frontier = adj[root] & above;
        grow_connected(subset, frontier, adj[root], above, &adj, &mut record);
    }
    shapes
}

fn grow_connected(
    subset: u64,
    frontier: u64,
    seen_nbhd: u64,
    above: u64,
    adj: &[u64],
    record: &mut impl FnMut(u64),
) {
    record(subset);
    let mut rest = frontier;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let fresh = adj[w] & above & !subset & !seen_nbhd;
        grow_connected(
            subset | (1 << w),
            rest | fresh,
            seen_nbhd | adj[w],
            above,
            adj,
            record,
        );
    }
}

/// Shape of the subtree induced by `subset`, or `None` when its diameter
/// exceeds three. A subtree has diameter at most three exactly when it
/// has at most two internal vertices (degree two or more within the
/// subset); two internal vertices are necessarily adjacent.
fn classify_subtree_mask(subset: u64, adj: &[u64]) -> Option<TreeShape> {
    let k = subset.count_ones();
    if k == 1 {
        return Some(TreeShape::Single);
    }
    if k == 2 {
        return Some(TreeShape::Edge);
    }
    let mut internal_degrees = Vec::with_capacity(2);
    let mut rest = subset;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & subset).count_ones() as usize;
        if d >= 2 {
            if internal_degrees.len() == 2 {
                return None;
            }
            internal_degrees.push(d);
        }
    }
    match internal_degrees.as_slice() {
        [_] => Some(TreeShape::Star(k as usize - 1)),
        [a, b] => Some(TreeShape::Bistar((a - 1).min(b - 1), (a - 1).max(b - 1))),
        _ => unreachable!("a connected subset on >= 3 vertices has an internal vertex"),
    }
}
