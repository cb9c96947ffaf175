//! Generators and exhaustive enumerators for the digraph families:
//! directed paths and cycles, symmetric digraphs of graphs, oriented trees
//! `T(n)` and unicyclic digraphs `U(n)`.
//!
//! `U(n)` is taken to be the oriented digraphs with `n` arcs whose
//! underlying simple graph is connected and has exactly one cycle (length at
//! least 3). The cycle is not required to be consistently directed unless
//! [`UnicyclicVariant::DirectedCycle`] is requested.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::digraph::{canonical_form, CanonicalForm, Digraph};
use crate::error::{Error, Result};

/// Largest tree order enumerated without `force`.
pub const MAX_TREE_ORDER: usize = 8;
/// Largest unicyclic order enumerated without `force`.
pub const MAX_UNICYCLIC_ORDER: usize = 7;
/// Largest order for the all-graphs symmetric family without `force`.
pub const MAX_SYMMETRIC_ORDER: usize = 6;

pub type Edge = (usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    DirectedPath,
    DirectedCycle,
    OrientedTrees,
    Unicyclic,
    SymmetricOfGraph,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::DirectedPath => "directed_path",
            Family::DirectedCycle => "directed_cycle",
            Family::OrientedTrees => "oriented_trees",
            Family::Unicyclic => "unicyclic",
            Family::SymmetricOfGraph => "symmetric_of_graph",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnicyclicVariant {
    /// Any orientation of the cycle.
    #[default]
    AnyOrientation,
    /// Only digraphs whose cycle is a directed cycle.
    DirectedCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub dedupe: bool,
}

/// Flags shared by the exhaustive enumerators.
#[derive(Debug, Clone, Copy, Default)]
pub struct EnumOptions {
    /// Keep only the first member of each isomorphism class.
    pub dedupe: bool,
    /// Skip the order guard.
    pub force: bool,
}

pub type DigraphStream = Box<dyn Iterator<Item = Digraph> + Send>;

impl FamilySpec {
    /// Every member of the family at this order, in a fixed order.
    pub fn enumerate(&self, force: bool) -> Result<DigraphStream> {
        let opts = EnumOptions { dedupe: self.dedupe, force };
        match self.family {
            Family::DirectedPath => Ok(Box::new(std::iter::once(directed_path(self.n)?))),
            Family::DirectedCycle => Ok(Box::new(std::iter::once(directed_cycle(self.n, false)?))),
            Family::OrientedTrees => enumerate_oriented_trees(self.n, opts),
            Family::Unicyclic => enumerate_unicyclic(self.n, UnicyclicVariant::AnyOrientation, opts),
            Family::SymmetricOfGraph => enumerate_symmetric(self.n, opts),
        }
    }
}

/// `P_n`: arcs `i → i+1`.
pub fn directed_path(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::input("a directed path needs at least one vertex"));
    }
    Ok(Digraph::from_valid_arcs(n, (1..n).map(|i| (i - 1, i)).collect()))
}

/// `C_n`: arcs `i → (i+1) mod n`. `n = 2` gives a symmetric pair and is only
/// accepted with `allow_digon`.
pub fn directed_cycle(n: usize, allow_digon: bool) -> Result<Digraph> {
    if n < 2 || (n == 2 && !allow_digon) {
        return Err(Error::input(format!(
            "a directed cycle needs at least 3 vertices (2 with the digon flag), got {n}"
        )));
    }
    Ok(Digraph::from_valid_arcs(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

/// Each edge `{u, v}` becomes the pair `u → v`, `v → u`.
pub fn symmetric_digraph(n: usize, edges: &[Edge]) -> Result<Digraph> {
    let mut seen = HashSet::new();
    let mut arcs = Vec::with_capacity(2 * edges.len());
    for &(u, v) in edges {
        if u == v {
            return Err(Error::input(format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::input(format!("edge {{{u}, {v}}} outside 0..{n}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::input(format!("duplicate edge {{{u}, {v}}}")));
        }
        arcs.push((u, v));
        arcs.push((v, u));
    }
    Ok(Digraph::from_valid_arcs(n, arcs))
}

/// Decodes a Prüfer sequence into the edges of a labelled tree on `n` vertices.
///
/// Edges come out as `(min, max)` pairs in decoding order.
pub fn labeled_tree_from_pruefer(seq: &[usize], n: usize) -> Result<Vec<Edge>> {
    if n < 2 {
        return Err(Error::input("Prüfer sequences describe trees with at least 2 vertices"));
    }
    if seq.len() != n - 2 {
        return Err(Error::input(format!("Prüfer sequence for n = {n} must have length {}, got {}", n - 2, seq.len())));
    }
    if let Some(&bad) = seq.iter().find(|&&s| s >= n) {
        return Err(Error::input(format!("Prüfer entry {bad} outside 0..{n}")));
    }
    Ok(decode_pruefer(seq, n))
}

fn decode_pruefer(seq: &[usize], n: usize) -> Vec<Edge> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Linear-time decoding with a moving pointer to the smallest leaf.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf.min(s), leaf.max(s)));
        degree[s] -= 1;
        degree[leaf] = 0;
        if s < ptr && degree[s] == 1 {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    let last = (0..n).rev().find(|&w| degree[w] == 1 && w != leaf).unwrap_or(n - 1);
    edges.push((leaf.min(last), leaf.max(last)));
    edges
}

/// Encodes a labelled tree back to its Prüfer sequence.
pub fn pruefer_from_tree(edges: &[Edge], n: usize) -> Result<Vec<usize>> {
    if n < 2 || edges.len() != n - 1 {
        return Err(Error::input("a tree on n vertices has n − 1 edges"));
    }
    let mut adj: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n || u == v || !adj[u].insert(v) {
            return Err(Error::input(format!("bad tree edge {{{u}, {v}}}")));
        }
        adj[v].insert(u);
    }
    let tree = Digraph::from_valid_arcs(n, edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect());
    if !tree.is_weakly_connected() {
        return Err(Error::input("edges do not form a tree"));
    }
    let mut seq = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let leaf = (0..n).find(|&w| adj[w].len() == 1).expect("trees have leaves");
        let parent = *adj[leaf].iter().next().unwrap();
        seq.push(parent);
        adj[leaf].clear();
        adj[parent].remove(&leaf);
    }
    Ok(seq)
}

/// The `index`-th Prüfer sequence for order `n` in lexicographic order.
pub fn pruefer_sequence(n: usize, mut index: usize) -> Vec<usize> {
    let len = n.saturating_sub(2);
    let mut seq = vec![0; len];
    for slot in seq.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    seq
}

/// `n^(n−2)`, the number of labelled trees.
pub fn labeled_tree_count(n: usize) -> usize {
    if n < 2 {
        return 1;
    }
    n.pow((n - 2) as u32)
}

/// All `2^|edges|` orientations of an edge list; bit `i` of the mask reverses edge `i`.
pub fn orientations(n: usize, edges: &[Edge]) -> impl Iterator<Item = Digraph> + '_ {
    (0u64..(1u64 << edges.len())).map(move |mask| {
        let arcs =
            edges.iter().enumerate().map(|(i, &(a, b))| if mask >> i & 1 == 0 { (a, b) } else { (b, a) }).collect();
        Digraph::from_valid_arcs(n, arcs)
    })
}

/// Underlying tree of the partition with the given Prüfer index.
pub fn tree_shape(n: usize, index: usize) -> Vec<Edge> {
    if n == 1 {
        return Vec::new();
    }
    decode_pruefer(&pruefer_sequence(n, index), n)
}

fn check_tree_order(n: usize, force: bool) -> Result<()> {
    if n == 0 || (!force && n > MAX_TREE_ORDER) {
        return Err(Error::input(format!(
            "oriented tree enumeration supports 1 ≤ n ≤ {MAX_TREE_ORDER} (force to exceed), got {n}"
        )));
    }
    Ok(())
}

fn check_unicyclic_order(n: usize, force: bool) -> Result<()> {
    if n < 3 || (!force && n > MAX_UNICYCLIC_ORDER) {
        return Err(Error::input(format!(
            "unicyclic enumeration supports 3 ≤ n ≤ {MAX_UNICYCLIC_ORDER} (force to exceed), got {n}"
        )));
    }
    Ok(())
}

/// Number of tree partitions (Prüfer sequences) after the guard.
pub fn tree_partition_count(n: usize, force: bool) -> Result<usize> {
    check_tree_order(n, force)?;
    Ok(labeled_tree_count(n))
}

/// All labelled oriented trees on `n` vertices: each of the `n^(n−2)` trees in
/// Prüfer order, each with all `2^(n−1)` orientations.
pub fn enumerate_oriented_trees(n: usize, opts: EnumOptions) -> Result<DigraphStream> {
    check_tree_order(n, opts.force)?;
    let stream = (0..labeled_tree_count(n)).flat_map(move |i| orientations(n, &tree_shape(n, i)).collect::<Vec<_>>());
    Ok(maybe_dedupe(stream, opts.dedupe))
}

fn is_connected(n: usize, edges: &[Edge]) -> bool {
    Digraph::from_valid_arcs(n, edges.to_vec()).is_weakly_connected()
}

/// Every labelled connected graph on `n` vertices with `n` edges, as
/// `(min, max)` edge lists in lexicographic combination order.
pub fn labeled_unicyclic_graphs(n: usize, force: bool) -> Result<Vec<Vec<Edge>>> {
    check_unicyclic_order(n, force)?;
    let pairs: Vec<Edge> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..n).collect();
    let k = n;
    loop {
        let edges: Vec<Edge> = pick.iter().map(|&i| pairs[i]).collect();
        if is_connected(n, &edges) {
            out.push(edges);
        }
        // Advance to the next k-combination of pair indices.
        let mut i = k;
        while i > 0 && pick[i - 1] == pairs.len() - k + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        pick[i - 1] += 1;
        for j in i..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
    Ok(out)
}

/// Vertices on the unique cycle of a connected unicyclic graph (its 2-core).
pub fn cycle_vertices(n: usize, edges: &[Edge]) -> Vec<usize> {
    let mut degree = vec![0usize; n];
    for &(u, v) in edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&w| degree[w] <= 1).collect();
    while let Some(w) = stack.pop() {
        if removed[w] {
            continue;
        }
        removed[w] = true;
        for &(a, b) in edges {
            let other = if a == w {
                b
            } else if b == w {
                a
            } else {
                continue;
            };
            if !removed[other] {
                degree[other] -= 1;
                if degree[other] == 1 {
                    stack.push(other);
                }
            }
        }
    }
    (0..n).filter(|&w| !removed[w]).collect()
}

/// True iff the arcs among the cycle vertices form a directed cycle.
pub fn has_directed_cycle(d: &Digraph) -> bool {
    let core = cycle_vertices(d.order(), &d.underlying_edges());
    if core.is_empty() {
        return false;
    }
    let on = |w: usize| core.binary_search(&w).is_ok();
    let mut outs = vec![0usize; d.order()];
    let mut ins = vec![0usize; d.order()];
    for &(u, v) in d.arcs() {
        if on(u) && on(v) {
            outs[u] += 1;
            ins[v] += 1;
        }
    }
    core.iter().all(|&w| outs[w] == 1 && ins[w] == 1)
}

/// All labelled unicyclic digraphs on `n` vertices, graph by graph, each graph
/// with all `2^n` orientations.
pub fn enumerate_unicyclic(n: usize, variant: UnicyclicVariant, opts: EnumOptions) -> Result<DigraphStream> {
    let graphs = labeled_unicyclic_graphs(n, opts.force)?;
    let stream = graphs
        .into_iter()
        .flat_map(move |edges| orientations(n, &edges).collect::<Vec<_>>())
        .filter(move |d| variant == UnicyclicVariant::AnyOrientation || has_directed_cycle(d));
    Ok(maybe_dedupe(stream, opts.dedupe))
}

/// Symmetric digraphs of every labelled simple graph on `n` vertices.
pub fn enumerate_symmetric(n: usize, opts: EnumOptions) -> Result<DigraphStream> {
    if !opts.force && n > MAX_SYMMETRIC_ORDER {
        return Err(Error::input(format!(
            "symmetric enumeration supports n ≤ {MAX_SYMMETRIC_ORDER} (force to exceed), got {n}"
        )));
    }
    let pairs: Vec<Edge> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    let stream = (0u64..(1u64 << pairs.len())).map(move |mask| {
        let edges: Vec<Edge> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        symmetric_digraph(n, &edges).expect("pairs are distinct")
    });
    Ok(maybe_dedupe(stream, opts.dedupe))
}

fn maybe_dedupe(stream: impl Iterator<Item = Digraph> + Send + 'static, dedupe: bool) -> DigraphStream {
    if !dedupe {
        return Box::new(stream);
    }
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    Box::new(stream.filter(move |d| seen.insert(canonical_form(d))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::is_isomorphic;

    const PLAIN: EnumOptions = EnumOptions { dedupe: false, force: false };
    const DEDUPE: EnumOptions = EnumOptions { dedupe: true, force: false };

    #[test]
    fn paths() {
        assert_eq!(directed_path(1).unwrap(), Digraph::empty(1));
        assert_eq!(directed_path(2).unwrap().arcs(), &[(0, 1)]);
        assert_eq!(directed_path(3).unwrap().arcs(), &[(0, 1), (1, 2)]);
        assert!(directed_path(0).is_err());
    }

    #[test]
    fn cycles() {
        assert_eq!(directed_cycle(3, false).unwrap().arcs(), &[(0, 1), (1, 2), (2, 0)]);
        let c4 = directed_cycle(4, false).unwrap();
        let deg = c4.degrees();
        assert_eq!(c4.arc_count(), 4);
        assert!(deg.out_degree.iter().chain(&deg.in_degree).all(|&k| k == 1));
        assert!(directed_cycle(2, false).is_err());
        assert_eq!(directed_cycle(2, true).unwrap().arcs(), &[(0, 1), (1, 0)]);
        assert!(directed_cycle(1, true).is_err());
    }

    #[test]
    fn symmetric() {
        assert_eq!(symmetric_digraph(2, &[(0, 1)]).unwrap().arc_count(), 2);
        assert_eq!(symmetric_digraph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap().arc_count(), 6);
        assert_eq!(symmetric_digraph(3, &[]).unwrap(), Digraph::empty(3));
        assert!(symmetric_digraph(3, &[(1, 1)]).is_err());
        assert!(symmetric_digraph(3, &[(0, 1), (1, 0)]).is_err());
        assert!(!symmetric_digraph(2, &[(0, 1)]).unwrap().is_oriented());
    }

    #[test]
    fn pruefer_examples() {
        assert_eq!(labeled_tree_from_pruefer(&[0], 3).unwrap(), vec![(0, 1), (0, 2)]);
        assert_eq!(labeled_tree_from_pruefer(&[], 2).unwrap(), vec![(0, 1)]);
        let mut star = labeled_tree_from_pruefer(&[1, 1], 4).unwrap();
        star.sort();
        assert_eq!(star, vec![(0, 1), (1, 2), (1, 3)]);
        assert!(labeled_tree_from_pruefer(&[0, 0], 3).is_err());
        assert!(labeled_tree_from_pruefer(&[3], 3).is_err());
        assert!(labeled_tree_from_pruefer(&[], 1).is_err());
    }

    #[test]
    fn pruefer_round_trip_all_small() {
        for n in 2..=6 {
            for i in 0..labeled_tree_count(n) {
                let seq = pruefer_sequence(n, i);
                let tree = labeled_tree_from_pruefer(&seq, n).unwrap();
                assert_eq!(pruefer_from_tree(&tree, n).unwrap(), seq);
            }
        }
    }

    #[test]
    fn tree_counts() {
        assert_eq!(enumerate_oriented_trees(1, PLAIN).unwrap().count(), 1);
        assert_eq!(enumerate_oriented_trees(2, PLAIN).unwrap().count(), 2);
        assert_eq!(enumerate_oriented_trees(2, DEDUPE).unwrap().count(), 1);
        assert_eq!(enumerate_oriented_trees(3, PLAIN).unwrap().count(), 12);
        assert_eq!(enumerate_oriented_trees(4, PLAIN).unwrap().count(), 128);
        assert!(enumerate_oriented_trees(0, PLAIN).is_err());
        assert!(enumerate_oriented_trees(9, PLAIN).is_err());
        assert!(enumerate_oriented_trees(9, EnumOptions { dedupe: false, force: true }).is_ok());
    }

    #[test]
    fn oriented_tree_classes() {
        // Unlabelled oriented trees: 1, 1, 3, 8, 27 for n = 1..5.
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_oriented_trees(n, DEDUPE).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 3, 8, 27]);
    }

    #[test]
    fn tree_members_are_well_formed() {
        for n in 1..=5 {
            for t in enumerate_oriented_trees(n, PLAIN).unwrap() {
                assert_eq!(t.arc_count(), n - 1);
                assert!(t.is_oriented());
                assert!(t.is_weakly_connected());
            }
        }
    }

    #[test]
    fn unicyclic_counts() {
        assert_eq!(enumerate_unicyclic(3, UnicyclicVariant::AnyOrientation, PLAIN).unwrap().count(), 8);
        assert_eq!(enumerate_unicyclic(3, UnicyclicVariant::DirectedCycle, PLAIN).unwrap().count(), 2);
        assert_eq!(enumerate_unicyclic(3, UnicyclicVariant::AnyOrientation, DEDUPE).unwrap().count(), 2);
        assert_eq!(labeled_unicyclic_graphs(4, false).unwrap().len(), 15);
        assert_eq!(labeled_unicyclic_graphs(5, false).unwrap().len(), 222);
        assert!(labeled_unicyclic_graphs(2, false).is_err());
        assert!(labeled_unicyclic_graphs(8, false).is_err());
    }

    #[test]
    fn cycle_detection() {
        let edges = [(0, 1), (1, 2), (0, 2), (2, 3)];
        assert_eq!(cycle_vertices(4, &edges), vec![0, 1, 2]);
        let d = Digraph::new(4, [(0, 1), (1, 2), (2, 0), (3, 2)]).unwrap();
        assert!(has_directed_cycle(&d));
        let d = Digraph::new(4, [(0, 1), (1, 2), (0, 2), (3, 2)]).unwrap();
        assert!(!has_directed_cycle(&d));
    }

    #[test]
    fn paths_and_cycles_are_enumerated() {
        for n in 2..=5 {
            let p = directed_path(n).unwrap();
            assert!(enumerate_oriented_trees(n, PLAIN).unwrap().any(|t| is_isomorphic(&t, &p)));
        }
        for n in 3..=5 {
            let c = directed_cycle(n, false).unwrap();
            let mut it = enumerate_unicyclic(n, UnicyclicVariant::AnyOrientation, PLAIN).unwrap();
            assert!(it.any(|u| is_isomorphic(&u, &c)));
        }
    }

    #[test]
    fn symmetric_family() {
        assert_eq!(enumerate_symmetric(3, PLAIN).unwrap().count(), 8);
        assert_eq!(enumerate_symmetric(4, DEDUPE).unwrap().count(), 11);
        assert!(enumerate_symmetric(7, PLAIN).is_err());
    }
}
