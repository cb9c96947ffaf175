//! Simple digraphs: no loops, no parallel arcs, symmetric pairs allowed.
//!
//! Vertices are `0..n`. Arcs are stored as a sorted, duplicate-free list of
//! `(tail, head)` pairs, so iteration order is always lexicographic.

mod iso;
mod text;

pub use iso::{canonical_form, is_isomorphic, CanonicalForm};
pub use text::{parse_digraph, parse_digraphs, DUMP_SEPARATOR};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered vertex pair `(tail, head)`.
pub type Arc = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
}

/// Out- and in-degree of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDegrees {
    pub out_degree: Vec<usize>,
    pub in_degree: Vec<usize>,
}

impl VertexDegrees {
    pub fn total(&self, u: usize) -> usize {
        self.out_degree[u] + self.in_degree[u]
    }
}

impl Digraph {
    /// Builds a digraph, rejecting loops, out-of-range endpoints and repeated arcs.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut list: Vec<Arc> = Vec::new();
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::input(format!("arc ({u}, {v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::input(format!("duplicate arc ({}, {})", w[0].0, w[0].1)));
        }
        Ok(Digraph { n, arcs: list })
    }

    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Self {
        Digraph { n, arcs: Vec::new() }
    }

    /// Caller guarantees the arcs are valid; they are sorted here.
    pub(crate) fn from_valid_arcs(n: usize, mut arcs: Vec<Arc>) -> Self {
        arcs.sort_unstable();
        debug_assert!(arcs.windows(2).all(|w| w[0] != w[1]));
        debug_assert!(arcs.iter().all(|&(u, v)| u != v && u < n && v < n));
        Digraph { n, arcs }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::input(format!("vertex {u} out of range 0..{}", self.n)))
        }
    }

    pub fn out_degree(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(self.arcs.iter().filter(|a| a.0 == u).count())
    }

    pub fn in_degree(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(self.arcs.iter().filter(|a| a.1 == u).count())
    }

    /// `d⁺(u) + d⁻(u)`.
    pub fn total_degree(&self, u: usize) -> Result<usize> {
        Ok(self.out_degree(u)? + self.in_degree(u)?)
    }

    pub fn degrees(&self) -> VertexDegrees {
        let mut out_degree = vec![0; self.n];
        let mut in_degree = vec![0; self.n];
        for &(u, v) in &self.arcs {
            out_degree[u] += 1;
            in_degree[v] += 1;
        }
        VertexDegrees { out_degree, in_degree }
    }

    pub fn out_neighbours(&self, u: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        Ok(self.arcs.iter().filter(|a| a.0 == u).map(|a| a.1).collect())
    }

    pub fn in_neighbours(&self, u: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        Ok(self.arcs.iter().filter(|a| a.1 == u).map(|a| a.0).collect())
    }

    /// True iff `d⁺(u) + d⁻(u) = 1`.
    pub fn is_leaf(&self, u: usize) -> Result<bool> {
        Ok(self.total_degree(u)? == 1)
    }

    /// True iff `d⁺(u) + d⁻(u) ≥ 2`.
    pub fn is_nonleaf(&self, u: usize) -> Result<bool> {
        Ok(self.total_degree(u)? >= 2)
    }

    /// `D − uv`: same vertex set, arc `(u, v)` removed.
    pub fn delete_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        let idx =
            self.arcs.binary_search(&(u, v)).map_err(|_| Error::input(format!("arc ({u}, {v}) is not present")))?;
        let mut arcs = self.arcs.clone();
        arcs.remove(idx);
        Ok(Digraph { n: self.n, arcs })
    }

    /// Adds an arc; the inverse of [`Digraph::delete_arc`].
    pub fn add_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        let mut arcs = self.arcs.clone();
        arcs.push((u, v));
        Digraph::new(self.n, arcs)
    }

    /// `D − u`: removes `u` with its incident arcs and shifts higher labels down by one.
    pub fn delete_vertex(&self, u: usize) -> Result<Digraph> {
        self.check_vertex(u)?;
        let shift = |w: usize| if w > u { w - 1 } else { w };
        let arcs = self.arcs.iter().filter(|&&(a, b)| a != u && b != u).map(|&(a, b)| (shift(a), shift(b))).collect();
        // Relabelling is order preserving, so the list stays sorted.
        Ok(Digraph { n: self.n - 1, arcs })
    }

    /// True iff no pair `(u, v)`, `(v, u)` is present.
    pub fn is_oriented(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| u > v || !self.has_arc(v, u))
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// listed by smallest vertex.
    pub fn underlying_components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &self.arcs {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut slot = vec![usize::MAX; self.n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for w in 0..self.n {
            let r = find(&mut parent, w);
            if slot[r] == usize::MAX {
                slot[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[slot[r]].push(w);
        }
        comps
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.underlying_components().len() <= 1
    }

    /// Edges of the underlying simple graph as `(min, max)` pairs, sorted.
    pub fn underlying_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self.arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    /// Image of the digraph under `u ↦ perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        if perm.len() != self.n {
            return Err(Error::input("permutation length differs from the order"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::input("not a permutation"));
            }
        }
        let arcs = self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Ok(Digraph::from_valid_arcs(self.n, arcs))
    }

    /// Vertices of `other` are placed after those of `self`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let off = self.n;
        let arcs = self.arcs.iter().copied().chain(other.arcs.iter().map(|&(u, v)| (u + off, v + off))).collect();
        Digraph { n: self.n + other.n, arcs }
    }

    pub fn with_isolated_vertices(&self, extra: usize) -> Digraph {
        Digraph { n: self.n + extra, arcs: self.arcs.clone() }
    }

    /// Digraph text format: `n m` then one `u v` line per arc.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.arcs.len());
        for (u, v) in &self.arcs {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}
