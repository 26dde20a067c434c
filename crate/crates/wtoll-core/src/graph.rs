//! Immutable simple undirected graphs with dense vertex ids and string labels.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;

/// Dense vertex id, `0..n` in first-appearance order.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    EmptyLabel,
    SelfLoop { label: String },
    DuplicateEdge { a: String, b: String },
    DuplicateVertex { label: String },
    UnknownVertex { label: String },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EmptyLabel => write!(f, "empty vertex label"),
            GraphError::SelfLoop { label } => write!(f, "self-loop at '{label}'"),
            GraphError::DuplicateEdge { a, b } => write!(f, "duplicate edge '{a}'-'{b}'"),
            GraphError::DuplicateVertex { label } => write!(f, "duplicate vertex '{label}'"),
            GraphError::UnknownVertex { label } => write!(f, "unknown vertex '{label}'"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Accumulates labelled vertices and edges, rejecting loops and duplicates.
#[derive(Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: BTreeMap<String, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Interns `label`, returning its id (existing or fresh).
    pub fn vertex(&mut self, label: &str) -> Result<VertexId, GraphError> {
        if label.is_empty() {
            return Err(GraphError::EmptyLabel);
        }
        if let Some(&id) = self.index.get(label) {
            return Ok(id);
        }
        let id = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), id);
        Ok(id)
    }

    /// Interns `label`, failing if it was already declared.
    pub fn new_vertex(&mut self, label: &str) -> Result<VertexId, GraphError> {
        if self.index.contains_key(label) {
            return Err(GraphError::DuplicateVertex {
                label: label.to_string(),
            });
        }
        self.vertex(label)
    }

    pub fn edge(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop {
                label: a.to_string(),
            });
        }
        let ia = self.vertex(a)?;
        let ib = self.vertex(b)?;
        let key = (ia.min(ib), ia.max(ib));
        if self.edges.contains(&key) {
            return Err(GraphError::DuplicateEdge {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        self.edges.push(key);
        Ok(())
    }

    pub fn build(self) -> Graph {
        let n = self.labels.len();
        let mut adj: Vec<VertexSet> = (0..n).map(|_| VertexSet::empty(n)).collect();
        for &(a, b) in &self.edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Graph {
            labels: self.labels,
            index: self.index,
            adj,
            edge_count: self.edges.len(),
        }
    }
}

/// Immutable simple undirected graph. Adjacency is symmetric and loop-free by
/// construction; labels are unique nonempty strings.
#[derive(Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: BTreeMap<String, VertexId>,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::new()
    }

    pub fn from_edges<'a, I: IntoIterator<Item = (&'a str, &'a str)>>(
        edges: I,
    ) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new();
        for (x, y) in edges {
            b.edge(x, y)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> core::ops::Range<VertexId> {
        0..self.n()
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn require_vertex(&self, label: &str) -> Result<VertexId, GraphError> {
        self.vertex(label).ok_or_else(|| GraphError::UnknownVertex {
            label: label.to_string(),
        })
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: VertexId) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n())
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn set_of<I: IntoIterator<Item = VertexId>>(&self, members: I) -> VertexSet {
        VertexSet::of(self.n(), members)
    }

    pub fn set_from_labels<'a, I: IntoIterator<Item = &'a str>>(
        &self,
        labels: I,
    ) -> Result<VertexSet, GraphError> {
        let mut s = self.empty_set();
        for l in labels {
            s.insert(self.require_vertex(l)?);
        }
        Ok(s)
    }

    /// Labels of the members of `s`, in ascending id order.
    pub fn labels_of(&self, s: &VertexSet) -> Vec<&str> {
        s.iter().map(|v| self.label(v)).collect()
    }

    /// Subgraph induced by `s`; labels preserved, ids reassigned in ascending
    /// order of the old ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        let mut b = GraphBuilder::new();
        for v in s.iter() {
            b.vertex(self.label(v)).expect("labels of a graph are valid");
        }
        for v in s.iter() {
            for w in self.adj[v].intersection(s).iter() {
                if w > v {
                    b.edge(self.label(v), self.label(w))
                        .expect("edges of a graph are simple");
                }
            }
        }
        b.build()
    }

    /// Vertices reachable from `start` inside `allowed`; empty when `start`
    /// is not itself allowed.
    pub fn reachable_within(&self, start: VertexId, allowed: &VertexSet) -> VertexSet {
        let mut reach = self.empty_set();
        if !allowed.contains(start) {
            return reach;
        }
        reach.insert(start);
        let mut frontier = reach.clone();
        while !frontier.is_empty() {
            let mut next = self.empty_set();
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(allowed);
            next.subtract(&reach);
            reach.union_with(&next);
            frontier = next;
        }
        reach
    }

    /// Connected components of the subgraph induced by `allowed`, ordered by
    /// smallest member.
    pub fn components_within(&self, allowed: &VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = allowed.clone();
        while let Some(v) = rest.smallest() {
            let comp = self.reachable_within(v, &rest);
            rest.subtract(&comp);
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.full_set())
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.reachable_within(0, &self.full_set()).len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count == self.n() - 1 && self.is_connected()
    }

    /// Breadth-first distances from `src`; `usize::MAX` marks unreachable.
    pub fn bfs_distances(&self, src: VertexId) -> Vec<usize> {
        let mut dist = alloc::vec![usize::MAX; self.n()];
        dist[src] = 0;
        let mut frontier = VertexSet::singleton(self.n(), src);
        let mut seen = frontier.clone();
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = self.empty_set();
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.subtract(&seen);
            for v in next.iter() {
                dist[v] = d;
            }
            seen.union_with(&next);
            frontier = next;
        }
        dist
    }

    /// True iff the neighborhood of `v` is a clique.
    pub fn is_simplicial(&self, v: VertexId) -> bool {
        self.is_simplicial_within(v, &self.full_set())
    }

    /// Simpliciality of `v` inside the subgraph induced by `allowed`.
    pub fn is_simplicial_within(&self, v: VertexId, allowed: &VertexSet) -> bool {
        debug_assert!(allowed.contains(v));
        let nv = self.adj[v].intersection(allowed);
        for u in nv.iter() {
            let mut missing = nv.difference(&self.adj[u]);
            missing.remove(u);
            if !missing.is_empty() {
                return false;
            }
        }
        true
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        for u in s.iter() {
            let mut missing = s.difference(&self.adj[u]);
            missing.remove(u);
            if !missing.is_empty() {
                return false;
            }
        }
        true
    }

    /// Twin classes: the partition of `V` by equal closed neighborhoods,
    /// ordered by smallest member.
    pub fn twin_classes(&self) -> Vec<VertexSet> {
        let mut by_nbhd: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
        for v in self.vertices() {
            by_nbhd
                .entry(self.closed_neighborhood(v))
                .or_insert_with(|| self.empty_set())
                .insert(v);
        }
        let mut classes: Vec<VertexSet> = by_nbhd.into_values().collect();
        classes.sort_by_key(|c| c.smallest());
        classes
    }

    /// `T(v)`: the vertex together with its twins.
    pub fn twin_class_of(&self, v: VertexId) -> VertexSet {
        let nv = self.closed_neighborhood(v);
        let mut class = self.empty_set();
        for u in self.vertices() {
            if self.closed_neighborhood(u) == nv {
                class.insert(u);
            }
        }
        class
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={};", self.n(), self.edge_count)?;
        for (u, v) in self.edges() {
            write!(f, " {}-{}", self.label(u), self.label(v))?;
        }
        write!(f, ")")
    }
}
