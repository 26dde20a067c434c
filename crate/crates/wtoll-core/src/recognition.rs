//! Chordality, interval and proper-interval recognition with certificates,
//! maximal cliques, clique paths (canonical representations), end vertices,
//! and the finite forbidden end-vertex patterns.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::graph::{Graph, VertexId};
use crate::model::IntervalModel;

/// Outcome of the simplicial-elimination test: a perfect elimination order,
/// or an induced chordless cycle of length at least four.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal { peo: Vec<VertexId> },
    NotChordal { cycle: Vec<VertexId> },
}

pub fn check_chordal(g: &Graph) -> Chordality {
    let mut active = g.full_set();
    let mut peo = Vec::with_capacity(g.n());
    while !active.is_empty() {
        let simplicial = active
            .iter()
            .find(|&v| g.is_simplicial_within(v, &active));
        match simplicial {
            Some(v) => {
                peo.push(v);
                active.remove(v);
            }
            None => {
                return Chordality::NotChordal {
                    cycle: chordless_cycle_within(g, &active),
                };
            }
        }
    }
    Chordality::Chordal { peo }
}

/// Extracts an induced cycle of length >= 4 from a set with no simplicial
/// vertex: around a vertex with two nonadjacent neighbors, route the
/// shortest path that avoids the rest of its closed neighborhood.
fn chordless_cycle_within(g: &Graph, active: &VertexSet) -> Vec<VertexId> {
    for v in active.iter() {
        let nbrs: Vec<VertexId> = g.neighbors(v).intersection(active).iter().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.adjacent(a, b) {
                    continue;
                }
                let mut allowed = active.difference(&g.closed_neighborhood(v));
                allowed.insert(a);
                allowed.insert(b);
                if let Some(path) = shortest_path_within(g, a, b, &allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    debug_assert!(validate_chordless_cycle(g, &cycle));
                    return cycle;
                }
            }
        }
    }
    unreachable!("a graph without simplicial vertices contains a chordless cycle")
}

fn shortest_path_within(
    g: &Graph,
    from: VertexId,
    to: VertexId,
    allowed: &VertexSet,
) -> Option<Vec<VertexId>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[from] = from;
    let mut queue = vec![from];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x).intersection(allowed).iter() {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push(y);
            }
        }
    }
    None
}

/// `order` lists all vertices, each simplicial among the ones that follow.
pub fn validate_peo(g: &Graph, order: &[VertexId]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut remaining = g.full_set();
    for &v in order {
        if !remaining.contains(v) || !g.is_simplicial_within(v, &remaining) {
            return false;
        }
        remaining.remove(v);
    }
    true
}

pub fn validate_chordless_cycle(g: &Graph, cycle: &[VertexId]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let set = VertexSet::of(g.n(), cycle.iter().copied());
    if set.len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.adjacent(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotChordalError {
    pub cycle: Vec<VertexId>,
}

impl fmt::Display for NotChordalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph is not chordal (induced {}-cycle)", self.cycle.len())
    }
}

impl core::error::Error for NotChordalError {}

/// All maximal cliques of a chordal graph, harvested along a perfect
/// elimination order; at most `n` of them. Sorted lexicographically.
pub fn maximal_cliques_chordal(g: &Graph) -> Result<Vec<VertexSet>, NotChordalError> {
    let peo = match check_chordal(g) {
        Chordality::Chordal { peo } => peo,
        Chordality::NotChordal { cycle } => return Err(NotChordalError { cycle }),
    };
    let mut remaining = g.full_set();
    let mut candidates: Vec<VertexSet> = Vec::new();
    for &v in &peo {
        let mut c = g.neighbors(v).intersection(&remaining);
        c.insert(v);
        candidates.push(c);
        remaining.remove(v);
    }
    let mut cliques: Vec<VertexSet> = Vec::new();
    for c in candidates {
        if !cliques.iter().any(|other| c.is_subset(other)) {
            cliques.retain(|other| !other.is_subset(&c));
            cliques.push(c);
        }
    }
    cliques.sort();
    Ok(cliques)
}

/// First asteroidal triple in id order: three vertices pairwise joined by
/// paths avoiding the closed neighborhood of the third. Cubic scan over
/// per-vertex component labellings.
pub fn find_asteroidal_triple(g: &Graph) -> Option<[VertexId; 3]> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n * n];
    for z in g.vertices() {
        let allowed = g.full_set().difference(&g.closed_neighborhood(z));
        for (ci, c) in g.components_within(&allowed).iter().enumerate() {
            for x in c.iter() {
                comp[z * n + x] = ci;
            }
        }
    }
    let joined = |a: VertexId, b: VertexId, avoid: VertexId| {
        comp[avoid * n + a] != usize::MAX && comp[avoid * n + a] == comp[avoid * n + b]
    };
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if joined(x, y, z) && joined(x, z, y) && joined(y, z, x) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

pub fn validate_asteroidal_triple(g: &Graph, t: [VertexId; 3]) -> bool {
    let pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];
    pairs.iter().all(|&(i, j, k)| {
        let allowed = g.full_set().difference(&g.closed_neighborhood(t[k]));
        allowed.contains(t[i])
            && allowed.contains(t[j])
            && g.reachable_within(t[i], &allowed).contains(t[j])
    })
}

/// Ordered maximal cliques in which every vertex occupies a consecutive run
/// of positions (a canonical representation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePath {
    pub cliques: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliquePathError {
    NotAClique { index: usize },
    NotMaximal { index: usize },
    Duplicate { index: usize },
    MissingVertices,
    NotConsecutive { vertex: VertexId },
}

impl CliquePath {
    pub fn reversed(&self) -> CliquePath {
        CliquePath {
            cliques: self.cliques.iter().rev().cloned().collect(),
        }
    }

    /// First and last clique positions of `v`, if present.
    pub fn span(&self, v: VertexId) -> Option<(usize, usize)> {
        let first = self.cliques.iter().position(|c| c.contains(v))?;
        let last = self.cliques.iter().rposition(|c| c.contains(v))?;
        Some((first, last))
    }

    pub fn validate(&self, g: &Graph) -> Result<(), CliquePathError> {
        let mut union = g.empty_set();
        for (i, c) in self.cliques.iter().enumerate() {
            if !g.is_clique(c) {
                return Err(CliquePathError::NotAClique { index: i });
            }
            let grow = g
                .vertices()
                .any(|v| !c.contains(v) && c.is_subset(g.neighbors(v)));
            if grow {
                return Err(CliquePathError::NotMaximal { index: i });
            }
            if self.cliques[..i].contains(c) {
                return Err(CliquePathError::Duplicate { index: i });
            }
            union.union_with(c);
        }
        if union != g.full_set() {
            return Err(CliquePathError::MissingVertices);
        }
        for v in g.vertices() {
            let (first, last) = self.span(v).ok_or(CliquePathError::MissingVertices)?;
            for i in first..=last {
                if !self.cliques[i].contains(v) {
                    return Err(CliquePathError::NotConsecutive { vertex: v });
                }
            }
        }
        Ok(())
    }
}

/// Consecutive-ones ordering of `cliques` by depth-first search over
/// `(placed set, last clique)` states. A clique may follow when none of its
/// already-seen vertices has left the running clique.
fn consecutive_order(
    n: usize,
    cliques: &[VertexSet],
    pin_first: Option<usize>,
    pin_last: Option<usize>,
) -> Option<Vec<usize>> {
    let k = cliques.len();
    if k == 0 {
        return Some(Vec::new());
    }
    assert!(k <= 24, "clique ordering supports at most 24 cliques");
    let mut vmask = vec![0u32; n];
    for (i, c) in cliques.iter().enumerate() {
        for v in c.iter() {
            vmask[v] |= 1 << i;
        }
    }
    let full = (1u32 << k) - 1;

    struct Search<'a> {
        cliques: &'a [VertexSet],
        vmask: &'a [u32],
        k: usize,
        full: u32,
        pin_last: Option<usize>,
        dead: Vec<bool>,
    }

    fn dfs(s: &mut Search, mask: u32, last: usize, order: &mut Vec<usize>) -> bool {
        if mask == s.full {
            return s.pin_last.is_none_or(|pl| last == pl);
        }
        let key = mask as usize * s.k + last;
        if s.dead[key] {
            return false;
        }
        for q in 0..s.k {
            if mask >> q & 1 == 1 {
                continue;
            }
            if s.pin_last == Some(q) && mask | (1 << q) != s.full {
                continue;
            }
            let ok = s.cliques[q]
                .iter()
                .all(|v| s.vmask[v] & mask == 0 || s.cliques[last].contains(v));
            if !ok {
                continue;
            }
            order.push(q);
            if dfs(s, mask | (1 << q), q, order) {
                return true;
            }
            order.pop();
        }
        s.dead[key] = true;
        false
    }

    let mut s = Search {
        cliques,
        vmask: &vmask,
        k,
        full,
        pin_last,
        dead: vec![false; (1usize << k) * k],
    };
    let starts: Vec<usize> = match pin_first {
        Some(f) => vec![f],
        None => (0..k).collect(),
    };
    for st in starts {
        if pin_last == Some(st) && k > 1 {
            continue;
        }
        let mut order = vec![st];
        if dfs(&mut s, 1 << st, st, &mut order) {
            return Some(order);
        }
    }
    None
}

/// Canonical representation of a chordal graph, optionally pinning a given
/// maximal clique to the first and/or last position. `Ok(None)` when no
/// consecutive ordering exists under the pins (for no pins, exactly the
/// non-interval chordal graphs).
pub fn clique_path_pinned(
    g: &Graph,
    pin_first: Option<&VertexSet>,
    pin_last: Option<&VertexSet>,
) -> Result<Option<CliquePath>, NotChordalError> {
    let cliques = maximal_cliques_chordal(g)?;
    let index_of = |pin: &VertexSet| cliques.iter().position(|c| c == pin);
    let first = match pin_first {
        Some(p) => match index_of(p) {
            Some(i) => Some(i),
            None => return Ok(None),
        },
        None => None,
    };
    let last = match pin_last {
        Some(p) => match index_of(p) {
            Some(i) => Some(i),
            None => return Ok(None),
        },
        None => None,
    };
    if let (Some(f), Some(l)) = (first, last) {
        if f == l && cliques.len() > 1 {
            return Ok(None);
        }
    }
    Ok(consecutive_order(g.n(), &cliques, first, last).map(|order| CliquePath {
        cliques: order.into_iter().map(|i| cliques[i].clone()).collect(),
    }))
}

pub fn build_clique_path(g: &Graph) -> Result<Option<CliquePath>, NotChordalError> {
    clique_path_pinned(g, None, None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalWitness {
    ChordlessCycle(Vec<VertexId>),
    AsteroidalTriple([VertexId; 3]),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalRecognition {
    Interval(CliquePath),
    NotInterval(IntervalWitness),
}

impl IntervalRecognition {
    pub fn is_positive(&self) -> bool {
        matches!(self, IntervalRecognition::Interval(_))
    }
}

/// Chordal and asteroidal-triple-free, with a clique path as the positive
/// certificate.
pub fn recognize_interval(g: &Graph) -> IntervalRecognition {
    match check_chordal(g) {
        Chordality::NotChordal { cycle } => {
            IntervalRecognition::NotInterval(IntervalWitness::ChordlessCycle(cycle))
        }
        Chordality::Chordal { .. } => match find_asteroidal_triple(g) {
            Some(t) => IntervalRecognition::NotInterval(IntervalWitness::AsteroidalTriple(t)),
            None => {
                let path = build_clique_path(g)
                    .expect("chordality already established")
                    .expect("chordal AT-free graphs admit a clique path");
                IntervalRecognition::Interval(path)
            }
        },
    }
}

/// First induced claw in id order, as `(center, leaves)`.
pub fn find_claw(g: &Graph) -> Option<(VertexId, [VertexId; 3])> {
    for c in g.vertices() {
        let nbrs: Vec<VertexId> = g.neighbors(c).iter().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                if g.adjacent(a, b) {
                    continue;
                }
                for &d in &nbrs[j + 1..] {
                    if !g.adjacent(a, d) && !g.adjacent(b, d) {
                        return Some((c, [a, b, d]));
                    }
                }
            }
        }
    }
    None
}

pub fn validate_claw(g: &Graph, center: VertexId, leaves: [VertexId; 3]) -> bool {
    let distinct = leaves[0] != leaves[1]
        && leaves[0] != leaves[2]
        && leaves[1] != leaves[2]
        && !leaves.contains(&center);
    distinct
        && leaves.iter().all(|&l| g.adjacent(center, l))
        && !g.adjacent(leaves[0], leaves[1])
        && !g.adjacent(leaves[0], leaves[2])
        && !g.adjacent(leaves[1], leaves[2])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProperWitness {
    ChordlessCycle(Vec<VertexId>),
    AsteroidalTriple([VertexId; 3]),
    Claw { center: VertexId, leaves: [VertexId; 3] },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProperRecognition {
    Proper {
        clique_path: CliquePath,
        model: IntervalModel,
    },
    NotProper(ProperWitness),
}

impl ProperRecognition {
    pub fn is_positive(&self) -> bool {
        matches!(self, ProperRecognition::Proper { .. })
    }
}

/// Claw-free interval recognition; the positive certificate is a proper
/// model built from the clique path.
pub fn recognize_proper_interval(g: &Graph) -> ProperRecognition {
    let path = match recognize_interval(g) {
        IntervalRecognition::NotInterval(IntervalWitness::ChordlessCycle(c)) => {
            return ProperRecognition::NotProper(ProperWitness::ChordlessCycle(c));
        }
        IntervalRecognition::NotInterval(IntervalWitness::AsteroidalTriple(t)) => {
            return ProperRecognition::NotProper(ProperWitness::AsteroidalTriple(t));
        }
        IntervalRecognition::Interval(path) => path,
    };
    if let Some((center, leaves)) = find_claw(g) {
        return ProperRecognition::NotProper(ProperWitness::Claw { center, leaves });
    }
    let model = proper_model_from_path(g, &path);
    model
        .validate_for(g)
        .expect("clique-path model reproduces the graph");
    model
        .validate_proper()
        .expect("claw-free interval graphs admit a proper model");
    ProperRecognition::Proper {
        clique_path: path,
        model,
    }
}

/// Proper model for a claw-free interval graph. Clique spans of such graphs
/// form a staircase (no span strictly inside another), so ordering vertices
/// by span and stretching ranks into distinct integer endpoints yields a
/// containment-free model.
fn proper_model_from_path(g: &Graph, path: &CliquePath) -> IntervalModel {
    let n = g.n();
    if n == 0 {
        return IntervalModel::new(Vec::new());
    }
    let spans: Vec<(usize, usize)> = (0..n)
        .map(|v| path.span(v).expect("clique path covers all vertices"))
        .collect();
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (spans[v].0, spans[v].1, v));
    let scale = (n + 2) as i64;
    let mut intervals = vec![(0i64, 0i64); n];
    for (rank, &v) in order.iter().enumerate() {
        let reach = order
            .iter()
            .rposition(|&w| spans[w].0 <= spans[v].1)
            .expect("at least v itself qualifies");
        intervals[v] = (
            rank as i64 * scale,
            reach as i64 * scale + rank as i64 + 1,
        );
    }
    IntervalModel::new(intervals)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotIntervalError {
    pub witness: IntervalWitness,
}

impl fmt::Display for NotIntervalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            IntervalWitness::ChordlessCycle(c) => {
                write!(f, "graph is not interval (induced {}-cycle)", c.len())
            }
            IntervalWitness::AsteroidalTriple(_) => {
                write!(f, "graph is not interval (asteroidal triple)")
            }
        }
    }
}

impl core::error::Error for NotIntervalError {}

fn require_interval(g: &Graph) -> Result<(), NotIntervalError> {
    match recognize_interval(g) {
        IntervalRecognition::Interval(_) => Ok(()),
        IntervalRecognition::NotInterval(witness) => Err(NotIntervalError { witness }),
    }
}

/// Does some canonical representation place `a` in its first clique?
pub fn is_end_vertex(g: &Graph, a: VertexId) -> Result<bool, NotIntervalError> {
    require_interval(g)?;
    let cliques = maximal_cliques_chordal(g).expect("interval graphs are chordal");
    for (i, c) in cliques.iter().enumerate() {
        if !c.contains(a) {
            continue;
        }
        if consecutive_order(g.n(), &cliques, Some(i), None).is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Simplicial vertices that are also end vertices.
pub fn end_simplicial_vertices(g: &Graph) -> Result<VertexSet, NotIntervalError> {
    require_interval(g)?;
    let mut out = g.empty_set();
    for v in g.vertices() {
        if g.is_simplicial(v) && is_end_vertex(g, v)? {
            out.insert(v);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionKind {
    /// Induced path on five vertices with the designated vertex central.
    CenteredPath5,
    /// Designated vertex is the pendant neighbor of the center of an
    /// induced `star_{1,2,2}`.
    Star122,
    /// Designated vertex is the apex of an induced bull.
    Bull,
}

impl ObstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ObstructionKind::CenteredPath5 => "centered-p5",
            ObstructionKind::Star122 => "star122",
            ObstructionKind::Bull => "bull",
        }
    }
}

/// An induced forbidden pattern with its embedding; `vertices` lists the
/// pattern in a fixed role order, designated vertex included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndVertexObstruction {
    pub kind: ObstructionKind,
    pub vertices: Vec<VertexId>,
}

/// Searches the finite designated-vertex patterns barring `a` from the end
/// of a representation: the centered path on five vertices, `star_{1,2,2}`,
/// and the bull. Complete for end vertices of proper interval graphs; a
/// sound filter elsewhere (the unbounded hub family is handled by the
/// representation search in [`is_end_vertex`], not by patterns).
pub fn end_vertex_obstructions(g: &Graph, a: VertexId) -> Vec<EndVertexObstruction> {
    let mut out = Vec::new();
    if let Some(vs) = find_centered_p5(g, a) {
        out.push(EndVertexObstruction {
            kind: ObstructionKind::CenteredPath5,
            vertices: vs,
        });
    }
    if let Some(vs) = find_star122_at(g, a) {
        out.push(EndVertexObstruction {
            kind: ObstructionKind::Star122,
            vertices: vs,
        });
    }
    if let Some(vs) = find_bull_apex(g, a) {
        out.push(EndVertexObstruction {
            kind: ObstructionKind::Bull,
            vertices: vs,
        });
    }
    out
}

/// Induced `x1-x2-a-x3-x4`; returns `[x1, x2, a, x3, x4]`.
fn find_centered_p5(g: &Graph, a: VertexId) -> Option<Vec<VertexId>> {
    let na = g.closed_neighborhood(a);
    let nbrs: Vec<VertexId> = g.neighbors(a).iter().collect();
    for (i, &x2) in nbrs.iter().enumerate() {
        for &x3 in &nbrs[i + 1..] {
            if g.adjacent(x2, x3) {
                continue;
            }
            for (l, r) in [(x2, x3), (x3, x2)] {
                let mut c1 = g.neighbors(l).difference(&na);
                c1.subtract(&g.closed_neighborhood(r));
                for x1 in c1.iter() {
                    let mut c4 = g.neighbors(r).difference(&na);
                    c4.subtract(&g.closed_neighborhood(l));
                    c4.subtract(&g.closed_neighborhood(x1));
                    if let Some(x4) = c4.smallest() {
                        return Some(vec![x1, l, a, r, x4]);
                    }
                }
            }
        }
    }
    None
}

/// Induced bull with apex `a`; returns `[v1, v2, v3, v4, a]`.
fn find_bull_apex(g: &Graph, a: VertexId) -> Option<Vec<VertexId>> {
    let na = g.closed_neighborhood(a);
    let nbrs: Vec<VertexId> = g.neighbors(a).iter().collect();
    for (i, &v2) in nbrs.iter().enumerate() {
        for &v3 in &nbrs[i + 1..] {
            if !g.adjacent(v2, v3) {
                continue;
            }
            for (l, r) in [(v2, v3), (v3, v2)] {
                let mut c1 = g.neighbors(l).difference(&na);
                c1.subtract(&g.closed_neighborhood(r));
                for v1 in c1.iter() {
                    let mut c4 = g.neighbors(r).difference(&na);
                    c4.subtract(&g.closed_neighborhood(l));
                    c4.subtract(&g.closed_neighborhood(v1));
                    if let Some(v4) = c4.smallest() {
                        return Some(vec![v1, l, r, v4, a]);
                    }
                }
            }
        }
    }
    None
}

/// Induced `star_{1,2,2}` with `a` the pendant at the center; returns
/// `[v1, v2, c, v4, v5, a]` for legs `v1-v2-c` and `c-v4-v5`.
fn find_star122_at(g: &Graph, a: VertexId) -> Option<Vec<VertexId>> {
    let na = g.closed_neighborhood(a);
    for c in g.neighbors(a).iter() {
        let nc = g.closed_neighborhood(c);
        let legs: Vec<VertexId> = g.neighbors(c).difference(&na).iter().collect();
        for (i, &v2) in legs.iter().enumerate() {
            for &v4 in &legs[i + 1..] {
                if g.adjacent(v2, v4) {
                    continue;
                }
                for (l, r) in [(v2, v4), (v4, v2)] {
                    let mut c1 = g.neighbors(l).difference(&nc);
                    c1.subtract(&na);
                    c1.subtract(&g.closed_neighborhood(r));
                    for v1 in c1.iter() {
                        let mut c5 = g.neighbors(r).difference(&nc);
                        c5.subtract(&na);
                        c5.subtract(&g.closed_neighborhood(l));
                        c5.subtract(&g.closed_neighborhood(v1));
                        if let Some(v5) = c5.smallest() {
                            return Some(vec![v1, l, c, r, v5, a]);
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn trees_have_peos_and_cycles_are_caught() {
        let t = generate::random_tree(8, 5);
        match check_chordal(&t) {
            Chordality::Chordal { peo } => assert!(validate_peo(&t, &peo)),
            Chordality::NotChordal { .. } => panic!("trees are chordal"),
        }
        let c4 = generate::cycle(4);
        match check_chordal(&c4) {
            Chordality::NotChordal { cycle } => {
                assert_eq!(cycle.len(), 4);
                assert!(validate_chordless_cycle(&c4, &cycle));
            }
            Chordality::Chordal { .. } => panic!("C4 is not chordal"),
        }
    }

    #[test]
    fn b8_has_a_peo_and_the_seven_cliques() {
        let g = generate::bn(8);
        assert!(matches!(check_chordal(&g), Chordality::Chordal { .. }));
        let cliques = maximal_cliques_chordal(&g).unwrap();
        assert_eq!(cliques.len(), 7);
        let expect: Vec<VertexSet> = [
            &["v1", "v2"][..],
            &["a", "v2", "v3"],
            &["v2", "v3", "v4"],
            &["v2", "v4", "v5"],
            &["v2", "v5", "v6"],
            &["v2", "v6", "v7"],
            &["v7", "v8"],
        ]
        .iter()
        .map(|ls| g.set_from_labels(ls.iter().copied()).unwrap())
        .collect();
        for e in &expect {
            assert!(cliques.contains(e), "missing clique {e:?}");
        }
    }

    #[test]
    fn clique_counts() {
        let k5 = generate::complete(5);
        assert_eq!(maximal_cliques_chordal(&k5).unwrap().len(), 1);
        let p4 = generate::path(4);
        let cl = maximal_cliques_chordal(&p4).unwrap();
        assert_eq!(cl.len(), 3);
        assert!(cl.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn asteroidal_triples() {
        assert_eq!(find_asteroidal_triple(&generate::claw()), None);
        assert_eq!(find_asteroidal_triple(&generate::bn(8)), None);
        let spider = generate::spider_1_1_1_subdivided();
        let t = find_asteroidal_triple(&spider).expect("spider tips form an AT");
        assert!(validate_asteroidal_triple(&spider, t));
        let tips = spider.set_from_labels(["a2", "b2", "d2"]).unwrap();
        assert_eq!(VertexSet::of(spider.n(), t), tips);
    }

    #[test]
    fn interval_recognition_certificates() {
        for n in 6..=10 {
            assert!(recognize_interval(&generate::bn(n)).is_positive());
        }
        match recognize_interval(&generate::cycle(5)) {
            IntervalRecognition::NotInterval(IntervalWitness::ChordlessCycle(c)) => {
                assert_eq!(c.len(), 5)
            }
            other => panic!("expected a cycle witness, got {other:?}"),
        }
        match recognize_interval(&generate::spider_1_1_1_subdivided()) {
            IntervalRecognition::NotInterval(IntervalWitness::AsteroidalTriple(t)) => {
                assert!(validate_asteroidal_triple(&generate::spider_1_1_1_subdivided(), t))
            }
            other => panic!("expected an AT witness, got {other:?}"),
        }
    }

    #[test]
    fn clique_path_of_b8_matches_up_to_reversal() {
        let g = generate::bn(8);
        let path = build_clique_path(&g).unwrap().expect("B_8 is interval");
        path.validate(&g).unwrap();
        let first = &path.cliques[0];
        let v1_first = first.contains(g.vertex("v1").unwrap());
        let oriented = if v1_first { path.clone() } else { path.reversed() };
        let seq: Vec<VertexSet> = [
            &["v1", "v2"][..],
            &["a", "v2", "v3"],
            &["v2", "v3", "v4"],
            &["v2", "v4", "v5"],
            &["v2", "v5", "v6"],
            &["v2", "v6", "v7"],
            &["v7", "v8"],
        ]
        .iter()
        .map(|ls| g.set_from_labels(ls.iter().copied()).unwrap())
        .collect();
        assert_eq!(oriented.cliques, seq);
        oriented.reversed().validate(&g).unwrap();
    }

    #[test]
    fn complete_graph_single_clique_path() {
        let g = generate::complete(6);
        let p = build_clique_path(&g).unwrap().unwrap();
        assert_eq!(p.cliques.len(), 1);
    }

    #[test]
    fn chordal_at_graph_has_no_clique_path() {
        let spider = generate::spider_1_1_1_subdivided();
        assert!(build_clique_path(&spider).unwrap().is_none());
        assert!(find_asteroidal_triple(&spider).is_some());
    }

    #[test]
    fn proper_interval_recognition() {
        assert!(recognize_proper_interval(&generate::path(7)).is_positive());
        match recognize_proper_interval(&generate::star122()) {
            ProperRecognition::NotProper(ProperWitness::Claw { center, leaves }) => {
                assert!(validate_claw(&generate::star122(), center, leaves));
            }
            other => panic!("expected a claw witness, got {other:?}"),
        }
        assert!(!recognize_proper_interval(&generate::bn(7)).is_positive());
        if let ProperRecognition::Proper { model, .. } =
            recognize_proper_interval(&generate::complete(4))
        {
            assert!(model.has_distinct_endpoints());
        } else {
            panic!("complete graphs are proper interval");
        }
    }

    #[test]
    fn end_vertices() {
        let p5 = generate::path(5);
        assert!(is_end_vertex(&p5, p5.vertex("v1").unwrap()).unwrap());
        assert!(!is_end_vertex(&p5, p5.vertex("v3").unwrap()).unwrap());

        let bull = generate::bull();
        assert!(!is_end_vertex(&bull, bull.vertex("a").unwrap()).unwrap());

        let k1 = generate::path(1);
        assert!(is_end_vertex(&k1, 0).unwrap());

        let c5 = generate::cycle(5);
        assert!(is_end_vertex(&c5, 0).is_err());
    }

    #[test]
    fn end_simplicial_sets() {
        let p6 = generate::path(6);
        assert_eq!(
            end_simplicial_vertices(&p6).unwrap(),
            p6.set_from_labels(["v1", "v6"]).unwrap()
        );
        let f1 = generate::fig5_1();
        assert_eq!(
            end_simplicial_vertices(&f1).unwrap(),
            f1.set_from_labels(["s1", "q1", "s2"]).unwrap()
        );
        let b8 = generate::bn(8);
        assert_eq!(
            end_simplicial_vertices(&b8).unwrap(),
            b8.set_from_labels(["v1", "v8"]).unwrap()
        );
    }

    #[test]
    fn obstruction_patterns() {
        let bull = generate::bull();
        let a = bull.vertex("a").unwrap();
        let found = end_vertex_obstructions(&bull, a);
        assert!(found.iter().any(|o| o.kind == ObstructionKind::Bull));

        let star = generate::star122();
        let sa = star.vertex("a").unwrap();
        let found = end_vertex_obstructions(&star, sa);
        assert!(found.iter().any(|o| o.kind == ObstructionKind::Star122));

        let p5 = generate::path(5);
        let mid = p5.vertex("v3").unwrap();
        let found = end_vertex_obstructions(&p5, mid);
        assert!(found.iter().any(|o| o.kind == ObstructionKind::CenteredPath5));

        let tip = p5.vertex("v1").unwrap();
        assert!(end_vertex_obstructions(&p5, tip).is_empty());
    }
}
