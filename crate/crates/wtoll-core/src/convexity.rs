//! The four interval operators and everything built on top of them: set
//! intervals, hull fixpoints, convexity tests, extreme vertices, convex-set
//! enumeration, and the Minkowski–Krein–Milman brute-force check.
//!
//! For nonadjacent `u`, `v` the toll and weakly toll intervals are computed
//! by gate-pair decomposition. Writing `A` for the vertices outside both
//! closed neighborhoods, a walk's interior lives in `A` plus its gates, so:
//!
//! * a common neighbor `w` of `u` and `v` captures the component of `w` in
//!   `G[A + w]` (weakly toll) or `w` alone (tolled);
//! * a pair `w1 in N(u)\N(v)`, `wk in N(v)\N(u)` captures, when `w1` and
//!   `wk` lie in one component of `G[A + w1 + wk]`, that whole component
//!   (weakly toll), or `w1`, `wk` and the components of `G[A]` adjacent to
//!   both (tolled, where gates cannot repeat).
//!
//! Pairs that are equal, adjacent, or in different components get the
//! interval `{u, v}`; the `connected` flag distinguishes the last case.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::graph::{Graph, VertexId};
use crate::walks::{WalkKind, WalkWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConvexityKind {
    Geodesic,
    Monophonic,
    Toll,
    WeaklyToll,
}

impl ConvexityKind {
    pub const ALL: [ConvexityKind; 4] = [
        ConvexityKind::Geodesic,
        ConvexityKind::Monophonic,
        ConvexityKind::Toll,
        ConvexityKind::WeaklyToll,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConvexityKind::Geodesic => "geodesic",
            ConvexityKind::Monophonic => "monophonic",
            ConvexityKind::Toll => "toll",
            ConvexityKind::WeaklyToll => "weakly-toll",
        }
    }
}

impl fmt::Display for ConvexityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Interval of a vertex pair. `connected` is false exactly when the
/// endpoints lie in different components, in which case the interval is the
/// bare pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairInterval {
    pub vertices: VertexSet,
    pub connected: bool,
}

pub fn interval(g: &Graph, u: VertexId, v: VertexId, kind: ConvexityKind) -> PairInterval {
    assert!(u < g.n() && v < g.n());
    if u == v {
        return PairInterval {
            vertices: VertexSet::singleton(g.n(), u),
            connected: true,
        };
    }
    if g.adjacent(u, v) {
        return PairInterval {
            vertices: VertexSet::of(g.n(), [u, v]),
            connected: true,
        };
    }
    if !g.reachable_within(u, &g.full_set()).contains(v) {
        return PairInterval {
            vertices: VertexSet::of(g.n(), [u, v]),
            connected: false,
        };
    }
    let vertices = match kind {
        ConvexityKind::Geodesic => geodesic_interval(g, u, v),
        ConvexityKind::Monophonic => monophonic_interval(g, u, v),
        ConvexityKind::Toll => capture_interval(g, u, v, false),
        ConvexityKind::WeaklyToll => capture_interval(g, u, v, true),
    };
    PairInterval {
        vertices,
        connected: true,
    }
}

fn geodesic_interval(g: &Graph, u: VertexId, v: VertexId) -> VertexSet {
    let du = g.bfs_distances(u);
    let dv = g.bfs_distances(v);
    let d = du[v];
    let mut out = g.empty_set();
    for x in g.vertices() {
        if du[x] != usize::MAX && dv[x] != usize::MAX && du[x] + dv[x] == d {
            out.insert(x);
        }
    }
    out
}

/// Backtracking enumeration of induced `u..v` paths, pruned by reachability
/// of `v` inside the still-unconstrained region.
fn monophonic_interval(g: &Graph, u: VertexId, v: VertexId) -> VertexSet {
    struct Search<'a> {
        g: &'a Graph,
        target: VertexId,
        on_path: VertexSet,
    }

    fn dfs(s: &mut Search, path: &mut Vec<VertexId>, closed_prior: &VertexSet) {
        let last = *path.last().unwrap();
        let candidates = s.g.neighbors(last).difference(closed_prior);
        for z in candidates.iter() {
            if z == s.target {
                for &p in path.iter() {
                    s.on_path.insert(p);
                }
                s.on_path.insert(z);
                continue;
            }
            let mut blocked = closed_prior.clone();
            blocked.union_with(&s.g.closed_neighborhood(last));
            let mut open = blocked.complement();
            if !open.contains(s.target) {
                continue;
            }
            open.insert(z);
            if !s.g.reachable_within(z, &open).contains(s.target) {
                continue;
            }
            path.push(z);
            dfs(s, path, &blocked);
            path.pop();
        }
    }

    let mut s = Search {
        g,
        target: v,
        on_path: g.empty_set(),
    };
    let mut path = vec![u];
    dfs(&mut s, &mut path, &g.empty_set());
    s.on_path
}

/// Base region and gate candidates shared by the walk operators.
struct Gates {
    base: VertexSet,
    comps: Vec<VertexSet>,
    /// Per component, the set of vertices outside it with a neighbor inside.
    comp_fringe: Vec<VertexSet>,
    common: VertexSet,
    only_u: VertexSet,
    only_v: VertexSet,
}

fn gates(g: &Graph, u: VertexId, v: VertexId) -> Gates {
    let nu = g.neighbors(u);
    let nv = g.neighbors(v);
    let mut base = g.full_set();
    base.subtract(nu);
    base.subtract(nv);
    base.remove(u);
    base.remove(v);
    let comps = g.components_within(&base);
    let comp_fringe = comps
        .iter()
        .map(|c| {
            let mut f = g.empty_set();
            for x in c.iter() {
                f.union_with(g.neighbors(x));
            }
            f.subtract(c);
            f
        })
        .collect();
    Gates {
        base,
        comps,
        comp_fringe,
        common: nu.intersection(nv),
        only_u: nu.difference(nv),
        only_v: nv.difference(nu),
    }
}

fn capture_interval(g: &Graph, u: VertexId, v: VertexId, weakly: bool) -> VertexSet {
    let gt = gates(g, u, v);
    let mut out = VertexSet::of(g.n(), [u, v]);
    for w in gt.common.iter() {
        out.insert(w);
        if weakly {
            for (c, f) in gt.comps.iter().zip(&gt.comp_fringe) {
                if f.contains(w) {
                    out.union_with(c);
                }
            }
        }
    }
    for w1 in gt.only_u.iter() {
        for wk in gt.only_v.iter() {
            let direct = g.adjacent(w1, wk);
            let shared = gt
                .comp_fringe
                .iter()
                .any(|f| f.contains(w1) && f.contains(wk));
            if !direct && !shared {
                continue;
            }
            out.insert(w1);
            out.insert(wk);
            for (c, f) in gt.comps.iter().zip(&gt.comp_fringe) {
                let touched = if weakly {
                    f.contains(w1) || f.contains(wk)
                } else {
                    f.contains(w1) && f.contains(wk)
                };
                if touched {
                    out.union_with(c);
                }
            }
        }
    }
    out
}

/// Union of the pairwise intervals over all unordered pairs of `s`
/// (singletons contribute themselves).
pub fn interval_of_set(g: &Graph, s: &VertexSet, kind: ConvexityKind) -> VertexSet {
    let mut out = s.clone();
    let members: Vec<VertexId> = s.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            out.union_with(&interval(g, u, v, kind).vertices);
        }
    }
    out
}

/// The iterates of `interval_of_set` up to the least fixpoint.
/// `iterates[0]` is the input set; the last entry is the hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullTrace {
    pub iterates: Vec<VertexSet>,
}

impl HullTrace {
    pub fn hull(&self) -> &VertexSet {
        self.iterates.last().expect("trace is never empty")
    }

    /// Iteration index at which `x` first appears, if ever.
    pub fn first_appearance(&self, x: VertexId) -> Option<usize> {
        self.iterates.iter().position(|s| s.contains(x))
    }
}

pub fn hull(g: &Graph, s: &VertexSet, kind: ConvexityKind) -> HullTrace {
    let mut iterates = vec![s.clone()];
    loop {
        let next = interval_of_set(g, iterates.last().unwrap(), kind);
        if &next == iterates.last().unwrap() {
            break;
        }
        iterates.push(next);
    }
    HullTrace { iterates }
}

/// A pair of `s` whose interval escapes `s`, together with one escaping
/// vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvexityViolation {
    pub u: VertexId,
    pub v: VertexId,
    pub escape: VertexId,
}

/// `None` iff `s` is convex; otherwise the first violating pair in id order.
pub fn convexity_violation(
    g: &Graph,
    s: &VertexSet,
    kind: ConvexityKind,
) -> Option<ConvexityViolation> {
    let members: Vec<VertexId> = s.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let escaped = interval(g, u, v, kind).vertices.difference(s);
            if let Some(x) = escaped.smallest() {
                return Some(ConvexityViolation { u, v, escape: x });
            }
        }
    }
    None
}

pub fn is_convex(g: &Graph, s: &VertexSet, kind: ConvexityKind) -> bool {
    convexity_violation(g, s, kind).is_none()
}

/// Contract failure for operations that require a convex input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotConvex(pub ConvexityViolation);

impl fmt::Display for NotConvex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "set is not convex: interval of ({}, {}) leaks {}",
            self.0.u, self.0.v, self.0.escape
        )
    }
}

impl core::error::Error for NotConvex {}

/// Members of the convex set `c` whose removal leaves a convex set.
pub fn extreme_vertices(
    g: &Graph,
    c: &VertexSet,
    kind: ConvexityKind,
) -> Result<VertexSet, NotConvex> {
    if let Some(v) = convexity_violation(g, c, kind) {
        return Err(NotConvex(v));
    }
    let mut out = g.empty_set();
    for x in c.iter() {
        let mut rest = c.clone();
        rest.remove(x);
        if is_convex(g, &rest, kind) {
            out.insert(x);
        }
    }
    Ok(out)
}

fn bfs_path(g: &Graph, from: VertexId, to: VertexId, allowed: &VertexSet) -> Option<Vec<VertexId>> {
    debug_assert!(allowed.contains(from) && allowed.contains(to));
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

fn checked(g: &Graph, kind: WalkKind, vertices: Vec<VertexId>) -> WalkWitness {
    let w = WalkWitness::new(kind, vertices);
    w.validate(g).expect("reconstructed walk must validate");
    w
}

/// A concrete walk through `x` certifying `x` in the toll or weakly toll
/// interval of `(u, v)`, when one exists. Membership that holds only by the
/// equal/adjacent/disconnected-pair conventions has no walk and yields
/// `None`. Walks are validator-checked and have length at most `2n + 2`.
pub fn witness_walk(
    g: &Graph,
    u: VertexId,
    v: VertexId,
    x: VertexId,
    kind: WalkKind,
) -> Option<WalkWitness> {
    let ckind = match kind {
        WalkKind::Tolled => ConvexityKind::Toll,
        WalkKind::WeaklyToll => ConvexityKind::WeaklyToll,
    };
    let pi = interval(g, u, v, ckind);
    if !pi.vertices.contains(x) || !pi.connected || u == v || g.adjacent(u, v) {
        return None;
    }
    if x == u || x == v {
        let path = bfs_path(g, u, v, &g.full_set()).expect("connected pair");
        return Some(checked(g, kind, path));
    }
    let gt = gates(g, u, v);
    if gt.common.contains(x) {
        return Some(checked(g, kind, vec![u, x, v]));
    }
    match kind {
        WalkKind::WeaklyToll => {
            for w in gt.common.iter() {
                let mut allowed = gt.base.clone();
                allowed.insert(w);
                if !g.reachable_within(w, &allowed).contains(x) {
                    continue;
                }
                let out = bfs_path(g, w, x, &allowed).expect("reachable");
                let mut walk = vec![u];
                walk.extend(&out);
                walk.extend(out.iter().rev().skip(1));
                walk.push(v);
                return Some(checked(g, kind, walk));
            }
            for w1 in gt.only_u.iter() {
                for wk in gt.only_v.iter() {
                    let mut allowed = gt.base.clone();
                    allowed.insert(w1);
                    allowed.insert(wk);
                    let reach = g.reachable_within(w1, &allowed);
                    if !reach.contains(wk) || !reach.contains(x) {
                        continue;
                    }
                    let p1 = bfs_path(g, w1, x, &allowed).expect("reachable");
                    let p2 = bfs_path(g, x, wk, &allowed).expect("reachable");
                    let mut walk = vec![u];
                    walk.extend(&p1);
                    walk.extend(&p2[1..]);
                    walk.push(v);
                    return Some(checked(g, kind, walk));
                }
            }
        }
        WalkKind::Tolled => {
            for w1 in gt.only_u.iter() {
                for wk in gt.only_v.iter() {
                    let direct = g.adjacent(w1, wk);
                    let shared: Vec<usize> = (0..gt.comps.len())
                        .filter(|&i| gt.comp_fringe[i].contains(w1) && gt.comp_fringe[i].contains(wk))
                        .collect();
                    if !direct && shared.is_empty() {
                        continue;
                    }
                    if x == w1 || x == wk {
                        let walk = if direct {
                            vec![u, w1, wk, v]
                        } else {
                            let c = &gt.comps[shared[0]];
                            let mut allowed = c.clone();
                            allowed.insert(w1);
                            allowed.insert(wk);
                            let p = bfs_path(g, w1, wk, &allowed).expect("shared component");
                            let mut walk = vec![u];
                            walk.extend(&p);
                            walk.push(v);
                            walk
                        };
                        return Some(checked(g, kind, walk));
                    }
                    for &ci in &shared {
                        let c = &gt.comps[ci];
                        if !c.contains(x) {
                            continue;
                        }
                        let mut a1 = c.clone();
                        a1.insert(w1);
                        let p1 = bfs_path(g, w1, x, &a1).expect("component");
                        let mut a2 = c.clone();
                        a2.insert(wk);
                        let p2 = bfs_path(g, x, wk, &a2).expect("component");
                        let mut walk = vec![u];
                        walk.extend(&p1);
                        walk.extend(&p2[1..]);
                        walk.push(v);
                        return Some(checked(g, kind, walk));
                    }
                }
            }
        }
    }
    unreachable!("vertex in interval admits a witness walk")
}

/// Enumeration refused because the graph exceeds the subset-search bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TooLarge {
    pub n: usize,
    pub limit: usize,
}

impl fmt::Display for TooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph has {} vertices, above the enumeration bound {}",
            self.n, self.limit
        )
    }
}

impl core::error::Error for TooLarge {}

pub const DEFAULT_ENUMERATION_BOUND: usize = 12;

/// All pair intervals of a small graph as bit masks; the workhorse behind
/// subset enumeration.
pub struct PairTable {
    n: usize,
    masks: Vec<u64>,
}

impl PairTable {
    pub fn build(g: &Graph, kind: ConvexityKind) -> Option<PairTable> {
        let n = g.n();
        if n > 63 {
            return None;
        }
        let mut masks = vec![0u64; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let m = interval(g, u, v, kind)
                    .vertices
                    .as_mask()
                    .expect("n <= 63");
                masks[u * n + v] = m;
                masks[v * n + u] = m;
            }
        }
        Some(PairTable { n, masks })
    }

    pub fn is_convex(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut others = rest;
            while others != 0 {
                let v = others.trailing_zeros() as usize;
                others &= others - 1;
                if self.masks[u * self.n + v] & !mask != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn spread(&self, mask: u64) -> u64 {
        let mut out = mask;
        let mut rest = mask;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut others = rest;
            while others != 0 {
                let v = others.trailing_zeros() as usize;
                others &= others - 1;
                out |= self.masks[u * self.n + v];
            }
        }
        out
    }

    pub fn hull(&self, mask: u64) -> u64 {
        let mut cur = mask;
        loop {
            let next = self.spread(cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn extreme(&self, convex_mask: u64) -> u64 {
        let mut out = 0u64;
        let mut rest = convex_mask;
        while rest != 0 {
            let x = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if self.is_convex(convex_mask & !x) {
                out |= x;
            }
        }
        out
    }
}

/// All convex sets, by subset enumeration, sorted by size then
/// lexicographically.
pub fn enumerate_convex_sets(
    g: &Graph,
    kind: ConvexityKind,
    limit: usize,
) -> Result<Vec<VertexSet>, TooLarge> {
    let n = g.n();
    if n > limit || n > 63 {
        return Err(TooLarge { n, limit });
    }
    let table = PairTable::build(g, kind).expect("n <= 63");
    let mut out = Vec::new();
    for mask in 0u64..1 << n {
        if table.is_convex(mask) {
            out.push(VertexSet::from_mask(n, mask));
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// A convex set that is not the hull of its extreme vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometryCounterexample {
    pub set: VertexSet,
    pub extreme: VertexSet,
    pub hull_of_extreme: VertexSet,
}

/// Checks the Minkowski–Krein–Milman property over every convex set;
/// returns the smallest violator (size, then lexicographic) if any.
pub fn convex_geometry_counterexample(
    g: &Graph,
    kind: ConvexityKind,
    limit: usize,
) -> Result<Option<GeometryCounterexample>, TooLarge> {
    let n = g.n();
    if n > limit || n > 63 {
        return Err(TooLarge { n, limit });
    }
    let table = PairTable::build(g, kind).expect("n <= 63");
    let mut convex: Vec<u64> = (0u64..1 << n).filter(|&m| table.is_convex(m)).collect();
    convex.sort_by_key(|&m| {
        (
            m.count_ones(),
            core::cmp::Reverse(m.reverse_bits()),
        )
    });
    for mask in convex {
        let extreme = table.extreme(mask);
        let hulled = table.hull(extreme);
        if hulled != mask {
            return Ok(Some(GeometryCounterexample {
                set: VertexSet::from_mask(n, mask),
                extreme: VertexSet::from_mask(n, extreme),
                hull_of_extreme: VertexSet::from_mask(n, hulled),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        g.set_from_labels(labels.iter().copied()).unwrap()
    }

    fn pair(g: &Graph, a: &str, b: &str, kind: ConvexityKind) -> PairInterval {
        interval(g, g.vertex(a).unwrap(), g.vertex(b).unwrap(), kind)
    }

    #[test]
    fn claw_intervals() {
        let g = generate::claw();
        let wt = pair(&g, "a", "c", ConvexityKind::WeaklyToll);
        assert_eq!(wt.vertices, g.full_set());
        let t = pair(&g, "a", "c", ConvexityKind::Toll);
        assert_eq!(t.vertices, set(&g, &["a", "b", "c"]));
        let i = pair(&g, "a", "c", ConvexityKind::Geodesic);
        assert_eq!(i.vertices, set(&g, &["a", "b", "c"]));
    }

    #[test]
    fn adjacent_and_equal_pairs_are_trivial() {
        let g = generate::fig5_1();
        for kind in ConvexityKind::ALL {
            let pi = pair(&g, "s1", "1", kind);
            assert_eq!(pi.vertices, set(&g, &["s1", "1"]));
            let u = g.vertex("3").unwrap();
            assert_eq!(interval(&g, u, u, kind).vertices, g.set_of([u]));
        }
    }

    #[test]
    fn disconnected_pairs_are_flagged() {
        let g = Graph::from_edges([("1", "2"), ("3", "4")]).unwrap();
        for kind in ConvexityKind::ALL {
            let pi = pair(&g, "1", "3", kind);
            assert!(!pi.connected);
            assert_eq!(pi.vertices, set(&g, &["1", "3"]));
        }
    }

    #[test]
    fn fig5_1_weakly_toll_interval_misses_only_vertex_1() {
        let g = generate::fig5_1();
        let wt = pair(&g, "s1", "s2", ConvexityKind::WeaklyToll);
        let mut expect = g.full_set();
        expect.remove(g.vertex("1").unwrap());
        assert_eq!(wt.vertices, expect);
    }

    #[test]
    fn path_toll_interval_spans_everything() {
        let g = generate::path(5);
        let t = pair(&g, "v1", "v5", ConvexityKind::Toll);
        assert_eq!(t.vertices, g.full_set());
    }

    #[test]
    fn cycle_intervals() {
        let c4 = generate::cycle(4);
        let i = pair(&c4, "v1", "v3", ConvexityKind::Geodesic);
        assert_eq!(i.vertices, c4.full_set());
        let c5 = generate::cycle(5);
        let j = pair(&c5, "v1", "v3", ConvexityKind::Monophonic);
        assert_eq!(j.vertices, c5.full_set());
    }

    #[test]
    fn interval_of_set_basics() {
        let g = generate::path(4);
        let single = set(&g, &["v2"]);
        assert_eq!(interval_of_set(&g, &single, ConvexityKind::WeaklyToll), single);
        let full = g.full_set();
        assert_eq!(interval_of_set(&g, &full, ConvexityKind::WeaklyToll), full);
    }

    #[test]
    fn two_leaves_of_a_tree_span_it() {
        let g = generate::random_tree(9, 42);
        let leaves: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
        let s = g.set_of([leaves[0], leaves[1]]);
        assert_eq!(interval_of_set(&g, &s, ConvexityKind::WeaklyToll), g.full_set());
    }

    #[test]
    fn hull_trace_on_fig5_1() {
        let g = generate::fig5_1();
        let tr = hull(&g, &set(&g, &["s1", "s2"]), ConvexityKind::WeaklyToll);
        assert_eq!(tr.hull(), &g.full_set());
        assert_eq!(tr.iterates.len(), 3);
        assert_eq!(
            tr.iterates[1],
            set(&g, &["s1", "s2", "2", "3", "4", "5", "q1"])
        );
        let one = g.vertex("1").unwrap();
        assert_eq!(tr.first_appearance(one), Some(2));
    }

    #[test]
    fn hull_of_convex_set_has_unit_trace() {
        let g = generate::complete(4);
        let s = set(&g, &["v1", "v2"]);
        let tr = hull(&g, &s, ConvexityKind::WeaklyToll);
        assert_eq!(tr.iterates.len(), 1);
        assert_eq!(tr.hull(), &s);
    }

    #[test]
    fn claw_pair_hull_is_everything() {
        let g = generate::claw();
        let tr = hull(&g, &set(&g, &["a", "c"]), ConvexityKind::WeaklyToll);
        assert_eq!(tr.hull(), &g.full_set());
    }

    #[test]
    fn claw_convexity_split() {
        let g = generate::claw();
        let s = set(&g, &["a", "b", "c"]);
        assert!(is_convex(&g, &s, ConvexityKind::Toll));
        let viol = convexity_violation(&g, &s, ConvexityKind::WeaklyToll).unwrap();
        assert_eq!(viol.escape, g.vertex("d").unwrap());
        assert!(is_convex(&g, &g.empty_set(), ConvexityKind::WeaklyToll));
        assert!(is_convex(&g, &g.full_set(), ConvexityKind::WeaklyToll));
    }

    #[test]
    fn cliques_are_convex_under_every_kind() {
        let g = generate::fig5_1();
        let clique = set(&g, &["1", "2", "3"]);
        assert!(g.is_clique(&clique));
        for kind in ConvexityKind::ALL {
            assert!(is_convex(&g, &clique, kind));
        }
    }

    #[test]
    fn extreme_vertices_examples() {
        let g = generate::complete(5);
        assert_eq!(
            extreme_vertices(&g, &g.full_set(), ConvexityKind::WeaklyToll).unwrap(),
            g.full_set()
        );

        let claw = generate::claw();
        let hullset = hull(&claw, &claw.full_set(), ConvexityKind::WeaklyToll);
        assert_eq!(
            extreme_vertices(&claw, hullset.hull(), ConvexityKind::WeaklyToll).unwrap(),
            claw.empty_set()
        );

        let p6 = generate::path(6);
        let ends = set(&p6, &["v1", "v6"]);
        assert_eq!(
            extreme_vertices(&p6, &p6.full_set(), ConvexityKind::WeaklyToll).unwrap(),
            ends
        );

        let bad = set(&claw, &["a", "b", "c"]);
        assert!(extreme_vertices(&claw, &bad, ConvexityKind::WeaklyToll).is_err());
    }

    #[test]
    fn witness_walks() {
        let g = generate::star122();
        let (v1, v5, a) = (
            g.vertex("v1").unwrap(),
            g.vertex("v5").unwrap(),
            g.vertex("a").unwrap(),
        );
        let w = witness_walk(&g, v1, v5, a, WalkKind::WeaklyToll).unwrap();
        assert!(w.contains(a));
        assert_eq!(w.validate(&g), Ok(()));

        let trivial = witness_walk(&g, v1, v5, v1, WalkKind::WeaklyToll).unwrap();
        assert!(trivial.contains(v1));

        let f = generate::fig5_1();
        let (s1, s2, one) = (
            f.vertex("s1").unwrap(),
            f.vertex("s2").unwrap(),
            f.vertex("1").unwrap(),
        );
        assert_eq!(witness_walk(&f, s1, s2, one, WalkKind::WeaklyToll), None);

        // tolled witnesses transit components of the base region
        let p5 = generate::path(5);
        let (a1, a5, a3) = (
            p5.vertex("v1").unwrap(),
            p5.vertex("v5").unwrap(),
            p5.vertex("v3").unwrap(),
        );
        let t = witness_walk(&p5, a1, a5, a3, WalkKind::Tolled).unwrap();
        assert!(t.contains(a3));
    }

    #[test]
    fn enumerate_small_graphs() {
        let k2 = generate::complete(2);
        let sets = enumerate_convex_sets(&k2, ConvexityKind::WeaklyToll, 12).unwrap();
        assert_eq!(sets.len(), 4);
        assert_eq!(sets[0], k2.empty_set());
        assert_eq!(sets[3], k2.full_set());

        let claw = generate::claw();
        let sets = enumerate_convex_sets(&claw, ConvexityKind::WeaklyToll, 12).unwrap();
        let abc = set(&claw, &["a", "b", "c"]);
        assert!(!sets.contains(&abc));
        assert!(sets.contains(&claw.empty_set()));
        assert!(sets.contains(&claw.full_set()));

        assert!(enumerate_convex_sets(&generate::path(13), ConvexityKind::Geodesic, 12).is_err());
    }

    #[test]
    fn geometry_bruteforce_examples() {
        let p4 = generate::path(4);
        assert!(convex_geometry_counterexample(&p4, ConvexityKind::WeaklyToll, 12)
            .unwrap()
            .is_none());

        let claw = generate::claw();
        let ce = convex_geometry_counterexample(&claw, ConvexityKind::WeaklyToll, 12)
            .unwrap()
            .unwrap();
        assert_ne!(ce.hull_of_extreme, ce.set);

        let c4 = generate::cycle(4);
        assert!(convex_geometry_counterexample(&c4, ConvexityKind::WeaklyToll, 12)
            .unwrap()
            .is_some());
    }
}
