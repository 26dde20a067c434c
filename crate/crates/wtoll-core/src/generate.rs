//! Graph generators: the named fixture families, random interval graphs with
//! their models, random trees, and exhaustive small-graph enumeration.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphBuilder};
use crate::model::IntervalModel;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenerateError {
    UnknownFamily { name: String },
    BadParams { name: String, reason: String },
}

impl fmt::Display for GenerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenerateError::UnknownFamily { name } => write!(f, "unknown graph family '{name}'"),
            GenerateError::BadParams { name, reason } => {
                write!(f, "bad parameters for '{name}': {reason}")
            }
        }
    }
}

impl core::error::Error for GenerateError {}

fn bad(name: &str, reason: &str) -> GenerateError {
    GenerateError::BadParams {
        name: name.to_string(),
        reason: reason.to_string(),
    }
}

fn expect_params(name: &str, params: &[usize], want: usize) -> Result<(), GenerateError> {
    if params.len() != want {
        return Err(bad(
            name,
            &format!("expected {want} integer parameter(s), got {}", params.len()),
        ));
    }
    Ok(())
}

/// Families addressable by name: `path`, `cycle`, `complete`, `claw`, `bull`,
/// `star122`, `bn`, `fig5_1`, `fig5_2`.
pub fn generate_named(name: &str, params: &[usize]) -> Result<Graph, GenerateError> {
    match name {
        "path" => {
            expect_params(name, params, 1)?;
            if params[0] < 1 {
                return Err(bad(name, "need n >= 1"));
            }
            Ok(path(params[0]))
        }
        "cycle" => {
            expect_params(name, params, 1)?;
            if params[0] < 3 {
                return Err(bad(name, "need n >= 3"));
            }
            Ok(cycle(params[0]))
        }
        "complete" => {
            expect_params(name, params, 1)?;
            if params[0] < 1 {
                return Err(bad(name, "need n >= 1"));
            }
            Ok(complete(params[0]))
        }
        "claw" => {
            expect_params(name, params, 0)?;
            Ok(claw())
        }
        "bull" => {
            expect_params(name, params, 0)?;
            Ok(bull())
        }
        "star122" => {
            expect_params(name, params, 0)?;
            Ok(star122())
        }
        "bn" => {
            expect_params(name, params, 1)?;
            if params[0] <= 5 {
                return Err(bad(name, "need n > 5"));
            }
            Ok(bn(params[0]))
        }
        "fig5_1" => {
            expect_params(name, params, 0)?;
            Ok(fig5_1())
        }
        "fig5_2" => {
            expect_params(name, params, 0)?;
            Ok(fig5_2())
        }
        _ => Err(GenerateError::UnknownFamily {
            name: name.to_string(),
        }),
    }
}

fn vlabel(i: usize) -> String {
    format!("v{i}")
}

pub fn path(n: usize) -> Graph {
    let mut b = GraphBuilder::new();
    b.vertex(&vlabel(1)).unwrap();
    for i in 1..n {
        b.edge(&vlabel(i), &vlabel(i + 1)).unwrap();
    }
    b.build()
}

pub fn cycle(n: usize) -> Graph {
    let mut b = GraphBuilder::new();
    for i in 1..n {
        b.edge(&vlabel(i), &vlabel(i + 1)).unwrap();
    }
    b.edge(&vlabel(n), &vlabel(1)).unwrap();
    b.build()
}

pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new();
    b.vertex(&vlabel(1)).unwrap();
    for i in 1..=n {
        for j in i + 1..=n {
            b.edge(&vlabel(i), &vlabel(j)).unwrap();
        }
    }
    b.build()
}

/// `K_{1,3}` on labels `a,b,c,d` with `b` the center.
pub fn claw() -> Graph {
    Graph::from_edges([("a", "b"), ("b", "c"), ("b", "d")]).unwrap()
}

/// The bull: path `v1-v2-v3-v4` plus apex `a` adjacent to `v2` and `v3`.
pub fn bull() -> Graph {
    Graph::from_edges([("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v2", "a"), ("a", "v3")]).unwrap()
}

/// Path `v1..v5` with `a` attached to `v3`.
pub fn star122() -> Graph {
    Graph::from_edges([
        ("v1", "v2"),
        ("v2", "v3"),
        ("v3", "v4"),
        ("v4", "v5"),
        ("v3", "a"),
    ])
    .unwrap()
}

/// `B_n` (n > 5): hub `v2` adjacent to `v1`, `a`, and `v3..v_{n-1}`; `a` also
/// adjacent to `v3`; chain `v3-v4-...-v_n`.
pub fn bn(n: usize) -> Graph {
    assert!(n > 5, "bn needs n > 5");
    let mut b = GraphBuilder::new();
    b.edge("v1", "v2").unwrap();
    b.edge("v2", "a").unwrap();
    b.edge("a", "v3").unwrap();
    for i in 3..n {
        b.edge("v2", &vlabel(i)).unwrap();
    }
    for i in 3..n {
        b.edge(&vlabel(i), &vlabel(i + 1)).unwrap();
    }
    b.build()
}

/// Eight vertices, eleven edges; the interval graph whose minimum weakly
/// toll sets are discussed alongside `fig5_2`.
pub fn fig5_1() -> Graph {
    Graph::from_edges([
        ("s1", "1"),
        ("s1", "3"),
        ("1", "2"),
        ("1", "3"),
        ("2", "3"),
        ("2", "q1"),
        ("q1", "3"),
        ("3", "4"),
        ("3", "5"),
        ("4", "5"),
        ("4", "s2"),
    ])
    .unwrap()
}

/// Nine vertices, thirteen edges.
pub fn fig5_2() -> Graph {
    Graph::from_edges([
        ("s1", "1"),
        ("s1", "2"),
        ("1", "2"),
        ("1", "q1"),
        ("q1", "2"),
        ("2", "3"),
        ("2", "5"),
        ("5", "3"),
        ("3", "4"),
        ("3", "q2"),
        ("3", "s2"),
        ("4", "q2"),
        ("4", "s2"),
    ])
    .unwrap()
}

/// Spider with three legs of length two: the subdivided claw, smallest tree
/// with an asteroidal triple at its leaf tips.
pub fn spider_1_1_1_subdivided() -> Graph {
    Graph::from_edges([
        ("c", "a1"),
        ("a1", "a2"),
        ("c", "b1"),
        ("b1", "b2"),
        ("c", "d1"),
        ("d1", "d2"),
    ])
    .unwrap()
}

fn graph_from_model(n: usize, intervals: &[(i64, i64)]) -> Graph {
    let mut b = GraphBuilder::new();
    for i in 0..n {
        b.vertex(&vlabel(i + 1)).unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            let (li, ri) = intervals[i];
            let (lj, rj) = intervals[j];
            if li <= rj && lj <= ri {
                b.edge(&vlabel(i + 1), &vlabel(j + 1)).unwrap();
            }
        }
    }
    b.build()
}

/// Samples `count` distinct integers from `0..=limit`.
fn distinct_ints(rng: &mut ChaCha8Rng, count: usize, limit: usize) -> Vec<i64> {
    assert!(count <= limit + 1);
    let mut pool: Vec<i64> = (0..=limit as i64).collect();
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let j = rng.gen_range(k..pool.len());
        pool.swap(k, j);
        out.push(pool[k]);
    }
    out
}

/// Draws `n` intervals with pairwise distinct endpoints (all of one length
/// when `proper` is set) and returns the intersection graph plus its model.
/// Deterministic for a fixed seed.
pub fn random_interval_graph(n: usize, proper: bool, seed: u64) -> (Graph, IntervalModel) {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let intervals: Vec<(i64, i64)> = if proper {
        // Equal lengths forbid containment; doubling with an odd length
        // keeps every endpoint distinct.
        let len = rng.gen_range(1..=2 * n as i64);
        let centers = distinct_ints(&mut rng, n, 4 * n);
        centers.iter().map(|&c| (2 * c, 2 * (c + len) + 1)).collect()
    } else {
        let ends = distinct_ints(&mut rng, 2 * n, 4 * n);
        ends.chunks(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect()
    };
    let g = graph_from_model(n, &intervals);
    (g, IntervalModel::new(intervals))
}

/// Erdős–Rényi graph with edge probability `p_percent / 100`; deterministic
/// for a fixed seed.
pub fn random_graph(n: usize, p_percent: u32, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new();
    for i in 1..=n {
        b.vertex(&vlabel(i)).unwrap();
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_range(0..100u32) < p_percent {
                b.edge(&vlabel(i), &vlabel(j)).unwrap();
            }
        }
    }
    b.build()
}

fn tree_from_pruefer(n: usize, seq: &[usize]) -> Graph {
    debug_assert_eq!(seq.len(), n.saturating_sub(2));
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut b = GraphBuilder::new();
    for i in 0..n {
        b.vertex(&vlabel(i + 1)).unwrap();
    }
    let mut used = vec![false; n];
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1 && !used[v]).unwrap();
        used[leaf] = true;
        b.edge(&vlabel(leaf + 1), &vlabel(s + 1)).unwrap();
        degree[s] -= 1;
        degree[leaf] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1 && !used[v]);
    let (x, y) = (last.next().unwrap(), last.next().unwrap());
    b.edge(&vlabel(x + 1), &vlabel(y + 1)).unwrap();
    b.build()
}

/// Uniformly random labelled tree on `n >= 1` vertices via its Prüfer
/// sequence; deterministic for a fixed seed.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return path(1);
    }
    if n == 2 {
        return path(2);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_pruefer(n, &seq)
}

/// All `n^(n-2)` labelled trees on `n >= 2` vertices.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 2);
    let total: u64 = if n == 2 { 1 } else { (n as u64).pow(n as u32 - 2) };
    (0..total).map(move |code| {
        let mut c = code;
        let seq: Vec<usize> = (0..n.saturating_sub(2))
            .map(|_| {
                let d = (c % n as u64) as usize;
                c /= n as u64;
                d
            })
            .collect();
        tree_from_pruefer(n, &seq)
    })
}

/// All graphs on `n` labelled vertices (`2^(n(n-1)/2)` of them), by edge mask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    assert!(pairs.len() < 63, "too many vertices to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.vertex(&vlabel(i + 1)).unwrap();
        }
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                b.edge(&vlabel(i + 1), &vlabel(j + 1)).unwrap();
            }
        }
        b.build()
    })
}

/// The connected graphs among [`all_graphs`].
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(|g| g.is_connected())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::{validate_walk, WalkKind};
    use alloc::format;

    #[test]
    fn named_families_have_expected_sizes() {
        assert_eq!(path(3).edge_count(), 2);
        assert_eq!(cycle(5).edge_count(), 5);
        assert_eq!(complete(4).edge_count(), 6);
        assert_eq!(claw().n(), 4);
        assert_eq!(bull().n(), 5);
        assert_eq!(star122().n(), 6);
        let b8 = bn(8);
        assert_eq!(b8.n(), 9);
        let f1 = fig5_1();
        assert_eq!((f1.n(), f1.edge_count()), (8, 11));
        let f2 = fig5_2();
        assert_eq!((f2.n(), f2.edge_count()), (9, 13));
    }

    #[test]
    fn generate_named_validates_params() {
        assert!(generate_named("path", &[4]).is_ok());
        assert!(matches!(
            generate_named("bn", &[5]),
            Err(GenerateError::BadParams { .. })
        ));
        assert!(matches!(
            generate_named("frobnicate", &[]),
            Err(GenerateError::UnknownFamily { .. })
        ));
        assert!(generate_named("claw", &[3]).is_err());
    }

    #[test]
    fn bull_apex_is_simplicial() {
        let g = bull();
        assert!(g.is_simplicial(g.vertex("a").unwrap()));
    }

    #[test]
    fn star122_admits_the_detour_walk() {
        let g = star122();
        let walk: Vec<_> = ["v1", "v2", "v3", "a", "v3", "v4", "v5"]
            .iter()
            .map(|l| g.vertex(l).unwrap())
            .collect();
        assert_eq!(validate_walk(&g, WalkKind::WeaklyToll, &walk), Ok(()));
    }

    #[test]
    fn bn_admits_the_hub_walk_for_all_small_n() {
        for n in 6..=12 {
            let g = bn(n);
            let walk: Vec<_> = ["v1", "v2", "a", "v2"]
                .iter()
                .map(|l| g.vertex(l).unwrap())
                .chain([
                    g.vertex(&format!("v{}", n - 1)).unwrap(),
                    g.vertex(&format!("v{n}")).unwrap(),
                ])
                .collect();
            assert_eq!(
                validate_walk(&g, WalkKind::WeaklyToll, &walk),
                Ok(()),
                "hub walk fails in B_{n}"
            );
        }
    }

    #[test]
    fn random_interval_graph_is_deterministic_and_sound() {
        for seed in 0..20u64 {
            let n = 1 + (seed as usize % 12);
            let (g, m) = random_interval_graph(n, seed % 2 == 0, seed);
            let (g2, m2) = random_interval_graph(n, seed % 2 == 0, seed);
            assert_eq!(m, m2);
            assert_eq!(g.edge_count(), g2.edge_count());
            m.validate_for(&g).unwrap();
            assert!(m.has_distinct_endpoints());
            if seed % 2 == 0 {
                m.validate_proper().unwrap();
            }
        }
    }

    #[test]
    fn single_interval_is_k1() {
        let (g, _) = random_interval_graph(1, true, 7);
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn pruefer_trees_are_trees() {
        assert_eq!(labeled_trees(2).count(), 1);
        assert_eq!(labeled_trees(4).count(), 16);
        for t in labeled_trees(5) {
            assert!(t.is_tree());
        }
        for seed in 0..10 {
            assert!(random_tree(2 + seed as usize % 9, seed).is_tree());
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(connected_graphs(3).count(), 4);
        assert_eq!(connected_graphs(4).count(), 38);
    }
}
