//! The weakly toll number, weakly toll hull number, extreme-vertex set, and
//! convex-geometry verdicts, computed by structural dispatch (trees, proper
//! interval graphs, interval graphs) with an oracle fallback, plus the
//! cross-validation harness that compares every structural answer against
//! the brute-force oracle and reports divergences as data.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::convexity::{
    self, convex_geometry_counterexample, ConvexityKind, GeometryCounterexample,
};
use crate::graph::{Graph, VertexId};
use crate::oracle::{self, OracleBudget, OracleError};
use crate::recognition::{
    clique_path_pinned, end_simplicial_vertices, recognize_proper_interval, NotIntervalError,
    ProperRecognition,
};

/// The set of extreme vertices of the whole graph under the weakly toll
/// convexity.
pub fn ext(g: &Graph) -> VertexSet {
    convexity::extreme_vertices(g, &g.full_set(), ConvexityKind::WeaklyToll)
        .expect("the full vertex set is convex")
}

/// How an invariant value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    TreeTheorem,
    Prop7,
    Prop8,
    Thm9,
    Corollary10,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::TreeTheorem => "tree-theorem",
            Method::Prop7 => "prop7",
            Method::Prop8 => "prop8",
            Method::Thm9 => "thm9",
            Method::Corollary10 => "corollary10",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The two readings of the extra-vertex condition in the interval-graph
/// formula.
///
/// * `Prose`: only when `G - N[s_i]` is disconnected may a helper be added;
///   candidates are end simplicial vertices `q` outside `T(s_i)` with
///   `N[s_i] - N[q]` nonempty, maximizing `|N(q) ∩ N(s_i)|` among such
///   candidates.
/// * `Corollary`: a helper is an end simplicial `q` outside `T(s_i)` whose
///   `|N(q) ∩ N(s_i)|` is maximum over all vertices `v != s_i`, with no
///   further guard.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiReading {
    Prose,
    Corollary,
}

impl SiReading {
    pub const BOTH: [SiReading; 2] = [SiReading::Prose, SiReading::Corollary];

    pub fn name(self) -> &'static str {
        match self {
            SiReading::Prose => "prose",
            SiReading::Corollary => "corollary",
        }
    }
}

/// Outcome of the helper-vertex test on one side of the chosen pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SideCase {
    pub s: VertexId,
    pub complement_connected: bool,
    pub q: Option<VertexId>,
}

/// Result of the closed-form interval-graph computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralInvariants {
    pub pair: (VertexId, VertexId),
    pub twin_union: VertexSet,
    pub sides: [SideCase; 2],
    pub wtn_value: usize,
    pub wtn_set: VertexSet,
    pub wth_value: usize,
    pub wth_set: VertexSet,
    pub method: Method,
}

fn label_pair_key(g: &Graph, a: VertexId, b: VertexId) -> (String, String) {
    use alloc::string::ToString;
    let (la, lb) = (g.label(a).to_string(), g.label(b).to_string());
    if la <= lb {
        (la, lb)
    } else {
        (lb, la)
    }
}

/// End simplicial pairs realizable as the two end cliques of one canonical
/// representation, minimizing `|T(s1) ∪ T(s2)|`; ties ordered by label.
pub fn optimal_end_pairs(g: &Graph) -> Result<Vec<(VertexId, VertexId)>, NotIntervalError> {
    let end_simp = end_simplicial_vertices(g)?;
    let members: Vec<VertexId> = end_simp.iter().collect();
    let mut realizable: Vec<(usize, (VertexId, VertexId))> = Vec::new();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            let ca = g.closed_neighborhood(a);
            let cb = g.closed_neighborhood(b);
            let ok = clique_path_pinned(g, Some(&ca), Some(&cb))
                .expect("interval graphs are chordal")
                .is_some();
            if !ok {
                continue;
            }
            let size = g.twin_class_of(a).union(&g.twin_class_of(b)).len();
            realizable.push((size, (a, b)));
        }
    }
    assert!(
        !realizable.is_empty(),
        "a connected interval graph on >= 2 vertices has an end-clique pair"
    );
    let best = realizable.iter().map(|&(s, _)| s).min().unwrap();
    let mut pairs: Vec<(VertexId, VertexId)> = realizable
        .into_iter()
        .filter(|&(s, _)| s == best)
        .map(|(_, p)| p)
        .collect();
    pairs.sort_by_key(|&(a, b)| label_pair_key(g, a, b));
    Ok(pairs)
}

fn side_case(
    g: &Graph,
    s: VertexId,
    end_simp: &VertexSet,
    reading: SiReading,
) -> SideCase {
    let closed = g.closed_neighborhood(s);
    let complement = g.full_set().difference(&closed);
    let complement_connected = g.components_within(&complement).len() <= 1;
    let twins = g.twin_class_of(s);
    let mut candidates: Vec<VertexId> = end_simp.difference(&twins).iter().collect();
    candidates.sort_by_key(|&q| g.label(q));
    let score = |q: VertexId| g.neighbors(q).intersection(g.neighbors(s)).len();
    let q = match reading {
        SiReading::Prose => {
            if complement_connected {
                None
            } else {
                candidates
                    .into_iter()
                    .filter(|&q| {
                        !g.closed_neighborhood(s)
                            .difference(&g.closed_neighborhood(q))
                            .is_empty()
                    })
                    .max_by_key(|&q| score(q))
            }
        }
        SiReading::Corollary => {
            let global_max = g
                .vertices()
                .filter(|&v| v != s)
                .map(score)
                .max()
                .unwrap_or(0);
            candidates.into_iter().find(|&q| score(q) >= global_max)
        }
    };
    SideCase {
        s,
        complement_connected,
        q,
    }
}

fn structural_for_pair(
    g: &Graph,
    pair: (VertexId, VertexId),
    end_simp: &VertexSet,
    reading: SiReading,
) -> StructuralInvariants {
    let (s1, s2) = pair;
    let twin_union = g.twin_class_of(s1).union(&g.twin_class_of(s2));
    let sides = [
        side_case(g, s1, end_simp, reading),
        side_case(g, s2, end_simp, reading),
    ];
    let mut wtn_set = twin_union.clone();
    for side in &sides {
        if let Some(q) = side.q {
            wtn_set.insert(q);
        }
    }
    let method = if sides.iter().all(|s| s.complement_connected) {
        Method::Prop8
    } else if sides.iter().all(|s| s.q.is_none()) {
        Method::Thm9
    } else {
        Method::Corollary10
    };
    StructuralInvariants {
        pair,
        twin_union: twin_union.clone(),
        sides,
        wtn_value: wtn_set.len(),
        wtn_set,
        wth_value: twin_union.len(),
        wth_set: twin_union,
        method,
    }
}

/// Closed-form weakly toll invariants of a connected interval graph on at
/// least two vertices, under the chosen reading of the helper condition.
pub fn structural_interval_invariants(
    g: &Graph,
    reading: SiReading,
) -> Result<StructuralInvariants, NotIntervalError> {
    let end_simp = end_simplicial_vertices(g)?;
    let pairs = optimal_end_pairs(g)?;
    Ok(structural_for_pair(g, pairs[0], &end_simp, reading))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantError {
    Disconnected,
    Trivial,
    Budget(OracleError),
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::Disconnected => {
                write!(f, "invariants are defined for connected graphs")
            }
            InvariantError::Trivial => {
                write!(f, "invariants are defined for graphs on >= 2 vertices")
            }
            InvariantError::Budget(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for InvariantError {}

/// One computed invariant with its witness and re-validation outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantValue {
    pub value: usize,
    pub method: Method,
    pub witness: VertexSet,
    /// Whether the witness actually spans (wtn) or hulls (wth) the graph
    /// under the production operator.
    pub validated: bool,
}

fn check_connected_nontrivial(g: &Graph) -> Result<(), InvariantError> {
    if g.n() < 2 {
        return Err(InvariantError::Trivial);
    }
    if !g.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    Ok(())
}

fn two_leaves(g: &Graph) -> VertexSet {
    let mut leaves = g.vertices().filter(|&v| g.degree(v) == 1);
    let a = leaves.next().expect("nontrivial trees have leaves");
    let b = leaves.next().expect("nontrivial trees have two leaves");
    g.set_of([a, b])
}

fn spans(g: &Graph, s: &VertexSet) -> bool {
    convexity::interval_of_set(g, s, ConvexityKind::WeaklyToll) == g.full_set()
}

fn hulls(g: &Graph, s: &VertexSet) -> bool {
    convexity::hull(g, s, ConvexityKind::WeaklyToll).hull() == &g.full_set()
}

/// Weakly toll number by structural dispatch: trees, then proper interval
/// graphs, then the interval-graph formula (prose reading), then the oracle.
pub fn wtn(g: &Graph, budget: &OracleBudget) -> Result<InvariantValue, InvariantError> {
    check_connected_nontrivial(g)?;
    if g.is_tree() {
        let witness = two_leaves(g);
        return Ok(InvariantValue {
            value: 2,
            method: Method::TreeTheorem,
            validated: spans(g, &witness),
            witness,
        });
    }
    match recognize_proper_interval(g) {
        ProperRecognition::Proper { .. } => {
            let witness = ext(g);
            return Ok(InvariantValue {
                value: witness.len(),
                method: Method::Prop7,
                validated: spans(g, &witness),
                witness,
            });
        }
        ProperRecognition::NotProper(_) => {}
    }
    if let Ok(st) = structural_interval_invariants(g, SiReading::Prose) {
        return Ok(InvariantValue {
            value: st.wtn_value,
            method: st.method,
            validated: spans(g, &st.wtn_set),
            witness: st.wtn_set,
        });
    }
    let (value, witness) = oracle::wtn(g, budget).map_err(InvariantError::Budget)?;
    Ok(InvariantValue {
        value,
        method: Method::Oracle,
        validated: spans(g, &witness),
        witness,
    })
}

/// Weakly toll hull number by the same dispatch as [`wtn`].
pub fn wth(g: &Graph, budget: &OracleBudget) -> Result<InvariantValue, InvariantError> {
    check_connected_nontrivial(g)?;
    if g.is_tree() {
        let witness = two_leaves(g);
        return Ok(InvariantValue {
            value: 2,
            method: Method::TreeTheorem,
            validated: hulls(g, &witness),
            witness,
        });
    }
    match recognize_proper_interval(g) {
        ProperRecognition::Proper { .. } => {
            let witness = ext(g);
            return Ok(InvariantValue {
                value: witness.len(),
                method: Method::Prop7,
                validated: hulls(g, &witness),
                witness,
            });
        }
        ProperRecognition::NotProper(_) => {}
    }
    if let Ok(st) = structural_interval_invariants(g, SiReading::Prose) {
        return Ok(InvariantValue {
            value: st.wth_value,
            method: if st.sides.iter().all(|s| s.complement_connected) {
                Method::Prop8
            } else if st.wth_set.len() == 2 {
                Method::Thm9
            } else {
                Method::Corollary10
            },
            validated: hulls(g, &st.wth_set),
            witness: st.wth_set,
        });
    }
    let (value, witness) = oracle::wth(g, budget).map_err(InvariantError::Budget)?;
    Ok(InvariantValue {
        value,
        method: Method::Oracle,
        validated: hulls(g, &witness),
        witness,
    })
}

/// Invariants of one graph, with the extreme vertices and any validation
/// notes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub wtn: InvariantValue,
    pub wth: InvariantValue,
    pub ext: VertexSet,
    pub notes: Vec<String>,
}

pub fn report(g: &Graph, budget: &OracleBudget) -> Result<InvariantReport, InvariantError> {
    let wtn = wtn(g, budget)?;
    let wth = wth(g, budget)?;
    let ext = ext(g);
    let mut notes = Vec::new();
    if !wtn.validated {
        notes.push(format!(
            "wtn witness by {} does not span the graph",
            wtn.method
        ));
    }
    if !wth.validated {
        notes.push(format!(
            "wth witness by {} does not hull the graph",
            wth.method
        ));
    }
    Ok(InvariantReport { wtn, wth, ext, notes })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryMode {
    Structural,
    Bruteforce,
    Both,
}

#[derive(Debug, Clone)]
pub struct GeometryEvidence {
    pub is_geometry: bool,
    pub structural: Option<ProperRecognition>,
    pub bruteforce: Option<Option<GeometryCounterexample>>,
}

#[derive(Debug, Clone)]
pub enum GeometryError {
    TooLarge(convexity::TooLarge),
    /// The recognition route and the enumeration route disagree.
    Divergence(GeometryEvidence),
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::TooLarge(t) => write!(f, "{t}"),
            GeometryError::Divergence(_) => {
                write!(f, "structural and brute-force geometry verdicts disagree")
            }
        }
    }
}

/// Is the weakly toll convexity of `g` a convex geometry? Structural mode
/// answers by proper-interval recognition; brute-force mode checks the
/// Minkowski–Krein–Milman property over all convex sets; `Both` runs the
/// two and treats disagreement as a hard failure.
pub fn convex_geometry(
    g: &Graph,
    mode: GeometryMode,
    limit: usize,
) -> Result<GeometryEvidence, GeometryError> {
    let structural = match mode {
        GeometryMode::Structural | GeometryMode::Both => Some(recognize_proper_interval(g)),
        GeometryMode::Bruteforce => None,
    };
    let bruteforce = match mode {
        GeometryMode::Bruteforce | GeometryMode::Both => Some(
            convex_geometry_counterexample(g, ConvexityKind::WeaklyToll, limit)
                .map_err(GeometryError::TooLarge)?,
        ),
        GeometryMode::Structural => None,
    };
    let verdicts = (
        structural.as_ref().map(|r| r.is_positive()),
        bruteforce.as_ref().map(|c| c.is_none()),
    );
    let is_geometry = match verdicts {
        (Some(s), Some(b)) if s != b => {
            return Err(GeometryError::Divergence(GeometryEvidence {
                is_geometry: false,
                structural,
                bruteforce,
            }));
        }
        (Some(s), _) => s,
        (None, Some(b)) => b,
        (None, None) => unreachable!("some mode always runs"),
    };
    Ok(GeometryEvidence {
        is_geometry,
        structural,
        bruteforce,
    })
}

/// Structural outcome of one reading on one end pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadingOutcome {
    pub reading: SiReading,
    pub wtn_value: usize,
    pub wtn_set: VertexSet,
    /// Does the constructed set actually span the graph?
    pub covers: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOutcome {
    pub pair: (VertexId, VertexId),
    pub readings: Vec<ReadingOutcome>,
    pub wth_value: usize,
    pub wth_set: VertexSet,
    pub wth_hulls: bool,
}

/// A structural answer that differs from the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub quantity: &'static str,
    pub reading: Option<SiReading>,
    pub structural: usize,
    pub oracle: usize,
}

/// Full comparison record for one graph: oracle invariants with
/// re-validated witnesses, the structural answers that apply to the
/// graph's class, and the collected discrepancies.
#[derive(Debug, Clone)]
pub struct CrossRecord {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(String, String)>,
    pub oracle_wtn: usize,
    pub oracle_wtn_set: VertexSet,
    pub oracle_wtn_valid: bool,
    pub oracle_wth: usize,
    pub oracle_wth_set: VertexSet,
    pub oracle_wth_valid: bool,
    pub structural_method: Method,
    pub structural_wtn: Option<usize>,
    pub structural_wth: Option<usize>,
    pub pair_outcomes: Vec<PairOutcome>,
    pub discrepancies: Vec<Discrepancy>,
}

/// Compares structural and oracle invariants on one graph. Discrepancies
/// are data, not errors: each is recorded with both answers, and the
/// witness sets carried by the record serve as certificates.
pub fn cross_validate_record(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<CrossRecord, InvariantError> {
    use alloc::string::ToString;
    check_connected_nontrivial(g)?;
    let (owtn, owtn_set) = oracle::wtn(g, budget).map_err(InvariantError::Budget)?;
    let (owth, owth_set) = oracle::wth(g, budget).map_err(InvariantError::Budget)?;
    let mut discrepancies = Vec::new();
    let mut pair_outcomes = Vec::new();
    let mut structural_wtn = None;
    let mut structural_wth = None;

    let structural_method = if g.is_tree() {
        structural_wtn = Some(2);
        structural_wth = Some(2);
        Method::TreeTheorem
    } else if recognize_proper_interval(g).is_positive() {
        let e = ext(g).len();
        structural_wtn = Some(e);
        structural_wth = Some(e);
        Method::Prop7
    } else if let Ok(pairs) = optimal_end_pairs(g) {
        let end_simp = end_simplicial_vertices(g).expect("interval established");
        let mut method = Method::Prop8;
        for (which, &pair) in pairs.iter().enumerate() {
            let mut readings = Vec::new();
            let mut wth_value = 0;
            let mut wth_set = g.empty_set();
            for reading in SiReading::BOTH {
                let st = structural_for_pair(g, pair, &end_simp, reading);
                if which == 0 && reading == SiReading::Prose {
                    structural_wtn = Some(st.wtn_value);
                    structural_wth = Some(st.wth_value);
                    method = st.method;
                }
                wth_value = st.wth_value;
                wth_set = st.wth_set.clone();
                readings.push(ReadingOutcome {
                    reading,
                    wtn_value: st.wtn_value,
                    covers: spans(g, &st.wtn_set),
                    wtn_set: st.wtn_set,
                });
            }
            pair_outcomes.push(PairOutcome {
                pair,
                readings,
                wth_value,
                wth_hulls: hulls(g, &wth_set),
                wth_set,
            });
        }
        // compare every reading on the primary pair
        if let Some(first) = pair_outcomes.first() {
            for r in &first.readings {
                if r.wtn_value != owtn {
                    discrepancies.push(Discrepancy {
                        quantity: "wtn",
                        reading: Some(r.reading),
                        structural: r.wtn_value,
                        oracle: owtn,
                    });
                }
            }
            if first.wth_value != owth {
                discrepancies.push(Discrepancy {
                    quantity: "wth",
                    reading: None,
                    structural: first.wth_value,
                    oracle: owth,
                });
            }
        }
        method
    } else {
        Method::Oracle
    };

    match structural_method {
        Method::TreeTheorem | Method::Prop7 => {
            if let Some(s) = structural_wtn {
                if s != owtn {
                    discrepancies.push(Discrepancy {
                        quantity: "wtn",
                        reading: None,
                        structural: s,
                        oracle: owtn,
                    });
                }
            }
            if let Some(s) = structural_wth {
                if s != owth {
                    discrepancies.push(Discrepancy {
                        quantity: "wth",
                        reading: None,
                        structural: s,
                        oracle: owth,
                    });
                }
            }
        }
        _ => {}
    }

    let edges = g
        .edges()
        .map(|(u, v)| (g.label(u).to_string(), g.label(v).to_string()))
        .collect();
    Ok(CrossRecord {
        n: g.n(),
        m: g.edge_count(),
        edges,
        oracle_wtn: owtn,
        oracle_wtn_valid: spans(g, &owtn_set),
        oracle_wtn_set: owtn_set,
        oracle_wth: owth,
        oracle_wth_valid: hulls(g, &owth_set),
        oracle_wth_set: owth_set,
        structural_method,
        structural_wtn,
        structural_wth,
        pair_outcomes,
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn budget() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn ext_examples() {
        let k4 = generate::complete(4);
        assert_eq!(ext(&k4), k4.full_set());
        let claw = generate::claw();
        assert_eq!(ext(&claw), claw.empty_set());
        let p5 = generate::path(5);
        assert_eq!(ext(&p5), p5.set_from_labels(["v1", "v5"]).unwrap());
    }

    #[test]
    fn ext_equals_end_simplicials_on_proper_interval_graphs() {
        for seed in 0..12u64 {
            let n = 2 + (seed as usize % 9);
            let (g, _) = generate::random_interval_graph(n, true, 600 + seed);
            if !g.is_connected() {
                continue;
            }
            assert_eq!(
                ext(&g),
                end_simplicial_vertices(&g).unwrap(),
                "graph {g:?}"
            );
        }
    }

    #[test]
    fn tree_dispatch() {
        let t = generate::random_tree(9, 4);
        let w = wtn(&t, &budget()).unwrap();
        assert_eq!((w.value, w.method), (2, Method::TreeTheorem));
        assert!(w.validated);
        let h = wth(&t, &budget()).unwrap();
        assert_eq!((h.value, h.method), (2, Method::TreeTheorem));
        assert!(h.validated);
    }

    #[test]
    fn proper_interval_dispatch_matches_oracle() {
        for seed in 0..10u64 {
            let (g, _) = generate::random_interval_graph(2 + (seed as usize % 8), true, 900 + seed);
            if !g.is_connected() {
                continue;
            }
            let w = wtn(&g, &budget()).unwrap();
            // paths dispatch to the tree rule first; both closed forms agree
            assert!(matches!(w.method, Method::Prop7 | Method::TreeTheorem));
            assert!(w.validated);
            assert_eq!(w.value, oracle::wtn(&g, &budget()).unwrap().0);
        }
    }

    #[test]
    fn contract_errors() {
        let split = Graph::from_edges([("1", "2"), ("3", "4")]).unwrap();
        assert_eq!(wtn(&split, &budget()), Err(InvariantError::Disconnected));
        let k1 = generate::path(1);
        assert_eq!(wtn(&k1, &budget()), Err(InvariantError::Trivial));
    }

    #[test]
    fn structural_readings_on_the_figure_graphs() {
        let f1 = generate::fig5_1();
        let prose = structural_interval_invariants(&f1, SiReading::Prose).unwrap();
        assert_eq!(prose.wtn_value, 3);
        assert_eq!(
            prose.wtn_set,
            f1.set_from_labels(["s1", "q1", "s2"]).unwrap()
        );
        assert_eq!(prose.wth_value, 2);
        let lit = structural_interval_invariants(&f1, SiReading::Corollary).unwrap();
        assert_eq!(lit.wtn_value, 2);

        let f2 = generate::fig5_2();
        let prose2 = structural_interval_invariants(&f2, SiReading::Prose).unwrap();
        assert_eq!(prose2.wtn_value, 4);
        assert_eq!(
            prose2.wtn_set,
            f2.set_from_labels(["s1", "q1", "q2", "s2"]).unwrap()
        );
        assert_eq!(prose2.wth_value, 2);
        let lit2 = structural_interval_invariants(&f2, SiReading::Corollary).unwrap();
        assert_eq!(lit2.wtn_value, 4);
    }

    #[test]
    fn complete_graph_degenerates_to_n() {
        let g = generate::complete(5);
        let w = wtn(&g, &budget()).unwrap();
        assert_eq!(w.value, 5);
        assert_eq!(w.method, Method::Prop7);
        assert!(w.validated);
    }

    #[test]
    fn geometry_modes_agree_on_examples() {
        for (g, expect) in [
            (generate::path(6), true),
            (generate::claw(), false),
            (generate::cycle(4), false),
            (generate::complete(4), true),
        ] {
            let e = convex_geometry(&g, GeometryMode::Both, 12).unwrap();
            assert_eq!(e.is_geometry, expect, "graph {g:?}");
        }
    }

    #[test]
    fn cross_record_on_fig5_1_documents_the_gap() {
        let g = generate::fig5_1();
        let rec = cross_validate_record(&g, &budget()).unwrap();
        assert_eq!(rec.oracle_wtn, 2);
        assert!(rec.oracle_wtn_valid);
        assert_eq!(rec.oracle_wth, 2);
        assert!(rec.oracle_wth_valid);
        assert_eq!(rec.structural_wtn, Some(3));
        assert_eq!(rec.structural_wth, Some(2));
        assert!(rec
            .discrepancies
            .iter()
            .any(|d| d.quantity == "wtn" && d.structural == 3 && d.oracle == 2));
    }

    #[test]
    fn cross_record_on_trees_is_clean() {
        for seed in 0..10u64 {
            let t = generate::random_tree(2 + (seed as usize % 8), 70 + seed);
            let rec = cross_validate_record(&t, &budget()).unwrap();
            assert!(rec.discrepancies.is_empty(), "tree {t:?}");
        }
    }
}
