//! Verification suites behind `wtoll verify <suite>` and the acceptance
//! harness. Every suite embeds its corpus: exhaustive small-graph
//! enumerations are generated on the fly and randomized corpora use fixed
//! seeds, so runs are reproducible without external data.

use rayon::prelude::*;
use serde_json::{json, Value};

use wtoll_core::convexity::{self, ConvexityKind};
use wtoll_core::generate::{
    self, connected_graphs, labeled_trees, random_graph, random_interval_graph, random_tree,
};
use wtoll_core::invariants::{self, GeometryMode, Method};
use wtoll_core::oracle::{self, OracleBudget};
use wtoll_core::recognition;
use wtoll_core::walks::{validate_walk, WalkKind};
use wtoll_core::{Graph, VertexSet};

use crate::render;

pub const SUITE_NAMES: [&str; 8] = [
    "oracle-equivalence",
    "chain",
    "geometry-dichotomy",
    "trees",
    "prop7",
    "thm9",
    "corollary10",
    "paper-examples",
];

/// Outcome of one suite run. `violations` are hard failures of pinned
/// expectations; `discrepancies` are structural-vs-oracle divergences,
/// reported as data but still flagged by the `verify` exit code.
#[derive(Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    pub instances: usize,
    pub checks: usize,
    pub violations: Vec<String>,
    pub discrepancies: Vec<String>,
    pub notes: Vec<String>,
    pub records: Vec<Value>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn clean(&self) -> bool {
        self.violations.is_empty() && self.discrepancies.is_empty()
    }
}

pub fn run_suite(name: &str, jobs: usize, budget: &OracleBudget) -> Option<SuiteReport> {
    let run = || match name {
        "oracle-equivalence" => Some(oracle_equivalence(budget)),
        "chain" => Some(chain(budget)),
        "geometry-dichotomy" => Some(geometry_dichotomy()),
        "trees" => Some(trees(budget)),
        "prop7" => Some(prop7(budget)),
        "thm9" => Some(thm9(budget)),
        "corollary10" => Some(corollary10(budget)),
        "paper-examples" => Some(paper_examples(budget)),
        _ => None,
    };
    if jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(run)
    }
}

fn inline_edges(g: &Graph) -> String {
    let mut parts: Vec<String> = g
        .vertices()
        .filter(|&v| g.degree(v) == 0)
        .map(|v| g.label(v).to_string())
        .collect();
    parts.extend(
        g.edges()
            .map(|(u, v)| format!("{}-{}", g.label(u), g.label(v))),
    );
    parts.join(" ")
}

fn labels_inline(g: &Graph, s: &VertexSet) -> String {
    let ls: Vec<&str> = g.labels_of(s);
    format!("{{{}}}", ls.join(","))
}

/// All connected graphs on one to six labelled vertices.
fn small_connected_corpus() -> Vec<Graph> {
    (1..=6).flat_map(connected_graphs).collect()
}

/// 200 seeded connected random graphs on 7 to 12 vertices.
fn random_connected_corpus(count: usize, seed_base: u64) -> Vec<Graph> {
    let mut out = Vec::with_capacity(count);
    let mut seed = 0u64;
    while out.len() < count {
        let n = 7 + (seed % 6) as usize;
        let p = [25, 40, 55, 70][(seed / 6 % 4) as usize];
        let g = random_graph(n, p, seed_base + seed);
        seed += 1;
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Seeded connected random interval graphs on 2 to 12 vertices, optionally
/// proper, optionally filtered to have no two simplicial twins.
fn interval_corpus(
    count: usize,
    proper: bool,
    twin_simplicial_free: bool,
    seed_base: u64,
) -> Vec<Graph> {
    let mut out = Vec::with_capacity(count);
    let mut seed = 0u64;
    while out.len() < count {
        let n = 2 + (seed % 11) as usize;
        let (g, _) = random_interval_graph(n, proper, seed_base + seed);
        seed += 1;
        if !g.is_connected() {
            continue;
        }
        if twin_simplicial_free && has_twin_simplicials(&g) {
            continue;
        }
        out.push(g);
    }
    out
}

fn has_twin_simplicials(g: &Graph) -> bool {
    g.twin_classes().iter().any(|c| {
        c.len() >= 2 && {
            let mut simplicial = c.iter().filter(|&v| g.is_simplicial(v));
            simplicial.next().is_some() && simplicial.next().is_some()
        }
    })
}

/// All labelled trees on 2..=7 vertices plus 100 seeded random trees on up
/// to 10 vertices.
fn tree_corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = (2..=7).flat_map(labeled_trees).collect();
    for seed in 0..100u64 {
        out.push(random_tree(2 + (seed % 9) as usize, 4000 + seed));
    }
    out
}

/// Production weakly toll and toll intervals equal the oracle on every pair
/// of every corpus graph.
pub fn oracle_equivalence(budget: &OracleBudget) -> SuiteReport {
    let mut report = SuiteReport::new("oracle-equivalence");
    let mut corpus = small_connected_corpus();
    corpus.extend(random_connected_corpus(200, 5000));
    report.instances = corpus.len();
    let results: Vec<(usize, Vec<String>)> = corpus
        .par_iter()
        .map(|g| {
            let mut violations = Vec::new();
            let mut checks = 0;
            for u in g.vertices() {
                for v in u + 1..g.n() {
                    checks += 2;
                    let wt = convexity::interval(g, u, v, ConvexityKind::WeaklyToll).vertices;
                    let owt = oracle::weakly_toll_interval(g, u, v, budget).unwrap();
                    if wt != owt {
                        violations.push(format!(
                            "weakly-toll mismatch on [{}] pair ({},{}): production {} oracle {}",
                            inline_edges(g),
                            g.label(u),
                            g.label(v),
                            labels_inline(g, &wt),
                            labels_inline(g, &owt),
                        ));
                    }
                    let t = convexity::interval(g, u, v, ConvexityKind::Toll).vertices;
                    let ot = oracle::toll_interval(g, u, v, budget).unwrap();
                    if t != ot {
                        violations.push(format!(
                            "toll mismatch on [{}] pair ({},{}): production {} oracle {}",
                            inline_edges(g),
                            g.label(u),
                            g.label(v),
                            labels_inline(g, &t),
                            labels_inline(g, &ot),
                        ));
                    }
                }
            }
            (checks, violations)
        })
        .collect();
    for (checks, violations) in results {
        report.checks += checks;
        report.violations.extend(violations);
    }
    report
}

/// Geodesic ⊆ monophonic ⊆ toll ⊆ weakly toll on every pair of the
/// oracle-equivalence corpus.
pub fn chain(_budget: &OracleBudget) -> SuiteReport {
    let mut report = SuiteReport::new("chain");
    let mut corpus = small_connected_corpus();
    corpus.extend(random_connected_corpus(200, 5000));
    report.instances = corpus.len();
    let results: Vec<(usize, Vec<String>)> = corpus
        .par_iter()
        .map(|g| {
            let mut violations = Vec::new();
            let mut checks = 0;
            for u in g.vertices() {
                for v in u + 1..g.n() {
                    checks += 1;
                    let sets: Vec<VertexSet> = ConvexityKind::ALL
                        .iter()
                        .map(|&k| convexity::interval(g, u, v, k).vertices)
                        .collect();
                    for w in sets.windows(2) {
                        if !w[0].is_subset(&w[1]) {
                            violations.push(format!(
                                "containment broken on [{}] pair ({},{}): {} vs {}",
                                inline_edges(g),
                                g.label(u),
                                g.label(v),
                                labels_inline(g, &w[0]),
                                labels_inline(g, &w[1]),
                            ));
                        }
                    }
                }
            }
            (checks, violations)
        })
        .collect();
    for (checks, violations) in results {
        report.checks += checks;
        report.violations.extend(violations);
    }
    report
}

/// Brute-force Minkowski–Krein–Milman verdict equals proper-interval
/// recognition on every connected graph with at most six vertices.
pub fn geometry_dichotomy() -> SuiteReport {
    let mut report = SuiteReport::new("geometry-dichotomy");
    let corpus = small_connected_corpus();
    report.instances = corpus.len();
    report.checks = corpus.len();
    report.violations = corpus
        .par_iter()
        .filter_map(|g| match invariants::convex_geometry(g, GeometryMode::Both, 12) {
            Ok(_) => None,
            Err(e) => Some(format!("verdicts disagree on [{}]: {e}", inline_edges(g))),
        })
        .collect();
    report
}

/// Structural and oracle invariants are both 2 on every tree.
pub fn trees(budget: &OracleBudget) -> SuiteReport {
    let mut report = SuiteReport::new("trees");
    let corpus = tree_corpus();
    report.instances = corpus.len();
    report.checks = corpus.len() * 4;
    report.violations = corpus
        .par_iter()
        .flat_map_iter(|t| {
            let mut v = Vec::new();
            let sw = invariants::wtn(t, budget).unwrap();
            if sw.value != 2 || sw.method != Method::TreeTheorem || !sw.validated {
                v.push(format!("structural wtn != 2 on tree [{}]", inline_edges(t)));
            }
            let sh = invariants::wth(t, budget).unwrap();
            if sh.value != 2 || !sh.validated {
                v.push(format!("structural wth != 2 on tree [{}]", inline_edges(t)));
            }
            let (ow, _) = oracle::wtn(t, budget).unwrap();
            if ow != 2 {
                v.push(format!("oracle wtn = {ow} on tree [{}]", inline_edges(t)));
            }
            let (oh, _) = oracle::wth(t, budget).unwrap();
            if oh != 2 {
                v.push(format!("oracle wth = {oh} on tree [{}]", inline_edges(t)));
            }
            v
        })
        .collect();
    report
}

/// On proper interval graphs the oracle invariants, the extreme-vertex
/// count, and the end-simplicial count all coincide.
pub fn prop7(budget: &OracleBudget) -> SuiteReport {
    let mut report = SuiteReport::new("prop7");
    let corpus = interval_corpus(50, true, false, 2000);
    report.instances = corpus.len();
    report.checks = corpus.len();
    report.violations = corpus
        .par_iter()
        .filter_map(|g| {
            let (wtn, _) = oracle::wtn(g, budget).unwrap();
            let (wth, _) = oracle::wth(g, budget).unwrap();
            let ext = invariants::ext(g).len();
            let end_simp = recognition::end_simplicial_vertices(g).unwrap().len();
            if wtn == wth && wth == ext && ext == end_simp {
                None
            } else {
                Some(format!(
                    "wtn={wtn} wth={wth} ext={ext} end-simplicial={end_simp} on [{}]",
                    inline_edges(g)
                ))
            }
        })
        .collect();
    report
}

/// On connected interval graphs without twin simplicials: oracle wtn <= 4,
/// oracle wth = 2, and the structural weakly toll number matches the
/// oracle. Mismatches are reported as discrepancies with full certificates
/// and fail the suite.
pub fn thm9(budget: &OracleBudget) -> SuiteReport {
    let mut report = SuiteReport::new("thm9");
    let corpus = interval_corpus(50, false, true, 3000);
    report.instances = corpus.len();
    report.checks = corpus.len() * 3;
    let outcomes: Vec<(Vec<String>, Vec<String>)> = corpus
        .par_iter()
        .map(|g| {
            let mut violations = Vec::new();
            let mut discrepancies = Vec::new();
            let (ow, oset) = oracle::wtn(g, budget).unwrap();
            if ow > 4 {
                violations.push(format!("oracle wtn = {ow} > 4 on [{}]", inline_edges(g)));
            }
            let (oh, _) = oracle::wth(g, budget).unwrap();
            if oh != 2 {
                violations.push(format!("oracle wth = {oh} != 2 on [{}]", inline_edges(g)));
            }
            let sw = invariants::wtn(g, budget).unwrap();
            if sw.value != ow {
                discrepancies.push(format!(
                    "structural wtn {} (method {}, set {}) vs oracle {} (set {}) on [{}]",
                    sw.value,
                    sw.method,
                    labels_inline(g, &sw.witness),
                    ow,
                    labels_inline(g, &oset),
                    inline_edges(g),
                ));
            }
            (violations, discrepancies)
        })
        .collect();
    for (v, d) in outcomes {
        report.violations.extend(v);
        report.discrepancies.extend(d);
    }
    report
}

/// Cross-validates the interval-graph formula (both readings of the helper
/// condition) against the oracle over 100 seeded interval graphs, emitting
/// one full record per graph. Divergences are collected as data with
/// complete counterexample certificates.
pub fn corollary10(budget: &OracleBudget) -> SuiteReport {
    let mut report = SuiteReport::new("corollary10");
    let corpus = interval_corpus(100, false, false, 1000);
    report.instances = corpus.len();
    report.checks = corpus.len();
    let outcomes: Vec<(Value, Vec<String>, Vec<String>)> = corpus
        .par_iter()
        .map(|g| {
            let mut violations = Vec::new();
            let mut discrepancies = Vec::new();
            match invariants::cross_validate_record(g, budget) {
                Ok(rec) => {
                    if !rec.oracle_wtn_valid || !rec.oracle_wth_valid {
                        violations.push(format!(
                            "oracle witness failed re-validation on [{}]",
                            inline_edges(g)
                        ));
                    }
                    for d in &rec.discrepancies {
                        let oracle_set = if d.quantity == "wtn" {
                            &rec.oracle_wtn_set
                        } else {
                            &rec.oracle_wth_set
                        };
                        discrepancies.push(format!(
                            "{}{} structural {} vs oracle {} on [{}] (oracle set {})",
                            d.quantity,
                            d.reading.map(|r| format!(" [{}]", r.name())).unwrap_or_default(),
                            d.structural,
                            d.oracle,
                            inline_edges(g),
                            labels_inline(g, oracle_set),
                        ));
                    }
                    (render::cross_record_json(g, &rec), violations, discrepancies)
                }
                Err(e) => {
                    violations.push(format!(
                        "cross-validation failed on [{}]: {e}",
                        inline_edges(g)
                    ));
                    (json!({"error": e.to_string()}), violations, discrepancies)
                }
            }
        })
        .collect();
    for (record, v, d) in outcomes {
        report.records.push(record);
        report.violations.extend(v);
        report.discrepancies.extend(d);
    }
    report.notes.push(format!(
        "{} of {} graphs diverge between the closed form and the oracle",
        report.discrepancies.len(),
        report.instances
    ));
    report
}

fn expect(report: &mut SuiteReport, what: &str, ok: bool) {
    report.checks += 1;
    if !ok {
        report.violations.push(what.to_string());
    }
}

/// Pinned worked examples: the claw, the three detour-walk certificates,
/// the hub-family clique path, and the two figure graphs with their
/// invariants under both computation routes.
pub fn paper_examples(budget: &OracleBudget) -> SuiteReport {
    let mut report = SuiteReport::new("paper-examples");
    report.instances = 1;

    // claw: {a,b,c} is toll convex but not weakly toll convex, escape d
    let claw = generate::claw();
    let (a, c, d) = (
        claw.vertex("a").unwrap(),
        claw.vertex("c").unwrap(),
        claw.vertex("d").unwrap(),
    );
    let wt = convexity::interval(&claw, a, c, ConvexityKind::WeaklyToll).vertices;
    expect(&mut report, "claw weakly toll interval is everything", wt == claw.full_set());
    let abc = claw.set_from_labels(["a", "b", "c"]).unwrap();
    expect(
        &mut report,
        "claw {a,b,c} is toll convex",
        convexity::is_convex(&claw, &abc, ConvexityKind::Toll),
    );
    let viol = convexity::convexity_violation(&claw, &abc, ConvexityKind::WeaklyToll);
    expect(
        &mut report,
        "claw {a,b,c} weakly toll escape is d",
        viol.map(|v| v.escape) == Some(d),
    );
    let walk: Vec<usize> = ["a", "b", "d", "b", "c"]
        .iter()
        .map(|l| claw.vertex(l).unwrap())
        .collect();
    expect(
        &mut report,
        "claw walk a,b,d,b,c is weakly toll",
        validate_walk(&claw, WalkKind::WeaklyToll, &walk).is_ok(),
    );
    expect(
        &mut report,
        "claw walk a,b,d,b,c is not tolled",
        validate_walk(&claw, WalkKind::Tolled, &walk).is_err(),
    );

    // detour-walk certificates; the designated vertex is never extreme
    let star = generate::star122();
    let star_walk: Vec<usize> = ["v1", "v2", "v3", "a", "v3", "v4", "v5"]
        .iter()
        .map(|l| star.vertex(l).unwrap())
        .collect();
    expect(
        &mut report,
        "star122 detour walk is weakly toll",
        validate_walk(&star, WalkKind::WeaklyToll, &star_walk).is_ok(),
    );
    expect(
        &mut report,
        "star122 apex is not extreme",
        !invariants::ext(&star).contains(star.vertex("a").unwrap()),
    );
    for n in 6..=9 {
        let b = generate::bn(n);
        let walk: Vec<usize> = vec![
            b.vertex("v1").unwrap(),
            b.vertex("v2").unwrap(),
            b.vertex("a").unwrap(),
            b.vertex("v2").unwrap(),
            b.vertex(&format!("v{}", n - 1)).unwrap(),
            b.vertex(&format!("v{n}")).unwrap(),
        ];
        expect(
            &mut report,
            &format!("B_{n} hub walk is weakly toll"),
            validate_walk(&b, WalkKind::WeaklyToll, &walk).is_ok(),
        );
        expect(
            &mut report,
            &format!("B_{n} designated vertex is not extreme"),
            !invariants::ext(&b).contains(b.vertex("a").unwrap()),
        );
    }
    let bull = generate::bull();
    let bull_walk: Vec<usize> = ["v1", "v2", "a", "v3", "v4"]
        .iter()
        .map(|l| bull.vertex(l).unwrap())
        .collect();
    expect(
        &mut report,
        "bull apex walk is weakly toll",
        validate_walk(&bull, WalkKind::WeaklyToll, &bull_walk).is_ok(),
    );
    expect(
        &mut report,
        "bull apex is not extreme",
        !invariants::ext(&bull).contains(bull.vertex("a").unwrap()),
    );

    // the canonical representation of B_8
    let b8 = generate::bn(8);
    let cliques = recognition::maximal_cliques_chordal(&b8).unwrap();
    let expected: Vec<VertexSet> = [
        &["v1", "v2"][..],
        &["a", "v2", "v3"],
        &["v2", "v3", "v4"],
        &["v2", "v4", "v5"],
        &["v2", "v5", "v6"],
        &["v2", "v6", "v7"],
        &["v7", "v8"],
    ]
    .iter()
    .map(|ls| b8.set_from_labels(ls.iter().copied()).unwrap())
    .collect();
    expect(
        &mut report,
        "B_8 has exactly the seven pictured cliques",
        cliques.len() == 7 && expected.iter().all(|c| cliques.contains(c)),
    );
    let path = recognition::build_clique_path(&b8).unwrap().unwrap();
    let fwd = path.cliques == expected;
    let bwd = path.reversed().cliques == expected;
    expect(&mut report, "B_8 clique path matches up to reversal", fwd || bwd);

    // first figure graph
    let f1 = generate::fig5_1();
    let (s1, s2, one, five, q1) = (
        f1.vertex("s1").unwrap(),
        f1.vertex("s2").unwrap(),
        f1.vertex("1").unwrap(),
        f1.vertex("5").unwrap(),
        f1.vertex("q1").unwrap(),
    );
    let wt12 = convexity::interval(&f1, s1, s2, ConvexityKind::WeaklyToll).vertices;
    let mut all_but_1 = f1.full_set();
    all_but_1.remove(one);
    expect(&mut report, "fig5_1 WT(s1,s2) misses exactly vertex 1", wt12 == all_but_1);
    expect(
        &mut report,
        "fig5_1 vertex 1 has no witness walk between s1 and s2",
        convexity::witness_walk(&f1, s1, s2, one, WalkKind::WeaklyToll).is_none(),
    );
    for set in [["s1", "q1", "s2"], ["s1", "1", "s2"]] {
        let s = f1.set_from_labels(set).unwrap();
        expect(
            &mut report,
            &format!("fig5_1 {{{}}} is a weakly toll set", set.join(",")),
            convexity::interval_of_set(&f1, &s, ConvexityKind::WeaklyToll) == f1.full_set(),
        );
    }
    let w = invariants::wtn(&f1, budget).unwrap();
    expect(&mut report, "fig5_1 wtn = 3 by the interval formula", w.value == 3);
    expect(&mut report, "fig5_1 wtn witness spans", w.validated);
    let h = invariants::wth(&f1, budget).unwrap();
    expect(&mut report, "fig5_1 wth = 2", h.value == 2 && h.validated);
    let pair = f1.set_from_labels(["s1", "s2"]).unwrap();
    let trace = convexity::hull(&f1, &pair, ConvexityKind::WeaklyToll);
    expect(&mut report, "fig5_1 {s1,s2} hulls everything", trace.hull() == &f1.full_set());
    expect(
        &mut report,
        "fig5_1 hull of {s1,s2} captures vertex 1 last",
        trace.first_appearance(one) == Some(trace.iterates.len() - 1)
            && trace.iterates.len() == 3,
    );
    // the staged captures described alongside the figure
    let wt15 = convexity::interval(&f1, s1, five, ConvexityKind::WeaklyToll).vertices;
    expect(
        &mut report,
        "fig5_1 s1,5 capture q1 and 2",
        wt15.contains(q1) && wt15.contains(f1.vertex("2").unwrap()),
    );
    let wt1q = convexity::interval(&f1, s1, q1, ConvexityKind::WeaklyToll).vertices;
    expect(&mut report, "fig5_1 s1,q1 capture 1", wt1q.contains(one));

    // second figure graph
    let f2 = generate::fig5_2();
    let w2 = invariants::wtn(&f2, budget).unwrap();
    expect(&mut report, "fig5_2 wtn = 4 by the interval formula", w2.value == 4);
    expect(&mut report, "fig5_2 wtn witness spans", w2.validated);
    let h2 = invariants::wth(&f2, budget).unwrap();
    expect(&mut report, "fig5_2 wth = 2", h2.value == 2 && h2.validated);

    // the named families straddle the proper-interval boundary
    expect(
        &mut report,
        "star122 is not proper interval",
        !recognition::recognize_proper_interval(&star).is_positive(),
    );
    expect(
        &mut report,
        "B_7 is interval but not proper interval",
        recognition::recognize_interval(&generate::bn(7)).is_positive()
            && !recognition::recognize_proper_interval(&generate::bn(7)).is_positive(),
    );
    expect(
        &mut report,
        "star122 as a tree has wtn = wth = 2",
        invariants::wtn(&star, budget).unwrap().value == 2
            && oracle::wtn(&star, budget).unwrap().0 == 2,
    );

    // Pin the oracle values on the figure graphs. Walks may revisit their
    // gates, which lets some nonadjacent pair capture everything; the
    // closed-form answers above stay at the published values, and the
    // corollary10 records carry the full divergence certificates.
    let (of1, of1_set) = oracle::wtn(&f1, budget).unwrap();
    expect(&mut report, "fig5_1 oracle minimum is the gate pair {s1,q1}", {
        of1 == 2 && of1_set == f1.set_from_labels(["s1", "q1"]).unwrap()
    });
    let s2_walk = convexity::witness_walk(&f1, s1, q1, s2, WalkKind::WeaklyToll);
    expect(
        &mut report,
        "fig5_1 gate-revisiting walk from s1 to q1 reaches s2",
        s2_walk.is_some_and(|w| w.validate(&f1).is_ok()),
    );
    let (of2, _) = oracle::wtn(&f2, budget).unwrap();
    expect(&mut report, "fig5_2 oracle minimum is 2", of2 == 2);
    report.notes.push(
        "oracle minima on the figure graphs are 2 (gate-revisiting walks); the interval formula \
         reports the published 3 and 4 — see the corollary10 records"
            .to_string(),
    );
    report
}

/// Extreme vertices of convex sets are simplicial in the induced subgraph;
/// hulls of asteroidal triples and of induced claws have no extreme
/// vertices. Exhaustive over connected graphs on up to five vertices plus
/// asteroidal fixtures and a random sample.
pub fn lemma_suite() -> SuiteReport {
    let mut report = SuiteReport::new("lemmas");
    let mut corpus: Vec<Graph> = (1..=5).flat_map(connected_graphs).collect();
    corpus.push(generate::cycle(6));
    corpus.push(generate::spider_1_1_1_subdivided());
    corpus.push(generate::star122());
    corpus.push(generate::bn(7));
    {
        let mut seed = 0u64;
        let mut added = 0;
        while added < 200 {
            let g = random_graph(6 + (seed % 3) as usize, 30 + (seed % 50) as u32, 7000 + seed);
            seed += 1;
            if g.is_connected() {
                corpus.push(g);
                added += 1;
            }
        }
    }
    report.instances = corpus.len();
    let outcomes: Vec<(usize, Vec<String>)> = corpus
        .par_iter()
        .map(|g| {
            let mut violations = Vec::new();
            let mut checks = 0;
            if g.n() <= 8 {
                for set in convexity::enumerate_convex_sets(g, ConvexityKind::WeaklyToll, 8)
                    .unwrap()
                {
                    let extreme =
                        convexity::extreme_vertices(g, &set, ConvexityKind::WeaklyToll).unwrap();
                    checks += 1;
                    for x in extreme.iter() {
                        if !g.is_simplicial_within(x, &set) {
                            violations.push(format!(
                                "extreme vertex {} of {} is not simplicial in the induced \
                                 subgraph on [{}]",
                                g.label(x),
                                labels_inline(g, &set),
                                inline_edges(g),
                            ));
                        }
                    }
                }
            }
            if let Some(t) = recognition::find_asteroidal_triple(g) {
                checks += 1;
                let hull = convexity::hull(
                    g,
                    &g.set_of(t.iter().copied()),
                    ConvexityKind::WeaklyToll,
                )
                .hull()
                .clone();
                let extreme =
                    convexity::extreme_vertices(g, &hull, ConvexityKind::WeaklyToll).unwrap();
                if !extreme.is_empty() {
                    violations.push(format!(
                        "asteroidal-triple hull has extreme vertices {} on [{}]",
                        labels_inline(g, &extreme),
                        inline_edges(g),
                    ));
                }
            }
            if let Some((center, leaves)) = recognition::find_claw(g) {
                checks += 1;
                let mut claw_set = g.set_of(leaves.iter().copied());
                claw_set.insert(center);
                let hull = convexity::hull(g, &claw_set, ConvexityKind::WeaklyToll)
                    .hull()
                    .clone();
                let extreme =
                    convexity::extreme_vertices(g, &hull, ConvexityKind::WeaklyToll).unwrap();
                if !extreme.is_empty() {
                    violations.push(format!(
                        "claw hull has extreme vertices {} on [{}]",
                        labels_inline(g, &extreme),
                        inline_edges(g),
                    ));
                }
            }
            (checks, violations)
        })
        .collect();
    for (checks, violations) in outcomes {
        report.checks += checks;
        report.violations.extend(violations);
    }
    report
}
