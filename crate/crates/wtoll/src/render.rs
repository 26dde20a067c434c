//! JSON rendering of library results: label arrays for vertex sets, tagged
//! certificates, invariant entries, and cross-validation records.

use serde_json::{json, Value};

use wtoll_core::convexity::{GeometryCounterexample, HullTrace, PairInterval};
use wtoll_core::invariants::{CrossRecord, InvariantValue};
use wtoll_core::model::IntervalModel;
use wtoll_core::recognition::{
    Chordality, CliquePath, IntervalRecognition, IntervalWitness, ProperRecognition,
    ProperWitness,
};
use wtoll_core::walks::WalkWitness;
use wtoll_core::{Graph, VertexSet};

pub fn labels(g: &Graph, s: &VertexSet) -> Value {
    Value::Array(s.iter().map(|v| g.label(v).into()).collect())
}

pub fn vertex_list(g: &Graph, vs: &[usize]) -> Value {
    Value::Array(vs.iter().map(|&v| g.label(v).into()).collect())
}

pub fn interval_json(g: &Graph, u: usize, v: usize, kind: &str, pi: &PairInterval) -> Value {
    json!({
        "kind": kind,
        "u": g.label(u),
        "v": g.label(v),
        "vertices": labels(g, &pi.vertices),
        "connected": pi.connected,
    })
}

pub fn hull_json(g: &Graph, trace: &HullTrace, with_trace: bool) -> Value {
    let mut obj = json!({
        "hull": labels(g, trace.hull()),
        "iterations": trace.iterates.len() - 1,
    });
    if with_trace {
        obj["trace"] = Value::Array(trace.iterates.iter().map(|s| labels(g, s)).collect());
    }
    obj
}

pub fn walk_json(g: &Graph, w: &WalkWitness) -> Value {
    json!({
        "kind": w.kind.to_string(),
        "walk": vertex_list(g, &w.vertices),
    })
}

pub fn model_json(g: &Graph, m: &IntervalModel) -> Value {
    Value::Array(
        m.describe(g)
            .into_iter()
            .map(|(label, l, r)| json!({ "vertex": label, "left": l, "right": r }))
            .collect(),
    )
}

pub fn clique_path_json(g: &Graph, p: &CliquePath) -> Value {
    Value::Array(p.cliques.iter().map(|c| labels(g, c)).collect())
}

pub fn chordality_json(g: &Graph, c: &Chordality) -> Value {
    match c {
        Chordality::Chordal { peo } => json!({
            "class": "chordal",
            "verdict": true,
            "certificate": { "kind": "perfect-elimination-order", "order": vertex_list(g, peo) },
        }),
        Chordality::NotChordal { cycle } => json!({
            "class": "chordal",
            "verdict": false,
            "certificate": { "kind": "chordless-cycle", "cycle": vertex_list(g, cycle) },
        }),
    }
}

pub fn interval_recognition_json(g: &Graph, r: &IntervalRecognition) -> Value {
    match r {
        IntervalRecognition::Interval(path) => json!({
            "class": "interval",
            "verdict": true,
            "certificate": { "kind": "clique-path", "cliques": clique_path_json(g, path) },
        }),
        IntervalRecognition::NotInterval(w) => json!({
            "class": "interval",
            "verdict": false,
            "certificate": interval_witness_json(g, w),
        }),
    }
}

fn interval_witness_json(g: &Graph, w: &IntervalWitness) -> Value {
    match w {
        IntervalWitness::ChordlessCycle(c) => {
            json!({ "kind": "chordless-cycle", "cycle": vertex_list(g, c) })
        }
        IntervalWitness::AsteroidalTriple(t) => {
            json!({ "kind": "asteroidal-triple", "triple": vertex_list(g, &t[..]) })
        }
    }
}

pub fn proper_recognition_json(g: &Graph, r: &ProperRecognition) -> Value {
    match r {
        ProperRecognition::Proper { clique_path, model } => json!({
            "class": "proper-interval",
            "verdict": true,
            "certificate": {
                "kind": "proper-interval-model",
                "intervals": model_json(g, model),
                "cliques": clique_path_json(g, clique_path),
            },
        }),
        ProperRecognition::NotProper(w) => json!({
            "class": "proper-interval",
            "verdict": false,
            "certificate": match w {
                ProperWitness::ChordlessCycle(c) =>
                    json!({ "kind": "chordless-cycle", "cycle": vertex_list(g, c) }),
                ProperWitness::AsteroidalTriple(t) =>
                    json!({ "kind": "asteroidal-triple", "triple": vertex_list(g, &t[..]) }),
                ProperWitness::Claw { center, leaves } => json!({
                    "kind": "claw",
                    "center": g.label(*center),
                    "leaves": vertex_list(g, &leaves[..]),
                }),
            },
        }),
    }
}

pub fn invariant_json(g: &Graph, name: &str, v: &InvariantValue) -> Value {
    json!({
        "invariant": name,
        "value": v.value,
        "method": v.method.name(),
        "witness": labels(g, &v.witness),
        "validated": v.validated,
    })
}

pub fn geometry_counterexample_json(g: &Graph, ce: &GeometryCounterexample) -> Value {
    json!({
        "set": labels(g, &ce.set),
        "extreme": labels(g, &ce.extreme),
        "hull_of_extreme": labels(g, &ce.hull_of_extreme),
    })
}

pub fn cross_record_json(g: &Graph, r: &CrossRecord) -> Value {
    let edges: Vec<Value> = r
        .edges
        .iter()
        .map(|(a, b)| Value::Array(vec![a.as_str().into(), b.as_str().into()]))
        .collect();
    let pairs: Vec<Value> = r
        .pair_outcomes
        .iter()
        .map(|p| {
            json!({
                "pair": [g.label(p.pair.0), g.label(p.pair.1)],
                "readings": p.readings.iter().map(|ro| json!({
                    "reading": ro.reading.name(),
                    "wtn": ro.wtn_value,
                    "set": labels(g, &ro.wtn_set),
                    "covers": ro.covers,
                })).collect::<Vec<_>>(),
                "wth": p.wth_value,
                "wth_set": labels(g, &p.wth_set),
                "wth_hulls": p.wth_hulls,
            })
        })
        .collect();
    let discrepancies: Vec<Value> = r
        .discrepancies
        .iter()
        .map(|d| {
            json!({
                "quantity": d.quantity,
                "reading": d.reading.map(|x| x.name()),
                "structural": d.structural,
                "oracle": d.oracle,
            })
        })
        .collect();
    json!({
        "n": r.n,
        "m": r.m,
        "edges": edges,
        "oracle": {
            "wtn": r.oracle_wtn,
            "wtn_set": labels(g, &r.oracle_wtn_set),
            "wtn_validated": r.oracle_wtn_valid,
            "wth": r.oracle_wth,
            "wth_set": labels(g, &r.oracle_wth_set),
            "wth_validated": r.oracle_wth_valid,
        },
        "structural": {
            "method": r.structural_method.name(),
            "wtn": r.structural_wtn,
            "wth": r.structural_wth,
            "pairs": pairs,
        },
        "discrepancies": discrepancies,
    })
}
