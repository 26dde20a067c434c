//! Walk witnesses and the standalone validator for tolled and weakly toll
//! walks.
//!
//! A walk `u, w1, ..., wk, v` between distinct nonadjacent `u` and `v` with
//! `k >= 1` is *weakly toll* when every interior vertex adjacent to `u` is
//! `w1` and every interior vertex adjacent to `v` is `wk`; `w1` and `wk` may
//! appear several times. It is *tolled* when additionally `w1` and `wk` occur
//! exactly once.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkKind {
    Tolled,
    WeaklyToll,
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkKind::Tolled => write!(f, "tolled"),
            WalkKind::WeaklyToll => write!(f, "weakly-toll"),
        }
    }
}

/// A concrete vertex sequence, endpoints included, certifying interval
/// membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkWitness {
    pub kind: WalkKind,
    pub vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkError {
    TooShort,
    EqualEndpoints,
    AdjacentEndpoints,
    NotAWalk { position: usize },
    StartBreaksGate { position: usize },
    EndBreaksGate { position: usize },
    GateRepeats { gate: VertexId },
}

impl fmt::Display for WalkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkError::TooShort => write!(f, "walk needs at least one interior vertex"),
            WalkError::EqualEndpoints => write!(f, "walk endpoints coincide"),
            WalkError::AdjacentEndpoints => write!(f, "walk endpoints are adjacent"),
            WalkError::NotAWalk { position } => {
                write!(f, "vertices at positions {position},{} are not adjacent", position + 1)
            }
            WalkError::StartBreaksGate { position } => write!(
                f,
                "interior vertex at position {position} is adjacent to the start but is not the first interior vertex"
            ),
            WalkError::EndBreaksGate { position } => write!(
                f,
                "interior vertex at position {position} is adjacent to the end but is not the last interior vertex"
            ),
            WalkError::GateRepeats { gate } => {
                write!(f, "tolled walk repeats gate vertex {gate}")
            }
        }
    }
}

impl core::error::Error for WalkError {}

impl WalkWitness {
    pub fn new(kind: WalkKind, vertices: Vec<VertexId>) -> Self {
        WalkWitness { kind, vertices }
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().expect("walks are nonempty")
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.vertices.contains(&x)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), WalkError> {
        validate_walk(g, self.kind, &self.vertices)
    }
}

/// Checks `vertices` (endpoints included) against the walk conditions.
pub fn validate_walk(g: &Graph, kind: WalkKind, vertices: &[VertexId]) -> Result<(), WalkError> {
    if vertices.len() < 3 {
        return Err(WalkError::TooShort);
    }
    let u = vertices[0];
    let v = vertices[vertices.len() - 1];
    if u == v {
        return Err(WalkError::EqualEndpoints);
    }
    if g.adjacent(u, v) {
        return Err(WalkError::AdjacentEndpoints);
    }
    for (i, w) in vertices.windows(2).enumerate() {
        if !g.adjacent(w[0], w[1]) {
            return Err(WalkError::NotAWalk { position: i });
        }
    }
    let interior = &vertices[1..vertices.len() - 1];
    let first_gate = interior[0];
    let last_gate = interior[interior.len() - 1];
    for (i, &w) in interior.iter().enumerate() {
        if g.adjacent(u, w) && w != first_gate {
            return Err(WalkError::StartBreaksGate { position: i + 1 });
        }
        if g.adjacent(v, w) && w != last_gate {
            return Err(WalkError::EndBreaksGate { position: i + 1 });
        }
    }
    if kind == WalkKind::Tolled {
        if interior.iter().filter(|&&w| w == first_gate).count() != 1 {
            return Err(WalkError::GateRepeats { gate: first_gate });
        }
        if interior.iter().filter(|&&w| w == last_gate).count() != 1 {
            return Err(WalkError::GateRepeats { gate: last_gate });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn ids(g: &Graph, labels: &[&str]) -> Vec<VertexId> {
        labels.iter().map(|l| g.vertex(l).unwrap()).collect()
    }

    #[test]
    fn claw_walk_is_weakly_toll_but_not_tolled() {
        let g = Graph::from_edges([("b", "a"), ("b", "c"), ("b", "d")]).unwrap();
        let walk = ids(&g, &["a", "b", "d", "b", "c"]);
        assert_eq!(validate_walk(&g, WalkKind::WeaklyToll, &walk), Ok(()));
        assert!(matches!(
            validate_walk(&g, WalkKind::Tolled, &walk),
            Err(WalkError::GateRepeats { .. })
        ));
    }

    #[test]
    fn rejects_adjacent_endpoints_and_broken_walks() {
        let g = Graph::from_edges([("1", "2"), ("2", "3"), ("3", "4")]).unwrap();
        let adj = ids(&g, &["1", "2", "3", "2"]);
        assert_eq!(
            validate_walk(&g, WalkKind::WeaklyToll, &adj),
            Err(WalkError::AdjacentEndpoints)
        );
        let broken = ids(&g, &["1", "2", "4", "3"]);
        assert!(matches!(
            validate_walk(&g, WalkKind::WeaklyToll, &broken),
            Err(WalkError::NotAWalk { .. })
        ));
    }

    #[test]
    fn geodesic_is_both_kinds() {
        let g = Graph::from_edges([("1", "2"), ("2", "3"), ("3", "4")]).unwrap();
        let walk = ids(&g, &["1", "2", "3", "4"]);
        assert_eq!(validate_walk(&g, WalkKind::Tolled, &walk), Ok(()));
        assert_eq!(validate_walk(&g, WalkKind::WeaklyToll, &walk), Ok(()));
    }

    #[test]
    fn endpoint_gate_conditions() {
        // P5 with a chord from 1 to 3: interior vertex 3 is adjacent to the
        // start but differs from the first interior vertex.
        let g = Graph::from_edges([("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("1", "3")])
            .unwrap();
        let walk = ids(&g, &["1", "2", "3", "4", "5"]);
        assert!(matches!(
            validate_walk(&g, WalkKind::WeaklyToll, &walk),
            Err(WalkError::StartBreaksGate { .. })
        ));
    }
}
