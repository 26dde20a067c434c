//! Interval models: one closed interval with integer endpoints per vertex.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexId};

/// Closed intervals `[left, right]` on a line, indexed by vertex id. In a
/// valid model two vertices are adjacent exactly when their intervals meet;
/// a proper model additionally has no interval contained in another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalModel {
    intervals: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    WrongSize { vertices: usize, intervals: usize },
    Inverted { vertex: VertexId },
    EdgeMismatch { u: VertexId, v: VertexId, adjacent: bool },
    Containment { inner: VertexId, outer: VertexId },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::WrongSize { vertices, intervals } => {
                write!(f, "{intervals} intervals for {vertices} vertices")
            }
            ModelError::Inverted { vertex } => write!(f, "interval of vertex {vertex} is inverted"),
            ModelError::EdgeMismatch { u, v, adjacent } => write!(
                f,
                "vertices {u},{v} are {}adjacent but their intervals {}intersect",
                if *adjacent { "" } else { "non" },
                if *adjacent { "do not " } else { "" },
            ),
            ModelError::Containment { inner, outer } => {
                write!(f, "interval of vertex {inner} lies inside that of {outer}")
            }
        }
    }
}

impl core::error::Error for ModelError {}

impl IntervalModel {
    pub fn new(intervals: Vec<(i64, i64)>) -> Self {
        IntervalModel { intervals }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn interval(&self, v: VertexId) -> (i64, i64) {
        self.intervals[v]
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    pub fn intersects(&self, u: VertexId, v: VertexId) -> bool {
        let (lu, ru) = self.intervals[u];
        let (lv, rv) = self.intervals[v];
        lu <= rv && lv <= ru
    }

    /// Checks that intersections reproduce the edges of `g` exactly.
    pub fn validate_for(&self, g: &Graph) -> Result<(), ModelError> {
        if self.intervals.len() != g.n() {
            return Err(ModelError::WrongSize {
                vertices: g.n(),
                intervals: self.intervals.len(),
            });
        }
        for v in g.vertices() {
            let (l, r) = self.intervals[v];
            if l > r {
                return Err(ModelError::Inverted { vertex: v });
            }
        }
        for u in g.vertices() {
            for v in u + 1..g.n() {
                if self.intersects(u, v) != g.adjacent(u, v) {
                    return Err(ModelError::EdgeMismatch {
                        u,
                        v,
                        adjacent: g.adjacent(u, v),
                    });
                }
            }
        }
        Ok(())
    }

    /// Checks that no interval is contained in another.
    pub fn validate_proper(&self) -> Result<(), ModelError> {
        let n = self.intervals.len();
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let (lu, ru) = self.intervals[u];
                let (lv, rv) = self.intervals[v];
                if lv <= lu && ru <= rv {
                    return Err(ModelError::Containment { inner: u, outer: v });
                }
            }
        }
        Ok(())
    }

    /// True when all `2n` endpoints are pairwise distinct.
    pub fn has_distinct_endpoints(&self) -> bool {
        let mut ends: Vec<i64> = self
            .intervals
            .iter()
            .flat_map(|&(l, r)| [l, r])
            .collect();
        ends.sort_unstable();
        ends.windows(2).all(|w| w[0] != w[1])
    }

    /// `I_a` is an end interval when it carries the leftmost or rightmost
    /// endpoint of the whole model.
    pub fn is_end_interval(&self, v: VertexId) -> bool {
        let min = self.intervals.iter().map(|&(l, _)| l).min();
        let max = self.intervals.iter().map(|&(_, r)| r).max();
        let (l, r) = self.intervals[v];
        Some(l) == min || Some(r) == max
    }

    pub fn describe(&self, g: &Graph) -> Vec<(String, i64, i64)> {
        use alloc::string::ToString;
        self.intervals
            .iter()
            .enumerate()
            .map(|(v, &(l, r))| (g.label(v).to_string(), l, r))
            .collect()
    }
}
