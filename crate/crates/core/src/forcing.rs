//! The k-forcing colour change rule.
//!
//! A coloured vertex with at least one and at most `k` non-coloured
//! neighbours colours all of them. Coloured sets only grow and a vertex that
//! qualifies keeps qualifying, so the process has a unique fixed point (the
//! closure) regardless of the order in which the rule is applied.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColorState {
    pub colored: VertexSet,
}

impl ColorState {
    pub fn is_complete(&self, g: &Graph) -> bool {
        self.colored == g.vertices()
    }
}

/// Applies the rule to a fixed point starting from `initial`.
pub fn closure(g: &Graph, k: usize, initial: VertexSet) -> ColorState {
    ColorState {
        colored: closure_set(g, k, initial),
    }
}

/// Work-queue fixed point: a vertex is re-examined only when it or one of its
/// neighbours has just been coloured.
#[inline]
pub(crate) fn closure_set(g: &Graph, k: usize, initial: VertexSet) -> VertexSet {
    let all = g.vertices();
    let mut colored = initial.intersection(all);
    let mut pending = colored.bits();
    while pending != 0 {
        let v = pending.trailing_zeros() as usize;
        pending &= pending - 1;
        let uncolored = g.neighbors(v).difference(colored);
        let count = uncolored.len();
        if count == 0 || count > k {
            continue;
        }
        colored = colored.union(uncolored);
        let mut touched = uncolored;
        for w in uncolored {
            touched = touched.union(g.neighbors(w));
        }
        pending |= touched.intersection(colored).bits();
    }
    colored
}

pub fn is_forcing_set(g: &Graph, k: usize, s: VertexSet) -> bool {
    closure_set(g, k, s) == g.vertices()
}

/// An ordered record of forcing events starting from `initial`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingTrace {
    pub k: usize,
    pub initial: VertexSet,
    /// `(forcer, forced)` pairs in firing order.
    pub events: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("event {index}: vertex {vertex} is out of range")]
    OutOfRange { index: usize, vertex: Vertex },
    #[error("event {index}: forcer {forcer} is not coloured")]
    ForcerNotColored { index: usize, forcer: Vertex },
    #[error("event {index}: {forced} is not a non-coloured neighbour of {forcer}")]
    NotEligibleTarget {
        index: usize,
        forcer: Vertex,
        forced: Vertex,
    },
    #[error(
        "event {index}: forcer {forcer} has {count} non-coloured neighbours, more than k = {k}"
    )]
    TooManyUncolored {
        index: usize,
        forcer: Vertex,
        count: usize,
        k: usize,
    },
}

impl ForcingTrace {
    /// Replays the events, checking each against the rule, and returns the
    /// final coloured set.
    pub fn replay(&self, g: &Graph) -> Result<VertexSet, TraceError> {
        let n = g.order();
        let mut colored = self.initial;
        for (index, &(forcer, forced)) in self.events.iter().enumerate() {
            if let Some(&vertex) = [forcer, forced].iter().find(|&&v| v >= n) {
                return Err(TraceError::OutOfRange { index, vertex });
            }
            if !colored.contains(forcer) {
                return Err(TraceError::ForcerNotColored { index, forcer });
            }
            let uncolored = g.neighbors(forcer).difference(colored);
            if !uncolored.contains(forced) {
                return Err(TraceError::NotEligibleTarget {
                    index,
                    forcer,
                    forced,
                });
            }
            if uncolored.len() > self.k {
                return Err(TraceError::TooManyUncolored {
                    index,
                    forcer,
                    count: uncolored.len(),
                    k: self.k,
                });
            }
            colored.insert(forced);
        }
        Ok(colored)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("trace serialises")
    }
}

/// Builds a trace one forced vertex at a time. Among all eligible
/// `(forcer, forced)` pairs the lexicographically smallest fires first.
pub fn trace(g: &Graph, k: usize, initial: VertexSet) -> ForcingTrace {
    let mut colored = initial.intersection(g.vertices());
    let mut events = Vec::new();
    'step: loop {
        for forcer in colored {
            let uncolored = g.neighbors(forcer).difference(colored);
            if let Some(forced) = uncolored.first() {
                if uncolored.len() <= k {
                    events.push((forcer, forced));
                    colored.insert(forced);
                    continue 'step;
                }
            }
        }
        break;
    }
    ForcingTrace { k, initial, events }
}

/// Coloured vertices that still have non-coloured neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Frontier {
    pub k: usize,
    /// `(vertex, number of non-coloured neighbours)`, by vertex id.
    pub entries: Vec<(Vertex, usize)>,
}

impl Frontier {
    /// True when no frontier vertex can fire under the rule.
    pub fn is_stalled(&self) -> bool {
        self.entries.iter().all(|&(_, count)| count > self.k)
    }
}

pub fn stalled_frontier(g: &Graph, k: usize, state: &ColorState) -> Frontier {
    let entries = state
        .colored
        .iter()
        .filter_map(|v| {
            let count = g.neighbors(v).difference(state.colored).len();
            (count > 0).then_some((v, count))
        })
        .collect();
    Frontier { k, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path};
    use crate::vertex_set::subsets_of_size;

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn closure_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(closure(&c5, 1, set(&[0, 1])).colored, c5.vertices());
        assert_eq!(closure(&c5, 1, set(&[0])).colored, set(&[0]));
        assert_eq!(closure(&c5, 2, set(&[0])).colored, c5.vertices());
        assert_eq!(closure(&c5, 1, VertexSet::EMPTY).colored, VertexSet::EMPTY);
    }

    #[test]
    fn forcing_set_examples() {
        let k4 = complete(4).unwrap();
        for s in subsets_of_size(k4.vertices(), 3) {
            assert!(is_forcing_set(&k4, 1, s));
        }
        for s in subsets_of_size(k4.vertices(), 2) {
            assert!(!is_forcing_set(&k4, 1, s));
        }
        let c7 = cycle(7).unwrap();
        for k in 1..4 {
            assert!(is_forcing_set(&c7, k, c7.vertices()));
        }
    }

    #[test]
    fn trace_examples() {
        let p3 = path(3).unwrap();
        assert_eq!(trace(&p3, 1, set(&[0])).events, vec![(0, 1), (1, 2)]);
        let k3 = complete(3).unwrap();
        assert_eq!(trace(&k3, 1, set(&[0, 1])).events, vec![(0, 2)]);
        assert!(trace(&k3, 1, k3.vertices()).events.is_empty());
        let c5 = cycle(5).unwrap();
        let t = trace(&c5, 1, set(&[0, 1]));
        assert_eq!(t.events.len(), 3);
        assert_eq!(t.replay(&c5).unwrap(), c5.vertices());
    }

    #[test]
    fn trace_json_shape() {
        let p3 = path(3).unwrap();
        let t = trace(&p3, 1, set(&[0]));
        assert_eq!(
            t.to_json_line(),
            r#"{"k":1,"initial":[0],"events":[[0,1],[1,2]]}"#
        );
        let back: ForcingTrace = serde_json::from_str(&t.to_json_line()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn replay_rejects_illegal_events() {
        let c5 = cycle(5).unwrap();
        let bad = ForcingTrace {
            k: 1,
            initial: set(&[0]),
            events: vec![(0, 1)],
        };
        assert!(matches!(
            bad.replay(&c5),
            Err(TraceError::TooManyUncolored { count: 2, .. })
        ));
        let bad = ForcingTrace {
            k: 1,
            initial: set(&[0]),
            events: vec![(2, 3)],
        };
        assert!(matches!(
            bad.replay(&c5),
            Err(TraceError::ForcerNotColored { .. })
        ));
        let bad = ForcingTrace {
            k: 2,
            initial: set(&[0]),
            events: vec![(0, 2)],
        };
        assert!(matches!(
            bad.replay(&c5),
            Err(TraceError::NotEligibleTarget { .. })
        ));
    }

    #[test]
    fn frontier_examples() {
        let c5 = cycle(5).unwrap();
        let state = ColorState { colored: set(&[0]) };
        let frontier = stalled_frontier(&c5, 1, &state);
        assert_eq!(frontier.entries, vec![(0, 2)]);
        assert!(frontier.is_stalled());
        assert!(!stalled_frontier(&c5, 2, &state).is_stalled());
        let full = closure(&c5, 1, set(&[0, 1]));
        assert!(stalled_frontier(&c5, 1, &full).entries.is_empty());
        let k33 = complete_bipartite(3, 3).unwrap();
        let side = ColorState {
            colored: set(&[0, 1, 2]),
        };
        assert_eq!(
            stalled_frontier(&k33, 1, &side).entries,
            vec![(0, 3), (1, 3), (2, 3)]
        );
    }
}
