//! Isomorph-free enumeration of small connected graphs.
//!
//! Graphs on `m` vertices are produced by attaching a new vertex to every
//! graph on `m - 1` vertices in every possible way, then deduplicated by a
//! canonical adjacency code. The code is the lexicographically smallest
//! upper-triangle bit string over all vertex orders that respect a colour
//! refinement of the degree partition, so the permutation search stays small
//! except on highly symmetric graphs.

use std::collections::HashSet;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order the built-in enumerator accepts.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Largest order [`canonical_code`] can pack into a `u64`.
pub const MAX_CANONICAL_ORDER: usize = 11;

/// Stable colour refinement starting from vertex degrees. Colours are ranks of
/// isomorphism-invariant signatures, so equal graphs up to relabelling get
/// equal colour multisets.
fn refine_colours(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colours: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<usize> = g.neighbors(v).iter().map(|w| colours[w]).collect();
                nbr.sort_unstable();
                (colours[v], nbr)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colours = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return colours;
        }
        classes = distinct.len();
    }
}

struct CodeSearch<'a> {
    g: &'a Graph,
    // colour class required at each position of the vertex order
    slot_colour: Vec<usize>,
    colours: Vec<usize>,
    total_bits: usize,
    order: Vec<usize>,
    best: Option<u64>,
}

impl CodeSearch<'_> {
    fn run(&mut self, pos: usize, used: VertexSet, prefix: u64) {
        let n = self.g.order();
        if pos == n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let bits_so_far = pos * (pos + 1) / 2;
        for v in 0..n {
            if used.contains(v) || self.colours[v] != self.slot_colour[pos] {
                continue;
            }
            let mut column = 0u64;
            for &u in &self.order {
                column = (column << 1) | self.g.has_edge(u, v) as u64;
            }
            let next = (prefix << pos) | column;
            if let Some(best) = self.best {
                if next > best >> (self.total_bits - bits_so_far) {
                    continue;
                }
            }
            self.order.push(v);
            self.run(pos + 1, used.with(v), next);
            self.order.pop();
        }
    }
}

/// Canonical code of `g`: two graphs of the same order are isomorphic iff
/// their codes are equal.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(
        n <= MAX_CANONICAL_ORDER,
        "canonical codes support n <= {MAX_CANONICAL_ORDER}"
    );
    if n <= 1 {
        return 0;
    }
    let colours = refine_colours(g);
    let mut slot_colour = colours.clone();
    slot_colour.sort_unstable();
    let mut search = CodeSearch {
        g,
        slot_colour,
        colours,
        total_bits: n * (n - 1) / 2,
        order: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, VertexSet::EMPTY, 0);
    search.best.expect("at least one order exists")
}

/// Rebuilds the graph whose canonical labelling has adjacency `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total_bits - 1 - bit) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).expect("code describes a simple graph")
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && canonical_code(g) == canonical_code(h)
}

/// Canonical codes of all graphs (connected or not) on `n` vertices.
fn all_graph_codes(n: usize) -> HashSet<u64> {
    let mut level: HashSet<u64> = HashSet::from([0]);
    for m in 2..=n {
        let mut next = HashSet::with_capacity(level.len() * 12);
        for &code in &level {
            let g = graph_from_code(m - 1, code);
            for mask in 0..1u64 << (m - 1) {
                let mut adj: Vec<VertexSet> = (0..m - 1)
                    .map(|v| {
                        let row = g.neighbors(v);
                        if mask >> v & 1 == 1 {
                            row.with(m - 1)
                        } else {
                            row
                        }
                    })
                    .collect();
                adj.push(VertexSet::from_bits(mask));
                let h = Graph::from_adjacency(adj).expect("extension keeps invariants");
                next.insert(canonical_code(&h));
            }
        }
        level = next;
    }
    level
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, each in canonical labelling, sorted by canonical code.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::EnumerationRange {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let mut codes: Vec<u64> = all_graph_codes(n).into_iter().collect();
    codes.sort_unstable();
    Ok(codes
        .into_iter()
        .map(|c| graph_from_code(n, c))
        .filter(Graph::is_connected)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, cycle, path, petersen};

    #[test]
    fn known_connected_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(enumerate_connected(0).is_err());
        assert!(matches!(
            enumerate_connected(9),
            Err(GraphError::EnumerationRange { n: 9, max: 8 })
        ));
    }

    #[test]
    fn known_total_counts() {
        let totals: Vec<usize> = (1..=6).map(|n| all_graph_codes(n).len()).collect();
        assert_eq!(totals, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_code_is_relabelling_invariant() {
        let p = petersen();
        let code = canonical_code(&p);
        let order = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        assert_eq!(canonical_code(&p.relabel(&order)), code);
        assert!(are_isomorphic(
            &cycle(4).unwrap(),
            &complete_bipartite(2, 2).unwrap()
        ));
        assert!(!are_isomorphic(&cycle(5).unwrap(), &path(5).unwrap()));
        let back = graph_from_code(10, code);
        assert!(are_isomorphic(&back, &p));
    }

    #[test]
    fn representatives_are_pairwise_distinct_by_invariants_where_cheap() {
        // degree sequence + triangle count separates all connected graphs on 4 vertices
        let reps = enumerate_connected(4).unwrap();
        let mut keys: Vec<(Vec<usize>, usize)> = reps
            .iter()
            .map(|g| {
                let mut d = g.degree_stats().sequence;
                d.sort_unstable();
                (d, g.triangle_count())
            })
            .collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), reps.len());
    }
}
