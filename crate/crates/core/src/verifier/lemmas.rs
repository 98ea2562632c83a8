use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::check_amos_equality;
use crate::families::{all_labelled_trees, complete, complete_bipartite, cycle, random_tree};
use crate::forcing::is_forcing_set;
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::solver::{solve_connected_complement_with, solve_with, SolveError, SolverConfig};
use crate::vertex_set::{subsets_of_size, VertexSet};

fn g6(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_else(|_| format!("<{} vertices>", g.order()))
}

/// Structural facts about a minimum zero forcing set with connected
/// complement in an extremal graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim1Report {
    /// False when the graph is not extremal or has `Δ < 3`; nothing else is
    /// filled in then.
    pub applicable: bool,
    pub zero_forcing_number: Option<usize>,
    pub witness: Option<VertexSet>,
    /// The constrained optimum equals `Z(G)`.
    pub witness_is_minimum: bool,
    /// Every vertex of the set has exactly one neighbour outside it.
    pub one_outside_neighbour: bool,
    /// The complement induces a tree.
    pub complement_is_tree: bool,
    /// `e(S, V \ S)`.
    pub boundary_edges: usize,
    /// `e(S, V \ S) >= |S|`.
    pub boundary_at_least_size: bool,
    pub ok: bool,
}

impl Claim1Report {
    fn not_applicable() -> Self {
        Claim1Report {
            applicable: false,
            zero_forcing_number: None,
            witness: None,
            witness_is_minimum: false,
            one_outside_neighbour: false,
            complement_is_tree: false,
            boundary_edges: 0,
            boundary_at_least_size: false,
            ok: false,
        }
    }
}

/// For an extremal graph with `Δ >= 3`, takes the lexicographically first
/// smallest zero forcing set `S` whose complement is connected and checks
/// that it is a minimum zero forcing set, that each vertex of `S` has
/// exactly one neighbour outside `S`, that `G[V \ S]` is a tree and that
/// `e(S, V \ S) >= |S|`.
pub fn check_claim1(g: &Graph, config: &SolverConfig) -> Result<Claim1Report, SolveError> {
    let n = g.order();
    let max_degree = g.max_degree();
    if max_degree < 3 || !g.is_connected() {
        return Ok(Claim1Report::not_applicable());
    }
    let z = solve_with(g, 1, config)?.value;
    if !check_amos_equality(z, n, max_degree) {
        return Ok(Claim1Report::not_applicable());
    }
    let constrained = solve_connected_complement_with(g, 1, config)?;
    let s = constrained.witness;
    let outside = s.complement(n);
    let one_outside_neighbour = s
        .iter()
        .all(|v| g.neighbors(v).intersection(outside).len() == 1);
    let complement_is_tree = !outside.is_empty()
        && g.induces_connected(outside)
        && g.induced_edge_count(outside) + 1 == outside.len();
    let boundary_edges = g.edge_boundary(s);
    let boundary_at_least_size = boundary_edges >= s.len();
    let witness_is_minimum = constrained.value == z;
    Ok(Claim1Report {
        applicable: true,
        zero_forcing_number: Some(z),
        witness: Some(s),
        witness_is_minimum,
        one_outside_neighbour,
        complement_is_tree,
        boundary_edges,
        boundary_at_least_size,
        ok: witness_is_minimum
            && one_outside_neighbour
            && complement_is_tree
            && boundary_at_least_size,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeLemmaFailure {
    pub graph6: String,
    pub subset: VertexSet,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TreeLemmaSummary {
    pub trees_checked: usize,
    pub subsets_checked: usize,
    /// Inputs that were not trees.
    pub rejected: Vec<String>,
    pub failures: Vec<TreeLemmaFailure>,
}

impl TreeLemmaSummary {
    fn merge(mut self, other: Self) -> Self {
        self.trees_checked += other.trees_checked;
        self.subsets_checked += other.subsets_checked;
        self.rejected.extend(other.rejected);
        self.failures.extend(other.failures);
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.rejected.is_empty()
    }
}

fn tree_lemma_one(t: &Graph) -> TreeLemmaSummary {
    let mut out = TreeLemmaSummary::default();
    if !t.is_tree() {
        out.rejected.push(g6(t));
        return out;
    }
    out.trees_checked = 1;
    let leaves = t.leaves();
    if leaves.is_empty() {
        // the single-vertex tree has no leaves
        return out;
    }
    for subset in subsets_of_size(leaves, leaves.len() - 1) {
        out.subsets_checked += 1;
        if !is_forcing_set(t, 1, subset) {
            out.failures.push(TreeLemmaFailure {
                graph6: g6(t),
                subset,
            });
        }
    }
    out
}

/// For each tree with leaf set `L`, checks that every `(|L|-1)`-subset of
/// `L` is a zero forcing set. Non-trees are rejected individually.
pub fn run_tree_lemma<I>(trees: I) -> TreeLemmaSummary
where
    I: IntoIterator<Item = Graph>,
    I::IntoIter: Send,
{
    let mut summary = trees
        .into_iter()
        .par_bridge()
        .map(|t| tree_lemma_one(&t))
        .reduce(TreeLemmaSummary::default, TreeLemmaSummary::merge);
    summary.rejected.sort();
    summary
        .failures
        .sort_by(|a, b| (&a.graph6, a.subset).cmp(&(&b.graph6, b.subset)));
    summary
}

/// Every labelled tree on `2..=max_n` vertices.
pub fn exhaustive_trees(max_n: usize) -> impl Iterator<Item = Graph> {
    (2..=max_n).flat_map(all_labelled_trees)
}

/// `count` uniformly random labelled trees with orders drawn uniformly from
/// `min_n..=max_n`, reproducible from `seed`.
pub fn random_trees(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            random_tree(n, &mut rng)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnownValueCheck {
    pub graph: String,
    pub expected: usize,
    pub computed: Option<usize>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnownValuesSummary {
    pub checks: Vec<KnownValueCheck>,
}

impl KnownValuesSummary {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Checks `Z(C_n) = 2` for `3 <= n <= cycle_max`, and `Z(K_{Δ+1}) = Δ`,
/// `Z(K_{Δ,Δ}) = 2Δ - 2` for `2 <= Δ <= delta_max`.
pub fn run_known_values(
    delta_max: usize,
    cycle_max: usize,
    config: &SolverConfig,
) -> KnownValuesSummary {
    let mut cases: Vec<(Graph, usize)> = Vec::new();
    for n in 3..=cycle_max {
        cases.push((cycle(n).expect("n >= 3"), 2));
    }
    for d in 2..=delta_max {
        cases.push((complete(d + 1).expect("d >= 2"), d));
        cases.push((complete_bipartite(d, d).expect("d >= 2"), 2 * d - 2));
    }
    let checks = cases
        .into_par_iter()
        .map(|(g, expected)| {
            let computed = solve_with(&g, 1, config).ok().map(|r| r.value);
            KnownValueCheck {
                graph: g.name().unwrap_or("?").to_string(),
                expected,
                computed,
                ok: computed == Some(expected),
            }
        })
        .collect();
    KnownValuesSummary { checks }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationCase {
    pub graph6: String,
    pub k: usize,
    pub witness: Option<VertexSet>,
    pub reason: String,
}

/// Connected-complement forcing sets versus connected k-domination.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DominationSummary {
    /// `(graph, k)` pairs meeting the hypotheses.
    pub checked: usize,
    pub passed: usize,
    /// No minimum set with a nonempty connected complement exists.
    pub absent: Vec<DominationCase>,
    pub failures: Vec<DominationCase>,
    pub unresolved: Vec<DominationCase>,
}

impl DominationSummary {
    fn merge(mut self, other: Self) -> Self {
        self.checked += other.checked;
        self.passed += other.passed;
        self.absent.extend(other.absent);
        self.failures.extend(other.failures);
        self.unresolved.extend(other.unresolved);
        self
    }
}

fn domination_one(g: &Graph, k: usize, config: &SolverConfig) -> DominationSummary {
    let mut out = DominationSummary::default();
    if !g.is_k_connected(k) {
        return out;
    }
    out.checked = 1;
    let case = |witness, reason: String| DominationCase {
        graph6: g6(g),
        k,
        witness,
        reason,
    };
    let r = match solve_connected_complement_with(g, k, config) {
        Ok(r) => r,
        Err(e) => {
            out.unresolved.push(case(None, e.to_string()));
            return out;
        }
    };
    if r.empty_complement {
        out.absent
            .push(case(Some(r.witness), "only V(G) qualifies".into()));
        return out;
    }
    let d = r.witness.complement(g.order());
    if !g.induces_connected(d) {
        out.failures
            .push(case(Some(r.witness), "complement is not connected".into()));
    } else if let Some(v) = r
        .witness
        .iter()
        .find(|&v| g.neighbors(v).intersection(d).len() < k)
    {
        out.failures.push(case(
            Some(r.witness),
            format!("vertex {v} has fewer than {k} neighbours in the complement"),
        ));
    } else {
        out.passed = 1;
    }
    out
}

/// For every `k` in `ks` and every graph that is k-connected with more than
/// `k` vertices, checks that the complement of a smallest k-forcing set with
/// connected complement is a connected k-dominating set.
pub fn run_connected_domination(
    graphs: &[Graph],
    ks: &[usize],
    config: &SolverConfig,
) -> DominationSummary {
    let mut summary = graphs
        .par_iter()
        .flat_map_iter(|g| ks.iter().map(move |&k| (g, k)))
        .map(|(g, k)| domination_one(g, k, config))
        .reduce(DominationSummary::default, DominationSummary::merge);
    let key = |c: &DominationCase| (c.k, c.graph6.clone());
    summary.absent.sort_by_key(key);
    summary.failures.sort_by_key(key);
    summary.unresolved.sort_by_key(key);
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, star, tree_from_pruefer};

    #[test]
    fn claim1_examples() {
        let cfg = SolverConfig::default();
        let r = check_claim1(&complete(4).unwrap(), &cfg).unwrap();
        assert!(r.applicable && r.ok);
        assert_eq!(r.witness.unwrap().len(), 3);
        assert_eq!(r.boundary_edges, 3);

        let r = check_claim1(&complete_bipartite(3, 3).unwrap(), &cfg).unwrap();
        assert!(r.applicable && r.ok);
        let s = r.witness.unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.complement(6).len(), 2);

        let r = check_claim1(&cycle(5).unwrap(), &cfg).unwrap();
        assert!(!r.applicable);
        let r = check_claim1(&crate::families::petersen(), &cfg).unwrap();
        assert!(!r.applicable);
    }

    #[test]
    fn tree_lemma_examples() {
        let s = run_tree_lemma([path(5).unwrap()]);
        assert_eq!((s.trees_checked, s.subsets_checked), (1, 2));
        assert!(s.passed());
        let s = run_tree_lemma([star(3).unwrap()]);
        assert_eq!(s.subsets_checked, 3);
        assert!(s.passed());
        // spider: centre 0 with legs 0-1-2, 0-3-4, 0-5, 0-6
        let spider =
            Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (0, 6)]).unwrap();
        let s = run_tree_lemma([spider]);
        assert_eq!(s.subsets_checked, 4);
        assert!(s.passed());
        let s = run_tree_lemma([cycle(4).unwrap(), tree_from_pruefer(&[1, 1]).unwrap()]);
        assert_eq!(s.rejected.len(), 1);
        assert!(!s.passed());
    }

    #[test]
    fn exhaustive_tree_counts() {
        // sum of n^(n-2) for n = 2..=5
        assert_eq!(exhaustive_trees(5).count(), 1 + 3 + 16 + 125);
    }

    #[test]
    fn random_trees_are_reproducible() {
        let a = random_trees(20, 9, 16, 7);
        let b = random_trees(20, 9, 16, 7);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|t| t.is_tree() && (9..=16).contains(&t.order())));
    }

    #[test]
    fn known_values_small() {
        let s = run_known_values(3, 9, &SolverConfig::default());
        assert!(s.passed(), "{s:?}");
        assert_eq!(s.checks.len(), 7 + 4);
    }

    #[test]
    fn domination_on_small_families() {
        let graphs = vec![cycle(5).unwrap(), complete(4).unwrap(), path(4).unwrap()];
        let s = run_connected_domination(&graphs, &[1, 2], &SolverConfig::default());
        // path is only 1-connected
        assert_eq!(s.checked, 5);
        assert_eq!(s.passed, 5);
    }
}
