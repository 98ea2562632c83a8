//! Named graph families and Prüfer-sequence trees.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::GraphError;
use crate::graph::Graph;

fn family_err(spec: &str, reason: impl Into<String>) -> GraphError {
    GraphError::Family {
        spec: spec.into(),
        reason: reason.into(),
    }
}

/// The cycle `C_m`, `m >= 3`.
pub fn cycle(m: usize) -> Result<Graph, GraphError> {
    if m < 3 {
        return Err(family_err(
            "cycle",
            format!("needs at least 3 vertices, got {m}"),
        ));
    }
    Ok(Graph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m)))?.with_name(format!("C{m}")))
}

/// The complete graph `K_n`, `n >= 1`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(family_err("complete", "needs at least 1 vertex"));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges)?.with_name(format!("K{n}")))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(family_err(
            "complete_bipartite",
            "both parts need at least 1 vertex",
        ));
    }
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Ok(Graph::from_edges(a + b, edges)?.with_name(format!("K{a},{b}")))
}

/// The path `P_n` on `n >= 1` vertices.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(family_err("path", "needs at least 1 vertex"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?.with_name(format!("P{n}")))
}

/// The star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    if leaves == 0 {
        return Err(family_err("star", "needs at least 1 leaf"));
    }
    Ok(complete_bipartite(1, leaves)?.with_name(format!("S{leaves}")))
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner))
        .expect("static edge list")
        .with_name("Petersen")
}

/// Decodes a Prüfer sequence of length `n - 2` into the labelled tree on `n`
/// vertices it encodes.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph, GraphError> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(family_err(
            "tree_from_pruefer",
            format!("entry {bad} out of range for a tree on {n} vertices"),
        ));
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut g = Graph::empty(n)?;
    for &v in seq {
        let leaf = (0..n)
            .find(|&u| degree[u] == 1)
            .expect("a leaf always remains");
        g.add_edge(leaf, v)?;
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let mut rest = (0..n).filter(|&u| degree[u] == 1);
    let (u, v) = (
        rest.next().expect("two vertices remain"),
        rest.next().expect("two vertices remain"),
    );
    g.add_edge(u, v)?;
    Ok(g)
}

/// Every labelled tree on `n >= 2` vertices, one per Prüfer sequence, in
/// lexicographic sequence order. There are `n^(n-2)` of them.
pub fn all_labelled_trees(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 2, "labelled trees via Prüfer sequences need n >= 2");
    let len = n - 2;
    let mut seq = Some(vec![0usize; len]);
    std::iter::from_fn(move || {
        let cur = seq.as_mut()?;
        let tree = tree_from_pruefer(cur).expect("sequence entries are in range");
        // odometer increment
        let mut i = len;
        loop {
            if i == 0 {
                seq = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < n {
                break;
            }
            cur[i] = 0;
        }
        Some(tree)
    })
}

/// A uniformly random labelled tree on `n >= 2` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 2, "random trees need n >= 2");
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_pruefer(&seq).expect("sequence entries are in range")
}

/// A parsed `name:params` family spec such as `cycle:5` or
/// `complete_bipartite:3,3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Star(usize),
    Petersen,
    TreeFromPruefer(Vec<usize>),
}

impl Family {
    pub fn generate(&self) -> Result<Graph, GraphError> {
        match self {
            Family::Cycle(m) => cycle(*m),
            Family::Complete(n) => complete(*n),
            Family::CompleteBipartite(a, b) => complete_bipartite(*a, *b),
            Family::Path(n) => path(*n),
            Family::Star(l) => star(*l),
            Family::Petersen => Ok(petersen()),
            Family::TreeFromPruefer(seq) => tree_from_pruefer(seq),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(spec: &str) -> Result<Self, GraphError> {
        let (name, params) = match spec.split_once(':') {
            Some((name, params)) => (name.trim(), params.trim()),
            None => (spec.trim(), ""),
        };
        let numbers: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| {
                    p.trim().parse().map_err(|_| {
                        family_err(spec, format!("`{p}` is not a non-negative integer"))
                    })
                })
                .collect::<Result<_, _>>()?
        };
        let arity = |want: usize| -> Result<(), GraphError> {
            if numbers.len() == want {
                Ok(())
            } else {
                Err(family_err(
                    spec,
                    format!("`{name}` takes {want} parameter(s), got {}", numbers.len()),
                ))
            }
        };
        let family = match name {
            "cycle" => {
                arity(1)?;
                Family::Cycle(numbers[0])
            }
            "complete" => {
                arity(1)?;
                Family::Complete(numbers[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(numbers[0], numbers[1])
            }
            "path" => {
                arity(1)?;
                Family::Path(numbers[0])
            }
            "star" => {
                arity(1)?;
                Family::Star(numbers[0])
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "tree_from_pruefer" | "pruefer" | "prufer" => Family::TreeFromPruefer(numbers),
            other => return Err(family_err(spec, format!("unknown family `{other}`"))),
        };
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(m) => write!(f, "cycle:{m}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Star(l) => write!(f, "star:{l}"),
            Family::Petersen => write!(f, "petersen"),
            Family::TreeFromPruefer(seq) => {
                let parts: Vec<String> = seq.iter().map(|v| v.to_string()).collect();
                write!(f, "tree_from_pruefer:{}", parts.join(","))
            }
        }
    }
}
