//! Exhaustive verification of the extremal characterisation
//! `Z(G) = ((Δ-2)n + 2)/(Δ-1)  <=>  G ∈ {C_n, K_{Δ+1}, K_{Δ,Δ}}`
//! and of the supporting lemmas, over streams of graph6 records.
//!
//! Records come out in input order whatever the worker count: lines are
//! processed in chunks, each chunk is solved on the rayon pool and collected
//! in order before the next chunk is read.

mod lemmas;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{amos_bound, classify_extremal, ExtremalClass};
use crate::graph6::parse_graph6;
use crate::solver::{solve_with, SolveError, SolverConfig};

pub use lemmas::{
    check_claim1, exhaustive_trees, random_trees, run_connected_domination, run_known_values,
    run_tree_lemma, Claim1Report, DominationCase, DominationSummary, KnownValueCheck,
    KnownValuesSummary, TreeLemmaFailure, TreeLemmaSummary,
};

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub k: usize,
    pub solver: SolverConfig,
    /// Run the structural check on extremal graphs with `Δ >= 3`.
    pub claim1: bool,
    /// Lines handed to the worker pool at a time.
    pub chunk_size: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            k: 1,
            solver: SolverConfig::default(),
            claim1: true,
            chunk_size: 512,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    Verified,
    Counterexample,
    Unresolved,
}

/// Outcome for one graph that met the hypotheses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    /// 1-based input line.
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub k: usize,
    /// `None` when the solver hit its budget.
    pub f_k: Option<usize>,
    pub bound_num: i64,
    pub bound_den: i64,
    pub equality: bool,
    pub extremal_class: ExtremalClass,
    pub claim1_ok: Option<bool>,
    pub solver_nodes: u64,
    pub status: RecordStatus,
    /// Why the record is a counterexample, if it is one.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedGraph {
    pub line: usize,
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseFailure {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct OrderStats {
    pub graph_count: usize,
    pub extremal_count: usize,
    pub extremal_graph6: Vec<String>,
    pub max_solver_nodes: u64,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySummary {
    pub k: usize,
    pub lines_read: usize,
    pub verified: usize,
    pub per_order: BTreeMap<usize, OrderStats>,
    pub skipped: Vec<SkippedGraph>,
    pub parse_errors: Vec<ParseFailure>,
    pub unresolved: Vec<VerificationRecord>,
    pub counterexamples: Vec<VerificationRecord>,
}

impl VerifySummary {
    pub fn new(k: usize) -> Self {
        VerifySummary {
            k,
            lines_read: 0,
            verified: 0,
            per_order: BTreeMap::new(),
            skipped: Vec::new(),
            parse_errors: Vec::new(),
            unresolved: Vec::new(),
            counterexamples: Vec::new(),
        }
    }

    pub fn graph_count(&self) -> usize {
        self.per_order.values().map(|s| s.graph_count).sum()
    }

    pub fn extremal_count(&self) -> usize {
        self.per_order.values().map(|s| s.extremal_count).sum()
    }

    /// 0 when clean, 1 on any counterexample, 3 when something stayed
    /// unresolved.
    pub fn exit_code(&self) -> i32 {
        if !self.counterexamples.is_empty() {
            1
        } else if !self.unresolved.is_empty() {
            3
        } else {
            0
        }
    }

    fn absorb(&mut self, outcome: LineOutcome) {
        self.lines_read += 1;
        match outcome {
            LineOutcome::Record(record, micros) => {
                let stats = self.per_order.entry(record.n).or_default();
                stats.graph_count += 1;
                stats.max_solver_nodes = stats.max_solver_nodes.max(record.solver_nodes);
                stats.wall_time_ms += micros as f64 / 1000.0;
                if record.equality {
                    stats.extremal_count += 1;
                    stats.extremal_graph6.push(record.graph6.clone());
                }
                match record.status {
                    RecordStatus::Verified => self.verified += 1,
                    RecordStatus::Counterexample => self.counterexamples.push(record),
                    RecordStatus::Unresolved => self.unresolved.push(record),
                }
            }
            LineOutcome::Skipped(s) => self.skipped.push(s),
            LineOutcome::ParseError(p) => self.parse_errors.push(p),
        }
    }

    /// One row per order:
    /// `n,graph_count,extremal_count,extremal_graph6_list,max_solver_nodes,wall_time_ms`.
    /// The graph6 list is `;`-separated; graph6 never contains `;` or `,`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "n,graph_count,extremal_count,extremal_graph6_list,max_solver_nodes,wall_time_ms\n",
        );
        for (n, s) in &self.per_order {
            let _ = writeln!(
                out,
                "{n},{},{},{},{},{:.3}",
                s.graph_count,
                s.extremal_count,
                s.extremal_graph6.join(";"),
                s.max_solver_nodes,
                s.wall_time_ms
            );
        }
        out
    }
}

enum LineOutcome {
    Record(VerificationRecord, u128),
    Skipped(SkippedGraph),
    ParseError(ParseFailure),
}

fn verify_line(line: usize, text: &str, opts: &VerifyOptions) -> LineOutcome {
    let graph6 = text.trim().to_string();
    let g = match parse_graph6(&graph6) {
        Ok(g) => g,
        Err(e) => {
            return LineOutcome::ParseError(ParseFailure {
                line,
                message: e.to_string(),
            })
        }
    };
    let skip = |reason: String| {
        LineOutcome::Skipped(SkippedGraph {
            line,
            graph6: graph6.clone(),
            reason,
        })
    };
    let k = opts.k;
    if !g.is_connected() {
        return skip("disconnected".into());
    }
    let (max_degree, min_degree) = (g.max_degree(), g.min_degree());
    if max_degree < 2 {
        return skip(format!("maximum degree {max_degree} < 2"));
    }
    if k > 1 && !g.is_k_connected(k) {
        return skip(format!("not {k}-connected"));
    }

    let started = Instant::now();
    let n = g.order();
    let bound = amos_bound(n, max_degree, k).expect("degree checked above");
    let class = classify_extremal(&g).expect("connectivity checked above");
    let mut record = VerificationRecord {
        line,
        graph6,
        n,
        max_degree,
        min_degree,
        k,
        f_k: None,
        bound_num: bound.num,
        bound_den: bound.den,
        equality: false,
        extremal_class: class,
        claim1_ok: None,
        solver_nodes: 0,
        status: RecordStatus::Unresolved,
        violations: Vec::new(),
    };
    let solved = match solve_with(&g, k, &opts.solver) {
        Ok(r) => r,
        Err(SolveError::BudgetExceeded { nodes, .. }) => {
            record.solver_nodes = nodes;
            return LineOutcome::Record(record, started.elapsed().as_micros());
        }
        Err(e) => unreachable!("k validated by caller: {e}"),
    };
    let f = solved.value as i64;
    record.f_k = Some(solved.value);
    record.solver_nodes = solved.nodes_explored;
    record.equality = f * bound.den == bound.num;

    if f * bound.den > bound.num {
        record
            .violations
            .push(format!("F_k = {f} exceeds the bound {}", bound));
    }
    if k == 1 {
        if record.equality && !class.is_extremal() {
            record
                .violations
                .push("meets the bound with equality but is not C_n, K_{Δ+1} or K_{Δ,Δ}".into());
        }
        if !record.equality && class.is_extremal() {
            record.violations.push(format!(
                "is {class} but does not meet the bound with equality"
            ));
        }
        if record.equality && min_degree != max_degree {
            record
                .violations
                .push("meets the bound with equality but is not regular".into());
        }
        if record.equality && max_degree >= 3 && opts.claim1 {
            match check_claim1(&g, &opts.solver) {
                Ok(report) => {
                    record.claim1_ok = Some(report.ok);
                    if !report.ok {
                        record
                            .violations
                            .push(format!("extremal structure check failed: {report:?}"));
                    }
                }
                Err(_) => {
                    record.status = RecordStatus::Unresolved;
                    return LineOutcome::Record(record, started.elapsed().as_micros());
                }
            }
        }
    }
    record.status = if record.violations.is_empty() {
        RecordStatus::Verified
    } else {
        RecordStatus::Counterexample
    };
    LineOutcome::Record(record, started.elapsed().as_micros())
}

/// Verifies every graph6 line from `lines`, calling `sink` on each record in
/// input order. Blank lines are ignored but still counted for line numbers.
pub fn verify_stream<I, F>(lines: I, opts: &VerifyOptions, mut sink: F) -> io::Result<VerifySummary>
where
    I: IntoIterator<Item = io::Result<String>>,
    F: FnMut(&VerificationRecord) -> io::Result<()>,
{
    let mut summary = VerifySummary::new(opts.k);
    let mut lines = lines.into_iter().enumerate();
    let chunk_size = opts.chunk_size.max(1);
    loop {
        let mut chunk = Vec::with_capacity(chunk_size);
        for (i, line) in lines.by_ref() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            chunk.push((i + 1, line));
            if chunk.len() == chunk_size {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<LineOutcome> = chunk
            .par_iter()
            .map(|(line, text)| verify_line(*line, text, opts))
            .collect();
        for outcome in outcomes {
            if let LineOutcome::Record(record, _) = &outcome {
                sink(record)?;
            }
            summary.absorb(outcome);
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::ExtremalTag;
    use crate::encode_graph6;
    use crate::families::{complete_bipartite, cycle, petersen};

    fn lines(items: &[&str]) -> Vec<io::Result<String>> {
        items.iter().map(|s| Ok(s.to_string())).collect()
    }

    #[test]
    fn triangle_is_extremal_and_complete() {
        let mut records = Vec::new();
        let summary = verify_stream(lines(&["Bw"]), &VerifyOptions::default(), |r| {
            records.push(r.clone());
            Ok(())
        })
        .unwrap();
        assert_eq!(records.len(), 1);
        let r = &records[0];
        assert!(r.equality);
        assert_eq!(r.extremal_class.tag, ExtremalTag::Complete);
        assert_eq!(r.f_k, Some(2));
        assert_eq!(r.status, RecordStatus::Verified);
        assert_eq!(summary.exit_code(), 0);
        assert_eq!(summary.extremal_count(), 1);
    }

    #[test]
    fn skips_and_parse_errors_are_listed() {
        let text = [
            "Bw",
            "",
            "A_", // K2: Δ = 1
            "Bx", // bad padding
            "C?", // edgeless, disconnected
            &encode_graph6(&petersen()).unwrap(),
        ];
        let summary = verify_stream(lines(&text), &VerifyOptions::default(), |_| Ok(())).unwrap();
        assert_eq!(summary.lines_read, 5);
        assert_eq!(summary.verified, 2);
        assert_eq!(summary.skipped.len(), 2);
        assert_eq!(summary.skipped[0].line, 3);
        assert_eq!(summary.parse_errors.len(), 1);
        assert_eq!(summary.parse_errors[0].line, 4);
        assert_eq!(summary.per_order[&10].extremal_count, 0);
    }

    #[test]
    fn k2_skips_graphs_that_are_not_2_connected() {
        let opts = VerifyOptions {
            k: 2,
            ..VerifyOptions::default()
        };
        let text = ["Bg", &encode_graph6(&cycle(5).unwrap()).unwrap()];
        let summary = verify_stream(lines(&text), &opts, |_| Ok(())).unwrap();
        assert_eq!(summary.skipped.len(), 1);
        assert_eq!(summary.verified, 1);
    }

    #[test]
    fn budget_abort_is_unresolved() {
        let opts = VerifyOptions {
            solver: SolverConfig {
                node_budget: 3,
                ..SolverConfig::default()
            },
            ..VerifyOptions::default()
        };
        let text = [encode_graph6(&petersen()).unwrap()];
        let text: Vec<&str> = text.iter().map(String::as_str).collect();
        let summary = verify_stream(lines(&text), &opts, |_| Ok(())).unwrap();
        assert_eq!(summary.unresolved.len(), 1);
        assert_eq!(summary.exit_code(), 3);
    }

    #[test]
    fn csv_layout() {
        let text = [
            encode_graph6(&complete_bipartite(3, 3).unwrap()).unwrap(),
            encode_graph6(&cycle(6).unwrap()).unwrap(),
        ];
        let text: Vec<&str> = text.iter().map(String::as_str).collect();
        let summary = verify_stream(lines(&text), &VerifyOptions::default(), |_| Ok(())).unwrap();
        let csv = summary.to_csv();
        let mut rows = csv.lines();
        assert_eq!(
            rows.next().unwrap(),
            "n,graph_count,extremal_count,extremal_graph6_list,max_solver_nodes,wall_time_ms"
        );
        let row: Vec<&str> = rows.next().unwrap().split(',').collect();
        assert_eq!(&row[..3], &["6", "2", "2"]);
        assert_eq!(row[3].split(';').count(), 2);
        let k33 = summary.per_order[&6]
            .extremal_graph6
            .first()
            .cloned()
            .unwrap();
        assert_eq!(k33, text[0]);
    }
}
