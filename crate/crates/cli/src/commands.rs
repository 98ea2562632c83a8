use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use forcing_core::solver::{
    brute_force_oracle_with, solve_connected_complement_with, solve_with, SolveError,
};
use forcing_core::verifier::{
    exhaustive_trees, random_trees, run_connected_domination, run_known_values, run_tree_lemma,
    verify_stream, VerifyOptions,
};
use forcing_core::{
    bound_report, closure as run_closure, encode_graph6, enumerate_connected, greedy_upper_bound,
    trace, Graph, SolverConfig, VertexSet,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::load_graph;
use crate::{
    BoundsArgs, ClosureArgs, Common, DominationArgs, KnownArgs, SolveArgs, SolveMethod, TreesArgs,
    VerifyArgs, EXIT_ABORT, EXIT_FAILURE, EXIT_INPUT,
};

const VERSION: &str = env!("CARGO_PKG_VERSION");

fn emit(value: &Value) {
    println!(
        "{}",
        serde_json::to_string(value).expect("JSON values serialise")
    );
}

fn input_error(message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    EXIT_INPUT
}

fn config_echo(command: &str, extra: impl Serialize) -> Value {
    let mut config = serde_json::to_value(extra).expect("config serialises");
    if let Value::Object(map) = &mut config {
        map.insert("command".into(), json!(command));
        map.insert("version".into(), json!(VERSION));
    }
    config
}

fn solver_config(common: &Common) -> SolverConfig {
    SolverConfig {
        node_budget: common.node_budget,
        time_budget: None,
        parallel: common.workers != 1,
    }
}

fn init_pool(workers: usize) {
    if workers == 0 {
        return;
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
    {
        eprintln!("warning: could not build a {workers}-thread pool ({e}); using the default");
    }
}

fn abort_json(config: Value, err: &SolveError) -> Value {
    let mut out = json!({ "config": config, "status": "aborted", "error": err.to_string() });
    if let SolveError::BudgetExceeded {
        nodes,
        lower_bound,
        upper_bound,
        ..
    } = err
    {
        out["nodes_explored"] = json!(nodes);
        out["lower_bound"] = json!(lower_bound);
        out["upper_bound"] = json!(upper_bound.as_ref().map(|r| r.value));
    }
    out
}

pub fn solve(args: SolveArgs) -> u8 {
    let config = config_echo(
        "solve",
        json!({ "source": args.source, "k": args.common.k, "method": args.method,
                "node_budget": args.common.node_budget, "workers": args.common.workers }),
    );
    let g = match load_graph(&args.source) {
        Ok(g) => g,
        Err(e) => return input_error(e),
    };
    let k = args.common.k as usize;
    let solver = solver_config(&args.common);
    init_pool(args.common.workers);
    let result = match args.method {
        SolveMethod::Bnb => solve_with(&g, k, &solver),
        SolveMethod::Oracle => brute_force_oracle_with(&g, k, &solver),
        SolveMethod::Greedy => greedy_upper_bound(&g, k),
        SolveMethod::ConnectedComplement => solve_connected_complement_with(&g, k, &solver),
    };
    match result {
        Ok(r) => {
            let mut out = json!({
                "config": config,
                "status": "ok",
                "graph6": encode_graph6(&g).ok(),
                "n": g.order(),
                "k": k,
            });
            let fields = serde_json::to_value(&r).expect("result serialises");
            if let (Value::Object(out), Value::Object(fields)) = (&mut out, fields) {
                out.extend(fields);
            }
            emit(&out);
            0
        }
        Err(e @ SolveError::BudgetExceeded { .. }) => {
            emit(&abort_json(config, &e));
            EXIT_ABORT
        }
        Err(e) => input_error(e),
    }
}

pub fn closure(args: ClosureArgs) -> u8 {
    let config = config_echo(
        "closure",
        json!({ "source": args.source, "k": args.common.k, "set": args.set }),
    );
    let g = match load_graph(&args.source) {
        Ok(g) => g,
        Err(e) => return input_error(e),
    };
    if let Some(bad) = args.set.iter().find(|&&v| v >= g.order()) {
        return input_error(format!(
            "vertex {bad} is out of range for a graph on {} vertices",
            g.order()
        ));
    }
    let k = args.common.k as usize;
    let initial: VertexSet = args.set.iter().copied().collect();
    let state = run_closure(&g, k, initial);
    let t = trace(&g, k, initial);
    emit(&json!({
        "config": config,
        "graph6": encode_graph6(&g).ok(),
        "forces": state.is_complete(&g),
        "colored": state.colored,
        "trace": t,
    }));
    0
}

fn summary_csv_path(args: &VerifyArgs) -> Option<PathBuf> {
    if let Some(p) = &args.summary_csv {
        return Some(p.clone());
    }
    let out = args.out.as_ref()?;
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Some(out.with_file_name(format!("{stem}.summary.csv")))
}

fn open_lines(path: &Path) -> io::Result<Box<dyn Iterator<Item = io::Result<String>>>> {
    if path == Path::new("-") {
        return Ok(Box::new(io::stdin().lock().lines()));
    }
    Ok(Box::new(BufReader::new(File::open(path)?).lines()))
}

pub fn verify(args: VerifyArgs) -> u8 {
    let k = args.common.k as usize;
    let config = config_echo(
        "verify",
        json!({ "input": args.input, "enumerate": args.enumerate, "k": k,
                "node_budget": args.common.node_budget, "workers": args.common.workers,
                "seed": args.seed, "claim1": !args.no_claim1 }),
    );
    let lines: Box<dyn Iterator<Item = io::Result<String>>> = match (&args.enumerate, &args.input) {
        (Some(n), _) => match enumerate_connected(*n) {
            Ok(graphs) => Box::new(
                graphs
                    .into_iter()
                    .map(|g| Ok(encode_graph6(&g).expect("enumerated graphs are small"))),
            ),
            Err(e) => return input_error(e),
        },
        (None, Some(path)) => match open_lines(path) {
            Ok(lines) => lines,
            Err(e) => return input_error(format!("{}: {e}", path.display())),
        },
        (None, None) => Box::new(io::stdin().lock().lines()),
    };

    let mut sink: Box<dyn Write> = match &args.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => return input_error(format!("{}: {e}", path.display())),
        },
        None => Box::new(BufWriter::new(io::stdout())),
    };
    let opts = VerifyOptions {
        k,
        solver: SolverConfig {
            node_budget: args.common.node_budget,
            ..SolverConfig::default()
        },
        claim1: !args.no_claim1,
        ..VerifyOptions::default()
    };

    init_pool(args.common.workers);
    let result = verify_stream(lines, &opts, |record| {
        serde_json::to_writer(&mut sink, record)?;
        sink.write_all(b"\n")
    });
    if let Err(e) = sink.flush() {
        return input_error(e);
    }
    drop(sink);
    let summary = match result {
        Ok(s) => s,
        Err(e) => return input_error(e),
    };

    let csv = summary.to_csv();
    let csv_path = summary_csv_path(&args);
    if let Some(path) = &csv_path {
        if let Err(e) = std::fs::write(path, &csv) {
            return input_error(format!("{}: {e}", path.display()));
        }
    }
    let report = json!({
        "config": config,
        "graphs": summary.graph_count(),
        "extremal": summary.extremal_count(),
        "summary_csv": csv_path,
        "summary": summary,
    });
    let text = serde_json::to_string(&report).expect("summary serialises");
    if args.out.is_some() {
        println!("{text}");
    } else {
        eprintln!("{text}");
        if csv_path.is_none() {
            eprint!("{csv}");
        }
    }
    summary.exit_code() as u8
}

pub fn bounds(args: BoundsArgs) -> u8 {
    let k = args.common.k as usize;
    let config = config_echo(
        "bounds",
        json!({ "source": args.source, "k": k, "node_budget": args.common.node_budget }),
    );
    let g = match load_graph(&args.source) {
        Ok(g) => g,
        Err(e) => return input_error(e),
    };
    let solver = solver_config(&args.common);
    init_pool(args.common.workers);
    let solved = solve_with(&g, k, &solver);
    let f_k = match &solved {
        Ok(r) => Some(r.value),
        Err(SolveError::BudgetExceeded { .. }) => None,
        Err(e) => return input_error(e),
    };
    let report = match bound_report(&g, k, f_k) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let mut out = json!({
        "config": config,
        "graph6": encode_graph6(&g).ok(),
        "degree_bound": format!("{}/{}", report.amos_num, report.amos_den),
        "min_degree_bound": format!("{}/{}", report.caro_num, report.caro_den),
        "hypotheses_hold": g.is_k_connected(k),
    });
    let fields = serde_json::to_value(&report).expect("report serialises");
    if let (Value::Object(out), Value::Object(fields)) = (&mut out, fields) {
        out.extend(fields);
    }
    if let Ok(class) = forcing_core::classify_extremal(&g) {
        out["extremal_class"] = json!(class);
    }
    emit(&out);
    if f_k.is_none() {
        EXIT_ABORT
    } else {
        0
    }
}

pub fn lemma_trees(args: TreesArgs) -> u8 {
    let config = config_echo("lemmas trees", &args);
    if args.max_n > 10 {
        return input_error("--max-n above 10 enumerates too many labelled trees");
    }
    if args.random > 0
        && (args.random_min_n < 2
            || args.random_min_n > args.random_max_n
            || args.random_max_n > 64)
    {
        return input_error("random tree orders must satisfy 2 <= min <= max <= 64");
    }
    init_pool(args.workers);
    let exhaustive = run_tree_lemma(exhaustive_trees(args.max_n));
    let sampled = run_tree_lemma(random_trees(
        args.random,
        args.random_min_n,
        args.random_max_n,
        args.seed,
    ));
    let failures = exhaustive.failures.len() + sampled.failures.len();
    emit(&json!({
        "config": config,
        "exhaustive": exhaustive,
        "random": sampled,
        "failures": failures,
    }));
    if exhaustive.passed() && sampled.passed() {
        0
    } else {
        EXIT_FAILURE
    }
}

pub fn lemma_known(args: KnownArgs) -> u8 {
    let config = config_echo("lemmas known", &args);
    let solver = SolverConfig {
        node_budget: args.node_budget,
        ..SolverConfig::default()
    };
    init_pool(args.workers);
    let summary = run_known_values(args.delta_max as usize, args.cycle_max, &solver);
    let passed = summary.passed();
    emit(&json!({ "config": config, "all_confirmed": passed, "checks": summary.checks }));
    if passed {
        0
    } else {
        EXIT_FAILURE
    }
}

pub fn lemma_domination(args: DominationArgs) -> u8 {
    let config = config_echo("lemmas domination", &args);
    if args.k.contains(&0) {
        return input_error("k must be at least 1");
    }
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 2..=args.max_n {
        match enumerate_connected(n) {
            Ok(gs) => graphs.extend(gs),
            Err(e) => return input_error(e),
        }
    }
    let solver = SolverConfig {
        node_budget: args.node_budget,
        ..SolverConfig::default()
    };
    init_pool(args.workers);
    let summary = run_connected_domination(&graphs, &args.k, &solver);
    let failed = !summary.failures.is_empty();
    let unresolved = !summary.unresolved.is_empty();
    emit(&json!({ "config": config, "summary": summary }));
    if failed {
        EXIT_FAILURE
    } else if unresolved {
        EXIT_ABORT
    } else {
        0
    }
}
