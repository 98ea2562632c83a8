use std::fs;

use forcing_core::edge_list::looks_like_edge_list;
use forcing_core::{parse_edge_list, parse_graph6, Family, Graph};

use crate::GraphSource;

pub fn load_graph(source: &GraphSource) -> Result<Graph, String> {
    match (&source.graph6, &source.family, &source.input) {
        (Some(text), None, None) => parse_graph6(text).map_err(|e| e.to_string()),
        (None, Some(spec), None) => {
            let family: Family = spec
                .parse()
                .map_err(|e: forcing_core::GraphError| e.to_string())?;
            family.generate().map_err(|e| e.to_string())
        }
        (None, None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            if looks_like_edge_list(&text) {
                parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
            } else {
                let first = text
                    .lines()
                    .find(|l| !l.trim().is_empty())
                    .ok_or_else(|| format!("{}: empty file", path.display()))?;
                parse_graph6(first.trim()).map_err(|e| format!("{}: {e}", path.display()))
            }
        }
        (None, None, None) => Err("one of --graph6, --family or --input is required".into()),
        _ => Err("--graph6, --family and --input are mutually exclusive".into()),
    }
}
