//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function returns a JSON string; errors surface as thrown
//! strings on the JS side. The `*_json` functions hold the actual logic so
//! they can be tested natively.

use pidom::families::{pid_formula, pid_witness};
use pidom::graph::{generate, parse_edge_list, FamilySpec};
use pidom::realize::roman_vs_pid_spec;
use pidom::{solve, Graph, Variant};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct GraphView {
    n: usize,
    edges: Vec<(usize, usize)>,
    names: Vec<String>,
}

impl GraphView {
    fn of(g: &Graph) -> Self {
        GraphView {
            n: g.n(),
            edges: g.edges().collect(),
            names: (0..g.n()).map(|v| g.name(v)).collect(),
        }
    }
}

#[derive(Serialize)]
struct Solved {
    variant: &'static str,
    optimum: usize,
    witness: Vec<u8>,
    nodes_explored: u64,
}

fn solved(g: &Graph, variant: Variant) -> Result<Solved, String> {
    let r = solve(g, variant).map_err(|e| e.to_string())?;
    Ok(Solved {
        variant: variant.name(),
        optimum: r.optimum,
        witness: r.witness.values().to_vec(),
        nodes_explored: r.nodes_explored,
    })
}

#[derive(Serialize)]
struct SolveReport {
    graph: GraphView,
    result: Solved,
}

pub fn solve_json(edge_list: &str, variant: &str) -> Result<String, String> {
    let variant: Variant = variant.parse()?;
    let g = parse_edge_list(edge_list).map_err(|e| e.to_string())?;
    let report = SolveReport {
        result: solved(&g, variant)?,
        graph: GraphView::of(&g),
    };
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

#[derive(Serialize)]
struct FamilyReport {
    family: String,
    graph: GraphView,
    formula: usize,
    source: &'static str,
    formula_witness: Vec<u8>,
    solver: Solved,
    agrees: bool,
}

fn family_spec(kind: &str, n: usize, m: usize) -> Result<FamilySpec, String> {
    use FamilySpec as F;
    let spec = match kind {
        "path" => F::Path(n),
        "cycle" => F::Cycle(n),
        "complete" => F::Complete(n),
        "empty" => F::Empty(n),
        "star" => F::Star(n),
        "bipartite" => F::CompleteMultipartite(vec![m.min(n), m.max(n)]),
        "p2pn" => F::product(F::Path(2), F::Path(n)),
        "kmkn" => F::product(F::Complete(m), F::Complete(n)),
        other => return Err(format!("unknown family {other:?}")),
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

pub fn family_json(kind: &str, n: usize, m: usize) -> Result<String, String> {
    let spec = family_spec(kind, n, m)?;
    let g = generate(&spec).map_err(|e| e.to_string())?;
    let formula = pid_formula(&spec).map_err(|e| e.to_string())?;
    let witness = pid_witness(&spec).map_err(|e| e.to_string())?;
    let solver = solved(&g, Variant::PerfectItalian)?;
    let report = FamilyReport {
        family: spec.to_string(),
        graph: GraphView::of(&g),
        agrees: solver.optimum == formula.value,
        formula: formula.value,
        source: formula.source,
        formula_witness: witness.values().to_vec(),
        solver,
    };
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

#[derive(Serialize)]
struct GadgetReport {
    graph: GraphView,
    claimed: (usize, usize),
    roman: Solved,
    pid: Solved,
}

pub fn gadget_json(a: usize, b: usize, p: usize) -> Result<String, String> {
    let spec = roman_vs_pid_spec(a, b, p).map_err(|e| e.to_string())?;
    let g = spec.build().map_err(|e| e.to_string())?;
    let report = GadgetReport {
        claimed: spec.claimed(),
        roman: solved(&g, Variant::Roman)?,
        pid: solved(&g, Variant::PerfectItalian)?,
        graph: GraphView::of(&g),
    };
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

/// Solves an edge list (`n` on the first line, then `u v` per line).
#[wasm_bindgen(js_name = solveEdgeList)]
pub fn solve_edge_list(edge_list: &str, variant: &str) -> Result<String, JsValue> {
    solve_json(edge_list, variant).map_err(|e| JsValue::from_str(&e))
}

/// Closed-form value and witness for a named family next to the solver's answer.
#[wasm_bindgen(js_name = compareFamily)]
pub fn compare_family(kind: &str, n: usize, m: usize) -> Result<String, JsValue> {
    family_json(kind, n, m).map_err(|e| JsValue::from_str(&e))
}

/// Builds the Roman-vs-PID gadget for `(a, b)` and measures both numbers.
#[wasm_bindgen(js_name = realizeGadget)]
pub fn realize_gadget(a: usize, b: usize, p: usize) -> Result<String, JsValue> {
    gadget_json(a, b, p).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn solves_a_path() {
        let v = parse(&solve_json("4\n0 1\n1 2\n2 3\n", "pid").unwrap());
        assert_eq!(v["result"]["optimum"], 3);
        assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(solve_json("2\n0 0\n", "pid").unwrap_err().contains("line"));
        assert!(solve_json("2\n0 1\n", "nope").is_err());
        assert!(family_json("cycle", 2, 0).is_err());
        assert!(gadget_json(4, 4, 3).is_err());
    }

    #[test]
    fn family_matches_formula() {
        let v = parse(&family_json("p2pn", 6, 0).unwrap());
        assert_eq!(v["family"], "P2xP6");
        assert_eq!(v["formula"], 6);
        assert_eq!(v["agrees"], true);
        let v = parse(&family_json("kmkn", 3, 2).unwrap());
        assert_eq!(v["solver"]["optimum"], 4);
    }

    #[test]
    fn hub_gadget_reports_both_numbers() {
        let v = parse(&gadget_json(5, 5, 3).unwrap());
        assert_eq!(v["claimed"], serde_json::json!([5, 5]));
        assert_eq!(v["roman"]["optimum"], 5);
        assert_eq!(v["pid"]["optimum"], 5);
    }
}
