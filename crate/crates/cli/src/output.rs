//! Rendering helpers for verdicts.

use rcg_core::rainbow::{ColoringFile, RcVerdict};
use rcg_core::UndirectedGraph;

pub fn verdict_json(graph: &UndirectedGraph, verdict: &RcVerdict) -> serde_json::Value {
    serde_json::json!({
        "lower": verdict.lower,
        "upper": verdict.upper,
        "exact": verdict.exact,
        "method": verdict.method,
        "witness": verdict.witness.as_ref().map(|w| {
            serde_json::to_value(ColoringFile::from_coloring(graph, w)).expect("witness json")
        }),
    })
}

pub fn human_verdict(spec: &str, source: &str, verdict: &RcVerdict) {
    match verdict.exact {
        Some(value) => println!("rc(CG({spec})) = {value} ({source}, exact)"),
        None => println!(
            "rc(CG({spec})) in [{}, {}] ({source}, bounds only)",
            verdict.lower, verdict.upper
        ),
    }
    for line in &verdict.method {
        println!("  - {line}");
    }
    if let Some(witness) = &verdict.witness {
        println!("  witness: {} colors, verified", witness.k());
    }
}
