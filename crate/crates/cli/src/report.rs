//! JSON shapes. Field order here is the order keys are emitted in.

use serde::Serialize;
use urmatch_core::decomposition::GallaiEdmonds;
use urmatch_core::graph::Graph;
use urmatch_core::recognition::RecognitionReport;

#[derive(Debug, Serialize)]
pub struct JsonReport {
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub property: &'static str,
    pub answer: bool,
    pub witness: Option<Vec<[usize; 2]>>,
    pub failure: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failures: Option<Vec<&'static str>>,
    pub runtime_ms: u64,
}

impl JsonReport {
    pub fn new(
        input: &str,
        g: &Graph,
        r: &RecognitionReport,
        all_failures: bool,
        runtime_ms: u64,
    ) -> Self {
        JsonReport {
            input: input.to_string(),
            n: g.n(),
            m: g.m(),
            property: r.property.as_str(),
            answer: r.answer,
            witness: r
                .witness
                .as_ref()
                .map(|w| w.pairs().into_iter().map(|(u, v)| [u, v]).collect()),
            failure: r.failure.map(|t| t.as_str()),
            failures: all_failures.then(|| r.failures.iter().map(|t| t.as_str()).collect()),
            runtime_ms,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GbJson {
    pub n: usize,
    pub a_side: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Serialize)]
pub struct DecompositionJson {
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub nu: usize,
    pub d: Vec<usize>,
    pub a: Vec<usize>,
    pub c: Vec<usize>,
    pub d_components: Vec<Vec<usize>>,
    pub c_components: Vec<Vec<usize>>,
    pub gb: GbJson,
}

impl DecompositionJson {
    pub fn new(input: &str, g: &Graph, ge: &GallaiEdmonds) -> Self {
        DecompositionJson {
            input: input.to_string(),
            n: g.n(),
            m: g.m(),
            nu: ge.matching.len(),
            d: ge.d_set.clone(),
            a: ge.a_set.clone(),
            c: ge.c_set.clone(),
            d_components: ge.d_components.clone(),
            c_components: ge.c_components.clone(),
            gb: GbJson {
                n: ge.gb.n(),
                a_side: ge.a_set.len(),
                edges: ge.gb.edges().iter().map(|e| [e.u(), e.v()]).collect(),
            },
        }
    }
}
