use std::fmt::Write;

use anyon_data::dump::{matrix_json, model_dump};
use anyon_data::{parse_labels, Label, ModelParams};
use braid_engine::{BraidEngine, BraidWord};
use clap::Args;
use fusion_space::{qubit_layout, Basis, IndefSpace, QubitCode};
use gate_compile::{
    convergence_csv, leakage_norms, psi_leaves, reichardt_iterate, reichardt_iterate_extended, search_low_leakage,
    Protocol, SearchConfig, MAX_DEPTH, W_WORD,
};
use serde_json::{json, Value};
use verify_suite::{failures, report_json, run_all};

use crate::error::CliError;
use crate::output::{into_string, matrix_csv, matrix_text, Output};
use crate::CliConfig;

#[derive(Args, Debug)]
pub struct SpaceArgs {
    /// Comma-separated leaf labels, e.g. a,s,s,s,s.
    #[arg(long, conflicts_with = "qubits")]
    pub system: Option<String>,
    /// Shorthand for the n-qubit space (a, s^2n).
    #[arg(long)]
    pub qubits: Option<usize>,
    #[arg(long, default_value = "a")]
    pub charge: String,
}

#[derive(Args, Debug)]
pub struct BraidArgs {
    #[arg(long, default_value = "a,psi,s,s")]
    pub system: String,
    #[arg(long, default_value = "a")]
    pub charge: String,
    /// Word such as "b2^2 X b2^-1"; the leftmost letter acts first.
    #[arg(long)]
    pub word: String,
}

#[derive(Args, Debug)]
pub struct ReichardtArgs {
    /// Seed word on the (a, psi, s, s) sector.
    #[arg(long, default_value = W_WORD)]
    pub word: String,
    /// Recursion depth.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// Evaluate with this many bits of binary precision instead of double.
    #[arg(long, value_name = "BITS")]
    pub extended: Option<usize>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Maximum number of syllables.
    #[arg(long, default_value_t = 11)]
    pub max_len: usize,
    /// Keep words whose larger leakage norm is at most this.
    #[arg(long, default_value_t = 0.3)]
    pub threshold: f64,
    /// Largest |power| of a syllable.
    #[arg(long, default_value_t = 2)]
    pub max_power: i32,
    /// Also allow the half exchange h1 where legal.
    #[arg(long)]
    pub half: bool,
    /// Only keep words acting trivially on the vacuum control channel.
    #[arg(long)]
    pub control_preserving: bool,
    /// Maximum number of words reported; 0 for all.
    #[arg(long, default_value_t = 100)]
    pub limit: usize,
}

fn labels(s: &str) -> Result<Vec<Label>, CliError> {
    Ok(parse_labels(s)?)
}

fn charge(s: &str) -> Result<Label, CliError> {
    let l = labels(s)?;
    match l.as_slice() {
        [c] => Ok(*c),
        _ => Err(CliError::usage(format!("charge must be a single label, got {s:?}"))),
    }
}

fn word(s: &str) -> Result<BraidWord, CliError> {
    Ok(s.parse()?)
}

fn tokens(ls: &[Label]) -> Vec<String> {
    ls.iter().map(|l| l.token()).collect()
}

fn basis_text(b: &Basis) -> String {
    b.trees.iter().enumerate().map(|(i, t)| format!("  {i}: {}\n", t.compact())).collect()
}

pub fn model(p: &ModelParams) -> Result<Output, CliError> {
    let dump = model_dump(p)?;
    let pretty = serde_json::to_string_pretty(&dump).expect("json value serialises");
    Ok(Output::new(dump, None, pretty))
}

pub fn space(p: &ModelParams, a: &SpaceArgs) -> Result<Output, CliError> {
    let s = match (&a.system, a.qubits) {
        (_, Some(n)) => IndefSpace::qubits(p, n)?,
        (Some(sys), None) => IndefSpace::new(p, &labels(sys)?, charge(&a.charge)?)?,
        (None, None) => return Err(CliError::usage("space needs --system or --qubits")),
    };
    let qubits = qubit_layout(&s.basis.leaves, s.basis.charge);
    let encoding: Vec<Value> = match qubits {
        Some(n) => {
            let code = QubitCode::new(n);
            (0..1usize << n)
                .map(|x| {
                    let bits: Vec<bool> = (0..n).map(|i| x >> i & 1 == 1).collect();
                    let tree = code.encode(&bits);
                    json!({ "bits": QubitCode::format_bits(&bits), "index": s.basis.index_of(&tree), "tree": tree.compact() })
                })
                .collect()
        }
        None => vec![],
    };
    let mut json = s.to_json();
    json["ordering"] = json!("lexicographic in internal labels, alpha shifts descending, computational trees first");
    json["signature"] = json!(s.signature());
    json["qubits"] = json!(qubits);
    json["encoding"] = json!(encoding);

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["index", "tree", "metric", "computational"])?;
    for (i, t) in s.basis.trees.iter().enumerate() {
        w.write_record([i.to_string(), t.compact(), s.metric_signs[i].to_string(), s.computational_mask[i].to_string()])?;
    }
    let csv = into_string(w)?;

    let mut pretty = format!(
        "space ({}) with charge {}: dim {}, signature {:?}\n",
        tokens(&s.basis.leaves).join(","),
        s.basis.charge.token(),
        s.dim(),
        s.signature()
    );
    for (i, t) in s.basis.trees.iter().enumerate() {
        let tag = if s.computational_mask[i] { "comp" } else { "nc" };
        let _ = writeln!(pretty, "  {i}: {}  {:+}  {tag}", t.compact(), s.metric_signs[i]);
    }
    Ok(Output::new(json, Some(csv), pretty))
}

/// Leakage of an operator out of the computational subspace: the largest cross-block entry.
fn cross_block(m: &anyon_data::linalg::CMat, mask: &[bool]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if mask[i] != mask[j] {
                worst = worst.max(m[(i, j)].norm());
            }
        }
    }
    worst
}

pub fn braid(p: &ModelParams, a: &BraidArgs) -> Result<Output, CliError> {
    let leaves = labels(&a.system)?;
    let charge = charge(&a.charge)?;
    let w = word(&a.word)?;
    let engine = BraidEngine::new(p.clone());
    let bm = engine.evaluate_map(&w, &leaves, charge)?;
    let mut json = json!({
        "alpha": p.alpha_f64(),
        "word": w.to_string(),
        "system": tokens(&leaves),
        "charge": charge.token(),
        "from": bm.from.trees.iter().map(|t| t.compact()).collect::<Vec<_>>(),
        "to": tokens(&bm.to.leaves),
        "basis_out": bm.to.trees.iter().map(|t| t.compact()).collect::<Vec<_>>(),
        "matrix": matrix_json(&bm.matrix),
    });
    let mut pretty = format!("{} on ({}) -> ({}), charge {}\nbasis in:\n{}", w, a.system, tokens(&bm.to.leaves).join(","), charge.token(), basis_text(&bm.from));
    if !bm.is_operator() {
        let _ = write!(pretty, "basis out:\n{}", basis_text(&bm.to));
    }
    pretty.push_str("matrix:\n");
    pretty.push_str(&matrix_text(&bm.matrix));
    if bm.is_operator() && leaves == psi_leaves() && charge == Label::ALPHA {
        let (su2, su11) = leakage_norms(&bm.matrix);
        json["norms"] = json!({ "psi01": su11, "psi23": su2, "su11": su11, "su2": su2 });
        let _ = writeln!(pretty, "leakage norms |M01| = {su11:.9}, |M23| = {su2:.9}");
    } else if bm.is_operator() && qubit_layout(&leaves, charge).is_some() {
        let leak = cross_block(&bm.matrix, &bm.from.computational_mask());
        json["leakage"] = json!(leak);
        let _ = writeln!(pretty, "leakage out of the computational subspace {leak:.9e}");
    }
    Ok(Output::new(json, Some(matrix_csv(&bm.matrix)?), pretty))
}

pub fn reichardt(p: &ModelParams, a: &ReichardtArgs) -> Result<Output, CliError> {
    if a.k > MAX_DEPTH {
        return Err(gate_compile::GateError::DepthExceeded(a.k).into());
    }
    let seed = word(&a.word)?;
    let reports = match a.extended {
        Some(bits) if bits < 64 => return Err(CliError::usage(format!("--extended needs at least 64 bits, got {bits}"))),
        Some(bits) => reichardt_iterate_extended(p, &seed, a.k, bits)?,
        None => reichardt_iterate(&Protocol::new(p.clone(), seed)?, a.k)?,
    };
    let json = Value::Array(reports.iter().map(|r| r.to_json()).collect());
    let mut pretty = format!("{:>2}  {:>14}  {:>14}  {:>10}  {:>8}  theta\n", "k", "su2", "su11", "law", "len");
    for r in &reports {
        let law = r.law_defect.map(|d| format!("{d:.3e}")).unwrap_or_else(|| "-".into());
        let _ = writeln!(
            pretty,
            "{:>2}  {:>14.6e}  {:>14.6e}  {:>10}  {:>8}  ({:.6}, {:.6})",
            r.k, r.su2, r.su11, law, r.word_length, r.theta[0], r.theta[1]
        );
    }
    Ok(Output::new(json, Some(convergence_csv(&reports)?), pretty))
}

pub fn search(p: &ModelParams, cfg: &CliConfig, a: &SearchArgs) -> Result<Output, CliError> {
    if a.max_power < 1 {
        return Err(CliError::usage("--max-power must be at least 1"));
    }
    let sc = SearchConfig {
        max_len: a.max_len,
        threshold: a.threshold,
        max_power: a.max_power,
        include_half: a.half,
        jobs: cfg.jobs,
        limit: (a.limit > 0).then_some(a.limit),
        control_preserving: a.control_preserving,
    };
    let hits = search_low_leakage(p, &sc)?;
    let json = Value::Array(hits.iter().map(|h| h.to_json()).collect());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["word", "su2", "su11", "syllables", "len", "vacuum_defect"])?;
    let mut pretty = format!("{} words with both norms <= {}\n", hits.len(), a.threshold);
    for h in &hits {
        w.write_record([
            h.word.to_string(),
            format!("{:e}", h.su2),
            format!("{:e}", h.su11),
            h.syllables.to_string(),
            h.crossings.to_string(),
            format!("{:e}", h.vacuum_defect),
        ])?;
        let _ = writeln!(pretty, "{:.6}  {:.6}  {:>2}  {:>3}  {}", h.su2, h.su11, h.syllables, h.crossings, h.word);
    }
    Ok(Output::new(json, Some(into_string(w)?), pretty))
}

pub fn verify(p: &ModelParams, seed: u64) -> Output {
    let report = run_all(p, seed);
    let json = report_json(&report);
    let mut w = csv::Writer::from_writer(Vec::new());
    let _ = w.write_record(["name", "status", "defect", "detail"]);
    let mut pretty = String::new();
    for r in &report {
        let _ = w.write_record([r.name.clone(), r.status.to_string(), format!("{:e}", r.defect), r.detail.clone()]);
        let _ = writeln!(pretty, "{:<7} {:<26} {:>10.3e}  {}", r.status.to_string(), r.name, r.defect, r.detail);
    }
    let failed = failures(&report);
    let _ = writeln!(pretty, "{} checks, {failed} failed", report.len());
    let csv = into_string(w).ok();
    Output { json, csv, pretty, failed: failed > 0 }
}
