//! Individual checks. Each takes the run parameters and seed and never panics on numeric trouble.

use std::f64::consts::PI;

use anyon_data::linalg::{diagonal, identity, max_diff, pseudo_unitarity_defect, CMat};
use anyon_data::{f_matrix, fuse, parse_labels, r_symbol, s_sign, t_sign, Label, ModelParams};
use braid_engine::closed_form::{exchange_h1, exchange_phase, wrap_h1, wrap_phase};
use braid_engine::{block_decompose, matrix_order, on_qubit, BraidEngine, BraidError, BraidWord, Generator};
use fusion_space::{control_basis_transform, Decoded, IndefSpace, QubitCode};
use gate_compile::{
    controlled_gate, reichardt_iterate, reichardt_iterate_extended, reichardt_step, Protocol, D_WORD, LAW_TOL_DEEP,
    LAW_TOL_SHALLOW, SEARCH_WORD, W_WORD,
};
use num_complex::Complex;

use crate::pentagon::standard_sweep;
use crate::sample::sample_alphas;
use crate::{CheckResult, Status};

/// Identities that hold in exact arithmetic.
pub const TOL: f64 = 1e-10;

fn twelve_fifths() -> ModelParams {
    ModelParams::parse("12/5").expect("12/5 is a valid parameter")
}

fn run(name: &str, tol: f64, f: impl FnOnce() -> Result<(f64, String), String>) -> CheckResult {
    match f() {
        Ok((defect, detail)) => CheckResult::within(name, defect, tol, detail),
        Err(e) => CheckResult::new(name, Status::Fail, f64::NAN, e),
    }
}

fn eval(e: &BraidEngine, word: &str, system: &str) -> Result<CMat, String> {
    let w: BraidWord = word.parse().map_err(|e: BraidError| e.to_string())?;
    let leaves = parse_labels(system).map_err(|e| e.to_string())?;
    e.evaluate(&w, &leaves, Label::ALPHA).map(|m| m.matrix).map_err(|e| e.to_string())
}

pub fn closed_forms(p: &ModelParams, seed: u64) -> CheckResult {
    run("closed_forms", TOL, || {
        let mut alphas = vec![p.alpha_f64()];
        alphas.extend(sample_alphas(seed, 50));
        let mut worst: f64 = 0.0;
        for a in &alphas {
            let q = ModelParams::from_f64(*a).map_err(|e| e.to_string())?;
            let e = BraidEngine::new(q.clone());
            let x = eval(&e, "X", "a,s,s")?.map(|z| z * wrap_phase(&q));
            let b = eval(&e, "b2", "a,s,s")?.map(|z| z * exchange_phase(&q));
            let b_closed = exchange_h1(&q).map_err(|e| e.to_string())?;
            worst = worst.max(max_diff(&x, &wrap_h1(&q))).max(max_diff(&b, &b_closed));
        }
        Ok((worst, format!("X and b2 on H1 against the closed forms at {} values of alpha", alphas.len())))
    })
}

pub fn affine_relation(p: &ModelParams, _seed: u64) -> CheckResult {
    run("affine_relation", TOL, || {
        let e = BraidEngine::new(p.clone());
        let mut worst: f64 = 0.0;
        for system in ["a,s,s", "a,s,s,s,s", "a,psi,s,s"] {
            worst = worst.max(max_diff(&eval(&e, "X b2 X b2", system)?, &eval(&e, "b2 X b2 X", system)?));
        }
        Ok((worst, "X b2 X b2 = b2 X b2 X on H1, H2 and the psi sector".into()))
    })
}

pub fn pseudo_unitarity(p: &ModelParams, _seed: u64) -> CheckResult {
    run("pseudo_unitarity", TOL, || {
        let e = BraidEngine::new(p.clone());
        let mut worst: f64 = 0.0;
        let mut count = 0;
        for system in ["a,s,s", "a,s,s,s,s", "a,s,s,s,s,s,s", "a,psi,s,s", "a,s,psi,s", "a,1,s,s"] {
            let leaves = parse_labels(system).map_err(|e| e.to_string())?;
            for i in 0..leaves.len() {
                let gen = if i == 0 { Generator::Wrap } else { Generator::Exchange(i + 1) };
                for inv in [false, true] {
                    let Ok(s) = e.step(&leaves, Label::ALPHA, gen, inv) else { continue };
                    let j_in = e.space(&s.from.leaves, Label::ALPHA).map_err(|e| e.to_string())?.metric_signs;
                    let j_out = e.space(&s.to.leaves, Label::ALPHA).map_err(|e| e.to_string())?.metric_signs;
                    worst = worst.max(pseudo_unitarity_defect(&s.matrix, &j_in, &j_out));
                    count += 1;
                }
            }
        }
        Ok((worst, format!("{count} generator matrices")))
    })
}

pub fn pentagon(p: &ModelParams, seed: u64) -> CheckResult {
    let mut total = standard_sweep(p, TOL);
    for a in sample_alphas(seed, 20) {
        match ModelParams::from_f64(a) {
            Ok(q) => total.absorb(standard_sweep(&q, TOL)),
            Err(e) => return CheckResult::new("pentagon", Status::Fail, f64::NAN, e.to_string()),
        }
    }
    let missing: Vec<&str> = total.missing.iter().map(String::as_str).collect();
    let detail = format!(
        "{} verified, {} failed, {} skipped for missing data: {}",
        total.verified,
        total.failures,
        total.skipped,
        missing.join(" ")
    );
    let status = if total.failures > 0 {
        Status::Fail
    } else if total.verified == 0 {
        Status::Skipped
    } else {
        Status::Pass
    };
    CheckResult::new("pentagon", status, total.max_defect, detail)
}

pub fn blocks(p: &ModelParams, _seed: u64) -> CheckResult {
    run("blocks", TOL, || {
        let e = BraidEngine::new(p.clone());
        let h2 = "a,s,s,s,s";
        let mask = IndefSpace::qubits(p, 2).map_err(|e| e.to_string())?.computational_mask;
        let x1 = eval(&e, "X", "a,s,s")?;
        let b1 = eval(&e, "b2", "a,s,s")?;
        let a = p.alpha_f64();
        let root_q = identity::<f64>(2).map(|z| z * p.q_pow(&0.5));
        let j4_nc = diagonal(&[p.q_pow(&(1.0 - a)), p.q_pow(&(1.0 + a))]);
        let cases = [
            ("X", on_qubit(&x1, 0, 2), x1.clone()),
            ("b2", on_qubit(&b1, 0, 2), root_q.clone()),
            ("b4", on_qubit(&b1, 1, 2), root_q),
            ("b3 b2 X b2 b3", on_qubit(&x1, 1, 2), j4_nc),
        ];
        let mut worst: f64 = 0.0;
        for (word, comp, nc) in cases {
            let b = block_decompose(&eval(&e, word, h2)?, &mask, TOL).map_err(|e| format!("{word}: {e}"))?;
            worst = worst.max(max_diff(&b.computational, &comp)).max(max_diff(&b.noncomputational, &nc));
        }
        Ok((worst, "X, b2, b4 and J4 on H2 against their block forms".into()))
    })
}

fn signs_match(name: &str, p: &ModelParams, n: usize, expected: &[i8]) -> CheckResult {
    match IndefSpace::qubits(p, n) {
        Ok(s) => {
            let wrong = s.metric_signs.iter().zip(expected).filter(|(a, b)| a != b).count() + s.dim().abs_diff(expected.len());
            let status = if wrong == 0 { Status::Pass } else { Status::Fail };
            CheckResult::new(name, status, wrong as f64, format!("metric {:?}", s.metric_signs))
        }
        Err(e) => CheckResult::new(name, Status::Fail, f64::NAN, e.to_string()),
    }
}

pub fn signature_h1(p: &ModelParams, _seed: u64) -> CheckResult {
    signs_match("signature_h1", p, 1, &[1, 1])
}

pub fn signature_h2(p: &ModelParams, _seed: u64) -> CheckResult {
    signs_match("signature_h2", p, 2, &[1, 1, 1, 1, -1, 1])
}

pub fn computational_positive(_p: &ModelParams, seed: u64) -> CheckResult {
    run("computational_positive", 0.0, || {
        let mut negative = 0;
        let alphas = sample_alphas(seed, 100);
        for a in &alphas {
            let q = ModelParams::from_f64(*a).map_err(|e| e.to_string())?;
            for n in 1..=3 {
                let s = IndefSpace::qubits(&q, n).map_err(|e| e.to_string())?;
                negative += s.metric_signs.iter().zip(&s.computational_mask).filter(|(&g, &c)| c && g < 0).count();
            }
        }
        Ok((negative as f64, format!("negative computational vectors over {} values of alpha, n = 1..3", alphas.len())))
    })
}

pub fn dimensions(p: &ModelParams, _seed: u64) -> CheckResult {
    run("dimensions", 0.0, || {
        let mut wrong = 0;
        let mut dims = vec![];
        for n in 1..=4usize {
            let s = IndefSpace::qubits(p, n).map_err(|e| e.to_string())?;
            let binom = (1..=n).fold(1usize, |acc, i| acc * (n + i) / i);
            let comp = s.computational_mask.iter().filter(|&&c| c).count();
            wrong += usize::from(s.dim() != binom) + usize::from(comp != 1 << n);
            dims.push(format!("{}/{}", comp, s.dim()));
        }
        Ok((wrong as f64, format!("computational/total for n = 1..4: {}", dims.join(" "))))
    })
}

pub fn encode_decode(p: &ModelParams, _seed: u64) -> CheckResult {
    run("encode_decode", 0.0, || {
        let mut bad = 0;
        for n in 1..=4 {
            let code = QubitCode::new(n);
            let s = IndefSpace::qubits(p, n).map_err(|e| e.to_string())?;
            for x in 0..1usize << n {
                let bits: Vec<bool> = (0..n).map(|i| x >> i & 1 == 1).collect();
                let t = code.encode(&bits);
                bad += usize::from(code.decode(&t) != Decoded::Bits(bits.clone()));
                bad += usize::from(s.basis.index_of(&t) != Some(x));
            }
        }
        Ok((bad as f64, "round trip and basis position of every bit string, n = 1..4".into()))
    })
}

pub fn control_transform(p: &ModelParams, _seed: u64) -> CheckResult {
    run("control_transform", TOL, || {
        let cb = control_basis_transform(p, 2).map_err(|e| e.to_string())?;
        let inv = cb.inverse_transform().map_err(|e| e.to_string())?;
        let d = max_diff(&(&inv * &cb.transform), &identity(cb.dim())).max(cb.metric_transport_defect());
        Ok((d, "inverse pair and metric transport of the control basis of H2".into()))
    })
}

pub fn b2_order(p: &ModelParams, _seed: u64) -> CheckResult {
    run("b2_order", 0.0, || {
        let m = eval(&BraidEngine::new(p.clone()), "b2", "a,s,s")?;
        let o = matrix_order(&m, 100, TOL).map_err(|e| e.to_string())?;
        Ok((o.projective.abs_diff(4) as f64, format!("projective order {}, strict order {:?}", o.projective, o.strict)))
    })
}

pub fn b2_x_b2_squared_order(_p: &ModelParams, _seed: u64) -> CheckResult {
    let name = "b2_x_b2_squared_order";
    let m = match eval(&BraidEngine::new(twelve_fifths()), "b2 X b2^2", "a,s,s") {
        Ok(m) => m,
        Err(e) => return CheckResult::new(name, Status::Fail, f64::NAN, e),
    };
    match matrix_order(&m, 10_000, 1e-8) {
        Err(BraidError::NotFoundWithin(n)) => CheckResult::new(name, Status::Pass, 0.0, format!("no projective order up to {n} at alpha = 12/5")),
        Ok(o) => CheckResult::new(name, Status::Fail, o.projective as f64, format!("projective order {}", o.projective)),
        Err(e) => CheckResult::new(name, Status::Fail, f64::NAN, e.to_string()),
    }
}

pub fn d_identity(_p: &ModelParams, _seed: u64) -> CheckResult {
    run("d_identity", 1e-9, || {
        let e = BraidEngine::new(twelve_fifths());
        let d = eval(&e, D_WORD, "a,psi,s,s")?;
        let w = Complex::from_polar(1.0, 3.0 * PI / 5.0);
        let one = Complex::new(1.0, 0.0);
        let target = diagonal(&[w, one, one, w]);
        let args: Vec<String> = (0..4).map(|i| format!("{:.6}", d[(i, i)].arg())).collect();
        Ok((max_diff(&d, &target), format!("X^2 on the psi sector at 12/5 has diagonal arguments [{}]", args.join(", "))))
    })
}

pub fn w_leakage(_p: &ModelParams, _seed: u64) -> CheckResult {
    run("w_leakage", 1e-3, || {
        let e = BraidEngine::new(twelve_fifths());
        let w = eval(&e, W_WORD, "a,psi,s,s")?;
        let b = eval(&e, "b2^2", "a,psi,s,s")?;
        let (n01, n23, nb) = (w[(0, 1)].norm(), w[(2, 3)].norm(), b[(0, 1)].norm());
        let d = (n01 - 0.832).abs().max((n23 - 0.904).abs()).max(((nb - 1.943).abs() - 0.009).max(0.0));
        Ok((d, format!("|W01| = {n01:.7}, |W23| = {n23:.7}, |(b2^2)01| = {nb:.4}")))
    })
}

/// Worst ratio of law defect to its per-depth tolerance, for W (double) and the search word (extended).
pub fn fifth_power_law(_p: &ModelParams, _seed: u64) -> CheckResult {
    run("fifth_power_law", 1.0, || {
        let p = twelve_fifths();
        let w = Protocol::new(p.clone(), parse_word(W_WORD)?).map_err(|e| e.to_string())?;
        let r_w = reichardt_iterate(&w, 3).map_err(|e| e.to_string())?;
        let r_s = reichardt_iterate_extended(&p, &parse_word(SEARCH_WORD)?, 3, 384).map_err(|e| e.to_string())?;
        let mut worst: f64 = 0.0;
        let mut parts = vec![];
        for (label, r) in [("W", &r_w), ("search", &r_s)] {
            let defects: Vec<String> = r[1..]
                .iter()
                .map(|x| {
                    let d = x.law_defect.unwrap_or(f64::INFINITY);
                    worst = worst.max(d / if x.k <= 2 { LAW_TOL_SHALLOW } else { LAW_TOL_DEEP });
                    format!("{d:.2e}")
                })
                .collect();
            parts.push(format!("{label} [{}]", defects.join(", ")));
        }
        Ok((worst, format!("law defects for k = 1..3: {}", parts.join("; "))))
    })
}

/// Diagonal phases of the k = 3 iterate of W against the target values.
pub fn diagonal_phases_k3(_p: &ModelParams, _seed: u64) -> CheckResult {
    run("diagonal_phases", 0.01, || {
        let w = Protocol::new(twelve_fifths(), parse_word(W_WORD)?).map_err(|e| e.to_string())?;
        let r = reichardt_iterate(&w, 3).map_err(|e| e.to_string())?;
        let t = r[3].theta;
        let d = (t[0] - THETA_K3[0]).abs().max((t[1] - THETA_K3[1]).abs());
        Ok((d, format!("theta = ({:.6}, {:.6}), raw phases {:?}", t[0], t[1], r[3].raw_phases)))
    })
}

/// Target diagonal phases of the k = 3 iterate of W.
pub const THETA_K3: [f64; 2] = [-1.772, -1.682];

fn parse_word(s: &str) -> Result<BraidWord, String> {
    s.parse().map_err(|e: BraidError| e.to_string())
}

pub fn vacuum_triviality(_p: &ModelParams, _seed: u64) -> CheckResult {
    run("vacuum_triviality", TOL, || {
        let proto = Protocol::new(twelve_fifths(), parse_word(W_WORD)?).map_err(|e| e.to_string())?;
        let mut v = proto.w_vacuum.clone();
        let mut d = max_diff(&v, &identity(2)).max(max_diff(&proto.d_vacuum, &identity(2)));
        for _ in 0..3 {
            v = reichardt_step(&v, &proto.d_vacuum).map_err(|e| e.to_string())?;
            d = d.max(max_diff(&v, &identity(2)));
        }
        Ok((d, "W, D and the first three iterates with psi replaced by the vacuum".into()))
    })
}

pub fn controlled_gate_entangles(_p: &ModelParams, _seed: u64) -> CheckResult {
    let name = "controlled_gate_entangles";
    let go = || -> Result<(usize, f64), String> {
        let p = twelve_fifths();
        let proto = Protocol::new(p.clone(), parse_word(W_WORD)?).map_err(|e| e.to_string())?;
        let (mut w, mut v) = (proto.w.clone(), proto.w_vacuum.clone());
        for _ in 0..3 {
            w = reichardt_step(&w, &proto.d).map_err(|e| e.to_string())?;
            v = reichardt_step(&v, &proto.d_vacuum).map_err(|e| e.to_string())?;
        }
        let g = controlled_gate(&p, &v, &w).map_err(|e| e.to_string())?;
        Ok((g.schmidt_rank, g.leakage))
    };
    match go() {
        Ok((rank, leak)) => CheckResult::new(
            name,
            if rank >= 2 { Status::Pass } else { Status::Fail },
            leak,
            format!("operator-Schmidt rank {rank} of the k = 3 gate, leakage {leak:.3e}"),
        ),
        Err(e) => CheckResult::new(name, Status::Fail, f64::NAN, e),
    }
}

pub fn st_periodicity(_p: &ModelParams, seed: u64) -> CheckResult {
    run("st_periodicity", 0.0, || {
        let mut bad = 0;
        for a in sample_alphas(seed, 100) {
            for shift in [-4.0, 0.0, 2.0, 4.0] {
                let x = a + shift;
                let s = |y: f64| s_sign(&y).map_err(|e| e.to_string());
                let t = |y: f64| t_sign(&y).map_err(|e| e.to_string());
                bad += usize::from(s(x)? != s(x + 8.0)?) + usize::from(t(x)? != t(x + 4.0)?);
            }
        }
        Ok((bad as f64, "s(a) = s(a+8), t(a) = t(a+4)".into()))
    })
}

const LEGS: [Label; 6] = [Label::Vacuum, Label::Sigma, Label::Psi, Label::Alpha(0), Label::Alpha(1), Label::Alpha(-1)];

pub fn r_unit_modulus(p: &ModelParams, seed: u64) -> CheckResult {
    run("r_unit_modulus", TOL, || {
        let mut worst: f64 = 0.0;
        let mut count = 0;
        let mut alphas = vec![p.alpha_f64()];
        alphas.extend(sample_alphas(seed, 100));
        for a in alphas {
            let q = ModelParams::from_f64(a).map_err(|e| e.to_string())?;
            for b in LEGS {
                for c in LEGS {
                    let Ok(outs) = fuse(b, c) else { continue };
                    for o in outs {
                        if let Ok(r) = r_symbol(&q, b, c, o) {
                            worst = worst.max((r.norm() - 1.0).abs());
                            count += 1;
                        }
                    }
                }
            }
        }
        Ok((worst, format!("{count} R-symbols")))
    })
}

pub fn f_pseudo_unitarity(p: &ModelParams, seed: u64) -> CheckResult {
    run("f_pseudo_unitarity", TOL, || {
        let mut worst: f64 = 0.0;
        let mut count = 0;
        let mut alphas = vec![p.alpha_f64()];
        alphas.extend(sample_alphas(seed, 100));
        let families = [(Label::Sigma, Label::Sigma, 0), (Label::Sigma, Label::Sigma, 2), (Label::Sigma, Label::Sigma, -2), (Label::Psi, Label::Sigma, 1), (Label::Psi, Label::Sigma, -1), (Label::Sigma, Label::Psi, 1), (Label::Sigma, Label::Psi, -1)];
        for a in alphas {
            let q = ModelParams::from_f64(a).map_err(|e| e.to_string())?;
            for (b, c, d) in families {
                let f = f_matrix(&q, Label::ALPHA, b, c, Label::Alpha(d)).map_err(|e| e.to_string())?;
                let j_rows = f.row_metric(&q).map_err(|e| e.to_string())?;
                let j_cols = f.col_metric(&q).map_err(|e| e.to_string())?;
                let inv = f.inverse().map_err(|e| e.to_string())?;
                worst = worst
                    .max(pseudo_unitarity_defect(&f.data, &j_cols, &j_rows))
                    .max(max_diff(&(&f.data * inv), &identity(f.rows.len())));
                count += 1;
            }
        }
        Ok((worst, format!("{count} normalized F-matrices")))
    })
}
