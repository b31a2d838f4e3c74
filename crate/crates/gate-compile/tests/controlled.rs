use anyon_data::linalg::{identity, max_diff, CMat};
use anyon_data::{parse_labels, Label, ModelParams};
use braid_engine::{BraidEngine, BraidWord, Generator};
use gate_compile::{controlled_gate, reichardt_iterate, Protocol, W_WORD};

/// Rewrites a word on (alpha, psi, sigma, sigma) as a braid of the four sigmas of H_2,
/// with psi the fused pair of the first two.
fn lift(word: &BraidWord) -> BraidWord {
    let mut out = String::new();
    for l in &word.letters {
        let unit = match (l.gen, l.power.signum()) {
            (Generator::Wrap, 1) => "X b2 X b2^-1 ",
            (Generator::Wrap, _) => "b2 X^-1 b2^-1 X^-1 ",
            (Generator::Exchange(2), _) if l.power % 2 == 0 => {
                if l.power > 0 {
                    "b3 b2 b2 b3 "
                } else {
                    "b3^-1 b2^-1 b2^-1 b3^-1 "
                }
            }
            _ => panic!("no lift for {l}"),
        };
        let reps = if l.gen == Generator::Wrap { l.power.unsigned_abs() } else { l.power.unsigned_abs() / 2 };
        for _ in 0..reps {
            out.push_str(unit);
        }
    }
    out.parse().unwrap()
}

#[test]
fn psi_sector_braids_are_braids_of_h2() {
    let p = ModelParams::parse("12/5").unwrap();
    let proto = Protocol::new(p.clone(), W_WORD.parse().unwrap()).unwrap();
    let e = BraidEngine::new(p.clone());
    let on_h2 = e.evaluate(&lift(&proto.seed), &parse_labels("a,s,s,s,s").unwrap(), Label::ALPHA).unwrap().matrix;
    let gate = controlled_gate(&p, &proto.w_vacuum, &proto.w).unwrap();
    assert!(max_diff(&gate.matrix, &on_h2) < 1e-12);
}

#[test]
fn depth_three_gate_is_entangling() {
    let p = ModelParams::parse("12/5").unwrap();
    let proto = Protocol::new(p.clone(), W_WORD.parse().unwrap()).unwrap();
    let reports = reichardt_iterate(&proto, 3).unwrap();
    let mut w = proto.w.clone();
    let mut v = proto.w_vacuum.clone();
    for _ in 0..3 {
        w = gate_compile::reichardt_step(&w, &proto.d).unwrap();
        v = gate_compile::reichardt_step(&v, &proto.d_vacuum).unwrap();
    }
    assert!(max_diff(&v, &identity(2)) < 1e-9);
    assert!((w[(0, 1)].norm() - reports[3].su11).abs() < 1e-15);
    let gate = controlled_gate(&p, &v, &w).unwrap();
    assert!(gate.schmidt_rank >= 2);
    assert!(gate.leakage < 1e-5);
}

#[test]
fn shape_errors() {
    let p = ModelParams::parse("12/5").unwrap();
    assert!(controlled_gate(&p, &identity::<f64>(3), &identity(4)).is_err());
    assert!(controlled_gate(&p, &identity::<f64>(2), &CMat::zeros(4, 3)).is_err());
}
