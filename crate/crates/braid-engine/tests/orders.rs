use anyon_data::{parse_labels, Label, ModelParams};
use braid_engine::closed_form::exchange_phase;
use braid_engine::{eigenphases, matrix_order, BraidEngine, BraidError, BraidWord, Order};

fn h1_matrix(alpha: &str, word: &str) -> anyon_data::CMat {
    let e = BraidEngine::new(ModelParams::parse(alpha).unwrap());
    let w: BraidWord = word.parse().unwrap();
    e.evaluate(&w, &parse_labels("a,s,s").unwrap(), Label::ALPHA).unwrap().matrix
}

#[test]
fn b2_has_order_four() {
    for alpha in ["2.4", "2.7", "12/5", "2.05"] {
        let p = ModelParams::parse(alpha).unwrap();
        let raw = h1_matrix(alpha, "b2");
        assert_eq!(matrix_order(&raw, 100, 1e-10).unwrap(), Order { projective: 4, strict: Some(16) }, "{alpha}");
        let phased = raw.map(|z| z * exchange_phase(&p));
        assert_eq!(matrix_order(&phased, 100, 1e-10).unwrap(), Order { projective: 4, strict: Some(8) }, "{alpha}");
    }
}

#[test]
fn b2_x_b2_squared_has_no_finite_order_at_twelve_fifths() {
    let m = h1_matrix("12/5", "b2 X b2^2");
    assert_eq!(matrix_order(&m, 10_000, 1e-8), Err(BraidError::NotFoundWithin(10_000)));
}

#[test]
fn b2_x_b2_squared_trace_is_a_root_of_the_quartic() {
    let m = h1_matrix("12/5", "b2 X b2^2");
    let det = m.determinant();
    let half_trace = (m.trace() / det.sqrt() / 2.0).re;
    let x = -2.0 * half_trace;
    assert!((x.powi(4) - 6.0 * x * x + 4.0).abs() < 1e-10);
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((x.abs() - 2f64.sqrt() / golden).abs() < 1e-10);
    let (t1, t2) = eigenphases(&m).unwrap();
    assert!((t1.abs() - half_trace.acos()).abs() < 1e-10 && (t1 + t2).abs() < 1e-10);
}
