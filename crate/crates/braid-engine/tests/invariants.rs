use anyon_data::linalg::{identity, max_abs, max_diff, pseudo_unitarity_defect};
use anyon_data::{parse_labels, Label, ModelParams};
use braid_engine::{BraidEngine, BraidWord, Generator, Letter};
use proptest::prelude::*;

fn letter() -> impl Strategy<Value = Letter> {
    (prop_oneof![Just(Generator::Wrap), Just(Generator::Exchange(2))], prop_oneof![Just(-2), Just(-1), Just(1), Just(2)])
        .prop_map(|(gen, power)| Letter { gen, power })
}

fn even_word() -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(letter(), 0..8).prop_map(|mut ls| {
        let odd: i32 = ls.iter().filter(|l| l.gen != Generator::Wrap).map(|l| l.power).sum();
        if odd % 2 != 0 {
            ls.push(Letter { gen: Generator::Exchange(2), power: 1 });
        }
        BraidWord::new(ls)
    })
}

fn alpha() -> impl Strategy<Value = f64> {
    (2.01f64..2.99).prop_filter("away from 2.5", |a| (a - 2.5).abs() > 1e-3)
}

/// Words whose exchanges always come in pairs, so the control strand is back in place whenever X acts.
fn control_preserving_word() -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((letter(), any::<bool>()), 0..8).prop_map(|ls| {
        BraidWord::new(
            ls.into_iter()
                .map(|(l, neg)| match l.gen {
                    Generator::Wrap => l,
                    _ => Letter { gen: l.gen, power: if neg { -2 } else { 2 } },
                })
                .collect(),
        )
    })
}

/// Rounding grows with the largest partial product P and its inverse, |P| |P^-1| = |P|^2.
fn scaled_tol(e: &BraidEngine, w: &BraidWord, leaves: &[Label]) -> f64 {
    let largest = (1..=w.letters.len())
        .map(|k| max_abs(&e.evaluate_map(&BraidWord::new(w.letters[..k].to_vec()), leaves, Label::ALPHA).unwrap().matrix))
        .fold(1.0, f64::max);
    1e-11 * (1.0 + largest).powi(2)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn words_are_pseudo_unitary(a in alpha(), w in even_word()) {
        let e = BraidEngine::new(ModelParams::<f64>::from_f64(a).unwrap());
        for system in ["a,s,s", "a,psi,s,s", "a,s,s,s,s"] {
            let leaves = parse_labels(system).unwrap();
            let signs = e.space(&leaves, Label::ALPHA).unwrap().metric_signs;
            let m = e.evaluate(&w, &leaves, Label::ALPHA).unwrap();
            let tol = scaled_tol(&e, &w, &leaves);
            let d = pseudo_unitarity_defect(&m.matrix, &signs, &signs);
            prop_assert!(d < tol, "{system}: defect {d:e}, tol {tol:e}");
            let det = (m.matrix.determinant().norm() - 1.0).abs();
            prop_assert!(det < tol, "{system}: det defect {det:e}, tol {tol:e}");
        }
    }

    #[test]
    fn word_times_inverse_is_identity(a in alpha(), w in even_word()) {
        let e = BraidEngine::new(ModelParams::<f64>::from_f64(a).unwrap());
        let leaves = parse_labels("a,psi,s,s").unwrap();
        let round_trip = w.then(&w.inverse());
        let m = e.evaluate(&round_trip, &leaves, Label::ALPHA).unwrap();
        let tol = scaled_tol(&e, &round_trip, &leaves);
        let d = max_diff(&m.matrix, &identity(4));
        prop_assert!(d < tol, "defect {d:e}, tol {tol:e}");
    }

    #[test]
    fn vacuum_sector_is_trivial(a in alpha(), w in control_preserving_word()) {
        let e = BraidEngine::new(ModelParams::<f64>::from_f64(a).unwrap());
        let m = e.evaluate(&w, &parse_labels("a,1,s,s").unwrap(), Label::ALPHA).unwrap();
        prop_assert!(max_diff(&m.matrix, &identity(2)) < 1e-12);
    }
}
