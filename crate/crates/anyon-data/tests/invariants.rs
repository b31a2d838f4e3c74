use anyon_data::dump::{matrix_from_json, matrix_json};
use anyon_data::linalg::{c, identity, max_diff, pseudo_unitarity_defect, CMat};
use anyon_data::{
    f_matrix, fuse, monodromy, r_symbol, s_sign, set_mp_precision, t_sign, Label, ModelParams,
};
use proptest::prelude::*;
use Label::*;

const LEGS: [Label; 6] = [Vacuum, Sigma, Psi, Alpha(0), Alpha(1), Alpha(-1)];

/// Non-integer alpha kept away from half-integers.
fn alpha() -> impl Strategy<Value = f64> {
    (0.05f64..7.95).prop_filter("near a half-integer", |a| {
        let x = 2.0 * a;
        (x - x.round()).abs() > 2e-3
    })
}

fn families() -> Vec<(Label, Label, Label, Label)> {
    vec![
        (Alpha(0), Sigma, Sigma, Alpha(0)),
        (Alpha(0), Sigma, Sigma, Alpha(2)),
        (Alpha(0), Sigma, Sigma, Alpha(-2)),
        (Alpha(0), Psi, Sigma, Alpha(1)),
        (Alpha(0), Psi, Sigma, Alpha(-1)),
        (Alpha(0), Sigma, Psi, Alpha(1)),
        (Alpha(0), Sigma, Psi, Alpha(-1)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn r_symbols_are_phases(a in alpha()) {
        let p = ModelParams::from_f64(a).unwrap();
        for x in LEGS {
            for y in LEGS {
                let Ok(outs) = fuse(x, y) else { continue };
                for z in outs {
                    if let Ok(r) = r_symbol(&p, x, y, z) {
                        prop_assert!((r.norm() - 1.0).abs() < 1e-12, "R({x},{y};{z}) = {r}");
                        let m = monodromy(&p, x, y, z).unwrap();
                        prop_assert!((m - r * r_symbol(&p, y, x, z).unwrap()).norm() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn normalized_f_matrices_are_pseudo_unitary(a in alpha()) {
        let p = ModelParams::from_f64(a).unwrap();
        for (w, x, y, z) in families() {
            let f = f_matrix(&p, w, x, y, z).unwrap();
            let jr = f.row_metric(&p).unwrap();
            let jc = f.col_metric(&p).unwrap();
            prop_assert!(pseudo_unitarity_defect(&f.data, &jc, &jr) < 1e-9, "{w}{x}{y}{z} at {a}");
            let inv = f.inverse().unwrap();
            prop_assert!(max_diff(&(&f.data * inv), &identity(f.rows.len())) < 1e-9);
        }
    }

    #[test]
    fn sign_functions_are_periodic(a in alpha()) {
        prop_assert_eq!(s_sign(&a).unwrap(), s_sign(&(a + 8.0)).unwrap());
        prop_assert_eq!(t_sign(&a).unwrap(), t_sign(&(a + 4.0)).unwrap());
    }

    #[test]
    fn fractions_parse_exactly(num in -400i64..400, den in 2i64..60) {
        prop_assume!(num % den != 0);
        let p = ModelParams::parse(&format!("{num}/{den}")).unwrap();
        prop_assert_eq!(p.alpha_f64(), num as f64 / den as f64);
    }

    #[test]
    fn integer_alpha_is_rejected(n in -50i64..50) {
        prop_assert!(ModelParams::parse(&n.to_string()).is_err());
        let multiple = format!("{}/3", 3 * n);
        prop_assert!(ModelParams::parse(&multiple).is_err());
    }

    #[test]
    fn json_matrices_round_trip(entries in prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 9)) {
        let m = CMat::from_iterator(3, 3, entries.iter().map(|&(x, y)| c(x, y)));
        let back = matrix_from_json(&serde_json::from_str(&matrix_json(&m).to_string()).unwrap()).unwrap();
        prop_assert_eq!(back, m);
    }
}

#[test]
fn extended_precision_agrees_with_double() {
    set_mp_precision(256);
    let p = ModelParams::parse("12/5").unwrap();
    let q = p.convert::<anyon_data::Mp>();
    for (w, x, y, z) in families() {
        let f = f_matrix(&p, w, x, y, z).unwrap();
        let g = f_matrix(&q, w, x, y, z).unwrap();
        let g64 = anyon_data::linalg::to_f64_matrix(&g.data);
        assert!(max_diff(&f.data, &g64) < 1e-13);
    }
}
