use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Distance kept from integers and half-integers, where bubble coefficients or q-powers degenerate.
pub const GUARD_BAND: f64 = 1e-3;

pub fn near_singular(alpha: f64) -> bool {
    let x = 2.0 * alpha;
    (x - x.round()).abs() < 2.0 * GUARD_BAND
}

/// `n` values of alpha in (2, 3), reproducible from `seed`.
pub fn sample_alphas(seed: u64, n: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let a: f64 = rng.random_range(2.0..3.0);
        if !near_singular(a) {
            out.push(a);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_guarded() {
        let a = sample_alphas(7, 200);
        assert_eq!(a, sample_alphas(7, 200));
        assert_ne!(a, sample_alphas(8, 200));
        assert!(a.iter().all(|&x| x > 2.0 && x < 3.0 && (x - 2.5).abs() >= GUARD_BAND));
        assert!(near_singular(2.5004) && near_singular(2.9995) && !near_singular(2.4));
    }
}
