//! Deterministic random instance generation.
//!
//! Every check derives its own stream from `(seed, label)` so that check
//! order never perturbs draws: the generator is ChaCha12 seeded with
//! `seed XOR fnv1a(label)`. Identical configuration therefore reproduces
//! identical reports bit for bit.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::error::Result;
use crate::jensen::WeightVector;
use crate::operator::UnitVector;

/// Name of the generator echoed into every report.
pub const RNG_ALGORITHM: &str = "chacha12(seed xor fnv1a(label))";

fn fnv1a(s: &str) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in s.as_bytes() {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// The per-label stream of a run seed.
pub fn rng_for(seed: u64, label: &str) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed ^ fnv1a(label))
}

/// Uniform draw from `(0, 1]`, i.e. never exactly zero.
fn unit_open_closed(rng: &mut impl Rng) -> f64 {
    1.0 - rng.gen::<f64>()
}

/// Uniformly distributed weights on the probability simplex via normalized
/// exponential draws. With `strictly_positive` the whole vector is re-drawn
/// until every weight is at least `1e-6`.
pub fn sample_weights(n: usize, strictly_positive: bool, rng: &mut impl Rng) -> Result<WeightVector> {
    loop {
        let mut w: Vec<f64> = (0..n).map(|_| -unit_open_closed(rng).ln()).collect();
        let sum: f64 = w.iter().sum();
        if sum <= 0.0 {
            continue;
        }
        for v in &mut w {
            *v /= sum;
        }
        if strictly_positive && w.iter().any(|v| *v < 1e-6) {
            continue;
        }
        return WeightVector::new(w);
    }
}

/// Weights bounded well away from zero: a simplex draw blended 4:1 with the
/// uniform vector, so every entry is at least `1/(5n)`.
///
/// Bounds that rescale a reference Jensen gap by the weight ratio
/// `M = max p_i / q_i` amplify the gap's cancellation noise (about
/// `eps * max|f|`) by `M`. Drawing the reference weights `q` from here caps
/// `M` at `5n`, which keeps that noise orders of magnitude below the default
/// tolerance floor instead of within reach of it.
pub fn sample_floored_weights(n: usize, rng: &mut impl Rng) -> Result<WeightVector> {
    let raw = sample_weights(n, false, rng)?;
    let floor = 0.2 / n as f64;
    WeightVector::new(raw.iter().map(|w| 0.8 * w + floor).collect())
}

/// Gaussian direction scaled to unit norm; with `subunit` the result is
/// further shrunk by a uniform factor from `(0, 1]`.
pub fn sample_unit_vector(dim: usize, subunit: bool, rng: &mut impl Rng) -> Result<UnitVector> {
    loop {
        let coords: Vec<f64> = (0..dim).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let norm = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm < 1e-12 {
            continue;
        }
        let scale = if subunit { unit_open_closed(rng) } else { 1.0 };
        let coords = coords.into_iter().map(|c| c / norm * scale).collect();
        return UnitVector::new(coords);
    }
}

/// `n` uniform draws from the closed box `[lo, hi]`.
pub fn sample_points(n: usize, lo: f64, hi: f64, rng: &mut impl Rng) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_label_separated() {
        let a: Vec<f64> = {
            let mut rng = rng_for(42, "alpha");
            (0..5).map(|_| rng.gen()).collect()
        };
        let b: Vec<f64> = {
            let mut rng = rng_for(42, "alpha");
            (0..5).map(|_| rng.gen()).collect()
        };
        let c: Vec<f64> = {
            let mut rng = rng_for(42, "beta");
            (0..5).map(|_| rng.gen()).collect()
        };
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn weights_live_on_the_simplex() {
        let mut rng = rng_for(7, "weights");
        for n in 1..=8 {
            let w = sample_weights(n, false, &mut rng).unwrap();
            assert_eq!(w.len(), n);
            assert!((w.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            let w = sample_weights(n, true, &mut rng).unwrap();
            assert!(w.iter().all(|v| v >= 1e-6));
            assert!(w.strictly_positive());
        }
    }

    #[test]
    fn floored_weights_respect_their_floor() {
        let mut rng = rng_for(7, "floored");
        for n in 1..=8 {
            let w = sample_floored_weights(n, &mut rng).unwrap();
            assert_eq!(w.len(), n);
            assert!((w.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            assert!(w.iter().all(|v| v >= 0.2 / n as f64 - 1e-15));
        }
    }

    #[test]
    fn unit_vectors_have_unit_norm() {
        let mut rng = rng_for(7, "vectors");
        for dim in [1usize, 2, 3, 5, 8, 16] {
            let x = sample_unit_vector(dim, false, &mut rng).unwrap();
            assert!((x.norm() - 1.0).abs() <= 1e-12);
            let x = sample_unit_vector(dim, true, &mut rng).unwrap();
            assert!(x.norm() > 0.0 && x.norm() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn points_respect_their_box() {
        let mut rng = rng_for(7, "points");
        let pts = sample_points(1000, -2.0, 3.0, &mut rng);
        assert!(pts.iter().all(|p| (-2.0..=3.0).contains(p)));
    }
}
