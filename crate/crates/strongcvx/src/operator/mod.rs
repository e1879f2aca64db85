//! Finite-dimensional operator versions of the scalar inequalities.
//!
//! Real symmetric matrices stand in for self-adjoint operators: the
//! functional calculus acts through the eigendecomposition, states are
//! vectors of norm one (or at most one where allowed), and every scalar
//! bound acquires a matrix analogue by replacing point evaluations with
//! quadratic forms `<f(A) x, x>`.
//!
//! [`matrix`] holds the linear algebra; [`inequalities`] the bound
//! computations themselves. This module adds the two state types and the
//! random model used by the verification harness.

mod inequalities;
mod matrix;

pub use inequalities::{
    eq43_fstrong_check, holder_mccarthy_baseline, holder_mccarthy_refined, theorem33_check,
    theorem35_chain, theorem36_reverse, theorem41_subunit_check, HolderMcCarthy, OperatorJensen,
    Theorem35Chain, Theorem36Reverse,
};
pub use matrix::{
    apply_function, format_matrix, parse_matrix, HermitianMatrix, SpectralDecomposition,
};
pub(crate) use matrix::matmul_raw;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// A state vector: finite coordinates with norm in `(0, 1]`.
///
/// Most bounds require an exactly unit state and validate that themselves;
/// the subunit slack exists for the extension that explicitly allows
/// `0 < ||x|| <= 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitVector {
    coords: Vec<f64>,
    norm: f64,
}

impl UnitVector {
    /// Accepts any finite vector with `0 < ||x|| <= 1` (plus rounding slack).
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        for &v in &coords {
            if !v.is_finite() {
                return Err(Error::InvalidParameter {
                    what: format!("vector entries must be finite, got {v}"),
                });
            }
        }
        let norm = coords.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm <= 0.0 {
            return Err(Error::BadNorm { norm, expected: "positive".into() });
        }
        if norm > 1.0 + 1e-12 {
            return Err(Error::BadNorm { norm, expected: "at most 1".into() });
        }
        Ok(Self { coords, norm })
    }

    /// Rescales an arbitrary nonzero vector to unit norm.
    pub fn normalized(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        let norm = coords.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::BadNorm { norm, expected: "positive and finite".into() });
        }
        Self::new(coords.into_iter().map(|v| v / norm).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Bounds that assume a unit state call this before computing anything.
    pub(crate) fn require_unit(&self) -> Result<()> {
        if (self.norm - 1.0).abs() > 1e-9 {
            return Err(Error::BadNorm { norm: self.norm, expected: "1".into() });
        }
        Ok(())
    }

    pub(crate) fn require_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::DimMismatch { expected: dim, got: self.dim() });
        }
        Ok(())
    }
}

/// Where to draw random spectra from: `dim` eigenvalues uniform in
/// `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumSpec {
    dim: usize,
    lo: f64,
    hi: f64,
}

impl SpectrumSpec {
    /// `lo == hi` is allowed and produces multiples of the identity, which
    /// is exactly the degenerate case the equality probes want.
    pub fn new(dim: usize, lo: f64, hi: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyInput);
        }
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { dim, lo, hi })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }
}

/// Random symmetric matrix with spectrum drawn uniformly from the spec's
/// box: `A = Q diag(l) Q^T` with `Q` a product of `dim` random Householder
/// reflections.
///
/// The construction knows the decomposition by design, so the returned
/// matrix carries its spectral cache already filled — `eigh` on it is free
/// and exact. The independent Jacobi path is exercised by matrices that
/// enter through [`HermitianMatrix::new`].
pub fn sample_hermitian(spec: &SpectrumSpec, rng: &mut impl Rng) -> HermitianMatrix {
    let dim = spec.dim;
    let mut eigenvalues: Vec<f64> = (0..dim)
        .map(|_| {
            if spec.lo == spec.hi {
                spec.lo
            } else {
                rng.gen_range(spec.lo..=spec.hi)
            }
        })
        .collect();
    eigenvalues.sort_by(f64::total_cmp);

    // Q starts as the identity and is hit by dim Householder reflections
    // I - 2 v v^T with random Gaussian unit directions v.
    let mut q = vec![0.0; dim * dim];
    for i in 0..dim {
        q[i * dim + i] = 1.0;
    }
    let mut v = vec![0.0; dim];
    for _ in 0..dim {
        loop {
            let mut norm2 = 0.0;
            for entry in &mut v {
                *entry = rng.sample::<f64, _>(StandardNormal);
                norm2 += *entry * *entry;
            }
            if norm2 > 1e-24 {
                let inv = norm2.sqrt().recip();
                for entry in &mut v {
                    *entry *= inv;
                }
                break;
            }
        }
        for j in 0..dim {
            let mut dot = 0.0;
            for i in 0..dim {
                dot += v[i] * q[i * dim + j];
            }
            let twice = 2.0 * dot;
            for i in 0..dim {
                q[i * dim + j] -= twice * v[i];
            }
        }
    }

    let mut data = vec![0.0; dim * dim];
    for i in 0..dim {
        for j in i..dim {
            let mut sum = 0.0;
            for (k, &ev) in eigenvalues.iter().enumerate() {
                sum += ev * q[i * dim + k] * q[j * dim + k];
            }
            data[i * dim + j] = sum;
            data[j * dim + i] = sum;
        }
    }
    let matrix = HermitianMatrix::from_symmetric_parts(dim, data);

    let mut vectors = vec![0.0; dim * dim];
    for k in 0..dim {
        for i in 0..dim {
            vectors[k * dim + i] = q[i * dim + k];
        }
    }
    matrix.seed_spectral(SpectralDecomposition::from_parts(eigenvalues, vectors));
    matrix
}
