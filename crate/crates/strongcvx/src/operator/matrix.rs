//! Dense real symmetric matrices with a cached spectral decomposition.
//!
//! Everything the inequality layer needs reduces to three primitives: the
//! eigendecomposition `A = Q diag(l) Q^T`, the functional calculus
//! `f(A) = Q diag(f(l)) Q^T`, and quadratic forms `<A x, x>`. The
//! decomposition is computed once per matrix by a cyclic Jacobi sweep and
//! memoised, so repeated functional-calculus calls on the same matrix are
//! cheap.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::funcs::Interval;

/// Relative symmetry tolerance accepted by [`HermitianMatrix::new`].
const SYMMETRY_TOL: f64 = 1e-14;
/// The Jacobi iteration stops once the off-diagonal Frobenius mass falls
/// below this multiple of the full Frobenius norm.
const JACOBI_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order and the matching orthonormal eigenvectors.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    /// Column-major: entry `i` of eigenvector `k` sits at `i + k * dim`.
    vectors: Vec<f64>,
}

impl SpectralDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// The unit eigenvector paired with `eigenvalues()[k]`.
    pub fn eigenvector(&self, k: usize) -> &[f64] {
        let dim = self.dim();
        &self.vectors[k * dim..(k + 1) * dim]
    }

    /// Coordinates of `x` in the eigenbasis.
    fn coords(&self, x: &[f64]) -> Vec<f64> {
        let dim = self.dim();
        (0..dim)
            .map(|k| {
                self.eigenvector(k)
                    .iter()
                    .zip(x)
                    .map(|(&qik, &xi)| qik * xi)
                    .sum()
            })
            .collect()
    }
}

/// A real symmetric matrix, stored dense row-major.
pub struct HermitianMatrix {
    dim: usize,
    data: Vec<f64>,
    spectral: OnceLock<SpectralDecomposition>,
}

impl HermitianMatrix {
    /// Builds a matrix from row-major entries.
    ///
    /// Entries must be finite and symmetric within `1e-14` relative to the
    /// largest entry magnitude; the stored matrix is symmetrised exactly so
    /// all downstream code can rely on `a[i][j] == a[j][i]` bit for bit.
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyInput);
        }
        if data.len() != dim * dim {
            return Err(Error::DimMismatch { expected: dim * dim, got: data.len() });
        }
        let mut scale = 1.0f64;
        for &v in &data {
            if !v.is_finite() {
                return Err(Error::InvalidParameter {
                    what: format!("matrix entries must be finite, got {v}"),
                });
            }
            scale = scale.max(v.abs());
        }
        let mut data = data;
        for i in 0..dim {
            for j in (i + 1)..dim {
                let upper = data[i * dim + j];
                let lower = data[j * dim + i];
                if (upper - lower).abs() > SYMMETRY_TOL * scale {
                    return Err(Error::NotSymmetric { row: j, col: i });
                }
                let mean = 0.5 * (upper + lower);
                data[i * dim + j] = mean;
                data[j * dim + i] = mean;
            }
        }
        Ok(Self { dim, data, spectral: OnceLock::new() })
    }

    /// Construction path for matrices assembled symmetric by design.
    pub(crate) fn from_symmetric_parts(dim: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), dim * dim);
        debug_assert!((0..dim)
            .all(|i| (0..dim).all(|j| data[i * dim + j] == data[j * dim + i])));
        Self { dim, data, spectral: OnceLock::new() }
    }

    /// Stores a decomposition computed alongside the matrix itself.
    pub(crate) fn seed_spectral(&self, decomposition: SpectralDecomposition) {
        let _ = self.spectral.set(decomposition);
    }

    pub fn diag(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        let dim = values.len();
        let mut data = vec![0.0; dim * dim];
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::InvalidParameter {
                    what: format!("matrix entries must be finite, got {v}"),
                });
            }
            data[i * dim + i] = v;
        }
        Ok(Self { dim, data, spectral: OnceLock::new() })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::diag(&vec![1.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.dim + col]
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.dim {
            return Err(Error::DimMismatch { expected: self.dim, got: x.len() });
        }
        Ok((0..self.dim)
            .map(|i| {
                self.data[i * self.dim..(i + 1) * self.dim]
                    .iter()
                    .zip(x)
                    .map(|(&aij, &xj)| aij * xj)
                    .sum()
            })
            .collect())
    }

    /// `<A x, x>` for an arbitrary coordinate slice.
    pub fn quadratic_form(&self, x: &[f64]) -> Result<f64> {
        let ax = self.matvec(x)?;
        Ok(ax.iter().zip(x).map(|(&ai, &xi)| ai * xi).sum())
    }

    /// The cached eigendecomposition, computed on first use by cyclic Jacobi
    /// rotations.
    pub fn eigh(&self) -> Result<&SpectralDecomposition> {
        if let Some(s) = self.spectral.get() {
            return Ok(s);
        }
        let s = jacobi_eigh(self.dim, &self.data)?;
        Ok(self.spectral.get_or_init(|| s))
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

impl Clone for HermitianMatrix {
    fn clone(&self) -> Self {
        let spectral = OnceLock::new();
        if let Some(s) = self.spectral.get() {
            let _ = spectral.set(s.clone());
        }
        Self { dim: self.dim, data: self.data.clone(), spectral }
    }
}

impl PartialEq for HermitianMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.data == other.data
    }
}

impl fmt::Debug for HermitianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rows = f.debug_list();
        for i in 0..self.dim {
            rows.entry(&&self.data[i * self.dim..(i + 1) * self.dim]);
        }
        rows.finish()
    }
}

/// Applies `f` to the spectrum: `f(A) = Q diag(f(l)) Q^T`.
///
/// Every eigenvalue must lie in `domain`; use this to surface honest
/// domain errors before any function value is taken.
pub fn apply_function(
    a: &HermitianMatrix,
    domain: Interval,
    f: impl Fn(f64) -> f64,
) -> Result<HermitianMatrix> {
    let spectral = a.eigh()?;
    for &ev in spectral.eigenvalues() {
        if !domain.contains(ev) {
            return Err(Error::SpectrumOutsideDomain { eigenvalue: ev, domain: domain.to_string() });
        }
    }
    Ok(assemble_from_spectrum(spectral, f))
}

/// Functional calculus without a domain gate, for maps (like the shifted
/// penalty `t -> F(t - q)`) that are total on the relevant difference set.
pub(crate) fn apply_to_spectrum(
    a: &HermitianMatrix,
    map: impl Fn(f64) -> f64,
) -> Result<HermitianMatrix> {
    Ok(assemble_from_spectrum(a.eigh()?, map))
}

fn assemble_from_spectrum(
    spectral: &SpectralDecomposition,
    f: impl Fn(f64) -> f64,
) -> HermitianMatrix {
    let dim = spectral.dim();
    let mapped: Vec<f64> = spectral.eigenvalues().iter().map(|&ev| f(ev)).collect();
    let mut data = vec![0.0; dim * dim];
    for i in 0..dim {
        for j in i..dim {
            let mut sum = 0.0;
            for (k, &fk) in mapped.iter().enumerate() {
                let col = spectral.eigenvector(k);
                sum += fk * col[i] * col[j];
            }
            data[i * dim + j] = sum;
            data[j * dim + i] = sum;
        }
    }
    HermitianMatrix::from_symmetric_parts(dim, data)
}

/// Plain row-major matrix product, for cross-checking the functional
/// calculus against direct arithmetic.
pub(crate) fn matmul_raw(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<Vec<f64>> {
    if a.dim != b.dim {
        return Err(Error::DimMismatch { expected: a.dim, got: b.dim });
    }
    let dim = a.dim;
    let mut out = vec![0.0; dim * dim];
    for i in 0..dim {
        for k in 0..dim {
            let aik = a.data[i * dim + k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..dim {
                out[i * dim + j] += aik * b.data[k * dim + j];
            }
        }
    }
    Ok(out)
}

fn off_diagonal_norm(dim: usize, data: &[f64]) -> f64 {
    let mut sum = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                let v = data[i * dim + j];
                sum += v * v;
            }
        }
    }
    sum.sqrt()
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// Sweeps all upper-triangle pivots in row order, rotating each one to zero,
/// until the off-diagonal Frobenius mass drops below `1e-13` of the matrix
/// norm. Convergence is quadratic once the matrix is nearly diagonal; 100
/// sweeps is far beyond what any well-posed input needs, so running out is
/// reported as an error rather than returning garbage.
fn jacobi_eigh(dim: usize, input: &[f64]) -> Result<SpectralDecomposition> {
    if dim == 1 {
        return Ok(SpectralDecomposition { eigenvalues: vec![input[0]], vectors: vec![1.0] });
    }
    let mut a = input.to_vec();
    // Accumulated rotations, row-major: v[i * dim + k] is entry i of the
    // eventual eigenvector k.
    let mut v = vec![0.0; dim * dim];
    for i in 0..dim {
        v[i * dim + i] = 1.0;
    }
    let norm = off_diagonal_norm(dim, &a).hypot(
        (0..dim).map(|i| a[i * dim + i] * a[i * dim + i]).sum::<f64>().sqrt(),
    );
    let target = JACOBI_TOL * norm.max(f64::MIN_POSITIVE);

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(dim, &a) <= target {
            converged = true;
            break;
        }
        for p in 0..dim - 1 {
            for q in (p + 1)..dim {
                let apq = a[p * dim + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * dim + p];
                let aqq = a[q * dim + q];
                let theta = (aqq - app) / (2.0 * apq);
                // tan of the rotation angle, the root of t^2 + 2 theta t - 1
                // with the smaller magnitude (the stable choice).
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * dim + p] = app - t * apq;
                a[q * dim + q] = aqq + t * apq;
                a[p * dim + q] = 0.0;
                a[q * dim + p] = 0.0;
                for i in 0..dim {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i * dim + p];
                    let aiq = a[i * dim + q];
                    let new_p = c * aip - s * aiq;
                    let new_q = s * aip + c * aiq;
                    a[i * dim + p] = new_p;
                    a[p * dim + i] = new_p;
                    a[i * dim + q] = new_q;
                    a[q * dim + i] = new_q;
                }
                for i in 0..dim {
                    let vip = v[i * dim + p];
                    let viq = v[i * dim + q];
                    v[i * dim + p] = c * vip - s * viq;
                    v[i * dim + q] = s * vip + c * viq;
                }
            }
        }
    }
    if !converged && off_diagonal_norm(dim, &a) > target {
        return Err(Error::NoConvergence { dim });
    }

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&i, &j| a[i * dim + i].total_cmp(&a[j * dim + j]));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[k * dim + k]).collect();
    let mut vectors = vec![0.0; dim * dim];
    for (slot, &k) in order.iter().enumerate() {
        for i in 0..dim {
            vectors[slot * dim + i] = v[i * dim + k];
        }
    }
    Ok(SpectralDecomposition { eigenvalues, vectors })
}

impl SpectralDecomposition {
    /// Builds a decomposition directly from known parts (ascending
    /// eigenvalues and orthonormal columns); used when a matrix is sampled
    /// from its spectrum in the first place.
    pub(crate) fn from_parts(eigenvalues: Vec<f64>, vectors: Vec<f64>) -> Self {
        debug_assert_eq!(vectors.len(), eigenvalues.len() * eigenvalues.len());
        Self { eigenvalues, vectors }
    }

    /// `<f(A) x, x>` evaluated through the eigenbasis without assembling
    /// `f(A)`.
    pub fn quadratic_form_of(&self, f: impl Fn(f64) -> f64, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim() {
            return Err(Error::DimMismatch { expected: self.dim(), got: x.len() });
        }
        let coords = self.coords(x);
        Ok(self
            .eigenvalues
            .iter()
            .zip(&coords)
            .map(|(&ev, &y)| f(ev) * y * y)
            .sum())
    }

    /// Like [`Self::quadratic_form_of`] with the per-eigenvalue values
    /// already computed, for maps whose evaluation can fail.
    pub fn quadratic_form_weighted(&self, values: &[f64], x: &[f64]) -> Result<f64> {
        if values.len() != self.dim() {
            return Err(Error::DimMismatch { expected: self.dim(), got: values.len() });
        }
        if x.len() != self.dim() {
            return Err(Error::DimMismatch { expected: self.dim(), got: x.len() });
        }
        let coords = self.coords(x);
        Ok(values.iter().zip(&coords).map(|(&v, &y)| v * y * y).sum())
    }
}

/// Renders a matrix in the plain text exchange format: a first line holding
/// the dimension, then one whitespace-separated row per line. Numbers use
/// the shortest representation that round-trips.
pub fn format_matrix(a: &HermitianMatrix) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", a.dim()));
    for i in 0..a.dim() {
        let row: Vec<String> = (0..a.dim()).map(|j| format!("{}", a.get(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the format produced by [`format_matrix`]. Blank lines are ignored;
/// line numbers in errors are 1-based over the original text.
pub fn parse_matrix(text: &str) -> Result<HermitianMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty());
    let (header_no, header) = lines.next().ok_or(Error::ParseMatrix {
        line: 1,
        what: "empty input, expected a dimension header".into(),
    })?;
    let dim: usize = header.trim().parse().map_err(|_| Error::ParseMatrix {
        line: header_no + 1,
        what: format!("expected a dimension, got {:?}", header.trim()),
    })?;
    if dim == 0 {
        return Err(Error::ParseMatrix { line: header_no + 1, what: "dimension must be at least 1".into() });
    }
    let mut data = Vec::with_capacity(dim * dim);
    let mut rows = 0usize;
    for (line_no, line) in lines {
        if rows == dim {
            return Err(Error::ParseMatrix {
                line: line_no + 1,
                what: format!("expected {dim} rows, found extra content"),
            });
        }
        let mut count = 0usize;
        for tok in line.split_whitespace() {
            let value: f64 = tok.parse().map_err(|_| Error::ParseMatrix {
                line: line_no + 1,
                what: format!("expected a number, got {tok:?}"),
            })?;
            data.push(value);
            count += 1;
        }
        if count != dim {
            return Err(Error::ParseMatrix {
                line: line_no + 1,
                what: format!("expected {dim} entries in this row, got {count}"),
            });
        }
        rows += 1;
    }
    if rows != dim {
        return Err(Error::ParseMatrix {
            line: text.lines().count(),
            what: format!("expected {dim} rows, got {rows}"),
        });
    }
    HermitianMatrix::new(dim, data)
}
