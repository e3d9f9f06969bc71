//! Symmetric eigendecomposition by cyclic Jacobi rotations, and signature.

use crate::error::{Error, Result};
use crate::extensor::LinearExtensor;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// `‖s − s†‖∞ ≤ SYMMETRY_REL·‖s‖∞` is accepted as symmetric.
pub const SYMMETRY_REL: f64 = 1e-10;

/// Jacobi stops once the off-diagonal Frobenius norm is below `JACOBI_REL·‖s‖F`.
pub const JACOBI_REL: f64 = 1e-13;

/// Rotation budget per unit `n²`.
pub const JACOBI_ROTATIONS_PER_N2: usize = 30;

/// Eigenvalues with `|λ| ≤ DEGENERACY_REL·max|λ|` make a metric degenerate.
pub const DEGENERACY_REL: f64 = 1e-10;

/// Eigen-data of a symmetric extensor.
///
/// Positive eigenvalues come first in descending order, then the rest in
/// descending order of magnitude; exact ties keep Jacobi output order. Each
/// eigenvector is b-normalized with its first largest-magnitude component
/// positive.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition<T: Scalar> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: Vec<Multivector<T>>,
    /// Count of positive eigenvalues.
    pub p: usize,
    /// Count of negative eigenvalues.
    pub q: usize,
}

impl<T: Scalar> SpectralDecomposition<T> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Components of the `k`-th eigenvector.
    pub fn eigenvector_components(&self, k: usize) -> Vec<T> {
        self.eigenvectors[k]
            .vector_components()
            .expect("eigenvectors are grade 1")
    }

    /// `Σₖ λₖ vₖ vₖᵀ` as an extensor.
    pub fn reconstruct(&self) -> LinearExtensor<T> {
        let n = self.dim();
        let vecs: Vec<Vec<T>> = (0..n).map(|k| self.eigenvector_components(k)).collect();
        LinearExtensor::from_fn(n, |i, j| {
            (0..n).map(|k| self.eigenvalues[k] * vecs[k][i] * vecs[k][j]).sum()
        })
        .expect("finite eigen-data")
    }

    /// `g⁻¹ = Σ λ_k⁻¹ v_k v_kᵀ`; symmetric by construction.
    pub fn inverse(&self) -> Result<LinearExtensor<T>> {
        self.check_nondegenerate()?;
        let n = self.dim();
        let vecs: Vec<Vec<T>> = (0..n).map(|k| self.eigenvector_components(k)).collect();
        LinearExtensor::from_fn(n, |i, j| {
            (0..n).map(|k| vecs[k][i] * vecs[k][j] / self.eigenvalues[k]).sum()
        })
    }

    /// `det[g] = λ₁…λₙ`.
    pub fn det_from_eigen(&self) -> T {
        self.eigenvalues.iter().fold(T::one(), |acc, &l| acc * l)
    }

    /// Degeneracy cutoff: `1e-10·max|λ|`, floored at a tiny absolute value.
    pub fn degeneracy_threshold(&self) -> T {
        let max = self.eigenvalues.iter().fold(T::zero(), |m, l| m.max(l.abs()));
        (T::lit(DEGENERACY_REL) * max).max(T::tiny())
    }

    /// Rejects eigen-data with any eigenvalue at or below the degeneracy cutoff.
    pub fn check_nondegenerate(&self) -> Result<()> {
        let threshold = self.degeneracy_threshold();
        if let Some(&bad) = self.eigenvalues.iter().find(|l| !(l.abs() > threshold)) {
            return Err(Error::DegenerateMetric {
                eigenvalue: bad.to_f64().unwrap_or(f64::NAN),
                threshold: threshold.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(())
    }
}

pub(crate) fn check_symmetric<T: Scalar>(s: &LinearExtensor<T>) -> Result<()> {
    let residual = s.asymmetry();
    if residual > T::tol(SYMMETRY_REL) * s.norm_inf() {
        return Err(Error::NotSymmetric {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// Eigendecomposition of a symmetric extensor.
pub fn eigen_sym<T: Scalar>(s: &LinearExtensor<T>) -> Result<SpectralDecomposition<T>> {
    check_symmetric(s)?;
    let n = s.dim();
    let (values, vectors) = jacobi(s)?;

    let mut order: Vec<usize> = (0..n).collect();
    // stable: exact ties keep Jacobi order
    order.sort_by(|&a, &b| {
        let (x, y) = (values[a], values[b]);
        match (x > T::zero(), y > T::zero()) {
            (true, false) => core::cmp::Ordering::Less,
            (false, true) => core::cmp::Ordering::Greater,
            (true, true) => y.partial_cmp(&x).unwrap(),
            (false, false) => y.abs().partial_cmp(&x.abs()).unwrap(),
        }
    });

    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = Vec::with_capacity(n);
    for k in order {
        eigenvalues.push(values[k]);
        let mut v: Vec<T> = (0..n).map(|i| vectors[i * n + k]).collect();
        fix_sign(&mut v);
        eigenvectors.push(Multivector::vector(&v)?);
    }
    let p = eigenvalues.iter().filter(|&&l| l > T::zero()).count();
    let q = eigenvalues.iter().filter(|&&l| l < T::zero()).count();
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
        p,
        q,
    })
}

// first component of largest magnitude made positive
fn fix_sign<T: Scalar>(v: &mut [T]) {
    let mut best = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[best].abs() {
            best = i;
        }
    }
    if v[best] < T::zero() {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

/// Cyclic Jacobi. Returns eigenvalues and the row-major eigenvector matrix
/// (eigenvectors in columns).
fn jacobi<T: Scalar>(s: &LinearExtensor<T>) -> Result<(Vec<T>, Vec<T>)> {
    let n = s.dim();
    // symmetric part; the upper triangle drives the rotations
    let mut a: Vec<T> = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            (s.get(i, j) + s.get(j, i)) * T::lit(0.5)
        })
        .collect();
    let mut v = LinearExtensor::<T>::identity(n)?.row_major().to_vec();
    let target = T::tol(JACOBI_REL) * s.frobenius();
    let budget = JACOBI_ROTATIONS_PER_N2 * n * n;
    let mut rotations = 0usize;

    let off = |a: &[T]| -> T {
        let mut sum = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    sum += a[i * n + j] * a[i * n + j];
                }
            }
        }
        sum.sqrt()
    };

    while off(&a) > target {
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.is_zero() {
                    continue;
                }
                if rotations >= budget {
                    return Err(Error::NoConvergence { rotations });
                }
                rotations += 1;
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (T::lit(2.0) * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let t = if theta.is_zero() { T::one() } else { t };
                let c = T::one() / (t * t + T::one()).sqrt();
                let sn = t * c;
                // A ← Jᵀ A J
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - sn * akq;
                    a[k * n + q] = sn * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - sn * aqk;
                    a[q * n + k] = sn * apk + c * aqk;
                }
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - sn * vkq;
                    v[k * n + q] = sn * vkp + c * vkq;
                }
            }
        }
    }
    Ok(((0..n).map(|i| a[i * n + i]).collect(), v))
}

/// Signature `(p, q)` of a symmetric nondegenerate extensor.
pub fn signature<T: Scalar>(g: &LinearExtensor<T>) -> Result<(usize, usize)> {
    let d = eigen_sym(g)?;
    d.check_nondegenerate()?;
    Ok((d.p, d.q))
}
