//! Gauge factorization `g = h†∘η∘h` and the η-orthogonal orbit.

use crate::basis::BasisPair;
use crate::error::{Error, Result};
use crate::extensor::LinearExtensor;
use crate::metric::MetricExtensor;
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::spectral::SpectralDecomposition;

/// Relative tolerance for `Λ†∘η∘Λ = η` in [`compose_gauge`].
pub const ETA_ORTHOGONAL_REL: f64 = 1e-9;

/// Tolerance for `l†∘l = 1` in [`metric_from_rho_l`].
pub const ORTHOGONAL_TOL: f64 = 1e-10;

/// `η = diag(+1 ×p, −1 ×q)`.
pub fn fiducial_eta<T: Scalar>(n: usize, p: usize, q: usize) -> Result<LinearExtensor<T>> {
    if p + q != n {
        return Err(Error::SignatureMismatch { dim: n, p, q });
    }
    let values: Vec<T> = (0..n).map(|i| if i < p { T::one() } else { -T::one() }).collect();
    LinearExtensor::diag(&values)
}

/// A factorization `g = h†∘η∘h` with `η` of signature `(p, q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeFactorization<T: Scalar> {
    h: LinearExtensor<T>,
    eta: LinearExtensor<T>,
    p: usize,
    q: usize,
}

impl<T: Scalar> GaugeFactorization<T> {
    pub fn new(h: LinearExtensor<T>, p: usize, q: usize) -> Result<Self> {
        let eta = fiducial_eta(h.dim(), p, q)?;
        Ok(GaugeFactorization { h, eta, p, q })
    }

    pub fn h(&self) -> &LinearExtensor<T> {
        &self.h
    }

    pub fn eta(&self) -> &LinearExtensor<T> {
        &self.eta
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    /// Blade mask of the negative directions of `η`.
    pub fn negative_mask(&self) -> u32 {
        let n = self.dim() as u32;
        let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        all & !((1u32 << self.p) - 1)
    }

    /// `h†∘η∘h`.
    pub fn metric_extensor(&self) -> Result<LinearExtensor<T>> {
        self.h.adjoint().compose(&self.eta)?.compose(&self.h)
    }

    /// `h†∘η∘h` as a validated metric.
    pub fn metric(&self) -> Result<MetricExtensor<T>> {
        MetricExtensor::new(symmetrize(&self.metric_extensor()?)?)
    }
}

fn symmetrize<T: Scalar>(t: &LinearExtensor<T>) -> Result<LinearExtensor<T>> {
    LinearExtensor::from_fn(t.dim(), |i, j| (t.get(i, j) + t.get(j, i)) * T::lit(0.5))
}

// First component reaching the vector's largest magnitude.
fn dominant_axis<T: Scalar>(v: &[T]) -> usize {
    let max = v.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    let cut = max * T::lit(1.0 - 1e-9);
    v.iter().position(|x| x.abs() >= cut).unwrap_or(0)
}

/// Canonical gauge from a spectral decomposition.
///
/// Row `j` of `h` is `√|λ_j| v_jᵀ`, positives before negatives. Within each
/// sign block the eigenpairs are ordered by dominant fiducial axis, so a
/// diagonal metric yields a diagonal gauge.
pub(crate) fn factor_spectral<T: Scalar>(d: &SpectralDecomposition<T>) -> Result<GaugeFactorization<T>> {
    let n = d.dim();
    let mut order: Vec<usize> = (0..n).collect();
    let key = |k: &usize| dominant_axis(&d.eigenvector_components(*k));
    order[..d.p].sort_by_key(key);
    order[d.p..].sort_by_key(key);
    let mut rows = Vec::with_capacity(n);
    for &k in &order {
        let scale = d.eigenvalues[k].abs().sqrt();
        rows.push(d.eigenvector_components(k).into_iter().map(|x| x * scale).collect());
    }
    GaugeFactorization::new(LinearExtensor::from_rows(&rows)?, d.p, d.q)
}

/// Canonical gauge factorization of a symmetric nondegenerate `g`.
pub fn gauge_from_metric<T: Scalar>(g: &LinearExtensor<T>) -> Result<GaugeFactorization<T>> {
    Ok(MetricExtensor::new(g.clone())?.gauge().clone())
}

/// `max |Λ†ηΛ − η|` (absolute).
pub fn eta_orthogonality_residual<T: Scalar>(l: &LinearExtensor<T>, eta: &LinearExtensor<T>) -> Result<T> {
    l.adjoint().compose(eta)?.compose(l)?.max_abs_diff(eta)
}

/// Whether `Λ†∘η∘Λ = η` entrywise within `tol`.
pub fn is_eta_orthogonal<T: Scalar>(l: &LinearExtensor<T>, eta: &LinearExtensor<T>, tol: T) -> bool {
    match eta_orthogonality_residual(l, eta) {
        Ok(r) => r <= tol,
        Err(_) => false,
    }
}

/// `h' = Λ∘h` for an η-orthogonal `Λ`; `h'` factors the same metric.
pub fn compose_gauge<T: Scalar>(l: &LinearExtensor<T>, f: &GaugeFactorization<T>) -> Result<GaugeFactorization<T>> {
    let residual = eta_orthogonality_residual(l, &f.eta)?;
    let scale = T::one().max(l.norm_inf() * l.norm_inf());
    if !(residual <= T::tol(ETA_ORTHOGONAL_REL) * scale) {
        return Err(Error::NotEtaOrthogonal {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    GaugeFactorization::new(l.compose(&f.h)?, f.p, f.q)
}

/// `({h(e_k)}, {h*(e^k)})` from a b-reciprocal pair `e`.
pub fn gauge_bases<T: Scalar>(f: &GaugeFactorization<T>, e: &BasisPair<T>) -> Result<BasisPair<T>> {
    let star = f.h.star()?;
    Ok(BasisPair {
        lower: e.lower.iter().map(|v| f.h.apply(v)).collect::<Result<_>>()?,
        upper: e.upper.iter().map(|v| star.apply(v)).collect::<Result<_>>()?,
    })
}

/// The gauge `h(v) = Σ ρ_j (l(v)·b_j) b_j` with `l` orthogonal and `ρ_j ≠ 0`.
pub fn gauge_from_rho_l<T: Scalar>(
    rho: &[T],
    l: &LinearExtensor<T>,
    p: usize,
    q: usize,
) -> Result<GaugeFactorization<T>> {
    let n = l.dim();
    if rho.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: rho.len() });
    }
    if p + q != n {
        return Err(Error::SignatureMismatch { dim: n, p, q });
    }
    if let Some(index) = rho.iter().position(|r| *r == T::zero() || !r.is_finite()) {
        return Err(Error::ZeroRho { index });
    }
    let residual = l.adjoint().compose(l)?.max_abs_diff(&LinearExtensor::identity(n)?)?;
    if !(residual <= T::tol(ORTHOGONAL_TOL)) {
        return Err(Error::NotOrthogonal {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    let h = LinearExtensor::diag(rho)?.compose(l)?;
    GaugeFactorization::new(h, p, q)
}

/// The metric `g = h†∘η∘h` built from `(ρ, l)`; always symmetric and
/// nondegenerate with signature `(p, q)`.
pub fn metric_from_rho_l<T: Scalar>(rho: &[T], l: &LinearExtensor<T>, p: usize, q: usize) -> Result<MetricExtensor<T>> {
    gauge_from_rho_l(rho, l, p, q)?.metric()
}

/// Images of the fiducial basis under `h`, as vectors.
pub fn gauge_frame<T: Scalar>(f: &GaugeFactorization<T>) -> Result<Vec<Multivector<T>>> {
    (0..f.dim()).map(|j| Multivector::vector(&f.h.column(j))).collect()
}
