//! Metric-deformed products on `⋀V`.
//!
//! A metric extensor `g` (symmetric, nondegenerate) deforms the euclidean
//! products: `X·_gY = ḡ(X)·Y`, `X⌟_gY = ḡ(X)⌟Y`, `X⌞_gY = X⌞ḡ(Y)`. The metric
//! Clifford product is evaluated by pulling back the diagonal `η` product
//! through a gauge extensor `h` with `g = h†∘η∘h`:
//!
//! ```text
//! X ∘_g Y = h̄⁻¹[ h̄(X) ∘_η h̄(Y) ]
//! ```
//!
//! [`MetricExtensor::clifford_oracle`] computes the same product directly from
//! the scalar and vector axioms and shares no code with the pullback path.

use core::fmt;
use std::sync::OnceLock;

use crate::basis::BasisPair;
use crate::error::{Error, Result};
use crate::extensor::{ExtendedMap, LinearExtensor};
use crate::gauge::{self, GaugeFactorization};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::spectral::{self, SpectralDecomposition};

/// Reciprocity residual accepted by [`expand`] and [`reciprocal_bases`].
pub const RECIPROCITY_TOL: f64 = 1e-8;

/// A validated metric extensor with cached spectral and gauge data.
#[derive(Clone)]
pub struct MetricExtensor<T: Scalar> {
    base: LinearExtensor<T>,
    spectral: SpectralDecomposition<T>,
    det: T,
    inverse: LinearExtensor<T>,
    gauge: GaugeFactorization<T>,
    h_inverse: LinearExtensor<T>,
    g_bar: OnceLock<ExtendedMap<T>>,
    h_bar: OnceLock<ExtendedMap<T>>,
    h_inverse_bar: OnceLock<ExtendedMap<T>>,
    inverse_metric: OnceLock<Box<MetricExtensor<T>>>,
}

impl<T: Scalar> MetricExtensor<T> {
    /// Validates symmetry and nondegeneracy and precomputes the gauge.
    pub fn new(g: LinearExtensor<T>) -> Result<Self> {
        let spectral = spectral::eigen_sym(&g)?;
        spectral.check_nondegenerate()?;
        let det = g.determinant();
        let inverse = spectral.inverse()?;
        let gauge = gauge::factor_spectral(&spectral)?;
        // h†ηh = g gives h⁻¹ = g⁻¹h†η.
        let h_inverse = inverse.compose(&gauge.h().adjoint().compose(gauge.eta())?)?;
        Ok(MetricExtensor {
            base: g,
            spectral,
            det,
            inverse,
            gauge,
            h_inverse,
            g_bar: OnceLock::new(),
            h_bar: OnceLock::new(),
            h_inverse_bar: OnceLock::new(),
            inverse_metric: OnceLock::new(),
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::new(LinearExtensor::identity(dim)?)
    }

    pub fn diag(values: &[T]) -> Result<Self> {
        Self::new(LinearExtensor::diag(values)?)
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn extensor(&self) -> &LinearExtensor<T> {
        &self.base
    }

    pub fn spectral(&self) -> &SpectralDecomposition<T> {
        &self.spectral
    }

    pub fn det(&self) -> T {
        self.det
    }

    pub fn p(&self) -> usize {
        self.spectral.p
    }

    pub fn q(&self) -> usize {
        self.spectral.q
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.spectral.p, self.spectral.q)
    }

    /// `g⁻¹` as an extensor (symmetrized).
    pub fn inverse_extensor(&self) -> &LinearExtensor<T> {
        &self.inverse
    }

    /// `g⁻¹` as a metric, built on first use.
    pub fn inverse_metric(&self) -> Result<&MetricExtensor<T>> {
        if let Some(m) = self.inverse_metric.get() {
            return Ok(m);
        }
        let m = MetricExtensor::new(self.inverse.clone())?;
        let _ = self.inverse_metric.set(Box::new(m));
        Ok(self.inverse_metric.get().expect("just initialized"))
    }

    /// The canonical gauge factorization `g = h†∘η∘h`.
    pub fn gauge(&self) -> &GaugeFactorization<T> {
        &self.gauge
    }

    fn check_dim(&self, x: &Multivector<T>) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: x.dim(),
            });
        }
        Ok(())
    }

    /// `ḡ(X)`.
    pub fn extended(&self, x: &Multivector<T>) -> Result<Multivector<T>> {
        self.g_bar.get_or_init(|| self.base.extended_map()).apply(x)
    }

    /// `h̄(X)` for the canonical gauge.
    pub fn gauge_extended(&self, x: &Multivector<T>) -> Result<Multivector<T>> {
        self.h_bar.get_or_init(|| self.gauge.h().extended_map()).apply(x)
    }

    /// `h̄⁻¹(X)` for the canonical gauge.
    pub fn gauge_extended_inverse(&self, x: &Multivector<T>) -> Result<Multivector<T>> {
        self.h_inverse_bar
            .get_or_init(|| self.h_inverse.extended_map())
            .apply(x)
    }

    /// `X ·_g Y = ḡ(X)·Y`.
    pub fn scalar(&self, x: &Multivector<T>, y: &Multivector<T>) -> Result<T> {
        self.check_dim(y)?;
        self.extended(x)?.b_scalar(y)
    }

    /// `X ⌟_g Y = ḡ(X)⌟Y`.
    pub fn left_contract(&self, x: &Multivector<T>, y: &Multivector<T>) -> Result<Multivector<T>> {
        self.check_dim(y)?;
        self.extended(x)?.left_contract(y)
    }

    /// `X ⌞_g Y = X⌞ḡ(Y)`.
    pub fn right_contract(&self, x: &Multivector<T>, y: &Multivector<T>) -> Result<Multivector<T>> {
        self.check_dim(x)?;
        x.right_contract(&self.extended(y)?)
    }

    /// Metric Clifford product, evaluated as `h̄⁻¹[h̄(X) ∘_η h̄(Y)]`.
    pub fn clifford(&self, x: &Multivector<T>, y: &Multivector<T>) -> Result<Multivector<T>> {
        let hx = self.gauge_extended(x)?;
        let hy = self.gauge_extended(y)?;
        let product = hx.diagonal_clifford(&hy, self.gauge.negative_mask())?;
        self.gauge_extended_inverse(&product)
    }

    /// Metric Clifford product from the axioms alone.
    ///
    /// Scalars act by multiplication; a vector acts by
    /// `v∘_gZ = v⌟_gZ + v∧Z`; a blade `A = b_i∧A'` with lowest factor `b_i`
    /// is rewritten as `b_i∘_gA' − b_i⌟_gA'`, so
    /// `A∘_gY = b_i∘_g(A'∘_gY) − (b_i⌟_gA')∘_gY`. Extended bilinearly.
    pub fn clifford_oracle(&self, x: &Multivector<T>, y: &Multivector<T>) -> Result<Multivector<T>> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let mut memo: Vec<Option<Multivector<T>>> = vec![None; 1 << self.dim()];
        let mut out = Multivector::zeros(self.dim())?;
        for (m, c) in x.terms() {
            out += &self.oracle_blade(m, y, &mut memo)?.scale(c);
        }
        Ok(out)
    }

    // A∘_gY for the canonical blade with mask `m`, memoized per Y.
    fn oracle_blade(
        &self,
        m: u32,
        y: &Multivector<T>,
        memo: &mut Vec<Option<Multivector<T>>>,
    ) -> Result<Multivector<T>> {
        if let Some(done) = &memo[m as usize] {
            return Ok(done.clone());
        }
        let result = if m == 0 {
            y.clone()
        } else {
            let i = m.trailing_zeros() as usize;
            let rest = m & (m - 1);
            let v = Multivector::basis_vector(self.dim(), i)?;
            // ḡ(b_i) = g(b_i)
            let gv = Multivector::vector(&self.base.column(i))?;
            let tail = self.oracle_blade(rest, y, memo)?;
            let first = gv.left_contract(&tail)? + v.wedge(&tail)?;
            let rest_blade = Multivector::blade(self.dim(), crate::blade::BladeIndex(rest), T::one())?;
            let contraction = gv.left_contract(&rest_blade)?;
            let mut correction = Multivector::zeros(self.dim())?;
            for (b, c) in contraction.terms() {
                correction += &self.oracle_blade(b, y, memo)?.scale(c);
            }
            first - correction
        };
        memo[m as usize] = Some(result.clone());
        Ok(result)
    }

    /// `max |E_k ·_g E^l − δ_kl|`.
    pub fn reciprocity_residual(&self, pair: &BasisPair<T>) -> Result<T> {
        pair.residual_with(|a, b| self.scalar(a, b))
    }
}

impl<T: Scalar> fmt::Debug for MetricExtensor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MetricExtensor")
            .field("g", &self.base)
            .field("det", &self.det)
            .field("signature", &self.signature())
            .finish()
    }
}

/// Metric reciprocal bases `E_k = f(e_k)`, `E^k = g⁻¹∘f*(e^k)` from a
/// b-reciprocal pair `e`.
pub fn reciprocal_bases<T: Scalar>(
    f: &LinearExtensor<T>,
    g: &MetricExtensor<T>,
    e: &BasisPair<T>,
) -> Result<BasisPair<T>> {
    let residual = e.b_residual()?;
    if !(residual <= T::lit(RECIPROCITY_TOL)) {
        return Err(Error::InvalidBasis {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    let lift = g.inverse_extensor().compose(&f.star()?)?;
    Ok(BasisPair {
        lower: e.lower.iter().map(|v| f.apply(v)).collect::<Result<_>>()?,
        upper: e.upper.iter().map(|v| lift.apply(v)).collect::<Result<_>>()?,
    })
}

/// Recovers the extensor `f₁(v) = (e^s·v)E_s` carrying `e_k` to `E_k`.
pub fn recover_frame<T: Scalar>(e: &BasisPair<T>, big: &BasisPair<T>) -> Result<LinearExtensor<T>> {
    let n = e.dim();
    let cols: Vec<Vec<T>> = (0..n)
        .map(|j| {
            let bj = Multivector::basis_vector(n, j)?;
            let mut acc = Multivector::zeros(n)?;
            for s in 0..n {
                acc += &big.lower[s].scale(e.upper[s].b_scalar(&bj)?);
            }
            acc.vector_components()
        })
        .collect::<Result<_>>()?;
    LinearExtensor::from_columns(&cols)
}

/// Which side of a metric reciprocal pair carries the expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expansion {
    /// `X = X·_g1 + Σ (X·_gE^J) E_J`.
    Covariant,
    /// `X = X·_g1 + Σ (X·_gE_J) E^J`.
    Contravariant,
}

/// Reconstructs `X` from its metric components over all increasing index
/// tuples `J = (j₁<…<jₖ)`.
pub fn expand<T: Scalar>(
    g: &MetricExtensor<T>,
    x: &Multivector<T>,
    pair: &BasisPair<T>,
    kind: Expansion,
) -> Result<Multivector<T>> {
    let residual = g.reciprocity_residual(pair)?;
    if !(residual <= T::lit(RECIPROCITY_TOL)) {
        return Err(Error::InvalidBasis {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    let (coeff_side, expand_side) = match kind {
        Expansion::Covariant => (&pair.upper, &pair.lower),
        Expansion::Contravariant => (&pair.lower, &pair.upper),
    };
    let gx = g.extended(x)?;
    // X·_g1 = ⟨X⟩₀
    let mut out = Multivector::scalar(g.dim(), x.scalar_part())?;
    let unit = Multivector::scalar(g.dim(), T::one())?;
    expand_tuples(&gx, coeff_side, expand_side, 0, &unit, &unit, &mut out)?;
    Ok(out)
}

fn expand_tuples<T: Scalar>(
    gx: &Multivector<T>,
    coeff_side: &[Multivector<T>],
    expand_side: &[Multivector<T>],
    start: usize,
    coeff_wedge: &Multivector<T>,
    expand_wedge: &Multivector<T>,
    out: &mut Multivector<T>,
) -> Result<()> {
    for j in start..coeff_side.len() {
        let cw = coeff_wedge.wedge(&coeff_side[j])?;
        let ew = expand_wedge.wedge(&expand_side[j])?;
        let c = gx.b_scalar(&cw)?;
        *out += &ew.scale(c);
        expand_tuples(gx, coeff_side, expand_side, j + 1, &cw, &ew, out)?;
    }
    Ok(())
}

/// `t†⁽ᵍ⁾ = g⁻¹∘t†∘g`.
pub fn metric_adjoint<T: Scalar>(t: &LinearExtensor<T>, g: &MetricExtensor<T>) -> Result<LinearExtensor<T>> {
    g.inverse_extensor().compose(&t.adjoint())?.compose(g.extensor())
}
