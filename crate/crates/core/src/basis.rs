//! Pairs of reciprocal bases of `V`.

use crate::error::{Error, Result};
use crate::extensor::LinearExtensor;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Default reciprocity tolerance for user-supplied pairs.
pub const RECIPROCITY_REL: f64 = 1e-10;

/// Two bases `({e_k}, {e^k})` of `V`.
///
/// Whether they are reciprocal under the b-scalar product or under some
/// metric is a property checked by the caller ([`BasisPair::b_residual`],
/// [`crate::metric::MetricExtensor::reciprocity_residual`]).
#[derive(Debug, Clone, PartialEq)]
pub struct BasisPair<T: Scalar> {
    pub lower: Vec<Multivector<T>>,
    pub upper: Vec<Multivector<T>>,
}

impl<T: Scalar> BasisPair<T> {
    /// `({b_k}, {b_k})`.
    pub fn fiducial(dim: usize) -> Result<Self> {
        let basis: Vec<_> = (0..dim)
            .map(|i| Multivector::basis_vector(dim, i))
            .collect::<Result<_>>()?;
        Ok(BasisPair {
            lower: basis.clone(),
            upper: basis,
        })
    }

    /// The b-reciprocal pair of an arbitrary basis, `e^k = (E⁻¹)ᵀ` columns.
    pub fn from_lower(lower: Vec<Multivector<T>>) -> Result<Self> {
        let frame = frame_extensor(&lower)?;
        let dual = frame.star()?;
        let dim = lower.len();
        let upper = (0..dim)
            .map(|k| Multivector::vector(&dual.column(k)))
            .collect::<Result<_>>()?;
        Ok(BasisPair { lower, upper })
    }

    /// Validates a user-supplied pair: `e_k·e^l = δ_kl` within `tol`.
    pub fn new(lower: Vec<Multivector<T>>, upper: Vec<Multivector<T>>, tol: T) -> Result<Self> {
        let pair = BasisPair { lower, upper };
        let residual = pair.b_residual()?;
        if !(residual <= tol) {
            return Err(Error::InvalidBasis {
                residual: residual.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(pair)
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    /// `max |e_k·e^l − δ_kl|`.
    pub fn b_residual(&self) -> Result<T> {
        self.residual_with(|a, b| a.b_scalar(b))
    }

    pub(crate) fn residual_with(
        &self,
        product: impl Fn(&Multivector<T>, &Multivector<T>) -> Result<T>,
    ) -> Result<T> {
        let n = self.lower.len();
        if self.upper.len() != n || n == 0 {
            return Err(Error::LengthMismatch {
                expected: n,
                got: self.upper.len(),
            });
        }
        let mut worst = T::zero();
        for (k, ek) in self.lower.iter().enumerate() {
            if ek.dim() != n || !ek.is_homogeneous(1) {
                return Err(Error::NotAVector);
            }
            for (l, el) in self.upper.iter().enumerate() {
                if el.dim() != n || !el.is_homogeneous(1) {
                    return Err(Error::NotAVector);
                }
                let delta = if k == l { T::one() } else { T::zero() };
                worst = worst.max((product(ek, el)? - delta).abs());
            }
        }
        Ok(worst)
    }

    /// `e₁∧…∧eₙ`.
    pub fn lower_volume(&self) -> Result<Multivector<T>> {
        wedge_all(&self.lower)
    }

    /// `e¹∧…∧eⁿ`.
    pub fn upper_volume(&self) -> Result<Multivector<T>> {
        wedge_all(&self.upper)
    }
}

/// Extensor mapping `b_k ↦ vectors[k]`.
pub fn frame_extensor<T: Scalar>(vectors: &[Multivector<T>]) -> Result<LinearExtensor<T>> {
    let cols: Vec<Vec<T>> = vectors
        .iter()
        .map(|v| {
            if v.dim() != vectors.len() {
                return Err(Error::DimensionMismatch {
                    left: vectors.len(),
                    right: v.dim(),
                });
            }
            v.vector_components()
        })
        .collect::<Result<_>>()?;
    LinearExtensor::from_columns(&cols)
}

pub(crate) fn wedge_all<T: Scalar>(vectors: &[Multivector<T>]) -> Result<Multivector<T>> {
    let first = vectors.first().ok_or(Error::LengthMismatch { expected: 1, got: 0 })?;
    let mut acc = Multivector::scalar(first.dim(), T::one())?;
    for v in vectors {
        acc = acc.wedge(v)?;
    }
    Ok(acc)
}
