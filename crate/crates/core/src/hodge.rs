//! Volume pseudoscalars and Hodge extensors.
//!
//! Standard: `⋆X = X̃⌟τ`, `⋆⁻¹X = τ⌞X̃`. Metric: `⋆_gX = X̃⌟_{g⁻¹}τ_g`,
//! `⋆_g⁻¹X = (−1)^q τ_g⌞_{g⁻¹}X̃`, with `τ_g = √|det g|·τ`. Both are applied
//! on demand; [`materialize`] builds the full `2ⁿ × 2ⁿ` matrix when needed.

use crate::basis::BasisPair;
use crate::error::{Error, Result};
use crate::gauge::GaugeFactorization;
use crate::metric::{MetricExtensor, RECIPROCITY_TOL};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Standard and metric volume pseudoscalars for one basis and metric.
#[derive(Debug, Clone, PartialEq)]
pub struct VolumeData<T: Scalar> {
    pub tau: Multivector<T>,
    pub tau_g: Multivector<T>,
    pub det_g: T,
    pub q: usize,
}

impl<T: Scalar> VolumeData<T> {
    pub fn new(g: &MetricExtensor<T>, e: &BasisPair<T>) -> Result<Self> {
        let tau = std_tau(e)?;
        Ok(VolumeData {
            tau_g: tau.scale(g.det().abs().sqrt()),
            tau,
            det_g: g.det(),
            q: g.q(),
        })
    }
}

fn check_pair<T: Scalar>(e: &BasisPair<T>) -> Result<()> {
    let residual = e.b_residual()?;
    if !(residual <= T::lit(RECIPROCITY_TOL)) {
        return Err(Error::InvalidBasis {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// `τ = √(e∧·e∧)·e^∧` for a b-reciprocal pair.
pub fn std_tau<T: Scalar>(e: &BasisPair<T>) -> Result<Multivector<T>> {
    check_pair(e)?;
    let lower = e.lower_volume()?;
    let norm2 = lower.b_scalar(&lower)?;
    if !(norm2 > T::zero()) {
        return Err(Error::InvalidBasis { residual: f64::NAN });
    }
    Ok(e.upper_volume()?.scale(norm2.sqrt()))
}

/// `τ_g = √|e∧·_g e∧|·e^∧ = √|det g|·τ`.
pub fn metric_tau<T: Scalar>(g: &MetricExtensor<T>, e: &BasisPair<T>) -> Result<Multivector<T>> {
    Ok(VolumeData::new(g, e)?.tau_g)
}

fn check_tau<T: Scalar>(x: &Multivector<T>, tau: &Multivector<T>) -> Result<()> {
    if x.dim() != tau.dim() {
        return Err(Error::DimensionMismatch {
            left: tau.dim(),
            right: x.dim(),
        });
    }
    Ok(())
}

/// `⋆X = X̃⌟τ`.
pub fn std_hodge<T: Scalar>(x: &Multivector<T>, tau: &Multivector<T>) -> Result<Multivector<T>> {
    check_tau(x, tau)?;
    x.tilde().left_contract(tau)
}

/// `⋆⁻¹X = τ⌞X̃`.
pub fn std_hodge_inv<T: Scalar>(x: &Multivector<T>, tau: &Multivector<T>) -> Result<Multivector<T>> {
    check_tau(x, tau)?;
    tau.right_contract(&x.tilde())
}

/// `⋆` with the fiducial `τ = b₁∧…∧bₙ`.
pub fn std_hodge_fiducial<T: Scalar>(x: &Multivector<T>) -> Result<Multivector<T>> {
    std_hodge(x, &fiducial_tau(x.dim())?)
}

/// `b₁∧…∧bₙ`.
pub fn fiducial_tau<T: Scalar>(dim: usize) -> Result<Multivector<T>> {
    let all = if dim == 0 { 0 } else { u32::MAX >> (32 - dim as u32) };
    Multivector::blade(dim, crate::blade::BladeIndex(all), T::one())
}

fn fiducial_tau_g<T: Scalar>(g: &MetricExtensor<T>) -> Result<Multivector<T>> {
    Ok(fiducial_tau(g.dim())?.scale(g.det().abs().sqrt()))
}

fn sign_q<T: Scalar>(q: usize) -> T {
    if q % 2 == 0 {
        T::one()
    } else {
        -T::one()
    }
}

/// `⋆_gX = X̃⌟_{g⁻¹}τ_g` against a given `τ_g`.
pub fn metric_hodge_with_tau<T: Scalar>(
    g: &MetricExtensor<T>,
    x: &Multivector<T>,
    tau_g: &Multivector<T>,
) -> Result<Multivector<T>> {
    check_tau(x, tau_g)?;
    g.inverse_metric()?.left_contract(&x.tilde(), tau_g)
}

/// `⋆_g⁻¹X = (−1)^q τ_g⌞_{g⁻¹}X̃` against a given `τ_g`.
pub fn metric_hodge_inv_with_tau<T: Scalar>(
    g: &MetricExtensor<T>,
    x: &Multivector<T>,
    tau_g: &Multivector<T>,
) -> Result<Multivector<T>> {
    check_tau(x, tau_g)?;
    Ok(g.inverse_metric()?
        .right_contract(tau_g, &x.tilde())?
        .scale(sign_q(g.q())))
}

/// `⋆_g` with `τ_g` taken over the fiducial basis.
pub fn metric_hodge<T: Scalar>(g: &MetricExtensor<T>, x: &Multivector<T>) -> Result<Multivector<T>> {
    metric_hodge_with_tau(g, x, &fiducial_tau_g(g)?)
}

/// `⋆_g⁻¹` with `τ_g` taken over the fiducial basis.
pub fn metric_hodge_inv<T: Scalar>(g: &MetricExtensor<T>, x: &Multivector<T>) -> Result<Multivector<T>> {
    metric_hodge_inv_with_tau(g, x, &fiducial_tau_g(g)?)
}

/// `(⋆_gX, ((−1)^q/√|det g|)·ḡ(⋆X))`.
pub fn hodge_relation_standard<T: Scalar>(
    g: &MetricExtensor<T>,
    x: &Multivector<T>,
) -> Result<(Multivector<T>, Multivector<T>)> {
    let lhs = metric_hodge(g, x)?;
    let factor = sign_q::<T>(g.q()) / g.det().abs().sqrt();
    let rhs = g.extended(&std_hodge_fiducial(x)?)?.scale(factor);
    Ok((lhs, rhs))
}

/// `(⋆_gX, sgn(det h)·h̄†(⋆_η(h̄*(X))))` for `g = h†∘η∘h`.
pub fn hodge_relation_gauge<T: Scalar>(
    f: &GaugeFactorization<T>,
    x: &Multivector<T>,
) -> Result<(Multivector<T>, Multivector<T>)> {
    let g = f.metric()?;
    let eta = MetricExtensor::new(f.eta().clone())?;
    let lhs = metric_hodge(&g, x)?;
    let h = f.h();
    let sign = if h.determinant() < T::zero() { -T::one() } else { T::one() };
    let inner = metric_hodge(&eta, &h.star()?.outermorphism(x)?)?;
    let rhs = h.adjoint().outermorphism(&inner)?.scale(sign);
    Ok((lhs, rhs))
}

/// Matrix of a linear map on `⋀V`: column `j` is the image of blade `j`.
pub fn materialize<T: Scalar>(
    dim: usize,
    map: impl Fn(&Multivector<T>) -> Result<Multivector<T>>,
) -> Result<Vec<Vec<T>>> {
    (0..1u32 << dim)
        .map(|m| {
            let blade = Multivector::blade(dim, crate::blade::BladeIndex(m), T::one())?;
            Ok(map(&blade)?.coeffs().to_vec())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::BladeIndex;

    type Mv = Multivector<f64>;

    fn e(dim: usize, factors: &[usize]) -> Mv {
        let zero_based: Vec<usize> = factors.iter().map(|i| i - 1).collect();
        Mv::blade(dim, BladeIndex::from_factors(&zero_based).unwrap(), 1.0).unwrap()
    }

    #[test]
    fn fiducial_tau_values() {
        let pair = BasisPair::<f64>::fiducial(2).unwrap();
        assert_eq!(std_tau(&pair).unwrap(), e(2, &[1, 2]));
        let scaled = BasisPair::from_lower(vec![Mv::vector(&[2.0, 0.0]).unwrap(), Mv::vector(&[0.0, 1.0]).unwrap()]).unwrap();
        assert!(std_tau(&scaled).unwrap().approx_eq(&e(2, &[1, 2]), 1e-15));
    }

    #[test]
    fn std_hodge_examples() {
        let tau = e(2, &[1, 2]);
        assert_eq!(std_hodge(&Mv::scalar(2, 1.0).unwrap(), &tau).unwrap(), tau);
        assert_eq!(std_hodge(&e(2, &[1]), &tau).unwrap(), e(2, &[2]));
        let x = Mv::scalar(2, 0.5).unwrap() + e(2, &[2]) * 3.0 - e(2, &[1, 2]);
        assert!(std_hodge_inv(&std_hodge(&x, &tau).unwrap(), &tau).unwrap().approx_eq(&x, 1e-15));
    }

    #[test]
    fn metric_tau_values() {
        let g = MetricExtensor::diag(&[2.0, 3.0]).unwrap();
        let pair = BasisPair::fiducial(2).unwrap();
        assert!(metric_tau(&g, &pair).unwrap().approx_eq(&e(2, &[1, 2]).scale(6f64.sqrt()), 1e-15));
        let m = MetricExtensor::diag(&[1.0, -1.0, -1.0, -1.0]).unwrap();
        let tg = metric_tau(&m, &BasisPair::fiducial(4).unwrap()).unwrap();
        assert_eq!(m.inverse_metric().unwrap().scalar(&tg, &tg).unwrap(), -1.0);
    }

    #[test]
    fn lorentzian_hodge_by_hand() {
        let g = MetricExtensor::diag(&[1.0, -1.0]).unwrap();
        assert!(metric_hodge(&g, &e(2, &[1])).unwrap().approx_eq(&e(2, &[2]), 1e-15));
        assert!(metric_hodge(&g, &e(2, &[2])).unwrap().approx_eq(&e(2, &[1]), 1e-15));
        assert!(metric_hodge_inv(&g, &e(2, &[2])).unwrap().approx_eq(&e(2, &[1]), 1e-15));
        assert!(metric_hodge(&g, &Mv::scalar(2, 1.0).unwrap()).unwrap().approx_eq(&e(2, &[1, 2]), 1e-15));
    }

    #[test]
    fn relations_on_diag() {
        let g = MetricExtensor::diag(&[2.0, 3.0]).unwrap();
        let (lhs, rhs) = hodge_relation_standard(&g, &e(2, &[1])).unwrap();
        assert!(lhs.approx_eq(&rhs, 1e-12));
        let f = crate::gauge::gauge_from_metric(&crate::extensor::LinearExtensor::diag(&[4.0, 9.0]).unwrap()).unwrap();
        let (lhs, rhs) = hodge_relation_gauge(&f, &e(2, &[1])).unwrap();
        assert!(lhs.approx_eq(&rhs, 1e-12));
    }

    #[test]
    fn materialized_standard_hodge_is_invertible() {
        let tau = fiducial_tau::<f64>(3).unwrap();
        let fwd = materialize(3, |x| std_hodge(x, &tau)).unwrap();
        for (j, col) in fwd.iter().enumerate() {
            let image = Mv::from_coeffs(3, col.clone()).unwrap();
            let round = std_hodge_inv(&image, &tau).unwrap();
            assert_eq!(round, Mv::blade(3, BladeIndex(j as u32), 1.0).unwrap());
        }
    }
}
