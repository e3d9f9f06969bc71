//! Seeded random inputs for the verification suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::basis::BasisPair;
use crate::extensor::LinearExtensor;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Deterministic generator for a seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn uniform<T: Scalar>(rng: &mut impl Rng, lo: f64, hi: f64) -> T {
    T::lit(rng.random_range(lo..hi))
}

fn normal<T: Scalar>(rng: &mut impl Rng) -> T {
    let x: f64 = rng.sample(StandardNormal);
    T::lit(x)
}

/// Dense multivector with coefficients in `[-1, 1)`.
pub fn multivector<T: Scalar>(rng: &mut impl Rng, n: usize) -> Multivector<T> {
    let coeffs = (0..1usize << n).map(|_| uniform(rng, -1.0, 1.0)).collect();
    Multivector::from_coeffs(n, coeffs).expect("dimension within cap")
}

/// Random grade-`k` multivector (not necessarily simple).
pub fn homogeneous<T: Scalar>(rng: &mut impl Rng, n: usize, k: usize) -> Multivector<T> {
    let coeffs = (0..1u32 << n)
        .map(|m| {
            let c: T = uniform(rng, -1.0, 1.0);
            if m.count_ones() as usize == k {
                c
            } else {
                T::zero()
            }
        })
        .collect();
    Multivector::from_coeffs(n, coeffs).expect("dimension within cap")
}

pub fn vector<T: Scalar>(rng: &mut impl Rng, n: usize) -> Multivector<T> {
    let c: Vec<T> = (0..n).map(|_| uniform(rng, -1.0, 1.0)).collect();
    Multivector::vector(&c).expect("dimension within cap")
}

/// Wedge of `k` random vectors.
pub fn simple<T: Scalar>(rng: &mut impl Rng, n: usize, k: usize) -> Multivector<T> {
    let mut acc = Multivector::scalar(n, T::one()).expect("dimension within cap");
    for _ in 0..k {
        acc = acc.wedge(&vector(rng, n)).expect("same dimension");
    }
    acc
}

/// Symmetric extensor with entries in `[-1, 1)`.
pub fn symmetric<T: Scalar>(rng: &mut impl Rng, n: usize) -> LinearExtensor<T> {
    let mut rows = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let v: T = uniform(rng, -1.0, 1.0);
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    LinearExtensor::from_rows(&rows).expect("square")
}

/// Orthogonal extensor from Gram–Schmidt on Gaussian columns.
pub fn orthogonal<T: Scalar>(rng: &mut impl Rng, n: usize) -> LinearExtensor<T> {
    loop {
        let mut cols: Vec<Vec<T>> = Vec::with_capacity(n);
        let mut ok = true;
        for _ in 0..n {
            let mut v: Vec<T> = (0..n).map(|_| normal(rng)).collect();
            // two passes for stability
            for _ in 0..2 {
                for c in &cols {
                    let d: T = c.iter().zip(&v).map(|(a, b)| *a * *b).sum();
                    for (x, y) in v.iter_mut().zip(c) {
                        *x -= d * *y;
                    }
                }
            }
            let norm = v.iter().map(|x| *x * *x).sum::<T>().sqrt();
            if !(norm > T::lit(1e-6)) {
                ok = false;
                break;
            }
            v.iter_mut().for_each(|x| *x /= norm);
            cols.push(v);
        }
        if ok {
            return LinearExtensor::from_columns(&cols).expect("square");
        }
    }
}

/// `Q₁·diag(s)·Q₂` with singular values in `[0.5, 2)`.
pub fn invertible<T: Scalar>(rng: &mut impl Rng, n: usize) -> LinearExtensor<T> {
    let q1 = orthogonal(rng, n);
    let q2 = orthogonal(rng, n);
    let s: Vec<T> = (0..n).map(|_| uniform(rng, 0.5, 2.0)).collect();
    q1.compose(&LinearExtensor::diag(&s).expect("dimension"))
        .and_then(|m| m.compose(&q2))
        .expect("same dimension")
}

/// b-reciprocal pair from a random invertible frame.
pub fn basis_pair<T: Scalar>(rng: &mut impl Rng, n: usize) -> BasisPair<T> {
    let f = invertible::<T>(rng, n);
    let lower = (0..n)
        .map(|j| Multivector::vector(&f.column(j)).expect("dimension"))
        .collect();
    BasisPair::from_lower(lower).expect("invertible frame")
}

/// Uniform signature `(p, q)` with `p + q = n`.
pub fn signature(rng: &mut impl Rng, n: usize) -> (usize, usize) {
    let p = rng.random_range(0..=n);
    (p, n - p)
}

/// `QᵀDQ` with `p` positive and `q` negative eigenvalues whose magnitudes
/// are log-uniform in `[1, cond]`.
pub fn metric<T: Scalar>(rng: &mut impl Rng, p: usize, q: usize, cond: f64) -> LinearExtensor<T> {
    let n = p + q;
    let span = cond.max(1.0).ln();
    let d: Vec<T> = (0..n)
        .map(|i| {
            let mag = (rng.random_range(0.0..=1.0) * span).exp();
            T::lit(if i < p { mag } else { -mag })
        })
        .collect();
    let qm = orthogonal::<T>(rng, n);
    let g = qm
        .adjoint()
        .compose(&LinearExtensor::diag(&d).expect("dimension"))
        .and_then(|m| m.compose(&qm))
        .expect("same dimension");
    LinearExtensor::from_fn(n, |i, j| (g.get(i, j) + g.get(j, i)) * T::lit(0.5)).expect("dimension")
}

/// Product of `n` random Givens rotations (within a sign block) or boosts
/// (across blocks, rapidity in `[-1, 1]`); η-orthogonal for `η(p, n−p)`.
pub fn eta_orthogonal<T: Scalar>(rng: &mut impl Rng, n: usize, p: usize) -> LinearExtensor<T> {
    let mut acc = LinearExtensor::identity(n).expect("dimension");
    if n < 2 {
        return acc;
    }
    for _ in 0..n {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let (i, j) = (i.min(j), i.max(j));
        let same_block = (i < p) == (j < p);
        let mut rows = LinearExtensor::<T>::identity(n).expect("dimension").rows();
        if same_block {
            let t: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let (c, s) = (T::lit(t.cos()), T::lit(t.sin()));
            rows[i][i] = c;
            rows[i][j] = -s;
            rows[j][i] = s;
            rows[j][j] = c;
        } else {
            let r: f64 = rng.random_range(-1.0..=1.0);
            let (c, s) = (T::lit(r.cosh()), T::lit(r.sinh()));
            rows[i][i] = c;
            rows[i][j] = s;
            rows[j][i] = s;
            rows[j][j] = c;
        }
        let factor = LinearExtensor::from_rows(&rows).expect("square");
        acc = factor.compose(&acc).expect("same dimension");
    }
    acc
}

/// Nonzero `ρ` with magnitudes in `[0.5, 2)` and random signs, and a random
/// orthogonal `l`.
pub fn rho_l<T: Scalar>(rng: &mut impl Rng, n: usize) -> (Vec<T>, LinearExtensor<T>) {
    let rho = (0..n)
        .map(|_| {
            let m: T = uniform(rng, 0.5, 2.0);
            if rng.random::<bool>() {
                m
            } else {
                -m
            }
        })
        .collect();
    (rho, orthogonal(rng, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauge::{fiducial_eta, is_eta_orthogonal};

    #[test]
    fn deterministic() {
        let a: Multivector<f64> = multivector(&mut rng(7), 3);
        let b: Multivector<f64> = multivector(&mut rng(7), 3);
        assert_eq!(a, b);
    }

    #[test]
    fn orthogonal_is_orthogonal() {
        let q: LinearExtensor<f64> = orthogonal(&mut rng(1), 5);
        let r = q.adjoint().compose(&q).unwrap().max_abs_diff(&LinearExtensor::identity(5).unwrap()).unwrap();
        assert!(r < 1e-13);
    }

    #[test]
    fn eta_orthogonal_generator() {
        let mut r = rng(3);
        for p in 0..=4 {
            let l: LinearExtensor<f64> = eta_orthogonal(&mut r, 4, p);
            assert!(is_eta_orthogonal(&l, &fiducial_eta(4, p, 4 - p).unwrap(), 1e-10));
        }
    }

    #[test]
    fn metric_signature_and_condition() {
        let mut r = rng(5);
        for _ in 0..20 {
            let g: LinearExtensor<f64> = metric(&mut r, 2, 3, 1e6);
            let d = crate::spectral::eigen_sym(&g).unwrap();
            assert_eq!((d.p, d.q), (2, 3));
            let mags: Vec<f64> = d.eigenvalues.iter().map(|x| x.abs()).collect();
            let cond = mags.iter().cloned().fold(0.0, f64::max) / mags.iter().cloned().fold(f64::MAX, f64::min);
            assert!(cond <= 1e6 * (1.0 + 1e-8));
        }
    }
}
