//! (1,1)-extensors: linear operators on `V` in the fiducial basis, and their
//! outermorphism extension to `⋀V`.

use core::fmt;

use crate::blade::{check_dim, reorder_is_odd};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Relative pivot cutoff for inversion, scaled by `max(1, ‖t‖∞)`.
pub const SINGULARITY_REL: f64 = 1e-12;

/// Linear operator `t: V → V` with `t(b_j) = Σᵢ M_ij b_i`.
///
/// Entries are stored row-major; column `j` is the image of `b_{j+1}`.
#[derive(Clone, PartialEq)]
pub struct LinearExtensor<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Scalar> LinearExtensor<T> {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(LinearExtensor {
            dim,
            entries: vec![T::zero(); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::from_fn(dim, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diag(values: &[T]) -> Result<Self> {
        Self::from_fn(values.len(), |i, j| if i == j { values[i] } else { T::zero() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let mut out = Self::zeros(dim)?;
        for i in 0..dim {
            for j in 0..dim {
                out.entries[i * dim + j] = f(i, j);
            }
        }
        out.check_finite()?;
        Ok(out)
    }

    pub fn from_row_major(dim: usize, entries: Vec<T>) -> Result<Self> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::LengthMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        let out = LinearExtensor { dim, entries };
        out.check_finite()?;
        Ok(out)
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::LengthMismatch {
                expected: dim,
                got: bad.len(),
            });
        }
        Self::from_fn(dim, |i, j| rows[i][j])
    }

    /// Extensor whose column `j` is `columns[j]`, i.e. `t(b_{j+1}) = columns[j]`.
    pub fn from_columns(columns: &[Vec<T>]) -> Result<Self> {
        let dim = columns.len();
        if let Some(bad) = columns.iter().find(|c| c.len() != dim) {
            return Err(Error::LengthMismatch {
                expected: dim,
                got: bad.len(),
            });
        }
        Self::from_fn(dim, |i, j| columns[j][i])
    }

    fn check_finite(&self) -> Result<()> {
        if self.entries.iter().all(|x| x.is_finite()) {
            Ok(())
        } else {
            Err(Error::NonFinite)
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.dim + j]
    }

    pub fn row_major(&self) -> &[T] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.dim).map(|i| self.get(i, j)).collect()
    }

    /// Largest absolute entry.
    pub fn norm_inf(&self) -> T {
        self.entries.iter().fold(T::zero(), |m, x| m.max(x.abs()))
    }

    pub fn frobenius(&self) -> T {
        self.entries.iter().map(|&x| x * x).sum::<T>().sqrt()
    }

    /// Largest absolute entry of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        self.check_same(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs())))
    }

    pub fn scale(&self, factor: T) -> Self {
        LinearExtensor {
            dim: self.dim,
            entries: self.entries.iter().map(|&x| x * factor).collect(),
        }
    }

    /// `t(v)` on raw components.
    pub fn apply_components(&self, v: &[T]) -> Vec<T> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// `t(v)` for a grade-1 multivector.
    pub fn apply(&self, v: &Multivector<T>) -> Result<Multivector<T>> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.dim(),
            });
        }
        let comps = v.vector_components()?;
        Multivector::vector(&self.apply_components(&comps))
    }

    /// `t†`, defined by `t†(u)·v = u·t(v)`; the transpose in the fiducial basis.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![T::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        LinearExtensor { dim: n, entries }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.dim;
        let mut entries = vec![T::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.entries[k * n + j];
                }
            }
        }
        Ok(LinearExtensor { dim: n, entries })
    }

    /// `‖self − self†‖∞`.
    pub fn asymmetry(&self) -> T {
        let n = self.dim;
        let mut worst = T::zero();
        for i in 0..n {
            for j in i + 1..n {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    /// Determinant by LU elimination with partial pivoting.
    pub fn determinant(&self) -> T {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = T::one();
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&r, &s| a[r * n + col].abs().partial_cmp(&a[s * n + col].abs()).unwrap())
                .unwrap();
            let p = a[pivot * n + col];
            if p.is_zero() {
                return T::zero();
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                }
                det = -det;
            }
            det *= p;
            for r in col + 1..n {
                let factor = a[r * n + col] / p;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = a[col * n + j];
                    a[r * n + j] -= factor * v;
                }
            }
        }
        det
    }

    /// Determinant from its exterior-algebra definition,
    /// `det[t] = (t(b₁)∧…∧t(bₙ))·(b¹∧…∧bⁿ)`.
    pub fn determinant_wedge(&self) -> T {
        let top = (1u32 << self.dim) - 1;
        self.blade_image(top)
            .into_iter()
            .find(|&(m, _)| m == top)
            .map_or_else(T::zero, |(_, c)| c)
    }

    /// Pivot cutoff for elimination: `1e-12·max(1, ‖t‖∞)`.
    pub fn singularity_threshold(&self) -> T {
        T::lit(SINGULARITY_REL) * T::one().max(self.norm_inf())
    }

    fn singular(&self) -> Error {
        Error::SingularExtensor {
            det: self.determinant().to_f64().unwrap_or(f64::NAN),
            threshold: self.singularity_threshold().to_f64().unwrap_or(f64::NAN),
        }
    }

    /// `t⁻¹` by Gauss–Jordan elimination with partial pivoting. Fails when a
    /// pivot falls to the singularity threshold.
    pub fn inverse(&self) -> Result<Self> {
        let threshold = self.singularity_threshold();
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n)?.entries;
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&r, &s| a[r * n + col].abs().partial_cmp(&a[s * n + col].abs()).unwrap())
                .unwrap();
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                    inv.swap(col * n + j, pivot * n + j);
                }
            }
            let p = a[col * n + col];
            if !(p.abs() > threshold) {
                return Err(self.singular());
            }
            for j in 0..n {
                a[col * n + j] /= p;
                inv[col * n + j] /= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let (x, y) = (a[col * n + j], inv[col * n + j]);
                    a[r * n + j] -= factor * x;
                    inv[r * n + j] -= factor * y;
                }
            }
        }
        Ok(LinearExtensor { dim: n, entries: inv })
    }

    /// `t* = (t⁻¹)† = (t†)⁻¹`.
    pub fn star(&self) -> Result<Self> {
        Ok(self.inverse()?.adjoint())
    }

    /// Image of a canonical blade under the outermorphism, as sparse
    /// same-grade terms in ascending mask order. The blade is mapped factor by
    /// factor: `t̄(b_{i₁}∧…∧b_{iₖ}) = t(b_{i₁})∧…∧t(b_{iₖ})`.
    pub(crate) fn blade_image(&self, mask: u32) -> Vec<(u32, T)> {
        let mut current: Vec<(u32, T)> = vec![(0, T::one())];
        let mut scratch = vec![T::zero(); 1 << self.dim];
        let mut m = mask;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            current = self.wedge_column(&current, j, &mut scratch);
        }
        current
    }

    // (sparse k-vector) ∧ t(b_{j+1})
    fn wedge_column(&self, terms: &[(u32, T)], j: usize, scratch: &mut [T]) -> Vec<(u32, T)> {
        let col = self.column(j);
        let mut touched = Vec::new();
        for &(m, c) in terms {
            for (i, &w) in col.iter().enumerate() {
                let bit = 1u32 << i;
                if w.is_zero() || m & bit != 0 {
                    continue;
                }
                let target = (m | bit) as usize;
                let v = c * w;
                if scratch[target].is_zero() {
                    touched.push(target as u32);
                }
                if reorder_is_odd(m, bit) {
                    scratch[target] -= v;
                } else {
                    scratch[target] += v;
                }
            }
        }
        touched.sort_unstable();
        touched.dedup();
        let mut out = Vec::with_capacity(touched.len());
        for m in touched {
            let v = std::mem::replace(&mut scratch[m as usize], T::zero());
            if !v.is_zero() {
                out.push((m, v));
            }
        }
        out
    }

    /// Outermorphism `t̄(X)`: identity on scalars, grade preserving, and
    /// multiplicative over the exterior product.
    pub fn outermorphism(&self, x: &Multivector<T>) -> Result<Multivector<T>> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: x.dim(),
            });
        }
        let mut out = Multivector::zeros_unchecked(self.dim);
        let coeffs = out.coeffs_mut();
        for (m, c) in x.terms() {
            for (target, w) in self.blade_image(m) {
                coeffs[target as usize] += c * w;
            }
        }
        Ok(out)
    }

    /// Precomputes the outermorphism on every canonical blade.
    pub fn extended_map(&self) -> ExtendedMap<T> {
        ExtendedMap::new(self)
    }
}

impl<T: Scalar> fmt::Debug for LinearExtensor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearExtensor")
            .field("dim", &self.dim)
            .field("rows", &self.rows())
            .finish()
    }
}

/// Cached outermorphism: the image of every canonical blade.
///
/// Built incrementally, `t̄(A'∧b_top) = t̄(A')∧t(b_top)`, so each blade costs a
/// single sparse wedge with a vector.
#[derive(Clone)]
pub struct ExtendedMap<T> {
    dim: usize,
    images: Vec<Vec<(u32, T)>>,
}

impl<T: Scalar> ExtendedMap<T> {
    pub fn new(t: &LinearExtensor<T>) -> Self {
        let size = 1usize << t.dim;
        let mut images: Vec<Vec<(u32, T)>> = Vec::with_capacity(size);
        images.push(vec![(0, T::one())]);
        let mut scratch = vec![T::zero(); size];
        for mask in 1..size as u32 {
            let top = 31 - mask.leading_zeros();
            let prev = &images[(mask ^ (1 << top)) as usize];
            let img = t.wedge_column(prev, top as usize, &mut scratch);
            images.push(img);
        }
        ExtendedMap { dim: t.dim, images }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn apply(&self, x: &Multivector<T>) -> Result<Multivector<T>> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: x.dim(),
            });
        }
        let mut out = Multivector::zeros_unchecked(self.dim);
        let coeffs = out.coeffs_mut();
        for (m, c) in x.terms() {
            for &(target, w) in &self.images[m as usize] {
                coeffs[target as usize] += c * w;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::BladeIndex;

    type Ext = LinearExtensor<f64>;
    type Mv = Multivector<f64>;

    fn v(c: &[f64]) -> Mv {
        Mv::vector(c).unwrap()
    }

    fn sample(n: usize, seed: u64) -> Ext {
        // small LCG keeps the test self-contained
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        Ext::from_fn(n, |_, _| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        })
        .unwrap()
    }

    #[test]
    fn apply_examples() {
        let id = Ext::identity(2).unwrap();
        let d = Ext::diag(&[2.0, 3.0]).unwrap();
        assert_eq!(id.apply(&v(&[1.0, 0.0])).unwrap(), v(&[1.0, 0.0]));
        assert_eq!(d.apply(&v(&[1.0, 0.0])).unwrap(), v(&[2.0, 0.0]));
        assert_eq!(d.apply(&v(&[1.0, 1.0])).unwrap(), v(&[2.0, 3.0]));
        let bivector = Mv::blade(2, BladeIndex(3), 1.0).unwrap();
        assert_eq!(d.apply(&bivector), Err(Error::NotAVector));
    }

    #[test]
    fn adjoint_is_transpose_by_defining_property() {
        let t = sample(4, 7);
        let ta = t.adjoint();
        for i in 0..4 {
            for j in 0..4 {
                let bi = Mv::basis_vector(4, i).unwrap();
                let bj = Mv::basis_vector(4, j).unwrap();
                let lhs = ta.apply(&bi).unwrap().b_scalar(&bj).unwrap();
                let rhs = bi.b_scalar(&t.apply(&bj).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
                assert_eq!(ta.get(i, j), t.get(j, i));
            }
        }
        assert_eq!(ta.adjoint(), t);
        assert_eq!(Ext::identity(3).unwrap().adjoint(), Ext::identity(3).unwrap());
    }

    #[test]
    fn adjoint_reverses_composition() {
        for seed in 0..20 {
            let s = sample(3, seed);
            let t = sample(3, seed + 100);
            let lhs = s.compose(&t).unwrap().adjoint();
            let rhs = t.adjoint().compose(&s.adjoint()).unwrap();
            assert!(lhs.max_abs_diff(&rhs).unwrap() < 1e-14);
        }
    }

    #[test]
    fn compose_examples() {
        let t = sample(3, 1);
        assert_eq!(t.compose(&Ext::identity(3).unwrap()).unwrap(), t);
        let a = Ext::diag(&[2.0, 3.0]).unwrap();
        let b = Ext::diag(&[5.0, 7.0]).unwrap();
        assert_eq!(a.compose(&b).unwrap(), Ext::diag(&[10.0, 21.0]).unwrap());
        let (r, s, u) = (sample(4, 2), sample(4, 3), sample(4, 4));
        let left = r.compose(&s).unwrap().compose(&u).unwrap();
        let right = r.compose(&s.compose(&u).unwrap()).unwrap();
        assert!(left.max_abs_diff(&right).unwrap() < 1e-14);
        let x = v(&[0.3, -1.0, 2.0, 0.5]);
        let via = r.compose(&s).unwrap().apply(&x).unwrap();
        let seq = r.apply(&s.apply(&x).unwrap()).unwrap();
        assert!(via.approx_eq(&seq, 1e-14));
        assert!(matches!(a.compose(&r), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Ext::identity(3).unwrap().inverse().unwrap(), Ext::identity(3).unwrap());
        assert_eq!(
            Ext::diag(&[2.0, 3.0]).unwrap().inverse().unwrap(),
            Ext::diag(&[0.5, 1.0 / 3.0]).unwrap()
        );
        assert!(matches!(
            Ext::diag(&[1.0, 0.0]).unwrap().inverse(),
            Err(Error::SingularExtensor { .. })
        ));
        let t = sample(5, 9);
        let id = t.compose(&t.inverse().unwrap()).unwrap();
        assert!(id.max_abs_diff(&Ext::identity(5).unwrap()).unwrap() < 1e-12);
    }

    #[test]
    fn star_examples() {
        assert_eq!(Ext::identity(2).unwrap().star().unwrap(), Ext::identity(2).unwrap());
        assert_eq!(
            Ext::diag(&[2.0, 3.0]).unwrap().star().unwrap(),
            Ext::diag(&[0.5, 1.0 / 3.0]).unwrap()
        );
        let t = sample(4, 11);
        let a = t.star().unwrap();
        let b = t.adjoint().inverse().unwrap();
        assert!(a.max_abs_diff(&b).unwrap() < 1e-12);
    }

    #[test]
    fn outermorphism_examples() {
        let d = Ext::diag(&[2.0, 3.0]).unwrap();
        let alpha = Mv::scalar(2, 4.5).unwrap();
        assert_eq!(d.outermorphism(&alpha).unwrap(), alpha);
        let e12 = Mv::blade(2, BladeIndex(3), 1.0).unwrap();
        assert_eq!(d.outermorphism(&e12).unwrap(), e12.scale(6.0));
        let t = sample(3, 5);
        let (a, b) = (v(&[1.0, -0.5, 0.25]), v(&[0.1, 2.0, -1.0]));
        let lhs = t.outermorphism(&a.wedge(&b).unwrap()).unwrap();
        let rhs = t.apply(&a).unwrap().wedge(&t.apply(&b).unwrap()).unwrap();
        assert!(lhs.approx_eq(&rhs, 1e-14));
    }

    #[test]
    fn cached_map_matches_direct_outermorphism() {
        let t = sample(4, 21);
        let map = t.extended_map();
        let x = Mv::from_coeffs(4, (0..16).map(|i| (i as f64).sin()).collect()).unwrap();
        assert!(map.apply(&x).unwrap().approx_eq(&t.outermorphism(&x).unwrap(), 1e-14));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(Ext::diag(&[2.0, 3.0]).unwrap().determinant(), 6.0);
        assert_eq!(Ext::diag(&[1.0, -1.0, -1.0, -1.0]).unwrap().determinant(), -1.0);
        for seed in 0..10 {
            let t = sample(5, seed);
            let lu = t.determinant();
            let wedge = t.determinant_wedge();
            assert!((lu - wedge).abs() <= 1e-12 * lu.abs().max(1.0));
            assert!((t.adjoint().determinant() - lu).abs() <= 1e-12 * lu.abs().max(1.0));
        }
    }

    #[test]
    fn f32_extensor() {
        let d = LinearExtensor::<f32>::diag(&[2.0, 4.0]).unwrap();
        assert_eq!(d.inverse().unwrap().get(1, 1), 0.25);
        assert_eq!(d.determinant_wedge(), 8.0);
    }
}
