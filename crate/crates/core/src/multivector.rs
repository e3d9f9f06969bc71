//! Dense multivectors of the euclidean (fiducial) Clifford algebra.
//!
//! A multivector over an `n`-dimensional space stores one coefficient per
//! canonical blade, `2ⁿ` in total, indexed by the blade bitmask. The fiducial
//! basis `{b_k}` is orthonormal under the b-scalar product, so every product
//! here reduces to a signed blade kernel from [`crate::blade`].

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::blade::{self, check_dim, BladeIndex};
use crate::error::{Error, Result};
use crate::scalar::{relative_gap, Scalar};

/// Which grade automorphism to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Involution {
    /// Grade involution `X̂`: grade-k part times `(-1)^k`.
    Hat,
    /// Reversion `X̃`: grade-k part times `(-1)^{k(k-1)/2}`.
    Tilde,
}

#[derive(Clone, PartialEq)]
pub struct Multivector<T> {
    dim: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self::zeros_unchecked(dim))
    }

    pub(crate) fn zeros_unchecked(dim: usize) -> Self {
        Multivector {
            dim,
            coeffs: vec![T::zero(); 1 << dim],
        }
    }

    pub fn scalar(dim: usize, value: T) -> Result<Self> {
        Self::blade(dim, BladeIndex::SCALAR, value)
    }

    pub fn blade(dim: usize, blade: BladeIndex, coeff: T) -> Result<Self> {
        let mut out = Self::zeros(dim)?;
        if !blade.fits(dim) {
            return Err(Error::MaskOutOfRange { mask: blade.0, dim });
        }
        if !coeff.is_finite() {
            return Err(Error::NonFinite);
        }
        out.coeffs[blade.0 as usize] = coeff;
        Ok(out)
    }

    /// Unit fiducial vector `b_{i+1}` (zero-based `i`).
    pub fn basis_vector(dim: usize, i: usize) -> Result<Self> {
        if i >= dim {
            return Err(Error::GradeOutOfRange { grade: i, dim });
        }
        Self::blade(dim, BladeIndex::vector(i), T::one())
    }

    /// Grade-1 multivector `Σ cᵢ b_{i+1}`; the dimension is `components.len()`.
    pub fn vector(components: &[T]) -> Result<Self> {
        let dim = components.len();
        let mut out = Self::zeros(dim)?;
        for (i, &c) in components.iter().enumerate() {
            if !c.is_finite() {
                return Err(Error::NonFinite);
            }
            out.coeffs[1 << i] = c;
        }
        Ok(out)
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<T>) -> Result<Self> {
        check_dim(dim)?;
        if coeffs.len() != 1 << dim {
            return Err(Error::LengthMismatch {
                expected: 1 << dim,
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Multivector { dim, coeffs })
    }

    /// Builds from `(mask, coefficient)` pairs; repeated masks accumulate.
    pub fn from_sparse(dim: usize, terms: &[(u32, T)]) -> Result<Self> {
        let mut out = Self::zeros(dim)?;
        for &(mask, c) in terms {
            if !BladeIndex(mask).fits(dim) {
                return Err(Error::MaskOutOfRange { mask, dim });
            }
            if !c.is_finite() {
                return Err(Error::NonFinite);
            }
            out.coeffs[mask as usize] += c;
        }
        Ok(out)
    }

    /// Nonzero `(mask, coefficient)` pairs in ascending mask order.
    pub fn to_sparse(&self) -> Vec<(u32, T)> {
        self.terms().map(|(m, c)| (m, c)).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: BladeIndex) -> T {
        self.coeffs.get(blade.0 as usize).copied().unwrap_or_else(T::zero)
    }

    pub fn set_coeff(&mut self, blade: BladeIndex, value: T) -> Result<()> {
        if !blade.fits(self.dim) {
            return Err(Error::MaskOutOfRange {
                mask: blade.0,
                dim: self.dim,
            });
        }
        self.coeffs[blade.0 as usize] = value;
        Ok(())
    }

    pub fn scalar_part(&self) -> T {
        self.coeffs[0]
    }

    /// Iterator over nonzero `(mask, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (u32, T)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, &c)| (m as u32, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    /// `true` when every nonzero coefficient sits on a grade-`k` blade.
    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.terms().all(|(m, _)| m.count_ones() as usize == k)
    }

    /// Components of a grade-1 multivector.
    pub fn vector_components(&self) -> Result<Vec<T>> {
        if !self.is_homogeneous(1) {
            return Err(Error::NotAVector);
        }
        Ok((0..self.dim).map(|i| self.coeffs[1 << i]).collect())
    }

    pub fn norm_inf(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    /// `‖self − other‖∞ / max(1, ‖self‖∞, ‖other‖∞)`.
    pub fn relative_distance(&self, other: &Self) -> Result<T> {
        self.check_same(other)?;
        let diff = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs()));
        Ok(relative_gap(diff, self.norm_inf(), other.norm_inf()))
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        matches!(self.relative_distance(other), Ok(d) if d <= tol)
    }

    pub fn scale(&self, factor: T) -> Self {
        self.map(|_, c| c * factor)
    }

    pub(crate) fn map(&self, f: impl Fn(u32, T) -> T) -> Self {
        Multivector {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, &c)| f(m as u32, c))
                .collect(),
        }
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [T] {
        &mut self.coeffs
    }

    /// Bilinear extension of a blade kernel.
    fn bilinear(&self, other: &Self, kernel: impl Fn(u32, u32) -> Option<(i8, u32)>) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zeros_unchecked(self.dim);
        let rhs: Vec<(u32, T)> = other.terms().collect();
        for (a, x) in self.terms() {
            for &(b, y) in &rhs {
                if let Some((sign, m)) = kernel(a, b) {
                    let v = x * y;
                    if sign < 0 {
                        out.coeffs[m as usize] -= v;
                    } else {
                        out.coeffs[m as usize] += v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exterior product `X ∧ Y`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.bilinear(other, blade::wedge)
    }

    /// b-scalar product `X · Y`; canonical blades are orthonormal.
    pub fn b_scalar(&self, other: &Self) -> Result<T> {
        self.check_same(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a * b)
            .sum())
    }

    /// Euclidean left contraction `X ⌟ Y`, characterized by
    /// `(X⌟Y)·Z = Y·(X̃∧Z)`.
    pub fn left_contract(&self, other: &Self) -> Result<Self> {
        self.bilinear(other, blade::left_contract)
    }

    /// Euclidean right contraction `X ⌞ Y`, characterized by
    /// `(X⌞Y)·Z = X·(Z∧Ỹ)`.
    pub fn right_contract(&self, other: &Self) -> Result<Self> {
        self.bilinear(other, blade::right_contract)
    }

    /// Euclidean Clifford product.
    pub fn clifford(&self, other: &Self) -> Result<Self> {
        self.bilinear(other, |a, b| Some(blade::euclidean_product(a, b)))
    }

    /// Clifford product for the diagonal metric with `-1` on the directions in
    /// `negative` and `+1` elsewhere.
    pub fn diagonal_clifford(&self, other: &Self, negative: u32) -> Result<Self> {
        self.bilinear(other, |a, b| Some(blade::diagonal_product(a, b, negative)))
    }

    /// `⟨X⟩_k`.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.dim {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.dim,
            });
        }
        Ok(self.map(|m, c| if m.count_ones() as usize == k { c } else { T::zero() }))
    }

    pub fn involution(&self, kind: Involution) -> Self {
        let sign = match kind {
            Involution::Hat => blade::hat_sign,
            Involution::Tilde => blade::tilde_sign,
        };
        self.map(|m, c| if sign(m.count_ones() as usize) < 0 { -c } else { c })
    }

    pub fn hat(&self) -> Self {
        self.involution(Involution::Hat)
    }

    pub fn tilde(&self) -> Self {
        self.involution(Involution::Tilde)
    }
}

impl<T: Scalar> fmt::Debug for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector<{}>({})", self.dim, self)
    }
}

impl<T: Scalar> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m == 0 {
                write!(f, "{c}")?;
            } else {
                let idx: Vec<String> = BladeIndex(m).factors().map(|i| (i + 1).to_string()).collect();
                let sep = if self.dim >= 10 { "," } else { "" };
                write!(f, "{c}e{}", idx.join(sep))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Arithmetic operators panic on dimension mismatch; the fallible products
// above are the checked surface.

fn zip_with<T: Scalar>(a: &Multivector<T>, b: &Multivector<T>, f: impl Fn(T, T) -> T) -> Multivector<T> {
    assert_eq!(a.dim, b.dim, "multivector dimension mismatch");
    Multivector {
        dim: a.dim,
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f(x, y)).collect(),
    }
}

impl<T: Scalar> Add for &Multivector<T> {
    type Output = Multivector<T>;
    fn add(self, rhs: Self) -> Multivector<T> {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl<T: Scalar> Add for Multivector<T> {
    type Output = Multivector<T>;
    fn add(self, rhs: Self) -> Multivector<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for &Multivector<T> {
    type Output = Multivector<T>;
    fn sub(self, rhs: Self) -> Multivector<T> {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl<T: Scalar> Sub for Multivector<T> {
    type Output = Multivector<T>;
    fn sub(self, rhs: Self) -> Multivector<T> {
        &self - &rhs
    }
}

impl<T: Scalar> AddAssign<&Multivector<T>> for Multivector<T> {
    fn add_assign(&mut self, rhs: &Multivector<T>) {
        assert_eq!(self.dim, rhs.dim, "multivector dimension mismatch");
        for (a, &b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl<T: Scalar> SubAssign<&Multivector<T>> for Multivector<T> {
    fn sub_assign(&mut self, rhs: &Multivector<T>) {
        assert_eq!(self.dim, rhs.dim, "multivector dimension mismatch");
        for (a, &b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl<T: Scalar> Neg for &Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        self.map(|_, c| -c)
    }
}

impl<T: Scalar> Neg for Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        -&self
    }
}

impl<T: Scalar> Mul<T> for &Multivector<T> {
    type Output = Multivector<T>;
    fn mul(self, rhs: T) -> Multivector<T> {
        self.scale(rhs)
    }
}

impl<T: Scalar> Mul<T> for Multivector<T> {
    type Output = Multivector<T>;
    fn mul(self, rhs: T) -> Multivector<T> {
        self.scale(rhs)
    }
}
