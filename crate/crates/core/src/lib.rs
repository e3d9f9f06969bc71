//! Metric Clifford algebras built as deformations of the euclidean one.
//!
//! Multivectors are dense over the `2ⁿ` canonical blades of a fiducial
//! orthonormal basis. A symmetric nondegenerate [`MetricExtensor`] deforms the
//! scalar, contracted and Clifford products; the Clifford product is computed
//! by pulling the diagonal `η` product back through a gauge extensor `h` with
//! `g = h†∘η∘h`. The [`hodge`] module adds volume pseudoscalars and Hodge
//! extensors for both the euclidean and the metric case.
//!
//! Everything is generic over [`Scalar`] (`f32`, `f64`); the aliases below fix
//! the common choices.
//!
//! ```
//! use metric_clifford::{Metric64, Multivector64};
//!
//! let g = Metric64::diag(&[1.0, -1.0]).unwrap();
//! let e2 = Multivector64::basis_vector(2, 1).unwrap();
//! assert_eq!(g.clifford(&e2, &e2).unwrap().scalar_part(), -1.0);
//! ```

pub mod basis;
pub mod blade;
pub mod error;
pub mod extensor;
pub mod gauge;
pub mod hodge;
pub mod metric;
pub mod multivector;
pub mod sample;
pub mod scalar;
pub mod spectral;
pub mod suites;

pub use basis::BasisPair;
pub use blade::{dimension_cap, set_dimension_cap, BladeIndex, DEFAULT_MAX_DIM, HARD_MAX_DIM};
pub use error::{Error, Result};
pub use extensor::{ExtendedMap, LinearExtensor};
pub use gauge::GaugeFactorization;
pub use hodge::VolumeData;
pub use metric::{Expansion, MetricExtensor};
pub use multivector::{Involution, Multivector};
pub use scalar::Scalar;
pub use spectral::SpectralDecomposition;

pub type Multivector64 = Multivector<f64>;
pub type Multivector32 = Multivector<f32>;
pub type Extensor64 = LinearExtensor<f64>;
pub type Extensor32 = LinearExtensor<f32>;
pub type Metric64 = MetricExtensor<f64>;
pub type Metric32 = MetricExtensor<f32>;
pub type Gauge64 = GaugeFactorization<f64>;
pub type Gauge32 = GaugeFactorization<f32>;
pub type Spectral64 = SpectralDecomposition<f64>;
pub type BasisPair64 = BasisPair<f64>;
