//! Seeded identity suites over random metrics and multivectors.
//!
//! Every check reports the largest residual seen over its trials together
//! with the tolerance it was compared against. Residuals of multivector
//! identities are `‖A − B‖∞ / max(1, ‖A‖∞, ‖B‖∞)`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::basis::BasisPair;
use crate::error::Result;
use crate::extensor::LinearExtensor;
use crate::gauge::{self, GaugeFactorization};
use crate::hodge;
use crate::metric::{self, Expansion, MetricExtensor};
use crate::multivector::Multivector;
use crate::sample;

type Mv = Multivector<f64>;

/// Relative tolerance for product and Hodge identities.
pub const IDENTITY_TOL: f64 = 1e-8;
/// Tolerance for factorization residuals, relative to `‖g‖∞`.
pub const FACTOR_TOL: f64 = 1e-9;
/// Tolerance for the pullback/axiom agreement of the Clifford product.
pub const ORACLE_TOL: f64 = 1e-10;
pub const RECONSTRUCTION_TOL: f64 = 1e-10;
pub const CHARACTERISTIC_TOL: f64 = 1e-8;
pub const DETERMINANT_TOL: f64 = 1e-9;
pub const UNIT_TAU_TOL: f64 = 1e-12;
/// Eigenvalue magnitude spread of the random metrics.
pub const METRIC_COND: f64 = 1e2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    MetricProducts,
    Gauge,
    Golden,
    Hodge,
}

impl Suite {
    pub const PARTS: [Suite; 4] = [Suite::MetricProducts, Suite::Gauge, Suite::Golden, Suite::Hodge];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::MetricProducts => "metric-products",
            Suite::Gauge => "gauge",
            Suite::Golden => "golden",
            Suite::Hodge => "hodge",
        }
    }

    fn salt(self) -> u64 {
        match self {
            Suite::All => 0,
            Suite::MetricProducts => 1,
            Suite::Gauge => 2,
            Suite::Golden => 3,
            Suite::Hodge => 4,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [Suite::All, Suite::MetricProducts, Suite::Gauge, Suite::Golden, Suite::Hodge]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Outcome of one identity over all trials.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub trials: usize,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct Config {
    pub seed: u64,
    pub trials: usize,
    /// Inclusive dimension range cycled through by the random metrics.
    pub dims: (usize, usize),
    /// Overrides [`IDENTITY_TOL`] when set.
    pub tolerance: Option<f64>,
    /// Fixed metric used for every trial instead of random ones.
    pub metric: Option<LinearExtensor<f64>>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            trials: 100,
            dims: (2, 5),
            tolerance: None,
            metric: None,
        }
    }
}

impl Config {
    fn identity_tol(&self) -> f64 {
        self.tolerance.unwrap_or(IDENTITY_TOL)
    }
}

/// Runs one suite (or all four, in a fixed order).
pub fn run(suite: Suite, cfg: &Config) -> Result<Vec<Check>> {
    let fixed = match &cfg.metric {
        Some(g) => Some(MetricExtensor::new(g.clone())?),
        None => None,
    };
    let parts: Vec<Suite> = match suite {
        Suite::All => Suite::PARTS.to_vec(),
        s => vec![s],
    };
    let mut out = Vec::new();
    for part in parts {
        let mut acc = Acc::new(part.name());
        let mut rng = sample::rng(cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(part.salt()));
        for t in 0..cfg.trials.max(1) {
            let g = match &fixed {
                Some(g) => g.clone(),
                None => random_metric(cfg, &mut rng, t)?,
            };
            match part {
                Suite::MetricProducts => metric_products(&mut acc, cfg, &g, &mut rng)?,
                Suite::Gauge => gauge_trial(&mut acc, &g, &mut rng, t)?,
                Suite::Golden => golden(&mut acc, cfg, &g, &mut rng)?,
                Suite::Hodge => hodge_trial(&mut acc, cfg, &g, &mut rng)?,
                Suite::All => unreachable!(),
            }
        }
        out.extend(acc.checks);
    }
    Ok(out)
}

/// Whether every check passed.
pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

// Dimension cycles through the range; signature cycles through (n,0),
// (1,n−1) and a random mixed split.
fn random_metric(cfg: &Config, rng: &mut ChaCha8Rng, t: usize) -> Result<MetricExtensor<f64>> {
    let (lo, hi) = cfg.dims;
    let span = hi - lo + 1;
    let n = lo + t % span;
    let (p, q) = match (t / span) % 3 {
        0 => (n, 0),
        1 => (1, n - 1),
        _ => {
            let p = if n > 1 { rng.random_range(1..n) } else { n };
            (p, n - p)
        }
    };
    MetricExtensor::new(sample::metric(rng, p, q, METRIC_COND))
}

struct Acc {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Acc {
    fn new(suite: &'static str) -> Self {
        Acc { suite, checks: Vec::new() }
    }

    fn put(&mut self, name: &str, residual: f64, tolerance: f64) {
        let idx = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.checks.push(Check {
                    suite: self.suite,
                    name: name.to_string(),
                    residual: 0.0,
                    tolerance,
                    trials: 0,
                    pass: true,
                });
                self.checks.len() - 1
            }
        };
        let c = &mut self.checks[idx];
        c.residual = if residual.is_nan() || c.residual.is_nan() {
            f64::NAN
        } else {
            c.residual.max(residual)
        };
        c.trials += 1;
        c.pass = c.pass && residual <= tolerance;
    }

    fn mv(&mut self, name: &str, a: &Mv, b: &Mv, tolerance: f64) -> Result<()> {
        self.put(name, a.relative_distance(b)?, tolerance);
        Ok(())
    }

    fn sc(&mut self, name: &str, a: f64, b: f64, tolerance: f64) {
        self.put(name, rel(a, b), tolerance);
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

fn sign(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn s(n: usize, v: f64) -> Result<Mv> {
    Mv::scalar(n, v)
}

fn metric_products(acc: &mut Acc, cfg: &Config, g: &MetricExtensor<f64>, rng: &mut ChaCha8Rng) -> Result<()> {
    let tol = cfg.identity_tol();
    let n = g.dim();
    let x: Mv = sample::multivector(rng, n);
    let y: Mv = sample::multivector(rng, n);
    let z: Mv = sample::multivector(rng, n);
    let v: Mv = sample::vector(rng, n);
    let alpha: f64 = rng.random_range(-2.0..2.0);
    let beta: f64 = rng.random_range(-2.0..2.0);
    let (sa, sb) = (s(n, alpha)?, s(n, beta)?);

    acc.sc("scalar.reals", g.scalar(&sa, &sb)?, alpha * beta, tol);

    let j = rng.random_range(0..=n);
    let k = (j + rng.random_range(1..=n)) % (n + 1);
    let xj: Mv = sample::homogeneous(rng, n, j);
    let yk: Mv = sample::homogeneous(rng, n, k);
    acc.put("scalar.grade-orthogonality", g.scalar(&xj, &yk)?.abs(), tol);

    let k = rng.random_range(1..=n);
    let vs: Vec<Mv> = (0..k).map(|_| sample::vector(rng, n)).collect();
    let ws: Vec<Mv> = (0..k).map(|_| sample::vector(rng, n)).collect();
    let gram = LinearExtensor::from_fn(k, |a, b| g.scalar(&vs[a], &ws[b]).unwrap_or(f64::NAN))?;
    let wedge_all = |list: &[Mv]| -> Result<Mv> {
        let mut acc = s(n, 1.0)?;
        for w in list {
            acc = acc.wedge(w)?;
        }
        Ok(acc)
    };
    acc.sc(
        "scalar.gram-determinant",
        g.scalar(&wedge_all(&vs)?, &wedge_all(&ws)?)?,
        gram.determinant(),
        tol,
    );
    acc.sc("scalar.hat-transfer", g.scalar(&x.hat(), &y)?, g.scalar(&x, &y.hat())?, tol);
    acc.sc("scalar.tilde-transfer", g.scalar(&x.tilde(), &y)?, g.scalar(&x, &y.tilde())?, tol);

    acc.sc("contract.reals", g.left_contract(&sa, &sb)?.scalar_part(), alpha * beta, tol);
    acc.mv("contract.scalar-multiplication-left", &g.left_contract(&sa, &x)?, &x.scale(alpha), tol)?;
    acc.mv("contract.scalar-multiplication-right", &g.right_contract(&x, &sa)?, &x.scale(alpha), tol)?;

    let k = rng.random_range(0..=n);
    let j = rng.random_range(0..=k);
    let xj: Mv = sample::homogeneous(rng, n, j);
    let yk: Mv = sample::homogeneous(rng, n, k);
    acc.mv(
        "contract.swap-sign",
        &g.left_contract(&xj, &yk)?,
        &g.right_contract(&yk, &xj)?.scale(sign(j * (k - j))),
        tol,
    )?;
    if j < k {
        let big: Mv = sample::homogeneous(rng, n, k);
        let small: Mv = sample::homogeneous(rng, n, j);
        acc.put("contract.left-grade-vanishing", g.left_contract(&big, &small)?.norm_inf(), tol);
        acc.put("contract.right-grade-vanishing", g.right_contract(&small, &big)?.norm_inf(), tol);
    }
    let xk: Mv = sample::homogeneous(rng, n, k);
    let left = g.left_contract(&xk, &yk)?;
    acc.mv("contract.same-grade-sides", &left, &g.right_contract(&xk, &yk)?, tol)?;
    acc.mv("contract.same-grade-scalar", &left, &s(n, g.scalar(&xk.tilde(), &yk)?)?, tol)?;
    acc.mv("contract.same-grade-scalar-reversed", &left, &s(n, g.scalar(&xk, &yk.tilde())?)?, tol)?;

    acc.mv(
        "contract.derivation",
        &g.left_contract(&v, &x.wedge(&y)?)?,
        &(g.left_contract(&v, &x)?.wedge(&y)? + x.hat().wedge(&g.left_contract(&v, &y)?)?),
        tol,
    )?;
    acc.sc(
        "contract.left-duality",
        g.scalar(&g.left_contract(&x, &y)?, &z)?,
        g.scalar(&y, &x.tilde().wedge(&z)?)?,
        tol,
    );
    acc.sc(
        "contract.right-duality",
        g.scalar(&g.right_contract(&x, &y)?, &z)?,
        g.scalar(&x, &z.wedge(&y.tilde())?)?,
        tol,
    );
    acc.mv(
        "contract.left-composition",
        &g.left_contract(&x, &g.left_contract(&y, &z)?)?,
        &g.left_contract(&x.wedge(&y)?, &z)?,
        tol,
    )?;
    acc.mv(
        "contract.right-composition",
        &g.right_contract(&g.right_contract(&x, &y)?, &z)?,
        &g.right_contract(&x, &y.wedge(&z)?)?,
        tol,
    )?;

    let xy = g.clifford(&x, &y)?;
    acc.mv("clifford.scalar-law", &g.clifford(&sa, &x)?, &x.scale(alpha), tol)?;
    acc.mv("clifford.scalar-law-right", &g.clifford(&x, &sa)?, &x.scale(alpha), tol)?;
    let vx = g.clifford(&v, &x)?;
    let xv = g.clifford(&x, &v)?;
    acc.mv("clifford.vector-law-left", &vx, &(g.left_contract(&v, &x)? + v.wedge(&x)?), tol)?;
    acc.mv("clifford.vector-law-right", &xv, &(g.right_contract(&x, &v)? + x.wedge(&v)?), tol)?;
    acc.mv(
        "clifford.associativity",
        &g.clifford(&x, &g.clifford(&y, &z)?)?,
        &g.clifford(&xy, &z)?,
        tol,
    )?;
    let hv = g.clifford(&x.hat(), &v)?;
    let vh = g.clifford(&v, &x.hat())?;
    acc.mv("clifford.left-contraction-split", &g.left_contract(&v, &x)?, &(vx.clone() - hv.clone()).scale(0.5), tol)?;
    acc.mv("clifford.right-contraction-split", &g.right_contract(&x, &v)?, &(xv.clone() - vh.clone()).scale(0.5), tol)?;
    acc.mv("clifford.left-wedge-split", &v.wedge(&x)?, &(vx + hv).scale(0.5), tol)?;
    acc.mv("clifford.right-wedge-split", &x.wedge(&v)?, &(xv + vh).scale(0.5), tol)?;
    let sxy = g.scalar(&x, &y)?;
    acc.sc("clifford.scalar-part", sxy, g.clifford(&x.tilde(), &y)?.scalar_part(), tol);
    acc.sc("clifford.scalar-part-reversed", sxy, g.clifford(&x, &y.tilde())?.scalar_part(), tol);
    let lhs = g.scalar(&xy, &z)?;
    acc.sc("clifford.cyclic-left", lhs, g.scalar(&y, &g.clifford(&x.tilde(), &z)?)?, tol);
    acc.sc("clifford.cyclic-right", lhs, g.scalar(&x, &g.clifford(&z, &y.tilde())?)?, tol);
    let yz = g.clifford(&y, &z)?;
    let lhs = g.scalar(&x, &yz)?;
    acc.sc("clifford.cyclic-inner-left", lhs, g.scalar(&g.clifford(&y.tilde(), &x)?, &z)?, tol);
    acc.sc("clifford.cyclic-inner-right", lhs, g.scalar(&g.clifford(&x, &z.tilde())?, &y)?, tol);
    acc.mv("clifford.hat-homomorphism", &xy.hat(), &g.clifford(&x.hat(), &y.hat())?, tol)?;
    acc.mv("clifford.tilde-antihomomorphism", &xy.tilde(), &g.clifford(&y.tilde(), &x.tilde())?, tol)?;
    let pseudo: Mv = sample::homogeneous(rng, n, n);
    acc.mv(
        "clifford.duality",
        &g.clifford(&pseudo, &v.wedge(&x)?)?,
        &g.left_contract(&v, &g.clifford(&pseudo, &x)?)?.scale(sign(n - 1)),
        tol,
    )?;
    acc.mv("clifford.oracle", &xy, &g.clifford_oracle(&x, &y)?, ORACLE_TOL)?;

    // some basis blade must pair nontrivially with y
    let best = (0..1u32 << n)
        .map(|m| {
            let b = Mv::blade(n, crate::blade::BladeIndex(m), 1.0)?;
            Ok(g.scalar(&b, &y)?.abs())
        })
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    acc.put("scalar.nondegenerate", if best > 1e-12 * y.norm_inf() { 0.0 } else { 1.0 }, 0.0);

    let t: LinearExtensor<f64> = sample::invertible(rng, n);
    let ta = metric::metric_adjoint(&t, g)?;
    let u: Mv = sample::vector(rng, n);
    acc.sc(
        "adjoint.defining-property",
        g.scalar(&u, &ta.apply(&v)?)?,
        g.scalar(&t.apply(&u)?, &v)?,
        tol,
    );
    acc.sc("adjoint.determinant", ta.determinant(), t.determinant(), tol);

    let e: BasisPair<f64> = sample::basis_pair(rng, n);
    let f: LinearExtensor<f64> = sample::invertible(rng, n);
    let pair = metric::reciprocal_bases(&f, g, &e)?;
    acc.put("bases.metric-reciprocity", g.reciprocity_residual(&pair)?, tol);
    let f1 = metric::recover_frame(&e, &pair)?;
    acc.put(
        "bases.frame-recovery",
        f1.max_abs_diff(&f)? / 1f64.max(f.norm_inf()),
        tol,
    );
    acc.mv("expansion.covariant", &metric::expand(g, &x, &pair, Expansion::Covariant)?, &x, tol)?;
    acc.mv(
        "expansion.contravariant",
        &metric::expand(g, &x, &pair, Expansion::Contravariant)?,
        &x,
        tol,
    )?;
    Ok(())
}

fn factor_residual(f: &GaugeFactorization<f64>, g: &LinearExtensor<f64>) -> Result<f64> {
    Ok(f.metric_extensor()?.max_abs_diff(g)? / g.norm_inf())
}

fn gauge_trial(acc: &mut Acc, g: &MetricExtensor<f64>, rng: &mut ChaCha8Rng, t: usize) -> Result<()> {
    let n = g.dim();
    let (p, q) = g.signature();
    let f = g.gauge();
    acc.put("gauge.factorization", factor_residual(f, g.extensor())?, FACTOR_TOL);

    let eta = f.eta();
    let id = LinearExtensor::identity(n)?;
    acc.put("eta.involution", eta.compose(eta)?.max_abs_diff(&id)?, 0.0);
    acc.put("eta.self-adjoint", eta.adjoint().max_abs_diff(eta)?, 0.0);
    acc.put("eta.determinant", (eta.determinant() - sign(q)).abs(), 0.0);
    let dh = f.h().determinant();
    acc.sc("gauge.determinant", g.det(), sign(q) * dh * dh, FACTOR_TOL);

    let e: BasisPair<f64> = sample::basis_pair(rng, n);
    let gb = gauge::gauge_bases(f, &e)?;
    acc.put("gauge-bases.reciprocity", gb.b_residual()?, FACTOR_TOL);
    let eta_metric = MetricExtensor::new(eta.clone())?;
    let ginv = g.inverse_extensor();
    let mut lower = 0f64;
    let mut upper = 0f64;
    for j in 0..n {
        for k in 0..n {
            let gjk = g.extensor().apply(&e.lower[j])?.b_scalar(&e.lower[k])?;
            lower = lower.max(rel(eta_metric.scalar(&gb.lower[j], &gb.lower[k])?, gjk));
            let gjk_inv = ginv.apply(&e.upper[j])?.b_scalar(&e.upper[k])?;
            upper = upper.max(rel(eta_metric.scalar(&gb.upper[j], &gb.upper[k])?, gjk_inv));
        }
    }
    acc.put("gauge-bases.metric-lower", lower, FACTOR_TOL);
    acc.put("gauge-bases.metric-upper", upper, FACTOR_TOL);

    let lambda: LinearExtensor<f64> = sample::eta_orthogonal(rng, n, p);
    let moved = gauge::compose_gauge(&lambda, f)?;
    acc.put("gauge.orbit-invariance", factor_residual(&moved, g.extensor())?, FACTOR_TOL);

    let (rho, l) = sample::rho_l::<f64>(rng, n);
    let (p2, q2) = sample::signature(rng, n);
    let gm = gauge::metric_from_rho_l(&rho, &l, p2, q2)?;
    let mut eig = 0f64;
    for (k, r) in rho.iter().enumerate() {
        let w = Mv::vector(&l.rows()[k])?;
        let expected = w.scale(if k < p2 { r * r } else { -r * r });
        eig = eig.max(gm.extensor().apply(&w)?.relative_distance(&expected)?);
    }
    acc.put("rho-l.eigenstructure", eig, FACTOR_TOL);
    let prod: f64 = rho.iter().map(|r| r * r).product();
    acc.sc("rho-l.determinant", gm.det(), sign(q2) * prod, FACTOR_TOL);
    let back = gauge::gauge_from_metric(gm.extensor())?;
    acc.put("rho-l.round-trip", factor_residual(&back, gm.extensor())?, FACTOR_TOL);

    // spectral checks run on their own symmetric inputs, n up to 8
    let m = 1 + t % 8;
    let sym: LinearExtensor<f64> = sample::symmetric(rng, m);
    let d = crate::spectral::eigen_sym(&sym)?;
    let scale = sym.norm_inf().max(f64::MIN_POSITIVE);
    acc.put(
        "spectral.reconstruction",
        d.reconstruct().max_abs_diff(&sym)? / scale,
        RECONSTRUCTION_TOL,
    );
    let lam_max = d.eigenvalues.iter().fold(1f64, |a, x| a.max(x.abs()));
    let char_scale = lam_max.powi(m as i32);
    let mut worst = 0f64;
    for lam in &d.eigenvalues {
        let shifted = LinearExtensor::from_fn(m, |i, j| if i == j { lam - sym.get(i, j) } else { -sym.get(i, j) })?;
        worst = worst.max(shifted.determinant().abs() / char_scale);
    }
    acc.put("spectral.characteristic", worst, CHARACTERISTIC_TOL);
    acc.sc("spectral.determinant", d.det_from_eigen(), sym.determinant(), DETERMINANT_TOL);
    Ok(())
}

fn golden(acc: &mut Acc, cfg: &Config, g: &MetricExtensor<f64>, rng: &mut ChaCha8Rng) -> Result<()> {
    let tol = cfg.identity_tol();
    let n = g.dim();
    let x: Mv = sample::multivector(rng, n);
    let y: Mv = sample::multivector(rng, n);
    let f = g.gauge();
    let lambda: LinearExtensor<f64> = sample::eta_orthogonal(rng, n, g.p());
    let moved = gauge::compose_gauge(&lambda, f)?;
    let eta = MetricExtensor::new(f.eta().clone())?;
    let neg = f.negative_mask();
    for (label, h) in [("canonical", f.h()), ("orbit", moved.h())] {
        let hb = h.extended_map();
        let (hx, hy) = (hb.apply(&x)?, hb.apply(&y)?);
        acc.mv(&format!("golden.wedge.{label}"), &hb.apply(&x.wedge(&y)?)?, &hx.wedge(&hy)?, tol)?;
        acc.sc(&format!("golden.scalar.{label}"), g.scalar(&x, &y)?, eta.scalar(&hx, &hy)?, tol);
        acc.mv(
            &format!("golden.left-contraction.{label}"),
            &hb.apply(&g.left_contract(&x, &y)?)?,
            &eta.left_contract(&hx, &hy)?,
            tol,
        )?;
        acc.mv(
            &format!("golden.right-contraction.{label}"),
            &hb.apply(&g.right_contract(&x, &y)?)?,
            &eta.right_contract(&hx, &hy)?,
            tol,
        )?;
        acc.mv(
            &format!("golden.clifford.{label}"),
            &hb.apply(&g.clifford(&x, &y)?)?,
            &hx.diagonal_clifford(&hy, neg)?,
            tol,
        )?;
    }
    Ok(())
}

fn hodge_trial(acc: &mut Acc, cfg: &Config, g: &MetricExtensor<f64>, rng: &mut ChaCha8Rng) -> Result<()> {
    let tol = cfg.identity_tol();
    let n = g.dim();
    let q = g.q();
    let ginv = g.inverse_metric()?;
    let e: BasisPair<f64> = sample::basis_pair(rng, n);
    let tau = hodge::std_tau(&e)?;
    acc.sc("tau.unit", tau.b_scalar(&tau)?, 1.0, UNIT_TAU_TOL);
    let pseudo: Mv = sample::homogeneous(rng, n, n);
    acc.mv("tau.expansion", &tau.scale(pseudo.b_scalar(&tau)?), &pseudo, tol)?;

    let k = rng.random_range(0..=n);
    let xk: Mv = sample::homogeneous(rng, n, k);
    let yk: Mv = sample::homogeneous(rng, n, k);
    let ynk: Mv = sample::homogeneous(rng, n, n - k);
    let star = |a: &Mv| hodge::std_hodge(a, &tau);
    acc.sc("hodge.scalar-preservation", star(&xk)?.b_scalar(&star(&yk)?)?, xk.b_scalar(&yk)?, tol);
    acc.mv("hodge.wedge-definition", &xk.wedge(&star(&yk)?)?, &tau.scale(xk.b_scalar(&yk)?), tol)?;
    acc.mv("hodge.wedge-dual", &tau.scale(star(&xk)?.b_scalar(&ynk)?), &xk.wedge(&ynk)?, tol)?;
    let x: Mv = sample::multivector(rng, n);
    acc.mv("hodge.inverse-left", &hodge::std_hodge_inv(&star(&x)?, &tau)?, &x, tol)?;
    acc.mv("hodge.inverse-right", &star(&hodge::std_hodge_inv(&x, &tau)?)?, &x, tol)?;

    let vol = hodge::VolumeData::new(g, &e)?;
    let tau_g = vol.tau_g.clone();
    let lower = e.lower_volume()?;
    let direct = e.upper_volume()?.scale(g.scalar(&lower, &lower)?.abs().sqrt());
    acc.mv("tau-g.definition", &tau_g, &direct, tol)?;
    acc.sc("tau-g.unit", ginv.scalar(&tau_g, &tau_g)?, sign(q), tol);
    acc.mv(
        "tau-g.expansion",
        &tau_g.scale(sign(q) * ginv.scalar(&pseudo, &tau_g)?),
        &pseudo,
        tol,
    )?;

    let star_g = |a: &Mv| hodge::metric_hodge_with_tau(g, a, &tau_g);
    acc.sc(
        "metric-hodge.scalar-preservation",
        ginv.scalar(&star_g(&xk)?, &star_g(&yk)?)?,
        sign(q) * ginv.scalar(&xk, &yk)?,
        tol,
    );
    acc.mv(
        "metric-hodge.wedge-definition",
        &xk.wedge(&star_g(&yk)?)?,
        &tau_g.scale(ginv.scalar(&xk, &yk)?),
        tol,
    )?;
    acc.mv(
        "metric-hodge.wedge-dual",
        &tau_g.scale(ginv.scalar(&star_g(&xk)?, &ynk)?),
        &xk.wedge(&ynk)?.scale(sign(q)),
        tol,
    )?;
    acc.mv(
        "metric-hodge.inverse-left",
        &hodge::metric_hodge_inv_with_tau(g, &star_g(&x)?, &tau_g)?,
        &x,
        tol,
    )?;
    acc.mv(
        "metric-hodge.inverse-right",
        &star_g(&hodge::metric_hodge_inv_with_tau(g, &x, &tau_g)?)?,
        &x,
        tol,
    )?;

    let (lhs, rhs) = hodge::hodge_relation_standard(g, &x)?;
    acc.mv("metric-hodge.relation-standard", &lhs, &rhs, tol)?;
    let f = g.gauge();
    let (lhs, rhs) = hodge::hodge_relation_gauge(f, &x)?;
    acc.mv("metric-hodge.relation-gauge", &lhs, &rhs, tol)?;

    let y: Mv = sample::multivector(rng, n);
    let eta = MetricExtensor::new(f.eta().clone())?;
    let hb = f.h().extended_map();
    let hs = f.h().star()?.extended_map();
    acc.mv(
        "metric-hodge.transfer-g",
        &hb.apply(&g.left_contract(&x, &y)?)?,
        &eta.left_contract(&hb.apply(&x)?, &hb.apply(&y)?)?,
        tol,
    )?;
    acc.mv(
        "metric-hodge.transfer-g-inverse",
        &hs.apply(&ginv.left_contract(&x, &y)?)?,
        &eta.left_contract(&hs.apply(&x)?, &hs.apply(&y)?)?,
        tol,
    )?;

    // a positive-determinant change of basis leaves τ_g unchanged
    let mut c: LinearExtensor<f64> = sample::invertible(rng, n);
    if c.determinant() < 0.0 {
        let mut rows = c.rows();
        rows[0].iter_mut().for_each(|v| *v = -*v);
        c = LinearExtensor::from_rows(&rows)?;
    }
    let moved = BasisPair::from_lower(e.lower.iter().map(|v| c.apply(v)).collect::<Result<_>>()?)?;
    acc.mv("tau-g.basis-independence", &hodge::metric_tau(g, &moved)?, &tau_g, tol)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Config {
        Config {
            seed: 11,
            trials: 12,
            ..Config::default()
        }
    }

    #[test]
    fn every_suite_passes_on_random_metrics() {
        let checks = run(Suite::All, &small()).unwrap();
        for c in &checks {
            assert!(c.pass, "{c:?}");
        }
        assert!(checks.iter().any(|c| c.name == "clifford.oracle"));
    }

    #[test]
    fn deterministic_for_a_seed() {
        let a = run(Suite::Golden, &small()).unwrap();
        let b = run(Suite::Golden, &small()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn fixed_metric() {
        let cfg = Config {
            metric: Some(LinearExtensor::identity(3).unwrap()),
            trials: 5,
            ..Config::default()
        };
        let checks = run(Suite::Gauge, &cfg).unwrap();
        let fac = checks.iter().find(|c| c.name == "gauge.factorization").unwrap();
        assert_eq!(fac.residual, 0.0);
        let cfg = Config {
            metric: Some(LinearExtensor::diag(&[2.0, 3.0]).unwrap()),
            trials: 100,
            ..Config::default()
        };
        let checks = run(Suite::Golden, &cfg).unwrap();
        assert!(checks.iter().all(|c| c.residual < 1e-8));
        for c in &checks {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::All, Suite::MetricProducts, Suite::Gauge, Suite::Golden, Suite::Hodge] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
