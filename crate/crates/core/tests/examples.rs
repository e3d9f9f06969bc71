use metric_clifford::gauge::{self, fiducial_eta, is_eta_orthogonal};
use metric_clifford::hodge;
use metric_clifford::metric::{self, Expansion};
use metric_clifford::spectral::{eigen_sym, signature};
use metric_clifford::{BasisPair, BladeIndex, Error, Extensor64, Metric64, Multivector64};

type Mv = Multivector64;

fn e(n: usize, factors: &[usize]) -> Mv {
    let zero_based: Vec<usize> = factors.iter().map(|i| i - 1).collect();
    Mv::blade(n, BladeIndex::from_factors(&zero_based).unwrap(), 1.0).unwrap()
}

fn one(n: usize, v: f64) -> Mv {
    Mv::scalar(n, v).unwrap()
}

fn diag(v: &[f64]) -> Extensor64 {
    Extensor64::diag(v).unwrap()
}

fn rows(r: &[&[f64]]) -> Extensor64 {
    Extensor64::from_rows(&r.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
}

#[test]
fn exterior_and_scalar() {
    assert!(e(2, &[1]).wedge(&e(2, &[1])).unwrap().is_zero());
    assert_eq!(e(2, &[1]).wedge(&e(2, &[2])).unwrap(), e(2, &[1, 2]));
    assert_eq!(e(2, &[2]).wedge(&e(2, &[1])).unwrap(), -e(2, &[1, 2]));
    assert_eq!(e(2, &[1, 2]).b_scalar(&e(2, &[1, 2])).unwrap(), 1.0);
    assert_eq!((one(2, 1.0) + e(2, &[1])).b_scalar(&e(2, &[1])).unwrap(), 1.0);
    assert_eq!((e(2, &[1]) * 2.0 + e(2, &[2]) * 3.0).b_scalar(&e(2, &[1])).unwrap(), 2.0);
}

#[test]
fn contractions_and_clifford() {
    assert_eq!(e(2, &[1]).left_contract(&e(2, &[1, 2])).unwrap(), e(2, &[2]));
    assert!(e(2, &[1, 2]).left_contract(&e(2, &[1])).unwrap().is_zero());
    let x = one(2, 1.0) + e(2, &[1]) - e(2, &[1, 2]) * 4.0;
    assert_eq!(one(2, 5.0).left_contract(&x).unwrap(), x.scale(5.0));
    assert_eq!(e(2, &[1]).clifford(&e(2, &[1])).unwrap(), one(2, 1.0));
    assert_eq!(e(2, &[1]).clifford(&e(2, &[2])).unwrap(), e(2, &[1, 2]));
    assert_eq!(e(2, &[1]).clifford(&e(2, &[1, 2])).unwrap(), e(2, &[2]));
}

#[test]
fn grades_and_involutions() {
    let x = one(2, 1.0) + e(2, &[1]) + e(2, &[1, 2]);
    assert_eq!(x.grade_project(1).unwrap(), e(2, &[1]));
    assert_eq!(e(1, &[1]).hat(), -e(1, &[1]));
    assert_eq!(e(2, &[1, 2]).tilde(), -e(2, &[1, 2]));
    assert_eq!(e(3, &[1, 2, 3]).tilde(), -e(3, &[1, 2, 3]));
}

#[test]
fn extensor_basics() {
    let d = diag(&[2.0, 3.0]);
    assert_eq!(d.apply(&e(2, &[1])).unwrap(), e(2, &[1]) * 2.0);
    assert_eq!(d.apply(&(e(2, &[1]) + e(2, &[2]))).unwrap(), e(2, &[1]) * 2.0 + e(2, &[2]) * 3.0);
    assert_eq!(d.compose(&diag(&[5.0, 7.0])).unwrap(), diag(&[10.0, 21.0]));
    assert_eq!(d.inverse().unwrap(), diag(&[0.5, 1.0 / 3.0]));
    assert_eq!(d.star().unwrap(), diag(&[0.5, 1.0 / 3.0]));
    assert!(matches!(diag(&[1.0, 0.0]).inverse(), Err(Error::SingularExtensor { .. })));
    assert_eq!(d.outermorphism(&one(2, 4.0)).unwrap(), one(2, 4.0));
    assert_eq!(d.outermorphism(&e(2, &[1, 2])).unwrap(), e(2, &[1, 2]) * 6.0);
    assert_eq!(d.determinant(), 6.0);
    assert_eq!(fiducial_eta::<f64>(4, 1, 3).unwrap().determinant(), -1.0);
}

#[test]
fn spectral_examples() {
    let d = eigen_sym(&rows(&[&[2.0, 1.0], &[1.0, 2.0]])).unwrap();
    assert!((d.eigenvalues[0] - 3.0).abs() < 1e-14 && (d.eigenvalues[1] - 1.0).abs() < 1e-14);
    let h = 0.5f64.sqrt();
    let v0 = d.eigenvector_components(0);
    assert!((v0[0] - h).abs() < 1e-14 && (v0[1] - h).abs() < 1e-14);
    assert!((d.det_from_eigen() - 3.0).abs() < 1e-14);
    assert_eq!(signature(&diag(&[1.0, -1.0, -1.0, -1.0])).unwrap(), (1, 3));
    assert_eq!(signature(&diag(&[2.0, 3.0])).unwrap(), (2, 0));
    assert!(matches!(signature(&diag(&[1.0, 0.0])), Err(Error::DegenerateMetric { .. })));
}

#[test]
fn metric_examples() {
    let g = Metric64::diag(&[2.0, 3.0]).unwrap();
    assert_eq!(g.scalar(&e(2, &[1]), &e(2, &[1])).unwrap(), 2.0);
    assert_eq!(g.scalar(&e(2, &[1, 2]), &e(2, &[1, 2])).unwrap(), 6.0);
    assert_eq!(g.left_contract(&e(2, &[1]), &e(2, &[1, 2])).unwrap(), e(2, &[2]) * 2.0);
    assert!(g.clifford(&e(2, &[1]), &e(2, &[1, 2])).unwrap().approx_eq(&(e(2, &[2]) * 2.0), 1e-14));
    let m = Metric64::diag(&[1.0, -1.0]).unwrap();
    assert!(m.clifford(&e(2, &[2]), &e(2, &[2])).unwrap().approx_eq(&one(2, -1.0), 1e-15));
    let k = Metric64::new(rows(&[&[2.0, 1.0], &[1.0, 2.0]])).unwrap();
    let anti = k.clifford(&e(2, &[1]), &e(2, &[2])).unwrap() + k.clifford(&e(2, &[2]), &e(2, &[1])).unwrap();
    assert!(anti.approx_eq(&one(2, 2.0), 1e-14));
    assert_eq!(k.clifford_oracle(&e(2, &[1]), &e(2, &[1])).unwrap(), one(2, 2.0));
}

#[test]
fn reciprocal_and_expansion() {
    let g = Metric64::diag(&[2.0, 3.0]).unwrap();
    let pair = metric::reciprocal_bases(&Extensor64::identity(2).unwrap(), &g, &BasisPair::fiducial(2).unwrap()).unwrap();
    assert_eq!(pair.upper[0], e(2, &[1]) * 0.5);
    let f = rows(&[&[1.0, 0.5], &[-0.3, 2.0]]);
    let pair = metric::reciprocal_bases(&f, &g, &BasisPair::fiducial(2).unwrap()).unwrap();
    let v = e(2, &[1]) * 0.7 - e(2, &[2]) * 1.1;
    for kind in [Expansion::Covariant, Expansion::Contravariant] {
        assert!(metric::expand(&g, &v, &pair, kind).unwrap().approx_eq(&v, 1e-12));
        assert_eq!(metric::expand(&g, &one(2, 1.0), &pair, kind).unwrap(), one(2, 1.0));
    }
    assert!(metric::recover_frame(&BasisPair::fiducial(2).unwrap(), &pair).unwrap().max_abs_diff(&f).unwrap() < 1e-14);
}

#[test]
fn gauge_examples() {
    let f = gauge::gauge_from_metric(&diag(&[4.0, 9.0])).unwrap();
    assert!(f.h().max_abs_diff(&diag(&[2.0, 3.0])).unwrap() < 1e-14);
    let f = gauge::gauge_from_metric(&diag(&[1.0, -1.0])).unwrap();
    assert_eq!(f.eta(), &diag(&[1.0, -1.0]));
    let g = rows(&[&[2.0, 1.0], &[1.0, 2.0]]);
    let f = gauge::gauge_from_metric(&g).unwrap();
    assert!(f.metric_extensor().unwrap().max_abs_diff(&g).unwrap() < 1e-10);

    let boost = |a: f64| rows(&[&[a.cosh(), a.sinh()], &[a.sinh(), a.cosh()]]);
    let eta = diag(&[1.0, -1.0]);
    assert!(is_eta_orthogonal(&Extensor64::identity(2).unwrap(), &eta, 1e-12));
    assert!(is_eta_orthogonal(&boost(0.7), &eta, 1e-12));
    assert!(!is_eta_orthogonal(&diag(&[2.0, 1.0]), &Extensor64::identity(2).unwrap(), 1e-12));

    let canon = gauge::gauge_from_metric(&diag(&[4.0, 9.0])).unwrap();
    let (c, s) = (0.3f64.cos(), 0.3f64.sin());
    let moved = gauge::compose_gauge(&rows(&[&[c, -s], &[s, c]]), &canon).unwrap();
    assert!(moved.h().max_abs_diff(canon.h()).unwrap() > 0.1);
    assert!(moved.metric_extensor().unwrap().max_abs_diff(&diag(&[4.0, 9.0])).unwrap() < 1e-9);

    let gb = gauge::gauge_bases(&canon, &BasisPair::fiducial(2).unwrap()).unwrap();
    assert!(gb.lower[0].approx_eq(&(e(2, &[1]) * 2.0), 1e-14));
    assert!(gb.upper[0].approx_eq(&(e(2, &[1]) * 0.5), 1e-14));

    let id = Extensor64::identity(2).unwrap();
    let g = gauge::metric_from_rho_l(&[2.0, 3.0], &id, 2, 0).unwrap();
    assert_eq!(g.extensor(), &diag(&[4.0, 9.0]));
    let g = gauge::metric_from_rho_l(&[2.0, 3.0], &id, 1, 1).unwrap();
    assert_eq!(g.extensor(), &diag(&[4.0, -9.0]));
}

#[test]
fn hodge_examples() {
    let tau = e(2, &[1, 2]);
    assert_eq!(hodge::std_hodge(&one(2, 1.0), &tau).unwrap(), tau);
    assert_eq!(hodge::std_hodge(&e(2, &[1]), &tau).unwrap(), e(2, &[2]));
    let g = Metric64::diag(&[2.0, 3.0]).unwrap();
    let tg = hodge::metric_tau(&g, &BasisPair::fiducial(2).unwrap()).unwrap();
    assert!(tg.approx_eq(&(tau.clone() * 6f64.sqrt()), 1e-15));
    assert!(hodge::metric_hodge(&g, &one(2, 1.0)).unwrap().approx_eq(&tg, 1e-15));
    let id = Metric64::identity(3).unwrap();
    let x = one(3, 0.25) + e(3, &[2]) - e(3, &[1, 3]) * 2.0;
    let (lhs, rhs) = hodge::hodge_relation_standard(&id, &x).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(lhs, hodge::std_hodge_fiducial(&x).unwrap());
    let f = gauge::gauge_from_metric(&diag(&[1.0, -1.0, -1.0])).unwrap();
    let (lhs, rhs) = hodge::hodge_relation_gauge(&f, &x).unwrap();
    assert!(lhs.approx_eq(&rhs, 1e-15));
}
