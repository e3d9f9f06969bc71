use metric_clifford::gauge;
use metric_clifford::hodge;
use metric_clifford::sample;
use metric_clifford::{Extensor32, Extensor64, Metric32, Metric64, Multivector32, Multivector64};
use proptest::prelude::*;

type Mv = Multivector64;

fn mv(n: usize) -> impl Strategy<Value = Mv> {
    prop::collection::vec(-1.0f64..1.0, 1 << n).prop_map(move |c| Mv::from_coeffs(n, c).unwrap())
}

fn setup() -> impl Strategy<Value = (Mv, Mv, Mv, u64)> {
    (2usize..=4).prop_flat_map(|n| (mv(n), mv(n), mv(n), any::<u64>()))
}

fn close(a: &Mv, b: &Mv, tol: f64) -> bool {
    a.relative_distance(b).unwrap() <= tol
}

fn random_metric(n: usize, seed: u64) -> Metric64 {
    let mut r = sample::rng(seed);
    let (p, q) = sample::signature(&mut r, n);
    Metric64::new(sample::metric(&mut r, p, q, 1e2)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_associative((x, y, z, _) in setup()) {
        let l = x.wedge(&y).unwrap().wedge(&z).unwrap();
        let r = x.wedge(&y.wedge(&z).unwrap()).unwrap();
        prop_assert!(close(&l, &r, 1e-12));
    }

    #[test]
    fn euclidean_duality((x, y, z, _) in setup()) {
        let l = x.left_contract(&y).unwrap().b_scalar(&z).unwrap();
        let r = y.b_scalar(&x.tilde().wedge(&z).unwrap()).unwrap();
        prop_assert!((l - r).abs() <= 1e-12 * l.abs().max(r.abs()).max(1.0));
        let l = x.right_contract(&y).unwrap().b_scalar(&z).unwrap();
        let r = x.b_scalar(&z.wedge(&y.tilde()).unwrap()).unwrap();
        prop_assert!((l - r).abs() <= 1e-12 * l.abs().max(r.abs()).max(1.0));
    }

    #[test]
    fn euclidean_clifford_laws((x, y, z, seed) in setup()) {
        let n = x.dim();
        let xy = x.clifford(&y).unwrap();
        prop_assert!(close(&xy.clifford(&z).unwrap(), &x.clifford(&y.clifford(&z).unwrap()).unwrap(), 1e-12));
        prop_assert!(close(&xy.hat(), &x.hat().clifford(&y.hat()).unwrap(), 1e-12));
        prop_assert!(close(&xy.tilde(), &y.tilde().clifford(&x.tilde()).unwrap(), 1e-12));
        let v: Mv = sample::vector(&mut sample::rng(seed), n);
        let split = v.left_contract(&x).unwrap() + v.wedge(&x).unwrap();
        prop_assert!(close(&v.clifford(&x).unwrap(), &split, 1e-12));
    }

    #[test]
    fn outermorphism_is_wedge_homomorphism((x, y, _, seed) in setup()) {
        let t: Extensor64 = sample::invertible(&mut sample::rng(seed), x.dim());
        let l = t.outermorphism(&x.wedge(&y).unwrap()).unwrap();
        let r = t.outermorphism(&x).unwrap().wedge(&t.outermorphism(&y).unwrap()).unwrap();
        prop_assert!(close(&l, &r, 1e-12));
        let lm = t.extended_map();
        prop_assert!(close(&lm.apply(&x).unwrap(), &t.outermorphism(&x).unwrap(), 1e-13));
    }

    #[test]
    fn pullback_matches_oracle((x, y, _, seed) in setup()) {
        let g = random_metric(x.dim(), seed);
        prop_assert!(close(&g.clifford(&x, &y).unwrap(), &g.clifford_oracle(&x, &y).unwrap(), 1e-10));
    }

    #[test]
    fn golden_under_orbit((x, y, _, seed) in setup()) {
        let n = x.dim();
        let g = random_metric(n, seed);
        let mut r = sample::rng(seed ^ 1);
        let lambda: Extensor64 = sample::eta_orthogonal(&mut r, n, g.p());
        let f = gauge::compose_gauge(&lambda, g.gauge()).unwrap();
        let hb = f.h().extended_map();
        let l = hb.apply(&g.clifford(&x, &y).unwrap()).unwrap();
        let rr = hb.apply(&x).unwrap().diagonal_clifford(&hb.apply(&y).unwrap(), f.negative_mask()).unwrap();
        prop_assert!(close(&l, &rr, 1e-8));
    }

    #[test]
    fn hodge_round_trips((x, _, _, seed) in setup()) {
        let g = random_metric(x.dim(), seed);
        let back = hodge::metric_hodge_inv(&g, &hodge::metric_hodge(&g, &x).unwrap()).unwrap();
        prop_assert!(close(&back, &x, 1e-9));
        let tau = hodge::fiducial_tau(x.dim()).unwrap();
        let back = hodge::std_hodge_inv(&hodge::std_hodge(&x, &tau).unwrap(), &tau).unwrap();
        prop_assert!(close(&back, &x, 1e-12));
    }

    #[test]
    fn signature_is_scale_invariant(seed in any::<u64>(), alpha in 0.01f64..100.0) {
        let mut r = sample::rng(seed);
        let (p, q) = sample::signature(&mut r, 4);
        let g: Extensor64 = sample::metric(&mut r, p, q, 1e3);
        prop_assert_eq!(metric_clifford::spectral::signature(&g.scale(alpha)).unwrap(), (p, q));
    }
}

#[test]
fn single_precision_pipeline() {
    let g = Metric32::new(Extensor32::from_rows(&[vec![2.0, 0.5, 0.0], vec![0.5, -1.0, 0.2], vec![0.0, 0.2, 1.5]]).unwrap()).unwrap();
    assert_eq!(g.signature(), (2, 1));
    let f = g.gauge();
    assert!(f.metric_extensor().unwrap().max_abs_diff(g.extensor()).unwrap() < 1e-5);
    let mut r = sample::rng(3);
    for _ in 0..20 {
        let x: Multivector32 = sample::multivector(&mut r, 3);
        let y: Multivector32 = sample::multivector(&mut r, 3);
        let fast = g.clifford(&x, &y).unwrap();
        let slow = g.clifford_oracle(&x, &y).unwrap();
        assert!(fast.relative_distance(&slow).unwrap() < 1e-4);
        let back = hodge::metric_hodge_inv(&g, &hodge::metric_hodge(&g, &x).unwrap()).unwrap();
        assert!(back.relative_distance(&x).unwrap() < 1e-4);
    }
}
