use ano_cartan::Group;
use ano_linalg::sample::{random_compact, random_form_preserving, random_orthogonal};
use ano_linalg::{Mat, Strategy};
use ano_roots::ThetaSet;
use ano_satake::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rep(g: Group, f: &str) -> Representation {
    Representation::new(g, f.parse().unwrap()).unwrap()
}

fn o(p: usize, q: usize) -> Group {
    Group::orthogonal(p, q).unwrap()
}

fn labels(rank: usize, l: &[usize]) -> ThetaSet {
    ThetaSet::from_labels(rank, l.iter().copied()).unwrap()
}

#[test]
fn identity_embeds_base_point_to_scaled_identity() {
    for r in [rep(Group::Gl(3), "identity"), rep(o(3, 2), "identity"), rep(o(3, 2), "exterior2")] {
        let n = r.group().dim();
        let p = satake_embed(&r, &Mat::identity(n, n)).unwrap();
        let want = Mat::identity(r.dim(), r.dim()) / r.dim() as f64;
        assert!((p.hermitian - want).norm() < 1e-12);
    }
}

#[test]
fn gl2_diagonal_sequence_tends_to_first_coordinate_projector() {
    let r = rep(Group::Gl(2), "identity");
    let mut e1 = Mat::zeros(2, 2);
    e1[(0, 0)] = 1.0;
    let mut last = f64::INFINITY;
    for n in [1.0, 2.0, 5.0, 10.0, 20.0] {
        let g = Mat::from_diagonal(&nalgebra::DVector::from_vec(vec![f64::exp(n), f64::exp(-n)]));
        let d = (satake_embed(&r, &g).unwrap().hermitian - &e1).norm();
        assert!(d < last);
        last = d;
    }
    assert!(last < 1e-15);
}

#[test]
fn functor_text_roundtrip() {
    for s in ["identity", "exterior3", "adjoint", "identity+adjoint"] {
        let f: Functor = s.parse().unwrap();
        assert_eq!(f.to_string(), s);
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<Functor>(&j).unwrap(), f);
    }
    assert!("sym2".parse::<Functor>().is_err());
    assert!(Representation::new(o(3, 2), Functor::Exterior { degree: 5 }).is_err());
    assert!(Representation::new(Group::complex_orthogonal(4).unwrap(), Functor::Identity).is_err());
}

#[test]
fn dimensions() {
    assert_eq!(rep(o(3, 2), "exterior2").dim(), 10);
    assert_eq!(rep(o(3, 2), "adjoint").dim(), 10);
    assert_eq!(rep(Group::Gl(3), "adjoint").dim(), 8);
    assert_eq!(rep(Group::Gl(2), "identity+adjoint").dim(), 5);
}

fn equivariance_defect(r: &Representation, h: &Mat, g: &Mat) -> f64 {
    let lhs = satake_embed(r, &(h * g)).unwrap();
    let th = r.apply(h).unwrap();
    let base = satake_embed(r, g).unwrap();
    let moved = SatakePoint::normalized(&(&th * base.hermitian * th.transpose()));
    lhs.distance(&moved)
}

#[test]
fn embedding_is_equivariant_on_a_thousand_pairs() {
    let cases = [
        rep(Group::Gl(2), "identity+adjoint"),
        rep(Group::Gl(3), "exterior2"),
        rep(o(3, 2), "exterior2"),
        rep(o(2, 1), "adjoint"),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0_f64;
    for i in 0..1000 {
        let r = &cases[i % cases.len()];
        let (h, g) = match r.group() {
            Group::Opq(f) => (random_form_preserving(f, 1.0, &mut rng), random_form_preserving(f, 1.0, &mut rng)),
            g => {
                let n = g.dim();
                let mut m = || Mat::identity(n, n) + ano_linalg::sample::gaussian_matrix(n, n, &mut rng) * 0.3;
                (m(), m())
            }
        };
        worst = worst.max(equivariance_defect(r, &h, &g));
    }
    assert!(worst < 1e-9, "worst defect {worst}");
}

#[test]
fn compact_elements_fix_the_base_point() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let r = rep(o(3, 2), "adjoint");
    let Group::Opq(f) = r.group().clone() else { unreachable!() };
    let base = satake_embed(&r, &Mat::identity(5, 5)).unwrap();
    for _ in 0..20 {
        let k = random_compact(&f, &mut rng);
        assert!(satake_embed(&r, &k).unwrap().distance(&base) < 1e-10);
    }
    let r = rep(Group::Gl(3), "identity+exterior2");
    let base = satake_embed(&r, &Mat::identity(3, 3)).unwrap();
    for _ in 0..20 {
        let k = random_orthogonal(3, &mut rng);
        assert!(satake_embed(&r, &k).unwrap().distance(&base) < 1e-10);
    }
}

#[test]
fn supports_of_standard_representations() {
    // Λ^q of O(p,q), p > q: the short simple root only.
    for (p, q) in [(2, 1), (3, 1), (3, 2), (4, 2), (5, 3)] {
        let r = rep(o(p, q), &format!("exterior{q}"));
        assert_eq!(r.support().unwrap(), labels(q, &[q]), "({p},{q})");
    }
    assert_eq!(rep(o(3, 2), "identity").support().unwrap(), labels(2, &[1]));
    assert_eq!(rep(Group::Gl(4), "identity").support().unwrap(), labels(3, &[1]));
    assert_eq!(rep(Group::Gl(4), "exterior2").support().unwrap(), labels(3, &[2]));
    assert_eq!(rep(Group::Gl(3), "adjoint").support().unwrap(), labels(2, &[1, 2]));
    assert_eq!(rep(o(3, 2), "adjoint").support().unwrap(), labels(2, &[2]));
    assert_eq!(rep(o(2, 2), "adjoint").support().unwrap(), labels(2, &[1, 2]));
    assert_eq!(rep(o(4, 1), "adjoint").support().unwrap(), labels(1, &[1]));
    assert_eq!(rep(Group::Gl(3), "identity+exterior2").support().unwrap(), labels(2, &[1, 2]));
}

#[test]
fn non_dominant_weight_is_rejected() {
    let rs = o(3, 2).root_system().unwrap();
    assert!(matches!(support_of(&rs, &[0, 1]), Err(SatakeError::NotDominant { root: 1, .. })));
    assert!(matches!(support_of(&rs, &[1]), Err(SatakeError::WeightLength { .. })));
}

#[test]
fn orbit_counts() {
    let a2 = Group::Gl(3).root_system().unwrap();
    let orbits = orbit_decomposition(&a2, &ThetaSet::full(2)).unwrap();
    assert_eq!(orbits.len(), 4);
    assert_eq!(orbits.iter().filter(|o| o.is_open).count(), 1);
    assert_eq!(orbits.iter().filter(|o| o.is_closed).count(), 1);
    for o in &orbits {
        assert_eq!(o.boundary_levi_rank, 2 - o.theta.len());
    }
    // Boolean lattice: 4 covering edges.
    assert_eq!(closure_edges(&orbits).len(), 4);

    let rank1 = o(4, 1).root_system().unwrap();
    assert_eq!(orbit_decomposition(&rank1, &ThetaSet::full(1)).unwrap().len(), 2);

    let b2 = o(3, 2).root_system().unwrap();
    let orbits = orbit_decomposition(&b2, &labels(2, &[2])).unwrap();
    let thetas: Vec<ThetaSet> = orbits.iter().map(|o| o.theta.clone()).collect();
    assert_eq!(thetas, vec![ThetaSet::empty(2), labels(2, &[1]), ThetaSet::full(2)]);
    assert_eq!(closure_edges(&orbits), vec![(0, 1), (1, 2)]);
    let dot = orbits_dot(&b2, &labels(2, &[2]), &orbits);
    assert!(dot.starts_with("digraph") && dot.contains("o0 -> o1") && dot.contains("o1 -> o2"));
}

#[test]
fn constant_sequence_stays_in_the_open_orbit() {
    let r = rep(o(3, 2), "exterior2");
    let seq = vec![vec![0.7, 0.4]; 40];
    let lim = satake_limit(&r, &seq, &LimitConfig::default()).unwrap();
    assert!(lim.theta.is_empty());
    assert_eq!(lim.predicted_rank, 10);
    assert!(lim.agrees);
}

#[test]
fn gl2_limit_has_rank_one() {
    let r = rep(Group::Gl(2), "identity");
    let seq: Vec<Vec<f64>> = (1..=40).map(|n| vec![2.0 * n as f64]).collect();
    let lim = satake_limit(&r, &seq, &LimitConfig::default()).unwrap();
    assert_eq!(lim.theta, ThetaSet::full(1));
    assert_eq!((lim.predicted_rank, lim.numeric_rank), (1, 1));
    assert!((lim.point.hermitian[(0, 0)] - 1.0).abs() < 1e-12);
}

#[test]
fn long_root_divergence_in_b2_exterior_square() {
    // Only α1 diverges; α2 settles at 0.5.
    let r = rep(o(3, 2), "exterior2");
    let seq: Vec<Vec<f64>> = (1..=60).map(|n| vec![n as f64, 0.5]).collect();
    let lim = satake_limit(&r, &seq, &LimitConfig::default()).unwrap();
    assert_eq!(lim.divergent, labels(2, &[1]));
    assert_eq!(lim.theta, labels(2, &[1]));
    assert!(lim.agrees, "{} vs {}", lim.predicted_rank, lim.numeric_rank);
    // Weights χ − w free of α1: ε1+ε2, ε1, ε1−ε2 and the middle ε1 copy.
    assert_eq!(lim.predicted_rank, 3);
}

#[test]
fn oscillating_sequence_has_no_limit() {
    let r = rep(o(3, 2), "exterior2");
    let seq: Vec<Vec<f64>> = (1..=40).map(|n| vec![n as f64, 1.0 + (n % 2) as f64]).collect();
    assert!(matches!(satake_limit(&r, &seq, &LimitConfig::default()), Err(SatakeError::NoLimit { root: 2 })));
}

#[test]
fn rank_profile_depends_only_on_theta() {
    let r = rep(Group::Gl(3), "adjoint");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cfg = LimitConfig::default();
    let mut by_theta = std::collections::BTreeMap::new();
    for _ in 0..40 {
        let div: Vec<bool> = (0..2).map(|_| rng.random::<bool>()).collect();
        let fin: Vec<f64> = (0..2).map(|_| rng.random::<f64>() * 1.5).collect();
        let rate: Vec<f64> = (0..2).map(|_| 0.8 + rng.random::<f64>()).collect();
        let seq: Vec<Vec<f64>> = (1..=60)
            .map(|n| (0..2).map(|i| if div[i] { rate[i] * n as f64 } else { fin[i] }).collect())
            .collect();
        let lim = satake_limit(&r, &seq, &cfg).unwrap();
        assert!(lim.agrees, "θ = {}: {} vs {}", lim.theta, lim.predicted_rank, lim.numeric_rank);
        let prev = by_theta.entry(lim.theta.to_string()).or_insert(lim.numeric_rank);
        assert_eq!(*prev, lim.numeric_rank);
    }
}

#[test]
fn sl2_adjoint_limits() {
    let r = rep(Group::Gl(2), "adjoint");
    let div: Vec<Vec<f64>> = (1..=40).map(|n| vec![n as f64]).collect();
    let lim = satake_limit(&r, &div, &LimitConfig::default()).unwrap();
    assert_eq!((lim.predicted_rank, lim.numeric_rank), (1, 1));
    let fin = vec![vec![0.3]; 40];
    let lim = satake_limit(&r, &fin, &LimitConfig::default()).unwrap();
    assert_eq!((lim.predicted_rank, lim.numeric_rank), (3, 3));
}

#[test]
fn direct_sum_ranks_are_not_predicted() {
    let r = rep(Group::Gl(2), "identity+adjoint");
    assert!(matches!(r.predicted_rank(&ThetaSet::full(1)), Err(SatakeError::Unsupported(_))));
    // o(2,2) = sl2 ⊕ sl2: two highest weights inside one block.
    let r = rep(o(2, 2), "adjoint");
    assert!(!r.is_irreducible());
    assert_eq!(r.highest_weights().len(), 2);
    assert!(r.predicted_rank(&ThetaSet::full(2)).is_err());
    assert!(rep(o(3, 2), "adjoint").is_irreducible());
}

#[test]
fn batch_matches_sequential() {
    let r = rep(o(3, 2), "exterior2");
    let seqs: Vec<Vec<Vec<f64>>> =
        (0..8).map(|k| (1..=40).map(|n| vec![n as f64 * (k % 2) as f64 + 0.2, 0.1 * k as f64]).collect()).collect();
    let cfg = LimitConfig::default();
    let a = satake_limit_batch(&r, &seqs, &cfg, Strategy::Sequential);
    let b = satake_limit_batch(&r, &seqs, &cfg, Strategy::default());
    for (x, y) in a.iter().zip(&b) {
        let (x, y) = (x.as_ref().unwrap(), y.as_ref().unwrap());
        assert_eq!((&x.theta, x.numeric_rank), (&y.theta, y.numeric_rank));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn embedded_points_are_states(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = rep(o(3, 2), "exterior2");
        let Group::Opq(f) = r.group().clone() else { unreachable!() };
        let p = satake_embed(&r, &random_form_preserving(&f, 2.0, &mut rng)).unwrap();
        prop_assert!((p.hermitian.trace() - 1.0).abs() < 1e-12);
        prop_assert!((&p.hermitian - p.hermitian.transpose()).amax() < 1e-12);
        prop_assert!(p.eigenvalues().iter().all(|&e| e > -1e-12));
    }
}
