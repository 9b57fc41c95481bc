use ano_cartan::{AlgebraTag, Group, LieAlgebra};
use ano_domain::{
    bracket_residual, complex_in_xbar, distance_to_bad_set, dynamical_relation_scan, expansion_certificate,
    in_bad_set, in_xbar, incidence_brute_force, kernel_of, killing_kernel, killing_signature,
    nilpotent_incidence_check, orbit_coverage, outside_theorem_hypotheses, ray_prefixes, sample_domain_points,
    subalgebra_point, BadSetVariant, CompactPoint, CoverageConfig, DomainError, ExpansionConfig, Neighborhood,
    RelationScanConfig,
};
use ano_limits::{sample_limit_set, LimitSample, DEFAULT_MERGE_TOL};
use ano_linalg::form::{complex_structure, restrict_gram};
use ano_linalg::sample::{graph_plane, random_form_preserving, random_isotropic_line, random_negative_plane};
use ano_linalg::{contains, dist_grassmann, Frame, Mat, Strategy, Vector, WittForm};
use ano_roots::ThetaSet;
use ano_words::{bundled, enumerate_ball, Generators, GroupBall, DEFAULT_DEDUP_TOL};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn f21() -> WittForm {
    WittForm::real(2, 1).unwrap()
}

fn line(v: &[f64]) -> Frame {
    Frame::line(&Vector::from_vec(v.to_vec())).unwrap()
}

fn frame(n: usize, cols: &[&[f64]]) -> Frame {
    let mut m = Mat::zeros(n, cols.len());
    for (j, c) in cols.iter().enumerate() {
        m.set_column(j, &Vector::from_vec(c.to_vec()));
    }
    Frame::from_columns(&m, 1e-12).unwrap()
}

fn ball(gens: Generators, radius: usize) -> GroupBall {
    enumerate_ball(&gens, radius, DEFAULT_DEDUP_TOL, 100_000, Strategy::default()).unwrap()
}

fn sample(ball: &GroupBall) -> LimitSample {
    let g = Group::orthogonal(2, 1).unwrap();
    sample_limit_set(ball, &g, &ThetaSet::full(1), 1.0, DEFAULT_MERGE_TOL, Strategy::default()).unwrap()
}

#[test]
fn membership_examples() {
    let f = f21();
    let s = 0.5f64.sqrt();
    let p = in_xbar(&line(&[s, 0.0, -s]), &f, TOL).unwrap();
    assert_eq!(p.stratum, 0);
    assert!(p.is_interior());
    assert_eq!(in_xbar(&line(&[1.0, 0.0, 0.0]), &f, TOL).unwrap().stratum, 1);
    match in_xbar(&line(&[0.0, 1.0, 0.0]), &f, TOL) {
        Err(DomainError::NotNonpositive { eigenvalue }) => assert!((eigenvalue - 1.0).abs() < 1e-12),
        other => panic!("{other:?}"),
    }
    assert!(matches!(in_xbar(&frame(3, &[&[1., 0., 0.], &[0., 1., 0.]]), &f, TOL), Err(DomainError::Shape { .. })));
}

#[test]
fn complex_membership_examples() {
    let f = WittForm::complex(3).unwrap();
    // Coordinates (Re z, Im z) in R^6.
    let w = frame(6, &[&[1., 0., -1., 0., 0., 0.], &[0., 0., 0., 1., 0., 1.], &[0., 0., 0., 0., 1., 0.]]);
    assert_eq!(complex_in_xbar(&w, &f, TOL).unwrap().stratum, 0);

    // The complex isotropic line C·e1 plus i·e2: a boundary point with a
    // complex kernel.
    let b = frame(6, &[&[1., 0., 0., 0., 0., 0.], &[0., 0., 0., 1., 0., 0.], &[0., 0., 0., 0., 1., 0.]]);
    let p = complex_in_xbar(&b, &f, TOL).unwrap();
    assert_eq!(p.stratum, 2);
    let k = kernel_of(&p, TOL).unwrap();
    assert!(k.transformed(&complex_structure(3)).unwrap().span_eq(&k, 1e-9));

    // C·e1 plus the real direction e3 pairs to i under b^C.
    let bad = frame(6, &[&[1., 0., 0., 0., 0., 0.], &[0., 0., 0., 1., 0., 0.], &[0., 0., 1., 0., 0., 0.]]);
    assert!(matches!(complex_in_xbar(&bad, &f, TOL), Err(DomainError::ImaginaryPart { .. })));
}

#[test]
fn complex_boundary_kernels_are_complex() {
    // Realifications of complex subspaces built from an isotropic complex
    // line and a negative real direction, moved by complex isometries that
    // keep them real on the form: kernels keep even real dimension.
    let f = WittForm::complex(5).unwrap();
    let n = 5;
    let mut cols = Vec::new();
    for j in [0usize, 1] {
        let mut re = vec![0.0; 2 * n];
        re[j] = 1.0;
        let mut im = vec![0.0; 2 * n];
        im[n + j] = 1.0;
        cols.push(re);
        cols.push(im);
    }
    let mut mid = vec![0.0; 2 * n];
    mid[n + 2] = 1.0;
    cols.push(mid);
    let refs: Vec<&[f64]> = cols.iter().map(|c| c.as_slice()).collect();
    let p = complex_in_xbar(&frame(2 * n, &refs), &f, TOL).unwrap();
    assert_eq!(p.stratum, 4);
    assert_eq!(p.stratum % 2, 0);
}

#[test]
fn interior_is_preserved_by_the_group() {
    let f = WittForm::real(3, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let w = random_negative_plane(&f, &mut rng);
        let p = in_xbar(&w, &f, TOL).unwrap();
        assert_eq!(p.stratum, 0);
        let g = random_form_preserving(&f, 2.0, &mut rng);
        assert_eq!(p.transformed(&g, TOL).unwrap().stratum, 0);
    }
}

#[test]
fn isotropic_vectors_orthogonal_to_a_plane_lie_in_it() {
    let f = WittForm::real(3, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for k in 0..300 {
        let s: Vec<f64> = (0..2).map(|j| if j < k % 3 { 1.0 } else { 0.5 }).collect();
        let w = graph_plane(&f, &s, &mut rng);
        let p = in_xbar(&w, &f, TOL).unwrap();
        assert_eq!(p.stratum, k % 3);
        // b is positive semidefinite on W^⊥ with kernel made of the isotropic vectors there.
        let perp = f.orthogonal_complement(&w).unwrap();
        let (_, null) = restrict_gram(f.gram(), &perp, TOL).unwrap();
        assert_eq!(null.k(), p.stratum);
        assert!(contains(&null, &w, 10.0 * TOL));
        assert!(null.span_eq(&kernel_of(&p, TOL).unwrap(), 10.0 * TOL));
    }
}

#[test]
fn incidence_equivalences_hold_on_random_pairs() {
    for (p, q) in [(2, 1), (3, 2), (3, 1)] {
        let f = WittForm::real(p, q).unwrap();
        let r = incidence_brute_force(&f, 3000, 5, TOL, Strategy::default()).unwrap();
        assert_eq!(r.violations, 0, "({p},{q}) {r:?}");
        assert_eq!(r.null_violations, 0, "({p},{q}) {r:?}");
        assert_eq!(r.incident, 1000);
    }
}

#[test]
fn bad_set_membership() {
    let b = ball(bundled::schottky().unwrap(), 6);
    let s = sample(&b);
    let f = f21();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..1000 {
        let p = in_xbar(&random_negative_plane(&f, &mut rng), &f, TOL).unwrap();
        assert!(!in_bad_set(&p, &s, BadSetVariant::Contain1, TOL).unwrap().hit);
        assert!(!in_bad_set(&p, &s, BadSetVariant::Intersect(1), TOL).unwrap().hit);
    }
    // In (2,1) the boundary points containing a limit line are the limit lines.
    let target = 3;
    let p = in_xbar(&s.points[target].frame, &f, TOL).unwrap();
    let hit = in_bad_set(&p, &s, BadSetVariant::Contain1, TOL).unwrap();
    assert_eq!(hit.witness, Some(target));
    // Isotropic lines in the gaps between shadows.
    let mut gaps = 0;
    for _ in 0..200 {
        let l = random_isotropic_line(&f, &mut rng);
        if s.nearest(&l).unwrap().1 > 1e-3 {
            gaps += 1;
            let p = in_xbar(&l, &f, TOL).unwrap();
            assert_eq!(p.stratum, 1);
            assert!(!in_bad_set(&p, &s, BadSetVariant::Contain1, TOL).unwrap().hit);
        }
    }
    assert!(gaps > 100);
    assert!(matches!(
        in_bad_set(&p, &s, BadSetVariant::Intersect(2), TOL),
        Err(DomainError::VariantMismatch { expected: 2, found: 1 })
    ));
}

#[test]
fn bad_set_variants_agree_and_are_equivariant() {
    let f = f21();
    let b = ball(bundled::schottky().unwrap(), 5);
    let s = sample(&b);
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut points: Vec<CompactPoint> = s.points.iter().map(|p| in_xbar(&p.frame, &f, TOL).unwrap()).collect();
    for _ in 0..50 {
        points.push(in_xbar(&random_isotropic_line(&f, &mut rng), &f, TOL).unwrap());
        points.push(in_xbar(&random_negative_plane(&f, &mut rng), &f, TOL).unwrap());
    }
    for _ in 0..5 {
        let g = random_form_preserving(&f, 1.0, &mut rng);
        let moved = s.transformed(&g).unwrap();
        for p in &points {
            let a = in_bad_set(p, &s, BadSetVariant::Contain1, 1e-7).unwrap().hit;
            assert_eq!(a, in_bad_set(p, &s, BadSetVariant::Intersect(1), 1e-7).unwrap().hit);
            let gp = p.transformed(&g, 1e-7).unwrap();
            assert_eq!(a, in_bad_set(&gp, &moved, BadSetVariant::Contain1, 1e-7).unwrap().hit);
        }
    }
}

#[test]
fn schottky_orbits_accumulate_on_the_bad_set() {
    let f = f21();
    let b = ball(bundled::schottky().unwrap(), 6);
    let s = sample(&b);
    let points = sample_domain_points(&f, 20, 3, TOL);
    assert_eq!(points.len(), 20);
    let scan = dynamical_relation_scan(
        &points,
        &b,
        &s,
        &Group::orthogonal(2, 1).unwrap(),
        &RelationScanConfig::default(),
        Strategy::default(),
    )
    .unwrap();
    assert_eq!(scan.tail_start, 3);
    assert!(scan.flags.is_empty(), "{:?}", &scan.flags[..scan.flags.len().min(3)]);
    assert!(scan.residual < 1e-3);
    assert_eq!(scan.pairs_checked, 20 * (b.len() - 1 - 4 - 12));
}

#[test]
fn non_discrete_group_is_flagged() {
    let f = f21();
    let b = ball(bundled::mixed().unwrap(), 6);
    let s = sample(&b);
    let points = sample_domain_points(&f, 10, 3, TOL);
    let g = Group::orthogonal(2, 1).unwrap();
    let run = |strategy| dynamical_relation_scan(&points, &b, &s, &g, &RelationScanConfig::default(), strategy).unwrap();
    let scan = run(Strategy::default());
    assert!(!scan.flags.is_empty());
    let seq = run(Strategy::Sequential);
    let words: Vec<(usize, &str)> = scan.flags.iter().map(|x| (x.point, x.word.as_str())).collect();
    let seq_words: Vec<(usize, &str)> = seq.flags.iter().map(|x| (x.point, x.word.as_str())).collect();
    assert_eq!(words, seq_words);
    // Merged by point, then word order.
    assert!(scan.flags.windows(2).all(|w| w[0].point <= w[1].point));
}

#[test]
fn radius_zero_scan_is_empty() {
    let f = f21();
    let b = ball(bundled::schottky().unwrap(), 0);
    let s = sample(&ball(bundled::schottky().unwrap(), 3));
    let points = sample_domain_points(&f, 5, 1, TOL);
    let scan = dynamical_relation_scan(
        &points,
        &b,
        &s,
        &Group::orthogonal(2, 1).unwrap(),
        &RelationScanConfig::default(),
        Strategy::default(),
    )
    .unwrap();
    assert!(scan.flags.is_empty());
    assert_eq!(scan.pairs_checked, 0);
}

fn diagonal_gens(t: f64) -> Generators {
    Generators::new(vec![("a".into(), bundled::hyperbolic(t))]).unwrap()
}

#[test]
fn diagonal_ray_expands_near_its_attracting_line() {
    let f = f21();
    let gens = diagonal_gens(1.0);
    let xi = line(&[1.0, 0.0, 0.0]);
    let ray = ray_prefixes(&[0; 6]);
    let cert = expansion_certificate(&xi, &ray, &gens, &f, &ExpansionConfig::new(2.0, 7)).unwrap();
    assert!(cert.n >= 1 && cert.n <= 2, "{cert:?}");
    assert!(cert.factor >= 2.0);
    assert!(cert.word.starts_with("a^-1"));
    // The measured factor grows along the ray on a fixed neighborhood.
    let hood = Neighborhood::sample(&xi, &f, 1e-5, 12, 3).unwrap();
    let factors: Vec<f64> = (1..=4).map(|n| hood.min_ratio(&bundled::hyperbolic(-(n as f64))).unwrap().0).collect();
    assert!(factors.windows(2).all(|w| w[1] > w[0]), "{factors:?}");
}

#[test]
fn trivial_and_failing_certificates() {
    let f = f21();
    let xi = line(&[1.0, 0.0, 0.0]);
    let cert =
        expansion_certificate(&xi, &ray_prefixes(&[0; 3]), &diagonal_gens(1.0), &f, &ExpansionConfig::new(1.0, 1))
            .unwrap();
    assert_eq!(cert.n, 0);
    assert_eq!(cert.word, "1");

    let rot = Generators::new(vec![("r".into(), bundled::definite_rotation(0.7))]).unwrap();
    match expansion_certificate(&xi, &ray_prefixes(&[0; 8]), &rot, &f, &ExpansionConfig::new(2.0, 1)) {
        Err(DomainError::NoCertificate { best, .. }) => assert!(best < 1.5, "{best}"),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        expansion_certificate(&xi, &ray_prefixes(&[0]), &diagonal_gens(1.0), &f, &ExpansionConfig::new(0.5, 1)),
        Err(DomainError::ExpansionConstant(_))
    ));
}

#[test]
fn schottky_limit_flags_get_certificates() {
    let f = f21();
    let b = ball(bundled::schottky().unwrap(), 6);
    let s = sample(&b);
    for p in s.points.iter().take(8) {
        let letters = b.generators.parse_word(&p.word).unwrap();
        let cert =
            expansion_certificate(&p.frame, &ray_prefixes(&letters), &b.generators, &f, &ExpansionConfig::new(2.0, 9))
                .unwrap();
        assert!(cert.factor >= 2.0);
    }
}

#[test]
fn coverage_without_group_is_core_fraction() {
    let f = f21();
    let b0 = ball(bundled::schottky().unwrap(), 0);
    let s = sample(&ball(bundled::schottky().unwrap(), 4));
    let core = sample_domain_points(&f, 8, 100, TOL);
    let cfg = CoverageConfig { trials: 100, seed: 4, ..CoverageConfig::default() };
    let curve = orbit_coverage(&core, &b0, &s, &f, &cfg, Strategy::default()).unwrap();
    let trials = sample_domain_points(&f, 100, 4, TOL);
    let in_core = trials
        .iter()
        .filter(|w| core.iter().any(|c| dist_grassmann(&w.frame, &c.frame).unwrap() < cfg.d_core))
        .count();
    assert_eq!(curve[0].margin, 0.0);
    assert_eq!(curve[0].considered, 100);
    assert_eq!(curve[0].covered, in_core);
    // Larger margins keep fewer points.
    assert!(curve.windows(2).all(|w| w[1].considered <= w[0].considered));
    for t in &trials {
        assert!(distance_to_bad_set(&t.frame, &s).unwrap().1 > 0.0);
    }
}

#[test]
fn coverage_grows_with_the_ball() {
    let f = f21();
    let s = sample(&ball(bundled::schottky().unwrap(), 4));
    let core = sample_domain_points(&f, 8, 100, TOL);
    let cfg = CoverageConfig { trials: 100, seed: 4, ..CoverageConfig::default() };
    let covered: Vec<usize> = (0..3)
        .map(|r| orbit_coverage(&core, &ball(bundled::schottky().unwrap(), r), &s, &f, &cfg, Strategy::default()).unwrap()[0].covered)
        .collect();
    assert!(covered.windows(2).all(|w| w[1] >= w[0]), "{covered:?}");
}

fn all_thetas(rank: usize) -> Vec<ThetaSet> {
    (0..1usize << rank).map(|m| ThetaSet::new(rank, (0..rank).filter(|i| m >> i & 1 == 1)).unwrap()).collect()
}

const ALGEBRAS: [AlgebraTag; 8] = [
    AlgebraTag::Sl(2),
    AlgebraTag::Sl(3),
    AlgebraTag::Sl(4),
    AlgebraTag::O(2, 1),
    AlgebraTag::O(3, 1),
    AlgebraTag::O(4, 1),
    AlgebraTag::O(2, 2),
    AlgebraTag::O(3, 2),
];

#[test]
fn subalgebra_points_satisfy_their_invariants() {
    for tag in ALGEBRAS {
        let alg = LieAlgebra::new(tag).unwrap();
        let dim_k = alg.compact_subalgebra().k();
        for theta in all_thetas(alg.root_system().rank()) {
            let r = subalgebra_point(&alg, &theta).unwrap();
            assert_eq!(r.basis.k(), dim_k, "{tag} {theta}");
            assert!(bracket_residual(&alg, &r.basis) < 1e-9, "{tag} {theta}");
            let sig = killing_signature(&alg, &r.basis, 1e-8);
            assert_eq!(sig.pos, 0, "{tag} {theta}");
            assert_eq!(sig.null, r.u_theta.k(), "{tag} {theta}");
            assert!(killing_kernel(&alg, &r.basis, 1e-8).unwrap().span_eq(&r.u_theta, 1e-6));
        }
        let empty = subalgebra_point(&alg, &ThetaSet::empty(alg.root_system().rank())).unwrap();
        assert!(empty.basis.span_eq(&alg.compact_subalgebra(), 1e-9));
    }
}

#[test]
fn sl2_subalgebra_examples() {
    let alg = LieAlgebra::new(AlgebraTag::Sl(2)).unwrap();
    let r0 = subalgebra_point(&alg, &ThetaSet::empty(1)).unwrap();
    assert_eq!(r0.basis.k(), 1);
    assert_eq!(killing_signature(&alg, &r0.basis, 1e-8).neg, 1);
    let r1 = subalgebra_point(&alg, &ThetaSet::full(1)).unwrap();
    let e = alg.coords(&Mat::from_row_slice(2, 2, &[0., 1., 0., 0.]));
    let l = Frame::line(&e).unwrap();
    assert!(r1.u_theta.span_eq(&l, 1e-12));
    assert_eq!(r1.k_theta.k(), 0);

    let v = nilpotent_incidence_check(&alg, &r1.basis, &l, 1e-9).unwrap();
    assert!(v.intersects && v.contains && v.in_kernel && v.holds);
    let w0 = Mat::from_row_slice(2, 2, &[0., -1., 1., 0.]);
    let opposite = r1.translate(&alg, &w0).unwrap();
    let v = nilpotent_incidence_check(&alg, &opposite, &l, 1e-9).unwrap();
    assert!(!v.intersects && !v.contains && v.holds);
    let v = nilpotent_incidence_check(&alg, &r1.basis, &Frame::empty(alg.dim()), 1e-9).unwrap();
    assert!(v.holds && !v.intersects);
    let h = Frame::line(&alg.coords(&Mat::from_row_slice(2, 2, &[1., 0., 0., -1.]))).unwrap();
    assert!(matches!(nilpotent_incidence_check(&alg, &r1.basis, &h, 1e-9), Err(DomainError::NotNilpotent { .. })));
}

#[test]
fn nilpotent_lines_in_translates_of_boundary_points() {
    // Lines of nilpotents meeting a translate Ad(g)·r_θ lie in its Killing kernel.
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for tag in [AlgebraTag::Sl(3), AlgebraTag::O(2, 1), AlgebraTag::O(3, 2)] {
        let alg = LieAlgebra::new(tag).unwrap();
        let rank = alg.root_system().rank();
        for theta in all_thetas(rank).into_iter().filter(|t| !t.is_empty()) {
            let r = subalgebra_point(&alg, &theta).unwrap();
            let g = match alg.group() {
                Group::Opq(form) => random_form_preserving(form, 1.0, &mut rng),
                _ => {
                    let mut m = ano_linalg::sample::gaussian_matrix(alg.matrix_dim(), alg.matrix_dim(), &mut rng);
                    let d = m.determinant();
                    m /= d.abs().powf(1.0 / alg.matrix_dim() as f64);
                    m
                }
            };
            let w = r.translate(&alg, &g).unwrap();
            let ad = alg.adjoint(&g).unwrap();
            let l = r.u_theta.leading(1).transformed(&ad).unwrap();
            let v = nilpotent_incidence_check(&alg, &w, &l, 1e-8).unwrap();
            assert!(v.intersects && v.contains && v.in_kernel, "{tag} {theta}");
        }
    }
}

#[test]
fn hypothesis_tags() {
    assert!(outside_theorem_hypotheses(&WittForm::real(1, 1).unwrap(), 1));
    assert!(outside_theorem_hypotheses(&WittForm::real(2, 2).unwrap(), 1));
    assert!(outside_theorem_hypotheses(&WittForm::real(3, 3).unwrap(), 2));
    assert!(!outside_theorem_hypotheses(&WittForm::real(3, 3).unwrap(), 1));
    assert!(!outside_theorem_hypotheses(&WittForm::real(2, 1).unwrap(), 1));
}

mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn graph_planes_are_accepted_with_their_stratum(seed in any::<u64>(), nulls in 0usize..=2) {
            let f = WittForm::real(4, 2).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s: Vec<f64> = (0..2).map(|j| if j < nulls { 1.0 } else { 0.3 }).collect();
            let p = in_xbar(&graph_plane(&f, &s, &mut rng), &f, TOL).unwrap();
            prop_assert_eq!(p.stratum, nulls);
        }
    }
}
