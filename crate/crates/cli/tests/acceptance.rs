//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use ano_cartan::{exterior_power, kak_batch, mu_gaps, AlgebraTag, Group, LieAlgebra};
use ano_domain::{
    dynamical_relation_scan, expansion_certificate, in_bad_set, incidence_brute_force, killing_signature,
    ray_prefixes, sample_domain_points, subalgebra_point, BadSetVariant, ExpansionConfig, RelationScanConfig,
};
use ano_limits::{sample_limit_set, transversality_report, LimitSample, DEFAULT_MERGE_TOL, DEFAULT_PAIR_FLOOR};
use ano_linalg::sample::{gaussian_matrix, random_form_preserving};
use ano_linalg::{Mat, Strategy, WittForm};
use ano_roots::{build_root_system, nucleus_saturation, table1_all, tau_admissible_sets, RootType, ThetaSet};
use ano_satake::{satake_limit, LimitConfig, Representation};
use ano_words::{bundled, divergence_profile, enumerate_ball, Generators, GroupBall, DEFAULT_DEDUP_TOL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KAK_TOL: f64 = 1e-9;
const KAK_BUDGET: Duration = Duration::from_secs(5);
const DUALITY_TOL: f64 = 1e-9;
const EXTERIOR_TOL: f64 = 1e-8;
const INCIDENCE_TOL: f64 = 1e-9;
const TABLE_BUDGET: Duration = Duration::from_secs(1);
const SLOPE_FLOOR: f64 = 0.5;
const TRANSVERSALITY_FLOOR: f64 = 1e-3;
const ACCUMULATION_TOL: f64 = 1e-3;
const EXPANSION_C: f64 = 2.0;
const SCHOTTKY_BUDGET: Duration = Duration::from_secs(120);
const KILLING_TOL: f64 = 1e-8;
const PIPELINE_RADIUS: usize = 8;
const BALL_CAP: usize = 100_000;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn random_gl5(n: usize, seed: u64) -> Vec<Mat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| gaussian_matrix(5, 5, &mut rng)).collect()
}

fn random_o32(n: usize, seed: u64) -> Vec<Mat> {
    let f = WittForm::real(3, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_form_preserving(&f, 3.0, &mut rng)).collect()
}

fn corpus() -> Vec<(Group, Vec<Mat>)> {
    vec![(Group::Gl(5), random_gl5(1000, 1)), (Group::orthogonal(3, 2).unwrap(), random_o32(1000, 2))]
}

fn c1_kak() -> Verdict {
    let start = Instant::now();
    let mut worst = 0.0_f64;
    for (group, gs) in corpus() {
        for (g, t) in gs.iter().zip(kak_batch(&gs, &group, Strategy::default())) {
            match t {
                Ok(t) => worst = worst.max(t.reconstruction_error(g)),
                Err(e) => return verdict(false, format!("kak failed: {e}")),
            }
        }
    }
    let took = start.elapsed();
    verdict(worst <= KAK_TOL && took < KAK_BUDGET, format!("max relative error {worst:.2e}, {took:.2?}"))
}

fn c2_duality() -> Verdict {
    let mut worst = 0.0_f64;
    for (group, gs) in corpus() {
        let rs = group.root_system().unwrap();
        let inv: Vec<Mat> = gs.iter().map(|g| g.clone().try_inverse().unwrap()).collect();
        let a = kak_batch(&gs, &group, Strategy::default());
        let b = kak_batch(&inv, &group, Strategy::default());
        for (x, y) in a.into_iter().zip(b) {
            let gx = mu_gaps(&x.unwrap().mu, &rs).unwrap();
            let gy = mu_gaps(&y.unwrap().mu, &rs).unwrap();
            for (i, v) in gx.iter().enumerate() {
                worst = worst.max((v - gy[rs.opposition()[i]]).abs());
            }
        }
    }
    verdict(worst <= DUALITY_TOL, format!("max deviation {worst:.2e}"))
}

fn c3_exterior() -> Verdict {
    let gs = random_gl5(100, 3);
    let rs5 = Group::Gl(5).root_system().unwrap();
    let mut worst = 0.0_f64;
    for g in &gs {
        let base = mu_gaps(&ano_cartan::kak(g, &Group::Gl(5)).unwrap().mu, &rs5).unwrap();
        for i in 1..=3 {
            let big = exterior_power(g, i).unwrap();
            let group = Group::Gl(big.nrows());
            let rs = group.root_system().unwrap();
            let gaps = mu_gaps(&ano_cartan::kak(&big, &group).unwrap().mu, &rs).unwrap();
            worst = worst.max((gaps[0] - base[i - 1]).abs());
        }
    }
    verdict(worst <= EXTERIOR_TOL, format!("max deviation {worst:.2e} over 100 matrices, i = 1,2,3"))
}

fn c4_incidence() -> Verdict {
    let f = WittForm::real(3, 2).unwrap();
    match incidence_brute_force(&f, 10_000, 4, INCIDENCE_TOL, Strategy::default()) {
        Ok(r) => verdict(
            r.violations == 0 && r.null_violations == 0,
            format!("{} samples ({} incident), {} violations", r.samples, r.incident, r.violations + r.null_violations),
        ),
        Err(e) => verdict(false, e.to_string()),
    }
}

fn c5_table() -> Verdict {
    let start = Instant::now();
    let rows = table1_all().unwrap();
    let took = start.elapsed();
    let failed: Vec<String> = rows.iter().filter(|r| !r.verified).map(|r| r.label.clone()).collect();
    verdict(
        failed.is_empty() && took < TABLE_BUDGET,
        format!("{}/{} rows verified{}, {took:.2?}", rows.len() - failed.len(), rows.len(), if failed.is_empty() {
            String::new()
        } else {
            format!(" (failed: {})", failed.join(" "))
        }),
    )
}

fn c6_chain() -> Verdict {
    for m in [2, 3] {
        let rs = build_root_system(RootType::B, m).unwrap();
        let support = ThetaSet::from_labels(m, [m]).unwrap();
        let sets = tau_admissible_sets(&rs, &support).unwrap();
        let chain: Vec<ThetaSet> = (0..=m).map(|i| ThetaSet::from_labels(m, 1..=i).unwrap()).collect();
        if sets != chain {
            return verdict(false, format!("B{m}: admissible sets differ from the chain"));
        }
        for (i, t) in chain.iter().enumerate() {
            let (vee, dd) = nucleus_saturation(&rs, &support, t).unwrap();
            let want = if i == 0 {
                (ThetaSet::full(m), ThetaSet::empty(m))
            } else {
                (ThetaSet::from_labels(m, i..=m).unwrap(), ThetaSet::from_labels(m, [i]).unwrap())
            };
            if (vee.clone(), dd.clone()) != want {
                return verdict(false, format!("B{m}, θ = {t}: got θ∨ = {vee}, θ‡ = {dd}"));
            }
        }
    }
    verdict(true, "m = 2, 3: chains of m+1 orbits with θ∨ and θ‡ as expected")
}

fn ball(gens: &Generators) -> GroupBall {
    enumerate_ball(gens, PIPELINE_RADIUS, DEFAULT_DEDUP_TOL, BALL_CAP, Strategy::default()).unwrap()
}

fn limit_sample(b: &GroupBall) -> LimitSample {
    let g = Group::orthogonal(2, 1).unwrap();
    sample_limit_set(b, &g, &ThetaSet::full(1), 1.0, DEFAULT_MERGE_TOL, Strategy::default()).unwrap()
}

fn relation_flags(b: &GroupBall, s: &LimitSample, points: usize) -> (usize, f64) {
    let f = WittForm::real(2, 1).unwrap();
    let pts = sample_domain_points(&f, points, 17, INCIDENCE_TOL);
    let cfg = RelationScanConfig { accumulation_tol: ACCUMULATION_TOL, ..RelationScanConfig::default() };
    let scan =
        dynamical_relation_scan(&pts, b, s, &Group::orthogonal(2, 1).unwrap(), &cfg, Strategy::default()).unwrap();
    (scan.flags.len(), scan.residual)
}

fn c7_schottky() -> Verdict {
    let start = Instant::now();
    let f = WittForm::real(2, 1).unwrap();
    let group = Group::orthogonal(2, 1).unwrap();
    let gens = bundled::schottky().unwrap();
    let b = ball(&gens);
    let slope = divergence_profile(&b, &group, Strategy::default()).unwrap().fit(0).slope;
    let s = limit_sample(&b);
    let margin = transversality_report(&s, &f, DEFAULT_PAIR_FLOOR, Strategy::default()).margin;
    let interior = sample_domain_points(&f, 1000, 7, INCIDENCE_TOL);
    let hits = interior
        .iter()
        .filter(|p| in_bad_set(p, &s, BadSetVariant::Contain1, INCIDENCE_TOL).unwrap().hit)
        .count();
    let (flags, residual) = relation_flags(&b, &s, 20);
    let certified = s
        .points
        .iter()
        .take(8)
        .filter(|p| {
            let letters = gens.parse_word(&p.word).unwrap();
            expansion_certificate(&p.frame, &ray_prefixes(&letters), &gens, &f, &ExpansionConfig::new(EXPANSION_C, 9))
                .is_ok_and(|c| c.factor >= EXPANSION_C * (1.0 - 1e-9))
        })
        .count();
    let took = start.elapsed();
    let pass = slope > SLOPE_FLOOR
        && margin > TRANSVERSALITY_FLOOR
        && interior.len() == 1000
        && hits == 0
        && flags == 0
        && residual < ACCUMULATION_TOL
        && certified == 8.min(s.len())
        && s.len() >= 8
        && took < SCHOTTKY_BUDGET;
    verdict(
        pass,
        format!(
            "ball {}: slope {slope:.3}, margin {margin:.3e}, bad-set hits {hits}/{}, flags {flags} (residual {residual:.1e}), certificates {certified}/8, {took:.1?}",
            b.len(),
            interior.len()
        ),
    )
}

fn c8_control() -> Verdict {
    let b = ball(&bundled::mixed().unwrap());
    let s = limit_sample(&b);
    let (flags, residual) = relation_flags(&b, &s, 5);
    verdict(flags >= 1, format!("ball {}: {flags} flags (residual {residual:.2})", b.len()))
}

fn c9_killing() -> Verdict {
    let mut checked = 0;
    for tag in [AlgebraTag::Sl(2), AlgebraTag::Sl(3), AlgebraTag::O(2, 1)] {
        let alg = LieAlgebra::new(tag).unwrap();
        let rank = alg.root_system().rank();
        for mask in 0u32..1 << rank {
            let theta = ThetaSet::new(rank, (0..rank).filter(|i| mask >> i & 1 == 1)).unwrap();
            let p = subalgebra_point(&alg, &theta).unwrap();
            let sig = killing_signature(&alg, &p.basis, KILLING_TOL);
            if sig.null != p.u_theta.k() {
                return verdict(false, format!("{tag}, θ = {theta}: null {} vs dim u {}", sig.null, p.u_theta.k()));
            }
            checked += 1;
        }
    }
    verdict(true, format!("{checked} (algebra, θ) pairs"))
}

/// Each root either diverges linearly or settles (constant or exponentially fast).
fn random_sequence(rank: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let kinds: Vec<(u8, f64)> = (0..rank)
        .map(|_| match rng.random_range(0..3u8) {
            0 => (0, 0.8 + rng.random::<f64>()),
            k => (k, 1.5 * rng.random::<f64>()),
        })
        .collect();
    (1..=60)
        .map(|n| {
            let n = n as f64;
            kinds
                .iter()
                .map(|&(k, a)| match k {
                    0 => a * n,
                    1 => a,
                    _ => a + (-n).exp(),
                })
                .collect()
        })
        .collect()
}

fn c10_satake() -> Verdict {
    let cases = [
        ("A2 adjoint", Representation::new(Group::Gl(3), "adjoint".parse().unwrap()).unwrap()),
        ("B2 exterior2", Representation::new(Group::orthogonal(3, 2).unwrap(), "exterior2".parse().unwrap()).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let cfg = LimitConfig::default();
    let mut parts = Vec::new();
    let mut pass = true;
    for (name, rep) in &cases {
        let rank = rep.root_system().rank();
        let agree = (0..50)
            .filter(|_| satake_limit(rep, &random_sequence(rank, &mut rng), &cfg).is_ok_and(|l| l.agrees))
            .count();
        pass &= agree == 50;
        parts.push(format!("{name} (support {}): {agree}/50", rep.support().unwrap()));
    }
    verdict(pass, parts.join(", "))
}

fn run_cli(out: &Path) -> Result<(), String> {
    let bin = env!("CARGO_BIN_EXE_anoctl");
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/schottky.json");
    let runs: [&[&str]; 3] = [
        &["domain-check", "--form", "2,1", "--radius", "4", "--samples", "100"],
        &["limitset", "--radius", "5"],
        &["divergence", "--radius", "5"],
    ];
    for args in runs {
        let status = Command::new(bin)
            .args(args)
            .arg("--gens")
            .arg(&data)
            .arg("--seed")
            .arg("11")
            .arg("--out")
            .arg(out)
            .output()
            .map_err(|e| e.to_string())?;
        if !status.status.success() {
            return Err(format!("{args:?}: {}", String::from_utf8_lossy(&status.stderr)));
        }
    }
    Ok(())
}

fn c11_determinism() -> Verdict {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for d in [&a, &b] {
        if let Err(e) = run_cli(d.path()) {
            return verdict(false, e);
        }
    }
    let files = ["domain.json", "limitset.json", "limitset.csv", "limitset.svg", "divergence.csv", "divergence.json"];
    let differing: Vec<&str> = files
        .iter()
        .copied()
        .filter(|f| std::fs::read(a.path().join(f)).ok() != std::fs::read(b.path().join(f)).ok())
        .collect();
    verdict(differing.is_empty(), format!("{} files compared, differing: {differing:?}", files.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 11] = [
        ("KAK reconstruction", c1_kak),
        ("duality identity", c2_duality),
        ("exterior-power gap identity", c3_exterior),
        ("incidence brute force (3,2)", c4_incidence),
        ("simple/highest root table", c5_table),
        ("odd complex-orthogonal admissible chain", c6_chain),
        ("Schottky pipeline", c7_schottky),
        ("non-discrete negative control", c8_control),
        ("Killing null count on r_θ", c9_killing),
        ("Satake limit consistency", c10_satake),
        ("determinism of reports", c11_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = f();
        failed += usize::from(!v.pass);
        println!("{} criterion {:>2} {name}: {}", if v.pass { "PASS" } else { "FAIL" }, i + 1, v.detail);
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
