//! Acceptance gate: one test per criterion, each printing a PASS/FAIL
//! line (visible with --nocapture and on failure).

use std::collections::BTreeSet;
use std::process::Command;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sumfree::certify::{
    affine_coset_containment, coset_cover, is_normal, is_sum_free, lambda_max,
};
use sumfree::constructions::{self, TriState};
use sumfree::group::{hyperplanes, GroupSpec, Vector};
use sumfree::interval::{residue_difference, residue_sumset, IntervalSpec};
use sumfree::rows::{offset_relation_check, row_profile};
use sumfree::search::{
    enumerate_sumfree, max_nonnormal, probe_theorem_1_4, sample_greedy, verify_lemma_3_1,
    SearchConfig, SearchMode, SymmetryReduction,
};
use sumfree::set::{
    difference_set, kneser_defect, simple_kneser_sumset, sumset, GroupSet,
};
use sumfree::verify::gap_bound_grid;

fn criterion(n: u32, detail: &str, ok: bool) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("{} criterion {:2}: {}", verdict, n, detail);
    assert!(ok, "criterion {} failed: {}", n, detail);
}

fn max_by_exhaustion(spec: GroupSpec) -> u64 {
    let cfg = SearchConfig::new(spec, SearchMode::EnumerateAll);
    let mut best = 0;
    enumerate_sumfree(&cfg, &mut |a| best = best.max(a.card())).unwrap();
    best
}

fn random_set(spec: GroupSpec, rng: &mut impl Rng, density: f64) -> GroupSet {
    let mut s = GroupSet::empty(spec);
    for i in 0..spec.order() {
        if rng.gen_bool(density) {
            s.insert(i);
        }
    }
    s
}

#[test]
fn criterion_01_lambda_cross_checks() {
    let cases = [
        (GroupSpec::new(5, 1).unwrap(), vec![5u64], 2u64),
        (GroupSpec::new(5, 2).unwrap(), vec![5, 5], 10),
        (GroupSpec::new(2, 3).unwrap(), vec![2, 2, 2], 4),
        (GroupSpec::new(2, 4).unwrap(), vec![2, 2, 2, 2], 8),
        (GroupSpec::new(7, 1).unwrap(), vec![7], 2),
    ];
    let mut ok = true;
    for (spec, factors, expected) in &cases {
        ok &= lambda_max(factors).unwrap() == *expected;
        ok &= max_by_exhaustion(*spec) == *expected;
    }
    criterion(
        1,
        "exhaustive max sum-free size equals the lambda formula on 5 tiny groups",
        ok,
    );
}

#[test]
fn criterion_02_f5_2_sharp_threshold() {
    let spec = GroupSpec::new(5, 2).unwrap();
    let mut cfg = SearchConfig::new(spec, SearchMode::MaxNonnormal);
    cfg.symmetry_reduction = SymmetryReduction::StabilizerPrefix;
    let report = max_nonnormal(&cfg).unwrap();
    let mut ecfg = SearchConfig::new(spec, SearchMode::EnumerateAll);
    ecfg.min_size = 6;
    let mut all_normal = true;
    let mut count = 0u64;
    enumerate_sumfree(&ecfg, &mut |a| {
        count += 1;
        all_normal &= is_normal(a).unwrap().is_normal();
    })
    .unwrap();
    criterion(
        2,
        &format!(
            "max non-normal in F_5^2 is {} (exhaustive {}), {} sets of size >= 6 all normal",
            report.best_size, report.exhaustive, count
        ),
        report.best_size == 5 && report.exhaustive && count > 0 && all_normal,
    );
}

#[test]
fn criterion_03_fixture_certification() {
    let mut ok = true;
    for c in constructions::registry() {
        ok &= c.set.card() == c.expected.size;
        ok &= is_sum_free(&c.set) == c.expected.sum_free;
        ok &= match c.expected.normal {
            TriState::Yes => is_normal(&c.set).unwrap().is_normal(),
            TriState::No => !is_normal(&c.set).unwrap().is_normal(),
            TriState::Undefined => is_normal(&c.set).is_err(),
        };
        ok &= match c.expected.cover3 {
            TriState::Yes => coset_cover(&c.set, 3).unwrap().is_some(),
            TriState::No => coset_cover(&c.set, 3).unwrap().is_none(),
            TriState::Undefined => true,
        };
    }
    // the F_2^4 extremal set additionally lies in no proper coset
    let extremal = constructions::build_f2_extremal(4).unwrap();
    ok &= affine_coset_containment(&extremal).unwrap().is_none();
    criterion(3, "all fixtures recertified from scratch", ok);
}

#[test]
fn criterion_04_lemma_3_1_mechanized() {
    let report = verify_lemma_3_1().unwrap();
    criterion(
        4,
        &format!(
            "{} orbits: {} shape counterexamples, {} two-coset failures, orbit-mass cross-check {}",
            report.orbits_checked,
            report.shape_counterexamples.len(),
            report.two_coset_failures.len(),
            report.cross_check_ok
        ),
        report.orbits_checked > 0
            && report.shape_counterexamples.is_empty()
            && report.two_coset_failures.is_empty()
            && report.cross_check_ok,
    );
}

#[test]
fn criterion_05_kneser_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut ok = true;
    let mut pairs = 0u64;
    for (p, n) in [(5u32, 2u32), (2, 4), (7, 2), (11, 2)] {
        let spec = GroupSpec::new(p, n).unwrap();
        let mut done = 0;
        while done < 500 {
            let da = rng.gen_range(0.05..0.6);
            let db = rng.gen_range(0.05..0.6);
            let a = random_set(spec, &mut rng, da);
            let b = random_set(spec, &mut rng, db);
            if a.is_empty() || b.is_empty() {
                continue;
            }
            let d = kneser_defect(&a, &b).unwrap();
            ok &= d.lhs as i64 >= d.rhs;
            done += 1;
            pairs += 1;
        }
    }

    // 200 random valid simple-Kneser instances in F_5^2
    let spec = GroupSpec::new(5, 2).unwrap();
    let lines: Vec<_> = hyperplanes(spec).iter().map(|f| f.kernel()).collect();
    let mut instances = 0u64;
    for i in 0..200 {
        let h = &lines[i % lines.len()];
        let helems = h.enumerate();
        let arep = Vector::from_index(spec, rng.gen_range(0..spec.order()));
        let brep = Vector::from_index(spec, rng.gen_range(0..spec.order()));
        let mut apick: Vec<u64> = helems
            .iter()
            .map(|&x| spec.add_index(x, arep.index()))
            .collect();
        let mut bpick: Vec<u64> = helems
            .iter()
            .map(|&x| spec.add_index(x, brep.index()))
            .collect();
        apick.shuffle(&mut rng);
        bpick.shuffle(&mut rng);
        let asz = rng.gen_range(3..=5);
        let bsz = rng.gen_range(6 - asz..=5);
        let a = GroupSet::from_indices(spec, apick.into_iter().take(asz));
        let b = GroupSet::from_indices(spec, bpick.into_iter().take(bsz));
        let s = simple_kneser_sumset(&a, &b, h, &arep, &brep).unwrap();
        ok &= s.card() == h.size();
        instances += 1;
    }
    criterion(
        5,
        &format!(
            "Kneser inequality on {} pairs, full coset on {} simple-Kneser instances",
            pairs, instances
        ),
        ok && pairs == 2000 && instances == 200,
    );
}

#[test]
fn criterion_06_interval_identities_and_continuity() {
    let mut ok = true;
    for p in [5u32, 11, 17, 23] {
        let ivl = IntervalSpec::new(p).unwrap();
        let i = ivl.members();
        let complement: BTreeSet<u32> = (0..p).filter(|x| !i.contains(x)).collect();
        ok &= residue_sumset(p, &i, &i) == complement;
        ok &= residue_difference(p, &i, &i) == complement;
    }
    let mut checked = 0u64;
    let mut violations = 0u64;
    for p in [11u32, 17] {
        let (c, v) = gap_bound_grid(p, 202).unwrap();
        checked += c;
        violations += v;
    }
    criterion(
        6,
        &format!(
            "interval identities for 4 primes; gap bound on {} (d, J) instances, {} violations",
            checked, violations
        ),
        ok && checked > 0 && violations == 0,
    );
}

#[test]
fn criterion_07_offset_relations() {
    let mut ok = true;
    let mut with_good_pairs = 0u64;
    let mut profiles = 0u64;
    for c in constructions::registry() {
        let spec = c.set.spec();
        if spec.p() % 3 != 2 || spec.p() < 5 || !c.expected.sum_free {
            continue;
        }
        let mut coeffs = vec![0u32; spec.n() as usize];
        coeffs[0] = 1;
        let profile = row_profile(&c.set, &coeffs, &Vector::unit(spec, 0)).unwrap();
        let check = offset_relation_check(&profile);
        ok &= check.passed;
        profiles += 1;
        if profile.good_rows().count() >= 2 {
            with_good_pairs += 1;
        }
    }
    let spec = GroupSpec::new(11, 2).unwrap();
    let mut cfg = SearchConfig::new(spec, SearchMode::SampleGreedy);
    cfg.seed = 303;
    for a in sample_greedy(&cfg, 100).unwrap() {
        let profile = row_profile(&a, &[1, 0], &Vector::unit(spec, 0)).unwrap();
        ok &= offset_relation_check(&profile).passed;
        profiles += 1;
    }
    criterion(
        7,
        &format!(
            "offset relations on {} profiles ({} fixtures with >= 2 good rows), 100 greedy samples",
            profiles, with_good_pairs
        ),
        ok && with_good_pairs >= 2 && profiles >= 100,
    );
}

#[test]
fn criterion_08_theorem_1_4_probe() {
    let budget = 10_000_000;
    let report = probe_theorem_1_4(budget, None).unwrap();
    let over_31 = report.witnesses.iter().filter(|w| w.card() >= 31).count();
    let has_28 = report.witnesses.iter().any(|w| w.card() == 28);
    let honest = if report.exhaustive {
        report.nodes_expanded < budget
    } else {
        report.nodes_expanded == budget
    };
    criterion(
        8,
        &format!(
            "probe: best size {}, {} witnesses >= 31, size-28 witness {}, exhaustive {} after {} nodes",
            report.best_size, over_31, has_28, report.exhaustive, report.nodes_expanded
        ),
        report.best_size < 31 && over_31 == 0 && has_28 && honest,
    );
}

#[test]
fn criterion_09_oracle_equivalence() {
    fn sumset_oracle(a: &GroupSet, b: &GroupSet) -> GroupSet {
        let mut out = GroupSet::empty(a.spec());
        for x in a.indices() {
            for y in b.indices() {
                out.insert(a.spec().add_index(x, y));
            }
        }
        out
    }
    fn difference_oracle(a: &GroupSet, b: &GroupSet) -> GroupSet {
        let mut out = GroupSet::empty(a.spec());
        for x in a.indices() {
            for y in b.indices() {
                out.insert(a.spec().sub_index(x, y));
            }
        }
        out
    }
    fn sum_free_oracle(a: &GroupSet) -> bool {
        let elems: Vec<u64> = a.indices().collect();
        for &x in &elems {
            for &y in &elems {
                if a.contains(a.spec().add_index(x, y)) {
                    return false;
                }
            }
        }
        true
    }
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut ok = true;
    let mut sets = 0u64;
    for (p, n) in [(5u32, 2u32), (2, 4), (7, 2), (11, 2), (5, 4), (7, 4)] {
        let spec = GroupSpec::new(p, n).unwrap();
        // keep expected cardinality moderate in the larger groups
        let cap = (80.0 / spec.order() as f64).min(0.6);
        for _ in 0..1000 {
            let da = rng.gen_range(0.01..cap.max(0.02));
            let db = rng.gen_range(0.01..cap.max(0.02));
            let a = random_set(spec, &mut rng, da);
            let b = random_set(spec, &mut rng, db);
            ok &= sumset(&a, &b).unwrap() == sumset_oracle(&a, &b);
            ok &= difference_set(&a, &b).unwrap() == difference_oracle(&a, &b);
            ok &= is_sum_free(&a) == sum_free_oracle(&a);
            sets += 1;
        }
    }
    criterion(
        9,
        &format!("bit-exact oracle agreement on {} random sets across 6 groups", sets),
        ok && sets == 6000,
    );
}

#[test]
fn criterion_10_verify_paper_determinism() {
    let exe = env!("CARGO_BIN_EXE_sumfree");
    let run = |threads: Option<&str>| {
        let mut cmd = Command::new(exe);
        cmd.args(["verify-paper", "--probe-budget", "300000"]);
        if let Some(t) = threads {
            cmd.args(["--threads", t]);
        }
        let out = cmd.output().expect("binary runs");
        (out.status.code(), out.stdout)
    };
    let (c1, s1) = run(None);
    let (c2, s2) = run(None);
    let (c3, s3) = run(Some("4"));
    let all_pass = c1 == Some(0) && c2 == Some(0) && c3 == Some(0);
    criterion(
        10,
        &format!(
            "verify-paper scorecards byte-identical across two runs and --threads 4 ({} bytes)",
            s1.len()
        ),
        all_pass && s1 == s2 && s1 == s3 && !s1.is_empty(),
    );
}
