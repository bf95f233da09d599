//! One test per acceptance criterion. Each prints a single
//! `ACCEPTANCE <n> PASS|FAIL <detail>` line to stderr, bypassing capture.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num::BigInt;

use liplab::ehrhart;
use liplab::fixtures;
use liplab::geometry;
use liplab::perm::{eulerian_number, eulerian_polynomial, Permutation};
use liplab::poset::Poset;
use liplab::triangulation::{self, descent_vector, stat, Alcove, DcOptions};
use liplab::verify::{self, Analysis, Corpus, Status, Suite};
use liplab::GenPoly;

const CLI_EXE: &str = env!("CARGO_BIN_EXE_liplab");

const FAST_LIMIT: Duration = Duration::from_secs(1);
const DUAL_PATH_LIMIT: Duration = Duration::from_secs(600);
const MAIN_SEED: u64 = 2024;
const MAIN_RANDOM_N7: usize = 300;

fn report(id: u32, pass: bool, detail: &str) {
    let line = format!("ACCEPTANCE {id:>2} {} {detail}\n", if pass { "PASS" } else { "FAIL" });
    let _ = std::io::stderr().write_all(line.as_bytes());
}

/// All connected posets on at most 6 elements plus 300 random connected
/// posets on 7 elements.
fn main_corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut c = Corpus::default();
        for n in 1..=6 {
            c.extend(verify::corpus_exhaustive(n, true).unwrap());
        }
        c.extend(verify::corpus_random(7, MAIN_RANDOM_N7, MAIN_SEED, true));
        c
    })
}

fn run_on(corpus: &Corpus, suite: Suite) -> Vec<verify::Report> {
    verify::run_suite(corpus, &[suite], 8)
}

fn failures(reports: &[verify::Report], bad: Status) -> Vec<String> {
    reports
        .iter()
        .filter(|r| r.checks.iter().any(|c| c.status == bad))
        .map(|r| r.to_json(false).to_string())
        .collect()
}

#[test]
fn criterion_01_wedge3_vertices() {
    let start = Instant::now();
    let v = geometry::vertices(&fixtures::wedge3());
    let elapsed = start.elapsed();
    let expected: Vec<Vec<i64>> =
        vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 1], vec![1, 1, 2]];
    let pass = v.points() == expected.as_slice() && elapsed < FAST_LIMIT;
    report(1, pass, &format!("{} vertices in {elapsed:?} (limit {FAST_LIMIT:?})", v.len()));
    assert!(pass);
}

#[test]
fn criterion_02_worked_alcove_example() {
    let start = Instant::now();
    let p = fixtures::ranked9();
    let tau: Permutation = "423716598".parse().unwrap();
    let q = descent_vector(&p, &tau);
    let elapsed = start.elapsed();
    let stated_q = [0, 1, 1, 1, 2, 1, 1, 2, 2];
    let (computed_q, computed_stat) = match &q {
        Some(q) => (q.values().to_vec(), stat(&Alcove::new(tau.clone(), q.clone()))),
        None => (Vec::new(), usize::MAX),
    };
    let pass = q.is_some() && computed_q == stated_q && computed_stat == 3 && elapsed < FAST_LIMIT;
    report(
        2,
        pass,
        &format!(
            "dc={} q={computed_q:?} stat={computed_stat} (stated q={stated_q:?} stat=3) in {elapsed:?}",
            q.is_some()
        ),
    );
    assert!(pass, "computed q={computed_q:?} stat={computed_stat}");
}

#[test]
fn criterion_03_dual_path_hstar() {
    let start = Instant::now();
    let mut corpus = Corpus::default();
    for n in 1..=5 {
        corpus.extend(verify::corpus_exhaustive(n, true).unwrap());
    }
    let exhaustive = corpus.len();
    corpus.extend(verify::corpus_random(6, 120, 3, true));
    corpus.extend(verify::corpus_random(7, 120, 4, true));
    let random = corpus.len() - exhaustive;
    let reports = run_on(&corpus, Suite::Hstar);
    let elapsed = start.elapsed();
    let bad = failures(&reports, Status::Bug);
    let all_pass = reports.iter().all(|r| r.worst() == Status::Pass);
    let pass = all_pass && bad.is_empty() && random >= 200 && elapsed <= DUAL_PATH_LIMIT;
    report(
        3,
        pass,
        &format!("{exhaustive} exhaustive + {random} random posets, {} mismatches, {elapsed:?}", bad.len()),
    );
    assert!(pass, "{bad:?}");
}

// every naturally labeled rooted tree on n elements: parent(b) < b, root 1
fn rooted_trees(n: usize) -> Vec<Poset> {
    let mut out = Vec::new();
    let mut parent = vec![1usize; n + 1];
    loop {
        let covers: Vec<(usize, usize)> = (2..=n).map(|b| (parent[b], b)).collect();
        out.push(Poset::new(n, &covers).unwrap());
        let mut b = n;
        while b >= 2 && parent[b] == b - 1 {
            parent[b] = 1;
            b -= 1;
        }
        if b < 2 {
            break;
        }
        parent[b] += 1;
    }
    out
}

#[test]
fn criterion_04_rooted_tree_identities() {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=7 {
        let eulerian = eulerian_polynomial(n);
        let cube = ehrhart::ehrhart_poly_with(&geometry::hrep_lip(&fixtures::antichain(n)), 8).unwrap().hstar;
        if cube != eulerian {
            bad.push(format!("cube n={n}: {cube}"));
        }
        for tree in rooted_trees(n) {
            checked += 1;
            let a = Analysis::with_jobs(&tree, 8);
            if n <= 6 {
                // full check, including the Ehrhart oracle on Lip(tree) itself
                let c = verify::check_rooted_tree_identities(&a);
                if c.status != Status::Pass {
                    bad.push(c.to_json().to_string());
                }
                continue;
            }
            let stat = a.genfun_stat();
            let ides = triangulation::genfun_ides(&tree, DcOptions::jobs(8));
            if *stat != eulerian || ides != eulerian {
                bad.push(format!("{:?}: stat={stat} ides={ides}", tree.covers()));
            }
        }
    }
    let pass = bad.is_empty() && checked == (1..=7).map(|n: u64| (1..n).product::<u64>()).sum::<u64>() as usize;
    report(4, pass, &format!("{checked} rooted trees with n ≤ 7, {} failures", bad.len()));
    assert!(pass, "{bad:?}");
}

#[test]
fn criterion_05_ranked_symmetry_unimodality() {
    let reports = run_on(main_corpus(), Suite::Symmetry);
    let ranked = reports.iter().filter(|r| r.checks[0].status != Status::Skipped).count();
    let bad = failures(&reports, Status::Bug);
    let pass = bad.is_empty() && ranked > 0;
    report(5, pass, &format!("{ranked} ranked posets of {}, {} failures", reports.len(), bad.len()));
    assert!(pass, "{bad:?}");
}

#[test]
fn criterion_06_geometry_suite() {
    let corpus = main_corpus();
    let reports = run_on(corpus, Suite::Geometry);
    let bad = failures(&reports, Status::Bug);
    let non_ranked: Vec<&Poset> = corpus.posets().filter(|p| !p.is_ranked_hat()).collect();
    let gorenstein_fails = non_ranked.iter().filter(|p| !geometry::gorenstein2_check(p).unwrap()).count();
    let pass = bad.is_empty() && gorenstein_fails >= 1;
    report(
        6,
        pass,
        &format!(
            "{} posets, {} failures; {gorenstein_fails} of {} non-ranked posets fail 2-Gorenstein",
            reports.len(),
            bad.len(),
            non_ranked.len()
        ),
    );
    assert!(pass, "{bad:?}");
}

#[test]
fn criterion_07_hypersimplex_volumes() {
    let mut corpus = Corpus::default();
    for n in 1..=6 {
        corpus.extend(verify::corpus_exhaustive(n, true).unwrap());
    }
    corpus.extend(verify::corpus_random(7, 100, MAIN_SEED, true));
    let reports = run_on(&corpus, Suite::Hypersimplex);
    let tested = reports.iter().filter(|r| r.checks[0].status == Status::Pass).count();
    let bad = failures(&reports, Status::Bug);
    // chains: n!·vol Δ(n-chain, k) = A(n, k−1), permutations of [n] with k−1 descents
    let mut chain_bad = Vec::new();
    for n in 1..=7 {
        for k in 1..=n {
            let q = geometry::hrep_hypersimplex(&fixtures::chain(n), k, false).unwrap();
            let vol = ehrhart::normalized_volume(&ehrhart::ehrhart_poly_with(&q, 8).unwrap()).unwrap();
            if vol != eulerian_number(n, k - 1) {
                chain_bad.push(format!("n={n} k={k} vol={vol}"));
            }
        }
    }
    let pass = bad.is_empty() && chain_bad.is_empty() && tested > 0;
    report(
        7,
        pass,
        &format!(
            "{tested} posets with a unique maximum, {} failures; chains n ≤ 7 match A(n,k−1) with {} failures",
            bad.len(),
            chain_bad.len()
        ),
    );
    assert!(pass, "{bad:?} {chain_bad:?}");
}

fn one_minus_z_pow(n: usize) -> GenPoly {
    let factor = GenPoly::from_i64(&[1, -1]);
    (0..n).fold(GenPoly::from_i64(&[1]), |acc, _| &acc * &factor)
}

#[test]
fn criterion_08_half_open_grading() {
    // chains n ≤ 7: slab k+1 against Σ_{des(τ)=k} z^{bigiasc(τ)}, bottom slab closed
    let mut chain_bad = Vec::new();
    for n in 1..=7 {
        for k in 0..n {
            let slab = geometry::hypersimplex_slab(&fixtures::chain(n), k + 1).unwrap();
            let h = ehrhart::ehrhart_poly_with(&slab, 8).unwrap().hstar;
            let expected = verify::chain_slab_polynomial(n, k);
            if h != expected {
                chain_bad.push(format!("n={n} k={k}: {h} vs {expected}"));
            }
        }
    }

    // general posets: slab sums and DC grading, plus the evidence for the convention
    let mut corpus = Corpus::default();
    for n in 1..=6 {
        corpus.extend(verify::corpus_exhaustive(n, true).unwrap());
    }
    corpus.extend(verify::corpus_random(7, 60, MAIN_SEED, true));
    let reports = run_on(&corpus, Suite::HalfOpen);
    let bad = failures(&reports, Status::Bug);

    let mut tally: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for p in corpus.posets().filter(|p| p.unique_max().is_some() && p.n() <= 6) {
        let graded = triangulation::genfun_by_top_descents(p, DcOptions::default()).unwrap();
        let lip = ehrhart::ehrhart_poly(&geometry::hrep_lip(p)).unwrap().hstar;
        let at = |k: usize| graded.get(&(k as u32)).cloned().unwrap_or_default();
        let mut key_km1 = true;
        let mut key_k = true;
        let mut strict_sum = GenPoly::zero();
        for k in 1..=p.height() {
            let closed_bottom = ehrhart::ehrhart_poly(&geometry::hypersimplex_slab(p, k).unwrap()).unwrap().hstar;
            let strict = ehrhart::ehrhart_poly(&geometry::hrep_hypersimplex(p, k, true).unwrap()).unwrap().hstar;
            key_km1 &= closed_bottom == at(k - 1);
            key_k &= closed_bottom == at(k);
            strict_sum = &strict_sum + &strict;
        }
        let strict_gap = &lip + &(&strict_sum * &GenPoly::from_i64(&[-1]));
        for (name, ok) in [
            ("des_P = k-1, closed bottom", key_km1),
            ("des_P = k, closed bottom", key_k),
            ("strict bottom misses (1-z)^n", strict_gap == one_minus_z_pow(p.n())),
        ] {
            let e = tally.entry(name).or_default();
            e.0 += usize::from(ok);
            e.1 += 1;
        }
    }
    let evidence: Vec<String> = tally.iter().map(|(k, (ok, all))| format!("[{k}: {ok}/{all}]")).collect();
    let resolved = tally["des_P = k-1, closed bottom"].0 == tally["des_P = k-1, closed bottom"].1
        && tally["strict bottom misses (1-z)^n"].0 == tally["strict bottom misses (1-z)^n"].1;
    let pass = chain_bad.is_empty() && bad.is_empty() && resolved;
    report(
        8,
        pass,
        &format!(
            "chains n ≤ 7 {} failures; {} corpus posets {} failures; evidence {}",
            chain_bad.len(),
            reports.len(),
            bad.len(),
            evidence.join(" ")
        ),
    );
    assert!(pass, "{chain_bad:?} {bad:?} {evidence:?}");
}

#[test]
fn criterion_09_ides_conjecture() {
    let corpus = main_corpus();
    let reports = run_on(corpus, Suite::Conjecture);
    let counterexamples = failures(&reports, Status::Counterexample);
    for c in &counterexamples {
        let _ = writeln!(std::io::stderr(), "COUNTEREXAMPLE {c}");
    }
    let p = fixtures::wedge3();
    let injected = verify::check_conjecture_with(&Analysis::new(&p), |t, _| t.ides() + usize::from(t.get(1) == 1));
    let machinery = injected.status == Status::Counterexample
        && injected.witness.as_ref().is_some_and(|w| w["poset"] == p.to_json() && w["stat"].is_array());
    let pass = counterexamples.is_empty() && machinery && reports.iter().all(|r| r.worst() == Status::Pass);
    report(
        9,
        pass,
        &format!(
            "{} posets agree, {} counterexamples; injected fault reported as {}",
            reports.len() - counterexamples.len(),
            counterexamples.len(),
            injected.status.as_str()
        ),
    );
    assert!(pass);
}

fn cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(CLI_EXE).args(args).env_remove("LIPLAB_JOBS").output().unwrap();
    assert!(out.status.success(), "{args:?}");
    out.stdout
}

#[test]
fn criterion_10_determinism_across_jobs() {
    let mut differing = Vec::new();
    // library
    for p in [fixtures::ranked9(), fixtures::short_hanging_tree(7), fixtures::non_ranked()] {
        let a = |jobs| triangulation::enumerate_dc(&p, DcOptions::jobs(jobs));
        let lhs: Vec<String> = a(1).iter().map(|x| x.to_json().to_string()).collect();
        let rhs: Vec<String> = a(8).iter().map(|x| x.to_json().to_string()).collect();
        if lhs != rhs {
            differing.push(format!("enumerate_dc {:?}", p.covers()));
        }
        if triangulation::genfun_stat(&p, DcOptions::jobs(1)) != triangulation::genfun_stat(&p, DcOptions::jobs(8)) {
            differing.push(format!("genfun_stat {:?}", p.covers()));
        }
    }
    let lip = geometry::hrep_lip(&fixtures::short_hanging_tree(7));
    for m in 0..5 {
        if ehrhart::count_with(&lip, m, 1).unwrap() != ehrhart::count_with(&lip, m, 8).unwrap() {
            differing.push(format!("count m={m}"));
        }
    }
    let small = verify::corpus_exhaustive(4, true).unwrap();
    let json = |jobs| {
        verify::run_suite(&small, &Suite::ALL, jobs).iter().map(|r| r.to_json(false).to_string()).collect::<Vec<_>>()
    };
    if json(1) != json(8) {
        differing.push("run_suite".into());
    }
    // command line
    let commands: [&[&str]; 8] = [
        &["dc", "--stats", "--gen", "ranked9"],
        &["dc", "--count", "--gen", "short-hanging:8"],
        &["hstar", "--gen", "short-hanging:6"],
        &["ehrhart", "--gen", "wedge3"],
        &["volume", "--gen", "chain:6"],
        &["hypersimplex", "--gen", "chain:6", "--k", "3", "--half-open"],
        &["check", "--exhaustive", "4"],
        &["conjecture", "--random", "6", "20", "9"],
    ];
    for args in commands {
        let with = |jobs: &str| {
            let mut full = vec!["--jobs", jobs];
            full.extend_from_slice(args);
            cli(&full)
        };
        if with("1") != with("8") {
            differing.push(format!("cli {args:?}"));
        }
    }
    let pass = differing.is_empty();
    report(10, pass, &format!("library and {} CLI commands, {} differ between --jobs 1 and 8", commands.len(), differing.len()));
    assert!(pass, "{differing:?}");
}

#[test]
fn volume_matches_dc_count_on_corpus() {
    // |DC(P)| = n!·vol Lip(P) via the oracle, checked on the n ≤ 5 part of the corpus
    for p in main_corpus().posets().filter(|p| p.n() <= 5) {
        let vol = ehrhart::normalized_volume(&ehrhart::ehrhart_poly(&geometry::hrep_lip(p)).unwrap()).unwrap();
        assert_eq!(vol, BigInt::from(triangulation::count_dc(p, DcOptions::default())), "{:?}", p.covers());
    }
}
