//! Theorem and conjecture checks over poset corpora.
//!
//! Theorem-backed checks report [`Status::Bug`] on failure. The `ides`
//! conjecture check reports [`Status::Counterexample`] instead, so an open
//! problem is never confused with a regression.

use std::cell::OnceCell;
use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::ehrhart::{self, EhrhartData};
use crate::geometry::{self, VertexSet};
use crate::parallel::map_shards;
use crate::perm::{eulerian_polynomial, Permutation};
use crate::poly::GenPoly;
use crate::poset::Poset;
use crate::triangulation::{self, DcOptions, DescentVector};

pub const SCHEMA: &str = "liplab/1";

/// Largest `n` accepted by [`corpus_exhaustive`] (4824 posets at `n = 6`).
pub const EXHAUSTIVE_MAX: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("exhaustive corpus limited to n ≤ {EXHAUSTIVE_MAX}, got {0}")]
    TooLarge(usize),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Exhaustive(usize),
    Random { n: usize, seed: u64 },
    Named(String),
}

impl Provenance {
    pub fn tag(&self) -> String {
        match self {
            Provenance::Exhaustive(n) => format!("exhaustive-{n}"),
            Provenance::Random { n, seed } => format!("random-{n}-{seed}"),
            Provenance::Named(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub poset: Poset,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn extend(&mut self, other: Corpus) {
        self.entries.extend(other.entries);
    }

    pub fn named(id: &str, poset: Poset) -> Corpus {
        Corpus {
            entries: vec![CorpusEntry { id: id.to_string(), poset, provenance: Provenance::Named(id.to_string()) }],
        }
    }

    pub fn posets(&self) -> impl Iterator<Item = &Poset> {
        self.entries.iter().map(|e| &e.poset)
    }
}

/// All naturally labeled posets on `n` elements, one per order relation.
///
/// Element `b` picks its strict down-set among the order ideals of the
/// poset already built on `1..b`.
pub fn corpus_exhaustive(n: usize, connected_only: bool) -> Result<Corpus, VerifyError> {
    if n > EXHAUSTIVE_MAX {
        return Err(VerifyError::TooLarge(n));
    }
    let mut out = Vec::new();
    let mut below = vec![0u64; n + 1];
    extend_exhaustive(n, 1, &mut below, &mut out);
    let mut entries = Vec::new();
    for poset in out {
        if connected_only && !poset.is_connected() {
            continue;
        }
        let id = format!("exh{n}-{}", entries.len());
        entries.push(CorpusEntry { id, poset, provenance: Provenance::Exhaustive(n) });
    }
    Ok(Corpus { entries })
}

fn extend_exhaustive(n: usize, b: usize, below: &mut [u64], out: &mut Vec<Poset>) {
    if b > n {
        let mut pairs = Vec::new();
        for (y, &mask) in below.iter().enumerate().skip(1) {
            for x in 1..y {
                if mask >> (x - 1) & 1 == 1 {
                    pairs.push((x, y));
                }
            }
        }
        out.push(Poset::new(n, &pairs).expect("relation is a natural order"));
        return;
    }
    for mask in 0..1u64 << (b - 1) {
        let ideal = (1..b).filter(|&x| mask >> (x - 1) & 1 == 1).all(|x| below[x] & !mask == 0);
        if ideal {
            below[b] = mask;
            extend_exhaustive(n, b + 1, below, out);
        }
    }
    below[b] = 0;
}

/// Each pair `i < j` is a relation with probability 1/2; the result is
/// reduced to its covers and deduplicated. Deterministic in `seed`.
pub fn corpus_random(n: usize, count: usize, seed: u64, connected_only: bool) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    let mut attempts = 0;
    while entries.len() < count && attempts < 1000 * count.max(1) {
        attempts += 1;
        let mut pairs = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if rng.gen_bool(0.5) {
                    pairs.push((i, j));
                }
            }
        }
        let poset = Poset::new(n, &pairs).expect("i < j relations are natural");
        if connected_only && !poset.is_connected() {
            continue;
        }
        if !seen.insert(poset.covers().to_vec()) {
            continue;
        }
        let id = format!("rnd{n}-{seed}-{}", entries.len());
        entries.push(CorpusEntry { id, poset, provenance: Provenance::Random { n, seed } });
    }
    Corpus { entries }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Bug,
    Counterexample,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Bug => "BUG",
            Status::Counterexample => "COUNTEREXAMPLE",
            Status::Skipped => "SKIPPED",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckEntry {
    pub name: &'static str,
    pub status: Status,
    pub witness: Option<Value>,
}

impl CheckEntry {
    fn pass(name: &'static str) -> Self {
        CheckEntry { name, status: Status::Pass, witness: None }
    }

    fn skipped(name: &'static str, why: &str) -> Self {
        CheckEntry { name, status: Status::Skipped, witness: Some(json!({ "reason": why })) }
    }

    fn bug(name: &'static str, witness: Value) -> Self {
        CheckEntry { name, status: Status::Bug, witness: Some(witness) }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "name": self.name, "status": self.status.as_str() });
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

/// Lazily computed data shared by the checks on one poset.
pub struct Analysis<'a> {
    pub poset: &'a Poset,
    jobs: usize,
    stat: OnceCell<GenPoly>,
    ehrhart: OnceCell<Result<EhrhartData, String>>,
    vertices: OnceCell<VertexSet>,
}

impl<'a> Analysis<'a> {
    pub fn new(poset: &'a Poset) -> Self {
        Self::with_jobs(poset, 1)
    }

    pub fn with_jobs(poset: &'a Poset, jobs: usize) -> Self {
        Analysis { poset, jobs, stat: OnceCell::new(), ehrhart: OnceCell::new(), vertices: OnceCell::new() }
    }

    fn opts(&self) -> DcOptions {
        DcOptions::jobs(self.jobs)
    }

    pub fn genfun_stat(&self) -> &GenPoly {
        self.stat.get_or_init(|| triangulation::genfun_stat(self.poset, self.opts()))
    }

    pub fn ehrhart_lip(&self) -> Result<&EhrhartData, &str> {
        self.ehrhart
            .get_or_init(|| {
                ehrhart::ehrhart_poly_with(&geometry::hrep_lip(self.poset), self.jobs).map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(String::as_str)
    }

    pub fn vertices(&self) -> &VertexSet {
        self.vertices.get_or_init(|| geometry::vertices(self.poset))
    }
}

fn poly_pair(a: &GenPoly, b: &GenPoly, la: &str, lb: &str) -> Value {
    json!({
        "index": a.first_difference(b),
        la: a.to_json()["poly"],
        lb: b.to_json()["poly"],
    })
}

pub fn check_hstar_equality(a: &Analysis) -> CheckEntry {
    const NAME: &str = "hstar_equality";
    let data = match a.ehrhart_lip() {
        Ok(d) => d,
        Err(e) => return CheckEntry::bug(NAME, json!({ "ehrhart_error": e })),
    };
    let stat = a.genfun_stat();
    if *stat == data.hstar {
        CheckEntry::pass(NAME)
    } else {
        CheckEntry::bug(NAME, poly_pair(stat, &data.hstar, "stat", "ehrhart"))
    }
}

/// `g_i = g_{n−1−i}`, and `g_i ≤ g_{i+1}` for every `i` below the middle index.
pub fn check_symmetry_unimodality(a: &Analysis) -> CheckEntry {
    const NAME: &str = "symmetry_unimodality";
    if !a.poset.is_ranked_hat() {
        return CheckEntry::skipped(NAME, "not ranked");
    }
    let n = a.poset.n();
    let g = a.genfun_stat();
    if let Some(i) = (0..n).find(|&i| g.coeff(i) != g.coeff(n - 1 - i)).filter(|_| n > 0) {
        return CheckEntry::bug(NAME, json!({ "kind": "symmetry", "index": i, "g": g.to_json()["poly"] }));
    }
    if g.degree().is_some_and(|d| d >= n) {
        return CheckEntry::bug(NAME, json!({ "kind": "degree", "g": g.to_json()["poly"] }));
    }
    if let Some(i) = (0..n / 2).find(|&i| g.coeff(i) > g.coeff(i + 1)) {
        return CheckEntry::bug(NAME, json!({ "kind": "unimodality", "index": i, "g": g.to_json()["poly"] }));
    }
    CheckEntry::pass(NAME)
}

pub fn check_conjecture_ides(a: &Analysis) -> CheckEntry {
    check_conjecture_with(a, |t, _| t.ides())
}

/// Compares `G_stat` against `Σ z^{statistic(τ)}` over `DC(P)`.
pub fn check_conjecture_with<F>(a: &Analysis, statistic: F) -> CheckEntry
where
    F: Fn(&Permutation, &DescentVector) -> usize + Sync,
{
    const NAME: &str = "conjecture_ides";
    let stat = a.genfun_stat();
    let other = triangulation::dc_polynomial(a.poset, a.opts(), statistic);
    if *stat == other {
        return CheckEntry::pass(NAME);
    }
    let mut w = poly_pair(stat, &other, "stat", "ides");
    w["poset"] = a.poset.to_json();
    CheckEntry { name: NAME, status: Status::Counterexample, witness: Some(w) }
}

pub fn check_hypersimplex_volumes(a: &Analysis) -> CheckEntry {
    const NAME: &str = "hypersimplex_volumes";
    let p = a.poset;
    if p.unique_max().is_none() {
        return CheckEntry::skipped(NAME, "no unique maximum");
    }
    let counts = triangulation::top_descent_counts(p, a.opts()).expect("unique max checked");
    let height = p.height();
    for k in 1..=height {
        let q = geometry::hrep_hypersimplex(p, k, false).expect("k in range");
        let vol = match ehrhart::ehrhart_poly_with(&q, a.jobs).and_then(|d| ehrhart::normalized_volume(&d)) {
            Ok(v) => v,
            Err(e) => return CheckEntry::bug(NAME, json!({ "k": k, "ehrhart_error": e.to_string() })),
        };
        let dc = counts.get(&(k as u32 - 1)).copied().unwrap_or(0);
        if vol != dc.into() {
            return CheckEntry::bug(NAME, json!({ "kind": "volume", "k": k, "volume": vol.to_string(), "dc": dc }));
        }
    }
    if let Some(&k) = counts.keys().find(|&&k| k as usize >= height) {
        return CheckEntry::bug(NAME, json!({ "kind": "descent_range", "des": k }));
    }
    if p.is_ranked_hat() {
        let at = |k: usize| counts.get(&(k as u32)).copied().unwrap_or(0);
        if let Some(k) = (0..height).find(|&k| at(k) != at(height - 1 - k)) {
            return CheckEntry::bug(NAME, json!({ "kind": "symmetry", "des": k }));
        }
    }
    let order = geometry::vertices_hypersimplex(p, 1).expect("unique max checked");
    let filters = VertexSet::new(p.filters().iter().map(|f| f.indicator(p.n())));
    if order != filters {
        return CheckEntry::bug(NAME, json!({ "kind": "order_polytope", "vertices": order.to_json() }));
    }
    CheckEntry::pass(NAME)
}

/// `Σ_{des(τ) = k} z^{bigiasc(τ)}` over `S_n`.
pub fn chain_slab_polynomial(n: usize, k: usize) -> GenPoly {
    GenPoly::from_degrees(Permutation::all(n).filter(|t| t.des() == k).map(|t| t.big_inv_ascents()))
}

pub fn check_halfopen_grading(a: &Analysis) -> CheckEntry {
    const NAME: &str = "halfopen_grading";
    let p = a.poset;
    let Ok(graded) = triangulation::genfun_by_top_descents(p, a.opts()) else {
        return CheckEntry::skipped(NAME, "no unique maximum");
    };
    let is_chain = p.covers().len() + 1 == p.n() && p.height() == p.n();
    let mut total = GenPoly::zero();
    for k in 1..=p.height() {
        let slab = geometry::hypersimplex_slab(p, k).expect("k in range");
        let data = match ehrhart::ehrhart_poly_with(&slab, a.jobs) {
            Ok(d) => d,
            Err(e) => return CheckEntry::bug(NAME, json!({ "k": k, "ehrhart_error": e.to_string() })),
        };
        let expected = graded.get(&(k as u32 - 1)).cloned().unwrap_or_default();
        if data.hstar != expected {
            let mut w = poly_pair(&data.hstar, &expected, "slab", "stat");
            w["k"] = json!(k);
            return CheckEntry::bug(NAME, w);
        }
        if is_chain {
            let big = chain_slab_polynomial(p.n(), k - 1);
            if data.hstar != big {
                let mut w = poly_pair(&data.hstar, &big, "slab", "bigiasc");
                w["k"] = json!(k);
                return CheckEntry::bug(NAME, w);
            }
        }
        total = &total + &data.hstar;
    }
    match a.ehrhart_lip() {
        Ok(d) if d.hstar == total => CheckEntry::pass(NAME),
        Ok(d) => CheckEntry::bug(NAME, poly_pair(&total, &d.hstar, "slab_sum", "lip")),
        Err(e) => CheckEntry::bug(NAME, json!({ "ehrhart_error": e })),
    }
}

pub fn check_geometry(a: &Analysis) -> CheckEntry {
    const NAME: &str = "geometry";
    let p = a.poset;
    let verts = a.vertices();
    let lip = geometry::hrep_lip(p);
    match ehrhart::lattice_points(&lip, 1) {
        Ok(points) if points.as_slice() == verts.points() => {}
        Ok(points) => return CheckEntry::bug(NAME, json!({ "kind": "lattice_points", "count": points.len() })),
        Err(e) => return CheckEntry::bug(NAME, json!({ "ehrhart_error": e.to_string() })),
    }
    if let Some(w) = geometry::two_level_witness(&lip, verts) {
        return CheckEntry::bug(NAME, json!({ "kind": "two_level", "row": w.row.to_json(), "values": w.values }));
    }
    let ranked = p.is_ranked_hat();
    let symmetric = if ranked {
        geometry::central_symmetry_check(p) == Ok(true)
    } else {
        geometry::symmetry_center(verts).is_some()
    };
    if symmetric != ranked {
        return CheckEntry::bug(NAME, json!({ "kind": "central_symmetry", "ranked": ranked }));
    }
    let gorenstein = match geometry::gorenstein2(p) {
        Ok(r) => r,
        Err(e) => return CheckEntry::bug(NAME, json!({ "ehrhart_error": e.to_string() })),
    };
    if gorenstein.is_gorenstein() != ranked {
        return CheckEntry::bug(
            NAME,
            json!({ "kind": "gorenstein", "ranked": ranked, "interior_points": gorenstein.interior_points }),
        );
    }
    if ranked {
        let rho: Vec<i64> = p.rank_function().expect("ranked")[1..].iter().map(|&r| i64::from(r)).collect();
        if gorenstein.interior_points != [rho] {
            return CheckEntry::bug(NAME, json!({ "kind": "gorenstein_center" }));
        }
        if geometry::spindle_check(p) != Ok(true) {
            return CheckEntry::bug(NAME, json!({ "kind": "spindle" }));
        }
    }
    CheckEntry::pass(NAME)
}

pub fn check_rooted_tree_identities(a: &Analysis) -> CheckEntry {
    const NAME: &str = "rooted_tree_identities";
    let p = a.poset;
    if !p.is_rooted_tree() {
        return CheckEntry::skipped(NAME, "not a rooted tree");
    }
    let n = p.n();
    let fact: u64 = (1..=n as u64).product();
    let dc = triangulation::count_dc(p, a.opts());
    if dc != fact {
        return CheckEntry::bug(NAME, json!({ "kind": "dc_count", "dc": dc }));
    }
    let images: Result<BTreeSet<Vec<i64>>, _> =
        a.vertices().points().iter().map(|v| geometry::transform_t(p, v)).collect();
    let cube: BTreeSet<Vec<i64>> = geometry::vertices(&Poset::new(n, &[]).expect("antichain")).points().iter().cloned().collect();
    if images.as_ref().ok() != Some(&cube) {
        return CheckEntry::bug(NAME, json!({ "kind": "transform" }));
    }
    let eulerian = eulerian_polynomial(n);
    let stat = a.genfun_stat();
    if *stat != eulerian {
        return CheckEntry::bug(NAME, poly_pair(stat, &eulerian, "stat", "eulerian"));
    }
    let ides = triangulation::genfun_ides(p, a.opts());
    if ides != eulerian {
        return CheckEntry::bug(NAME, poly_pair(&ides, &eulerian, "ides", "eulerian"));
    }
    match a.ehrhart_lip() {
        Ok(d) if d.hstar == eulerian => CheckEntry::pass(NAME),
        Ok(d) => CheckEntry::bug(NAME, poly_pair(&d.hstar, &eulerian, "ehrhart", "eulerian")),
        Err(e) => CheckEntry::bug(NAME, json!({ "ehrhart_error": e })),
    }
}

/// `Lip(P₁ ⊎ P₂) = Lip(P₁) × Lip(P₂)`, compared on vertex sets and on
/// lattice-point counts at dilations 0, 1, 2.
pub fn check_product_law(a: &Analysis) -> CheckEntry {
    const NAME: &str = "product_law";
    let p = a.poset;
    let comps = p.components();
    if comps.len() < 2 {
        return CheckEntry::skipped(NAME, "connected");
    }
    let mut product: Vec<Vec<i64>> = vec![vec![0; p.n()]];
    let mut counts_product: Vec<u128> = vec![1; 3];
    for (c, labels) in &comps {
        let cv = geometry::vertices(c);
        let mut next = Vec::with_capacity(product.len() * cv.len());
        for base in &product {
            for v in cv.points() {
                let mut x = base.clone();
                for (i, &label) in labels.iter().enumerate() {
                    x[label - 1] = v[i];
                }
                next.push(x);
            }
        }
        product = next;
        let lip = geometry::hrep_lip(c);
        for (m, acc) in counts_product.iter_mut().enumerate() {
            *acc *= ehrhart::count(&lip, m as u64).unwrap_or(0);
        }
    }
    if VertexSet::new(product) != *a.vertices() {
        return CheckEntry::bug(NAME, json!({ "kind": "vertices" }));
    }
    let lip = geometry::hrep_lip(p);
    for (m, &expected) in counts_product.iter().enumerate() {
        let got = ehrhart::count(&lip, m as u64).unwrap_or(0);
        if got != expected {
            return CheckEntry::bug(NAME, json!({ "kind": "counts", "dilation": m, "got": got.to_string() }));
        }
    }
    CheckEntry::pass(NAME)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Hstar,
    Symmetry,
    Conjecture,
    Hypersimplex,
    HalfOpen,
    Geometry,
    RootedTree,
    Product,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Hstar,
        Suite::Symmetry,
        Suite::Conjecture,
        Suite::Hypersimplex,
        Suite::HalfOpen,
        Suite::Geometry,
        Suite::RootedTree,
        Suite::Product,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hstar => "hstar",
            Suite::Symmetry => "symmetry",
            Suite::Conjecture => "conjecture",
            Suite::Hypersimplex => "hypersimplex",
            Suite::HalfOpen => "halfopen",
            Suite::Geometry => "geometry",
            Suite::RootedTree => "rooted-tree",
            Suite::Product => "product",
        }
    }

    pub fn parse(s: &str) -> Result<Suite, VerifyError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }

    /// Theorem checks other than the product law look at connected posets only.
    fn applies_to(self, p: &Poset) -> bool {
        match self {
            Suite::Product => true,
            _ => p.is_connected(),
        }
    }

    fn run(self, a: &Analysis) -> CheckEntry {
        match self {
            Suite::Hstar => check_hstar_equality(a),
            Suite::Symmetry => check_symmetry_unimodality(a),
            Suite::Conjecture => check_conjecture_ides(a),
            Suite::Hypersimplex => check_hypersimplex_volumes(a),
            Suite::HalfOpen => check_halfopen_grading(a),
            Suite::Geometry => check_geometry(a),
            Suite::RootedTree => check_rooted_tree_identities(a),
            Suite::Product => check_product_law(a),
        }
    }

    fn check_name(self) -> &'static str {
        match self {
            Suite::Hstar => "hstar_equality",
            Suite::Symmetry => "symmetry_unimodality",
            Suite::Conjecture => "conjecture_ides",
            Suite::Hypersimplex => "hypersimplex_volumes",
            Suite::HalfOpen => "halfopen_grading",
            Suite::Geometry => "geometry",
            Suite::RootedTree => "rooted_tree_identities",
            Suite::Product => "product_law",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub id: String,
    pub provenance: String,
    pub poset: Poset,
    pub checks: Vec<CheckEntry>,
    pub timings: Vec<Duration>,
}

impl Report {
    pub fn worst(&self) -> Status {
        self.checks.iter().map(|c| c.status).filter(|&s| s != Status::Skipped).max().unwrap_or(Status::Pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// One JSON line; timings are left out unless asked for so that reports
    /// are reproducible byte for byte.
    pub fn to_json(&self, with_timings: bool) -> Value {
        let mut v = json!({
            "schema": SCHEMA,
            "id": self.id,
            "provenance": self.provenance,
            "poset": self.poset.to_json(),
            "checks": self.checks.iter().map(CheckEntry::to_json).collect::<Vec<_>>(),
        });
        if with_timings {
            v["timings_us"] = json!(self.timings.iter().map(|d| d.as_micros() as u64).collect::<Vec<_>>());
        }
        v
    }
}

pub fn run_checks(entry: &CorpusEntry, suites: &[Suite]) -> Report {
    let a = Analysis::new(&entry.poset);
    let mut checks = Vec::new();
    let mut timings = Vec::new();
    for &s in suites {
        let start = Instant::now();
        let c = if s.applies_to(&entry.poset) { s.run(&a) } else { CheckEntry::skipped(s.check_name(), "disconnected") };
        timings.push(start.elapsed());
        checks.push(c);
    }
    Report { id: entry.id.clone(), provenance: entry.provenance.tag(), poset: entry.poset.clone(), checks, timings }
}

/// Corpus members run in parallel, checks on one member run in order.
pub fn run_suite(corpus: &Corpus, suites: &[Suite], jobs: usize) -> Vec<Report> {
    let entries: Vec<&CorpusEntry> = corpus.entries.iter().collect();
    map_shards(jobs, entries, |e| run_checks(e, suites))
}

/// Per check: counts of each status.
pub fn summarize(reports: &[Report]) -> BTreeMap<&'static str, BTreeMap<Status, usize>> {
    let mut out: BTreeMap<&'static str, BTreeMap<Status, usize>> = BTreeMap::new();
    for r in reports {
        for c in &r.checks {
            *out.entry(c.name).or_default().entry(c.status).or_default() += 1;
        }
    }
    out
}

pub fn summary_table(reports: &[Report]) -> String {
    let mut s = format!("{:<24}{:>8}{:>8}{:>16}{:>9}\n", "check", "PASS", "BUG", "COUNTEREXAMPLE", "SKIPPED");
    for (name, counts) in summarize(reports) {
        let at = |st| counts.get(&st).copied().unwrap_or(0);
        s += &format!(
            "{:<24}{:>8}{:>8}{:>16}{:>9}\n",
            name,
            at(Status::Pass),
            at(Status::Bug),
            at(Status::Counterexample),
            at(Status::Skipped)
        );
    }
    s
}
