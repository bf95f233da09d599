//! The `liplab` command line.
//!
//! Exit codes: 0 success, 2 malformed input or flags, 3 a failed internal
//! cross-check.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::ehrhart;
use crate::fixtures;
use crate::geometry::{self, HalfOpenPolytope, Row};
use crate::poly::GenPoly;
use crate::poset::{Poset, Relabeling};
use crate::triangulation::{self, stat, DcOptions};
use crate::verify::{self, Corpus, Status, Suite, SCHEMA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CROSS_CHECK: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "liplab", version, about = "Exact computations on Lipschitz polytopes of posets")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for enumeration and counting; output does not depend on it.
    #[arg(long, env = "LIPLAB_JOBS", default_value_t = 1, global = true)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Stat,
    Ehrhart,
    Both,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Source {
    /// Poset file in line or JSON format; `-` reads standard input.
    pub file: Option<String>,
    /// Line format with `;` for newlines, e.g. `3;1 3;2 3`.
    #[arg(long, conflicts_with_all = ["file", "gen"])]
    pub inline: Option<String>,
    /// `chain:N`, `antichain:N`, `short-rooted:N`, `short-hanging:N` or a fixture name.
    #[arg(long, conflicts_with = "file")]
    pub gen: Option<String>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct CorpusArgs {
    /// All naturally labeled posets on N elements.
    #[arg(long, value_name = "N")]
    pub exhaustive: Option<usize>,
    /// COUNT random posets on N elements from SEED.
    #[arg(long, num_args = 3, value_names = ["N", "COUNT", "SEED"])]
    pub random: Option<Vec<u64>>,
    /// Keep disconnected posets in generated corpora.
    #[arg(long)]
    pub include_disconnected: bool,
    /// Emit per-check timings (breaks byte-for-byte reproducibility).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Vertices of Lip(P).
    Vertices(Source),
    /// Inequality description of Lip(P).
    Hrep(Source),
    /// h*-polynomial by the alcove statistic, the lattice-point oracle, or both.
    Hstar {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Lattice-point counts, Ehrhart polynomial and h* of Lip(P).
    Ehrhart(Source),
    /// Normalized volume, from the oracle and from |DC(P)|.
    Volume(Source),
    /// Descent-compatible permutations.
    Dc {
        #[command(flatten)]
        source: Source,
        #[arg(long, conflicts_with = "stats")]
        count: bool,
        /// Include stat and ides for each permutation.
        #[arg(long)]
        stats: bool,
    },
    /// The slab of Lip(P) with k−1 ≤ f(⊤) ≤ k.
    Hypersimplex {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: usize,
        /// Make the lower bound strict.
        #[arg(long)]
        half_open: bool,
    },
    /// Run the theorem suite on a poset or a generated corpus.
    Check {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Restrict to the named suites.
        #[arg(long = "suite", value_name = "NAME")]
        suites: Vec<String>,
    },
    /// Compare stat with ides over DC(P).
    Conjecture {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Print a named fixture poset.
    Example {
        #[arg(long)]
        name: String,
    },
}

struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn input(msg: impl ToString) -> Self {
        Failure { code: EXIT_INPUT, msg: msg.to_string() }
    }
}

type Outcome = Result<i32, Failure>;

struct Ctx<'a> {
    format: Format,
    jobs: usize,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn json(&mut self, v: Value) -> io::Result<()> {
        writeln!(self.out, "{}", serde_json::to_string(&v).expect("json serializes"))
    }

    fn opts(&self) -> DcOptions {
        DcOptions::jobs(self.jobs)
    }
}

/// Parses `args` (program name first) and runs, returning the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let mut ctx = Ctx { format: cli.format, jobs: cli.jobs.max(1), out, err };
    match dispatch(&cli.command, &mut ctx) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(ctx.err, "liplab: {}", f.msg);
            f.code
        }
    }
}

fn load(src: &Source) -> Result<(Poset, Relabeling), Failure> {
    let text = if let Some(inline) = &src.inline {
        inline.replace(';', "\n")
    } else if let Some(name) = &src.gen {
        let p = fixtures::generate(name).ok_or_else(|| Failure::input(format!("unknown generator `{name}`")))?;
        return Ok((p.clone(), Relabeling::identity(p.n())));
    } else {
        match src.file.as_deref() {
            Some("-") => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).map_err(Failure::input)?;
                s
            }
            Some(path) => fs::read_to_string(path).map_err(|e| Failure::input(format!("{path}: {e}")))?,
            None => return Err(Failure::input("no poset given (FILE, -, --inline or --gen)")),
        }
    };
    Poset::parse(&text).map_err(Failure::input)
}

fn envelope(command: &str, p: &Poset, relabel: &Relabeling) -> Value {
    let mut v = json!({ "schema": SCHEMA, "command": command, "poset": p.to_json() });
    if !relabel.is_identity() {
        v["relabeling"] = json!(relabel.old_to_new());
    }
    v
}

fn io_err(e: io::Error) -> Failure {
    Failure { code: 1, msg: e.to_string() }
}

fn point_text(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn row_text(r: &Row) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (i, &u) in r.normal.iter().enumerate().filter(|(_, u)| **u != 0) {
        let mag = if u.abs() == 1 { String::new() } else { u.abs().to_string() };
        let sign = match (terms.is_empty(), u < 0) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => "- ",
            (false, false) => "+ ",
        };
        terms.push(format!("{sign}{mag}x{}", i + 1));
    }
    let lhs = if terms.is_empty() { "0".to_string() } else { terms.join(" ") };
    format!("{lhs} {} {}", if r.strict { "<" } else { "<=" }, r.rhs)
}

fn hrep_text(q: &HalfOpenPolytope) -> String {
    q.rows().iter().map(|r| row_text(r) + "\n").collect()
}

fn poly_json(g: &GenPoly) -> Value {
    g.to_json()["poly"].clone()
}

fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Outcome {
    match cmd {
        Command::Vertices(src) => {
            let (p, rl) = load(src)?;
            let v = geometry::vertices(&p);
            if ctx.format == Format::Json {
                let mut o = envelope("vertices", &p, &rl);
                o["count"] = json!(v.len());
                o["vertices"] = v.to_json();
                ctx.json(o).map_err(io_err)?;
            } else {
                for pt in v.points() {
                    writeln!(ctx.out, "{}", point_text(pt)).map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Hrep(src) => {
            let (p, rl) = load(src)?;
            let q = geometry::hrep_lip(&p);
            emit_polytope(ctx, "hrep", &p, &rl, &q)
        }
        Command::Hstar { source, method } => {
            let (p, rl) = load(source)?;
            cmd_hstar(ctx, &p, &rl, *method)
        }
        Command::Ehrhart(src) => {
            let (p, rl) = load(src)?;
            let data = ehrhart::ehrhart_poly_with(&geometry::hrep_lip(&p), ctx.jobs)
                .map_err(|e| Failure { code: EXIT_CROSS_CHECK, msg: e.to_string() })?;
            if ctx.format == Format::Json {
                let mut o = envelope("ehrhart", &p, &rl);
                o["ehrhart"] = data.to_json();
                ctx.json(o).map_err(io_err)?;
            } else {
                let counts: Vec<String> = data.counts.iter().map(u128::to_string).collect();
                writeln!(ctx.out, "counts: {}", counts.join(" ")).map_err(io_err)?;
                writeln!(ctx.out, "ehrhart: {}", data.poly).map_err(io_err)?;
                writeln!(ctx.out, "hstar: {}", data.hstar).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Volume(src) => {
            let (p, rl) = load(src)?;
            let data = ehrhart::ehrhart_poly_with(&geometry::hrep_lip(&p), ctx.jobs)
                .map_err(|e| Failure { code: EXIT_CROSS_CHECK, msg: e.to_string() })?;
            let vol = ehrhart::normalized_volume(&data)
                .map_err(|e| Failure { code: EXIT_CROSS_CHECK, msg: e.to_string() })?;
            let dc = triangulation::count_dc(&p, ctx.opts());
            let agree = vol == dc.into();
            if ctx.format == Format::Json {
                let mut o = envelope("volume", &p, &rl);
                o["volume"] = json!(vol.to_string());
                o["dc_count"] = json!(dc);
                o["agree"] = json!(agree);
                ctx.json(o).map_err(io_err)?;
            } else {
                writeln!(ctx.out, "{vol}").map_err(io_err)?;
            }
            mismatch(ctx, agree, "normalized volume differs from |DC(P)|")
        }
        Command::Dc { source, count, stats } => {
            let (p, rl) = load(source)?;
            cmd_dc(ctx, &p, &rl, *count, *stats)
        }
        Command::Hypersimplex { source, k, half_open } => {
            let (p, rl) = load(source)?;
            cmd_hypersimplex(ctx, &p, &rl, *k, *half_open)
        }
        Command::Check { source, corpus, suites } => {
            let suites: Vec<Suite> = if suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suites.iter().map(|s| Suite::parse(s)).collect::<Result<_, _>>().map_err(Failure::input)?
            };
            cmd_check(ctx, source, corpus, &suites)
        }
        Command::Conjecture { source, corpus } => cmd_check(ctx, source, corpus, &[Suite::Conjecture]),
        Command::Example { name } => {
            let p = fixtures::by_name(name).ok_or_else(|| {
                Failure::input(format!("unknown example `{name}`; known: {}", fixtures::NAMES.join(", ")))
            })?;
            if ctx.format == Format::Json {
                let mut o = envelope("example", &p, &Relabeling::identity(p.n()));
                o["name"] = json!(name);
                ctx.json(o).map_err(io_err)?;
            } else {
                write!(ctx.out, "{}", p.to_text()).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn mismatch(ctx: &mut Ctx, agree: bool, what: &str) -> Outcome {
    if agree {
        Ok(EXIT_OK)
    } else {
        let _ = writeln!(ctx.err, "liplab: cross-check failed: {what}");
        Ok(EXIT_CROSS_CHECK)
    }
}

fn emit_polytope(ctx: &mut Ctx, command: &str, p: &Poset, rl: &Relabeling, q: &HalfOpenPolytope) -> Outcome {
    if ctx.format == Format::Json {
        let mut o = envelope(command, p, rl);
        o["hrep"] = q.to_json();
        ctx.json(o).map_err(io_err)?;
    } else {
        write!(ctx.out, "{}", hrep_text(q)).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn cmd_hstar(ctx: &mut Ctx, p: &Poset, rl: &Relabeling, method: Method) -> Outcome {
    let by_stat = matches!(method, Method::Stat | Method::Both).then(|| triangulation::genfun_stat(p, ctx.opts()));
    let by_ehrhart = match method {
        Method::Ehrhart | Method::Both => Some(
            ehrhart::ehrhart_poly_with(&geometry::hrep_lip(p), ctx.jobs)
                .map_err(|e| Failure { code: EXIT_CROSS_CHECK, msg: e.to_string() })?
                .hstar,
        ),
        Method::Stat => None,
    };
    let agree = match (&by_stat, &by_ehrhart) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    if ctx.format == Format::Json {
        let mut o = envelope("hstar", p, rl);
        if let Some(g) = &by_stat {
            o["stat"] = poly_json(g);
        }
        if let Some(g) = &by_ehrhart {
            o["ehrhart"] = poly_json(g);
        }
        if let Some(a) = agree {
            o["agree"] = json!(a);
        }
        ctx.json(o).map_err(io_err)?;
    } else {
        if let Some(g) = &by_stat {
            writeln!(ctx.out, "stat: {g}").map_err(io_err)?;
        }
        if let Some(g) = &by_ehrhart {
            writeln!(ctx.out, "ehrhart: {g}").map_err(io_err)?;
        }
    }
    mismatch(ctx, agree != Some(false), "stat and Ehrhart h* differ")
}

fn cmd_dc(ctx: &mut Ctx, p: &Poset, rl: &Relabeling, count: bool, stats: bool) -> Outcome {
    if count {
        let c = triangulation::count_dc(p, ctx.opts());
        if ctx.format == Format::Json {
            let mut o = envelope("dc", p, rl);
            o["count"] = json!(c);
            ctx.json(o).map_err(io_err)?;
        } else {
            writeln!(ctx.out, "{c}").map_err(io_err)?;
        }
        return Ok(EXIT_OK);
    }
    let alcoves = triangulation::enumerate_dc(p, ctx.opts());
    if ctx.format == Format::Json {
        let mut o = envelope("dc", p, rl);
        o["count"] = json!(alcoves.len());
        o["permutations"] = alcoves
            .iter()
            .map(|a| {
                let mut e = json!({ "tau": a.tau().to_string(), "q": a.q().values() });
                if stats {
                    e["stat"] = json!(stat(a));
                    e["ides"] = json!(a.tau().ides());
                }
                e
            })
            .collect();
        ctx.json(o).map_err(io_err)?;
    } else {
        for a in &alcoves {
            let q: Vec<String> = a.q().values().iter().map(u32::to_string).collect();
            if stats {
                writeln!(ctx.out, "{} q=({}) stat={} ides={}", a.tau(), q.join(","), stat(a), a.tau().ides())
            } else {
                writeln!(ctx.out, "{} q=({})", a.tau(), q.join(","))
            }
            .map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_hypersimplex(ctx: &mut Ctx, p: &Poset, rl: &Relabeling, k: usize, half_open: bool) -> Outcome {
    let q = geometry::hrep_hypersimplex(p, k, half_open).map_err(Failure::input)?;
    let data = ehrhart::ehrhart_poly_with(&q, ctx.jobs)
        .map_err(|e| Failure { code: EXIT_CROSS_CHECK, msg: e.to_string() })?;
    let vol = ehrhart::normalized_volume(&data).map_err(|e| Failure { code: EXIT_CROSS_CHECK, msg: e.to_string() })?;
    let counts = triangulation::top_descent_counts(p, ctx.opts()).map_err(Failure::input)?;
    let dc = counts.get(&(k as u32 - 1)).copied().unwrap_or(0);
    // the slab decomposition takes the bottom slab closed and the others half-open
    let is_slab = half_open == (k >= 2);
    let graded = if is_slab {
        triangulation::genfun_by_top_descents(p, ctx.opts())
            .map_err(Failure::input)?
            .remove(&(k as u32 - 1))
            .or(Some(GenPoly::zero()))
    } else {
        None
    };
    let agree = vol == dc.into() && graded.as_ref().is_none_or(|g| *g == data.hstar);
    if ctx.format == Format::Json {
        let mut o = envelope("hypersimplex", p, rl);
        o["k"] = json!(k);
        o["half_open"] = json!(half_open);
        o["hrep"] = q.to_json();
        if !half_open {
            o["vertices"] = geometry::vertices_hypersimplex(p, k).map_err(Failure::input)?.to_json();
        }
        o["hstar"] = poly_json(&data.hstar);
        o["volume"] = json!(vol.to_string());
        o["dc_count"] = json!(dc);
        if let Some(g) = &graded {
            o["stat"] = poly_json(g);
        }
        o["agree"] = json!(agree);
        ctx.json(o).map_err(io_err)?;
    } else {
        writeln!(ctx.out, "hstar: {}", data.hstar).map_err(io_err)?;
        writeln!(ctx.out, "volume: {vol}").map_err(io_err)?;
        if let Some(g) = &graded {
            writeln!(ctx.out, "stat: {g}").map_err(io_err)?;
        }
    }
    mismatch(ctx, agree, "hypersimplex volume or h* differs from the DC grading")
}

fn corpus_from(source: &Source, args: &CorpusArgs) -> Result<Corpus, Failure> {
    let connected_only = !args.include_disconnected;
    let mut corpus = Corpus::default();
    if let Some(n) = args.exhaustive {
        corpus.extend(verify::corpus_exhaustive(n, connected_only).map_err(Failure::input)?);
    }
    if let Some(r) = &args.random {
        let (n, count, seed) = (r[0] as usize, r[1] as usize, r[2]);
        if n == 0 || n > crate::poset::MAX_ELEMENTS {
            return Err(Failure::input(format!("random poset size {n} out of range")));
        }
        corpus.extend(verify::corpus_random(n, count, seed, connected_only));
    }
    let has_source = source.file.is_some() || source.inline.is_some() || source.gen.is_some();
    if has_source {
        let (p, _) = load(source)?;
        corpus.extend(Corpus::named("input", p));
    }
    if corpus.is_empty() && !has_source && args.exhaustive.is_none() && args.random.is_none() {
        return Err(Failure::input("nothing to check: give a poset, --exhaustive or --random"));
    }
    Ok(corpus)
}

fn cmd_check(ctx: &mut Ctx, source: &Source, args: &CorpusArgs, suites: &[Suite]) -> Outcome {
    let corpus = corpus_from(source, args)?;
    let reports = verify::run_suite(&corpus, suites, ctx.jobs);
    let table = verify::summary_table(&reports);
    if ctx.format == Format::Json {
        for r in &reports {
            ctx.json(r.to_json(args.timings)).map_err(io_err)?;
        }
        write!(ctx.err, "{table}").map_err(io_err)?;
    } else {
        write!(ctx.out, "{table}").map_err(io_err)?;
        for r in reports.iter().filter(|r| r.worst() != Status::Pass) {
            for c in r.checks.iter().filter(|c| matches!(c.status, Status::Bug | Status::Counterexample)) {
                let w = c.witness.as_ref().map(Value::to_string).unwrap_or_default();
                writeln!(ctx.out, "{} {} {} {w}", c.status.as_str(), r.id, c.name).map_err(io_err)?;
            }
        }
    }
    let worst = reports.iter().map(|r| r.worst()).max().unwrap_or(Status::Pass);
    if worst == Status::Counterexample {
        let _ = writeln!(ctx.err, "liplab: conjecture counterexample found");
    }
    mismatch(ctx, worst != Status::Bug, "theorem check reported BUG")
}
