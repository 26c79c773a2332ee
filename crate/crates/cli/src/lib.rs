//! Command-line front end: classify languages, solve instances, run and verify
//! reductions, generate random instances, and the densest-subgraph experiment.
//!
//! Exit codes: 0 on success, 1 when the instance is infeasible or over budget,
//! 2 on any input error.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use mincsp::classify::{classify, TrichotomyClass};
use mincsp::instance::random::{
    random_circuit, random_cnf3, random_colored_graph, random_dcsp_star, random_evenodd, random_nc, random_oddset,
    random_satisfiable_cnf3,
};
use mincsp::instance::{Cnf3, ColoredGraph, DcspInstance, EvenOddSetInstance, MonotoneCircuit, NearestCodeword};
use mincsp::reduce::{
    add_constants, dcsp_b2_to_b3, dcsp_b3_to_nc, dualize, eliminate_undeletable, evenodd_to_odd, kds_color_coding,
    max3sat_to_oddset, mcs_to_dcsp, mkds_guess_to_oddset, mkds_vertices, nc_to_oddset, oddset_self_improve,
    oddset_to_dcsp_b2, run_suite, Problem, ReductionArtifact, SUITES,
};
use mincsp::relation::{library, parse_language, Language};
use mincsp::solve::{
    approx_ihsb, brute_force_dcsp, min_satisfying_weight, solve_auto, solve_bijunctive, solve_nc_exact,
    solve_oddset_exact, solve_valid, NcEngine, OddSetEngine, Outcome, Status,
};
use mincsp::{InstanceError, ParseError, ReductionError, RelationError, SolveError};
use thiserror::Error;

/// Largest class count the experiment accepts; it tries `2^(k choose 2)` guesses.
pub const MAX_EXPERIMENT_CLASSES: usize = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

#[derive(Debug, Parser)]
#[command(name = "mincsp", version, about = "Minimum-deletion Boolean CSP toolkit")]
struct Cli {
    /// Print flat key=value lines instead of the human layout.
    #[arg(long, global = true)]
    flat: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the language of a .lang or .dcsp file.
    Classify { input: PathBuf },
    /// Solve a .dcsp, .odds, .nc or .mcirc instance.
    Solve {
        input: PathBuf,
        /// Budget on the cost; exact answers above it are reported as budget_exceeded.
        #[arg(long)]
        k: Option<usize>,
        /// DCSP solver.
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Odd Set or Nearest Codeword engine.
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
    },
    /// Apply a reduction and write the target instance.
    Reduce {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        input: PathBuf,
        output: PathBuf,
        /// Clause groups for cnf -> oddset.
        #[arg(long, default_value_t = 2)]
        groups: usize,
        /// Guessed class pairs for mkds -> oddset, as `0-1,1-2`.
        #[arg(long, default_value = "")]
        pairs: String,
    },
    /// Run a named verification suite (or `all`) over seeds 0..n.
    Verify {
        #[arg(long)]
        reduction: String,
        #[arg(long, default_value_t = 50)]
        seeds: u64,
    },
    /// Generate a random instance.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Variables, elements, columns, inputs, or vertices per class.
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Constraints, sets, rows, gates, or clauses.
        #[arg(long, default_value_t = 8)]
        m: usize,
        /// Language for dcsp (default: even4, x, notx).
        #[arg(long)]
        lang: Option<PathBuf>,
        /// Undeletable probability for dcsp, edge probability for mkds.
        #[arg(long, default_value_t = 0.0)]
        p: f64,
        /// Largest set size for oddset and evenodd.
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Color classes for mkds.
        #[arg(long, default_value_t = 3)]
        classes: usize,
        /// Plant a satisfying assignment in cnf.
        #[arg(long)]
        satisfiable: bool,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Try every guess of inhabited class pairs and report the densest
    /// multicolored vertex set recovered from the Odd Set gadgets.
    ExperimentMkds {
        input: PathBuf,
        /// Recolor into this many classes (with --repetitions).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random recolorings; 0 keeps the coloring of the input.
        #[arg(long, default_value_t = 0)]
        repetitions: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Brute,
    Bijunctive,
    Ihsb,
    Valid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Auto,
    Enumeration,
    Coset,
    Exhaustive,
    Syndrome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Nc,
    Oddset,
    Evenodd,
    Dcsp,
    DcspB2,
    DcspB3,
    DcspPlain,
    DcspDual,
    DcspConst,
    OddsetSquared,
    Mcirc,
    Cnf,
    Mkds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Dcsp,
    Oddset,
    Evenodd,
    Nc,
    Mcirc,
    Mkds,
    Cnf,
}

/// Key/value fields, plus fields shown only in flat mode and free-form lines
/// shown only in the human layout.
#[derive(Debug, Default)]
struct Report {
    fields: Vec<(String, String)>,
    flat_fields: Vec<(String, String)>,
    lines: Vec<String>,
    /// Printed verbatim in both layouts.
    body: String,
}

impl Report {
    fn field(&mut self, key: &str, value: impl Display) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    fn flat_field(&mut self, key: &str, value: impl Display) {
        self.flat_fields.push((key.to_string(), value.to_string()));
    }

    fn write(&self, out: &mut dyn Write, flat: bool) -> io::Result<()> {
        for (k, v) in &self.fields {
            if flat {
                writeln!(out, "{k}={v}")?;
            } else {
                writeln!(out, "{k}: {v}")?;
            }
        }
        if flat {
            for (k, v) in &self.flat_fields {
                writeln!(out, "{k}={v}")?;
            }
        } else {
            for l in &self.lines {
                writeln!(out, "{l}")?;
            }
        }
        out.write_all(self.body.as_bytes())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load<T: FromStr<Err = ParseError>>(path: &Path) -> Result<T, CliError> {
    read(path)?.parse().map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn load_language(path: &Path) -> Result<Language, CliError> {
    parse_language(&read(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn extension(path: &Path) -> &str {
    path.extension().and_then(|e| e.to_str()).unwrap_or("")
}

fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if v.is_empty() {
        "-".to_string()
    } else {
        v.join(",")
    }
}

fn bits(b: &[bool]) -> String {
    b.iter().map(|&x| if x { '1' } else { '0' }).collect()
}

fn exit_code(status: Status) -> i32 {
    if status.is_success() {
        0
    } else {
        1
    }
}

/// Parses `argv` (program name first), runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli.command) {
        Ok((report, code)) => match report.write(out, cli.flat) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<(Report, i32), CliError> {
    match command {
        Command::Classify { input } => classify_cmd(&input).map(|r| (r, 0)),
        Command::Solve {
            input,
            k,
            method,
            engine,
        } => solve_cmd(&input, k, method, engine),
        Command::Reduce {
            from,
            to,
            input,
            output,
            groups,
            pairs,
        } => reduce_cmd(from, to, &input, &output, groups, &pairs).map(|r| (r, 0)),
        Command::Verify { reduction, seeds } => verify_cmd(&reduction, seeds),
        Command::Gen {
            kind,
            seed,
            n,
            m,
            lang,
            p,
            max_size,
            classes,
            satisfiable,
            out,
        } => {
            let text = gen_text(kind, seed, n, m, lang.as_deref(), p, max_size, classes, satisfiable)?;
            let mut r = Report::default();
            match out {
                Some(path) => {
                    write_file(&path, &text)?;
                    r.field("written", path.display());
                }
                None => r.body = text,
            }
            Ok((r, 0))
        }
        Command::ExperimentMkds {
            input,
            k,
            seed,
            repetitions,
        } => {
            let g: ColoredGraph = load(&input)?;
            let report = if repetitions == 0 {
                experiment_mkds(&g)?
            } else {
                experiment_recolored(&g, k.unwrap_or(g.num_classes()), seed, repetitions)?
            };
            Ok((report.to_report(&g), 0))
        }
    }
}

fn classify_cmd(input: &Path) -> Result<Report, CliError> {
    let lang = match extension(input) {
        "lang" => load_language(input)?,
        "dcsp" => load::<DcspInstance>(input)?.language().clone(),
        other => return Err(CliError::Usage(format!("classify expects .lang or .dcsp, got `.{other}`"))),
    };
    let c = classify(&lang)?;
    let mut r = Report::default();
    r.field("class", c.class);
    let p = &c.properties;
    let width = |w: Option<usize>| w.map_or_else(|| "none".to_string(), |b| b.to_string());
    r.flat_field("zero_valid", p.zero_valid);
    r.flat_field("one_valid", p.one_valid);
    r.flat_field("horn", p.horn);
    r.flat_field("dual_horn", p.dual_horn);
    r.flat_field("bijunctive", p.bijunctive);
    r.flat_field("affine", p.affine);
    r.flat_field("self_dual", p.self_dual);
    r.flat_field("irredundant", p.irredundant);
    r.flat_field("ihs_plus_width", width(p.ihs_plus_width));
    r.flat_field("ihs_minus_width", width(p.ihs_minus_width));
    r.lines = c.narrative;
    Ok(r)
}

fn outcome_fields<S>(r: &mut Report, o: &Outcome<S>) {
    r.field("status", o.status);
    r.field("cost", o.cost.map_or_else(|| "-".to_string(), |c| c.to_string()));
}

fn solve_dcsp(inst: &DcspInstance, k: Option<usize>, method: Method) -> Result<Outcome<mincsp::instance::DcspSolution>, CliError> {
    let k = k.unwrap_or(inst.num_constraints());
    let out = match method {
        Method::Auto => solve_auto(inst, k)?,
        Method::Brute => brute_force_dcsp(inst)?.within_budget(k),
        Method::Bijunctive => solve_bijunctive(inst, k)?.within_budget(k),
        Method::Valid => solve_valid(inst)?.within_budget(k),
        Method::Ihsb => match classify(inst.language())?.class {
            TrichotomyClass::ApproxIhsb { width, polarity } => approx_ihsb(inst, width, polarity)?.within_budget(k),
            other => return Err(CliError::Usage(format!("--method ihsb needs an IHS-B language, this one is {other}"))),
        },
    };
    Ok(out)
}

fn solve_cmd(input: &Path, k: Option<usize>, method: Method, engine: Engine) -> Result<(Report, i32), CliError> {
    let mut r = Report::default();
    let status = match extension(input) {
        "dcsp" => {
            let inst: DcspInstance = load(input)?;
            let out = solve_dcsp(&inst, k, method)?;
            outcome_fields(&mut r, &out);
            if let Some(s) = &out.solution {
                r.field("deleted", join(&s.deletion));
                r.field("assignment", bits(&s.assignment));
            }
            if let Some(lp) = &out.lp_value {
                r.field("lp_value", lp);
            }
            for n in &out.notes {
                r.field("note", n);
            }
            out.status
        }
        "odds" => {
            let e: EvenOddSetInstance = load(input)?;
            let engine = match engine {
                Engine::Auto => OddSetEngine::Auto,
                Engine::Enumeration => OddSetEngine::Enumeration,
                Engine::Coset => OddSetEngine::Coset,
                other => return Err(CliError::Usage(format!("engine {other:?} does not apply to odd set"))),
            };
            let out = solve_oddset_exact(&e, k.unwrap_or(e.universe()), engine)?;
            outcome_fields(&mut r, &out);
            if let Some(t) = &out.solution {
                r.field("elements", join(t));
            }
            out.status
        }
        "nc" => {
            let nc: NearestCodeword = load(input)?;
            let engine = match engine {
                Engine::Auto => NcEngine::Auto,
                Engine::Exhaustive => NcEngine::Exhaustive,
                Engine::Syndrome => NcEngine::Syndrome,
                other => return Err(CliError::Usage(format!("engine {other:?} does not apply to nearest codeword"))),
            };
            let (x, d) = solve_nc_exact(&nc, engine)?;
            let status = if k.is_some_and(|k| d > k) {
                Status::BudgetExceeded
            } else {
                Status::Optimal
            };
            r.field("status", status);
            r.field("cost", d);
            if status.is_success() {
                r.field("x", x.to_bit_string());
            }
            status
        }
        "mcirc" => {
            let c: MonotoneCircuit = load(input)?;
            let status = match min_satisfying_weight(&c)? {
                None => {
                    r.field("status", Status::Infeasible);
                    r.field("cost", "-");
                    Status::Infeasible
                }
                Some((inputs, w)) => {
                    let status = if k.is_some_and(|k| w > k) {
                        Status::BudgetExceeded
                    } else {
                        Status::Optimal
                    };
                    r.field("status", status);
                    r.field("cost", w);
                    if status.is_success() {
                        let names = c.inputs().into_iter().zip(&inputs).filter(|(_, &b)| b);
                        r.field("true_inputs", join(names.map(|(g, _)| c.gates()[g].name.clone())));
                    }
                    status
                }
            };
            status
        }
        other => return Err(CliError::Usage(format!("cannot solve `.{other}` files"))),
    };
    Ok((r, exit_code(status)))
}

fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>, CliError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (a, b) = p
                .trim()
                .split_once('-')
                .ok_or_else(|| CliError::Usage(format!("pair `{p}` is not of the form i-j")))?;
            let num = |x: &str| {
                x.parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("pair `{p}` has a non-numeric class")))
            };
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

fn emit<S: Problem, T: Problem>(art: ReductionArtifact<S, T>, output: &Path, r: &mut Report) -> Result<(), CliError> {
    write_file(output, &art.target.to_text())?;
    r.field("kind", art.kind);
    r.field("note", &art.note);
    r.field("written", output.display());
    Ok(())
}

fn reduce_cmd(from: Kind, to: Kind, input: &Path, output: &Path, groups: usize, pairs: &str) -> Result<Report, CliError> {
    let mut r = Report::default();
    let name = |k: Kind| k.to_possible_value().expect("no skipped variants").get_name().to_string();
    r.field("reduction", format!("{}->{}", name(from), name(to)));
    match (from, to) {
        (Kind::Nc, Kind::Oddset) => emit(nc_to_oddset(&load(input)?), output, &mut r)?,
        (Kind::Evenodd, Kind::Oddset) => emit(evenodd_to_odd(&load(input)?), output, &mut r)?,
        (Kind::Oddset, Kind::DcspB2) => emit(oddset_to_dcsp_b2(&load(input)?)?, output, &mut r)?,
        (Kind::Oddset, Kind::OddsetSquared) => emit(oddset_self_improve(&load(input)?), output, &mut r)?,
        (Kind::DcspB2, Kind::DcspB3) => emit(dcsp_b2_to_b3(&load(input)?)?, output, &mut r)?,
        (Kind::DcspB3, Kind::Nc) => emit(dcsp_b3_to_nc(&load(input)?)?, output, &mut r)?,
        (Kind::Mcirc, Kind::Dcsp) => emit(mcs_to_dcsp(&load(input)?)?, output, &mut r)?,
        (Kind::Dcsp, Kind::DcspPlain) => emit(eliminate_undeletable(&load(input)?)?, output, &mut r)?,
        (Kind::Dcsp, Kind::DcspDual) => emit(dualize(&load(input)?), output, &mut r)?,
        (Kind::Dcsp, Kind::DcspConst) => emit(add_constants(&load(input)?)?, output, &mut r)?,
        (Kind::Cnf, Kind::Oddset) => {
            let g = max3sat_to_oddset(&load::<Cnf3>(input)?, groups)?;
            write_file(output, &g.instance.to_text())?;
            r.field("groups", groups);
            r.field("written", output.display());
        }
        (Kind::Mkds, Kind::Oddset) => {
            let g = mkds_guess_to_oddset(&load::<ColoredGraph>(input)?, &parse_pairs(pairs)?)?;
            write_file(output, &g.instance.to_text())?;
            r.field("expected_size", g.expected_size());
            r.field("written", output.display());
        }
        _ => {
            return Err(CliError::Usage(format!(
                "no reduction from {} to {}",
                name(from),
                name(to)
            )))
        }
    }
    Ok(r)
}

fn verify_cmd(reduction: &str, seeds: u64) -> Result<(Report, i32), CliError> {
    let names: Vec<&str> = if reduction == "all" {
        SUITES.to_vec()
    } else {
        vec![reduction]
    };
    let mut r = Report::default();
    let mut code = 0;
    for name in names {
        let s = run_suite(name, seeds)?;
        r.field("suite", &s.name);
        r.field("passed", s.passed);
        r.field("skipped", s.skipped);
        r.field("failed", s.failures.len());
        for (seed, msg) in &s.failures {
            r.lines.push(format!("seed {seed}: {msg}"));
        }
        if !s.ok() {
            code = 1;
        }
    }
    Ok((r, code))
}

#[allow(clippy::too_many_arguments)]
fn gen_text(
    kind: GenKind,
    seed: u64,
    n: usize,
    m: usize,
    lang: Option<&Path>,
    p: f64,
    max_size: usize,
    classes: usize,
    satisfiable: bool,
) -> Result<String, CliError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(CliError::Usage(format!("--p {p} is not a probability")));
    }
    let need = |ok: bool, what: &str| if ok { Ok(()) } else { Err(CliError::Usage(what.to_string())) };
    Ok(match kind {
        GenKind::Dcsp => {
            need(n > 0 || m == 0, "constraints need --n ≥ 1")?;
            let lang = match lang {
                Some(path) => load_language(path)?,
                None => library::b2(),
            };
            random_dcsp_star(&lang, n, m, p, seed).to_text()
        }
        GenKind::Oddset => {
            need(n > 0 || m == 0, "sets need --n ≥ 1")?;
            random_oddset(n, m, max_size, seed).to_text()
        }
        GenKind::Evenodd => {
            need(n > 0 || m == 0, "sets need --n ≥ 1")?;
            random_evenodd(n, m, max_size, seed).to_text()
        }
        GenKind::Nc => random_nc(m, n, seed).to_text(),
        GenKind::Mcirc => {
            need(n > 0, "circuits need --n ≥ 1 inputs")?;
            need(m > 0, "circuits need --m ≥ 1 gates")?;
            random_circuit(n, m, seed).to_text()
        }
        GenKind::Mkds => random_colored_graph(classes, n, if p == 0.0 { 0.5 } else { p }, seed).to_text(),
        GenKind::Cnf => {
            need(n > 0 || m == 0, "clauses need --n ≥ 1")?;
            if satisfiable {
                random_satisfiable_cnf3(n, m, seed).0.to_text()
            } else {
                random_cnf3(n, m, seed).to_text()
            }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MkdsReport {
    /// Guesses tried, `2^(k choose 2)`.
    pub guesses: usize,
    /// Guesses whose gadget had an odd set.
    pub feasible_guesses: usize,
    /// One vertex per nonempty class, from the best guess.
    pub vertices: Vec<usize>,
    pub induced_edges: usize,
    pub best_guess: Vec<(usize, usize)>,
}

impl MkdsReport {
    fn to_report(&self, g: &ColoredGraph) -> Report {
        let mut r = Report::default();
        r.field("guesses", self.guesses);
        r.field("feasible_guesses", self.feasible_guesses);
        r.field("induced_edges", self.induced_edges);
        r.field("vertices", join(self.vertices.iter().map(|&v| g.vertex_name(v))));
        r.field("best_guess", join(self.best_guess.iter().map(|(i, j)| format!("{i}-{j}"))));
        r
    }
}

/// Builds the gadget for every subset of class pairs (in ascending bitmask
/// order), solves it exactly, reads off one vertex per class, and keeps the
/// first vertex set with the most induced edges.
pub fn experiment_mkds(g: &ColoredGraph) -> Result<MkdsReport, CliError> {
    let k = g.num_classes();
    if k > MAX_EXPERIMENT_CLASSES {
        return Err(CliError::Usage(format!(
            "{k} classes give 2^{} guesses; the limit is {MAX_EXPERIMENT_CLASSES} classes",
            k * k.saturating_sub(1) / 2
        )));
    }
    let all: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let mut best = MkdsReport {
        guesses: 1 << all.len(),
        feasible_guesses: 0,
        vertices: Vec::new(),
        induced_edges: 0,
        best_guess: Vec::new(),
    };
    let mut found = false;
    for mask in 0u32..1 << all.len() {
        let guess: Vec<(usize, usize)> = (0..all.len()).filter(|&b| mask >> b & 1 == 1).map(|b| all[b]).collect();
        let gadget = mkds_guess_to_oddset(g, &guess)?;
        let Some((z, _)) = gadget.instance.optimum()? else { continue };
        best.feasible_guesses += 1;
        let vertices = mkds_vertices(&gadget, g, &z);
        let edges = g.induced_edges(&vertices);
        if !found || edges > best.induced_edges {
            found = true;
            best.vertices = vertices;
            best.induced_edges = edges;
            best.best_guess = guess;
        }
    }
    Ok(best)
}

/// Recolors the graph `repetitions` times into `k` classes and runs the
/// experiment on each coloring, keeping the first best.
pub fn experiment_recolored(g: &ColoredGraph, k: usize, seed: u64, repetitions: usize) -> Result<MkdsReport, CliError> {
    let colorings = kds_color_coding(g.num_vertices(), g.edges(), k, seed, repetitions)?;
    let mut best: Option<MkdsReport> = None;
    let mut guesses = 0;
    let mut feasible = 0;
    for c in &colorings {
        let r = experiment_mkds(c)?;
        guesses += r.guesses;
        feasible += r.feasible_guesses;
        if best.as_ref().is_none_or(|b| r.induced_edges > b.induced_edges) {
            best = Some(r);
        }
    }
    let mut best = best.ok_or_else(|| CliError::Usage("--repetitions must be positive".to_string()))?;
    best.guesses = guesses;
    best.feasible_guesses = feasible;
    Ok(best)
}
