use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use nakayama_fuchs::classify::{
    classify_cell, conjecture_evidence, figure1_grid, hs_symmetry_check, render_csv, render_tex, render_text,
    wall_table, ClassificationReport,
};
use nakayama_fuchs::coxeter::{coxeter_report, CoxeterReport};
use nakayama_fuchs::homcalc::{ext1_dim_lb, hom_dim_lb};
use nakayama_fuchs::nakayama::{cartan, dimvec_inj, dimvec_proj, dimvec_simple, rank_det_data};
use nakayama_fuchs::reftypes::{canonical_cartan, extended_canonical_cartan, star_cartan};
use nakayama_fuchs::zvect::{stable_hom_dim, suspend, verify_tilting, StableLineObject, WeightContext};
use nakayama_fuchs::{IntMatrix, IntPolynomial, WeightTriple};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "nakfuchs", version, about = "Coxeter invariants of Nakayama algebras and weighted projective lines")]
struct Cli {
    /// Output format. csv and tex apply to classification grids only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Tex,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic in the group L(p1,p2,p3).
    Lgroup(LgroupArgs),
    /// dim Hom(O(x), O(y)).
    Homdim(PairArgs),
    /// dim Ext^1(O(x), O(y)).
    Extdim(PairArgs),
    #[command(subcommand)]
    Nakayama(NakayamaCmd),
    #[command(subcommand)]
    Coxeter(CoxeterCmd),
    /// Classify one cell, or the whole grid when no subcommand is given.
    Classify(ClassifyArgs),
    /// Polynomial checks of N_m(a) = N_m(b) around m = (a-1)(b-1).
    Symmetry {
        #[arg(long, default_value_t = 7)]
        amax: usize,
    },
    /// Coxeter numbers along the wall.
    Wall {
        #[arg(long, default_value_t = 30)]
        rmax: usize,
    },
    /// Polynomial evidence for the conjectural Fuchsian cells.
    Evidence,
    #[command(subcommand)]
    Tilting(TiltingCmd),
    #[command(subcommand)]
    Stable(StableCmd),
}

#[derive(Args)]
struct LgroupArgs {
    p1: i64,
    p2: i64,
    p3: i64,
    #[command(subcommand)]
    op: LgroupOp,
}

#[derive(Subcommand)]
enum LgroupOp {
    /// Normal form of an element.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// The degree δ(x).
    Delta {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Whether x <= y.
    Leq {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// c, ω, the Euler characteristic and the least k > 0 with kω >= 0.
    Info,
    /// The set of τ-orbit representatives.
    Sset,
    /// Largest m with x - mω >= 0.
    Mmax {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Writes x = s + mω with s in the S-set.
    Orbit {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
}

#[derive(Args)]
struct PairArgs {
    /// Weights as p1,p2,p3.
    weights: String,
    #[arg(allow_hyphen_values = true)]
    x: String,
    #[arg(allow_hyphen_values = true)]
    y: String,
}

#[derive(Subcommand)]
enum NakayamaCmd {
    /// Cartan matrix of N_n(r).
    Cartan { n: usize, r: usize },
    /// Dimension vector of the projective P_i.
    Proj { n: usize, r: usize, i: usize },
    /// Dimension vector of the injective I_i.
    Inj { n: usize, r: usize, i: usize },
    /// Dimension vector of the simple S_i.
    Simple { n: usize, r: usize, i: usize },
    /// Rank data of N_{r+4}(r)-modules.
    Rankdet { r: usize },
}

#[derive(Args)]
struct PolyFlags {
    /// Show the cyclotomic factorization.
    #[arg(long)]
    factor: bool,
    /// Show the Coxeter number.
    #[arg(long)]
    number: bool,
}

#[derive(Subcommand)]
enum CoxeterCmd {
    Nakayama {
        n: usize,
        r: usize,
        #[command(flatten)]
        flags: PolyFlags,
    },
    Star {
        a: i64,
        b: i64,
        c: i64,
        #[command(flatten)]
        flags: PolyFlags,
    },
    Canonical {
        a: i64,
        b: i64,
        c: i64,
        #[command(flatten)]
        flags: PolyFlags,
    },
    Extcanonical {
        a: i64,
        b: i64,
        c: i64,
        #[command(flatten)]
        flags: PolyFlags,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, default_value_t = 19)]
    rmax: usize,
    #[arg(long, default_value_t = 14)]
    smax: usize,
    /// Worker threads; defaults to one per core.
    #[arg(long)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cell: Option<ClassifyCmd>,
}

#[derive(Subcommand)]
enum ClassifyCmd {
    Cell { n: usize, r: usize },
}

#[derive(Subcommand)]
enum TiltingCmd {
    /// Checks the tilting object for p1,p2,p3.
    Verify { weights: String },
}

#[derive(Subcommand)]
enum StableCmd {
    /// dim sHom(A, B[shift]); objects are rep[:twist].
    Hom {
        weights: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
    },
}

/// Marks errors that should exit with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(if err.downcast_ref::<Usage>().is_some() { 2 } else { 1 })
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<String> {
    let format = cli.format;
    let grid_command = matches!(&cli.command, Command::Classify(a) if a.cell.is_none());
    if matches!(format, Format::Csv | Format::Tex) && !grid_command {
        return Err(Usage("--format csv and tex are only available for classification grids".into()).into());
    }
    match &cli.command {
        Command::Lgroup(args) => lgroup(args, format),
        Command::Homdim(args) | Command::Extdim(args) => {
            let w = parse_weights(&args.weights)?;
            let (x, y) = (w.parse(&args.x)?, w.parse(&args.y)?);
            let d = match &cli.command {
                Command::Homdim(_) => hom_dim_lb(&w, &x, &y)?,
                _ => ext1_dim_lb(&w, &x, &y)?,
            };
            emit(format, d.to_string(), &d)
        }
        Command::Nakayama(cmd) => nakayama(cmd, format),
        Command::Coxeter(cmd) => coxeter(cmd, format),
        Command::Classify(args) => classify(args, format),
        Command::Symmetry { amax } => symmetry(*amax, format),
        Command::Wall { rmax } => {
            let table = wall_table(*rmax)?;
            let mut text = String::from("r n coxeter_number lcm(2r,9)\n");
            for e in &table {
                let cf = e.closed_form.map_or("-".to_string(), |v| v.to_string());
                writeln!(text, "{} {} {} {}", e.r, e.n, opt(e.coxeter_number), cf)?;
            }
            emit(format, text, &table)
        }
        Command::Evidence => {
            let items = conjecture_evidence()?;
            let mut text = String::new();
            for i in &items {
                let (n, r) = i.nakayama;
                let rel = if i.equal { "==" } else { "!=" };
                let verdict = if i.holds() { "as expected" } else { "UNEXPECTED" };
                writeln!(text, "N_{n}({r}) {rel} {} ({verdict}, confirmed: {})", i.compared_with, i.confirmed)?;
            }
            emit(format, text, &items)
        }
        Command::Tilting(TiltingCmd::Verify { weights }) => tilting(weights, format),
        Command::Stable(StableCmd::Hom { weights, a, b, shift }) => {
            let ctx = WeightContext::new(parse_weights(weights)?)?;
            let a = StableLineObject::parse(&ctx, a)?;
            let b = StableLineObject::parse(&ctx, b)?;
            let d = stable_hom_dim(&ctx, &a, &suspend(&ctx, &b, *shift)?)?;
            emit(format, d.to_string(), &d)
        }
    }
}

fn emit<T: Serialize + ?Sized>(format: Format, text: String, value: &T) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(value)? + "\n"),
        _ => Ok(text),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or("-".to_string(), |v| v.to_string())
}

fn parse_weights(s: &str) -> anyhow::Result<WeightTriple> {
    let parts: Vec<&str> = s.trim_matches(|c| c == '(' || c == ')').split(',').map(str::trim).collect();
    let nums: Vec<i64> = parts
        .iter()
        .map(|p| p.parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Usage(format!("weights must look like 2,4,5, got {s:?}")))?;
    let [p1, p2, p3] = nums[..] else {
        return Err(Usage(format!("expected three weights, got {s:?}")).into());
    };
    Ok(WeightTriple::new(p1, p2, p3)?)
}

fn lgroup(args: &LgroupArgs, format: Format) -> anyhow::Result<String> {
    let w = WeightTriple::new(args.p1, args.p2, args.p3)?;
    match &args.op {
        LgroupOp::Normalize { x } => {
            let x = w.parse(x)?;
            emit(format, x.to_string(), &x)
        }
        LgroupOp::Delta { x } => {
            let d = w.parse(x)?.delta();
            emit(format, d.to_string(), &d)
        }
        LgroupOp::Leq { x, y } => {
            let b = w.parse(x)?.leq(&w.parse(y)?);
            emit(format, b.to_string(), &b)
        }
        LgroupOp::Info => {
            let chi = w.euler_char();
            let gap = w.omega_gap().ok();
            let text = format!(
                "weights {w}\nc {}\nomega {}\neuler_char {chi}\nomega_gap {}\n",
                w.c(),
                w.omega(),
                opt(gap)
            );
            let value = json!({
                "weights": w.weights(),
                "c": w.c(),
                "omega": w.omega(),
                "euler_char": [*chi.numer(), *chi.denom()],
                "omega_gap": gap,
            });
            emit(format, text, &value)
        }
        LgroupOp::Sset => {
            let s = w.sset()?;
            let text = s.iter().map(|x| format!("{x} {}\n", x.symbolic())).collect();
            emit(format, text, &s)
        }
        LgroupOp::Mmax { x } => {
            let m = w.m_max(&w.parse(x)?)?;
            emit(format, m.to_string(), &m)
        }
        LgroupOp::Orbit { x } => {
            let (rep, m) = w.orbit_rep(&w.parse(x)?)?;
            emit(format, format!("{rep} {m}"), &json!({ "rep": rep, "m": m }))
        }
    }
}

fn matrix_text(m: &IntMatrix) -> String {
    m.to_string()
}

fn vec_text(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn nakayama(cmd: &NakayamaCmd, format: Format) -> anyhow::Result<String> {
    match *cmd {
        NakayamaCmd::Cartan { n, r } => {
            let c = cartan(n, r)?;
            emit(format, matrix_text(&c), &c)
        }
        NakayamaCmd::Proj { n, r, i } => {
            let v = dimvec_proj(n, r, i)?;
            emit(format, vec_text(&v), &v)
        }
        NakayamaCmd::Inj { n, r, i } => {
            let v = dimvec_inj(n, r, i)?;
            emit(format, vec_text(&v), &v)
        }
        NakayamaCmd::Simple { n, r, i } => {
            let v = dimvec_simple(n, r, i)?;
            emit(format, vec_text(&v), &v)
        }
        NakayamaCmd::Rankdet { r } => {
            let d = rank_det_data(r)?;
            let text = format!(
                "proj_ranks {}\ninj_ranks {}\nsimple_ranks {}\nsimple_det_x3 {}\n",
                vec_text(&d.proj_ranks),
                vec_text(&d.inj_ranks),
                vec_text(&d.simple_ranks),
                d.simple_det_x3.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
            );
            emit(format, text, &d)
        }
    }
}

#[derive(Serialize)]
struct PolyReport<'a> {
    charpoly: &'a IntPolynomial,
    factors: &'a [(u64, u32)],
    remainder: &'a IntPolynomial,
    coxeter_number: Option<u64>,
}

fn coxeter(cmd: &CoxeterCmd, format: Format) -> anyhow::Result<String> {
    let (c, flags) = match cmd {
        CoxeterCmd::Nakayama { n, r, flags } => (cartan(*n, *r)?, flags),
        CoxeterCmd::Star { a, b, c, flags } => (star_cartan(*a, *b, *c)?, flags),
        CoxeterCmd::Canonical { a, b, c, flags } => (canonical_cartan(*a, *b, *c)?, flags),
        CoxeterCmd::Extcanonical { a, b, c, flags } => (extended_canonical_cartan(*a, *b, *c)?, flags),
    };
    let report: CoxeterReport = coxeter_report(&c)?;
    let mut text = format!("{}\n", report.charpoly);
    if flags.factor {
        let mut parts: Vec<String> =
            report.cyclotomic_factors.iter().map(|(d, m)| if *m == 1 { format!("Phi_{d}") } else { format!("Phi_{d}^{m}") }).collect();
        if !report.non_cyclotomic_remainder.is_one() {
            parts.push(format!("({})", report.non_cyclotomic_remainder));
        }
        writeln!(text, "factors: {}", parts.join(" * "))?;
    }
    if flags.number {
        writeln!(text, "coxeter number: {}", report.coxeter_number.map_or("infinite".to_string(), |h| h.to_string()))?;
    }
    let value = PolyReport {
        charpoly: &report.charpoly,
        factors: &report.cyclotomic_factors,
        remainder: &report.non_cyclotomic_remainder,
        coxeter_number: report.coxeter_number,
    };
    emit(format, text, &value)
}

fn cell_text(c: &ClassificationReport) -> anyhow::Result<String> {
    let labels: Vec<String> = c
        .labels
        .iter()
        .map(|l| if l.confirmed { format!("{} (confirmed)", l.label) } else { l.label.to_string() })
        .collect();
    let triangles: Vec<String> = c.triangle_labels.iter().map(ToString::to_string).collect();
    Ok(format!(
        "N_{}({})\ncharpoly: {}\nstatus: {}\nlabels: {}\ntriangle: {}\nperiodic: {}\ncoxeter number: {}\n",
        c.n,
        c.r,
        c.charpoly,
        serde_json::to_value(c.status)?.as_str().unwrap_or_default(),
        if labels.is_empty() { "-".into() } else { labels.join(", ") },
        if triangles.is_empty() { "-".into() } else { triangles.join(", ") },
        c.periodic,
        opt(c.coxeter_number)
    ))
}

fn classify(args: &ClassifyArgs, format: Format) -> anyhow::Result<String> {
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err(Usage("--jobs must be positive".into()).into());
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().context("thread pool")?;
    }
    if let Some(ClassifyCmd::Cell { n, r }) = args.cell {
        let report = classify_cell(n, r)?;
        return emit(format, cell_text(&report)?, &report);
    }
    if args.rmax < 3 || args.smax < 2 {
        return Err(Usage("grids need --rmax >= 3 and --smax >= 2".into()).into());
    }
    let grid = figure1_grid(args.rmax, args.smax)?;
    Ok(match format {
        Format::Text => render_text(&grid),
        Format::Csv => render_csv(&grid),
        Format::Tex => render_tex(&grid),
        Format::Json => serde_json::to_string_pretty(&grid)? + "\n",
    })
}

fn symmetry(amax: usize, format: Format) -> anyhow::Result<String> {
    if amax < 2 {
        return Err(Usage("--amax must be at least 2".into()).into());
    }
    let mut rows = Vec::new();
    let mut text = String::from("a b n n-1 n n+1\n");
    for a in 2..=amax {
        for b in a + 1..=amax {
            let n = (a - 1) * (b - 1);
            let eq = hs_symmetry_check(a, b)?;
            writeln!(text, "{a} {b} {n} {} {} {}", eq[0], eq[1], eq[2])?;
            rows.push(json!({ "a": a, "b": b, "n": n, "equal": eq }));
        }
    }
    emit(format, text, &rows)
}

fn tilting(weights: &str, format: Format) -> anyhow::Result<String> {
    let w = parse_weights(weights)?;
    let report = verify_tilting(&w)?;
    let summands: Vec<String> = report.spec.summands.iter().map(ToString::to_string).collect();
    let (n, r) = report.spec.expected;
    let mut text = format!("weights {w}\nexpected N_{n}({r})\nsummands {}\n", summands.join(", "));
    writeln!(text, "extension_free {}", report.extension_free)?;
    if let Some(wit) = report.witness {
        writeln!(text, "witness sHom({}, {}[{}]) != 0", summands[wit.source], summands[wit.target], wit.shift)?;
    }
    writeln!(text, "summand_count_ok {}", report.summand_count_ok)?;
    writeln!(text, "cartan_match {}", report.cartan_match)?;
    if let Some(order) = &report.order {
        writeln!(text, "order {}", order.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))?;
    }
    writeln!(text, "tilting {}", report.is_tilting())?;
    let value = json!({
        "weights": w.weights(),
        "summands": summands,
        "expected": [n, r],
        "extension_free": report.extension_free,
        "witness": report.witness,
        "summand_count_ok": report.summand_count_ok,
        "cartan_match": report.cartan_match,
        "order": report.order,
        "hom_matrix": report.hom_matrix,
        "tilting": report.is_tilting(),
    });
    emit(format, text, &value)
}
