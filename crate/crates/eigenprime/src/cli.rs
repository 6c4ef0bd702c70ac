//! Batch command-line front end.
//!
//! Subcommands: `count`, `sweep`, `verify`, `regions`, `classify`,
//! `enumerate`, `charpoly`, `constants`. Output is CSV or JSON with LF line
//! endings, floats rendered to 10 significant digits, and integers emitted
//! as JSON numbers only below 2^53 (decimal strings above). Identical
//! configurations produce byte-identical output regardless of `--threads`.
//!
//! Exit status: 0 on success, 1 when a verification or `--method both`
//! agreement check fails, 2 on invalid input.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;

use crate::arith::{self, ArithTables};
use crate::counting::{self, BRUTE_LIMIT};
use crate::density::{self, DensitySample};
use crate::error::{domain, Error, Result};
use crate::regions::{self, TriangleRegion};
use crate::surface::{self, Triple};
use crate::Method;

#[derive(Debug, Parser)]
#[command(
    name = "eigenprime",
    about = "Exact prime/coprime triple counts on the dihedral eigensurface and in its ambient cuboid",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact counts at a single N.
    Count(CountArgs),
    /// Density table over a range of N.
    Sweep(SweepArgs),
    /// Run the oracle-equivalence and identity suites.
    Verify(VerifyArgs),
    /// Coprime counts in a triangular region, or in a box with a mod-p split.
    Regions(RegionsArgs),
    /// Invert the surface parameterization for one triple.
    Classify(ClassifyArgs),
    /// List the coprime surface points with z1 <= N.
    Enumerate(EnumerateArgs),
    /// Dihedral characteristic-polynomial coefficients at a given angle.
    Charpoly(CharpolyArgs),
    /// Print the limit constants.
    Constants(ConstantsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Fast,
    Brute,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhatArg {
    Box,
    Surface,
    Plane,
    All,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Worker threads for the counting loops (default: all cores).
    #[arg(long, env = "EIGENPRIME_THREADS")]
    threads: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value_t = WhatArg::All)]
    what: WhatArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
    method: MethodArg,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Explicit comma-separated list of N values.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["from", "to", "factor"])]
    ns: Option<Vec<u64>>,
    /// Geometric range start (with --to/--factor).
    #[arg(long, requires = "to")]
    from: Option<u64>,
    /// Geometric range end (inclusive).
    #[arg(long, requires = "from")]
    to: Option<u64>,
    /// Geometric range multiplier (default 10).
    #[arg(long, default_value_t = 10)]
    factor: u64,
    /// `all` emits the fixed 10-column schema; `plane` appends xa,ya;
    /// `box`/`surface` restrict to their own columns.
    #[arg(long, value_enum, default_value_t = WhatArg::All)]
    what: WhatArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
    method: MethodArg,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Largest N for the brute-force oracle comparisons (<= 300).
    #[arg(long, default_value_t = 200)]
    max_n: u64,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct RegionsArgs {
    /// Intercept M of the slanted boundary line.
    #[arg(long)]
    m: i64,
    /// Slope of the lower boundary ray, as an integer or `p/q`.
    #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
    k1: Option<Rational64>,
    /// Slope of the slanted boundary line.
    #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
    k2: Option<Rational64>,
    /// Optional cut slope (k3 > k1).
    #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
    k3: Option<Rational64>,
    /// Include the mod-3 congruence split in the output.
    #[arg(long)]
    mod3: bool,
    /// Count the box [1,M]^2 with the mod-p restriction instead of a triangle.
    #[arg(long, conflicts_with_all = ["k1", "k2", "k3", "mod3"])]
    p: Option<u64>,
    #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
    method: MethodArg,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    /// The triple to classify, as `z0,z1,z2`.
    #[arg(long, value_delimiter = ',')]
    triple: Vec<u64>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: u64,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct CharpolyArgs {
    /// Rotation angle in degrees.
    #[arg(long, default_value_t = 120.0, allow_hyphen_values = true)]
    angle_deg: f64,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct ConstantsArgs {
    #[command(flatten)]
    common: CommonArgs,
}

fn parse_ratio(s: &str) -> std::result::Result<Rational64, String> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|e| format!("bad integer {t:?}: {e}"))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q == 0 {
                return Err("denominator must be nonzero".into());
            }
            Ok(Rational64::new(p, q))
        }
        None => Ok(Rational64::from_integer(parse_int(s)?)),
    }
}

/// Entry point used by the binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits with status 2 on a parse error
    match run(cli) {
        Ok(status) => ExitCode::from(status),
        Err(Error::Domain(msg)) | Err(Error::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Run a parsed configuration; returns the process exit status.
pub fn run(cli: Cli) -> Result<u8> {
    let common = match &cli.command {
        Command::Count(a) => &a.common,
        Command::Sweep(a) => &a.common,
        Command::Verify(a) => &a.common,
        Command::Regions(a) => &a.common,
        Command::Classify(a) => &a.common,
        Command::Enumerate(a) => &a.common,
        Command::Charpoly(a) => &a.common,
        Command::Constants(a) => &a.common,
    };
    let threads = common.threads.unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| domain(format!("thread pool: {e}")))?;
    pool.install(|| dispatch(cli))
}

fn dispatch(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Regions(args) => cmd_regions(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Charpoly(args) => cmd_charpoly(args),
        Command::Constants(args) => cmd_constants(args),
    }
}

// ---------------------------------------------------------------------------
// Output plumbing

/// Render `x` with up to 10 significant digits, printf `%g` style: fixed
/// notation for exponents in [-4, 10), scientific otherwise, trailing zeros
/// trimmed. The output is a valid JSON number.
pub fn fmt_sig10(x: f64) -> String {
    const SIG: usize = 10;
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let e = format!("{:.*e}", SIG - 1, x);
    let (mant, exp) = e.split_once('e').expect("exponential form");
    let exp: i32 = exp.parse().expect("exponent");
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let body = if (-4..SIG as i32).contains(&exp) {
        if exp >= 0 {
            let point = exp as usize + 1;
            if point >= digits.len() {
                let mut d = digits.clone();
                d.push_str(&"0".repeat(point - digits.len()));
                d
            } else {
                trim_trailing(format!("{}.{}", &digits[..point], &digits[point..]))
            }
        } else {
            trim_trailing(format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits))
        }
    } else {
        let mant = trim_trailing(format!("{}.{}", &digits[..1], &digits[1..]));
        format!("{mant}e{exp}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn trim_trailing(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// One output cell: how it renders in CSV and in JSON.
#[derive(Debug, Clone)]
enum Cell {
    Int(u128),
    Float(f64),
    OptFloat(Option<f64>),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(x) => fmt_sig10(*x),
            Cell::OptFloat(Some(x)) => fmt_sig10(*x),
            Cell::OptFloat(None) => String::new(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> String {
        const SAFE: u128 = 1 << 53;
        match self {
            Cell::Int(v) if *v < SAFE => v.to_string(),
            Cell::Int(v) => format!("\"{v}\""),
            Cell::Float(x) => fmt_sig10(*x),
            Cell::OptFloat(Some(x)) => fmt_sig10(*x),
            Cell::OptFloat(None) => "null".to_string(),
            Cell::Text(s) => format!("\"{s}\""),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

type Record = Vec<(&'static str, Cell)>;

fn render(records: &[Record], format: FormatArg) -> String {
    match format {
        FormatArg::Csv => {
            let mut out = String::new();
            if let Some(first) = records.first() {
                let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
                out.push_str(&header.join(","));
                out.push('\n');
                for rec in records {
                    let row: Vec<String> = rec.iter().map(|(_, c)| c.csv()).collect();
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
            }
            out
        }
        FormatArg::Json => {
            let body = |rec: &Record| {
                let fields: Vec<String> = rec
                    .iter()
                    .map(|(k, c)| format!("\"{}\":{}", k, c.json()))
                    .collect();
                format!("{{{}}}", fields.join(","))
            };
            if records.len() == 1 {
                let mut s = body(&records[0]);
                s.push('\n');
                s
            } else {
                let rows: Vec<String> = records.iter().map(|r| format!("  {}", body(r))).collect();
                format!("[\n{}\n]\n", rows.join(",\n"))
            }
        }
    }
}

fn emit(common: &CommonArgs, records: &[Record]) -> Result<()> {
    let text = render(records, common.format);
    match &common.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| domain(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// Table sizing

fn tables_for_box(n: u64) -> Result<ArithTables> {
    ArithTables::build((6 * n / 5).max(2))
}

fn tables_for_surface(n: u64) -> Result<ArithTables> {
    ArithTables::build(((n / 3).isqrt() + 2).max(1_000))
}

// ---------------------------------------------------------------------------
// count

fn cmd_count(args: CountArgs) -> Result<u8> {
    let n = args.n;
    if n == 0 {
        return Err(domain("--n must be positive"));
    }
    let mut rec: Record = vec![("N", Cell::Int(n as u128))];
    let mut agree = true;

    let push_pair = |rec: &mut Record,
                     agree: &mut bool,
                     name: &'static str,
                     fast: u128,
                     brute: Option<u128>| {
        rec.push((name, Cell::Int(fast)));
        if let Some(b) = brute {
            *agree &= fast == b;
        }
    };

    let want_box = matches!(args.what, WhatArg::Box | WhatArg::All);
    let want_surface = matches!(args.what, WhatArg::Surface | WhatArg::All);
    let want_plane = matches!(args.what, WhatArg::Plane | WhatArg::All);

    let tables = if want_box || want_plane {
        tables_for_box(n)?
    } else {
        tables_for_surface(n)?
    };

    let (fast, brute) = match args.method {
        MethodArg::Fast => (true, false),
        MethodArg::Brute => (false, true),
        MethodArg::Both => (true, true),
    };

    if want_box {
        let fast_x = fast.then(|| counting::count_x_plus(&tables, n, Method::Fast)).transpose()?;
        let fast_y = fast.then(|| counting::count_y_plus(&tables, n, Method::Fast)).transpose()?;
        let brute_r = brute.then(|| counting::brute_force_counts(n)).transpose()?;
        let x = fast_x.unwrap_or_else(|| brute_r.unwrap().x_plus);
        let y = fast_y.unwrap_or_else(|| brute_r.unwrap().y_plus);
        push_pair(&mut rec, &mut agree, "x_plus", x, brute_r.map(|r| r.x_plus));
        push_pair(&mut rec, &mut agree, "y_plus", y, brute_r.map(|r| r.y_plus));
    }
    if want_surface {
        let fast_xs = fast.then(|| counting::count_xs(&tables, n, Method::Fast)).transpose()?;
        let fast_ys = fast.then(|| counting::count_ys(&tables, n, Method::Fast)).transpose()?;
        let brute_xs = brute.then(|| counting::count_xs(&tables, n, Method::Brute)).transpose()?;
        let brute_ys = brute.then(|| counting::count_ys(&tables, n, Method::Brute)).transpose()?;
        let xs = fast_xs.or(brute_xs).unwrap() as u128;
        let ys = fast_ys.or(brute_ys).unwrap() as u128;
        push_pair(&mut rec, &mut agree, "xs", xs, brute_xs.map(|v| v as u128));
        push_pair(&mut rec, &mut agree, "ys", ys, brute_ys.map(|v| v as u128));
    }
    if want_plane {
        let fast_p = fast.then(|| counting::plane_baseline_counts(&tables, n)).transpose()?;
        let brute_p = brute.then(|| counting::plane_baseline_brute(n)).transpose()?;
        let (xa, ya) = fast_p.or(brute_p).unwrap();
        push_pair(&mut rec, &mut agree, "xa", xa, brute_p.map(|p| p.0));
        push_pair(&mut rec, &mut agree, "ya", ya, brute_p.map(|p| p.1));
    }

    let both = args.method == MethodArg::Both;
    if both {
        rec.push(("agree", Cell::Bool(agree)));
    }
    emit(&args.common, &[rec])?;
    Ok(if both && !agree { 1 } else { 0 })
}

// ---------------------------------------------------------------------------
// sweep

fn sweep_ns(args: &SweepArgs) -> Result<Vec<u64>> {
    if let Some(ns) = &args.ns {
        return Ok(ns.clone());
    }
    match (args.from, args.to) {
        (Some(from), Some(to)) => {
            if from == 0 || args.factor < 2 {
                return Err(domain("--from must be positive and --factor >= 2"));
            }
            let mut ns = Vec::new();
            let mut n = from;
            while n <= to {
                ns.push(n);
                match n.checked_mul(args.factor) {
                    Some(next) => n = next,
                    None => break,
                }
            }
            Ok(ns)
        }
        _ => Err(domain("sweep needs --ns or --from/--to")),
    }
}

fn sample_record(s: &DensitySample, what: WhatArg, plane: Option<(u128, u128)>) -> Record {
    let mut rec: Record = vec![("N", Cell::Int(s.n as u128))];
    let box_cols = matches!(what, WhatArg::Box | WhatArg::All | WhatArg::Plane);
    let surf_cols = matches!(what, WhatArg::Surface | WhatArg::All | WhatArg::Plane);
    if box_cols {
        rec.push(("x_plus", Cell::Int(s.x_plus)));
        rec.push(("y_plus", Cell::Int(s.y_plus)));
    }
    if surf_cols {
        rec.push(("xs", Cell::Int(s.xs as u128)));
        rec.push(("ys", Cell::Int(s.ys as u128)));
    }
    if box_cols {
        rec.push(("p_plus", Cell::Float(s.p_plus)));
    }
    if surf_cols {
        rec.push(("p_s", Cell::Float(s.p_s)));
    }
    if box_cols && surf_cols {
        rec.push(("ratio", Cell::OptFloat(s.ratio)));
    }
    if box_cols {
        rec.push(("p_plus_logN", Cell::Float(s.p_plus_log_n)));
    }
    if surf_cols {
        rec.push(("p_s_logN", Cell::Float(s.p_s_log_n)));
    }
    if let Some((xa, ya)) = plane {
        rec.push(("xa", Cell::Int(xa)));
        rec.push(("ya", Cell::Int(ya)));
    }
    rec
}

fn cmd_sweep(args: SweepArgs) -> Result<u8> {
    let ns = sweep_ns(&args)?;
    if ns.is_empty() {
        return Err(domain("sweep range is empty"));
    }
    let max_n = *ns.iter().max().expect("nonempty");
    let tables = tables_for_box(max_n)?;
    let method = match args.method {
        MethodArg::Fast => Method::Fast,
        MethodArg::Brute => Method::Brute,
        MethodArg::Both => Method::Fast,
    };
    let samples = density::sweep(&tables, &ns, method)?;
    let mut agree = true;
    if args.method == MethodArg::Both {
        for s in &samples {
            let b = counting::brute_force_counts(s.n)?;
            agree &= b.x_plus == s.x_plus
                && b.y_plus == s.y_plus
                && b.xs == s.xs
                && b.ys == s.ys;
        }
    }
    let records: Vec<Record> = samples
        .iter()
        .map(|s| {
            let plane = matches!(args.what, WhatArg::Plane)
                .then(|| counting::plane_baseline_counts(&tables, s.n))
                .transpose()?;
            let mut rec = sample_record(s, args.what, plane);
            if args.method == MethodArg::Both {
                rec.push(("agree", Cell::Bool(agree)));
            }
            Ok(rec)
        })
        .collect::<Result<_>>()?;
    emit(&args.common, &records)?;
    Ok(if args.method == MethodArg::Both && !agree {
        1
    } else {
        0
    })
}

// ---------------------------------------------------------------------------
// verify

struct SuiteLog {
    lines: Vec<String>,
    failed: bool,
}

impl SuiteLog {
    fn new() -> Self {
        SuiteLog {
            lines: Vec::new(),
            failed: false,
        }
    }

    fn check(&mut self, name: &str, ok: bool, detail: String) {
        let status = if ok { "ok" } else { "FAIL" };
        self.lines.push(format!("{status} {name}: {detail}"));
        self.failed |= !ok;
    }
}

/// Compare every fast counter with the brute-force oracles up to `max_n`,
/// re-derive the surface enumeration from the definitional scan, and check
/// the recurrence identities and region counters.
pub fn run_verification(max_n: u64, log: &mut Vec<String>) -> Result<bool> {
    if max_n == 0 || max_n > BRUTE_LIMIT {
        return Err(domain(format!("--max-n must be in 1..={BRUTE_LIMIT}")));
    }
    let mut suite = SuiteLog::new();
    let tables = ArithTables::build(100_000.max(6 * max_n / 5))?;

    // 1. Fast counts vs the cuboid oracle at every N.
    let oracle = counting::brute_force_reports_up_to(max_n)?;
    let mut bad = None;
    for r in &oracle {
        let fast_x = counting::count_x_plus(&tables, r.n, Method::Fast)?;
        let fast_y = counting::count_y_plus(&tables, r.n, Method::Fast)?;
        let fast_xs = counting::count_xs(&tables, r.n, Method::Fast)?;
        let fast_ys = counting::count_ys(&tables, r.n, Method::Fast)?;
        if (fast_x, fast_y, fast_xs, fast_ys) != (r.x_plus, r.y_plus, r.xs, r.ys) {
            bad = Some(r.n);
            break;
        }
    }
    suite.check(
        "box+surface counts vs cuboid oracle",
        bad.is_none(),
        match bad {
            None => format!("all N <= {max_n} agree"),
            Some(n) => format!("first mismatch at N = {n}"),
        },
    );

    // 2. Plane counts vs the pair-scan oracle.
    let mut bad = None;
    for n in 1..=max_n {
        if counting::plane_baseline_counts(&tables, n)? != counting::plane_baseline_brute(n)? {
            bad = Some(n);
            break;
        }
    }
    suite.check(
        "plane counts vs pair-scan oracle",
        bad.is_none(),
        match bad {
            None => format!("all N <= {max_n} agree"),
            Some(n) => format!("first mismatch at N = {n}"),
        },
    );

    // 3. Surface enumeration vs the definitional point set at every N.
    let mut bad = None;
    'outer: for n in 1..=max_n {
        let enumerated: Vec<Triple> = surface::enumerate_coprime_solutions(n)?
            .map(|(_, _, z)| z)
            .collect();
        let mut sorted = enumerated.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != enumerated.len() {
            bad = Some((n, "duplicates"));
            break;
        }
        let bound = 6 * n / 5;
        let mut brute = Vec::new();
        for z0 in 1..=bound {
            for z2 in 1..=bound {
                let s = z0 * z0 + z2 * z2 - z0 * z2;
                let z1 = s.isqrt();
                if z1 * z1 == s && (1..=n).contains(&z1) {
                    let z = Triple::new(z0, z1, z2);
                    if z.gcd() == 1 {
                        brute.push(z);
                    }
                }
            }
        }
        brute.sort_unstable();
        if brute != sorted {
            bad = Some((n, "set mismatch"));
            break 'outer;
        }
        for z in &sorted {
            if !surface::on_surface(*z)? || z.gcd() != 1 || 3 * z.z0 * z.z0 > 4 * z.z1 * z.z1 {
                bad = Some((n, "invariant"));
                break 'outer;
            }
        }
    }
    suite.check(
        "surface enumeration vs definitional scan",
        bad.is_none(),
        match bad {
            None => format!("all N <= {max_n} agree"),
            Some((n, what)) => format!("{what} at N = {n}"),
        },
    );

    // 4. Classification inverts the parameterization.
    let mut bad = None;
    'cls: for m in 2..=120u64 {
        for n in 1..m {
            if !surface::in_omega(m, n) {
                continue;
            }
            for k in 1..=4u8 {
                let z = surface::phi_map(k, m, n)?;
                let (tag, pair) = surface::classify(z)?;
                if tag.family_index() != Some(k) || pair.map(|p| (p.m, p.n)) != Some((m, n)) {
                    bad = Some((k, m, n));
                    break 'cls;
                }
            }
        }
    }
    suite.check(
        "classification inverts the maps",
        bad.is_none(),
        match bad {
            None => "all m <= 120 round-trip".to_string(),
            Some((k, m, n)) => format!("family {k} fails at ({m},{n})"),
        },
    );

    // 5. Totient recurrences.
    let int_fail = arith::totient_recurrence_first_failure(&tables, 100_000)?;
    suite.check(
        "integer totient recurrence",
        int_fail.is_none(),
        match int_fail {
            None => "exact for all N <= 100000".to_string(),
            Some(n) => format!("first failure at N = {n}"),
        },
    );
    let ratio_fail = arith::ratio_recurrence_first_failure(&tables, 10_000)?;
    suite.check(
        "rational totient recurrence",
        ratio_fail.is_none(),
        match ratio_fail {
            None => "exact for all N <= 10000".to_string(),
            Some(n) => format!("first failure at N = {n}"),
        },
    );

    // 6. Region counters, fast vs brute, on a fixed grid.
    let mut bad = None;
    'reg: for m in [7i64, 50, 311] {
        for (k1, k2, k3) in [
            (Rational64::new(1, 1), Rational64::new(-1, 1), None),
            (Rational64::new(3, 2), Rational64::new(-1, 2), None),
            (Rational64::new(2, 7), Rational64::new(-5, 3), Some(Rational64::new(9, 4))),
            (Rational64::new(1, 1), Rational64::new(0, 1), Some(Rational64::new(3, 1))),
        ] {
            let region = match k3 {
                Some(k3) => TriangleRegion::with_cut(m, k1, k2, k3)?,
                None => TriangleRegion::new(m, k1, k2)?,
            };
            let (fast, brute) = match k3 {
                Some(_) => (
                    regions::count_region_cut(&tables, &region, Method::Fast)?,
                    regions::count_region_cut(&tables, &region, Method::Brute)?,
                ),
                None => (
                    regions::count_region(&tables, &region, Method::Fast)?,
                    regions::count_region(&tables, &region, Method::Brute)?,
                ),
            };
            if fast != brute {
                bad = Some(region);
                break 'reg;
            }
        }
    }
    suite.check(
        "region counts fast vs brute",
        bad.is_none(),
        match bad {
            None => "grid agrees".to_string(),
            Some(r) => format!("mismatch on {r:?}"),
        },
    );

    // 7. Box mod-p counts, fast vs brute.
    let mut bad = None;
    for p in [2u64, 3, 5] {
        for size in [1u64, 17, 100, 500] {
            if regions::count_coprime_box_modp(&tables, size, p, Method::Fast)?
                != regions::count_coprime_box_modp(&tables, size, p, Method::Brute)?
            {
                bad = Some((p, size));
            }
        }
    }
    suite.check(
        "box mod-p counts fast vs brute",
        bad.is_none(),
        match bad {
            None => "grid agrees".to_string(),
            Some((p, size)) => format!("mismatch at p={p}, size={size}"),
        },
    );

    // 8. Two-sided region bound on the surface pair count.
    let s = counting::surface_pair_sandwich(&tables, 10_000)?;
    suite.check(
        "surface pair sandwich",
        s.lower <= s.pairs && s.pairs <= s.upper,
        format!("{} <= {} <= {} at N = 10^4", s.lower, s.pairs, s.upper),
    );

    log.extend(suite.lines);
    Ok(!suite.failed)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    let mut lines = Vec::new();
    let ok = run_verification(args.max_n, &mut lines)?;
    let mut text = String::new();
    for line in &lines {
        writeln!(text, "{line}").expect("string write");
    }
    writeln!(text, "{}", if ok { "PASS" } else { "FAIL" }).expect("string write");
    match &args.common.out {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| domain(format!("writing {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(if ok { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// regions

fn cmd_regions(args: RegionsArgs) -> Result<u8> {
    if args.m < 1 {
        return Err(domain("--m must be a positive integer"));
    }
    if let Some(p) = args.p {
        let size = args.m as u64;
        let tables = ArithTables::build(size.max(2))?;
        let run = |method| regions::count_coprime_box_modp(&tables, size, p, method);
        let (count, brute) = match args.method {
            MethodArg::Fast => (run(Method::Fast)?, None),
            MethodArg::Brute => (run(Method::Brute)?, None),
            MethodArg::Both => (run(Method::Fast)?, Some(run(Method::Brute)?)),
        };
        let density_limit =
            p as f64 / (p as f64 + 1.0) * 6.0 / (std::f64::consts::PI * std::f64::consts::PI);
        let mut rec: Record = vec![
            ("M", Cell::Int(size as u128)),
            ("p", Cell::Int(p as u128)),
            ("count", Cell::Int(count as u128)),
            ("density", Cell::Float(count as f64 / (size as f64 * size as f64))),
            ("density_limit", Cell::Float(density_limit)),
        ];
        let agree = brute.map(|b| b == count);
        if let Some(a) = agree {
            rec.push(("agree", Cell::Bool(a)));
        }
        emit(&args.common, &[rec])?;
        return Ok(if agree == Some(false) { 1 } else { 0 });
    }

    let (Some(k1), Some(k2)) = (args.k1, args.k2) else {
        return Err(domain("triangle regions need --k1 and --k2 (or use --p)"));
    };
    let region = match args.k3 {
        Some(k3) => TriangleRegion::with_cut(args.m, k1, k2, k3)?,
        None => TriangleRegion::new(args.m, k1, k2)?,
    };
    let rows = region.row_count().max(0) as u64;
    let tables = ArithTables::build(rows.max(2))?;
    let run = |method| match args.k3 {
        Some(_) => regions::count_region_cut(&tables, &region, method),
        None => regions::count_region(&tables, &region, method),
    };
    let (count, brute) = match args.method {
        MethodArg::Fast => (run(Method::Fast)?, None),
        MethodArg::Brute => (run(Method::Brute)?, None),
        MethodArg::Both => (run(Method::Fast)?, Some(run(Method::Brute)?)),
    };
    let (pred_total, pred_distinct) = regions::asymptotic_prediction(&region);
    let ratio_str = |r: Rational64| {
        if *r.denom() == 1 {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    };
    let mut rec: Record = vec![
        ("M", Cell::Int(args.m as u128)),
        ("k1", Cell::Text(ratio_str(k1))),
        ("k2", Cell::Text(ratio_str(k2))),
    ];
    if let Some(k3) = args.k3 {
        rec.push(("k3", Cell::Text(ratio_str(k3))));
    }
    rec.push(("total_coprime", Cell::Int(count.total_coprime as u128)));
    if args.mod3 {
        rec.push((
            "coprime_mod3_distinct",
            Cell::Int(count.coprime_mod3_distinct as u128),
        ));
        rec.push((
            "coprime_mod3_equal",
            Cell::Int(count.coprime_mod3_equal as u128),
        ));
    }
    rec.push(("area", Cell::Float(region.area())));
    rec.push(("predicted_total", Cell::Float(pred_total)));
    if args.mod3 {
        rec.push(("predicted_distinct", Cell::Float(pred_distinct)));
    }
    let agree = brute.map(|b| b == count);
    if let Some(a) = agree {
        rec.push(("agree", Cell::Bool(a)));
    }
    emit(&args.common, &[rec])?;
    Ok(if agree == Some(false) { 1 } else { 0 })
}

// ---------------------------------------------------------------------------
// classify / enumerate / charpoly / constants

fn cmd_classify(args: ClassifyArgs) -> Result<u8> {
    let [z0, z1, z2]: [u64; 3] = args
        .triple
        .as_slice()
        .try_into()
        .map_err(|_| domain("--triple needs exactly three coordinates"))?;
    let z = Triple::new(z0, z1, z2);
    let (tag, pair) = surface::classify(z)?;
    let mut rec: Record = vec![
        ("z0", Cell::Int(z0 as u128)),
        ("z1", Cell::Int(z1 as u128)),
        ("z2", Cell::Int(z2 as u128)),
        ("family", Cell::Text(tag.name().to_string())),
    ];
    if let Some(p) = pair {
        rec.push(("m", Cell::Int(p.m as u128)));
        rec.push(("n", Cell::Int(p.n as u128)));
    }
    emit(&args.common, &[rec])?;
    Ok(0)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8> {
    let records: Vec<Record> = surface::enumerate_coprime_solutions(args.n)?
        .map(|(tag, pair, z)| {
            let mut rec: Record = vec![("family", Cell::Text(tag.name().to_string()))];
            match pair {
                Some(p) => {
                    rec.push(("m", Cell::Int(p.m as u128)));
                    rec.push(("n", Cell::Int(p.n as u128)));
                }
                None => {
                    rec.push(("m", Cell::OptFloat(None)));
                    rec.push(("n", Cell::OptFloat(None)));
                }
            }
            rec.push(("z0", Cell::Int(z.z0 as u128)));
            rec.push(("z1", Cell::Int(z.z1 as u128)));
            rec.push(("z2", Cell::Int(z.z2 as u128)));
            rec
        })
        .collect();
    emit(&args.common, &records)?;
    Ok(0)
}

fn cmd_charpoly(args: CharpolyArgs) -> Result<u8> {
    let theta = args.angle_deg.to_radians();
    let poly = surface::dihedral_char_poly(theta);
    let rec: Record = vec![
        ("angle_deg", Cell::Float(args.angle_deg)),
        ("c00", Cell::Float(poly.c00)),
        ("c11", Cell::Float(poly.c11)),
        ("c22", Cell::Float(poly.c22)),
        ("c02", Cell::Float(poly.c02)),
    ];
    emit(&args.common, &[rec])?;
    Ok(0)
}

fn cmd_constants(args: ConstantsArgs) -> Result<u8> {
    let c = density::constants();
    let rec: Record = vec![
        ("zeta2", Cell::Float(c.zeta2)),
        ("zeta3", Cell::Float(c.zeta3)),
        ("three_zeta3", Cell::Float(c.three_zeta3)),
        ("lower_norm", Cell::Float(c.lower_norm)),
        ("upper_norm", Cell::Float(c.upper_norm)),
        ("liminf_bound", Cell::Float(c.liminf_bound)),
        ("limsup_bound", Cell::Float(c.limsup_bound)),
        ("ys_lower", Cell::Float(c.ys_lower)),
        ("ys_upper", Cell::Float(c.ys_upper)),
        ("plane_ratio", Cell::Float(c.plane_ratio)),
    ];
    emit(&args.common, &[rec])?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig10_formatting() {
        assert_eq!(fmt_sig10(0.0), "0");
        assert_eq!(fmt_sig10(1.0), "1");
        assert_eq!(fmt_sig10(-2.5), "-2.5");
        assert_eq!(fmt_sig10(0.912292), "0.912292");
        assert_eq!(fmt_sig10(15198000.0), "15198000");
        assert_eq!(fmt_sig10(1e12), "1e12");
        assert_eq!(fmt_sig10(1.25e-7), "1.25e-7");
        assert_eq!(fmt_sig10(3.60617071), "3.60617071");
        assert_eq!(fmt_sig10(1.0 / 3.0), "0.3333333333");
        assert_eq!(fmt_sig10(123456789012.0), "1.23456789e11");
    }

    #[test]
    fn ratio_parsing() {
        assert_eq!(parse_ratio("1").unwrap(), Rational64::new(1, 1));
        assert_eq!(parse_ratio("-1/2").unwrap(), Rational64::new(-1, 2));
        assert_eq!(parse_ratio("6/4").unwrap(), Rational64::new(3, 2));
        assert!(parse_ratio("1/0").is_err());
        assert!(parse_ratio("x").is_err());
    }

    #[test]
    fn csv_and_json_rendering() {
        let rec: Record = vec![
            ("N", Cell::Int(10)),
            ("big", Cell::Int(1 << 60)),
            ("ratio", Cell::OptFloat(None)),
            ("name", Cell::Text("delta1".into())),
        ];
        let csv = render(std::slice::from_ref(&rec), FormatArg::Csv);
        assert_eq!(csv, "N,big,ratio,name\n10,1152921504606846976,,delta1\n");
        let json = render(&[rec], FormatArg::Json);
        assert_eq!(
            json,
            "{\"N\":10,\"big\":\"1152921504606846976\",\"ratio\":null,\"name\":\"delta1\"}\n"
        );
    }

    #[test]
    fn verification_passes_at_small_n() {
        let mut lines = Vec::new();
        let ok = run_verification(40, &mut lines).unwrap();
        assert!(ok, "verification failed:\n{}", lines.join("\n"));
        assert_eq!(lines.len(), 9);
    }
}
