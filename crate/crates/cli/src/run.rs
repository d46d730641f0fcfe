//! Subcommand definitions and dispatch.

use std::fs;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand};

use pinwheel_forge_core::fpgroups::{
    build_family_presentation, verify_trivial, FamilyParams, TrivialityVerdict,
};
use pinwheel_forge_core::pinwheel::{
    catalog_lookup, monodromy_check, validate_pinwheel, MonodromyClass, CATALOG_NAMES,
};
use pinwheel_forge_core::swkit::{
    distinguishing_invariant, enumerate_basic_classes, k2_constraints, k3_constraints,
    minimality_check, mms_family, LaurentPoly, MinimalityOutcome,
};
use pinwheel_forge_core::torus_actions::{
    barycentric_pinwheel, classify_action, parse_orbit_data, sphere_geometry,
};

use crate::jsonio;
use crate::pretty;
use crate::report::{self, DEFAULT_MAX_COSETS};
use crate::{EXIT_CHECK_FAILED, EXIT_USAGE};

pub const MAX_COSETS_ENV: &str = "PINWHEEL_FORGE_MAX_COSETS";

#[derive(Parser)]
#[command(
    name = "pinwheel-forge",
    about = "Verification toolkit for pinwheel decompositions, torus actions, \
             fundamental-group triviality, and surgery bookkeeping",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pinwheel structure checks.
    Pinwheel {
        #[command(subcommand)]
        command: PinwheelCmd,
    },
    /// Torus-action orbit data.
    Orbit {
        #[command(subcommand)]
        command: OrbitCmd,
    },
    /// Fundamental-group verification.
    Pi1 {
        #[command(subcommand)]
        command: Pi1Cmd,
    },
    /// Seiberg-Witten bookkeeping.
    Sw {
        #[command(subcommand)]
        command: SwCmd,
    },
    /// Reports.
    Report {
        #[command(subcommand)]
        command: ReportCmd,
    },
}

#[derive(Subcommand)]
enum PinwheelCmd {
    /// Validate a catalog entry, an explicit step sequence, or a serialized
    /// pinwheel file.
    Check(PinwheelCheckArgs),
}

#[derive(Args)]
struct PinwheelCheckArgs {
    /// Catalog name (see `pinwheel check --list`).
    name: Option<String>,
    /// Comma-separated step sequence a_i = n_i + m_(i+1), e.g. `-1,-1,-1`.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    a: Option<String>,
    /// Validate a pinwheel serialized as JSON.
    #[arg(long, value_name = "FILE")]
    file: Option<String>,
    /// Print the catalog entry in its JSON form.
    #[arg(long)]
    emit_json: bool,
    /// List catalog names.
    #[arg(long)]
    list: bool,
}

#[derive(Subcommand)]
enum OrbitCmd {
    /// Validate orbit data and classify the manifold it describes.
    Classify(OrbitArgs),
    /// Synthesize the barycentric pinwheel structure of a torus action.
    Pinwheel(OrbitArgs),
}

#[derive(Args)]
struct OrbitArgs {
    /// Semicolon-separated pairs, e.g. `(1,-1);(0,1);(1,-1);(2,-1)`.
    #[arg(long, value_name = "PAIRS")]
    data: String,
}

#[derive(Subcommand)]
enum Pi1Cmd {
    /// Verify triviality for a presentation family, a DSL string, or a file.
    Verify(Pi1Args),
}

#[derive(Args)]
struct Pi1Args {
    /// Family selector k (one of 2, 3, 4, 7).
    #[arg(long)]
    family: Option<u32>,
    /// Surgery parameter range, e.g. `1..5` or `3`.
    #[arg(long, default_value = "1..5")]
    n: String,
    /// Conjugation exponent range for k = 2, 4.
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    kappa: String,
    /// Inline presentation in the DSL, e.g. `gens: a ; rels: a^3`.
    #[arg(long, value_name = "TEXT", conflicts_with = "family")]
    presentation: Option<String>,
    /// Read the presentation from a UTF-8 file (# comments allowed).
    #[arg(long, value_name = "FILE", conflicts_with_all = ["family", "presentation"])]
    file: Option<String>,
    /// Coset budget for the enumeration.
    #[arg(long)]
    max_cosets: Option<usize>,
}

#[derive(Subcommand)]
enum SwCmd {
    /// Enumerate basic classes for a shipped constraint case.
    BasicClasses(SwBasicArgs),
    /// Evaluate the surgery family f_inf + n f_0 over a range of n.
    Family(SwFamilyArgs),
}

#[derive(Args)]
struct SwBasicArgs {
    /// One of `k2`, `k3`.
    #[arg(long)]
    case: String,
}

#[derive(Args)]
struct SwFamilyArgs {
    /// The family slope, e.g. `t^-1 - t`.
    #[arg(long, allow_hyphen_values = true)]
    f0: String,
    /// The base member, e.g. `0`.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    finf: String,
    /// Range of n, e.g. `1..10`.
    #[arg(long, default_value = "1..10", allow_hyphen_values = true)]
    n: String,
}

#[derive(Subcommand)]
enum ReportCmd {
    /// Run the complete verification suite.
    Paper(ReportArgs),
    /// Print the JSON schema for report documents.
    Schema,
}

#[derive(Args)]
struct ReportArgs {
    /// Also write the report as JSON to this file.
    #[arg(long, value_name = "FILE")]
    json: Option<String>,
    /// Coset budget for the fundamental-group checks.
    #[arg(long)]
    max_cosets: Option<usize>,
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

/// Inclusive `a..b` ranges, or a single value.
fn parse_range(text: &str) -> Result<RangeInclusive<i64>, String> {
    let parse_int =
        |s: &str| s.trim().parse::<i64>().map_err(|_| format!("bad integer `{}` in range", s));
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse_int(a)?, parse_int(b)?);
            if a > b {
                return Err(format!("empty range `{text}`"));
            }
            Ok(a..=b)
        }
        None => {
            let v = parse_int(text)?;
            Ok(v..=v)
        }
    }
}

fn max_cosets_from(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var(MAX_COSETS_ENV).ok().and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_MAX_COSETS)
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message; keep its exit code contract
            // (0 for --help/--version, 2 for usage errors).
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Pinwheel { command: PinwheelCmd::Check(args) } => pinwheel_check(args),
        Command::Orbit { command } => match command {
            OrbitCmd::Classify(args) => orbit_classify(&args.data),
            OrbitCmd::Pinwheel(args) => orbit_pinwheel(&args.data),
        },
        Command::Pi1 { command: Pi1Cmd::Verify(args) } => pi1_verify(args),
        Command::Sw { command } => match command {
            SwCmd::BasicClasses(args) => sw_basic_classes(&args.case),
            SwCmd::Family(args) => sw_family(args),
        },
        Command::Report { command } => match command {
            ReportCmd::Paper(args) => report_paper(args),
            ReportCmd::Schema => {
                println!("{}", report::report_schema());
                0
            }
        },
    }
}

fn pinwheel_check(args: PinwheelCheckArgs) -> i32 {
    if args.list {
        for name in CATALOG_NAMES {
            println!("{name}");
        }
        return 0;
    }
    if let Some(list) = args.a {
        let steps: Result<Vec<i64>, _> =
            list.split(',').map(|s| s.trim().parse::<i64>()).collect();
        let Ok(steps) = steps else {
            return usage_error(&format!("bad step list `{list}`"));
        };
        if steps.is_empty() {
            return usage_error("step list is empty");
        }
        let class = monodromy_check(&steps);
        let (label, ok) = match &class {
            MonodromyClass::PlusId => ("PlusId".to_string(), true),
            MonodromyClass::MinusId => ("MinusId".to_string(), true),
            MonodromyClass::Neither(m) => (format!("Neither({m})"), false),
        };
        println!("steps {steps:?}: {label} -> {}", pretty::pass_fail(ok));
        return if ok { 0 } else { EXIT_CHECK_FAILED };
    }
    let pinwheel = if let Some(path) = &args.file {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return usage_error(&format!("cannot read {path}: {e}")),
        };
        let parsed: jsonio::PinwheelJson = match serde_json::from_str(&text) {
            Ok(p) => p,
            Err(e) => return usage_error(&format!("bad pinwheel JSON: {e}")),
        };
        match jsonio::pinwheel_from_json(&parsed) {
            Ok(p) => (parsed.name, p, None),
            Err(e) => return usage_error(&e),
        }
    } else if let Some(name) = &args.name {
        match catalog_lookup(name) {
            Ok(entry) => (entry.name.to_string(), entry.pinwheel.clone(), entry.incomplete),
            Err(e) => return usage_error(&e.to_string()),
        }
    } else {
        return usage_error("give a catalog name, --a steps, or --file");
    };
    let (name, p, incomplete) = pinwheel;
    if args.emit_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&jsonio::pinwheel_to_json(&name, &p))
                .expect("pinwheel serializes")
        );
    }
    if let Some(reason) = incomplete {
        println!("{name}: incomplete catalog slot ({reason}); structural checks skipped");
        return 0;
    }
    let report = validate_pinwheel(&p);
    print!("{name}:\n{report}");
    println!("-> {}", pretty::pass_fail(report.passed()));
    if report.passed() {
        0
    } else {
        EXIT_CHECK_FAILED
    }
}

fn orbit_classify(data: &str) -> i32 {
    let d = match parse_orbit_data(data) {
        Ok(d) => d,
        Err(e) => return usage_error(&e.to_string()),
    };
    let config = match sphere_geometry(&d) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CHECK_FAILED;
        }
    };
    println!("spheres A_i^2 = {:?}, b2 = {}", config.self_ints, config.b2());
    match classify_action(&d) {
        Ok(c) => {
            println!("{}", pretty::classification(&c));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_CHECK_FAILED
        }
    }
}

fn orbit_pinwheel(data: &str) -> i32 {
    let d = match parse_orbit_data(data) {
        Ok(d) => d,
        Err(e) => return usage_error(&e.to_string()),
    };
    match barycentric_pinwheel(&d) {
        Ok(p) => {
            let name = format!("barycentric({d})");
            println!(
                "{}",
                serde_json::to_string_pretty(&jsonio::pinwheel_to_json(&name, &p))
                    .expect("pinwheel serializes")
            );
            let report = validate_pinwheel(&p);
            print!("{report}");
            println!("-> {}", pretty::pass_fail(report.passed()));
            if report.passed() {
                0
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_CHECK_FAILED
        }
    }
}

fn pi1_verify(args: Pi1Args) -> i32 {
    let max_cosets = max_cosets_from(args.max_cosets);

    if args.presentation.is_some() || args.file.is_some() {
        let text = match (&args.presentation, &args.file) {
            (Some(t), _) => t.clone(),
            (None, Some(path)) => match fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return usage_error(&format!("cannot read {path}: {e}")),
            },
            _ => unreachable!("clap enforces one source"),
        };
        let p = match pinwheel_forge_core::fpgroups::parse_presentation(&text) {
            Ok(p) => p,
            Err(e) => return usage_error(&e.to_string()),
        };
        let verdict = verify_trivial(&p, max_cosets);
        println!("{verdict:?}");
        return match verdict {
            TrivialityVerdict::Trivial => 0,
            _ => EXIT_CHECK_FAILED,
        };
    }

    let Some(k) = args.family else {
        return usage_error("give --family or --presentation/--file");
    };
    let n_range = match parse_range(&args.n) {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    let kappa_range = match parse_range(&args.kappa) {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    let kappas: Vec<Option<i64>> = if k == 2 || k == 4 {
        kappa_range.map(Some).collect()
    } else {
        vec![None]
    };

    let mut all_ok = true;
    for n in n_range {
        for &kappa in &kappas {
            let params = FamilyParams { k, n, kappa };
            let p = match build_family_presentation(params) {
                Ok(p) => p,
                Err(e) => return usage_error(&e.to_string()),
            };
            let verdict = verify_trivial(&p, max_cosets);
            let ok = verdict == TrivialityVerdict::Trivial;
            all_ok &= ok;
            match kappa {
                Some(kp) => println!("k={k} n={n} kappa={kp}: {verdict:?}"),
                None => println!("k={k} n={n}: {verdict:?}"),
            }
        }
    }
    if all_ok {
        0
    } else {
        EXIT_CHECK_FAILED
    }
}

fn sw_basic_classes(case: &str) -> i32 {
    let (lattice, constraints, c_square) = match case {
        "k2" => k2_constraints(),
        "k3" => k3_constraints(),
        other => return usage_error(&format!("unknown case `{other}` (expected k2 or k3)")),
    };
    let found = match enumerate_basic_classes(&lattice, &constraints, c_square, 5) {
        Ok(f) => f,
        Err(e) => return usage_error(&e.to_string()),
    };
    println!("c^2 = {c_square}, rank {}", lattice.rank);
    for c in &found.classes {
        println!("  {c} (square {})", c.square());
    }
    if !found.unconfined.is_empty() {
        println!("warning: coordinates {:?} not confined by the constraints", found.unconfined);
    }
    match minimality_check(&found.classes) {
        Ok(MinimalityOutcome::Minimal { difference_squares }) => {
            println!("minimal (difference squares {difference_squares:?})");
            0
        }
        Ok(MinimalityOutcome::PossiblyNonminimal { pair }) => {
            println!("possibly nonminimal: ({}, {}) differ by square -4", pair.0, pair.1);
            EXIT_CHECK_FAILED
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_CHECK_FAILED
        }
    }
}

fn sw_family(args: SwFamilyArgs) -> i32 {
    let f0: LaurentPoly = match args.f0.parse() {
        Ok(p) => p,
        Err(e) => return usage_error(&format!("--f0: {e}")),
    };
    let finf: LaurentPoly = match args.finf.parse() {
        Ok(p) => p,
        Err(e) => return usage_error(&format!("--finf: {e}")),
    };
    let range = match parse_range(&args.n) {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    for n in range {
        let f = mms_family(&finf, &f0, n);
        println!("n = {n}: {f}  (max |coeff| = {})", distinguishing_invariant(&f));
    }
    0
}

fn report_paper(args: ReportArgs) -> i32 {
    let max_cosets = max_cosets_from(args.max_cosets);
    let report = report::paper_report(max_cosets);
    print!("{}", report::render_text(&report));
    if let Some(path) = args.json {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        if let Err(e) = fs::write(&path, text) {
            eprintln!("error: cannot write {path}: {e}");
            return EXIT_USAGE;
        }
        println!("report written to {path}");
    }
    if report.all_passed() {
        0
    } else {
        EXIT_CHECK_FAILED
    }
}
