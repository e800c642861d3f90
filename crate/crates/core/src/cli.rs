//! Command-line front end. Every subcommand reads one JSON document (a
//! quiver or a presentation) and writes JSON, or DOT where offered.
//!
//! Exit codes: 0 on success, 1 on malformed input or usage errors, 2 when a
//! precondition of the requested operation fails. Failures print
//! `{"error", "detail", "witness"?}` on standard output.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{normalize_coefficients, standard_relations, Presentation};
use crate::cuts::{cut_containing, enumerate_admissible_cuts, quotient_by_cut, verify_cut_quotient, AdmissibleCut};
use crate::cycles::{enumerate_chordless_cycles, is_cyclically_oriented};
use crate::error::Error;
use crate::extension::{check_cut_theorem, relation_extension_quiver_with};
use crate::fixtures::{fixture, fixtures};
use crate::forms::{classify, format_polynomial, quasi_cartan_companions};
use crate::mutation::mutate;
use crate::quiver::Quiver;

#[derive(Parser, Debug)]
#[command(name = "quiverforge", version, about = "Exact tools for cyclically oriented quivers and their algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Source {
    /// JSON file to read, or `-` for standard input.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Use a built-in fixture instead of reading input.
    #[arg(long, global = true, conflicts_with = "input")]
    fixture: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report loops, 2-cycles and multiple arrows.
    Validate(Source),
    /// List chordless cycles.
    Cycles(Source),
    /// Decide whether every chordless cycle is oriented.
    CyclicCheck(Source),
    /// Standard relations of a cyclically oriented quiver.
    Relations(Source),
    /// Rescale arrows to bring relations to standard form.
    Normalize(Source),
    /// Admissible cuts: enumerate, find one through an arrow, or take a quotient.
    Cuts(CutsArgs),
    /// Relation-extension quiver of a presentation.
    Extend(ExtendArgs),
    /// Round trip through every cut of a cyclically oriented quiver.
    CheckTheorem(Source),
    /// Mutate at a vertex.
    Mutate(MutateArgs),
    /// Cartan matrix, Euler form, roots, type and Coxeter polynomial.
    Classify(ClassifyArgs),
    /// List fixtures, or print one with `--fixture`.
    Fixtures(Source),
    /// Graphviz rendering of a quiver.
    Dot(Source),
}

#[derive(Args, Debug)]
struct CutsArgs {
    #[command(flatten)]
    source: Source,
    /// Enumerate all admissible cuts (the default).
    #[arg(long, conflicts_with_all = ["containing", "quotient"])]
    enumerate: bool,
    /// Find a cut containing this arrow.
    #[arg(long, value_name = "ARROW")]
    containing: Option<String>,
    /// Quotient of the standard algebra by this comma-separated cut.
    #[arg(long, value_name = "ARROWS", value_delimiter = ',', num_args = 0..)]
    quotient: Option<Vec<String>>,
}

#[derive(Args, Debug)]
struct ExtendArgs {
    #[command(flatten)]
    source: Source,
    /// Accept quivers with oriented cycles.
    #[arg(long)]
    allow_cycles: bool,
}

#[derive(Args, Debug)]
struct MutateArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    vertex: String,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    source: Source,
    /// Search quasi-Cartan companions of the quiver instead.
    #[arg(long)]
    companions: bool,
}

enum Failure {
    Usage(String),
    Input(String),
    Op(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Malformed(m) => Failure::Input(m),
            other => Failure::Op(other),
        }
    }
}

enum Output {
    Json(Value),
    Text(String),
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable output")
}

/// Runs the command line against real standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the command line against the given streams and returns the exit code.
pub fn run_with<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return code;
        }
    };
    let (code, out) = match execute(cli.command, stdin) {
        Ok(out) => (0, out),
        Err(Failure::Usage(detail)) => (1, Output::Json(json!({"error": "usage", "detail": detail}))),
        Err(Failure::Input(detail)) => (1, Output::Json(json!({"error": "malformed", "detail": detail}))),
        Err(Failure::Op(e)) => {
            let mut v = json!({"error": e.kind(), "detail": e.to_string()});
            if let Some(w) = e.witness() {
                v["witness"] = to_value(&w);
            }
            (2, Output::Json(v))
        }
    };
    let written = match out {
        Output::Json(v) => writeln!(stdout, "{}", serde_json::to_string_pretty(&v).expect("json")),
        Output::Text(t) => write!(stdout, "{t}"),
    };
    if written.is_err() {
        return 1;
    }
    code
}

/// A parsed input document.
struct Document {
    presentation: Presentation,
}

impl Document {
    fn quiver(&self) -> &Quiver {
        self.presentation.quiver()
    }
}

fn load(source: &Source, stdin: &mut dyn Read) -> Result<Document, Failure> {
    if let Some(name) = &source.fixture {
        let f = fixture(name).ok_or_else(|| Failure::Usage(format!("unknown fixture `{name}`")))?;
        return Ok(Document {
            presentation: f.presentation,
        });
    }
    let text = match source.input.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
            s
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read `{path}`: {e}")))?,
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("invalid JSON: {e}")))?;
    let presentation = if value.get("quiver").is_some() {
        serde_json::from_value::<Presentation>(value).map_err(|e| Failure::Input(e.to_string()))?
    } else {
        Presentation::free(serde_json::from_value::<Quiver>(value).map_err(|e| Failure::Input(e.to_string()))?)
    };
    Ok(Document { presentation })
}

fn quiver_output(q: &Quiver, format: Format) -> Output {
    match format {
        Format::Json => Output::Json(to_value(q)),
        Format::Dot => Output::Text(q.to_dot()),
    }
}

fn json_only(format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => Ok(()),
        Format::Dot => Err(Failure::Usage("this subcommand only emits JSON".into())),
    }
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Output, Failure> {
    match command {
        Command::Validate(s) => {
            json_only(s.format)?;
            let doc = load(&s, stdin)?;
            let report = doc.quiver().validate();
            let mut v = to_value(&report);
            v["cluster_quiver"] = json!(report.is_cluster_quiver());
            v["simple"] = json!(report.is_simple());
            v["violations"] = to_value(&report.violations());
            Ok(Output::Json(v))
        }
        Command::Cycles(s) => {
            json_only(s.format)?;
            let doc = load(&s, stdin)?;
            let cycles = enumerate_chordless_cycles(doc.quiver())?;
            let list: Vec<Value> = cycles
                .iter()
                .map(|c| json!({"vertices": c.vertices(), "arrows": c.arrows(), "oriented": c.is_oriented()}))
                .collect();
            Ok(Output::Json(json!({ "cycles": list })))
        }
        Command::CyclicCheck(s) => {
            json_only(s.format)?;
            let doc = load(&s, stdin)?;
            let check = is_cyclically_oriented(doc.quiver())?;
            let mut v = json!({"cyclically_oriented": check.cyclically_oriented});
            if let Some(w) = check.witness {
                v["witness"] = to_value(&w.vertices());
            }
            Ok(Output::Json(v))
        }
        Command::Relations(s) => {
            json_only(s.format)?;
            let doc = load(&s, stdin)?;
            Ok(Output::Json(to_value(&standard_relations(doc.quiver())?)))
        }
        Command::Normalize(s) => {
            json_only(s.format)?;
            let doc = load(&s, stdin)?;
            Ok(Output::Json(to_value(&normalize_coefficients(&doc.presentation)?)))
        }
        Command::Cuts(args) => {
            json_only(args.source.format)?;
            let doc = load(&args.source, stdin)?;
            let q = doc.quiver();
            if let Some(alpha) = args.containing {
                let cut = cut_containing(q, &alpha)?;
                return Ok(Output::Json(json!({ "cut": cut.arrows() })));
            }
            if let Some(arrows) = args.quotient {
                let cut = AdmissibleCut::new(q, &arrows)?;
                let a = quotient_by_cut(&standard_relations(q)?, &cut)?;
                let report = verify_cut_quotient(&a);
                return Ok(Output::Json(json!({
                    "cut": cut.arrows(),
                    "quotient": to_value(&a),
                    "report": to_value(&report),
                    "passed": report.passed(),
                })));
            }
            let all = enumerate_admissible_cuts(q)?;
            let cuts: Vec<&[String]> = all.iter().map(AdmissibleCut::arrows).collect();
            Ok(Output::Json(json!({ "count": cuts.len(), "cuts": cuts })))
        }
        Command::Extend(args) => {
            json_only(args.source.format)?;
            let doc = load(&args.source, stdin)?;
            Ok(Output::Json(to_value(&relation_extension_quiver_with(
                &doc.presentation,
                args.allow_cycles,
            )?)))
        }
        Command::CheckTheorem(s) => {
            json_only(s.format)?;
            let doc = load(&s, stdin)?;
            let reports = check_cut_theorem(doc.quiver())?;
            let passed = reports.iter().all(|r| r.passed);
            Ok(Output::Json(json!({"cuts": to_value(&reports), "all_passed": passed})))
        }
        Command::Mutate(args) => {
            let doc = load(&args.source, stdin)?;
            Ok(quiver_output(&mutate(doc.quiver(), &args.vertex)?, args.source.format))
        }
        Command::Classify(args) => {
            json_only(args.source.format)?;
            let doc = load(&args.source, stdin)?;
            if args.companions {
                return Ok(Output::Json(to_value(&quasi_cartan_companions(doc.quiver())?)));
            }
            let c = classify(&doc.presentation)?;
            Ok(Output::Json(json!({
                "cartan": c.cartan.entries,
                "form": to_value(&c.form),
                "definiteness": to_value(&c.form.definiteness),
                "corank": c.corank,
                "roots": c.roots,
                "delta": c.delta.as_ref().map(|d| d.iter().map(ToString::to_string).collect::<Vec<_>>()),
                "type": c.label.to_string(),
                "coxeter_polynomial": format_polynomial(&c.coxeter_polynomial),
                "coxeter_coefficients": c.coxeter_polynomial.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "diagnostics": c.diagnostics,
            })))
        }
        Command::Fixtures(s) => {
            json_only(s.format)?;
            if let Some(name) = &s.fixture {
                let f = fixture(name).ok_or_else(|| Failure::Usage(format!("unknown fixture `{name}`")))?;
                return Ok(Output::Json(to_value(&f)));
            }
            let list: Vec<Value> = fixtures()
                .iter()
                .map(|f| json!({"name": f.name, "description": f.description}))
                .collect();
            Ok(Output::Json(json!({ "fixtures": list })))
        }
        Command::Dot(s) => {
            let doc = load(&s, stdin)?;
            Ok(Output::Text(doc.quiver().to_dot()))
        }
    }
}
