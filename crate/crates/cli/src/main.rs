//! `hgtheta`: validate rectangular Heegaard diagrams and compute Θ exactly.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heegaard_theta::diagram::{
    enumerate_matchings, validate_diagram, BasepointChoice, CombinatorialDiagram, CurveRef,
    DiagramData, DiagramError, Matching,
};
use heegaard_theta::invariants::{lk_parallel, ThetaReport};
use heegaard_theta::layout::{
    parse_layout, render_svg, validate_layout, LayoutError, RectLayout, SvgOptions,
};
use heegaard_theta::rational::Rational;
use heegaard_theta::{compute, theta, Computation, ComputeRequest, ThetaError};
use serde_json::{json, Value};

const EXIT_INVALID: u8 = 1;
const EXIT_NOT_QSPHERE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_MISMATCH: u8 = 4;
const EXIT_CAP: u8 = 5;
const EXIT_IO: u8 = 6;

#[derive(Parser)]
#[command(
    name = "hgtheta",
    version,
    about = "Exact Θ-invariant of rational homology spheres from Heegaard diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a layout (or combinatorial diagram) against the drawing conventions.
    Validate(Common),
    /// Compute ℓ₂, lk, e and Θ.
    Compute(Common),
    /// List the matchings of the diagram with lk for each.
    Matchings(Common),
    /// Draw a layout as SVG.
    Render {
        #[command(flatten)]
        common: Common,
        /// Pixels per layout unit.
        #[arg(long, default_value_t = 20.0)]
        scale: f64,
        #[arg(long)]
        no_labels: bool,
    },
    /// Print every term of the computation.
    Explain(Common),
}

#[derive(Args)]
struct Common {
    /// A .hgr layout, or a combinatorial diagram (JSON with `alpha_orders`).
    input: PathBuf,
    /// Matching crossing ids, e.g. `c,e`.
    #[arg(long, value_delimiter = ',')]
    matching: Option<Vec<String>>,
    /// Basepoint overrides, e.g. `alpha_1=d,beta_2=h`.
    #[arg(long, value_delimiter = ',', value_parser = parse_basepoint)]
    basepoints: Vec<(CurveRef, String)>,
    /// Casson-Walker λ as `p/q`; adds p1 = 4Θ − 24λ.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<Rational>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Maximum number of matchings to enumerate.
    #[arg(long, default_value_t = 10_000)]
    cap: usize,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also show rounded decimal values (approximate).
    #[arg(long)]
    decimal: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn parse_basepoint(s: &str) -> Result<(CurveRef, String), String> {
    let (curve, id) = s
        .split_once('=')
        .ok_or_else(|| format!("expected curve=crossing, got {s:?}"))?;
    Ok((curve.parse()?, id.trim().to_string()))
}

/// A failed run: exit code, message for stderr, and anything that should
/// still be written to the output.
struct Failure {
    code: u8,
    message: String,
    output: Option<String>,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
            output: None,
        }
    }
}

fn diagram_failure(e: &DiagramError) -> Failure {
    let code = match e {
        DiagramError::NotQSphere => EXIT_NOT_QSPHERE,
        DiagramError::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INVALID,
    };
    Failure::new(code, e.to_string())
}

fn layout_failure(e: &LayoutError) -> Failure {
    match e {
        LayoutError::Parse { .. }
        | LayoutError::DuplicateId(_)
        | LayoutError::UnknownReference(_) => Failure::new(EXIT_PARSE, e.to_string()),
        LayoutError::Diagram(d) => diagram_failure(d),
        _ => Failure::new(EXIT_INVALID, e.to_string()),
    }
}

fn theta_failure(e: &ThetaError) -> Failure {
    match e {
        ThetaError::Layout(l) => layout_failure(l),
        ThetaError::Diagram(d) => diagram_failure(d),
        ThetaError::MatchingMismatch { .. } => Failure::new(EXIT_MISMATCH, e.to_string()),
    }
}

enum Input {
    Layout(Box<RectLayout>),
    Diagram(DiagramData),
}

fn read_input(path: &Path) -> Result<Input, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_IO, format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("parse error: {e}")))?;
    if value.get("alpha_orders").is_some() {
        let data: DiagramData = serde_json::from_str(&text)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("parse error: {e}")))?;
        return Ok(Input::Diagram(data));
    }
    parse_layout(&text)
        .map(|l| Input::Layout(Box::new(l)))
        .map_err(|e| layout_failure(&e))
}

fn request(c: &Common) -> ComputeRequest {
    ComputeRequest {
        matching: c.matching.clone(),
        basepoints: c.basepoints.clone(),
        lambda: c.lambda.clone(),
    }
}

fn run_compute(input: Input, c: &Common) -> Result<Computation, Failure> {
    let req = request(c);
    match input {
        Input::Layout(l) => theta(&l, &req).map_err(|e| theta_failure(&e)),
        Input::Diagram(data) => {
            let d = CombinatorialDiagram::from_data(&data).map_err(|e| diagram_failure(&e))?;
            let drawn = match &data.matching {
                Some(ids) => Some(Matching::from_ids(&d, ids).map_err(|e| diagram_failure(&e))?),
                None => None,
            };
            compute(d, drawn, &req).map_err(|e| theta_failure(&e))
        }
    }
}

fn diagram_of(input: Input) -> Result<(CombinatorialDiagram, Option<Vec<String>>), Failure> {
    match input {
        Input::Layout(l) => {
            let d =
                heegaard_theta::layout::derive_combinatorics(&l).map_err(|e| layout_failure(&e))?;
            Ok((d, Some(l.matching)))
        }
        Input::Diagram(data) => {
            let d = CombinatorialDiagram::from_data(&data).map_err(|e| diagram_failure(&e))?;
            Ok((d, data.matching))
        }
    }
}

fn approx(r: &Rational) -> String {
    format!("{:.6}", r.to_f64())
}

fn report_table(r: &ThetaReport, decimal: bool) -> String {
    let mut rows: Vec<(&str, Option<&Rational>)> = vec![
        ("ell2", Some(&r.ell2)),
        ("lk", Some(&r.lk)),
        ("e", r.euler.as_ref()),
        ("Theta", r.theta.as_ref()),
    ];
    if let Some(p1) = &r.p1 {
        rows.push(("p1", Some(p1)));
    }
    let mut out = String::new();
    if decimal {
        out.push_str(&format!(
            "{:<6}  {:<12}  {}\n",
            "term", "exact", "decimal (approximate)"
        ));
    }
    for (name, v) in rows {
        let exact = v.map_or("unavailable".to_string(), Rational::to_string);
        if decimal {
            let d = v.map_or(String::new(), approx);
            out.push_str(format!("{name:<6}  {exact:<12}  {d}").trim_end());
            out.push('\n');
        } else {
            out.push_str(&format!("{name:<6}= {exact}\n"));
        }
    }
    out.push_str(&format!("matching = {{{}}}\n", r.matching.join(", ")));
    let bps: Vec<String> = r
        .basepoints
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    out.push_str(&format!("basepoints = {}\n", bps.join(", ")));
    out.push_str(&format!("diagram_hash = {}\n", r.diagram_hash));
    out
}

/// The report as JSON; with `decimal`, rounded values follow under
/// `approximate`.
#[derive(serde::Serialize)]
struct JsonReport<'a> {
    #[serde(flatten)]
    report: &'a ThetaReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    approximate: Option<BTreeMap<&'static str, f64>>,
}

fn report_json(r: &ThetaReport, decimal: bool) -> JsonReport<'_> {
    let approximate = decimal.then(|| {
        [
            ("ell2", Some(&r.ell2)),
            ("lk", Some(&r.lk)),
            ("euler", r.euler.as_ref()),
            ("theta", r.theta.as_ref()),
            ("p1", r.p1.as_ref()),
        ]
        .into_iter()
        .filter_map(|(name, v)| v.map(|x| (name, x.to_f64())))
        .collect()
    });
    JsonReport {
        report: r,
        approximate,
    }
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn mismatch_note(comp: &Computation) -> Option<Failure> {
    comp.matching_mismatch.then(|| {
        Failure::new(
            EXIT_MISMATCH,
            format!(
                "matching {{{}}} is not the one the layout was drawn for; e and Theta are unavailable",
                comp.report.matching.join(",")
            ),
        )
    })
}

fn cmd_validate(c: &Common) -> Result<String, Failure> {
    let report = match read_input(&c.input)? {
        Input::Layout(l) => validate_layout(&l),
        Input::Diagram(d) => validate_diagram(&d),
    };
    let text = match c.format {
        Format::Json => pretty(&report),
        Format::Table => format!("{report}\n"),
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure {
            code: EXIT_INVALID,
            message: "validation failed".into(),
            output: Some(text),
        })
    }
}

fn cmd_compute(c: &Common) -> Result<String, Failure> {
    let comp = run_compute(read_input(&c.input)?, c)?;
    let text = match c.format {
        Format::Json => pretty(&report_json(&comp.report, c.decimal)),
        Format::Table => report_table(&comp.report, c.decimal),
    };
    match mismatch_note(&comp) {
        Some(mut f) => {
            f.output = Some(text);
            Err(f)
        }
        None => Ok(text),
    }
}

fn cmd_explain(c: &Common) -> Result<String, Failure> {
    let comp = run_compute(read_input(&c.input)?, c)?;
    let lines = comp.explain();
    let text = match c.format {
        Format::Json => pretty(&json!({
            "report": report_json(&comp.report, c.decimal),
            "lines": lines,
        })),
        Format::Table => {
            let mut s = lines.join("\n");
            s.push('\n');
            s
        }
    };
    match mismatch_note(&comp) {
        Some(mut f) => {
            f.output = Some(text);
            Err(f)
        }
        None => Ok(text),
    }
}

fn cmd_matchings(c: &Common) -> Result<String, Failure> {
    let (d, drawn) = diagram_of(read_input(&c.input)?)?;
    let drawn = match drawn {
        Some(ids) => Some(Matching::from_ids(&d, &ids).map_err(|e| diagram_failure(&e))?),
        None => None,
    };
    let all = enumerate_matchings(&d, c.cap).map_err(|e| diagram_failure(&e))?;
    let can_euler = d.arc_half_turns().is_some();
    let mut rows = Vec::new();
    for m in &all {
        let bp = BasepointChoice::from_matching(&d, m);
        let lk = lk_parallel(&d, &bp, m).map_err(|e| diagram_failure(&e))?;
        let theta_capable = can_euler && drawn.as_ref() == Some(m);
        rows.push((m.ids(&d), lk, theta_capable));
    }
    Ok(match c.format {
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|(ids, lk, cap)| {
                    let mut v = json!({ "matching": ids, "lk": lk, "theta_capable": cap });
                    if c.decimal {
                        v["lk_approximate"] = json!(lk.to_f64());
                    }
                    v
                })
                .collect(),
        )),
        Format::Table => {
            let mut s = String::new();
            for (ids, lk, cap) in &rows {
                let mut line = format!("{{{}}}  lk = {lk}", ids.join(", "));
                if c.decimal {
                    line.push_str(&format!(" (approx. {})", approx(lk)));
                }
                line.push_str(if *cap { "  Theta-capable" } else { "  lk only" });
                s.push_str(&line);
                s.push('\n');
            }
            s
        }
    })
}

fn cmd_render(c: &Common, scale: f64, labels: bool) -> Result<String, Failure> {
    match read_input(&c.input)? {
        Input::Layout(l) => Ok(render_svg(&l, &SvgOptions { scale, labels })),
        Input::Diagram(_) => Err(Failure::new(
            EXIT_INVALID,
            "render needs a rectangular layout, not a combinatorial diagram",
        )),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::new(EXIT_IO, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_PARSE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let (common, result) = match &cli.command {
        Command::Validate(c) => (c, cmd_validate(c)),
        Command::Compute(c) => (c, cmd_compute(c)),
        Command::Matchings(c) => (c, cmd_matchings(c)),
        Command::Explain(c) => (c, cmd_explain(c)),
        Command::Render {
            common,
            scale,
            no_labels,
        } => (common, cmd_render(common, *scale, !no_labels)),
    };
    let output = common.output.as_deref();
    match result {
        Ok(text) => match emit(&text, output) {
            Ok(()) => ExitCode::SUCCESS,
            Err(f) => {
                eprintln!("error: {}", f.message);
                ExitCode::from(f.code)
            }
        },
        Err(f) => {
            if let Some(text) = &f.output {
                if let Err(io) = emit(text, output) {
                    eprintln!("error: {}", io.message);
                    return ExitCode::from(io.code);
                }
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
