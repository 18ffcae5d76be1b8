//! Command-line front end: compute graded reports for domains given as JSON
//! documents or catalog names, reproduce the classification tables, scan the
//! elimination bound, and replay the case analysis.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use siegel_core::catalog::{self, NamedDomain};
use siegel_core::docs::{
    from_json_str, to_json_string, BoundsDocument, CaseDocument, ConeDoc, DomainDocument,
    ReportDocument, VerifyDocument,
};
use siegel_core::graded::{report_with, SamplePolicy, SiegelDomainSpec};
use siegel_core::scalar::parse_rational;
use siegel_core::Rational;

#[derive(Parser)]
#[command(
    name = "siegel",
    about = "Exact graded automorphism algebras of Siegel domains",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Emit the machine-readable JSON document instead of text.
    #[arg(long)]
    json: bool,
    /// Include the generator bases in the report.
    #[arg(long)]
    generators: bool,
    /// Pseudorandom interior points used by the homogeneity certificate.
    #[arg(long, default_value_t = siegel_core::cone::DEFAULT_SAMPLES)]
    samples: usize,
    /// Seed for all sampling.
    #[arg(long, default_value_t = siegel_core::cone::DEFAULT_SEED)]
    seed: u64,
    /// Skip Omega-Hermitian validation (the report is flagged unvalidated).
    #[arg(long)]
    no_validate: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Report for a domain document file.
    Compute {
        /// Path to a siegel-domain/1 JSON file.
        file: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Report for a named catalog domain.
    ///
    /// Names: ball N, polydisc N, D1 N, D2 N, D3 A B G D, D4 A B G D,
    /// D5 V1 V2 V3, D6 V1 V2 V3, D7 [A1 B1 A2 B2 A3 B3], D8 [V1 V2 V3],
    /// T3, T4, tube CONE_JSON, product FACTOR[:P1,P2,...] ...
    Catalog {
        name: String,
        params: Vec<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Recompute every catalog value and compare exactly; exits 1 on any
    /// mismatch.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
    /// Elimination scan of the closed-form bound against n^2 - 3.
    Bounds {
        n_min: usize,
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Replay the exclusion analysis for total dimension n (4 or 5).
    CaseAnalysis {
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Compute { file, out } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
            let doc: DomainDocument = from_json_str(&text).map_err(|e| e.to_string())?;
            let (name, spec) = doc.to_spec(!out.no_validate).map_err(|e| e.to_string())?;
            emit_report(name.as_deref(), &spec, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { name, params, out } => {
            let domain = resolve_catalog(&name, &params)?;
            emit_report(Some(&domain.name), &domain.spec, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { json } => {
            let table = catalog::verify_paper().map_err(|e| e.to_string())?;
            if json {
                println!("{}", to_json_string(&VerifyDocument::from_table(&table)));
            } else {
                let mut section = "";
                for row in &table.rows {
                    if row.section != section {
                        section = row.section;
                        println!("== {section}");
                    }
                    println!(
                        "[{}] {:<12} {}: expected {}, computed {}",
                        if row.pass { "PASS" } else { "FAIL" },
                        row.name,
                        row.quantity,
                        row.expected,
                        row.computed
                    );
                }
                let failed = table.rows.iter().filter(|r| !r.pass).count();
                println!("{} rows, {} failed", table.rows.len(), failed);
            }
            Ok(if table.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Bounds { n_min, n_max, json } => {
            let scan = catalog::bound_scan(n_min, n_max).map_err(|e| e.to_string())?;
            if json {
                println!("{}", to_json_string(&BoundsDocument::from_scan(&scan)));
            } else {
                for row in &scan.rows {
                    println!(
                        "n = {:<2} k = {:<2} bound = {:<8} threshold = {:<6} {}",
                        row.n,
                        row.k,
                        siegel_core::scalar::format_rational(&row.rhs),
                        siegel_core::scalar::format_rational(&row.threshold),
                        if row.eliminated { "eliminated" } else { "kept" }
                    );
                }
                println!(
                    "elimination pattern (k >= 4 for n >= 5; k = 3 for n >= 6): {}",
                    if scan.pattern_holds {
                        "holds"
                    } else {
                        "violated"
                    }
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CaseAnalysis { n, json } => {
            let analysis = catalog::case_analysis(n).map_err(|e| e.to_string())?;
            if json {
                println!(
                    "{}",
                    to_json_string(&CaseDocument::from_analysis(&analysis))
                );
            } else {
                let mut case = String::new();
                for step in &analysis.steps {
                    if step.case != case {
                        case = step.case.clone();
                        println!("== case {case}");
                    }
                    println!("-- {}", step.branch);
                    for (label, value) in &step.facts {
                        println!("     {label} = {value}");
                    }
                    match &step.conclusion {
                        catalog::Conclusion::Excluded(reason) => {
                            println!("     excluded: {reason}")
                        }
                        catalog::Conclusion::Survivor { d } => {
                            println!("     SURVIVOR with d = {d}")
                        }
                    }
                }
                if analysis.survivors.is_empty() {
                    println!("survivors: none");
                } else {
                    for (name, d) in &analysis.survivors {
                        println!("survivor: {name} (d = {d})");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Resolve a catalog invocation, including the tube and product forms.
fn resolve_catalog(name: &str, params: &[String]) -> Result<NamedDomain, String> {
    match name {
        "tube" => {
            if params.len() != 1 {
                return Err("tube takes exactly one cone JSON argument".into());
            }
            let cone_doc: ConeDoc = from_json_str(&params[0]).map_err(|e| e.to_string())?;
            let cone = cone_doc.to_cone().map_err(|e| e.to_string())?;
            catalog::tube_domain(cone).map_err(|e| e.to_string())
        }
        "product" => {
            if params.is_empty() {
                return Err("product needs at least one factor".into());
            }
            let factors: Result<Vec<NamedDomain>, String> =
                params.iter().map(|tok| resolve_factor(tok)).collect();
            catalog::product_domain(&factors?).map_err(|e| e.to_string())
        }
        _ => {
            let parsed: Result<Vec<Rational>, String> = params
                .iter()
                .map(|p| parse_rational(p).map_err(|e| e.to_string()))
                .collect();
            catalog::named_domain(name, &parsed?).map_err(|e| e.to_string())
        }
    }
}

/// A product factor token: `name` or `name:p1,p2,...`.
fn resolve_factor(token: &str) -> Result<NamedDomain, String> {
    let (name, params) = match token.split_once(':') {
        None => (token, Vec::new()),
        Some((name, rest)) => {
            let parsed: Result<Vec<Rational>, String> = rest
                .split(',')
                .map(|p| parse_rational(p).map_err(|e| e.to_string()))
                .collect();
            (name, parsed?)
        }
    };
    catalog::named_domain(name, &params).map_err(|e| e.to_string())
}

fn emit_report(
    name: Option<&str>,
    spec: &SiegelDomainSpec,
    out: &OutputOpts,
) -> Result<(), String> {
    let policy = SamplePolicy {
        samples: out.samples,
        seed: out.seed,
    };
    let rep = report_with(spec, policy).map_err(|e| e.to_string())?;
    let doc = ReportDocument::from_report(name, spec, &rep, out.generators);
    if out.json {
        println!("{}", to_json_string(&doc));
        return Ok(());
    }
    if let Some(name) = name {
        println!("domain: {name}");
    }
    println!("n = {} (k = {}, m = {})", rep.n, rep.k, rep.m);
    println!(
        "dims: g_-1 = {}, g_-1/2 = {}, g_0 = {}, g_1/2 = {}, g_1 = {}",
        rep.dims.d_minus_one,
        rep.dims.d_minus_half,
        rep.dims.d_zero,
        rep.dims.d_half,
        rep.dims.d_one
    );
    println!(
        "s = {}, dim g(Omega) = {}, dim stabilizer = {}",
        rep.s, rep.dim_cone_alg, rep.dim_stabilizer
    );
    println!("d = {}", rep.d);
    for check in &rep.bound_checks {
        println!(
            "[{}] {:<4} {}: {} {} {}",
            if check.holds { "ok" } else { "VIOLATED" },
            check.label,
            check.quantity,
            siegel_core::scalar::format_rational(&check.lhs),
            match check.relation {
                siegel_core::graded::Relation::Le => "<=",
                siegel_core::graded::Relation::Eq => "==",
            },
            siegel_core::scalar::format_rational(&check.rhs),
        );
    }
    println!(
        "homogeneity: {} ({} points)",
        rep.homogeneity.verdict.as_str(),
        rep.homogeneity.ranks.len()
    );
    println!("validation: {}", rep.validation.as_str());
    if out.generators {
        print_generators(&doc);
    }
    Ok(())
}

fn entry_str(e: &siegel_core::docs::EntryDoc) -> String {
    match e {
        siegel_core::docs::EntryDoc::Real(s) => s.clone(),
        siegel_core::docs::EntryDoc::Complex { re, im } => format!("{re}+{im}i"),
    }
}

fn matrix_line(rows: &[Vec<siegel_core::docs::EntryDoc>]) -> String {
    let body: Vec<String> = rows
        .iter()
        .map(|r| r.iter().map(entry_str).collect::<Vec<_>>().join(", "))
        .collect();
    format!("[{}]", body.join("; "))
}

fn print_generators(doc: &ReportDocument) {
    let Some(gens) = &doc.generators else { return };
    println!("generators:");
    for (i, a) in gens.g_minus_1.iter().enumerate() {
        println!("  g_-1[{i}]: a = [{}]", a.join(", "));
    }
    for (i, b) in gens.g_minus_half.iter().enumerate() {
        let parts: Vec<String> = b.iter().map(entry_str).collect();
        println!("  g_-1/2[{i}]: b = [{}]", parts.join(", "));
    }
    for (i, p) in gens.g_0.iter().enumerate() {
        let a: Vec<String> = p.a.iter().map(|r| r.join(", ")).collect();
        println!(
            "  g_0[{i}]: A = [{}], B = {}",
            a.join("; "),
            matrix_line(&p.b)
        );
    }
    for (i, h) in gens.g_half.iter().enumerate() {
        let c: Vec<String> = h.c.iter().map(|m| matrix_line(m)).collect();
        println!(
            "  g_1/2[{i}]: Phi = {}, c = [{}]",
            matrix_line(&h.phi),
            c.join(", ")
        );
    }
    for (i, o) in gens.g_1.iter().enumerate() {
        let a: Vec<String> =
            o.a.iter()
                .map(|m| {
                    let body: Vec<String> = m.iter().map(|r| r.join(", ")).collect();
                    format!("[{}]", body.join("; "))
                })
                .collect();
        let b: Vec<String> = o.b.iter().map(|m| matrix_line(m)).collect();
        println!("  g_1[{i}]: a = [{}], b = [{}]", a.join(", "), b.join(", "));
    }
}
