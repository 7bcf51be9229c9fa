mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polartree::analysis::{analyze, analyze_pair, Options};
use polartree::arith::rat::{parse_rat, rint};
use polartree::corpus::fixtures;
use polartree::oracle::{irregular::is_generic, verify_curve, verify_pair};
use polartree::Error;
use serde_json::json;

#[derive(Parser)]
#[command(name = "polartree", version, about = "Polar and Jacobian factorization of plane curves via contact trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Maximum algebraic tower depth (default from POLARTREE_DEPTH_CAP, else 8).
    #[arg(long, global = true)]
    depth_cap: Option<usize>,

    /// Expansion margin past the isolation order, as p/q.
    #[arg(long, global = true)]
    margin: Option<String>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Add one to a predicted degree before verifying.
    #[arg(long, global = true, hide = true)]
    perturb_degree: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Branches, characteristic data and contacts of f.
    Analyze { f: String },
    /// The contact tree of f.
    Tree { f: String },
    /// Predicted factorization of f_y.
    Polar {
        f: String,
        #[arg(long)]
        verify: bool,
    },
    /// Predicted factorization of J(f, g).
    Jacobian {
        f: String,
        g: String,
        #[arg(long)]
        verify: bool,
    },
    /// Good and bad points and irregular values of f.
    Regularity { f: String },
    /// Verify every bundled fixture.
    Corpus {
        /// Run only this fixture.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

enum Failure {
    Input(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::InternalInconsistency(_) | Error::ContradictionWitness(_) | Error::Alg(_) => {
                Failure::Mismatch(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Output text and whether every check passed.
type Outcome = Result<(String, bool), Failure>;

/// Inline expression, or `@path` to read it from a file.
fn source(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Failure::Input(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn options(cli: &Cli) -> Result<Options, Failure> {
    let mut o = Options::default();
    if let Some(d) = cli.depth_cap {
        o.depth_cap = d;
    }
    if let Some(m) = &cli.margin {
        let r = parse_rat(m).ok_or_else(|| Failure::Input(format!("bad margin {m:?}, expected p/q")))?;
        if r <= rint(0) {
            return Err(Failure::Input("margin must be positive".into()));
        }
        o.margin = Some(r);
    }
    Ok(o)
}

fn check_format(cli: &Cli) -> Result<(), Failure> {
    let dot_ok = matches!(cli.command, Command::Tree { .. });
    if cli.format == Format::Dot && !dot_ok {
        return Err(Failure::Input("--format dot is only available for tree".into()));
    }
    Ok(())
}

fn json_out(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).unwrap() + "\n"
}

fn run(cli: &Cli) -> Outcome {
    check_format(cli)?;
    let opts = options(cli)?;
    match &cli.command {
        Command::Analyze { f } => {
            let an = analyze(&source(f)?, &opts)?;
            Ok(match cli.format {
                Format::Json => (json_out(an.branches.to_json()), true),
                _ => (render::branches(&an), true),
            })
        }
        Command::Tree { f } => {
            let an = analyze(&source(f)?, &opts)?;
            Ok(match cli.format {
                Format::Json => (json_out(an.tree.to_json(&an.branches)), true),
                Format::Dot => (an.tree.to_dot(&an.branches), true),
                Format::Text => (an.tree.to_text(&an.branches), true),
            })
        }
        Command::Polar { f, verify } => {
            let mut an = analyze(&source(f)?, &opts)?;
            if !verify {
                let mut p = polartree::predict::predict_polar(&an.tree, &an.branches)?;
                if cli.perturb_degree {
                    p.perturb();
                }
                return Ok(match cli.format {
                    Format::Json => (json_out(p.to_json(&an.branches)), true),
                    _ => (render::polar(&an, &p), true),
                });
            }
            let r = verify_curve(&mut an, cli.perturb_degree)?;
            let ok = r.report.passed();
            Ok(match cli.format {
                Format::Json => (
                    json_out(json!({
                        "prediction": r.polar.to_json(&an.branches),
                        "observed": polartree::oracle::observation_json(&an.branches, &an.tree, &r.obs),
                        "report": r.report.to_json(),
                    })),
                    ok,
                ),
                _ => (render::polar(&an, &r.polar) + "\n" + &r.report.to_text(), ok),
            })
        }
        Command::Jacobian { f, g, verify } => {
            let mut pa = analyze_pair(&source(f)?, &source(g)?, &opts)?;
            if !verify {
                let mut p = polartree::predict::predict_jacobian(&pa.an.tree, &pa.an.branches, &pa.is_f)?;
                if cli.perturb_degree {
                    p.perturb();
                }
                return Ok(match cli.format {
                    Format::Json => (json_out(p.to_json(&pa.an.branches)), true),
                    _ => (render::jacobian(&pa, &p), true),
                });
            }
            let r = verify_pair(&mut pa, cli.perturb_degree)?;
            let ok = r.report.passed();
            let an = &pa.an;
            Ok(match cli.format {
                Format::Json => (
                    json_out(json!({
                        "prediction": r.jacobian.to_json(&an.branches),
                        "observed": polartree::oracle::observation_json(&an.branches, &an.tree, &r.obs),
                        "report": r.report.to_json(),
                    })),
                    ok,
                ),
                _ => (render::jacobian(&pa, &r.jacobian) + "\n" + &r.report.to_text(), ok),
            })
        }
        Command::Regularity { f } => {
            let mut an = analyze(&source(f)?, &opts)?;
            let r = verify_curve(&mut an, cli.perturb_degree)?;
            if !is_generic(&r.obs) {
                let bad = r.obs.sigma.iter().filter(|s| **s > rint(0)).count();
                return Err(Error::NotGeneric(format!("{bad} roots of f_y have int(f, H) > 0")).into());
            }
            let ok = r.report.passed();
            Ok(match cli.format {
                Format::Json => (json_out(render::regularity_json(&an, &r)), ok),
                _ => (render::regularity(&an, &r), ok),
            })
        }
        Command::Corpus { only } => corpus(cli, &opts, only.as_deref()),
    }
}

fn corpus(cli: &Cli, opts: &Options, only: Option<&str>) -> Outcome {
    let mut text = String::new();
    let mut rows = vec![];
    let mut all_ok = true;
    let mut seen = false;
    for fx in fixtures() {
        if only.is_some_and(|o| o != fx.name) {
            continue;
        }
        seen = true;
        let res = match fx.g {
            None => analyze(fx.f, opts).and_then(|mut a| verify_curve(&mut a, cli.perturb_degree).map(|r| r.report)),
            Some(g) => analyze_pair(fx.f, g, opts).and_then(|mut a| verify_pair(&mut a, cli.perturb_degree).map(|r| r.report)),
        };
        let (verdict, detail) = match &res {
            Ok(rep) => (rep.verdict(), rep.to_json()),
            Err(e) => ("FAIL", json!({ "error": e.to_string() })),
        };
        all_ok &= verdict == "PASS";
        text += &format!("{verdict} {}\n", fx.name);
        if let Ok(rep) = &res {
            if !rep.passed() {
                for line in rep.to_text().lines().filter(|l| l.starts_with("BAD") || l.starts_with("    ")) {
                    text += &format!("  {line}\n");
                }
            }
        } else if let Err(e) = &res {
            text += &format!("  error: {e}\n");
        }
        rows.push(json!({ "name": fx.name, "f": fx.f, "g": fx.g, "verdict": verdict, "report": detail }));
    }
    if !seen {
        return Err(Failure::Input(format!("no fixture named {:?}", only.unwrap_or(""))));
    }
    let verdict = if all_ok { "PASS" } else { "FAIL" };
    Ok(match cli.format {
        Format::Json => (json_out(json!({ "verdict": verdict, "fixtures": rows })), all_ok),
        _ => (text + &format!("verdict: {verdict}\n"), all_ok),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, out, err) = match run(&cli) {
        Ok((out, ok)) => (if ok { 0 } else { 1 }, out, None),
        Err(Failure::Input(e)) => (2, String::new(), Some(e)),
        Err(Failure::Mismatch(e)) => (1, String::new(), Some(e)),
    };
    if let Some(e) = err {
        eprintln!("error: {e}");
    }
    if !out.is_empty() {
        match &cli.out {
            Some(p) => {
                if let Err(e) = std::fs::write(p, &out) {
                    eprintln!("error: {}: {e}", p.display());
                    return ExitCode::from(2);
                }
            }
            None => print!("{out}"),
        }
    }
    ExitCode::from(code)
}
