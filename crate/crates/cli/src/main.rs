use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use cubica::algebra::format_rational;
use cubica::cubical::{CubicalCell, SingularCube};
use cubica::forms::ClassicalForm;
use cubica::holonomy::integrate_form_in_order;
use cubica::io;
use cubica::suites::{self, Report, SuiteConfig};
use cubica::Error;

/// Exact verification of cubical identities, combinatorial forms,
/// connections and Stokes' theorem.
#[derive(Parser)]
#[command(name = "cubica", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Evaluate things on infinitesimal pipes.
    Eval {
        #[command(subcommand)]
        what: EvalCommand,
    },
    /// Integrate a form over a singular cube, printing the exact value.
    Integrate {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        cube: PathBuf,
        /// Integration order as 1-based parameter indices, e.g. `2,1`.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        /// Print every antiderivative step.
        #[arg(long)]
        trace: bool,
    },
    /// Fold a diagram.
    Fold {
        #[command(subcommand)]
        what: FoldCommand,
    },
    /// Subdivide a singular cube in one direction.
    Subdivide {
        #[arg(long)]
        cube: PathBuf,
        /// Direction, 1-based.
        #[arg(long)]
        dir: usize,
        /// Subdivision parameter `p/q`.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// Also check that this form's integral is additive.
        #[arg(long)]
        form: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum EvalCommand {
    /// Evaluate a form on a pipe, printing the Weil element.
    Form {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        pipe: PathBuf,
    },
}

#[derive(Subcommand)]
enum FoldCommand {
    /// Fold the twelve edges of a 3-cube diagram into the arrow at corner 7.
    Cube {
        #[arg(long)]
        edges: PathBuf,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// identities, bianchi, stokes, forms or holonomy.
    suite: String,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Overridden by CUBICA_SEED.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Dimension cap, at most 4.
    #[arg(long, default_value_t = 4)]
    max_dim: usize,
    /// Also write the JSON report here.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Print the JSON report instead of the summary.
    #[arg(long)]
    json: bool,
    /// bianchi: check this connection file only.
    #[arg(long)]
    connection: Option<PathBuf>,
    /// stokes: check this form (with --cube) only.
    #[arg(long, requires = "cube")]
    form: Option<PathBuf>,
    #[arg(long, requires = "form")]
    cube: Option<PathBuf>,
}

enum Failure {
    Input(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => verify(args),
        Command::Eval { what: EvalCommand::Form { form, pipe } } => eval_form(&form, &pipe),
        Command::Integrate { form, cube, order, trace } => integrate(&form, &cube, order, trace),
        Command::Fold { what: FoldCommand::Cube { edges } } => fold_cube(&edges),
        Command::Subdivide { cube, dir, at, form } => subdivide(&cube, dir, &at, form.as_deref()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(witness)) => {
            eprintln!("{witness}");
            ExitCode::from(1)
        }
        Err(Failure::Input(Error::Parse { location, message })) => {
            eprintln!("parse error at {location}: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_form(path: &Path) -> Result<ClassicalForm, Error> {
    io::form_from_json(&io::read_json(path)?, &path.display().to_string())
}

fn load_cube(path: &Path) -> Result<SingularCube, Error> {
    io::cube_from_json(&io::read_json(path)?, &path.display().to_string())
}

fn seed(flag: u64) -> Result<u64, Error> {
    match std::env::var("CUBICA_SEED") {
        Ok(s) => s.trim().parse().map_err(|e| Error::Parse {
            location: "CUBICA_SEED".into(),
            message: format!("{e}"),
        }),
        Err(_) => Ok(flag),
    }
}

fn verify(args: VerifyArgs) -> Outcome {
    let cfg = SuiteConfig::new(args.trials, seed(args.seed)?, args.max_dim)?;
    let report = match (&args.connection, &args.form, &args.cube) {
        (Some(c), None, None) if args.suite == "bianchi" => {
            let dir = c.parent().unwrap_or(Path::new("."));
            let spec = io::connection_from_json(&io::read_json(c)?, dir, &c.display().to_string())?;
            suites::bianchi_for(&cfg, &spec.form)
        }
        (None, Some(f), Some(q)) if args.suite == "stokes" => {
            let (omega, cube) = (load_form(f)?, load_cube(q)?);
            if omega.degree() + 1 != cube.dim() || omega.dim() != cube.target_dim() {
                return Err(Failure::Input(Error::Unsupported(format!(
                    "a {}-form on Q^{} needs a {}-cube in Q^{}, found a {}-cube in Q^{}",
                    omega.degree(),
                    omega.dim(),
                    omega.degree() + 1,
                    omega.dim(),
                    cube.dim(),
                    cube.target_dim()
                ))));
            }
            suites::stokes_for(&cfg, &omega, &cube)
        }
        (None, None, None) => suites::run_suite(&args.suite, &cfg)?,
        _ => {
            return Err(Failure::Input(Error::Unsupported(format!(
                "input files are not accepted by `verify {}` in this combination",
                args.suite
            ))))
        }
    };
    emit(&report, args.json, args.output.as_deref())
}

fn emit(report: &Report, json: bool, output: Option<&Path>) -> Outcome {
    let text = report.to_json();
    if let Some(path) = output {
        std::fs::write(path, format!("{text}\n")).map_err(|e| Error::Parse {
            location: path.display().to_string(),
            message: e.to_string(),
        })?;
    }
    if json {
        println!("{text}");
    } else {
        print_summary(report);
    }
    if report.pass {
        Ok(())
    } else {
        let witnesses: Vec<String> = report
            .failing()
            .map(|c| serde_json::to_string(c).expect("plain data"))
            .collect();
        Err(Failure::Check(witnesses.join("\n")))
    }
}

fn print_summary(r: &Report) {
    println!("suite {} (seed {}, trials {}, max dim {})", r.suite, r.seed, r.trials, r.max_dim);
    for (group, (ok, total)) in r.groups() {
        let mark = if ok == total { "ok  " } else { "FAIL" };
        println!("  {mark} {group}: {ok}/{total}");
    }
    println!("{} cases, {} failed", r.cases, r.failures);
}

fn eval_form(form: &Path, pipe: &Path) -> Outcome {
    let omega = load_form(form)?;
    let p = io::pipe_from_json(&io::read_json(pipe)?, &pipe.display().to_string())?;
    let value = cubica::forms::eval_comb(&omega, p.simplex())?;
    println!("{}", io::weil_to_json(&value));
    Ok(())
}

fn integrate(form: &Path, cube: &Path, order: Option<Vec<usize>>, trace: bool) -> Outcome {
    let omega = load_form(form)?;
    let f = load_cube(cube)?;
    let order: Vec<usize> = match order {
        Some(o) => o
            .into_iter()
            .map(|t| {
                t.checked_sub(1).ok_or_else(|| Error::Parse {
                    location: "--order".into(),
                    message: "parameter indices start at 1".into(),
                })
            })
            .collect::<Result<_, _>>()?,
        None => (0..f.dim()).rev().collect(),
    };
    let result = integrate_form_in_order(&omega, &f, &order)?;
    if trace {
        for s in &result.trace {
            println!("t{}: ∫ {} = [{}] = {}", s.var + 1, s.integrand, s.antiderivative, s.result);
        }
    }
    println!("{}", format_rational(&result.value));
    Ok(())
}

fn fold_cube(edges: &Path) -> Outcome {
    let (g, cells) = io::cube_diagram_from_json(&io::read_json(edges)?, &edges.display().to_string())?;
    let folded = cubica::groupoid::folding_cube(&g, &cells)?;
    let arrow = folded.arrow()?;
    println!("{}", g.format_word(arrow));
    if arrow.is_identity() {
        Ok(())
    } else {
        Err(Failure::Check(
            json!({ "folded": io::word_to_json(&g, arrow), "edges": io::read_json(edges)? }).to_string(),
        ))
    }
}

fn subdivide(cube: &Path, dir: usize, at: &str, form: Option<&Path>) -> Outcome {
    let f = load_cube(cube)?;
    let s = cubica::algebra::parse_rational(at).map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse { location: "--at".into(), message },
        other => other,
    })?;
    let (a, b) = f.subdivide(dir, &s)?;
    let mut out = json!({ "first": io::cube_to_json(&a), "second": io::cube_to_json(&b) });
    let mut pass = true;
    if let Some(path) = form {
        let omega = load_form(path)?;
        let whole = cubica::holonomy::integrate_form(&omega, &f)?.value;
        let parts = cubica::holonomy::integrate_form(&omega, &a)?.value + cubica::holonomy::integrate_form(&omega, &b)?.value;
        pass = whole == parts;
        out["integral"] = json!({
            "whole": format_rational(&whole),
            "parts": format_rational(&parts),
            "pass": pass,
        });
    }
    println!("{}", serde_json::to_string_pretty(&out).expect("plain data"));
    if pass {
        Ok(())
    } else {
        Err(Failure::Check(
            json!({ "cube": io::read_json(cube)?, "dir": dir, "at": at, "integral": out["integral"] }).to_string(),
        ))
    }
}
