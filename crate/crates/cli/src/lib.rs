//! Command-line front end: `solve`, `denest`, `verify` and `branches`.
//!
//! [`run_cli`] does all the work and returns the exit code and the text that
//! would have been printed, so it can be driven from tests.

use clap::{Args, Parser, Subcommand};
use cubic_surd::format::{denesting_to_json, format_denested, render_branches, render_solve};
use cubic_surd::{
    denest, denest_verify, enumerate_branches, eval_quadext, format_rational, parse_equation,
    parse_rational, solve, CubicInput, DenestedPair, DepressedCubic, Error, OutputFormat,
    Rational, SolveOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cubic-surd", version, about = "Exact cubic solver with denested Cardano radicals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn format_arg(s: &str) -> Result<OutputFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
struct Coeffs {
    /// a in x^3 + 3ax = 2b
    #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
    a: Rational,
    /// b in x^3 + 3ax = 2b
    #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
    b: Rational,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an equation such as "x^3 + 4x = 75/8", or x^3 + 3ax = 2b via --a/--b
    Solve {
        #[arg(allow_hyphen_values = true)]
        equation: Option<String>,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg, conflicts_with = "equation", requires = "b")]
        a: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg, conflicts_with = "equation", requires = "a")]
        b: Option<Rational>,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=1000))]
        digits: u32,
        #[arg(long, default_value = "text", value_parser = format_arg)]
        format: OutputFormat,
    },
    /// Denest the Cardano radicals for a known rational root
    Denest {
        #[command(flatten)]
        coeffs: Coeffs,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        root: Rational,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=1000))]
        digits: u32,
        #[arg(long, default_value = "text", value_parser = format_arg)]
        format: OutputFormat,
    },
    /// Check a candidate pair (t, s) against the cube identities
    Verify {
        #[command(flatten)]
        coeffs: Coeffs,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        t: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        s: Rational,
    },
    /// Enumerate the three Cardano branches of a three-real-root cubic
    Branches {
        #[command(flatten)]
        coeffs: Coeffs,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        root: Rational,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=1000))]
        digits: u32,
        #[arg(long, default_value = "text", value_parser = format_arg)]
        format: OutputFormat,
    },
}

/// What a CLI invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self { code, stdout: String::new(), stderr }
    }
}

fn from_error(e: Error) -> CliOutput {
    let code = if e.is_internal() { EXIT_INTERNAL } else { EXIT_INPUT };
    CliOutput::fail(code, format!("error: {e}"))
}

fn depressed(c: &Coeffs) -> DepressedCubic<Rational> {
    DepressedCubic::new(c.a.clone(), c.b.clone())
}

fn run_denest(d: &DepressedCubic<Rational>, root: &Rational, digits: u32, fmt: OutputFormat) -> Result<String, Error> {
    let pair = denest(d, root)?;
    if !denest_verify(&pair, d)? {
        return Err(Error::InvariantViolation("denested pair failed verification".into()));
    }
    if fmt == OutputFormat::Json {
        return Ok(denesting_to_json(&pair));
    }
    let (w3, w4) = format_denested(&pair, fmt);
    let n3 = eval_quadext(&pair.w3(), digits).to_complex();
    let n4 = eval_quadext(&pair.w4(), digits).to_complex();
    Ok([
        format!("t = {}", format_rational(&pair.t, fmt)),
        format!("s = {}", format_rational(&pair.s, fmt)),
        format!("D = {}", format_rational(&pair.radicand, fmt)),
        format!("w3 = {w3} ≈ {n3}"),
        format!("w4 = {w4} ≈ {n4}"),
    ]
    .join("\n"))
}

fn run_verify(d: &DepressedCubic<Rational>, t: &Rational, s: &Rational) -> CliOutput {
    let pair = DenestedPair { t: t.clone(), s: s.clone(), radicand: d.discriminant() };
    match denest_verify(&pair, d) {
        Ok(true) => CliOutput::ok("OK: denesting identities satisfied".into()),
        Ok(false) => {
            let mut failed = Vec::new();
            if pair.unit_identity() != Rational::from_integer(1.into()) {
                failed.push(format!("s^3*D + 3*s*t^2 = {} (expected 1)", pair.unit_identity()));
            }
            if pair.b_identity() != d.b {
                failed.push(format!("t^3 + 3*s^2*t*D = {} (expected b = {})", pair.b_identity(), d.b));
            }
            if pair.a_identity() != d.a {
                failed.push(format!("s^2*D - t^2 = {} (expected a = {})", pair.a_identity(), d.a));
            }
            CliOutput { code: EXIT_INPUT, stdout: format!("FAIL: {}", failed.join("; ")), stderr: String::new() }
        }
        Err(e) => from_error(e),
    }
}

fn dispatch(command: Command) -> CliOutput {
    let result = match command {
        Command::Solve { equation, a, b, digits, format } => {
            let input: Result<CubicInput, Error> = match (equation, a, b) {
                (Some(eq), _, _) => parse_equation(&eq).map(CubicInput::from),
                (None, Some(a), Some(b)) => Ok(DepressedCubic::new(a, b).into()),
                _ => Err(Error::Syntax { pos: 0, msg: "give an equation or both --a and --b".into() }),
            };
            input
                .and_then(|i| solve(i, &SolveOptions::with_digits(digits)))
                .map(|r| render_solve(&r, format))
        }
        Command::Denest { coeffs, root, digits, format } => {
            run_denest(&depressed(&coeffs), &root, digits, format)
        }
        Command::Verify { coeffs, t, s } => return run_verify(&depressed(&coeffs), &t, &s),
        Command::Branches { coeffs, root, digits, format } => {
            let d = depressed(&coeffs);
            denest(&d, &root)
                .and_then(|p| enumerate_branches(&d, &p, digits))
                .map(|b| render_branches(&b, format))
        }
    };
    match result {
        Ok(text) => CliOutput::ok(text),
        Err(e) => from_error(e),
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_cli<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => dispatch(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                CliOutput::fail(EXIT_INPUT, text)
            } else {
                CliOutput::ok(text)
            }
        }
    }
}
