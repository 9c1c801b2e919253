// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

//! The `peelspiral` command line.
//!
//! Exit codes: 0 success, 2 invalid arguments, 3 numerical non-convergence,
//! 4 I/O failure. All computation happens before any file is written, so a
//! rejected command leaves no output behind.

pub mod csv;
pub mod svg;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::applications::{slit_intensity, SlitChord};
use crate::convergence::{convergence_study, integer_windings, DEFAULT_SAMPLES};
use crate::curve::SampledCurve;
use crate::error::Error;
use crate::euler::{clothoid_transition, limit_point, sample_euler};
use crate::peel::{sample_peel, PeelParams};
use crate::quadrature::{QuadratureError, QuadratureSpec};

use self::csv::{curve_to_csv, report_to_csv};
use self::svg::{render_polyline, RenderOptions};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;
pub const EXIT_IO: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "peelspiral",
    version,
    about = "Orange-peel spirals, Fresnel integrals and the Euler spiral"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample the flattened peel of width 1/N.
    Peel(PeelArgs),
    /// Sample the Euler spiral (C(t), S(t)).
    Euler(EulerArgs),
    /// Measure how fast the rescaled peel approaches the Euler spiral.
    Converge(ConvergeArgs),
    /// Slit-diffraction intensity as a squared Euler-spiral chord.
    Diffract(DiffractArgs),
    /// Sample a clothoid transition curve.
    Clothoid(ClothoidArgs),
}

#[derive(Debug, Args)]
struct QuadArgs {
    /// Absolute quadrature tolerance.
    #[arg(long, default_value_t = 1e-10, allow_hyphen_values = true)]
    abs_tol: f64,
    /// Relative quadrature tolerance.
    #[arg(long, default_value_t = 1e-10, allow_hyphen_values = true)]
    rel_tol: f64,
}

#[derive(Debug, Args)]
struct PeelArgs {
    /// Number of windings N (strip width 1/N); need not be an integer.
    #[arg(long = "n", allow_hyphen_values = true)]
    windings: f64,
    #[arg(long, default_value_t = 10_001)]
    samples: usize,
    /// CSV output path (standard output when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Optional SVG plot.
    #[arg(long)]
    svg: Option<PathBuf>,
    #[command(flatten)]
    quad: QuadArgs,
}

#[derive(Debug, Args)]
struct EulerArgs {
    #[arg(long, allow_hyphen_values = true)]
    t_min: f64,
    #[arg(long, allow_hyphen_values = true)]
    t_max: f64,
    #[arg(long, default_value_t = 10_001)]
    samples: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ConvergeArgs {
    /// Comma-separated integer winding counts, e.g. 4,8,16,32.
    #[arg(long)]
    n_list: String,
    /// Rescaled half-window T; the peel is compared on [-sqrt(4 pi N) T, sqrt(4 pi N) T].
    #[arg(long, allow_hyphen_values = true)]
    t_rescaled: f64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    quad: QuadArgs,
}

#[derive(Debug, Args)]
struct DiffractArgs {
    /// Lower chord parameter; -inf selects the lower limit point.
    #[arg(long, allow_hyphen_values = true)]
    t1: f64,
    /// Upper chord parameter; inf selects the upper limit point.
    #[arg(long, allow_hyphen_values = true)]
    t2: f64,
    /// Divide by the open-aperture intensity pi.
    #[arg(long)]
    normalize: bool,
}

#[derive(Debug, Args)]
struct ClothoidArgs {
    /// Curvature gained per unit length.
    #[arg(long, allow_hyphen_values = true)]
    rate: f64,
    /// Arclength of the transition.
    #[arg(long, allow_hyphen_values = true)]
    length: f64,
    #[arg(long, default_value_t = 101)]
    samples: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

/// A failed command: exit code plus message for the diagnostic stream.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidArgument(_) | Error::OutOfDomain { .. } => EXIT_USAGE,
            Error::Quadrature(QuadratureError::InvalidRequest(_)) => EXIT_USAGE,
            Error::Quadrature(_) => EXIT_NUMERICAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<QuadratureError> for Failure {
    fn from(e: QuadratureError) -> Self {
        Error::from(e).into()
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Files to write once every computation has succeeded.
#[derive(Default)]
struct Outputs {
    files: Vec<(PathBuf, String)>,
    stdout: String,
}

impl Outputs {
    fn csv(&mut self, path: Option<&Path>, text: String) {
        match path {
            Some(p) => self.files.push((p.to_path_buf(), text)),
            None => self.stdout.push_str(&text),
        }
    }

    fn flush(self, stdout: &mut dyn Write) -> Result<(), Failure> {
        for (path, text) in &self.files {
            std::fs::write(path, text).map_err(|e| Failure {
                code: EXIT_IO,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
        }
        stdout
            .write_all(self.stdout.as_bytes())
            .and_then(|()| stdout.flush())
            .map_err(|e| Failure {
                code: EXIT_IO,
                message: format!("cannot write to standard output: {e}"),
            })
    }
}

fn quad_spec(q: &QuadArgs) -> Result<QuadratureSpec, Failure> {
    Ok(QuadratureSpec::new(
        q.abs_tol,
        q.rel_tol,
        QuadratureSpec::default().max_subdivisions,
    )?)
}

fn plot(curve: &SampledCurve, markers: &[crate::PlanePoint]) -> Result<String, Failure> {
    Ok(render_polyline(
        &curve.points(),
        markers,
        &RenderOptions::default(),
    )?)
}

fn cmd_peel(args: &PeelArgs) -> Result<Outputs, Failure> {
    if args.samples < 3 {
        return Err(usage(format!(
            "--samples must be at least 3, got {}",
            args.samples
        )));
    }
    let params = PeelParams::with_quadrature(args.windings, quad_spec(&args.quad)?)?;
    let curve = sample_peel(&params, args.samples)?;
    let mut out = Outputs::default();
    let svg = args.svg.as_ref().map(|_| plot(&curve, &[])).transpose()?;
    let comments = [
        ("curve", "peel".to_string()),
        ("N", args.windings.to_string()),
        ("samples", args.samples.to_string()),
    ];
    out.csv(args.out.as_deref(), curve_to_csv(&curve, &comments));
    if let (Some(path), Some(svg)) = (&args.svg, svg) {
        out.files.push((path.clone(), svg));
    }
    Ok(out)
}

fn cmd_euler(args: &EulerArgs) -> Result<Outputs, Failure> {
    let curve = sample_euler(args.t_min, args.t_max, args.samples)?;
    let markers = [limit_point(1)?, limit_point(-1)?];
    let svg = args
        .svg
        .as_ref()
        .map(|_| plot(&curve, &markers))
        .transpose()?;
    let mut out = Outputs::default();
    let comments = [
        ("curve", "euler".to_string()),
        ("t_min", args.t_min.to_string()),
        ("t_max", args.t_max.to_string()),
    ];
    out.csv(args.out.as_deref(), curve_to_csv(&curve, &comments));
    if let (Some(path), Some(svg)) = (&args.svg, svg) {
        out.files.push((path.clone(), svg));
    }
    Ok(out)
}

fn parse_n_list(list: &str) -> Result<Vec<u32>, Failure> {
    list.split(',')
        .map(|item| {
            let item = item.trim();
            let value: f64 = item
                .parse()
                .map_err(|_| usage(format!("--n-list entry {item:?} is not a number")))?;
            Ok(integer_windings(value)?)
        })
        .collect()
}

fn cmd_converge(args: &ConvergeArgs) -> Result<Outputs, Failure> {
    let ns = parse_n_list(&args.n_list)?;
    let quad = quad_spec(&args.quad)?;
    let report = convergence_study(&ns, args.t_rescaled, args.samples, &quad)?;
    let mut out = Outputs::default();
    let comments = [("samples", args.samples.to_string())];
    out.csv(args.out.as_deref(), report_to_csv(&report, &comments));
    if args.out.is_some() {
        out.stdout
            .push_str(&format!("fitted_slope={}\n", report.fitted_slope));
    }
    Ok(out)
}

/// `value` rounded to `digits` significant digits.
pub fn format_significant(value: f64, digits: usize) -> String {
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, value);
    let (mantissa, exponent) = sci.split_once('e').expect("scientific format");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if value == 0.0 || (-5..15).contains(&exponent) {
        let rounded: f64 = sci.parse().expect("round trip");
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        format!("{rounded:.decimals$}")
    } else {
        format!("{mantissa}e{exponent}")
    }
}

fn cmd_diffract(args: &DiffractArgs) -> Result<Outputs, Failure> {
    let chord = SlitChord::from_parameters(args.t1, args.t2)?;
    let mut intensity = slit_intensity(&chord)?;
    if args.normalize {
        intensity /= std::f64::consts::PI;
    }
    Ok(Outputs {
        files: Vec::new(),
        stdout: format!("{}\n", format_significant(intensity, 12)),
    })
}

fn cmd_clothoid(args: &ClothoidArgs) -> Result<Outputs, Failure> {
    let curve = clothoid_transition(args.rate, args.length, args.samples)?;
    let svg = args.svg.as_ref().map(|_| plot(&curve, &[])).transpose()?;
    let mut out = Outputs::default();
    let comments = [
        ("curve", "clothoid".to_string()),
        ("rate", args.rate.to_string()),
        ("length", args.length.to_string()),
    ];
    out.csv(args.out.as_deref(), curve_to_csv(&curve, &comments));
    if let (Some(path), Some(svg)) = (&args.svg, svg) {
        out.files.push((path.clone(), svg));
    }
    Ok(out)
}

/// Parse `args` (including the program name) and run the command, writing
/// results to `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let outputs = match &cli.command {
        Command::Peel(a) => cmd_peel(a),
        Command::Euler(a) => cmd_euler(a),
        Command::Converge(a) => cmd_converge(a),
        Command::Diffract(a) => cmd_diffract(a),
        Command::Clothoid(a) => cmd_clothoid(a),
    };
    match outputs.and_then(|o| o.flush(stdout)) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "peelspiral: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}
