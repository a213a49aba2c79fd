use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hexwp::analysis::{self, lattice_sum_bz6, lattice_sum_shells, newton_refine, perturbed_seeds, RootTarget};
use hexwp::identities::{self, complex_json, format_number, NEWTON_MAX_ITER, SEED_OFFSET};
use hexwp::lattice::{CellCoords, HexLattice};
use hexwp::quad::Estimate;
use hexwp::{constants, Complex, Constants, Error, EvalOptions, Evaluator};

#[derive(Parser)]
#[command(
    name = "hexwp",
    version,
    about = "Weierstrass functions on the hexagonal lattice g2 = 0, g3 = 1"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one function at a point
    Eval {
        #[arg(long = "fn", value_enum)]
        func: Func,
        /// Point as RE,IM
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        z: Complex,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Sample a function on an n×n grid over the fundamental cell and write CSV
    Grid {
        #[arg(long = "fn", value_enum)]
        func: Func,
        #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u32).range(16..=4096))]
        n: u32,
        /// Mask radius around the singular set, in absolute units (default 0.02ϖ)
        #[arg(long)]
        margin: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Refine the closed-form zeros of ℘ or ℘′ ± √3 by Newton's method
    Zeros {
        #[arg(long, value_enum)]
        target: Target,
        /// Stop once the Newton step is below this
        #[arg(long, default_value_t = 1e-13)]
        tol: f64,
    },
    /// Complete-shell Eisenstein sum of 1/((1-2κ)κ²)
    Sum {
        #[arg(long)]
        radius: f64,
        #[arg(long)]
        per_shell: bool,
    },
    /// The real period ϖ
    Period {
        #[arg(long, value_enum, default_value = "gamma")]
        method: Method,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Definite integrals equal to ϖ (B4) and ϖ/3 (C22)
    Integral {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Func {
    P,
    Dp,
    Ddp,
    Sigma,
    Zeta,
    F,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    P,
    DpPlus,
    DpMinus,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Gamma,
    Quadrature,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "B4")]
    B4,
    #[value(name = "C22")]
    C22,
}

fn parse_complex(s: &str) -> Result<Complex, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected RE,IM, got {s:?}"))?;
    let re: f64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let im: f64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    Ok(Complex::new(re, im))
}

impl Func {
    fn eval(self, ev: &Evaluator, z: Complex) -> hexwp::Result<Complex> {
        match self {
            Func::P => ev.p(z),
            Func::Dp => ev.p_prime(z),
            Func::Ddp => ev.p_doubleprime(z),
            Func::Sigma => ev.sigma(z),
            Func::Zeta => ev.zeta(z),
            Func::F => ev.f(z),
        }
    }

    fn singular_set(self) -> Vec<Complex> {
        match self {
            Func::Sigma => vec![],
            Func::F => {
                let mut s = vec![Complex::new(0.0, 0.0)];
                s.extend(analysis::zeros_of_p());
                s
            }
            _ => vec![Complex::new(0.0, 0.0)],
        }
    }
}

/// 15 significant digits in positional notation.
fn decimal15(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.14}");
    }
    let digits = (14 - x.abs().log10().floor() as i64).clamp(0, 40) as usize;
    format!("{x:.digits$}")
}

enum Failure {
    /// Verification or convergence failure.
    Check(String),
    /// Bad input.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConvergence { .. } | Error::NoConvergence { .. } | Error::DerivativeVanishes { .. } => {
                Failure::Check(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Check(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Check(e.to_string())
    }
}

fn write_grid(func: Func, n: usize, margin: f64, out: &PathBuf) -> Result<(), Failure> {
    if !(margin > 0.0) {
        return Err(Failure::Usage(format!("margin {margin} must be positive")));
    }
    let ev = Evaluator::new(EvalOptions {
        pole_margin: margin.min(EvalOptions::default().pole_margin),
        ..EvalOptions::default()
    })?;
    let lat: &HexLattice = ev.lattice();
    let singular = func.singular_set();
    let mut w = csv::Writer::from_writer(io::BufWriter::new(File::create(out)?));
    w.write_record(["re", "im", "f_re", "f_im", "near_pole"])?;
    for j in 0..n {
        for i in 0..n {
            let z = CellCoords {
                s: i as f64 / n as f64,
                t: j as f64 / n as f64,
            }
            .to_complex(lat.scale);
            let masked = singular.iter().any(|&a| lat.dist_to_lattice(z - a) < margin);
            let value = if masked { None } else { func.eval(&ev, z).ok() };
            let (fr, fi, flag) = match value {
                Some(v) => (format_number(v.re), format_number(v.im), "0"),
                None => (String::new(), String::new(), "1"),
            };
            w.write_record([format_number(z.re), format_number(z.im), fr, fi, flag.to_string()])?;
        }
    }
    w.flush()?;
    Ok(())
}

fn print_estimate(out: &mut impl Write, e: Estimate) -> io::Result<()> {
    writeln!(out, "{}", decimal15(e.value))?;
    writeln!(out, "error_estimate {:.14e}", e.error)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.cmd {
        Cmd::Eval { func, z, json } => {
            let v = func.eval(Evaluator::global(), z)?;
            if json {
                writeln!(out, "{}", complex_json(v))?;
            } else {
                writeln!(out, "{} {}", format_number(v.re), format_number(v.im))?;
            }
        }
        Cmd::Verify {
            suite,
            samples,
            seed,
            tol,
            json,
        } => {
            let report = identities::run_suite(&suite, seed, tol, samples)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                for c in &report.checks {
                    let verdict = if c.pass { "PASS" } else { "FAIL" };
                    writeln!(out, "{:<28}  {:.3e}  {verdict}", c.name, c.max_rel_residual)?;
                }
                writeln!(out, "{}: {}", report.suite, if report.pass { "PASS" } else { "FAIL" })?;
            }
            return Ok(report.pass);
        }
        Cmd::Grid {
            func,
            n,
            margin,
            out: path,
        } => {
            let margin = margin.unwrap_or(0.02 * Constants::get().varpi);
            write_grid(func, n as usize, margin, &path)?;
        }
        Cmd::Zeros { target, tol } => {
            let target = match target {
                Target::P => RootTarget::P,
                Target::DpPlus => RootTarget::DpPlusSqrt3,
                Target::DpMinus => RootTarget::DpMinusSqrt3,
            };
            if !(tol > 0.0) {
                return Err(Failure::Usage(format!("tolerance {tol} must be positive")));
            }
            writeln!(out, "closed_re closed_im refined_re refined_im iterations")?;
            let offset = SEED_OFFSET * Constants::get().varpi;
            for a in target.closed_forms() {
                let seed = perturbed_seeds(a, offset, 1)[0];
                let r = newton_refine(target, seed, tol, NEWTON_MAX_ITER)?;
                writeln!(
                    out,
                    "{} {} {} {} {}",
                    format_number(a.re),
                    format_number(a.im),
                    format_number(r.refined.re),
                    format_number(r.refined.im),
                    r.iterations
                )?;
            }
        }
        Cmd::Sum { radius, per_shell } => {
            let s = lattice_sum_bz6(radius)?;
            if per_shell {
                writeln!(out, "norm count shell_re shell_im cumulative_re cumulative_im")?;
                for t in lattice_sum_shells(radius) {
                    writeln!(
                        out,
                        "{} {} {} {} {} {}",
                        t.norm,
                        t.count,
                        format_number(t.shell_sum.re),
                        format_number(t.shell_sum.im),
                        format_number(t.cumulative.re),
                        format_number(t.cumulative.im)
                    )?;
                }
            }
            writeln!(
                out,
                "partial_sum {} {}",
                format_number(s.partial_sum.re),
                format_number(s.partial_sum.im)
            )?;
            writeln!(out, "target {}", format_number(s.target.re))?;
            writeln!(out, "abs_error {}", format_number(s.abs_error))?;
        }
        Cmd::Period { method, tol } => match method {
            Method::Gamma => writeln!(out, "{}", decimal15(constants::varpi_from_gamma()))?,
            Method::Quadrature => print_estimate(&mut out, constants::varpi_from_quadrature(tol)?)?,
        },
        Cmd::Integral { which, tol } => {
            let e = match which {
                Which::B4 => constants::varpi_from_improper_integral(tol)?,
                Which::C22 => analysis::integral_c22(tol)?,
            };
            print_estimate(&mut out, e)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
