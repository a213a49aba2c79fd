//! Acceptance criteria. Runs as its own harness and prints one PASS/FAIL line per criterion.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hexwp::analysis::{half_argument_candidates, half_period_shifts, integral_c22, lattice_sum_bz6, tail_exponent};
use hexwp::constants::{rho, varpi_from_gamma, varpi_from_quadrature, SQRT3};
use hexwp::identities::{self as id, Sampler};
use hexwp::{fermat, wfun, Complex, Constants, EvalOptions};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn re(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

fn within(what: &str, got: f64, bound: f64) -> Result<(), String> {
    if got <= bound {
        Ok(())
    } else {
        Err(format!("{what}: {got:.3e} > {bound:.0e}"))
    }
}

fn timed(limit: Duration, t0: Instant) -> Result<String, String> {
    let el = t0.elapsed();
    if el < limit {
        Ok(format!("{:.2}s", el.as_secs_f64()))
    } else {
        Err(format!("took {el:?}, limit {limit:?}"))
    }
}

fn constants() -> Outcome {
    let t0 = Instant::now();
    let q = varpi_from_quadrature(1e-10).map_err(|e| e.to_string())?;
    within("|gamma - quadrature|", (q.value - varpi_from_gamma()).abs(), 1e-10)?;
    let c = Constants::get();
    let v = c.varpi;
    let eta1 = 2.0 * wfun::zeta(re(v / 2.0)).map_err(|e| e.to_string())?;
    let eta2 = 2.0 * wfun::zeta(rho() * v / 2.0).map_err(|e| e.to_string())?;
    let legendre = (eta1 * rho() * v - eta2 * v - Complex::new(0.0, 2.0 * PI)).norm();
    within("Legendre", legendre, 1e-10)?;
    within("eta1 varpi", (c.eta1 * v - 2.0 * PI / SQRT3).abs(), 1e-12)?;
    timed(Duration::from_secs(1), t0)
}

fn special_values() -> Outcome {
    let c = Constants::get();
    let v = c.varpi;
    let f = |r: hexwp::Result<Complex>| r.map_err(|e| e.to_string());
    within("p(varpi/2)", (f(wfun::p(re(v / 2.0)))? - 0.25f64.cbrt()).norm(), 1e-12)?;
    within("p(varpi/3)", (f(wfun::p(re(v / 3.0)))? - 1.0).norm(), 1e-10)?;
    within("p'(varpi/3)", (f(wfun::p_prime(re(v / 3.0)))? + SQRT3).norm(), 1e-10)?;
    within(
        "p'(2varpi/3)",
        (f(wfun::p_prime(re(2.0 * v / 3.0)))? - SQRT3).norm(),
        1e-10,
    )?;
    within("p(r varpi)", f(wfun::p(c.r * v))?.norm(), 1e-10)?;
    within(
        "zeta(varpi/2)",
        (f(wfun::zeta(re(v / 2.0)))? - c.eta1 / 2.0).norm(),
        1e-10,
    )?;
    Ok(String::new())
}

fn identity_suites() -> Outcome {
    let t0 = Instant::now();
    let wanted = [
        "ode",
        "rotation",
        "parity",
        "conjugation",
        "periodicity",
        "sigma_quasiperiodicity",
        "sigma_representations",
        "uniformization",
        "baker_pair",
    ];
    let mut worst = 0.0f64;
    for suite in ["core", "identities", "uniformization"] {
        let rep = id::run_suite(suite, 42, 1e-8, 1000).map_err(|e| e.to_string())?;
        for c in rep.checks.iter().filter(|c| wanted.contains(&c.name.as_str())) {
            if c.samples < 1000 {
                return Err(format!("{}: only {} samples", c.name, c.samples));
            }
            within(&c.name, c.max_rel_residual, 1e-8)?;
            worst = worst.max(c.max_rel_residual);
        }
    }
    let el = timed(Duration::from_secs(30), t0)?;
    Ok(format!("worst rel {worst:.1e}, {el}"))
}

fn oracle_equivalence() -> Outcome {
    let t0 = Instant::now();
    let c = id::check_oracle_agreement(100, 42, 1e-8);
    if !c.pass {
        return Err(format!(
            "max error {:.3e} or not monotone over radii",
            c.max_abs_residual
        ));
    }
    within("samples", (100 - c.samples.min(100)) as f64, 0.0)?;
    let el = timed(Duration::from_secs(60), t0)?;
    Ok(format!("max error {:.1e} at R=100, {el}", c.max_abs_residual))
}

fn zeros() -> Outcome {
    for c in [
        id::check_zeros_p(1e-9),
        id::check_zeros_dp_plus(1e-9),
        id::check_zeros_dp_minus(1e-9),
        id::check_zero_spacing(1e-9),
    ] {
        if !c.pass {
            return Err(format!("{}: {:.3e}", c.name, c.max_abs_residual));
        }
    }
    Ok(String::new())
}

fn lattice_sum() -> Outcome {
    let t0 = Instant::now();
    let s = lattice_sum_bz6(30.0).map_err(|e| e.to_string())?;
    within(
        "|4 + S(30) - 2pi/sqrt3|",
        (4.0 + s.partial_sum - 2.0 * PI / SQRT3).norm(),
        1e-4,
    )?;
    let slope = tail_exponent(&[10.0, 20.0, 40.0]).map_err(|e| e.to_string())?;
    if !(slope <= -3.0) {
        return Err(format!("tail exponent {slope:.2} > -3"));
    }
    let el = timed(Duration::from_secs(10), t0)?;
    Ok(format!("error {:.1e}, slope {slope:.2}, {el}", s.abs_error))
}

fn integral() -> Outcome {
    let t0 = Instant::now();
    let e = integral_c22(1e-9).map_err(|e| e.to_string())?;
    within("integral - varpi/3", (e.value - varpi_from_gamma() / 3.0).abs(), 1e-9)?;
    timed(Duration::from_secs(1), t0)
}

fn half_argument() -> Outcome {
    let margin = EvalOptions::default().pole_margin;
    let pts = Sampler::new(42, "acceptance_half_argument")
        .exclude(&[re(0.0)], 2.0 * margin)
        .draw(100);
    if pts.len() < 100 {
        return Err(format!("only {} samples", pts.len()));
    }
    let mut worst = 0.0f64;
    for z in pts {
        let cands = half_argument_candidates(z).map_err(|e| e.to_string())?;
        for h in half_period_shifts() {
            let target = wfun::p(0.5 * z + h).map_err(|e| e.to_string())?;
            let d = cands.iter().map(|c| (c - target).norm()).fold(f64::INFINITY, f64::min);
            worst = worst.max(d);
        }
    }
    within("candidate distance", worst, 1e-8)?;
    Ok(format!("worst {worst:.1e}"))
}

fn triple_zero() -> Outcome {
    let z = re(-Constants::get().varpi / 3.0);
    let v = fermat::f(z).map_err(|e| e.to_string())?;
    let d = fermat::f_prime(z).map_err(|e| e.to_string())?;
    within("|f(-varpi/3) - 1|", (v - 1.0).norm(), 1e-9)?;
    within("|f'(-varpi/3)|", d.norm(), 1e-8)?;
    Ok(String::new())
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_hexwp"))
            .args(["verify", "--suite", "all", "--seed", "42", "--json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if a.stdout.is_empty() || a.stdout != b.stdout {
        return Err("reports differ".into());
    }
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).map_err(|e| e.to_string())?;
    if v["checks"].as_array().map_or(0, Vec::len) == 0 {
        return Err("no checks in report".into());
    }
    Ok(format!("{} bytes, exit {:?}", a.stdout.len(), a.status.code()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("constants", constants),
        ("special values", special_values),
        ("identity suites", identity_suites),
        ("oracle equivalence", oracle_equivalence),
        ("zeros rediscovery", zeros),
        ("lattice sum", lattice_sum),
        ("integral", integral),
        ("half-argument", half_argument),
        ("triple zero", triple_zero),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(note) => println!("criterion {:>2} {name:<20} PASS {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name:<20} FAIL {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
