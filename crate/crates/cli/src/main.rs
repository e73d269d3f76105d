//! Command-line front end: runs the verification suites and the
//! individual constructions, emitting machine-readable reports.
//!
//! Exit codes: 0 all checks pass, 1 check failure, 2 usage error,
//! 3 invalid input, 4 degenerate direction.

mod report;

use std::io::IsTerminal;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chi4::currents::current_vector;
use chi4::holonomy::{closed_form_phase, loop_phase, solid_angle_check, spin_n_phase};
use chi4::polarization::{decompose, inner_product, z_axis, z_longitudinal, z_symmetric, Bivector};
use chi4::verify::{run_suite, Check, Suite, SuiteConfig, Tolerances};
use chi4::wavepacket::{
    bivector_momentum, bivector_momentum_quadrature, envelope_derivative_integral,
    envelope_derivative_integral_quadrature, vector_potential_momentum,
    vector_potential_momentum_quadrature, GaussianEnvelope,
};
use chi4::{Axis, Error, Helicity, Momentum};

use report::{to_csv, to_json, RunReport, Value};

#[derive(Parser)]
#[command(
    name = "chi4",
    about = "Verification-grade numerics for polarization bivectors, geometric phase, currents and wavepacket integrals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone, Copy, Debug)]
struct CommonOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Tolerance for exact algebraic identities.
    #[arg(long, default_value_t = 1e-14)]
    tol_exact: f64,
    /// Tolerance for transcendental/eigen-solver checks.
    #[arg(long, default_value_t = 1e-12)]
    tol_transcendental: f64,
    /// Tolerance for quadrature comparisons.
    #[arg(long, default_value_t = 1e-8)]
    tol_quadrature: f64,
}

impl CommonOpts {
    fn tolerances(&self) -> Tolerances {
        Tolerances {
            exact: self.tol_exact,
            transcendental: self.tol_transcendental,
            quadrature: self.tol_quadrature,
        }
    }
}

#[derive(Args, Clone, Debug)]
struct MomentumOpts {
    /// Four-momentum as comma-separated p0,p1,p2,p3.
    #[arg(long, value_name = "P0,P1,P2,P3", allow_hyphen_values = true)]
    p: Option<String>,
    /// Spatial direction x,y,z; combined with --energy builds an exactly
    /// null momentum.
    #[arg(
        long,
        value_name = "X,Y,Z",
        allow_hyphen_values = true,
        requires = "energy"
    )]
    direction: Option<String>,
    /// Energy for --direction.
    #[arg(long, requires = "direction")]
    energy: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named invariant suite.
    Verify {
        /// Suite to run.
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Seed of the deterministic sample stream.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random-sample count override for the suite's main loops.
        #[arg(long)]
        samples: Option<usize>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Construct a polarization state and report its residuals.
    Polarize {
        #[command(flatten)]
        momentum: MomentumOpts,
        /// Basis: z1, z2, z3, zS or zT.
        #[arg(long)]
        basis: String,
        /// Helicity +1 or -1.
        #[arg(long, default_value = "+1", allow_hyphen_values = true)]
        helicity: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Loop transport phase and its closed form.
    Holonomy {
        #[command(flatten)]
        momentum: MomentumOpts,
        /// Spin order for the tensor-power transport.
        #[arg(long, default_value_t = 1)]
        spin: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Envelope momentum corrections for the two field theories.
    Envelope {
        /// Gaussian width in phase units.
        #[arg(long, allow_negative_numbers = true)]
        sigma: f64,
        /// Which theory to evaluate.
        #[arg(long, value_enum, default_value = "both")]
        mode: EnvelopeMode,
        #[command(flatten)]
        common: CommonOpts,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EnvelopeMode {
    Vector,
    Bivector,
    Both,
}

const EXIT_CHECK_FAILURE: u8 = 1;
const EXIT_INVALID_INPUT: u8 = 3;
const EXIT_DEGENERATE: u8 = 4;

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateDirection { .. } => EXIT_DEGENERATE,
            _ => EXIT_INVALID_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify {
            suite,
            seed,
            samples,
            common,
        } => cmd_verify(suite, seed, samples, common),
        Command::Polarize {
            momentum,
            basis,
            helicity,
            common,
        } => cmd_polarize(&momentum, &basis, &helicity, common),
        Command::Holonomy {
            momentum,
            spin,
            common,
        } => cmd_holonomy(&momentum, spin, common),
        Command::Envelope {
            sigma,
            mode,
            common,
        } => cmd_envelope(sigma, mode, common),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(report: &RunReport, format: Format) -> u8 {
    let text = match format {
        Format::Json => to_json(report),
        Format::Csv => to_csv(report),
    };
    print!("{text}");
    let (passed, total) = (
        report.checks.iter().filter(|c| c.pass).count(),
        report.checks.len(),
    );
    let summary = format!("{}: {}/{} checks passed", report.command, passed, total);
    if std::env::var_os("NO_COLOR").is_none() && std::io::stderr().is_terminal() {
        let color = if report.overall_pass { "32" } else { "31" };
        eprintln!("\x1b[{color}m{summary}\x1b[0m");
    } else {
        eprintln!("{summary}");
    }
    if report.overall_pass {
        0
    } else {
        EXIT_CHECK_FAILURE
    }
}

fn parse_tuple<const N: usize>(text: &str, what: &str) -> Result<[f64; N], Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != N {
        return Err(Failure::invalid(format!(
            "{what} needs {N} comma-separated numbers, got '{text}'"
        )));
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(parts.iter()) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| Failure::invalid(format!("bad number '{part}' in {what}: {e}")))?;
    }
    Ok(out)
}

fn parse_momentum(opts: &MomentumOpts) -> Result<(Momentum, Value), Failure> {
    match (&opts.p, &opts.direction, opts.energy) {
        (Some(text), None, None) => {
            let [p0, p1, p2, p3] = parse_tuple::<4>(text, "--p")?;
            let p = Momentum::physical(p0, p1, p2, p3)?;
            Ok((p, Value::Seq(vec![p0, p1, p2, p3])))
        }
        (None, Some(text), Some(energy)) => {
            let d = parse_tuple::<3>(text, "--direction")?;
            let p = Momentum::from_direction(d, energy)?;
            Ok((
                p,
                Value::Seq(vec![p.energy(), p.get(1), p.get(2), p.get(3)]),
            ))
        }
        _ => Err(Failure::invalid(
            "provide either --p P0,P1,P2,P3 or --direction X,Y,Z with --energy E",
        )),
    }
}

fn parse_helicity(text: &str) -> Result<Helicity, Failure> {
    match text {
        "+1" | "1" | "+" | "plus" => Ok(Helicity::Plus),
        "-1" | "-" | "minus" => Ok(Helicity::Minus),
        other => Err(Failure::invalid(format!(
            "helicity must be +1 or -1, got '{other}'"
        ))),
    }
}

fn cmd_verify(
    suite: Suite,
    seed: u64,
    samples: Option<usize>,
    common: CommonOpts,
) -> Result<u8, Failure> {
    let cfg = SuiteConfig {
        seed,
        samples,
        tol: common.tolerances(),
    };
    let checks = run_suite(suite, &cfg);
    let mut report = RunReport::new("verify");
    report.input("suite", Value::Str(format!("{suite:?}").to_lowercase()));
    report.input("seed", Value::Int(seed));
    report.input(
        "samples",
        match samples {
            Some(n) => Value::Int(n as u64),
            None => Value::Str("default".into()),
        },
    );
    report.input("tol_exact", Value::Num(common.tol_exact));
    report.input("tol_transcendental", Value::Num(common.tol_transcendental));
    report.input("tol_quadrature", Value::Num(common.tol_quadrature));
    report.result("checks_total", Value::Int(checks.len() as u64));
    report.result(
        "checks_passed",
        Value::Int(checks.iter().filter(|c| c.pass).count() as u64),
    );
    report.extend_checks(checks.iter());
    Ok(emit(&report, common.format))
}

fn components_value(z: &Bivector<f64>) -> Value {
    Value::Pairs(
        (0..4)
            .map(|mu| [z.component(mu).re, z.component(mu).im])
            .collect(),
    )
}

fn cmd_polarize(
    momentum: &MomentumOpts,
    basis: &str,
    helicity: &str,
    common: CommonOpts,
) -> Result<u8, Failure> {
    let (p, p_value) = parse_momentum(momentum)?;
    let h = parse_helicity(helicity)?;
    let tol = common.tolerances();
    let z = match basis {
        "z1" => z_axis(&p, Axis::X1, h)?,
        "z2" => z_axis(&p, Axis::X2, h)?,
        "z3" => z_axis(&p, Axis::X3, h)?,
        "zS" | "zs" => z_symmetric(&p, h)?,
        "zT" | "zt" => match h {
            Helicity::Plus => z_longitudinal(&p)?,
            Helicity::Minus => z_longitudinal(&p)?.conjugated(),
        },
        other => {
            return Err(Failure::invalid(format!(
                "basis must be one of z1, z2, z3, zS, zT; got '{other}'"
            )))
        }
    };
    let mut report = RunReport::new("polarize");
    report.input("p", p_value);
    report.input("basis", Value::Str(basis.to_string()));
    report.input("helicity", Value::Str(helicity.to_string()));
    report.result("components", components_value(&z));

    let mut checks = vec![
        Check::residual(
            "polarize.equation_residual",
            z.equation_residual() / p.energy(),
            tol.transcendental,
        ),
        Check::residual(
            "polarize.unit_norm",
            (z.norm_sq() - 1.0).abs(),
            tol.transcendental,
        ),
    ];
    if let Ok(f) = decompose(&z) {
        report.result("ze", Value::Seq(f.e_part.to_vec()));
        report.result("zb", Value::Seq(f.b_part.to_vec()));
        let ze_dot_zb: f64 = (0..3).map(|k| f.e_part[k] * f.b_part[k]).sum();
        checks.push(Check::residual(
            "polarize.transversality",
            z.component(0)
                .norm()
                .max(z.components().dot(z.components()).norm()),
            tol.transcendental,
        ));
        checks.push(Check::residual(
            "polarize.amplitude_orthogonality",
            ze_dot_zb.abs(),
            tol.transcendental,
        ));
        let zt = z_longitudinal(&p)?;
        checks.push(Check::residual(
            "polarize.longitudinal_orthogonality",
            inner_product(&zt, &z).norm(),
            tol.transcendental,
        ));
    }
    checks.push(Check::residual(
        "polarize.conjugate_orthogonality",
        inner_product(&z, &z.conjugated()).norm(),
        tol.transcendental,
    ));
    let j = current_vector(&z);
    report.result(
        "current",
        Value::Seq(vec![
            j.time_component,
            j.spatial[0],
            j.spatial[1],
            j.spatial[2],
        ]),
    );
    report.extend_checks(checks.iter());
    Ok(emit(&report, common.format))
}

fn cmd_holonomy(momentum: &MomentumOpts, spin: usize, common: CommonOpts) -> Result<u8, Failure> {
    let (p, p_value) = parse_momentum(momentum)?;
    let tol_phase = 1e-10;
    let result = loop_phase(&p, Helicity::Plus)?;
    let (closed, at_limit) = closed_form_phase(&p);
    let mut report = RunReport::new("holonomy");
    report.input("p", p_value);
    report.input("spin", Value::Int(spin as u64));
    report.result("loop_phase", Value::Num(result.phase));
    report.result("closed_form_phase", Value::Num(closed));
    report.result("residual", Value::Num(result.residual));
    report.result(
        "closed_form_at_singular_limit",
        Value::Str(at_limit.to_string()),
    );
    if let Some(area) = result.solid_angle_estimate {
        report.result("solid_angle_estimate", Value::Num(area));
    }
    let theta = (p.get(3) / p.energy()).acos();
    let phi = p.get(2).atan2(p.get(1));
    let (sph_phase, area) = solid_angle_check(theta, phi);
    report.result("spherical_form_phase", Value::Num(sph_phase));
    report.result("enclosed_area", Value::Num(area));

    let mut checks = vec![
        Check::close(
            "holonomy.loop_vs_closed_form",
            closed,
            result.phase,
            tol_phase,
        ),
        Check::residual("holonomy.return_residual", result.residual, tol_phase),
    ];
    let spin_phase = spin_n_phase(&p, spin)?;
    report.result("spin_phase", Value::Num(spin_phase));
    checks.push(Check::close(
        "holonomy.spin_scaling",
        wrap_angle(spin as f64 * result.phase),
        spin_phase,
        1e-9,
    ));
    report.extend_checks(checks.iter());
    Ok(emit(&report, common.format))
}

fn wrap_angle(x: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    let mut y = x % two_pi;
    if y > std::f64::consts::PI {
        y -= two_pi;
    } else if y <= -std::f64::consts::PI {
        y += two_pi;
    }
    y
}

fn cmd_envelope(sigma: f64, mode: EnvelopeMode, common: CommonOpts) -> Result<u8, Failure> {
    let env = GaussianEnvelope::new(sigma, 1.0)?;
    let quad_tol = 1e-10;
    let mut report = RunReport::new("envelope");
    report.input("sigma", Value::Num(sigma));
    report.input("mode", Value::Str(format!("{mode:?}").to_lowercase()));
    let mut checks = Vec::new();

    let gap = envelope_derivative_integral(sigma)?;
    report.result("envelope_correction", Value::Num(gap));

    let want_vector = matches!(mode, EnvelopeMode::Vector | EnvelopeMode::Both);
    let want_bivector = matches!(mode, EnvelopeMode::Bivector | EnvelopeMode::Both);
    if want_vector {
        let closed = vector_potential_momentum(&env, 1.0)?;
        let quad = vector_potential_momentum_quadrature(&env, 1.0, quad_tol)?;
        report.result("vector_per_mode", Value::Seq(closed.per_mode.to_vec()));
        let mut dev = 0.0f64;
        for mu in 0..4 {
            dev = dev
                .max((quad[mu] - closed.per_mode[mu]).abs() / closed.per_mode[mu].abs().max(1.0));
        }
        checks.push(Check::residual(
            "envelope.vector_quadrature_agreement",
            dev,
            1e-6,
        ));
        let quad_corr = envelope_derivative_integral_quadrature(sigma, quad_tol)?;
        checks.push(Check::close(
            "envelope.correction_quadrature",
            gap,
            quad_corr,
            common.tol_quadrature,
        ));
    }
    if want_bivector {
        let closed = bivector_momentum(&env, 1.0)?;
        let quad = bivector_momentum_quadrature(&env, 1.0, quad_tol)?;
        report.result("bivector_per_mode", Value::Seq(closed.per_mode.to_vec()));
        let mut dev = 0.0f64;
        for mu in 0..4 {
            dev = dev.max((quad[mu] - closed.per_mode[mu]).abs());
        }
        checks.push(Check::residual(
            "envelope.bivector_quadrature_agreement",
            dev,
            1e-6,
        ));
    }
    if want_vector && want_bivector {
        report.result("gap", Value::Num(gap));
        checks.push(Check::close(
            "envelope.gap_closed_form",
            1.0 / (4.0 * sigma * sigma),
            gap,
            common.tol_exact,
        ));
    }
    report.extend_checks(checks.iter());
    Ok(emit(&report, common.format))
}
