use std::io::Write;

use serde::{Deserialize, Serialize};

use genlaguerre::{
    laguerre, laguerre_composition_with_cap, laguerre_eval_float, laguerre_sequence,
    LaguerreResult, Method, Params, Poly, Rational,
};

use crate::args::{Cli, CoeffsArgs, Command, EvalArgs, Format, ParamArgs, TableArgs, VerifyArgs};
use crate::verify::{run_verify, FaultInjection, VerifyConfig, VerifyReport};
use crate::{bench, CliError, EXIT_OK, EXIT_VERIFY_FAILED};

/// Structured form of one polynomial as emitted by `coeffs` and `table`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRecord {
    pub alpha: u32,
    pub beta: Rational,
    pub q: u32,
    pub n: usize,
    pub method: Method,
    pub coeffs: Poly,
}

impl From<&LaguerreResult> for CoeffRecord {
    fn from(r: &LaguerreResult) -> Self {
        CoeffRecord {
            alpha: r.params.alpha(),
            beta: r.params.beta().clone(),
            q: r.params.q(),
            n: r.n,
            method: r.method,
            coeffs: r.poly.clone(),
        }
    }
}

/// Executes a parsed command line, writing to `out`. Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Coeffs(a) => cmd_coeffs(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Eval(a) => cmd_eval(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Bench(a) => bench::cmd_bench(a, out),
    }
}

pub(crate) fn parse_exact_params(p: &ParamArgs) -> Result<Params, CliError> {
    let alpha: u32 = p.alpha.trim().parse().map_err(|_| {
        CliError::Usage(format!(
            "alpha must be a positive integer on the exact path (got `{}`; use --float for real alpha)",
            p.alpha
        ))
    })?;
    let beta: Rational = p.beta.parse()?;
    Ok(Params::new(alpha, beta, p.q)?)
}

pub(crate) fn parse_method(s: &str) -> Result<Method, CliError> {
    Ok(s.parse()?)
}

pub(crate) fn parse_methods(list: &[String]) -> Result<Vec<Method>, CliError> {
    let mut methods = Vec::new();
    for s in list {
        let m = parse_method(s)?;
        if !methods.contains(&m) {
            methods.push(m);
        }
    }
    Ok(methods)
}

pub(crate) fn check_compatible(method: Method, params: &Params) -> Result<(), CliError> {
    if !method.supports_q(params.q()) {
        return Err(CliError::Usage(format!(
            "method {method} is only defined for q = 1 (got q = {})",
            params.q()
        )));
    }
    Ok(())
}

fn build_one(params: &Params, n: usize, method: Method, cap: usize) -> Result<LaguerreResult, CliError> {
    check_compatible(method, params)?;
    Ok(match method {
        Method::Composition => laguerre_composition_with_cap(params, n, cap)?,
        _ => laguerre(params, n, method)?,
    })
}

fn cmd_coeffs(a: &CoeffsArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let params = parse_exact_params(&a.params)?;
    let method = parse_method(&a.method)?;
    let result = build_one(&params, a.n, method, a.composition_cap)?;
    match a.format {
        Format::Json => {
            serde_json::to_writer(&mut *out, &CoeffRecord::from(&result))?;
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "k,coeff")?;
            for (k, c) in result.poly.coeffs().iter().enumerate() {
                writeln!(out, "{k},{c}")?;
            }
        }
        Format::Plain => writeln!(out, "{}", result.poly)?,
    }
    Ok(EXIT_OK)
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let params = parse_exact_params(&a.params)?;
    let method = parse_method(&a.method)?;
    check_compatible(method, &params)?;
    if method == Method::Composition && a.nmax > a.composition_cap {
        return Err(genlaguerre::Error::CompositionCapExceeded {
            n: a.nmax,
            cap: a.composition_cap,
        }
        .into());
    }
    let rows = laguerre_sequence(&params, a.nmax, method, a.composition_cap)?;
    match a.format {
        Format::Json => {
            let records: Vec<CoeffRecord> = rows.iter().map(CoeffRecord::from).collect();
            serde_json::to_writer(&mut *out, &records)?;
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "n,k,coeff")?;
            for r in &rows {
                for (k, c) in r.poly.coeffs().iter().enumerate() {
                    writeln!(out, "{},{k},{c}", r.n)?;
                }
            }
        }
        Format::Plain => {
            for r in &rows {
                writeln!(out, "L_{} = {}", r.n, r.poly)?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ExactValue<'a> {
    alpha: u32,
    beta: &'a Rational,
    q: u32,
    n: usize,
    method: Method,
    z: &'a Rational,
    value: Rational,
}

/// `condition` serializes as `null` when infinite (zero value).
#[derive(Serialize)]
struct FloatValue {
    alpha: f64,
    beta: f64,
    q: u32,
    n: usize,
    z: f64,
    value: f64,
    abs_term_sum: f64,
    condition: f64,
}

fn parse_real(name: &str, s: &str) -> Result<f64, CliError> {
    if let Ok(r) = s.parse::<Rational>() {
        return Ok(r.to_f64());
    }
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| CliError::Usage(format!("cannot parse {name} = `{s}` as a real number")))
}

fn cmd_eval(a: &EvalArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.float {
        let alpha = parse_real("alpha", &a.params.alpha)?;
        let beta = parse_real("beta", &a.params.beta)?;
        let z = parse_real("z", &a.z)?;
        let e = laguerre_eval_float(alpha, beta, a.params.q, a.n, z)?;
        match a.format {
            Format::Json => {
                let v = FloatValue {
                    alpha,
                    beta,
                    q: a.params.q,
                    n: a.n,
                    z,
                    value: e.value,
                    abs_term_sum: e.abs_term_sum,
                    condition: e.condition,
                };
                serde_json::to_writer(&mut *out, &v)?;
                writeln!(out)?;
            }
            Format::Csv => {
                writeln!(out, "value,abs_term_sum,condition")?;
                writeln!(out, "{:e},{:e},{:e}", e.value, e.abs_term_sum, e.condition)?;
            }
            Format::Plain => writeln!(
                out,
                "value={:e} abs_term_sum={:e} condition={:e}",
                e.value, e.abs_term_sum, e.condition
            )?,
        }
        return Ok(EXIT_OK);
    }

    let params = parse_exact_params(&a.params)?;
    let method = parse_method(&a.method)?;
    let z: Rational = a.z.parse()?;
    let result = build_one(&params, a.n, method, a.composition_cap)?;
    let value = result.poly.eval(&z);
    match a.format {
        Format::Json => {
            let v = ExactValue {
                alpha: params.alpha(),
                beta: params.beta(),
                q: params.q(),
                n: a.n,
                method,
                z: &z,
                value,
            };
            serde_json::to_writer(&mut *out, &v)?;
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "value")?;
            writeln!(out, "{value}")?;
        }
        Format::Plain => writeln!(out, "{value}")?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = VerifyConfig {
        alphas: a.alphas.clone(),
        betas: a
            .betas
            .iter()
            .map(|b| b.parse())
            .collect::<Result<_, genlaguerre::Error>>()?,
        qs: a.qs.clone(),
        nmax: a.nmax,
        methods: parse_methods(&a.methods)?,
        composition_cap: a.composition_cap,
        fault: a
            .inject_fault
            .as_deref()
            .map(str::parse::<FaultInjection>)
            .transpose()?,
    };
    let report = run_verify(&cfg)?;
    write_report(&report, a.format, out)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn write_report(report: &VerifyReport, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "alpha,beta,q,n,left,right,status")?;
            for p in &report.grid {
                for s in &p.pairs {
                    let status = serde_json::to_value(s.status)?;
                    writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        p.alpha,
                        p.beta,
                        p.q,
                        p.n,
                        s.left,
                        s.right,
                        status.as_str().unwrap_or_default()
                    )?;
                }
            }
        }
        Format::Plain => {
            let pairs: usize = report.grid.iter().map(|p| p.pairs.len()).sum();
            let verdict = if report.passed() { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{verdict}: {} grid points, {pairs} method-pair comparisons",
                report.grid.len()
            )?;
            if let Some(d) = &report.first_discrepancy {
                writeln!(
                    out,
                    "first discrepancy: alpha={} beta={} q={} n={} {} vs {} at z^{}: {} != {}",
                    d.alpha, d.beta, d.q, d.n, d.left, d.right, d.index, d.left_value, d.right_value
                )?;
            }
        }
    }
    Ok(())
}
