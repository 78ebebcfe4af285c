//! Wall-clock timing per route and index. Reports the minimum over repetitions;
//! no correctness claims.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use genlaguerre::{laguerre, laguerre_composition_with_cap, Method};

use crate::args::{BenchArgs, Format};
use crate::commands::{check_compatible, parse_exact_params, parse_methods};
use crate::{CliError, EXIT_OK};

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub method: Method,
    pub n: usize,
    pub nanos: u128,
}

pub fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let params = parse_exact_params(&a.params)?;
    let methods = parse_methods(&a.methods)?;
    for &m in &methods {
        check_compatible(m, &params)?;
    }
    if methods.contains(&Method::Composition) && a.nmax > a.composition_cap {
        return Err(CliError::Usage(format!(
            "composition method limited to n <= {} (requested nmax = {}); raise --composition-cap or pass --methods without composition",
            a.composition_cap, a.nmax
        )));
    }
    let reps = a.reps.max(1);
    let mut rows = Vec::new();
    for &method in &methods {
        for n in 0..=a.nmax {
            let mut best = u128::MAX;
            for _ in 0..reps {
                let start = Instant::now();
                let result = match method {
                    Method::Composition => laguerre_composition_with_cap(&params, n, a.composition_cap)?,
                    _ => laguerre(&params, n, method)?,
                };
                let elapsed = start.elapsed().as_nanos();
                std::hint::black_box(result);
                best = best.min(elapsed);
            }
            rows.push(BenchRow {
                method,
                n,
                nanos: best,
            });
        }
    }
    match a.format {
        Format::Csv => {
            writeln!(out, "method,n,nanos")?;
            for r in &rows {
                writeln!(out, "{},{},{}", r.method, r.n, r.nanos)?;
            }
        }
        Format::Json => {
            serde_json::to_writer(&mut *out, &rows)?;
            writeln!(out)?;
        }
        Format::Plain => {
            writeln!(out, "{:<12} {:>4} {:>14}", "method", "n", "nanos")?;
            for r in &rows {
                writeln!(out, "{:<12} {:>4} {:>14}", r.method.name(), r.n, r.nanos)?;
            }
        }
    }
    Ok(EXIT_OK)
}
