//! Cross-method verification sweep.

use rayon::prelude::*;
use serde::Serialize;

use genlaguerre::{laguerre_sequence, Method, Params, Poly, Rational};

use crate::CliError;

/// Adds one to a single coefficient of one route's output, so the sweep's
/// failure path can be exercised end to end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaultInjection {
    pub method: Method,
    pub alpha: u32,
    pub beta: Rational,
    pub q: u32,
    pub n: usize,
    pub k: usize,
}

impl std::str::FromStr for FaultInjection {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let usage = || CliError::Usage(format!("bad fault target `{s}`, expected method,alpha,beta,q,n,k"));
        let fields: Vec<&str> = s.split(',').map(str::trim).collect();
        let [method, alpha, beta, q, n, k] = fields[..] else {
            return Err(usage());
        };
        Ok(FaultInjection {
            method: method.parse()?,
            alpha: alpha.parse().map_err(|_| usage())?,
            beta: beta.parse()?,
            q: q.parse().map_err(|_| usage())?,
            n: n.parse().map_err(|_| usage())?,
            k: k.parse().map_err(|_| usage())?,
        })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub alphas: Vec<u32>,
    pub betas: Vec<Rational>,
    pub qs: Vec<u32>,
    pub nmax: usize,
    pub methods: Vec<Method>,
    pub composition_cap: usize,
    pub fault: Option<FaultInjection>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            alphas: vec![1, 2, 3],
            betas: ["0", "1/2", "-1/3", "7/2"]
                .iter()
                .map(|b| b.parse().expect("literal"))
                .collect(),
            qs: vec![1],
            nmax: 12,
            methods: Method::ALL.to_vec(),
            composition_cap: genlaguerre::DEFAULT_COMPOSITION_CAP,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairStatus {
    pub left: Method,
    pub right: Method,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridPoint {
    pub alpha: u32,
    pub beta: Rational,
    pub q: u32,
    pub n: usize,
    pub pairs: Vec<PairStatus>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub alpha: u32,
    pub beta: Rational,
    pub q: u32,
    pub n: usize,
    pub left: Method,
    pub right: Method,
    /// Power of z at which the two coefficient vectors first differ.
    pub index: usize,
    pub left_value: Rational,
    pub right_value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub status: Status,
    pub methods: Vec<Method>,
    pub grid: Vec<GridPoint>,
    pub first_discrepancy: Option<Discrepancy>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failing_points(&self) -> impl Iterator<Item = &GridPoint> {
        self.grid
            .iter()
            .filter(|p| p.pairs.iter().any(|s| s.status == Status::Fail))
    }
}

fn first_difference(a: &Poly, b: &Poly) -> Option<usize> {
    let len = a.coeffs().len().max(b.coeffs().len());
    (0..len).find(|&i| a.coeff(i) != b.coeff(i))
}

/// One (α, β, q) block: every route's sequence for n = 0..=nmax.
#[allow(clippy::needless_range_loop)]
fn check_block(
    cfg: &VerifyConfig,
    params: &Params,
) -> Result<(Vec<GridPoint>, Option<Discrepancy>), CliError> {
    let mut sequences: Vec<Vec<Poly>> = Vec::with_capacity(cfg.methods.len());
    for &method in &cfg.methods {
        let mut polys: Vec<Poly> = laguerre_sequence(params, cfg.nmax, method, cfg.composition_cap)?
            .into_iter()
            .map(|r| r.poly)
            .collect();
        if let Some(f) = &cfg.fault {
            let hit = f.method == method
                && f.alpha == params.alpha()
                && &f.beta == params.beta()
                && f.q == params.q()
                && f.n <= cfg.nmax;
            if hit {
                let mut coeffs = polys[f.n].coeffs().to_vec();
                if coeffs.len() <= f.k {
                    coeffs.resize(f.k + 1, Rational::zero());
                }
                coeffs[f.k] += &Rational::one();
                polys[f.n] = Poly::from_coeffs(coeffs);
            }
        }
        sequences.push(polys);
    }

    let mut points = Vec::with_capacity(cfg.nmax + 1);
    let mut first = None;
    for n in 0..=cfg.nmax {
        let mut pairs = Vec::new();
        for i in 0..cfg.methods.len() {
            for j in i + 1..cfg.methods.len() {
                let (a, b) = (&sequences[i][n], &sequences[j][n]);
                let diff = first_difference(a, b);
                if let (Some(index), None) = (diff, &first) {
                    first = Some(Discrepancy {
                        alpha: params.alpha(),
                        beta: params.beta().clone(),
                        q: params.q(),
                        n,
                        left: cfg.methods[i],
                        right: cfg.methods[j],
                        index,
                        left_value: a.coeff(index),
                        right_value: b.coeff(index),
                    });
                }
                pairs.push(PairStatus {
                    left: cfg.methods[i],
                    right: cfg.methods[j],
                    status: if diff.is_some() { Status::Fail } else { Status::Pass },
                });
            }
        }
        points.push(GridPoint {
            alpha: params.alpha(),
            beta: params.beta().clone(),
            q: params.q(),
            n,
            pairs,
        });
    }
    Ok((points, first))
}

/// Runs the sweep. Blocks are processed in parallel; the report is assembled
/// in grid order (α, then β, then q, then n).
pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyReport, CliError> {
    if cfg.methods.is_empty() {
        return Err(CliError::Usage("no methods selected".into()));
    }
    let mut blocks = Vec::new();
    for &alpha in &cfg.alphas {
        for beta in &cfg.betas {
            for &q in &cfg.qs {
                let params = Params::new(alpha, beta.clone(), q)?;
                for &m in &cfg.methods {
                    if !m.supports_q(q) {
                        return Err(CliError::Usage(format!(
                            "method {m} is only defined for q = 1 (grid contains q = {q})"
                        )));
                    }
                }
                blocks.push(params);
            }
        }
    }
    if cfg.methods.contains(&Method::Composition) && cfg.nmax > cfg.composition_cap {
        return Err(CliError::Usage(format!(
            "composition method limited to n <= {} (requested nmax = {}); raise --composition-cap or drop the method",
            cfg.composition_cap, cfg.nmax
        )));
    }
    if let Some(f) = &cfg.fault {
        let known = blocks
            .iter()
            .any(|p| p.alpha() == f.alpha && p.beta() == &f.beta && p.q() == f.q);
        if !known || f.n > cfg.nmax || !cfg.methods.contains(&f.method) {
            return Err(CliError::Usage("fault injection target is not on the grid".into()));
        }
    }

    let results = blocks
        .par_iter()
        .map(|p| check_block(cfg, p))
        .collect::<Result<Vec<_>, _>>()?;

    let mut grid = Vec::new();
    let mut first_discrepancy = None;
    for (points, first) in results {
        grid.extend(points);
        if first_discrepancy.is_none() {
            first_discrepancy = first;
        }
    }
    let status = if first_discrepancy.is_none() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerifyReport {
        status,
        methods: cfg.methods.clone(),
        grid,
        first_discrepancy,
    })
}
