//! Direct constructors of `L_{⌊n/q⌋}^{(α,β)}(z)`: the defining hypergeometric-
//! type series and the binomial closed form (integer `α`).
//!
//! The `z^k` coefficient of the defining series is
//!
//! ```text
//! Γ(αn+β+1) / Γ(n+1) · (−n)^{(qk)} / (Γ(αk+β+1) · k!)
//! ```
//!
//! where `(x)^{(m)}` is the rising factorial. Because `α` is a positive
//! integer the Gamma quotient collapses to a finite product (see
//! [`gamma_ratio`]).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{factorial, gamma_ratio, gen_binomial, rising_factorial, Rational};

/// Validated parameter triple `(α, β, q)` with `α ≥ 1`, `q ≥ 1` and
/// `β > −1`. Every constructor in the crate takes `Params` and assumes these
/// bounds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Params {
    alpha: u32,
    beta: Rational,
    q: u32,
}

impl Params {
    pub fn new(alpha: u32, beta: Rational, q: u32) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::InvalidParameter {
                name: "alpha",
                reason: "must be a positive integer".into(),
            });
        }
        if q == 0 {
            return Err(Error::InvalidParameter {
                name: "q",
                reason: "must be a positive integer".into(),
            });
        }
        if beta <= -1 {
            return Err(Error::InvalidParameter {
                name: "beta",
                reason: format!("must exceed -1 (got {beta})"),
            });
        }
        Ok(Params { alpha, beta, q })
    }

    /// `(1, β, 1)`, the classical generalized Laguerre family.
    pub fn classical(beta: Rational) -> Result<Self> {
        Params::new(1, beta, 1)
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `⌊n/q⌋`, the degree of the polynomial of index `n`.
    pub fn degree_for(&self, n: usize) -> usize {
        n / self.q as usize
    }

    pub(crate) fn require_q1(&self, method: &'static str) -> Result<()> {
        if self.q != 1 {
            return Err(Error::UnsupportedQ { method, q: self.q });
        }
        Ok(())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} beta={} q={}", self.alpha, self.beta, self.q)
    }
}

/// The five construction routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Series,
    Closed,
    Recurrence,
    Determinant,
    Composition,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Series,
        Method::Closed,
        Method::Recurrence,
        Method::Determinant,
        Method::Composition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Closed => "closed",
            Method::Recurrence => "recurrence",
            Method::Determinant => "determinant",
            Method::Composition => "composition",
        }
    }

    /// Only the series and closed form are defined for `q > 1`.
    pub fn supports_q(self, q: u32) -> bool {
        q == 1 || matches!(self, Method::Series | Method::Closed)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidParameter {
                name: "method",
                reason: format!(
                    "unknown method `{s}` (expected series, closed, recurrence, determinant or composition)"
                ),
            })
    }
}

/// A constructed polynomial together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaguerreResult {
    pub params: Params,
    pub n: usize,
    pub poly: Poly,
    pub method: Method,
}

/// Coefficient of `z^k` in the defining series, for `0 ≤ k ≤ ⌊n/q⌋`.
pub fn series_coefficient(params: &Params, n: usize, k: usize) -> Result<Rational> {
    let top = params.degree_for(n);
    if k > top {
        return Err(Error::IndexOutOfRange {
            name: "k",
            value: k,
            range: format!("[0, {top}]"),
        });
    }
    let prefactor = gamma_ratio(&params.beta, params.alpha, n, k)?;
    let pochhammer = rising_factorial(&-Rational::from(n), params.q as usize * k);
    let denom = Rational::from(factorial(n) * factorial(k));
    Ok(prefactor * pochhammer / denom)
}

pub fn laguerre_series(params: &Params, n: usize) -> LaguerreResult {
    let coeffs = (0..=params.degree_for(n))
        .map(|k| series_coefficient(params, n, k).expect("k within degree bound"))
        .collect();
    LaguerreResult {
        params: params.clone(),
        n,
        poly: Poly::from_coeffs(coeffs),
        method: Method::Series,
    }
}

/// Coefficient of `z^j` in the binomial closed form:
/// `(−1)^{qj} · binom(αn+β, α(n−j)) · (α(n−j))! / ((n−qj)! · j!)`.
///
/// The sign is `(−1)^{qj}`: that is what the defining series produces, since
/// `(−n)^{(qj)} = (−1)^{qj} n!/(n−qj)!`. For odd `q` it reduces to `(−1)^j`.
pub fn closed_coefficient(params: &Params, n: usize, j: usize) -> Result<Rational> {
    let top = params.degree_for(n);
    if j > top {
        return Err(Error::IndexOutOfRange {
            name: "j",
            value: j,
            range: format!("[0, {top}]"),
        });
    }
    let a = params.alpha as usize;
    let q = params.q as usize;
    let upper = Rational::from(a * n) + &params.beta;
    let binom = gen_binomial(&upper, a * (n - j));
    let ratio = Rational::new(factorial(a * (n - j)), factorial(n - q * j) * factorial(j))?;
    Ok(Rational::sign_power(q * j) * binom * ratio)
}

pub fn laguerre_closed(params: &Params, n: usize) -> LaguerreResult {
    let coeffs = (0..=params.degree_for(n))
        .map(|j| closed_coefficient(params, n, j).expect("j within degree bound"))
        .collect();
    LaguerreResult {
        params: params.clone(),
        n,
        poly: Poly::from_coeffs(coeffs),
        method: Method::Closed,
    }
}

/// The classical `L_n^{(β)}(z) = Σ_j (−1)^j binom(n+β, n−j) z^j / j!`.
pub fn laguerre_classical(beta: &Rational, n: usize) -> Result<LaguerreResult> {
    let params = Params::classical(beta.clone())?;
    let upper = Rational::from(n) + beta;
    let coeffs = (0..=n)
        .map(|j| {
            Rational::sign_power(j) * gen_binomial(&upper, n - j) / Rational::from(factorial(j))
        })
        .collect();
    Ok(LaguerreResult {
        params,
        n,
        poly: Poly::from_coeffs(coeffs),
        method: Method::Closed,
    })
}
