//! Exact construction of the generalized Laguerre polynomials
//! `L_{⌊n/q⌋}^{(α,β)}(z)` for integer `α ≥ 1` and rational `β > −1`.
//!
//! Five independent routes are provided and agree coefficient for
//! coefficient:
//!
//! | route | function | `q` |
//! |---|---|---|
//! | defining series | [`laguerre_series`] | any |
//! | binomial closed form | [`laguerre_closed`] | any |
//! | full-history recurrence | [`laguerre_recurrence`] | 1 |
//! | Hessenberg determinant | [`laguerre_det`] | 1 |
//! | composition sum | [`laguerre_composition`] | 1 |
//!
//! ```
//! use genlaguerre::{laguerre_closed, laguerre_det, Params, Rational};
//!
//! let params = Params::new(2, "1/3".parse()?, 1)?;
//! let det = laguerre_det(&params, 6)?;
//! assert_eq!(det.poly, laguerre_closed(&params, 6).poly);
//! # Ok::<(), genlaguerre::Error>(())
//! ```
//!
//! A floating-point evaluator for real `α` lives in [`numeric`].

pub mod detform;
pub mod error;
pub mod laguerre;
pub mod numeric;
pub mod poly;
pub mod recurrence;
pub mod scalar;

pub use detform::{
    a_term, build_matrix, composition_sum, compositions, hessenberg_det, laguerre_composition,
    laguerre_composition_with_cap, laguerre_det, Composition, CompositionSum, Compositions,
    HessenbergMatrix, DEFAULT_COMPOSITION_CAP,
};
pub use error::{Error, Result};
pub use laguerre::{
    closed_coefficient, laguerre_classical, laguerre_closed, laguerre_series, series_coefficient,
    LaguerreResult, Method, Params,
};
pub use numeric::{laguerre_eval_float, log_gamma, FloatEval};
pub use poly::{Degree, Poly};
pub use recurrence::{
    coeff_b, coeff_c, laguerre_recurrence, recurrence_step, three_term, CoeffTable,
};
pub use scalar::{
    factorial, falling_factorial, gamma_ratio, gen_binomial, rising_factorial, Rational,
};

/// Builds `L_n` by one route. The recurrence route computes the whole
/// sequence up to `n`; use [`laguerre_sequence`] when several indices are
/// needed.
pub fn laguerre(params: &Params, n: usize, method: Method) -> Result<LaguerreResult> {
    match method {
        Method::Series => Ok(laguerre_series(params, n)),
        Method::Closed => Ok(laguerre_closed(params, n)),
        Method::Recurrence => Ok(laguerre_recurrence(params, n)?
            .pop()
            .expect("sequence includes index n")),
        Method::Determinant => laguerre_det(params, n),
        Method::Composition => laguerre_composition(params, n),
    }
}

/// `L_0, …, L_nmax` by one route. `composition_cap` bounds the composition
/// route.
pub fn laguerre_sequence(
    params: &Params,
    nmax: usize,
    method: Method,
    composition_cap: usize,
) -> Result<Vec<LaguerreResult>> {
    if !method.supports_q(params.q()) {
        return Err(Error::UnsupportedQ {
            method: method.name(),
            q: params.q(),
        });
    }
    match method {
        Method::Recurrence => laguerre_recurrence(params, nmax),
        Method::Composition => {
            if nmax > composition_cap {
                return Err(Error::CompositionCapExceeded {
                    n: nmax,
                    cap: composition_cap,
                });
            }
            (0..=nmax)
                .map(|n| laguerre_composition_with_cap(params, n, composition_cap))
                .collect()
        }
        _ => (0..=nmax).map(|n| laguerre(params, n, method)).collect(),
    }
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/series-and-closed-form.md")]
    mod series_and_closed_form {}
    #[doc = include_str!("../../../book/src/recurrence.md")]
    mod recurrence {}
    #[doc = include_str!("../../../book/src/determinant.md")]
    mod determinant {}
    #[doc = include_str!("../../../book/src/compositions.md")]
    mod compositions {}
    #[doc = include_str!("../../../book/src/floating-point.md")]
    mod floating_point {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
