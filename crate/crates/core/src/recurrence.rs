//! The `C_{n,m}` / `B_{n,m}` coefficient families and the full-history
//! recurrence (`q = 1`):
//!
//! ```text
//! L_n = −(z/n) L_{n−1} + Σ_{m=1}^{n} (−1)^{m−1} B_{n,m} L_{n−m}
//! B_{n,m} = (α(n−1)+β)_{(m−1)α} · C_{n,m}
//! C_{n,m} = 1/(m!·n) Σ_{j=0}^{m} (−1)^j binom(m,j) (n−j) (α(n−j)+β)_α
//! ```
//!
//! with `(x)_k` the falling factorial. For `α = 1` only `m = 1, 2` survive and
//! the recurrence collapses to the classical three-term one.

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::{Error, Result};
use crate::laguerre::{laguerre_closed, LaguerreResult, Method, Params};
use crate::poly::Poly;
use crate::scalar::{factorial, falling_factorial, Rational};

fn check_nm(n: usize, m: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            name: "n",
            value: n,
            range: "[1, ∞)".into(),
        });
    }
    if m == 0 || m > n {
        return Err(Error::IndexOutOfRange {
            name: "m",
            value: m,
            range: format!("[1, {n}]"),
        });
    }
    Ok(())
}

pub fn coeff_c(params: &Params, n: usize, m: usize) -> Result<Rational> {
    params.require_q1("coefficient C")?;
    check_nm(n, m)?;
    let a = params.alpha() as usize;
    let sum: Rational = (0..=m)
        .map(|j| {
            let shifted = Rational::from(a * (n - j)) + params.beta();
            Rational::sign_power(j)
                * Rational::from(binomial(BigInt::from(m), BigInt::from(j)))
                * Rational::from(n - j)
                * falling_factorial(&shifted, a)
        })
        .sum();
    Ok(sum / Rational::from(factorial(m) * BigInt::from(n)))
}

pub fn coeff_b(params: &Params, n: usize, m: usize) -> Result<Rational> {
    let c = coeff_c(params, n, m)?;
    Ok(b_prefactor(params, n, m) * c)
}

/// `(α(n−1)+β)_{(m−1)α}`
fn b_prefactor(params: &Params, n: usize, m: usize) -> Rational {
    let a = params.alpha() as usize;
    let base = Rational::from(a * (n - 1)) + params.beta();
    falling_factorial(&base, (m - 1) * a)
}

/// Precomputed `C_{n,m}` and `B_{n,m}` for `1 ≤ m ≤ n ≤ nmax`.
///
/// Built eagerly and immutable afterwards, so a finished table can be shared
/// across threads.
#[derive(Debug, Clone)]
pub struct CoeffTable {
    params: Params,
    nmax: usize,
    // Row n-1 holds m = 1..=n.
    c: Vec<Vec<Rational>>,
    b: Vec<Vec<Rational>>,
}

impl CoeffTable {
    pub fn build(params: &Params, nmax: usize) -> Result<Self> {
        params.require_q1("coefficient table")?;
        let mut c = Vec::with_capacity(nmax);
        let mut b = Vec::with_capacity(nmax);
        for n in 1..=nmax {
            let c_row = (1..=n)
                .map(|m| coeff_c(params, n, m))
                .collect::<Result<Vec<_>>>()?;
            let b_row = c_row
                .iter()
                .enumerate()
                .map(|(i, cv)| b_prefactor(params, n, i + 1) * cv)
                .collect();
            c.push(c_row);
            b.push(b_row);
        }
        Ok(CoeffTable {
            params: params.clone(),
            nmax,
            c,
            b,
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    fn lookup<'a>(&self, rows: &'a [Vec<Rational>], n: usize, m: usize) -> Result<&'a Rational> {
        check_nm(n, m)?;
        if n > self.nmax {
            return Err(Error::IndexOutOfRange {
                name: "n",
                value: n,
                range: format!("[1, {}]", self.nmax),
            });
        }
        Ok(&rows[n - 1][m - 1])
    }

    pub fn c(&self, n: usize, m: usize) -> Result<&Rational> {
        self.lookup(&self.c, n, m)
    }

    pub fn b(&self, n: usize, m: usize) -> Result<&Rational> {
        self.lookup(&self.b, n, m)
    }
}

/// One application of the full-history recurrence: produces `L_n` from
/// `prev = [L_0, …, L_{n−1}]`.
pub fn recurrence_step(table: &CoeffTable, prev: &[Poly]) -> Result<Poly> {
    let n = prev.len();
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            name: "n",
            value: 0,
            range: "[1, ∞)".into(),
        });
    }
    let shift = Poly::linear(Rational::zero(), -Rational::one() / Rational::from(n));
    let mut acc = &shift * &prev[n - 1];
    for m in 1..=n {
        let coeff = Rational::sign_power(m - 1) * table.b(n, m)?;
        acc = &acc + &prev[n - m].scale(&coeff);
    }
    Ok(acc)
}

/// `L_0, …, L_nmax` with the first three seeded from the closed form and the
/// rest generated by the recurrence.
pub fn laguerre_recurrence(params: &Params, nmax: usize) -> Result<Vec<LaguerreResult>> {
    params.require_q1("recurrence")?;
    let table = CoeffTable::build(params, nmax)?;
    let mut polys: Vec<Poly> = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let next = if n < 3 {
            laguerre_closed(params, n).poly
        } else {
            recurrence_step(&table, &polys)?
        };
        polys.push(next);
    }
    Ok(wrap(params, polys, Method::Recurrence))
}

/// `L_n = ((2n−1+β−z) L_{n−1} − (n−1+β) L_{n−2}) / n` with
/// `L_0 = 1`, `L_1 = 1 + β − z`.
pub fn three_term(beta: &Rational, nmax: usize) -> Result<Vec<LaguerreResult>> {
    let params = Params::classical(beta.clone())?;
    let mut polys = vec![Poly::one()];
    if nmax >= 1 {
        polys.push(Poly::linear(Rational::one() + beta, -Rational::one()));
    }
    for n in 2..=nmax {
        let nn = Rational::from(n);
        let lin = Poly::linear(Rational::from(2 * n - 1) + beta, -Rational::one());
        let lag = Rational::from(n - 1) + beta;
        let next = &(&lin * &polys[n - 1]) - &polys[n - 2].scale(&lag);
        polys.push(next.scale(&(Rational::one() / nn)));
    }
    Ok(wrap(&params, polys, Method::Recurrence))
}

fn wrap(params: &Params, polys: Vec<Poly>, method: Method) -> Vec<LaguerreResult> {
    polys
        .into_iter()
        .enumerate()
        .map(|(n, poly)| LaguerreResult {
            params: params.clone(),
            n,
            poly,
            method,
        })
        .collect()
}
