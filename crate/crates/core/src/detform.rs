//! Determinant and composition-sum representations (`q = 1`).
//!
//! `L_n` is the determinant of an `n × n` lower-Hessenberg matrix with unit
//! superdiagonal. Column `j` (1-based) carries `B_{n−j+1,1} − z/(n−j+1)` on
//! the diagonal and `B_{n−j+1, i−j+1}` at row `i > j`. Expanding that
//! determinant gives a sum over compositions of `n`:
//!
//! ```text
//! L_n = Σ_{k=1}^{n} (−1)^{n−k} Σ_{t_1+…+t_k=n} a_0^{(t_1)} a_{t_1}^{(t_2)} ⋯ a_{t_1+…+t_{k−1}}^{(t_k)}
//! a_j^{(ℓ)} = B_{ℓ+j,ℓ} − δ_{ℓ,1} z/(j+1)
//! ```

use crate::error::{Error, Result};
use crate::laguerre::{LaguerreResult, Method, Params};
use crate::poly::{Degree, Poly};
use crate::recurrence::CoeffTable;
use crate::scalar::Rational;

/// Default largest `n` accepted by [`laguerre_composition`]; the expansion
/// has `2^(n−1)` terms.
pub const DEFAULT_COMPOSITION_CAP: usize = 14;

/// Square lower-Hessenberg matrix of polynomials of degree ≤ 1, with every
/// superdiagonal entry equal to 1 and `z` only on the main diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HessenbergMatrix {
    n: usize,
    // row-major
    entries: Vec<Poly>,
}

impl HessenbergMatrix {
    /// Validates shape and every invariant.
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotHessenberg("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotHessenberg(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, entry) in row.into_iter().enumerate() {
                check_entry(i, j, &entry)?;
                entries.push(entry);
            }
        }
        Ok(HessenbergMatrix { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Poly {
        &self.entries[row * self.n + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Poly]> {
        self.entries.chunks(self.n)
    }
}

fn check_entry(i: usize, j: usize, entry: &Poly) -> Result<()> {
    let at = |what: &str| Error::NotHessenberg(format!("entry ({}, {}) {what}", i + 1, j + 1));
    if j == i + 1 && *entry != Poly::one() {
        return Err(at("on the superdiagonal must be 1"));
    }
    if j > i + 1 && !entry.is_zero() {
        return Err(at("above the superdiagonal must be 0"));
    }
    if entry.degree() > Degree::Finite(1) {
        return Err(at("has degree above 1"));
    }
    if i != j && entry.degree() == Degree::Finite(1) {
        return Err(at("contains z off the main diagonal"));
    }
    Ok(())
}

/// `a_j^{(ℓ)}` read from a prebuilt table.
fn a_from_table(table: &CoeffTable, j: usize, ell: usize) -> Result<Poly> {
    let b = table.b(ell + j, ell)?.clone();
    Ok(if ell == 1 {
        Poly::linear(b, -Rational::one() / Rational::from(j + 1))
    } else {
        Poly::constant(b)
    })
}

fn build_from_table(table: &CoeffTable, n: usize) -> Result<HessenbergMatrix> {
    let mut entries = vec![Poly::zero(); n * n];
    for col in 0..n {
        // Column col+1 (1-based) is indexed by N = n − col.
        let big_n = n - col;
        for row in col..n {
            let b = table.b(big_n, row - col + 1)?.clone();
            entries[row * n + col] = if row == col {
                Poly::linear(b, -Rational::one() / Rational::from(big_n))
            } else {
                Poly::constant(b)
            };
        }
        if col + 1 < n {
            entries[col * n + col + 1] = Poly::one();
        }
    }
    Ok(HessenbergMatrix { n, entries })
}

pub fn build_matrix(params: &Params, n: usize) -> Result<HessenbergMatrix> {
    params.require_q1("determinant")?;
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            name: "n",
            value: 0,
            range: "[1, ∞)".into(),
        });
    }
    build_from_table(&CoeffTable::build(params, n)?, n)
}

/// Determinant through the leading principal minors
/// `d_i = Σ_{j=1}^{i} (−1)^{i−j} M(i,j) d_{j−1}`, `d_0 = 1`, which holds
/// because the superdiagonal is all ones.
pub fn hessenberg_det(m: &HessenbergMatrix) -> Poly {
    let mut minors: Vec<Poly> = Vec::with_capacity(m.n + 1);
    minors.push(Poly::one());
    for i in 0..m.n {
        let mut acc = Poly::zero();
        for (j, d) in minors.iter().enumerate() {
            let term = m.get(i, j) * d;
            acc = if (i - j) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        minors.push(acc);
    }
    minors.pop().expect("at least d_0")
}

pub fn laguerre_det(params: &Params, n: usize) -> Result<LaguerreResult> {
    params.require_q1("determinant")?;
    let poly = if n == 0 {
        Poly::one()
    } else {
        hessenberg_det(&build_matrix(params, n)?)
    };
    Ok(LaguerreResult {
        params: params.clone(),
        n,
        poly,
        method: Method::Determinant,
    })
}

/// An ordered tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Lexicographic stream of the compositions of `n` into exactly `k` parts.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let parts = self.current.take()?;
        let k = parts.len();
        // Rightmost position whose suffix still has a part above 1 to borrow from.
        let mut succ = parts.clone();
        let mut tail_excess = parts[k - 1] - 1;
        let mut pivot = None;
        for i in (0..k - 1).rev() {
            if tail_excess > 0 {
                pivot = Some(i);
                break;
            }
            tail_excess += parts[i] - 1;
        }
        if let Some(i) = pivot {
            succ[i] += 1;
            let rest: usize = parts[i + 1..].iter().sum::<usize>() - 1;
            for slot in &mut succ[i + 1..k - 1] {
                *slot = 1;
            }
            succ[k - 1] = rest - (k - 2 - i);
            self.current = Some(succ);
        }
        Some(Composition { parts })
    }
}

/// All compositions of `n` into `k` parts; empty unless `1 ≤ k ≤ n`.
pub fn compositions(n: usize, k: usize) -> Compositions {
    let current = (k >= 1 && k <= n).then(|| {
        let mut first = vec![1; k];
        first[k - 1] = n - k + 1;
        first
    });
    Compositions { current }
}

pub fn a_term(params: &Params, n: usize, j: usize, ell: usize) -> Result<Poly> {
    params.require_q1("composition")?;
    if j >= n.max(1) {
        return Err(Error::IndexOutOfRange {
            name: "j",
            value: j,
            range: format!("[0, {}]", n.saturating_sub(1)),
        });
    }
    if ell == 0 || ell + j > n {
        return Err(Error::IndexOutOfRange {
            name: "ell",
            value: ell,
            range: format!("[1, {}]", n - j),
        });
    }
    a_from_table(&CoeffTable::build(params, ell + j)?, j, ell)
}

/// The composition-sum polynomial and how many products it summed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSum {
    pub poly: Poly,
    pub terms: u64,
}

/// Depth-first sum over every composition of `n`, sharing prefix products.
pub fn composition_sum(params: &Params, n: usize, cap: usize) -> Result<CompositionSum> {
    params.require_q1("composition")?;
    if n > cap {
        return Err(Error::CompositionCapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(CompositionSum {
            poly: Poly::one(),
            terms: 0,
        });
    }
    let table = CoeffTable::build(params, n)?;
    // a[j][ell - 1] = a_j^{(ell)}
    let a = (0..n)
        .map(|j| (1..=n - j).map(|ell| a_from_table(&table, j, ell)).collect())
        .collect::<Result<Vec<Vec<Poly>>>>()?;

    struct Walk<'a> {
        a: &'a [Vec<Poly>],
        n: usize,
        plus: Poly,
        minus: Poly,
        terms: u64,
    }

    impl Walk<'_> {
        fn descend(&mut self, offset: usize, parts: usize, prefix: &Poly) {
            if offset == self.n {
                self.terms += 1;
                if (self.n - parts).is_multiple_of(2) {
                    self.plus = &self.plus + prefix;
                } else {
                    self.minus = &self.minus + prefix;
                }
                return;
            }
            for ell in 1..=self.n - offset {
                let next = prefix * &self.a[offset][ell - 1];
                self.descend(offset + ell, parts + 1, &next);
            }
        }
    }

    let mut walk = Walk {
        a: &a,
        n,
        plus: Poly::zero(),
        minus: Poly::zero(),
        terms: 0,
    };
    walk.descend(0, 0, &Poly::one());
    Ok(CompositionSum {
        poly: &walk.plus - &walk.minus,
        terms: walk.terms,
    })
}

pub fn laguerre_composition(params: &Params, n: usize) -> Result<LaguerreResult> {
    laguerre_composition_with_cap(params, n, DEFAULT_COMPOSITION_CAP)
}

pub fn laguerre_composition_with_cap(
    params: &Params,
    n: usize,
    cap: usize,
) -> Result<LaguerreResult> {
    let sum = composition_sum(params, n, cap)?;
    Ok(LaguerreResult {
        params: params.clone(),
        n,
        poly: sum.poly,
        method: Method::Composition,
    })
}
