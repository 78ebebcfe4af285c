//! Exit criteria. Prints one `[PASS]`/`[FAIL]` line per criterion and exits
//! non-zero if any is red. Run with `cargo test -p genlaguerre-cli --test acceptance`.

#![allow(clippy::needless_range_loop)]

use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use genlaguerre::{
    build_matrix, coeff_c, factorial, gamma_ratio, gen_binomial, hessenberg_det, laguerre_closed,
    laguerre_composition, laguerre_det, laguerre_eval_float, laguerre_recurrence, laguerre_series,
    log_gamma, three_term, Degree, HessenbergMatrix, Params, Poly, Rational,
};
use genlaguerre_cli::CoeffRecord;

const BETAS: [&str; 4] = ["0", "1/2", "-1/3", "7/2"];

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn params(alpha: u32, beta: &str, q: u32) -> Params {
    Params::new(alpha, r(beta), q).unwrap()
}

fn verdict(id: u32, title: &str, failures: &[String]) -> bool {
    if failures.is_empty() {
        println!("[PASS] criterion {id}: {title}");
    } else {
        println!(
            "[FAIL] criterion {id}: {title} ({} violations; first: {})",
            failures.len(),
            failures[0]
        );
    }
    failures.is_empty()
}

fn main() -> std::process::ExitCode {
    let criteria: [fn() -> bool; 8] = [
        criterion_1_five_way_agreement,
        criterion_2_series_closed_higher_q,
        criterion_3_alpha_one_specialization,
        criterion_4_structural_invariants,
        criterion_5_inner_sum_identity,
        criterion_6_float_fidelity,
        criterion_7_determinant_engine,
        criterion_8_cli_contract,
    ];
    let passed = criteria.iter().filter(|c| c()).count();
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if passed == criteria.len() {
        std::process::ExitCode::SUCCESS
    } else {
        std::process::ExitCode::FAILURE
    }
}

fn criterion_1_five_way_agreement() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for alpha in 1..=3 {
        for beta in BETAS {
            let pr = params(alpha, beta, 1);
            let recurrence = laguerre_recurrence(&pr, 12).unwrap();
            for n in 0..=12 {
                let closed = laguerre_closed(&pr, n).poly;
                let mut routes = vec![
                    ("series", laguerre_series(&pr, n).poly),
                    ("recurrence", recurrence[n].poly.clone()),
                    ("determinant", laguerre_det(&pr, n).unwrap().poly),
                ];
                if n <= 10 {
                    routes.push(("composition", laguerre_composition(&pr, n).unwrap().poly));
                }
                for (name, poly) in routes {
                    if poly != closed {
                        failures.push(format!("{pr} n={n}: {name} = {poly} vs closed = {closed}"));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("runtime {elapsed:?} exceeds 60 s"));
    }
    verdict(1, "five-way exact agreement, q = 1, n <= 12", &failures)
}

fn criterion_2_series_closed_higher_q() -> bool {
    let mut failures = Vec::new();
    for q in [2, 3] {
        for alpha in 1..=3 {
            for beta in BETAS {
                let pr = params(alpha, beta, q);
                for n in 0..=20 {
                    let s = laguerre_series(&pr, n).poly;
                    let c = laguerre_closed(&pr, n).poly;
                    if s != c {
                        failures.push(format!("{pr} n={n}: series {s} vs closed {c}"));
                    }
                    if s.degree() != Degree::Finite(n / q as usize) {
                        failures.push(format!("{pr} n={n}: degree {:?}", s.degree()));
                    }
                }
            }
        }
    }
    verdict(2, "series = closed for q in {2,3}, n <= 20, exact degree", &failures)
}

fn criterion_3_alpha_one_specialization() -> bool {
    let mut failures = Vec::new();
    for beta in BETAS {
        let b = r(beta);
        let pr = params(1, beta, 1);
        for n in 1..=40usize {
            let nn = Rational::from(n);
            let c1 = coeff_c(&pr, n, 1).unwrap();
            let want1 = (Rational::from(2 * n - 1) + &b) / &nn;
            if c1 != want1 {
                failures.push(format!("beta={beta} n={n}: C_(n,1) = {c1}, expected {want1}"));
            }
            if n >= 2 {
                let c2 = coeff_c(&pr, n, 2).unwrap();
                let want2 = (Rational::from(n - 1) + &b) / &nn;
                if c2 != want2 {
                    failures.push(format!("beta={beta} n={n}: C_(n,2) = {c2}, expected {want2}"));
                }
            }
            for m in 3..=n {
                let c = coeff_c(&pr, n, m).unwrap();
                if !c.is_zero() {
                    failures.push(format!("beta={beta} n={n} m={m}: C = {c}, expected 0"));
                }
            }
        }
        for res in three_term(&b, 50).unwrap() {
            if res.poly != laguerre_closed(&pr, res.n).poly {
                failures.push(format!("beta={beta} n={}: three-term differs from closed", res.n));
            }
        }
    }
    verdict(3, "alpha = 1 coefficient closed forms and three-term recurrence", &failures)
}

fn criterion_4_structural_invariants() -> bool {
    let mut failures = Vec::new();
    for alpha in 1..=3 {
        for beta in BETAS {
            let pr = params(alpha, beta, 1);
            for n in 0..=20 {
                let l = laguerre_closed(&pr, n).poly;
                let lead = Rational::sign_power(n) / Rational::from(factorial(n));
                if l.leading_coeff() != Some(&lead) {
                    failures.push(format!("{pr} n={n}: leading coefficient {:?}", l.leading_coeff()));
                }
                if alpha == 1 {
                    let want = gen_binomial(&(Rational::from(n) + pr.beta()), n);
                    if l.eval(&Rational::zero()) != want {
                        failures.push(format!("{pr} n={n}: L_n(0) != binom(n+beta, n)"));
                    }
                    if n >= 1 {
                        let m = build_matrix(&pr, n).unwrap();
                        for i in 0..n {
                            for j in 0..i.saturating_sub(1) {
                                if !m.get(i, j).is_zero() {
                                    failures.push(format!("{pr} n={n}: entry ({},{}) nonzero", i + 1, j + 1));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    verdict(4, "leading coefficient, value at zero, banded alpha = 1 matrix", &failures)
}

fn criterion_5_inner_sum_identity() -> bool {
    // Stated form: Σ_{m=1}^{n−j} (−1)^{m−1} C_{n,m}/(n−j−m)!
    //   = Γ(αn+β+1)/(Γ(α(n−1)+β+1)(n−j)!) + (−1)^n j Γ(αj+β+1)/(n Γ(α(j−1)+β+1)(n−j)!)
    let mut failures = Vec::new();
    let mut checked = 0;
    for alpha in 1..=2 {
        for beta in BETAS {
            let pr = params(alpha, beta, 1);
            let b = r(beta);
            for n in 1..=10usize {
                for j in 0..=n {
                    let lhs: Rational = (1..=n - j)
                        .map(|m| {
                            Rational::sign_power(m - 1) * coeff_c(&pr, n, m).unwrap()
                                / Rational::from(factorial(n - j - m))
                        })
                        .sum();
                    let tail = Rational::from(factorial(n - j));
                    let mut rhs = gamma_ratio(&b, alpha, n, n - 1).unwrap() / &tail;
                    if j > 0 {
                        rhs = rhs
                            + Rational::sign_power(n) * Rational::from(j)
                                * gamma_ratio(&b, alpha, j, j - 1).unwrap()
                                / (Rational::from(n) * &tail);
                    }
                    checked += 1;
                    if lhs != rhs {
                        failures.push(format!("alpha={alpha} beta={beta} n={n} j={j}: lhs {lhs} vs rhs {rhs}"));
                    }
                }
            }
        }
    }
    verdict(5, &format!("inner-sum identity from the recurrence proof, {checked} grid points"), &failures)
}

fn criterion_6_float_fidelity() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let zs = ["-5", "-7/2", "-2", "-1", "-1/2", "0", "1/2", "1", "2", "7/2", "5"];
    let mut compared = 0;
    for alpha in 1..=3u32 {
        for beta in ["0", "1/2", "-1/3"] {
            for q in 1..=2u32 {
                let pr = params(alpha, beta, q);
                for n in 0..=15 {
                    let poly = laguerre_closed(&pr, n).poly;
                    for z in zs {
                        let e = laguerre_eval_float(alpha as f64, r(beta).to_f64(), q, n, r(z).to_f64()).unwrap();
                        if e.condition > 1e3 {
                            continue;
                        }
                        compared += 1;
                        let exact = poly.eval(&r(z)).to_f64();
                        let scale = exact.abs().max(e.abs_term_sum * 1e-16);
                        let rel = (e.value - exact).abs() / scale;
                        if rel.is_nan() || rel > 1e-9 {
                            failures.push(format!("{pr} n={n} z={z}: float {} vs exact {exact} (rel {rel:e})", e.value));
                        }
                    }
                }
            }
        }
    }
    if compared == 0 {
        failures.push("no well-conditioned points compared".into());
    }
    for k in 0..=170usize {
        let f = factorial(k);
        let bits = f.bits();
        let exact = if bits <= 64 {
            Rational::from(f).to_f64().ln()
        } else {
            let shift = bits - 64;
            Rational::from(f >> shift).to_f64().ln() + shift as f64 * std::f64::consts::LN_2
        };
        let got = log_gamma(k as f64 + 1.0).unwrap();
        let ok = if exact == 0.0 { got == 0.0 } else { ((got - exact) / exact).abs() <= 1e-12 };
        if !ok {
            failures.push(format!("log_gamma({}) = {got} vs ln({k}!) = {exact}", k + 1));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(10) {
        failures.push(format!("runtime {elapsed:?} exceeds 10 s"));
    }
    verdict(6, "float path within 1e-9 where condition <= 1e3; log_gamma within 1e-12", &failures)
}

/// Laplace expansion along the first row.
fn cofactor_det(m: &[Vec<Poly>]) -> Poly {
    if m.is_empty() {
        return Poly::one();
    }
    let mut total = Poly::zero();
    for col in 0..m.len() {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][col] * &cofactor_det(&minor);
        total = if col % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

fn criterion_7_determinant_engine() -> bool {
    let mut rng = StdRng::seed_from_u64(0x1a6e_44e7);
    let small = |rng: &mut StdRng| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=6)).unwrap();
    let mut failures = Vec::new();
    for case in 0..200 {
        let n = rng.gen_range(1..=6);
        let mut rows = vec![vec![Poly::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                rows[i][j] = if j == i + 1 {
                    Poly::one()
                } else if j == i {
                    Poly::linear(small(&mut rng), small(&mut rng))
                } else if j < i {
                    Poly::constant(small(&mut rng))
                } else {
                    Poly::zero()
                };
            }
        }
        let m = HessenbergMatrix::from_rows(rows.clone()).unwrap();
        if hessenberg_det(&m) != cofactor_det(&rows) {
            failures.push(format!("case {case} (size {n})"));
        }
    }
    verdict(7, "Hessenberg determinant = cofactor expansion on 200 random matrices", &failures)
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_genlaguerre"))
}

fn criterion_8_cli_contract() -> bool {
    let mut failures = Vec::new();

    let clean = bin().arg("verify").output().unwrap();
    if clean.status.code() != Some(0) {
        failures.push(format!("default verify exited {:?}", clean.status.code()));
    }

    let faulty = bin()
        .args(["verify", "--inject-fault", "recurrence,3,-1/3,1,7,2"])
        .output()
        .unwrap();
    if faulty.status.code() != Some(1) {
        failures.push(format!("corrupted verify exited {:?}", faulty.status.code()));
    }
    let report: serde_json::Value = serde_json::from_slice(&faulty.stdout).unwrap_or_default();
    let d = &report["first_discrepancy"];
    let localized = d["alpha"] == 3
        && d["beta"] == "-1/3"
        && d["q"] == 1
        && d["n"] == 7
        && d["index"] == 2
        && (d["left"] == "recurrence" || d["right"] == "recurrence");
    if !localized {
        failures.push(format!("discrepancy not localized: {d}"));
    }

    for (alpha, beta, q, n, method) in [(1, "0", 1, 2, "closed"), (3, "7/2", 1, 9, "determinant"), (2, "-1/3", 3, 11, "series")] {
        let out = bin()
            .args(["coeffs", "--alpha", &alpha.to_string(), "--beta", beta, "--q", &q.to_string()])
            .args(["--n", &n.to_string(), "--method", method, "--format", "json"])
            .output()
            .unwrap();
        let record: Result<CoeffRecord, _> = serde_json::from_slice(&out.stdout);
        let expected = laguerre_closed(&params(alpha, beta, q), n).poly;
        match record {
            Ok(rec) if rec.coeffs == expected => {}
            Ok(rec) => failures.push(format!("round trip mismatch: {} vs {expected}", rec.coeffs)),
            Err(e) => failures.push(format!("unparseable coeffs output: {e}")),
        }
    }
    verdict(8, "verify exit codes, fault localization, structured output round trip", &failures)
}
