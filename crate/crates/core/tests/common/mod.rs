//! Independent oracles and fixture loading shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};
use std::path::PathBuf;

/// Tanh-sinh quadrature of `f(z, 1−z)` over [0, 1].
///
/// Both arguments are passed so the integrand can form endpoint powers without
/// cancellation. Handles integrable power singularities at either end.
pub fn tanh_sinh<F: Fn(f64, f64) -> f64>(f: F) -> f64 {
    let t_max = 6.5;
    let term = |t: f64| {
        let u = FRAC_PI_2 * t.sinh();
        let z = 1.0 / (1.0 + (-2.0 * u).exp());
        let w = 1.0 / (1.0 + (2.0 * u).exp());
        if z == 0.0 || w == 0.0 {
            return 0.0;
        }
        f(z, w) * PI * t.cosh() * z * w
    };
    let mut h = 0.5;
    let mut sum = term(0.0);
    let mut k = 1;
    while f64::from(k) * h <= t_max {
        let t = f64::from(k) * h;
        sum += term(t) + term(-t);
        k += 1;
    }
    let mut estimate = sum * h;
    for _ in 0..10 {
        h *= 0.5;
        // Add the odd nodes of the refined grid.
        let mut k = 1;
        while f64::from(k) * h <= t_max {
            let t = f64::from(k) * h;
            sum += term(t) + term(-t);
            k += 2;
        }
        let next = sum * h;
        let done = (next - estimate).abs() <= 1e-15 * next.abs();
        estimate = next;
        if done {
            break;
        }
    }
    estimate
}

/// Generalized binomial C(x, k) by its falling product.
pub fn binomial(x: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (x - f64::from(j)) / f64::from(k - j))
}

/// P_n^{(ρ,ν)}(ξ) = 2^{−n} Σ_p (−1)^{n−p} C(n+ρ, p) C(n+ν, n−p) (1−ξ)^{n−p} (1+ξ)^p.
/// Returns (value, Σ|terms|).
pub fn jacobi_sum_binomial(n: u32, rho: f64, nu: f64, xi: f64) -> (f64, f64) {
    let nf = f64::from(n);
    let mut value = 0.0;
    let mut size = 0.0;
    for p in 0..=n {
        let sign = if (n - p).is_multiple_of(2) { 1.0 } else { -1.0 };
        let t = binomial(nf + rho, p) * binomial(nf + nu, n - p) * (1.0 - xi).powi((n - p) as i32)
            * (1.0 + xi).powi(p as i32);
        value += sign * t;
        size += t.abs();
    }
    let scale = 0.5f64.powi(n as i32);
    (value * scale, size * scale)
}

/// P_n^{(ρ,ν)}(ξ) = Γ(n+ρ+1)/(n!Γ(n+ρ+ν+1)) Σ_r C(n,r) Γ(n+ρ+ν+r+1)/Γ(r+ρ+1) ((ξ−1)/2)^r,
/// with the Γ ratios expanded as finite products. Returns (value, Σ|terms|).
pub fn jacobi_sum_gamma(n: u32, rho: f64, nu: f64, xi: f64) -> (f64, f64) {
    let nf = f64::from(n);
    let x = 0.5 * (xi - 1.0);
    let mut value = 0.0;
    let mut size = 0.0;
    for r in 0..=n {
        // Γ(n+ρ+1)/Γ(r+ρ+1) = Π_{j=r+1}^{n} (j+ρ)
        let upper: f64 = (r + 1..=n).map(|j| f64::from(j) + rho).product();
        // Γ(n+ρ+ν+r+1)/Γ(n+ρ+ν+1) = Π_{j=1}^{r} (n+ρ+ν+j)
        let rising: f64 = (1..=r).map(|j| nf + rho + nu + f64::from(j)).product();
        let n_fact: f64 = (1..=n).map(f64::from).product();
        let t = binomial(nf, r) * upper * rising / n_fact * x.powi(r as i32);
        value += t;
        size += t.abs();
    }
    (value, size)
}

/// ln Γ(x) from the Stirling series after shifting the argument past 20.
pub fn ln_gamma_series(x: f64) -> f64 {
    let mut shift = 0.0;
    let mut y = x;
    while y < 20.0 {
        shift += y.ln();
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let series = inv
        * (1.0 / 12.0
            - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 / 1188.0))));
    (y - 0.5) * y.ln() - y + 0.5 * (2.0 * PI).ln() + series - shift
}

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data").join(name)
}

/// A published table: header plus rows of (state label, 1/b, cells).
pub struct Fixture {
    pub columns: Vec<String>,
    pub rows: Vec<(String, f64, Vec<Option<f64>>)>,
}

impl Fixture {
    pub fn load(name: &str) -> Fixture {
        let mut reader = csv::Reader::from_path(data_path(name)).expect("fixture exists");
        let header = reader.headers().expect("fixture header").clone();
        let columns = header.iter().skip(2).map(str::to_owned).collect();
        let rows = reader
            .records()
            .map(|rec| {
                let rec = rec.expect("fixture row");
                let state = rec[0].to_owned();
                let inv_b = rec[1].parse().expect("1/b");
                let cells = rec
                    .iter()
                    .skip(2)
                    .map(|c| if c.trim().is_empty() { None } else { Some(c.trim().parse().expect("number")) })
                    .collect();
                (state, inv_b, cells)
            })
            .collect();
        Fixture { columns, rows }
    }

    pub fn column(&self, name: &str) -> usize {
        self.columns.iter().position(|c| c == name).unwrap_or_else(|| panic!("no column {name}"))
    }
}
