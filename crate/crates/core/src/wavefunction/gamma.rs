use crate::error::{Error, Result};

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("log_gamma needs a finite x > 0, got {x}")));
    }
    Ok(libm::lgamma(x))
}

// Unchecked variant for arguments already known to be positive.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "ln_gamma({x})");
    libm::lgamma(x)
}

pub(crate) fn ln_factorial(k: u32) -> f64 {
    ln_gamma(f64::from(k) + 1.0)
}

/// ∫₀¹ z^{n+2ε+r−p−1}(1−z)^{p+2Λ+2} dz
/// = Γ(α₀+1)Γ(p+2Λ+3) / [α₀·Γ(α₀+p+2Λ+3)], with α₀ = n+2ε+r−p.
pub fn hyp_integral(n: u32, epsilon: f64, lambda: f64, p: u32, r: u32) -> Result<f64> {
    ln_hyp_integral(n, epsilon, lambda, p, r).map(f64::exp)
}

pub(crate) fn ln_hyp_integral(n: u32, epsilon: f64, lambda: f64, p: u32, r: u32) -> Result<f64> {
    let alpha0 = f64::from(n) + 2.0 * epsilon + f64::from(r) - f64::from(p);
    if !(alpha0 > 0.0) {
        return Err(Error::domain(format!(
            "integral diverges at z = 0: n + 2ε + r − p = {alpha0} must be positive"
        )));
    }
    let beta = f64::from(p) + 2.0 * lambda + 3.0;
    if !(beta > 0.0) {
        return Err(Error::domain(format!(
            "integral diverges at z = 1: p + 2Λ + 3 = {beta} must be positive"
        )));
    }
    Ok(ln_gamma(alpha0 + 1.0) + ln_gamma(beta) - alpha0.ln() - ln_gamma(alpha0 + beta))
}
