//! Radial wavefunctions `R(r) = N z^ε (1−z)^{1+Λ} P_n^{(2ε, 2Λ+1)}(1−2z)`, z = e^{−r/b}.

mod gamma;
mod jacobi;

pub use gamma::{hyp_integral, log_gamma};
pub use jacobi::{jacobi, JacobiParams};

use gamma::{ln_factorial, ln_gamma, ln_hyp_integral};

use crate::error::{Error, Result};
use crate::potential::{exp_pair, PotentialParams};
use crate::quadrature::{self, Tolerance};
use crate::spectrum::{self, QuantumState};
use crate::units::UnitSystem;

/// Decay lengths b/ε covered past the bulk of the wavefunction.
const TAIL_DECAY_LENGTHS: f64 = 50.0;

fn check_indices(epsilon: f64, lambda: f64, b: f64) -> Result<()> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::domain(format!("ε must be positive, got {epsilon}")));
    }
    if !(lambda.is_finite() && lambda >= -0.5) {
        return Err(Error::domain(format!("Λ must be at least −1/2, got {lambda}")));
    }
    if !(b.is_finite() && b > 0.0) {
        return Err(Error::domain(format!("b must be positive, got {b}")));
    }
    Ok(())
}

/// N = 1/√s(n), with s(n) = ∫₀^∞ (R/N)² dr summed term by term from the
/// explicit Jacobi expansion and Beta integrals.
///
/// Term (p, r) carries Γ(n+2ε+2Λ+r+2)·B(n+2ε+r−p, p+2Λ+3) over the Jacobi
/// coefficients. The Γ functions that grow with p and r cancel to short
/// products, so only the common factor goes through log Γ. This keeps the
/// rounding in each term at a few ulps, which matters because the signed sum
/// cancels heavily for n ≥ 3 and large ε.
pub fn normalization_constant(state: QuantumState, epsilon: f64, lambda: f64, b: f64) -> Result<f64> {
    check_indices(epsilon, lambda, b)?;
    let n = state.n;
    let nf = f64::from(n);
    let (e2, l2) = (2.0 * epsilon, 2.0 * lambda);
    for p in 0..=n {
        // Every Beta integral must converge, not only the ones kept below.
        ln_hyp_integral(n, epsilon, lambda, p, 0)?;
    }

    // Γ(n+2Λ+2)Γ(n+2ε+1)² / [Γ(n+2ε+2Λ+2) Γ(2ε+1) (n!)²]
    let ln_common = ln_gamma(nf + l2 + 2.0) + 2.0 * ln_gamma(nf + e2 + 1.0)
        - ln_gamma(nf + e2 + l2 + 2.0)
        - ln_gamma(e2 + 1.0)
        - 2.0 * ln_factorial(n);

    let binom: Vec<f64> = (0..=n).map(|k| binomial(n, k)).collect();
    let (mut sum, mut carry) = (0.0f64, 0.0f64);
    let mut add = |x: f64| {
        // Neumaier summation.
        let t = sum + x;
        carry += if sum.abs() >= x.abs() { (sum - t) + x } else { (x - t) + sum };
        sum = t;
    };
    for p in 0..=n {
        let k = f64::from(n - p);
        let pf = f64::from(p);
        for r in 0..=n {
            let rf = f64::from(r);
            // Γ(2ε+k+r)Γ(2ε+1) / [Γ(2ε+k+1)Γ(2ε+r+1)] with k = n − p.
            let ratio = if r == 0 {
                1.0 / (e2 + k)
            } else {
                (1..r).fold(1.0 / (e2 + rf), |acc, j| {
                    let j = f64::from(j);
                    acc * (e2 + k + j) / (e2 + j)
                })
            };
            let mag = binom[p as usize] * binom[r as usize] * (pf + l2 + 2.0) / (nf + e2 + l2 + 2.0 + rf) * ratio;
            let sign = if (n + p + r).is_multiple_of(2) { 1.0 } else { -1.0 };
            add(sign * mag);
        }
    }
    let reduced = sum + carry;
    if !(reduced > 0.0) || !reduced.is_finite() {
        return Err(Error::Numerical(format!(
            "normalization sum for {state} is not positive ({reduced:e} × e^{ln_common:.3})"
        )));
    }
    let ln_s = b.ln() + ln_common + reduced.ln();
    Ok((-0.5 * ln_s).exp())
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * f64::from(n - j) / f64::from(k - j))
}

/// The same constant from direct quadrature of
/// b·∫₀¹ z^{2ε−1}(1−z)^{2Λ+2}[P_n^{(2ε,2Λ+1)}(1−2z)]² dz.
pub fn quadrature_normalization(state: QuantumState, epsilon: f64, lambda: f64, b: f64) -> Result<f64> {
    check_indices(epsilon, lambda, b)?;
    let jp = JacobiParams::new(state.n, 2.0 * epsilon, 2.0 * lambda + 1.0)?;
    let integrand = |z: f64| {
        if z <= 0.0 || z >= 1.0 {
            return 0.0;
        }
        let w = ((2.0 * epsilon - 1.0) * z.ln() + (2.0 * lambda + 2.0) * (-z).ln_1p()).exp();
        let p = jp.eval(1.0 - 2.0 * z);
        w * p * p
    };
    let integral = quadrature::integrate_unit_interval(integrand, Tolerance::new(f64::MIN_POSITIVE, 1e-12))?;
    let s = b * integral.value;
    if !(s > 0.0) {
        return Err(Error::Numerical(format!("quadrature normalization of {state} is not positive")));
    }
    Ok(1.0 / s.sqrt())
}

/// A normalized bound-state radial function.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialWavefunction {
    state: QuantumState,
    epsilon: f64,
    lambda: f64,
    b: f64,
    norm: f64,
    jacobi: JacobiParams,
}

impl RadialWavefunction {
    pub fn new(params: &PotentialParams, units: &UnitSystem, state: QuantumState) -> Result<Self> {
        let sol = spectrum::solve(params, units, state)?;
        Self::from_parts(state, sol.epsilon, sol.lambda, params.b())
    }

    pub fn from_parts(state: QuantumState, epsilon: f64, lambda: f64, b: f64) -> Result<Self> {
        let norm = normalization_constant(state, epsilon, lambda, b)?;
        let jacobi = JacobiParams::new(state.n, 2.0 * epsilon, 2.0 * lambda + 1.0)?;
        Ok(RadialWavefunction {
            state,
            epsilon,
            lambda,
            b,
            norm,
            jacobi,
        })
    }

    pub fn state(&self) -> QuantumState {
        self.state
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// R(r). The origin and anything left of it evaluate to 0.
    pub fn value(&self, r: f64) -> f64 {
        if !(r > 0.0) {
            return 0.0;
        }
        if r.is_infinite() {
            return 0.0;
        }
        let t = r / self.b;
        let (z, one_minus_z) = exp_pair(t);
        let envelope = (self.norm.ln() - self.epsilon * t + (1.0 + self.lambda) * one_minus_z.ln()).exp();
        envelope * self.jacobi.eval(1.0 - 2.0 * z)
    }

    /// Radius past which R² has decayed by e^{−100} from its peak region.
    pub fn extent(&self) -> f64 {
        self.b * (TAIL_DECAY_LENGTHS + 1.0 + self.lambda + f64::from(self.state.n)) / self.epsilon
    }

    /// ∫₀^∞ R² dr by adaptive quadrature.
    pub fn norm_integral(&self) -> Result<f64> {
        let r_max = self.extent();
        let panels = 64;
        let breaks: Vec<f64> = (0..=panels).map(|i| r_max * f64::from(i) / f64::from(panels)).collect();
        let result = quadrature::integrate_panels(
            |r| {
                let v = self.value(r);
                v * v
            },
            &breaks,
            Tolerance::new(1e-13, 1e-12),
        )?;
        Ok(result.value)
    }

    /// Sign changes of R sampled on `samples` points over (0, extent).
    pub fn node_count(&self, samples: usize) -> usize {
        let r_max = self.extent();
        let values: Vec<f64> = (1..samples)
            .map(|i| self.value(r_max * i as f64 / samples as f64))
            .collect();
        let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let floor = 1e-12 * peak;
        let mut last_sign = 0.0;
        let mut nodes = 0;
        for v in values {
            if v.abs() <= floor {
                continue;
            }
            let sign = v.signum();
            if last_sign != 0.0 && sign != last_sign {
                nodes += 1;
            }
            last_sign = sign;
        }
        nodes
    }
}

/// Hulthén bound state for V = −Ze²δ e^{−δr}/(1−e^{−δr}): Λ = l and
/// ε = (A − N²)/(2N) with A = Ze²δ·2μ/(ħ²δ²).
pub fn hulthen_wavefunction(z: f64, delta: f64, units: &UnitSystem, state: QuantumState) -> Result<RadialWavefunction> {
    let params = PotentialParams::hulthen(z, delta, units)?;
    let big_n = f64::from(state.principal());
    let eps = (params.strength() - big_n * big_n) / (2.0 * big_n);
    if !(eps > 0.0) {
        return Err(Error::NotBound {
            state,
            coupling: params.strength(),
            critical: big_n * big_n,
        });
    }
    RadialWavefunction::from_parts(state, eps, f64::from(state.l), params.b())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn table_state(alpha: f64, n: u32, l: u32) -> RadialWavefunction {
        let p = PotentialParams::with_twice_range(alpha, 0.025).unwrap();
        RadialWavefunction::new(&p, &UnitSystem::atomic(), QuantumState::new(n, l)).unwrap()
    }

    #[test]
    fn ground_state_closed_form() {
        // n = 0: s = b·Γ(2ε)Γ(2Λ+3)/Γ(2ε+2Λ+3)
        let (eps, lam, b) = (1.3, 0.4, 2.0);
        let s = b * (ln_gamma(2.0 * eps) + ln_gamma(2.0 * lam + 3.0) - ln_gamma(2.0 * eps + 2.0 * lam + 3.0)).exp();
        let n = normalization_constant(QuantumState::new(0, 1), eps, lam, b).unwrap();
        assert_relative_eq!(n, 1.0 / s.sqrt(), max_relative = 1e-13);
    }

    #[test]
    fn closed_form_matches_quadrature() {
        for &(n, eps, lam) in &[(0, 19.64, 0.936), (1, 3.2, 1.5), (2, 0.8, 0.0), (3, 12.5, 2.2), (4, 6.1, 1.23)] {
            let s = QuantumState::new(n, 1);
            let closed = normalization_constant(s, eps, lam, 40.0).unwrap();
            let quad = quadrature_normalization(s, eps, lam, 40.0).unwrap();
            assert_relative_eq!(closed, quad, max_relative = 1e-9);
        }
    }

    #[test]
    fn scales_with_b() {
        let s = QuantumState::new(2, 1);
        let n1 = normalization_constant(s, 4.0, 1.0, 10.0).unwrap();
        let n2 = normalization_constant(s, 4.0, 1.0, 20.0).unwrap();
        assert_relative_eq!(n2, n1 / 2f64.sqrt(), max_relative = 1e-13);
    }

    #[test]
    fn boundary_values() {
        let w = table_state(0.75, 1, 2);
        assert_eq!(w.value(0.0), 0.0);
        assert_eq!(w.value(f64::INFINITY), 0.0);
        let peak = (1..2000).map(|i| w.value(i as f64 * 0.1).abs()).fold(0.0, f64::max);
        assert!(w.value(1e-6 * w.b()).abs() < 1e-10 * peak);
        assert!(w.value(60.0 * w.b() / w.epsilon()).abs() < 1e-10 * peak);
    }

    #[test]
    fn unit_norm_in_r() {
        for (n, l) in [(0, 1), (0, 2), (1, 1)] {
            let w = table_state(0.75, n, l);
            assert_relative_eq!(w.norm_integral().unwrap(), 1.0, max_relative = 1e-9);
        }
    }

    #[test]
    fn hulthen_matches_general_form() {
        let u = UnitSystem::atomic();
        let s = QuantumState::new(1, 1);
        let h = hulthen_wavefunction(1.0, 0.025, &u, s).unwrap();
        let p = PotentialParams::hulthen(1.0, 0.025, &u).unwrap();
        let g = RadialWavefunction::new(&p, &u, s).unwrap();
        for i in 1..50 {
            let r = i as f64 * 0.7;
            assert_relative_eq!(h.value(r), g.value(r), max_relative = 1e-12);
        }
    }

    #[test]
    fn hulthen_unbound() {
        let u = UnitSystem::atomic();
        assert!(matches!(
            hulthen_wavefunction(1.0, 2.5, &u, QuantumState::new(0, 0)),
            Err(Error::NotBound { .. })
        ));
    }

    #[test]
    fn rejects_bad_indices() {
        let s = QuantumState::new(0, 0);
        assert!(normalization_constant(s, 0.0, 1.0, 1.0).is_err());
        assert!(normalization_constant(s, 1.0, -0.7, 1.0).is_err());
        assert!(normalization_constant(s, 1.0, 1.0, -1.0).is_err());
    }
}
