//! Closed-form bound-state spectrum.
//!
//! With the Greene-Aldrich replacement of `1/r²` the radial equation becomes
//! hypergeometric in z = e^{−r/b}, and every level is fixed by three numbers:
//!
//! ```text
//! a = √((1−2α)² + 4l(l+1)),   Λ = (a − 1)/2,
//! ε = [A − (n+1)² − l(l+1) − (2n+1)Λ] / [2(n+1+Λ)],
//! E = −ħ²/(2μb²) · ε².
//! ```
//!
//! ε is the decay constant of the wavefunction in units of 1/b, so a level is
//! bound only when ε > 0, i.e. when A exceeds the critical coupling
//! `A_c = (n+1+Λ)² − Λ(Λ+1) + l(l+1)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::potential::PotentialParams;
use crate::units::UnitSystem;

const ORBITAL_LETTERS: &[u8] = b"spdfghiklmnoqrtuvwxyz";

/// Radial quantum number `n` (node count) and orbital quantum number `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumState {
    pub n: u32,
    pub l: u32,
}

impl QuantumState {
    pub const fn new(n: u32, l: u32) -> Self {
        QuantumState { n, l }
    }

    /// Principal quantum number N = n + l + 1.
    pub fn principal(&self) -> u32 {
        self.n + self.l + 1
    }

    /// Parses a spectroscopic label such as `2p` or `5g`.
    pub fn from_label(label: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(label.to_string());
        let trimmed = label.trim();
        let split = trimmed
            .find(|c: char| !c.is_ascii_digit())
            .ok_or_else(bad)?;
        let (digits, letter) = trimmed.split_at(split);
        let principal: u32 = digits.parse().map_err(|_| bad())?;
        let mut chars = letter.chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return Err(bad());
        };
        let l = ORBITAL_LETTERS
            .iter()
            .position(|&x| x as char == c.to_ascii_lowercase())
            .ok_or_else(bad)? as u32;
        if principal < l + 1 {
            return Err(bad());
        }
        Ok(QuantumState::new(principal - l - 1, l))
    }

    pub fn label(&self) -> String {
        match ORBITAL_LETTERS.get(self.l as usize) {
            Some(&c) => format!("{}{}", self.principal(), c as char),
            None => format!("n={},l={}", self.n, self.l),
        }
    }
}

impl fmt::Display for QuantumState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for QuantumState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_label(s)
    }
}

/// The closed-form solution for one level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuSolution {
    pub state: QuantumState,
    pub a: f64,
    pub lambda: f64,
    pub epsilon: f64,
    pub energy: f64,
}

/// `(a, Λ)` for orbital `l`. Depends on α only through (1−2α)².
pub fn nu_parameters(alpha: f64, l: u32) -> (f64, f64) {
    let l = f64::from(l);
    let s = 1.0 - 2.0 * alpha;
    let a = (s * s + 4.0 * l * (l + 1.0)).sqrt();
    (a, 0.5 * (a - 1.0))
}

/// ε without the bound-state check; negative below threshold.
pub fn signed_epsilon(p: &PotentialParams, s: QuantumState) -> f64 {
    let (_, lambda) = nu_parameters(p.alpha(), s.l);
    let n = f64::from(s.n);
    let l = f64::from(s.l);
    let numerator = p.strength() - (n + 1.0).powi(2) - l * (l + 1.0) - (2.0 * n + 1.0) * lambda;
    numerator / (2.0 * (n + 1.0 + lambda))
}

pub fn epsilon(p: &PotentialParams, s: QuantumState) -> Result<f64> {
    if !is_bound(p, s) {
        return Err(not_bound(p, s));
    }
    Ok(signed_epsilon(p, s))
}

/// E = −ħ²/(2μb²)·ε². Evaluated for any state; it is only physical when
/// [`is_bound`] holds.
pub fn energy(p: &PotentialParams, u: &UnitSystem, s: QuantumState) -> f64 {
    let eps = signed_epsilon(p, s);
    -p.energy_scale(u) * eps * eps
}

pub fn critical_coupling(s: QuantumState, alpha: f64) -> f64 {
    let (_, lambda) = nu_parameters(alpha, s.l);
    let n = f64::from(s.n);
    let l = f64::from(s.l);
    (n + 1.0 + lambda).powi(2) - lambda * (lambda + 1.0) + l * (l + 1.0)
}

/// Strict: a level sitting exactly at threshold is not normalizable.
pub fn is_bound(p: &PotentialParams, s: QuantumState) -> bool {
    p.strength() > critical_coupling(s, p.alpha())
}

pub fn solve(p: &PotentialParams, u: &UnitSystem, s: QuantumState) -> Result<NuSolution> {
    let epsilon = epsilon(p, s)?;
    let (a, lambda) = nu_parameters(p.alpha(), s.l);
    Ok(NuSolution {
        state: s,
        a,
        lambda,
        epsilon,
        energy: -p.energy_scale(u) * epsilon * epsilon,
    })
}

/// All bound levels with `l ≤ l_max`, deepest first.
pub fn enumerate_bound_states(
    p: &PotentialParams,
    u: &UnitSystem,
    l_max: u32,
) -> Vec<(QuantumState, f64)> {
    let mut levels = Vec::new();
    for l in 0..=l_max {
        // A_c grows with n, so the first unbound n ends the ladder.
        let mut n = 0;
        loop {
            let s = QuantumState::new(n, l);
            if !is_bound(p, s) {
                break;
            }
            levels.push((s, energy(p, u, s)));
            n += 1;
        }
    }
    levels.sort_by(|(sa, ea), (sb, eb)| {
        ea.total_cmp(eb)
            .then_with(|| sa.principal().cmp(&sb.principal()))
            .then_with(|| sa.l.cmp(&sb.l))
    });
    levels
}

/// Hulthén levels (α = 0 or 1):
/// `E = −[A − N²]² ħ² / (8μb²N²)` with N = n + l + 1.
pub fn hulthen_energy(strength: f64, b: f64, u: &UnitSystem, s: QuantumState) -> Result<f64> {
    let scale = u.energy_scale(b)?;
    let big_n = f64::from(s.principal());
    if strength <= big_n * big_n {
        return Err(Error::NotBound {
            state: s,
            coupling: strength,
            critical: big_n * big_n,
        });
    }
    let gap = strength - big_n * big_n;
    Ok(-scale * gap * gap / (4.0 * big_n * big_n))
}

/// Hulthén levels in the charge parameterization V₀ = Ze²δ:
/// `E = −μ(Ze²)²/(2ħ²) · [1/N − ħ²δN/(2Ze²μ)]²`.
pub fn hulthen_energy_charge(z: f64, delta: f64, u: &UnitSystem, s: QuantumState) -> Result<f64> {
    if !(z > 0.0 && delta > 0.0) {
        return Err(Error::domain(format!(
            "charge and screening must be positive, got Z={z}, delta={delta}"
        )));
    }
    let ze2 = z * u.e2();
    let big_n = f64::from(s.principal());
    let hbar2 = u.hbar() * u.hbar();
    let bracket = 1.0 / big_n - hbar2 * delta * big_n / (2.0 * ze2 * u.mu());
    if bracket <= 0.0 {
        let critical = big_n * big_n;
        return Err(Error::NotBound {
            state: s,
            coupling: 2.0 * u.mu() * ze2 / (hbar2 * delta),
            critical,
        });
    }
    Ok(-u.mu() * ze2 * ze2 / (2.0 * hbar2) * bracket * bracket)
}

/// Coulomb levels `−ε₀/N²` with ε₀ = Z²ħ²/(2μa₀²), a₀ = ħ²/(μe²).
pub fn coulomb_energy(z: f64, u: &UnitSystem, s: QuantumState) -> Result<f64> {
    if !(z.is_finite() && z > 0.0) {
        return Err(Error::domain(format!("charge must be positive, got {z}")));
    }
    let bohr = u.hbar() * u.hbar() / (u.mu() * u.e2());
    let eps0 = z * z * u.kinetic_factor() / (bohr * bohr);
    let big_n = f64::from(s.principal());
    Ok(-eps0 / (big_n * big_n))
}

fn not_bound(p: &PotentialParams, s: QuantumState) -> Error {
    Error::NotBound {
        state: s,
        coupling: p.strength(),
        critical: critical_coupling(s, p.alpha()),
    }
}
