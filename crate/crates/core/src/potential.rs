//! The Manning-Rosen potential and centrifugal-term approximations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::units::UnitSystem;

/// Parameters of the Manning-Rosen potential.
///
/// `strength` (A) and `alpha` are dimensionless; `b` is the screening length
/// in the length unit of whichever [`UnitSystem`] the potential is evaluated in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    strength: f64,
    alpha: f64,
    b: f64,
}

impl PotentialParams {
    pub fn new(strength: f64, alpha: f64, b: f64) -> Result<Self> {
        if !(b.is_finite() && b > 0.0) {
            return Err(Error::domain(format!(
                "screening length must be positive, got {b}"
            )));
        }
        if !strength.is_finite() || !alpha.is_finite() {
            return Err(Error::domain(format!(
                "A and alpha must be finite, got A={strength}, alpha={alpha}"
            )));
        }
        Ok(PotentialParams { strength, alpha, b })
    }

    /// Parameters with the tabulated convention A = 2b, given 1/b.
    pub fn with_twice_range(alpha: f64, inv_b: f64) -> Result<Self> {
        if !(inv_b.is_finite() && inv_b > 0.0) {
            return Err(Error::domain(format!("1/b must be positive, got {inv_b}")));
        }
        let b = 1.0 / inv_b;
        Self::new(2.0 * b, alpha, b)
    }

    /// Hulthén potential −Ze²δ e^{−δr}/(1−e^{−δr}) written as α = 0 Manning-Rosen
    /// parameters: b = 1/δ and A·ħ²/(2μb²) = Ze²δ.
    pub fn hulthen(z: f64, delta: f64, units: &UnitSystem) -> Result<Self> {
        if !(delta.is_finite() && delta > 0.0) {
            return Err(Error::domain(format!(
                "screening parameter must be positive, got {delta}"
            )));
        }
        let b = 1.0 / delta;
        let strength = z * units.e2() * delta / units.energy_scale(b)?;
        Self::new(strength, 0.0, b)
    }

    pub fn strength(&self) -> f64 {
        self.strength
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// ħ²/(2μb²) for this range.
    pub fn energy_scale(&self, units: &UnitSystem) -> f64 {
        units.kinetic_factor() / (self.b * self.b)
    }

    /// Same potential with a different A.
    pub fn with_strength(&self, strength: f64) -> Result<Self> {
        Self::new(strength, self.alpha, self.b)
    }

    /// α(α−1), the only way α enters the potential.
    pub fn alpha_product(&self) -> f64 {
        self.alpha * (self.alpha - 1.0)
    }

    pub fn reflected(&self) -> Self {
        PotentialParams {
            alpha: 1.0 - self.alpha,
            ..*self
        }
    }

    pub fn cd_form(&self) -> CdForm {
        CdForm::from(*self)
    }

    /// V(r) in the energy unit of `units`.
    pub fn value(&self, units: &UnitSystem, r: f64) -> Result<f64> {
        check_radius(r)?;
        let scale = self.energy_scale(units);
        let (z, one_minus_z) = exp_pair(r / self.b);
        let x = z / one_minus_z;
        Ok(scale * (self.alpha_product() * x * x - self.strength * x))
    }

    /// The interior minimum, when the potential has one.
    ///
    /// Writing x = e^{−r/b}/(1−e^{−r/b}), V is the quadratic
    /// α(α−1)x² − Ax (times the energy scale), so a minimum at positive r
    /// needs α(α−1) > 0 and A > 0.
    pub fn minimum(&self, units: &UnitSystem) -> Result<Option<Minimum>> {
        let k = self.alpha_product();
        let a = self.strength;
        if !(k > 0.0 && a > 0.0) {
            return Ok(None);
        }
        let scale = self.energy_scale(units);
        let r0 = self.b * (2.0 * k / a).ln_1p();
        let v0 = -scale * a * a / (4.0 * k);
        Ok(Some(Minimum { r0, v0 }))
    }

    /// d²V/dr² at the minimum, in energy / length².
    pub fn force_constant(&self, units: &UnitSystem) -> Result<f64> {
        if self.minimum(units)?.is_none() {
            return Err(Error::domain(format!(
                "no interior minimum for A={}, alpha={}",
                self.strength, self.alpha
            )));
        }
        let k = self.alpha_product();
        let a = self.strength;
        let bracket = a + 2.0 * k;
        Ok(units.kinetic_factor() * a * a * bracket * bracket / (8.0 * self.b.powi(4) * k.powi(3)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub r0: f64,
    pub v0: f64,
}

/// V(r) = −ħ²/(2μb²) · (C e^{−r/b} + D e^{−2r/b}) / (1−e^{−r/b})².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CdForm {
    pub c: f64,
    pub d: f64,
}

impl From<PotentialParams> for CdForm {
    fn from(p: PotentialParams) -> Self {
        CdForm {
            c: p.strength,
            d: -p.strength - p.alpha_product(),
        }
    }
}

impl CdForm {
    pub fn value(&self, b: f64, units: &UnitSystem, r: f64) -> Result<f64> {
        check_radius(r)?;
        let scale = units.energy_scale(b)?;
        let (z, one_minus_z) = exp_pair(r / b);
        // C z + D z² regrouped as z[(C + D) − D(1 − z)] so that small r does
        // not cancel when D ≈ −C.
        let numerator = z * ((self.c + self.d) - self.d * one_minus_z);
        Ok(-scale * numerator / (one_minus_z * one_minus_z))
    }
}

/// How the `l(l+1)/r²` barrier enters the radial equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CentrifugalScheme {
    /// The true `1/r²`.
    Exact,
    /// `e^{−r/b} / (b² (1−e^{−r/b})²)`; makes the radial equation solvable.
    GreeneAldrich,
    /// Greene-Aldrich plus the constant `c0/b²`.
    Shifted { c0: f64 },
}

impl CentrifugalScheme {
    pub const DEFAULT_SHIFT: f64 = 1.0 / 12.0;

    pub fn shifted() -> Self {
        CentrifugalScheme::Shifted {
            c0: Self::DEFAULT_SHIFT,
        }
    }

    /// The stand-in for `1/r²` at radius `r`.
    pub fn term(&self, b: f64, r: f64) -> Result<f64> {
        check_radius(r)?;
        if !(b.is_finite() && b > 0.0) {
            return Err(Error::domain(format!(
                "screening length must be positive, got {b}"
            )));
        }
        Ok(match *self {
            CentrifugalScheme::Exact => 1.0 / (r * r),
            CentrifugalScheme::GreeneAldrich => greene_aldrich(b, r),
            CentrifugalScheme::Shifted { c0 } => c0 / (b * b) + greene_aldrich(b, r),
        })
    }

    /// Limit of [`term`](Self::term) as r → ∞.
    pub fn asymptote(&self, b: f64) -> f64 {
        match *self {
            CentrifugalScheme::Shifted { c0 } => c0 / (b * b),
            _ => 0.0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CentrifugalScheme::Exact => "exact",
            CentrifugalScheme::GreeneAldrich => "greene-aldrich",
            CentrifugalScheme::Shifted { .. } => "shifted",
        }
    }
}

impl fmt::Display for CentrifugalScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentrifugalScheme::Shifted { c0 } if *c0 != Self::DEFAULT_SHIFT => {
                write!(f, "shifted(c0={c0})")
            }
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for CentrifugalScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(CentrifugalScheme::Exact),
            "greene-aldrich" | "greene_aldrich" | "ga" => Ok(CentrifugalScheme::GreeneAldrich),
            "shifted" => Ok(CentrifugalScheme::shifted()),
            other => Err(Error::domain(format!("unknown centrifugal scheme `{other}`"))),
        }
    }
}

fn greene_aldrich(b: f64, r: f64) -> f64 {
    let (z, one_minus_z) = exp_pair(r / b);
    z / (b * b * one_minus_z * one_minus_z)
}

/// (e^{−t}, 1 − e^{−t}) with the second computed without cancellation.
pub(crate) fn exp_pair(t: f64) -> (f64, f64) {
    ((-t).exp(), -(-t).exp_m1())
}

fn check_radius(r: f64) -> Result<()> {
    if r.is_finite() && r > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("radius must be positive and finite, got {r}")))
    }
}
