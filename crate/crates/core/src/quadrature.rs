//! Globally adaptive Gauss-Kronrod (7/15) quadrature.
//!
//! All panels share one priority queue: the panel with the largest error
//! estimate is bisected until the total estimate meets the tolerance. Integrable
//! endpoint singularities on [0, 1] are handled by [`integrate_unit_interval`],
//! which seeds the queue with dyadic panels shrinking towards both ends so the
//! rule never has to resolve a power law across scales.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Dyadic levels used towards each end of [0, 1].
const ENDPOINT_LEVELS: i32 = 40;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_panels: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs: 1e-14,
            rel: 1e-12,
            max_panels: 20_000,
        }
    }
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64) -> Self {
        Tolerance {
            abs,
            rel,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
    pub panels: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut error = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Panel { a, b, value, error }
}

/// Integrates `f` over the panels delimited by the sorted `breakpoints`.
pub fn integrate_panels<F: Fn(f64) -> f64>(f: F, breakpoints: &[f64], tol: Tolerance) -> Result<Integral> {
    if breakpoints.len() < 2 {
        return Err(Error::domain("need at least two breakpoints"));
    }
    if breakpoints.windows(2).any(|w| !(w[0] < w[1])) || breakpoints.iter().any(|x| !x.is_finite()) {
        return Err(Error::domain("breakpoints must be finite and strictly increasing"));
    }
    let mut heap: BinaryHeap<Panel> = breakpoints
        .windows(2)
        .map(|w| kronrod15(&f, w[0], w[1]))
        .collect();
    loop {
        let (value, error) = heap
            .iter()
            .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
        if !value.is_finite() {
            return Err(Error::Numerical("integrand is not finite".into()));
        }
        if error <= tol.abs.max(tol.rel * value.abs()) {
            return Ok(Integral {
                value,
                error,
                panels: heap.len(),
            });
        }
        if heap.len() >= tol.max_panels {
            return Err(Error::Numerical(format!(
                "quadrature did not converge: estimate {value:e} ± {error:e} after {} panels",
                heap.len()
            )));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            return Err(Error::Numerical(format!(
                "panel [{}, {}] cannot be bisected further",
                worst.a, worst.b
            )));
        }
        heap.push(kronrod15(&f, worst.a, mid));
        heap.push(kronrod15(&f, mid, worst.b));
    }
}

pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<Integral> {
    integrate_panels(f, &[a, b], tol)
}

/// ∫₀¹ f, tolerating integrable power-law singularities at either end.
pub fn integrate_unit_interval<F: Fn(f64) -> f64>(f: F, tol: Tolerance) -> Result<Integral> {
    let mut points = Vec::with_capacity(2 * ENDPOINT_LEVELS as usize + 3);
    points.push(0.0);
    for k in (2..=ENDPOINT_LEVELS).rev() {
        points.push(0.5f64.powi(k));
    }
    points.push(0.5);
    for k in 2..=ENDPOINT_LEVELS {
        let x = 1.0 - 0.5f64.powi(k);
        if x < 1.0 && x > *points.last().unwrap() {
            points.push(x);
        }
    }
    points.push(1.0);
    integrate_panels(f, &points, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn polynomials_are_exact() {
        let r = integrate(|x| 3.0 * x * x, 0.0, 2.0, Tolerance::default()).unwrap();
        assert_relative_eq!(r.value, 8.0, max_relative = 1e-14);
        let r = integrate(|x| x.powi(20), -1.0, 1.0, Tolerance::default()).unwrap();
        assert_relative_eq!(r.value, 2.0 / 21.0, max_relative = 1e-13);
    }

    #[test]
    fn smooth_transcendental() {
        let r = integrate(f64::sin, 0.0, std::f64::consts::PI, Tolerance::default()).unwrap();
        assert_relative_eq!(r.value, 2.0, max_relative = 1e-13);
        let r = integrate(|x| (-x * x).exp(), -10.0, 10.0, Tolerance::default()).unwrap();
        assert_relative_eq!(r.value, std::f64::consts::PI.sqrt(), max_relative = 1e-13);
    }

    #[test]
    fn endpoint_power_laws() {
        // ∫₀¹ x^{-1/2} = 2, ∫₀¹ x^{-0.7} = 1/0.3, ∫₀¹ √(1−x) = 2/3
        let r = integrate_unit_interval(|x| x.powf(-0.5), Tolerance::new(1e-12, 1e-10)).unwrap();
        assert_relative_eq!(r.value, 2.0, max_relative = 1e-8);
        let r = integrate_unit_interval(|x| x.powf(-0.7), Tolerance::new(1e-12, 1e-10)).unwrap();
        assert_relative_eq!(r.value, 1.0 / 0.3, max_relative = 1e-8);
        let r = integrate_unit_interval(|x| (1.0 - x).sqrt(), Tolerance::new(1e-14, 1e-12)).unwrap();
        assert_relative_eq!(r.value, 2.0 / 3.0, max_relative = 1e-11);
    }

    #[test]
    fn beta_function() {
        // B(2, 3) = 1/12
        let r = integrate_unit_interval(|z| z * (1.0 - z).powi(2), Tolerance::default()).unwrap();
        assert_relative_eq!(r.value, 1.0 / 12.0, max_relative = 1e-14);
    }

    #[test]
    fn bad_breakpoints() {
        assert!(integrate_panels(|x| x, &[0.0], Tolerance::default()).is_err());
        assert!(integrate_panels(|x| x, &[1.0, 0.0], Tolerance::default()).is_err());
        assert!(integrate(|_| f64::NAN, 0.0, 1.0, Tolerance::default()).is_err());
    }
}
