//! Finite-difference eigensolver for the radial equation
//! `−(ħ²/2μ)R'' + U(r)R = ER`, `U = V + (ħ²/2μ)l(l+1)·f(r)`, with
//! `f` the chosen centrifugal scheme and Dirichlet walls at `r_min`, `r_max`.
//!
//! Each solve runs three uniform grids with step h, h/2, h/4 and reports the
//! second-order Richardson extrapolation from the two finest. The flag
//! `converged` compares it with the extrapolation from the two coarsest.

mod tridiag;

pub use tridiag::SymTridiagonal;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::potential::{CentrifugalScheme, PotentialParams};
use crate::spectrum::{self, QuantumState};
use crate::units::UnitSystem;

pub const DEFAULT_GRID_POINTS: usize = 20_000;
pub const MIN_GRID_POINTS: usize = 1000;
/// Default inner wall as a fraction of b.
pub const R_MIN_FRACTION: f64 = 1e-6;
/// Tail length in decay lengths b/ε of the shallowest requested level.
pub const TAIL_DECAY_LENGTHS: f64 = 60.0;
/// Convergence threshold in units of ħ²/(2μb²).
pub const CONVERGENCE_TOL: f64 = 1e-6;

/// One radial problem: potential, partial wave, centrifugal scheme and grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProblem {
    params: PotentialParams,
    units: UnitSystem,
    l: u32,
    scheme: CentrifugalScheme,
    r_min: f64,
    r_max: f64,
    grid_points: usize,
}

impl RadialProblem {
    pub fn new(
        params: PotentialParams,
        units: UnitSystem,
        l: u32,
        scheme: CentrifugalScheme,
        r_min: f64,
        r_max: f64,
        grid_points: usize,
    ) -> Result<Self> {
        check_grid(r_min, r_max, grid_points)?;
        Ok(RadialProblem {
            params,
            units,
            l,
            scheme,
            r_min,
            r_max,
            grid_points,
        })
    }

    /// Default grid sized for the lowest `levels` states of this partial wave.
    pub fn with_defaults(
        params: PotentialParams,
        units: UnitSystem,
        l: u32,
        scheme: CentrifugalScheme,
        levels: usize,
    ) -> Result<Self> {
        let r_max = default_r_max(&params, l, levels);
        Self::new(
            params,
            units,
            l,
            scheme,
            R_MIN_FRACTION * params.b(),
            r_max,
            DEFAULT_GRID_POINTS,
        )
    }

    pub fn with_grid(mut self, r_min: f64, r_max: f64, grid_points: usize) -> Result<Self> {
        check_grid(r_min, r_max, grid_points)?;
        self.r_min = r_min;
        self.r_max = r_max;
        self.grid_points = grid_points;
        Ok(self)
    }

    pub fn params(&self) -> &PotentialParams {
        &self.params
    }

    pub fn units(&self) -> &UnitSystem {
        &self.units
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn scheme(&self) -> CentrifugalScheme {
        self.scheme
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn grid_points(&self) -> usize {
        self.grid_points
    }

    pub fn step(&self) -> f64 {
        grid_step(self.r_min, self.r_max, self.grid_points)
    }

    /// Interior nodes; the walls carry R = 0 and are not included.
    pub fn grid(&self) -> Vec<f64> {
        let h = self.step();
        (1..=self.grid_points).map(|i| self.r_min + i as f64 * h).collect()
    }

    pub fn effective_potential(&self, r: f64) -> Result<f64> {
        let l = f64::from(self.l);
        let centrifugal = if self.l == 0 {
            0.0
        } else {
            self.units.kinetic_factor() * l * (l + 1.0) * self.scheme.term(self.params.b(), r)?
        };
        Ok(self.params.value(&self.units, r)? + centrifugal)
    }

    /// U(∞): the continuum edge.
    pub fn threshold(&self) -> f64 {
        let l = f64::from(self.l);
        self.units.kinetic_factor() * l * (l + 1.0) * self.scheme.asymptote(self.params.b())
    }

    pub fn energy_scale(&self) -> f64 {
        self.params.energy_scale(&self.units)
    }
}

fn check_grid(r_min: f64, r_max: f64, grid_points: usize) -> Result<()> {
    if !(r_min > 0.0) {
        return Err(Error::domain(format!(
            "grid must stay off the origin, got r_min = {r_min}"
        )));
    }
    if !(r_max > r_min) || !r_max.is_finite() {
        return Err(Error::domain(format!(
            "need r_min < r_max, got [{r_min}, {r_max}]"
        )));
    }
    if grid_points < MIN_GRID_POINTS {
        return Err(Error::domain(format!(
            "need at least {MIN_GRID_POINTS} grid points, got {grid_points}"
        )));
    }
    Ok(())
}

fn grid_step(r_min: f64, r_max: f64, points: usize) -> f64 {
    (r_max - r_min) / (points + 1) as f64
}

/// `60·b/ε` with ε of the shallowest bound level among the lowest `levels`
/// of partial wave `l`, from the closed-form spectrum.
pub fn default_r_max(params: &PotentialParams, l: u32, levels: usize) -> f64 {
    let b = params.b();
    let shallowest = (0..levels.max(1) as u32)
        .rev()
        .map(|n| spectrum::signed_epsilon(params, QuantumState::new(n, l)))
        .find(|eps| *eps > 0.0);
    match shallowest {
        Some(eps) => TAIL_DECAY_LENGTHS * b / eps,
        None => TAIL_DECAY_LENGTHS * b,
    }
}

/// `(r_i, U(r_i))` on the interior grid nodes.
pub fn build_effective_potential(rp: &RadialProblem) -> Result<Vec<(f64, f64)>> {
    rp.grid()
        .into_iter()
        .map(|r| {
            let u = rp.effective_potential(r)?;
            if !u.is_finite() {
                return Err(Error::Numerical(format!("effective potential is not finite at r = {r}")));
            }
            Ok((r, u))
        })
        .collect()
}

/// Eigenvalues from the three-grid solve of a generic potential.
#[derive(Debug, Clone, PartialEq)]
pub struct GridLevels {
    /// Extrapolated eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// |extrapolation(h/2, h/4) − extrapolation(h, h/2)| per eigenvalue.
    pub error_estimates: Vec<f64>,
    /// Raw eigenvalues on the base grid.
    pub raw: Vec<f64>,
    /// Requested levels that were not found below the threshold.
    pub shortfall: usize,
}

fn discretize<F: Fn(f64) -> f64>(
    kinetic: f64,
    potential: &F,
    r_min: f64,
    r_max: f64,
    points: usize,
) -> Result<SymTridiagonal> {
    let h = grid_step(r_min, r_max, points);
    let hop = kinetic / (h * h);
    let mut diag = Vec::with_capacity(points);
    for i in 1..=points {
        let r = r_min + i as f64 * h;
        let u = potential(r);
        if !u.is_finite() {
            return Err(Error::Numerical(format!("effective potential is not finite at r = {r}")));
        }
        diag.push(2.0 * hop + u);
    }
    Ok(SymTridiagonal::new(diag, vec![-hop; points - 1]))
}

/// Lowest `k` levels of `−kinetic·d²/dr² + potential` below `threshold`.
pub fn solve_potential<F: Fn(f64) -> f64>(
    kinetic: f64,
    potential: F,
    r_min: f64,
    r_max: f64,
    grid_points: usize,
    threshold: f64,
    k: usize,
) -> Result<GridLevels> {
    if k == 0 {
        return Err(Error::domain("request at least one level"));
    }
    check_grid(r_min, r_max, grid_points)?;
    if !(kinetic > 0.0) {
        return Err(Error::domain(format!("kinetic factor must be positive, got {kinetic}")));
    }
    // Step halves exactly: N+1 intervals → 2(N+1) → 4(N+1).
    let sizes = [grid_points, 2 * grid_points + 1, 4 * grid_points + 3];
    let mut levels: Vec<Vec<f64>> = Vec::with_capacity(3);
    let mut found = k;
    for &points in &sizes {
        let t = discretize(kinetic, &potential, r_min, r_max, points)?;
        let below = t.sturm_count(threshold);
        found = found.min(below);
        let (lo, _) = t.gershgorin();
        let lo = lo - f64::EPSILON * lo.abs() - 1.0e-300;
        levels.push((0..found).map(|i| t.eigenvalue_in(i, lo, threshold)).collect());
    }
    let mut eigenvalues = Vec::with_capacity(found);
    let mut error_estimates = Vec::with_capacity(found);
    for i in 0..found {
        let (e0, e1, e2) = (levels[0][i], levels[1][i], levels[2][i]);
        let coarse = e1 + (e1 - e0) / 3.0;
        let fine = e2 + (e2 - e1) / 3.0;
        eigenvalues.push(fine);
        error_estimates.push((fine - coarse).abs());
    }
    let mut raw = levels.swap_remove(0);
    raw.truncate(found);
    Ok(GridLevels {
        eigenvalues,
        error_estimates,
        raw,
        shortfall: k - found,
    })
}

/// Bound levels of one [`RadialProblem`].
#[derive(Debug, Clone, PartialEq)]
pub struct NumericalSpectrum {
    pub eigenvalues: Vec<f64>,
    pub converged: Vec<bool>,
    pub error_estimates: Vec<f64>,
    pub shortfall: usize,
    pub problem: RadialProblem,
}

impl NumericalSpectrum {
    /// Eigenvalue i is the state with n = i.
    pub fn levels(&self) -> Vec<(QuantumState, f64)> {
        self.eigenvalues
            .iter()
            .enumerate()
            .map(|(n, &e)| (QuantumState::new(n as u32, self.problem.l), e))
            .collect()
    }

    pub fn all_converged(&self) -> bool {
        self.converged.iter().all(|c| *c)
    }
}

/// The `k` lowest bound levels of `rp`.
pub fn solve(rp: &RadialProblem, k: usize) -> Result<NumericalSpectrum> {
    // Validate the potential on the base grid before the heavier solve.
    build_effective_potential(rp)?;
    let levels = solve_potential(
        rp.units.kinetic_factor(),
        |r| rp.effective_potential(r).unwrap_or(f64::NAN),
        rp.r_min,
        rp.r_max,
        rp.grid_points,
        rp.threshold(),
        k,
    )?;
    let tol = CONVERGENCE_TOL * rp.energy_scale();
    Ok(NumericalSpectrum {
        converged: levels.error_estimates.iter().map(|e| *e < tol).collect(),
        eigenvalues: levels.eigenvalues,
        error_estimates: levels.error_estimates,
        shortfall: levels.shortfall,
        problem: rp.clone(),
    })
}

/// A sampled eigenvector on the base grid, unit norm in ∫R² dr.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenfunction {
    pub energy: f64,
    pub r: Vec<f64>,
    pub values: Vec<f64>,
}

impl Eigenfunction {
    /// Interior sign changes, ignoring samples below 1e-8 of the peak.
    pub fn nodes(&self) -> usize {
        let peak = self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let floor = 1e-8 * peak;
        let mut last = 0.0;
        let mut nodes = 0;
        for v in self.values.iter().filter(|v| v.abs() > floor) {
            let sign = v.signum();
            if last != 0.0 && sign != last {
                nodes += 1;
            }
            last = sign;
        }
        nodes
    }
}

/// Eigenvector `index` (0 = ground) of `rp` on its base grid.
pub fn eigenfunction(rp: &RadialProblem, index: usize) -> Result<Eigenfunction> {
    let pot = |r: f64| rp.effective_potential(r).unwrap_or(f64::NAN);
    let t = discretize(rp.units.kinetic_factor(), &pot, rp.r_min, rp.r_max, rp.grid_points)?;
    if t.sturm_count(rp.threshold()) <= index {
        return Err(Error::Numerical(format!(
            "level {index} is not bound on this grid for l = {}",
            rp.l
        )));
    }
    let energy = t.eigenvalue(index).expect("index is below the bound count");
    let mut values = t.eigenvector(energy);
    let h = rp.step();
    let norm = (values.iter().map(|v| v * v).sum::<f64>() * h).sqrt();
    values.iter_mut().for_each(|v| *v /= norm);
    Ok(Eigenfunction {
        energy,
        r: rp.grid(),
        values,
    })
}

/// One oracle level, matched to a state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleLevel {
    pub state: QuantumState,
    /// `None` when the level is not bound numerically.
    pub energy: Option<f64>,
    pub converged: bool,
    pub error_estimate: f64,
}

/// Oracle energies for arbitrary states, one solve per partial wave.
pub fn solve_states(
    params: &PotentialParams,
    units: &UnitSystem,
    scheme: CentrifugalScheme,
    states: &[QuantumState],
) -> Result<Vec<OracleLevel>> {
    let mut depth: BTreeMap<u32, u32> = BTreeMap::new();
    for s in states {
        let e = depth.entry(s.l).or_insert(0);
        *e = (*e).max(s.n + 1);
    }
    let mut spectra = BTreeMap::new();
    for (&l, &k) in &depth {
        let rp = RadialProblem::with_defaults(*params, units.clone(), l, scheme, k as usize)?;
        spectra.insert(l, solve(&rp, k as usize)?);
    }
    Ok(states
        .iter()
        .map(|s| {
            let spec = &spectra[&s.l];
            let n = s.n as usize;
            match spec.eigenvalues.get(n) {
                Some(&e) => OracleLevel {
                    state: *s,
                    energy: Some(e),
                    converged: spec.converged[n],
                    error_estimate: spec.error_estimates[n],
                },
                None => OracleLevel {
                    state: *s,
                    energy: None,
                    converged: false,
                    error_estimate: f64::NAN,
                },
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow {
    pub state: QuantumState,
    pub analytic: f64,
    pub numeric: f64,
    pub abs_dev: f64,
    pub rel_dev: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub scheme: CentrifugalScheme,
    pub rows: Vec<ComparisonRow>,
}

impl ComparisonReport {
    pub fn max_abs_dev(&self) -> f64 {
        self.rows.iter().map(|r| r.abs_dev).fold(0.0, f64::max)
    }

    pub fn max_rel_dev(&self) -> f64 {
        self.rows.iter().map(|r| r.rel_dev).fold(0.0, f64::max)
    }

    pub fn worst(&self) -> Option<&ComparisonRow> {
        self.rows.iter().max_by(|a, b| a.abs_dev.total_cmp(&b.abs_dev))
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scheme: {}", self.scheme)?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>4}  {:>16.9e}  {:>16.9e}  {:>10.3e}  {:>10.3e}",
                r.state, r.analytic, r.numeric, r.abs_dev, r.rel_dev
            )?;
        }
        write!(f, "max |Δ| = {:.3e}", self.max_abs_dev())
    }
}

/// Pairs analytic and numerical levels state by state, in the analytic order.
pub fn compare(
    analytic: &[(QuantumState, f64)],
    numeric: &[(QuantumState, f64)],
    scheme: CentrifugalScheme,
) -> Result<ComparisonReport> {
    if analytic.len() != numeric.len() {
        return Err(Error::Alignment(format!(
            "{} analytic levels against {} numerical levels",
            analytic.len(),
            numeric.len()
        )));
    }
    let rows = analytic
        .iter()
        .zip(numeric)
        .map(|(&(sa, ea), &(sn, en))| {
            if sa != sn {
                return Err(Error::Alignment(format!("state {sa} paired with {sn}")));
            }
            let abs_dev = (ea - en).abs();
            let rel_dev = if ea == 0.0 { abs_dev } else { abs_dev / ea.abs() };
            Ok(ComparisonRow {
                state: sa,
                analytic: ea,
                numeric: en,
                abs_dev,
                rel_dev,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComparisonReport { scheme, rows })
}
