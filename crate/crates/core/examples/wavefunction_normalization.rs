//! Closed-form normalization constants against direct quadrature.
use mrspec::wavefunction::{normalization_constant, quadrature_normalization};
use mrspec::{spectrum, PotentialParams, QuantumState, RadialWavefunction, UnitSystem};

fn main() -> mrspec::Result<()> {
    let units = UnitSystem::atomic();
    let p = PotentialParams::with_twice_range(0.75, 0.025)?;
    println!("{:>4} {:>16} {:>16} {:>10} {:>6}", "", "N closed", "N quadrature", "∫R²dr", "nodes");
    for label in ["2p", "3p", "3d", "4f"] {
        let s = QuantumState::from_label(label)?;
        let sol = spectrum::solve(&p, &units, s)?;
        let closed = normalization_constant(s, sol.epsilon, sol.lambda, p.b())?;
        let quad = quadrature_normalization(s, sol.epsilon, sol.lambda, p.b())?;
        let w = RadialWavefunction::new(&p, &units, s)?;
        println!(
            "{label:>4} {closed:>16.10e} {quad:>16.10e} {:>10.8} {:>6}",
            w.norm_integral()?,
            w.node_count(10_000)
        );
    }
    Ok(())
}
