//! α = 0 or 1 recovers the Hulthén potential; δ → 0 recovers hydrogen.
use mrspec::{spectrum, PotentialParams, QuantumState, UnitSystem};

fn main() -> mrspec::Result<()> {
    let units = UnitSystem::atomic();
    for delta in [0.1, 0.01, 1e-4, 1e-8] {
        let p = PotentialParams::hulthen(1.0, delta, &units)?;
        print!("δ = {delta:<7}");
        for label in ["1s", "2s", "2p", "3d"] {
            let s = QuantumState::from_label(label)?;
            let mr = spectrum::energy(&p, &units, s);
            let h = spectrum::hulthen_energy_charge(1.0, delta, &units, s)?;
            assert!((mr - h).abs() <= 1e-12 * h.abs());
            print!("  {label} {mr:>13.10}");
        }
        println!();
    }
    let s = QuantumState::from_label("1s")?;
    println!("Coulomb 1s: {}", spectrum::coulomb_energy(1.0, &units, s)?);
    Ok(())
}
