//! Levels of the built-in diatomics in eV, with b in pm.
use mrspec::{spectrum, MoleculeRegistry, PotentialParams, UnitSystem};

fn main() -> mrspec::Result<()> {
    let registry = MoleculeRegistry::builtin();
    let p = PotentialParams::with_twice_range(0.75, 0.025)?;
    for molecule in registry.iter() {
        let units = UnitSystem::for_molecule(molecule);
        println!("{} (μ = {} amu)", molecule.name, molecule.reduced_mass_amu);
        for (s, e) in spectrum::enumerate_bound_states(&p, &units, 2).into_iter().take(5) {
            println!("  {s:>3} {e:>14.8} eV");
        }
    }
    Ok(())
}
