//! Finite-difference levels under each centrifugal treatment against the closed form.
use mrspec::oracle;
use mrspec::{spectrum, CentrifugalScheme, PotentialParams, QuantumState, UnitSystem};

fn main() -> mrspec::Result<()> {
    let units = UnitSystem::atomic();
    let states: Vec<QuantumState> =
        ["2p", "3p", "3d", "4f"].iter().map(|l| QuantumState::from_label(l)).collect::<mrspec::Result<_>>()?;
    for inv_b in [0.025, 0.075] {
        let p = PotentialParams::with_twice_range(0.75, inv_b)?;
        println!("1/b = {inv_b}");
        for scheme in [CentrifugalScheme::GreeneAldrich, CentrifugalScheme::Exact] {
            for level in oracle::solve_states(&p, &units, scheme, &states)? {
                let analytic = spectrum::energy(&p, &units, level.state);
                match level.energy {
                    Some(e) => println!(
                        "  {:<15} {:>3} {e:>14.9} Δ = {:>9.2e}{}",
                        scheme.name(),
                        level.state,
                        e - analytic,
                        if level.converged { "" } else { " (unconverged)" }
                    ),
                    None => println!("  {:<15} {:>3} not bound", scheme.name(), level.state),
                }
            }
        }
    }
    Ok(())
}
