//! Closed-form levels for A = 2b in atomic units, across four ranges and two α.
use mrspec::{spectrum, PotentialParams, QuantumState, UnitSystem};

fn main() -> mrspec::Result<()> {
    let units = UnitSystem::atomic();
    let states = ["2p", "3p", "3d", "4p", "4d", "4f", "5d"];
    println!("{:>5} {:>6} {:>12} {:>12}", "state", "1/b", "α=0.75", "α=1.5");
    for inv_b in [0.025, 0.050, 0.075, 0.100] {
        let lo = PotentialParams::with_twice_range(0.75, inv_b)?;
        let hi = PotentialParams::with_twice_range(1.5, inv_b)?;
        for label in states {
            let s = QuantumState::from_label(label)?;
            if !spectrum::is_bound(&lo, s) {
                continue;
            }
            let (a, b) = (spectrum::energy(&lo, &units, s), spectrum::energy(&hi, &units, s));
            println!("{label:>5} {inv_b:>6.3} {a:>12.7} {b:>12.7}");
        }
    }
    Ok(())
}
