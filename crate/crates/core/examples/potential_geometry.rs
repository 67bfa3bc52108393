//! Well position, depth and curvature, and the two equivalent parameterizations.
use mrspec::{CdForm, PotentialParams, UnitSystem};

fn main() -> mrspec::Result<()> {
    let units = UnitSystem::atomic();
    for (alpha, inv_b) in [(1.5, 0.025), (1.5, 0.1), (2.5, 0.05), (0.75, 0.05)] {
        let p = PotentialParams::with_twice_range(alpha, inv_b)?;
        let cd = CdForm::from(p);
        print!("α={alpha:<5} b={:<6} C={:<6} D={:<8}", p.b(), cd.c, cd.d);
        match p.minimum(&units)? {
            Some(m) => println!(
                " r0={:.4} V0={:.6} k={:.4e}",
                m.r0,
                m.v0,
                p.force_constant(&units)?
            ),
            None => println!(" no well (V(1) = {:.6})", p.value(&units, 1.0)?),
        }
    }
    Ok(())
}
