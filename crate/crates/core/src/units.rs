//! Unit systems and the diatomic-molecule registry.
//!
//! Two presets are provided. Atomic units have ħ = μ = e = 1, so energies
//! come out in hartree and lengths are in bohr. The molecular preset works in
//! eV and picometres with c = 1 bookkeeping: `hbar` holds ħc and `mu` holds
//! μc², which leaves ħ²/(2μb²) = (ħc)²/(2μc²b²) in eV.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

/// Energy equivalent of one atomic mass unit, eV.
pub const AMU_EV: f64 = 931.494e6;

/// ħc in eV·pm (1973.29 eV·Å).
pub const HBAR_C_EV_PM: f64 = 197_329.0;

pub const FINE_STRUCTURE: f64 = 1.0 / 137.035_999_084;

pub const ELECTRON_MASS_AMU: f64 = 5.485_799_090_65e-4;

/// Environment variable naming a registry file that extends the built-in molecules.
pub const REGISTRY_ENV: &str = "MRSPEC_REGISTRY";

#[derive(Debug, Clone, PartialEq)]
pub struct UnitSystem {
    label: String,
    hbar: f64,
    mu: f64,
    hbar_c: Option<f64>,
    e2: f64,
    energy_unit: &'static str,
    length_unit: &'static str,
}

impl UnitSystem {
    /// Hartree atomic units: ħ = μ = e = 1.
    pub fn atomic() -> Self {
        UnitSystem {
            label: "atomic".to_string(),
            hbar: 1.0,
            mu: 1.0,
            hbar_c: None,
            e2: 1.0,
            energy_unit: "hartree",
            length_unit: "bohr",
        }
    }

    /// eV / pm units for a particle of reduced mass `mu_amu`.
    pub fn molecular(mu_amu: f64) -> Result<Self> {
        if !(mu_amu.is_finite() && mu_amu > 0.0) {
            return Err(Error::domain(format!(
                "reduced mass must be positive, got {mu_amu} amu"
            )));
        }
        Ok(UnitSystem {
            label: format!("molecular(mu={mu_amu} amu)"),
            hbar: HBAR_C_EV_PM,
            mu: mu_amu * AMU_EV,
            hbar_c: Some(HBAR_C_EV_PM),
            e2: FINE_STRUCTURE * HBAR_C_EV_PM,
            energy_unit: "eV",
            length_unit: "pm",
        })
    }

    pub fn for_molecule(molecule: &Molecule) -> Self {
        let mut units = Self::molecular(molecule.reduced_mass_amu)
            .expect("registry masses are validated on insertion");
        units.label = format!("molecular({})", molecule.name);
        units
    }

    /// Molecular preset with the electron mass; the Coulomb ground state is
    /// close to −13.6 eV.
    pub fn hydrogen() -> Self {
        let mut units = Self::molecular(ELECTRON_MASS_AMU).expect("electron mass is positive");
        units.label = "hydrogen".to_string();
        units
    }

    /// A user-supplied (ħ, μ) pair with unit Coulomb coupling.
    pub fn custom(hbar: f64, mu: f64) -> Result<Self> {
        if !(hbar.is_finite() && hbar > 0.0 && mu.is_finite() && mu > 0.0) {
            return Err(Error::domain(format!(
                "hbar and mu must be positive, got hbar={hbar}, mu={mu}"
            )));
        }
        Ok(UnitSystem {
            label: format!("custom(hbar={hbar}, mu={mu})"),
            hbar,
            mu,
            hbar_c: None,
            e2: 1.0,
            energy_unit: "energy",
            length_unit: "length",
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn hbar_c(&self) -> Option<f64> {
        self.hbar_c
    }

    /// Coulomb coupling e² in energy × length.
    pub fn e2(&self) -> f64 {
        self.e2
    }

    pub fn energy_unit(&self) -> &'static str {
        self.energy_unit
    }

    pub fn length_unit(&self) -> &'static str {
        self.length_unit
    }

    /// ħ²/(2μ), in energy × length².
    pub fn kinetic_factor(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.mu)
    }

    /// ħ²/(2μb²), the energy unit of the Manning-Rosen problem at range `b`.
    pub fn energy_scale(&self, b: f64) -> Result<f64> {
        if !(b.is_finite() && b > 0.0) {
            return Err(Error::domain(format!(
                "screening length must be positive, got {b}"
            )));
        }
        Ok(self.kinetic_factor() / (b * b))
    }
}

impl fmt::Display for UnitSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}, {}]", self.label, self.energy_unit, self.length_unit)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Molecule {
    pub name: String,
    pub reduced_mass_amu: f64,
}

impl Molecule {
    pub fn new(name: impl Into<String>, reduced_mass_amu: f64) -> Result<Self> {
        let name = name.into();
        if !(reduced_mass_amu.is_finite() && reduced_mass_amu > 0.0) {
            return Err(Error::domain(format!(
                "reduced mass of {name} must be positive, got {reduced_mass_amu}"
            )));
        }
        Ok(Molecule {
            name,
            reduced_mass_amu,
        })
    }
}

/// The built-in molecules: HCl, CH, LiH and CO.
pub fn molecule_registry() -> Vec<Molecule> {
    [
        ("HCl", 0.980_104_5),
        ("CH", 0.929_931),
        ("LiH", 0.880_122_1),
        ("CO", 6.860_671_9),
    ]
    .into_iter()
    .map(|(name, mass)| Molecule {
        name: name.to_string(),
        reduced_mass_amu: mass,
    })
    .collect()
}

/// Named reduced masses. Lookups are exact and case-sensitive.
#[derive(Debug, Clone)]
pub struct MoleculeRegistry {
    molecules: BTreeMap<String, Molecule>,
}

impl Default for MoleculeRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl MoleculeRegistry {
    pub fn builtin() -> Self {
        let molecules = molecule_registry()
            .into_iter()
            .map(|m| (m.name.clone(), m))
            .collect();
        MoleculeRegistry { molecules }
    }

    /// Parses `name = mass_amu` lines; `#` starts a comment.
    ///
    /// `origin` only labels error messages.
    pub fn parse(text: &str, origin: &Path) -> Result<Vec<Molecule>> {
        let config_err = |line: usize, message: String| Error::Config {
            path: origin.to_path_buf(),
            message: format!("line {line}: {message}"),
        };
        let mut seen = BTreeMap::new();
        let mut out = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (name, mass) = line
                .split_once('=')
                .ok_or_else(|| config_err(lineno, format!("expected `name = mass`, got `{line}`")))?;
            let name = name.trim();
            if name.is_empty() {
                return Err(config_err(lineno, "empty molecule name".into()));
            }
            let mass: f64 = mass
                .trim()
                .parse()
                .map_err(|_| config_err(lineno, format!("invalid mass `{}`", mass.trim())))?;
            let molecule =
                Molecule::new(name, mass).map_err(|e| config_err(lineno, e.to_string()))?;
            if let Some(first) = seen.insert(name.to_string(), lineno) {
                return Err(config_err(
                    lineno,
                    format!("duplicate molecule `{name}` (first defined on line {first})"),
                ));
            }
            out.push(molecule);
        }
        Ok(out)
    }

    /// Built-in molecules extended by `path`; file entries replace built-ins
    /// of the same name.
    pub fn with_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        let mut registry = Self::builtin();
        for m in Self::parse(&text, path)? {
            registry.molecules.insert(m.name.clone(), m);
        }
        Ok(registry)
    }

    /// Honors `MRSPEC_REGISTRY` when set and non-empty.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(REGISTRY_ENV) {
            Some(p) if !p.is_empty() => Self::with_file(PathBuf::from(p)),
            _ => Ok(Self::builtin()),
        }
    }

    pub fn get(&self, name: &str) -> Result<&Molecule> {
        self.molecules
            .get(name)
            .ok_or_else(|| Error::UnknownMolecule(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Molecule> {
        self.molecules.values()
    }

    pub fn len(&self) -> usize {
        self.molecules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.molecules.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // (ħc)² / (2 μc² b²) by hand in eV·Å: 1973.29² / (2 · μ · 931.494e6 · 0.40²).
    fn hand_scale(mu_amu: f64) -> f64 {
        1973.29f64.powi(2) / (2.0 * mu_amu * 931.494e6 * 0.40f64.powi(2))
    }

    #[test]
    fn atomic_scale() {
        let u = UnitSystem::atomic();
        assert_eq!(u.energy_scale(40.0).unwrap(), 1.0 / 3200.0);
        assert_eq!(u.hbar(), 1.0);
        assert_eq!(u.mu(), 1.0);
    }

    #[test]
    fn molecular_scale_matches_hand_evaluation() {
        let hcl = UnitSystem::molecular(0.980_104_5).unwrap();
        let s = hcl.energy_scale(40.0).unwrap();
        assert_relative_eq!(s, hand_scale(0.980_104_5), max_relative = 1e-12);
        // Rounded desk values; the exact oracle above is the tight check.
        assert_relative_eq!(s, 0.013_328_3, max_relative = 5e-5);

        let co = UnitSystem::molecular(6.860_671_9).unwrap();
        let s = co.energy_scale(40.0).unwrap();
        assert_relative_eq!(s, hand_scale(6.860_671_9), max_relative = 1e-12);
        assert_relative_eq!(s, 0.001_904_01, max_relative = 5e-5);
    }

    #[test]
    fn non_positive_length_rejected() {
        let u = UnitSystem::atomic();
        assert!(matches!(u.energy_scale(0.0), Err(Error::Domain(_))));
        assert!(matches!(u.energy_scale(-1.0), Err(Error::Domain(_))));
        assert!(UnitSystem::custom(0.0, 1.0).is_err());
        assert!(UnitSystem::molecular(-2.0).is_err());
    }

    #[test]
    fn builtin_lookup() {
        let reg = MoleculeRegistry::builtin();
        assert_eq!(reg.len(), 4);
        assert_eq!(reg.get("HCl").unwrap().reduced_mass_amu, 0.980_104_5);
        assert_eq!(reg.get("CO").unwrap().reduced_mass_amu, 6.860_671_9);
        assert_eq!(reg.get("CH").unwrap().reduced_mass_amu, 0.929_931);
        assert_eq!(reg.get("LiH").unwrap().reduced_mass_amu, 0.880_122_1);
        assert!(matches!(reg.get("XYZ"), Err(Error::UnknownMolecule(n)) if n == "XYZ"));
    }

    #[test]
    fn parse_registry_text() {
        let text = "# custom masses\nN2 = 7.00153700\n\n  OH=0.9480871 # hydroxyl\n";
        let ms = MoleculeRegistry::parse(text, Path::new("test")).unwrap();
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0].name, "N2");
        assert_eq!(ms[1].reduced_mass_amu, 0.948_087_1);
    }

    #[test]
    fn duplicate_names_are_config_errors() {
        let text = "A = 1.0\nB = 2.0\nA = 3.0\n";
        let err = MoleculeRegistry::parse(text, Path::new("dup.txt")).unwrap_err();
        match err {
            Error::Config { message, .. } => {
                assert!(message.contains("line 3"), "{message}");
                assert!(message.contains("duplicate"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_lines_rejected() {
        for bad in ["HCl 0.98", "= 1.0", "X = abc", "X = -1", "X = 0"] {
            assert!(
                matches!(
                    MoleculeRegistry::parse(bad, Path::new("bad")),
                    Err(Error::Config { .. })
                ),
                "{bad}"
            );
        }
    }
}
