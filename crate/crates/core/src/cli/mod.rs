//! Command implementations behind the `mrspec` binary.
//!
//! Every command returns a [`Table`]; the binary only parses flags, picks the
//! sink and maps errors to exit codes.

mod commands;
mod tables;

pub use commands::{
    cmd_compare, cmd_figure_data, cmd_spectrum, cmd_wavefunction, CompareArgs, CompareOutcome,
    Figure, SampleGrid, SpectrumArgs, WavefunctionArgs,
};
pub use tables::{cmd_table, TableKind, TableSpec};

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::potential::PotentialParams;
use crate::units::{MoleculeRegistry, UnitSystem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;
pub const EXIT_STRICT: i32 = 3;

pub const DEFAULT_PRECISION: usize = 7;
pub const PRECISION_RANGE: std::ops::RangeInclusive<usize> = 6..=12;

/// Exit code for a library error surfacing from a command.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) | Error::InvalidLabel(_) | Error::UnknownMolecule(_) | Error::Config { .. } => {
            EXIT_USAGE
        }
        _ => EXIT_COMPUTE,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Tsv,
}

impl Format {
    fn delimiter(self) -> u8 {
        match self {
            Format::Csv => b',',
            Format::Tsv => b'\t',
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "tsv" => Ok(Format::Tsv),
            _ => Err(Error::domain(format!("unknown output format `{s}` (csv or tsv)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Number(f64),
    Empty,
}

impl Cell {
    fn render(&self, precision: usize) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Number(x) => format!("{x:.precision$}"),
            Cell::Empty => String::new(),
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Number(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Number)
    }
}

/// A header plus rows of cells, written as delimited text.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len(), "row width");
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    pub fn write<W: Write>(&self, sink: W, format: Format, precision: usize) -> Result<()> {
        check_precision(precision)?;
        let mut w = csv::WriterBuilder::new()
            .delimiter(format.delimiter())
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(sink);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.render(precision)))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_string(&self, format: Format, precision: usize) -> Result<String> {
        let mut buf = Vec::new();
        self.write(&mut buf, format, precision)?;
        Ok(String::from_utf8(buf).expect("table output is UTF-8"))
    }
}

pub fn check_precision(precision: usize) -> Result<()> {
    if PRECISION_RANGE.contains(&precision) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "precision must lie in {}..={}, got {precision}",
            PRECISION_RANGE.start(),
            PRECISION_RANGE.end()
        )))
    }
}

/// The coupling A: a number, or the token `2b` resolved against b.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Strength {
    #[default]
    TwiceRange,
    Value(f64),
}

impl Strength {
    pub fn resolve(self, b: f64) -> f64 {
        match self {
            Strength::TwiceRange => 2.0 * b,
            Strength::Value(a) => a,
        }
    }
}

impl FromStr for Strength {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("2b") {
            return Ok(Strength::TwiceRange);
        }
        t.parse::<f64>()
            .ok()
            .filter(|a| a.is_finite())
            .map(Strength::Value)
            .ok_or_else(|| Error::domain(format!("A must be a number or `2b`, got `{s}`")))
    }
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strength::TwiceRange => f.write_str("2b"),
            Strength::Value(a) => write!(f, "{a}"),
        }
    }
}

/// How the coupling is specified: directly, or through a Hulthén-style charge
/// with A·ħ²/(2μb²) = Ze²/b.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coupling {
    Strength(Strength),
    Charge(f64),
}

impl Default for Coupling {
    fn default() -> Self {
        Coupling::Strength(Strength::TwiceRange)
    }
}

/// Builds potential parameters from 1/b, α and the coupling in `units`.
pub fn potential_from(alpha: f64, inv_b: f64, coupling: Coupling, units: &UnitSystem) -> Result<PotentialParams> {
    if !(inv_b.is_finite() && inv_b > 0.0) {
        return Err(Error::domain(format!("1/b must be positive, got {inv_b}")));
    }
    let b = 1.0 / inv_b;
    let strength = match coupling {
        Coupling::Strength(s) => s.resolve(b),
        Coupling::Charge(z) => PotentialParams::hulthen(z, inv_b, units)?.strength(),
    };
    PotentialParams::new(strength, alpha, b)
}

#[derive(Debug, Clone, PartialEq, Default)]
pub enum UnitsChoice {
    #[default]
    Atomic,
    /// Molecular preset for a registry entry.
    Molecular(String),
    Custom {
        hbar: f64,
        mu: f64,
    },
}

impl UnitsChoice {
    pub fn resolve(&self, registry: &MoleculeRegistry) -> Result<UnitSystem> {
        match self {
            UnitsChoice::Atomic => Ok(UnitSystem::atomic()),
            UnitsChoice::Molecular(name) => Ok(UnitSystem::for_molecule(registry.get(name)?)),
            UnitsChoice::Custom { hbar, mu } => UnitSystem::custom(*hbar, *mu),
        }
    }
}

/// Output and unit settings shared by all commands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub units: UnitsChoice,
    /// Restricts molecular tables to one molecule.
    pub molecule: Option<String>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub precision: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            units: UnitsChoice::Atomic,
            molecule: None,
            output: None,
            format: Format::Csv,
            precision: DEFAULT_PRECISION,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        check_precision(self.precision)
    }

    /// Writes `table` to the configured file, or to `fallback` when none is set.
    pub fn emit<W: Write>(&self, table: &Table, fallback: W) -> Result<()> {
        match &self.output {
            Some(path) => {
                let file = std::fs::File::create(path)?;
                table.write(std::io::BufWriter::new(file), self.format, self.precision)
            }
            None => table.write(fallback, self.format, self.precision),
        }
    }
}

/// Label for a column or value of α; α = 0 and 1 give the same spectrum.
pub(crate) fn alpha_label(alpha: f64) -> String {
    if alpha == 0.0 || alpha == 1.0 {
        "0,1".to_owned()
    } else {
        format!("{alpha}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strength_tokens() {
        assert_eq!("2b".parse::<Strength>().unwrap(), Strength::TwiceRange);
        assert_eq!(" 2B ".parse::<Strength>().unwrap(), Strength::TwiceRange);
        assert_eq!("80".parse::<Strength>().unwrap(), Strength::Value(80.0));
        assert!("3b".parse::<Strength>().is_err());
        assert!("inf".parse::<Strength>().is_err());
        assert_eq!(Strength::TwiceRange.resolve(40.0), 80.0);
    }

    #[test]
    fn csv_quoting_and_line_endings() {
        let mut t = Table::new(["state", "HCl alpha=0,1"]);
        t.push(vec!["2p".into(), Cell::Number(-4.811_526_46)]);
        t.push(vec!["3\"d".into(), Cell::Empty]);
        let s = t.to_string(Format::Csv, 8).unwrap();
        assert_eq!(s, "state,\"HCl alpha=0,1\"\n2p,-4.81152646\n\"3\"\"d\",\n");
        let s = t.to_string(Format::Tsv, 6).unwrap();
        assert_eq!(s.lines().next().unwrap(), "state\tHCl alpha=0,1");
    }

    #[test]
    fn precision_bounds() {
        let t = Table::new(["x"]);
        assert!(t.to_string(Format::Csv, 5).is_err());
        assert!(t.to_string(Format::Csv, 13).is_err());
        assert!(t.to_string(Format::Csv, 12).is_ok());
    }

    #[test]
    fn formats() {
        assert_eq!("TSV".parse::<Format>().unwrap(), Format::Tsv);
        assert!("json".parse::<Format>().is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::InvalidLabel("1p".into())), EXIT_USAGE);
        assert_eq!(exit_code(&Error::Numerical("x".into())), EXIT_COMPUTE);
    }

    #[test]
    fn charge_coupling() {
        let u = UnitSystem::atomic();
        let p = potential_from(0.0, 0.025, Coupling::Charge(1.0), &u).unwrap();
        assert!((p.strength() - 80.0).abs() < 1e-12);
        let q = potential_from(0.75, 0.025, Coupling::default(), &u).unwrap();
        assert_eq!(q.strength(), 80.0);
        assert!(potential_from(0.75, 0.0, Coupling::default(), &u).is_err());
    }
}
