use std::collections::BTreeMap;
use std::str::FromStr;

use super::{alpha_label, potential_from, Cell, Coupling, RunConfig, Table};
use crate::error::{Error, Result};
use crate::oracle;
use crate::potential::CentrifugalScheme;
use crate::spectrum::{self, QuantumState};
use crate::units::{MoleculeRegistry, UnitSystem};

const INV_B: [f64; 4] = [0.025, 0.050, 0.075, 0.100];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// Atomic units, α ∈ {0.75, 1.5}.
    Table1,
    /// HCl and CH in eV.
    Table2,
    /// LiH and CO in eV.
    Table3,
}

impl TableKind {
    pub fn molecules(self) -> &'static [&'static str] {
        match self {
            TableKind::Table1 => &[],
            TableKind::Table2 => &["HCl", "CH"],
            TableKind::Table3 => &["LiH", "CO"],
        }
    }

    pub fn default_alphas(self) -> Vec<f64> {
        match self {
            TableKind::Table1 => vec![0.75, 1.5],
            _ => vec![0.0, 0.75, 1.5],
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "table1" | "1" => Ok(TableKind::Table1),
            "table2" | "2" => Ok(TableKind::Table2),
            "table3" | "3" => Ok(TableKind::Table3),
            _ => Err(Error::domain(format!("unknown table `{s}` (table1, table2, table3)"))),
        }
    }
}

/// Which rows (state, 1/b) and α columns to produce.
#[derive(Debug, Clone, PartialEq)]
pub struct TableSpec {
    pub which: TableKind,
    pub rows: Vec<(QuantumState, f64)>,
    pub alphas: Vec<f64>,
}

impl TableSpec {
    /// The published row and column sets.
    pub fn published(which: TableKind) -> Self {
        let mut rows = Vec::new();
        let mut push = |label: &str, inv_b: &[f64]| {
            let s = QuantumState::from_label(label).expect("static label");
            rows.extend(inv_b.iter().map(|&x| (s, x)));
        };
        let with_3d_at_100 = which != TableKind::Table1;
        push("2p", &INV_B);
        push("3p", &INV_B);
        push("3d", if with_3d_at_100 { &INV_B } else { &INV_B[..3] });
        for label in ["4p", "4d", "4f"] {
            push(label, &INV_B[..3]);
        }
        for label in ["5p", "5d", "5f", "5g", "6p", "6d", "6f", "6g"] {
            push(label, &INV_B[..1]);
        }
        TableSpec {
            which,
            rows,
            alphas: which.default_alphas(),
        }
    }

    /// Every state at every 1/b.
    pub fn grid(which: TableKind, states: &[QuantumState], inv_b_values: &[f64], alphas: &[f64]) -> Self {
        let rows = states
            .iter()
            .flat_map(|&s| inv_b_values.iter().map(move |&x| (s, x)))
            .collect();
        TableSpec {
            which,
            rows,
            alphas: alphas.to_vec(),
        }
    }
}

pub(crate) fn inv_b_label(x: f64) -> String {
    let fixed = format!("{x:.3}");
    if fixed.parse::<f64>().ok() == Some(x) {
        fixed
    } else {
        format!("{x}")
    }
}

struct Block {
    prefix: String,
    units: UnitSystem,
}

/// Closed-form energies for a table, optionally with oracle columns for the
/// Greene-Aldrich and exact centrifugal schemes.
pub fn cmd_table(spec: &TableSpec, cfg: &RunConfig, registry: &MoleculeRegistry, with_oracle: bool) -> Result<Table> {
    cfg.validate()?;
    let blocks: Vec<Block> = match spec.which {
        TableKind::Table1 => vec![Block {
            prefix: String::new(),
            units: cfg.units.resolve(registry)?,
        }],
        kind => kind
            .molecules()
            .iter()
            .filter(|m| cfg.molecule.as_deref().is_none_or(|want| want.eq_ignore_ascii_case(m)))
            .map(|m| {
                Ok(Block {
                    prefix: format!("{m} "),
                    units: UnitSystem::for_molecule(registry.get(m)?),
                })
            })
            .collect::<Result<_>>()?,
    };
    if blocks.is_empty() {
        return Err(Error::UnknownMolecule(cfg.molecule.clone().unwrap_or_default()));
    }

    let schemes = [CentrifugalScheme::GreeneAldrich, CentrifugalScheme::Exact];
    let mut header = vec!["state".to_owned(), "1/b".to_owned()];
    for block in &blocks {
        for &alpha in &spec.alphas {
            let col = format!("{}alpha={}", block.prefix, alpha_label(alpha));
            if with_oracle {
                header.extend(schemes.iter().map(|s| format!("{col} oracle {}", s.name())));
                header.insert(header.len() - schemes.len(), col);
            } else {
                header.push(col);
            }
        }
    }
    let mut table = Table::new(header);

    // Oracle energies keyed by (block, alpha, 1/b, scheme), one solve per group.
    let mut numeric: BTreeMap<(usize, usize, u64, usize), Vec<(QuantumState, Option<f64>)>> = BTreeMap::new();
    if with_oracle {
        let mut by_inv_b: BTreeMap<u64, Vec<QuantumState>> = BTreeMap::new();
        for &(s, x) in &spec.rows {
            by_inv_b.entry(x.to_bits()).or_default().push(s);
        }
        for (bi, block) in blocks.iter().enumerate() {
            for (ai, &alpha) in spec.alphas.iter().enumerate() {
                for (&bits, states) in &by_inv_b {
                    let p = potential_from(alpha, f64::from_bits(bits), Coupling::default(), &block.units)?;
                    for (si, &scheme) in schemes.iter().enumerate() {
                        let levels = oracle::solve_states(&p, &block.units, scheme, states)?;
                        numeric.insert(
                            (bi, ai, bits, si),
                            levels.into_iter().map(|l| (l.state, l.energy)).collect(),
                        );
                    }
                }
            }
        }
    }

    for &(state, inv_b) in &spec.rows {
        let mut row = vec![Cell::Text(state.label()), Cell::Text(inv_b_label(inv_b))];
        for (bi, block) in blocks.iter().enumerate() {
            for (ai, &alpha) in spec.alphas.iter().enumerate() {
                let p = potential_from(alpha, inv_b, Coupling::default(), &block.units)?;
                row.push(if spectrum::is_bound(&p, state) {
                    Cell::Number(spectrum::energy(&p, &block.units, state))
                } else {
                    Cell::from("unbound")
                });
                if with_oracle {
                    for si in 0..schemes.len() {
                        let e = numeric[&(bi, ai, inv_b.to_bits(), si)]
                            .iter()
                            .find(|(s, _)| *s == state)
                            .and_then(|(_, e)| *e);
                        row.push(e.map_or_else(|| Cell::from("unbound"), Cell::Number));
                    }
                }
            }
        }
        table.push(row);
    }
    Ok(table)
}
