//! JSON algebra files.
//!
//! ```json
//! {"kind": "jordan", "dim": 2, "basis_names": ["e", "v"],
//!  "table": [[[[0, "1"]], [[1, "1/2"]]], [[[1, "1/2"]], []]]}
//! ```
//!
//! `table[i][j]` lists the nonzero components of `e_i e_j` as
//! `[index, "p/q"]`. Rationals are written in lowest terms (`"3"` for
//! integers); floats are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{JordanAlgebra, StructureTable};
use crate::error::{Error, ValidationKind};
use crate::lie::LieTable;
use crate::scalar::parse_rational;
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Jordan,
    Lie,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    kind: Kind,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis_names: Option<Vec<String>>,
    table: Vec<Vec<Vec<(usize, String)>>>,
}

/// A validated algebra read from a file.
#[derive(Clone, Debug)]
pub enum Algebra {
    Jordan(JordanAlgebra<Q>),
    Lie(LieTable<Q>),
}

impl Algebra {
    pub fn kind(&self) -> Kind {
        match self {
            Algebra::Jordan(_) => Kind::Jordan,
            Algebra::Lie(_) => Kind::Lie,
        }
    }

    pub fn table(&self) -> &StructureTable<Q> {
        match self {
            Algebra::Jordan(j) => j.table(),
            Algebra::Lie(l) => l.table(),
        }
    }
}

fn table_to_file(kind: Kind, t: &StructureTable<Q>) -> AlgebraFile {
    let n = t.dim();
    let table = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| t.basis_product(i, j).iter().map(|(k, v)| (*k, v.to_string())).collect())
                .collect()
        })
        .collect();
    AlgebraFile {
        kind,
        dim: n,
        basis_names: t.basis_names().map(<[String]>::to_vec),
        table,
    }
}

/// Serializes an algebra; output is deterministic.
pub fn to_json(kind: Kind, t: &StructureTable<Q>) -> String {
    let mut s = serde_json::to_string(&table_to_file(kind, t)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn algebra_to_json(a: &Algebra) -> String {
    to_json(a.kind(), a.table())
}

fn out_of_range(indices: Vec<usize>) -> Error {
    Error::Validation {
        kind: ValidationKind::IndexOutOfRange,
        indices,
    }
}

/// Parses and validates an algebra file's contents.
pub fn parse_algebra(text: &str) -> Result<Algebra, Error> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    let n = file.dim;
    if file.table.len() != n {
        return Err(Error::Parse(format!("table has {} rows, dim is {n}", file.table.len())));
    }
    let mut t = StructureTable::zero(n);
    for (i, row) in file.table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Parse(format!("table row {i} has {} entries, dim is {n}", row.len())));
        }
        for (j, cell) in row.iter().enumerate() {
            let mut seen = Vec::with_capacity(cell.len());
            for (k, raw) in cell {
                if *k >= n {
                    return Err(out_of_range(vec![i, j, *k]));
                }
                if seen.contains(k) {
                    return Err(Error::Parse(format!("duplicate component {k} in table[{i}][{j}]")));
                }
                seen.push(*k);
                let v = parse_rational(raw)
                    .ok_or_else(|| Error::Parse(format!("not an exact rational: {raw:?} in table[{i}][{j}]")))?;
                t.add(i, j, *k, v);
            }
        }
    }
    if let Some(names) = file.basis_names {
        if names.len() != n {
            return Err(Error::Parse(format!("{} basis names for dim {n}", names.len())));
        }
        t = t.with_names(names);
    }
    match file.kind {
        Kind::Jordan => Ok(Algebra::Jordan(JordanAlgebra::new(t)?)),
        Kind::Lie => Ok(Algebra::Lie(LieTable::new(t)?)),
    }
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<Algebra, Error> {
    parse_algebra(&std::fs::read_to_string(path)?)
}

pub fn save_algebra(path: impl AsRef<Path>, a: &Algebra) -> Result<(), Error> {
    std::fs::write(path, algebra_to_json(a))?;
    Ok(())
}
