//! System descriptors: `--type/--rank`, `--group A3`, descriptor JSON files,
//! and rank inference from element literals.

use std::path::Path;

use bruhat_core::{make_system, CoxeterSystem, SystemDescriptor};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Serialized form of a system, as read from `--matrix-file` and echoed in
/// every JSON document. Matrix entry `0` stands for infinity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SystemDoc {
    Named {
        #[serde(rename = "type")]
        kind: String,
        rank: usize,
    },
    Matrix {
        coxeter_matrix: Vec<Vec<i64>>,
    },
}

impl SystemDoc {
    /// Builds the system. Type A uses the permutation backend; every other
    /// named type and explicit matrices use the root-lattice backend.
    pub fn build(&self) -> Result<CoxeterSystem, CliError> {
        let descriptor = match self {
            SystemDoc::Named { kind, rank } => {
                let letter = kind.trim().to_ascii_uppercase();
                if letter == "A" {
                    SystemDescriptor::TypeA { rank: *rank }
                } else {
                    SystemDescriptor::Matrix(named_matrix(&letter, *rank)?)
                }
            }
            SystemDoc::Matrix { coxeter_matrix } => {
                SystemDescriptor::Matrix(coxeter_matrix.clone())
            }
        };
        make_system(&descriptor).map_err(|e| CliError::Input(format!("invalid system: {e}")))
    }

    /// Short human label, e.g. `A3` or `matrix rank 3`.
    pub fn label(&self) -> String {
        match self {
            SystemDoc::Named { kind, rank } => format!("{}{rank}", kind.to_ascii_uppercase()),
            SystemDoc::Matrix { coxeter_matrix } => format!("matrix rank {}", coxeter_matrix.len()),
        }
    }

    pub fn read_file(path: &Path) -> Result<SystemDoc, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("bad descriptor in {}: {e}", path.display())))
    }

    /// Parses a group name such as `A3`, `B4`, `G2` or `S5` (= `A4`).
    pub fn parse_group(name: &str) -> Result<SystemDoc, CliError> {
        let name = name.trim();
        let bad = || {
            CliError::Input(format!(
                "bad group name `{name}` (expected e.g. A3, B3, S4)"
            ))
        };
        let mut chars = name.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        match letter {
            'S' if n >= 2 => Ok(SystemDoc::Named {
                kind: "A".into(),
                rank: n - 1,
            }),
            'A'..='G' => Ok(SystemDoc::Named {
                kind: letter.to_string(),
                rank: n,
            }),
            _ => Err(bad()),
        }
    }
}

/// Coxeter matrix of a finite crystallographic type in Bourbaki numbering.
pub fn named_matrix(letter: &str, rank: usize) -> Result<Vec<Vec<i64>>, CliError> {
    let bad = |why: &str| CliError::Input(format!("no Coxeter type {letter}{rank}: {why}"));
    let mut m = vec![vec![2i64; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut bond = |i: usize, j: usize, v: i64| {
        m[i - 1][j - 1] = v;
        m[j - 1][i - 1] = v;
    };
    match letter {
        "A" => (1..rank).for_each(|i| bond(i, i + 1, 3)),
        "B" | "C" => {
            if rank < 2 {
                return Err(bad("rank must be at least 2"));
            }
            (1..rank - 1).for_each(|i| bond(i, i + 1, 3));
            bond(rank - 1, rank, 4);
        }
        "D" => {
            if rank < 4 {
                return Err(bad("rank must be at least 4"));
            }
            (1..rank - 1).for_each(|i| bond(i, i + 1, 3));
            bond(rank - 2, rank, 3);
        }
        "E" => {
            if !(6..=8).contains(&rank) {
                return Err(bad("rank must be 6, 7 or 8"));
            }
            bond(1, 3, 3);
            bond(2, 4, 3);
            (3..rank).for_each(|i| bond(i, i + 1, 3));
        }
        "F" => {
            if rank != 4 {
                return Err(bad("rank must be 4"));
            }
            bond(1, 2, 3);
            bond(2, 3, 4);
            bond(3, 4, 3);
        }
        "G" => {
            if rank != 2 {
                return Err(bad("rank must be 2"));
            }
            bond(1, 2, 6);
        }
        _ => return Err(bad("unknown type letter")),
    }
    Ok(m)
}

/// Smallest type-A rank that can host the literal: one-line `3412` needs
/// rank 3, the word `2 1 3 2` needs rank 3, and `e` fits in rank 1.
pub fn infer_type_a_rank(literal: &str) -> Result<usize, CliError> {
    let text = literal.trim();
    if text.is_empty() || text == "e" {
        return Ok(1);
    }
    let compact = !text.contains(|c: char| c.is_whitespace() || c == ',');
    if compact && text.len() > 1 && text.bytes().all(|b| b.is_ascii_digit()) {
        return Ok(text.len() - 1);
    }
    let mut rank = 1;
    for token in text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
    {
        let digits = token.strip_prefix('s').unwrap_or(token);
        let index: usize = digits
            .parse()
            .map_err(|_| CliError::Input(format!("bad generator token `{token}`")))?;
        rank = rank.max(index);
    }
    Ok(rank)
}
