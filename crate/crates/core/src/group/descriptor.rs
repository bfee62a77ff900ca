//! JSON group descriptors and the `catalog:<name>` shorthand.

use serde::{Deserialize, Serialize};

use super::catalog::catalog_group_with_cap;
use super::{perm_from_cycles, BitMatrix, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupDescriptor {
    Catalog {
        name: String,
    },
    Permutation {
        name: String,
        degree: usize,
        /// Each generator is a list of 1-based cycles.
        generators: Vec<Vec<Vec<usize>>>,
    },
    Cayley {
        name: String,
        table: Vec<Vec<usize>>,
    },
    Semidirect {
        name: String,
        rank: usize,
        /// Rows of 0/1 entries; `(M v)_i = sum_j M[i][j] v_j`.
        action: Vec<Vec<Vec<u8>>>,
    },
}

impl GroupDescriptor {
    /// Parses either inline JSON or the shorthand `catalog:<name>`.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if let Some(name) = trimmed.strip_prefix("catalog:") {
            return Ok(GroupDescriptor::Catalog { name: name.to_string() });
        }
        Ok(serde_json::from_str(trimmed)?)
    }

    pub fn name(&self) -> &str {
        match self {
            GroupDescriptor::Catalog { name }
            | GroupDescriptor::Permutation { name, .. }
            | GroupDescriptor::Cayley { name, .. }
            | GroupDescriptor::Semidirect { name, .. } => name,
        }
    }
}

pub fn load_group(desc: &GroupDescriptor) -> Result<FiniteGroup> {
    load_group_with_cap(desc, DEFAULT_ORDER_CAP)
}

pub fn load_group_with_cap(desc: &GroupDescriptor, cap: usize) -> Result<FiniteGroup> {
    match desc {
        GroupDescriptor::Catalog { name } => catalog_group_with_cap(name, cap),
        GroupDescriptor::Permutation { name, degree, generators } => {
            let gens = generators.iter().map(|cycles| perm_from_cycles(*degree, cycles)).collect::<Result<Vec<_>>>()?;
            FiniteGroup::from_permutations(name.clone(), *degree, &gens, cap)
        }
        GroupDescriptor::Cayley { name, table } => FiniteGroup::from_table(name.clone(), table.clone(), cap),
        GroupDescriptor::Semidirect { name, rank, action } => {
            let mats = action
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    BitMatrix::from_entries(m)
                        .ok_or_else(|| Error::Descriptor(format!("action matrix {i} is not a square 0/1 matrix")))
                })
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::semidirect(name.clone(), *rank, &mats, cap)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_descriptor_gives_d8() {
        let d = GroupDescriptor::parse(
            r#"{"name":"D8","kind":"permutation","degree":4,"generators":[[[1,2,3,4]],[[1,3]]]}"#,
        )
        .unwrap();
        let g = load_group(&d).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.center().count(), 2);
    }

    #[test]
    fn catalog_shorthand() {
        let d = GroupDescriptor::parse("catalog:A4").unwrap();
        assert_eq!(load_group(&d).unwrap().order(), 12);
    }

    #[test]
    fn semidirect_descriptor_order_56() {
        let d = GroupDescriptor::parse(
            r#"{"name":"C2^3:C7","kind":"semidirect","rank":3,"action":[[[0,0,1],[1,0,1],[0,1,0]]]}"#,
        )
        .unwrap();
        assert_eq!(load_group(&d).unwrap().order(), 56);
    }

    #[test]
    fn cayley_descriptor_validated() {
        let ok = GroupDescriptor::parse(r#"{"name":"C2","kind":"cayley","table":[[0,1],[1,0]]}"#).unwrap();
        assert_eq!(load_group(&ok).unwrap().order(), 2);
        let bad = GroupDescriptor::parse(r#"{"name":"x","kind":"cayley","table":[[0,1],[1,1]]}"#).unwrap();
        assert!(load_group(&bad).is_err());
    }

    #[test]
    fn singular_action_rejected() {
        let d = GroupDescriptor::parse(r#"{"name":"x","kind":"semidirect","rank":2,"action":[[[1,1],[1,1]]]}"#)
            .unwrap();
        assert!(matches!(load_group(&d), Err(Error::SingularMatrix { index: 0 })));
    }
}
