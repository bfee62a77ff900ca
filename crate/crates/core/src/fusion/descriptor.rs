//! Fusion descriptors: JSON or the shorthands `frobenius:<catalog>:<p>` and
//! `trivial:<catalog>`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::FusionSystem;
use crate::error::{Error, Result};
use crate::group::descriptor::{load_group_with_cap, GroupDescriptor};
use crate::group::{GroupMap, SubgroupLattice};

#[derive(Clone, Debug, PartialEq)]
pub enum FusionDescriptor {
    Frobenius { group: GroupDescriptor, prime: usize },
    Generated { group: GroupDescriptor, automorphisms: Vec<Vec<usize>> },
    Trivial { group: GroupDescriptor },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
enum Raw {
    Frobenius {
        #[serde(rename = "G")]
        group: Value,
        sylow: usize,
    },
    Generated {
        #[serde(rename = "S")]
        group: Value,
        #[serde(default)]
        automorphisms: Vec<Vec<usize>>,
    },
    Trivial {
        #[serde(rename = "S")]
        group: Value,
    },
}

/// Group descriptors inside fusion JSON may be objects or shorthand strings.
fn group_from_value(v: Value) -> Result<GroupDescriptor> {
    match v {
        Value::String(s) => GroupDescriptor::parse(&s),
        other => Ok(serde_json::from_value(other)?),
    }
}

impl FusionDescriptor {
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if let Some(rest) = t.strip_prefix("frobenius:") {
            let (name, p) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::Descriptor(format!("expected frobenius:<catalog>:<prime>, got {t}")))?;
            let prime = p.parse().map_err(|_| Error::Descriptor(format!("bad prime {p:?}")))?;
            return Ok(FusionDescriptor::Frobenius { group: GroupDescriptor::Catalog { name: name.into() }, prime });
        }
        if let Some(name) = t.strip_prefix("trivial:") {
            return Ok(FusionDescriptor::Trivial { group: GroupDescriptor::Catalog { name: name.into() } });
        }
        let raw: Raw = serde_json::from_str(t)?;
        Ok(match raw {
            Raw::Frobenius { group, sylow } => FusionDescriptor::Frobenius { group: group_from_value(group)?, prime: sylow },
            Raw::Generated { group, automorphisms } => {
                FusionDescriptor::Generated { group: group_from_value(group)?, automorphisms }
            }
            Raw::Trivial { group } => FusionDescriptor::Trivial { group: group_from_value(group)? },
        })
    }
}

pub fn load_fusion(desc: &FusionDescriptor, cap: usize) -> Result<FusionSystem> {
    match desc {
        FusionDescriptor::Frobenius { group, prime } => {
            let g = Arc::new(SubgroupLattice::build(load_group_with_cap(group, cap)?)?);
            FusionSystem::frobenius_at_prime(&g, *prime)
        }
        FusionDescriptor::Generated { group, automorphisms } => {
            let s = Arc::new(SubgroupLattice::build(load_group_with_cap(group, cap)?)?);
            let top = s.top();
            let gens = automorphisms
                .iter()
                .map(|images| GroupMap::new(&s, top, top, images))
                .collect::<Result<Vec<_>>>()?;
            let name = format!("F_gen({})", s.group().name());
            FusionSystem::generated(s, gens, name)
        }
        FusionDescriptor::Trivial { group } => {
            FusionSystem::trivial(Arc::new(SubgroupLattice::build(load_group_with_cap(group, cap)?)?))
        }
    }
}
