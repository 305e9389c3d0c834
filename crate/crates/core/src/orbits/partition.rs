use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::group::{GroupKind, GroupSpec};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::exec::{map_slice, Execution};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    /// Lexicographically least member.
    #[serde(serialize_with = "values_only")]
    pub representative: Coloring,
    pub size: usize,
    /// Orbit size from the stabilizer of the representative, `|G| / |Stab|`.
    pub member_count_check: usize,
}

fn values_only<S: serde::Serializer>(c: &Coloring, s: S) -> std::result::Result<S::Ok, S::Error> {
    c.values.serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    pub modulus: u64,
    pub kind: GroupKind,
    pub orbits: Vec<Orbit>,
    pub class_count: usize,
}

impl OrbitPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.size).collect()
    }
}

pub fn orbit_partition(colorings: &[Coloring], group: &GroupSpec) -> Result<OrbitPartition> {
    orbit_partition_with(colorings, group, Execution::default())
}

/// Groups the non-trivial colorings into orbits. Each coloring is labelled by
/// the least image under the group; trivial colorings are skipped.
pub fn orbit_partition_with(
    colorings: &[Coloring],
    group: &GroupSpec,
    exec: Execution,
) -> Result<OrbitPartition> {
    let m = group.modulus;
    if let Some(c) = colorings.iter().find(|c| c.modulus != m) {
        return Err(Error::ModulusMismatch(m, c.modulus));
    }
    let members: Vec<&Coloring> = colorings.iter().filter(|c| !c.is_trivial()).collect();
    let set: HashSet<&[u64]> = members.iter().map(|c| c.values.as_slice()).collect();
    if set.len() != members.len() {
        return Err(Error::Invalid("duplicate colorings in input".into()));
    }

    let labels = map_slice(exec, &members, |c| {
        let mut least = c.values.clone();
        let mut image = vec![0; c.values.len()];
        for g in &group.elements {
            for (y, &x) in image.iter_mut().zip(&c.values) {
                *y = g.apply(x);
            }
            if !set.contains(image.as_slice()) {
                return None;
            }
            if image < least {
                least.copy_from_slice(&image);
            }
        }
        Some(least)
    });

    let mut sizes: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    for label in labels {
        *sizes.entry(label.ok_or(Error::NotClosed)?).or_default() += 1;
    }
    let orbits: Vec<Orbit> = sizes
        .into_iter()
        .map(|(values, size)| {
            let stabilizer = group
                .elements
                .iter()
                .filter(|g| values.iter().all(|&x| g.apply(x) == x))
                .count();
            Orbit {
                representative: Coloring::new(m, values),
                size,
                member_count_check: group.order() / stabilizer,
            }
        })
        .collect();
    Ok(OrbitPartition {
        modulus: m,
        kind: group.kind,
        class_count: orbits.len(),
        orbits,
    })
}
