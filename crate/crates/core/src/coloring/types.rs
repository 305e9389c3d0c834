use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::PlanarDiagram;

/// Residues mod `modulus`, one per arc, in the diagram's arc order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl Coloring {
    pub fn new(modulus: u64, values: Vec<u64>) -> Self {
        Coloring { modulus, values }
    }

    pub fn constant(modulus: u64, arcs: usize, value: u64) -> Self {
        Coloring {
            modulus,
            values: vec![value % modulus; arcs],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    pub fn distinct_colors(&self) -> usize {
        let mut v = self.values.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    }

    pub fn satisfies(&self, d: &PlanarDiagram) -> bool {
        satisfies_relations(d, self.modulus, &self.values)
    }

    pub fn to_json(&self, d: &PlanarDiagram) -> ColoringJson {
        ColoringJson {
            modulus: self.modulus,
            values: (0..self.values.len())
                .map(|a| (d.arc_id(a), self.values[a]))
                .collect(),
        }
    }
}

/// Checks every crossing equation directly on the diagram.
pub fn satisfies_relations(d: &PlanarDiagram, m: u64, values: &[u64]) -> bool {
    values.len() == d.arc_count()
        && d.relations().iter().all(|r| {
            let lhs = values[r.under[0]] as u128 + values[r.under[1]] as u128;
            let rhs = 2 * values[r.over] as u128;
            lhs % m as u128 == rhs % m as u128
        })
}

/// `{"modulus": m, "values": {"arc_id": residue, ...}}`, arcs in column order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringJson {
    pub modulus: u64,
    pub values: Vec<(u32, u64)>,
}

struct ArcValues<'a>(&'a [(u32, u64)]);

impl Serialize for ArcValues<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (arc, v) in self.0 {
            map.serialize_entry(&arc.to_string(), v)?;
        }
        map.end()
    }
}

impl Serialize for ColoringJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("modulus", &self.modulus)?;
        map.serialize_entry("values", &ArcValues(&self.values))?;
        map.end()
    }
}

struct OrderedArcValues(Vec<(u32, u64)>);

impl<'de> Deserialize<'de> for OrderedArcValues {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = OrderedArcValues;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from arc id to residue")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                use serde::de::Error as _;
                let mut out = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, u64>()? {
                    out.push((k.parse().map_err(A::Error::custom)?, v));
                }
                Ok(OrderedArcValues(out))
            }
        }
        d.deserialize_map(V)
    }
}

impl<'de> Deserialize<'de> for ColoringJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            modulus: u64,
            values: OrderedArcValues,
        }
        let raw = Raw::deserialize(d)?;
        Ok(ColoringJson {
            modulus: raw.modulus,
            values: raw.values.0,
        })
    }
}
