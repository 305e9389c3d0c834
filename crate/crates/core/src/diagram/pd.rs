use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Edge labels around a crossing, counterclockwise from the incoming
/// under-edge. The over-strand sits at positions 1 and 3.
pub type Crossing = [u32; 4];

/// A validated planar-diagram code. Labels run `1..=2n` for `n` crossings;
/// the crossing-free unknot is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PdCode {
    crossings: Vec<Crossing>,
}

impl PdCode {
    pub fn unknot() -> Self {
        PdCode {
            crossings: Vec::new(),
        }
    }

    /// Validates label multiplicities and compresses labels to `1..=E`,
    /// keeping their relative order.
    pub fn new(crossings: Vec<[i64; 4]>) -> Result<Self> {
        if crossings.is_empty() {
            return Err(Error::Syntax(
                "empty crossing list; use `unknot` for the crossing-free diagram".into(),
            ));
        }
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for q in &crossings {
            for &l in q {
                if l <= 0 {
                    return Err(Error::NonPositiveLabel(l));
                }
                *counts.entry(l).or_default() += 1;
            }
        }
        if let Some((&label, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(Error::LabelCount { label, count });
        }
        let rank: BTreeMap<i64, u32> = counts
            .keys()
            .enumerate()
            .map(|(i, &l)| (l, i as u32 + 1))
            .collect();
        let crossings = crossings.iter().map(|q| q.map(|l| rank[&l])).collect();
        Ok(PdCode { crossings })
    }

    pub(crate) fn from_labels(crossings: Vec<Crossing>) -> Result<Self> {
        Self::new(crossings.iter().map(|q| q.map(i64::from)).collect())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_unknot(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Number of edges; the crossing-free circle counts as one edge.
    pub fn edge_count(&self) -> usize {
        if self.crossings.is_empty() {
            1
        } else {
            2 * self.crossings.len()
        }
    }
}

/// Parses `unknot` or a bracketed list of quadruples such as
/// `[[1,4,2,5],[3,6,4,1],[5,2,6,3]]`.
pub fn parse_pd(text: &str) -> Result<PdCode> {
    let text = text.trim();
    if text.eq_ignore_ascii_case("unknot") {
        return Ok(PdCode::unknot());
    }
    let raw: Vec<Vec<i64>> =
        serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
    let quads = raw
        .into_iter()
        .enumerate()
        .map(|(i, q)| {
            <[i64; 4]>::try_from(q.as_slice()).map_err(|_| {
                Error::Syntax(format!(
                    "crossing {} has {} labels, expected 4",
                    i + 1,
                    q.len()
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    PdCode::new(quads)
}

impl FromStr for PdCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pd(s)
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crossings.is_empty() {
            return write!(f, "unknot");
        }
        let parts: Vec<String> = self
            .crossings
            .iter()
            .map(|q| format!("[{},{},{},{}]", q[0], q[1], q[2], q[3]))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct PdJson {
    crossings: Vec<[i64; 4]>,
}

impl Serialize for PdCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PdJson {
            crossings: self.crossings.iter().map(|q| q.map(i64::from)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PdCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PdJson::deserialize(d)?;
        if raw.crossings.is_empty() {
            return Ok(PdCode::unknot());
        }
        PdCode::new(raw.crossings).map_err(D::Error::custom)
    }
}
