//! Small embedded knot table.

use super::pd::{Crossing, PdCode};
use crate::error::{Error, Result};

const TABLE: &[(&str, &[Crossing])] = &[
    ("unknot", &[]),
    ("3_1", &[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]),
    (
        "4_1",
        &[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
    ),
    (
        "5_1",
        &[
            [1, 6, 2, 7],
            [3, 8, 4, 9],
            [5, 10, 6, 1],
            [7, 2, 8, 3],
            [9, 4, 10, 5],
        ],
    ),
    (
        "5_2",
        &[
            [1, 4, 2, 5],
            [3, 8, 4, 9],
            [5, 10, 6, 1],
            [9, 6, 10, 7],
            [7, 2, 8, 3],
        ],
    ),
    (
        "6_1",
        &[
            [1, 4, 2, 5],
            [7, 10, 8, 11],
            [3, 9, 4, 8],
            [9, 3, 10, 2],
            [5, 12, 6, 1],
            [11, 6, 12, 7],
        ],
    ),
    (
        "6_2",
        &[
            [1, 4, 2, 5],
            [5, 10, 6, 11],
            [3, 9, 4, 8],
            [9, 3, 10, 2],
            [7, 12, 8, 1],
            [11, 6, 12, 7],
        ],
    ),
    (
        "6_3",
        &[
            [4, 2, 5, 1],
            [8, 4, 9, 3],
            [12, 9, 1, 10],
            [10, 5, 11, 6],
            [6, 11, 7, 12],
            [2, 8, 3, 7],
        ],
    ),
    (
        "7_1",
        &[
            [1, 8, 2, 9],
            [3, 10, 4, 11],
            [5, 12, 6, 13],
            [7, 14, 8, 1],
            [9, 2, 10, 3],
            [11, 4, 12, 5],
            [13, 6, 14, 7],
        ],
    ),
    // closure of the 4-braid (s1 s3 s2^-1)^3
    (
        "9_40",
        &[
            [1, 2, 6, 5],
            [3, 4, 8, 7],
            [7, 10, 9, 6],
            [5, 9, 12, 11],
            [10, 8, 14, 13],
            [13, 16, 15, 12],
            [11, 15, 17, 1],
            [16, 14, 4, 18],
            [18, 3, 2, 17],
        ],
    ),
];

pub fn catalog_names() -> Vec<&'static str> {
    TABLE.iter().map(|(n, _)| *n).collect()
}

pub fn catalog(name: &str) -> Result<PdCode> {
    let (_, crossings) = TABLE
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownKnot(name.to_string()))?;
    if crossings.is_empty() {
        return Ok(PdCode::unknot());
    }
    Ok(PdCode::from_labels(crossings.to_vec()).expect("catalog entries are valid PD codes"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build_diagram;

    #[test]
    fn every_entry_is_a_planar_knot() {
        for name in catalog_names() {
            let pd = catalog(name).unwrap();
            let d = build_diagram(pd.clone());
            assert!(d.is_planar(), "{name}");
            assert_eq!(d.component_count(), 1, "{name}");
            let expected: usize = name.split('_').next().unwrap().parse().unwrap_or(0);
            assert_eq!(pd.crossing_count(), expected, "{name}");
            if expected > 0 {
                assert_eq!(d.arc_count(), expected, "{name}");
            }
            // stored labels are already canonical
            if let Some((_, raw)) = TABLE.iter().find(|(n, _)| *n == name) {
                assert_eq!(pd.crossings(), *raw, "{name}");
            }
        }
    }

    #[test]
    fn lookup() {
        assert_eq!(catalog("3_1").unwrap().crossing_count(), 3);
        assert_eq!(catalog("4_1").unwrap().crossing_count(), 4);
        assert_eq!(catalog("9_40").unwrap().crossing_count(), 9);
        assert!(catalog("unknot").unwrap().is_unknot());
        assert_eq!(catalog("10_1"), Err(Error::UnknownKnot("10_1".into())));
    }
}
