use num_bigint::BigInt;
use serde::Serialize;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::linalg::IntegerMatrix;

/// One row per crossing (`under + under - 2 over`), one column per arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringMatrix {
    pub matrix: IntegerMatrix,
    /// Identifier (least edge label) of the arc in each column.
    pub arc_ids: Vec<u32>,
}

pub fn coloring_matrix(d: &PlanarDiagram) -> Result<ColoringMatrix> {
    if d.is_unknot() {
        return Err(Error::CrossingFree);
    }
    let mut m = IntegerMatrix::zeros(d.crossing_count(), d.arc_count());
    for (row, rel) in d.relations().iter().enumerate() {
        m[(row, rel.under[0])] += 1;
        m[(row, rel.under[1])] += 1;
        m[(row, rel.over)] -= BigInt::from(2);
    }
    let arc_ids = (0..d.arc_count()).map(|a| d.arc_id(a)).collect();
    Ok(ColoringMatrix { matrix: m, arc_ids })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{build_diagram, catalog, parse_pd};

    fn rows(name: &str) -> Vec<Vec<i64>> {
        let d = build_diagram(catalog(name).unwrap());
        coloring_matrix(&d).unwrap().matrix.to_i64_rows().unwrap()
    }

    #[test]
    fn trefoil_matrix() {
        // arcs {1,6}, {2,3}, {4,5}
        assert_eq!(
            rows("3_1"),
            vec![vec![1, 1, -2], vec![-2, 1, 1], vec![1, -2, 1]]
        );
    }

    #[test]
    fn rows_sum_to_zero() {
        for name in crate::diagram::catalog_names()
            .into_iter()
            .filter(|&n| n != "unknot")
        {
            for r in rows(name) {
                assert_eq!(r.iter().sum::<i64>(), 0, "{name}");
                let mut nz: Vec<i64> = r.into_iter().filter(|&x| x != 0).collect();
                nz.sort();
                assert_eq!(nz, vec![-2, 1, 1], "{name}");
            }
        }
        assert_eq!(rows("4_1").len(), 4);
    }

    #[test]
    fn kink_row_is_zero() {
        let d = build_diagram(parse_pd("[[1,2,2,1]]").unwrap());
        let m = coloring_matrix(&d).unwrap();
        assert_eq!(m.matrix.to_i64_rows().unwrap(), vec![vec![0]]);
    }

    #[test]
    fn crossing_free_is_an_error() {
        let d = build_diagram(catalog("unknot").unwrap());
        assert_eq!(coloring_matrix(&d), Err(Error::CrossingFree));
    }
}
