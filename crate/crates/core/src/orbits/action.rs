use super::group::AffineMap;
use crate::coloring::{satisfies_relations, Coloring};
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};

/// Recolors every arc by `g`.
pub fn apply_map(g: &AffineMap, c: &Coloring) -> Result<Coloring> {
    if g.modulus != c.modulus {
        return Err(Error::ModulusMismatch(g.modulus, c.modulus));
    }
    Ok(Coloring::new(
        c.modulus,
        c.values.iter().map(|&x| g.apply(x)).collect(),
    ))
}

/// Relabels the colors of `c` by an arbitrary permutation of residues and
/// reports whether the result is still a coloring of `d`.
pub fn apply_permutation_unchecked(
    perm: &[u64],
    c: &Coloring,
    d: &PlanarDiagram,
) -> Result<(Vec<u64>, bool)> {
    let m = c.modulus;
    if perm.len() as u64 != m {
        return Err(Error::Invalid(format!(
            "permutation has {} entries, need {m}",
            perm.len()
        )));
    }
    let mut seen = vec![false; m as usize];
    for &p in perm {
        if p >= m || std::mem::replace(&mut seen[p as usize], true) {
            return Err(Error::Invalid("not a permutation of the residues".into()));
        }
    }
    let values: Vec<u64> = c.values.iter().map(|&x| perm[x as usize]).collect();
    let valid = satisfies_relations(d, m, &values);
    Ok((values, valid))
}

/// Builds the image list of a permutation given in cycle notation, e.g.
/// `[[0, 1], [2, 3, 4]]` for `(0 1)(2 3 4)`.
pub fn permutation_from_cycles(m: u64, cycles: &[&[u64]]) -> Result<Vec<u64>> {
    let mut perm: Vec<u64> = (0..m).collect();
    let mut used = vec![false; m as usize];
    for cycle in cycles {
        for (i, &x) in cycle.iter().enumerate() {
            if x >= m || std::mem::replace(&mut used[x as usize], true) {
                return Err(Error::Invalid(format!("bad cycle entry {x}")));
            }
            perm[x as usize] = cycle[(i + 1) % cycle.len()];
        }
    }
    Ok(perm)
}
