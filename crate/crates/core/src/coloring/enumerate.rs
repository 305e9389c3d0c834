use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::profile::coloring_smith;
use super::types::{satisfies_relations, Coloring};
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::exec::{count_range, filter_map_range, Execution};
use crate::linalg::solve_mod;

pub const DEFAULT_BUDGET: u128 = 1_000_000;
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Largest number of colorings (trivial ones included) to materialize.
    pub budget: u128,
    pub nontrivial_only: bool,
    pub exec: Execution,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            budget: DEFAULT_BUDGET,
            nontrivial_only: false,
            exec: Execution::default(),
        }
    }
}

pub fn enumerate_colorings(
    d: &PlanarDiagram,
    m: u64,
    nontrivial_only: bool,
) -> Result<Vec<Coloring>> {
    enumerate_colorings_with(
        d,
        m,
        &EnumerationOptions {
            nontrivial_only,
            ..Default::default()
        },
    )
}

/// All `m`-colorings from the Smith form: `x = C y` with each `y_j` running
/// over the multiples of `m / gcd(d_j, m)`. Output is sorted
/// lexicographically by arc values.
pub fn enumerate_colorings_with(
    d: &PlanarDiagram,
    m: u64,
    opts: &EnumerationOptions,
) -> Result<Vec<Coloring>> {
    let sd = coloring_smith(d);
    let sol = solve_mod(&sd, m)?;
    let total = within_budget(sol.count(), opts.budget)?;
    let nontrivial_only = opts.nontrivial_only;
    let mut out = filter_map_range(opts.exec, total as u64, |k| {
        let c = Coloring::new(m, sol.solution(k as u128));
        (!nontrivial_only || !c.is_trivial()).then_some(c)
    });
    out.sort_unstable();
    Ok(out)
}

fn within_budget(count: BigUint, budget: u128) -> Result<u128> {
    match count.to_u128() {
        Some(c) if c <= budget => Ok(c),
        Some(c) => Err(Error::BudgetExceeded { count: c, budget }),
        None => Err(Error::BudgetExceeded {
            count: u128::MAX,
            budget,
        }),
    }
}

/// Tests all `m^arcs` assignments against the crossing equations. Output is
/// lexicographic in the arc values.
pub fn brute_force_colorings(d: &PlanarDiagram, m: u64, exec: Execution) -> Result<Vec<Coloring>> {
    if m < 2 {
        return Err(Error::BadModulus(m, 2));
    }
    let arcs = d.arc_count() as u32;
    let total = within_budget(BigUint::from(m).pow(arcs), BRUTE_FORCE_LIMIT)?;
    Ok(filter_map_range(exec, total as u64, |k| {
        let values = digits(k, m, arcs as usize);
        satisfies_relations(d, m, &values).then(|| Coloring::new(m, values))
    }))
}

/// Counts colorings by testing assignments, without going through the Smith
/// form. Adding a constant to every arc preserves the crossing equations, so
/// only assignments with the first arc colored 0 are tested and the tally is
/// multiplied by `m`.
pub fn brute_force_count(d: &PlanarDiagram, m: u64, exec: Execution) -> Result<BigUint> {
    if m < 2 {
        return Err(Error::BadModulus(m, 2));
    }
    let arcs = d.arc_count();
    if arcs == 0 {
        return Ok(BigUint::from(m));
    }
    let total = within_budget(BigUint::from(m).pow(arcs as u32 - 1), BRUTE_FORCE_LIMIT)?;
    let hits = count_range(exec, total as u64, |k| {
        satisfies_relations(d, m, &digits(k, m, arcs))
    });
    Ok(BigUint::from(hits) * m)
}

// base-m digits of k, most significant first
fn digits(mut k: u64, m: u64, len: usize) -> Vec<u64> {
    let mut values = vec![0u64; len];
    for v in values.iter_mut().rev() {
        *v = k % m;
        k /= m;
    }
    values
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{build_diagram, catalog};

    fn diagram(name: &str) -> PlanarDiagram {
        build_diagram(catalog(name).unwrap())
    }

    #[test]
    fn trefoil_mod_3() {
        let d = diagram("3_1");
        let all = enumerate_colorings(&d, 3, false).unwrap();
        assert_eq!(all.len(), 9);
        let nt = enumerate_colorings(&d, 3, true).unwrap();
        assert_eq!(nt.len(), 6);
        assert!(nt
            .iter()
            .all(|c| c.distinct_colors() == 3 && c.satisfies(&d)));
    }

    #[test]
    fn figure_eight_mod_5() {
        let d = diagram("4_1");
        assert_eq!(enumerate_colorings(&d, 5, true).unwrap().len(), 20);
        assert_eq!(
            brute_force_colorings(&d, 5, Execution::Sequential)
                .unwrap()
                .len(),
            25
        );
    }

    #[test]
    fn unknot_has_only_trivial() {
        let d = diagram("unknot");
        assert!(enumerate_colorings(&d, 7, true).unwrap().is_empty());
        assert_eq!(enumerate_colorings(&d, 7, false).unwrap().len(), 7);
    }

    #[test]
    fn brute_force_small_cases() {
        let d = diagram("3_1");
        assert_eq!(
            brute_force_colorings(&d, 3, Execution::Sequential)
                .unwrap()
                .len(),
            9
        );
        let two = brute_force_colorings(&d, 2, Execution::Sequential).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.iter().all(Coloring::is_trivial));
    }

    #[test]
    fn brute_force_count_matches_listing() {
        for name in ["unknot", "3_1", "4_1", "5_2"] {
            let d = diagram(name);
            for m in 2..=7 {
                let listed = brute_force_colorings(&d, m, Execution::Sequential)
                    .unwrap()
                    .len();
                let counted = brute_force_count(&d, m, Execution::default()).unwrap();
                assert_eq!(counted, BigUint::from(listed), "{name} m={m}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let d = diagram("9_40");
        let opts = EnumerationOptions {
            budget: 100,
            ..Default::default()
        };
        let err = enumerate_colorings_with(&d, 5, &opts).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                count: 125,
                budget: 100
            }
        );
        assert!(err.is_budget());
        let err = brute_force_colorings(&d, 7, Execution::Sequential).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let d = diagram("9_40");
        let seq = EnumerationOptions {
            exec: Execution::Sequential,
            ..Default::default()
        };
        let par = EnumerationOptions {
            exec: Execution::Parallel,
            ..Default::default()
        };
        assert_eq!(
            enumerate_colorings_with(&d, 15, &seq).unwrap(),
            enumerate_colorings_with(&d, 15, &par).unwrap()
        );
    }
}
