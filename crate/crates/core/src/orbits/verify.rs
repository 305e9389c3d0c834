use serde::{Deserialize, Serialize};

use super::group::{build_group, GroupKind};
use super::partition::orbit_partition_with;
use crate::coloring::{coloring_smith, enumerate_colorings_with, p_nullity, EnumerationOptions};
use crate::diagram::{reidemeister_variants, PlanarDiagram};
use crate::error::{Error, Result};
use crate::primes::is_odd_prime;

/// Closed-form class counts for an odd prime `p` and `p`-nullity `n >= 2`:
/// `(p^{n-1} - 1)/(p - 1)` for Aut, `(p^{n-1} - 1)/2` for Inn.
pub fn predicted_class_count(kind: GroupKind, p: u64, n: u32) -> Result<u64> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if n < 2 {
        return Err(Error::BadNullity(n));
    }
    let top = p
        .checked_pow(n - 1)
        .ok_or_else(|| Error::Invalid(format!("{p}^{} overflows", n - 1)))?
        - 1;
    Ok(match kind {
        GroupKind::Aut => top / (p - 1),
        GroupKind::Inn => top / 2,
    })
}

/// Class counts measured on one diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramCounts {
    pub crossings: usize,
    pub nullity: u32,
    pub nontrivial: usize,
    pub aut_classes: usize,
    pub inn_classes: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub knot: String,
    pub p: u64,
    pub nullity: u32,
    pub aut_classes: usize,
    pub inn_classes: usize,
    pub predicted_aut: Option<u64>,
    pub predicted_inn: Option<u64>,
    /// Aut orbit sizes on the input diagram.
    pub orbit_sizes: Vec<usize>,
    pub inn_orbit_sizes: Vec<usize>,
    pub invariant_across_moves: bool,
    /// The input diagram first, then each Reidemeister variant.
    pub diagrams: Vec<DiagramCounts>,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub variants: usize,
    pub seed: u64,
    pub enumeration: EnumerationOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            variants: 3,
            seed: DEFAULT_SEED,
            enumeration: EnumerationOptions::default(),
        }
    }
}

pub const DEFAULT_SEED: u64 = 0x5eed_c010;

struct Measured {
    counts: DiagramCounts,
    aut_sizes: Vec<usize>,
    inn_sizes: Vec<usize>,
}

fn measure(d: &PlanarDiagram, p: u64, opts: &VerifyOptions) -> Result<Measured> {
    let nullity = p_nullity(&coloring_smith(d), p)?;
    let enum_opts = EnumerationOptions {
        nontrivial_only: true,
        ..opts.enumeration
    };
    let colorings = enumerate_colorings_with(d, p, &enum_opts)?;
    let aut = orbit_partition_with(&colorings, &build_group(GroupKind::Aut, p)?, enum_opts.exec)?;
    let inn = orbit_partition_with(&colorings, &build_group(GroupKind::Inn, p)?, enum_opts.exec)?;
    Ok(Measured {
        counts: DiagramCounts {
            crossings: d.crossing_count(),
            nullity,
            nontrivial: colorings.len(),
            aut_classes: aut.class_count,
            inn_classes: inn.class_count,
            passed: true,
        },
        aut_sizes: aut.sizes(),
        inn_sizes: inn.sizes(),
    })
}

/// Measures orbit counts on `d` and on seeded Reidemeister variants of it and
/// compares them with the closed forms. Mismatches are recorded in the
/// report, not returned as errors.
pub fn verify_counts(
    name: &str,
    d: &PlanarDiagram,
    p: u64,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let mut diagrams = vec![d.clone()];
    diagrams.extend(reidemeister_variants(d, opts.variants, opts.seed));

    let base = measure(d, p, opts)?;
    let n = base.counts.nullity;
    let (predicted_aut, predicted_inn) = if n >= 2 {
        (
            Some(predicted_class_count(GroupKind::Aut, p, n)?),
            Some(predicted_class_count(GroupKind::Inn, p, n)?),
        )
    } else {
        (Some(0), Some(0))
    };

    let mut failures = Vec::new();
    let mut rows = Vec::with_capacity(diagrams.len());
    for (i, diagram) in diagrams.iter().enumerate() {
        let mut m = if i == 0 {
            base_clone(&base)
        } else {
            measure(diagram, p, opts)?
        };
        let tag = if i == 0 {
            "input diagram".to_string()
        } else {
            format!("variant {i}")
        };
        let mut ok = true;
        let mut fail = |msg: String| {
            ok = false;
            failures.push(format!("{tag}: {msg}"));
        };
        let c = &m.counts;
        if Some(c.aut_classes as u64) != predicted_aut {
            fail(format!(
                "{} Aut classes, predicted {:?}",
                c.aut_classes, predicted_aut
            ));
        }
        if Some(c.inn_classes as u64) != predicted_inn {
            fail(format!(
                "{} Inn classes, predicted {:?}",
                c.inn_classes, predicted_inn
            ));
        }
        let aut_size = (p * (p - 1)) as usize;
        if m.aut_sizes.iter().any(|&s| s != aut_size) {
            fail(format!(
                "Aut orbit sizes {:?}, expected all {aut_size}",
                m.aut_sizes
            ));
        }
        let inn_size = (2 * p) as usize;
        if m.inn_sizes.iter().any(|&s| s != inn_size) {
            fail(format!(
                "Inn orbit sizes {:?}, expected all {inn_size}",
                m.inn_sizes
            ));
        }
        if i > 0 {
            let b = &base.counts;
            if (c.nullity, c.nontrivial, c.aut_classes, c.inn_classes)
                != (b.nullity, b.nontrivial, b.aut_classes, b.inn_classes)
            {
                fail("counts differ from the input diagram".into());
            }
        }
        m.counts.passed = ok;
        rows.push(m.counts);
    }

    let invariant_across_moves = rows.iter().all(|r| {
        (r.nullity, r.nontrivial, r.aut_classes, r.inn_classes)
            == (
                n,
                base.counts.nontrivial,
                base.counts.aut_classes,
                base.counts.inn_classes,
            )
    });
    Ok(VerificationReport {
        knot: name.to_string(),
        p,
        nullity: n,
        aut_classes: base.counts.aut_classes,
        inn_classes: base.counts.inn_classes,
        predicted_aut,
        predicted_inn,
        orbit_sizes: base.aut_sizes.clone(),
        inn_orbit_sizes: base.inn_sizes.clone(),
        invariant_across_moves,
        passed: failures.is_empty(),
        diagrams: rows,
        failures,
    })
}

fn base_clone(m: &Measured) -> Measured {
    Measured {
        counts: m.counts.clone(),
        aut_sizes: m.aut_sizes.clone(),
        inn_sizes: m.inn_sizes.clone(),
    }
}
