//! End-to-end acceptance checks. Runs as a plain binary so that each
//! criterion reports one PASS/FAIL line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fox_coloring::coloring::{
    brute_force_colorings, brute_force_count, coloring_smith, count_colorings, enumerate_colorings,
    generating_arcs, link_determinant, p_nullity, satisfies_relations,
};
use fox_coloring::diagram::{
    build_diagram, catalog, catalog_names, reidemeister_variants, PlanarDiagram,
};
use fox_coloring::linalg::{gcd_with_modulus, minor_gcd_factors, smith_normal_form, IntegerMatrix};
use fox_coloring::orbits::{
    apply_map, apply_permutation_unchecked, build_group, orbit_partition, permutation_from_cycles,
    predicted_class_count, GroupKind,
};
use fox_coloring::primes::is_odd_prime;
use fox_coloring::Execution;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ODD_PRIMES: [u64; 4] = [3, 5, 7, 11];

fn knot(name: &str) -> PlanarDiagram {
    build_diagram(catalog(name).unwrap())
}

fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// (non-trivial colorings, Aut classes, Inn classes, Aut sizes, Inn sizes)
fn classes(d: &PlanarDiagram, p: u64) -> (usize, usize, usize, Vec<usize>, Vec<usize>) {
    let cs = enumerate_colorings(d, p, true).unwrap();
    let aut = orbit_partition(&cs, &build_group(GroupKind::Aut, p).unwrap()).unwrap();
    let inn = orbit_partition(&cs, &build_group(GroupKind::Inn, p).unwrap()).unwrap();
    (
        cs.len(),
        aut.class_count,
        inn.class_count,
        aut.sizes(),
        inn.sizes(),
    )
}

fn trefoil() {
    let d = knot("3_1");
    let sd = coloring_smith(&d);
    assert_eq!(sd.invariant_factors, big(&[1, 3, 0]));
    assert_eq!(link_determinant(&sd).unwrap(), BigInt::from(3));
    assert_eq!(p_nullity(&sd, 3).unwrap(), 2);
    assert_eq!(count_colorings(&sd, 3).unwrap(), BigUint::from(9u32));
    let (nontrivial, aut, inn, _, _) = classes(&d, 3);
    assert_eq!((nontrivial, aut, inn), (6, 1, 1));
}

fn figure_eight() {
    let d = knot("4_1");
    let sd = coloring_smith(&d);
    assert_eq!(link_determinant(&sd).unwrap(), BigInt::from(5));
    assert_eq!(count_colorings(&sd, 5).unwrap(), BigUint::from(25u32));
    let (nontrivial, aut, inn, aut_sizes, inn_sizes) = classes(&d, 5);
    assert_eq!(nontrivial, 20);
    assert_eq!((aut, aut_sizes), (1, vec![20]));
    assert_eq!((inn, inn_sizes), (2, vec![10, 10]));
}

fn nine_forty() {
    let d = knot("9_40");
    let sd = coloring_smith(&d);
    assert_eq!(p_nullity(&sd, 5).unwrap(), 3);
    assert_eq!(generating_arcs(&d, 5).unwrap().len(), 3);
    let (nontrivial, aut, inn, aut_sizes, inn_sizes) = classes(&d, 5);
    assert_eq!(nontrivial, 120);
    assert_eq!((aut, aut_sizes), (6, vec![20; 6]));
    assert_eq!((inn, inn_sizes), (12, vec![10; 12]));
}

fn formula_sweep() {
    let start = Instant::now();
    let mut checked = 0;
    for name in catalog_names() {
        let d = knot(name);
        let sd = coloring_smith(&d);
        for p in ODD_PRIMES {
            let n = p_nullity(&sd, p).unwrap();
            if n < 2 {
                continue;
            }
            let cs: Vec<_> = brute_force_colorings(&d, p, Execution::default())
                .unwrap()
                .into_iter()
                .filter(|c| !c.is_trivial())
                .collect();
            let aut = orbit_partition(&cs, &build_group(GroupKind::Aut, p).unwrap()).unwrap();
            let inn = orbit_partition(&cs, &build_group(GroupKind::Inn, p).unwrap()).unwrap();
            let want_aut = predicted_class_count(GroupKind::Aut, p, n).unwrap();
            let want_inn = predicted_class_count(GroupKind::Inn, p, n).unwrap();
            assert_eq!(aut.class_count as u64, want_aut, "{name} p={p} Aut");
            assert_eq!(inn.class_count as u64, want_inn, "{name} p={p} Inn");
            checked += 1;
        }
    }
    assert!(
        checked >= 9,
        "only {checked} (knot, prime) pairs had nullity >= 2"
    );
    assert!(
        start.elapsed() < Duration::from_secs(60),
        "took {:?}",
        start.elapsed()
    );
}

fn composite_counts() {
    for name in catalog_names() {
        let d = knot(name);
        if d.arc_count() > 7 {
            continue;
        }
        let sd = coloring_smith(&d);
        for m in [4u64, 6, 8, 9, 10, 12] {
            let formula = count_colorings(&sd, m).unwrap();
            let brute = brute_force_count(&d, m, Execution::default()).unwrap();
            assert_eq!(formula, brute, "{name} m={m}");
            let product: BigUint = sd
                .column_factors()
                .iter()
                .map(|z| {
                    if z.is_zero() {
                        BigUint::from(m)
                    } else {
                        BigUint::from(gcd_with_modulus(z, m))
                    }
                })
                .product();
            assert_eq!(formula, product, "{name} m={m}");
        }
    }
}

fn smith_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5f0c_2a11);
    for case in 0..500 {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=5);
        let entries: Vec<BigInt> = (0..rows * cols)
            .map(|_| BigInt::from(rng.gen_range(-9..=9)))
            .collect();
        let m = IntegerMatrix::from_entries(rows, cols, entries).unwrap();
        let sd = smith_normal_form(&m);
        assert_eq!(&(&sd.r * &m) * &sd.c, sd.s, "case {case}: S != RMC");
        assert!(
            sd.r.determinant().unwrap().abs().is_one(),
            "case {case}: R not unimodular"
        );
        assert!(
            sd.c.determinant().unwrap().abs().is_one(),
            "case {case}: C not unimodular"
        );
        for (k, w) in sd.invariant_factors.windows(2).enumerate() {
            let divides = if w[0].is_zero() {
                w[1].is_zero()
            } else {
                (&w[1] % &w[0]).is_zero()
            };
            assert!(divides, "case {case}: d{k} does not divide d{}", k + 1);
        }
        assert_eq!(
            sd.invariant_factors,
            minor_gcd_factors(&m).unwrap(),
            "case {case}"
        );
    }
}

fn invariance() {
    for name in catalog_names() {
        let d = knot(name);
        let sd = coloring_smith(&d);
        let counts: Vec<BigUint> = (2..=12).map(|m| count_colorings(&sd, m).unwrap()).collect();
        let primes: Vec<u64> = ODD_PRIMES
            .iter()
            .copied()
            .filter(|&p| p_nullity(&sd, p).unwrap() >= 2)
            .collect();
        let base: Vec<_> = primes.iter().map(|&p| classes(&d, p)).collect();
        let variants = reidemeister_variants(&d, 3, 2024);
        assert_eq!(variants.len(), 3);
        for (i, v) in variants.iter().enumerate() {
            assert!(v.is_planar() && v.crossing_count() > d.crossing_count().saturating_sub(1));
            let vsd = coloring_smith(v);
            let vc: Vec<BigUint> = (2..=12)
                .map(|m| count_colorings(&vsd, m).unwrap())
                .collect();
            assert_eq!(vc, counts, "{name} variant {i}: coloring counts");
            for (&p, b) in primes.iter().zip(&base) {
                let (_, aut, inn, _, _) = classes(v, p);
                assert_eq!((aut, inn), (b.1, b.2), "{name} variant {i} p={p}");
            }
        }
    }
}

fn negative_control() {
    let d = knot("9_40");
    let gens = generating_arcs(&d, 5).unwrap();
    let all = enumerate_colorings(&d, 5, false).unwrap();
    let matches: Vec<_> = all
        .iter()
        .filter(|c| gens.iter().map(|&a| c.values[a]).eq([0u64, 1, 2]))
        .collect();
    assert_eq!(
        matches.len(),
        1,
        "generating arcs must determine the coloring"
    );
    let c = matches[0];
    let perm = permutation_from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
    let (_, valid) = apply_permutation_unchecked(&perm, c, &d).unwrap();
    assert!(!valid, "(0 1)(2 3 4) should break the coloring");
    let group = build_group(GroupKind::Aut, 5).unwrap();
    assert_eq!(group.order(), 20);
    for g in &group.elements {
        let image = apply_map(g, c).unwrap();
        assert!(satisfies_relations(&d, 5, &image.values), "{g:?}");
    }
    assert!(is_odd_prime(5));
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 8] = [
        ("1 trefoil invariants and classes", trefoil),
        ("2 figure-eight classes mod 5", figure_eight),
        ("3 9_40 classes mod 5", nine_forty),
        ("4 class-count formulas by brute force", formula_sweep),
        ("5 composite coloring counts", composite_counts),
        ("6 Smith normal form against minor gcds", smith_oracle),
        ("7 invariance under Reidemeister variants", invariance),
        (
            "8 non-affine permutation breaks a coloring",
            negative_control,
        ),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS  criterion {name} ({ms} ms)"),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL  criterion {name} ({ms} ms): {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
