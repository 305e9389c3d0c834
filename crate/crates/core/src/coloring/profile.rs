//! Determinant, nullity and coloring counts read off the Smith form of the
//! coloring matrix.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::matrix::coloring_matrix;
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::linalg::{
    gcd_with_modulus, json_int, residue, row_reduce_mod_p, smith_normal_form, IntegerMatrix,
    SmithDecomposition,
};
use crate::primes::is_odd_prime;

/// Smith decomposition of the diagram's coloring matrix. The crossing-free
/// unknot is treated as a single free arc with no relations (a `0 x 1`
/// matrix), which gives determinant 1 and nullity 1.
pub fn coloring_smith(d: &PlanarDiagram) -> SmithDecomposition {
    match coloring_matrix(d) {
        Ok(cm) => smith_normal_form(&cm.matrix),
        Err(_) => smith_normal_form(&IntegerMatrix::zeros(0, 1)),
    }
}

/// Product of the nonzero factors when exactly one factor vanishes, zero
/// when several do.
pub fn link_determinant(sd: &SmithDecomposition) -> Result<BigInt> {
    let factors = sd.column_factors();
    let zeros = factors.iter().filter(|d| d.is_zero()).count();
    match zeros {
        0 => Err(Error::NotColoringMatrix),
        1 => Ok(factors.iter().filter(|d| !d.is_zero()).product()),
        _ => Ok(BigInt::zero()),
    }
}

/// Number of diagonal entries divisible by the odd prime `p`.
pub fn p_nullity(sd: &SmithDecomposition, p: u64) -> Result<u32> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(zeros_mod(sd, p))
}

fn zeros_mod(sd: &SmithDecomposition, m: u64) -> u32 {
    sd.column_factors()
        .iter()
        .filter(|d| residue(d, m) == 0)
        .count() as u32
}

/// `m^{n_Z} * prod gcd(z, m)` over the factors `z` that are zero divisors
/// mod `m`.
pub fn count_colorings(sd: &SmithDecomposition, m: u64) -> Result<BigUint> {
    if m < 2 {
        return Err(Error::BadModulus(m, 2));
    }
    let n_zero = zeros_mod(sd, m);
    let mut count = BigUint::from(m).pow(n_zero);
    for z in sd.column_factors() {
        let r = residue(&z, m);
        if r != 0 && r.gcd(&m) > 1 {
            count *= r.gcd(&m);
        }
    }
    Ok(count)
}

/// Arcs whose colors determine every `p`-coloring: the non-pivot columns of
/// the coloring matrix reduced mod `p`.
pub fn generating_arcs(d: &PlanarDiagram, p: u64) -> Result<Vec<usize>> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let Ok(cm) = coloring_matrix(d) else {
        return Ok(vec![0]);
    };
    let (_, pivots) = row_reduce_mod_p(&cm.matrix, p);
    Ok((0..cm.matrix.cols())
        .filter(|c| !pivots.contains(c))
        .collect())
}

/// Summary of the coloring invariants of one diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringProfile {
    pub crossings: usize,
    pub arcs: usize,
    #[serde(serialize_with = "json_int::serialize")]
    pub determinant: BigInt,
    #[serde(serialize_with = "json_int::serialize_vec")]
    pub invariant_factors: Vec<BigInt>,
}

impl ColoringProfile {
    pub fn new(d: &PlanarDiagram) -> Result<Self> {
        let sd = coloring_smith(d);
        Ok(ColoringProfile {
            crossings: d.crossing_count(),
            arcs: d.arc_count(),
            determinant: link_determinant(&sd)?,
            invariant_factors: sd.column_factors(),
        })
    }

    /// Diagonal entries congruent to zero mod `m`.
    pub fn nullity(&self, m: u64) -> u32 {
        self.invariant_factors
            .iter()
            .filter(|d| residue(d, m) == 0)
            .count() as u32
    }

    pub fn count(&self, m: u64) -> BigUint {
        self.invariant_factors
            .iter()
            .map(|d| BigUint::from(gcd_with_modulus(d, m)))
            .fold(BigUint::one(), |a, b| a * b)
    }

    /// Invariant factors other than 1.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}
