//! Solving `M x = 0 (mod m)` through a Smith decomposition, and plain
//! Gaussian elimination over `Z/p`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{IntegerMatrix, SmithDecomposition};
use crate::error::{Error, Result};

/// Reduces `x` into `0..m`.
pub fn residue(x: &BigInt, m: u64) -> u64 {
    x.mod_floor(&BigInt::from(m))
        .to_u64()
        .expect("residue below modulus fits u64")
}

/// `gcd(d, m)`, with `gcd(0, m) = m`.
pub fn gcd_with_modulus(d: &BigInt, m: u64) -> u64 {
    residue(d, m).gcd(&m)
}

/// Solution set of `d * y = 0 (mod m)` for one diagonal position:
/// the multiples of `step`, `order` of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CyclicFactor {
    pub step: u64,
    pub order: u64,
}

/// All solutions of `M x = 0 (mod m)` as `x = C y` with each `y_j` ranging
/// over its cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModularSolution {
    pub modulus: u64,
    pub factors: Vec<CyclicFactor>,
    /// `c` reduced mod `m`, row-major, `cols x cols`.
    pub transform: Vec<Vec<u64>>,
}

pub fn solve_mod(sd: &SmithDecomposition, modulus: u64) -> Result<ModularSolution> {
    if modulus < 2 {
        return Err(Error::BadModulus(modulus, 2));
    }
    let factors = sd
        .column_factors()
        .iter()
        .map(|d| {
            let order = gcd_with_modulus(d, modulus);
            CyclicFactor {
                step: modulus / order,
                order,
            }
        })
        .collect();
    let n = sd.cols();
    let transform = (0..n)
        .map(|i| (0..n).map(|j| residue(&sd.c[(i, j)], modulus)).collect())
        .collect();
    Ok(ModularSolution {
        modulus,
        factors,
        transform,
    })
}

impl ModularSolution {
    pub fn count(&self) -> BigUint {
        self.factors
            .iter()
            .map(|f| BigUint::from(f.order))
            .product()
    }

    /// Positions whose `y` is not forced to zero.
    pub fn free_positions(&self) -> Vec<usize> {
        (0..self.factors.len())
            .filter(|&j| self.factors[j].order > 1)
            .collect()
    }

    /// Decodes the `index`-th solution; `index` runs over `0..count()` in
    /// lexicographic order of the free part of `y` (first column most
    /// significant).
    pub fn solution(&self, mut index: u128) -> Vec<u64> {
        let n = self.factors.len();
        let mut y = vec![0u64; n];
        for j in (0..n).rev() {
            let f = self.factors[j];
            let t = (index % f.order as u128) as u64;
            index /= f.order as u128;
            y[j] = t * f.step;
        }
        self.apply_transform(&y)
    }

    pub fn apply_transform(&self, y: &[u64]) -> Vec<u64> {
        let m = self.modulus as u128;
        self.transform
            .iter()
            .map(|row| {
                let s = row
                    .iter()
                    .zip(y)
                    .fold(0u128, |acc, (&c, &v)| (acc + (c as u128) * (v as u128)) % m);
                s as u64
            })
            .collect()
    }
}

/// Reduced row echelon form over `Z/p`. Returns the rank and pivot columns.
pub fn row_reduce_mod_p(m: &IntegerMatrix, p: u64) -> (usize, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| (0..cols).map(|j| residue(&m[(i, j)], p)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = mod_inverse(a[r][c], p).expect("nonzero residue mod prime is invertible");
        for v in a[r].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (r, pivots)
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i128) as u64)
}
