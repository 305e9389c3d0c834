//! Invariant factors from determinantal divisors: `d_1 ... d_k` equals the gcd
//! of all `k x k` minors. Exponential in the matrix size; used as an
//! independent check on [`smith_normal_form`](super::smith_normal_form).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;
use crate::error::{Error, Result};

pub const MAX_ORACLE_MIN_DIM: usize = 6;
pub const MAX_ORACLE_MAX_DIM: usize = 12;

pub fn minor_gcd_factors(m: &IntegerMatrix) -> Result<Vec<BigInt>> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows.min(cols) > MAX_ORACLE_MIN_DIM || rows.max(cols) > MAX_ORACLE_MAX_DIM {
        return Err(Error::OracleTooLarge { rows, cols });
    }
    let mut factors = Vec::with_capacity(rows.min(cols));
    let mut prev = BigInt::from(1);
    for k in 1..=rows.min(cols) {
        let g = determinantal_divisor(m, k)?;
        if g.is_zero() {
            factors.resize(rows.min(cols), BigInt::zero());
            break;
        }
        factors.push(&g / &prev);
        prev = g;
    }
    Ok(factors)
}

/// gcd of all `k x k` minors.
pub fn determinantal_divisor(m: &IntegerMatrix, k: usize) -> Result<BigInt> {
    let mut g = BigInt::zero();
    for rs in combinations(m.rows(), k) {
        for cs in combinations(m.cols(), k) {
            let d = m.select(&rs, &cs).determinant()?;
            g = g.gcd(&d);
        }
    }
    Ok(g.abs())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
