//! Smith normal form over the integers with unimodular transforms.
//!
//! Pivoting picks the nonzero entry of least absolute value in the active
//! submatrix (ties broken by lowest row, then column), so the result is a
//! deterministic function of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntegerMatrix;

/// `s = r * m * c` with `s` diagonal and `r`, `c` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub s: IntegerMatrix,
    pub r: IntegerMatrix,
    pub c: IntegerMatrix,
    /// Diagonal of `s`, `min(rows, cols)` entries: positive factors in
    /// divisibility order followed by zeros.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rows(&self) -> usize {
        self.s.rows()
    }

    pub fn cols(&self) -> usize {
        self.s.cols()
    }

    /// One factor per column of the input: the invariant factors padded with
    /// zeros when there are more columns than rows. Column `j` of `c` is the
    /// unknown whose coefficient is `column_factors()[j]`.
    pub fn column_factors(&self) -> Vec<BigInt> {
        let mut f = self.invariant_factors.clone();
        f.resize(self.cols(), BigInt::zero());
        f
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_zero())
            .count()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut r = IntegerMatrix::identity(rows);
    let mut c = IntegerMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        while let Some((pi, pj)) = find_pivot(&a, t) {
            a.swap_rows(t, pi);
            r.swap_rows(t, pi);
            a.swap_cols(t, pj);
            c.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let (q, rem) = a[(i, t)].div_rem(&a[(t, t)]);
                let q = -q;
                a.add_row_multiple(i, t, &q);
                r.add_row_multiple(i, t, &q);
                clean &= rem.is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let (q, rem) = a[(t, j)].div_rem(&a[(t, t)]);
                let q = -q;
                a.add_col_multiple(j, t, &q);
                c.add_col_multiple(j, t, &q);
                clean &= rem.is_zero();
            }
            if !clean {
                continue;
            }

            // pivot must divide the whole remaining block
            if let Some(i) = first_nondivisible_row(&a, t) {
                let one = BigInt::one();
                a.add_row_multiple(t, i, &one);
                r.add_row_multiple(t, i, &one);
                continue;
            }
            if a[(t, t)].is_negative() {
                a.negate_row(t);
                r.negate_row(t);
            }
            // pivot settled
            break;
        }
    }

    let invariant_factors = (0..rows.min(cols)).map(|i| a[(i, i)].clone()).collect();
    SmithDecomposition {
        s: a,
        r,
        c,
        invariant_factors,
    }
}

fn find_pivot(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                best = Some((i, j, abs));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn first_nondivisible_row(a: &IntegerMatrix, t: usize) -> Option<usize> {
    let p = &a[(t, t)];
    (t + 1..a.rows()).find(|&i| (t + 1..a.cols()).any(|j| !a[(i, j)].is_multiple_of(p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[&[i64]]) -> Vec<i64> {
        let m = IntegerMatrix::from_rows(rows);
        smith_normal_form(&m)
            .invariant_factors
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    fn check(m: &IntegerMatrix) -> SmithDecomposition {
        let sd = smith_normal_form(m);
        assert_eq!(&(&sd.r * m) * &sd.c, sd.s);
        assert!(sd.r.determinant().unwrap().abs().is_one());
        assert!(sd.c.determinant().unwrap().abs().is_one());
        sd
    }

    #[test]
    fn trefoil_matrix() {
        assert_eq!(
            factors(&[&[1, 1, -2], &[-2, 1, 1], &[1, -2, 1]]),
            vec![1, 3, 0]
        );
        check(&IntegerMatrix::from_rows(&[
            [1, 1, -2],
            [-2, 1, 1],
            [1, -2, 1],
        ]));
    }

    #[test]
    fn identity_is_fixed() {
        let id = IntegerMatrix::identity(2);
        let sd = check(&id);
        assert_eq!(sd.r, id);
        assert_eq!(sd.c, id);
        assert_eq!(factors(&[&[1, 0], &[0, 1]]), vec![1, 1]);
    }

    #[test]
    fn already_diagonal() {
        assert_eq!(factors(&[&[2, 0], &[0, 4]]), vec![2, 4]);
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) is not in normal form: gcd 1, det 6
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[&[6, 4], &[2, 2]]), vec![2, 2]);
    }

    #[test]
    fn non_square_and_empty() {
        assert_eq!(factors(&[&[2, 4, 6]]), vec![2]);
        assert_eq!(factors(&[&[2], &[4], &[6]]), vec![2]);
        let empty = IntegerMatrix::zeros(0, 0);
        let sd = smith_normal_form(&empty);
        assert!(sd.invariant_factors.is_empty());
        let wide = IntegerMatrix::zeros(0, 1);
        let sd = smith_normal_form(&wide);
        assert_eq!(sd.column_factors(), vec![BigInt::zero()]);
        assert_eq!(sd.c, IntegerMatrix::identity(1));
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(factors(&[&[0, 0], &[0, 0]]), vec![0, 0]);
        assert_eq!(factors(&[&[0]]), vec![0]);
    }

    #[test]
    fn negative_pivot_normalized() {
        assert_eq!(factors(&[&[-3]]), vec![3]);
        check(&IntegerMatrix::from_rows(&[[-3, 0], [0, -6]]));
    }
}
