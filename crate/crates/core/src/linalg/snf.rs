//! Smith normal form over the integers.
//!
//! Elimination always pivots on the entry of least nonzero absolute value in
//! the remaining block (ties broken by row, then column), which keeps entries
//! small on the desk-sized matrices this crate produces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntegerMatrix;

/// `D = U·A·V` with `U`, `V` unimodular and `D` diagonal, `d₁ | d₂ | …`.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
    /// Inverse of `v`, maintained alongside it.
    pub v_inv: IntegerMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .take_while(|v| !v.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn min_pivot(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[(bi, bj)].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);
    let mut v_inv = IntegerMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = min_pivot(&d, t) else {
                return SmithDecomposition { d, u, v, v_inv };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let mut dirty = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                let neg = -q;
                d.add_row_multiple(i, t, &neg);
                u.add_row_multiple(i, t, &neg);
                dirty |= !d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                let neg = -&q;
                d.add_col_multiple(j, t, &neg);
                v.add_col_multiple(j, t, &neg);
                // inverse of col_j += k col_t is row_t -= k row_j
                v_inv.add_row_multiple(t, j, &q);
                dirty |= !d[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let p = d[(t, t)].clone();
            let offending = (t + 1..m)
                .find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match offending {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { d, u, v, v_inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(dec: &SmithDecomposition) -> Vec<i64> {
        dec.invariant_factors()
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntegerMatrix::identity(2);
        let dec = smith_normal_form(&a);
        assert_eq!(dec.d, a);
    }

    #[test]
    fn two_by_two_example() {
        // det = -8, gcd of entries = 2, so D = diag(2, 4)
        let a = IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let dec = smith_normal_form(&a);
        assert_eq!(diag(&dec), vec![2, 4]);
        assert_eq!(dec.u.mul(&a).mul(&dec.v), dec.d);
        assert_eq!(dec.v.mul(&dec.v_inv), IntegerMatrix::identity(2));
    }

    #[test]
    fn two_chart_boundary_has_unit_invariant_factors() {
        let a = IntegerMatrix::from_rows(&[
            vec![1, 1, 0, 0],
            vec![-1, -1, 1, 1],
            vec![0, 0, -1, -1],
        ]);
        let dec = smith_normal_form(&a);
        assert_eq!(diag(&dec), vec![1, 1]);
        assert_eq!(dec.u.mul(&a).mul(&dec.v), dec.d);
    }

    #[test]
    fn empty_and_zero_matrices() {
        let z = IntegerMatrix::zeros(3, 2);
        let dec = smith_normal_form(&z);
        assert!(dec.d.is_zero());
        assert_eq!(dec.rank(), 0);
        let e = IntegerMatrix::zeros(0, 4);
        assert_eq!(smith_normal_form(&e).v, IntegerMatrix::identity(4));
    }
}
