//! Nonnegative solutions of homogeneous integer equations.
//!
//! `positive_support` answers: for which variables `g` is there `δ ≥ 0`
//! with `A·δ = 0` and `δ_g > 0`? The kernel is parametrized through the Smith
//! normal form and the resulting inequality system is decided by
//! Fourier-Motzkin elimination in exact integer arithmetic.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{smith_normal_form, IntegerMatrix};

/// `a·t ≥ b`
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Inequality {
    a: Vec<BigInt>,
    b: BigInt,
}

impl Inequality {
    fn normalized(mut self) -> Self {
        let mut g = self.b.abs();
        for x in &self.a {
            g = g.gcd(x);
        }
        if !g.is_zero() && !g.is_one() {
            for x in &mut self.a {
                *x /= &g;
            }
            self.b /= &g;
        }
        self
    }
}

/// Feasibility of a system of inequalities over the rationals.
fn feasible(mut rows: Vec<Inequality>, vars: usize) -> bool {
    for j in 0..vars {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut next = BTreeSet::new();
        for r in rows {
            if r.a[j].is_positive() {
                pos.push(r);
            } else if r.a[j].is_negative() {
                neg.push(r);
            } else {
                next.insert(r);
            }
        }
        for p in &pos {
            for q in &neg {
                let cp = -&q.a[j];
                let cq = p.a[j].clone();
                let a: Vec<BigInt> = p.a.iter().zip(&q.a).map(|(x, y)| x * &cp + y * &cq).collect();
                let b = &p.b * &cp + &q.b * &cq;
                next.insert(Inequality { a, b }.normalized());
            }
        }
        rows = Vec::with_capacity(next.len());
        for r in next {
            if r.a.iter().all(Zero::is_zero) {
                if r.b.is_positive() {
                    return false;
                }
            } else {
                rows.push(r);
            }
        }
    }
    rows.iter().all(|r| !r.b.is_positive())
}

/// Which variables can be positive in some nonnegative kernel vector.
pub(crate) fn positive_support(vars: usize, equations: &[Vec<i64>]) -> Vec<bool> {
    if vars == 0 {
        return Vec::new();
    }
    let a = IntegerMatrix::from_rows_with_cols(equations, vars);
    let dec = smith_normal_form(&a);
    let rank = dec.rank();
    let k = vars - rank;
    if k == 0 {
        return vec![false; vars];
    }
    // kernel basis: columns rank.. of V
    let basis_row = |i: usize| -> Vec<BigInt> { (rank..vars).map(|j| dec.v[(i, j)].clone()).collect() };
    let base: Vec<Inequality> = (0..vars)
        .map(|i| Inequality { a: basis_row(i), b: BigInt::zero() }.normalized())
        .collect();
    (0..vars)
        .map(|g| {
            let mut rows = base.clone();
            rows.push(Inequality { a: basis_row(g), b: BigInt::one() });
            feasible(rows, k)
        })
        .collect()
}
