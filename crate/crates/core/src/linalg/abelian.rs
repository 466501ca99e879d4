use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::IntegerMatrix;
use super::snf::smith_normal_form;

/// A finitely generated abelian group `ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k`
/// with `d₁ | d₂ | … | d_k` and every `dᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroupData {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroupData {
    pub fn trivial() -> Self {
        AbelianGroupData {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupData {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup (1 when torsion-free).
    pub fn torsion_order(&self) -> u64 {
        self.torsion.iter().product()
    }

    /// Number of `C₂` factors of `G ⊗ ℤ/2`: free rank plus even invariant factors.
    pub fn mod_two_rank(&self) -> usize {
        self.rank + self.torsion.iter().filter(|d| *d % 2 == 0).count()
    }

    pub fn is_divisibility_chain(&self) -> bool {
        self.torsion.iter().all(|d| *d >= 2)
            && self.torsion.windows(2).all(|w| w[1] % w[0] == 0)
    }
}

impl fmt::Display for AbelianGroupData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// The quotient `ℤ^n / L` in Smith coordinates.
///
/// A row vector `x ∈ ℤ^n` has coordinates `x·V`; coordinate `i` lives in
/// `ℤ/moduli[i]` (modulus 0 meaning `ℤ`). Coordinates with modulus 1 are
/// trivial and dropped from [`AbelianQuotient::group`].
#[derive(Debug, Clone)]
pub struct AbelianQuotient {
    pub moduli: Vec<BigInt>,
    v: IntegerMatrix,
    v_inv: IntegerMatrix,
}

impl AbelianQuotient {
    /// `relations` are the rows spanning `L`, each of length `n`.
    pub fn new(n: usize, relations: &[Vec<i64>]) -> Self {
        let a = IntegerMatrix::from_rows_with_cols(relations, n);
        let dec = smith_normal_form(&a);
        let factors = dec.invariant_factors();
        let moduli = (0..n)
            .map(|i| factors.get(i).cloned().unwrap_or_else(BigInt::zero))
            .collect();
        AbelianQuotient {
            moduli,
            v: dec.v,
            v_inv: dec.v_inv,
        }
    }

    pub fn group(&self) -> AbelianGroupData {
        let mut rank = 0;
        let mut torsion = Vec::new();
        for d in &self.moduli {
            if d.is_zero() {
                rank += 1;
            } else if !d.is_one() {
                torsion.push(u64::try_from(d).expect("invariant factor exceeds u64"));
            }
        }
        AbelianGroupData { rank, torsion }
    }

    /// Smith coordinates of `x`, reduced modulo each nonzero modulus.
    pub fn coordinates(&self, x: &[i64]) -> Vec<BigInt> {
        let n = self.moduli.len();
        assert_eq!(x.len(), n);
        (0..n)
            .map(|j| {
                let mut s = BigInt::zero();
                for (i, xi) in x.iter().enumerate() {
                    if *xi != 0 {
                        s += &self.v[(i, j)] * BigInt::from(*xi);
                    }
                }
                if self.moduli[j].is_zero() {
                    s
                } else {
                    s.mod_floor(&self.moduli[j])
                }
            })
            .collect()
    }

    /// Indices of coordinates contributing a `C₂` factor after `⊗ ℤ/2`
    /// (free coordinates and even torsion), in order.
    pub fn sign_basis(&self) -> Vec<usize> {
        let two = BigInt::from(2);
        (0..self.moduli.len())
            .filter(|&i| self.moduli[i].is_zero() || self.moduli[i].is_multiple_of(&two))
            .collect()
    }

    /// Parities of the sign-basis coordinates of `x`.
    pub fn sign_vector(&self, x: &[i64]) -> Vec<bool> {
        let c = self.coordinates(x);
        let two = BigInt::from(2);
        self.sign_basis()
            .into_iter()
            .map(|i| !c[i].is_multiple_of(&two))
            .collect()
    }

    /// An integer vector whose Smith coordinates are the `i`-th unit vector.
    pub fn basis_representative(&self, i: usize) -> Vec<i64> {
        self.v_inv
            .row(i)
            .iter()
            .map(|v| i64::try_from(v).expect("basis representative exceeds i64"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_free_parts() {
        // <x | x^4>  -> Z/4
        let q = AbelianQuotient::new(1, &[vec![4]]);
        assert_eq!(q.group(), AbelianGroupData { rank: 0, torsion: vec![4] });
        assert_eq!(q.group().mod_two_rank(), 1);
        // <x, y | x + y>  -> Z
        let q = AbelianQuotient::new(2, &[vec![1, 1]]);
        assert_eq!(q.group(), AbelianGroupData::free(1));
        assert_eq!(q.sign_basis().len(), 1);
        // x and y both map to the generator up to sign; both are odd
        assert_eq!(q.sign_vector(&[1, 0]), vec![true]);
        assert_eq!(q.sign_vector(&[0, 1]), vec![true]);
        assert_eq!(q.sign_vector(&[1, 1]), vec![false]);
    }

    #[test]
    fn representatives_hit_unit_coordinates() {
        let q = AbelianQuotient::new(3, &[vec![1, 1, -2], vec![0, 2, 4]]);
        for i in 0..3 {
            let rep = q.basis_representative(i);
            let c = q.coordinates(&rep);
            for (j, cj) in c.iter().enumerate() {
                let expect = if i == j { 1 } else { 0 };
                let m = &q.moduli[j];
                let e = if m.is_zero() {
                    BigInt::from(expect)
                } else {
                    BigInt::from(expect).mod_floor(m)
                };
                assert_eq!(*cj, e, "coordinate {j} of representative {i}");
            }
        }
    }

    #[test]
    fn mod_two_rank_counts_even_factors() {
        let g = AbelianGroupData { rank: 2, torsion: vec![2, 3, 4] };
        assert_eq!(g.mod_two_rank(), 4);
        let g = AbelianGroupData { rank: 0, torsion: vec![3] };
        assert_eq!(g.mod_two_rank(), 0);
        assert_eq!(AbelianGroupData::free(1).mod_two_rank(), 1);
    }
}
