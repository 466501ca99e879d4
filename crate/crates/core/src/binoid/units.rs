//! The unit group `M^×`.
//!
//! A product is a unit only when every factor is, so the units are generated
//! by the generators outside every prime, and any derivation between two unit
//! words only passes through unit words. Hence `M^× = ℤ^U / L` with `L`
//! spanned by the relations whose two sides are supported on unit generators.

use num_bigint::BigInt;

use super::{BinoidPresentation, Element};
use crate::error::{Error, Result};
use crate::linalg::{AbelianGroupData, AbelianQuotient};

#[derive(Debug, Clone)]
pub struct UnitGroup {
    pub group: AbelianGroupData,
    /// Generator indices of the unit generators, in order.
    pub generators: Vec<usize>,
    pub quotient: AbelianQuotient,
}

impl UnitGroup {
    /// Exponents of `e` over the unit generators, if `e` is supported there.
    fn unit_exponents(&self, e: &Element) -> Option<Vec<i64>> {
        let m = e.exponents()?;
        let on_units = (0..m.len()).all(|i| m[i] == 0 || self.generators.contains(&i));
        on_units.then(|| self.generators.iter().map(|&g| i64::from(m[g])).collect())
    }

    /// Smith coordinates of a unit; `e` need not be in normal form.
    pub fn coordinates(&self, e: &Element) -> Result<Vec<BigInt>> {
        let x = self
            .unit_exponents(e)
            .ok_or_else(|| Error::UnitExpressionFailure(format!("{e:?} is not supported on unit generators")))?;
        Ok(self.quotient.coordinates(&x))
    }

    /// Parities of a unit in the sign basis (free and even-order coordinates).
    pub fn sign_vector(&self, e: &Element) -> Result<Vec<bool>> {
        let x = self
            .unit_exponents(e)
            .ok_or_else(|| Error::UnitExpressionFailure(format!("{e:?} is not supported on unit generators")))?;
        Ok(self.quotient.sign_vector(&x))
    }

    pub fn sign_rank(&self) -> usize {
        self.quotient.sign_basis().len()
    }

    /// Integer exponents over the unit generators of the `i`-th sign basis
    /// element.
    pub fn sign_basis_representative(&self, i: usize) -> Vec<i64> {
        let idx = self.quotient.sign_basis()[i];
        self.quotient.basis_representative(idx)
    }
}

impl BinoidPresentation {
    /// The unit group. The computation is exact; `degree_bound` is accepted
    /// for interface symmetry with the other searches.
    pub fn unit_group(&self, _degree_bound: u32) -> Result<UnitGroup> {
        self.rewrite_system()?;
        let generators = self.unit_generators()?;
        let mask: u64 = generators.iter().fold(0, |a, &g| a | 1 << g);
        let in_units = |m: &[u32]| (0..m.len()).all(|i| m[i] == 0 || mask >> i & 1 == 1);
        let rows: Vec<Vec<i64>> = self
            .all_relations()
            .iter()
            .filter_map(|r| {
                let rhs = r.rhs.as_ref()?;
                (in_units(&r.lhs) && in_units(rhs)).then(|| {
                    generators
                        .iter()
                        .map(|&g| i64::from(r.lhs[g]) - i64::from(rhs[g]))
                        .collect()
                })
            })
            .collect();
        let quotient = AbelianQuotient::new(generators.len(), &rows);
        Ok(UnitGroup {
            group: quotient.group(),
            generators,
            quotient,
        })
    }

    /// Display names of the sign basis of the unit group.
    pub fn sign_basis_names(&self, units: &UnitGroup) -> Vec<String> {
        (0..units.sign_rank())
            .map(|i| {
                let rep = units.sign_basis_representative(i);
                let mut m = vec![0i64; self.num_gens()];
                for (k, &g) in units.generators.iter().enumerate() {
                    m[g] = rep[k];
                }
                let parts: Vec<String> = (0..m.len())
                    .filter(|&g| m[g] != 0)
                    .map(|g| match m[g] {
                        1 => self.gens()[g].clone(),
                        e => format!("{}^{}", self.gens()[g], e),
                    })
                    .collect();
                if parts.is_empty() {
                    "1".into()
                } else {
                    parts.join("*")
                }
            })
            .collect()
    }
}
