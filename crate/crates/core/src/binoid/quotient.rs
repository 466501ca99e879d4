use super::{BinoidPresentation, Element, Relation};
use crate::error::{Error, Result};

impl BinoidPresentation {
    /// `M/(a)`: the ideal generated by `a` collapses to 0.
    pub fn rees_quotient(&self, a: &Element) -> Result<BinoidPresentation> {
        let Element::Mono(m) = a else {
            return Err(Error::ZeroArgument);
        };
        let mut rels = self.relations().to_vec();
        rels.push(Relation::zero(m.clone()));
        Ok(self.with_relations(rels))
    }

    /// `M/(a∼1)`: adjoins an inverse `a'` of `a`.
    pub fn unitize_quotient(&self, a: &Element) -> Result<BinoidPresentation> {
        let Element::Mono(m) = a else {
            return Err(Error::ZeroArgument);
        };
        if a.is_one() {
            return Ok(self.clone());
        }
        let support: Vec<usize> = (0..m.len()).filter(|&i| m[i] > 0).collect();
        if let [g] = support[..] {
            if m[g] == 1 {
                if self.declared_inverse(g).is_some() {
                    return Ok(self.clone());
                }
                let name = self.fresh_name(&format!("{}inv", self.gens()[g]));
                return Ok(self.extend(vec![(name, Some(g))], Vec::new()));
            }
        }
        let stem: String = self.display(a).chars().filter(|c| c.is_alphanumeric() || *c == '_').collect();
        let name = self.fresh_name(&format!("{stem}inv"));
        let n = self.num_gens() + 1;
        let mut lhs = m.clone();
        lhs.push(1);
        Ok(self.extend(vec![(name, None)], vec![Relation::binomial(lhs, vec![0; n])]))
    }

    fn fresh_name(&self, stem: &str) -> String {
        let mut name = stem.to_string();
        while self.gens().contains(&name) {
            name.push('\'');
        }
        name
    }

    /// `M_red`: every nilpotent element set to 0.
    pub fn reduce(&self) -> Result<BinoidPresentation> {
        if self.is_trivial()? {
            return Ok(self.clone());
        }
        let n = self.num_gens();
        let mut rels = self.relations().to_vec();
        for t in self.minimal_nil_supports()? {
            let m: Vec<u32> = (0..n).map(|i| (t >> i & 1) as u32).collect();
            if self.normal_form(&Element::Mono(m.clone()))?.is_zero() {
                continue;
            }
            rels.push(Relation::zero(m));
        }
        Ok(self.with_relations(rels))
    }

    /// `M^sl`: every generator made idempotent.
    pub fn booleanization(&self) -> BinoidPresentation {
        let n = self.num_gens();
        let mut rels = self.relations().to_vec();
        for g in 0..n {
            let mut sq = vec![0; n];
            sq[g] = 2;
            let mut one = vec![0; n];
            one[g] = 1;
            rels.push(Relation::binomial(sq, one));
        }
        self.with_relations(rels)
    }

    /// Number of elements, zero included, when the normal-form language is
    /// exhausted within `bound`.
    pub fn finite_size(&self, bound: u32) -> Result<Option<usize>> {
        if self.is_trivial()? {
            return Ok(Some(1));
        }
        let (forms, complete) = self.normal_forms_up_to(bound)?;
        Ok(complete.then_some(forms.len() + 1))
    }

    /// Size of the booleanization; always finite.
    pub fn booleanization_size(&self) -> Result<usize> {
        let b = self.booleanization();
        let bound = u32::try_from(b.num_gens()).unwrap_or(u32::MAX).max(1);
        Ok(b.finite_size(bound)?.expect("semilattice normal forms are squarefree"))
    }
}
