//! JSON documents for presentations and homomorphisms.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{BinoidHom, BinoidPresentation, Element, Relation, DEFAULT_COMPLETION_BUDGET};
use crate::error::{Error, Result};

/// Generator name to exponent; zero entries are omitted.
pub type ExponentMap = BTreeMap<String, i64>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RhsDocument {
    Map(ExponentMap),
    Zero(ZeroTag),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZeroTag {
    #[serde(rename = "ZERO")]
    Zero,
}

pub type ImageDocument = RhsDocument;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDocument {
    pub lhs: ExponentMap,
    pub rhs: RhsDocument,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinoidDocument {
    pub gens: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub inverses: BTreeMap<String, String>,
    #[serde(default)]
    pub relations: Vec<RelationDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomDocument {
    pub from: String,
    pub to: String,
    pub images: BTreeMap<String, ImageDocument>,
}

impl RhsDocument {
    fn to_element(&self, m: &BinoidPresentation) -> Result<Element> {
        match self {
            RhsDocument::Zero(_) => Ok(Element::Zero),
            RhsDocument::Map(e) => m.element_from_exponents(e),
        }
    }
}

impl BinoidDocument {
    pub fn to_presentation(&self) -> Result<BinoidPresentation> {
        self.to_presentation_with_budget(DEFAULT_COMPLETION_BUDGET)
    }

    pub fn to_presentation_with_budget(&self, budget: usize) -> Result<BinoidPresentation> {
        let inverses: Vec<(String, String)> =
            self.inverses.iter().map(|(a, b)| (a.clone(), b.clone())).collect();
        let skeleton = BinoidPresentation::with_budget(self.gens.clone(), inverses.clone(), Vec::new(), budget)?;
        let mut relations = Vec::new();
        for r in &self.relations {
            let a = skeleton.element_from_exponents(&r.lhs)?;
            let b = r.rhs.to_element(&skeleton)?;
            relations.extend(Relation::from_elements(&a, &b));
        }
        BinoidPresentation::with_budget(self.gens.clone(), inverses, relations, budget)
    }

    pub fn from_presentation(m: &BinoidPresentation) -> Self {
        let pairs = m.inverse_pairs();
        let primary: Vec<usize> = (0..m.num_gens())
            .filter(|&i| !pairs.iter().any(|&(_, h)| h == i))
            .collect();
        let exps = |v: &[u32]| -> ExponentMap {
            v.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (m.gens()[i].clone(), i64::from(e)))
                .collect()
        };
        BinoidDocument {
            gens: primary.iter().map(|&i| m.gens()[i].clone()).collect(),
            inverses: pairs
                .iter()
                .map(|&(g, h)| (m.gens()[g].clone(), m.gens()[h].clone()))
                .collect(),
            relations: m
                .relations()
                .iter()
                .map(|r| RelationDocument {
                    lhs: exps(&r.lhs),
                    rhs: r.rhs.as_deref().map_or(RhsDocument::Zero(ZeroTag::Zero), |v| RhsDocument::Map(exps(v))),
                })
                .collect(),
        }
    }
}

impl HomDocument {
    /// Images omitted for declared inverse generators are derived when the
    /// image of the partner is a product of declared-invertible generators.
    pub fn to_hom(&self, source: Arc<BinoidPresentation>, target: Arc<BinoidPresentation>) -> Result<BinoidHom> {
        for name in self.images.keys() {
            source.generator_index(name)?;
        }
        let mut images: Vec<Option<Element>> = source
            .gens()
            .iter()
            .map(|g| self.images.get(g).map(|d| d.to_element(&target)).transpose())
            .collect::<Result<_>>()?;
        for i in 0..images.len() {
            if images[i].is_some() {
                continue;
            }
            let derived = source
                .declared_inverse(i)
                .and_then(|j| images[j].as_ref())
                .and_then(|e| invert(&target, e));
            images[i] = Some(derived.ok_or_else(|| {
                Error::NotAHomomorphism(format!("no image given for generator {}", source.gens()[i]))
            })?);
        }
        BinoidHom::new(source, target, images.into_iter().flatten().collect())
    }
}

fn invert(m: &BinoidPresentation, e: &Element) -> Option<Element> {
    let exps = e.exponents()?;
    let mut out = vec![0u32; exps.len()];
    for (i, &k) in exps.iter().enumerate() {
        if k > 0 {
            out[m.declared_inverse(i)?] += k;
        }
    }
    Some(Element::Mono(out))
}
