use std::collections::BTreeMap;
use std::sync::Arc;

use super::document::{index_set_key, parse_index_set, parse_restriction_key, SchemeDocument, SectionDocument};
use crate::binoid::{BinoidHom, BinoidPresentation, HomDocument, DEFAULT_COMPLETION_BUDGET};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Section {
    /// Shared id; equal ids mean equal sections.
    pub id: String,
    pub binoid: Arc<BinoidPresentation>,
}

/// Sections over the nonempty intersections of an ordered affine cover,
/// with restriction homomorphisms `O(α) → O(β)` for each `α ⊂ β`
/// differing by one index.
#[derive(Debug, Clone)]
pub struct SchemeDiagram {
    pub cover_order: Vec<usize>,
    pub sections: BTreeMap<Vec<usize>, Section>,
    pub restrictions: BTreeMap<(Vec<usize>, Vec<usize>), BinoidHom>,
}

impl SchemeDiagram {
    /// Validates closure, functoriality and commutativity.
    pub fn new(
        n: usize,
        sections: BTreeMap<Vec<usize>, Section>,
        restrictions: BTreeMap<(Vec<usize>, Vec<usize>), BinoidHom>,
    ) -> Result<Self> {
        let s = SchemeDiagram {
            cover_order: (1..=n).collect(),
            sections,
            restrictions,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn affine(m: BinoidPresentation) -> Self {
        let mut sections = BTreeMap::new();
        sections.insert(vec![1], Section { id: "M".into(), binoid: Arc::new(m) });
        SchemeDiagram {
            cover_order: vec![1],
            sections,
            restrictions: BTreeMap::new(),
        }
    }

    pub fn chart_count(&self) -> usize {
        self.cover_order.len()
    }

    pub fn section(&self, key: &[usize]) -> Option<&Section> {
        self.sections.get(key)
    }

    pub fn restriction(&self, from: &[usize], to: &[usize]) -> Option<&BinoidHom> {
        self.restrictions.get(&(from.to_vec(), to.to_vec()))
    }

    /// Index sets with `p + 1` elements, in lexicographic order.
    pub fn simplices(&self, p: usize) -> Vec<Vec<usize>> {
        self.sections.keys().filter(|k| k.len() == p + 1).cloned().collect()
    }

    pub fn dimension(&self) -> usize {
        self.sections.keys().map(Vec::len).max().unwrap_or(1) - 1
    }

    /// Faces `∂_i σ` in order, `σ` with its `i`-th index removed.
    pub fn faces(sigma: &[usize]) -> Vec<Vec<usize>> {
        (0..sigma.len())
            .map(|i| sigma.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect())
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let n = self.chart_count();
        for i in 1..=n {
            if !self.sections.contains_key(&vec![i]) {
                return Err(Error::MissingIntersection(format!("chart {i} has no section")));
            }
        }
        for key in self.sections.keys() {
            if key.iter().any(|&i| i == 0 || i > n) {
                return Err(Error::ParseError(format!("index set {} mentions an unknown chart", index_set_key(key))));
            }
            if key.len() < 2 {
                continue;
            }
            for face in Self::faces(key) {
                if !self.sections.contains_key(&face) {
                    return Err(Error::MissingIntersection(format!(
                        "{} is declared but {} is not",
                        index_set_key(key),
                        index_set_key(&face)
                    )));
                }
                if !self.restrictions.contains_key(&(face.clone(), key.clone())) {
                    return Err(Error::MissingIntersection(format!(
                        "no restriction {}<{}",
                        index_set_key(&face),
                        index_set_key(key)
                    )));
                }
            }
        }
        for ((a, b), f) in &self.restrictions {
            let (Some(sa), Some(sb)) = (self.sections.get(a), self.sections.get(b)) else {
                return Err(Error::ParseError(format!(
                    "restriction {}<{} between undeclared sets",
                    index_set_key(a),
                    index_set_key(b)
                )));
            };
            if b.len() != a.len() + 1 || !a.iter().all(|i| b.contains(i)) {
                return Err(Error::ParseError(format!(
                    "restriction {}<{} is not a covering relation",
                    index_set_key(a),
                    index_set_key(b)
                )));
            }
            if !same_binoid(&f.source, &sa.binoid) || !same_binoid(&f.target, &sb.binoid) {
                return Err(Error::NonFunctorial(format!(
                    "restriction {}<{} has the wrong source or target",
                    index_set_key(a),
                    index_set_key(b)
                )));
            }
        }
        // squares α ⊂ β, β' ⊂ γ
        for gamma in self.sections.keys().filter(|k| k.len() >= 3) {
            for (i, &x) in gamma.iter().enumerate() {
                for &y in &gamma[i + 1..] {
                    let alpha: Vec<usize> = gamma.iter().copied().filter(|&v| v != x && v != y).collect();
                    let beta1: Vec<usize> = gamma.iter().copied().filter(|&v| v != x).collect();
                    let beta2: Vec<usize> = gamma.iter().copied().filter(|&v| v != y).collect();
                    let path = |beta: &Vec<usize>| -> Result<BinoidHom> {
                        self.restrictions[&(alpha.clone(), beta.clone())].then(&self.restrictions[&(beta.clone(), gamma.clone())])
                    };
                    if !path(&beta1)?.agrees_with(&path(&beta2)?) {
                        return Err(Error::NonFunctorial(format!(
                            "restrictions {} -> {} and {} -> {} into {} differ",
                            index_set_key(&alpha),
                            index_set_key(&beta1),
                            index_set_key(&alpha),
                            index_set_key(&beta2),
                            index_set_key(gamma)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

fn same_binoid(a: &Arc<BinoidPresentation>, b: &Arc<BinoidPresentation>) -> bool {
    Arc::ptr_eq(a, b) || a.gens() == b.gens() && a.relations() == b.relations()
}

pub fn load_scheme(doc: &SchemeDocument) -> Result<SchemeDiagram> {
    load_scheme_with_budget(doc, DEFAULT_COMPLETION_BUDGET)
}

pub fn load_scheme_with_budget(doc: &SchemeDocument, budget: usize) -> Result<SchemeDiagram> {
    let mut shared: BTreeMap<String, Arc<BinoidPresentation>> = BTreeMap::new();
    for (id, b) in &doc.binoids {
        shared.insert(id.clone(), Arc::new(b.to_presentation_with_budget(budget)?));
    }
    let mut sections = BTreeMap::new();
    let entries = doc
        .charts
        .iter()
        .map(|e| (true, e))
        .chain(doc.intersections.iter().map(|e| (false, e)));
    for (is_chart, (key, sd)) in entries {
        let set = parse_index_set(key)?;
        if is_chart != (set.len() == 1) {
            return Err(Error::ParseError(format!("`{key}` is filed under the wrong heading")));
        }
        let section = match sd {
            SectionDocument::Id(id) => Section {
                id: id.clone(),
                binoid: shared
                    .get(id)
                    .cloned()
                    .ok_or_else(|| Error::ParseError(format!("unknown binoid id `{id}`")))?,
            },
            SectionDocument::Inline(b) => Section {
                id: format!("@{}", index_set_key(&set)),
                binoid: Arc::new(b.to_presentation_with_budget(budget)?),
            },
        };
        if sections.insert(set, section).is_some() {
            return Err(Error::ParseError(format!("index set `{key}` declared twice")));
        }
    }
    let n = doc.charts.len();
    let mut restrictions = BTreeMap::new();
    for (key, rd) in &doc.restrictions {
        let (a, b) = parse_restriction_key(key)?;
        let (Some(sa), Some(sb)) = (sections.get(&a), sections.get(&b)) else {
            return Err(Error::ParseError(format!("restriction `{key}` between undeclared sets")));
        };
        for (given, expected) in [(&rd.from, &sa.id), (&rd.to, &sb.id)] {
            if given.as_ref().is_some_and(|g| g != expected) {
                return Err(Error::ParseError(format!("restriction `{key}` names the wrong binoid")));
            }
        }
        let hd = HomDocument {
            from: sa.id.clone(),
            to: sb.id.clone(),
            images: rd.images.clone(),
        };
        let f = hd
            .to_hom(sa.binoid.clone(), sb.binoid.clone())
            .map_err(|e| Error::NonFunctorial(format!("{key}: {e}")))?;
        restrictions.insert((a, b), f);
    }
    for b in sections.keys().filter(|k| k.len() >= 2) {
        for a in SchemeDiagram::faces(b) {
            if restrictions.contains_key(&(a.clone(), b.clone())) {
                continue;
            }
            if let (Some(sa), Some(sb)) = (sections.get(&a), sections.get(b)) {
                if sa.id == sb.id {
                    restrictions.insert((a, b.clone()), BinoidHom::identity(sa.binoid.clone()));
                }
            }
        }
    }
    SchemeDiagram::new(n, sections, restrictions)
}
