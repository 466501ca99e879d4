use std::collections::BTreeMap;

use log::debug;
use serde::Serialize;

use super::diagram::SchemeDiagram;
use super::document::index_set_key;
use crate::error::{Error, Result};
use crate::groupoid::{
    check_colimit_conditions, skeletonize, ConditionReport, GroupPresentationResult, GroupoidFunctor,
    GroupoidPresentation, PosetDiagram,
};
use crate::pi0::{induced_pi0_map_between, pi0_affine, Pi0Map, Pi0Point, Pi0Set};

/// The realization of a scheme: `π₀` of every section, the induced maps,
/// and the same data as a diagram of discrete groupoids.
#[derive(Debug, Clone)]
pub struct Realization {
    /// Index set of each diagram node, charts first.
    pub keys: Vec<Vec<usize>>,
    pub pi0: Vec<Pi0Set>,
    /// `(larger, smaller)` node pair to the map between their point sets.
    pub maps: BTreeMap<(usize, usize), Pi0Map>,
    pub diagram: PosetDiagram,
}

impl Realization {
    pub fn node(&self, key: &[usize]) -> Option<usize> {
        self.keys.iter().position(|k| k == key)
    }

    pub fn point_counts(&self) -> Vec<(String, usize)> {
        self.keys
            .iter()
            .zip(&self.pi0)
            .map(|(k, p)| (index_set_key(k), p.point_count()))
            .collect()
    }
}

/// `+x2,-z2` style label; `pt` for a block without signs.
pub fn point_label(set: &Pi0Set, p: &Pi0Point) -> String {
    let b = &set.blocks[p.0];
    let signs = if b.n == 0 {
        "pt".to_string()
    } else {
        b.basis
            .iter()
            .zip(&p.1)
            .map(|(g, &s)| format!("{}{g}", if s { '-' } else { '+' }))
            .collect::<Vec<_>>()
            .join(",")
    };
    if set.blocks.len() == 1 {
        signs
    } else {
        format!("{}|{signs}", b.block.label)
    }
}

pub fn realization_functor(s: &SchemeDiagram, degree_bound: u32) -> Result<Realization> {
    let mut keys: Vec<Vec<usize>> = s.sections.keys().cloned().collect();
    keys.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut by_id: BTreeMap<&str, Pi0Set> = BTreeMap::new();
    let mut pi0 = Vec::with_capacity(keys.len());
    for k in &keys {
        let sec = &s.sections[k];
        if !by_id.contains_key(sec.id.as_str()) {
            by_id.insert(&sec.id, pi0_affine(&sec.binoid, degree_bound)?);
        }
        pi0.push(by_id[sec.id.as_str()].clone());
    }
    let mut diagram = PosetDiagram::new();
    for (k, set) in keys.iter().zip(&pi0) {
        let g = GroupoidPresentation::discrete(set.points().iter().map(|p| point_label(set, p)))?;
        diagram.add_node(index_set_key(k), k.clone(), g);
    }
    let mut maps = BTreeMap::new();
    for ((a, b), f) in &s.restrictions {
        let (na, nb) = (index(&keys, a), index(&keys, b));
        let map = induced_pi0_map_between(f, &pi0[na], &pi0[nb])?;
        let object_map = pi0[nb]
            .points()
            .iter()
            .map(|p| pi0[na].index_of(&map.apply(p)))
            .collect();
        diagram.add_arrow(nb, na, GroupoidFunctor::on_objects(object_map))?;
        maps.insert((nb, na), map);
    }
    Ok(Realization { keys, pi0, maps, diagram })
}

fn index(keys: &[Vec<usize>], k: &[usize]) -> usize {
    keys.iter().position(|x| x == k).expect("restriction between declared sets")
}

#[derive(Debug, Clone, Serialize)]
pub struct FundamentalGroupoid {
    /// Conditions on the realization diagram as built.
    pub initial: ConditionReport,
    pub stretched: bool,
    /// Conditions on the diagram the colimit was taken over.
    pub conditions: ConditionReport,
    pub colimit: GroupoidPresentation,
    pub groups: GroupPresentationResult,
}

pub fn fundamental_groupoid(s: &SchemeDiagram, degree_bound: u32) -> Result<GroupPresentationResult> {
    Ok(fundamental_groupoid_detailed(s, degree_bound)?.groups)
}

pub fn fundamental_groupoid_detailed(s: &SchemeDiagram, degree_bound: u32) -> Result<FundamentalGroupoid> {
    let r = realization_functor(s, degree_bound)?;
    fundamental_groupoid_of(&r.diagram, s.chart_count())
}

/// Colimit pipeline for a diagram of groupoids over the Čech poset of an
/// `n`-cover.
pub fn fundamental_groupoid_of(d: &PosetDiagram, n: usize) -> Result<FundamentalGroupoid> {
    let initial = check_colimit_conditions(d, n);
    let (stretched, conditions, colimit) = if initial.all_passed() {
        (false, initial.clone(), d.colimit()?)
    } else {
        debug!("{} colimit conditions fail; stretching", initial.failures().len());
        let inflated = d.inflate()?;
        let report = check_colimit_conditions(&inflated, n);
        if let Some(f) = report.failures().first() {
            return Err(Error::ConditionCheckFailed(format!(
                "{} for I={:?}, J={:?}: {}",
                f.kind,
                f.i,
                f.j,
                f.witness.clone().unwrap_or_default()
            )));
        }
        (true, report, inflated.colimit()?)
    };
    debug!(
        "colimit: {} objects, {} generators, {} relations",
        colimit.groupoid.objects().len(),
        colimit.groupoid.gens().len(),
        colimit.groupoid.relations().len()
    );
    let groups = skeletonize(&colimit.groupoid);
    Ok(FundamentalGroupoid {
        initial,
        stretched,
        conditions,
        colimit: colimit.groupoid,
        groups,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pi0Summary {
    pub count: usize,
    /// One representative object label per component.
    pub labels: Vec<String>,
}

/// Components of the colimit of the realization; stretching does not
/// change them, so no stretching is done.
pub fn pi0_scheme(s: &SchemeDiagram, degree_bound: u32) -> Result<Pi0Summary> {
    let r = realization_functor(s, degree_bound)?;
    let c = r.diagram.colimit()?;
    let labels: Vec<String> = c
        .groupoid
        .components()
        .iter()
        .map(|objs| c.groupoid.objects()[objs[0]].clone())
        .collect();
    Ok(Pi0Summary { count: labels.len(), labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binoid::DEFAULT_DEGREE_BOUND;
    use crate::scheme::{load_scheme, SchemeDocument};

    fn example() -> SchemeDiagram {
        let doc = SchemeDocument::from_json(include_str!("../../data/example1_scheme.json")).unwrap();
        load_scheme(&doc).unwrap()
    }

    #[test]
    fn realization_point_counts() {
        let r = realization_functor(&example(), DEFAULT_DEGREE_BOUND).unwrap();
        let counts: Vec<usize> = r.point_counts().into_iter().map(|(_, c)| c).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 4, 2, 4]);
    }

    #[test]
    fn example_groupoid_is_free_of_rank_two() {
        let f = fundamental_groupoid_detailed(&example(), DEFAULT_DEGREE_BOUND).unwrap();
        assert!(f.stretched);
        assert!(f.conditions.all_passed());
        assert_eq!(f.groups.free_ranks(), vec![Some(2)]);
        let p = pi0_scheme(&example(), DEFAULT_DEGREE_BOUND).unwrap();
        assert_eq!(p.count, 1);
    }

    #[test]
    fn affine_scheme_is_discrete() {
        let m: crate::binoid::BinoidPresentation = "x* |".parse().unwrap();
        let s = SchemeDiagram::affine(m);
        let g = fundamental_groupoid(&s, DEFAULT_DEGREE_BOUND).unwrap();
        assert_eq!(g.free_ranks(), vec![Some(0), Some(0)]);
    }
}
