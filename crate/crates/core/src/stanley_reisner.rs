//! Simplicial complexes: the Stanley-Reisner binoid, the direct groupoid
//! model of its real punctured spectrum, and the edge-path style groupoid
//! of the geometric realization.

use std::collections::BTreeMap;
use std::sync::Arc;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::binoid::{BinoidHom, BinoidPresentation, Relation, DEFAULT_COMPLETION_BUDGET};
use crate::error::{Error, Result};
use crate::groupoid::{skeletonize, GroupPresentationResult, GroupoidPresentation, Letter, Word};
use crate::scheme::{SchemeDiagram, Section};

/// Object counts `Σ 2^{|F|}` above this are refused.
pub const MAX_SIGNED_OBJECTS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawComplex", into = "RawComplex")]
pub struct SimplicialComplexData {
    n: usize,
    facets: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    n: usize,
    facets: Vec<Vec<usize>>,
}

impl TryFrom<RawComplex> for SimplicialComplexData {
    type Error = Error;

    fn try_from(r: RawComplex) -> Result<Self> {
        SimplicialComplexData::new(r.n, r.facets)
    }
}

impl From<SimplicialComplexData> for RawComplex {
    fn from(c: SimplicialComplexData) -> Self {
        RawComplex { n: c.n, facets: c.facets }
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

impl SimplicialComplexData {
    /// Sorts facets and drops faces contained in other facets.
    pub fn new(n: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 || n > 63 {
            return Err(Error::InvalidComplex(format!("vertex count {n} out of range")));
        }
        let mut fs: Vec<Vec<usize>> = Vec::new();
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                return Err(Error::InvalidComplex("empty facet".into()));
            }
            if f.iter().any(|&v| v == 0 || v > n) {
                return Err(Error::InvalidComplex(format!("facet {f:?} has a vertex outside 1..{n}")));
            }
            fs.push(f);
        }
        fs.sort();
        fs.dedup();
        let all = fs.clone();
        fs.retain(|f| {
            let redundant = all.iter().any(|g| g != f && is_subset(f, g));
            if redundant {
                warn!("dropping face {f:?} contained in another facet");
            }
            !redundant
        });
        for v in 1..=n {
            if !fs.iter().any(|f| f.contains(&v)) {
                return Err(Error::InvalidComplex(format!("vertex {v} lies in no facet")));
            }
        }
        let objects: usize = fs.iter().map(|f| 1usize << f.len().min(62)).sum();
        if objects > MAX_SIGNED_OBJECTS {
            return Err(Error::InvalidComplex(format!("{objects} signed facets exceed the cap")));
        }
        Ok(SimplicialComplexData { n, facets: fs })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn simplex(n: usize) -> Self {
        SimplicialComplexData::new(n, vec![(1..=n).collect()]).expect("simplex is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_face(&self, s: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(s, f))
    }

    /// All nonempty faces, by size and then lexicographically.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for f in &self.facets {
            for mask in 1u64..(1u64 << f.len()) {
                out.push(f.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect());
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.dedup();
        out
    }

    /// Nonfaces all of whose proper subsets are faces.
    pub fn minimal_nonfaces(&self) -> Vec<Vec<usize>> {
        let faces = self.faces();
        let mut out = Vec::new();
        // a minimal nonface is a face plus one vertex, or a single vertex
        for f in std::iter::once(Vec::new()).chain(faces) {
            for v in f.last().map_or(1, |l| l + 1)..=self.n {
                let mut s = f.clone();
                s.push(v);
                if !self.is_face(&s) && SchemeDiagram::faces(&s).iter().all(|t| t.is_empty() || self.is_face(t)) {
                    out.push(s);
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.dedup();
        out
    }
}

fn vertex_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn sr_presentation(d: &SimplicialComplexData, inverted: &[usize], budget: usize) -> Result<BinoidPresentation> {
    let width = d.n + inverted.len();
    let relations = d
        .minimal_nonfaces()
        .iter()
        .map(|s| {
            let mut lhs = vec![0u32; width];
            for &v in s {
                lhs[v - 1] = 1;
            }
            Relation::zero(lhs)
        })
        .collect();
    let inverses = inverted.iter().map(|&i| (format!("x{i}"), format!("x{i}inv"))).collect();
    BinoidPresentation::with_budget(vertex_names(d.n), inverses, relations, budget)
}

pub fn sr_binoid(d: &SimplicialComplexData) -> Result<BinoidPresentation> {
    sr_presentation(d, &[], DEFAULT_COMPLETION_BUDGET)
}

/// Charts `D(x_i)` of the punctured spectrum, with sections over every
/// face `I` the localization at `∏_{i∈I} x_i`. Nonfaces have empty
/// intersection and are left out.
pub fn chart_scheme(d: &SimplicialComplexData) -> Result<SchemeDiagram> {
    let mut sections = BTreeMap::new();
    for face in d.faces() {
        let label: String = face.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        let m = sr_presentation(d, &face, DEFAULT_COMPLETION_BUDGET)?;
        sections.insert(face, Section { id: format!("D[{label}]"), binoid: Arc::new(m) });
    }
    let mut restrictions = BTreeMap::new();
    for (b, sb) in &sections {
        if b.len() < 2 {
            continue;
        }
        for a in SchemeDiagram::faces(b) {
            let sa: &Section = &sections[&a];
            let images = (0..sa.binoid.num_gens())
                .map(|g| {
                    let name = &sa.binoid.gens()[g];
                    let h = sb.binoid.generator_index(name)?;
                    Ok(sb.binoid.generator(h))
                })
                .collect::<Result<Vec<_>>>()?;
            restrictions.insert((a, b.clone()), BinoidHom::new(sa.binoid.clone(), sb.binoid.clone(), images)?);
        }
    }
    SchemeDiagram::new(d.n, sections, restrictions)
}

/// An object `(F, σ)`; `signs[k]` is the sign at `facet[k]`, `true` for `−`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SignedFacetObject {
    pub facet: Vec<usize>,
    pub signs: Vec<bool>,
}

impl SignedFacetObject {
    pub fn sign_at(&self, v: usize) -> Option<bool> {
        self.facet.iter().position(|&x| x == v).map(|k| self.signs[k])
    }

    /// Tuple over all `n` vertices, `0` off the facet: `(+,-,0)`.
    pub fn label(&self, n: usize) -> String {
        let parts: Vec<&str> = (1..=n)
            .map(|v| match self.sign_at(v) {
                None => "0",
                Some(false) => "+",
                Some(true) => "-",
            })
            .collect();
        format!("({})", parts.join(","))
    }
}

pub fn signed_facet_objects(d: &SimplicialComplexData) -> Vec<SignedFacetObject> {
    let mut out = Vec::new();
    for f in &d.facets {
        for k in 0..1usize << f.len() {
            let signs = (0..f.len()).map(|i| k >> (f.len() - 1 - i) & 1 == 1).collect();
            out.push(SignedFacetObject { facet: f.clone(), signs });
        }
    }
    out
}

/// Objects agreeing with `(v, s)`, grouped by sign class `(vertex, sign)`.
fn classes(objs: &[SignedFacetObject], vertices: &[usize]) -> BTreeMap<Vec<bool>, Vec<usize>> {
    let mut out: BTreeMap<Vec<bool>, Vec<usize>> = BTreeMap::new();
    for (k, o) in objs.iter().enumerate() {
        let signs: Option<Vec<bool>> = vertices.iter().map(|&v| o.sign_at(v)).collect();
        if let Some(s) = signs {
            out.entry(s).or_default().push(k);
        }
    }
    out
}

/// The groupoid of signed facets.
///
/// In the default form each class of objects sharing the sign at a vertex
/// `i` is joined by a chain of generators, every other `α_i` being forced
/// by R1, and R2 is imposed between neighbours of each class sharing signs
/// at two vertices. With `full` every `α_i` is a generator and all R1
/// triangles and R2 pairs are listed.
pub fn sr_groupoid(d: &SimplicialComplexData, full: bool) -> Result<GroupoidPresentation> {
    let objs = signed_facet_objects(d);
    let mut g = GroupoidPresentation::discrete(objs.iter().map(|o| o.label(d.n)))?;
    // alpha[i][(a, b)] for a < b: the path standing for α_{i,[a,b]}
    let mut alpha: BTreeMap<usize, BTreeMap<(usize, usize), Word>> = BTreeMap::new();
    for i in 1..=d.n {
        let paths = alpha.entry(i).or_default();
        for members in classes(&objs, &[i]).values() {
            if full {
                for (p, &a) in members.iter().enumerate() {
                    for &b in &members[p + 1..] {
                        let name = format!("a{i}[{}>{}]", g.objects()[a], g.objects()[b]);
                        let e = g.add_gen(name, a, b)?;
                        paths.insert((a, b), vec![Letter::new(e)]);
                    }
                }
                for (p, &a) in members.iter().enumerate() {
                    for (q, &b) in members.iter().enumerate().skip(p + 1) {
                        for &c in &members[q + 1..] {
                            let mut via = paths[&(a, b)].clone();
                            via.extend_from_slice(&paths[&(b, c)]);
                            g.add_relation(a, paths[&(a, c)].clone(), via)?;
                        }
                    }
                }
            } else {
                let mut chain = Vec::new();
                for w in members.windows(2) {
                    let name = format!("a{i}[{}>{}]", g.objects()[w[0]], g.objects()[w[1]]);
                    chain.push(g.add_gen(name, w[0], w[1])?);
                }
                for (p, &a) in members.iter().enumerate() {
                    for (q, &b) in members.iter().enumerate().skip(p + 1) {
                        paths.insert((a, b), chain[p..q].iter().map(|&e| Letter::new(e)).collect());
                    }
                }
            }
        }
    }
    for i in 1..=d.n {
        for j in i + 1..=d.n {
            for members in classes(&objs, &[i, j]).values() {
                let pairs: Vec<(usize, usize)> = if full {
                    members
                        .iter()
                        .enumerate()
                        .flat_map(|(p, &a)| members[p + 1..].iter().map(move |&b| (a, b)))
                        .collect()
                } else {
                    members.windows(2).map(|w| (w[0], w[1])).collect()
                };
                for (a, b) in pairs {
                    let (wi, wj) = (&alpha[&i][&(a, b)], &alpha[&j][&(a, b)]);
                    if wi != wj {
                        g.add_relation(a, wi.clone(), wj.clone())?;
                    }
                }
            }
        }
    }
    Ok(g)
}

pub fn sr_fundamental_groups(d: &SimplicialComplexData, full: bool) -> Result<GroupPresentationResult> {
    Ok(skeletonize(&sr_groupoid(d, full)?))
}

/// Objects are the facets, with an iso `α_i: F → G` for every shared
/// vertex `i`; `α_i` compose along each vertex star, and `α_i = α_j`
/// whenever `F` and `G` share `i` and `j`.
pub fn geometric_realization_groupoid(d: &SimplicialComplexData) -> Result<GroupoidPresentation> {
    let label = |f: &[usize]| format!("{{{}}}", f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
    let mut g = GroupoidPresentation::discrete(d.facets.iter().map(|f| label(f)))?;
    let mut alpha: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for i in 1..=d.n {
        let star: Vec<usize> = (0..d.facets.len()).filter(|&k| d.facets[k].contains(&i)).collect();
        for (p, &a) in star.iter().enumerate() {
            for &b in &star[p + 1..] {
                let e = g.add_gen(format!("a{i}[{}>{}]", g.objects()[a], g.objects()[b]), a, b)?;
                alpha.insert((i, a, b), e);
            }
        }
        for (p, &a) in star.iter().enumerate() {
            for (q, &b) in star.iter().enumerate().skip(p + 1) {
                for &c in &star[q + 1..] {
                    let direct = vec![Letter::new(alpha[&(i, a, c)])];
                    let via = vec![Letter::new(alpha[&(i, a, b)]), Letter::new(alpha[&(i, b, c)])];
                    g.add_relation(a, direct, via)?;
                }
            }
        }
    }
    for a in 0..d.facets.len() {
        for b in a + 1..d.facets.len() {
            let shared: Vec<usize> = d.facets[a].iter().copied().filter(|v| d.facets[b].contains(v)).collect();
            for w in shared.windows(2) {
                let li = vec![Letter::new(alpha[&(w[0], a, b)])];
                let lj = vec![Letter::new(alpha[&(w[1], a, b)])];
                g.add_relation(a, li, lj)?;
            }
        }
    }
    Ok(g)
}
