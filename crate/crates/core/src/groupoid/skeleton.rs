//! Reduction of a presented groupoid to one group presentation per
//! connected component, followed by Tietze simplification.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::presentation::{GroupoidPresentation, Letter};
use crate::linalg::{AbelianGroupData, AbelianQuotient};

pub const DEFAULT_TIETZE_BUDGET: usize = 10_000;
const MAX_RELATOR_LENGTH: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentGroup {
    pub representative: String,
    pub objects: Vec<String>,
    pub generators: Vec<String>,
    pub relators: Vec<String>,
    /// Set exactly when no relators remain.
    pub free_rank: Option<usize>,
    pub abelianization: AbelianGroupData,
    /// The simplification budget ran out before a fixed point was reached.
    pub unreduced: bool,
}

impl ComponentGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == Some(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentationResult {
    pub components: Vec<ComponentGroup>,
}

impl GroupPresentationResult {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn free_ranks(&self) -> Vec<Option<usize>> {
        self.components.iter().map(|c| c.free_rank).collect()
    }
}

/// Group words over `±(g+1)`.
type GWord = Vec<i32>;

fn free_reduce(w: &[i32]) -> GWord {
    let mut out: GWord = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn cyclic_reduce(w: &[i32]) -> GWord {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}

fn inverse(w: &[i32]) -> GWord {
    w.iter().rev().map(|x| -x).collect()
}

/// Least rotation of `w` or its inverse, for deduplication.
fn canonical(w: &[i32]) -> GWord {
    let inv = inverse(w);
    let mut best = w.to_vec();
    for base in [w, &inv[..]] {
        for k in 0..base.len() {
            let rot: GWord = base[k..].iter().chain(&base[..k]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

struct Tietze {
    alive: Vec<bool>,
    relators: Vec<GWord>,
    unreduced: bool,
}

impl Tietze {
    fn normalize(&mut self) {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for r in self.relators.drain(..) {
            let r = cyclic_reduce(&r);
            if r.is_empty() {
                continue;
            }
            let key = if r.len() <= 64 { canonical(&r) } else { r.clone() };
            if seen.insert(key) {
                out.push(r);
            }
        }
        out.sort_by_key(Vec::len);
        self.relators = out;
    }

    /// The shortest relator with a generator occurring in it exactly once,
    /// and that generator.
    fn candidate(&self) -> Option<(usize, i32)> {
        let mut best: Option<(usize, i32)> = None;
        let mut count: BTreeMap<i32, usize> = BTreeMap::new();
        for (ri, r) in self.relators.iter().enumerate() {
            if best.is_some_and(|(b, _)| self.relators[b].len() <= r.len()) {
                continue;
            }
            count.clear();
            for &x in r {
                *count.entry(x.abs()).or_insert(0) += 1;
            }
            if let Some((&g, _)) = count.iter().find(|(_, &c)| c == 1) {
                best = Some((ri, g));
                if r.len() == 1 {
                    break;
                }
            }
        }
        best
    }

    fn run(&mut self, budget: usize) {
        self.normalize();
        let mut steps = 0;
        while let Some((ri, g)) = self.candidate() {
            if steps >= budget {
                self.unreduced = true;
                break;
            }
            steps += 1;
            let r = self.relators.swap_remove(ri);
            let at = r.iter().position(|x| x.abs() == g).expect("candidate occurs");
            let rotated: GWord = r[at..].iter().chain(&r[..at]).copied().collect();
            let rest = &rotated[1..];
            // g^e · rest = 1
            let value = if rotated[0] > 0 { inverse(rest) } else { rest.to_vec() };
            let value_inv = inverse(&value);
            let mut too_long = false;
            self.relators.retain_mut(|rel| {
                if !rel.iter().any(|x| x.abs() == g) {
                    return true;
                }
                let mut out = Vec::with_capacity(rel.len() + value.len());
                for &x in rel.iter() {
                    if x == g {
                        out.extend_from_slice(&value);
                    } else if x == -g {
                        out.extend_from_slice(&value_inv);
                    } else {
                        out.push(x);
                    }
                }
                *rel = cyclic_reduce(&out);
                too_long |= rel.len() > MAX_RELATOR_LENGTH;
                !rel.is_empty()
            });
            self.alive[(g - 1) as usize] = false;
            if too_long {
                self.unreduced = true;
                break;
            }
        }
        self.normalize();
    }
}

pub fn skeletonize(g: &GroupoidPresentation) -> GroupPresentationResult {
    skeletonize_with_budget(g, DEFAULT_TIETZE_BUDGET)
}

pub fn skeletonize_with_budget(g: &GroupoidPresentation, budget: usize) -> GroupPresentationResult {
    let comps = g.components();
    let mut comp_of = vec![0usize; g.objects().len()];
    for (c, objs) in comps.iter().enumerate() {
        for &o in objs {
            comp_of[o] = c;
        }
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.objects().len()];
    for (i, gen) in g.gens().iter().enumerate() {
        incident[gen.source].push(i);
        if gen.target != gen.source {
            incident[gen.target].push(i);
        }
    }
    // spanning forest by breadth-first search in index order
    let mut tree = vec![false; g.gens().len()];
    let mut visited = vec![false; g.objects().len()];
    for objs in &comps {
        let root = objs[0];
        visited[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &gi in &incident[x] {
                let gen = &g.gens()[gi];
                let other = if gen.source == x { gen.target } else { gen.source };
                if !visited[other] {
                    visited[other] = true;
                    tree[gi] = true;
                    queue.push_back(other);
                }
            }
        }
    }
    // group generator index per non-tree groupoid generator, per component
    let mut local: Vec<Option<usize>> = vec![None; g.gens().len()];
    let mut names: Vec<Vec<String>> = vec![Vec::new(); comps.len()];
    for (i, gen) in g.gens().iter().enumerate() {
        if !tree[i] {
            let c = comp_of[gen.source];
            local[i] = Some(names[c].len());
            names[c].push(gen.name.clone());
        }
    }
    let subst = |w: &[Letter]| -> GWord {
        w.iter()
            .filter_map(|l| {
                local[l.gen].map(|k| {
                    let v = k as i32 + 1;
                    if l.inverse {
                        -v
                    } else {
                        v
                    }
                })
            })
            .collect()
    };
    let mut relators: Vec<Vec<GWord>> = vec![Vec::new(); comps.len()];
    for r in g.relations() {
        let mut w = subst(&r.lhs);
        w.extend(inverse(&subst(&r.rhs)));
        relators[comp_of[r.source]].push(w);
    }
    let components = comps
        .iter()
        .enumerate()
        .map(|(c, objs)| {
            let mut t = Tietze {
                alive: vec![true; names[c].len()],
                relators: std::mem::take(&mut relators[c]),
                unreduced: false,
            };
            t.run(budget);
            let kept: Vec<usize> = (0..names[c].len()).filter(|&i| t.alive[i]).collect();
            let renumber: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(n, &o)| (o, n)).collect();
            let generators: Vec<String> = kept.iter().map(|&i| names[c][i].clone()).collect();
            let rows: Vec<Vec<i64>> = t
                .relators
                .iter()
                .map(|r| {
                    let mut row = vec![0i64; kept.len()];
                    for &x in r {
                        row[renumber[&((x.unsigned_abs() - 1) as usize)]] += i64::from(x.signum());
                    }
                    row
                })
                .collect();
            let abelianization = AbelianQuotient::new(kept.len(), &rows).group();
            let show = |r: &GWord| -> String {
                r.iter()
                    .map(|&x| {
                        let n = &names[c][(x.unsigned_abs() - 1) as usize];
                        if x < 0 {
                            format!("{n}^-1")
                        } else {
                            n.clone()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*")
            };
            ComponentGroup {
                representative: g.objects()[objs[0]].clone(),
                objects: objs.iter().map(|&o| g.objects()[o].clone()).collect(),
                free_rank: t.relators.is_empty().then_some(generators.len()),
                relators: t.relators.iter().map(show).collect(),
                generators,
                abelianization,
                unreduced: t.unreduced,
            }
        })
        .collect();
    GroupPresentationResult { components }
}
