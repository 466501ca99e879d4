//! Poset-indexed diagrams of presented groupoids and their colimits.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::functor::GroupoidFunctor;
use super::presentation::{free_reduce, inverse_word, GroupoidPresentation, Letter, UnionFind, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct DiagramNode {
    pub label: String,
    /// Index set of the poset element (sorted, 1-based) when the diagram
    /// lives on a Čech poset; any distinct keys otherwise.
    pub key: Vec<usize>,
    pub groupoid: GroupoidPresentation,
}

/// The functor attached to a covering relation, from node `from` to node `to`.
#[derive(Debug, Clone)]
pub struct DiagramArrow {
    pub from: usize,
    pub to: usize,
    pub functor: GroupoidFunctor,
}

#[derive(Debug, Clone, Default)]
pub struct PosetDiagram {
    pub nodes: Vec<DiagramNode>,
    pub arrows: Vec<DiagramArrow>,
}

#[derive(Debug, Clone)]
pub struct Colimit {
    pub groupoid: GroupoidPresentation,
    /// Canonical functor from each node into the colimit.
    pub injections: Vec<GroupoidFunctor>,
}

impl PosetDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, label: String, key: Vec<usize>, groupoid: GroupoidPresentation) -> usize {
        self.nodes.push(DiagramNode { label, key, groupoid });
        self.nodes.len() - 1
    }

    pub fn add_arrow(&mut self, from: usize, to: usize, functor: GroupoidFunctor) -> Result<()> {
        let f = GroupoidFunctor::new(
            &self.nodes[from].groupoid,
            &self.nodes[to].groupoid,
            functor.object_map,
            functor.gen_map,
        )?;
        self.arrows.push(DiagramArrow { from, to, functor: f });
        Ok(())
    }

    pub fn node_by_key(&self, key: &[usize]) -> Option<usize> {
        self.nodes.iter().position(|n| n.key == key)
    }

    /// Composite functor along some chain of arrows from `from` to `to`.
    pub fn composite(&self, from: usize, to: usize) -> Option<GroupoidFunctor> {
        if from == to {
            return Some(GroupoidFunctor::identity(&self.nodes[from].groupoid));
        }
        let mut prev: HashMap<usize, usize> = HashMap::new();
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for (ai, a) in self.arrows.iter().enumerate() {
                if a.from == x && a.to != from && !prev.contains_key(&a.to) {
                    prev.insert(a.to, ai);
                    queue.push_back(a.to);
                }
            }
        }
        let mut chain = Vec::new();
        let mut cur = to;
        while cur != from {
            let ai = *prev.get(&cur)?;
            chain.push(ai);
            cur = self.arrows[ai].from;
        }
        chain.reverse();
        let mut f = GroupoidFunctor::identity(&self.nodes[from].groupoid);
        for ai in chain {
            f = f.then(&self.arrows[ai].functor);
        }
        Some(f)
    }

    /// Every two paths of length two with the same ends agree on objects
    /// and, up to free reduction, on generators.
    pub fn check_commutes(&self) -> Result<()> {
        let mut paths: BTreeMap<(usize, usize), Vec<(usize, GroupoidFunctor)>> = BTreeMap::new();
        for a in &self.arrows {
            for b in self.arrows.iter().filter(|b| b.from == a.to) {
                paths
                    .entry((a.from, b.to))
                    .or_default()
                    .push((a.to, a.functor.then(&b.functor)));
            }
        }
        for ((x, z), fs) in &paths {
            let (mid0, first) = &fs[0];
            for (mid, f) in &fs[1..] {
                if !first.agrees_with(f) {
                    return Err(Error::NonCommutingDiagram(format!(
                        "paths {} -> {} -> {} and {} -> {} -> {} differ",
                        self.nodes[*x].label,
                        self.nodes[*mid0].label,
                        self.nodes[*z].label,
                        self.nodes[*x].label,
                        self.nodes[*mid].label,
                        self.nodes[*z].label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Colimit in groupoids: objects glued along the arrows, all generators
    /// kept, and each generator equated with its image under every arrow.
    pub fn colimit(&self) -> Result<Colimit> {
        self.check_commutes()?;
        let mut obj_off = Vec::with_capacity(self.nodes.len());
        let mut gen_off = Vec::with_capacity(self.nodes.len());
        let (mut no, mut ng) = (0, 0);
        for n in &self.nodes {
            obj_off.push(no);
            gen_off.push(ng);
            no += n.groupoid.objects().len();
            ng += n.groupoid.gens().len();
        }
        let mut uf = UnionFind::new(no);
        for a in &self.arrows {
            for (x, &y) in a.functor.object_map.iter().enumerate() {
                uf.union(obj_off[a.from] + x, obj_off[a.to] + y);
            }
        }
        let classes = uf.classes();
        let mut class_of = vec![0; no];
        for (c, members) in classes.iter().enumerate() {
            for &m in members {
                class_of[m] = c;
            }
        }
        let owner: Vec<usize> = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(ni, n)| std::iter::repeat_n(ni, n.groupoid.objects().len()))
            .collect();
        let locate = |global: usize| -> (usize, usize) {
            let node = owner[global];
            (node, global - obj_off[node])
        };
        let plain_objects: Vec<String> = classes
            .iter()
            .map(|m| {
                let (node, x) = locate(m[0]);
                self.nodes[node].groupoid.objects()[x].clone()
            })
            .collect();
        let objects_unique = plain_objects.iter().collect::<BTreeSet<_>>().len() == plain_objects.len();
        let mut out = GroupoidPresentation::new();
        for (c, members) in classes.iter().enumerate() {
            let label = if objects_unique || self.nodes.len() == 1 {
                plain_objects[c].clone()
            } else {
                let (node, x) = locate(members[0]);
                format!("{}:{}", self.nodes[node].label, self.nodes[node].groupoid.objects()[x])
            };
            out.add_object(label)?;
        }
        let all_names: Vec<&String> = self
            .nodes
            .iter()
            .flat_map(|n| n.groupoid.gens().iter().map(|g| &g.name))
            .collect();
        let gens_unique = all_names.iter().collect::<BTreeSet<_>>().len() == all_names.len();
        for (ni, n) in self.nodes.iter().enumerate() {
            for g in n.groupoid.gens() {
                let name = if gens_unique {
                    g.name.clone()
                } else {
                    format!("{}:{}", n.label, g.name)
                };
                out.add_gen(
                    name,
                    class_of[obj_off[ni] + g.source],
                    class_of[obj_off[ni] + g.target],
                )?;
            }
        }
        let shift = |ni: usize, w: &Word| -> Word {
            w.iter().map(|l| Letter { gen: l.gen + gen_off[ni], inverse: l.inverse }).collect()
        };
        for (ni, n) in self.nodes.iter().enumerate() {
            for r in n.groupoid.relations() {
                out.add_relation(class_of[obj_off[ni] + r.source], shift(ni, &r.lhs), shift(ni, &r.rhs))?;
            }
        }
        for a in &self.arrows {
            let src = &self.nodes[a.from].groupoid;
            for (gi, g) in src.gens().iter().enumerate() {
                let lhs = vec![Letter::new(gen_off[a.from] + gi)];
                let rhs = shift(a.to, &a.functor.gen_map[gi]);
                out.add_relation(class_of[obj_off[a.from] + g.source], lhs, rhs)?;
            }
        }
        let injections = self
            .nodes
            .iter()
            .enumerate()
            .map(|(ni, n)| GroupoidFunctor {
                object_map: (0..n.groupoid.objects().len()).map(|x| class_of[obj_off[ni] + x]).collect(),
                gen_map: (0..n.groupoid.gens().len()).map(|g| vec![Letter::new(gen_off[ni] + g)]).collect(),
            })
            .collect();
        Ok(Colimit { groupoid: out, injections })
    }

    /// Stretches every arrow at once so that all functors become injective
    /// on objects.
    ///
    /// The node at `Y` is replaced by a groupoid with one object `(Z, x)` for
    /// every node `Z ⊇ Y` and object `x` of `Z`, where `(Z, x)` is joined to
    /// `(Y, F(x))` by a connecting iso. Each new node is equivalent to the old
    /// one, and the new arrows are inclusions on objects. Keys must be index
    /// sets and arrows must go from `Y ∪ {i}` to `Y`.
    pub fn inflate(&self) -> Result<PosetDiagram> {
        let m = self.nodes.len();
        let is_super = |z: usize, y: usize| {
            let ky: BTreeSet<_> = self.nodes[y].key.iter().collect();
            let kz: BTreeSet<_> = self.nodes[z].key.iter().collect();
            kz.is_superset(&ky)
        };
        // supersets[y]: y itself first, then strict supersets in node order
        let supersets: Vec<Vec<usize>> = (0..m)
            .map(|y| {
                let mut v = vec![y];
                v.extend((0..m).filter(|&z| z != y && is_super(z, y)));
                v
            })
            .collect();
        let mut composites: HashMap<(usize, usize), GroupoidFunctor> = HashMap::new();
        for (y, sup) in supersets.iter().enumerate() {
            for &z in &sup[1..] {
                let f = self.composite(z, y).ok_or_else(|| {
                    Error::InvalidGroupoid(format!(
                        "no chain of arrows from {} to {}",
                        self.nodes[z].label, self.nodes[y].label
                    ))
                })?;
                composites.insert((z, y), f);
            }
        }
        let offsets: Vec<BTreeMap<usize, usize>> = (0..m)
            .map(|y| {
                let mut off = 0;
                supersets[y]
                    .iter()
                    .map(|&z| {
                        let o = off;
                        off += self.nodes[z].groupoid.objects().len();
                        (z, o)
                    })
                    .collect()
            })
            .collect();
        let obj_label = |z: usize, x: usize| format!("{}/{}", self.nodes[z].label, self.nodes[z].groupoid.objects()[x]);

        let mut out = PosetDiagram::new();
        for y in 0..m {
            let base = &self.nodes[y].groupoid;
            let mut g = GroupoidPresentation::new();
            for &z in &supersets[y] {
                for x in 0..self.nodes[z].groupoid.objects().len() {
                    g.add_object(obj_label(z, x))?;
                }
            }
            for gen in base.gens() {
                g.add_gen(format!("{}/{}", self.nodes[y].label, gen.name), gen.source, gen.target)?;
            }
            for &z in &supersets[y][1..] {
                let f = &composites[&(z, y)];
                for x in 0..self.nodes[z].groupoid.objects().len() {
                    g.add_gen(
                        format!("c[{}]{}", self.nodes[y].label, obj_label(z, x)),
                        f.object_map[x],
                        offsets[y][&z] + x,
                    )?;
                }
            }
            for r in base.relations() {
                g.add_relation(r.source, r.lhs.clone(), r.rhs.clone())?;
            }
            out.add_node(self.nodes[y].label.clone(), self.nodes[y].key.clone(), g);
        }
        for a in &self.arrows {
            let (z, y) = (a.from, a.to);
            let gy_base = self.nodes[y].groupoid.gens().len();
            let ny_base = self.nodes[y].groupoid.objects().len();
            // connecting iso of Φ'(y) ending at object (w, x)
            let conn = |w: usize, x: usize| -> Letter {
                if w == y {
                    unreachable!("objects of y carry no connecting iso")
                }
                Letter::new(gy_base + offsets[y][&w] + x - ny_base)
            };
            let mut object_map = Vec::new();
            for &w in &supersets[z] {
                for x in 0..self.nodes[w].groupoid.objects().len() {
                    object_map.push(offsets[y][&w] + x);
                }
            }
            let mut gen_map: Vec<Word> = Vec::new();
            let zg = &self.nodes[z].groupoid;
            for (gi, gen) in zg.gens().iter().enumerate() {
                let mut w = vec![conn(z, gen.source).inverted()];
                w.extend_from_slice(&a.functor.gen_map[gi]);
                w.push(conn(z, gen.target));
                gen_map.push(free_reduce(&w));
            }
            for &w in &supersets[z][1..] {
                let f = &composites[&(w, z)];
                for x in 0..self.nodes[w].groupoid.objects().len() {
                    let q = f.object_map[x];
                    gen_map.push(vec![conn(z, q).inverted(), conn(w, x)]);
                }
            }
            out.add_arrow(z, y, GroupoidFunctor { object_map, gen_map })?;
        }
        Ok(out)
    }
}

/// Relations of a colimit that are not syntactically trivial after free
/// reduction, as closed loops.
pub fn nontrivial_relators(g: &GroupoidPresentation) -> Vec<Word> {
    g.relations()
        .iter()
        .filter_map(|r| {
            let mut w = r.lhs.clone();
            w.extend(inverse_word(&r.rhs));
            let w = free_reduce(&w);
            (!w.is_empty()).then_some(w)
        })
        .collect()
}
