use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generating isomorphism `name: source → target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenIso {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn inv(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// A composable path, letters in the order they are traversed.
pub type Word = Vec<Letter>;

pub fn inverse_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inverted()).collect()
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// A relation `lhs = rhs` between parallel paths from `source` to `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidRelation {
    pub source: usize,
    pub target: usize,
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidPresentation {
    objects: Vec<String>,
    gens: Vec<GenIso>,
    relations: Vec<GroupoidRelation>,
}

impl GroupoidPresentation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Objects only, no morphisms besides identities.
    pub fn discrete(labels: impl IntoIterator<Item = String>) -> Result<Self> {
        let mut g = Self::new();
        for l in labels {
            g.add_object(l)?;
        }
        Ok(g)
    }

    pub fn add_object(&mut self, label: String) -> Result<usize> {
        if self.objects.contains(&label) {
            return Err(Error::InvalidGroupoid(format!("duplicate object {label}")));
        }
        self.objects.push(label);
        Ok(self.objects.len() - 1)
    }

    pub fn add_gen(&mut self, name: String, source: usize, target: usize) -> Result<usize> {
        if source >= self.objects.len() || target >= self.objects.len() {
            return Err(Error::InvalidGroupoid(format!("generator {name} has unknown endpoints")));
        }
        if self.gens.iter().any(|g| g.name == name) {
            return Err(Error::InvalidGroupoid(format!("duplicate generator {name}")));
        }
        self.gens.push(GenIso { name, source, target });
        Ok(self.gens.len() - 1)
    }

    pub fn add_relation(&mut self, source: usize, lhs: Word, rhs: Word) -> Result<()> {
        let t1 = self.word_target(source, &lhs)?;
        let t2 = self.word_target(source, &rhs)?;
        if t1 != t2 {
            return Err(Error::InvalidGroupoid("relation sides have different targets".into()));
        }
        self.relations.push(GroupoidRelation { source, target: t1, lhs, rhs });
        Ok(())
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn gens(&self) -> &[GenIso] {
        &self.gens
    }

    pub fn relations(&self) -> &[GroupoidRelation] {
        &self.relations
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == label)
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn letter_source(&self, l: Letter) -> usize {
        let g = &self.gens[l.gen];
        if l.inverse {
            g.target
        } else {
            g.source
        }
    }

    pub fn letter_target(&self, l: Letter) -> usize {
        let g = &self.gens[l.gen];
        if l.inverse {
            g.source
        } else {
            g.target
        }
    }

    /// Endpoint of `w` read from `source`; errors if the path does not compose.
    pub fn word_target(&self, source: usize, w: &[Letter]) -> Result<usize> {
        if source >= self.objects.len() {
            return Err(Error::InvalidGroupoid(format!("unknown object {source}")));
        }
        let mut cur = source;
        for &l in w {
            if l.gen >= self.gens.len() {
                return Err(Error::InvalidGroupoid(format!("unknown generator {}", l.gen)));
            }
            if self.letter_source(l) != cur {
                return Err(Error::InvalidGroupoid(format!(
                    "word does not compose at {}",
                    self.gens[l.gen].name
                )));
            }
            cur = self.letter_target(l);
        }
        Ok(cur)
    }

    pub fn show_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "id".into();
        }
        w.iter()
            .map(|l| {
                let n = &self.gens[l.gen].name;
                if l.inverse {
                    format!("{n}^-1")
                } else {
                    n.clone()
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Connected components as sorted object lists, ordered by least object.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.objects.len());
        for g in &self.gens {
            uf.union(g.source, g.target);
        }
        uf.classes()
    }

    pub fn disjoint_union(parts: &[GroupoidPresentation]) -> Result<Self> {
        let mut out = Self::new();
        for p in parts {
            let obj_off = out.objects.len();
            let gen_off = out.gens.len();
            for o in &p.objects {
                out.add_object(o.clone())?;
            }
            for g in &p.gens {
                out.add_gen(g.name.clone(), g.source + obj_off, g.target + obj_off)?;
            }
            for r in &p.relations {
                let shift = |w: &Word| -> Word {
                    w.iter().map(|l| Letter { gen: l.gen + gen_off, inverse: l.inverse }).collect()
                };
                out.add_relation(r.source + obj_off, shift(&r.lhs), shift(&r.rhs))?;
            }
        }
        Ok(out)
    }

    /// Graphviz rendering: nodes `obj:<label>`, edges labelled `iso:<name>`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph groupoid {\n");
        for o in &self.objects {
            let _ = writeln!(s, "  \"obj:{}\";", escape(o));
        }
        for g in &self.gens {
            let _ = writeln!(
                s,
                "  \"obj:{}\" -> \"obj:{}\" [label=\"iso:{}\"];",
                escape(&self.objects[g.source]),
                escape(&self.objects[g.target]),
                escape(&g.name)
            );
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Disjoint sets over `0..n`; the representative of a class is its least member.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.parent.len() {
            let r = self.find(i);
            by_root.entry(r).or_default().push(i);
        }
        by_root.into_values().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_compose_and_reduce() {
        let mut g = GroupoidPresentation::new();
        let a = g.add_object("a".into()).unwrap();
        let b = g.add_object("b".into()).unwrap();
        let f = g.add_gen("f".into(), a, b).unwrap();
        let w = vec![Letter::new(f), Letter::inv(f), Letter::new(f)];
        assert_eq!(g.word_target(a, &w).unwrap(), b);
        assert_eq!(free_reduce(&w), vec![Letter::new(f)]);
        assert!(g.word_target(b, &w).is_err());
        assert_eq!(g.show_word(&inverse_word(&w)), "f^-1*f*f^-1");
    }

    #[test]
    fn dot_labels() {
        let mut g = GroupoidPresentation::discrete(["p".to_string(), "q".to_string()]).unwrap();
        g.add_gen("t".into(), 0, 1).unwrap();
        let dot = g.to_dot();
        assert!(dot.contains("\"obj:p\" -> \"obj:q\" [label=\"iso:t\"]"));
        assert_eq!(g.components(), vec![vec![0, 1]]);
    }
}
