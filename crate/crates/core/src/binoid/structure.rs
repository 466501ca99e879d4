//! Prime spectrum, idempotents, separatedness and the admissible decomposition.
//!
//! Every prime ideal is determined by the generators it contains, so Spec is
//! enumerated over generator subsets. Elements with the same set of primes
//! containing them form an archimedean class, which holds at most one
//! idempotent; classes are settled either by a grading certificate or by a
//! bounded search, and the completeness flag records whether all were settled.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::grading::positive_support;
use super::{BinoidPresentation, Element, Relation, DEFAULT_SPEC_CAP};
use crate::error::{Error, Result};

/// A prime ideal, given by the generators its characteristic map sends to 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PrimeIdeal {
    pub zero_gens: BTreeSet<usize>,
    pub names: Vec<String>,
}

impl PrimeIdeal {
    pub fn label(&self) -> String {
        if self.names.is_empty() {
            "(0)".into()
        } else {
            format!("({})", self.names.join(","))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Idempotents {
    /// Sorted: 0 first, then by degree and exponents.
    pub elements: Vec<Element>,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub separated: bool,
    /// `(x, y)` with `x ≠ 0`, `y ≠ 1` and `xy = x`.
    pub witness: Option<(Element, Element)>,
    pub complete: bool,
}

/// A prime ideal `r` of `Idem(M)` with its complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmBlock {
    pub r: Vec<Element>,
    pub r_complement: Vec<Element>,
    pub label: String,
}

fn mask_of(m: &[u32]) -> u64 {
    m.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (i, _)| acc | (1 << i))
}

fn relation_masks(rels: &[Relation]) -> Vec<(u64, Option<u64>)> {
    rels.iter()
        .map(|r| (mask_of(&r.lhs), r.rhs.as_deref().map(mask_of)))
        .collect()
}

pub(crate) fn element_order(a: &Element, b: &Element) -> std::cmp::Ordering {
    match (a, b) {
        (Element::Zero, Element::Zero) => std::cmp::Ordering::Equal,
        (Element::Zero, _) => std::cmp::Ordering::Less,
        (_, Element::Zero) => std::cmp::Ordering::Greater,
        (Element::Mono(x), Element::Mono(y)) => a
            .degree()
            .cmp(&b.degree())
            .then_with(|| y.cmp(x)),
    }
}

impl BinoidPresentation {
    /// Generator bitmasks of all primes, sorted by size then value.
    pub(crate) fn prime_masks(&self) -> Result<Vec<u64>> {
        self.prime_masks_with_cap(DEFAULT_SPEC_CAP)
    }

    fn prime_masks_with_cap(&self, cap: usize) -> Result<Vec<u64>> {
        let n = self.num_gens();
        // declared inverses are units and lie in no prime
        let candidates: Vec<usize> = (0..n).filter(|&i| self.declared_inverse(i).is_none()).collect();
        if candidates.len() > cap || n > 64 {
            return Err(Error::EnumerationCapExceeded {
                gens: candidates.len(),
                cap,
            });
        }
        let rels = relation_masks(&self.all_relations());
        let mut primes = Vec::new();
        for sub in 0u64..(1u64 << candidates.len()) {
            let s = candidates
                .iter()
                .enumerate()
                .filter(|(k, _)| sub >> k & 1 == 1)
                .fold(0u64, |acc, (_, &g)| acc | (1 << g));
            let ok = rels.iter().all(|&(l, r)| match r {
                Some(r) => (l & s != 0) == (r & s != 0),
                None => l & s != 0,
            });
            if ok {
                primes.push(s);
            }
        }
        primes.sort_by_key(|s| (s.count_ones(), s.reverse_bits()));
        Ok(primes)
    }

    pub fn spec(&self) -> Result<Vec<PrimeIdeal>> {
        self.spec_with_cap(DEFAULT_SPEC_CAP)
    }

    /// Primes ordered by size, then by generator order.
    pub fn spec_with_cap(&self, cap: usize) -> Result<Vec<PrimeIdeal>> {
        Ok(self
            .prime_masks_with_cap(cap)?
            .into_iter()
            .map(|s| {
                let zero_gens: BTreeSet<usize> = (0..self.num_gens()).filter(|&i| s >> i & 1 == 1).collect();
                let names = zero_gens.iter().map(|&i| self.gens()[i].clone()).collect();
                PrimeIdeal { zero_gens, names }
            })
            .collect())
    }

    /// Generators lying in some prime; the rest are units.
    pub(crate) fn nonunit_mask(&self) -> Result<u64> {
        Ok(self.prime_masks()?.iter().fold(0, |a, s| a | s))
    }

    pub fn unit_generators(&self) -> Result<Vec<usize>> {
        if self.is_trivial()? {
            return Ok(Vec::new());
        }
        let pmax = self.nonunit_mask()?;
        Ok((0..self.num_gens()).filter(|&i| pmax >> i & 1 == 0).collect())
    }

    pub fn is_unit(&self, e: &Element) -> Result<bool> {
        let e = self.normal_form(e)?;
        match e.exponents() {
            None => Ok(false),
            Some(m) => Ok(mask_of(m) & self.nonunit_mask()? == 0),
        }
    }

    /// An element is nilpotent exactly when it lies in every prime.
    pub fn is_nilpotent(&self, e: &Element) -> Result<bool> {
        let e = self.normal_form(e)?;
        match e.exponents() {
            None => Ok(true),
            Some(m) => {
                let s = mask_of(m);
                Ok(self.prime_masks()?.iter().all(|p| p & s != 0))
            }
        }
    }

    /// Minimal generator sets meeting every prime; their products generate
    /// the nilradical.
    pub(crate) fn minimal_nil_supports(&self) -> Result<Vec<u64>> {
        let primes = self.prime_masks()?;
        let pmax = primes.iter().fold(0, |a, s| a | s);
        let gens: Vec<usize> = (0..self.num_gens()).filter(|&i| pmax >> i & 1 == 1).collect();
        let mut found: Vec<u64> = Vec::new();
        let mut subsets: Vec<u64> = (0u64..(1u64 << gens.len()))
            .map(|sub| {
                gens.iter()
                    .enumerate()
                    .filter(|(k, _)| sub >> k & 1 == 1)
                    .fold(0u64, |acc, (_, &g)| acc | (1 << g))
            })
            .collect();
        subsets.sort_by_key(|s| (s.count_ones(), s.reverse_bits()));
        for t in subsets {
            if found.iter().any(|f| f & t == *f) {
                continue;
            }
            if primes.iter().all(|p| p & t != 0) {
                found.push(t);
            }
        }
        Ok(found)
    }

    pub fn idempotents(&self, degree_bound: u32) -> Result<Idempotents> {
        if degree_bound == 0 {
            return Err(Error::InvalidPresentation("degree bound must be positive".into()));
        }
        let n = self.num_gens();
        if self.is_trivial()? {
            return Ok(Idempotents { elements: vec![Element::Zero], complete: true });
        }
        let primes = self.prime_masks()?;
        let rels = self.all_relations();
        let pattern = |s: u64| -> Vec<bool> { primes.iter().map(|p| p & s != 0).collect() };
        let gen_patterns: Vec<Vec<bool>> = (0..n).map(|g| pattern(1 << g)).collect();

        let mut realized: BTreeSet<Vec<bool>> = BTreeSet::new();
        realized.insert(vec![false; primes.len()]);
        for gp in &gen_patterns {
            let extra: Vec<Vec<bool>> = realized
                .iter()
                .map(|c| c.iter().zip(gp).map(|(a, b)| *a || *b).collect())
                .collect();
            realized.extend(extra);
        }

        let mut elements = vec![Element::Zero, Element::one(n)];
        let mut complete = true;
        for class in &realized {
            if class.iter().all(|&b| !b) || class.iter().all(|&b| b) {
                continue;
            }
            let star: Vec<usize> = (0..n)
                .filter(|&g| gen_patterns[g].iter().zip(class).all(|(a, c)| !a || *c))
                .collect();
            let q: u64 = primes
                .iter()
                .zip(class)
                .filter(|(_, &c)| !c)
                .fold(0, |acc, (p, _)| acc | p);
            let equations: Vec<Vec<i64>> = rels
                .iter()
                .filter_map(|r| {
                    let rhs = r.rhs.as_ref()?;
                    if (mask_of(&r.lhs) | mask_of(rhs)) & q != 0 {
                        return None;
                    }
                    Some(star.iter().map(|&g| i64::from(r.lhs[g]) - i64::from(rhs[g])).collect())
                })
                .collect();
            let pos = positive_support(star.len(), &equations);
            let allowed: Vec<usize> = star.iter().zip(&pos).filter(|(_, &p)| !p).map(|(&g, _)| g).collect();
            let allowed_mask = allowed.iter().fold(0u64, |a, &g| a | 1 << g);
            if pattern(allowed_mask) != *class {
                continue;
            }
            match self.search_idempotent(&allowed, class, &pattern, degree_bound)? {
                (Some(e), _) => elements.push(e),
                (None, true) => {}
                (None, false) => complete = false,
            }
        }
        elements.sort_by(element_order);
        elements.dedup();
        Ok(Idempotents { elements, complete })
    }

    /// Breadth-first search over normal forms supported on `allowed`.
    /// Returns the idempotent of the class if found, and whether the
    /// search space was exhausted.
    fn search_idempotent(
        &self,
        allowed: &[usize],
        class: &[bool],
        pattern: &dyn Fn(u64) -> Vec<bool>,
        bound: u32,
    ) -> Result<(Option<Element>, bool)> {
        let sys = self.rewrite_system()?;
        let n = self.num_gens();
        let mut layer = vec![vec![0u32; n]];
        for _ in 0..bound {
            let mut next = BTreeSet::new();
            for m in &layer {
                for &g in allowed {
                    let mut c = m.clone();
                    c[g] += 1;
                    if !sys.is_reducible(&c) {
                        next.insert(c);
                    }
                }
            }
            if next.is_empty() {
                return Ok((None, true));
            }
            for m in &next {
                if pattern(mask_of(m)) != class {
                    continue;
                }
                let e = Element::Mono(m.clone());
                if sys.reduce(&e.pow(2)) == e {
                    return Ok((Some(e), true));
                }
            }
            layer = next.into_iter().collect();
        }
        Ok((None, false))
    }

    pub fn is_separated(&self, degree_bound: u32) -> Result<Separation> {
        if degree_bound == 0 {
            return Err(Error::InvalidPresentation("degree bound must be positive".into()));
        }
        let (forms, exhausted) = self.normal_forms_up_to(degree_bound)?;
        let sys = self.rewrite_system()?;
        for x in &forms {
            for y in forms.iter().filter(|y| !y.is_one()) {
                if sys.reduce(&x.mul(y)) == *x {
                    return Ok(Separation {
                        separated: false,
                        witness: Some((x.clone(), y.clone())),
                        complete: true,
                    });
                }
            }
        }
        Ok(Separation { separated: true, witness: None, complete: exhausted })
    }

    /// Prime ideals of `Idem(M)`. Each is `{f : fe ≠ e}` for a unique
    /// nonzero idempotent `e`, namely the product of its complement.
    pub fn adm(&self, degree_bound: u32) -> Result<Vec<AdmBlock>> {
        let idem = self.idempotents(degree_bound)?;
        if !idem.complete {
            return Err(Error::IncompleteIdempotents(degree_bound));
        }
        self.adm_from(&idem.elements)
    }

    pub(crate) fn adm_from(&self, idem: &[Element]) -> Result<Vec<AdmBlock>> {
        let sys = self.rewrite_system()?;
        let mut blocks = Vec::new();
        for e in idem.iter().filter(|e| !e.is_zero()) {
            let (r, rc): (Vec<Element>, Vec<Element>) =
                idem.iter().cloned().partition(|f| sys.reduce(&f.mul(e)) != *e);
            let maximal: Vec<&Element> = r
                .iter()
                .filter(|g| {
                    !g.is_zero()
                        && !r
                            .iter()
                            .any(|h| h != *g && sys.reduce(&g.mul(h)) == **g)
                })
                .collect();
            let label = if maximal.is_empty() {
                "(0)".to_string()
            } else {
                let names: Vec<String> = maximal.iter().map(|g| self.display(g)).collect();
                format!("({})", names.join(","))
            };
            blocks.push(AdmBlock { r, r_complement: rc, label });
        }
        blocks.sort_by(|a, b| {
            a.r.len().cmp(&b.r.len()).then_with(|| {
                let ka: Vec<String> = a.r.iter().map(|e| self.display(e)).collect();
                let kb: Vec<String> = b.r.iter().map(|e| self.display(e)).collect();
                ka.cmp(&kb)
            })
        });
        Ok(blocks)
    }

    /// Sends `r` to 0 and its complement to 1.
    pub fn component(&self, block: &AdmBlock) -> Result<BinoidPresentation> {
        let sys = self.rewrite_system()?;
        let normalize = |v: &[Element]| -> Vec<Element> {
            let mut v: Vec<Element> = v.iter().map(|e| sys.reduce(e)).collect();
            v.sort_by(element_order);
            v
        };
        let idem = {
            let mut all: Vec<Element> = block.r.iter().chain(&block.r_complement).map(|e| sys.reduce(e)).collect();
            all.sort_by(element_order);
            all.dedup();
            all
        };
        let valid = self
            .adm_from(&idem)?
            .iter()
            .any(|b| normalize(&b.r) == normalize(&block.r) && normalize(&b.r_complement) == normalize(&block.r_complement));
        let idempotent = |e: &Element| sys.reduce(&e.mul(e)) == *e;
        if !valid || !idem.iter().all(idempotent) {
            return Err(Error::InvalidBlock(block.label.clone()));
        }
        let n = self.num_gens();
        let mut rels = self.relations().to_vec();
        for e in block.r.iter().filter(|e| !e.is_zero()) {
            rels.extend(Relation::from_elements(e, &Element::Zero));
        }
        for e in block.r_complement.iter().filter(|e| !e.is_one()) {
            rels.extend(Relation::from_elements(e, &Element::one(n)));
        }
        Ok(self.with_relations(rels))
    }
}
