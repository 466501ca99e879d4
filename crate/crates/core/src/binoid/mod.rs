//! Finitely presented commutative binoids.

mod document;
mod grading;
mod hom;
mod quotient;
pub mod rewrite;
mod structure;
mod units;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use rewrite::{RewriteSystem, TermOrder};

pub use document::{BinoidDocument, ExponentMap, HomDocument, ImageDocument, RelationDocument, RhsDocument};
pub use hom::BinoidHom;
pub use structure::{AdmBlock, Idempotents, PrimeIdeal, Separation};
pub use units::UnitGroup;

pub const DEFAULT_COMPLETION_BUDGET: usize = 10_000;
pub const DEFAULT_DEGREE_BOUND: u32 = 12;
pub const DEFAULT_SPEC_CAP: usize = 20;

/// Exponent vector indexed like the generators of a presentation.
pub type Monomial = Vec<u32>;

/// A binoid element: zero, or a monomial in the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Element {
    Zero,
    Mono(Monomial),
}

impl Element {
    pub fn one(n: usize) -> Self {
        Element::Mono(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut m = vec![0; n];
        m[i] = 1;
        Element::Mono(m)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Element::Zero)
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Element::Mono(m) if m.iter().all(|&e| e == 0))
    }

    pub fn exponents(&self) -> Option<&[u32]> {
        match self {
            Element::Zero => None,
            Element::Mono(m) => Some(m),
        }
    }

    pub fn degree(&self) -> u32 {
        self.exponents().map_or(0, |m| m.iter().sum())
    }

    /// Generators occurring with positive exponent.
    pub fn support(&self) -> BTreeSet<usize> {
        self.exponents()
            .map(|m| (0..m.len()).filter(|&i| m[i] > 0).collect())
            .unwrap_or_default()
    }

    /// Product of representatives; not normalized.
    pub fn mul(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Mono(a), Element::Mono(b)) => {
                Element::Mono(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => Element::Zero,
        }
    }

    pub fn pow(&self, k: u32) -> Element {
        match self {
            Element::Zero if k == 0 => panic!("0^0 is not defined on representatives"),
            Element::Zero => Element::Zero,
            Element::Mono(m) => Element::Mono(m.iter().map(|e| e * k).collect()),
        }
    }

    /// Pads with zero exponents for generators appended to a presentation.
    pub fn extended(&self, n: usize) -> Element {
        match self {
            Element::Zero => Element::Zero,
            Element::Mono(m) => {
                let mut m = m.clone();
                m.resize(n, 0);
                Element::Mono(m)
            }
        }
    }
}

/// A defining relation `lhs = rhs` or `lhs = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: Monomial,
    pub rhs: Option<Monomial>,
}

impl Relation {
    pub fn binomial(lhs: Monomial, rhs: Monomial) -> Self {
        Relation { lhs, rhs: Some(rhs) }
    }

    pub fn zero(lhs: Monomial) -> Self {
        Relation { lhs, rhs: None }
    }

    pub fn from_elements(a: &Element, b: &Element) -> Option<Self> {
        match (a, b) {
            (Element::Mono(x), Element::Mono(y)) => Some(Relation::binomial(x.clone(), y.clone())),
            (Element::Mono(x), Element::Zero) | (Element::Zero, Element::Mono(x)) => {
                Some(Relation::zero(x.clone()))
            }
            (Element::Zero, Element::Zero) => None,
        }
    }

    fn extended(&self, n: usize) -> Relation {
        let pad = |m: &Monomial| {
            let mut m = m.clone();
            m.resize(n, 0);
            m
        };
        Relation {
            lhs: pad(&self.lhs),
            rhs: self.rhs.as_ref().map(pad),
        }
    }

    fn sides(&self) -> (Element, Element) {
        (
            Element::Mono(self.lhs.clone()),
            self.rhs.clone().map_or(Element::Zero, Element::Mono),
        )
    }
}

/// Generators, binomial and zero relations, and declared inverse pairs.
///
/// The rewriting system is completed at construction; a presentation whose
/// completion exceeds the budget is kept but flagged untamed.
#[derive(Debug, Clone)]
pub struct BinoidPresentation {
    gens: Vec<String>,
    /// Symmetric pairing of declared inverses.
    inverse: Vec<Option<usize>>,
    relations: Vec<Relation>,
    budget: usize,
    system: Option<Arc<RewriteSystem>>,
}

impl BinoidPresentation {
    pub fn new(
        gens: Vec<String>,
        inverses: Vec<(String, String)>,
        relations: Vec<Relation>,
    ) -> Result<Self> {
        Self::with_budget(gens, inverses, relations, DEFAULT_COMPLETION_BUDGET)
    }

    /// Inverse names missing from `gens` are appended as new generators.
    pub fn with_budget(
        mut gens: Vec<String>,
        inverses: Vec<(String, String)>,
        relations: Vec<Relation>,
        budget: usize,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &gens {
            if g.is_empty() {
                return Err(Error::InvalidPresentation("empty generator name".into()));
            }
            if !seen.insert(g.clone()) {
                return Err(Error::InvalidPresentation(format!("duplicate generator {g}")));
            }
        }
        let base = gens.len();
        for (_, inv) in &inverses {
            if !seen.contains(inv) {
                seen.insert(inv.clone());
                gens.push(inv.clone());
            }
        }
        let index = |name: &str| gens.iter().position(|g| g == name);
        let mut inverse = vec![None; gens.len()];
        for (g, h) in &inverses {
            let gi = index(g).ok_or_else(|| Error::UnknownGenerator(g.clone()))?;
            let hi = index(h).expect("inverse generator registered above");
            if gi == hi || inverse[gi].is_some() || inverse[hi].is_some() {
                return Err(Error::InvalidPresentation(format!(
                    "inverse pairing {g}/{h} is not a matching"
                )));
            }
            inverse[gi] = Some(hi);
            inverse[hi] = Some(gi);
        }
        let n = gens.len();
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            if r.lhs.len() != base && r.lhs.len() != n {
                return Err(Error::InvalidPresentation(format!(
                    "relation has {} exponents for {} generators",
                    r.lhs.len(),
                    n
                )));
            }
            if let Some(rhs) = &r.rhs {
                if rhs.len() != r.lhs.len() {
                    return Err(Error::InvalidPresentation("relation sides differ in length".into()));
                }
            }
            rels.push(r.extended(n));
        }
        Ok(Self::assemble(gens, inverse, rels, budget))
    }

    fn assemble(
        gens: Vec<String>,
        inverse: Vec<Option<usize>>,
        relations: Vec<Relation>,
        budget: usize,
    ) -> Self {
        let mut pres = BinoidPresentation {
            gens,
            inverse,
            relations,
            budget,
            system: None,
        };
        pres.system = pres.complete().map(Arc::new);
        pres
    }

    fn complete(&self) -> Option<RewriteSystem> {
        let n = self.gens.len();
        let mut priority: Vec<usize> = (0..n).collect();
        priority.sort_by(|&a, &b| self.gens[a].cmp(&self.gens[b]));
        let mut rels: Vec<(Element, Element)> = self.relations.iter().map(Relation::sides).collect();
        for (g, h) in self.inverse_pairs() {
            let mut m = vec![0; n];
            m[g] += 1;
            m[h] += 1;
            rels.push((Element::Mono(m), Element::one(n)));
        }
        match RewriteSystem::complete(rels, TermOrder::new(priority), self.budget) {
            Ok(sys) => Some(sys),
            Err(steps) => {
                log::warn!("completion stopped after {steps} steps; presentation is untamed");
                None
            }
        }
    }

    /// Same generators and inverses with a different relation list.
    pub(crate) fn with_relations(&self, relations: Vec<Relation>) -> Self {
        Self::assemble(self.gens.clone(), self.inverse.clone(), relations, self.budget)
    }

    /// Appends generators (optionally paired as inverses of existing ones)
    /// and relations over the enlarged generator set.
    pub(crate) fn extend(
        &self,
        new_gens: Vec<(String, Option<usize>)>,
        extra: Vec<Relation>,
    ) -> Self {
        let n = self.gens.len() + new_gens.len();
        let mut gens = self.gens.clone();
        let mut inverse = self.inverse.clone();
        inverse.resize(n, None);
        for (name, inv) in new_gens {
            let i = gens.len();
            gens.push(name);
            if let Some(j) = inv {
                inverse[i] = Some(j);
                inverse[j] = Some(i);
            }
        }
        let mut relations: Vec<Relation> = self.relations.iter().map(|r| r.extended(n)).collect();
        relations.extend(extra.into_iter().map(|r| r.extended(n)));
        Self::assemble(gens, inverse, relations, self.budget)
    }

    pub fn gens(&self) -> &[String] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Declared inverse pairs `(g, g⁻¹)` with `g` the earlier generator.
    pub fn inverse_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.gens.len())
            .filter_map(|i| self.inverse[i].filter(|&j| i < j).map(|j| (i, j)))
            .collect()
    }

    pub fn declared_inverse(&self, i: usize) -> Option<usize> {
        self.inverse[i]
    }

    /// All defining relations, declared inverse relations included.
    pub fn all_relations(&self) -> Vec<Relation> {
        let n = self.gens.len();
        let mut out = self.relations.clone();
        for (g, h) in self.inverse_pairs() {
            let mut m = vec![0; n];
            m[g] = 1;
            m[h] = 1;
            out.push(Relation::binomial(m, vec![0; n]));
        }
        out
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.gens
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn is_untamed(&self) -> bool {
        self.system.is_none()
    }

    pub fn rewrite_system(&self) -> Result<&RewriteSystem> {
        self.system
            .as_deref()
            .ok_or(Error::UntamedPresentation(self.budget))
    }

    pub fn one(&self) -> Element {
        Element::one(self.gens.len())
    }

    pub fn generator(&self, i: usize) -> Element {
        Element::generator(self.gens.len(), i)
    }

    pub fn normal_form(&self, e: &Element) -> Result<Element> {
        if let Some(m) = e.exponents() {
            if m.len() != self.gens.len() {
                return Err(Error::InvalidPresentation(format!(
                    "element has {} exponents for {} generators",
                    m.len(),
                    self.gens.len()
                )));
            }
        }
        Ok(self.rewrite_system()?.reduce(e))
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.normal_form(&a.mul(b))
    }

    pub fn equal(&self, a: &Element, b: &Element) -> Result<bool> {
        Ok(self.normal_form(a)? == self.normal_form(b)?)
    }

    /// Whether `0 = 1` holds.
    pub fn is_trivial(&self) -> Result<bool> {
        Ok(self.normal_form(&self.one())?.is_zero())
    }

    /// Builds an element from signed exponents; negative exponents are
    /// allowed on generators with a declared inverse.
    pub fn element_from_exponents(&self, exps: &BTreeMap<String, i64>) -> Result<Element> {
        let mut m = vec![0u32; self.gens.len()];
        for (name, &e) in exps {
            let i = self.generator_index(name)?;
            let (slot, mag) = if e < 0 {
                let j = self.inverse[i].ok_or_else(|| {
                    Error::InvalidPresentation(format!("negative exponent on {name}, which has no inverse"))
                })?;
                (j, e.unsigned_abs())
            } else {
                (i, e as u64)
            };
            let mag = u32::try_from(mag)
                .map_err(|_| Error::InvalidPresentation(format!("exponent of {name} too large")))?;
            m[slot] += mag;
        }
        Ok(Element::Mono(m))
    }

    /// Parses `1`, `0`, or a product such as `x^2*y` / `x^2 y` / `y^-1`.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        match parse_product(s)? {
            None => Ok(Element::Zero),
            Some(factors) => {
                let mut exps = BTreeMap::new();
                for (name, e) in factors {
                    *exps.entry(name).or_insert(0) += e;
                }
                self.element_from_exponents(&exps)
            }
        }
    }

    /// Normal form of a word written as in [`BinoidPresentation::parse_element`].
    pub fn normal_form_word(&self, w: &str) -> Result<Element> {
        self.normal_form(&self.parse_element(w)?)
    }

    /// Signed exponents per generator, combining declared inverse pairs
    /// onto the earlier generator of each pair.
    pub fn signed_exponents(&self, e: &Element) -> Option<Vec<i64>> {
        let m = e.exponents()?;
        let mut out: Vec<i64> = m.iter().map(|&x| i64::from(x)).collect();
        for (g, h) in self.inverse_pairs() {
            out[g] -= out[h];
            out[h] = 0;
        }
        Some(out)
    }

    pub fn display(&self, e: &Element) -> String {
        let Some(signed) = self.signed_exponents(e) else {
            return "0".into();
        };
        let parts: Vec<String> = signed
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| match x {
                1 => self.gens[i].clone(),
                _ => format!("{}^{}", self.gens[i], x),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Nonzero normal forms of degree at most `bound`, in degree order, plus
    /// whether that list is every nonzero normal form.
    pub fn normal_forms_up_to(&self, bound: u32) -> Result<(Vec<Element>, bool)> {
        let sys = self.rewrite_system()?;
        let n = self.gens.len();
        if self.is_trivial()? {
            return Ok((Vec::new(), true));
        }
        let mut out = vec![Element::one(n)];
        let mut layer = vec![vec![0u32; n]];
        for _ in 0..bound {
            let mut next = BTreeSet::new();
            for m in &layer {
                for i in 0..n {
                    let mut c = m.clone();
                    c[i] += 1;
                    if !sys.is_reducible(&c) {
                        next.insert(c);
                    }
                }
            }
            if next.is_empty() {
                return Ok((out, true));
            }
            layer = next.into_iter().collect();
            out.extend(layer.iter().cloned().map(Element::Mono));
        }
        let exhausted = layer.iter().all(|m| {
            (0..n).all(|i| {
                let mut c = m.clone();
                c[i] += 1;
                sys.is_reducible(&c)
            })
        });
        Ok((out, exhausted))
    }
}

impl fmt::Display for BinoidPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.gens.len();
        let declared: Vec<String> = (0..n)
            .filter(|&i| self.inverse[i].is_none_or(|j| i < j))
            .map(|i| match self.inverse[i] {
                Some(_) => format!("{}*", self.gens[i]),
                None => self.gens[i].clone(),
            })
            .collect();
        write!(f, "{}", declared.join(", "))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|r| {
                    let (a, b) = r.sides();
                    format!("{} = {}", self.display(&a), self.display(&b))
                })
                .collect();
            write!(f, " | {}", rels.join(", "))?;
        }
        Ok(())
    }
}

/// `"x, y*, z | x^2 y = z^2, x z = 0"`: a trailing `*` declares an inverse
/// named with suffix `inv`.
impl FromStr for BinoidPresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (gen_part, rel_part) = match s.split_once('|') {
            Some((g, r)) => (g, Some(r)),
            None => (s, None),
        };
        let mut gens = Vec::new();
        let mut inverses = Vec::new();
        for tok in gen_part.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok.strip_suffix('*') {
                Some(base) => {
                    let base = base.trim().to_string();
                    inverses.push((base.clone(), format!("{base}inv")));
                    gens.push(base);
                }
                None => gens.push(tok.to_string()),
            }
        }
        let skeleton = BinoidPresentation::new(gens.clone(), inverses.clone(), Vec::new())?;
        let mut relations = Vec::new();
        for rel in rel_part.into_iter().flat_map(|r| r.split(',')) {
            let rel = rel.trim();
            if rel.is_empty() {
                continue;
            }
            let (l, r) = rel
                .split_once('=')
                .ok_or_else(|| Error::ParseError(format!("relation without '=': {rel}")))?;
            if l.trim().is_empty() || r.trim().is_empty() {
                return Err(Error::ParseError(format!("relation with an empty side: {rel}")));
            }
            let a = skeleton.parse_element(l)?;
            let b = skeleton.parse_element(r)?;
            match Relation::from_elements(&a, &b) {
                Some(r) => relations.push(r),
                None => continue,
            }
        }
        BinoidPresentation::new(gens, inverses, relations)
    }
}

/// Splits a product into `(name, exponent)` factors; `None` means zero.
fn parse_product(s: &str) -> Result<Option<Vec<(String, i64)>>> {
    let s = s.trim();
    if s == "0" {
        return Ok(None);
    }
    if s == "1" || s.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let mut out = Vec::new();
    for tok in s.split(|c: char| c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => {
                let e: i64 = e
                    .parse()
                    .map_err(|_| Error::ParseError(format!("bad exponent in {tok}")))?;
                (n, e)
            }
            None => (tok, 1),
        };
        if name == "1" {
            continue;
        }
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'') {
            return Err(Error::ParseError(format!("bad factor {tok}")));
        }
        out.push((name.to_string(), exp));
    }
    Ok(Some(out))
}
