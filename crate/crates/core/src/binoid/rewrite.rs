//! Commutative rewriting on exponent vectors.
//!
//! Relations `u = v` and `u = 0` are oriented by a degree-lexicographic order
//! and completed by critical pairs (the binomial analogue of Buchberger's
//! algorithm). For commutative presentations completion always terminates by
//! Dickson's lemma; the step budget only guards pathological sizes.

use std::cmp::Ordering;
use std::collections::VecDeque;

use super::{Element, Monomial};

/// Degree-lexicographic order with a fixed variable priority.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    /// Variable indices from most to least significant.
    priority: Vec<usize>,
}

impl TermOrder {
    pub fn new(priority: Vec<usize>) -> Self {
        TermOrder { priority }
    }

    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
        let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
        da.cmp(&db).then_with(|| {
            for &i in &self.priority {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Monomial,
    /// `None` rewrites to zero.
    pub rhs: Option<Monomial>,
}

#[derive(Debug, Clone)]
pub struct RewriteSystem {
    order: TermOrder,
    rules: Vec<Rule>,
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn shares_variable(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).any(|(x, y)| *x > 0 && *y > 0)
}

impl Rule {
    /// Rewrites `m` (which `lhs` divides) at one position.
    fn apply(&self, m: &[u32]) -> Element {
        match &self.rhs {
            None => Element::Zero,
            Some(r) => Element::Mono(
                m.iter()
                    .zip(&self.lhs)
                    .zip(r)
                    .map(|((x, l), r)| x - l + r)
                    .collect(),
            ),
        }
    }
}

impl RewriteSystem {
    /// Completes the given relations. Returns the number of steps consumed
    /// as the error when the budget runs out.
    pub fn complete(
        relations: impl IntoIterator<Item = (Element, Element)>,
        order: TermOrder,
        budget: usize,
    ) -> Result<Self, usize> {
        let mut sys = RewriteSystem {
            order,
            rules: Vec::new(),
        };
        let mut pending: VecDeque<(Element, Element)> = relations.into_iter().collect();
        let mut steps = 0usize;
        while let Some((a, b)) = pending.pop_front() {
            steps += 1;
            if steps > budget {
                return Err(steps);
            }
            let a = sys.reduce(&a);
            let b = sys.reduce(&b);
            let rule = match (a, b) {
                (x, y) if x == y => continue,
                (Element::Zero, Element::Mono(m)) | (Element::Mono(m), Element::Zero) => Rule {
                    lhs: m,
                    rhs: None,
                },
                (Element::Mono(x), Element::Mono(y)) => {
                    if sys.order.compare(&x, &y) == Ordering::Greater {
                        Rule { lhs: x, rhs: Some(y) }
                    } else {
                        Rule { lhs: y, rhs: Some(x) }
                    }
                }
                (Element::Zero, Element::Zero) => continue,
            };

            let mut kept = Vec::with_capacity(sys.rules.len());
            for r in sys.rules.drain(..) {
                if divides(&rule.lhs, &r.lhs) {
                    let rhs = r.rhs.map_or(Element::Zero, Element::Mono);
                    pending.push_back((Element::Mono(r.lhs), rhs));
                } else {
                    kept.push(r);
                }
            }
            sys.rules = kept;

            for r in &sys.rules {
                if !shares_variable(&r.lhs, &rule.lhs) {
                    continue;
                }
                let lcm: Monomial = r.lhs.iter().zip(&rule.lhs).map(|(x, y)| *x.max(y)).collect();
                pending.push_back((rule.apply(&lcm), r.apply(&lcm)));
            }
            sys.rules.push(rule);

            for i in 0..sys.rules.len() {
                if let Some(rhs) = sys.rules[i].rhs.clone() {
                    let reduced = sys.reduce(&Element::Mono(rhs));
                    sys.rules[i].rhs = match reduced {
                        Element::Zero => None,
                        Element::Mono(m) => Some(m),
                    };
                }
            }
        }
        sys.rules
            .sort_by(|a, b| sys.order.compare(&a.lhs, &b.lhs).then_with(|| a.lhs.cmp(&b.lhs)));
        Ok(sys)
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Whether some rule applies to `m`.
    pub fn is_reducible(&self, m: &[u32]) -> bool {
        self.rules.iter().any(|r| divides(&r.lhs, m))
    }

    pub fn reduce(&self, e: &Element) -> Element {
        let Element::Mono(m) = e else {
            return Element::Zero;
        };
        let mut cur = m.clone();
        loop {
            let Some(rule) = self.rules.iter().find(|r| divides(&r.lhs, &cur)) else {
                return Element::Mono(cur);
            };
            match rule.apply(&cur) {
                Element::Zero => return Element::Zero,
                Element::Mono(next) => cur = next,
            }
        }
    }
}
