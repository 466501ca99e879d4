//! Injectivity conditions under which the strict colimit of a diagram over
//! the Čech poset of an ordered `n`-cover computes the 2-colimit.
//!
//! For `I, J ⊆ {1..n}` the condition `B^I_J` asks that the colimit, over
//! the index sets `Y` with `I^c ⊊ Y ⊆ J^c`, of the object sets maps
//! injectively to the objects at `I^c`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::diagram::PosetDiagram;
use super::presentation::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub kind: &'static str,
    pub k: usize,
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ConditionReport {
    pub checks: Vec<ConditionCheck>,
}

impl ConditionReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&ConditionCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// The `(kind, k, I, J)` that must hold for an `n`-cover, without repeats.
pub fn required_conditions(n: usize) -> Vec<(&'static str, usize, Vec<usize>, Vec<usize>)> {
    let mut out: Vec<(&'static str, usize, Vec<usize>, Vec<usize>)> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push = |kind, k, i: Vec<usize>, j: Vec<usize>| {
        if seen.insert((i.clone(), j.clone())) {
            out.push((kind, k, i, j));
        }
    };
    for k in [n.checked_sub(1), n.checked_sub(2)].into_iter().flatten() {
        push("B1", k, (1..=k).collect(), Vec::new());
    }
    for k in 1..=n.saturating_sub(2) {
        let pool: Vec<usize> = (k + 2..=n).collect();
        for mask in 0u32..(1u32 << pool.len()) {
            let j: Vec<usize> = pool
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if j.len() + k + 2 < n {
                continue;
            }
            let mut i: Vec<usize> = (1..=k).collect();
            i.extend(&j);
            i.sort_unstable();
            push("B2", k, i, j);
        }
    }
    out
}

fn complement(n: usize, s: &[usize]) -> Vec<usize> {
    (1..=n).filter(|x| !s.contains(x)).collect()
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

pub fn check_condition(d: &PosetDiagram, n: usize, i: &[usize], j: &[usize]) -> (bool, Option<String>) {
    let ic = complement(n, i);
    let jc = complement(n, j);
    let Some(target) = d.node_by_key(&ic) else {
        return (true, None);
    };
    let range: Vec<usize> = (0..d.nodes.len())
        .filter(|&y| {
            let key = &d.nodes[y].key;
            key.len() > ic.len() && is_subset(&ic, key) && is_subset(key, &jc)
        })
        .collect();
    if range.is_empty() {
        return (true, None);
    }
    let mut offsets = Vec::new();
    let mut total = 0;
    for &y in &range {
        offsets.push(total);
        total += d.nodes[y].groupoid.objects().len();
    }
    let pos = |y: usize| range.iter().position(|&r| r == y);
    let mut uf = UnionFind::new(total);
    for a in &d.arrows {
        if let (Some(p), Some(q)) = (pos(a.from), pos(a.to)) {
            for (x, &y) in a.functor.object_map.iter().enumerate() {
                uf.union(offsets[p] + x, offsets[q] + y);
            }
        }
    }
    let mut hit: std::collections::BTreeMap<usize, (usize, usize)> = Default::default();
    for (p, &y) in range.iter().enumerate() {
        let Some(f) = d.composite(y, target) else {
            return (false, Some(format!("no arrow chain from {} to {}", d.nodes[y].label, d.nodes[target].label)));
        };
        for (x, &t) in f.object_map.iter().enumerate() {
            let class = uf.find(offsets[p] + x);
            if let Some(&(other_y, other_x)) = hit.get(&t) {
                let other_class = uf.find(offsets[pos(other_y).expect("in range")] + other_x);
                if other_class != class {
                    let tg = &d.nodes[target];
                    return (
                        false,
                        Some(format!(
                            "{}:{} and {}:{} both map to {}:{}",
                            d.nodes[other_y].label,
                            d.nodes[other_y].groupoid.objects()[other_x],
                            d.nodes[y].label,
                            d.nodes[y].groupoid.objects()[x],
                            tg.label,
                            tg.groupoid.objects()[t]
                        )),
                    );
                }
            } else {
                hit.insert(t, (y, x));
            }
        }
    }
    (true, None)
}

pub fn check_colimit_conditions(d: &PosetDiagram, n: usize) -> ConditionReport {
    let checks = required_conditions(n)
        .into_iter()
        .map(|(kind, k, i, j)| {
            let (passed, witness) = check_condition(d, n, &i, &j);
            ConditionCheck { kind, k, i, j, passed, witness }
        })
        .collect();
    ConditionReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cover_requirements() {
        let req = required_conditions(3);
        let pairs: Vec<(Vec<usize>, Vec<usize>)> = req.iter().map(|(_, _, i, j)| (i.clone(), j.clone())).collect();
        assert_eq!(
            pairs,
            vec![
                (vec![1, 2], vec![]),
                (vec![1], vec![]),
                (vec![1, 3], vec![3]),
            ]
        );
    }
}
