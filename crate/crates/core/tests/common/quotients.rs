//! Brute-force oracles for Rees quotients, unitization, reduction and booleanization.

use std::collections::BTreeSet;

use binoid_topology::binoid::{BinoidPresentation, Element};

pub const CORPUS: &[&str] = &[
    "x",
    "x, y",
    "x, y | x^2 y = x",
    "x, y | x y = 0",
    "x | x^2 = 0",
    "x | x^3 = x",
    "x, y | x^2 = y^2",
    "x, y, z | x y = z^2",
    "x, y, z | x^2 y = z^2",
    "x*",
    "x*, y",
    "x, y | x y = 1",
    "x | x^2 = x",
    "x, y | x^2 = x, y^2 = y",
    "x, y | x y = x",
    "x, y, z | x y z = 0",
    "x, y | x^2 = 0, y^3 = y",
    "g | g^6 = 1",
    "g | g^4 = 1",
    "x, y | x^2 = 1, y^2 = y",
    "x, y, z | x y = 0, y z = 0",
    "x, y | x^3 = 0, x y = y",
    "x*, y | x y = y",
];

const SEARCH_DEGREE: u32 = 6;

pub type Check = Result<(), String>;

pub fn pres(s: &str) -> BinoidPresentation {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn forms(m: &BinoidPresentation, bound: u32) -> Vec<Element> {
    let mut v = m.normal_forms_up_to(bound).unwrap().0;
    v.push(Element::Zero);
    v
}

/// Idempotents among normal forms of bounded degree, by squaring.
pub fn idempotent_oracle(m: &BinoidPresentation) -> BTreeSet<Element> {
    forms(m, SEARCH_DEGREE)
        .into_iter()
        .filter(|e| m.multiply(e, e).unwrap() == *e)
        .collect()
}

pub fn nilpotent_oracle(m: &BinoidPresentation, a: &Element) -> bool {
    (1..=16).any(|k| m.normal_form(&a.pow(k)).unwrap().is_zero())
}

pub fn invertible_oracle(m: &BinoidPresentation, a: &Element) -> bool {
    !a.is_zero() && forms(m, SEARCH_DEGREE).iter().any(|b| m.multiply(a, b).unwrap().is_one())
}

/// Nonzero elements some power of which is `1`.
pub fn torsion_unit_oracle(m: &BinoidPresentation) -> usize {
    forms(m, SEARCH_DEGREE)
        .iter()
        .filter(|e| !e.is_zero() && (1..=12).any(|k| m.normal_form(&e.pow(k)).unwrap().is_one()))
        .count()
}

fn witnesses(m: &BinoidPresentation) -> Vec<Element> {
    m.normal_forms_up_to(2).unwrap().0
}

pub fn corpus_is_tame() -> Check {
    ensure(CORPUS.len() >= 20, || "corpus too small".into())?;
    for s in CORPUS {
        ensure(!pres(s).is_untamed(), || format!("{s} is untamed"))?;
    }
    Ok(())
}

pub fn idempotents_agree() -> Check {
    for s in CORPUS {
        let m = pres(s);
        let lib: BTreeSet<Element> = m.idempotents(12).unwrap().elements.into_iter().collect();
        ensure(lib == idempotent_oracle(&m), || format!("{s}: idempotents differ"))?;
    }
    Ok(())
}

/// The idempotent map of a Rees quotient is onto with singleton fibers over
/// nonzero idempotents.
pub fn rees_quotient_idempotent_map() -> Check {
    for s in CORPUS {
        let m = pres(s);
        let idem_m = idempotent_oracle(&m);
        for a in witnesses(&m) {
            let q = m.rees_quotient(&a).unwrap();
            let images: Vec<Element> = idem_m.iter().map(|e| q.normal_form(e).unwrap()).collect();
            let image_set: BTreeSet<Element> = images.iter().cloned().collect();
            let idem_q = idempotent_oracle(&q);
            let ctx = || format!("{s} / ({})", m.display(&a));
            ensure(image_set == idem_q, || format!("{}: not onto", ctx()))?;
            for z in idem_q.iter().filter(|z| !z.is_zero()) {
                let fiber = images.iter().filter(|i| *i == z).count();
                ensure(fiber == 1, || format!("{}: fiber over {} has {fiber} elements", ctx(), q.display(z)))?;
            }
        }
    }
    Ok(())
}

pub fn reduction_keeps_units() -> Check {
    for s in CORPUS {
        let m = pres(s);
        let r = m.reduce().unwrap();
        ensure(m.unit_group(12).unwrap().group == r.unit_group(12).unwrap().group, || format!("{s}: units changed"))?;
        let twice = r.reduce().unwrap();
        ensure(r.booleanization_size().unwrap() == twice.booleanization_size().unwrap(), || {
            format!("{s}: reduction not idempotent")
        })?;
        for e in forms(&r, 4) {
            ensure(!nilpotent_oracle(&r, &e) || e.is_zero(), || {
                format!("{s}: {} is nilpotent after reduction", r.display(&e))
            })?;
        }
    }
    Ok(())
}

pub fn booleanization_under_quotients() -> Check {
    for s in CORPUS {
        let m = pres(s);
        let size = m.booleanization_size().unwrap();
        for a in witnesses(&m) {
            let rees = m.rees_quotient(&a).unwrap().booleanization_size().unwrap();
            let ok = if nilpotent_oracle(&m, &a) { rees == size } else { rees < size };
            ensure(ok, || format!("{s} / ({}): {rees} vs {size}", m.display(&a)))?;
            let unit = m.unitize_quotient(&a).unwrap().booleanization_size().unwrap();
            let ok = if invertible_oracle(&m, &a) { unit == size } else { unit < size };
            ensure(ok, || format!("{s} / ({} ~ 1): {unit} vs {size}", m.display(&a)))?;
        }
    }
    Ok(())
}

pub fn spec_shrinks_under_quotients() -> Check {
    for s in CORPUS {
        let m = pres(s);
        let primes = m.spec().unwrap().len();
        for a in witnesses(&m) {
            if nilpotent_oracle(&m, &a) || invertible_oracle(&m, &a) {
                continue;
            }
            let r = m.rees_quotient(&a).unwrap().spec().unwrap().len();
            let u = m.unitize_quotient(&a).unwrap().spec().unwrap().len();
            ensure(r < primes && u < primes, || format!("{s}, a = {}", m.display(&a)))?;
        }
    }
    Ok(())
}

pub fn components_have_trivial_idempotents() -> Check {
    for s in CORPUS {
        let m = pres(s);
        for block in m.adm(12).unwrap() {
            let c = m.component(&block).unwrap();
            let idem = idempotent_oracle(&c);
            ensure(idem.iter().all(|e| e.is_zero() || e.is_one()), || format!("{s}, block {}", block.label))?;
        }
    }
    Ok(())
}

pub fn normal_forms_are_stable() -> Check {
    for s in CORPUS {
        let m = pres(s);
        for e in forms(&m, 3) {
            let once = m.normal_form(&e).unwrap();
            ensure(once == m.normal_form(&once).unwrap(), || format!("{s}: normal form not stable"))?;
        }
        for r in m.all_relations() {
            let l = Element::Mono(r.lhs.clone());
            let rhs = r.rhs.clone().map_or(Element::Zero, Element::Mono);
            for w in forms(&m, 2) {
                ensure(m.multiply(&l, &w).unwrap() == m.multiply(&rhs, &w).unwrap(), || format!("{s}: relation fails"))?;
            }
        }
    }
    Ok(())
}

/// The subset run by the acceptance suite.
pub fn all() -> Check {
    corpus_is_tame()?;
    rees_quotient_idempotent_map()?;
    reduction_keeps_units()?;
    booleanization_under_quotients()
}
