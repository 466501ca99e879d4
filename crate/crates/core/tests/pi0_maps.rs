use std::collections::BTreeMap;
use std::sync::Arc;

use binoid_topology::binoid::{BinoidHom, BinoidPresentation, Element};
use binoid_topology::homology::homology;
use binoid_topology::pi0::{induced_pi0_map, pi0_affine, Pi0Map, Pi0Point};
use binoid_topology::scheme::SchemeDiagram;

fn pres(s: &str) -> Arc<BinoidPresentation> {
    Arc::new(s.parse().unwrap_or_else(|e| panic!("{s}: {e}")))
}

fn inverse_in(n: &BinoidPresentation, e: &Element) -> Element {
    let exps: BTreeMap<String, i64> = n
        .signed_exponents(e)
        .unwrap()
        .iter()
        .enumerate()
        .map(|(i, &k)| (n.gens()[i].clone(), -k))
        .collect();
    n.normal_form(&n.element_from_exponents(&exps).unwrap()).unwrap()
}

/// `images` lists the images of the non-inverse generators; images of
/// declared inverses follow.
fn hom(m: &Arc<BinoidPresentation>, n: &Arc<BinoidPresentation>, images: &[&str]) -> BinoidHom {
    let mut imgs: Vec<Option<Element>> = vec![None; m.num_gens()];
    let inverse_slots: Vec<usize> = m.inverse_pairs().iter().map(|&(_, j)| j).collect();
    let mut given = images.iter();
    for (i, slot) in imgs.iter_mut().enumerate() {
        if !inverse_slots.contains(&i) {
            *slot = Some(n.parse_element(given.next().unwrap()).unwrap());
        }
    }
    assert!(given.next().is_none());
    for (i, j) in m.inverse_pairs() {
        imgs[j] = Some(inverse_in(n, imgs[i].as_ref().unwrap()));
    }
    BinoidHom::new(m.clone(), n.clone(), imgs.into_iter().map(Option::unwrap).collect()).unwrap()
}

/// Composable pairs `(f, g)` with `f: M → N`, `g: N → P`.
fn pairs() -> Vec<(BinoidHom, BinoidHom)> {
    let z = pres("t*");
    let z2 = pres("u*, v*");
    let c6 = pres("g | g^6 = 1");
    let m2 = pres("x, y, z | x y = z^2");
    let m12 = pres("x*, y, z | x y = z^2");
    let m123 = pres("x*, y*, z* | x y = z^2");
    let free = pres("a, b");
    let free_a = pres("a*, b");
    let free_ab = pres("a*, b*");
    let idem = pres("x, y | x^2 y = x");
    let idem_y = pres("x, y* | x^2 y = x");
    vec![
        (hom(&z, &z2, &["u*v"]), hom(&z2, &z, &["t", "t^-1"])),
        (hom(&z, &z, &["t^3"]), hom(&z, &z2, &["u^2*v"])),
        (hom(&z2, &z2, &["u*v", "v"]), hom(&z2, &z2, &["v", "u"])),
        (hom(&c6, &c6, &["g^5"]), hom(&c6, &c6, &["g^2"])),
        (hom(&c6, &z, &["1"]), hom(&z, &z2, &["u"])),
        (hom(&m2, &m12, &["x", "y", "z"]), hom(&m12, &m123, &["x", "y", "z"])),
        (hom(&free, &free_a, &["a", "b"]), hom(&free_a, &free_ab, &["a", "b"])),
        (hom(&free_ab, &free_ab, &["b", "a*b"]), hom(&free_ab, &z2, &["u^-1", "v"])),
        (hom(&idem, &idem_y, &["x", "y"]), hom(&idem_y, &idem_y, &["x", "y"])),
        (hom(&free, &idem, &["x", "y"]), hom(&idem, &idem_y, &["x", "y"])),
    ]
}

fn all_maps() -> Vec<(String, BinoidHom, Pi0Map)> {
    let mut out = Vec::new();
    for (k, (f, g)) in pairs().into_iter().enumerate() {
        let fg = f.then(&g).unwrap();
        for (name, h) in [("f", f), ("g", g), ("g.f", fg)] {
            let map = induced_pi0_map(&h, 12).unwrap();
            out.push((format!("pair {k} {name}"), h, map));
        }
    }
    out
}

fn xor(a: &[bool], b: &[bool]) -> Vec<bool> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

#[test]
fn blockwise_maps_are_linear() {
    for (name, h, map) in all_maps() {
        let pn = pi0_affine(&h.target, 12).unwrap();
        let points = pn.points();
        for (b, s) in &points {
            for (c, t) in &points {
                if b != c {
                    continue;
                }
                let (rb, fs) = map.apply(&(*b, s.clone()));
                let (_, ft) = map.apply(&(*c, t.clone()));
                let (rsum, fsum) = map.apply(&(*b, xor(s, t)));
                assert_eq!(rsum, rb, "{name}");
                assert_eq!(fsum, xor(&fs, &ft), "{name}");
            }
        }
    }
}

#[test]
fn fibers_are_uniform_without_idempotents() {
    for (name, h, map) in all_maps() {
        let pm = pi0_affine(&h.source, 12).unwrap();
        let pn = pi0_affine(&h.target, 12).unwrap();
        if pm.blocks.len() != 1 || pn.blocks.len() != 1 {
            continue;
        }
        let mut fibers: BTreeMap<Pi0Point, usize> = BTreeMap::new();
        for p in pn.points() {
            *fibers.entry(map.apply(&p)).or_insert(0) += 1;
        }
        let sizes: Vec<usize> = fibers.values().copied().collect();
        assert!(sizes.windows(2).all(|w| w[0] == w[1]), "{name}: {sizes:?}");
        assert_eq!(sizes.iter().sum::<usize>(), pn.point_count(), "{name}");
    }
}

#[test]
fn induced_maps_are_functorial() {
    for (k, (f, g)) in pairs().into_iter().enumerate() {
        let mf = induced_pi0_map(&f, 12).unwrap();
        let mg = induced_pi0_map(&g, 12).unwrap();
        let mgf = induced_pi0_map(&f.then(&g).unwrap(), 12).unwrap();
        let pp = pi0_affine(&g.target, 12).unwrap();
        for p in pp.points() {
            assert_eq!(mgf.apply(&p), mf.apply(&mg.apply(&p)), "pair {k}");
        }
        assert_eq!(mf.after(&mg), mgf, "pair {k}");
    }
}

#[test]
fn identity_induces_identity() {
    for s in ["t*", "x, y | x^2 y = x", "g | g^6 = 1", "u*, v*, w"] {
        let m = pres(s);
        let map = induced_pi0_map(&BinoidHom::identity(m.clone()), 12).unwrap();
        for p in pi0_affine(&m, 12).unwrap().points() {
            assert_eq!(map.apply(&p), p, "{s}");
        }
    }
}

#[test]
fn point_count_matches_affine_h0() {
    for s in ["t*", "x, y | x^2 y = x", "g | g^6 = 1", "u*, v*, w", "x, y | x y = 0", "x | x^2 = x"] {
        let m: BinoidPresentation = s.parse().unwrap();
        let count = pi0_affine(&m, 12).unwrap().point_count();
        let h = homology(&SchemeDiagram::affine(m), 12).unwrap();
        assert_eq!(h[0].rank, count, "{s}");
        assert!(h[0].torsion.is_empty());
        assert_eq!(h.len(), 1);
    }
}
