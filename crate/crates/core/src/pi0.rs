//! Connected components of real spectra and the maps between them.
//!
//! The real spectrum of `M` is homotopy discrete with one sign cube
//! `{±1}^{n_r}` per admissible block `r`, where `n_r` counts the `C₂`
//! factors of the unit group of `M(r)` tensored with `C₂`.

use std::sync::Arc;

use serde::Serialize;

use crate::binoid::{AdmBlock, BinoidHom, BinoidPresentation, Element, UnitGroup};
use crate::error::{Error, Result};
use crate::linalg::AbelianGroupData;

#[derive(Debug, Clone)]
pub struct Pi0Block {
    pub block: AdmBlock,
    pub n: usize,
    /// Sign basis of the block's unit group, as words in the generators.
    pub basis: Vec<String>,
    pub component: Arc<BinoidPresentation>,
    pub units: UnitGroup,
}

#[derive(Debug, Clone)]
pub struct Pi0Set {
    pub blocks: Vec<Pi0Block>,
}

/// A point: block index and sign vector (`true` is `−1`).
pub type Pi0Point = (usize, Vec<bool>);

pub fn n_r(g: &AbelianGroupData) -> usize {
    g.mod_two_rank()
}

pub fn sign_string(signs: &[bool]) -> String {
    signs.iter().map(|&s| if s { '-' } else { '+' }).collect()
}

impl Pi0Set {
    pub fn point_count(&self) -> usize {
        self.blocks.iter().map(|b| 1usize << b.n).sum()
    }

    /// All points, blockwise, sign vectors in binary counting order with the
    /// first coordinate most significant.
    pub fn points(&self) -> Vec<Pi0Point> {
        let mut out = Vec::with_capacity(self.point_count());
        for (bi, b) in self.blocks.iter().enumerate() {
            for k in 0..1usize << b.n {
                let signs = (0..b.n).map(|i| k >> (b.n - 1 - i) & 1 == 1).collect();
                out.push((bi, signs));
            }
        }
        out
    }

    pub fn index_of(&self, p: &Pi0Point) -> usize {
        let offset: usize = self.blocks[..p.0].iter().map(|b| 1usize << b.n).sum();
        offset + p.1.iter().fold(0usize, |acc, &s| acc << 1 | usize::from(s))
    }

    pub fn label(&self, p: &Pi0Point) -> String {
        let b = &self.blocks[p.0];
        if self.blocks.len() == 1 {
            sign_string(&p.1)
        } else {
            format!("{}{}", b.block.label, sign_string(&p.1))
        }
    }

    /// Torsion sizes summed over blocks.
    pub fn complex_component_count(&self) -> u64 {
        self.blocks.iter().map(|b| b.units.group.torsion_order()).sum()
    }
}

pub fn pi0_affine(m: &BinoidPresentation, degree_bound: u32) -> Result<Pi0Set> {
    let mut blocks = Vec::new();
    for block in m.adm(degree_bound)? {
        let component = Arc::new(m.component(&block)?);
        let units = component.unit_group(degree_bound)?;
        let basis = component.sign_basis_names(&units);
        blocks.push(Pi0Block {
            n: n_r(&units.group),
            basis,
            block,
            component,
            units,
        });
    }
    Ok(Pi0Set { blocks })
}

pub fn complex_component_count(m: &BinoidPresentation, degree_bound: u32) -> Result<u64> {
    Ok(pi0_affine(m, degree_bound)?.complex_component_count())
}

/// The map `π₀(N) → π₀(M)` induced by `f: M → N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pi0Map {
    /// For each block of `N`, the block of `M` it lands in.
    pub routing: Vec<usize>,
    /// Sign-cube dimension of each block of `N`.
    pub dims: Vec<usize>,
    /// For each block of `N`: entry `[i][j]` is the parity of the `j`-th
    /// sign coordinate of `f(bᵢ)`, `bᵢ` the `i`-th sign basis element of
    /// the routed block of `M`.
    pub matrices: Vec<Vec<Vec<bool>>>,
}

impl Pi0Map {
    pub fn apply(&self, p: &Pi0Point) -> Pi0Point {
        let (b, s) = p;
        let target = self.routing[*b];
        let signs = self.matrices[*b]
            .iter()
            .map(|row| row.iter().zip(s).fold(false, |acc, (&a, &x)| acc ^ (a && x)))
            .collect();
        (target, signs)
    }

    /// `self` after `other`: for `f: M → N`, `g: N → P`, the map of `g∘f`
    /// is `induced(f).after(induced(g))`.
    pub fn after(&self, other: &Pi0Map) -> Pi0Map {
        let routing = other.routing.iter().map(|&b| self.routing[b]).collect();
        let matrices = other
            .matrices
            .iter()
            .zip(&other.routing)
            .zip(&other.dims)
            .map(|((inner, &mid), &cols)| {
                let outer = &self.matrices[mid];
                outer
                    .iter()
                    .map(|row| {
                        (0..cols)
                            .map(|j| row.iter().zip(inner).fold(false, |acc, (&a, r)| acc ^ (a && r[j])))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Pi0Map {
            routing,
            dims: other.dims.clone(),
            matrices,
        }
    }
}

pub fn induced_pi0_map(f: &BinoidHom, degree_bound: u32) -> Result<Pi0Map> {
    let pm = pi0_affine(&f.source, degree_bound)?;
    let pn = pi0_affine(&f.target, degree_bound)?;
    induced_pi0_map_between(f, &pm, &pn)
}

/// As [`induced_pi0_map`], reusing precomputed `π₀` data of source and target.
pub fn induced_pi0_map_between(f: &BinoidHom, pm: &Pi0Set, pn: &Pi0Set) -> Result<Pi0Map> {
    let idem_m: Vec<Element> = pm
        .blocks
        .first()
        .map(|b| b.block.r.iter().chain(&b.block.r_complement).cloned().collect())
        .unwrap_or_default();
    let mut routing = Vec::new();
    let mut matrices = Vec::new();
    let dims = pn.blocks.iter().map(|b| b.n).collect();
    for bn in &pn.blocks {
        let mut pulled = Vec::new();
        for e in &idem_m {
            if bn.block.r.contains(&f.apply(e)?) {
                pulled.push(e.clone());
            }
        }
        pulled.sort();
        let target = pm
            .blocks
            .iter()
            .position(|bm| {
                let mut r = bm.block.r.clone();
                r.sort();
                r == pulled
            })
            .ok_or_else(|| Error::NotAHomomorphism(format!("preimage of block {} is not admissible", bn.block.label)))?;
        let bm = &pm.blocks[target];
        let mut matrix = Vec::with_capacity(bm.n);
        for i in 0..bm.n {
            let rep = bm.units.sign_basis_representative(i);
            let mut acc = vec![0i64; bn.units.generators.len()];
            for (k, &g) in bm.units.generators.iter().enumerate() {
                if rep[k] == 0 {
                    continue;
                }
                let image = bn.component.normal_form(&f.images()[g])?;
                if !bn.component.is_unit(&image)? {
                    return Err(Error::UnitExpressionFailure(format!(
                        "image of unit {} is not a unit in block {}",
                        f.source.gens()[g],
                        bn.block.label
                    )));
                }
                let m = image.exponents().expect("units are nonzero");
                for (slot, &h) in bn.units.generators.iter().enumerate() {
                    acc[slot] += rep[k] * i64::from(m[h]);
                }
            }
            matrix.push(bn.units.quotient.sign_vector(&acc));
        }
        routing.push(target);
        matrices.push(matrix);
    }
    Ok(Pi0Map { routing, dims, matrices })
}
