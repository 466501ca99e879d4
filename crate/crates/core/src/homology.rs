//! Integral homology of a scheme's real realization from the Čech nerve
//! with `H₀` coefficients.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::Result;
use crate::linalg::{smith_normal_form, AbelianGroupData, IntegerMatrix};
use crate::scheme::{index_set_key, point_label, realization_functor, Realization, SchemeDiagram};

/// A basis element `j^σ(c)`: nerve simplex `σ` and point `c` of `U_σ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainBasis {
    pub simplex: Vec<usize>,
    pub point: usize,
    pub label: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainComplexData {
    pub basis: Vec<Vec<ChainBasis>>,
    /// `boundaries[p]` is `d_p: C_p → C_{p-1}`, rows indexed by the basis
    /// of `C_{p-1}`; `boundaries[0]` has no rows.
    pub boundaries: Vec<IntegerMatrix>,
}

pub fn chain_complex(s: &SchemeDiagram, degree_bound: u32) -> Result<ChainComplexData> {
    Ok(chain_complex_of(&realization_functor(s, degree_bound)?))
}

pub fn chain_complex_of(r: &Realization) -> ChainComplexData {
    let top = r.keys.iter().map(Vec::len).max().unwrap_or(0);
    let mut basis: Vec<Vec<ChainBasis>> = vec![Vec::new(); top];
    for (node, k) in r.keys.iter().enumerate() {
        let set = &r.pi0[node];
        for (i, p) in set.points().iter().enumerate() {
            basis[k.len() - 1].push(ChainBasis {
                simplex: k.clone(),
                point: i,
                label: format!("{}:{}", index_set_key(k), point_label(set, p)),
            });
        }
    }
    let mut boundaries = vec![IntegerMatrix::zeros(0, basis.first().map_or(0, Vec::len))];
    for p in 1..top {
        let mut d = IntegerMatrix::zeros(basis[p - 1].len(), basis[p].len());
        for (col, b) in basis[p].iter().enumerate() {
            let node = r.node(&b.simplex).expect("basis simplex is a node");
            let point = &r.pi0[node].points()[b.point];
            for (i, face) in SchemeDiagram::faces(&b.simplex).iter().enumerate() {
                let fnode = r.node(face).expect("faces are declared");
                let image = r.maps[&(node, fnode)].apply(point);
                let fp = r.pi0[fnode].index_of(&image);
                let row = basis[p - 1]
                    .iter()
                    .position(|c| c.simplex == *face && c.point == fp)
                    .expect("face point is a basis element");
                let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                d[(row, col)] += sign;
            }
        }
        boundaries.push(d);
    }
    ChainComplexData { basis, boundaries }
}

impl ChainComplexData {
    pub fn ranks(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    /// `H_p` for every degree with a nonzero chain group.
    pub fn homology(&self) -> Vec<AbelianGroupData> {
        let snf: Vec<_> = self.boundaries.iter().map(smith_normal_form).collect();
        (0..self.basis.len())
            .map(|p| {
                let rank_in = snf[p].rank();
                let (rank_out, torsion) = match snf.get(p + 1) {
                    Some(s) => (
                        s.rank(),
                        s.invariant_factors()
                            .iter()
                            .filter(|f| !f.is_one())
                            .map(|f| f.to_u64().expect("torsion fits in u64"))
                            .collect(),
                    ),
                    None => (0, Vec::new()),
                };
                AbelianGroupData {
                    rank: self.basis[p].len() - rank_in - rank_out,
                    torsion,
                }
            })
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.basis
            .iter()
            .enumerate()
            .map(|(p, b)| if p % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) })
            .sum()
    }

    /// The subcomplex on the basis elements selected by `keep`, one flag
    /// per degree and basis element.
    pub fn restrict(&self, keep: &[Vec<bool>]) -> ChainComplexData {
        let basis: Vec<Vec<ChainBasis>> = self
            .basis
            .iter()
            .zip(keep)
            .map(|(b, k)| b.iter().zip(k).filter(|(_, &x)| x).map(|(c, _)| c.clone()).collect())
            .collect();
        let pick = |k: &[bool]| -> Vec<usize> { (0..k.len()).filter(|&i| k[i]).collect() };
        let boundaries = self
            .boundaries
            .iter()
            .enumerate()
            .map(|(p, d)| {
                let cols = pick(&keep[p]);
                let rows = if p == 0 { Vec::new() } else { pick(&keep[p - 1]) };
                let mut out = IntegerMatrix::zeros(rows.len(), cols.len());
                for (i, &r) in rows.iter().enumerate() {
                    for (j, &c) in cols.iter().enumerate() {
                        out[(i, j)] = d[(r, c)].clone();
                    }
                }
                out
            })
            .collect();
        ChainComplexData { basis, boundaries }
    }

    /// `d_p` as CSV: a header of column labels, then one labelled row per
    /// basis element of `C_{p-1}`.
    pub fn boundary_csv(&self, p: usize) -> String {
        let d = &self.boundaries[p];
        let mut s = String::new();
        let head: Vec<String> = self.basis[p].iter().map(|b| csv_field(&b.label)).collect();
        let _ = writeln!(s, ",{}", head.join(","));
        if p > 0 {
            for (i, b) in self.basis[p - 1].iter().enumerate() {
                let row: Vec<String> = (0..d.cols()).map(|j| d[(i, j)].to_string()).collect();
                let _ = writeln!(s, "{},{}", csv_field(&b.label), row.join(","));
            }
        }
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn homology(s: &SchemeDiagram, degree_bound: u32) -> Result<Vec<AbelianGroupData>> {
    Ok(chain_complex(s, degree_bound)?.homology())
}

/// Homology of each connected component of the realization, in the order
/// of the components of the realization's colimit.
pub fn component_homology(r: &Realization) -> Result<Vec<Vec<AbelianGroupData>>> {
    let cx = chain_complex_of(r);
    let colimit = r.diagram.colimit()?;
    let comps = colimit.groupoid.components();
    let mut comp_of = vec![0; colimit.groupoid.objects().len()];
    for (c, objs) in comps.iter().enumerate() {
        for &o in objs {
            comp_of[o] = c;
        }
    }
    let owner = |b: &ChainBasis| -> usize {
        let node = r.node(&b.simplex).expect("basis simplex is a node");
        comp_of[colimit.injections[node].object_map[b.point]]
    };
    Ok((0..comps.len())
        .map(|c| {
            let keep: Vec<Vec<bool>> = cx.basis.iter().map(|bs| bs.iter().map(|b| owner(b) == c).collect()).collect();
            cx.restrict(&keep).homology()
        })
        .collect())
}
