#![allow(dead_code)]

pub mod checks;
pub mod quotients;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use binoid_topology::scheme::{load_scheme, SchemeDiagram, SchemeDocument};
use binoid_topology::stanley_reisner::SimplicialComplexData;

pub const EXAMPLE1: &str = include_str!("../../data/example1_scheme.json");

pub fn example1() -> SchemeDiagram {
    load_scheme(&SchemeDocument::from_json(EXAMPLE1).unwrap()).unwrap()
}

pub fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplexData {
    SimplicialComplexData::new(n, facets.iter().map(|f| f.to_vec()).collect()).unwrap()
}

pub fn named_complexes() -> Vec<(&'static str, SimplicialComplexData)> {
    vec![
        ("hollow triangle", complex(3, &[&[1, 2], &[1, 3], &[2, 3]])),
        ("two points", complex(2, &[&[1], &[2]])),
        ("edge", complex(2, &[&[1, 2]])),
        ("triangle", complex(3, &[&[1, 2, 3]])),
        ("path", complex(3, &[&[1, 2], &[2, 3]])),
        ("square", complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])),
        ("two triangles", complex(4, &[&[1, 2, 3], &[2, 3, 4]])),
        ("star", complex(4, &[&[1, 2], &[1, 3], &[1, 4]])),
        ("bowtie", complex(5, &[&[1, 2], &[1, 3], &[2, 3], &[3, 4], &[3, 5], &[4, 5]])),
        ("hollow tetrahedron", complex(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])),
    ]
}

/// Seeded random complexes on at most five vertices.
pub fn random_complexes(count: usize, seed: u64) -> Vec<SimplicialComplexData> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(3..=5);
            let mut facets: Vec<Vec<usize>> = Vec::new();
            for _ in 0..rng.gen_range(2..=7) {
                let f: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
                if (1..=3).contains(&f.len()) {
                    facets.push(f);
                }
            }
            for v in 1..=n {
                if !facets.iter().any(|f| f.contains(&v)) {
                    let w = rng.gen_range(1..=n);
                    facets.push(if w == v { vec![v] } else { vec![v, w] });
                }
            }
            SimplicialComplexData::new(n, facets).unwrap()
        })
        .collect()
}

const P: i64 = 1_000_003;

fn inv_mod(a: i64) -> i64 {
    let (mut r, mut e, mut b) = (1i64, P - 2, a.rem_euclid(P));
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Rank over a large prime field.
pub fn rank_mod_p(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(P)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = inv_mod(m[rank][c]);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c] * inv % P;
                for (x, &p) in row.iter_mut().zip(&pivot) {
                    *x = (*x - f * p).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers of the simplicial complex itself.
pub fn simplicial_betti(d: &SimplicialComplexData) -> Vec<usize> {
    let faces = d.faces();
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    let by_dim: Vec<Vec<Vec<usize>>> =
        (1..=top).map(|k| faces.iter().filter(|f| f.len() == k).cloned().collect()).collect();
    let boundary_rank = |k: usize| -> usize {
        // k-faces to (k-1)-faces, by dimension index
        if k == 0 || k >= by_dim.len() {
            return 0;
        }
        let rows: Vec<Vec<i64>> = by_dim[k - 1]
            .iter()
            .map(|g| {
                by_dim[k]
                    .iter()
                    .map(|f| match f.iter().position(|v| !g.contains(v)) {
                        Some(i) if g.len() + 1 == f.len() && g.iter().all(|v| f.contains(v)) => {
                            if i % 2 == 0 { 1 } else { -1 }
                        }
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        rank_mod_p(&rows)
    };
    (0..by_dim.len()).map(|k| by_dim[k].len() - boundary_rank(k) - boundary_rank(k + 1)).collect()
}
