mod common;

use binoid_topology::binoid::DEFAULT_DEGREE_BOUND;
use binoid_topology::homology::{chain_complex, ChainComplexData};
use binoid_topology::linalg::AbelianGroupData;
use binoid_topology::stanley_reisner::chart_scheme;

use common::checks::{self, bundled_schemes};
use common::{example1, named_complexes, random_complexes, rank_mod_p};

fn complexes() -> Vec<(String, ChainComplexData)> {
    let mut out = vec![("example 1".to_string(), chain_complex(&example1(), DEFAULT_DEGREE_BOUND).unwrap())];
    for (name, d) in named_complexes() {
        out.push((name.to_string(), chain_complex(&chart_scheme(&d).unwrap(), DEFAULT_DEGREE_BOUND).unwrap()));
    }
    for (k, d) in random_complexes(12, 7).into_iter().enumerate() {
        out.push((format!("random {k}"), chain_complex(&chart_scheme(&d).unwrap(), DEFAULT_DEGREE_BOUND).unwrap()));
    }
    out
}

#[test]
fn boundary_squares_to_zero() {
    for (name, s) in bundled_schemes(12, 7) {
        checks::boundary_squares_to_zero(&name, &s).unwrap();
    }
}

#[test]
fn betti_numbers_match_rank_oracle() {
    for (name, cx) in complexes() {
        let ranks: Vec<usize> = cx.boundaries.iter().map(|d| rank_mod_p(&d.to_i64_rows())).collect();
        let h = cx.homology();
        for (p, g) in h.iter().enumerate() {
            let out = ranks.get(p + 1).copied().unwrap_or(0);
            assert_eq!(g.rank, cx.basis[p].len() - ranks[p] - out, "{name}: H{p}");
        }
        let chi: i64 = h.iter().enumerate().map(|(p, g)| if p % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) }).sum();
        assert_eq!(chi, cx.euler_characteristic(), "{name}");
    }
}

#[test]
fn example_one_boundary_against_reduced_complex() {
    let cx = chain_complex(&example1(), DEFAULT_DEGREE_BOUND).unwrap();
    let d1 = cx.boundaries[1].to_i64_rows();
    let cols: Vec<usize> = cx.basis[1]
        .iter()
        .enumerate()
        .filter(|(_, b)| b.simplex == [1, 2] || b.simplex == [2, 3])
        .map(|(j, _)| j)
        .collect();
    let sub: Vec<Vec<i64>> = d1.iter().map(|row| cols.iter().map(|&j| row[j]).collect()).collect();
    // the reduced complex's differential, with our face-sign convention negated
    let reduced: [[i64; 4]; 3] = [[1, 1, 0, 0], [-1, -1, 1, 1], [0, 0, -1, -1]];
    let negated: Vec<Vec<i64>> = reduced.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    assert_eq!(sub, negated);

    let r = rank_mod_p(&negated);
    assert_eq!((3 - r, 4 - r), (1, 2));
    assert_eq!(
        cx.homology(),
        vec![AbelianGroupData::free(1), AbelianGroupData::free(2), AbelianGroupData::trivial()]
    );
}

#[test]
fn chart_scheme_ranks_of_hollow_triangle() {
    let (_, d) = &named_complexes()[0];
    let cx = chain_complex(&chart_scheme(d).unwrap(), DEFAULT_DEGREE_BOUND).unwrap();
    assert_eq!(cx.ranks(), vec![6, 12]);
    let h = cx.homology();
    assert_eq!(h[0], AbelianGroupData::free(1));
    assert_eq!(h[1], AbelianGroupData::free(7));
}
