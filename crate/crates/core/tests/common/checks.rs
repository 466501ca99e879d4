//! Property checks shared by the property tests and the acceptance suite.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use binoid_topology::binoid::DEFAULT_DEGREE_BOUND;
use binoid_topology::groupoid::GroupPresentationResult;
use binoid_topology::homology::{chain_complex, chain_complex_of, component_homology};
use binoid_topology::linalg::{smith_normal_form, AbelianGroupData, IntegerMatrix};
use binoid_topology::scheme::{fundamental_groupoid, pi0_scheme, realization_functor, SchemeDiagram};
use binoid_topology::stanley_reisner::{chart_scheme, sr_fundamental_groups, SimplicialComplexData};

use super::quotients::Check;
use super::{example1, named_complexes, random_complexes};

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize) -> Vec<Vec<i64>> {
    let (r, c) = (rng.gen_range(1..=max_dim), rng.gen_range(1..=max_dim));
    (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect()
}

/// `D = U·A·V`, `U` and `V` unimodular, `D` diagonal with `d₁ | d₂ | …`.
pub fn snf_decomposition(rows: &[Vec<i64>]) -> Check {
    let a = IntegerMatrix::from_rows(rows);
    let s = smith_normal_form(&a);
    ensure!(s.u.mul(&a).mul(&s.v) == s.d, "D != UAV for {rows:?}");
    ensure!(s.u.is_unimodular() && s.v.is_unimodular(), "U or V not unimodular for {rows:?}");
    ensure!(s.v.mul(&s.v_inv) == IntegerMatrix::identity(a.cols()), "V_inv wrong for {rows:?}");
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            ensure!(i == j || s.d[(i, j)].is_zero(), "D not diagonal for {rows:?}");
        }
    }
    let f = s.invariant_factors();
    ensure!(f.iter().all(|x| x.is_positive()), "nonpositive invariant factor for {rows:?}");
    ensure!(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])), "divisibility chain fails for {rows:?}");
    let n = s.d.rows().min(s.d.cols());
    ensure!((f.len()..n).all(|i| s.d[(i, i)].is_zero()), "zeros not trailing for {rows:?}");
    ensure!(s.rank() == a.rank(), "rank mismatch for {rows:?}");
    Ok(())
}

pub fn snf_suite(cases: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        snf_decomposition(&random_matrix(&mut rng, 8))?;
    }
    Ok(())
}

fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * determinant(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// gcd of all `k × k` minors.
pub fn determinantal_divisor(a: &[Vec<i64>], k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in subsets(a.len(), k) {
        for cols in subsets(a[0].len(), k) {
            let minor: Vec<Vec<BigInt>> =
                rows.iter().map(|&i| cols.iter().map(|&j| BigInt::from(a[i][j])).collect()).collect();
            g = g.gcd(&determinant(&minor));
        }
    }
    g
}

/// Products of leading invariant factors equal the determinantal divisors.
pub fn snf_matches_minors(rows: &[Vec<i64>]) -> Check {
    let f = smith_normal_form(&IntegerMatrix::from_rows(rows)).invariant_factors();
    let mut product = BigInt::from(1);
    for k in 1..=rows.len().min(rows[0].len()) {
        let dk = determinantal_divisor(rows, k);
        if k <= f.len() {
            product *= &f[k - 1];
            ensure!(dk == product, "d_{k} = {dk}, expected {product} for {rows:?}");
        } else {
            ensure!(dk.is_zero(), "d_{k} = {dk}, expected 0 for {rows:?}");
        }
    }
    Ok(())
}

pub fn bundled_schemes(random: usize, seed: u64) -> Vec<(String, SchemeDiagram)> {
    let mut out = vec![("example 1".to_string(), example1())];
    for (name, d) in named_complexes() {
        out.push((name.to_string(), chart_scheme(&d).unwrap()));
    }
    for n in 1..=3 {
        out.push((format!("simplex {n}"), chart_scheme(&SimplicialComplexData::simplex(n)).unwrap()));
    }
    for (k, d) in random_complexes(random, seed).into_iter().enumerate() {
        out.push((format!("random {k}: {:?}", d.facets()), chart_scheme(&d).unwrap()));
    }
    out
}

pub fn bundled_complexes(random: usize, seed: u64) -> Vec<(String, SimplicialComplexData)> {
    let mut out: Vec<(String, SimplicialComplexData)> =
        named_complexes().into_iter().map(|(n, d)| (n.to_string(), d)).collect();
    for n in 1..=4 {
        out.push((format!("simplex {n}"), SimplicialComplexData::simplex(n)));
    }
    for (k, d) in random_complexes(random, seed).into_iter().enumerate() {
        out.push((format!("random {k}: {:?}", d.facets()), d));
    }
    out
}

pub fn boundary_squares_to_zero(name: &str, s: &SchemeDiagram) -> Check {
    let cx = chain_complex(s, DEFAULT_DEGREE_BOUND).map_err(|e| format!("{name}: {e}"))?;
    for p in 2..cx.boundaries.len() {
        ensure!(cx.boundaries[p - 1].mul(&cx.boundaries[p]).is_zero(), "{name}: d{} d{p} != 0", p - 1);
    }
    Ok(())
}

fn sorted_abelianizations(g: &GroupPresentationResult) -> Vec<AbelianGroupData> {
    let mut v: Vec<AbelianGroupData> = g.components.iter().map(|c| c.abelianization.clone()).collect();
    v.sort_by_key(|a| (a.rank, a.torsion.clone()));
    v
}

fn sorted_ranks(g: &GroupPresentationResult) -> Vec<Option<usize>> {
    let mut v = g.free_ranks();
    v.sort();
    v
}

/// Per-component `π₁` against per-component `H₁`, and the three component
/// counts against each other.
pub fn hurewicz(name: &str, s: &SchemeDiagram) -> Check {
    let err = |e: binoid_topology::Error| format!("{name}: {e}");
    let groups = fundamental_groupoid(s, DEFAULT_DEGREE_BOUND).map_err(err)?;
    let r = realization_functor(s, DEFAULT_DEGREE_BOUND).map_err(err)?;
    let per_component = component_homology(&r).map_err(err)?;

    let mut h1: Vec<AbelianGroupData> = per_component
        .iter()
        .map(|h| h.get(1).cloned().unwrap_or_else(AbelianGroupData::trivial))
        .collect();
    h1.sort_by_key(|a| (a.rank, a.torsion.clone()));
    let ab = sorted_abelianizations(&groups);
    ensure!(ab == h1, "{name}: abelianized pi1 {ab:?} vs H1 {h1:?}");
    if groups.components.iter().all(|c| c.free_rank.is_some()) {
        let mut free: Vec<usize> = groups.components.iter().filter_map(|c| c.free_rank).collect();
        free.sort();
        let ranks: Vec<usize> = h1.iter().map(|a| a.rank).collect();
        ensure!(free == ranks, "{name}: free ranks {free:?} vs H1 ranks {ranks:?}");
        ensure!(h1.iter().all(|a| a.torsion.is_empty()), "{name}: torsion in H1 of a free group");
    }
    for h in &per_component {
        ensure!(h[0] == AbelianGroupData::free(1), "{name}: H0 of a component is {}", h[0]);
    }

    let pi0 = pi0_scheme(s, DEFAULT_DEGREE_BOUND).map_err(err)?;
    let h0 = chain_complex_of(&r).homology()[0].clone();
    ensure!(groups.component_count() == pi0.count, "{name}: {} groups vs {} components", groups.component_count(), pi0.count);
    ensure!(h0 == AbelianGroupData::free(pi0.count), "{name}: H0 = {h0} vs {} components", pi0.count);
    Ok(())
}

/// The signed-facet groupoid against the chart scheme, in both modes.
pub fn sr_matches_chart_scheme(name: &str, d: &SimplicialComplexData) -> Check {
    let err = |e: binoid_topology::Error| format!("{name}: {e}");
    let via_scheme = fundamental_groupoid(&chart_scheme(d).map_err(err)?, DEFAULT_DEGREE_BOUND).map_err(err)?;
    for full in [false, true] {
        let sr = sr_fundamental_groups(d, full).map_err(err)?;
        ensure!(sr.component_count() == via_scheme.component_count(), "{name}: component counts differ (full = {full})");
        ensure!(
            sorted_ranks(&sr) == sorted_ranks(&via_scheme),
            "{name}: free ranks {:?} vs {:?} (full = {full})",
            sorted_ranks(&sr),
            sorted_ranks(&via_scheme)
        );
        ensure!(sorted_abelianizations(&sr) == sorted_abelianizations(&via_scheme), "{name}: abelianizations differ");
    }
    Ok(())
}
