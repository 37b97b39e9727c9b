//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's own algorithms for the quantity being checked.
#![allow(dead_code, clippy::needless_range_loop)]

use drg_uniform::families::{doob, gosset, halved_cube, hamming, johnson, shrikhande, dual_polar_2a, hermitian_forms};
use drg_uniform::graph_core::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::VecDeque;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Every distance-regular family member with at most 200 vertices used in the tests.
pub fn small_families() -> Vec<(String, Graph)> {
    let b = 1_000;
    vec![
        ("H(3,3)".into(), hamming(3, 3, b).unwrap()),
        ("H(3,4)".into(), hamming(3, 4, b).unwrap()),
        ("H(4,3)".into(), hamming(4, 3, b).unwrap()),
        ("H(2,5)".into(), hamming(2, 5, b).unwrap()),
        ("J(6,3)".into(), johnson(6, 3, b).unwrap()),
        ("J(7,3)".into(), johnson(7, 3, b).unwrap()),
        ("J(8,4)".into(), johnson(8, 4, b).unwrap()),
        ("J(9,4)".into(), johnson(9, 4, b).unwrap()),
        ("½H(6,2)".into(), halved_cube(6, b).unwrap()),
        ("½H(7,2)".into(), halved_cube(7, b).unwrap()),
        ("½H(8,2)".into(), halved_cube(8, b).unwrap()),
        ("Shrikhande".into(), shrikhande()),
        ("D(1,1)".into(), doob(1, 1, b).unwrap()),
        ("Gosset".into(), gosset()),
        ("2A3(2)".into(), dual_polar_2a(2, 2, b).unwrap()),
        ("Her2(2)".into(), hermitian_forms(2, 2, b).unwrap()),
    ]
}

/// All-pairs distances by breadth-first search from every vertex.
pub fn all_distances(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|s| {
            let mut d = vec![usize::MAX; g.n()];
            d[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in g.neighbors(u) {
                    if d[v] == usize::MAX {
                        d[v] = d[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

/// `p^h_{ij} = |Γ_i(x) ∩ Γ_j(y)|` counted for every pair at distance `h`;
/// `None` if the count depends on the pair.
pub fn brute_intersection_numbers(g: &Graph) -> Option<Vec<Vec<Vec<i64>>>> {
    let dist = all_distances(g);
    let diam = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut p: Vec<Vec<Vec<Option<i64>>>> = vec![vec![vec![None; diam + 1]; diam + 1]; diam + 1];
    for x in 0..g.n() {
        for y in 0..g.n() {
            let h = dist[x][y];
            let mut counts = vec![vec![0i64; diam + 1]; diam + 1];
            for z in 0..g.n() {
                counts[dist[x][z]][dist[y][z]] += 1;
            }
            for i in 0..=diam {
                for j in 0..=diam {
                    match p[h][i][j] {
                        None => p[h][i][j] = Some(counts[i][j]),
                        Some(v) if v != counts[i][j] => return None,
                        _ => {}
                    }
                }
            }
        }
    }
    Some(p.into_iter().map(|a| a.into_iter().map(|b| b.into_iter().map(|c| c.unwrap_or(0)).collect()).collect()).collect())
}

/// Determinant by fraction-exact Gaussian elimination with row swaps.
pub fn oracle_det(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else { return Q::zero() };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let factor = &m[r][c] / &pivot;
            for k in c..n {
                let sub = &factor * &m[c][k];
                m[r][k] -= sub;
            }
        }
    }
    det
}

pub fn dense_adjacency(g: &Graph) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; g.n()]; g.n()];
    for (u, v) in g.edges() {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    a
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let m = b[0].len();
    let mut out = vec![vec![Q::zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Rank of a list of vectors by fraction-exact elimination.
pub fn rank(vs: &[Vec<Q>]) -> usize {
    let mut rows: Vec<Vec<Q>> = vs.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &rows[r][c];
            for k in c..cols {
                let sub = &f * &rows[r][k];
                rows[i][k] -= sub;
            }
        }
        r += 1;
    }
    r
}

pub fn in_span(basis: &[Vec<Q>], v: &[Q]) -> bool {
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    rank(&with) == rank(basis)
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
