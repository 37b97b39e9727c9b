//! Hermitian geometry over `GF(r^2)`: dual polar graphs `²A_{2D-1}(r)` and
//! Hermitian forms graphs.

use super::check_budget;
use super::field::{Elem, Field};
use crate::error::{Error, Result};
use crate::graph_core::Graph;
use std::collections::HashMap;

fn hermitian(f: &Field, x: &[Elem], y: &[Elem]) -> Elem {
    x.iter().zip(y).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, f.conj(b))))
}

/// Maximal totally isotropic subspaces of `Σ x_i conj(y_i)` on `GF(r^2)^{2D}`,
/// each as its reduced echelon basis (`D` rows of length `2D`), sorted
/// lexicographically.
pub fn dual_polar_2a_subspaces(r: u32, d: usize, budget: usize) -> Result<Vec<Vec<Vec<Elem>>>> {
    if d < 1 {
        return Err(Error::InvalidParams("dual polar graph needs D >= 1".into()));
    }
    let f = Field::quadratic(r)?;
    let count: u128 = (1..=d as u32).map(|i| (r as u128).pow(2 * i - 1) + 1).product();
    check_budget(count, budget)?;
    let dim = 2 * d;
    let mut out = Vec::new();
    for pivots in combinations(dim, d) {
        let mut rows: Vec<Vec<Elem>> = Vec::with_capacity(d);
        extend_rows(&f, &pivots, &mut rows, &mut out);
    }
    out.sort();
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in start..n {
            cur.push(e);
            rec(e + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Backtracks over echelon rows with the given pivot columns, keeping only
/// rows isotropic and orthogonal to the rows already chosen.
fn extend_rows(f: &Field, pivots: &[usize], rows: &mut Vec<Vec<Elem>>, out: &mut Vec<Vec<Vec<Elem>>>) {
    let j = rows.len();
    if j == pivots.len() {
        out.push(rows.clone());
        return;
    }
    let dim = 2 * pivots.len();
    let free: Vec<usize> = (pivots[j] + 1..dim).filter(|c| !pivots.contains(c)).collect();
    let order = f.order() as usize;
    let total = order.pow(free.len() as u32);
    let mut row = vec![0; dim];
    row[pivots[j]] = 1;
    for code in 0..total {
        let mut c = code;
        for &col in free.iter().rev() {
            row[col] = (c % order) as Elem;
            c /= order;
        }
        if hermitian(f, &row, &row) == 0 && rows.iter().all(|u| hermitian(f, u, &row) == 0) {
            rows.push(row.clone());
            extend_rows(f, pivots, rows, out);
            rows.pop();
        }
    }
}

/// Dual polar graph `²A_{2D-1}(r)`: maximal totally isotropic subspaces,
/// adjacent when they meet in a subspace of dimension `D - 1`.
pub fn dual_polar_2a(r: u32, d: usize, budget: usize) -> Result<Graph> {
    let f = Field::quadratic(r)?;
    let subspaces = dual_polar_2a_subspaces(r, d, budget)?;
    let n = subspaces.len();
    let mut adj = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            let stacked: Vec<Vec<Elem>> = subspaces[u].iter().chain(&subspaces[v]).cloned().collect();
            if f.rank(stacked) == d + 1 {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    Ok(Graph::from_fn(n, |v| std::mem::take(&mut adj[v])))
}

/// Hermitian forms graph over `GF(r^2)`: `D × D` Hermitian matrices, adjacent
/// when their difference has rank one.
///
/// A matrix is labelled by its diagonal (entries of `GF(r)`) followed by its
/// strict upper triangle in row-major order; vertices are numbered in the
/// lexicographic order of labels.
pub fn hermitian_forms(r: u32, d: usize, budget: usize) -> Result<Graph> {
    if d < 1 {
        return Err(Error::InvalidParams("Hermitian forms graph needs D >= 1".into()));
    }
    let f = Field::quadratic(r)?;
    let count = (r as u128).checked_pow((d * d) as u32).unwrap_or(u128::MAX);
    check_budget(count, budget)?;
    let n = count as usize;
    let upper: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    let radices: Vec<usize> =
        std::iter::repeat_n(r as usize, d).chain(std::iter::repeat_n((r * r) as usize, upper.len())).collect();

    let decode = |mut v: usize| -> Vec<Elem> {
        let mut label = vec![0; radices.len()];
        for (slot, &base) in label.iter_mut().zip(&radices).rev() {
            *slot = (v % base) as Elem;
            v /= base;
        }
        label
    };
    let encode = |label: &[Elem]| label.iter().zip(&radices).fold(0usize, |acc, (&x, &b)| acc * b + x as usize);
    let to_matrix = |label: &[Elem]| -> Vec<Vec<Elem>> {
        let mut m = vec![vec![0; d]; d];
        for i in 0..d {
            m[i][i] = label[i];
        }
        for (k, &(i, j)) in upper.iter().enumerate() {
            m[i][j] = label[d + k];
            m[j][i] = f.conj(label[d + k]);
        }
        m
    };

    let rank_one: Vec<Vec<Elem>> = (1..n).map(decode).filter(|l| f.rank(to_matrix(l)) == 1).collect();
    let labels: Vec<Vec<Elem>> = (0..n).map(decode).collect();
    let index: HashMap<&[Elem], usize> = labels.iter().enumerate().map(|(i, l)| (l.as_slice(), i)).collect();
    debug_assert!(labels.iter().enumerate().all(|(i, l)| encode(l) == i));
    Ok(Graph::from_fn(n, |v| {
        rank_one
            .iter()
            .map(|s| {
                let sum: Vec<Elem> = labels[v].iter().zip(s).map(|(&a, &b)| f.add(a, b)).collect();
                index[sum.as_slice()]
            })
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::DEFAULT_BUDGET;
    use crate::graph_core::{classical_parameters, intersection_array, near_polygon_check};

    #[test]
    fn dual_polar_counts_and_isotropy() {
        let f = Field::quadratic(2).unwrap();
        let subs = dual_polar_2a_subspaces(2, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(subs.len(), 27);
        for s in &subs {
            assert_eq!(f.rank(s.clone()), 2);
            for u in s {
                for v in s {
                    assert_eq!(hermitian(&f, u, v), 0);
                }
            }
        }
        assert_eq!(dual_polar_2a_subspaces(2, 3, DEFAULT_BUDGET).unwrap().len(), 891);
    }

    #[test]
    fn dual_polar_small_is_classical_near_polygon() {
        let g = dual_polar_2a(2, 2, DEFAULT_BUDGET).unwrap();
        let ia = intersection_array(&g).unwrap();
        assert_eq!(ia.diameter(), 2);
        assert!(near_polygon_check(&g, &ia));
    }

    #[test]
    fn hermitian_forms_small() {
        let g = hermitian_forms(2, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(g.n(), 16);
        let ia = intersection_array(&g).unwrap();
        assert_eq!(ia.diameter(), 2);
        let g3 = hermitian_forms(2, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(g3.n(), 512);
        let ia3 = intersection_array(&g3).unwrap();
        assert_eq!((ia3.b_seq(), ia3.c_seq()), (&[21, 20, 16][..], &[1, 2, 12][..]));
        assert!(classical_parameters(&ia3).iter().any(|c| c.q == -2));
        assert!(!near_polygon_check(&g3, &ia3));
    }
}
