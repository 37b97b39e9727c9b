//! Dense exact linear algebra over the rationals.
//!
//! Matrices are row-major `Vec<Vec<Q>>`. Nothing here is clever; the systems
//! this crate solves are small once they have been reduced to layer blocks.

use crate::rational::Q;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<Q>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Q::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            acc + x * y
        }
    })
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `y += alpha * x`
pub fn axpy(y: &mut [Q], alpha: &Q, x: &[Q]) {
    if alpha.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += alpha * xi;
        }
    }
}

pub fn scaled(v: &[Q], alpha: &Q) -> Vec<Q> {
    v.iter().map(|x| x * alpha).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, aik) in row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (j, bkj) in b[k].iter().enumerate() {
                if !bkj.is_zero() {
                    out[i][j] += aik * bkj;
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &Matrix, v: &[Q]) -> Vec<Q> {
    a.iter().map(|row| dot(row, v)).collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Rescale to a primitive integer vector whose first nonzero entry is positive.
pub fn primitive(v: &[Q]) -> Vec<Q> {
    let mut lcm = BigInt::one();
    for x in v.iter().filter(|x| !x.is_zero()) {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        g = -g;
    }
    ints.into_iter().map(|x| Q::from_integer(x / &g)).collect()
}

/// Row-reduced echelon form, in place. Returns pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -row[c].clone();
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// Basis of `{x : m x = 0}` for an `rows x cols` matrix.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Q>> {
    let mut w = m.clone();
    let pivots = rref(&mut w);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (row, &p) in w.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Solution set of `a x = b`: a particular solution plus a basis of the
/// homogeneous solutions, or `None` when inconsistent.
pub fn solve_affine(a: &Matrix, b: &[Q], cols: usize) -> Option<(Vec<Q>, Vec<Vec<Q>>)> {
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    let coeff: Matrix = aug.iter().map(|r| r[..cols].to_vec()).collect();
    Some((x, nullspace(&coeff, cols)))
}

/// Determinant by Gaussian elimination.
pub fn determinant(m: &Matrix) -> Q {
    let n = m.len();
    let mut w = m.clone();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !w[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            w.swap(p, c);
            det = -det;
        }
        det *= &w[c][c];
        let inv = w[c][c].recip();
        let pivot_row = w[c].clone();
        for row in w.iter_mut().skip(c + 1) {
            if !row[c].is_zero() {
                let f = -(&row[c] * &inv);
                axpy(row, &f, &pivot_row);
            }
        }
    }
    det
}

/// Incrementally maintained echelon basis of a subspace, for span tests.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The residual of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if !w[*p].is_zero() {
                let f = -w[*p].clone();
                axpy(&mut w, &f, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Adds `v` if it is independent; returns whether the span grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        let w: Vec<Q> = w.iter().map(|x| x * &inv).collect();
        self.rows.push((p, w));
        true
    }
}

/// Orthogonal basis (unnormalised Gram-Schmidt) of the span of `vs`.
pub fn orthogonal_basis(vs: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = Vec::new();
    let mut norms: Vec<Q> = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for (u, nu) in out.iter().zip(&norms) {
            let c = dot(&w, u) / nu;
            axpy(&mut w, &-c, u);
        }
        if !is_zero_vec(&w) {
            let w = primitive(&w);
            norms.push(dot(&w, &w));
            out.push(w);
        }
    }
    out
}

/// Orthogonal complement of `span(vs)` inside `Q^dim`.
pub fn orthogonal_complement(vs: &[Vec<Q>], dim: usize) -> Vec<Vec<Q>> {
    if vs.is_empty() {
        return identity(dim);
    }
    nullspace(&vs.to_vec(), dim)
}

/// Coordinates of `v` in the (independent) `basis`, if `v` lies in its span.
pub fn coordinates(basis: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    if basis.is_empty() {
        return is_zero_vec(v).then(Vec::new);
    }
    let a = transpose(&basis.to_vec());
    solve_affine(&a, v, basis.len()).map(|(x, _)| x)
}
