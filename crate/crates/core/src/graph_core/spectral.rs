use super::drg::IntersectionArray;
use super::graph::{DistanceMatrix, Graph};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{q, to_f64, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// An eigenvalue, exact when rational and otherwise isolated in a rational
/// interval of width below the requested tolerance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eigenvalue {
    Exact(Q),
    Approx { lo: Q, hi: Q },
}

impl Eigenvalue {
    pub fn exact(&self) -> Option<&Q> {
        match self {
            Eigenvalue::Exact(x) => Some(x),
            Eigenvalue::Approx { .. } => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Eigenvalue::Exact(x) => to_f64(x),
            Eigenvalue::Approx { lo, hi } => to_f64(&((lo + hi) / q(2))),
        }
    }

    /// `"p/q"` for exact values, `"~x"` with the decimal midpoint otherwise.
    pub fn display(&self) -> String {
        match self {
            Eigenvalue::Exact(x) => crate::rational::to_fraction_string(x),
            Eigenvalue::Approx { .. } => format!("~{:.12}", self.to_f64()),
        }
    }
}

impl Serialize for Eigenvalue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.display())
    }
}

/// Eigenvalues `θ_0 > … > θ_D` of a distance-regular graph, with their
/// cosine sequences and multiplicities.
#[derive(Clone, Debug)]
pub struct SpectralData {
    pub array: IntersectionArray,
    pub eigenvalues: Vec<Eigenvalue>,
    /// `m_i`; rounded from floating point when `numeric` is set.
    pub multiplicities: Vec<i64>,
    pub numeric: bool,
    /// `u_h(θ_i)` for exact eigenvalues, indexed `[i][h]`.
    exact_cosines: Option<Vec<Vec<Q>>>,
    approx_cosines: Vec<Vec<f64>>,
}

impl SpectralData {
    pub fn diameter(&self) -> usize {
        self.array.diameter()
    }

    pub fn is_exact(&self) -> bool {
        !self.numeric
    }

    /// The exact eigenvalues, when every one is rational.
    pub fn exact_eigenvalues(&self) -> Option<Vec<Q>> {
        self.eigenvalues.iter().map(|e| e.exact().cloned()).collect()
    }

    pub fn cosines(&self) -> Option<&[Vec<Q>]> {
        self.exact_cosines.as_deref()
    }
}

/// Leading principal minors of `λI - T` for the tridiagonal matrix `T`; the
/// last entry is the characteristic polynomial evaluated at `λ`.
fn minors(ia: &IntersectionArray, lambda: &Q) -> Vec<Q> {
    let d = ia.diameter();
    let mut p = vec![Q::one(), lambda - q(ia.a(0))];
    for i in 1..=d {
        let next = (lambda - q(ia.a(i))) * &p[i] - q(ia.b(i - 1) * ia.c(i)) * &p[i - 1];
        p.push(next);
    }
    p
}

/// Number of eigenvalues strictly greater than `λ` (`λ` not an eigenvalue).
fn count_above(ia: &IntersectionArray, lambda: &Q) -> usize {
    let p = minors(ia, lambda);
    let mut changes = 0;
    let mut prev = p[0].signum();
    for x in &p[1..] {
        let s = if x.is_zero() { -prev.clone() } else { x.signum() };
        if s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

fn charpoly_at(ia: &IntersectionArray, lambda: &Q) -> Q {
    minors(ia, lambda).pop().unwrap_or_else(Q::zero)
}

/// Eigenvalues of the tridiagonal intersection matrix, largest first.
///
/// Rational eigenvalues are integers in `[-k, k]` and are found exactly; any
/// others are isolated by Sturm-sequence bisection to width `< tol`.
pub fn spectrum(ia: &IntersectionArray, tol: f64) -> SpectralData {
    let d = ia.diameter();
    let k = ia.valency();
    let mut exact: Vec<Q> = (-k..=k).map(q).filter(|l| charpoly_at(ia, l).is_zero()).collect();
    let mut eigen: Vec<Eigenvalue> = Vec::new();
    if exact.len() < d + 1 {
        let lo = q(-k - 1);
        let hi = q(k + 1);
        let mut intervals = Vec::new();
        isolate(ia, lo, hi, &mut intervals);
        let tol_q = Q::from_float(tol.max(1e-300)).unwrap_or_else(|| Q::new(BigInt::one(), BigInt::from(10).pow(9)));
        for (mut lo, mut hi) in intervals {
            let plo = charpoly_at(ia, &lo).signum();
            while &hi - &lo >= tol_q {
                let mid = (&lo + &hi) / q(2);
                let pm = charpoly_at(ia, &mid);
                if pm.is_zero() {
                    lo = mid.clone();
                    hi = mid;
                    break;
                }
                if pm.signum() == plo {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            if lo == hi {
                exact.push(lo);
            } else {
                eigen.push(Eigenvalue::Approx { lo, hi });
            }
        }
    }
    eigen.extend(exact.into_iter().map(Eigenvalue::Exact));
    eigen.sort_by(|x, y| y.to_f64().partial_cmp(&x.to_f64()).unwrap_or(std::cmp::Ordering::Equal));
    eigen.dedup();

    let numeric = eigen.iter().any(|e| e.exact().is_none());
    let kl = ia.layer_sizes();
    let n = ia.vertex_count();
    let exact_cosines = (!numeric).then(|| {
        eigen.iter().map(|e| exact_cosine_sequence(ia, e.exact().expect("exact"))).collect::<Vec<_>>()
    });
    let approx_cosines: Vec<Vec<f64>> = eigen.iter().map(|e| approx_cosine_sequence(ia, e.to_f64())).collect();
    let multiplicities = match &exact_cosines {
        Some(cos) => cos
            .iter()
            .map(|u| {
                let s: Q = u.iter().zip(&kl).map(|(x, &kh)| x * x * q(kh)).sum();
                (q(n) / s).round().to_integer().to_i64().unwrap_or(0)
            })
            .collect(),
        None => approx_cosines
            .iter()
            .map(|u| {
                let s: f64 = u.iter().zip(&kl).map(|(x, &kh)| x * x * kh as f64).sum();
                (n as f64 / s).round() as i64
            })
            .collect(),
    };
    SpectralData { array: ia.clone(), eigenvalues: eigen, multiplicities, numeric, exact_cosines, approx_cosines }
}

/// Pushes disjoint intervals `(lo, hi)` each holding exactly one
/// non-integral eigenvalue.
fn isolate(ia: &IntersectionArray, lo: Q, hi: Q, out: &mut Vec<(Q, Q)>) {
    let inside = count_above(ia, &lo) - count_above(ia, &hi);
    if inside == 0 {
        return;
    }
    let integral = {
        let mut c = 0;
        let mut z = lo.ceil();
        if z == lo {
            z += q(1);
        }
        while z < hi {
            if charpoly_at(ia, &z).is_zero() {
                c += 1;
            }
            z += q(1);
        }
        c
    };
    if inside == integral {
        return;
    }
    if inside == 1 {
        out.push((lo, hi));
        return;
    }
    let mut mid = (&lo + &hi) / q(2);
    let mut step = (&hi - &lo) / q(7);
    while charpoly_at(ia, &mid).is_zero() {
        mid += &step;
        step /= q(2);
    }
    isolate(ia, lo, mid.clone(), out);
    isolate(ia, mid, hi, out);
}

/// `u_0 = 1`, `u_1 = θ/k`, `c_h u_{h-1} + a_h u_h + b_h u_{h+1} = θ u_h`.
pub fn exact_cosine_sequence(ia: &IntersectionArray, theta: &Q) -> Vec<Q> {
    let d = ia.diameter();
    let mut u = vec![Q::one(), theta / q(ia.valency())];
    for h in 1..d {
        let next = ((theta - q(ia.a(h))) * &u[h] - q(ia.c(h)) * &u[h - 1]) / q(ia.b(h));
        u.push(next);
    }
    u.truncate(d + 1);
    u
}

fn approx_cosine_sequence(ia: &IntersectionArray, theta: f64) -> Vec<f64> {
    let d = ia.diameter();
    let mut u = vec![1.0, theta / ia.valency() as f64];
    for h in 1..d {
        let next = ((theta - ia.a(h) as f64) * u[h] - ia.c(h) as f64 * u[h - 1]) / ia.b(h) as f64;
        u.push(next);
    }
    u.truncate(d + 1);
    u
}

/// The primitive idempotents `E_i`, represented through cosine sequences:
/// `(E_i)_{yz} = (m_i/n) u_{∂(y,z)}(θ_i)`.
#[derive(Clone, Debug)]
pub struct PrimitiveIdempotents {
    n: usize,
    dist: DistanceMatrix,
    /// `(m_i/n) u_h(θ_i)`, indexed `[i][h]`.
    coeffs: Vec<Vec<Q>>,
}

pub fn primitive_idempotents(g: &Graph, spec: &SpectralData) -> Result<PrimitiveIdempotents> {
    let Some(cos) = spec.cosines() else {
        let index = spec.eigenvalues.iter().position(|e| e.exact().is_none()).unwrap_or(0);
        return Err(Error::IrrationalSpectrum { index });
    };
    let n = g.n();
    let dist = DistanceMatrix::new(g)?;
    let coeffs = cos
        .iter()
        .zip(&spec.multiplicities)
        .map(|(u, &m)| u.iter().map(|x| x * Q::new(m.into(), (n as i64).into())).collect())
        .collect();
    Ok(PrimitiveIdempotents { n, dist, coeffs })
}

impl PrimitiveIdempotents {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// `(m_i/n) u_h(θ_i)` for `h = 0, …, D`.
    pub fn coefficients(&self, i: usize) -> &[Q] {
        &self.coeffs[i]
    }

    pub fn entry(&self, i: usize, y: usize, z: usize) -> Q {
        self.coeffs[i][self.dist.get(y, z)].clone()
    }

    pub fn dense(&self, i: usize) -> Matrix {
        (0..self.n).map(|y| (0..self.n).map(|z| self.entry(i, y, z)).collect()).collect()
    }

    /// `E_i v` in `O(n^2)` additions.
    pub fn apply(&self, i: usize, v: &[Q]) -> Vec<Q> {
        let d = self.coeffs[i].len();
        (0..self.n)
            .map(|y| {
                let mut sums = vec![Q::zero(); d];
                for (z, &l) in self.dist.row(y).iter().enumerate() {
                    if !v[z].is_zero() {
                        sums[l as usize] += &v[z];
                    }
                }
                sums.iter().zip(&self.coeffs[i]).map(|(s, c)| s * c).sum()
            })
            .collect()
    }
}

/// Krein parameters `q^h_{ij}`, exact when the spectrum is rational.
#[derive(Clone, Debug)]
pub struct KreinTensor {
    pub exact: Option<Vec<Vec<Vec<Q>>>>,
    /// Floating-point values, indexed `[h][i][j]`.
    pub approx: Vec<Vec<Vec<f64>>>,
    pub tol: f64,
}

impl KreinTensor {
    pub fn size(&self) -> usize {
        self.approx.len()
    }

    pub fn is_zero(&self, h: usize, i: usize, j: usize) -> bool {
        match &self.exact {
            Some(e) => e[h][i][j].is_zero(),
            None => self.approx[h][i][j].abs() < self.tol,
        }
    }

    pub fn nonnegative(&self) -> bool {
        let d = self.size();
        iproduct(d).all(|(h, i, j)| match &self.exact {
            Some(e) => !e[h][i][j].is_negative(),
            None => self.approx[h][i][j] > -self.tol,
        })
    }
}

fn iproduct(d: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..d).flat_map(move |h| (0..d).flat_map(move |i| (0..d).map(move |j| (h, i, j))))
}

/// `q^h_{ij} = (m_i m_j / n) Σ_l k_l u_l(θ_i) u_l(θ_j) u_l(θ_h)`.
pub fn krein_parameters(spec: &SpectralData, tol: f64) -> Result<KreinTensor> {
    let d = spec.diameter() + 1;
    let kl = spec.array.layer_sizes();
    let n = spec.array.vertex_count();
    let m = &spec.multiplicities;
    let approx: Vec<Vec<Vec<f64>>> = (0..d)
        .map(|h| {
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| {
                            let u = &spec.approx_cosines;
                            let s: f64 = (0..d).map(|l| kl[l] as f64 * u[i][l] * u[j][l] * u[h][l]).sum();
                            s * (m[i] * m[j]) as f64 / n as f64
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let exact = spec.cosines().map(|u| {
        (0..d)
            .map(|h| {
                (0..d)
                    .map(|i| {
                        (0..d)
                            .map(|j| {
                                let s: Q = (0..d).map(|l| q(kl[l]) * &u[i][l] * &u[j][l] * &u[h][l]).sum();
                                s * Q::new((m[i] * m[j]).into(), n.into())
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect::<Vec<Vec<Vec<Q>>>>()
    });
    let kt = KreinTensor { exact, approx, tol };
    for (h, i, j) in iproduct(d) {
        let negative = match &kt.exact {
            Some(e) => e[h][i][j].is_negative(),
            None => kt.approx[h][i][j] < -tol,
        };
        if negative {
            let value = match &kt.exact {
                Some(e) => crate::rational::to_fraction_string(&e[h][i][j]),
                None => kt.approx[h][i][j].to_string(),
            };
            return Err(Error::NegativeKrein { h, i, j, value });
        }
    }
    Ok(kt)
}

/// Every ordering `(0, σ_1, …, σ_D)` of the primitive idempotents under which
/// `q^h_{ij}` vanishes when one index exceeds the sum of the other two and is
/// nonzero when it equals that sum.
pub fn q_polynomial_orderings(kt: &KreinTensor) -> Vec<Vec<usize>> {
    let d = kt.size();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..d).collect();
    permute(&mut perm, 1, &mut |p| {
        if is_q_polynomial_ordering(kt, p) {
            out.push(p.to_vec());
        }
    });
    out.sort();
    out
}

fn permute(p: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start >= p.len() {
        visit(p);
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permute(p, start + 1, visit);
        p.swap(start, i);
    }
}

fn is_q_polynomial_ordering(kt: &KreinTensor, p: &[usize]) -> bool {
    let d = p.len();
    iproduct(d).all(|(h, i, j)| {
        let zero = kt.is_zero(p[h], p[i], p[j]);
        let (s, t, u) = (h, i, j);
        let max = s.max(t).max(u);
        let rest = s + t + u - max;
        if max > rest {
            zero
        } else if max == rest {
            !zero
        } else {
            true
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::drg::intersection_array;
    use crate::linalg::{identity, mat_mul, rank};

    fn hamming33() -> IntersectionArray {
        IntersectionArray::new(&[6, 4, 2], &[1, 2, 3]).unwrap()
    }

    fn exact_values(s: &SpectralData) -> Vec<i64> {
        s.exact_eigenvalues().unwrap().iter().map(|x| x.to_integer().to_i64().unwrap()).collect()
    }

    #[test]
    fn hamming_spectrum() {
        let s = spectrum(&hamming33(), 1e-9);
        assert_eq!(exact_values(&s), vec![6, 3, 0, -3]);
        assert_eq!(s.multiplicities, vec![1, 6, 12, 8]);
    }

    #[test]
    fn johnson_6_3_spectrum() {
        let ia = IntersectionArray::new(&[9, 4, 1], &[1, 4, 9]).unwrap();
        let s = spectrum(&ia, 1e-9);
        assert_eq!(exact_values(&s), vec![9, 3, -1, -3]);
        assert_eq!(s.multiplicities, vec![1, 5, 9, 5]);
    }

    #[test]
    fn complete_graph_spectrum() {
        let ia = intersection_array(&Graph::complete(4)).unwrap();
        let s = spectrum(&ia, 1e-9);
        assert_eq!(exact_values(&s), vec![3, -1]);
    }

    #[test]
    fn pentagon_is_numeric() {
        let ia = intersection_array(&Graph::cycle(5)).unwrap();
        let s = spectrum(&ia, 1e-12);
        assert!(s.numeric);
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        assert!((s.eigenvalues[1].to_f64() - golden).abs() < 1e-10);
        assert!((s.eigenvalues[2].to_f64() + golden + 1.0).abs() < 1e-10);
        assert_eq!(s.multiplicities, vec![1, 2, 2]);
        let kt = krein_parameters(&s, 1e-9).unwrap();
        assert!(kt.nonnegative());
        assert!(!q_polynomial_orderings(&kt).is_empty());
        assert!(matches!(primitive_idempotents(&Graph::cycle(5), &s), Err(Error::IrrationalSpectrum { .. })));
    }

    #[test]
    fn k4_idempotents() {
        let g = Graph::complete(4);
        let s = spectrum(&intersection_array(&g).unwrap(), 1e-9);
        let e = primitive_idempotents(&g, &s).unwrap();
        assert_eq!(e.entry(0, 0, 1), Q::new(1.into(), 4.into()));
        assert_eq!(e.entry(1, 0, 0), Q::new(3.into(), 4.into()));
        assert_eq!(e.entry(1, 0, 1), Q::new((-1).into(), 4.into()));
    }

    #[test]
    fn cube_idempotents_are_orthogonal_projections() {
        let mut edges = Vec::new();
        for u in 0..8usize {
            for bit in 0..3 {
                let v = u ^ (1 << bit);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(8, edges).unwrap();
        let s = spectrum(&intersection_array(&g).unwrap(), 1e-9);
        let e = primitive_idempotents(&g, &s).unwrap();
        let mut sum = crate::linalg::zeros(8, 8);
        for i in 0..e.len() {
            let ei = e.dense(i);
            assert_eq!(rank(&ei) as i64, s.multiplicities[i]);
            for j in 0..e.len() {
                let p = mat_mul(&ei, &e.dense(j));
                if i == j {
                    assert_eq!(p, ei);
                } else {
                    assert!(p.iter().flatten().all(Zero::is_zero));
                }
            }
            for (r, row) in ei.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    sum[r][c] += x;
                }
            }
        }
        assert_eq!(sum, identity(8));
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn hamming_krein_is_tridiagonal_in_first_index() {
        let s = spectrum(&hamming33(), 1e-9);
        let kt = krein_parameters(&s, 1e-9).unwrap();
        let e = kt.exact.as_ref().unwrap();
        for h in 0..4 {
            for j in 0..4 {
                if usize::abs_diff(h, j) > 1 {
                    assert!(e[h][1][j].is_zero());
                }
            }
            for i in 0..4 {
                let want = if h == i { q(s.multiplicities[i]) } else { q(0) };
                assert_eq!(e[0][h][i], want);
            }
        }
        assert!(q_polynomial_orderings(&kt).contains(&vec![0, 1, 2, 3]));
    }
}
