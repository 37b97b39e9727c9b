use crate::linalg::{solve_affine, Matrix};
use crate::rational::{q, serde_fraction_vec, Q};
use crate::terwilliger::{word, LayerOps};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeSet;

/// Coordinates of a layer unknown vector `(e_i⁻, e_i⁺, f_i)`.
pub const E_MINUS: usize = 0;
pub const E_PLUS: usize = 1;
pub const F: usize = 2;

/// One scalar equation `a e⁻ + b e⁺ + c f = d`, with integer coefficients.
pub type Row = [i64; 4];

/// The affine set of `(e_i⁻, e_i⁺, f_i)` for which
/// `e_i⁻ RL² + LRL + e_i⁺ L²R - f_i L` vanishes on `E*_iV`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerSolution {
    pub layer: usize,
    /// Which of `e⁻`, `e⁺`, `f` are unknowns at this layer.
    pub unknowns: [bool; 3],
    /// Number of distinct scalar equations after removing duplicates.
    pub equations: usize,
    #[serde(serialize_with = "ser_opt_vec")]
    pub particular: Option<Vec<Q>>,
    #[serde(serialize_with = "ser_vecs")]
    pub directions: Vec<Vec<Q>>,
    /// A small inconsistent subset of the equations when the set is empty.
    pub witness: Option<Vec<Row>>,
}

fn ser_opt_vec<S: serde::Serializer>(v: &Option<Vec<Q>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => serde_fraction_vec::serialize(v, s),
        None => s.serialize_none(),
    }
}

fn ser_vecs<S: serde::Serializer>(v: &[Vec<Q>], s: S) -> Result<S::Ok, S::Error> {
    let strings: Vec<Vec<String>> =
        v.iter().map(|x| x.iter().map(crate::rational::to_fraction_string).collect()).collect();
    strings.serialize(s)
}

impl LayerSolution {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    /// Dimension of the solution set, `None` when it is empty.
    pub fn dimension(&self) -> Option<usize> {
        self.particular.as_ref().map(|_| self.directions.len())
    }

    /// The point `particular + Σ t_k directions[k]`.
    pub fn point(&self, t: &[Q]) -> Option<Vec<Q>> {
        let mut p = self.particular.clone()?;
        for (d, tk) in self.directions.iter().zip(t) {
            for (x, y) in p.iter_mut().zip(d) {
                *x += tk * y;
            }
        }
        Some(p)
    }

    /// Whether `(e⁻, e⁺)` extends to a solution, and the matching `f`.
    pub fn f_for(&self, e_minus: &Q, e_plus: &Q) -> Option<Q> {
        let p = self.particular.as_ref()?;
        let pick = |use_it: bool, x: &Q| if use_it { x.clone() } else { Q::zero() };
        let target = [pick(self.unknowns[E_MINUS], e_minus), pick(self.unknowns[E_PLUS], e_plus)];
        // Solve Σ t_k d_k[0..2] = target - p[0..2].
        let k = self.directions.len();
        let a: Matrix = (0..2).map(|c| self.directions.iter().map(|d| d[c].clone()).collect()).collect();
        let b: Vec<Q> = (0..2).map(|c| &target[c] - &p[c]).collect();
        let (t, _) = if k == 0 {
            if b.iter().all(Zero::is_zero) {
                (Vec::new(), Vec::new())
            } else {
                return None;
            }
        } else {
            solve_affine(&a, &b, k)?
        };
        self.point(&t).map(|x| x[F].clone())
    }
}

/// The integer blocks `E*_{i-1} W E*_i` for `W ∈ {RL², L²R, L, LRL}`, turned
/// into deduplicated scalar equations.
pub fn layer_equations(ops: &LayerOps, i: usize) -> BTreeSet<Row> {
    let eps = ops.epsilon();
    let blocks: Vec<Option<Vec<Vec<i64>>>> =
        ["RLL", "LLR", "L", "LRL"].iter().map(|w| ops.block(&word(w), i).map(|(_, m)| m)).collect();
    let rows = ops.size(i - 1);
    let cols = ops.size(i);
    let entry = |b: &Option<Vec<Vec<i64>>>, r: usize, c: usize| b.as_ref().map_or(0, |m| m[r][c]);
    let mut out = BTreeSet::new();
    for r in 0..rows {
        for c in 0..cols {
            let mut row = [
                if i == 1 { 0 } else { entry(&blocks[0], r, c) },
                if i == eps { 0 } else { entry(&blocks[1], r, c) },
                -entry(&blocks[2], r, c),
                -entry(&blocks[3], r, c),
            ];
            if row.iter().all(|&x| x == 0) {
                continue;
            }
            normalise(&mut row);
            out.insert(row);
        }
    }
    out
}

fn normalise(row: &mut Row) {
    let g = row.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    if g > 1 {
        for x in row.iter_mut() {
            *x /= g;
        }
    }
    if let Some(&first) = row.iter().find(|&&x| x != 0) {
        if first < 0 {
            for x in row.iter_mut() {
                *x = -*x;
            }
        }
    }
}

fn to_system(rows: &[Row]) -> (Matrix, Vec<Q>) {
    (rows.iter().map(|r| r[..3].iter().map(|&x| q(x)).collect()).collect(), rows.iter().map(|r| q(r[3])).collect())
}

/// Exact solution set of the layer-`i` equation, `1 <= i <= ε`.
pub fn solve_layer(ops: &LayerOps, i: usize) -> LayerSolution {
    let eps = ops.epsilon();
    assert!(1 <= i && i <= eps, "layer index out of range");
    let unknowns = [i != 1, i != eps, true];
    let mut rows: Vec<Row> = layer_equations(ops, i).into_iter().collect();
    // Conventions e_1⁻ = 0 and e_ε⁺ = 0 enter as equations.
    if i == 1 {
        rows.push([1, 0, 0, 0]);
    }
    if i == eps {
        rows.push([0, 1, 0, 0]);
    }
    let (a, b) = to_system(&rows);
    match solve_affine(&a, &b, 3) {
        Some((particular, directions)) => LayerSolution {
            layer: i,
            unknowns,
            equations: rows.len(),
            particular: Some(particular),
            directions,
            witness: None,
        },
        None => LayerSolution {
            layer: i,
            unknowns,
            equations: rows.len(),
            particular: None,
            directions: Vec::new(),
            witness: Some(shrink_witness(&rows)),
        },
    }
}

/// An inconsistent prefix of `rows`, then greedily pruned.
fn shrink_witness(rows: &[Row]) -> Vec<Row> {
    let consistent = |rs: &[Row]| {
        let (a, b) = to_system(rs);
        solve_affine(&a, &b, 3).is_some()
    };
    let mut keep: Vec<Row> = Vec::new();
    for r in rows {
        keep.push(*r);
        if !consistent(&keep) {
            break;
        }
    }
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        if !trial.is_empty() && !consistent(&trial) {
            keep = trial;
        } else {
            i += 1;
        }
    }
    keep
}
