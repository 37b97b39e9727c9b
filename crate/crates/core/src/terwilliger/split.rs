use crate::graph_core::{DistancePartition, Graph};
use num_traits::Zero;
use std::ops::AddAssign;

/// The dual idempotents `E*_0, …, E*_ε` of a base vertex, kept implicit in
/// the distance partition: `E*_i` keeps the coordinates in layer `i`.
#[derive(Clone, Debug)]
pub struct DualIdempotents<'a> {
    partition: &'a DistancePartition,
}

impl<'a> DualIdempotents<'a> {
    pub fn new(partition: &'a DistancePartition) -> Self {
        Self { partition }
    }

    pub fn len(&self) -> usize {
        self.partition.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partition.layers.is_empty()
    }

    /// `E*_i v`.
    pub fn project<T: Clone + Zero>(&self, i: usize, v: &[T]) -> Vec<T> {
        v.iter()
            .enumerate()
            .map(|(y, x)| if self.partition.layer_of[y] == i { x.clone() } else { T::zero() })
            .collect()
    }

    /// The diagonal of `E*_i` as a 0/1 vector.
    pub fn diagonal(&self, i: usize) -> Vec<u8> {
        self.partition.layer_of.iter().map(|&l| u8::from(l == i)).collect()
    }
}

/// A square 0/1 matrix stored as sorted column lists per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseBinary {
    rows: Vec<Vec<usize>>,
}

impl SparseBinary {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        let mut rows = rows;
        for r in &mut rows {
            r.sort_unstable();
        }
        Self { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].binary_search(&j).is_ok()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.n()];
        for (i, r) in self.rows.iter().enumerate() {
            for &j in r {
                rows[j].push(i);
            }
        }
        Self { rows }
    }

    /// Entrywise sum, or `None` if the supports overlap.
    pub fn disjoint_sum(&self, other: &Self) -> Option<Self> {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut r: Vec<usize> = a.iter().chain(b).copied().collect();
                r.sort_unstable();
                let len = r.len();
                r.dedup();
                (r.len() == len).then_some(r)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self { rows })
    }

    pub fn apply<T: Clone + Zero + for<'b> AddAssign<&'b T>>(&self, v: &[T]) -> Vec<T> {
        self.rows
            .iter()
            .map(|r| {
                let mut s = T::zero();
                for &j in r {
                    s += &v[j];
                }
                s
            })
            .collect()
    }
}

/// `A = L + F + R`: lowering, flat and raising parts of the adjacency matrix
/// with respect to a base vertex.
#[derive(Clone, Debug)]
pub struct LfrSplit {
    pub l: SparseBinary,
    pub f: SparseBinary,
    pub r: SparseBinary,
}

/// `L[z,y] = 1` iff `z ~ y` and `z` is one layer closer to the base than `y`;
/// `F[z,y] = 1` iff `z ~ y` in the same layer; `R = Lᵀ`.
pub fn lfr_split(g: &Graph, dp: &DistancePartition) -> LfrSplit {
    let n = g.n();
    let mut l = vec![Vec::new(); n];
    let mut f = vec![Vec::new(); n];
    let mut r = vec![Vec::new(); n];
    for z in 0..n {
        let lz = dp.layer_of[z];
        for &y in g.neighbors(z) {
            let ly = dp.layer_of[y];
            if ly == lz + 1 {
                l[z].push(y);
            } else if ly == lz {
                f[z].push(y);
            } else {
                r[z].push(y);
            }
        }
    }
    LfrSplit { l: SparseBinary::from_rows(l), f: SparseBinary::from_rows(f), r: SparseBinary::from_rows(r) }
}

impl LfrSplit {
    /// The adjacency matrix `L + F + R`.
    pub fn adjacency(&self) -> SparseBinary {
        self.l
            .disjoint_sum(&self.f)
            .and_then(|lf| lf.disjoint_sum(&self.r))
            .expect("L, F and R have disjoint supports")
    }
}
