use crate::graph_core::{DistancePartition, Graph};
use num_traits::Zero;
use std::ops::AddAssign;

/// One generator of the Terwilliger algebra acting between layers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// Lowering: layer `i` to layer `i - 1`.
    L,
    /// Flat: layer `i` to itself.
    F,
    /// Raising: layer `i` to layer `i + 1`.
    R,
}

impl Op {
    pub fn shift(self) -> isize {
        match self {
            Op::L => -1,
            Op::F => 0,
            Op::R => 1,
        }
    }

    pub fn transpose(self) -> Op {
        match self {
            Op::L => Op::R,
            Op::F => Op::F,
            Op::R => Op::L,
        }
    }
}

/// Parses a word such as `"RLL"`; letters apply right to left.
pub fn word(s: &str) -> Vec<Op> {
    s.chars()
        .map(|c| match c {
            'L' => Op::L,
            'F' => Op::F,
            'R' => Op::R,
            other => panic!("unknown generator `{other}`"),
        })
        .collect()
}

/// `L`, `F` and `R` restricted to consecutive layers, in layer-local
/// coordinates. A vector supported on layer `i` is a slice of length `k_i`.
#[derive(Clone, Debug)]
pub struct LayerOps {
    vertices: Vec<Vec<usize>>,
    /// `up[i][a]`: positions in layer `i + 1` adjacent to position `a` of layer `i`.
    up: Vec<Vec<Vec<usize>>>,
    down: Vec<Vec<Vec<usize>>>,
    flat: Vec<Vec<Vec<usize>>>,
}

impl LayerOps {
    pub fn new(g: &Graph, dp: &DistancePartition) -> Self {
        let eps = dp.eccentricity();
        let mut up = Vec::with_capacity(eps + 1);
        let mut down = Vec::with_capacity(eps + 1);
        let mut flat = Vec::with_capacity(eps + 1);
        for i in 0..=eps {
            let mut u = Vec::new();
            let mut d = Vec::new();
            let mut f = Vec::new();
            for &y in dp.layer(i) {
                let (mut uy, mut dy, mut fy) = (Vec::new(), Vec::new(), Vec::new());
                for &z in g.neighbors(y) {
                    let pos = dp.index_in_layer[z];
                    match dp.layer_of[z] as isize - i as isize {
                        1 => uy.push(pos),
                        -1 => dy.push(pos),
                        _ => fy.push(pos),
                    }
                }
                u.push(uy);
                d.push(dy);
                f.push(fy);
            }
            up.push(u);
            down.push(d);
            flat.push(f);
        }
        Self { vertices: dp.layers.clone(), up, down, flat }
    }

    pub fn epsilon(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn size(&self, i: usize) -> usize {
        self.vertices[i].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.vertices.iter().map(Vec::len).collect()
    }

    /// Global vertex ids of layer `i`, in layer-local order.
    pub fn vertices(&self, i: usize) -> &[usize] {
        &self.vertices[i]
    }

    /// `op` applied to `v ∈ E*_iV`; `None` when the target layer does not exist.
    pub fn apply<T>(&self, op: Op, i: usize, v: &[T]) -> Option<Vec<T>>
    where
        T: Clone + Zero + for<'a> AddAssign<&'a T>,
    {
        let target = i as isize + op.shift();
        if target < 0 || target as usize > self.epsilon() {
            return None;
        }
        let t = target as usize;
        // (L v)_b = Σ v_a over a in layer i adjacent to b in layer i - 1, i.e. the up-list of b.
        let lists = match op {
            Op::L => &self.up[t],
            Op::R => &self.down[t],
            Op::F => &self.flat[t],
        };
        Some(
            lists
                .iter()
                .map(|adj| {
                    let mut s = T::zero();
                    for &a in adj {
                        s += &v[a];
                    }
                    s
                })
                .collect(),
        )
    }

    /// A word such as `[R, L, L]` applied right to left to `v ∈ E*_iV`.
    /// Returns the target layer and image, or `None` if the image is forced
    /// to be zero by leaving the layer range.
    pub fn apply_word<T>(&self, w: &[Op], i: usize, v: &[T]) -> Option<(usize, Vec<T>)>
    where
        T: Clone + Zero + for<'a> AddAssign<&'a T>,
    {
        let mut layer = i;
        let mut cur = v.to_vec();
        for &op in w.iter().rev() {
            cur = self.apply(op, layer, &cur)?;
            layer = (layer as isize + op.shift()) as usize;
        }
        Some((layer, cur))
    }

    /// The block `E*_j · word · E*_i` as a `k_j × k_i` integer matrix, where
    /// `j` is the layer the word lands in.
    pub fn block(&self, w: &[Op], i: usize) -> Option<(usize, Vec<Vec<i64>>)> {
        let target = i as isize + w.iter().map(|o| o.shift()).sum::<isize>();
        if target < 0 || target as usize > self.epsilon() {
            return None;
        }
        let t = target as usize;
        let ki = self.size(i);
        let mut m = vec![vec![0i64; ki]; self.size(t)];
        for a in 0..ki {
            let mut e = vec![0i64; ki];
            e[a] = 1;
            if let Some((_, col)) = self.apply_word(w, i, &e) {
                for (row, x) in m.iter_mut().zip(col) {
                    row[a] = x;
                }
            }
        }
        Some((t, m))
    }

    /// Splits a global vector into its layer slices.
    pub fn to_graded<T: Clone>(&self, v: &[T]) -> Vec<Vec<T>> {
        self.vertices.iter().map(|layer| layer.iter().map(|&y| v[y].clone()).collect()).collect()
    }

    /// Reassembles layer slices into a global vector.
    pub fn from_graded<T: Clone + Zero>(&self, slices: &[Vec<T>]) -> Vec<T> {
        let n = self.vertices.iter().map(Vec::len).sum();
        let mut v = vec![T::zero(); n];
        for (layer, slice) in self.vertices.iter().zip(slices) {
            for (&y, x) in layer.iter().zip(slice) {
                v[y] = x.clone();
            }
        }
        v
    }

    /// A slice of layer `i` embedded as a global vector.
    pub fn embed<T: Clone + Zero>(&self, i: usize, slice: &[T]) -> Vec<T> {
        let n = self.vertices.iter().map(Vec::len).sum();
        let mut v = vec![T::zero(); n];
        for (&y, x) in self.vertices[i].iter().zip(slice) {
            v[y] = x.clone();
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::bfs_layers;
    use crate::terwilliger::lfr_split;

    #[test]
    fn layered_ops_agree_with_global_split() {
        let g = Graph::cycle(7);
        let dp = bfs_layers(&g, 0).unwrap();
        let ops = LayerOps::new(&g, &dp);
        let split = lfr_split(&g, &dp);
        let v: Vec<i64> = (1..=7).map(|x| x * x).collect();
        for (op, m) in [(Op::L, &split.l), (Op::F, &split.f), (Op::R, &split.r)] {
            let global = m.apply(&v);
            let graded = ops.to_graded(&v);
            let mut total = vec![0i64; 7];
            for (i, slice) in graded.iter().enumerate() {
                if let Some(img) = ops.apply(op, i, slice) {
                    let t = (i as isize + op.shift()) as usize;
                    for (x, y) in total.iter_mut().zip(ops.embed(t, &img)) {
                        *x += y;
                    }
                }
            }
            assert_eq!(total, global, "{op:?}");
        }
    }

    #[test]
    fn word_parsing() {
        assert_eq!(word("RLL"), vec![Op::R, Op::L, Op::L]);
        assert_eq!(Op::L.transpose(), Op::R);
    }
}
