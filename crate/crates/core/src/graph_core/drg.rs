use super::graph::{bfs_layers, Graph};
use crate::error::{Error, Result};
use crate::rational::{q, Q};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

/// Intersection numbers `c_i`, `a_i`, `b_i` of a distance-regular graph.
///
/// Stored with the conventions `c_0 = 0` and `b_D = 0`, so every vector has
/// length `D + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionArray {
    c: Vec<i64>,
    a: Vec<i64>,
    b: Vec<i64>,
}

impl IntersectionArray {
    /// From `{b_0..b_{D-1}; c_1..c_D}`.
    pub fn new(b: &[i64], c: &[i64]) -> Result<Self> {
        if b.len() != c.len() || b.is_empty() {
            return Err(Error::InvalidParams("b and c must both have length D >= 1".into()));
        }
        let d = b.len();
        let k = b[0];
        let mut cc = vec![0];
        cc.extend_from_slice(c);
        let mut bb = b.to_vec();
        bb.push(0);
        let a: Vec<i64> = (0..=d).map(|i| k - bb[i] - cc[i]).collect();
        let ia = Self { c: cc, a, b: bb };
        ia.validate()?;
        Ok(ia)
    }

    fn validate(&self) -> Result<()> {
        let d = self.diameter();
        let bad = |m: &str| Err(Error::InvalidParams(format!("invalid intersection array: {m}")));
        if self.c[1] != 1 {
            return bad("c_1 must be 1");
        }
        if (1..=d).any(|i| self.c[i] < 1) || (0..d).any(|i| self.b[i] < 1) {
            return bad("c_i and b_i must be positive");
        }
        if self.a.iter().any(|&x| x < 0) {
            return bad("a_i must be nonnegative");
        }
        if (1..d).any(|i| self.c[i] > self.c[i + 1]) || (1..d).any(|i| self.b[i] > self.b[i - 1]) {
            return bad("c_i must be nondecreasing and b_i nonincreasing");
        }
        Ok(())
    }

    pub fn diameter(&self) -> usize {
        self.c.len() - 1
    }

    pub fn valency(&self) -> i64 {
        self.b[0]
    }

    pub fn c(&self, i: usize) -> i64 {
        self.c[i]
    }

    pub fn a(&self, i: usize) -> i64 {
        self.a[i]
    }

    pub fn b(&self, i: usize) -> i64 {
        self.b[i]
    }

    /// `c_1..c_D`
    pub fn c_seq(&self) -> &[i64] {
        &self.c[1..]
    }

    /// `a_0..a_D`
    pub fn a_seq(&self) -> &[i64] {
        &self.a
    }

    /// `b_0..b_{D-1}`
    pub fn b_seq(&self) -> &[i64] {
        &self.b[..self.diameter()]
    }

    /// Layer sizes `k_i`, from `k_{i+1} c_{i+1} = k_i b_i`.
    pub fn layer_sizes(&self) -> Vec<i64> {
        let mut k = vec![1i64];
        for i in 0..self.diameter() {
            k.push(k[i] * self.b[i] / self.c[i + 1]);
        }
        k
    }

    pub fn vertex_count(&self) -> i64 {
        self.layer_sizes().iter().sum()
    }

    pub fn is_bipartite(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// All intersection numbers `p^h_{ij}`, indexed `[h][i][j]`.
    ///
    /// Computed in the regular representation of the Bose-Mesner algebra from
    /// `A A_j = b_{j-1} A_{j-1} + a_j A_j + c_{j+1} A_{j+1}`.
    pub fn intersection_numbers(&self) -> Vec<Vec<Vec<i64>>> {
        let d = self.diameter();
        // mats[i][h][j] = p^h_{ij}: column j of the matrix of multiplication by A_i.
        let mut mats: Vec<Vec<Vec<Q>>> = Vec::new();
        let mut ident = vec![vec![Q::zero(); d + 1]; d + 1];
        for (j, row) in ident.iter_mut().enumerate() {
            row[j] = q(1);
        }
        let mut b1 = vec![vec![Q::zero(); d + 1]; d + 1];
        for j in 0..=d {
            if j > 0 {
                b1[j - 1][j] = q(self.b[j - 1]);
            }
            b1[j][j] = q(self.a[j]);
            if j < d {
                b1[j + 1][j] = q(self.c[j + 1]);
            }
        }
        mats.push(ident);
        mats.push(b1.clone());
        for j in 1..d {
            let prod = crate::linalg::mat_mul(&b1, &mats[j]);
            let next: Vec<Vec<Q>> = (0..=d)
                .map(|h| {
                    (0..=d)
                        .map(|l| {
                            (&prod[h][l]
                                - q(self.b[j - 1]) * &mats[j - 1][h][l]
                                - q(self.a[j]) * &mats[j][h][l])
                                / q(self.c[j + 1])
                        })
                        .collect()
                })
                .collect();
            mats.push(next);
        }
        (0..=d)
            .map(|h| {
                (0..=d)
                    .map(|i| (0..=d).map(|j| mats[i][h][j].to_integer().to_i64().unwrap_or(i64::MAX)).collect())
                    .collect()
            })
            .collect()
    }

    /// The tridiagonal intersection matrix, row `i` holding `c_i, a_i, b_i`.
    pub fn tridiagonal(&self) -> Vec<Vec<i64>> {
        let d = self.diameter();
        let mut m = vec![vec![0; d + 1]; d + 1];
        for i in 0..=d {
            if i > 0 {
                m[i][i - 1] = self.c[i];
            }
            m[i][i] = self.a[i];
            if i < d {
                m[i][i + 1] = self.b[i];
            }
        }
        m
    }
}

impl Serialize for IntersectionArray {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("IntersectionArray", 3)?;
        st.serialize_field("c", self.c_seq())?;
        st.serialize_field("a", self.a_seq())?;
        st.serialize_field("b", self.b_seq())?;
        st.end()
    }
}

/// Decides distance-regularity by checking that `c_i`, `a_i`, `b_i` are the
/// same for every ordered pair of vertices at distance `i`.
pub fn intersection_array(g: &Graph) -> Result<IntersectionArray> {
    let n = g.n();
    let mut reference: Option<(Vec<i64>, Vec<i64>, Vec<i64>)> = None;
    for x in 0..n {
        let p = bfs_layers(g, x)?;
        let d = p.eccentricity();
        let mut c = vec![-1i64; d + 1];
        let mut a = vec![-1i64; d + 1];
        let mut b = vec![-1i64; d + 1];
        for y in 0..n {
            let i = p.layer_of[y];
            let mut counts = [0i64; 3];
            for &z in g.neighbors(y) {
                counts[p.layer_of[z] + 1 - i] += 1;
            }
            for (slot, (arr, kind)) in [(&mut c, "c"), (&mut a, "a"), (&mut b, "b")].into_iter().enumerate() {
                if arr[i] < 0 {
                    arr[i] = counts[slot];
                } else if arr[i] != counts[slot] {
                    return Err(Error::NotDistanceRegular {
                        x,
                        y,
                        distance: i,
                        kind,
                        expected: arr[i] as usize,
                        found: counts[slot] as usize,
                    });
                }
            }
        }
        match &reference {
            None => reference = Some((c, a, b)),
            Some((rc, ra, rb)) => {
                for (arr, rarr, kind) in [(&c, rc, "c"), (&a, ra, "a"), (&b, rb, "b")] {
                    if let Some(i) = (0..arr.len().max(rarr.len())).find(|&i| arr.get(i) != rarr.get(i)) {
                        let y = p.layer(i.min(d)).first().copied().unwrap_or(x);
                        return Err(Error::NotDistanceRegular {
                            x,
                            y,
                            distance: i,
                            kind,
                            expected: rarr.get(i).copied().unwrap_or(0).max(0) as usize,
                            found: arr.get(i).copied().unwrap_or(0).max(0) as usize,
                        });
                    }
                }
            }
        }
    }
    let (c, _, b) = reference.ok_or_else(|| Error::InvalidParams("empty graph".into()))?;
    let d = c.len() - 1;
    if d == 0 {
        return Err(Error::InvalidParams("a single vertex has no intersection array".into()));
    }
    IntersectionArray::new(&b[..d], &c[1..])
}

/// `[j 1]_q = 1 + q + ... + q^{j-1}`.
pub fn gaussian_binomial(j: u32, q: i64) -> i128 {
    let mut s = 0i128;
    let mut p = 1i128;
    for _ in 0..j {
        s += p;
        p *= q as i128;
    }
    s
}

/// Classical parameters `(D, q, α, β)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalParameters {
    pub d: usize,
    pub q: i64,
    #[serde(with = "crate::rational::serde_fraction")]
    pub alpha: Q,
    #[serde(with = "crate::rational::serde_fraction")]
    pub beta: Q,
}

impl ClassicalParameters {
    pub fn is_negative_type(&self) -> bool {
        self.q <= -2
    }

    pub fn c(&self, i: u32) -> Q {
        let gi = q(gaussian_binomial(i, self.q) as i64);
        let gim1 = q(gaussian_binomial(i.saturating_sub(1), self.q) as i64);
        gi * (q(1) + &self.alpha * gim1)
    }

    pub fn b(&self, i: u32) -> Q {
        let gd = q(gaussian_binomial(self.d as u32, self.q) as i64);
        let gi = q(gaussian_binomial(i, self.q) as i64);
        (gd - &gi) * (&self.beta - &self.alpha * gi)
    }

    /// The intersection array these parameters generate, if it is integral and valid.
    pub fn to_array(&self) -> Option<IntersectionArray> {
        let d = self.d as u32;
        let b: Option<Vec<i64>> = (0..d).map(|i| to_int(&self.b(i))).collect();
        let c: Option<Vec<i64>> = (1..=d).map(|i| to_int(&self.c(i))).collect();
        IntersectionArray::new(&b?, &c?).ok()
    }
}

fn to_int(x: &Q) -> Option<i64> {
    x.is_integer().then(|| x.to_integer().to_i64()).flatten()
}

/// Every `(D, q, α, β)` with integer `q ∉ {0, -1}`, `|q| <= c_3 + 2`, that
/// reproduces the array exactly. Empty when `D < 3` or nothing verifies.
pub fn classical_parameters(ia: &IntersectionArray) -> Vec<ClassicalParameters> {
    let d = ia.diameter();
    if d < 3 {
        return Vec::new();
    }
    let bound = ia.c(3) + 2;
    let mut out = Vec::new();
    for qv in -bound..=bound {
        if qv == 0 || qv == -1 {
            continue;
        }
        let alpha = Q::new((ia.c(2)).into(), (1 + qv).into()) - q(1);
        let gd = gaussian_binomial(d as u32, qv);
        if gd == 0 {
            continue;
        }
        let beta = Q::new(ia.b(0).into(), (gd as i64).into());
        let cp = ClassicalParameters { d, q: qv, alpha, beta };
        let ok = (1..=d as u32).all(|i| cp.c(i) == q(ia.c(i as usize)))
            && (0..d as u32).all(|i| cp.b(i) == q(ia.b(i as usize)));
        if ok {
            out.push(cp);
        }
    }
    out
}

/// `a_i = a_1 c_i` for `1 <= i <= D-1` and no induced `K_{1,1,2}`.
pub fn near_polygon_check(g: &Graph, ia: &IntersectionArray) -> bool {
    let d = ia.diameter();
    if (1..d).any(|i| ia.a(i) != ia.a(1) * ia.c(i)) {
        return false;
    }
    !contains_induced_k112(g)
}

/// An edge `uv` with two nonadjacent common neighbours.
pub fn contains_induced_k112(g: &Graph) -> bool {
    for (u, v) in g.edges() {
        let common: Vec<usize> = intersect_sorted(g.neighbors(u), g.neighbors(v));
        for (i, &w1) in common.iter().enumerate() {
            if common[i + 1..].iter().any(|&w2| !g.adjacent(w1, w2)) {
                return true;
            }
        }
    }
    false
}

pub(crate) fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
