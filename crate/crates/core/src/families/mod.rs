//! Constructors for the distance-regular families studied here.
//!
//! Vertices are numbered in the lexicographic order of their canonical labels
//! (words, subsets, echelon matrices), so every output is reproducible.

pub mod field;
mod geometry;

pub use field::Field;
pub use geometry::{dual_polar_2a, dual_polar_2a_subspaces, hermitian_forms};

use crate::error::{Error, Result};
use crate::graph_core::Graph;
use crate::terwilliger::cartesian_product;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

pub const DEFAULT_BUDGET: usize = 100_000;

pub(crate) fn check_budget(requested: u128, budget: usize) -> Result<()> {
    if requested > budget as u128 {
        Err(Error::BudgetExceeded { requested, budget })
    } else {
        Ok(())
    }
}

fn checked_pow(base: u128, exp: u32) -> u128 {
    base.checked_pow(exp).unwrap_or(u128::MAX)
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Hamming graph `H(D, n)`: words of length `D` over `0..n`, adjacent when
/// they differ in one coordinate.
pub fn hamming(d: usize, n: usize, budget: usize) -> Result<Graph> {
    if d < 1 || n < 2 {
        return Err(Error::InvalidParams("H(D,n) needs D >= 1 and n >= 2".into()));
    }
    let count = checked_pow(n as u128, d as u32);
    check_budget(count, budget)?;
    let count = count as usize;
    let place: Vec<usize> = (0..d).map(|i| n.pow((d - 1 - i) as u32)).collect();
    Ok(Graph::from_fn(count, |v| {
        let mut out = Vec::with_capacity(d * (n - 1));
        for &p in &place {
            let digit = (v / p) % n;
            for s in 0..n {
                if s != digit {
                    out.push(v - digit * p + s * p);
                }
            }
        }
        out
    }))
}

/// Johnson graph `J(n, D)`: `D`-subsets of `0..n`, adjacent when they meet in
/// `D - 1` points.
pub fn johnson(n: usize, d: usize, budget: usize) -> Result<Graph> {
    if d < 1 || n < 2 * d || n > 64 {
        return Err(Error::InvalidParams("J(n,D) needs 1 <= D, 2D <= n <= 64".into()));
    }
    check_budget(binomial(n as u64, d as u64), budget)?;
    let subsets = k_subsets(n, d);
    let index: HashMap<u64, usize> = subsets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    Ok(Graph::from_fn(subsets.len(), |v| {
        let s = subsets[v];
        let mut out = Vec::new();
        for a in (0..n).filter(|&a| s >> a & 1 == 1) {
            for b in (0..n).filter(|&b| s >> b & 1 == 0) {
                out.push(index[&(s & !(1 << a) | 1 << b)]);
            }
        }
        out
    }))
}

/// All `k`-subsets of `0..n` as bitmasks, in lexicographic order of their
/// sorted element lists.
fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, k: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for e in start..=n - k {
            rec(e + 1, n, k - 1, cur | 1 << e, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

/// Halved `n`-cube `½H(n, 2)`: even-weight words of length `n` in numeric
/// order, adjacent at Hamming distance 2.
pub fn halved_cube(n: usize, budget: usize) -> Result<Graph> {
    if !(2..=40).contains(&n) {
        return Err(Error::InvalidParams("½H(n,2) needs 2 <= n <= 40".into()));
    }
    check_budget(1u128 << (n - 1), budget)?;
    // Each pair {2j, 2j+1} holds exactly one even-weight word, so the
    // even-weight word w has index w / 2.
    let word = |v: usize| {
        let w = (2 * v) as u64;
        if w.count_ones().is_multiple_of(2) {
            w
        } else {
            w + 1
        }
    };
    Ok(Graph::from_fn(1 << (n - 1), |v| {
        let w = word(v);
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                out.push(((w ^ (1 << i) ^ (1 << j)) / 2) as usize);
            }
        }
        out
    }))
}

/// Shrikhande graph: Cayley graph on `Z_4 × Z_4` with connection set
/// `±(1,0), ±(0,1), ±(1,1)`; vertex `(a, b)` has index `4a + b`.
pub fn shrikhande() -> Graph {
    let steps = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    Graph::from_fn(16, |v| {
        let (a, b) = (v / 4, v % 4);
        steps.iter().map(|&(da, db)| ((a + da) % 4) * 4 + (b + db) % 4).collect()
    })
}

/// Doob graph `D(n, m)`: `n` Shrikhande factors followed by `m` copies of
/// `K_4`, combined by row-major Cartesian products.
pub fn doob(n: usize, m: usize, budget: usize) -> Result<Graph> {
    if n + m == 0 {
        return Err(Error::InvalidParams("D(n,m) needs at least one factor".into()));
    }
    check_budget(checked_pow(16, n as u32).saturating_mul(checked_pow(4, m as u32)), budget)?;
    let factors = std::iter::repeat_with(shrikhande).take(n).chain(std::iter::repeat_with(|| Graph::complete(4)).take(m));
    let mut acc: Option<Graph> = None;
    for f in factors {
        acc = Some(match acc {
            None => f,
            Some(g) => cartesian_product(&g, &f, budget)?,
        });
    }
    Ok(acc.expect("at least one factor"))
}

/// Gosset graph: two copies of the 28 pairs from `0..8`; pairs in the same
/// copy are adjacent when they share one point, pairs in different copies
/// when they are disjoint.
pub fn gosset() -> Graph {
    let pairs = k_subsets(8, 2);
    Graph::from_fn(56, |v| {
        let (cv, pv) = (v / 28, pairs[v % 28]);
        (0..56)
            .filter(|&u| {
                let (cu, pu) = (u / 28, pairs[u % 28]);
                let common = (pu & pv).count_ones();
                if cu == cv {
                    common == 1
                } else {
                    common == 0
                }
            })
            .collect()
    })
}

/// A family member together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Hamming { d: usize, n: usize },
    Johnson { n: usize, d: usize },
    HalvedCube { n: usize },
    Shrikhande,
    Doob { n: usize, m: usize },
    Gosset,
    DualPolar2A { r: u32, d: usize },
    HermitianForms { r: u32, d: usize },
}

/// What a constructed family member is expected to look like.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyExpectation {
    pub vertices: u128,
    pub diameter: usize,
    /// Sign of the classical parameter `q`, when the family has classical parameters.
    pub classical_q: Option<i64>,
}

impl FamilySpec {
    /// Parses `name` and its integer arguments, as in `hamming 3 3`.
    pub fn parse(name: &str, args: &[usize]) -> Result<Self> {
        let want = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!("{name} takes {k} integer arguments, got {}", args.len())))
            }
        };
        let spec = match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "hamming" => {
                want(2)?;
                FamilySpec::Hamming { d: args[0], n: args[1] }
            }
            "johnson" => {
                want(2)?;
                FamilySpec::Johnson { n: args[0], d: args[1] }
            }
            "halved_cube" | "halved" => {
                want(1)?;
                FamilySpec::HalvedCube { n: args[0] }
            }
            "shrikhande" => {
                want(0)?;
                FamilySpec::Shrikhande
            }
            "doob" => {
                want(2)?;
                FamilySpec::Doob { n: args[0], m: args[1] }
            }
            "gosset" => {
                want(0)?;
                FamilySpec::Gosset
            }
            "dual_polar_2a" | "dual_polar" => {
                want(2)?;
                FamilySpec::DualPolar2A { r: args[0] as u32, d: args[1] }
            }
            "hermitian_forms" | "hermitian" => {
                want(2)?;
                FamilySpec::HermitianForms { r: args[0] as u32, d: args[1] }
            }
            other => return Err(Error::InvalidParams(format!("unknown family `{other}`"))),
        };
        Ok(spec)
    }

    pub fn build(&self, budget: usize) -> Result<Graph> {
        match *self {
            FamilySpec::Hamming { d, n } => hamming(d, n, budget),
            FamilySpec::Johnson { n, d } => johnson(n, d, budget),
            FamilySpec::HalvedCube { n } => halved_cube(n, budget),
            FamilySpec::Shrikhande => Ok(shrikhande()),
            FamilySpec::Doob { n, m } => doob(n, m, budget),
            FamilySpec::Gosset => Ok(gosset()),
            FamilySpec::DualPolar2A { r, d } => dual_polar_2a(r, d, budget),
            FamilySpec::HermitianForms { r, d } => hermitian_forms(r, d, budget),
        }
    }

    /// Short label such as `H(3,3)`.
    pub fn label(&self) -> String {
        match *self {
            FamilySpec::Hamming { d, n } => format!("H({d},{n})"),
            FamilySpec::Johnson { n, d } => format!("J({n},{d})"),
            FamilySpec::HalvedCube { n } => format!("½H({n},2)"),
            FamilySpec::Shrikhande => "Shrikhande".into(),
            FamilySpec::Doob { n, m } => format!("D({n},{m})"),
            FamilySpec::Gosset => "Gosset".into(),
            FamilySpec::DualPolar2A { r, d } => format!("2A{}({r})", 2 * d - 1),
            FamilySpec::HermitianForms { r, d } => format!("Her{r}({d})"),
        }
    }

    pub fn expectation(&self) -> FamilyExpectation {
        let (vertices, diameter, classical_q) = match *self {
            FamilySpec::Hamming { d, n } => (checked_pow(n as u128, d as u32), d, Some(1)),
            FamilySpec::Johnson { n, d } => (binomial(n as u64, d as u64), d, Some(1)),
            FamilySpec::HalvedCube { n } => (1u128 << (n - 1), n / 2, Some(1)),
            FamilySpec::Shrikhande => (16, 2, None),
            FamilySpec::Doob { n, m } => (checked_pow(16, n as u32) * checked_pow(4, m as u32), 2 * n + m, Some(1)),
            FamilySpec::Gosset => (56, 3, None),
            FamilySpec::DualPolar2A { r, d } => {
                let r = r as u128;
                ((1..=d as u32).map(|i| r.pow(2 * i - 1) + 1).product(), d, Some(-(r as i64)))
            }
            FamilySpec::HermitianForms { r, d } => (checked_pow(r as u128, (d * d) as u32), d, Some(-(r as i64))),
        };
        FamilyExpectation { vertices, diameter, classical_q: if diameter >= 3 { classical_q } else { None } }
    }
}
