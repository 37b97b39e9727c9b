use serde::Serialize;
use std::collections::BTreeMap;

type Vector = BTreeMap<(i64, i64), i128>;

/// The abstract two-parameter ladder on `w_{ℓ,j}`, `0 ≤ ℓ ≤ δ`, `0 ≤ j ≤ p`.
#[derive(Clone, Copy, Debug)]
pub struct DoobModuleShape {
    pub delta: i64,
    pub p: i64,
}

impl DoobModuleShape {
    fn inside(&self, (l, j): (i64, i64)) -> bool {
        (0..=self.delta).contains(&l) && (0..=self.p).contains(&j)
    }

    fn push(&self, out: &mut Vector, at: (i64, i64), c: i128) {
        if c != 0 && self.inside(at) {
            *out.entry(at).or_default() += c;
        }
    }

    /// `L w_{ℓ,j} = 3(δ-ℓ+1) w_{ℓ-1,j} + (p-j+1) w_{ℓ,j-1}`.
    pub fn lower(&self, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&(l, j), &c) in v {
            self.push(&mut out, (l - 1, j), c * 3 * (self.delta - l + 1) as i128);
            self.push(&mut out, (l, j - 1), c * (self.p - j + 1) as i128);
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// `R w_{ℓ,j} = 3(j+1) w_{ℓ,j+1} + (ℓ+1) w_{ℓ+1,j}`.
    pub fn raise(&self, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&(l, j), &c) in v {
            self.push(&mut out, (l, j + 1), c * 3 * (j + 1) as i128);
            self.push(&mut out, (l + 1, j), c * (l + 1) as i128);
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

/// A mismatch between an expansion and its closed form.
#[derive(Clone, Debug, Serialize)]
pub struct DoobMismatch {
    pub l: i64,
    pub j: i64,
    pub what: &'static str,
    pub found: i128,
    pub expected: i128,
}

#[derive(Clone, Debug, Serialize)]
pub struct DoobReport {
    pub delta: i64,
    pub p: i64,
    pub holds: bool,
    pub vectors_checked: usize,
    pub mismatches: Vec<DoobMismatch>,
}

/// Expands `RL²`, `LRL`, `L²R` on every grid vector and checks
/// `-½RL² + LRL - ½L²R = 3L`, together with the closed forms of the
/// `w_{ℓ-1,j}` coefficient of `LRL` and the `w_{ℓ-2,j+1}` coefficient of `RL²`.
pub fn doob_symbolic_check(delta: i64, p: i64) -> DoobReport {
    let s = DoobModuleShape { delta, p };
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for l in 0..=delta {
        for j in 0..=p {
            checked += 1;
            let w = Vector::from([((l, j), 1)]);
            let lw = s.lower(&w);
            let rll = s.raise(&s.lower(&lw));
            let lrl = s.lower(&s.raise(&lw));
            let llr = s.lower(&s.lower(&s.raise(&w)));
            let mut keys: Vec<_> = rll.keys().chain(lrl.keys()).chain(llr.keys()).chain(lw.keys()).copied().collect();
            keys.sort_unstable();
            keys.dedup();
            let get = |v: &Vector, k| v.get(&k).copied().unwrap_or(0);
            for k in keys {
                let lhs = -get(&rll, k) + 2 * get(&lrl, k) - get(&llr, k);
                let rhs = 6 * get(&lw, k);
                if lhs != rhs {
                    mismatches.push(DoobMismatch { l, j, what: "identity", found: lhs, expected: rhs });
                }
            }
            let (dl, lj, pp) = ((delta - l + 1) as i128, l as i128, p as i128);
            let jj = j as i128;
            if s.inside((l - 1, j)) {
                let expected = 9 * dl * (lj * dl + 2 * jj * (pp - jj) + pp);
                let found = get(&lrl, (l - 1, j));
                if found != expected {
                    mismatches.push(DoobMismatch { l, j, what: "LRL", found, expected });
                }
            }
            if s.inside((l - 2, j + 1)) {
                let expected = 27 * dl * (dl + 1) * (jj + 1);
                let found = get(&rll, (l - 2, j + 1));
                if found != expected {
                    mismatches.push(DoobMismatch { l, j, what: "RL^2", found, expected });
                }
            }
        }
    }
    DoobReport { delta, p, holds: mismatches.is_empty(), vectors_checked: checked, mismatches }
}
