use crate::rational::{serde_fraction_vec, Q};
use num_traits::{One, Zero};
use serde::Serialize;

/// The tridiagonal matrix `U` with ones on the diagonal, `e_i⁻ = e_{i,i-1}`
/// below it and `e_i⁺ = e_{i,i+1}` above it, for layers `1..=ε`.
///
/// Both vectors have length `ε` and are indexed by layer minus one; the
/// conventions `e_1⁻ = 0` and `e_ε⁺ = 0` are stored explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterMatrix {
    pub epsilon: usize,
    #[serde(with = "serde_fraction_vec")]
    pub e_minus: Vec<Q>,
    #[serde(with = "serde_fraction_vec")]
    pub e_plus: Vec<Q>,
}

impl ParameterMatrix {
    /// Forces the boundary conventions regardless of the values passed in.
    pub fn new(mut e_minus: Vec<Q>, mut e_plus: Vec<Q>) -> Self {
        assert_eq!(e_minus.len(), e_plus.len(), "e⁻ and e⁺ need one entry per layer");
        let epsilon = e_minus.len();
        if epsilon > 0 {
            e_minus[0] = Q::zero();
            e_plus[epsilon - 1] = Q::zero();
        }
        Self { epsilon, e_minus, e_plus }
    }

    /// The same value in every admissible position.
    pub fn constant(epsilon: usize, e_minus: Q, e_plus: Q) -> Self {
        Self::new(vec![e_minus; epsilon], vec![e_plus; epsilon])
    }

    /// `e_i⁻` for `1 <= i <= ε`.
    pub fn e_minus(&self, i: usize) -> &Q {
        &self.e_minus[i - 1]
    }

    /// `e_i⁺` for `1 <= i <= ε`.
    pub fn e_plus(&self, i: usize) -> &Q {
        &self.e_plus[i - 1]
    }

    /// Dense `ε × ε` matrix, for cross-checks.
    pub fn dense(&self) -> crate::linalg::Matrix {
        let e = self.epsilon;
        let mut m = crate::linalg::identity(e);
        for i in 1..=e {
            if i > 1 {
                m[i - 1][i - 2] = self.e_minus(i).clone();
            }
            if i < e {
                m[i - 1][i] = self.e_plus(i).clone();
            }
        }
        m
    }

    /// All off-diagonal entries nonzero.
    pub fn is_strong(&self) -> bool {
        (2..=self.epsilon).all(|i| !self.e_minus(i).is_zero()) && (1..self.epsilon).all(|i| !self.e_plus(i).is_zero())
    }
}

/// A parameter matrix together with `f_1..f_ε`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniformStructure {
    pub u: ParameterMatrix,
    #[serde(with = "serde_fraction_vec")]
    pub f: Vec<Q>,
}

impl UniformStructure {
    pub fn epsilon(&self) -> usize {
        self.u.epsilon
    }
}

/// `det(U_{s,t})` for `1 <= s <= t <= ε`, from
/// `det(U_{s,t}) = det(U_{s+1,t}) - e_s⁺ e_{s+1}⁻ det(U_{s+2,t})`.
pub fn principal_determinant(u: &ParameterMatrix, s: usize, t: usize) -> Q {
    assert!(1 <= s && s <= t && t <= u.epsilon, "need 1 <= s <= t <= ε");
    // next = det(U_{j+1,t}), after = det(U_{j+2,t}); empty determinants are 1.
    let mut next = Q::one();
    let mut after = Q::one();
    for j in (s..=t).rev() {
        let cur = if j == t { Q::one() } else { &next - u.e_plus(j) * u.e_minus(j + 1) * &after };
        after = std::mem::replace(&mut next, cur);
    }
    next
}

/// Why a parameter matrix fails the admissibility conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum ConditionViolation {
    /// Neither `e_i⁻` (`2 <= i <= ε`) nor `e_{i-1}⁺` (`2 <= i <= ε`) is nowhere zero.
    OffDiagonal { zero_minus: usize, zero_plus: usize },
    /// `det(U_{s,t}) = 0`.
    Singular { s: usize, t: usize },
}

/// Admissibility: one whole off-diagonal is nowhere zero, and every
/// principal submatrix is nonsingular.
pub fn check_parameter_conditions(u: &ParameterMatrix) -> Result<(), ConditionViolation> {
    if !off_diagonal_condition(u) {
        let zero_minus = (2..=u.epsilon).find(|&i| u.e_minus(i).is_zero()).unwrap_or(0);
        let zero_plus = (1..u.epsilon).find(|&i| u.e_plus(i).is_zero()).unwrap_or(0);
        return Err(ConditionViolation::OffDiagonal { zero_minus, zero_plus });
    }
    match first_singular(u) {
        Some((s, t)) => Err(ConditionViolation::Singular { s, t }),
        None => Ok(()),
    }
}

pub fn off_diagonal_condition(u: &ParameterMatrix) -> bool {
    (2..=u.epsilon).all(|i| !u.e_minus(i).is_zero()) || (1..u.epsilon).all(|i| !u.e_plus(i).is_zero())
}

pub fn first_singular(u: &ParameterMatrix) -> Option<(usize, usize)> {
    (1..=u.epsilon).flat_map(|s| (s..=u.epsilon).map(move |t| (s, t))).find(|&(s, t)| principal_determinant(u, s, t).is_zero())
}
