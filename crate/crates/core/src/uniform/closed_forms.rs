//! Closed-form uniform structures and determinant formulas for the families
//! that support one.

use super::params::{ParameterMatrix, UniformStructure};
use crate::rational::{frac, pow, q, Q};

/// `e_i⁻ = -q⁴/(q²+1)`, `e_i⁺ = -q⁻²/(q²+1)`; at `q = 1` both are `-1/2`.
pub fn constant_parameter_matrix(epsilon: usize, classical_q: i64) -> ParameterMatrix {
    let qq = q(classical_q);
    let q2 = pow(&qq, 2);
    let denom = &q2 + q(1);
    ParameterMatrix::constant(epsilon, -pow(&qq, 4) / &denom, -pow(&qq, -2) / &denom)
}

/// `H(D, n)` and Doob graphs (`n = 4`): `e = -1/2`, `f_i = n - 1`.
pub fn hamming_structure(d: usize, n: i64) -> UniformStructure {
    UniformStructure { u: constant_parameter_matrix(d, 1), f: vec![q(n - 1); d] }
}

/// `²A_{2D-1}(-q)` with classical parameter `q` (negative): `f_i = (-q)^{2D-1}`.
pub fn dual_polar_structure(d: usize, classical_q: i64) -> UniformStructure {
    let f = pow(&q(-classical_q), 2 * d as i32 - 1);
    UniformStructure { u: constant_parameter_matrix(d, classical_q), f: vec![f; d] }
}

/// `½H(n, 2)` with `n = 2D + 1`:
/// `e_i⁻ = (4i-1-2D)/(6-8i+4D)`, `e_i⁺ = (4i-5-2D)/(6-8i+4D)`,
/// `f_i = -(4i-5)(4i-1) + (16i-12)D - 4D²`.
pub fn halved_cube_parameter_matrix(d: usize) -> ParameterMatrix {
    let dd = d as i64;
    let e_minus = (1..=dd).map(|i| frac(4 * i - 1 - 2 * dd, 6 - 8 * i + 4 * dd)).collect();
    let e_plus = (1..=dd).map(|i| frac(4 * i - 5 - 2 * dd, 6 - 8 * i + 4 * dd)).collect();
    ParameterMatrix::new(e_minus, e_plus)
}

pub fn halved_cube_structure(d: usize) -> UniformStructure {
    let dd = d as i64;
    let f = (1..=dd).map(|i| q(-(4 * i - 5) * (4 * i - 1) + (16 * i - 12) * dd - 4 * dd * dd)).collect();
    UniformStructure { u: halved_cube_parameter_matrix(d), f }
}

/// `det(U_{s,t}) = (t-s+2) / 2^{t-s+1}` for the constant `-1/2` matrix.
pub fn hamming_determinant(s: usize, t: usize) -> Q {
    let len = (t - s) as i64;
    Q::new((len + 2).into(), num_bigint::BigInt::from(2).pow((len + 1) as u32))
}

/// `det(U_{s,t}) = (q^{2(t-s+2)} - 1) / ((q² - 1)(q² + 1)^{t-s+1})`.
pub fn dual_polar_determinant(classical_q: i64, s: usize, t: usize) -> Q {
    let qq = q(classical_q);
    let len = (t - s) as i32;
    let q2 = pow(&qq, 2);
    (pow(&qq, 2 * (len + 2)) - q(1)) / ((&q2 - q(1)) * pow(&(&q2 + q(1)), len + 1))
}

/// `det(U_{s,t}) = (t-s+2)(2D-2t-2s+3) Π_{i<t-s}(2D-4t+5+4i)
///               / (2^{t-s+1} Π_{i<=t-s}(2D-4t+3+4i))`.
pub fn halved_cube_determinant(d: usize, s: usize, t: usize) -> Q {
    let (dd, s, t) = (d as i64, s as i64, t as i64);
    let num_prod: i64 = (0..t - s).map(|i| 2 * dd - 4 * t + 5 + 4 * i).product();
    let den_prod: i64 = (0..=t - s).map(|i| 2 * dd - 4 * t + 3 + 4 * i).product();
    frac((t - s + 2) * (2 * dd - 2 * t - 2 * s + 3) * num_prod, (1i64 << (t - s + 1)) * den_prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uniform::principal_determinant;

    #[test]
    fn dual_polar_values_at_minus_two() {
        let s = dual_polar_structure(3, -2);
        assert_eq!(s.u.e_minus(2), &frac(-16, 5));
        assert_eq!(s.u.e_plus(1), &frac(-1, 20));
        assert_eq!(s.f, vec![q(32); 3]);
        for a in 1..=3 {
            for b in a..=3 {
                assert_eq!(principal_determinant(&s.u, a, b), dual_polar_determinant(-2, a, b));
            }
        }
    }

    #[test]
    fn halved_cube_values() {
        let s = halved_cube_structure(3);
        assert_eq!(s.u.e_plus(1), &frac(-7, 10));
        assert_eq!(s.f[0], q(-21));
        for a in 1..=3 {
            for b in a..=3 {
                assert_eq!(principal_determinant(&s.u, a, b), halved_cube_determinant(3, a, b));
            }
        }
    }

    #[test]
    fn hamming_values() {
        let s = hamming_structure(4, 3);
        assert_eq!(s.u.e_minus(3), &frac(-1, 2));
        assert_eq!(principal_determinant(&s.u, 2, 4), hamming_determinant(2, 4));
    }
}
