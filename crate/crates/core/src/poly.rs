//! Sparse multivariate polynomials over the rationals, just enough to decide
//! whether a determinant condition vanishes identically.

use crate::rational::Q;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector, trailing zeros trimmed.
type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Q>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        let mut p = Self::zero();
        p.terms.insert(m, Q::one());
        p
    }

    /// `c + Σ coeffs[i] x_{offset + i}`.
    pub fn affine(c: &Q, coeffs: &[Q], offset: usize) -> Self {
        let mut p = Self::constant(c.clone());
        for (i, a) in coeffs.iter().enumerate() {
            if !a.is_zero() {
                p = p + Self::var(offset + i) * Self::constant(a.clone());
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = c.clone();
                for (i, &e) in m.iter().enumerate() {
                    for _ in 0..e {
                        t *= &x[i];
                    }
                }
                t
            })
            .sum()
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        let m = trim(m);
        let entry = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

// Multiplying monomials adds exponents.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let len = ma.len().max(mb.len());
                let m: Monomial =
                    (0..len).map(|i| ma.get(i).copied().unwrap_or(0) + mb.get(i).copied().unwrap_or(0)).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}
