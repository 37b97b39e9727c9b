//! Small finite fields `GF(r)` and `GF(r^2)` as lookup tables.

use crate::error::{Error, Result};

/// Element index into a [`Field`]'s tables.
pub type Elem = u8;

/// `GF(p^k)` for `k ∈ {1, 2}` and a small prime `p`.
///
/// An element `a_0 + a_1 x` is stored as the index `a_0 + p a_1`, so the
/// prime subfield occupies indices `0..p`. The quadratic extensions use the
/// fixed moduli `x^2 + x + 1` over `GF(2)` and `x^2 + 1` over `GF(3)`.
#[derive(Clone, Debug)]
pub struct Field {
    p: u8,
    order: u8,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    conj: Vec<Elem>,
}

impl Field {
    /// The prime field `GF(p)`, `p ∈ {2, 3}`.
    pub fn prime(p: u32) -> Result<Self> {
        if p != 2 && p != 3 {
            return Err(Error::UnsupportedField(p));
        }
        let p = p as u8;
        Ok(Self::from_ops(p, p, |a, b| (a + b) % p, |a, b| (a * b) % p, |a| a))
    }

    /// `GF(r^2)` with conjugation `x ↦ x^r`, `r ∈ {2, 3}`.
    pub fn quadratic(r: u32) -> Result<Self> {
        // x^2 = -c1 x - c0 for modulus x^2 + c1 x + c0.
        let (c1, c0) = match r {
            2 => (1u8, 1u8),
            3 => (0u8, 1u8),
            _ => return Err(Error::UnsupportedField(r)),
        };
        let p = r as u8;
        let split = move |e: u8| (e % p, e / p);
        let join = move |a0: u8, a1: u8| a0 % p + p * (a1 % p);
        let add = move |x: u8, y: u8| {
            let ((a0, a1), (b0, b1)) = (split(x), split(y));
            join(a0 + b0, a1 + b1)
        };
        let mul = move |x: u8, y: u8| {
            let ((a0, a1), (b0, b1)) = (split(x), split(y));
            let t0 = a0 * b0;
            let t1 = a0 * b1 + a1 * b0;
            let t2 = (a1 * b1) % p;
            // t2 x^2 = t2 (-c1 x - c0)
            let neg = |v: u8| (p - v % p) % p;
            join(t0 + t2 * neg(c0), t1 + t2 * neg(c1))
        };
        let pow_r = move |x: u8| (1..r).fold(x, |acc, _| mul(acc, x));
        Ok(Self::from_ops(p, p * p, add, mul, pow_r))
    }

    fn from_ops(
        p: u8,
        order: u8,
        add: impl Fn(u8, u8) -> u8,
        mul: impl Fn(u8, u8) -> u8,
        conj: impl Fn(u8) -> u8,
    ) -> Self {
        let q = order as usize;
        let mut f = Self {
            p,
            order,
            add: vec![0; q * q],
            mul: vec![0; q * q],
            neg: vec![0; q],
            inv: vec![0; q],
            conj: vec![0; q],
        };
        for a in 0..order {
            for b in 0..order {
                f.add[a as usize * q + b as usize] = add(a, b);
                f.mul[a as usize * q + b as usize] = mul(a, b);
            }
        }
        for a in 0..order {
            f.neg[a as usize] = (0..order).find(|&b| f.add(a, b) == 0).expect("additive inverse");
            f.inv[a as usize] = (0..order).find(|&b| f.mul(a, b) == 1).unwrap_or(0);
            f.conj[a as usize] = conj(a);
        }
        f
    }

    pub fn characteristic(&self) -> u8 {
        self.p
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order as usize + b as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order as usize + b as usize]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    /// Frobenius `x ↦ x^r` on `GF(r^2)`; the identity on a prime field.
    pub fn conj(&self, a: Elem) -> Elem {
        self.conj[a as usize]
    }

    /// Rank of a matrix over this field (rows are consumed).
    pub fn rank(&self, mut rows: Vec<Vec<Elem>>) -> usize {
        let cols = rows.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, p);
            let inv = self.inv(rows[r][c]);
            let pivot: Vec<Elem> = rows[r].iter().map(|&x| self.mul(x, inv)).collect();
            for row in rows.iter_mut().skip(r + 1) {
                let f = row[c];
                if f != 0 {
                    for (x, &y) in row.iter_mut().zip(&pivot) {
                        *x = self.sub(*x, self.mul(f, y));
                    }
                }
            }
            rows[r] = pivot;
            r += 1;
        }
        r
    }
}
