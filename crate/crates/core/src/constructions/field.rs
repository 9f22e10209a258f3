//! Finite fields GF(p^e).
//!
//! Elements are encoded as integers `0..q`: the element
//! `c_0 + c_1 x + … + c_{e-1} x^{e-1}` is `c_0 + c_1 p + … + c_{e-1} p^{e-1}`.
//! The modulus is the monic irreducible polynomial of degree `e` whose
//! lower coefficients, read as such an integer, are smallest.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    /// Coefficients `c_0..=c_e`, with `c_e = 1`.
    modulus: Vec<u32>,
}

/// `(p, e)` with `q = p^e` and `p` prime.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut r = q;
    let mut e = 0;
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

/// Remainder of `a` modulo monic `b`, coefficients low to high.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().expect("non-empty");
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn monic_from_code(code: u32, deg: u32, p: u32) -> Vec<u32> {
    let mut v: Vec<u32> = (0..deg).map(|i| code / p.pow(i) % p).collect();
    v.push(1);
    v
}

/// Irreducibility over GF(p) by trial division by every monic polynomial of
/// degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    if deg == 0 {
        return false;
    }
    (1..=deg / 2).all(|d| {
        (0..p.pow(d)).all(|code| {
            let divisor = monic_from_code(code, d, p);
            poly_rem(poly, &divisor, p).iter().any(|&c| c != 0)
        })
    })
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, e) =
            prime_power(q).ok_or_else(|| Error::param(format!("{q} is not a prime power")))?;
        let modulus = (0..q)
            .map(|code| monic_from_code(code, e, p))
            .find(|m| is_irreducible(m, p))
            .expect("irreducible polynomials exist in every degree");
        Ok(FiniteField { p, e, q, modulus })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    fn decode(&self, x: u32) -> Vec<u32> {
        (0..self.e).map(|i| x / self.p.pow(i) % self.p).collect()
    }

    fn encode(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.encode(&s)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let s: Vec<u32> = self
            .decode(a)
            .iter()
            .map(|u| (self.p - u) % self.p)
            .collect();
        self.encode(&s)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u32; 2 * self.e as usize - 1];
        for (i, &u) in x.iter().enumerate() {
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.e as usize, 0);
        self.encode(&r)
    }

    pub fn pow(&self, a: u32, mut n: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// `a^(q-2)`; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.pow(a, self.q as u64 - 2))
    }
}
