//! Arithmetic in `F_{p^k}` for odd `p` and `k <= 4`.
//!
//! Elements are stored as the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! of their coefficient vector in the polynomial basis `1, x, ..., x^{k-1}`.
//! Multiplication goes through discrete log/exp tables built from the
//! primitive element, so a field is only as large as its tables allow
//! (`p^k <= 2^20`).

use std::fmt;

use crate::arith::{factor_u64, is_prime};
use crate::error::{Error, Result};

pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// An element of a [`FiniteField`], encoded by its base-`p` coefficient index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FfElem(u32);

impl FfElem {
    pub const ZERO: FfElem = FfElem(0);
    pub const ONE: FfElem = FfElem(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    size: u32,
    /// Low coefficients `c_0..c_{k-1}` of the monic modulus.
    modulus: Vec<u32>,
    primitive: FfElem,
    exp: Vec<u32>,
    log: Vec<u32>,
    pow_p: [u32; 4],
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .field("primitive", &self.primitive)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

// Polynomial helpers over F_p, coefficients low-to-high.

fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = inv_mod_p(den[dd], p);
    while r.len() > dd {
        let top = *r.last().unwrap();
        if top != 0 {
            let coef = (top as u64 * lead_inv as u64 % p as u64) as u32;
            let shift = r.len() - 1 - dd;
            for (i, &d) in den.iter().enumerate() {
                let sub = (coef as u64 * d as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    crate::arith::pow_mod(a as u64, p as u64 - 2, p as u64) as u32
}

fn is_irreducible(tail: &[u32], p: u32) -> bool {
    let k = tail.len();
    if k == 1 {
        return true;
    }
    let mut full = tail.to_vec();
    full.push(1);
    let has_root = (0..p).any(|x| {
        let mut acc = 0u64;
        for &c in full.iter().rev() {
            acc = (acc * x as u64 + c as u64) % p as u64;
        }
        acc == 0
    });
    if has_root {
        return false;
    }
    if k < 4 {
        return true;
    }
    // Degree 4 without roots: rule out a product of two monic quadratics.
    for c0 in 0..p {
        for c1 in 0..p {
            if poly_rem(&full, &[c0, c1, 1], p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Builds `F_{p^k}` with the least monic irreducible modulus, ordering
    /// candidates `x^k + c_{k-1} x^{k-1} + ... + c_0` by the integer
    /// `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(if is_prime(p) {
                Error::FieldOutOfRange { p, k }
            } else {
                Error::NotPrime(p)
            });
        }
        if !(1..=4).contains(&k) || p.checked_pow(k).is_none_or(|s| s > MAX_FIELD_SIZE) {
            return Err(Error::FieldOutOfRange { p, k });
        }
        let p = p as u32;
        let size = p.pow(k);
        let mut pow_p = [0u32; 4];
        for (i, slot) in pow_p.iter_mut().enumerate().take(k as usize) {
            *slot = p.pow(i as u32);
        }
        let modulus = (0..size)
            .map(|idx| digits(idx, p, k))
            .find(|tail| is_irreducible(tail, p))
            .expect("an irreducible polynomial of every degree exists");

        let mut field = FiniteField {
            p,
            k,
            size,
            modulus,
            primitive: FfElem::ONE,
            exp: Vec::new(),
            log: Vec::new(),
            pow_p,
        };
        let order = (size - 1) as u64;
        let primitive = (1..size)
            .map(FfElem)
            .find(|&x| field.order_slow(x) == order)
            .expect("the multiplicative group is cyclic");
        field.primitive = primitive;
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let n = (self.size - 1) as usize;
        let mut exp = vec![0u32; n];
        let mut log = vec![u32::MAX; self.size as usize];
        let mut x = FfElem::ONE;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = x.0;
            log[x.0 as usize] = i as u32;
            x = self.mul_slow(x, self.primitive);
        }
        self.exp = exp;
        self.log = log;
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.size as u64
    }

    /// Full modulus coefficients, low to high, including the leading 1.
    pub fn modulus(&self) -> Vec<u32> {
        let mut m = self.modulus.clone();
        m.push(1);
        m
    }

    /// The least element (in index order) of multiplicative order `p^k - 1`.
    pub fn primitive_element(&self) -> FfElem {
        self.primitive
    }

    pub fn zero(&self) -> FfElem {
        FfElem::ZERO
    }

    pub fn one(&self) -> FfElem {
        FfElem::ONE
    }

    pub fn from_int(&self, n: i64) -> FfElem {
        FfElem(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> FfElem {
        assert!(coeffs.len() <= self.k as usize, "too many coefficients");
        FfElem(
            coeffs
                .iter()
                .zip(self.pow_p)
                .map(|(&c, pw)| (c % self.p) * pw)
                .sum(),
        )
    }

    /// The element with the given coefficient index, if in range.
    pub fn element(&self, index: u32) -> Option<FfElem> {
        (index < self.size).then_some(FfElem(index))
    }

    pub fn coeffs(&self, x: FfElem) -> Vec<u32> {
        digits(x.0, self.p, self.k)
    }

    pub fn elements(&self) -> impl Iterator<Item = FfElem> {
        (0..self.size).map(FfElem)
    }

    pub fn add(&self, x: FfElem, y: FfElem) -> FfElem {
        let (mut a, mut b, mut out) = (x.0, y.0, 0);
        for &pw in &self.pow_p[..self.k as usize] {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * pw;
            a /= self.p;
            b /= self.p;
        }
        FfElem(out)
    }

    pub fn neg(&self, x: FfElem) -> FfElem {
        let mut a = x.0;
        let mut out = 0;
        for &pw in &self.pow_p[..self.k as usize] {
            out += ((self.p - a % self.p) % self.p) * pw;
            a /= self.p;
        }
        FfElem(out)
    }

    pub fn sub(&self, x: FfElem, y: FfElem) -> FfElem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FfElem, y: FfElem) -> FfElem {
        if x.is_zero() || y.is_zero() {
            return FfElem::ZERO;
        }
        let n = self.size - 1;
        let e = (self.log[x.0 as usize] + self.log[y.0 as usize]) % n;
        FfElem(self.exp[e as usize])
    }

    pub fn inv(&self, x: FfElem) -> Option<FfElem> {
        if x.is_zero() {
            return None;
        }
        let n = self.size - 1;
        Some(FfElem(
            self.exp[((n - self.log[x.0 as usize]) % n) as usize],
        ))
    }

    /// `x^e` for a possibly negative exponent; `0^e` with `e < 0` panics.
    pub fn pow(&self, x: FfElem, e: i64) -> FfElem {
        if x.is_zero() {
            assert!(e >= 0, "zero has no inverse");
            return if e == 0 { FfElem::ONE } else { FfElem::ZERO };
        }
        let n = (self.size - 1) as i64;
        let l = self.log[x.0 as usize] as i64;
        FfElem(self.exp[((l as i128 * e as i128).rem_euclid(n as i128)) as usize])
    }

    /// `primitive^e`.
    pub fn primitive_pow(&self, e: i64) -> FfElem {
        self.pow(self.primitive, e)
    }

    /// Discrete logarithm to base the primitive element.
    pub fn log(&self, x: FfElem) -> Option<u32> {
        (!x.is_zero()).then(|| self.log[x.0 as usize])
    }

    pub fn is_square(&self, x: FfElem) -> bool {
        x.is_zero() || self.log[x.0 as usize] % 2 == 0
    }

    /// A square root, choosing the one with the smaller index.
    pub fn sqrt(&self, x: FfElem) -> Option<FfElem> {
        if x.is_zero() {
            return Some(x);
        }
        let l = self.log[x.0 as usize];
        if l % 2 == 1 {
            return None;
        }
        let r = FfElem(self.exp[(l / 2) as usize]);
        let s = self.neg(r);
        Some(r.min(s))
    }

    pub fn multiplicative_order(&self, x: FfElem) -> Option<u64> {
        (!x.is_zero()).then(|| self.order_slow(x))
    }

    /// `x^q` for `q = p^m` with `q^2` the field size.
    pub fn frobenius(&self, x: FfElem, q: u64) -> Result<FfElem> {
        if self.k % 2 != 0 || (self.p as u64).pow(self.k / 2) != q {
            return Err(Error::FrobeniusMismatch {
                q,
                size: self.size(),
            });
        }
        Ok(self.pow(x, q as i64))
    }

    /// Polynomial multiplication modulo the modulus; independent of the tables.
    pub fn mul_slow(&self, x: FfElem, y: FfElem) -> FfElem {
        let a = self.coeffs(x);
        let b = self.coeffs(y);
        let p = self.p as u64;
        let mut prod = vec![0u32; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + ai as u64 * bj as u64) % p) as u32;
            }
        }
        let r = poly_rem(&prod, &self.modulus(), self.p);
        self.from_coeffs(&r)
    }

    fn pow_slow(&self, x: FfElem, mut e: u64) -> FfElem {
        let (mut base, mut acc) = (x, FfElem::ONE);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn order_slow(&self, x: FfElem) -> u64 {
        let mut order = (self.size - 1) as u64;
        for (l, _) in factor_u64(order) {
            while order % l == 0 && self.pow_slow(x, order / l) == FfElem::ONE {
                order /= l;
            }
        }
        order
    }
}

fn digits(mut idx: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = idx % p;
            idx /= p;
            d
        })
        .collect()
}
