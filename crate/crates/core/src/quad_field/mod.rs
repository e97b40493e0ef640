//! Imaginary quadratic fields `Q(sqrt(m))`: discriminants, class groups,
//! genus theory and the unramified quadratic extensions `K(sqrt(c))`.
//!
//! The unramified quadratic extensions of `K` correspond to nonzero classes
//! of `H^1(Spec O_K, Z/2)`. Each is `K(sqrt(c_S))` where `c_S` is a product of
//! a subset `S` of the prime discriminants of `D`; `S` and its complement
//! give the same extension. A class is stored as the side of `{S, S^c}`
//! that excludes the prime discriminant of the smallest ramified prime.

pub mod forms;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{factor, kronecker};
use crate::error::{Error, Result};

pub use forms::{
    class_group_of_disc, class_group_with, reduced_forms, smith_diagonal, ClassGroup, QuadForm,
    CLASS_GROUP_BOUND,
};

/// Largest `|m|` accepted, so that `4m` and products of generators fit in `i64`.
pub const MAX_FIELD_PARAMETER: u64 = 1 << 60;

/// `D = m` if `m = 1 mod 4`, else `4m`.
pub fn discriminant(m: i64) -> Result<i64> {
    if m >= 0 || m.unsigned_abs() > MAX_FIELD_PARAMETER || !crate::arith::is_squarefree(m) {
        return Err(Error::InvalidFieldParameter(m));
    }
    Ok(if m.rem_euclid(4) == 1 { m } else { 4 * m })
}

/// A fundamental discriminant with a single prime divisor:
/// `-4`, `8`, `-8`, or `p* = (-1)^((p-1)/2) p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeDiscriminant {
    value: i64,
}

impl PrimeDiscriminant {
    pub fn for_odd_prime(p: u64) -> Self {
        debug_assert!(p % 2 == 1);
        let p = p as i64;
        PrimeDiscriminant {
            value: if p % 4 == 1 { p } else { -p },
        }
    }

    /// One of `-4`, `8`, `-8`.
    pub fn even(value: i64) -> Option<Self> {
        matches!(value, -4 | 8 | -8).then_some(PrimeDiscriminant { value })
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn prime(&self) -> u64 {
        if self.value % 2 == 0 {
            2
        } else {
            self.value.unsigned_abs()
        }
    }

    /// Exponent of the ramified prime `P` above `p` in `div(value) / 2`,
    /// i.e. the `p`-adic valuation of `value`.
    pub fn halved_divisor_exponent(&self) -> u32 {
        match self.value {
            -4 => 2,
            8 | -8 => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for PrimeDiscriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ImagQuadField {
    m: i64,
    disc: i64,
    prime_discs: Vec<PrimeDiscriminant>,
}

impl ImagQuadField {
    pub fn new(m: i64) -> Result<Self> {
        let disc = discriminant(m)?;
        let fact = factor(disc)?;
        let mut prime_discs: Vec<PrimeDiscriminant> = fact
            .factors
            .iter()
            .filter(|(p, _)| *p != 2)
            .map(|&(p, _)| PrimeDiscriminant::for_odd_prime(p))
            .collect();
        if disc % 2 == 0 {
            let odd: i64 = prime_discs.iter().map(|d| d.value).product();
            let even =
                PrimeDiscriminant::even(disc / odd).ok_or(Error::InvalidFieldParameter(m))?;
            prime_discs.insert(0, even);
        }
        debug_assert_eq!(prime_discs.iter().map(|d| d.value).product::<i64>(), disc);
        Ok(ImagQuadField {
            m,
            disc,
            prime_discs,
        })
    }

    /// The field whose discriminant is the fundamental discriminant `disc`.
    pub fn from_discriminant(disc: i64) -> Result<Self> {
        let m = if disc.rem_euclid(4) == 0 {
            disc / 4
        } else {
            disc
        };
        let field = Self::new(m)?;
        if field.disc != disc {
            return Err(Error::InvalidFieldParameter(m));
        }
        Ok(field)
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn discriminant(&self) -> i64 {
        self.disc
    }

    /// Prime discriminants of `D`, ordered by their prime (so `2` first).
    pub fn prime_discriminants(&self) -> &[PrimeDiscriminant] {
        &self.prime_discs
    }

    /// Number `t` of prime discriminants.
    pub fn num_prime_discriminants(&self) -> usize {
        self.prime_discs.len()
    }

    /// The genus-theoretic 2-rank `t - 1` of the class group.
    pub fn genus_two_rank(&self) -> u32 {
        self.prime_discs.len() as u32 - 1
    }

    pub fn ramified_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.prime_discs.iter().map(|d| d.prime())
    }

    pub fn class_group(&self) -> Result<ClassGroup> {
        class_group_of_disc(self.disc)
    }

    pub fn splitting(&self, p: u64) -> Result<Splitting> {
        if !crate::arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(match kronecker(self.disc, p as i64)? {
            0 => Splitting::Ramified,
            1 => Splitting::Split,
            _ => Splitting::Inert,
        })
    }

    fn full_mask(&self) -> u64 {
        (1u64 << self.prime_discs.len()) - 1
    }

    /// Index of the prime discriminant above `p`.
    pub fn index_of_prime(&self, p: u64) -> Option<usize> {
        self.prime_discs.iter().position(|d| d.prime() == p)
    }

    /// The class of `K(sqrt(c_S))` for the subset `S` given as a bitmask over
    /// [`prime_discriminants`](Self::prime_discriminants).
    pub fn class_from_mask(&self, mask: u64) -> H1Class {
        let full = self.full_mask();
        let mask = mask & full;
        H1Class {
            disc: self.disc,
            mask: if mask & 1 == 1 { mask ^ full } else { mask },
        }
    }

    pub fn zero_class(&self) -> H1Class {
        H1Class {
            disc: self.disc,
            mask: 0,
        }
    }

    /// All `2^(t-1) - 1` nonzero classes, ordered by canonical bitmask.
    pub fn h1_classes(&self) -> Vec<H1Class> {
        let t = self.prime_discs.len();
        (1u64..1 << (t - 1))
            .map(|m| H1Class {
                disc: self.disc,
                mask: m << 1,
            })
            .collect()
    }

    pub fn h1_dimension(&self) -> usize {
        self.prime_discs.len() - 1
    }

    fn check(&self, x: &H1Class) -> Result<()> {
        if x.disc != self.disc {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Members of the canonical side of the class.
    pub fn support(&self, x: &H1Class) -> Vec<PrimeDiscriminant> {
        self.members(x.mask)
    }

    /// Members of the non-canonical side (`S^c`).
    pub fn complement_support(&self, x: &H1Class) -> Vec<PrimeDiscriminant> {
        self.members(x.mask ^ self.full_mask())
    }

    fn members(&self, mask: u64) -> Vec<PrimeDiscriminant> {
        self.prime_discs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, d)| *d)
            .collect()
    }

    /// `c_S`, the product of the canonical side.
    pub fn generator(&self, x: &H1Class) -> i64 {
        self.support(x).iter().map(|d| d.value).product()
    }

    /// `c_{S^c} = D / c_S`.
    pub fn complement_generator(&self, x: &H1Class) -> i64 {
        self.disc / self.generator(x)
    }

    /// `"0"` for the zero class, else the members of the canonical side
    /// joined by `*` (e.g. `5*17`).
    pub fn label(&self, x: &H1Class) -> String {
        if x.is_zero() {
            return "0".into();
        }
        self.support(x)
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn labels(&self) -> Vec<String> {
        self.h1_classes().iter().map(|x| self.label(x)).collect()
    }

    /// Accepts `0`, a label, or an integer/product equal to either generator
    /// of a class (so `-3` and `85` both name the same class of `Q(sqrt(-255))`).
    pub fn parse_class(&self, s: &str) -> Result<H1Class> {
        let unknown = || Error::UnknownLabel(s.to_string());
        let s = s.trim();
        if s == "0" {
            return Ok(self.zero_class());
        }
        let mut value: i64 = 1;
        for part in s.split('*') {
            let v: i64 = part.trim().parse().map_err(|_| unknown())?;
            value = value.checked_mul(v).ok_or_else(unknown)?;
        }
        if value == 1 || value == self.disc {
            return Ok(self.zero_class());
        }
        self.h1_classes()
            .into_iter()
            .find(|x| self.generator(x) == value || self.complement_generator(x) == value)
            .ok_or_else(unknown)
    }

    pub fn add(&self, x: &H1Class, y: &H1Class) -> Result<H1Class> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.class_from_mask(x.mask ^ y.mask))
    }

    /// The generator of `x` whose prime-discriminant support avoids `p`.
    pub fn generator_avoiding(&self, x: &H1Class, p: u64) -> Result<i64> {
        self.check(x)?;
        let i = self
            .index_of_prime(p)
            .ok_or(Error::NotRamified { p, disc: self.disc })?;
        let mask = if x.mask >> i & 1 == 1 {
            x.mask ^ self.full_mask()
        } else {
            x.mask
        };
        Ok(self.members(mask).iter().map(|d| d.value).product())
    }

    /// Whether the ramified prime of `K` above `p` is inert in `K(sqrt(c_x))`.
    pub fn inert_in_extension(&self, x: &H1Class, p: u64) -> Result<bool> {
        let c = self.generator_avoiding(x, p)?;
        Ok(kronecker(c, p as i64)? == -1)
    }
}

/// A class in `H^1(Spec O_K, Z/2)`; see [`ImagQuadField::class_from_mask`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct H1Class {
    disc: i64,
    mask: u64,
}

impl H1Class {
    pub fn is_zero(&self) -> bool {
        self.mask == 0
    }

    /// Canonical subset as a bitmask over the field's prime discriminants.
    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn field_discriminant(&self) -> i64 {
        self.disc
    }
}

/// Negative fundamental discriminants with `|D| <= bound`, by increasing `|D|`.
pub fn fundamental_discriminants(bound: u64) -> Vec<i64> {
    (3..=bound as i64)
        .map(|n| -n)
        .filter(|&d| match d.rem_euclid(4) {
            1 => crate::arith::is_squarefree(d),
            0 => {
                let m = d / 4;
                m.rem_euclid(4) != 1 && crate::arith::is_squarefree(m)
            }
            _ => false,
        })
        .collect()
}
