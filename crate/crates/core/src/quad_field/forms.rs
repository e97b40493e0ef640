//! Positive definite binary quadratic forms and the class group they model.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arith::{ext_gcd, isqrt};
use crate::error::{Error, Result};

/// Largest `|D|` accepted by reduced-form enumeration.
pub const CLASS_GROUP_BOUND: u64 = 100_000_000;

/// The form `a x^2 + b xy + c y^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        QuadForm { a, b, c }
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// The principal form of discriminant `disc`.
    pub fn identity(disc: i64) -> Self {
        let b = disc.rem_euclid(2);
        QuadForm::new(1, b, (b * b - disc) / 4)
    }

    pub fn inverse(&self) -> Self {
        QuadForm::new(self.a, -self.b, self.c).reduce()
    }

    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        b.abs() <= a && a <= c && !((b.abs() == a || a == c) && b < 0)
    }

    pub fn reduce(&self) -> Self {
        let disc = self.discriminant() as i128;
        let (mut a, mut b, mut c) = (self.a as i128, self.b as i128, self.c as i128);
        loop {
            if b > a || b <= -a {
                // b -> b - 2ka with the result in (-a, a]
                let two_a = 2 * a;
                let k = (b + a - 1).div_euclid(two_a);
                b -= k * two_a;
                c = (b * b - disc) / (4 * a);
            }
            if a > c {
                std::mem::swap(&mut a, &mut c);
                b = -b;
                continue;
            }
            if a == c && b < 0 {
                b = -b;
            }
            break;
        }
        QuadForm::new(a as i64, b as i64, c as i64)
    }

    /// Gauss composition (Dirichlet's algorithm as in Cohen, Alg. 5.4.7),
    /// followed by reduction.
    pub fn compose(&self, other: &QuadForm) -> QuadForm {
        let disc = self.discriminant() as i128;
        debug_assert_eq!(disc, other.discriminant() as i128);
        let (mut f1, mut f2) = (*self, *other);
        if f1.a > f2.a {
            std::mem::swap(&mut f1, &mut f2);
        }
        let (a1, b1) = (f1.a as i128, f1.b as i128);
        let (a2, b2, c2) = (f2.a as i128, f2.b as i128, f2.c as i128);
        let s = (b1 + b2) / 2;
        let n = b2 - s;
        let (y1, d) = if a2 % a1 == 0 {
            (0, a1)
        } else {
            let (d, u, _) = ext_gcd(a2, a1);
            (u, d)
        };
        let (x2, y2, d1) = if s % d == 0 {
            (0, -1, d)
        } else {
            let (d1, u, v) = ext_gcd(s, d);
            (u, -v, d1)
        };
        let v1 = a1 / d1;
        let v2 = a2 / d1;
        let r = (y1 * y2 * n - x2 * c2).rem_euclid(v1);
        let b3 = b2 + 2 * v2 * r;
        let a3 = v1 * v2;
        let num = b3 * b3 - disc;
        debug_assert_eq!(num % (4 * a3), 0);
        let c3 = num / (4 * a3);
        QuadForm::new(a3 as i64, b3 as i64, c3 as i64).reduce()
    }

    pub fn pow(&self, mut e: u64) -> QuadForm {
        let mut base = *self;
        let mut acc = QuadForm::identity(self.discriminant());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }
}

fn check_bound(disc: i64) -> Result<()> {
    let found = disc.unsigned_abs();
    if found > CLASS_GROUP_BOUND {
        return Err(Error::DiscriminantTooLarge {
            found,
            bound: CLASS_GROUP_BOUND,
        });
    }
    Ok(())
}

/// All reduced primitive forms of a negative discriminant, ordered by `(a, b)`.
pub fn reduced_forms(disc: i64) -> Result<Vec<QuadForm>> {
    assert!(
        disc < 0 && disc.rem_euclid(4) <= 1,
        "not a negative discriminant"
    );
    check_bound(disc)?;
    let abs_d = disc.unsigned_abs();
    let a_max = isqrt(abs_d / 3) as i64;
    let mut forms = Vec::new();
    for a in 1..=a_max {
        let mut b = -a + 1;
        if (b - disc).rem_euclid(2) != 0 {
            b += 1;
        }
        while b <= a {
            let num = b * b - disc;
            if num % (4 * a) == 0 {
                let c = num / (4 * a);
                let f = QuadForm::new(a, b, c);
                if f.is_reduced()
                    && crate::arith::gcd(crate::arith::gcd(a as u64, b.unsigned_abs()), c as u64)
                        == 1
                {
                    forms.push(f);
                }
            }
            b += 2;
        }
    }
    Ok(forms)
}

/// Order and elementary divisors `d_1 | d_2 | ...` (all `> 1`) of a class group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroup {
    pub order: u64,
    pub invariants: Vec<u64>,
}

impl ClassGroup {
    pub fn two_rank(&self) -> u32 {
        self.invariants.iter().filter(|&&d| d % 2 == 0).count() as u32
    }
}

/// Class group structure from an explicit composition law on the reduced forms.
///
/// Generators are added greedily; each new generator `g` gets the relation
/// `g^n = (word in earlier generators)` for the least such `n`, so the
/// relation matrix is triangular and its Smith form gives the invariants.
pub fn class_group_with(
    forms: &[QuadForm],
    identity: QuadForm,
    compose: impl Fn(&QuadForm, &QuadForm) -> QuadForm,
) -> Result<ClassGroup> {
    let mut words: HashMap<QuadForm, Vec<i64>> = HashMap::from([(identity, Vec::new())]);
    let mut relations: Vec<Vec<i64>> = Vec::new();
    let mut members: Vec<QuadForm> = vec![identity];
    for f in forms {
        if words.contains_key(f) {
            continue;
        }
        let k = relations.len();
        let mut power = *f;
        let mut n = 1i64;
        while !words.contains_key(&power) {
            power = compose(&power, f);
            n += 1;
            if n as usize > forms.len() + 1 {
                return Err(Error::Inconsistent(
                    "composition does not close on the reduced forms".into(),
                ));
            }
        }
        let mut rel: Vec<i64> = words[&power].iter().map(|&x| -x).collect();
        rel.resize(k, 0);
        rel.push(n);
        relations.push(rel);

        let mut new_members = Vec::with_capacity(members.len() * n as usize);
        for base in &members {
            let mut word = words[base].clone();
            word.resize(k + 1, 0);
            let mut x = *base;
            for j in 1..n {
                x = compose(&x, f);
                let mut w = word.clone();
                w[k] = j;
                if words.insert(x, w).is_some() {
                    return Err(Error::Inconsistent(
                        "coset enumeration revisited an element".into(),
                    ));
                }
                new_members.push(x);
            }
        }
        members.extend(new_members);
    }
    if members.len() != forms.len() {
        return Err(Error::Inconsistent(format!(
            "generated {} classes but enumerated {} reduced forms",
            members.len(),
            forms.len()
        )));
    }
    let size = relations.len();
    for r in &mut relations {
        r.resize(size, 0);
    }
    let mut invariants = smith_diagonal(relations);
    invariants.retain(|&d| d != 1);
    let order = invariants.iter().product::<u64>();
    Ok(ClassGroup { order, invariants })
}

pub fn class_group_of_disc(disc: i64) -> Result<ClassGroup> {
    let forms = reduced_forms(disc)?;
    class_group_with(&forms, QuadForm::identity(disc), |x, y| x.compose(y))
}

/// Invariant factors (ascending, divisibility chain) of a square nonsingular
/// integer matrix.
pub fn smith_diagonal(mut m: Vec<Vec<i64>>) -> Vec<u64> {
    let n = m.len();
    for t in 0..n {
        loop {
            // pivot: smallest nonzero entry in the remaining block
            let Some((pi, pj)) = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs())
            else {
                break;
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..n {
                let q = m[i][t].div_euclid(p);
                if q != 0 {
                    for j in t..n {
                        m[i][j] -= q * m[t][j];
                    }
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..n {
                let q = m[t][j].div_euclid(p);
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= m[t][j] == 0;
            }
            if clean {
                break;
            }
        }
    }
    let mut diag: Vec<u64> = (0..n).map(|i| m[i][i].unsigned_abs()).collect();
    // enforce d_i | d_{i+1} via (a, b) -> (gcd, lcm)
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (diag[i], diag[j]);
            let g = crate::arith::gcd(a, b);
            if g != 0 {
                diag[i] = g;
                diag[j] = a / g * b;
            }
        }
    }
    diag
}
