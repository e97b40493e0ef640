//! Triple cup products on `H^*(Spec O_K, Z/2)` for imaginary quadratic `K`,
//! the field conditions built from them, and realizability verdicts for the
//! groups `M(q^2)` and `Aut(PSL(2,q^2))`.
//!
//! For `x, y` in `H^1`, write `y = [K(sqrt(c))]` with `div(c) = 2 A`. Then
//! `x ∪ x ∪ y` is nonzero exactly when the primes of `A` that are inert in
//! `L = K(sqrt(c_x))`, counted with their multiplicity in `A`, have odd total.
//! All primes of `A` are ramified in `K/Q`, so each test reduces to a
//! Kronecker symbol (see [`ImagQuadField::inert_in_extension`]).

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{kronecker, odd_prime_power, primes_up_to};
use crate::cohomology::{H3Class, QuotientGroup};
use crate::error::{Error, Result};
use crate::matrix_groups::{aut_group_cocycle, m_group_cocycle, psl_order, DEFAULT_GROUP_CAP};
use crate::quad_field::{H1Class, ImagQuadField, PrimeDiscriminant};

/// Attached to every report.
pub const INERT_NOTE: &str = "the triple-cup test counts primes of K that are inert in \
L = K(sqrt(c_x)); wordings of the criterion that say 'unramified in L' are read as 'inert in L'";

pub const H2_NOTE: &str = "dim H^2 = t is derived from the exact sequence \
O_K^*/2 -> Z_1/B_1 -> Cl(K)[2], not read off a stated formula";

pub const CUP_SQUARE_NOTE: &str =
    "parity 1 certifies x ∪ x != 0 in H^2; parity 0 certifies nothing about x ∪ x";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologySummary {
    /// `dim_F2 H^i` for `i = 0..=3`.
    pub dims: [usize; 4],
    pub h1_labels: Vec<String>,
}

pub fn cohomology_summary(k: &ImagQuadField) -> CohomologySummary {
    let t = k.num_prime_discriminants();
    CohomologySummary {
        dims: [1, t - 1, t, 1],
        h1_labels: k.labels(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeEvidence {
    pub p: u64,
    pub prime_discriminant: i64,
    /// Multiplicity of the prime above `p` in `div(c_y) / 2`.
    pub exponent: u32,
    pub inert: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupEvidence {
    pub x: H1Class,
    pub y: H1Class,
    pub y_generator: i64,
    pub per_prime: Vec<PrimeEvidence>,
    pub parity: u8,
}

impl CupEvidence {
    /// A nonzero triple product forces `x ∪ x != 0`; the converse is not claimed.
    pub fn certifies_x_squared_nonzero(&self) -> bool {
        self.parity == 1
    }
}

/// Parity of `x ∪ x ∪ y`, using the canonical generator of `y`.
pub fn triple_cup(k: &ImagQuadField, x: &H1Class, y: &H1Class) -> Result<CupEvidence> {
    check_field(k, x)?;
    check_field(k, y)?;
    triple_cup_over(k, x, y, &k.support(y))
}

/// As [`triple_cup`], with `y` represented by the complementary generator `c_{S^c}`.
pub fn triple_cup_complement(k: &ImagQuadField, x: &H1Class, y: &H1Class) -> Result<CupEvidence> {
    check_field(k, x)?;
    check_field(k, y)?;
    let support = if y.is_zero() {
        Vec::new()
    } else {
        k.complement_support(y)
    };
    triple_cup_over(k, x, y, &support)
}

fn triple_cup_over(
    k: &ImagQuadField,
    x: &H1Class,
    y: &H1Class,
    support: &[PrimeDiscriminant],
) -> Result<CupEvidence> {
    let mut per_prime = Vec::with_capacity(support.len());
    let mut parity = 0u8;
    for d in support {
        let inert = k.inert_in_extension(x, d.prime())?;
        let exponent = d.halved_divisor_exponent();
        if inert && exponent % 2 == 1 {
            parity ^= 1;
        }
        per_prime.push(PrimeEvidence {
            p: d.prime(),
            prime_discriminant: d.value(),
            exponent,
            inert,
        });
    }
    Ok(CupEvidence {
        x: *x,
        y: *y,
        y_generator: support.iter().map(|d| d.value()).product(),
        per_prime,
        parity,
    })
}

fn check_field(k: &ImagQuadField, x: &H1Class) -> Result<()> {
    if x.field_discriminant() != k.discriminant() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldCondition {
    Holds,
    /// A pair `(a, b)` with `a ∪ a ∪ b = 0` (`a = b` for the single-class condition).
    FailsWithWitness {
        a: H1Class,
        b: H1Class,
    },
    VacuousNoSurjection,
}

impl FieldCondition {
    pub fn name(&self) -> &'static str {
        match self {
            FieldCondition::Holds => "Holds",
            FieldCondition::FailsWithWitness { .. } => "FailsWithWitness",
            FieldCondition::VacuousNoSurjection => "VacuousNoSurjection",
        }
    }
}

/// `x ∪ x ∪ x != 0` for every nonzero `x`.
pub fn property_ssa(k: &ImagQuadField) -> FieldCondition {
    let classes = k.h1_classes();
    if classes.is_empty() {
        return FieldCondition::VacuousNoSurjection;
    }
    for x in classes {
        if triple_cup(k, &x, &x).expect("same field").parity == 0 {
            return FieldCondition::FailsWithWitness { a: x, b: x };
        }
    }
    FieldCondition::Holds
}

/// `a ∪ a ∪ b != 0` for every ordered pair of distinct nonzero classes.
pub fn property_ssb(k: &ImagQuadField) -> FieldCondition {
    if k.h1_dimension() < 2 {
        return FieldCondition::VacuousNoSurjection;
    }
    let classes = k.h1_classes();
    for a in &classes {
        for b in &classes {
            if a != b && triple_cup(k, a, b).expect("same field").parity == 0 {
                return FieldCondition::FailsWithWitness { a: *a, b: *b };
            }
        }
    }
    FieldCondition::Holds
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupFamily {
    /// `M(q^2)`, with `Out`-quotient `Z/2`.
    M,
    /// `Aut(PSL(2,q^2))`, with quotient `Z/2 x Z/2`.
    AutPSL,
}

impl GroupFamily {
    pub fn quotient(self) -> QuotientGroup {
        match self {
            GroupFamily::M => QuotientGroup::Z2,
            GroupFamily::AutPSL => QuotientGroup::KleinFour,
        }
    }

    /// 2-rank of the class group needed for the solvable quotient to occur.
    pub fn required_two_rank(self) -> usize {
        match self {
            GroupFamily::M => 1,
            GroupFamily::AutPSL => 2,
        }
    }

    pub fn field_condition(self, k: &ImagQuadField) -> FieldCondition {
        match self {
            GroupFamily::M => property_ssa(k),
            GroupFamily::AutPSL => property_ssb(k),
        }
    }

    /// The class shape the group's cocycle must have for the obstruction.
    pub fn shape_ok(self, class: &H3Class) -> bool {
        match self {
            GroupFamily::M => *class == H3Class::a_cubed(QuotientGroup::Z2),
            GroupFamily::AutPSL => class.is_a_squared_b_shape(),
        }
    }

    pub fn required_shape(self) -> &'static str {
        match self {
            GroupFamily::M => "a^3",
            GroupFamily::AutPSL => "a^2 b or a b^2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupCertificate {
    /// Computed from the crossed module for this `q`.
    Live {
        class: H3Class,
        cocycle_verified: bool,
        psl_order: u64,
    },
    /// `q` is above the enumeration cap; the shape is taken as known for all odd `q`.
    Cited { psl_order: Option<u64> },
}

impl GroupCertificate {
    pub fn is_live(&self) -> bool {
        matches!(self, GroupCertificate::Live { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Obstructed,
    TriviallyBlocked,
    Inconclusive,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Obstructed => 0,
            Outcome::Inconclusive => 3,
            Outcome::TriviallyBlocked => 4,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub field: ImagQuadField,
    pub family: GroupFamily,
    pub q: u64,
    pub certificate: GroupCertificate,
    pub certificate_shape_ok: bool,
    pub field_condition: FieldCondition,
    pub outcome: Outcome,
    pub solvable_quotient_realizable: bool,
    pub flags: Vec<String>,
}

/// Computes the group certificate for `(family, q)`, live when
/// `|PSL(2,q^2)| <= cap`.
pub fn group_certificate(family: GroupFamily, q: u64, cap: u64) -> Result<GroupCertificate> {
    odd_prime_power(q)?;
    let order = q
        .checked_mul(q)
        .and_then(|q2| q2.checked_mul(q2)?.checked_mul(q2))
        .map(|_| psl_order(q));
    match order {
        Some(o) if o <= cap => {
            let cocycle = match family {
                GroupFamily::M => m_group_cocycle(q)?,
                GroupFamily::AutPSL => aut_group_cocycle(q)?,
            };
            Ok(GroupCertificate::Live {
                class: cocycle.table.classify()?,
                cocycle_verified: cocycle.table.is_cocycle(),
                psl_order: o,
            })
        }
        _ => Ok(GroupCertificate::Cited { psl_order: order }),
    }
}

pub fn verdict(k: &ImagQuadField, family: GroupFamily, q: u64) -> Result<ObstructionReport> {
    verdict_with_cap(k, family, q, DEFAULT_GROUP_CAP)
}

pub fn verdict_with_cap(
    k: &ImagQuadField,
    family: GroupFamily,
    q: u64,
    cap: u64,
) -> Result<ObstructionReport> {
    let certificate = group_certificate(family, q, cap)?;
    let mut flags = Vec::new();
    let certificate_shape_ok = match &certificate {
        GroupCertificate::Live {
            class,
            cocycle_verified,
            ..
        } => *cocycle_verified && family.shape_ok(class),
        GroupCertificate::Cited { .. } => {
            flags.push(format!(
                "group certificate cited: |PSL(2,q^2)| exceeds the live enumeration cap {cap}"
            ));
            true
        }
    };
    let field_condition = family.field_condition(k);
    let outcome = match field_condition {
        FieldCondition::VacuousNoSurjection => Outcome::TriviallyBlocked,
        FieldCondition::Holds if certificate_shape_ok => Outcome::Obstructed,
        _ => Outcome::Inconclusive,
    };
    Ok(ObstructionReport {
        field: k.clone(),
        family,
        q,
        certificate,
        certificate_shape_ok,
        field_condition,
        outcome,
        solvable_quotient_realizable: k.h1_dimension() >= family.required_two_rank(),
        flags,
    })
}

/// A member of one of the two prime families.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FamilyHit {
    pub primes: Vec<u64>,
    pub m: i64,
}

/// Pairs `(p, q)` of primes `<= n` with `p = 1 mod 4`, `q = 3 mod 4`,
/// `(q/p) = -1`; each field `Q(sqrt(-pq))` is re-checked against
/// [`property_ssa`].
pub fn search_family_a(n: u64) -> Result<Vec<FamilyHit>> {
    let primes = primes_up_to(n);
    let pairs: Vec<(u64, u64)> = primes
        .iter()
        .filter(|&&p| p % 4 == 1)
        .flat_map(|&p| primes.iter().filter(|&&q| q % 4 == 3).map(move |&q| (p, q)))
        .collect();
    let mut hits = pairs
        .into_par_iter()
        .filter(|&(p, q)| matches!(kronecker(q as i64, p as i64), Ok(-1)))
        .map(|(p, q)| {
            let m = -((p * q) as i64);
            let k = ImagQuadField::new(m)?;
            match property_ssa(&k) {
                FieldCondition::Holds => Ok(FamilyHit {
                    primes: vec![p, q],
                    m,
                }),
                other => Err(Error::Inconsistent(format!(
                    "family a member m = {m} has property (a) = {}",
                    other.name()
                ))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    hits.sort();
    Ok(hits)
}

/// Triples `p1 < p2 < p3 <= n` with `p1 p2 p3 = 3 mod 4` and
/// `(p_i/p_j) = -1` for all `i != j`; each field is re-checked against
/// [`property_ssb`].
pub fn search_family_b(n: u64) -> Result<Vec<FamilyHit>> {
    let primes: Vec<u64> = primes_up_to(n).into_iter().filter(|&p| p != 2).collect();
    let len = primes.len();
    let triples: Vec<[u64; 3]> = (0..len)
        .flat_map(|i| (i + 1..len).flat_map(move |j| (j + 1..len).map(move |l| (i, j, l))))
        .map(|(i, j, l)| [primes[i], primes[j], primes[l]])
        .collect();
    let nonresidue = |a: u64, b: u64| matches!(kronecker(a as i64, b as i64), Ok(-1));
    let mut hits = triples
        .into_par_iter()
        .filter(|t| {
            (t[0] * t[1] * t[2]) % 4 == 3
                && (0..3).all(|i| (0..3).all(|j| i == j || nonresidue(t[i], t[j])))
        })
        .map(|t| {
            let m = -((t[0] * t[1] * t[2]) as i64);
            let k = ImagQuadField::new(m)?;
            match property_ssb(&k) {
                FieldCondition::Holds => Ok(FamilyHit {
                    primes: t.to_vec(),
                    m,
                }),
                other => Err(Error::Inconsistent(format!(
                    "family b member m = {m} has property (b) = {}",
                    other.name()
                ))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    hits.sort();
    Ok(hits)
}
