//! `SL(2,q^2)`, `PSL(2,q^2)`, `PGL(2,q^2)` and `Aut(PSL(2,q^2)) = PGL(2,q^2) ⋊ <α>`
//! as explicit matrix groups, and the 3-cocycles classifying the crossed
//! modules `SL(2,q^2) -> M(q^2)` and `SL(2,q^2) -> Aut(PSL(2,q^2))`.
//!
//! For a crossed module `d: C -> G` with kernel `Z/2 = {±I}` and cokernel `H`
//! we fix a section `s: H -> G`, measure its failure to be a homomorphism by
//! `F(g,h) = s(g) s(h) s(gh)^{-1}` (an element of `PSL`), lift `F` to
//! `F~: H x H -> SL`, and read the cocycle off
//!
//! ```text
//! s(g)·F~(h,k) · F~(g,hk) = c(g,h,k) · F~(g,h) · F~(gh,k)
//! ```
//!
//! where `c(g,h,k)` is `0` for `I` and `1` for `-I`.

use std::collections::{HashSet, VecDeque};
use std::hash::Hash;

use crate::arith::odd_prime_power;
use crate::cohomology::{classify3, coboundary, Cochain, H3Class, QuotientGroup};
use crate::error::{Error, Result};
use crate::finite_field::{FfElem, FiniteField};

/// Default cap on enumerated group orders.
pub const DEFAULT_GROUP_CAP: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: FfElem,
    pub b: FfElem,
    pub c: FfElem,
    pub d: FfElem,
}

impl Mat2 {
    pub fn new(a: FfElem, b: FfElem, c: FfElem, d: FfElem) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn diag(a: FfElem, d: FfElem) -> Self {
        Mat2::new(a, FfElem::ZERO, FfElem::ZERO, d)
    }

    pub fn identity() -> Self {
        Mat2::diag(FfElem::ONE, FfElem::ONE)
    }

    fn entries(&self) -> [FfElem; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// A class in `PGL(2,q^2)`, stored by the representative whose first nonzero
/// entry (scanning `a, b, c, d`) equals 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProjMat2(Mat2);

impl ProjMat2 {
    pub fn representative(&self) -> &Mat2 {
        &self.0
    }
}

/// An element `(P, f)` of `PGL(2,q^2) ⋊ <α>`, meaning `P α^f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AutElem {
    pub proj: ProjMat2,
    pub frob: bool,
}

/// Minimal group interface used by the closure and perfectness routines.
pub trait GroupOps {
    type Elem: Clone + Eq + Hash;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Self::Elem;
}

impl GroupOps for crate::cohomology::SmallGroup {
    type Elem = usize;
    fn identity(&self) -> usize {
        crate::cohomology::SmallGroup::identity(self)
    }
    fn mul(&self, x: &usize, y: &usize) -> usize {
        crate::cohomology::SmallGroup::mul(self, *x, *y)
    }
    fn inv(&self, x: &usize) -> usize {
        crate::cohomology::SmallGroup::inv(self, *x)
    }
}

/// Breadth-first closure of `gens` under right multiplication by the
/// generators. Fails once more than `cap` elements have been found.
pub fn closure<G: GroupOps>(ops: &G, gens: &[G::Elem], cap: u64) -> Result<Vec<G::Elem>> {
    let id = ops.identity();
    let mut seen: HashSet<G::Elem> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = ops.mul(&x, g);
            if seen.insert(y.clone()) {
                if seen.len() as u64 > cap {
                    return Err(Error::GroupTooLarge {
                        order: seen.len() as u64,
                        cap,
                    });
                }
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(order)
}

fn commutator<G: GroupOps>(ops: &G, x: &G::Elem, y: &G::Elem) -> G::Elem {
    let xy = ops.mul(x, y);
    let xinv_yinv = ops.mul(&ops.inv(x), &ops.inv(y));
    ops.mul(&xy, &xinv_yinv)
}

/// The derived subgroup of `<gens>`, as the normal closure of the
/// commutators of pairs of generators.
pub fn derived_subgroup<G: GroupOps>(ops: &G, gens: &[G::Elem], cap: u64) -> Result<Vec<G::Elem>> {
    let id = ops.identity();
    let mut dgens: Vec<G::Elem> = Vec::new();
    for x in gens {
        for y in gens {
            let c = commutator(ops, x, y);
            if c != id && !dgens.contains(&c) {
                dgens.push(c);
            }
        }
    }
    let mut derived = closure(ops, &dgens, cap)?;
    loop {
        let members: HashSet<&G::Elem> = derived.iter().collect();
        let missing = gens.iter().find_map(|g| {
            let ginv = ops.inv(g);
            dgens
                .iter()
                .map(|d| ops.mul(&ops.mul(g, d), &ginv))
                .find(|c| !members.contains(c))
        });
        match missing {
            Some(c) => {
                dgens.push(c);
                derived = closure(ops, &dgens, cap)?;
            }
            None => return Ok(derived),
        }
    }
}

/// Matrix arithmetic over `F_{q^2}` together with the Frobenius `α: x -> x^q`.
#[derive(Clone, Debug)]
pub struct Psl2 {
    field: FiniteField,
    q: u64,
}

impl Psl2 {
    /// Sets up `F_{q^2}` for an odd prime power `q`.
    pub fn new(q: u64) -> Result<Self> {
        let (p, m) = odd_prime_power(q)?;
        let field = FiniteField::new(p, 2 * m)?;
        Ok(Psl2 { field, q })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn theta(&self) -> FfElem {
        self.field.primitive_element()
    }

    /// `|PSL(2,q^2)| = q^2 (q^4 - 1) / 2`.
    pub fn psl_order(&self) -> u64 {
        psl_order(self.q)
    }

    pub fn pgl_order(&self) -> u64 {
        2 * self.psl_order()
    }

    pub fn mat_mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        let f = &self.field;
        let dot = |u: FfElem, v: FfElem, w: FfElem, z: FfElem| f.add(f.mul(u, v), f.mul(w, z));
        Mat2::new(
            dot(x.a, y.a, x.b, y.c),
            dot(x.a, y.b, x.b, y.d),
            dot(x.c, y.a, x.d, y.c),
            dot(x.c, y.b, x.d, y.d),
        )
    }

    pub fn det(&self, x: &Mat2) -> FfElem {
        let f = &self.field;
        f.sub(f.mul(x.a, x.d), f.mul(x.b, x.c))
    }

    pub fn scale(&self, lambda: FfElem, x: &Mat2) -> Mat2 {
        let f = &self.field;
        Mat2::new(
            f.mul(lambda, x.a),
            f.mul(lambda, x.b),
            f.mul(lambda, x.c),
            f.mul(lambda, x.d),
        )
    }

    pub fn mat_inv(&self, x: &Mat2) -> Option<Mat2> {
        let f = &self.field;
        let dinv = f.inv(self.det(x))?;
        let adj = Mat2::new(x.d, f.neg(x.b), f.neg(x.c), x.a);
        Some(self.scale(dinv, &adj))
    }

    /// Entrywise `x -> x^q`.
    pub fn frob_mat(&self, x: &Mat2) -> Mat2 {
        let e = self.q as i64;
        let f = &self.field;
        Mat2::new(f.pow(x.a, e), f.pow(x.b, e), f.pow(x.c, e), f.pow(x.d, e))
    }

    pub fn project(&self, x: &Mat2) -> Result<ProjMat2> {
        if self.det(x).is_zero() {
            return Err(Error::Inconsistent(
                "singular matrix has no projective class".into(),
            ));
        }
        let lead = x.entries().into_iter().find(|e| !e.is_zero()).unwrap();
        let inv = self.field.inv(lead).unwrap();
        Ok(ProjMat2(self.scale(inv, x)))
    }

    fn project_unchecked(&self, x: &Mat2) -> ProjMat2 {
        self.project(x).expect("invertible matrix")
    }

    pub fn proj_identity(&self) -> ProjMat2 {
        ProjMat2(Mat2::identity())
    }

    pub fn proj_mul(&self, x: &ProjMat2, y: &ProjMat2) -> ProjMat2 {
        self.project_unchecked(&self.mat_mul(&x.0, &y.0))
    }

    pub fn proj_inv(&self, x: &ProjMat2) -> ProjMat2 {
        // the adjugate is a scalar multiple of the inverse
        let f = &self.field;
        let m = &x.0;
        self.project_unchecked(&Mat2::new(m.d, f.neg(m.b), f.neg(m.c), m.a))
    }

    /// 0 when the determinant is a square (the class lies in `PSL`), else 1.
    pub fn det_class(&self, x: &ProjMat2) -> u8 {
        u8::from(!self.field.is_square(self.det(&x.0)))
    }

    /// The class of `diag(1, θ)`, an element of `PGL \ PSL`.
    pub fn tau(&self) -> ProjMat2 {
        ProjMat2(Mat2::diag(FfElem::ONE, self.theta()))
    }

    pub fn alpha(&self) -> AutElem {
        AutElem {
            proj: self.proj_identity(),
            frob: true,
        }
    }

    pub fn aut(&self, proj: ProjMat2, frob: bool) -> AutElem {
        AutElem { proj, frob }
    }

    pub fn aut_identity(&self) -> AutElem {
        self.aut(self.proj_identity(), false)
    }

    /// `(P1, f1)(P2, f2) = (P1 α^{f1}(P2), f1 + f2)`.
    pub fn aut_mul(&self, x: &AutElem, y: &AutElem) -> AutElem {
        let twisted = if x.frob {
            self.project_unchecked(&self.frob_mat(&y.proj.0))
        } else {
            y.proj
        };
        AutElem {
            proj: self.proj_mul(&x.proj, &twisted),
            frob: x.frob ^ y.frob,
        }
    }

    pub fn aut_inv(&self, x: &AutElem) -> AutElem {
        let pinv = self.proj_inv(&x.proj);
        let proj = if x.frob {
            self.project_unchecked(&self.frob_mat(&pinv.0))
        } else {
            pinv
        };
        AutElem { proj, frob: x.frob }
    }

    /// The quotient map onto `Out(PSL(2,q^2)) = Z/2 x Z/2`.
    pub fn to_quotient(&self, x: &AutElem) -> (u8, u8) {
        (self.det_class(&x.proj), u8::from(x.frob))
    }

    /// Action of `Aut(PSL)` on `SL(2,q^2)`: `(P, f) · X = P α^f(X) P^{-1}`.
    pub fn act(&self, g: &AutElem, x: &Mat2) -> Mat2 {
        let x = if g.frob { self.frob_mat(x) } else { *x };
        let p = g.proj.0;
        let pinv = self
            .mat_inv(&p)
            .expect("projective representatives are invertible");
        self.mat_mul(&self.mat_mul(&p, &x), &pinv)
    }

    /// Lifts a class of `PSL` to `SL`, choosing the scalar `λ` with
    /// `λ^2 det = 1` of smaller index. `None` outside `PSL`.
    pub fn lift_to_sl(&self, x: &ProjMat2) -> Option<Mat2> {
        let f = &self.field;
        let dinv = f.inv(self.det(&x.0))?;
        let lambda = f.sqrt(dinv)?;
        Some(self.scale(lambda, &x.0))
    }

    fn elementary_generators(&self) -> Vec<ProjMat2> {
        let f = &self.field;
        let mut gens = Vec::new();
        for i in 0..f.degree() {
            let mut coeffs = vec![0; f.degree() as usize];
            coeffs[i as usize] = 1;
            let t = f.from_coeffs(&coeffs);
            gens.push(ProjMat2(Mat2::new(
                FfElem::ONE,
                t,
                FfElem::ZERO,
                FfElem::ONE,
            )));
            gens.push(ProjMat2(Mat2::new(
                FfElem::ONE,
                FfElem::ZERO,
                t,
                FfElem::ONE,
            )));
        }
        gens
    }

    /// Generators of `PSL(2,q^2)`: elementary matrices over an additive basis.
    pub fn psl_generators(&self) -> Vec<ProjMat2> {
        self.elementary_generators()
    }

    pub fn pgl_generators(&self) -> Vec<ProjMat2> {
        let mut gens = self.elementary_generators();
        gens.push(self.tau());
        gens
    }

    /// Enumerates `PSL(2,q^2)` in breadth-first order.
    pub fn enumerate_psl(&self, cap: u64) -> Result<Vec<ProjMat2>> {
        self.check_cap(self.psl_order(), cap)?;
        closure(self, &self.psl_generators(), cap)
    }

    pub fn enumerate_pgl(&self, cap: u64) -> Result<Vec<ProjMat2>> {
        self.check_cap(self.pgl_order(), cap)?;
        closure(self, &self.pgl_generators(), cap)
    }

    fn check_cap(&self, order: u64, cap: u64) -> Result<()> {
        if order > cap {
            Err(Error::GroupTooLarge { order, cap })
        } else {
            Ok(())
        }
    }
}

impl GroupOps for Psl2 {
    type Elem = ProjMat2;
    fn identity(&self) -> ProjMat2 {
        self.proj_identity()
    }
    fn mul(&self, x: &ProjMat2, y: &ProjMat2) -> ProjMat2 {
        self.proj_mul(x, y)
    }
    fn inv(&self, x: &ProjMat2) -> ProjMat2 {
        self.proj_inv(x)
    }
}

pub fn psl_order(q: u64) -> u64 {
    let q2 = q * q;
    q2 * (q2 * q2 - 1) / 2
}

/// Whether `PSL(2,q^2)` equals its commutator subgroup, by explicit
/// enumeration. Refuses groups larger than `cap`.
pub fn perfectness_check(q: u64, cap: u64) -> Result<PerfectnessReport> {
    let order = psl_order(odd_prime_power(q).map(|_| q)?);
    if order > cap {
        return Err(Error::GroupTooLarge { order, cap });
    }
    let ctx = Psl2::new(q)?;
    let gens = ctx.psl_generators();
    let group = closure(&ctx, &gens, cap)?;
    let derived = derived_subgroup(&ctx, &gens, cap)?;
    Ok(PerfectnessReport {
        q,
        group_order: group.len() as u64,
        derived_order: derived.len() as u64,
        perfect: derived.len() == group.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PerfectnessReport {
    pub q: u64,
    pub group_order: u64,
    pub derived_order: u64,
    pub perfect: bool,
}

/// A 3-cocycle on `Z/2` or `Z/2 x Z/2` with values in F_2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleTable {
    pub group: QuotientGroup,
    pub values: Cochain,
}

impl CocycleTable {
    pub fn get(&self, g: usize, h: usize, k: usize) -> bool {
        self.values.get(&[g, h, k])
    }

    pub fn classify(&self) -> Result<H3Class> {
        classify3(self.group, &self.values)
    }

    pub fn is_cocycle(&self) -> bool {
        coboundary(&self.group.group(), &self.values)
            .map(|d| d.is_zero())
            .unwrap_or(false)
    }
}

/// Everything produced along the way to the cocycle.
#[derive(Clone, Debug)]
pub struct ObstructionCocycle {
    pub q: u64,
    pub table: CocycleTable,
    pub section: Vec<AutElem>,
    /// `F(g,h)` at index `g * |H| + h`.
    pub failure: Vec<ProjMat2>,
    /// `F~(g,h)` at index `g * |H| + h`.
    pub lift: Vec<Mat2>,
}

impl ObstructionCocycle {
    pub fn failure_at(&self, g: usize, h: usize) -> ProjMat2 {
        self.failure[g * self.section.len() + h]
    }

    pub fn lift_at(&self, g: usize, h: usize) -> Mat2 {
        self.lift[g * self.section.len() + h]
    }
}

impl Psl2 {
    /// The section `0 -> I`, `1 -> ατ` of `M(q^2) -> Z/2`.
    pub fn m_section(&self) -> Vec<AutElem> {
        let alpha_tau = self.aut_mul(&self.alpha(), &self.aut(self.tau(), false));
        vec![self.aut_identity(), alpha_tau]
    }

    /// The section `(e, f) -> (τ^e, f)` of `Aut(PSL) -> Z/2 x Z/2`.
    pub fn aut_section(&self) -> Vec<AutElem> {
        (0..4)
            .map(|g| {
                let proj = if g & 1 == 1 {
                    self.tau()
                } else {
                    self.proj_identity()
                };
                self.aut(proj, g & 2 == 2)
            })
            .collect()
    }

    /// `diag(θ^{-(q+1)/2}, θ^{(q+1)/2})`, the lift of `F(1,1)` for `M(q^2)`.
    pub fn m_failure_lift(&self) -> Mat2 {
        let e = (self.q as i64 + 1) / 2;
        Mat2::diag(self.field.primitive_pow(-e), self.field.primitive_pow(e))
    }

    /// Runs the section/failure/lift construction over `group` and returns
    /// the resulting cocycle. `lift` chooses `F~(g,h)` from `F(g,h)`; it must
    /// return a determinant-one matrix in the given class.
    pub fn obstruction_cocycle(
        &self,
        group: QuotientGroup,
        section: &[AutElem],
        lift: impl Fn(usize, usize, &ProjMat2) -> Mat2,
    ) -> Result<ObstructionCocycle> {
        let h = group.group();
        let n = h.order();
        if section.len() != n || section[h.identity()] != self.aut_identity() {
            return Err(Error::Inconsistent(
                "section must send the identity to the identity".into(),
            ));
        }
        let mut failure = Vec::with_capacity(n * n);
        let mut lifts = Vec::with_capacity(n * n);
        for g in 0..n {
            for k in 0..n {
                let prod = self.aut_mul(&section[g], &section[k]);
                let f = self.aut_mul(&prod, &self.aut_inv(&section[h.mul(g, k)]));
                if f.frob || self.det_class(&f.proj) != 0 {
                    return Err(Error::Inconsistent(format!(
                        "F({g},{k}) is not in PSL(2,q^2)"
                    )));
                }
                let l = lift(g, k, &f.proj);
                if self.det(&l) != FfElem::ONE || self.project(&l)? != f.proj {
                    return Err(Error::Inconsistent(format!(
                        "lift of F({g},{k}) is not an SL(2,q^2) preimage"
                    )));
                }
                failure.push(f.proj);
                lifts.push(l);
            }
        }
        let minus_one = Mat2::diag(self.field.from_int(-1), self.field.from_int(-1));
        let at = |g: usize, k: usize| &lifts[g * n + k];
        let mut err = None;
        let values = Cochain::from_fn(&h, 3, |t| {
            let (g, x, y) = (t[0], t[1], t[2]);
            let lhs = self.mat_mul(&self.act(&section[g], at(x, y)), at(g, h.mul(x, y)));
            let rhs = self.mat_mul(at(g, x), at(h.mul(g, x), y));
            let ratio = self.mat_mul(&lhs, &self.mat_inv(&rhs).unwrap());
            if ratio == Mat2::identity() {
                false
            } else if ratio == minus_one {
                true
            } else {
                err.get_or_insert(format!("c({g},{x},{y}) is not ±I"));
                false
            }
        })?;
        if let Some(e) = err {
            return Err(Error::Inconsistent(e));
        }
        let table = CocycleTable { group, values };
        if !table.is_cocycle() {
            return Err(Error::Inconsistent(
                "computed table violates the cocycle identity".into(),
            ));
        }
        Ok(ObstructionCocycle {
            q: self.q,
            table,
            section: section.to_vec(),
            failure,
            lift: lifts,
        })
    }

    pub fn default_lift(&self, x: &ProjMat2) -> Mat2 {
        self.lift_to_sl(x).expect("failure values lie in PSL")
    }
}

/// The cocycle of the crossed module `SL(2,q^2) -> M(q^2)` over `Z/2`.
pub fn m_group_cocycle(q: u64) -> Result<ObstructionCocycle> {
    let ctx = Psl2::new(q)?;
    m_group_cocycle_in(&ctx)
}

pub fn m_group_cocycle_in(ctx: &Psl2) -> Result<ObstructionCocycle> {
    let explicit = ctx.m_failure_lift();
    ctx.obstruction_cocycle(QuotientGroup::Z2, &ctx.m_section(), |g, h, f| {
        if (g, h) == (1, 1) {
            explicit
        } else {
            ctx.default_lift(f)
        }
    })
}

/// The cocycle of the crossed module `SL(2,q^2) -> Aut(PSL(2,q^2))` over
/// `Z/2 x Z/2`, using the section `(e, f) -> (τ^e, f)`.
pub fn aut_group_cocycle(q: u64) -> Result<ObstructionCocycle> {
    let ctx = Psl2::new(q)?;
    aut_group_cocycle_in(&ctx)
}

pub fn aut_group_cocycle_in(ctx: &Psl2) -> Result<ObstructionCocycle> {
    ctx.obstruction_cocycle(QuotientGroup::KleinFour, &ctx.aut_section(), |_, _, f| {
        ctx.default_lift(f)
    })
}
