//! Cohomology of small finite groups with trivial F_2 coefficients, computed
//! from the inhomogeneous (unnormalized) bar resolution.
//!
//! An `n`-cochain is an F_2-valued function on `G^n`; the tuple
//! `(g_1, ..., g_n)` sits at index `g_1 |G|^{n-1} + ... + g_n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::f2::{Echelon, F2Vec};

/// Largest cochain space the linear algebra will build.
const MAX_COCHAIN_DIM: usize = 1 << 15;

/// A finite group of order at most 8 given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl SmallGroup {
    /// Validates `table[g][h] = gh` as a group law.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || n > 8 {
            return Err(Error::InvalidGroup(format!("order {n} is not in 1..=8")));
        }
        if table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return Err(Error::InvalidGroup("table is not square over 0..n".into()));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mul = |a: usize, b: usize| flat[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul(e, g) == g && mul(g, e) == g))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| mul(g, h) == identity && mul(h, g) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {g} has no inverse")))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(SmallGroup {
            order: n,
            table: flat,
            identity,
            inverses,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::from_table(table).expect("cyclic group table")
    }

    /// `Z/2 x Z/2` with `(e, f)` stored at index `e + 2f`.
    pub fn klein_four() -> Self {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        Self::from_table(table).expect("Klein four table")
    }

    /// Direct product with `(g, h)` at index `g + |G| h`.
    pub fn product(g: &SmallGroup, h: &SmallGroup) -> Result<Self> {
        let (m, n) = (g.order, h.order);
        let table = (0..m * n)
            .map(|x| {
                (0..m * n)
                    .map(|y| g.mul(x % m, y % m) + m * h.mul(x / m, y / m))
                    .collect()
            })
            .collect();
        Self::from_table(table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_homomorphism_to(&self, target: &SmallGroup, map: &[usize]) -> bool {
        map.len() == self.order
            && map.iter().all(|&x| x < target.order)
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
            })
    }
}

/// An F_2-valued `degree`-cochain on a group of the given order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    order: usize,
    degree: usize,
    values: F2Vec,
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Cochain(|G|={}, n={}, {})",
            self.order,
            self.degree,
            self.values.to_bit_string()
        )
    }
}

fn cochain_dim(order: usize, degree: usize) -> Result<usize> {
    order
        .checked_pow(degree as u32)
        .filter(|&d| d <= MAX_COCHAIN_DIM)
        .ok_or(Error::CochainTooLarge { order, degree })
}

impl Cochain {
    pub fn zero(group: &SmallGroup, degree: usize) -> Result<Self> {
        Ok(Cochain {
            order: group.order,
            degree,
            values: F2Vec::zeros(cochain_dim(group.order, degree)?),
        })
    }

    pub fn from_fn(
        group: &SmallGroup,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> bool,
    ) -> Result<Self> {
        let mut c = Self::zero(group, degree)?;
        let mut tuple = vec![0; degree];
        for idx in 0..c.values.len() {
            decode_into(idx, group.order, &mut tuple);
            if f(&tuple) {
                c.values.set(idx, true);
            }
        }
        Ok(c)
    }

    pub fn from_values(group: &SmallGroup, degree: usize, values: F2Vec) -> Result<Self> {
        if values.len() != cochain_dim(group.order, degree)? {
            return Err(Error::InvalidGroup("cochain length mismatch".into()));
        }
        Ok(Cochain {
            order: group.order,
            degree,
            values,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &F2Vec {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    pub fn index_of(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.degree);
        tuple.iter().fold(0, |acc, &g| acc * self.order + g)
    }

    pub fn get(&self, tuple: &[usize]) -> bool {
        self.values.get(self.index_of(tuple))
    }

    pub fn set(&mut self, tuple: &[usize], b: bool) {
        let idx = self.index_of(tuple);
        self.values.set(idx, b);
    }

    /// Nonzero entries as tuples, in index order.
    pub fn support(&self) -> Vec<Vec<usize>> {
        let mut tuple = vec![0; self.degree];
        self.values
            .ones()
            .map(|idx| {
                decode_into(idx, self.order, &mut tuple);
                tuple.clone()
            })
            .collect()
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!((self.order, self.degree), (other.order, other.degree));
        let mut out = self.clone();
        out.values.xor_assign(&other.values);
        out
    }
}

fn decode_into(mut idx: usize, order: usize, tuple: &mut [usize]) {
    for slot in tuple.iter_mut().rev() {
        *slot = idx % order;
        idx /= order;
    }
}

/// The bar differential:
/// `(dc)(g_1..g_{n+1}) = c(g_2..g_{n+1}) + sum_i c(.., g_i g_{i+1}, ..) + c(g_1..g_n)`.
pub fn coboundary(group: &SmallGroup, c: &Cochain) -> Result<Cochain> {
    let n = c.degree;
    assert_eq!(c.order, group.order, "cochain belongs to another group");
    let mut out = Cochain::zero(group, n + 1)?;
    let mut tuple = vec![0; n + 1];
    let mut face = vec![0; n];
    for idx in 0..out.values.len() {
        decode_into(idx, group.order, &mut tuple);
        let mut bit = c.get(&tuple[1..]) ^ c.get(&tuple[..n]);
        for i in 0..n {
            face[..i].copy_from_slice(&tuple[..i]);
            face[i] = group.mul(tuple[i], tuple[i + 1]);
            face[i + 1..].copy_from_slice(&tuple[i + 2..]);
            bit ^= c.get(&face);
        }
        if bit {
            out.values.set(idx, true);
        }
    }
    Ok(out)
}

pub fn is_cocycle(group: &SmallGroup, c: &Cochain) -> Result<bool> {
    Ok(coboundary(group, c)?.is_zero())
}

/// Cup product `(c1 ∪ c2)(g_1..g_{n+m}) = c1(g_1..g_n) c2(g_{n+1}..g_{n+m})`.
pub fn cup(group: &SmallGroup, c1: &Cochain, c2: &Cochain) -> Result<Cochain> {
    for c in [c1, c2] {
        if !is_cocycle(group, c)? {
            return Err(Error::NotCocycle(c.degree));
        }
    }
    let n = c1.degree;
    Cochain::from_fn(group, n + c2.degree, |t| c1.get(&t[..n]) && c2.get(&t[n..]))
}

/// Pulls `c` (on `target`) back along `hom: source -> target`.
pub fn pullback(
    source: &SmallGroup,
    target: &SmallGroup,
    hom: &[usize],
    c: &Cochain,
) -> Result<Cochain> {
    if !source.is_homomorphism_to(target, hom) {
        return Err(Error::NotHomomorphism);
    }
    assert_eq!(c.order, target.order, "cochain belongs to another group");
    let mut image = vec![0; c.degree];
    Cochain::from_fn(source, c.degree, |t| {
        for (slot, &x) in image.iter_mut().zip(t) {
            *slot = hom[x];
        }
        c.get(&image)
    })
}

fn coboundary_images(group: &SmallGroup, degree: usize) -> Result<Vec<F2Vec>> {
    let dim = cochain_dim(group.order, degree)?;
    (0..dim)
        .map(|i| {
            let e = Cochain::from_values(group, degree, F2Vec::unit(dim, i))?;
            Ok(coboundary(group, &e)?.values)
        })
        .collect()
}

/// The coboundaries `B^n` in echelon form.
pub fn coboundary_space(group: &SmallGroup, degree: usize) -> Result<Echelon> {
    coboundary_echelon(group, degree, 0)
}

fn coboundary_echelon(group: &SmallGroup, degree: usize, tag_width: usize) -> Result<Echelon> {
    let width = cochain_dim(group.order, degree)?;
    let mut ech = Echelon::new(width, tag_width);
    if degree > 0 {
        for v in coboundary_images(group, degree - 1)? {
            ech.insert(&v, F2Vec::zeros(tag_width));
        }
    }
    Ok(ech)
}

/// A basis of the cocycles `Z^n`.
pub fn cocycle_basis(group: &SmallGroup, degree: usize) -> Result<Vec<Cochain>> {
    let dim = cochain_dim(group.order, degree)?;
    let mut ech = Echelon::new(cochain_dim(group.order, degree + 1)?, dim);
    let mut kernel = Vec::new();
    for (i, v) in coboundary_images(group, degree)?.into_iter().enumerate() {
        if let Some(tag) = ech.insert(&v, F2Vec::unit(dim, i)) {
            kernel.push(Cochain::from_values(group, degree, tag)?);
        }
    }
    Ok(kernel)
}

/// `H^n(G, F_2)`: its dimension and one representative per basis class.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub degree: usize,
    pub dimension: usize,
    pub cocycle_dimension: usize,
    pub coboundary_dimension: usize,
    /// Each representative is the lexicographically least element of its
    /// class modulo coboundaries.
    pub representatives: Vec<Cochain>,
}

pub fn cohomology_basis(group: &SmallGroup, degree: usize) -> Result<CohomologyBasis> {
    let boundaries = coboundary_space(group, degree)?;
    let cocycles = cocycle_basis(group, degree)?;
    let mut span = boundaries.clone();
    let mut representatives = Vec::new();
    for z in &cocycles {
        if span.insert_untagged(&z.values) {
            let (nf, _) = boundaries.reduce(&z.values);
            representatives.push(Cochain::from_values(group, degree, nf)?);
        }
    }
    Ok(CohomologyBasis {
        degree,
        dimension: representatives.len(),
        cocycle_dimension: cocycles.len(),
        coboundary_dimension: boundaries.rank(),
        representatives,
    })
}

/// Writes the class of the cocycle `c` in terms of the classes of `basis`
/// (which must be independent modulo coboundaries).
pub fn express_in_basis(group: &SmallGroup, basis: &[Cochain], c: &Cochain) -> Result<Vec<u8>> {
    if !is_cocycle(group, c)? {
        return Err(Error::NotCocycle(c.degree));
    }
    let mut tagged = coboundary_echelon(group, c.degree, basis.len())?;
    for (i, b) in basis.iter().enumerate() {
        if tagged
            .insert(&b.values, F2Vec::unit(basis.len(), i))
            .is_some()
        {
            return Err(Error::Inconsistent(
                "basis classes are dependent modulo coboundaries".into(),
            ));
        }
    }
    let (residue, tag) = tagged.reduce(&c.values);
    if !residue.is_zero() {
        return Err(Error::Inconsistent(
            "class is outside the span of the basis".into(),
        ));
    }
    Ok((0..basis.len()).map(|i| tag.get(i) as u8).collect())
}

/// The two quotient groups that occur as `Out(PSL(2,q^2))`-type quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum QuotientGroup {
    /// `Z/2`, generator class `a`.
    Z2,
    /// `Z/2 x Z/2` with `(e, f)` at index `e + 2f`; `a` reads `e`, `b` reads `f`.
    KleinFour,
}

impl QuotientGroup {
    pub fn group(self) -> SmallGroup {
        match self {
            QuotientGroup::Z2 => SmallGroup::cyclic(2),
            QuotientGroup::KleinFour => SmallGroup::klein_four(),
        }
    }

    /// The degree-one generators `a` (and `b`).
    pub fn h1_generators(self) -> Vec<Cochain> {
        let g = self.group();
        let gens: &[fn(&[usize]) -> bool] = match self {
            QuotientGroup::Z2 => &[|t| t[0] == 1],
            QuotientGroup::KleinFour => &[|t| t[0] & 1 == 1, |t| t[0] & 2 == 2],
        };
        gens.iter()
            .map(|f| Cochain::from_fn(&g, 1, f).expect("small cochain"))
            .collect()
    }

    /// Basis of `H^3`: `(a^3)` for `Z/2`, `(a^3, a^2 b, a b^2, b^3)` for `Z/2 x Z/2`.
    pub fn h3_basis(self) -> Vec<Cochain> {
        let g = self.group();
        let gens = self.h1_generators();
        let cube = |x: &Cochain, y: &Cochain, z: &Cochain| {
            let yz = cup(&g, y, z).expect("cocycles");
            cup(&g, x, &yz).expect("cocycles")
        };
        match self {
            QuotientGroup::Z2 => vec![cube(&gens[0], &gens[0], &gens[0])],
            QuotientGroup::KleinFour => {
                let (a, b) = (&gens[0], &gens[1]);
                vec![cube(a, a, a), cube(a, a, b), cube(a, b, b), cube(b, b, b)]
            }
        }
    }

    fn basis_names(self) -> &'static [&'static str] {
        match self {
            QuotientGroup::Z2 => &["a^3"],
            QuotientGroup::KleinFour => &["a^3", "a^2 b", "a b^2", "b^3"],
        }
    }

    pub fn inclusions(self) -> Vec<(&'static str, Vec<usize>)> {
        match self {
            QuotientGroup::Z2 => vec![("identity", vec![0, 1])],
            QuotientGroup::KleinFour => vec![
                ("first factor", vec![0, 1]),
                ("second factor", vec![0, 2]),
                ("diagonal", vec![0, 3]),
            ],
        }
    }
}

/// Coordinates of a class in `H^3` with respect to [`QuotientGroup::h3_basis`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct H3Class {
    pub group: QuotientGroup,
    pub coords: Vec<u8>,
}

impl H3Class {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn basis_vector(group: QuotientGroup, i: usize) -> Self {
        let mut coords = vec![0; group.basis_names().len()];
        coords[i] = 1;
        H3Class { group, coords }
    }

    pub fn a_cubed(group: QuotientGroup) -> Self {
        Self::basis_vector(group, 0)
    }

    pub fn is_a_squared_b_shape(&self) -> bool {
        self.group == QuotientGroup::KleinFour
            && (self.coords == [0, 1, 0, 0] || self.coords == [0, 0, 1, 0])
    }
}

impl fmt::Display for H3Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<&str> = self
            .coords
            .iter()
            .zip(self.group.basis_names())
            .filter(|(&c, _)| c == 1)
            .map(|(_, &n)| n)
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Identifies the class of a 3-cocycle on `Z/2` or `Z/2 x Z/2`.
pub fn classify3(group: QuotientGroup, c: &Cochain) -> Result<H3Class> {
    let coords = express_in_basis(&group.group(), &group.h3_basis(), c)?;
    Ok(H3Class { group, coords })
}

pub fn is_coboundary(group: &SmallGroup, c: &Cochain) -> Result<bool> {
    Ok(coboundary_space(group, c.degree)?.contains(&c.values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random_cochain(g: &SmallGroup, n: usize, rng: &mut impl Rng) -> Cochain {
        Cochain::from_fn(g, n, |_| rng.gen_bool(0.5)).unwrap()
    }

    #[test]
    fn group_validation() {
        assert!(SmallGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(SmallGroup::from_table(vec![]).is_err());
        // a Latin square that is not associative
        let quasi = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(SmallGroup::from_table(quasi).is_err());
        let k = SmallGroup::product(&SmallGroup::cyclic(2), &SmallGroup::cyclic(2)).unwrap();
        assert_eq!(k, SmallGroup::klein_four());
        assert_eq!(
            SmallGroup::product(&k, &SmallGroup::cyclic(2))
                .unwrap()
                .order(),
            8
        );
    }

    #[test]
    fn coboundary_examples() {
        let z2 = SmallGroup::cyclic(2);
        let zero = Cochain::zero(&z2, 2).unwrap();
        assert!(coboundary(&z2, &zero).unwrap().is_zero());
        let a = Cochain::from_fn(&z2, 1, |t| t[0] == 1).unwrap();
        assert!(coboundary(&z2, &a).unwrap().is_zero());
        // a non-homomorphism is not a 1-cocycle
        let z3 = SmallGroup::cyclic(3);
        let bad = Cochain::from_fn(&z3, 1, |t| t[0] == 1).unwrap();
        assert!(!is_cocycle(&z3, &bad).unwrap());
    }

    #[test]
    fn d_squared_vanishes() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        let k = SmallGroup::klein_four();
        for _ in 0..100 {
            let c = random_cochain(&k, 2, &mut rng);
            let dd = coboundary(&k, &coboundary(&k, &c).unwrap()).unwrap();
            assert!(dd.is_zero());
        }
        // exhaustively on unit cochains up to degree 3
        for g in [SmallGroup::cyclic(2), SmallGroup::klein_four()] {
            for n in 0..=3 {
                let dim = g.order().pow(n as u32);
                for i in 0..dim {
                    let e = Cochain::from_values(&g, n, F2Vec::unit(dim, i)).unwrap();
                    let dd = coboundary(&g, &coboundary(&g, &e).unwrap()).unwrap();
                    assert!(dd.is_zero());
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        let z2 = SmallGroup::cyclic(2);
        let k = SmallGroup::klein_four();
        for n in 0..=4 {
            assert_eq!(cohomology_basis(&z2, n).unwrap().dimension, 1, "H^{n}(Z/2)");
            assert_eq!(
                cohomology_basis(&k, n).unwrap().dimension,
                n + 1,
                "H^{n}(V4)"
            );
        }
        assert_eq!(
            cohomology_basis(&SmallGroup::cyclic(3), 2)
                .unwrap()
                .dimension,
            0
        );
        assert_eq!(
            cohomology_basis(&SmallGroup::cyclic(4), 3)
                .unwrap()
                .dimension,
            1
        );
        assert_eq!(
            cohomology_basis(&SmallGroup::trivial(), 0)
                .unwrap()
                .dimension,
            1
        );
        let e8 = SmallGroup::product(&k, &z2).unwrap();
        // (Z/2)^3: dim H^n = C(n+2, 2)
        assert_eq!(cohomology_basis(&e8, 2).unwrap().dimension, 6);
    }

    #[test]
    fn representatives_are_reduced_cocycles() {
        let k = SmallGroup::klein_four();
        let basis = cohomology_basis(&k, 3).unwrap();
        let b = coboundary_space(&k, 3).unwrap();
        for r in &basis.representatives {
            assert!(is_cocycle(&k, r).unwrap());
            assert_eq!(&b.reduce(r.values()).0, r.values());
        }
    }

    #[test]
    fn cup_examples() {
        let z2 = QuotientGroup::Z2;
        let a = &z2.h1_generators()[0];
        let g = z2.group();
        let a3 = cup(&g, a, &cup(&g, a, a).unwrap()).unwrap();
        assert!(!is_coboundary(&g, &a3).unwrap());
        let zero = Cochain::zero(&g, 2).unwrap();
        assert!(cup(&g, a, &zero).unwrap().is_zero());
        let k = SmallGroup::klein_four();
        let gens = QuotientGroup::KleinFour.h1_generators();
        let ab = cup(&k, &gens[0], &gens[1]).unwrap();
        let ba = cup(&k, &gens[1], &gens[0]).unwrap();
        assert!(is_coboundary(&k, &ab.add(&ba)).unwrap());
        assert!(!is_coboundary(&k, &ab).unwrap());
        let not_cocycle = Cochain::from_fn(&SmallGroup::cyclic(3), 1, |t| t[0] == 1).unwrap();
        assert!(matches!(
            cup(&SmallGroup::cyclic(3), &not_cocycle, &not_cocycle),
            Err(Error::NotCocycle(1))
        ));
    }

    #[test]
    fn cup_is_bilinear_on_h1_of_klein_four() {
        let k = SmallGroup::klein_four();
        let z1 = cocycle_basis(&k, 1).unwrap();
        assert_eq!(z1.len(), 2);
        let all: Vec<Cochain> = (0..4)
            .map(|m| {
                let mut c = Cochain::zero(&k, 1).unwrap();
                for (i, z) in z1.iter().enumerate() {
                    if m >> i & 1 == 1 {
                        c = c.add(z);
                    }
                }
                c
            })
            .collect();
        for x in &all {
            for y in &all {
                for z in &all {
                    let lhs = cup(&k, &x.add(y), z).unwrap();
                    let rhs = cup(&k, x, z).unwrap().add(&cup(&k, y, z).unwrap());
                    assert_eq!(lhs, rhs);
                    let lhs = cup(&k, z, &x.add(y)).unwrap();
                    let rhs = cup(&k, z, x).unwrap().add(&cup(&k, z, y).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn classify3_is_left_inverse_of_basis() {
        for q in [QuotientGroup::Z2, QuotientGroup::KleinFour] {
            let basis = q.h3_basis();
            for (i, b) in basis.iter().enumerate() {
                assert_eq!(classify3(q, b).unwrap(), H3Class::basis_vector(q, i));
            }
            let zero = Cochain::zero(&q.group(), 3).unwrap();
            assert!(classify3(q, &zero).unwrap().is_zero());
        }
        // adding a coboundary does not change the class
        let k = SmallGroup::klein_four();
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let basis = QuotientGroup::KleinFour.h3_basis();
        for _ in 0..20 {
            let noise = coboundary(&k, &random_cochain(&k, 2, &mut rng)).unwrap();
            let c = basis[1].add(&basis[3]).add(&noise);
            let cls = classify3(QuotientGroup::KleinFour, &c).unwrap();
            assert_eq!(cls.coords, vec![0, 1, 0, 1]);
            assert_eq!(cls.to_string(), "a^2 b + b^3");
        }
    }

    #[test]
    fn pullback_examples() {
        let k = SmallGroup::klein_four();
        let z2 = SmallGroup::cyclic(2);
        let basis = QuotientGroup::KleinFour.h3_basis();
        let a2b = &basis[1];
        let first = pullback(&z2, &k, &[0, 1], a2b).unwrap();
        assert!(is_coboundary(&z2, &first).unwrap());
        let second = pullback(&z2, &k, &[0, 2], a2b).unwrap();
        assert!(is_coboundary(&z2, &second).unwrap());
        let diag = pullback(&z2, &k, &[0, 3], a2b).unwrap();
        assert_eq!(
            classify3(QuotientGroup::Z2, &diag).unwrap(),
            H3Class::a_cubed(QuotientGroup::Z2)
        );
        let id = pullback(&k, &k, &[0, 1, 2, 3], a2b).unwrap();
        assert_eq!(&id, a2b);
        assert!(matches!(
            pullback(&z2, &k, &[1, 1], a2b),
            Err(Error::NotHomomorphism)
        ));
    }

    #[test]
    fn pullback_is_functorial() {
        let k = SmallGroup::klein_four();
        let z2 = SmallGroup::cyclic(2);
        let homs_in: Vec<Vec<usize>> = (0..4).map(|x| vec![0, x]).collect();
        let homs_out: Vec<Vec<usize>> = (0..4)
            .map(|m: usize| {
                (0..4usize)
                    .map(|g| ((g & m).count_ones() % 2) as usize)
                    .collect()
            })
            .collect();
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let c = random_cochain(&z2, 3, &mut rng);
        for f in &homs_in {
            for g in &homs_out {
                assert!(k.is_homomorphism_to(&z2, g));
                let composite: Vec<usize> = f.iter().map(|&x| g[x]).collect();
                let direct = pullback(&z2, &z2, &composite, &c).unwrap();
                let staged = pullback(&z2, &k, f, &pullback(&k, &z2, g, &c).unwrap()).unwrap();
                assert_eq!(direct, staged);
            }
        }
    }

    #[test]
    fn pullback_commutes_with_coboundary() {
        let k = SmallGroup::klein_four();
        let z2 = SmallGroup::cyclic(2);
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for _ in 0..20 {
            let c = random_cochain(&k, 2, &mut rng);
            let lhs = pullback(&z2, &k, &[0, 3], &coboundary(&k, &c).unwrap()).unwrap();
            let rhs = coboundary(&z2, &pullback(&z2, &k, &[0, 3], &c).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
