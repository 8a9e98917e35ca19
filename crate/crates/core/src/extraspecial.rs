//! Extraspecial 2-groups: construction as central products of `D8` and
//! `Q8`, recognition, the commutator form on `G/Z(G)`, and closed-form
//! perfect-code classifications.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::limits::Limits;
use crate::named::{build_named, NamedGroup};
use crate::perfect_code::{CodeVerdict, Criterion};
use crate::set::Element;
use crate::subgroups::{
    center, is_abelian_subgroup, is_maximal_abelian, is_normal_in, normalizer, sylow_2_subgroup,
};

/// The two isomorphism types of extraspecial 2-groups of a given order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Central product of `m` copies of `D8`.
    Gm1,
    /// Central product of `m - 1` copies of `D8` and one `Q8`.
    Gm2,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Gm1 => "gm1",
            Family::Gm2 => "gm2",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gm1" => Ok(Family::Gm1),
            "gm2" => Ok(Family::Gm2),
            other => Err(Error::Unsupported(format!("family `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Dihedral8,
    Quaternion8,
}

/// An iterated central product `F1 ∘ F2 ∘ ... ∘ Fk`, associated to the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralProductSpec {
    pub factors: Vec<Factor>,
}

impl CentralProductSpec {
    pub fn family(m: usize, family: Family) -> Self {
        let mut factors = vec![Factor::Dihedral8; m];
        if family == Family::Gm2 {
            if let Some(last) = factors.last_mut() {
                *last = Factor::Quaternion8;
            }
        }
        CentralProductSpec { factors }
    }

    /// `8^k / 2^(k-1) = 2^(2k+1)`.
    pub fn order(&self) -> usize {
        1 << (2 * self.factors.len() + 1)
    }

    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        if self.factors.is_empty() {
            return Err(Error::Unsupported("central product of no factors".into()));
        }
        if self.order() > limits.max_order {
            return Err(Error::OrderCapExceeded {
                cap: limits.max_order,
            });
        }
        let factor = |f: &Factor| match f {
            Factor::Dihedral8 => build_named(&NamedGroup::Dihedral(8), limits),
            Factor::Quaternion8 => build_named(&NamedGroup::Quaternion(8), limits),
        };
        let mut acc = factor(&self.factors[0])?;
        for f in &self.factors[1..] {
            acc = central_product(&acc, &factor(f)?, limits)?;
        }
        let name = self
            .factors
            .iter()
            .map(|f| match f {
                Factor::Dihedral8 => "D8",
                Factor::Quaternion8 => "Q8",
            })
            .collect::<Vec<_>>()
            .join("o");
        Ok(acc.with_name(name))
    }
}

/// The unique central element of order 2, if there is exactly one.
pub fn central_involution(g: &FiniteGroup) -> Result<Element> {
    let z = center(g, &g.whole());
    let mut invs = z.iter().filter(|&x| g.element_order(x) == 2);
    match (invs.next(), invs.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::NoUniqueCentralInvolution),
    }
}

/// `A ∘ B`: the quotient of `A × B` identifying the central involutions
/// of the two factors.
///
/// Elements are numbered by first appearance when scanning pairs `(a, b)`
/// in lexicographic index order.
pub fn central_product(a: &FiniteGroup, b: &FiniteGroup, limits: &Limits) -> Result<FiniteGroup> {
    let za = central_involution(a)?;
    let zb = central_involution(b)?;
    let (na, nb) = (a.order(), b.order());
    let n = na * nb / 2;
    if n > limits.max_order {
        return Err(Error::OrderCapExceeded {
            cap: limits.max_order,
        });
    }
    let pair = |x: Element, y: Element| x.index() * nb + y.index();
    let mut class = vec![u32::MAX; na * nb];
    let mut reps = Vec::with_capacity(n);
    for x in a.elements() {
        for y in b.elements() {
            if class[pair(x, y)] == u32::MAX {
                let i = reps.len() as u32;
                class[pair(x, y)] = i;
                class[pair(a.mul(x, za), b.mul(y, zb))] = i;
                reps.push((x, y));
            }
        }
    }
    let mut table = vec![0u32; n * n];
    for (i, &(x1, y1)) in reps.iter().enumerate() {
        for (j, &(x2, y2)) in reps.iter().enumerate() {
            table[i * n + j] = class[pair(a.mul(x1, x2), b.mul(y1, y2))];
        }
    }
    let name = format!("{}o{}", a.label(), b.label());
    Ok(FiniteGroup::from_raw(Some(name), n, table))
}

/// `G_{m,1}` or `G_{m,2}`, of order `2^(2m+1)`.
pub fn build_family(m: usize, family: Family, limits: &Limits) -> Result<FiniteGroup> {
    if m == 0 {
        return Err(Error::Unsupported("extraspecial family with m = 0".into()));
    }
    if 2 * m + 1 >= usize::BITS as usize || (1usize << (2 * m + 1)) > limits.max_order {
        return Err(Error::OrderCapExceeded {
            cap: limits.max_order,
        });
    }
    let g = CentralProductSpec::family(m, family).build(limits)?;
    let suffix = if family == Family::Gm1 { 1 } else { 2 };
    Ok(g.with_name(format!("G{m},{suffix}")))
}

/// Number of elements squaring to the identity in `G_{m,family}`, taken
/// from the construction and cached.
pub fn family_involution_count(m: usize, family: Family) -> usize {
    static CACHE: OnceLock<Mutex<HashMap<(usize, Family), usize>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&c) = cache.lock().unwrap().get(&(m, family)) {
        return c;
    }
    let limits = Limits::default().with_max_order(1 << (2 * m + 1));
    let count = build_family(m, family, &limits)
        .expect("family fits its own order cap")
        .involution_count();
    cache.lock().unwrap().insert((m, family), count);
    count
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtraspecialClassification {
    pub is_extraspecial: bool,
    /// `|G| = 2^(2m+1)`; zero when not extraspecial.
    pub m: usize,
    pub family: Option<Family>,
}

impl ExtraspecialClassification {
    const NO: Self = ExtraspecialClassification {
        is_extraspecial: false,
        m: 0,
        family: None,
    };
}

/// Checks `|Z(G)| = 2` and `g^2 ∈ Z(G)` for all `g` (so `G/Z(G)` is
/// elementary abelian), for a non-abelian 2-group. The family is read off
/// the number of elements of order at most 2, compared against the two
/// constructions of the same order.
pub fn is_extraspecial(g: &FiniteGroup) -> ExtraspecialClassification {
    let n = g.order();
    if n < 8 || !n.is_power_of_two() || n.trailing_zeros().is_multiple_of(2) {
        return ExtraspecialClassification::NO;
    }
    let z = center(g, &g.whole());
    if z.order() != 2 || !g.elements().all(|x| z.contains(g.square(x))) {
        return ExtraspecialClassification::NO;
    }
    let m = (n.trailing_zeros() as usize - 1) / 2;
    let count = g.involution_count();
    let family = if count == family_involution_count(m, Family::Gm1) {
        Family::Gm1
    } else {
        debug_assert_eq!(count, family_involution_count(m, Family::Gm2));
        Family::Gm2
    };
    ExtraspecialClassification {
        is_extraspecial: true,
        m,
        family: Some(family),
    }
}

/// Family of an extraspecial `g` decided by explicit isomorphism with the
/// two constructions. `None` when `g` is not extraspecial.
pub fn family_by_isomorphism(g: &FiniteGroup, limits: &Limits) -> Result<Option<Family>> {
    let c = is_extraspecial(g);
    if !c.is_extraspecial {
        return Ok(None);
    }
    for family in [Family::Gm1, Family::Gm2] {
        let model = build_family(c.m, family, &limits.with_max_order(g.order()))?;
        if crate::iso::isomorphic_small(g, &model, limits)?.is_some() {
            return Ok(Some(family));
        }
    }
    Ok(None)
}

/// The alternating form `β(x̄, ȳ) = 1` iff `[x, y] = c` on `G/Z(G)`, in the
/// basis `basis_lifts` (coset representatives).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    dimension: usize,
    rows: Vec<u64>,
    basis_lifts: Vec<Element>,
    central: Element,
    coordinates: Vec<u64>,
}

impl SymplecticForm {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn basis_lifts(&self) -> &[Element] {
        &self.basis_lifts
    }

    /// The generator `c` of the center.
    pub fn central_element(&self) -> Element {
        self.central
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn matrix(&self) -> Vec<Vec<u8>> {
        (0..self.dimension)
            .map(|i| (0..self.dimension).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }

    /// Coordinates of `x Z(G)` in the basis, one bit per basis vector.
    pub fn coordinates(&self, x: Element) -> u64 {
        self.coordinates[x.index()]
    }

    /// `β` evaluated through the matrix: `u^T B v` over GF(2).
    pub fn evaluate(&self, u: u64, v: u64) -> bool {
        (0..self.dimension)
            .filter(|&i| u >> i & 1 == 1)
            .fold(false, |acc, i| {
                acc ^ ((self.rows[i] & v).count_ones() % 2 == 1)
            })
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.dimension).all(|i| {
            !self.get(i, i) && (0..self.dimension).all(|j| self.get(i, j) == self.get(j, i))
        })
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        gf2_rank(self.rows.clone())
    }

    pub fn is_non_degenerate(&self) -> bool {
        self.rank() == self.dimension
    }
}

/// Rank of a bit matrix over GF(2), rows as bit vectors.
pub fn gf2_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row >> bit & 1 == 1 {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Builds the commutator form of an extraspecial group.
///
/// Basis lifts are chosen greedily in element index order: an element is
/// taken when it lies outside the span of `Z(G)` and the lifts so far.
pub fn symplectic_form(g: &FiniteGroup) -> Result<SymplecticForm> {
    if !is_extraspecial(g).is_extraspecial {
        return Err(Error::NotExtraspecial);
    }
    let c = central_involution(g)?;
    let mut basis: Vec<Element> = Vec::new();
    let mut span = g.closure(&[c]);
    for x in g.elements() {
        if !span.contains(x) {
            basis.push(x);
            span = g.join(&span, &[x]);
        }
    }
    let dimension = basis.len();
    if dimension > 64 {
        return Err(Error::Unsupported(format!("form of dimension {dimension}")));
    }
    let mut rows = vec![0u64; dimension];
    for (i, &x) in basis.iter().enumerate() {
        for (j, &y) in basis.iter().enumerate() {
            let k = g.commutator(x, y);
            if k == c {
                rows[i] |= 1 << j;
            } else if !k.is_identity() {
                return Err(Error::NotExtraspecial);
            }
        }
    }
    let mut coordinates = vec![0u64; g.order()];
    for mask in 0u64..(1u64 << dimension) {
        let x = (0..dimension)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(Element::IDENTITY, |acc, i| g.mul(acc, basis[i]));
        coordinates[x.index()] = mask;
        coordinates[g.mul(x, c).index()] = mask;
    }
    let form = SymplecticForm {
        dimension,
        rows,
        basis_lifts: basis,
        central: c,
        coordinates,
    };
    if !form.is_non_degenerate() {
        return Err(Error::DegenerateForm {
            rank: form.rank(),
            dimension,
        });
    }
    Ok(form)
}

/// Closed-form verdict for `H ≤ G` with `G` extraspecial: `H` is a perfect
/// code iff it is non-abelian, or abelian and not normal, or maximal
/// abelian with `G` in the `Gm1` family. The trivial subgroup is always a
/// perfect code and is accepted directly.
pub fn classify_extraspecial(g: &FiniteGroup, h: &Subgroup) -> Result<CodeVerdict> {
    let cls = is_extraspecial(g);
    if !cls.is_extraspecial {
        return Err(Error::NotExtraspecial);
    }
    let code = h.is_trivial()
        || !is_abelian_subgroup(g, h)
        || !is_normal_in(g, h, &g.whole())
        || (cls.family == Some(Family::Gm1) && is_maximal_abelian(g, h));
    Ok(CodeVerdict::from_bool(
        code,
        Criterion::ExtraspecialClassification,
    ))
}

/// The individual cases of the classification for groups whose Sylow
/// 2-subgroup is extraspecial. Several may hold at once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowCases {
    pub odd_order: bool,
    /// `H₂` is non-abelian.
    pub non_abelian: bool,
    /// `H₂` is abelian and `|N_G(H₂)₂| < |G₂|`.
    pub small_normalizer: bool,
    /// `H₂` is abelian, `|H₂|^2 = 2|G₂|`, and `G₂` is in the `Gm1` family.
    pub maximal_abelian_gm1: bool,
}

impl SylowCases {
    pub fn any(&self) -> bool {
        self.odd_order || self.non_abelian || self.small_normalizer || self.maximal_abelian_gm1
    }

    pub fn matched(&self) -> usize {
        [
            self.odd_order,
            self.non_abelian,
            self.small_normalizer,
            self.maximal_abelian_gm1,
        ]
        .iter()
        .filter(|&&b| b)
        .count()
    }
}

pub fn extraspecial_sylow_cases(g: &FiniteGroup, h: &Subgroup) -> Result<SylowCases> {
    let g2 = sylow_2_subgroup(g, &g.whole());
    let (sylow_group, _) = g.induced_group(&g2);
    let cls = is_extraspecial(&sylow_group);
    if !cls.is_extraspecial {
        return Err(Error::SylowNotExtraspecial);
    }
    let h2 = sylow_2_subgroup(g, h);
    let abelian = is_abelian_subgroup(g, &h2);
    let n2 = sylow_2_subgroup(g, &normalizer(g, &h2));
    Ok(SylowCases {
        odd_order: h.order() % 2 == 1,
        non_abelian: !abelian,
        small_normalizer: abelian && n2.order() < g2.order(),
        maximal_abelian_gm1: abelian
            && h2.order() * h2.order() == 2 * g2.order()
            && cls.family == Some(Family::Gm1),
    })
}

/// Closed-form verdict for `H ≤ G` when the Sylow 2-subgroup of `G` is
/// extraspecial.
pub fn classify_extraspecial_sylow(g: &FiniteGroup, h: &Subgroup) -> Result<CodeVerdict> {
    let cases = extraspecial_sylow_cases(g, h)?;
    Ok(CodeVerdict::from_bool(
        cases.any(),
        Criterion::ExtraspecialSylowClassification,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::{is_isomorphism, isomorphic_small};

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn family_orders_and_small_cases() {
        let l = limits();
        let d8 = build_family(1, Family::Gm1, &l).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(d8.involution_count(), 6);
        let q8 = build_family(1, Family::Gm2, &l).unwrap();
        assert_eq!(q8.involution_count(), 2);
        assert_eq!(build_family(2, Family::Gm1, &l).unwrap().order(), 32);
        assert!(matches!(
            build_family(4, Family::Gm1, &l),
            Err(Error::OrderCapExceeded { .. })
        ));
        assert!(build_family(0, Family::Gm1, &l).is_err());
    }

    #[test]
    fn central_product_requires_unique_central_involution() {
        let l = limits();
        let v4 = build_named(
            &NamedGroup::DirectProduct(vec![NamedGroup::Cyclic(2); 2]),
            &l,
        )
        .unwrap();
        let d8 = build_named(&NamedGroup::Dihedral(8), &l).unwrap();
        assert!(matches!(
            central_product(&v4, &d8, &l),
            Err(Error::NoUniqueCentralInvolution)
        ));
    }

    #[test]
    fn d8_form_is_a_hyperbolic_pair() {
        let d8 = build_family(1, Family::Gm1, &limits()).unwrap();
        let f = symplectic_form(&d8).unwrap();
        assert_eq!(f.matrix(), vec![vec![0, 1], vec![1, 0]]);
        assert!(f.is_alternating());
    }

    #[test]
    fn form_requires_extraspecial() {
        let z8 = build_named(&NamedGroup::Cyclic(8), &limits()).unwrap();
        assert!(matches!(symplectic_form(&z8), Err(Error::NotExtraspecial)));
        assert!(!is_extraspecial(&z8).is_extraspecial);
    }

    #[test]
    fn recognition() {
        let l = limits();
        let c = is_extraspecial(&build_named(&NamedGroup::Dihedral(8), &l).unwrap());
        assert_eq!(
            (c.is_extraspecial, c.m, c.family),
            (true, 1, Some(Family::Gm1))
        );
        let q8q8 = CentralProductSpec {
            factors: vec![Factor::Quaternion8, Factor::Quaternion8],
        }
        .build(&l)
        .unwrap();
        let c = is_extraspecial(&q8q8);
        assert_eq!(
            (c.is_extraspecial, c.m, c.family),
            (true, 2, Some(Family::Gm1))
        );
        assert!(
            !is_extraspecial(&build_named(&NamedGroup::Quaternion(16), &l).unwrap())
                .is_extraspecial
        );
        assert!(
            !is_extraspecial(&build_named(&NamedGroup::Dihedral(16), &l).unwrap()).is_extraspecial
        );
    }

    #[test]
    fn q8_q8_matches_d8_d8() {
        let l = limits();
        let q = CentralProductSpec {
            factors: vec![Factor::Quaternion8, Factor::Quaternion8],
        }
        .build(&l)
        .unwrap();
        let d = CentralProductSpec::family(2, Family::Gm1)
            .build(&l)
            .unwrap();
        let map = isomorphic_small(&q, &d, &l).unwrap().expect("isomorphic");
        assert!(is_isomorphism(&q, &d, &map));
        assert_eq!(family_by_isomorphism(&q, &l).unwrap(), Some(Family::Gm1));
    }

    #[test]
    fn classification_examples() {
        let l = limits();
        let q8 = build_family(1, Family::Gm2, &l).unwrap();
        let i = q8.closure(&[Element::new(1)]);
        assert!(!classify_extraspecial(&q8, &i).unwrap().is_perfect_code);
        let d8 = build_family(1, Family::Gm1, &l).unwrap();
        let klein = d8.closure(&[Element::new(2), Element::new(4)]);
        assert!(classify_extraspecial(&d8, &klein).unwrap().is_perfect_code);
        let g21 = build_family(2, Family::Gm1, &l).unwrap();
        let z = center(&g21, &g21.whole());
        assert!(!classify_extraspecial(&g21, &z).unwrap().is_perfect_code);
        let z8 = build_named(&NamedGroup::Cyclic(8), &l).unwrap();
        assert!(matches!(
            classify_extraspecial(&z8, &z8.whole()),
            Err(Error::NotExtraspecial)
        ));
        assert!(matches!(
            classify_extraspecial_sylow(&z8, &z8.whole()),
            Err(Error::SylowNotExtraspecial)
        ));
    }

    #[test]
    fn sylow_classification_in_s4() {
        let (g, perms) = FiniteGroup::from_permutations(
            None,
            4,
            &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]],
            &limits(),
        )
        .unwrap();
        let p = |q: [usize; 4]| Element::new(perms.iter().position(|x| x[..] == q).unwrap());
        let c3 = g.closure(&[p([1, 2, 0, 3])]);
        let cases = extraspecial_sylow_cases(&g, &c3).unwrap();
        assert!(cases.odd_order && cases.matched() == 1);
        let d = g.closure(&[p([1, 0, 3, 2])]);
        assert!(!classify_extraspecial_sylow(&g, &d).unwrap().is_perfect_code);
        let a4 = g.closure(&[p([1, 2, 0, 3]), p([1, 0, 3, 2])]);
        let cases = extraspecial_sylow_cases(&g, &a4).unwrap();
        assert!(cases.maximal_abelian_gm1 && !cases.small_normalizer);
    }
}
