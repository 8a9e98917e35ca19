//! Deciding whether a subgroup is a perfect code in some Cayley graph.
//!
//! Several independent routes are provided and are expected to agree:
//!
//! * a graph-level check of a concrete connection set, plus an exhaustive
//!   search over all connection sets for very small groups;
//! * a backtracking search for an inverse-closed right transversal;
//! * the square-coset and double-coset conditions, which scan group
//!   elements for a coset with no involution;
//! * the quotient criterion comparing `Ω₁(N/H)` with `Ω₁(N)H`, and its
//!   Sylow-normalizer refinements used by [`decide`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::set::{Element, ElementSet};
use crate::subgroups::{
    coset_decomposition_within, extend_to_sylow_2, is_normal_in, normalizer, sylow_2_subgroup,
    CosetDecomposition,
};

/// An inverse-closed subset of `G \ {1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    elements: ElementSet,
}

impl ConnectionSet {
    pub fn new(g: &FiniteGroup, elements: ElementSet) -> Result<Self> {
        if elements.contains(Element::IDENTITY) {
            return Err(Error::ConnectionSetHasIdentity);
        }
        if let Some(x) = elements.iter().find(|&x| !elements.contains(g.inv(x))) {
            return Err(Error::ConnectionSetNotInverseClosed(x.index()));
        }
        Ok(ConnectionSet { elements })
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.elements.to_indices()
    }
}

/// One representative per right coset of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    representatives: Vec<Element>,
    inverse_closed: bool,
}

impl Transversal {
    /// Validates that `representatives` meets each right coset of `h`
    /// exactly once.
    pub fn new(g: &FiniteGroup, h: &Subgroup, representatives: Vec<Element>) -> Result<Self> {
        let cosets = coset_decomposition_within(g, &g.whole(), h);
        let mut hit = vec![false; cosets.len()];
        for &t in &representatives {
            let i = cosets.coset_index(t).ok_or(Error::NotATransversal)?;
            if std::mem::replace(&mut hit[i], true) {
                return Err(Error::NotATransversal);
            }
        }
        if hit.iter().any(|h| !h) {
            return Err(Error::NotATransversal);
        }
        let set = ElementSet::from_elements(g.order(), representatives.iter().copied());
        let inverse_closed = set.iter().all(|t| set.contains(g.inv(t)));
        Ok(Transversal {
            representatives,
            inverse_closed,
        })
    }

    /// Representatives in coset order.
    pub fn representatives(&self) -> &[Element] {
        &self.representatives
    }

    pub fn is_inverse_closed(&self) -> bool {
        self.inverse_closed
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Sorted representative indices.
    pub fn to_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.representatives.iter().map(|e| e.index()).collect();
        v.sort_unstable();
        v
    }
}

/// Which procedure produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    Graph,
    Transversal,
    SquareCoset,
    DoubleCoset,
    OmegaQuotient,
    ExtraspecialClassification,
    ExtraspecialSylowClassification,
    OddOrder,
}

impl Criterion {
    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::Graph => "graph",
            Criterion::Transversal => "transversal",
            Criterion::SquareCoset => "square-coset",
            Criterion::DoubleCoset => "double-coset",
            Criterion::OmegaQuotient => "omega-quotient",
            Criterion::ExtraspecialClassification => "extraspecial-classification",
            Criterion::ExtraspecialSylowClassification => "extraspecial-sylow-classification",
            Criterion::OddOrder => "odd-order",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Transversal(Transversal),
    ConnectionSet(ConnectionSet),
}

impl Witness {
    pub fn to_indices(&self) -> Vec<usize> {
        match self {
            Witness::Transversal(t) => t.to_indices(),
            Witness::ConnectionSet(s) => s.to_indices(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeVerdict {
    pub is_perfect_code: bool,
    pub criterion: Criterion,
    pub witness: Option<Witness>,
    /// For negative verdicts from the coset scans: the least `x` whose
    /// coset `Hx` has no involution although the condition requires one.
    pub counterexample: Option<Element>,
}

impl CodeVerdict {
    fn yes(criterion: Criterion) -> Self {
        CodeVerdict {
            is_perfect_code: true,
            criterion,
            witness: None,
            counterexample: None,
        }
    }

    fn no(criterion: Criterion, counterexample: Option<Element>) -> Self {
        CodeVerdict {
            is_perfect_code: false,
            criterion,
            witness: None,
            counterexample,
        }
    }

    pub(crate) fn from_bool(is_perfect_code: bool, criterion: Criterion) -> Self {
        if is_perfect_code {
            Self::yes(criterion)
        } else {
            Self::no(criterion, None)
        }
    }
}

/// Whether `c` is a perfect code of `Cay(G, S)`: every vertex `v` equals or
/// is adjacent to exactly one member of `c`. Adjacency is `v ~ c` iff
/// `v c^-1 ∈ S`.
pub fn is_perfect_code_in_cayley_graph(g: &FiniteGroup, s: &ConnectionSet, c: &ElementSet) -> bool {
    let code: Vec<Element> = c.iter().collect();
    let inverses: Vec<Element> = code.iter().map(|&x| g.inv(x)).collect();
    g.elements().all(|v| {
        let mut hits = 0;
        for &ci in &inverses {
            let d = g.mul(v, ci);
            if d.is_identity() || s.elements.contains(d) {
                hits += 1;
                if hits > 1 {
                    return false;
                }
            }
        }
        hits == 1
    })
}

/// Exhaustive search over every connection set of `G` for one admitting
/// `c` as a perfect code. Exponential in the number of inverse pairs, so
/// refused above `max_order`.
pub fn find_connection_set_exhaustive(
    g: &FiniteGroup,
    c: &ElementSet,
    max_order: usize,
) -> Result<Option<ConnectionSet>> {
    if g.order() > max_order {
        return Err(Error::OrderCapExceeded { cap: max_order });
    }
    let orbits: Vec<(Element, Element)> = g
        .elements()
        .filter(|&x| !x.is_identity() && x <= g.inv(x))
        .map(|x| (x, g.inv(x)))
        .collect();
    for mask in 0u64..(1u64 << orbits.len()) {
        let mut set = ElementSet::empty(g.order());
        for (i, &(x, xi)) in orbits.iter().enumerate() {
            if mask & (1 << i) != 0 {
                set.insert(x);
                set.insert(xi);
            }
        }
        let s = ConnectionSet { elements: set };
        if is_perfect_code_in_cayley_graph(g, &s, c) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Verdict of the exhaustive connection-set search for a subgroup.
pub fn graph_oracle(g: &FiniteGroup, h: &Subgroup, max_order: usize) -> Result<CodeVerdict> {
    Ok(
        match find_connection_set_exhaustive(g, h.elements(), max_order)? {
            Some(s) => CodeVerdict {
                witness: Some(Witness::ConnectionSet(s)),
                ..CodeVerdict::yes(Criterion::Graph)
            },
            None => CodeVerdict::no(Criterion::Graph, None),
        },
    )
}

struct TransversalSearch<'a> {
    g: &'a FiniteGroup,
    cosets: CosetDecomposition,
    candidates: Vec<Vec<Element>>,
    assigned: Vec<Option<Element>>,
}

impl TransversalSearch<'_> {
    fn coset(&self, e: Element) -> usize {
        self.cosets
            .coset_index(e)
            .expect("inverse stays in the group")
    }

    fn viable(&self, k: usize, t: Element) -> bool {
        let ti = self.g.inv(t);
        if ti == t {
            return true;
        }
        let j = self.coset(ti);
        j != k && self.assigned[j].is_none()
    }

    /// Every open coset still has a representative that can be placed.
    fn forward_ok(&self) -> bool {
        (0..self.assigned.len()).all(|k| {
            self.assigned[k].is_some() || self.candidates[k].iter().any(|&t| self.viable(k, t))
        })
    }

    fn solve(&mut self) -> bool {
        let Some(i) = self.assigned.iter().position(Option::is_none) else {
            return true;
        };
        for ci in 0..self.candidates[i].len() {
            let t = self.candidates[i][ci];
            if !self.viable(i, t) {
                continue;
            }
            let ti = self.g.inv(t);
            let j = self.coset(ti);
            self.assigned[i] = Some(t);
            self.assigned[j] = Some(ti);
            if self.forward_ok() && self.solve() {
                return true;
            }
            self.assigned[i] = None;
            self.assigned[j] = None;
        }
        false
    }
}

/// Backtracking search for an inverse-closed right transversal of `h`
/// containing the identity.
///
/// Cosets are filled in canonical order. Choosing `t` for one coset fixes
/// `t^-1` as the representative of the coset containing it, so within a
/// coset involutions are tried first, then elements whose inverse lands in
/// a still-open coset. After each placement every open coset must still
/// have a placeable element.
pub fn find_inverse_closed_transversal(g: &FiniteGroup, h: &Subgroup) -> Option<Transversal> {
    let cosets = coset_decomposition_within(g, &g.whole(), h);
    let n = cosets.len();
    let mut candidates: Vec<Vec<Element>> = (0..n)
        .map(|i| {
            let mut c: Vec<Element> = cosets.coset(g, i).collect();
            c.sort_by_key(|&t| (g.element_order(t) > 2, t));
            c
        })
        .collect();
    // A transversal through H can always use the identity for H itself.
    candidates[0] = vec![Element::IDENTITY];
    let mut search = TransversalSearch {
        g,
        cosets,
        candidates,
        assigned: vec![None; n],
    };
    if !search.solve() {
        return None;
    }
    let reps = search
        .assigned
        .into_iter()
        .map(|t| t.expect("solved"))
        .collect();
    Some(Transversal {
        representatives: reps,
        inverse_closed: true,
    })
}

pub fn transversal_verdict(g: &FiniteGroup, h: &Subgroup) -> CodeVerdict {
    match find_inverse_closed_transversal(g, h) {
        Some(t) => CodeVerdict {
            witness: Some(Witness::Transversal(t)),
            ..CodeVerdict::yes(Criterion::Transversal)
        },
        None => CodeVerdict::no(Criterion::Transversal, None),
    }
}

/// `S = T \ {1}` for an inverse-closed transversal `T` containing the
/// identity; `h` is then a perfect code of `Cay(G, S)`.
pub fn connection_set_from_transversal(g: &FiniteGroup, t: &Transversal) -> Result<ConnectionSet> {
    if !t.representatives.contains(&Element::IDENTITY) {
        return Err(Error::TransversalMissingIdentity);
    }
    if !t.inverse_closed {
        return Err(Error::TransversalNotInverseClosed);
    }
    let set = ElementSet::from_elements(
        g.order(),
        t.representatives
            .iter()
            .copied()
            .filter(|e| !e.is_identity()),
    );
    ConnectionSet::new(g, set)
}

/// `|H| / |H ∩ H^x|` is odd.
fn odd_conjugate_index(g: &FiniteGroup, h: &Subgroup, x: Element) -> bool {
    let meet = h.iter().filter(|&e| h.contains(g.conjugate(e, x))).count();
    (h.order() / meet) % 2 == 1
}

fn coset_has_involution(g: &FiniteGroup, h: &Subgroup, x: Element) -> bool {
    h.iter().any(|e| g.square(g.mul(e, x)).is_identity())
}

/// Scans `x ∈ ambient` in index order for a violation of "if `trigger(x)`
/// and the conjugate index is odd then `Hx` contains an involution".
fn coset_scan(
    g: &FiniteGroup,
    ambient: &Subgroup,
    h: &Subgroup,
    criterion: Criterion,
    trigger: impl Fn(Element) -> bool,
) -> CodeVerdict {
    let cosets = coset_decomposition_within(g, ambient, h);
    // per coset: None = not yet computed
    let mut cached: Vec<Option<bool>> = vec![None; cosets.len()];
    for x in ambient.iter() {
        if !trigger(x) {
            continue;
        }
        let i = cosets
            .coset_index(x)
            .expect("x lies in the ambient subgroup");
        let rep = cosets.representatives()[i];
        let ok = *cached[i].get_or_insert_with(|| {
            !odd_conjugate_index(g, h, rep) || coset_has_involution(g, h, rep)
        });
        if !ok {
            return CodeVerdict::no(criterion, Some(x));
        }
    }
    CodeVerdict::yes(criterion)
}

/// For each `x` with `x^2 ∈ H` and `|H|/|H ∩ H^x|` odd, `Hx` must contain
/// an element squaring to the identity.
pub fn square_coset_condition(g: &FiniteGroup, h: &Subgroup) -> CodeVerdict {
    square_coset_condition_within(g, &g.whole(), h)
}

/// [`square_coset_condition`] with `ambient` playing the role of the group.
pub fn square_coset_condition_within(
    g: &FiniteGroup,
    ambient: &Subgroup,
    h: &Subgroup,
) -> CodeVerdict {
    coset_scan(g, ambient, h, Criterion::SquareCoset, |x| {
        h.contains(g.square(x))
    })
}

/// As [`square_coset_condition`], but triggered by `HxH = Hx^-1H`. The
/// counterexample is the least failing element; its double coset is
/// `H x H`.
pub fn double_coset_condition(g: &FiniteGroup, h: &Subgroup) -> CodeVerdict {
    double_coset_condition_within(g, &g.whole(), h)
}

pub fn double_coset_condition_within(
    g: &FiniteGroup,
    ambient: &Subgroup,
    h: &Subgroup,
) -> CodeVerdict {
    let members: Vec<Element> = h.iter().collect();
    let self_inverse_double_coset = |x: Element| {
        let xi = g.inv(x);
        members
            .iter()
            .any(|&a| members.iter().any(|&b| g.mul(g.mul(a, x), b) == xi))
    };
    coset_scan(
        g,
        ambient,
        h,
        Criterion::DoubleCoset,
        self_inverse_double_coset,
    )
}

/// The two coset sets compared by the quotient criterion, as sorted coset
/// representatives of `H` in `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaCosets {
    /// Cosets `Hg` with `(Hg)^2 = H`: the involutions of `N/H` plus `H`.
    pub quotient_omega: Vec<Element>,
    /// Cosets containing an element `g` with `g^2 = 1`.
    pub lifted_omega: Vec<Element>,
}

impl OmegaCosets {
    pub fn coincide(&self) -> bool {
        self.quotient_omega == self.lifted_omega
    }

    /// Representatives of cosets in `quotient_omega` but not `lifted_omega`.
    pub fn missing(&self) -> Vec<Element> {
        self.quotient_omega
            .iter()
            .copied()
            .filter(|r| !self.lifted_omega.contains(r))
            .collect()
    }
}

/// `Ω₁(N/H)` and `Ω₁(N)H` for `H` normal in `N`.
pub fn omega_coset_sets(g: &FiniteGroup, n: &Subgroup, h: &Subgroup) -> Result<OmegaCosets> {
    if !h.is_subgroup_of(n) || !is_normal_in(g, h, n) {
        return Err(Error::NotNormal);
    }
    let cosets = coset_decomposition_within(g, n, h);
    let mut quotient_omega = Vec::new();
    let mut lifted_omega = Vec::new();
    for (i, &rep) in cosets.representatives().iter().enumerate() {
        if h.contains(g.square(rep)) {
            quotient_omega.push(rep);
        }
        if cosets.coset(g, i).any(|y| g.square(y).is_identity()) {
            lifted_omega.push(rep);
        }
    }
    Ok(OmegaCosets {
        quotient_omega,
        lifted_omega,
    })
}

/// For `H` a 2-group or normal in `G`: `H` is a perfect code iff
/// `Ω₁(N_G(H)/H) = Ω₁(N_G(H))H`.
pub fn omega_criterion(g: &FiniteGroup, h: &Subgroup) -> Result<CodeVerdict> {
    if !h.order().is_power_of_two() && !is_normal_in(g, h, &g.whole()) {
        return Err(Error::OmegaPrecondition);
    }
    let n = normalizer(g, h);
    let sets = omega_coset_sets(g, &n, h)?;
    Ok(if sets.coincide() {
        CodeVerdict::yes(Criterion::OmegaQuotient)
    } else {
        CodeVerdict::no(Criterion::OmegaQuotient, sets.missing().first().copied())
    })
}

/// The subgroups the Sylow-normalizer statements are evaluated on.
#[derive(Clone, Debug)]
pub struct SylowNormalizerChain {
    /// Sylow 2-subgroup of `H`.
    pub h2: Subgroup,
    /// `N_G(H₂)`.
    pub normalizer: Subgroup,
    /// Sylow 2-subgroup of `N_G(H₂)`; contains `H₂`.
    pub normalizer_2: Subgroup,
    /// A Sylow 2-subgroup of `G` containing `normalizer_2`.
    pub sylow: Subgroup,
}

impl SylowNormalizerChain {
    pub fn new(g: &FiniteGroup, h: &Subgroup) -> Self {
        let h2 = sylow_2_subgroup(g, h);
        let normalizer = normalizer(g, &h2);
        let normalizer_2 = sylow_2_subgroup(g, &normalizer);
        let sylow = extend_to_sylow_2(g, &g.whole(), &normalizer_2);
        SylowNormalizerChain {
            h2,
            normalizer,
            normalizer_2,
            sylow,
        }
    }
}

/// The four equivalent statements, each evaluated independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceRecord {
    /// `H₂` is a perfect code of `P`, by the square-coset scan inside `P`.
    pub h2_code_in_p: bool,
    /// `Ω₁(N₂/H₂) = Ω₁(N₂)H₂` with `N₂` a Sylow 2-subgroup of `N_G(H₂)`.
    pub omega_sylow_quotient: bool,
    /// `Ω₁(N/H₂) = Ω₁(N)H₂` with `N = N_G(H₂)`.
    pub omega_full_quotient: bool,
    /// `H` is a perfect code of `G`, by the square-coset scan.
    pub h_code_in_g: bool,
}

impl EquivalenceRecord {
    pub fn all_agree(&self) -> bool {
        let v = self.h2_code_in_p;
        self.omega_sylow_quotient == v && self.omega_full_quotient == v && self.h_code_in_g == v
    }
}

/// Evaluates the four Sylow-normalizer statements for `H ≤ G`. Agreement
/// is left to the caller to check.
pub fn normalizer_equivalence(g: &FiniteGroup, h: &Subgroup) -> EquivalenceRecord {
    let chain = SylowNormalizerChain::new(g, h);
    let sylow_sets = omega_coset_sets(g, &chain.normalizer_2, &chain.h2)
        .expect("H₂ is normal in its normalizer's Sylow subgroups");
    let full_sets =
        omega_coset_sets(g, &chain.normalizer, &chain.h2).expect("H₂ is normal in its normalizer");
    EquivalenceRecord {
        h2_code_in_p: square_coset_condition_within(g, &chain.sylow, &chain.h2).is_perfect_code,
        omega_sylow_quotient: sylow_sets.coincide(),
        omega_full_quotient: full_sets.coincide(),
        h_code_in_g: square_coset_condition(g, h).is_perfect_code,
    }
}

/// Default decision procedure.
///
/// Odd-order subgroups are accepted outright. Otherwise the quotient
/// criterion is evaluated inside a Sylow 2-subgroup of `N_G(H₂)`, the
/// smallest ambient set among the equivalent statements. Negative verdicts
/// carry the least failing element of the square-coset scan.
pub fn decide(g: &FiniteGroup, h: &Subgroup) -> CodeVerdict {
    if h.order() % 2 == 1 {
        return CodeVerdict::yes(Criterion::OddOrder);
    }
    let h2 = sylow_2_subgroup(g, h);
    let n = normalizer(g, &h2);
    let n2 = sylow_2_subgroup(g, &n);
    let sets = omega_coset_sets(g, &n2, &h2).expect("H₂ is normal in N₂");
    if sets.coincide() {
        CodeVerdict::yes(Criterion::OmegaQuotient)
    } else {
        CodeVerdict::no(
            Criterion::OmegaQuotient,
            square_coset_condition(g, h).counterexample,
        )
    }
}

/// [`decide`], with an inverse-closed transversal attached to positive
/// verdicts.
pub fn decide_with_witness(g: &FiniteGroup, h: &Subgroup) -> CodeVerdict {
    let mut v = decide(g, h);
    if v.is_perfect_code {
        v.witness = find_inverse_closed_transversal(g, h).map(Witness::Transversal);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::named::{build_named, NamedGroup};
    use crate::subgroups::center;

    fn named(kind: NamedGroup) -> FiniteGroup {
        build_named(&kind, &Limits::default()).unwrap()
    }

    fn d8() -> FiniteGroup {
        named(NamedGroup::Dihedral(8))
    }

    fn s4() -> (FiniteGroup, Vec<Vec<usize>>) {
        FiniteGroup::from_permutations(
            None,
            4,
            &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]],
            &Limits::default(),
        )
        .unwrap()
    }

    fn perm(perms: &[Vec<usize>], p: [usize; 4]) -> Element {
        Element::new(perms.iter().position(|q| q[..] == p).unwrap())
    }

    fn set(g: &FiniteGroup, xs: &[usize]) -> ElementSet {
        ElementSet::from_elements(g.order(), xs.iter().map(|&i| Element::new(i)))
    }

    #[test]
    fn connection_set_validation() {
        let g = d8();
        assert!(matches!(
            ConnectionSet::new(&g, set(&g, &[0, 4])),
            Err(Error::ConnectionSetHasIdentity)
        ));
        assert!(matches!(
            ConnectionSet::new(&g, set(&g, &[1])),
            Err(Error::ConnectionSetNotInverseClosed(1))
        ));
        assert!(ConnectionSet::new(&g, set(&g, &[1, 3, 4])).is_ok());
    }

    #[test]
    fn trivial_graph_codes() {
        let g = d8();
        let complete = ConnectionSet::new(&g, set(&g, &[1, 2, 3, 4, 5, 6, 7])).unwrap();
        assert!(is_perfect_code_in_cayley_graph(
            &g,
            &complete,
            &set(&g, &[0])
        ));
        let empty = ConnectionSet::new(&g, ElementSet::empty(8)).unwrap();
        assert!(is_perfect_code_in_cayley_graph(
            &g,
            &empty,
            &ElementSet::full(8)
        ));
        assert!(!is_perfect_code_in_cayley_graph(&g, &empty, &set(&g, &[0])));
    }

    #[test]
    fn center_of_d8_is_never_a_code() {
        let g = d8();
        let z = center(&g, &g.whole());
        assert_eq!(
            find_connection_set_exhaustive(&g, z.elements(), 8).unwrap(),
            None
        );
        assert!(find_inverse_closed_transversal(&g, &z).is_none());
        let sq = square_coset_condition(&g, &z);
        assert!(!sq.is_perfect_code);
        assert_eq!(g.element_order(sq.counterexample.unwrap()), 4);
        assert!(!double_coset_condition(&g, &z).is_perfect_code);
        let v = decide(&g, &z);
        assert!(!v.is_perfect_code);
        assert_eq!(g.element_order(v.counterexample.unwrap()), 4);
    }

    #[test]
    fn exhaustive_search_cap() {
        let g = named(NamedGroup::Cyclic(9));
        assert!(matches!(
            find_connection_set_exhaustive(&g, &ElementSet::full(9), 8),
            Err(Error::OrderCapExceeded { cap: 8 })
        ));
    }

    #[test]
    fn transversal_extremes() {
        let g = d8();
        let t = find_inverse_closed_transversal(&g, &g.whole()).unwrap();
        assert_eq!(t.to_indices(), vec![0]);
        let t = find_inverse_closed_transversal(&g, &g.trivial_subgroup()).unwrap();
        assert_eq!(t.to_indices(), (0..8).collect::<Vec<_>>());
        let s = connection_set_from_transversal(
            &g,
            &Transversal::new(&g, &g.whole(), vec![Element::IDENTITY]).unwrap(),
        )
        .unwrap();
        assert!(s.elements().is_empty());
    }

    #[test]
    fn s4_transversal_pipeline() {
        let (g, perms) = s4();
        let a4 = g.closure(&[perm(&perms, [1, 2, 0, 3]), perm(&perms, [1, 0, 3, 2])]);
        let t12 = perm(&perms, [1, 0, 2, 3]);
        let t = Transversal::new(&g, &a4, vec![Element::IDENTITY, t12]).unwrap();
        assert!(t.is_inverse_closed());
        let s = connection_set_from_transversal(&g, &t).unwrap();
        assert_eq!(s.to_indices(), vec![t12.index()]);
        assert!(is_perfect_code_in_cayley_graph(&g, &s, a4.elements()));

        let h = g.closure(&[t12]);
        let t = find_inverse_closed_transversal(&g, &h).unwrap();
        assert_eq!(t.len(), 12);
        let s = connection_set_from_transversal(&g, &t).unwrap();
        assert!(is_perfect_code_in_cayley_graph(&g, &s, h.elements()));
        assert!(square_coset_condition(&g, &h).is_perfect_code);
    }

    #[test]
    fn transversal_validation() {
        let (g, perms) = s4();
        let a4 = g.closure(&[perm(&perms, [1, 2, 0, 3]), perm(&perms, [1, 0, 3, 2])]);
        let c3 = perm(&perms, [1, 2, 0, 3]);
        assert!(matches!(
            Transversal::new(&g, &a4, vec![Element::IDENTITY, c3]),
            Err(Error::NotATransversal)
        ));
        assert!(matches!(
            Transversal::new(&g, &a4, vec![Element::IDENTITY]),
            Err(Error::NotATransversal)
        ));
        let t12 = perm(&perms, [1, 0, 2, 3]);
        let t = Transversal::new(&g, &a4, vec![c3, t12]).unwrap();
        assert!(matches!(
            connection_set_from_transversal(&g, &t),
            Err(Error::TransversalMissingIdentity)
        ));
        let t4 = perm(&perms, [1, 2, 3, 0]);
        let t = Transversal::new(&g, &a4, vec![Element::IDENTITY, t4]).unwrap();
        assert!(!t.is_inverse_closed());
        assert!(matches!(
            connection_set_from_transversal(&g, &t),
            Err(Error::TransversalNotInverseClosed)
        ));
    }

    #[test]
    fn double_coset_on_klein_subgroup() {
        let (g, perms) = s4();
        let v4 = g.closure(&[perm(&perms, [1, 0, 3, 2]), perm(&perms, [2, 3, 0, 1])]);
        assert!(double_coset_condition(&g, &v4).is_perfect_code);
        assert!(square_coset_condition(&g, &g.whole()).is_perfect_code);
        assert!(double_coset_condition(&g, &g.whole()).is_perfect_code);
    }

    #[test]
    fn omega_sets_for_d8_center() {
        let g = d8();
        let z = center(&g, &g.whole());
        let sets = omega_coset_sets(&g, &g.whole(), &z).unwrap();
        assert_eq!(sets.quotient_omega.len(), 4);
        assert_eq!(sets.lifted_omega.len(), 3);
        assert_eq!(sets.missing(), vec![Element::new(1)]);
        let v = omega_criterion(&g, &z).unwrap();
        assert!(!v.is_perfect_code);
    }

    #[test]
    fn omega_sets_trivial_subgroup_and_errors() {
        let g = d8();
        let t = g.trivial_subgroup();
        let sets = omega_coset_sets(&g, &g.whole(), &t).unwrap();
        assert_eq!(
            sets.quotient_omega,
            g.omega1(&ElementSet::full(8)).iter().collect::<Vec<_>>()
        );
        assert!(sets.coincide());
        assert!(omega_criterion(&g, &t).unwrap().is_perfect_code);
        let refl = g.closure(&[Element::new(4)]);
        assert!(matches!(
            omega_coset_sets(&g, &g.whole(), &refl),
            Err(Error::NotNormal)
        ));
    }

    #[test]
    fn omega_sets_in_s4_pieces() {
        let (g, perms) = s4();
        let a = perm(&perms, [1, 0, 2, 3]);
        let b = perm(&perms, [0, 1, 3, 2]);
        let n = g.closure(&[a, b]);
        let h = g.closure(&[a]);
        let sets = omega_coset_sets(&g, &n, &h).unwrap();
        assert_eq!(sets.quotient_omega.len(), 2);
        assert!(sets.coincide());
        let v4 = g.closure(&[perm(&perms, [1, 0, 3, 2]), perm(&perms, [2, 3, 0, 1])]);
        assert!(omega_criterion(&g, &v4).unwrap().is_perfect_code);
        let s3 = g.closure(&[a, perm(&perms, [1, 2, 0, 3])]);
        assert!(matches!(
            omega_criterion(&g, &s3),
            Err(Error::OmegaPrecondition)
        ));
    }

    #[test]
    fn equivalence_examples() {
        let (g, perms) = s4();
        let c3 = g.closure(&[perm(&perms, [1, 2, 0, 3])]);
        let rec = normalizer_equivalence(&g, &c3);
        assert!(rec.all_agree() && rec.h_code_in_g);
        let d = g.closure(&[perm(&perms, [1, 0, 3, 2])]);
        let rec = normalizer_equivalence(&g, &d);
        assert!(rec.all_agree() && !rec.h_code_in_g);
        let a4 = g.closure(&[perm(&perms, [1, 2, 0, 3]), perm(&perms, [1, 0, 3, 2])]);
        let rec = normalizer_equivalence(&g, &a4);
        assert!(rec.all_agree() && rec.h_code_in_g);
    }

    #[test]
    fn decide_examples() {
        let (g, perms) = s4();
        let h = g.closure(&[perm(&perms, [1, 0, 2, 3])]);
        let v = decide_with_witness(&g, &h);
        assert!(v.is_perfect_code);
        assert!(matches!(v.witness, Some(Witness::Transversal(ref t)) if t.len() == 12));
        let v = decide(&g, &g.trivial_subgroup());
        assert!(v.is_perfect_code);
        assert_eq!(v.criterion, Criterion::OddOrder);
    }
}
