//! Subgroup enumeration and the structural operators built on it: Sylow
//! 2-subgroups, normalizers, centers, derived and Frattini subgroups, coset
//! decompositions and abelian invariants.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::limits::Limits;
use crate::set::{Element, ElementSet};

/// Every subgroup of `g`, smallest first, ties broken by bitset value.
pub fn all_subgroups(g: &FiniteGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    if g.order() > limits.max_enumeration_order {
        return Err(Error::OrderCapExceeded {
            cap: limits.max_enumeration_order,
        });
    }
    Ok(subgroups_within(g, &g.whole()))
}

/// Every subgroup of `h`, in canonical order.
///
/// Starts from the cyclic subgroups and joins each newly found subgroup with
/// every cyclic subgroup until nothing new appears. Every subgroup is a join
/// of cyclic subgroups, so the fixpoint is the whole lattice.
pub fn subgroups_within(g: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    let mut cyclic_gens: Vec<Element> = Vec::new();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut found: Vec<Subgroup> = Vec::new();
    for x in h.iter() {
        let c = g.closure(&[x]);
        if seen.insert(c.elements().clone()) {
            cyclic_gens.push(x);
            found.push(c);
        }
    }
    let mut frontier: Vec<usize> = (0..found.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for k in frontier {
            for &x in &cyclic_gens {
                if found[k].contains(x) {
                    continue;
                }
                let j = g.join(&found[k], &[x]);
                if seen.insert(j.elements().clone()) {
                    next.push(found.len());
                    found.push(j);
                }
            }
        }
        frontier = next;
    }
    found.sort();
    found
}

/// Subgroups of `h` not contained in any other proper subgroup of `h`.
pub fn maximal_subgroups(g: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    let proper: Vec<Subgroup> = subgroups_within(g, h)
        .into_iter()
        .filter(|k| k.order() < h.order())
        .collect();
    proper
        .iter()
        .filter(|k| {
            !proper
                .iter()
                .any(|l| l.order() > k.order() && k.is_subgroup_of(l))
        })
        .cloned()
        .collect()
}

/// Largest power of two dividing `n`.
pub fn two_part(n: usize) -> usize {
    1 << n.trailing_zeros()
}

/// Whether `x` conjugates `k` onto itself.
pub fn normalizes(g: &FiniteGroup, x: Element, k: &Subgroup) -> bool {
    k.generating_set()
        .into_iter()
        .all(|e| k.contains(g.conjugate(e, x)))
}

/// Whether `k` is normal in `within`.
pub fn is_normal_in(g: &FiniteGroup, k: &Subgroup, within: &Subgroup) -> bool {
    within
        .generating_set()
        .into_iter()
        .all(|x| normalizes(g, x, k))
}

pub fn normalizer(g: &FiniteGroup, k: &Subgroup) -> Subgroup {
    normalizer_within(g, &g.whole(), k)
}

/// `N_within(k)`.
pub fn normalizer_within(g: &FiniteGroup, within: &Subgroup, k: &Subgroup) -> Subgroup {
    let set = ElementSet::from_elements(g.order(), within.iter().filter(|&x| normalizes(g, x, k)));
    Subgroup::from_parts(set, Vec::new())
}

/// Elements of `within` commuting with every element of `set`.
pub fn centralizer_within(g: &FiniteGroup, within: &Subgroup, set: &ElementSet) -> Subgroup {
    let members: Vec<Element> = set.iter().collect();
    let c = ElementSet::from_elements(
        g.order(),
        within
            .iter()
            .filter(|&x| members.iter().all(|&y| g.commutes(x, y))),
    );
    Subgroup::from_parts(c, Vec::new())
}

pub fn center(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    centralizer_within(g, h, h.elements())
}

pub fn is_abelian_subgroup(g: &FiniteGroup, h: &Subgroup) -> bool {
    let gens = h.generating_set();
    gens.iter()
        .enumerate()
        .all(|(i, &x)| gens[i + 1..].iter().all(|&y| g.commutes(x, y)))
}

/// The subgroup generated by all commutators of elements of `h`.
pub fn derived_subgroup(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut comms = ElementSet::empty(g.order());
    for x in h.iter() {
        for y in h.iter() {
            comms.insert(g.commutator(x, y));
        }
    }
    let gens: Vec<Element> = comms.iter().filter(|e| !e.is_identity()).collect();
    g.closure(&gens)
}

/// Intersection of the maximal subgroups of `h` (`h` itself when trivial).
pub fn frattini_subgroup(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let set = maximal_subgroups(g, h)
        .iter()
        .fold(h.elements().clone(), |acc, m| {
            acc.intersection(m.elements())
        });
    Subgroup::from_parts(set, Vec::new())
}

/// Extends the 2-subgroup `start` of `within` to a Sylow 2-subgroup of
/// `within`.
///
/// Each step picks the least-index `y` in `within` that normalizes the
/// current `P`, lies outside it, and squares into it; `<P, y>` then has
/// order `2|P|`. Such a `y` exists until `P` is Sylow, because the
/// normalizer quotient `N(P)/P` has even order.
pub fn extend_to_sylow_2(g: &FiniteGroup, within: &Subgroup, start: &Subgroup) -> Subgroup {
    let target = two_part(within.order());
    let mut p = start.clone();
    while p.order() < target {
        let y = within
            .iter()
            .find(|&y| !p.contains(y) && p.contains(g.square(y)) && normalizes(g, y, &p))
            .expect("a proper 2-subgroup always has a 2-step extension");
        p = g.join(&p, &[y]);
    }
    p
}

/// The Sylow 2-subgroup of `h` with the least bitset value.
///
/// One Sylow subgroup is built by extension; all others are its conjugates
/// under `h`, and the least of those is returned.
pub fn sylow_2_subgroup(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let p = extend_to_sylow_2(g, h, &g.trivial_subgroup());
    h.iter()
        .map(|x| g.conjugate_subgroup(&p, x))
        .min()
        .expect("a subgroup is never empty")
}

/// All Sylow 2-subgroups of `h`, in canonical order.
pub fn sylow_2_subgroups(g: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    let p = extend_to_sylow_2(g, h, &g.trivial_subgroup());
    let mut all: Vec<Subgroup> = h.iter().map(|x| g.conjugate_subgroup(&p, x)).collect();
    all.sort();
    all.dedup();
    all
}

/// Right cosets `H x` of a subgroup inside an ambient subgroup.
#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    subgroup: Subgroup,
    representatives: Vec<Element>,
    coset_of: Vec<u32>,
}

impl CosetDecomposition {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// One representative per coset, each the least index in its coset.
    /// The first representative is the identity.
    pub fn representatives(&self) -> &[Element] {
        &self.representatives
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Index of the coset containing `e`, or `None` outside the ambient set.
    pub fn coset_index(&self, e: Element) -> Option<usize> {
        match self.coset_of[e.index()] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    /// The elements `h * rep` of coset `i`.
    pub fn coset<'a>(&'a self, g: &'a FiniteGroup, i: usize) -> impl Iterator<Item = Element> + 'a {
        let rep = self.representatives[i];
        self.subgroup.iter().map(move |h| g.mul(h, rep))
    }
}

pub fn coset_decomposition(g: &FiniteGroup, h: &Subgroup) -> CosetDecomposition {
    coset_decomposition_within(g, &g.whole(), h)
}

/// Right cosets of `h` in `ambient`; `h` must be a subgroup of `ambient`.
pub fn coset_decomposition_within(
    g: &FiniteGroup,
    ambient: &Subgroup,
    h: &Subgroup,
) -> CosetDecomposition {
    let mut coset_of = vec![u32::MAX; g.order()];
    let mut representatives = Vec::with_capacity(ambient.order() / h.order());
    for x in ambient.iter() {
        if coset_of[x.index()] != u32::MAX {
            continue;
        }
        let i = representatives.len() as u32;
        representatives.push(x);
        for e in h.iter() {
            coset_of[g.mul(e, x).index()] = i;
        }
    }
    CosetDecomposition {
        subgroup: h.clone(),
        representatives,
        coset_of,
    }
}

/// Primary decomposition of an abelian group: one prime-power order per
/// cyclic factor, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub cyclic_factors: Vec<u64>,
}

impl AbelianInvariants {
    pub fn order(&self) -> u64 {
        self.cyclic_factors.iter().product()
    }
}

/// Computed from element-order counts: for each prime `p` and `k >= 1`,
/// `#{x : x^(p^k) = 1} = p^(sum_i min(k, e_i))`, so the number of factors of
/// exponent at least `k` is `log_p` of the ratio of consecutive counts.
pub fn abelian_invariants(g: &FiniteGroup, h: &Subgroup) -> Result<AbelianInvariants> {
    if !is_abelian_subgroup(g, h) {
        return Err(Error::NotAbelian);
    }
    let orders: Vec<u64> = h.iter().map(|x| g.element_order(x)).collect();
    let mut factors = Vec::new();
    for p in prime_factors(h.order() as u64) {
        // counts[k] = number of elements whose order divides p^k
        let mut counts = vec![1u64];
        let mut pk = 1u64;
        loop {
            pk *= p;
            let c = orders.iter().filter(|&&o| pk.is_multiple_of(o)).count() as u64;
            if c == *counts.last().unwrap() {
                break;
            }
            counts.push(c);
        }
        let at_least: Vec<u32> = counts.windows(2).map(|w| ilog(w[1] / w[0], p)).collect();
        for (k, &n) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(n - next) {
                factors.push(p.pow(k as u32 + 1));
            }
        }
    }
    factors.sort_unstable_by(|a, b| b.cmp(a));
    Ok(AbelianInvariants {
        cyclic_factors: factors,
    })
}

/// True iff `h` is abelian and no strictly larger abelian subgroup contains
/// it, i.e. `h` equals its own centralizer.
pub fn is_maximal_abelian(g: &FiniteGroup, h: &Subgroup) -> bool {
    is_abelian_subgroup(g, h)
        && centralizer_within(g, &g.whole(), h.elements()).order() == h.order()
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut ps = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            ps.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        ps.push(n);
    }
    ps
}

fn ilog(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        n /= p;
        k += 1;
    }
    k
}
