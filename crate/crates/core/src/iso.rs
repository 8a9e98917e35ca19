//! Isomorphism search for small groups.
//!
//! Backtracks over images of a generating set of the source group. Candidate
//! images must match the generator's (element order, conjugacy class size)
//! signature, and every partial assignment is checked by extending it over
//! the subgroup the assigned generators span.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::limits::Limits;
use crate::set::{Element, ElementSet};

/// An isomorphism, as the image of each source element index.
pub type Isomorphism = Vec<Element>;

type Signature = (u64, usize);

fn signatures(g: &FiniteGroup) -> Vec<Signature> {
    g.elements()
        .map(|x| {
            let centralizer = g.elements().filter(|&y| g.commutes(x, y)).count();
            (g.element_order(x), g.order() / centralizer)
        })
        .collect()
}

/// Finds a product-preserving bijection `a -> b`, or `None` if the groups
/// are not isomorphic.
pub fn isomorphic_small(
    a: &FiniteGroup,
    b: &FiniteGroup,
    limits: &Limits,
) -> Result<Option<Isomorphism>> {
    let cap = limits.max_isomorphism_order;
    if a.order() > cap || b.order() > cap {
        return Err(Error::OrderCapExceeded { cap });
    }
    if a.order() != b.order() {
        return Ok(None);
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let (mut sa, mut sb) = (sig_a.clone(), sig_b.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }

    // Rare signatures first keeps the branching factor small near the root.
    let rarity = |s: &Signature| sig_a.iter().filter(|t| *t == s).count();
    let mut by_rarity: Vec<Element> = a.elements().collect();
    by_rarity.sort_by_key(|&x| {
        (
            std::cmp::Reverse(a.element_order(x)),
            rarity(&sig_a[x.index()]),
            x,
        )
    });
    let mut gens = Vec::new();
    let mut span = a.trivial_subgroup();
    for x in by_rarity {
        if !span.contains(x) {
            gens.push(x);
            span = a.closure(&gens);
        }
    }

    let candidates: Vec<Vec<Element>> = gens
        .iter()
        .map(|&x| {
            b.elements()
                .filter(|y| sig_b[y.index()] == sig_a[x.index()])
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(a, b, &gens, &candidates, &mut images))
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[Element],
    candidates: &[Vec<Element>],
    images: &mut Vec<Element>,
) -> Option<Isomorphism> {
    let k = images.len();
    if k == gens.len() {
        return extend(a, b, gens, images);
    }
    for &c in &candidates[k] {
        images.push(c);
        if extend(a, b, &gens[..=k], images).is_some() {
            if let Some(found) = search(a, b, gens, candidates, images) {
                return Some(found);
            }
        }
        images.pop();
    }
    None
}

/// Extends `gens[i] -> images[i]` to the subgroup the generators span,
/// returning the map (unset entries point at identity) if it is a
/// well-defined injective homomorphism there.
fn extend(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[Element],
    images: &[Element],
) -> Option<Isomorphism> {
    const UNSET: u32 = u32::MAX;
    let mut map = vec![UNSET; a.order()];
    let mut used = ElementSet::empty(b.order());
    map[0] = 0;
    used.insert(Element::IDENTITY);
    let mut queue = VecDeque::from([Element::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        let fx = Element::new(map[x.index()] as usize);
        for (&g, &img) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let fy = b.mul(fx, img);
            match map[y.index()] {
                UNSET => {
                    if !used.insert(fy) {
                        return None;
                    }
                    map[y.index()] = fy.index() as u32;
                    queue.push_back(y);
                }
                v if v as usize != fy.index() => return None,
                _ => {}
            }
        }
    }
    Some(
        map.into_iter()
            .map(|v| Element::new(if v == UNSET { 0 } else { v as usize }))
            .collect(),
    )
}

/// Exhaustive check that `map` is a bijection preserving products.
pub fn is_isomorphism(a: &FiniteGroup, b: &FiniteGroup, map: &[Element]) -> bool {
    if a.order() != b.order() || map.len() != a.order() {
        return false;
    }
    let image = ElementSet::from_elements(b.order(), map.iter().copied());
    if image.len() != b.order() {
        return false;
    }
    a.elements().all(|x| {
        a.elements()
            .all(|y| map[a.mul(x, y).index()] == b.mul(map[x.index()], map[y.index()]))
    })
}
