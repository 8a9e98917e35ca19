//! Finite groups given by a full multiplication table.
//!
//! Elements are dense indices `0..n` with the identity pinned to index 0.
//! Inverses and element orders are tabulated once at construction, so every
//! element-level operation here is a table lookup.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::set::{Element, ElementSet};

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: Option<String>,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// A subgroup, stored as the set of its elements.
///
/// Equality and ordering ignore `generators`; two subgroups are the same
/// when they have the same elements. Ordering is by cardinality, then by
/// bitset value.
#[derive(Clone)]
pub struct Subgroup {
    elements: ElementSet,
    generators: Vec<Element>,
}

impl Subgroup {
    pub(crate) fn from_parts(elements: ElementSet, generators: Vec<Element>) -> Self {
        Subgroup {
            elements,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.elements.contains(e)
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    /// Generators this subgroup was built from; may be empty for subgroups
    /// built directly from an element set.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.elements.iter()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.is_subset(&other.elements)
    }

    /// Sorted element indices.
    pub fn to_indices(&self) -> Vec<usize> {
        self.elements.to_indices()
    }

    /// A generating set: the recorded generators, or every element when
    /// none were recorded.
    pub(crate) fn generating_set(&self) -> Vec<Element> {
        if self.generators.is_empty() && !self.is_trivial() {
            self.elements.iter().filter(|e| !e.is_identity()).collect()
        } else {
            self.generators.clone()
        }
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state)
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

impl FiniteGroup {
    /// Validates a multiplication table and builds the group.
    ///
    /// If the identity is not at index 0 the labels of the identity and
    /// element 0 are swapped so that it is.
    pub fn from_table(name: Option<String>, rows: &[Vec<usize>], limits: &Limits) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if n > limits.max_order {
            return Err(Error::OrderCapExceeded {
                cap: limits.max_order,
            });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedRow {
                    row: r,
                    len: row.len(),
                    expected: n,
                });
            }
            if let Some((c, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::EntryOutOfRange {
                    row: r,
                    col: c,
                    value: v,
                    order: n,
                });
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(Error::NoIdentity)?;
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(rows[a][b]) as u32;
            }
        }

        let at = |a: usize, b: usize| table[a * n + b] as usize;
        for a in 0..n {
            if !(0..n).any(|b| at(a, b) == 0 && at(b, a) == 0) {
                return Err(Error::MissingInverse(relabel(a)));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(Self::from_raw(name, n, table))
    }

    /// Builds a group from a table already known to satisfy the axioms
    /// with identity at index 0.
    pub(crate) fn from_raw(name: Option<String>, order: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverse[a] = row
                .iter()
                .position(|&v| v == 0)
                .expect("row without identity") as u32;
        }
        let mut g = FiniteGroup {
            name,
            order,
            table,
            inverse,
            orders: vec![0; order],
        };
        for a in 0..order {
            let mut k = 1;
            let mut x = a;
            while x != 0 {
                x = g.table[x * order + a] as usize;
                k += 1;
            }
            g.orders[a] = k;
        }
        g
    }

    /// Enumerates the group generated by `generators` under `mul`.
    ///
    /// Elements are discovered breadth-first; the final numbering puts the
    /// identity first and the rest in ascending `Ord` order of the
    /// underlying objects, so indices are reproducible. Returns the group
    /// together with the object represented by each index.
    pub fn from_generators<T, F>(
        name: Option<String>,
        identity: T,
        generators: &[T],
        mul: F,
        max_order: usize,
    ) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Ord + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut seen: HashMap<T, ()> = HashMap::new();
        let mut found = vec![identity.clone()];
        seen.insert(identity.clone(), ());
        let mut queue = VecDeque::from([identity.clone()]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = mul(&x, g);
                if !seen.contains_key(&y) {
                    if found.len() == max_order {
                        return Err(Error::OrderCapExceeded { cap: max_order });
                    }
                    seen.insert(y.clone(), ());
                    found.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut rest: Vec<T> = found.into_iter().filter(|x| *x != identity).collect();
        rest.sort();
        let mut elements = Vec::with_capacity(rest.len() + 1);
        elements.push(identity);
        elements.extend(rest);

        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (a, x) in elements.iter().enumerate() {
            for (b, y) in elements.iter().enumerate() {
                table[a * n + b] = index[&mul(x, y)] as u32;
            }
        }
        Ok((Self::from_raw(name, n, table), elements))
    }

    /// The group generated by permutations given as 0-based image arrays.
    ///
    /// Products compose left to right: `(a*b)(i) = b(a(i))`. Returns the
    /// permutation represented by each element index.
    pub fn from_permutations(
        name: Option<String>,
        degree: usize,
        generators: &[Vec<usize>],
        limits: &Limits,
    ) -> Result<(Self, Vec<Vec<usize>>)> {
        for (index, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::InconsistentDegree {
                    index,
                    found: g.len(),
                    expected: degree,
                });
            }
            let mut hit = vec![false; degree];
            for &x in g {
                if x >= degree || hit[x] {
                    return Err(Error::InvalidPermutation { index, degree });
                }
                hit[x] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        Self::from_generators(
            name,
            identity,
            generators,
            |a: &Vec<usize>, b: &Vec<usize>| compose(a, b),
            limits.max_order,
        )
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("group of order {}", self.order))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        Element::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.order).map(Element::new)
    }

    /// Checked conversion from a raw index.
    pub fn element(&self, index: usize) -> Result<Element> {
        if index < self.order {
            Ok(Element::new(index))
        } else {
            Err(Error::ElementOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element::new(self.table[a.index() * self.order + b.index()] as usize)
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        Element::new(self.inverse[a.index()] as usize)
    }

    #[inline]
    pub fn square(&self, a: Element) -> Element {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Element, k: u64) -> Element {
        let k = k % self.element_order(a);
        let mut acc = Element::IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Least `k >= 1` with `g^k = 1`.
    #[inline]
    pub fn element_order(&self, g: Element) -> u64 {
        u64::from(self.orders[g.index()])
    }

    /// `x^-1 y^-1 x y`.
    pub fn commutator(&self, x: Element, y: Element) -> Element {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    /// `x^-1 h x`.
    pub fn conjugate(&self, h: Element, x: Element) -> Element {
        self.mul(self.mul(self.inv(x), h), x)
    }

    pub fn commutes(&self, x: Element, y: Element) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|x| {
            self.elements()
                .filter(|y| *y > x)
                .all(|y| self.commutes(x, y))
        })
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent_of(self.elements())
    }

    pub(crate) fn exponent_of(&self, it: impl Iterator<Item = Element>) -> u64 {
        it.map(|g| self.element_order(g)).fold(1, lcm)
    }

    /// Elements of `within` that square to the identity; includes the identity.
    pub fn omega1(&self, within: &ElementSet) -> ElementSet {
        ElementSet::from_elements(
            self.order,
            within.iter().filter(|&g| self.square(g).is_identity()),
        )
    }

    /// Non-identity elements of the form `y^2`.
    ///
    /// The identity is left out: only non-trivial elements count as squares.
    pub fn squares(&self) -> ElementSet {
        ElementSet::from_elements(
            self.order,
            self.elements()
                .map(|y| self.square(y))
                .filter(|x| !x.is_identity()),
        )
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_parts(ElementSet::full(self.order), Vec::new())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_parts(
            ElementSet::from_elements(self.order, [Element::IDENTITY]),
            Vec::new(),
        )
    }

    /// The least subgroup containing `gens`.
    pub fn closure(&self, gens: &[Element]) -> Subgroup {
        let mut set = ElementSet::from_elements(self.order, [Element::IDENTITY]);
        let mut queue = VecDeque::from([Element::IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_parts(set, gens.to_vec())
    }

    /// The subgroup generated by `base` and `extra`.
    pub fn join(&self, base: &Subgroup, extra: &[Element]) -> Subgroup {
        let mut gens = base.generating_set();
        gens.extend(extra.iter().copied().filter(|e| !base.contains(*e)));
        self.closure(&gens)
    }

    /// `{x^-1 h x : h in H}`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, x: Element) -> Subgroup {
        let elements =
            ElementSet::from_elements(self.order, h.iter().map(|e| self.conjugate(e, x)));
        let generators = h
            .generators()
            .iter()
            .map(|&e| self.conjugate(e, x))
            .collect();
        Subgroup::from_parts(elements, generators)
    }

    /// Validates that `set` is a subgroup.
    pub fn subgroup_from_set(&self, set: ElementSet) -> Result<Subgroup> {
        if set.universe() != self.order || !set.contains(Element::IDENTITY) {
            return Err(Error::NotASubgroup);
        }
        for a in set.iter() {
            if !set.contains(self.inv(a)) {
                return Err(Error::NotASubgroup);
            }
            for b in set.iter() {
                if !set.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(Subgroup::from_parts(set, Vec::new()))
    }

    /// Validates a list of raw indices and returns the subgroup they form.
    pub fn subgroup_from_indices(&self, indices: &[usize]) -> Result<Subgroup> {
        let elements = indices
            .iter()
            .map(|&i| self.element(i))
            .collect::<Result<Vec<_>>>()?;
        self.subgroup_from_set(ElementSet::from_elements(self.order, elements))
    }

    /// `H` as a group in its own right, plus the ambient element behind
    /// each new index (ascending, so the identity stays at 0).
    pub fn induced_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<Element>) {
        let members: Vec<Element> = h.iter().collect();
        let mut position = vec![u32::MAX; self.order];
        for (i, e) in members.iter().enumerate() {
            position[e.index()] = i as u32;
        }
        let m = members.len();
        let mut table = vec![0u32; m * m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                table[i * m + j] = position[self.mul(a, b).index()];
            }
        }
        (FiniteGroup::from_raw(None, m, table), members)
    }

    /// The multiplication table as rows of indices.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// Number of elements with `g^2 = 1`, identity included.
    pub fn involution_count(&self) -> usize {
        self.elements()
            .filter(|&g| self.element_order(g) <= 2)
            .count()
    }
}

/// Left-to-right composition of image arrays: apply `a`, then `b`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&i| b[i]).collect()
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
