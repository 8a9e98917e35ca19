//! Constructors for the small groups used throughout the test corpus.
//!
//! Element numbering for each family:
//!
//! * `Cyclic(n)`: index `i` is `a^i`.
//! * `Dihedral(n)` (order `n`): index `i + j*n/2` is `r^i s^j`, with `s r = r^-1 s`.
//! * `Quaternion(n)` (order `n`): index `i + j*n/2` is `a^i b^j`, with
//!   `b^2 = a^(n/4)` and `b^-1 a b = a^-1`.
//! * `DirectProduct`: lexicographic pairs, index `i*|B| + j` is `(a_i, b_j)`.
//! * `Symmetric`, `Alternating4`, `SL23`: identity first, then the remaining
//!   permutations (or matrices over GF(3), entries row-major) in ascending
//!   lexicographic order.

use crate::error::{Error, Result};
use crate::extraspecial::{build_family, Family};
use crate::group::FiniteGroup;
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGroup {
    Cyclic(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    /// Generalized quaternion group of the given order (a power of 2, at least 8).
    Quaternion(usize),
    Symmetric(usize),
    Alternating4,
    SL23,
    DirectProduct(Vec<NamedGroup>),
    Extraspecial {
        m: usize,
        family: Family,
    },
}

pub fn build_named(kind: &NamedGroup, limits: &Limits) -> Result<FiniteGroup> {
    let g = match kind {
        NamedGroup::Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::Unsupported("cyclic group of order 0".into()));
            }
            check_cap(n, limits)?;
            from_rule(format!("Z{n}"), n, |a, b| (a + b) % n)
        }
        NamedGroup::Dihedral(n) => {
            let n = *n;
            if n < 4 || n % 2 != 0 {
                return Err(Error::Unsupported(format!("dihedral group of order {n}")));
            }
            check_cap(n, limits)?;
            let k = n / 2;
            from_rule(format!("D{n}"), n, move |x, y| {
                let (a, b) = (x % k, x / k);
                let (c, d) = (y % k, y / k);
                let rot = if b == 0 { a + c } else { a + k - c };
                rot % k + ((b + d) % 2) * k
            })
        }
        NamedGroup::Quaternion(n) => {
            let n = *n;
            if n < 8 || !n.is_power_of_two() {
                return Err(Error::Unsupported(format!("quaternion group of order {n}")));
            }
            check_cap(n, limits)?;
            let k = n / 2;
            let half = n / 4;
            from_rule(format!("Q{n}"), n, move |x, y| {
                let (a, b) = (x % k, x / k);
                let (c, d) = (y % k, y / k);
                let mut rot = if b == 0 { a + c } else { a + k - c };
                if b + d == 2 {
                    rot += half;
                }
                rot % k + ((b + d) % 2) * k
            })
        }
        NamedGroup::Symmetric(n) => {
            let n = *n;
            if n == 0 || n > 5 {
                return Err(Error::Unsupported(format!("symmetric group on {n} points")));
            }
            let mut gens = Vec::new();
            if n >= 2 {
                let mut t: Vec<usize> = (0..n).collect();
                t.swap(0, 1);
                gens.push(t);
                gens.push((0..n).map(|i| (i + 1) % n).collect());
            }
            FiniteGroup::from_permutations(Some(format!("S{n}")), n, &gens, limits)?.0
        }
        NamedGroup::Alternating4 => {
            let gens = vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]];
            FiniteGroup::from_permutations(Some("A4".into()), 4, &gens, limits)?.0
        }
        NamedGroup::SL23 => {
            let mul = |x: &[u8; 4], y: &[u8; 4]| {
                [
                    (x[0] * y[0] + x[1] * y[2]) % 3,
                    (x[0] * y[1] + x[1] * y[3]) % 3,
                    (x[2] * y[0] + x[3] * y[2]) % 3,
                    (x[2] * y[1] + x[3] * y[3]) % 3,
                ]
            };
            let gens = [[1, 1, 0, 1], [1, 0, 1, 1]];
            FiniteGroup::from_generators(
                Some("SL(2,3)".into()),
                [1, 0, 0, 1],
                &gens,
                mul,
                limits.max_order,
            )?
            .0
        }
        NamedGroup::DirectProduct(factors) => {
            let mut parts = factors.iter();
            let first = parts
                .next()
                .ok_or_else(|| Error::Unsupported("empty direct product".into()))?;
            let mut acc = build_named(first, limits)?;
            for f in parts {
                let next = build_named(f, limits)?;
                acc = direct_product(&acc, &next, limits)?;
            }
            acc
        }
        NamedGroup::Extraspecial { m, family } => build_family(*m, *family, limits)?,
    };
    Ok(g)
}

/// `A × B` with lexicographic element numbering.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, limits: &Limits) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    check_cap(na * nb, limits)?;
    let name = format!("{}x{}", a.label(), b.label());
    let ea: Vec<_> = a.elements().collect();
    let eb: Vec<_> = b.elements().collect();
    Ok(from_rule(name, na * nb, |x, y| {
        let p = a.mul(ea[x / nb], ea[y / nb]).index();
        let q = b.mul(eb[x % nb], eb[y % nb]).index();
        p * nb + q
    }))
}

fn check_cap(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.max_order {
        Err(Error::OrderCapExceeded {
            cap: limits.max_order,
        })
    } else {
        Ok(())
    }
}

/// Tabulates a product rule on `0..n` whose identity is 0.
fn from_rule(name: String, n: usize, rule: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = rule(a, b) as u32;
        }
    }
    FiniteGroup::from_raw(Some(name), n, table)
}
