//! Release gate. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads=1` to see
//! them in order.

use std::time::{Duration, Instant};

use perfect_codes::extraspecial::{extraspecial_sylow_cases, CentralProductSpec, Factor};
use perfect_codes::harness::TAG_NO_ORDER_4;
use perfect_codes::iso::is_isomorphism;
use perfect_codes::perfect_code::{
    connection_set_from_transversal, double_coset_condition, graph_oracle,
    is_perfect_code_in_cayley_graph, square_coset_condition,
};
use perfect_codes::subgroups::{
    abelian_invariants, all_subgroups, center, derived_subgroup, frattini_subgroup,
    is_maximal_abelian, is_normal_in,
};
use perfect_codes::{
    build_family, build_named, builtin_corpus, classify_extraspecial, classify_extraspecial_sylow,
    decide, find_inverse_closed_transversal, is_extraspecial, isomorphic_small,
    normalizer_equivalence, symplectic_form, Family, FiniteGroup, Limits, NamedGroup, Subgroup,
};

type Outcome = Result<(), String>;

fn criterion(n: u32, title: &str, budget: Duration, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let mut outcome = body();
    let elapsed = start.elapsed();
    if outcome.is_ok() && elapsed > budget {
        outcome = Err(format!("took {elapsed:?}, budget {budget:?}"));
    }
    match &outcome {
        Ok(()) => println!("PASS [{n}] {title} ({:.2}s)", elapsed.as_secs_f64()),
        Err(why) => println!("FAIL [{n}] {title} ({:.2}s): {why}", elapsed.as_secs_f64()),
    }
    if let Err(why) = outcome {
        panic!("criterion {n} failed: {why}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn named(kind: NamedGroup) -> FiniteGroup {
    build_named(&kind, &Limits::default()).unwrap()
}

fn subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    all_subgroups(g, &Limits::default()).unwrap()
}

fn extraspecial_small() -> Vec<FiniteGroup> {
    let limits = Limits::default();
    let mut out = Vec::new();
    for m in 1..=2 {
        for f in [Family::Gm1, Family::Gm2] {
            out.push(build_family(m, f, &limits).unwrap());
        }
    }
    out
}

#[test]
fn transversal_and_coset_conditions_agree() {
    criterion(
        1,
        "transversal <=> square-coset <=> double-coset",
        Duration::from_secs(10),
        || {
            let mut rows = 0;
            for entry in builtin_corpus(false)
                .iter()
                .filter(|e| e.group.order() <= 32)
            {
                let g = &entry.group;
                for h in subgroups(g) {
                    rows += 1;
                    let t = find_inverse_closed_transversal(g, &h);
                    let sq = square_coset_condition(g, &h).is_perfect_code;
                    let dc = double_coset_condition(g, &h).is_perfect_code;
                    ensure(t.is_some() == sq && sq == dc, || {
                        format!(
                            "{} {:?}: transversal {} square {sq} double {dc}",
                            g.label(),
                            h.to_indices(),
                            t.is_some()
                        )
                    })?;
                    if let Some(t) = t {
                        let s =
                            connection_set_from_transversal(g, &t).map_err(|e| e.to_string())?;
                        ensure(is_perfect_code_in_cayley_graph(g, &s, h.elements()), || {
                            format!(
                                "{} {:?}: witness fails the graph check",
                                g.label(),
                                h.to_indices()
                            )
                        })?;
                    }
                }
            }
            ensure(rows > 300, || format!("only {rows} rows swept"))
        },
    );
}

#[test]
fn sylow_normalizer_statements_agree() {
    use NamedGroup::*;
    criterion(
        2,
        "four Sylow-normalizer statements agree",
        Duration::from_secs(30),
        || {
            let limits = Limits::default();
            let mut groups: Vec<FiniteGroup> = [
                Dihedral(8),
                Quaternion(8),
                Quaternion(16),
                Symmetric(4),
                Alternating4,
                SL23,
                DirectProduct(vec![Dihedral(8), Cyclic(3)]),
            ]
            .into_iter()
            .map(named)
            .collect();
            groups.push(build_family(2, Family::Gm1, &limits).unwrap());
            groups.push(build_family(2, Family::Gm2, &limits).unwrap());
            for g in &groups {
                for h in subgroups(g) {
                    let r = normalizer_equivalence(g, &h);
                    ensure(r.all_agree(), || {
                        format!("{} {:?}: {r:?}", g.label(), h.to_indices())
                    })?;
                    ensure(r.h_code_in_g == decide(g, &h).is_perfect_code, || {
                        format!("{} {:?}: decide disagrees", g.label(), h.to_indices())
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn extraspecial_classification_matches_decide() {
    criterion(
        3,
        "extraspecial classification matches decide",
        Duration::from_secs(30),
        || {
            for g in extraspecial_small() {
                let family = is_extraspecial(&g).family.ok_or("family not detected")?;
                let whole = g.whole();
                let z = center(&g, &whole);
                ensure(!decide(&g, &z).is_perfect_code, || {
                    format!("{}: center is a code", g.label())
                })?;
                for h in subgroups(&g) {
                    let closed = classify_extraspecial(&g, &h)
                        .map_err(|e| e.to_string())?
                        .is_perfect_code;
                    let general = decide(&g, &h).is_perfect_code;
                    let label = || format!("{} {:?}", g.label(), h.to_indices());
                    ensure(closed == general, || {
                        format!("{}: closed {closed} decide {general}", label())
                    })?;
                    if !g.induced_group(&h).0.is_abelian() {
                        ensure(general, || {
                            format!("{}: non-abelian subgroup is not a code", label())
                        })?;
                    }
                    if is_maximal_abelian(&g, &h) {
                        ensure(general == (family == Family::Gm1), || {
                            format!("{}: maximal abelian verdict {general}", label())
                        })?;
                    }
                }
            }
            Ok(())
        },
    );
}

fn perm_index(perms: &[Vec<usize>], p: &[usize]) -> usize {
    perms.iter().position(|q| q == p).unwrap()
}

#[test]
fn extraspecial_sylow_classification_matches_decide() {
    criterion(
        4,
        "extraspecial Sylow classification matches decide",
        Duration::from_secs(10),
        || {
            let limits = Limits::default();
            let (s4, perms) = FiniteGroup::from_permutations(
                Some("S4".into()),
                4,
                &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]],
                &limits,
            )
            .map_err(|e| e.to_string())?;
            for g in [&s4, &named(NamedGroup::SL23)] {
                for h in subgroups(g) {
                    let closed = classify_extraspecial_sylow(g, &h)
                        .map_err(|e| e.to_string())?
                        .is_perfect_code;
                    let general = decide(g, &h).is_perfect_code;
                    ensure(closed == general, || {
                        format!(
                            "{} {:?}: closed {closed} decide {general}",
                            g.label(),
                            h.to_indices()
                        )
                    })?;
                    if h.order() % 2 == 1 {
                        ensure(general, || {
                            format!(
                                "{} {:?}: odd order but not a code",
                                g.label(),
                                h.to_indices()
                            )
                        })?;
                        ensure(extraspecial_sylow_cases(g, &h).unwrap().odd_order, || {
                            "odd case unmatched".into()
                        })?;
                    }
                }
            }
            let gen = |cycles: &[&[usize]]| {
                let elements: Vec<_> = cycles
                    .iter()
                    .map(|p| s4.element(perm_index(&perms, p)).unwrap())
                    .collect();
                s4.closure(&elements)
            };
            let a4 = gen(&[&[1, 2, 0, 3], &[0, 2, 3, 1]]);
            ensure(a4.order() == 12, || "A4 generators wrong".into())?;
            let spot = [
                ("A4", a4, true),
                ("<(1 2)(3 4)>", gen(&[&[1, 0, 3, 2]]), false),
                ("<(1 2)>", gen(&[&[1, 0, 2, 3]]), true),
            ];
            for (name, h, expected) in spot {
                let v = classify_extraspecial_sylow(&s4, &h)
                    .map_err(|e| e.to_string())?
                    .is_perfect_code;
                ensure(v == expected, || format!("(S4, {name}) gave {v}"))?;
            }
            Ok(())
        },
    );
}

#[test]
fn quaternion_and_dihedral_central_squares_coincide() {
    criterion(
        5,
        "Q8oQ8 is isomorphic to D8oD8",
        Duration::from_secs(5),
        || {
            let limits = Limits::default();
            let qq = CentralProductSpec {
                factors: vec![Factor::Quaternion8; 2],
            }
            .build(&limits)
            .map_err(|e| e.to_string())?;
            let dd = CentralProductSpec {
                factors: vec![Factor::Dihedral8; 2],
            }
            .build(&limits)
            .map_err(|e| e.to_string())?;
            let map = isomorphic_small(&qq, &dd, &limits)
                .map_err(|e| e.to_string())?
                .ok_or("no isomorphism found")?;
            ensure(is_isomorphism(&qq, &dd, &map), || {
                "map fails the 32x32 product check".into()
            })
        },
    );
}

#[test]
fn extraspecial_structure() {
    criterion(6, "extraspecial structure", Duration::from_secs(10), || {
        for g in extraspecial_small() {
            let label = g.label();
            let m = is_extraspecial(&g).m;
            let family = is_extraspecial(&g).family.ok_or("family not detected")?;
            let whole = g.whole();
            let z = center(&g, &whole);
            ensure(z.order() == 2, || format!("{label}: |Z| = {}", z.order()))?;
            ensure(
                z == derived_subgroup(&g, &whole) && z == frattini_subgroup(&g, &whole),
                || format!("{label}: Z, G' and Frattini differ"),
            )?;
            let squares = g.squares();
            ensure(squares.len() == 1, || {
                format!("{label}: {} non-trivial squares", squares.len())
            })?;
            ensure(g.exponent() == 4, || {
                format!("{label}: exponent {}", g.exponent())
            })?;
            for h in subgroups(&g) {
                let hg = g.induced_group(&h).0;
                if hg.exponent() == 4 {
                    ensure(is_normal_in(&g, &h, &whole), || {
                        format!("{label} {:?}: exponent 4 but not normal", h.to_indices())
                    })?;
                }
                if is_maximal_abelian(&g, &h) {
                    let inv = abelian_invariants(&g, &h)
                        .map_err(|e| e.to_string())?
                        .cyclic_factors;
                    let mixed: Vec<u64> = std::iter::once(4)
                        .chain(std::iter::repeat_n(2, m - 1))
                        .collect();
                    let elementary = vec![2; m + 1];
                    let ok = inv == mixed || (family == Family::Gm1 && inv == elementary);
                    ensure(ok, || {
                        format!("{label}: maximal abelian subgroup of type {inv:?}")
                    })?;
                }
            }
            let form = symplectic_form(&g).map_err(|e| e.to_string())?;
            ensure(
                form.is_non_degenerate() && form.dimension() == 2 * m,
                || format!("{label}: degenerate form"),
            )?;
        }
        Ok(())
    });
}

#[test]
fn groups_without_order_four_elements() {
    criterion(
        7,
        "no element of order 4 means every subgroup is a code",
        Duration::from_secs(5),
        || {
            let corpus = builtin_corpus(false);
            let mut checked = 0;
            for entry in corpus.iter().filter(|e| e.has_tag(TAG_NO_ORDER_4)) {
                for h in subgroups(&entry.group) {
                    checked += 1;
                    ensure(decide(&entry.group, &h).is_perfect_code, || {
                        format!("{} {:?} is not a code", entry.name(), h.to_indices())
                    })?;
                }
            }
            for k in 1..=4 {
                let name = if k == 1 {
                    "Z2".to_owned()
                } else {
                    format!("Z2^{k}")
                };
                ensure(
                    corpus
                        .iter()
                        .any(|e| e.name() == name && e.has_tag(TAG_NO_ORDER_4)),
                    || format!("{name} missing from corpus"),
                )?;
            }
            ensure(checked > 0, || "nothing checked".into())
        },
    );
}

#[test]
fn exhaustive_graph_oracle_small() {
    criterion(
        8,
        "exhaustive graph search confirms decide on D8 and Q8",
        Duration::from_secs(60),
        || {
            for g in [
                named(NamedGroup::Dihedral(8)),
                named(NamedGroup::Quaternion(8)),
            ] {
                for h in subgroups(&g) {
                    let oracle = graph_oracle(&g, &h, 8)
                        .map_err(|e| e.to_string())?
                        .is_perfect_code;
                    let general = decide(&g, &h).is_perfect_code;
                    ensure(oracle == general, || {
                        format!(
                            "{} {:?}: graph {oracle} decide {general}",
                            g.label(),
                            h.to_indices()
                        )
                    })?;
                }
            }
            Ok(())
        },
    );
}
