//! Enumerate the subgroup lattice of S4 and print structural data for
//! each subgroup: normality, Sylow 2-subgroup and abelian invariants.

use perfect_codes::subgroups::{
    abelian_invariants, all_subgroups, is_normal_in, normalizer, sylow_2_subgroup,
};
use perfect_codes::{build_named, Limits, NamedGroup};

fn main() -> perfect_codes::Result<()> {
    let limits = Limits::default();
    let g = build_named(&NamedGroup::Symmetric(4), &limits)?;
    let subs = all_subgroups(&g, &limits)?;
    println!("{} has {} subgroups", g.label(), subs.len());
    for h in &subs {
        let normal = is_normal_in(&g, h, &g.whole());
        let n = normalizer(&g, h);
        let sylow = sylow_2_subgroup(&g, h);
        let invariants = match abelian_invariants(&g, h) {
            Ok(a) => format!("{:?}", a.cyclic_factors),
            Err(_) => "non-abelian".into(),
        };
        println!(
            "order {:>2}  normal {:<5}  |N(H)| {:>2}  |H_2| {:>2}  {:<12} {:?}",
            h.order(),
            normal,
            n.order(),
            sylow.order(),
            invariants,
            h.to_indices()
        );
    }
    Ok(())
}
