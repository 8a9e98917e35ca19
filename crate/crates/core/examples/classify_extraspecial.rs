//! Compare the closed-form classifications with the general decision
//! procedure, subgroup by subgroup.

use perfect_codes::extraspecial::extraspecial_sylow_cases;
use perfect_codes::subgroups::all_subgroups;
use perfect_codes::{
    build_family, build_named, classify_extraspecial, classify_extraspecial_sylow, decide, Family,
    Limits, NamedGroup,
};

fn main() -> perfect_codes::Result<()> {
    let limits = Limits::default();
    for family in [Family::Gm1, Family::Gm2] {
        let g = build_family(2, family, &limits)?;
        let subs = all_subgroups(&g, &limits)?;
        let mut codes = 0;
        for h in &subs {
            let closed = classify_extraspecial(&g, h)?.is_perfect_code;
            assert_eq!(closed, decide(&g, h).is_perfect_code);
            codes += closed as usize;
        }
        println!(
            "{}: {} of {} subgroups are perfect codes",
            g.label(),
            codes,
            subs.len()
        );
    }

    for kind in [NamedGroup::Symmetric(4), NamedGroup::SL23] {
        let g = build_named(&kind, &limits)?;
        println!("{}", g.label());
        for h in all_subgroups(&g, &limits)? {
            let cases = extraspecial_sylow_cases(&g, &h)?;
            let v = classify_extraspecial_sylow(&g, &h)?;
            println!(
                "  |H| {:>2}  code {:<5}  matched cases {}  {:?}",
                h.order(),
                v.is_perfect_code,
                cases.matched(),
                h.to_indices()
            );
        }
    }
    Ok(())
}
