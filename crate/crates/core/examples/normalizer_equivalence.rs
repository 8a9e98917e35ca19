//! Evaluate the four equivalent statements along the chain
//! H_2 <= N_2 <= P for every subgroup of a few groups, and show that they
//! always agree.

use perfect_codes::perfect_code::SylowNormalizerChain;
use perfect_codes::subgroups::all_subgroups;
use perfect_codes::{build_named, normalizer_equivalence, Limits, NamedGroup};

fn main() -> perfect_codes::Result<()> {
    let limits = Limits::default();
    for kind in [
        NamedGroup::Symmetric(4),
        NamedGroup::SL23,
        NamedGroup::Dihedral(16),
    ] {
        let g = build_named(&kind, &limits)?;
        println!("{}", g.label());
        for h in all_subgroups(&g, &limits)? {
            let chain = SylowNormalizerChain::new(&g, &h);
            let r = normalizer_equivalence(&g, &h);
            println!(
                "  |H| {:>2}  |N(H_2)| {:>2}  |P| {:>2}  [{} {} {} {}] agree {}",
                h.order(),
                chain.normalizer.order(),
                chain.sylow.order(),
                r.h2_code_in_p as u8,
                r.omega_sylow_quotient as u8,
                r.omega_full_quotient as u8,
                r.h_code_in_g as u8,
                r.all_agree()
            );
        }
    }
    Ok(())
}
