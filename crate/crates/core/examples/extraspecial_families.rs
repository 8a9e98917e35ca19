//! Build the two extraspecial families as central products, recognise them
//! again from their tables and show the symplectic form on G/Z.

use perfect_codes::extraspecial::{family_by_isomorphism, family_involution_count};
use perfect_codes::iso::is_isomorphism;
use perfect_codes::{
    build_family, is_extraspecial, isomorphic_small, symplectic_form, CentralProductSpec, Factor,
    Family, Limits,
};

fn main() -> perfect_codes::Result<()> {
    let limits = Limits::default();
    for m in 1..=3 {
        for family in [Family::Gm1, Family::Gm2] {
            let g = build_family(m, family, &limits)?;
            let c = is_extraspecial(&g);
            let form = symplectic_form(&g)?;
            println!(
                "{:<6} order {:>3}  x^2 = 1 for {:>3} elements  detected {:?}  form rank {}/{}",
                g.label(),
                g.order(),
                family_involution_count(m, family),
                c.family,
                form.rank(),
                form.dimension()
            );
            if g.order() <= limits.max_isomorphism_order {
                assert_eq!(family_by_isomorphism(&g, &limits)?, Some(family));
            }
        }
    }

    let form = symplectic_form(&build_family(2, Family::Gm1, &limits)?)?;
    println!("\ncommutator form of G2,1:");
    for row in form.matrix() {
        println!("  {row:?}");
    }

    // Q8 o Q8 and D8 o D8 are the same group.
    let qq = CentralProductSpec {
        factors: vec![Factor::Quaternion8; 2],
    }
    .build(&limits)?;
    let dd = CentralProductSpec {
        factors: vec![Factor::Dihedral8; 2],
    }
    .build(&limits)?;
    let map = isomorphic_small(&qq, &dd, &limits)?.expect("Q8oQ8 and D8oD8 are isomorphic");
    println!(
        "\n{} -> {}: verified {}",
        qq.label(),
        dd.label(),
        is_isomorphism(&qq, &dd, &map)
    );
    Ok(())
}
