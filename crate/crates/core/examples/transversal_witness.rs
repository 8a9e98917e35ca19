//! Find an inverse-closed right transversal for a subgroup, turn it into a
//! connection set and confirm the perfect-code property on the Cayley graph
//! directly.

use perfect_codes::perfect_code::{
    connection_set_from_transversal, is_perfect_code_in_cayley_graph, square_coset_condition,
};
use perfect_codes::subgroups::all_subgroups;
use perfect_codes::{build_named, find_inverse_closed_transversal, Limits, NamedGroup};

fn main() -> perfect_codes::Result<()> {
    let limits = Limits::default();
    let g = build_named(&NamedGroup::Quaternion(16), &limits)?;
    for h in all_subgroups(&g, &limits)? {
        match find_inverse_closed_transversal(&g, &h) {
            Some(t) => {
                let s = connection_set_from_transversal(&g, &t)?;
                let ok = is_perfect_code_in_cayley_graph(&g, &s, h.elements());
                println!(
                    "{:?}: transversal {:?}, S = {:?}, graph check {}",
                    h.to_indices(),
                    t.to_indices(),
                    s.to_indices(),
                    ok
                );
            }
            None => {
                // The coset scan names the offending element.
                let v = square_coset_condition(&g, &h);
                println!(
                    "{:?}: no transversal, blocked at {:?}",
                    h.to_indices(),
                    v.counterexample
                );
            }
        }
    }
    Ok(())
}
