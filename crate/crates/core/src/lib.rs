//! Subgroup perfect codes in Cayley graphs of small finite groups.
//!
//! A subgroup `H` of a finite group `G` is a *perfect code* of `G` when some
//! Cayley graph `Cay(G, S)` has `H` as an efficient dominating set. This
//! crate decides that property by several independent routes (transversal
//! search, coset scans, quotient criteria along Sylow normalizers,
//! exhaustive graph search) and implements closed-form classifications for
//! extraspecial 2-groups and for groups whose Sylow 2-subgroup is
//! extraspecial.
//!
//! Groups are concrete multiplication tables of order at most a few hundred.
//!
//! ```
//! use perfect_codes::{build_named, decide, Limits, NamedGroup};
//!
//! let d8 = build_named(&NamedGroup::Dihedral(8), &Limits::default()).unwrap();
//! let center = perfect_codes::subgroups::center(&d8, &d8.whole());
//! assert!(!decide(&d8, &center).is_perfect_code);
//! ```

pub mod error;
pub mod extraspecial;
pub mod group;
pub mod harness;
pub mod io;
pub mod iso;
pub mod limits;
pub mod named;
pub mod perfect_code;
mod set;
pub mod subgroups;

pub use error::{Error, Result};
pub use extraspecial::{
    build_family, central_product, classify_extraspecial, classify_extraspecial_sylow,
    is_extraspecial, symplectic_form, CentralProductSpec, ExtraspecialClassification, Factor,
    Family, SymplecticForm,
};
pub use group::{FiniteGroup, Subgroup};
pub use harness::{
    builtin_corpus, cross_check, report_emit, CorpusEntry, CrossCheckOptions, CrossCheckReport,
};
pub use io::{load_group, load_group_file};
pub use iso::isomorphic_small;
pub use limits::Limits;
pub use named::{build_named, NamedGroup};
pub use perfect_code::{
    decide, decide_with_witness, find_inverse_closed_transversal, normalizer_equivalence,
    CodeVerdict, ConnectionSet, Criterion, Transversal,
};
pub use set::{Element, ElementSet};
