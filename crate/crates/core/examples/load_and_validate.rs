//! Load group files in both accepted shapes and print their invariants.
//!
//! ```text
//! cargo run --example load_and_validate -- path/to/group.json
//! ```

use perfect_codes::{load_group, load_group_file, Limits};

fn main() -> perfect_codes::Result<()> {
    let limits = Limits::from_env();
    let groups = match std::env::args().nth(1) {
        Some(path) => vec![load_group_file(path, &limits)?],
        None => {
            let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
            vec![
                load_group_file(format!("{data}/z2.json"), &limits)?,
                load_group_file(format!("{data}/s4.json"), &limits)?,
                load_group_file(format!("{data}/sl23.json"), &limits)?,
            ]
        }
    };
    for g in &groups {
        println!(
            "{:>8}  order {:>3}  exponent {:>2}  abelian {:<5}  elements with x^2 = 1: {}",
            g.label(),
            g.order(),
            g.exponent(),
            g.is_abelian(),
            g.involution_count()
        );
    }

    // Malformed tables are rejected with a specific reason.
    for bad in [
        r#"{"order": 2, "table": [[0, 1], [1, 1]]}"#,
        r#"{"order": 3, "table": [[0, 1], [1, 0]]}"#,
        r#"{"degree": 3, "generators": [[0, 0, 1]]}"#,
    ] {
        match load_group(bad, &limits) {
            Ok(g) => println!("unexpectedly accepted {}", g.label()),
            Err(e) => println!("rejected: {e}"),
        }
    }
    Ok(())
}
