use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use perfect_codes::harness::{load_corpus_dir, Check, ReportFormat};
use perfect_codes::io::group_to_json;
use perfect_codes::subgroups::all_subgroups;
use perfect_codes::{
    build_family, builtin_corpus, classify_extraspecial, classify_extraspecial_sylow, cross_check,
    decide, decide_with_witness, is_extraspecial, load_group_file, report_emit, CodeVerdict,
    CrossCheckOptions, Error, Family, FiniteGroup, Limits, Result, Subgroup,
};

/// Perfect-code checks for subgroups of small finite groups.
#[derive(Parser)]
#[command(name = "pcl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a group file and print basic invariants.
    Validate { file: PathBuf },
    /// List all subgroups in canonical order.
    Subgroups { file: PathBuf },
    /// Decide whether the subgroup generated by the given elements is a perfect code.
    Check {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        subgroup: Vec<usize>,
        /// Attach a transversal or connection-set witness.
        #[arg(long)]
        witness: bool,
    },
    /// Apply the closed-form classification for extraspecial groups or
    /// groups with an extraspecial Sylow 2-subgroup.
    Classify {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        subgroup: Vec<usize>,
    },
    /// Build G_{m,1} or G_{m,2} as a group file.
    Construct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run every criterion on every subgroup of a corpus and report agreement.
    CrossCheck {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        /// Directory of group files; defaults to the built-in corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        criteria: Option<Vec<String>>,
        #[arg(long, default_value = "json")]
        format: String,
        /// Sweep one subgroup per conjugacy class.
        #[arg(long)]
        dedupe_conjugates: bool,
    },
}

fn subgroup_arg(g: &FiniteGroup, generators: &[usize]) -> Result<Subgroup> {
    let elements = generators
        .iter()
        .map(|&i| g.element(i))
        .collect::<Result<Vec<_>>>()?;
    Ok(g.closure(&elements))
}

fn verdict_json(g: &FiniteGroup, h: &Subgroup, v: &CodeVerdict) -> Value {
    let mut out = json!({
        "group": g.label(),
        "subgroup": h.to_indices(),
        "is_perfect_code": v.is_perfect_code,
        "criterion": v.criterion,
    });
    if let Some(w) = &v.witness {
        out["witness"] = json!(w.to_indices());
    }
    if let Some(c) = v.counterexample {
        out["counterexample"] = json!(c.index());
    }
    out
}

fn run(cli: Cli, limits: &Limits) -> Result<u8> {
    match cli.command {
        Command::Validate { file } => {
            let g = load_group_file(&file, limits)?;
            let es = is_extraspecial(&g);
            let out = json!({
                "group": g.label(),
                "order": g.order(),
                "abelian": g.is_abelian(),
                "exponent": g.exponent(),
                "order_le_2": g.involution_count(),
                "extraspecial": es.is_extraspecial,
                "family": es.family,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::Subgroups { file } => {
            let g = load_group_file(&file, limits)?;
            let subs: Vec<Value> = all_subgroups(&g, limits)?
                .iter()
                .map(|h| json!({ "order": h.order(), "elements": h.to_indices() }))
                .collect();
            println!("{}", serde_json::to_string_pretty(&subs)?);
        }
        Command::Check {
            file,
            subgroup,
            witness,
        } => {
            let g = load_group_file(&file, limits)?;
            let h = subgroup_arg(&g, &subgroup)?;
            let v = if witness {
                decide_with_witness(&g, &h)
            } else {
                decide(&g, &h)
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&verdict_json(&g, &h, &v))?
            );
        }
        Command::Classify { file, subgroup } => {
            let g = load_group_file(&file, limits)?;
            let h = subgroup_arg(&g, &subgroup)?;
            let v = if is_extraspecial(&g).is_extraspecial {
                classify_extraspecial(&g, &h)?
            } else {
                classify_extraspecial_sylow(&g, &h)?
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&verdict_json(&g, &h, &v))?
            );
        }
        Command::Construct { family, m, output } => {
            let g = build_family(m, family, limits)?;
            let doc = group_to_json(&g);
            match output {
                Some(path) => std::fs::write(path, doc)?,
                None => println!("{doc}"),
            }
        }
        Command::CrossCheck {
            max_order,
            corpus,
            criteria,
            format,
            dedupe_conjugates,
        } => {
            let format: ReportFormat = format.parse()?;
            let checks = match criteria {
                Some(list) => list
                    .iter()
                    .map(|c| c.parse())
                    .collect::<Result<Vec<Check>>>()?,
                None => Check::ALL.to_vec(),
            };
            if checks.is_empty() {
                return Err(Error::Unsupported("empty criteria list".into()));
            }
            let corpus = match corpus {
                Some(dir) => load_corpus_dir(dir, limits)?,
                None => builtin_corpus(false),
            };
            let options = CrossCheckOptions {
                checks,
                max_order: max_order.min(limits.max_order),
                dedupe_conjugates,
                limits: *limits,
                ..CrossCheckOptions::default()
            };
            let report = cross_check(&corpus, &options);
            println!("{}", report_emit(&report, format));
            if report.summary.disagreements > 0 {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli, &Limits::from_env()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
