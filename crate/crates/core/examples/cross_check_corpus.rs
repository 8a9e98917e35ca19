//! Sweep the built-in corpus with every criterion and print the markdown
//! report. Pass `--dedupe` to keep one subgroup per conjugacy class.

use perfect_codes::harness::ReportFormat;
use perfect_codes::{builtin_corpus, cross_check, report_emit, CrossCheckOptions};

fn main() {
    let dedupe = std::env::args().any(|a| a == "--dedupe");
    let options = CrossCheckOptions {
        dedupe_conjugates: dedupe,
        ..CrossCheckOptions::default()
    };
    let report = cross_check(&builtin_corpus(false), &options);
    print!("{}", report_emit(&report, ReportFormat::Markdown));
    if report.summary.disagreements > 0 {
        std::process::exit(2);
    }
}
