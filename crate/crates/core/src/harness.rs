//! Corpus sweeps that run every decision procedure on every subgroup and
//! report where they disagree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extraspecial::{
    classify_extraspecial, classify_extraspecial_sylow, is_extraspecial, Family,
};
use crate::group::{FiniteGroup, Subgroup};
use crate::io::load_group_file;
use crate::limits::Limits;
use crate::named::{build_named, NamedGroup};
use crate::perfect_code::{
    connection_set_from_transversal, decide, double_coset_condition,
    find_inverse_closed_transversal, graph_oracle, is_perfect_code_in_cayley_graph,
    normalizer_equivalence, omega_criterion, square_coset_condition,
};
use crate::subgroups::{all_subgroups, sylow_2_subgroup};

pub const TAG_EXTRASPECIAL: &str = "extraspecial";
pub const TAG_SYLOW2_EXTRASPECIAL: &str = "sylow2-extraspecial";
pub const TAG_ODD_ORDER: &str = "odd-order";
pub const TAG_NO_ORDER_4: &str = "no-order-4";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    BuiltIn,
    File,
    Constructed,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub group: FiniteGroup,
    pub provenance: Provenance,
    pub tags: BTreeSet<String>,
}

impl CorpusEntry {
    /// Wraps a validated group and computes its tags.
    pub fn new(group: FiniteGroup, provenance: Provenance) -> Self {
        let mut tags = BTreeSet::new();
        if is_extraspecial(&group).is_extraspecial {
            tags.insert(TAG_EXTRASPECIAL.to_owned());
        }
        let p = sylow_2_subgroup(&group, &group.whole());
        if is_extraspecial(&group.induced_group(&p).0).is_extraspecial {
            tags.insert(TAG_SYLOW2_EXTRASPECIAL.to_owned());
        }
        if group.order() % 2 == 1 {
            tags.insert(TAG_ODD_ORDER.to_owned());
        }
        if group.elements().all(|g| group.element_order(g) != 4) {
            tags.insert(TAG_NO_ORDER_4.to_owned());
        }
        CorpusEntry {
            group,
            provenance,
            tags,
        }
    }

    pub fn name(&self) -> String {
        self.group.label()
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.contains(tag)
    }
}

/// The built-in corpus, in a fixed order. `include_order_128` adds
/// `G_{3,1}` and `G_{3,2}`.
pub fn builtin_corpus(include_order_128: bool) -> Vec<CorpusEntry> {
    use NamedGroup::*;
    let mut kinds: Vec<NamedGroup> = (1..=16).map(Cyclic).collect();
    kinds.extend((2..=4).map(|k| DirectProduct(vec![Cyclic(2); k])));
    kinds.extend([6, 8, 10, 12, 14, 16].map(Dihedral));
    kinds.extend([
        Quaternion(8),
        Quaternion(16),
        Extraspecial {
            m: 2,
            family: Family::Gm1,
        },
        Extraspecial {
            m: 2,
            family: Family::Gm2,
        },
        Symmetric(3),
        Symmetric(4),
        Alternating4,
        SL23,
        DirectProduct(vec![Dihedral(8), Cyclic(3)]),
    ]);
    if include_order_128 {
        kinds.push(Extraspecial {
            m: 3,
            family: Family::Gm1,
        });
        kinds.push(Extraspecial {
            m: 3,
            family: Family::Gm2,
        });
    }
    let limits = Limits::default();
    kinds
        .iter()
        .map(|k| {
            let mut g = build_named(k, &limits).expect("built-in groups fit the default caps");
            if let DirectProduct(f) = k {
                if f.iter().all(|x| *x == Cyclic(2)) {
                    g = g.with_name(format!("Z2^{}", f.len()));
                }
            }
            CorpusEntry::new(g, Provenance::BuiltIn)
        })
        .collect()
}

/// Loads every `*.json` group file in `dir`, sorted by file name. Groups
/// without a name are named after their file.
pub fn load_corpus_dir(dir: impl AsRef<Path>, limits: &Limits) -> Result<Vec<CorpusEntry>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let mut g = load_group_file(&p, limits)?;
            if g.name().is_none() {
                let stem = p.file_stem().map(|s| s.to_string_lossy().into_owned());
                g = g.with_name(stem.unwrap_or_default());
            }
            Ok(CorpusEntry::new(g, Provenance::File))
        })
        .collect()
}

/// A decision procedure the sweep can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Transversal search, plus the graph-level check of the connection
    /// set built from the transversal found.
    Transversal,
    SquareCoset,
    DoubleCoset,
    /// Quotient criterion; only for 2-subgroups and normal subgroups.
    Omega,
    /// All four Sylow-normalizer statements.
    Equivalence,
    Decide,
    /// Exhaustive connection-set search; only for small groups.
    Graph,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Transversal,
        Check::SquareCoset,
        Check::DoubleCoset,
        Check::Omega,
        Check::Equivalence,
        Check::Decide,
        Check::Graph,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Transversal => "transversal",
            Check::SquareCoset => "square-coset",
            Check::DoubleCoset => "double-coset",
            Check::Omega => "omega",
            Check::Equivalence => "equivalence",
            Check::Decide => "decide",
            Check::Graph => "graph",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.as_str() == s.trim())
            .ok_or_else(|| Error::Unsupported(format!("criterion `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct CrossCheckOptions {
    pub checks: Vec<Check>,
    /// Groups above this order are skipped.
    pub max_order: usize,
    /// The exhaustive graph oracle runs only up to this order.
    pub graph_max_order: usize,
    /// Sweep one subgroup per conjugacy class instead of all subgroups.
    pub dedupe_conjugates: bool,
    pub limits: Limits,
}

impl Default for CrossCheckOptions {
    fn default() -> Self {
        CrossCheckOptions {
            checks: Check::ALL.to_vec(),
            max_order: 64,
            graph_max_order: 8,
            dedupe_conjugates: false,
            limits: Limits::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub group: String,
    pub group_order: usize,
    pub subgroup: Vec<usize>,
    pub subgroup_order: usize,
    pub verdicts: BTreeMap<String, bool>,
    pub is_perfect_code: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub groups: usize,
    pub skipped_groups: Vec<String>,
    pub subgroups: usize,
    pub perfect_codes: usize,
    pub disagreements: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub criteria: Vec<Check>,
    pub max_order: usize,
    pub summary: Summary,
    pub rows: Vec<Row>,
    /// Wall-clock time per row, parallel to `rows`; not part of the stable
    /// output.
    #[serde(skip)]
    pub timings: Vec<Duration>,
}

fn evaluate(
    entry: &CorpusEntry,
    h: &Subgroup,
    options: &CrossCheckOptions,
) -> BTreeMap<String, bool> {
    let g = &entry.group;
    let mut v = BTreeMap::new();
    for &check in &options.checks {
        match check {
            Check::Transversal => {
                let t = find_inverse_closed_transversal(g, h);
                v.insert("transversal".into(), t.is_some());
                if let Some(t) = t {
                    let ok = connection_set_from_transversal(g, &t)
                        .map(|s| is_perfect_code_in_cayley_graph(g, &s, h.elements()))
                        .unwrap_or(false);
                    v.insert("transversal-graph-check".into(), ok);
                }
            }
            Check::SquareCoset => {
                v.insert(
                    "square-coset".into(),
                    square_coset_condition(g, h).is_perfect_code,
                );
            }
            Check::DoubleCoset => {
                v.insert(
                    "double-coset".into(),
                    double_coset_condition(g, h).is_perfect_code,
                );
            }
            Check::Omega => {
                if let Ok(verdict) = omega_criterion(g, h) {
                    v.insert("omega-quotient".into(), verdict.is_perfect_code);
                }
            }
            Check::Equivalence => {
                let r = normalizer_equivalence(g, h);
                v.insert("equivalence:h2-code-in-p".into(), r.h2_code_in_p);
                v.insert(
                    "equivalence:omega-sylow-quotient".into(),
                    r.omega_sylow_quotient,
                );
                v.insert(
                    "equivalence:omega-full-quotient".into(),
                    r.omega_full_quotient,
                );
                v.insert("equivalence:h-code-in-g".into(), r.h_code_in_g);
            }
            Check::Decide => {
                v.insert("decide".into(), decide(g, h).is_perfect_code);
            }
            Check::Graph => {
                if g.order() <= options.graph_max_order {
                    if let Ok(verdict) = graph_oracle(g, h, options.graph_max_order) {
                        v.insert("graph".into(), verdict.is_perfect_code);
                    }
                }
            }
        }
    }
    if entry.has_tag(TAG_EXTRASPECIAL) {
        if let Ok(verdict) = classify_extraspecial(g, h) {
            v.insert(
                "extraspecial-classification".into(),
                verdict.is_perfect_code,
            );
        }
    }
    if entry.has_tag(TAG_SYLOW2_EXTRASPECIAL) {
        if let Ok(verdict) = classify_extraspecial_sylow(g, h) {
            v.insert(
                "extraspecial-sylow-classification".into(),
                verdict.is_perfect_code,
            );
        }
    }
    v
}

fn conjugacy_representatives(g: &FiniteGroup, subs: Vec<Subgroup>) -> Vec<Subgroup> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut reps = Vec::new();
    for h in subs {
        if seen.contains(&h.to_indices()) {
            continue;
        }
        for x in g.elements() {
            seen.insert(g.conjugate_subgroup(&h, x).to_indices());
        }
        reps.push(h);
    }
    reps
}

/// Runs the selected checks on every subgroup of every group up to
/// `options.max_order`. Rows come out in corpus order, then canonical
/// subgroup order, regardless of scheduling.
pub fn cross_check(corpus: &[CorpusEntry], options: &CrossCheckOptions) -> CrossCheckReport {
    let mut summary = Summary::default();
    let mut jobs: Vec<(&CorpusEntry, Subgroup)> = Vec::new();
    for entry in corpus {
        let g = &entry.group;
        let subs = match (g.order() <= options.max_order).then(|| all_subgroups(g, &options.limits))
        {
            Some(Ok(subs)) => subs,
            _ => {
                summary.skipped_groups.push(entry.name());
                continue;
            }
        };
        summary.groups += 1;
        let subs = if options.dedupe_conjugates {
            conjugacy_representatives(g, subs)
        } else {
            subs
        };
        jobs.extend(subs.into_iter().map(|h| (entry, h)));
    }

    let results: Vec<(Row, Duration)> = jobs
        .par_iter()
        .map(|(entry, h)| {
            let start = Instant::now();
            let verdicts = evaluate(entry, h, options);
            let mut values = verdicts.values();
            let first = values.next().copied().unwrap_or(false);
            let agree = values.all(|&b| b == first);
            let is_perfect_code = verdicts.get("decide").copied().unwrap_or(first);
            let row = Row {
                group: entry.name(),
                group_order: entry.group.order(),
                subgroup: h.to_indices(),
                subgroup_order: h.order(),
                verdicts,
                is_perfect_code,
                agree,
            };
            (row, start.elapsed())
        })
        .collect();

    let (rows, timings): (Vec<Row>, Vec<Duration>) = results.into_iter().unzip();
    summary.subgroups = rows.len();
    summary.perfect_codes = rows.iter().filter(|r| r.is_perfect_code).count();
    summary.disagreements = rows.iter().filter(|r| !r.agree).count();
    CrossCheckReport {
        criteria: options.checks.clone(),
        max_order: options.max_order,
        summary,
        rows,
        timings,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            other => Err(Error::UnsupportedFormat(other.to_owned())),
        }
    }
}

/// Renders a report. Timings are appended after the stable part: the
/// `timings_ms` array in JSON, a trailing section in markdown.
pub fn report_emit(report: &CrossCheckReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut value = serde_json::to_value(report).expect("reports always serialize");
            let ms: Vec<f64> = report
                .timings
                .iter()
                .map(|d| d.as_secs_f64() * 1e3)
                .collect();
            value["timings_ms"] = serde_json::json!(ms);
            serde_json::to_string_pretty(&value).expect("reports always serialize")
        }
        ReportFormat::Markdown => {
            let mut out = markdown_stable(report);
            let total: Duration = report.timings.iter().sum();
            let _ = writeln!(
                out,
                "\n## Timing\n\nTotal row time: {:.1} ms",
                total.as_secs_f64() * 1e3
            );
            out
        }
    }
}

/// The byte-stable part of a report: identical for identical inputs.
pub fn report_emit_stable(report: &CrossCheckReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            serde_json::to_string_pretty(report).expect("reports always serialize")
        }
        ReportFormat::Markdown => markdown_stable(report),
    }
}

fn markdown_stable(report: &CrossCheckReport) -> String {
    let mut out = String::new();
    let s = &report.summary;
    let _ = writeln!(out, "# Perfect-code cross-check\n");
    let criteria: Vec<&str> = report.criteria.iter().map(|c| c.as_str()).collect();
    let _ = writeln!(out, "Criteria: {}  ", criteria.join(", "));
    let _ = writeln!(out, "Max order: {}\n", report.max_order);
    let _ = writeln!(out, "## Summary\n");
    let _ = writeln!(
        out,
        "| groups | subgroups | perfect codes | disagreements |"
    );
    let _ = writeln!(out, "|---|---|---|---|");
    let _ = writeln!(
        out,
        "| {} | {} | {} | {} |",
        s.groups, s.subgroups, s.perfect_codes, s.disagreements
    );
    if !s.skipped_groups.is_empty() {
        let _ = writeln!(out, "\nSkipped: {}", s.skipped_groups.join(", "));
    }

    let sections: [(&str, &[&str]); 5] = [
        (
            "Transversal and coset conditions",
            &[
                "transversal",
                "transversal-graph-check",
                "square-coset",
                "double-coset",
            ],
        ),
        (
            "Sylow normalizer statements",
            &[
                "equivalence:h2-code-in-p",
                "equivalence:omega-sylow-quotient",
                "equivalence:omega-full-quotient",
                "equivalence:h-code-in-g",
                "omega-quotient",
                "decide",
            ],
        ),
        (
            "Extraspecial classification",
            &["extraspecial-classification"],
        ),
        (
            "Extraspecial Sylow classification",
            &["extraspecial-sylow-classification"],
        ),
        ("Exhaustive graph oracle", &["graph"]),
    ];
    let _ = writeln!(out, "\n## Criteria\n");
    for (title, keys) in sections {
        let _ = writeln!(out, "### {title}\n");
        let _ = writeln!(out, "| criterion | rows | true | disagreeing rows |");
        let _ = writeln!(out, "|---|---|---|---|");
        for key in keys {
            let evaluated: Vec<&Row> = report
                .rows
                .iter()
                .filter(|r| r.verdicts.contains_key(*key))
                .collect();
            if evaluated.is_empty() {
                continue;
            }
            let yes = evaluated.iter().filter(|r| r.verdicts[*key]).count();
            let bad = evaluated
                .iter()
                .filter(|r| r.verdicts[*key] != r.is_perfect_code)
                .count();
            let _ = writeln!(out, "| {key} | {} | {yes} | {bad} |", evaluated.len());
        }
        let _ = writeln!(out);
    }

    let _ = writeln!(out, "## Groups\n");
    let mut groups: Vec<&str> = Vec::new();
    for r in &report.rows {
        if groups.last() != Some(&r.group.as_str()) {
            groups.push(&r.group);
        }
    }
    for name in groups {
        let rows: Vec<&Row> = report.rows.iter().filter(|r| r.group == name).collect();
        let codes = rows.iter().filter(|r| r.is_perfect_code).count();
        let bad = rows.iter().filter(|r| !r.agree).count();
        let _ = writeln!(
            out,
            "- **{name}** (order {}): {} subgroups, {codes} perfect codes, {bad} disagreements",
            rows[0].group_order,
            rows.len()
        );
    }

    let disagreeing: Vec<&Row> = report.rows.iter().filter(|r| !r.agree).collect();
    if !disagreeing.is_empty() {
        let _ = writeln!(out, "\n## Disagreements\n");
        for r in disagreeing {
            let _ = writeln!(out, "- {} {:?}: {:?}", r.group, r.subgroup, r.verdicts);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(kind: NamedGroup) -> CorpusEntry {
        CorpusEntry::new(
            build_named(&kind, &Limits::default()).unwrap(),
            Provenance::Constructed,
        )
    }

    #[test]
    fn corpus_tags() {
        let corpus = builtin_corpus(false);
        let by_name = |n: &str| corpus.iter().find(|e| e.name() == n).unwrap();
        assert!(by_name("S4").has_tag(TAG_SYLOW2_EXTRASPECIAL));
        assert!(by_name("SL(2,3)").has_tag(TAG_SYLOW2_EXTRASPECIAL));
        assert!(by_name("D8xZ3").has_tag(TAG_SYLOW2_EXTRASPECIAL));
        assert!(by_name("G2,1").has_tag(TAG_EXTRASPECIAL));
        assert!(by_name("G2,2").has_tag(TAG_EXTRASPECIAL));
        assert!(by_name("Z2^3").has_tag(TAG_NO_ORDER_4));
        assert!(!by_name("A4").has_tag(TAG_SYLOW2_EXTRASPECIAL));
        let order32: Vec<_> = corpus
            .iter()
            .filter(|e| e.group.order() == 32 && e.has_tag(TAG_EXTRASPECIAL))
            .collect();
        assert_eq!(order32.len(), 2);
    }

    #[test]
    fn d8_sweep() {
        let report = cross_check(
            &[entry(NamedGroup::Dihedral(8))],
            &CrossCheckOptions::default(),
        );
        assert_eq!(report.rows.len(), 10);
        assert_eq!(report.summary.disagreements, 0);
        // everything but the center
        assert_eq!(report.summary.perfect_codes, 9);
        let center = report
            .rows
            .iter()
            .find(|r| r.subgroup == vec![0, 2])
            .unwrap();
        assert!(!center.is_perfect_code);
        assert!(center.verdicts.contains_key("graph"));
        assert!(center.verdicts.contains_key("extraspecial-classification"));
    }

    #[test]
    fn elementary_abelian_sweep_is_all_codes() {
        let report = cross_check(
            &[entry(NamedGroup::DirectProduct(vec![
                NamedGroup::Cyclic(2);
                3
            ]))],
            &CrossCheckOptions::default(),
        );
        assert_eq!(report.summary.perfect_codes, report.summary.subgroups);
    }

    #[test]
    fn dedupe_and_skip() {
        let options = CrossCheckOptions {
            dedupe_conjugates: true,
            max_order: 10,
            ..CrossCheckOptions::default()
        };
        let report = cross_check(
            &[
                entry(NamedGroup::Dihedral(8)),
                entry(NamedGroup::Symmetric(4)),
            ],
            &options,
        );
        assert_eq!(report.summary.skipped_groups, vec!["S4".to_string()]);
        // D8 classes: 1, Z, two classes of reflections, Z4, two Kleins, D8
        assert_eq!(report.rows.len(), 8);
    }

    #[test]
    fn empty_report_and_formats() {
        let report = cross_check(&[], &CrossCheckOptions::default());
        assert_eq!(report.rows.len(), 0);
        let json = report_emit(&report, ReportFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["summary"]["subgroups"], 0);
        assert!(report_emit(&report, ReportFormat::Markdown).contains("## Summary"));
        assert!(matches!(
            "xml".parse::<ReportFormat>(),
            Err(Error::UnsupportedFormat(_))
        ));
        assert_eq!("graph".parse::<Check>().unwrap(), Check::Graph);
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn stable_output_is_deterministic() {
        let corpus = vec![entry(NamedGroup::Symmetric(4))];
        let a = cross_check(&corpus, &CrossCheckOptions::default());
        let b = cross_check(&corpus, &CrossCheckOptions::default());
        for f in [ReportFormat::Json, ReportFormat::Markdown] {
            assert_eq!(report_emit_stable(&a, f), report_emit_stable(&b, f));
        }
    }
}
