//! Report assembly and emission. Reports are deterministic: fixed key
//! order, no timestamps unless requested, results on stdout only.

use serde::{Deserialize, Serialize};

use crate::bn;
use crate::certify;
use crate::error::{Error, Result};
use crate::qform;
use crate::stacks;

pub const TOOL_NAME: &str = "k3cert";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable holding the path of an optional JSON config file.
pub const CONFIG_ENV_VAR: &str = "K3CERT_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The command's claim holds (Proved / no representation / all pass).
    Certified,
    Refuted,
    Unknown,
    /// Plain computation, no claim attached.
    Computed,
    NoOp,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdRow {
    pub name: String,
    pub value: String,
    pub direction: bn::Direction,
    pub satisfied: bool,
}

/// One Diophantine system together with its complete solution set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub deg: i128,
    pub s_int: i128,
    pub c2_quot: Option<i128>,
    pub solutions: Vec<(i128, i128)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

// Externally tagged on purpose: internal tagging buffers through
// serde_json's Number, which cannot carry i128.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResultItem {
    Scalar { name: String, value: i128 },
    Rational { name: String, value: String },
    Text { name: String, value: String },
    Vector { name: String, vector: crate::mukai::MukaiVector },
    Pairs { name: String, pairs: Vec<(i128, i128)> },
    Thresholds { name: String, rows: Vec<ThresholdRow> },
    Representation { name: String, certificate: qform::RepCertificate },
    Minimization { name: String, certificate: certify::MinCertificate },
    Suite { name: String, report: certify::SuiteReport },
    ExceptionalPairs { name: String, report: stacks::ExceptionalPairs },
    CaseAnalysis { name: String, cases: Vec<CaseOutcome> },
}

impl ResultItem {
    pub fn name(&self) -> &str {
        match self {
            ResultItem::Scalar { name, .. }
            | ResultItem::Rational { name, .. }
            | ResultItem::Text { name, .. }
            | ResultItem::Vector { name, .. }
            | ResultItem::Pairs { name, .. }
            | ResultItem::Thresholds { name, .. }
            | ResultItem::Representation { name, .. }
            | ResultItem::Minimization { name, .. }
            | ResultItem::Suite { name, .. }
            | ResultItem::ExceptionalPairs { name, .. }
            | ResultItem::CaseAnalysis { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub results: Vec<ResultItem>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timestamp_unix_secs: Option<u64>,
}

impl Report {
    pub fn new(command: String, results: Vec<ResultItem>, verdict: Verdict) -> Self {
        let verdict = if results.is_empty() { Verdict::NoOp } else { verdict };
        Report {
            tool: TOOL_NAME.to_string(),
            version: VERSION.to_string(),
            command,
            results,
            verdict,
            timestamp_unix_secs: None,
        }
    }

    pub fn with_timestamp(mut self) -> Self {
        let now = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        self.timestamp_unix_secs = Some(now);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
    Plain,
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Markdown => emit_markdown(report),
        Format::Plain => emit_plain(report),
    }
}

pub fn parse_report(text: &str) -> Result<Report> {
    serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("bad report: {e}")))
}

fn fmt_pairs(pairs: &[(i128, i128)]) -> String {
    let body: Vec<String> = pairs.iter().map(|(m, n)| format!("({m}, {n})")).collect();
    format!("[{}]", body.join(", "))
}

fn emit_plain(report: &Report) -> String {
    // a single scalar result prints as a bare value for easy consumption
    if report.results.len() == 1 {
        if let ResultItem::Scalar { value, .. } = &report.results[0] {
            return format!("{value}\n");
        }
        if let ResultItem::Rational { value, .. } = &report.results[0] {
            return format!("{value}\n");
        }
    }
    let mut out = String::new();
    for item in &report.results {
        plain_item(item, &mut out);
    }
    out.push_str(&format!("verdict: {}\n", verdict_name(report.verdict)));
    out
}

fn plain_item(item: &ResultItem, out: &mut String) {
    match item {
        ResultItem::Scalar { name, value } => out.push_str(&format!("{name} = {value}\n")),
        ResultItem::Rational { name, value } => out.push_str(&format!("{name} = {value}\n")),
        ResultItem::Text { name, value } => out.push_str(&format!("{name}: {value}\n")),
        ResultItem::Vector { name, vector } => out.push_str(&format!("{name} = {vector}\n")),
        ResultItem::Pairs { name, pairs } => {
            out.push_str(&format!("{name}: {}\n", fmt_pairs(pairs)));
        }
        ResultItem::Thresholds { name, rows } => {
            out.push_str(&format!("{name}:\n"));
            for r in rows {
                out.push_str(&format!(
                    "  {:<13} {} {:<8} {}\n",
                    r.name,
                    r.direction.symbol(),
                    r.value,
                    if r.satisfied { "satisfied" } else { "not satisfied" }
                ));
            }
        }
        ResultItem::Representation { name, certificate: c } => {
            out.push_str(&format!("{name}: {:?}", c.status));
            if let Some((m, n)) = &c.witness {
                out.push_str(&format!(", witness ({m}, {n})"));
            }
            out.push_str(&format!(" [{}]\n", method_name(c.method)));
            out.push_str(&format!("  {}\n", c.trace));
            if let Some(b) = c.bound_used {
                out.push_str(&format!("  search bound: {b}\n"));
            }
        }
        ResultItem::Minimization { name, certificate: c } => {
            out.push_str(&format!(
                "{name}: {:?}, min {} vs threshold {}, window [{}, {}], tail {}\n",
                c.status,
                c.min_found,
                c.threshold,
                c.window.0,
                c.window.1,
                if c.tail_ok { "certified" } else { "not certified" }
            ));
            out.push_str(&format!("  minimizers: {}\n", fmt_pairs(&c.minimizers)));
            for (hyp, ok) in &c.hypotheses {
                out.push_str(&format!(
                    "  hypothesis {hyp}: {}\n",
                    if *ok { "holds" } else { "fails" }
                ));
            }
            out.push_str(&format!("  {}\n", c.trace));
        }
        ResultItem::Suite { name, report: r } => {
            out.push_str(&format!(
                "{name} on lattice (H^2, C^2, C.H) = ({}, {}, {}):\n",
                r.lattice.0, r.lattice.1, r.lattice.2
            ));
            for item in &r.items {
                out.push_str(&format!(
                    "  {} {:<24} {}\n",
                    if item.pass { "PASS" } else { "FAIL" },
                    item.name,
                    item.detail
                ));
            }
            out.push_str(&format!(
                "  overall: {}\n",
                if r.all_pass { "all items PASS" } else { "some items FAIL" }
            ));
        }
        ResultItem::ExceptionalPairs { name, report: r } => {
            out.push_str(&format!("{name} (g <= {}):\n", r.g_max));
            out.push_str(&format!("  candidates: {}\n", fmt_pairs(&r.candidates)));
            out.push_str(&format!("  survivors:  {}\n", fmt_pairs(&r.survivors)));
        }
        ResultItem::CaseAnalysis { name, cases } => {
            out.push_str(&format!("{name}:\n"));
            for c in cases {
                let c2 = c
                    .c2_quot
                    .map(|v| format!(", c2(E/N) = {v}"))
                    .unwrap_or_default();
                out.push_str(&format!(
                    "  C.D = {}, D^2 = {}{c2}: solutions {}{}\n",
                    c.deg,
                    c.s_int,
                    fmt_pairs(&c.solutions),
                    c.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
                ));
            }
        }
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Certified => "certified",
        Verdict::Refuted => "refuted",
        Verdict::Unknown => "unknown",
        Verdict::Computed => "computed",
        Verdict::NoOp => "no-op",
    }
}

fn method_name(m: qform::Method) -> &'static str {
    match m {
        qform::Method::DefiniteEnumeration => "definite-enumeration",
        qform::Method::FactorSplit => "factor-split",
        qform::Method::ReductionCycle => "reduction-cycle",
        qform::Method::ModularSieve => "modular-sieve",
        qform::Method::BoundedSearch => "bounded-search",
    }
}

fn emit_markdown(report: &Report) -> String {
    let mut out = format!(
        "# {} report\n\ncommand: `{}` (version {})\n\n",
        report.tool, report.command, report.version
    );
    for item in &report.results {
        match item {
            ResultItem::Thresholds { name, rows } => {
                out.push_str(&format!("## {name}\n\n"));
                out.push_str("| name | relation | bound | satisfied |\n");
                out.push_str("|------|----------|-------|-----------|\n");
                for r in rows {
                    out.push_str(&format!(
                        "| {} | {} | {} | {} |\n",
                        r.name,
                        r.direction.symbol(),
                        r.value,
                        if r.satisfied { "yes" } else { "no" }
                    ));
                }
                out.push('\n');
            }
            ResultItem::Suite { name, report: r } => {
                out.push_str(&format!("## {name}\n\n"));
                out.push_str("| item | result | detail |\n|------|--------|--------|\n");
                for i in &r.items {
                    out.push_str(&format!(
                        "| {} | {} | {} |\n",
                        i.name,
                        if i.pass { "PASS" } else { "FAIL" },
                        i.detail.replace('|', "\\|")
                    ));
                }
                out.push('\n');
            }
            ResultItem::ExceptionalPairs { name, report: r } => {
                out.push_str(&format!("## {name}\n\n"));
                out.push_str(&format!("- candidates: {}\n", fmt_pairs(&r.candidates)));
                out.push_str(&format!("- survivors: {}\n\n", fmt_pairs(&r.survivors)));
            }
            other => {
                // fall back to the plain renderer, fenced
                let mut body = String::new();
                plain_item(other, &mut body);
                out.push_str(&format!(
                    "## {}\n\n```\n{}\n```\n\n",
                    other.name(),
                    body.trim_end()
                ));
            }
        }
    }
    out.push_str(&format!("verdict: **{}**\n", verdict_name(report.verdict)));
    out
}

/// Optional JSON config file, pointed to by `K3CERT_CONFIG`. Unknown keys
/// are rejected.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub search_bound: Option<i128>,
    pub n_window: Option<i128>,
    pub modulus_list: Option<Vec<i128>>,
}

pub fn load_config_from_env() -> Result<FileConfig> {
    match std::env::var_os(CONFIG_ENV_VAR) {
        None => Ok(FileConfig::default()),
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| {
                Error::InvalidArgument(format!("cannot read config {}: {e}", path.to_string_lossy()))
            })?;
            let cfg: FileConfig = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidArgument(format!("bad config file: {e}")))?;
            if let Some(b) = cfg.search_bound {
                if b < 1 {
                    return Err(Error::InvalidArgument(format!("config search_bound {b} < 1")));
                }
            }
            if let Some(w) = cfg.n_window {
                if w < 2 {
                    return Err(Error::InvalidArgument(format!("config n_window {w} < 2")));
                }
            }
            if let Some(ms) = &cfg.modulus_list {
                if ms.iter().any(|&m| m < 2) {
                    return Err(Error::InvalidArgument("config moduli must be >= 2".into()));
                }
            }
            Ok(cfg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report::new(
            "rho --g 11 --r 2 --d 9".into(),
            vec![ResultItem::Scalar { name: "rho".into(), value: -1 }],
            Verdict::Computed,
        )
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let text = emit_report(&r, Format::Json);
        let back = parse_report(&text).unwrap();
        assert_eq!(r, back);
    }

    #[test]
    fn plain_single_scalar_is_bare() {
        assert_eq!(emit_report(&sample(), Format::Plain), "-1\n");
    }

    #[test]
    fn empty_results_is_no_op() {
        let r = Report::new("x".into(), vec![], Verdict::Certified);
        assert_eq!(r.verdict, Verdict::NoOp);
    }

    #[test]
    fn emission_is_deterministic() {
        let r = sample();
        assert_eq!(emit_report(&r, Format::Json), emit_report(&r, Format::Json));
        assert_eq!(emit_report(&r, Format::Markdown), emit_report(&r, Format::Markdown));
    }

    #[test]
    fn markdown_thresholds_table() {
        let rows = vec![ThresholdRow {
            name: "nene".into(),
            value: "121/12".into(),
            direction: bn::Direction::AtLeast,
            satisfied: false,
        }];
        let r = Report::new(
            "thresholds".into(),
            vec![ResultItem::Thresholds { name: "thresholds".into(), rows }],
            Verdict::Computed,
        );
        let md = emit_report(&r, Format::Markdown);
        assert!(md.contains("| nene | >= | 121/12 | no |"), "{md}");
    }
}
