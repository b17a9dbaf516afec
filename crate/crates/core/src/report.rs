//! Pipeline orchestration, CSV record file and severity reports.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::analyzer::{analyze, AnalysisResult, AnalyzerConfig, Severity};
use crate::corpus::{build_corpus, pairs, Corpus, Member, Scope, Target};
use crate::detector::{CloneRecord, Detector, DetectorConfig};
use crate::error::{Error, Result};
use crate::similarity::{AbbrevTable, Element, Lexicon, StopwordSet};

pub const CSV_HEADER: [&str; 6] = [
    "class",
    "element1",
    "element2",
    "kind",
    "cloned_text",
    "legit",
];
pub const DEFAULT_CSV_NAME: &str = "clones.csv";
pub const GROUPS_FILE: &str = "duplicate_groups.txt";

/// File name of the text report for one severity.
pub fn report_file_name(severity: Severity) -> String {
    format!("{}_severity.txt", severity.name())
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub roots: Vec<PathBuf>,
    pub scope: Scope,
    pub target: Target,
    pub out_dir: PathBuf,
    pub analyzer: AnalyzerConfig,
    pub detector: DetectorConfig,
    pub abbrev_path: Option<PathBuf>,
    pub stopword_path: Option<PathBuf>,
    pub patterns_path: Option<PathBuf>,
    pub strict_case: bool,
    pub group_duplicates: bool,
    pub csv_name: String,
}

impl RunConfig {
    pub fn new(roots: Vec<PathBuf>, out_dir: impl Into<PathBuf>) -> Self {
        RunConfig {
            roots,
            scope: Scope::IntraClass,
            target: Target::All,
            out_dir: out_dir.into(),
            analyzer: AnalyzerConfig::default(),
            detector: DetectorConfig::default(),
            abbrev_path: None,
            stopword_path: None,
            patterns_path: None,
            strict_case: false,
            group_duplicates: false,
            csv_name: DEFAULT_CSV_NAME.to_string(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunSummary {
    pub classes: usize,
    pub total: usize,
    pub legit: usize,
    pub high: usize,
    pub mild: usize,
    pub low: usize,
    /// Non-fatal problems met while reading the sources.
    pub warnings: Vec<String>,
    pub csv_path: PathBuf,
    pub report_paths: Vec<PathBuf>,
}

impl RunSummary {
    pub fn count(&self, severity: Severity) -> usize {
        match severity {
            Severity::High => self.high,
            Severity::Mild => self.mild,
            Severity::Low => self.low,
        }
    }
}

/// `fqn1`, or `fqn1|fqn2` for cross-class records.
pub fn class_column(record: &CloneRecord) -> String {
    if record.class1_fqn == record.class2_fqn {
        record.class1_fqn.clone()
    } else {
        format!("{}|{}", record.class1_fqn, record.class2_fqn)
    }
}

/// Writes the CSV rows for `records` and returns the row count.
pub fn write_csv_to<W: Write>(records: &[CloneRecord], out: W) -> Result<usize> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for r in records {
        writer.write_record([
            class_column(r).as_str(),
            &r.elem1_sig,
            &r.elem2_sig,
            r.kind.label(),
            &r.cloned_text,
            if r.legit { "true" } else { "false" },
        ])?;
    }
    writer.flush().map_err(csv::Error::from)?;
    Ok(records.len())
}

pub fn write_csv(records: &[CloneRecord], path: &Path) -> Result<usize> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_csv_to(records, std::io::BufWriter::new(file))
}

/// Renders one report entry. `number` is the record's 1-based CSV row.
///
/// Hierarchy entries name the subclass first, whatever the record order.
pub fn render_entry(
    number: usize,
    result: &AnalysisResult,
    csv_name: &str,
    corpus: &Corpus,
) -> String {
    let r = &result.record;
    let mut out = format!("---- Record #{number} file:{csv_name} ----\n");
    if r.class1_fqn == r.class2_fqn {
        out.push_str(&format!("In class: {}\n", r.class1_fqn));
    } else if r.scope == Scope::Hierarchy {
        let (sub, sup) = if corpus.is_ancestor(r.first.class, r.second.class) {
            (&r.class2_fqn, &r.class1_fqn)
        } else {
            (&r.class1_fqn, &r.class2_fqn)
        };
        out.push_str(&format!("In class: {sub}\nAnd its superclass: {sup}\n"));
    } else {
        out.push_str(&format!(
            "In class: {}\nAnd class: {}\n",
            r.class1_fqn, r.class2_fqn
        ));
    }
    out.push('\n');
    for (i, message) in result.messages.iter().enumerate() {
        out.push_str(&format!("{}) {message}\n\n", i + 1));
    }
    out
}

/// Writes the three severity reports; every file is created, possibly empty.
pub fn write_reports(
    results: &[(usize, AnalysisResult)],
    csv_name: &str,
    out_dir: &Path,
    corpus: &Corpus,
) -> Result<Vec<PathBuf>> {
    let mut paths = Vec::new();
    for severity in Severity::ALL {
        let text: String = results
            .iter()
            .filter(|(_, res)| res.severity == severity)
            .map(|(n, res)| render_entry(*n, res, csv_name, corpus))
            .collect();
        let path = out_dir.join(report_file_name(severity));
        fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
        paths.push(path);
    }
    Ok(paths)
}

/// Groups non-legit records sharing kind and cloned text, for triage.
pub fn render_groups(results: &[(usize, AnalysisResult)]) -> String {
    let mut groups: BTreeMap<(String, &str), Vec<usize>> = BTreeMap::new();
    for (n, res) in results {
        groups
            .entry((res.record.kind.label().to_string(), &res.record.cloned_text))
            .or_default()
            .push(*n);
    }
    let mut listed: Vec<_> = groups.into_iter().filter(|(_, ns)| ns.len() > 1).collect();
    listed.sort_by_key(|(_, ns)| ns[0]);
    let mut out = String::new();
    for (i, ((kind, text), numbers)) in listed.iter().enumerate() {
        let refs: Vec<String> = numbers.iter().map(|n| format!("#{n}")).collect();
        out.push_str(&format!(
            "---- Group #{} ({} records) ----\n({kind}){text}\nRecords: {}\n\n",
            i + 1,
            numbers.len(),
            refs.join(", ")
        ));
    }
    out
}

fn element<'a>(corpus: &'a Corpus, member: crate::corpus::MemberRef) -> Element<'a> {
    match corpus.member(member) {
        Member::Method(m) => Element::Method(m),
        Member::Field(f) => Element::Field(f),
    }
}

/// Analyzes every non-legit record, keeping its 1-based CSV row number.
pub fn analyze_records(
    records: &[CloneRecord],
    corpus: &Corpus,
    cfg: &AnalyzerConfig,
    lexicon: &Lexicon,
) -> Vec<(usize, AnalysisResult)> {
    records
        .par_iter()
        .enumerate()
        .filter(|(_, r)| !r.legit)
        .map(|(i, r)| {
            let res = analyze(
                r,
                element(corpus, r.first),
                element(corpus, r.second),
                cfg,
                lexicon,
            );
            (i + 1, res)
        })
        .collect()
}

/// Everything the reports are written from.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub corpus: Corpus,
    /// In CSV row order.
    pub records: Vec<CloneRecord>,
    /// Non-legit records with their 1-based CSV row numbers.
    pub results: Vec<(usize, AnalysisResult)>,
}

/// Runs extraction, detection and analysis without writing anything.
pub fn analyze_roots(cfg: &RunConfig) -> Result<Analysis> {
    cfg.analyzer.validate()?;
    let mut detector_cfg = cfg.detector.clone();
    detector_cfg.strict_case |= cfg.strict_case;
    if let Some(path) = &cfg.patterns_path {
        detector_cfg.load_patterns(path)?;
    }
    detector_cfg.validate()?;
    let lexicon = Lexicon {
        abbrev: match &cfg.abbrev_path {
            Some(p) => AbbrevTable::from_file(p)?,
            None => AbbrevTable::builtin(),
        },
        stop: match &cfg.stopword_path {
            Some(p) => StopwordSet::from_file(p)?,
            None => StopwordSet::builtin(),
        },
    };

    let corpus = build_corpus(&cfg.roots)?.resolve_supertypes();
    let element_pairs = pairs(&corpus, cfg.scope, cfg.target);
    let records = Detector::new(&corpus, &detector_cfg).detect(&element_pairs, cfg.scope);
    let results = analyze_records(&records, &corpus, &cfg.analyzer, &lexicon);
    Ok(Analysis {
        corpus,
        records,
        results,
    })
}

/// Writes the CSV file, the severity reports and the optional groups file.
pub fn write_outputs(cfg: &RunConfig, analysis: &Analysis) -> Result<RunSummary> {
    let Analysis {
        corpus,
        records,
        results,
    } = analysis;
    fs::create_dir_all(&cfg.out_dir).map_err(|e| Error::io(&cfg.out_dir, e))?;
    let csv_path = cfg.out_dir.join(&cfg.csv_name);
    write_csv(records, &csv_path)?;
    let mut report_paths = write_reports(results, &cfg.csv_name, &cfg.out_dir, corpus)?;
    if cfg.group_duplicates {
        let path = cfg.out_dir.join(GROUPS_FILE);
        fs::write(&path, render_groups(results)).map_err(|e| Error::io(&path, e))?;
        report_paths.push(path);
    }

    let count = |s| results.iter().filter(|(_, r)| r.severity == s).count();
    Ok(RunSummary {
        classes: corpus.classes.len(),
        total: records.len(),
        legit: records.iter().filter(|r| r.legit).count(),
        high: count(Severity::High),
        mild: count(Severity::Mild),
        low: count(Severity::Low),
        warnings: corpus.warnings.clone(),
        csv_path,
        report_paths,
    })
}

/// Runs the whole pipeline and writes all outputs.
pub fn run(cfg: &RunConfig) -> Result<RunSummary> {
    write_outputs(cfg, &analyze_roots(cfg)?)
}
