//! Whole-comment and comment-part clone detection with legitimacy filtering.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use regex::{Regex, RegexBuilder};

use crate::corpus::{Corpus, ElementPair, Member, MemberKind, MemberRef, Scope};
use crate::error::{Error, Result};
use crate::extractor::{parse_javadoc, CommentDoc, FieldInfo, MethodInfo};

const DEFAULT_GENERIC_THROWS: &str = include_str!("../data/generic_throws.txt");

/// Which part of the Javadoc block was cloned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CloneKind {
    Whole,
    FreeText,
    Param,
    Return,
    Throws,
    /// Field comments, which only carry free text.
    Field,
}

impl CloneKind {
    /// Label used in CSV rows and text reports.
    pub fn label(self) -> &'static str {
        match self {
            CloneKind::Whole => "Whole",
            CloneKind::FreeText => "Summary",
            CloneKind::Param => "@param",
            CloneKind::Return => "@return",
            CloneKind::Throws => "@throws",
            CloneKind::Field => "Field",
        }
    }
}

impl fmt::Display for CloneKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One pairwise clone.
#[derive(Debug, Clone, PartialEq)]
pub struct CloneRecord {
    pub class1_fqn: String,
    pub class2_fqn: String,
    /// Method signature or field name.
    pub elem1_sig: String,
    pub elem2_sig: String,
    pub kind: CloneKind,
    /// The cloned text as written on the first element.
    pub cloned_text: String,
    pub legit: bool,
    pub scope: Scope,
    /// Parameter names for `@param` clones, exception types for `@throws`.
    pub aux: Option<(String, String)>,
    pub first: MemberRef,
    pub second: MemberRef,
}

/// How the word-count and generic-pattern checks combine with the
/// same-exception-type exemption for `@throws` clones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThrowsPolicy {
    /// Same exception type is legit only when the text has enough words and
    /// is not generic.
    #[default]
    RequireDescriptive,
    /// Same exception type is always legit, and so is any short or generic
    /// text.
    ExemptGeneric,
}

#[derive(Debug, Clone)]
pub struct DetectorConfig {
    pub min_throws_words: usize,
    /// Matched case-insensitively against the whole cloned `@throws` text.
    pub generic_throws_patterns: Vec<Regex>,
    pub throws_policy: ThrowsPolicy,
    /// Compare texts case-sensitively and keep trailing periods.
    pub strict_case: bool,
}

impl Default for DetectorConfig {
    fn default() -> Self {
        DetectorConfig {
            min_throws_words: 4,
            generic_throws_patterns: parse_patterns(DEFAULT_GENERIC_THROWS, "<builtin>")
                .expect("bundled patterns compile"),
            throws_policy: ThrowsPolicy::default(),
            strict_case: false,
        }
    }
}

impl DetectorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.min_throws_words < 1 {
            return Err(Error::Config("min_throws_words must be at least 1".into()));
        }
        Ok(())
    }

    pub fn load_patterns(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        self.generic_throws_patterns = parse_patterns(&text, &path.display().to_string())?;
        Ok(())
    }

    fn is_generic_throws(&self, text: &str) -> bool {
        self.generic_throws_patterns
            .iter()
            .any(|p| p.is_match(text))
    }
}

/// One case-insensitive regular expression per line; `#` lines are comments.
pub fn parse_patterns(text: &str, source: &str) -> Result<Vec<Regex>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(n, l)| {
            RegexBuilder::new(l.trim())
                .case_insensitive(true)
                .build()
                .map_err(|source_err| Error::Pattern {
                    path: source.to_string(),
                    line: n + 1,
                    source: source_err,
                })
        })
        .collect()
}

/// Clone-equality key: whitespace collapsed and, unless `strict`,
/// lowercased with trailing periods removed.
pub fn comparable_text(part_text: &str, strict: bool) -> String {
    let collapsed = part_text.split_whitespace().collect::<Vec<_>>().join(" ");
    if strict {
        return collapsed;
    }
    collapsed.trim_end_matches('.').trim_end().to_lowercase()
}

const PRIMITIVE_LIKE: &[&str] = &[
    "boolean",
    "byte",
    "short",
    "int",
    "long",
    "float",
    "double",
    "char",
    "void",
    "Boolean",
    "Byte",
    "Short",
    "Integer",
    "Long",
    "Float",
    "Double",
    "Character",
    "Void",
    "String",
];

fn is_primitive_like(type_text: &str) -> bool {
    let t = type_text.strip_prefix("java.lang.").unwrap_or(type_text);
    PRIMITIVE_LIKE.contains(&t)
}

fn simple_type_name(name: &str) -> &str {
    name.rsplit('.').next().unwrap_or(name)
}

/// Member pair as seen by the legitimacy heuristics.
#[derive(Debug, Clone, Copy)]
pub enum ElementPairView<'a> {
    Methods(&'a MethodInfo, &'a MethodInfo),
    /// Fields with their declaring class names.
    Fields((&'a str, &'a FieldInfo), (&'a str, &'a FieldInfo)),
}

/// Decides whether a clone is justified by the code it documents.
///
/// `aux` carries the parameter names of `@param` clones and the exception
/// types of `@throws` clones.
pub fn is_legitimate(
    kind: CloneKind,
    cloned_text: &str,
    aux: Option<(&str, &str)>,
    pair: ElementPairView<'_>,
    cfg: &DetectorConfig,
) -> bool {
    match pair {
        ElementPairView::Methods(m1, m2) => {
            if m1.is_constructor
                && m2.is_constructor
                && m1.params.is_empty()
                && m2.params.is_empty()
            {
                return true;
            }
            if kind == CloneKind::Whole {
                return false;
            }
            if m1.simple_name == m2.simple_name {
                return true;
            }
            match (kind, aux) {
                (CloneKind::Throws, Some((t1, t2))) => {
                    let same_type = !t1.is_empty() && simple_type_name(t1) == simple_type_name(t2);
                    let words = cloned_text.split_whitespace().count();
                    let descriptive =
                        words >= cfg.min_throws_words && !cfg.is_generic_throws(cloned_text);
                    match cfg.throws_policy {
                        ThrowsPolicy::RequireDescriptive => same_type && descriptive,
                        ThrowsPolicy::ExemptGeneric => same_type || !descriptive,
                    }
                }
                (CloneKind::Param, Some((p1, p2))) => !p1.is_empty() && p1 == p2,
                (CloneKind::Return, _) => {
                    m1.return_type == m2.return_type && !is_primitive_like(&m1.return_type)
                }
                _ => false,
            }
        }
        ElementPairView::Fields((c1, f1), (c2, f2)) => {
            kind == CloneKind::Field && c1 != c2 && f1.name == f2.name
        }
    }
}

/// Kind, cloned text and auxiliary names of one detected clone.
type Found = (CloneKind, String, Option<(String, String)>);

/// Parsed comment of one member plus its comparison keys.
#[derive(Debug, Clone)]
struct Keyed {
    doc: CommentDoc,
    whole: String,
    free: String,
    params: Vec<String>,
    returns: String,
    throws: Vec<String>,
}

impl Keyed {
    fn new(doc: CommentDoc, strict: bool) -> Self {
        let key = |t: &str| comparable_text(t, strict);
        Keyed {
            whole: key(&doc.whole_text),
            free: key(&doc.free_text),
            params: doc.params.iter().map(|(_, t)| key(t)).collect(),
            returns: doc.returns.as_deref().map(key).unwrap_or_default(),
            throws: doc.throws_list.iter().map(|(_, t)| key(t)).collect(),
            doc,
        }
    }
}

/// Clone detector over one corpus, with every documented member parsed once.
pub struct Detector<'a> {
    corpus: &'a Corpus,
    cfg: &'a DetectorConfig,
    docs: HashMap<MemberRef, Keyed>,
}

impl<'a> Detector<'a> {
    pub fn new(corpus: &'a Corpus, cfg: &'a DetectorConfig) -> Self {
        let mut refs = Vec::new();
        for (class, info) in corpus.classes.iter().enumerate() {
            refs.extend((0..info.methods.len()).map(|index| MemberRef {
                class,
                kind: MemberKind::Method,
                index,
            }));
            refs.extend((0..info.fields.len()).map(|index| MemberRef {
                class,
                kind: MemberKind::Field,
                index,
            }));
        }
        let docs = refs
            .into_par_iter()
            .filter_map(|r| {
                let raw = corpus.member(r).raw_doc()?;
                Some((r, Keyed::new(parse_javadoc(raw), cfg.strict_case)))
            })
            .collect();
        Detector { corpus, cfg, docs }
    }

    pub fn doc(&self, member: MemberRef) -> Option<&CommentDoc> {
        self.docs.get(&member).map(|k| &k.doc)
    }

    /// Clone records for all pairs, in pair order.
    pub fn detect(&self, pairs: &[ElementPair], scope: Scope) -> Vec<CloneRecord> {
        pairs
            .par_iter()
            .map(|p| self.compare_pair(p, scope))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }

    /// Compares the comments of one pair.
    ///
    /// A whole-comment clone yields a single record and suppresses the
    /// per-part comparison.
    pub fn compare_pair(&self, pair: &ElementPair, scope: Scope) -> Vec<CloneRecord> {
        let (Some(k1), Some(k2)) = (self.docs.get(&pair.first), self.docs.get(&pair.second)) else {
            return Vec::new();
        };
        let mut found: Vec<Found> = Vec::new();

        match pair.kind {
            MemberKind::Field => {
                if !k1.whole.is_empty() && k1.whole == k2.whole {
                    found.push((CloneKind::Field, k1.doc.whole_text.clone(), None));
                }
            }
            MemberKind::Method => {
                if !k1.whole.is_empty() && k1.whole == k2.whole {
                    found.push((CloneKind::Whole, k1.doc.whole_text.clone(), None));
                } else {
                    if !k1.free.is_empty() && k1.free == k2.free {
                        found.push((CloneKind::FreeText, k1.doc.free_text.clone(), None));
                    }
                    for (i, a) in k1.params.iter().enumerate() {
                        for (j, b) in k2.params.iter().enumerate() {
                            if !a.is_empty() && a == b {
                                found.push((
                                    CloneKind::Param,
                                    k1.doc.params[i].1.clone(),
                                    Some((k1.doc.params[i].0.clone(), k2.doc.params[j].0.clone())),
                                ));
                            }
                        }
                    }
                    if !k1.returns.is_empty() && k1.returns == k2.returns {
                        let text = k1.doc.returns.clone().unwrap_or_default();
                        found.push((CloneKind::Return, text, None));
                    }
                    for (i, a) in k1.throws.iter().enumerate() {
                        for (j, b) in k2.throws.iter().enumerate() {
                            if !a.is_empty() && a == b {
                                found.push((
                                    CloneKind::Throws,
                                    k1.doc.throws_list[i].1.clone(),
                                    Some((
                                        k1.doc.throws_list[i].0.clone(),
                                        k2.doc.throws_list[j].0.clone(),
                                    )),
                                ));
                            }
                        }
                    }
                }
            }
        }

        let c1 = &self.corpus.classes[pair.first.class];
        let c2 = &self.corpus.classes[pair.second.class];
        let (view, sig1, sig2) = match (
            self.corpus.member(pair.first),
            self.corpus.member(pair.second),
        ) {
            (Member::Method(m1), Member::Method(m2)) => (
                ElementPairView::Methods(m1, m2),
                m1.signature.clone(),
                m2.signature.clone(),
            ),
            (Member::Field(f1), Member::Field(f2)) => (
                ElementPairView::Fields((&c1.fqn, f1), (&c2.fqn, f2)),
                f1.name.clone(),
                f2.name.clone(),
            ),
            _ => return Vec::new(),
        };

        found
            .into_iter()
            .map(|(kind, cloned_text, aux)| {
                let legit = is_legitimate(
                    kind,
                    &cloned_text,
                    aux.as_ref().map(|(a, b)| (a.as_str(), b.as_str())),
                    view,
                    self.cfg,
                );
                CloneRecord {
                    class1_fqn: c1.fqn.clone(),
                    class2_fqn: c2.fqn.clone(),
                    elem1_sig: sig1.clone(),
                    elem2_sig: sig2.clone(),
                    kind,
                    cloned_text,
                    legit,
                    scope,
                    aux,
                    first: pair.first,
                    second: pair.second,
                }
            })
            .collect()
    }
}

/// Convenience wrapper comparing a single pair.
pub fn compare_pair(
    pair: &ElementPair,
    corpus: &Corpus,
    scope: Scope,
    cfg: &DetectorConfig,
) -> Vec<CloneRecord> {
    Detector::new(corpus, cfg).compare_pair(pair, scope)
}
