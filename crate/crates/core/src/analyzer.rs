//! Severity ranking of non-legitimate clones.

use std::fmt;

use crate::corpus::MemberRef;
use crate::detector::{CloneKind, CloneRecord};
use crate::error::{Error, Result};
use crate::extractor::MethodInfo;
use crate::similarity::{cosine, field_name_bow, method_bow, text_bow, Element, Lexicon};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyzerConfig {
    /// Both similarities below this make a clone MILD.
    pub min_threshold: f64,
    /// Both similarities above this make a clone LOW.
    pub high_threshold: f64,
    /// Similarity gap above which one element owns the comment.
    pub diff_threshold: f64,
}

impl Default for AnalyzerConfig {
    fn default() -> Self {
        AnalyzerConfig {
            min_threshold: 0.25,
            high_threshold: 0.50,
            diff_threshold: 0.1,
        }
    }
}

impl AnalyzerConfig {
    pub fn validate(&self) -> Result<()> {
        let ok = (0.0..=1.0).contains(&self.min_threshold)
            && (0.0..=1.0).contains(&self.high_threshold)
            && self.min_threshold < self.high_threshold
            && self.diff_threshold > 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::Config(format!(
                "thresholds must satisfy 0 <= min < high <= 1 and diff > 0 (got min {}, high {}, diff {})",
                self.min_threshold, self.high_threshold, self.diff_threshold
            )))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Severity {
    Low,
    Mild,
    High,
}

impl Severity {
    pub const ALL: [Severity; 3] = [Severity::High, Severity::Mild, Severity::Low];

    pub fn name(self) -> &'static str {
        match self {
            Severity::Low => "low",
            Severity::Mild => "mild",
            Severity::High => "high",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisResult {
    pub record: CloneRecord,
    pub severity: Severity,
    /// Absent when the whole-clone overloading branch exits early.
    pub m1_sim: Option<f64>,
    pub m2_sim: Option<f64>,
    /// The element the cloned comment most likely belongs to.
    pub owner: Option<MemberRef>,
    /// Report messages, in order, without numbering.
    pub messages: Vec<String>,
}

/// Constructors compare by class name, which is their simple name.
pub fn is_overloading(m1: &MethodInfo, m2: &MethodInfo) -> bool {
    m1.simple_name == m2.simple_name
}

/// Cosine between the distinct stems of an element signature and of the
/// cloned text. Fields contribute their name only.
pub fn element_similarity(element: Element<'_>, cloned_text: &str, lexicon: &Lexicon) -> f64 {
    let signature = match element {
        Element::Method(m) => method_bow(m, lexicon),
        Element::Field(f) => field_name_bow(f, lexicon),
    };
    cosine(
        &signature.vocabulary(),
        &text_bow(cloned_text, lexicon).vocabulary(),
    )
}

fn noun(element: Element<'_>) -> &'static str {
    match element {
        Element::Method(_) => "method",
        Element::Field(_) => "field",
    }
}

fn cloned_line(record: &CloneRecord) -> String {
    format!(
        "The comment you cloned:\"({}){}\"",
        record.kind.label(),
        record.cloned_text
    )
}

/// Assigns a severity to a non-legitimate clone.
///
/// `e1` and `e2` are the record's first and second elements. Branches are
/// tried in order and the first match wins; threshold comparisons are strict.
pub fn analyze(
    record: &CloneRecord,
    e1: Element<'_>,
    e2: Element<'_>,
    cfg: &AnalyzerConfig,
    lexicon: &Lexicon,
) -> AnalysisResult {
    let (a, b) = (e1.display(), e2.display());
    let result = |severity, sims: Option<(f64, f64)>, owner, messages| AnalysisResult {
        record: record.clone(),
        severity,
        m1_sim: sims.map(|s: (f64, f64)| s.0),
        m2_sim: sims.map(|s| s.1),
        owner,
        messages,
    };

    if record.kind == CloneKind::Whole {
        let whole = format!("You cloned the whole comment for methods <{a}> and <{b}>");
        if let (Element::Method(m1), Element::Method(m2)) = (e1, e2) {
            if is_overloading(m1, m2) {
                return result(
                    Severity::Mild,
                    None,
                    None,
                    vec![format!(
                        "{whole}\n\nThese methods overload each other. Please document the parameters that tell them apart."
                    )],
                );
            }
        }
    }

    let s1 = element_similarity(e1, &record.cloned_text, lexicon);
    let s2 = element_similarity(e2, &record.cloned_text, lexicon);
    let sims = Some((s1, s2));
    let owner_of = || {
        if s1 >= s2 {
            (record.first, a, b, e2)
        } else {
            (record.second, b, a, e1)
        }
    };
    let gap = (s1 - s2).abs() > cfg.diff_threshold;

    if record.kind == CloneKind::Whole {
        let mut messages = vec![format!(
            "You cloned the whole comment for methods <{a}> and <{b}>\n\nThis is not an overloading case. Check the differences among the two methods and document them."
        )];
        let mut owner = None;
        if gap {
            let (who, winner, loser, _) = owner_of();
            owner = Some(who);
            messages.push(format!(
                "{}\nseems more related to <{winner}> than <{loser}>",
                cloned_line(record)
            ));
        }
        return result(Severity::High, sims, owner, messages);
    }

    if s1 < cfg.min_threshold && s2 < cfg.min_threshold {
        return result(
            Severity::Mild,
            sims,
            None,
            vec![format!(
                "{}\nhas little to do with either <{a}> or <{b}>\n\nPlease fix this poorly informative comment.",
                cloned_line(record)
            )],
        );
    }
    if s1 > cfg.high_threshold && s2 > cfg.high_threshold {
        return result(
            Severity::Low,
            sims,
            None,
            vec![format!(
                "{}\nfits both <{a}> and <{b}>\n\nThis looks like a false positive.",
                cloned_line(record)
            )],
        );
    }
    if gap {
        let (who, winner, loser, victim) = owner_of();
        return result(
            Severity::High,
            sims,
            Some(who),
            vec![format!(
                "{}\nseems more related to <{winner}> than <{loser}>\n\nIt is strongly advised to document {} <{loser}> with a different, appropriate comment.",
                cloned_line(record),
                noun(victim)
            )],
        );
    }
    result(
        Severity::High,
        sims,
        None,
        vec![format!(
            "{}\nis equally related to <{a}> and <{b}>\n\nFix these comments so that each one describes its own {}.",
            cloned_line(record),
            noun(e1)
        )],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{MemberKind, Scope};
    use crate::extractor::{FieldInfo, Param};

    fn method(name: &str, ret: &str, params: &[(&str, &str)]) -> MethodInfo {
        MethodInfo::new(
            name,
            ret.is_empty(),
            params
                .iter()
                .map(|(t, n)| Param {
                    type_name: (*t).into(),
                    name: (*n).into(),
                })
                .collect(),
            ret,
            None,
            0,
        )
    }

    fn field(name: &str, type_name: &str) -> FieldInfo {
        FieldInfo {
            name: name.into(),
            type_name: type_name.into(),
            raw_doc: None,
            decl_order: 0,
        }
    }

    fn record(kind: CloneKind, text: &str, e1: Element<'_>, e2: Element<'_>) -> CloneRecord {
        let mref = |index| MemberRef {
            class: 0,
            kind: match e1 {
                Element::Method(_) => MemberKind::Method,
                Element::Field(_) => MemberKind::Field,
            },
            index,
        };
        CloneRecord {
            class1_fqn: "p.C".into(),
            class2_fqn: "p.C".into(),
            elem1_sig: e1.display().into(),
            elem2_sig: e2.display().into(),
            kind,
            cloned_text: text.into(),
            legit: false,
            scope: Scope::IntraClass,
            aux: None,
            first: mref(0),
            second: mref(1),
        }
    }

    fn run(kind: CloneKind, text: &str, e1: Element<'_>, e2: Element<'_>) -> AnalysisResult {
        analyze(
            &record(kind, text, e1, e2),
            e1,
            e2,
            &AnalyzerConfig::default(),
            &Lexicon::builtin(),
        )
    }

    #[test]
    fn config_validation() {
        assert!(AnalyzerConfig::default().validate().is_ok());
        for bad in [
            AnalyzerConfig {
                min_threshold: 0.6,
                ..Default::default()
            },
            AnalyzerConfig {
                high_threshold: 1.5,
                ..Default::default()
            },
            AnalyzerConfig {
                diff_threshold: 0.0,
                ..Default::default()
            },
            AnalyzerConfig {
                min_threshold: -0.1,
                ..Default::default()
            },
        ] {
            assert!(bad.validate().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn overloading() {
        let a = method(
            "deleteById",
            "UpdateResponse",
            &[("String", "c"), ("String", "id")],
        );
        let b = method("deleteById", "UpdateResponse", &[("String", "id")]);
        assert!(is_overloading(&a, &b));
        let c = method("matchesAllOf", "boolean", &[("CharSequence", "sequence")]);
        let d = method("matchesNoneOf", "boolean", &[("CharSequence", "sequence")]);
        assert!(!is_overloading(&c, &d));
        assert!(!is_overloading(
            &method("getLevel", "LogLevel", &[]),
            &method("getThrown", "Throwable", &[])
        ));
    }

    #[test]
    fn log_record_owner() {
        let lex = Lexicon::builtin();
        let (g, t) = (
            method("getLevel", "LogLevel", &[]),
            method("getThrown", "Throwable", &[]),
        );
        let text = "The LogLevel of this record.";
        let sg = element_similarity(Element::Method(&g), text, &lex);
        let st = element_similarity(Element::Method(&t), text, &lex);
        assert!((sg - 2.0 / 3.0).abs() < 1e-9, "{sg}");
        assert_eq!(st, 0.0);

        let r = run(
            CloneKind::Return,
            text,
            Element::Method(&g),
            Element::Method(&t),
        );
        assert_eq!(r.severity, Severity::High);
        assert_eq!(r.owner, Some(r.record.first));
        assert_eq!(
            r.messages,
            vec!["The comment you cloned:\"(@return)The LogLevel of this record.\"\nseems more related to <LogLevel getLevel()> than <Throwable getThrown()>\n\nIt is strongly advised to document method <Throwable getThrown()> with a different, appropriate comment."]
        );

        let swapped = run(
            CloneKind::Return,
            text,
            Element::Method(&t),
            Element::Method(&g),
        );
        assert_eq!(swapped.owner, Some(swapped.record.second));
        assert_eq!(swapped.m1_sim, r.m2_sim);
    }

    #[test]
    fn first_element_owner() {
        let first = method("pollFirst", "T", &[]);
        let n = method("pollN", "List<T>", &[("int", "n")]);
        let lex = Lexicon::builtin();
        assert_eq!(
            element_similarity(Element::Method(&n), "first element", &lex),
            0.0
        );
        let r = run(
            CloneKind::Return,
            "first element",
            Element::Method(&n),
            Element::Method(&first),
        );
        assert_eq!(r.severity, Severity::High);
        assert_eq!(r.owner, Some(r.record.second));
        assert!(r.messages[0]
            .contains("seems more related to <T pollFirst()> than <List pollN(int n)>"));
    }

    #[test]
    fn empty_text_scores_zero() {
        let m = method("getLevel", "LogLevel", &[]);
        assert_eq!(
            element_similarity(Element::Method(&m), "", &Lexicon::builtin()),
            0.0
        );
    }

    #[test]
    fn poor_info_is_mild() {
        let a = method("isLoginKeytabBased", "boolean", &[]);
        let b = method("isLoginTicketBased", "boolean", &[]);
        let r = run(
            CloneKind::Return,
            "true or false",
            Element::Method(&a),
            Element::Method(&b),
        );
        assert_eq!(r.severity, Severity::Mild);
        assert_eq!((r.m1_sim, r.m2_sim), (Some(0.0), Some(0.0)));
        assert!(r.owner.is_none());
    }

    #[test]
    fn whole_not_overloading() {
        let k = method("keysIt", "Iterator<KType>", &[]);
        let v = method("valuesIt", "Iterator<VType>", &[]);
        let r = run(
            CloneKind::Whole,
            "Returns a direct iterator over the keys.",
            Element::Method(&k),
            Element::Method(&v),
        );
        assert_eq!(r.severity, Severity::High);
        assert_eq!(r.owner, Some(r.record.first));
        assert_eq!(r.messages.len(), 2);
        assert_eq!(
            r.messages[0],
            "You cloned the whole comment for methods <Iterator keysIt()> and <Iterator valuesIt()>\n\nThis is not an overloading case. Check the differences among the two methods and document them."
        );
        assert_eq!(
            r.messages[1],
            "The comment you cloned:\"(Whole)Returns a direct iterator over the keys.\"\nseems more related to <Iterator keysIt()> than <Iterator valuesIt()>"
        );
    }

    #[test]
    fn whole_overloading_is_mild() {
        let a = method("put", "void", &[("int", "x")]);
        let b = method("put", "void", &[("long", "x")]);
        let r = run(
            CloneKind::Whole,
            "Stores a value.",
            Element::Method(&a),
            Element::Method(&b),
        );
        assert_eq!(r.severity, Severity::Mild);
        assert_eq!(r.m1_sim, None);
    }

    #[test]
    fn both_related_is_low() {
        let a = method("getValue", "Value", &[]);
        let b = method("setValue", "void", &[("Value", "value")]);
        let r = run(
            CloneKind::FreeText,
            "value",
            Element::Method(&a),
            Element::Method(&b),
        );
        assert_eq!(r.severity, Severity::Low);
    }

    #[test]
    fn equal_middle_sims_fall_through() {
        // Four stems each with one shared: both sims are exactly 0.5, which
        // is not above the high threshold.
        let a = method("closeInputStream", "Buffer", &[]);
        let b = method("closeOutputReader", "Cache", &[]);
        let r = run(
            CloneKind::FreeText,
            "Close.",
            Element::Method(&a),
            Element::Method(&b),
        );
        assert_eq!(r.m1_sim, Some(0.5));
        assert_eq!(r.m1_sim, r.m2_sim);
        assert_eq!(r.severity, Severity::High);
        assert!(r.owner.is_none());
        assert!(r.messages[0].contains("Fix these comments"));
    }

    #[test]
    fn field_owner_uses_name() {
        let c = field("cleanerExecutor", "ScheduledThreadPoolExecutor");
        let r = field("releaserExecutor", "ScheduledThreadPoolExecutor");
        let res = run(
            CloneKind::Field,
            "The executor service that runs the cacheCleaner.",
            Element::Field(&c),
            Element::Field(&r),
        );
        assert_eq!(res.severity, Severity::High);
        assert_eq!(res.owner, Some(res.record.first));
        assert!(res.messages[0].starts_with(
            "The comment you cloned:\"(Field)The executor service that runs the cacheCleaner.\"\nseems more related to <cleanerExecutor> than <releaserExecutor>"
        ));
        assert!(res.messages[0].contains("document field <releaserExecutor>"));
    }
}
