use docclone::analyzer::{analyze, AnalyzerConfig, Severity};
use docclone::corpus::{MemberKind, MemberRef, Scope};
use docclone::detector::{comparable_text, CloneKind, CloneRecord};
use docclone::extractor::{clean_text, Param};
use docclone::similarity::porter::stem;
use docclone::similarity::{Element, Lexicon};
use docclone::MethodInfo;
use proptest::prelude::*;

fn method(name: String, ret: &str, params: Vec<(String, String)>) -> MethodInfo {
    let params = params
        .into_iter()
        .map(|(type_name, name)| Param { type_name, name })
        .collect();
    MethodInfo::new(name, false, params, ret, None, 0)
}

fn record(kind: CloneKind, text: &str) -> CloneRecord {
    let r = |index| MemberRef {
        class: 0,
        kind: MemberKind::Method,
        index,
    };
    CloneRecord {
        class1_fqn: "p.C".into(),
        class2_fqn: "p.C".into(),
        elem1_sig: String::new(),
        elem2_sig: String::new(),
        kind,
        cloned_text: text.into(),
        legit: false,
        scope: Scope::IntraClass,
        aux: None,
        first: r(0),
        second: r(1),
    }
}

fn ident() -> impl Strategy<Value = String> {
    "[a-z]{2,6}([A-Z][a-z]{2,6}){0,2}"
}

fn words() -> impl Strategy<Value = String> {
    prop::collection::vec("[a-zA-Z]{1,8}\\.?", 0..10).prop_map(|w| w.join(" "))
}

fn kind() -> impl Strategy<Value = CloneKind> {
    prop::sample::select(vec![
        CloneKind::Whole,
        CloneKind::FreeText,
        CloneKind::Param,
        CloneKind::Return,
        CloneKind::Throws,
    ])
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn clean_text_is_idempotent(raw in "[ -~\n]{0,80}") {
        let once = clean_text(&raw);
        prop_assert_eq!(clean_text(&once), once);
    }

    #[test]
    fn clean_text_handles_markup(parts in prop::collection::vec(
        prop::sample::select(vec!["<p>", "</p>", "{@code x}", "{@link Y}", "{@", "}", "<b>", "word", " ", "\n@see Z\n", "<"]),
        0..12,
    )) {
        let raw: String = parts.concat();
        let once = clean_text(&raw);
        prop_assert_eq!(clean_text(&once), once.clone());
        prop_assert!(!once.contains("  "));
    }

    #[test]
    fn comparable_text_is_idempotent(text in words(), strict in any::<bool>()) {
        let once = comparable_text(&text, strict);
        prop_assert_eq!(comparable_text(&once, strict), once);
    }

    #[test]
    fn stem_is_total(word in "[a-z]{0,15}") {
        let s = stem(&word);
        prop_assert!(s.len() <= word.len());
        prop_assert!(word.starts_with(&s[..s.len().min(1)]));
    }

    #[test]
    fn analyze_is_symmetric(
        n1 in ident(), n2 in ident(),
        p1 in prop::collection::vec((ident(), ident()), 0..3),
        p2 in prop::collection::vec((ident(), ident()), 0..3),
        k in kind(), text in words(),
    ) {
        let (m1, m2) = (method(n1, "Object", p1), method(n2, "Object", p2));
        let lex = Lexicon::builtin();
        let cfg = AnalyzerConfig::default();
        let rec = record(k, &text);
        let mut swapped = rec.clone();
        std::mem::swap(&mut swapped.first, &mut swapped.second);
        let a = analyze(&rec, Element::Method(&m1), Element::Method(&m2), &cfg, &lex);
        let b = analyze(&swapped, Element::Method(&m2), Element::Method(&m1), &cfg, &lex);
        prop_assert_eq!(a.severity, b.severity);
        prop_assert_eq!(a.m1_sim, b.m2_sim);
        prop_assert_eq!(a.m2_sim, b.m1_sim);
        if a.m1_sim != a.m2_sim {
            prop_assert_eq!(a.owner, b.owner);
        }
    }

    #[test]
    fn raising_min_threshold_keeps_mild(
        n1 in ident(), n2 in ident(), k in kind(), text in words(), bump in 0.0f64..0.24,
    ) {
        let (m1, m2) = (method(n1, "Object", vec![]), method(n2, "Object", vec![]));
        let lex = Lexicon::builtin();
        let base = AnalyzerConfig::default();
        let raised = AnalyzerConfig { min_threshold: base.min_threshold + bump, ..base };
        let rec = record(k, &text);
        let a = analyze(&rec, Element::Method(&m1), Element::Method(&m2), &base, &lex);
        let b = analyze(&rec, Element::Method(&m1), Element::Method(&m2), &raised, &lex);
        if a.severity == Severity::Mild {
            prop_assert_eq!(b.severity, Severity::Mild);
        }
    }

    #[test]
    fn owner_implies_gap(n1 in ident(), n2 in ident(), k in kind(), text in words()) {
        let (m1, m2) = (method(n1, "Object", vec![]), method(n2, "Object", vec![]));
        let cfg = AnalyzerConfig::default();
        let r = analyze(&record(k, &text), Element::Method(&m1), Element::Method(&m2), &cfg, &Lexicon::builtin());
        prop_assert!(!r.messages.is_empty());
        if r.owner.is_some() {
            prop_assert_eq!(r.severity, Severity::High);
            prop_assert!((r.m1_sim.unwrap() - r.m2_sim.unwrap()).abs() > cfg.diff_threshold);
        }
    }
}
