//! Random corpora and a brute-force clone comparator shared by the
//! integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use docclone::corpus::Scope;
use docclone::detector::{CloneRecord, DetectorConfig};
use docclone::extractor::{parse_javadoc, Param};
use docclone::{ClassInfo, Corpus, FieldInfo, MethodInfo, RawJavadoc};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

const METHOD_NAMES: &[&str] = &["get", "put", "open", "close"];
const PARAMS: &[(&str, &str)] = &[
    ("int", "x"),
    ("String", "name"),
    ("long", "id"),
    ("String", "path"),
];
const RETURN_TYPES: &[&str] = &["int", "String", "List<T>", "Node", "void"];
const FREE_TEXTS: &[&str] = &[
    "",
    "Returns the value.",
    "returns the value",
    "Opens the stream.",
];
const PARAM_TEXTS: &[&str] = &["the value", "The value.", "the path to open"];
const RETURN_TEXTS: &[&str] = &["the node", "The node.", "true or false"];
const THROWS: &[(&str, &str)] = &[
    ("IOException", "on error"),
    ("java.io.IOException", "if the file cannot be read"),
    ("SQLException", "if the file cannot be read"),
];
const FIELD_NAMES: &[&str] = &["size", "count"];
const FIELD_DOCS: &[&str] = &["The size.", "the size", "Number of items."];

fn pick<'a, T>(rng: &mut StdRng, items: &'a [T]) -> &'a T {
    items.choose(rng).unwrap()
}

fn random_doc(rng: &mut StdRng, params: &[Param], has_return: bool) -> String {
    let mut lines = vec![pick(rng, FREE_TEXTS).to_string()];
    for p in params {
        if rng.gen_bool(0.6) {
            lines.push(format!("@param {} {}", p.name, pick(rng, PARAM_TEXTS)));
        }
    }
    if has_return && rng.gen_bool(0.6) {
        lines.push(format!("@return {}", pick(rng, RETURN_TEXTS)));
    }
    if rng.gen_bool(0.3) {
        let (t, text) = pick(rng, THROWS);
        lines.push(format!("@throws {t} {text}"));
    }
    lines.join("\n")
}

/// A random corpus and its intended superclass links (fqn to fqn).
pub fn random_corpus(
    rng: &mut StdRng,
    max_classes: usize,
    max_members: usize,
) -> (Corpus, BTreeMap<String, String>) {
    let n = rng.gen_range(1..=max_classes);
    let mut classes = Vec::new();
    let mut parents = BTreeMap::new();
    for k in 0..n {
        let package = format!("pkg{}", k % 2);
        let simple = format!("C{k}");
        let fqn = format!("{package}.{simple}");
        let mut supertype_name = None;
        if k > 0 && rng.gen_bool(0.5) {
            let j = rng.gen_range(0..k);
            let parent_fqn = format!("pkg{}.C{j}", j % 2);
            // same-package parents by simple name, others fully qualified
            supertype_name = Some(if j % 2 == k % 2 {
                format!("C{j}")
            } else {
                parent_fqn.clone()
            });
            parents.insert(fqn.clone(), parent_fqn);
        }
        let mut methods = Vec::new();
        let mut fields = Vec::new();
        for order in 0..rng.gen_range(0..=max_members) {
            if rng.gen_bool(0.75) {
                let ctor = rng.gen_bool(0.2);
                let name = if ctor {
                    simple.clone()
                } else {
                    pick(rng, METHOD_NAMES).to_string()
                };
                let count = rng.gen_range(0..=2);
                let params: Vec<Param> = PARAMS
                    .choose_multiple(rng, count)
                    .map(|(t, n)| Param {
                        type_name: t.to_string(),
                        name: n.to_string(),
                    })
                    .collect();
                let ret = if ctor { "" } else { pick(rng, RETURN_TYPES) };
                let doc = rng.gen_bool(0.85).then(|| RawJavadoc {
                    text: random_doc(rng, &params, !ret.is_empty() && ret != "void"),
                });
                methods.push(MethodInfo::new(name, ctor, params, ret, doc, order));
            } else {
                let doc = rng.gen_bool(0.85).then(|| RawJavadoc {
                    text: pick(rng, FIELD_DOCS).to_string(),
                });
                fields.push(FieldInfo {
                    name: pick(rng, FIELD_NAMES).to_string(),
                    type_name: "int".into(),
                    raw_doc: doc,
                    decl_order: order,
                });
            }
        }
        classes.push(ClassInfo {
            fqn,
            simple_name: simple,
            package,
            supertype_name,
            imports: vec![],
            methods,
            fields,
            source_path: PathBuf::from(format!("C{k}.java")),
            decl_order: 0,
        });
    }
    (Corpus::from_classes(classes).resolve_supertypes(), parents)
}

/// Comparable projection of a clone record.
pub type Row = (
    String,
    String,
    String,
    String,
    String,
    String,
    bool,
    Option<(String, String)>,
);

pub fn row(r: &CloneRecord) -> Row {
    (
        r.class1_fqn.clone(),
        r.elem1_sig.clone(),
        r.class2_fqn.clone(),
        r.elem2_sig.clone(),
        r.kind.label().to_string(),
        r.cloned_text.clone(),
        r.legit,
        r.aux.clone(),
    )
}

type Found = (&'static str, String, Option<(String, String)>);

enum El<'a> {
    M(&'a MethodInfo),
    F(&'a FieldInfo),
}

fn key(text: &str) -> String {
    let t = text
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase();
    t.trim_end_matches('.').trim_end().to_string()
}

fn last_segment(t: &str) -> &str {
    t.rsplit('.').next().unwrap()
}

fn oracle_legit(
    kind: &str,
    text: &str,
    aux: &Option<(String, String)>,
    a: (&str, &El),
    b: (&str, &El),
    cfg: &DetectorConfig,
) -> bool {
    match (a.1, b.1) {
        (El::M(m1), El::M(m2)) => {
            if m1.is_constructor
                && m2.is_constructor
                && m1.params.is_empty()
                && m2.params.is_empty()
            {
                return true;
            }
            if kind == "Whole" {
                return false;
            }
            if m1.simple_name == m2.simple_name {
                return true;
            }
            let (x, y) = aux.clone().unwrap_or_default();
            match kind {
                "@param" => x == y,
                "@return" => {
                    let simple = ["int", "long", "boolean", "void", "String"];
                    m1.return_type == m2.return_type && !simple.contains(&m1.return_type.as_str())
                }
                "@throws" => {
                    let generic = cfg.generic_throws_patterns.iter().any(|p| p.is_match(text));
                    last_segment(&x) == last_segment(&y)
                        && text.split_whitespace().count() >= cfg.min_throws_words
                        && !generic
                }
                _ => false,
            }
        }
        (El::F(f1), El::F(f2)) => a.0 != b.0 && f1.name == f2.name,
        _ => unreachable!(),
    }
}

/// Every clone of one scope, found by comparing all member pairs directly.
pub fn brute_force(corpus: &Corpus, parents: &BTreeMap<String, String>, scope: Scope) -> Vec<Row> {
    let cfg = DetectorConfig::default();
    let is_ancestor = |anc: &str, of: &str| {
        let mut cur = parents.get(of);
        while let Some(p) = cur {
            if p == anc {
                return true;
            }
            cur = parents.get(p);
        }
        false
    };

    let mut members: Vec<(&str, usize, El, &RawJavadoc)> = Vec::new();
    for c in &corpus.classes {
        for m in &c.methods {
            if let Some(d) = &m.raw_doc {
                members.push((&c.fqn, m.decl_order, El::M(m), d));
            }
        }
        for f in &c.fields {
            if let Some(d) = &f.raw_doc {
                members.push((&c.fqn, f.decl_order, El::F(f), d));
            }
        }
    }
    members.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));

    let mut rows = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let (c1, _, e1, d1) = &members[i];
            let (c2, _, e2, d2) = &members[j];
            let in_scope = match scope {
                Scope::IntraClass => c1 == c2,
                Scope::Hierarchy => c1 != c2 && (is_ancestor(c1, c2) || is_ancestor(c2, c1)),
                Scope::InterClass => c1 != c2 && !is_ancestor(c1, c2) && !is_ancestor(c2, c1),
            };
            if !in_scope {
                continue;
            }
            let (p1, p2) = (parse_javadoc(d1), parse_javadoc(d2));
            let same = |a: &str, b: &str| !key(a).is_empty() && key(a) == key(b);
            let mut found: Vec<Found> = Vec::new();
            let (s1, s2) = match (e1, e2) {
                (El::M(m1), El::M(m2)) => {
                    if same(&p1.whole_text, &p2.whole_text) {
                        found.push(("Whole", p1.whole_text.clone(), None));
                    } else {
                        if same(&p1.free_text, &p2.free_text) {
                            found.push(("Summary", p1.free_text.clone(), None));
                        }
                        for (n1, t1) in &p1.params {
                            for (n2, t2) in &p2.params {
                                if same(t1, t2) {
                                    found.push((
                                        "@param",
                                        t1.clone(),
                                        Some((n1.clone(), n2.clone())),
                                    ));
                                }
                            }
                        }
                        if let (Some(r1), Some(r2)) = (&p1.returns, &p2.returns) {
                            if same(r1, r2) {
                                found.push(("@return", r1.clone(), None));
                            }
                        }
                        for (n1, t1) in &p1.throws_list {
                            for (n2, t2) in &p2.throws_list {
                                if same(t1, t2) {
                                    found.push((
                                        "@throws",
                                        t1.clone(),
                                        Some((n1.clone(), n2.clone())),
                                    ));
                                }
                            }
                        }
                    }
                    (m1.signature.clone(), m2.signature.clone())
                }
                (El::F(f1), El::F(f2)) => {
                    if same(&p1.whole_text, &p2.whole_text) {
                        found.push(("Field", p1.whole_text.clone(), None));
                    }
                    (f1.name.clone(), f2.name.clone())
                }
                _ => continue,
            };
            for (kind, text, aux) in found {
                let legit = oracle_legit(kind, &text, &aux, (c1, e1), (c2, e2), &cfg);
                rows.push((
                    c1.to_string(),
                    s1.clone(),
                    c2.to_string(),
                    s2.clone(),
                    kind.to_string(),
                    text,
                    legit,
                    aux,
                ));
            }
        }
    }
    rows
}

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}
