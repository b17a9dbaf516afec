//! Bag-of-words vocabularies for comments and signatures, and their cosine
//! similarity.
//!
//! Both sides go through the same normalization: identifier splitting,
//! abbreviation expansion, stopword removal and Porter stemming. Comment
//! text is first cut into sentences and words; signatures start directly
//! from their identifiers.

pub mod porter;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::Path;

use crate::error::{Error, Result};
use crate::extractor::{FieldInfo, MethodInfo};

const DEFAULT_STOPWORDS: &str = include_str!("../../data/stopwords.txt");
const DEFAULT_ABBREVIATIONS: &str = include_str!("../../data/abbreviations.txt");

/// Multiset of normalized tokens.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BagOfWords {
    counts: BTreeMap<String, u32>,
}

impl BagOfWords {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, token: impl Into<String>) {
        *self.counts.entry(token.into()).or_insert(0) += 1;
    }

    pub fn count(&self, token: &str) -> u32 {
        self.counts.get(token).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Number of distinct tokens.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.counts.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// The same tokens, each counted once.
    pub fn vocabulary(&self) -> BagOfWords {
        BagOfWords {
            counts: self.counts.keys().map(|k| (k.clone(), 1)).collect(),
        }
    }

    /// Every count multiplied by `factor`.
    pub fn scaled(&self, factor: u32) -> BagOfWords {
        assert!(factor > 0, "scale factor must be positive");
        BagOfWords {
            counts: self
                .counts
                .iter()
                .map(|(k, v)| (k.clone(), v * factor))
                .collect(),
        }
    }
}

impl<S: Into<String>> FromIterator<S> for BagOfWords {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        let mut bag = BagOfWords::new();
        for token in iter {
            bag.add(token);
        }
        bag
    }
}

/// Cosine of the angle between two count vectors; 0 when either is empty.
pub fn cosine(a: &BagOfWords, b: &BagOfWords) -> f64 {
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let dot: u64 = small
        .iter()
        .map(|(token, n)| u64::from(n) * u64::from(large.count(token)))
        .sum();
    let norm = |bag: &BagOfWords| -> u64 { bag.iter().map(|(_, n)| u64::from(n).pow(2)).sum() };
    let denom = ((norm(a) as f64) * (norm(b) as f64)).sqrt();
    (dot as f64 / denom).clamp(0.0, 1.0)
}

/// Abbreviation expansions keyed by lowercase word.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AbbrevTable {
    entries: HashMap<String, Vec<String>>,
}

impl AbbrevTable {
    /// The bundled table of common English, IT and Java abbreviations.
    pub fn builtin() -> Self {
        Self::parse(DEFAULT_ABBREVIATIONS).expect("bundled abbreviation table is valid")
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text).map_err(|msg| Error::Config(format!("{}: {msg}", path.display())))
    }

    /// Reads `abbr=expansion words` lines; `#` starts a comment.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let mut entries = HashMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = strip_comment(line);
            if line.is_empty() {
                continue;
            }
            let Some((abbr, expansion)) = line.split_once('=') else {
                return Err(format!("line {}: expected abbr=expansion", n + 1));
            };
            let abbr = abbr.trim().to_lowercase();
            let words: Vec<String> = expansion
                .split_whitespace()
                .map(str::to_lowercase)
                .collect();
            if abbr.is_empty() || words.is_empty() {
                return Err(format!("line {}: empty abbreviation or expansion", n + 1));
            }
            entries.insert(abbr, words);
        }
        Ok(AbbrevTable { entries })
    }

    pub fn insert(&mut self, abbr: &str, expansion: &[&str]) {
        assert!(!expansion.is_empty());
        self.entries.insert(
            abbr.to_lowercase(),
            expansion.iter().map(|w| w.to_lowercase()).collect(),
        );
    }

    pub fn expand(&self, word: &str) -> Option<&[String]> {
        self.entries.get(word).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopwordSet {
    words: HashSet<String>,
}

impl StopwordSet {
    /// The 174-word default English list.
    pub fn builtin() -> Self {
        Self::parse(DEFAULT_STOPWORDS)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(Self::parse(&text))
    }

    /// One word per line; `#` starts a comment.
    pub fn parse(text: &str) -> Self {
        let words = text
            .lines()
            .map(strip_comment)
            .filter(|l| !l.is_empty())
            .map(str::to_lowercase)
            .collect();
        StopwordSet { words }
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#')
        .map_or(line, |(before, _)| before)
        .trim()
}

/// Word tables shared by every similarity computation.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    pub abbrev: AbbrevTable,
    pub stop: StopwordSet,
}

impl Lexicon {
    pub fn builtin() -> Self {
        Lexicon {
            abbrev: AbbrevTable::builtin(),
            stop: StopwordSet::builtin(),
        }
    }
}

/// Splits an identifier into lowercase words.
///
/// Boundaries are non-alphanumeric characters (`_`, `$`, ...), letter/digit
/// transitions, lower-to-upper camel case, and the last capital of an
/// acronym run followed by lowercase (`XMLParser` is `xml`, `parser`).
pub fn split_identifier(ident: &str) -> Vec<String> {
    let mut words = Vec::new();
    for chunk in ident.split(|c: char| !c.is_alphanumeric()) {
        let chars: Vec<char> = chunk.chars().collect();
        let mut start = 0;
        for i in 1..chars.len() {
            let (prev, cur) = (chars[i - 1], chars[i]);
            let next = chars.get(i + 1).copied();
            let boundary = (prev.is_alphabetic() && cur.is_numeric())
                || (prev.is_numeric() && cur.is_alphabetic())
                || (prev.is_lowercase() && cur.is_uppercase())
                || (prev.is_uppercase()
                    && cur.is_uppercase()
                    && next.is_some_and(char::is_lowercase));
            if boundary {
                words.push(chars[start..i].iter().collect::<String>().to_lowercase());
                start = i;
            }
        }
        if start < chars.len() {
            words.push(chars[start..].iter().collect::<String>().to_lowercase());
        }
    }
    words
}

/// Expands abbreviations, drops stopwords, stems, and discards tokens
/// shorter than two characters. Order is preserved.
pub fn normalize_tokens<S: AsRef<str>>(words: &[S], lexicon: &Lexicon) -> Vec<String> {
    let mut out = Vec::new();
    for word in words {
        let word = word.as_ref();
        let expanded: Vec<&str> = match lexicon.abbrev.expand(word) {
            Some(expansion) => expansion.iter().map(String::as_str).collect(),
            None => vec![word],
        };
        for w in expanded {
            if lexicon.stop.contains(w) {
                continue;
            }
            let stem = porter::stem(w);
            if stem.chars().count() > 1 {
                out.push(stem);
            }
        }
    }
    out
}

/// Splits cleaned text into sentences ending in `.`, `!` or `?`.
pub fn sentences(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = 0;
    let bytes = text.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        let ends = matches!(b, b'.' | b'!' | b'?')
            && bytes.get(i + 1).is_none_or(|n| n.is_ascii_whitespace());
        if ends {
            let s = text[start..=i].trim();
            if !s.is_empty() {
                out.push(s);
            }
            start = i + 1;
        }
    }
    let tail = text[start..].trim();
    if !tail.is_empty() {
        out.push(tail);
    }
    out
}

/// Raw word tokens of one sentence: runs of identifier characters, with
/// inner apostrophes kept so contractions can match the stopword list.
fn sentence_words(sentence: &str) -> Vec<&str> {
    sentence
        .split(|c: char| !(c.is_alphanumeric() || c == '_' || c == '$' || c == '\''))
        .map(|w| w.trim_matches('\''))
        .filter(|w| !w.is_empty())
        .collect()
}

/// Bag of words for a cleaned comment text.
pub fn text_bow(text: &str, lexicon: &Lexicon) -> BagOfWords {
    let mut bag = BagOfWords::new();
    for sentence in sentences(text) {
        let mut words = Vec::new();
        for raw in sentence_words(sentence) {
            let lower = raw.to_lowercase();
            if raw.contains('\'') && lexicon.stop.contains(&lower) {
                continue;
            }
            words.extend(split_identifier(raw));
        }
        for token in normalize_tokens(&words, lexicon) {
            bag.add(token);
        }
    }
    bag
}

fn identifiers_bow<'a>(parts: impl IntoIterator<Item = &'a str>, lexicon: &Lexicon) -> BagOfWords {
    let words: Vec<String> = parts.into_iter().flat_map(split_identifier).collect();
    normalize_tokens(&words, lexicon).into_iter().collect()
}

/// Bag of words for a method: name, parameter types and names, return type.
pub fn method_bow(method: &MethodInfo, lexicon: &Lexicon) -> BagOfWords {
    let parts = std::iter::once(method.simple_name.as_str())
        .chain(
            method
                .params
                .iter()
                .flat_map(|p| [p.type_name.as_str(), p.name.as_str()]),
        )
        .chain(std::iter::once(method.return_type.as_str()));
    identifiers_bow(parts, lexicon)
}

/// Bag of words for a field: name and type.
pub fn field_bow(field: &FieldInfo, lexicon: &Lexicon) -> BagOfWords {
    identifiers_bow([field.name.as_str(), field.type_name.as_str()], lexicon)
}

/// Bag of words for a field name alone.
pub fn field_name_bow(field: &FieldInfo, lexicon: &Lexicon) -> BagOfWords {
    identifiers_bow([field.name.as_str()], lexicon)
}

/// A documented element as seen by the similarity stage.
#[derive(Debug, Clone, Copy)]
pub enum Element<'a> {
    Method(&'a MethodInfo),
    Field(&'a FieldInfo),
}

impl Element<'_> {
    /// `<...>` display name used in reports.
    pub fn display(&self) -> &str {
        match self {
            Element::Method(m) => &m.signature,
            Element::Field(f) => &f.name,
        }
    }
}

/// Bag of words for a method or field signature.
pub fn signature_bow(element: Element<'_>, lexicon: &Lexicon) -> BagOfWords {
    match element {
        Element::Method(m) => method_bow(m, lexicon),
        Element::Field(f) => field_bow(f, lexicon),
    }
}
