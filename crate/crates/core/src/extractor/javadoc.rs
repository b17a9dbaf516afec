//! Javadoc block decomposition and text cleaning.

use std::sync::LazyLock;

use regex::Regex;

use super::{CommentDoc, RawJavadoc};

static HTML_TAG: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(
        r"(?is)<!--.*?-->|</?(?:a|abbr|b|big|blockquote|br|caption|center|cite|code|col|dd|del|dfn|div|dl|dt|em|font|h[1-6]|hr|i|img|ins|kbd|li|nobr|ol|p|pre|q|s|samp|small|span|strike|strong|sub|sup|table|tbody|td|tfoot|th|thead|tr|tt|u|ul|var)(?:\s[^<>]*)?/?>",
    )
    .unwrap()
});

/// Strips markup from a comment fragment and normalizes whitespace.
///
/// HTML tags, `@see` lines and `{@link}`/`{@linkplain}` constructs are
/// removed, `{@code X}` and `{@literal X}` keep their content, and
/// whitespace runs collapse to one space. The result is a fixpoint:
/// cleaning it again changes nothing.
pub fn clean_text(raw: &str) -> String {
    let mut current = clean_once(raw);
    loop {
        let next = clean_once(&current);
        if next == current {
            return current;
        }
        current = next;
    }
}

fn clean_once(raw: &str) -> String {
    let without_see: Vec<&str> = raw
        .lines()
        .filter(|line| !is_see_line(line.trim_start()))
        .collect();
    let text = resolve_inline_tags(&without_see.join("\n"));
    let text = HTML_TAG.replace_all(&text, " ");
    let text = text.replace("&nbsp;", " ");
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn is_see_line(line: &str) -> bool {
    line.strip_prefix("@see")
        .is_some_and(|rest| rest.is_empty() || rest.starts_with(char::is_whitespace))
}

/// Rewrites `{@tag content}` constructs; unbalanced ones are left alone.
fn resolve_inline_tags(text: &str) -> String {
    let chars: Vec<char> = text.chars().collect();
    let mut out = String::with_capacity(text.len());
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == '{' && chars.get(i + 1) == Some(&'@') {
            if let Some(close) = matching_brace(&chars, i) {
                let inner: String = chars[i + 2..close].iter().collect();
                let name_len = inner
                    .find(|c: char| !c.is_ascii_alphabetic())
                    .unwrap_or(inner.len());
                let (name, content) = inner.split_at(name_len);
                match name {
                    "link" | "linkplain" | "see" | "inheritDoc" | "docRoot" => out.push(' '),
                    _ => {
                        out.push(' ');
                        out.push_str(content.trim());
                        out.push(' ');
                    }
                }
                i = close + 1;
                continue;
            }
        }
        out.push(chars[i]);
        i += 1;
    }
    out
}

fn matching_brace(chars: &[char], open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (j, &c) in chars.iter().enumerate().skip(open) {
        match c {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 {
                    return Some(j);
                }
            }
            _ => {}
        }
    }
    None
}

/// A problem found while splitting a Javadoc block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocWarning(pub String);

/// Splits a Javadoc body into its labeled parts.
///
/// Text before the first block tag is the free text. `@exception` is read as
/// `@throws`. Tags other than `@param`, `@return` and `@throws` are dropped.
pub fn parse_javadoc(raw: &RawJavadoc) -> CommentDoc {
    parse_javadoc_checked(raw).0
}

/// Like [`parse_javadoc`], also returning warnings for malformed tags.
pub fn parse_javadoc_checked(raw: &RawJavadoc) -> (CommentDoc, Vec<DocWarning>) {
    let mut warnings = Vec::new();
    let mut free_lines = Vec::new();
    let mut blocks: Vec<(String, Vec<&str>)> = Vec::new();

    for line in raw.text.lines() {
        let trimmed = line.trim_start();
        if let Some(tag) = block_tag(trimmed) {
            let rest = &trimmed[1 + tag.len()..];
            blocks.push((tag.to_string(), vec![rest]));
        } else if let Some((_, lines)) = blocks.last_mut() {
            lines.push(line);
        } else {
            free_lines.push(line);
        }
    }

    let mut doc = CommentDoc {
        free_text: clean_text(&free_lines.join("\n")),
        ..CommentDoc::default()
    };
    let mut ordered = vec![doc.free_text.clone()];

    for (tag, lines) in blocks {
        let body = lines.join("\n");
        match tag.as_str() {
            "param" => {
                let (name, text) = split_first_word(&body);
                if name.is_empty() {
                    warnings.push(DocWarning("@param tag without a parameter name".into()));
                }
                let text = clean_text(text);
                ordered.push(text.clone());
                doc.params.push((name.to_string(), text));
            }
            "return" | "returns" => {
                let text = clean_text(&body);
                ordered.push(text.clone());
                match &mut doc.returns {
                    Some(existing) if !text.is_empty() => {
                        warnings.push(DocWarning("duplicate @return tag".into()));
                        if !existing.is_empty() {
                            existing.push(' ');
                        }
                        existing.push_str(&text);
                    }
                    Some(_) => {}
                    None => doc.returns = Some(text),
                }
            }
            "throws" | "exception" => {
                let (name, text) = split_first_word(&body);
                if name.is_empty() {
                    warnings.push(DocWarning(format!("@{tag} tag without an exception type")));
                }
                let text = clean_text(text);
                ordered.push(text.clone());
                doc.throws_list.push((name.to_string(), text));
            }
            _ => {}
        }
    }

    doc.whole_text = ordered
        .into_iter()
        .filter(|t| !t.is_empty())
        .collect::<Vec<_>>()
        .join(" ");
    (doc, warnings)
}

/// Name of the block tag starting this line, if any.
fn block_tag(line: &str) -> Option<&str> {
    let rest = line.strip_prefix('@')?;
    let len = rest
        .find(|c: char| !c.is_ascii_alphanumeric() && c != '-')
        .unwrap_or(rest.len());
    (len > 0 && rest.as_bytes()[0].is_ascii_alphabetic()).then(|| &rest[..len])
}

fn split_first_word(body: &str) -> (&str, &str) {
    let body = body.trim_start();
    match body.find(char::is_whitespace) {
        Some(end) => (&body[..end], &body[end..]),
        None => (body, ""),
    }
}
