//! A declaration-level Java tokenizer.
//!
//! Only what the declaration scanner needs survives: identifiers, single
//! punctuation characters and Javadoc blocks. Ordinary comments are dropped
//! and literals collapse into an opaque token.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Punct(char),
    /// Javadoc body with the `/**`, `*/` delimiters and line gutters removed.
    Doc(String),
    Literal,
}

impl Tok {
    pub(crate) fn is_punct(&self, c: char) -> bool {
        matches!(self, Tok::Punct(p) if *p == c)
    }

    pub(crate) fn is_ident(&self, s: &str) -> bool {
        matches!(self, Tok::Ident(i) if i == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct LexError {
    pub line: usize,
    pub what: &'static str,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.what)
    }
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Tok>, LexError> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let mut line = 1;

    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }

        if c == '/' && chars.get(i + 1) == Some(&'/') {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }

        if c == '/' && chars.get(i + 1) == Some(&'*') {
            let start = i;
            let Some(end) = find_block_end(&chars, i + 2) else {
                return Err(LexError {
                    line,
                    what: "unterminated block comment",
                });
            };
            let body: String = chars[start + 2..end].iter().collect();
            line += body.matches('\n').count();
            i = end + 2;
            // `/**/` is an empty ordinary comment, not a Javadoc block.
            if let Some(doc) = body.strip_prefix('*') {
                if end > start + 2 {
                    toks.push(Tok::Doc(strip_gutters(doc)));
                }
            }
            continue;
        }

        if c == '"' {
            if chars.get(i + 1) == Some(&'"') && chars.get(i + 2) == Some(&'"') {
                i = skip_text_block(&chars, i + 3, &mut line).ok_or(LexError {
                    line,
                    what: "unterminated text block",
                })?;
            } else {
                i = skip_quoted(&chars, i + 1, '"').ok_or(LexError {
                    line,
                    what: "unterminated string literal",
                })?;
            }
            toks.push(Tok::Literal);
            continue;
        }

        if c == '\'' {
            i = skip_quoted(&chars, i + 1, '\'').ok_or(LexError {
                line,
                what: "unterminated character literal",
            })?;
            toks.push(Tok::Literal);
            continue;
        }

        if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()))
        {
            i = skip_number(&chars, i);
            toks.push(Tok::Literal);
            continue;
        }

        if is_ident_start(c) {
            let start = i;
            while i < chars.len() && is_ident_part(chars[i]) {
                i += 1;
            }
            toks.push(Tok::Ident(chars[start..i].iter().collect()));
            continue;
        }

        toks.push(Tok::Punct(c));
        i += 1;
    }

    Ok(toks)
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_ident_part(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

/// Index of the `*` in the closing `*/`, searching from `from`.
fn find_block_end(chars: &[char], from: usize) -> Option<usize> {
    (from..chars.len().saturating_sub(1)).find(|&j| chars[j] == '*' && chars[j + 1] == '/')
}

/// Returns the index just past the closing quote.
fn skip_quoted(chars: &[char], mut i: usize, quote: char) -> Option<usize> {
    while i < chars.len() {
        match chars[i] {
            '\\' => i += 2,
            '\n' => return None,
            c if c == quote => return Some(i + 1),
            _ => i += 1,
        }
    }
    None
}

fn skip_text_block(chars: &[char], mut i: usize, line: &mut usize) -> Option<usize> {
    while i < chars.len() {
        match chars[i] {
            '\\' => i += 2,
            '\n' => {
                *line += 1;
                i += 1;
            }
            '"' if chars.get(i + 1) == Some(&'"') && chars.get(i + 2) == Some(&'"') => {
                return Some(i + 3)
            }
            _ => i += 1,
        }
    }
    None
}

fn skip_number(chars: &[char], mut i: usize) -> usize {
    while i < chars.len() {
        let c = chars[i];
        if c.is_ascii_alphanumeric() || c == '_' || c == '.' {
            // exponent sign: 1e-5, 0x1p+3
            if matches!(c, 'e' | 'E' | 'p' | 'P')
                && matches!(chars.get(i + 1), Some('+') | Some('-'))
            {
                i += 2;
                continue;
            }
            i += 1;
        } else {
            break;
        }
    }
    i
}

/// Removes the leading `*` gutter (and one following space) from every line.
pub(crate) fn strip_gutters(body: &str) -> String {
    body.lines()
        .map(|line| {
            let trimmed = line.trim_start();
            match trimmed.strip_prefix('*') {
                Some(rest) => {
                    let rest = rest.trim_start_matches('*');
                    rest.strip_prefix(' ').unwrap_or(rest)
                }
                None => trimmed,
            }
        })
        .map(str::trim_end)
        .collect::<Vec<_>>()
        .join("\n")
        .trim()
        .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn javadoc_and_comments() {
        let toks = tokenize("/** Doc\n * more */ // line\n/* block */ int x;").unwrap();
        assert_eq!(
            toks,
            vec![
                Tok::Doc("Doc\nmore".into()),
                Tok::Ident("int".into()),
                Tok::Ident("x".into()),
                Tok::Punct(';'),
            ]
        );
    }

    #[test]
    fn empty_block_comment_is_not_javadoc() {
        assert_eq!(tokenize("/**/").unwrap(), vec![]);
        assert_eq!(tokenize("/** */").unwrap(), vec![Tok::Doc(String::new())]);
    }

    #[test]
    fn literals_hide_braces() {
        let toks = tokenize(
            r#"s = "{ \" }"; c = '}'; t = """
            { "
            """;"#,
        )
        .unwrap();
        assert!(!toks.iter().any(|t| t.is_punct('{') || t.is_punct('}')));
        assert_eq!(toks.iter().filter(|t| **t == Tok::Literal).count(), 3);
    }

    #[test]
    fn numbers() {
        let toks = tokenize("x = 1.5e-3f + 0x1F;").unwrap();
        assert_eq!(toks.iter().filter(|t| **t == Tok::Literal).count(), 2);
    }

    #[test]
    fn unterminated_comment() {
        let err = tokenize("class A {\n/** open").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn gutters() {
        assert_eq!(
            strip_gutters("*\n   * @return  a\n   *   indented\n   "),
            "@return  a\n  indented"
        );
    }
}
