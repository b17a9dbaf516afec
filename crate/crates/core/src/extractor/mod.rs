//! Declaration extraction from Java sources.
//!
//! The front end scans tokens rather than parsing full Java: it recovers
//! package and import statements, type declarations with their `extends`
//! clause, and method/field declarations with the Javadoc block that
//! precedes them. Method bodies and initializers are skipped by brace
//! matching, so anonymous and local classes never surface.

mod javadoc;
mod lexer;

use std::path::{Path, PathBuf};

pub use javadoc::{clean_text, parse_javadoc, parse_javadoc_checked, DocWarning};
use lexer::Tok;

/// Verbatim Javadoc body without delimiters and line gutters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawJavadoc {
    pub text: String,
}

/// A Javadoc block split into cleaned, labeled parts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CommentDoc {
    pub free_text: String,
    /// `(parameter name, text)` in source order.
    pub params: Vec<(String, String)>,
    pub returns: Option<String>,
    /// `(exception type name, text)` in source order.
    pub throws_list: Vec<(String, String)>,
    /// All non-empty parts in source order, joined by single spaces.
    pub whole_text: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Param {
    pub type_name: String,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodInfo {
    /// The class simple name for constructors.
    pub simple_name: String,
    pub is_constructor: bool,
    pub params: Vec<Param>,
    /// Raw type text; empty for constructors.
    pub return_type: String,
    /// Display form, `ReturnType name(Type1 p1, Type2 p2)`.
    pub signature: String,
    pub raw_doc: Option<RawJavadoc>,
    pub decl_order: usize,
}

impl MethodInfo {
    pub fn new(
        simple_name: impl Into<String>,
        is_constructor: bool,
        params: Vec<Param>,
        return_type: impl Into<String>,
        raw_doc: Option<RawJavadoc>,
        decl_order: usize,
    ) -> Self {
        let simple_name = simple_name.into();
        let return_type = if is_constructor {
            String::new()
        } else {
            return_type.into()
        };
        let signature = display_signature(&simple_name, &params, &return_type);
        MethodInfo {
            simple_name,
            is_constructor,
            params,
            return_type,
            signature,
            raw_doc,
            decl_order,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldInfo {
    pub name: String,
    pub type_name: String,
    pub raw_doc: Option<RawJavadoc>,
    pub decl_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    /// Package plus enclosing type path, dot-joined.
    pub fqn: String,
    pub simple_name: String,
    pub package: String,
    /// Dotted name from the `extends` clause, type arguments removed.
    pub supertype_name: Option<String>,
    pub imports: Vec<String>,
    pub methods: Vec<MethodInfo>,
    pub fields: Vec<FieldInfo>,
    pub source_path: PathBuf,
    pub decl_order: usize,
}

/// Result of scanning one file.
#[derive(Debug, Clone, Default)]
pub struct FileExtraction {
    pub classes: Vec<ClassInfo>,
    pub warnings: Vec<String>,
}

/// Enumerates every named class, interface, enum and record in `source`.
///
/// A file the scanner cannot follow yields no classes and one warning.
pub fn extract_classes(source: &str, file_path: &Path) -> FileExtraction {
    let toks = match lexer::tokenize(source) {
        Ok(toks) => toks,
        Err(err) => {
            return FileExtraction {
                classes: Vec::new(),
                warnings: vec![format!("{}: skipped, {err}", file_path.display())],
            }
        }
    };
    let mut scanner = Scanner {
        toks,
        pos: 0,
        doc: None,
        path: file_path.to_path_buf(),
        package: String::new(),
        imports: Vec::new(),
        classes: Vec::new(),
        class_counter: 0,
    };
    match scanner.compilation_unit() {
        Ok(()) => {
            let mut classes = scanner.classes;
            classes.sort_by_key(|c| c.decl_order);
            let mut warnings = Vec::new();
            for class in &classes {
                for method in &class.methods {
                    if let Some(raw) = &method.raw_doc {
                        for w in parse_javadoc_checked(raw).1 {
                            warnings.push(format!(
                                "{}: {}.{}: {}",
                                file_path.display(),
                                class.fqn,
                                method.simple_name,
                                w.0
                            ));
                        }
                    }
                }
            }
            FileExtraction { classes, warnings }
        }
        Err(what) => FileExtraction {
            classes: Vec::new(),
            warnings: vec![format!("{}: skipped, {what}", file_path.display())],
        },
    }
}

fn display_signature(name: &str, params: &[Param], return_type: &str) -> String {
    let params = params
        .iter()
        .map(|p| format!("{} {}", erase_type_arguments(&p.type_name), p.name))
        .collect::<Vec<_>>()
        .join(", ");
    if return_type.is_empty() {
        format!("{name}({params})")
    } else {
        format!("{} {name}({params})", erase_type_arguments(return_type))
    }
}

/// `Map<K, List<V>>[]` becomes `Map[]`.
fn erase_type_arguments(type_text: &str) -> String {
    let mut depth = 0usize;
    let mut out = String::with_capacity(type_text.len());
    for c in type_text.chars() {
        match c {
            '<' => depth += 1,
            '>' => depth = depth.saturating_sub(1),
            _ if depth == 0 => out.push(c),
            _ => {}
        }
    }
    out
}

const MODIFIERS: &[&str] = &[
    "public",
    "protected",
    "private",
    "static",
    "final",
    "abstract",
    "synchronized",
    "native",
    "transient",
    "volatile",
    "strictfp",
    "default",
    "sealed",
];

type ScanResult<T = ()> = Result<T, String>;

struct Scanner {
    toks: Vec<Tok>,
    pos: usize,
    /// Most recent Javadoc seen since the last member ended.
    doc: Option<RawJavadoc>,
    path: PathBuf,
    package: String,
    imports: Vec<String>,
    classes: Vec<ClassInfo>,
    class_counter: usize,
}

/// Enclosing type of the member list being scanned.
struct Owner {
    fqn: String,
    simple_name: String,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum TypeKind {
    Class,
    Interface,
    Enum,
    Record,
    Annotation,
}

impl Scanner {
    /// Next non-Javadoc token; Javadoc blocks passed over become the pending doc.
    fn peek(&mut self) -> Option<&Tok> {
        while let Some(Tok::Doc(text)) = self.toks.get(self.pos) {
            self.doc = Some(RawJavadoc { text: text.clone() });
            self.pos += 1;
        }
        self.toks.get(self.pos)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.toks[self.pos..]
            .iter()
            .filter(|t| !matches!(t, Tok::Doc(_)))
            .nth(offset)
    }

    fn bump(&mut self) -> Option<Tok> {
        self.peek()?;
        let tok = self.toks[self.pos].clone();
        self.pos += 1;
        Some(tok)
    }

    fn expect_ident(&mut self) -> ScanResult<String> {
        match self.bump() {
            Some(Tok::Ident(name)) => Ok(name),
            other => Err(format!("expected identifier, found {other:?}")),
        }
    }

    fn compilation_unit(&mut self) -> ScanResult {
        while let Some(tok) = self.peek().cloned() {
            match tok {
                Tok::Ident(kw) if kw == "package" => {
                    self.bump();
                    self.package = self.qualified_name()?;
                    self.skip_through(';')?;
                    self.doc = None;
                }
                Tok::Ident(kw) if kw == "import" => {
                    self.bump();
                    if self.peek().is_some_and(|t| t.is_ident("static")) {
                        self.bump();
                        self.skip_through(';')?;
                    } else {
                        let mut name = self.qualified_name()?;
                        if self.peek().is_some_and(|t| t.is_punct('.')) {
                            self.bump();
                            self.bump();
                            name.push_str(".*");
                        }
                        self.imports.push(name);
                        self.skip_through(';')?;
                    }
                    self.doc = None;
                }
                Tok::Punct(';') => {
                    self.bump();
                    self.doc = None;
                }
                _ => {
                    self.member(None)?;
                }
            }
        }
        Ok(())
    }

    fn qualified_name(&mut self) -> ScanResult<String> {
        let mut name = self.expect_ident()?;
        while self.peek().is_some_and(|t| t.is_punct('.'))
            && matches!(self.peek_at(1), Some(Tok::Ident(_)))
        {
            self.bump();
            name.push('.');
            name.push_str(&self.expect_ident()?);
        }
        Ok(name)
    }

    fn skip_through(&mut self, stop: char) -> ScanResult {
        loop {
            match self.bump() {
                Some(t) if t.is_punct(stop) => return Ok(()),
                Some(Tok::Punct(open @ ('{' | '(' | '['))) => self.skip_balanced(open)?,
                Some(_) => {}
                None => return Err(format!("unexpected end of file, expected '{stop}'")),
            }
        }
    }

    /// Skips to the partner of an already consumed opening bracket.
    fn skip_balanced(&mut self, open: char) -> ScanResult {
        let close = match open {
            '{' => '}',
            '(' => ')',
            '[' => ']',
            _ => unreachable!(),
        };
        let mut depth = 1usize;
        while depth > 0 {
            match self.toks.get(self.pos) {
                Some(Tok::Punct(c)) if *c == open => depth += 1,
                Some(Tok::Punct(c)) if *c == close => depth -= 1,
                Some(Tok::Punct(c @ ('}' | ')' | ']'))) => {
                    return Err(format!("mismatched '{c}' while looking for '{close}'"))
                }
                Some(Tok::Punct(c @ ('{' | '(' | '['))) => {
                    let c = *c;
                    self.pos += 1;
                    self.skip_balanced(c)?;
                    continue;
                }
                Some(_) => {}
                None => return Err(format!("unexpected end of file, expected '{close}'")),
            }
            self.pos += 1;
        }
        Ok(())
    }

    /// Consumes `<...>` once the `<` has been consumed, returning the tokens inside.
    fn angle_group(&mut self) -> ScanResult<Vec<Tok>> {
        let mut depth = 1usize;
        let mut inner = Vec::new();
        loop {
            let tok = self
                .bump()
                .ok_or_else(|| "unexpected end of file in type arguments".to_string())?;
            match tok {
                Tok::Punct('<') => depth += 1,
                Tok::Punct('>') => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(inner);
                    }
                }
                Tok::Punct('@') => {
                    self.annotation_rest()?;
                    continue;
                }
                Tok::Punct(c @ ('{' | '}' | ';' | '(' | ')')) => {
                    return Err(format!("unexpected '{c}' in type arguments"))
                }
                _ => {}
            }
            inner.push(tok);
        }
    }

    /// Rest of an annotation after its `@`.
    fn annotation_rest(&mut self) -> ScanResult {
        self.qualified_name()?;
        if self.peek().is_some_and(|t| t.is_punct('(')) {
            self.bump();
            self.skip_balanced('(')?;
        }
        Ok(())
    }

    /// One member (or top-level type) starting at the current token.
    ///
    /// Nested types are recorded in `self.classes` directly; methods and
    /// fields are returned with `decl_order` still unset.
    fn member(&mut self, owner: Option<&Owner>) -> ScanResult<Vec<Member>> {
        let mut header: Vec<Tok> = Vec::new();
        loop {
            let Some(tok) = self.peek().cloned() else {
                return Err("unexpected end of file in declaration".into());
            };
            match tok {
                Tok::Punct('@') => {
                    self.bump();
                    if self.peek().is_some_and(|t| t.is_ident("interface")) {
                        self.bump();
                        self.type_declaration(TypeKind::Annotation, owner)?;
                        return Ok(Vec::new());
                    }
                    self.annotation_rest()?;
                }
                Tok::Ident(ref kw) if kw == "class" || kw == "interface" || kw == "enum" => {
                    self.bump();
                    let kind = match kw.as_str() {
                        "class" => TypeKind::Class,
                        "interface" => TypeKind::Interface,
                        _ => TypeKind::Enum,
                    };
                    self.type_declaration(kind, owner)?;
                    return Ok(Vec::new());
                }
                Tok::Ident(ref kw)
                    if kw == "record"
                        && matches!(self.peek_at(1), Some(Tok::Ident(_)))
                        && matches!(self.peek_at(2), Some(Tok::Punct('(' | '<'))) =>
                {
                    self.bump();
                    self.type_declaration(TypeKind::Record, owner)?;
                    return Ok(Vec::new());
                }
                Tok::Punct('{') => {
                    // initializer block or compact record constructor
                    self.bump();
                    self.skip_balanced('{')?;
                    self.doc = None;
                    return Ok(Vec::new());
                }
                Tok::Punct('(') => {
                    self.bump();
                    return self.method(header, owner).map(|m| m.into_iter().collect());
                }
                Tok::Punct('=') | Tok::Punct(';') => return self.fields(header),
                Tok::Punct('<') => {
                    self.bump();
                    let inner = self.angle_group()?;
                    header.push(Tok::Punct('<'));
                    header.extend(inner);
                    header.push(Tok::Punct('>'));
                }
                Tok::Punct(c @ ('}' | ')')) => {
                    return Err(format!("unexpected '{c}' in declaration"));
                }
                _ => {
                    self.bump();
                    header.push(tok);
                }
            }
        }
    }

    /// Finishes a method declaration after its opening parenthesis.
    fn method(&mut self, header: Vec<Tok>, owner: Option<&Owner>) -> ScanResult<Option<Member>> {
        let doc = self.doc.take();
        let params = self.parameters()?;

        // throws clause, annotation defaults, then body or `;`
        let mut in_default = false;
        loop {
            match self.bump() {
                Some(Tok::Punct(';')) => break,
                Some(Tok::Punct('{')) => {
                    self.skip_balanced('{')?;
                    if !in_default {
                        break;
                    }
                }
                Some(Tok::Punct('(')) => self.skip_balanced('(')?,
                Some(Tok::Punct('<')) => {
                    self.angle_group()?;
                }
                Some(Tok::Ident(kw)) if kw == "default" => in_default = true,
                Some(Tok::Punct(c @ ('}' | ')'))) => {
                    return Err(format!("unexpected '{c}' after parameter list"))
                }
                Some(_) => {}
                None => return Err("unexpected end of file after parameter list".into()),
            }
        }
        self.doc = None;

        let decl = strip_modifiers(&header);
        let Some((Tok::Ident(name), before_name)) = decl.split_last() else {
            return Ok(None);
        };
        let type_toks = strip_type_parameters(before_name);
        let Some(owner) = owner else {
            return Ok(None);
        };
        let is_constructor = type_toks.is_empty() && *name == owner.simple_name;
        if type_toks.is_empty() && !is_constructor {
            return Ok(None);
        }
        Ok(Some(Member::Method(MethodInfo::new(
            name.clone(),
            is_constructor,
            params,
            render_type(type_toks),
            doc,
            0,
        ))))
    }

    /// Formal parameters up to and including the closing parenthesis.
    fn parameters(&mut self) -> ScanResult<Vec<Param>> {
        let mut params = Vec::new();
        let mut current: Vec<Tok> = Vec::new();
        loop {
            let tok = self
                .bump()
                .ok_or_else(|| "unexpected end of file in parameter list".to_string())?;
            match tok {
                Tok::Punct(')') => {
                    params.extend(param_from_tokens(&current));
                    return Ok(params);
                }
                Tok::Punct(',') => {
                    params.extend(param_from_tokens(&current));
                    current.clear();
                }
                Tok::Punct('@') => self.annotation_rest()?,
                Tok::Punct('<') => {
                    let inner = self.angle_group()?;
                    current.push(Tok::Punct('<'));
                    current.extend(inner);
                    current.push(Tok::Punct('>'));
                }
                Tok::Punct(c @ ('{' | '}' | ';' | '(')) => {
                    return Err(format!("unexpected '{c}' in parameter list"))
                }
                other => current.push(other),
            }
        }
    }

    /// Field declarators, from the first `=` or `;` through the closing `;`.
    fn fields(&mut self, header: Vec<Tok>) -> ScanResult<Vec<Member>> {
        let doc = self.doc.take();
        let decl = strip_modifiers(&header);

        // Declarators without initializers are separated by commas in the header.
        let mut segments: Vec<&[Tok]> = split_top_level_commas(decl);
        let first = segments.remove(0);
        let Some(name_pos) = first.iter().rposition(|t| matches!(t, Tok::Ident(_))) else {
            self.skip_through(';')?;
            return Ok(Vec::new());
        };
        let (type_toks, rest) = first.split_at(name_pos);
        let Tok::Ident(first_name) = &rest[0] else {
            unreachable!()
        };
        let mut base_type = render_type(type_toks);
        let mut names = vec![(first_name.clone(), array_suffix(&rest[1..]))];
        for seg in segments {
            if let Some(Tok::Ident(name)) = seg.first() {
                names.push((name.clone(), array_suffix(&seg[1..])));
            }
        }

        if self.peek().is_some_and(|t| t.is_punct('=')) {
            self.bump();
            names.extend(self.initializer_declarators()?);
        } else {
            self.bump();
        }
        self.doc = None;

        if type_toks.is_empty() {
            return Ok(Vec::new());
        }
        if base_type.ends_with("...") {
            base_type.truncate(base_type.len() - 3);
        }
        Ok(names
            .into_iter()
            .map(|(name, dims)| {
                Member::Field(FieldInfo {
                    name,
                    type_name: format!("{base_type}{dims}"),
                    raw_doc: doc.clone(),
                    decl_order: 0,
                })
            })
            .collect())
    }

    /// Skips an initializer expression through `;`, collecting the names of
    /// further declarators (`a = 1, b = 2`).
    fn initializer_declarators(&mut self) -> ScanResult<Vec<(String, String)>> {
        let mut names = Vec::new();
        loop {
            match self.bump() {
                Some(Tok::Punct(';')) => return Ok(names),
                Some(Tok::Punct(',')) => {
                    if let (Some(Tok::Ident(name)), next) =
                        (self.peek_at(0).cloned(), self.peek_at(1))
                    {
                        if matches!(next, Some(Tok::Punct('=' | ',' | ';' | '['))) {
                            names.push((name, String::new()));
                        }
                    }
                }
                Some(Tok::Punct(open @ ('{' | '(' | '['))) => self.skip_balanced(open)?,
                Some(Tok::Punct(c @ ('}' | ')' | ']'))) => {
                    return Err(format!("unexpected '{c}' in field initializer"))
                }
                Some(_) => {}
                None => return Err("unexpected end of file in field initializer".into()),
            }
        }
    }

    fn type_declaration(&mut self, kind: TypeKind, owner: Option<&Owner>) -> ScanResult {
        let decl_order = self.class_counter;
        self.class_counter += 1;
        // Type-level Javadoc is not compared.
        self.doc = None;

        let simple_name = self.expect_ident()?;
        let fqn = match owner {
            Some(o) => format!("{}.{simple_name}", o.fqn),
            None if self.package.is_empty() => simple_name.clone(),
            None => format!("{}.{simple_name}", self.package),
        };

        let mut supertype_name = None;
        loop {
            let Some(tok) = self.bump() else {
                return Err(format!(
                    "unexpected end of file in declaration of {simple_name}"
                ));
            };
            match tok {
                Tok::Punct('{') => break,
                Tok::Punct('<') => {
                    self.angle_group()?;
                }
                Tok::Punct('(') if kind == TypeKind::Record => self.skip_balanced('(')?,
                Tok::Ident(kw) if kw == "extends" => {
                    let name = self.qualified_name()?;
                    if supertype_name.is_none()
                        && matches!(kind, TypeKind::Class | TypeKind::Interface)
                    {
                        supertype_name = Some(name);
                    }
                }
                Tok::Punct('@') => self.annotation_rest()?,
                Tok::Punct(c @ (';' | '}' | ')' | '(')) => {
                    return Err(format!("unexpected '{c}' in declaration of {simple_name}"))
                }
                _ => {}
            }
        }

        let inner_owner = Owner {
            fqn: fqn.clone(),
            simple_name: simple_name.clone(),
        };
        if kind == TypeKind::Enum {
            self.enum_constants()?;
        }
        let members = self.class_body(&inner_owner)?;

        let mut class = ClassInfo {
            fqn,
            simple_name,
            package: self.package.clone(),
            supertype_name,
            imports: self.imports.clone(),
            methods: Vec::new(),
            fields: Vec::new(),
            source_path: self.path.clone(),
            decl_order,
        };
        for (order, member) in members.into_iter().enumerate() {
            match member {
                Member::Method(mut m) => {
                    m.decl_order = order;
                    class.methods.push(m);
                }
                Member::Field(mut f) => {
                    f.decl_order = order;
                    class.fields.push(f);
                }
            }
        }
        self.classes.push(class);
        self.doc = None;
        Ok(())
    }

    /// Skips enum constants up to the `;` that opens the member list. When
    /// there is none the closing brace is left for the body scan.
    fn enum_constants(&mut self) -> ScanResult {
        loop {
            match self.peek() {
                Some(Tok::Punct(';')) => {
                    self.bump();
                    self.doc = None;
                    return Ok(());
                }
                Some(Tok::Punct('}')) => return Ok(()),
                Some(Tok::Punct(c @ ('{' | '(' | '['))) => {
                    let c = *c;
                    self.bump();
                    self.skip_balanced(c)?;
                }
                Some(Tok::Punct(c @ (')' | ']'))) => {
                    return Err(format!("unexpected '{c}' in enum constants"))
                }
                Some(_) => {
                    self.bump();
                }
                None => return Err("unexpected end of file in enum body".into()),
            }
        }
    }

    fn class_body(&mut self, owner: &Owner) -> ScanResult<Vec<Member>> {
        let mut members = Vec::new();
        self.doc = None;
        loop {
            match self.peek() {
                Some(Tok::Punct('}')) => {
                    self.bump();
                    return Ok(members);
                }
                Some(Tok::Punct(';')) => {
                    self.bump();
                    self.doc = None;
                }
                Some(_) => members.extend(self.member(Some(owner))?),
                None => return Err(format!("unexpected end of file in body of {}", owner.fqn)),
            }
        }
    }
}

enum Member {
    Method(MethodInfo),
    Field(FieldInfo),
}

fn strip_modifiers(header: &[Tok]) -> &[Tok] {
    let mut start = 0;
    while start < header.len() {
        match &header[start] {
            Tok::Ident(kw) if MODIFIERS.contains(&kw.as_str()) => start += 1,
            // non-sealed
            Tok::Ident(kw)
                if kw == "non"
                    && header.get(start + 1).is_some_and(|t| t.is_punct('-'))
                    && header.get(start + 2).is_some_and(|t| t.is_ident("sealed")) =>
            {
                start += 3
            }
            _ => break,
        }
    }
    &header[start..]
}

/// Drops a leading `<T extends ...>` method type-parameter list.
fn strip_type_parameters(toks: &[Tok]) -> &[Tok] {
    if !toks.first().is_some_and(|t| t.is_punct('<')) {
        return toks;
    }
    let mut depth = 0usize;
    for (i, t) in toks.iter().enumerate() {
        match t {
            Tok::Punct('<') => depth += 1,
            Tok::Punct('>') => {
                depth -= 1;
                if depth == 0 {
                    return &toks[i + 1..];
                }
            }
            _ => {}
        }
    }
    toks
}

fn split_top_level_commas(toks: &[Tok]) -> Vec<&[Tok]> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, t) in toks.iter().enumerate() {
        match t {
            Tok::Punct('<') => depth += 1,
            Tok::Punct('>') => depth = depth.saturating_sub(1),
            Tok::Punct(',') if depth == 0 => {
                out.push(&toks[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&toks[start..]);
    out
}

/// `[]` pairs written after a declarator name.
fn array_suffix(toks: &[Tok]) -> String {
    toks.iter()
        .filter_map(|t| match t {
            Tok::Punct(c @ ('[' | ']')) => Some(*c),
            _ => None,
        })
        .collect()
}

fn param_from_tokens(toks: &[Tok]) -> Option<Param> {
    let toks: Vec<&Tok> = toks.iter().filter(|t| !t.is_ident("final")).collect();
    let name_pos = toks.iter().rposition(|t| matches!(t, Tok::Ident(_)))?;
    let Tok::Ident(name) = toks[name_pos] else {
        unreachable!()
    };
    // receiver parameter
    if name == "this" || name_pos == 0 {
        return None;
    }
    let type_toks: Vec<Tok> = toks[..name_pos].iter().map(|t| (*t).clone()).collect();
    let dims: Vec<Tok> = toks[name_pos + 1..].iter().map(|t| (*t).clone()).collect();
    Some(Param {
        type_name: format!("{}{}", render_type(&type_toks), array_suffix(&dims)),
        name: name.clone(),
    })
}

/// Canonical text for a run of type tokens: `Map<String, List<T>>`, `int[]`,
/// `String...`, `? extends Number`.
fn render_type(toks: &[Tok]) -> String {
    let mut out = String::new();
    let mut prev: Option<&Tok> = None;
    for tok in toks {
        match tok {
            Tok::Ident(word) => {
                if matches!(
                    prev,
                    Some(Tok::Ident(_)) | Some(Tok::Punct('?' | '&' | ','))
                ) {
                    out.push(' ');
                }
                out.push_str(word);
            }
            Tok::Punct(',') => out.push(','),
            Tok::Punct('&') => out.push_str(" &"),
            Tok::Punct('?') => {
                if matches!(prev, Some(Tok::Punct(','))) {
                    out.push(' ');
                }
                out.push('?');
            }
            Tok::Punct(c) => out.push(*c),
            Tok::Doc(_) | Tok::Literal => {}
        }
        prev = Some(tok);
    }
    out
}
