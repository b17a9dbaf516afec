//! Project model: every extracted class, `extends` links between them, and
//! the member pairs compared for each analysis scope.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use walkdir::WalkDir;

use crate::error::{Error, Result};
use crate::extractor::{extract_classes, ClassInfo, FieldInfo, MethodInfo, RawJavadoc};

/// Which member pairs are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scope {
    /// Members of the same class.
    IntraClass,
    /// Members of a class and of one of its (transitive) superclasses.
    Hierarchy,
    /// Members of classes unrelated by inheritance.
    InterClass,
}

impl Scope {
    pub const ALL: [Scope; 3] = [Scope::IntraClass, Scope::Hierarchy, Scope::InterClass];
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::IntraClass => "intra",
            Scope::Hierarchy => "hierarchy",
            Scope::InterClass => "inter",
        })
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "intra" => Ok(Scope::IntraClass),
            "hierarchy" => Ok(Scope::Hierarchy),
            "inter" => Ok(Scope::InterClass),
            other => Err(format!(
                "unknown scope '{other}' (expected intra, hierarchy or inter)"
            )),
        }
    }
}

/// Which member kinds are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Methods,
    Fields,
    All,
}

impl Target {
    fn includes(self, kind: MemberKind) -> bool {
        matches!(
            (self, kind),
            (Target::All, _)
                | (Target::Methods, MemberKind::Method)
                | (Target::Fields, MemberKind::Field)
        )
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "methods" => Ok(Target::Methods),
            "fields" => Ok(Target::Fields),
            "all" => Ok(Target::All),
            other => Err(format!(
                "unknown target '{other}' (expected methods, fields or all)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MemberKind {
    Method,
    Field,
}

/// A method or field of a corpus class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MemberRef {
    /// Index into [`Corpus::classes`].
    pub class: usize,
    pub kind: MemberKind,
    /// Index into the class's `methods` or `fields`.
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    SameClass,
    /// One class is a transitive superclass of the other.
    Ancestor,
    Unrelated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementPair {
    pub kind: MemberKind,
    pub first: MemberRef,
    pub second: MemberRef,
    pub relation: Relation,
}

/// Borrowed view of one member.
#[derive(Debug, Clone, Copy)]
pub enum Member<'a> {
    Method(&'a MethodInfo),
    Field(&'a FieldInfo),
}

impl<'a> Member<'a> {
    pub fn raw_doc(&self) -> Option<&'a RawJavadoc> {
        match self {
            Member::Method(m) => m.raw_doc.as_ref(),
            Member::Field(f) => f.raw_doc.as_ref(),
        }
    }

    pub fn decl_order(&self) -> usize {
        match self {
            Member::Method(m) => m.decl_order,
            Member::Field(f) => f.decl_order,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    /// Sorted by fully qualified name, unique.
    pub classes: Vec<ClassInfo>,
    /// Class fqn to the fqn of its superclass, for superclasses in the corpus.
    pub hierarchy: BTreeMap<String, String>,
    pub warnings: Vec<String>,
    index: HashMap<String, usize>,
}

impl Corpus {
    /// Builds a corpus from classes in discovery order; later duplicates of
    /// a fully qualified name are dropped with a warning.
    pub fn from_classes(classes: impl IntoIterator<Item = ClassInfo>) -> Self {
        let mut warnings = Vec::new();
        let mut by_fqn: BTreeMap<String, ClassInfo> = BTreeMap::new();
        for class in classes {
            match by_fqn.get(&class.fqn) {
                Some(kept) => warnings.push(format!(
                    "duplicate class {} in {} ignored (first declared in {})",
                    class.fqn,
                    class.source_path.display(),
                    kept.source_path.display()
                )),
                None => {
                    by_fqn.insert(class.fqn.clone(), class);
                }
            }
        }
        let classes: Vec<ClassInfo> = by_fqn.into_values().collect();
        let index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.fqn.clone(), i))
            .collect();
        Corpus {
            classes,
            hierarchy: BTreeMap::new(),
            warnings,
            index,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_index(&self, fqn: &str) -> Option<usize> {
        self.index.get(fqn).copied()
    }

    pub fn class(&self, fqn: &str) -> Option<&ClassInfo> {
        self.class_index(fqn).map(|i| &self.classes[i])
    }

    pub fn member(&self, r: MemberRef) -> Member<'_> {
        let class = &self.classes[r.class];
        match r.kind {
            MemberKind::Method => Member::Method(&class.methods[r.index]),
            MemberKind::Field => Member::Field(&class.fields[r.index]),
        }
    }

    pub fn superclass(&self, class: usize) -> Option<usize> {
        self.hierarchy
            .get(&self.classes[class].fqn)
            .and_then(|s| self.class_index(s))
    }

    /// Transitive superclasses, nearest first.
    pub fn ancestors(&self, class: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut current = class;
        while let Some(parent) = self.superclass(current) {
            if parent == class || out.contains(&parent) {
                break;
            }
            out.push(parent);
            current = parent;
        }
        out
    }

    pub fn is_ancestor(&self, ancestor: usize, of: usize) -> bool {
        self.ancestors(of).contains(&ancestor)
    }

    /// Links each class to its superclass when that superclass is part of
    /// the corpus.
    ///
    /// The raw `extends` name is tried as a fully qualified name, then
    /// through the file's imports, then relative to the enclosing types and
    /// the package. An edge that would close a cycle is dropped with a
    /// warning.
    pub fn resolve_supertypes(mut self) -> Self {
        self.hierarchy.clear();
        let mut parent: Vec<Option<usize>> = vec![None; self.classes.len()];
        for i in 0..self.classes.len() {
            let Some(target) = self.lookup_supertype(i) else {
                continue;
            };
            // walk up from the target; reaching `i` means a cycle
            let mut cursor = Some(target);
            let mut steps = 0;
            let mut cyclic = false;
            while let Some(c) = cursor {
                if c == i {
                    cyclic = true;
                    break;
                }
                cursor = parent[c];
                steps += 1;
                if steps > self.classes.len() {
                    break;
                }
            }
            if cyclic {
                self.warnings.push(format!(
                    "inheritance cycle: ignoring {} extends {}",
                    self.classes[i].fqn, self.classes[target].fqn
                ));
                continue;
            }
            parent[i] = Some(target);
        }
        for (i, p) in parent.iter().enumerate() {
            if let Some(p) = p {
                self.hierarchy
                    .insert(self.classes[i].fqn.clone(), self.classes[*p].fqn.clone());
            }
        }
        self
    }

    fn lookup_supertype(&self, class: usize) -> Option<usize> {
        let info = &self.classes[class];
        let raw = info.supertype_name.as_deref()?;
        let found = |fqn: &str| self.class_index(fqn).filter(|&j| j != class);

        if let Some(j) = found(raw) {
            return Some(j);
        }

        let (head, tail) = match raw.split_once('.') {
            Some((h, t)) => (h, Some(t)),
            None => (raw, None),
        };
        for import in &info.imports {
            let candidate = if let Some(pkg) = import.strip_suffix(".*") {
                format!("{pkg}.{raw}")
            } else if import.rsplit('.').next() == Some(head) {
                match tail {
                    Some(t) => format!("{import}.{t}"),
                    None => import.clone(),
                }
            } else {
                continue;
            };
            if let Some(j) = found(&candidate) {
                return Some(j);
            }
        }

        // enclosing types, innermost first, then the package itself
        let mut scope = info.fqn.as_str();
        while let Some((outer, _)) = scope.rsplit_once('.') {
            if outer.len() < info.package.len() {
                break;
            }
            if let Some(j) = found(&format!("{outer}.{raw}")) {
                return Some(j);
            }
            scope = outer;
        }
        None
    }

    fn relation(&self, a: usize, b: usize) -> Relation {
        if a == b {
            Relation::SameClass
        } else if self.is_ancestor(a, b) || self.is_ancestor(b, a) {
            Relation::Ancestor
        } else {
            Relation::Unrelated
        }
    }

    /// Documented members of one class in declaration order.
    fn documented(&self, class: usize, target: Target) -> Vec<MemberRef> {
        let info = &self.classes[class];
        let methods = info
            .methods
            .iter()
            .enumerate()
            .filter(|(_, m)| m.raw_doc.is_some())
            .map(|(index, m)| (m.decl_order, MemberKind::Method, index));
        let fields = info
            .fields
            .iter()
            .enumerate()
            .filter(|(_, f)| f.raw_doc.is_some())
            .map(|(index, f)| (f.decl_order, MemberKind::Field, index));
        let mut members: Vec<_> = methods
            .chain(fields)
            .filter(|(_, kind, _)| target.includes(*kind))
            .collect();
        members.sort();
        members
            .into_iter()
            .map(|(_, kind, index)| MemberRef { class, kind, index })
            .collect()
    }

    /// Canonical member order: class name, then declaration order.
    pub fn cmp_members(&self, a: MemberRef, b: MemberRef) -> Ordering {
        // classes are sorted by fqn, so the index order is the name order
        a.class
            .cmp(&b.class)
            .then_with(|| {
                self.member(a)
                    .decl_order()
                    .cmp(&self.member(b).decl_order())
            })
            .then_with(|| a.kind.cmp(&b.kind))
            .then_with(|| a.index.cmp(&b.index))
    }
}

/// Extracts every `.java` file under `roots` into an unresolved corpus.
///
/// Files are processed in sorted path order regardless of how the roots are
/// listed, so the result does not depend on traversal order.
pub fn build_corpus<P: AsRef<Path>>(roots: &[P]) -> Result<Corpus> {
    let mut files: Vec<PathBuf> = Vec::new();
    for root in roots {
        let root = root.as_ref();
        if !root.exists() {
            return Err(Error::io(
                root,
                std::io::Error::new(std::io::ErrorKind::NotFound, "no such file or directory"),
            ));
        }
        for entry in WalkDir::new(root).follow_links(true) {
            let entry = entry.map_err(|e| {
                let path = e.path().unwrap_or(root).to_path_buf();
                Error::io(path, e.into())
            })?;
            if entry.file_type().is_file()
                && entry.path().extension().is_some_and(|ext| ext == "java")
            {
                files.push(entry.into_path());
            }
        }
    }
    files.sort();
    files.dedup();
    if files.is_empty() {
        return Err(Error::EmptyCorpus);
    }

    let extracted: Vec<(Vec<ClassInfo>, Vec<String>)> = files
        .par_iter()
        .map(|path| -> Result<_> {
            let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
            let mut warnings = Vec::new();
            let text = match String::from_utf8(bytes) {
                Ok(text) => text,
                Err(err) => {
                    warnings.push(format!("{}: invalid UTF-8 replaced", path.display()));
                    String::from_utf8_lossy(err.as_bytes()).into_owned()
                }
            };
            let out = extract_classes(&text, path);
            warnings.extend(out.warnings);
            Ok((out.classes, warnings))
        })
        .collect::<Result<_>>()?;

    let mut warnings = Vec::new();
    let mut classes = Vec::new();
    for (c, w) in extracted {
        classes.extend(c);
        warnings.extend(w);
    }
    let mut corpus = Corpus::from_classes(classes);
    warnings.append(&mut corpus.warnings);
    corpus.warnings = warnings;
    Ok(corpus)
}

/// All documented member pairs of one scope, in canonical order.
pub fn pairs(corpus: &Corpus, scope: Scope, target: Target) -> Vec<ElementPair> {
    let documented: Vec<Vec<MemberRef>> = (0..corpus.classes.len())
        .map(|c| corpus.documented(c, target))
        .collect();
    let mut out = Vec::new();

    let mut push_cross = |a: &[MemberRef], b: &[MemberRef], relation: Relation| {
        for &x in a {
            for &y in b {
                if x.kind == y.kind {
                    out.push(ElementPair {
                        kind: x.kind,
                        first: x,
                        second: y,
                        relation,
                    });
                }
            }
        }
    };

    match scope {
        Scope::IntraClass => {
            for members in &documented {
                for (i, &x) in members.iter().enumerate() {
                    for &y in &members[i + 1..] {
                        if x.kind == y.kind {
                            out.push(ElementPair {
                                kind: x.kind,
                                first: x,
                                second: y,
                                relation: Relation::SameClass,
                            });
                        }
                    }
                }
            }
        }
        Scope::Hierarchy | Scope::InterClass => {
            let ancestors: Vec<HashSet<usize>> = (0..corpus.classes.len())
                .map(|c| corpus.ancestors(c).into_iter().collect())
                .collect();
            for a in 0..documented.len() {
                if documented[a].is_empty() {
                    continue;
                }
                for b in a + 1..documented.len() {
                    if documented[b].is_empty() {
                        continue;
                    }
                    let related = ancestors[a].contains(&b) || ancestors[b].contains(&a);
                    match (scope, related) {
                        (Scope::Hierarchy, true) => {
                            push_cross(&documented[a], &documented[b], Relation::Ancestor)
                        }
                        (Scope::InterClass, false) => {
                            push_cross(&documented[a], &documented[b], Relation::Unrelated)
                        }
                        _ => {}
                    }
                }
            }
        }
    }

    // Generation already follows (first class, first decl, second class,
    // second decl) except for the kind interleaving inside a class.
    out.sort_by(|p, q| {
        corpus
            .cmp_members(p.first, q.first)
            .then_with(|| corpus.cmp_members(p.second, q.second))
    });
    debug_assert!(out
        .iter()
        .all(|p| corpus.cmp_members(p.first, p.second) == Ordering::Less
            && corpus.relation(p.first.class, p.second.class) == p.relation));
    out
}
