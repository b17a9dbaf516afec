//! Detection and triage of cloned Javadoc comments.
//!
//! The pipeline runs in five stages:
//!
//! 1. [`extractor`] scans `.java` sources for classes, methods and fields
//!    and splits each Javadoc block into cleaned comment parts.
//! 2. [`corpus`] assembles the project model, resolves `extends` links and
//!    enumerates the member pairs that belong to an analysis scope.
//! 3. [`detector`] finds whole-comment and comment-part clones in each pair
//!    and filters legitimate ones with syntactic heuristics.
//! 4. [`analyzer`] ranks every remaining clone as low, mild or high severity
//!    from the lexical similarity between signatures and the cloned text
//!    (see [`similarity`]).
//! 5. [`report`] writes the CSV record file and the per-severity text
//!    reports.

pub mod analyzer;
pub mod corpus;
pub mod detector;
pub mod error;
pub mod extractor;
pub mod report;
pub mod similarity;

pub use analyzer::{analyze, AnalysisResult, AnalyzerConfig, Severity};
pub use corpus::{build_corpus, Corpus, ElementPair, MemberRef, Scope, Target};
pub use detector::{CloneKind, CloneRecord, Detector, DetectorConfig};
pub use error::{Error, Result};
pub use extractor::{extract_classes, ClassInfo, CommentDoc, FieldInfo, MethodInfo, RawJavadoc};
pub use report::{run, RunConfig, RunSummary};
