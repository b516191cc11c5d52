//! Theorem verification, corpus runs and report output.

mod corpus;
mod dot;
mod verify;

pub use crate::invariants::Verdict;
pub use corpus::{
    corpus_run, read_corpus, write_csv, write_jsonl, CorpusItem, Outcome, Range, Record,
    RecordResult, RunConfig, Summary, Task, CSV_HEADER,
};
pub use dot::dot_export;
pub use verify::{
    check_preconditions, verify_theorems, GraphVerification, TheoremVerdict, VerifyOptions,
    THEOREMS,
};
