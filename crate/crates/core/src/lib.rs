//! Meta-sequence learning and question-answer pair generation.
//!
//! Sentences arrive pre-tagged (semantic roles, Penn Treebank POS, named
//! entities, lemmas). Each clause becomes a meta sequence of
//! `(SR, POS, NE)` units; learned pairs of declarative and interrogative
//! meta sequences are matched against new sentences by longest common
//! substring, and the matched interrogative pattern is rewritten and
//! realized into a question with its answer.

pub mod builder;
pub mod config;
pub mod diag;
pub mod error;
pub mod generator;
pub mod learner;
pub mod matcher;
pub mod preprocess;
pub mod sentence;
pub mod ssu;
pub mod synth;
pub mod tags;

pub use builder::{build_meta_sequence, PhrasalLexicon, SsuTextMap};
pub use config::{Case2Order, EngineConfig};
pub use diag::Diagnostic;
pub use error::{Error, Result};
pub use generator::{generate, Generation, QaPair, TeachRequest, TeachStatus};
pub use learner::{learn_clause, learn_pair, InsertOutcome, MdiPair, Msdip, Source, TrainingPair};
pub use matcher::{best_match, Classification, MatchResult};
pub use sentence::{Frame, TaggedSentence, Token};
pub use ssu::{Kind, MetaSequence, Ssu, SymbolTable};
pub use tags::{NeTag, PosTag, SrTag};
