use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Order of the before/after segments appended to a question when the
/// match covers only part of the input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Case2Order {
    /// Units after the match, then units before it.
    #[default]
    AfterThenBefore,
    BeforeThenAfter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    /// Maximum number of occurrences of one SR tag in a meta sequence.
    pub r: usize,
    #[serde(default = "default_max_len")]
    pub max_len: usize,
    /// Keep prepositions/adverbs next to a verb as separate units.
    #[serde(default = "default_true")]
    pub phrasal_merge: bool,
    #[serde(default)]
    pub case2_order: Case2Order,
}

fn default_max_len() -> usize {
    64
}

fn default_true() -> bool {
    true
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            r: 3,
            max_len: default_max_len(),
            phrasal_merge: true,
            case2_order: Case2Order::default(),
        }
    }
}

impl EngineConfig {
    pub fn validate(&self) -> Result<()> {
        if self.r < 1 {
            return Err(Error::Config("r must be at least 1".into()));
        }
        if self.max_len < 3 {
            return Err(Error::Config("max_len must be at least 3".into()));
        }
        Ok(())
    }
}
