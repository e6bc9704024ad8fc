//! Tagged-sentence interchange model produced by the oracle adapter.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::tags::{normalize_sr_label, NeTag, PosTag, SrTag};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    #[serde(rename = "i")]
    pub index: usize,
    pub text: String,
    pub lemma: String,
    pub pos: PosTag,
    pub ne: Option<NeTag>,
}

/// One predicate-argument structure: a raw SR label (or null) per token.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frame {
    #[serde(rename = "predicate")]
    pub predicate_index: usize,
    pub labels: Vec<Option<String>>,
}

impl Frame {
    /// Normalized label of token `i`; `O` and empty labels count as null.
    pub fn label(&self, i: usize) -> Result<Option<SrTag>> {
        match self.labels.get(i).and_then(|l| l.as_deref()) {
            None => Ok(None),
            Some(raw) if is_outside(raw) => Ok(None),
            Some(raw) => normalize_sr_label(raw).map(Some),
        }
    }
}

fn is_outside(raw: &str) -> bool {
    let raw = raw.trim();
    raw.is_empty() || raw == "O"
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTaggedSentence")]
pub struct TaggedSentence {
    pub text: String,
    pub tokens: Vec<Token>,
    pub frames: Vec<Frame>,
}

#[derive(Deserialize)]
struct RawTaggedSentence {
    text: String,
    tokens: Vec<Token>,
    #[serde(default)]
    frames: Vec<Frame>,
}

impl TryFrom<RawTaggedSentence> for TaggedSentence {
    type Error = Error;

    fn try_from(raw: RawTaggedSentence) -> Result<Self> {
        TaggedSentence::new(raw.text, raw.tokens, raw.frames)
    }
}

impl TaggedSentence {
    pub fn new(text: String, tokens: Vec<Token>, frames: Vec<Frame>) -> Result<Self> {
        for (i, tok) in tokens.iter().enumerate() {
            if tok.index != i {
                return Err(Error::InvalidSentence(format!(
                    "token {i} has index {}",
                    tok.index
                )));
            }
            if tok.text.trim().is_empty() {
                return Err(Error::InvalidSentence(format!("token {i} has empty text")));
            }
        }
        for (f, frame) in frames.iter().enumerate() {
            if frame.labels.len() != tokens.len() {
                return Err(Error::InvalidSentence(format!(
                    "frame {f} has {} labels for {} tokens",
                    frame.labels.len(),
                    tokens.len()
                )));
            }
            if frame.predicate_index >= tokens.len() {
                return Err(Error::InvalidSentence(format!(
                    "frame {f} predicate {} out of range",
                    frame.predicate_index
                )));
            }
            for i in 0..tokens.len() {
                frame.label(i)?;
            }
            if frame.label(frame.predicate_index)? != Some(SrTag::V) {
                return Err(Error::InvalidSentence(format!(
                    "frame {f} predicate token {} is not labeled V",
                    frame.predicate_index
                )));
            }
        }
        Ok(TaggedSentence {
            text,
            tokens,
            frames,
        })
    }

    pub fn from_json(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    /// Short stable identifier derived from the sentence text.
    pub fn id(&self) -> String {
        content_id(&self.text)
    }
}

/// First 16 hex digits of the SHA-256 of `content`.
pub fn content_id(content: &str) -> String {
    let digest = Sha256::digest(content.as_bytes());
    hex::encode(&digest[..8])
}
