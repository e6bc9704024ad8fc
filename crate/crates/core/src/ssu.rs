//! Semantic-syntactic units and meta sequences.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::tags::{NeTag, PosTag, SrTag};

/// Interrogative pronoun kept verbatim, e.g. `Where` or `How many`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WhLiteral(String);

impl WhLiteral {
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        let text = text.split_whitespace().collect::<Vec<_>>().join(" ");
        if text.is_empty() || text.contains('/') {
            return Err(Error::InvalidWh(text));
        }
        Ok(WhLiteral(text))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// A 3-SSU `(SR, POS, NE)` or an untagged interrogative pronoun.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ssu {
    Tagged {
        sr: SrTag,
        pos: Option<PosTag>,
        ne: Option<NeTag>,
    },
    Wh(WhLiteral),
}

impl Ssu {
    pub fn tagged(sr: SrTag, pos: Option<PosTag>, ne: Option<NeTag>) -> Self {
        Ssu::Tagged { sr, pos, ne }
    }

    pub fn wh(text: &str) -> Result<Self> {
        WhLiteral::new(text).map(Ssu::Wh)
    }

    pub fn sr(&self) -> Option<SrTag> {
        match self {
            Ssu::Tagged { sr, .. } => Some(*sr),
            Ssu::Wh(_) => None,
        }
    }

    pub fn pos(&self) -> Option<PosTag> {
        match self {
            Ssu::Tagged { pos, .. } => *pos,
            Ssu::Wh(_) => None,
        }
    }

    pub fn ne(&self) -> Option<NeTag> {
        match self {
            Ssu::Tagged { ne, .. } => *ne,
            Ssu::Wh(_) => None,
        }
    }

    pub fn is_wh(&self) -> bool {
        matches!(self, Ssu::Wh(_))
    }

    pub fn is_verb(&self) -> bool {
        self.sr() == Some(SrTag::V)
    }

    /// Canonical matching key: the `t1/t2/t3` encoding with the POS
    /// replaced by its equivalence-class representative.
    pub fn match_key(&self) -> String {
        match self {
            Ssu::Tagged { sr, pos, ne } => {
                let pos = pos.map(|p| p.equiv_class().representative());
                encode_fields(*sr, pos, *ne)
            }
            Ssu::Wh(w) => w.as_str().to_string(),
        }
    }
}

fn encode_fields(sr: SrTag, pos: Option<PosTag>, ne: Option<NeTag>) -> String {
    format!(
        "{}/{}/{}",
        sr.as_str(),
        pos.map(PosTag::as_str).unwrap_or(""),
        ne.map(NeTag::as_str).unwrap_or("")
    )
}

impl fmt::Display for Ssu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ssu::Tagged { sr, pos, ne } => f.write_str(&encode_fields(*sr, *pos, *ne)),
            Ssu::Wh(w) => f.write_str(w.as_str()),
        }
    }
}

impl FromStr for Ssu {
    type Err = Error;

    /// Parses `SR/POS/NE` (empty fields are null) or a bare wh literal.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if !s.contains('/') {
            return Ssu::wh(s);
        }
        let mut parts = s.splitn(3, '/');
        let sr = parts.next().unwrap_or_default();
        let pos = parts.next().unwrap_or_default();
        let ne = parts.next().unwrap_or_default();
        Ok(Ssu::Tagged {
            sr: sr.parse()?,
            pos: if pos.is_empty() { None } else { Some(pos.parse()?) },
            ne: if ne.is_empty() { None } else { Some(ne.parse()?) },
        })
    }
}

/// True iff both are equal wh literals, or both are tagged with equal SR,
/// equal POS equivalence class and equal NE (null equals only null).
pub fn ssu_matches(a: &Ssu, b: &Ssu) -> bool {
    match (a, b) {
        (Ssu::Wh(x), Ssu::Wh(y)) => x == y,
        (
            Ssu::Tagged { sr: s1, pos: p1, ne: n1 },
            Ssu::Tagged { sr: s2, pos: p2, ne: n2 },
        ) => {
            s1 == s2
                && p1.map(|p| p.equiv_class()) == p2.map(|p| p.equiv_class())
                && n1 == n2
        }
        _ => false,
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SsuRepr {
    Tagged(String, Option<String>, Option<String>),
    Wh { wh: String },
}

impl Serialize for Ssu {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            Ssu::Tagged { sr, pos, ne } => SsuRepr::Tagged(
                sr.as_str().to_string(),
                pos.map(|p| p.as_str().to_string()),
                ne.map(|n| n.as_str().to_string()),
            ),
            Ssu::Wh(w) => SsuRepr::Wh { wh: w.0.clone() },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Ssu {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match SsuRepr::deserialize(deserializer)? {
            SsuRepr::Tagged(sr, pos, ne) => Ok(Ssu::Tagged {
                sr: sr.parse().map_err(D::Error::custom)?,
                pos: pos.map(|p| p.parse()).transpose().map_err(D::Error::custom)?,
                ne: ne.map(|n| n.parse()).transpose().map_err(D::Error::custom)?,
            }),
            SsuRepr::Wh { wh } => Ssu::wh(&wh).map_err(D::Error::custom),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Declarative,
    Interrogative,
}

/// An ordered list of SSUs in which every SR tag occurs at most `r` times.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MetaSequence {
    ssus: Vec<Ssu>,
    kind: Kind,
}

impl MetaSequence {
    pub fn new(ssus: Vec<Ssu>, kind: Kind, cfg: &EngineConfig) -> Result<Self> {
        let ms = MetaSequence { ssus, kind };
        ms.check(cfg)?;
        Ok(ms)
    }

    /// Parses the space-separated textual encoding, e.g.
    /// `Where V/VBD/ ARG0/NNP/PER V/VB/ TMP/NN/`. Adjacent bare words form
    /// one multiword wh literal.
    pub fn parse(text: &str, kind: Kind, cfg: &EngineConfig) -> Result<Self> {
        let mut ssus = Vec::new();
        let mut wh_words: Vec<&str> = Vec::new();
        for word in text.split_whitespace() {
            if word.contains('/') {
                if !wh_words.is_empty() {
                    ssus.push(Ssu::wh(&wh_words.join(" "))?);
                    wh_words.clear();
                }
                ssus.push(word.parse()?);
            } else {
                wh_words.push(word);
            }
        }
        if !wh_words.is_empty() {
            ssus.push(Ssu::wh(&wh_words.join(" "))?);
        }
        MetaSequence::new(ssus, kind, cfg)
    }

    fn check(&self, cfg: &EngineConfig) -> Result<()> {
        if self.ssus.len() > cfg.max_len {
            return Err(Error::TooLong {
                len: self.ssus.len(),
                max: cfg.max_len,
            });
        }
        let mut counts: HashMap<SrTag, usize> = HashMap::new();
        for sr in self.ssus.iter().filter_map(Ssu::sr) {
            *counts.entry(sr).or_default() += 1;
        }
        if let Some((tag, count)) = counts
            .iter()
            .filter(|(_, c)| **c > cfg.r)
            .min_by_key(|(t, _)| **t)
        {
            return Err(Error::Repetition {
                tag: tag.to_string(),
                count: *count,
                limit: cfg.r,
                sequence: self.to_string(),
            });
        }
        if self.kind == Kind::Declarative {
            if let Some(Ssu::Wh(w)) = self.ssus.iter().find(|s| s.is_wh()) {
                return Err(Error::WhInDeclarative(w.as_str().to_string()));
            }
            if self.ssus.len() < 3 {
                return Err(Error::TooShort {
                    len: self.ssus.len(),
                });
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn ssus(&self) -> &[Ssu] {
        &self.ssus
    }

    pub fn len(&self) -> usize {
        self.ssus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ssus.is_empty()
    }

    pub fn has_verb(&self) -> bool {
        self.ssus.iter().any(Ssu::is_verb)
    }

    pub fn wh(&self) -> Option<&WhLiteral> {
        self.ssus.iter().find_map(|s| match s {
            Ssu::Wh(w) => Some(w),
            Ssu::Tagged { .. } => None,
        })
    }

    /// Space-joined match keys; equal for sequences that match
    /// position by position.
    pub fn normalized_key(&self) -> String {
        self.ssus
            .iter()
            .map(Ssu::match_key)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// The normalized SSU set.
    pub fn key_set(&self) -> HashSet<String> {
        self.ssus.iter().map(Ssu::match_key).collect()
    }
}

impl fmt::Display for MetaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, ssu) in self.ssus.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{ssu}")?;
        }
        Ok(())
    }
}

/// Maps match keys to dense symbol ids. Share one table across all
/// sequences that are compared with each other.
#[derive(Clone, Debug)]
pub struct SymbolTable {
    ids: HashMap<String, u32>,
    max_len: usize,
}

impl SymbolTable {
    pub fn new(max_len: usize) -> Self {
        SymbolTable {
            ids: HashMap::new(),
            max_len,
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn symbol(&mut self, ssu: &Ssu) -> u32 {
        let next = self.ids.len() as u32;
        *self.ids.entry(ssu.match_key()).or_insert(next)
    }

    pub fn encode(&mut self, ms: &MetaSequence) -> Result<Vec<u32>> {
        self.encode_ssus(ms.ssus())
    }

    pub fn encode_ssus(&mut self, ssus: &[Ssu]) -> Result<Vec<u32>> {
        if ssus.len() > self.max_len {
            return Err(Error::TooLong {
                len: ssus.len(),
                max: self.max_len,
            });
        }
        Ok(ssus.iter().map(|s| self.symbol(s)).collect())
    }
}
