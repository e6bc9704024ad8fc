//! Learning of (declarative, interrogative) meta-sequence pairs and the
//! deduplicated pair store with its JSON file format.

use std::collections::HashMap;
use std::io::Write;
use std::path::Path;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};

use crate::builder::{build_meta_sequence, PhrasalLexicon};
use crate::config::EngineConfig;
use crate::diag::Diagnostic;
use crate::error::{Error, Result};
use crate::preprocess::{detect_wh, segment_counted, segment_interrogative, strip_leading_cc};
use crate::sentence::{content_id, TaggedSentence};
use crate::ssu::{Kind, MetaSequence, Ssu};

pub const MSDIP_VERSION: u32 = 1;
pub const DEFAULT_CAPACITY: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Seed,
    Taught,
}

/// A learned (MD, MI) pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdiPair {
    pub id: String,
    pub md: MetaSequence,
    pub mi: MetaSequence,
    pub source: Source,
    pub created_at: Option<DateTime<Utc>>,
}

/// Identity of a pair under the equivalence-class encoding.
pub fn pair_key(md: &MetaSequence, mi: &MetaSequence) -> String {
    format!("{} => {}", md.normalized_key(), mi.normalized_key())
}

impl MdiPair {
    pub fn new(md: MetaSequence, mi: MetaSequence, source: Source) -> Result<Self> {
        if md.kind() != Kind::Declarative {
            return Err(Error::InvalidSentence(format!("`{md}` is not declarative")));
        }
        if mi.kind() != Kind::Interrogative || !mi.has_verb() {
            return Err(Error::MalformedInterrogative(mi.to_string()));
        }
        Ok(MdiPair {
            id: content_id(&pair_key(&md, &mi)),
            md,
            mi,
            source,
            created_at: Some(Utc::now()),
        })
    }

    pub fn key(&self) -> String {
        pair_key(&self.md, &self.mi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertOutcome {
    Inserted,
    Duplicate,
}

/// Stored patterns sharing one normalized MD.
#[derive(Clone, Debug)]
pub struct MdGroup<'s> {
    pub key: &'s str,
    pub md: &'s MetaSequence,
    pub pairs: Vec<&'s MdiPair>,
}

/// The deduplicated store of learned pairs.
#[derive(Clone, Debug)]
pub struct Msdip {
    config: EngineConfig,
    capacity: usize,
    pairs: Vec<MdiPair>,
    keys: HashMap<String, usize>,
    md_order: Vec<String>,
    md_members: HashMap<String, Vec<usize>>,
}

impl PartialEq for Msdip {
    fn eq(&self, other: &Self) -> bool {
        self.config == other.config && self.pairs == other.pairs
    }
}

impl Msdip {
    pub fn new(config: EngineConfig) -> Self {
        Msdip::with_capacity(config, DEFAULT_CAPACITY)
    }

    pub fn with_capacity(config: EngineConfig, capacity: usize) -> Self {
        Msdip {
            config,
            capacity,
            pairs: Vec::new(),
            keys: HashMap::new(),
            md_order: Vec::new(),
            md_members: HashMap::new(),
        }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[MdiPair] {
        &self.pairs
    }

    pub fn get(&self, id: &str) -> Option<&MdiPair> {
        self.pairs.iter().find(|p| p.id == id)
    }

    pub fn contains(&self, pair: &MdiPair) -> bool {
        self.keys.contains_key(&pair.key())
    }

    pub fn insert(&mut self, pair: MdiPair) -> Result<InsertOutcome> {
        let key = pair.key();
        if self.keys.contains_key(&key) {
            return Ok(InsertOutcome::Duplicate);
        }
        if self.pairs.len() >= self.capacity {
            return Err(Error::Capacity(self.capacity));
        }
        let idx = self.pairs.len();
        let md_key = pair.md.normalized_key();
        match self.md_members.get_mut(&md_key) {
            Some(members) => members.push(idx),
            None => {
                self.md_order.push(md_key.clone());
                self.md_members.insert(md_key, vec![idx]);
            }
        }
        self.keys.insert(key, idx);
        self.pairs.push(pair);
        Ok(InsertOutcome::Inserted)
    }

    /// Distinct MDs in first-insertion order, each with all its pairs.
    pub fn md_groups(&self) -> impl Iterator<Item = MdGroup<'_>> {
        self.md_order.iter().map(move |key| {
            let members = &self.md_members[key];
            MdGroup {
                key,
                md: &self.pairs[members[0]].md,
                pairs: members.iter().map(|&i| &self.pairs[i]).collect(),
            }
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let file = MsdipFile {
            version: MSDIP_VERSION,
            config: self.config.clone(),
            pairs: self.pairs.iter().map(PairRecord::from).collect(),
        };
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        let mut bytes = serde_json::to_vec_pretty(&file)?;
        bytes.push(b'\n');
        tmp.write_all(&bytes)?;
        tmp.flush()?;
        tmp.persist(path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Loaded> {
        let text = std::fs::read_to_string(path)?;
        Msdip::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Loaded> {
        let mut value: serde_json::Value = serde_json::from_str(text)?;
        let version = value
            .get("version")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| Error::Record {
                index: 0,
                message: "missing version".into(),
            })?;
        if version != u64::from(MSDIP_VERSION) {
            return Err(Error::Version(version as u32));
        }
        let config: EngineConfig = serde_json::from_value(
            value.get("config").cloned().unwrap_or(serde_json::Value::Null),
        )
        .map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        let records = match value.get_mut("pairs").map(serde_json::Value::take) {
            Some(serde_json::Value::Array(records)) => records,
            _ => Vec::new(),
        };
        let mut store = Msdip::new(config);
        let mut diagnostics = Vec::new();
        for (index, raw) in records.into_iter().enumerate() {
            let record: PairRecord = serde_json::from_value(raw).map_err(|e| Error::Record {
                index,
                message: e.to_string(),
            })?;
            let pair = record.into_pair(&store.config).map_err(|e| Error::Record {
                index,
                message: e.to_string(),
            })?;
            let id = pair.id.clone();
            if store.insert(pair)? == InsertOutcome::Duplicate {
                diagnostics.push(Diagnostic::warning(
                    Some(format!("record {index}")),
                    format!("duplicate pair {id} collapsed"),
                ));
            }
        }
        Ok(Loaded { store, diagnostics })
    }
}

/// A loaded store and any warnings raised while reading it.
#[derive(Debug)]
pub struct Loaded {
    pub store: Msdip,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Serialize, Deserialize)]
struct MsdipFile {
    version: u32,
    config: EngineConfig,
    pairs: Vec<PairRecord>,
}

#[derive(Serialize, Deserialize)]
struct PairRecord {
    id: String,
    source: Source,
    md: Vec<Ssu>,
    mi: Vec<Ssu>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    created_at: Option<DateTime<Utc>>,
}

impl From<&MdiPair> for PairRecord {
    fn from(p: &MdiPair) -> Self {
        PairRecord {
            id: p.id.clone(),
            source: p.source,
            md: p.md.ssus().to_vec(),
            mi: p.mi.ssus().to_vec(),
            created_at: p.created_at,
        }
    }
}

impl PairRecord {
    fn into_pair(self, cfg: &EngineConfig) -> Result<MdiPair> {
        let md = MetaSequence::new(self.md, Kind::Declarative, cfg)?;
        let mi = MetaSequence::new(self.mi, Kind::Interrogative, cfg)?;
        let mut pair = MdiPair::new(md, mi, self.source)?;
        pair.id = self.id;
        pair.created_at = self.created_at;
        Ok(pair)
    }
}

/// Pairs learned from one training group, with warnings.
#[derive(Clone, Debug, Default)]
pub struct Learned {
    pub pairs: Vec<MdiPair>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Declarative meta sequence of a training sentence: its first surviving
/// simple sentence.
pub fn declarative_sequence(
    decl: &TaggedSentence,
    cfg: &EngineConfig,
    lexicon: Option<&PhrasalLexicon>,
    diagnostics: &mut Vec<Diagnostic>,
) -> Result<MetaSequence> {
    let segments = segment_counted(decl)?;
    let mut simple = segments.sentences.into_iter();
    let first = simple.next().ok_or_else(|| {
        Error::InvalidSentence(format!("`{}` has no clause with subject, predicate and object", decl.text))
    })?;
    if simple.next().is_some() {
        diagnostics.push(Diagnostic::warning(
            Some(decl.id()),
            format!("`{}` has several clauses; only the first is paired", decl.text),
        ));
    }
    let (md, _) = build_meta_sequence(&strip_leading_cc(first), cfg, lexicon)?;
    Ok(md)
}

/// Declarative meta sequence of one clause (frame) of `decl`.
pub fn clause_sequence(
    decl: &TaggedSentence,
    frame: usize,
    cfg: &EngineConfig,
    lexicon: Option<&PhrasalLexicon>,
) -> Result<MetaSequence> {
    let clause = segment_counted(decl)?
        .sentences
        .into_iter()
        .find(|s| s.frame == frame)
        .ok_or_else(|| Error::InvalidSentence(format!("frame {frame} of `{}` is not a usable clause", decl.text)))?;
    let (md, _) = build_meta_sequence(&strip_leading_cc(clause), cfg, lexicon)?;
    Ok(md)
}

/// Interrogative meta sequence of a training question.
pub fn interrogative_sequence(
    question: &TaggedSentence,
    cfg: &EngineConfig,
    lexicon: Option<&PhrasalLexicon>,
    diagnostics: &mut Vec<Diagnostic>,
) -> Result<MetaSequence> {
    let s = detect_wh(strip_leading_cc(segment_interrogative(question)?));
    if s.wh().is_none() {
        diagnostics.push(Diagnostic::warning(
            Some(question.id()),
            format!("no interrogative pronoun found in `{}`", question.text),
        ));
    }
    let (mi, _) = build_meta_sequence(&s, cfg, lexicon)?;
    if !mi.has_verb() {
        return Err(Error::MalformedInterrogative(mi.to_string()));
    }
    Ok(mi)
}

/// A training example: a declarative sentence and questions about it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrainingPair {
    pub decl: TaggedSentence,
    pub interrogatives: Vec<TaggedSentence>,
}

/// Like [`learn_pair`] but for a chosen clause of the declarative.
pub fn learn_clause(
    decl: &TaggedSentence,
    frame: usize,
    interrogatives: &[TaggedSentence],
    cfg: &EngineConfig,
    lexicon: Option<&PhrasalLexicon>,
    source: Source,
) -> Result<Learned> {
    let mut learned = Learned::default();
    let md = clause_sequence(decl, frame, cfg, lexicon)?;
    for q in interrogatives {
        let mi = interrogative_sequence(q, cfg, lexicon, &mut learned.diagnostics)?;
        learned.pairs.push(MdiPair::new(md.clone(), mi, source)?);
    }
    Ok(learned)
}

/// One (MD, MI) pair per interrogative sentence.
pub fn learn_pair(
    decl: &TaggedSentence,
    interrogatives: &[TaggedSentence],
    cfg: &EngineConfig,
    lexicon: Option<&PhrasalLexicon>,
    source: Source,
) -> Result<Learned> {
    let mut learned = Learned::default();
    if interrogatives.is_empty() {
        return Ok(learned);
    }
    let md = declarative_sequence(decl, cfg, lexicon, &mut learned.diagnostics)?;
    for q in interrogatives {
        let mi = interrogative_sequence(q, cfg, lexicon, &mut learned.diagnostics)?;
        learned.pairs.push(MdiPair::new(md.clone(), mi, source)?);
    }
    Ok(learned)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decl(s: &str) -> MetaSequence {
        MetaSequence::parse(s, Kind::Declarative, &EngineConfig::default()).unwrap()
    }

    fn inter(s: &str) -> MetaSequence {
        MetaSequence::parse(s, Kind::Interrogative, &EngineConfig::default()).unwrap()
    }

    fn pair(x: &str, y: &str) -> MdiPair {
        MdiPair::new(decl(x), inter(y), Source::Seed).unwrap()
    }

    #[test]
    fn duplicate_insert_is_rejected() {
        let mut s = Msdip::new(EngineConfig::default());
        let p = pair("ARG0/NNP/PER V/VBD/ ARG1/NN/", "What V/VBD/ ARG0/NNP/PER V/VB/");
        assert_eq!(s.insert(p.clone()).unwrap(), InsertOutcome::Inserted);
        assert_eq!(s.insert(p).unwrap(), InsertOutcome::Duplicate);
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn noun_variants_are_duplicates() {
        let mut s = Msdip::new(EngineConfig::default());
        s.insert(pair("ARG0/NNP/PER V/VBD/ ARG1/NN/", "What V/VBD/ ARG0/NNP/PER V/VB/")).unwrap();
        let out = s
            .insert(pair("ARG0/NNP/PER V/VBD/ ARG1/NNS/", "What V/VBD/ ARG0/NNP/PER V/VB/"))
            .unwrap();
        assert_eq!(out, InsertOutcome::Duplicate);
    }

    #[test]
    fn same_md_different_mi_both_kept() {
        let mut s = Msdip::new(EngineConfig::default());
        s.insert(pair("ARG0/NNP/PER V/VBD/ ARG1/NN/", "What V/VBD/ ARG0/NNP/PER V/VB/")).unwrap();
        s.insert(pair("ARG0/NNP/PER V/VBD/ ARG1/NN/", "Who V/VBD/ ARG1/NN/")).unwrap();
        assert_eq!(s.len(), 2);
        let groups: Vec<_> = s.md_groups().collect();
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].pairs.len(), 2);
    }

    #[test]
    fn ids_are_content_hashes() {
        let a = pair("ARG0/NNP/PER V/VBD/ ARG1/NN/", "Who V/VBD/ ARG1/NN/");
        let b = pair("ARG0/NNPS/PER V/VBD/ ARG1/NN/", "Who V/VBD/ ARG1/NNS/");
        assert_eq!(a.id, b.id);
    }

    #[test]
    fn capacity_is_enforced() {
        let mut s = Msdip::with_capacity(EngineConfig::default(), 1);
        s.insert(pair("ARG0/NNP/PER V/VBD/ ARG1/NN/", "Who V/VBD/ ARG1/NN/")).unwrap();
        assert!(matches!(
            s.insert(pair("ARG0/NNP/PER V/VBZ/ ARG1/NN/", "Who V/VBZ/ ARG1/NN/")),
            Err(Error::Capacity(1))
        ));
    }

    #[test]
    fn mi_without_verb_is_malformed() {
        let err = MdiPair::new(decl("ARG0// V// ARG1//"), inter("Who ARG1/NN/"), Source::Seed).unwrap_err();
        assert!(matches!(err, Error::MalformedInterrogative(_)));
    }

    #[test]
    fn empty_store_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("msdip.json");
        let s = Msdip::new(EngineConfig::default());
        s.save(&path).unwrap();
        let loaded = Msdip::load(&path).unwrap();
        assert_eq!(loaded.store, s);
        assert!(loaded.diagnostics.is_empty());
    }

    #[test]
    fn load_reports_bad_version_and_record() {
        let bad_version = r#"{"version":2,"config":{"r":3,"phrasal_merge":true},"pairs":[]}"#;
        assert!(matches!(Msdip::from_json(bad_version), Err(Error::Version(2))));
        let bad_record = r#"{"version":1,"config":{"r":3,"phrasal_merge":true},"pairs":[
            {"id":"a","source":"seed","md":[["ARG0",null,null],["V",null,null],["ARG1",null,null]],"mi":[{"wh":"Who"},["V",null,null]]},
            {"id":"b","source":"seed","md":[["ARGQ",null,null]],"mi":[]}]}"#;
        match Msdip::from_json(bad_record) {
            Err(Error::Record { index, .. }) => assert_eq!(index, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn load_collapses_duplicates() {
        let text = r#"{"version":1,"config":{"r":3,"phrasal_merge":true},"pairs":[
            {"id":"a","source":"seed","md":[["ARG0",null,null],["V",null,null],["ARG1","NN",null]],"mi":[{"wh":"Who"},["V",null,null]]},
            {"id":"a","source":"taught","md":[["ARG0",null,null],["V",null,null],["ARG1","NNS",null]],"mi":[{"wh":"Who"},["V",null,null]]}]}"#;
        let loaded = Msdip::from_json(text).unwrap();
        assert_eq!(loaded.store.len(), 1);
        assert_eq!(loaded.diagnostics.len(), 1);
    }
}
