//! Meta-sequence generation: per-token SSUs, SSU merging, and the
//! SSU-text map used to realize questions and answers.

use std::collections::HashSet;
use std::path::Path;

use crate::config::EngineConfig;
use crate::error::Result;
use crate::preprocess::{SimpleSentence, Unit};
use crate::sentence::Token;
use crate::ssu::{Kind, MetaSequence, Ssu};
use crate::tags::{PosTag, SrTag};

/// One merged position of a meta sequence and the text behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapEntry {
    pub ssu: Ssu,
    /// Space-joined surface text of the merged tokens.
    pub text: String,
    /// For V units: lemma of the leftmost verb token.
    pub head_lemma: Option<String>,
    /// For V units: surface text of the tokens after the head verb.
    pub particle: Option<String>,
    pub raw_pos: Option<PosTag>,
    pub tokens: Vec<Token>,
}

impl MapEntry {
    /// Base form of a V unit with its particle, e.g. `fly to`.
    pub fn base_form(&self) -> Option<String> {
        let lemma = self.head_lemma.as_ref()?;
        Some(match &self.particle {
            Some(p) => format!("{lemma} {p}"),
            None => lemma.clone(),
        })
    }

    /// Single token standing for the whole merged group.
    pub fn representative_token(&self) -> Token {
        let first = &self.tokens[0];
        Token {
            index: first.index,
            text: self.text.clone(),
            lemma: self.head_lemma.clone().unwrap_or_else(|| first.lemma.clone()),
            pos: self.raw_pos.unwrap_or(first.pos),
            ne: self.ssu.ne(),
        }
    }
}

/// Positional map from meta-sequence SSUs to surface text.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SsuTextMap {
    pub entries: Vec<MapEntry>,
}

impl SsuTextMap {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Units that reproduce this map when merged again.
    pub fn representative_units(&self) -> Vec<(Ssu, Token)> {
        self.entries
            .iter()
            .map(|e| (e.ssu.clone(), e.representative_token()))
            .collect()
    }
}

/// One SSU per unit: SR from the frame, POS and NE from the token.
pub fn build_units(s: &SimpleSentence<'_>) -> Vec<(Ssu, Token)> {
    s.units
        .iter()
        .map(|u| match u {
            Unit::Tagged { sr, token } => (Ssu::tagged(*sr, Some(token.pos), token.ne), token.clone()),
            Unit::Wh { text, tokens } => {
                let mut token = tokens[0].clone();
                token.text = text.clone();
                token.lemma = text.to_lowercase();
                (Ssu::wh(text).expect("wh tokens have text"), token)
            }
        })
        .collect()
}

/// A merged run of units before it is turned into a meta sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergedGroup {
    pub ssu: Ssu,
    pub units: Vec<(Ssu, Token)>,
}

fn is_particle_unit(ssu: &Ssu) -> bool {
    matches!(ssu, Ssu::Tagged { sr, pos: Some(pos), .. } if *sr != SrTag::V && pos.is_particle())
}

/// Marks prepositions/adverbs that form a run directly before or after a
/// V unit. Such runs only merge among themselves.
fn protected_particles(units: &[(Ssu, Token)]) -> Vec<bool> {
    let n = units.len();
    let mut marks = vec![false; n];
    for v in (0..n).filter(|&i| units[i].0.is_verb()) {
        if v + 1 < n && is_particle_unit(&units[v + 1].0) {
            let sr = units[v + 1].0.sr();
            let mut j = v + 1;
            while j < n && is_particle_unit(&units[j].0) && units[j].0.sr() == sr {
                marks[j] = true;
                j += 1;
            }
        }
        if v > 0 && is_particle_unit(&units[v - 1].0) {
            let sr = units[v - 1].0.sr();
            let mut j = v;
            while j > 0 && is_particle_unit(&units[j - 1].0) && units[j - 1].0.sr() == sr {
                marks[j - 1] = true;
                j -= 1;
            }
        }
    }
    marks
}

fn merged_ssu(group: &[(Ssu, Token)]) -> Ssu {
    if group.len() == 1 {
        return group[0].0.clone();
    }
    let sr = group[0].0.sr().expect("only tagged units merge");
    let pos = group
        .iter()
        .rev()
        .filter_map(|(s, _)| s.pos())
        .find(|p| p.is_noun())
        .or_else(|| group.iter().rev().find_map(|(s, _)| s.pos()));
    let ne = group.iter().rev().find_map(|(s, _)| s.ne());
    Ssu::tagged(sr, pos, ne)
}

/// A same-role group next to a verb's particle run joins the run when
/// its own merged POS is a preposition or adverb, so that merging the
/// output again changes nothing.
fn absorb_particle_groups(groups: &mut Vec<(Vec<(Ssu, Token)>, bool)>) {
    let mut i = 0;
    while i < groups.len() {
        let (units, protected) = &groups[i];
        let ssu = merged_ssu(units);
        let absorbable = !*protected && is_particle_unit(&ssu);
        let same_run = |j: usize| groups[j].1 && groups[j].0[0].0.sr() == ssu.sr();
        if absorbable && i > 0 && same_run(i - 1) {
            let (units, _) = groups.remove(i);
            groups[i - 1].0.extend(units);
            i -= 1;
        } else if absorbable && i + 1 < groups.len() && same_run(i + 1) {
            let (mut units, _) = groups.remove(i);
            units.append(&mut groups[i].0);
            groups[i].0 = units;
        } else {
            i += 1;
        }
    }
}

/// Greedy left-to-right merge of consecutive units sharing an SR tag.
/// With `phrasal` set, prepositions and adverbs adjacent to a verb stay
/// apart from non-particle neighbours.
pub fn merge_groups(units: &[(Ssu, Token)], phrasal: bool) -> Vec<MergedGroup> {
    let marks = if phrasal {
        protected_particles(units)
    } else {
        vec![false; units.len()]
    };
    let mut groups: Vec<(Vec<(Ssu, Token)>, bool)> = Vec::new();
    for (unit, mark) in units.iter().zip(marks) {
        if let Some((group, group_mark)) = groups.last_mut() {
            let last = &group.last().expect("groups are non-empty").0;
            let same_sr = matches!((last.sr(), unit.0.sr()), (Some(a), Some(b)) if a == b);
            if same_sr && *group_mark == mark {
                group.push(unit.clone());
                continue;
            }
        }
        groups.push((vec![unit.clone()], mark));
    }
    if phrasal {
        absorb_particle_groups(&mut groups);
    }
    groups
        .into_iter()
        .map(|(units, _)| MergedGroup {
            ssu: merged_ssu(&units),
            units,
        })
        .collect()
}

fn map_entry(group: MergedGroup) -> MapEntry {
    let text = group
        .units
        .iter()
        .map(|(_, t)| t.text.as_str())
        .collect::<Vec<_>>()
        .join(" ");
    let (head_lemma, particle) = if group.ssu.is_verb() {
        match group.units.iter().position(|(_, t)| t.pos.is_verb()) {
            Some(h) => {
                let rest: Vec<&str> = group.units[h + 1..]
                    .iter()
                    .map(|(_, t)| t.text.as_str())
                    .collect();
                let particle = (!rest.is_empty()).then(|| rest.join(" "));
                (Some(group.units[h].1.lemma.clone()), particle)
            }
            None => (None, None),
        }
    } else {
        (None, None)
    };
    MapEntry {
        raw_pos: group.ssu.pos(),
        ssu: group.ssu,
        text,
        head_lemma,
        particle,
        tokens: group.units.into_iter().map(|(_, t)| t).collect(),
    }
}

fn finish(groups: Vec<MergedGroup>, kind: Kind, cfg: &EngineConfig) -> Result<(MetaSequence, SsuTextMap)> {
    let entries: Vec<MapEntry> = groups.into_iter().map(map_entry).collect();
    let ms = MetaSequence::new(entries.iter().map(|e| e.ssu.clone()).collect(), kind, cfg)?;
    Ok((ms, SsuTextMap { entries }))
}

/// Merges without regard to phrasal verbs.
pub fn merge_standard(units: &[(Ssu, Token)], kind: Kind, cfg: &EngineConfig) -> Result<(MetaSequence, SsuTextMap)> {
    finish(merge_groups(units, false), kind, cfg)
}

/// Merges but keeps prepositions/adverbs next to a verb as their own units.
pub fn merge_phrasal_aware(
    units: &[(Ssu, Token)],
    kind: Kind,
    cfg: &EngineConfig,
) -> Result<(MetaSequence, SsuTextMap)> {
    finish(merge_groups(units, true), kind, cfg)
}

/// Picks the merge variant from `cfg.phrasal_merge`.
pub fn merge(units: &[(Ssu, Token)], kind: Kind, cfg: &EngineConfig) -> Result<(MetaSequence, SsuTextMap)> {
    if cfg.phrasal_merge {
        merge_phrasal_aware(units, kind, cfg)
    } else {
        merge_standard(units, kind, cfg)
    }
}

/// Builds the meta sequence and text map of a preprocessed simple sentence.
pub fn build_meta_sequence(
    s: &SimpleSentence<'_>,
    cfg: &EngineConfig,
    lexicon: Option<&PhrasalLexicon>,
) -> Result<(MetaSequence, SsuTextMap)> {
    let mut units = build_units(s);
    if let Some(lex) = lexicon {
        units = lex.pre_join(&units);
    }
    let kind = if s.is_interrogative {
        Kind::Interrogative
    } else {
        Kind::Declarative
    };
    merge(&units, kind, cfg)
}

/// Word list of phrasal verbs (`fly to`, `look after`), one lowercase
/// phrase per line: verb lemma followed by its particles.
#[derive(Clone, Debug, Default)]
pub struct PhrasalLexicon {
    phrases: HashSet<Vec<String>>,
    longest: usize,
}

impl PhrasalLexicon {
    pub fn from_lines<'a>(lines: impl IntoIterator<Item = &'a str>) -> Self {
        let mut lex = PhrasalLexicon::default();
        for line in lines {
            let words: Vec<String> = line.split_whitespace().map(str::to_lowercase).collect();
            if words.len() >= 2 && !line.trim_start().starts_with('#') {
                lex.longest = lex.longest.max(words.len());
                lex.phrases.insert(words);
            }
        }
        lex
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(Self::from_lines(text.lines()))
    }

    pub fn len(&self) -> usize {
        self.phrases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phrases.is_empty()
    }

    /// Joins a V unit with the particle units that complete a listed
    /// phrase into one V unit carrying the verb's POS.
    pub fn pre_join(&self, units: &[(Ssu, Token)]) -> Vec<(Ssu, Token)> {
        let mut out = Vec::with_capacity(units.len());
        let mut i = 0;
        while i < units.len() {
            let (ssu, token) = &units[i];
            if ssu.is_verb() && token.pos.is_verb() {
                let mut words = vec![token.lemma.to_lowercase()];
                let mut matched = None;
                for (j, (_, next)) in units.iter().enumerate().skip(i + 1).take(self.longest.saturating_sub(1)) {
                    words.push(next.text.to_lowercase());
                    if self.phrases.contains(&words) {
                        matched = Some(j);
                    }
                }
                if let Some(end) = matched {
                    let rest = &units[i + 1..=end];
                    let mut joined = token.clone();
                    for (_, t) in rest {
                        joined.text.push(' ');
                        joined.text.push_str(&t.text);
                        joined.lemma.push(' ');
                        joined.lemma.push_str(&t.text.to_lowercase());
                    }
                    out.push((ssu.clone(), joined));
                    i = end + 1;
                    continue;
                }
            }
            out.push(units[i].clone());
            i += 1;
        }
        out
    }
}
