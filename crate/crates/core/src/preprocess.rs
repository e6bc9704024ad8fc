//! Text normalization, frame-based segmentation into simple sentences,
//! leading-conjunction stripping and interrogative-pronoun detection.

use std::sync::OnceLock;

use regex::{Captures, Regex};

use crate::error::{Error, Result};
use crate::matcher::{roles_of, Roles};
use crate::sentence::{TaggedSentence, Token};
use crate::tags::{PosTag, SrTag};

/// Result of [`normalize_text_detailed`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedText {
    pub text: String,
    /// How many `'s` contractions were expanded to `is`.
    pub expanded_s: usize,
}

fn replacement_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(
            r"(?i)\b(e\.g\.|i\.e\.|a\.k\.a\.)|\b(gonna|wanna|gotta|gimme|lemme|ya)\b|(n['’]t|['’](?:m|s|re|ve))\b",
        )
        .expect("static regex")
    })
}

fn expansion(word: &str) -> &'static str {
    let lower = word.to_lowercase().replace('’', "'");
    match lower.as_str() {
        "e.g." => "for example",
        "i.e." => "that is",
        "a.k.a." => "also known as",
        "gonna" => "going to",
        "wanna" => "want to",
        "gotta" => "got to",
        "gimme" => "give me",
        "lemme" => "let me",
        "ya" => "you",
        "n't" => "not",
        "'m" => "am",
        "'s" => "is",
        "'re" => "are",
        "'ve" => "have",
        _ => unreachable!("pattern and table out of sync: {word}"),
    }
}

fn match_case(original: &str, replacement: &str) -> String {
    let starts_upper = original
        .chars()
        .find(|c| c.is_alphabetic())
        .is_some_and(char::is_uppercase);
    if starts_upper {
        let mut chars = replacement.chars();
        match chars.next() {
            Some(first) => first.to_uppercase().chain(chars).collect(),
            None => String::new(),
        }
    } else {
        replacement.to_string()
    }
}

/// Replaces contractions, abbreviations and slang with their full forms.
pub fn normalize_text(text: &str) -> String {
    normalize_text_detailed(text).text
}

pub fn normalize_text_detailed(text: &str) -> NormalizedText {
    let mut expanded_s = 0;
    let out = replacement_regex().replace_all(text, |caps: &Captures| {
        let whole = caps.get(0).expect("match");
        let word = whole.as_str();
        if let Some(contraction) = caps.get(3) {
            let exp = expansion(contraction.as_str());
            if exp == "is" {
                expanded_s += 1;
            }
            // Attach as a separate word when glued to the previous one.
            let glued = text[..whole.start()]
                .chars()
                .next_back()
                .is_some_and(|c| !c.is_whitespace());
            let exp = if exp == "not" { match_case(word, exp) } else { exp.to_string() };
            if glued {
                format!(" {exp}")
            } else {
                exp
            }
        } else {
            match_case(word, expansion(word))
        }
    });
    NormalizedText {
        text: out.into_owned(),
        expanded_s,
    }
}

/// True when an `is` token is directly followed by a past participle,
/// the shape left behind when a possessive or `has` was expanded to `is`.
pub fn suspicious_is_expansion(ts: &TaggedSentence) -> bool {
    ts.tokens
        .windows(2)
        .any(|w| w[0].text.eq_ignore_ascii_case("is") && w[1].pos == PosTag::Vbn)
}

/// One element of a simple sentence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Unit {
    Tagged { sr: SrTag, token: Token },
    /// Interrogative pronoun, possibly spanning several tokens.
    Wh { text: String, tokens: Vec<Token> },
}

impl Unit {
    pub fn sr(&self) -> Option<SrTag> {
        match self {
            Unit::Tagged { sr, .. } => Some(*sr),
            Unit::Wh { .. } => None,
        }
    }

    fn first_index(&self) -> usize {
        match self {
            Unit::Tagged { token, .. } => token.index,
            Unit::Wh { tokens, .. } => tokens.first().map_or(0, |t| t.index),
        }
    }
}

/// A clause with a single predicate, carved out of one SRL frame.
#[derive(Clone, Debug)]
pub struct SimpleSentence<'a> {
    pub source: &'a TaggedSentence,
    pub frame: usize,
    pub units: Vec<Unit>,
    pub is_interrogative: bool,
}

impl<'a> SimpleSentence<'a> {
    pub fn roles(&self) -> Roles {
        let srs: Vec<_> = self.units.iter().map(Unit::sr).collect();
        roles_of(&srs)
    }

    pub fn has_verb(&self) -> bool {
        self.units.iter().any(|u| u.sr() == Some(SrTag::V))
    }

    pub fn wh(&self) -> Option<&str> {
        self.units.iter().find_map(|u| match u {
            Unit::Wh { text, .. } => Some(text.as_str()),
            Unit::Tagged { .. } => None,
        })
    }

    /// Surface text of the units in order.
    pub fn text(&self) -> String {
        self.units
            .iter()
            .map(|u| match u {
                Unit::Tagged { token, .. } => token.text.as_str(),
                Unit::Wh { text, .. } => text.as_str(),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn frame_units<'a>(ts: &'a TaggedSentence, frame: usize) -> Result<SimpleSentence<'a>> {
    let f = &ts.frames[frame];
    let mut units = Vec::new();
    for token in &ts.tokens {
        if let Some(sr) = f.label(token.index)? {
            units.push(Unit::Tagged {
                sr,
                token: token.clone(),
            });
        }
    }
    Ok(SimpleSentence {
        source: ts,
        frame,
        units,
        is_interrogative: false,
    })
}

/// Segmentation outcome with the number of dropped clauses.
#[derive(Clone, Debug)]
pub struct Segments<'a> {
    pub sentences: Vec<SimpleSentence<'a>>,
    pub discarded: usize,
}

/// One candidate simple sentence per frame; candidates lacking a
/// predicate, subject or object are dropped.
pub fn segment(ts: &TaggedSentence) -> Result<Vec<SimpleSentence<'_>>> {
    segment_counted(ts).map(|s| s.sentences)
}

pub fn segment_counted(ts: &TaggedSentence) -> Result<Segments<'_>> {
    if ts.frames.is_empty() {
        return Err(Error::NoPredicate);
    }
    let mut sentences = Vec::new();
    let mut discarded = 0;
    for frame in 0..ts.frames.len() {
        let s = frame_units(ts, frame)?;
        let roles = s.roles();
        if roles.predicate.is_some() && roles.subject.is_some() && roles.object.is_some() {
            sentences.push(s);
        } else {
            discarded += 1;
        }
    }
    Ok(Segments {
        sentences,
        discarded,
    })
}

/// The simple sentence of an interrogative training sentence: the frame
/// covering the most tokens (first on ties). No subject/object filter is
/// applied since the pronoun stands in for one of them.
pub fn segment_interrogative(ts: &TaggedSentence) -> Result<SimpleSentence<'_>> {
    let mut best: Option<SimpleSentence<'_>> = None;
    for frame in 0..ts.frames.len() {
        let s = frame_units(ts, frame)?;
        if best.as_ref().is_none_or(|b| s.units.len() > b.units.len()) {
            best = Some(s);
        }
    }
    best.ok_or(Error::NoPredicate)
}

/// Drops coordinating conjunctions that precede the subject.
pub fn strip_leading_cc(mut s: SimpleSentence<'_>) -> SimpleSentence<'_> {
    let Some(subject) = s.roles().subject else {
        return s;
    };
    let mut i = 0;
    s.units.retain(|u| {
        let keep = match u {
            Unit::Tagged { token, .. } => i >= subject || token.pos != PosTag::Cc,
            Unit::Wh { .. } => true,
        };
        i += 1;
        keep
    });
    s
}

/// Marks the sentence-initial interrogative pronoun (joining `How
/// many`/`How much`) as a wh unit and flags the sentence interrogative.
pub fn detect_wh(mut s: SimpleSentence<'_>) -> SimpleSentence<'_> {
    s.is_interrogative = true;
    let tokens = &s.source.tokens;
    let Some(first) = tokens.first() else {
        return s;
    };
    if !first.pos.is_wh() {
        return s;
    }
    let mut wh_tokens = vec![first.clone()];
    if first.text.eq_ignore_ascii_case("how") {
        if let Some(next) = tokens.get(1) {
            let lower = next.text.to_lowercase();
            if lower == "many" || lower == "much" {
                wh_tokens.push(next.clone());
            }
        }
    }
    let last = wh_tokens.last().map_or(0, |t| t.index);
    s.units.retain(|u| u.first_index() > last);
    let text = wh_tokens
        .iter()
        .map(|t| t.text.as_str())
        .collect::<Vec<_>>()
        .join(" ");
    s.units.insert(
        0,
        Unit::Wh {
            text,
            tokens: wh_tokens,
        },
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sentence::Frame;
    use crate::tags::NeTag;

    fn tok(i: usize, text: &str, pos: &str, ne: Option<&str>) -> Token {
        Token {
            index: i,
            text: text.into(),
            lemma: text.to_lowercase(),
            pos: pos.parse().unwrap(),
            ne: ne.map(|n| n.parse::<NeTag>().unwrap()),
        }
    }

    fn sentence(words: &[(&str, &str)], frames: &[(usize, &[Option<&str>])]) -> TaggedSentence {
        let tokens: Vec<Token> = words
            .iter()
            .enumerate()
            .map(|(i, (w, p))| tok(i, w, p, None))
            .collect();
        let text = words.iter().map(|(w, _)| *w).collect::<Vec<_>>().join(" ");
        let frames = frames
            .iter()
            .map(|(p, labels)| Frame {
                predicate_index: *p,
                labels: labels.iter().map(|l| l.map(String::from)).collect(),
            })
            .collect();
        TaggedSentence::new(text, tokens, frames).unwrap()
    }

    #[test]
    fn normalizes_contractions_and_slang() {
        assert_eq!(normalize_text("I'm gonna leave"), "I am going to leave");
        assert_eq!(normalize_text("John left."), "John left.");
        assert_eq!(
            normalize_text("they've a.k.a. met"),
            "they have also known as met"
        );
        assert_eq!(normalize_text("I don't know"), "I do not know");
        assert_eq!(normalize_text("e.g., apples i.e. fruit"), "for example, apples that is fruit");
        assert_eq!(normalize_text("Gonna see ya"), "Going to see you");
        assert_eq!(normalize_text("Maya yard"), "Maya yard");
        assert_eq!(normalize_text("we ’re here"), "we are here");
    }

    #[test]
    fn counts_is_expansions() {
        let n = normalize_text_detailed("John's done and it's late");
        assert_eq!(n.text, "John is done and it is late");
        assert_eq!(n.expanded_s, 2);
    }

    #[test]
    fn normalize_is_idempotent_on_samples() {
        for s in ["I'm gonna leave", "they've a.k.a. met", "Don't, e.g. now", "gimme lemme ya"] {
            let once = normalize_text(s);
            assert_eq!(normalize_text(&once), once);
        }
    }

    #[test]
    fn segments_two_frame_sentence() {
        // Tom missed the bus because he overslept
        let ts = sentence(
            &[
                ("Tom", "NNP"),
                ("missed", "VBD"),
                ("the", "DT"),
                ("bus", "NN"),
                ("because", "IN"),
                ("he", "PRP"),
                ("overslept", "VBD"),
            ],
            &[
                (
                    1,
                    &[
                        Some("B-ARG0"),
                        Some("B-V"),
                        Some("B-ARG1"),
                        Some("I-ARG1"),
                        Some("B-ARGM-CAU"),
                        Some("I-ARGM-CAU"),
                        Some("I-ARGM-CAU"),
                    ],
                ),
                (6, &[None, None, None, None, None, Some("B-ARG0"), Some("B-V")]),
            ],
        );
        let segs = segment_counted(&ts).unwrap();
        assert_eq!(segs.sentences.len(), 1);
        assert_eq!(segs.discarded, 1);
        assert_eq!(segs.sentences[0].units.len(), 7);
        assert!(segs.sentences[0].has_verb());
    }

    #[test]
    fn single_frame_keeps_labeled_tokens_only() {
        let ts = sentence(
            &[("John", "NNP"), ("left", "VBD"), ("Paris", "NNP"), (".", ".")],
            &[(1, &[Some("ARG0"), Some("V"), Some("ARG1"), None])],
        );
        let out = segment(&ts).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].text(), "John left Paris");
    }

    #[test]
    fn frame_without_object_is_dropped() {
        let ts = sentence(
            &[("John", "NNP"), ("slept", "VBD"), ("soundly", "RB")],
            &[(1, &[Some("ARG0"), Some("V"), Some("ARGM-MNR")])],
        );
        assert!(segment(&ts).unwrap().is_empty());
    }

    #[test]
    fn no_frames_is_an_error() {
        let ts = sentence(&[("Hello", "UH")], &[]);
        assert!(matches!(segment(&ts), Err(Error::NoPredicate)));
    }

    #[test]
    fn strips_cc_before_subject_only() {
        let ts = sentence(
            &[
                ("But", "CC"),
                ("John", "NNP"),
                ("left", "VBD"),
                ("bread", "NN"),
                ("and", "CC"),
                ("milk", "NN"),
            ],
            &[(2, &[Some("ARGM-DIS"), Some("ARG0"), Some("V"), Some("ARG1"), Some("ARG1"), Some("ARG1")])],
        );
        let s = segment(&ts).unwrap().remove(0);
        let stripped = strip_leading_cc(s);
        assert_eq!(stripped.text(), "John left bread and milk");
        let again = strip_leading_cc(stripped.clone());
        assert_eq!(again.units, stripped.units);
    }

    #[test]
    fn detects_sentence_initial_wh() {
        let ts = sentence(
            &[
                ("Where", "WRB"),
                ("did", "VBD"),
                ("John", "NNP"),
                ("travel", "VB"),
                ("?", "."),
            ],
            &[(3, &[Some("ARGM-LOC"), Some("V"), Some("ARG0"), Some("V"), None])],
        );
        let s = detect_wh(segment_interrogative(&ts).unwrap());
        assert!(s.is_interrogative);
        assert_eq!(s.wh(), Some("Where"));
        assert_eq!(s.units.len(), 4);
    }

    #[test]
    fn joins_how_many() {
        let ts = sentence(
            &[
                ("How", "WRB"),
                ("many", "JJ"),
                ("did", "VBD"),
                ("they", "PRP"),
                ("buy", "VB"),
            ],
            &[(4, &[None, None, Some("V"), Some("ARG0"), Some("V")])],
        );
        let s = detect_wh(segment_interrogative(&ts).unwrap());
        assert_eq!(s.wh(), Some("How many"));
        assert_eq!(s.units.len(), 4);
    }

    #[test]
    fn declarative_without_wh_is_untouched() {
        let ts = sentence(
            &[("John", "NNP"), ("left", "VBD"), ("Paris", "NNP")],
            &[(1, &[Some("ARG0"), Some("V"), Some("ARG1")])],
        );
        let s = detect_wh(segment(&ts).unwrap().remove(0));
        assert_eq!(s.wh(), None);
        assert_eq!(s.units.len(), 3);
    }

    #[test]
    fn flags_is_before_participle() {
        let ts = sentence(
            &[("John", "NNP"), ("is", "VBZ"), ("gone", "VBN")],
            &[(1, &[Some("ARG1"), Some("V"), Some("ARG2")])],
        );
        assert!(suspicious_is_expansion(&ts));
    }
}
