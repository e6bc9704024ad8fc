//! Synthetic tagged sentences and pattern pairs for load and fuzz runs.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::config::EngineConfig;
use crate::error::Result;
use crate::learner::{MdiPair, Source};
use crate::sentence::{Frame, TaggedSentence, Token};
use crate::ssu::{Kind, MetaSequence, Ssu};
use crate::tags::{NeTag, PosTag, SrTag};

struct Word {
    text: &'static str,
    lemma: &'static str,
    pos: PosTag,
    ne: Option<NeTag>,
}

const fn w(text: &'static str, lemma: &'static str, pos: PosTag, ne: Option<NeTag>) -> Word {
    Word { text, lemma, pos, ne }
}

const PEOPLE: &[Word] = &[
    w("Anna", "anna", PosTag::Nnp, Some(NeTag::Per)),
    w("Omar", "omar", PosTag::Nnp, Some(NeTag::Per)),
    w("Li", "li", PosTag::Nnp, Some(NeTag::Per)),
];
const NOUNS: &[Word] = &[
    w("letter", "letter", PosTag::Nn, None),
    w("books", "book", PosTag::Nns, None),
    w("garden", "garden", PosTag::Nn, None),
];
const PLACES: &[Word] = &[
    w("Rome", "rome", PosTag::Nnp, Some(NeTag::Loc)),
    w("Oslo", "oslo", PosTag::Nnp, Some(NeTag::Loc)),
];
const VERBS: &[Word] = &[
    w("wrote", "write", PosTag::Vbd, None),
    w("visits", "visit", PosTag::Vbz, None),
    w("like", "like", PosTag::Vbp, None),
    w("painted", "paint", PosTag::Vbd, None),
];
const ADVERBS: &[Word] = &[
    w("quickly", "quickly", PosTag::Rb, None),
    w("often", "often", PosTag::Rb, None),
];
const TIMES: &[Word] = &[
    w("yesterday", "yesterday", PosTag::Nn, None),
    w("today", "today", PosTag::Nn, None),
];
const DET: Word = w("the", "the", PosTag::Dt, None);

fn push(tokens: &mut Vec<Token>, labels: &mut Vec<Option<String>>, word: &Word, label: &str) {
    tokens.push(Token {
        index: tokens.len(),
        text: word.text.to_string(),
        lemma: word.lemma.to_string(),
        pos: word.pos,
        ne: word.ne,
    });
    labels.push(Some(label.to_string()));
}

fn argument<R: Rng>(rng: &mut R, tokens: &mut Vec<Token>, labels: &mut Vec<Option<String>>, label: &str) {
    match rng.random_range(0..3) {
        0 => push(tokens, labels, PEOPLE.choose(rng).unwrap(), label),
        1 => {
            push(tokens, labels, &DET, label);
            push(tokens, labels, NOUNS.choose(rng).unwrap(), label);
        }
        _ => push(tokens, labels, PLACES.choose(rng).unwrap(), label),
    }
}

/// A one-clause sentence: optional adverbial, subject, verb, object and up
/// to two trailing modifiers.
pub fn random_sentence<R: Rng>(rng: &mut R) -> TaggedSentence {
    let mut tokens = Vec::new();
    let mut labels = Vec::new();
    if rng.random_bool(0.15) {
        push(&mut tokens, &mut labels, TIMES.choose(rng).unwrap(), "ARGM-TMP");
    }
    argument(rng, &mut tokens, &mut labels, "ARG0");
    let predicate = tokens.len();
    push(&mut tokens, &mut labels, VERBS.choose(rng).unwrap(), "V");
    argument(rng, &mut tokens, &mut labels, "ARG1");
    for _ in 0..rng.random_range(0..3) {
        match rng.random_range(0..3) {
            0 => push(&mut tokens, &mut labels, TIMES.choose(rng).unwrap(), "ARGM-TMP"),
            1 => push(&mut tokens, &mut labels, ADVERBS.choose(rng).unwrap(), "ARGM-MNR"),
            _ => {
                push(&mut tokens, &mut labels, &w("in", "in", PosTag::In, None), "ARGM-LOC");
                push(&mut tokens, &mut labels, PLACES.choose(rng).unwrap(), "ARGM-LOC");
            }
        }
    }
    push(&mut tokens, &mut labels, &w(".", ".", PosTag::Period, None), "O");
    let text = tokens.iter().map(|t| t.text.as_str()).collect::<Vec<_>>().join(" ");
    TaggedSentence::new(text, tokens, vec![Frame { predicate_index: predicate, labels }])
        .expect("synthetic sentences are well formed")
}

/// A pattern pair asking about one non-verb unit of `md`. Subject
/// questions keep the verb; the others use a helping-verb frame.
pub fn random_pair<R: Rng>(rng: &mut R, md: &MetaSequence, cfg: &EngineConfig) -> Result<MdiPair> {
    let ssus = md.ssus();
    let verb = ssus.iter().position(Ssu::is_verb).expect("declarative patterns have a verb");
    let candidates: Vec<usize> = (0..ssus.len()).filter(|&i| i != verb).collect();
    let target = *candidates.choose(rng).unwrap();
    let subject = (0..verb).rev().find(|&i| ssus[i].sr().is_some_and(|s| s.is_numbered_arg()));
    let wh = ["What", "Who", "Where", "When"].choose(rng).unwrap();
    let mut mi = vec![Ssu::wh(wh)?];
    if Some(target) == subject || subject.is_none() {
        mi.extend(ssus.iter().enumerate().filter(|(i, _)| *i != target).map(|(_, s)| s.clone()));
    } else {
        let subject = subject.unwrap();
        mi.push(ssus[verb].clone());
        mi.push(ssus[subject].clone());
        mi.push(Ssu::tagged(SrTag::V, Some(PosTag::Vb), None));
        mi.extend(
            ssus.iter()
                .enumerate()
                .filter(|(i, _)| *i != target && *i != subject && *i != verb)
                .map(|(_, s)| s.clone()),
        );
    }
    let mi = MetaSequence::new(mi, Kind::Interrogative, cfg)?;
    MdiPair::new(md.clone(), mi, Source::Seed)
}
