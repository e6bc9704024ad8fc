//! Question construction from a matched pattern pair, helping-verb
//! resolution, surface realization, and answer extraction.

use std::collections::HashSet;

use serde::{Deserialize, Serialize, Serializer};

use crate::builder::{build_meta_sequence, MapEntry, PhrasalLexicon, SsuTextMap};
use crate::config::{Case2Order, EngineConfig};
use crate::diag::Diagnostic;
use crate::error::{Error, Result};
use crate::learner::{MdiPair, Msdip};
use crate::matcher::{grammatical_roles, missing_roles, rank_candidates, Classification, Lcs, MatchResult};
use crate::preprocess::{segment_counted, strip_leading_cc};
use crate::sentence::{content_id, TaggedSentence};
use crate::ssu::{ssu_matches, Kind, MetaSequence, Ssu};
use crate::tags::PosTag;

/// Near misses kept on a teach request.
pub const NEAR_MISS_LIMIT: usize = 3;

fn display<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// A generated question-answer pair.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QaPair {
    pub sentence: String,
    pub sentence_ref: String,
    pub question: String,
    pub answer: String,
    pub wh: Option<String>,
    #[serde(serialize_with = "display")]
    pub question_ms: MetaSequence,
    pub answer_ssus: Vec<Ssu>,
    pub pair_id: String,
    pub classification: Classification,
}

/// One line of the QAP output file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QapLine {
    pub sentence: String,
    pub question: String,
    pub answer: String,
    pub wh: Option<String>,
    pub pair_id: String,
    #[serde(rename = "match")]
    pub classification: String,
}

impl QaPair {
    pub fn to_line(&self) -> QapLine {
        QapLine {
            sentence: self.sentence.clone(),
            question: self.question.clone(),
            answer: self.answer.clone(),
            wh: self.wh.clone(),
            pair_id: self.pair_id.clone(),
            classification: self.classification.as_str().to_string(),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.to_line()).expect("QAP lines serialize")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TeachStatus {
    Pending,
    Taught,
    Dismissed,
}

/// A stored pattern that came close to matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearMiss {
    pub md: String,
    pub pair_ids: Vec<String>,
    pub z_len: usize,
    pub x_off: usize,
    pub xs_off: usize,
    pub classification: Classification,
    pub missing_roles: Vec<String>,
}

/// A clause waiting for a human to supply interrogative sentences.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TeachRequest {
    pub id: String,
    pub sentence_ref: String,
    pub text: String,
    pub meta_sequence: String,
    pub classification: Classification,
    pub near_misses: Vec<NearMiss>,
    pub status: TeachStatus,
    /// The tagged sentence and clause (frame) the request is about.
    pub tagged: TaggedSentence,
    pub frame: usize,
}

/// Builds the question meta sequence: `y` minus the units shared by `x`
/// and `y` but absent from `xs`, followed by the input's extra units
/// after and before the match.
pub fn build_question_ssus(
    x: &MetaSequence,
    y: &MetaSequence,
    xs: &MetaSequence,
    z: &Lcs,
    cfg: &EngineConfig,
) -> Result<MetaSequence> {
    let x_set = x.key_set();
    let y_set = y.key_set();
    let xs_set = xs.key_set();
    let deleted: HashSet<&String> = x_set
        .intersection(&y_set)
        .filter(|k| !xs_set.contains(*k))
        .collect();
    let mut out: Vec<Ssu> = y
        .ssus()
        .iter()
        .filter(|s| s.is_wh() || !deleted.contains(&s.match_key()))
        .cloned()
        .collect();

    if z.len < xs.len() {
        let mut present: HashSet<String> = out.iter().map(Ssu::match_key).collect();
        let mut extra = |slice: &[Ssu]| -> Vec<Ssu> {
            slice
                .iter()
                .filter(|s| {
                    let key = s.match_key();
                    !x_set.contains(&key) && present.insert(key)
                })
                .cloned()
                .collect()
        };
        let before_end = z.b_off.min(xs.len());
        let after_start = (z.b_off + z.len).min(xs.len());
        let (first, second) = match cfg.case2_order {
            Case2Order::AfterThenBefore => {
                let after = extra(&xs.ssus()[after_start..]);
                let before = extra(&xs.ssus()[..before_end]);
                (after, before)
            }
            Case2Order::BeforeThenAfter => {
                let before = extra(&xs.ssus()[..before_end]);
                let after = extra(&xs.ssus()[after_start..]);
                (before, after)
            }
        };
        out.extend(first);
        out.extend(second);
    }

    let ms = MetaSequence::new(out, Kind::Interrogative, cfg)?;
    if !ms.has_verb() {
        return Err(Error::DegenerateQuestion(ms.to_string()));
    }
    Ok(ms)
}

fn is_plural_subject(entry: &MapEntry) -> bool {
    match entry.raw_pos {
        Some(PosTag::Nns) | Some(PosTag::Nnps) => true,
        Some(PosTag::Prp) => {
            let word = entry.text.to_lowercase();
            matches!(word.as_str(), "i" | "you" | "we" | "they")
        }
        _ => false,
    }
}

fn helping_verb(tense: Option<PosTag>, plural: bool) -> Option<&'static str> {
    match tense? {
        PosTag::Vbd => Some("did"),
        PosTag::Vbp | PosTag::Vbz if plural => Some("do"),
        PosTag::Vbp | PosTag::Vbz => Some("does"),
        _ => None,
    }
}

/// Text of a map entry as it reads inside a question: a sentence-initial
/// common word loses its capital.
fn inner_text(entry: &MapEntry) -> String {
    let first = &entry.tokens[0];
    let keep_case = first.index != 0
        || matches!(first.pos, PosTag::Nnp | PosTag::Nnps)
        || first.text == "I";
    if keep_case {
        return entry.text.clone();
    }
    let mut chars = entry.text.chars();
    match chars.next() {
        Some(c) => c.to_lowercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// Replaces every question SSU with text from the input's map. In a
/// pattern with two V units whose second is VB, the first becomes
/// do/does/did and the second the base form of the input's verb.
pub fn resolve_helping_verbs(ys: &MetaSequence, xs: &MetaSequence, map: &SsuTextMap) -> Result<Vec<String>> {
    let verbs: Vec<usize> = ys
        .ssus()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_verb())
        .map(|(i, _)| i)
        .collect();
    let two_v = verbs.len() >= 2 && ys.ssus()[verbs[1]].pos() == Some(PosTag::Vb);
    let (helper, main) = if two_v {
        (Some(verbs[0]), Some(verbs[1]))
    } else {
        (None, None)
    };

    let mut used = vec![false; map.entries.len()];
    let mut pieces = Vec::with_capacity(ys.len());
    for (i, ssu) in ys.ssus().iter().enumerate() {
        if Some(i) == helper {
            let plural = grammatical_roles(xs)
                .subject
                .and_then(|p| map.entries.get(p))
                .is_some_and(is_plural_subject);
            let verb = helping_verb(ssu.pos(), plural).ok_or_else(|| Error::Unrealizable(ssu.to_string()))?;
            pieces.push(verb.to_string());
        } else if Some(i) == main {
            let (idx, entry) = map
                .entries
                .iter()
                .enumerate()
                .find(|(j, e)| !used[*j] && e.ssu.is_verb())
                .ok_or_else(|| Error::Unrealizable(ssu.to_string()))?;
            used[idx] = true;
            pieces.push(entry.base_form().ok_or_else(|| Error::MissingLemma(entry.text.clone()))?);
        } else if let Ssu::Wh(w) = ssu {
            pieces.push(w.as_str().to_string());
        } else {
            let (idx, entry) = map
                .entries
                .iter()
                .enumerate()
                .find(|(j, e)| !used[*j] && ssu_matches(&e.ssu, ssu))
                .ok_or_else(|| Error::Unrealizable(ssu.to_string()))?;
            used[idx] = true;
            pieces.push(inner_text(entry));
        }
    }
    Ok(pieces)
}

/// Removes trailing punctuation tokens and sentence-final marks.
pub fn strip_terminal_punctuation(text: &str) -> String {
    let mut s = text.trim_end().to_string();
    loop {
        let Some(last) = s.chars().next_back() else {
            break;
        };
        if !matches!(last, '.' | '!' | '?' | ',' | ';' | ':') {
            break;
        }
        let word_start = s.rfind(char::is_whitespace).map_or(0, |i| i + 1);
        let word = &s[word_start..];
        if word.chars().all(|c| !c.is_alphanumeric()) {
            s.truncate(word_start);
        } else if last == '.' && word[..word.len() - 1].contains('.') {
            // Abbreviation such as U.S.
            break;
        } else {
            s.pop();
        }
        s = s.trim_end().to_string();
    }
    s
}

/// Joins the pieces, capitalizes the first letter and ends with `?`.
pub fn realize_question(pieces: &[String]) -> String {
    let joined = pieces
        .iter()
        .map(|p| strip_terminal_punctuation(p))
        .filter(|p| !p.is_empty())
        .collect::<Vec<_>>()
        .join(" ");
    let joined = strip_terminal_punctuation(&joined);
    let mut chars = joined.chars();
    let mut out: String = match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    };
    out.push('?');
    out
}

/// Answer units: those of `x` not in `y`, taken from `xs` in order.
pub fn extract_answer(
    x: &MetaSequence,
    y: &MetaSequence,
    xs: &MetaSequence,
    map: &SsuTextMap,
) -> Result<(Vec<Ssu>, String)> {
    let y_set = y.key_set();
    let answer_keys: HashSet<String> = x.key_set().into_iter().filter(|k| !y_set.contains(k)).collect();
    let mut ssus = Vec::new();
    let mut texts = Vec::new();
    for (i, ssu) in xs.ssus().iter().enumerate() {
        if answer_keys.contains(&ssu.match_key()) {
            ssus.push(ssu.clone());
            texts.push(strip_terminal_punctuation(&map.entries[i].text));
        }
    }
    let text = texts.into_iter().filter(|t| !t.is_empty()).collect::<Vec<_>>().join(" ");
    if text.is_empty() {
        return Err(Error::NoAnswer);
    }
    Ok((ssus, text))
}

/// Everything produced for one input sentence.
#[derive(Clone, Debug, Default)]
pub struct Generation {
    pub qaps: Vec<QaPair>,
    pub teach_requests: Vec<TeachRequest>,
    pub diagnostics: Vec<Diagnostic>,
    /// Clauses kept after segmentation.
    pub clauses: usize,
    /// Clauses dropped for lacking a subject or object.
    pub discarded: usize,
    /// Best classification per kept clause.
    pub classifications: Vec<Classification>,
}

fn near_miss(m: &MatchResult<'_>, xs: &MetaSequence) -> NearMiss {
    NearMiss {
        md: m.md.map(ToString::to_string).unwrap_or_default(),
        pair_ids: m.pairs.iter().map(|p| p.id.clone()).collect(),
        z_len: m.z_len,
        x_off: m.x_off,
        xs_off: m.xs_off,
        classification: m.classification,
        missing_roles: missing_roles(&m.lcs(), xs).into_iter().map(String::from).collect(),
    }
}

/// Question-answer pair for one stored pair against a matched input.
pub fn qap_for_pair(
    ts: &TaggedSentence,
    pair: &MdiPair,
    xs: &MetaSequence,
    map: &SsuTextMap,
    z: &Lcs,
    classification: Classification,
    cfg: &EngineConfig,
) -> Result<QaPair> {
    let ys = build_question_ssus(&pair.md, &pair.mi, xs, z, cfg)?;
    let pieces = resolve_helping_verbs(&ys, xs, map)?;
    let question = realize_question(&pieces);
    let (answer_ssus, answer) = extract_answer(&pair.md, &pair.mi, xs, map)?;
    Ok(QaPair {
        sentence: ts.text.clone(),
        sentence_ref: ts.id(),
        question,
        answer,
        wh: ys.wh().map(|w| w.as_str().to_string()),
        question_ms: ys,
        answer_ssus,
        pair_id: pair.id.clone(),
        classification,
    })
}

/// Runs matching and generation for every clause of `ts` against the
/// store, using the store's configuration.
pub fn generate(ts: &TaggedSentence, store: &Msdip, lexicon: Option<&PhrasalLexicon>) -> Generation {
    let cfg = store.config();
    let mut out = Generation::default();
    let subject = Some(ts.id());
    let segments = match segment_counted(ts) {
        Ok(s) => s,
        Err(e) => {
            out.diagnostics.push(Diagnostic::error(subject, format!("sentence unusable: {e}")));
            return out;
        }
    };
    out.discarded = segments.discarded;
    for s in segments.sentences {
        let frame = s.frame;
        let s = strip_leading_cc(s);
        let (xs, map) = match build_meta_sequence(&s, cfg, lexicon) {
            Ok(v) => v,
            Err(e) => {
                out.diagnostics.push(Diagnostic::error(subject.clone(), format!("clause {frame} rejected: {e}")));
                continue;
            }
        };
        out.clauses += 1;
        let ranked = match rank_candidates(&xs, store) {
            Ok(r) => r,
            Err(e) => {
                out.diagnostics.push(Diagnostic::error(subject.clone(), e.to_string()));
                continue;
            }
        };
        let best = ranked
            .first()
            .filter(|m| m.z_len > 0)
            .cloned()
            .unwrap_or_else(MatchResult::none);
        out.classifications.push(best.classification);
        if best.classification.is_usable() {
            let z = best.lcs();
            for pair in &best.pairs {
                match qap_for_pair(ts, pair, &xs, &map, &z, best.classification, cfg) {
                    Ok(q) => out.qaps.push(q),
                    Err(e) => out.diagnostics.push(Diagnostic::warning(
                        subject.clone(),
                        format!("pair {} suppressed: {e}", pair.id),
                    )),
                }
            }
        }
        if best.classification != Classification::Perfect {
            out.teach_requests.push(TeachRequest {
                id: content_id(&format!("{}#{frame}", ts.text)),
                sentence_ref: ts.id(),
                text: ts.text.clone(),
                meta_sequence: xs.to_string(),
                classification: best.classification,
                near_misses: ranked
                    .iter()
                    .filter(|m| m.z_len > 0)
                    .take(NEAR_MISS_LIMIT)
                    .map(|m| near_miss(m, &xs))
                    .collect(),
                status: TeachStatus::Pending,
                tagged: ts.clone(),
                frame,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::learner::Source;
    use crate::sentence::Token;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    fn decl(s: &str) -> MetaSequence {
        MetaSequence::parse(s, Kind::Declarative, &cfg()).unwrap()
    }

    fn inter(s: &str) -> MetaSequence {
        MetaSequence::parse(s, Kind::Interrogative, &cfg()).unwrap()
    }

    fn entry(index: usize, ssu: &str, text: &str, lemma: Option<&str>) -> MapEntry {
        let ssu: Ssu = ssu.parse().unwrap();
        let pos = ssu.pos().unwrap_or(PosTag::Nn);
        MapEntry {
            raw_pos: ssu.pos(),
            ssu,
            text: text.into(),
            head_lemma: lemma.map(String::from),
            particle: None,
            tokens: vec![Token {
                index,
                text: text.split(' ').next().unwrap().into(),
                lemma: text.to_lowercase(),
                pos,
                ne: None,
            }],
        }
    }

    const JOHN_X: &str = "ARG0/NNP/PER V/VBD/ ARG1/NNP/LOC TMP/NN/";
    const JOHN_Y: &str = "Where V/VBD/ ARG0/NNP/PER V/VB/ TMP/NN/";

    fn mary_map() -> SsuTextMap {
        let mut verb = entry(1, "V/VBD/", "flew to", Some("fly"));
        verb.particle = Some("to".into());
        SsuTextMap {
            entries: vec![
                entry(0, "ARG0/NNP/PER", "Mary", None),
                verb,
                entry(3, "ARG1/NNP/LOC", "London", None),
                entry(4, "TMP/NN/", "last month", None),
            ],
        }
    }

    #[test]
    fn perfect_match_keeps_y() {
        let x = decl(JOHN_X);
        let y = inter(JOHN_Y);
        let z = Lcs { len: 4, a_off: 0, b_off: 0 };
        let ys = build_question_ssus(&x, &y, &x, &z, &cfg()).unwrap();
        assert_eq!(ys, y);
    }

    #[test]
    fn extra_trailing_unit_is_appended() {
        let x = decl(JOHN_X);
        let y = inter(JOHN_Y);
        let xs = decl("ARG0/NNP/PER V/VBD/ ARG1/NNP/LOC TMP/NN/ MNR/RB/");
        let z = Lcs { len: 4, a_off: 0, b_off: 0 };
        let ys = build_question_ssus(&x, &y, &xs, &z, &cfg()).unwrap();
        assert_eq!(ys.to_string(), format!("{JOHN_Y} MNR/RB/"));
    }

    #[test]
    fn case2_order_is_configurable() {
        let x = decl("ARG0/NNP/PER V/VBD/ ARG1/NN/");
        let y = inter("What V/VBD/ ARG0/NNP/PER V/VB/");
        let xs = decl("TMP/NN/ ARG0/NNP/PER V/VBD/ ARG1/NN/ MNR/RB/");
        let z = Lcs { len: 3, a_off: 0, b_off: 1 };
        let ys = build_question_ssus(&x, &y, &xs, &z, &cfg()).unwrap();
        assert_eq!(ys.to_string(), "What V/VBD/ ARG0/NNP/PER V/VB/ MNR/RB/ TMP/NN/");
        let swapped = EngineConfig {
            case2_order: Case2Order::BeforeThenAfter,
            ..cfg()
        };
        let ys = build_question_ssus(&x, &y, &xs, &z, &swapped).unwrap();
        assert_eq!(ys.to_string(), "What V/VBD/ ARG0/NNP/PER V/VB/ TMP/NN/ MNR/RB/");
    }

    #[test]
    fn units_missing_from_input_are_deleted() {
        // Input is a substring of the pattern: TMP in x and y but not xs.
        let x = decl(JOHN_X);
        let y = inter(JOHN_Y);
        let xs = decl("ARG0/NNP/PER V/VBD/ ARG1/NNP/LOC");
        let z = Lcs { len: 3, a_off: 0, b_off: 0 };
        let ys = build_question_ssus(&x, &y, &xs, &z, &cfg()).unwrap();
        assert_eq!(ys.to_string(), "Where V/VBD/ ARG0/NNP/PER V/VB/");
    }

    #[test]
    fn question_without_verb_is_degenerate() {
        let x = decl("ARG0/NNP/PER V/VBD/ V/VBZ/ ARG1/NN/");
        let y = inter("Who V/VBD/ ARG1/NN/");
        let xs = decl("ARG0/NNP/PER V/VBZ/ ARG1/NN/");
        let z = Lcs { len: 2, a_off: 2, b_off: 1 };
        let err = build_question_ssus(&x, &y, &xs, &z, &cfg()).unwrap_err();
        assert!(matches!(err, Error::DegenerateQuestion(_)), "{err}");
    }

    #[test]
    fn resolves_did_and_base_form() {
        let xs = decl(JOHN_X);
        let pieces = resolve_helping_verbs(&inter(JOHN_Y), &xs, &mary_map()).unwrap();
        assert_eq!(pieces, ["Where", "did", "Mary", "fly to", "last month"]);
        assert_eq!(realize_question(&pieces), "Where did Mary fly to last month?");
    }

    #[test]
    fn present_plural_subject_takes_do() {
        let xs = decl("ARG0/NNS/ V/VBP/ ARG1/NN/");
        let map = SsuTextMap {
            entries: vec![
                entry(0, "ARG0/NNS/", "The farmers", None),
                entry(2, "V/VBP/", "grow", Some("grow")),
                entry(3, "ARG1/NN/", "rice", None),
            ],
        };
        let y = inter("What V/VBZ/ ARG0/NN/ V/VB/");
        let pieces = resolve_helping_verbs(&y, &xs, &map).unwrap();
        assert_eq!(pieces, ["What", "do", "the farmers", "grow"]);
        let map_sg = SsuTextMap {
            entries: vec![
                entry(0, "ARG0/NNP/PER", "Tom", None),
                entry(1, "V/VBZ/", "grows", Some("grow")),
                entry(2, "ARG1/NN/", "rice", None),
            ],
        };
        let xs_sg = decl("ARG0/NNP/PER V/VBZ/ ARG1/NN/");
        let y = inter("What V/VBZ/ ARG0/NNP/PER V/VB/");
        let pieces = resolve_helping_verbs(&y, &xs_sg, &map_sg).unwrap();
        assert_eq!(pieces, ["What", "does", "Tom", "grow"]);
    }

    #[test]
    fn copular_pattern_substitutes_directly() {
        let xs = decl("ARG1/NNP/PER V/VBZ/ ARG2/NN/");
        let map = SsuTextMap {
            entries: vec![
                entry(0, "ARG1/NNP/PER", "Marie Curie", None),
                entry(2, "V/VBZ/", "is", Some("be")),
                entry(3, "ARG2/NN/", "a famous scientist", None),
            ],
        };
        let pieces = resolve_helping_verbs(&inter("Who V/VBZ/ ARG2/NN/"), &xs, &map).unwrap();
        assert_eq!(realize_question(&pieces), "Who is a famous scientist?");
    }

    #[test]
    fn unmatched_unit_is_unrealizable() {
        let xs = decl(JOHN_X);
        let err = resolve_helping_verbs(&inter("Where V/VBD/ ARG0/NNP/PER V/VBN/"), &xs, &mary_map()).unwrap_err();
        assert!(matches!(err, Error::Unrealizable(_)));
    }

    #[test]
    fn missing_lemma_is_reported() {
        let xs = decl(JOHN_X);
        let mut map = mary_map();
        map.entries[1].head_lemma = None;
        let err = resolve_helping_verbs(&inter(JOHN_Y), &xs, &map).unwrap_err();
        assert!(matches!(err, Error::MissingLemma(_)));
    }

    #[test]
    fn realization_rules() {
        assert_eq!(realize_question(&["what".to_string()]), "What?");
        assert_eq!(
            realize_question(&["Where".into(), "did".into(), "he".into(), "go to London .".into()]),
            "Where did he go to London?"
        );
        assert_eq!(realize_question(&["Who".into(), "left London.".into()]), "Who left London?");
        assert_eq!(realize_question(&["Who".into(), "lives in the U.S.".into()]), "Who lives in the U.S.?");
    }

    #[test]
    fn answer_is_x_minus_y() {
        let (ssus, text) = extract_answer(&decl(JOHN_X), &inter(JOHN_Y), &decl(JOHN_X), &mary_map()).unwrap();
        assert_eq!(ssus, vec!["ARG1/NNP/LOC".parse::<Ssu>().unwrap()]);
        assert_eq!(text, "London");
    }

    #[test]
    fn empty_answer_set_is_an_error() {
        let x = decl("ARG0/NNP/PER V/VBD/ ARG1/NNP/LOC");
        let y = inter("Where V/VBD/ ARG0/NNP/PER V/VB/ ARG1/NNP/LOC");
        let err = extract_answer(&x, &y, &decl(JOHN_X), &mary_map()).unwrap_err();
        assert!(matches!(err, Error::NoAnswer));
    }

    #[test]
    fn qap_json_line_shape() {
        let q = QaPair {
            sentence: "Mary flew to London last month.".into(),
            sentence_ref: "x".into(),
            question: "Where did Mary fly to last month?".into(),
            answer: "London".into(),
            wh: Some("Where".into()),
            question_ms: inter(JOHN_Y),
            answer_ssus: vec![],
            pair_id: "abc".into(),
            classification: Classification::Perfect,
        };
        assert_eq!(
            q.to_json_line(),
            r#"{"sentence":"Mary flew to London last month.","question":"Where did Mary fly to last month?","answer":"London","wh":"Where","pair_id":"abc","match":"perfect"}"#
        );
        let _ = MdiPair::new(decl(JOHN_X), inter(JOHN_Y), Source::Seed).unwrap();
    }
}
