//! Meta-sequence matching: role detection, LCS search against every
//! stored declarative pattern, and match classification.

pub mod suffix_tree;

use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use suffix_tree::{longest_common_substring, Lcs, SuffixTree};

use crate::error::Result;
use crate::learner::{MdiPair, Msdip};
use crate::ssu::{MetaSequence, Ssu, SymbolTable};
use crate::tags::SrTag;

/// Positions of the subject, predicate and object units.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Roles {
    pub subject: Option<usize>,
    pub predicate: Option<usize>,
    pub object: Option<usize>,
}

impl Roles {
    pub fn is_complete(&self) -> bool {
        self.subject.is_some() && self.predicate.is_some() && self.object.is_some()
    }
}

/// Predicate: first V. Subject: first ARG0, else the first numbered
/// argument before the predicate. Object: first numbered argument after
/// the predicate other than the subject.
pub fn roles_of(srs: &[Option<SrTag>]) -> Roles {
    let predicate = srs.iter().position(|s| *s == Some(SrTag::V));
    let is_arg = |s: &Option<SrTag>| s.is_some_and(SrTag::is_numbered_arg);
    let subject = srs
        .iter()
        .position(|s| *s == Some(SrTag::Arg0))
        .or_else(|| {
            let limit = predicate.unwrap_or(srs.len());
            srs[..limit].iter().position(is_arg)
        });
    let object = predicate.and_then(|p| {
        srs.iter()
            .enumerate()
            .skip(p + 1)
            .find(|(i, s)| is_arg(s) && Some(*i) != subject)
            .map(|(i, _)| i)
    });
    Roles {
        subject,
        predicate,
        object,
    }
}

pub fn grammatical_roles(ms: &MetaSequence) -> Roles {
    let srs: Vec<_> = ms.ssus().iter().map(Ssu::sr).collect();
    roles_of(&srs)
}

/// LCS of two meta sequences encoded against one shared table.
pub fn lcs(a: &MetaSequence, b: &MetaSequence, table: &mut SymbolTable) -> Result<Lcs> {
    let ea = table.encode(a)?;
    let eb = table.encode(b)?;
    Ok(longest_common_substring(&ea, &eb))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Perfect,
    Successful,
    Unsuccessful,
    None,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Perfect => "perfect",
            Classification::Successful => "successful",
            Classification::Unsuccessful => "unsuccessful",
            Classification::None => "none",
        }
    }

    /// Perfect or successful: questions can be generated.
    pub fn is_usable(self) -> bool {
        matches!(self, Classification::Perfect | Classification::Successful)
    }

    fn rank(self) -> u8 {
        match self {
            Classification::Perfect | Classification::Successful => 0,
            Classification::Unsuccessful => 1,
            Classification::None => 2,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `z` is `Lcs` with `a` = stored pattern `x` and `b` = input `xs`.
pub fn classify(z: &Lcs, x: &MetaSequence, xs: &MetaSequence) -> Classification {
    if z.len == 0 {
        return Classification::None;
    }
    if z.len == x.len() && z.len == xs.len() {
        return Classification::Perfect;
    }
    let span = z.b_off..z.b_off + z.len;
    let roles = grammatical_roles(xs);
    let covered = [roles.subject, roles.predicate, roles.object]
        .iter()
        .all(|r| r.is_some_and(|p| span.contains(&p)));
    if covered {
        Classification::Successful
    } else {
        Classification::Unsuccessful
    }
}

/// Input roles that fall outside the matched span.
pub fn missing_roles(z: &Lcs, xs: &MetaSequence) -> Vec<&'static str> {
    let span = z.b_off..z.b_off + z.len;
    let roles = grammatical_roles(xs);
    [
        ("subject", roles.subject),
        ("predicate", roles.predicate),
        ("object", roles.object),
    ]
    .into_iter()
    .filter(|(_, r)| !r.is_some_and(|p| span.contains(&p)))
    .map(|(name, _)| name)
    .collect()
}

/// Outcome of matching an input against one stored pattern.
#[derive(Clone, Debug)]
pub struct MatchResult<'s> {
    /// The matched pattern, absent for `Classification::None`.
    pub md: Option<&'s MetaSequence>,
    /// Every stored pair sharing the matched pattern, in insertion order.
    pub pairs: Vec<&'s MdiPair>,
    pub z_len: usize,
    pub x_off: usize,
    pub xs_off: usize,
    pub classification: Classification,
}

impl<'s> MatchResult<'s> {
    pub fn none() -> Self {
        MatchResult {
            md: None,
            pairs: Vec::new(),
            z_len: 0,
            x_off: 0,
            xs_off: 0,
            classification: Classification::None,
        }
    }

    pub fn lcs(&self) -> Lcs {
        Lcs {
            len: self.z_len,
            a_off: self.x_off,
            b_off: self.xs_off,
        }
    }
}

/// All distinct stored patterns ranked against `xs`: longest Z first,
/// then usable matches, then shorter patterns, then the smaller
/// normalized encoding.
pub fn rank_candidates<'s>(xs: &MetaSequence, store: &'s Msdip) -> Result<Vec<MatchResult<'s>>> {
    let mut table = SymbolTable::new(store.config().max_len.max(xs.len()));
    let input = table.encode(xs)?;
    let mut ranked = Vec::new();
    for group in store.md_groups() {
        let md = group.md;
        let pattern = table.encode(md)?;
        let z = longest_common_substring(&pattern, &input);
        let classification = classify(&z, md, xs);
        let (md_ref, pairs) = if z.len == 0 {
            (None, Vec::new())
        } else {
            (Some(md), group.pairs)
        };
        ranked.push((
            (Reverse(z.len), classification.rank(), md.len(), group.key),
            MatchResult {
                md: md_ref,
                pairs,
                z_len: z.len,
                x_off: z.a_off,
                xs_off: z.b_off,
                classification,
            },
        ));
    }
    ranked.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(ranked.into_iter().map(|(_, m)| m).collect())
}

/// The pattern in `store` with the longest common substring with `xs`.
pub fn best_match<'s>(xs: &MetaSequence, store: &'s Msdip) -> Result<MatchResult<'s>> {
    Ok(rank_candidates(xs, store)?
        .into_iter()
        .next()
        .filter(|m| m.z_len > 0)
        .unwrap_or_else(MatchResult::none))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::EngineConfig;
    use crate::learner::{MdiPair, Source};
    use crate::ssu::Kind;

    fn decl(s: &str) -> MetaSequence {
        MetaSequence::parse(s, Kind::Declarative, &EngineConfig::default()).unwrap()
    }

    fn inter(s: &str) -> MetaSequence {
        MetaSequence::parse(s, Kind::Interrogative, &EngineConfig::default()).unwrap()
    }

    const JOHN_X: &str = "ARG0/NNP/PER V/VBD/ ARG1/NNP/LOC TMP/NN/";
    const JOHN_Y: &str = "Where V/VBD/ ARG0/NNP/PER V/VB/ TMP/NN/";

    #[test]
    fn roles_for_worked_patterns() {
        let r = grammatical_roles(&decl(JOHN_X));
        assert_eq!((r.subject, r.predicate, r.object), (Some(0), Some(1), Some(2)));
        let r = grammatical_roles(&decl("ARG1/NNP/PER V/VBZ/ ARG2/NNP/LOC"));
        assert_eq!((r.subject, r.predicate, r.object), (Some(0), Some(1), Some(2)));
        let r = roles_of(&[Some(SrTag::Arg1), Some(SrTag::Tmp)]);
        assert_eq!(r.predicate, None);
        assert_eq!(r.object, None);
        assert_eq!(r.subject, Some(0));
    }

    #[test]
    fn classification_cases() {
        let x = decl(JOHN_X);
        let mut table = SymbolTable::new(64);
        let z = lcs(&x, &x, &mut table).unwrap();
        assert_eq!(classify(&z, &x, &x), Classification::Perfect);

        let xs = decl("ARG0/NNP/PER V/VBD/ ARG1/NNP/LOC TMP/NN/ MNR/RB/");
        let z = lcs(&x, &xs, &mut table).unwrap();
        assert_eq!(z.len, 4);
        assert_eq!(classify(&z, &x, &xs), Classification::Successful);

        let xs = decl("ARG0/NNP/PER V/VBD/ ARG1/NN/ TMP/NN/");
        let z = lcs(&x, &xs, &mut table).unwrap();
        assert_eq!(z.len, 2);
        assert_eq!(classify(&z, &x, &xs), Classification::Unsuccessful);
        assert_eq!(missing_roles(&z, &xs), ["object"]);

        assert_eq!(classify(&Lcs::default(), &x, &xs), Classification::None);
    }

    fn store(pairs: &[(&str, &str)]) -> Msdip {
        let mut s = Msdip::new(EngineConfig::default());
        for (x, y) in pairs {
            s.insert(MdiPair::new(decl(x), inter(y), Source::Seed).unwrap()).unwrap();
        }
        s
    }

    #[test]
    fn best_match_finds_perfect_pattern() {
        let s = store(&[(JOHN_X, JOHN_Y), ("ARG1/NNP/PER V/VBZ/ ARG2/NN/", "Who V/VBZ/ ARG2/NN/")]);
        let m = best_match(&decl(JOHN_X), &s).unwrap();
        assert_eq!(m.classification, Classification::Perfect);
        assert_eq!(m.z_len, 4);
        assert_eq!(m.pairs.len(), 1);
        assert_eq!(m.md.unwrap().to_string(), JOHN_X);
    }

    #[test]
    fn empty_store_gives_none() {
        let s = Msdip::new(EngineConfig::default());
        let m = best_match(&decl(JOHN_X), &s).unwrap();
        assert_eq!(m.classification, Classification::None);
        assert!(m.md.is_none());
    }

    #[test]
    fn tie_prefers_successful_then_shorter() {
        // Both patterns share a 2-unit run with the input; only the first
        // covers subject+predicate+object of the 3-unit input.
        let input = decl("ARG0/NNP/PER V/VBZ/ ARG1/NN/ TMP/NN/");
        let s = store(&[
            ("V/VBZ/ ARG1/NN/ TMP/NN/ ARG2/NN/", "What V/VBZ/ ARG1/NN/"),
            ("ARG0/NNP/PER V/VBZ/ LOC/NN/", "Who V/VBZ/ LOC/NN/"),
        ]);
        let ranked = rank_candidates(&input, &s).unwrap();
        assert_eq!(ranked[0].z_len, 3);
        let s = store(&[
            ("ARG2/NN/ V/VBZ/ ARG1/NN/ MNR/RB/", "How V/VBZ/ ARG1/NN/"),
            ("ARG0/NNP/PER V/VBZ/ ARG2/NN/", "Who V/VBZ/ ARG2/NN/"),
        ]);
        let input = decl("ARG0/NNP/PER V/VBZ/ ARG1/NN/");
        let ranked = rank_candidates(&input, &s).unwrap();
        // z_len 2 for both: (V ARG1) misses the subject, (ARG0 V) misses the object.
        assert_eq!(ranked[0].z_len, 2);
        assert_eq!(ranked[1].z_len, 2);
        assert_eq!(ranked[0].classification, Classification::Unsuccessful);
        // Equal class: the shorter pattern wins.
        assert_eq!(ranked[0].md.unwrap().len(), 3);

        let s = store(&[
            ("ARG2/NN/ V/VBZ/ ARG1/NN/ MNR/RB/", "How V/VBZ/ ARG1/NN/"),
            ("ARG0/NNP/PER V/VBZ/ ARG1/NN/ LOC/NN/ EXT/NN/", "Who V/VBZ/ ARG1/NN/"),
        ]);
        let input = decl("ARG0/NNP/PER V/VBZ/ ARG1/NN/ MNR/RB/");
        let ranked = rank_candidates(&input, &s).unwrap();
        assert_eq!(ranked[0].z_len, 3);
        assert_eq!(ranked[0].classification, Classification::Successful);
        assert_eq!(ranked[1].z_len, 3);
        assert_eq!(ranked[1].classification, Classification::Unsuccessful);
    }

    #[test]
    fn ranking_is_deterministic() {
        let s = store(&[(JOHN_X, JOHN_Y), ("ARG0/NNP/PER V/VBD/ ARG1/NN/", "What V/VBD/ ARG0/NNP/PER V/VB/")]);
        let input = decl("ARG0/NNP/PER V/VBD/ ARG1/NN/ TMP/NN/");
        let a: Vec<_> = rank_candidates(&input, &s).unwrap().iter().map(|m| (m.z_len, m.x_off, m.xs_off, m.classification)).collect();
        let b: Vec<_> = rank_candidates(&input, &s).unwrap().iter().map(|m| (m.z_len, m.x_off, m.xs_off, m.classification)).collect();
        assert_eq!(a, b);
    }
}
