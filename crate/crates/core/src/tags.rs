//! Closed tagsets for the three SSU dimensions: semantic role, part of
//! speech and named entity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

macro_rules! tagset {
    ($(#[$meta:meta])* $name:ident, $kind:literal { $($variant:ident => $text:literal),* $(,)? }) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant),*
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),*
                }
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self, Error> {
                match s {
                    $($text => Ok($name::$variant),)*
                    _ => Err(Error::TagParse { kind: $kind, label: s.to_string() }),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.serialize_str(self.as_str())
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let s = String::deserialize(deserializer)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

tagset! {
    /// PropBank semantic role. Modifier roles are stored without the
    /// `ARGM-` prefix.
    SrTag, "SR" {
        Arg0 => "ARG0",
        Arg1 => "ARG1",
        Arg2 => "ARG2",
        Arg3 => "ARG3",
        Arg4 => "ARG4",
        Arg5 => "ARG5",
        V => "V",
        Loc => "LOC",
        Ext => "EXT",
        Dis => "DIS",
        Adv => "ADV",
        Neg => "NEG",
        Mod => "MOD",
        Cau => "CAU",
        Tmp => "TMP",
        Prp => "PRP",
        Mnr => "MNR",
        Gol => "GOL",
        Dir => "DIR",
    }
}

impl SrTag {
    /// True for the numbered arguments ARG0..ARG5.
    pub fn is_numbered_arg(self) -> bool {
        matches!(
            self,
            SrTag::Arg0 | SrTag::Arg1 | SrTag::Arg2 | SrTag::Arg3 | SrTag::Arg4 | SrTag::Arg5
        )
    }
}

tagset! {
    /// Penn Treebank part-of-speech tag.
    PosTag, "POS" {
        Cc => "CC",
        Cd => "CD",
        Dt => "DT",
        Ex => "EX",
        Fw => "FW",
        In => "IN",
        Jj => "JJ",
        Jjr => "JJR",
        Jjs => "JJS",
        Ls => "LS",
        Md => "MD",
        Nn => "NN",
        Nns => "NNS",
        Nnp => "NNP",
        Nnps => "NNPS",
        Pdt => "PDT",
        Pos => "POS",
        Prp => "PRP",
        PrpS => "PRP$",
        Rb => "RB",
        Rbr => "RBR",
        Rbs => "RBS",
        Rp => "RP",
        Sym => "SYM",
        To => "TO",
        Uh => "UH",
        Vb => "VB",
        Vbd => "VBD",
        Vbg => "VBG",
        Vbn => "VBN",
        Vbp => "VBP",
        Vbz => "VBZ",
        Wdt => "WDT",
        Wp => "WP",
        WpS => "WP$",
        Wrb => "WRB",
        Period => ".",
        Comma => ",",
        Colon => ":",
        OpenQuote => "``",
        CloseQuote => "''",
        LeftParen => "-LRB-",
        RightParen => "-RRB-",
        Hash => "#",
        Dollar => "$",
    }
}

impl PosTag {
    pub fn is_noun(self) -> bool {
        matches!(self, PosTag::Nn | PosTag::Nns | PosTag::Nnp | PosTag::Nnps)
    }

    pub fn is_verb(self) -> bool {
        matches!(
            self,
            PosTag::Vb | PosTag::Vbd | PosTag::Vbg | PosTag::Vbn | PosTag::Vbp | PosTag::Vbz
        )
    }

    /// Prepositions and adverbs, the parts of a phrasal verb.
    pub fn is_particle(self) -> bool {
        matches!(self, PosTag::In | PosTag::Rb | PosTag::Rbr | PosTag::Rbs)
    }

    pub fn is_wh(self) -> bool {
        matches!(self, PosTag::Wp | PosTag::WpS | PosTag::Wrb | PosTag::Wdt)
    }

    pub fn is_punctuation(self) -> bool {
        matches!(
            self,
            PosTag::Period
                | PosTag::Comma
                | PosTag::Colon
                | PosTag::OpenQuote
                | PosTag::CloseQuote
                | PosTag::LeftParen
                | PosTag::RightParen
        )
    }

    pub fn equiv_class(self) -> EquivClass {
        pos_equiv_class(self)
    }
}

tagset! {
    /// Named-entity label: persons, organizations, locations, and the
    /// numeric expressions (date, time, money, percent, plain numbers).
    NeTag, "NE" {
        Per => "PER",
        Org => "ORG",
        Loc => "LOC",
        Misc => "MISC",
        Date => "DATE",
        Time => "TIME",
        Money => "MONEY",
        Percent => "PERCENT",
        Num => "NUM",
    }
}

/// POS equivalence class used during matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquivClass {
    /// NN, NNS, NNP, NNPS.
    Noun,
    /// VBP, VBZ.
    Pres3,
    Single(PosTag),
}

impl EquivClass {
    /// The tag written in place of the POS in normalized encodings.
    pub fn representative(self) -> PosTag {
        match self {
            EquivClass::Noun => PosTag::Nn,
            EquivClass::Pres3 => PosTag::Vbz,
            EquivClass::Single(tag) => tag,
        }
    }
}

pub fn pos_equiv_class(pos: PosTag) -> EquivClass {
    match pos {
        PosTag::Nn | PosTag::Nns | PosTag::Nnp | PosTag::Nnps => EquivClass::Noun,
        PosTag::Vbp | PosTag::Vbz => EquivClass::Pres3,
        other => EquivClass::Single(other),
    }
}

/// Normalizes a raw SRL label: strips `B-`/`I-` chunk prefixes and the
/// `ARGM-` modifier prefix, then parses against the closed role set.
pub fn normalize_sr_label(raw: &str) -> Result<SrTag, Error> {
    let trimmed = raw.trim();
    let label = trimmed
        .strip_prefix("B-")
        .or_else(|| trimmed.strip_prefix("I-"))
        .unwrap_or(trimmed);
    let label = label.strip_prefix("ARGM-").unwrap_or(label);
    let upper = label.to_ascii_uppercase();
    let upper = upper.strip_prefix("ARGM-").unwrap_or(&upper);
    upper.parse().map_err(|_| Error::TagParse {
        kind: "SR",
        label: raw.to_string(),
    })
}
