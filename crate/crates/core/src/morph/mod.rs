//! Morphological analyses: POS classification, surface alignment and the
//! analyzer-output reader.
//!
//! The toolkit does not analyze raw text itself (apart from the small
//! [`DemoAnalyzer`]); it consumes analyzer output and attaches to every
//! morpheme the piece of the eojeol surface that realizes it.

mod align;
mod demo;
mod tagged;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub use align::{align_fragments, align_surface};
pub use demo::DemoAnalyzer;
pub use tagged::{parse_tagged_corpus, parse_tagged_str, write_tagged, TaggedReader};

/// Line marking an eojeol boundary inside a sentence block.
pub const EOJEOL_SEPARATOR: &str = "<SP>";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosTag(String);

impl PosTag {
    pub fn new(tag: impl Into<String>) -> Self {
        PosTag(tag.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MorphemeType {
    Lexical,
    Grammatical,
}

impl MorphemeType {
    pub fn as_str(self) -> &'static str {
        match self {
            MorphemeType::Lexical => "lexical",
            MorphemeType::Grammatical => "grammatical",
        }
    }
}

const LEXICAL_TAGS: &[&str] = &[
    // nouns, pronouns, numerals, analyzer guesses
    "NNG", "NNP", "NNB", "NNBC", "NR", "NP", "NF", "NV", "NA",
    // predicates and modifiers
    "VV", "VA", "VX", "MM", "MAG", "MAJ", "IC", "XR",
    // foreign words, hanja, numbers
    "SL", "SH", "SN",
    // punctuation and symbols
    "SF", "SE", "SS", "SSO", "SSC", "SP", "SC", "SO", "SW", "SY",
];

const GRAMMATICAL_TAGS: &[&str] = &[
    "JKS", "JKC", "JKG", "JKO", "JKB", "JKV", "JKQ", "JX", "JC",
    "EP", "EF", "EC", "ETN", "ETM",
    "VCP", "VCN",
    "XPN", "XSN", "XSV", "XSA",
];

/// Closed POS tagset with the lexical/grammatical split for each tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable {
    classes: BTreeMap<String, MorphemeType>,
}

impl Default for ClassTable {
    /// Sejong / mecab-ko-dic tagset. Particles, endings, the copula and
    /// derivational affixes are grammatical; everything else is lexical.
    fn default() -> Self {
        let mut classes = BTreeMap::new();
        for tag in LEXICAL_TAGS {
            classes.insert((*tag).to_owned(), MorphemeType::Lexical);
        }
        for tag in GRAMMATICAL_TAGS {
            classes.insert((*tag).to_owned(), MorphemeType::Grammatical);
        }
        ClassTable { classes }
    }
}

impl ClassTable {
    pub fn empty() -> Self {
        ClassTable {
            classes: BTreeMap::new(),
        }
    }

    /// Parses `TAG=lexical|grammatical` lines (blank lines and `#`
    /// comments allowed) into a standalone table.
    pub fn from_config(text: &str) -> Result<Self> {
        let mut table = ClassTable::empty();
        table.apply_config(text)?;
        Ok(table)
    }

    /// Default table with the entries of `text` added or overriding.
    pub fn with_overrides(text: &str) -> Result<Self> {
        let mut table = ClassTable::default();
        table.apply_config(text)?;
        Ok(table)
    }

    fn apply_config(&mut self, text: &str) -> Result<()> {
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |reason: &str| Error::MalformedLine {
                line: idx + 1,
                reason: reason.to_owned(),
            };
            let (tag, class) = line
                .split_once('=')
                .ok_or_else(|| malformed("expected TAG=lexical|grammatical"))?;
            let tag = tag.trim();
            if tag.is_empty() {
                return Err(malformed("empty tag"));
            }
            let class = match class.trim().to_ascii_lowercase().as_str() {
                "lexical" => MorphemeType::Lexical,
                "grammatical" => MorphemeType::Grammatical,
                other => return Err(malformed(&format!("unknown class `{other}`"))),
            };
            self.classes.insert(tag.to_owned(), class);
        }
        Ok(())
    }

    pub fn insert(&mut self, tag: &str, class: MorphemeType) {
        self.classes.insert(tag.to_owned(), class);
    }

    pub fn contains(&self, tag: &str) -> bool {
        self.classes.contains_key(tag)
    }

    pub fn classify(&self, tag: &PosTag) -> Result<MorphemeType> {
        self.classes
            .get(tag.as_str())
            .copied()
            .ok_or_else(|| Error::UnknownTag {
                tag: tag.0.clone(),
                line: None,
            })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, MorphemeType)> {
        self.classes.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn to_config(&self) -> String {
        self.iter()
            .map(|(tag, class)| format!("{tag}={}\n", class.as_str()))
            .collect()
    }
}

pub fn classify_pos(tag: &PosTag, table: &ClassTable) -> Result<MorphemeType> {
    table.classify(tag)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morpheme {
    /// Dictionary form, e.g. 았.
    pub canonical: String,
    /// The part of the eojeol that realizes this morpheme, e.g. ᆻ.
    pub surface: String,
    pub pos: PosTag,
    pub mtype: MorphemeType,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyzedEojeol {
    pub surface: String,
    pub morphemes: Vec<Morpheme>,
    /// Set when the canonical forms could not be mapped onto the surface;
    /// morpheme surfaces then hold the canonical forms.
    pub alignment_failed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnalyzedSentence {
    pub eojeols: Vec<AnalyzedEojeol>,
}

impl AnalyzedSentence {
    pub fn new(eojeols: Vec<AnalyzedEojeol>) -> Self {
        AnalyzedSentence { eojeols }
    }

    /// Eojeol surfaces joined by single spaces.
    pub fn text(&self) -> String {
        self.eojeols
            .iter()
            .map(|e| e.surface.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn morphemes(&self) -> impl Iterator<Item = &Morpheme> {
        self.eojeols.iter().flat_map(|e| e.morphemes.iter())
    }
}
