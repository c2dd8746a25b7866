//! The five pre-tokenization strategies feeding WordPiece.
//!
//! | mode       | unit     | jamo decomposition          |
//! |------------|----------|-----------------------------|
//! | `wp`       | eojeol   | none                        |
//! | `wp-sd`    | eojeol   | every syllable              |
//! | `morwp`    | morpheme | none                        |
//! | `morwp-sd` | morpheme | every syllable              |
//! | `morwp-md` | morpheme | lexical morphemes only      |
//!
//! Morpheme modes use the aligned surface fragment of each morpheme, so the
//! past tense in 갔다 yields the token ᆻ rather than 았.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hangul::decompose_text;
use crate::morph::{AnalyzedSentence, MorphemeType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PipelineMode {
    Wp,
    WpSd,
    MorWp,
    MorWpSd,
    MorWpMd,
}

impl PipelineMode {
    pub const ALL: [PipelineMode; 5] = [
        PipelineMode::Wp,
        PipelineMode::WpSd,
        PipelineMode::MorWp,
        PipelineMode::MorWpSd,
        PipelineMode::MorWpMd,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PipelineMode::Wp => "wp",
            PipelineMode::WpSd => "wp-sd",
            PipelineMode::MorWp => "morwp",
            PipelineMode::MorWpSd => "morwp-sd",
            PipelineMode::MorWpMd => "morwp-md",
        }
    }

    /// Whether the mode consumes analyzed (morpheme-level) input.
    pub fn is_morphemic(self) -> bool {
        matches!(
            self,
            PipelineMode::MorWp | PipelineMode::MorWpSd | PipelineMode::MorWpMd
        )
    }
}

impl fmt::Display for PipelineMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PipelineMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PipelineMode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::InvalidMode(s.to_owned()))
    }
}

/// A pre-tokenization unit handed to WordPiece.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreToken {
    pub text: String,
    /// Piece of a larger unit; WordPiece then prefixes its first subword
    /// with `##` as well.
    pub continuation: bool,
}

impl PreToken {
    pub fn new(text: impl Into<String>) -> Self {
        PreToken {
            text: text.into(),
            continuation: false,
        }
    }
}

/// Input to [`pretokenize`]: raw text for eojeol modes, an analysis for
/// morpheme modes.
#[derive(Debug, Clone, Copy)]
pub enum SentenceRef<'a> {
    Raw(&'a str),
    Analyzed(&'a AnalyzedSentence),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sentence {
    Raw(String),
    Analyzed(AnalyzedSentence),
}

impl Sentence {
    pub fn as_ref(&self) -> SentenceRef<'_> {
        match self {
            Sentence::Raw(s) => SentenceRef::Raw(s),
            Sentence::Analyzed(a) => SentenceRef::Analyzed(a),
        }
    }
}

pub fn pretokenize(sentence: SentenceRef<'_>, mode: PipelineMode) -> Result<Vec<PreToken>> {
    let tokens = match (mode, sentence) {
        (PipelineMode::Wp, SentenceRef::Raw(text)) => {
            text.split_whitespace().map(PreToken::new).collect()
        }
        (PipelineMode::WpSd, SentenceRef::Raw(text)) => text
            .split_whitespace()
            .map(|e| PreToken::new(decompose_text(e)))
            .collect(),
        (PipelineMode::MorWp, SentenceRef::Analyzed(a)) => morpheme_tokens(a, |_| false),
        (PipelineMode::MorWpSd, SentenceRef::Analyzed(a)) => morpheme_tokens(a, |_| true),
        (PipelineMode::MorWpMd, SentenceRef::Analyzed(a)) => {
            morpheme_tokens(a, |t| t == MorphemeType::Lexical)
        }
        (mode, _) => {
            return Err(Error::ModeInputMismatch {
                mode: mode.as_str(),
                expected: if mode.is_morphemic() {
                    "analyzed"
                } else {
                    "raw text"
                },
            })
        }
    };
    Ok(tokens)
}

fn morpheme_tokens(sentence: &AnalyzedSentence, decompose: impl Fn(MorphemeType) -> bool) -> Vec<PreToken> {
    sentence
        .morphemes()
        .map(|m| {
            if decompose(m.mtype) {
                PreToken::new(decompose_text(&m.surface))
            } else {
                PreToken::new(m.surface.clone())
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_names_round_trip() {
        for mode in PipelineMode::ALL {
            assert_eq!(mode.as_str().parse::<PipelineMode>().unwrap(), mode);
        }
        assert!(matches!(
            "bpe".parse::<PipelineMode>(),
            Err(Error::InvalidMode(_))
        ));
    }

    #[test]
    fn wp_splits_on_whitespace() {
        let toks = pretokenize(SentenceRef::Raw("abc  def\t"), PipelineMode::Wp).unwrap();
        assert_eq!(toks, [PreToken::new("abc"), PreToken::new("def")]);
        let toks = pretokenize(SentenceRef::Raw("먹었을걸."), PipelineMode::Wp).unwrap();
        assert_eq!(toks, [PreToken::new("먹었을걸.")]);
    }

    #[test]
    fn input_kind_must_match_mode() {
        let analyzed = AnalyzedSentence::default();
        for mode in [PipelineMode::MorWp, PipelineMode::MorWpSd, PipelineMode::MorWpMd] {
            let err = pretokenize(SentenceRef::Raw("나는"), mode).unwrap_err();
            assert_eq!(err.class(), "ModeInputMismatch");
        }
        for mode in [PipelineMode::Wp, PipelineMode::WpSd] {
            let err = pretokenize(SentenceRef::Analyzed(&analyzed), mode).unwrap_err();
            assert_eq!(err.class(), "ModeInputMismatch");
        }
    }
}
