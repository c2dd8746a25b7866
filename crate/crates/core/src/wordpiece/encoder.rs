use std::fmt;

use crate::error::{Error, Result};
use crate::hangul::compose_text;
use crate::pipeline::{PipelineMode, PreToken};

use super::vocab::{Vocabulary, CONTINUATION_PREFIX, UNK};

/// Pre-tokens longer than this many chars are encoded as a single [UNK].
pub const DEFAULT_MAX_INPUT_CHARS: usize = 100;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TokenSequence {
    pub tokens: Vec<String>,
}

impl TokenSequence {
    pub fn new(tokens: Vec<String>) -> Self {
        TokenSequence { tokens }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(String::as_str)
    }

    pub fn ids(&self, vocab: &Vocabulary) -> Vec<u32> {
        self.iter()
            .map(|t| vocab.id(t).unwrap_or(vocab.unk_id()))
            .collect()
    }
}

impl fmt::Display for TokenSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tokens.join(" "))
    }
}

impl<S: Into<String>> FromIterator<S> for TokenSequence {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        TokenSequence::new(iter.into_iter().map(Into::into).collect())
    }
}

pub fn encode(pretokens: &[PreToken], vocab: &Vocabulary) -> TokenSequence {
    encode_with_limit(pretokens, vocab, DEFAULT_MAX_INPUT_CHARS)
}

pub fn encode_with_limit(pretokens: &[PreToken], vocab: &Vocabulary, max_chars: usize) -> TokenSequence {
    let mut tokens = Vec::with_capacity(pretokens.len());
    for pt in pretokens {
        encode_one(pt, vocab, max_chars, &mut tokens);
    }
    TokenSequence { tokens }
}

fn encode_one(pt: &PreToken, vocab: &Vocabulary, max_chars: usize, out: &mut Vec<String>) {
    let chars: Vec<char> = pt.text.chars().collect();
    if chars.is_empty() {
        return;
    }
    if chars.len() > max_chars {
        out.push(UNK.to_owned());
        return;
    }
    let longest = vocab.longest_entry_chars();
    let start_len = out.len();
    let mut candidate = String::new();
    let mut pos = 0;
    while pos < chars.len() {
        let prefixed = pos > 0 || pt.continuation;
        let mut found = None;
        for end in (pos + 1..=chars.len().min(pos + longest)).rev() {
            candidate.clear();
            if prefixed {
                candidate.push_str(CONTINUATION_PREFIX);
            }
            candidate.extend(&chars[pos..end]);
            if vocab.contains(&candidate) {
                found = Some(end);
                break;
            }
        }
        match found {
            Some(end) => {
                out.push(candidate.clone());
                pos = end;
            }
            None => {
                out.truncate(start_len);
                out.push(UNK.to_owned());
                return;
            }
        }
    }
}

/// Rebuilds text from a token sequence.
///
/// Pieces are glued onto the previous unit when they carry `##`, units are
/// joined with single spaces. Decomposing modes recompose jamo runs into
/// syllables. Morpheme modes cannot recover the original spacing, so their
/// output has one morpheme per space-separated unit.
pub fn decode<S: AsRef<str>>(tokens: &[S], mode: PipelineMode) -> Result<String> {
    let mut units: Vec<String> = Vec::new();
    for tok in tokens {
        let tok = tok.as_ref();
        match tok.strip_prefix(CONTINUATION_PREFIX) {
            Some(piece) if !piece.is_empty() => match units.last_mut() {
                Some(last) => last.push_str(piece),
                None => {
                    return Err(Error::DanglingContinuation {
                        token: tok.to_owned(),
                    })
                }
            },
            _ => units.push(tok.to_owned()),
        }
    }
    let composes = matches!(
        mode,
        PipelineMode::WpSd | PipelineMode::MorWpSd | PipelineMode::MorWpMd
    );
    if composes {
        for unit in &mut units {
            *unit = compose_text(unit);
        }
    }
    Ok(units.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vocab(entries: &[&str]) -> Vocabulary {
        let mut v = Vocabulary::with_specials();
        for e in entries {
            v.push(*e);
        }
        v
    }

    fn enc(words: &[&str], v: &Vocabulary) -> Vec<String> {
        let pts: Vec<_> = words.iter().map(|w| PreToken::new(*w)).collect();
        encode(&pts, v).tokens
    }

    #[test]
    fn longest_match() {
        let v = vocab(&["나라", "나", "##라"]);
        assert_eq!(enc(&["나라"], &v), ["나라"]);
        assert_eq!(enc(&["나라라"], &v), ["나라", "##라"]);
    }

    #[test]
    fn whole_unit_unk() {
        let v = vocab(&["나", "##라"]);
        assert_eq!(enc(&["나X", "나라"], &v), ["[UNK]", "나", "##라"]);
    }

    #[test]
    fn eojeol_suffix_piece() {
        let v = vocab(&["사람", "##들에게", "##들"]);
        assert_eq!(enc(&["사람들에게"], &v), ["사람", "##들에게"]);
    }

    #[test]
    fn overlong_pretoken() {
        let v = vocab(&["a", "##a"]);
        let long = "a".repeat(101);
        assert_eq!(enc(&[&long], &v), ["[UNK]"]);
        assert_eq!(enc(&[&long[..100]], &v).len(), 100);
    }

    #[test]
    fn continuation_pretoken() {
        let v = vocab(&["ab", "##ab"]);
        let pt = PreToken {
            text: "ab".into(),
            continuation: true,
        };
        assert_eq!(encode(&[pt], &v).tokens, ["##ab"]);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&["나라"], PipelineMode::Wp).unwrap(), "나라");
        assert_eq!(
            decode(&["나", "##라", "집"], PipelineMode::Wp).unwrap(),
            "나라 집"
        );
        assert_eq!(
            decode(&["\u{1102}\u{1161}", "##\u{1105}\u{1161}"], PipelineMode::WpSd).unwrap(),
            "나라"
        );
        assert!(matches!(
            decode(&["##라"], PipelineMode::Wp),
            Err(Error::DanglingContinuation { .. })
        ));
    }

    #[test]
    fn decode_keeps_unk() {
        assert_eq!(
            decode(&["나", "[UNK]", "##라"], PipelineMode::Wp).unwrap(),
            "나 [UNK]라"
        );
    }
}
