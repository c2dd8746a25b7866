//! A tiny longest-match dictionary analyzer for demos and tests.
//!
//! It is not a morphological analyzer in any real sense: each eojeol is
//! segmented greedily against a fixed surface dictionary, and characters no
//! entry covers become single-character guesses (unknown Hangul is tagged
//! NNG, ASCII letters SL, digits SN, sentence punctuation SF and anything
//! else SY).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hangul::{classify_char, CharClass};

use super::{align_surface, AnalyzedSentence, ClassTable, PosTag};

const BUILTIN_DICTIONARY: &str = include_str!("../../data/demo_dict.tsv");

#[derive(Debug, Clone)]
pub struct DemoAnalyzer {
    entries: HashMap<String, Vec<(String, PosTag)>>,
    longest: usize,
    table: ClassTable,
}

impl DemoAnalyzer {
    pub fn builtin(table: ClassTable) -> Result<Self> {
        Self::from_dictionary(BUILTIN_DICTIONARY, table)
    }

    /// Dictionary lines are `surface<TAB>form/TAG+form/TAG...`.
    pub fn from_dictionary(text: &str, table: ClassTable) -> Result<Self> {
        let mut entries = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |reason: &str| Error::MalformedLine {
                line: idx + 1,
                reason: reason.to_owned(),
            };
            let (surface, analysis) = line
                .split_once('\t')
                .ok_or_else(|| malformed("missing TAB between surface and analysis"))?;
            let mut morphemes = Vec::new();
            for piece in analysis.split('+') {
                let (form, tag) = piece
                    .rsplit_once('/')
                    .filter(|(f, t)| !f.is_empty() && !t.is_empty())
                    .ok_or_else(|| malformed("expected form/TAG"))?;
                if !table.contains(tag) {
                    return Err(Error::UnknownTag {
                        tag: tag.to_owned(),
                        line: Some(idx + 1),
                    });
                }
                morphemes.push((form.to_owned(), PosTag::new(tag)));
            }
            entries.insert(surface.to_owned(), morphemes);
        }
        let longest = entries.keys().map(|k| k.chars().count()).max().unwrap_or(0);
        Ok(DemoAnalyzer {
            entries,
            longest,
            table,
        })
    }

    pub fn table(&self) -> &ClassTable {
        &self.table
    }

    pub fn analyze(&self, sentence: &str) -> Result<AnalyzedSentence> {
        let eojeols = sentence
            .split_whitespace()
            .map(|eojeol| {
                let morphemes = self.segment(eojeol)?;
                align_surface(eojeol, morphemes, &self.table)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AnalyzedSentence::new(eojeols))
    }

    fn segment(&self, eojeol: &str) -> Result<Vec<(String, PosTag)>> {
        let chars: Vec<char> = eojeol.chars().collect();
        let mut out: Vec<(String, PosTag)> = Vec::new();
        let mut guessed_last = false;
        let mut i = 0;
        while i < chars.len() {
            let max = self.longest.min(chars.len() - i);
            let hit = (1..=max).rev().find_map(|len| {
                let key: String = chars[i..i + len].iter().collect();
                self.entries.get(&key).map(|m| (len, m))
            });
            if let Some((len, morphemes)) = hit {
                out.extend(morphemes.iter().cloned());
                guessed_last = false;
                i += len;
                continue;
            }
            let c = chars[i];
            let tag = guess_tag(c);
            if !self.table.contains(tag) {
                return Err(Error::UnknownTag {
                    tag: tag.to_owned(),
                    line: None,
                });
            }
            match out.last_mut() {
                Some((form, last)) if guessed_last && last.as_str() == tag => form.push(c),
                _ => out.push((c.to_string(), PosTag::new(tag))),
            }
            guessed_last = true;
            i += 1;
        }
        Ok(out)
    }
}

fn guess_tag(c: char) -> &'static str {
    match classify_char(c) {
        CharClass::HangulSyllable | CharClass::HangulJamo => "NNG",
        _ if c.is_ascii_alphabetic() => "SL",
        _ if c.is_ascii_digit() => "SN",
        _ if matches!(c, '.' | '?' | '!') => "SF",
        _ => "SY",
    }
}
