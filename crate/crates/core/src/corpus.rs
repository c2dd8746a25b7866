//! Corpus cleaning and the plain-text line formats.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::hangul::{classify_char, CharClass};
use crate::wordpiece::TokenSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleanConfig {
    pub min_eojeols: usize,
    pub allowed_classes: BTreeSet<CharClass>,
}

impl Default for CleanConfig {
    fn default() -> Self {
        CleanConfig {
            min_eojeols: 3,
            allowed_classes: [CharClass::Ascii, CharClass::HangulSyllable, CharClass::HangulJamo]
                .into_iter()
                .collect(),
        }
    }
}

impl CleanConfig {
    pub fn with_min_eojeols(min_eojeols: usize) -> Result<Self> {
        if min_eojeols == 0 {
            return Err(Error::InvalidConfig("min_eojeols must be at least 1".into()));
        }
        Ok(CleanConfig {
            min_eojeols,
            ..Default::default()
        })
    }

    fn allows(&self, c: char) -> bool {
        matches!(c, ' ' | '\t' | '\n') || self.allowed_classes.contains(&classify_char(c))
    }
}

/// Cleans one sentence. Returns `None` when it ends up shorter than
/// `min_eojeols`.
pub fn clean_line(line: &str, cfg: &CleanConfig) -> Option<String> {
    let kept: String = line.chars().filter(|&c| cfg.allows(c)).collect();
    let eojeols: Vec<&str> = kept.split_whitespace().collect();
    (eojeols.len() >= cfg.min_eojeols.max(1)).then(|| eojeols.join(" "))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CleanStats {
    pub lines_read: usize,
    pub kept: usize,
    pub dropped_short: usize,
    pub invalid_encoding: usize,
}

/// Streaming cleaner. Lines that are not valid UTF-8 are skipped and
/// counted; read failures end the stream with an error.
pub struct CleanIter<R> {
    lines: LineReader<R>,
    cfg: CleanConfig,
    stats: CleanStats,
}

impl<R: BufRead> CleanIter<R> {
    pub fn stats(&self) -> CleanStats {
        self.stats
    }
}

impl<R: BufRead> Iterator for CleanIter<R> {
    type Item = Result<String>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok((_, line)) => line,
                Err(Error::InvalidEncoding { .. }) => {
                    self.stats.lines_read += 1;
                    self.stats.invalid_encoding += 1;
                    continue;
                }
                Err(e) => return Some(Err(e)),
            };
            self.stats.lines_read += 1;
            match clean_line(&line, &self.cfg) {
                Some(clean) => {
                    self.stats.kept += 1;
                    return Some(Ok(clean));
                }
                None => self.stats.dropped_short += 1,
            }
        }
    }
}

pub fn clean_corpus<R: BufRead>(reader: R, cfg: CleanConfig) -> CleanIter<R> {
    CleanIter {
        lines: LineReader::new(reader),
        cfg,
        stats: CleanStats::default(),
    }
}

/// UTF-8 lines with 1-based line numbers and line terminators removed.
pub struct LineReader<R> {
    reader: R,
    line: usize,
    buf: Vec<u8>,
}

impl<R: BufRead> LineReader<R> {
    pub fn new(reader: R) -> Self {
        LineReader {
            reader,
            line: 0,
            buf: Vec::new(),
        }
    }
}

impl<R: BufRead> Iterator for LineReader<R> {
    type Item = Result<(usize, String)>;

    fn next(&mut self) -> Option<Self::Item> {
        self.buf.clear();
        match self.reader.read_until(b'\n', &mut self.buf) {
            Ok(0) => return None,
            Ok(_) => {}
            Err(e) => return Some(Err(e.into())),
        }
        self.line += 1;
        if self.buf.last() == Some(&b'\n') {
            self.buf.pop();
            if self.buf.last() == Some(&b'\r') {
                self.buf.pop();
            }
        }
        Some(
            std::str::from_utf8(&self.buf)
                .map(|s| (self.line, s.to_owned()))
                .map_err(|_| Error::InvalidEncoding { line: self.line }),
        )
    }
}

/// One sentence per line, tokens separated by single spaces.
pub fn write_tokenized<'a, W, I>(sequences: I, mut out: W) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a TokenSequence>,
{
    for seq in sequences {
        writeln!(out, "{seq}")?;
    }
    out.flush()?;
    Ok(())
}

/// Inverse of [`write_tokenized`]; an empty line is an empty sequence.
pub fn read_tokenized<R: BufRead>(reader: R) -> impl Iterator<Item = Result<TokenSequence>> {
    LineReader::new(reader).map(|line| line.map(|(_, l)| l.split_whitespace().collect()))
}
