use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

pub const PAD: &str = "[PAD]";
pub const UNK: &str = "[UNK]";
pub const CLS: &str = "[CLS]";
pub const SEP: &str = "[SEP]";
pub const MASK: &str = "[MASK]";

/// Special tokens, in id order.
pub const SPECIAL_TOKENS: [&str; 5] = [PAD, UNK, CLS, SEP, MASK];

pub const CONTINUATION_PREFIX: &str = "##";

/// Ordered token list; a token's id is its position. The five special
/// tokens always occupy ids 0..5.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    entries: Vec<String>,
    ids: HashMap<String, u32>,
    /// Longest entry in chars, not counting the continuation prefix.
    longest: usize,
}

impl Default for Vocabulary {
    fn default() -> Self {
        Self::with_specials()
    }
}

impl Vocabulary {
    pub fn with_specials() -> Self {
        let mut v = Vocabulary {
            entries: Vec::new(),
            ids: HashMap::new(),
            longest: 0,
        };
        for tok in SPECIAL_TOKENS {
            v.push(tok);
        }
        v
    }

    /// Builds a vocabulary from a full entry list, specials included.
    pub fn from_entries<I, S>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut v = Vocabulary {
            entries: Vec::new(),
            ids: HashMap::new(),
            longest: 0,
        };
        for (idx, tok) in entries.into_iter().enumerate() {
            let tok = tok.into();
            if tok.is_empty() {
                return Err(Error::EmptyEntry { line: idx + 1 });
            }
            if v.ids.contains_key(&tok) {
                return Err(Error::DuplicateEntry { token: tok, line: idx + 1 });
            }
            v.push(tok);
        }
        if v.entries.len() < SPECIAL_TOKENS.len()
            || v.entries.iter().zip(SPECIAL_TOKENS).any(|(e, s)| e != s)
        {
            return Err(Error::MissingSpecials);
        }
        Ok(v)
    }

    /// Appends `token` unless present. Returns whether it was added.
    pub fn push(&mut self, token: impl Into<String>) -> bool {
        let token = token.into();
        if self.ids.contains_key(&token) {
            return false;
        }
        let core = token.strip_prefix(CONTINUATION_PREFIX).unwrap_or(&token);
        self.longest = self.longest.max(core.chars().count());
        self.ids.insert(token.clone(), self.entries.len() as u32);
        self.entries.push(token);
        true
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn id(&self, token: &str) -> Option<u32> {
        self.ids.get(token).copied()
    }

    pub fn token(&self, id: u32) -> Option<&str> {
        self.entries.get(id as usize).map(String::as_str)
    }

    pub fn contains(&self, token: &str) -> bool {
        self.ids.contains_key(token)
    }

    pub fn entries(&self) -> &[String] {
        &self.entries
    }

    /// Entries after the special tokens.
    pub fn learned(&self) -> &[String] {
        &self.entries[SPECIAL_TOKENS.len().min(self.entries.len())..]
    }

    pub fn longest_entry_chars(&self) -> usize {
        self.longest
    }

    pub fn unk_id(&self) -> u32 {
        1
    }

    pub fn write_to<W: Write>(&self, mut out: W) -> Result<()> {
        for tok in &self.entries {
            out.write_all(tok.as_bytes())?;
            out.write_all(b"\n")?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn read_from<R: BufRead>(mut reader: R) -> Result<Self> {
        let mut entries = Vec::new();
        let mut buf = Vec::new();
        loop {
            buf.clear();
            if reader.read_until(b'\n', &mut buf)? == 0 {
                break;
            }
            if buf.last() == Some(&b'\n') {
                buf.pop();
                if buf.last() == Some(&b'\r') {
                    buf.pop();
                }
            }
            let line = entries.len() + 1;
            let tok = String::from_utf8(buf.clone()).map_err(|_| Error::InvalidEncoding { line })?;
            entries.push(tok);
        }
        Self::from_entries(entries)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        self.write_to(BufWriter::new(File::create(path)?))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::read_from(BufReader::new(File::open(path)?))
    }
}
