//! WordPiece vocabulary training.
//!
//! Every pre-token starts as a sequence of characters, the first one bare
//! and the rest carrying the `##` prefix. Each step merges the adjacent
//! pair `(a, b)` with the highest likelihood score
//!
//! ```text
//! score(a, b) = count(ab) / (count(a) * count(b))
//! ```
//!
//! where counts are corpus occurrences under the current segmentation.
//! Ties go to the larger `count(ab)`, then to the lexicographically smaller
//! merged token, then to the smaller left symbol. Scores are compared
//! exactly by cross-multiplication, never through floating point.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::io::Write;

use crate::error::{Error, Result};
use crate::pipeline::PreToken;

use super::vocab::{Vocabulary, CONTINUATION_PREFIX, SPECIAL_TOKENS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrainConfig {
    pub vocab_size: usize,
    /// Pairs seen fewer times than this are never merged.
    pub min_frequency: u64,
    /// Merges producing longer tokens (in chars, prefix excluded) are skipped.
    pub max_token_length: usize,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            vocab_size: 32_000,
            min_frequency: 2,
            max_token_length: 100,
        }
    }
}

impl TrainConfig {
    pub fn with_vocab_size(vocab_size: usize) -> Self {
        TrainConfig {
            vocab_size,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.vocab_size <= SPECIAL_TOKENS.len() {
            return Err(Error::InvalidConfig(format!(
                "vocab_size must exceed the {} special tokens",
                SPECIAL_TOKENS.len()
            )));
        }
        if self.max_token_length == 0 {
            return Err(Error::InvalidConfig("max_token_length must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Merge {
    pub left: String,
    pub right: String,
    pub merged: String,
    pub count: u64,
}

#[derive(Debug, Clone)]
pub struct TrainOutput {
    pub vocab: Vocabulary,
    /// Every merge applied, in order. A merge whose token already existed
    /// adds no entry.
    pub merges: Vec<Merge>,
    pub alphabet_size: usize,
    pub distinct_words: usize,
}

impl TrainOutput {
    /// Training report as a two-line TSV.
    pub fn write_report<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "merges\tfinal_size\talphabet_size\tdistinct_words")?;
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            self.merges.len(),
            self.vocab.len(),
            self.alphabet_size,
            self.distinct_words
        )?;
        Ok(())
    }
}

/// Accumulates pre-token counts, then trains.
#[derive(Debug, Clone)]
pub struct WordPieceTrainer {
    cfg: TrainConfig,
    words: HashMap<PreToken, u64>,
}

impl WordPieceTrainer {
    pub fn new(cfg: TrainConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(WordPieceTrainer {
            cfg,
            words: HashMap::new(),
        })
    }

    pub fn feed<I: IntoIterator<Item = PreToken>>(&mut self, pretokens: I) {
        for tok in pretokens {
            if !tok.text.is_empty() {
                *self.words.entry(tok).or_default() += 1;
            }
        }
    }

    /// Merges counts gathered by another trainer (e.g. a parallel shard).
    pub fn absorb(&mut self, other: WordPieceTrainer) {
        for (tok, n) in other.words {
            *self.words.entry(tok).or_default() += n;
        }
    }

    pub fn train(&self) -> Result<TrainOutput> {
        if self.words.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        let mut words: Vec<(&PreToken, u64)> = self.words.iter().map(|(w, n)| (w, *n)).collect();
        words.sort_by(|a, b| {
            (a.0.text.as_str(), a.0.continuation).cmp(&(b.0.text.as_str(), b.0.continuation))
        });
        let mut state = MergeState::new(&words);

        let mut vocab = Vocabulary::with_specials();
        let alphabet = state.alphabet();
        let room = self.cfg.vocab_size - SPECIAL_TOKENS.len();
        let alphabet_size = alphabet.len().min(room);
        for &sym in &alphabet[..alphabet_size] {
            vocab.push(state.symbols[sym as usize].clone());
        }

        let mut merges = Vec::new();
        while vocab.len() < self.cfg.vocab_size {
            let Some((pair, count)) = state.best_pair(&self.cfg) else {
                break;
            };
            let merged = state.apply(pair);
            let merge = Merge {
                left: state.symbols[pair.0 as usize].clone(),
                right: state.symbols[pair.1 as usize].clone(),
                merged: state.symbols[merged as usize].clone(),
                count,
            };
            vocab.push(merge.merged.clone());
            merges.push(merge);
        }

        Ok(TrainOutput {
            vocab,
            merges,
            alphabet_size,
            distinct_words: words.len(),
        })
    }
}

pub fn train<I: IntoIterator<Item = PreToken>>(pretokens: I, cfg: &TrainConfig) -> Result<Vocabulary> {
    let mut trainer = WordPieceTrainer::new(cfg.clone())?;
    trainer.feed(pretokens);
    trainer.train().map(|out| out.vocab)
}

type Pair = (u32, u32);

struct MergeState {
    symbols: Vec<String>,
    symbol_ids: HashMap<String, u32>,
    /// Length in chars without the continuation prefix.
    symbol_len: Vec<usize>,
    /// Corpus occurrences of each symbol under the current segmentation.
    symbol_count: Vec<u64>,
    words: Vec<Vec<u32>>,
    word_count: Vec<u64>,
    pair_count: HashMap<Pair, u64>,
    pair_words: HashMap<Pair, HashSet<usize>>,
}

impl MergeState {
    fn new(words: &[(&PreToken, u64)]) -> Self {
        let mut state = MergeState {
            symbols: Vec::new(),
            symbol_ids: HashMap::new(),
            symbol_len: Vec::new(),
            symbol_count: Vec::new(),
            words: Vec::with_capacity(words.len()),
            word_count: Vec::with_capacity(words.len()),
            pair_count: HashMap::new(),
            pair_words: HashMap::new(),
        };
        for (idx, (tok, n)) in words.iter().enumerate() {
            let mut seq = Vec::new();
            for (i, c) in tok.text.chars().enumerate() {
                let sym = if i == 0 && !tok.continuation {
                    c.to_string()
                } else {
                    format!("{CONTINUATION_PREFIX}{c}")
                };
                let id = state.intern(sym);
                state.symbol_count[id as usize] += n;
                seq.push(id);
            }
            state.words.push(seq);
            state.word_count.push(*n);
            state.add_pairs(idx);
        }
        state
    }

    fn intern(&mut self, sym: String) -> u32 {
        if let Some(&id) = self.symbol_ids.get(&sym) {
            return id;
        }
        let id = self.symbols.len() as u32;
        let core = sym.strip_prefix(CONTINUATION_PREFIX).unwrap_or(&sym);
        self.symbol_len.push(core.chars().count());
        self.symbol_count.push(0);
        self.symbol_ids.insert(sym.clone(), id);
        self.symbols.push(sym);
        id
    }

    /// Initial symbols, most frequent first, ties by string.
    fn alphabet(&self) -> Vec<u32> {
        let mut ids: Vec<u32> = (0..self.symbols.len() as u32).collect();
        ids.sort_by(|&a, &b| {
            self.symbol_count[b as usize]
                .cmp(&self.symbol_count[a as usize])
                .then_with(|| self.symbols[a as usize].cmp(&self.symbols[b as usize]))
        });
        ids
    }

    fn add_pairs(&mut self, idx: usize) {
        let n = self.word_count[idx];
        for w in self.words[idx].windows(2) {
            let pair = (w[0], w[1]);
            *self.pair_count.entry(pair).or_default() += n;
            self.pair_words.entry(pair).or_default().insert(idx);
        }
    }

    fn remove_pairs(&mut self, idx: usize) {
        let n = self.word_count[idx];
        for w in self.words[idx].windows(2) {
            let pair = (w[0], w[1]);
            if let Some(c) = self.pair_count.get_mut(&pair) {
                *c -= n;
                if *c == 0 {
                    self.pair_count.remove(&pair);
                }
            }
        }
    }

    fn merged_text(&self, pair: Pair) -> String {
        self.merged_chars(pair).collect()
    }

    fn merged_chars(&self, pair: Pair) -> impl Iterator<Item = char> + '_ {
        let right = &self.symbols[pair.1 as usize];
        let tail = right.strip_prefix(CONTINUATION_PREFIX).unwrap_or(right);
        self.symbols[pair.0 as usize].chars().chain(tail.chars())
    }

    fn compare(&self, a: (Pair, u64), b: (Pair, u64)) -> Ordering {
        let denom = |p: Pair| {
            u128::from(self.symbol_count[p.0 as usize]) * u128::from(self.symbol_count[p.1 as usize])
        };
        // a.count / denom(a) vs b.count / denom(b)
        let lhs = u128::from(a.1) * denom(b.0);
        let rhs = u128::from(b.1) * denom(a.0);
        lhs.cmp(&rhs)
            .then_with(|| a.1.cmp(&b.1))
            .then_with(|| self.merged_chars(b.0).cmp(self.merged_chars(a.0)))
            .then_with(|| self.symbols[b.0 .0 as usize].cmp(&self.symbols[a.0 .0 as usize]))
    }

    fn best_pair(&self, cfg: &TrainConfig) -> Option<(Pair, u64)> {
        let mut best: Option<(Pair, u64)> = None;
        for (&pair, &count) in &self.pair_count {
            if count < cfg.min_frequency.max(1) {
                continue;
            }
            if self.symbol_len[pair.0 as usize] + self.symbol_len[pair.1 as usize] > cfg.max_token_length {
                continue;
            }
            let cand = (pair, count);
            if best.is_none_or(|b| self.compare(cand, b) == Ordering::Greater) {
                best = Some(cand);
            }
        }
        best
    }

    /// Replaces every occurrence of `pair` (left to right, non-overlapping)
    /// and returns the merged symbol id.
    fn apply(&mut self, pair: Pair) -> u32 {
        let text = self.merged_text(pair);
        let merged = self.intern(text);
        let mut affected: Vec<usize> = self
            .pair_words
            .remove(&pair)
            .map(|s| s.into_iter().collect())
            .unwrap_or_default();
        affected.sort_unstable();
        for idx in affected {
            let word = &self.words[idx];
            if !word.windows(2).any(|w| (w[0], w[1]) == pair) {
                continue;
            }
            self.remove_pairs(idx);
            let word = &self.words[idx];
            let mut out = Vec::with_capacity(word.len());
            let mut hits = 0u64;
            let mut i = 0;
            while i < word.len() {
                if i + 1 < word.len() && (word[i], word[i + 1]) == pair {
                    out.push(merged);
                    hits += 1;
                    i += 2;
                } else {
                    out.push(word[i]);
                    i += 1;
                }
            }
            let n = hits * self.word_count[idx];
            self.symbol_count[pair.0 as usize] -= n;
            self.symbol_count[pair.1 as usize] -= n;
            self.symbol_count[merged as usize] += n;
            self.words[idx] = out;
            self.add_pairs(idx);
        }
        self.pair_count.remove(&pair);
        merged
    }
}
