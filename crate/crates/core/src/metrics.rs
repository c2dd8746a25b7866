//! Corpus and vocabulary statistics.
//!
//! * OOV rate: share of tokens that are `[UNK]`.
//! * WSR: share of tokens that are `##` continuation pieces. `[UNK]` counts
//!   toward the total only.
//! * WSER: share of non-special vocabulary entries that are `##` pieces.
//!
//! All rates are percentages.

use std::io::Write;

use crate::error::{Error, Result};
use crate::wordpiece::{TokenSequence, Vocabulary, CONTINUATION_PREFIX, SPECIAL_TOKENS, UNK};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsReport {
    pub oov_rate: f64,
    pub wsr: f64,
    /// Only known when a vocabulary was supplied.
    pub wser: Option<f64>,
    pub wsr_sentence_mean: f64,
    pub wsr_sentence_std: f64,
    pub token_count: u64,
    pub sentence_count: u64,
}

impl MetricsReport {
    pub const TSV_HEADER: &'static str =
        "oov_rate\twsr\twser\twsr_sentence_mean\twsr_sentence_std\ttoken_count\tsentence_count";

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            fmt_pct(self.oov_rate),
            fmt_pct(self.wsr),
            self.wser.map(fmt_pct).unwrap_or_else(|| "NA".into()),
            fmt_pct(self.wsr_sentence_mean),
            fmt_pct(self.wsr_sentence_std),
            self.token_count,
            self.sentence_count
        )
    }

    pub fn write_tsv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{}", Self::TSV_HEADER)?;
        writeln!(out, "{}", self.tsv_row())?;
        Ok(())
    }

    pub fn summary(&self) -> String {
        let wser = self
            .wser
            .map(|w| format!(" wser={}%", fmt_pct(w)))
            .unwrap_or_default();
        format!(
            "tokens={} sentences={} oov={}% wsr={}%{} wsr/sentence={}±{}%",
            self.token_count,
            self.sentence_count,
            fmt_pct(self.oov_rate),
            fmt_pct(self.wsr),
            wser,
            fmt_pct(self.wsr_sentence_mean),
            fmt_pct(self.wsr_sentence_std)
        )
    }
}

/// Fixed four-decimal formatting keeps reports byte-stable.
pub fn fmt_pct(x: f64) -> String {
    format!("{x:.4}")
}

/// Running totals over token sequences. Accumulators built over disjoint
/// shards can be combined with [`MetricsAccumulator::merge`] in input order.
#[derive(Debug, Clone, Default)]
pub struct MetricsAccumulator {
    tokens: u64,
    unk: u64,
    subtokens: u64,
    sentences: u64,
    per_sentence: Vec<f64>,
}

impl MetricsAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add<S: AsRef<str>>(&mut self, tokens: &[S]) {
        self.sentences += 1;
        let mut unk = 0u64;
        let mut sub = 0u64;
        for t in tokens {
            let t = t.as_ref();
            if t == UNK {
                unk += 1;
            } else if t.starts_with(CONTINUATION_PREFIX) {
                sub += 1;
            }
        }
        let n = tokens.len() as u64;
        self.tokens += n;
        self.unk += unk;
        self.subtokens += sub;
        if n > 0 {
            self.per_sentence.push(pct(sub, n));
        }
    }

    pub fn add_sequence(&mut self, seq: &TokenSequence) {
        self.add(&seq.tokens);
    }

    pub fn merge(&mut self, other: MetricsAccumulator) {
        self.tokens += other.tokens;
        self.unk += other.unk;
        self.subtokens += other.subtokens;
        self.sentences += other.sentences;
        self.per_sentence.extend(other.per_sentence);
    }

    /// WSR of each non-empty sentence, in input order.
    pub fn per_sentence(&self) -> &[f64] {
        &self.per_sentence
    }

    pub fn finish(&self, vocab: Option<&Vocabulary>) -> Result<MetricsReport> {
        if self.tokens == 0 {
            return Err(Error::EmptyInput);
        }
        let (mean, std) = mean_std(&self.per_sentence);
        Ok(MetricsReport {
            oov_rate: pct(self.unk, self.tokens),
            wsr: pct(self.subtokens, self.tokens),
            wser: vocab.map(vocab_wser),
            wsr_sentence_mean: mean,
            wsr_sentence_std: std,
            token_count: self.tokens,
            sentence_count: self.sentences,
        })
    }
}

pub fn corpus_metrics<'a, I>(sequences: I, vocab: Option<&Vocabulary>) -> Result<MetricsReport>
where
    I: IntoIterator<Item = &'a TokenSequence>,
{
    let mut acc = MetricsAccumulator::new();
    for seq in sequences {
        acc.add_sequence(seq);
    }
    acc.finish(vocab)
}

/// WSR of one sentence; `None` when it has no tokens.
pub fn sentence_wsr<S: AsRef<str>>(tokens: &[S]) -> Option<f64> {
    let sub = tokens
        .iter()
        .filter(|t| t.as_ref() != UNK && t.as_ref().starts_with(CONTINUATION_PREFIX))
        .count();
    (!tokens.is_empty()).then(|| pct(sub as u64, tokens.len() as u64))
}

pub fn vocab_wser(vocab: &Vocabulary) -> f64 {
    let learned = &vocab.entries()[SPECIAL_TOKENS.len().min(vocab.len())..];
    let sub = learned
        .iter()
        .filter(|t| t.starts_with(CONTINUATION_PREFIX))
        .count();
    if learned.is_empty() {
        0.0
    } else {
        pct(sub as u64, learned.len() as u64)
    }
}

fn pct(num: u64, den: u64) -> f64 {
    100.0 * num as f64 / den as f64
}

/// Mean and population standard deviation.
fn mean_std(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (0.0, 0.0);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}
