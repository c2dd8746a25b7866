//! End-to-end helpers shared by the command-line tool and the C API:
//! corpus loading, parallel pre-tokenization, training, encoding and
//! configuration sweeps.

use std::io::BufRead;
use std::str::FromStr;

use rayon::prelude::*;

use crate::corpus::LineReader;
use crate::error::{Error, Result};
use crate::metrics::{MetricsAccumulator, MetricsReport};
use crate::morph::{parse_tagged_corpus, AnalyzedSentence, ClassTable, DemoAnalyzer};
use crate::pipeline::{pretokenize, PipelineMode, PreToken, SentenceRef};
use crate::wordpiece::{decode, encode, TokenSequence, TrainConfig, TrainOutput, Vocabulary, WordPieceTrainer};

/// How input text is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InputFormat {
    /// One sentence per line.
    Raw,
    /// Analyzer output, one morpheme per line.
    Tagged,
    /// One sentence per line, analyzed with the built-in demo dictionary.
    Demo,
}

impl InputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            InputFormat::Raw => "raw",
            InputFormat::Tagged => "tagged",
            InputFormat::Demo => "demo",
        }
    }
}

impl FromStr for InputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(InputFormat::Raw),
            "tagged" => Ok(InputFormat::Tagged),
            "demo" => Ok(InputFormat::Demo),
            other => Err(Error::InvalidConfig(format!("unknown input format `{other}`"))),
        }
    }
}

/// A loaded corpus, either raw sentences or analyses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Corpus {
    Raw(Vec<String>),
    Analyzed(Vec<AnalyzedSentence>),
}

impl Corpus {
    pub fn load<R: BufRead>(reader: R, format: InputFormat, table: &ClassTable) -> Result<Self> {
        match format {
            InputFormat::Raw => Ok(Corpus::Raw(read_lines(reader)?)),
            InputFormat::Tagged => Ok(Corpus::Analyzed(
                parse_tagged_corpus(reader, table).collect::<Result<_>>()?,
            )),
            InputFormat::Demo => {
                let demo = DemoAnalyzer::builtin(table.clone())?;
                Corpus::analyze(read_lines(reader)?, &demo)
            }
        }
    }

    pub fn analyze(lines: Vec<String>, demo: &DemoAnalyzer) -> Result<Self> {
        let analyzed = lines
            .par_iter()
            .map(|l| demo.analyze(l))
            .collect::<Result<Vec<_>>>()?;
        Ok(Corpus::Analyzed(analyzed))
    }

    pub fn len(&self) -> usize {
        match self {
            Corpus::Raw(v) => v.len(),
            Corpus::Analyzed(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pre-tokenizes every sentence, in order. Eojeol modes accept analyzed
    /// corpora and use their surfaces.
    pub fn pretokenize(&self, mode: PipelineMode) -> Result<Vec<Vec<PreToken>>> {
        match self {
            Corpus::Raw(lines) => lines
                .par_iter()
                .map(|l| pretokenize(SentenceRef::Raw(l), mode))
                .collect(),
            Corpus::Analyzed(sentences) => sentences
                .par_iter()
                .map(|s| {
                    if mode.is_morphemic() {
                        pretokenize(SentenceRef::Analyzed(s), mode)
                    } else {
                        pretokenize(SentenceRef::Raw(&s.text()), mode)
                    }
                })
                .collect(),
        }
    }
}

fn read_lines<R: BufRead>(reader: R) -> Result<Vec<String>> {
    LineReader::new(reader).map(|l| l.map(|(_, s)| s)).collect()
}

/// Counts pre-tokens in parallel shards, then trains serially.
pub fn train_vocab(pretokens: &[Vec<PreToken>], cfg: &TrainConfig) -> Result<TrainOutput> {
    let empty = WordPieceTrainer::new(cfg.clone())?;
    let trainer = pretokens
        .par_chunks(1024)
        .fold(
            || empty.clone(),
            |mut t, chunk| {
                for sentence in chunk {
                    t.feed(sentence.iter().cloned());
                }
                t
            },
        )
        .reduce(
            || empty.clone(),
            |mut a, b| {
                a.absorb(b);
                a
            },
        );
    trainer.train()
}

pub fn encode_all(pretokens: &[Vec<PreToken>], vocab: &Vocabulary) -> Vec<TokenSequence> {
    pretokens.par_iter().map(|p| encode(p, vocab)).collect()
}

pub fn corpus_report(sequences: &[TokenSequence], vocab: Option<&Vocabulary>) -> Result<MetricsReport> {
    let acc = sequences
        .par_chunks(1024)
        .map(|chunk| {
            let mut acc = MetricsAccumulator::new();
            chunk.iter().for_each(|s| acc.add_sequence(s));
            acc
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(MetricsAccumulator::new(), |mut a, b| {
            a.merge(b);
            a
        });
    acc.finish(vocab)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareRow {
    pub mode: PipelineMode,
    pub vocab_size: usize,
    pub report: MetricsReport,
}

impl CompareRow {
    pub const TSV_HEADER: &'static str =
        "mode\tvocab_size\toov_rate\twsr\twser\twsr_sentence_mean\twsr_sentence_std";

    pub fn tsv_row(&self) -> String {
        use crate::metrics::fmt_pct;
        let r = &self.report;
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.mode,
            self.vocab_size,
            fmt_pct(r.oov_rate),
            fmt_pct(r.wsr),
            fmt_pct(r.wser.unwrap_or(0.0)),
            fmt_pct(r.wsr_sentence_mean),
            fmt_pct(r.wsr_sentence_std)
        )
    }
}

/// Trains and evaluates one vocabulary per (mode, size) pair on the same
/// corpus. Rows come out in mode-major order.
pub fn compare(
    corpus: &Corpus,
    modes: &[PipelineMode],
    vocab_sizes: &[usize],
    base: &TrainConfig,
) -> Result<Vec<CompareRow>> {
    let mut rows = Vec::new();
    for &mode in modes {
        let pretokens = corpus.pretokenize(mode)?;
        for &vocab_size in vocab_sizes {
            let cfg = TrainConfig {
                vocab_size,
                ..base.clone()
            };
            let vocab = train_vocab(&pretokens, &cfg)?.vocab;
            let encoded = encode_all(&pretokens, &vocab);
            let report = corpus_report(&encoded, Some(&vocab))?;
            rows.push(CompareRow {
                mode,
                vocab_size,
                report,
            });
        }
    }
    Ok(rows)
}

/// A vocabulary bound to a pipeline mode and input format.
#[derive(Debug, Clone)]
pub struct Tokenizer {
    vocab: Vocabulary,
    mode: PipelineMode,
    format: InputFormat,
    table: ClassTable,
    demo: Option<DemoAnalyzer>,
}

impl Tokenizer {
    pub fn new(vocab: Vocabulary, mode: PipelineMode, format: InputFormat, table: ClassTable) -> Result<Self> {
        if mode.is_morphemic() && format == InputFormat::Raw {
            return Err(Error::ModeInputMismatch {
                mode: mode.as_str(),
                expected: "tagged or demo-analyzed",
            });
        }
        let demo = match format {
            InputFormat::Demo => Some(DemoAnalyzer::builtin(table.clone())?),
            _ => None,
        };
        Ok(Tokenizer {
            vocab,
            mode,
            format,
            table,
            demo,
        })
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn mode(&self) -> PipelineMode {
        self.mode
    }

    pub fn format(&self) -> InputFormat {
        self.format
    }

    pub fn load(&self, text: &str) -> Result<Corpus> {
        match (&self.demo, self.format) {
            (Some(demo), InputFormat::Demo) => Corpus::analyze(read_lines(text.as_bytes())?, demo),
            _ => Corpus::load(text.as_bytes(), self.format, &self.table),
        }
    }

    /// Tokenizes every sentence of `text`, in order.
    pub fn tokenize(&self, text: &str) -> Result<Vec<TokenSequence>> {
        self.tokenize_corpus(&self.load(text)?)
    }

    pub fn tokenize_corpus(&self, corpus: &Corpus) -> Result<Vec<TokenSequence>> {
        Ok(encode_all(&corpus.pretokenize(self.mode)?, &self.vocab))
    }

    pub fn detokenize<S: AsRef<str>>(&self, tokens: &[S]) -> Result<String> {
        decode(tokens, self.mode)
    }

    pub fn metrics(&self, text: &str) -> Result<MetricsReport> {
        corpus_report(&self.tokenize(text)?, Some(&self.vocab))
    }
}
