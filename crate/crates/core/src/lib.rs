//! Korean subword tokenization with morpheme-aware pre-tokenization and
//! Hangul jamo decomposition.
//!
//! The crate covers five pipelines feeding a WordPiece vocabulary:
//!
//! * `wp`: eojeols (whitespace units) as they are;
//! * `wp-sd`: eojeols with every syllable decomposed into jamo;
//! * `morwp`: morphemes from an analyzer, as surface fragments;
//! * `morwp-sd`: morphemes, every syllable decomposed;
//! * `morwp-md`: morphemes, only lexical morphemes decomposed.
//!
//! ```
//! use morphtok::{pretokenize, ClassTable, PipelineMode, SentenceRef, parse_tagged_str};
//!
//! let tsv = "갔\tVV+EP,*,T,갔,Inflect,VV,EP,가/VV/*+았/EP/*\n다\tEF,*,F,다,*,*,*,*\nEOS\n";
//! let sentence = &parse_tagged_str(tsv, &ClassTable::default()).unwrap()[0];
//! let tokens = pretokenize(SentenceRef::Analyzed(sentence), PipelineMode::MorWpMd).unwrap();
//! let texts: Vec<_> = tokens.iter().map(|t| t.text.as_str()).collect();
//! assert_eq!(texts, ["\u{1100}\u{1161}", "\u{11BB}", "다"]);
//! ```

pub mod corpus;
pub mod error;
pub mod hangul;
pub mod metrics;
pub mod morph;
pub mod pipeline;
pub mod tokenizer;
pub mod wordpiece;

pub use corpus::{clean_corpus, clean_line, read_tokenized, write_tokenized, CleanConfig, CleanStats};
pub use error::{Error, Result};
pub use hangul::{
    classify_char, compose_jamo, compose_text, decompose_syllable, decompose_text, display_compat,
    CharClass, HangulError, JamoSequence, SyllableBlock,
};
pub use metrics::{corpus_metrics, sentence_wsr, vocab_wser, MetricsAccumulator, MetricsReport};
pub use morph::{
    align_surface, classify_pos, parse_tagged_corpus, parse_tagged_str, AnalyzedEojeol,
    AnalyzedSentence, ClassTable, DemoAnalyzer, Morpheme, MorphemeType, PosTag,
};
pub use pipeline::{pretokenize, PipelineMode, PreToken, Sentence, SentenceRef};
pub use tokenizer::{compare, CompareRow, Corpus, InputFormat, Tokenizer};
pub use wordpiece::{decode, encode, train, TokenSequence, TrainConfig, TrainOutput, Vocabulary};
