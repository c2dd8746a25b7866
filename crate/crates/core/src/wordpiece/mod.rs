//! WordPiece training and encoding.

mod encoder;
mod trainer;
mod vocab;

pub use encoder::{decode, encode, encode_with_limit, TokenSequence, DEFAULT_MAX_INPUT_CHARS};
pub use trainer::{train, Merge, TrainConfig, TrainOutput, WordPieceTrainer};
pub use vocab::{
    Vocabulary, CLS, CONTINUATION_PREFIX, MASK, PAD, SEP, SPECIAL_TOKENS, UNK,
};
