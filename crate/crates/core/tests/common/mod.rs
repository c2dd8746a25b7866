//! Independent oracles shared by the property suites and the acceptance run.
#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::BTreeMap;

use num_rational::Ratio;
use rand::Rng;

use morphtok::wordpiece::{Merge, TrainConfig, Vocabulary, SPECIAL_TOKENS};
use morphtok::PreToken;

pub const TOLERANCE: f64 = 1e-9;

/// Straightforward re-implementation: every step recounts symbols and pairs
/// over the whole corpus and scores pairs as exact fractions.
pub fn simulate(corpus: &[PreToken], cfg: &TrainConfig) -> (Vec<String>, Vec<Merge>) {
    let mut words: Vec<(Vec<String>, u64)> = Vec::new();
    let mut counts: BTreeMap<(&str, bool), u64> = BTreeMap::new();
    for pt in corpus {
        *counts.entry((&pt.text, pt.continuation)).or_default() += 1;
    }
    for ((text, continuation), n) in counts {
        let syms = text
            .chars()
            .enumerate()
            .map(|(i, c)| {
                if i == 0 && !continuation {
                    c.to_string()
                } else {
                    format!("##{c}")
                }
            })
            .collect();
        words.push((syms, n));
    }

    let symbol_counts = |words: &[(Vec<String>, u64)]| {
        let mut m: BTreeMap<String, u64> = BTreeMap::new();
        for (w, n) in words {
            for s in w {
                *m.entry(s.clone()).or_default() += n;
            }
        }
        m
    };

    let mut alphabet: Vec<(String, u64)> = symbol_counts(&words).into_iter().collect();
    alphabet.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let mut vocab: Vec<String> = SPECIAL_TOKENS.iter().map(|s| s.to_string()).collect();
    for (s, _) in alphabet.into_iter().take(cfg.vocab_size - SPECIAL_TOKENS.len()) {
        vocab.push(s);
    }

    let len = |s: &str| s.trim_start_matches("##").chars().count();
    let mut merges = Vec::new();
    while vocab.len() < cfg.vocab_size {
        let sym = symbol_counts(&words);
        let mut pairs: BTreeMap<(String, String), u64> = BTreeMap::new();
        for (w, n) in &words {
            for p in w.windows(2) {
                *pairs.entry((p[0].clone(), p[1].clone())).or_default() += n;
            }
        }
        let best = pairs
            .into_iter()
            .filter(|(_, c)| *c >= cfg.min_frequency.max(1))
            .filter(|((a, b), _)| len(a) + len(b) <= cfg.max_token_length)
            .map(|((a, b), c)| {
                let score = Ratio::new(u128::from(c), u128::from(sym[&a]) * u128::from(sym[&b]));
                let merged = format!("{a}{}", b.trim_start_matches("##"));
                (score, c, Reverse(merged), Reverse(a), b)
            })
            .max_by(|x, y| {
                x.0.cmp(&y.0)
                    .then(x.1.cmp(&y.1))
                    .then(x.2.cmp(&y.2))
                    .then(x.3.cmp(&y.3))
            });
        let Some((_, count, Reverse(merged), Reverse(left), right)) = best else {
            break;
        };
        for (w, _) in words.iter_mut() {
            let mut out = Vec::with_capacity(w.len());
            let mut i = 0;
            while i < w.len() {
                if i + 1 < w.len() && w[i] == left && w[i + 1] == right {
                    out.push(merged.clone());
                    i += 2;
                } else {
                    out.push(w[i].clone());
                    i += 1;
                }
            }
            *w = out;
        }
        if !vocab.contains(&merged) {
            vocab.push(merged.clone());
        }
        merges.push(Merge {
            left,
            right,
            merged,
            count,
        });
    }
    (vocab, merges)
}

pub fn random_corpus(rng: &mut impl Rng) -> Vec<PreToken> {
    const ALPHABET: [char; 7] = ['가', '나', '다', 'ᆻ', 'a', 'b', '.'];
    let distinct = rng.random_range(1..=12);
    let lexicon: Vec<PreToken> = (0..distinct)
        .map(|_| {
            let len = rng.random_range(1..=6);
            let text = (0..len).map(|_| ALPHABET[rng.random_range(0..ALPHABET.len())]).collect();
            PreToken {
                text,
                continuation: rng.random_bool(0.1),
            }
        })
        .collect();
    let words = rng.random_range(1..=50);
    (0..words)
        .map(|_| lexicon[rng.random_range(0..lexicon.len())].clone())
        .collect()
}

/// Longest entry matching `chars[pos..]`, found by scanning every entry.
pub fn longest_match(vocab: &Vocabulary, chars: &[char], pos: usize, prefixed: bool) -> Option<usize> {
    let rest: String = chars[pos..].iter().collect();
    vocab
        .entries()
        .iter()
        .filter_map(|e| {
            let body = if prefixed { e.strip_prefix("##")? } else { e.as_str() };
            if body.is_empty() || (!prefixed && e.starts_with("##")) {
                return None;
            }
            rest.starts_with(body).then(|| body.chars().count())
        })
        .max()
}

pub struct Recount {
    pub oov: f64,
    pub wsr: f64,
    pub mean: f64,
    pub std: f64,
}

/// Single pass over the flattened text, one line per sentence.
pub fn recount(lines: &[String]) -> Recount {
    let (mut total, mut unk, mut sub) = (0usize, 0usize, 0usize);
    let mut rates = Vec::new();
    for line in lines {
        let (mut n, mut s) = (0usize, 0usize);
        for tok in line.split(' ').filter(|t| !t.is_empty()) {
            n += 1;
            match tok {
                "[UNK]" => unk += 1,
                t if t.len() > 2 && &t.as_bytes()[..2] == b"##" => s += 1,
                _ => {}
            }
        }
        total += n;
        sub += s;
        if n > 0 {
            rates.push(s as f64 * 100.0 / n as f64);
        }
    }
    let k = rates.len() as f64;
    let mean = rates.iter().sum::<f64>() / k;
    let std = (rates.iter().map(|r| (r - mean) * (r - mean)).sum::<f64>() / k).sqrt();
    Recount {
        oov: unk as f64 * 100.0 / total as f64,
        wsr: sub as f64 * 100.0 / total as f64,
        mean,
        std,
    }
}

pub fn close(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= TOLERANCE * a.abs().max(b.abs())
}
