//! Surface alignment of analyzer output.
//!
//! Analyzers report canonical morphemes (가 + 았 + 다) for an eojeol whose
//! surface fuses some of them into one syllable (갔다). Alignment works on
//! conjoining jamo: canonical forms are matched left to right against the
//! decomposed surface, so a morpheme boundary may fall inside a syllable and
//! the past-tense 았 is realized by the lone trail ᆻ.
//!
//! The regular vowel contractions are understood (아+아, 어+어, 하+여, 이+어,
//! 오+아, 우+어, 되+어, the dropped ㅡ and the absorbed 어 after ㅐ/ㅔ).
//! Anything else falls back to canonical forms and flags the eojeol.

use crate::error::Result;
use crate::hangul::{compose_text, decompose_text, from_compat_jamo, is_vowel};

use super::{AnalyzedEojeol, ClassTable, Morpheme, PosTag};

const SILENT_LEAD: char = '\u{110B}';
const HIEUH: char = '\u{1112}';
const A: char = '\u{1161}';
const AE: char = '\u{1162}';
const EO: char = '\u{1165}';
const E: char = '\u{1166}';
const YEO: char = '\u{1167}';
const O: char = '\u{1169}';
const WA: char = '\u{116A}';
const WAE: char = '\u{116B}';
const OE: char = '\u{116C}';
const U: char = '\u{116E}';
const WEO: char = '\u{116F}';
const EU: char = '\u{1173}';
const I: char = '\u{1175}';

struct Contraction {
    /// Final vowel of the left morpheme.
    left: char,
    /// Vowel of the ᄋ-initial syllable that opens the right morpheme.
    right: char,
    /// Vowel that appears on the surface.
    fused: char,
    /// Lead the left morpheme's last syllable must have, if restricted.
    lead: Option<char>,
}

const CONTRACTIONS: &[Contraction] = &[
    // 가 + 아 -> 가
    Contraction { left: A, right: A, fused: A, lead: None },
    // 서 + 어 -> 서
    Contraction { left: EO, right: EO, fused: EO, lead: None },
    // 하 + 여 -> 해
    Contraction { left: A, right: YEO, fused: AE, lead: Some(HIEUH) },
    // 시 + 어 -> 셔
    Contraction { left: I, right: EO, fused: YEO, lead: None },
    // 보 + 아 -> 봐
    Contraction { left: O, right: A, fused: WA, lead: None },
    // 주 + 어 -> 줘
    Contraction { left: U, right: EO, fused: WEO, lead: None },
    // 되 + 어 -> 돼
    Contraction { left: OE, right: EO, fused: WAE, lead: None },
    // 쓰 + 어 -> 써, 바쁘 + 아 -> 바빠
    Contraction { left: EU, right: EO, fused: EO, lead: None },
    Contraction { left: EU, right: A, fused: A, lead: None },
    // 보내 + 어 -> 보내, 세 + 어 -> 세
    Contraction { left: AE, right: EO, fused: AE, lead: None },
    Contraction { left: E, right: EO, fused: E, lead: None },
];

fn contraction(left_lead: Option<char>, left: char, right: char) -> Option<char> {
    CONTRACTIONS
        .iter()
        .find(|c| {
            c.left == left && c.right == right && c.lead.is_none_or(|l| Some(l) == left_lead)
        })
        .map(|c| c.fused)
}

fn jamo_key(text: &str) -> Vec<char> {
    decompose_text(text).chars().map(from_compat_jamo).collect()
}

/// Vowel of a leading ᄋ+vowel syllable opening `jamo`.
fn opening_vowel(jamo: &[char]) -> Option<char> {
    match jamo {
        [SILENT_LEAD, v, ..] if is_vowel(*v) => Some(*v),
        _ => None,
    }
}

/// Final vowel of `jamo` with the lead of its syllable.
fn closing_vowel(jamo: &[char]) -> Option<(Option<char>, char)> {
    match jamo {
        [.., lead, v] if is_vowel(*v) => Some((Some(*lead), *v)),
        [v] if is_vowel(*v) => Some((None, *v)),
        _ => None,
    }
}

/// Splits `surface` into one fragment per canonical form, or returns `None`
/// when the forms cannot be mapped onto the surface.
pub fn align_fragments<S: AsRef<str>>(surface: &str, canonicals: &[S]) -> Option<Vec<String>> {
    if canonicals.is_empty() {
        return None;
    }
    let original: Vec<char> = decompose_text(surface).chars().collect();
    let key: Vec<char> = original.iter().map(|&c| from_compat_jamo(c)).collect();
    let forms: Vec<Vec<char>> = canonicals.iter().map(|c| jamo_key(c.as_ref())).collect();

    let mut fragments = Vec::with_capacity(forms.len());
    let mut pos = 0;
    // Jamo at the head of the current form already realized by the previous fragment.
    let mut absorbed = 0;
    for (i, form) in forms.iter().enumerate() {
        let mut rest = &form[absorbed..];
        if absorbed == 0 && !key[pos..].starts_with(rest) && i > 0 {
            // 가 + 았: the opening 아 merged into the previous fragment's vowel.
            let prev = &forms[i - 1];
            if let (Some((lead, left)), Some(right), Some(&realized)) =
                (closing_vowel(prev), opening_vowel(form), key[..pos].last())
            {
                if contraction(lead, left, right) == Some(left) && realized == left {
                    rest = &form[2..];
                }
            }
        }
        if rest.is_empty() {
            return None;
        }
        absorbed = 0;
        let remaining = &key[pos..];
        if !remaining.starts_with(rest) {
            // 하 + 였: the fused vowel differs from both inputs (했).
            let next = forms.get(i + 1)?;
            let (lead, left) = closing_vowel(rest)?;
            let fused = contraction(lead, left, opening_vowel(next)?)?;
            let stem = &rest[..rest.len() - 1];
            if !(remaining.starts_with(stem) && remaining.get(stem.len()) == Some(&fused)) {
                return None;
            }
            absorbed = 2;
        }
        let end = pos + rest.len();
        fragments.push(compose_text(&original[pos..end].iter().collect::<String>()));
        pos = end;
    }
    (pos == key.len()).then_some(fragments)
}

/// Builds an [`AnalyzedEojeol`], assigning every morpheme its surface
/// fragment. Alignment failures are not errors: the canonical forms stand
/// in and `alignment_failed` is set.
pub fn align_surface(
    surface: &str,
    morphemes: Vec<(String, PosTag)>,
    table: &ClassTable,
) -> Result<AnalyzedEojeol> {
    let canonicals: Vec<&str> = morphemes.iter().map(|(c, _)| c.as_str()).collect();
    let fragments = align_fragments(surface, &canonicals);
    let alignment_failed = fragments.is_none();
    let fragments = fragments.unwrap_or_else(|| canonicals.iter().map(|c| (*c).to_owned()).collect());
    let morphemes = morphemes
        .into_iter()
        .zip(fragments)
        .map(|((canonical, pos), surface)| {
            let mtype = table.classify(&pos)?;
            Ok(Morpheme {
                canonical,
                surface,
                pos,
                mtype,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AnalyzedEojeol {
        surface: surface.to_owned(),
        morphemes,
        alignment_failed,
    })
}
