//! Hangul syllable <-> conjoining jamo conversion.
//!
//! Decomposition follows the arithmetic of Unicode canonical decomposition
//! for precomposed syllables (U+AC00..=U+D7A3): a syllable index splits into
//! a leading consonant, a vowel and an optional trailing consonant, each
//! stored as a conjoining jamo (U+1100.., U+1161.., U+11A8..). Complex
//! trailing consonants such as ᆻ or ᆭ are single code points and are never
//! split further.
//!
//! Conjoining jamo compose back into syllables losslessly. Compatibility
//! jamo (U+3131..) are only used for display, see [`display_compat`].

use std::fmt;

use thiserror::Error;

pub const SYLLABLE_BASE: u32 = 0xAC00;
pub const LEAD_BASE: u32 = 0x1100;
pub const VOWEL_BASE: u32 = 0x1161;
/// One below the first trailing consonant; trail index 0 means "no trail".
pub const TRAIL_BASE: u32 = 0x11A7;

pub const LEAD_COUNT: u32 = 19;
pub const VOWEL_COUNT: u32 = 21;
pub const TRAIL_COUNT: u32 = 28;
const BLOCK_COUNT: u32 = VOWEL_COUNT * TRAIL_COUNT;
pub const SYLLABLE_COUNT: u32 = LEAD_COUNT * BLOCK_COUNT;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum HangulError {
    #[error("U+{:04X} is not a precomposed Hangul syllable", *.0 as u32)]
    NotHangulSyllable(char),
    #[error("jamo sequence has a leading consonant without a vowel")]
    IncompleteBlock,
    #[error("U+{:04X} is not valid at this position of a jamo sequence", *.0 as u32)]
    InvalidJamo(char),
}

impl HangulError {
    pub fn class(&self) -> &'static str {
        match self {
            HangulError::NotHangulSyllable(_) => "NotHangulSyllable",
            HangulError::IncompleteBlock => "IncompleteBlock",
            HangulError::InvalidJamo(_) => "InvalidJamo",
        }
    }
}

/// A precomposed Hangul syllable in U+AC00..=U+D7A3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SyllableBlock(char);

impl SyllableBlock {
    pub fn new(c: char) -> Result<Self, HangulError> {
        if is_syllable(c) {
            Ok(SyllableBlock(c))
        } else {
            Err(HangulError::NotHangulSyllable(c))
        }
    }

    pub fn as_char(self) -> char {
        self.0
    }

    pub fn decompose(self) -> JamoSequence {
        let index = self.0 as u32 - SYLLABLE_BASE;
        let lead = LEAD_BASE + index / BLOCK_COUNT;
        let vowel = VOWEL_BASE + (index % BLOCK_COUNT) / TRAIL_COUNT;
        let trail = index % TRAIL_COUNT;
        JamoSequence {
            lead: from_u32(lead),
            vowel: from_u32(vowel),
            trail: (trail != 0).then(|| from_u32(TRAIL_BASE + trail)),
        }
    }
}

impl TryFrom<char> for SyllableBlock {
    type Error = HangulError;

    fn try_from(c: char) -> Result<Self, Self::Error> {
        SyllableBlock::new(c)
    }
}

impl fmt::Display for SyllableBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Conjoining-jamo spelling of one syllable: lead, vowel, optional trail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JamoSequence {
    lead: char,
    vowel: char,
    trail: Option<char>,
}

impl JamoSequence {
    /// Validates a 2- or 3-element conjoining jamo slice.
    pub fn from_chars(jamo: &[char]) -> Result<Self, HangulError> {
        let mut it = jamo.iter().copied();
        let lead = it.next().ok_or(HangulError::IncompleteBlock)?;
        if !is_lead(lead) {
            return Err(HangulError::InvalidJamo(lead));
        }
        let vowel = it.next().ok_or(HangulError::IncompleteBlock)?;
        if !is_vowel(vowel) {
            return Err(HangulError::InvalidJamo(vowel));
        }
        let trail = match it.next() {
            Some(t) if is_trail(t) => Some(t),
            Some(t) => return Err(HangulError::InvalidJamo(t)),
            None => None,
        };
        if let Some(extra) = it.next() {
            return Err(HangulError::InvalidJamo(extra));
        }
        Ok(JamoSequence { lead, vowel, trail })
    }

    pub fn lead(&self) -> char {
        self.lead
    }

    pub fn vowel(&self) -> char {
        self.vowel
    }

    pub fn trail(&self) -> Option<char> {
        self.trail
    }

    pub fn len(&self) -> usize {
        2 + usize::from(self.trail.is_some())
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn chars(&self) -> impl Iterator<Item = char> {
        [Some(self.lead), Some(self.vowel), self.trail]
            .into_iter()
            .flatten()
    }

    pub fn compose(&self) -> SyllableBlock {
        let l = self.lead as u32 - LEAD_BASE;
        let v = self.vowel as u32 - VOWEL_BASE;
        let t = self.trail.map_or(0, |t| t as u32 - TRAIL_BASE);
        SyllableBlock(from_u32(SYLLABLE_BASE + (l * VOWEL_COUNT + v) * TRAIL_COUNT + t))
    }
}

fn from_u32(cp: u32) -> char {
    // Only called with values derived from the Hangul ranges above.
    char::from_u32(cp).expect("Hangul arithmetic stays within valid scalars")
}

pub fn decompose_syllable(c: char) -> Result<JamoSequence, HangulError> {
    SyllableBlock::new(c).map(SyllableBlock::decompose)
}

pub fn compose_jamo(jamo: &[char]) -> Result<SyllableBlock, HangulError> {
    JamoSequence::from_chars(jamo).map(|j| j.compose())
}

/// Replaces every precomposed syllable with its conjoining jamo. Everything
/// else is copied through unchanged.
pub fn decompose_text(text: &str) -> String {
    let mut out = String::with_capacity(text.len() * 2);
    for c in text.chars() {
        match decompose_syllable(c) {
            Ok(jamo) => out.extend(jamo.chars()),
            Err(_) => out.push(c),
        }
    }
    out
}

/// Canonical composition restricted to Hangul: every lead+vowel(+trail) run
/// becomes a syllable, including a syllable followed by a lone trail (가 +
/// ᆻ gives 갔). Stray jamo that cannot start or extend a block are kept.
pub fn compose_text(text: &str) -> String {
    let chars: Vec<char> = decompose_text(text).chars().collect();
    let mut out = String::with_capacity(text.len());
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if is_lead(c) && chars.get(i + 1).copied().is_some_and(is_vowel) {
            let take = match chars.get(i + 2) {
                Some(&t) if is_trail(t) => 3,
                _ => 2,
            };
            // Validated by the range checks above.
            let block = compose_jamo(&chars[i..i + take]).expect("valid jamo run");
            out.push(block.as_char());
            i += take;
        } else {
            out.push(c);
            i += 1;
        }
    }
    out
}

pub fn is_syllable(c: char) -> bool {
    (SYLLABLE_BASE..SYLLABLE_BASE + SYLLABLE_COUNT).contains(&(c as u32))
}

pub fn is_lead(c: char) -> bool {
    (LEAD_BASE..LEAD_BASE + LEAD_COUNT).contains(&(c as u32))
}

pub fn is_vowel(c: char) -> bool {
    (VOWEL_BASE..VOWEL_BASE + VOWEL_COUNT).contains(&(c as u32))
}

pub fn is_trail(c: char) -> bool {
    (TRAIL_BASE + 1..TRAIL_BASE + TRAIL_COUNT).contains(&(c as u32))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharClass {
    HangulSyllable,
    HangulJamo,
    Ascii,
    Other,
}

pub fn classify_char(c: char) -> CharClass {
    match c as u32 {
        0xAC00..=0xD7A3 => CharClass::HangulSyllable,
        // conjoining jamo, compatibility jamo, extended-A and extended-B
        0x1100..=0x11FF | 0x3131..=0x318E | 0xA960..=0xA97F | 0xD7B0..=0xD7FF => {
            CharClass::HangulJamo
        }
        0x00..=0x7F => CharClass::Ascii,
        _ => CharClass::Other,
    }
}

// Compatibility jamo for each conjoining lead (U+1100..=U+1112).
const LEAD_COMPAT: [u32; 19] = [
    0x3131, 0x3132, 0x3134, 0x3137, 0x3138, 0x3139, 0x3141, 0x3142, 0x3143, 0x3145, 0x3146,
    0x3147, 0x3148, 0x3149, 0x314A, 0x314B, 0x314C, 0x314D, 0x314E,
];

// Compatibility jamo for each conjoining trail (U+11A8..=U+11C2).
const TRAIL_COMPAT: [u32; 27] = [
    0x3131, 0x3132, 0x3133, 0x3134, 0x3135, 0x3136, 0x3137, 0x3139, 0x313A, 0x313B, 0x313C,
    0x313D, 0x313E, 0x313F, 0x3140, 0x3141, 0x3142, 0x3144, 0x3145, 0x3146, 0x3147, 0x3148,
    0x314A, 0x314B, 0x314C, 0x314D, 0x314E,
];

const COMPAT_VOWEL_BASE: u32 = 0x314F;

/// Maps a modern conjoining jamo to its compatibility (display) form.
pub fn to_compat_jamo(c: char) -> char {
    let cp = c as u32;
    let mapped = if is_lead(c) {
        LEAD_COMPAT[(cp - LEAD_BASE) as usize]
    } else if is_vowel(c) {
        COMPAT_VOWEL_BASE + (cp - VOWEL_BASE)
    } else if is_trail(c) {
        TRAIL_COMPAT[(cp - TRAIL_BASE - 1) as usize]
    } else {
        return c;
    };
    from_u32(mapped)
}

/// Maps a compatibility jamo to a conjoining one. Consonants become
/// trailing jamo when a trailing form exists (ㄸ, ㅃ and ㅉ only exist as
/// leads), since a consonant standing alone inside a word is nearly always
/// a syllable coda.
pub fn from_compat_jamo(c: char) -> char {
    let cp = c as u32;
    if (COMPAT_VOWEL_BASE..COMPAT_VOWEL_BASE + VOWEL_COUNT).contains(&cp) {
        return from_u32(VOWEL_BASE + cp - COMPAT_VOWEL_BASE);
    }
    if let Some(i) = TRAIL_COMPAT.iter().position(|&t| t == cp) {
        return from_u32(TRAIL_BASE + 1 + i as u32);
    }
    if let Some(i) = LEAD_COMPAT.iter().position(|&l| l == cp) {
        return from_u32(LEAD_BASE + i as u32);
    }
    c
}

/// Human-readable rendering: conjoining jamo become compatibility jamo so
/// that decomposed tokens print as ㄴㅏ rather than as a recombined block.
pub fn display_compat(text: &str) -> String {
    text.chars().map(to_compat_jamo).collect()
}
