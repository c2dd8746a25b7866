//! C ABI over [`morphtok::Tokenizer`].
//!
//! Every call returns an `MtStatus`. On failure a one-line message is kept
//! per thread and can be read with `mt_last_error_message`. Strings cross
//! the boundary as NUL-terminated UTF-8, and every string the library hands
//! out must be released with `mt_string_free`. A tokenizer handle is
//! immutable once built, so one handle may be shared between threads.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::str::FromStr;

use morphtok::{write_tokenized, ClassTable, Error, InputFormat, PipelineMode, Tokenizer, Vocabulary};

/// Result codes. Each core error class has its own code.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MtStatus {
    Ok = 0,
    NullArgument,
    InvalidUtf8,
    Io,
    InvalidMode,
    InvalidConfig,
    ModeInputMismatch,
    MalformedLine,
    UnknownTag,
    DuplicateEntry,
    EmptyEntry,
    MissingSpecials,
    DanglingContinuation,
    EmptyInput,
    EmptyCorpus,
    InvalidEncoding,
    NotHangulSyllable,
    IncompleteBlock,
    InvalidJamo,
    /// The token is not in the vocabulary.
    NotFound,
    /// A bug inside the library; the handle should not be reused.
    Panic,
}

impl MtStatus {
    fn of(e: &Error) -> Self {
        match e.class() {
            "Io" => MtStatus::Io,
            "InvalidMode" => MtStatus::InvalidMode,
            "InvalidConfig" => MtStatus::InvalidConfig,
            "ModeInputMismatch" => MtStatus::ModeInputMismatch,
            "MalformedLine" => MtStatus::MalformedLine,
            "UnknownTag" => MtStatus::UnknownTag,
            "DuplicateEntry" => MtStatus::DuplicateEntry,
            "EmptyEntry" => MtStatus::EmptyEntry,
            "MissingSpecials" => MtStatus::MissingSpecials,
            "DanglingContinuation" => MtStatus::DanglingContinuation,
            "EmptyInput" => MtStatus::EmptyInput,
            "EmptyCorpus" => MtStatus::EmptyCorpus,
            "InvalidEncoding" => MtStatus::InvalidEncoding,
            "NotHangulSyllable" => MtStatus::NotHangulSyllable,
            "IncompleteBlock" => MtStatus::IncompleteBlock,
            "InvalidJamo" => MtStatus::InvalidJamo,
            other => unreachable!("unmapped error class {other}"),
        }
    }

    fn name(self) -> &'static CStr {
        match self {
            MtStatus::Ok => c"Ok",
            MtStatus::NullArgument => c"NullArgument",
            MtStatus::InvalidUtf8 => c"InvalidUtf8",
            MtStatus::Io => c"Io",
            MtStatus::InvalidMode => c"InvalidMode",
            MtStatus::InvalidConfig => c"InvalidConfig",
            MtStatus::ModeInputMismatch => c"ModeInputMismatch",
            MtStatus::MalformedLine => c"MalformedLine",
            MtStatus::UnknownTag => c"UnknownTag",
            MtStatus::DuplicateEntry => c"DuplicateEntry",
            MtStatus::EmptyEntry => c"EmptyEntry",
            MtStatus::MissingSpecials => c"MissingSpecials",
            MtStatus::DanglingContinuation => c"DanglingContinuation",
            MtStatus::EmptyInput => c"EmptyInput",
            MtStatus::EmptyCorpus => c"EmptyCorpus",
            MtStatus::InvalidEncoding => c"InvalidEncoding",
            MtStatus::NotHangulSyllable => c"NotHangulSyllable",
            MtStatus::IncompleteBlock => c"IncompleteBlock",
            MtStatus::InvalidJamo => c"InvalidJamo",
            MtStatus::NotFound => c"NotFound",
            MtStatus::Panic => c"Panic",
        }
    }
}

/// Corpus-level rates in percent. `wser` is always present here because a
/// handle carries its vocabulary.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MtMetrics {
    pub oov_rate: f64,
    pub wsr: f64,
    pub wser: f64,
    pub wsr_sentence_mean: f64,
    pub wsr_sentence_std: f64,
    pub token_count: u64,
    pub sentence_count: u64,
}

/// Opaque tokenizer handle.
pub struct MtTokenizer {
    inner: Tokenizer,
}

struct Failure(MtStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(MtStatus::of(&e), e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> MtStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            MtStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(&format!("{}: {message}", status.name().to_str().unwrap()));
            status
        }
        Err(_) => {
            set_last_error("Panic: internal error");
            MtStatus::Panic
        }
    }
}

unsafe fn text_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(MtStatus::NullArgument, format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(MtStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn optional_text_arg<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        text_arg(p, what).map(Some)
    }
}

unsafe fn handle<'a>(p: *const MtTokenizer) -> Result<&'a Tokenizer, Failure> {
    p.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| Failure(MtStatus::NullArgument, "tokenizer is NULL".into()))
}

fn out_arg<T>(p: *mut T) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure(MtStatus::NullArgument, "output pointer is NULL".into()))
    } else {
        Ok(())
    }
}

fn into_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(MtStatus::InvalidUtf8, "output contains NUL".into()))
}

fn build(
    vocab_path: &str,
    mode: &str,
    input_format: Option<&str>,
    class_table_path: Option<&str>,
) -> Result<Tokenizer, Error> {
    let mode = PipelineMode::from_str(mode)?;
    let format = match input_format {
        Some(f) => InputFormat::from_str(f)?,
        None if mode.is_morphemic() => InputFormat::Tagged,
        None => InputFormat::Raw,
    };
    let table = match class_table_path {
        Some(path) => ClassTable::with_overrides(&fs::read_to_string(path)?)?,
        None => ClassTable::default(),
    };
    Tokenizer::new(Vocabulary::load(vocab_path)?, mode, format, table)
}

/// Builds a tokenizer from a vocabulary file and a mode name (`wp`, `wp-sd`,
/// `morwp`, `morwp-sd`, `morwp-md`).
///
/// `input_format` is `raw`, `tagged` or `demo`; NULL picks `tagged` for the
/// morpheme modes and `raw` otherwise. `class_table_path` may be NULL.
///
/// # Safety
/// String arguments must be NULL or valid NUL-terminated strings, and `out`
/// must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn mt_tokenizer_new(
    vocab_path: *const c_char,
    mode: *const c_char,
    input_format: *const c_char,
    class_table_path: *const c_char,
    out: *mut *mut MtTokenizer,
) -> MtStatus {
    guard(|| {
        out_arg(out)?;
        *out = ptr::null_mut();
        let tokenizer = build(
            text_arg(vocab_path, "vocab_path")?,
            text_arg(mode, "mode")?,
            optional_text_arg(input_format, "input_format")?,
            optional_text_arg(class_table_path, "class_table_path")?,
        )?;
        *out = Box::into_raw(Box::new(MtTokenizer { inner: tokenizer }));
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `tokenizer` must come from `mt_tokenizer_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mt_tokenizer_free(tokenizer: *mut MtTokenizer) {
    if !tokenizer.is_null() {
        drop(Box::from_raw(tokenizer));
    }
}

/// Tokenizes `text` (raw lines or analyzer output, per the handle's input
/// format). `*out` receives one line per sentence with space-separated
/// tokens, the same bytes the command-line `tokenize` writes.
///
/// # Safety
/// `tokenizer` must be a live handle, `text` a NUL-terminated string, and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mt_tokenize(
    tokenizer: *const MtTokenizer,
    text: *const c_char,
    out: *mut *mut c_char,
) -> MtStatus {
    guard(|| {
        out_arg(out)?;
        *out = ptr::null_mut();
        let tokenizer = handle(tokenizer)?;
        let sequences = tokenizer.tokenize(text_arg(text, "text")?)?;
        let mut buf = Vec::new();
        write_tokenized(&sequences, &mut buf)?;
        *out = into_c_string(String::from_utf8(buf).expect("tokens are UTF-8"))?;
        Ok(())
    })
}

/// Rebuilds text from one line of space-separated tokens.
///
/// # Safety
/// Same contract as `mt_tokenize`.
#[no_mangle]
pub unsafe extern "C" fn mt_detokenize(
    tokenizer: *const MtTokenizer,
    tokens: *const c_char,
    out: *mut *mut c_char,
) -> MtStatus {
    guard(|| {
        out_arg(out)?;
        *out = ptr::null_mut();
        let tokenizer = handle(tokenizer)?;
        let pieces: Vec<&str> = text_arg(tokens, "tokens")?.split_whitespace().collect();
        *out = into_c_string(tokenizer.detokenize(&pieces)?)?;
        Ok(())
    })
}

/// Tokenizes `text` and reports OOV rate, WSR and WSER.
///
/// # Safety
/// Same contract as `mt_tokenize`; `out` must point to an `MtMetrics`.
#[no_mangle]
pub unsafe extern "C" fn mt_metrics(
    tokenizer: *const MtTokenizer,
    text: *const c_char,
    out: *mut MtMetrics,
) -> MtStatus {
    guard(|| {
        out_arg(out)?;
        let tokenizer = handle(tokenizer)?;
        let r = tokenizer.metrics(text_arg(text, "text")?)?;
        *out = MtMetrics {
            oov_rate: r.oov_rate,
            wsr: r.wsr,
            wser: r.wser.unwrap_or(0.0),
            wsr_sentence_mean: r.wsr_sentence_mean,
            wsr_sentence_std: r.wsr_sentence_std,
            token_count: r.token_count,
            sentence_count: r.sentence_count,
        };
        Ok(())
    })
}

/// Looks up the id of one vocabulary entry.
///
/// # Safety
/// `tokenizer` must be a live handle, `token` a NUL-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mt_token_id(
    tokenizer: *const MtTokenizer,
    token: *const c_char,
    out: *mut u32,
) -> MtStatus {
    guard(|| {
        out_arg(out)?;
        let tokenizer = handle(tokenizer)?;
        let token = text_arg(token, "token")?;
        *out = tokenizer
            .vocab()
            .id(token)
            .ok_or_else(|| Failure(MtStatus::NotFound, format!("`{token}` is not in the vocabulary")))?;
        Ok(())
    })
}

/// Number of vocabulary entries, specials included. 0 for NULL.
///
/// # Safety
/// `tokenizer` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mt_vocab_size(tokenizer: *const MtTokenizer) -> usize {
    tokenizer.as_ref().map_or(0, |h| h.inner.vocab().len())
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn mt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Static name of a status code, e.g. `ModeInputMismatch`.
#[no_mangle]
pub extern "C" fn mt_status_name(status: MtStatus) -> *const c_char {
    status.name().as_ptr()
}
