//! C ABI over the parsewords library.
//!
//! Every fallible function returns a [`PwStatus`] and writes its result
//! through an out pointer. On failure [`pw_last_error`] describes the error
//! for the calling thread. Handles and strings returned by the library are
//! released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use parsewords::catalog::resolve_tree;
use parsewords::closed_forms::a_of;
use parsewords::reductions::splice_solve;
use parsewords::{count_parse_words, parse, parse_words, Error, Tree, TreePair, Word};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PwStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidWord = 4,
    LengthMismatch = 5,
    BadParams = 6,
    NotFound = 7,
    IndexOutOfRange = 8,
    Panic = 9,
    Other = 10,
}

/// A binary tree.
pub struct PwTree(Tree);

/// An ordered list of canonical parse words.
pub struct PwWords(Vec<CString>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

struct Failure(PwStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => PwStatus::ParseError,
            Error::InvalidWord(_) => PwStatus::InvalidWord,
            Error::LengthMismatch { .. } => PwStatus::LengthMismatch,
            Error::IndexOutOfRange { .. } => PwStatus::IndexOutOfRange,
            Error::BadParams(_) | Error::TooShort { .. } => PwStatus::BadParams,
            _ => PwStatus::Other,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: PwStatus, message: &str) -> Failure {
    Failure(status, message.to_owned())
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            PwStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PwStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(PwStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(PwStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn tree<'a>(p: *const PwTree) -> Result<&'a Tree, Failure> {
    p.as_ref()
        .map(|t| &t.0)
        .ok_or_else(|| fail(PwStatus::NullArgument, "null tree handle"))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| fail(PwStatus::NullArgument, "null output pointer"))
}

unsafe fn pair(t1: *const PwTree, t2: *const PwTree) -> Result<TreePair, Failure> {
    Ok(TreePair::new(tree(t1)?.clone(), tree(t2)?.clone())?)
}

fn owned(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn pw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a tree from a literal such as `((**)*)`, a path word `path:lrl`,
/// a family `left-comb:5` or an index `7-64`.
///
/// # Safety
/// `text_in` must be a NUL-terminated string and `tree_out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pw_tree_parse(text_in: *const c_char, tree_out: *mut *mut PwTree) -> PwStatus {
    guard(|| {
        let slot = out(tree_out)?;
        let t = resolve_tree(text(text_in)?)?;
        *slot = Box::into_raw(Box::new(PwTree(t)));
        Ok(())
    })
}

/// Releases a tree. Null is ignored.
///
/// # Safety
/// `t` must come from [`pw_tree_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pw_tree_free(t: *mut PwTree) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live tree handle and `count_out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pw_tree_leaf_count(t: *const PwTree, count_out: *mut usize) -> PwStatus {
    guard(|| {
        *out(count_out)? = tree(t)?.leaf_count();
        Ok(())
    })
}

/// Writes the literal form of the tree. Free the string with [`pw_string_free`].
///
/// # Safety
/// `t` must be a live tree handle and `text_out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pw_tree_to_string(t: *const PwTree, text_out: *mut *mut c_char) -> PwStatus {
    guard(|| {
        let slot = out(text_out)?;
        *slot = owned(tree(t)?.to_string());
        Ok(())
    })
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `word` with the tree and writes the labeled tree, e.g. `2(01)`.
/// Returns `NotFound` when the word is not parsed.
///
/// # Safety
/// `t` must be a live tree handle, `word` a NUL-terminated string and
/// `labeling_out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pw_parse(t: *const PwTree, word: *const c_char, labeling_out: *mut *mut c_char) -> PwStatus {
    guard(|| {
        let slot = out(labeling_out)?;
        let t = tree(t)?;
        let w: Word = text(word)?.parse()?;
        let lab = parse(t, &w)?.ok_or_else(|| fail(PwStatus::NotFound, "the tree does not parse the word"))?;
        *slot = owned(lab.render(t));
        Ok(())
    })
}

/// Number of parse-word classes shared by two trees of the same size.
///
/// # Safety
/// `t1` and `t2` must be live tree handles and `count_out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pw_count_parse_words(t1: *const PwTree, t2: *const PwTree, count_out: *mut u64) -> PwStatus {
    guard(|| {
        let slot = out(count_out)?;
        *slot = count_parse_words(&pair(t1, t2)?);
        Ok(())
    })
}

/// Canonical parse words shared by two trees, in increasing order.
///
/// # Safety
/// `t1` and `t2` must be live tree handles and `words_out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pw_parse_words(
    t1: *const PwTree,
    t2: *const PwTree,
    words_out: *mut *mut PwWords,
) -> PwStatus {
    guard(|| {
        let slot = out(words_out)?;
        let words = parse_words(&pair(t1, t2)?)
            .classes()
            .iter()
            .map(|c| CString::new(c.canonical().to_string()).unwrap_or_default())
            .collect();
        *slot = Box::into_raw(Box::new(PwWords(words)));
        Ok(())
    })
}

/// Number of words in the list; zero for null.
///
/// # Safety
/// `words` must be null or a live list handle.
#[no_mangle]
pub unsafe extern "C" fn pw_words_len(words: *const PwWords) -> usize {
    words.as_ref().map_or(0, |w| w.0.len())
}

/// Word at `index`, borrowed from the list; null when out of range.
///
/// # Safety
/// `words` must be null or a live list handle.
#[no_mangle]
pub unsafe extern "C" fn pw_words_get(words: *const PwWords, index: usize) -> *const c_char {
    words
        .as_ref()
        .and_then(|w| w.0.get(index))
        .map_or(ptr::null(), |s| s.as_ptr())
}

/// Releases a word list. Null is ignored.
///
/// # Safety
/// `words` must come from [`pw_parse_words`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pw_words_free(words: *mut PwWords) {
    if !words.is_null() {
        drop(Box::from_raw(words));
    }
}

/// One common parse word found by the reduction solver. Returns `NotFound`
/// when the solver gives up.
///
/// # Safety
/// `t1` and `t2` must be live tree handles and `word_out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pw_splice_solve(t1: *const PwTree, t2: *const PwTree, word_out: *mut *mut c_char) -> PwStatus {
    guard(|| {
        let slot = out(word_out)?;
        let w = splice_solve(&pair(t1, t2)?).ok_or_else(|| fail(PwStatus::NotFound, "no word found"))?;
        *slot = owned(w.to_string());
        Ok(())
    })
}

/// `a(m, k)`, the class count of `LeftTurn(m, k + 1)` with `RightTurn(k, m + 1)`.
///
/// # Safety
/// `count_out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pw_a_of(m: u32, k: u32, count_out: *mut u64) -> PwStatus {
    guard(|| {
        let slot = out(count_out)?;
        *slot = a_of(m, k)?;
        Ok(())
    })
}
