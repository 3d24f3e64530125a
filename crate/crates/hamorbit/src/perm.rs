//! Permutation strings over the labels `{0, …, n-1}` and exhaustive
//! iteration over all of them, optionally restricted to a fixed prefix.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default bound on exhaustive enumeration. 12! is already ~4.8e8 strings;
/// anything larger is an accidental multi-hour scan, not a query.
pub const DEFAULT_CAP: usize = 12;

/// A string of length `n` whose entries are a permutation of `{0, …, n-1}`.
///
/// Labels are stored as bytes, which bounds `n` at 256; exhaustive scans
/// stop far earlier (see [`DEFAULT_CAP`]).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermString {
    entries: Vec<u8>,
}

impl PermString {
    /// Validates that `entries` is a permutation of `{0, …, n-1}`.
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        validate(&entries)?;
        Ok(PermString { entries })
    }

    pub fn from_slice(entries: &[u8]) -> Result<Self> {
        Self::new(entries.to_vec())
    }

    /// The identity string `(0 1 … n-1)`.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > 256 {
            return Err(Error::OutOfRange {
                value: n as u64 - 1,
                n,
            });
        }
        Ok(PermString {
            entries: (0..n as u16).map(|v| v as u8).collect(),
        })
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u8>) -> Self {
        debug_assert!(validate(&entries).is_ok());
        PermString { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }
}

/// Checks the membership condition for X_n: every value in range, no repeats.
fn validate(entries: &[u8]) -> Result<()> {
    let n = entries.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut seen = [false; 256];
    for &v in entries {
        if v as usize >= n {
            return Err(Error::OutOfRange {
                value: v as u64,
                n,
            });
        }
        if seen[v as usize] {
            return Err(Error::DuplicateLabel { value: v });
        }
        seen[v as usize] = true;
    }
    Ok(())
}

impl fmt::Display for PermString {
    /// Compact digit form for `n <= 10` (`0213`), comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 10 {
            for &v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for PermString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermString({self})")
    }
}

impl FromStr for PermString {
    type Err = Error;

    /// Accepts either the compact digit form `0213` or `0,2,1,3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Unparseable {
            text: s.to_string(),
        };
        let values: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad())?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        PermString::new(values)
    }
}

/// All of X_n in lexicographic order. Errors with [`Error::CapExceeded`]
/// when `n` is above `cap`.
pub fn all_strings_capped(n: usize, cap: usize) -> Result<StringIter> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    StringIter::new(n, &[])
}

/// All of X_n in lexicographic order, capped at [`DEFAULT_CAP`].
pub fn all_strings(n: usize) -> Result<StringIter> {
    all_strings_capped(n, DEFAULT_CAP)
}

/// The elements of X_n that begin with `prefix`, in lexicographic order.
/// The streams over all single-symbol prefixes partition X_n.
pub fn strings_with_prefix(n: usize, prefix: &[u8]) -> Result<StringIter> {
    if n == 0 {
        return Err(Error::Empty);
    }
    StringIter::new(n, prefix)
}

/// Lexicographic iterator over the strings of X_n with a fixed prefix.
pub struct StringIter {
    buf: Vec<u8>,
    fixed: usize,
    exhausted: bool,
}

impl StringIter {
    fn new(n: usize, prefix: &[u8]) -> Result<Self> {
        if n > 256 {
            return Err(Error::OutOfRange {
                value: n as u64 - 1,
                n,
            });
        }
        let mut seen = [false; 256];
        for &v in prefix {
            if v as usize >= n {
                return Err(Error::OutOfRange {
                    value: v as u64,
                    n,
                });
            }
            if seen[v as usize] {
                return Err(Error::DuplicateLabel { value: v });
            }
            seen[v as usize] = true;
        }
        let mut buf = prefix.to_vec();
        // Smallest completion: the unused labels in increasing order.
        for v in 0..n {
            if !seen[v] {
                buf.push(v as u8);
            }
        }
        Ok(StringIter {
            buf,
            fixed: prefix.len(),
            exhausted: false,
        })
    }
}

impl Iterator for StringIter {
    type Item = PermString;

    fn next(&mut self) -> Option<PermString> {
        if self.exhausted {
            return None;
        }
        let item = PermString::from_vec_unchecked(self.buf.clone());
        self.exhausted = !next_permutation(&mut self.buf[self.fixed..]);
        Some(item)
    }
}

/// Advances `s` to its lexicographic successor in place. Returns false when
/// `s` was already the last arrangement.
pub(crate) fn next_permutation(s: &mut [u8]) -> bool {
    if s.len() < 2 {
        return false;
    }
    let mut i = s.len() - 1;
    while i > 0 && s[i - 1] >= s[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = s.len() - 1;
    while s[j] <= s[i - 1] {
        j -= 1;
    }
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

/// Visits every string with the given prefix without allocating per string.
/// The prefix must already be valid.
pub(crate) fn for_each_with_prefix<F: FnMut(&[u8])>(n: usize, prefix: &[u8], mut f: F) {
    let mut iter = match StringIter::new(n, prefix) {
        Ok(it) => it,
        Err(_) => return,
    };
    loop {
        f(&iter.buf);
        if !next_permutation(&mut iter.buf[iter.fixed..]) {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_accepts_identity() {
        let p = PermString::new(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(p.to_string(), "0123");
    }

    #[test]
    fn validate_rejects_duplicates() {
        assert_eq!(
            PermString::new(vec![0, 1, 1]),
            Err(Error::DuplicateLabel { value: 1 })
        );
    }

    #[test]
    fn validate_rejects_out_of_range() {
        assert_eq!(
            PermString::new(vec![0, 4, 1]),
            Err(Error::OutOfRange { value: 4, n: 3 })
        );
    }

    #[test]
    fn validate_rejects_empty() {
        assert_eq!(PermString::new(vec![]), Err(Error::Empty));
    }

    #[test]
    fn all_strings_n3() {
        let all: Vec<PermString> = all_strings(3).unwrap().collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all.first().unwrap().to_string(), "012");
        assert_eq!(all.last().unwrap().to_string(), "210");
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted, "yield order must be lexicographic");
    }

    #[test]
    fn all_strings_small_counts() {
        assert_eq!(all_strings(1).unwrap().count(), 1);
        assert_eq!(all_strings(4).unwrap().count(), 24);
        assert_eq!(all_strings(6).unwrap().count(), 720);
    }

    #[test]
    fn all_strings_cap() {
        assert!(matches!(
            all_strings(13),
            Err(Error::CapExceeded { n: 13, cap: 12 })
        ));
        assert!(all_strings_capped(4, 3).is_err());
        assert!(all_strings_capped(13, 13).is_ok());
    }

    #[test]
    fn prefix_stream_n3() {
        let with0: Vec<String> = strings_with_prefix(3, &[0])
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(with0, vec!["012", "021"]);
        assert_eq!(strings_with_prefix(3, &[]).unwrap().count(), 6);
        assert_eq!(
            strings_with_prefix(3, &[2, 2]).err(),
            Some(Error::DuplicateLabel { value: 2 })
        );
    }

    #[test]
    fn prefix_streams_partition() {
        for n in 1..=6 {
            let mut merged: Vec<PermString> = Vec::new();
            for first in 0..n as u8 {
                merged.extend(strings_with_prefix(n, &[first]).unwrap());
            }
            let all: Vec<PermString> = all_strings(n).unwrap().collect();
            assert_eq!(merged, all, "prefix streams must tile X_{n}");
        }
    }

    #[test]
    fn full_prefix_yields_single_string() {
        let only: Vec<PermString> = strings_with_prefix(3, &[2, 0, 1]).unwrap().collect();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].to_string(), "201");
    }

    #[test]
    fn every_yielded_string_validates() {
        for p in all_strings(5).unwrap() {
            assert!(PermString::new(p.entries().to_vec()).is_ok());
        }
    }

    #[test]
    fn parse_round_trip() {
        let p: PermString = "0213".parse().unwrap();
        assert_eq!(p.entries(), &[0, 2, 1, 3]);
        let q: PermString = "0,2,1,3".parse().unwrap();
        assert_eq!(p, q);
        assert!("031".parse::<PermString>().is_err());
    }
}
