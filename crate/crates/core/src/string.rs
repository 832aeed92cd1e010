//! q-ary strings, ordered lists of them, and the list algebra used by every
//! construction: reversal, prefixing, concatenation, traces and relabeling.

use std::fmt;
use std::slice;

use crate::error::{Error, Result};

pub type Symbol = u32;

/// A fixed-length string over the alphabet `{0, .., q-1}`.
///
/// The empty string is a valid value of every alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QaryString {
    symbols: Vec<Symbol>,
    q: u32,
}

impl QaryString {
    pub fn new(symbols: Vec<Symbol>, q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q));
        }
        if let Some(&symbol) = symbols.iter().find(|&&s| s >= q) {
            return Err(Error::SymbolOutOfRange { symbol, q });
        }
        Ok(QaryString { symbols, q })
    }

    /// Callers guarantee `q >= 2` and every symbol below `q`.
    pub(crate) fn from_raw(symbols: Vec<Symbol>, q: u32) -> Self {
        debug_assert!(q >= 2 && symbols.iter().all(|&s| s < q));
        QaryString { symbols, q }
    }

    pub fn empty(q: u32) -> Result<Self> {
        Self::new(Vec::new(), q)
    }

    pub fn zeros(n: usize, q: u32) -> Result<Self> {
        Self::new(vec![0; n], q)
    }

    /// Parses a string of decimal digits such as `"0200"`.
    pub fn from_digits(text: &str, q: u32) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c.to_digit(10) {
                Some(d) => symbols.push(d),
                None => {
                    return Err(Error::SymbolOutOfRange {
                        symbol: c as u32,
                        q,
                    })
                }
            }
        }
        Self::new(symbols, q)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.symbols.iter().all(|&s| s <= 1)
    }

    /// Number of nonzero symbols.
    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    /// True if the string contains `k` consecutive copies of `symbol`.
    pub fn contains_run(&self, symbol: Symbol, k: usize) -> bool {
        let mut run = 0;
        for &s in &self.symbols {
            if s == symbol {
                run += 1;
                if run >= k {
                    return true;
                }
            } else {
                run = 0;
            }
        }
        false
    }

    /// Same symbols, reinterpreted over a larger (or equal) alphabet.
    pub fn widen(&self, q: u32) -> Result<Self> {
        Self::new(self.symbols.clone(), q)
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }
}

impl fmt::Display for QaryString {
    /// Decimal digits when every symbol fits in one digit, comma separated
    /// otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q <= 10 {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (i, s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

/// An ordered list of equal-length strings over a common alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeList {
    entries: Vec<QaryString>,
    q: u32,
    n: usize,
}

impl CodeList {
    pub fn new(entries: Vec<QaryString>, q: u32, n: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q));
        }
        for e in &entries {
            if e.q != q {
                return Err(Error::AlphabetMismatch {
                    left: q,
                    right: e.q,
                });
            }
            if e.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: e.len(),
                });
            }
        }
        Ok(CodeList { entries, q, n })
    }

    pub(crate) fn from_raw(entries: Vec<QaryString>, q: u32, n: usize) -> Self {
        debug_assert!(entries.iter().all(|e| e.q == q && e.len() == n));
        CodeList { entries, q, n }
    }

    /// The one-entry list `(s)`.
    pub fn singleton(s: QaryString) -> Self {
        let (q, n) = (s.q, s.len());
        CodeList {
            entries: vec![s],
            q,
            n,
        }
    }

    /// Builds a list from digit strings, e.g. `["100", "200"]`. All entries
    /// must have the same length; an empty slice yields the empty list of
    /// length 0.
    pub fn from_digits(q: u32, items: &[&str]) -> Result<Self> {
        let entries = items
            .iter()
            .map(|t| QaryString::from_digits(t, q))
            .collect::<Result<Vec<_>>>()?;
        let n = entries.first().map_or(0, QaryString::len);
        Self::new(entries, q, n)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Common length of the entries.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first(&self) -> Option<&QaryString> {
        self.entries.first()
    }

    pub fn last(&self) -> Option<&QaryString> {
        self.entries.last()
    }

    pub fn entries(&self) -> &[QaryString] {
        &self.entries
    }

    pub fn iter(&self) -> slice::Iter<'_, QaryString> {
        self.entries.iter()
    }

    pub fn into_entries(self) -> Vec<QaryString> {
        self.entries
    }

    /// Renders every entry with [`QaryString`]'s `Display`.
    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(ToString::to_string).collect()
    }
}

impl<'a> IntoIterator for &'a CodeList {
    type Item = &'a QaryString;
    type IntoIter = slice::Iter<'a, QaryString>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

impl IntoIterator for CodeList {
    type Item = QaryString;
    type IntoIter = std::vec::IntoIter<QaryString>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.into_iter()
    }
}

/// Number of positions at which `a` and `b` differ.
pub fn hamming_distance(a: &QaryString, b: &QaryString) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(hamming_unchecked(a.symbols(), b.symbols()))
}

pub(crate) fn hamming_unchecked(a: &[Symbol], b: &[Symbol]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn reverse_list(list: &CodeList) -> CodeList {
    let mut entries = list.entries.clone();
    entries.reverse();
    CodeList {
        entries,
        q: list.q,
        n: list.n,
    }
}

/// `u·L`: prepends `u` to every entry of `list`.
pub fn prepend(u: &QaryString, list: &CodeList) -> Result<CodeList> {
    if let Some(&symbol) = u.symbols().iter().find(|&&s| s >= list.q) {
        return Err(Error::SymbolOutOfRange { symbol, q: list.q });
    }
    let entries = list
        .iter()
        .map(|e| {
            let mut symbols = Vec::with_capacity(u.len() + e.len());
            symbols.extend_from_slice(u.symbols());
            symbols.extend_from_slice(e.symbols());
            QaryString::from_raw(symbols, list.q)
        })
        .collect();
    Ok(CodeList {
        entries,
        q: list.q,
        n: u.len() + list.n,
    })
}

/// `L1∘L2`.
pub fn concat(first: &CodeList, second: &CodeList) -> Result<CodeList> {
    if first.q != second.q {
        return Err(Error::AlphabetMismatch {
            left: first.q,
            right: second.q,
        });
    }
    if first.n != second.n {
        return Err(Error::LengthMismatch {
            left: first.n,
            right: second.n,
        });
    }
    let mut entries = Vec::with_capacity(first.len() + second.len());
    entries.extend_from_slice(&first.entries);
    entries.extend_from_slice(&second.entries);
    Ok(CodeList {
        entries,
        q: first.q,
        n: first.n,
    })
}

/// Binary string with a 0 exactly where `s` has a 0.
pub fn trace(s: &QaryString) -> QaryString {
    trace_about(s, 0)
}

/// Binary string with a 0 exactly where `s` holds `symbol`. With
/// `symbol = 0` this is the ordinary trace.
pub fn trace_about(s: &QaryString, symbol: Symbol) -> QaryString {
    let symbols = s
        .symbols()
        .iter()
        .map(|&x| Symbol::from(x != symbol))
        .collect();
    QaryString::from_raw(symbols, 2)
}

/// Exchanges the symbols `0` and `i` everywhere in `s`.
pub fn relabel_swap(s: &QaryString, i: Symbol) -> Result<QaryString> {
    if i >= s.q {
        return Err(Error::SymbolOutOfRange { symbol: i, q: s.q });
    }
    Ok(swap_unchecked(s, i))
}

pub(crate) fn swap_unchecked(s: &QaryString, i: Symbol) -> QaryString {
    let symbols = s
        .symbols()
        .iter()
        .map(|&x| match x {
            0 => i,
            x if x == i => 0,
            x => x,
        })
        .collect();
    QaryString::from_raw(symbols, s.q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str, q: u32) -> QaryString {
        QaryString::from_digits(text, q).unwrap()
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming_distance(&s("2100", 3), &s("0200", 3)).unwrap(), 2);
        assert_eq!(hamming_distance(&s("1100", 2), &s("0100", 2)).unwrap(), 1);
        assert_eq!(hamming_distance(&s("0121", 3), &s("0121", 3)).unwrap(), 0);
        assert_eq!(
            hamming_distance(&s("01", 2), &s("011", 2)),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn new_rejects_bad_symbols() {
        assert_eq!(
            QaryString::new(vec![0, 3], 3),
            Err(Error::SymbolOutOfRange { symbol: 3, q: 3 })
        );
        assert_eq!(QaryString::new(vec![], 1), Err(Error::InvalidAlphabet(1)));
        assert!(QaryString::empty(2).unwrap().is_empty());
    }

    #[test]
    fn reverse_examples() {
        let l = CodeList::from_digits(3, &["100", "200"]).unwrap();
        assert_eq!(reverse_list(&l).to_strings(), ["200", "100"]);
        let empty = CodeList::new(vec![], 3, 2).unwrap();
        assert_eq!(reverse_list(&empty), empty);
        assert_eq!(reverse_list(&l).first(), l.last());
    }

    #[test]
    fn prepend_examples() {
        let l = CodeList::from_digits(2, &["1", "0"]).unwrap();
        assert_eq!(prepend(&s("0", 2), &l).unwrap().to_strings(), ["01", "00"]);

        let lambda = CodeList::singleton(QaryString::empty(2).unwrap());
        let block = prepend(&s("001", 2), &lambda).unwrap();
        assert_eq!(block.to_strings(), ["001"]);
        assert_eq!(block.n(), 3);

        assert_eq!(prepend(&QaryString::empty(2).unwrap(), &l).unwrap(), l);
        assert!(prepend(&s("2", 3), &l).is_err());
    }

    #[test]
    fn concat_examples() {
        let a = CodeList::from_digits(2, &["10", "11"]).unwrap();
        let b = CodeList::from_digits(2, &["01"]).unwrap();
        assert_eq!(concat(&a, &b).unwrap().to_strings(), ["10", "11", "01"]);
        let empty = CodeList::new(vec![], 2, 2).unwrap();
        assert_eq!(concat(&a, &empty).unwrap(), a);
        assert_eq!(concat(&empty, &a).unwrap(), a);
        let c = CodeList::from_digits(2, &["1"]).unwrap();
        assert!(matches!(concat(&a, &c), Err(Error::LengthMismatch { .. })));
        let d = CodeList::from_digits(3, &["12"]).unwrap();
        assert!(matches!(
            concat(&a, &d),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace(&s("02012", 3)), s("01011", 2));
        assert_eq!(trace(&s("000", 3)), s("000", 2));
        assert_eq!(trace(&s("21", 3)), s("11", 2));
        assert_eq!(trace_about(&s("2102", 3), 2), s("0110", 2));
    }

    #[test]
    fn relabel_examples() {
        assert_eq!(relabel_swap(&s("0100", 3), 2).unwrap(), s("2122", 3));
        assert_eq!(relabel_swap(&s("0120", 3), 0).unwrap(), s("0120", 3));
        assert!(relabel_swap(&s("01", 3), 3).is_err());
    }

    #[test]
    fn display_switches_to_commas_above_ten() {
        assert_eq!(s("0200", 3).to_string(), "0200");
        let wide = QaryString::new(vec![11, 0, 3], 12).unwrap();
        assert_eq!(wide.to_string(), "11,0,3");
    }

    #[test]
    fn run_detection() {
        assert!(s("1000", 2).contains_run(0, 3));
        assert!(!s("1001", 2).contains_run(0, 3));
        assert!(s("1222", 3).contains_run(2, 3));
        assert!(!QaryString::empty(2).unwrap().contains_run(0, 2));
    }

    fn pair(max_len: usize) -> impl Strategy<Value = (u32, Vec<u32>, Vec<u32>)> {
        (2u32..8, 0..=max_len).prop_flat_map(|(q, n)| {
            (
                Just(q),
                proptest::collection::vec(0..q, n),
                proptest::collection::vec(0..q, n),
            )
        })
    }

    proptest! {
        #[test]
        fn hamming_is_symmetric((q, a, b) in pair(10)) {
            let a = QaryString::new(a, q).unwrap();
            let b = QaryString::new(b, q).unwrap();
            prop_assert_eq!(hamming_distance(&a, &b).unwrap(), hamming_distance(&b, &a).unwrap());
            prop_assert_eq!(hamming_distance(&a, &a).unwrap(), 0);
        }

        #[test]
        fn relabel_is_an_isometric_involution((q, a, b) in pair(10), i in 0u32..8) {
            let i = i % q;
            let a = QaryString::new(a, q).unwrap();
            let b = QaryString::new(b, q).unwrap();
            let (ra, rb) = (relabel_swap(&a, i).unwrap(), relabel_swap(&b, i).unwrap());
            prop_assert_eq!(relabel_swap(&ra, i).unwrap(), a.clone());
            prop_assert_eq!(hamming_distance(&ra, &rb).unwrap(), hamming_distance(&a, &b).unwrap());
            prop_assert_eq!(trace_about(&ra, i), trace(&a));
        }

        #[test]
        fn prepend_keeps_adjacent_distances(
            (q, a, b) in pair(6),
            prefix in proptest::collection::vec(0u32..2, 0..4),
        ) {
            let n = a.len();
            let list = CodeList::new(
                vec![QaryString::new(a, q).unwrap(), QaryString::new(b, q).unwrap()],
                q,
                n,
            ).unwrap();
            let u = QaryString::new(prefix, 2).unwrap();
            let out = prepend(&u, &list).unwrap();
            prop_assert_eq!(
                hamming_distance(&out.entries()[0], &out.entries()[1]).unwrap(),
                hamming_distance(&list.entries()[0], &list.entries()[1]).unwrap()
            );
            prop_assert_eq!(reverse_list(&reverse_list(&out)), out);
        }
    }
}
