//! The reflected q-ary Gray code `G_n^q` and its shifted form `G_t^{q-1} ⊕ 1`.
//!
//! `G_0^q = (λ)` and, for `n > 0`, `G_n^q` lists symbol `i` prepended to
//! `G_{n-1}^q`, taken forward for even `i` and reversed for odd `i`.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::string::{CodeList, QaryString, Symbol};

/// Materializes `G_n^q` under the default budget.
pub fn brgc(n: usize, q: u32) -> Result<CodeList> {
    brgc_within(n, q, Budget::default())
}

pub fn brgc_within(n: usize, q: u32, budget: Budget) -> Result<CodeList> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q));
    }
    budget.check_power(q, n)?;
    let flat = reflected_rows(n, q);
    let entries = if n == 0 {
        vec![QaryString::from_raw(Vec::new(), q)]
    } else {
        flat.chunks_exact(n)
            .map(|row| QaryString::from_raw(row.to_vec(), q))
            .collect()
    };
    Ok(CodeList::from_raw(entries, q, n))
}

/// Rows of `G_n^q` laid end to end, `n` symbols each.
fn reflected_rows(n: usize, q: u32) -> Vec<Symbol> {
    if n == 0 {
        return Vec::new();
    }
    let sub = reflected_rows(n - 1, q);
    let width = n - 1;
    let count = if width == 0 { 1 } else { sub.len() / width };
    let mut rows = Vec::with_capacity(count * q as usize * n);
    for symbol in 0..q {
        for r in 0..count {
            let r = if symbol % 2 == 0 { r } else { count - 1 - r };
            rows.push(symbol);
            rows.extend_from_slice(&sub[r * width..(r + 1) * width]);
        }
    }
    rows
}

/// First and last entries of `G_n^q`, without building the list.
///
/// The first entry is always `0^n`. The last is `(q-1)^n` for odd `q` and
/// `(q-1)0^{n-1}` for even `q`.
pub fn brgc_endpoints(n: usize, q: u32) -> Result<(QaryString, QaryString)> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q));
    }
    Ok((
        QaryString::from_raw(vec![0; n], q),
        QaryString::from_raw(last_digits(n, q), q),
    ))
}

/// Last row of the reflected code of length `n` over radix `radix >= 1`.
pub(crate) fn last_digits(n: usize, radix: u32) -> Vec<Symbol> {
    let top = radix - 1;
    if radix % 2 == 1 {
        vec![top; n]
    } else {
        let mut digits = vec![0; n];
        if let Some(d) = digits.first_mut() {
            *d = top;
        }
        digits
    }
}

/// `L ⊕ 1`: adds one to every symbol, widening the alphabet by one.
pub fn shift_up(list: &CodeList) -> CodeList {
    let q = list.q() + 1;
    let entries = list
        .iter()
        .map(|e| QaryString::from_raw(e.symbols().iter().map(|&s| s + 1).collect(), q))
        .collect();
    CodeList::from_raw(entries, q, list.n())
}

/// Streaming walk over a reflected Gray code, in either direction.
///
/// Digit `j` moves upward when the digits to its left sum to an even number
/// and downward otherwise. Each forward step moves the rightmost digit that
/// can still travel in its direction; a backward step moves the rightmost
/// digit that can travel against it. Memory is `O(n)` regardless of the
/// length of the code.
#[derive(Debug, Clone)]
pub struct ReflectedGray {
    digits: Vec<Symbol>,
    radix: u32,
    backward: bool,
    state: WalkState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WalkState {
    Fresh,
    Running,
    Done,
}

impl ReflectedGray {
    /// Walks `G_n^q` from `0^n` to its last entry.
    pub fn new(n: usize, q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q));
        }
        Ok(Self::with_radix(n, q, false))
    }

    /// Walks `G_n^q` from its last entry back to `0^n`.
    pub fn reversed(n: usize, q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q));
        }
        Ok(Self::with_radix(n, q, true))
    }

    /// Radix 1 is allowed here: the code is then the single string `0^n`.
    pub(crate) fn with_radix(n: usize, radix: u32, backward: bool) -> Self {
        debug_assert!(radix >= 1);
        let digits = if backward {
            last_digits(n, radix)
        } else {
            vec![0; n]
        };
        ReflectedGray {
            digits,
            radix,
            backward,
            state: WalkState::Fresh,
        }
    }

    /// Current position of the walk.
    pub fn digits(&self) -> &[Symbol] {
        &self.digits
    }

    /// Moves to the next row. Returns the index of the digit that changed,
    /// or `None` at the end of the code. The first call only exposes the
    /// starting row and reports `Some(usize::MAX)`.
    pub(crate) fn advance(&mut self) -> Option<usize> {
        match self.state {
            WalkState::Fresh => {
                self.state = WalkState::Running;
                Some(usize::MAX)
            }
            WalkState::Done => None,
            WalkState::Running => match self.movable_digit() {
                Some((j, up)) => {
                    if up {
                        self.digits[j] += 1;
                    } else {
                        self.digits[j] -= 1;
                    }
                    Some(j)
                }
                None => {
                    self.state = WalkState::Done;
                    None
                }
            },
        }
    }

    fn movable_digit(&self) -> Option<(usize, bool)> {
        let top = self.radix - 1;
        let mut parity = 0;
        let mut found = None;
        for (j, &d) in self.digits.iter().enumerate() {
            let up = (parity % 2 == 0) != self.backward;
            if (up && d < top) || (!up && d > 0) {
                found = Some((j, up));
            }
            parity += d;
        }
        found
    }
}

impl Iterator for ReflectedGray {
    type Item = QaryString;

    fn next(&mut self) -> Option<QaryString> {
        self.advance()?;
        Some(QaryString::from_raw(self.digits.clone(), self.radix.max(2)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::string::hamming_distance;
    use std::collections::HashSet;

    #[test]
    fn small_cases() {
        assert_eq!(brgc(0, 3).unwrap().to_strings(), [""]);
        assert_eq!(brgc(1, 3).unwrap().to_strings(), ["0", "1", "2"]);
        assert_eq!(
            brgc(2, 3).unwrap().to_strings(),
            ["00", "01", "02", "12", "11", "10", "20", "21", "22"]
        );
        assert_eq!(brgc(1, 1), Err(Error::InvalidAlphabet(1)));
    }

    #[test]
    fn shifted_binary_codes() {
        let shifted = |t| shift_up(&brgc(t, 2).unwrap()).to_strings();
        assert_eq!(shifted(0), [""]);
        assert_eq!(shifted(1), ["1", "2"]);
        assert_eq!(shifted(2), ["11", "12", "22", "21"]);
        assert_eq!(
            shifted(3),
            ["111", "112", "122", "121", "221", "222", "212", "211"]
        );
        assert_eq!(shift_up(&brgc(2, 2).unwrap()).q(), 3);
    }

    #[test]
    fn endpoints_examples() {
        let show = |(a, b): (QaryString, QaryString)| (a.to_string(), b.to_string());
        assert_eq!(
            show(brgc_endpoints(2, 3).unwrap()),
            ("00".into(), "22".into())
        );
        assert_eq!(
            show(brgc_endpoints(2, 2).unwrap()),
            ("00".into(), "10".into())
        );
        assert_eq!(
            show(brgc_endpoints(1, 4).unwrap()),
            ("0".into(), "3".into())
        );
        assert_eq!(
            show(brgc_endpoints(0, 4).unwrap()),
            (String::new(), String::new())
        );
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            brgc_within(10, 3, Budget(1000)),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(brgc_within(6, 3, Budget(729)).unwrap().len(), 729);
    }

    #[test]
    fn gray_and_complete() {
        for q in 2..=5 {
            for n in 0..=5 {
                let list = brgc(n, q).unwrap();
                assert_eq!(list.len(), (q as usize).pow(n as u32));
                let distinct: HashSet<_> = list.iter().collect();
                assert_eq!(distinct.len(), list.len());
                for w in list.entries().windows(2) {
                    assert_eq!(hamming_distance(&w[0], &w[1]).unwrap(), 1);
                }
                let (first, last) = brgc_endpoints(n, q).unwrap();
                assert_eq!(list.first(), Some(&first));
                assert_eq!(list.last(), Some(&last));
            }
        }
    }

    #[test]
    fn walk_matches_recursion_both_ways() {
        for q in 2..=6 {
            for n in 0..=5 {
                let eager = brgc(n, q).unwrap().into_entries();
                let forward: Vec<_> = ReflectedGray::new(n, q).unwrap().collect();
                assert_eq!(forward, eager, "forward n={n} q={q}");
                let mut backward: Vec<_> = ReflectedGray::reversed(n, q).unwrap().collect();
                backward.reverse();
                assert_eq!(backward, eager, "backward n={n} q={q}");
            }
        }
    }

    #[test]
    fn radix_one_walk_is_a_single_row() {
        let mut walk = ReflectedGray::with_radix(3, 1, false);
        assert!(walk.advance().is_some());
        assert_eq!(walk.digits(), [0, 0, 0]);
        assert!(walk.advance().is_none());
        let mut walk = ReflectedGray::with_radix(3, 1, true);
        assert!(walk.advance().is_some());
        assert!(walk.advance().is_none());
    }
}
