//! Expansion of a binary trace into every q-ary string that carries it.
//!
//! For a binary `beta` with `t` ones, the `i`-th string of `ε(beta)` writes
//! the `i`-th entry of `G_t^{q-1} ⊕ 1` into the one-positions of `beta`,
//! left to right, leaving the zeros in place. The list has `(q-1)^t`
//! entries, starts at `beta` and is a Gray code.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::reflected::{brgc_within, shift_up, ReflectedGray};
use crate::string::{CodeList, QaryString, Symbol};

fn check(beta: &QaryString, q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q));
    }
    if !beta.is_binary() {
        return Err(Error::NotBinary(beta.to_string()));
    }
    Ok(())
}

fn one_positions(beta: &[Symbol]) -> Vec<usize> {
    beta.iter()
        .enumerate()
        .filter(|(_, &s)| s == 1)
        .map(|(i, _)| i)
        .collect()
}

/// Materializes `ε(beta)` under the default budget.
pub fn expand(beta: &QaryString, q: u32) -> Result<CodeList> {
    expand_within(beta, q, Budget::default())
}

pub fn expand_within(beta: &QaryString, q: u32, budget: Budget) -> Result<CodeList> {
    check(beta, q)?;
    let n = beta.len();
    let ones = one_positions(beta.symbols());
    let template: Vec<Symbol> = beta.symbols().to_vec();
    if q == 2 {
        // G_t^1 ⊕ 1 is the single string 1^t
        return Ok(CodeList::singleton(QaryString::from_raw(template, 2)));
    }
    budget.check_power(q - 1, ones.len())?;
    let shifted = shift_up(&brgc_within(ones.len(), q - 1, budget)?);
    let entries = shifted
        .iter()
        .map(|fill| {
            let mut symbols = template.clone();
            for (&pos, &s) in ones.iter().zip(fill.symbols()) {
                symbols[pos] = s;
            }
            QaryString::from_raw(symbols, q)
        })
        .collect();
    Ok(CodeList::from_raw(entries, q, n))
}

/// `last(ε(beta))` in `O(n)`.
///
/// For even `q` every 1 becomes `q-1`. For odd `q` only the leftmost 1
/// becomes `q-1` and the others stay 1.
pub fn expand_last(beta: &QaryString, q: u32) -> Result<QaryString> {
    check(beta, q)?;
    let mut symbols = beta.symbols().to_vec();
    let mut seen_one = false;
    for s in symbols.iter_mut().filter(|s| **s == 1) {
        if q % 2 == 0 || !seen_one {
            *s = q - 1;
        }
        seen_one = true;
    }
    Ok(QaryString::from_raw(symbols, q))
}

/// Streams `ε(beta)` (or its reverse) without building the shifted code.
#[derive(Debug, Clone)]
pub struct Expansion {
    ones: Vec<usize>,
    current: Vec<Symbol>,
    walk: ReflectedGray,
    q: u32,
}

impl Expansion {
    pub fn new(beta: &QaryString, q: u32) -> Result<Self> {
        check(beta, q)?;
        Ok(Self::from_binary(beta.symbols(), q, false))
    }

    /// Streams `rev(ε(beta))`.
    pub fn reversed(beta: &QaryString, q: u32) -> Result<Self> {
        check(beta, q)?;
        Ok(Self::from_binary(beta.symbols(), q, true))
    }

    /// `beta` must be binary and `q >= 2`.
    pub(crate) fn from_binary(beta: &[Symbol], q: u32, reversed: bool) -> Self {
        let ones = one_positions(beta);
        let walk = ReflectedGray::with_radix(ones.len(), q - 1, reversed);
        Expansion {
            ones,
            current: beta.to_vec(),
            walk,
            q,
        }
    }

    pub(crate) fn current(&self) -> &[Symbol] {
        &self.current
    }

    /// Steps to the next entry; false once exhausted. Only the changed
    /// position is rewritten.
    pub(crate) fn advance(&mut self) -> bool {
        match self.walk.advance() {
            None => false,
            Some(usize::MAX) => {
                for (&pos, &d) in self.ones.iter().zip(self.walk.digits()) {
                    self.current[pos] = d + 1;
                }
                true
            }
            Some(j) => {
                self.current[self.ones[j]] = self.walk.digits()[j] + 1;
                true
            }
        }
    }
}

impl Iterator for Expansion {
    type Item = QaryString;

    fn next(&mut self) -> Option<QaryString> {
        self.advance()
            .then(|| QaryString::from_raw(self.current.clone(), self.q))
    }
}
