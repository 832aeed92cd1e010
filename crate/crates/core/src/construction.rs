//! Gray codes for q-ary strings with no run of `k` copies of one symbol.
//!
//! Every construction walks the binary list `F_n^(k) = (α_1, α_2, ..)` and
//! replaces each `α_i` by its expansion `ε(α_i)` or the reverse of it, so
//! strings sharing a trace stay contiguous.
//!
//! * Even `q`: alternate `ε(α_1), rev ε(α_2), ε(α_3), ..` over the whole
//!   list.
//! * Odd `q`: split `F_n^(k)` into first-1 blocks and restart the
//!   alternation at the start of every block. The block's last expansion
//!   is forward when the block has odd size and reversed otherwise.
//!
//! Global alternation is not a Gray code for odd `q` in general
//! ([`naive_alternating`] keeps it around as a diagnostic). Any other
//! forbidden symbol `s` is handled by swapping `0` and `s` in the output.

use crate::budget::Budget;
use crate::counting::count_qary;
use crate::error::{Error, Result};
use crate::expansion::{expand_within, Expansion};
use crate::fibonacci::{fib_blocks_within, fib_list_within, FibonacciWalk};
use crate::string::{reverse_list, swap_unchecked, CodeList, QaryString, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstructionParams {
    pub n: usize,
    pub q: u32,
    pub k: usize,
    /// Symbol whose `k`-run is avoided.
    pub forbidden_symbol: Symbol,
}

impl ConstructionParams {
    pub fn new(n: usize, q: u32, k: usize) -> Self {
        ConstructionParams {
            n,
            q,
            k,
            forbidden_symbol: 0,
        }
    }

    pub fn with_forbidden(self, forbidden_symbol: Symbol) -> Self {
        ConstructionParams {
            forbidden_symbol,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.q < 2 {
            return Err(Error::InvalidAlphabet(self.q));
        }
        if self.k < 2 {
            return Err(Error::InvalidRunBound(self.k));
        }
        if self.forbidden_symbol >= self.q {
            return Err(Error::SymbolOutOfRange {
                symbol: self.forbidden_symbol,
                q: self.q,
            });
        }
        Ok(())
    }
}

fn check_size(n: usize, q: u32, k: usize, budget: Budget) -> Result<()> {
    budget.check(&count_qary(n, q, k)?)
}

fn push_expansion(
    out: &mut Vec<QaryString>,
    alpha: &QaryString,
    q: u32,
    reversed: bool,
    budget: Budget,
) -> Result<()> {
    let e = expand_within(alpha, q, budget)?;
    let e = if reversed { reverse_list(&e) } else { e };
    out.extend(e);
    Ok(())
}

/// `ε(α_1) ∘ rev ε(α_2) ∘ ε(α_3) ∘ ..` over all of `F_n^(k)`.
fn alternate_globally(n: usize, q: u32, k: usize, budget: Budget) -> Result<CodeList> {
    check_size(n, q, k, budget)?;
    let fib = fib_list_within(n, k, budget)?;
    let mut out = Vec::new();
    for (i, alpha) in fib.iter().enumerate() {
        push_expansion(&mut out, alpha, q, i % 2 == 1, budget)?;
    }
    Ok(CodeList::from_raw(out, q, n))
}

pub fn qary_gray_even(n: usize, q: u32, k: usize) -> Result<CodeList> {
    qary_gray_even_within(n, q, k, Budget::default())
}

pub fn qary_gray_even_within(n: usize, q: u32, k: usize, budget: Budget) -> Result<CodeList> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q));
    }
    if q % 2 != 0 {
        return Err(Error::WrongParity {
            q,
            expected: "even",
        });
    }
    if k < 2 {
        return Err(Error::InvalidRunBound(k));
    }
    // The final ε' is forward iff f_{n+k} is odd, which is where plain
    // alternation lands anyway.
    alternate_globally(n, q, k, budget)
}

pub fn qary_gray_odd(n: usize, q: u32, k: usize) -> Result<CodeList> {
    qary_gray_odd_within(n, q, k, Budget::default())
}

/// `Γ_1 ∘ Γ_2 ∘ .. ∘ Γ_k`, one `Γ_j` per first-1 block of `F_n^(k)`.
pub fn qary_gray_odd_within(n: usize, q: u32, k: usize, budget: Budget) -> Result<CodeList> {
    if q < 3 {
        return Err(Error::InvalidAlphabet(q));
    }
    if q % 2 != 1 {
        return Err(Error::WrongParity { q, expected: "odd" });
    }
    if k < 2 {
        return Err(Error::InvalidRunBound(k));
    }
    check_size(n, q, k, budget)?;
    let blocks = fib_blocks_within(n, k, budget)?;
    let mut out = Vec::new();
    for block in blocks.blocks() {
        let size = block.len();
        for (i, alpha) in block.iter().enumerate() {
            let reversed = if i + 1 == size {
                size % 2 == 0
            } else {
                i % 2 == 1
            };
            push_expansion(&mut out, alpha, q, reversed, budget)?;
        }
    }
    Ok(CodeList::from_raw(out, q, n))
}

/// Builds the Gray code for `params`, choosing the construction by the
/// parity of `q` and relabeling for a nonzero forbidden symbol.
pub fn qary_gray(params: &ConstructionParams) -> Result<CodeList> {
    qary_gray_within(params, Budget::default())
}

pub fn qary_gray_within(params: &ConstructionParams, budget: Budget) -> Result<CodeList> {
    params.validate()?;
    let ConstructionParams {
        n,
        q,
        k,
        forbidden_symbol,
    } = *params;
    let list = if q % 2 == 0 {
        qary_gray_even_within(n, q, k, budget)?
    } else {
        qary_gray_odd_within(n, q, k, budget)?
    };
    if forbidden_symbol == 0 {
        return Ok(list);
    }
    let entries = list
        .iter()
        .map(|s| swap_unchecked(s, forbidden_symbol))
        .collect();
    Ok(CodeList::from_raw(entries, q, n))
}

/// Global alternation regardless of parity. For even `q` this is the even
/// construction; for odd `q` it can break the Gray property at block
/// boundaries.
pub fn naive_alternating(n: usize, q: u32, k: usize) -> Result<CodeList> {
    naive_alternating_within(n, q, k, Budget::default())
}

pub fn naive_alternating_within(n: usize, q: u32, k: usize, budget: Budget) -> Result<CodeList> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q));
    }
    if k < 2 {
        return Err(Error::InvalidRunBound(k));
    }
    alternate_globally(n, q, k, budget)
}

/// Streaming form of [`qary_gray`] (or [`naive_alternating`]).
///
/// Holds one binary walk and one expansion walk, so memory is `O(n)` no
/// matter how long the code is. For odd `q` the alternation restarts
/// whenever the position of the first 1 changes, which is exactly a block
/// boundary of `F_n^(k)`.
#[derive(Debug, Clone)]
pub struct QaryGrayStream {
    q: u32,
    forbidden: Symbol,
    restart_per_block: bool,
    fib: FibonacciWalk,
    expansion: Option<Expansion>,
    block: Option<usize>,
    index_in_block: usize,
    out: Vec<Symbol>,
}

impl QaryGrayStream {
    pub fn new(params: &ConstructionParams) -> Result<Self> {
        params.validate()?;
        Ok(Self::build(params, params.q % 2 == 1))
    }

    pub fn naive(n: usize, q: u32, k: usize) -> Result<Self> {
        let params = ConstructionParams::new(n, q, k);
        params.validate()?;
        Ok(Self::build(&params, false))
    }

    fn build(params: &ConstructionParams, restart_per_block: bool) -> Self {
        QaryGrayStream {
            q: params.q,
            forbidden: params.forbidden_symbol,
            restart_per_block,
            fib: FibonacciWalk::new(params.n, params.k).expect("validated"),
            expansion: None,
            block: None,
            index_in_block: 0,
            out: Vec::with_capacity(params.n),
        }
    }

    /// The entry produced by the last successful [`advance`](Self::advance).
    pub fn current(&self) -> &[Symbol] {
        &self.out
    }

    /// Moves to the next entry; false once the code is exhausted.
    pub fn advance(&mut self) -> bool {
        loop {
            if let Some(exp) = self.expansion.as_mut() {
                if exp.advance() {
                    let forbidden = self.forbidden;
                    self.out.clear();
                    self.out.extend(exp.current().iter().map(|&x| match x {
                        0 => forbidden,
                        x if x == forbidden => 0,
                        x => x,
                    }));
                    return true;
                }
                self.expansion = None;
            }
            if !self.fib.advance() {
                return false;
            }
            let alpha = self.fib.current();
            let first_one = alpha.iter().position(|&s| s == 1).unwrap_or(alpha.len());
            if self.restart_per_block && self.block != Some(first_one) {
                self.block = Some(first_one);
                self.index_in_block = 0;
            }
            let reversed = self.index_in_block % 2 == 1;
            self.index_in_block += 1;
            self.expansion = Some(Expansion::from_binary(alpha, self.q, reversed));
        }
    }
}

impl Iterator for QaryGrayStream {
    type Item = QaryString;

    fn next(&mut self) -> Option<QaryString> {
        self.advance()
            .then(|| QaryString::from_raw(self.out.clone(), self.q))
    }
}
