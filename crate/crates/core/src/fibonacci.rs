//! Binary Gray codes for strings avoiding `0^k`.
//!
//! `C_0 = (λ)` and `C_n = 1·rev(C_{n-1}) ∘ 0·C_{n-1}` lists all binary
//! strings of length `n`. The Fibonacci list `F_n^(k)` equals `C_n` for
//! `n < k`, and for `n >= k` concatenates `0^{j-1}1·rev(F_{n-j}^(k))` over
//! `j = 1..k`. Grouping a list by the position of its first 1 gives the
//! [`BlockDecomposition`] the odd-alphabet construction works on.

use std::collections::HashMap;

use crate::budget::Budget;
use crate::counting::count_binary;
use crate::error::{Error, Result};
use crate::string::{concat, prepend, reverse_list, CodeList, QaryString, Symbol};

pub fn c_list(n: usize) -> Result<CodeList> {
    c_list_within(n, Budget::default())
}

pub fn c_list_within(n: usize, budget: Budget) -> Result<CodeList> {
    budget.check_power(2, n)?;
    let mut memo = HashMap::new();
    Ok(c_rec(n, &mut memo))
}

fn c_rec(n: usize, memo: &mut HashMap<usize, CodeList>) -> CodeList {
    if let Some(list) = memo.get(&n) {
        return list.clone();
    }
    let list = if n == 0 {
        lambda()
    } else {
        let sub = c_rec(n - 1, memo);
        let head = prepend(&bits(&[1]), &reverse_list(&sub)).expect("binary prefix");
        let tail = prepend(&bits(&[0]), &sub).expect("binary prefix");
        concat(&head, &tail).expect("equal shapes")
    };
    memo.insert(n, list.clone());
    list
}

/// `F_n^(k)` under the default budget.
pub fn fib_list(n: usize, k: usize) -> Result<CodeList> {
    fib_list_within(n, k, Budget::default())
}

pub fn fib_list_within(n: usize, k: usize, budget: Budget) -> Result<CodeList> {
    if k < 2 {
        return Err(Error::InvalidRunBound(k));
    }
    budget.check(&count_binary(n + k, k)?)?;
    let mut memo = HashMap::new();
    Ok(fib_rec(n, k, &mut memo))
}

fn fib_rec(n: usize, k: usize, memo: &mut HashMap<usize, CodeList>) -> CodeList {
    if n < k {
        return c_rec(n, &mut HashMap::new());
    }
    if let Some(list) = memo.get(&n) {
        return list.clone();
    }
    let mut list = CodeList::from_raw(Vec::new(), 2, n);
    for j in 1..=k {
        let sub = reverse_list(&fib_rec(n - j, k, memo));
        let block = prepend(&first_one_prefix(j), &sub).expect("binary prefix");
        list = concat(&list, &block).expect("equal shapes");
    }
    memo.insert(n, list.clone());
    list
}

/// A binary list split into consecutive blocks by the position of the
/// first 1.
///
/// Block `j` (1-based) holds the strings starting with `0^{j-1}1`. When the
/// list contains `0^n` it forms a final singleton block whose recorded
/// prefix is `0^n` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<CodeList>,
    prefixes: Vec<QaryString>,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> &[CodeList] {
        &self.blocks
    }

    pub fn prefixes(&self) -> &[QaryString] {
        &self.prefixes
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(CodeList::len).collect()
    }

    /// Concatenation of all blocks in order.
    pub fn flatten(&self) -> CodeList {
        let n = self.blocks.first().map_or(0, CodeList::n);
        let entries = self.blocks.iter().flat_map(|b| b.iter().cloned()).collect();
        CodeList::from_raw(entries, 2, n)
    }
}

/// Splits `F_n^(k)` into its first-1 blocks.
///
/// For `n >= k` these are the `k` blocks of the defining recursion. For
/// `1 <= n < k` the list is `C_n`, which unrolls into `0^{j-1}1·rev(C_{n-j})`
/// for `j = 1..n` followed by the singleton `(0^n)`. For `n = 0` the single
/// block is `(λ)`.
pub fn fib_blocks(n: usize, k: usize) -> Result<BlockDecomposition> {
    fib_blocks_within(n, k, Budget::default())
}

pub fn fib_blocks_within(n: usize, k: usize, budget: Budget) -> Result<BlockDecomposition> {
    if k < 2 {
        return Err(Error::InvalidRunBound(k));
    }
    budget.check(&count_binary(n + k, k)?)?;
    if n == 0 {
        return Ok(BlockDecomposition {
            blocks: vec![lambda()],
            prefixes: vec![bits(&[])],
        });
    }
    let mut blocks = Vec::new();
    let mut prefixes = Vec::new();
    if n >= k {
        let mut memo = HashMap::new();
        for j in 1..=k {
            let prefix = first_one_prefix(j);
            let sub = reverse_list(&fib_rec(n - j, k, &mut memo));
            blocks.push(prepend(&prefix, &sub).expect("binary prefix"));
            prefixes.push(prefix);
        }
    } else {
        let mut memo = HashMap::new();
        for j in 1..=n {
            let prefix = first_one_prefix(j);
            let sub = reverse_list(&c_rec(n - j, &mut memo));
            blocks.push(prepend(&prefix, &sub).expect("binary prefix"));
            prefixes.push(prefix);
        }
        let zeros = bits(&vec![0; n]);
        blocks.push(CodeList::singleton(zeros.clone()));
        prefixes.push(zeros);
    }
    Ok(BlockDecomposition { blocks, prefixes })
}

fn lambda() -> CodeList {
    CodeList::singleton(bits(&[]))
}

fn bits(symbols: &[Symbol]) -> QaryString {
    QaryString::from_raw(symbols.to_vec(), 2)
}

/// `0^{j-1}1`.
fn first_one_prefix(j: usize) -> QaryString {
    let mut symbols = vec![0; j];
    symbols[j - 1] = 1;
    QaryString::from_raw(symbols, 2)
}

/// Streams `F_n^(k)` in order with `O(n)` memory.
///
/// The recursion is walked depth first with an explicit stack. A frame
/// covering `m` remaining positions expands into the `k` Fibonacci
/// children when `m >= k` and into the two `C_m` children otherwise.
#[derive(Debug, Clone)]
pub struct FibonacciWalk {
    n: usize,
    k: usize,
    buffer: Vec<Symbol>,
    stack: Vec<Frame>,
    fresh: bool,
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    remaining: usize,
    reversed: bool,
    next_child: usize,
    base: usize,
}

impl FibonacciWalk {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidRunBound(k));
        }
        Ok(FibonacciWalk {
            n,
            k,
            buffer: Vec::with_capacity(n),
            stack: Vec::new(),
            fresh: true,
        })
    }

    /// The string produced by the last successful [`advance`](Self::advance).
    pub fn current(&self) -> &[Symbol] {
        &self.buffer
    }

    /// Moves to the next string; false once the list is exhausted.
    pub fn advance(&mut self) -> bool {
        if self.fresh {
            self.fresh = false;
            if self.n > 0 {
                self.stack.push(Frame {
                    remaining: self.n,
                    reversed: false,
                    next_child: 0,
                    base: 0,
                });
                self.descend();
            }
            return true;
        }
        while !self.stack.is_empty() {
            if self.open_child() {
                self.descend();
                return true;
            }
            self.stack.pop();
        }
        false
    }

    fn descend(&mut self) {
        while self.buffer.len() < self.n {
            let opened = self.open_child();
            debug_assert!(opened);
        }
    }

    fn open_child(&mut self) -> bool {
        let k = self.k;
        let Some(frame) = self.stack.last_mut() else {
            return false;
        };
        let m = frame.remaining;
        let (prefix_len, one_at_end, child_reversed) = if m >= k {
            if frame.next_child == k {
                return false;
            }
            let j = if frame.reversed {
                k - frame.next_child
            } else {
                frame.next_child + 1
            };
            (j, true, !frame.reversed)
        } else {
            if frame.next_child == 2 {
                return false;
            }
            // C_m = 1·rev(C_{m-1}) ∘ 0·C_{m-1}; reversed: 0·rev(C_{m-1}) ∘ 1·C_{m-1}
            let first = frame.next_child == 0;
            (1, first != frame.reversed, first)
        };
        frame.next_child += 1;
        let base = frame.base;
        self.buffer.truncate(base);
        self.buffer
            .extend(std::iter::repeat(0).take(prefix_len - 1));
        self.buffer.push(Symbol::from(one_at_end));
        let child = m - prefix_len;
        if child > 0 {
            self.stack.push(Frame {
                remaining: child,
                reversed: child_reversed,
                next_child: 0,
                base: self.buffer.len(),
            });
        }
        true
    }
}

impl Iterator for FibonacciWalk {
    type Item = QaryString;

    fn next(&mut self) -> Option<QaryString> {
        self.advance()
            .then(|| QaryString::from_raw(self.buffer.clone(), 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::string::hamming_distance;
    use std::collections::HashSet;

    #[test]
    fn c_list_examples() {
        assert_eq!(c_list(0).unwrap().to_strings(), [""]);
        assert_eq!(c_list(1).unwrap().to_strings(), ["1", "0"]);
        assert_eq!(c_list(2).unwrap().to_strings(), ["10", "11", "01", "00"]);
    }

    #[test]
    fn c_list_is_a_gray_code_for_everything() {
        for n in 0..=10 {
            let list = c_list(n).unwrap();
            assert_eq!(list.len(), 1 << n);
            assert_eq!(list.iter().collect::<HashSet<_>>().len(), 1 << n);
            for w in list.entries().windows(2) {
                assert_eq!(hamming_distance(&w[0], &w[1]).unwrap(), 1);
            }
            if n > 0 {
                let mut head = vec![0; n];
                head[0] = 1;
                assert_eq!(list.first().unwrap().symbols(), head);
            }
        }
    }

    #[test]
    fn fib_list_examples() {
        assert_eq!(
            fib_list(3, 3).unwrap().to_strings(),
            ["100", "101", "111", "110", "010", "011", "001"]
        );
        assert_eq!(
            fib_list(4, 3).unwrap().to_strings(),
            [
                "1001", "1011", "1010", "1110", "1111", "1101", "1100", "0100", "0101", "0111",
                "0110", "0010", "0011"
            ]
        );
        assert_eq!(fib_list(0, 4).unwrap().to_strings(), [""]);
        assert_eq!(fib_list(2, 3).unwrap(), c_list(2).unwrap());
        assert_eq!(fib_list(3, 1), Err(Error::InvalidRunBound(1)));
    }

    #[test]
    fn fib_list_budget() {
        assert!(matches!(
            fib_list_within(20, 3, Budget(100)),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            c_list_within(20, Budget(100)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn blocks_examples() {
        let d = fib_blocks(4, 3).unwrap();
        assert_eq!(d.sizes(), [7, 4, 2]);
        let prefixes: Vec<_> = d.prefixes().iter().map(ToString::to_string).collect();
        assert_eq!(prefixes, ["1", "01", "001"]);
        assert_eq!(d.flatten(), fib_list(4, 3).unwrap());

        let d = fib_blocks(2, 3).unwrap();
        let blocks: Vec<_> = d.blocks().iter().map(CodeList::to_strings).collect();
        assert_eq!(blocks, [vec!["10", "11"], vec!["01"], vec!["00"]]);
        assert_eq!(d.prefixes().last().unwrap().to_string(), "00");

        assert_eq!(fib_blocks(3, 3).unwrap().sizes(), [4, 2, 1]);
        assert_eq!(fib_blocks(0, 3).unwrap().sizes(), [1]);
    }

    #[test]
    fn walk_matches_recursion() {
        for k in 2..=5 {
            for n in 0..=13 {
                let walked: Vec<_> = FibonacciWalk::new(n, k).unwrap().collect();
                assert_eq!(
                    walked,
                    fib_list(n, k).unwrap().into_entries(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn blocks_reassemble_and_have_fibonacci_sizes() {
        for k in 2..=5 {
            for n in 0..=12 {
                let d = fib_blocks(n, k).unwrap();
                let full = fib_list(n, k).unwrap();
                if n >= k {
                    assert_eq!(d.flatten(), full);
                    let sizes: Vec<_> = (1..=k)
                        .map(|j| {
                            count_binary(n + k - j, k)
                                .unwrap()
                                .to_string()
                                .parse()
                                .unwrap()
                        })
                        .collect::<Vec<usize>>();
                    assert_eq!(d.sizes(), sizes);
                } else {
                    assert_eq!(d.flatten(), c_list(n).unwrap());
                }
                for (block, prefix) in d.blocks().iter().zip(d.prefixes()) {
                    for s in block {
                        assert!(s.symbols().starts_with(prefix.symbols()));
                    }
                }
            }
        }
    }
}
