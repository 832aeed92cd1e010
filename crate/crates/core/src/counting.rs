//! Exact k-generalized Fibonacci numbers, binary and q-ary.
//!
//! The binary sequence starts `f_0 = .. = f_{k-2} = 0`, `f_{k-1} = 1` and
//! sums the previous `k` terms. The q-ary sequence starts `f_{i,q} = q^i`
//! for `i < k` and multiplies the sum of the previous `k` terms by `q - 1`.
//! `f_{n,q}` counts the length-`n` strings over `q` symbols with no run of
//! `k` copies of a fixed symbol, and `f_{n+k} = f_{n,2}`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Memoized values of one sequence. Entries are only ever appended.
#[derive(Debug, Clone)]
pub struct CountTable {
    k: usize,
    q: Option<u32>,
    memo: Vec<BigUint>,
}

impl CountTable {
    /// The binary sequence `f_n^(k)`.
    pub fn binary(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidRunBound(k));
        }
        let mut memo = vec![BigUint::zero(); k - 1];
        memo.push(BigUint::one());
        Ok(CountTable { k, q: None, memo })
    }

    /// The q-ary sequence `f_{n,q}^(k)`.
    pub fn qary(q: u32, k: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q));
        }
        if k < 2 {
            return Err(Error::InvalidRunBound(k));
        }
        let mut memo = Vec::with_capacity(k);
        let mut power = BigUint::one();
        for _ in 0..k {
            memo.push(power.clone());
            power *= q;
        }
        Ok(CountTable {
            k,
            q: Some(q),
            memo,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> Option<u32> {
        self.q
    }

    pub fn get(&mut self, n: usize) -> &BigUint {
        if n >= self.memo.len() {
            self.extend_to(n);
        }
        &self.memo[n]
    }

    fn extend_to(&mut self, n: usize) {
        let weight = self.q.map_or(1, |q| q - 1);
        // running sum of the last k entries
        let len = self.memo.len();
        let mut window: BigUint = self.memo[len - self.k..].iter().sum();
        while self.memo.len() <= n {
            let next = &window * weight;
            let len = self.memo.len();
            window -= &self.memo[len - self.k];
            window += &next;
            self.memo.push(next);
        }
    }
}

/// `f_n^(k)`; the number of binary strings of length `n - k` without `0^k`.
pub fn count_binary(n: usize, k: usize) -> Result<BigUint> {
    Ok(CountTable::binary(k)?.get(n).clone())
}

/// `f_{n,q}^(k)`.
pub fn count_qary(n: usize, q: u32, k: usize) -> Result<BigUint> {
    Ok(CountTable::qary(q, k)?.get(n).clone())
}
