//! Trace-partitioned Gray codes for q-ary strings avoiding `k` consecutive
//! copies of one symbol.
//!
//! The building blocks are the reflected q-ary Gray code ([`reflected`]),
//! the binary Gray code for strings avoiding `0^k` ([`fibonacci`]) and the
//! expansion of a binary trace into all q-ary strings carrying it
//! ([`expansion`]). [`construction`] glues these together, with a separate
//! scheme for odd and even alphabets. [`counting`] evaluates the matching
//! generalized Fibonacci recurrences exactly and [`verify`] certifies any
//! list against a brute-force oracle.
//!
//! ```
//! use fibgray::{construction::qary_gray, ConstructionParams};
//!
//! let list = qary_gray(&ConstructionParams::new(3, 3, 3)).unwrap();
//! assert_eq!(list.len(), 26);
//! assert_eq!(list.first().unwrap().to_string(), "100");
//! ```

pub mod cli;
pub mod construction;
pub mod counting;
pub mod error;
pub mod expansion;
pub mod fibonacci;
pub mod reflected;
pub mod string;
pub mod verify;

mod budget;

pub use budget::Budget;
pub use construction::ConstructionParams;
pub use error::{Error, Result};
pub use string::{CodeList, QaryString, Symbol};
