//! Extended binary regular expressions, automata conversions, Boolean
//! reductions to regular expressions, Goldreich's local PRG and the
//! hyperedge-encoding labeling gadget, with a small PAC-style experiment
//! harness on top.

pub mod automata;
pub mod error;
pub mod gadget;
pub mod gen;
pub mod harness;
pub mod matcher;
pub mod prg;
pub mod reductions;
pub mod regex;
pub mod word;

pub use error::{Error, Result};
pub use matcher::{derivative, enumerate_language, equivalent_upto, matches, nullable, Matcher, Verdict};
pub use regex::{desugar_count, literal_word, parse, print, size_of, OperatorProfile, Regex};
pub use word::{bin_index, Word};
