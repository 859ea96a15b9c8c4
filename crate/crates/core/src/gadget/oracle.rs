use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::config::GadgetConfig;
use super::encode::{encode_compressed, is_valid_extended};
use crate::error::{Error, Result};
use crate::prg::{prg_output, Hyperedge, Hypergraph};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledExample {
    pub z: Word,
    pub y: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChallengeMode {
    Random,
    Pseudorandom,
}

impl ChallengeMode {
    pub fn name(self) -> &'static str {
        match self {
            ChallengeMode::Random => "random",
            ChallengeMode::Pseudorandom => "pseudorandom",
        }
    }
}

impl fmt::Display for ChallengeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChallengeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(ChallengeMode::Random),
            "pseudorandom" => Ok(ChallengeMode::Pseudorandom),
            _ => Err(Error::Config(format!("unknown challenge mode {s:?}"))),
        }
    }
}

/// Hyperedges paired with bits that are either uniform or the PRG output on
/// a hidden seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Challenge {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<Hyperedge>,
    pub y: Word,
    pub mode: ChallengeMode,
    /// Present exactly in pseudorandom mode.
    pub hidden_seed: Option<Word>,
}

impl Challenge {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Draws `m` uniform hyperedges, then either `m` uniform bits or a uniform
/// hidden seed and its PRG output. Edges come first so both modes see the
/// same edges under the same generator state.
pub fn make_challenge<R: Rng + ?Sized>(cfg: &GadgetConfig, m: usize, mode: ChallengeMode, rng: &mut R) -> Result<Challenge> {
    cfg.validate()?;
    let edges = (0..m).map(|_| Hyperedge::sample(cfg.n, cfg.k, rng)).collect::<Result<Vec<_>>>()?;
    let (y, hidden_seed) = match mode {
        ChallengeMode::Random => ((0..m).map(|_| rng.gen::<bool>()).collect(), None),
        ChallengeMode::Pseudorandom => {
            let x: Word = (0..cfg.n).map(|_| rng.gen::<bool>()).collect();
            let g = Hypergraph { n: cfg.n, k: cfg.k, edges: edges.clone() };
            (prg_output(&cfg.predicate, &g, &x)?, Some(x))
        }
    };
    Ok(Challenge { n: cfg.n, k: cfg.k, edges, y, mode, hidden_seed })
}

/// Draws `count` uniform length-`N` words. A word whose index blocks repeat
/// is labeled 1; otherwise its blocks are overwritten with the next
/// challenge edge and it takes that edge's bit.
pub fn simulate_oracle<R: Rng + ?Sized>(cfg: &GadgetConfig, ch: &Challenge, count: usize, rng: &mut R) -> Result<Vec<LabeledExample>> {
    if ch.n != cfg.n || ch.k != cfg.k {
        return Err(Error::Config(format!("challenge is for n={} k={}, config has n={} k={}", ch.n, ch.k, cfg.n, cfg.k)));
    }
    let prefix = cfg.prefix_bits();
    let mut next = 0;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut z: Word = (0..cfg.len).map(|_| rng.gen::<bool>()).collect();
        if !is_valid_extended(&z, cfg.n, cfg.k)? {
            out.push(LabeledExample { z, y: true });
            continue;
        }
        let (e, y) = match (ch.edges.get(next), ch.y.at(next + 1)) {
            (Some(e), Some(y)) => (e, y),
            _ => return Err(Error::ChallengeExhausted { used: next, wanted: count }),
        };
        next += 1;
        let enc = encode_compressed(e, cfg.n)?;
        z.bits_mut()[..prefix].copy_from_slice(enc.bits());
        out.push(LabeledExample { z, y });
    }
    Ok(out)
}

/// `examples <N> <count>` then one `<word> <label>` line per example.
pub fn format_examples(len: usize, examples: &[LabeledExample]) -> String {
    let mut out = format!("examples {} {}\n", len, examples.len());
    for ex in examples {
        out.push_str(&format!("{} {}\n", ex.z, u8::from(ex.y)));
    }
    out
}

pub fn parse_examples(text: &str) -> Result<(usize, Vec<LabeledExample>)> {
    let err = |line: usize, msg: String| Error::Format { line, msg };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
    let (len, count) = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["examples", len, count] => (
            len.parse::<usize>().map_err(|_| err(hl, format!("bad length {len:?}")))?,
            count.parse::<usize>().map_err(|_| err(hl, format!("bad count {count:?}")))?,
        ),
        _ => return Err(err(hl, "expected 'examples <N> <count>'".into())),
    };
    let mut out = Vec::with_capacity(count);
    for (line, text) in lines {
        let (z, y) = match text.split_whitespace().collect::<Vec<_>>().as_slice() {
            [z, y] => (*z, *y),
            _ => return Err(err(line, format!("expected '<word> <label>', got {text:?}"))),
        };
        let z: Word = z.parse().map_err(|e: Error| err(line, e.to_string()))?;
        if z.len() != len {
            return Err(err(line, format!("word has length {}, expected {len}", z.len())));
        }
        let y = match y {
            "0" => false,
            "1" => true,
            _ => return Err(err(line, format!("bad label {y:?}"))),
        };
        out.push(LabeledExample { z, y });
    }
    if out.len() != count {
        return Err(err(hl, format!("header promises {count} examples, found {}", out.len())));
    }
    Ok((len, out))
}

/// ```text
/// challenge <n> <k> <m> <mode>
/// seed <bits>            (pseudorandom only)
/// <i_1> ... <i_k> <y>    (m lines)
/// ```
impl fmt::Display for Challenge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "challenge {} {} {} {}", self.n, self.k, self.edges.len(), self.mode)?;
        if let Some(x) = &self.hidden_seed {
            writeln!(f, "seed {x}")?;
        }
        for (e, &y) in self.edges.iter().zip(self.y.bits()) {
            for v in e.vertices() {
                write!(f, "{v} ")?;
            }
            writeln!(f, "{}", u8::from(y))?;
        }
        Ok(())
    }
}

impl FromStr for Challenge {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let err = |line: usize, msg: String| Error::Format { line, msg };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty()).peekable();
        let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        let (n, k, m, mode) = match toks.as_slice() {
            ["challenge", n, k, m, mode] => {
                let num = |t: &str| t.parse::<usize>().map_err(|_| err(hl, format!("bad number {t:?}")));
                (num(n)?, num(k)?, num(m)?, mode.parse::<ChallengeMode>().map_err(|e| err(hl, e.to_string()))?)
            }
            _ => return Err(err(hl, "expected 'challenge <n> <k> <m> <mode>'".into())),
        };
        let hidden_seed = match lines.peek() {
            Some((line, l)) if l.starts_with("seed") => {
                let line = *line;
                let bits = l["seed".len()..].trim();
                let x: Word = bits.parse().map_err(|e: Error| err(line, e.to_string()))?;
                if x.len() != n {
                    return Err(err(line, format!("seed has length {}, expected {n}", x.len())));
                }
                lines.next();
                Some(x)
            }
            _ => None,
        };
        if hidden_seed.is_some() != (mode == ChallengeMode::Pseudorandom) {
            return Err(err(hl, format!("a seed line is required exactly in pseudorandom mode (mode={mode})")));
        }
        let mut edges = Vec::with_capacity(m);
        let mut y = Word::empty();
        for (line, text) in lines {
            let nums = text
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| err(line, format!("bad number {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if nums.len() != k + 1 || nums[k] > 1 {
                return Err(err(line, format!("expected {k} indices and a 0/1 label")));
            }
            edges.push(Hyperedge::new(nums[..k].to_vec(), n).map_err(|e| err(line, e.to_string()))?);
            y.push(nums[k] == 1);
        }
        if edges.len() != m {
            return Err(err(hl, format!("header promises {m} edges, found {}", edges.len())));
        }
        Ok(Challenge { n, k, edges, y, mode, hidden_seed })
    }
}
