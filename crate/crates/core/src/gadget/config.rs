use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::encode::validity_probability;
use crate::error::{Error, Result};
use crate::prg::Predicate;
use crate::word::{log2_exact, Word};

/// How the target expression pads past the `k` index blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Each branch ends in `(0|1)*`.
    Starred,
    /// One explicit `(0|1)` repeated `N - k·log2 n` times, written out.
    StarFree,
    /// The same suffix as a counting node `(0|1){N - k·log2 n}`.
    Counting,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Starred, Variant::StarFree, Variant::Counting];

    /// Whether sizes are measured with counting allowed.
    pub fn counting(self) -> bool {
        self == Variant::Counting
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Starred => "starred",
            Variant::StarFree => "star_free",
            Variant::Counting => "counting",
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "starred" => Ok(Variant::Starred),
            "star_free" | "star-free" => Ok(Variant::StarFree),
            "counting" => Ok(Variant::Counting),
            _ => Err(Error::Config(format!("unknown variant {s:?}"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetConfig {
    /// Seed length; a power of two, at least 2.
    pub n: usize,
    /// Locality.
    pub k: usize,
    /// Example length `N`.
    pub len: usize,
    /// Weak-learning advantage, strictly between 0 and 1/2.
    pub gamma: Ratio<i64>,
    pub variant: Variant,
    pub predicate: Predicate,
    pub prng_seed: u64,
}

impl GadgetConfig {
    pub fn new(n: usize, k: usize, len: usize, gamma: Ratio<i64>, variant: Variant, predicate: Predicate, prng_seed: u64) -> Result<Self> {
        let cfg = GadgetConfig { n, k, len, gamma, variant, predicate, prng_seed };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bits = log2_exact(self.n)?;
        if self.n < 2 {
            return Err(Error::Config("n must be at least 2".into()));
        }
        if self.k == 0 || self.k > self.n {
            return Err(Error::Config(format!("need 1 <= k <= n, got k={} n={}", self.k, self.n)));
        }
        if self.len < self.k * bits {
            return Err(Error::Config(format!("N={} is shorter than k*log2(n)={}", self.len, self.k * bits)));
        }
        let zero = Ratio::from_integer(0);
        if self.gamma <= zero || self.gamma >= Ratio::new(1, 2) {
            return Err(Error::Config(format!("gamma={} must lie strictly between 0 and 1/2", format_ratio(&self.gamma))));
        }
        if self.predicate.arity() != self.k {
            return Err(Error::Config(format!("predicate arity {} differs from k={}", self.predicate.arity(), self.k)));
        }
        Ok(())
    }

    /// Bits per index block.
    pub fn block_bits(&self) -> usize {
        self.n.trailing_zeros() as usize
    }

    /// Length of the `k` index blocks.
    pub fn prefix_bits(&self) -> usize {
        self.k * self.block_bits()
    }

    /// Bits after the index blocks.
    pub fn suffix_bits(&self) -> usize {
        self.len - self.prefix_bits()
    }

    /// Non-fatal problems. The distinguisher analysis needs the chance of
    /// an invalid encoding to be at most `gamma/2`.
    pub fn warnings(&self) -> Vec<String> {
        let valid = validity_probability(self.n, self.k);
        let gamma = num_rational::BigRational::new(
            (*self.gamma.numer()).into(),
            (*self.gamma.denom()).into(),
        );
        let one = num_rational::BigRational::from_integer(1.into());
        let two = num_rational::BigRational::from_integer(2.into());
        let mut out = Vec::new();
        if one - &valid > gamma / two {
            out.push(format!(
                "invalid-encoding probability {:.4} exceeds gamma/2 = {:.4}; random-case error may fall below the 1/2 - gamma/2 threshold",
                1.0 - ratio_to_f64(&valid),
                (*self.gamma.numer() as f64) / (*self.gamma.denom() as f64) / 2.0
            ));
        }
        out
    }

    /// Seed `x` derived from `prng_seed`.
    pub fn seed_word(&self) -> Word {
        let mut rng = ChaCha8Rng::seed_from_u64(self.prng_seed);
        (0..self.n).map(|_| rng.gen::<bool>()).collect()
    }
}

fn ratio_to_f64(r: &num_rational::BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// `gadget n=<> k=<> N=<> gamma=<> variant=<> pred=<table> seed=<>`
impl fmt::Display for GadgetConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "gadget n={} k={} N={} gamma={} variant={} pred={} seed={}",
            self.n,
            self.k,
            self.len,
            format_ratio(&self.gamma),
            self.variant,
            Word::new(self.predicate.table().to_vec()),
            self.prng_seed
        )
    }
}

impl FromStr for GadgetConfig {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let err = |msg: String| Error::Format { line: 1, msg };
        let mut toks = text.split_whitespace();
        if toks.next() != Some("gadget") {
            return Err(err("expected 'gadget' header".into()));
        }
        let (mut n, mut k, mut len, mut gamma, mut variant, mut pred, mut seed) = (None, None, None, None, None, None, None);
        for tok in toks {
            let (key, value) = tok.split_once('=').ok_or_else(|| err(format!("expected key=value, found {tok:?}")))?;
            let num = |v: &str| v.parse::<usize>().map_err(|_| err(format!("bad value for {key}: {v:?}")));
            match key {
                "n" => n = Some(num(value)?),
                "k" => k = Some(num(value)?),
                "N" => len = Some(num(value)?),
                "gamma" => gamma = Some(parse_ratio(value).map_err(|e| err(e.to_string()))?),
                "variant" => variant = Some(value.parse::<Variant>().map_err(|e| err(e.to_string()))?),
                "pred" => pred = Some(value.parse::<Word>().map_err(|e| err(e.to_string()))?),
                "seed" => seed = Some(value.parse::<u64>().map_err(|_| err(format!("bad seed {value:?}")))?),
                _ => return Err(err(format!("unknown key {key:?}"))),
            }
        }
        let missing = |name: &str| err(format!("missing {name}="));
        let k = k.ok_or_else(|| missing("k"))?;
        let table = pred.ok_or_else(|| missing("pred"))?;
        let predicate = Predicate::new(k, table.into_bits()).map_err(|e| err(e.to_string()))?;
        GadgetConfig::new(
            n.ok_or_else(|| missing("n"))?,
            k,
            len.ok_or_else(|| missing("N"))?,
            gamma.ok_or_else(|| missing("gamma"))?,
            variant.ok_or_else(|| missing("variant"))?,
            predicate,
            seed.ok_or_else(|| missing("seed"))?,
        )
        .map_err(|e| err(e.to_string()))
    }
}

/// Parses `p/q`, an integer, or a finite decimal such as `0.2`, exactly.
pub fn parse_ratio(s: &str) -> Result<Ratio<i64>> {
    let bad = || Error::Config(format!("bad rational {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if (int.is_empty() && frac.is_empty()) || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 15 {
        return Err(bad());
    }
    let denom = 10i64.pow(frac.len() as u32);
    let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
    let frac_v: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    let value = int.checked_mul(denom).and_then(|v| v.checked_add(frac_v)).ok_or_else(bad)?;
    Ok(Ratio::new(if neg { -value } else { value }, denom))
}

/// Finite decimal when the denominator allows it, `p/q` otherwise.
pub fn format_ratio(r: &Ratio<i64>) -> String {
    let (mut d, mut twos, mut fives) = (*r.denom(), 0u32, 0u32);
    while d % 2 == 0 {
        d /= 2;
        twos += 1;
    }
    while d % 5 == 0 {
        d /= 5;
        fives += 1;
    }
    let digits = twos.max(fives);
    if d != 1 || digits > 15 {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let scaled = r * Ratio::from_integer(10i64.pow(digits));
    let v = scaled.to_integer();
    if digits == 0 {
        return v.to_string();
    }
    let sign = if v < 0 { "-" } else { "" };
    let v = v.abs();
    let scale = 10i64.pow(digits);
    format!("{sign}{}.{:0width$}", v / scale, v % scale, width = digits as usize)
}
