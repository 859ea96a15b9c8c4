//! PAC-style experiment plumbing around the gadget: hypotheses, a counting
//! membership oracle, baseline learners, the validation-error distinguisher
//! and a seeded Monte Carlo estimate of its advantage.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gadget::{build_target, format_ratio, make_challenge, simulate_oracle, Challenge, ChallengeMode, GadgetConfig, LabeledExample};
use crate::matcher::Matcher;
use crate::regex::Regex;
use crate::word::Word;

/// A deterministic total predictor on words. Must tolerate concurrent calls.
pub trait Hypothesis: Send + Sync {
    fn predict(&self, z: &Word) -> bool;
}

pub struct ConstantHypothesis(pub bool);

impl Hypothesis for ConstantHypothesis {
    fn predict(&self, _: &Word) -> bool {
        self.0
    }
}

/// Membership in a regular expression, backed by a memoizing matcher.
pub struct RegexHypothesis {
    matcher: Mutex<Matcher>,
}

impl RegexHypothesis {
    pub fn new(r: &Regex) -> Self {
        RegexHypothesis { matcher: Mutex::new(Matcher::new(r)) }
    }
}

impl Hypothesis for RegexHypothesis {
    fn predict(&self, z: &Word) -> bool {
        self.matcher.lock().unwrap_or_else(|e| e.into_inner()).matches(z)
    }
}

/// Answers membership queries against a fixed concept and counts them.
pub struct MqOracle<'a> {
    concept: &'a dyn Hypothesis,
    queries: AtomicU64,
}

impl<'a> MqOracle<'a> {
    pub fn new(concept: &'a dyn Hypothesis) -> Self {
        MqOracle { concept, queries: AtomicU64::new(0) }
    }

    pub fn query(&self, w: &Word) -> bool {
        self.queries.fetch_add(1, Ordering::Relaxed);
        self.concept.predict(w)
    }

    pub fn queries(&self) -> u64 {
        self.queries.load(Ordering::Relaxed)
    }
}

/// Sees only the training examples and, optionally, a membership oracle.
pub trait Learner: Send + Sync {
    fn learn(&self, train: &[LabeledExample], mq: Option<&MqOracle<'_>>, rng: &mut dyn RngCore) -> Box<dyn Hypothesis>;
}

pub struct ConstantLearner(pub bool);

impl Learner for ConstantLearner {
    fn learn(&self, _: &[LabeledExample], _: Option<&MqOracle<'_>>, _: &mut dyn RngCore) -> Box<dyn Hypothesis> {
        Box::new(ConstantHypothesis(self.0))
    }
}

/// Predicts the more frequent training label; ties and empty samples go to 1.
pub struct MajorityLearner;

impl Learner for MajorityLearner {
    fn learn(&self, train: &[LabeledExample], _: Option<&MqOracle<'_>>, _: &mut dyn RngCore) -> Box<dyn Hypothesis> {
        let ones = train.iter().filter(|e| e.y).count();
        Box::new(ConstantHypothesis(2 * ones >= train.len()))
    }
}

/// Ignores its sample and returns the target expression for a known seed.
pub struct OracleLearner {
    target: Regex,
}

impl OracleLearner {
    pub fn new(x: &Word, cfg: &GadgetConfig) -> Self {
        OracleLearner { target: build_target(x, cfg) }
    }

    /// Uses the challenge's hidden seed; a random-mode challenge has none, so
    /// a fresh uniform seed is drawn instead.
    pub fn for_challenge<R: Rng + ?Sized>(cfg: &GadgetConfig, ch: &Challenge, rng: &mut R) -> Self {
        let x = match &ch.hidden_seed {
            Some(x) => x.clone(),
            None => (0..cfg.n).map(|_| rng.gen::<bool>()).collect(),
        };
        Self::new(&x, cfg)
    }

    pub fn target(&self) -> &Regex {
        &self.target
    }
}

impl Learner for OracleLearner {
    fn learn(&self, _: &[LabeledExample], _: Option<&MqOracle<'_>>, _: &mut dyn RngCore) -> Box<dyn Hypothesis> {
        Box::new(RegexHypothesis::new(&self.target))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LearnerKind {
    Oracle,
    Const0,
    Const1,
    Majority,
}

impl LearnerKind {
    pub const ALL: [LearnerKind; 4] = [LearnerKind::Oracle, LearnerKind::Const0, LearnerKind::Const1, LearnerKind::Majority];

    pub fn name(self) -> &'static str {
        match self {
            LearnerKind::Oracle => "oracle",
            LearnerKind::Const0 => "const0",
            LearnerKind::Const1 => "const1",
            LearnerKind::Majority => "majority",
        }
    }

    /// Instantiates the learner for one challenge.
    pub fn build<R: Rng + ?Sized>(self, cfg: &GadgetConfig, ch: &Challenge, rng: &mut R) -> Box<dyn Learner> {
        match self {
            LearnerKind::Oracle => Box::new(OracleLearner::for_challenge(cfg, ch, rng)),
            LearnerKind::Const0 => Box::new(ConstantLearner(false)),
            LearnerKind::Const1 => Box::new(ConstantLearner(true)),
            LearnerKind::Majority => Box::new(MajorityLearner),
        }
    }
}

impl fmt::Display for LearnerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LearnerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LearnerKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown learner {s:?}")))
    }
}

/// Fraction of examples on which `h` disagrees with the label.
pub fn empirical_error(h: &dyn Hypothesis, s: &[LabeledExample]) -> Result<Ratio<i64>> {
    if s.is_empty() {
        return Err(Error::EmptySample);
    }
    let wrong = s.iter().filter(|e| h.predict(&e.z) != e.y).count();
    Ok(Ratio::new(wrong as i64, s.len() as i64))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSample {
    pub train: Vec<LabeledExample>,
    pub validation: Vec<LabeledExample>,
}

impl SplitSample {
    /// The first `p_train` examples train, the rest validate.
    pub fn split(mut sample: Vec<LabeledExample>, p_train: usize) -> Self {
        let validation = sample.split_off(p_train.min(sample.len()));
        SplitSample { train: sample, validation }
    }
}

/// `2·err <= 1 - gamma`, i.e. `err <= 1/2 - gamma/2`, compared exactly.
pub fn threshold_accepts(err: Ratio<i64>, gamma: Ratio<i64>) -> bool {
    err * 2 <= Ratio::from_integer(1) - gamma
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decision {
    /// `true` for "pseudorandom".
    pub output: bool,
    pub validation_error: Ratio<i64>,
}

/// Simulates `p_train + v_size` examples from the challenge, trains on the
/// first `p_train`, and declares "pseudorandom" when the validation error
/// is at most `1/2 - gamma/2`.
pub fn distinguish<R: Rng>(
    cfg: &GadgetConfig,
    learner: &dyn Learner,
    ch: &Challenge,
    p_train: usize,
    v_size: usize,
    rng: &mut R,
) -> Result<Decision> {
    if v_size == 0 {
        return Err(Error::EmptySample);
    }
    let split = SplitSample::split(simulate_oracle(cfg, ch, p_train + v_size, rng)?, p_train);
    let h = learner.learn(&split.train, None, rng);
    let validation_error = empirical_error(h.as_ref(), &split.validation)?;
    Ok(Decision { output: threshold_accepts(validation_error, cfg.gamma), validation_error })
}

/// The output bit of [`distinguish`].
pub fn distinguisher<R: Rng>(
    cfg: &GadgetConfig,
    learner: &dyn Learner,
    ch: &Challenge,
    p_train: usize,
    v_size: usize,
    rng: &mut R,
) -> Result<bool> {
    distinguish(cfg, learner, ch, p_train, v_size, rng).map(|d| d.output)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExperimentSpec {
    pub learner: LearnerKind,
    pub trials: usize,
    pub p_train: usize,
    pub v_size: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialOutcome {
    pub pseudo: Decision,
    pub random: Decision,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdvantageReport {
    pub config: GadgetConfig,
    pub spec: ExperimentSpec,
    pub trials: Vec<TrialOutcome>,
}

impl AdvantageReport {
    pub fn ones_pseudo(&self) -> usize {
        self.trials.iter().filter(|t| t.pseudo.output).count()
    }

    pub fn ones_random(&self) -> usize {
        self.trials.iter().filter(|t| t.random.output).count()
    }

    /// `Pr[A = 1 | pseudorandom] - Pr[A = 1 | random]`, empirically.
    pub fn advantage(&self) -> Ratio<i64> {
        Ratio::new(self.ones_pseudo() as i64 - self.ones_random() as i64, self.trials.len() as i64)
    }

    pub fn mean_err_pseudo(&self) -> Ratio<i64> {
        self.mean(|t| t.pseudo.validation_error)
    }

    pub fn mean_err_random(&self) -> Ratio<i64> {
        self.mean(|t| t.random.validation_error)
    }

    fn mean(&self, f: impl Fn(&TrialOutcome) -> Ratio<i64>) -> Ratio<i64> {
        let total = self.trials.iter().map(f).fold(Ratio::zero(), |a, b| a + b);
        total / self.trials.len() as i64
    }
}

fn decimal(r: Ratio<i64>) -> String {
    format!("{:.6}", r.to_f64().unwrap_or(f64::NAN))
}

impl fmt::Display for AdvantageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(f, "mode=advantage")?;
        writeln!(f, "learner={}", self.spec.learner)?;
        writeln!(f, "n={} k={} N={} gamma={} variant={}", c.n, c.k, c.len, format_ratio(&c.gamma), c.variant)?;
        writeln!(f, "p_train={} v_size={}", self.spec.p_train, self.spec.v_size)?;
        writeln!(f, "trials={}", self.trials.len())?;
        writeln!(f, "ones_pseudo={}", self.ones_pseudo())?;
        writeln!(f, "ones_random={}", self.ones_random())?;
        writeln!(f, "adv={}", decimal(self.advantage()))?;
        writeln!(f, "mean_err_pseudo={}", decimal(self.mean_err_pseudo()))?;
        writeln!(f, "mean_err_random={}", decimal(self.mean_err_random()))?;
        writeln!(f, "seed={}", self.spec.seed)
    }
}

/// Random source for one half of one trial: stream `2t` is the pseudorandom
/// side, `2t + 1` the random side.
pub fn trial_rng(seed: u64, trial: usize, mode: ChallengeMode) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let offset = match mode {
        ChallengeMode::Pseudorandom => 0,
        ChallengeMode::Random => 1,
    };
    rng.set_stream(2 * trial as u64 + offset);
    rng
}

/// One distinguisher run on a fresh challenge. The challenge holds
/// `p_train + v_size` pairs, which is always enough because a pair is only
/// spent on a valid draw.
pub fn run_trial(cfg: &GadgetConfig, spec: &ExperimentSpec, trial: usize, mode: ChallengeMode) -> Result<Decision> {
    let mut rng = trial_rng(spec.seed, trial, mode);
    let count = spec.p_train + spec.v_size;
    let ch = make_challenge(cfg, count, mode, &mut rng)?;
    let learner = spec.learner.build(cfg, &ch, &mut rng);
    distinguish(cfg, learner.as_ref(), &ch, spec.p_train, spec.v_size, &mut rng)
}

/// Runs `spec.trials` paired trials in parallel. Results do not depend on
/// the thread count.
pub fn advantage_estimate(cfg: &GadgetConfig, spec: &ExperimentSpec) -> Result<AdvantageReport> {
    if spec.trials == 0 {
        return Err(Error::Config("need at least one trial".into()));
    }
    cfg.validate()?;
    let trials = (0..spec.trials)
        .into_par_iter()
        .map(|t| {
            Ok(TrialOutcome {
                pseudo: run_trial(cfg, spec, t, ChallengeMode::Pseudorandom)?,
                random: run_trial(cfg, spec, t, ChallengeMode::Random)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AdvantageReport { config: cfg.clone(), spec: *spec, trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadget::Variant;
    use crate::matcher::matches;
    use crate::prg::default_predicate;
    use crate::word::w;
    use num_traits::Signed;

    fn ex(z: &str, y: bool) -> LabeledExample {
        LabeledExample { z: w(z), y }
    }

    fn cfg(seed: u64) -> GadgetConfig {
        GadgetConfig::new(16, 3, 64, Ratio::new(1, 5), Variant::Starred, default_predicate(3).unwrap(), seed).unwrap()
    }

    #[test]
    fn mq_oracle_counts_and_answers() {
        let c = cfg(1);
        let x = c.seed_word();
        let r = build_target(&x, &c);
        let h = RegexHypothesis::new(&r);
        let mq = MqOracle::new(&h);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for i in 0..100 {
            let z: Word = (0..64).map(|_| rng.gen::<bool>()).collect();
            assert_eq!(mq.query(&z), matches(&r, &z));
            assert_eq!(mq.queries(), i + 1);
        }
    }

    #[test]
    fn empirical_error_examples() {
        let s: Vec<_> = (0..10).map(|i| ex("01", i >= 3)).collect();
        assert_eq!(empirical_error(&ConstantHypothesis(true), &s).unwrap(), Ratio::new(3, 10));
        let truth = vec![ex("0", false), ex("1", true)];
        let id = RegexHypothesis::new(&crate::parse("1").unwrap());
        assert_eq!(empirical_error(&id, &truth).unwrap(), Ratio::zero());
        let neg = RegexHypothesis::new(&crate::parse("0").unwrap());
        assert_eq!(empirical_error(&neg, &truth).unwrap(), Ratio::from_integer(1));
        assert!(matches!(empirical_error(&id, &[]), Err(Error::EmptySample)));
    }

    #[test]
    fn baselines() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let ones: Vec<_> = (0..5).map(|_| ex("1", true)).collect();
        let h = ConstantLearner(true).learn(&ones, None, &mut rng);
        assert_eq!(empirical_error(h.as_ref(), &ones).unwrap(), Ratio::zero());
        let mixed: Vec<_> = (0..10).map(|i| ex("1", i < 6)).collect();
        assert!(MajorityLearner.learn(&mixed, None, &mut rng).predict(&w("0")));
        let mixed: Vec<_> = (0..10).map(|i| ex("1", i >= 6)).collect();
        assert!(!MajorityLearner.learn(&mixed, None, &mut rng).predict(&w("0")));
    }

    #[test]
    fn threshold_is_exact() {
        let g = Ratio::new(1, 5);
        assert!(threshold_accepts(Ratio::new(2, 5), g));
        assert!(!threshold_accepts(Ratio::new(81, 200), g));
        assert!(threshold_accepts(Ratio::new(80, 200), g));
    }

    #[test]
    fn split_keeps_order() {
        let s: Vec<_> = (0..5).map(|i| ex("0", i % 2 == 0)).collect();
        let split = SplitSample::split(s.clone(), 2);
        assert_eq!(split.train, s[..2]);
        assert_eq!(split.validation, s[2..]);
    }

    #[test]
    fn oracle_learner_on_pseudorandom_challenge() {
        let c = cfg(2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let ch = make_challenge(&c, 1000, ChallengeMode::Pseudorandom, &mut rng).unwrap();
        let learner = OracleLearner::for_challenge(&c, &ch, &mut rng);
        let d = distinguish(&c, &learner, &ch, 10, 500, &mut rng).unwrap();
        assert_eq!(d.validation_error, Ratio::zero());
        assert!(d.output);
        let sample = simulate_oracle(&c, &ch, 50, &mut rng).unwrap();
        let h = learner.learn(&[], None, &mut rng);
        for e in &sample {
            assert_eq!(h.predict(&e.z), h.predict(&e.z));
        }
    }

    #[test]
    fn zero_validation_size_is_an_error() {
        let c = cfg(2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let ch = make_challenge(&c, 10, ChallengeMode::Random, &mut rng).unwrap();
        assert!(matches!(distinguisher(&c, &ConstantLearner(false), &ch, 5, 0, &mut rng), Err(Error::EmptySample)));
    }

    #[test]
    fn single_trial_advantage_is_integral() {
        let spec = ExperimentSpec { learner: LearnerKind::Majority, trials: 1, p_train: 20, v_size: 50, seed: 4 };
        let adv = advantage_estimate(&cfg(1), &spec).unwrap().advantage();
        assert!(adv.is_integer() && adv.abs() <= Ratio::from_integer(1));
    }

    #[test]
    fn report_is_deterministic() {
        let spec = ExperimentSpec { learner: LearnerKind::Oracle, trials: 8, p_train: 10, v_size: 100, seed: 11 };
        let a = advantage_estimate(&cfg(1), &spec).unwrap().to_string();
        let b = advantage_estimate(&cfg(1), &spec).unwrap().to_string();
        assert_eq!(a, b);
        assert!(a.starts_with("mode=advantage\nlearner=oracle\n"));
        assert!(a.contains("ones_pseudo=8\n"));
    }

    #[test]
    fn learner_names_round_trip() {
        for k in LearnerKind::ALL {
            assert_eq!(k.name().parse::<LearnerKind>().unwrap(), k);
        }
        assert!("boost".parse::<LearnerKind>().is_err());
    }
}
