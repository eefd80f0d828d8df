//! Registry of checkable statements, instance generation and checking.

mod instances;
mod numeric;
mod report;
mod symbolic;

use std::fmt;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::{EvalCache, PrimeCtx};
use crate::index::{BBSpec, Index};
use crate::word::Word;

pub use instances::instances;
pub use numeric::{check_numeric, hoffman_element};
pub use report::{Report, Summary, TheoremCounts};
pub use symbolic::{check_symbolic, compare_shuffle_recursion, ShuffleComparison};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// Exact identity in the index space or the word algebra.
    Symbolic,
    /// Holds modulo every prime at or above the instance weight plus 3.
    Numeric,
    /// Holds modulo every odd prime.
    PerPrimeExact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremDescriptor {
    pub id: &'static str,
    pub kind: Kind,
    /// The identity being checked, in plain notation.
    pub statement: &'static str,
    /// Shape of the instance parameters.
    pub params: &'static str,
}

const fn desc(id: &'static str, kind: Kind, statement: &'static str, params: &'static str) -> TheoremDescriptor {
    TheoremDescriptor { id, kind, statement, params }
}

use Kind::{Numeric, PerPrimeExact, Symbolic};

static REGISTRY: &[TheoremDescriptor] = &[
    desc("sum-formula", Numeric,
        "sum over k_1+..+k_r = k, k_r >= 2 of zeta^t(k) = sum_j [C(k-1,j) + (-1)^r C(k-1,r-1-j)] t^j (1-t)^(r-1-j) Z_A(k)",
        "k, r"),
    desc("cyclic-sum", Numeric, "zeta^t(F^t(k)) = 0 for k not all ones", "k"),
    desc("bowman-bradley", Numeric, "zeta^t(B_a) = 0", "a; b; c"),
    desc("weighted-sum", Numeric, "sum over compositions of k of depth r of 2^(k_r-1) zeta^t(k) = 0, r odd", "k, r"),
    desc("harmonic", PerPrimeExact, "Z(u * v) = Z(u) Z(v)", "a, b"),
    desc("t-harmonic", PerPrimeExact, "Z^t(u *_t v) = Z^t(u) Z^t(v)", "a, b"),
    desc("symmetric-sum", Numeric, "sum over sigma in S_r of zeta^t(k_sigma(1), .., k_sigma(r)) = 0", "k"),
    desc("antipode", PerPrimeExact,
        "sum_{i=0..r} (-1)^i zeta^t(k_1..k_i) zeta^(1-t)(k_r..k_(i+1)) = 0", "k"),
    desc("t-shuffle", Numeric, "Z^t(w1 sh_t w2) = Z^t(w1 nu(w2) - t w1 x L_y^-1(nu(w2)))", "w1, w2"),
    desc("reversal", PerPrimeExact, "Z^t(w) = Z^t(nu(w))", "k"),
    desc("duality-star", Numeric, "zeta*(k) = -zeta*(k dual)", "k"),
    desc("duality-phi", Numeric, "Z(w) = Z(phi(w)) for w in yHx", "w"),
    desc("duality-t", Numeric, "Z^t(w) = -Z^t(phi^t(w)) for w in yHx", "w"),
    desc("derivation", Numeric, "Z^t(R_x^-1 d_l^t(w)) = 0 for w in yHx", "w, l"),
    desc("hoffman", Numeric, "the l = 1 derivation relation written on indices with k_r >= 2", "k"),
    desc("ohno-type", Numeric, "Z(G_1(k, m) - G_2(k, m)) = 0", "k, m"),
    desc("plain-sum", Numeric, "Z(S(k, r)) = 0", "k, r"),
    desc("transport", PerPrimeExact, "Z(S_t(w)) = Z^t(w)", "w"),
    desc("lemma-cyclic", Symbolic,
        "t^m part of the left side of the cyclic relation, rewritten over the support of C_m(k)", "k, m"),
    desc("prop-cyclic-coeff", Symbolic, "[t^m] F^t(k) = F^0(C_m(k))", "k, m"),
    desc("keyprop-bb", Symbolic, "(n+1) B^(n+1)[a] as a sum of B^(n) over merged data", "a; b; c, n"),
    desc("lemma-F-closed", Symbolic, "closed form of F(k, r, n) over compositions of depth r-n", "k, r, n"),
    desc("lemma-FSG1", Symbolic, "F + S' + G'_1 = 0", "k, r, n"),
    desc("lemma-G2phi", Symbolic, "G'_2 + phi(G'_2) = C(k-r+n, n) (1^k) for even k, 0 for odd k; r odd", "k, r, n"),
    desc("keyprop-weighted", Symbolic, "H + phi(H) = -C(k-r+n, n) (1^k) for even k, 0 for odd k; r odd", "k, r, n"),
    desc("lemma-Snu", Symbolic, "S_t(nu(w)) = nu(S_t(w))", "w"),
    desc("lemma-prodSt", Symbolic, "S_t(w1) S_t(w2) = S_t(w1 w2 - t w1 x L_y^-1(w2))", "w1, w2"),
    desc("transport-consistency", Symbolic, "four-term t-harmonic recursion equals S_-t(S_t u * S_t v)", "a, b"),
];

pub fn registry() -> &'static [TheoremDescriptor] {
    REGISTRY
}

pub fn descriptor(id: &str) -> Result<&'static TheoremDescriptor> {
    REGISTRY.iter().find(|d| d.id == id).ok_or_else(|| Error::UnknownTheorem {
        id: id.to_string(),
        valid: REGISTRY.iter().map(|d| d.id).collect::<Vec<_>>().join(", "),
    })
}

/// Expands `all` to the registry order and validates the rest.
pub fn resolve_ids<S: AsRef<str>>(ids: &[S]) -> Result<Vec<&'static str>> {
    let mut out = Vec::new();
    for id in ids {
        let id = id.as_ref();
        if id == "all" {
            out.extend(REGISTRY.iter().map(|d| d.id));
        } else {
            out.push(descriptor(id)?.id);
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|id| seen.insert(*id));
    Ok(out)
}

/// Enumeration limits. Weights of words are their lengths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_weight: u32,
    pub max_depth: usize,
    /// harmonic, t-harmonic, antipode, reversal, transport, t-shuffle
    pub pair_weight: u32,
    /// duality-phi, duality-t, derivation
    pub word_weight: u32,
    pub derivation_max_l: u32,
    /// bound on `2l + m`
    pub bb_max_size: usize,
    pub bb_max_part: u32,
    pub symbolic_cyclic_weight: u32,
    pub symbolic_weighted_k: u32,
    /// lemma-Snu, lemma-prodSt
    pub symbolic_word_weight: u32,
    /// transport-consistency
    pub recursion_weight: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_weight: 8,
            max_depth: 5,
            pair_weight: 6,
            word_weight: 7,
            derivation_max_l: 3,
            bb_max_size: 4,
            bb_max_part: 5,
            symbolic_cyclic_weight: 7,
            symbolic_weighted_k: 9,
            symbolic_word_weight: 7,
            recursion_weight: 6,
        }
    }
}

impl Bounds {
    /// Sets `max_weight` and lowers every other weight cap to it.
    pub fn clamp_weight(mut self, w: u32) -> Self {
        self.max_weight = w;
        for cap in [
            &mut self.pair_weight,
            &mut self.word_weight,
            &mut self.symbolic_cyclic_weight,
            &mut self.symbolic_weighted_k,
            &mut self.symbolic_word_weight,
            &mut self.recursion_weight,
        ] {
            *cap = (*cap).min(w);
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "kebab-case")]
pub enum Params {
    Index { k: Index },
    IndexLevel { k: Index, m: u32 },
    WeightDepth { k: u32, r: usize },
    WeightDepthLevel { k: u32, r: usize, n: usize },
    IndexPair { a: Index, b: Index },
    Word { w: Word },
    WordPair { w1: Word, w2: Word },
    WordOrder { w: Word, l: u32 },
    Bb { spec: BBSpec },
    BbLevel { spec: BBSpec, n: usize },
}

fn bb_text(s: &BBSpec) -> String {
    let j = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    format!("({};{};{})", j(&s.a), j(&s.b), j(&s.c))
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Index { k } => write!(f, "k={k}"),
            Params::IndexLevel { k, m } => write!(f, "k={k} m={m}"),
            Params::WeightDepth { k, r } => write!(f, "k={k} r={r}"),
            Params::WeightDepthLevel { k, r, n } => write!(f, "k={k} r={r} n={n}"),
            Params::IndexPair { a, b } => write!(f, "a={a} b={b}"),
            Params::Word { w } => write!(f, "w={w}"),
            Params::WordPair { w1, w2 } => write!(f, "w1={w1} w2={w2}"),
            Params::WordOrder { w, l } => write!(f, "w={w} l={l}"),
            Params::Bb { spec } => write!(f, "a={}", bb_text(spec)),
            Params::BbLevel { spec, n } => write!(f, "a={} n={n}", bb_text(spec)),
        }
    }
}

impl Params {
    /// Weight of the data: `wt(k)`, the total weight of a pair, the length of
    /// a word.
    pub fn weight(&self) -> u32 {
        let len = |w: &Word| w.len() as u32;
        match self {
            Params::Index { k } => k.weight(),
            Params::IndexLevel { k, .. } => k.weight(),
            Params::WeightDepth { k, .. } | Params::WeightDepthLevel { k, .. } => *k,
            Params::IndexPair { a, b } => a.weight() + b.weight(),
            Params::Word { w } | Params::WordOrder { w, .. } => len(w),
            Params::WordPair { w1, w2 } => len(w1) + len(w2),
            Params::Bb { spec } | Params::BbLevel { spec, .. } => spec.weight(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub theorem: String,
    pub params: Params,
}

impl Instance {
    /// The weight that selects primes. Ohno-type sums add `m` to `wt(k)`.
    pub fn weight(&self) -> u32 {
        match (self.theorem.as_str(), &self.params) {
            ("ohno-type", Params::IndexLevel { k, m }) => k.weight() + m,
            (_, p) => p.weight(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Result for one instance. Numeric outcomes aggregate over all tested
/// primes and keep the first failing prime with its residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub theorem: String,
    pub params: Params,
    pub status: Status,
    /// See [`Params::weight`].
    pub weight: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primes_checked: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primes_skipped: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primes_failed: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

impl CheckOutcome {
    pub(crate) fn new(inst: &Instance, status: Status) -> Self {
        Self {
            theorem: inst.theorem.clone(),
            params: inst.params.clone(),
            status,
            weight: inst.weight(),
            primes_checked: None,
            primes_skipped: None,
            primes_failed: None,
            prime: None,
            residual: None,
            detail: None,
            elapsed: None,
        }
    }
}

/// Primes used for an instance of the given kind and weight.
pub fn primes_for(kind: Kind, weight: u32, primes: &[u64]) -> Vec<u64> {
    match kind {
        Kind::PerPrimeExact => primes.to_vec(),
        _ => primes
            .iter()
            .copied()
            .filter(|&p| p >= u64::from(weight) + 3)
            .collect(),
    }
}

pub fn check(inst: &Instance, ctxs: &[PrimeCtx], cache: &EvalCache) -> Result<CheckOutcome> {
    let start = std::time::Instant::now();
    let mut out = match descriptor(&inst.theorem)?.kind {
        Kind::Symbolic => check_symbolic(inst)?,
        _ => check_numeric(inst, ctxs, cache)?,
    };
    out.elapsed = Some(start.elapsed());
    Ok(out)
}

/// Runs every instance of `ids`. The outcome order follows `ids`, then
/// instance enumeration order, independent of `jobs`.
pub fn run_suite<S: AsRef<str>>(
    ids: &[S],
    bounds: &Bounds,
    primes: &[u64],
    jobs: usize,
    cache: &EvalCache,
) -> Result<Report> {
    let ids = resolve_ids(ids)?;
    let ctxs = primes.iter().map(|&p| PrimeCtx::new(p)).collect::<Result<Vec<_>>>()?;
    let mut all = Vec::new();
    for id in &ids {
        all.extend(instances(id, bounds)?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::OutOfRange(format!("thread pool: {e}")))?;
    let outcomes = pool.install(|| {
        all.par_iter()
            .map(|inst| check(inst, &ctxs, cache))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(Report::new(bounds.clone(), primes.to_vec(), outcomes))
}
