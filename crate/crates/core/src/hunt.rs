//! Exhaustive searches for Strong SH and Strong PH2 counter-examples among
//! two-two-row triples, and the closed-form family they are checked against.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{kron_with, Method};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::partition::{KronTriple, Partition};
use crate::stretch::{
    analyze_samples, min_samples, sample_stretch_with, AnalysisConfig, HypothesisReport,
    SaturationDomain, DEFAULT_CAP, DEFAULT_DEGREE, DEFAULT_PERIOD,
};
use crate::Coeff;

/// All triples with `ℓ(μ), ℓ(ν) ≤ 2`, `ℓ(λ) ≤ 3`, `λ₁ ≤ max_lambda1` and,
/// optionally, `|λ| ≤ max_weight`.
///
/// A point is `(λ₁, λ₂, λ₃, μ₂, ν₂)`; `μ₁` and `ν₁` follow from `|μ| = |ν| = |λ|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBox {
    pub max_lambda1: u64,
    pub max_weight: Option<u64>,
}

impl SearchBox {
    pub fn new(max_lambda1: u64) -> Result<Self> {
        if max_lambda1 == 0 {
            return Err(Error::Parameter("max_lambda1 must be at least 1".into()));
        }
        Ok(SearchBox {
            max_lambda1,
            max_weight: None,
        })
    }

    /// Also bound the weight.
    pub fn with_max_weight(self, max_weight: u64) -> Self {
        SearchBox {
            max_weight: Some(max_weight),
            ..self
        }
    }

    pub fn contains(&self, t: &KronTriple) -> bool {
        t.is_two_two_row()
            && t.weight() > 0
            && t.lambda.part(1) <= self.max_lambda1
            && self.max_weight.map_or(true, |w| t.weight() <= w)
    }

    /// The triples with a given `λ₁`, in lexicographic order of the parameters.
    pub fn slice(&self, lambda1: u64) -> Vec<KronTriple> {
        let mut out = Vec::new();
        for l2 in 0..=lambda1 {
            for l3 in 0..=l2 {
                let n = lambda1 + l2 + l3;
                if self.max_weight.is_some_and(|w| n > w) {
                    continue;
                }
                let lambda = Partition::from_padded(vec![lambda1, l2, l3]).expect("nonincreasing");
                for mu2 in 0..=n / 2 {
                    let mu = Partition::from_padded(vec![n - mu2, mu2]).expect("mu2 <= n/2");
                    for nu2 in 0..=n / 2 {
                        let nu = Partition::from_padded(vec![n - nu2, nu2]).expect("nu2 <= n/2");
                        out.push(
                            KronTriple::new(lambda.clone(), mu.clone(), nu).expect("equal weights"),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn triples(&self) -> Vec<KronTriple> {
        (1..=self.max_lambda1)
            .flat_map(|l1| self.slice(l1))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HuntMode {
    Sh,
    Ph2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HuntConfig {
    /// Stretches sampled to detect a Strong SH candidate.
    pub n_max: u64,
    pub period: usize,
    pub degree: usize,
    pub cap: u64,
    pub domain: SaturationDomain,
    /// How each `g` is computed: [`Method::Rosas`] or [`Method::Reduced`].
    pub method: Method,
}

impl Default for HuntConfig {
    fn default() -> Self {
        HuntConfig {
            n_max: 6,
            period: DEFAULT_PERIOD,
            degree: DEFAULT_DEGREE,
            cap: DEFAULT_CAP,
            domain: SaturationDomain::Literal,
            method: Method::Rosas,
        }
    }
}

impl HuntConfig {
    /// Confirmation fits use at least as many samples as the fit requires.
    fn analysis(&self) -> AnalysisConfig {
        AnalysisConfig {
            n_max: self.n_max.max(min_samples(self.period, self.degree) as u64),
            period: self.period,
            degree: self.degree,
            cap: self.cap,
            domain: self.domain,
            method: Some(self.method),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub triple: KronTriple,
    pub report: HypothesisReport,
}

/// Whether the hits match the expected description.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Classification {
    /// Hits outside the expected pattern.
    pub violations: Vec<KronTriple>,
    /// Expected triples inside the box that were not hit.
    pub missing: Vec<KronTriple>,
}

impl Classification {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.missing.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuntOutcome {
    pub mode: HuntMode,
    pub examined: usize,
    /// Sorted by triple.
    pub hits: Vec<Hit>,
    pub classification: Classification,
}

impl HuntOutcome {
    pub fn hit_triples(&self) -> Vec<KronTriple> {
        self.hits.iter().map(|h| h.triple.clone()).collect()
    }
}

fn sweep<F>(search: &SearchBox, probe: F) -> Result<(usize, Vec<Hit>)>
where
    F: Fn(&KronTriple) -> Result<Option<Hit>> + Sync,
{
    let per_slice: Vec<(usize, Vec<Hit>)> = (1..=search.max_lambda1)
        .into_par_iter()
        .map(|l1| {
            let slice = search.slice(l1);
            let mut hits = Vec::new();
            for t in &slice {
                if let Some(h) = probe(t)? {
                    hits.push(h);
                }
            }
            Ok((slice.len(), hits))
        })
        .collect::<Result<_>>()?;
    let examined = per_slice.iter().map(|(n, _)| n).sum();
    let mut hits: Vec<Hit> = per_slice.into_iter().flat_map(|(_, h)| h).collect();
    hits.sort_by(|a, b| a.triple.cmp(&b.triple));
    Ok((examined, hits))
}

/// Triples with `g̃(1) = 0` and `g̃(N) > 0` for some `N ≤ n_max` whose fitted
/// quasipolynomial fails Strong SH.
pub fn hunt_strong_sh(
    search: &SearchBox,
    cfg: &HuntConfig,
    oracle: &Oracle,
) -> Result<HuntOutcome> {
    let analysis = cfg.analysis();
    let (examined, hits) = sweep(search, |t| {
        if kron_with(t, cfg.method, oracle)? != 0 {
            return Ok(None);
        }
        let mut positive_later = false;
        for n in 2..=cfg.n_max {
            if kron_with(&t.stretch(n)?, cfg.method, oracle)? > 0 {
                positive_later = true;
                break;
            }
        }
        if !positive_later {
            return Ok(None);
        }
        let samples = sample_stretch_with(t, analysis.n_max, analysis.method, oracle)?;
        let report = analyze_samples(samples, &analysis)?;
        Ok((!report.strong_sh_holds).then(|| Hit {
            triple: t.clone(),
            report,
        }))
    })?;
    let found: BTreeSet<KronTriple> = hits.iter().map(|h| h.triple.clone()).collect();
    let expected: BTreeSet<KronTriple> = family_triples_in(search)
        .into_iter()
        .filter(|t| {
            // detection needs a positive sample; the family has g̃(2) = 2
            cfg.n_max >= 2 && search.contains(t)
        })
        .collect();
    let classification = Classification {
        violations: found
            .iter()
            .filter(|t| !expected.contains(*t) || !codimension_two_pattern(t))
            .cloned()
            .collect(),
        missing: expected.difference(&found).cloned().collect(),
    };
    Ok(HuntOutcome {
        mode: HuntMode::Sh,
        examined,
        hits,
        classification,
    })
}

/// Triples whose fitted quasipolynomial has a negative coefficient.
pub fn hunt_strong_ph2(
    search: &SearchBox,
    cfg: &HuntConfig,
    oracle: &Oracle,
) -> Result<HuntOutcome> {
    let analysis = cfg.analysis();
    let (examined, hits) = sweep(search, |t| {
        let samples = sample_stretch_with(t, analysis.n_max, analysis.method, oracle)?;
        let report = analyze_samples(samples, &analysis)?;
        Ok((!report.strong_ph2_holds).then(|| Hit {
            triple: t.clone(),
            report,
        }))
    })?;
    let classification = Classification {
        violations: hits
            .iter()
            .filter(|h| !ph2_congruences(&h.triple))
            .map(|h| h.triple.clone())
            .collect(),
        missing: Vec::new(),
    };
    Ok(HuntOutcome {
        mode: HuntMode::Ph2,
        examined,
        hits,
        classification,
    })
}

pub fn hunt(
    mode: HuntMode,
    search: &SearchBox,
    cfg: &HuntConfig,
    oracle: &Oracle,
) -> Result<HuntOutcome> {
    match mode {
        HuntMode::Sh => hunt_strong_sh(search, cfg, oracle),
        HuntMode::Ph2 => hunt_strong_ph2(search, cfg, oracle),
    }
}

/// `λ₁ ≡ λ₂ ≡ λ₃ ≡ μ₂ + ν₂ + 1 ≡ 0 (mod 2)`.
pub fn ph2_congruences(t: &KronTriple) -> bool {
    let l = &t.lambda;
    l.part(1) % 2 == 0
        && l.part(2) % 2 == 0
        && l.part(3) % 2 == 0
        && (t.mu.part(2) + t.nu.part(2) + 1) % 2 == 0
}

/// `μ₁ = μ₂ = ν₂ + 1` and `λ₂ ≡ λ₃ ≡ 0 (mod 2)`, for `t` or its `μ ↔ ν` swap.
pub fn codimension_two_pattern(t: &KronTriple) -> bool {
    let holds = |t: &KronTriple| {
        t.mu.part(1) == t.mu.part(2)
            && t.mu.part(2) == t.nu.part(2) + 1
            && t.lambda.part(2) % 2 == 0
            && t.lambda.part(3) % 2 == 0
    };
    holds(t) || holds(&t.swapped())
}

fn check_family_parameters(i: u64, j: u64, k: u64) -> Result<()> {
    if !(i > j && j > 0) {
        return Err(Error::Parameter(format!(
            "need i > j > 0, got i = {i}, j = {j}"
        )));
    }
    if k <= 2 * i + j {
        return Err(Error::Parameter(format!(
            "need k > 2i + j = {}, got k = {k}",
            2 * i + j
        )));
    }
    Ok(())
}

/// `((2k−2i−2j, 2i, 2j); (k, k), (k+1, k−1))`.
pub fn family_triple(i: u64, j: u64, k: u64) -> Result<KronTriple> {
    check_family_parameters(i, j, k)?;
    KronTriple::new(
        Partition::new(vec![2 * k - 2 * i - 2 * j, 2 * i, 2 * j])?,
        Partition::new(vec![k, k])?,
        Partition::new(vec![k + 1, k - 1])?,
    )
}

/// The family's stretching function: `N/2 + 1` for even `N`, `N/2 − 1/2` for odd `N`.
pub fn family_value(n: u64) -> Coeff {
    if n % 2 == 0 {
        (n / 2 + 1) as Coeff
    } else {
        ((n - 1) / 2) as Coeff
    }
}

/// `(i, j, k)` when `t` is exactly [`family_triple`]`(i, j, k)`.
pub fn family_parameters(t: &KronTriple) -> Option<(u64, u64, u64)> {
    if !t.is_two_two_row() || t.lambda.length() != 3 {
        return None;
    }
    let (l2, l3) = (t.lambda.part(2), t.lambda.part(3));
    if l2 % 2 != 0 || l3 % 2 != 0 || t.weight() % 2 != 0 {
        return None;
    }
    let (i, j, k) = (l2 / 2, l3 / 2, t.weight() / 2);
    let candidate = family_triple(i, j, k).ok()?;
    (&candidate == t).then_some((i, j, k))
}

/// Members of the family, and their `μ ↔ ν` swaps, with `λ₁ ≤ max_lambda1`.
pub fn family_triples_in(search: &SearchBox) -> Vec<KronTriple> {
    let m = search.max_lambda1;
    let mut out = Vec::new();
    for i in 2..=m / 2 {
        for j in 1..i {
            // λ₁ = 2(k − i − j) must be at least λ₂ = 2i and at most m
            for k in (2 * i + j + 1)..=(m / 2 + i + j) {
                let t = family_triple(i, j, k).expect("parameters in range");
                if search.contains(&t) {
                    out.push(t.swapped());
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}

/// Compares `g_{Nα,Nβ}^{Nγ}` with the closed form for `N = 1, …, n_max`.
pub fn verify_family(i: u64, j: u64, k: u64, n_max: u64) -> Result<bool> {
    let t = family_triple(i, j, k)?;
    for n in 1..=n_max {
        if kron_with(&t.stretch(n)?, Method::Rosas, &Oracle::new(0))? != family_value(n) {
            return Ok(false);
        }
    }
    Ok(true)
}
