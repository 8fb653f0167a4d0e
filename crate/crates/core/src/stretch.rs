//! Stretching functions `N ↦ g_{Nμ,Nν}^{Nλ}`: sampling, exact quasipolynomial
//! fits, the saturation and positivity hypotheses, and their shift indices.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::engine::{kron_with, select_method, Method};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::partition::KronTriple;
use crate::poly::{int, Polynomial, Rational};
use crate::quasi::{QuasiPolynomial, ShapeDecomposition};
use crate::Coeff;

pub const DEFAULT_PERIOD: usize = 2;
pub const DEFAULT_DEGREE: usize = 2;
pub const DEFAULT_CAP: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StretchSamples {
    pub triple: KronTriple,
    /// `(N, g̃(N))` for `N = 1, …, N_max`.
    pub values: Vec<(u64, Coeff)>,
    pub method: Method,
}

impl StretchSamples {
    pub fn n_max(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn value(&self, n: u64) -> Option<Coeff> {
        self.values
            .get((n as usize).checked_sub(1)?)
            .map(|&(_, g)| g)
    }
}

/// Samples with the default method for the shapes of `t`, using a default
/// oracle when no lattice-point method applies.
pub fn sample_stretch(t: &KronTriple, n_max: u64) -> Result<StretchSamples> {
    sample_stretch_with(t, n_max, None, &Oracle::default())
}

/// Samples with `method`, or with [`select_method`] when `None`.
pub fn sample_stretch_with(
    t: &KronTriple,
    n_max: u64,
    method: Option<Method>,
    oracle: &Oracle,
) -> Result<StretchSamples> {
    if n_max == 0 {
        return Err(Error::Parameter("N_max must be at least 1".into()));
    }
    let method = method.unwrap_or_else(|| select_method(t));
    let values = (1..=n_max)
        .map(|n| Ok((n, kron_with(&t.stretch(n)?, method, oracle)?)))
        .collect::<Result<_>>()?;
    Ok(StretchSamples {
        triple: t.clone(),
        values,
        method,
    })
}

/// Smallest `N_max` accepted by [`fit_quasipolynomial`].
pub fn min_samples(period: usize, degree: usize) -> usize {
    period * (degree + 1) + period
}

pub fn fit_quasipolynomial(
    s: &StretchSamples,
    period: usize,
    degree: usize,
) -> Result<QuasiPolynomial> {
    let points: Vec<(u64, Rational)> = s
        .values
        .iter()
        .map(|&(n, g)| (n, Rational::from_integer(BigInt::from(g))))
        .collect();
    fit_points(&points, period, degree)
}

/// Fits one polynomial of degree at most `degree` per residue class through
/// the first `degree + 1` samples of that class, then checks every other
/// sample. `points` must be `(1, f(1)), (2, f(2)), …` in order.
pub fn fit_points(
    points: &[(u64, Rational)],
    period: usize,
    degree: usize,
) -> Result<QuasiPolynomial> {
    if period == 0 {
        return Err(Error::Parameter("period must be at least 1".into()));
    }
    let needed = min_samples(period, degree);
    if points.len() < needed {
        return Err(Error::InsufficientSamples {
            needed,
            got: points.len(),
        });
    }
    for (i, (n, _)) in points.iter().enumerate() {
        if *n != i as u64 + 1 {
            return Err(Error::Parameter(format!(
                "sample {i} is at N = {n}, expected N = {}",
                i + 1
            )));
        }
    }
    let mut branches = Vec::with_capacity(period);
    for r in 1..=period {
        let class: Vec<(i64, Rational)> = points
            .iter()
            .skip(r - 1)
            .step_by(period)
            .map(|(n, v)| (*n as i64, v.clone()))
            .collect();
        branches.push(Polynomial::interpolate(&class[..=degree]));
    }
    let f = QuasiPolynomial::new(branches);
    for (n, v) in points {
        let fitted = f.evaluate(*n);
        if &fitted != v {
            return Err(Error::FitMismatch {
                n: *n,
                fitted: fitted.to_string(),
                sampled: v.to_string(),
            });
        }
    }
    Ok(f)
}

/// Writes a period-2 quasipolynomial of degree at most 2 as
/// `Q·N²/4 + L·N/2 + Δ(N)` with integral `Q`, `L`.
pub fn decompose_shape(f: &QuasiPolynomial) -> Result<ShapeDecomposition> {
    if f.period() != 2 {
        return Err(Error::ShapeDecomposition(format!(
            "period is {}, need 2",
            f.period()
        )));
    }
    if f.max_degree().unwrap_or(0) > 2 {
        return Err(Error::ShapeDecomposition(format!(
            "degree is {}, need at most 2",
            f.max_degree().unwrap_or(0)
        )));
    }
    let (odd, even) = (f.branch(1), f.branch(2));
    for (i, name) in [(2, "quadratic"), (1, "linear")] {
        if odd.coeff(i) != even.coeff(i) {
            return Err(Error::ShapeDecomposition(format!(
                "branches disagree in the {name} coefficient: {} vs {}",
                odd.coeff(i),
                even.coeff(i)
            )));
        }
    }
    let q = odd.coeff(2) * int(4);
    let l = odd.coeff(1) * int(2);
    if !q.is_integer() || !l.is_integer() {
        return Err(Error::ShapeDecomposition(format!(
            "Q = {q} or L = {l} is not an integer"
        )));
    }
    Ok(ShapeDecomposition {
        q: q.to_integer(),
        l: l.to_integer(),
        delta_even: even.coeff(0),
        delta_odd: odd.coeff(0),
    })
}

/// `N²/4·Q + N/2·(L + Q) + c`, the right-hand side of the shift identity for
/// `g̃(N + 1)`. With `c = g̃(1)` it matches `g̃(N + 1)` for even `N`; for odd
/// `N` the constant is `Q/4 + L/2 + Δ_even`.
pub fn shifted_shape_value(d: &ShapeDecomposition, n: u64, c: &Rational) -> Rational {
    let x = int(n as i64);
    let q = Rational::from_integer(d.q.clone());
    let l = Rational::from_integer(d.l.clone());
    &x * &x / int(4) * &q + &x / int(2) * (l + &q) + c
}

/// False exactly when `f(1) = 0` while the branch through `N = 1` is not
/// identically zero.
pub fn check_strong_sh(f: &QuasiPolynomial) -> bool {
    !(f.evaluate(1).is_zero() && !f.branch(1).is_zero())
}

pub fn check_strong_ph2(f: &QuasiPolynomial) -> bool {
    f.branches().iter().all(Polynomial::all_coeffs_nonnegative)
}

/// Where a branch has to be positive for the quasipolynomial to count as saturated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SaturationDomain {
    /// Every integer `n ≥ 1`.
    #[default]
    Literal,
    /// Only the integers `n ≥ 1` in the branch's own residue class.
    Class,
}

impl std::str::FromStr for SaturationDomain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(SaturationDomain::Literal),
            "class" => Ok(SaturationDomain::Class),
            _ => Err(Error::Parameter(format!("unknown saturation domain {s:?}"))),
        }
    }
}

/// Every branch that is not identically zero is positive on its domain.
pub fn is_saturated(f: &QuasiPolynomial, domain: SaturationDomain) -> bool {
    let k = f.period() as u64;
    f.branches().iter().enumerate().all(|(i, b)| {
        b.is_zero()
            || match domain {
                SaturationDomain::Literal => b.positive_on_integers(1, 0),
                SaturationDomain::Class => b.positive_on_integers(k, (i as u64 + 1) % k),
            }
    })
}

/// Result of a capped search for the smallest good shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Index {
    Value(u64),
    ExceededCap(u64),
}

impl Index {
    pub fn value(self) -> Option<u64> {
        match self {
            Index::Value(v) => Some(v),
            Index::ExceededCap(_) => None,
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Value(v) => write!(f, "{v}"),
            Index::ExceededCap(cap) => write!(f, ">{cap}"),
        }
    }
}

fn first_shift(f: &QuasiPolynomial, cap: u64, good: impl Fn(&QuasiPolynomial) -> bool) -> Index {
    (0..=cap)
        .find(|&s| good(&f.shift(s)))
        .map_or(Index::ExceededCap(cap), Index::Value)
}

/// Smallest `s ≥ 0` such that `N ↦ f(N + s)` is saturated.
pub fn saturation_index(f: &QuasiPolynomial, cap: u64, domain: SaturationDomain) -> Index {
    first_shift(f, cap, |g| is_saturated(g, domain))
}

/// Smallest `p ≥ 0` such that `N ↦ f(N + p)` has no negative coefficient.
pub fn positivity_index(f: &QuasiPolynomial, cap: u64) -> Index {
    first_shift(f, cap, check_strong_ph2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisConfig {
    pub n_max: u64,
    pub period: usize,
    pub degree: usize,
    pub cap: u64,
    pub domain: SaturationDomain,
    /// `None` picks the method from the shapes.
    pub method: Option<Method>,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            n_max: min_samples(DEFAULT_PERIOD, DEFAULT_DEGREE) as u64,
            period: DEFAULT_PERIOD,
            degree: DEFAULT_DEGREE,
            cap: DEFAULT_CAP,
            domain: SaturationDomain::Literal,
            method: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub samples: StretchSamples,
    pub quasipolynomial: QuasiPolynomial,
    pub strong_sh_holds: bool,
    pub strong_ph2_holds: bool,
    pub saturation_domain: SaturationDomain,
    pub saturation_index: Index,
    /// The index under the other domain, when it differs.
    pub saturation_index_other: Option<Index>,
    pub positivity_index: Index,
    /// Present for period-2 fits whose branches share their top coefficients.
    pub shape: Option<ShapeDecomposition>,
}

pub fn analyze_samples(samples: StretchSamples, cfg: &AnalysisConfig) -> Result<HypothesisReport> {
    let f = fit_quasipolynomial(&samples, cfg.period, cfg.degree)?;
    let other_domain = match cfg.domain {
        SaturationDomain::Literal => SaturationDomain::Class,
        SaturationDomain::Class => SaturationDomain::Literal,
    };
    let saturation = saturation_index(&f, cfg.cap, cfg.domain);
    let other = saturation_index(&f, cfg.cap, other_domain);
    let report = HypothesisReport {
        strong_sh_holds: check_strong_sh(&f),
        strong_ph2_holds: check_strong_ph2(&f),
        saturation_domain: cfg.domain,
        saturation_index: saturation,
        saturation_index_other: (other != saturation).then_some(other),
        positivity_index: positivity_index(&f, cfg.cap),
        shape: decompose_shape(&f).ok(),
        quasipolynomial: f,
        samples,
    };
    debug_assert!(!report.strong_ph2_holds || report.strong_sh_holds);
    Ok(report)
}

/// Sample, fit, check both hypotheses and compute both indices.
pub fn analyze_triple(
    t: &KronTriple,
    cfg: &AnalysisConfig,
    oracle: &Oracle,
) -> Result<HypothesisReport> {
    let samples = sample_stretch_with(t, cfg.n_max, cfg.method, oracle)?;
    analyze_samples(samples, cfg)
}

/// Whether `f` agrees with `Q·N²/4 + L·N/2 + Δ(N)` at every `N ≤ n_max`.
pub fn shape_reproduces(f: &QuasiPolynomial, d: &ShapeDecomposition, n_max: u64) -> bool {
    (1..=n_max).all(|n| f.evaluate(n) == d.evaluate(n))
}

/// Helper for callers holding `Q` and `L` as rationals.
pub fn shape_constant(d: &ShapeDecomposition) -> Rational {
    Rational::from_integer(d.q.clone()) / int(4) + Rational::from_integer(d.l.clone()) / int(2)
}

/// `Δ_even = 1`: stretching by an even factor lands on the sublattice where `Δ` is normalized.
pub fn delta_even_is_one(d: &ShapeDecomposition) -> bool {
    d.delta_even.is_one()
}
