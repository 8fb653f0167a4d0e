//! Reduced Kronecker coefficients `ḡ_{α,β}^γ`, the stable values of
//! `g_{(n−|α|,α),(n−|β|,β)}^{(n−|γ|,γ)}` as `n` grows, and the alternating
//! sums that recover ordinary Kronecker coefficients from them.

use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::partition::{KronTriple, Partition};
use crate::Coeff;

/// Index `(γ; α, β)` of a reduced Kronecker coefficient. Weights are unconstrained.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedIndex {
    pub gamma: Partition,
    pub alpha: Partition,
    pub beta: Partition,
}

impl ReducedIndex {
    pub fn new(gamma: Partition, alpha: Partition, beta: Partition) -> Self {
        ReducedIndex { gamma, alpha, beta }
    }

    /// `|α| + |β| + α₁ + β₁ + 2|γ|`: from this `n` on the sequence is constant.
    pub fn stable_weight(&self) -> u64 {
        self.alpha.weight()
            + self.beta.weight()
            + self.alpha.part(1)
            + self.beta.part(1)
            + 2 * self.gamma.weight()
    }

    /// The ordinary triple `((n−|γ|,γ); (n−|α|,α), (n−|β|,β))`.
    pub fn padded_triple(&self, n: u64) -> Result<KronTriple> {
        KronTriple::new(
            self.gamma.prepend_to_weight(n)?,
            self.alpha.prepend_to_weight(n)?,
            self.beta.prepend_to_weight(n)?,
        )
    }
}

/// `ḡ_{(μ₂),(ν₂)}^{(λ₂,λ₃)}`: the number of integer points `(x, y)` with
///
/// ```text
/// x ≥ μ₂,   y ≥ 0,
/// μ₂ + ν₂ − λ₂ ≤ x + y ≤ μ₂ + ν₂ − λ₃,
/// λ₂ ≤ x − y ≤ λ₂ + λ₃.
/// ```
///
/// The system assumes `μ₂ ≥ ν₂`; the arguments are swapped otherwise.
pub fn rkron_one_row(mu2: u64, nu2: u64, lambda2: u64, lambda3: u64) -> Result<Coeff> {
    if lambda2 < lambda3 {
        return Err(Error::Shape(format!(
            "(lambda2, lambda3) = ({lambda2}, {lambda3}) is not a partition"
        )));
    }
    let (mu2, nu2) = if mu2 >= nu2 { (mu2, nu2) } else { (nu2, mu2) };
    let (m, s) = (mu2 as i128, (mu2 + nu2) as i128);
    let (l2, l3) = (lambda2 as i128, lambda3 as i128);
    // x + y ≤ s − λ₃ with y ≥ 0 bounds x, and x ≥ 0 bounds y the same way
    let top = s - l3;
    let mut count: Coeff = 0;
    for x in m..=top {
        for y in 0..=top {
            let (sum, diff) = (x + y, x - y);
            if s - l2 <= sum && sum <= top && l2 <= diff && diff <= l2 + l3 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `λ^{†i}`: the first `i − 1` parts incremented and the `i`-th part removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dagger {
    /// The resulting sequence, without trailing zeros.
    pub parts: Vec<u64>,
    /// Whether `parts` is nonincreasing.
    pub valid: bool,
}

impl Dagger {
    pub fn partition(&self) -> Option<Partition> {
        self.valid
            .then(|| Partition::new(self.parts.clone()).expect("checked valid"))
    }
}

pub fn dagger(lambda: &Partition, i: usize) -> Dagger {
    assert!(i >= 1, "dagger index starts at 1");
    let padded = lambda
        .padded(lambda.length().max(i))
        .expect("padding to at least the length");
    let mut parts: Vec<u64> = padded[..i - 1].iter().map(|p| p + 1).collect();
    parts.extend_from_slice(&padded[i..]);
    while parts.last() == Some(&0) {
        parts.pop();
    }
    let valid = parts.windows(2).all(|w| w[0] >= w[1]);
    Dagger { parts, valid }
}

fn check_two_two_row(t: &KronTriple) -> Result<()> {
    if !t.is_two_two_row() {
        return Err(Error::Shape(format!(
            "{t}: need l(mu) <= 2, l(nu) <= 2, l(lambda) <= 3"
        )));
    }
    Ok(())
}

/// `g_{μ,ν}^λ = ḡ^{(λ₂,λ₃)} − ḡ^{(λ₁+1,λ₃)} + ḡ^{(λ₁+1,λ₂+1)}`, each term
/// indexed by `(μ₂), (ν₂)` and counted with [`rkron_one_row`].
pub fn kron_from_reduced_2x2(t: &KronTriple) -> Result<Coeff> {
    check_two_two_row(t)?;
    let (m2, n2) = (t.mu.part(2), t.nu.part(2));
    let (l1, l2, l3) = (t.lambda.part(1), t.lambda.part(2), t.lambda.part(3));
    let a = rkron_one_row(m2, n2, l2, l3)?;
    let b = rkron_one_row(m2, n2, l1 + 1, l3)?;
    let c = rkron_one_row(m2, n2, l1 + 1, l2 + 1)?;
    let total = a + c;
    assert!(
        total >= b,
        "negative alternating sum {a} - {b} + {c} for {t}"
    );
    Ok(total - b)
}

/// `g_{μ,ν}^λ = Σ_{i=1}^{l1·l2−1} (−1)^{i+1} ḡ_{μ̄,ν̄}^{λ^{†i}}` with
/// `μ̄ = μ^{†1}`, `ν̄ = ν^{†1}`, each reduced coefficient from
/// [`rkron_stabilized`].
pub fn kron_from_reduced_general(
    oracle: &Oracle,
    t: &KronTriple,
    l1: usize,
    l2: usize,
) -> Result<Coeff> {
    if t.mu.length() > l1 || t.nu.length() > l2 || t.lambda.length() > l1 * l2 {
        return Err(Error::Shape(format!(
            "{t}: need l(mu) <= {l1}, l(nu) <= {l2}, l(lambda) <= {}",
            l1 * l2
        )));
    }
    let mu_bar = t.mu.tail();
    let nu_bar = t.nu.tail();
    let mut total: i128 = 0;
    for i in 1..l1 * l2 {
        let d = dagger(&t.lambda, i);
        // λ_{i-1} + 1 > λ_{i+1}, so every λ^{†i} is a partition
        let gamma = d
            .partition()
            .expect("lambda-dagger of a partition is a partition");
        let g = rkron_stabilized(
            oracle,
            &ReducedIndex::new(gamma, mu_bar.clone(), nu_bar.clone()),
        )?;
        let g = g as i128;
        total += if i % 2 == 1 { g } else { -g };
    }
    assert!(total >= 0, "negative alternating sum {total} for {t}");
    Ok(total as Coeff)
}

/// The padded Kronecker coefficient at weight `n`, via the character oracle.
pub fn rkron_at(oracle: &Oracle, idx: &ReducedIndex, n: u64) -> Result<Coeff> {
    oracle.kron(&idx.padded_triple(n)?)
}

/// `ḡ_{α,β}^γ` as the Kronecker coefficient at the stable weight `n₀`,
/// checked against the value at `n₀ + 1`.
pub fn rkron_stabilized(oracle: &Oracle, idx: &ReducedIndex) -> Result<Coeff> {
    let n0 = idx.stable_weight();
    if n0 + 1 > oracle.max_weight() {
        return Err(Error::OracleOverflow {
            weight: n0 + 1,
            max: oracle.max_weight(),
        });
    }
    let at_n0 = rkron_at(oracle, idx, n0)?;
    let at_next = rkron_at(oracle, idx, n0 + 1)?;
    assert_eq!(
        at_n0, at_next,
        "sequence not yet stable at n0 = {n0} for {idx:?}"
    );
    Ok(at_n0)
}

/// `c_{μ,ν}^λ` computed as the reduced Kronecker coefficient `ḡ_{μ,ν}^λ`.
pub fn murnaghan_littlewood_lr(
    oracle: &Oracle,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<Coeff> {
    if lambda.weight() != mu.weight() + nu.weight() {
        return Err(Error::WeightMismatch(format!(
            "|lambda| = {} but |mu| + |nu| = {}",
            lambda.weight(),
            mu.weight() + nu.weight()
        )));
    }
    rkron_stabilized(
        oracle,
        &ReducedIndex::new(lambda.clone(), mu.clone(), nu.clone()),
    )
}
