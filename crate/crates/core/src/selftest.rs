//! Three-way agreement sweep over every two-two-row triple up to a weight:
//! Rosas lattice points, reduced coefficients and the character oracle.

use rayon::prelude::*;

use crate::error::Result;
use crate::kron2row::kron_two_row;
use crate::oracle::Oracle;
use crate::partition::{partitions_bounded, KronTriple};
use crate::reduced::kron_from_reduced_2x2;
use crate::Coeff;

/// A deliberate error in the Rosas value, for checking that the sweep notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Adds one whenever `λ₃` is positive.
    RosasOffByOne,
}

impl Fault {
    fn apply(self, t: &KronTriple, g: Coeff) -> Coeff {
        match self {
            Fault::RosasOffByOne if t.lambda.part(3) > 0 => g + 1,
            Fault::RosasOffByOne => g,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub triple: KronTriple,
    pub rosas: Coeff,
    pub reduced: Coeff,
    pub oracle: Coeff,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.rosas == self.reduced && self.reduced == self.oracle
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestReport {
    pub max_weight: u64,
    /// Every triple checked, sorted.
    pub comparisons: Vec<Comparison>,
}

impl SelftestReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &Comparison> {
        self.comparisons.iter().filter(|c| !c.agrees())
    }

    pub fn passed(&self) -> bool {
        self.mismatches().next().is_none()
    }
}

/// All triples of weight `1 ≤ n ≤ max_weight` with `ℓ(μ), ℓ(ν) ≤ 2`, `ℓ(λ) ≤ 3`.
pub fn two_two_row_triples(max_weight: u64) -> Vec<KronTriple> {
    let mut out = Vec::new();
    for n in 1..=max_weight {
        let two = partitions_bounded(n, n, 2);
        for lambda in partitions_bounded(n, n, 3) {
            for mu in &two {
                for nu in &two {
                    out.push(
                        KronTriple::new(lambda.clone(), mu.clone(), nu.clone())
                            .expect("same weight"),
                    );
                }
            }
        }
    }
    out
}

pub fn selftest(max_weight: u64, oracle: &Oracle, fault: Option<Fault>) -> Result<SelftestReport> {
    let mut comparisons = two_two_row_triples(max_weight)
        .into_par_iter()
        .map(|t| {
            let rosas = kron_two_row(&t)?;
            let rosas = fault.map_or(rosas, |f| f.apply(&t, rosas));
            Ok(Comparison {
                rosas,
                reduced: kron_from_reduced_2x2(&t)?,
                oracle: oracle.kron(&t)?,
                triple: t,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    comparisons.sort_by(|a, b| a.triple.cmp(&b.triple));
    Ok(SelftestReport {
        max_weight,
        comparisons,
    })
}
