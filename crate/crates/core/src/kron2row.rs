//! Kronecker coefficients `g_{μ,ν}^λ` with `ℓ(μ), ℓ(ν) ≤ 2` and `ℓ(λ) ≤ 3`,
//! counted as a signed difference of lattice points in two rectangles.
//!
//! With `μ₂ ≥ ν₂`, put
//!
//! ```text
//! Z  = { (x, y) : x + y ≤ μ₂ + ν₂ + 1,  y − x ≥ μ₂ − ν₂ + 1 }
//! L  = { (x, y) ∈ ℤ² : x + y ≡ μ₂ + ν₂ + 1 (mod 2) }
//! R₊ = [λ₃, λ₂] × [1 + λ₂, 1 + λ₂ + λ₃]
//! R₋ = [λ₃, λ₂] × [2 + λ₁, 2 + λ₁ + λ₃]
//! ```
//!
//! Then `g = #(R₊ ∩ Z ∩ L) − #(R₋ ∩ Z ∩ L)`.
//!
//! The module also carries the determinant-twist reduction that removes the
//! last part of `λ` when `ℓ(λ) = ℓ(μ)·ℓ(ν)`.

use crate::error::{Error, Result};
use crate::partition::{KronTriple, Partition};
use crate::Coeff;

/// The regions `Z`, `L`, `R₊`, `R₋` attached to a normalized triple (`μ₂ ≥ ν₂`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RosasGeometry {
    pub mu2: i128,
    pub nu2: i128,
    pub lambda1: i128,
    pub lambda2: i128,
    pub lambda3: i128,
}

/// A closed axis-aligned box of integer points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rect {
    pub x: (i128, i128),
    pub y: (i128, i128),
}

impl RosasGeometry {
    /// Validates the shapes and swaps `μ`, `ν` if needed so that `μ₂ ≥ ν₂`.
    pub fn new(t: &KronTriple) -> Result<Self> {
        check_two_two_row(t)?;
        let (mut mu2, mut nu2) = (t.mu.part(2) as i128, t.nu.part(2) as i128);
        if mu2 < nu2 {
            std::mem::swap(&mut mu2, &mut nu2);
        }
        Ok(RosasGeometry {
            mu2,
            nu2,
            lambda1: t.lambda.part(1) as i128,
            lambda2: t.lambda.part(2) as i128,
            lambda3: t.lambda.part(3) as i128,
        })
    }

    pub fn in_z(&self, x: i128, y: i128) -> bool {
        x + y <= self.mu2 + self.nu2 + 1 && y - x >= self.mu2 - self.nu2 + 1
    }

    /// Parity class of `L`: `x + y ≡ parity (mod 2)`.
    pub fn l_parity(&self) -> u8 {
        ((self.mu2 + self.nu2 + 1).rem_euclid(2)) as u8
    }

    pub fn in_l(&self, x: i128, y: i128) -> bool {
        (x + y).rem_euclid(2) as u8 == self.l_parity()
    }

    pub fn r_plus(&self) -> Rect {
        Rect {
            x: (self.lambda3, self.lambda2),
            y: (1 + self.lambda2, 1 + self.lambda2 + self.lambda3),
        }
    }

    pub fn r_minus(&self) -> Rect {
        Rect {
            x: (self.lambda3, self.lambda2),
            y: (2 + self.lambda1, 2 + self.lambda1 + self.lambda3),
        }
    }

    /// `#(rect ∩ Z ∩ L)`, visiting every integer point of the rectangle.
    pub fn count_pointwise(&self, rect: Rect) -> Coeff {
        let mut count: Coeff = 0;
        for y in rect.y.0..=rect.y.1 {
            for x in rect.x.0..=rect.x.1 {
                if self.in_z(x, y) && self.in_l(x, y) {
                    count += 1;
                }
            }
        }
        count
    }

    /// `#(rect ∩ Z ∩ L)`, one horizontal row at a time. On row `y`, `Z` cuts
    /// the `x` range down to `x ≤ min(μ₂+ν₂+1−y, y−μ₂+ν₂−1)`, and the points of
    /// `L` on the remaining segment are counted in closed form.
    pub fn count_by_rows(&self, rect: Rect) -> Coeff {
        let s = self.mu2 + self.nu2;
        let d = self.mu2 - self.nu2;
        let parity = self.l_parity();
        let mut count: Coeff = 0;
        for y in rect.y.0..=rect.y.1 {
            let hi = rect.x.1.min(s + 1 - y).min(y - d - 1);
            if hi >= rect.x.0 {
                count += segment_parity_count(rect.x.0, hi, y, parity)
                    .expect("segment bounds checked above");
            }
        }
        count
    }
}

fn check_two_two_row(t: &KronTriple) -> Result<()> {
    if t.mu.length() > 2 || t.nu.length() > 2 {
        return Err(Error::Shape(format!(
            "mu = {} and nu = {} must have at most two parts",
            t.mu, t.nu
        )));
    }
    if t.lambda.length() > 3 {
        return Err(Error::Shape(format!(
            "lambda = {} must have at most three parts",
            t.lambda
        )));
    }
    Ok(())
}

/// `g_{μ,ν}^λ` for `ℓ(μ), ℓ(ν) ≤ 2`, `ℓ(λ) ≤ 3`.
pub fn kron_two_row(t: &KronTriple) -> Result<Coeff> {
    let geom = RosasGeometry::new(t)?;
    let plus = geom.count_by_rows(geom.r_plus());
    let minus = geom.count_by_rows(geom.r_minus());
    assert!(
        plus >= minus,
        "negative lattice-point difference {plus} - {minus} for {t}"
    );
    Ok(plus - minus)
}

/// Same value as [`kron_two_row`], enumerating every point of both rectangles.
pub fn kron_two_row_pointwise(t: &KronTriple) -> Result<Coeff> {
    let geom = RosasGeometry::new(t)?;
    let plus = geom.count_pointwise(geom.r_plus());
    let minus = geom.count_pointwise(geom.r_minus());
    assert!(
        plus >= minus,
        "negative lattice-point difference {plus} - {minus} for {t}"
    );
    Ok(plus - minus)
}

/// Number of integers `x ∈ [x_lo, x_hi]` with `x + y ≡ parity (mod 2)`.
pub fn segment_parity_count(x_lo: i128, x_hi: i128, y: i128, parity: u8) -> Result<Coeff> {
    if x_lo > x_hi {
        return Err(Error::EmptyRange { lo: x_lo, hi: x_hi });
    }
    let first = x_lo + (parity as i128 - x_lo - y).rem_euclid(2);
    if first > x_hi {
        return Ok(0);
    }
    Ok(((x_hi - first) / 2 + 1) as Coeff)
}

/// `ℓ(λ) ≤ ℓ(μ)·ℓ(ν)`; when false the coefficient vanishes.
pub fn length_bound_check(t: &KronTriple) -> bool {
    t.lambda.length() <= t.mu.length() * t.nu.length()
}

/// Outcome of [`reduce_by_determinants`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    /// A smaller triple with the same coefficient.
    Triple(KronTriple),
    /// The coefficient is zero; the message names the violated inequality.
    ZeroCertificate(String),
}

/// Strips `k = λ_{mn}` columns from `λ` (which then loses its `mn`-th part),
/// `nk` columns from `μ` and `mk` columns from `ν`, leaving the Kronecker
/// coefficient unchanged. If `μ_m < nk` or `ν_n < mk` the coefficient is zero.
pub fn reduce_by_determinants(t: &KronTriple, m: usize, n: usize) -> Result<Reduction> {
    assert!(m >= 1 && n >= 1, "m and n must be positive");
    let mn = m * n;
    if t.mu.length() > m || t.nu.length() > n || t.lambda.length() > mn {
        return Err(Error::Shape(format!(
            "need l(mu) <= {m}, l(nu) <= {n}, l(lambda) <= {mn} for {t}"
        )));
    }
    let lambda = t.lambda.padded(mn)?;
    let mu = t.mu.padded(m)?;
    let nu = t.nu.padded(n)?;
    let k = lambda[mn - 1];
    let k1 = (m as u64)
        .checked_mul(k)
        .ok_or(Error::Overflow("determinant twist"))?;
    let k2 = (n as u64)
        .checked_mul(k)
        .ok_or(Error::Overflow("determinant twist"))?;
    if mu[m - 1] < k2 {
        return Ok(Reduction::ZeroCertificate(format!(
            "mu_{m} = {} < n*lambda_{mn} = {k2}",
            mu[m - 1]
        )));
    }
    if nu[n - 1] < k1 {
        return Ok(Reduction::ZeroCertificate(format!(
            "nu_{n} = {} < m*lambda_{mn} = {k1}",
            nu[n - 1]
        )));
    }
    let lambda = Partition::from_padded(lambda[..mn - 1].iter().map(|p| p - k).collect())?;
    let mu = Partition::from_padded(mu.iter().map(|p| p - k2).collect())?;
    let nu = Partition::from_padded(nu.iter().map(|p| p - k1).collect())?;
    Ok(Reduction::Triple(KronTriple::new(lambda, mu, nu)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn triple(l: Partition, m: Partition, n: Partition) -> KronTriple {
        KronTriple::new(l, m, n).unwrap()
    }

    #[test]
    fn kron_two_row_examples() {
        let cases = [
            (partition![6, 4, 2], partition![6, 6], partition![7, 5], 0),
            (partition![2, 2], partition![2, 2], partition![2, 2], 1),
            (partition![1, 1], partition![1, 1], partition![1, 1], 0),
            (
                partition![12, 8, 4],
                partition![12, 12],
                partition![14, 10],
                2,
            ),
            (partition![7], partition![7], partition![7], 1),
        ];
        for (l, m, n, g) in cases {
            let t = triple(l, m, n);
            assert_eq!(kron_two_row(&t).unwrap(), g, "{t}");
            assert_eq!(kron_two_row_pointwise(&t).unwrap(), g, "{t}");
        }
    }

    #[test]
    fn kron_two_row_rejects_long_shapes() {
        let t = triple(partition![1, 1, 1, 1], partition![2, 2], partition![2, 2]);
        assert!(matches!(kron_two_row(&t), Err(Error::Shape(_))));
        let t = triple(partition![3], partition![1, 1, 1], partition![3]);
        assert!(matches!(kron_two_row(&t), Err(Error::Shape(_))));
    }

    #[test]
    fn row_count_matches_pointwise() {
        for w in 0..=14u64 {
            for l in crate::partition::partitions_bounded(w, w, 3) {
                for m2 in 0..=w / 2 {
                    for n2 in 0..=w / 2 {
                        let mu = Partition::from_padded(vec![w - m2, m2]).unwrap();
                        let nu = Partition::from_padded(vec![w - n2, n2]).unwrap();
                        let t = triple(l.clone(), mu, nu);
                        assert_eq!(
                            kron_two_row(&t).unwrap(),
                            kron_two_row_pointwise(&t).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn alternating_family() {
        for n in 1..=10u64 {
            let p = partition![n, n];
            let t = triple(p.clone(), p.clone(), p);
            assert_eq!(kron_two_row(&t).unwrap(), (n % 2 == 0) as Coeff, "N = {n}");
        }
    }

    #[test]
    fn segment_counts() {
        assert_eq!(segment_parity_count(0, 4, 0, 0).unwrap(), 3);
        assert_eq!(segment_parity_count(0, 4, 0, 1).unwrap(), 2);
        assert_eq!(segment_parity_count(0, 0, 1, 1).unwrap(), 1);
        assert_eq!(segment_parity_count(0, 0, 1, 0).unwrap(), 0);
        assert_eq!(segment_parity_count(-3, 2, 5, 1).unwrap(), 3);
        assert!(matches!(
            segment_parity_count(2, 1, 0, 0),
            Err(Error::EmptyRange { lo: 2, hi: 1 })
        ));
    }

    #[test]
    fn segment_endpoint_rule() {
        // length/2 + {1, 1/2, 0} by how many end points lie in the parity class
        for lo in -4i128..4 {
            for hi in lo + 1..lo + 9 {
                for y in 0..2 {
                    for parity in 0..2u8 {
                        let ends = [lo, hi]
                            .iter()
                            .filter(|&&x| (x + y).rem_euclid(2) as u8 == parity)
                            .count() as i128;
                        // 2 * count = length + ends
                        let twice = (hi - lo) + ends;
                        let got = segment_parity_count(lo, hi, y, parity).unwrap() as i128;
                        assert_eq!(2 * got, twice);
                    }
                }
            }
        }
    }

    #[test]
    fn length_bound() {
        let t = triple(
            partition![1, 1, 1, 1, 1],
            partition![3, 2],
            partition![4, 1],
        );
        assert!(!length_bound_check(&t));
        let t = triple(partition![2, 2], partition![2, 2], partition![2, 2]);
        assert!(length_bound_check(&t));
        let t = triple(partition![1, 1, 1, 1], partition![2, 2], partition![2, 2]);
        assert!(length_bound_check(&t));
    }

    #[test]
    fn determinant_reduction() {
        let t = triple(partition![4, 3, 2, 1], partition![6, 4], partition![5, 5]);
        assert_eq!(
            reduce_by_determinants(&t, 2, 2).unwrap(),
            Reduction::Triple(triple(
                partition![3, 2, 1],
                partition![4, 2],
                partition![3, 3]
            ))
        );
        let t = triple(partition![2, 2, 2, 2], partition![7, 1], partition![4, 4]);
        assert!(matches!(
            reduce_by_determinants(&t, 2, 2).unwrap(),
            Reduction::ZeroCertificate(_)
        ));
        let t = triple(partition![3, 2, 1], partition![4, 2], partition![3, 3]);
        assert_eq!(
            reduce_by_determinants(&t, 2, 2).unwrap(),
            Reduction::Triple(t.clone())
        );
        let t = triple(
            partition![1, 1, 1, 1, 1],
            partition![3, 2],
            partition![4, 1],
        );
        assert!(matches!(
            reduce_by_determinants(&t, 2, 2),
            Err(Error::Shape(_))
        ));
    }
}
