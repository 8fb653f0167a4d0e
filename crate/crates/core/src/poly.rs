//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar, always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A polynomial in one variable; `coeffs[i]` multiplies `N^i`.
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monic linear polynomial `N - root`.
    pub fn linear_factor(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `N^i` (zero above the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&int(x))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// The polynomial `N ↦ p(N + c)`, re-expanded in powers of `N`.
    pub fn shift(&self, c: i64) -> Polynomial {
        // Horner in the shifted variable: p(N + c) = (...(a_d (N+c) + a_{d-1})(N+c) + ...).
        let step = Polynomial::new(vec![int(c), Rational::one()]);
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, a| {
            acc.mul(&step).add(&Polynomial::constant(a.clone()))
        })
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Decides exactly whether `p(n) > 0` for every integer `n ≥ 1` with
    /// `n ≡ residue (mod modulus)`. Pass `modulus = 1` to range over all `n ≥ 1`.
    ///
    /// A nonzero polynomial with positive leading coefficient exceeds zero past
    /// its Cauchy root bound, so only the integers up to that bound are checked.
    pub fn positive_on_integers(&self, modulus: u64, residue: u64) -> bool {
        let Some(lead) = self.leading() else {
            return false;
        };
        if lead.is_negative() {
            return false;
        }
        let d = self.coeffs.len() - 1;
        let ratio = self.coeffs[..d]
            .iter()
            .map(|c| (c / lead).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        let bound = (Rational::one() + ratio).ceil().to_integer();
        let bound: i64 = bound.try_into().expect("root bound does not fit in i64");
        let modulus = modulus.max(1) as i64;
        let residue = residue as i64 % modulus;
        let first = if residue == 0 { modulus } else { residue };
        let mut n = first;
        while n <= bound {
            if !self.eval_int(n).is_positive() {
                return false;
            }
            n += modulus;
        }
        true
    }

    /// Lagrange interpolation through `(x_i, y_i)`; the `x_i` must be distinct.
    pub fn interpolate(points: &[(i64, Rational)]) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Polynomial::constant(Rational::one());
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                assert_ne!(xi, xj, "interpolation nodes must be distinct");
                basis = basis.mul(&Polynomial::linear_factor(&int(*xj)));
                denom *= int(xi - xj);
            }
            acc = acc.add(&basis.scale(&(yi / denom)));
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    /// Human form such as `7/4*N^2 + 3/2*N - 1/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("N")?,
                1 => write!(f, "{mag}*N")?,
                _ if unit => write!(f, "N^{i}")?,
                _ => write!(f, "{mag}*N^{i}")?,
            }
        }
        Ok(())
    }
}
