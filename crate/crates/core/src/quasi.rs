//! Quasipolynomials in one positive integer variable.

use std::fmt;

use num_bigint::BigInt;

use crate::poly::{int, Polynomial, Rational};

/// One polynomial per residue class modulo the period. Branch `i` (1-based)
/// governs the arguments `N ≡ i (mod period)`, so branch `period` handles the
/// multiples of the period.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiPolynomial {
    branches: Vec<Polynomial>,
}

impl QuasiPolynomial {
    pub fn new(branches: Vec<Polynomial>) -> Self {
        assert!(
            !branches.is_empty(),
            "a quasipolynomial needs at least one branch"
        );
        QuasiPolynomial { branches }
    }

    /// The same polynomial on every one of `period` residue classes.
    pub fn uniform(poly: Polynomial, period: usize) -> Self {
        Self::new(vec![poly; period])
    }

    pub fn constant(value: Rational, period: usize) -> Self {
        Self::uniform(Polynomial::constant(value), period)
    }

    pub fn period(&self) -> usize {
        self.branches.len()
    }

    pub fn branches(&self) -> &[Polynomial] {
        &self.branches
    }

    /// Branch `i`, with `1 ≤ i ≤ period`.
    pub fn branch(&self, i: usize) -> &Polynomial {
        assert!(
            (1..=self.period()).contains(&i),
            "branch index {i} out of 1..={}",
            self.period()
        );
        &self.branches[i - 1]
    }

    /// The branch index (1-based) governing argument `n`.
    pub fn branch_index(&self, n: u64) -> usize {
        assert!(
            n >= 1,
            "quasipolynomials are evaluated at positive integers"
        );
        ((n - 1) % self.period() as u64) as usize + 1
    }

    pub fn evaluate(&self, n: u64) -> Rational {
        self.branch(self.branch_index(n)).eval(&int(n as i64))
    }

    /// `N ↦ f(N + c)`, with the same period.
    pub fn shift(&self, c: u64) -> QuasiPolynomial {
        let k = self.period() as u64;
        let branches = (1..=k)
            .map(|j| {
                let src = ((j + c - 1) % k) as usize + 1;
                self.branch(src).shift(c as i64)
            })
            .collect();
        QuasiPolynomial { branches }
    }

    pub fn is_identically_zero(&self) -> bool {
        self.branches.iter().all(Polynomial::is_zero)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.branches.iter().filter_map(Polynomial::degree).max()
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.period();
        if k == 1 {
            return write!(f, "{}", self.branches[0]);
        }
        f.write_str("{")?;
        for (i, b) in self.branches.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "N≡{} mod {k}: {b}", i + 1)?;
        }
        f.write_str("}")
    }
}

/// A period-2 stretching quasipolynomial written as
/// `Q·N²/4 + L·N/2 + Δ(N)`, where `Δ` only depends on the parity of `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeDecomposition {
    pub q: BigInt,
    pub l: BigInt,
    pub delta_even: Rational,
    pub delta_odd: Rational,
}

impl ShapeDecomposition {
    pub fn delta(&self, n: u64) -> &Rational {
        if n % 2 == 0 {
            &self.delta_even
        } else {
            &self.delta_odd
        }
    }

    /// `Q·N²/4 + L·N/2 + Δ(N)`.
    pub fn evaluate(&self, n: u64) -> Rational {
        let x = int(n as i64);
        let q = Rational::from_integer(self.q.clone());
        let l = Rational::from_integer(self.l.clone());
        &q * &x * &x / int(4) + &l * &x / int(2) + self.delta(n)
    }
}
