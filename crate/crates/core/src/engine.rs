//! Choosing how to compute a single Kronecker coefficient.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kron2row::{kron_two_row, reduce_by_determinants, Reduction};
use crate::oracle::Oracle;
use crate::partition::KronTriple;
use crate::reduced::kron_from_reduced_2x2;
use crate::Coeff;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Lattice points in the Rosas rectangles.
    Rosas,
    /// Strip the `λ₄` determinant columns, then Rosas.
    Reduction,
    /// Alternating sum of three reduced coefficients.
    Reduced,
    /// Character sum over conjugacy classes.
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Rosas,
        Method::Reduction,
        Method::Reduced,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Rosas => "rosas",
            Method::Reduction => "reduction",
            Method::Reduced => "reduced",
            Method::Oracle => "oracle",
        }
    }

    /// Whether this method accepts the shapes of `t`.
    pub fn applies_to(self, t: &KronTriple) -> bool {
        match self {
            Method::Rosas | Method::Reduced => t.is_two_two_row(),
            Method::Reduction => t.mu.length() <= 2 && t.nu.length() <= 2 && t.lambda.length() == 4,
            Method::Oracle => true,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown method {s:?}")))
    }
}

/// The first applicable method in the order rosas, reduction, oracle.
pub fn select_method(t: &KronTriple) -> Method {
    [Method::Rosas, Method::Reduction]
        .into_iter()
        .find(|m| m.applies_to(t))
        .unwrap_or(Method::Oracle)
}

pub fn kron_with(t: &KronTriple, method: Method, oracle: &Oracle) -> Result<Coeff> {
    if !method.applies_to(t) {
        return Err(Error::Shape(format!(
            "method {method} does not apply to {t}"
        )));
    }
    match method {
        Method::Rosas => kron_two_row(t),
        Method::Reduced => kron_from_reduced_2x2(t),
        Method::Oracle => oracle.kron(t),
        Method::Reduction => match reduce_by_determinants(t, 2, 2)? {
            Reduction::Triple(smaller) => kron_two_row(&smaller),
            Reduction::ZeroCertificate(_) => Ok(0),
        },
    }
}

pub fn kron_auto(t: &KronTriple, oracle: &Oracle) -> Result<(Coeff, Method)> {
    let method = select_method(t);
    Ok((kron_with(t, method, oracle)?, method))
}
