use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{mod_inverse, mul_mod};

/// `x -> lambda x + mu (mod modulus)` with `lambda` a unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AffineMap {
    pub modulus: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl AffineMap {
    pub fn new(modulus: u64, lambda: u64, mu: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::BadModulus(modulus, 2));
        }
        let (lambda, mu) = (lambda % modulus, mu % modulus);
        if lambda.gcd(&modulus) != 1 {
            return Err(Error::Invalid(format!(
                "{lambda} is not a unit mod {modulus}"
            )));
        }
        Ok(AffineMap {
            modulus,
            lambda,
            mu,
        })
    }

    pub fn identity(modulus: u64) -> Self {
        AffineMap {
            modulus,
            lambda: 1,
            mu: 0,
        }
    }

    pub fn apply(&self, x: u64) -> u64 {
        (mul_mod(self.lambda, x, self.modulus) + self.mu) % self.modulus
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        debug_assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        AffineMap {
            modulus: m,
            lambda: mul_mod(self.lambda, other.lambda, m),
            mu: (mul_mod(self.lambda, other.mu, m) + self.mu) % m,
        }
    }

    pub fn inverse(&self) -> AffineMap {
        let m = self.modulus;
        let inv = mod_inverse(self.lambda, m).expect("lambda is a unit");
        AffineMap {
            modulus: m,
            lambda: inv,
            mu: (m - mul_mod(inv, self.mu, m)) % m,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.lambda == 1 % self.modulus && self.mu == 0
    }

    /// Member of the inner subgroup: `±x + mu`, `mu` even when the modulus is.
    pub fn is_inner(&self) -> bool {
        let m = self.modulus;
        (self.lambda == 1 || self.lambda == m - 1) && (m % 2 == 1 || self.mu.is_multiple_of(2))
    }

    /// The permutation of residues this map induces.
    pub fn permutation(&self) -> Vec<u64> {
        (0..self.modulus).map(|x| self.apply(x)).collect()
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x+{} (mod {})", self.lambda, self.mu, self.modulus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Aut,
    Inn,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Aut => "aut",
            GroupKind::Inn => "inn",
        })
    }
}

impl std::str::FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "aut" => Ok(GroupKind::Aut),
            "inn" => Ok(GroupKind::Inn),
            _ => Err(Error::Invalid(format!(
                "unknown group `{s}` (expected aut or inn)"
            ))),
        }
    }
}

/// The coloring automorphisms of `Z_m` (affine group) or its inner subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub modulus: u64,
    pub elements: Vec<AffineMap>,
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Elements in order of ascending `lambda`, then ascending `mu`.
pub fn build_group(kind: GroupKind, m: u64) -> Result<GroupSpec> {
    if m < 3 {
        return Err(Error::BadModulus(m, 3));
    }
    let lambdas: Vec<u64> = match kind {
        GroupKind::Aut => (1..m).filter(|l| l.gcd(&m) == 1).collect(),
        GroupKind::Inn => vec![1, m - 1],
    };
    let mu_step = if kind == GroupKind::Inn && m.is_multiple_of(2) {
        2
    } else {
        1
    };
    let elements = lambdas
        .iter()
        .flat_map(|&lambda| {
            (0..m).step_by(mu_step).map(move |mu| AffineMap {
                modulus: m,
                lambda,
                mu,
            })
        })
        .collect();
    Ok(GroupSpec {
        kind,
        modulus: m,
        elements,
    })
}
