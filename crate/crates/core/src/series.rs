//! Generating-function series of Euler characteristics, stored as exact
//! coefficient tables over one residue class of exponents.

use std::collections::BTreeMap;
use std::fmt;

/// Map from nonpositive exponents to integer coefficients. All exponents lie
/// in a single residue class: `|e| = residue (mod modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerSeries {
    modulus: u64,
    residue: u64,
    coeffs: BTreeMap<i64, i64>,
}

impl EulerSeries {
    pub fn new(modulus: u64, residue: u64) -> Self {
        assert!(modulus > 0 && residue < modulus);
        Self {
            modulus,
            residue,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn insert(&mut self, exponent: i64, coefficient: i64) {
        assert!(exponent <= 0, "series exponents are nonpositive");
        assert_eq!(
            exponent.unsigned_abs() % self.modulus,
            self.residue,
            "exponent {exponent} outside the residue class"
        );
        self.coeffs.insert(exponent, coefficient);
    }

    pub fn coefficient(&self, exponent: i64) -> i64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Iterate `(exponent, coefficient)` from exponent 0 downwards.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().rev().map(|(&e, &c)| (e, c))
    }

    /// Coefficients from exponent 0 downwards.
    pub fn coefficients(&self) -> Vec<i64> {
        self.iter().map(|(_, c)| c).collect()
    }
}

impl fmt::Display for EulerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}x^{{{e}}}")?;
            first = false;
        }
        Ok(())
    }
}
