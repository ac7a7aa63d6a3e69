//! Numerical semigroups given by generators, with the classical invariants.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::apery::{gcd, ResidueTable};

/// Largest multiplicity accepted by [`NumericalSemigroup::from_generators`].
/// The Apéry table has one entry per residue class, so this bounds memory.
pub const MAX_MULTIPLICITY: i64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}, so the complement in N is infinite")]
    NotCofinite(i64),
    #[error("multiplicity {0} exceeds the supported maximum {MAX_MULTIPLICITY}")]
    MultiplicityTooLarge(i64),
    #[error("64-bit overflow while computing the Apéry table")]
    Overflow,
    #[error("cannot parse generator list: {0}")]
    Parse(String),
}

/// A numerical semigroup stored as its minimal generators and the Apéry set
/// with respect to the multiplicity.
///
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    apery: Vec<i64>,
    frobenius: i64,
}

/// Gaps and small elements, both sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapProfile {
    pub gaps: Vec<i64>,
    pub small_elements: Vec<i64>,
}

impl GapProfile {
    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn n_small(&self) -> usize {
        self.small_elements.len()
    }
}

/// Parse a comma separated list of decimal integers such as `"5, 12,13"`.
pub fn parse_generators(s: &str) -> Result<Vec<i64>, SemigroupError> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|e| SemigroupError::Parse(format!("{tok:?}: {e}")))
        })
        .collect()
}

impl NumericalSemigroup {
    /// Build the semigroup generated by `raw`, reducing to the minimal system
    /// of generators.
    pub fn from_generators(raw: &[i64]) -> Result<Self, SemigroupError> {
        if raw.is_empty() {
            return Err(SemigroupError::EmptyInput);
        }
        if let Some(&bad) = raw.iter().find(|&&g| g <= 0) {
            return Err(SemigroupError::NonPositiveGenerator(bad));
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let d = sorted.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(SemigroupError::NotCofinite(d));
        }
        let m = sorted[0];
        if m > MAX_MULTIPLICITY {
            return Err(SemigroupError::MultiplicityTooLarge(m));
        }

        let mut table = ResidueTable::new(m);
        let mut generators = vec![m];
        for &g in &sorted[1..] {
            if !table.contains(g) {
                table.add_generator(g).map_err(|_| SemigroupError::Overflow)?;
                generators.push(g);
            }
        }
        debug_assert!(table.is_complete());
        let s = Self::from_parts(generators, table.into_inner());
        let largest = *s.generators.last().unwrap();
        largest
            .checked_mul(2)
            .and_then(|x| x.checked_add(s.frobenius))
            .ok_or(SemigroupError::Overflow)?;
        Ok(s)
    }

    /// Assemble from an already minimal generator list and its complete Apéry
    /// table with respect to `generators[0]`.
    pub(crate) fn from_parts(generators: Vec<i64>, apery: Vec<i64>) -> Self {
        let m = generators[0];
        let frobenius = apery.iter().copied().max().unwrap_or(0) - m;
        NumericalSemigroup {
            generators,
            apery,
            frobenius,
        }
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// `apery()[r]` is the least element congruent to `r` modulo the multiplicity.
    pub fn apery(&self) -> &[i64] {
        &self.apery
    }

    /// Largest integer not in the semigroup; `-1` for the whole of ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.apery[x.rem_euclid(self.multiplicity()) as usize]
    }

    /// `x <=_S y` iff `y - x` lies in the semigroup.
    pub fn leq_s(&self, x: i64, y: i64) -> bool {
        y.checked_sub(x).is_some_and(|d| self.contains(d))
    }

    /// Number of gaps via Selmer's formula on the Apéry set.
    pub fn genus(&self) -> i64 {
        let m = self.multiplicity();
        let total: i64 = self.apery.iter().sum();
        (total - m * (m - 1) / 2) / m
    }

    pub fn gap_profile(&self) -> GapProfile {
        let (small_elements, gaps) = (0..=self.frobenius).partition(|&x| self.contains(x));
        GapProfile { gaps, small_elements }
    }

    /// Pseudo-Frobenius numbers in ascending order.
    ///
    /// Every candidate is `w - m` for some non-zero Apéry element `w`, since
    /// `f + m` must lie in the semigroup while `f` does not.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        let m = self.multiplicity();
        let mut pf: Vec<i64> = self
            .apery
            .iter()
            .skip(1)
            .map(|&w| w - m)
            .filter(|&f| self.generators[1..].iter().all(|&g| self.contains(f + g)))
            .collect();
        pf.sort_unstable();
        pf
    }

    /// The type, i.e. the number of pseudo-Frobenius numbers.
    pub fn semigroup_type(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f).filter(|&x| !self.contains(x)).all(|x| self.contains(f - x))
    }

    pub fn is_almost_symmetric(&self) -> bool {
        let f = self.frobenius;
        let pf = self.pseudo_frobenius();
        let is_pf = |x: i64| pf.binary_search(&x).is_ok();
        (0..=f)
            .filter(|&x| !self.contains(x))
            .all(|x| self.contains(f - x) || (is_pf(x) && is_pf(f - x)))
    }
}

impl FromStr for NumericalSemigroup {
    type Err = SemigroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_generators(&parse_generators(s)?)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}
