//! Exhaustive enumeration of simplices and their distinguished subsets, and
//! exact counting.

use std::fmt;

use serde::Serialize;

use crate::endo::{Endo, Point, SimplexSpec};
use crate::error::{ChainError, Result};
use crate::projection::ProjectionSpec;

/// Exact binomial coefficient. Panics on overflow of `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc
            .checked_mul(u128::from(n - i))
            .expect("binomial overflows u128")
            / u128::from(i + 1);
    }
    acc
}

/// The Catalan number `C_p = binom(2p, p) / (p + 1)`.
pub fn catalan(p: u64) -> u128 {
    binomial(2 * p, p) / u128::from(p + 1)
}

/// `|σ^(n)(A)|` for `|A| = k`: the number of ways to write `n` as an ordered
/// sum of `k` non-negative multiplicities.
pub fn simplex_size(n: usize, k: usize) -> u128 {
    if k == 0 {
        return u128::from(n == 0);
    }
    binomial((n + k - 1) as u64, (k - 1) as u64)
}

/// Every endomorphism of a simplex, each exactly once.
///
/// Tables come out in increasing lexicographic order, which is decreasing
/// lexicographic order of the multiplicity vectors: for `n = 3`, `A = {a_0, a_1}`
/// the order is `(a_0)_3, (a_0)_2(a_1)_1, (a_0)_1(a_1)_2, (a_1)_3`.
#[derive(Debug, Clone)]
pub struct SimplexIter {
    points: Vec<Point>,
    // vertex index at each chain point, non-decreasing
    indices: Vec<usize>,
    remaining: u128,
}

impl SimplexIter {
    pub fn new(spec: &SimplexSpec) -> Self {
        Self {
            points: spec.vertices().points().to_vec(),
            indices: vec![0; spec.n()],
            remaining: simplex_size(spec.n(), spec.k()),
        }
    }

    fn advance(&mut self) {
        let top = self.points.len() - 1;
        if let Some(pos) = self.indices.iter().rposition(|&i| i < top) {
            let next = self.indices[pos] + 1;
            self.indices[pos..].fill(next);
        }
    }
}

impl Iterator for SimplexIter {
    type Item = Endo;

    fn next(&mut self) -> Option<Endo> {
        if self.remaining == 0 {
            return None;
        }
        let endo =
            Endo::from_table_unchecked(self.indices.iter().map(|&i| self.points[i]).collect());
        self.remaining -= 1;
        if self.remaining > 0 {
            self.advance();
        }
        Some(endo)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match usize::try_from(self.remaining) {
            Ok(r) => (r, Some(r)),
            Err(_) => (usize::MAX, None),
        }
    }
}

pub fn enumerate_simplex(spec: &SimplexSpec) -> SimplexIter {
    SimplexIter::new(spec)
}

/// A distinguished subset of some simplex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SubsetSelector {
    Simplex {
        simplex: SimplexSpec,
    },
    S {
        projection: ProjectionSpec,
    },
    R {
        projection: ProjectionSpec,
    },
    D {
        projection: ProjectionSpec,
    },
    /// `{α : α(a_m) <= a_m for every m}`, the intersection of all `D_m` with `l = 0`.
    DCap {
        simplex: SimplexSpec,
    },
    /// Over-nilpotent maps of `C_n`: `α(t) <= t`.
    On {
        n: usize,
    },
    /// Nilpotent maps of `C_n`: `α(t) < t` for `t >= 1`.
    N {
        n: usize,
    },
    /// `S` of the full chain with `m = n-1` and `l = n-1-p`:
    /// `α(0) = ... = α(l) >= l + 1`.
    #[serde(rename = "S_SECTION5")]
    TopRuns {
        n: usize,
        p: usize,
    },
}

impl SubsetSelector {
    pub fn top_runs(n: usize, p: usize) -> Result<Self> {
        let sel = Self::TopRuns { n, p };
        sel.validate()?;
        Ok(sel)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::On { n } | Self::N { n } if n == 0 => Err(ChainError::EmptyChain),
            Self::TopRuns { n, p } if n < 2 || p == 0 || p > n - 1 => {
                Err(ChainError::InvalidSelector(format!(
                    "S_p of C_{n} needs 1 <= p <= n-1, got p = {p}"
                )))
            }
            _ => Ok(()),
        }
    }

    /// The simplex this subset is cut out of.
    pub fn universe(&self) -> Result<SimplexSpec> {
        self.validate()?;
        match self {
            Self::Simplex { simplex } | Self::DCap { simplex } => Ok(simplex.clone()),
            Self::S { projection } | Self::R { projection } | Self::D { projection } => {
                Ok(projection.simplex().clone())
            }
            Self::On { n } | Self::N { n } | Self::TopRuns { n, .. } => SimplexSpec::full(*n),
        }
    }

    fn top_projection(n: usize, p: usize) -> Result<ProjectionSpec> {
        ProjectionSpec::new(SimplexSpec::full(n)?, n - 1 - p, n - 1)
    }

    /// Membership test for an element already in [`Self::universe`].
    pub fn contains(&self, alpha: &Endo) -> Result<bool> {
        let universe = self.universe()?;
        universe.check(alpha)?;
        Ok(match self {
            Self::Simplex { .. } => true,
            Self::S { projection } => projection.in_s_unchecked(alpha),
            Self::R { projection } => projection.in_r_unchecked(alpha),
            Self::D { projection } => projection.membership_unchecked(alpha).in_d(),
            Self::DCap { simplex } => in_dcap(simplex, alpha),
            Self::On { .. } => alpha.values().iter().enumerate().all(|(t, &v)| v <= t),
            Self::N { .. } => alpha
                .values()
                .iter()
                .enumerate()
                .skip(1)
                .all(|(t, &v)| v < t),
            Self::TopRuns { n, p } => Self::top_projection(*n, *p)?.in_s_unchecked(alpha),
        })
    }

    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SubsetSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let proj = |f: &mut fmt::Formatter<'_>, name: &str, d: &ProjectionSpec| {
            write!(
                f,
                "{name}(n={}, A={}, l={}, m={})",
                d.n(),
                d.vertices(),
                d.lower(),
                d.upper()
            )
        };
        match self {
            Self::Simplex { simplex } => {
                write!(f, "SIMPLEX(n={}, A={})", simplex.n(), simplex.vertices())
            }
            Self::S { projection } => proj(f, "S", projection),
            Self::R { projection } => proj(f, "R", projection),
            Self::D { projection } => proj(f, "D", projection),
            Self::DCap { simplex } => {
                write!(f, "D_CAP(n={}, A={})", simplex.n(), simplex.vertices())
            }
            Self::On { n } => write!(f, "ON({n})"),
            Self::N { n } => write!(f, "N({n})"),
            Self::TopRuns { n, p } => write!(f, "TOP_RUNS(n={n}, p={p})"),
        }
    }
}

/// `α(a_m) <= a_m` at every vertex.
pub(crate) fn in_dcap(simplex: &SimplexSpec, alpha: &Endo) -> bool {
    simplex
        .vertices()
        .points()
        .iter()
        .all(|&a| alpha.at(a) <= a)
}

/// The members of a subset, in the enumeration order of its universe.
pub fn enumerate_subset(sel: &SubsetSelector) -> Result<impl Iterator<Item = Endo>> {
    let universe = sel.universe()?;
    let sel = sel.clone();
    Ok(SimplexIter::new(&universe).filter(move |alpha| {
        sel.contains(alpha)
            .expect("elements of the universe are valid inputs")
    }))
}

/// Cardinality by filtered enumeration. Fails if the universe is larger than
/// `ceiling`.
pub fn count(sel: &SubsetSelector, ceiling: u128) -> Result<u128> {
    let universe = sel.universe()?;
    let estimated = simplex_size(universe.n(), universe.k());
    if estimated > ceiling {
        return Err(ChainError::BoundsTooLarge { estimated, ceiling });
    }
    Ok(enumerate_subset(sel)?.count() as u128)
}
