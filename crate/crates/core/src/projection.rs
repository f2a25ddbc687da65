//! Projection of `σ^(n){a_0, ..., a_{k-1}}` onto the sub-simplex
//! `σ^(n){a_l, ..., a_m}` and the subsets on which it is a derivation.
//!
//! On run forms the projection merges every run below `a_l` into the `a_l` run
//! and every run above `a_m` into the `a_m` run. Pointwise this is the clamp
//! `t ↦ max(a_l, min(α(t), a_m))`; both are implemented and must agree.
//!
//! Membership in `S`, `R` and `D = S ∪ R` only looks at values at vertex
//! points `α(a_p)`.

use serde::Serialize;

use crate::endo::{Endo, Point, SimplexSpec, VertexSet};
use crate::error::{ChainError, Result};
use crate::runs::RunLengthForm;

/// The projection onto the vertices `a_lower ..= a_upper` of a simplex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ProjectionSpec {
    simplex: SimplexSpec,
    lower: usize,
    upper: usize,
}

impl ProjectionSpec {
    /// Requires `0 <= lower < upper <= k-1`.
    pub fn new(simplex: SimplexSpec, lower: usize, upper: usize) -> Result<Self> {
        let k = simplex.k();
        if lower >= upper || upper >= k {
            return Err(ChainError::InvalidProjection {
                lower,
                upper,
                max: k.saturating_sub(1),
            });
        }
        Ok(Self {
            simplex,
            lower,
            upper,
        })
    }

    pub fn simplex(&self) -> &SimplexSpec {
        &self.simplex
    }

    pub fn vertices(&self) -> &VertexSet {
        self.simplex.vertices()
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn n(&self) -> usize {
        self.simplex.n()
    }

    /// `a_l`
    pub fn floor(&self) -> Point {
        self.vertices().vertex(self.lower)
    }

    /// `a_m`
    pub fn ceiling(&self) -> Point {
        self.vertices().vertex(self.upper)
    }

    /// The target simplex `σ^(n){a_l, ..., a_m}`.
    pub fn image_simplex(&self) -> SimplexSpec {
        SimplexSpec::new(self.vertices().slice(self.lower, self.upper))
    }

    /// Run form of the projection, written over `{a_l, ..., a_m}`.
    pub fn project_runs(&self, alpha: &Endo) -> Result<RunLengthForm> {
        self.simplex.check(alpha)?;
        let runs = alpha.runs_relative_to(self.vertices())?;
        let i = runs.multiplicities();
        let mut merged = Vec::with_capacity(self.upper - self.lower + 1);
        merged.push(i[..=self.lower].iter().sum());
        merged.extend_from_slice(&i[self.lower + 1..self.upper]);
        merged.push(i[self.upper..].iter().sum());
        RunLengthForm::new(self.vertices().slice(self.lower, self.upper), merged)
    }

    /// `∂(α)`, computed by merging runs.
    pub fn project(&self, alpha: &Endo) -> Result<Endo> {
        Ok(self.project_runs(alpha)?.to_endo())
    }

    /// `∂(α)`, computed as the pointwise clamp into `[a_l, a_m]`.
    pub fn clamp(&self, alpha: &Endo) -> Result<Endo> {
        self.simplex.check(alpha)?;
        Ok(self.clamp_unchecked(alpha))
    }

    #[inline]
    pub(crate) fn clamp_unchecked(&self, alpha: &Endo) -> Endo {
        let (lo, hi) = (self.floor(), self.ceiling());
        Endo::from_table_unchecked(alpha.values().iter().map(|&v| v.clamp(lo, hi)).collect())
    }

    /// `α(a_0) = ... = α(a_l) >= a_{l+1}` and `α(a_m) <= a_m`.
    pub fn in_s(&self, alpha: &Endo) -> Result<bool> {
        self.simplex.check(alpha)?;
        Ok(self.in_s_unchecked(alpha))
    }

    /// `α(a_l) <= a_l` and `α(a_m) <= a_m`.
    pub fn in_r(&self, alpha: &Endo) -> Result<bool> {
        self.simplex.check(alpha)?;
        Ok(self.in_r_unchecked(alpha))
    }

    pub fn in_d(&self, alpha: &Endo) -> Result<bool> {
        Ok(self.membership(alpha)?.in_d())
    }

    pub fn membership(&self, alpha: &Endo) -> Result<Membership> {
        self.simplex.check(alpha)?;
        Ok(self.membership_unchecked(alpha))
    }

    pub(crate) fn in_s_unchecked(&self, alpha: &Endo) -> bool {
        let a = self.vertices();
        let head = alpha.at(a.vertex(0));
        (1..=self.lower).all(|p| alpha.at(a.vertex(p)) == head)
            && head >= a.vertex(self.lower + 1)
            && alpha.at(self.ceiling()) <= self.ceiling()
    }

    pub(crate) fn in_r_unchecked(&self, alpha: &Endo) -> bool {
        alpha.at(self.floor()) <= self.floor() && alpha.at(self.ceiling()) <= self.ceiling()
    }

    pub(crate) fn membership_unchecked(&self, alpha: &Endo) -> Membership {
        Membership {
            in_s: self.in_s_unchecked(alpha),
            in_r: self.in_r_unchecked(alpha),
        }
    }

    /// Both sides of `∂(αβ) = ∂(α)β + α∂(β)`.
    pub fn leibniz(&self, alpha: &Endo, beta: &Endo) -> Result<LeibnizOutcome> {
        self.simplex.check(alpha)?;
        self.simplex.check(beta)?;
        Ok(self.leibniz_unchecked(alpha, beta))
    }

    pub(crate) fn leibniz_unchecked(&self, alpha: &Endo, beta: &Endo) -> LeibnizOutcome {
        let lhs = self.clamp_unchecked(&alpha.then(beta));
        let rhs = self
            .clamp_unchecked(alpha)
            .then(beta)
            .join(&alpha.then(&self.clamp_unchecked(beta)));
        LeibnizOutcome::new(lhs, rhs)
    }

    /// `∂(α + β) = ∂(α) + ∂(β)`.
    pub fn additivity(&self, alpha: &Endo, beta: &Endo) -> Result<bool> {
        let lhs = self.project(&alpha.add(beta)?)?;
        let rhs = self.project(alpha)?.join(&self.project(beta)?);
        Ok(lhs == rhs)
    }

    /// The single projection equal to `self` followed by `inner`, where `inner`
    /// acts on the image simplex of `self`.
    pub fn then(&self, inner: &ProjectionSpec) -> Result<ProjectionSpec> {
        if inner.simplex != self.image_simplex() {
            return Err(ChainError::IncompatibleSpecs);
        }
        ProjectionSpec::new(
            self.simplex.clone(),
            self.lower + inner.lower,
            self.lower + inner.upper,
        )
    }
}

/// Applies `outer`, then `inner` on the image simplex of `outer`.
pub fn project_then_project(
    outer: &ProjectionSpec,
    inner: &ProjectionSpec,
    alpha: &Endo,
) -> Result<Endo> {
    if inner.simplex != outer.image_simplex() {
        return Err(ChainError::IncompatibleSpecs);
    }
    inner.project(&outer.project(alpha)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub in_s: bool,
    pub in_r: bool,
}

impl Membership {
    pub fn in_d(&self) -> bool {
        self.in_s || self.in_r
    }

    /// `S ∩ R = ∅` says this never happens.
    pub fn in_both(&self) -> bool {
        self.in_s && self.in_r
    }
}

/// Both sides of the Leibniz identity for one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeibnizOutcome {
    pub lhs: Endo,
    pub rhs: Endo,
    pub holds: bool,
}

impl LeibnizOutcome {
    fn new(lhs: Endo, rhs: Endo) -> Self {
        let holds = lhs == rhs;
        Self { lhs, rhs, holds }
    }
}
