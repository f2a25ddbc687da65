//! Exhaustive verification of the semiring, projection and counting claims.
//!
//! Every claim is checked over all instances inside the requested [`Bounds`].
//! Work is split into independent jobs (one per vertex set, projection or
//! chain size), run in parallel and merged in job order, so reports are
//! reproducible apart from `elapsed_ms`. The violation count is always exact;
//! only the witness list is capped.

mod claims;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::endo::{Endo, Point, SimplexSpec, VertexSet};
use crate::enumeration::{enumerate_subset, simplex_size, SubsetSelector};
use crate::error::{ChainError, Result};

pub const DEFAULT_CEILING: u128 = 100_000_000;
pub const DEFAULT_MAX_WITNESSES: usize = 10;

macro_rules! claims {
    ($($variant:ident => $id:literal, $summary:literal;)*) => {
        /// A checkable statement about the endomorphism semiring.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
        pub enum Claim {
            $(#[serde(rename = $id)] $variant,)*
        }

        impl Claim {
            pub const ALL: &'static [Claim] = &[$(Claim::$variant,)*];

            pub fn id(self) -> &'static str {
                match self { $(Claim::$variant => $id,)* }
            }

            pub fn summary(self) -> &'static str {
                match self { $(Claim::$variant => $summary,)* }
            }
        }
    };
}

claims! {
    PrefixMinAddition => "LEMMA1", "prefix-min addition on run forms equals the pointwise join";
    ComposeRuns => "COMPOSE_RUNS", "block-sum product on run forms equals pointwise composition";
    ProjectionClamp => "PROJECTION_CLAMP", "run-merging projection equals the clamp, is idempotent and lands in the sub-simplex";
    Additivity => "LEMMA2", "projection is additive on the whole simplex";
    SClosed => "LEMMA3", "S is closed under + and ·";
    RClosed => "LEMMA4", "R is closed under + and ·";
    DClosed => "LEMMA5", "D = S ∪ R is closed under + and ·, and S ∩ R = ∅";
    Leibniz => "THEOREM_LEIBNIZ", "projection satisfies the Leibniz rule on D";
    Maximality => "THEOREM_MAXIMALITY", "every β outside D breaks the Leibniz rule for some α";
    LeftIdeal => "LEFT_IDEAL", "each sub-simplex on a_r..a_m (l <= r < m) absorbs D on the left";
    LeibnizInequality => "LEIBNIZ_INEQUALITY", "∂(α)β <= ∂(αβ) pointwise on D";
    CompositionBottom => "COMPOSITION_S4", "with l = 0, projecting to a_m then a_m1 equals projecting to a_m1 on D_m ∩ D_m1";
    CompositionTop => "COMPOSITION_S5", "with m = k-1, projecting from a_l then a_l1 equals projecting from a_l1 on D_l ∩ D_l1";
    NilpotentClosed => "COROLLARY_N_CLOSED", "N_n is closed under every projection onto a_0..a_m, 1 <= m <= n-2";
    CountOn => "COUNT_ON", "|ON_n| = C_n";
    CountN => "COUNT_N", "|N_n| = C_(n-1)";
    NIdeal => "N_IDEAL", "N_n is a two-sided ideal of ON_n";
    NilpotentPowers => "NILPOTENT_POWERS", "α(t) < t for t >= 1 iff some power of α is the zero map";
    PropSpCount => "PROP_SP_COUNT", "|S_p of C_n with m = n-1| = p·C_p for 1 <= p <= n-2";
    TopSingleton => "TOP_SINGLETON", "S with l = k-2, m = k-1 is exactly {(a_(k-1))_n}";
    TopInclusion => "TOP_INCLUSION", "S_l1 ⊆ S_l for 1 <= l < l1 < k-1 (m = k-1)";
    TopDisjoint => "TOP_DISJOINT", "S_l1 ∩ R_l = ∅ for all 1 <= l, l1 < k-1 (m = k-1)";
    TopIntersection => "INTERSECTION_S5", "the intersection of D_l over 1 <= l <= k-2 (m = k-1) is {(a_(k-1))_n} ∪ {α : α(a) <= a for a in A}";
    SemiringAxioms => "SEMIRING_AXIOMS", "σ(A) is closed and satisfies the semiring axioms";
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = ChainError;

    /// Accepts `THEOREM_LEIBNIZ`, `theorem_leibniz` and `theorem-leibniz`.
    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().replace('-', "_").to_ascii_uppercase();
        Claim::ALL
            .iter()
            .copied()
            .find(|c| c.id() == wanted)
            .ok_or_else(|| ChainError::UnknownClaim {
                name: s.to_owned(),
                known: Claim::ALL
                    .iter()
                    .map(|c| c.id().to_ascii_lowercase().replace('_', "-"))
                    .collect::<Vec<_>>()
                    .join(", "),
            })
    }
}

/// Which vertex sets a verification run covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexFilter {
    /// Every non-empty subset of the chain.
    All,
    /// Only the whole chain.
    Full,
    /// Only this vertex set, for chain sizes large enough to hold it.
    Exact(Vec<Point>),
}

/// Instances a claim is checked over.
///
/// `lower`/`upper` restrict the projection indices of claims that range over
/// all `l < m`; `p` restricts the proposition on `S_p`. Claims whose statement
/// fixes the chain (counting, nilpotent maps) ignore `vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub n_min: usize,
    pub n_max: usize,
    pub vertices: VertexFilter,
    #[serde(rename = "l", skip_serializing_if = "Option::is_none")]
    pub lower: Option<usize>,
    #[serde(rename = "m", skip_serializing_if = "Option::is_none")]
    pub upper: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
}

impl Bounds {
    /// Chain sizes `1..=n_max`, every vertex set.
    pub fn up_to(n_max: usize) -> Self {
        Self {
            n_min: 1,
            n_max,
            vertices: VertexFilter::All,
            lower: None,
            upper: None,
            p: None,
        }
    }

    /// A single chain size.
    pub fn exactly(n: usize) -> Self {
        Self {
            n_min: n,
            ..Self::up_to(n)
        }
    }

    pub fn with_vertices(mut self, vertices: VertexFilter) -> Self {
        self.vertices = vertices;
        self
    }

    pub fn with_projection(mut self, lower: usize, upper: usize) -> Self {
        self.lower = Some(lower);
        self.upper = Some(upper);
        self
    }

    pub fn with_p(mut self, p: usize) -> Self {
        self.p = Some(p);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n_min == 0 {
            return Err(ChainError::EmptyChain);
        }
        if self.n_min > self.n_max {
            return Err(ChainError::InvalidBounds(format!(
                "empty chain-size range {}..={}",
                self.n_min, self.n_max
            )));
        }
        Ok(())
    }

    fn chain_sizes(&self) -> std::ops::RangeInclusive<usize> {
        self.n_min..=self.n_max
    }

    /// Vertex sets of every chain size in range that pass the filter.
    fn simplices(&self, min_k: usize) -> Vec<SimplexSpec> {
        let mut out = Vec::new();
        for n in self.chain_sizes() {
            match &self.vertices {
                VertexFilter::All => {
                    for k in min_k.max(1)..=n {
                        for points in combinations(n, k) {
                            let vs = VertexSet::new(n, points).expect("combinations are valid");
                            out.push(SimplexSpec::new(vs));
                        }
                    }
                }
                VertexFilter::Full => {
                    if n >= min_k {
                        out.push(SimplexSpec::full(n).expect("n >= 1"));
                    }
                }
                VertexFilter::Exact(points) => {
                    if points.len() >= min_k {
                        if let Ok(vs) = VertexSet::new(n, points.clone()) {
                            out.push(SimplexSpec::new(vs));
                        }
                    }
                }
            }
        }
        out
    }

    fn projection_allowed(&self, lower: usize, upper: usize) -> bool {
        self.lower.is_none_or(|l| l == lower) && self.upper.is_none_or(|m| m == upper)
    }
}

/// Increasing `k`-subsets of `0..n`, lexicographically.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_witnesses: usize,
    /// Upper limit on the estimated number of elementary checks.
    pub ceiling: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_witnesses: DEFAULT_MAX_WITNESSES,
            ceiling: DEFAULT_CEILING,
        }
    }
}

/// One counterexample, with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Point>>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, u128>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub endos: BTreeMap<String, Endo>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Witness {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            vertices: None,
            params: BTreeMap::new(),
            endos: BTreeMap::new(),
            note: String::new(),
        }
    }

    pub fn in_simplex(simplex: &SimplexSpec) -> Self {
        let mut w = Self::new(simplex.n());
        w.vertices = Some(simplex.vertices().points().to_vec());
        w
    }

    pub fn param(mut self, name: &str, value: impl Into<u128>) -> Self {
        self.params.insert(name.to_owned(), value.into());
        self
    }

    pub fn endo(mut self, name: &str, endo: &Endo) -> Self {
        self.endos.insert(name.to_owned(), endo.clone());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

/// Outcome of an exhaustive check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub bounds: Bounds,
    pub searched: u64,
    pub violations: u64,
    pub witnesses: Vec<Witness>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

/// Running counts for a batch of checks; merging is associative.
#[derive(Debug, Clone)]
pub(crate) struct Tally {
    searched: u64,
    violations: u64,
    witnesses: Vec<Witness>,
    cap: usize,
}

impl Tally {
    pub(crate) fn new(cap: usize) -> Self {
        Self {
            searched: 0,
            violations: 0,
            witnesses: Vec::new(),
            cap,
        }
    }

    /// Records one case; `witness` is only built for a failure that fits under the cap.
    #[inline]
    pub(crate) fn check(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.searched += 1;
        if !ok {
            self.violations += 1;
            if self.witnesses.len() < self.cap {
                self.witnesses.push(witness());
            }
        }
    }

    pub(crate) fn merge(mut self, other: Tally) -> Tally {
        self.searched += other.searched;
        self.violations += other.violations;
        let room = self.cap.saturating_sub(self.witnesses.len());
        self.witnesses
            .extend(other.witnesses.into_iter().take(room));
        self
    }
}

/// Runs one closure per job in parallel and merges results in job order.
pub(crate) fn run_jobs<J, F>(jobs: &[J], cap: usize, check: F) -> Tally
where
    J: Sync,
    F: Fn(&J, &mut Tally) + Sync,
{
    jobs.par_iter()
        .map(|job| {
            let mut tally = Tally::new(cap);
            check(job, &mut tally);
            tally
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::new(cap), Tally::merge)
}

pub(crate) fn ensure_within(estimated: u128, ceiling: u128) -> Result<()> {
    if estimated > ceiling {
        Err(ChainError::BoundsTooLarge { estimated, ceiling })
    } else {
        Ok(())
    }
}

pub(crate) fn simplex_len(s: &SimplexSpec) -> u128 {
    simplex_size(s.n(), s.k())
}

/// Exhaustively checks one claim.
pub fn verify(
    claim: Claim,
    bounds: &Bounds,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    bounds.validate()?;
    let started = Instant::now();
    let outcome = claims::run(claim, bounds, options)?;
    Ok(VerificationReport {
        claim: claim.id().to_owned(),
        bounds: bounds.clone(),
        searched: outcome.tally.searched,
        violations: outcome.tally.violations,
        witnesses: outcome.tally.witnesses,
        elapsed_ms: started.elapsed().as_millis() as u64,
        notes: outcome.notes,
    })
}

/// Checks every claim once, in [`Claim::ALL`] order.
pub fn verify_all(bounds: &Bounds, options: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    Claim::ALL
        .iter()
        .map(|&claim| verify(claim, bounds, options))
        .collect()
}

/// Which products an ideal must absorb.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealSide {
    /// `r·i ∈ I`, i.e. `t ↦ i(r(t))`.
    Left,
    /// `i·r ∈ I`, i.e. `t ↦ r(i(t))`.
    Right,
    TwoSided,
}

/// Checks that `sub` absorbs products with every element of `host` on the
/// requested side(s). Containment of `sub` in `host` is reported in the notes
/// but is not part of the check.
pub fn ideal_check(
    sub: &SubsetSelector,
    host: &SubsetSelector,
    side: IdealSide,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let (sub_universe, host_universe) = (sub.universe()?, host.universe()?);
    if sub_universe.n() != host_universe.n() {
        return Err(ChainError::ChainMismatch {
            left: sub_universe.n(),
            right: host_universe.n(),
        });
    }
    ensure_within(
        simplex_len(&sub_universe) * simplex_len(&host_universe),
        options.ceiling,
    )?;
    let members: Vec<Endo> = enumerate_subset(sub)?.collect();
    let hosts: Vec<Endo> = enumerate_subset(host)?.collect();
    let tally = claims::ideal_tally(sub, &members, &hosts, side, options.max_witnesses);
    let outside = members
        .iter()
        .filter(|i| !host.contains(i).unwrap_or(false))
        .count();
    let mut notes = vec![format!("{sub} is an ideal candidate in {host} ({side:?})")];
    if outside > 0 {
        notes.push(format!(
            "{outside} of {} elements of {sub} lie outside {host}",
            members.len()
        ));
    }
    let n = sub_universe.n();
    Ok(VerificationReport {
        claim: "IDEAL_CHECK".to_owned(),
        bounds: Bounds::exactly(n),
        searched: tally.searched,
        violations: tally.violations,
        witnesses: tally.witnesses,
        elapsed_ms: started.elapsed().as_millis() as u64,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_parse_in_any_style() {
        assert_eq!("theorem-leibniz".parse::<Claim>().unwrap(), Claim::Leibniz);
        assert_eq!("LEMMA1".parse::<Claim>().unwrap(), Claim::PrefixMinAddition);
        assert_eq!(
            "prop_sp_count".parse::<Claim>().unwrap(),
            Claim::PropSpCount
        );
        assert!("lemma9".parse::<Claim>().is_err());
        for &c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
        }
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn tally_merge_keeps_exact_counts_and_caps_witnesses() {
        let mut a = Tally::new(2);
        let mut b = Tally::new(2);
        for i in 0..3 {
            a.check(false, || Witness::new(i));
            b.check(i == 0, || Witness::new(10 + i));
        }
        let merged = a.merge(b);
        assert_eq!(merged.searched, 6);
        assert_eq!(merged.violations, 5);
        assert_eq!(merged.witnesses.len(), 2);
        assert_eq!(merged.witnesses[0].n, 0);
    }

    #[test]
    fn bounds_select_vertex_sets() {
        assert_eq!(Bounds::up_to(3).simplices(1).len(), 1 + 3 + 7);
        assert_eq!(
            Bounds::up_to(4)
                .with_vertices(VertexFilter::Full)
                .simplices(2)
                .len(),
            3
        );
        let exact = Bounds::up_to(5).with_vertices(VertexFilter::Exact(vec![0, 2]));
        assert_eq!(exact.simplices(1).len(), 3);
    }

    #[test]
    fn ceiling_is_enforced() {
        let opts = VerifyOptions {
            ceiling: 10,
            ..VerifyOptions::default()
        };
        assert!(matches!(
            verify(Claim::Leibniz, &Bounds::up_to(4), &opts),
            Err(ChainError::BoundsTooLarge { ceiling: 10, .. })
        ));
    }

    #[test]
    fn empty_range_is_rejected() {
        let mut b = Bounds::up_to(3);
        b.n_min = 4;
        assert!(verify(Claim::PrefixMinAddition, &b, &VerifyOptions::default()).is_err());
        b.n_min = 0;
        assert!(verify(Claim::PrefixMinAddition, &b, &VerifyOptions::default()).is_err());
    }
}
