//! Endomorphisms of the chain `0 < 1 < ... < n-1` and the semiring they form.
//!
//! An [`Endo`] is stored as its function table. Tables are the canonical
//! representation: two endomorphisms are equal iff their tables are equal,
//! whatever vertex set they were written over.
//!
//! Addition is the pointwise join (maximum). Multiplication is composition read
//! left to right, `(αβ)(t) = β(α(t))`, so `α.compose(&β)` applies `α` first.
//! There is no zero element in general, and nothing here synthesizes one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ChainError, Result};

/// A point of the chain `C_n`, an integer in `[0, n-1]`.
pub type Point = usize;

/// A monotone self-map of the chain `C_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct Endo {
    values: Vec<Point>,
}

impl Endo {
    /// Validates a function table `t ↦ values[t]` on a chain of `n` points.
    pub fn from_table(n: usize, values: Vec<Point>) -> Result<Self> {
        if n == 0 {
            return Err(ChainError::EmptyChain);
        }
        if values.len() != n {
            return Err(ChainError::BadLength {
                expected: n,
                got: values.len(),
            });
        }
        if let Some(&value) = values.iter().find(|&&v| v >= n) {
            return Err(ChainError::OutOfRange { value, n });
        }
        if let Some(index) = values.windows(2).position(|w| w[0] > w[1]) {
            return Err(ChainError::NotMonotone {
                index,
                before: values[index],
                after: values[index + 1],
            });
        }
        Ok(Self { values })
    }

    /// Builds from a table already known to be a valid endomorphism.
    pub(crate) fn from_table_unchecked(values: Vec<Point>) -> Self {
        debug_assert!(!values.is_empty());
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(values.iter().all(|&v| v < values.len()));
        Self { values }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(ChainError::EmptyChain);
        }
        Ok(Self::from_table_unchecked((0..n).collect()))
    }

    /// The constant map `(value)_n`.
    pub fn constant(n: usize, value: Point) -> Result<Self> {
        if n == 0 {
            return Err(ChainError::EmptyChain);
        }
        if value >= n {
            return Err(ChainError::OutOfRange { value, n });
        }
        Ok(Self::from_table_unchecked(vec![value; n]))
    }

    /// Number of points in the chain.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Point] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Point> {
        self.values
    }

    pub fn eval(&self, t: Point) -> Result<Point> {
        self.values.get(t).copied().ok_or(ChainError::OutOfRange {
            value: t,
            n: self.n(),
        })
    }

    /// `α(t)` for a point already known to lie in the chain.
    #[inline]
    pub fn at(&self, t: Point) -> Point {
        self.values[t]
    }

    fn check_same_chain(&self, other: &Self) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(ChainError::ChainMismatch {
                left: self.n(),
                right: other.n(),
            })
        }
    }

    /// Pointwise join `t ↦ α(t) ∨ β(t)`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_chain(other)?;
        Ok(self.join(other))
    }

    /// Left-to-right composition `t ↦ β(α(t))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same_chain(other)?;
        Ok(self.then(other))
    }

    /// Pointwise order: `α(t) <= β(t)` for every `t`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_same_chain(other)?;
        Ok(self.le_pointwise(other))
    }

    // Unchecked variants for hot loops where the chain size is fixed by construction.

    #[inline]
    pub(crate) fn join(&self, other: &Self) -> Self {
        Self::from_table_unchecked(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    #[inline]
    pub(crate) fn then(&self, other: &Self) -> Self {
        Self::from_table_unchecked(self.values.iter().map(|&a| other.values[a]).collect())
    }

    #[inline]
    pub(crate) fn le_pointwise(&self, other: &Self) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// The image as a sorted, deduplicated list of points.
    pub fn image(&self) -> Vec<Point> {
        let mut image = self.values.clone();
        image.dedup();
        image
    }

    /// `α^k` under composition, `k >= 1`.
    pub fn power(&self, k: usize) -> Self {
        assert!(k >= 1, "powers start at 1");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.then(self);
        }
        acc
    }

    /// Canonical run-length notation over the image, e.g. `(0)_2(2)_2(4)_1`.
    pub fn notation(&self) -> String {
        let mut out = String::new();
        let mut start = 0;
        while start < self.values.len() {
            let value = self.values[start];
            let len = self.values[start..]
                .iter()
                .take_while(|&&v| v == value)
                .count();
            out.push_str(&format!("({value})_{len}"));
            start += len;
        }
        out
    }
}

impl TryFrom<Vec<Point>> for Endo {
    type Error = ChainError;

    fn try_from(values: Vec<Point>) -> Result<Self> {
        Self::from_table(values.len(), values)
    }
}

impl From<Endo> for Vec<Point> {
    fn from(endo: Endo) -> Self {
        endo.values
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

/// A vertex set `A = {a_0 < a_1 < ... < a_{k-1}}` inside the chain `C_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VertexSet {
    n: usize,
    points: Vec<Point>,
}

impl VertexSet {
    pub fn new(n: usize, points: Vec<Point>) -> Result<Self> {
        if n == 0 {
            return Err(ChainError::EmptyChain);
        }
        if points.is_empty() {
            return Err(ChainError::EmptyVertexSet);
        }
        if let Some(&value) = points.iter().find(|&&p| p >= n) {
            return Err(ChainError::OutOfRange { value, n });
        }
        if let Some(index) = points.windows(2).position(|w| w[0] >= w[1]) {
            return Err(ChainError::VerticesNotIncreasing { index: index + 1 });
        }
        Ok(Self { n, points })
    }

    /// All points of the chain, `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, (0..n).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices `k`.
    pub fn k(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// The vertex `a_p`.
    #[inline]
    pub fn vertex(&self, p: usize) -> Point {
        self.points[p]
    }

    pub fn first(&self) -> Point {
        self.points[0]
    }

    pub fn last(&self) -> Point {
        self.points[self.points.len() - 1]
    }

    /// Index `p` with `a_p = value`, if `value` is a vertex.
    pub fn index_of(&self, value: Point) -> Option<usize> {
        self.points.binary_search(&value).ok()
    }

    pub fn contains(&self, value: Point) -> bool {
        self.index_of(value).is_some()
    }

    pub fn is_full(&self) -> bool {
        self.points.len() == self.n
    }

    /// The consecutive vertices `{a_lower, ..., a_upper}`.
    pub fn slice(&self, lower: usize, upper: usize) -> Self {
        assert!(lower <= upper && upper < self.k());
        Self {
            n: self.n,
            points: self.points[lower..=upper].to_vec(),
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.n == other.n && self.points.iter().all(|&p| other.contains(p))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// The maximal simplex `σ^(n)(A)`: all endomorphisms with image inside `A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SimplexSpec {
    vertices: VertexSet,
}

impl SimplexSpec {
    pub fn new(vertices: VertexSet) -> Self {
        Self { vertices }
    }

    /// The whole endomorphism semiring of `C_n`.
    pub fn full(n: usize) -> Result<Self> {
        Ok(Self::new(VertexSet::full(n)?))
    }

    pub fn n(&self) -> usize {
        self.vertices.n()
    }

    pub fn k(&self) -> usize {
        self.vertices.k()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn contains(&self, endo: &Endo) -> bool {
        endo.n() == self.n() && endo.values().iter().all(|&v| self.vertices.contains(v))
    }

    /// `Ok(())` if `endo` lies in the simplex, otherwise the reason it does not.
    pub fn check(&self, endo: &Endo) -> Result<()> {
        if endo.n() != self.n() {
            return Err(ChainError::ChainMismatch {
                left: endo.n(),
                right: self.n(),
            });
        }
        match endo.values().iter().find(|&&v| !self.vertices.contains(v)) {
            Some(&value) => Err(ChainError::NotInSimplex { value }),
            None => Ok(()),
        }
    }

    /// The top constant `(a_{k-1})_n`.
    pub fn top(&self) -> Endo {
        Endo::from_table_unchecked(vec![self.vertices.last(); self.n()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(values: &[usize]) -> Endo {
        Endo::from_table(values.len(), values.to_vec()).unwrap()
    }

    #[test]
    fn from_table_validates() {
        assert!(Endo::from_table(5, vec![0, 0, 2, 2, 4]).is_ok());
        assert!(matches!(
            Endo::from_table(3, vec![0, 2, 1]),
            Err(ChainError::NotMonotone { index: 1, .. })
        ));
        assert_eq!(
            Endo::from_table(3, vec![0, 1, 3]),
            Err(ChainError::OutOfRange { value: 3, n: 3 })
        );
        assert_eq!(
            Endo::from_table(4, vec![0, 1, 2]),
            Err(ChainError::BadLength {
                expected: 4,
                got: 3
            })
        );
        assert_eq!(Endo::from_table(0, vec![]), Err(ChainError::EmptyChain));
    }

    #[test]
    fn eval_is_table_lookup() {
        let a = e(&[0, 0, 2, 2, 4]);
        assert_eq!(a.eval(2), Ok(2));
        assert_eq!(a.eval(4), Ok(4));
        assert_eq!(a.eval(5), Err(ChainError::OutOfRange { value: 5, n: 5 }));
    }

    #[test]
    fn add_is_pointwise_max() {
        let a = e(&[0, 0, 2, 2, 4]);
        let b = e(&[2, 2, 2, 4, 4]);
        assert_eq!(a.add(&b).unwrap(), b);
        assert_eq!(a.add(&a).unwrap(), a);
        assert_eq!(
            e(&[0, 1, 1, 2, 4]).add(&e(&[2, 2, 2, 3, 3])).unwrap(),
            e(&[2, 2, 2, 3, 4])
        );
        assert!(matches!(
            a.add(&e(&[0, 0])),
            Err(ChainError::ChainMismatch { left: 5, right: 2 })
        ));
    }

    #[test]
    fn compose_applies_left_operand_first() {
        let a = e(&[0, 0, 2, 2, 4]);
        let b = e(&[2, 2, 2, 4, 4]);
        assert_eq!(a.compose(&b).unwrap(), e(&[2, 2, 2, 2, 4]));
        let id = Endo::identity(5).unwrap();
        assert_eq!(id.compose(&b).unwrap(), b);
        let c = Endo::constant(5, 3).unwrap();
        assert_eq!(c.compose(&b).unwrap(), Endo::constant(5, 4).unwrap());
    }

    #[test]
    fn compose_is_not_commutative() {
        let a = e(&[0, 0, 2, 2, 4]);
        let b = e(&[2, 2, 2, 4, 4]);
        // αβ = [2,2,2,2,4] but βα = [2,2,2,4,4]
        assert_ne!(a.compose(&b).unwrap(), b.compose(&a).unwrap());
        assert_eq!(b.compose(&a).unwrap(), e(&[2, 2, 2, 4, 4]));
    }

    #[test]
    fn leq_scans_pointwise() {
        let a = e(&[0, 0, 2, 2, 4]);
        let b = e(&[2, 2, 2, 4, 4]);
        assert!(a.leq(&b).unwrap());
        assert!(a.leq(&a).unwrap());
        let c = e(&[1, 2, 2, 3, 3]);
        assert!(c.leq(&b).unwrap());
        assert!(!b.leq(&c).unwrap());
    }

    #[test]
    fn notation_drops_nothing_and_merges_runs() {
        assert_eq!(e(&[0, 0, 2, 2, 4]).notation(), "(0)_2(2)_2(4)_1");
        assert_eq!(e(&[4, 4, 4, 4, 4]).notation(), "(4)_5");
    }

    #[test]
    fn vertex_set_validation() {
        assert!(VertexSet::new(5, vec![0, 2, 4]).is_ok());
        assert_eq!(VertexSet::new(5, vec![]), Err(ChainError::EmptyVertexSet));
        assert_eq!(
            VertexSet::new(5, vec![0, 2, 2]),
            Err(ChainError::VerticesNotIncreasing { index: 2 })
        );
        assert_eq!(
            VertexSet::new(3, vec![0, 3]),
            Err(ChainError::OutOfRange { value: 3, n: 3 })
        );
    }

    #[test]
    fn simplex_membership() {
        let s = SimplexSpec::new(VertexSet::new(5, vec![0, 2, 4]).unwrap());
        assert!(s.contains(&e(&[0, 0, 2, 2, 4])));
        assert!(!s.contains(&e(&[1, 1, 1, 1, 1])));
        assert_eq!(
            s.check(&e(&[0, 1, 2, 2, 4])),
            Err(ChainError::NotInSimplex { value: 1 })
        );
        assert_eq!(s.top(), e(&[4, 4, 4, 4, 4]));
    }

    #[test]
    fn serde_uses_plain_tables() {
        let a = e(&[0, 1, 1]);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[0,1,1]");
        let back: Endo = serde_json::from_str("[0,1,1]").unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Endo>("[1,0]").is_err());
    }
}
