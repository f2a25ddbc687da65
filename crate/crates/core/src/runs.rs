//! Run-length forms `(a_0)_{i_0}(a_1)_{i_1}...(a_{k-1})_{i_{k-1}}` and the
//! addition and multiplication formulas written directly on multiplicities.
//!
//! Multiplicities may be zero, so every member of `σ^(n)(A)` has a form
//! relative to `A` even when its image is a proper subset of `A`. Zero runs
//! are dropped only when formatting.

use std::fmt;

use serde::Serialize;

use crate::endo::{Endo, Point, VertexSet};
use crate::error::{ChainError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RunLengthForm {
    vertices: VertexSet,
    multiplicities: Vec<usize>,
}

impl RunLengthForm {
    pub fn new(vertices: VertexSet, multiplicities: Vec<usize>) -> Result<Self> {
        if multiplicities.len() != vertices.k() {
            return Err(ChainError::MultiplicityCount {
                expected: vertices.k(),
                got: multiplicities.len(),
            });
        }
        let total: usize = multiplicities.iter().sum();
        if total != vertices.n() {
            return Err(ChainError::BadMultiplicitySum {
                expected: vertices.n(),
                got: total,
            });
        }
        Ok(Self {
            vertices,
            multiplicities,
        })
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn n(&self) -> usize {
        self.vertices.n()
    }

    /// Expands the form into its function table.
    pub fn to_endo(&self) -> Endo {
        let mut values = Vec::with_capacity(self.n());
        for (&vertex, &count) in self.vertices.points().iter().zip(&self.multiplicities) {
            values.extend(std::iter::repeat_n(vertex, count));
        }
        Endo::from_table_unchecked(values)
    }

    /// Running totals `I_s = i_0 + ... + i_s`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        self.multiplicities
            .iter()
            .scan(0, |acc, &i| {
                *acc += i;
                Some(*acc)
            })
            .collect()
    }
}

impl fmt::Display for RunLengthForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&vertex, &count) in self.vertices.points().iter().zip(&self.multiplicities) {
            if count > 0 {
                write!(f, "({vertex})_{count}")?;
            }
        }
        Ok(())
    }
}

impl Endo {
    /// Expands a run-length form; same as [`RunLengthForm::to_endo`].
    pub fn from_runs(form: &RunLengthForm) -> Endo {
        form.to_endo()
    }

    /// Counts preimages `i_p = |{t : α(t) = a_p}|` of each vertex of `vertices`.
    pub fn runs_relative_to(&self, vertices: &VertexSet) -> Result<RunLengthForm> {
        if vertices.n() != self.n() {
            return Err(ChainError::ChainMismatch {
                left: self.n(),
                right: vertices.n(),
            });
        }
        let mut multiplicities = vec![0; vertices.k()];
        for &value in self.values() {
            let p = vertices
                .index_of(value)
                .ok_or(ChainError::ImageNotInVertexSet(value))?;
            multiplicities[p] += 1;
        }
        Ok(RunLengthForm {
            vertices: vertices.clone(),
            multiplicities,
        })
    }
}

/// Sum of two forms over the same vertex set, computed on multiplicities.
///
/// `h_0 = min(i_0, j_0)` and
/// `h_s = min(I_s - (h_0 + ... + h_{s-1}), J_s - (h_0 + ... + h_{s-1}))`
/// where `I_s`, `J_s` are running totals of the two operands.
pub fn add_via_prefix_mins(x: &RunLengthForm, y: &RunLengthForm) -> Result<RunLengthForm> {
    if x.vertices != y.vertices {
        return Err(ChainError::VertexSetMismatch);
    }
    let mut multiplicities = Vec::with_capacity(x.vertices.k());
    let (mut total_i, mut total_j, mut total_h) = (0usize, 0usize, 0usize);
    for (&i, &j) in x.multiplicities.iter().zip(&y.multiplicities) {
        total_i += i;
        total_j += j;
        // total_h = min(I_{s-1}, J_{s-1}) here, so neither difference underflows
        let h = (total_i - total_h).min(total_j - total_h);
        multiplicities.push(h);
        total_h += h;
    }
    Ok(RunLengthForm {
        vertices: x.vertices.clone(),
        multiplicities,
    })
}

/// Consecutive vertices of `A` grouped by equal image under `β`.
///
/// Block `u` covers the vertex indices `block_ends[u-1]+1 ..= block_ends[u]`
/// (from index 0 for the first block) and all of them map to `block_images[u]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionPartition {
    block_ends: Vec<usize>,
    block_images: Vec<Point>,
}

impl CompositionPartition {
    pub fn block_ends(&self) -> &[usize] {
        &self.block_ends
    }

    pub fn block_images(&self) -> &[Point] {
        &self.block_images
    }

    pub fn len(&self) -> usize {
        self.block_ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_ends.is_empty()
    }

    /// Index ranges of the blocks, in order.
    pub fn blocks(&self) -> impl Iterator<Item = (std::ops::RangeInclusive<usize>, Point)> + '_ {
        let starts = std::iter::once(0).chain(self.block_ends.iter().map(|&e| e + 1));
        starts
            .zip(&self.block_ends)
            .zip(&self.block_images)
            .map(|((start, &end), &image)| (start..=end, image))
    }
}

/// Partition of `A` induced by evaluating `β` at its vertices.
///
/// `β` need not have image in `A`; only the chain sizes must agree.
pub fn composition_partition(beta: &Endo, vertices: &VertexSet) -> Result<CompositionPartition> {
    if beta.n() != vertices.n() {
        return Err(ChainError::ChainMismatch {
            left: beta.n(),
            right: vertices.n(),
        });
    }
    let mut block_ends = Vec::new();
    let mut block_images: Vec<Point> = Vec::new();
    for (p, &vertex) in vertices.points().iter().enumerate() {
        let image = beta.at(vertex);
        if block_images.last() == Some(&image) {
            *block_ends.last_mut().expect("blocks are pushed in pairs") = p;
        } else {
            block_ends.push(p);
            block_images.push(image);
        }
    }
    Ok(CompositionPartition {
        block_ends,
        block_images,
    })
}

/// Product `αβ` from the run form of `α`: each block of the partition of `A`
/// by `β` contributes one run `(a'_u)_{Σ i_p}` summed over the block.
///
/// The result is written over `output`, which must contain every block image.
pub fn compose_via_runs(
    x: &RunLengthForm,
    beta: &Endo,
    output: &VertexSet,
) -> Result<RunLengthForm> {
    if output.n() != x.n() {
        return Err(ChainError::ChainMismatch {
            left: x.n(),
            right: output.n(),
        });
    }
    let partition = composition_partition(beta, &x.vertices)?;
    let mut multiplicities = vec![0; output.k()];
    for (range, image) in partition.blocks() {
        let slot = output
            .index_of(image)
            .ok_or(ChainError::ImageNotInVertexSet(image))?;
        multiplicities[slot] += x.multiplicities[range].iter().sum::<usize>();
    }
    Ok(RunLengthForm {
        vertices: output.clone(),
        multiplicities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(n: usize, points: &[usize]) -> VertexSet {
        VertexSet::new(n, points.to_vec()).unwrap()
    }

    fn form(n: usize, points: &[usize], mults: &[usize]) -> RunLengthForm {
        RunLengthForm::new(vs(n, points), mults.to_vec()).unwrap()
    }

    fn e(values: &[usize]) -> Endo {
        Endo::from_table(values.len(), values.to_vec()).unwrap()
    }

    #[test]
    fn expansion_of_runs() {
        assert_eq!(
            form(5, &[0, 2, 4], &[2, 2, 1]).to_endo(),
            e(&[0, 0, 2, 2, 4])
        );
        assert_eq!(
            form(5, &[0, 2, 4], &[0, 3, 2]).to_endo(),
            e(&[2, 2, 2, 4, 4])
        );
        assert_eq!(form(5, &[4], &[5]).to_endo(), e(&[4, 4, 4, 4, 4]));
        assert_eq!(
            RunLengthForm::new(vs(5, &[0, 2, 4]), vec![2, 2, 2]),
            Err(ChainError::BadMultiplicitySum {
                expected: 5,
                got: 6
            })
        );
        assert!(matches!(
            RunLengthForm::new(vs(5, &[0, 2, 4]), vec![5]),
            Err(ChainError::MultiplicityCount { .. })
        ));
    }

    #[test]
    fn runs_count_preimages() {
        let f = e(&[2, 2, 2, 4, 4])
            .runs_relative_to(&vs(5, &[0, 2, 4]))
            .unwrap();
        assert_eq!(f.multiplicities(), &[0, 3, 2]);
        let f = e(&[0, 0, 2, 2, 4])
            .runs_relative_to(&vs(5, &[0, 1, 2, 3, 4]))
            .unwrap();
        assert_eq!(f.multiplicities(), &[2, 0, 2, 0, 1]);
        assert_eq!(
            e(&[1, 1, 1, 1, 1]).runs_relative_to(&vs(5, &[0, 2, 4])),
            Err(ChainError::ImageNotInVertexSet(1))
        );
    }

    #[test]
    fn display_drops_zero_runs() {
        assert_eq!(form(5, &[0, 2, 4], &[0, 3, 2]).to_string(), "(2)_3(4)_2");
    }

    #[test]
    fn prefix_min_addition() {
        let x = form(5, &[0, 2, 4], &[2, 2, 1]);
        let y = form(5, &[0, 2, 4], &[0, 3, 2]);
        let h = add_via_prefix_mins(&x, &y).unwrap();
        assert_eq!(h.multiplicities(), &[0, 3, 2]);
        assert_eq!(h.to_endo(), x.to_endo().add(&y.to_endo()).unwrap());

        assert_eq!(add_via_prefix_mins(&x, &x).unwrap(), x);

        let x = form(3, &[0, 1, 2], &[2, 0, 1]);
        let y = form(3, &[0, 1, 2], &[1, 2, 0]);
        let h = add_via_prefix_mins(&x, &y).unwrap();
        assert_eq!(h.multiplicities(), &[1, 1, 1]);
        assert_eq!(h.to_endo(), e(&[0, 1, 2]));

        let other = form(5, &[0, 1, 4], &[2, 2, 1]);
        assert_eq!(
            add_via_prefix_mins(&x, &other),
            Err(ChainError::VertexSetMismatch)
        );
    }

    #[test]
    fn partition_groups_equal_images() {
        let p = composition_partition(&e(&[2, 2, 2, 4, 4]), &vs(5, &[0, 2, 4])).unwrap();
        assert_eq!(p.block_ends(), &[1, 2]);
        assert_eq!(p.block_images(), &[2, 4]);

        let p = composition_partition(&Endo::constant(5, 3).unwrap(), &vs(5, &[0, 2, 4])).unwrap();
        assert_eq!(p.block_ends(), &[2]);
        assert_eq!(p.block_images(), &[3]);

        let p = composition_partition(&Endo::identity(4).unwrap(), &VertexSet::full(4).unwrap())
            .unwrap();
        assert_eq!(p.block_ends(), &[0, 1, 2, 3]);
        assert_eq!(p.block_images(), &[0, 1, 2, 3]);
    }

    #[test]
    fn composition_from_runs() {
        let x = form(5, &[0, 2, 4], &[2, 2, 1]);
        let beta = e(&[2, 2, 2, 4, 4]);
        let full = VertexSet::full(5).unwrap();
        let out = compose_via_runs(&x, &beta, &full).unwrap();
        assert_eq!(out.multiplicities(), &[0, 0, 4, 0, 1]);
        assert_eq!(out.to_string(), "(2)_4(4)_1");
        assert_eq!(out.to_endo(), x.to_endo().compose(&beta).unwrap());

        let same = compose_via_runs(&x, &Endo::identity(5).unwrap(), x.vertices()).unwrap();
        assert_eq!(same, x);

        let c = compose_via_runs(&x, &Endo::constant(5, 2).unwrap(), x.vertices()).unwrap();
        assert_eq!(c.to_endo(), Endo::constant(5, 2).unwrap());

        // block image 2 is missing from {0, 4}
        assert_eq!(
            compose_via_runs(&x, &beta, &vs(5, &[0, 4])),
            Err(ChainError::ImageNotInVertexSet(2))
        );
    }
}
