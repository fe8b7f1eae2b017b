use std::collections::HashSet;

use num_rational::BigRational;

use super::root_datum::RootDatum;
use crate::arith::RatPoly;
use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, MatrixGroup};

pub const WEYL_CAP: usize = 1_000_000;

/// The Weyl group as a finite group of lattice automorphisms of `Λ_T`,
/// with the length of every element.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    group: MatrixGroup,
    lengths: Vec<usize>,
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    positive: HashSet<Vec<i64>>,
}

fn apply_small(m: &[i64], v: &[i64], n: usize) -> Vec<i64> {
    (0..n).map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum()).collect()
}

/// All Weyl group elements by breadth-first closure under simple reflections.
pub fn enumerate_weyl(rd: &RootDatum) -> Result<WeylGroup> {
    let n = rd.rank();
    let gens: Vec<Vec<i64>> = (0..rd.semisimple_rank()).map(|i| rd.reflection_small(i)).collect();
    let group = MatrixGroup::generate_small(n, &gens, WEYL_CAP, "Weyl group")?;
    let positive: HashSet<Vec<i64>> = rd.positive_roots().iter().cloned().collect();
    let lengths = group
        .small_elements()
        .iter()
        .map(|w| {
            positive
                .iter()
                .filter(|b| {
                    let img = apply_small(w, b, n);
                    !positive.contains(&img)
                })
                .count()
        })
        .collect();
    Ok(WeylGroup {
        group,
        lengths,
        rank: n,
        simple_roots: rd.simple_roots().to_vec(),
        positive,
    })
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &MatrixGroup {
        &self.group
    }

    pub fn elements(&self) -> impl Iterator<Item = IntMatrix> + '_ {
        self.group.iter()
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn pos_count(&self) -> usize {
        self.positive.len()
    }

    #[cfg(test)]
    pub(crate) fn from_parts_for_test(group: MatrixGroup, lengths: Vec<usize>) -> Self {
        let rank = group.dim();
        WeylGroup { group, lengths, rank, simple_roots: Vec::new(), positive: HashSet::new() }
    }

    pub fn max_length(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0)
    }

    /// `Σ t^{l(w)}` over the minimal-length representatives of `W / W_J`,
    /// i.e. the `w` with `w(α_j) > 0` for every `j ∈ J`.
    pub fn coset_poincare(&self, subset: &[usize]) -> Result<RatPoly> {
        let l = self.simple_roots.len();
        if let Some(&bad) = subset.iter().find(|&&j| j >= l) {
            return Err(Error::InvalidIndex { index: bad, bound: l });
        }
        let mut counts = vec![0u64; self.max_length() + 1];
        for (w, &len) in self.group.small_elements().iter().zip(&self.lengths) {
            let minimal = subset
                .iter()
                .all(|&j| self.positive.contains(&apply_small(w, &self.simple_roots[j], self.rank)));
            if minimal {
                counts[len] += 1;
            }
        }
        Ok(RatPoly::from_coeffs(
            counts.into_iter().map(|c| BigRational::from_integer(c.into())).collect(),
        ))
    }

    /// Full Poincaré polynomial `Σ_{w ∈ W} t^{l(w)}`.
    pub fn poincare(&self) -> RatPoly {
        self.coset_poincare(&[]).expect("empty subset")
    }
}

/// Poincaré polynomial of `W / W_J` for the parabolic subset `J`.
pub fn coset_poincare(rd: &RootDatum, subset: &[usize]) -> Result<RatPoly> {
    enumerate_weyl(rd)?.coset_poincare(subset)
}
