use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// A finite group of integer matrices, stored compactly.
///
/// Entries of finite-order integer matrices stay small in any reasonable
/// basis, so elements are kept as `i64` with overflow treated as an input
/// error. The identity is always element 0.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    dim: usize,
    elems: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

pub(crate) fn mul_small(a: &[i64], b: &[i64], n: usize) -> Option<Vec<i64>> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let y = b[k * n + j];
                if y != 0 {
                    out[i * n + j] = out[i * n + j].checked_add(x.checked_mul(y)?)?;
                }
            }
        }
    }
    Some(out)
}

pub(crate) fn identity_small(n: usize) -> Vec<i64> {
    let mut id = vec![0i64; n * n];
    for i in 0..n {
        id[i * n + i] = 1;
    }
    id
}

fn overflow() -> Error {
    Error::InvalidInput("group element entries exceed 64-bit range".into())
}

fn small_of(m: &IntMatrix, dim: usize) -> Result<Vec<i64>> {
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::DimensionMismatch(format!(
            "group element is {}x{}, expected {dim}x{dim}",
            m.rows(),
            m.cols()
        )));
    }
    m.to_i64().ok_or_else(overflow)
}

impl MatrixGroup {
    pub fn trivial(dim: usize) -> Self {
        Self::from_trusted(dim, vec![identity_small(dim)])
    }

    /// Close `gens` under multiplication by breadth-first search.
    pub fn generate(dim: usize, gens: &[IntMatrix], cap: usize) -> Result<Self> {
        let gens = gens.iter().map(|g| small_of(g, dim)).collect::<Result<Vec<_>>>()?;
        Self::generate_small(dim, &gens, cap, "group closure")
    }

    pub(crate) fn generate_small(
        dim: usize,
        gens: &[Vec<i64>],
        cap: usize,
        what: &'static str,
    ) -> Result<Self> {
        let id = identity_small(dim);
        let mut elems = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let y = mul_small(&elems[i], g, dim).ok_or_else(overflow)?;
                if !index.contains_key(&y) {
                    if elems.len() >= cap {
                        return Err(Error::CapExceeded { what, cap });
                    }
                    index.insert(y.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(y);
                }
            }
        }
        Ok(MatrixGroup { dim, elems, index })
    }

    /// Accept an explicit element list, verifying that it is a group.
    pub fn from_elements(elems: &[IntMatrix]) -> Result<Self> {
        let dim = elems
            .first()
            .map(|m| m.rows())
            .ok_or_else(|| Error::InvalidInput("empty matrix set".into()))?;
        let small = elems.iter().map(|m| small_of(m, dim)).collect::<Result<Vec<_>>>()?;
        let mut index = HashMap::new();
        let mut uniq = Vec::new();
        let id = identity_small(dim);
        if !small.contains(&id) {
            return Err(Error::NotClosed);
        }
        uniq.push(id.clone());
        index.insert(id, 0);
        for s in small {
            if !index.contains_key(&s) {
                index.insert(s.clone(), uniq.len());
                uniq.push(s);
            }
        }
        for a in &uniq {
            for b in &uniq {
                let c = mul_small(a, b, dim).ok_or_else(overflow)?;
                if !index.contains_key(&c) {
                    return Err(Error::NotClosed);
                }
            }
        }
        Ok(MatrixGroup { dim, elems: uniq, index })
    }

    pub(crate) fn from_trusted(dim: usize, elems: Vec<Vec<i64>>) -> Self {
        let index = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        MatrixGroup { dim, elems, index }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn element(&self, i: usize) -> IntMatrix {
        to_matrix(&self.elems[i], self.dim)
    }

    pub fn iter(&self) -> impl Iterator<Item = IntMatrix> + '_ {
        self.elems.iter().map(|e| to_matrix(e, self.dim))
    }

    pub fn contains(&self, m: &IntMatrix) -> bool {
        m.rows() == self.dim
            && m.cols() == self.dim
            && m.to_i64().is_some_and(|s| self.index.contains_key(&s))
    }

    pub fn position(&self, m: &IntMatrix) -> Option<usize> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return None;
        }
        m.to_i64().and_then(|s| self.index.get(&s).copied())
    }

    pub(crate) fn small_elements(&self) -> &[Vec<i64>] {
        &self.elems
    }
}

pub(crate) fn to_matrix(e: &[i64], dim: usize) -> IntMatrix {
    IntMatrix::new(dim, dim, e.iter().map(|&x| BigInt::from(x)).collect()).expect("square")
}
