use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;

/// Upper bound on the number of roots produced by closure.
pub const ROOT_CAP: usize = 10_000;

/// Classical families accepted as presets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Preset {
    GL,
    SL,
    Sp,
    SO,
    Torus,
}

/// Group description as it appears in spec files: either
/// `{"preset":"GL","n":4}` or raw simple roots and coroots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Preset(PresetGroup),
    Raw(RawGroup),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresetGroup {
    pub preset: Preset,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGroup {
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
}

impl GroupSpec {
    pub fn preset(preset: Preset, n: usize) -> Self {
        GroupSpec::Preset(PresetGroup { preset, n })
    }
}

/// Root datum of a connected reductive group in coordinates `Λ_T = Z^rank`.
///
/// Roots are column vectors in the character lattice, coroots live in the
/// dual lattice and pair with roots by the dot product. The full root system
/// and the positive roots are derived at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    label: String,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn diff(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = unit(n, i);
    v[j] = -1;
    v
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

/// Build a root datum from a preset or from raw data.
pub fn build_root_datum(spec: &GroupSpec) -> Result<RootDatum> {
    match spec {
        GroupSpec::Preset(p) => RootDatum::preset(p.preset, p.n),
        GroupSpec::Raw(r) => RootDatum::from_raw(r.rank, r.simple_roots.clone(), r.simple_coroots.clone()),
    }
}

impl RootDatum {
    /// `n` is the matrix size for GL, SL, Sp, SO and the dimension for Torus.
    pub fn preset(kind: Preset, n: usize) -> Result<Self> {
        let (rank, roots, coroots) = match kind {
            Preset::GL => {
                if n == 0 {
                    return Err(invalid("GL(n) needs n >= 1"));
                }
                let r: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
                (n, r.clone(), r)
            }
            Preset::SL => {
                if n < 2 {
                    return Err(invalid("SL(n) needs n >= 2"));
                }
                // Root-lattice coordinates: simple roots are the basis,
                // coroots are the rows of the A_{n-1} Cartan matrix.
                let r = n - 1;
                let roots = (0..r).map(|i| unit(r, i)).collect();
                let coroots = (0..r)
                    .map(|i| {
                        (0..r)
                            .map(|j| match i.abs_diff(j) {
                                0 => 2,
                                1 => -1,
                                _ => 0,
                            })
                            .collect()
                    })
                    .collect();
                (r, roots, coroots)
            }
            Preset::Sp => {
                if n < 2 || !n.is_multiple_of(2) {
                    return Err(invalid("Sp(n) needs an even n >= 2"));
                }
                let r = n / 2;
                let mut roots: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
                let mut coroots = roots.clone();
                let mut long = unit(r, r - 1);
                long[r - 1] = 2;
                roots.push(long);
                coroots.push(unit(r, r - 1));
                (r, roots, coroots)
            }
            Preset::SO => {
                if n < 2 {
                    return Err(invalid("SO(n) needs n >= 2"));
                }
                let r = n / 2;
                let mut roots: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
                let mut coroots = roots.clone();
                if n % 2 == 1 {
                    roots.push(unit(r, r - 1));
                    let mut c = unit(r, r - 1);
                    c[r - 1] = 2;
                    coroots.push(c);
                } else if r >= 2 {
                    let mut v = unit(r, r - 1);
                    v[r - 2] = 1;
                    roots.push(v.clone());
                    coroots.push(v);
                }
                (r, roots, coroots)
            }
            Preset::Torus => {
                if n == 0 {
                    return Err(invalid("Torus(n) needs n >= 1"));
                }
                (n, Vec::new(), Vec::new())
            }
        };
        let mut rd = Self::from_raw(rank, roots, coroots)?;
        rd.label = format!("{kind:?}({n})");
        Ok(rd)
    }

    pub fn from_raw(rank: usize, simple_roots: Vec<Vec<i64>>, simple_coroots: Vec<Vec<i64>>) -> Result<Self> {
        if rank == 0 {
            return Err(invalid("root datum rank must be positive"));
        }
        if simple_roots.len() != simple_coroots.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} simple roots but {} simple coroots",
                simple_roots.len(),
                simple_coroots.len()
            )));
        }
        for (what, vs) in [("simple root", &simple_roots), ("simple coroot", &simple_coroots)] {
            if let Some((i, v)) = vs.iter().enumerate().find(|(_, v)| v.len() != rank) {
                return Err(Error::DimensionMismatch(format!(
                    "{what} {i} has {} coordinates, expected {rank}",
                    v.len()
                )));
            }
        }
        let l = simple_roots.len();
        let cartan: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| dot(&simple_roots[j], &simple_coroots[i])).collect())
            .collect();
        check_finite_type(&cartan)?;

        let mut rd = RootDatum {
            rank,
            label: "raw".to_string(),
            simple_roots,
            simple_coroots,
            cartan,
            positive: Vec::new(),
        };
        rd.positive = rd.close_positive()?;
        Ok(rd)
    }

    /// Positive roots: the closure of the simple roots under `s_i`, applied
    /// to every positive root other than `α_i` itself.
    fn close_positive(&self) -> Result<Vec<Vec<i64>>> {
        let mut seen: HashSet<Vec<i64>> = self.simple_roots.iter().cloned().collect();
        let mut out = self.simple_roots.clone();
        let mut queue: VecDeque<usize> = (0..out.len()).collect();
        while let Some(k) = queue.pop_front() {
            for i in 0..self.simple_roots.len() {
                if out[k] == self.simple_roots[i] {
                    continue;
                }
                let img = self.reflect(i, &out[k]);
                if seen.insert(img.clone()) {
                    if 2 * out.len() >= ROOT_CAP {
                        return Err(Error::CapExceeded { what: "root closure", cap: ROOT_CAP });
                    }
                    queue.push_back(out.len());
                    out.push(img);
                }
            }
        }
        Ok(out)
    }

    /// `s_i(x) = x - ⟨x, α_i^∨⟩ α_i`
    pub fn reflect(&self, i: usize, x: &[i64]) -> Vec<i64> {
        let c = dot(x, &self.simple_coroots[i]);
        x.iter().zip(&self.simple_roots[i]).map(|(a, b)| a - c * b).collect()
    }

    pub(crate) fn reflection_small(&self, i: usize) -> Vec<i64> {
        let n = self.rank;
        let mut m = crate::lattice::identity_small(n);
        for r in 0..n {
            for c in 0..n {
                m[r * n + c] -= self.simple_roots[i][r] * self.simple_coroots[i][c];
            }
        }
        m
    }

    pub fn simple_reflection(&self, i: usize) -> IntMatrix {
        crate::lattice::to_matrix(&self.reflection_small(i), self.rank)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    /// Entry `(i, j)` is `⟨α_j, α_i^∨⟩`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let neg = self.positive.iter().map(|v| v.iter().map(|x| -x).collect());
        self.positive.iter().cloned().chain(neg).collect()
    }

    pub fn pos_count(&self) -> usize {
        self.positive.len()
    }

    pub fn dim_g(&self) -> usize {
        self.rank + 2 * self.positive.len()
    }

    /// Whether `m` maps the root system onto itself.
    pub fn permutes_roots(&self, m: &IntMatrix) -> bool {
        if m.rows() != self.rank || m.cols() != self.rank {
            return false;
        }
        let Some(small) = m.to_i64() else { return false };
        let n = self.rank;
        let roots: HashSet<Vec<i64>> = self.all_roots().into_iter().collect();
        roots.iter().all(|r| {
            let img: Option<Vec<i64>> = (0..n)
                .map(|i| {
                    (0..n).try_fold(0i64, |acc, j| acc.checked_add(small[i * n + j].checked_mul(r[j])?))
                })
                .collect();
            img.is_some_and(|v| roots.contains(&v))
        })
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (rank {}, {} roots)", self.label, self.rank, 2 * self.positive.len())
    }
}

/// Diagonal 2, non-positive off-diagonal with matching zero pattern, and a
/// positive-definite symmetrization.
#[allow(clippy::needless_range_loop)]
fn check_finite_type(a: &[Vec<i64>]) -> Result<()> {
    let l = a.len();
    for i in 0..l {
        if a[i][i] != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) is {}", a[i][i])));
        }
        for j in 0..l {
            if i != j {
                if a[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!("entry ({i},{j}) is positive")));
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!("entries ({i},{j}) and ({j},{i}) disagree on zero")));
                }
            }
        }
    }
    // Symmetrizing weights d_i with d_i a_ij = d_j a_ji, one component at a time.
    let mut d: Vec<Option<BigRational>> = vec![None; l];
    for start in 0..l {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRational::from_integer(1.into()));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("assigned");
            for j in 0..l {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let dj = &di * BigRational::new(a[i][j].into(), a[j][i].into());
                match &d[j] {
                    Some(prev) if *prev != dj => {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                }
            }
        }
    }
    let mut b: Vec<Vec<BigRational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| d[i].clone().unwrap() * BigRational::from_integer(a[i][j].into()))
                .collect()
        })
        .collect();
    // Symmetric Gaussian elimination: all pivots positive iff positive definite.
    for k in 0..l {
        if !b[k][k].is_positive() {
            return Err(Error::InvalidCartan("symmetrized matrix is not positive definite".into()));
        }
        for i in k + 1..l {
            if b[i][k].is_zero() {
                continue;
            }
            let f = &b[i][k] / &b[k][k];
            for j in k..l {
                let v = &f * &b[k][j];
                b[i][j] -= v;
            }
        }
    }
    Ok(())
}
