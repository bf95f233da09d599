//! Lattice-point counting for (half-open) polytopes given by integer rows,
//! Ehrhart interpolation and h*-extraction.
//!
//! The counter knows nothing about posets or alcoves. It bounds each
//! coordinate by interval propagation over the rows, then walks the
//! coordinates in order, each row being checked at its last nonzero
//! coordinate.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::geometry::HalfOpenPolytope;
use crate::parallel::map_shards;
use crate::poly::{int_to_json, GenPoly, RatPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EhrhartError {
    #[error("coordinate {0} is unbounded by the rows")]
    Unbounded(usize),
    #[error("count at dilation {dilation} is {counted}, interpolation predicts {predicted}")]
    VerificationMismatch { dilation: u64, counted: u128, predicted: String },
    #[error("normalized volume {0} is not an integer")]
    NonIntegralVolume(String),
}

type Result<T> = std::result::Result<T, EhrhartError>;

struct Prepared {
    dim: usize,
    lo: Vec<i64>,
    hi: Vec<i64>,
    // rows whose last nonzero coordinate is j: (row index, coefficient at j, dilated rhs)
    owned: Vec<Vec<(usize, i64, i64)>>,
    // for coordinate j, rows with a nonzero coefficient at j that are owned later
    feeds: Vec<Vec<(usize, i64)>>,
    rows: usize,
}

enum Setup {
    Empty,
    Ready(Prepared),
}

fn floor_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}

fn prepare(q: &HalfOpenPolytope, m: u64) -> Result<Setup> {
    let dim = q.dim();
    let m = m as i64;
    let rows: Vec<(&[i64], i64)> = q
        .rows()
        .iter()
        .map(|r| (r.normal.as_slice(), m * r.rhs - i64::from(r.strict)))
        .collect();
    if rows.iter().any(|(u, c)| u.iter().all(|&x| x == 0) && *c < 0) {
        return Ok(Setup::Empty);
    }
    if dim == 0 {
        return Ok(Setup::Ready(Prepared {
            dim,
            lo: vec![],
            hi: vec![],
            owned: vec![],
            feeds: vec![],
            rows: 0,
        }));
    }

    let mut lo: Vec<Option<i64>> = vec![None; dim];
    let mut hi: Vec<Option<i64>> = vec![None; dim];
    // feasible difference systems settle within dim + 1 rounds; later rounds
    // only shrink an already finite box, which the walk tolerates
    let rounds = 4 * dim + 64;
    for _ in 0..rounds {
        let mut changed = false;
        for (u, c) in &rows {
            for j in 0..dim {
                if u[j] == 0 {
                    continue;
                }
                let mut rest = 0i64;
                let mut known = true;
                for i in 0..dim {
                    if i == j || u[i] == 0 {
                        continue;
                    }
                    let b = if u[i] > 0 { lo[i] } else { hi[i] };
                    match b {
                        Some(b) => rest += u[i] * b,
                        None => {
                            known = false;
                            break;
                        }
                    }
                }
                if !known {
                    continue;
                }
                let bound = c - rest;
                if u[j] > 0 {
                    let v = floor_div(bound, u[j]);
                    if hi[j].is_none_or(|h| v < h) {
                        hi[j] = Some(v);
                        changed = true;
                    }
                } else {
                    let v = ceil_div(bound, u[j]);
                    if lo[j].is_none_or(|l| v > l) {
                        lo[j] = Some(v);
                        changed = true;
                    }
                }
                if let (Some(l), Some(h)) = (lo[j], hi[j]) {
                    if l > h {
                        return Ok(Setup::Empty);
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut lo_b = Vec::with_capacity(dim);
    let mut hi_b = Vec::with_capacity(dim);
    for j in 0..dim {
        match (lo[j], hi[j]) {
            (Some(l), Some(h)) => {
                lo_b.push(l);
                hi_b.push(h);
            }
            _ => return Err(EhrhartError::Unbounded(j)),
        }
    }

    let mut owned = vec![Vec::new(); dim];
    let mut feeds = vec![Vec::new(); dim];
    let mut kept = 0;
    for (u, c) in &rows {
        let Some(last) = u.iter().rposition(|&x| x != 0) else {
            continue;
        };
        owned[last].push((kept, u[last], *c));
        for (j, &x) in u.iter().enumerate().take(last) {
            if x != 0 {
                feeds[j].push((kept, x));
            }
        }
        kept += 1;
    }
    Ok(Setup::Ready(Prepared { dim, lo: lo_b, hi: hi_b, owned, feeds, rows: kept }))
}

impl Prepared {
    /// Range of coordinate `j` given the partial row sums of earlier coordinates.
    fn range(&self, j: usize, partial: &[i64]) -> (i64, i64) {
        let (mut lo, mut hi) = (self.lo[j], self.hi[j]);
        for &(r, u, c) in &self.owned[j] {
            let bound = c - partial[r];
            if u > 0 {
                hi = hi.min(floor_div(bound, u));
            } else {
                lo = lo.max(ceil_div(bound, u));
            }
        }
        (lo, hi)
    }

    fn count_from(&self, j: usize, partial: &mut [i64]) -> u128 {
        let (lo, hi) = self.range(j, partial);
        if lo > hi {
            return 0;
        }
        if j + 1 == self.dim {
            return (hi - lo + 1) as u128;
        }
        let mut total = 0;
        for x in lo..=hi {
            for &(r, u) in &self.feeds[j] {
                partial[r] += u * x;
            }
            total += self.count_from(j + 1, partial);
            for &(r, u) in &self.feeds[j] {
                partial[r] -= u * x;
            }
        }
        total
    }

    fn collect_from(&self, j: usize, partial: &mut [i64], point: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if j == self.dim {
            out.push(point.clone());
            return;
        }
        let (lo, hi) = self.range(j, partial);
        for x in lo..=hi {
            for &(r, u) in &self.feeds[j] {
                partial[r] += u * x;
            }
            point.push(x);
            self.collect_from(j + 1, partial, point, out);
            point.pop();
            for &(r, u) in &self.feeds[j] {
                partial[r] -= u * x;
            }
        }
    }

    fn count_with_first(&self, x: i64) -> u128 {
        let mut partial = vec![0i64; self.rows];
        let (lo, hi) = self.range(0, &partial);
        if x < lo || x > hi {
            return 0;
        }
        if self.dim == 1 {
            return 1;
        }
        for &(r, u) in &self.feeds[0] {
            partial[r] += u * x;
        }
        self.count_from(1, &mut partial)
    }
}

/// `|mQ ∩ ℤⁿ|`, where a strict row `⟨u,x⟩ < b` dilates to `⟨u,x⟩ < m·b`.
pub fn count(q: &HalfOpenPolytope, m: u64) -> Result<u128> {
    count_with(q, m, 1)
}

/// As [`count`], sharding the first coordinate over `jobs` threads.
pub fn count_with(q: &HalfOpenPolytope, m: u64, jobs: usize) -> Result<u128> {
    let prep = match prepare(q, m)? {
        Setup::Empty => return Ok(0),
        Setup::Ready(p) => p,
    };
    if prep.dim == 0 {
        return Ok(1);
    }
    let shards: Vec<i64> = (prep.lo[0]..=prep.hi[0]).collect();
    Ok(map_shards(jobs, shards, |x| prep.count_with_first(x)).into_iter().sum())
}

/// The lattice points of `mQ` in lexicographic order.
pub fn lattice_points(q: &HalfOpenPolytope, m: u64) -> Result<Vec<Vec<i64>>> {
    let prep = match prepare(q, m)? {
        Setup::Empty => return Ok(Vec::new()),
        Setup::Ready(p) => p,
    };
    let mut out = Vec::new();
    let mut partial = vec![0i64; prep.rows];
    prep.collect_from(0, &mut partial, &mut Vec::with_capacity(prep.dim), &mut out);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartData {
    pub dim: usize,
    /// Counts at dilations `0..=dim + 2`; the last two are held out of the fit.
    pub counts: Vec<u128>,
    pub poly: RatPoly,
    pub hstar: GenPoly,
}

impl EhrhartData {
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "counts": self.counts.iter().map(|c| int_to_json(&BigInt::from(*c))).collect::<Vec<_>>(),
            "ehrhart": self.poly.to_json(),
            "hstar": self.hstar.to_json()["poly"],
        })
    }
}

pub fn ehrhart_poly(q: &HalfOpenPolytope) -> Result<EhrhartData> {
    ehrhart_poly_with(q, 1)
}

/// Interpolates through dilations `0..=n` and checks `n+1`, `n+2`.
pub fn ehrhart_poly_with(q: &HalfOpenPolytope, jobs: usize) -> Result<EhrhartData> {
    let n = q.dim();
    let mut counts: Vec<u128> = (0..=n as u64 + 2).map(|m| count_with(q, m, jobs)).collect::<Result<_>>()?;
    if counts[1..].iter().all(|&c| c == 0) {
        // a lattice polytope without lattice points is empty, and so is its 0-th dilation
        counts[0] = 0;
    }
    let ys: Vec<BigInt> = counts[..=n].iter().map(|&c| BigInt::from(c)).collect();
    let poly = RatPoly::interpolate(&ys);
    for m in n + 1..=n + 2 {
        let predicted = poly.eval(&BigRational::from_integer(BigInt::from(m)));
        if predicted != BigRational::from_integer(BigInt::from(counts[m])) {
            return Err(EhrhartError::VerificationMismatch {
                dilation: m as u64,
                counted: counts[m],
                predicted: predicted.to_string(),
            });
        }
    }
    let hstar = hstar_from_counts(&counts[..=n], n);
    Ok(EhrhartData { dim: n, counts, poly, hstar })
}

/// `h*_i = Σ_{j ≤ i} E(j) (−1)^{i−j} C(n+1, i−j)` for `0 ≤ i ≤ n`.
pub fn hstar_from_counts(counts: &[u128], n: usize) -> GenPoly {
    let binom = binomials(n + 1);
    let coeffs = (0..=n)
        .map(|i| {
            (0..=i).fold(BigInt::zero(), |acc, j| {
                let term = BigInt::from(counts[j]) * &binom[i - j];
                if (i - j) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    GenPoly::new(coeffs)
}

pub fn hstar_from_ehrhart(data: &EhrhartData, n: usize) -> GenPoly {
    hstar_from_counts(&data.counts, n)
}

fn binomials(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// `n!` times the degree-`n` coefficient of the Ehrhart polynomial.
pub fn normalized_volume(data: &EhrhartData) -> Result<BigInt> {
    let fact: BigInt = (1..=data.dim).map(BigInt::from).product();
    let v = data.poly.coeff(data.dim) * BigRational::from_integer(fact);
    if !v.is_integer() || v.is_negative() {
        return Err(EhrhartError::NonIntegralVolume(v.to_string()));
    }
    Ok(v.to_integer())
}
