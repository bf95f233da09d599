//! H- and V-representations of Lipschitz polytopes and their slabs, with
//! the structural checks (2-level, central symmetry, 2-Gorenstein, spindle).
//!
//! Everything is exact: rows have integer data and membership is tested on
//! rationals.

use std::collections::BTreeSet;

use num::{BigInt, BigRational, Integer, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::ehrhart::{self, EhrhartError};
use crate::poset::{Poset, BOTTOM};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("poset has no unique maximal element")]
    NoUniqueMax,
    #[error("hypersimplex index {k} outside 1..={height}")]
    KOutOfRange { k: usize, height: usize },
    #[error("P̂ is not ranked")]
    NotRanked,
    #[error("P̂ is not a rooted tree")]
    NotRootedTree,
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error(transparent)]
    Ehrhart(#[from] EhrhartError),
}

type Result<T, E = GeometryError> = std::result::Result<T, E>;

/// `⟨normal, x⟩ ≤ rhs`, or `< rhs` when `strict`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Row {
    pub normal: Vec<i64>,
    pub rhs: i64,
    pub strict: bool,
}

impl Row {
    pub fn le(normal: Vec<i64>, rhs: i64) -> Self {
        Row { normal, rhs, strict: false }
    }

    pub fn lt(normal: Vec<i64>, rhs: i64) -> Self {
        Row { normal, rhs, strict: true }
    }

    pub fn into_strict(self) -> Self {
        Row { strict: true, ..self }
    }

    pub fn into_weak(self) -> Self {
        Row { strict: false, ..self }
    }

    pub fn value_int(&self, x: &[i64]) -> i64 {
        self.normal.iter().zip(x).map(|(u, v)| u * v).sum()
    }

    pub fn value(&self, x: &[BigRational]) -> BigRational {
        self.normal
            .iter()
            .zip(x)
            .filter(|(u, _)| **u != 0)
            .fold(BigRational::zero(), |acc, (u, v)| acc + v * BigInt::from(*u))
    }

    pub fn holds(&self, x: &[BigRational]) -> bool {
        let lhs = self.value(x);
        let rhs = BigRational::from_integer(BigInt::from(self.rhs));
        if self.strict {
            lhs < rhs
        } else {
            lhs <= rhs
        }
    }

    pub fn holds_int(&self, x: &[i64]) -> bool {
        let lhs = self.value_int(x);
        if self.strict {
            lhs < self.rhs
        } else {
            lhs <= self.rhs
        }
    }

    pub fn is_primitive(&self) -> bool {
        self.normal.iter().fold(0i64, |g, &u| g.gcd(&u)) == 1
    }

    pub fn to_json(&self) -> Value {
        json!({ "normal": self.normal, "rhs": self.rhs, "strict": self.strict })
    }
}

/// A polytope `{x : A x ≤ b}` where individual rows may be strict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfOpenPolytope {
    dim: usize,
    rows: Vec<Row>,
}

impl HalfOpenPolytope {
    pub fn new(dim: usize, rows: Vec<Row>) -> Self {
        assert!(rows.iter().all(|r| r.normal.len() == dim), "row width must equal the dimension");
        HalfOpenPolytope { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn push(&mut self, row: Row) {
        assert_eq!(row.normal.len(), self.dim);
        self.rows.push(row);
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        x.len() == self.dim && self.rows.iter().all(|r| r.holds(x))
    }

    pub fn contains_int(&self, x: &[i64]) -> bool {
        x.len() == self.dim && self.rows.iter().all(|r| r.holds_int(x))
    }

    /// All rows weak.
    pub fn closure(&self) -> Self {
        HalfOpenPolytope::new(self.dim, self.rows.iter().cloned().map(Row::into_weak).collect())
    }

    /// All rows strict.
    pub fn interior(&self) -> Self {
        HalfOpenPolytope::new(self.dim, self.rows.iter().cloned().map(Row::into_strict).collect())
    }

    pub fn is_half_open(&self) -> bool {
        self.rows.iter().any(|r| r.strict)
    }

    pub fn to_json(&self) -> Value {
        json!({ "dim": self.dim, "rows": self.rows.iter().map(Row::to_json).collect::<Vec<_>>() })
    }
}

fn unit(n: usize, a: usize, s: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[a - 1] = s;
    v
}

fn diff(n: usize, b: usize, a: usize) -> Vec<i64> {
    // e_b − e_a, with e_0 = 0
    let mut v = vec![0; n];
    v[b - 1] += 1;
    if a != BOTTOM {
        v[a - 1] -= 1;
    }
    v
}

/// `Lip(P)`: `0 ≤ f(a) ≤ 1` for minimal `a`, `0 ≤ f(b) − f(a) ≤ 1` for `a ⋖ b`.
pub fn hrep_lip(p: &Poset) -> HalfOpenPolytope {
    let n = p.n();
    let mut rows = Vec::new();
    for (a, b) in p.hat_covers() {
        let d = diff(n, b, a);
        rows.push(Row::le(d.iter().map(|x| -x).collect(), 0));
        rows.push(Row::le(d, 1));
    }
    HalfOpenPolytope::new(n, rows)
}

/// The order cone `K(P)`: `f(a) ≥ 0` on minima and `f(a) ≤ f(b)` for `a ⋖ b`.
pub fn order_cone_rows(p: &Poset) -> Vec<Row> {
    let n = p.n();
    p.hat_covers()
        .map(|(a, b)| Row::le(diff(n, b, a).iter().map(|x| -x).collect(), 0))
        .collect()
}

/// `Δ(P,k) = Lip(P) ∩ {k−1 ≤ f(⊤) ≤ k}`; with `half_open` the lower row is strict.
pub fn hrep_hypersimplex(p: &Poset, k: usize, half_open: bool) -> Result<HalfOpenPolytope> {
    let top = p.unique_max().ok_or(GeometryError::NoUniqueMax)?;
    let height = p.height();
    if k == 0 || k > height {
        return Err(GeometryError::KOutOfRange { k, height });
    }
    let n = p.n();
    let mut q = hrep_lip(p);
    let lower = Row { normal: unit(n, top, -1), rhs: -(k as i64 - 1), strict: half_open };
    q.push(lower);
    q.push(Row::le(unit(n, top, 1), k as i64));
    Ok(q)
}

/// The `k`-th slab of the decomposition of `Lip(P)` along `f(⊤)`: half-open
/// `k−1 < f(⊤) ≤ k` for `k ≥ 2`, closed for `k = 1`.
pub fn hypersimplex_slab(p: &Poset, k: usize) -> Result<HalfOpenPolytope> {
    hrep_hypersimplex(p, k, k >= 2)
}

/// A set of lattice points, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    points: Vec<Vec<i64>>,
}

impl VertexSet {
    pub fn new(points: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let set: BTreeSet<Vec<i64>> = points.into_iter().collect();
        VertexSet { points: set.into_iter().collect() }
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(v)).is_ok()
    }

    pub fn to_json(&self) -> Value {
        json!(self.points)
    }
}

/// Vertices `1_{F_1} + … + 1_{F_m}` over neighbor-closed filter chains.
pub fn vertices(p: &Poset) -> VertexSet {
    VertexSet::new(p.neighbor_closed_chains().iter().map(|c| c.vertex(p.n())))
}

/// Vertices of `Δ(P,k)`: chains of length `k−1` or `k`.
pub fn vertices_hypersimplex(p: &Poset, k: usize) -> Result<VertexSet> {
    hrep_hypersimplex(p, k, false)?;
    Ok(VertexSet::new(
        p.neighbor_closed_chains()
            .iter()
            .filter(|c| c.len() + 1 == k || c.len() == k)
            .map(|c| c.vertex(p.n())),
    ))
}

fn check_len(f: &[i64], n: usize) -> Result<()> {
    if f.len() != n {
        return Err(GeometryError::DimensionMismatch { got: f.len(), expected: n });
    }
    Ok(())
}

/// `(Tf)(b) = f(b) − f(b̄)` where `b̄` is the unique lower cover of `b` in `P̂`.
///
/// Defined whenever the Hasse diagram of `P̂` is a tree, which covers rooted
/// trees and antichains.
pub fn transform_t(p: &Poset, f: &[i64]) -> Result<Vec<i64>> {
    if !p.is_rooted_forest() {
        return Err(GeometryError::NotRootedTree);
    }
    check_len(f, p.n())?;
    let at = |a: usize| if a == BOTTOM { 0 } else { f[a - 1] };
    Ok((1..=p.n()).map(|b| at(b) - at(p.lower_covers(b)[0])).collect())
}

/// `(T⁻¹g)(b)`: the sum of `g` along the unique chain from `⊥` to `b`.
pub fn transform_t_inverse(p: &Poset, g: &[i64]) -> Result<Vec<i64>> {
    if !p.is_rooted_forest() {
        return Err(GeometryError::NotRootedTree);
    }
    check_len(g, p.n())?;
    let mut f = vec![0i64; p.n() + 1];
    for b in 1..=p.n() {
        f[b] = f[p.lower_covers(b)[0]] + g[b - 1];
    }
    f.remove(0);
    Ok(f)
}

/// Dimension of the affine hull of `points` (`None` for the empty set).
pub fn affine_dimension(points: &[Vec<i64>]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let mut rows: Vec<Vec<i128>> = rest
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| i128::from(a - b)).collect())
        .collect();
    Some(integer_rank(&mut rows))
}

// fraction-free elimination; rows are divided by their content to keep entries small
fn integer_rank(rows: &mut [Vec<i128>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let (pv, rv) = (prow[c], row[c]);
            for (x, &y) in row.iter_mut().zip(prow.iter()) {
                *x = *x * pv - y * rv;
            }
            let g = row.iter().fold(0i128, |g, &x| g.gcd(&x));
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

/// Indices of rows of `q` whose tight points among `points` span a hyperplane.
pub fn facet_rows(q: &HalfOpenPolytope, points: &[Vec<i64>]) -> Vec<usize> {
    let facet_dim = q.dim().checked_sub(1);
    q.rows()
        .iter()
        .enumerate()
        .filter(|(_, row)| {
            let tight: Vec<Vec<i64>> =
                points.iter().filter(|v| row.value_int(v) == row.rhs).cloned().collect();
            affine_dimension(&tight) == facet_dim
        })
        .map(|(i, _)| i)
        .collect()
}

/// A facet on which the vertex values take other than two distinct values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoLevelWitness {
    pub row: Row,
    pub values: Vec<i64>,
}

/// Checks that every facet hyperplane has exactly one parallel translate
/// through all remaining vertices.
pub fn two_level_witness(q: &HalfOpenPolytope, verts: &VertexSet) -> Option<TwoLevelWitness> {
    facet_rows(q, verts.points()).into_iter().find_map(|i| {
        let row = &q.rows()[i];
        let values: BTreeSet<i64> = verts.points().iter().map(|v| row.value_int(v)).collect();
        (values.len() != 2).then(|| TwoLevelWitness { row: row.clone(), values: values.into_iter().collect() })
    })
}

pub fn is_two_level(p: &Poset) -> std::result::Result<(), TwoLevelWitness> {
    match two_level_witness(&hrep_lip(p), &vertices(p)) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

/// The center `c` with `2c − v ∈ V` for all `v ∈ V`, if the point set is
/// centrally symmetric. The centroid is the only candidate.
pub fn symmetry_center(verts: &VertexSet) -> Option<Vec<BigRational>> {
    let pts = verts.points();
    let first = pts.first()?;
    let count = pts.len() as i64;
    let sum: Vec<i64> = (0..first.len()).map(|j| pts.iter().map(|v| v[j]).sum()).collect();
    for v in pts {
        let mut image = Vec::with_capacity(v.len());
        for (s, x) in sum.iter().zip(v) {
            let num = 2 * s - count * x;
            if num % count != 0 {
                return None;
            }
            image.push(num / count);
        }
        if !verts.contains(&image) {
            return None;
        }
    }
    Some(sum.iter().map(|&s| BigRational::new(BigInt::from(s), BigInt::from(count))).collect())
}

/// `ρ − Lip(P) = Lip(P)`, compared on vertex sets.
pub fn central_symmetry_check(p: &Poset) -> Result<bool> {
    let rho = p.rank_function().ok_or(GeometryError::NotRanked)?;
    let verts = vertices(p);
    Ok(verts.points().iter().all(|v| {
        let image: Vec<i64> = v.iter().enumerate().map(|(i, x)| i64::from(rho[i + 1]) - x).collect();
        verts.contains(&image)
    }))
}

/// Interior lattice points of `2·Lip(P)` and whether the recentered facets
/// all sit at lattice distance one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinReport {
    pub interior_points: Vec<Vec<i64>>,
    /// `c` for each facet `⟨u, x⟩ ≤ c` of `2·Lip(P) − q`; empty unless the
    /// interior point `q` is unique.
    pub facet_offsets: Vec<i64>,
}

impl GorensteinReport {
    pub fn is_gorenstein(&self) -> bool {
        self.interior_points.len() == 1 && self.facet_offsets.iter().all(|&c| c == 1)
    }
}

pub fn gorenstein2(p: &Poset) -> Result<GorensteinReport> {
    let lip = hrep_lip(p);
    let interior_points = ehrhart::lattice_points(&lip.interior(), 2)?;
    let mut facet_offsets = Vec::new();
    if let [center] = interior_points.as_slice() {
        let verts = vertices(p);
        for i in facet_rows(&lip, verts.points()) {
            let row = &lip.rows()[i];
            debug_assert!(row.is_primitive());
            facet_offsets.push(2 * row.rhs - row.value_int(center));
        }
    }
    Ok(GorensteinReport { interior_points, facet_offsets })
}

/// `2·Lip(P)` has a unique interior lattice point and is reflexive around it.
pub fn gorenstein2_check(p: &Poset) -> Result<bool> {
    Ok(gorenstein2(p)?.is_gorenstein())
}

/// `Lip(P) = K(P) ∩ (ρ − K(P))` as an equality of row sets.
pub fn spindle_check(p: &Poset) -> Result<bool> {
    let rho = p.rank_function().ok_or(GeometryError::NotRanked)?;
    let rho: Vec<i64> = rho[1..].iter().map(|&r| i64::from(r)).collect();
    let cone = order_cone_rows(p);
    let reflected = cone.iter().map(|r| {
        // x ↦ ρ − x turns ⟨u, x⟩ ≤ c into ⟨−u, x⟩ ≤ c − ⟨u, ρ⟩
        Row::le(r.normal.iter().map(|u| -u).collect(), r.rhs - r.value_int(&rho))
    });
    let spindle: BTreeSet<Row> = cone.iter().cloned().chain(reflected).collect();
    let lip: BTreeSet<Row> = hrep_lip(p).rows().iter().cloned().collect();
    Ok(spindle == lip)
}

pub fn membership(q: &HalfOpenPolytope, x: &[BigRational]) -> bool {
    q.contains(x)
}

/// `f` extended by `f(⊥) = 0` is isotone with `f(b) − f(a) ≤ k·d(a, b)` for
/// all `a ⪯ b` in `P̂`, i.e. `f ∈ k·Lip(P)`.
pub fn lipschitz_membership(p: &Poset, f: &[BigRational], k: &BigRational) -> bool {
    if f.len() != p.n() {
        return false;
    }
    let zero = BigRational::zero();
    let at = |a: usize| if a == BOTTOM { &zero } else { &f[a - 1] };
    for a in 0..=p.n() {
        for b in 1..=p.n() {
            if a == b {
                continue;
            }
            if let Some(d) = p.quasi_metric(a, b) {
                let delta = at(b) - at(a);
                if delta.is_negative() || delta > k * BigRational::from_integer(BigInt::from(d)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Scales every row's right-hand side by `k`.
pub fn dilate(q: &HalfOpenPolytope, k: i64) -> HalfOpenPolytope {
    HalfOpenPolytope::new(
        q.dim(),
        q.rows().iter().map(|r| Row { rhs: r.rhs * k, ..r.clone() }).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn lip_row_counts() {
        for n in 2..=7 {
            assert_eq!(hrep_lip(&fixtures::short_rooted_tree(n)).rows().len(), 2 * n);
            assert_eq!(hrep_lip(&fixtures::short_hanging_tree(n)).rows().len(), 4 * (n - 1));
        }
        let seg = hrep_lip(&fixtures::chain(1));
        assert_eq!(seg.rows(), &[Row::le(vec![-1], 0), Row::le(vec![1], 1)]);
    }

    #[test]
    fn wedge3_vertices() {
        let v = vertices(&fixtures::wedge3());
        let expected: Vec<Vec<i64>> =
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 1], vec![1, 1, 2]];
        assert_eq!(v.points(), expected.as_slice());
    }

    #[test]
    fn short_tree_vertices() {
        for n in 2..=7 {
            let rooted = vertices(&fixtures::short_rooted_tree(n));
            assert_eq!(rooted.len(), 1 << n);
            // 1_F and 1_F + 1_[n] for F ⊆ {2..n}
            for mask in 0..1u64 << (n - 1) {
                let f: Vec<i64> = (0..n).map(|i| i64::from(i > 0 && mask >> (i - 1) & 1 == 1)).collect();
                let g: Vec<i64> = f.iter().map(|x| x + 1).collect();
                assert!(rooted.contains(&f) && rooted.contains(&g));
            }
            assert_eq!(vertices(&fixtures::short_hanging_tree(n)).len(), (1 << (n - 1)) + 2);
        }
    }

    #[test]
    fn hypersimplex_vertices_of_wedge3() {
        let p = fixtures::wedge3();
        assert_eq!(vertices_hypersimplex(&p, 1).unwrap().len(), 5);
        let filters: Vec<Vec<i64>> = p.filters().iter().map(|f| f.indicator(3)).collect();
        assert_eq!(vertices_hypersimplex(&p, 1).unwrap(), VertexSet::new(filters));
        let expected = VertexSet::new(vec![
            vec![0, 0, 1],
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![1, 1, 1],
            vec![1, 1, 2],
        ]);
        assert_eq!(vertices_hypersimplex(&p, 2).unwrap(), expected);
        assert_eq!(
            vertices_hypersimplex(&p, 3).unwrap_err(),
            GeometryError::KOutOfRange { k: 3, height: 2 }
        );
        assert_eq!(
            hrep_hypersimplex(&fixtures::antichain(2), 1, false).unwrap_err(),
            GeometryError::NoUniqueMax
        );
    }

    #[test]
    fn transform_on_chain() {
        let c = fixtures::chain(5);
        assert_eq!(transform_t(&c, &[1, 2, 3, 4, 5]).unwrap(), vec![1; 5]);
        let g = vec![3, -1, 4, 1, -5];
        assert_eq!(transform_t(&c, &transform_t_inverse(&c, &g).unwrap()).unwrap(), g);
        let images = VertexSet::new(vertices(&c).points().iter().map(|v| transform_t(&c, v).unwrap()));
        assert_eq!(images.len(), 32);
        assert!(images.points().iter().all(|v| v.iter().all(|&x| x == 0 || x == 1)));
        assert_eq!(transform_t(&fixtures::wedge3(), &[0, 0, 0]).unwrap_err(), GeometryError::NotRootedTree);
    }

    #[test]
    fn two_level_examples() {
        assert!(is_two_level(&fixtures::wedge3()).is_ok());
        assert!(is_two_level(&fixtures::antichain(3)).is_ok());
        // a cross-polytope-like square with a vertex pushed out is not 2-level
        let q = HalfOpenPolytope::new(
            2,
            vec![Row::le(vec![-1, 0], 0), Row::le(vec![0, -1], 0), Row::le(vec![1, 1], 2)],
        );
        let tri = VertexSet::new(vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![1, 0]]);
        assert!(two_level_witness(&q, &tri).is_some());
    }

    #[test]
    fn facets_of_wedge3() {
        let p = fixtures::wedge3();
        let lip = hrep_lip(&p);
        assert_eq!(facet_rows(&lip, vertices(&p).points()).len(), lip.rows().len());
    }

    #[test]
    fn affine_dimension_examples() {
        assert_eq!(affine_dimension(&[]), None);
        assert_eq!(affine_dimension(&[vec![1, 2]]), Some(0));
        assert_eq!(affine_dimension(&[vec![0, 0], vec![1, 1], vec![2, 2]]), Some(1));
        assert_eq!(affine_dimension(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]), Some(2));
    }

    #[test]
    fn ranked_checks() {
        let p = fixtures::wedge3();
        assert_eq!(central_symmetry_check(&p), Ok(true));
        assert_eq!(spindle_check(&p), Ok(true));
        assert_eq!(spindle_check(&fixtures::chain(4)), Ok(true));
        assert_eq!(central_symmetry_check(&fixtures::chain(4)), Ok(true));
        let rep = gorenstein2(&p).unwrap();
        assert_eq!(rep.interior_points, vec![vec![1, 1, 2]]);
        assert!(rep.is_gorenstein());
        assert!(gorenstein2_check(&fixtures::chain(1)).unwrap());
    }

    #[test]
    fn non_ranked_checks() {
        let p = fixtures::non_ranked();
        assert_eq!(central_symmetry_check(&p), Err(GeometryError::NotRanked));
        assert_eq!(spindle_check(&p), Err(GeometryError::NotRanked));
        assert!(symmetry_center(&vertices(&p)).is_none());
        let rep = gorenstein2(&p).unwrap();
        assert!(rep.interior_points.is_empty());
        assert!(!rep.is_gorenstein());
    }

    #[test]
    fn symmetry_center_of_ranked_poset_is_half_rank() {
        let c = symmetry_center(&vertices(&fixtures::wedge3())).unwrap();
        assert_eq!(c, vec![rat(1, 2), rat(1, 2), rat(1, 1)]);
    }

    #[test]
    fn lipschitz_membership_examples() {
        let p = fixtures::wedge3();
        let one = rat(1, 1);
        let rho = vec![rat(1, 1), rat(1, 1), rat(2, 1)];
        assert!(lipschitz_membership(&p, &rho, &one));
        assert!(membership(&hrep_lip(&p), &rho));
        let bad = vec![rat(1, 2), rat(0, 1), rat(3, 2)];
        assert!(!lipschitz_membership(&p, &bad, &one));
        assert!(lipschitz_membership(&p, &bad, &rat(3, 2)));
        assert!(membership(&dilate(&hrep_lip(&p), 2), &bad));
    }
}
