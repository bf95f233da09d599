//! The alcove triangulation of `Lip(P)`.
//!
//! For a naturally labeled poset, the alcoves `q + Δ_τ` inside `Lip(P)` are
//! indexed by the descent-compatible permutations `τ`: those for which the
//! number of descents of `τ` along a saturated chain `⊥ ⋖ c_2 ⋖ … ⋖ b` does
//! not depend on the chain. That common count is `q_b`.

use std::collections::BTreeMap;

use num::{BigInt, BigRational};
use serde_json::{json, Value};
use thiserror::Error;

use crate::geometry::{HalfOpenPolytope, Row};
use crate::parallel::map_shards;
use crate::perm::Permutation;
use crate::poly::GenPoly;
use crate::poset::Poset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangulationError {
    #[error("poset has no unique maximal element")]
    NoUniqueMax,
}

/// `q_a = des_{P,τ}(a)` for `a ∈ P̂`, stored with `q_0 = 0` at index 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DescentVector(Vec<u32>);

impl DescentVector {
    pub fn from_values(values: &[u32]) -> Self {
        let mut v = vec![0];
        v.extend_from_slice(values);
        DescentVector(v)
    }

    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    #[inline]
    pub fn get(&self, a: usize) -> u32 {
        self.0[a]
    }

    /// `q_1, …, q_n`.
    pub fn values(&self) -> &[u32] {
        &self.0[1..]
    }

    pub fn as_point(&self) -> Vec<i64> {
        self.values().iter().map(|&v| i64::from(v)).collect()
    }
}

/// The translation vector of the alcove of `τ`, or `None` when `τ` is not
/// descent-compatible with `p`.
///
/// One pass in label order: `q_b = q_a + [τ(a) > τ(b)]` must agree over all
/// lower covers `a` of `b` in `P̂`.
pub fn descent_vector(p: &Poset, tau: &Permutation) -> Option<DescentVector> {
    assert_eq!(p.n(), tau.n(), "permutation size must match the poset");
    let mut q = vec![0u32; p.n() + 1];
    for b in 1..=p.n() {
        let tb = tau.get(b);
        let mut value = None;
        for &a in p.lower_covers(b) {
            let candidate = q[a] + u32::from(tau.get(a) > tb);
            match value {
                None => value = Some(candidate),
                Some(v) if v != candidate => return None,
                Some(_) => {}
            }
        }
        q[b] = value.expect("every element has a lower cover in P̂");
    }
    Some(DescentVector(q))
}

pub fn is_descent_compatible(p: &Poset, tau: &Permutation) -> bool {
    descent_vector(p, tau).is_some()
}

/// The closed unimodular simplex `q + Δ_τ`,
/// `Δ_τ = {0 ≤ x_{τ̂(1)} ≤ … ≤ x_{τ̂(n)} ≤ 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alcove {
    tau: Permutation,
    q: DescentVector,
}

impl Alcove {
    pub fn new(tau: Permutation, q: DescentVector) -> Self {
        assert_eq!(tau.n(), q.n());
        Alcove { tau, q }
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    pub fn q(&self) -> &DescentVector {
        &self.q
    }

    pub fn n(&self) -> usize {
        self.tau.n()
    }

    /// `q + c^τ` with `c^τ_i = τ(i)/(n+1)`.
    pub fn barycenter(&self) -> Vec<BigRational> {
        let d = BigInt::from(self.n() + 1);
        (1..=self.n())
            .map(|i| {
                let num = BigInt::from(self.q.get(i)) * &d + BigInt::from(self.tau.get(i));
                BigRational::new(num, d.clone())
            })
            .collect()
    }

    /// The `n + 1` lattice vertices `q + Σ_{j > i} e_{τ̂(j)}`, `i = 0..=n`.
    pub fn vertices(&self) -> Vec<Vec<i64>> {
        let inv = self.tau.inverse();
        let base = self.q.as_point();
        (0..=self.n())
            .map(|i| {
                let mut v = base.clone();
                for j in i + 1..=self.n() {
                    v[inv.get(j) - 1] += 1;
                }
                v
            })
            .collect()
    }

    /// Facet rows indexed by `i = 0..=n`: row `i < n` is
    /// `x_{τ̂(i)} − q_{τ̂(i)} ≤ x_{τ̂(i+1)} − q_{τ̂(i+1)}` (with `x_0 = q_0 = 0`),
    /// row `n` is `x_{τ̂(n)} − q_{τ̂(n)} ≤ 1`.
    pub fn facet_rows(&self) -> Vec<Row> {
        let n = self.n();
        let inv = self.tau.inverse();
        let q = |a: usize| i64::from(self.q.get(a));
        let mut rows = Vec::with_capacity(n + 1);
        for i in 0..n {
            let (lo, hi) = (inv.get(i), inv.get(i + 1));
            let mut normal = vec![0i64; n];
            if lo != 0 {
                normal[lo - 1] += 1;
            }
            normal[hi - 1] -= 1;
            rows.push(Row::le(normal, q(lo) - q(hi)));
        }
        let top = inv.get(n);
        let mut normal = vec![0i64; n];
        normal[top - 1] = 1;
        rows.push(Row::le(normal, 1 + q(top)));
        rows
    }

    pub fn polytope(&self) -> HalfOpenPolytope {
        HalfOpenPolytope::new(self.n(), self.facet_rows())
    }

    /// Indices of the facet rows violated by `w`, i.e. facets `w` lies beyond.
    pub fn facets_beyond(&self, w: &[BigRational]) -> Vec<usize> {
        self.facet_rows()
            .iter()
            .enumerate()
            .filter(|(_, row)| !row.holds(w))
            .map(|(i, _)| i)
            .collect()
    }

    /// The half-open alcove with the facets beyond `w` removed.
    pub fn half_open(&self, w: &[BigRational]) -> HalfOpenPolytope {
        let beyond = self.facets_beyond(w);
        let rows = self
            .facet_rows()
            .into_iter()
            .enumerate()
            .map(|(i, r)| if beyond.contains(&i) { r.into_strict() } else { r })
            .collect();
        HalfOpenPolytope::new(self.n(), rows)
    }

    pub fn to_json(&self) -> Value {
        json!({ "tau": self.tau.to_string(), "q": self.q.values() })
    }
}

/// The point `w = (1, 2, …, n)/(n+1)` used for half-open decompositions.
pub fn reference_point(n: usize) -> Vec<BigRational> {
    let d = BigInt::from(n + 1);
    (1..=n).map(|i| BigRational::new(BigInt::from(i), d.clone())).collect()
}

/// `stat_P(τ)` in pair form: pairs `(a, b) ∈ P̂ × P̂` with `τ(a) = τ(b) − 1`
/// and `q_a < q_b`, or `q_a = q_b` and `a > b`.
pub fn stat(alcove: &Alcove) -> usize {
    let n = alcove.n();
    let tau = alcove.tau.as_slice();
    let q = &alcove.q;
    let mut count = 0;
    for a in 0..=n {
        for b in 0..=n {
            if tau[a] + 1 == tau[b] && (q.get(a) < q.get(b) || (q.get(a) == q.get(b) && a > b)) {
                count += 1;
            }
        }
    }
    debug_assert_eq!(count, stat_index_form(alcove));
    count
}

/// The pairs counted by [`stat`].
pub fn stat_pairs(alcove: &Alcove) -> Vec<(usize, usize)> {
    let inv = alcove.tau.inverse();
    let q = &alcove.q;
    (0..alcove.n())
        .map(|i| (inv.get(i), inv.get(i + 1)))
        .filter(|&(a, b)| q.get(a) < q.get(b) || (q.get(a) == q.get(b) && a > b))
        .collect()
}

/// `stat_P(τ)` in index form: `i ∈ {0, …, n−1}` with `q_{τ̂(i)} < q_{τ̂(i+1)}`,
/// or equality and `i ∈ iDes(τ)`.
pub fn stat_index_form(alcove: &Alcove) -> usize {
    let inv = alcove.tau.inverse();
    let q = &alcove.q;
    (0..alcove.n())
        .filter(|&i| {
            let (a, b) = (inv.get(i), inv.get(i + 1));
            q.get(a) < q.get(b) || (q.get(a) == q.get(b) && a > b)
        })
        .count()
}

/// The index sets `A(τ,q)` and `D(τ,q)` whose sizes add up to the degree of
/// the h*-monomial of the half-open alcove with respect to [`reference_point`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfOpenSplit {
    pub ascents: Vec<usize>,
    pub descents: Vec<usize>,
}

impl HalfOpenSplit {
    pub fn degree(&self) -> usize {
        self.ascents.len() + self.descents.len()
    }
}

/// `A = {i : τ̂(i) < τ̂(i+1), q_{τ̂(i)} < q_{τ̂(i+1)}}`,
/// `D = {i : τ̂(i) > τ̂(i+1), q_{τ̂(i)} ≤ q_{τ̂(i+1)}}` for `0 ≤ i < n`.
/// Requires `q ≥ 0`.
pub fn half_open_split(tau: &Permutation, q: &DescentVector) -> HalfOpenSplit {
    let inv = tau.inverse();
    let mut split = HalfOpenSplit { ascents: Vec::new(), descents: Vec::new() };
    for i in 0..tau.n() {
        let (a, b) = (inv.get(i), inv.get(i + 1));
        if a < b && q.get(a) < q.get(b) {
            split.ascents.push(i);
        } else if a > b && q.get(a) <= q.get(b) {
            split.descents.push(i);
        }
    }
    split
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DcStrategy {
    /// `Filter` up to `n = 8`, `Backtrack` above.
    #[default]
    Auto,
    /// Run the compatibility pass on every permutation of `S_n`.
    Filter,
    /// Assign `τ(1), τ(2), …` in label order and prune as soon as two lower
    /// covers disagree on `q`.
    Backtrack,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DcOptions {
    pub strategy: DcStrategy,
    pub jobs: usize,
}

impl Default for DcOptions {
    fn default() -> Self {
        DcOptions { strategy: DcStrategy::Auto, jobs: 1 }
    }
}

impl DcOptions {
    pub fn jobs(jobs: usize) -> Self {
        DcOptions { jobs, ..Self::default() }
    }
}

/// Visits the descent-compatible permutations with `τ(1) = first`, in
/// lexicographic order.
fn visit_shard<F: FnMut(&Permutation, &DescentVector)>(
    p: &Poset,
    strategy: DcStrategy,
    first: usize,
    visit: &mut F,
) {
    let n = p.n();
    let strategy = match strategy {
        DcStrategy::Auto if n <= 8 => DcStrategy::Filter,
        DcStrategy::Auto => DcStrategy::Backtrack,
        s => s,
    };
    match strategy {
        DcStrategy::Filter | DcStrategy::Auto => {
            for tau in Permutation::with_first(n, first) {
                if let Some(q) = descent_vector(p, &tau) {
                    visit(&tau, &q);
                }
            }
        }
        DcStrategy::Backtrack => {
            let mut tau = vec![0usize; n + 1];
            let mut q = vec![0u32; n + 1];
            let mut used = vec![false; n + 1];
            backtrack(p, 1, first, &mut tau, &mut q, &mut used, visit);
        }
    }
}

fn backtrack<F: FnMut(&Permutation, &DescentVector)>(
    p: &Poset,
    b: usize,
    first: usize,
    tau: &mut [usize],
    q: &mut [u32],
    used: &mut [bool],
    visit: &mut F,
) {
    let n = p.n();
    if b > n {
        let t = Permutation::from_one_line_unchecked(&tau[1..]);
        visit(&t, &DescentVector(q.to_vec()));
        return;
    }
    let candidates = if b == 1 { first..=first } else { 1..=n };
    for v in candidates {
        if used[v] {
            continue;
        }
        let lower = p.lower_covers(b);
        let qb = q[lower[0]] + u32::from(tau[lower[0]] > v);
        if lower[1..].iter().any(|&a| q[a] + u32::from(tau[a] > v) != qb) {
            continue;
        }
        tau[b] = v;
        q[b] = qb;
        used[v] = true;
        backtrack(p, b + 1, first, tau, q, used, visit);
        used[v] = false;
    }
}

/// `DC(P)` with translation vectors, in lexicographic order of `τ`.
pub fn enumerate_dc(p: &Poset, opts: DcOptions) -> Vec<Alcove> {
    let shards: Vec<usize> = (1..=p.n()).collect();
    map_shards(opts.jobs, shards, |first| {
        let mut out = Vec::new();
        visit_shard(p, opts.strategy, first, &mut |t, q| out.push(Alcove::new(t.clone(), q.clone())));
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

pub fn count_dc(p: &Poset, opts: DcOptions) -> u64 {
    let shards: Vec<usize> = (1..=p.n()).collect();
    map_shards(opts.jobs, shards, |first| {
        let mut c = 0u64;
        visit_shard(p, opts.strategy, first, &mut |_, _| c += 1);
        c
    })
    .into_iter()
    .sum()
}

/// `Σ_{τ ∈ DC(P)} z^{statistic(τ, q)}`.
pub fn dc_polynomial<F>(p: &Poset, opts: DcOptions, statistic: F) -> GenPoly
where
    F: Fn(&Permutation, &DescentVector) -> usize + Sync,
{
    let by_key = dc_polynomials_by(p, opts, |_, _| 0, statistic);
    by_key.into_values().next().unwrap_or_else(GenPoly::zero)
}

/// `Σ z^{statistic}` split by `key`; counts are summed per shard and merged.
pub fn dc_polynomials_by<K, F>(p: &Poset, opts: DcOptions, key: K, statistic: F) -> BTreeMap<u32, GenPoly>
where
    K: Fn(&Permutation, &DescentVector) -> u32 + Sync,
    F: Fn(&Permutation, &DescentVector) -> usize + Sync,
{
    let shards: Vec<usize> = (1..=p.n()).collect();
    let partial = map_shards(opts.jobs, shards, |first| {
        let mut counts: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
        visit_shard(p, opts.strategy, first, &mut |t, q| {
            let row = counts.entry(key(t, q)).or_default();
            let d = statistic(t, q);
            if row.len() <= d {
                row.resize(d + 1, 0);
            }
            row[d] += 1;
        });
        counts
    });
    let mut total: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
    for shard in partial {
        for (k, row) in shard {
            let acc = total.entry(k).or_default();
            if acc.len() < row.len() {
                acc.resize(row.len(), 0);
            }
            for (a, c) in acc.iter_mut().zip(row) {
                *a += c;
            }
        }
    }
    total.into_iter().map(|(k, row)| (k, GenPoly::from_counts(&row))).collect()
}

fn stat_of(t: &Permutation, q: &DescentVector) -> usize {
    // the pair form without materializing an Alcove
    let n = t.n();
    let tau = t.as_slice();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in tau.iter().enumerate() {
        pos[v] = i;
    }
    (0..n)
        .filter(|&i| {
            let (a, b) = (pos[i], pos[i + 1]);
            q.get(a) < q.get(b) || (q.get(a) == q.get(b) && a > b)
        })
        .count()
}

/// `G_stat(P, z) = Σ_{τ ∈ DC(P)} z^{stat_P(τ)}`.
pub fn genfun_stat(p: &Poset, opts: DcOptions) -> GenPoly {
    dc_polynomial(p, opts, stat_of)
}

/// `Σ_{τ ∈ DC(P)} z^{ides(τ)}`.
pub fn genfun_ides(p: &Poset, opts: DcOptions) -> GenPoly {
    dc_polynomial(p, opts, |t, _| t.ides())
}

/// `G_stat` split by the `P`-descent count `q_⊤`: entry `k` sums
/// `z^{stat_P(τ)}` over `τ ∈ DC(P)` with `des_{P,τ}(⊤) = k`.
///
/// Entry `k` is the h*-polynomial of the slab `k < f(⊤) ≤ k + 1` of
/// `Lip(P)`, with the bottom slab `0 ≤ f(⊤) ≤ 1` taken closed.
pub fn genfun_by_top_descents(
    p: &Poset,
    opts: DcOptions,
) -> Result<BTreeMap<u32, GenPoly>, TriangulationError> {
    let top = p.unique_max().ok_or(TriangulationError::NoUniqueMax)?;
    Ok(dc_polynomials_by(p, opts, |_, q| q.get(top), stat_of))
}

/// `|{τ ∈ DC(P) : des_{P,τ}(⊤) = k}|` for each `k`.
pub fn top_descent_counts(p: &Poset, opts: DcOptions) -> Result<BTreeMap<u32, u64>, TriangulationError> {
    let top = p.unique_max().ok_or(TriangulationError::NoUniqueMax)?;
    Ok(dc_polynomials_by(p, opts, |_, q| q.get(top), |_, _| 0)
        .into_iter()
        .map(|(k, g)| (k, num::ToPrimitive::to_u64(&g.coeff(0)).expect("count fits in u64")))
        .collect())
}
