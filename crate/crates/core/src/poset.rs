//! Finite posets over natural labels `1..=n` with a virtual minimum `⊥ = 0`.
//!
//! Subsets of the ground set are `u64` bitmasks where element `a` occupies
//! bit `a - 1`, which caps posets at [`MAX_ELEMENTS`] elements.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const MAX_ELEMENTS: usize = 64;

/// Label of the adjoined minimum of `P̂`.
pub const BOTTOM: usize = 0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("poset must have at least one element")]
    Empty,
    #[error("poset has {0} elements, at most {MAX_ELEMENTS} are supported")]
    TooLarge(usize),
    #[error("label {label} is outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("cover relations contain a cycle")]
    Cycle,
    #[error("self-loop on element {0}")]
    SelfLoop(usize),
    #[error("duplicate cover pair ({0}, {1})")]
    DuplicatePair(usize, usize),
    #[error("relations are not naturally labeled: {0} ⋖ {1}")]
    NotNaturallyLabeled(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid JSON poset: {0}")]
    Json(String),
}

type Result<T, E = PosetError> = std::result::Result<T, E>;

#[inline]
fn bit(a: usize) -> u64 {
    1u64 << (a - 1)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_members(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i + 1)
        }
    })
}

/// Map from input labels to natural labels produced by [`Poset::from_covers`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    // index 0 is ⊥ and maps to itself
    old_to_new: Vec<usize>,
}

impl Relabeling {
    pub fn identity(n: usize) -> Self {
        Relabeling { old_to_new: (0..=n).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.old_to_new.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// New label of the input element `old`.
    pub fn apply(&self, old: usize) -> usize {
        self.old_to_new[old]
    }

    pub fn old_to_new(&self) -> &[usize] {
        &self.old_to_new[1..]
    }

    pub fn new_to_old(&self) -> Vec<usize> {
        let mut inv = vec![0; self.old_to_new.len()];
        for (old, &new) in self.old_to_new.iter().enumerate() {
            inv[new] = old;
        }
        inv.remove(0);
        inv
    }
}

/// A finite, naturally labeled poset given by its cover relations.
///
/// Elements are `1..=n`; `a ⋖ b` implies `a < b`. The minimum `⊥ = 0` of
/// `P̂` is never stored in `covers` but appears in [`Poset::lower_covers`]
/// of every minimal element and as [`Poset::upper_covers`]`(0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    // up[a]: mask of all b with a ⪯ b (a itself included)
    up: Vec<u64>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers)
    }
}

impl Poset {
    /// Builds a poset from (possibly redundant) order relations.
    ///
    /// The transitive reduction is taken. If some pair violates natural
    /// labeling, the elements are relabeled along a topological sort that
    /// always picks the smallest available input label; the returned
    /// [`Relabeling`] records the map.
    pub fn from_covers(n: usize, pairs: &[(usize, usize)]) -> Result<(Poset, Relabeling)> {
        if n == 0 {
            return Err(PosetError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(n));
        }
        for &(a, b) in pairs {
            for label in [a, b] {
                if label == 0 || label > n {
                    return Err(PosetError::LabelOutOfRange { label, n });
                }
            }
            if a == b {
                return Err(PosetError::Cycle);
            }
        }
        let edges: BTreeSet<(usize, usize)> = pairs.iter().copied().collect();

        let mut succ = vec![Vec::new(); n + 1];
        let mut indeg = vec![0usize; n + 1];
        for &(a, b) in &edges {
            succ[a].push(b);
            indeg[b] += 1;
        }
        let mut heap: BinaryHeap<Reverse<usize>> =
            (1..=n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        if order.len() != n {
            return Err(PosetError::Cycle);
        }
        let mut old_to_new = vec![0; n + 1];
        for (i, &v) in order.iter().enumerate() {
            old_to_new[v] = i + 1;
        }
        let relabeled: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| (old_to_new[a], old_to_new[b]))
            .collect();
        let poset = Self::build_natural(n, &relabeled);
        Ok((poset, Relabeling { old_to_new }))
    }

    /// Builds a poset from relations that already respect natural labeling.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        let (poset, relabel) = Self::from_covers(n, pairs)?;
        if !relabel.is_identity() {
            let &(a, b) = pairs
                .iter()
                .find(|&&(a, b)| a > b)
                .expect("a non-identity relabeling needs a decreasing pair");
            return Err(PosetError::NotNaturallyLabeled(a, b));
        }
        Ok(poset)
    }

    // pairs satisfy a < b; duplicates and redundant pairs are allowed
    fn build_natural(n: usize, pairs: &[(usize, usize)]) -> Poset {
        let mut succ = vec![0u64; n + 1];
        for &(a, b) in pairs {
            succ[a] |= bit(b);
        }
        // strict up-sets, computed from the top since successors carry larger labels
        let mut above = vec![0u64; n + 1];
        for a in (1..=n).rev() {
            let mut m = succ[a];
            for b in mask_members(succ[a]) {
                m |= above[b];
            }
            above[a] = m;
        }
        let mut covers = Vec::new();
        for a in 1..=n {
            for b in mask_members(succ[a]) {
                let redundant = mask_members(above[a]).any(|c| c != b && above[c] & bit(b) != 0);
                if !redundant {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();
        let mut lower = vec![Vec::new(); n + 1];
        let mut upper = vec![Vec::new(); n + 1];
        for &(a, b) in &covers {
            lower[b].push(a);
            upper[a].push(b);
        }
        for b in 1..=n {
            if lower[b].is_empty() {
                lower[b].push(BOTTOM);
                upper[BOTTOM].push(b);
            }
        }
        let mut up = vec![0u64; n + 1];
        for a in 1..=n {
            up[a] = above[a] | bit(a);
        }
        up[BOTTOM] = full_mask(n);
        Poset { n, covers, lower, upper, up }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cover relations `a ⋖ b` of `P` (not involving `⊥`), sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Lower covers of `b` in `P̂`; `[0]` for a minimal element.
    pub fn lower_covers(&self, b: usize) -> &[usize] {
        &self.lower[b]
    }

    /// Upper covers of `a` in `P̂`; for `a = 0` these are the minimal elements.
    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper[a]
    }

    /// All cover relations of `P̂`, the `⊥ ⋖ m` pairs first.
    pub fn hat_covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.upper[BOTTOM]
            .iter()
            .map(|&m| (BOTTOM, m))
            .chain(self.covers.iter().copied())
    }

    pub fn minimal(&self) -> &[usize] {
        &self.upper[BOTTOM]
    }

    pub fn maximal(&self) -> Vec<usize> {
        (1..=self.n).filter(|&a| self.upper[a].is_empty()).collect()
    }

    /// `a ⪯ b` in `P̂`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        (b == BOTTOM && a == BOTTOM) || (b != BOTTOM && self.up[a] & bit(b) != 0)
    }

    /// Mask of the principal filter `{b : a ⪯ b}` (for `a ≥ 1`).
    pub fn principal_filter(&self, a: usize) -> u64 {
        self.up[a]
    }

    pub fn ground_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn is_filter(&self, mask: u64) -> bool {
        mask & !self.ground_mask() == 0 && mask_members(mask).all(|a| self.up[a] & !mask == 0)
    }

    /// Minimal number of cover steps from `a` to `b` in `P̂`; `None` when `a ⋠ b`.
    pub fn quasi_metric(&self, a: usize, b: usize) -> Option<u32> {
        let mut dist = vec![u32::MAX; self.n + 1];
        let mut queue = VecDeque::from([a]);
        dist[a] = 0;
        while let Some(x) = queue.pop_front() {
            if x == b {
                return Some(dist[x]);
            }
            for &y in &self.upper[x] {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// All filters of `P`, including `∅` and `P`, sorted by bitmask.
    pub fn filters(&self) -> Vec<Filter> {
        fn go(p: &Poset, a: usize, mask: u64, out: &mut Vec<Filter>) {
            if a == 0 {
                out.push(Filter(mask));
                return;
            }
            go(p, a - 1, mask, out);
            // upper covers carry larger labels and are already decided
            if p.upper[a].iter().all(|&b| mask & bit(b) != 0) {
                go(p, a - 1, mask | bit(a), out);
            }
        }
        let mut out = Vec::new();
        go(self, self.n, 0, &mut out);
        out.sort_unstable();
        out
    }

    /// The neighborhood `∇(F) = {a ∈ P̂ \ F : a ⋖ b for some b ∈ F}`.
    pub fn neighborhood(&self, filter: Filter) -> Neighborhood {
        let mut mask = 0u64;
        let mut bottom = false;
        for b in filter.members() {
            for &a in &self.lower[b] {
                if a == BOTTOM {
                    bottom = true;
                } else if !filter.contains(a) {
                    mask |= bit(a);
                }
            }
        }
        Neighborhood { mask, bottom }
    }

    /// All neighbor-closed chains of nonempty filters, the empty chain first.
    pub fn neighbor_closed_chains(&self) -> Vec<FilterChain> {
        let filters: Vec<Filter> = self.filters().into_iter().filter(|f| !f.is_empty()).collect();
        // filters allowed below a given one: F ∪ ∇(F) ⊆ outer, ⊥ ∉ ∇(F)
        let closures: Vec<Option<u64>> = filters
            .iter()
            .map(|&f| {
                let nb = self.neighborhood(f);
                (!nb.bottom).then_some(f.0 | nb.mask)
            })
            .collect();

        fn extend(
            filters: &[Filter],
            closures: &[Option<u64>],
            chain: &mut Vec<Filter>,
            out: &mut Vec<FilterChain>,
        ) {
            out.push(FilterChain { filters: chain.clone() });
            let outer = chain.last().expect("nonempty chain").0;
            for (i, f) in filters.iter().enumerate() {
                if f.0 == outer {
                    continue;
                }
                if let Some(cl) = closures[i] {
                    if cl & !outer == 0 {
                        chain.push(*f);
                        extend(filters, closures, chain, out);
                        chain.pop();
                    }
                }
            }
        }

        let mut out = vec![FilterChain { filters: Vec::new() }];
        let mut chain = Vec::new();
        for f in &filters {
            chain.push(*f);
            extend(&filters, &closures, &mut chain, &mut out);
            chain.pop();
        }
        out
    }

    /// Rank function of `P̂` indexed by `0..=n`, if `P̂` is ranked.
    pub fn rank_function(&self) -> Option<Vec<u32>> {
        let mut rho = vec![0u32; self.n + 1];
        for b in 1..=self.n {
            let lower = &self.lower[b];
            let r = rho[lower[0]] + 1;
            if lower.iter().any(|&a| rho[a] + 1 != r) {
                return None;
            }
            rho[b] = r;
        }
        Some(rho)
    }

    pub fn is_ranked_hat(&self) -> bool {
        self.rank_function().is_some()
    }

    /// Number of elements of a longest chain of `P`.
    pub fn height(&self) -> usize {
        let mut h = vec![0usize; self.n + 1];
        for b in 1..=self.n {
            h[b] = 1 + self.lower[b].iter().map(|&a| h[a]).max().unwrap_or(0);
        }
        h.into_iter().max().unwrap_or(0)
    }

    pub fn unique_max(&self) -> Option<usize> {
        match self.maximal().as_slice() {
            [top] => Some(*top),
            _ => None,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Unique minimum and a tree as Hasse diagram.
    pub fn is_rooted_tree(&self) -> bool {
        self.minimal().len() == 1 && self.is_rooted_forest()
    }

    /// Every element has exactly one lower cover in `P̂`, so the Hasse diagram of `P̂` is a tree.
    pub fn is_rooted_forest(&self) -> bool {
        (1..=self.n).all(|b| self.lower[b].len() == 1)
    }

    /// Connected components, each naturally labeled by the increasing order of
    /// its original labels, together with those original labels.
    pub fn components(&self) -> Vec<(Poset, Vec<usize>)> {
        let mut comp = vec![usize::MAX; self.n + 1];
        let mut count = 0;
        for s in 1..=self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(x) = stack.pop() {
                let nbrs = self.upper[x].iter().chain(self.lower[x].iter());
                for &y in nbrs {
                    if y != BOTTOM && comp[y] == usize::MAX {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|c| {
                let labels: Vec<usize> = (1..=self.n).filter(|&a| comp[a] == c).collect();
                let mut local = vec![0; self.n + 1];
                for (i, &a) in labels.iter().enumerate() {
                    local[a] = i + 1;
                }
                let pairs: Vec<(usize, usize)> = self
                    .covers
                    .iter()
                    .filter(|&&(a, _)| comp[a] == c)
                    .map(|&(a, b)| (local[a], local[b]))
                    .collect();
                (Self::build_natural(labels.len(), &pairs), labels)
            })
            .collect()
    }

    /// `self ⊎ other`, with the elements of `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Poset) -> Result<Poset> {
        let n = self.n + other.n;
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(n));
        }
        let mut pairs = self.covers.clone();
        pairs.extend(other.covers.iter().map(|&(a, b)| (a + self.n, b + self.n)));
        Ok(Self::build_natural(n, &pairs))
    }

    /// Parses the line format: `n` on the first line, then one `a b` per cover.
    ///
    /// Blank lines and `#` comments are ignored. Self-loops and duplicate
    /// pairs are rejected.
    pub fn parse_text(text: &str) -> Result<(Poset, Relabeling)> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, first) = lines.next().ok_or(PosetError::Parse {
            line: 1,
            msg: "missing element count".into(),
        })?;
        let n: usize = first.parse().map_err(|_| PosetError::Parse {
            line,
            msg: format!("expected element count, found `{first}`"),
        })?;
        let mut pairs = Vec::new();
        for (line, l) in lines {
            let fields: Vec<&str> = l.split_whitespace().collect();
            let parsed: Option<Vec<usize>> = fields.iter().map(|s| s.parse().ok()).collect();
            match parsed.as_deref() {
                Some(&[a, b]) => pairs.push((a, b)),
                _ => {
                    return Err(PosetError::Parse {
                        line,
                        msg: format!("expected `a b`, found `{l}`"),
                    })
                }
            }
        }
        Self::from_pairs_checked(n, &pairs)
    }

    /// Parses `{"n": int, "covers": [[a, b], ...]}`.
    pub fn parse_json(text: &str) -> Result<(Poset, Relabeling)> {
        let raw: PosetJson = serde_json::from_str(text).map_err(|e| PosetError::Json(e.to_string()))?;
        let pairs: Vec<(usize, usize)> = raw.covers.iter().map(|&[a, b]| (a, b)).collect();
        Self::from_pairs_checked(raw.n, &pairs)
    }

    /// Parses either format, choosing JSON when the input starts with `{`.
    pub fn parse(text: &str) -> Result<(Poset, Relabeling)> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    fn from_pairs_checked(n: usize, pairs: &[(usize, usize)]) -> Result<(Poset, Relabeling)> {
        let mut seen = BTreeSet::new();
        for &(a, b) in pairs {
            if a == b {
                return Err(PosetError::SelfLoop(a));
            }
            if !seen.insert((a, b)) {
                return Err(PosetError::DuplicatePair(a, b));
            }
        }
        Self::from_covers(n, pairs)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (a, b) in &self.covers {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PosetJson {
            n: self.n,
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        })
        .expect("poset serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    covers: Vec<[usize; 2]>,
}

/// Mask of `∇(F) ∩ P` plus whether `⊥ ∈ ∇(F)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighborhood {
    pub mask: u64,
    pub bottom: bool,
}

/// An upward closed subset of `P` as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filter(pub u64);

impl Filter {
    pub fn contains(self, a: usize) -> bool {
        a != BOTTOM && self.0 & bit(a) != 0
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        mask_members(self.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Filter) -> bool {
        self.0 & !other.0 == 0
    }

    /// The 0/1 indicator vector of length `n`.
    pub fn indicator(self, n: usize) -> Vec<i64> {
        (1..=n).map(|a| i64::from(self.contains(a))).collect()
    }
}

/// Strictly nested nonempty filters `F_1 ⊃ F_2 ⊃ … ⊃ F_m`, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FilterChain {
    filters: Vec<Filter>,
}

impl FilterChain {
    pub fn filters(&self) -> &[Filter] {
        &self.filters
    }

    /// Chain length `m`.
    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    /// `1_{F_1} + … + 1_{F_m}`.
    pub fn vertex(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        for f in &self.filters {
            for a in f.members() {
                v[a - 1] += 1;
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wedge3() -> Poset {
        Poset::new(3, &[(1, 3), (2, 3)]).unwrap()
    }

    fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Poset::new(n, &pairs).unwrap()
    }

    fn masks(fs: &[Filter]) -> Vec<Vec<usize>> {
        fs.iter().map(|f| f.members().collect()).collect()
    }

    #[test]
    fn transitive_reduction_drops_implied_pair() {
        let p = Poset::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(p.covers(), &[(1, 2), (2, 3)]);
        assert!(p.leq(1, 3));
    }

    #[test]
    fn relabels_along_smallest_first_topological_sort() {
        let (p, map) = Poset::from_covers(3, &[(3, 1), (2, 1)]).unwrap();
        assert_eq!(map.old_to_new(), &[3, 1, 2]);
        assert_eq!(map.new_to_old(), vec![2, 3, 1]);
        assert_eq!(p.covers(), &[(1, 3), (2, 3)]);
        assert!(!map.is_identity());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Poset::from_covers(2, &[(1, 2), (2, 1)]).unwrap_err(), PosetError::Cycle);
        assert_eq!(
            Poset::from_covers(2, &[(1, 3)]).unwrap_err(),
            PosetError::LabelOutOfRange { label: 3, n: 2 }
        );
        assert_eq!(Poset::from_covers(0, &[]).unwrap_err(), PosetError::Empty);
        assert_eq!(Poset::new(2, &[(2, 1)]).unwrap_err(), PosetError::NotNaturallyLabeled(2, 1));
    }

    #[test]
    fn quasi_metric_examples() {
        let p = wedge3();
        assert_eq!(p.quasi_metric(0, 3), Some(2));
        assert_eq!(p.quasi_metric(3, 1), None);
        assert_eq!(p.quasi_metric(1, 2), None);
        assert_eq!(chain(6).quasi_metric(0, 6), Some(6));
        assert_eq!(chain(6).quasi_metric(2, 2), Some(0));
    }

    #[test]
    fn filters_of_small_posets() {
        let anti = Poset::new(2, &[]).unwrap();
        assert_eq!(masks(&anti.filters()), vec![vec![], vec![1], vec![2], vec![1, 2]]);
        assert_eq!(masks(&chain(2).filters()), vec![vec![], vec![2], vec![1, 2]]);
        let f = wedge3().filters();
        assert_eq!(masks(&f), vec![vec![], vec![3], vec![1, 3], vec![2, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn neighborhood_includes_bottom_for_minimal_members() {
        let p = wedge3();
        let nb = p.neighborhood(Filter(0b101));
        assert!(nb.bottom);
        assert_eq!(nb.mask, 0b010);
        let nb = p.neighborhood(Filter(0b100));
        assert!(!nb.bottom);
        assert_eq!(nb.mask, 0b011);
    }

    #[test]
    fn neighbor_closed_chain_counts() {
        let anti = Poset::new(2, &[]).unwrap();
        assert_eq!(anti.neighbor_closed_chains().len(), 4);
        let c2 = chain(2).neighbor_closed_chains();
        assert_eq!(c2.len(), 4);
        assert!(c2.iter().any(|c| c.len() == 2));
        assert_eq!(wedge3().neighbor_closed_chains().len(), 6);
    }

    #[test]
    fn rank_functions() {
        assert_eq!(chain(4).rank_function(), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(wedge3().rank_function(), Some(vec![0, 1, 1, 2]));
        // ⊥ 1 2 3 5 and ⊥ 1 4 5 have different lengths
        let p = Poset::new(5, &[(1, 2), (2, 3), (3, 5), (1, 4), (4, 5)]).unwrap();
        assert_eq!(p.rank_function(), None);
    }

    #[test]
    fn listed_non_ranked_candidate_is_ranked_after_reduction() {
        // (2,5) is implied by 2 ⋖ 4 ⋖ 5, and the reduced P̂ is ranked
        let p = Poset::new(5, &[(1, 2), (1, 3), (2, 4), (3, 4), (2, 5), (4, 5)]).unwrap();
        assert_eq!(p.covers(), &[(1, 2), (1, 3), (2, 4), (3, 4), (4, 5)]);
        assert_eq!(p.rank_function(), Some(vec![0, 1, 2, 2, 3, 4]));
    }

    #[test]
    fn structural_predicates() {
        let p = wedge3();
        assert_eq!(p.height(), 2);
        assert_eq!(p.unique_max(), Some(3));
        assert!(!p.is_rooted_tree());
        assert!(p.is_connected());
        let anti = Poset::new(2, &[]).unwrap();
        let comps = anti.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|(c, _)| c.n() == 1));
        assert_eq!(comps[1].1, vec![2]);
        let tree = Poset::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(tree.is_rooted_tree());
        assert!(anti.is_rooted_forest() && !anti.is_rooted_tree());
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let u = wedge3().disjoint_union(&chain(2)).unwrap();
        assert_eq!(u.covers(), &[(1, 3), (2, 3), (4, 5)]);
        assert_eq!(u.components().len(), 2);
        assert_eq!(u.components()[1].0, chain(2));
    }

    #[test]
    fn text_and_json_formats() {
        let (p, map) = Poset::parse_text("# ex\n3\n1 3\n\n2 3 # second\n").unwrap();
        assert!(map.is_identity());
        assert_eq!(p, wedge3());
        let (q, _) = Poset::parse(r#"{"n": 3, "covers": [[1, 3], [2, 3]]}"#).unwrap();
        assert_eq!(q, p);
        assert_eq!(Poset::parse(&p.to_text()).unwrap().0, p);
        assert_eq!(Poset::parse(&p.to_json().to_string()).unwrap().0, p);
    }

    #[test]
    fn formats_reject_self_loops_and_duplicates() {
        assert_eq!(Poset::parse_text("2\n1 1\n").unwrap_err(), PosetError::SelfLoop(1));
        assert_eq!(
            Poset::parse_text("2\n1 2\n1 2\n").unwrap_err(),
            PosetError::DuplicatePair(1, 2)
        );
        assert_eq!(
            Poset::parse_json(r#"{"n":2,"covers":[[1,2],[1,2]]}"#).unwrap_err(),
            PosetError::DuplicatePair(1, 2)
        );
        assert!(matches!(Poset::parse_text("x\n"), Err(PosetError::Parse { line: 1, .. })));
        assert!(matches!(Poset::parse_text("2\n1 2 3\n"), Err(PosetError::Parse { line: 2, .. })));
        assert!(matches!(Poset::parse_json("{"), Err(PosetError::Json(_))));
    }
}
