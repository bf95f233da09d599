//! Permutations of `{1, …, n}` with the convention `τ(0) = 0`.

use std::fmt;
use std::str::FromStr;

use num::BigInt;
use thiserror::Error;

use crate::poly::GenPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("one-line notation is not a bijection on 1..={0}")]
    NotBijection(usize),
    #[error("cannot parse permutation `{0}`")]
    Parse(String),
    #[error("permutations have different sizes {0} and {1}")]
    SizeMismatch(usize, usize),
}

/// A permutation stored 1-indexed: `img[i] = τ(i)` with `img[0] = 0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    /// From the one-line notation `τ(1) … τ(n)`.
    pub fn new(one_line: &[usize]) -> Result<Self, PermError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in one_line {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotBijection(n));
            }
            seen[v] = true;
        }
        Ok(Self::from_one_line_unchecked(one_line))
    }

    pub(crate) fn from_one_line_unchecked(one_line: &[usize]) -> Self {
        let mut img = Vec::with_capacity(one_line.len() + 1);
        img.push(0);
        img.extend_from_slice(one_line);
        Permutation { img }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { img: (0..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.img.len() - 1
    }

    /// `τ(i)` for `0 ≤ i ≤ n`.
    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.img[i]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.img[1..]
    }

    /// `τ(0), τ(1), …, τ(n)`.
    pub fn as_slice(&self) -> &[usize] {
        &self.img
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { img: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self, PermError> {
        if self.n() != other.n() {
            return Err(PermError::SizeMismatch(self.n(), other.n()));
        }
        Ok(Permutation { img: other.img.iter().map(|&v| self.img[v]).collect() })
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `{0 ≤ i < n : τ(i) > τ(i+1)}`; `0` never qualifies.
    pub fn des_set(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.img[i] > self.img[i + 1]).collect()
    }

    pub fn ides_set(&self) -> Vec<usize> {
        self.inverse().des_set()
    }

    pub fn des(&self) -> usize {
        self.img.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Counts `i` such that `i + 1` appears before `i` in one-line notation.
    pub fn ides(&self) -> usize {
        let mut pos = vec![0; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            pos[v] = i;
        }
        pos.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Indices `0 ≤ i < n` with `τ(i+1) − τ(i) ≥ 2`.
    pub fn big_ascents(&self) -> usize {
        self.img.windows(2).filter(|w| w[1] >= w[0] + 2).count()
    }

    pub fn big_inv_ascents(&self) -> usize {
        self.inverse().big_ascents()
    }

    /// Descents of the word `τ(s_1) τ(s_2) … τ(s_k)` for labels `s_i` of `P̂`.
    pub fn subword_descents(&self, chain: &[usize]) -> usize {
        chain
            .windows(2)
            .filter(|w| self.img[w[0]] > self.img[w[1]])
            .count()
    }

    /// `i ↦ n + 1 − τ(i)` on `1..=n`.
    pub fn reversal(&self) -> Self {
        let n = self.n();
        let mut img = self.img.clone();
        for v in img.iter_mut().skip(1) {
            *v = n + 1 - *v;
        }
        Permutation { img }
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Permutations {
        Permutations::new((1..=n).collect())
    }

    /// Permutations with `τ(1) = first`, in lexicographic order.
    pub fn with_first(n: usize, first: usize) -> Permutations {
        assert!(1 <= first && first <= n, "first value {first} outside 1..={n}");
        let mut line = vec![first];
        line.extend((1..=n).filter(|&v| v != first));
        Permutations { current: Some(line), fixed: 1 }
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n ≤ 9`, comma separated beyond.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || PermError::Parse(s.to_string());
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse().map_err(|_| err()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(err))
                .collect::<Result<_, _>>()?
        };
        if values.is_empty() {
            return Err(err());
        }
        Permutation::new(&values)
    }
}

/// Lexicographic iterator over permutations of a fixed prefix plus a sorted tail.
pub struct Permutations {
    current: Option<Vec<usize>>,
    fixed: usize,
}

impl Permutations {
    fn new(line: Vec<usize>) -> Self {
        Permutations { current: Some(line), fixed: 0 }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let line = self.current.as_mut()?;
        let out = Permutation::from_one_line_unchecked(line);
        if !next_permutation(&mut line[self.fixed..]) {
            self.current = None;
        }
        Some(out)
    }
}

/// Advances `xs` to the next permutation in lexicographic order.
pub fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Eulerian polynomial `Σ_k A(n,k) z^k`, `A(n,k)` counting permutations of
/// `[n]` with `k` descents, from `A(n,k) = (k+1) A(n−1,k) + (n−k) A(n−1,k−1)`.
pub fn eulerian_polynomial(n: usize) -> GenPoly {
    let mut row = vec![BigInt::from(1)];
    for m in 2..=n {
        let mut next = vec![BigInt::from(0); m];
        for k in 0..m {
            if k < row.len() {
                next[k] += &row[k] * (k + 1);
            }
            if k >= 1 && k - 1 < row.len() {
                next[k] += &row[k - 1] * (m - k);
            }
        }
        row = next;
    }
    GenPoly::new(row)
}

/// `A(n, k)`.
pub fn eulerian_number(n: usize, k: usize) -> BigInt {
    eulerian_polynomial(n).coeff(k)
}

/// `Σ_{τ ∈ S_n} z^{bigasc(τ)}` by enumeration.
pub fn big_ascent_polynomial(n: usize) -> GenPoly {
    GenPoly::from_degrees(Permutation::all(n).map(|t| t.big_ascents()))
}
