//! Univariate polynomials with exact integer or rational coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

/// Integer polynomial, `coeffs[i]` the coefficient of `z^i`, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GenPoly {
    coeffs: Vec<BigInt>,
}

impl GenPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        GenPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `Σ_i counts[i] z^i`.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `Σ z^d` over the given degrees.
    pub fn from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut counts: Vec<u64> = Vec::new();
        for d in degrees {
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        Self::from_counts(&counts)
    }

    pub fn zero() -> Self {
        GenPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, z: i64) -> BigInt {
        let z = BigInt::from(z);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &z + c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// `c_i = c_{d−i}` for all `0 ≤ i ≤ d`, reading missing coefficients as zero.
    pub fn is_symmetric_about(&self, d: usize) -> bool {
        self.coeffs.len() <= d + 1 && (0..=d).all(|i| self.coeff(i) == self.coeff(d - i))
    }

    /// `c_i ≤ c_{i+1}` for `i ≤ upto` (with `i + 1 ≤ d`).
    pub fn is_increasing_until(&self, upto: usize, d: usize) -> bool {
        (0..=upto).filter(|&i| i < d).all(|i| self.coeff(i) <= self.coeff(i + 1))
    }

    /// First index where the coefficients differ.
    pub fn first_difference(&self, other: &GenPoly) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&i| self.coeff(i) != other.coeff(i))
    }

    /// `{"poly": [c0, c1, ...]}`.
    pub fn to_json(&self) -> Value {
        json!({ "poly": self.coeffs.iter().map(int_to_json).collect::<Vec<_>>() })
    }
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
pub(crate) fn int_to_json(c: &BigInt) -> Value {
    if let Some(v) = c.to_i64() {
        json!(v)
    } else if let Some(v) = c.to_u64() {
        json!(v)
    } else {
        json!(c.to_string())
    }
}

impl Add for &GenPoly {
    type Output = GenPoly;

    fn add(self, rhs: &GenPoly) -> GenPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        GenPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for &GenPoly {
    type Output = GenPoly;

    fn mul(self, rhs: &GenPoly) -> GenPoly {
        if self.is_zero() || rhs.is_zero() {
            return GenPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        GenPoly::new(out)
    }
}

impl std::iter::Sum for GenPoly {
    fn sum<I: Iterator<Item = GenPoly>>(iter: I) -> GenPoly {
        iter.fold(GenPoly::zero(), |acc, p| &acc + &p)
    }
}

fn write_terms<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, T, bool, bool)>,
) -> fmt::Result {
    // (degree, |coefficient|, negative, coefficient is ±1)
    let mut first = true;
    for (i, abs, neg, unit) in terms {
        let sign = match (first, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        f.write_str(sign)?;
        let c = if unit && i > 0 { String::new() } else { abs.to_string() };
        match i {
            0 => write!(f, "{c}")?,
            1 => write!(f, "{c}z")?,
            _ => write!(f, "{c}z^{i}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.abs(), c.is_negative(), c.abs().is_one())),
        )
    }
}

impl fmt::Debug for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenPoly[{self}]")
    }
}

/// Rational polynomial in the dilation variable.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// The unique polynomial of degree `< ys.len()` through `(i, ys[i])`.
    pub fn interpolate(ys: &[BigInt]) -> RatPoly {
        let m = ys.len();
        let mut total = vec![BigRational::zero(); m];
        for (i, y) in ys.iter().enumerate() {
            // basis ∏_{j≠i} (x − j)/(i − j)
            let mut basis = vec![BigRational::one()];
            let mut denom = BigInt::one();
            for j in 0..m {
                if j == i {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (d, c) in basis.iter().enumerate() {
                    next[d + 1] += c;
                    next[d] -= c * BigInt::from(j);
                }
                basis = next;
                denom *= BigInt::from(i as i64 - j as i64);
            }
            let scale = BigRational::new(y.clone(), denom);
            for (d, c) in basis.into_iter().enumerate() {
                total[d] += c * &scale;
            }
        }
        RatPoly::new(total)
    }

    /// Coefficients as `"p/q"` strings (`"p"` when integral).
    pub fn to_json(&self) -> Value {
        json!(self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.abs(), c.is_negative(), c.abs().is_one())),
        )
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly[{self}]")
    }
}
