//! Truncated formal power series in `q` with arbitrary-precision integer
//! coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `q^0, ..., q^N` exactly; everything of degree above `N` is discarded.
//! Binary operations between series of different orders work modulo
//! `q^{min(N1, N2) + 1}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, BigInt::one())
    }

    /// `coeff * q^exponent`, or the zero series when `exponent > order`.
    pub fn monomial(order: usize, exponent: usize, coeff: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = coeff.into();
        }
        s
    }

    /// Builds a series from sparse `(exponent, coefficient)` terms.
    pub fn make<C: Into<BigInt>>(
        order: usize,
        terms: impl IntoIterator<Item = (usize, C)>,
    ) -> Result<Self> {
        let mut s = Self::zero(order);
        let mut seen = vec![false; order + 1];
        for (exponent, c) in terms {
            if exponent > order {
                return Err(Error::ExponentOutOfRange { exponent, order });
            }
            if seen[exponent] {
                return Err(Error::DuplicateExponent { exponent });
            }
            seen[exponent] = true;
            s.coeffs[exponent] = c.into();
        }
        Ok(s)
    }

    /// Sparse sum of signed monomials; terms beyond `order` are dropped and
    /// repeated exponents accumulate.
    pub fn from_signed_terms(order: usize, terms: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut s = Self::zero(order);
        for (exponent, c) in terms {
            if exponent <= order {
                s.coeffs[exponent] += c;
            }
        }
        s
    }

    /// Takes ownership of a dense coefficient vector. An empty vector is
    /// treated as the zero series of order 0.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k`; `None` when `k` lies beyond the retained order.
    pub fn coeff(&self, k: usize) -> Option<&BigInt> {
        self.coeffs.get(k)
    }

    /// Coefficient at a signed index, with negative indices reading as zero.
    ///
    /// Panics if `k` exceeds the order, since that coefficient is unknown.
    pub fn at(&self, k: i64) -> BigInt {
        if k < 0 {
            BigInt::zero()
        } else {
            let k = k as usize;
            assert!(
                k <= self.order(),
                "coefficient {k} beyond order {}",
                self.order()
            );
            self.coeffs[k].clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Equality modulo `q^{m+1}` where `m` is the smaller of the two orders.
    pub fn eq_truncated(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    /// First exponent (within the common order) where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, BigInt, BigInt)> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(k, (a, b))| (k, a.clone(), b.clone()))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order());
        if k <= self.order() {
            let keep = self.order() + 1 - k;
            s.coeffs[k..].clone_from_slice(&self.coeffs[..keep]);
        }
        s
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// In place: multiply by `(1 + sign * q^k)`, `sign` being `1` or `-1`.
    pub fn mul_binomial_assign(&mut self, k: usize, sign: i8) {
        if k == 0 {
            if sign < 0 {
                self.coeffs.iter_mut().for_each(|c| c.set_zero());
            } else {
                self.coeffs.iter_mut().for_each(|c| *c <<= 1);
            }
            return;
        }
        for i in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if sign < 0 {
                hi[0] -= &lo[i - k];
            } else {
                hi[0] += &lo[i - k];
            }
        }
    }

    /// In place: divide by `(1 + sign * q^k)` for `k >= 1`.
    pub fn div_binomial_assign(&mut self, k: usize, sign: i8) {
        assert!(k >= 1, "division by a non-unit binomial");
        for i in k..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if sign < 0 {
                hi[0] += &lo[i - k];
            } else {
                hi[0] -= &lo[i - k];
            }
        }
    }

    /// Multiplicative inverse, defined when the constant term is `+1` or `-1`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NotAUnit(c0.to_string()));
        }
        let sparse: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut out = vec![BigInt::zero(); self.coeffs.len()];
        out[0] = c0.clone();
        for k in 1..out.len() {
            let mut acc = BigInt::zero();
            for &(j, a) in &sparse {
                if j > k {
                    break;
                }
                acc += a * &out[k - j];
            }
            // 1/c0 == c0 for a unit
            out[k] = -(acc * c0);
        }
        Ok(Self { coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); order + 1];
        // theta truncations are sparse, so skip zero rows
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(mut self) -> TruncatedSeries {
        self.coeffs.iter_mut().for_each(|c| *c = -std::mem::take(c));
        self
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}q^{k}")?,
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(q^{})", self.order() + 1)
    }
}
