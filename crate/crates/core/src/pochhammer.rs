//! q-Pochhammer products and Gaussian binomial coefficients.

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// The base `a` of `(a; q^step)_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochhammerBase {
    /// `a = q^j`
    QPower(usize),
    /// `a = -q^j`
    MinusQPower(usize),
    /// `a = -1`
    MinusOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Length {
    Finite(usize),
    Infinite,
}

/// `(a; q^step)_length`, the product of `(1 - a q^{step k})` for `k` below `length`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochhammerSpec {
    base: PochhammerBase,
    step: usize,
    length: Length,
}

impl PochhammerSpec {
    pub fn new(base: PochhammerBase, step: usize, length: Length) -> Result<Self> {
        if step == 0 {
            return Err(Error::ZeroStep);
        }
        Ok(Self { base, step, length })
    }

    /// `(q^j; q^step)_length`
    pub fn q_power(j: usize, step: usize, length: Length) -> Result<Self> {
        Self::new(PochhammerBase::QPower(j), step, length)
    }

    /// `(-q^j; q^step)_length`
    pub fn minus_q_power(j: usize, step: usize, length: Length) -> Result<Self> {
        Self::new(PochhammerBase::MinusQPower(j), step, length)
    }

    /// `(-1; q^step)_length`
    pub fn minus_one(step: usize, length: Length) -> Result<Self> {
        Self::new(PochhammerBase::MinusOne, step, length)
    }

    pub fn base(&self) -> PochhammerBase {
        self.base
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn length(&self) -> Length {
        self.length
    }

    /// Exponent offset and sign of the `k`-th factor `1 + sign q^{offset + step k}`.
    fn factor_shape(&self) -> (usize, i8) {
        match self.base {
            PochhammerBase::QPower(j) => (j, -1),
            PochhammerBase::MinusQPower(j) => (j, 1),
            PochhammerBase::MinusOne => (0, 1),
        }
    }

    /// Exponents of the factors that are not `1` modulo `q^{order+1}`.
    fn factor_exponents(&self, order: usize) -> impl Iterator<Item = usize> + '_ {
        let (offset, _) = self.factor_shape();
        let count = match self.length {
            Length::Finite(n) => n,
            Length::Infinite => usize::MAX,
        };
        (0..count)
            .map(move |k| offset + self.step * k)
            .take_while(move |&e| e <= order)
    }

    /// Multiplies `s` in place by this product.
    pub fn mul_into(&self, s: &mut TruncatedSeries) {
        let (_, sign) = self.factor_shape();
        let exps: Vec<usize> = self.factor_exponents(s.order()).collect();
        for e in exps {
            s.mul_binomial_assign(e, sign);
        }
    }

    /// Divides `s` in place by this product. Fails on a zero factor, or on
    /// the constant factor `2` of a `-1` base when `s` has an odd coefficient.
    pub fn div_into(&self, s: &mut TruncatedSeries) -> Result<()> {
        let (_, sign) = self.factor_shape();
        let exps: Vec<usize> = self.factor_exponents(s.order()).collect();
        for e in exps {
            if e == 0 {
                if sign < 0 {
                    return Err(Error::NotAUnit("0".into()));
                }
                if s.coeffs().iter().any(|c| c.bit(0)) {
                    return Err(Error::NotAUnit("2".into()));
                }
                *s = TruncatedSeries::from_coeffs(s.coeffs().iter().map(|c| c >> 1).collect());
            } else {
                s.div_binomial_assign(e, sign);
            }
        }
        Ok(())
    }
}

/// Expands the product to order `order`. Infinite products multiply only
/// factors whose lowest exponent is at most `order`.
pub fn pochhammer(spec: &PochhammerSpec, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    spec.mul_into(&mut s);
    s
}

/// `1 / (spec)` to order `order`; errors when the product is not a unit.
pub fn pochhammer_inverse(spec: &PochhammerSpec, order: usize) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::one(order);
    spec.div_into(&mut s)?;
    Ok(s)
}

/// Gaussian binomial `[top choose k]` in the variable `q^step`, truncated at
/// `order`. Zero when `k < 0` or `k > top`.
pub fn gaussian_binomial(top: usize, k: i64, step: usize, order: usize) -> TruncatedSeries {
    if k < 0 || k as usize > top {
        return TruncatedSeries::zero(order);
    }
    let k = (k as usize).min(top - k as usize);
    let mut s = TruncatedSeries::one(order);
    // (q^s; q^s)_top / ((q^s; q^s)_k (q^s; q^s)_{top-k}) = prod_{i=1}^{k} (1 - q^{s(top-k+i)}) / (1 - q^{s i})
    for i in 1..=k {
        let e = step * (top - k + i);
        if e <= order {
            s.mul_binomial_assign(e, -1);
        }
    }
    for i in 1..=k {
        let e = step * i;
        if e <= order {
            s.div_binomial_assign(e, -1);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    /// Direct expansion of a finite list of factors `(1 + sign q^e)`.
    fn expand(order: usize, factors: &[(usize, i64)]) -> Vec<i64> {
        let mut c = vec![0i64; order + 1];
        c[0] = 1;
        for &(e, sign) in factors {
            let mut next = c.clone();
            for i in 0..=order {
                if i + e <= order {
                    next[i + e] += sign * c[i];
                }
            }
            c = next;
        }
        c
    }

    #[test]
    fn euler_product_at_order_twelve() {
        let spec = PochhammerSpec::q_power(1, 1, Length::Infinite).unwrap();
        let got = ints(&pochhammer(&spec, 12));
        let factors: Vec<(usize, i64)> = (1..=12).map(|k| (k, -1)).collect();
        let want = expand(12, &factors);
        assert_eq!(got, want);
        assert_eq!(got, [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
    }

    #[test]
    fn empty_and_single_factor_products() {
        let empty = PochhammerSpec::q_power(1, 1, Length::Finite(0)).unwrap();
        assert_eq!(pochhammer(&empty, 4), TruncatedSeries::one(4));
        let minus_one = PochhammerSpec::minus_one(1, Length::Finite(1)).unwrap();
        assert_eq!(ints(&pochhammer(&minus_one, 3)), [2, 0, 0, 0]);
    }

    #[test]
    fn minus_one_product_matches_direct_expansion() {
        let spec = PochhammerSpec::minus_one(1, Length::Finite(4)).unwrap();
        let want: Vec<i64> = expand(8, &[(1, 1), (2, 1), (3, 1)])
            .iter()
            .map(|c| 2 * c)
            .collect();
        assert_eq!(ints(&pochhammer(&spec, 8)), want);
    }

    #[test]
    fn stepped_product() {
        // (-q; q^2)_3 = (1+q)(1+q^3)(1+q^5)
        let spec = PochhammerSpec::minus_q_power(1, 2, Length::Finite(3)).unwrap();
        assert_eq!(
            ints(&pochhammer(&spec, 10)),
            expand(10, &[(1, 1), (3, 1), (5, 1)])
        );
    }

    #[test]
    fn zero_step_rejected() {
        assert_eq!(
            PochhammerSpec::q_power(1, 0, Length::Infinite),
            Err(Error::ZeroStep)
        );
    }

    #[test]
    fn inverse_round_trip() {
        let spec = PochhammerSpec::minus_one(2, Length::Finite(3)).unwrap();
        let p = pochhammer(&spec, 20);
        let inv = pochhammer_inverse(&spec, 20);
        // (-1; q^2)_3 starts with 2, so it is not a unit over the integers
        assert!(inv.is_err());
        let spec = PochhammerSpec::q_power(2, 3, Length::Infinite).unwrap();
        let p2 = pochhammer(&spec, 20);
        assert_eq!(
            &p2 * &pochhammer_inverse(&spec, 20).unwrap(),
            TruncatedSeries::one(20)
        );
        assert_eq!(p.coeff(0).map(|c| c.to_string()), Some("2".into()));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(ints(&gaussian_binomial(2, 1, 1, 4)), [1, 1, 0, 0, 0]);
        assert!(gaussian_binomial(3, 5, 1, 6).is_zero());
        assert!(gaussian_binomial(3, -1, 1, 6).is_zero());
        assert_eq!(ints(&gaussian_binomial(4, 2, 1, 6)), [1, 1, 2, 1, 1, 0, 0]);
        // in q^2
        assert_eq!(ints(&gaussian_binomial(2, 1, 2, 4)), [1, 0, 1, 0, 0]);
        assert_eq!(gaussian_binomial(5, 0, 1, 6), TruncatedSeries::one(6));
    }

    #[test]
    fn gaussian_binomial_counts_partitions_in_a_box() {
        // [M choose K] = sum over partitions fitting in a K x (M-K) box
        for top in 0..7usize {
            for k in 0..=top {
                let order = k * (top - k);
                let mut want = vec![0i64; order + 1];
                count_box(k, top - k, 0, order, &mut want);
                assert_eq!(
                    ints(&gaussian_binomial(top, k as i64, 1, order)),
                    want,
                    "{top} {k}"
                );
            }
        }
    }

    fn count_box(rows: usize, max_part: usize, weight: usize, order: usize, out: &mut [i64]) {
        out[weight] += 1;
        if rows == 0 {
            return;
        }
        for part in 1..=max_part {
            if weight + part <= order {
                count_box(rows - 1, part, weight + part, order, out);
            }
        }
    }
}
