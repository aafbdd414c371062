//! Truncated Laurent series in one variable with exact coefficients.
//!
//! A series knows the exponent range on which it is valid: coefficients of
//! `x^e` for `e > order` are unknown. Binary operations keep the largest
//! range on which the result is determined by the operands, so precision
//! loss in nested exp/log chains is visible instead of silent.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Q};

use super::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    var: String,
    min_exp: i64,
    coeffs: Vec<Q>,
    order: i64,
}

impl LaurentSeries {
    /// Builds a series from the coefficients of `x^min_exp, x^(min_exp+1), ...`;
    /// entries beyond `order` are discarded and leading zeros stripped.
    pub fn new(var: &str, min_exp: i64, coeffs: Vec<Q>, order: i64) -> Self {
        let mut s = LaurentSeries {
            var: var.to_string(),
            min_exp,
            coeffs,
            order,
        };
        s.normalize();
        s
    }

    pub fn zero(var: &str, order: i64) -> Self {
        LaurentSeries::new(var, order + 1, vec![], order)
    }

    pub fn one(var: &str, order: i64) -> Self {
        LaurentSeries::monomial(var, Q::one(), 0, order)
    }

    pub fn monomial(var: &str, c: Q, e: i64, order: i64) -> Self {
        LaurentSeries::new(var, e, vec![c], order)
    }

    /// `sum_{e} c_e x^e` from `(exponent, coefficient)` pairs.
    pub fn from_terms(var: &str, terms: &[(i64, Q)], order: i64) -> Self {
        let lo = terms.iter().map(|t| t.0).min().unwrap_or(order + 1).min(order + 1);
        let mut coeffs = vec![Q::zero(); (order - lo + 1).max(0) as usize];
        for (e, c) in terms {
            if *e <= order {
                coeffs[(e - lo) as usize] += c;
            }
        }
        LaurentSeries::new(var, lo, coeffs, order)
    }

    pub fn from_poly(var: &str, p: &Poly, order: i64) -> Self {
        LaurentSeries::new(var, 0, p.coeffs().to_vec(), order)
    }

    fn normalize(&mut self) {
        let len = (self.order - self.min_exp + 1).max(0) as usize;
        self.coeffs.resize(len, Q::zero());
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.min_exp += k as i64;
            }
            None => {
                self.coeffs.clear();
                self.min_exp = self.order + 1;
            }
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    /// Largest exponent whose coefficient is known.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Exponent of the first nonzero coefficient, `order + 1` for zero.
    pub fn valuation(&self) -> i64 {
        self.min_exp
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^e`. Panics if `e` lies beyond the validity order.
    pub fn coeff(&self, e: i64) -> Q {
        assert!(
            e <= self.order,
            "coefficient of {}^{e} is beyond the truncation order {}",
            self.var,
            self.order
        );
        if e < self.min_exp {
            Q::zero()
        } else {
            self.coeffs[(e - self.min_exp) as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.min_exp + k as i64, c))
    }

    pub fn truncate(&self, order: i64) -> Self {
        assert!(order <= self.order, "cannot extend a series beyond its order");
        LaurentSeries::new(&self.var, self.min_exp, self.coeffs.clone(), order)
    }

    pub fn with_var(&self, var: &str) -> Self {
        LaurentSeries {
            var: var.to_string(),
            ..self.clone()
        }
    }

    fn check_var(&self, o: &LaurentSeries) {
        assert_eq!(self.var, o.var, "series in different variables");
    }

    pub fn add(&self, o: &LaurentSeries) -> Self {
        self.check_var(o);
        let order = self.order.min(o.order);
        let lo = self.min_exp.min(o.min_exp).min(order + 1);
        let coeffs = (lo..=order)
            .map(|e| self.coeff_or_zero(e) + o.coeff_or_zero(e))
            .collect();
        LaurentSeries::new(&self.var, lo, coeffs, order)
    }

    pub fn sub(&self, o: &LaurentSeries) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scalar_mul(&-Q::one())
    }

    pub fn scalar_mul(&self, c: &Q) -> Self {
        LaurentSeries::new(
            &self.var,
            self.min_exp,
            self.coeffs.iter().map(|x| x * c).collect(),
            self.order,
        )
    }

    fn coeff_or_zero(&self, e: i64) -> Q {
        if e < self.min_exp || e > self.order {
            Q::zero()
        } else {
            self.coeffs[(e - self.min_exp) as usize].clone()
        }
    }

    pub fn mul(&self, o: &LaurentSeries) -> Self {
        self.check_var(o);
        let order = (self.order + o.min_exp).min(o.order + self.min_exp);
        let lo = self.min_exp + o.min_exp;
        if self.is_zero() || o.is_zero() || lo > order {
            return LaurentSeries::zero(&self.var, order);
        }
        let mut coeffs = vec![Q::zero(); (order - lo + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= coeffs.len() {
                    break;
                }
                coeffs[k] += a * b;
            }
        }
        LaurentSeries::new(&self.var, lo, coeffs, order)
    }

    /// `self^k` for `k >= 1`.
    pub fn pow(&self, k: u32) -> Self {
        assert!(k >= 1, "pow needs a positive exponent");
        (1..k).fold(self.clone(), |acc, _| acc.mul(self))
    }

    /// Multiplicative inverse. A series with valuation `v` valid up to `N`
    /// gives an inverse of valuation `-v` valid up to `N - 2v`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let v = self.min_exp;
        let len = (self.order - v + 1) as usize;
        let u0 = self.coeffs[0].recip();
        let mut b: Vec<Q> = Vec::with_capacity(len);
        b.push(u0.clone());
        for n in 1..len {
            let mut s = Q::zero();
            for k in 1..=n {
                let uk = &self.coeffs[k];
                if !uk.is_zero() {
                    s += uk * &b[n - k];
                }
            }
            b.push(-(&u0 * s));
        }
        Ok(LaurentSeries::new(&self.var, -v, b, self.order - 2 * v))
    }

    pub fn div(&self, o: &LaurentSeries) -> Result<Self> {
        Ok(self.mul(&o.inverse()?))
    }

    /// Formal derivative `d/dx`.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return LaurentSeries::zero(&self.var, self.order - 1);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * Q::from_integer(BigInt::from(self.min_exp + k as i64)))
            .collect();
        LaurentSeries::new(&self.var, self.min_exp - 1, coeffs, self.order - 1)
    }

    /// `k`-th derivative.
    pub fn derivative_n(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |s, _| s.derivative())
    }

    /// Substitutes `x -> c x`: the coefficient of `x^e` is multiplied by `c^e`.
    pub fn scale_var(&self, c: &Q) -> Self {
        assert!(!c.is_zero(), "scaling by zero");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a * rational::pow(c, self.min_exp + k as i64))
            .collect();
        LaurentSeries::new(&self.var, self.min_exp, coeffs, self.order)
    }

    /// `exp` of a series with positive valuation.
    pub fn exp(&self) -> Result<Self> {
        if !self.is_zero() && self.min_exp < 1 {
            return Err(Error::InvalidParameter(
                "exp needs a series with positive valuation".into(),
            ));
        }
        let n_max = self.order.max(0) as usize;
        let a: Vec<Q> = (0..=n_max as i64).map(|e| self.coeff_or_zero(e)).collect();
        let mut e = vec![Q::one()];
        for n in 1..=n_max {
            let mut s = Q::zero();
            for k in 1..=n {
                if !a[k].is_zero() {
                    s += Q::from_integer(BigInt::from(k)) * &a[k] * &e[n - k];
                }
            }
            e.push(s / Q::from_integer(BigInt::from(n)));
        }
        Ok(LaurentSeries::new(&self.var, 0, e, self.order))
    }

    /// `log` of a series with constant term 1 (valuation 0).
    pub fn log(&self) -> Result<Self> {
        if self.min_exp != 0 || !self.coeffs[0].is_one() {
            return Err(Error::InvalidParameter(
                "log needs a series with constant term 1".into(),
            ));
        }
        let n_max = self.order.max(0) as usize;
        let a: Vec<Q> = (0..=n_max as i64).map(|e| self.coeff_or_zero(e)).collect();
        let mut l = vec![Q::zero()];
        for n in 1..=n_max {
            let mut s = Q::zero();
            for k in 1..n {
                if !l[k].is_zero() {
                    s += Q::from_integer(BigInt::from(k)) * &l[k] * &a[n - k];
                }
            }
            l.push(&a[n] - s / Q::from_integer(BigInt::from(n)));
        }
        Ok(LaurentSeries::new(&self.var, 0, l, self.order))
    }

    /// Exact equality of coefficients on the shared validity range.
    pub fn agrees_with(&self, o: &LaurentSeries, up_to: i64) -> bool {
        let hi = up_to.min(self.order).min(o.order);
        let lo = self.min_exp.min(o.min_exp);
        (lo..=hi).all(|e| self.coeff_or_zero(e) == o.coeff_or_zero(e))
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match e {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, e),
            };
            if mono.is_empty() {
                write!(f, "{}", rational::pretty(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", rational::pretty(&a))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    var: String,
    min_exp: i64,
    coeffs: Vec<String>,
    order: i64,
}

impl Serialize for LaurentSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            var: self.var.clone(),
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(rational::to_text).collect(),
            order: self.order,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SeriesJson::deserialize(d)?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| rational::parse(c))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        if coeffs.len() as i64 > j.order - j.min_exp + 1 {
            return Err(serde::de::Error::custom("more coefficients than the order allows"));
        }
        Ok(LaurentSeries::new(&j.var, j.min_exp, coeffs, j.order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn s(terms: &[(i64, Q)], order: i64) -> LaurentSeries {
        LaurentSeries::from_terms("x", terms, order)
    }

    #[test]
    fn normalization_strips_leading_zeros() {
        let a = LaurentSeries::new("x", -2, vec![int(0), int(0), int(3)], 4);
        assert_eq!(a.valuation(), 0);
        assert_eq!(a.coeffs().len(), 5);
        let z = LaurentSeries::new("x", -2, vec![int(0)], 4);
        assert!(z.is_zero());
        assert_eq!(z.valuation(), 5);
    }

    #[test]
    fn truncation_propagates_through_products() {
        // (1/x + O(x^2)) * (x^2 + O(x^5)) is known up to x^4
        let a = s(&[(-1, int(1))], 2);
        let b = s(&[(2, int(1))], 5);
        let c = a.mul(&b);
        assert_eq!(c.order(), 4);
        assert_eq!(c.coeff(1), int(1));
    }

    #[test]
    fn inverse_of_pole() {
        // 1/(x - x^2) = 1/x + 1 + x + ...
        let a = s(&[(1, int(1)), (2, int(-1))], 6);
        let b = a.inverse().unwrap();
        assert_eq!(b.valuation(), -1);
        assert_eq!(b.order(), 4);
        for e in -1..=4 {
            assert_eq!(b.coeff(e), int(1));
        }
    }

    #[test]
    fn exp_log_round_trip() {
        let a = s(&[(1, frac(1, 2)), (3, frac(-2, 3))], 8);
        let back = a.exp().unwrap().log().unwrap();
        assert!(back.agrees_with(&a, 8));
    }

    #[test]
    fn display() {
        let a = s(&[(-1, int(2)), (1, frac(1, 6)), (3, frac(-1, 360))], 3);
        assert_eq!(a.to_string(), "2*x^-1 + 1/6*x - 1/360*x^3 + O(x^4)");
    }

    #[test]
    fn json_schema() {
        let a = s(&[(-1, int(2)), (1, frac(1, 6))], 1);
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(j, r#"{"var":"x","min_exp":-1,"coeffs":["2/1","0/1","1/6"],"order":1}"#);
        let back: LaurentSeries = serde_json::from_str(&j).unwrap();
        assert_eq!(back, a);
    }
}
