//! Rational functions in `t` with integer coefficients, kept in a canonical
//! form so that structural equality is mathematical equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

use super::poly::{leading_is_negative, Poly};

/// `num / den` with `gcd(num, den) = 1` in `Q[t]`, `den` of positive leading
/// coefficient and the integer content of `num` and `den` jointly equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Vec<BigInt>,
    den: Vec<BigInt>,
}

impl RationalFunction {
    pub fn new(num: &Poly, den: &Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = Poly::gcd(num, den);
        let (mut n, _) = num.div_rem(&g);
        let (mut d, _) = den.div_rem(&g);
        if leading_is_negative(&d) {
            n = -&n;
            d = -&d;
        }
        // Joint content: scale both by the same rational so that all
        // coefficients are integers with overall gcd 1.
        let (ni, nf) = n.primitive_part();
        let (di, df) = d.primitive_part();
        let ratio = nf / df;
        let (a, b) = (ratio.numer().clone(), ratio.denom().clone());
        let num: Vec<BigInt> = ni.into_iter().map(|c| c * &a).collect();
        let den: Vec<BigInt> = di.into_iter().map(|c| c * &b).collect();
        Ok(RationalFunction { num, den })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: vec![],
            den: vec![BigInt::one()],
        }
    }

    pub fn from_poly(p: &Poly) -> Self {
        RationalFunction::new(p, &Poly::one()).expect("nonzero denominator")
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        RationalFunction::new(&Poly::from_ints(num), &Poly::from_ints(den))
    }

    pub fn numerator(&self) -> Poly {
        Poly::from_bigints(&self.num)
    }

    pub fn denominator(&self) -> Poly {
        Poly::from_bigints(&self.den)
    }

    pub fn num_coeffs(&self) -> &[BigInt] {
        &self.num
    }

    pub fn den_coeffs(&self) -> &[BigInt] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Whether the denominator is a constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.len() == 1
    }

    /// Value at `t = x`; errors when `x` is a pole.
    pub fn eval(&self, x: &Q) -> Result<Q> {
        let d = self.denominator().eval(x);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.numerator().eval(x) / d)
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = (self.numerator(), self.denominator());
        let (c, d) = (o.numerator(), o.denominator());
        RationalFunction::new(&(&(&a * &d) + &(&c * &b)), &(&b * &d)).expect("nonzero denominator")
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        RationalFunction::new(
            &(&self.numerator() * &o.numerator()),
            &(&self.denominator() * &o.denominator()),
        )
        .expect("nonzero denominator")
    }

    pub fn scale(&self, c: &Q) -> Self {
        RationalFunction::new(&self.numerator().scale(c), &self.denominator())
            .expect("nonzero denominator")
    }

    /// `g(t^k)` for `k >= 1`.
    pub fn compose_power(&self, k: usize) -> Self {
        RationalFunction::new(
            &self.numerator().compose_power(k),
            &self.denominator().compose_power(k),
        )
        .expect("nonzero denominator")
    }

    /// `D g = t g'`.
    pub fn apply_d(&self) -> Self {
        let (n, d) = (self.numerator(), self.denominator());
        let top = &(&n.derivative() * &d) - &(&n * &d.derivative());
        RationalFunction::new(&(&Poly::t() * &top), &(&d * &d)).expect("nonzero denominator")
    }

    /// Polynomial content of a polynomial-valued function, as integers.
    pub fn as_integer_polynomial(&self) -> Option<Vec<BigInt>> {
        if !self.is_polynomial() {
            return None;
        }
        let d = &self.den[0];
        self.num
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(d);
                r.is_zero().then_some(q)
            })
            .collect()
    }
}

fn fmt_poly(f: &mut fmt::Formatter<'_>, c: &[BigInt]) -> fmt::Result {
    let mut first = true;
    for (k, a) in c.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        let m = a.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match (k, m.is_one()) {
            (0, _) => write!(f, "{m}")?,
            (1, true) => write!(f, "t")?,
            (1, false) => write!(f, "{m}*t")?,
            (_, true) => write!(f, "t^{k}")?,
            (_, false) => write!(f, "{m}*t^{k}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_poly(f, &self.num)?;
        write!(f, ")")?;
        if self.den.len() > 1 || !self.den[0].is_one() {
            write!(f, "/(")?;
            fmt_poly(f, &self.den)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RationalFunctionJson {
    num: Vec<serde_json::Number>,
    den: Vec<serde_json::Number>,
}

fn to_number(c: &BigInt) -> serde_json::Number {
    serde_json::from_str(&c.to_string()).expect("integer literal")
}

fn from_number(n: &serde_json::Number) -> Result<BigInt> {
    n.to_string()
        .parse()
        .map_err(|_| Error::Parse(format!("not an integer: {n}")))
}

impl Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalFunctionJson {
            num: self.num.iter().map(to_number).collect(),
            den: self.den.iter().map(to_number).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = RationalFunctionJson::deserialize(d)?;
        let conv = |v: &[serde_json::Number]| -> Result<Vec<BigInt>> { v.iter().map(from_number).collect() };
        let num = conv(&j.num).map_err(D::Error::custom)?;
        let den = conv(&j.den).map_err(D::Error::custom)?;
        RationalFunction::new(&Poly::from_bigints(&num), &Poly::from_bigints(&den)).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn canonical_form() {
        // (2t - 2) / (4 - 4t^2) = -1 / (2(t + 1))
        let g = RationalFunction::from_ints(&[-2, 2], &[4, 0, -4]).unwrap();
        assert_eq!(g, RationalFunction::from_ints(&[-1], &[2, 2]).unwrap());
        assert_eq!(g.to_string(), "(-1)/(2*t + 2)");
    }

    #[test]
    fn joint_content_is_one() {
        let g = RationalFunction::new(
            &Poly::new(vec![frac(1, 2)]),
            &Poly::new(vec![int(0), frac(1, 3)]),
        )
        .unwrap();
        assert_eq!(g.num_coeffs(), &[BigInt::from(3)]);
        assert_eq!(g.den_coeffs(), &[BigInt::from(0), BigInt::from(2)]);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::from_ints(&[1], &[0]),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn json_schema() {
        let g = RationalFunction::from_ints(&[1, 1], &[-1, 1]).unwrap();
        let j = serde_json::to_string(&g).unwrap();
        assert_eq!(j, r#"{"num":[1,1],"den":[-1,1]}"#);
        assert_eq!(serde_json::from_str::<RationalFunction>(&j).unwrap(), g);
    }
}
