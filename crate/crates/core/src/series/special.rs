//! The concrete functions of the construction: the wheel series `f`, the
//! color function `h`, the operator `D = t d/dt`, the hair map `t = e^x`,
//! and the torus-knot Alexander polynomial that controls the one-loop part.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, int, Q};

use super::laurent::LaurentSeries;
use super::poly::Poly;
use super::ratfunc::RationalFunction;

/// Default bound on the pole order accepted by [`hair_expand`].
pub const DEFAULT_MAX_POLE: usize = 8;

/// Taylor expansion of `f(n x)` up to `x^order`, where
/// `f(x) = 1/2 log(sinh(x/2) / (x/2))`.
///
/// ```
/// use torus_ki::series::series_f;
/// let f = series_f(1, 4);
/// assert_eq!(f.to_string(), "1/48*x^2 - 1/5760*x^4 + O(x^5)");
/// ```
pub fn series_f(n: i64, order: i64) -> LaurentSeries {
    assert!(n != 0, "scale must be nonzero");
    if order < 0 {
        return LaurentSeries::zero("x", order);
    }
    // sinh(x/2)/(x/2) = sum_k x^{2k} / (4^k (2k+1)!)
    let terms: Vec<(i64, Q)> = (0..=order / 2)
        .map(|k| {
            let den = num_traits::pow(BigInt::from(4), k as usize)
                * rational::factorial(2 * k as u64 + 1);
            (2 * k, Q::new(BigInt::one(), den))
        })
        .collect();
    let sinhc = LaurentSeries::from_terms("x", &terms, order);
    let f = sinhc.log().expect("constant term is 1").scalar_mul(&rational::frac(1, 2));
    f.scale_var(&int(n))
}

/// `h(t^n) = (t^n + 1)/(t^n - 1)`. A negative `n` uses `h(t^-n) = -h(t^n)`.
pub fn h_function(n: i64) -> RationalFunction {
    assert!(n != 0, "scale must be nonzero");
    let k = n.unsigned_abs() as usize;
    let num = &Poly::monomial(Q::one(), k) + &Poly::one();
    let den = &Poly::monomial(Q::one(), k) - &Poly::one();
    let h = RationalFunction::new(&num, &den).expect("nonzero denominator");
    if n < 0 {
        h.neg()
    } else {
        h
    }
}

/// `D^k g` with `D g = t g'(t)`.
pub fn apply_d(g: &RationalFunction, k: usize) -> RationalFunction {
    (0..k).fold(g.clone(), |acc, _| acc.apply_d())
}

/// Exact Taylor series of `p(e^x)` up to `x^order`.
fn poly_at_exp(p: &Poly, order: i64) -> LaurentSeries {
    // p(e^x) = sum_i c_i e^{ix}; [x^k] = sum_i c_i i^k / k!
    let coeffs = (0..=order.max(0) as usize)
        .map(|k| {
            let kf = Q::from_integer(rational::factorial(k as u64));
            let s = p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(Q::zero(), |acc, (i, c)| {
                    acc + c * Q::from_integer(num_traits::pow(BigInt::from(i), k))
                });
            s / kf
        })
        .collect();
    LaurentSeries::new("x", 0, coeffs, order)
}

/// Laurent expansion of `g(e^x)` around `x = 0` up to `x^order`, with the
/// default pole bound.
pub fn hair_expand(g: &RationalFunction, order: i64) -> Result<LaurentSeries> {
    hair_expand_bounded(g, order, DEFAULT_MAX_POLE)
}

/// [`hair_expand`] with an explicit bound on the pole order at `t = 1`.
pub fn hair_expand_bounded(
    g: &RationalFunction,
    order: i64,
    max_pole: usize,
) -> Result<LaurentSeries> {
    let (num, den) = (g.numerator(), g.denominator());
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let m = den.root_multiplicity(&Q::one());
    if m > max_pole {
        return Err(Error::PoleTooLarge {
            order: m,
            bound: max_pole,
        });
    }
    if g.is_zero() {
        return Ok(LaurentSeries::zero("x", order));
    }
    let work = order + 2 * m as i64;
    let n = poly_at_exp(&num, work);
    let d = poly_at_exp(&den, work);
    Ok(n.div(&d)?.truncate(order))
}

fn check_torus(p: i64, q: i64) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("p must be at least 2 (got {p})")));
    }
    if q.abs() < 2 {
        return Err(Error::InvalidParameter(format!("|q| must be at least 2 (got {q})")));
    }
    if rational::gcd_i64(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    Ok(())
}

/// `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))` as a polynomial.
///
/// The torus knot `T(p, -q)` is the mirror of `T(p, q)` and has the same
/// Alexander polynomial, so only `|q|` enters.
pub fn alexander_torus(p: i64, q: i64) -> Result<RationalFunction> {
    check_torus(p, q)?;
    let q = q.abs();
    let tm1 = |k: i64| &Poly::monomial(Q::one(), k as usize) - &Poly::one();
    let num = &tm1(p * q) * &tm1(1);
    let den = &tm1(p) * &tm1(q);
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    Ok(RationalFunction::from_poly(&quot))
}

/// `-1/2 log Δ(e^x)` for the symmetrized Alexander polynomial
/// `t^{-(p-1)(q-1)/2} Δ_{p,q}(t)`, up to `x^order`. The result is even.
pub fn wh_series(p: i64, q: i64, order: i64) -> Result<LaurentSeries> {
    let delta = alexander_torus(p, q)?;
    let d = (p - 1) * (q.abs() - 1);
    let coeffs = delta.as_integer_polynomial().expect("Alexander polynomial");
    let at_exp = poly_at_exp(&Poly::from_bigints(&coeffs), order);
    // symmetrization: log(t^{-d/2} Δ) = log Δ(e^x) - d x / 2
    let shift = LaurentSeries::monomial("x", rational::frac(d, 2), 1, order);
    let wh = at_exp.log()?.sub(&shift).scalar_mul(&rational::frac(-1, 2));
    debug_assert!(wh.terms().all(|(e, _)| e % 2 == 0), "Wh must be even");
    Ok(wh)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn f_low_orders() {
        let f = series_f(1, 4);
        assert_eq!(f.coeff(2), frac(1, 48));
        assert_eq!(f.coeff(4), frac(-1, 5760));
        assert!(series_f(1, 1).is_zero());
        let f2 = series_f(2, 4);
        assert_eq!(f2.coeff(2), frac(1, 12));
        assert_eq!(f2.coeff(4), frac(-1, 360));
    }

    #[test]
    fn h_values() {
        assert_eq!(h_function(1), RationalFunction::from_ints(&[1, 1], &[-1, 1]).unwrap());
        assert_eq!(
            h_function(2),
            RationalFunction::from_ints(&[1, 0, 1], &[-1, 0, 1]).unwrap()
        );
        assert_eq!(h_function(6).eval(&int(2)).unwrap(), frac(65, 63));
        assert_eq!(h_function(-2), h_function(2).neg());
    }

    #[test]
    fn d_of_h() {
        assert_eq!(apply_d(&h_function(1), 0), h_function(1));
        assert_eq!(
            apply_d(&h_function(1), 1),
            RationalFunction::from_ints(&[0, -2], &[1, -2, 1]).unwrap()
        );
        assert_eq!(
            apply_d(&h_function(2), 1),
            RationalFunction::from_ints(&[0, 0, -4], &[1, 0, -2, 0, 1]).unwrap()
        );
    }

    #[test]
    fn hair_of_h() {
        let s = hair_expand(&h_function(1), 3).unwrap();
        assert_eq!(s.valuation(), -1);
        assert_eq!(s.coeff(-1), int(2));
        assert_eq!(s.coeff(0), int(0));
        assert_eq!(s.coeff(1), frac(1, 6));
        assert_eq!(s.coeff(2), int(0));
        assert_eq!(s.coeff(3), frac(-1, 360));
        let t = RationalFunction::from_ints(&[0, 1], &[1]).unwrap();
        let e = hair_expand(&t, 2).unwrap();
        assert_eq!(e.coeffs(), &[int(1), int(1), frac(1, 2)]);
        let inv = RationalFunction::from_ints(&[-1, 1], &[1, 1]).unwrap();
        let s = hair_expand(&inv, 1).unwrap();
        assert_eq!(s.valuation(), 1);
        assert_eq!(s.coeff(1), frac(1, 2));
    }

    #[test]
    fn pole_bound() {
        let g = apply_d(&h_function(1), 8); // pole of order 9
        assert!(matches!(
            hair_expand(&g, 2),
            Err(Error::PoleTooLarge { order: 9, bound: 8 })
        ));
        assert!(hair_expand_bounded(&g, 2, 9).is_ok());
    }

    #[test]
    fn alexander_small() {
        let d = alexander_torus(2, 3).unwrap();
        assert_eq!(d, RationalFunction::from_ints(&[1, -1, 1], &[1]).unwrap());
        let d = alexander_torus(2, 5).unwrap();
        assert_eq!(d, RationalFunction::from_ints(&[1, -1, 1, -1, 1], &[1]).unwrap());
        assert_eq!(alexander_torus(2, 4), Err(Error::NotCoprime { p: 2, q: 4 }));
        assert!(alexander_torus(1, 3).is_err());
        assert_eq!(alexander_torus(3, -4).unwrap(), alexander_torus(3, 4).unwrap());
    }

    #[test]
    fn wh_is_even() {
        let w = wh_series(2, 3, 1).unwrap();
        assert!(w.is_zero());
        let w = wh_series(3, 4, 10).unwrap();
        assert!(w.terms().all(|(e, _)| e % 2 == 0));
    }
}
