//! Dense univariate polynomials over the integers.
//!
//! `IntPoly` stores coefficients in ascending degree order. Invariant: the
//! vector is empty (zero polynomial) or the last element is nonzero. This is
//! the backing representation for the numerator/denominator of [`crate::scalar::Scalar`].

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::fmt;

/// Integer-coefficient polynomial in one variable, ascending coefficient order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            IntPoly { coeffs: vec![c] }
        }
    }

    /// c * x^deg
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn mul_bigint(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Content: gcd of the coefficients, nonnegative. Zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide all coefficients by `d`; panics if any division is inexact.
    pub fn div_content(&self, d: &BigInt) -> Self {
        assert!(!d.is_zero(), "div_content by zero");
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    assert!(r.is_zero(), "div_content: inexact division");
                    q
                })
                .collect(),
        }
    }

    /// Exact polynomial division; panics if `other` does not divide `self` over Q
    /// or the quotient is not integral.
    pub fn div_exact(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "div_exact by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let da = self.degree().unwrap();
        let db = other.degree().unwrap();
        assert!(da >= db, "div_exact: degree too small");
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let lb = BigRational::from_integer(other.leading_coeff().unwrap().clone());
        let mut quot = vec![BigRational::zero(); da - db + 1];
        for k in (0..=(da - db)).rev() {
            let lead = rem[k + db].clone();
            if lead.is_zero() {
                continue;
            }
            let q = lead / lb.clone();
            quot[k] = q.clone();
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = &q * BigRational::from_integer(b.clone());
                rem[k + j] -= t;
            }
        }
        for r in &rem {
            assert!(r.is_zero(), "div_exact: nonzero remainder");
        }
        let coeffs = quot
            .into_iter()
            .map(|q| {
                assert!(q.denom().is_one(), "div_exact: non-integral quotient");
                q.numer().clone()
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        self.div_content(&c)
    }

    /// Polynomial gcd over Q, returned primitive with positive leading
    /// coefficient (primitive pseudo-remainder sequence).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// Pseudo-remainder of lc(b)^(da-db+1) * a by b.
    fn pseudo_rem(&self, other: &Self) -> Self {
        let db = other.degree().expect("pseudo_rem by zero");
        let mut r = self.clone();
        let lb = other.leading_coeff().unwrap().clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading_coeff().unwrap().clone();
            // r <- lb*r - lr * x^(dr-db) * b
            let shifted = other.mul(&IntPoly::monomial(lr, dr - db));
            r = r.mul_bigint(&lb).sub(&shifted);
            if r.degree() == Some(dr) {
                // cancellation must strictly reduce the degree
                panic!("pseudo_rem: degree did not decrease");
            }
        }
        r
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Render with `var` as the variable name, descending powers.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit = abs.is_one();
            if i == 0 {
                out.push_str(&abs.to_string());
            } else {
                if !unit {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{}", i));
                }
            }
        }
        out
    }

    /// Number of terms with nonzero coefficient.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("s"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn gcd_of_s2_minus_1_and_s_minus_1() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn div_exact_quotient() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.div_exact(&b), p(&[1, 1]));
    }

    #[test]
    fn content_and_primitive() {
        let a = p(&[2, 4, 6]);
        assert_eq!(a.content(), BigInt::from(2));
        assert_eq!(a.primitive(), p(&[1, 2, 3]));
        let b = p(&[0, 0, -2]);
        assert_eq!(b.primitive(), p(&[0, 0, 1]));
    }

    #[test]
    fn eval_horner() {
        let a = p(&[1, 0, 2]); // 2s^2 + 1
        let x = BigRational::new(BigInt::from(3), BigInt::from(2));
        assert_eq!(
            a.eval(&x),
            BigRational::new(BigInt::from(11), BigInt::from(2))
        );
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[-1, 0, 1]).display("s"), "s^2 - 1");
        assert_eq!(p(&[0, -2]).display("s"), "-2*s");
        assert_eq!(p(&[5]).display("s"), "5");
    }
}
