//! Exact arithmetic in the field Q(s) of rational functions of s = q^(1/2).
//!
//! A [`Scalar`] is a reduced fraction of two integer polynomials in s. The
//! canonical form is unique: numerator and denominator share no polynomial
//! factor, the gcd of their integer contents is 1, and the denominator has a
//! positive leading coefficient. Equality of canonical forms is therefore
//! structural equality. All arithmetic is exact; there is no floating point
//! anywhere in the crate.

use crate::poly::IntPoly;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Errors raised by scalar construction and evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    /// Denominator is the zero polynomial.
    ZeroDenominator,
    /// Division by the zero scalar.
    DivisionByZero,
    /// Evaluation point is a pole (denominator vanishes there).
    Pole { at: String },
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::ZeroDenominator => write!(f, "zero denominator"),
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::Pole { at } => write!(f, "pole at s = {}", at),
        }
    }
}

impl std::error::Error for ScalarError {}

/// An element of Q(s) in canonical reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: IntPoly,
    den: IntPoly,
}

impl Scalar {
    fn make(num: IntPoly, den: IntPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Scalar {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) && g.leading_coeff().unwrap().is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let cn = num.content();
        let cd = den.content();
        let t = num::Integer::gcd(&cn, &cd);
        if !t.is_one() {
            num = num.div_content(&t);
            den = den.div_content(&t);
        }
        if den.leading_coeff().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(Scalar { num, den })
    }

    /// Canonicalize a fraction of integer polynomials (coefficients ascending in s).
    pub fn normalize(num_coeffs: &[i64], den_coeffs: &[i64]) -> Result<Self, ScalarError> {
        Self::make(IntPoly::from_i64s(num_coeffs), IntPoly::from_i64s(den_coeffs))
    }

    pub fn zero() -> Self {
        Scalar {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            num: IntPoly::constant(BigInt::from(n)),
            den: IntPoly::one(),
        }
    }

    pub fn from_rational(n: i64, d: i64) -> Result<Self, ScalarError> {
        Self::make(
            IntPoly::constant(BigInt::from(n)),
            IntPoly::constant(BigInt::from(d)),
        )
    }

    pub fn from_big_rational(r: &BigRational) -> Self {
        Scalar {
            num: IntPoly::constant(r.numer().clone()),
            den: IntPoly::constant(r.denom().clone()),
        }
        .reduced()
    }

    fn reduced(self) -> Self {
        Self::make(self.num, self.den).expect("reduce of valid scalar")
    }

    /// s^k for any integer k.
    pub fn s_pow(k: i64) -> Self {
        if k >= 0 {
            Scalar {
                num: IntPoly::monomial(BigInt::one(), k as usize),
                den: IntPoly::one(),
            }
        } else {
            Scalar {
                num: IntPoly::one(),
                den: IntPoly::monomial(BigInt::one(), (-k) as usize),
            }
        }
    }

    /// q^k = s^(2k).
    pub fn q_pow(k: i64) -> Self {
        Self::s_pow(2 * k)
    }

    /// h = s - s^(-1) = (s^2 - 1)/s.
    pub fn h() -> Self {
        Self::s_pow(1) - Self::s_pow(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == IntPoly::one() && self.den == IntPoly::one()
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Self::make(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn pow_i(&self, k: i64) -> Result<Self, ScalarError> {
        if k < 0 {
            return self.inv()?.pow_i(-k);
        }
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact evaluation at a rational point s0; a vanishing denominator is a pole.
    pub fn eval(&self, s0: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(s0);
        if d.is_zero() {
            return Err(ScalarError::Pole { at: s0.to_string() });
        }
        Ok(self.num.eval(s0) / d)
    }

    /// True when the scalar is a plain rational number (no s-dependence).
    pub fn is_constant(&self) -> bool {
        self.num.degree().map_or(true, |d| d == 0) && self.den.degree() == Some(0)
    }

    /// Render; numerator and denominator are parenthesized only when needed.
    /// A single-term negative numerator pulls its sign out front.
    fn render(&self) -> String {
        let n = self.num.display("s");
        if self.den == IntPoly::one() {
            return n;
        }
        if self.num.term_count() == 1 && self.num.leading_coeff().unwrap().is_negative() {
            return format!("-{}", (-self).render());
        }
        let d = self.den.display("s");
        let np = if self.num.term_count() > 1 {
            format!("({})", n)
        } else {
            n
        };
        let dp = if self.den.term_count() > 1 {
            format!("({})", d)
        } else {
            d
        };
        format!("{}/{}", np, dp)
    }

    /// True when `render` produces a single product token (no top-level +, -, /).
    pub(crate) fn is_simple_product(&self) -> bool {
        self.den == IntPoly::one() && self.num.term_count() == 1
            && !self.num.leading_coeff().unwrap().is_negative()
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::make(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
        .expect("nonzero denominators")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::make(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
        .expect("nonzero denominators")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::make(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("nonzero denominators")
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
