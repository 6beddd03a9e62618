//! The extended coordinate algebra with PBW normal ordering.
//!
//! Generators are x-, x0, x+ together with the dilatation L and its inverse,
//! the radius r and its inverse, and the inverse of x0. Every element is kept
//! as a finite sum of normal-ordered monomials
//!
//! ```text
//!     L^k r^e (x-)^a (x0)^b (x+)^c,    k, b in Z,  e <= 1,  a, c >= 0,
//! ```
//!
//! with r^2 always reduced through the central quadratic
//! r^2 = (s + 1/s) x-x+ + q (x0)^2. Rewriting uses
//!
//! ```text
//!     x0 x-  = 1/q x- x0        x+ x0 = 1/q x0 x+
//!     x+ x-  = x- x+ + h (x0)^2
//!     x  L   = q L x   (per x-degree),   r central over the x's
//! ```
//!
//! Stored forms with negative r-exponent are not globally canonical (r^-2
//! times the expansion of r^2 and 1 are equal but distinct as stored sums);
//! [`AlgElem::alg_equal`] decides equality by clearing negative r-powers and
//! comparing the resulting basis coefficients.

use crate::scalar::{Scalar, ScalarError};
use num::rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

/// A normal-ordered monomial L^lam r^r (x-)^xm (x0)^x0 (x+)^xp.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub lam: i64,
    pub r: i64,
    pub xm: u32,
    pub x0: i64,
    pub xp: u32,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial {
            lam: 0,
            r: 0,
            xm: 0,
            x0: 0,
            xp: 0,
        }
    }

    /// x-degree: r counts 1, x0-inverses count negatively.
    pub fn x_degree(&self) -> i64 {
        self.r + self.xm as i64 + self.x0 + self.xp as i64
    }

    pub fn lam_degree(&self) -> i64 {
        self.lam
    }

    fn is_unit(&self) -> bool {
        *self == Monomial::unit()
    }

    fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let power = |name: &str, e: i64| -> String {
            if e == 1 {
                name.to_string()
            } else {
                format!("{}^{}", name, e)
            }
        };
        if self.lam != 0 {
            parts.push(power("L", self.lam));
        }
        if self.r != 0 {
            parts.push(power("r", self.r));
        }
        if self.xm != 0 {
            parts.push(power("x-", self.xm as i64));
        }
        if self.x0 != 0 {
            parts.push(power("x0", self.x0));
        }
        if self.xp != 0 {
            parts.push(power("x+", self.xp as i64));
        }
        parts.join("*")
    }
}

/// An element of the extended algebra: a finite Scalar-weighted sum of
/// normal-ordered monomials. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElem {
    terms: BTreeMap<Monomial, Scalar>,
}

impl AlgElem {
    pub fn zero() -> Self {
        AlgElem {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_scalar(Scalar::one())
    }

    pub fn from_scalar(c: Scalar) -> Self {
        let mut e = Self::zero();
        e.accumulate(Monomial::unit(), c);
        e
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_scalar(Scalar::from_int(n))
    }

    /// Build c * monomial, reducing r-powers >= 2 through the quadratic.
    pub fn term(mono: Monomial, coeff: Scalar) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        if mono.r >= 2 {
            let mut base = Self::zero();
            base.accumulate(Monomial { r: 0, ..mono }, coeff);
            return base.mul_r_pow(mono.r);
        }
        let mut e = Self::zero();
        e.accumulate(mono, coeff);
        e
    }

    pub fn gen_xm() -> Self {
        Self::term(
            Monomial {
                xm: 1,
                ..Monomial::unit()
            },
            Scalar::one(),
        )
    }

    pub fn gen_x0(b: i64) -> Self {
        Self::term(
            Monomial {
                x0: b,
                ..Monomial::unit()
            },
            Scalar::one(),
        )
    }

    pub fn gen_xp() -> Self {
        Self::term(
            Monomial {
                xp: 1,
                ..Monomial::unit()
            },
            Scalar::one(),
        )
    }

    pub fn gen_lambda(k: i64) -> Self {
        Self::term(
            Monomial {
                lam: k,
                ..Monomial::unit()
            },
            Scalar::one(),
        )
    }

    pub fn gen_r(e: i64) -> Self {
        Self::term(
            Monomial {
                r: e,
                ..Monomial::unit()
            },
            Scalar::one(),
        )
    }

    /// Coordinate generator by index 0, 1, 2 = x-, x0, x+.
    pub fn gen_x(i: usize) -> Self {
        match i {
            0 => Self::gen_xm(),
            1 => Self::gen_x0(1),
            2 => Self::gen_xp(),
            _ => panic!("coordinate index out of range"),
        }
    }

    /// The central quadratic r^2 = g_ij x^i x^j in normal order:
    /// (s + 1/s) x-x+ + q (x0)^2.
    pub fn r_squared() -> Self {
        static R2: OnceLock<AlgElem> = OnceLock::new();
        R2.get_or_init(|| {
            let mut e = AlgElem::zero();
            e.accumulate(
                Monomial {
                    xm: 1,
                    xp: 1,
                    ..Monomial::unit()
                },
                &Scalar::s_pow(1) + &Scalar::s_pow(-1),
            );
            e.accumulate(
                Monomial {
                    x0: 2,
                    ..Monomial::unit()
                },
                Scalar::q_pow(1),
            );
            e
        })
        .clone()
    }

    fn accumulate(&mut self, mono: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Structurally zero (the canonical test for cleared forms; see
    /// [`AlgElem::alg_equal`] for the general decision).
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgElem {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v * c))
                .collect(),
        }
    }

    /// Multiply by the formal power r^k at the exponent level, reducing any
    /// resulting exponent >= 2 through the quadratic. This is how negative
    /// r-powers are cleared.
    pub fn mul_r_pow(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut e = m.r + k;
            let mut part = Self::zero();
            part.accumulate(Monomial { r: 0, ..*m }, c.clone());
            while e >= 2 {
                e -= 2;
                part = part.mul(&Self::r_squared());
            }
            for (m2, c2) in part.terms {
                out.accumulate(
                    Monomial {
                        r: m2.r + e,
                        ..m2
                    },
                    c2,
                );
            }
        }
        out
    }

    /// Smallest r-exponent appearing, if any term exists.
    pub fn min_r_exponent(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.r).min()
    }

    /// Normal-ordered product.
    pub fn mul(&self, rhs: &AlgElem) -> AlgElem {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let coeff = c1 * c2;
                mono_mul_into(&mut out, m1, m2, &coeff);
            }
        }
        out
    }

    /// Commutator [self, rhs].
    pub fn commutator(&self, rhs: &AlgElem) -> AlgElem {
        &self.mul(rhs) - &rhs.mul(self)
    }

    /// Equality decision: clear negative r-powers from the difference by
    /// multiplying with the central r^{2N}, then compare basis coefficients.
    /// Sound because the algebra is a domain and complete because monomials
    /// with r-exponent in {0, 1} form a basis.
    pub fn alg_equal(&self, rhs: &AlgElem) -> bool {
        let diff = self - rhs;
        let min_e = diff.min_r_exponent().unwrap_or(0);
        let cleared = if min_e < 0 {
            let n = (-min_e + 1) / 2;
            diff.mul_r_pow(2 * n)
        } else {
            diff
        };
        cleared.is_zero()
    }

    pub fn is_zero_alg(&self) -> bool {
        self.alg_equal(&AlgElem::zero())
    }

    /// The star involution: an anti-linear anti-homomorphism with
    /// (x-)^* = s x+, (x0)^* = x0, (x+)^* = x-/s, r^* = r, L^* = 1/L.
    pub fn star(&self) -> AlgElem {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let d = m.r + m.xm as i64 + m.x0 + m.xp as i64;
            let factor = &Scalar::s_pow(m.xm as i64 - m.xp as i64)
                * &Scalar::q_pow(-m.lam * d);
            out.accumulate(
                Monomial {
                    lam: -m.lam,
                    r: m.r,
                    xm: m.xp,
                    x0: m.x0,
                    xp: m.xm,
                },
                c * &factor,
            );
        }
        out
    }

    /// Evaluate every coefficient at a rational point of s; the monomial
    /// structure is kept and poles are reported.
    pub fn eval_coeffs(&self, s0: &BigRational) -> Result<AlgElem, ScalarError> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let v = c.eval(s0)?;
            out.accumulate(*m, Scalar::from_big_rational(&v));
        }
        Ok(out)
    }

    /// The set of (x-degree, L-degree) grades over the terms.
    pub fn grades(&self) -> Vec<(i64, i64)> {
        let mut gs: Vec<(i64, i64)> = self
            .terms
            .keys()
            .map(|m| (m.x_degree(), m.lam_degree()))
            .collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// x-degree when homogeneous, `None` otherwise or for zero.
    pub fn x_degree(&self) -> Option<i64> {
        let gs = self.grades();
        match gs.len() {
            1 => Some(gs[0].0),
            _ => None,
        }
    }

    /// True when the element lies in the polynomial coordinate subalgebra
    /// (no L, no r, no inverse powers of x0).
    pub fn is_x_polynomial(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.lam == 0 && m.r == 0 && m.x0 >= 0)
    }

    /// True when no term carries a power of L.
    pub fn is_lambda_free(&self) -> bool {
        self.terms.keys().all(|m| m.lam == 0)
    }

    /// Inverse of a single invertible monomial (no x- or x+ factors).
    pub fn mono_inverse(&self) -> Option<AlgElem> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if m.xm != 0 || m.xp != 0 {
            return None;
        }
        let cinv = c.inv().ok()?;
        // (L^k r^e x0^b)^-1 = q^{k(e+b)} L^-k r^-e x0^-b
        let factor = Scalar::q_pow(m.lam * (m.r + m.x0));
        Some(AlgElem::term(
            Monomial {
                lam: -m.lam,
                r: -m.r,
                xm: 0,
                x0: -m.x0,
                xp: 0,
            },
            &cinv * &factor,
        ))
    }

    /// Integer power; negative exponents require an invertible monomial.
    pub fn pow_i(&self, k: i64) -> Result<AlgElem, String> {
        if k < 0 {
            let inv = self
                .mono_inverse()
                .ok_or_else(|| "negative power of a non-invertible element".to_string())?;
            return inv.pow_i(-k);
        }
        let mut acc = AlgElem::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The constant scalar when the element is c * 1, else `None`.
    pub fn as_constant(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }
}

/// Accumulate coeff * (m1 * m2) in normal-ordered form into `out`.
fn mono_mul_into(out: &mut AlgElem, m1: &Monomial, m2: &Monomial, coeff: &Scalar) {
    // L^k2 of the right factor crosses the x/r body of the left factor
    let d1 = m1.r + m1.xm as i64 + m1.x0 + m1.xp as i64;
    let mut c = coeff * &Scalar::q_pow(m2.lam * d1);
    let lam = m1.lam + m2.lam;
    let r = m1.r + m2.r;

    // x body: (x-^a1 x0^b1 x+^c1)(x-^a2 x0^b2 x+^c2). Expand x+^c1 x-^a2,
    // then the remaining factors only q-commute.
    let cross = xp_pow_xm_pow(m1.xp, m2.xm);
    let mut parts: Vec<(Monomial, Scalar)> = Vec::with_capacity(cross.terms.len());
    for (mm, mc) in &cross.terms {
        // term x-^al x0^be x+^ga from the expansion
        let (al, be, ga) = (mm.xm, mm.x0, mm.xp);
        // x0^b1 crosses x-^al, x+^ga crosses x0^b2
        let f = Scalar::q_pow(-(m1.x0 * al as i64) - (ga as i64 * m2.x0));
        let mono = Monomial {
            lam,
            r,
            xm: m1.xm + al,
            x0: m1.x0 + be + m2.x0,
            xp: ga + m2.xp,
        };
        parts.push((mono, mc * &f));
    }
    if r >= 2 {
        for (mono, mc) in parts {
            let reduced = AlgElem::term(mono, &mc * &c);
            for (m, v) in reduced.terms {
                out.accumulate(m, v);
            }
        }
        return;
    }
    c = c.clone();
    for (mono, mc) in parts {
        out.accumulate(mono, &mc * &c);
    }
}

/// Normal-ordered form of x+^c x-^a as a sum in the coordinate subalgebra.
fn xp_pow_xm_pow(c: u32, a: u32) -> AlgElem {
    let mut acc = AlgElem::term(
        Monomial {
            xm: a,
            ..Monomial::unit()
        },
        Scalar::one(),
    );
    for _ in 0..c {
        acc = left_mul_xp(&acc);
    }
    acc
}

/// Left-multiply a sum of pure x-monomials by x+ using
/// x+ x-^a = x-^a x+ + h (1 + q^-2 + ... + q^-2(a-1)) x-^(a-1) (x0)^2.
fn left_mul_xp(e: &AlgElem) -> AlgElem {
    let h = Scalar::h();
    let mut out = AlgElem::zero();
    for (m, c) in &e.terms {
        debug_assert_eq!(m.lam, 0);
        debug_assert_eq!(m.r, 0);
        // straight-through part: x+ crosses x0^b
        out.accumulate(
            Monomial {
                xp: m.xp + 1,
                ..*m
            },
            c * &Scalar::q_pow(-m.x0),
        );
        if m.xm > 0 {
            let mut geom = Scalar::zero();
            for j in 0..m.xm {
                geom = &geom + &Scalar::q_pow(-2 * (j as i64));
            }
            out.accumulate(
                Monomial {
                    xm: m.xm - 1,
                    x0: m.x0 + 2,
                    ..*m
                },
                &(c * &h) * &geom,
            );
        }
    }
    out
}

impl Add for &AlgElem {
    type Output = AlgElem;
    fn add(self, rhs: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(*m, c.clone());
        }
        out
    }
}

impl Sub for &AlgElem {
    type Output = AlgElem;
    fn sub(self, rhs: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(*m, -c);
        }
        out
    }
}

impl Neg for &AlgElem {
    type Output = AlgElem;
    fn neg(self) -> AlgElem {
        AlgElem {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &AlgElem {
    type Output = AlgElem;
    fn mul(self, rhs: &AlgElem) -> AlgElem {
        AlgElem::mul(self, rhs)
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let (neg, body) = render_term(m, c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", body)?;
        }
        Ok(())
    }
}

/// Render one term; returns (had leading minus, body without the sign).
fn render_term(m: &Monomial, c: &Scalar) -> (bool, String) {
    let mono = m.render();
    let cs = c.to_string();
    let (neg, cs) = match cs.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, cs),
    };
    let abs = if neg {
        (-c).clone()
    } else {
        c.clone()
    };
    if mono.is_empty() {
        let body = if abs.is_simple_product() || !cs.contains(['+', '-', '/']) {
            cs
        } else {
            format!("({})", cs)
        };
        return (neg, body);
    }
    if abs.is_one() {
        return (neg, mono);
    }
    let coeff_part = if abs.is_simple_product() {
        cs
    } else {
        format!("({})", cs)
    };
    (neg, format!("{}*{}", coeff_part, mono))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xm() -> AlgElem {
        AlgElem::gen_xm()
    }
    fn x0() -> AlgElem {
        AlgElem::gen_x0(1)
    }
    fn xp() -> AlgElem {
        AlgElem::gen_xp()
    }
    fn lam() -> AlgElem {
        AlgElem::gen_lambda(1)
    }
    fn rr() -> AlgElem {
        AlgElem::gen_r(1)
    }

    #[test]
    fn defining_relations() {
        // x- x0 = q x0 x-
        assert!(xm()
            .mul(&x0())
            .alg_equal(&x0().mul(&xm()).scale(&Scalar::q_pow(1))));
        // x+ x0 = 1/q x0 x+
        assert!(xp()
            .mul(&x0())
            .alg_equal(&x0().mul(&xp()).scale(&Scalar::q_pow(-1))));
        // [x+, x-] = h (x0)^2
        let comm = xp().commutator(&xm());
        let want = AlgElem::gen_x0(2).scale(&Scalar::h());
        assert!(comm.alg_equal(&want));
    }

    #[test]
    fn xp_xm_product_expands() {
        // x+ * x- = x- x+ + h (x0)^2 in normal order
        let p = xp().mul(&xm());
        let want = &xm().mul(&xp()) + &AlgElem::gen_x0(2).scale(&Scalar::h());
        assert_eq!(p, want);
    }

    #[test]
    fn lambda_commutation() {
        // L x0 = 1/q x0 L, both as normal forms
        let lhs = lam().mul(&x0());
        let rhs = x0().mul(&lam()).scale(&Scalar::q_pow(-1));
        assert!(lhs.alg_equal(&rhs));
        // x0 L = q L x0 structurally
        let p = x0().mul(&lam());
        let want = AlgElem::term(
            Monomial {
                lam: 1,
                x0: 1,
                ..Monomial::unit()
            },
            Scalar::q_pow(1),
        );
        assert_eq!(p, want);
    }

    #[test]
    fn r_times_r_reduces() {
        let p = rr().mul(&rr());
        assert_eq!(p, AlgElem::r_squared());
        // independent oracle: g_ij x^i x^j
        let g = crate::rmatrix::build_metric();
        let mut acc = AlgElem::zero();
        for i in 0..3 {
            for j in 0..3 {
                let c = g.at(i, j);
                if c.is_zero() {
                    continue;
                }
                acc = &acc + &AlgElem::gen_x(i).mul(&AlgElem::gen_x(j)).scale(c);
            }
        }
        assert!(p.alg_equal(&acc));
    }

    #[test]
    fn r_power_clearing_decides_equality() {
        // r^-2 * (expansion of r^2) = 1
        let lhs = AlgElem::gen_r(-2).mul(&AlgElem::r_squared());
        assert!(lhs.alg_equal(&AlgElem::one()));
        assert!(!lhs.is_zero()); // stored form is not the cleared form
        assert!(!x0().alg_equal(&xm()));
    }

    #[test]
    fn r_squared_is_central_up_to_lambda() {
        let r2 = AlgElem::r_squared();
        for g in [xm(), x0(), xp(), AlgElem::gen_x0(-1), rr()] {
            assert!(r2.commutator(&g).is_zero_alg());
        }
        // L r^2 = q^-2 r^2 L
        let lhs = lam().mul(&r2);
        let rhs = r2.mul(&lam()).scale(&Scalar::q_pow(-2));
        assert!(lhs.alg_equal(&rhs));
    }

    #[test]
    fn x0_inverse_rules() {
        // (x0)^-1 x- = q x- (x0)^-1
        let lhs = AlgElem::gen_x0(-1).mul(&xm());
        let rhs = xm().mul(&AlgElem::gen_x0(-1)).scale(&Scalar::q_pow(1));
        assert!(lhs.alg_equal(&rhs));
        // x+ (x0)^-1 = q (x0)^-1 x+
        let lhs = xp().mul(&AlgElem::gen_x0(-1));
        let rhs = AlgElem::gen_x0(-1).mul(&xp()).scale(&Scalar::q_pow(1));
        assert!(lhs.alg_equal(&rhs));
        assert!(AlgElem::gen_x0(1)
            .mul(&AlgElem::gen_x0(-1))
            .alg_equal(&AlgElem::one()));
    }

    #[test]
    fn star_generator_actions() {
        assert!(xm().star().alg_equal(&xp().scale(&Scalar::s_pow(1))));
        assert!(x0().star().alg_equal(&x0()));
        assert!(xp().star().alg_equal(&xm().scale(&Scalar::s_pow(-1))));
        assert!(rr().star().alg_equal(&rr()));
        assert!(lam().star().alg_equal(&AlgElem::gen_lambda(-1)));
        assert!(AlgElem::gen_x0(-1).star().alg_equal(&AlgElem::gen_x0(-1)));
    }

    #[test]
    fn star_of_xp_xm() {
        // star(x+x-) = x-x+ + h (x0)^2
        let p = xp().mul(&xm()).star();
        let want = &xm().mul(&xp()) + &AlgElem::gen_x0(2).scale(&Scalar::h());
        assert!(p.alg_equal(&want));
        assert!(xp().star().star().alg_equal(&xp()));
    }

    #[test]
    fn relations_are_star_stable() {
        // applying star to each defining relation yields an identity
        let rel1 = &xm().mul(&x0()) - &x0().mul(&xm()).scale(&Scalar::q_pow(1));
        let rel2 = &xp().mul(&x0()) - &x0().mul(&xp()).scale(&Scalar::q_pow(-1));
        let rel3 = &xp().commutator(&xm()) - &AlgElem::gen_x0(2).scale(&Scalar::h());
        for rel in [rel1, rel2, rel3] {
            assert!(rel.is_zero_alg());
            assert!(rel.star().is_zero_alg());
        }
    }

    #[test]
    fn critical_pair_x_plus_x0_x_minus() {
        let a = xp().mul(&x0()).mul(&xm());
        let b = xp().mul(&x0().mul(&xm()));
        assert_eq!(a, b);
        assert!(a.alg_equal(&b));
    }

    #[test]
    fn grade_examples() {
        // x+ (x0)^-1 has x-degree 0
        let e = xp().mul(&AlgElem::gen_x0(-1));
        assert_eq!(e.x_degree(), Some(0));
        // r^-2 (x+)^2 has x-degree 0
        let e = AlgElem::gen_r(-2).mul(&xp()).mul(&xp());
        assert_eq!(e.x_degree(), Some(0));
        // mixed grades are reported per term
        let e = &xp() + &AlgElem::one();
        assert_eq!(e.grades(), vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn eval_coeffs_and_poles() {
        let two = BigRational::from_integer(2.into());
        let e = AlgElem::gen_x0(2).scale(&Scalar::h());
        let at2 = e.eval_coeffs(&two).unwrap();
        assert_eq!(
            at2.coeff(&Monomial {
                x0: 2,
                ..Monomial::unit()
            }),
            Scalar::from_rational(3, 2).unwrap()
        );
        // h^-1 prefactors pole at s = 1
        let one = BigRational::from_integer(1.into());
        let sing = AlgElem::one().scale(&Scalar::h().inv().unwrap());
        assert!(matches!(
            sing.eval_coeffs(&one),
            Err(ScalarError::Pole { .. })
        ));
        // r^2 at s = 2: (5/2) x-x+ + 4 x0^2
        let r2 = AlgElem::r_squared().eval_coeffs(&two).unwrap();
        assert_eq!(
            r2.coeff(&Monomial {
                xm: 1,
                xp: 1,
                ..Monomial::unit()
            }),
            Scalar::from_rational(5, 2).unwrap()
        );
        assert_eq!(
            r2.coeff(&Monomial {
                x0: 2,
                ..Monomial::unit()
            }),
            Scalar::from_int(4)
        );
    }

    #[test]
    fn mono_inverse_examples() {
        let m = AlgElem::term(
            Monomial {
                lam: 2,
                r: -2,
                x0: 1,
                ..Monomial::unit()
            },
            Scalar::s_pow(1),
        );
        let inv = m.mono_inverse().unwrap();
        assert!(m.mul(&inv).alg_equal(&AlgElem::one()));
        assert!(inv.mul(&m).alg_equal(&AlgElem::one()));
        assert!(xm().mono_inverse().is_none());
    }

    fn arb_elem() -> impl Strategy<Value = AlgElem> {
        let mono = (-1i64..2, -1i64..2, 0u32..3, -2i64..3, 0u32..3).prop_map(
            |(lam, r, xm, x0, xp)| Monomial {
                lam,
                r,
                xm,
                x0,
                xp,
            },
        );
        let coeff = (-3i64..4, 1u32..3).prop_map(|(n, sp)| {
            &Scalar::from_int(n) * &Scalar::s_pow(sp as i64 - 2)
        });
        proptest::collection::vec((mono, coeff), 1..4).prop_map(|ts| {
            let mut e = AlgElem::zero();
            for (m, c) in ts {
                e = &e + &AlgElem::term(m, c);
            }
            e
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mul_is_associative(a in arb_elem(), b in arb_elem(), c in arb_elem()) {
            let lhs = a.mul(&b).mul(&c);
            let rhs = a.mul(&b.mul(&c));
            prop_assert!(lhs.alg_equal(&rhs));
        }

        #[test]
        fn star_is_involutive(a in arb_elem()) {
            prop_assert!(a.star().star().alg_equal(&a));
        }

        #[test]
        fn star_reverses_products(a in arb_elem(), b in arb_elem()) {
            let lhs = a.mul(&b).star();
            let rhs = b.star().mul(&a.star());
            prop_assert!(lhs.alg_equal(&rhs));
        }

        #[test]
        fn lambda_crossing_matches_grade(a in arb_elem()) {
            // L f = q^(-deg f) f L for homogeneous f
            if let Some(d) = a.x_degree() {
                let lhs = AlgElem::gen_lambda(1).mul(&a);
                let rhs = a.mul(&AlgElem::gen_lambda(1)).scale(&Scalar::q_pow(-d));
                prop_assert!(lhs.alg_equal(&rhs));
            }
        }
    }
}
