//! Elements of the rational function field Q(q).
//!
//! A value is stored as `q^shift * num / den` where
//! - `num` and `den` are coprime,
//! - `den` is monic with nonzero constant term,
//! - `num` has nonzero constant term (or is zero, in which case
//!   `shift == 0` and `den == 1`).
//!
//! This form is unique, so `==` is structural. Laurent polynomials are
//! exactly the values with `den == 1`; arithmetic between them never
//! touches a gcd.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::{BigInt, One, Zero};

use super::poly::{Poly, Rat};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: Poly,
    shift: i64,
    den: Poly,
}

impl QRat {
    pub fn zero() -> Self {
        QRat { num: Poly::zero(), shift: 0, den: Poly::one() }
    }

    pub fn one() -> Self {
        QRat::from_rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        QRat::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn from_rat(c: Rat) -> Self {
        if c.is_zero() {
            return QRat::zero();
        }
        QRat { num: Poly::constant(c), shift: 0, den: Poly::one() }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        QRat { num: Poly::one(), shift: k, den: Poly::one() }
    }

    /// `c * q^k`.
    pub fn monomial(c: Rat, k: i64) -> Self {
        if c.is_zero() {
            return QRat::zero();
        }
        QRat { num: Poly::constant(c), shift: k, den: Poly::one() }
    }

    /// Laurent polynomial `sum_k c_k q^k` from `(k, c_k)` pairs.
    pub fn laurent<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        let terms: Vec<_> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(lo) = terms.iter().map(|(k, _)| *k).min() else {
            return QRat::zero();
        };
        let mut num = Poly::zero();
        for (k, c) in terms {
            num = &num + &Poly::monomial(c, (k - lo) as usize);
        }
        QRat::from_parts(num, lo, Poly::one())
    }

    /// `q^shift * num / den` for arbitrary `num`, nonzero `den`.
    pub fn from_parts(num: Poly, shift: i64, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return QRat::zero();
        }
        let (vn, vd) = (num.valuation(), den.valuation());
        let mut num = num.shift_down(vn);
        let mut den = den.shift_down(vd);
        let shift = shift + vn as i64 - vd as i64;
        if den.degree() != Some(0) {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        let lead = den.lead().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        QRat { num, shift, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Nonzero rational constant, if the value is one.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        (self.shift == 0 && self.num.degree() == Some(0) && self.den.is_one()).then(|| self.num.coeff(0))
    }

    /// Laurent coefficients `(exponent, coefficient)` in increasing exponent
    /// order, or `None` if the value is not a Laurent polynomial.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, Rat)>> {
        if !self.den.is_one() {
            return None;
        }
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as i64 + self.shift, c.clone()))
                .collect(),
        )
    }

    /// Numerator and denominator as Laurent-shifted polynomials:
    /// `(num, shift, den)` with value `q^shift * num / den`.
    pub fn parts(&self) -> (&Poly, i64, &Poly) {
        (&self.num, self.shift, &self.den)
    }

    pub fn inv(&self) -> Result<QRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QRat::from_parts(self.den.clone(), -self.shift, self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QRat) -> Result<QRat> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> QRat {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut acc = QRat::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Evaluates at a rational point; `None` if `q` is a pole.
    pub fn eval(&self, q: &Rat) -> Option<Rat> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return None;
        }
        if q.is_zero() && self.shift < 0 && !self.is_zero() {
            return None;
        }
        let qs = if self.shift >= 0 {
            num::pow(q.clone(), self.shift as usize)
        } else {
            num::pow(q.recip(), (-self.shift) as usize)
        };
        Some(self.num.eval(q) * qs / d)
    }

    /// Substitutes `q -> q^-1`.
    pub fn bar(&self) -> QRat {
        if self.is_zero() {
            return QRat::zero();
        }
        // p(q^-1) = q^-deg * reversed(p)
        let rev = |p: &Poly| Poly::from_coeffs(p.coeffs().iter().rev().cloned().collect());
        let dn = self.num.degree().unwrap() as i64;
        let dd = self.den.degree().unwrap() as i64;
        QRat::from_parts(rev(&self.num), -self.shift - dn + dd, rev(&self.den))
    }

    fn add_impl(&self, rhs: &QRat, negate: bool) -> QRat {
        if rhs.is_zero() {
            return self.clone();
        }
        let rnum = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.is_zero() {
            return QRat { num: rnum, shift: rhs.shift, den: rhs.den.clone() };
        }
        let lo = self.shift.min(rhs.shift);
        let a = self.num.shift_up((self.shift - lo) as usize);
        let b = rnum.shift_up((rhs.shift - lo) as usize);
        if self.den == rhs.den {
            let num = &a + &b;
            if self.den.is_one() {
                // Laurent fast path: only the valuation needs adjusting.
                if num.is_zero() {
                    return QRat::zero();
                }
                let v = num.valuation();
                return QRat { num: num.shift_down(v), shift: lo + v as i64, den: Poly::one() };
            }
            return QRat::from_parts(num, lo, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let da = self.den.div_exact(&g);
        let db = rhs.den.div_exact(&g);
        let num = &(&a * &db) + &(&b * &da);
        QRat::from_parts(num, lo, &(&da * &db) * &g)
    }
}

impl Zero for QRat {
    fn zero() -> Self {
        QRat::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QRat {
    fn one() -> Self {
        QRat::one()
    }
}

impl Default for QRat {
    fn default() -> Self {
        QRat::zero()
    }
}

impl From<i64> for QRat {
    fn from(n: i64) -> Self {
        QRat::from_int(n)
    }
}

impl From<Rat> for QRat {
    fn from(c: Rat) -> Self {
        QRat::from_rat(c)
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        self.add_impl(rhs, false)
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self.add_impl(rhs, true)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        let shift = self.shift + rhs.shift;
        if self.den.is_one() && rhs.den.is_one() {
            return QRat { num: &self.num * &rhs.num, shift, den: Poly::one() };
        }
        // Cross-cancel before multiplying so the result is already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = rhs.den.div_exact(&g1);
        let n2 = rhs.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lead = den.lead().unwrap().clone();
        if lead.is_one() {
            QRat { num, shift, den }
        } else {
            let inv = lead.recip();
            QRat { num: num.scale(&inv), shift, den: den.scale(&inv) }
        }
    }
}

impl Div for &QRat {
    type Output = QRat;
    /// Panics on division by zero; use [`QRat::checked_div`] to get an error.
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: -&self.num, shift: self.shift, den: self.den.clone() }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QRat {
            type Output = QRat;
            fn $m(self, rhs: QRat) -> QRat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRat> for QRat {
            type Output = QRat;
            fn $m(self, rhs: &QRat) -> QRat {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, rhs: &QRat) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QRat> for QRat {
    fn sub_assign(&mut self, rhs: &QRat) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QRat> for QRat {
    fn mul_assign(&mut self, rhs: &QRat) {
        *self = &*self * rhs;
    }
}

impl Sum for QRat {
    fn sum<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::zero(), |a, b| a + b)
    }
}

impl Product for QRat {
    fn product<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::one(), |a, b| a * b)
    }
}

fn fmt_laurent(f: &mut fmt::Formatter<'_>, terms: &[(i64, Rat)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (n, (k, c)) in terms.iter().rev().enumerate() {
        let neg = c < &Rat::zero();
        let mag = if neg { -c } else { c.clone() };
        match (n, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let var = match *k {
            0 => String::new(),
            1 => "q".to_string(),
            k => format!("q^{k}"),
        };
        if var.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{var}")?;
        } else {
            write!(f, "{mag}*{var}")?;
        }
    }
    Ok(())
}

impl fmt::Display for QRat {
    /// Laurent polynomials render as `3*q^2 - 1/2*q^-1`; other values as
    /// `(numerator)/(denominator)` with both parts in that grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num_terms: Vec<(i64, Rat)> = self
            .num
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64 + self.shift, c.clone()))
            .collect();
        if self.den.is_one() {
            return fmt_laurent(f, &num_terms);
        }
        let den_terms: Vec<(i64, Rat)> = self
            .den
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64, c.clone()))
            .collect();
        write!(f, "(")?;
        fmt_laurent(f, &num_terms)?;
        write!(f, ")/(")?;
        fmt_laurent(f, &den_terms)?;
        write!(f, ")")
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}

impl serde::Serialize for QRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for QRat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
