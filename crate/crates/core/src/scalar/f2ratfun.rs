use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::f2poly::BivarPoly;
use super::Field;
use crate::error::{Error, Result};

/// A reduced fraction of polynomials in s, t over GF(2).
///
/// GF(2) has no units besides 1, so a reduced fraction is unique and
/// structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2RatFun {
    num: BivarPoly,
    den: BivarPoly,
}

impl F2RatFun {
    pub fn new(num: BivarPoly, den: BivarPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: BivarPoly, den: BivarPoly) -> Self {
        if num.is_zero() {
            return F2RatFun { num, den: BivarPoly::one() };
        }
        let g = num.gcd(&den);
        if g.is_one() {
            F2RatFun { num, den }
        } else {
            F2RatFun { num: num.exact_div(&g), den: den.exact_div(&g) }
        }
    }

    pub fn poly(p: BivarPoly) -> Self {
        F2RatFun { num: p, den: BivarPoly::one() }
    }

    pub fn s() -> Self {
        Self::poly(BivarPoly::monomial(1, 0))
    }

    pub fn t() -> Self {
        Self::poly(BivarPoly::monomial(0, 1))
    }

    pub fn numer(&self) -> &BivarPoly {
        &self.num
    }

    pub fn denom(&self) -> &BivarPoly {
        &self.den
    }

    /// Coordinates over the subfield of squares w.r.t. the basis 1, s, t, st.
    ///
    /// Every x in GF(2)(s,t) is uniquely x0 + s x1 + t x2 + st x3 with each
    /// xi a square; writing x = num*den / den^2 and splitting num*den by
    /// exponent parity yields the xi.
    pub fn square_coordinates(&self) -> [F2RatFun; 4] {
        let den2 = self.den.mul(&self.den);
        self.num
            .mul(&self.den)
            .parity_split()
            .map(|part| Self::reduce(part, den2.clone()))
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &BivarPoly) -> fmt::Result {
    let monos = p.monomials();
    if monos.is_empty() {
        return write!(f, "0");
    }
    for (n, (i, j)) in monos.iter().enumerate() {
        if n > 0 {
            write!(f, " + ")?;
        }
        let mut factors = Vec::new();
        match i {
            0 => {}
            1 => factors.push("s".to_string()),
            _ => factors.push(format!("s^{i}")),
        }
        match j {
            0 => {}
            1 => factors.push("t".to_string()),
            _ => factors.push(format!("t^{j}")),
        }
        if factors.is_empty() {
            write!(f, "1")?;
        } else {
            write!(f, "{}", factors.join("*"))?;
        }
    }
    Ok(())
}

fn is_monomial(p: &BivarPoly) -> bool {
    p.monomials().len() == 1
}

impl fmt::Display for F2RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, p: &BivarPoly| {
            if is_monomial(p) {
                write_poly(f, p)
            } else {
                write!(f, "(")?;
                write_poly(f, p)?;
                write!(f, ")")
            }
        };
        if self.den.is_one() {
            write_poly(f, &self.num)
        } else {
            wrap(f, &self.num)?;
            write!(f, "/")?;
            // s^2*t must not be read as (…/s^2)*t
            if is_monomial(&self.den) && self.den.monomials().iter().any(|&(i, j)| i > 0 && j > 0) {
                write!(f, "(")?;
                write_poly(f, &self.den)?;
                write!(f, ")")
            } else {
                wrap(f, &self.den)
            }
        }
    }
}

impl fmt::Debug for F2RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for F2RatFun {
    type Output = F2RatFun;
    fn add(self, rhs: F2RatFun) -> F2RatFun {
        if self.den == rhs.den {
            return Self::reduce(self.num.add(&rhs.num), self.den);
        }
        // only the common factor g of the denominators can cancel
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
            return F2RatFun { num, den: self.den.mul(&rhs.den) };
        }
        let (b, d) = (self.den.exact_div(&g), rhs.den.exact_div(&g));
        let num = self.num.mul(&d).add(&rhs.num.mul(&b));
        if num.is_zero() {
            return F2RatFun::zero();
        }
        let g2 = num.gcd(&g);
        F2RatFun { num: num.exact_div(&g2), den: b.mul(&d).mul(&g.exact_div(&g2)) }
    }
}

impl Sub for F2RatFun {
    type Output = F2RatFun;
    fn sub(self, rhs: F2RatFun) -> F2RatFun {
        self + rhs
    }
}

impl Neg for F2RatFun {
    type Output = F2RatFun;
    fn neg(self) -> F2RatFun {
        self
    }
}

impl Mul for F2RatFun {
    type Output = F2RatFun;
    fn mul(self, rhs: F2RatFun) -> F2RatFun {
        if self.num.is_zero() || rhs.num.is_zero() {
            return F2RatFun::zero();
        }
        // cross-cancel before multiplying to keep degrees down
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = self.num.exact_div(&g1).mul(&rhs.num.exact_div(&g2));
        let den = self.den.exact_div(&g2).mul(&rhs.den.exact_div(&g1));
        F2RatFun { num, den }
    }
}

impl Field for F2RatFun {
    const CHARACTERISTIC: u32 = 2;

    fn zero() -> Self {
        F2RatFun { num: BivarPoly::zero(), den: BivarPoly::one() }
    }

    fn one() -> Self {
        F2RatFun { num: BivarPoly::one(), den: BivarPoly::one() }
    }

    fn from_i64(n: i64) -> Self {
        if n.rem_euclid(2) == 1 {
            Self::one()
        } else {
            Self::zero()
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        Ok(F2RatFun { num: self.den.clone(), den: self.num.clone() })
    }

    /// Squares of GF(2)[s,t] lie in GF(2)[s^2,t^2], and a reduced fraction
    /// is a square iff numerator and denominator both are.
    fn is_square(&self) -> bool {
        self.num.all_exponents_even() && self.den.all_exponents_even()
    }

    fn from_ident(name: &str) -> Option<Self> {
        match name {
            "s" => Some(Self::s()),
            "t" => Some(Self::t()),
            _ => None,
        }
    }

    fn is_compound(&self) -> bool {
        !(self.den.is_one() && is_monomial(&self.num))
    }

    fn bit_size(&self) -> u64 {
        self.num.max_degree().max(self.den.max_degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> F2RatFun {
        F2RatFun::s()
    }
    fn t() -> F2RatFun {
        F2RatFun::t()
    }

    #[test]
    fn characteristic_two() {
        assert_eq!(s() + s(), F2RatFun::zero());
        assert_eq!(-s(), s());
        let st = s() + t();
        assert_eq!(st.clone() * st, s() * s() + t() * t());
    }

    #[test]
    fn reduced_fractions() {
        let a = (s() * s() + t() * t()).div(&(s() + t())).unwrap();
        assert_eq!(a, s() + t());
        assert_eq!(a.denom(), &BivarPoly::one());
        let b = F2RatFun::one().div(&(s() + t())).unwrap();
        assert_eq!((b.clone() * (s() + t())), F2RatFun::one());
        assert_eq!(b.to_string(), "1/(s + t)");
        let c = (s() * s() * t() + F2RatFun::one()).div(&(s() + t())).unwrap();
        assert_eq!(c.to_string(), "(s^2*t + 1)/(s + t)");
    }

    #[test]
    fn frobenius_squares() {
        assert!((s() * s() * t() * t()).is_square());
        assert!(!s().is_square());
        let x = (s() + t() * s()).div(&(t() + F2RatFun::one())).unwrap();
        assert!((x.clone() * x.clone()).is_square());
        assert!(!x.is_square());
    }

    #[test]
    fn square_coordinates_reassemble() {
        let x = (s() * s() * t() + s() + F2RatFun::one())
            .div(&(s() * t() + t()))
            .unwrap();
        let c = x.square_coordinates();
        assert!(c.iter().all(Field::is_square));
        let rebuilt = c[0].clone() + s() * c[1].clone() + t() * c[2].clone() + s() * t() * c[3].clone();
        assert_eq!(rebuilt, x);
    }
}
