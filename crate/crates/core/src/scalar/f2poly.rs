//! Polynomials over the two-element field.
//!
//! [`UnivarPoly`] is GF(2)[t] packed into 64-bit words. [`BivarPoly`] is
//! GF(2)[t][s], stored as its coefficients in s. Greatest common divisors
//! of bivariate polynomials use content / primitive-part splitting and a
//! primitive pseudo-remainder sequence.

use std::cmp::Ordering;

/// A polynomial in t over GF(2); bit `n` is the coefficient of t^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UnivarPoly(Vec<u64>);

impl UnivarPoly {
    pub fn zero() -> Self {
        UnivarPoly(Vec::new())
    }

    pub fn one() -> Self {
        UnivarPoly(vec![1])
    }

    pub fn monomial(deg: usize) -> Self {
        let mut w = vec![0u64; deg / 64 + 1];
        w[deg / 64] = 1 << (deg % 64);
        UnivarPoly(w)
    }

    fn trimmed(mut w: Vec<u64>) -> Self {
        while w.last() == Some(&0) {
            w.pop();
        }
        UnivarPoly(w)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.0.last()?;
        Some(64 * (self.0.len() - 1) + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, n: usize) -> bool {
        self.0.get(n / 64).is_some_and(|w| (w >> (n % 64)) & 1 == 1)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| (w >> b) & 1 == 1).map(move |b| 64 * i + b)
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut w = long.0.clone();
        for (a, b) in w.iter_mut().zip(&short.0) {
            *a ^= b;
        }
        Self::trimmed(w)
    }

    fn xor_shifted(acc: &mut Vec<u64>, src: &[u64], shift: usize) {
        let (words, bits) = (shift / 64, shift % 64);
        let need = src.len() + words + 1;
        if acc.len() < need {
            acc.resize(need, 0);
        }
        for (i, &s) in src.iter().enumerate() {
            acc[i + words] ^= s << bits;
            if bits != 0 {
                acc[i + words + 1] ^= s >> (64 - bits);
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut acc = Vec::new();
        for e in self.exponents() {
            Self::xor_shifted(&mut acc, &other.0, e);
        }
        Self::trimmed(acc)
    }

    pub fn shl(&self, n: usize) -> Self {
        let mut acc = Vec::new();
        Self::xor_shifted(&mut acc, &self.0, n);
        Self::trimmed(acc)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = Vec::new();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            let mut w = std::mem::take(&mut rem.0);
            Self::xor_shifted(&mut w, &divisor.0, shift);
            rem = Self::trimmed(w);
            if quo.len() <= shift / 64 {
                quo.resize(shift / 64 + 1, 0);
            }
            quo[shift / 64] ^= 1 << (shift % 64);
        }
        (Self::trimmed(quo), rem)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    /// Exact quotient; panics if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

/// A polynomial in s and t over GF(2), as a polynomial in s with
/// coefficients in GF(2)[t]. Index `n` holds the coefficient of s^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly(Vec<UnivarPoly>);

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly(Vec::new())
    }

    pub fn one() -> Self {
        BivarPoly(vec![UnivarPoly::one()])
    }

    /// The monomial s^i t^j.
    pub fn monomial(i: usize, j: usize) -> Self {
        let mut c = vec![UnivarPoly::zero(); i + 1];
        c[i] = UnivarPoly::monomial(j);
        BivarPoly(c)
    }

    pub fn from_monomials(monos: impl IntoIterator<Item = (usize, usize)>) -> Self {
        monos
            .into_iter()
            .fold(Self::zero(), |acc, (i, j)| acc.add(&Self::monomial(i, j)))
    }

    fn from_coeffs(mut c: Vec<UnivarPoly>) -> Self {
        while c.last().is_some_and(UnivarPoly::is_zero) {
            c.pop();
        }
        BivarPoly(c)
    }

    fn constant(c: UnivarPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree_s(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &UnivarPoly {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    /// Monomials (s-exponent, t-exponent), in descending total degree and
    /// then descending s-exponent.
    pub fn monomials(&self) -> Vec<(usize, usize)> {
        let mut m: Vec<(usize, usize)> = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.exponents().map(move |j| (i, j)))
            .collect();
        m.sort_by(|a, b| match (b.0 + b.1).cmp(&(a.0 + a.1)) {
            Ordering::Equal => b.0.cmp(&a.0),
            o => o,
        });
        m
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.monomials().first().map(|(i, j)| i + j)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let zero = UnivarPoly::zero();
        let c = (0..n)
            .map(|i| {
                self.0
                    .get(i)
                    .unwrap_or(&zero)
                    .add(other.0.get(i).unwrap_or(&zero))
            })
            .collect();
        Self::from_coeffs(c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![UnivarPoly::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(c)
    }

    fn scale(&self, k: &UnivarPoly) -> Self {
        Self::from_coeffs(self.0.iter().map(|c| c.mul(k)).collect())
    }

    fn shift_s(&self, n: usize) -> Self {
        let mut c = vec![UnivarPoly::zero(); n];
        c.extend(self.0.iter().cloned());
        Self::from_coeffs(c)
    }

    /// gcd of the coefficients in GF(2)[t].
    pub fn content(&self) -> UnivarPoly {
        self.0
            .iter()
            .fold(UnivarPoly::zero(), |g, c| if g.is_one() { g } else { g.gcd(c) })
    }

    fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_one() {
            return self.clone();
        }
        Self::from_coeffs(self.0.iter().map(|x| x.exact_div(&c)).collect())
    }

    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree_s().expect("pseudo-division by zero");
        let lc = divisor.lead().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree_s() {
            if rd < dd {
                break;
            }
            let lr = r.lead().clone();
            r = r.scale(&lc).add(&divisor.scale(&lr).shift_s(rd - dd));
        }
        r
    }

    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_one() || other.is_one() {
            return Self::one();
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree_s() < b.degree_s() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part() };
        }
        a.primitive_part().scale(&c)
    }

    /// Exact quotient; panics if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let dd = divisor.degree_s().expect("division by zero polynomial");
        let lc = divisor.lead();
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some(rd) = r.degree_s() {
            assert!(rd >= dd, "inexact polynomial division");
            let k = r.lead().exact_div(lc);
            let term = Self::constant(k).shift_s(rd - dd);
            r = r.add(&divisor.mul(&term));
            q = q.add(&term);
        }
        q
    }

    /// True when every monomial has even exponents in both s and t.
    pub fn all_exponents_even(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || (i % 2 == 0 && c.exponents().all(|j| j % 2 == 0)))
    }

    /// Split by exponent parity: `self = p00 + s p10 + t p01 + s t p11`,
    /// each part containing only even exponents. Order: (00, 10, 01, 11).
    pub fn parity_split(&self) -> [BivarPoly; 4] {
        let mut parts: [Vec<(usize, usize)>; 4] = Default::default();
        for (i, j) in self.monomials() {
            let slot = (i % 2) + 2 * (j % 2);
            parts[slot].push((i - i % 2, j - j % 2));
        }
        parts.map(Self::from_monomials)
    }

    pub fn max_degree(&self) -> u64 {
        let t = self.0.iter().filter_map(|c| c.degree()).max().unwrap_or(0);
        self.0.len().max(t + 1) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(monos: &[(usize, usize)]) -> BivarPoly {
        BivarPoly::from_monomials(monos.iter().copied())
    }

    #[test]
    fn univariate_basics() {
        // (t + 1)^2 = t^2 + 1 in characteristic two
        let t1 = UnivarPoly::monomial(1).add(&UnivarPoly::one());
        assert_eq!(t1.mul(&t1), UnivarPoly::monomial(2).add(&UnivarPoly::one()));
        let big = UnivarPoly::monomial(130).add(&UnivarPoly::monomial(3));
        let (q, r) = big.divrem(&t1);
        assert_eq!(q.mul(&t1).add(&r), big);
        assert!(r.degree().is_none() || r.degree() < Some(1));
    }

    #[test]
    fn univariate_gcd() {
        let a = UnivarPoly::monomial(1).add(&UnivarPoly::one()); // t + 1
        let b = UnivarPoly::monomial(2).add(&UnivarPoly::monomial(1)).add(&UnivarPoly::one());
        let x = a.mul(&a).mul(&b);
        let y = a.mul(&UnivarPoly::monomial(5));
        assert_eq!(x.gcd(&y), a);
    }

    #[test]
    fn square_of_sum_drops_cross_terms() {
        let s_plus_t = p(&[(1, 0), (0, 1)]);
        assert_eq!(s_plus_t.mul(&s_plus_t), p(&[(2, 0), (0, 2)]));
    }

    #[test]
    fn bivariate_gcd_recovers_common_factor() {
        let f = p(&[(1, 1), (0, 0)]); // st + 1
        let g = p(&[(2, 0), (0, 1)]); // s^2 + t
        let h = p(&[(1, 0), (0, 3), (0, 0)]); // s + t^3 + 1
        let a = f.mul(&g);
        let b = f.mul(&h).mul(&h);
        assert_eq!(a.gcd(&b), f);
        assert_eq!(a.exact_div(&f), g);
        // content-only common factor
        let t1 = p(&[(0, 1), (0, 0)]);
        assert_eq!(t1.mul(&g).gcd(&t1.mul(&h)), t1);
    }

    #[test]
    fn monomial_order_and_parity() {
        let x = p(&[(0, 0), (2, 1), (1, 2), (1, 0)]);
        assert_eq!(x.monomials(), vec![(2, 1), (1, 2), (1, 0), (0, 0)]);
        let parts = x.parity_split();
        assert_eq!(parts[0], p(&[(0, 0)]));
        assert_eq!(parts[1], p(&[(0, 2), (0, 0)]));
        assert_eq!(parts[2], p(&[(2, 0)]));
        assert!(parts[3].is_zero());
        assert!(p(&[(2, 2), (0, 4)]).all_exponents_even());
        assert!(!p(&[(1, 0)]).all_exponents_even());
    }
}
