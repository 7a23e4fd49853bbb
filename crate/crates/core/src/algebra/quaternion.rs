use num_bigint::BigInt;

use super::hilbert::is_division;
use super::{AlgebraKind, FourAlgebra, Quaternion};
use crate::error::{Error, Result};
use crate::linalg::{self, LinearMap};
use crate::scalar::{check_bits, Field, Rational, COORDINATE_BIT_GUARD};

type Q = Quaternion<Rational>;

/// The quaternion algebra over Q with basis 1, i, j, k, where
/// i² = a, j² = b, ij = k = -ji. Construction certifies that it is a skew
/// field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionAlgebra {
    a: Rational,
    b: Rational,
    // a·den(a)², b·den(b)²: integers in the same square classes
    a_int: BigInt,
    b_int: BigInt,
}

impl QuaternionAlgebra {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::domain("structure constants must be nonzero"));
        }
        check_bits(&a, COORDINATE_BIT_GUARD)?;
        check_bits(&b, COORDINATE_BIT_GUARD)?;
        let a_int = a.numer() * a.denom();
        let b_int = b.numer() * b.denom();
        if !is_division(&a_int, &b_int)? {
            return Err(Error::domain(format!(
                "({a}, {b}) is not a division algebra"
            )));
        }
        Ok(QuaternionAlgebra { a, b, a_int, b_int })
    }

    /// Hamilton's quaternions over Q: a = b = -1.
    pub fn hamilton() -> Self {
        Self::new(Rational::from_int(-1), Rational::from_int(-1)).expect("Hamilton quaternions are a skew field")
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Integer structure constants in the same square classes as (a, b).
    pub fn integral_constants(&self) -> (&BigInt, &BigInt) {
        (&self.a_int, &self.b_int)
    }

    pub fn conjugate(&self, x: &Q) -> Q {
        let [c0, c1, c2, c3] = x.coords().clone();
        Quaternion::new([c0, -c1, -c2, -c3])
    }

    pub fn trace(&self, x: &Q) -> Rational {
        x.coords()[0].clone() * Rational::from_int(2)
    }

    pub fn norm(&self, x: &Q) -> Rational {
        let [c0, c1, c2, c3] = x.coords().clone();
        let ab = self.a.clone() * self.b.clone();
        c0.clone() * c0 - self.a.clone() * c1.clone() * c1 - self.b.clone() * c2.clone() * c2
            + ab * c3.clone() * c3
    }

    /// (conjugate, trace, norm)
    pub fn unary_invariants(&self, x: &Q) -> (Q, Rational, Rational) {
        (self.conjugate(x), self.trace(x), self.norm(x))
    }

    /// (s, t) with x² = s + t x, namely s = -N(x), t = tr(x).
    pub fn kinematic_witness(&self, x: &Q) -> (Rational, Rational) {
        (-self.norm(x), self.trace(x))
    }

    /// Conjugate under some inner automorphism iff traces and norms agree.
    pub fn are_conjugate(&self, q1: &Q, q2: &Q) -> bool {
        self.trace(q1) == self.trace(q2) && self.norm(q1) == self.norm(q2)
    }

    /// Some h ≠ 0 with h⁻¹ q1 h = q2, from the solution space of q1 h = h q2.
    ///
    /// The first basis vector of the echelon parameterization is returned.
    pub fn conjugator(&self, q1: &Q, q2: &Q) -> Option<Q> {
        if !self.are_conjugate(q1, q2) {
            return None;
        }
        let l = self.left_map(q1);
        let r = self.right_map(q2);
        let rows: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| l.entry(i, j).clone() - r.entry(i, j).clone()).collect())
            .collect();
        let h = linalg::nullspace(rows, 4).into_iter().next()?;
        Some(Quaternion::new(h.try_into().expect("four coordinates")))
    }

    /// ⟨x, y⟩ = tr(x ȳ).
    pub fn bilinear(&self, x: &Q, y: &Q) -> Rational {
        self.trace(&self.mul(x, &self.conjugate(y)))
    }

    /// Gram matrix of ⟨·,·⟩: diag(2, -2a, -2b, 2ab).
    pub fn gram(&self) -> LinearMap<Rational> {
        LinearMap::from_images(std::array::from_fn(|j| {
            Quaternion::new(std::array::from_fn(|i| {
                self.bilinear(&Quaternion::basis(i), &Quaternion::basis(j))
            }))
        }))
    }
}

impl FourAlgebra for QuaternionAlgebra {
    type Scalar = Rational;

    fn kind(&self) -> AlgebraKind {
        AlgebraKind::CaseA
    }

    fn basis_names(&self) -> [&'static str; 4] {
        ["1", "i", "j", "k"]
    }

    fn mul(&self, x: &Q, y: &Q) -> Q {
        let [x0, x1, x2, x3] = x.coords().clone();
        let [y0, y1, y2, y3] = y.coords().clone();
        let (a, b) = (self.a.clone(), self.b.clone());
        let ab = a.clone() * b.clone();
        let m = |p: &Rational, q: &Rational| p.clone() * q.clone();
        Quaternion::new([
            m(&x0, &y0) + a.clone() * m(&x1, &y1) + b.clone() * m(&x2, &y2) - ab * m(&x3, &y3),
            m(&x0, &y1) + m(&x1, &y0) - b.clone() * m(&x2, &y3) + b * m(&x3, &y2),
            m(&x0, &y2) + m(&x2, &y0) + a.clone() * m(&x1, &y3) - a * m(&x3, &y1),
            m(&x0, &y3) + m(&x3, &y0) + m(&x1, &y2) - m(&x2, &y1),
        ])
    }

    fn unit(&self) -> Q {
        Quaternion::basis(0)
    }

    /// x̄, since x x̄ = N(x).
    fn adjugate(&self, x: &Q) -> Result<Q> {
        if x.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        Ok(self.conjugate(x))
    }

    fn inverse(&self, x: &Q) -> Result<Q> {
        let n = self.norm(x);
        if n.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        Ok(self.conjugate(x).scale(&n.inv()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: [i64; 4]) -> Q {
        Quaternion::from_ints(c)
    }
    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn defining_relations() {
        let h = QuaternionAlgebra::hamilton();
        let (i, j, k) = (q([0, 1, 0, 0]), q([0, 0, 1, 0]), q([0, 0, 0, 1]));
        assert_eq!(h.mul(&i, &j), k);
        assert_eq!(h.mul(&j, &i), -k.clone());
        assert_eq!(h.mul(&k, &k), q([-1, 0, 0, 0]));
        assert_eq!(h.mul(&q([1, 1, 0, 0]), &q([1, -1, 0, 0])), q([2, 0, 0, 0]));
    }

    #[test]
    fn general_constants_relations() {
        let alg = QuaternionAlgebra::new(r(-1), r(-3)).unwrap();
        let (i, j, k) = (q([0, 1, 0, 0]), q([0, 0, 1, 0]), q([0, 0, 0, 1]));
        assert_eq!(alg.mul(&i, &i), q([-1, 0, 0, 0]));
        assert_eq!(alg.mul(&j, &j), q([-3, 0, 0, 0]));
        // k² = -ab
        assert_eq!(alg.mul(&k, &k), q([-3, 0, 0, 0]));
        assert_eq!(alg.mul(&i, &k), alg.mul(&i, &alg.mul(&i, &j)));
        assert_eq!(alg.mul(&k, &j), alg.mul(&alg.mul(&i, &j), &j));
    }

    #[test]
    fn rejects_split_algebras() {
        assert!(matches!(QuaternionAlgebra::new(r(1), r(1)), Err(Error::Domain(_))));
        assert!(matches!(QuaternionAlgebra::new(r(0), r(-1)), Err(Error::Domain(_))));
        // (-1/4, -1) is Hamilton up to rescaling i
        assert!(QuaternionAlgebra::new(Rational::new(-1, 4).unwrap(), r(-1)).is_ok());
    }

    #[test]
    fn unary_invariants_worked() {
        let h = QuaternionAlgebra::hamilton();
        assert_eq!(h.unary_invariants(&q([1, 0, 0, 0])), (q([1, 0, 0, 0]), r(2), r(1)));
        assert_eq!(h.unary_invariants(&q([1, 1, 0, 0])), (q([1, -1, 0, 0]), r(2), r(2)));
        assert_eq!(h.unary_invariants(&q([0, 1, 1, 0])), (q([0, -1, -1, 0]), r(0), r(2)));
    }

    #[test]
    fn inverses_worked() {
        let h = QuaternionAlgebra::hamilton();
        assert_eq!(h.inverse(&q([0, 1, 0, 0])).unwrap(), q([0, -1, 0, 0]));
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(h.inverse(&q([1, 1, 0, 0])).unwrap(), q([1, -1, 0, 0]).scale(&half));
        assert!(h.inverse(&Quaternion::zero()).is_err());
    }

    #[test]
    fn kinematic_witness_worked() {
        let h = QuaternionAlgebra::hamilton();
        assert_eq!(h.kinematic_witness(&q([0, 1, 0, 0])), (r(-1), r(0)));
        assert_eq!(h.kinematic_witness(&q([1, 1, 0, 0])), (r(-2), r(2)));
        assert_eq!(h.kinematic_witness(&q([3, 0, 0, 0])), (r(-9), r(6)));
    }

    #[test]
    fn translation_matrices() {
        let h = QuaternionAlgebra::hamilton();
        let i = q([0, 1, 0, 0]);
        let l = h.left_map(&i);
        let images: Vec<Q> = (0..4).map(|n| l.apply(&Quaternion::basis(n))).collect();
        assert_eq!(images, vec![q([0, 1, 0, 0]), q([-1, 0, 0, 0]), q([0, 0, 0, 1]), q([0, 0, -1, 0])]);
        let rm = h.right_map(&i);
        let images: Vec<Q> = (0..4).map(|n| rm.apply(&Quaternion::basis(n))).collect();
        assert_eq!(images, vec![q([0, 1, 0, 0]), q([-1, 0, 0, 0]), q([0, 0, 0, -1]), q([0, 0, 1, 0])]);
        assert_eq!(h.left_map(&q([1, 0, 0, 0])), LinearMap::identity());
    }

    #[test]
    fn conjugacy_worked() {
        let h = QuaternionAlgebra::hamilton();
        let (i, j) = (q([0, 1, 0, 0]), q([0, 0, 1, 0]));
        assert!(h.are_conjugate(&i, &j));
        assert!(!h.are_conjugate(&i, &q([1, 1, 0, 0])));
        assert!(!h.are_conjugate(&q([0, 2, 0, 0]), &q([0, 1, 1, 0])));

        let check = |q1: &Q, q2: &Q| {
            let c = h.conjugator(q1, q2).expect("conjugate pair");
            let back = h.mul(&h.mul(&h.inverse(&c).unwrap(), q1), &c);
            assert_eq!(&back, q2);
            c
        };
        check(&i, &j);
        check(&i, &-i.clone());
        let same = q([1, 2, 3, 4]);
        check(&same, &same);
        // (i + j)⁻¹ i (i + j) = j
        let ipj = q([0, 1, 1, 0]);
        assert_eq!(h.mul(&h.mul(&h.inverse(&ipj).unwrap(), &i), &ipj), j);
        assert_eq!(h.conjugator(&i, &q([1, 1, 0, 0])), None);
    }

    #[test]
    fn bilinear_form() {
        let h = QuaternionAlgebra::hamilton();
        assert_eq!(h.bilinear(&q([1, 0, 0, 0]), &q([1, 0, 0, 0])), r(2));
        assert_eq!(h.bilinear(&q([0, 1, 0, 0]), &q([0, 0, 1, 0])), r(0));
        assert_eq!(h.bilinear(&q([0, 1, 0, 0]), &q([0, 1, 0, 0])), r(2));
        assert_eq!(h.gram(), LinearMap::scalar(r(2)));
        let alg = QuaternionAlgebra::new(r(-1), r(-3)).unwrap();
        let x = q([1, 2, -1, 3]);
        assert_eq!(alg.bilinear(&x, &x), alg.norm(&x) * r(2));
    }
}
