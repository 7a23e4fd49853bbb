use super::{AlgebraKind, FourAlgebra, Quaternion};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{F2RatFun, Field};

type Q = Quaternion<F2RatFun>;

/// Whether 1, a, b, ab are linearly independent over the subfield of
/// squares of GF(2)(s,t), i.e. whether F(√a, √b) has degree 4 over F.
///
/// GF(2)(s,t) is free of rank 4 over its squares with basis 1, s, t, st, so
/// the condition is a 4x4 determinant on square-coordinates.
pub fn validate_case_b(a: &F2RatFun, b: &F2RatFun) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::domain("structure constants must be nonzero"));
    }
    let ab = a.clone() * b.clone();
    let rows: Vec<Vec<F2RatFun>> = [F2RatFun::one(), a.clone(), b.clone(), ab]
        .iter()
        .map(|x| x.square_coordinates().to_vec())
        .collect();
    Ok(linalg::rank(rows, 4) == 4)
}

/// The commutative field F[u, v] / (u² - a, v² - b) over F = GF(2)(s,t),
/// basis 1, u, v, w = uv. Every element squares into F.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticExtension {
    a: F2RatFun,
    b: F2RatFun,
}

impl QuarticExtension {
    pub fn new(a: F2RatFun, b: F2RatFun) -> Result<Self> {
        if !validate_case_b(&a, &b)? {
            return Err(Error::domain(format!(
                "({a}, {b}) does not give a quartic field extension"
            )));
        }
        Ok(QuarticExtension { a, b })
    }

    /// The default pair (a, b) = (s, t).
    pub fn standard() -> Self {
        Self::new(F2RatFun::s(), F2RatFun::t()).expect("(s, t) is a valid pair")
    }

    pub fn a(&self) -> &F2RatFun {
        &self.a
    }

    pub fn b(&self) -> &F2RatFun {
        &self.b
    }

    /// h² as an element of F; plays the role of the norm.
    pub fn norm(&self, x: &Q) -> F2RatFun {
        let [c0, c1, c2, c3] = x.coords().clone();
        let ab = self.a.clone() * self.b.clone();
        c0.clone() * c0 + self.a.clone() * c1.clone() * c1 + self.b.clone() * c2.clone() * c2
            + ab * c3.clone() * c3
    }

    /// Conjugation is the identity and the trace vanishes.
    pub fn unary_invariants(&self, x: &Q) -> (Q, F2RatFun, F2RatFun) {
        (x.clone(), F2RatFun::zero(), self.norm(x))
    }

    /// (x², 0): x² = s·1 + 0·x.
    pub fn kinematic_witness(&self, x: &Q) -> (F2RatFun, F2RatFun) {
        (self.norm(x), F2RatFun::zero())
    }
}

impl FourAlgebra for QuarticExtension {
    type Scalar = F2RatFun;

    fn kind(&self) -> AlgebraKind {
        AlgebraKind::CaseB
    }

    fn basis_names(&self) -> [&'static str; 4] {
        ["1", "u", "v", "w"]
    }

    fn mul(&self, x: &Q, y: &Q) -> Q {
        let [x0, x1, x2, x3] = x.coords().clone();
        let [y0, y1, y2, y3] = y.coords().clone();
        let (a, b) = (self.a.clone(), self.b.clone());
        let ab = a.clone() * b.clone();
        let m = |p: &F2RatFun, q: &F2RatFun| p.clone() * q.clone();
        Quaternion::new([
            m(&x0, &y0) + a.clone() * m(&x1, &y1) + b.clone() * m(&x2, &y2) + ab * m(&x3, &y3),
            m(&x0, &y1) + m(&x1, &y0) + b * (m(&x2, &y3) + m(&x3, &y2)),
            m(&x0, &y2) + m(&x2, &y0) + a * (m(&x1, &y3) + m(&x3, &y1)),
            m(&x0, &y3) + m(&x3, &y0) + m(&x1, &y2) + m(&x2, &y1),
        ])
    }

    fn unit(&self) -> Q {
        Quaternion::basis(0)
    }

    /// x itself, since x² ∈ F.
    fn adjugate(&self, x: &Q) -> Result<Q> {
        if x.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        Ok(x.clone())
    }

    fn inverse(&self, x: &Q) -> Result<Q> {
        let n = self.norm(x);
        if n.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        Ok(x.scale(&n.inv()?))
    }
}
