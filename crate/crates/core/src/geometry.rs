//! Subspaces of the coordinate space H_F: points, lines and planes of P(H_F).

use std::fmt;

use crate::algebra::{FourAlgebra, Quaternion, QuaternionAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, LinearMap};
use crate::scalar::{Field, Rational};

/// A subspace in reduced row echelon form; equal subspaces have equal
/// representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F: Field> {
    rows: Vec<[F; 4]>,
}

impl<F: Field> Subspace<F> {
    fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let (red, _) = linalg::rref(rows, 4);
        Subspace {
            rows: red.into_iter().map(|r| r.try_into().expect("four columns")).collect(),
        }
    }

    pub fn span<'a>(vectors: impl IntoIterator<Item = &'a Quaternion<F>>) -> Self {
        Self::from_rows(vectors.into_iter().map(Quaternion::to_vec).collect())
    }

    pub fn zero() -> Self {
        Subspace { rows: Vec::new() }
    }

    pub fn whole() -> Self {
        Self::span(&(0..4).map(Quaternion::basis).collect::<Vec<_>>())
    }

    pub fn point(v: &Quaternion<F>) -> Self {
        Self::span([v])
    }

    /// Vector dimension (1 = point, 2 = line, 3 = plane).
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_point(&self) -> bool {
        self.dim() == 1
    }

    pub fn is_line(&self) -> bool {
        self.dim() == 2
    }

    pub fn is_plane(&self) -> bool {
        self.dim() == 3
    }

    pub fn basis(&self) -> Vec<Quaternion<F>> {
        self.rows.iter().map(|r| Quaternion::new(r.clone())).collect()
    }

    /// First canonical basis vector; the representative of a point.
    pub fn representative(&self) -> Option<Quaternion<F>> {
        self.rows.first().map(|r| Quaternion::new(r.clone()))
    }

    pub fn contains(&self, v: &Quaternion<F>) -> bool {
        let mut rows: Vec<Vec<F>> = self.rows.iter().map(|r| r.to_vec()).collect();
        rows.push(v.to_vec());
        linalg::rank(rows, 4) == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.dim() <= other.dim() && self.basis().iter().all(|v| other.contains(v))
    }

    /// Symmetrised inclusion.
    pub fn incident(&self, other: &Self) -> bool {
        self.is_subspace_of(other) || other.is_subspace_of(self)
    }

    pub fn join(&self, other: &Self) -> Self {
        Self::from_rows(self.rows.iter().chain(&other.rows).map(|r| r.to_vec()).collect())
    }

    /// Annihilator in the dual w.r.t. the coordinate dot product.
    fn annihilator(&self) -> Vec<Vec<F>> {
        linalg::nullspace(self.rows.iter().map(|r| r.to_vec()).collect(), 4)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut eqs = self.annihilator();
        eqs.extend(other.annihilator());
        Self::from_rows(linalg::nullspace(eqs, 4))
    }

    /// Image under a linear map.
    pub fn image(&self, map: &LinearMap<F>) -> Self {
        Self::from_rows(self.basis().iter().map(|v| map.apply(v).to_vec()).collect())
    }

    /// c·S
    pub fn left_mul<A: FourAlgebra<Scalar = F>>(&self, alg: &A, c: &Quaternion<F>) -> Self {
        Self::from_rows(self.basis().iter().map(|v| alg.mul(c, v).to_vec()).collect())
    }

    /// S·c
    pub fn right_mul<A: FourAlgebra<Scalar = F>>(&self, alg: &A, c: &Quaternion<F>) -> Self {
        Self::from_rows(self.basis().iter().map(|v| alg.mul(v, c).to_vec()).collect())
    }

    /// Lines through the unit point: the star of the algebra.
    pub fn is_star_line<A: FourAlgebra<Scalar = F>>(&self, alg: &A) -> bool {
        self.is_line() && self.contains(&alg.unit())
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis().iter().map(|q| format!("{q:?}")).collect();
        write!(f, "<{}>", rows.join(", "))
    }
}

/// Whether `s` is a line through the point F·1.
pub fn star_membership<A: FourAlgebra>(alg: &A, s: &Subspace<A::Scalar>) -> bool {
    s.is_star_line(alg)
}

/// ⟨x, y⟩ = tr(x ȳ).
pub fn bilinear(alg: &QuaternionAlgebra, x: &Quaternion<Rational>, y: &Quaternion<Rational>) -> Rational {
    alg.bilinear(x, y)
}

/// The polar subspace w.r.t. ⟨·,·⟩.
pub fn perp(alg: &QuaternionAlgebra, s: &Subspace<Rational>) -> Subspace<Rational> {
    let g = alg.gram();
    // ⟨x, y⟩ = xᵀ G y, so each basis row x contributes the equation (xᵀ G) y = 0
    let eqs: Vec<Vec<Rational>> = s
        .basis()
        .iter()
        .map(|x| {
            (0..4)
                .map(|j| {
                    (0..4).fold(Rational::zero(), |acc, i| {
                        acc + x.coords()[i].clone() * g.entry(i, j).clone()
                    })
                })
                .collect()
        })
        .collect();
    Subspace::from_rows(linalg::nullspace(eqs, 4))
}

/// The plane (F1)^⊥ of trace-zero elements.
pub fn pure_plane(alg: &QuaternionAlgebra) -> Subspace<Rational> {
    perp(alg, &Subspace::point(&alg.unit()))
}

/// The line F1 ⊕ Fq; errors when q is a scalar.
pub fn star_line_through<A: FourAlgebra>(alg: &A, q: &Quaternion<A::Scalar>) -> Result<Subspace<A::Scalar>> {
    let l = Subspace::span([&alg.unit(), q]);
    if !l.is_line() {
        return Err(Error::domain("element lies in F·1"));
    }
    Ok(l)
}
