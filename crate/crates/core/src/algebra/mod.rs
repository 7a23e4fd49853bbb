//! Four-dimensional kinematic algebras over an exact field.
//!
//! [`QuaternionAlgebra`] is a quaternion skew field over the rationals,
//! [`QuarticExtension`] a purely inseparable quartic field extension of
//! GF(2)(s,t). [`TableAlgebra`] and [`AlteredAlgebra`] carry other products
//! on the same coordinate space (pullbacks and the shifted-unit product).

mod automorphism;
pub mod hilbert;
mod quartic;
mod quaternion;
mod table;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::{self, LinearMap};
use crate::scalar::Field;

pub use automorphism::{skolem_noether_decompose, SkolemNoether};
pub use hilbert::{hilbert_symbol, is_division, Place};
pub use quartic::{validate_case_b, QuarticExtension};
pub use quaternion::QuaternionAlgebra;
pub use table::{AlteredAlgebra, TableAlgebra};

/// Coordinates of an algebra element w.r.t. the fixed basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion<F: Field> {
    c: [F; 4],
}

impl<F: Field> Quaternion<F> {
    pub fn new(c: [F; 4]) -> Self {
        Quaternion { c }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Quaternion { c: c.map(F::from_i64) }
    }

    pub fn zero() -> Self {
        Quaternion { c: std::array::from_fn(|_| F::zero()) }
    }

    pub fn basis(n: usize) -> Self {
        let mut q = Self::zero();
        q.c[n] = F::one();
        q
    }

    pub fn scalar(x: F) -> Self {
        let mut q = Self::zero();
        q.c[0] = x;
        q
    }

    pub fn coords(&self) -> &[F; 4] {
        &self.c
    }

    pub fn into_coords(self) -> [F; 4] {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Field::is_zero)
    }

    /// Whether the element lies in the line of scalars F·1.
    pub fn is_scalar(&self) -> bool {
        self.c[1..].iter().all(Field::is_zero)
    }

    pub fn scale(&self, k: &F) -> Self {
        Quaternion { c: self.c.clone().map(|x| x * k.clone()) }
    }

    pub fn to_vec(&self) -> Vec<F> {
        self.c.to_vec()
    }
}

impl<F: Field> Add for Quaternion<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a0, a1, a2, a3] = self.c;
        let [b0, b1, b2, b3] = rhs.c;
        Quaternion { c: [a0 + b0, a1 + b1, a2 + b2, a3 + b3] }
    }
}

impl<F: Field> Sub for Quaternion<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Neg for Quaternion<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Quaternion { c: self.c.map(|x| -x) }
    }
}

impl<F: Field> fmt::Debug for Quaternion<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.c[0], self.c[1], self.c[2], self.c[3])
    }
}

/// Left or right: which translation, which parallelism, which class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SideTag {
    Left,
    Right,
}

impl SideTag {
    pub fn flip(self) -> Self {
        match self {
            SideTag::Left => SideTag::Right,
            SideTag::Right => SideTag::Left,
        }
    }
}

impl fmt::Display for SideTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SideTag::Left => "left",
            SideTag::Right => "right",
        })
    }
}

impl std::str::FromStr for SideTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(SideTag::Left),
            "right" => Ok(SideTag::Right),
            _ => Err(Error::domain(format!("expected left or right, got {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// Quaternion skew field with centre F.
    CaseA,
    /// Commutative purely inseparable quartic extension, characteristic two.
    CaseB,
    /// Any other product on the coordinate space.
    Table,
}

/// An associative product with unit on the 4-dimensional coordinate space.
pub trait FourAlgebra: Sync {
    type Scalar: Field;

    fn kind(&self) -> AlgebraKind;

    /// Names of the basis vectors in the text syntax; the first is `"1"`.
    fn basis_names(&self) -> [&'static str; 4];

    fn mul(
        &self,
        x: &Quaternion<Self::Scalar>,
        y: &Quaternion<Self::Scalar>,
    ) -> Quaternion<Self::Scalar>;

    fn unit(&self) -> Quaternion<Self::Scalar>;

    /// Two-sided inverse, found by solving `x z = 1`.
    fn inverse(&self, x: &Quaternion<Self::Scalar>) -> Result<Quaternion<Self::Scalar>> {
        if x.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        let l = self.left_map(x);
        let rows: Vec<Vec<Self::Scalar>> = l.rows().iter().map(|r| r.to_vec()).collect();
        let z = linalg::solve(&rows, self.unit().coords())
            .ok_or_else(|| Error::domain("element is a zero divisor"))?;
        let z = Quaternion::new(z.try_into().expect("four coordinates"));
        if self.mul(&z, x) != self.unit() {
            return Err(Error::domain("element has no two-sided inverse"));
        }
        Ok(z)
    }

    /// Some y with x y = y x ∈ F*; the inverse up to a scalar factor.
    fn adjugate(&self, x: &Quaternion<Self::Scalar>) -> Result<Quaternion<Self::Scalar>> {
        self.inverse(x)
    }

    /// Matrix of the left translation x ↦ h x.
    fn left_map(&self, h: &Quaternion<Self::Scalar>) -> LinearMap<Self::Scalar> {
        LinearMap::from_images(std::array::from_fn(|j| self.mul(h, &Quaternion::basis(j))))
    }

    /// Matrix of the right translation x ↦ x h.
    fn right_map(&self, h: &Quaternion<Self::Scalar>) -> LinearMap<Self::Scalar> {
        LinearMap::from_images(std::array::from_fn(|j| self.mul(&Quaternion::basis(j), h)))
    }

    fn translation_map(&self, h: &Quaternion<Self::Scalar>, side: SideTag) -> LinearMap<Self::Scalar> {
        match side {
            SideTag::Left => self.left_map(h),
            SideTag::Right => self.right_map(h),
        }
    }

    /// Matrix of the inner automorphism x ↦ h⁻¹ x h.
    fn inner_map(&self, h: &Quaternion<Self::Scalar>) -> Result<LinearMap<Self::Scalar>> {
        let hinv = self.inverse(h)?;
        Ok(LinearMap::from_images(std::array::from_fn(|j| {
            self.mul(&self.mul(&hinv, &Quaternion::basis(j)), h)
        })))
    }

    /// x ·ᵉ y = x e⁻¹ y.
    fn altered_product(
        &self,
        e: &Quaternion<Self::Scalar>,
        x: &Quaternion<Self::Scalar>,
        y: &Quaternion<Self::Scalar>,
    ) -> Result<Quaternion<Self::Scalar>> {
        let einv = self.inverse(e)?;
        Ok(self.mul(&self.mul(x, &einv), y))
    }

    /// Whether `x` is a multiple of the unit.
    fn in_base_field(&self, x: &Quaternion<Self::Scalar>) -> bool {
        linalg::rank(vec![x.to_vec(), self.unit().to_vec()], 4) <= 1
    }
}

impl<A: FourAlgebra + ?Sized> FourAlgebra for &A {
    type Scalar = A::Scalar;

    fn kind(&self) -> AlgebraKind {
        (**self).kind()
    }

    fn basis_names(&self) -> [&'static str; 4] {
        (**self).basis_names()
    }

    fn mul(&self, x: &Quaternion<A::Scalar>, y: &Quaternion<A::Scalar>) -> Quaternion<A::Scalar> {
        (**self).mul(x, y)
    }

    fn unit(&self) -> Quaternion<A::Scalar> {
        (**self).unit()
    }

    fn inverse(&self, x: &Quaternion<A::Scalar>) -> Result<Quaternion<A::Scalar>> {
        (**self).inverse(x)
    }

    fn adjugate(&self, x: &Quaternion<A::Scalar>) -> Result<Quaternion<A::Scalar>> {
        (**self).adjugate(x)
    }
}
