use super::{AlgebraKind, FourAlgebra, Quaternion};
use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::scalar::Field;

/// A product on the coordinate space given by structure constants:
/// `products[i][j] = e_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableAlgebra<F: Field> {
    products: [[Quaternion<F>; 4]; 4],
    unit: Quaternion<F>,
    names: [&'static str; 4],
}

impl<F: Field> TableAlgebra<F> {
    pub fn new(products: [[Quaternion<F>; 4]; 4], unit: Quaternion<F>, names: [&'static str; 4]) -> Self {
        TableAlgebra { products, unit, names }
    }

    /// The multiplication table of `alg`.
    pub fn of<A: FourAlgebra<Scalar = F>>(alg: &A) -> Self {
        let products = std::array::from_fn(|i| {
            std::array::from_fn(|j| alg.mul(&Quaternion::basis(i), &Quaternion::basis(j)))
        });
        TableAlgebra { products, unit: alg.unit(), names: alg.basis_names() }
    }

    /// The product x ·' y = φ⁻¹(φ(x) φ(y)) transported along an invertible φ.
    pub fn pullback<A: FourAlgebra<Scalar = F>>(alg: &A, phi: &LinearMap<F>) -> Result<Self> {
        let inv = phi.inverse()?;
        let img: [Quaternion<F>; 4] = std::array::from_fn(|i| phi.apply(&Quaternion::basis(i)));
        let products = std::array::from_fn(|i| {
            std::array::from_fn(|j| inv.apply(&alg.mul(&img[i], &img[j])))
        });
        Ok(TableAlgebra { products, unit: inv.apply(&alg.unit()), names: alg.basis_names() })
    }

    pub fn product(&self, i: usize, j: usize) -> &Quaternion<F> {
        &self.products[i][j]
    }

    /// Overwrite one structure constant. The result need not be associative.
    pub fn set_product(&mut self, i: usize, j: usize, value: Quaternion<F>) {
        self.products[i][j] = value;
    }
}

impl<F: Field> FourAlgebra for TableAlgebra<F> {
    type Scalar = F;

    fn kind(&self) -> AlgebraKind {
        AlgebraKind::Table
    }

    fn basis_names(&self) -> [&'static str; 4] {
        self.names
    }

    fn mul(&self, x: &Quaternion<F>, y: &Quaternion<F>) -> Quaternion<F> {
        let mut acc = Quaternion::zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc = acc + self.products[i][j].scale(&(xi.clone() * yj.clone()));
            }
        }
        acc
    }

    fn unit(&self) -> Quaternion<F> {
        self.unit.clone()
    }
}

/// H with the product x ·ᵉ y = x e⁻¹ y; its unit is e.
#[derive(Clone, Debug)]
pub struct AlteredAlgebra<A: FourAlgebra> {
    base: A,
    e: Quaternion<A::Scalar>,
    e_inv: Quaternion<A::Scalar>,
}

impl<A: FourAlgebra> AlteredAlgebra<A> {
    pub fn new(base: A, e: Quaternion<A::Scalar>) -> Result<Self> {
        if e.is_zero() {
            return Err(Error::domain("the new unit must be nonzero"));
        }
        let e_inv = base.inverse(&e)?;
        Ok(AlteredAlgebra { base, e, e_inv })
    }

    pub fn base(&self) -> &A {
        &self.base
    }
}

impl<A: FourAlgebra> FourAlgebra for AlteredAlgebra<A> {
    type Scalar = A::Scalar;

    fn kind(&self) -> AlgebraKind {
        AlgebraKind::Table
    }

    fn basis_names(&self) -> [&'static str; 4] {
        self.base.basis_names()
    }

    fn mul(&self, x: &Quaternion<A::Scalar>, y: &Quaternion<A::Scalar>) -> Quaternion<A::Scalar> {
        self.base.mul(&self.base.mul(x, &self.e_inv), y)
    }

    fn unit(&self) -> Quaternion<A::Scalar> {
        self.e.clone()
    }

    /// e x⁻¹ e
    fn inverse(&self, x: &Quaternion<A::Scalar>) -> Result<Quaternion<A::Scalar>> {
        let xi = self.base.inverse(x)?;
        Ok(self.base.mul(&self.base.mul(&self.e, &xi), &self.e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuaternionAlgebra;
    use crate::scalar::Rational;

    type Q = Quaternion<Rational>;

    fn q(c: [i64; 4]) -> Q {
        Quaternion::from_ints(c)
    }

    #[test]
    fn table_reproduces_product() {
        let h = QuaternionAlgebra::hamilton();
        let t = TableAlgebra::of(&h);
        let (x, y) = (q([1, 2, -3, 4]), q([0, 5, 1, -2]));
        assert_eq!(t.mul(&x, &y), h.mul(&x, &y));
        assert_eq!(t.inverse(&x).unwrap(), h.inverse(&x).unwrap());
    }

    #[test]
    fn altered_product_worked() {
        let h = QuaternionAlgebra::hamilton();
        let one = q([1, 0, 0, 0]);
        let (i, j, k) = (q([0, 1, 0, 0]), q([0, 0, 1, 0]), q([0, 0, 0, 1]));
        assert_eq!(h.altered_product(&one, &j, &k).unwrap(), h.mul(&j, &k));
        for x in [&one, &i, &j, &k] {
            assert_eq!(&h.altered_product(&i, &i, x).unwrap(), x);
            assert_eq!(&h.altered_product(&i, x, &i).unwrap(), x);
        }
        assert_eq!(h.altered_product(&i, &j, &k).unwrap(), q([-1, 0, 0, 0]));
        assert!(h.altered_product(&Quaternion::zero(), &j, &k).is_err());
    }

    #[test]
    fn altered_algebra_unit_and_inverse() {
        let h = QuaternionAlgebra::hamilton();
        let e = q([1, 0, 1, 0]);
        let he = AlteredAlgebra::new(&h, e.clone()).unwrap();
        let x = q([2, -1, 0, 3]);
        assert_eq!(he.mul(&e, &x), x);
        assert_eq!(he.mul(&x, &he.inverse(&x).unwrap()), e);
    }

    #[test]
    fn pullback_along_automorphism_is_identical() {
        let h = QuaternionAlgebra::hamilton();
        let phi = h.inner_map(&q([1, 1, 2, 0])).unwrap();
        let t = TableAlgebra::pullback(&h, &phi).unwrap();
        assert_eq!(t, TableAlgebra::of(&h));
    }
}
