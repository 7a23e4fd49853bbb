use super::{FourAlgebra, Quaternion};
use crate::error::{Error, Result};
use crate::linalg::{self, LinearMap};

/// β = λ_g ∘ h̃ with h̃(x) = h⁻¹ x h.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkolemNoether<A: FourAlgebra> {
    pub g: Quaternion<A::Scalar>,
    pub h: Quaternion<A::Scalar>,
}

/// Split an F-linear automorphism of the right parallelism into a left
/// translation followed by an inner automorphism.
///
/// φ = λ_{β(1)}⁻¹ ∘ β must be multiplicative; `h` then spans the solutions
/// of h φ(y) = y h and is unique up to a scalar factor in case A.
pub fn skolem_noether_decompose<A: FourAlgebra>(
    alg: &A,
    beta: &LinearMap<A::Scalar>,
) -> Result<SkolemNoether<A>> {
    if !beta.is_invertible() {
        return Err(Error::Rank("β is not invertible".into()));
    }
    let g = beta.apply(&alg.unit());
    let phi = alg.left_map(&alg.inverse(&g)?).compose(beta);
    let images: [Quaternion<A::Scalar>; 4] = std::array::from_fn(|i| phi.apply(&Quaternion::basis(i)));
    for i in 0..4 {
        for j in 0..4 {
            let lhs = phi.apply(&alg.mul(&Quaternion::basis(i), &Quaternion::basis(j)));
            if lhs != alg.mul(&images[i], &images[j]) {
                return Err(Error::Membership(format!(
                    "λ_g⁻¹∘β is not multiplicative on basis pair ({i}, {j})"
                )));
            }
        }
    }
    let mut rows = Vec::with_capacity(16);
    for (i, img) in images.iter().enumerate() {
        let r = alg.right_map(img);
        let l = alg.left_map(&Quaternion::basis(i));
        for row in 0..4 {
            rows.push((0..4).map(|c| r.entry(row, c).clone() - l.entry(row, c).clone()).collect());
        }
    }
    let h = linalg::nullspace(rows, 4)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Membership("λ_g⁻¹∘β is not inner".into()))?;
    let h = Quaternion::new(h.try_into().expect("four coordinates"));
    Ok(SkolemNoether { g, h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{QuarticExtension, QuaternionAlgebra};
    use crate::scalar::{Field, Rational};

    type Q = Quaternion<Rational>;

    fn q(c: [i64; 4]) -> Q {
        Quaternion::from_ints(c)
    }

    fn same_point(x: &Q, y: &Q) -> bool {
        linalg::rank(vec![x.to_vec(), y.to_vec()], 4) == 1
    }

    #[test]
    fn left_translation_alone() {
        let h = QuaternionAlgebra::hamilton();
        let g = q([1, 2, 0, -1]);
        let sn = skolem_noether_decompose(&h, &h.left_map(&g)).unwrap();
        assert_eq!(sn.g, g);
        assert!(same_point(&sn.h, &q([1, 0, 0, 0])));
    }

    #[test]
    fn inner_automorphism_alone() {
        let h = QuaternionAlgebra::hamilton();
        let i = q([0, 1, 0, 0]);
        let sn = skolem_noether_decompose(&h, &h.inner_map(&i).unwrap()).unwrap();
        assert_eq!(sn.g, q([1, 0, 0, 0]));
        assert!(same_point(&sn.h, &i));
    }

    #[test]
    fn composite_recovered() {
        let h = QuaternionAlgebra::hamilton();
        let g = q([1, 1, 0, 0]);
        let i = q([0, 1, 0, 0]);
        let beta = h.left_map(&g).compose(&h.inner_map(&i).unwrap());
        let sn = skolem_noether_decompose(&h, &beta).unwrap();
        assert_eq!(sn.g, g);
        assert!(same_point(&sn.h, &i));
        let back = h.left_map(&sn.g).compose(&h.inner_map(&sn.h).unwrap());
        assert_eq!(back, beta);
    }

    #[test]
    fn errors() {
        let h = QuaternionAlgebra::hamilton();
        let mut rows = LinearMap::<Rational>::identity().rows().clone();
        rows[3][3] = Rational::zero();
        assert!(matches!(
            skolem_noether_decompose(&h, &LinearMap::from_rows(rows)),
            Err(Error::Rank(_))
        ));
        let mut rows = LinearMap::<Rational>::identity().rows().clone();
        rows[1][2] = Rational::one();
        assert!(matches!(
            skolem_noether_decompose(&h, &LinearMap::from_rows(rows)),
            Err(Error::Membership(_))
        ));
    }

    #[test]
    fn case_b_only_translations() {
        let h = QuarticExtension::standard();
        let g = Quaternion::basis(2);
        let sn = skolem_noether_decompose(&h, &h.left_map(&g)).unwrap();
        assert_eq!(sn.g, g);
        assert_eq!(sn.h, h.unit());
    }
}
