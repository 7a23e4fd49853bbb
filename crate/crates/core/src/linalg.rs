//! Row reduction over an exact field, and 4x4 linear maps.

use std::fmt;

use crate::algebra::Quaternion;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Reduced row echelon form of `rows`, dropping zero rows.
/// Returns the reduced rows and their pivot columns.
pub fn rref<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for c in 0..ncols {
                let sub = factor.clone() * rows[r][c].clone();
                rows[i][c] = rows[i][c].clone() - sub;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank<F: Field>(rows: Vec<Vec<F>>, ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : A x = 0}`, one vector per free column in increasing order;
/// the vector for free column `f` has a 1 at `f` and 0 at the other free columns.
pub fn nullspace<F: Field>(rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let (red, pivots) = rref(rows, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![F::zero(); ncols];
            v[free] = F::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Solve `A x = b` for square invertible `A`; `None` when singular.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let n = b.len();
    let aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| row.iter().cloned().chain([bi.clone()]).collect())
        .collect();
    let (red, pivots) = rref(aug, n + 1);
    if pivots.len() != n || pivots.contains(&n) {
        return None;
    }
    Some(red.into_iter().map(|row| row[n].clone()).collect())
}

/// A linear endomorphism of the 4-dimensional coordinate space.
/// Column `j` is the image of the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap<F: Field> {
    m: [[F; 4]; 4],
}

impl<F: Field> LinearMap<F> {
    pub fn from_rows(m: [[F; 4]; 4]) -> Self {
        LinearMap { m }
    }

    /// The map sending basis vector `j` to `images[j]`.
    pub fn from_images(images: [Quaternion<F>; 4]) -> Self {
        let m = std::array::from_fn(|i| std::array::from_fn(|j| images[j].coords()[i].clone()));
        LinearMap { m }
    }

    pub fn identity() -> Self {
        Self::scalar(F::one())
    }

    pub fn scalar(c: F) -> Self {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { c.clone() } else { F::zero() })
        });
        LinearMap { m }
    }

    pub fn entry(&self, i: usize, j: usize) -> &F {
        &self.m[i][j]
    }

    pub fn rows(&self) -> &[[F; 4]; 4] {
        &self.m
    }

    pub fn apply(&self, x: &Quaternion<F>) -> Quaternion<F> {
        let c = x.coords();
        Quaternion::new(std::array::from_fn(|i| {
            (0..4).fold(F::zero(), |acc, j| acc + self.m[i][j].clone() * c[j].clone())
        }))
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..4).fold(F::zero(), |acc, k| {
                    acc + self.m[i][k].clone() * other.m[k][j].clone()
                })
            })
        });
        LinearMap { m }
    }

    pub fn rank(&self) -> usize {
        rank(self.m.iter().map(|r| r.to_vec()).collect(), 4)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == 4
    }

    pub fn inverse(&self) -> Result<Self> {
        let aug: Vec<Vec<F>> = (0..4)
            .map(|i| {
                let mut row = self.m[i].to_vec();
                row.extend((0..4).map(|j| if i == j { F::one() } else { F::zero() }));
                row
            })
            .collect();
        let (red, pivots) = rref(aug, 8);
        if pivots.len() < 4 || pivots[3] != 3 {
            return Err(Error::Rank("linear map is singular".into()));
        }
        let m = std::array::from_fn(|i| std::array::from_fn(|j| red[i][4 + j].clone()));
        Ok(LinearMap { m })
    }

    pub fn determinant(&self) -> F {
        // Laplace along the first row; 4x4 only
        fn det3<F: Field>(a: [[F; 3]; 3]) -> F {
            let t = |i: usize, j: usize| a[i][j].clone();
            t(0, 0) * (t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1))
                - t(0, 1) * (t(1, 0) * t(2, 2) - t(1, 2) * t(2, 0))
                + t(0, 2) * (t(1, 0) * t(2, 1) - t(1, 1) * t(2, 0))
        }
        (0..4).fold(F::zero(), |acc, j| {
            let minor = std::array::from_fn(|i| {
                let cols: Vec<usize> = (0..4).filter(|&c| c != j).collect();
                std::array::from_fn(|k| self.m[i + 1][cols[k]].clone())
            });
            let term = self.m[0][j].clone() * det3(minor);
            if j % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        })
    }

    pub fn is_scalar(&self) -> bool {
        let c = &self.m[0][0];
        (0..4).all(|i| (0..4).all(|j| if i == j { self.m[i][j] == *c } else { self.m[i][j].is_zero() }))
    }
}

impl<F: Field> fmt::Debug for LinearMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|row| row.iter().map(|&x| r(x)).collect()).collect()
    }

    #[test]
    fn rref_canonical() {
        let (red, piv) = rref(rows(&[&[0, 2, 4, 0], &[1, 1, 1, 1], &[1, 2, 3, 1]]), 4);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(red, rows(&[&[1, 0, -1, 1], &[0, 1, 2, 0]]));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = rows(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let ns = nullspace(a.clone(), 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let dot = row.iter().zip(v).fold(r(0), |acc, (x, y)| acc + x.clone() * y.clone());
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let m = LinearMap::from_rows([
            [r(2), r(0), r(0), r(1)],
            [r(0), r(1), r(3), r(0)],
            [r(1), r(0), r(1), r(0)],
            [r(0), r(0), r(0), r(5)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv), LinearMap::identity());
        // expand by the last row: 5 * det [[2,0,0],[0,1,3],[1,0,1]] = 5 * 2
        assert_eq!(m.determinant(), r(10));
        let singular = LinearMap::from_rows([
            [r(1), r(2), r(0), r(0)],
            [r(2), r(4), r(0), r(0)],
            [r(0), r(0), r(1), r(0)],
            [r(0), r(0), r(0), r(1)],
        ]);
        assert!(matches!(singular.inverse(), Err(Error::Rank(_))));
        assert!(singular.determinant().is_zero());
    }

    #[test]
    fn solve_square_system() {
        let a = rows(&[&[2, 1], &[1, 3]]);
        assert_eq!(solve(&a, &[r(3), r(5)]), Some(vec![Rational::new(4, 5).unwrap(), Rational::new(7, 5).unwrap()]));
        assert_eq!(solve(&rows(&[&[1, 1], &[2, 2]]), &[r(1), r(1)]), None);
    }
}
