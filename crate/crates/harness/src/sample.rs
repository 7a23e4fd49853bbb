//! Seeded sampling of scalars, elements, points and lines.
//!
//! Every suite draws from its own PCG64 stream (XSL-RR 128/64, multiplier
//! 0x2360ed051fc65da44385df649fccf645). The stream is selected by the FNV-1a
//! hash of the suite name and the state by the seed, so results do not
//! depend on scheduling.

use std::hash::Hasher;

use cliffpar_core::{F2RatFun, Field, FourAlgebra, Quaternion, Rational, Subspace};
use cliffpar_core::scalar::BivarPoly;
use fnv::FnvHasher;
use rand::{Rng, RngExt};
use rand_pcg::Pcg64;

pub type SuiteRng = Pcg64;

pub fn suite_rng(seed: u64, suite: &str) -> SuiteRng {
    let mut hasher = FnvHasher::default();
    hasher.write(suite.as_bytes());
    let tag = hasher.finish();
    Pcg64::new(((seed as u128) << 64) | tag as u128, tag as u128)
}

/// Scalars drawn with bounded height.
pub trait SampleScalar: Field {
    fn sample<R: Rng + ?Sized>(rng: &mut R, height_bound: u64) -> Self;
}

/// p/q with |p| ≤ H and 1 ≤ q ≤ H.
impl SampleScalar for Rational {
    fn sample<R: Rng + ?Sized>(rng: &mut R, height_bound: u64) -> Self {
        let h = height_bound.clamp(1, i64::MAX as u64) as i64;
        let p = rng.random_range(-h..=h);
        let q = rng.random_range(1..=h);
        Rational::new(p, q).expect("positive denominator")
    }
}

/// A sum of a random subset of 1, s, t, st; the height bound is not used.
impl SampleScalar for F2RatFun {
    fn sample<R: Rng + ?Sized>(rng: &mut R, _height_bound: u64) -> Self {
        let mask: u8 = rng.random_range(0..16);
        F2RatFun::poly(BivarPoly::from_monomials(
            (0..4usize).filter(|b| mask >> b & 1 == 1).map(|b| (b / 2, b % 2)),
        ))
    }
}

pub fn scalar<F: SampleScalar, R: Rng + ?Sized>(rng: &mut R, h: u64) -> F {
    F::sample(rng, h)
}

pub fn nonzero_scalar<F: SampleScalar, R: Rng + ?Sized>(rng: &mut R, h: u64) -> F {
    loop {
        let x = F::sample(rng, h);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn element<F: SampleScalar, R: Rng + ?Sized>(rng: &mut R, h: u64) -> Quaternion<F> {
    Quaternion::new(std::array::from_fn(|_| F::sample(rng, h)))
}

pub fn nonzero<F: SampleScalar, R: Rng + ?Sized>(rng: &mut R, h: u64) -> Quaternion<F> {
    loop {
        let x = element(rng, h);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A nonzero rational quaternion; the zero vector is rejected and redrawn.
pub fn sample_quaternion<R: Rng + ?Sized>(rng: &mut R, height_bound: u64) -> Quaternion<Rational> {
    nonzero(rng, height_bound)
}

pub fn nonscalar<A, R>(alg: &A, rng: &mut R, h: u64) -> Quaternion<A::Scalar>
where
    A: FourAlgebra,
    A::Scalar: SampleScalar,
    R: Rng + ?Sized,
{
    loop {
        let x = element(rng, h);
        if !alg.in_base_field(&x) {
            return x;
        }
    }
}

pub fn point<F: SampleScalar, R: Rng + ?Sized>(rng: &mut R, h: u64) -> Subspace<F> {
    Subspace::point(&nonzero(rng, h))
}

pub fn line<F: SampleScalar, R: Rng + ?Sized>(rng: &mut R, h: u64) -> Subspace<F> {
    loop {
        let (x, y) = (nonzero(rng, h), nonzero(rng, h));
        let l = Subspace::span([&x, &y]);
        if l.is_line() {
            return l;
        }
    }
}

pub fn star_line<A, R>(alg: &A, rng: &mut R, h: u64) -> Subspace<A::Scalar>
where
    A: FourAlgebra,
    A::Scalar: SampleScalar,
    R: Rng + ?Sized,
{
    let x = nonscalar(alg, rng, h);
    Subspace::span([&alg.unit(), &x])
}

/// Three points spanning a plane.
pub fn triangle<F: SampleScalar, R: Rng + ?Sized>(rng: &mut R, h: u64) -> [Subspace<F>; 3] {
    loop {
        let t: [Subspace<F>; 3] = std::array::from_fn(|_| point(rng, h));
        if t[0].join(&t[1]).join(&t[2]).dim() == 3 {
            return t;
        }
    }
}

/// A random nonzero vector of the subspace S.
pub fn vector_in<F: SampleScalar, R: Rng + ?Sized>(rng: &mut R, h: u64, s: &Subspace<F>) -> Quaternion<F> {
    let basis = s.basis();
    loop {
        let v = basis.iter().fold(Quaternion::zero(), |acc, b| acc + b.scale(&F::sample(rng, h)));
        if !v.is_zero() {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_streams() {
        let a: Vec<Quaternion<Rational>> = (0..5).map({
            let mut rng = suite_rng(42, "ds");
            move |_| sample_quaternion(&mut rng, 5)
        }).collect();
        let b: Vec<Quaternion<Rational>> = (0..5).map({
            let mut rng = suite_rng(42, "ds");
            move |_| sample_quaternion(&mut rng, 5)
        }).collect();
        assert_eq!(a, b);
        let mut other = suite_rng(42, "kernel");
        assert_ne!(a[0], sample_quaternion(&mut other, 5));
    }

    #[test]
    fn height_one_coordinates() {
        let mut rng = suite_rng(7, "height");
        let allowed = [Rational::from_int(-1), Rational::zero(), Rational::one()];
        for _ in 0..200 {
            let x = sample_quaternion(&mut rng, 1);
            assert!(x.coords().iter().all(|c| allowed.contains(c)));
        }
    }

    #[test]
    fn draws_are_nonzero() {
        let mut rng = suite_rng(42, "nonzero");
        assert!((0..1000).all(|_| !sample_quaternion(&mut rng, 2).is_zero()));
    }

    #[test]
    fn case_b_scalars_are_small_polynomials() {
        let mut rng = suite_rng(1, "b");
        for _ in 0..50 {
            let x: F2RatFun = scalar(&mut rng, 3);
            assert!(x.denom().is_one());
            assert!(x.numer().monomials().iter().all(|&(i, j)| i <= 1 && j <= 1));
        }
    }
}
