//! Orbits of points and of star lines under the inner automorphism group.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::hilbert::splits_quadratic;
use crate::algebra::{FourAlgebra, QuarticExtension, Quaternion, QuaternionAlgebra};
use crate::error::{Error, Result};
use crate::geometry::{pure_plane, Subspace};
use crate::linalg::LinearMap;
use crate::scalar::integer::{is_squarefree, squarefree_part, DEFAULT_FACTOR_BITS};
use crate::scalar::{Field, Rational};

type Q = Quaternion<Rational>;
type S = Subspace<Rational>;

/// Squarefree part of the discriminant of a star line; labels its orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitKey(BigInt);

impl OrbitKey {
    pub fn new(d: BigInt) -> Result<Self> {
        if d.is_one() || d.is_zero() {
            return Err(Error::domain(format!("{d} is not an orbit key")));
        }
        if !is_squarefree(&d, DEFAULT_FACTOR_BITS)? {
            return Err(Error::domain(format!("key {d} not squarefree")));
        }
        Ok(OrbitKey(d))
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

impl fmt::Display for OrbitKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::str::FromStr for OrbitKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let d: BigInt = s
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("'{s}' is not an integer")))?;
        OrbitKey::new(d)
    }
}

/// The quadratic form ω_q(x) = tr(q)² N(x) − N(q) tr(x)².
#[derive(Clone, Debug)]
pub struct OmegaForm<'a> {
    alg: &'a QuaternionAlgebra,
    t2: Rational,
    n: Rational,
}

impl<'a> OmegaForm<'a> {
    pub fn new(alg: &'a QuaternionAlgebra, q: &Q) -> Result<Self> {
        let t = alg.trace(q);
        if t.is_zero() {
            return Err(Error::domain("tr(q) = 0: q lies in the plane (F1)^⊥"));
        }
        Ok(OmegaForm { alg, t2: t.clone() * t, n: alg.norm(q) })
    }

    pub fn value(&self, x: &Q) -> Rational {
        let tx = self.alg.trace(x);
        self.t2.clone() * self.alg.norm(x) - self.n.clone() * tx.clone() * tx
    }

    /// Symmetric bilinear form with polar(x, x) = value(x).
    pub fn polar(&self, x: &Q, y: &Q) -> Rational {
        let half = Rational::new(1, 2).expect("nonzero denominator");
        self.t2.clone() * self.alg.bilinear(x, y) * half - self.n.clone() * self.alg.trace(x) * self.alg.trace(y)
    }

    pub fn gram(&self) -> LinearMap<Rational> {
        LinearMap::from_images(std::array::from_fn(|j| {
            Quaternion::new(std::array::from_fn(|i| self.polar(&Quaternion::basis(i), &Quaternion::basis(j))))
        }))
    }
}

pub fn omega(alg: &QuaternionAlgebra, q: &Q, x: &Q) -> Result<Rational> {
    Ok(OmegaForm::new(alg, q)?.value(x))
}

/// Whether the point p lies in the orbit of Fq.
pub fn point_in_orbit(alg: &QuaternionAlgebra, q: &Q, p: &S) -> Result<bool> {
    if !p.is_point() {
        return Err(Error::domain("expected a point"));
    }
    let x = p.representative().expect("a point has a representative");
    Ok(omega(alg, q, &x)?.is_zero())
}

/// Determinant of the Gram matrix of the polar form of ω_q.
pub fn polar_gram_determinant(alg: &QuaternionAlgebra, q: &Q) -> Result<Rational> {
    Ok(OmegaForm::new(alg, q)?.gram().determinant())
}

/// How a line meets the quadric ω_q = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadricMeet {
    Contained,
    Points(usize),
}

/// Rational points of the quadric ω_q = 0 on the line M.
pub fn quadric_meets_line(alg: &QuaternionAlgebra, q: &Q, m: &S) -> Result<QuadricMeet> {
    if !m.is_line() {
        return Err(Error::domain("expected a line"));
    }
    let form = OmegaForm::new(alg, q)?;
    let basis = m.basis();
    let (u, v) = (&basis[0], &basis[1]);
    let (a, b, c) = (form.value(u), form.polar(u, v), form.value(v));
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Ok(QuadricMeet::Contained);
    }
    let disc = b.clone() * b - a * c;
    Ok(QuadricMeet::Points(if disc.is_zero() {
        1
    } else if disc.is_square() {
        2
    } else {
        0
    }))
}

/// tr(q)² − 4N(q).
pub fn discriminant(alg: &QuaternionAlgebra, q: &Q) -> Rational {
    let t = alg.trace(q);
    t.clone() * t - Rational::from_int(4) * alg.norm(q)
}

/// An element of the star line L outside F·1.
fn star_generator(alg: &QuaternionAlgebra, l: &S) -> Result<Q> {
    if !l.is_star_line(alg) {
        return Err(Error::domain("expected a line through F·1"));
    }
    Ok(l.basis().pop().expect("a line has two basis vectors"))
}

pub fn line_orbit_key(alg: &QuaternionAlgebra, l: &S) -> Result<OrbitKey> {
    let q = star_generator(alg, l)?;
    OrbitKey::new(squarefree_part(&discriminant(alg, &q))?)
}

/// Whether the discriminant of L lies in the square class of `key`.
pub fn line_has_key(alg: &QuaternionAlgebra, l: &S, key: &OrbitKey) -> Result<bool> {
    let q = star_generator(alg, l)?;
    Ok((discriminant(alg, &q) * Rational::from_int(key.value().clone())).is_square())
}

/// Conjugate iff the discriminants differ by a square factor.
pub fn lines_conjugate(alg: &QuaternionAlgebra, l1: &S, l2: &S) -> Result<bool> {
    let d1 = discriminant(alg, &star_generator(alg, l1)?);
    let d2 = discriminant(alg, &star_generator(alg, l2)?);
    Ok((d1 * d2).is_square())
}

/// Whether some star line has this key, i.e. Q(√d) embeds in H.
pub fn key_is_realized(alg: &QuaternionAlgebra, key: &OrbitKey) -> Result<bool> {
    let (a, b) = alg.integral_constants();
    splits_quadratic(a, b, key.value())
}

/// Rationals 0, ±1, ±1/2, ±2, ±1/3, ±2/3, ±3/2, ±3, … in order of height.
pub fn small_rationals() -> impl Iterator<Item = Rational> {
    std::iter::once(Rational::zero()).chain((1i64..).flat_map(|h| {
        let lower = (1..h).filter(move |p| num_integer::gcd(*p, h) == 1).map(move |p| (p, h));
        let upper = (1..h).rev().filter(move |d| num_integer::gcd(h, *d) == 1).map(move |d| (h, d));
        lower
            .chain(upper)
            .chain(std::iter::once((h, 1)).filter(move |_| h == 1))
            .flat_map(|(p, d)| {
                let x = Rational::new(p, d).expect("nonzero denominator");
                [x.clone(), -x]
            })
    }))
}

/// Parameters tried per requested line before giving up.
const PARAMETERS_PER_LINE: usize = 64;

/// k distinct star lines in the plane E conjugate to L, from a rational
/// parameterisation of the conic O_q ∩ E through the point Fq̄.
pub fn orbit_lines_in_plane(alg: &QuaternionAlgebra, l: &S, e: &S, k: usize) -> Result<Vec<S>> {
    star_generator(alg, l)?;
    if !e.is_plane() || !l.is_subspace_of(e) {
        return Err(Error::domain("E must be a plane containing L"));
    }
    let one = alg.unit();
    let r = l.intersect(&pure_plane(alg)).representative().expect("a star line meets (F1)^⊥");
    let q = one.clone() + r;
    let p = alg.conjugate(&q);
    let form = OmegaForm::new(alg, &q)?;
    let d0 = q.clone() - p.clone();
    let w0 = form.value(&d0);
    let mut d1 = e.basis().into_iter().find(|v| !l.contains(v)).expect("E is larger than L");
    d1 = d1.clone() - d0.scale(&(form.polar(&d0, &d1).div(&w0)?));
    let w1 = form.value(&d1);
    if !w1.is_zero() {
        if let Some(s) = w0.div(&w1)?.sqrt() {
            d1 = d1.scale(&s);
        }
    }

    let mut lines: Vec<S> = Vec::with_capacity(k);
    for m in small_rationals().take(PARAMETERS_PER_LINE * k + 16) {
        if lines.len() == k {
            break;
        }
        let d = d0.clone() + d1.scale(&m);
        let two_b = form.polar(&p, &d) * Rational::from_int(2);
        let x = p.scale(&form.value(&d)) - d.scale(&two_b);
        if x.is_zero() {
            continue;
        }
        let line = Subspace::span([&one, &x]);
        if line.is_line() && !lines.contains(&line) {
            lines.push(line);
        }
    }
    if lines.len() < k {
        return Err(Error::Resource(format!(
            "found {} of {k} orbit lines within the parameter bound",
            lines.len()
        )));
    }
    Ok(lines)
}

/// Largest coordinate tried by [`find_star_line_with_key`].
pub const KEY_SEARCH_BOUND: i64 = 24;

/// A star line span(1, r) with r pure of small integer coordinates and the given key.
pub fn find_star_line_with_key(alg: &QuaternionAlgebra, key: &OrbitKey) -> Result<S> {
    if !key_is_realized(alg, key)? {
        return Err(Error::domain(format!("no star line has key {key}")));
    }
    let one = alg.unit();
    for h in 1..=KEY_SEARCH_BOUND {
        for r in shell(h) {
            let l = Subspace::span([&one, &r]);
            if line_has_key(alg, &l, key)? {
                return Ok(l);
            }
        }
    }
    Err(Error::Resource(format!("no line with key {key} among small pure vectors")))
}

/// Pure integer vectors with maximal coordinate exactly h.
pub(crate) fn shell(h: i64) -> impl Iterator<Item = Q> {
    let range = move || -h..=h;
    range().flat_map(move |x| {
        range().flat_map(move |y| {
            range()
                .filter(move |z| x.abs().max(y.abs()).max(z.abs()) == h)
                .map(move |z| Quaternion::from_ints([0, x, y, z]))
        })
    })
}

/// Inner automorphisms act on star lines in case A only.
pub trait InnerOrbits: FourAlgebra {
    fn line_key(&self, _l: &Subspace<Self::Scalar>) -> Result<OrbitKey> {
        Err(Error::Unsupported("inner automorphisms are trivial in case B"))
    }

    fn line_has_key(&self, _l: &Subspace<Self::Scalar>, _key: &OrbitKey) -> Result<bool> {
        Err(Error::Unsupported("inner automorphisms are trivial in case B"))
    }

    fn key_is_realized(&self, _key: &OrbitKey) -> Result<bool> {
        Err(Error::Unsupported("inner automorphisms are trivial in case B"))
    }
}

impl InnerOrbits for QuaternionAlgebra {
    fn line_key(&self, l: &S) -> Result<OrbitKey> {
        line_orbit_key(self, l)
    }

    fn line_has_key(&self, l: &S, key: &OrbitKey) -> Result<bool> {
        line_has_key(self, l, key)
    }

    fn key_is_realized(&self, key: &OrbitKey) -> Result<bool> {
        key_is_realized(self, key)
    }
}

impl InnerOrbits for QuarticExtension {}
