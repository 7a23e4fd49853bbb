//! Exact base fields: the rationals and the bivariate rational function
//! field GF(2)(s, t).

mod f2poly;
mod f2ratfun;
pub mod integer;
mod rational;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub use f2poly::{BivarPoly, UnivarPoly};
pub use f2ratfun::F2RatFun;
pub use integer::{squarefree_part, squarefree_part_with_bound, DEFAULT_FACTOR_BITS};
pub use rational::Rational;

/// A commutative field with exact, canonical arithmetic.
///
/// Values are always kept in canonical form, so `==` is field equality.
pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const CHARACTERISTIC: u32;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Multiplicative inverse; zero has none.
    fn inv(&self) -> Result<Self>;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * other.inv()?)
    }

    /// Whether `self = y * y` for some `y` in the same field.
    fn is_square(&self) -> bool;

    /// Constant named by an identifier in the text syntax (`s`, `t`, ...).
    fn from_ident(_name: &str) -> Option<Self> {
        None
    }

    /// True when the printed form needs parentheses as a coefficient.
    fn is_compound(&self) -> bool;

    /// Largest bit length of any integer in the representation.
    fn bit_size(&self) -> u64;
}

/// Bit bound on integer parts of user-supplied coordinates.
pub const COORDINATE_BIT_GUARD: u64 = 4096;

pub(crate) fn check_bits<F: Field>(x: &F, bound: u64) -> Result<()> {
    if x.bit_size() > bound {
        return Err(Error::Resource(format!(
            "scalar needs {} bits, guard is {bound}",
            x.bit_size()
        )));
    }
    Ok(())
}
