//! Text syntax for scalars, quaternions and subspaces.
//!
//! Scalars and quaternions are arithmetic expressions over integer literals,
//! the field generators `s`, `t` (case B) and the basis names (`i`, `j`, `k`
//! or `u`, `v`, `w`), with `+ - * / ^` and parentheses. A subspace is a list
//! of spanning vectors separated by `;`.

use crate::algebra::{FourAlgebra, Quaternion};
use crate::error::{Error, Result};
use crate::geometry::Subspace;
use crate::scalar::{check_bits, Field, COORDINATE_BIT_GUARD};

/// Largest accepted absolute exponent.
const MAX_EXPONENT: u32 = 1024;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn parse_err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse { column, message: message.into() }
}

fn tokenize(src: &str, offset: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = offset + i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), col));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(parse_err(col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Expr {
    Num(String),
    Ident(String, usize),
    Neg(Box<Expr>),
    Bin(char, Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i64, usize),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let col = self.col();
            if self.eat('+') {
                lhs = Expr::Bin('+', Box::new(lhs), Box::new(self.term()?), col);
            } else if self.eat('-') {
                lhs = Expr::Bin('-', Box::new(lhs), Box::new(self.term()?), col);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let col = self.col();
            if self.eat('*') {
                lhs = Expr::Bin('*', Box::new(lhs), Box::new(self.unary()?), col);
            } else if self.eat('/') {
                lhs = Expr::Bin('/', Box::new(lhs), Box::new(self.unary()?), col);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        let col = self.col();
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let ecol = self.col();
        let Some(Tok::Num(digits)) = self.peek().cloned() else {
            return Err(parse_err(ecol, "expected an integer exponent"));
        };
        self.pos += 1;
        let n: u32 = digits
            .parse()
            .ok()
            .filter(|n| *n <= MAX_EXPONENT)
            .ok_or_else(|| parse_err(ecol, format!("exponent exceeds {MAX_EXPONENT}")))?;
        let n = if negative { -i64::from(n) } else { i64::from(n) };
        Ok(Expr::Pow(Box::new(base), n, col))
    }

    fn atom(&mut self) -> Result<Expr> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(d)) => {
                self.pos += 1;
                Ok(Expr::Num(d))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Ident(name, col))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(parse_err(self.col(), "expected ')'"));
                }
                Ok(e)
            }
            Some(t) => Err(parse_err(col, format!("unexpected {t:?}"))),
            None => Err(parse_err(col, "unexpected end of input")),
        }
    }
}

fn parse_expr(src: &str, offset: usize) -> Result<Expr> {
    let toks = tokenize(src, offset)?;
    let end = offset + src.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, end };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(parse_err(p.col(), "trailing input"));
    }
    Ok(e)
}

/// Arithmetic needed to evaluate an expression.
trait Domain {
    type V: Clone;
    fn number(&self, digits: &str) -> Self::V;
    fn ident(&self, name: &str) -> Option<Self::V>;
    fn add(&self, x: Self::V, y: Self::V) -> Self::V;
    fn neg(&self, x: Self::V) -> Self::V;
    fn mul(&self, x: &Self::V, y: &Self::V) -> Self::V;
    fn inv(&self, x: &Self::V) -> Result<Self::V>;
    fn one(&self) -> Self::V;
    fn guard(&self, x: &Self::V) -> Result<()>;
}

fn digits_to<F: Field>(digits: &str) -> F {
    let ten = F::from_i64(10);
    digits
        .bytes()
        .fold(F::zero(), |acc, b| acc * ten.clone() + F::from_i64(i64::from(b - b'0')))
}

fn eval<D: Domain>(d: &D, e: &Expr) -> Result<D::V> {
    let v = match e {
        Expr::Num(digits) => d.number(digits),
        Expr::Ident(name, col) => d
            .ident(name)
            .ok_or_else(|| parse_err(*col, format!("unknown identifier '{name}'")))?,
        Expr::Neg(x) => d.neg(eval(d, x)?),
        Expr::Bin(op, x, y, col) => {
            let (x, y) = (eval(d, x)?, eval(d, y)?);
            match op {
                '+' => d.add(x, y),
                '-' => d.add(x, d.neg(y)),
                '*' => d.mul(&x, &y),
                _ => d.mul(&x, &d.inv(&y).map_err(|_| parse_err(*col, "division by a non-invertible value"))?),
            }
        }
        Expr::Pow(x, n, col) => {
            let mut base = eval(d, x)?;
            if *n < 0 {
                base = d.inv(&base).map_err(|_| parse_err(*col, "negative power of a non-invertible value"))?;
            }
            let mut acc = d.one();
            for _ in 0..n.unsigned_abs() {
                acc = d.mul(&acc, &base);
                d.guard(&acc)?;
            }
            acc
        }
    };
    d.guard(&v)?;
    Ok(v)
}

struct Scalars<F>(std::marker::PhantomData<F>);

impl<F: Field> Domain for Scalars<F> {
    type V = F;
    fn number(&self, digits: &str) -> F {
        digits_to(digits)
    }
    fn ident(&self, name: &str) -> Option<F> {
        F::from_ident(name)
    }
    fn add(&self, x: F, y: F) -> F {
        x + y
    }
    fn neg(&self, x: F) -> F {
        -x
    }
    fn mul(&self, x: &F, y: &F) -> F {
        x.clone() * y.clone()
    }
    fn inv(&self, x: &F) -> Result<F> {
        x.inv()
    }
    fn one(&self) -> F {
        F::one()
    }
    fn guard(&self, x: &F) -> Result<()> {
        check_bits(x, COORDINATE_BIT_GUARD)
    }
}

struct Vectors<'a, A>(&'a A);

fn scalar_part<F: Field>(x: &Quaternion<F>) -> Option<F> {
    x.is_scalar().then(|| x.coords()[0].clone())
}

impl<A: FourAlgebra> Domain for Vectors<'_, A> {
    type V = Quaternion<A::Scalar>;
    fn number(&self, digits: &str) -> Self::V {
        Quaternion::scalar(digits_to(digits))
    }
    fn ident(&self, name: &str) -> Option<Self::V> {
        if name == "1" {
            return Some(Quaternion::basis(0));
        }
        if let Some(n) = self.0.basis_names().iter().position(|b| *b == name) {
            return Some(Quaternion::basis(n));
        }
        A::Scalar::from_ident(name).map(Quaternion::scalar)
    }
    fn add(&self, x: Self::V, y: Self::V) -> Self::V {
        x + y
    }
    fn neg(&self, x: Self::V) -> Self::V {
        -x
    }
    // coordinate multiples of e_0 act as scalars, whatever the unit
    fn mul(&self, x: &Self::V, y: &Self::V) -> Self::V {
        match (scalar_part(x), scalar_part(y)) {
            (Some(c), _) => y.scale(&c),
            (_, Some(c)) => x.scale(&c),
            _ => self.0.mul(x, y),
        }
    }
    fn inv(&self, x: &Self::V) -> Result<Self::V> {
        match scalar_part(x) {
            Some(c) => Ok(Quaternion::scalar(c.inv()?)),
            None => self.0.inverse(x),
        }
    }
    fn one(&self) -> Self::V {
        Quaternion::basis(0)
    }
    fn guard(&self, x: &Self::V) -> Result<()> {
        x.coords().iter().try_for_each(|c| check_bits(c, COORDINATE_BIT_GUARD))
    }
}

pub fn parse_scalar<F: Field>(src: &str) -> Result<F> {
    eval(&Scalars(std::marker::PhantomData), &parse_expr(src, 0)?)
}

pub fn parse_quaternion<A: FourAlgebra>(alg: &A, src: &str) -> Result<Quaternion<A::Scalar>> {
    parse_quaternion_at(alg, src, 0)
}

fn parse_quaternion_at<A: FourAlgebra>(alg: &A, src: &str, offset: usize) -> Result<Quaternion<A::Scalar>> {
    eval(&Vectors(alg), &parse_expr(src, offset)?)
}

/// Subspace spanned by `;`-separated vectors.
pub fn parse_subspace<A: FourAlgebra>(alg: &A, src: &str) -> Result<Subspace<A::Scalar>> {
    let mut vectors = Vec::new();
    let mut offset = 0;
    for part in src.split(';') {
        if !part.trim().is_empty() {
            vectors.push(parse_quaternion_at(alg, part, offset)?);
        }
        offset += part.chars().count() + 1;
    }
    Ok(Subspace::span(&vectors))
}

pub fn parse_point<A: FourAlgebra>(alg: &A, src: &str) -> Result<Subspace<A::Scalar>> {
    let p = parse_subspace(alg, src)?;
    if !p.is_point() {
        return Err(Error::domain(format!("'{src}' does not span a point")));
    }
    Ok(p)
}

pub fn parse_line<A: FourAlgebra>(alg: &A, src: &str) -> Result<Subspace<A::Scalar>> {
    let l = parse_subspace(alg, src)?;
    if !l.is_line() {
        return Err(Error::domain(format!("'{src}' does not span a line")));
    }
    Ok(l)
}

pub fn format_scalar<F: Field>(x: &F) -> String {
    x.to_string()
}

/// `c0 + c1*i + c2*j + c3*k` with zero terms omitted.
pub fn format_quaternion<A: FourAlgebra>(alg: &A, x: &Quaternion<A::Scalar>) -> String {
    let names = alg.basis_names();
    let mut out = String::new();
    for (n, c) in x.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (negative, magnitude) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        let magnitude = if c.is_compound() { format!("({magnitude})") } else { magnitude };
        let term = match (n, magnitude.as_str()) {
            (0, _) => magnitude.clone(),
            (_, "1") => names[n].to_string(),
            _ => format!("{magnitude}*{}", names[n]),
        };
        match (out.is_empty(), negative) {
            (true, false) => out.push_str(&term),
            (true, true) => {
                out.push('-');
                out.push_str(&term);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&term);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&term);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_subspace<A: FourAlgebra>(alg: &A, s: &Subspace<A::Scalar>) -> String {
    let rows: Vec<String> = s.basis().iter().map(|v| format_quaternion(alg, v)).collect();
    if rows.is_empty() {
        "0".into()
    } else {
        rows.join("; ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{QuarticExtension, QuaternionAlgebra};
    use crate::scalar::{F2RatFun, Rational};

    #[test]
    fn quaternion_round_trip() {
        let h = QuaternionAlgebra::hamilton();
        let x = parse_quaternion(&h, "1/2 - 3*i + j*k").unwrap();
        assert_eq!(x, Quaternion::new([Rational::new(1, 2).unwrap(), Rational::from_int(-2), Rational::zero(), Rational::zero()]));
        assert_eq!(format_quaternion(&h, &x), "(1/2) - 2*i");
        for src in ["0", "-i", "1 + i + j - k", "-(5/7)*j + 12*k", "-3"] {
            let x = parse_quaternion(&h, src).unwrap();
            assert_eq!(format_quaternion(&h, &x), src);
            assert_eq!(parse_quaternion(&h, &format_quaternion(&h, &x)).unwrap(), x);
        }
    }

    #[test]
    fn products_and_powers() {
        let h = QuaternionAlgebra::hamilton();
        assert_eq!(format_quaternion(&h, &parse_quaternion(&h, "i*j").unwrap()), "k");
        assert_eq!(format_quaternion(&h, &parse_quaternion(&h, "(1+i)^2").unwrap()), "2*i");
        assert_eq!(format_quaternion(&h, &parse_quaternion(&h, "(1+i)^-1").unwrap()), "(1/2) - (1/2)*i");
        assert_eq!(format_quaternion(&h, &parse_quaternion(&h, "k/i").unwrap()), "-j");
    }

    #[test]
    fn case_b_syntax() {
        let alg = QuarticExtension::standard();
        let x = parse_quaternion(&alg, "s^2*t + (s+1)*u + 1/(s+t)*w").unwrap();
        let text = format_quaternion(&alg, &x);
        assert_eq!(text, "s^2*t + (s + 1)*u + (1/(s + t))*w");
        assert_eq!(parse_quaternion(&alg, &text).unwrap(), x);
        assert_eq!(parse_quaternion(&alg, "u*u").unwrap(), Quaternion::scalar(F2RatFun::s()));
        assert_eq!(parse_scalar::<F2RatFun>("s + s").unwrap(), F2RatFun::zero());
    }

    #[test]
    fn errors_carry_columns() {
        let h = QuaternionAlgebra::hamilton();
        assert!(matches!(parse_quaternion(&h, "1 + q"), Err(Error::Parse { column: 5, .. })));
        assert!(matches!(parse_quaternion(&h, "1 + "), Err(Error::Parse { .. })));
        assert!(matches!(parse_quaternion(&h, "(1 + i"), Err(Error::Parse { .. })));
        assert!(matches!(parse_quaternion(&h, "i / 0"), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(parse_quaternion(&h, "i $"), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(parse_subspace(&h, "1; i +"), Err(Error::Parse { column: 7, .. })));
        assert!(parse_scalar::<Rational>("s").is_err());
        assert!(parse_scalar::<Rational>("2^100000").is_err());
    }

    #[test]
    fn subspace_syntax() {
        let h = QuaternionAlgebra::hamilton();
        let l = parse_subspace(&h, "1 + i; i").unwrap();
        assert_eq!(format_subspace(&h, &l), "1; i");
        assert_eq!(parse_subspace(&h, &format_subspace(&h, &l)).unwrap(), l);
        assert!(parse_point(&h, "1; i").is_err());
        assert!(parse_line(&h, "1; 2").is_err());
        assert_eq!(format_subspace(&h, &parse_subspace(&h, "").unwrap()), "0");
    }
}
