//! Text front end for scalars and algebra elements.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary ("*" unary)*
//! unary := "-" unary | power
//! power := atom ["^" ["-"] INT]
//! atom  := NUMBER ["/" NUMBER] | "s" | "q" | "a" | "b" | "c" | "d"
//!        | "beta(" SIGNS ";" SIGNS ")" | "(" expr ")"
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::diagram::{parse_sign_run, Sign};
use crate::error::{Error, Result};
use crate::scalar::HalfLaurent;

pub(crate) struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(src: &str) -> Self {
        Self {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    pub(crate) fn expect_str(&mut self, s: &str) -> Result<()> {
        if self.eat_str(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{s}`")))
        }
    }

    pub(crate) fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    pub(crate) fn usize(&mut self) -> Result<usize> {
        let d = self.digits()?;
        d.parse().map_err(|_| self.error("number too large"))
    }

    /// Consumes a possibly empty run of `+`/`-` characters with no interior spaces.
    pub(crate) fn signs(&mut self) -> Result<Vec<Sign>> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some('+') | Some('-')) {
            self.pos += 1;
        }
        let run: String = self.chars[start..self.pos].iter().collect();
        parse_sign_run(&run)
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..self.pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

/// An algebra that expression text can be evaluated into.
pub trait ExprTarget: Clone {
    fn from_scalar(c: HalfLaurent) -> Self;
    fn generator(name: char) -> std::result::Result<Self, String>;
    fn beta(mu: Vec<Sign>, nu: Vec<Sign>) -> std::result::Result<Self, String>;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &HalfLaurent) -> Self;
}

impl ExprTarget for HalfLaurent {
    fn from_scalar(c: HalfLaurent) -> Self {
        c
    }
    fn generator(name: char) -> std::result::Result<Self, String> {
        Err(format!("`{name}` is not a scalar"))
    }
    fn beta(_: Vec<Sign>, _: Vec<Sign>) -> std::result::Result<Self, String> {
        Err("`beta(..)` is not a scalar".into())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &HalfLaurent) -> Self {
        self * c
    }
}

#[derive(Clone)]
enum Value<T> {
    Scalar(HalfLaurent),
    Elem(T),
}

impl<T: ExprTarget> Value<T> {
    fn into_elem(self) -> T {
        match self {
            Value::Scalar(c) => T::from_scalar(c),
            Value::Elem(x) => x,
        }
    }

    fn add(self, other: Self) -> Self {
        match (self, other) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
            (x, y) => Value::Elem(x.into_elem().add(&y.into_elem())),
        }
    }

    fn mul(self, other: Self) -> Self {
        match (self, other) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (Value::Scalar(c), Value::Elem(x)) | (Value::Elem(x), Value::Scalar(c)) => {
                Value::Elem(x.scale(&c))
            }
            (Value::Elem(x), Value::Elem(y)) => Value::Elem(x.mul(&y)),
        }
    }

    fn neg(self) -> Self {
        self.mul(Value::Scalar(HalfLaurent::from_int(-1)))
    }
}

struct Parser<T> {
    cur: Cursor,
    _target: std::marker::PhantomData<T>,
}

impl<T: ExprTarget> Parser<T> {
    fn expr(&mut self) -> Result<Value<T>> {
        let mut acc = self.term()?;
        loop {
            if self.cur.eat('+') {
                acc = acc.add(self.term()?);
            } else if self.cur.eat('-') {
                acc = acc.add(self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value<T>> {
        let mut acc = self.unary()?;
        while self.cur.eat('*') {
            acc = acc.mul(self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value<T>> {
        if self.cur.eat('-') {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value<T>> {
        let base = self.atom()?;
        if !self.cur.eat('^') {
            return Ok(base);
        }
        let negative = self.cur.eat('-');
        let k: i64 = self
            .cur
            .digits()?
            .parse()
            .map_err(|_| self.cur.error("exponent too large"))?;
        let k = if negative { -k } else { k };
        match base {
            Value::Scalar(x) => {
                if k >= 0 {
                    Ok(Value::Scalar(x.pow(k as u32)))
                } else {
                    let inv = x
                        .inverse_monomial()
                        .ok_or_else(|| self.cur.error("only monomials have negative powers"))?;
                    Ok(Value::Scalar(inv.pow((-k) as u32)))
                }
            }
            Value::Elem(x) => {
                if k < 0 {
                    return Err(self.cur.error("negative power of an algebra element"));
                }
                let mut acc = T::from_scalar(HalfLaurent::one());
                for _ in 0..k {
                    acc = acc.mul(&x);
                }
                Ok(Value::Elem(acc))
            }
        }
    }

    fn atom(&mut self) -> Result<Value<T>> {
        self.cur.skip_ws();
        match self.cur.peek() {
            Some('(') => {
                self.cur.bump();
                let v = self.expr()?;
                self.cur.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.cur.digits()?.parse().expect("digits");
                let mut d = BigInt::from(1);
                if self.cur.peek() == Some('/') {
                    self.cur.bump();
                    d = self.cur.digits()?.parse().expect("digits");
                    if d.is_zero() {
                        return Err(self.cur.error("zero denominator"));
                    }
                }
                Ok(Value::Scalar(HalfLaurent::from_rational(BigRational::new(n, d))))
            }
            Some('s') => {
                self.cur.bump();
                Ok(Value::Scalar(HalfLaurent::s_pow(1)))
            }
            Some('q') => {
                self.cur.bump();
                Ok(Value::Scalar(HalfLaurent::q_pow(1)))
            }
            Some(_) if self.cur.eat_str("beta") => {
                self.cur.expect('(')?;
                let mu = self.cur.signs()?;
                self.cur.expect(';')?;
                let nu = self.cur.signs()?;
                self.cur.expect(')')?;
                T::beta(mu, nu).map(Value::Elem).map_err(|m| self.cur.error(m))
            }
            Some(c @ ('a' | 'b' | 'c' | 'd')) => {
                self.cur.bump();
                T::generator(c).map(Value::Elem).map_err(|m| self.cur.error(m))
            }
            Some(c) => Err(self.cur.error(format!("unexpected `{c}`"))),
            None => Err(self.cur.error("unexpected end of input")),
        }
    }
}

/// Parses and evaluates an expression in the algebra `T`.
pub fn parse_element<T: ExprTarget>(src: &str) -> Result<T> {
    let mut p = Parser::<T> {
        cur: Cursor::new(src),
        _target: std::marker::PhantomData,
    };
    let v = p.expr()?;
    if !p.cur.at_end() {
        return Err(p.cur.error("trailing input"));
    }
    Ok(v.into_elem())
}

/// Parses a scalar such as `-3/2*s^-5 + q^2`.
pub fn parse_scalar(src: &str) -> Result<HalfLaurent> {
    parse_element::<HalfLaurent>(src)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_grammar() {
        let x = parse_scalar("-3/2*s^-5 + s^4").unwrap();
        let mut want = HalfLaurent::s_pow(4);
        want.add_term(-5, BigRational::new((-3).into(), 2.into()));
        assert_eq!(x, want);
        assert_eq!(parse_scalar("q^-2").unwrap(), HalfLaurent::s_pow(-4));
        assert_eq!(parse_scalar("(q - q^-3)*q^3").unwrap(), parse_scalar("q^4 - 1").unwrap());
        assert_eq!(parse_scalar("--2").unwrap(), HalfLaurent::from_int(2));
    }

    #[test]
    fn errors_carry_position() {
        match parse_scalar("s +\n  @") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(parse_scalar("a").is_err());
        assert!(parse_scalar("(1+s)^-1").is_err());
        assert!(parse_scalar("1/0").is_err());
    }
}
