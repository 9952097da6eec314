//! The coefficient field `ℚ(q)`: rational functions in one formal parameter
//! with integer-coefficient numerator and denominator.
//!
//! A [`Scalar`] is always kept in normal form: numerator and denominator are
//! coprime over `ℚ`, share no integer content, and the denominator has a
//! positive leading coefficient. Equality is therefore structural.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial in `q` with integer coefficients, ascending degree, no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::new(vec![c.into()])
    }

    /// `c·q^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k];
        v.push(c.into());
        IntPolynomial::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn div_int(&self, d: &BigInt) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c / d).collect(),
        }
    }

    /// Content-free, positive leading coefficient.
    fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_int(&c)
    }

    /// `lc(b)^e · a mod b` up to a constant factor; enough for gcd purposes.
    fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
        let db = b.degree().expect("nonzero divisor");
        let lb = b.leading().unwrap().clone();
        let mut r = a.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shift = dr - db;
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lb).collect();
            for (i, bc) in b.coeffs.iter().enumerate() {
                coeffs[i + shift] -= &lr * bc;
            }
            r = IntPolynomial::new(coeffs);
        }
        r
    }

    /// Greatest common divisor over `ℚ`, returned primitive with positive
    /// leading coefficient.
    pub fn gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
        let mut x = a.primitive_part();
        let mut y = b.primitive_part();
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let r = IntPolynomial::pseudo_rem(&x, &y).primitive_part();
            x = y;
            y = r;
        }
        x
    }

    /// Exact division by a divisor that divides `self` over `ℤ[q]`.
    fn exact_div(&self, d: &IntPolynomial) -> IntPolynomial {
        let dd = d.degree().expect("nonzero divisor");
        let ld = d.leading().unwrap();
        let Some(dn) = self.degree() else {
            return IntPolynomial::zero();
        };
        if dn < dd {
            return IntPolynomial::zero();
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let (qc, r) = c.div_rem(ld);
            debug_assert!(r.is_zero(), "inexact polynomial division");
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &qc * dc;
            }
            quot[k] = qc;
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        IntPolynomial::new(quot)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    fn reversed(&self, len: usize) -> IntPolynomial {
        let mut v = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[len - 1 - i] = c.clone();
        }
        IntPolynomial::new(v)
    }

    fn fmt_in(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "{}", var)?,
                (1, false) => write!(f, "{}*{}", mag, var)?,
                (_, true) => write!(f, "{}^{}", var, k)?,
                (_, false) => write!(f, "{}*{}^{}", mag, var, k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in(f, "q")
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        IntPolynomial::new(v)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPolynomial::new(v)
    }
}

/// An element of `ℚ(q)` in normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl Scalar {
    /// Builds `num/den` and normalizes it.
    pub fn from_parts(num: IntPolynomial, den: IntPolynomial) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Arithmetic("zero denominator".into()));
        }
        Ok(Scalar::normalized(num, den))
    }

    pub fn from_poly(num: IntPolynomial) -> Scalar {
        Scalar::normalized(num, IntPolynomial::constant(1))
    }

    pub fn from_int(c: i64) -> Scalar {
        Scalar::from_poly(IntPolynomial::constant(c))
    }

    pub fn from_rational(x: &BigRational) -> Scalar {
        Scalar::normalized(
            IntPolynomial::constant(x.numer().clone()),
            IntPolynomial::constant(x.denom().clone()),
        )
    }

    pub fn zero() -> Scalar {
        Scalar {
            num: IntPolynomial::zero(),
            den: IntPolynomial::constant(1),
        }
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    /// The formal parameter `q`.
    pub fn q() -> Scalar {
        Scalar::from_poly(IntPolynomial::from_i64s(&[0, 1]))
    }

    /// `r = q + 1`.
    pub fn r() -> Scalar {
        Scalar::from_poly(IntPolynomial::from_i64s(&[1, 1]))
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Scalar {
        Scalar::from_poly(IntPolynomial::from_i64s(&[-1, 1]))
    }

    /// `-q`.
    pub fn neg_q() -> Scalar {
        Scalar::from_poly(IntPolynomial::from_i64s(&[0, -1]))
    }

    pub fn numer(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn normalized(mut num: IntPolynomial, mut den: IntPolynomial) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        if !den.is_constant() && !num.is_one() {
            let g = IntPolynomial::gcd(&num, &den);
            if g.degree().is_some_and(|d| d > 0) {
                num = num.exact_div(&g);
                den = den.exact_div(&g);
            }
        }
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_int(&c);
            den = den.div_int(&c);
        }
        Scalar { num, den }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        Ok(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    /// `self^k`; negative exponents require a nonzero base.
    pub fn pow(&self, k: i64) -> Result<Scalar> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut result = Scalar::one();
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Nonnegative power; infallible.
    pub fn powu(&self, k: usize) -> Scalar {
        self.pow(k as i64).expect("nonnegative exponent")
    }

    /// `x(q) ↦ x(1/q)`.
    pub fn substitute_reciprocal(&self) -> Scalar {
        if self.is_zero() {
            return Scalar::zero();
        }
        // p(1/q) = q^{-deg p} · rev(p)
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let mut num = self.num.reversed(dn + 1);
        let mut den = self.den.reversed(dd + 1);
        if dn > dd {
            den = &den * &IntPolynomial::monomial(1, dn - dd);
        } else if dd > dn {
            num = &num * &IntPolynomial::monomial(1, dd - dn);
        }
        Scalar::normalized(num, den)
    }

    /// Exact value at `q = q0`.
    pub fn evaluate(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole(format!("{} has a pole at q = {}", self, q0)));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// The constant value, when this scalar does not depend on `q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            let n = self.num.coeffs.first().cloned().unwrap_or_default();
            Some(BigRational::new(n, self.den.coeffs[0].clone()))
        } else {
            None
        }
    }

    /// True when printing needs parentheses in a product context.
    pub fn is_compound(&self) -> bool {
        self.to_string().contains(' ')
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let n = self.num.to_string();
        let d = self.den.to_string();
        let wrap = |s: String| {
            if s.contains(' ') || s.contains('*') {
                format!("({})", s)
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(n), wrap(d))
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Scalar::from_int(c)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Scalar {
                    num: &self.num + &rhs.num,
                    den: self.den.clone(),
                };
            }
            return Scalar::normalized(&self.num + &rhs.num, self.den.clone());
        }
        Scalar::normalized(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar {
                num: &self.num * &rhs.num,
                den: self.den.clone(),
            };
        }
        Scalar::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

// JSON: {"num":[c0,c1,…],"den":[d0,d1,…]}, ascending degree. Coefficients
// outside the i64 range are written as decimal strings.

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScalarJson {
    num: Vec<JsonInt>,
    den: Vec<JsonInt>,
}

fn to_json_ints(p: &IntPolynomial) -> Vec<JsonInt> {
    p.coeffs
        .iter()
        .map(|c| {
            c.to_i64()
                .map(JsonInt::Small)
                .unwrap_or_else(|| JsonInt::Big(c.to_string()))
        })
        .collect()
}

fn from_json_ints(v: Vec<JsonInt>) -> std::result::Result<IntPolynomial, String> {
    v.into_iter()
        .map(|j| match j {
            JsonInt::Small(i) => Ok(BigInt::from(i)),
            JsonInt::Big(s) => s.parse::<BigInt>().map_err(|_| format!("invalid integer {:?}", s)),
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(IntPolynomial::new)
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarJson {
            num: to_json_ints(&self.num),
            den: to_json_ints(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ScalarJson::deserialize(d)?;
        let num = from_json_ints(raw.num).map_err(D::Error::custom)?;
        let den = from_json_ints(raw.den).map_err(D::Error::custom)?;
        Scalar::from_parts(num, den).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Parses expressions such as `q-1`, `-q`, `1/(q+1)^2` or `3/2`.
impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        let tokens = tokenize(s)?;
        let mut p = ExprParser { tokens, pos: 0 };
        let v = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!("unexpected trailing input in {:?}", s)));
        }
        Ok(v)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = chars[start..i].iter().collect();
            out.push(Tok::Int(lit.parse().expect("digits")));
        } else if ch == 'q' {
            out.push(Tok::Q);
            i += 1;
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {:?} in scalar {:?}", ch, s)));
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("empty scalar expression".into()));
    }
    Ok(out)
}

struct ExprParser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                acc = acc.checked_div(&self.unary()?)?;
            } else if matches!(self.peek(), Some(Tok::Q) | Some(Tok::Op('('))) {
                // implicit multiplication: 2q, 3(q+1)
                acc = &acc * &self.unary()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let e = match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    n.to_i64().ok_or_else(|| Error::Parse("exponent too large".into()))?
                }
                _ => return Err(Error::Parse("expected integer exponent".into())),
            };
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Scalar::from_poly(IntPolynomial::constant(n)))
            }
            Some(Tok::Q) => {
                self.pos += 1;
                Ok(Scalar::q())
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(v)
            }
            other => Err(Error::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

/// Parses a rational constant such as `1`, `-1`, `3/2`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let v: Scalar = s.parse()?;
    v.as_rational()
        .ok_or_else(|| Error::Parse(format!("{:?} is not a rational constant", s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&s("q+1") * &s("q-1"), s("q^2-1"));
        let inv = Scalar::one().checked_div(&Scalar::r()).unwrap();
        assert_eq!(inv.numer(), &IntPolynomial::from_i64s(&[1]));
        assert_eq!(inv.denom(), &IntPolynomial::from_i64s(&[1, 1]));
        let x = s("q^2-1").checked_div(&s("q+1")).unwrap();
        assert_eq!(x, s("q-1"));
        assert!(x.is_polynomial());
    }

    #[test]
    fn division_by_zero() {
        assert!(matches!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(Error::Arithmetic(_))
        ));
        assert!(matches!(Scalar::zero().pow(-1), Err(Error::Arithmetic(_))));
    }

    #[test]
    fn power_examples() {
        assert_eq!(Scalar::neg_q().pow(2).unwrap(), s("q^2"));
        assert_eq!(Scalar::r().pow(0).unwrap(), Scalar::one());
        let x = Scalar::r().pow(-2).unwrap();
        assert_eq!(x.numer(), &IntPolynomial::from_i64s(&[1]));
        assert_eq!(x.denom(), &IntPolynomial::from_i64s(&[1, 2, 1]));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(Scalar::q().substitute_reciprocal(), s("1/q"));
        assert_eq!(Scalar::r().substitute_reciprocal(), s("(1+q)/q"));
        assert_eq!(Scalar::from_int(5).substitute_reciprocal(), Scalar::from_int(5));
        assert_eq!(s("(q^2+3)/(2q-7)").substitute_reciprocal(), s("(1+3q^2)/(2q-7q^2)"));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(Scalar::r().evaluate(&rat(1, 1)).unwrap(), rat(2, 1));
        assert_eq!(Scalar::r().evaluate(&rat(0, 1)).unwrap(), rat(1, 1));
        let inv_r = Scalar::r().inv().unwrap();
        assert!(matches!(inv_r.evaluate(&rat(-1, 1)), Err(Error::Pole(_))));
        assert_eq!(inv_r.evaluate(&rat(1, 2)).unwrap(), rat(2, 3));
    }

    #[test]
    fn normal_form_is_canonical() {
        let a = s("(2q+2)/(4q^2-4)");
        assert_eq!(a, s("1/(2q-2)"));
        assert_eq!(a.denom(), &IntPolynomial::from_i64s(&[-2, 2]));
        let b = s("1/(1-q)");
        assert_eq!(b.numer(), &IntPolynomial::from_i64s(&[-1]));
        assert_eq!(b.denom(), &IntPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(s("(q^3-q)/(q^2+q)"), s("q-1"));
    }

    #[test]
    fn gcd_of_higher_degree() {
        let a = &IntPolynomial::from_i64s(&[1, 2, 1]) * &IntPolynomial::from_i64s(&[3, 0, 2]);
        let b = &IntPolynomial::from_i64s(&[1, 1]) * &IntPolynomial::from_i64s(&[5, -1, 0, 7]);
        assert_eq!(IntPolynomial::gcd(&a, &b), IntPolynomial::from_i64s(&[1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(s("q^2+2q+1").to_string(), "q^2 + 2*q + 1");
        assert_eq!(s("-1").to_string(), "-1");
        assert_eq!(s("-q").to_string(), "-q");
        assert_eq!(s("1/(q+1)").to_string(), "1/(q + 1)");
        assert_eq!(s("q/2").to_string(), "q/2");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let x = s("(3q-1)/(q+1)^2");
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, r#"{"num":[-1,3],"den":[1,2,1]}"#);
        let back: Scalar = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Scalar>(r#"{"num":[1],"den":[]}"#).is_err());
        let unnormalized: Scalar = serde_json::from_str(r#"{"num":[-1,0,1],"den":[1,1]}"#).unwrap();
        assert_eq!(unnormalized, s("q-1"));
    }

    #[test]
    fn parse_errors() {
        assert!("q+".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!(parse_rational("q").is_err());
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
    }
}
