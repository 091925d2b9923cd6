//! Exact numbers on the boundary of the upper half-plane.
//!
//! A [`BoundaryPoint`] is a rational, a real quadratic irrational
//! `(p + q*sqrt(d))/r`, or the point at infinity. Comparison and floor are
//! exact; arithmetic is exact within one quadratic field.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the reduced fraction `n/d`.
///
/// # Panics
/// If `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `(p + q*sqrt(d))/r` with `q != 0`, `r > 0`, `gcd(p, q, r) = 1` and `d > 1` squarefree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    d: u64,
}

impl QuadraticSurd {
    /// Builds `(p + q*sqrt(d))/r`, collapsing to a rational when the irrational part vanishes.
    #[allow(clippy::new_ret_no_self)]
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        r: impl Into<BigInt>,
        d: u64,
    ) -> Result<BoundaryPoint> {
        let (p, q, r) = (p.into(), q.into(), r.into());
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (s, d) = squarefree_split(d);
        let q = q * BigInt::from(s);
        let a = Rational::new(p, r.clone());
        if d <= 1 {
            let root = if d == 1 { q } else { BigInt::zero() };
            return Ok(BoundaryPoint::Rational(a + Rational::new(root, r)));
        }
        Ok(Quad {
            a,
            b: Rational::new(q, r),
            d,
        }
        .into_point())
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Algebraic conjugate `(p - q*sqrt(d))/r`.
    pub fn conjugate(&self) -> QuadraticSurd {
        QuadraticSurd {
            p: self.p.clone(),
            q: -&self.q,
            r: self.r.clone(),
            d: self.d,
        }
    }

    fn floor(&self) -> BigInt {
        let s = (&self.q * &self.q * BigInt::from(self.d)).sqrt();
        let t = if self.q.is_positive() { s } else { -s - 1 };
        (&self.p + t).div_floor(&self.r)
    }

    /// Rational within `2^-bits` of the surd.
    fn approx(&self, bits: u32) -> Rational {
        let scale = BigInt::one() << bits;
        let s = (&self.q * &self.q * BigInt::from(self.d) * &scale * &scale).sqrt();
        let s = if self.q.is_negative() { -s } else { s };
        Rational::new(&self.p * &scale + s, &self.r * scale)
    }
}

/// Splits `n = s^2 * d` with `d` squarefree.
fn squarefree_split(n: u64) -> (u64, u64) {
    let (mut s, mut d) = (1u64, n);
    let mut f = 2u64;
    while f.saturating_mul(f) <= d {
        while d % (f * f) == 0 {
            d /= f * f;
            s *= f;
        }
        f += 1;
    }
    (s, d)
}

/// A point of `R ∪ {∞}` that the dynamics can carry exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoundaryPoint {
    Rational(Rational),
    Surd(QuadraticSurd),
    Infinity,
}

/// Element `a + b*sqrt(d)` of a quadratic field; `d == 1` marks the rationals.
#[derive(Debug, Clone)]
pub(crate) struct Quad {
    a: Rational,
    b: Rational,
    d: u64,
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn join(d1: u64, d2: u64) -> Result<u64> {
    match (d1, d2) {
        (1, d) | (d, 1) => Ok(d),
        (x, y) if x == y => Ok(x),
        (x, y) => Err(Error::MixedRadicand(x, y)),
    }
}

impl Quad {
    fn rational(a: Rational) -> Quad {
        Quad {
            a,
            b: Rational::zero(),
            d: 1,
        }
    }

    fn into_point(self) -> BoundaryPoint {
        if self.d == 1 || self.b.is_zero() {
            return BoundaryPoint::Rational(self.a);
        }
        let r = self.a.denom().lcm(self.b.denom());
        let p = self.a.numer() * (&r / self.a.denom());
        let q = self.b.numer() * (&r / self.b.denom());
        let g = p.gcd(&q).gcd(&r);
        BoundaryPoint::Surd(QuadraticSurd {
            p: p / &g,
            q: q / &g,
            r: r / &g,
            d: self.d,
        })
    }

    fn add(&self, o: &Quad) -> Result<Quad> {
        Ok(Quad {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            d: join(self.d, o.d)?,
        })
    }

    fn neg(&self) -> Quad {
        Quad {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }

    fn mul(&self, o: &Quad) -> Result<Quad> {
        let d = join(self.d, o.d)?;
        let dd = Rational::from_integer(BigInt::from(d));
        Ok(Quad {
            a: &self.a * &o.a + &self.b * &o.b * dd,
            b: &self.a * &o.b + &o.a * &self.b,
            d,
        })
    }

    fn recip(&self) -> Result<Quad> {
        let dd = Rational::from_integer(BigInt::from(self.d));
        let norm = &self.a * &self.a - &self.b * &self.b * dd;
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Quad {
            a: &self.a / &norm,
            b: -&self.b / norm,
            d: self.d,
        })
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn signum(&self) -> i8 {
        let (sa, sb) = (sign_of(&self.a), sign_of(&self.b));
        if sb == 0 || self.d == 1 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * Rational::from_integer(BigInt::from(self.d));
        if lhs > rhs {
            sa
        } else {
            sb
        }
    }
}

/// Sign of `u + g*sqrt(n)` where `u` lives in a different quadratic field.
fn sign_mixed(u: &Quad, g: &Rational, n: u64) -> i8 {
    let (su, sv) = (u.signum(), sign_of(g));
    if sv == 0 {
        return su;
    }
    if su == 0 || su == sv {
        return sv;
    }
    let u2 = u.mul(u).expect("same field");
    let diff = Quad {
        a: u2.a - g * g * Rational::from_integer(BigInt::from(n)),
        b: u2.b,
        d: u.d,
    };
    if diff.signum() > 0 {
        su
    } else {
        sv
    }
}

impl BoundaryPoint {
    pub fn ratio(n: i64, d: i64) -> BoundaryPoint {
        BoundaryPoint::Rational(rat(n, d))
    }

    pub fn integer(n: impl Into<BigInt>) -> BoundaryPoint {
        BoundaryPoint::Rational(Rational::from_integer(n.into()))
    }

    pub fn zero() -> BoundaryPoint {
        BoundaryPoint::integer(0)
    }

    pub fn one() -> BoundaryPoint {
        BoundaryPoint::integer(1)
    }

    /// `sqrt(n)`, simplified; exact integer when `n` is a perfect square.
    pub fn sqrt(n: u64) -> BoundaryPoint {
        QuadraticSurd::new(0, 1, 1, n).expect("nonzero denominator")
    }

    pub(crate) fn quad(&self) -> Result<Quad> {
        match self {
            BoundaryPoint::Rational(r) => Ok(Quad::rational(r.clone())),
            BoundaryPoint::Surd(s) => Ok(Quad {
                a: Rational::new(s.p.clone(), s.r.clone()),
                b: Rational::new(s.q.clone(), s.r.clone()),
                d: s.d,
            }),
            BoundaryPoint::Infinity => Err(Error::InfiniteOperand),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            BoundaryPoint::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_zero())
    }

    /// Radicand of the quadratic field the point lives in (1 for rationals).
    pub fn radicand(&self) -> Option<u64> {
        match self {
            BoundaryPoint::Rational(_) => Some(1),
            BoundaryPoint::Surd(s) => Some(s.d),
            BoundaryPoint::Infinity => None,
        }
    }

    /// -1, 0 or 1; infinity counts as positive.
    pub fn signum(&self) -> i8 {
        match self.quad() {
            Ok(q) => q.signum(),
            Err(_) => 1,
        }
    }

    pub fn add(&self, o: &BoundaryPoint) -> Result<BoundaryPoint> {
        Ok(self.quad()?.add(&o.quad()?)?.into_point())
    }

    pub fn sub(&self, o: &BoundaryPoint) -> Result<BoundaryPoint> {
        Ok(self.quad()?.add(&o.quad()?.neg())?.into_point())
    }

    pub fn mul(&self, o: &BoundaryPoint) -> Result<BoundaryPoint> {
        Ok(self.quad()?.mul(&o.quad()?)?.into_point())
    }

    pub fn div(&self, o: &BoundaryPoint) -> Result<BoundaryPoint> {
        Ok(self.quad()?.mul(&o.quad()?.recip()?)?.into_point())
    }

    pub fn recip(&self) -> Result<BoundaryPoint> {
        Ok(self.quad()?.recip()?.into_point())
    }

    pub fn neg(&self) -> Result<BoundaryPoint> {
        Ok(self.quad()?.neg().into_point())
    }

    pub fn abs(&self) -> BoundaryPoint {
        if self.signum() < 0 {
            self.neg().expect("finite")
        } else {
            self.clone()
        }
    }

    /// Image under `z -> (a*z + b)/(c*z + d)`, with the projective convention at poles and infinity.
    pub fn moebius(&self, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> BoundaryPoint {
        match self {
            BoundaryPoint::Infinity => {
                if c.is_zero() {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Rational(Rational::new(a.clone(), c.clone()))
                }
            }
            BoundaryPoint::Rational(x) => {
                let (n, m) = (x.numer(), x.denom());
                let den = c * n + d * m;
                if den.is_zero() {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Rational(Rational::new(a * n + b * m, den))
                }
            }
            BoundaryPoint::Surd(s) => {
                let lift = |u: BigInt, v: BigInt| Quad {
                    a: Rational::from_integer(u),
                    b: Rational::from_integer(v),
                    d: s.d,
                };
                let num = lift(a * &s.p + b * &s.r, a * &s.q);
                let den = lift(c * &s.p + d * &s.r, c * &s.q);
                match den.recip() {
                    Ok(inv) => num.mul(&inv).expect("same field").into_point(),
                    Err(_) => BoundaryPoint::Infinity,
                }
            }
        }
    }

    /// Greatest integer not exceeding the point.
    pub fn floor(&self) -> Result<BigInt> {
        match self {
            BoundaryPoint::Rational(r) => Ok(r.floor().to_integer()),
            BoundaryPoint::Surd(s) => Ok(s.floor()),
            BoundaryPoint::Infinity => Err(Error::InfiniteOperand),
        }
    }

    /// Least integer not below the point.
    pub fn ceil(&self) -> Result<BigInt> {
        Ok(-self.neg()?.floor()?)
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        self.cmp(&BoundaryPoint::Rational(r.clone()))
    }

    pub fn cmp_int(&self, n: i64) -> Ordering {
        self.cmp_rational(&int(n))
    }

    /// Rational within `2^-bits` of the point.
    pub fn approx_rational(&self, bits: u32) -> Result<Rational> {
        match self {
            BoundaryPoint::Rational(r) => Ok(r.clone()),
            BoundaryPoint::Surd(s) => Ok(s.approx(bits)),
            BoundaryPoint::Infinity => Err(Error::InfiniteOperand),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            BoundaryPoint::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            BoundaryPoint::Surd(s) => s.approx(96).to_f64().unwrap_or(f64::NAN),
            BoundaryPoint::Infinity => f64::INFINITY,
        }
    }
}

impl Ord for BoundaryPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        use BoundaryPoint::Infinity;
        let (x, y) = match (self, other) {
            (Infinity, Infinity) => return Ordering::Equal,
            (Infinity, _) => return Ordering::Greater,
            (_, Infinity) => return Ordering::Less,
            (x, y) => (x.quad().expect("finite"), y.quad().expect("finite")),
        };
        let s = match x.add(&y.neg()) {
            Ok(diff) => diff.signum(),
            Err(_) => {
                let u = Quad {
                    a: &x.a - &y.a,
                    b: x.b.clone(),
                    d: x.d,
                };
                sign_mixed(&u, &-&y.b, y.d)
            }
        };
        s.cmp(&0)
    }
}

impl PartialOrd for BoundaryPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Rational> for BoundaryPoint {
    fn from(r: Rational) -> Self {
        BoundaryPoint::Rational(r)
    }
}

impl From<BigInt> for BoundaryPoint {
    fn from(n: BigInt) -> Self {
        BoundaryPoint::integer(n)
    }
}

impl From<i64> for BoundaryPoint {
    fn from(n: i64) -> Self {
        BoundaryPoint::integer(n)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut body = String::new();
        if !self.p.is_zero() {
            body.push_str(&self.p.to_string());
            body.push(if self.q.is_negative() { '-' } else { '+' });
        } else if self.q.is_negative() {
            body.push('-');
        }
        if !self.q.abs().is_one() {
            body.push_str(&format!("{}*", self.q.abs()));
        }
        body.push_str(&format!("sqrt({})", self.d));
        if self.r.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({body})/{}", self.r)
        }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Rational(r) => write!(f, "{r}"),
            BoundaryPoint::Surd(s) => write!(f, "{s}"),
            BoundaryPoint::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for BoundaryPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BoundaryPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for BoundaryPoint {
    type Err = Error;

    /// Accepts integers, `p/q`, decimals, `inf`, and expressions built from
    /// `sqrt(n)` with `+ - * /` and parentheses, e.g. `(1+sqrt(5))/2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if matches!(
            t.to_ascii_lowercase().as_str(),
            "inf" | "infinity" | "∞" | "oo" | "1/0"
        ) {
            return Ok(BoundaryPoint::Infinity);
        }
        let mut p = Parser {
            src: t.as_bytes(),
            pos: 0,
            input: s,
        };
        let q = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.fail("trailing characters"));
        }
        Ok(q.into_point())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn fail(&self, reason: &str) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Quad> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.add(&self.term()?.neg())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Quad> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?)?;
            } else if self.eat(b'/') {
                let den = self.unary()?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                acc = acc.mul(&den.recip()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Quad> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Quad> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let q = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.fail("expected ')'"));
                }
                Ok(q)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(b's') if self.src[self.pos..].starts_with(b"sqrt") => {
                self.pos += 4;
                if !self.eat(b'(') {
                    return Err(self.fail("expected '(' after sqrt"));
                }
                let arg = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.fail("expected ')'"));
                }
                let n = match arg.into_point() {
                    BoundaryPoint::Rational(r) if r.is_integer() && !r.is_negative() => r
                        .to_integer()
                        .to_u64()
                        .ok_or_else(|| self.fail("radicand too large"))?,
                    _ => return Err(self.fail("sqrt needs a non-negative integer")),
                };
                BoundaryPoint::sqrt(n).quad()
            }
            _ => Err(self.fail("expected a number")),
        }
    }

    fn number(&mut self) -> Result<Quad> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let whole = &self.input.trim()[start..self.pos];
        let mut value: BigInt = whole.parse().map_err(|_| self.fail("bad integer"))?;
        let mut den = BigInt::one();
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            self.pos += 1;
            let fs = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            for &c in &self.src[fs..self.pos] {
                value = value * 10 + BigInt::from(c - b'0');
                den *= 10;
            }
        }
        Ok(Quad::rational(Rational::new(value, den)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bp(s: &str) -> BoundaryPoint {
        s.parse().unwrap()
    }

    #[test]
    fn parses_common_forms() {
        assert_eq!(bp("3/7"), BoundaryPoint::ratio(3, 7));
        assert_eq!(bp("-6/4"), BoundaryPoint::ratio(-3, 2));
        assert_eq!(bp("0.25"), BoundaryPoint::ratio(1, 4));
        assert_eq!(bp("inf"), BoundaryPoint::Infinity);
        assert_eq!(bp("sqrt(8)"), QuadraticSurd::new(0, 2, 1, 2).unwrap());
        assert_eq!(bp("sqrt(9)"), BoundaryPoint::integer(3));
        assert_eq!(bp("(1+sqrt(5))/2"), QuadraticSurd::new(1, 1, 2, 5).unwrap());
        assert_eq!(bp("-sqrt(2)").to_string(), "-sqrt(2)");
        assert_eq!(bp("3*sqrt(2) - 1").to_string(), "-1+3*sqrt(2)");
        assert_eq!(bp("(1+sqrt(5))/2").to_string(), "(1+sqrt(5))/2");
        assert_eq!(bp("(2-3*sqrt(7))/5").to_string(), "(2-3*sqrt(7))/5");
        assert!("sqrt(-2)".parse::<BoundaryPoint>().is_err());
        assert!("1/(2-2)".parse::<BoundaryPoint>().is_err());
        assert!("abc".parse::<BoundaryPoint>().is_err());
    }

    #[test]
    fn surd_arithmetic_collapses_to_rationals() {
        let s = bp("sqrt(2)");
        assert_eq!(s.mul(&s).unwrap(), BoundaryPoint::integer(2));
        let phi = bp("(1+sqrt(5))/2");
        // phi^2 = phi + 1
        assert_eq!(phi.mul(&phi).unwrap(), phi.add(&BoundaryPoint::one()).unwrap());
        assert!(matches!(
            s.add(&bp("sqrt(3)")),
            Err(Error::MixedRadicand(2, 3))
        ));
        assert!(BoundaryPoint::Infinity.add(&s).is_err());
    }

    #[test]
    fn ordering_across_fields() {
        assert!(bp("sqrt(2)") < bp("sqrt(3)"));
        assert!(bp("sqrt(3) - 1") > bp("sqrt(2) - 1"));
        assert!(bp("10*sqrt(2)") < bp("14*sqrt(2) - 5*sqrt(1)"));
        assert!(bp("7/5") < bp("sqrt(2)"));
        assert!(bp("sqrt(2)") < bp("17/12"));
        assert!(bp("1000000") < BoundaryPoint::Infinity);
        assert_eq!(bp("-sqrt(2)").floor().unwrap(), BigInt::from(-2));
        assert_eq!(bp("(1+sqrt(5))/2").floor().unwrap(), BigInt::from(1));
        assert_eq!(bp("-7/2").floor().unwrap(), BigInt::from(-4));
    }

    fn arb_surd() -> impl Strategy<Value = BoundaryPoint> {
        (-50i64..50, -20i64..20, 1i64..30, prop::sample::select(vec![2u64, 3, 5, 6, 7, 10]))
            .prop_map(|(p, q, r, d)| QuadraticSurd::new(p, q, r, d).unwrap())
    }

    proptest! {
        #[test]
        fn field_operations_roundtrip(x in arb_surd(), y in arb_surd()) {
            let y = if y.radicand() == x.radicand() || y.radicand() == Some(1) { y } else { BoundaryPoint::one() };
            let sum = x.add(&y).unwrap();
            prop_assert_eq!(sum.sub(&y).unwrap(), x.clone());
            if !y.is_zero() {
                prop_assert_eq!(x.mul(&y).unwrap().div(&y).unwrap(), x);
            }
        }

        #[test]
        fn floor_brackets_value(x in arb_surd()) {
            let f = BoundaryPoint::integer(x.floor().unwrap());
            let f1 = f.add(&BoundaryPoint::one()).unwrap();
            prop_assert!(f <= x && x < f1);
        }

        #[test]
        fn render_parse_roundtrip(x in arb_surd()) {
            prop_assert_eq!(x.to_string().parse::<BoundaryPoint>().unwrap(), x);
        }

        #[test]
        fn order_agrees_with_floats(x in arb_surd(), y in arb_surd()) {
            let (fx, fy) = (x.to_f64(), y.to_f64());
            if (fx - fy).abs() > 1e-9 {
                prop_assert_eq!(x < y, fx < fy);
            }
            prop_assert_eq!(x.cmp(&y), y.cmp(&x).reverse());
        }

        #[test]
        fn approximation_is_tight(x in arb_surd()) {
            let a = BoundaryPoint::Rational(x.approx_rational(140).unwrap());
            let eps = BoundaryPoint::Rational(Rational::new(BigInt::one(), BigInt::one() << 139));
            let diff = x.sub(&a).unwrap().abs();
            prop_assert!(diff < eps);
        }
    }
}
