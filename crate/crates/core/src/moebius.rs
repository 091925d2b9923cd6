//! Integer linear-fractional transformations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{BoundaryPoint, Rational};

/// `z -> (a*z + b)/(c*z + d)` with integer entries and nonzero determinant.
///
/// Branches of the interval maps are of this form with determinant `±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lft {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Lft {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Lft {
        Lft::from_big(a.into(), b.into(), c.into(), d.into())
    }

    pub fn from_big(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Lft {
        let l = Lft { a, b, c, d };
        assert!(!l.det().is_zero(), "singular linear-fractional map {l}");
        l
    }

    pub fn identity() -> Lft {
        Lft::new(1, 0, 0, 1)
    }

    /// `z -> z + n`.
    pub fn translate(n: impl Into<BigInt>) -> Lft {
        Lft::from_big(BigInt::one(), n.into(), BigInt::zero(), BigInt::one())
    }

    /// `z -> 1/(n - z)`.
    pub fn invert_from(n: impl Into<BigInt>) -> Lft {
        Lft::from_big(BigInt::zero(), BigInt::one(), -BigInt::one(), n.into())
    }

    /// `z -> 1/z - n`.
    pub fn recip_minus(n: impl Into<BigInt>) -> Lft {
        let n = n.into();
        Lft::from_big(-n, BigInt::one(), BigInt::one(), BigInt::zero())
    }

    /// `z -> n - 1/z`.
    pub fn minus_recip(n: impl Into<BigInt>) -> Lft {
        Lft::from_big(n.into(), -BigInt::one(), BigInt::one(), BigInt::zero())
    }

    /// `z -> e/(n + z)`.
    pub fn over_shift(e: i64, n: impl Into<BigInt>) -> Lft {
        Lft::from_big(BigInt::zero(), e.into(), BigInt::one(), n.into())
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, x: &BoundaryPoint) -> BoundaryPoint {
        x.moebius(&self.a, &self.b, &self.c, &self.d)
    }

    /// Exact rational image; `None` at the pole.
    pub fn apply_rational(&self, x: &Rational) -> Option<Rational> {
        let (n, m) = (x.numer(), x.denom());
        let den = &self.c * n + &self.d * m;
        (!den.is_zero()).then(|| Rational::new(&self.a * n + &self.b * m, den))
    }

    /// `self ∘ other`.
    pub fn compose(&self, o: &Lft) -> Lft {
        Lft {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    /// Projective inverse (adjugate matrix).
    pub fn inverse(&self) -> Lft {
        Lft {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// Derivative `det/(c*x + d)^2` at a rational point.
    pub fn derivative_at(&self, x: &Rational) -> Result<Rational> {
        let den = Rational::from_integer(self.c.clone()) * x + Rational::from_integer(self.d.clone());
        if den.is_zero() {
            return Err(Error::Pole(self.to_string()));
        }
        Ok(Rational::from_integer(self.det()) / (&den * &den))
    }

    /// `|derivative_at|`.
    pub fn jacobian_at(&self, x: &Rational) -> Result<Rational> {
        Ok(self.derivative_at(x)?.abs())
    }

    /// Equal as maps of the projective line.
    pub fn same_map(&self, o: &Lft) -> bool {
        let neg = Lft {
            a: -&o.a,
            b: -&o.b,
            c: -&o.c,
            d: -&o.d,
        };
        self == o || *self == neg
    }
}

impl fmt::Display for Lft {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// Element of PSL(2, Z), stored with `c > 0`, or `c = 0` and `d > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerMoebius(Lft);

impl IntegerMoebius {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<IntegerMoebius> {
        IntegerMoebius::from_big(a.into(), b.into(), c.into(), d.into())
    }

    pub fn from_big(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<IntegerMoebius> {
        let l = Lft { a, b, c, d };
        if !l.det().is_one() {
            return Err(Error::Determinant(l.to_string()));
        }
        Ok(IntegerMoebius::canonical(l))
    }

    fn canonical(l: Lft) -> IntegerMoebius {
        let flip = l.c.is_negative() || (l.c.is_zero() && l.d.is_negative());
        if flip {
            IntegerMoebius(Lft {
                a: -l.a,
                b: -l.b,
                c: -l.c,
                d: -l.d,
            })
        } else {
            IntegerMoebius(l)
        }
    }

    pub fn identity() -> IntegerMoebius {
        IntegerMoebius(Lft::identity())
    }

    /// `z -> z + n`.
    pub fn translation(n: i64) -> IntegerMoebius {
        IntegerMoebius(Lft::translate(n))
    }

    /// `z -> -1/z`.
    pub fn s() -> IntegerMoebius {
        IntegerMoebius::new(0, -1, 1, 0).expect("det 1")
    }

    pub fn lft(&self) -> &Lft {
        &self.0
    }

    pub fn apply(&self, x: &BoundaryPoint) -> BoundaryPoint {
        self.0.apply(x)
    }

    pub fn compose(&self, o: &IntegerMoebius) -> IntegerMoebius {
        IntegerMoebius::canonical(self.0.compose(&o.0))
    }

    pub fn inverse(&self) -> IntegerMoebius {
        IntegerMoebius::canonical(self.0.inverse())
    }

    pub fn derivative_at(&self, x: &Rational) -> Result<Rational> {
        self.0.derivative_at(x)
    }

    /// Membership in the theta group: `a ≡ d`, `b ≡ c` and `a ≢ b` mod 2.
    pub fn in_theta(&self) -> bool {
        let l = &self.0;
        let odd = |x: &BigInt| x.is_odd();
        odd(&l.a) == odd(&l.d) && odd(&l.b) == odd(&l.c) && odd(&l.a) != odd(&l.b)
    }

    /// Membership in the principal congruence subgroup of level 2.
    pub fn in_gamma2(&self) -> bool {
        self.0.b.is_even() && self.0.c.is_even()
    }
}

impl fmt::Display for IntegerMoebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
