//! Even continued fractions `1/(a1 + e1/(a2 + e2/(...)))` with even `ai >= 2`
//! and signs `ei = ±1`: the even Gauss map, the even Farey map and their
//! natural extensions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cf::{run_orbit, NatextBranch, Termination};
use crate::error::{domain, Result};
use crate::moebius::Lft;
use crate::numeric::{rat, BoundaryPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl serde::Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.value())
    }
}

impl Sign {
    pub fn of(x: &BoundaryPoint) -> Sign {
        if x.signum() < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn from_i8(s: i8) -> Sign {
        if s < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, o: Sign) -> Sign {
        if self == o {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `self * x`.
    pub fn apply(self, x: &BoundaryPoint) -> BoundaryPoint {
        match (self, x) {
            (Sign::Plus, _) | (_, BoundaryPoint::Infinity) => x.clone(),
            (Sign::Minus, _) => x.neg().expect("finite"),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Digit `(a, eps)` of an even continued fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EcfDigit {
    pub a: BigInt,
    pub eps: Sign,
}

impl EcfDigit {
    pub fn new(a: i64, eps: Sign) -> EcfDigit {
        EcfDigit { a: a.into(), eps }
    }

    /// `t -> 1/(a + eps*t)`, the inverse branch attached to the digit.
    pub fn inverse_branch(&self) -> Lft {
        Lft::from_big(
            BigInt::zero(),
            BigInt::one(),
            self.eps.value().into(),
            self.a.clone(),
        )
    }

    /// Digit for a point `v >= 1`: `(2k,+1)` on `[2k, 2k+1)`, `(2k,-1)` on `[2k-1, 2k)`.
    fn for_reciprocal(v: &BoundaryPoint) -> Result<EcfDigit> {
        let f = v.floor()?;
        Ok(if f.is_even() {
            EcfDigit { a: f, eps: Sign::Plus }
        } else {
            EcfDigit {
                a: f + 1,
                eps: Sign::Minus,
            }
        })
    }

    /// `v -> eps*(v - a)`, sending the digit's interval back to `[0,1]`.
    fn remainder_map(&self) -> Lft {
        match self.eps {
            Sign::Plus => Lft::translate(-&self.a),
            Sign::Minus => Lft::from_big(-BigInt::one(), self.a.clone(), BigInt::zero(), BigInt::one()),
        }
    }
}

impl fmt::Display for EcfDigit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.eps)
    }
}

fn check_unit(map: &'static str, x: &BoundaryPoint) -> Result<()> {
    if x.signum() < 0 || x.cmp_int(1).is_gt() {
        return Err(domain(map, x, "[0,1]"));
    }
    Ok(())
}

/// Even Gauss branch at `x` in `(0,1]`: the digit and the map `x -> eps*(1/x - a)`.
pub fn even_gauss_branch(x: &BoundaryPoint) -> Result<(EcfDigit, Lft)> {
    check_unit("even gauss", x)?;
    if x.is_zero() {
        return Err(domain("even gauss", x, "(0,1]"));
    }
    let d = EcfDigit::for_reciprocal(&x.recip()?)?;
    let l = match d.eps {
        Sign::Plus => Lft::recip_minus(d.a.clone()),
        Sign::Minus => Lft::minus_recip(d.a.clone()),
    };
    Ok((d, l))
}

pub fn even_gauss_step(x: &BoundaryPoint) -> Result<(Option<EcfDigit>, BoundaryPoint)> {
    check_unit("even gauss", x)?;
    if x.is_zero() {
        return Ok((None, BoundaryPoint::zero()));
    }
    let (d, l) = even_gauss_branch(x)?;
    Ok((Some(d), l.apply(x)))
}

/// Branch of `(x, y) -> (T_e(x), e1/(a1 + y))`.
pub fn even_gauss_natext_branch(x: &BoundaryPoint) -> Result<NatextBranch> {
    let (d, x_map) = even_gauss_branch(x)?;
    Ok(NatextBranch {
        label: d.to_string(),
        y_map: Lft::over_shift(d.eps.value(), d.a.clone()),
        x_map,
        flips: d.eps == Sign::Plus,
    })
}

/// Natural extension of the even Gauss map on `[0,1] x [-1,1]`; `(0, y)` is fixed.
pub fn even_gauss_natext_step(
    x: &BoundaryPoint,
    y: &BoundaryPoint,
) -> Result<(BoundaryPoint, BoundaryPoint)> {
    if y.cmp_int(-1).is_lt() || y.cmp_int(1).is_gt() {
        return Err(domain("even gauss natext", y, "[-1,1]"));
    }
    check_unit("even gauss natext", x)?;
    if x.is_zero() {
        return Ok((x.clone(), y.clone()));
    }
    Ok(even_gauss_natext_branch(x)?.apply(x, y))
}

/// Even Farey branch index (1, 2, 3) and map on `[0,1/3)`, `[1/3,1/2)`, `[1/2,1]`.
pub fn even_farey_branch(x: &BoundaryPoint) -> Result<(u8, Lft)> {
    check_unit("even farey", x)?;
    Ok(if x.cmp_rational(&rat(1, 3)).is_lt() {
        (1, Lft::new(1, 0, -2, 1))
    } else if x.cmp_rational(&rat(1, 2)).is_lt() {
        (2, Lft::new(-2, 1, 1, 0))
    } else {
        (3, Lft::new(2, -1, 1, 0))
    })
}

pub fn even_farey_step(x: &BoundaryPoint) -> Result<BoundaryPoint> {
    Ok(even_farey_branch(x)?.1.apply(x))
}

/// Branch of the even Farey natural extension; `y` follows
/// `y/(1+2y)`, `1/(2+y)`, `1/(2-y)` on the three branches.
pub fn even_farey_natext_branch(x: &BoundaryPoint) -> Result<NatextBranch> {
    let (b, x_map) = even_farey_branch(x)?;
    let y_map = match b {
        1 => Lft::new(1, 0, 2, 1),
        2 => Lft::new(0, 1, 1, 2),
        _ => Lft::new(0, 1, -1, 2),
    };
    Ok(NatextBranch {
        label: format!("Fe{b}"),
        x_map,
        y_map,
        flips: b == 2,
    })
}

pub fn even_farey_natext_step(
    x: &BoundaryPoint,
    y: &BoundaryPoint,
) -> Result<(BoundaryPoint, BoundaryPoint)> {
    check_unit("even farey natext", y)?;
    Ok(even_farey_natext_branch(x)?.apply(x, y))
}

/// Even continued-fraction expansion `sign * (a0 + e0*[[(a1,e1),(a2,e2),...]])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EcfExpansion {
    pub value: BoundaryPoint,
    pub negative: bool,
    /// Present exactly when `|value| > 1`.
    pub leading: Option<EcfDigit>,
    pub digits: Vec<EcfDigit>,
    /// `remainders[i]` is the even Gauss orbit point after digit `i`.
    pub remainders: Vec<BoundaryPoint>,
    pub termination: Termination,
    start: BoundaryPoint,
}

impl EcfExpansion {
    /// Remainder in `[0,1]` after the listed digits.
    pub fn exact_tail(&self) -> BoundaryPoint {
        self.remainders.last().unwrap_or(&self.start).clone()
    }

    /// Leading digit followed by the digits, as a single sequence.
    pub fn all_digits(&self) -> Vec<EcfDigit> {
        self.leading.iter().chain(&self.digits).cloned().collect()
    }
}

impl fmt::Display for EcfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        f.write_str("[[")?;
        if let Some(l) = &self.leading {
            write!(f, "{l};")?;
        }
        let period = match self.termination {
            Termination::Periodic { start, .. } => Some(start),
            _ => None,
        };
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if period == Some(i) {
                f.write_str("(")?;
            }
            write!(f, "{d}")?;
        }
        match self.termination {
            Termination::Periodic { .. } => f.write_str(")]]"),
            Termination::Truncated => f.write_str(",...]]"),
            Termination::Finite => f.write_str("]]"),
        }
    }
}

fn unit_orbit(t: BoundaryPoint, max_digits: usize) -> Result<crate::cf::Orbit<EcfDigit>> {
    run_orbit(t, max_digits, |t| {
        Ok(match even_gauss_step(t)? {
            (Some(d), next) => Some((d, next)),
            (None, _) => None,
        })
    })
}

pub fn ecf_expand(x: &BoundaryPoint, max_digits: usize) -> Result<EcfExpansion> {
    if x.is_infinite() {
        return Err(domain("ecf", x, "R"));
    }
    let negative = x.signum() < 0;
    let ax = x.abs();
    let (leading, start) = if ax.cmp_int(1).is_gt() {
        let d = EcfDigit::for_reciprocal(&ax)?;
        let t = d.remainder_map().apply(&ax);
        (Some(d), t)
    } else {
        (None, ax)
    };
    let orbit = unit_orbit(start.clone(), max_digits)?;
    Ok(EcfExpansion {
        value: x.clone(),
        negative,
        leading,
        digits: orbit.digits,
        remainders: orbit.remainders,
        termination: orbit.termination,
        start,
    })
}

/// `1/(a1 + e1/(a2 + ... + en*tail))` for unit-interval digits.
pub fn ecf_value(digits: &[EcfDigit], tail: &BoundaryPoint) -> BoundaryPoint {
    digits
        .iter()
        .rev()
        .fold(tail.clone(), |t, d| d.inverse_branch().apply(&t))
}

pub fn ecf_eval(e: &EcfExpansion) -> BoundaryPoint {
    let t = ecf_value(&e.digits, &e.exact_tail());
    let v = match &e.leading {
        Some(l) => l.remainder_map().inverse().apply(&t),
        None => t,
    };
    if e.negative {
        v.neg().expect("finite")
    } else {
        v
    }
}

/// Digit `(eps/b)` of an extended even continued fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtDigit {
    pub eps: Sign,
    pub b: BigInt,
}

impl fmt::Display for ExtDigit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.eps == Sign::Plus { '+' } else { '-' };
        write!(f, "({s}1/{})", self.b)
    }
}

/// `y = e0/(b0 + e1/(b1 + ... + tail))` for `|y| <= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtEcfExpansion {
    pub value: BoundaryPoint,
    pub digits: Vec<ExtDigit>,
    /// Signed remainder after the listed digits, in `[-1,1]`.
    pub tail: BoundaryPoint,
    pub termination: Termination,
}

impl fmt::Display for ExtEcfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<<")?;
        let period = match self.termination {
            Termination::Periodic { start, .. } => Some(start),
            _ => None,
        };
        for (i, d) in self.digits.iter().enumerate() {
            if period == Some(i) {
                f.write_str("(")?;
            }
            write!(f, "{d}")?;
        }
        match self.termination {
            Termination::Periodic { .. } => f.write_str(")>>"),
            Termination::Truncated => f.write_str("...>>"),
            Termination::Finite => f.write_str(">>"),
        }
    }
}

/// Extended expansion obtained by shifting the sign indices of the even
/// expansion of `|y|`: `(sign(y)/a1), (e1/a2), (e2/a3), ...`.
pub fn ext_ecf_expand(y: &BoundaryPoint, max_digits: usize) -> Result<ExtEcfExpansion> {
    if y.is_infinite() || y.abs().cmp_int(1).is_gt() {
        return Err(domain("ext ecf", y, "[-1,1]"));
    }
    let s = Sign::of(y);
    let orbit = unit_orbit(y.abs(), max_digits)?;
    let mut digits = Vec::with_capacity(orbit.digits.len() + 1);
    let mut prev = s;
    for d in &orbit.digits {
        digits.push(ExtDigit {
            eps: prev,
            b: d.a.clone(),
        });
        prev = d.eps;
    }
    let mut tail = match orbit.remainders.last() {
        Some(r) => prev.apply(r),
        None => y.clone(),
    };
    let termination = match orbit.termination {
        Termination::Periodic { start, len } => {
            // ext digit j depends on digits j-1 and j, so the period begins one later
            let d = &orbit.digits[start];
            digits.push(ExtDigit {
                eps: prev,
                b: d.a.clone(),
            });
            tail = d.eps.apply(&orbit.remainders[start]);
            Termination::Periodic {
                start: start + 1,
                len,
            }
        }
        t => t,
    };
    Ok(ExtEcfExpansion {
        value: y.clone(),
        digits,
        tail,
        termination,
    })
}

pub fn ext_ecf_value(digits: &[ExtDigit], tail: &BoundaryPoint) -> BoundaryPoint {
    digits.iter().rev().fold(tail.clone(), |v, d| {
        Lft::over_shift(d.eps.value(), d.b.clone()).apply(&v)
    })
}

pub fn ext_ecf_eval(e: &ExtEcfExpansion) -> BoundaryPoint {
    ext_ecf_value(&e.digits, &e.tail)
}

/// `k` with `x` in `[1/(2k+1), 1/(2k-1))` and whether `F_e^k(x) = T_e(x)`.
pub fn even_slowdown_check(x: &BoundaryPoint) -> Result<(BigInt, bool)> {
    if x.signum() <= 0 || x.cmp_int(1).is_ge() {
        return Err(domain("even slowdown", x, "(0,1)"));
    }
    let v = x.recip()?.sub(&BoundaryPoint::one())?;
    let k = v
        .div(&BoundaryPoint::integer(2))?
        .ceil()?;
    let target = even_gauss_step(x)?.1;
    let mut y = x.clone();
    let mut i = BigInt::zero();
    while i < k {
        y = even_farey_step(&y)?;
        i += 1;
    }
    Ok((k, y == target))
}
