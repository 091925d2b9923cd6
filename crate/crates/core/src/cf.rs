//! Regular continued fractions: the Gauss map, the Farey map and their
//! natural extensions.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::moebius::Lft;
use crate::numeric::{rat, BoundaryPoint};

/// Maximum number of digits produced when expanding without an explicit bound.
pub const DEFAULT_MAX_DIGITS: usize = 10_000;

/// How an expansion stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Termination {
    /// The remainder reached 0.
    Finite,
    /// Digits from `start` on repeat with period `len`.
    Periodic { start: usize, len: usize },
    /// The digit budget ran out.
    Truncated,
}

/// One branch of a two-dimensional map: `(x, y) -> (x_map(x), y_map(y))`.
///
/// `flips` records whether the branch reverses the orientation sign when the
/// map is lifted to the signed square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatextBranch {
    pub label: String,
    pub x_map: Lft,
    pub y_map: Lft,
    pub flips: bool,
}

/// Branch selector of a natural extension, keyed on `x`.
pub type NatextFn = fn(&BoundaryPoint) -> Result<NatextBranch>;

impl NatextBranch {
    pub fn apply(&self, x: &BoundaryPoint, y: &BoundaryPoint) -> (BoundaryPoint, BoundaryPoint) {
        (self.x_map.apply(x), self.y_map.apply(y))
    }
}

/// Digits, remainders and termination of an orbit under an interval map.
pub(crate) struct Orbit<D> {
    pub digits: Vec<D>,
    pub remainders: Vec<BoundaryPoint>,
    pub termination: Termination,
}

/// Iterates `step` from `x0` until it returns `None`, a state repeats, or `max` digits are produced.
pub(crate) fn run_orbit<D>(
    x0: BoundaryPoint,
    max: usize,
    mut step: impl FnMut(&BoundaryPoint) -> Result<Option<(D, BoundaryPoint)>>,
) -> Result<Orbit<D>> {
    let mut seen: HashMap<BoundaryPoint, usize> = HashMap::new();
    let mut digits = Vec::new();
    let mut remainders = Vec::new();
    let mut x = x0;
    loop {
        if let Some(&start) = seen.get(&x) {
            let len = digits.len() - start;
            return Ok(Orbit {
                digits,
                remainders,
                termination: Termination::Periodic { start, len },
            });
        }
        if digits.len() >= max {
            return Ok(Orbit {
                digits,
                remainders,
                termination: Termination::Truncated,
            });
        }
        let Some((d, next)) = step(&x)? else {
            return Ok(Orbit {
                digits,
                remainders,
                termination: Termination::Finite,
            });
        };
        seen.insert(x, digits.len());
        digits.push(d);
        remainders.push(next.clone());
        x = next;
    }
}

fn in_unit(x: &BoundaryPoint, closed: bool) -> bool {
    x.signum() >= 0 && if closed { x.cmp_int(1).is_le() } else { x.cmp_int(1).is_lt() }
}

/// Gauss branch `x -> 1/x - k` on `(1/(k+1), 1/k]`.
pub fn gauss_branch(x: &BoundaryPoint) -> Result<(BigInt, Lft)> {
    if !in_unit(x, false) || x.is_zero() {
        return Err(domain("gauss", x, "(0,1)"));
    }
    let k = x.recip()?.floor()?;
    Ok((k.clone(), Lft::recip_minus(k)))
}

/// One step of the Gauss map on `[0,1)`; `0` is fixed and yields no digit.
pub fn gauss_step(x: &BoundaryPoint) -> Result<(Option<BigInt>, BoundaryPoint)> {
    if x.is_zero() {
        return Ok((None, BoundaryPoint::zero()));
    }
    let (k, l) = gauss_branch(x)?;
    Ok((Some(k), l.apply(x)))
}

/// Branch of the natural extension `(x, y) -> (1/x - k, 1/(k + y))` selected by `x`.
pub fn gauss_natext_branch(x: &BoundaryPoint) -> Result<NatextBranch> {
    let (k, x_map) = gauss_branch(x)?;
    Ok(NatextBranch {
        label: format!("k={k}"),
        x_map,
        y_map: Lft::from_big(BigInt::zero(), BigInt::one(), BigInt::one(), k),
        flips: true,
    })
}

/// One step of the natural extension of the Gauss map on `(0,1) x [0,1]`.
pub fn gauss_natext_step(
    x: &BoundaryPoint,
    y: &BoundaryPoint,
) -> Result<(BoundaryPoint, BoundaryPoint)> {
    if !in_unit(y, true) {
        return Err(domain("gauss natext", y, "[0,1]"));
    }
    Ok(gauss_natext_branch(x)?.apply(x, y))
}

/// Farey branch on `[0,1]`: `x/(1-x)` below 1/2, `(1-x)/x` from 1/2 on.
pub fn farey_branch(x: &BoundaryPoint) -> Result<(u8, Lft)> {
    if !in_unit(x, true) {
        return Err(domain("farey", x, "[0,1]"));
    }
    if x.cmp_rational(&rat(1, 2)).is_lt() {
        Ok((1, Lft::new(1, 0, -1, 1)))
    } else {
        Ok((2, Lft::new(-1, 1, 1, 0)))
    }
}

pub fn farey_step(x: &BoundaryPoint) -> Result<BoundaryPoint> {
    Ok(farey_branch(x)?.1.apply(x))
}

/// Branch of the Farey natural extension: `(x/(1-x), y/(1+y))` or `((1-x)/x, 1/(1+y))`.
pub fn farey_natext_branch(x: &BoundaryPoint) -> Result<NatextBranch> {
    let (b, x_map) = farey_branch(x)?;
    let y_map = if b == 1 {
        Lft::new(1, 0, 1, 1)
    } else {
        Lft::new(0, 1, 1, 1)
    };
    Ok(NatextBranch {
        label: format!("F{b}"),
        x_map,
        y_map,
        flips: b == 2,
    })
}

pub fn farey_natext_step(
    x: &BoundaryPoint,
    y: &BoundaryPoint,
) -> Result<(BoundaryPoint, BoundaryPoint)> {
    if !in_unit(y, true) {
        return Err(domain("farey natext", y, "[0,1]"));
    }
    Ok(farey_natext_branch(x)?.apply(x, y))
}

/// Regular continued-fraction expansion `leading + 1/(d1 + 1/(d2 + ...))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RcfExpansion {
    pub value: BoundaryPoint,
    pub leading: BigInt,
    pub digits: Vec<BigInt>,
    /// `remainders[i]` is the Gauss orbit point after digit `i`.
    pub remainders: Vec<BoundaryPoint>,
    pub termination: Termination,
}

impl RcfExpansion {
    /// Fractional part left after the listed digits.
    pub fn tail(&self) -> BoundaryPoint {
        match self.remainders.last() {
            Some(r) => r.clone(),
            None => self
                .value
                .sub(&BoundaryPoint::integer(self.leading.clone()))
                .expect("finite"),
        }
    }
}

impl fmt::Display for RcfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.leading)?;
        if !self.digits.is_empty() {
            f.write_str(";")?;
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
            Termination::Periodic { .. } => f.write_str(")]"),
            Termination::Truncated => f.write_str(",...]"),
            Termination::Finite => f.write_str("]"),
        }
    }
}

/// Expands `x` with at most `max_digits` digits after the leading one.
pub fn rcf_expand(x: &BoundaryPoint, max_digits: usize) -> Result<RcfExpansion> {
    if x.is_infinite() {
        return Err(domain("rcf", x, "R"));
    }
    let leading = x.floor()?;
    let frac = x.sub(&BoundaryPoint::integer(leading.clone()))?;
    let orbit = run_orbit(frac, max_digits, |t| {
        Ok(match gauss_step(t)? {
            (Some(k), next) => Some((k, next)),
            (None, _) => None,
        })
    })?;
    Ok(RcfExpansion {
        value: x.clone(),
        leading,
        digits: orbit.digits,
        remainders: orbit.remainders,
        termination: orbit.termination,
    })
}

/// Value of `leading + 1/(d1 + 1/(... + 1/(dn + tail)))`.
pub fn rcf_value(leading: &BigInt, digits: &[BigInt], tail: &BoundaryPoint) -> BoundaryPoint {
    let v = digits
        .iter()
        .rev()
        .fold(tail.clone(), |v, d| Lft::over_shift(1, d.clone()).apply(&v));
    v.add(&BoundaryPoint::integer(leading.clone()))
        .expect("finite convergent")
}

/// Recovers the expanded value from digits and tail.
pub fn rcf_eval(e: &RcfExpansion) -> BoundaryPoint {
    rcf_value(&e.leading, &e.digits, &e.tail())
}

/// Checks `F^k(x) = G(x)` with `k = floor(1/x)` for `x` in `(0,1)`.
pub fn farey_slowdown_check(x: &BoundaryPoint) -> Result<bool> {
    let (k, g) = gauss_branch(x)?;
    let mut y = x.clone();
    let mut i = BigInt::zero();
    while i < k {
        y = farey_step(&y)?;
        i += 1;
    }
    Ok(y == g.apply(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bp(s: &str) -> BoundaryPoint {
        s.parse().unwrap()
    }

    fn digits(e: &RcfExpansion) -> Vec<i64> {
        e.digits.iter().map(|d| d.try_into().unwrap()).collect()
    }

    #[test]
    fn quadratic_irrationals_are_periodic() {
        let e = rcf_expand(&bp("sqrt(2)"), 100).unwrap();
        assert_eq!(e.to_string(), "[1;(2)]");
        let e = rcf_expand(&bp("sqrt(3)"), 100).unwrap();
        assert_eq!(e.termination, Termination::Periodic { start: 0, len: 2 });
        assert_eq!(digits(&e), vec![1, 2]);
        let e = rcf_expand(&bp("(1+sqrt(5))/2"), 100).unwrap();
        assert_eq!(e.to_string(), "[1;(1)]");
    }

    #[test]
    fn rationals_terminate() {
        let e = rcf_expand(&bp("-7/3"), 100).unwrap();
        assert_eq!(e.leading, BigInt::from(-3));
        assert_eq!(digits(&e), vec![1, 2]);
        assert_eq!(e.termination, Termination::Finite);
        let e = rcf_expand(&BoundaryPoint::zero(), 10).unwrap();
        assert!(e.digits.is_empty());
        assert_eq!(e.to_string(), "[0]");
    }

    #[test]
    fn farey_endpoints() {
        assert_eq!(farey_step(&bp("1/2")).unwrap(), BoundaryPoint::one());
        assert_eq!(farey_step(&BoundaryPoint::one()).unwrap(), BoundaryPoint::zero());
        assert!(farey_step(&bp("3/2")).is_err());
        assert!(gauss_step(&BoundaryPoint::one()).is_err());
    }

    proptest! {
        #[test]
        fn rational_expansion_roundtrips(n in -500i64..500, d in 1i64..500) {
            let x = BoundaryPoint::ratio(n, d);
            let e = rcf_expand(&x, DEFAULT_MAX_DIGITS).unwrap();
            prop_assert_eq!(e.termination, Termination::Finite);
            prop_assert_eq!(rcf_eval(&e), x);
        }

        #[test]
        fn surd_expansion_roundtrips(p in -20i64..20, q in 1i64..6, r in 1i64..12, d in prop::sample::select(vec![2u64, 3, 5, 7, 13])) {
            let x = crate::numeric::QuadraticSurd::new(p, q, r, d).unwrap();
            let e = rcf_expand(&x, DEFAULT_MAX_DIGITS).unwrap();
            let periodic = matches!(e.termination, Termination::Periodic { .. });
            prop_assert!(periodic);
            prop_assert_eq!(rcf_eval(&e), x);
        }

        #[test]
        fn natext_preserves_square(n in 1i64..300, d in 2i64..300, yn in 0i64..300) {
            prop_assume!(n < d);
            let (x, y) = (BoundaryPoint::ratio(n, d), BoundaryPoint::ratio(yn % d, d));
            let (x1, y1) = gauss_natext_step(&x, &y).unwrap();
            prop_assert!(in_unit(&x1, false) && in_unit(&y1, true));
            let (x2, y2) = farey_natext_step(&x, &y).unwrap();
            prop_assert!(in_unit(&x2, true) && in_unit(&y2, true));
        }

        #[test]
        fn farey_slows_down_gauss(n in 1i64..400, d in 2i64..400) {
            prop_assume!(n < d);
            prop_assert!(farey_slowdown_check(&BoundaryPoint::ratio(n, d)).unwrap());
        }
    }
}
