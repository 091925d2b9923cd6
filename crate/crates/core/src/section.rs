//! Cross-sections of the geodesic flow: geodesics are encoded by their
//! endpoint pair `(fwd, bwd)`, and each first-return map acts on both
//! endpoints by the same integer Moebius transformation.

use std::fmt;

use serde::Serialize;

use crate::cf::{run_orbit, NatextBranch, Termination};
use crate::ecf::{even_farey_natext_branch, even_gauss_natext_branch, Sign};
use crate::error::{cusp, domain, Error, Result};
use crate::moebius::Lft;
use crate::numeric::{rat, BoundaryPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Domain {
    /// `|fwd| > 1`, `bwd` in `-eps*(0,1)`.
    S,
    /// `|fwd| > 1`, `bwd` of sign `-eps`.
    T,
    /// `|fwd| > 1`, `bwd` in `(-1,1)`.
    Se,
    /// `fwd` in `eps*(1,∞)`, `bwd` in `eps*(-∞,1)`.
    Te,
    /// `|fwd|` in `[1,2)`, `bwd` in `eps*(-∞,1]`.
    SL,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::S => "S",
            Domain::T => "T",
            Domain::Se => "S_e",
            Domain::Te => "T_e",
            Domain::SL => "S_L",
        }
    }

    pub fn contains(self, fwd: &BoundaryPoint, bwd: &BoundaryPoint) -> bool {
        if fwd.is_infinite() || bwd.is_infinite() || fwd.is_zero() {
            return false;
        }
        let eps = Sign::of(fwd);
        let af = fwd.abs();
        let eb = eps.apply(bwd);
        match self {
            Domain::S => af.cmp_int(1).is_gt() && eb.signum() < 0 && eb.cmp_int(-1).is_gt(),
            Domain::T => af.cmp_int(1).is_gt() && eb.signum() < 0,
            Domain::Se => af.cmp_int(1).is_gt() && bwd.abs().cmp_int(1).is_lt(),
            Domain::Te => af.cmp_int(1).is_gt() && eb.cmp_int(1).is_lt(),
            Domain::SL => af.cmp_int(1).is_ge() && af.cmp_int(2).is_lt() && eb.cmp_int(1).is_le(),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Oriented geodesic with forward endpoint `fwd` and backward endpoint `bwd`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EndpointPair {
    pub fwd: BoundaryPoint,
    pub bwd: BoundaryPoint,
    pub domain: Domain,
}

impl EndpointPair {
    pub fn new(fwd: BoundaryPoint, bwd: BoundaryPoint, domain: Domain) -> Result<EndpointPair> {
        if !domain.contains(&fwd, &bwd) {
            return Err(Error::Domain {
                map: "endpoint pair",
                value: format!("({fwd}, {bwd})"),
                domain: domain.name(),
            });
        }
        Ok(EndpointPair { fwd, bwd, domain })
    }

    pub fn parse(fwd: &str, bwd: &str, domain: Domain) -> Result<EndpointPair> {
        EndpointPair::new(fwd.parse()?, bwd.parse()?, domain)
    }

    /// Orientation `sign(fwd)`.
    pub fn eps(&self) -> Sign {
        Sign::of(&self.fwd)
    }

    pub fn point(&self) -> StatePoint {
        StatePoint::pair(self.fwd.clone(), self.bwd.clone())
    }
}

impl fmt::Display for EndpointPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.fwd, self.bwd)
    }
}

/// Branch of a section map: the Moebius transformation applied to both endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionBranch {
    pub label: &'static str,
    pub g: Lft,
}

fn n(eps: Sign, k: impl Into<num_bigint::BigInt>) -> num_bigint::BigInt {
    k.into() * eps.value()
}

fn check(map: &'static str, p: &EndpointPair, d: Domain) -> Result<()> {
    if d.contains(&p.fwd, &p.bwd) {
        Ok(())
    } else {
        Err(domain(map, p, d.name()))
    }
}

/// Applies `b` to both endpoints; leaving `d` with an integer or infinite forward endpoint is a cusp.
pub fn apply_section(
    map: &'static str,
    p: &EndpointPair,
    b: &SectionBranch,
    d: Domain,
) -> Result<EndpointPair> {
    let fwd = b.g.apply(&p.fwd);
    let bwd = b.g.apply(&p.bwd);
    if d.contains(&fwd, &bwd) {
        return Ok(EndpointPair { fwd, bwd, domain: d });
    }
    if fwd.is_infinite() || fwd.is_integer() {
        return Err(cusp(map, format!("({fwd}, {bwd})")));
    }
    Err(Error::Domain {
        map,
        value: format!("({fwd}, {bwd})"),
        domain: d.name(),
    })
}

/// `(x, y) -> (1/(eps*n0 - x), 1/(eps*n0 - y))` with `n0 = floor(|x|)`.
pub fn rho_branch(p: &EndpointPair) -> Result<SectionBranch> {
    check("rho", p, Domain::S)?;
    if p.fwd.is_integer() {
        return Err(cusp("rho", &p.fwd));
    }
    let n0 = p.fwd.abs().floor()?;
    Ok(SectionBranch {
        label: "invert",
        g: Lft::invert_from(n(p.eps(), n0)),
    })
}

pub fn rho_step(p: &EndpointPair) -> Result<EndpointPair> {
    apply_section("rho", p, &rho_branch(p)?, Domain::S)
}

/// Translate by `-eps` when `eps*x > 2`, otherwise `1/(eps - .)`.
pub fn sigma_branch(p: &EndpointPair) -> Result<SectionBranch> {
    check("sigma", p, Domain::T)?;
    let e = p.eps();
    Ok(if p.fwd.abs().cmp_int(2).is_gt() {
        SectionBranch {
            label: "translate",
            g: Lft::translate(-e.value()),
        }
    } else {
        SectionBranch {
            label: "invert",
            g: Lft::invert_from(e.value()),
        }
    })
}

/// The branch conditions with translation and inversion interchanged.
/// Kept to exhibit that this reading does not preserve `T`.
pub fn sigma_branch_as_printed(p: &EndpointPair) -> Result<SectionBranch> {
    check("sigma", p, Domain::T)?;
    let e = p.eps();
    Ok(if p.fwd.abs().cmp_int(2).is_le() {
        SectionBranch {
            label: "translate",
            g: Lft::translate(-e.value()),
        }
    } else {
        SectionBranch {
            label: "invert",
            g: Lft::invert_from(e.value()),
        }
    })
}

pub fn sigma_step(p: &EndpointPair) -> Result<EndpointPair> {
    apply_section("sigma", p, &sigma_branch(p)?, Domain::T)
}

/// `(x, y) -> (1/(2k*eps - x), 1/(2k*eps - y))` with `|x|` in `[2k-1, 2k+1)`.
pub fn rho_e_branch(p: &EndpointPair) -> Result<SectionBranch> {
    check("rho_e", p, Domain::Se)?;
    if p.fwd.is_integer() {
        return Err(cusp("rho_e", &p.fwd));
    }
    let k = (p.fwd.abs().floor()? + 1) / 2;
    Ok(SectionBranch {
        label: "invert",
        g: Lft::invert_from(n(p.eps(), k * 2)),
    })
}

pub fn rho_e_step(p: &EndpointPair) -> Result<EndpointPair> {
    apply_section("rho_e", p, &rho_e_branch(p)?, Domain::Se)
}

/// Translate by `-2eps` when `eps*x > 3`, otherwise `1/(2eps - .)`.
pub fn sigma_e_branch(p: &EndpointPair) -> Result<SectionBranch> {
    check("sigma_e", p, Domain::Te)?;
    let e = p.eps();
    Ok(if p.fwd.abs().cmp_int(3).is_gt() {
        SectionBranch {
            label: "translate",
            g: Lft::translate(-2 * e.value()),
        }
    } else {
        SectionBranch {
            label: "invert",
            g: Lft::invert_from(2 * e.value()),
        }
    })
}

pub fn sigma_e_step(p: &EndpointPair) -> Result<EndpointPair> {
    apply_section("sigma_e", p, &sigma_e_branch(p)?, Domain::Te)
}

/// `1/(2eps - .)` on `1 <= eps*x < 3/2`, `1/(eps - .)` on `3/2 <= eps*x < 2`.
pub fn sigma_l_branch(p: &EndpointPair) -> Result<SectionBranch> {
    check("sigma_L", p, Domain::SL)?;
    let e = p.eps();
    Ok(if p.fwd.abs().cmp_rational(&rat(3, 2)).is_lt() {
        SectionBranch {
            label: "invert-2",
            g: Lft::invert_from(2 * e.value()),
        }
    } else {
        SectionBranch {
            label: "invert-1",
            g: Lft::invert_from(e.value()),
        }
    })
}

pub fn sigma_l_step(p: &EndpointPair) -> Result<EndpointPair> {
    apply_section("sigma_L", p, &sigma_l_branch(p)?, Domain::SL)
}

/// Lehner map on `[1,2]`: `1/(2-x)` below 3/2, `1/(x-1)` from 3/2 on.
pub fn lehner_branch(x: &BoundaryPoint) -> Result<(u8, Lft)> {
    if x.cmp_int(1).is_lt() || x.cmp_int(2).is_gt() {
        return Err(domain("lehner", x, "[1,2]"));
    }
    Ok(if x.cmp_rational(&rat(3, 2)).is_lt() {
        (1, Lft::new(0, 1, -1, 2))
    } else {
        (2, Lft::new(0, 1, 1, -1))
    })
}

pub fn lehner_step(x: &BoundaryPoint) -> Result<BoundaryPoint> {
    Ok(lehner_branch(x)?.1.apply(x))
}

/// Natural extension: `(1/(2-x), -1/(2+y))` or `(1/(x-1), 1/(1+y))`.
pub fn lehner_natext_branch(x: &BoundaryPoint) -> Result<NatextBranch> {
    let (b, x_map) = lehner_branch(x)?;
    let y_map = if b == 1 {
        Lft::new(0, -1, 1, 2)
    } else {
        Lft::new(0, 1, 1, 1)
    };
    Ok(NatextBranch {
        label: format!("L{b}"),
        x_map,
        y_map,
        flips: false,
    })
}

pub fn lehner_natext_step(
    x: &BoundaryPoint,
    y: &BoundaryPoint,
) -> Result<(BoundaryPoint, BoundaryPoint)> {
    if y.is_infinite() || y.cmp_int(-1).is_lt() {
        return Err(domain("lehner natext", y, "[-1,∞)"));
    }
    Ok(lehner_natext_branch(x)?.apply(x, y))
}

/// Dual Lehner map on `(1/2,1]`: `1/x - 1` up to 2/3, `2 - 1/x` beyond.
pub fn lehner_dual_branch(x: &BoundaryPoint) -> Result<(u8, Lft)> {
    if x.cmp_rational(&rat(1, 2)).is_le() || x.cmp_int(1).is_gt() {
        return Err(domain("lehner dual", x, "(1/2,1]"));
    }
    Ok(if x.cmp_rational(&rat(2, 3)).is_le() {
        (1, Lft::recip_minus(1))
    } else {
        (2, Lft::minus_recip(2))
    })
}

pub fn lehner_dual_step(x: &BoundaryPoint) -> Result<BoundaryPoint> {
    Ok(lehner_dual_branch(x)?.1.apply(x))
}

/// Lehner digit `(b, e)`: `x = 1/(b + e*x')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LehnerDigit {
    pub b: u8,
    pub e: Sign,
}

impl fmt::Display for LehnerDigit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.b, self.e)
    }
}

/// Digits of `x` in `(1/2, 1]` read off the dual Lehner orbit; a rational orbit ends on reaching `1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LehnerExpansion {
    pub value: BoundaryPoint,
    pub digits: Vec<LehnerDigit>,
    pub remainders: Vec<BoundaryPoint>,
    pub termination: Termination,
}

impl fmt::Display for LehnerExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
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
            Termination::Periodic { .. } => f.write_str(")>"),
            Termination::Truncated => f.write_str("...>"),
            Termination::Finite => f.write_str(">"),
        }
    }
}

pub fn lehner_dual_expand(x: &BoundaryPoint, max_digits: usize) -> Result<LehnerExpansion> {
    lehner_dual_branch(x)?;
    let half = BoundaryPoint::ratio(1, 2);
    let orbit = run_orbit(x.clone(), max_digits, |t| {
        if *t == half {
            return Ok(None);
        }
        let (b, l) = lehner_dual_branch(t)?;
        let e = if b == 1 { Sign::Plus } else { Sign::Minus };
        Ok(Some((LehnerDigit { b, e }, l.apply(t))))
    })?;
    Ok(LehnerExpansion {
        value: x.clone(),
        digits: orbit.digits,
        remainders: orbit.remainders,
        termination: orbit.termination,
    })
}

/// Natural extension of the dual map, conjugate to the Lehner extension by `(x, y) -> (1/x, y)`:
/// `(1/x - 1, 1/(1+y))` on `(1/2, 2/3]` and `(2 - 1/x, -1/(2+y))` on `(2/3, 1]`.
pub fn lehner_dual_natext_branch(x: &BoundaryPoint) -> Result<NatextBranch> {
    let (b, x_map) = lehner_dual_branch(x)?;
    let y_map = if b == 1 {
        Lft::new(0, 1, 1, 1)
    } else {
        Lft::new(0, -1, 1, 2)
    };
    Ok(NatextBranch {
        label: format!("L*{b}"),
        x_map,
        y_map,
        flips: false,
    })
}

pub fn lehner_dual_natext_step(
    x: &BoundaryPoint,
    y: &BoundaryPoint,
) -> Result<(BoundaryPoint, BoundaryPoint)> {
    if y.is_infinite() || y.cmp_int(-1).is_lt() {
        return Err(domain("lehner dual natext", y, "[-1,∞)"));
    }
    Ok(lehner_dual_natext_branch(x)?.apply(x, y))
}

/// Point `(x, y)` of a square or rectangle with an optional orientation tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StatePoint {
    pub x: BoundaryPoint,
    pub y: BoundaryPoint,
    pub eps: Option<i8>,
}

impl StatePoint {
    pub fn pair(x: BoundaryPoint, y: BoundaryPoint) -> StatePoint {
        StatePoint { x, y, eps: None }
    }

    pub fn signed(x: BoundaryPoint, y: BoundaryPoint, eps: Sign) -> StatePoint {
        StatePoint {
            x,
            y,
            eps: Some(eps.value() as i8),
        }
    }

    /// The tag if present, else `sign(x)`.
    pub fn sign(&self) -> Sign {
        match self.eps {
            Some(e) => Sign::from_i8(e),
            None => Sign::of(&self.x),
        }
    }

    pub fn forget_sign(&self) -> StatePoint {
        StatePoint::pair(self.x.clone(), self.y.clone())
    }
}

impl fmt::Display for StatePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.eps {
            Some(e) => write!(f, "({}, {}, {:+})", self.x, self.y, e),
            None => write!(f, "({}, {})", self.x, self.y),
        }
    }
}

/// Lift of a natural extension to the signed square: the sign flips on orientation-reversing branches.
pub fn tilde_step(
    branch: impl Fn(&BoundaryPoint) -> Result<NatextBranch>,
    q: &StatePoint,
) -> Result<StatePoint> {
    let b = branch(&q.x)?;
    let (x, y) = b.apply(&q.x, &q.y);
    let s = q.sign();
    Ok(StatePoint::signed(x, y, if b.flips { s.flip() } else { s }))
}

/// `(x, y, eps) -> (T_e-extension(x, y), -e1(x)*eps)`; `x = 0` is fixed.
pub fn tilde_t_e_step(q: &StatePoint) -> Result<StatePoint> {
    if q.y.is_infinite() || q.y.abs().cmp_int(1).is_gt() {
        return Err(domain("tilde T_e", &q.y, "[-1,1]"));
    }
    if q.x.is_zero() {
        return Ok(q.clone());
    }
    tilde_step(even_gauss_natext_branch, q)
}

/// Even Farey extension with the sign flipped exactly on `x` in `[1/3, 1/2)`.
pub fn tilde_f_e_step(q: &StatePoint) -> Result<StatePoint> {
    if q.y.is_infinite() || q.y.signum() < 0 || q.y.cmp_int(1).is_gt() {
        return Err(domain("tilde F_e", &q.y, "[0,1]"));
    }
    tilde_step(even_farey_natext_branch, q)
}

fn lft(a: i64, b: i64, c: i64, d: i64) -> Lft {
    Lft::new(a, b, c, d)
}

fn signed_out(x: &Lft, y: &Lft, p: &StatePoint, e: Sign) -> StatePoint {
    StatePoint::signed(x.apply(&p.x), y.apply(&p.y), e)
}

/// `J(x, y) = (eps/x, -eps*y, eps)`; also serves as `J_e`.
pub fn j_forward(p: &StatePoint) -> Result<StatePoint> {
    let e = Sign::of(&p.x).value();
    Ok(signed_out(&lft(0, e, 1, 0), &lft(-e, 0, 0, 1), p, Sign::of(&p.x)))
}

pub fn j_inverse(p: &StatePoint) -> Result<StatePoint> {
    let e = p.sign().value();
    Ok(StatePoint::pair(
        lft(0, e, 1, 0).apply(&p.x),
        lft(-e, 0, 0, 1).apply(&p.y),
    ))
}

/// Farey projection `(eps/x, 1/(1 - eps*y), eps)`.
pub fn p_forward(p: &StatePoint) -> Result<StatePoint> {
    let e = Sign::of(&p.x).value();
    Ok(signed_out(&lft(0, e, 1, 0), &lft(0, 1, -e, 1), p, Sign::of(&p.x)))
}

pub fn p_inverse(p: &StatePoint) -> Result<StatePoint> {
    let e = p.sign().value();
    Ok(StatePoint::pair(
        lft(0, e, 1, 0).apply(&p.x),
        lft(e, -e, 1, 0).apply(&p.y),
    ))
}

/// `K_e(x, y) = (eps/x, 1/(2 - eps*y), eps)`.
pub fn k_e_forward(p: &StatePoint) -> Result<StatePoint> {
    let e = Sign::of(&p.x).value();
    Ok(signed_out(&lft(0, e, 1, 0), &lft(0, 1, -e, 2), p, Sign::of(&p.x)))
}

pub fn k_e_inverse(p: &StatePoint) -> Result<StatePoint> {
    let e = p.sign().value();
    Ok(StatePoint::pair(
        lft(0, e, 1, 0).apply(&p.x),
        lft(2 * e, -e, 1, 0).apply(&p.y),
    ))
}

/// `(x, y) -> (1/x + eps, 1/y + eps)`, from `T` to `S_L`.
pub fn diag_forward(p: &StatePoint) -> Result<StatePoint> {
    let e = Sign::of(&p.x).value();
    let m = lft(e, 1, 1, 0);
    Ok(StatePoint::pair(m.apply(&p.x), m.apply(&p.y)))
}

pub fn diag_inverse(p: &StatePoint) -> Result<StatePoint> {
    let e = Sign::of(&p.x).value();
    let m = lft(0, 1, 1, -e);
    Ok(StatePoint::pair(m.apply(&p.x), m.apply(&p.y)))
}

/// `(x, y) -> (eps*x, -eps*y)`, keeping `eps` as a tag.
pub fn v_forward(p: &StatePoint) -> Result<StatePoint> {
    let s = Sign::of(&p.x);
    Ok(StatePoint::signed(s.apply(&p.x), s.flip().apply(&p.y), s))
}

pub fn v_inverse(p: &StatePoint) -> Result<StatePoint> {
    let s = p.sign();
    Ok(StatePoint::pair(s.apply(&p.x), s.flip().apply(&p.y)))
}

/// `(x, y) -> (x + 1, 1/(1-y) - 2)`, from the unit square to the Lehner rectangle.
pub fn h_forward(p: &StatePoint) -> Result<StatePoint> {
    Ok(StatePoint::pair(
        Lft::translate(1).apply(&p.x),
        lft(2, -1, -1, 1).apply(&p.y),
    ))
}

pub fn h_inverse(p: &StatePoint) -> Result<StatePoint> {
    Ok(StatePoint::pair(
        Lft::translate(-1).apply(&p.x),
        lft(1, 1, 1, 2).apply(&p.y),
    ))
}

/// `(x, y) -> (1/x, y)`, from the Lehner rectangle to the dual one.
pub fn w_forward(p: &StatePoint) -> Result<StatePoint> {
    Ok(StatePoint::pair(lft(0, 1, 1, 0).apply(&p.x), p.y.clone()))
}

pub fn w_inverse(p: &StatePoint) -> Result<StatePoint> {
    w_forward(p)
}

/// Projection of `S` onto the unit square, keeping the orientation as a tag.
pub fn vertical_forward(p: &StatePoint) -> Result<StatePoint> {
    p_forward(p)
}

pub fn vertical_inverse(p: &StatePoint) -> Result<StatePoint> {
    p_inverse(p)
}

pub type PointMap = fn(&StatePoint) -> Result<StatePoint>;

/// Named coordinate change with its inverse.
#[derive(Clone, Copy)]
pub struct Conjugacy {
    pub name: &'static str,
    pub domain: &'static str,
    pub codomain: &'static str,
    pub forward: PointMap,
    pub inverse: PointMap,
}

impl fmt::Debug for Conjugacy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.domain, self.codomain)
    }
}

pub fn conjugacy_table() -> Vec<Conjugacy> {
    vec![
        Conjugacy {
            name: "J",
            domain: "S",
            codomain: "[0,1)^2 x {±1}",
            forward: j_forward,
            inverse: j_inverse,
        },
        Conjugacy {
            name: "farey-projection",
            domain: "T",
            codomain: "[0,1)^2 x {±1}",
            forward: p_forward,
            inverse: p_inverse,
        },
        Conjugacy {
            name: "J_e",
            domain: "S_e",
            codomain: "[0,1] x [-1,1] x {±1}",
            forward: j_forward,
            inverse: j_inverse,
        },
        Conjugacy {
            name: "K_e",
            domain: "T_e",
            codomain: "[0,1]^2 x {±1}",
            forward: k_e_forward,
            inverse: k_e_inverse,
        },
        Conjugacy {
            name: "diag",
            domain: "T",
            codomain: "S_L",
            forward: diag_forward,
            inverse: diag_inverse,
        },
        Conjugacy {
            name: "V",
            domain: "S_L",
            codomain: "[1,2) x [-1,∞) x {±1}",
            forward: v_forward,
            inverse: v_inverse,
        },
        Conjugacy {
            name: "h",
            domain: "[0,1)^2",
            codomain: "[1,2) x [-1,∞)",
            forward: h_forward,
            inverse: h_inverse,
        },
        Conjugacy {
            name: "W",
            domain: "[1,2) x [-1,∞)",
            codomain: "(1/2,1] x [-1,∞)",
            forward: w_forward,
            inverse: w_inverse,
        },
        Conjugacy {
            name: "vertical",
            domain: "S",
            codomain: "[0,1)^2",
            forward: vertical_forward,
            inverse: vertical_inverse,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> BoundaryPoint {
        s.parse().unwrap()
    }

    fn pair(f: &str, b: &str, d: Domain) -> EndpointPair {
        EndpointPair::parse(f, b, d).unwrap()
    }

    fn ends(p: &EndpointPair) -> (String, String) {
        (p.fwd.to_string(), p.bwd.to_string())
    }

    #[test]
    fn rho_examples() {
        assert_eq!(ends(&rho_step(&pair("7/3", "-1/2", Domain::S)).unwrap()), ("-3".into(), "2/5".into()));
        assert_eq!(ends(&rho_step(&pair("-7/2", "1/3", Domain::S)).unwrap()), ("2".into(), "-3/10".into()));
        let p = EndpointPair::new(bp("sqrt(2)+1"), bp("1-sqrt(2)"), Domain::S).unwrap();
        let q = rho_step(&p).unwrap();
        assert_eq!((q.fwd, q.bwd), (bp("-sqrt(2)-1"), bp("sqrt(2)-1")));
        assert!(matches!(rho_step(&pair("3", "-1/2", Domain::S)), Err(Error::Cusp { .. })));
    }

    #[test]
    fn sigma_examples() {
        let p = sigma_step(&pair("7/3", "-1/2", Domain::T)).unwrap();
        assert_eq!(ends(&p), ("4/3".into(), "-3/2".into()));
        assert_eq!(ends(&sigma_step(&p).unwrap()), ("-3".into(), "2/5".into()));
        assert_eq!(ends(&sigma_step(&pair("5/2", "-1/4", Domain::T)).unwrap()), ("3/2".into(), "-5/4".into()));
        assert!(matches!(sigma_step(&pair("2", "-1/4", Domain::T)), Err(Error::Cusp { .. })));
    }

    #[test]
    fn printed_sigma_leaves_t() {
        let p = pair("7/3", "-1/2", Domain::T);
        let b = sigma_branch_as_printed(&p).unwrap();
        assert!(apply_section("sigma", &p, &b, Domain::T).is_err());
    }

    #[test]
    fn even_section_examples() {
        assert_eq!(ends(&rho_e_step(&pair("5/2", "1/3", Domain::Se)).unwrap()), ("-2".into(), "3/5".into()));
        assert_eq!(ends(&rho_e_step(&pair("7/2", "-1/3", Domain::Se)).unwrap()), ("2".into(), "3/13".into()));
        assert_eq!(ends(&rho_e_step(&pair("-5/2", "1/3", Domain::Se)).unwrap()), ("2".into(), "-3/7".into()));
        assert_eq!(ends(&sigma_e_step(&pair("5", "-3", Domain::Te)).unwrap()), ("3".into(), "-5".into()));
        assert_eq!(ends(&sigma_e_step(&pair("5/2", "1/3", Domain::Te)).unwrap()), ("-2".into(), "3/5".into()));
        assert_eq!(ends(&sigma_e_step(&pair("3/2", "1/2", Domain::Te)).unwrap()), ("2".into(), "2/3".into()));
    }

    #[test]
    fn sigma_l_and_lehner_examples() {
        assert_eq!(ends(&sigma_l_step(&pair("4/3", "0", Domain::SL)).unwrap()), ("3/2".into(), "1/2".into()));
        assert_eq!(ends(&sigma_l_step(&pair("7/4", "1/2", Domain::SL)).unwrap()), ("-4/3".into(), "2".into()));
        assert_eq!(ends(&sigma_l_step(&pair("-4/3", "0", Domain::SL)).unwrap()), ("-3/2".into(), "-1/2".into()));
        assert_eq!(lehner_step(&bp("4/3")).unwrap(), bp("3/2"));
        assert_eq!(lehner_step(&bp("7/4")).unwrap(), bp("4/3"));
        assert_eq!(lehner_natext_step(&bp("4/3"), &bp("0")).unwrap(), (bp("3/2"), bp("-1/2")));
        assert_eq!(lehner_dual_step(&bp("3/5")).unwrap(), bp("2/3"));
        assert_eq!(lehner_dual_step(&bp("3/4")).unwrap(), bp("2/3"));
        assert_eq!(lehner_dual_step(&bp("1")).unwrap(), bp("1"));
    }

    #[test]
    fn tilde_examples() {
        let q = tilde_t_e_step(&StatePoint::signed(bp("2/5"), bp("-1/3"), Sign::Plus)).unwrap();
        assert_eq!(q.to_string(), "(1/2, 3/5, -1)");
        let q = tilde_t_e_step(&StatePoint::signed(bp("4/7"), bp("0"), Sign::Plus)).unwrap();
        assert_eq!(q.to_string(), "(1/4, -1/2, +1)");
        let q = tilde_f_e_step(&StatePoint::signed(bp("2/5"), bp("3/5"), Sign::Plus)).unwrap();
        assert_eq!(q.to_string(), "(1/2, 5/13, -1)");
        let q = tilde_f_e_step(&StatePoint::signed(bp("1/4"), bp("1/2"), Sign::Plus)).unwrap();
        assert_eq!(q.to_string(), "(1/2, 1/4, +1)");
        let q = tilde_f_e_step(&StatePoint::signed(bp("3/4"), bp("0"), Sign::Minus)).unwrap();
        assert_eq!(q.to_string(), "(2/3, 1/2, -1)");
    }

    #[test]
    fn coordinate_changes() {
        let p = StatePoint::pair(bp("5/2"), bp("1/3"));
        assert_eq!(k_e_forward(&p).unwrap().to_string(), "(2/5, 3/5, +1)");
        assert_eq!(j_forward(&p).unwrap().to_string(), "(2/5, -1/3, +1)");
        let q = StatePoint::pair(bp("1/3"), bp("1/2"));
        assert_eq!(h_forward(&q).unwrap().to_string(), "(4/3, 0)");
        for c in conjugacy_table() {
            let pt = match c.domain {
                "S" | "T" | "S_e" | "T_e" => StatePoint::pair(bp("-7/3"), bp("2/5")),
                "S_L" => StatePoint::pair(bp("-4/3"), bp("1/2")),
                "[0,1)^2" => StatePoint::pair(bp("1/3"), bp("2/7")),
                _ => StatePoint::pair(bp("5/3"), bp("3")),
            };
            let back = (c.inverse)(&(c.forward)(&pt).unwrap()).unwrap();
            assert_eq!(back, pt, "{}", c.name);
        }
    }

    #[test]
    fn lehner_dual_digits() {
        let e = lehner_dual_expand(&bp("3/5"), 20).unwrap();
        let d: Vec<String> = e.digits.iter().map(|d| d.to_string()).collect();
        // 3/5 = 1/(1 + 2/3), 2/3 = 1/(1 + 1/2)
        assert_eq!(d, ["(1,+1)", "(1,+1)"]);
        assert_eq!(e.termination, Termination::Finite);
        let one = lehner_dual_expand(&bp("1"), 20).unwrap();
        assert_eq!(one.termination, Termination::Periodic { start: 0, len: 1 });
        assert!(lehner_dual_expand(&bp("1/3"), 5).is_err());
    }
}
