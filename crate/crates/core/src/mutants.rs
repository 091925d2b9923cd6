//! Single-constant mutations of the map table, used to check that the
//! verification suites notice a wrong branch constant.

use num_bigint::BigInt;

use crate::cf::{
    farey_branch, farey_natext_branch, gauss_branch, gauss_natext_branch, NatextBranch,
};
use crate::ecf::{
    even_farey_branch, even_farey_natext_branch, even_gauss_branch, even_gauss_natext_branch,
    EcfDigit, Sign,
};
use crate::error::Result;
use crate::moebius::Lft;
use crate::numeric::{rat, BoundaryPoint};
use crate::section::{
    lehner_dual_natext_branch, lehner_natext_branch, rho_branch, rho_e_branch, sigma_branch,
    sigma_e_branch, sigma_l_branch, EndpointPair, SectionBranch,
};
use crate::verify::MapTable;

#[derive(Clone, Copy)]
pub struct Mutant {
    pub name: &'static str,
    pub apply: fn(&mut MapTable),
}

impl Mutant {
    pub fn table(&self) -> MapTable {
        let mut t = MapTable::default();
        (self.apply)(&mut t);
        t
    }
}

impl std::fmt::Debug for Mutant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name)
    }
}

fn eps(p: &EndpointPair) -> i64 {
    p.eps().value()
}

fn with_g(p: &EndpointPair, f: fn(&EndpointPair) -> Result<SectionBranch>, label: &str, g: Lft) -> Result<SectionBranch> {
    let mut b = f(p)?;
    if b.label == label {
        b.g = g;
    }
    Ok(b)
}

fn rho_n0_plus_one(p: &EndpointPair) -> Result<SectionBranch> {
    let n0 = p.fwd.abs().floor()? + 1;
    with_g(p, rho_branch, "invert", Lft::invert_from(n0 * eps(p)))
}

fn sigma_translate_two(p: &EndpointPair) -> Result<SectionBranch> {
    with_g(p, sigma_branch, "translate", Lft::translate(-2 * eps(p)))
}

fn sigma_invert_two(p: &EndpointPair) -> Result<SectionBranch> {
    with_g(p, sigma_branch, "invert", Lft::invert_from(2 * eps(p)))
}

fn sigma_threshold_three(p: &EndpointPair) -> Result<SectionBranch> {
    let e = eps(p);
    let mut b = sigma_branch(p)?;
    if p.fwd.abs().cmp_int(3).is_le() {
        b.g = Lft::invert_from(e);
    }
    Ok(b)
}

fn rho_e_digit_plus_two(p: &EndpointPair) -> Result<SectionBranch> {
    let k: BigInt = (p.fwd.abs().floor()? + 1) / 2;
    with_g(p, rho_e_branch, "invert", Lft::invert_from((k * 2 + 2) * eps(p)))
}

fn sigma_e_translate_one(p: &EndpointPair) -> Result<SectionBranch> {
    with_g(p, sigma_e_branch, "translate", Lft::translate(-eps(p)))
}

/// The "2" in `1/(2eps - x)` replaced by 1.
fn sigma_e_invert_one(p: &EndpointPair) -> Result<SectionBranch> {
    with_g(p, sigma_e_branch, "invert", Lft::invert_from(eps(p)))
}

fn sigma_e_threshold_five(p: &EndpointPair) -> Result<SectionBranch> {
    let mut b = sigma_e_branch(p)?;
    if p.fwd.abs().cmp_int(5).is_le() {
        b.g = Lft::invert_from(2 * eps(p));
    }
    Ok(b)
}

fn sigma_l_threshold(p: &EndpointPair) -> Result<SectionBranch> {
    let mut b = sigma_l_branch(p)?;
    if p.fwd.abs().cmp_rational(&rat(5, 4)).is_ge() {
        b.g = Lft::invert_from(eps(p));
    }
    Ok(b)
}

fn sigma_l_invert_three(p: &EndpointPair) -> Result<SectionBranch> {
    with_g(p, sigma_l_branch, "invert-2", Lft::invert_from(3 * eps(p)))
}

fn gauss_y_shift(x: &BoundaryPoint) -> Result<NatextBranch> {
    let mut b = gauss_natext_branch(x)?;
    b.y_map = Lft::from_big(0.into(), 1.into(), 1.into(), &b.y_map.d + 1);
    Ok(b)
}

fn farey_y_branch1(x: &BoundaryPoint) -> Result<NatextBranch> {
    let mut b = farey_natext_branch(x)?;
    if b.label == "F1" {
        b.y_map = Lft::new(1, 0, 1, 2);
    }
    Ok(b)
}

fn farey_natext_threshold(x: &BoundaryPoint) -> Result<NatextBranch> {
    let mut b = farey_natext_branch(x)?;
    if x.cmp_rational(&rat(1, 2)).is_lt() && x.cmp_rational(&rat(1, 3)).is_ge() {
        b = farey_natext_branch(&BoundaryPoint::one())?;
    }
    Ok(b)
}

fn even_gauss_y_shift(x: &BoundaryPoint) -> Result<NatextBranch> {
    let mut b = even_gauss_natext_branch(x)?;
    b.y_map = Lft::from_big(0.into(), b.y_map.b.clone(), 1.into(), &b.y_map.d + 2);
    Ok(b)
}

fn even_gauss_flip_sign(x: &BoundaryPoint) -> Result<NatextBranch> {
    let mut b = even_gauss_natext_branch(x)?;
    b.flips = !b.flips;
    Ok(b)
}

fn even_farey_threshold(x: &BoundaryPoint) -> Result<NatextBranch> {
    if x.cmp_rational(&rat(1, 4)).is_ge() && x.cmp_rational(&rat(1, 3)).is_lt() {
        let mut b = even_farey_natext_branch(&BoundaryPoint::ratio(2, 5))?;
        b.label = "Fe1".into();
        return Ok(b);
    }
    even_farey_natext_branch(x)
}

fn even_farey_y_branch3(x: &BoundaryPoint) -> Result<NatextBranch> {
    let mut b = even_farey_natext_branch(x)?;
    if b.label == "Fe3" {
        b.y_map = Lft::new(0, 1, -1, 3);
    }
    Ok(b)
}

fn even_farey_x_branch2(x: &BoundaryPoint) -> Result<NatextBranch> {
    let mut b = even_farey_natext_branch(x)?;
    if b.label == "Fe2" {
        b.x_map = Lft::new(-3, 1, 1, 0);
    }
    Ok(b)
}

fn lehner_x_branch1(x: &BoundaryPoint) -> Result<NatextBranch> {
    let mut b = lehner_natext_branch(x)?;
    if b.label == "L1" {
        b.x_map = Lft::new(0, 1, -1, 3);
    }
    Ok(b)
}

fn lehner_threshold(x: &BoundaryPoint) -> Result<NatextBranch> {
    if x.cmp_rational(&rat(3, 2)).is_ge() && x.cmp_rational(&rat(5, 3)).is_lt() {
        let mut b = lehner_natext_branch(&BoundaryPoint::integer(1))?;
        b.label = "L2".into();
        return Ok(b);
    }
    lehner_natext_branch(x)
}

fn lehner_dual_y_branch2(x: &BoundaryPoint) -> Result<NatextBranch> {
    let mut b = lehner_dual_natext_branch(x)?;
    if b.label == "L*2" {
        b.y_map = Lft::new(0, -1, 1, 3);
    }
    Ok(b)
}

fn farey_threshold(x: &BoundaryPoint) -> Result<(u8, Lft)> {
    if x.cmp_rational(&rat(1, 3)).is_ge() && x.cmp_rational(&rat(1, 2)).is_lt() {
        return Ok((2, Lft::new(-1, 1, 1, 0)));
    }
    farey_branch(x)
}

fn gauss_digit_plus_one(x: &BoundaryPoint) -> Result<(BigInt, Lft)> {
    let (k, _) = gauss_branch(x)?;
    Ok((k.clone(), Lft::recip_minus(k + 1)))
}

fn even_farey_branch3(x: &BoundaryPoint) -> Result<(u8, Lft)> {
    let (b, l) = even_farey_branch(x)?;
    Ok(if b == 3 { (3, Lft::new(3, -1, 1, 0)) } else { (b, l) })
}

fn even_gauss_digit_plus_two(x: &BoundaryPoint) -> Result<(EcfDigit, Lft)> {
    let (d, _) = even_gauss_branch(x)?;
    let e = d.eps;
    let d = EcfDigit { a: &d.a + 2, eps: e };
    let l = match e {
        Sign::Plus => Lft::recip_minus(d.a.clone()),
        Sign::Minus => Lft::minus_recip(d.a.clone()),
    };
    Ok((d, l))
}

/// Every mutant, each differing from the default table in one constant.
pub fn all() -> Vec<Mutant> {
    macro_rules! m {
        ($name:literal, $field:ident, $f:ident) => {
            Mutant {
                name: $name,
                apply: |t| t.$field = $f,
            }
        };
    }
    vec![
        m!("rho-n0", rho, rho_n0_plus_one),
        m!("sigma-translate", sigma, sigma_translate_two),
        m!("sigma-invert", sigma, sigma_invert_two),
        m!("sigma-threshold", sigma, sigma_threshold_three),
        m!("rho_e-digit", rho_e, rho_e_digit_plus_two),
        m!("sigma_e-translate", sigma_e, sigma_e_translate_one),
        m!("sigma_e-invert", sigma_e, sigma_e_invert_one),
        m!("sigma_e-threshold", sigma_e, sigma_e_threshold_five),
        m!("sigma_L-threshold", sigma_l, sigma_l_threshold),
        m!("sigma_L-invert", sigma_l, sigma_l_invert_three),
        m!("gauss-natext-y", gauss_natext, gauss_y_shift),
        m!("farey-natext-y", farey_natext, farey_y_branch1),
        m!("farey-natext-threshold", farey_natext, farey_natext_threshold),
        m!("even-gauss-natext-y", even_gauss_natext, even_gauss_y_shift),
        m!("even-gauss-natext-sign", even_gauss_natext, even_gauss_flip_sign),
        m!("even-farey-natext-threshold", even_farey_natext, even_farey_threshold),
        m!("even-farey-natext-y", even_farey_natext, even_farey_y_branch3),
        m!("even-farey-natext-x", even_farey_natext, even_farey_x_branch2),
        m!("lehner-natext-x", lehner_natext, lehner_x_branch1),
        m!("lehner-natext-threshold", lehner_natext, lehner_threshold),
        m!("lehner-dual-natext-y", lehner_dual_natext, lehner_dual_y_branch2),
        m!("farey-threshold", farey, farey_threshold),
        m!("gauss-digit", gauss, gauss_digit_plus_one),
        m!("even-farey-branch3", even_farey, even_farey_branch3),
        m!("even-gauss-digit", even_gauss, even_gauss_digit_plus_two),
    ]
}

pub fn by_name(name: &str) -> Option<Mutant> {
    all().into_iter().find(|m| m.name == name)
}
