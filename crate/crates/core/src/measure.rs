//! Invariant densities of the natural extensions and their exact checks.
//!
//! Every density here has the form `1/(A + B*y)^2` with `A`, `B` depending on
//! `x` only, so y-marginals integrate in closed form over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cf::{farey_natext_branch, gauss_natext_branch, NatextBranch, NatextFn};
use crate::ecf::{even_farey_natext_branch, even_gauss_natext_branch};
use crate::error::{domain, Error, Result};
use crate::numeric::{rat, BoundaryPoint, Rational};
use crate::sample::{rational_in, rng_for};
use crate::section::{lehner_dual_natext_branch, lehner_natext_branch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DensityId {
    /// `1/(1+xy)^2` on `[0,1]^2`.
    GaussExt,
    /// `1/(1+xy)^2` on `[0,1] x [-1,1]`.
    EvenGaussExt,
    /// `1/(x+y-xy)^2` on `[0,1]^2`.
    FareyExt,
    /// `1/(x+y-2xy)^2` on `[0,1]^2`.
    EvenFareyExt,
    /// `1/(x+y)^2` on `[1,2] x [-1,∞)`.
    LehnerExt,
    /// `1/(1+xy)^2` on `[1/2,1] x [-1,∞)`.
    LehnerDualExt,
}

/// Closed rectangle; `y_hi = None` means unbounded above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rectangle {
    pub x_lo: Rational,
    pub x_hi: Rational,
    pub y_lo: Rational,
    pub y_hi: Option<Rational>,
}

impl Rectangle {
    fn contains(&self, x: &Rational, y: &Rational) -> bool {
        &self.x_lo <= x
            && x <= &self.x_hi
            && &self.y_lo <= y
            && self.y_hi.as_ref().is_none_or(|h| y <= h)
    }
}

impl DensityId {
    pub const ALL: [DensityId; 6] = [
        DensityId::GaussExt,
        DensityId::EvenGaussExt,
        DensityId::FareyExt,
        DensityId::EvenFareyExt,
        DensityId::LehnerExt,
        DensityId::LehnerDualExt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DensityId::GaussExt => "gauss",
            DensityId::EvenGaussExt => "even-gauss",
            DensityId::FareyExt => "farey",
            DensityId::EvenFareyExt => "even-farey",
            DensityId::LehnerExt => "lehner",
            DensityId::LehnerDualExt => "lehner-dual",
        }
    }

    pub fn rectangle(self) -> Rectangle {
        let (x_lo, x_hi, y_lo, y_hi) = match self {
            DensityId::GaussExt | DensityId::FareyExt | DensityId::EvenFareyExt => {
                (rat(0, 1), rat(1, 1), rat(0, 1), Some(rat(1, 1)))
            }
            DensityId::EvenGaussExt => (rat(0, 1), rat(1, 1), rat(-1, 1), Some(rat(1, 1))),
            DensityId::LehnerExt => (rat(1, 1), rat(2, 1), rat(-1, 1), None),
            DensityId::LehnerDualExt => (rat(1, 2), rat(1, 1), rat(-1, 1), None),
        };
        Rectangle {
            x_lo,
            x_hi,
            y_lo,
            y_hi,
        }
    }

    /// `(A, B)` with density `1/(A + B*y)^2` on the fibre over `x`.
    fn coefficients(self, x: &Rational) -> (Rational, Rational) {
        match self {
            DensityId::GaussExt | DensityId::EvenGaussExt | DensityId::LehnerDualExt => {
                (Rational::one(), x.clone())
            }
            DensityId::FareyExt => (x.clone(), Rational::one() - x),
            DensityId::EvenFareyExt => (x.clone(), Rational::one() - rat(2, 1) * x),
            DensityId::LehnerExt => (x.clone(), Rational::one()),
        }
    }

    /// Closed form of the y-marginal.
    pub fn marginal_closed_form(self, x: &Rational) -> Result<Rational> {
        let one = Rational::one();
        let den = match self {
            DensityId::GaussExt => &one + x,
            DensityId::EvenGaussExt => (&one - x * x) / rat(2, 1),
            DensityId::FareyExt => x.clone(),
            DensityId::EvenFareyExt | DensityId::LehnerDualExt => x * (&one - x),
            DensityId::LehnerExt => x - &one,
        };
        if den.is_zero() {
            return Err(domain("marginal", x, "points with a finite marginal"));
        }
        Ok(one / den)
    }
}

pub fn density_eval(id: DensityId, x: &Rational, y: &Rational) -> Result<Rational> {
    if !id.rectangle().contains(x, y) {
        return Err(domain(id.name(), format!("({x}, {y})"), "the density's rectangle"));
    }
    let (a, b) = id.coefficients(x);
    let l = a + b * y;
    if l.is_zero() {
        return Err(domain(id.name(), format!("({x}, {y})"), "points with a finite density"));
    }
    Ok(Rational::one() / (&l * &l))
}

/// `∫ dy/(A+By)^2` over the fibre, computed from the antiderivative `-1/(B(A+By))`.
pub fn marginal(id: DensityId, x: &Rational) -> Result<Rational> {
    let r = id.rectangle();
    if x < &r.x_lo || x > &r.x_hi {
        return Err(domain(id.name(), x, "the density's x-range"));
    }
    let (a, b) = id.coefficients(x);
    let at = |y: &Rational| &a + &b * y;
    let (lo, hi) = (at(&r.y_lo), r.y_hi.as_ref().map(at));
    let diverges = || domain("marginal", x, "points with a finite marginal");
    if lo.is_zero() || hi.as_ref().is_some_and(|h| h.is_zero() || h.signum() != lo.signum()) {
        return Err(diverges());
    }
    match (b.is_zero(), hi) {
        (true, Some(_)) => {
            let len = r.y_hi.expect("bounded") - &r.y_lo;
            Ok(len / (&a * &a))
        }
        (true, None) => Err(diverges()),
        (false, Some(hi)) => Ok((Rational::one() / &lo - Rational::one() / hi) / &b),
        (false, None) if b.is_positive() => Ok(Rational::one() / (&b * &lo)),
        (false, None) => Err(diverges()),
    }
}

/// `(computed, closed_form)`.
pub fn marginal_check(id: DensityId, x: &Rational) -> Result<(Rational, Rational)> {
    Ok((marginal(id, x)?, id.marginal_closed_form(x)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NatextMap {
    Gauss,
    EvenGauss,
    Farey,
    EvenFarey,
    Lehner,
    LehnerDual,
}

/// Number of leading branches sampled individually for maps with infinitely many branches.
pub const STRATIFIED_BRANCHES: i64 = 20;

impl NatextMap {
    pub const ALL: [NatextMap; 6] = [
        NatextMap::Gauss,
        NatextMap::EvenGauss,
        NatextMap::Farey,
        NatextMap::EvenFarey,
        NatextMap::Lehner,
        NatextMap::LehnerDual,
    ];

    pub fn name(self) -> &'static str {
        self.density().name()
    }

    pub fn density(self) -> DensityId {
        match self {
            NatextMap::Gauss => DensityId::GaussExt,
            NatextMap::EvenGauss => DensityId::EvenGaussExt,
            NatextMap::Farey => DensityId::FareyExt,
            NatextMap::EvenFarey => DensityId::EvenFareyExt,
            NatextMap::Lehner => DensityId::LehnerExt,
            NatextMap::LehnerDual => DensityId::LehnerDualExt,
        }
    }

    pub fn branch_fn(self) -> NatextFn {
        match self {
            NatextMap::Gauss => gauss_natext_branch,
            NatextMap::EvenGauss => even_gauss_natext_branch,
            NatextMap::Farey => farey_natext_branch,
            NatextMap::EvenFarey => even_farey_natext_branch,
            NatextMap::Lehner => lehner_natext_branch,
            NatextMap::LehnerDual => lehner_dual_natext_branch,
        }
    }

    pub fn branch(self, x: &BoundaryPoint) -> Result<NatextBranch> {
        self.branch_fn()(x)
    }

    /// Open x-intervals of the branches that are sampled individually.
    pub fn branch_intervals(self) -> Vec<(Rational, Rational)> {
        let r = |n, d| rat(n, d);
        match self {
            NatextMap::Gauss => (1..=STRATIFIED_BRANCHES)
                .map(|k| (r(1, k + 1), r(1, k)))
                .collect(),
            NatextMap::EvenGauss => (1..=STRATIFIED_BRANCHES / 2)
                .flat_map(|k| [(r(1, 2 * k + 1), r(1, 2 * k)), (r(1, 2 * k), r(1, 2 * k - 1))])
                .collect(),
            NatextMap::Farey => vec![(r(0, 1), r(1, 2)), (r(1, 2), r(1, 1))],
            NatextMap::EvenFarey => vec![(r(0, 1), r(1, 3)), (r(1, 3), r(1, 2)), (r(1, 2), r(1, 1))],
            NatextMap::Lehner => vec![(r(1, 1), r(3, 2)), (r(3, 2), r(2, 1))],
            NatextMap::LehnerDual => vec![(r(1, 2), r(2, 3)), (r(2, 3), r(1, 1))],
        }
    }

    fn on_cut_line(self, x: &Rational) -> bool {
        let inv = || (Rational::one() / x).is_integer();
        match self {
            NatextMap::Gauss => x.is_zero() || inv(),
            NatextMap::EvenGauss => {
                x.is_zero() || (inv() && (Rational::one() / x).to_integer() % 2 != 0.into())
            }
            NatextMap::Farey => x.is_zero() || *x == rat(1, 2),
            NatextMap::EvenFarey => *x == rat(1, 3) || *x == rat(1, 2),
            NatextMap::Lehner => *x == rat(3, 2),
            NatextMap::LehnerDual => *x == rat(2, 3),
        }
    }

    /// Open y-range used for sampling.
    fn sample_y_range(self) -> (Rational, Rational) {
        let r = self.density().rectangle();
        (r.y_lo, r.y_hi.unwrap_or_else(|| rat(20, 1)))
    }
}

/// `density(F(p)) * |J_x| * |J_y| - density(p)` for an arbitrary density.
pub fn pushforward_residual_with(
    map: NatextMap,
    branch: NatextFn,
    density: impl Fn(&Rational, &Rational) -> Result<Rational>,
    x: &Rational,
    y: &Rational,
) -> Result<(String, Rational)> {
    if map.on_cut_line(x) {
        return Err(Error::CutLine {
            map: map.name(),
            value: x.to_string(),
        });
    }
    let br = branch(&BoundaryPoint::Rational(x.clone()))?;
    let (xi, yi) = br.apply(&BoundaryPoint::Rational(x.clone()), &BoundaryPoint::Rational(y.clone()));
    let (xi, yi) = match (xi.as_rational(), yi.as_rational()) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => return Err(domain(map.name(), format!("({x}, {y})"), "points with a finite image")),
    };
    let jac = br.x_map.jacobian_at(x)? * br.y_map.jacobian_at(y)?;
    Ok((br.label, density(&xi, &yi)? * jac - density(x, y)?))
}

/// Pointwise invariance residual of the map's own density; zero iff the identity holds at `p`.
pub fn pushforward_residual(map: NatextMap, x: &Rational, y: &Rational) -> Result<Rational> {
    let id = map.density();
    Ok(pushforward_residual_with(map, map.branch_fn(), |a, b| density_eval(id, a, b), x, y)?.1)
}

/// Sample `index` of a sweep: cycles through the stratified branches and, one
/// slot in every `n + 1`, the whole x-range.
pub fn sample_point(map: NatextMap, seed: u64, index: u64, max_den: i64) -> (Rational, Rational) {
    let mut rng = rng_for(seed, index);
    let strata = map.branch_intervals();
    let slot = (index % (strata.len() as u64 + 1)) as usize;
    let (lo, hi) = strata.get(slot).cloned().unwrap_or_else(|| {
        let r = map.density().rectangle();
        (r.x_lo, r.x_hi)
    });
    let (ylo, yhi) = map.sample_y_range();
    loop {
        let x = rational_in(&mut rng, &lo, &hi, max_den);
        if map.on_cut_line(&x) {
            continue;
        }
        return (x, rational_in(&mut rng, &ylo, &yhi, max_den));
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureReport {
    pub map: NatextMap,
    pub points: usize,
    pub max_abs_residual: String,
    pub branch_coverage: BTreeMap<String, usize>,
    pub failures: Vec<(String, String)>,
}

impl MeasureReport {
    pub fn passed(&self, min_coverage: usize) -> bool {
        self.failures.is_empty()
            && self.max_abs_residual == "0"
            && self.branch_coverage.values().all(|&c| c >= min_coverage)
    }
}

/// Exact residual sweep over `n` sampled points, tallying branch labels of the stratified branches.
pub fn residual_sweep(map: NatextMap, seed: u64, n: usize) -> MeasureReport {
    residual_sweep_with(map, map.branch_fn(), seed, n)
}

/// [`residual_sweep`] with the branch selector supplied by the caller.
pub fn residual_sweep_with(map: NatextMap, branch: NatextFn, seed: u64, n: usize) -> MeasureReport {
    use rayon::prelude::*;
    let results: Vec<_> = (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let (x, y) = sample_point(map, seed, i, 1000);
            let id = map.density();
            let r = pushforward_residual_with(map, branch, |a, b| density_eval(id, a, b), &x, &y);
            (x, y, r)
        })
        .collect();
    let mut coverage: BTreeMap<String, usize> = map
        .branch_intervals()
        .iter()
        .map(|(lo, hi)| {
            let mid = BoundaryPoint::Rational((lo + hi) / rat(2, 1));
            (map.branch(&mid).expect("interior").label, 0)
        })
        .collect();
    let mut max = Rational::zero();
    let mut failures = Vec::new();
    for (x, y, r) in results {
        match r {
            Ok((label, res)) => {
                if let Some(c) = coverage.get_mut(&label) {
                    *c += 1;
                }
                if res.abs() > max {
                    max = res.abs();
                }
                if !res.is_zero() && failures.len() < 5 {
                    failures.push((format!("({x}, {y})"), res.to_string()));
                }
            }
            Err(e) => {
                if failures.len() < 5 {
                    failures.push((format!("({x}, {y})"), e.to_string()));
                }
            }
        }
    }
    MeasureReport {
        map,
        points: n,
        max_abs_residual: max.to_string(),
        branch_coverage: coverage,
        failures,
    }
}

/// `∫_0^1 ∫_0^1 dy dx/(1+xy)^2`: exact inner integral, composite Simpson rule with `n` panels outside.
pub fn gauss_total_mass(n: usize) -> f64 {
    let n = n.max(2) & !1;
    let f = |i: usize| {
        let x = rat(i as i64, n as i64);
        marginal(DensityId::GaussExt, &x)
            .expect("finite")
            .to_f64()
            .unwrap_or(f64::NAN)
    };
    let inner: f64 = (1..n)
        .map(|i| if i % 2 == 1 { 4.0 * f(i) } else { 2.0 * f(i) })
        .sum();
    (f(0) + inner + f(n)) / (3.0 * n as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Observable {
    Constant(f64),
    /// Indicator of `[x_lo, x_hi) x [y_lo, y_hi)`.
    Rectangle {
        x_lo: f64,
        x_hi: f64,
        y_lo: f64,
        y_hi: f64,
    },
}

impl Observable {
    pub fn x_below(t: f64) -> Observable {
        Observable::Rectangle {
            x_lo: f64::NEG_INFINITY,
            x_hi: t,
            y_lo: f64::NEG_INFINITY,
            y_hi: f64::INFINITY,
        }
    }

    fn eval(&self, x: f64, y: f64) -> f64 {
        match *self {
            Observable::Constant(c) => c,
            Observable::Rectangle {
                x_lo,
                x_hi,
                y_lo,
                y_hi,
            } => {
                if (x_lo..x_hi).contains(&x) && (y_lo..y_hi).contains(&y) {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }
}

/// Time average of `obs` along `n` steps of the Gauss natural extension in
/// double precision. Only the Gauss system has a finite invariant measure.
pub fn birkhoff_average(map: NatextMap, obs: Observable, start: (f64, f64), n: usize) -> Result<f64> {
    if map != NatextMap::Gauss {
        return Err(Error::Unsupported(format!(
            "{} has an infinite invariant measure",
            map.name()
        )));
    }
    if n == 0 {
        return Err(Error::Unsupported("empty orbit".into()));
    }
    if let Observable::Constant(c) = obs {
        return Ok(c);
    }
    let reseed = std::f64::consts::SQRT_2 - 1.0;
    let (mut x, mut y) = start;
    let mut sum = 0.0;
    for _ in 0..n {
        sum += obs.eval(x, y);
        if !(x > 0.0 && x < 1.0) {
            x = reseed;
        }
        let inv = 1.0 / x;
        let k = inv.floor();
        x = inv - k;
        y = 1.0 / (k + y);
    }
    Ok(sum / n as f64)
}
