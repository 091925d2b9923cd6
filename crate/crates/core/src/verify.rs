//! Mechanical verification suites.
//!
//! Each suite samples seeded random exact points, evaluates both sides of an
//! identity and records the outcome. The maps come from a [`MapTable`] so that
//! the same suites can be run against deliberately broken tables
//! (see [`crate::mutants`]).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::cf::{
    farey_branch, farey_natext_branch, gauss_branch, gauss_natext_branch, NatextFn,
};
use crate::cutting::{
    digits_from_even_symbols, even_sequence_from_digits, even_sequence_geometric,
    recode_series_with_start, series_sequence_from_digits, symbols_to_string, Symbol,
};
use crate::ecf::{
    ecf_expand, even_farey_branch, even_farey_natext_branch, even_gauss_branch,
    even_gauss_natext_branch, ext_ecf_expand, EcfDigit, Sign,
};
use crate::error::{Error, Result};
use crate::measure::{
    birkhoff_average, gauss_total_mass, marginal_check, residual_sweep_with,
    DensityId, NatextMap, Observable,
};
use crate::moebius::Lft;
use crate::numeric::{rat, BoundaryPoint, Rational};
use crate::sample::{even_geodesic, non_integer_in, rational_in, rng_for, sign};
use crate::section::{
    diag_forward, h_forward, j_forward, k_e_forward, lehner_dual_natext_branch,
    lehner_natext_branch, p_forward, rho_branch, rho_e_branch, sigma_branch, sigma_e_branch,
    sigma_l_branch, v_forward, w_forward, apply_section, tilde_step, Domain, EndpointPair,
    SectionBranch, StatePoint,
};

pub type SectionFn = fn(&EndpointPair) -> Result<SectionBranch>;

/// Every map the suites evaluate.
#[derive(Clone, Copy)]
pub struct MapTable {
    pub gauss: fn(&BoundaryPoint) -> Result<(BigInt, Lft)>,
    pub farey: fn(&BoundaryPoint) -> Result<(u8, Lft)>,
    pub even_gauss: fn(&BoundaryPoint) -> Result<(EcfDigit, Lft)>,
    pub even_farey: fn(&BoundaryPoint) -> Result<(u8, Lft)>,
    pub gauss_natext: NatextFn,
    pub farey_natext: NatextFn,
    pub even_gauss_natext: NatextFn,
    pub even_farey_natext: NatextFn,
    pub lehner_natext: NatextFn,
    pub lehner_dual_natext: NatextFn,
    pub rho: SectionFn,
    pub sigma: SectionFn,
    pub rho_e: SectionFn,
    pub sigma_e: SectionFn,
    pub sigma_l: SectionFn,
}

impl Default for MapTable {
    fn default() -> MapTable {
        MapTable {
            gauss: gauss_branch,
            farey: farey_branch,
            even_gauss: even_gauss_branch,
            even_farey: even_farey_branch,
            gauss_natext: gauss_natext_branch,
            farey_natext: farey_natext_branch,
            even_gauss_natext: even_gauss_natext_branch,
            even_farey_natext: even_farey_natext_branch,
            lehner_natext: lehner_natext_branch,
            lehner_dual_natext: lehner_dual_natext_branch,
            rho: rho_branch,
            sigma: sigma_branch,
            rho_e: rho_e_branch,
            sigma_e: sigma_e_branch,
            sigma_l: sigma_l_branch,
        }
    }
}

impl MapTable {
    fn natext(&self, m: NatextMap) -> NatextFn {
        match m {
            NatextMap::Gauss => self.gauss_natext,
            NatextMap::EvenGauss => self.even_gauss_natext,
            NatextMap::Farey => self.farey_natext,
            NatextMap::EvenFarey => self.even_farey_natext,
            NatextMap::Lehner => self.lehner_natext,
            NatextMap::LehnerDual => self.lehner_dual_natext,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Conjugacy,
    Box,
    Slowdown,
    Measure,
    Coding,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Conjugacy,
        Suite::Box,
        Suite::Slowdown,
        Suite::Measure,
        Suite::Coding,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Conjugacy => "conjugacy",
            Suite::Box => "box",
            Suite::Slowdown => "slowdown",
            Suite::Measure => "measure",
            Suite::Coding => "coding",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    /// Tolerance for floating-point checks only.
    pub tol: f64,
    /// Coding window in symbols per side.
    pub window: usize,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig {
            samples: 1000,
            seed: 0,
            tol: 1e-9,
            window: 30,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub point: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

impl CheckRecord {
    fn new(id: &str, point: impl ToString, lhs: impl ToString, rhs: impl ToString, equal: bool) -> Self {
        CheckRecord {
            id: id.to_string(),
            point: point.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            equal,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub records: Vec<CheckRecord>,
    /// Samples dropped because an orbit ran into a cusp.
    pub skipped: usize,
    pub notes: BTreeMap<String, String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.equal)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.equal)
    }

    /// The failing record with the shortest point description.
    pub fn counterexample(&self) -> Option<&CheckRecord> {
        self.failures().min_by_key(|r| (r.point.len(), r.point.clone()))
    }

    pub fn summary(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "checks": self.records.len(),
            "failures": self.failures().count(),
            "skipped": self.skipped,
            "passed": self.passed(),
            "notes": self.notes,
            "counterexample": self.counterexample(),
        })
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig, t: &MapTable) -> SuiteReport {
    let mut report = SuiteReport {
        suite,
        records: Vec::new(),
        skipped: 0,
        notes: BTreeMap::new(),
    };
    match suite {
        Suite::Conjugacy => conjugacy(cfg, t, &mut report),
        Suite::Box => box_faces(cfg, t, &mut report),
        Suite::Slowdown => slowdown(cfg, t, &mut report),
        Suite::Measure => measure(cfg, t, &mut report),
        Suite::Coding => coding(cfg, &mut report),
    }
    report
}

/// Runs `check` on `n` indices in parallel and appends records in index order.
fn sweep(
    id: &str,
    n: usize,
    report: &mut SuiteReport,
    check: impl Fn(u64) -> (String, Result<(String, String)>) + Sync + Send,
) {
    let out: Vec<(String, Result<(String, String)>)> =
        (0..n as u64).into_par_iter().map(check).collect();
    for (point, r) in out {
        match r {
            Ok((lhs, rhs)) => {
                let eq = lhs == rhs;
                report.records.push(CheckRecord::new(id, point, lhs, rhs, eq));
            }
            Err(Error::Cusp { .. }) | Err(Error::DegenerateCrossing(_)) => report.skipped += 1,
            Err(e) => report
                .records
                .push(CheckRecord::new(id, point, e, "defined", false)),
        }
    }
}

const MAX_DEN: i64 = 60;

/// Random pair of the given section domain.
pub fn sample_pair(seed: u64, index: u64, d: Domain) -> EndpointPair {
    let mut rng = rng_for(seed, index);
    let e = sign(&mut rng);
    let (flo, fhi) = match d {
        Domain::SL => (rat(1, 1), rat(2, 1)),
        _ => (rat(1, 1), rat(12, 1)),
    };
    let (blo, bhi) = match d {
        Domain::S => (rat(-1, 1), rat(0, 1)),
        Domain::T => (rat(-10, 1), rat(0, 1)),
        Domain::Se => (rat(-1, 1), rat(1, 1)),
        Domain::Te | Domain::SL => (rat(-10, 1), rat(1, 1)),
    };
    let f = non_integer_in(&mut rng, &flo, &fhi, MAX_DEN);
    let b = rational_in(&mut rng, &blo, &bhi, MAX_DEN);
    let ev = Rational::from_integer(e.value().into());
    EndpointPair::new(
        BoundaryPoint::Rational(&ev * f),
        BoundaryPoint::Rational(ev * b),
        d,
    )
    .expect("sampled inside the domain")
}

fn unit_point(seed: u64, index: u64, y_lo: Rational, y_hi: Rational) -> StatePoint {
    let mut rng = rng_for(seed, index);
    let x = rational_in(&mut rng, &rat(0, 1), &rat(1, 1), MAX_DEN);
    let y = rational_in(&mut rng, &y_lo, &y_hi, MAX_DEN);
    StatePoint::pair(BoundaryPoint::Rational(x), BoundaryPoint::Rational(y))
}

fn step(map: &'static str, f: SectionFn, p: &EndpointPair, d: Domain) -> Result<EndpointPair> {
    apply_section(map, p, &f(p)?, d)
}

fn natext_apply(f: NatextFn, p: &StatePoint) -> Result<StatePoint> {
    let b = f(&p.x)?;
    let (x, y) = b.apply(&p.x, &p.y);
    Ok(StatePoint::pair(x, y))
}

fn xy(p: &StatePoint) -> String {
    p.forget_sign().to_string()
}

fn conjugacy(cfg: &VerifyConfig, t: &MapTable, r: &mut SuiteReport) {
    type Coord = fn(&StatePoint) -> Result<StatePoint>;
    let squares: [(&str, Domain, SectionFn, &'static str, Coord, NatextFn); 4] = [
        ("j-rho", Domain::S, t.rho, "rho", j_forward, t.gauss_natext),
        ("p-sigma", Domain::T, t.sigma, "sigma", p_forward, t.farey_natext),
        ("je-rhoe", Domain::Se, t.rho_e, "rho_e", j_forward, t.even_gauss_natext),
        ("ke-sigmae", Domain::Te, t.sigma_e, "sigma_e", k_e_forward, t.even_farey_natext),
    ];
    for (k, (id, d, sec, name, coord, nat)) in squares.into_iter().enumerate() {
        let seed = cfg.seed ^ ((k as u64 + 1) << 32);
        sweep(id, cfg.samples, r, |i| {
            let p = sample_pair(seed, i, d);
            let res = (|| {
                let lhs = coord(&step(name, sec, &p, d)?.point())?;
                let rhs = tilde_step(nat, &coord(&p.point())?)?;
                Ok((lhs.to_string(), rhs.to_string()))
            })();
            (p.to_string(), res)
        });
    }
}

fn box_faces(cfg: &VerifyConfig, t: &MapTable, r: &mut SuiteReport) {
    let n = cfg.samples;
    let s = |k: u64| cfg.seed ^ ((k + 11) << 32);
    let in_t = |k, i| sample_pair(s(k), i, Domain::T);

    sweep("top", n, r, |i| {
        let p = in_t(0, i);
        let res = (|| {
            let lhs = diag_forward(&step("sigma", t.sigma, &p, Domain::T)?.point())?;
            let q = diag_forward(&p.point())?;
            let q = EndpointPair::new(q.x, q.y, Domain::SL)?;
            let rhs = step("sigma_L", t.sigma_l, &q, Domain::SL)?.point();
            Ok((xy(&lhs), xy(&rhs)))
        })();
        (p.to_string(), res)
    });
    sweep("back", n, r, |i| {
        let p = in_t(1, i);
        let res = (|| {
            let lhs = p_forward(&step("sigma", t.sigma, &p, Domain::T)?.point())?;
            let rhs = natext_apply(t.farey_natext, &p_forward(&p.point())?)?;
            Ok((xy(&lhs), xy(&rhs)))
        })();
        (p.to_string(), res)
    });
    sweep("front", n, r, |i| {
        let q = sample_pair(s(2), i, Domain::SL);
        let res = (|| {
            let lhs = v_forward(&step("sigma_L", t.sigma_l, &q, Domain::SL)?.point())?;
            let rhs = natext_apply(t.lehner_natext, &v_forward(&q.point())?)?;
            Ok((xy(&lhs), xy(&rhs)))
        })();
        (q.to_string(), res)
    });
    sweep("bottom", n, r, |i| {
        let p = unit_point(s(3), i, rat(0, 1), rat(1, 1));
        let res = (|| {
            let lhs = h_forward(&natext_apply(t.farey_natext, &p)?)?;
            let rhs = natext_apply(t.lehner_natext, &h_forward(&p)?)?;
            Ok((xy(&lhs), xy(&rhs)))
        })();
        (p.to_string(), res)
    });
    let left = |p: &EndpointPair| -> Result<(String, String)> {
        let lhs = v_forward(&diag_forward(&p.point())?)?;
        let rhs = h_forward(&p_forward(&p.point())?.forget_sign())?;
        Ok((xy(&lhs), xy(&rhs)))
    };
    sweep("left", n, r, |i| {
        let p = in_t(4, i);
        (p.to_string(), left(&p))
    });
    sweep("right", n, r, |i| {
        let p = in_t(5, i);
        (
            p.to_string(),
            step("sigma", t.sigma, &p, Domain::T).and_then(|q| left(&q)),
        )
    });
    sweep("lower", n, r, |i| {
        let mut rng = rng_for(s(6), i);
        let x = rational_in(&mut rng, &rat(1, 1), &rat(2, 1), MAX_DEN);
        let y = rational_in(&mut rng, &rat(-1, 1), &rat(20, 1), MAX_DEN);
        let p = StatePoint::pair(BoundaryPoint::Rational(x), BoundaryPoint::Rational(y));
        let res = (|| {
            let lhs = w_forward(&natext_apply(t.lehner_natext, &p)?)?;
            let rhs = natext_apply(t.lehner_dual_natext, &w_forward(&p)?)?;
            Ok((xy(&lhs), xy(&rhs)))
        })();
        (p.to_string(), res)
    });
}

fn iterate_1d(f: impl Fn(&BoundaryPoint) -> Result<Lft>, x: &BoundaryPoint, k: &BigInt) -> Result<BoundaryPoint> {
    let mut x = x.clone();
    let mut i = BigInt::zero();
    while &i < k {
        x = f(&x)?.apply(&x);
        i += 1;
    }
    Ok(x)
}

fn iterate_section(
    name: &'static str,
    f: SectionFn,
    p: &EndpointPair,
    d: Domain,
    k: &BigInt,
) -> Result<EndpointPair> {
    let mut p = p.clone();
    let mut i = BigInt::zero();
    while &i < k {
        p = step(name, f, &p, d)?;
        i += 1;
    }
    Ok(p)
}

fn slowdown(cfg: &VerifyConfig, t: &MapTable, r: &mut SuiteReport) {
    let n = cfg.samples;
    let s = |k: u64| cfg.seed ^ ((k + 21) << 32);
    let unit = |k, i| {
        let mut rng = rng_for(s(k), i);
        BoundaryPoint::Rational(rational_in(&mut rng, &rat(0, 1), &rat(1, 1), 1000))
    };
    sweep("farey-gauss", n, r, |i| {
        let x = unit(0, i);
        let res = (|| {
            let k = x.recip()?.floor()?;
            let lhs = iterate_1d(|z| Ok((t.farey)(z)?.1), &x, &k)?;
            let rhs = (t.gauss)(&x)?.1.apply(&x);
            Ok((lhs.to_string(), rhs.to_string()))
        })();
        (x.to_string(), res)
    });
    sweep("evenfarey-evengauss", n, r, |i| {
        let x = unit(1, i);
        let res = (|| {
            let k = (x.recip()?.sub(&BoundaryPoint::one())?.div(&BoundaryPoint::integer(2))?).ceil()?;
            let lhs = iterate_1d(|z| Ok((t.even_farey)(z)?.1), &x, &k)?;
            let rhs = (t.even_gauss)(&x)?.1.apply(&x);
            Ok((lhs.to_string(), rhs.to_string()))
        })();
        (x.to_string(), res)
    });
    sweep("sigma-rho", n, r, |i| {
        let p = sample_pair(s(2), i, Domain::S);
        let res = (|| {
            let n0 = p.fwd.abs().floor()?;
            let q = EndpointPair::new(p.fwd.clone(), p.bwd.clone(), Domain::T)?;
            let lhs = iterate_section("sigma", t.sigma, &q, Domain::T, &n0)?;
            let rhs = step("rho", t.rho, &p, Domain::S)?;
            Ok((lhs.to_string(), rhs.to_string()))
        })();
        (p.to_string(), res)
    });
    sweep("sigmae-rhoe", n, r, |i| {
        let p = sample_pair(s(3), i, Domain::Se);
        let res = (|| {
            let k: BigInt = (p.fwd.abs().floor()? + 1) / 2;
            let q = EndpointPair::new(p.fwd.clone(), p.bwd.clone(), Domain::Te)?;
            let lhs = iterate_section("sigma_e", t.sigma_e, &q, Domain::Te, &k)?;
            let rhs = step("rho_e", t.rho_e, &p, Domain::Se)?;
            Ok((lhs.to_string(), rhs.to_string()))
        })();
        (p.to_string(), res)
    });
}

/// Pinned constants of the measure suite.
pub const BIRKHOFF_STEPS: usize = 1_000_000;
pub const BIRKHOFF_TOL: f64 = 0.01;
pub const MASS_PANELS: usize = 2000;
pub const MIN_BRANCH_COVERAGE: usize = 100;

fn measure(cfg: &VerifyConfig, t: &MapTable, r: &mut SuiteReport) {
    for (k, m) in NatextMap::ALL.into_iter().enumerate() {
        let rep = residual_sweep_with(m, t.natext(m), cfg.seed ^ ((k as u64 + 31) << 32), cfg.samples);
        let strata = m.branch_intervals().len() + 1;
        let need = MIN_BRANCH_COVERAGE.min(cfg.samples / strata);
        let least = rep.branch_coverage.values().copied().min().unwrap_or(0);
        let id = format!("residual/{}", m.name());
        for (point, res) in &rep.failures {
            r.records.push(CheckRecord::new(&id, point, res, "0", false));
        }
        r.records.push(CheckRecord::new(
            &id,
            format!("{} points", rep.points),
            &rep.max_abs_residual,
            "0",
            rep.max_abs_residual == "0",
        ));
        r.records.push(CheckRecord::new(
            &format!("coverage/{}", m.name()),
            format!("{} branches", rep.branch_coverage.len()),
            least,
            format!(">= {need}"),
            least >= need,
        ));
        r.notes.insert(
            format!("branch_coverage/{}", m.name()),
            serde_json::to_string(&rep.branch_coverage).unwrap_or_default(),
        );
    }
    for (k, id) in DensityId::ALL.into_iter().enumerate() {
        let rect = id.rectangle();
        let name = format!("marginal/{}", id.name());
        sweep(&name, cfg.samples, r, |i| {
            let mut rng = rng_for(cfg.seed ^ ((k as u64 + 41) << 32), i);
            let x = rational_in(&mut rng, &rect.x_lo, &rect.x_hi, 1000);
            let res = marginal_check(id, &x).map(|(a, b)| (a.to_string(), b.to_string()));
            (x.to_string(), res)
        });
    }
    let mass = gauss_total_mass(MASS_PANELS);
    let ln2 = std::f64::consts::LN_2;
    r.records.push(CheckRecord::new(
        "gauss-mass",
        format!("simpson {MASS_PANELS}"),
        mass,
        ln2,
        (mass - ln2).abs() <= cfg.tol,
    ));
    let start = (((cfg.seed % 1000) as f64 + 1.0) * (std::f64::consts::SQRT_2 - 1.0)).fract();
    let start = (start, 0.5);
    let target = (1.5f64).log2();
    let avg = birkhoff_average(NatextMap::Gauss, Observable::x_below(0.5), start, BIRKHOFF_STEPS)
        .unwrap_or(f64::NAN);
    r.records.push(CheckRecord::new(
        "birkhoff/x<1/2",
        format!("{BIRKHOFF_STEPS} steps"),
        avg,
        target,
        (avg - target).abs() <= BIRKHOFF_TOL,
    ));
}

type CodingRow<'a> = (String, Vec<(&'a str, Result<(String, String)>)>);

fn coding(cfg: &VerifyConfig, r: &mut SuiteReport) {
    let w = cfg.window;
    let len = w + 10;
    let max_a = 10;
    let rows: Vec<CodingRow> = (0..cfg.samples as u64)
        .into_par_iter()
        .map(|i| {
            let (f, b) = even_geodesic(&mut rng_for(cfg.seed, i), len, max_a);
            (format!("({f}, {b})"), coding_checks(&f, &b, w))
        })
        .collect();
    for (point, checks) in rows {
        for (id, res) in checks {
            match res {
                Ok((lhs, rhs)) => {
                    let eq = lhs == rhs;
                    r.records.push(CheckRecord::new(id, &point, lhs, rhs, eq));
                }
                Err(e) => r.records.push(CheckRecord::new(id, &point, e, "defined", false)),
            }
        }
    }
}

fn overlap_forward(a: &[Symbol], b: &[Symbol], w: usize) -> Result<(String, String)> {
    let n = a.len().min(b.len());
    if n < w {
        return Err(Error::Codec(format!("only {n} symbols to compare, window {w}")));
    }
    Ok((symbols_to_string(&a[..n]), symbols_to_string(&b[..n])))
}

fn overlap_backward(a: &[Symbol], b: &[Symbol], w: usize) -> Result<(String, String)> {
    let n = a.len().min(b.len());
    if n < w {
        return Err(Error::Codec(format!("only {n} symbols to compare, window {w}")));
    }
    Ok((
        symbols_to_string(&a[a.len() - n..]),
        symbols_to_string(&b[b.len() - n..]),
    ))
}

fn both<'a, A, B>(a: &'a Result<A>, b: &'a Result<B>) -> Result<(&'a A, &'a B)> {
    match (a, b) {
        (Ok(a), Ok(b)) => Ok((a, b)),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    }
}

fn coding_checks(
    f: &BoundaryPoint,
    b: &BoundaryPoint,
    w: usize,
) -> Vec<(&'static str, Result<(String, String)>)> {
    let eps = Sign::of(f);
    let geo = even_sequence_geometric(f, b, w);
    let fe = ecf_expand(f, 10 * w + 100);
    let digit = fe.as_ref().map_err(Clone::clone).and_then(|fe| {
        let be = ext_ecf_expand(&eps.flip().apply(b), 10 * w + 100)?;
        even_sequence_from_digits(fe, &be, w)
    });
    let series = (|| {
        let fa = crate::cf::rcf_expand(&f.abs(), 100 * w)?;
        let none = crate::cf::rcf_expand(&BoundaryPoint::zero(), 1)?;
        let s = series_sequence_from_digits(&fa, &none, eps, 20 * w)?;
        let x = if eps == Sign::Plus { Symbol::L } else { Symbol::R };
        recode_series_with_start(&s.forward()[1..], x)
    })();
    vec![
        (
            "geometric=digit/forward",
            both(&geo, &digit).and_then(|(g, d)| overlap_forward(g.forward(), d.forward(), w)),
        ),
        (
            "geometric=digit/backward",
            both(&geo, &digit).and_then(|(g, d)| overlap_backward(g.backward(), d.backward(), w)),
        ),
        (
            "geometric=series",
            both(&geo, &series).and_then(|(g, s)| overlap_forward(g.forward(), s, w)),
        ),
        (
            "digit-recovery",
            both(&geo, &fe).and_then(|(g, fe)| {
                let got = digits_from_even_symbols(g.forward(), eps)?;
                let all = fe.all_digits();
                if got.is_empty() || got.len() > all.len() {
                    return Err(Error::Codec(format!("recovered {} digits", got.len())));
                }
                let show = |d: &[EcfDigit]| d.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
                Ok((show(&got), show(&all[..got.len()])))
            }),
        ),
    ]
}

/// Runs every suite with `table`.
pub fn run_all(cfg: &VerifyConfig, table: &MapTable) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|s| run_suite(*s, cfg, table)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            samples: 200,
            seed: 7,
            tol: 1e-9,
            window: 20,
        }
    }

    #[test]
    fn default_table_passes_every_suite() {
        let t = MapTable::default();
        for s in Suite::ALL {
            let mut cfg = small();
            if s == Suite::Coding {
                cfg.samples = 20;
            }
            let r = run_suite(s, &cfg, &t);
            assert!(r.passed(), "{}: {:?}", s.name(), r.counterexample());
            assert!(r.records.len() > r.skipped, "{}", s.name());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let t = MapTable::default();
        let a = run_suite(Suite::Conjugacy, &small(), &t);
        let b = run_suite(Suite::Conjugacy, &small(), &t);
        assert_eq!(a.records, b.records);
    }
}
