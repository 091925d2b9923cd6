//! Cutting sequences of geodesics in the Farey tessellation and in the even
//! tessellation by images of the ideal triangle `{-1, 1, ∞}` under the theta
//! group.
//!
//! The geometric coder walks cell by cell along a geodesic, recording the
//! edges it crosses. Type 1 edges are images of the walls `±1 + iR`, type 2
//! edges are images of the unit semicircle. A segment between two successive
//! type 1 crossings is labelled `B` or `C` when it crosses a type 2 edge
//! (depending on whether the two type 1 edges meet), and `L` or `R`
//! otherwise, by the side on which the common vertex lies.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cf::{RcfExpansion, Termination};
use crate::ecf::{EcfDigit, EcfExpansion, ExtEcfExpansion, Sign};
use crate::error::{domain, Error, Result};
use crate::moebius::{IntegerMoebius, Lft};
use crate::numeric::{BoundaryPoint, Rational};
use crate::section::{
    rho_branch, rho_e_branch, sigma_branch, sigma_e_branch, Domain, EndpointPair, SectionBranch,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ThetaOrbit {
    /// Numerator plus denominator odd, including `∞ = 1/0`.
    ThetaInfinity,
    /// Numerator and denominator both odd.
    ThetaOne,
}

fn num_den(x: &BoundaryPoint) -> Result<(BigInt, BigInt)> {
    match x {
        BoundaryPoint::Rational(r) => Ok((r.numer().clone(), r.denom().clone())),
        BoundaryPoint::Infinity => Ok((BigInt::one(), BigInt::zero())),
        BoundaryPoint::Surd(_) => Err(domain("tessellation vertex", x, "Q ∪ {∞}")),
    }
}

pub fn classify_point(x: &BoundaryPoint) -> Result<ThetaOrbit> {
    let (p, q) = num_den(x)?;
    Ok(if (p + q).is_odd() {
        ThetaOrbit::ThetaInfinity
    } else {
        ThetaOrbit::ThetaOne
    })
}

/// `|p*s - q*r|` for `u = p/q`, `v = r/s`.
pub fn edge_determinant(u: &BoundaryPoint, v: &BoundaryPoint) -> Result<BigInt> {
    let (p, q) = num_den(u)?;
    let (r, s) = num_den(v)?;
    Ok((p * s - q * r).abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeKind {
    Farey,
    EvenType1,
    EvenType2,
}

/// Hyperbolic geodesic between two cusps; endpoints are stored in increasing order with `∞` last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TessellationEdge {
    pub u: BoundaryPoint,
    pub v: BoundaryPoint,
    pub kind: EdgeKind,
}

impl TessellationEdge {
    pub fn new(a: BoundaryPoint, b: BoundaryPoint, kind: EdgeKind) -> TessellationEdge {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        TessellationEdge { u, v, kind }
    }

    fn has_vertex(&self, w: &BoundaryPoint) -> bool {
        &self.u == w || &self.v == w
    }

    fn shared_vertex(&self, o: &TessellationEdge) -> Option<BoundaryPoint> {
        [&self.u, &self.v]
            .into_iter()
            .find(|w| o.has_vertex(w))
            .cloned()
    }
}

impl fmt::Display for TessellationEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FareyEdgeClass {
    Type1,
    Removed,
}

pub fn classify_farey_edge(e: &TessellationEdge) -> Result<FareyEdgeClass> {
    if !edge_determinant(&e.u, &e.v)?.is_one() {
        return Err(domain("farey edge", e, "determinant 1"));
    }
    let both = classify_point(&e.u)? == ThetaOrbit::ThetaInfinity
        && classify_point(&e.v)? == ThetaOrbit::ThetaInfinity;
    Ok(if both {
        FareyEdgeClass::Removed
    } else {
        FareyEdgeClass::Type1
    })
}

/// Cell `g({-1, 1, ∞})` of the even tessellation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellState {
    pub g: IntegerMoebius,
}

impl CellState {
    pub fn base() -> CellState {
        CellState {
            g: IntegerMoebius::identity(),
        }
    }

    /// `g(-1), g(1), g(∞)`.
    pub fn vertices(&self) -> [BoundaryPoint; 3] {
        [
            self.g.apply(&BoundaryPoint::integer(-1)),
            self.g.apply(&BoundaryPoint::integer(1)),
            self.g.apply(&BoundaryPoint::Infinity),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
    Circle,
}

const SIDES: [Side; 3] = [Side::Left, Side::Right, Side::Circle];

impl Side {
    /// Indices into `vertices()` of the side's endpoints and the opposite vertex.
    fn layout(self) -> (usize, usize, usize) {
        match self {
            Side::Left => (0, 2, 1),
            Side::Right => (1, 2, 0),
            Side::Circle => (0, 1, 2),
        }
    }

    fn generator(self) -> IntegerMoebius {
        match self {
            Side::Left => IntegerMoebius::translation(-2),
            Side::Right => IntegerMoebius::translation(2),
            Side::Circle => IntegerMoebius::s(),
        }
    }

    /// The same edge seen from the neighbouring cell.
    fn across(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::Circle => Side::Circle,
        }
    }

    fn kind(self) -> EdgeKind {
        match self {
            Side::Circle => EdgeKind::EvenType2,
            _ => EdgeKind::EvenType1,
        }
    }
}

/// Whether `x` lies on the arc strictly between `u` and `v` that avoids `∞` (or, if `v = ∞`, above `u`).
fn inside(u: &BoundaryPoint, v: &BoundaryPoint, x: &BoundaryPoint) -> bool {
    match (u.is_infinite(), v.is_infinite()) {
        (true, _) => x > v,
        (_, true) => x > u,
        _ => {
            let (lo, hi) = if u < v { (u, v) } else { (v, u) };
            lo < x && x < hi
        }
    }
}

/// Whether the geodesic `(u, v)` separates `a` from `b`; neither may equal `u` or `v`.
pub fn separates(u: &BoundaryPoint, v: &BoundaryPoint, a: &BoundaryPoint, b: &BoundaryPoint) -> bool {
    inside(u, v, a) != inside(u, v, b)
}

fn exit_side(verts: &[BoundaryPoint; 3], target: &BoundaryPoint, candidates: &[Side]) -> Option<Side> {
    candidates.iter().copied().find(|s| {
        let (i, j, k) = s.layout();
        separates(&verts[i], &verts[j], target, &verts[k])
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum WalkEnd {
    /// The current cell has the forward endpoint as a vertex.
    Cusp(BoundaryPoint),
    MaxSteps,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Walk {
    pub crossings: Vec<TessellationEdge>,
    pub end: WalkEnd,
}

/// Edges of the even tessellation crossed by the geodesic from `bwd` to `fwd`
/// after it leaves the base cell, in order.
pub fn cell_walk(fwd: &BoundaryPoint, bwd: &BoundaryPoint, max_steps: usize) -> Result<Walk> {
    if fwd == bwd {
        return Err(domain("cell walk", fwd, "distinct endpoints"));
    }
    let mut cell = CellState::base();
    let verts = cell.vertices();
    for x in [fwd, bwd] {
        if verts.contains(x) {
            return Err(Error::DegenerateCrossing(x.to_string()));
        }
    }
    let exit = exit_side(&verts, fwd, &SIDES).expect("three arcs cover the boundary");
    let entry = exit_side(&verts, bwd, &SIDES).expect("three arcs cover the boundary");
    if exit == entry {
        return Err(domain(
            "cell walk",
            format!("({fwd}, {bwd})"),
            "geodesics meeting the base cell",
        ));
    }
    let mut exit = exit;
    let mut crossings = Vec::new();
    while crossings.len() < max_steps {
        let verts = cell.vertices();
        let (i, j, _) = exit.layout();
        crossings.push(TessellationEdge::new(
            verts[i].clone(),
            verts[j].clone(),
            exit.kind(),
        ));
        cell.g = cell.g.compose(&exit.generator());
        let entry = exit.across();
        let verts = cell.vertices();
        if verts.contains(fwd) {
            return Ok(Walk {
                crossings,
                end: WalkEnd::Cusp(fwd.clone()),
            });
        }
        let others: Vec<Side> = SIDES.into_iter().filter(|s| *s != entry).collect();
        exit = exit_side(&verts, fwd, &others)
            .ok_or_else(|| Error::DegenerateCrossing(format!("lost track of ({fwd}, {bwd})")))?;
    }
    Ok(Walk {
        crossings,
        end: WalkEnd::MaxSteps,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Symbol {
    L,
    R,
    B,
    C,
}

impl Symbol {
    pub fn parse(c: char) -> Result<Symbol> {
        match c {
            'L' => Ok(Symbol::L),
            'R' => Ok(Symbol::R),
            'B' => Ok(Symbol::B),
            'C' => Ok(Symbol::C),
            _ => Err(Error::Codec(format!("unknown symbol {c:?}"))),
        }
    }

    pub fn parse_str(s: &str) -> Result<Vec<Symbol>> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(Symbol::parse)
            .collect()
    }

    fn side(o: Sign) -> Symbol {
        match o {
            Sign::Plus => Symbol::L,
            Sign::Minus => Symbol::R,
        }
    }

    fn other(self) -> Symbol {
        match self {
            Symbol::L => Symbol::R,
            Symbol::R => Symbol::L,
            s => s,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::L => "L",
            Symbol::R => "R",
            Symbol::B => "B",
            Symbol::C => "C",
        })
    }
}

pub fn symbols_to_string(s: &[Symbol]) -> String {
    s.iter().map(Symbol::to_string).collect()
}

/// Symbols with the crossing of the section (`xi`) and the first return (`eta`) marked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuttingSequence {
    pub symbols: Vec<Symbol>,
    pub xi_index: usize,
    pub eta_index: usize,
    pub edges: Vec<TessellationEdge>,
}

impl CuttingSequence {
    /// Symbols before `xi`, in time order.
    pub fn backward(&self) -> &[Symbol] {
        &self.symbols[..self.xi_index]
    }

    pub fn forward(&self) -> &[Symbol] {
        &self.symbols[self.xi_index..]
    }
}

impl fmt::Display for CuttingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.symbols;
        write!(
            f,
            "{}ξ{}η{}",
            symbols_to_string(&s[..self.xi_index]),
            symbols_to_string(&s[self.xi_index..self.eta_index]),
            symbols_to_string(&s[self.eta_index..])
        )
    }
}

/// Whether `w` lies to the right of the geodesic oriented from `b` to `f`.
fn on_right(b: &BoundaryPoint, f: &BoundaryPoint, w: &BoundaryPoint) -> bool {
    // normalize by an orientation-preserving map sending b -> 0, f -> ∞
    match (b.is_infinite(), f.is_infinite(), w.is_infinite()) {
        (_, true, _) => w > b,
        (true, _, _) => w < f,
        (_, _, true) => b > f,
        _ => {
            let num = w.sub(b).expect("finite");
            let den = if b < f { f.sub(w) } else { w.sub(f) }.expect("finite");
            num.signum() * den.signum() > 0
        }
    }
}

fn label_segment(
    first: &TessellationEdge,
    between: &[TessellationEdge],
    last: &TessellationEdge,
    b: &BoundaryPoint,
    f: &BoundaryPoint,
) -> Result<Symbol> {
    let shared = first.shared_vertex(last);
    match between.len() {
        0 => {
            let w = shared.ok_or_else(|| {
                Error::Codec(format!("adjacent type 1 edges {first} and {last} do not meet"))
            })?;
            Ok(if on_right(b, f, &w) { Symbol::R } else { Symbol::L })
        }
        1 => Ok(if shared.is_some() { Symbol::B } else { Symbol::C }),
        n => Err(Error::Codec(format!(
            "{n} type 2 crossings between {first} and {last}"
        ))),
    }
}

/// Labels of the segments between consecutive type 1 crossings; also returns the crossing index each segment ends at.
fn label_crossings(
    crossings: &[TessellationEdge],
    b: &BoundaryPoint,
    f: &BoundaryPoint,
) -> Result<Vec<(usize, Symbol)>> {
    let type1: Vec<usize> = crossings
        .iter()
        .enumerate()
        .filter(|(_, e)| e.kind == EdgeKind::EvenType1)
        .map(|(i, _)| i)
        .collect();
    type1
        .windows(2)
        .map(|w| {
            let s = label_segment(&crossings[w[0]], &crossings[w[0] + 1..w[1]], &crossings[w[1]], b, f)?;
            Ok((w[1], s))
        })
        .collect()
}

fn eta_after_first_block(forward: &[Symbol]) -> usize {
    forward
        .iter()
        .position(|s| matches!(s, Symbol::B | Symbol::C))
        .map_or(forward.len(), |i| i + 1)
}

/// Portion of a geodesic between two consecutive type 1 crossings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub from: TessellationEdge,
    pub to: TessellationEdge,
    pub symbol: Symbol,
    /// Whether the segment lies after the crossing of the section.
    pub forward: bool,
}

/// Every labelled segment met within `steps` cells on either side of the base cell.
pub fn geometric_segments(fwd: &BoundaryPoint, bwd: &BoundaryPoint, steps: usize) -> Result<Vec<Segment>> {
    let ahead = cell_walk(fwd, bwd, steps)?;
    let behind = cell_walk(bwd, fwd, steps)?;
    let xi = behind.crossings.len();
    let mut all: Vec<TessellationEdge> = behind.crossings.into_iter().rev().collect();
    all.extend(ahead.crossings);
    let type1: Vec<usize> = (0..all.len()).filter(|&i| all[i].kind == EdgeKind::EvenType1).collect();
    let labels = label_crossings(&all, bwd, fwd)?;
    Ok(type1
        .windows(2)
        .zip(labels)
        .map(|(w, (end, symbol))| Segment {
            from: all[w[0]].clone(),
            to: all[w[1]].clone(),
            symbol,
            forward: end > xi,
        })
        .collect())
}

/// Even cutting sequence read off the tessellation, with up to `window` symbols on each side of `xi`.
pub fn even_sequence_geometric(
    fwd: &BoundaryPoint,
    bwd: &BoundaryPoint,
    window: usize,
) -> Result<CuttingSequence> {
    let steps = 2 * window + 8;
    let ahead = cell_walk(fwd, bwd, steps)?;
    let behind = cell_walk(bwd, fwd, steps)?;
    if ahead.crossings.first().map(|e| e.kind) != Some(EdgeKind::EvenType1) {
        return Err(domain("even coding", fwd, "|fwd| > 1"));
    }
    let xi = behind.crossings.len();
    let mut all: Vec<TessellationEdge> = behind.crossings.into_iter().rev().collect();
    all.extend(ahead.crossings);
    let labels = label_crossings(&all, bwd, fwd)?;
    let mut backward: Vec<Symbol> = labels.iter().filter(|(e, _)| *e <= xi).map(|(_, s)| *s).collect();
    let mut forward: Vec<Symbol> = labels.iter().filter(|(e, _)| *e > xi).map(|(_, s)| *s).collect();
    if backward.len() > window {
        backward.drain(..backward.len() - window);
    }
    forward.truncate(window);
    let xi_index = backward.len();
    let eta_index = xi_index + eta_after_first_block(&forward);
    backward.extend(forward);
    Ok(CuttingSequence {
        symbols: backward,
        xi_index,
        eta_index,
        edges: all,
    })
}

/// `X^(k-1)` followed by `B` (sign -1) or `C` (sign +1), with `X = L` for orientation `+`.
fn block(a: &BigInt, eps: Sign, o: Sign, out: &mut Vec<Symbol>) {
    let k: BigInt = a / 2;
    let mut i = BigInt::one();
    while i < k {
        out.push(Symbol::side(o));
        i += 1;
    }
    out.push(if eps == Sign::Minus { Symbol::B } else { Symbol::C });
}

/// Digits of a possibly periodic expansion, repeating the period, until `stop` says enough.
fn unrolled<T: Clone>(digits: &[T], termination: Termination, offset: usize) -> impl Iterator<Item = T> + '_ {
    let tail: Vec<T> = match termination {
        Termination::Periodic { start, len } => digits[start + offset..start + offset + len].to_vec(),
        _ => Vec::new(),
    };
    let repeat = !tail.is_empty();
    digits
        .iter()
        .cloned()
        .chain(std::iter::repeat(tail).take_while(move |_| repeat).flatten())
}

/// Even cutting sequence from the even expansion of `fwd` and the extended
/// expansion of `-sign(fwd)*bwd`.
pub fn even_sequence_from_digits(
    fwd: &EcfExpansion,
    bwd: &ExtEcfExpansion,
    window: usize,
) -> Result<CuttingSequence> {
    if fwd.leading.is_none() {
        return Err(domain("even coding", &fwd.value, "|fwd| > 1"));
    }
    let o0 = if fwd.negative { Sign::Minus } else { Sign::Plus };
    let offset = 1;
    let mut forward = Vec::new();
    let mut o = o0;
    for d in unrolled(&fwd.all_digits(), shift(fwd.termination, offset), 0) {
        if forward.len() >= window {
            break;
        }
        block(&d.a, d.eps, o, &mut forward);
        o = d.eps.flip().times(o);
    }
    forward.truncate(window);

    let mut backward = Vec::new();
    let mut o = o0;
    for d in unrolled(&bwd.digits, bwd.termination, 0) {
        if backward.len() >= window {
            break;
        }
        o = d.eps.flip().times(o);
        let mut b = Vec::new();
        block(&d.b, d.eps, o, &mut b);
        backward.extend(b.into_iter().rev());
    }
    backward.truncate(window);
    backward.reverse();

    let xi_index = backward.len();
    let eta_index = xi_index + eta_after_first_block(&forward);
    backward.extend(forward);
    Ok(CuttingSequence {
        symbols: backward,
        xi_index,
        eta_index,
        edges: Vec::new(),
    })
}

fn shift(t: Termination, by: usize) -> Termination {
    match t {
        Termination::Periodic { start, len } => Termination::Periodic {
            start: start + by,
            len,
        },
        t => t,
    }
}

/// Series coding `... X^(n-2) Y^(n-1) ξ X^(n0) η Y^(n1) ...` for `fwd = eps*[n0; n1, ...]`
/// and `bwd = -eps*[0; n-1, n-2, ...]`, given the expansions of `|fwd|` and `|bwd|`.
pub fn series_sequence_from_digits(
    fwd_abs: &RcfExpansion,
    bwd_abs: &RcfExpansion,
    eps: Sign,
    window: usize,
) -> Result<CuttingSequence> {
    if fwd_abs.leading < BigInt::one() || !bwd_abs.leading.is_zero() {
        return Err(domain("series coding", &fwd_abs.value, "|fwd| > 1, |bwd| < 1"));
    }
    let x = Symbol::side(eps);
    let runs = |leading: Option<&BigInt>, e: &RcfExpansion, first: Symbol| {
        let mut out = Vec::new();
        let mut letter = first;
        for n in leading.cloned().into_iter().chain(unrolled(&e.digits, e.termination, 0)) {
            let mut i = BigInt::zero();
            while i < n && out.len() < window {
                out.push(letter);
                i += 1;
            }
            if out.len() >= window {
                break;
            }
            letter = letter.other();
        }
        out
    };
    let forward = runs(Some(&fwd_abs.leading), fwd_abs, x);
    let mut backward = runs(None, bwd_abs, x.other());
    backward.reverse();
    let n0: usize = (&fwd_abs.leading).try_into().unwrap_or(usize::MAX);
    let xi_index = backward.len();
    let eta_index = xi_index + n0.min(forward.len());
    backward.extend(forward);
    Ok(CuttingSequence {
        symbols: backward,
        xi_index,
        eta_index,
        edges: Vec::new(),
    })
}

/// Rewrites Series symbols read from the even section into even symbols:
/// `X^(2k-2) Y -> X^(k-1) B` and `X^(2k-1) Y -> X^(k-1) C`, where `C` swaps
/// the roles of `L` and `R` for the next block. A trailing incomplete block is dropped.
pub fn recode_series_with_start(s: &[Symbol], start: Symbol) -> Result<Vec<Symbol>> {
    if !matches!(start, Symbol::L | Symbol::R) {
        return Err(Error::Codec(format!("start side must be L or R, got {start}")));
    }
    let mut out = Vec::new();
    let mut x = start;
    let mut run = 0usize;
    for &c in s {
        match c {
            Symbol::B | Symbol::C => {
                return Err(Error::Codec(format!("{c} is not a Series symbol")))
            }
            c if c == x => run += 1,
            _ => {
                out.extend(std::iter::repeat_n(x, run / 2));
                if run.is_multiple_of(2) {
                    out.push(Symbol::B);
                } else {
                    out.push(Symbol::C);
                    x = x.other();
                }
                run = 0;
            }
        }
    }
    Ok(out)
}

/// [`recode_series_with_start`] with the starting side taken from the first symbol.
pub fn recode_series_to_even(s: &[Symbol]) -> Result<Vec<Symbol>> {
    let start = *s
        .first()
        .ok_or_else(|| Error::Codec("empty Series sequence".into()))?;
    recode_series_with_start(s, start)
}

/// Inverse of the forward block code: `X^(k-1) B -> (2k,-1)`, `X^(k-1) C -> (2k,+1)`.
pub fn digits_from_even_symbols(s: &[Symbol], orientation: Sign) -> Result<Vec<EcfDigit>> {
    let mut out = Vec::new();
    let mut o = orientation;
    let mut run = 0i64;
    for &c in s {
        match c {
            Symbol::B | Symbol::C => {
                let eps = if c == Symbol::B { Sign::Minus } else { Sign::Plus };
                out.push(EcfDigit::new(2 * (run + 1), eps));
                o = eps.flip().times(o);
                run = 0;
            }
            c if c == Symbol::side(o) => run += 1,
            c => {
                return Err(Error::Codec(format!(
                    "{c} where {} was expected",
                    Symbol::side(o)
                )))
            }
        }
    }
    Ok(out)
}

/// Point `re + i*sqrt(im_sq)` of the upper half-plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HalfPlanePoint {
    #[serde(serialize_with = "as_string")]
    pub re: Rational,
    #[serde(serialize_with = "as_string")]
    pub im_sq: Rational,
}

fn as_string<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

impl HalfPlanePoint {
    pub fn apply(&self, g: &Lft) -> HalfPlanePoint {
        let r = |x: &BigInt| Rational::from_integer(x.clone());
        let (a, b, c, d) = (r(&g.a), r(&g.b), r(&g.c), r(&g.d));
        let (x, y2) = (&self.re, &self.im_sq);
        let cx_d = &c * x + &d;
        let norm = &cx_d * &cx_d + &c * &c * y2;
        let re = (&a * &c * (x * x + y2) + (&a * &d + &b * &c) * x + &b * &d) / &norm;
        let det = a * d - b * c;
        let im_sq = &det * &det * y2 / (&norm * &norm);
        HalfPlanePoint { re, im_sq }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im_sq.to_f64().unwrap_or(f64::NAN).sqrt(),
        )
    }
}

impl fmt::Display for HalfPlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + i*sqrt({})", self.re, self.im_sq)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    Gauss,
    Farey,
    EvenGauss,
    EvenFarey,
}

/// Geodesic of the half-plane with endpoints `p`, `q` (at most one of them `∞`).
#[derive(Debug, Clone)]
enum Curve {
    Vertical(Rational),
    Circle(Rational, Rational),
}

impl Curve {
    fn through(p: &BoundaryPoint, q: &BoundaryPoint) -> Result<Curve> {
        let rat = |x: &BoundaryPoint| {
            x.as_rational()
                .cloned()
                .ok_or_else(|| domain("section curve", x, "Q ∪ {∞}"))
        };
        match (p.is_infinite(), q.is_infinite()) {
            (true, false) => Ok(Curve::Vertical(rat(q)?)),
            (false, true) => Ok(Curve::Vertical(rat(p)?)),
            (false, false) => Ok(Curve::Circle(rat(p)?, rat(q)?)),
            _ => Err(domain("section curve", p, "distinct endpoints")),
        }
    }
}

fn strictly_between(lo: &Rational, hi: &Rational, x: &Rational) -> bool {
    let (lo, hi) = if lo < hi { (lo, hi) } else { (hi, lo) };
    lo < x && x < hi
}

fn intersect(b: &Rational, f: &Rational, c: &Curve) -> Result<HalfPlanePoint> {
    let no_crossing = || Error::Domain {
        map: "xi/eta",
        value: format!("geodesic ({b}, {f})"),
        domain: "geodesics crossing the section",
    };
    match c {
        Curve::Vertical(x) => {
            if !strictly_between(b, f, x) {
                return Err(no_crossing());
            }
            Ok(HalfPlanePoint {
                re: x.clone(),
                im_sq: (f - x) * (x - b),
            })
        }
        Curve::Circle(p, q) => {
            let inside = [p, q].iter().filter(|e| strictly_between(b, f, e)).count();
            let outside = [p, q]
                .iter()
                .filter(|e| !strictly_between(b, f, e) && **e != b && **e != f)
                .count();
            if inside != 1 || outside != 1 {
                return Err(no_crossing());
            }
            let two = Rational::from_integer(2.into());
            let m = (b + f) / &two;
            let big_r2 = ((f - b) / &two) * ((f - b) / &two);
            let m0 = (p + q) / &two;
            let r02 = ((q - p) / &two) * ((q - p) / &two);
            let x = (&big_r2 - &r02 - &m * &m + &m0 * &m0) / (&two * (&m0 - &m));
            let im_sq = &big_r2 - (&x - &m) * (&x - &m);
            Ok(HalfPlanePoint { re: x, im_sq })
        }
    }
}

fn section_line(conv: Convention, eps: Sign) -> i64 {
    match conv {
        Convention::Gauss | Convention::Farey => 0,
        Convention::EvenGauss | Convention::EvenFarey => eps.value(),
    }
}

type BranchFn = fn(&EndpointPair) -> Result<SectionBranch>;

fn convention_map(conv: Convention) -> (Domain, BranchFn) {
    match conv {
        Convention::Gauss => (Domain::S, rho_branch),
        Convention::Farey => (Domain::T, sigma_branch),
        Convention::EvenGauss => (Domain::Se, rho_e_branch),
        Convention::EvenFarey => (Domain::Te, sigma_e_branch),
    }
}

/// `xi`: where the geodesic crosses the section line (`iR` for the regular
/// conventions, `sign(fwd) + iR` for the even ones); `eta`: the point mapped to
/// the next crossing by the first-return transformation, if it exists.
pub fn xi_eta_points(
    fwd: &BoundaryPoint,
    bwd: &BoundaryPoint,
    conv: Convention,
) -> Result<(HalfPlanePoint, Option<HalfPlanePoint>)> {
    let (f, b) = match (fwd.as_rational(), bwd.as_rational()) {
        (Some(f), Some(b)) => (f, b),
        _ => return Err(domain("xi/eta", format!("({fwd}, {bwd})"), "rational endpoints")),
    };
    let eps = Sign::of(fwd);
    let line = Rational::from_integer(section_line(conv, eps).into());
    let xi = intersect(b, f, &Curve::Vertical(line))?;
    let (dom, branch) = convention_map(conv);
    let eta = EndpointPair::new(fwd.clone(), bwd.clone(), dom)
        .and_then(|p| {
            let g = branch(&p)?.g;
            let image = g.apply(fwd);
            if image.is_infinite() {
                return Err(Error::Cusp {
                    map: "xi/eta",
                    value: image.to_string(),
                });
            }
            let c = BoundaryPoint::integer(section_line(conv, Sign::of(&image)));
            let inv = g.inverse();
            let curve = Curve::through(&inv.apply(&c), &inv.apply(&BoundaryPoint::Infinity))?;
            intersect(b, f, &curve)
        })
        .ok();
    Ok((xi, eta))
}

/// Edges of a tessellation with both endpoints in `[lo, hi] ∪ {∞}` and denominators at most `max_den`.
#[derive(Debug, Clone, Default, Serialize)]
pub struct EdgeSet {
    /// Farey edges, or even type 1 edges.
    pub primary: Vec<TessellationEdge>,
    /// Even type 2 edges.
    pub type2: Vec<TessellationEdge>,
    /// Farey edges absent from the even tessellation.
    pub removed: Vec<TessellationEdge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Tessellation {
    Farey,
    Even,
}

pub fn enumerate_edges(t: Tessellation, max_den: i64, lo: i64, hi: i64) -> EdgeSet {
    let mut pts = vec![BoundaryPoint::Infinity];
    for q in 1..=max_den {
        for p in lo * q..=hi * q {
            if p.gcd(&q) == 1 {
                pts.push(BoundaryPoint::ratio(p, q));
            }
        }
    }
    let mut set = EdgeSet::default();
    for (i, u) in pts.iter().enumerate() {
        for v in &pts[i + 1..] {
            let det = edge_determinant(u, v).expect("rational");
            if det.is_one() {
                let e = TessellationEdge::new(u.clone(), v.clone(), EdgeKind::Farey);
                match t {
                    Tessellation::Farey => set.primary.push(e),
                    Tessellation::Even => match classify_farey_edge(&e).expect("farey edge") {
                        FareyEdgeClass::Type1 => set.primary.push(TessellationEdge {
                            kind: EdgeKind::EvenType1,
                            ..e
                        }),
                        FareyEdgeClass::Removed => set.removed.push(e),
                    },
                }
            } else if t == Tessellation::Even
                && det == BigInt::from(2)
                && classify_point(u).ok() == Some(ThetaOrbit::ThetaOne)
                && classify_point(v).ok() == Some(ThetaOrbit::ThetaOne)
            {
                set.type2
                    .push(TessellationEdge::new(u.clone(), v.clone(), EdgeKind::EvenType2));
            }
        }
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ecf::{ecf_expand, ext_ecf_expand};

    fn bp(s: &str) -> BoundaryPoint {
        s.parse().unwrap()
    }

    fn syms(s: &str) -> Vec<Symbol> {
        Symbol::parse_str(s).unwrap()
    }

    #[test]
    fn orbit_classes() {
        assert_eq!(classify_point(&BoundaryPoint::Infinity).unwrap(), ThetaOrbit::ThetaInfinity);
        assert_eq!(classify_point(&bp("1")).unwrap(), ThetaOrbit::ThetaOne);
        assert_eq!(classify_point(&bp("3/2")).unwrap(), ThetaOrbit::ThetaInfinity);
        let e = |a: &str, b: &str| TessellationEdge::new(bp(a), bp(b), EdgeKind::Farey);
        assert_eq!(classify_farey_edge(&e("0", "inf")).unwrap(), FareyEdgeClass::Removed);
        assert_eq!(classify_farey_edge(&e("1", "inf")).unwrap(), FareyEdgeClass::Type1);
        assert_eq!(classify_farey_edge(&e("1", "3/2")).unwrap(), FareyEdgeClass::Type1);
        assert!(classify_farey_edge(&e("1", "3")).is_err());
    }

    #[test]
    fn walk_from_five_halves() {
        let w = cell_walk(&bp("5/2"), &bp("1/3"), 3).unwrap();
        assert_eq!(w.crossings[0], TessellationEdge::new(bp("1"), BoundaryPoint::Infinity, EdgeKind::EvenType1));
        assert_eq!(w.crossings[1], TessellationEdge::new(bp("1"), bp("3"), EdgeKind::EvenType2));
        assert!(matches!(
            cell_walk(&BoundaryPoint::Infinity, &bp("0"), 3),
            Err(Error::DegenerateCrossing(_))
        ));
    }

    #[test]
    fn geometric_first_blocks() {
        let s = even_sequence_geometric(&bp("7/2"), &bp("-1/3"), 10).unwrap();
        assert_eq!(symbols_to_string(s.forward()), "LB");
        let s = even_sequence_geometric(&bp("5/2"), &bp("1/3"), 10).unwrap();
        assert_eq!(symbols_to_string(s.forward()), "C");
        let s = even_sequence_geometric(&bp("-5/2"), &bp("1/3"), 10).unwrap();
        assert_eq!(symbols_to_string(s.forward()), "C");
    }

    #[test]
    fn digit_blocks() {
        let fwd = |x: &str| ecf_expand(&bp(x), 100).unwrap();
        let none = ext_ecf_expand(&BoundaryPoint::zero(), 10).unwrap();
        let f = |x: &str| symbols_to_string(even_sequence_from_digits(&fwd(x), &none, 50).unwrap().forward());
        assert_eq!(f("7/2"), "LBC");
        assert_eq!(f("5/2"), "CC");
        assert_eq!(f("13/2"), "LLCC");
        assert_eq!(f("-7/2"), "RBC");
    }

    #[test]
    fn series_and_recoding() {
        let seven_thirds = crate::cf::rcf_expand(&bp("7/3"), 100).unwrap();
        let half = crate::cf::rcf_expand(&bp("1/2"), 100).unwrap();
        let s = series_sequence_from_digits(&seven_thirds, &half, Sign::Plus, 50).unwrap();
        assert_eq!(s.to_string(), "RRξLLηRRR");
        let m = series_sequence_from_digits(&seven_thirds, &half, Sign::Minus, 50).unwrap();
        assert_eq!(m.to_string(), "LLξRRηLLL");
        assert_eq!(recode_series_to_even(&syms("LLR")).unwrap(), syms("LB"));
        assert_eq!(recode_series_to_even(&syms("LR")).unwrap(), syms("C"));
        assert_eq!(recode_series_to_even(&syms("RRL")).unwrap(), syms("RB"));
        assert!(recode_series_to_even(&syms("LBR")).is_err());
        assert!(Symbol::parse_str("LXR").is_err());
    }

    #[test]
    fn symbols_decode_to_digits() {
        let d = digits_from_even_symbols(&syms("LBCRRB"), Sign::Plus).unwrap();
        let s: Vec<String> = d.iter().map(|d| d.to_string()).collect();
        assert_eq!(s, ["(4,-1)", "(2,+1)", "(6,-1)"]);
        assert!(digits_from_even_symbols(&syms("RB"), Sign::Plus).is_err());
    }

    #[test]
    fn xi_eta_examples() {
        let (xi, _) = xi_eta_points(&bp("5/2"), &bp("-1/2"), Convention::EvenGauss).unwrap();
        assert_eq!((xi.re, xi.im_sq), (crate::numeric::rat(1, 1), crate::numeric::rat(9, 4)));
        let (xi, _) = xi_eta_points(&bp("2"), &bp("-2"), Convention::Gauss).unwrap();
        assert_eq!((xi.re, xi.im_sq), (crate::numeric::rat(0, 1), crate::numeric::rat(4, 1)));
        assert!(xi_eta_points(&bp("3/2"), &bp("5"), Convention::EvenGauss).is_err());
    }

    #[test]
    fn eta_maps_to_next_xi() {
        let (f, b) = (bp("7/2"), bp("-1/3"));
        let (_, eta) = xi_eta_points(&f, &b, Convention::EvenGauss).unwrap();
        let p = EndpointPair::new(f.clone(), b.clone(), Domain::Se).unwrap();
        let g = rho_e_branch(&p).unwrap().g;
        let (xi1, _) = xi_eta_points(&g.apply(&f), &g.apply(&b), Convention::EvenGauss).unwrap();
        assert_eq!(eta.unwrap().apply(&g), xi1);
    }

    #[test]
    fn geometric_matches_digits_on_samples() {
        for i in 0..200 {
            let (f, b) = crate::sample::even_geodesic(&mut crate::sample::rng_for(11, i), 12, 8);
            let geo = even_sequence_geometric(&f, &b, 12).unwrap();
            let fe = ecf_expand(&f, 100).unwrap();
            let be = ext_ecf_expand(&Sign::of(&f).flip().apply(&b), 100).unwrap();
            let dig = even_sequence_from_digits(&fe, &be, 12).unwrap();
            let n = geo.forward().len().min(dig.forward().len());
            assert!(n >= 8, "{f} {b}: {geo} vs {dig}");
            assert_eq!(geo.forward()[..n], dig.forward()[..n], "{f} {b}: {geo} vs {dig}");
            let (gb, db) = (geo.backward(), dig.backward());
            let m = gb.len().min(db.len());
            assert!(m >= 8, "{f} {b}: {geo} vs {dig}");
            assert_eq!(gb[gb.len() - m..], db[db.len() - m..], "{f} {b}: {geo} vs {dig}");
        }
    }

    #[test]
    fn recoded_series_matches_even_forward() {
        for i in 0..200 {
            let (f, b) = crate::sample::even_geodesic(&mut crate::sample::rng_for(12, i), 12, 8);
            let eps = Sign::of(&f);
            let fa = crate::cf::rcf_expand(&f.abs(), 200).unwrap();
            let none = crate::cf::rcf_expand(&BoundaryPoint::zero(), 1).unwrap();
            let series = series_sequence_from_digits(&fa, &none, eps, 400).unwrap();
            let recoded = recode_series_with_start(&series.forward()[1..], Symbol::side(eps)).unwrap();
            let geo = even_sequence_geometric(&f, &b, 12).unwrap();
            let n = geo.forward().len().min(recoded.len());
            assert!(n >= 8, "{f}: {} vs {}", symbols_to_string(&recoded), geo);
            assert_eq!(recoded[..n], geo.forward()[..n], "{f}: {} vs {}", symbols_to_string(&recoded), geo);
        }
    }
}
