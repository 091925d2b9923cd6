//! SVG rendering of the Farey and even tessellations in the upper half-plane.

use std::fmt::Write;

use serde::Serialize;

use evenfarey::cutting::{
    enumerate_edges, even_sequence_geometric, geometric_segments, xi_eta_points, Convention,
    Tessellation, TessellationEdge,
};
use evenfarey::{BoundaryPoint, Result};

/// Pixels per unit.
const SCALE: f64 = 100.0;
const LABEL_WINDOW: usize = 30;

pub struct View {
    pub re_min: f64,
    pub re_max: f64,
    pub im_max: f64,
}

impl View {
    fn px(&self, re: f64) -> f64 {
        (re - self.re_min) * SCALE
    }

    fn py(&self, im: f64) -> f64 {
        (self.im_max - im) * SCALE
    }

    fn contains(&self, x: &BoundaryPoint) -> bool {
        x.is_infinite() || (self.re_min..=self.re_max).contains(&x.to_f64())
    }
}

#[derive(Debug, Default, Serialize)]
pub struct EdgeCounts {
    pub primary: usize,
    pub type2: usize,
    pub removed: usize,
}

pub struct Rendered {
    pub document: String,
    pub counts: EdgeCounts,
    pub labels: Option<String>,
}

/// `(centre, radius)` of a semicircle, or `Err(x)` for the vertical line at `x`.
fn geodesic_shape(u: &BoundaryPoint, v: &BoundaryPoint) -> std::result::Result<(f64, f64), f64> {
    match (u.is_infinite(), v.is_infinite()) {
        (true, _) => Err(v.to_f64()),
        (_, true) => Err(u.to_f64()),
        _ => {
            let (a, b) = (u.to_f64(), v.to_f64());
            Ok(((a + b) / 2.0, (b - a).abs() / 2.0))
        }
    }
}

fn edge_path(v: &View, e: &TessellationEdge) -> String {
    match geodesic_shape(&e.u, &e.v) {
        Err(x) => format!("M {:.3} {:.3} V 0", v.px(x), v.py(0.0)),
        Ok((m, r)) => format!(
            "M {:.3} {:.3} A {:.3} {:.3} 0 0 1 {:.3} {:.3}",
            v.px(m - r),
            v.py(0.0),
            r * SCALE,
            r * SCALE,
            v.px(m + r),
            v.py(0.0)
        ),
    }
}

/// Intersection of the semicircle `(m, r)` with the geodesic `(u, v)`.
fn crossing(m: f64, r: f64, e: &TessellationEdge) -> Option<(f64, f64)> {
    let x = match geodesic_shape(&e.u, &e.v) {
        Err(x) => x,
        Ok((m0, r0)) => (r * r - r0 * r0 - m * m + m0 * m0) / (2.0 * (m0 - m)),
    };
    let h = r * r - (x - m) * (x - m);
    (h > 0.0).then(|| (x, h.sqrt()))
}

pub fn render(
    t: Tessellation,
    max_den: i64,
    geodesic: Option<&(BoundaryPoint, BoundaryPoint)>,
    view: &View,
) -> Result<Rendered> {
    if max_den < 1 {
        return Err(evenfarey::Error::Unsupported("max denominator must be at least 1".into()));
    }
    let set = enumerate_edges(t, max_den, view.re_min.floor() as i64, view.re_max.ceil() as i64);
    let visible = |e: &&TessellationEdge| view.contains(&e.u) && view.contains(&e.v);
    let primary: Vec<&TessellationEdge> = set.primary.iter().filter(visible).collect();
    let type2: Vec<&TessellationEdge> = set.type2.iter().filter(visible).collect();
    let removed: Vec<&TessellationEdge> = set.removed.iter().filter(visible).collect();

    let (w, h) = ((view.re_max - view.re_min) * SCALE, view.im_max * SCALE);
    let mut d = String::new();
    let _ = writeln!(d, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        d,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.3} {h:.3}">"#
    );
    let _ = writeln!(d, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let layers: [(&str, &str, &[&TessellationEdge]); 3] = [
        ("removed", r##"stroke="#c8c8c8" stroke-width="1""##, &removed),
        ("type1", r#"stroke="black" stroke-width="1.2""#, &primary),
        ("type2", r#"stroke="black" stroke-width="1" stroke-dasharray="5,4""#, &type2),
    ];
    for (class, style, edges) in layers {
        let _ = writeln!(d, r#"<g class="{class}" fill="none" {style}>"#);
        for e in edges {
            let _ = writeln!(d, r#"<path d="{}"><title>{e}</title></path>"#, edge_path(view, e));
        }
        let _ = writeln!(d, "</g>");
    }
    let _ = writeln!(
        d,
        r#"<line class="axis" x1="0" y1="{h:.3}" x2="{w:.3}" y2="{h:.3}" stroke="black" stroke-width="1.5"/>"#
    );

    let mut labels = None;
    if let Some((f, b)) = geodesic {
        let seq = even_sequence_geometric(f, b, LABEL_WINDOW)?;
        labels = Some(seq.to_string());
        let g = TessellationEdge::new(f.clone(), b.clone(), evenfarey::cutting::EdgeKind::Farey);
        let _ = writeln!(
            d,
            r#"<g class="geodesic" fill="none" stroke="crimson" stroke-width="2"><path d="{}"/></g>"#,
            edge_path(view, &g)
        );
        if let Ok((m, r)) = geodesic_shape(f, b) {
            let _ = writeln!(d, r#"<g class="labels" font-family="sans-serif" font-size="14" fill="crimson">"#);
            for s in geometric_segments(f, b, 2 * LABEL_WINDOW + 8)? {
                if let (Some(p), Some(q)) = (crossing(m, r, &s.from), crossing(m, r, &s.to)) {
                    let x = (p.0 + q.0) / 2.0;
                    let y = (r * r - (x - m) * (x - m)).max(0.0).sqrt();
                    if (view.re_min..=view.re_max).contains(&x) && y <= view.im_max {
                        let _ = writeln!(
                            d,
                            r#"<text x="{:.3}" y="{:.3}">{}</text>"#,
                            view.px(x) + 3.0,
                            view.py(y) - 3.0,
                            s.symbol
                        );
                    }
                }
            }
            let _ = writeln!(d, "</g>");
        }
        if let Ok((xi, eta)) = xi_eta_points(f, b, Convention::EvenGauss) {
            let marks = [("xi", Some(xi)), ("eta", eta)];
            for (name, p) in marks {
                if let Some(p) = p {
                    let (x, y) = p.to_f64();
                    let _ = writeln!(
                        d,
                        r#"<circle class="{name}" cx="{:.3}" cy="{:.3}" r="4" fill="royalblue"><title>{name} = {p}</title></circle>"#,
                        view.px(x),
                        view.py(y)
                    );
                }
            }
        }
    }
    let _ = writeln!(d, "</svg>");
    Ok(Rendered {
        document: d,
        counts: EdgeCounts {
            primary: primary.len(),
            type2: type2.len(),
            removed: removed.len(),
        },
        labels,
    })
}
