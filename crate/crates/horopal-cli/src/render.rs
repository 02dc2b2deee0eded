//! SVG output in the Poincaré disk. Model coordinates are drawn directly with
//! the y axis flipped, inside the viewBox `-1.05 -1.05 2.1 2.1`.

use std::fmt::Write as _;

use horopal::curves::Arc;
use horopal::measure::Region;
use horopal::model::HPoint;

#[derive(Clone, Debug)]
pub enum Item {
    Arc { arc: Arc<f64>, stroke: String },
    Point { at: HPoint<f64>, fill: String },
}

#[derive(Clone, Debug, Default)]
pub struct Scene {
    pub items: Vec<Item>,
}

impl Scene {
    pub fn new() -> Self {
        Scene::default()
    }

    pub fn arc(&mut self, arc: &Arc<f64>, stroke: &str) {
        self.items.push(Item::Arc { arc: *arc, stroke: stroke.to_string() });
    }

    pub fn region(&mut self, region: &Region<f64>, stroke: &str) {
        for a in region.arcs() {
            self.arc(a, stroke);
        }
    }

    pub fn point(&mut self, at: HPoint<f64>, fill: &str) {
        self.items.push(Item::Point { at, fill: fill.to_string() });
    }

    pub fn to_svg(&self) -> String {
        let mut s = String::new();
        s.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.05 -1.05 2.1 2.1\" width=\"800\" height=\"800\">\n");
        s.push_str("<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"0.004\">\n");
        s.push_str("<circle cx=\"0\" cy=\"0\" r=\"1\" stroke=\"black\"/>\n");
        for item in &self.items {
            match item {
                Item::Arc { arc, stroke } => {
                    let _ = writeln!(s, "<path d=\"{}\" stroke=\"{}\"/>", path_data(arc), stroke);
                }
                Item::Point { at, fill } => {
                    let _ = writeln!(s, "<circle cx=\"{}\" cy=\"{}\" r=\"0.01\" fill=\"{}\" stroke=\"none\"/>", n(at.x()), n(at.y()), fill);
                }
            }
        }
        s.push_str("</g>\n</svg>\n");
        s
    }
}

fn n(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" { "0.000000".to_string() } else { s }
}

/// Path data for one arc: a straight segment or a circular SVG arc command.
/// Full circles are split in two halves.
fn path_data(arc: &Arc<f64>) -> String {
    let (a, b) = (arc.start(), arc.end());
    match arc.euclid_arc() {
        None => format!("M {} {} L {} {}", n(a.x()), n(a.y()), n(b.x()), n(b.y())),
        Some((c, r, a0, sweep)) => {
            let at = |t: f64| (c.re + r * t.cos(), c.im + r * t.sin());
            let flag = if sweep > 0.0 { 1 } else { 0 };
            let (x0, y0) = at(a0);
            let mut d = format!("M {} {}", n(x0), n(y0));
            let pieces = if sweep.abs() > std::f64::consts::PI { 2 } else { 1 };
            for k in 1..=pieces {
                let (x, y) = at(a0 + sweep * k as f64 / pieces as f64);
                let _ = write!(d, " A {} {} 0 0 {} {} {}", n(r), n(r), flag, n(x), n(y));
            }
            d
        }
    }
}
