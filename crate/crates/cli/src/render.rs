//! SVG drawings of m-diagrams and webs.
//!
//! Boundary point `i` sits at `(40 i, 0)` and arcs are drawn above the
//! line, toward negative `y`. A web that is the resolution of some
//! m-diagram is drawn in that diagram's geometry; any other web gets a
//! barycentric layout with the boundary on the line.

use std::fmt::Write;

use tabweb::mdiagram::{ArrangementVertex, FaceSide};
use tabweb::webmap::VertexKind;
use tabweb::{MDiagram, Orientation, Web};

const UNIT: f64 = 40.0;
const STEM: f64 = 12.0;
const ARROW: f64 = 5.0;

fn px(x: f64) -> String {
    format!("{x:.2}")
}

struct Canvas {
    body: String,
    min_x: f64,
    max_x: f64,
    min_y: f64,
}

impl Canvas {
    fn new(n: usize) -> Self {
        Canvas {
            body: String::new(),
            min_x: 0.0,
            max_x: UNIT * (n as f64 + 1.0),
            min_y: -UNIT,
        }
    }

    fn extend_height(&mut self, y: f64) {
        if y - 20.0 < self.min_y {
            self.min_y = y - 20.0;
        }
    }

    fn line(&mut self, class: &str, (x1, y1): (f64, f64), (x2, y2): (f64, f64)) {
        self.extend_height(y1.min(y2));
        let _ = writeln!(
            self.body,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(x1),
            px(y1),
            px(x2),
            px(y2)
        );
    }

    /// Small triangle at `(x, y)` pointing along `(dx, dy)`.
    fn arrow(&mut self, (x, y): (f64, f64), (dx, dy): (f64, f64)) {
        let len = (dx * dx + dy * dy).sqrt();
        if len == 0.0 {
            return;
        }
        let (ux, uy) = (dx / len, dy / len);
        let tip = (x + ux * ARROW, y + uy * ARROW);
        let left = (x - ux * ARROW - uy * ARROW, y - uy * ARROW + ux * ARROW);
        let right = (x - ux * ARROW + uy * ARROW, y - uy * ARROW - ux * ARROW);
        let _ = writeln!(
            self.body,
            r#"<polygon class="arrow" points="{},{} {},{} {},{}"/>"#,
            px(tip.0),
            px(tip.1),
            px(left.0),
            px(left.1),
            px(right.0),
            px(right.1)
        );
    }

    fn depth(&mut self, (x, y): (f64, f64), depth: usize) {
        let _ = writeln!(
            self.body,
            r#"<text class="depth" x="{}" y="{}">{depth}</text>"#,
            px(x),
            px(y)
        );
    }

    fn boundary(&mut self, n: usize) {
        let end = self.max_x;
        self.line("boundary", (0.0, 0.0), (end, 0.0));
        for p in 1..=n {
            let x = UNIT * p as f64;
            let _ = writeln!(
                self.body,
                r#"<circle class="point" cx="{}" cy="0.00" r="2.00"/>"#,
                px(x)
            );
            let _ = writeln!(
                self.body,
                r#"<text class="label" x="{}" y="16.00">{p}</text>"#,
                px(x)
            );
        }
    }

    fn finish(self) -> String {
        let width = self.max_x - self.min_x;
        let height = 30.0 - self.min_y;
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
            px(width),
            px(height),
            px(self.min_x),
            px(self.min_y),
            px(width),
            px(height)
        );
        out.push_str(
            "<style>.arc,.edge{fill:none;stroke:black}.stem{stroke:black}.connector{stroke:black;stroke-width:2}.boundary{stroke:gray}.depth{font-size:9px;fill:blue}.label{font-size:10px;text-anchor:middle}</style>\n",
        );
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

fn to_f64(r: tabweb::Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Draws an m-diagram. Three-row diagrams are drawn resolved: a stem at
/// each m's middle point, a connector at each crossing, and arrowheads
/// showing edge directions.
pub fn render_mdiagram(d: &MDiagram, depths: bool) -> String {
    let n = d.n_points();
    let mut c = Canvas::new(n);
    c.boundary(n);
    let resolved = d.is_three_row();
    for a in d.arcs() {
        let (x1, x2) = (UNIT * a.lo as f64, UNIT * a.hi as f64);
        let r = (x2 - x1) / 2.0;
        c.extend_height(-r);
        let _ = writeln!(
            c.body,
            r#"<path class="arc" d="M {} 0.00 A {} {} 0 0 1 {} 0.00"/>"#,
            px(x1),
            px(r),
            px(r),
            px(x2)
        );
        if resolved {
            let rightward = a.level == 1;
            c.arrow(((x1 + x2) / 2.0, -r), (if rightward { 1.0 } else { -1.0 }, 0.0));
        }
    }
    if resolved {
        for m in d.ms() {
            let x = UNIT * m.middle as f64;
            c.line("stem", (x, 0.0), (x, -STEM));
            c.arrow((x, -STEM / 2.0), (0.0, -1.0));
        }
        for cr in d.crossings() {
            let x = UNIT * to_f64(cr.x);
            let y = -UNIT * to_f64(cr.y_squared).sqrt();
            c.line("connector", (x, y - 5.0), (x, y + 5.0));
        }
    }
    if depths {
        let arr = d.arrangement();
        let table = arr.circle_depth();
        for (f, face) in table.faces.iter().enumerate() {
            let at = if face.is_outer {
                (UNIT / 2.0, -8.0)
            } else if let Some(&p) = face.witnesses.first() {
                (UNIT * (p as f64 + 0.5), -8.0)
            } else {
                face_centroid(&arr, f)
            };
            c.depth(at, face.depth);
        }
    }
    c.finish()
}

fn vertex_position(arr: &tabweb::Arrangement, v: ArrangementVertex) -> (f64, f64) {
    match v {
        ArrangementVertex::Boundary(p) => (UNIT * p as f64, 0.0),
        ArrangementVertex::Point(q) => {
            let pt = &arr.points()[q];
            (UNIT * to_f64(pt.x), -UNIT * to_f64(pt.y_squared).sqrt())
        }
    }
}

fn face_centroid(arr: &tabweb::Arrangement, f: usize) -> (f64, f64) {
    let mut sum = (0.0, 0.0);
    let mut count = 0.0;
    for side in arr.face_boundary(f) {
        let p = match side {
            FaceSide::Wall { from_point } => (UNIT * from_point as f64, 0.0),
            FaceSide::Segment { segment, forward } => {
                let s = arr.segments()[segment];
                vertex_position(arr, if forward { s.from } else { s.to })
            }
        };
        sum.0 += p.0;
        sum.1 += p.1;
        count += 1.0;
    }
    if count == 0.0 {
        (UNIT / 2.0, -8.0)
    } else {
        (sum.0 / count, sum.1 / count)
    }
}

/// Draws a web, through its m-diagram when it is a resolution of one.
pub fn render_web(w: &Web, depths: bool) -> String {
    if let Some(d) = source_diagram(w) {
        return render_mdiagram(&d, depths);
    }
    render_web_layout(w, depths)
}

fn source_diagram(w: &Web) -> Option<MDiagram> {
    let t = w.extended_depth_map().or_else(|_| w.depth_map()).ok()?;
    let again = Web::from_tableau(&t).ok()?;
    (again.canonical_form() == w.canonical_form()).then(|| MDiagram::from_tableau(&t))
}

/// Barycentric layout: boundary vertices fixed on the line, each internal
/// vertex repeatedly moved to the mean of its neighbors.
fn render_web_layout(w: &Web, depths: bool) -> String {
    let n = w.n_boundary();
    let mut c = Canvas::new(n);
    c.boundary(n);
    let verts = w.vertices();
    let mut pos: Vec<(f64, f64)> = verts
        .iter()
        .map(|v| match v.kind {
            VertexKind::Boundary(l) => (UNIT * l as f64, 0.0),
            VertexKind::Internal => (UNIT * (n as f64 + 1.0) / 2.0, -UNIT),
        })
        .collect();
    let mut neighbors = vec![Vec::new(); verts.len()];
    for &(a, b) in w.edges() {
        neighbors[a].push(b);
        neighbors[b].push(a);
    }
    // internal vertices start spread out so that the iteration is stable
    let mut k = 0.0;
    for (v, vx) in verts.iter().enumerate() {
        if vx.kind == VertexKind::Internal {
            k += 1.0;
            pos[v] = (UNIT * (0.5 + k * (n as f64) / (w.num_internal() as f64 + 1.0)), -UNIT - 4.0 * k);
        }
    }
    for _ in 0..200 {
        for v in 0..verts.len() {
            if verts[v].kind != VertexKind::Internal || neighbors[v].is_empty() {
                continue;
            }
            let (mut sx, mut sy) = (0.0, 0.0);
            for &u in &neighbors[v] {
                sx += pos[u].0;
                sy += pos[u].1;
            }
            let k = neighbors[v].len() as f64;
            // pull slightly upward so internal vertices stay above the line
            pos[v] = (sx / k, (sy / k).min(-UNIT / 2.0));
        }
    }
    for &(a, b) in w.edges() {
        c.line("edge", pos[a], pos[b]);
        let mid = ((pos[a].0 + pos[b].0) / 2.0, (pos[a].1 + pos[b].1) / 2.0);
        c.arrow(mid, (pos[b].0 - pos[a].0, pos[b].1 - pos[a].1));
    }
    for (v, vx) in verts.iter().enumerate() {
        if vx.kind == VertexKind::Internal {
            let class = match vx.orientation {
                Orientation::Source => "source",
                Orientation::Sink => "sink",
            };
            let _ = writeln!(
                c.body,
                r#"<circle class="{class}" cx="{}" cy="{}" r="3.00"/>"#,
                px(pos[v].0),
                px(pos[v].1)
            );
        }
    }
    if depths {
        let table = w.faces();
        for face in &table.faces {
            let at = if face.is_outer {
                (UNIT / 2.0, -8.0)
            } else if let Some(&p) = face.witnesses.first() {
                (UNIT * (p as f64 + 0.5), -8.0)
            } else {
                let mut sum = (0.0, 0.0);
                let mut count: f64 = 0.0;
                for step in &face.walk {
                    if let tabweb::webmap::FaceStep::Edge { edge, forward } = *step {
                        let (a, b) = w.edges()[edge];
                        let p = pos[if forward { a } else { b }];
                        sum.0 += p.0;
                        sum.1 += p.1;
                        count += 1.0;
                    }
                }
                (sum.0 / count.max(1.0), sum.1 / count.max(1.0))
            };
            c.depth(at, face.depth);
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(s: &str) -> MDiagram {
        MDiagram::from_tableau(&s.parse().unwrap())
    }

    #[test]
    fn single_m_elements() {
        let svg = render_mdiagram(&diagram("1 / 2 / 3"), false);
        assert_eq!(svg.matches(r#"class="arc""#).count(), 2);
        assert_eq!(svg.matches(r#"class="stem""#).count(), 1);
        assert_eq!(svg.matches(r#"class="connector""#).count(), 0);
    }

    #[test]
    fn one_connector_for_one_crossing() {
        let w = Web::from_tableau(&"1 2 / 3 4 / 5 6".parse().unwrap()).unwrap();
        let svg = render_web(&w, false);
        assert_eq!(svg.matches(r#"class="connector""#).count(), 1);
    }

    #[test]
    fn depth_labels() {
        let svg = render_mdiagram(&diagram("1 2 / 3 5 / 4 6"), true);
        let mut labels: Vec<&str> = svg
            .lines()
            .filter(|l| l.contains(r#"class="depth""#))
            .map(|l| &l[l.find('>').unwrap() + 1..l.find("</").unwrap()])
            .collect();
        labels.sort();
        assert_eq!(labels, vec!["0", "1", "1", "2", "2"]);
    }

    #[test]
    fn fallback_layout_is_deterministic() {
        let bigon = "N=2\nV 0 boundary 1\nV 1 boundary 2\nV 2 internal sink\nV 3 internal source\n\
                     E 0 2\nE 3 2\nE 3 2\nE 3 1\nR 0: 0\nR 1: 7\nR 2: 1 5 3\nR 3: 6 2 4\n";
        let w: Web = bigon.parse().unwrap();
        let a = render_web(&w, true);
        assert_eq!(a, render_web(&w, true));
        assert!(a.contains(r#"class="edge""#));
    }
}
