//! Directed webs on a disk: trivalent internal vertices, univalent boundary
//! vertices, every vertex a source or a sink.
//!
//! Boundary vertices sit on the rim of the disk in label order. The rim is
//! modeled by wall edges: wall `w` runs from label `w + 1` to label `w + 2`,
//! and the last wall closes the circle from `N` back to `1`. Walls are not
//! stored; they follow from the labels, so rotating the disk is a relabeling.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::format::{self, FormatError, ParseError};
use crate::mdiagram::{Arrangement, ArrangementVertex, MDiagram, PointRole};
use crate::planar::{edge_of, twin, Faces, PlanarMap};
use crate::tableau::{StandardTableau, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WebError {
    #[error("boundary labels must be exactly 1..={n}")]
    BadBoundaryLabels { n: usize },
    #[error("vertex ids must be 0..V-1, each listed once (problem at {id})")]
    BadVertex { id: usize },
    #[error("edge {edge} has an invalid endpoint or is a loop")]
    BadEdge { edge: usize },
    #[error("rotation at vertex {vertex} is not a cyclic order of its half-edges")]
    BadRotation { vertex: usize },
    #[error("vertex {vertex} has the wrong degree")]
    Degree { vertex: usize },
    #[error("vertex {vertex} is neither a pure source nor a pure sink")]
    Orientation { vertex: usize },
    #[error("web is not connected to the boundary")]
    Disconnected,
    #[error("rotation system does not embed in a disk with the boundary on the rim")]
    NonPlanar,
    #[error("diagram has arcs above level 2")]
    NotThreeRow,
    #[error("boundary vertex {label} is a sink")]
    NotAllSources { label: usize },
    #[error("web is not irreducible: {witness}")]
    NotIrreducible { witness: NonReduced },
    #[error("web is outside the domain of the extended depth map at label {label}")]
    DomainViolation { label: usize },
    #[error("position {position} is outside 0..={max}")]
    PositionOutOfRange { position: usize, max: usize },
    #[error("depth changes by {delta} across boundary vertex {label}")]
    UnexpectedDelta { label: usize, delta: i64 },
    #[error("more than two arcs meet at one crossing point")]
    CoincidentCrossings,
    #[error("depth data does not give a standard tableau: {0}")]
    NotStandard(#[from] TableauError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Source,
    Sink,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Boundary(usize),
    Internal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub kind: VertexKind,
    pub orientation: Orientation,
}

/// Reason a web fails to be irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonReduced {
    /// An interior face (index into [`FaceTable::faces`]) with fewer than
    /// six edges.
    SmallFace { face: usize, edges: usize },
    IsolatedBoundary { label: usize },
}

impl fmt::Display for NonReduced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonReduced::SmallFace { face, edges } => {
                write!(f, "interior face {face} has {edges} edges")
            }
            NonReduced::IsolatedBoundary { label } => {
                write!(f, "boundary vertex {label} is isolated")
            }
        }
    }
}

/// A web. Edge `e` runs `edges[e].0 -> edges[e].1` and owns half-edges `2e`
/// (at the tail) and `2e + 1` (at the head). `rotation[v]` lists the
/// half-edges at `v` counterclockwise; at a boundary vertex the list starts
/// just after the wall leading to the next label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Web {
    n_boundary: usize,
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<usize>>,
    boundary: Vec<usize>,
}

/// One step of a face walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceStep {
    /// The rim wall from `from_label` to the next label.
    Wall { from_label: usize },
    /// Edge `edge`, walked tail to head when `forward`.
    Edge { edge: usize, forward: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebFace {
    pub walk: Vec<FaceStep>,
    /// Number of non-wall steps in the walk.
    pub edges: usize,
    pub is_outer: bool,
    pub touches_wall: bool,
    /// Fewest edges crossed to reach the outer face without crossing walls.
    pub depth: usize,
    /// Each `p` here means the face borders the rim between `p` and `p + 1`.
    pub witnesses: Vec<usize>,
}

impl WebFace {
    pub fn is_interior(&self) -> bool {
        !self.is_outer && !self.touches_wall
    }
}

/// Faces inside the disk. The region outside the rim is not listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTable {
    pub faces: Vec<WebFace>,
    pub outer: usize,
}

impl FaceTable {
    pub fn depths(&self) -> Vec<usize> {
        self.faces.iter().map(|f| f.depth).collect()
    }
}

/// Depth change across each boundary vertex, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthProfile {
    pub deltas: Vec<i64>,
    pub orientations: Vec<Orientation>,
}

/// A resolved web with the arrangement it came from and the face
/// correspondence between them.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub web: Web,
    pub arrangement: Arrangement,
    /// Arrangement face index to web face index.
    pub face_map: Vec<usize>,
    consistent: bool,
}

impl Resolution {
    /// Whether every arrangement face maps its whole boundary into a single
    /// web face and distinct faces map to distinct faces.
    pub fn face_map_is_bijective(&self) -> bool {
        self.consistent
    }
}

/// The web together with its rim walls as one planar map.
struct Disk {
    map: PlanarMap,
    faces: Faces,
    n_edges: usize,
    exterior: usize,
}

impl Disk {
    fn table_face(&self, h: usize) -> Option<usize> {
        let f = self.faces.face_of[h];
        match f.cmp(&self.exterior) {
            std::cmp::Ordering::Less => Some(f),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(f - 1),
        }
    }

    fn raw_face(&self, f: usize) -> usize {
        if f < self.exterior {
            f
        } else {
            f + 1
        }
    }
}

impl Web {
    /// Validates and builds a web. `vertices[v]` for boundary vertices must
    /// carry labels `1..=n_boundary`.
    pub fn new(
        n_boundary: usize,
        vertices: Vec<Vertex>,
        edges: Vec<(usize, usize)>,
        rotation: Vec<Vec<usize>>,
    ) -> Result<Web, WebError> {
        let mut boundary = vec![usize::MAX; n_boundary];
        for (v, vx) in vertices.iter().enumerate() {
            if let VertexKind::Boundary(l) = vx.kind {
                if l == 0 || l > n_boundary || boundary[l - 1] != usize::MAX {
                    return Err(WebError::BadBoundaryLabels { n: n_boundary });
                }
                boundary[l - 1] = v;
            }
        }
        if boundary.contains(&usize::MAX) {
            return Err(WebError::BadBoundaryLabels { n: n_boundary });
        }
        for (e, &(a, b)) in edges.iter().enumerate() {
            if a >= vertices.len() || b >= vertices.len() || a == b {
                return Err(WebError::BadEdge { edge: e });
            }
        }
        if rotation.len() != vertices.len() {
            return Err(WebError::BadRotation {
                vertex: rotation.len().min(vertices.len()),
            });
        }
        PlanarMap::new(&edges, rotation.clone())
            .map_err(|crate::planar::MapError::Rotation { vertex }| WebError::BadRotation { vertex })?;
        for (v, vx) in vertices.iter().enumerate() {
            let rot = &rotation[v];
            let ok = match vx.kind {
                VertexKind::Boundary(_) => rot.len() <= 1,
                VertexKind::Internal => rot.len() == 3,
            };
            if !ok {
                return Err(WebError::Degree { vertex: v });
            }
            let want = match vx.orientation {
                Orientation::Source => 0,
                Orientation::Sink => 1,
            };
            if rot.iter().any(|&h| h % 2 != want) {
                return Err(WebError::Orientation { vertex: v });
            }
        }
        if n_boundary == 0 && !vertices.is_empty() {
            return Err(WebError::Disconnected);
        }
        let web = Web {
            n_boundary,
            vertices,
            edges,
            rotation,
            boundary,
        };
        if n_boundary > 0 {
            let disk = web.disk();
            if !disk.map.is_connected() {
                return Err(WebError::Disconnected);
            }
            let v = disk.map.num_vertices() as i64;
            let e = disk.map.num_edges() as i64;
            let f = disk.faces.len() as i64;
            if v - e + f != 2 || disk.faces.walks[disk.exterior].len() != n_boundary {
                return Err(WebError::NonPlanar);
            }
        }
        Ok(web)
    }

    pub fn empty() -> Web {
        Web {
            n_boundary: 0,
            vertices: Vec::new(),
            edges: Vec::new(),
            rotation: Vec::new(),
            boundary: Vec::new(),
        }
    }

    /// The web of a tableau: its m-diagram, resolved.
    pub fn from_tableau(t: &StandardTableau) -> Result<Web, WebError> {
        resolve(&MDiagram::from_tableau(t))
    }

    pub fn n_boundary(&self) -> usize {
        self.n_boundary
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Vertex id of boundary label `label` (1-based).
    pub fn boundary_vertex(&self, label: usize) -> usize {
        self.boundary[label - 1]
    }

    pub fn num_internal(&self) -> usize {
        self.vertices.len() - self.n_boundary
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    fn wall_index(&self, from_label: usize) -> usize {
        self.edges.len() + from_label - 1
    }

    fn disk(&self) -> Disk {
        let n = self.n_boundary;
        let m = self.edges.len();
        let mut ends = self.edges.clone();
        for w in 0..n {
            ends.push((self.boundary[w], self.boundary[(w + 1) % n]));
        }
        let rotation = self
            .vertices
            .iter()
            .enumerate()
            .map(|(v, vx)| match vx.kind {
                VertexKind::Boundary(p) => {
                    let mut rot = vec![2 * (m + p - 1)];
                    rot.extend_from_slice(&self.rotation[v]);
                    rot.push(2 * (m + (p + n - 2) % n) + 1);
                    rot
                }
                VertexKind::Internal => self.rotation[v].clone(),
            })
            .collect();
        let map = PlanarMap::new(&ends, rotation).expect("walls extend a valid rotation");
        let faces = map.trace_faces();
        let exterior = if n == 0 { usize::MAX } else { faces.face_of[2 * m + 1] };
        Disk {
            map,
            faces,
            n_edges: m,
            exterior,
        }
    }

    /// Traces the faces and computes their path depths.
    pub fn faces(&self) -> FaceTable {
        let n = self.n_boundary;
        if n == 0 {
            return FaceTable {
                faces: vec![WebFace {
                    walk: Vec::new(),
                    edges: 0,
                    is_outer: true,
                    touches_wall: false,
                    depth: 0,
                    witnesses: Vec::new(),
                }],
                outer: 0,
            };
        }
        let disk = self.disk();
        let m = disk.n_edges;
        let outer_raw = disk.faces.face_of[2 * self.wall_index(n)];
        let dist = disk.faces.dual_distances(outer_raw, |e| e < m);
        let outer = disk.table_face(2 * self.wall_index(n)).expect("outer face is inside");
        let count = disk.faces.len() - 1;
        let faces = (0..count)
            .map(|f| {
                let raw = disk.raw_face(f);
                let walk: Vec<FaceStep> = disk.faces.walks[raw]
                    .iter()
                    .map(|&h| {
                        let e = edge_of(h);
                        if e >= m {
                            FaceStep::Wall { from_label: e - m + 1 }
                        } else {
                            FaceStep::Edge {
                                edge: e,
                                forward: h % 2 == 0,
                            }
                        }
                    })
                    .collect();
                let edges = walk
                    .iter()
                    .filter(|s| matches!(s, FaceStep::Edge { .. }))
                    .count();
                let witnesses: Vec<usize> = walk
                    .iter()
                    .filter_map(|s| match *s {
                        FaceStep::Wall { from_label } if from_label < n => Some(from_label),
                        _ => None,
                    })
                    .collect();
                WebFace {
                    touches_wall: edges < walk.len(),
                    walk,
                    edges,
                    is_outer: f == outer,
                    depth: dist[raw].expect("every face reaches the outer face"),
                    witnesses,
                }
            })
            .collect();
        FaceTable { faces, outer }
    }

    /// Same as [`Web::faces`]; named for the depth it records.
    pub fn path_depth(&self) -> FaceTable {
        self.faces()
    }

    /// The first obstruction to irreducibility, if any.
    pub fn reducedness(&self) -> Option<NonReduced> {
        for p in 1..=self.n_boundary {
            if self.degree(self.boundary_vertex(p)) == 0 {
                return Some(NonReduced::IsolatedBoundary { label: p });
            }
        }
        let table = self.faces();
        table
            .faces
            .iter()
            .enumerate()
            .find(|(_, f)| f.is_interior() && f.edges < 6)
            .map(|(i, f)| NonReduced::SmallFace {
                face: i,
                edges: f.edges,
            })
    }

    pub fn is_reduced(&self) -> bool {
        self.reducedness().is_none()
    }

    /// Depth right of each boundary vertex minus depth left of it.
    pub fn boundary_depth_profile(&self) -> DepthProfile {
        let n = self.n_boundary;
        if n == 0 {
            return DepthProfile {
                deltas: Vec::new(),
                orientations: Vec::new(),
            };
        }
        let disk = self.disk();
        let table = self.faces();
        let depth_left_of_wall = |w: usize| {
            let f = disk.table_face(2 * self.wall_index(w)).expect("forward wall faces inward");
            table.faces[f].depth as i64
        };
        let deltas = (1..=n)
            .map(|p| {
                let left = if p == 1 { n } else { p - 1 };
                depth_left_of_wall(p) - depth_left_of_wall(left)
            })
            .collect();
        let orientations = (1..=n)
            .map(|p| self.vertices[self.boundary_vertex(p)].orientation)
            .collect();
        DepthProfile {
            deltas,
            orientations,
        }
    }

    /// Inverse of the tableau-to-web map on irreducible all-source webs:
    /// depth up across `i` puts `i` on the bottom row, level on the middle
    /// row, down on the top row.
    pub fn depth_map(&self) -> Result<StandardTableau, WebError> {
        let profile = self.boundary_depth_profile();
        if let Some(p) = profile
            .orientations
            .iter()
            .position(|&o| o == Orientation::Sink)
        {
            return Err(WebError::NotAllSources { label: p + 1 });
        }
        if let Some(witness) = self.reducedness() {
            return Err(WebError::NotIrreducible { witness });
        }
        let word = profile
            .deltas
            .iter()
            .enumerate()
            .map(|(i, &d)| match d {
                1 => Ok(0),
                0 => Ok(1),
                -1 => Ok(2),
                delta => Err(WebError::UnexpectedDelta { label: i + 1, delta }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(StandardTableau::from_row_word(&word)?)
    }

    /// Depth map extended to webs with boundary sinks, for shapes with two
    /// equal bottom rows and a shorter top row: a drop in depth at a sink
    /// puts the label on the middle row.
    pub fn extended_depth_map(&self) -> Result<StandardTableau, WebError> {
        let profile = self.boundary_depth_profile();
        if let Some(NonReduced::IsolatedBoundary { label }) = self.reducedness() {
            return Err(WebError::DomainViolation { label });
        }
        let mut word = Vec::with_capacity(self.n_boundary);
        for (i, (&d, &o)) in profile.deltas.iter().zip(&profile.orientations).enumerate() {
            let row = match (d, o) {
                (1, Orientation::Source) => 0,
                (0, Orientation::Source) => 1,
                (-1, Orientation::Sink) => 1,
                (-1, Orientation::Source) => 2,
                _ => return Err(WebError::DomainViolation { label: i + 1 }),
            };
            word.push(row);
        }
        let t = StandardTableau::from_row_word(&word)
            .map_err(|_| WebError::DomainViolation { label: self.n_boundary })?;
        let lens = t.shape().row_lengths();
        let in_domain = match lens {
            [] => true,
            [a, b] => a == b,
            [a, b, c] => a == b && c <= b,
            _ => false,
        };
        if !in_domain {
            return Err(WebError::DomainViolation { label: self.n_boundary });
        }
        Ok(t)
    }

    /// Moves boundary vertex 1 to the end: label `l` becomes `l - 1` and
    /// label 1 becomes `N`.
    pub fn rotate(&self) -> Web {
        let n = self.n_boundary;
        let mut out = self.clone();
        for vx in &mut out.vertices {
            if let VertexKind::Boundary(l) = vx.kind {
                vx.kind = VertexKind::Boundary(if l == 1 { n } else { l - 1 });
            }
        }
        if n > 0 {
            out.boundary.rotate_left(1);
        }
        out
    }

    /// Inserts `inner` into the rim gap after label `at`.
    pub fn join(&self, at: usize, inner: &Web) -> Result<Web, WebError> {
        if at > self.n_boundary {
            return Err(WebError::PositionOutOfRange {
                position: at,
                max: self.n_boundary,
            });
        }
        let shift_v = self.vertices.len();
        let shift_h = 2 * self.edges.len();
        let mut vertices: Vec<Vertex> = self
            .vertices
            .iter()
            .map(|vx| match vx.kind {
                VertexKind::Boundary(l) if l > at => Vertex {
                    kind: VertexKind::Boundary(l + inner.n_boundary),
                    ..*vx
                },
                _ => *vx,
            })
            .collect();
        vertices.extend(inner.vertices.iter().map(|vx| match vx.kind {
            VertexKind::Boundary(l) => Vertex {
                kind: VertexKind::Boundary(l + at),
                ..*vx
            },
            VertexKind::Internal => *vx,
        }));
        let mut edges = self.edges.clone();
        edges.extend(inner.edges.iter().map(|&(a, b)| (a + shift_v, b + shift_v)));
        let mut rotation = self.rotation.clone();
        rotation.extend(
            inner
                .rotation
                .iter()
                .map(|rot| rot.iter().map(|h| h + shift_h).collect()),
        );
        Web::new(self.n_boundary + inner.n_boundary, vertices, edges, rotation)
    }

    /// A token line that identifies the web up to isotopy fixing the rim:
    /// equal webs give equal lines regardless of vertex and edge numbering.
    pub fn canonical_form(&self) -> String {
        let n = self.n_boundary;
        let mut tokens = vec![format!("N={n}")];
        if n == 0 {
            return tokens.join(" ");
        }
        let disk = self.disk();
        let m = disk.n_edges;
        let mut index = vec![usize::MAX; self.vertices.len()];
        let root = self.boundary[0];
        index[root] = 0;
        let mut order = vec![root];
        let mut entry = vec![2 * m];
        let mut k = 0;
        while k < order.len() {
            let v = order[k];
            tokens.push(match (self.vertices[v].kind, self.vertices[v].orientation) {
                (VertexKind::Boundary(l), _) => format!("B{l}"),
                (VertexKind::Internal, Orientation::Source) => "Is".to_string(),
                (VertexKind::Internal, Orientation::Sink) => "It".to_string(),
            });
            let rot = disk.map.rotation(v);
            let start = disk.map.slot(entry[k]);
            for i in 0..rot.len() {
                let h = rot[(start + i) % rot.len()];
                let u = disk.map.head(h);
                if index[u] == usize::MAX {
                    index[u] = order.len();
                    order.push(u);
                    entry.push(twin(h));
                }
                let kind = match (edge_of(h) >= m, h.is_multiple_of(2)) {
                    (true, true) => 'W',
                    (true, false) => 'w',
                    (false, true) => 'o',
                    (false, false) => 'i',
                };
                tokens.push(format!("{kind}{}", index[u]));
            }
            tokens.push("|".to_string());
            k += 1;
        }
        tokens.join(" ")
    }

    /// Arc-style summary used in tests: for each internal sink, the sorted
    /// boundary labels reachable by walking edges backwards.
    pub fn sink_sources(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for (v, vx) in self.vertices.iter().enumerate() {
            if vx.kind != VertexKind::Internal || vx.orientation != Orientation::Sink {
                continue;
            }
            let mut labels: Vec<usize> = self
                .edges
                .iter()
                .filter(|&&(_, b)| b == v)
                .filter_map(|&(a, _)| match self.vertices[a].kind {
                    VertexKind::Boundary(l) => Some(l),
                    VertexKind::Internal => None,
                })
                .collect();
            labels.sort();
            out.insert(labels);
        }
        out
    }
}

/// Resolves a three-row m-diagram into a web.
pub fn resolve(d: &MDiagram) -> Result<Web, WebError> {
    Ok(resolve_with_faces(d)?.web)
}

/// Resolves a three-row m-diagram, keeping the arrangement and the face
/// correspondence.
///
/// Each m's middle point gets a stem up to a new sink where both arcs end;
/// first arcs run left to right, second arcs right to left, isolated arcs
/// left to right. Each crossing splits into a sink holding the two incoming
/// ends and a source holding the two outgoing ends, joined by a connector
/// from source to sink.
pub fn resolve_with_faces(d: &MDiagram) -> Result<Resolution, WebError> {
    if !d.is_three_row() {
        return Err(WebError::NotThreeRow);
    }
    let arr = d.arrangement();
    let n = d.n_points();
    let arcs = d.arcs();
    let points = arr.points();
    if points.iter().any(|p| p.arcs.len() != 2) {
        return Err(WebError::CoincidentCrossings);
    }
    let segments = arr.segments();
    let ms = d.ms();
    let (s_count, q_count, m_count) = (segments.len(), points.len(), ms.len());
    let mut y_of = vec![None; n + 1];
    for (t, m) in ms.iter().enumerate() {
        y_of[m.middle] = Some(t);
    }
    let y_vertex = |t: usize| n + 2 * q_count + t;

    let mut vertices: Vec<Vertex> = (1..=n)
        .map(|p| Vertex {
            kind: VertexKind::Boundary(p),
            orientation: if d.role(p) == PointRole::IsolatedHi {
                Orientation::Sink
            } else {
                Orientation::Source
            },
        })
        .collect();
    for _ in 0..q_count {
        vertices.push(Vertex {
            kind: VertexKind::Internal,
            orientation: Orientation::Sink,
        });
        vertices.push(Vertex {
            kind: VertexKind::Internal,
            orientation: Orientation::Source,
        });
    }
    for _ in 0..m_count {
        vertices.push(Vertex {
            kind: VertexKind::Internal,
            orientation: Orientation::Sink,
        });
    }

    let leftward = |s: usize| arcs[segments[s].arc].level == 2;
    // arrangement half-edge of segment s -> web half-edge of edge s
    let seg_half = |h: usize| {
        let s = edge_of(h) - n;
        2 * s + ((h & 1) ^ usize::from(leftward(s)))
    };
    let vid = |v: ArrangementVertex, at_head: bool| match v {
        ArrangementVertex::Boundary(p) => y_of[p].map_or(p - 1, y_vertex),
        ArrangementVertex::Point(q) => n + 2 * q + usize::from(!at_head),
    };
    let mut edges: Vec<(usize, usize)> = (0..s_count)
        .map(|s| {
            let seg = segments[s];
            let (tail, head) = if leftward(s) {
                (seg.to, seg.from)
            } else {
                (seg.from, seg.to)
            };
            (vid(tail, false), vid(head, true))
        })
        .collect();
    for (t, m) in ms.iter().enumerate() {
        edges.push((m.middle - 1, y_vertex(t)));
    }
    for q in 0..q_count {
        edges.push((n + 2 * q + 1, n + 2 * q));
    }

    let amap = arr.map();
    let non_wall = |v: usize| -> Vec<usize> {
        amap.rotation(v)
            .iter()
            .filter(|&&h| edge_of(h) >= n)
            .map(|&h| seg_half(h))
            .collect()
    };
    let mut rotation = vec![Vec::new(); vertices.len()];
    for p in 1..=n {
        match y_of[p] {
            Some(t) => {
                rotation[p - 1] = vec![2 * (s_count + t)];
                let mut rot = vec![2 * (s_count + t) + 1];
                rot.extend(non_wall(p - 1));
                rotation[y_vertex(t)] = rot;
            }
            None => rotation[p - 1] = non_wall(p - 1),
        }
    }
    for q in 0..q_count {
        let around = non_wall(n + q);
        let r = (0..4)
            .find(|&r| around[r] % 2 == 1 && around[(r + 1) % 4] % 2 == 1)
            .ok_or(WebError::NonPlanar)?;
        let conn = s_count + m_count + q;
        rotation[n + 2 * q] = vec![around[r], around[(r + 1) % 4], 2 * conn + 1];
        rotation[n + 2 * q + 1] = vec![around[(r + 2) % 4], around[(r + 3) % 4], 2 * conn];
    }

    let web = Web::new(n, vertices, edges, rotation)?;

    let disk = web.disk();
    let web_half = |h: usize| {
        if edge_of(h) < n {
            2 * (disk.n_edges + edge_of(h)) + (h & 1)
        } else {
            seg_half(h)
        }
    };
    let mut face_map = vec![usize::MAX; arr.num_faces()];
    let mut consistent = true;
    for h in 0..2 * amap.num_edges() {
        match (arr.table_face(h), disk.table_face(web_half(h))) {
            (Some(fa), Some(fw)) => {
                if face_map[fa] == usize::MAX {
                    face_map[fa] = fw;
                } else if face_map[fa] != fw {
                    consistent = false;
                }
            }
            (None, None) => {}
            _ => consistent = false,
        }
    }
    if n == 0 {
        face_map = vec![0];
    }
    let distinct: BTreeSet<usize> = face_map.iter().copied().collect();
    let web_faces = if n == 0 { 1 } else { disk.faces.len() - 1 };
    consistent &= !distinct.contains(&usize::MAX)
        && distinct.len() == face_map.len()
        && face_map.len() == web_faces;
    Ok(Resolution {
        web,
        arrangement: arr,
        face_map,
        consistent,
    })
}

impl fmt::Display for Web {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "N={}", self.n_boundary)?;
        for (v, vx) in self.vertices.iter().enumerate() {
            match vx.kind {
                VertexKind::Boundary(l) => writeln!(f, "V {v} boundary {l}")?,
                VertexKind::Internal => {
                    let o = match vx.orientation {
                        Orientation::Source => "source",
                        Orientation::Sink => "sink",
                    };
                    writeln!(f, "V {v} internal {o}")?
                }
            }
        }
        for (a, b) in &self.edges {
            writeln!(f, "E {a} {b}")?;
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            write!(f, "R {v}:")?;
            for h in rot {
                write!(f, " {h}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for Web {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = format::lines(s);
        let (no, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, 1, "missing `N=<n>` header"))?;
        let n = format::parse_header(no, header)?;
        let mut kinds: Vec<Option<(VertexKind, Option<Orientation>)>> = Vec::new();
        let mut edges = Vec::new();
        let mut rotations: Vec<(usize, Vec<usize>)> = Vec::new();
        for (no, line) in lines {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["V", id, "boundary", label] => {
                    let id = format::parse_num(no, line, id)?;
                    let label = format::parse_num(no, line, label)?;
                    set_vertex(&mut kinds, id, (VertexKind::Boundary(label), None), no)?;
                }
                ["V", id, "internal", o] => {
                    let id_num = format::parse_num(no, line, id)?;
                    let orientation = match *o {
                        "source" => Orientation::Source,
                        "sink" => Orientation::Sink,
                        other => {
                            return Err(ParseError::new(
                                no,
                                format::token_column(line, o),
                                format!("expected `source` or `sink`, found `{other}`"),
                            )
                            .into())
                        }
                    };
                    set_vertex(&mut kinds, id_num, (VertexKind::Internal, Some(orientation)), no)?;
                }
                ["E", a, b] => edges.push((
                    format::parse_num(no, line, a)?,
                    format::parse_num(no, line, b)?,
                )),
                [r, ..] if *r == "R" => {
                    let rest = line[1..].trim_start();
                    let (id, list) = rest.split_once(':').ok_or_else(|| {
                        ParseError::new(no, 1, "expected `R <id>: <half-edges>`")
                    })?;
                    let id = format::parse_num(no, line, id.trim())?;
                    let hs = list
                        .split_whitespace()
                        .map(|h| format::parse_num(no, line, h))
                        .collect::<Result<Vec<_>, _>>()?;
                    rotations.push((id, hs));
                }
                _ => {
                    return Err(ParseError::new(
                        no,
                        1,
                        format!("expected a `V`, `E` or `R` line, found `{line}`"),
                    )
                    .into())
                }
            }
        }
        let mut vertices = Vec::with_capacity(kinds.len());
        for (id, k) in kinds.iter().enumerate() {
            let (kind, orientation) = k.ok_or(WebError::BadVertex { id })?;
            let orientation = orientation.unwrap_or_else(|| {
                match edges.iter().find(|&&(a, b)| a == id || b == id) {
                    Some(&(_, b)) if b == id => Orientation::Sink,
                    _ => Orientation::Source,
                }
            });
            vertices.push(Vertex { kind, orientation });
        }
        let mut rotation = vec![Vec::new(); vertices.len()];
        for (id, hs) in rotations {
            if id >= rotation.len() {
                return Err(WebError::BadVertex { id }.into());
            }
            rotation[id] = hs;
        }
        Ok(Web::new(n, vertices, edges, rotation)?)
    }
}

fn set_vertex(
    kinds: &mut Vec<Option<(VertexKind, Option<Orientation>)>>,
    id: usize,
    value: (VertexKind, Option<Orientation>),
    line: usize,
) -> Result<(), FormatError> {
    if id >= kinds.len() {
        kinds.resize(id + 1, None);
    }
    if kinds[id].is_some() {
        return Err(ParseError::new(line, 3, format!("vertex {id} listed twice")).into());
    }
    kinds[id] = Some(value);
    Ok(())
}
