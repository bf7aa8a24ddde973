//! m-diagrams: boundary points `1..=N` on a line with semicircular arcs
//! drawn above it, read off a standard tableau.
//!
//! Point `i` sits at `(i, 0)` and arc `(lo, hi)` is the upper semicircle
//! with center `(lo + hi) / 2` and radius `(hi - lo) / 2`. Every geometric
//! quantity used here is an exact rational.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_rational::Ratio;
use thiserror::Error;

use crate::format::{self, FormatError, ParseError};
use crate::planar::{twin, Faces, PlanarMap};
use crate::tableau::StandardTableau;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MDiagramError {
    #[error("arc {index} must satisfy 1 <= lo < hi <= N and level >= 1")]
    BadArc { index: usize },
    #[error("point {point} lies on more than one arc from the same side")]
    PointOverloaded { point: usize },
    #[error("arcs meeting at point {point} are not on consecutive levels")]
    LevelMismatch { point: usize },
    #[error("arcs {a} and {b} have the same level and cross")]
    SameLevelCrossing { a: usize, b: usize },
    #[error("diagram has arcs above level 2")]
    NotThreeRow,
    #[error("no m with index {index}")]
    NoSuchM { index: usize },
    #[error("an m cannot be compared with itself")]
    SameM,
    #[error("the pair of m's fits none of the five relative positions")]
    Unclassified,
    #[error("position {position} is outside 0..={max}")]
    PositionOutOfRange { position: usize, max: usize },
}

/// A semicircular arc. A level-`k` arc joins row `k - 1` to row `k` of the
/// source tableau (rows counted from 0 at the bottom).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub lo: usize,
    pub hi: usize,
    pub level: usize,
}

impl Arc {
    pub fn new(lo: usize, hi: usize, level: usize) -> Self {
        Arc { lo, hi, level }
    }

    /// Twice the center abscissa.
    pub fn center2(&self) -> i64 {
        (self.lo + self.hi) as i64
    }

    /// Twice the radius.
    pub fn radius2(&self) -> i64 {
        (self.hi - self.lo) as i64
    }

    /// Whether the arc passes over the open interval `(p, p + 1)`.
    pub fn covers_gap(&self, p: usize) -> bool {
        self.lo <= p && p < self.hi
    }
}

/// Whether two arcs cross: their endpoints interleave on the line.
/// Arcs sharing an endpoint never cross.
pub fn arcs_cross(a: &Arc, b: &Arc) -> bool {
    (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) || (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi)
}

/// Exact intersection of two crossing arcs: `(x, y^2)`.
pub fn crossing_point(a: &Arc, b: &Arc) -> (Rational, Rational) {
    let (ca, cb) = (a.center2(), b.center2());
    let (ra, rb) = (a.radius2(), b.radius2());
    let x = Rational::new(ra * ra - rb * rb + cb * cb - ca * ca, 4 * (cb - ca));
    let dx = x - Rational::new(ca, 2);
    let y2 = Rational::new(ra * ra, 4) - dx * dx;
    (x, y2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointRole {
    FirstOfM,
    MiddleOfM,
    ThirdOfM,
    IsolatedLo,
    IsolatedHi,
    Unused,
    /// On a chain of three or more arcs (tableaux with four or more rows).
    Chain,
}

/// An m: arcs `(first, middle)` and `(middle, third)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct M {
    pub first: usize,
    pub middle: usize,
    pub third: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairPosition {
    Disjoint,
    /// One m lies under the first arc of the other.
    NestedUnderFirstArc,
    /// One m lies under the second arc of the other.
    NestedUnderSecondArc,
    /// The second arc of the left m crosses the first arc of the right m,
    /// entering it from outside.
    CrossSecondOverFirst,
    /// The first arc of the left m crosses the second arc of the right m,
    /// which starts underneath it.
    CrossFirstOverSecond,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MDiagram {
    n_points: usize,
    arcs: Vec<Arc>,
    roles: Vec<PointRole>,
}

impl MDiagram {
    /// Checks the arcs: at most one arc ends and one starts at each point,
    /// consecutive levels meet, and equal-level arcs do not cross.
    pub fn new(n_points: usize, arcs: Vec<Arc>) -> Result<Self, MDiagramError> {
        let mut ending = vec![None; n_points + 1];
        let mut starting = vec![None; n_points + 1];
        for (i, a) in arcs.iter().enumerate() {
            if a.lo == 0 || a.lo >= a.hi || a.hi > n_points || a.level == 0 {
                return Err(MDiagramError::BadArc { index: i });
            }
            if starting[a.lo].replace(i).is_some() {
                return Err(MDiagramError::PointOverloaded { point: a.lo });
            }
            if ending[a.hi].replace(i).is_some() {
                return Err(MDiagramError::PointOverloaded { point: a.hi });
            }
        }
        for p in 1..=n_points {
            if let (Some(e), Some(s)) = (ending[p], starting[p]) {
                if arcs[s].level != arcs[e].level + 1 {
                    return Err(MDiagramError::LevelMismatch { point: p });
                }
            }
        }
        for (i, a) in arcs.iter().enumerate() {
            for (j, b) in arcs.iter().enumerate().skip(i + 1) {
                if a.level == b.level && arcs_cross(a, b) {
                    return Err(MDiagramError::SameLevelCrossing { a: i, b: j });
                }
            }
        }
        let roles = compute_roles(n_points, &arcs, &ending, &starting);
        Ok(MDiagram {
            n_points,
            arcs,
            roles,
        })
    }

    /// Reads the m-diagram of a standard tableau of any shape.
    ///
    /// Each entry `i` above the bottom row is joined to the largest `j < i`
    /// on the row below that is not yet joined to an entry of `i`'s row.
    pub fn from_tableau(t: &StandardTableau) -> MDiagram {
        let word = t.row_word();
        let n = word.len();
        let mut taken = vec![false; n + 1];
        let mut arcs = Vec::new();
        for i in 1..=n {
            let r = word[i - 1];
            if r == 0 {
                continue;
            }
            let j = (1..i)
                .rev()
                .find(|&k| word[k - 1] == r - 1 && !taken[k])
                .expect("a standard tableau always has a free entry below");
            taken[j] = true;
            arcs.push(Arc::new(j, i, r));
        }
        MDiagram::new(n, arcs).expect("m-diagrams of standard tableaux satisfy the arc invariants")
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Role of point `p` (1-based).
    pub fn role(&self, p: usize) -> PointRole {
        self.roles[p - 1]
    }

    pub fn roles(&self) -> &[PointRole] {
        &self.roles
    }

    pub fn max_level(&self) -> usize {
        self.arcs.iter().map(|a| a.level).max().unwrap_or(0)
    }

    pub fn is_three_row(&self) -> bool {
        self.max_level() <= 2
    }

    /// Index of the arc ending at `p` and of the arc starting at `p`.
    pub fn arcs_at(&self, p: usize) -> (Option<usize>, Option<usize>) {
        let ending = self.arcs.iter().position(|a| a.hi == p);
        let starting = self.arcs.iter().position(|a| a.lo == p);
        (ending, starting)
    }

    /// The m's, ordered by first point.
    pub fn ms(&self) -> Vec<M> {
        let mut ms: Vec<M> = self
            .arcs
            .iter()
            .filter(|a| self.role(a.lo) == PointRole::FirstOfM)
            .map(|a| {
                let second = self
                    .arcs
                    .iter()
                    .find(|b| b.lo == a.hi)
                    .expect("middle of an m starts a second arc");
                M {
                    first: a.lo,
                    middle: a.hi,
                    third: second.hi,
                }
            })
            .collect();
        ms.sort();
        ms
    }

    pub fn isolated_arcs(&self) -> Vec<Arc> {
        self.arcs
            .iter()
            .filter(|a| self.role(a.lo) == PointRole::IsolatedLo)
            .copied()
            .collect()
    }

    /// Relative position of two distinct m's (indices into [`Self::ms`]).
    pub fn pair_position(&self, m1: usize, m2: usize) -> Result<PairPosition, MDiagramError> {
        if !self.is_three_row() {
            return Err(MDiagramError::NotThreeRow);
        }
        let ms = self.ms();
        let a = *ms.get(m1).ok_or(MDiagramError::NoSuchM { index: m1 })?;
        let b = *ms.get(m2).ok_or(MDiagramError::NoSuchM { index: m2 })?;
        if m1 == m2 {
            return Err(MDiagramError::SameM);
        }
        let (l, r) = if a.first < b.first { (a, b) } else { (b, a) };
        let first = |m: M| Arc::new(m.first, m.middle, 1);
        let second = |m: M| Arc::new(m.middle, m.third, 2);
        if arcs_cross(&second(l), &first(r)) {
            return Ok(PairPosition::CrossSecondOverFirst);
        }
        if arcs_cross(&first(l), &second(r)) {
            return Ok(PairPosition::CrossFirstOverSecond);
        }
        if l.third < r.first {
            Ok(PairPosition::Disjoint)
        } else if l.middle < r.first && r.third < l.third {
            Ok(PairPosition::NestedUnderSecondArc)
        } else if r.third < l.middle {
            Ok(PairPosition::NestedUnderFirstArc)
        } else {
            Err(MDiagramError::Unclassified)
        }
    }

    /// Every crossing, sorted along the lower-indexed arc and then by
    /// abscissa.
    pub fn crossings(&self) -> Vec<Crossing> {
        let mut raw = Vec::new();
        for (i, a) in self.arcs.iter().enumerate() {
            for (j, b) in self.arcs.iter().enumerate().skip(i + 1) {
                if arcs_cross(a, b) {
                    let (x, y_squared) = crossing_point(a, b);
                    raw.push((i, j, x, y_squared));
                }
            }
        }
        let mut along: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
        for &(i, j, x, _) in &raw {
            along.entry(i).or_default().push(x);
            along.entry(j).or_default().push(x);
        }
        for xs in along.values_mut() {
            xs.sort();
        }
        let order = |arc: usize, x: Rational| {
            along[&arc]
                .iter()
                .position(|&y| y == x)
                .expect("abscissa recorded for arc")
        };
        let mut out: Vec<Crossing> = raw
            .into_iter()
            .map(|(i, j, x, y_squared)| Crossing {
                arc_a: i,
                arc_b: j,
                x,
                y_squared,
                order_a: order(i, x),
                order_b: order(j, x),
            })
            .collect();
        out.sort_by_key(|p| (p.arc_a, p.x));
        out
    }

    /// The planar graph cut out by the arcs and the boundary line.
    pub fn arrangement(&self) -> Arrangement {
        Arrangement::build(self)
    }

    /// Faces of the arrangement labeled with the arcs above them.
    pub fn circle_depth(&self) -> ArrangementFaceTable {
        self.arrangement().circle_depth()
    }

    /// Inserts `inner` after point `at`, shifting later points.
    pub fn join(&self, at: usize, inner: &MDiagram) -> Result<MDiagram, MDiagramError> {
        if at > self.n_points {
            return Err(MDiagramError::PositionOutOfRange {
                position: at,
                max: self.n_points,
            });
        }
        let shift = |p: usize| if p <= at { p } else { p + inner.n_points };
        let mut arcs: Vec<Arc> = self
            .arcs
            .iter()
            .map(|a| Arc::new(shift(a.lo), shift(a.hi), a.level))
            .collect();
        arcs.extend(
            inner
                .arcs
                .iter()
                .map(|a| Arc::new(a.lo + at, a.hi + at, a.level)),
        );
        MDiagram::new(self.n_points + inner.n_points, arcs)
    }

    /// The arcs as a set, for comparisons that ignore arc order.
    pub fn arc_set(&self) -> BTreeSet<Arc> {
        self.arcs.iter().copied().collect()
    }
}

fn compute_roles(
    n: usize,
    arcs: &[Arc],
    ending: &[Option<usize>],
    starting: &[Option<usize>],
) -> Vec<PointRole> {
    let mut roles = vec![PointRole::Unused; n];
    for (i, a) in arcs.iter().enumerate() {
        if ending[a.lo].is_some() {
            continue;
        }
        // walk the chain beginning with arc i
        let mut chain = vec![a.lo];
        let mut cur = i;
        loop {
            let hi = arcs[cur].hi;
            chain.push(hi);
            match starting[hi] {
                Some(next) => cur = next,
                None => break,
            }
        }
        match chain.as_slice() {
            [lo, hi] => {
                roles[lo - 1] = PointRole::IsolatedLo;
                roles[hi - 1] = PointRole::IsolatedHi;
            }
            [f, m, t] => {
                roles[f - 1] = PointRole::FirstOfM;
                roles[m - 1] = PointRole::MiddleOfM;
                roles[t - 1] = PointRole::ThirdOfM;
            }
            longer => {
                for p in longer {
                    roles[p - 1] = PointRole::Chain;
                }
            }
        }
    }
    roles
}

/// A transversal crossing of two arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub arc_a: usize,
    pub arc_b: usize,
    pub x: Rational,
    pub y_squared: Rational,
    /// Position of this crossing among the crossings on `arc_a`, left to right.
    pub order_a: usize,
    pub order_b: usize,
}

/// An intersection point of two or more arcs above the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementPoint {
    pub x: Rational,
    pub y_squared: Rational,
    /// Arcs through the point, by index.
    pub arcs: Vec<usize>,
}

/// A piece of an arc between consecutive vertices, oriented left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub arc: usize,
    pub from: ArrangementVertex,
    pub to: ArrangementVertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrangementVertex {
    /// Boundary point with its 1-based label.
    Boundary(usize),
    /// Index into [`Arrangement::points`].
    Point(usize),
}

/// The planar graph of an m-diagram: boundary points and arc crossings as
/// vertices, arc pieces and boundary wall segments as edges. The boundary
/// line is closed into a circle by one extra wall through infinity.
#[derive(Debug, Clone)]
pub struct Arrangement {
    n_points: usize,
    arcs: Vec<Arc>,
    points: Vec<ArrangementPoint>,
    segments: Vec<Segment>,
    arc_segments: Vec<Range<usize>>,
    map: PlanarMap,
    faces: Faces,
    exterior: usize,
}

impl Arrangement {
    fn build(d: &MDiagram) -> Arrangement {
        let n = d.n_points;
        let arcs = d.arcs.clone();

        let mut by_point: BTreeMap<(Rational, Rational), BTreeSet<usize>> = BTreeMap::new();
        for c in d.crossings() {
            let entry = by_point.entry((c.x, c.y_squared)).or_default();
            entry.insert(c.arc_a);
            entry.insert(c.arc_b);
        }
        let points: Vec<ArrangementPoint> = by_point
            .into_iter()
            .map(|((x, y_squared), set)| ArrangementPoint {
                x,
                y_squared,
                arcs: set.into_iter().collect(),
            })
            .collect();

        // vertices along each arc, left to right
        let mut on_arc: Vec<Vec<(Rational, usize)>> = vec![Vec::new(); arcs.len()];
        for (q, p) in points.iter().enumerate() {
            for &a in &p.arcs {
                on_arc[a].push((p.x, q));
            }
        }
        let mut segments = Vec::new();
        let mut arc_segments = Vec::new();
        for (a, arc) in arcs.iter().enumerate() {
            on_arc[a].sort();
            let mut chain = vec![ArrangementVertex::Boundary(arc.lo)];
            chain.extend(on_arc[a].iter().map(|&(_, q)| ArrangementVertex::Point(q)));
            chain.push(ArrangementVertex::Boundary(arc.hi));
            let start = segments.len();
            for w in chain.windows(2) {
                segments.push(Segment {
                    arc: a,
                    from: w[0],
                    to: w[1],
                });
            }
            arc_segments.push(start..segments.len());
        }

        let vid = |v: ArrangementVertex| match v {
            ArrangementVertex::Boundary(p) => p - 1,
            ArrangementVertex::Point(q) => n + q,
        };
        // edges: walls 0..n (wall w runs from point w+1 rightward), then segments
        let mut ends: Vec<(usize, usize)> = (0..n).map(|w| (w, (w + 1) % n)).collect();
        ends.extend(segments.iter().map(|s| (vid(s.from), vid(s.to))));

        let seg_half = |s: usize, forward: bool| 2 * (n + s) + usize::from(!forward);
        let mut rotation = vec![Vec::new(); n + points.len()];
        for p in 1..=n {
            let mut rot = vec![2 * (p - 1)];
            // arcs leaving rightward: tightest first
            let mut right: Vec<usize> = (0..arcs.len()).filter(|&a| arcs[a].lo == p).collect();
            right.sort_by_key(|&a| arcs[a].radius2());
            rot.extend(right.iter().map(|&a| seg_half(arc_segments[a].start, true)));
            // arcs arriving from the left: widest first
            let mut left: Vec<usize> = (0..arcs.len()).filter(|&a| arcs[a].hi == p).collect();
            left.sort_by_key(|&a| std::cmp::Reverse(arcs[a].radius2()));
            rot.extend(left.iter().map(|&a| seg_half(arc_segments[a].end - 1, false)));
            let incoming_wall = if p == 1 { n - 1 } else { p - 2 };
            rot.push(2 * incoming_wall + 1);
            rotation[p - 1] = rot;
        }
        for (q, point) in points.iter().enumerate() {
            // rightward tangents turn counterclockwise as the center moves right
            let mut through = point.arcs.clone();
            through.sort_by_key(|&a| arcs[a].center2());
            let seg_at = |a: usize| {
                let k = on_arc[a]
                    .iter()
                    .position(|&(_, r)| r == q)
                    .expect("point lies on arc");
                arc_segments[a].start + k
            };
            let mut rot: Vec<usize> = through.iter().map(|&a| seg_half(seg_at(a) + 1, true)).collect();
            rot.extend(through.iter().map(|&a| seg_half(seg_at(a), false)));
            rotation[n + q] = rot;
        }
        let map = PlanarMap::new(&ends, rotation).expect("arrangement rotation is consistent");
        let faces = map.trace_faces();
        let exterior = if n == 0 { usize::MAX } else { faces.face_of[1] };
        Arrangement {
            n_points: n,
            arcs,
            points,
            segments,
            arc_segments,
            map,
            faces,
            exterior,
        }
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn points(&self) -> &[ArrangementPoint] {
        &self.points
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Segment indices of arc `a`, left to right.
    pub fn arc_segments(&self, a: usize) -> Range<usize> {
        self.arc_segments[a].clone()
    }

    pub(crate) fn map(&self) -> &PlanarMap {
        &self.map
    }

    #[cfg(test)]
    pub(crate) fn faces(&self) -> &Faces {
        &self.faces
    }

    /// Number of faces inside the disk.
    pub fn num_faces(&self) -> usize {
        if self.n_points == 0 {
            1
        } else {
            self.faces.len() - 1
        }
    }

    /// Table index of the face on the left of half-edge `h`, or `None` for
    /// the exterior of the disk.
    pub(crate) fn table_face(&self, h: usize) -> Option<usize> {
        let f = self.faces.face_of[h];
        match f.cmp(&self.exterior) {
            std::cmp::Ordering::Less => Some(f),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(f - 1),
        }
    }

    /// Face containment sets by breadth-first propagation from the outer
    /// face, toggling an arc each time one of its pieces is crossed.
    pub fn circle_depth(&self) -> ArrangementFaceTable {
        let n = self.n_points;
        if n == 0 {
            return ArrangementFaceTable {
                faces: vec![ArrangementFace {
                    containment: BTreeSet::new(),
                    depth: 0,
                    witnesses: Vec::new(),
                    is_outer: true,
                }],
                adjacency: Vec::new(),
                outer: 0,
            };
        }
        let count = self.num_faces();
        let mut sets: Vec<Option<BTreeSet<usize>>> = vec![None; count];
        let mut adjacency = Vec::new();
        let outer = self.table_face(2 * (n - 1)).expect("outer face is inside");
        sets[outer] = Some(BTreeSet::new());
        let mut queue = VecDeque::from([outer]);
        let walks = &self.faces.walks;
        let mut seen_pairs = BTreeSet::new();
        while let Some(f) = queue.pop_front() {
            let walk = &walks[self.raw_face(f)];
            for &h in walk {
                let e = h / 2;
                if e < n {
                    continue;
                }
                let arc = self.segments[e - n].arc;
                let g = self.table_face(twin(h)).expect("arc pieces lie inside the disk");
                if seen_pairs.insert((f.min(g), f.max(g), e)) {
                    adjacency.push((f, g, arc));
                }
                if sets[g].is_none() {
                    let mut s = sets[f].clone().expect("visited");
                    if !s.remove(&arc) {
                        s.insert(arc);
                    }
                    sets[g] = Some(s);
                    queue.push_back(g);
                }
            }
        }
        let faces = (0..count)
            .map(|f| {
                let containment = sets[f].clone().expect("every face is reachable");
                let witnesses = walks[self.raw_face(f)]
                    .iter()
                    .filter(|&&h| h % 2 == 0 && h / 2 < n - 1)
                    .map(|&h| h / 2 + 1)
                    .collect();
                ArrangementFace {
                    depth: containment.len(),
                    containment,
                    witnesses,
                    is_outer: f == outer,
                }
            })
            .collect();
        ArrangementFaceTable {
            faces,
            adjacency,
            outer,
        }
    }

    fn raw_face(&self, table_index: usize) -> usize {
        if table_index < self.exterior {
            table_index
        } else {
            table_index + 1
        }
    }

    /// Half-edges around table face `f`, for drawing and diagnostics.
    pub fn face_boundary(&self, f: usize) -> Vec<FaceSide> {
        let n = self.n_points;
        if n == 0 {
            return Vec::new();
        }
        self.faces.walks[self.raw_face(f)]
            .iter()
            .map(|&h| {
                let e = h / 2;
                if e < n {
                    FaceSide::Wall { from_point: e + 1 }
                } else {
                    FaceSide::Segment {
                        segment: e - n,
                        forward: h % 2 == 0,
                    }
                }
            })
            .collect()
    }
}

/// One step of a face boundary walk in an arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceSide {
    /// Wall from `from_point` to the next point (the closing wall for `N`).
    Wall { from_point: usize },
    Segment { segment: usize, forward: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementFace {
    /// Arcs lying above the face.
    pub containment: BTreeSet<usize>,
    pub depth: usize,
    /// Each `p` here means the face sits directly above the gap `(p, p + 1)`.
    pub witnesses: Vec<usize>,
    pub is_outer: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementFaceTable {
    pub faces: Vec<ArrangementFace>,
    /// Dual edges `(face, face, arc)`: the two faces share a piece of `arc`.
    pub adjacency: Vec<(usize, usize, usize)>,
    pub outer: usize,
}

impl ArrangementFaceTable {
    pub fn depths(&self) -> Vec<usize> {
        self.faces.iter().map(|f| f.depth).collect()
    }
}

impl fmt::Display for MDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "N={}", self.n_points)?;
        for a in &self.arcs {
            writeln!(f, "arc {} {} level {}", a.lo, a.hi, a.level)?;
        }
        Ok(())
    }
}

impl FromStr for MDiagram {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = format::lines(s);
        let (no, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, 1, "missing `N=<n>` header"))?;
        let n = format::parse_header(no, header)?;
        let mut arcs = Vec::new();
        for (no, line) in lines {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["arc", lo, hi, "level", k] => arcs.push(Arc::new(
                    format::parse_num(no, line, lo)?,
                    format::parse_num(no, line, hi)?,
                    format::parse_num(no, line, k)?,
                )),
                _ => {
                    return Err(ParseError::new(
                        no,
                        1,
                        format!("expected `arc <lo> <hi> level <k>`, found `{line}`"),
                    )
                    .into())
                }
            }
        }
        Ok(MDiagram::new(n, arcs)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(s: &str) -> MDiagram {
        MDiagram::from_tableau(&s.parse().unwrap())
    }

    fn arcs(d: &MDiagram) -> Vec<(usize, usize, usize)> {
        d.arcs().iter().map(|a| (a.lo, a.hi, a.level)).collect()
    }

    #[test]
    fn from_tableau_examples() {
        let d = diagram("1 4 / 2 5 / 3 6");
        assert_eq!(arcs(&d), vec![(1, 2, 1), (2, 3, 2), (4, 5, 1), (5, 6, 2)]);
        assert_eq!(
            d.ms(),
            vec![
                M { first: 1, middle: 2, third: 3 },
                M { first: 4, middle: 5, third: 6 }
            ]
        );

        let d = diagram("1 2 / 3 4 / 5 6");
        assert_eq!(d.arc_set(), [
            Arc::new(2, 3, 1),
            Arc::new(1, 4, 1),
            Arc::new(4, 5, 2),
            Arc::new(3, 6, 2)
        ].into_iter().collect());
        assert_eq!(
            d.ms(),
            vec![
                M { first: 1, middle: 4, third: 5 },
                M { first: 2, middle: 3, third: 6 }
            ]
        );
        assert_eq!(d.crossings().len(), 1);

        let d = diagram("1 / 2 / 3");
        assert_eq!(arcs(&d), vec![(1, 2, 1), (2, 3, 2)]);
        assert_eq!(d.ms().len(), 1);
    }

    #[test]
    fn roles_for_non_rectangular() {
        let d = diagram("1 4 / 2 5 / 3");
        use PointRole::*;
        assert_eq!(d.roles(), &[FirstOfM, MiddleOfM, ThirdOfM, IsolatedLo, IsolatedHi]);
        let d = diagram("1 2 / 3");
        assert_eq!(d.roles(), &[Unused, IsolatedLo, IsolatedHi]);
        let d = diagram("1 / 2 / 3 / 4");
        assert_eq!(d.roles(), &[Chain, Chain, Chain, Chain]);
    }

    #[test]
    fn crossing_predicate() {
        assert!(arcs_cross(&Arc::new(1, 4, 1), &Arc::new(3, 6, 2)));
        assert!(!arcs_cross(&Arc::new(2, 3, 1), &Arc::new(1, 4, 1)));
        assert!(!arcs_cross(&Arc::new(1, 2, 1), &Arc::new(3, 4, 1)));
        assert!(!arcs_cross(&Arc::new(1, 2, 1), &Arc::new(2, 4, 2)));
    }

    #[test]
    fn crossing_abscissa() {
        let d = diagram("1 2 / 3 4 / 5 6");
        let c = &d.crossings()[0];
        assert_eq!(
            (d.arcs()[c.arc_a], d.arcs()[c.arc_b]),
            (Arc::new(1, 4, 1), Arc::new(3, 6, 2))
        );
        assert_eq!(c.x, Rational::new(7, 2));
        assert_eq!(c.y_squared, Rational::new(5, 4));
        assert!(diagram("1 4 / 2 5 / 3 6").crossings().is_empty());
        assert!(diagram("1 / 2 / 3").crossings().is_empty());
    }

    #[test]
    fn pair_positions_of_the_3x2_examples() {
        let pos = |s: &str| diagram(s).pair_position(0, 1).unwrap();
        assert_eq!(pos("1 4 / 2 5 / 3 6"), PairPosition::Disjoint);
        assert_eq!(pos("1 2 / 3 5 / 4 6"), PairPosition::NestedUnderFirstArc);
        assert_eq!(pos("1 3 / 2 4 / 5 6"), PairPosition::NestedUnderSecondArc);
        assert_eq!(pos("1 2 / 3 4 / 5 6"), PairPosition::CrossFirstOverSecond);
        assert_eq!(pos("1 3 / 2 5 / 4 6"), PairPosition::CrossSecondOverFirst);
        let d = diagram("1 2 / 3 4 / 5 6");
        assert_eq!(d.pair_position(0, 0), Err(MDiagramError::SameM));
        assert_eq!(d.pair_position(0, 5), Err(MDiagramError::NoSuchM { index: 5 }));
        assert_eq!(
            diagram("1 / 2 / 3 / 4").pair_position(0, 1),
            Err(MDiagramError::NotThreeRow)
        );
    }

    #[test]
    fn circle_depth_examples() {
        let mut depths = diagram("1 2 / 3 4 / 5 6").circle_depth().depths();
        depths.sort();
        assert_eq!(depths, vec![0, 1, 1, 2, 2, 2]);

        let table = diagram("1 2 / 3 5 / 4 6").circle_depth();
        let mut depths = table.depths();
        depths.sort();
        assert_eq!(depths, vec![0, 1, 1, 2, 2]);
        // faces above the gaps (2,3) and (3,4) lie under two arcs
        for f in &table.faces {
            if f.witnesses.contains(&2) || f.witnesses.contains(&3) {
                assert_eq!(f.depth, 2);
            }
        }

        let empty = MDiagram::new(0, vec![]).unwrap().circle_depth();
        assert_eq!(empty.faces.len(), 1);
        assert_eq!(empty.faces[0].depth, 0);
        assert!(empty.faces[0].is_outer);
    }

    #[test]
    fn arrangement_euler() {
        for s in ["1 2 / 3 4 / 5 6", "1 3 / 2 5 / 4 6", "1 2 5 / 3 6 8 / 4 7 9"] {
            let arr = diagram(s).arrangement();
            let v = arr.map().num_vertices() as i64;
            let e = arr.map().num_edges() as i64;
            let f = arr.faces().len() as i64;
            assert_eq!(v - e + f, 2, "{s}");
        }
    }

    #[test]
    fn rejects_invalid_diagrams() {
        assert_eq!(
            MDiagram::new(4, vec![Arc::new(1, 3, 1), Arc::new(2, 4, 1)]),
            Err(MDiagramError::SameLevelCrossing { a: 0, b: 1 })
        );
        assert_eq!(
            MDiagram::new(3, vec![Arc::new(1, 2, 1), Arc::new(2, 3, 1)]),
            Err(MDiagramError::LevelMismatch { point: 2 })
        );
        assert_eq!(
            MDiagram::new(3, vec![Arc::new(1, 4, 1)]),
            Err(MDiagramError::BadArc { index: 0 })
        );
        assert_eq!(
            MDiagram::new(3, vec![Arc::new(1, 2, 1), Arc::new(1, 3, 1)]),
            Err(MDiagramError::PointOverloaded { point: 1 })
        );
    }

    #[test]
    fn text_format() {
        let d = diagram("1 2 / 3 4 / 5 6");
        let text = d.to_string();
        assert_eq!(
            text,
            "N=6\narc 2 3 level 1\narc 1 4 level 1\narc 4 5 level 2\narc 3 6 level 2\n"
        );
        assert_eq!(text.parse::<MDiagram>().unwrap(), d);
        let err = "N=3\narc 1 x level 1".parse::<MDiagram>().unwrap_err();
        assert!(err.to_string().contains("line 2, column 7"), "{err}");
    }

    #[test]
    fn join_shifts_points() {
        let m = diagram("1 / 2 / 3");
        let arc = diagram("1 / 2");
        let j = m.join(1, &arc).unwrap();
        assert_eq!(j.ms(), vec![M { first: 1, middle: 4, third: 5 }]);
        assert_eq!(j.isolated_arcs(), vec![Arc::new(2, 3, 1)]);
    }
}
