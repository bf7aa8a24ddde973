//! Combinatorial maps given by rotation systems.
//!
//! Edge `e` owns half-edges `2e` (from its tail) and `2e + 1` (from its
//! head). Every vertex lists its outgoing half-edges in counterclockwise
//! order. Faces are traced keeping the face on the left of each half-edge.

use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct PlanarMap {
    origin: Vec<usize>,
    rotation: Vec<Vec<usize>>,
    slot: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum MapError {
    /// A rotation entry refers to a half-edge that does not start there,
    /// or a half-edge is missing or repeated.
    Rotation { vertex: usize },
}

pub(crate) fn twin(h: usize) -> usize {
    h ^ 1
}

pub(crate) fn edge_of(h: usize) -> usize {
    h / 2
}

impl PlanarMap {
    /// `ends[e] = (tail, head)`; `rotation[v]` lists half-edges ccw.
    pub(crate) fn new(
        ends: &[(usize, usize)],
        rotation: Vec<Vec<usize>>,
    ) -> Result<Self, MapError> {
        let halves = ends.len() * 2;
        let mut origin = vec![0; halves];
        for (e, &(t, h)) in ends.iter().enumerate() {
            origin[2 * e] = t;
            origin[2 * e + 1] = h;
        }
        let mut slot = vec![usize::MAX; halves];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &h) in rot.iter().enumerate() {
                if h >= halves || origin[h] != v || slot[h] != usize::MAX {
                    return Err(MapError::Rotation { vertex: v });
                }
                slot[h] = i;
            }
        }
        if let Some(h) = slot.iter().position(|&s| s == usize::MAX) {
            return Err(MapError::Rotation { vertex: origin[h] });
        }
        Ok(PlanarMap {
            origin,
            rotation,
            slot,
        })
    }

    pub(crate) fn num_vertices(&self) -> usize {
        self.rotation.len()
    }

    pub(crate) fn num_edges(&self) -> usize {
        self.origin.len() / 2
    }

    pub(crate) fn head(&self, h: usize) -> usize {
        self.origin[twin(h)]
    }

    pub(crate) fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub(crate) fn slot(&self, h: usize) -> usize {
        self.slot[h]
    }

    /// The half-edge following `h` around the face on its left.
    pub(crate) fn next_in_face(&self, h: usize) -> usize {
        let t = twin(h);
        let rot = &self.rotation[self.origin[t]];
        let i = self.slot[t];
        rot[(i + rot.len() - 1) % rot.len()]
    }

    pub(crate) fn trace_faces(&self) -> Faces {
        let mut face_of = vec![usize::MAX; self.origin.len()];
        let mut walks = Vec::new();
        for start in 0..self.origin.len() {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = walks.len();
            let mut walk = Vec::new();
            let mut h = start;
            loop {
                face_of[h] = id;
                walk.push(h);
                h = self.next_in_face(h);
                if h == start {
                    break;
                }
            }
            walks.push(walk);
        }
        Faces { face_of, walks }
    }

    pub(crate) fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &h in &self.rotation[v] {
                let u = self.head(h);
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Faces {
    pub(crate) face_of: Vec<usize>,
    pub(crate) walks: Vec<Vec<usize>>,
}

impl Faces {
    pub(crate) fn len(&self) -> usize {
        self.walks.len()
    }

    /// Breadth-first distance from `source` in the dual graph, stepping
    /// only across edges for which `crossable` holds.
    pub(crate) fn dual_distances(
        &self,
        source: usize,
        crossable: impl Fn(usize) -> bool,
    ) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.walks.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(f) = queue.pop_front() {
            let d = dist[f].expect("queued faces have a distance");
            for &h in &self.walks[f] {
                if !crossable(edge_of(h)) {
                    continue;
                }
                let g = self.face_of[twin(h)];
                if dist[g].is_none() {
                    dist[g] = Some(d + 1);
                    queue.push_back(g);
                }
            }
        }
        dist
    }
}
