//! Closed 2-cell embeddings of simple graphs, given as face lists.
//!
//! A [`SurfaceComplex`] is validated once, at construction, and is immutable
//! afterwards. Vertices are interned in token order, so every derived
//! ordering (faces, edges, rotations, zigzag states) is deterministic and
//! independent of the order in which faces were supplied.
//!
//! Faces carry no preferred orientation: each boundary is stored in its
//! lexicographically minimal rotation/reflection. Operations that need a
//! direction derive it from a directed edge lying on the face.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result, ValidationError};
use crate::zigzag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub(crate) u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub(crate) u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(pub(crate) u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl FaceId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An edge with a chosen direction, `tail -> head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedEdge {
    pub tail: VertexId,
    pub head: VertexId,
}

impl DirectedEdge {
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        debug_assert_ne!(tail, head);
        DirectedEdge { tail, head }
    }

    /// The same edge traversed the other way.
    pub fn reversed(self) -> Self {
        DirectedEdge {
            tail: self.head,
            head: self.tail,
        }
    }

    pub(crate) fn key(self) -> (VertexId, VertexId) {
        if self.tail < self.head {
            (self.tail, self.head)
        } else {
            (self.head, self.tail)
        }
    }

    pub fn shares_vertex(self, other: DirectedEdge) -> bool {
        self.tail == other.tail
            || self.tail == other.head
            || self.head == other.tail
            || self.head == other.head
    }
}

/// The cyclic sequence of edges and faces around a vertex.
///
/// `faces[i]` lies between `edges[i]` and `edges[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    pub edges: Vec<EdgeId>,
    pub faces: Vec<FaceId>,
}

impl Rotation {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn position(&self, e: EdgeId) -> Option<usize> {
        self.edges.iter().position(|&x| x == e)
    }
}

#[derive(Clone)]
pub struct SurfaceComplex {
    names: Vec<String>,
    lookup: HashMap<String, VertexId>,
    faces: Vec<Vec<VertexId>>,
    edges: Vec<(VertexId, VertexId)>,
    edge_lookup: HashMap<(VertexId, VertexId), EdgeId>,
    edge_faces: Vec<[FaceId; 2]>,
    vertex_edges: Vec<Vec<EdgeId>>,
    rotations: Vec<Rotation>,
    step: Vec<u32>,
}

impl fmt::Debug for SurfaceComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SurfaceComplex")
            .field("vertices", &self.num_vertices())
            .field("edges", &self.num_edges())
            .field("faces", &self.face_lists())
            .finish()
    }
}

impl PartialEq for SurfaceComplex {
    fn eq(&self, other: &Self) -> bool {
        self.face_lists() == other.face_lists()
    }
}

impl Eq for SurfaceComplex {}

/// Minimal rotation/reflection of a cyclic sequence.
pub(crate) fn canonical_cycle<T: Ord + Clone>(cycle: &[T]) -> Vec<T> {
    let n = cycle.len();
    let mut best: Option<Vec<T>> = None;
    let mut reversed: Vec<T> = cycle.to_vec();
    reversed.reverse();
    for seq in [cycle, &reversed[..]] {
        for start in 0..n {
            let cand: Vec<T> = seq[start..].iter().chain(&seq[..start]).cloned().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

impl SurfaceComplex {
    /// Builds and validates a complex from faces given as vertex tokens.
    pub fn from_faces<S: AsRef<str>>(faces: &[Vec<S>]) -> Result<Self> {
        if faces.is_empty() {
            return Err(ValidationError::Empty.into());
        }
        for (index, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(ValidationError::ShortFace {
                    index,
                    len: face.len(),
                }
                .into());
            }
            let mut seen: Vec<&str> = face.iter().map(|s| s.as_ref()).collect();
            seen.sort_unstable();
            if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
                return Err(ValidationError::RepeatedVertex {
                    index,
                    vertex: w[0].to_string(),
                }
                .into());
            }
        }

        let mut names: Vec<String> = faces
            .iter()
            .flatten()
            .map(|s| s.as_ref().to_string())
            .collect();
        names.sort();
        names.dedup();
        let lookup: HashMap<String, VertexId> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), VertexId(i as u32)))
            .collect();

        let mut face_ids: Vec<Vec<VertexId>> = faces
            .iter()
            .map(|f| canonical_cycle(&f.iter().map(|s| lookup[s.as_ref()]).collect::<Vec<_>>()))
            .collect();
        face_ids.sort();

        let mut slots: HashMap<(VertexId, VertexId), Vec<FaceId>> = HashMap::new();
        for (fi, face) in face_ids.iter().enumerate() {
            let n = face.len();
            for i in 0..n {
                let key = DirectedEdge::new(face[i], face[(i + 1) % n]).key();
                slots.entry(key).or_default().push(FaceId(fi as u32));
            }
        }
        let mut edges: Vec<(VertexId, VertexId)> = slots.keys().copied().collect();
        edges.sort();
        for &(u, v) in &edges {
            let fs = &slots[&(u, v)];
            let err = |count| ValidationError::EdgeFaceCount {
                u: names[u.index()].clone(),
                v: names[v.index()].clone(),
                count,
            };
            match fs.len() {
                2 if fs[0] != fs[1] => {}
                1..=3 => return Err(err(fs.len()).into()),
                _ => {
                    return Err(ValidationError::MultiEdge {
                        u: names[u.index()].clone(),
                        v: names[v.index()].clone(),
                    }
                    .into())
                }
            }
        }
        let edge_lookup: HashMap<(VertexId, VertexId), EdgeId> = edges
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, EdgeId(i as u32)))
            .collect();
        let edge_faces: Vec<[FaceId; 2]> = edges
            .iter()
            .map(|k| {
                let fs = &slots[k];
                [fs[0].min(fs[1]), fs[0].max(fs[1])]
            })
            .collect();

        let nv = names.len();
        let mut vertex_edges: Vec<Vec<EdgeId>> = vec![Vec::new(); nv];
        for (i, &(u, v)) in edges.iter().enumerate() {
            vertex_edges[u.index()].push(EdgeId(i as u32));
            vertex_edges[v.index()].push(EdgeId(i as u32));
        }

        let components = count_components(nv, &edges);
        if components != 1 {
            return Err(ValidationError::Disconnected { components }.into());
        }
        for (v, es) in vertex_edges.iter().enumerate() {
            if es.len() < 3 {
                return Err(ValidationError::LowDegree {
                    vertex: names[v].clone(),
                    degree: es.len(),
                }
                .into());
            }
        }

        let mut complex = SurfaceComplex {
            names,
            lookup,
            faces: face_ids,
            edges,
            edge_lookup,
            edge_faces,
            vertex_edges,
            rotations: Vec::new(),
            step: Vec::new(),
        };
        let mut rotations = Vec::with_capacity(nv);
        for v in 0..nv {
            let v = VertexId(v as u32);
            match complex.walk_rotation(v) {
                Some(r) => rotations.push(r),
                None => {
                    return Err(ValidationError::BrokenVertexLink {
                        vertex: complex.names[v.index()].clone(),
                    }
                    .into())
                }
            }
        }
        complex.rotations = rotations;
        complex.step = zigzag::compute_step_table(&complex);
        Ok(complex)
    }

    /// Walks around `v` starting at its smallest edge; `None` if the walk
    /// closes before visiting every incident edge.
    fn walk_rotation(&self, v: VertexId) -> Option<Rotation> {
        let incident = &self.vertex_edges[v.index()];
        let start = *incident
            .iter()
            .min_by_key(|&&e| self.other_endpoint(e, v))?;
        let mut edges = Vec::with_capacity(incident.len());
        let mut faces = Vec::with_capacity(incident.len());
        let mut edge = start;
        let mut face = self.edge_faces[start.index()][0];
        loop {
            edges.push(edge);
            faces.push(face);
            let next_edge = self
                .face_edges_at(face, v)
                .into_iter()
                .find(|&e| e != edge)?;
            if next_edge == start {
                break;
            }
            if edges.len() > incident.len() {
                return None;
            }
            let [f0, f1] = self.edge_faces[next_edge.index()];
            face = if f0 == face { f1 } else { f0 };
            edge = next_edge;
        }
        (edges.len() == incident.len()).then_some(Rotation { edges, faces })
    }

    /// The two edges of face `f` incident to `v`.
    fn face_edges_at(&self, f: FaceId, v: VertexId) -> Vec<EdgeId> {
        let b = &self.faces[f.index()];
        let n = b.len();
        match b.iter().position(|&x| x == v) {
            Some(i) => vec![
                self.edge_lookup[&DirectedEdge::new(v, b[(i + n - 1) % n]).key()],
                self.edge_lookup[&DirectedEdge::new(v, b[(i + 1) % n]).key()],
            ],
            None => Vec::new(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.names.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces.len() as u32).map(FaceId)
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.lookup.get(name).copied()
    }

    pub fn require_vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertex_edges[v.index()].len()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u == v {
            return None;
        }
        self.edge_lookup
            .get(&DirectedEdge::new(u, v).key())
            .copied()
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Endpoints of `e` in increasing vertex order.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.index()]
    }

    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e.index()];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn edge_of(&self, d: DirectedEdge) -> Option<EdgeId> {
        self.edge_between(d.tail, d.head)
    }

    pub fn boundary(&self, f: FaceId) -> &[VertexId] {
        &self.faces[f.index()]
    }

    pub fn edge_faces(&self, e: EdgeId) -> [FaceId; 2] {
        self.edge_faces[e.index()]
    }

    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.vertex_edges[v.index()]
    }

    pub fn face_contains_edge(&self, f: FaceId, e: EdgeId) -> bool {
        self.edge_faces[e.index()].contains(&f)
    }

    /// The second face on `e`.
    pub fn other_face(&self, e: EdgeId, f: FaceId) -> Result<FaceId> {
        let [a, b] = self.edge_faces[e.index()];
        if a == f {
            Ok(b)
        } else if b == f {
            Ok(a)
        } else {
            let (u, v) = self.endpoints(e);
            Err(Error::Incidence(format!(
                "face [{}] does not contain edge {}-{}",
                self.face_names(f).join(","),
                self.name(u),
                self.name(v)
            )))
        }
    }

    /// Looks up a face by its boundary, in any rotation or reflection.
    pub fn find_face(&self, boundary: &[VertexId]) -> Option<FaceId> {
        let canon = canonical_cycle(boundary);
        self.faces
            .binary_search(&canon)
            .ok()
            .map(|i| FaceId(i as u32))
    }

    pub fn find_face_by_names(&self, boundary: &[&str]) -> Result<FaceId> {
        let ids = boundary
            .iter()
            .map(|n| self.require_vertex(n))
            .collect::<Result<Vec<_>>>()?;
        self.find_face(&ids)
            .ok_or_else(|| Error::Incidence(format!("no face [{}]", boundary.join(","))))
    }

    pub fn face_names(&self, f: FaceId) -> Vec<&str> {
        self.faces[f.index()]
            .iter()
            .map(|&v| self.name(v))
            .collect()
    }

    /// All faces as token lists, in canonical form and order.
    pub fn face_lists(&self) -> Vec<Vec<String>> {
        self.faces
            .iter()
            .map(|f| f.iter().map(|&v| self.names[v.index()].clone()).collect())
            .collect()
    }

    pub fn is_triangulation(&self) -> bool {
        self.faces.iter().all(|f| f.len() == 3)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64
    }

    pub fn vertex_rotation(&self, v: VertexId) -> &Rotation {
        &self.rotations[v.index()]
    }

    /// Whether the faces admit boundary orientations inducing opposite
    /// directions on every edge.
    pub fn is_orientable(&self) -> bool {
        // +1: stored boundary order, -1: reversed
        let mut sign: Vec<i8> = vec![0; self.faces.len()];
        let mut stack = Vec::new();
        for root in 0..self.faces.len() {
            if sign[root] != 0 {
                continue;
            }
            sign[root] = 1;
            stack.push(root);
            while let Some(f) = stack.pop() {
                let b = &self.faces[f];
                let n = b.len();
                for i in 0..n {
                    let (x, y) = (b[i], b[(i + 1) % n]);
                    let e = self.edge_lookup[&DirectedEdge::new(x, y).key()];
                    let g = self.other_face(e, FaceId(f as u32)).expect("edge on face");
                    let gi = g.index();
                    // g must traverse x->y in the opposite sense to f
                    let gb = &self.faces[gi];
                    let m = gb.len();
                    let gx = gb.iter().position(|&z| z == x).expect("shared vertex");
                    let forward_in_g = gb[(gx + 1) % m] == y;
                    let need: i8 = if forward_in_g { -sign[f] } else { sign[f] };
                    if sign[gi] == 0 {
                        sign[gi] = need;
                        stack.push(gi);
                    } else if sign[gi] != need {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub(crate) fn step_table(&self) -> &[u32] {
        &self.step
    }
}

fn count_components(nv: usize, edges: &[(VertexId, VertexId)]) -> usize {
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = nv;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u.index()), find(&mut parent, v.index()));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components
}
