//! Zigzags (Petrie walks), z-orientations and the edge/face typing they induce.
//!
//! A zigzag state is a directed edge together with one of its two faces: the
//! face through which the walk continues. The step map sends `((u,v), f)` to
//! `((v,w), f')`, where `w` follows `v` on `f` read in the direction `u -> v`
//! and `f'` is the other face on `{v,w}`. The step map is a permutation of the
//! `4·E` states; zigzags are its orbits. The involution
//! `((u,v), f) -> ((v,u), other face)` conjugates the step map to its inverse,
//! so it maps every orbit onto the orbit of the reversed zigzag.
//!
//! States are packed as `4·edge + 2·slot + dir`, where `slot` selects one of
//! the two faces of the edge and `dir` is 0 when the edge runs from its
//! smaller to its larger endpoint. Reversal is then `s ^ 3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::{DirectedEdge, EdgeId, FaceId, SurfaceComplex, VertexId};
use crate::error::{Error, Result};

/// Default cap on the number of zigzag pairs for exhaustive orientation scans.
pub const DEFAULT_ORIENTATION_LIMIT: usize = 20;

pub(crate) type StateId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZigzagState {
    pub edge: DirectedEdge,
    /// Face through which the next step travels; it contains `edge`.
    pub face: FaceId,
}

pub(crate) fn decode(c: &SurfaceComplex, s: StateId) -> ZigzagState {
    let e = EdgeId(s >> 2);
    let slot = ((s >> 1) & 1) as usize;
    let (lo, hi) = c.endpoints(e);
    let edge = if s & 1 == 0 {
        DirectedEdge::new(lo, hi)
    } else {
        DirectedEdge::new(hi, lo)
    };
    ZigzagState {
        edge,
        face: c.edge_faces(e)[slot],
    }
}

pub(crate) fn encode(c: &SurfaceComplex, state: ZigzagState) -> Option<StateId> {
    let e = c.edge_of(state.edge)?;
    let slot = c.edge_faces(e).iter().position(|&f| f == state.face)? as u32;
    let dir = u32::from(state.edge.tail > state.edge.head);
    Some(4 * e.0 + 2 * slot + dir)
}

pub(crate) fn reverse_state(s: StateId) -> StateId {
    s ^ 3
}

pub(crate) fn compute_step_table(c: &SurfaceComplex) -> Vec<u32> {
    (0..4 * c.num_edges() as u32)
        .map(|s| {
            let ZigzagState { edge, face } = decode(c, s);
            let b = c.boundary(face);
            let n = b.len();
            let pos = |x: VertexId| b.iter().position(|&y| y == x).expect("vertex on face");
            let (pu, pv) = (pos(edge.tail), pos(edge.head));
            let w = if (pu + 1) % n == pv {
                b[(pv + 1) % n]
            } else {
                b[(pv + n - 1) % n]
            };
            let next = c.edge_between(edge.head, w).expect("boundary edge");
            let [f0, _] = c.edge_faces(next);
            let slot = u32::from(f0 == face);
            let dir = u32::from(edge.head > w);
            4 * next.0 + 2 * slot + dir
        })
        .collect()
}

/// One step of the zigzag walk.
pub fn zigzag_step(c: &SurfaceComplex, state: ZigzagState) -> Result<ZigzagState> {
    let s = encode(c, state).ok_or_else(|| {
        Error::Incidence(format!(
            "{}->{} is not an edge of face [{}]",
            c.name(state.edge.tail),
            c.name(state.edge.head),
            c.face_names(state.face).join(",")
        ))
    })?;
    Ok(decode(c, c.step_table()[s as usize]))
}

/// Index of the lexicographically least rotation (two-pointer scan).
pub(crate) fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        let (a, b) = (&s[(i + k) % n], &s[(j + k) % n]);
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zigzag {
    states: Vec<StateId>,
    edges: Vec<DirectedEdge>,
}

impl Zigzag {
    /// Builds a zigzag from an orbit, rotated to its canonical starting point.
    fn from_orbit(c: &SurfaceComplex, orbit: Vec<StateId>) -> Self {
        let edges: Vec<DirectedEdge> = orbit.iter().map(|&s| decode(c, s).edge).collect();
        let start = least_rotation(&edges);
        let mut states = orbit;
        states.rotate_left(start);
        let mut edges = edges;
        edges.rotate_left(start);
        Zigzag { states, edges }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Directed edges in traversal order, starting at the canonical rotation.
    pub fn edges(&self) -> &[DirectedEdge] {
        &self.edges
    }

    pub fn states(&self, c: &SurfaceComplex) -> Vec<ZigzagState> {
        self.states.iter().map(|&s| decode(c, s)).collect()
    }

    pub(crate) fn state_ids(&self) -> &[StateId] {
        &self.states
    }

    /// The cyclic vertex sequence visited (tails of the directed edges).
    pub fn vertex_cycle(&self) -> Vec<VertexId> {
        self.edges.iter().map(|e| e.tail).collect()
    }

    /// Canonical key: the least rotation of the directed-edge sequence.
    /// Zigzags are stored already rotated, so this is the edge list itself.
    pub fn key(&self) -> &[DirectedEdge] {
        &self.edges
    }

    pub fn key_names(&self, c: &SurfaceComplex) -> Vec<String> {
        self.edges
            .iter()
            .flat_map(|e| [c.name(e.tail).to_string(), c.name(e.head).to_string()])
            .collect()
    }

    pub fn passes_through(&self, c: &SurfaceComplex, e: EdgeId) -> bool {
        self.edges.iter().any(|d| c.edge_of(*d) == Some(e))
    }
}

/// A zigzag and its reversal. `forward` has the smaller canonical key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagPair {
    pub forward: Zigzag,
    pub backward: Zigzag,
}

impl ZigzagPair {
    pub fn key(&self) -> &[DirectedEdge] {
        self.forward.key()
    }

    pub fn get(&self, backward: bool) -> &Zigzag {
        if backward {
            &self.backward
        } else {
            &self.forward
        }
    }
}

/// All zigzags of a complex, as reversal pairs sorted by pair key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagSet {
    pairs: Vec<ZigzagPair>,
    // state -> (pair index, lies on the backward member)
    owner: Vec<(u32, bool)>,
}

impl ZigzagSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[ZigzagPair] {
        &self.pairs
    }

    pub fn is_z_knotted(&self) -> bool {
        self.pairs.len() == 1
    }

    pub(crate) fn owner_of(&self, s: StateId) -> (usize, bool) {
        let (p, b) = self.owner[s as usize];
        (p as usize, b)
    }

    pub fn owner(&self, c: &SurfaceComplex, state: ZigzagState) -> Option<(usize, bool)> {
        encode(c, state).map(|s| self.owner_of(s))
    }

    /// The zigzag containing `first` immediately followed by `second`,
    /// as (pair index, is the backward member).
    pub fn locate(
        &self,
        c: &SurfaceComplex,
        first: DirectedEdge,
        second: DirectedEdge,
    ) -> Option<(usize, bool)> {
        let e = c.edge_of(first)?;
        c.edge_faces(e).into_iter().find_map(|face| {
            let s = encode(c, ZigzagState { edge: first, face })?;
            (decode(c, c.step_table()[s as usize]).edge == second).then(|| self.owner_of(s))
        })
    }

    pub fn representative(&self, i: usize, tau: &ZOrientation) -> &Zigzag {
        self.pairs[i].get(tau.bits[i])
    }

    pub fn representatives<'a>(
        &'a self,
        tau: &'a ZOrientation,
    ) -> impl Iterator<Item = &'a Zigzag> + 'a {
        self.pairs.iter().zip(&tau.bits).map(|(p, &b)| p.get(b))
    }

    /// Pair indices of zigzags passing through any of `edges`.
    pub fn pairs_through(&self, edges: &[EdgeId]) -> Vec<usize> {
        let mut out: Vec<usize> = edges
            .iter()
            .flat_map(|e| (0..4).map(move |k| 4 * e.0 + k))
            .map(|s| self.owner_of(s).0)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Decomposes the state set into step orbits and pairs each with its reversal.
pub fn enumerate_zigzags(c: &SurfaceComplex) -> ZigzagSet {
    let step = c.step_table();
    let n = step.len();
    let mut visited = vec![false; n];
    let mut pairs = Vec::new();
    for seed in 0..n as u32 {
        if visited[seed as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut s = seed;
        loop {
            visited[s as usize] = true;
            orbit.push(s);
            s = step[s as usize];
            if s == seed {
                break;
            }
        }
        let reversed: Vec<StateId> = orbit.iter().rev().map(|&s| reverse_state(s)).collect();
        debug_assert!(
            !visited[reversed[0] as usize],
            "self-reversed zigzag through state {}",
            reversed[0]
        );
        for &r in &reversed {
            visited[r as usize] = true;
        }
        let a = Zigzag::from_orbit(c, orbit);
        let b = Zigzag::from_orbit(c, reversed);
        let (forward, backward) = if a.key() <= b.key() { (a, b) } else { (b, a) };
        pairs.push(ZigzagPair { forward, backward });
    }
    pairs.sort_by(|x, y| x.key().cmp(y.key()));
    let mut owner = vec![(0u32, false); n];
    for (i, p) in pairs.iter().enumerate() {
        for &s in p.forward.state_ids() {
            owner[s as usize] = (i as u32, false);
        }
        for &s in p.backward.state_ids() {
            owner[s as usize] = (i as u32, true);
        }
    }
    ZigzagSet { pairs, owner }
}

/// One bit per zigzag pair: `false` picks the forward member, `true` the
/// backward one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZOrientation {
    bits: Vec<bool>,
}

impl ZOrientation {
    pub fn new(bits: Vec<bool>) -> Self {
        ZOrientation { bits }
    }

    pub fn all_forward(k: usize) -> Self {
        ZOrientation {
            bits: vec![false; k],
        }
    }

    pub fn from_flags(flags: &[u8]) -> Result<Self> {
        flags
            .iter()
            .map(|&f| match f {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(Error::Orientation(format!("flag {other} is not 0 or 1"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ZOrientation::new)
    }

    pub fn flags(&self) -> Vec<u8> {
        self.bits.iter().map(|&b| u8::from(b)).collect()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn reversed(&self) -> Self {
        ZOrientation {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    fn check_len(&self, zs: &ZigzagSet) -> Result<()> {
        if self.bits.len() == zs.len() {
            Ok(())
        } else {
            Err(Error::Orientation(format!(
                "{} bits given for {} zigzag pairs",
                self.bits.len(),
                zs.len()
            )))
        }
    }
}

impl fmt::Display for ZOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for ZOrientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Orientation(format!(
                    "unexpected character {other:?} in orientation bits"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ZOrientation::new)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// Traversed once in each direction.
    I,
    /// Traversed twice in the same direction, stored here.
    II(DirectedEdge),
}

impl EdgeKind {
    pub fn is_type_two(self) -> bool {
        matches!(self, EdgeKind::II(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeTyping {
    kinds: Vec<EdgeKind>,
}

impl EdgeTyping {
    pub fn kind(&self, e: EdgeId) -> EdgeKind {
        self.kinds[e.index()]
    }

    pub fn kinds(&self) -> &[EdgeKind] {
        &self.kinds
    }

    pub fn type_one_count(&self) -> usize {
        self.kinds.iter().filter(|k| !k.is_type_two()).count()
    }

    pub fn type_two_count(&self) -> usize {
        self.kinds.iter().filter(|k| k.is_type_two()).count()
    }

    /// τ-directions of all type-II edges, in edge order.
    pub fn type_two_edges(&self) -> Vec<DirectedEdge> {
        self.kinds
            .iter()
            .filter_map(|k| match k {
                EdgeKind::II(d) => Some(*d),
                EdgeKind::I => None,
            })
            .collect()
    }

    /// Whether `d` is a type-II edge traversed in its τ-direction.
    pub fn is_forward_type_two(&self, c: &SurfaceComplex, d: DirectedEdge) -> bool {
        c.edge_of(d)
            .is_some_and(|e| self.kinds[e.index()] == EdgeKind::II(d))
    }
}

pub fn edge_types(c: &SurfaceComplex, zs: &ZigzagSet, tau: &ZOrientation) -> Result<EdgeTyping> {
    tau.check_len(zs)?;
    let mut seen: Vec<Vec<DirectedEdge>> = vec![Vec::with_capacity(2); c.num_edges()];
    for z in zs.representatives(tau) {
        for &d in z.edges() {
            let e = c.edge_of(d).expect("zigzag edge");
            seen[e.index()].push(d);
        }
    }
    let kinds = seen
        .into_iter()
        .map(|ds| {
            assert_eq!(ds.len(), 2, "τ representatives double-cover the edges");
            if ds[0] == ds[1] {
                EdgeKind::II(ds[0])
            } else {
                EdgeKind::I
            }
        })
        .collect();
    Ok(EdgeTyping { kinds })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FaceType {
    I,
    II,
}

pub(crate) fn face_type_of(c: &SurfaceComplex, typing: &EdgeTyping, f: FaceId) -> Result<FaceType> {
    let b = c.boundary(f);
    if b.len() != 3 {
        return Err(Error::Structure(format!(
            "face [{}] is not a triangle",
            c.face_names(f).join(",")
        )));
    }
    let sides: Vec<(DirectedEdge, EdgeKind)> = (0..3)
        .map(|i| {
            let d = DirectedEdge::new(b[i], b[(i + 1) % 3]);
            (d, typing.kind(c.edge_of(d).expect("face edge")))
        })
        .collect();
    let twos = sides.iter().filter(|(_, k)| k.is_type_two()).count();
    let cyclic = |flip: bool| {
        sides
            .iter()
            .all(|&(d, k)| k == EdgeKind::II(if flip { d.reversed() } else { d }))
    };
    match twos {
        1 => Ok(FaceType::I),
        3 if cyclic(false) || cyclic(true) => Ok(FaceType::II),
        _ => Err(Error::Structure(format!(
            "face [{}] has {twos} type-II edges and is neither of type I nor type II",
            c.face_names(f).join(",")
        ))),
    }
}

/// Types of all faces, in face order. Only defined for triangulations.
pub fn face_types(c: &SurfaceComplex, typing: &EdgeTyping) -> Result<Vec<FaceType>> {
    c.faces().map(|f| face_type_of(c, typing, f)).collect()
}

fn zigzag_is_homogeneous(c: &SurfaceComplex, typing: &EdgeTyping, z: &Zigzag) -> bool {
    let n = z.len();
    if !n.is_multiple_of(3) {
        return false;
    }
    let pattern: Vec<bool> = z
        .edges()
        .iter()
        .map(|&d| {
            typing
                .kind(c.edge_of(d).expect("zigzag edge"))
                .is_type_two()
        })
        .collect();
    (0..3).any(|phase| {
        pattern
            .iter()
            .enumerate()
            .all(|(i, &t)| t == ((i + 3 - phase) % 3 == 0))
    })
}

pub(crate) fn homogeneous_with(
    c: &SurfaceComplex,
    zs: &ZigzagSet,
    tau: &ZOrientation,
    typing: &EdgeTyping,
) -> bool {
    c.is_triangulation()
        && zs
            .representatives(tau)
            .all(|z| zigzag_is_homogeneous(c, typing, z))
}

/// Every τ-zigzag reads (II, I, I) repeated, at some cyclic offset.
pub fn is_z_homogeneous(c: &SurfaceComplex, zs: &ZigzagSet, tau: &ZOrientation) -> Result<bool> {
    let typing = edge_types(c, zs, tau)?;
    Ok(homogeneous_with(c, zs, tau, &typing))
}

/// Scans the `2^(k-1)` orientations with the first bit cleared and returns
/// the z-homogeneous ones, in increasing binary order of the remaining bits.
pub fn find_homogeneous_orientations(
    c: &SurfaceComplex,
    zs: &ZigzagSet,
    limit: usize,
) -> Result<Vec<ZOrientation>> {
    let k = zs.len();
    if k > limit || k > 63 {
        return Err(Error::TooManyZigzags { count: k, limit });
    }
    if !c.is_triangulation() || k == 0 {
        return Ok(Vec::new());
    }
    let mut found = Vec::new();
    for mask in 0u64..(1u64 << (k - 1)) {
        let bits: Vec<bool> = (0..k)
            .map(|i| i > 0 && (mask >> (k - 1 - i)) & 1 == 1)
            .collect();
        let tau = ZOrientation::new(bits);
        if is_z_homogeneous(c, zs, &tau)? {
            found.push(tau);
        }
    }
    Ok(found)
}

/// The type-II edges with their τ-directions: an Eulerian digraph when the
/// orientation is z-homogeneous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeTwoGraph {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<DirectedEdge>,
}

pub fn type_two_subgraph(c: &SurfaceComplex, typing: &EdgeTyping) -> Result<TypeTwoGraph> {
    let edges = typing.type_two_edges();
    let mut balance = vec![0i64; c.num_vertices()];
    let mut touched = vec![false; c.num_vertices()];
    for d in &edges {
        balance[d.tail.index()] += 1;
        balance[d.head.index()] -= 1;
        touched[d.tail.index()] = true;
        touched[d.head.index()] = true;
    }
    if let Some(v) = balance.iter().position(|&b| b != 0) {
        return Err(Error::Structure(format!(
            "type-II subgraph is not balanced at {}",
            c.name(VertexId(v as u32))
        )));
    }
    let vertices: Vec<VertexId> = c.vertices().filter(|v| touched[v.index()]).collect();
    // weak connectivity by flood fill over type-II edges
    if let Some(&root) = vertices.first() {
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); c.num_vertices()];
        for d in &edges {
            adj[d.tail.index()].push(d.head);
            adj[d.head.index()].push(d.tail);
        }
        let mut seen = vec![false; c.num_vertices()];
        let mut stack = vec![root];
        seen[root.index()] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v.index()] {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    stack.push(w);
                }
            }
        }
        if vertices.iter().any(|v| !seen[v.index()]) {
            return Err(Error::Structure(
                "type-II subgraph is not weakly connected".into(),
            ));
        }
    }
    Ok(TypeTwoGraph { vertices, edges })
}

/// A complex with a fixed z-orientation and the data derived from it.
#[derive(Clone, Debug)]
pub struct ZOriented {
    complex: SurfaceComplex,
    zigzags: ZigzagSet,
    tau: ZOrientation,
    typing: EdgeTyping,
    homogeneous: bool,
}

impl ZOriented {
    pub fn new(complex: SurfaceComplex, tau: ZOrientation) -> Result<Self> {
        let zigzags = enumerate_zigzags(&complex);
        Self::with_zigzags(complex, zigzags, tau)
    }

    pub fn with_zigzags(
        complex: SurfaceComplex,
        zigzags: ZigzagSet,
        tau: ZOrientation,
    ) -> Result<Self> {
        let typing = edge_types(&complex, &zigzags, &tau)?;
        let homogeneous = homogeneous_with(&complex, &zigzags, &tau, &typing);
        Ok(ZOriented {
            complex,
            zigzags,
            tau,
            typing,
            homogeneous,
        })
    }

    /// Pairs the complex with its first z-homogeneous orientation.
    pub fn first_homogeneous(complex: SurfaceComplex) -> Result<Self> {
        let zigzags = enumerate_zigzags(&complex);
        let tau = find_homogeneous_orientations(&complex, &zigzags, DEFAULT_ORIENTATION_LIMIT)?
            .into_iter()
            .next()
            .ok_or_else(|| {
                Error::Structure("complex admits no z-homogeneous orientation".into())
            })?;
        Self::with_zigzags(complex, zigzags, tau)
    }

    pub fn complex(&self) -> &SurfaceComplex {
        &self.complex
    }

    pub fn zigzags(&self) -> &ZigzagSet {
        &self.zigzags
    }

    pub fn tau(&self) -> &ZOrientation {
        &self.tau
    }

    pub fn typing(&self) -> &EdgeTyping {
        &self.typing
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn zigzag_count(&self) -> usize {
        self.zigzags.len()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Zigzag> + '_ {
        self.zigzags.representatives(&self.tau)
    }

    pub fn reversed(&self) -> Self {
        let tau = self.tau.reversed();
        let typing = edge_types(&self.complex, &self.zigzags, &tau).expect("same length");
        ZOriented {
            complex: self.complex.clone(),
            zigzags: self.zigzags.clone(),
            tau,
            typing,
            homogeneous: self.homogeneous,
        }
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        if self.homogeneous {
            Ok(())
        } else {
            Err(Error::Structure(format!(
                "orientation {} is not z-homogeneous",
                self.tau
            )))
        }
    }

    pub fn face_types(&self) -> Result<Vec<FaceType>> {
        face_types(&self.complex, &self.typing)
    }

    pub fn type_two_subgraph(&self) -> Result<TypeTwoGraph> {
        type_two_subgraph(&self.complex, &self.typing)
    }

    pub fn into_parts(self) -> (SurfaceComplex, ZOrientation) {
        (self.complex, self.tau)
    }
}
