//! Special pairs of consecutive type-II edges and their z-monodromy.
//!
//! For a special pair `v1 -> v2 -> v3`, the two pair edges cut the rotation
//! at `v2` into two arcs. The arc that starts right after `e1 = v1v2` in the
//! stored rotation is side `+`, the other is side `-`. Labels follow the
//! usual convention:
//!
//! | label | edge | side |
//! |-------|------|------|
//! | 1     | e1   | +    |
//! | 2     | e2   | +    |
//! | 3     | e1   | -    |
//! | 4     | e2   | -    |
//!
//! The monodromy is computed by walking zigzags of the unsplit complex: from
//! label `x` on edge `e_i`, side `δ`, start at the state `(e_i, F^δ_i)` and
//! step until the walk lands on `e1` or `e2` again. The face the walk came
//! through decides the side of the label it arrives at.

use serde::Serialize;

use crate::complex::{DirectedEdge, EdgeId, FaceId, SurfaceComplex, VertexId};
use crate::error::{Error, Result};
use crate::perm::{classify, ClassId, Perm4};
use crate::zigzag::{decode, encode, ZOriented, ZigzagState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialPair {
    pub v1: VertexId,
    pub v2: VertexId,
    pub v3: VertexId,
    /// Faces of the `+` arc at `v2`, from the face on `e1` to the face on `e2`.
    plus: Vec<FaceId>,
    /// Faces of the `-` arc at `v2`, from the face on `e1` to the face on `e2`.
    minus: Vec<FaceId>,
}

impl SpecialPair {
    pub fn e1(&self) -> DirectedEdge {
        DirectedEdge::new(self.v1, self.v2)
    }

    pub fn e2(&self) -> DirectedEdge {
        DirectedEdge::new(self.v2, self.v3)
    }

    pub fn arc(&self, side: Side) -> &[FaceId] {
        match side {
            Side::Plus => &self.plus,
            Side::Minus => &self.minus,
        }
    }

    /// `F^side_i` for `i` in `{1, 2}`.
    pub fn side_face(&self, i: u8, side: Side) -> FaceId {
        let arc = self.arc(side);
        if i == 1 {
            arc[0]
        } else {
            arc[arc.len() - 1]
        }
    }

    /// The four side faces in label order `F+1, F+2, F-1, F-2`.
    pub fn side_faces(&self) -> [FaceId; 4] {
        [
            self.side_face(1, Side::Plus),
            self.side_face(2, Side::Plus),
            self.side_face(1, Side::Minus),
            self.side_face(2, Side::Minus),
        ]
    }

    /// Edge index (1 or 2) and side of a label.
    pub fn label_parts(label: u8) -> (u8, Side) {
        match label {
            1 => (1, Side::Plus),
            2 => (2, Side::Plus),
            3 => (1, Side::Minus),
            4 => (2, Side::Minus),
            _ => panic!("label {label} out of range"),
        }
    }

    pub fn label_of(i: u8, side: Side) -> u8 {
        match (i, side) {
            (1, Side::Plus) => 1,
            (2, Side::Plus) => 2,
            (1, Side::Minus) => 3,
            _ => 4,
        }
    }

    pub fn pair_edge(&self, i: u8) -> DirectedEdge {
        if i == 1 {
            self.e1()
        } else {
            self.e2()
        }
    }

    /// The same pair with `+` and `-` exchanged.
    pub fn with_swapped_sides(&self) -> SpecialPair {
        SpecialPair {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
            ..self.clone()
        }
    }

    /// The pair `v3 -> v2 -> v1`, valid under the reversed orientation, with
    /// each side kept on the same geometric side of the path.
    pub fn reversed(&self) -> SpecialPair {
        let rev = |arc: &[FaceId]| arc.iter().rev().copied().collect();
        SpecialPair {
            v1: self.v3,
            v2: self.v2,
            v3: self.v1,
            plus: rev(&self.plus),
            minus: rev(&self.minus),
        }
    }

    pub fn names(&self, c: &SurfaceComplex) -> [String; 3] {
        [self.v1, self.v2, self.v3].map(|v| c.name(v).to_string())
    }

    pub fn label(&self, c: &SurfaceComplex) -> String {
        self.names(c).join(",")
    }
}

/// Builds the side decomposition of the path `v1 -> v2 -> v3`.
pub fn special_pair(
    z: &ZOriented,
    v1: VertexId,
    v2: VertexId,
    v3: VertexId,
) -> Result<SpecialPair> {
    let c = z.complex();
    let name = |v: VertexId| c.name(v).to_string();
    let path = || format!("{},{},{}", name(v1), name(v2), name(v3));
    for d in [DirectedEdge::new(v1, v2), DirectedEdge::new(v2, v3)] {
        if v1 == v3 || !z.typing().is_forward_type_two(c, d) {
            return Err(Error::Domain(format!(
                "{} is not a special pair: {}->{} is not a type-II edge in its τ-direction",
                path(),
                name(d.tail),
                name(d.head)
            )));
        }
    }
    let e1 = c.edge_between(v1, v2).expect("checked");
    let e2 = c.edge_between(v2, v3).expect("checked");
    let rot = c.vertex_rotation(v2);
    let d = rot.len();
    let i1 = rot.position(e1).expect("incident");
    let i2 = rot.position(e2).expect("incident");
    let mut plus = Vec::new();
    let mut i = i1;
    while i != i2 {
        plus.push(rot.faces[i]);
        i = (i + 1) % d;
    }
    let mut minus = Vec::new();
    let mut i = (i1 + d - 1) % d;
    loop {
        minus.push(rot.faces[i]);
        if i == i2 {
            break;
        }
        i = (i + d - 1) % d;
    }
    let pair = SpecialPair {
        v1,
        v2,
        v3,
        plus,
        minus,
    };
    let faces = pair.side_faces();
    for a in 0..4 {
        for b in a + 1..4 {
            if faces[a] == faces[b] {
                return Err(Error::Structure(format!(
                    "side faces of {} are not pairwise distinct",
                    path()
                )));
            }
        }
    }
    Ok(pair)
}

pub fn special_pair_by_names(z: &ZOriented, v1: &str, v2: &str, v3: &str) -> Result<SpecialPair> {
    let c = z.complex();
    special_pair(
        z,
        c.require_vertex(v1)?,
        c.require_vertex(v2)?,
        c.require_vertex(v3)?,
    )
}

/// All special pairs, ordered by `(v1, v2, v3)`.
pub fn find_special_pairs(z: &ZOriented) -> Result<Vec<SpecialPair>> {
    z.require_homogeneous()?;
    let c = z.complex();
    let twos = z.typing().type_two_edges();
    let mut out_edges: Vec<Vec<VertexId>> = vec![Vec::new(); c.num_vertices()];
    for d in &twos {
        out_edges[d.tail.index()].push(d.head);
    }
    let mut triples = Vec::new();
    for d in &twos {
        for &v3 in &out_edges[d.head.index()] {
            if v3 != d.tail {
                triples.push((d.tail, d.head, v3));
            }
        }
    }
    triples.sort();
    triples
        .into_iter()
        .map(|(a, b, c3)| special_pair(z, a, b, c3))
        .collect()
}

/// The z-monodromy of `pair` as a permutation of the labels.
pub fn z_monodromy(z: &ZOriented, pair: &SpecialPair) -> Result<Perm4> {
    let c = z.complex();
    let step = c.step_table();
    let e1 = c.edge_of(pair.e1()).expect("pair edge");
    let e2 = c.edge_of(pair.e2()).expect("pair edge");
    let mut images = [0u8; 4];
    for x in 1..=4u8 {
        let (i, side) = SpecialPair::label_parts(x);
        let start = ZigzagState {
            edge: pair.pair_edge(i),
            face: pair.side_face(i, side),
        };
        let mut s = encode(c, start).expect("side face contains pair edge");
        let mut arrived = None;
        for _ in 0..step.len() {
            let prev = s;
            s = step[s as usize];
            let cur = decode(c, s);
            let e = c.edge_of(cur.edge).expect("state edge");
            if e != e1 && e != e2 {
                continue;
            }
            let j = if e == e1 { 1 } else { 2 };
            if cur.edge != pair.pair_edge(j) {
                return Err(Error::Monodromy(format!(
                    "label {x} returns to {} against its τ-direction",
                    pair.label(c)
                )));
            }
            let via = decode(c, prev).face;
            let gamma = if via == pair.side_face(j, Side::Plus) {
                Side::Plus
            } else if via == pair.side_face(j, Side::Minus) {
                Side::Minus
            } else {
                return Err(Error::Monodromy(format!(
                    "label {x} enters e{j} through a face outside the pair's sides"
                )));
            };
            arrived = Some(SpecialPair::label_of(j, gamma));
            break;
        }
        images[(x - 1) as usize] = arrived
            .ok_or_else(|| Error::Monodromy(format!("label {x} never returns to the pair")))?;
    }
    Perm4::from_images(images)
        .map_err(|_| Error::Monodromy(format!("first-return map {images:?} is not a bijection")))
}

/// Zigzag pairs of the orientation that pass through `e1` or `e2`.
pub fn zigzags_through_edges(z: &ZOriented, pair: &SpecialPair) -> Vec<usize> {
    let c = z.complex();
    let edges: Vec<EdgeId> = [pair.e1(), pair.e2()]
        .iter()
        .map(|d| c.edge_of(*d).expect("pair edge"))
        .collect();
    z.zigzags().pairs_through(&edges)
}

/// Number of τ-zigzags through the pair, as the cycle count of `s·M_P`,
/// checked against a direct count.
pub fn zigzags_through_pair(z: &ZOriented, pair: &SpecialPair) -> Result<usize> {
    let m = z_monodromy(z, pair)?;
    let k = (Perm4::S * m).cycle_count();
    let direct = zigzags_through_edges(z, pair).len();
    if k != direct {
        return Err(Error::Monodromy(format!(
            "{}: cycles(s·{m}) = {k} but {direct} zigzags pass through the pair",
            pair.label(z.complex())
        )));
    }
    Ok(k)
}

pub fn is_essential(z: &ZOriented, pair: &SpecialPair) -> Result<bool> {
    Ok(zigzags_through_pair(z, pair)? == z.zigzag_count())
}

/// Monodromy, class and zigzag counts of one special pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairAnalysis {
    pub pair: SpecialPair,
    pub monodromy: Perm4,
    pub class: ClassId,
    pub through: usize,
    pub essential: bool,
}

pub fn analyze_pair(z: &ZOriented, pair: &SpecialPair) -> Result<PairAnalysis> {
    let monodromy = z_monodromy(z, pair)?;
    let through = zigzags_through_pair(z, pair)?;
    Ok(PairAnalysis {
        pair: pair.clone(),
        monodromy,
        class: classify(monodromy),
        through,
        essential: through == z.zigzag_count(),
    })
}
