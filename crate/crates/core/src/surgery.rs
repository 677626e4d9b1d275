//! Opening a special pair into a 4-gonal hole and gluing two opened
//! complexes along their holes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::complex::{DirectedEdge, EdgeId, FaceId, SurfaceComplex};
use crate::error::{Error, Result};
use crate::monodromy::{z_monodromy, Side, SpecialPair};
use crate::perm::Perm4;
use crate::zigzag::{
    decode, encode, enumerate_zigzags, EdgeKind, ZOrientation, ZOriented, ZigzagState,
};

/// `N_P(Γ)`: the complex with `v2` split into `v2+` and `v2-` and the new
/// face `F_P = [v1, v2+, v3, v2-]`.
#[derive(Clone, Debug)]
pub struct OpenedComplex {
    pub complex: SurfaceComplex,
    pub hole: FaceId,
    /// `e+1, e+2, e-1, e-2` in label order.
    pub labels: [DirectedEdge; 4],
    /// Opened vertex name to the name it had before splitting.
    pub origin: BTreeMap<String, String>,
    pub v2_plus: String,
    pub v2_minus: String,
}

impl OpenedComplex {
    pub fn original_name<'a>(&'a self, name: &'a str) -> &'a str {
        self.origin.get(name).map(String::as_str).unwrap_or(name)
    }

    /// The label (1..=4) of a forward boundary edge of the hole.
    pub fn label_of(&self, d: DirectedEdge) -> Option<u8> {
        self.labels
            .iter()
            .position(|&l| l == d)
            .map(|i| i as u8 + 1)
    }
}

fn fresh_name(c: &SurfaceComplex, base: String) -> String {
    let mut name = base;
    while c.vertex(&name).is_some() {
        name.push('\'');
    }
    name
}

/// Splits `pair` open. Faces of the `+` arc at `v2` get `v2+`, faces of the
/// `-` arc get `v2-`.
pub fn open_pair(z: &ZOriented, pair: &SpecialPair) -> Result<OpenedComplex> {
    let c = z.complex();
    let v2 = c.name(pair.v2).to_string();
    let plus_name = fresh_name(c, format!("{v2}+"));
    let minus_name = fresh_name(c, format!("{v2}-"));
    let plus: BTreeSet<FaceId> = pair.arc(Side::Plus).iter().copied().collect();
    let minus: BTreeSet<FaceId> = pair.arc(Side::Minus).iter().copied().collect();
    let mut faces: Vec<Vec<String>> = Vec::with_capacity(c.num_faces() + 1);
    for f in c.faces() {
        let rename = if plus.contains(&f) {
            Some(&plus_name)
        } else if minus.contains(&f) {
            Some(&minus_name)
        } else {
            None
        };
        faces.push(
            c.boundary(f)
                .iter()
                .map(|&v| match rename {
                    Some(n) if v == pair.v2 => n.clone(),
                    _ => c.name(v).to_string(),
                })
                .collect(),
        );
    }
    let v1 = c.name(pair.v1).to_string();
    let v3 = c.name(pair.v3).to_string();
    faces.push(vec![
        v1.clone(),
        plus_name.clone(),
        v3.clone(),
        minus_name.clone(),
    ]);
    let opened = SurfaceComplex::from_faces(&faces)?;
    let id = |n: &str| opened.vertex(n).expect("opened vertex");
    let hole = opened
        .find_face(&[id(&v1), id(&plus_name), id(&v3), id(&minus_name)])
        .expect("hole face");
    let labels = [
        DirectedEdge::new(id(&v1), id(&plus_name)),
        DirectedEdge::new(id(&plus_name), id(&v3)),
        DirectedEdge::new(id(&v1), id(&minus_name)),
        DirectedEdge::new(id(&minus_name), id(&v3)),
    ];
    let origin = BTreeMap::from([(plus_name.clone(), v2.clone()), (minus_name.clone(), v2)]);
    Ok(OpenedComplex {
        complex: opened,
        hole,
        labels,
        origin,
        v2_plus: plus_name,
        v2_minus: minus_name,
    })
}

/// The monodromy of the hole, read off zigzags of the opened complex: the
/// walk leaving label `x` through its triangle runs until it meets the hole
/// boundary again.
pub fn opened_monodromy(op: &OpenedComplex) -> Result<Perm4> {
    let c = &op.complex;
    let step = c.step_table();
    let boundary: BTreeSet<EdgeId> = op
        .labels
        .iter()
        .map(|&d| c.edge_of(d).expect("hole edge"))
        .collect();
    let mut images = [0u8; 4];
    for (i, &d) in op.labels.iter().enumerate() {
        let e = c.edge_of(d).expect("hole edge");
        let face = c.other_face(e, op.hole)?;
        let mut s = encode(c, ZigzagState { edge: d, face }).expect("face contains edge");
        let mut found = None;
        for _ in 0..step.len() {
            s = step[s as usize];
            let cur = decode(c, s);
            if boundary.contains(&c.edge_of(cur.edge).expect("state edge")) {
                found = Some(op.label_of(cur.edge).ok_or_else(|| {
                    Error::Monodromy(format!("label {} returns to the hole reversed", i + 1))
                })?);
                break;
            }
        }
        images[i] = found.ok_or_else(|| {
            Error::Monodromy(format!("label {} never returns to the hole", i + 1))
        })?;
    }
    Perm4::from_images(images).map_err(|_| {
        Error::Monodromy(format!(
            "hole first-return map {images:?} is not a bijection"
        ))
    })
}

/// The two boundary identifications of the holes that respect directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpecialHomeomorphism {
    /// `v2'+ -> v2+`, `v2'- -> v2-`; labels `k -> k'`.
    Direct,
    /// `v2'+ -> v2-`, `v2'- -> v2+`; labels `1 -> 3'`, `2 -> 4'`, `3 -> 1'`, `4 -> 2'`.
    Swap,
}

impl SpecialHomeomorphism {
    pub const BOTH: [SpecialHomeomorphism; 2] = [Self::Direct, Self::Swap];

    pub fn as_perm(self) -> Perm4 {
        match self {
            Self::Direct => Perm4::IDENTITY,
            Self::Swap => Perm4::S,
        }
    }
}

impl fmt::Display for SpecialHomeomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Direct => "direct",
            Self::Swap => "swap",
        })
    }
}

/// Cycle count of `g⁻¹·M'·g·M`.
pub fn predicted_merge_count(mp: Perm4, mp_prime: Perm4, g: SpecialHomeomorphism) -> usize {
    let g = g.as_perm();
    (g.inverse() * mp_prime * g * mp).cycle_count()
}

/// Whether at least one pair has non-adjacent endpoints.
pub fn check_star(
    a: &SurfaceComplex,
    pa: &SpecialPair,
    b: &SurfaceComplex,
    pb: &SpecialPair,
) -> bool {
    !a.are_adjacent(pa.v1, pa.v3) || !b.are_adjacent(pb.v1, pb.v3)
}

/// A glued complex with its inherited orientation and the zigzag bookkeeping
/// of the gluing.
#[derive(Clone, Debug)]
pub struct SumResult {
    pub oriented: ZOriented,
    /// The four identified hole edges, by vertex names.
    pub glued: [(String, String); 4],
    /// `cycles(g⁻¹·M'·g·M)`.
    pub predicted: usize,
    /// Zigzag pairs of the result through the glued edges.
    pub through_glued: usize,
    /// Zigzag pairs of either input avoiding its pair, plus `predicted`.
    pub expected_total: usize,
}

type NameEdge = (String, String);

fn undirected(u: &str, v: &str) -> NameEdge {
    if u <= v {
        (u.to_string(), v.to_string())
    } else {
        (v.to_string(), u.to_string())
    }
}

/// Kinds of the edges of an opened complex, read from the unopened one.
fn inherited_kinds(
    z: &ZOriented,
    op: &OpenedComplex,
    rename: &dyn Fn(&str) -> String,
    out: &mut BTreeMap<NameEdge, Option<NameEdge>>,
) -> Result<()> {
    let c = z.complex();
    let oc = &op.complex;
    for e in oc.edges() {
        let (x, y) = oc.endpoints(e);
        let (xn, yn) = (oc.name(x), oc.name(y));
        let ox = c.vertex(op.original_name(xn)).expect("origin vertex");
        let oy = c.vertex(op.original_name(yn)).expect("origin vertex");
        let orig = c.edge_between(ox, oy).expect("origin edge");
        let kind = match z.typing().kind(orig) {
            EdgeKind::I => None,
            EdgeKind::II(d) if d.tail == ox => Some((rename(xn), rename(yn))),
            EdgeKind::II(_) => Some((rename(yn), rename(xn))),
        };
        let key = undirected(&rename(xn), &rename(yn));
        if let Some(prev) = out.insert(key.clone(), kind.clone()) {
            if prev != kind {
                return Err(Error::Glue(format!(
                    "edge {}-{} inherits conflicting types",
                    key.0, key.1
                )));
            }
        }
    }
    Ok(())
}

/// `Γ_A #_g Γ_B`. Vertices of `B` other than the hole corners are renamed
/// `g{seq}.{name}`.
pub fn connected_sum(
    a: &ZOriented,
    pa: &SpecialPair,
    b: &ZOriented,
    pb: &SpecialPair,
    g: SpecialHomeomorphism,
    seq: usize,
) -> Result<SumResult> {
    let (ca, cb) = (a.complex(), b.complex());
    if !check_star(ca, pa, cb, pb) {
        return Err(Error::StarViolation {
            a: format!("{}-{}", ca.name(pa.v1), ca.name(pa.v3)),
            b: format!("{}-{}", cb.name(pb.v1), cb.name(pb.v3)),
        });
    }
    a.require_homogeneous()?;
    b.require_homogeneous()?;
    let mp = z_monodromy(a, pa)?;
    let mp_prime = z_monodromy(b, pb)?;
    let opa = open_pair(a, pa)?;
    let opb = open_pair(b, pb)?;

    let a_names: BTreeSet<String> = opa
        .complex
        .vertices()
        .map(|v| opa.complex.name(v).to_string())
        .collect();
    let mut prefix = format!("g{seq}.");
    while opb
        .complex
        .vertices()
        .any(|v| a_names.contains(&format!("{prefix}{}", opb.complex.name(v))))
    {
        prefix.insert(0, '_');
    }
    let (plus_to, minus_to) = match g {
        SpecialHomeomorphism::Direct => (&opa.v2_plus, &opa.v2_minus),
        SpecialHomeomorphism::Swap => (&opa.v2_minus, &opa.v2_plus),
    };
    let mut fixed: BTreeMap<String, String> = BTreeMap::new();
    fixed.insert(cb.name(pb.v1).to_string(), ca.name(pa.v1).to_string());
    fixed.insert(cb.name(pb.v3).to_string(), ca.name(pa.v3).to_string());
    fixed.insert(opb.v2_plus.clone(), plus_to.clone());
    fixed.insert(opb.v2_minus.clone(), minus_to.clone());
    let rename_b = |n: &str| {
        fixed
            .get(n)
            .cloned()
            .unwrap_or_else(|| format!("{prefix}{n}"))
    };
    let keep_a = |n: &str| n.to_string();

    let mut faces: Vec<Vec<String>> = Vec::new();
    for f in opa.complex.faces().filter(|&f| f != opa.hole) {
        faces.push(
            opa.complex
                .face_names(f)
                .iter()
                .map(|n| n.to_string())
                .collect(),
        );
    }
    for f in opb.complex.faces().filter(|&f| f != opb.hole) {
        faces.push(
            opb.complex
                .face_names(f)
                .iter()
                .map(|n| rename_b(n))
                .collect(),
        );
    }
    let complex = SurfaceComplex::from_faces(&faces)
        .map_err(|e| Error::Glue(format!("glued complex is invalid: {e}")))?;

    let mut kinds = BTreeMap::new();
    inherited_kinds(a, &opa, &keep_a, &mut kinds)?;
    inherited_kinds(b, &opb, &rename_b, &mut kinds)?;
    if kinds.len() != complex.num_edges() {
        return Err(Error::Glue(format!(
            "{} inherited edges for {} edges of the sum",
            kinds.len(),
            complex.num_edges()
        )));
    }
    let id = |n: &str| complex.vertex(n).expect("sum vertex");
    let mut wanted: BTreeMap<EdgeId, Option<DirectedEdge>> = BTreeMap::new();
    for ((u, v), kind) in &kinds {
        let e = complex
            .edge_between(id(u), id(v))
            .ok_or_else(|| Error::Glue(format!("inherited edge {u}-{v} is missing")))?;
        wanted.insert(
            e,
            kind.as_ref().map(|(x, y)| DirectedEdge::new(id(x), id(y))),
        );
    }

    let zigzags = enumerate_zigzags(&complex);
    let mut bits = Vec::with_capacity(zigzags.len());
    for (i, zp) in zigzags.pairs().iter().enumerate() {
        let mut vote = None;
        for d in zp.forward.edges() {
            let e = complex.edge_of(*d).expect("zigzag edge");
            if let Some(Some(w)) = wanted.get(&e) {
                let backward = *w != *d;
                if vote.is_some_and(|v| v != backward) {
                    return Err(Error::Glue(format!(
                        "zigzag {i} runs both ways along inherited type-II edges"
                    )));
                }
                vote = Some(backward);
            }
        }
        bits.push(
            vote.ok_or_else(|| Error::Glue(format!("zigzag {i} meets no inherited type-II edge")))?,
        );
    }
    let oriented = ZOriented::with_zigzags(complex, zigzags, ZOrientation::new(bits))?;
    for (&e, w) in &wanted {
        let got = match oriented.typing().kind(e) {
            EdgeKind::I => None,
            EdgeKind::II(d) => Some(d),
        };
        if got != *w {
            let (u, v) = oriented.complex().endpoints(e);
            return Err(Error::Glue(format!(
                "edge {}-{} changed type in the sum",
                oriented.complex().name(u),
                oriented.complex().name(v)
            )));
        }
    }
    if !oriented.is_homogeneous() {
        return Err(Error::Glue("sum is not z-homogeneous".into()));
    }

    let sc = oriented.complex();
    let (v1, v3) = (ca.name(pa.v1), ca.name(pa.v3));
    let glued = [
        (v1.to_string(), opa.v2_plus.clone()),
        (opa.v2_plus.clone(), v3.to_string()),
        (v1.to_string(), opa.v2_minus.clone()),
        (opa.v2_minus.clone(), v3.to_string()),
    ];
    let glued_ids: Vec<EdgeId> = glued
        .iter()
        .map(|(u, v)| {
            let (x, y) = (
                sc.vertex(u).expect("glued vertex"),
                sc.vertex(v).expect("glued vertex"),
            );
            sc.edge_between(x, y).expect("glued edge")
        })
        .collect();
    let through_glued = oriented.zigzags().pairs_through(&glued_ids).len();
    let predicted = predicted_merge_count(mp, mp_prime, g);
    let avoid = |z: &ZOriented, p: &SpecialPair| {
        z.zigzag_count() - crate::monodromy::zigzags_through_edges(z, p).len()
    };
    Ok(SumResult {
        oriented,
        glued,
        predicted,
        through_glued,
        expected_total: avoid(a, pa) + avoid(b, pb) + predicted,
    })
}
