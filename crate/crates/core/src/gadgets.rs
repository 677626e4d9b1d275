//! Spherical z-homogeneous triangulations used as gluing gadgets: bipyramids,
//! the four-path family `Γ(p1,p2,p3,p4)` and the cone construction `T(Γ')`
//! over an embedded Eulerian digraph whose faces are directed cycles.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::Serialize;

use crate::complex::{DirectedEdge, SurfaceComplex};
use crate::error::{Error, Result};
use crate::monodromy::{special_pair_by_names, z_monodromy, zigzags_through_pair, SpecialPair};
use crate::perm::{classify, ClassId, Perm4};
use crate::zigzag::{
    enumerate_zigzags, find_homogeneous_orientations, ZOrientation, ZOriented,
    DEFAULT_ORIENTATION_LIMIT,
};

/// The `n`-gonal bipyramid with apexes `a`, `b` and base `v1..vn`.
pub fn bipyramid(n: usize) -> Result<SurfaceComplex> {
    if n < 3 {
        return Err(Error::Domain(format!("bipyramid needs n >= 3, got {n}")));
    }
    let v = |i: usize| format!("v{}", i % n + 1);
    let mut faces = Vec::with_capacity(2 * n);
    for i in 0..n {
        faces.push(vec!["a".to_string(), v(i), v(i + 1)]);
        faces.push(vec!["b".to_string(), v(i + 1), v(i)]);
    }
    SurfaceComplex::from_faces(&faces)
}

/// `T(Γ')` for an embedded digraph given by its faces as directed vertex
/// cycles. Every edge must occur in exactly two cycles, both times in its
/// own direction. Returns the cone triangulation and the unique
/// z-orientation whose type-II edges are exactly the input edges.
///
/// Apexes are named by `apex_names` when given, otherwise `f0`, `f1`, ...
pub fn triangulate_eulerian<S: AsRef<str>>(
    cycles: &[Vec<S>],
    apex_names: Option<&[String]>,
) -> Result<(SurfaceComplex, ZOrientation)> {
    if cycles.is_empty() {
        return Err(Error::Structure("no cycles given".into()));
    }
    let mut directed: BTreeMap<(&str, &str), usize> = BTreeMap::new();
    for (i, cyc) in cycles.iter().enumerate() {
        if cyc.len() < 3 {
            return Err(Error::Structure(format!(
                "cycle {i} has {} vertices; at least 3 are required",
                cyc.len()
            )));
        }
        let distinct: BTreeSet<&str> = cyc.iter().map(AsRef::as_ref).collect();
        if distinct.len() != cyc.len() {
            return Err(Error::Structure(format!("cycle {i} repeats a vertex")));
        }
        for j in 0..cyc.len() {
            let u = cyc[j].as_ref();
            let w = cyc[(j + 1) % cyc.len()].as_ref();
            *directed.entry((u, w)).or_default() += 1;
        }
    }
    let mut balance: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for &(u, w) in directed.keys() {
        balance.entry(u).or_default().1 += 1;
        balance.entry(w).or_default().0 += 1;
    }
    for (v, (ins, outs)) in &balance {
        if ins != outs {
            return Err(Error::Structure(format!(
                "vertex {v} has odd degree or is unbalanced (in {ins}, out {outs})"
            )));
        }
    }
    for (&(u, w), &n) in &directed {
        if directed.contains_key(&(w, u)) {
            return Err(Error::Structure(format!(
                "edge {u}-{w} is used in both directions"
            )));
        }
        if n != 2 {
            return Err(Error::Structure(format!(
                "directed edge {u}->{w} lies on {n} cycle(s); exactly 2 are required"
            )));
        }
    }

    let apexes: Vec<String> = match apex_names {
        Some(names) => {
            if names.len() != cycles.len() {
                return Err(Error::Structure(format!(
                    "{} apex names for {} cycles",
                    names.len(),
                    cycles.len()
                )));
            }
            for x in names {
                if balance.contains_key(x.as_str()) {
                    return Err(Error::Structure(format!(
                        "apex name {x} is already a vertex"
                    )));
                }
            }
            names.to_vec()
        }
        None => {
            let mut taken: BTreeSet<String> = balance.keys().map(|s| s.to_string()).collect();
            (0..cycles.len())
                .map(|i| {
                    let mut x = format!("f{i}");
                    while taken.contains(&x) {
                        x.push('\'');
                    }
                    taken.insert(x.clone());
                    x
                })
                .collect()
        }
    };
    let mut faces = Vec::new();
    for (cyc, x) in cycles.iter().zip(&apexes) {
        for j in 0..cyc.len() {
            faces.push(vec![
                x.clone(),
                cyc[j].as_ref().to_string(),
                cyc[(j + 1) % cyc.len()].as_ref().to_string(),
            ]);
        }
    }
    let complex = SurfaceComplex::from_faces(&faces)
        .map_err(|e| Error::Structure(format!("cone over the cycles is not a surface: {e}")))?;

    let mut wanted = BTreeSet::new();
    for &(u, w) in directed.keys() {
        let d = DirectedEdge::new(complex.vertex(u).unwrap(), complex.vertex(w).unwrap());
        wanted.insert(d);
    }
    let zigzags = enumerate_zigzags(&complex);
    let mut bits = Vec::with_capacity(zigzags.len());
    for (i, pair) in zigzags.pairs().iter().enumerate() {
        let hit = pair.forward.edges().iter().find_map(|d| {
            if wanted.contains(d) {
                Some(false)
            } else if wanted.contains(&d.reversed()) {
                Some(true)
            } else {
                None
            }
        });
        match hit {
            Some(b) => bits.push(b),
            None => {
                return Err(Error::Structure(format!(
                    "zigzag {i} avoids every input edge, so no orientation can be homogeneous"
                )))
            }
        }
    }
    let tau = ZOrientation::new(bits);
    let z = ZOriented::with_zigzags(complex, zigzags, tau)?;
    if !z.is_homogeneous() {
        return Err(Error::Structure(
            "the orientation forced by the input edges is not z-homogeneous".into(),
        ));
    }
    let got: BTreeSet<DirectedEdge> = z.typing().type_two_edges().into_iter().collect();
    if got != wanted {
        return Err(Error::Structure(
            "type-II edges of the forced orientation differ from the input edges".into(),
        ));
    }
    Ok(z.into_parts())
}

/// Names of the interior vertices of the four paths of `Γ(p1,p2,p3,p4)`
/// and of the four apexes, as `(paths, apexes)`.
fn gamma_names(p: [usize; 4]) -> (Vec<Vec<String>>, [String; 4]) {
    let mut next = 0;
    let mut paths = Vec::new();
    for &len in &p {
        let interior: Vec<String> = (0..len - 1)
            .map(|_| {
                next += 1;
                format!("v{}", next - 1)
            })
            .collect();
        paths.push(interior);
    }
    let tags = ["12", "23", "34", "14"];
    let clash = tags
        .iter()
        .any(|t| paths.iter().flatten().any(|v| v == &format!("v{t}")));
    let prefix = if clash { "x" } else { "v" };
    (paths, tags.map(|t| format!("{prefix}{t}")))
}

/// The four-path sphere `Γ(p1,p2,p3,p4)`: vertices `a`, `b`, interior path
/// vertices `v0, v1, ...` numbered along `P1..P4`, and apexes `v12`, `v23`,
/// `v34`, `v14` (prefixed `x` instead if a path vertex already uses the
/// name). `P1`, `P3` run from `a` to `b`, `P2`, `P4` from `b` to `a`.
pub fn gamma(p1: usize, p2: usize, p3: usize, p4: usize) -> Result<(SurfaceComplex, ZOrientation)> {
    let p = [p1, p2, p3, p4];
    if p.contains(&0) {
        return Err(Error::Domain(format!(
            "path lengths must be at least 1, got {p:?}"
        )));
    }
    if p.iter().filter(|&&x| x == 1).count() > 1 {
        return Err(Error::Domain(format!(
            "at most one path may be a single edge, got {p:?}"
        )));
    }
    let (paths, apexes) = gamma_names(p);
    let a = || "a".to_string();
    let b = || "b".to_string();
    let chain = |start: String, path: &Vec<String>, end: String, rest: &Vec<String>| {
        let mut cyc = vec![start];
        cyc.extend(path.iter().cloned());
        cyc.push(end);
        cyc.extend(rest.iter().cloned());
        cyc
    };
    let cycles = vec![
        chain(a(), &paths[0], b(), &paths[1]),
        chain(b(), &paths[1], a(), &paths[2]),
        chain(a(), &paths[2], b(), &paths[3]),
        chain(b(), &paths[3], a(), &paths[0]),
    ];
    triangulate_eulerian(&cycles, Some(&apexes))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GadgetTau {
    AsIs,
    Reversed,
}

impl GadgetTau {
    pub const BOTH: [GadgetTau; 2] = [GadgetTau::AsIs, GadgetTau::Reversed];

    pub fn as_str(self) -> &'static str {
        match self {
            GadgetTau::AsIs => "as-is",
            GadgetTau::Reversed => "reversed",
        }
    }
}

/// One orientation of a gadget together with its essential pair.
#[derive(Clone, Debug)]
pub struct GadgetSide {
    pub oriented: ZOriented,
    pub pair: SpecialPair,
    pub monodromy: Perm4,
}

/// A spherical z-homogeneous triangulation with a verified essential pair.
///
/// The reversed orientation uses the pair `v3 -> v2 -> v1` with each side
/// on the same geometric side as before, so its monodromy is `t·M⁻¹·t`.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub name: String,
    pub class: ClassId,
    as_is: GadgetSide,
    reversed: GadgetSide,
}

impl Gadget {
    pub fn side(&self, flag: GadgetTau) -> &GadgetSide {
        match flag {
            GadgetTau::AsIs => &self.as_is,
            GadgetTau::Reversed => &self.reversed,
        }
    }

    pub fn complex(&self) -> &SurfaceComplex {
        self.as_is.oriented.complex()
    }

    pub fn tau(&self) -> &ZOrientation {
        self.as_is.oriented.tau()
    }

    pub fn pair(&self) -> &SpecialPair {
        &self.as_is.pair
    }

    pub fn monodromy(&self) -> Perm4 {
        self.as_is.monodromy
    }

    pub fn pair_label(&self) -> String {
        self.as_is.pair.label(self.complex())
    }
}

/// The bipyramid with the first homogeneous orientation (or its reversal)
/// under which `v1 -> v2 -> v3` is a special pair.
pub fn oriented_bipyramid(n: usize) -> Result<ZOriented> {
    let c = bipyramid(n)?;
    let zs = enumerate_zigzags(&c);
    let (v1, v2, v3) = (
        c.require_vertex("v1")?,
        c.require_vertex("v2")?,
        c.require_vertex("v3")?,
    );
    for tau in find_homogeneous_orientations(&c, &zs, DEFAULT_ORIENTATION_LIMIT)? {
        for t in [tau.reversed(), tau] {
            let z = ZOriented::with_zigzags(c.clone(), zs.clone(), t.clone())?;
            let ty = z.typing();
            if ty.is_forward_type_two(&c, DirectedEdge::new(v1, v2))
                && ty.is_forward_type_two(&c, DirectedEdge::new(v2, v3))
            {
                return Ok(z);
            }
        }
    }
    Err(Error::Structure(format!(
        "no homogeneous orientation of the {n}-bipyramid directs v1->v2->v3"
    )))
}

struct GadgetSpec {
    name: &'static str,
    pair: [&'static str; 3],
    /// Apex whose faces form the `+` side of the pair.
    plus_apex: &'static str,
    class: u8,
}

const CATALOG: [GadgetSpec; 11] = [
    GadgetSpec {
        name: "BP6",
        pair: ["v1", "v2", "v3"],
        plus_apex: "a",
        class: 0,
    },
    GadgetSpec {
        name: "BP5",
        pair: ["v1", "v2", "v3"],
        plus_apex: "a",
        class: 1,
    },
    GadgetSpec {
        name: "BP4",
        pair: ["v1", "v2", "v3"],
        plus_apex: "a",
        class: 2,
    },
    GadgetSpec {
        name: "BP7",
        pair: ["v1", "v2", "v3"],
        plus_apex: "a",
        class: 3,
    },
    GadgetSpec {
        name: "G2345",
        pair: ["v0", "b", "v1"],
        plus_apex: "v12",
        class: 4,
    },
    GadgetSpec {
        name: "G2345",
        pair: ["a", "v0", "b"],
        plus_apex: "v12",
        class: 5,
    },
    GadgetSpec {
        name: "G2434",
        pair: ["v0", "b", "v1"],
        plus_apex: "v12",
        class: 6,
    },
    GadgetSpec {
        name: "G2434",
        pair: ["b", "v1", "v2"],
        plus_apex: "v12",
        class: 9,
    },
    GadgetSpec {
        name: "G2434",
        pair: ["v1", "v2", "v3"],
        plus_apex: "v12",
        class: 10,
    },
    GadgetSpec {
        name: "G2345",
        pair: ["b", "v6", "v7"],
        plus_apex: "v14",
        class: 11,
    },
    GadgetSpec {
        name: "G2345",
        pair: ["b", "v1", "v2"],
        plus_apex: "v12",
        class: 12,
    },
];

/// Builds a gadget from a named complex, checking every gadget invariant.
fn build_gadget(z: ZOriented, spec: &GadgetSpec) -> Result<Gadget> {
    let fail = |reason: String| Error::Catalog {
        gadget: format!("{} ({})", spec.name, spec.pair.join(",")),
        reason,
    };
    let c = z.complex();
    if c.euler_characteristic() != 2 {
        return Err(fail(format!(
            "χ = {}, not a sphere",
            c.euler_characteristic()
        )));
    }
    if !z.is_homogeneous() {
        return Err(fail("orientation is not z-homogeneous".into()));
    }
    let [v1, v2, v3] = spec.pair;
    let mut pair = special_pair_by_names(&z, v1, v2, v3).map_err(|e| fail(e.to_string()))?;
    let apex = c
        .require_vertex(spec.plus_apex)
        .map_err(|e| fail(e.to_string()))?;
    if !c
        .boundary(pair.side_face(1, crate::Side::Plus))
        .contains(&apex)
    {
        pair = pair.with_swapped_sides();
    }
    if c.are_adjacent(pair.v1, pair.v3) {
        return Err(fail(format!("endpoints {v1} and {v3} are adjacent")));
    }
    let monodromy = z_monodromy(&z, &pair).map_err(|e| fail(e.to_string()))?;
    let class = classify(monodromy);
    if class.index() != spec.class {
        return Err(fail(format!(
            "monodromy {monodromy} is in {class}, expected K{}",
            spec.class
        )));
    }
    let through = zigzags_through_pair(&z, &pair).map_err(|e| fail(e.to_string()))?;
    if through != z.zigzag_count() {
        return Err(fail(format!(
            "pair is not essential ({through} of {} zigzags)",
            z.zigzag_count()
        )));
    }
    let rz = z.reversed();
    let rpair = pair.reversed();
    let rmono = z_monodromy(&rz, &rpair).map_err(|e| fail(e.to_string()))?;
    let expected = Perm4::T * monodromy.inverse() * Perm4::T;
    if rmono != expected {
        return Err(fail(format!(
            "reversed monodromy {rmono} differs from t·M⁻¹·t = {expected}"
        )));
    }
    Ok(Gadget {
        name: spec.name.to_string(),
        class,
        as_is: GadgetSide {
            oriented: z,
            pair,
            monodromy,
        },
        reversed: GadgetSide {
            oriented: rz,
            pair: rpair,
            monodromy: rmono,
        },
    })
}

fn gadget_complex(name: &str) -> Result<ZOriented> {
    match name {
        "G2345" => {
            let (c, tau) = gamma(2, 3, 4, 5)?;
            ZOriented::new(c, tau)
        }
        "G2434" => {
            let (c, tau) = gamma(2, 4, 3, 4)?;
            ZOriented::new(c, tau)
        }
        bp => {
            let n = bp[2..].parse().expect("catalog name");
            oriented_bipyramid(n)
        }
    }
}

fn build_catalog() -> Result<Vec<Gadget>> {
    let mut cache: BTreeMap<&str, ZOriented> = BTreeMap::new();
    let mut out = Vec::with_capacity(CATALOG.len());
    for spec in &CATALOG {
        if !cache.contains_key(spec.name) {
            let z = gadget_complex(spec.name).map_err(|e| Error::Catalog {
                gadget: spec.name.to_string(),
                reason: e.to_string(),
            })?;
            cache.insert(spec.name, z);
        }
        out.push(build_gadget(cache[spec.name].clone(), spec)?);
    }
    Ok(out)
}

/// The verified gadget catalog, ordered by class. Built once.
pub fn gadget_catalog() -> Result<&'static [Gadget]> {
    static CATALOG_CELL: OnceLock<Result<Vec<Gadget>>> = OnceLock::new();
    match CATALOG_CELL.get_or_init(build_catalog) {
        Ok(v) => Ok(v),
        Err(e) => Err(e.clone()),
    }
}
