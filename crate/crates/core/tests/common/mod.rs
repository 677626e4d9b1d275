#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::Rng;
use zknot_core::{
    check_star, connected_sum, find_special_pairs, gadget_catalog, gamma, oriented_bipyramid,
    triangulate_eulerian, GadgetTau, SpecialHomeomorphism, SurfaceComplex, ZOriented,
};

pub fn bp(n: usize) -> ZOriented {
    oriented_bipyramid(n).unwrap()
}

pub fn gamma_z(p: [usize; 4]) -> ZOriented {
    let (c, tau) = gamma(p[0], p[1], p[2], p[3]).unwrap();
    ZOriented::new(c, tau).unwrap()
}

/// `T` of the triangular lattice on the `n x n` torus, every lattice
/// triangle read as a directed cycle.
pub fn torus(n: usize) -> ZOriented {
    let v = |i: usize, j: usize| format!("t{}_{}", i % n, j % n);
    let mut cycles = Vec::new();
    for i in 0..n {
        for j in 0..n {
            cycles.push(vec![v(i, j), v(i + 1, j), v(i, j + 1)]);
            cycles.push(vec![v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    let (c, tau) = triangulate_eulerian(&cycles, None).unwrap();
    ZOriented::new(c, tau).unwrap()
}

pub fn faces(list: &[&str]) -> SurfaceComplex {
    let f: Vec<Vec<String>> = list
        .iter()
        .map(|s| s.chars().map(|c| c.to_string()).collect())
        .collect();
    SurfaceComplex::from_faces(&f).unwrap()
}

pub fn hemi_icosahedron() -> SurfaceComplex {
    faces(&[
        "123", "134", "145", "156", "162", "235", "346", "452", "563", "624",
    ])
}

pub fn tetrahedron() -> SurfaceComplex {
    faces(&["abc", "abd", "acd", "bcd"])
}

pub fn cube() -> SurfaceComplex {
    faces(&["abcd", "efgh", "abfe", "bcgf", "cdhg", "daeh"])
}

/// Homogeneous fixtures used throughout the property checks.
pub fn homogeneous_fixtures() -> Vec<(String, ZOriented)> {
    let mut out: Vec<(String, ZOriented)> = (3..=10).map(|n| (format!("BP{n}"), bp(n))).collect();
    out.push(("G2345".into(), gamma_z([2, 3, 4, 5])));
    out.push(("G2434".into(), gamma_z([2, 4, 3, 4])));
    out.push(("G2333".into(), gamma_z([2, 3, 3, 3])));
    out.push(("torus3".into(), torus(3)));
    out.push(("torus4".into(), torus(4)));
    out
}

/// Glues a random catalog gadget onto a random special pair of `z`.
pub fn random_gluing(rng: &mut StdRng, z: &ZOriented, seq: usize) -> Option<ZOriented> {
    let cat = gadget_catalog().unwrap();
    let pairs = find_special_pairs(z).unwrap();
    let pa = &pairs[rng.gen_range(0..pairs.len())];
    let g = &cat[rng.gen_range(0..cat.len())];
    let flag = GadgetTau::BOTH[rng.gen_range(0..2)];
    let hom = SpecialHomeomorphism::BOTH[rng.gen_range(0..2)];
    let side = g.side(flag);
    if !check_star(z.complex(), pa, side.oriented.complex(), &side.pair) {
        return None;
    }
    Some(
        connected_sum(z, pa, &side.oriented, &side.pair, hom, seq)
            .unwrap()
            .oriented,
    )
}

/// A random iterated sum of gadgets with `gluings` gluings.
pub fn random_sum(rng: &mut StdRng, gluings: usize) -> ZOriented {
    let cat = gadget_catalog().unwrap();
    let g = &cat[rng.gen_range(0..cat.len())];
    let mut z = g
        .side(GadgetTau::BOTH[rng.gen_range(0..2)])
        .oriented
        .clone();
    let mut seq = 0;
    while seq < gluings {
        if let Some(next) = random_gluing(rng, &z, seq + 1) {
            z = next;
            seq += 1;
        }
    }
    z
}

type Edge = (String, String);

fn edge(u: &str, v: &str) -> Edge {
    if u < v {
        (u.into(), v.into())
    } else {
        (v.into(), u.into())
    }
}

fn face_edges(face: &[String]) -> Vec<Edge> {
    (0..face.len())
        .map(|i| edge(&face[i], &face[(i + 1) % face.len()]))
        .collect()
}

fn common_vertex(a: &Edge, b: &Edge) -> bool {
    a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
}

fn least_rotation(seq: &[Edge]) -> Vec<Edge> {
    (0..seq.len())
        .map(|r| {
            seq[r..]
                .iter()
                .chain(&seq[..r])
                .cloned()
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap()
}

/// Zigzags by the definition: consecutive edges share a vertex and a face,
/// consecutive faces differ, and `e_i`, `e_{i+2}` have no common vertex.
/// Every zigzag is returned in both directions, as least rotations of its
/// undirected edge sequence.
pub fn naive_zigzags(c: &SurfaceComplex) -> BTreeSet<Vec<Edge>> {
    let fs: Vec<Vec<String>> = c.face_lists();
    let fe: Vec<Vec<Edge>> = fs.iter().map(|f| face_edges(f)).collect();
    let face_of = |a: &Edge, b: &Edge| -> Vec<usize> {
        (0..fe.len())
            .filter(|&i| fe[i].contains(a) && fe[i].contains(b))
            .collect()
    };
    let mut out = BTreeSet::new();
    for (fi, edges) in fe.iter().enumerate() {
        for a in edges {
            for b in edges {
                if a == b || !common_vertex(a, b) {
                    continue;
                }
                assert_eq!(face_of(a, b), vec![fi]);
                let mut seq = vec![a.clone(), b.clone()];
                let mut cur_face = fi;
                loop {
                    let n = seq.len();
                    let (p, q) = (&seq[n - 2], &seq[n - 1]);
                    let mut cands = Vec::new();
                    for (gi, ge) in fe.iter().enumerate() {
                        if gi == cur_face || !ge.contains(q) {
                            continue;
                        }
                        for r in ge {
                            if r != q && common_vertex(q, r) && !common_vertex(p, r) {
                                cands.push((gi, r.clone()));
                            }
                        }
                    }
                    assert_eq!(cands.len(), 1, "zigzag continuation is not unique");
                    let (gi, r) = cands.pop().unwrap();
                    cur_face = gi;
                    seq.push(r);
                    let n = seq.len();
                    if n > 3 && seq[n - 2] == seq[0] && seq[n - 1] == seq[1] {
                        seq.truncate(n - 2);
                        break;
                    }
                    assert!(n <= 4 * fe.len() * 4, "walk does not close");
                }
                out.insert(least_rotation(&seq));
            }
        }
    }
    out
}

/// The library's zigzags in the same form as [`naive_zigzags`].
pub fn engine_zigzags(c: &SurfaceComplex) -> BTreeSet<Vec<Edge>> {
    let zs = zknot_core::enumerate_zigzags(c);
    let mut out = BTreeSet::new();
    for p in zs.pairs() {
        for z in [&p.forward, &p.backward] {
            let seq: Vec<Edge> = z
                .edges()
                .iter()
                .map(|d| edge(c.name(d.tail), c.name(d.head)))
                .collect();
            out.insert(least_rotation(&seq));
        }
    }
    out
}
