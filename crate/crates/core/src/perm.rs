//! Permutations of the four labels `1, 2, 3, 4` and their 13 classes.
//!
//! Composition is read right to left: `(p * q)(x) = p(q(x))`. With this
//! convention `(1234)(13)(24) = (1432)` and `(24)(143) = (1243)`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of `{1, 2, 3, 4}`, stored 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);
    /// Exchanges the `+` and `-` copies of each pair edge.
    pub const S: Perm4 = Perm4([2, 3, 0, 1]);
    /// Exchanges the first and second pair edge on each side.
    pub const T: Perm4 = Perm4([1, 0, 3, 2]);

    /// Builds a permutation from 1-based images, `images[x - 1] = p(x)`.
    pub fn from_images(images: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        let mut out = [0u8; 4];
        for (i, &y) in images.iter().enumerate() {
            if !(1..=4).contains(&y) || seen[(y - 1) as usize] {
                return Err(Error::Domain(format!(
                    "{images:?} is not a permutation of 1..4"
                )));
            }
            seen[(y - 1) as usize] = true;
            out[i] = y - 1;
        }
        Ok(Perm4(out))
    }

    /// Image of label `x` (1-based).
    pub fn apply(self, x: u8) -> u8 {
        self.0[(x - 1) as usize] + 1
    }

    pub fn images(self) -> [u8; 4] {
        self.0.map(|y| y + 1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm4) -> Perm4 {
        Perm4(other.0.map(|y| self.0[y as usize]))
    }

    pub fn inverse(self) -> Perm4 {
        let mut out = [0u8; 4];
        for (x, &y) in self.0.iter().enumerate() {
            out[y as usize] = x as u8;
        }
        Perm4(out)
    }

    /// Conjugation `u · self · u⁻¹`.
    pub fn conjugate_by(self, u: Perm4) -> Perm4 {
        u * self * u.inverse()
    }

    /// Cycle decomposition including fixed points, each cycle starting at its
    /// smallest label, cycles ordered by that label.
    pub fn cycles(self) -> Vec<Vec<u8>> {
        let mut seen = [false; 4];
        let mut out = Vec::new();
        for start in 0..4u8 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x as usize] {
                seen[x as usize] = true;
                cycle.push(x + 1);
                x = self.0[x as usize];
            }
            out.push(cycle);
        }
        out
    }

    /// Number of cycles, fixed points counted as 1-cycles.
    pub fn cycle_count(self) -> usize {
        self.cycles().len()
    }

    pub fn is_four_cycle(self) -> bool {
        self.cycle_count() == 1
    }

    pub fn all() -> Vec<Perm4> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    for d in 0..4u8 {
                        let p = [a, b, c, d];
                        let mut s = p;
                        s.sort_unstable();
                        if s == [0, 1, 2, 3] {
                            out.push(Perm4(p));
                        }
                    }
                }
            }
        }
        out
    }
}

impl Mul for Perm4 {
    type Output = Perm4;

    fn mul(self, rhs: Perm4) -> Perm4 {
        self.compose(rhs)
    }
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<u8>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for c in cycles {
            f.write_str("(")?;
            for x in c {
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for Perm4 {
    type Err = Error;

    /// Parses cycle notation such as `(13)(24)`, `(143)` or `id`. Cycles are
    /// composed right to left.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "id" || s == "()" {
            return Ok(Perm4::IDENTITY);
        }
        let bad = || Error::Parse(format!("bad cycle notation {s:?}"));
        let mut result = Perm4::IDENTITY;
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let labels: Vec<u8> = body[..close]
                .chars()
                .map(|ch| match ch.to_digit(10) {
                    Some(d @ 1..=4) => Ok(d as u8),
                    _ => Err(bad()),
                })
                .collect::<Result<_>>()?;
            let mut uniq = labels.clone();
            uniq.sort_unstable();
            uniq.dedup();
            if uniq.len() != labels.len() {
                return Err(bad());
            }
            let mut cycle = Perm4::IDENTITY;
            for (i, &x) in labels.iter().enumerate() {
                cycle.0[(x - 1) as usize] = labels[(i + 1) % labels.len()] - 1;
            }
            result = result * cycle;
            rest = &body[close + 1..];
        }
        Ok(result)
    }
}

impl Serialize for Perm4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The 13 z-monodromy classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassId(u8);

impl ClassId {
    pub const ALL: [ClassId; 13] = [
        ClassId(0),
        ClassId(1),
        ClassId(2),
        ClassId(3),
        ClassId(4),
        ClassId(5),
        ClassId(6),
        ClassId(7),
        ClassId(8),
        ClassId(9),
        ClassId(10),
        ClassId(11),
        ClassId(12),
    ];

    pub fn new(i: u8) -> Option<ClassId> {
        (i <= 12).then_some(ClassId(i))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// Number of zigzags through a special pair whose monodromy lies in this class.
    pub fn zigzags_through(self) -> usize {
        match self.0 {
            1 | 3 | 7 | 8 => 1,
            0 | 4 | 5 | 11 | 12 => 2,
            6 | 9 | 10 => 3,
            _ => 4,
        }
    }

    pub fn members(self) -> &'static [Perm4] {
        &class_table()[self.0 as usize]
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K{}", self.0)
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.strip_prefix('K')
            .or_else(|| s.strip_prefix("K_"))
            .and_then(|n| n.trim_start_matches('_').parse::<u8>().ok())
            .and_then(ClassId::new)
            .ok_or_else(|| Error::Parse(format!("unknown class {s:?}")))
    }
}

impl Serialize for ClassId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

const CLASS_MEMBERS: [&[&str]; 13] = [
    &["id"],
    &["(1234)"],
    &["(13)(24)"],
    &["(1432)"],
    &["(14)(23)"],
    &["(12)(34)"],
    &["(24)", "(13)"],
    &["(34)", "(12)"],
    &["(23)", "(14)"],
    &["(1324)", "(1423)"],
    &["(1243)", "(1342)"],
    &["(234)", "(123)", "(124)", "(134)"],
    &["(243)", "(132)", "(142)", "(143)"],
];

fn class_table() -> &'static Vec<Vec<Perm4>> {
    static TABLE: OnceLock<Vec<Vec<Perm4>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        CLASS_MEMBERS
            .iter()
            .map(|ms| ms.iter().map(|m| m.parse().expect("class table")).collect())
            .collect()
    })
}

/// The class containing `p`.
pub fn classify(p: Perm4) -> ClassId {
    class_table()
        .iter()
        .position(|members| members.contains(&p))
        .map(|i| ClassId(i as u8))
        .expect("the 13 classes cover S4")
}

/// One row of the S4 table: a permutation and seven derived products.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct S4Row {
    pub p: Perm4,
    pub inverse: Perm4,
    pub s_p: Perm4,
    pub t_pinv: Perm4,
    pub st_pinv: Perm4,
    pub s_p_s: Perm4,
    pub t_pinv_t: Perm4,
    pub st_pinv_st: Perm4,
}

impl S4Row {
    pub fn new(p: Perm4) -> Self {
        let (s, t) = (Perm4::S, Perm4::T);
        let st = s * t;
        let inv = p.inverse();
        S4Row {
            p,
            inverse: inv,
            s_p: s * p,
            t_pinv: t * inv,
            st_pinv: st * inv,
            s_p_s: s * p * s,
            t_pinv_t: t * inv * t,
            st_pinv_st: st * inv * st,
        }
    }

    pub fn columns(&self) -> [Perm4; 8] {
        [
            self.p,
            self.inverse,
            self.s_p,
            self.t_pinv,
            self.st_pinv,
            self.s_p_s,
            self.t_pinv_t,
            self.st_pinv_st,
        ]
    }
}

pub const S4_TABLE_HEADER: [&str; 8] = [
    "M_P",
    "M_P^-1",
    "sM_P",
    "tM_P^-1",
    "stM_P^-1",
    "sM_Ps",
    "tM_P^-1t",
    "stM_P^-1st",
];

const S4_ROW_ORDER: [&str; 24] = [
    "id", "(34)", "(23)", "(234)", "(243)", "(24)", "(12)", "(12)(34)", "(123)", "(1234)",
    "(1243)", "(124)", "(132)", "(1342)", "(13)", "(134)", "(13)(24)", "(1324)", "(1432)", "(142)",
    "(143)", "(14)", "(1423)", "(14)(23)",
];

/// All 24 rows, computed by group arithmetic.
pub fn s4_table() -> Vec<S4Row> {
    S4_ROW_ORDER
        .iter()
        .map(|p| S4Row::new(p.parse().expect("row label")))
        .collect()
}

/// A failed consistency check of the class table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCheckFailure {
    pub p: Perm4,
    pub reason: String,
}

/// Verifies that the classes partition S4, are closed under `p -> sps`,
/// `p -> tp⁻¹t` and `p -> (st)p⁻¹(st)`, and that `cycles(s·p)` agrees with
/// the class's zigzag count.
pub fn check_class_table() -> Vec<ClassCheckFailure> {
    let mut failures = Vec::new();
    let all = Perm4::all();
    let hits = |p: Perm4| class_table().iter().filter(|m| m.contains(&p)).count();
    for &p in &all {
        if hits(p) != 1 {
            failures.push(ClassCheckFailure {
                p,
                reason: format!("lies in {} classes", hits(p)),
            });
            continue;
        }
        let row = S4Row::new(p);
        let k = classify(p);
        for (name, q) in [
            ("sps", row.s_p_s),
            ("tp^-1t", row.t_pinv_t),
            ("stp^-1st", row.st_pinv_st),
        ] {
            if classify(q) != k {
                failures.push(ClassCheckFailure {
                    p,
                    reason: format!("{name} = {q} lies in {} not {k}", classify(q)),
                });
            }
        }
        if row.s_p.cycle_count() != k.zigzags_through() {
            failures.push(ClassCheckFailure {
                p,
                reason: format!(
                    "s·p = {} has {} cycles, class {k} expects {}",
                    row.s_p,
                    row.s_p.cycle_count(),
                    k.zigzags_through()
                ),
            });
        }
    }
    let total: usize = class_table().iter().map(Vec::len).sum();
    if total != 24 {
        failures.push(ClassCheckFailure {
            p: Perm4::IDENTITY,
            reason: format!("classes list {total} permutations, expected 24"),
        });
    }
    failures
}
