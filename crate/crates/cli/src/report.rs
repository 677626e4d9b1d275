use std::fmt::Write as _;

use serde::Serialize;
use zknot_core::{ClassId, KnottingTrace, Perm4, S4Row, SpecialHomeomorphism, Summary};

/// A command result that renders either as text or as key-sorted JSON.
pub trait Report: Serialize {
    fn text(&self) -> String;

    fn json(&self) -> String {
        // `Value` objects are BTreeMaps, so keys come out sorted.
        let v = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
pub struct Info {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub triangulation: bool,
    pub zigzags: usize,
    pub tau: String,
    pub homogeneous: bool,
    pub type_one_edges: usize,
    pub type_two_edges: usize,
    /// `None` when there are too many zigzags to scan.
    pub homogeneous_orientations: Option<Vec<String>>,
}

impl Report for Info {
    fn text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "vertices: {}", self.vertices).unwrap();
        writeln!(s, "edges: {}", self.edges).unwrap();
        writeln!(s, "faces: {}", self.faces).unwrap();
        writeln!(s, "euler characteristic: {}", self.euler_characteristic).unwrap();
        writeln!(s, "orientable: {}", yes(self.orientable)).unwrap();
        writeln!(s, "triangulation: {}", yes(self.triangulation)).unwrap();
        writeln!(s, "zigzags: {}", self.zigzags).unwrap();
        writeln!(s, "tau: {}", self.tau).unwrap();
        writeln!(s, "z-homogeneous: {}", yes(self.homogeneous)).unwrap();
        writeln!(
            s,
            "edge types: {} I, {} II",
            self.type_one_edges, self.type_two_edges
        )
        .unwrap();
        match &self.homogeneous_orientations {
            Some(list) if list.is_empty() => writeln!(s, "homogeneous orientations: 0").unwrap(),
            Some(list) => writeln!(
                s,
                "homogeneous orientations: {} ({})",
                list.len(),
                list.join(", ")
            )
            .unwrap(),
            None => writeln!(s, "homogeneous orientations: not scanned").unwrap(),
        }
        s
    }
}

#[derive(Serialize)]
pub struct ZigzagEntry {
    pub index: usize,
    pub flag: u8,
    pub length: usize,
    pub vertices: Vec<String>,
}

#[derive(Serialize)]
pub struct Zigzags {
    pub tau: String,
    pub zigzags: Vec<ZigzagEntry>,
    pub type_two_edges: Vec<[String; 2]>,
}

impl Report for Zigzags {
    fn text(&self) -> String {
        let mut s = String::new();
        for z in &self.zigzags {
            writeln!(
                s,
                "z{} [{}] length {}: {}",
                z.index,
                z.flag,
                z.length,
                z.vertices.join(" ")
            )
            .unwrap();
        }
        let twos: Vec<String> = self
            .type_two_edges
            .iter()
            .map(|[u, v]| format!("{u}->{v}"))
            .collect();
        writeln!(s, "type II: {}", twos.join(" ")).unwrap();
        s
    }
}

#[derive(Serialize)]
pub struct PairEntry {
    pub pair: String,
    pub monodromy: Perm4,
    pub class: ClassId,
    pub through: usize,
    pub essential: bool,
}

#[derive(Serialize)]
pub struct Pairs {
    pub zigzags: usize,
    pub pairs: Vec<PairEntry>,
}

impl Report for Pairs {
    fn text(&self) -> String {
        let mut s = String::new();
        for p in &self.pairs {
            writeln!(
                s,
                "{:<16} {:<10} {:<4} through {}{}",
                p.pair,
                p.monodromy.to_string(),
                p.class.to_string(),
                p.through,
                if p.essential { " essential" } else { "" }
            )
            .unwrap();
        }
        s
    }
}

#[derive(Serialize)]
pub struct Generated {
    pub name: String,
    pub summary: Summary,
}

impl Report for Generated {
    fn text(&self) -> String {
        format!("{}: {}\n", self.name, summary_line(&self.summary))
    }
}

#[derive(Serialize)]
pub struct Sum {
    pub homeomorphism: SpecialHomeomorphism,
    pub predicted: usize,
    pub through_glued: usize,
    pub summary: Summary,
}

impl Report for Sum {
    fn text(&self) -> String {
        format!(
            "glued with {}: {} zigzag(s) through the glued edges (predicted {})\n{}\n",
            self.homeomorphism,
            self.through_glued,
            self.predicted,
            summary_line(&self.summary)
        )
    }
}

pub fn summary_line(s: &Summary) -> String {
    format!(
        "V={} E={} F={} chi={} orientable={} zigzags={} homogeneous={}",
        s.vertices,
        s.edges,
        s.faces,
        s.euler_characteristic,
        yes(s.orientable),
        s.zigzags,
        yes(s.homogeneous)
    )
}

#[derive(Serialize)]
#[serde(transparent)]
pub struct Trace(pub KnottingTrace);

impl Report for Trace {
    fn text(&self) -> String {
        let t = &self.0;
        let mut s = format!("initial: {}\n", summary_line(&t.initial));
        for st in &t.steps {
            writeln!(
                s,
                "step {}: pair {} {} {} <- {} {} {} ({}, {}) zigzags {} -> {}",
                st.step,
                st.pair,
                st.monodromy,
                st.class,
                st.gadget,
                st.gadget_pair,
                st.gadget_monodromy,
                st.homeomorphism,
                st.gadget_tau.as_str(),
                st.zigzags_before,
                st.zigzags_after
            )
            .unwrap();
        }
        writeln!(s, "final: {}", summary_line(&t.final_summary)).unwrap();
        s
    }
}

#[derive(Serialize)]
pub struct S4Entry {
    pub row: S4Row,
    pub class: ClassId,
    pub zigzags_through: usize,
}

#[derive(Serialize)]
pub struct S4Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<S4Entry>,
    pub check: Option<Vec<String>>,
}

impl Report for S4Table {
    fn text(&self) -> String {
        let mut s = String::new();
        let mut line: Vec<String> = self.header.iter().map(|h| format!("{h:<10}")).collect();
        line.push("class".into());
        writeln!(s, "{}", line.join(" ").trim_end()).unwrap();
        for e in &self.rows {
            let mut line: Vec<String> = e
                .row
                .columns()
                .iter()
                .map(|p| format!("{:<10}", p.to_string()))
                .collect();
            line.push(e.class.to_string());
            writeln!(s, "{}", line.join(" ")).unwrap();
        }
        match &self.check {
            Some(f) if f.is_empty() => writeln!(s, "check: ok").unwrap(),
            Some(f) => {
                for r in f {
                    writeln!(s, "check failed: {r}").unwrap();
                }
            }
            None => {}
        }
        s
    }
}

#[derive(Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub class: ClassId,
    pub pair: String,
    pub monodromy: Perm4,
    pub reversed_pair: String,
    pub reversed_monodromy: Perm4,
    pub vertices: usize,
    pub zigzags: usize,
}

#[derive(Serialize)]
#[serde(transparent)]
pub struct Catalog(pub Vec<CatalogEntry>);

impl Report for Catalog {
    fn text(&self) -> String {
        let mut s = String::new();
        for g in &self.0 {
            writeln!(
                s,
                "{:<4} {:<6} {:<10} {:<10} reversed {:<10} {:<10} V={} zigzags={}",
                g.class.to_string(),
                g.name,
                g.pair,
                g.monodromy.to_string(),
                g.reversed_pair,
                g.reversed_monodromy.to_string(),
                g.vertices,
                g.zigzags
            )
            .unwrap();
        }
        s
    }
}
