//! The JSON complex file format and DOT export.
//!
//! ```json
//! {"faces": [["a", "v1", "v2"], ...], "tau": [0, 1]}
//! ```
//!
//! `tau` is optional. Written files list each face in its least rotation or
//! reflection and sort the faces, so equal complexes serialize identically.

use serde::Deserialize;
use serde_json::Value;

use crate::complex::SurfaceComplex;
use crate::error::{Error, Result};
use crate::zigzag::{EdgeKind, ZOrientation, ZOriented};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    faces: Vec<Vec<String>>,
    #[serde(default)]
    tau: Option<Vec<u8>>,
}

/// Parses a complex file, returning the complex and its `tau` if present.
pub fn parse_complex(text: &str) -> Result<(SurfaceComplex, Option<ZOrientation>)> {
    let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let tau = match file.tau {
        Some(flags) => {
            Some(ZOrientation::from_flags(&flags).map_err(|e| Error::Parse(e.to_string()))?)
        }
        None => None,
    };
    Ok((SurfaceComplex::from_faces(&file.faces)?, tau))
}

/// Writes `c` in canonical form, one face per line.
pub fn serialize_complex(c: &SurfaceComplex, tau: Option<&ZOrientation>) -> String {
    let faces: Vec<String> = c
        .face_lists()
        .iter()
        .map(|f| format!("    {}", Value::from(f.clone())))
        .collect();
    let mut out = format!("{{\n  \"faces\": [\n{}\n  ]", faces.join(",\n"));
    if let Some(t) = tau {
        out.push_str(&format!(",\n  \"tau\": {}", Value::from(t.flags())));
    }
    out.push_str("\n}\n");
    out
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering: type-II edges drawn bold and directed, type-I edges
/// dashed and undirected.
pub fn to_dot(z: &ZOriented) -> String {
    let c = z.complex();
    let mut out = String::from("digraph complex {\n  node [shape=circle];\n");
    for v in c.vertices() {
        out.push_str(&format!("  {};\n", dot_id(c.name(v))));
    }
    for e in c.edges() {
        let line = match z.typing().kind(e) {
            EdgeKind::II(d) => format!(
                "  {} -> {} [style=bold];\n",
                dot_id(c.name(d.tail)),
                dot_id(c.name(d.head))
            ),
            EdgeKind::I => {
                let (u, v) = c.endpoints(e);
                format!(
                    "  {} -> {} [style=dashed, dir=none];\n",
                    dot_id(c.name(u)),
                    dot_id(c.name(v))
                )
            }
        };
        out.push_str(&line);
    }
    out.push_str("}\n");
    out
}
