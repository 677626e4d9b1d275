use std::fmt;
use std::io::Read;
use std::path::Path;

use zknot_core::{
    analyze_pair, bipyramid, check_class_table, classify, connected_sum, enumerate_zigzags,
    find_homogeneous_orientations, find_special_pairs, gadget_catalog, gamma, oriented_bipyramid,
    parse_complex, s4_table, serialize_complex, special_pair_by_names, to_dot, Error, GadgetTau,
    SpecialHomeomorphism, Summary, ZOrientation, ZOriented, DEFAULT_ORIENTATION_LIMIT,
    S4_TABLE_HEADER,
};

use crate::report::{self, Report};
use crate::{GenKind, Input, Output};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Input(String),
    Check(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_input_error() => 2,
            CliError::Core(_) | CliError::Check(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(s) => f.write_str(s),
            CliError::Check(n) => write!(f, "class table check found {n} failure(s)"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_source(file: &str) -> Result<String> {
    let mut text = String::new();
    if file == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(file)
            .map_err(|e| CliError::Input(format!("reading {file}: {e}")))?;
    }
    Ok(text)
}

fn parse_bits(bits: &str) -> Result<ZOrientation> {
    let flags = bits
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(CliError::Input(format!(
                "--tau expects a string of 0 and 1, got {bits:?}"
            ))),
        })
        .collect::<Result<Vec<u8>>>()?;
    Ok(ZOrientation::from_flags(&flags)?)
}

fn bits(tau: &ZOrientation) -> String {
    tau.flags().iter().map(|f| f.to_string()).collect()
}

/// Resolves tau from `--tau`, then the file, then the first z-homogeneous
/// orientation, then all flags 0.
fn load(input: &Input) -> Result<ZOriented> {
    let (c, file_tau) = parse_complex(&read_source(&input.file)?)?;
    let tau = match &input.tau {
        Some(b) => Some(parse_bits(b)?),
        None => file_tau,
    };
    let zs = enumerate_zigzags(&c);
    let tau = match tau {
        Some(t) => t,
        None => find_homogeneous_orientations(&c, &zs, DEFAULT_ORIENTATION_LIMIT)
            .ok()
            .and_then(|v| v.into_iter().next())
            .unwrap_or_else(|| ZOrientation::all_forward(zs.len())),
    };
    Ok(ZOriented::with_zigzags(c, zs, tau)?)
}

fn render(r: &impl Report, out: &Output) -> String {
    if out.json {
        r.json()
    } else {
        r.text()
    }
}

/// Writes the complex (or its DOT rendering) to `path`, or returns it for
/// stdout when no path is given; in the first case `report` goes to stdout.
fn emit(z: &ZOriented, path: Option<&Path>, out: &Output, report: &impl Report) -> Result<String> {
    let body = if out.dot {
        to_dot(z)
    } else {
        serialize_complex(z.complex(), Some(z.tau()))
    };
    match path {
        Some(p) => {
            std::fs::write(p, body)
                .map_err(|e| CliError::Input(format!("writing {}: {e}", p.display())))?;
            Ok(render(
                report,
                &Output {
                    dot: false,
                    ..out.clone()
                },
            ))
        }
        None => Ok(body),
    }
}

pub fn info(input: &Input, out: &Output) -> Result<String> {
    let z = load(input)?;
    if out.dot {
        return Ok(to_dot(&z));
    }
    let c = z.complex();
    let orientations = find_homogeneous_orientations(c, z.zigzags(), DEFAULT_ORIENTATION_LIMIT)
        .ok()
        .map(|v| v.iter().map(bits).collect());
    let r = report::Info {
        vertices: c.num_vertices(),
        edges: c.num_edges(),
        faces: c.num_faces(),
        euler_characteristic: c.euler_characteristic(),
        orientable: c.is_orientable(),
        triangulation: c.is_triangulation(),
        zigzags: z.zigzag_count(),
        tau: bits(z.tau()),
        homogeneous: z.is_homogeneous(),
        type_one_edges: z.typing().type_one_count(),
        type_two_edges: z.typing().type_two_count(),
        homogeneous_orientations: orientations,
    };
    Ok(render(&r, out))
}

pub fn zigzags(input: &Input, out: &Output) -> Result<String> {
    let z = load(input)?;
    if out.dot {
        return Ok(to_dot(&z));
    }
    let c = z.complex();
    let flags = z.tau().flags();
    let zigzags = z
        .representatives()
        .enumerate()
        .map(|(i, r)| report::ZigzagEntry {
            index: i,
            flag: flags[i],
            length: r.len(),
            vertices: r
                .vertex_cycle()
                .iter()
                .map(|&v| c.name(v).to_string())
                .collect(),
        })
        .collect();
    let type_two_edges = z
        .typing()
        .type_two_edges()
        .iter()
        .map(|d| [c.name(d.tail).to_string(), c.name(d.head).to_string()])
        .collect();
    let r = report::Zigzags {
        tau: bits(z.tau()),
        zigzags,
        type_two_edges,
    };
    Ok(render(&r, out))
}

pub fn pairs(input: &Input, out: &Output) -> Result<String> {
    let z = load(input)?;
    if out.dot {
        return Ok(to_dot(&z));
    }
    let pairs = find_special_pairs(&z)?
        .iter()
        .map(|p| {
            let a = analyze_pair(&z, p)?;
            Ok(report::PairEntry {
                pair: p.label(z.complex()),
                monodromy: a.monodromy,
                class: a.class,
                through: a.through,
                essential: a.essential,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let r = report::Pairs {
        zigzags: z.zigzag_count(),
        pairs,
    };
    Ok(render(&r, out))
}

pub fn gen(kind: &GenKind, path: Option<&Path>, out: &Output) -> Result<String> {
    let (name, z) = match *kind {
        GenKind::Bipyramid { n } => {
            bipyramid(n)?;
            (format!("BP{n}"), oriented_bipyramid(n)?)
        }
        GenKind::Gamma { p1, p2, p3, p4 } => {
            let (c, tau) = gamma(p1, p2, p3, p4)?;
            (format!("G{p1}{p2}{p3}{p4}"), ZOriented::new(c, tau)?)
        }
    };
    let r = report::Generated {
        name,
        summary: Summary::of(&z),
    };
    emit(&z, path, out, &r)
}

fn parse_pair(z: &ZOriented, s: &str) -> Result<zknot_core::SpecialPair> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts[..] else {
        return Err(CliError::Input(format!(
            "pair must be written v1,v2,v3, got {s:?}"
        )));
    };
    Ok(special_pair_by_names(z, a, b, c)?)
}

pub fn sum(
    a: &Input,
    pair_a: &str,
    b: &Input,
    pair_b: &str,
    swap: bool,
    path: Option<&Path>,
    out: &Output,
) -> Result<String> {
    let za = load(a)?;
    let zb = load(b)?;
    za.require_homogeneous()?;
    zb.require_homogeneous()?;
    let pa = parse_pair(&za, pair_a)?;
    let pb = parse_pair(&zb, pair_b)?;
    let g = if swap {
        SpecialHomeomorphism::Swap
    } else {
        SpecialHomeomorphism::Direct
    };
    let s = connected_sum(&za, &pa, &zb, &pb, g, 1)?;
    let r = report::Sum {
        homeomorphism: g,
        predicted: s.predicted,
        through_glued: s.through_glued,
        summary: Summary::of(&s.oriented),
    };
    emit(&s.oriented, path, out, &r)
}

pub fn knot(
    input: &Input,
    trace: Option<&Path>,
    path: Option<&Path>,
    out: &Output,
) -> Result<String> {
    let z = load(input)?;
    let (k, t) = zknot_core::knot(z)?;
    let r = report::Trace(t);
    if let Some(p) = trace {
        std::fs::write(p, r.json())
            .map_err(|e| CliError::Input(format!("writing {}: {e}", p.display())))?;
    }
    emit(&k, path, out, &r)
}

pub fn s4table(check: bool, json: bool) -> Result<String> {
    let rows = s4_table()
        .into_iter()
        .map(|row| {
            let class = classify(row.p);
            report::S4Entry {
                row,
                class,
                zigzags_through: class.zigzags_through(),
            }
        })
        .collect();
    let failures = check.then(|| {
        check_class_table()
            .iter()
            .map(|f| format!("{}: {}", f.p, f.reason))
            .collect::<Vec<_>>()
    });
    let n = failures.as_ref().map_or(0, Vec::len);
    let r = report::S4Table {
        header: S4_TABLE_HEADER.to_vec(),
        rows,
        check: failures,
    };
    let text = render(&r, &Output { json, dot: false });
    if n > 0 {
        print!("{text}");
        return Err(CliError::Check(n));
    }
    Ok(text)
}

pub fn catalog(json: bool) -> Result<String> {
    let entries = gadget_catalog()?
        .iter()
        .map(|g| {
            let a = g.side(GadgetTau::AsIs);
            let r = g.side(GadgetTau::Reversed);
            report::CatalogEntry {
                name: g.name.clone(),
                class: g.class,
                pair: a.pair.label(a.oriented.complex()),
                monodromy: a.monodromy,
                reversed_pair: r.pair.label(r.oriented.complex()),
                reversed_monodromy: r.monodromy,
                vertices: a.oriented.complex().num_vertices(),
                zigzags: a.oriented.zigzag_count(),
            }
        })
        .collect();
    Ok(render(
        &report::Catalog(entries),
        &Output { json, dot: false },
    ))
}
