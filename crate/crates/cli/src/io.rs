//! File formats: edge lists in, diagrams and dumps out.
//!
//! Diagram CSV carries `# kind=` metadata so a file can be read back into a
//! typed diagram without guessing. Values default to exact `p/q` text; the
//! float option trades exactness for plain decimals.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use cliph_core::complex::{Direction, FiltrationKind};
use cliph_core::graph::LoadedGraph;
use cliph_core::persistence::{DiagramPoint, PersistenceDiagram};
use cliph_core::ratio::{parse_rational, to_f64, Rational};
use cliph_core::{FilteredComplex, UnweightedGraph, WeightedGraph};
use serde_json::{json, Value};

use crate::CliError;

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)
                .map_err(|source| CliError::Io { path: dir.into(), source })?;
        }
    }
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.into(), source })
}

pub fn read_graph(path: &Path) -> Result<LoadedGraph, CliError> {
    let text = read_file(path)?;
    cliph_core::parse_edge_list(&text)
        .map_err(|source| CliError::Core { path: Some(path.into()), source })
}

pub fn kind_from_str(s: &str) -> Option<FiltrationKind> {
    match s {
        "cliqueness" => Some(FiltrationKind::Cliqueness),
        "clique" => Some(FiltrationKind::Clique),
        "power" => Some(FiltrationKind::Power),
        _ => None,
    }
}

fn direction_name(d: Direction) -> &'static str {
    match d {
        Direction::Descending => "descending",
        Direction::Ascending => "ascending",
    }
}

pub fn format_rational(r: Rational, float: bool) -> String {
    if float {
        format!("{}", to_f64(r))
    } else {
        format!("{r}")
    }
}

fn death_token(death: Option<Rational>, float: bool) -> String {
    match death {
        None => "inf".to_string(),
        Some(d) => format_rational(d, float),
    }
}

pub fn diagram_to_csv(d: &PersistenceDiagram, float: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# kind={}", d.kind.name());
    let _ = writeln!(out, "# direction={}", direction_name(d.kind.direction()));
    out.push_str("dim,birth,death\n");
    for pt in &d.points {
        let _ = writeln!(
            out,
            "{},{},{}",
            d.dimension,
            format_rational(pt.birth, float),
            death_token(pt.death, float)
        );
    }
    out
}

pub fn write_diagram_csv(
    path: &Path,
    d: &PersistenceDiagram,
    float: bool,
) -> Result<(), CliError> {
    write_file(path, &diagram_to_csv(d, float))
}

fn rational_json(r: Rational, float: bool) -> Value {
    if float {
        serde_json::Number::from_f64(to_f64(r)).map_or_else(|| json!(null), Value::Number)
    } else {
        json!(format!("{r}"))
    }
}

pub fn diagram_to_json(d: &PersistenceDiagram, float: bool) -> Value {
    json!({
        "kind": d.kind.name(),
        "direction": direction_name(d.kind.direction()),
        "dimension": d.dimension,
        "points": d.points.iter().map(|pt| json!({
            "birth": rational_json(pt.birth, float),
            "death": pt.death.map_or_else(|| json!(null), |v| rational_json(v, float)),
        })).collect::<Vec<_>>(),
    })
}

pub fn write_diagram_json(
    path: &Path,
    d: &PersistenceDiagram,
    float: bool,
) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(&diagram_to_json(d, float))
        .expect("diagram values serialize");
    text.push('\n');
    write_file(path, &text)
}

/// Reads one diagram file, CSV or JSON by extension, possibly holding points
/// of several dimensions. Returns one diagram per dimension, ascending.
pub fn read_diagrams(path: &Path) -> Result<Vec<PersistenceDiagram>, CliError> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => read_diagrams_json(path),
        _ => read_diagrams_csv(path),
    }
}

fn bad(path: &Path, line: usize, reason: impl Into<String>) -> CliError {
    CliError::Format { path: path.into(), line, reason: reason.into() }
}

fn parse_value(path: &Path, line: usize, tok: &str) -> Result<Rational, CliError> {
    parse_rational(tok).ok_or_else(|| bad(path, line, format!("unreadable value {tok:?}")))
}

fn read_diagrams_csv(path: &Path) -> Result<Vec<PersistenceDiagram>, CliError> {
    let text = read_file(path)?;
    let mut kind: Option<FiltrationKind> = None;
    let mut by_dim: Vec<(u32, Vec<DiagramPoint>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(name) = rest.trim().strip_prefix("kind=") {
                kind = Some(
                    kind_from_str(name.trim())
                        .ok_or_else(|| bad(path, lineno, format!("unknown kind {name:?}")))?,
                );
            }
            continue;
        }
        if line == "dim,birth,death" {
            continue;
        }
        let mut fields = line.split(',');
        let (Some(d), Some(b), Some(t), None) =
            (fields.next(), fields.next(), fields.next(), fields.next())
        else {
            return Err(bad(path, lineno, "expected dim,birth,death"));
        };
        let dim: u32 = d
            .trim()
            .parse()
            .map_err(|_| bad(path, lineno, format!("unreadable dimension {d:?}")))?;
        let birth = parse_value(path, lineno, b.trim())?;
        let death = match t.trim() {
            "inf" => None,
            other => Some(parse_value(path, lineno, other)?),
        };
        let slot = match by_dim.iter().position(|(k, _)| *k == dim) {
            Some(i) => i,
            None => {
                by_dim.push((dim, Vec::new()));
                by_dim.len() - 1
            }
        };
        by_dim[slot].1.push(DiagramPoint { birth, death });
    }
    let kind = kind.ok_or_else(|| bad(path, 1, "missing '# kind=' header"))?;
    by_dim.sort_by_key(|(dim, _)| *dim);
    Ok(by_dim
        .into_iter()
        .map(|(dimension, points)| PersistenceDiagram { dimension, points, kind })
        .collect())
}

fn json_rational(path: &Path, v: &Value) -> Result<Rational, CliError> {
    match v {
        Value::String(s) => parse_value(path, 0, s),
        Value::Number(n) => {
            let f = n.as_f64().ok_or_else(|| bad(path, 0, "non-finite number"))?;
            parse_value(path, 0, &format!("{f}"))
        }
        other => Err(bad(path, 0, format!("expected a value, got {other}"))),
    }
}

fn read_diagrams_json(path: &Path) -> Result<Vec<PersistenceDiagram>, CliError> {
    let text = read_file(path)?;
    let root: Value = serde_json::from_str(&text)
        .map_err(|e| bad(path, e.line(), e.to_string()))?;
    let objects: Vec<&Value> = match &root {
        Value::Array(items) => items.iter().collect(),
        single => vec![single],
    };
    let mut out = Vec::new();
    for obj in objects {
        let kind_name = obj
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| bad(path, 0, "missing \"kind\""))?;
        let kind = kind_from_str(kind_name)
            .ok_or_else(|| bad(path, 0, format!("unknown kind {kind_name:?}")))?;
        let dimension = obj
            .get("dimension")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad(path, 0, "missing \"dimension\""))? as u32;
        let raw_points = obj
            .get("points")
            .and_then(Value::as_array)
            .ok_or_else(|| bad(path, 0, "missing \"points\""))?;
        let mut points = Vec::with_capacity(raw_points.len());
        for pt in raw_points {
            let birth = json_rational(
                path,
                pt.get("birth").ok_or_else(|| bad(path, 0, "point without birth"))?,
            )?;
            let death = match pt.get("death") {
                None | Some(Value::Null) => None,
                Some(v) => Some(json_rational(path, v)?),
            };
            points.push(DiagramPoint { birth, death });
        }
        out.push(PersistenceDiagram { dimension, points, kind });
    }
    out.sort_by_key(|d| d.dimension);
    Ok(out)
}

pub fn write_weights_csv(path: &Path, w: &WeightedGraph) -> Result<(), CliError> {
    let mut out = String::from("u,v,numerator,denominator,weight\n");
    for &(u, v, c) in w.pairs() {
        let _ = writeln!(out, "{u},{v},{},{},{}", c.numer(), c.denom(), to_f64(c));
    }
    write_file(path, &out)
}

pub fn write_filtration_dump(path: &Path, fc: &FilteredComplex) -> Result<(), CliError> {
    let mut out = String::new();
    for (value, simplex) in fc.entries() {
        let verts: Vec<String> =
            simplex.vertices().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{value}\t{}\t{}", simplex.dim(), verts.join(","));
    }
    write_file(path, &out)
}

pub fn write_coords_csv(path: &Path, coords: &[(f64, f64)]) -> Result<(), CliError> {
    let mut out = String::from("vertex,x,y\n");
    for (v, (x, y)) in coords.iter().enumerate() {
        let _ = writeln!(out, "{v},{x},{y}");
    }
    write_file(path, &out)
}

pub fn edge_list_text(g: &UnweightedGraph, comment: &str) -> String {
    let mut out = String::new();
    if !comment.is_empty() {
        let _ = writeln!(out, "# {comment}");
    }
    let mut isolated = 0usize;
    for v in 0..g.n() as u32 {
        if g.degree(v) == 0 {
            isolated += 1;
        }
    }
    if isolated > 0 {
        // The format carries vertices only through edges.
        let _ = writeln!(out, "# {isolated} isolated vertices omitted");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label_of(u), g.label_of(v));
    }
    out
}

pub fn write_edge_list(
    path: &Path,
    g: &UnweightedGraph,
    comment: &str,
) -> Result<(), CliError> {
    write_file(path, &edge_list_text(g, comment))
}

/// `{stem}_h{dim}.{ext}` next to nothing in particular: the caller supplies
/// the prefix, this appends the per-dimension suffix.
pub fn diagram_path(prefix: &Path, dim: u32, ext: &str) -> PathBuf {
    let mut name = prefix.file_name().map_or_else(String::new, |s| {
        s.to_string_lossy().into_owned()
    });
    let _ = write!(name, "_h{dim}.{ext}");
    prefix.with_file_name(name)
}
