//! Line-oriented text formats for digraphs, colorings, and suborientations.

use std::fmt;
use std::fs;
use std::path::Path;

use ofrac_core::{BFoldColoring, ColorSet, ConsistentSubOrientation, GraphError, OrientedGraph};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FormatError {
    /// Whole-file problems: unreadable, or a constraint with no single
    /// offending line (a missing header, an unlabeled vertex).
    File { path: String, detail: String },
    /// A problem pinned to one line, 1-based.
    Line {
        path: String,
        line: usize,
        detail: String,
    },
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::File { path, detail } => write!(f, "{path}: {detail}"),
            FormatError::Line { path, line, detail } => write!(f, "{path}:{line}: {detail}"),
        }
    }
}

impl std::error::Error for FormatError {}

fn file_err(path: &str, detail: impl Into<String>) -> FormatError {
    FormatError::File {
        path: path.to_string(),
        detail: detail.into(),
    }
}

fn line_err(path: &str, line: usize, detail: impl Into<String>) -> FormatError {
    FormatError::Line {
        path: path.to_string(),
        line,
        detail: detail.into(),
    }
}

/// A scanned digraph file, before graph invariants are checked.
struct RawDigraph {
    vertex_count: usize,
    /// Arcs with the line each came from.
    arcs: Vec<(u32, u32, usize)>,
    labels: Vec<(u32, String, usize)>,
    /// Palette and subset size from a `kneser` line, if present.
    kneser: Option<(u32, u32)>,
}

fn parse_int<T: core::str::FromStr>(
    token: &str,
    what: &str,
    path: &str,
    line: usize,
) -> Result<T, FormatError> {
    token.parse().map_err(|_| {
        line_err(
            path,
            line,
            format!("{what} must be an integer, got `{token}`"),
        )
    })
}

fn scan_digraph(text: &str, path: &str) -> Result<RawDigraph, FormatError> {
    let mut vertex_count: Option<usize> = None;
    let mut arcs = Vec::new();
    let mut labels = Vec::new();
    let mut kneser = None;
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "n" => {
                if tokens.len() != 2 {
                    return Err(line_err(path, line, "expected header `n <vertex count>`"));
                }
                if vertex_count.is_some() {
                    return Err(line_err(path, line, "duplicate `n` line"));
                }
                vertex_count = Some(parse_int(tokens[1], "vertex count", path, line)?);
            }
            "label" => {
                if tokens.len() < 3 {
                    return Err(line_err(path, line, "expected `label <vertex> <text>`"));
                }
                let v = parse_int(tokens[1], "vertex", path, line)?;
                labels.push((v, tokens[2..].join(" "), line));
            }
            "kneser" => {
                if tokens.len() != 3 {
                    return Err(line_err(
                        path,
                        line,
                        "expected `kneser <palette> <subset size>`",
                    ));
                }
                if kneser.is_some() {
                    return Err(line_err(path, line, "duplicate `kneser` line"));
                }
                kneser = Some((
                    parse_int(tokens[1], "palette", path, line)?,
                    parse_int(tokens[2], "subset size", path, line)?,
                ));
            }
            _ => {
                if vertex_count.is_none() {
                    return Err(line_err(path, line, "expected header `n <vertex count>`"));
                }
                if tokens.len() != 2 {
                    return Err(line_err(path, line, "expected an arc `u v`"));
                }
                let u = parse_int(tokens[0], "arc tail", path, line)?;
                let v = parse_int(tokens[1], "arc head", path, line)?;
                arcs.push((u, v, line));
            }
        }
    }
    let vertex_count =
        vertex_count.ok_or_else(|| file_err(path, "missing header `n <vertex count>`"))?;
    Ok(RawDigraph {
        vertex_count,
        arcs,
        labels,
        kneser,
    })
}

/// Points a graph-construction error back at the first file line whose
/// arc is involved.
fn locate_graph_error(raw: &RawDigraph, path: &str, e: GraphError) -> FormatError {
    let offender = |a: u32, b: u32| {
        raw.arcs
            .iter()
            .find(|&&(u, v, _)| (u, v) == (a, b) || (u, v) == (b, a))
            .map(|&(_, _, line)| line)
    };
    let line = match e {
        GraphError::SelfLoop { vertex } => offender(vertex, vertex),
        GraphError::TwoCycle { from, to } | GraphError::ArcOutOfRange { from, to, .. } => {
            offender(from, to)
        }
        _ => None,
    };
    match line {
        Some(line) => line_err(path, line, e.to_string()),
        None => file_err(path, e.to_string()),
    }
}

fn assemble_graph(raw: &RawDigraph, path: &str) -> Result<OrientedGraph, FormatError> {
    let g = OrientedGraph::new(raw.vertex_count, raw.arcs.iter().map(|&(u, v, _)| (u, v)))
        .map_err(|e| locate_graph_error(raw, path, e))?;
    if raw.labels.is_empty() {
        return Ok(g);
    }
    let mut labels: Vec<Option<String>> = vec![None; raw.vertex_count];
    for &(v, ref text, line) in &raw.labels {
        let slot = labels
            .get_mut(v as usize)
            .ok_or_else(|| line_err(path, line, format!("label for out-of-range vertex {v}")))?;
        if slot.is_some() {
            return Err(line_err(
                path,
                line,
                format!("duplicate label for vertex {v}"),
            ));
        }
        *slot = Some(text.clone());
    }
    let labels: Vec<String> = labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| file_err(path, format!("vertex {v} has no label"))))
        .collect::<Result<_, _>>()?;
    g.with_labels(labels)
        .map_err(|e| file_err(path, e.to_string()))
}

pub fn parse_graph(text: &str, path: &str) -> Result<OrientedGraph, FormatError> {
    assemble_graph(&scan_digraph(text, path)?, path)
}

pub fn read_graph(path: &Path) -> Result<OrientedGraph, FormatError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| file_err(&shown, e.to_string()))?;
    parse_graph(&text, &shown)
}

fn parse_label_set(text: &str, path: &str, line: usize) -> Result<ColorSet, FormatError> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| line_err(path, line, format!("label `{text}` is not a color set")))?;
    let mut colors = Vec::new();
    for part in inner.split(',') {
        colors.push(parse_int(part.trim(), "color", path, line)?);
    }
    ColorSet::from_colors(colors)
        .ok_or_else(|| line_err(path, line, format!("label `{text}` repeats a color")))
}

pub fn parse_suborientation(
    text: &str,
    path: &str,
) -> Result<ConsistentSubOrientation, FormatError> {
    let raw = scan_digraph(text, path)?;
    let (palette, subset_size) = raw
        .kneser
        .ok_or_else(|| file_err(path, "missing `kneser <palette> <subset size>` line"))?;
    let graph = assemble_graph(&raw, path)?;
    let sets = (0..graph.vertex_count() as u32)
        .map(|v| {
            let text = graph
                .label(v)
                .ok_or_else(|| file_err(path, format!("vertex {v} has no subset label")))?;
            let line = raw
                .labels
                .iter()
                .find(|&&(u, _, _)| u == v)
                .map_or(0, |&(_, _, l)| l);
            parse_label_set(text, path, line)
        })
        .collect::<Result<Vec<_>, _>>()?;
    ConsistentSubOrientation::new(palette, subset_size, graph, sets)
        .map_err(|e| file_err(path, e.to_string()))
}

pub fn read_suborientation(path: &Path) -> Result<ConsistentSubOrientation, FormatError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| file_err(&shown, e.to_string()))?;
    parse_suborientation(&text, &shown)
}

pub fn parse_coloring(text: &str, path: &str) -> Result<BFoldColoring, FormatError> {
    let mut header: Option<(u32, u32)> = None;
    let mut rows: Vec<(u32, ColorSet, usize)> = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if header.is_none() {
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens.len() == 4 && tokens[0] == "k" && tokens[2] == "b" {
                header = Some((
                    parse_int(tokens[1], "palette", path, line)?,
                    parse_int(tokens[3], "fold", path, line)?,
                ));
                continue;
            }
            return Err(line_err(
                path,
                line,
                "expected header `k <palette> b <fold>`",
            ));
        }
        let (vertex, colors) = content
            .split_once(':')
            .ok_or_else(|| line_err(path, line, "expected `<vertex>: c1,c2,...`"))?;
        let v: u32 = parse_int(vertex.trim(), "vertex", path, line)?;
        if rows.iter().any(|&(u, _, _)| u == v) {
            return Err(line_err(
                path,
                line,
                format!("duplicate line for vertex {v}"),
            ));
        }
        let mut set_colors = Vec::new();
        for part in colors.split(',') {
            set_colors.push(parse_int(part.trim(), "color", path, line)?);
        }
        let set = ColorSet::from_colors(set_colors)
            .ok_or_else(|| line_err(path, line, format!("vertex {v} repeats a color")))?;
        rows.push((v, set, line));
    }
    let (palette, fold) =
        header.ok_or_else(|| file_err(path, "missing header `k <palette> b <fold>`"))?;
    let mut sets = vec![None; rows.len()];
    for &(v, set, line) in &rows {
        match sets.get_mut(v as usize) {
            Some(slot) => *slot = Some((set, line)),
            None => {
                return Err(line_err(
                    path,
                    line,
                    format!("vertex {v} outside 0..{} (one line per vertex)", rows.len()),
                ))
            }
        }
    }
    let sets: Vec<(ColorSet, usize)> = sets
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| file_err(path, format!("vertex {v} has no color line"))))
        .collect::<Result<_, _>>()?;
    BFoldColoring::new(palette, fold, sets.iter().map(|&(s, _)| s).collect()).map_err(|e| {
        use ofrac_core::ColoringError::*;
        match e {
            WrongCardinality { vertex, .. } | ColorOutOfRange { vertex, .. } => {
                line_err(path, sets[vertex as usize].1, e.to_string())
            }
            _ => file_err(path, e.to_string()),
        }
    })
}

pub fn read_coloring(path: &Path) -> Result<BFoldColoring, FormatError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| file_err(&shown, e.to_string()))?;
    parse_coloring(&text, &shown)
}

fn push_graph_body(out: &mut String, g: &OrientedGraph) {
    use fmt::Write;
    writeln!(out, "n {}", g.vertex_count()).unwrap();
    for &(u, v) in g.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    if let Some(labels) = g.labels() {
        for (v, text) in labels.iter().enumerate() {
            writeln!(out, "label {v} {text}").unwrap();
        }
    }
}

pub fn write_graph(g: &OrientedGraph) -> String {
    let mut out = String::new();
    push_graph_body(&mut out, g);
    out
}

/// Digraph file with subset labels plus a `kneser` line pinning the
/// palette, so parsing recovers the suborientation exactly.
pub fn write_suborientation(s: &ConsistentSubOrientation) -> String {
    use fmt::Write;
    let mut out = String::new();
    writeln!(out, "kneser {} {}", s.palette(), s.subset_size()).unwrap();
    writeln!(out, "n {}", s.graph().vertex_count()).unwrap();
    for &(u, v) in s.graph().arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    for (v, set) in s.sets().iter().enumerate() {
        writeln!(out, "label {v} {set}").unwrap();
    }
    out
}

pub fn write_coloring(c: &BFoldColoring) -> String {
    use fmt::Write;
    let mut out = String::new();
    writeln!(out, "k {} b {}", c.palette(), c.fold()).unwrap();
    for (v, set) in c.sets().iter().enumerate() {
        let colors: Vec<String> = set.iter().map(|c| c.to_string()).collect();
        writeln!(out, "{v}: {}", colors.join(",")).unwrap();
    }
    out
}
