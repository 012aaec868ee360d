//! Plain-text formats: comma-separated edge lists, bracketed projective
//! vertex lines, and their parsers. All files are newline-delimited ASCII
//! decimal; lines starting with `#` are comments.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::Int;
use crate::quat::Quat;
use crate::simplex::{EdgeHexad, EdgeTriple};

fn parse_ints(text: &str) -> Result<Vec<Int>> {
    text.split(',')
        .map(|tok| {
            Int::from_str(tok.trim()).map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))
        })
        .collect()
}

/// Six comma-separated positive integers in the order `[QP,RP,RQ,SP,SQ,SR]`.
pub fn parse_hexad(text: &str) -> Result<EdgeHexad> {
    let v = parse_ints(text)?;
    let arr: [Int; 6] = v
        .try_into()
        .map_err(|_| Error::Parse("a hexad needs exactly 6 edge lengths".into()))?;
    EdgeHexad::new(arr)
}

/// Three comma-separated positive integers `u,v,w`.
pub fn parse_triple(text: &str) -> Result<EdgeTriple> {
    let v = parse_ints(text)?;
    let [u, vv, w]: [Int; 3] = v
        .try_into()
        .map_err(|_| Error::Parse("a triangle needs exactly 3 edge lengths".into()))?;
    EdgeTriple::new(u, vv, w)
}

/// Either a triangle (3 values) or a tetrahedron (6 values).
pub enum ParsedEdges {
    Triangle(EdgeTriple),
    Tetra(EdgeHexad),
}

pub fn parse_edges(text: &str) -> Result<ParsedEdges> {
    match parse_ints(text)?.len() {
        3 => Ok(ParsedEdges::Triangle(parse_triple(text)?)),
        6 => Ok(ParsedEdges::Tetra(parse_hexad(text)?)),
        n => Err(Error::Parse(format!(
            "expected 3 or 6 edge lengths, got {n}"
        ))),
    }
}

/// One projective vertex per line as `[s,p,q,r]` (brackets optional).
pub fn parse_vertex_line(line: &str) -> Result<Quat> {
    let body = line.trim().trim_start_matches('[').trim_end_matches(']');
    let v = parse_ints(body)?;
    if v.len() != 4 {
        return Err(Error::Parse(format!(
            "a vertex line needs 4 components: {line:?}"
        )));
    }
    Ok(Quat::from_components(v))
}

/// Parse an embedding or pose: one vertex per line, `#` comments and blank
/// lines skipped. Expects 3 or 4 vertices.
pub fn parse_vertices(text: &str) -> Result<Vec<Quat>> {
    let vertices: Vec<Quat> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_vertex_line)
        .collect::<Result<_>>()?;
    if vertices.len() != 3 && vertices.len() != 4 {
        return Err(Error::Parse(format!(
            "expected 3 or 4 vertex lines, got {}",
            vertices.len()
        )));
    }
    Ok(vertices)
}

/// `[s,p,q,r]` form of a vertex (the `Display` of [`Quat`]).
pub fn format_vertex(v: &Quat) -> String {
    v.to_string()
}
