//! Text formats: graph6, plain edge lists, vertex sequences and exact
//! decimal/fraction literals.
//!
//! Every decoder in this module takes untrusted bytes and must return an
//! error rather than panic; the fuzz targets exercise exactly these entry
//! points.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, Rational};

/// A decoding failure, located by byte offset into the original input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    /// A byte outside the printable graph6 range 63..=126.
    InvalidByte(u8),
    /// The size header is cut short.
    TruncatedHeader,
    /// Size written in a longer form than necessary.
    NonCanonicalSize,
    /// Fewer adjacency bytes than the declared order requires.
    TruncatedBody {
        expected: usize,
        found: usize,
    },
    TrailingBytes,
    /// Unused low bits of the final adjacency byte were set.
    NonZeroPadding,
    InvalidNumber,
    Loop(usize),
    VertexOutOfRange(usize),
    DuplicateVertex(usize),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Empty => write!(f, "empty input"),
            ParseErrorKind::InvalidByte(b) => write!(f, "invalid byte 0x{b:02x}"),
            ParseErrorKind::TruncatedHeader => write!(f, "truncated size header"),
            ParseErrorKind::NonCanonicalSize => write!(f, "non-canonical size encoding"),
            ParseErrorKind::TruncatedBody { expected, found } => {
                write!(
                    f,
                    "truncated body: expected {expected} bytes, found {found}"
                )
            }
            ParseErrorKind::TrailingBytes => write!(f, "trailing bytes"),
            ParseErrorKind::NonZeroPadding => write!(f, "non-zero padding bits"),
            ParseErrorKind::InvalidNumber => write!(f, "invalid number"),
            ParseErrorKind::Loop(v) => write!(f, "loop at vertex {v}"),
            ParseErrorKind::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            ParseErrorKind::DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
        }
    }
}

fn err(offset: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { offset, kind }
}

const GRAPH6_HEADER: &[u8] = b">>graph6<<";
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

/// Encodes a graph in canonical graph6 form, without header or newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    // all bytes lie in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 record. Accepts an optional `>>graph6<<` header and a
/// single trailing newline; rejects every non-canonical encoding so that
/// `encode_graph6(decode_graph6(s)?) == s` for any accepted `s`.
pub fn decode_graph6(input: &[u8]) -> Result<Graph, ParseError> {
    let mut start = 0;
    if input.starts_with(GRAPH6_HEADER) {
        start = GRAPH6_HEADER.len();
    }
    let mut end = input.len();
    if input[start..].ends_with(b"\r\n") {
        end -= 2;
    } else if input[start..].ends_with(b"\n") {
        end -= 1;
    }
    let data = &input[start..end];
    if data.is_empty() {
        return Err(err(start, ParseErrorKind::Empty));
    }
    if let Some(pos) = data.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(start + pos, ParseErrorKind::InvalidByte(data[pos])));
    }
    let read6 = |from: usize, count: usize| -> Result<usize, ParseError> {
        if data.len() < from + count {
            return Err(err(start + data.len(), ParseErrorKind::TruncatedHeader));
        }
        Ok(data[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, body_at) = if data[0] < 126 {
        ((data[0] - 63) as usize, 1)
    } else if data.len() > 1 && data[1] == 126 {
        let n = read6(2, 6)?;
        if n <= MEDIUM_MAX {
            return Err(err(start, ParseErrorKind::NonCanonicalSize));
        }
        (n, 8)
    } else {
        let n = read6(1, 3)?;
        if n <= SHORT_MAX {
            return Err(err(start, ParseErrorKind::NonCanonicalSize));
        }
        (n, 4)
    };
    let nbits = (n as u128) * (n.saturating_sub(1) as u128) / 2;
    let expected = nbits.div_ceil(6);
    let body = &data[body_at..];
    if (body.len() as u128) < expected {
        return Err(err(
            start + data.len(),
            ParseErrorKind::TruncatedBody {
                expected: usize::try_from(expected).unwrap_or(usize::MAX),
                found: body.len(),
            },
        ));
    }
    // body length now bounds n, so allocation below is proportional to input
    let expected = expected as usize;
    if body.len() > expected {
        return Err(err(
            start + body_at + expected,
            ParseErrorKind::TrailingBytes,
        ));
    }
    let nbits = nbits as usize;
    if !nbits.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        let unused = 6 - nbits % 6;
        if last & ((1u8 << unused) - 1) != 0 {
            return Err(err(
                start + body_at + expected - 1,
                ParseErrorKind::NonZeroPadding,
            ));
        }
    }
    let mut b = GraphBuilder::new(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                b.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(b.build())
}

/// Plain edge list: one `u v` pair per line, 0-indexed, `#` starts a
/// comment. A line holding a single integer fixes the vertex count
/// (otherwise it is one more than the largest endpoint).
pub fn decode_edge_list(input: &[u8]) -> Result<Graph, ParseError> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in input.split(|&b| b == b'\n') {
        let line_at = offset;
        offset += line.len() + 1;
        let content = match line.iter().position(|&b| b == b'#') {
            Some(p) => &line[..p],
            None => line,
        };
        let mut fields = Vec::new();
        let mut i = 0;
        while i < content.len() {
            if content[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let s = i;
            while i < content.len() && !content[i].is_ascii_whitespace() {
                i += 1;
            }
            fields.push((line_at + s, parse_usize(&content[s..i], line_at + s)?));
        }
        match fields.as_slice() {
            [] => {}
            [(at, n)] => {
                if declared.is_some() || !edges.is_empty() {
                    return Err(err(*at, ParseErrorKind::InvalidNumber));
                }
                declared = Some((*at, *n));
            }
            [(at, u), (_, v)] => {
                if u == v {
                    return Err(err(*at, ParseErrorKind::Loop(*u)));
                }
                edges.push((*at, *u, *v));
            }
            [_, _, (at, _), ..] => return Err(err(*at, ParseErrorKind::TrailingBytes)),
        }
    }
    let n = match declared {
        Some((_, n)) => n,
        None => edges
            .iter()
            .map(|&(_, u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };
    // cap the order by what the input could plausibly describe
    if n > input.len().saturating_mul(64).max(64) {
        return Err(err(
            declared.map_or(0, |d| d.0),
            ParseErrorKind::VertexOutOfRange(n),
        ));
    }
    let mut b = GraphBuilder::new(n);
    for (at, u, v) in edges {
        if u >= n || v >= n {
            return Err(err(at, ParseErrorKind::VertexOutOfRange(u.max(v))));
        }
        b.add_edge(u, v);
    }
    Ok(b.build())
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes either format: graph6 when the first non-header byte is a graph6
/// size byte and the input is a single line, otherwise an edge list.
pub fn decode_graph(input: &[u8]) -> Result<Graph, ParseError> {
    let trimmed = input.strip_suffix(b"\n").unwrap_or(input);
    let single_line = !trimmed.contains(&b'\n');
    if input.starts_with(GRAPH6_HEADER)
        || (single_line && !trimmed.is_empty() && trimmed.iter().all(|b| (63..=126).contains(b)))
    {
        decode_graph6(input)
    } else {
        decode_edge_list(input)
    }
}

fn parse_usize(digits: &[u8], at: usize) -> Result<usize, ParseError> {
    if digits.is_empty() || !digits.iter().all(u8::is_ascii_digit) {
        return Err(err(at, ParseErrorKind::InvalidNumber));
    }
    digits.iter().try_fold(0usize, |acc, &d| {
        acc.checked_mul(10)
            .and_then(|x| x.checked_add((d - b'0') as usize))
            .ok_or_else(|| err(at, ParseErrorKind::InvalidNumber))
    })
}

/// Parses a vertex sequence such as `0,2,4` or `0 2 4`. Entries must be
/// distinct; range checks against a graph happen later.
pub fn parse_sequence(input: &str) -> Result<Vec<usize>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b == b',' || b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let s = i;
        while i < bytes.len() && bytes[i] != b',' && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let v = parse_usize(&bytes[s..i], s)?;
        if out.contains(&v) {
            return Err(err(s, ParseErrorKind::DuplicateVertex(v)));
        }
        out.push(v);
    }
    if out.is_empty() {
        return Err(err(0, ParseErrorKind::Empty));
    }
    Ok(out)
}

/// Parses an exact non-negative rational: `3/10`, `0.3`, `2`.
pub fn parse_rational(input: &str) -> Result<Rational, ParseError> {
    let s = input.trim();
    let lead = input.len() - input.trim_start().len();
    let bad = |at: usize| err(lead + at, ParseErrorKind::InvalidNumber);
    if s.is_empty() {
        return Err(err(0, ParseErrorKind::Empty));
    }
    let to_i64 = |v: usize, at: usize| i64::try_from(v).map_err(|_| bad(at));
    if let Some((num, den)) = s.split_once('/') {
        let n = to_i64(parse_usize(num.as_bytes(), lead).map_err(|_| bad(0))?, 0)?;
        let d_at = num.len() + 1;
        let d = to_i64(parse_usize(den.as_bytes(), 0).map_err(|_| bad(d_at))?, d_at)?;
        if d == 0 {
            return Err(bad(d_at));
        }
        return Ok(Rational::new(n, d));
    }
    let (int, frac) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    if int.is_empty() && frac.is_empty() {
        return Err(bad(0));
    }
    let whole = if int.is_empty() {
        0
    } else {
        to_i64(parse_usize(int.as_bytes(), 0).map_err(|_| bad(0))?, 0)?
    };
    if frac.len() > 18 {
        return Err(bad(int.len() + 1));
    }
    let mut scale = 1i64;
    let mut frac_val = 0i64;
    if !frac.is_empty() {
        frac_val = to_i64(
            parse_usize(frac.as_bytes(), 0).map_err(|_| bad(int.len() + 1))?,
            int.len() + 1,
        )?;
        scale = 10i64.pow(frac.len() as u32);
    }
    let num = whole
        .checked_mul(scale)
        .and_then(|x| x.checked_add(frac_val))
        .ok_or_else(|| bad(0))?;
    Ok(Rational::new(num, scale))
}
