//! The graph6 ASCII format.
//!
//! Layout: an order prefix (`n + 63` for `n < 63`, otherwise `~` followed by
//! three or six 6-bit groups), then the upper triangle of the adjacency
//! matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits
//! per byte, big end first, each byte offset by 63. The optional `>>graph6<<`
//! header is accepted on input and never written.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 68_719_476_735;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::format(
                skip + i,
                format!("byte {b:#04x} outside 63..=126"),
            ));
        }
    }
    let (n, header_len) = decode_order(body).map_err(|(at, msg)| Error::format(skip + at, msg))?;
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < want {
        return Err(Error::format(
            skip + body.len(),
            format!(
                "truncated: {n} vertices need {want} data bytes, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > want {
        return Err(Error::format(
            skip + header_len + want,
            "trailing bytes after adjacency data",
        ));
    }
    if n > super::HARD_ORDER_LIMIT {
        return Err(Error::Capacity(format!(
            "{n} vertices is beyond the supported range"
        )));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

fn decode_order(body: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let group = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
    };
    match body {
        [] => Err((0, "empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err((body.len(), "truncated 8-byte order prefix".into()));
            }
            Ok((group(&rest[..6]), 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err((body.len(), "truncated 4-byte order prefix".into()));
            }
            Ok((group(&rest[..3]), 4))
        }
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER);
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
