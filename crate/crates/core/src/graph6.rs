//! graph6 records (nauty's printable encoding).
//!
//! The header encodes `n`; the body packs the upper triangle column by
//! column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into 6-bit groups, most
//! significant bit first, each group offset by 63.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::base::{BaseGraph, MAX_BASE_ORDER};
use crate::error::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";

pub fn parse_graph6(line: &[u8]) -> Result<BaseGraph> {
    let mut line = line;
    while let [rest @ .., b'\n' | b'\r'] = line {
        line = rest;
    }
    if let Some(rest) = line.strip_prefix(HEADER) {
        line = rest;
    }
    if line.is_empty() {
        return Err(Error::Graph6("empty record"));
    }
    if line.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6("byte outside the printable range 63..=126"));
    }
    let (n, body) = parse_order(line)?;
    if n < 2 {
        return Err(Error::TooFewVertices(n as usize));
    }
    if n > MAX_BASE_ORDER as u64 {
        return Err(Error::TooManyVertices(n as usize));
    }
    let n = n as usize;
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Error::Graph6("truncated adjacency field"));
    }
    if body.len() > expected {
        return Err(Error::Graph6("trailing bytes after adjacency field"));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(BaseGraph::from_masks(adj))
}

fn parse_order(line: &[u8]) -> Result<(u64, &[u8])> {
    let group = |bytes: &[u8]| bytes.iter().fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
    match line {
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 36-bit order header"));
            }
            Ok((group(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 18-bit order header"));
            }
            Ok((group(&rest[..3]), &rest[3..]))
        }
        [first, rest @ ..] => Ok(((first - 63) as u64, rest)),
        [] => Err(Error::Graph6("empty record")),
    }
}

pub fn encode_graph6(g: &BaseGraph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    // all bytes are in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_records() {
        let k3 = BaseGraph::complete(3).unwrap();
        assert_eq!(parse_graph6(b"Bw").unwrap(), k3);
        assert_eq!(encode_graph6(&k3), "Bw");
        let k2 = parse_graph6(b"A_\n").unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(parse_graph6(b"A?").unwrap().edge_count(), 0);
        assert_eq!(parse_graph6(b">>graph6<<Bw").unwrap(), k3);
    }

    #[test]
    fn malformed_records() {
        assert!(matches!(parse_graph6(b""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(b"\n"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(b"D"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(b"Bww"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(b"B w"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(b"~?"), Err(Error::Graph6(_))));
        assert_eq!(parse_graph6(b"@"), Err(Error::TooFewVertices(1)));
        assert_eq!(parse_graph6(b"?"), Err(Error::TooFewVertices(0)));
    }

    #[test]
    fn long_header_round_trip() {
        let g = BaseGraph::path(63).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }
}
