//! graph6 short form (orders up to 62).
//!
//! Byte 0 is `n + 63`. The body is the upper triangle of the adjacency
//! matrix read column by column, `a(0,1), a(0,2), a(1,2), a(0,3), ...`,
//! packed big-endian six bits per byte, each byte offset by 63 and the last
//! one zero-padded.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_GRAPH6_ORDER: usize = 62;

const OFFSET: u8 = 63;

fn body_len(order: usize) -> usize {
    (order * order.saturating_sub(1) / 2).div_ceil(6)
}

/// Upper-triangle pairs in graph6 bit order.
pub(crate) fn bit_order(order: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..order).flat_map(|j| (0..j).map(move |i| (i, j)))
}

/// Parses one graph6 line. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim().as_bytes();
    let (&header, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if header == 126 {
        return Err(Error::Graph6OrderTooLarge(63));
    }
    if !(OFFSET..=126).contains(&header) {
        return Err(Error::Graph6(format!("invalid header byte 0x{header:02x}")));
    }
    let order = usize::from(header - OFFSET);
    if body.len() != body_len(order) {
        return Err(Error::Graph6(format!(
            "order {order} needs {} body bytes, found {}",
            body_len(order),
            body.len()
        )));
    }
    if let Some(&bad) = body.iter().find(|b| !(OFFSET..=126).contains(*b)) {
        return Err(Error::Graph6(format!("invalid body byte 0x{bad:02x}")));
    }

    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let pair_count = order * order.saturating_sub(1) / 2;
    if (pair_count..body.len() * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let edges = bit_order(order)
        .enumerate()
        .filter(|&(k, _)| bit(k))
        .map(|(_, pair)| pair);
    Graph::new(order, edges)
}

/// Encodes a graph of order at most 62.
pub fn encode_graph6(graph: &Graph) -> Result<String> {
    let order = graph.order();
    if order > MAX_GRAPH6_ORDER {
        return Err(Error::Graph6OrderTooLarge(order));
    }
    let mut body = vec![0u8; body_len(order)];
    for (k, (i, j)) in bit_order(order).enumerate() {
        if graph.is_adjacent(i, j) {
            body[k / 6] |= 1 << (5 - k % 6);
        }
    }
    let mut out = String::with_capacity(1 + body.len());
    out.push(char::from(order as u8 + OFFSET));
    out.extend(body.into_iter().map(|b| char::from(b + OFFSET)));
    Ok(out)
}
