use super::Graph;
use crate::error::{Error, Result};

/// Parses `n` followed by whitespace-separated 0-based vertex pairs.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace().map(|tok| {
        tok.parse::<usize>()
            .map_err(|_| Error::EdgeList(format!("not a vertex index: {tok:?}")))
    });
    let order = tokens
        .next()
        .ok_or_else(|| Error::EdgeList("missing vertex count".into()))??;
    let mut edges = Vec::new();
    while let Some(u) = tokens.next() {
        let v = tokens
            .next()
            .ok_or_else(|| Error::EdgeList("odd number of endpoints".into()))??;
        edges.push((u?, v));
    }
    Graph::new(order, edges)
}

/// Renders the order on the first line and one edge per line.
pub fn encode_edge_list(graph: &Graph) -> String {
    let mut out = format!("{}\n", graph.order());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
