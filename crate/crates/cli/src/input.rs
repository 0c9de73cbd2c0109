use std::io::Read;
use std::path::Path;

use randic::graph::{generate, parse_edge_list, parse_graph6, GraphKind};
use randic::{Error, Graph};

/// Resolves an input argument to a graph.
///
/// * `-` reads one graph6 line from stdin;
/// * `gen:<kind>:<n>` (or `gen:petersen`) builds a named graph;
/// * an existing file is read as an edge list, or as graph6 when its first
///   token is not a number;
/// * anything else is parsed as a graph6 string.
pub fn load_graph(arg: &str) -> Result<Graph, Error> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Graph6(format!("cannot read stdin: {e}")))?;
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        return parse_graph6(line);
    }
    if let Some(descriptor) = arg.strip_prefix("gen:") {
        return parse_generator(descriptor);
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::EdgeList(format!("cannot read {arg}: {e}")))?;
        let numeric = text
            .split_whitespace()
            .next()
            .is_some_and(|tok| tok.parse::<usize>().is_ok());
        return if numeric {
            parse_edge_list(&text)
        } else {
            parse_graph6(text.lines().next().unwrap_or(""))
        };
    }
    parse_graph6(arg)
}

fn parse_generator(descriptor: &str) -> Result<Graph, Error> {
    let bad = || Error::Graph6(format!("generator argument must look like gen:<kind>:<n>, got gen:{descriptor}"));
    let mut parts = descriptor.split(':');
    let kind: GraphKind = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let order = match (kind, parts.next()) {
        (GraphKind::Petersen, None) => 10,
        (_, Some(n)) => n.parse().map_err(|_| bad())?,
        (_, None) => return Err(bad()),
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    generate(kind, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_specs() {
        assert_eq!(load_graph("gen:star:5").unwrap().order(), 5);
        assert_eq!(load_graph("gen:petersen").unwrap().size(), 15);
        assert_eq!(load_graph("gen:petersen:10").unwrap().size(), 15);
        assert!(load_graph("gen:star").is_err());
        assert!(load_graph("gen:wheel:5").is_err());
        assert!(load_graph("gen:star:x").is_err());
        assert!(load_graph("gen:cycle:2").is_err());
    }

    #[test]
    fn graph6_argument() {
        assert_eq!(load_graph("Bw").unwrap().size(), 3);
        assert!(load_graph("not a graph").is_err());
    }
}
