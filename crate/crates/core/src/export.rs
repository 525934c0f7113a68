//! The stable AR quiver as a graph: dot documents, a JSON sidecar, and a dot
//! reader for the subset written here.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dynkin::{tau, Vertex};
use crate::error::{Error, Result};
use crate::parse::parse_vertex;
use crate::stable::{ObjectSet, StableCategory};

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct QuiverGraph {
    pub name: String,
    pub objects: BTreeSet<Vertex>,
    /// Arrows of the quotient; parallel arrows are repeated.
    pub arrows: Vec<(Vertex, Vertex)>,
    /// `X → τX`.
    pub tau: Vec<(Vertex, Vertex)>,
    pub highlighted: BTreeSet<Vertex>,
}

impl QuiverGraph {
    pub fn from_category(cat: &StableCategory, highlight: Option<&ObjectSet>) -> Self {
        let rfs = cat.rfs();
        let d = rfs.diagram();
        let mut arrows = Vec::new();
        let mut taus = Vec::new();
        for &v in cat.objects() {
            for w in d.successors(v) {
                arrows.push((v, rfs.canonical(w)));
            }
            taus.push((v, rfs.canonical(tau(v, 1))));
        }
        arrows.sort();
        QuiverGraph {
            name: rfs.to_string(),
            objects: cat.objects().iter().copied().collect(),
            arrows,
            tau: taus,
            highlighted: highlight.map(|s| s.iter().copied().collect()).unwrap_or_default(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.name);
        out.push_str("  node [shape=plaintext];\n");
        for v in &self.objects {
            if self.highlighted.contains(v) {
                let _ = writeln!(out, "  \"{v}\" [style=filled, fillcolor=lightblue];");
            } else {
                let _ = writeln!(out, "  \"{v}\";");
            }
        }
        for (a, b) in &self.arrows {
            let _ = writeln!(out, "  \"{a}\" -> \"{b}\";");
        }
        for (a, b) in &self.tau {
            let _ = writeln!(out, "  \"{a}\" -> \"{b}\" [style=dashed];");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }
}

fn quoted(s: &str) -> Result<(&str, &str)> {
    let rest = s
        .strip_prefix('"')
        .ok_or_else(|| Error::Parse(format!("expected a quoted id in {s:?}")))?;
    let end = rest
        .find('"')
        .ok_or_else(|| Error::Parse(format!("unterminated id in {s:?}")))?;
    Ok((&rest[..end], rest[end + 1..].trim_start()))
}

fn attributes(s: &str) -> Result<Vec<(&str, &str)>> {
    let s = s.trim().strip_suffix(';').unwrap_or(s.trim()).trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [attributes], got {s:?}")))?;
    inner
        .split(',')
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::Parse(format!("bad attribute {kv:?}")))
        })
        .collect()
}

/// Reads a document written by [`QuiverGraph::to_dot`]. Whitespace and
/// `//` comment lines are tolerated; other dot constructs are rejected.
pub fn parse_dot(text: &str) -> Result<QuiverGraph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with("//"));
    let header = lines.next().ok_or_else(|| Error::Parse("empty document".into()))?;
    let name = header
        .strip_prefix("digraph")
        .and_then(|r| r.trim().strip_suffix('{'))
        .ok_or_else(|| Error::Parse(format!("expected `digraph \"name\" {{`, got {header:?}")))?;
    let (name, rest) = quoted(name.trim())?;
    if !rest.is_empty() {
        return Err(Error::Parse(format!("trailing text after graph name: {rest:?}")));
    }
    let mut g = QuiverGraph {
        name: name.to_string(),
        ..QuiverGraph::default()
    };
    let mut closed = false;
    for line in lines {
        if closed {
            return Err(Error::Parse(format!("text after closing brace: {line:?}")));
        }
        if line == "}" {
            closed = true;
            continue;
        }
        if let Some(rest) = line.strip_prefix("node") {
            attributes(rest)?;
            continue;
        }
        let (a, rest) = quoted(line)?;
        let a = parse_vertex(a)?;
        if let Some(rest) = rest.strip_prefix("->") {
            let (b, rest) = quoted(rest.trim_start())?;
            let b = parse_vertex(b)?;
            let attrs = attributes(rest)?;
            if attrs.iter().any(|&(k, v)| k == "style" && v == "dashed") {
                g.tau.push((a, b));
            } else {
                g.arrows.push((a, b));
            }
        } else {
            let attrs = attributes(rest)?;
            g.objects.insert(a);
            if attrs.iter().any(|&(k, _)| k == "fillcolor") {
                g.highlighted.insert(a);
            }
        }
    }
    if !closed {
        return Err(Error::Parse("missing closing brace".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{validate_type, Family};

    #[test]
    fn a2_document() {
        let cat = StableCategory::new(&validate_type(Family::A, 2, 2, 2, 1).unwrap());
        let set = cat.set([Vertex::new(0, 2), Vertex::new(1, 2)]).unwrap();
        let g = QuiverGraph::from_category(&cat, Some(&set));
        let expected = "digraph \"(A_2, 1, 1)\" {
  node [shape=plaintext];
  \"(0,1)\";
  \"(0,2)\" [style=filled, fillcolor=lightblue];
  \"(1,1)\";
  \"(1,2)\" [style=filled, fillcolor=lightblue];
  \"(0,1)\" -> \"(0,2)\";
  \"(0,2)\" -> \"(1,1)\";
  \"(1,1)\" -> \"(1,2)\";
  \"(1,2)\" -> \"(0,1)\";
  \"(0,1)\" -> \"(1,1)\" [style=dashed];
  \"(0,2)\" -> \"(1,2)\" [style=dashed];
  \"(1,1)\" -> \"(0,1)\" [style=dashed];
  \"(1,2)\" -> \"(0,2)\" [style=dashed];
}
";
        assert_eq!(g.to_dot(), expected);
        assert_eq!(parse_dot(expected).unwrap(), g);
    }

    #[test]
    fn round_trip_twisted_types() {
        for (f, n, t) in [(Family::D, 4, 3), (Family::A, 5, 2), (Family::E, 6, 2)] {
            let cat = StableCategory::new(&validate_type(f, n, 1, 1, t).unwrap());
            let g = QuiverGraph::from_category(&cat, None);
            assert_eq!(g.arrows.len(), cat.len() * 2 * (n as usize - 1) / n as usize);
            assert_eq!(parse_dot(&g.to_dot()).unwrap(), g);
            let back: QuiverGraph = serde_json::from_str(&g.to_json()).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_dot("").is_err());
        assert!(parse_dot("graph \"x\" {\n}").is_err());
        assert!(parse_dot("digraph \"x\" {\n \"(0,1)\" -> ;\n}").is_err());
        assert!(parse_dot("digraph \"x\" {\n \"(0,1)\";\n").is_err());
        assert!(parse_dot("digraph \"x\" {\n}\n}").is_err());
    }
}
