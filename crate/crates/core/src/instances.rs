//! The `.flood.json` instance document: one JSON object per instance with
//! keys `variant`, `pivot`, `k`, `colors`, `edges`, `intervals`, `meta` in
//! that order, emitted with two-space indentation.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{FloodError, Result};
use crate::game::Variant;
use crate::graph::{Color, ColoredGraph, Vertex};
use crate::interval::IntervalRepresentation;

pub const EXTENSION: &str = "flood.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantName {
    Free,
    Fixed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub variant: VariantName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pivot: Option<Vertex>,
    pub k: Color,
    pub colors: Vec<Color>,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intervals: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub meta: BTreeMap<String, serde_json::Value>,
}

impl InstanceDocument {
    /// A free-variant document for `g`.
    pub fn from_graph(g: &ColoredGraph) -> Self {
        InstanceDocument {
            variant: VariantName::Free,
            pivot: None,
            k: g.k(),
            colors: g.colors().to_vec(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            intervals: None,
            meta: BTreeMap::new(),
        }
    }

    /// A free-variant document carrying the representation's intervals.
    pub fn from_representation(rep: &IntervalRepresentation) -> Result<Self> {
        let mut doc = Self::from_graph(&rep.to_graph()?);
        doc.intervals = Some(rep.intervals.iter().map(|&(l, r)| [l, r]).collect());
        Ok(doc)
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        match variant {
            Variant::Free => {
                self.variant = VariantName::Free;
                self.pivot = None;
            }
            Variant::Fixed { pivot } => {
                self.variant = VariantName::Fixed;
                self.pivot = Some(pivot);
            }
        }
        self
    }

    pub fn with_meta(mut self, key: &str, value: impl Serialize) -> Self {
        let value = serde_json::to_value(value).expect("metadata serializes");
        self.meta.insert(key.to_string(), value);
        self
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn game_variant(&self) -> Variant {
        match (self.variant, self.pivot) {
            (VariantName::Fixed, Some(pivot)) => Variant::Fixed { pivot },
            _ => Variant::Free,
        }
    }

    pub fn graph(&self) -> Result<ColoredGraph> {
        let edges: Vec<(Vertex, Vertex)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        ColoredGraph::new(self.n(), &edges, self.colors.clone(), self.k)
    }

    pub fn representation(&self) -> Option<IntervalRepresentation> {
        let intervals = self.intervals.as_ref()?.iter().map(|&[l, r]| (l, r)).collect();
        Some(IntervalRepresentation { intervals, colors: self.colors.clone(), k: self.k })
    }

    /// Checks every document invariant, naming the offending field.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if n == 0 {
            return Err(FloodError::parse("colors", "at least one vertex is required"));
        }
        if self.k == 0 {
            return Err(FloodError::parse("k", "must be at least 1"));
        }
        if let Some(i) = self.colors.iter().position(|&c| c == 0 || c > self.k) {
            return Err(FloodError::parse(format!("colors[{i}]"), format!("color {} outside 1..={}", self.colors[i], self.k)));
        }
        let mut seen = BTreeSet::new();
        for (i, &[u, v]) in self.edges.iter().enumerate() {
            let field = format!("edges[{i}]");
            if u >= n || v >= n {
                return Err(FloodError::parse(field, format!("vertex {} out of range for {n} vertices", u.max(v))));
            }
            if u == v {
                return Err(FloodError::parse(field, "self-loop"));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(FloodError::parse(field, "duplicate edge"));
            }
        }
        match (self.variant, self.pivot) {
            (VariantName::Fixed, None) => return Err(FloodError::parse("pivot", "the fixed variant needs a pivot")),
            (VariantName::Free, Some(_)) => return Err(FloodError::parse("pivot", "the free variant takes no pivot")),
            (_, Some(p)) if p >= n => return Err(FloodError::parse("pivot", format!("vertex {p} out of range"))),
            _ => {}
        }
        if let Some(intervals) = &self.intervals {
            if intervals.len() != n {
                return Err(FloodError::parse("intervals", format!("{} intervals for {n} vertices", intervals.len())));
            }
            if let Some(i) = intervals.iter().position(|&[l, r]| l > r) {
                return Err(FloodError::parse(format!("intervals[{i}]"), "left endpoint exceeds right endpoint"));
            }
            let rep = self.representation().expect("intervals present");
            let implied: BTreeSet<(Vertex, Vertex)> = rep.edges().into_iter().collect();
            if let Some(&(u, v)) = implied.symmetric_difference(&seen).next() {
                let side = if implied.contains(&(u, v)) { "intersect but are not adjacent" } else { "are adjacent but do not intersect" };
                return Err(FloodError::parse("intervals", format!("intervals of {u} and {v} {side}")));
            }
        }
        match self.graph() {
            Err(FloodError::Disconnected) => Err(FloodError::parse("edges", "graph is disconnected")),
            other => other.map(|_| ()),
        }
    }
}

/// Parses and validates one document.
pub fn parse(text: &str) -> Result<InstanceDocument> {
    let doc: InstanceDocument = serde_json::from_str(text)
        .map_err(|e| FloodError::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    doc.validate()?;
    Ok(doc)
}

/// The canonical text of a document, ending in a newline.
pub fn emit(doc: &InstanceDocument) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    text
}

pub fn read_file(path: &std::path::Path) -> Result<InstanceDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| FloodError::parse(path.display().to_string(), e.to_string()))?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const K2: &str = r#"{"variant": "free", "k": 2, "colors": [1, 2], "edges": [[0, 1]], "intervals": [[0, 1], [1, 2]]}"#;

    #[test]
    fn single_vertex_parses() {
        let doc = parse(r#"{"variant": "free", "k": 1, "colors": [1], "edges": []}"#).unwrap();
        assert_eq!(doc.graph().unwrap().n(), 1);
    }

    #[test]
    fn round_trip_is_identity() {
        let doc = parse(K2).unwrap();
        let text = emit(&doc);
        assert_eq!(parse(&text).unwrap(), doc);
        assert_eq!(emit(&parse(&text).unwrap()), text);
        assert!(text.starts_with("{\n  \"variant\": \"free\",\n  \"k\": 2,"));
    }

    #[test]
    fn field_diagnostics() {
        let field = |text: &str| match parse(text) {
            Err(FloodError::Parse { field, .. }) => field,
            other => panic!("{other:?}"),
        };
        assert_eq!(field(r#"{"variant": "free", "k": 2, "colors": [1, 3], "edges": [[0, 1]]}"#), "colors[1]");
        assert_eq!(field(r#"{"variant": "free", "k": 2, "colors": [1, 2], "edges": [[0, 2]]}"#), "edges[0]");
        assert_eq!(field(r#"{"variant": "free", "k": 2, "colors": [1, 2, 1], "edges": [[0, 1]]}"#), "edges");
        assert_eq!(field(r#"{"variant": "fixed", "k": 2, "colors": [1, 2], "edges": [[0, 1]]}"#), "pivot");
        assert_eq!(
            field(r#"{"variant": "free", "k": 2, "colors": [1, 2], "edges": [[0, 1]], "intervals": [[0, 1], [2, 3]]}"#),
            "intervals"
        );
        assert!(field(r#"{"variant": "free", "k": 2, "colours": [1, 2], "edges": []}"#).starts_with("line 1"));
    }

    #[test]
    fn fixed_variant_keeps_its_pivot() {
        let doc = parse(r#"{"variant": "fixed", "pivot": 1, "k": 2, "colors": [1, 2], "edges": [[0, 1]]}"#).unwrap();
        assert_eq!(doc.game_variant(), Variant::Fixed { pivot: 1 });
    }
}
