//! Separating and non-separating graphs.
//!
//! A decorated graph is a connected bipartite multigraph with white and black
//! vertices. Vertices carry a genus weight and a root flag; edges carry a
//! positive sheet weight. Non-separating graphs additionally carry a
//! color-swapping automorphism `gamma`. Parallel edges are distinct entities.

mod canon;
mod check;
mod gamma;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use canon::{canonical_key, CanonicalKey};
pub use check::{
    check_nonsep, check_nonsep_with, check_sep, check_sep_negated, Violation, ViolationList,
};
pub use gamma::find_gammas;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "w")]
    White,
    #[serde(rename = "b")]
    Black,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// Whether an admissible `gamma` must be an involution.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum GammaOrder {
    #[default]
    Involution,
    Any,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub color: Color,
    pub weight: u32,
    pub root: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: u32,
}

impl Edge {
    /// Endpoints as an unordered pair, smaller id first.
    pub fn ends(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecoratedGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    gamma: Option<Vec<usize>>,
}

impl DecoratedGraph {
    /// Builds a graph, checking only that ids are in range, edge weights are
    /// positive and `gamma` is a permutation. Every other property is left to
    /// the checkers.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>, gamma: Option<Vec<usize>>) -> Result<Self> {
        let n = vertices.len();
        for (id, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(Error::Graph(format!(
                    "edge {id} has an endpoint out of range"
                )));
            }
            if e.weight == 0 {
                return Err(Error::Graph(format!("edge {id} has weight 0")));
            }
        }
        if let Some(g) = &gamma {
            if g.len() != n {
                return Err(Error::Graph(format!(
                    "gamma has {} entries for {n} vertices",
                    g.len()
                )));
            }
            let mut seen = vec![false; n];
            for &x in g {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::Graph("gamma is not a permutation".into()));
                }
            }
        }
        Ok(DecoratedGraph {
            vertices,
            edges,
            gamma,
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn gamma(&self) -> Option<&[usize]> {
        self.gamma.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn count_color(&self, c: Color) -> usize {
        self.vertices.iter().filter(|v| v.color == c).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        for e in &self.edges {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }

    /// Incident `(neighbor, edge weight)` pairs per vertex.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(usize, u32)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.u].push((e.v, e.weight));
            adj[e.v].push((e.u, e.weight));
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &(y, _) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        reached == n
    }

    /// Edges as sorted `(min end, max end, weight)` triples; equal lists mean
    /// equal edge multisets.
    pub(crate) fn edge_multiset(&self) -> Vec<(usize, usize, u32)> {
        let mut v: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = e.ends();
                (a, b, e.weight)
            })
            .collect();
        v.sort_unstable();
        v
    }

    /// The edge multiset after relabeling vertices by `map`.
    pub(crate) fn mapped_edge_multiset(&self, map: &[usize]) -> Vec<(usize, usize, u32)> {
        let mut v: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (map[e.u], map[e.v]);
                (a.min(b), a.max(b), e.weight)
            })
            .collect();
        v.sort_unstable();
        v
    }

    pub fn with_gamma(&self, gamma: Option<Vec<usize>>) -> Result<Self> {
        DecoratedGraph::new(self.vertices.clone(), self.edges.clone(), gamma)
    }

    /// The same graph with every vertex recolored.
    pub fn recolored(&self) -> Self {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                color: v.color.other(),
                ..*v
            })
            .collect();
        DecoratedGraph {
            vertices,
            edges: self.edges.clone(),
            gamma: self.gamma.clone(),
        }
    }

    /// Relabels vertex `v` as `vertex_perm[v]` and lists edges in the order
    /// `edge_order` (a permutation of edge ids). Each edge's endpoints are
    /// swapped when `flip_ends` says so. The result is isomorphic to `self`.
    pub fn relabeled(&self, vertex_perm: &[usize], edge_order: &[usize], flip_ends: bool) -> Self {
        let n = self.vertices.len();
        assert_eq!(vertex_perm.len(), n);
        assert_eq!(edge_order.len(), self.edges.len());
        let mut vertices = self.vertices.clone();
        for (old, &new) in vertex_perm.iter().enumerate() {
            vertices[new] = self.vertices[old];
        }
        let edges = edge_order
            .iter()
            .map(|&id| {
                let e = self.edges[id];
                let (u, v) = (vertex_perm[e.u], vertex_perm[e.v]);
                if flip_ends {
                    Edge {
                        u: v,
                        v: u,
                        weight: e.weight,
                    }
                } else {
                    Edge {
                        u,
                        v,
                        weight: e.weight,
                    }
                }
            })
            .collect();
        let gamma = self.gamma.as_ref().map(|g| {
            let mut out = vec![0; n];
            for (old, &img) in g.iter().enumerate() {
                out[vertex_perm[old]] = vertex_perm[img];
            }
            out
        });
        DecoratedGraph {
            vertices,
            edges,
            gamma,
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(Wire::from(self)).expect("graph serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&Wire::from(self)).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: Wire = serde_json::from_str(text)?;
        wire.try_into()
    }

    pub fn from_json_value(value: serde_json::Value) -> Result<Self> {
        let wire: Wire = serde_json::from_value(value)?;
        wire.try_into()
    }

    /// Graphviz rendering: circles for ordinary vertices, double circles for
    /// roots, white or black fill, vertex labels show the genus weight and
    /// edge labels the sheet weight.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph \"{name}\" {{");
        for (id, v) in self.vertices.iter().enumerate() {
            let shape = if v.root { "doublecircle" } else { "circle" };
            let (fill, font) = match v.color {
                Color::White => ("white", "black"),
                Color::Black => ("black", "white"),
            };
            let _ = writeln!(
                s,
                "  v{id} [shape={shape}, style=filled, fillcolor={fill}, fontcolor={font}, label=\"{}\"];",
                v.weight
            );
        }
        for e in &self.edges {
            let _ = writeln!(s, "  v{} -- v{} [label=\"{}\"];", e.u, e.v, e.weight);
        }
        if let Some(g) = &self.gamma {
            for (a, &b) in g.iter().enumerate() {
                if a < b {
                    let _ = writeln!(s, "  v{a} -- v{b} [style=dotted, constraint=false];");
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireVertex {
    id: usize,
    color: Color,
    weight: u32,
    root: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireEdge {
    id: usize,
    u: usize,
    v: usize,
    weight: u32,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    vertices: Vec<WireVertex>,
    edges: Vec<WireEdge>,
    gamma: Option<Vec<usize>>,
}

impl From<&DecoratedGraph> for Wire {
    fn from(g: &DecoratedGraph) -> Self {
        Wire {
            vertices: g
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| WireVertex {
                    id,
                    color: v.color,
                    weight: v.weight,
                    root: v.root,
                })
                .collect(),
            edges: g
                .edges
                .iter()
                .enumerate()
                .map(|(id, e)| WireEdge {
                    id,
                    u: e.u,
                    v: e.v,
                    weight: e.weight,
                })
                .collect(),
            gamma: g.gamma.clone(),
        }
    }
}

fn dense_ids<T>(items: Vec<T>, id: impl Fn(&T) -> usize, what: &str) -> Result<Vec<T>> {
    let n = items.len();
    let mut by_id = BTreeMap::new();
    for item in items {
        let i = id(&item);
        if i >= n || by_id.insert(i, item).is_some() {
            return Err(Error::Graph(format!(
                "{what} ids must be 0..{n} without repeats"
            )));
        }
    }
    Ok(by_id.into_values().collect())
}

impl TryFrom<Wire> for DecoratedGraph {
    type Error = Error;

    fn try_from(w: Wire) -> Result<Self> {
        let vertices = dense_ids(w.vertices, |v| v.id, "vertex")?
            .into_iter()
            .map(|v| Vertex {
                color: v.color,
                weight: v.weight,
                root: v.root,
            })
            .collect();
        let edges = dense_ids(w.edges, |e| e.id, "edge")?
            .into_iter()
            .map(|e| Edge {
                u: e.u,
                v: e.v,
                weight: e.weight,
            })
            .collect();
        DecoratedGraph::new(vertices, edges, w.gamma)
    }
}

/// Shorthand used by tests and examples: `(color, weight, root)` triples and
/// `(u, v, weight)` triples.
pub fn graph(
    vertices: &[(Color, u32, bool)],
    edges: &[(usize, usize, u32)],
    gamma: Option<&[usize]>,
) -> Result<DecoratedGraph> {
    DecoratedGraph::new(
        vertices
            .iter()
            .map(|&(color, weight, root)| Vertex {
                color,
                weight,
                root,
            })
            .collect(),
        edges
            .iter()
            .map(|&(u, v, weight)| Edge { u, v, weight })
            .collect(),
        gamma.map(<[usize]>::to_vec),
    )
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn json_schema_field_names() {
        let g = single_edge(2, true);
        assert_eq!(
            g.to_json(),
            r#"{"vertices":[{"id":0,"color":"w","weight":0,"root":false},{"id":1,"color":"b","weight":0,"root":false}],"edges":[{"id":0,"u":0,"v":1,"weight":2}],"gamma":[1,0]}"#
        );
        assert_eq!(DecoratedGraph::from_json(&g.to_json()).unwrap(), g);
        let s = sep_edge().to_json();
        assert!(s.ends_with(r#""gamma":null}"#));
        assert_eq!(DecoratedGraph::from_json(&s).unwrap(), sep_edge());
    }

    #[test]
    fn json_ids_may_come_in_any_order() {
        let text = r#"{"vertices":[{"id":1,"color":"b","weight":0,"root":true},{"id":0,"color":"w","weight":0,"root":false}],"edges":[{"id":0,"u":1,"v":0,"weight":2}],"gamma":null}"#;
        let g = DecoratedGraph::from_json(text).unwrap();
        assert_eq!(g.vertices()[0].color, Color::White);
        assert!(g.vertices()[1].root);
    }

    #[test]
    fn malformed_graphs_are_rejected() {
        let bad_ids = r#"{"vertices":[{"id":1,"color":"w","weight":0,"root":false}],"edges":[],"gamma":null}"#;
        assert!(matches!(
            DecoratedGraph::from_json(bad_ids),
            Err(Error::Graph(_))
        ));
        assert!(graph(&[(Color::White, 0, false)], &[(0, 1, 1)], None).is_err());
        assert!(graph(
            &[(Color::White, 0, false), (Color::Black, 0, false)],
            &[(0, 1, 0)],
            None
        )
        .is_err());
        assert!(single_edge(1, false).with_gamma(Some(vec![0, 0])).is_err());
    }

    #[test]
    fn dot_export_marks_roots_and_weights() {
        let dot = nonsep_path().to_dot("g");
        assert!(dot.contains("v0 [shape=doublecircle"));
        assert!(dot.contains("v1 [shape=circle"));
        assert!(dot.contains("v1 -- v2 [label=\"2\"]"));
    }

    #[test]
    fn relabeling_conjugates_gamma() {
        let g = nonsep_path();
        let h = g.relabeled(&[2, 0, 3, 1], &[2, 0, 1], true);
        let gamma = h.gamma().unwrap();
        for (v, &image) in gamma.iter().enumerate() {
            assert_eq!(h.vertices()[v].color.other(), h.vertices()[image].color);
        }
        assert_eq!(gamma[2], 1);
    }
}
