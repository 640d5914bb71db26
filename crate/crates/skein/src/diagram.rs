//! Data model, parser, and validator for singular link diagrams and colored
//! trivalent graphs with planar rotation systems.
//!
//! Nodes of a [`SingularDiagram`] are 4-valent with slots `0..4` in
//! counterclockwise rotation order. At a crossing the strand through slots
//! `(0,2)` passes over the strand through `(1,3)`, and the Kauffman
//! A-smoothing joins `0-1` and `2-3`. Singular vertices are rigid: the
//! rotation order is semantic.
//!
//! Planarity is a property of the rotation system: every connected component
//! must satisfy `V - E + F = 2` with faces counted by tracing.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeff::{admissible, Color};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dangling edge: {0}")]
    DanglingEdge(String),
    #[error("rotation system is not planar: {0}")]
    NotPlanar(String),
}

// ---------------------------------------------------------------------------
// Rotation maps (shared face-tracing machinery)
// ---------------------------------------------------------------------------

/// A rotation system on `nodes * valence` darts; dart `n * valence + s` sits
/// at node `n` in slot `s`, slots in counterclockwise order.
pub(crate) struct RotationMap {
    valence: usize,
    nodes: usize,
    /// twin[d] is the dart at the other end of d's edge.
    twin: Vec<usize>,
}

impl RotationMap {
    /// Builds from edge endpoints `(node, slot)`; every slot must be used
    /// exactly once.
    pub(crate) fn new(
        nodes: usize,
        valence: usize,
        ends: impl Iterator<Item = ((usize, usize), (usize, usize))>,
    ) -> Result<Self, String> {
        let n_darts = nodes * valence;
        let mut twin = vec![usize::MAX; n_darts];
        for ((n1, s1), (n2, s2)) in ends {
            for &(n, s) in &[(n1, s1), (n2, s2)] {
                if n >= nodes || s >= valence {
                    return Err(format!("endpoint ({n},{s}) out of range"));
                }
            }
            let d1 = n1 * valence + s1;
            let d2 = n2 * valence + s2;
            if d1 == d2 {
                return Err(format!("edge joins slot ({n1},{s1}) to itself"));
            }
            if twin[d1] != usize::MAX || twin[d2] != usize::MAX {
                return Err(format!("slot ({n1},{s1}) or ({n2},{s2}) used twice"));
            }
            twin[d1] = d2;
            twin[d2] = d1;
        }
        if let Some(d) = twin.iter().position(|&t| t == usize::MAX) {
            return Err(format!(
                "slot ({},{}) is unused",
                d / valence,
                d % valence
            ));
        }
        Ok(RotationMap {
            valence,
            nodes,
            twin,
        })
    }

    fn next_at_node(&self, dart: usize) -> usize {
        let node = dart / self.valence;
        node * self.valence + (dart % self.valence + 1) % self.valence
    }

    /// Face successor: cross the edge, then turn to the next dart in rotation.
    fn face_next(&self, dart: usize) -> usize {
        self.next_at_node(self.twin[dart])
    }

    /// Checks `V - E + F = 2` on every connected component.
    pub(crate) fn genus_zero(&self) -> Result<(), String> {
        if self.nodes == 0 {
            return Ok(());
        }
        // Component labels via twin + same-node adjacency.
        let mut comp = vec![usize::MAX; self.nodes];
        let mut n_comp = 0;
        for start in 0..self.nodes {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = n_comp;
            while let Some(n) = stack.pop() {
                for s in 0..self.valence {
                    let m = self.twin[n * self.valence + s] / self.valence;
                    if comp[m] == usize::MAX {
                        comp[m] = n_comp;
                        stack.push(m);
                    }
                }
            }
            n_comp += 1;
        }
        let mut v = vec![0i64; n_comp];
        let mut e = vec![0i64; n_comp];
        let mut f = vec![0i64; n_comp];
        for n in 0..self.nodes {
            v[comp[n]] += 1;
        }
        for d in 0..self.twin.len() {
            if d < self.twin[d] {
                e[comp[d / self.valence]] += 1;
            }
        }
        let mut seen = vec![false; self.twin.len()];
        for d0 in 0..self.twin.len() {
            if seen[d0] {
                continue;
            }
            f[comp[d0 / self.valence]] += 1;
            let mut d = d0;
            loop {
                seen[d] = true;
                d = self.face_next(d);
                if d == d0 {
                    break;
                }
            }
        }
        for c in 0..n_comp {
            if v[c] - e[c] + f[c] != 2 {
                return Err(format!(
                    "component {c}: V - E + F = {} - {} + {} != 2",
                    v[c], e[c], f[c]
                ));
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Singular link diagrams
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Crossing,
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularDiagram {
    pub kinds: Vec<NodeKind>,
    /// Edge endpoints `(node, slot)` with slots `0..4`.
    pub edges: Vec<[(usize, usize); 2]>,
    pub free_circles: u32,
}

#[derive(Serialize, Deserialize)]
struct NodeJson {
    id: i64,
    kind: NodeKind,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    id: i64,
    ends: [[i64; 2]; 2],
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    #[serde(default)]
    free_circles: u32,
    #[serde(default)]
    nodes: Vec<NodeJson>,
    #[serde(default)]
    edges: Vec<EdgeJson>,
}

impl SingularDiagram {
    pub fn new(
        kinds: Vec<NodeKind>,
        edges: Vec<[(usize, usize); 2]>,
        free_circles: u32,
    ) -> Result<Self, DiagramError> {
        let d = SingularDiagram {
            kinds,
            edges,
            free_circles,
        };
        d.rotation_map()?.genus_zero().map_err(DiagramError::NotPlanar)?;
        Ok(d)
    }

    pub fn node_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.kinds
            .iter()
            .filter(|k| matches!(k, NodeKind::Crossing))
            .count()
    }

    pub fn has_singular(&self) -> bool {
        self.kinds.iter().any(|k| matches!(k, NodeKind::Singular))
    }

    pub(crate) fn rotation_map(&self) -> Result<RotationMap, DiagramError> {
        RotationMap::new(
            self.kinds.len(),
            4,
            self.edges.iter().map(|e| (e[0], e[1])),
        )
        .map_err(DiagramError::DanglingEdge)
    }

    /// Mirror image: rotates every crossing's slots by one, which swaps the
    /// over- and under-strand everywhere. Singular vertices are unchanged.
    pub fn mirror(&self) -> SingularDiagram {
        let mut edges = self.edges.clone();
        for e in edges.iter_mut() {
            for end in e.iter_mut() {
                if matches!(self.kinds[end.0], NodeKind::Crossing) {
                    end.1 = (end.1 + 1) % 4;
                }
            }
        }
        SingularDiagram {
            kinds: self.kinds.clone(),
            edges,
            free_circles: self.free_circles,
        }
    }

    pub fn to_json(&self) -> String {
        let doc = DiagramJson {
            free_circles: self.free_circles,
            nodes: self
                .kinds
                .iter()
                .enumerate()
                .map(|(i, &kind)| NodeJson { id: i as i64, kind })
                .collect(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(i, e)| EdgeJson {
                    id: i as i64,
                    ends: [
                        [e[0].0 as i64, e[0].1 as i64],
                        [e[1].0 as i64, e[1].1 as i64],
                    ],
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }
}

/// Parses and validates the JSON diagram schema.
pub fn parse_diagram(text: &[u8]) -> Result<SingularDiagram, DiagramError> {
    let doc: DiagramJson =
        serde_json::from_slice(text).map_err(|e| DiagramError::Parse(e.to_string()))?;
    let mut ids = Vec::with_capacity(doc.nodes.len());
    let mut kinds = Vec::with_capacity(doc.nodes.len());
    for n in &doc.nodes {
        if ids.contains(&n.id) {
            return Err(DiagramError::Parse(format!("duplicate node id {}", n.id)));
        }
        ids.push(n.id);
        kinds.push(n.kind);
    }
    let lookup = |id: i64, slot: i64| -> Result<(usize, usize), DiagramError> {
        let node = ids
            .iter()
            .position(|&x| x == id)
            .ok_or_else(|| DiagramError::Parse(format!("edge references unknown node {id}")))?;
        if !(0..4).contains(&slot) {
            return Err(DiagramError::Parse(format!("slot {slot} out of range")));
        }
        Ok((node, slot as usize))
    };
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in &doc.edges {
        edges.push([
            lookup(e.ends[0][0], e.ends[0][1])?,
            lookup(e.ends[1][0], e.ends[1][1])?,
        ]);
    }
    SingularDiagram::new(kinds, edges, doc.free_circles)
}

// ---------------------------------------------------------------------------
// Colored trivalent graphs
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub ends: [(usize, usize); 2],
    pub color: Color,
}

/// A planar colored trivalent graph plus free circles. Vertices are implicit:
/// `0..vertex_count`, each with slots `0..3` in counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColoredGraph {
    pub vertex_count: usize,
    pub edges: Vec<GraphEdge>,
    pub free_loops: Vec<Color>,
}

/// A formal linear combination of colored graphs.
#[derive(Debug, Clone, Default)]
pub struct GraphSum {
    pub terms: Vec<(crate::qpoly::RationalFn, ColoredGraph)>,
}

impl GraphSum {
    pub fn push(&mut self, coef: crate::qpoly::RationalFn, graph: ColoredGraph) {
        if !coef.is_zero() {
            self.terms.push((coef, graph));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphViolation {
    /// Vertex whose three incident colors are not admissible.
    InadmissibleVertex { vertex: usize, colors: (Color, Color, Color) },
    /// Slot usage or rotation-genus failure.
    Structural(String),
}

impl ColoredGraph {
    pub fn circle(color: Color) -> Self {
        ColoredGraph {
            vertex_count: 0,
            edges: Vec::new(),
            free_loops: vec![color],
        }
    }

    /// Colors at vertex `v` in slot order.
    pub fn vertex_colors(&self, v: usize) -> Option<(Color, Color, Color)> {
        let mut c = [None; 3];
        for e in &self.edges {
            for &(n, s) in &e.ends {
                if n == v && s < 3 {
                    c[s] = Some(e.color);
                }
            }
        }
        Some((c[0]?, c[1]?, c[2]?))
    }

    pub(crate) fn rotation_map(&self) -> Result<RotationMap, String> {
        RotationMap::new(
            self.vertex_count,
            3,
            self.edges.iter().map(|e| (e.ends[0], e.ends[1])),
        )
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct V {
            id: i64,
        }
        #[derive(Serialize)]
        struct E {
            id: i64,
            color: Color,
            ends: [[i64; 2]; 2],
        }
        #[derive(Serialize)]
        struct G {
            free_loops: Vec<Color>,
            vertices: Vec<V>,
            edges: Vec<E>,
        }
        let doc = G {
            free_loops: self.free_loops.clone(),
            vertices: (0..self.vertex_count).map(|i| V { id: i as i64 }).collect(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(i, e)| E {
                    id: i as i64,
                    color: e.color,
                    ends: [
                        [e.ends[0].0 as i64, e.ends[0].1 as i64],
                        [e.ends[1].0 as i64, e.ends[1].1 as i64],
                    ],
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }
}

/// Parses the colored-graph JSON schema (no validation beyond structure; run
/// [`validate_graph`] before evaluating).
pub fn parse_graph(text: &[u8]) -> Result<ColoredGraph, DiagramError> {
    #[derive(Deserialize)]
    struct E {
        #[allow(dead_code)]
        #[serde(default)]
        id: i64,
        color: Color,
        ends: [[i64; 2]; 2],
    }
    #[derive(Deserialize)]
    struct V {
        id: i64,
    }
    #[derive(Deserialize)]
    struct G {
        #[serde(default)]
        free_loops: Vec<Color>,
        #[serde(default)]
        vertices: Vec<V>,
        #[serde(default)]
        edges: Vec<E>,
    }
    let doc: G = serde_json::from_slice(text).map_err(|e| DiagramError::Parse(e.to_string()))?;
    let ids: Vec<i64> = doc.vertices.iter().map(|v| v.id).collect();
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in &doc.edges {
        let mut ends = [(0usize, 0usize); 2];
        for (k, end) in e.ends.iter().enumerate() {
            let v = ids
                .iter()
                .position(|&x| x == end[0])
                .ok_or_else(|| DiagramError::Parse(format!("unknown vertex {}", end[0])))?;
            if !(0..3).contains(&end[1]) {
                return Err(DiagramError::Parse(format!("slot {} out of range", end[1])));
            }
            ends[k] = (v, end[1] as usize);
        }
        edges.push(GraphEdge {
            ends,
            color: e.color,
        });
    }
    Ok(ColoredGraph {
        vertex_count: doc.vertices.len(),
        edges,
        free_loops: doc.free_loops,
    })
}

/// Returns all violations; an empty list means the graph is evaluable.
pub fn validate_graph(g: &ColoredGraph) -> Vec<GraphViolation> {
    let mut out = Vec::new();
    match g.rotation_map() {
        Err(msg) => out.push(GraphViolation::Structural(msg)),
        Ok(map) => {
            if let Err(msg) = map.genus_zero() {
                out.push(GraphViolation::Structural(msg));
            }
        }
    }
    for v in 0..g.vertex_count {
        if let Some(colors) = g.vertex_colors(v) {
            if !admissible(colors.0, colors.1, colors.2) {
                out.push(GraphViolation::InadmissibleVertex { vertex: v, colors });
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_st1_smallest_singular_knot() {
        let text = br#"{
            "free_circles": 0,
            "nodes": [{"id": 0, "kind": "singular"}],
            "edges": [
                {"id": 0, "ends": [[0, 3], [0, 0]]},
                {"id": 1, "ends": [[0, 2], [0, 1]]}
            ]
        }"#;
        let d = parse_diagram(text).unwrap();
        assert_eq!(d.node_count(), 1);
        assert_eq!(d.edges.len(), 2);
        assert!(d.has_singular());
    }

    #[test]
    fn parse_unknot_as_free_circle() {
        let d = parse_diagram(br#"{"free_circles": 1, "nodes": [], "edges": []}"#).unwrap();
        assert_eq!(d.free_circles, 1);
        assert_eq!(d.node_count(), 0);
    }

    #[test]
    fn unused_slot_is_dangling() {
        let text = br#"{
            "nodes": [{"id": 0, "kind": "crossing"}],
            "edges": [{"id": 0, "ends": [[0, 0], [0, 1]]}]
        }"#;
        assert!(matches!(
            parse_diagram(text),
            Err(DiagramError::DanglingEdge(_))
        ));
    }

    #[test]
    fn diagram_round_trip() {
        let d = fixtures::trefoil();
        let back = parse_diagram(d.to_json().as_bytes()).unwrap();
        assert_eq!(d, back);
        let k = fixtures::kinked_unknot(true);
        assert_eq!(parse_diagram(k.to_json().as_bytes()).unwrap(), k);
    }

    #[test]
    fn graph_round_trip_and_validation() {
        let g = fixtures::theta_graph(1, 1, 2);
        assert!(validate_graph(&g).is_empty());
        let back = parse_graph(g.to_json().as_bytes()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn theta_graph_parity_violation() {
        let g = fixtures::theta_graph(1, 1, 3);
        let v = validate_graph(&g);
        assert_eq!(v.len(), 2, "both endpoints are inadmissible: {v:?}");
        assert!(matches!(v[0], GraphViolation::InadmissibleVertex { .. }));
    }

    #[test]
    fn nonplanar_rotation_detected() {
        // Theta graph with the same rotation at both endpoints embeds on the
        // torus, not the sphere.
        let g = ColoredGraph {
            vertex_count: 2,
            edges: vec![
                GraphEdge { ends: [(0, 0), (1, 0)], color: 2 },
                GraphEdge { ends: [(0, 1), (1, 1)], color: 2 },
                GraphEdge { ends: [(0, 2), (1, 2)], color: 2 },
            ],
            free_loops: vec![],
        };
        let v = validate_graph(&g);
        assert!(v.iter().any(|x| matches!(x, GraphViolation::Structural(_))));
    }

    #[test]
    fn mirror_swaps_crossings_only() {
        let d = fixtures::trefoil();
        let m = d.mirror();
        assert_ne!(d, m);
        assert_eq!(m.mirror().mirror(), m);
    }
}
