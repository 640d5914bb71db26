//! Shipped fixture diagrams and graphs: braid-closure builders, the knots used
//! by the test and acceptance suites, and the transcribed reference table for
//! the knot 6_2.

use crate::coeff::{Color, TetLabels};
use crate::diagram::{ColoredGraph, GraphEdge, NodeKind, SingularDiagram};

/// One letter of a singular braid word acting on strands `pos` and `pos + 1`.
///
/// `Pos` is the crossing whose over-strand runs bottom-left to top-right,
/// `Neg` its inverse, `Sing` the rigid singular vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    Pos(usize),
    Neg(usize),
    Sing(usize),
}

/// Trace closure of a singular braid word: the top of every strand position
/// wraps around to its own bottom. Strand positions no letter touches close
/// into free circles.
pub fn braid_closure(strands: usize, word: &[Letter]) -> SingularDiagram {
    let mut kinds = Vec::with_capacity(word.len());
    let mut edges: Vec<[(usize, usize); 2]> = Vec::new();
    // Loose top end per strand position, and the dangling bottom end the
    // first letter on each position leaves open for the closure arc.
    let mut current: Vec<Option<(usize, usize)>> = vec![None; strands];
    let mut start: Vec<Option<(usize, usize)>> = vec![None; strands];

    for letter in word {
        let (pos, kind, slots) = match *letter {
            // slots = (bottom-left, bottom-right, top-right, top-left)
            Letter::Pos(p) => (p, NodeKind::Crossing, (0, 1, 2, 3)),
            Letter::Neg(p) => (p, NodeKind::Crossing, (3, 0, 1, 2)),
            Letter::Sing(p) => (p, NodeKind::Singular, (0, 1, 2, 3)),
        };
        assert!(pos + 1 < strands, "letter position out of range");
        let node = kinds.len();
        kinds.push(kind);
        let (bl, br, tr, tl) = slots;
        for (lane, slot) in [(pos, bl), (pos + 1, br)] {
            match current[lane] {
                Some(end) => edges.push([end, (node, slot)]),
                None => start[lane] = Some((node, slot)),
            }
        }
        current[pos] = Some((node, tl));
        current[pos + 1] = Some((node, tr));
    }

    let mut free_circles = 0;
    for lane in 0..strands {
        match (current[lane], start[lane]) {
            (Some(top), Some(bottom)) => edges.push([top, bottom]),
            (None, None) => free_circles += 1,
            _ => unreachable!("a touched lane has both ends"),
        }
    }
    SingularDiagram::new(kinds, edges, free_circles).expect("braid closures are planar")
}

/// The zero-crossing unknot.
pub fn unknot() -> SingularDiagram {
    SingularDiagram::new(Vec::new(), Vec::new(), 1).unwrap()
}

/// Unknot with a single kink. The two chiralities differ by which adjacent
/// slot pair the small loop joins.
pub fn kinked_unknot(positive: bool) -> SingularDiagram {
    let edges = if positive {
        vec![[(0, 2), (0, 3)], [(0, 0), (0, 1)]]
    } else {
        vec![[(0, 1), (0, 2)], [(0, 3), (0, 0)]]
    };
    SingularDiagram::new(vec![NodeKind::Crossing], edges, 0).unwrap()
}

/// Trefoil as the trace closure of three equal crossings on two strands.
pub fn trefoil() -> SingularDiagram {
    braid_closure(2, &[Letter::Pos(0), Letter::Pos(0), Letter::Pos(0)])
}

/// The knot 6_2 as a 3-braid closure.
pub fn six_two() -> SingularDiagram {
    use Letter::*;
    braid_closure(3, &[Pos(0), Pos(0), Pos(0), Neg(1), Pos(0), Neg(1)])
}

/// Regular-isotopy move pairs: each pair of diagrams presents the same
/// (singular) link, so their invariants must agree exactly.
pub fn reidemeister_pairs() -> Vec<(&'static str, SingularDiagram, SingularDiagram)> {
    use Letter::*;
    vec![
        (
            "RII",
            braid_closure(2, &[Pos(0), Neg(0)]),
            braid_closure(2, &[]),
        ),
        (
            "RIII",
            braid_closure(3, &[Pos(0), Pos(1), Pos(0)]),
            braid_closure(3, &[Pos(1), Pos(0), Pos(1)]),
        ),
        (
            "RIV",
            braid_closure(3, &[Sing(0), Pos(1), Pos(0)]),
            braid_closure(3, &[Pos(1), Pos(0), Sing(1)]),
        ),
        (
            "RV",
            braid_closure(2, &[Sing(0), Pos(0)]),
            braid_closure(2, &[Pos(0), Sing(0)]),
        ),
    ]
}

/// Theta graph with edge colors `(a, b, c)`.
pub fn theta_graph(a: Color, b: Color, c: Color) -> ColoredGraph {
    ColoredGraph {
        vertex_count: 2,
        edges: vec![
            GraphEdge { ends: [(0, 0), (1, 2)], color: a },
            GraphEdge { ends: [(0, 1), (1, 1)], color: b },
            GraphEdge { ends: [(0, 2), (1, 0)], color: c },
        ],
        free_loops: vec![],
    }
}

/// Tetrahedron network for the given labels: outer triangle `P1 P2 P3` with
/// edges `d, f, e`, center `P4` with spokes `a, b, c`.
pub fn tetrahedron_graph(labels: &TetLabels) -> ColoredGraph {
    let [a, d, e, f, c, b] = labels.labels;
    ColoredGraph {
        vertex_count: 4,
        edges: vec![
            GraphEdge { ends: [(0, 1), (3, 0)], color: a },
            GraphEdge { ends: [(1, 1), (3, 1)], color: b },
            GraphEdge { ends: [(2, 1), (3, 2)], color: c },
            GraphEdge { ends: [(0, 0), (1, 2)], color: d },
            GraphEdge { ends: [(0, 2), (2, 0)], color: e },
            GraphEdge { ends: [(1, 0), (2, 2)], color: f },
        ],
        free_loops: vec![],
    }
}

/// Cube graph (all faces 4-gons) with every edge the same color; the smallest
/// closed trivalent graph that forces the recoupling step of the reducer.
pub fn cube_graph(color: Color) -> ColoredGraph {
    let mk = |ends| GraphEdge { ends, color };
    ColoredGraph {
        vertex_count: 8,
        edges: vec![
            mk([(0, 0), (1, 2)]), // outer ring
            mk([(1, 0), (2, 2)]),
            mk([(2, 0), (3, 2)]),
            mk([(3, 0), (0, 2)]),
            mk([(4, 0), (5, 1)]), // inner ring
            mk([(5, 0), (6, 2)]),
            mk([(6, 1), (7, 0)]),
            mk([(4, 1), (7, 2)]),
            mk([(0, 1), (4, 2)]), // spokes
            mk([(1, 1), (5, 2)]),
            mk([(2, 1), (6, 0)]),
            mk([(3, 1), (7, 1)]),
        ],
        free_loops: vec![],
    }
}

/// The colored Jones table for the knot 6_2, one row per color `n`, each row
/// tail-normalized and transcribed through its last printed power of `q`.
/// `complete` marks the one row printed in full.
pub struct SixTwoRow {
    pub n: u32,
    pub coeffs: Vec<i64>,
    pub complete: bool,
}

pub fn six_two_table() -> Vec<SixTwoRow> {
    let row = |n, coeffs: &[i64], complete| SixTwoRow {
        n,
        coeffs: coeffs.to_vec(),
        complete,
    };
    vec![
        row(2, &[1, -2, 2, -2, 2, -1, 1], true),
        row(3, &[1, -2, 0, 4, -5, 0, 6, -6, 0, 6], false),
        row(4, &[1, -2, 0, 2, 1, -4, -2, 7], false),
        row(5, &[1, -2, 0, 2, -1, 2, -6, 2], false),
        row(6, &[1, -2, 0, 2, -1, 0, 0, -2, 1, 5], false),
        row(7, &[1, -2, 0, 2, -1, 0, -2, 4, -3, 0, 7], false),
        row(8, &[1, -2, 0, 2, -1, 0, -2, 2, 3, -4], false),
    ]
}

/// Leading coefficients of the tail of 6_2 as printed.
pub fn six_two_tail_prefix() -> Vec<i64> {
    vec![1, -2, 0, 2, -1, 0, -2, 2]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::validate_graph;

    #[test]
    fn builders_produce_planar_rotation_systems() {
        // SingularDiagram::new runs the genus check; graphs checked here.
        trefoil();
        six_two();
        kinked_unknot(true);
        kinked_unknot(false);
        for (_, a, b) in reidemeister_pairs() {
            drop((a, b));
        }
        assert!(validate_graph(&theta_graph(1, 1, 2)).is_empty());
        assert!(validate_graph(&tetrahedron_graph(&TetLabels::new(2, 1, 1, 1, 2, 2))).is_empty());
        assert!(validate_graph(&cube_graph(2)).is_empty());
    }

    #[test]
    fn six_two_has_six_crossings_one_component() {
        let d = six_two();
        assert_eq!(d.node_count(), 6);
        assert_eq!(d.crossing_count(), 6);
        assert!(!d.has_singular());
    }

    #[test]
    fn braid_closure_counts() {
        let d = braid_closure(2, &[Letter::Sing(0)]);
        assert_eq!(d.node_count(), 1);
        assert_eq!(d.edges.len(), 2);
        let d = braid_closure(3, &[Letter::Pos(0)]);
        assert_eq!(d.free_circles, 1, "untouched lane closes into a circle");
    }
}
