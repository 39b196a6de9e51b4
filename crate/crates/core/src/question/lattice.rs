use std::fmt::Write as _;

use serde::Serialize;

use super::{enumerate_complete_set, xnor_compose, Composition, Parity, QuestionIndex};
use crate::system::SystemKind;

/// Three pairwise compatible questions closed under the XNOR.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triangle {
    /// Vertex positions, ascending.
    pub vertices: [usize; 3],
    pub parity: Parity,
}

/// Compatibility graph of the complete set with its correlation triangles.
#[derive(Debug, Clone)]
pub struct QuestionGraph {
    system: SystemKind,
    vertices: Vec<QuestionIndex>,
    edges: Vec<(usize, usize)>,
    triangles: Vec<Triangle>,
}

#[derive(Serialize)]
struct TriangleJson<'a> {
    vertices: [&'a QuestionIndex; 3],
    parity: Parity,
}

#[derive(Serialize)]
struct GraphJson<'a> {
    kind: crate::system::GbitKind,
    n: usize,
    vertices: &'a [QuestionIndex],
    edges: Vec<[&'a QuestionIndex; 2]>,
    triangles: Vec<TriangleJson<'a>>,
}

/// Builds the lattice of triangles over the informationally complete set.
pub fn build_lattice(sys: SystemKind) -> QuestionGraph {
    let vertices = enumerate_complete_set(sys).members().to_vec();
    let mut edges = Vec::new();
    let mut triangles = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if !vertices[i].is_compatible(&vertices[j]).expect("same system") {
                continue;
            }
            edges.push((i, j));
            let composed = xnor_compose(&vertices[i].clone().positive(), &vertices[j].clone().positive())
                .expect("compatible pair composes");
            let Composition::Question(third) = composed else {
                continue;
            };
            let k = vertices.binary_search(&third.index).expect("complete set is closed");
            // count each triangle once, from its two smallest vertices
            if k > j {
                let parity = if third.sign.is_minus() { Parity::Odd } else { Parity::Even };
                triangles.push(Triangle { vertices: [i, j, k], parity });
            }
        }
    }
    QuestionGraph { system: sys, vertices, edges, triangles }
}

impl QuestionGraph {
    pub fn system(&self) -> SystemKind {
        self.system
    }

    pub fn vertices(&self) -> &[QuestionIndex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn vertex_position(&self, q: &QuestionIndex) -> Option<usize> {
        self.vertices.binary_search(q).ok()
    }

    /// Number of other questions compatible with vertex `v`.
    pub fn compatible_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Number of questions complementary to vertex `v`.
    pub fn complementary_degree(&self, v: usize) -> usize {
        self.vertices.len() - 1 - self.compatible_degree(v)
    }

    /// Number of triangles containing vertex `v`.
    pub fn triangle_degree(&self, v: usize) -> usize {
        self.triangles.iter().filter(|t| t.vertices.contains(&v)).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let graph = GraphJson {
            kind: self.system.kind,
            n: self.system.n,
            vertices: &self.vertices,
            edges: self.edges.iter().map(|&(a, b)| [&self.vertices[a], &self.vertices[b]]).collect(),
            triangles: self
                .triangles
                .iter()
                .map(|t| TriangleJson {
                    vertices: t.vertices.map(|v| &self.vertices[v]),
                    parity: t.parity,
                })
                .collect(),
        };
        serde_json::to_value(graph).expect("graph serializes")
    }

    /// Graphviz rendering. Each triangle is a subgraph colored red (odd) or
    /// green (even); compatibility edges outside any triangle are drawn plain.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}_{}\" {{", self.system.kind, self.system.n);
        out.push_str("  node [shape=circle];\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        let mut covered = vec![false; self.edges.len()];
        for (t_idx, t) in self.triangles.iter().enumerate() {
            let color = t.parity.color();
            let _ = writeln!(out, "  subgraph \"triangle_{t_idx}\" {{");
            let _ = writeln!(out, "    color={color};");
            let _ = writeln!(out, "    edge [color={color}];");
            let [a, b, c] = t.vertices;
            for (x, y) in [(a, b), (a, c), (b, c)] {
                if let Ok(e) = self.edges.binary_search(&(x, y)) {
                    covered[e] = true;
                }
                let _ = writeln!(out, "    \"{}\" -- \"{}\";", self.vertices[x], self.vertices[y]);
            }
            out.push_str("  }\n");
        }
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if !covered[e] {
                let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.vertices[a], self.vertices[b]);
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_qubit_lattice_shape() {
        let g = build_lattice(SystemKind::qubits(2));
        assert_eq!(g.vertices().len(), 15);
        assert_eq!(g.edges().len(), 45);
        assert_eq!(g.triangles().len(), 15);
        for v in 0..15 {
            assert_eq!(g.triangle_degree(v), 3);
            assert_eq!(g.compatible_degree(v), 6);
            assert_eq!(g.complementary_degree(v), 8);
        }
    }

    #[test]
    fn two_rebit_lattice_shape() {
        let g = build_lattice(SystemKind::rebits(2));
        assert_eq!(g.vertices().len(), 9);
        assert_eq!(g.edges().len(), 18);
        assert_eq!(g.triangles().len(), 6);
        for v in 0..9 {
            assert_eq!(g.triangle_degree(v), 2);
            assert_eq!(g.compatible_degree(v), 4);
            assert_eq!(g.complementary_degree(v), 4);
        }
    }

    #[test]
    fn bell_triangles_have_opposite_parity() {
        let g = build_lattice(SystemKind::qubits(2));
        let find = |names: [&str; 3]| {
            let pos: Vec<_> = names
                .iter()
                .map(|s| g.vertex_position(&QuestionIndex::parse(crate::GbitKind::Qubit, s).unwrap()).unwrap())
                .collect();
            g.triangles().iter().find(|t| pos.iter().all(|p| t.vertices.contains(p))).unwrap().parity
        };
        assert_eq!(find(["11", "22", "33"]), Parity::Odd);
        assert_eq!(find(["12", "21", "33"]), Parity::Even);
    }

    #[test]
    fn dot_colors_follow_parity() {
        let dot = build_lattice(SystemKind::qubits(2)).to_dot();
        assert_eq!(dot.matches("subgraph").count(), 15);
        assert!(dot.contains("edge [color=red]"));
        assert!(dot.contains("edge [color=green]"));
        assert!(dot.starts_with("graph \"qubit_2\" {"));
    }
}
