use serde::Serialize;
use serde_json::{json, Value};

use super::{DecompError, IdempotentFamily, Scalar};
use crate::omega::QuotientAlgebra;
use crate::pathalg::CompatGraph;

/// A vertex F_I^λ of the refined compatibility graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefinedVertex {
    pub label: String,
    pub subset: String,
}

/// F_I^λ X_IJ F_J^μ ≠ 0 for the compatibility edge I ← J.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefinedEdge {
    pub head: usize,
    pub tail: usize,
    /// Both F_I^λ X_IJ F_J^λ and F_J^λ X_JI F_I^λ are nonzero.
    pub internal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RefinedGraph {
    #[serde(rename = "type")]
    pub tag: String,
    pub vertices: Vec<RefinedVertex>,
    pub edges: Vec<RefinedEdge>,
}

/// Splits every vertex I of the compatibility graph into the F_I^λ and keeps
/// the edges whose sandwich F_I^λ X_IJ F_J^μ survives.
pub fn refined_graph<F: Scalar>(alg: &QuotientAlgebra, fam: &IdempotentFamily<F>) -> Result<RefinedGraph, DecompError> {
    let sys = alg.system();
    let compat = CompatGraph::new(sys).map_err(crate::omega::OmegaError::from)?;
    let mut vertices = Vec::new();
    let mut parts = Vec::new();
    for c in &fam.components {
        for (&v, p) in c.vertices.iter().zip(&c.parts) {
            vertices.push(RefinedVertex { label: c.label.clone(), subset: sys.subset_name(v) });
            parts.push((v, p));
        }
    }
    let mut raw = Vec::new();
    for e in compat.edges() {
        let x = alg.edge::<F>(e.head, e.tail)?;
        for (h, (hv, hp)) in parts.iter().enumerate().filter(|(_, p)| p.0 == e.head) {
            let left = alg.mul(hp, &x);
            for (t, (tv, tp)) in parts.iter().enumerate().filter(|(_, p)| p.0 == e.tail) {
                debug_assert_eq!((*hv, *tv), (e.head, e.tail));
                if !alg.mul(&left, tp).is_zero() {
                    raw.push((h, t));
                }
            }
        }
    }
    let mut edges = Vec::new();
    for &(h, t) in &raw {
        let internal = vertices[h].label == vertices[t].label && raw.contains(&(t, h));
        if internal && h > t {
            continue;
        }
        edges.push(RefinedEdge { head: h, tail: t, internal });
    }
    Ok(RefinedGraph { tag: sys.tag.to_string(), vertices, edges })
}

impl RefinedGraph {
    fn node(&self, i: usize) -> String {
        let v = &self.vertices[i];
        format!("\"{} @ {}\"", v.label, v.subset)
    }

    /// DOT rendering: one cluster per character, internal transversal pairs
    /// bold and undirected, every other surviving edge a thin arrow from tail
    /// to head.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph \"{} refined\" {{\n  node [shape=plaintext];\n", self.tag);
        let mut labels: Vec<&str> = Vec::new();
        for v in &self.vertices {
            if !labels.contains(&v.label.as_str()) {
                labels.push(&v.label);
            }
        }
        for (k, l) in labels.iter().enumerate() {
            out.push_str(&format!("  subgraph cluster_{k} {{\n    label=\"{l}\";\n"));
            for i in (0..self.vertices.len()).filter(|&i| self.vertices[i].label == *l) {
                out.push_str(&format!("    {} [label=\"{}\"];\n", self.node(i), self.vertices[i].subset));
            }
            out.push_str("  }\n");
        }
        for e in &self.edges {
            let style = if e.internal { "style=bold, dir=none" } else { "arrowsize=0.6" };
            out.push_str(&format!("  {} -> {} [{style}];\n", self.node(e.tail), self.node(e.head)));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "type": self.tag,
            "vertices": self.vertices,
            "edges": self.edges,
        })
    }

    /// Number of vertices in the component of `label`.
    pub fn component_size(&self, label: &str) -> usize {
        self.vertices.iter().filter(|v| v.label == label).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, TypeTag};
    use crate::decomp::build_family;
    use crate::omega::{compute_quotient, QuotientOptions};

    #[test]
    fn i2_6_has_two_single_vertex_epsilon_components() {
        let alg = compute_quotient(&build_system(TypeTag::I2(6)).unwrap(), &QuotientOptions::default()).unwrap();
        let g = refined_graph(&alg, &build_family(&alg).unwrap()).unwrap();
        assert_eq!(g.component_size("ε_1"), 1);
        assert_eq!(g.component_size("ε_2"), 1);
        assert_eq!(g.component_size("λ_1"), 2);
        let l1: Vec<usize> = (0..g.vertices.len()).filter(|&i| g.vertices[i].label == "λ_1").collect();
        assert!(g.edges.iter().any(|e| e.internal && l1.contains(&e.head) && l1.contains(&e.tail)));
        assert!(g.to_dot().contains("style=bold"));
    }
}
