use serde_json::{json, Value};

use super::{CompatGraph, EdgeKind};

fn node(name: &str) -> String {
    format!("\"{name}\"")
}

/// DOT rendering: transversal pairs are drawn once as bold undirected edges,
/// inclusion edges as dashed arrows from the smaller subset to the larger.
pub fn compat_graph_dot(g: &CompatGraph) -> String {
    let sys = g.system();
    let mut out = String::new();
    out.push_str(&format!("graph \"{}\" {{\n", sys.tag));
    out.push_str("  node [shape=plaintext];\n");
    for v in sys.subsets() {
        out.push_str(&format!("  {};\n", node(&sys.subset_name(v))));
    }
    for (a, b) in g.transversal_pairs() {
        out.push_str(&format!("  {} -- {} [style=bold];\n", node(&sys.subset_name(a)), node(&sys.subset_name(b))));
    }
    for (head, tail) in g.inclusion_edges() {
        out.push_str(&format!("  {} -- {} [style=dashed, dir=forward];\n", node(&sys.subset_name(tail)), node(&sys.subset_name(head))));
    }
    out.push_str("}\n");
    out
}

pub fn compat_graph_json(g: &CompatGraph) -> Value {
    let sys = g.system();
    json!({
        "schema": 1,
        "type": sys.tag,
        "vertices": sys.subsets().map(|v| sys.subset_name(v)).collect::<Vec<_>>(),
        "edges": g.edges().iter().map(|e| json!({
            "head": sys.subset_name(e.head),
            "tail": sys.subset_name(e.tail),
            "kind": e.kind,
        })).collect::<Vec<_>>(),
        "transversal_pairs": g.edges().iter().filter(|e| e.kind == EdgeKind::Transversal && e.head < e.tail).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, TypeTag};

    #[test]
    fn dot_draws_each_transversal_pair_once() {
        let g = CompatGraph::new(&build_system(TypeTag::I2(5)).unwrap()).unwrap();
        let dot = compat_graph_dot(&g);
        assert_eq!(dot.matches("style=bold").count(), 1);
        assert!(dot.contains("\"∅\" -- \"1\" [style=dashed, dir=forward]"));
        let js = compat_graph_json(&g);
        assert_eq!(js["transversal_pairs"], 1);
    }
}
