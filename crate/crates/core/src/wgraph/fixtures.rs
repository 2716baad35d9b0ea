use super::{WGraph, WGraphError};
use crate::arith::{sigma, NumberFieldElem, Ring};
use crate::coxeter::{build_system, irr_data, CoxeterError, CoxeterSystem, TypeTag};

/// A named W-graph for tests, examples and the CLI.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub sys: CoxeterSystem,
    pub graph: WGraph,
}

/// One vertex with label `label` and no edges.
pub fn single_vertex_graph(sys: &CoxeterSystem, label: u32) -> WGraph {
    WGraph::discrete(sys, vec![format!("{{{}}}", sys.subset_name(label))], vec![label])
}

/// A path of vertices labelled by `chain`. The edge chain[k] ← chain[k+1]
/// has weight 1 and the reverse edge has weight `back[k]`, each on every
/// generator the definition allows.
pub fn reflection_chain_graph(sys: &CoxeterSystem, chain: &[u32], back: &[NumberFieldElem]) -> WGraph {
    let mut g = WGraph::discrete(sys, chain.iter().map(|&l| format!("{{{}}}", sys.subset_name(l))).collect(), chain.to_vec());
    for k in 0..chain.len().saturating_sub(1) {
        let (a, b) = (chain[k], chain[k + 1]);
        for s in 0..sys.rank() {
            if a >> s & 1 == 1 && b >> s & 1 == 0 {
                g.weights[s].set(k, k + 1, NumberFieldElem::one());
            }
            if b >> s & 1 == 1 && a >> s & 1 == 0 {
                g.weights[s].set(k + 1, k, back[k].clone());
            }
        }
    }
    g
}

/// The two-vertex I2(m) graph x{1}, y{2} with m¹_xy = 1 and m²_yx = σ_a.
pub fn dihedral_graph(sys: &CoxeterSystem, a: u32) -> Result<WGraph, WGraphError> {
    let TypeTag::I2(m) = sys.tag else {
        return Err(CoxeterError::Unsupported(sys.tag.to_string()).into());
    };
    let s = sigma(a, m).map_err(|e| CoxeterError::InvalidParam(e.to_string()))?.in_ctx(&sys.field());
    let mut g = reflection_chain_graph(sys, &[0b01, 0b10], &[s]);
    g.vertices = vec!["x".into(), "y".into()];
    Ok(g)
}

/// Every fixture used by the relator-vanishing checks: trivial and sign
/// graphs, the one-vertex graphs of A1^n, the two-vertex dihedral graphs
/// (and the one-vertex ε graphs for even m), the chain graphs of every A3
/// component, the reflection graphs of A4 and B3, and their duals.
pub fn fixture_catalog() -> Vec<Fixture> {
    let one = NumberFieldElem::one;
    let mut out = Vec::new();
    let mut push = |name: String, sys: &CoxeterSystem, graph: WGraph| out.push(Fixture { name, sys: sys.clone(), graph });
    let tags = [TypeTag::A1xN(1), TypeTag::A1xN(2), TypeTag::A1xN(3), TypeTag::I2(3), TypeTag::I2(4), TypeTag::I2(5), TypeTag::I2(6), TypeTag::I2(7), TypeTag::I2(8), TypeTag::A3, TypeTag::B3, TypeTag::A4];
    for tag in tags {
        let sys = build_system(tag).expect("named system");
        push(format!("{tag} trivial"), &sys, single_vertex_graph(&sys, 0));
        push(format!("{tag} sign"), &sys, single_vertex_graph(&sys, sys.full_set()));
        match tag {
            TypeTag::A1xN(_) => {
                for l in sys.subsets().filter(|&l| l != 0 && l != sys.full_set()) {
                    push(format!("{tag} chi_{}", sys.subset_name(l)), &sys, single_vertex_graph(&sys, l));
                }
            }
            TypeTag::I2(m) => {
                for a in 1..=(m - 1) / 2 {
                    push(format!("{tag} lambda_{a}"), &sys, dihedral_graph(&sys, a).expect("dihedral fixture"));
                }
                if m % 2 == 0 {
                    push(format!("{tag} eps_1"), &sys, single_vertex_graph(&sys, 0b01));
                    push(format!("{tag} eps_2"), &sys, single_vertex_graph(&sys, 0b10));
                }
            }
            TypeTag::A3 => {
                let irr = irr_data(&sys).expect("A3 characters");
                for (label, comp) in irr.labels.iter().zip(&irr.components) {
                    if comp.len() > 1 {
                        let g = reflection_chain_graph(&sys, comp, &vec![one(); comp.len() - 1]);
                        push(format!("A3 {label}"), &sys, g.clone());
                        push(format!("A3 {label} dual"), &sys, g.dual(&sys));
                    }
                }
            }
            TypeTag::A4 => {
                let g = reflection_chain_graph(&sys, &[0b0001, 0b0010, 0b0100, 0b1000], &[one(), one(), one()]);
                push("A4 (4,1)".into(), &sys, g.clone());
                push("A4 (4,1) dual".into(), &sys, g.dual(&sys));
            }
            TypeTag::B3 => {
                let g = reflection_chain_graph(&sys, &[0b001, 0b010, 0b100], &[NumberFieldElem::from_int(2), one()]);
                push("B3 reflection".into(), &sys, g.clone());
                push("B3 reflection dual".into(), &sys, g.dual(&sys));
            }
            _ => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_validates() {
        for f in fixture_catalog() {
            let r = f.graph.validate(&f.sys).unwrap();
            assert!(r.valid, "{}: {:?}", f.name, r);
            assert!(r.warnings.is_empty(), "{}", f.name);
        }
    }

    #[test]
    fn odd_dihedral_one_vertex_labels_fail() {
        let sys = build_system(TypeTag::I2(5)).unwrap();
        assert!(!single_vertex_graph(&sys, 0b01).validate(&sys).unwrap().valid);
    }
}
