use wgalg::arith::{NumberFieldElem, Ring};
use wgalg::coxeter::{build_system, TypeTag};
use wgalg::wgraph::{dihedral_graph, fixture_catalog, module_to_wgraph, reflection_chain_graph, wgraph_to_module, WGraph};

#[test]
fn every_fixture_is_a_valid_wgraph() {
    for f in fixture_catalog() {
        let rep = f.graph.validate(&f.sys).unwrap();
        assert!(rep.valid, "{}", f.name);
    }
}

#[test]
fn json_round_trip_preserves_fixtures() {
    for f in fixture_catalog() {
        let back = WGraph::from_json(&f.sys, &f.graph.to_json(&f.sys)).unwrap();
        assert_eq!(back.labels, f.graph.labels, "{}", f.name);
        assert_eq!(back.weights, f.graph.weights, "{}", f.name);
    }
}

#[test]
fn module_of_a_wgraph_gives_the_wgraph_back() {
    let sys = build_system(TypeTag::I2(7)).unwrap();
    for a in 1..=3 {
        let g = dihedral_graph(&sys, a).unwrap();
        let m = wgraph_to_module(&sys, &g).unwrap();
        let back = module_to_wgraph(&m, None).unwrap();
        assert_eq!(back.labels, g.labels);
        assert_eq!(back.weights, g.weights);
    }
}

#[test]
fn duals_and_sums_stay_valid() {
    let sys = build_system(TypeTag::I2(5)).unwrap();
    let (g1, g2) = (dihedral_graph(&sys, 1).unwrap(), dihedral_graph(&sys, 2).unwrap());
    for g in [g1.dual(&sys), g1.direct_sum(&g2)] {
        assert!(g.validate(&sys).unwrap().valid);
        assert!(wgraph_to_module(&sys, &g).unwrap().check().unwrap().pass());
    }
}

#[test]
fn wrong_back_weight_is_rejected() {
    let sys = build_system(TypeTag::I2(5)).unwrap();
    let g = reflection_chain_graph(&sys, &[0b01, 0b10], &[NumberFieldElem::from_int(2)]);
    assert!(!g.validate(&sys).unwrap().valid);
    assert!(wgraph_to_module(&sys, &g).is_err());
}
