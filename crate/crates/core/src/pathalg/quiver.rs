use std::collections::HashMap;

use serde::Serialize;

use super::PathError;
use crate::coxeter::CoxeterSystem;

/// An arrow `head ← tail` of the full quiver, tagged by a generator in
/// `head \ tail`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub head: u32,
    pub tail: u32,
    pub tag: usize,
}

/// The full quiver Q: one vertex per subset of S and |I \ J| arrows I ← J.
#[derive(Clone, Debug)]
pub struct Quiver {
    sys: CoxeterSystem,
    arrows: Vec<Arrow>,
    by_head: Vec<Vec<u32>>,
    index: HashMap<(u32, u32, usize), u32>,
}

impl Quiver {
    /// Arrows are numbered by head, then tail, then tag.
    pub fn full(sys: &CoxeterSystem) -> Result<Self, PathError> {
        if sys.rank() > 5 {
            return Err(PathError::RankTooLarge(sys.rank()));
        }
        let nv = 1usize << sys.rank();
        let mut arrows = Vec::new();
        let mut by_head = vec![Vec::new(); nv];
        let mut index = HashMap::new();
        for head in sys.subsets() {
            for tail in sys.subsets() {
                for tag in 0..sys.rank() {
                    if head >> tag & 1 == 1 && tail >> tag & 1 == 0 {
                        let id = arrows.len() as u32;
                        arrows.push(Arrow { head, tail, tag });
                        by_head[head as usize].push(id);
                        index.insert((head, tail, tag), id);
                    }
                }
            }
        }
        Ok(Quiver { sys: sys.clone(), arrows, by_head, index })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.sys.rank()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: u32) -> Arrow {
        self.arrows[id as usize]
    }

    /// Arrows whose head is `v`, i.e. those that can follow a path ending at `v`.
    pub fn arrows_with_head(&self, v: u32) -> &[u32] {
        &self.by_head[v as usize]
    }

    pub fn arrow_id(&self, head: u32, tail: u32, tag: usize) -> Result<u32, PathError> {
        self.index.get(&(head, tail, tag)).copied().ok_or_else(|| PathError::InvalidEdge {
            head: self.sys.subset_name(head),
            tail: self.sys.subset_name(tail),
            tag: self.sys.generators.get(tag).cloned().unwrap_or_else(|| tag.to_string()),
        })
    }

    /// Number of arrows `head ← tail`.
    pub fn multiplicity(&self, head: u32, tail: u32) -> usize {
        (head & !tail).count_ones() as usize
    }

    pub fn arrow_name(&self, id: u32) -> String {
        let a = self.arrow(id);
        format!("X^{}_{{{},{}}}", self.sys.generators[a.tag], self.sys.subset_name(a.head), self.sys.subset_name(a.tail))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Inclusion,
    Transversal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompatEdge {
    pub head: u32,
    pub tail: u32,
    pub kind: EdgeKind,
}

/// The compatibility graph Q_W: a single edge I ← J whenever I \ J is
/// nonempty and every element of I \ J is bonded to every element of J \ I.
#[derive(Clone, Debug)]
pub struct CompatGraph {
    sys: CoxeterSystem,
    edges: Vec<CompatEdge>,
}

impl CompatGraph {
    pub fn new(sys: &CoxeterSystem) -> Result<Self, PathError> {
        if sys.rank() > 5 {
            return Err(PathError::RankTooLarge(sys.rank()));
        }
        let mut edges = Vec::new();
        for head in sys.subsets() {
            for tail in sys.subsets() {
                let (up, down) = (head & !tail, tail & !head);
                if up == 0 {
                    continue;
                }
                let compatible = (0..sys.rank())
                    .filter(|s| up >> s & 1 == 1)
                    .all(|s| (0..sys.rank()).filter(|t| down >> t & 1 == 1).all(|t| sys.bonded(s, t)));
                if compatible {
                    let kind = if down == 0 { EdgeKind::Inclusion } else { EdgeKind::Transversal };
                    edges.push(CompatEdge { head, tail, kind });
                }
            }
        }
        Ok(CompatGraph { sys: sys.clone(), edges })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn edges(&self) -> &[CompatEdge] {
        &self.edges
    }

    pub fn has_edge(&self, head: u32, tail: u32) -> bool {
        self.edges.iter().any(|e| e.head == head && e.tail == tail)
    }

    /// Unordered transversal pairs {I, J} with I < J as bitmasks.
    pub fn transversal_pairs(&self) -> Vec<(u32, u32)> {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Transversal && e.head < e.tail).map(|e| (e.head, e.tail)).collect()
    }

    pub fn inclusion_edges(&self) -> Vec<(u32, u32)> {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Inclusion).map(|e| (e.head, e.tail)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, TypeTag};

    fn names(g: &CompatGraph, pairs: &[(u32, u32)]) -> Vec<(String, String)> {
        let s = g.system();
        pairs.iter().map(|&(a, b)| (s.subset_name(a), s.subset_name(b))).collect()
    }

    #[test]
    fn full_quiver_multiplicities() {
        let i2 = Quiver::full(&build_system(TypeTag::I2(5)).unwrap()).unwrap();
        assert_eq!(i2.vertex_count(), 4);
        assert_eq!(i2.arrows().iter().filter(|a| a.head == 0b11 && a.tail == 0).count(), 2);
        let a3 = Quiver::full(&build_system(TypeTag::A3).unwrap()).unwrap();
        assert_eq!(a3.multiplicity(0b111, 0), 3);
        assert_eq!(a3.arrows().iter().filter(|a| a.head == 0b111 && a.tail == 0).count(), 3);
        let a1 = Quiver::full(&build_system(TypeTag::A1xN(1)).unwrap()).unwrap();
        assert_eq!(a1.arrows().len(), 1);
        assert_eq!(a1.arrow(0), Arrow { head: 1, tail: 0, tag: 0 });
        for q in [&i2, &a3] {
            let total: usize = q.system().subsets().flat_map(|i| q.system().subsets().map(move |j| (i, j))).map(|(i, j)| q.multiplicity(i, j)).sum();
            assert_eq!(total, q.arrows().len());
        }
    }

    #[test]
    fn compatibility_graph_transversal_pairs() {
        let g = CompatGraph::new(&build_system(TypeTag::I2(7)).unwrap()).unwrap();
        assert_eq!(names(&g, &g.transversal_pairs()), vec![("1".into(), "2".into())]);
        let g = CompatGraph::new(&build_system(TypeTag::A3).unwrap()).unwrap();
        let mut got = names(&g, &g.transversal_pairs());
        got.sort();
        let mut want: Vec<(String, String)> =
            [("1", "2"), ("2", "3"), ("2", "13"), ("13", "23"), ("12", "13")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        want.sort();
        assert_eq!(got, want);
        for e in g.edges() {
            if e.kind == EdgeKind::Transversal {
                assert!(g.has_edge(e.tail, e.head));
            } else {
                assert!(!g.has_edge(e.tail, e.head));
            }
        }
    }
}
