use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::WGraphError;
use crate::arith::{FieldCtx, NumberFieldElem, Rational, Ring};
use crate::coxeter::{check_hecke_rep, hecke_generator_matrix, CoxeterSystem, HeckeReport};
use crate::linalg::Matrix;

/// A W-graph (𝔠, I, m): vertices, a subset label per vertex and one weight
/// matrix per generator, indexed [x][y] for the edge x ← y.
#[derive(Clone, Debug, PartialEq)]
pub struct WGraph {
    pub vertices: Vec<String>,
    pub labels: Vec<u32>,
    pub weights: Vec<Matrix<NumberFieldElem>>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Condition1Violation {
    pub x: String,
    pub y: String,
    pub s: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct WGraphReport {
    pub valid: bool,
    pub condition1: Vec<Condition1Violation>,
    pub hecke: Option<HeckeReport>,
    /// Pairs (x, y) whose nonzero weights differ across s ∈ I(x) \ I(y).
    pub warnings: Vec<String>,
}

/// A weight entry in JSON: a rational string or number, or a field element.
#[derive(Deserialize)]
#[serde(untagged)]
enum WireWeight {
    Int(i64),
    Text(String),
    Field(NumberFieldElem),
}

#[derive(Deserialize)]
struct Wire {
    vertices: Vec<String>,
    labels: BTreeMap<String, Vec<String>>,
    weights: BTreeMap<String, Vec<Vec<WireWeight>>>,
}

impl WGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// A graph with the given labels and all weights zero.
    pub fn discrete(sys: &CoxeterSystem, vertices: Vec<String>, labels: Vec<u32>) -> Self {
        let n = vertices.len();
        WGraph { vertices, labels, weights: vec![Matrix::zero(n, n); sys.rank()] }
    }

    pub fn check_sizes(&self, sys: &CoxeterSystem) -> Result<(), WGraphError> {
        let n = self.vertices.len();
        if self.labels.len() != n {
            return Err(WGraphError::SizeMismatch(format!("{} labels for {n} vertices", self.labels.len())));
        }
        if self.weights.len() != sys.rank() {
            return Err(WGraphError::SizeMismatch(format!("{} weight matrices for {} generators", self.weights.len(), sys.rank())));
        }
        if self.weights.iter().any(|w| w.rows() != n || w.cols() != n) {
            return Err(WGraphError::SizeMismatch(format!("weight matrices must be {n}x{n}")));
        }
        Ok(())
    }

    /// The matrices ω(T_s).
    pub fn hecke_matrices(&self, sys: &CoxeterSystem) -> Vec<crate::coxeter::SquareMatrix> {
        (0..sys.rank())
            .map(|s| {
                let contains: Vec<bool> = self.labels.iter().map(|l| l >> s & 1 == 1).collect();
                hecke_generator_matrix(&contains, &self.weights[s])
            })
            .collect()
    }

    /// Condition 1 of the definition plus the Hecke relations of ω(T_s).
    /// Unequal weights across tags on one pair are reported as warnings.
    pub fn validate(&self, sys: &CoxeterSystem) -> Result<WGraphReport, WGraphError> {
        self.check_sizes(sys)?;
        let n = self.len();
        let mut condition1 = Vec::new();
        let mut warnings = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let mut seen: Option<&NumberFieldElem> = None;
                let mut disagree = false;
                for s in 0..sys.rank() {
                    let w = self.weights[s].get(x, y);
                    let allowed = x != y && self.labels[x] >> s & 1 == 1 && self.labels[y] >> s & 1 == 0;
                    if w.is_zero() {
                        if allowed && seen.is_some() {
                            disagree = true;
                        }
                        continue;
                    }
                    if !allowed {
                        condition1.push(Condition1Violation { x: self.vertices[x].clone(), y: self.vertices[y].clone(), s: sys.generators[s].clone() });
                        continue;
                    }
                    match seen {
                        Some(prev) if prev != w => disagree = true,
                        _ => seen = Some(w),
                    }
                }
                if disagree {
                    warnings.push(format!("weights on {} <- {} differ between generators", self.vertices[x], self.vertices[y]));
                }
            }
        }
        if !condition1.is_empty() {
            return Ok(WGraphReport { valid: false, condition1, hecke: None, warnings });
        }
        let hecke = check_hecke_rep(sys, &self.hecke_matrices(sys))?;
        Ok(WGraphReport { valid: hecke.pass, condition1, hecke: Some(hecke), warnings })
    }

    /// δ: complement every label and replace m^s by −(m^s)ᵀ.
    pub fn dual(&self, sys: &CoxeterSystem) -> Self {
        let full = sys.full_set();
        WGraph {
            vertices: self.vertices.clone(),
            labels: self.labels.iter().map(|l| full & !l).collect(),
            weights: self.weights.iter().map(|w| w.transpose().neg()).collect(),
        }
    }

    /// Relabels generators by s ↦ perm[s].
    pub fn apply_automorphism(&self, sys: &CoxeterSystem, perm: &[usize]) -> Result<Self, WGraphError> {
        if !sys.is_automorphism(perm) {
            return Err(WGraphError::Coxeter(crate::coxeter::CoxeterError::Precondition(format!("{perm:?} is not a diagram automorphism"))));
        }
        let map_set = |m: u32| (0..sys.rank()).filter(|s| m >> s & 1 == 1).fold(0u32, |acc, s| acc | 1 << perm[s]);
        let mut weights = self.weights.clone();
        for (s, w) in self.weights.iter().enumerate() {
            weights[perm[s]] = w.clone();
        }
        Ok(WGraph { vertices: self.vertices.clone(), labels: self.labels.iter().map(|&l| map_set(l)).collect(), weights })
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.extend(o.vertices.iter().map(|v| if self.vertices.contains(v) { format!("{v}'") } else { v.clone() }));
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&o.labels);
        WGraph { vertices, labels, weights: self.weights.iter().zip(&o.weights).map(|(a, b)| a.direct_sum(b)).collect() }
    }

    pub fn from_json(sys: &CoxeterSystem, v: &Value) -> Result<Self, WGraphError> {
        let wire: Wire = serde_json::from_value(v.clone()).map_err(|e| WGraphError::Parse(e.to_string()))?;
        let n = wire.vertices.len();
        let index: BTreeMap<&str, usize> = wire.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut labels = vec![0u32; n];
        for (v, gens) in &wire.labels {
            let i = *index.get(v.as_str()).ok_or_else(|| WGraphError::UnknownVertex(v.clone()))?;
            for g in gens {
                let s = sys.generator_index(g).ok_or_else(|| WGraphError::UnknownGenerator(g.clone()))?;
                labels[i] |= 1 << s;
            }
        }
        let ctx = sys.field();
        let mut weights = vec![Matrix::zero(n, n); sys.rank()];
        for (g, rows) in wire.weights {
            let s = sys.generator_index(&g).ok_or_else(|| WGraphError::UnknownGenerator(g.clone()))?;
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(WGraphError::SizeMismatch(format!("weights for {g} must be {n}x{n}")));
            }
            for (x, row) in rows.into_iter().enumerate() {
                for (y, w) in row.into_iter().enumerate() {
                    weights[s].set(x, y, parse_weight(w, &ctx)?);
                }
            }
        }
        Ok(WGraph { vertices: wire.vertices, labels, weights })
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> Value {
        let labels: BTreeMap<&str, Vec<&str>> = self
            .vertices
            .iter()
            .zip(&self.labels)
            .map(|(v, &l)| (v.as_str(), (0..sys.rank()).filter(|s| l >> s & 1 == 1).map(|s| sys.generators[s].as_str()).collect()))
            .collect();
        let weights: BTreeMap<&str, Value> = (0..sys.rank())
            .map(|s| (sys.generators[s].as_str(), json!(self.weights[s].to_rows().iter().map(|r| r.iter().map(weight_json).collect::<Vec<_>>()).collect::<Vec<_>>())))
            .collect();
        json!({ "vertices": self.vertices, "labels": labels, "weights": weights })
    }

    /// DOT rendering: vertices show I(x); an edge x <- y carries the common
    /// weight (or one weight per generator when they differ).
    pub fn to_dot(&self, sys: &CoxeterSystem, name: &str) -> String {
        let mut out = format!("digraph \"{name}\" {{\n");
        for (v, &l) in self.vertices.iter().zip(&self.labels) {
            out.push_str(&format!("  \"{v}\" [label=\"{v}: {{{}}}\"];\n", sys.subset_name(l)));
        }
        for x in 0..self.len() {
            for y in 0..self.len() {
                let ws: Vec<(usize, &NumberFieldElem)> = (0..sys.rank()).map(|s| (s, self.weights[s].get(x, y))).filter(|(_, w)| !w.is_zero()).collect();
                if ws.is_empty() {
                    continue;
                }
                let label = if ws.iter().all(|(_, w)| *w == ws[0].1) {
                    ws[0].1.to_string()
                } else {
                    ws.iter().map(|(s, w)| format!("{}:{w}", sys.generators[*s])).collect::<Vec<_>>().join(", ")
                };
                out.push_str(&format!("  \"{}\" -> \"{}\" [label=\"{label}\"];\n", self.vertices[y], self.vertices[x]));
            }
        }
        out.push_str("}\n");
        out
    }
}

fn parse_weight(w: WireWeight, ctx: &std::sync::Arc<FieldCtx>) -> Result<NumberFieldElem, WGraphError> {
    Ok(match w {
        WireWeight::Int(n) => NumberFieldElem::from_int(n),
        WireWeight::Text(s) => NumberFieldElem::from_rational(&s.parse::<Rational>().map_err(|e| WGraphError::Parse(e.to_string()))?),
        WireWeight::Field(x) => {
            if x.ctx().is_some_and(|c| c.m() != ctx.m()) {
                return Err(WGraphError::Parse(format!("weight lives in Q(2cos(pi/{})), expected m = {}", x.ctx().map_or(0, |c| c.m()), ctx.m())));
            }
            x
        }
    })
}

fn weight_json(w: &NumberFieldElem) -> Value {
    match w.as_rational() {
        Some(q) => json!(q),
        None => json!(w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, TypeTag};

    #[test]
    fn condition_one_violation_is_reported() {
        let sys = build_system(TypeTag::I2(3)).unwrap();
        let mut g = WGraph::discrete(&sys, vec!["x".into(), "y".into()], vec![0b01, 0b10]);
        g.weights[1].set(0, 1, NumberFieldElem::one());
        let r = g.validate(&sys).unwrap();
        assert!(!r.valid);
        assert_eq!(r.condition1, vec![Condition1Violation { x: "x".into(), y: "y".into(), s: "2".into() }]);
    }

    #[test]
    fn json_roundtrip() {
        let sys = build_system(TypeTag::I2(5)).unwrap();
        let v = json!({
            "vertices": ["x", "y"],
            "labels": {"x": ["1"], "y": ["2"]},
            "weights": {"1": [[0, 1], [0, 0]], "2": [[0, 0], [{"m": 5, "coeffs": ["1", "1"]}, 0]]}
        });
        let g = WGraph::from_json(&sys, &v).unwrap();
        assert!(g.validate(&sys).unwrap().valid);
        assert_eq!(WGraph::from_json(&sys, &g.to_json(&sys)).unwrap(), g);
        assert!(matches!(WGraph::from_json(&sys, &json!({"vertices": ["x"], "labels": {"z": []}, "weights": {}})), Err(WGraphError::UnknownVertex(_))));
    }

    #[test]
    fn duality_turns_trivial_into_sign() {
        let sys = build_system(TypeTag::A3).unwrap();
        let g = WGraph::discrete(&sys, vec!["x".into()], vec![0]);
        let d = g.dual(&sys);
        assert_eq!(d.labels, vec![0b111]);
        assert_eq!(d.dual(&sys), g);
    }
}
