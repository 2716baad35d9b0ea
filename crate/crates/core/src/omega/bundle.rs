use serde_json::{json, Value};

use super::QuotientAlgebra;
use crate::arith::minimal_polynomial;

impl QuotientAlgebra {
    /// Versioned JSON bundle: basis paths, optionally the structure constants
    /// as (i, j, k, c) with b_i b_j = Σ_k c b_k, and the coefficient field.
    pub fn to_json(&self, with_structure_constants: bool) -> Value {
        let sys = self.system();
        let q = self.quiver();
        let m = sys.field_parameter();
        let basis: Vec<Value> = self
            .words()
            .iter()
            .enumerate()
            .map(|(i, w)| {
                json!({
                    "id": i,
                    "head": sys.subset_name(w.path.head),
                    "tail": sys.subset_name(w.path.tail),
                    "vertices": w.path.vertices(q).iter().map(|&v| sys.subset_name(v)).collect::<Vec<_>>(),
                    "tags": w.path.arrows.iter().map(|&a| sys.generators[q.arrow(a).tag].clone()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut out = json!({
            "schema": 1,
            "type": sys.tag,
            "generators": sys.generators,
            "coxeter_matrix": sys.coxeter_matrix,
            "field": {
                "m": m,
                "minimal_polynomial": minimal_polynomial(m).map(|p| p.coeffs_i64()).unwrap_or_default(),
            },
            "dim": self.dim(),
            "length_bound": self.length_bound(),
            "stats": self.stats(),
            "basis": basis,
        });
        if with_structure_constants {
            let mut sc = Vec::new();
            for i in 0..self.dim() as u32 {
                for (j, v) in self.products_from(i) {
                    for (k, c) in v.iter() {
                        sc.push(json!([i, j, k, c]));
                    }
                }
            }
            out["structure_constants"] = Value::Array(sc);
        }
        out
    }
}
