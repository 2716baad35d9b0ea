use std::collections::BTreeMap;

use serde::Serialize;

use super::{AlgebraElement, QuotientAlgebra};
use crate::arith::Rational;

/// An element of Z[v, v⁻¹] ⊗ kΩ as a map from the exponent of v.
pub type LaurentElement = BTreeMap<i32, AlgebraElement<Rational>>;

#[derive(Clone, Debug, Serialize)]
pub struct HeckeEmbeddingReport {
    pub pass: bool,
    pub relations: Vec<(String, bool)>,
}

fn add_into(acc: &mut LaurentElement, k: i32, x: &AlgebraElement<Rational>) {
    let e = acc.entry(k).or_insert_with(AlgebraElement::zero);
    *e = e.add(x);
    if e.is_zero() {
        acc.remove(&k);
    }
}

fn lmul(alg: &QuotientAlgebra, a: &LaurentElement, b: &LaurentElement) -> LaurentElement {
    let mut out = LaurentElement::new();
    for (i, x) in a {
        for (j, y) in b {
            add_into(&mut out, i + j, &alg.mul(x, y));
        }
    }
    out
}

fn lsub(a: &LaurentElement, b: &LaurentElement) -> LaurentElement {
    let mut out = a.clone();
    for (k, x) in b {
        add_into(&mut out, *k, &x.neg());
    }
    out
}

/// ι(T_s) = −v⁻¹ e_s + v(1 − e_s) + x_s inside kΩ.
fn iota(alg: &QuotientAlgebra, s: usize) -> LaurentElement {
    let sys = alg.system();
    let mut es = AlgebraElement::zero();
    let mut xs = AlgebraElement::zero();
    for v in sys.subsets() {
        if v >> s & 1 == 1 {
            es = es.add(&alg.vertex(v));
            for w in sys.subsets().filter(|w| w >> s & 1 == 0) {
                xs = xs.add(&alg.edge_tagged(v, w, s).expect("s lies in v minus w"));
            }
        }
    }
    let mut out = LaurentElement::new();
    add_into(&mut out, -1, &es.neg());
    add_into(&mut out, 1, &alg.unit().sub(&es));
    add_into(&mut out, 0, &xs);
    out
}

/// Checks that ι(T_s) satisfies the quadratic relation and that every braid
/// commutator Δ_{m_st}(ι(T_s), ι(T_t)) vanishes in Z[v^±] ⊗ kΩ.
pub fn hecke_embedding_check(alg: &QuotientAlgebra) -> HeckeEmbeddingReport {
    let sys = alg.system();
    let n = sys.rank();
    let ts: Vec<LaurentElement> = (0..n).map(|s| iota(alg, s)).collect();
    let mut relations = Vec::new();
    for (s, x) in ts.iter().enumerate() {
        let mut rhs = LaurentElement::new();
        add_into(&mut rhs, 0, &alg.unit());
        for (k, c) in x {
            add_into(&mut rhs, k + 1, c);
            add_into(&mut rhs, k - 1, &c.neg());
        }
        let ok = lsub(&lmul(alg, x, x), &rhs).is_empty();
        relations.push((format!("T_{0}^2 = 1 + (v - v^-1) T_{0}", sys.generators[s]), ok));
    }
    for s in 0..n {
        for t in s + 1..n {
            let m = sys.m(s, t) as usize;
            let alt = |a: &LaurentElement, b: &LaurentElement| {
                let mut acc = LaurentElement::new();
                add_into(&mut acc, 0, &alg.unit());
                for i in 0..m {
                    acc = lmul(alg, &acc, if i % 2 == 0 { a } else { b });
                }
                acc
            };
            let ok = lsub(&alt(&ts[s], &ts[t]), &alt(&ts[t], &ts[s])).is_empty();
            relations.push((format!("braid({},{}) of length {m}", sys.generators[s], sys.generators[t]), ok));
        }
    }
    HeckeEmbeddingReport { pass: relations.iter().all(|r| r.1), relations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, TypeTag};
    use crate::omega::{compute_quotient, QuotientOptions};

    #[test]
    fn embedding_holds_for_small_dihedral() {
        for m in [3, 4] {
            let a = compute_quotient(&build_system(TypeTag::I2(m)).unwrap(), &QuotientOptions::default()).unwrap();
            let r = hecke_embedding_check(&a);
            assert!(r.pass, "{:?}", r.relations);
        }
    }
}
