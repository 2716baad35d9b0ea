use serde::Serialize;

use super::{WGraph, WGraphError};
use crate::arith::{NumberFieldElem, Ring};
use crate::coxeter::CoxeterSystem;
use crate::linalg::Matrix;
use crate::pathalg::{all_relators, PathElement, Quiver};

type K = NumberFieldElem;

/// A finite-dimensional left Ω-module given by the images of every E_I
/// (indexed by bitmask) and of every x_s.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaModule {
    pub sys: CoxeterSystem,
    pub idempotents: Vec<Matrix<K>>,
    pub x: Vec<Matrix<K>>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ModuleCheck {
    pub xi_relations: bool,
    pub relators_checked: usize,
    /// Relators whose image is nonzero, rendered.
    pub failures: Vec<String>,
}

impl ModuleCheck {
    pub fn pass(&self) -> bool {
        self.xi_relations && self.failures.is_empty()
    }
}

impl OmegaModule {
    pub fn dim(&self) -> usize {
        self.x.first().map_or_else(|| self.idempotents[0].rows(), |m| m.rows())
    }

    /// ω(e_s) = Σ_{s ∈ I} ω(E_I).
    pub fn e(&self, s: usize) -> Matrix<K> {
        let n = self.dim();
        self.sys.subsets().filter(|v| v >> s & 1 == 1).fold(Matrix::zero(n, n), |acc, v| acc.add(&self.idempotents[v as usize]))
    }

    /// Image of the arrow X^s_IJ, i.e. ω(E_I) ω(x_s) ω(E_J).
    pub fn arrow_matrix(&self, q: &Quiver, a: u32) -> Matrix<K> {
        let ar = q.arrow(a);
        self.idempotents[ar.head as usize].mul(&self.x[ar.tag]).mul(&self.idempotents[ar.tail as usize])
    }

    /// Image of a path-algebra element.
    pub fn eval<R: Ring>(&self, q: &Quiver, e: &PathElement<R>, coeff: impl Fn(&R) -> K) -> Matrix<K> {
        let n = self.dim();
        let arrows: Vec<Matrix<K>> = (0..q.arrows().len() as u32).map(|a| self.arrow_matrix(q, a)).collect();
        let mut acc = Matrix::zero(n, n);
        for (p, c) in e.terms() {
            let mut m = self.idempotents[p.head as usize].clone();
            for &a in &p.arrows {
                m = m.mul(&arrows[a as usize]);
            }
            acc = acc.add(&m.scale(&coeff(c)));
        }
        acc
    }

    /// Checks the relations of Ξ and that every α/β relator acts as zero.
    pub fn check(&self) -> Result<ModuleCheck, WGraphError> {
        let n = self.dim();
        let id = Matrix::<K>::identity(n);
        let mut xi = self.idempotents.len() == 1 << self.sys.rank() && self.x.len() == self.sys.rank();
        if xi {
            let mut sum = Matrix::zero(n, n);
            for (i, a) in self.idempotents.iter().enumerate() {
                sum = sum.add(a);
                for (j, b) in self.idempotents.iter().enumerate() {
                    let p = a.mul(b);
                    xi &= if i == j { p == *a } else { p.is_zero() };
                }
            }
            xi &= sum == id;
            for s in 0..self.sys.rank() {
                let es = self.e(s);
                xi &= es.mul(&self.x[s]) == self.x[s] && self.x[s].mul(&es).is_zero();
            }
        }
        let q = Quiver::full(&self.sys).map_err(|e| WGraphError::Parse(e.to_string()))?;
        let rels = all_relators(&q).map_err(|e| WGraphError::Parse(e.to_string()))?;
        let mut failures = Vec::new();
        if xi {
            for r in &rels {
                if !self.eval(&q, &r.element, K::from_rational).is_zero() {
                    failures.push(r.element.render(&q));
                }
            }
        }
        Ok(ModuleCheck { xi_relations: xi, relators_checked: rels.len(), failures })
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        OmegaModule {
            sys: self.sys.clone(),
            idempotents: self.idempotents.iter().zip(&o.idempotents).map(|(a, b)| a.direct_sum(b)).collect(),
            x: self.x.iter().zip(&o.x).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }

    /// The dual module twisted by δ: E_I acts as ω(E_{S∖I})ᵀ and x_s as −ω(x_s)ᵀ.
    pub fn dual(&self) -> Self {
        let full = self.sys.full_set();
        OmegaModule {
            sys: self.sys.clone(),
            idempotents: self.sys.subsets().map(|v| self.idempotents[(full & !v) as usize].transpose()).collect(),
            x: self.x.iter().map(|m| m.transpose().neg()).collect(),
        }
    }

    /// Conjugates every matrix by `p`: M ↦ p⁻¹ M p.
    pub fn conjugate(&self, p: &Matrix<K>) -> Option<Self> {
        let pinv = p.inverse()?;
        let c = |m: &Matrix<K>| pinv.mul(m).mul(p);
        Some(OmegaModule { sys: self.sys.clone(), idempotents: self.idempotents.iter().map(c).collect(), x: self.x.iter().map(c).collect() })
    }
}

/// ω(e_s) is diagonal with 1 at x iff s ∈ I(x), and ω(x_s) = m^s. The
/// relators are verified on the result.
pub fn wgraph_to_module(sys: &CoxeterSystem, g: &WGraph) -> Result<OmegaModule, WGraphError> {
    let report = g.validate(sys)?;
    if let Some(v) = report.condition1.first() {
        return Err(WGraphError::Condition1 { x: v.x.clone(), y: v.y.clone(), s: v.s.clone() });
    }
    if !report.valid {
        let failed = report.hecke.iter().flat_map(|h| h.relations.iter()).find(|r| !r.pass).map(|r| r.relation.clone()).unwrap_or_default();
        return Err(WGraphError::RelatorViolation(failed));
    }
    let n = g.len();
    let idempotents = sys
        .subsets()
        .map(|v| {
            let mut m = Matrix::zero(n, n);
            for (i, &l) in g.labels.iter().enumerate() {
                if l == v {
                    m.set(i, i, K::one());
                }
            }
            m
        })
        .collect();
    let module = OmegaModule { sys: sys.clone(), idempotents, x: g.weights.clone() };
    let check = module.check()?;
    if !check.pass() {
        return Err(WGraphError::RelatorViolation(check.failures.first().cloned().unwrap_or_else(|| "Xi relations".into())));
    }
    Ok(module)
}

/// Chooses a basis of every E_J V (the given one, or the pivot columns of
/// ω(E_J) by default), labels those vectors by J, and reads off x_s in the
/// combined basis.
pub fn module_to_wgraph(module: &OmegaModule, bases: Option<&[Vec<Vec<K>>]>) -> Result<WGraph, WGraphError> {
    let n = module.dim();
    let sys = &module.sys;
    let mut cols: Vec<Vec<K>> = Vec::new();
    let mut labels = Vec::new();
    let mut vertices = Vec::new();
    for v in sys.subsets() {
        let basis = match bases {
            Some(b) => b.get(v as usize).cloned().unwrap_or_default(),
            None => module.idempotents[v as usize].column_space_basis(),
        };
        for (i, c) in basis.into_iter().enumerate() {
            vertices.push(format!("{}.{i}", sys.subset_name(v)));
            labels.push(v);
            cols.push(c);
        }
    }
    if cols.len() != n {
        return Err(WGraphError::BasisMismatch { got: cols.len(), want: n });
    }
    let p = Matrix::from_rows(cols).transpose();
    let conj = module.conjugate(&p).ok_or(WGraphError::BasisMismatch { got: n, want: n })?;
    for (v, e) in conj.idempotents.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let want = if i == j && labels[i] == v as u32 { K::one() } else { K::zero() };
                if *e.get(i, j) != want {
                    return Err(WGraphError::RelatorViolation(format!("chosen vectors do not span the image of E_{{{}}}", sys.subset_name(v as u32))));
                }
            }
        }
    }
    Ok(WGraph { vertices, labels, weights: conj.x })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, TypeTag};
    use crate::wgraph::dihedral_graph;

    #[test]
    fn a3_reflection_loop_is_identity() {
        let sys = build_system(TypeTag::I2(3)).unwrap();
        let g = dihedral_graph(&sys, 1).unwrap();
        let m = wgraph_to_module(&sys, &g).unwrap();
        let q = Quiver::full(&sys).unwrap();
        let x12 = PathElement::<K>::edge_elem(&q, 0b01, 0b10, 0).unwrap();
        let x21 = PathElement::edge_elem(&q, 0b10, 0b01, 1).unwrap();
        let loop_ = m.eval(&q, &x12.mul(&x21), |c| c.clone());
        assert_eq!(loop_, m.idempotents[0b01]);
    }

    #[test]
    fn roundtrip_with_identity_basis() {
        let sys = build_system(TypeTag::I2(5)).unwrap();
        let g = dihedral_graph(&sys, 2).unwrap();
        let m = wgraph_to_module(&sys, &g).unwrap();
        let back = module_to_wgraph(&m, None).unwrap();
        assert_eq!(back.labels, g.labels);
        assert_eq!(back.weights, g.weights);
        let dual = m.dual();
        assert!(dual.check().unwrap().pass());
        assert_eq!(dual.dual(), m);
    }

    #[test]
    fn basis_choice_is_checked() {
        let sys = build_system(TypeTag::I2(3)).unwrap();
        let m = wgraph_to_module(&sys, &dihedral_graph(&sys, 1).unwrap()).unwrap();
        assert!(matches!(module_to_wgraph(&m, Some(&[])), Err(WGraphError::BasisMismatch { .. })));
    }
}
