use serde::Serialize;

use super::{DecompError, IdempotentFamily, Scalar};
use crate::arith::{NumberFieldElem, Ring};
use crate::linalg::Matrix;
use crate::omega::{AlgebraElement, QuotientAlgebra};
use crate::pathalg::PathElement;
use crate::wgraph::OmegaModule;

type K = NumberFieldElem;

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationStep {
    pub label: String,
    /// dim V^{⪯λ} − dim V^{≺λ}.
    pub jump: usize,
    pub multiplicity: usize,
    pub multiple_of_degree: bool,
    /// F^λ acts as the identity on V^{⪯λ} / V^{≺λ}.
    pub identity_on_subquotient: bool,
    /// V^{⪯λ} is stable under every E_I and x_s.
    pub submodule: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationReport {
    pub dim: usize,
    pub steps: Vec<FiltrationStep>,
    /// Σ_λ jump_λ equals dim V.
    pub exhaustive: bool,
    pub pass: bool,
}

fn rank_of(vectors: &[Vec<K>]) -> usize {
    if vectors.is_empty() {
        0
    } else {
        Matrix::from_rows(vectors.to_vec()).rank()
    }
}

fn apply(m: &Matrix<K>, v: &[K]) -> Vec<K> {
    (0..m.rows()).map(|i| m.row(i).iter().zip(v).fold(K::zero(), |acc, (a, b)| acc.add(&a.mul(b)))).collect()
}

fn contains(basis: &[Vec<K>], rank: usize, v: &[K]) -> bool {
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    rank_of(&all) == rank
}

/// Filters `module` by the order on characters: V^{⪯λ} is the image of
/// Σ_{μ⪯λ} ρ(F^μ). Each step records the jump, whether F^λ is the identity
/// on the subquotient and whether V^{⪯λ} is a submodule.
pub fn filtration<F: Scalar>(alg: &QuotientAlgebra, module: &OmegaModule, fam: &IdempotentFamily<F>) -> FiltrationReport {
    let q = alg.quiver();
    let n = module.dim();
    let rho: Vec<Matrix<K>> = fam.components.iter().map(|c| module.eval(q, &alg.lift(&c.total()), |x| x.into_number_field())).collect();
    let images: Vec<Vec<Vec<K>>> = rho.iter().map(|m| m.column_space_basis()).collect();
    let generators: Vec<&Matrix<K>> = module.idempotents.iter().chain(&module.x).collect();
    let span = |keep: &dyn Fn(usize) -> bool| -> Vec<Vec<K>> {
        let vs: Vec<Vec<K>> = (0..fam.len()).filter(|&b| keep(b)).flat_map(|b| images[b].clone()).collect();
        if vs.is_empty() {
            vs
        } else {
            Matrix::from_rows(vs).rref().0.to_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
        }
    };
    let mut steps = Vec::new();
    let mut total = 0;
    for (a, c) in fam.components.iter().enumerate() {
        let upto = span(&|b| fam.irr.is_leq(b, a));
        let below = span(&|b| b != a && fam.irr.is_leq(b, a));
        let jump = upto.len() - below.len();
        total += jump;
        let identity_on_subquotient = upto.iter().all(|v| {
            let diff: Vec<K> = apply(&rho[a], v).iter().zip(v).map(|(x, y)| x.sub(y)).collect();
            contains(&below, below.len(), &diff)
        });
        let submodule = generators.iter().all(|g| upto.iter().all(|v| contains(&upto, upto.len(), &apply(g, v))));
        steps.push(FiltrationStep {
            label: c.label.clone(),
            jump,
            multiplicity: jump / c.degree.max(1),
            multiple_of_degree: jump % c.degree.max(1) == 0,
            identity_on_subquotient,
            submodule,
        });
    }
    let exhaustive = total == n;
    let pass = exhaustive && steps.iter().all(|s| s.multiple_of_degree && s.identity_on_subquotient && s.submodule);
    FiltrationReport { dim: n, steps, exhaustive, pass }
}

/// The left ideal kΩ·E_v as an Ω-module: its basis is the words with tail
/// `v`, E_I acts by keeping the words with head I, and x_s by left
/// multiplication.
pub fn left_regular_module(alg: &QuotientAlgebra, v: u32) -> Result<OmegaModule, DecompError> {
    let sys = alg.system().clone();
    let basis: Vec<u32> = (0..alg.dim() as u32).filter(|&w| alg.word(w).path.tail == v).collect();
    let n = basis.len();
    let index = |w: u32| basis.iter().position(|&b| b == w);
    let matrix_of = |left: &AlgebraElement<K>| -> Result<Matrix<K>, DecompError> {
        let mut m = Matrix::zero(n, n);
        for (j, &w) in basis.iter().enumerate() {
            let image = alg.mul(left, &AlgebraElement::basis(w));
            for (u, c) in image.coords().iter() {
                let i = index(u).ok_or_else(|| DecompError::Mismatch(format!("word {u} left the ideal")))?;
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    };
    let idempotents = sys.subsets().map(|s| matrix_of(&alg.vertex(s))).collect::<Result<Vec<_>, _>>()?;
    let x = (0..sys.rank())
        .map(|s| matrix_of(&alg.project(&PathElement::<K>::gen_x(alg.quiver(), s))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OmegaModule { sys, idempotents, x })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, TypeTag};
    use crate::decomp::build_family;
    use crate::omega::{compute_quotient, QuotientOptions};

    #[test]
    fn regular_module_of_a3_is_filtered() {
        let sys = build_system(TypeTag::A3).unwrap();
        let alg = compute_quotient(&sys, &QuotientOptions::default()).unwrap();
        let module = left_regular_module(&alg, 0).unwrap();
        assert!(module.check().unwrap().pass());
        let fam = build_family(&alg).unwrap();
        let rep = filtration(&alg, &module, &fam);
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.dim, alg.block(0, 0).len() + (1..8).map(|h| alg.block(h, 0).len()).sum::<usize>());
    }
}
