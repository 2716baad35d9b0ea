use serde::Serialize;

use super::{DecompError, IdentityCheck, Scalar};
use crate::omega::{AlgebraElement, QuotientAlgebra};

type El<F> = AlgebraElement<F>;

/// Idempotents moved from E_I to E_J along the pair I ⇄ J.
#[derive(Clone, Debug)]
pub struct TransportResult<F> {
    pub source: u32,
    pub target: u32,
    pub sigmas: Vec<F>,
    /// ẽ_α = σ_α⁻¹ X_JI e_α X_IJ.
    pub transported: Vec<El<F>>,
    /// ẽ_0 = E_J − Σ ẽ_α.
    pub leftover: El<F>,
    /// r = X_JI e_0 X_IJ with e_0 = E_I − Σ e_α.
    pub residue: El<F>,
    pub checks: Vec<IdentityCheck>,
}

impl<F> TransportResult<F> {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

#[derive(Serialize)]
struct Summary<'a> {
    source: String,
    target: String,
    sigmas: Vec<String>,
    checks: &'a [IdentityCheck],
}

impl<F: Scalar> TransportResult<F> {
    pub fn to_json(&self, alg: &QuotientAlgebra) -> serde_json::Value {
        let sys = alg.system();
        serde_json::to_value(Summary {
            source: sys.subset_name(self.source),
            target: sys.subset_name(self.target),
            sigmas: self.sigmas.iter().map(|s| s.to_string()).collect(),
            checks: &self.checks,
        })
        .expect("summary serializes")
    }
}

fn sum<F: Scalar>(items: impl IntoIterator<Item = El<F>>) -> El<F> {
    items.into_iter().fold(El::zero(), |acc, x| acc.add(&x))
}

/// Transports pairwise orthogonal idempotents e_α ≤ E_I with
/// X_IJ X_JI = Σ σ_α e_α along I ⇄ J. The preconditions are checked and
/// every conclusion is evaluated and recorded in `checks`.
pub fn transport<F: Scalar>(alg: &QuotientAlgebra, i: u32, j: u32, idems: &[(El<F>, F)]) -> Result<TransportResult<F>, DecompError> {
    let sys = alg.system();
    let (ni, nj) = (sys.subset_name(i), sys.subset_name(j));
    if i & !j == 0 || j & !i == 0 {
        return Err(DecompError::Precondition(format!("{ni} and {nj} are not a transversal pair")));
    }
    let x_ij: El<F> = alg.edge(i, j)?;
    let x_ji: El<F> = alg.edge(j, i)?;
    let e_i: El<F> = alg.vertex(i);
    let e_j: El<F> = alg.vertex(j);

    for (a, (e, s)) in idems.iter().enumerate() {
        if s.is_zero() {
            return Err(DecompError::Precondition(format!("σ_{a} is zero")));
        }
        if alg.mul(e, e) != *e {
            return Err(DecompError::Precondition(format!("e_{a} is not idempotent")));
        }
        if alg.mul(&e_i, e) != *e || alg.mul(e, &e_i) != *e {
            return Err(DecompError::Precondition(format!("e_{a} is not below E_{ni}")));
        }
        for (b, (f, _)) in idems.iter().enumerate().skip(a + 1) {
            if !alg.mul(e, f).is_zero() || !alg.mul(f, e).is_zero() {
                return Err(DecompError::Precondition(format!("e_{a} and e_{b} are not orthogonal")));
            }
        }
    }
    let loop_i = alg.mul(&x_ij, &x_ji);
    if loop_i != sum(idems.iter().map(|(e, s)| e.scale(s))) {
        return Err(DecompError::Precondition(format!("X_{ni},{nj} X_{nj},{ni} is not Σ σ_α e_α")));
    }

    let sigmas: Vec<F> = idems.iter().map(|(_, s)| s.clone()).collect();
    let mut transported = Vec::with_capacity(idems.len());
    for (e, s) in idems {
        let t = alg.product(&[&x_ji, e, &x_ij]);
        transported.push(t.scale(&s.inv()?));
    }
    let leftover = e_j.sub(&sum(transported.iter().cloned()));
    let e0 = e_i.sub(&sum(idems.iter().map(|(e, _)| e.clone())));
    let residue = alg.product(&[&x_ji, &e0, &x_ij]);

    let mut checks = Vec::new();
    let mut all_t: Vec<&El<F>> = transported.iter().collect();
    all_t.push(&leftover);
    let mut all_e: Vec<&El<F>> = idems.iter().map(|(e, _)| e).collect();
    all_e.push(&e0);
    let name = |a: usize| if a == idems.len() { "0".to_string() } else { a.to_string() };

    for (a, t) in all_t.iter().enumerate() {
        checks.push(IdentityCheck::new(format!("ẽ_{} is idempotent", name(a)), alg.mul(t, t) == **t));
        for (b, u) in all_t.iter().enumerate().skip(a + 1) {
            let ok = alg.mul(t, u).is_zero() && alg.mul(u, t).is_zero();
            checks.push(IdentityCheck::new(format!("ẽ_{} ẽ_{} = 0", name(a), name(b)), ok));
        }
    }
    checks.push(IdentityCheck::new(format!("Σ ẽ = E_{nj}"), sum(all_t.iter().map(|t| (*t).clone())) == e_j));
    for a in 0..all_t.len() {
        let lhs = alg.mul(&x_ij, all_t[a]);
        let rhs = alg.mul(all_e[a], &x_ij);
        checks.push(IdentityCheck::new(format!("X_{ni},{nj} ẽ_{} = e_{} X_{ni},{nj}", name(a), name(a)), lhs == rhs));
        let lhs = alg.mul(&x_ji, all_e[a]);
        let rhs = alg.mul(all_t[a], &x_ji);
        checks.push(IdentityCheck::new(format!("X_{nj},{ni} e_{} = ẽ_{} X_{nj},{ni}", name(a), name(a)), lhs == rhs));
    }
    checks.push(IdentityCheck::new("r² = 0", alg.mul(&residue, &residue).is_zero()));
    checks.push(IdentityCheck::new("r = ẽ_0 r ẽ_0", alg.product(&[&leftover, &residue, &leftover]) == residue));
    let loop_j = alg.mul(&x_ji, &x_ij);
    let expected = sum(transported.iter().zip(&sigmas).map(|(t, s)| t.scale(s))).add(&residue);
    checks.push(IdentityCheck::new(format!("X_{nj},{ni} X_{ni},{nj} = Σ σ ẽ + r"), loop_j == expected));
    for (a, ((e, s), t)) in idems.iter().zip(&transported).enumerate() {
        let back = alg.product(&[&x_ij, t, &x_ji]);
        checks.push(IdentityCheck::new(format!("X_{ni},{nj} ẽ_{a} X_{nj},{ni} = σ_{a} e_{a}"), back == e.scale(s)));
    }
    Ok(TransportResult { source: i, target: j, sigmas, transported, leftover, residue, checks })
}

/// Expresses X_IJ X_JI through the given idempotents at I: returns the
/// pairs (e, σ) with σ ≠ 0 when X_IJ X_JI = Σ σ e, using σ read off from
/// e·X_IJ X_JI = σ e. Returns `None` when no such expression exists.
pub fn transport_data<F: Scalar>(alg: &QuotientAlgebra, i: u32, j: u32, idems: &[El<F>]) -> Result<Option<Vec<(El<F>, F)>>, DecompError> {
    let x_ij: El<F> = alg.edge(i, j)?;
    let x_ji: El<F> = alg.edge(j, i)?;
    let c = alg.mul(&x_ij, &x_ji);
    let mut out = Vec::new();
    let mut acc = El::zero();
    for e in idems {
        let ec = alg.mul(e, &c);
        let Some((w, lead)) = e.coords().lead() else { continue };
        let s = ec.coeff(w).div(lead)?;
        if ec != e.scale(&s) {
            return Ok(None);
        }
        if !s.is_zero() {
            acc = acc.add(&ec);
            out.push((e.clone(), s));
        }
    }
    Ok(if acc == c { Some(out) } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Rational, Ring};
    use crate::coxeter::{build_system, TypeTag};
    use crate::omega::{compute_quotient, QuotientOptions};

    fn algebra(t: TypeTag) -> QuotientAlgebra {
        compute_quotient(&build_system(t).unwrap(), &QuotientOptions::default()).unwrap()
    }

    #[test]
    fn i2_3_moves_e1_to_the_loop_at_2() {
        let a = algebra(TypeTag::I2(3));
        let e1: El<Rational> = a.vertex(0b01);
        let t = transport(&a, 0b01, 0b10, &[(e1, Rational::one())]).unwrap();
        assert!(t.all_hold(), "{:?}", t.checks);
        let x21: El<Rational> = a.edge(0b10, 0b01).unwrap();
        let x12 = a.edge(0b01, 0b10).unwrap();
        assert_eq!(t.transported[0], a.mul(&x21, &x12));
        // E_2 = X_21 X_12 in I2(3), so nothing is left over.
        assert!(t.leftover.is_zero());
    }

    #[test]
    fn empty_list_leaves_e_j_with_nilpotent_residue() {
        let a = algebra(TypeTag::I2(4));
        let t = transport::<Rational>(&a, 0b01, 0b10, &[]);
        // X_12 X_21 ≠ 0 in I2(4), so the empty decomposition is rejected.
        assert!(matches!(t, Err(DecompError::Precondition(_))));
        let a3 = algebra(TypeTag::A3);
        // X_{1,3} X_{3,1} = 0 because s_1 and s_3 commute.
        let t = transport::<Rational>(&a3, 0b001, 0b100, &[]).unwrap();
        assert!(t.all_hold());
        assert_eq!(t.leftover, a3.vertex(0b100));
    }

    #[test]
    fn rejects_non_idempotents() {
        let a = algebra(TypeTag::I2(3));
        let two: El<Rational> = a.vertex(0b01).scale(&Rational::from_int(2));
        assert!(transport(&a, 0b01, 0b10, &[(two, Rational::one())]).is_err());
    }
}
