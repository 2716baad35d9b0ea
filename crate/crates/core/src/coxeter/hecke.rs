use std::fmt::Display;

use num_bigint::BigInt;
use serde::Serialize;

use super::{CoxeterError, CoxeterSystem};
use crate::arith::{tau_poly, IntPoly, LaurentPoly, NumberFieldElem, Rational, Ring};
use crate::linalg::Matrix;

/// Square matrix of Laurent polynomials over the system's number field.
pub type SquareMatrix = Matrix<LaurentPoly<NumberFieldElem>>;

/// Outcome of one relation check; on failure names the first nonzero entry
/// of the difference.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RelationCheck {
    pub relation: String,
    pub pass: bool,
    pub first_nonzero: Option<(usize, usize, String)>,
}

impl RelationCheck {
    fn from_difference<R: Ring + Display>(relation: String, diff: &Matrix<R>) -> Self {
        let first_nonzero = diff.first_nonzero().map(|(i, j, x)| (i, j, x.to_string()));
        RelationCheck { relation, pass: first_nonzero.is_none(), first_nonzero }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct HeckeReport {
    pub pass: bool,
    pub relations: Vec<RelationCheck>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct BraidFactorizationReport {
    pub pass: bool,
    /// One entry per r = 0..=r_max.
    pub per_r: Vec<RelationCheck>,
}

/// Δ_m(x, y): alternating product of length m starting with x minus the one
/// starting with y.
pub fn braid_commutator<R: Ring>(x: &Matrix<R>, y: &Matrix<R>, m: u32) -> Result<Matrix<R>, CoxeterError> {
    if !x.is_square() || (x.rows(), x.cols()) != (y.rows(), y.cols()) {
        return Err(CoxeterError::DimensionMismatch);
    }
    let n = x.rows();
    let (mut a, mut b) = (Matrix::identity(n), Matrix::identity(n));
    for k in 0..m {
        let (p, q) = if k % 2 == 0 { (x, y) } else { (y, x) };
        a = a.mul(p);
        b = b.mul(q);
    }
    Ok(if m == 0 { Matrix::zero(n, n) } else { a.sub(&b) })
}

fn big_to_ring<R: Ring>(c: &BigInt) -> R {
    R::from_rational(&Rational::from_bigint(c.clone()))
}

/// Evaluates an integer polynomial at a square matrix (Horner).
pub fn eval_int_poly<R: Ring>(p: &IntPoly, x: &Matrix<R>) -> Matrix<R> {
    let n = x.rows();
    let mut acc = Matrix::zero(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&Matrix::identity(n).scale(&big_to_ring(c)));
    }
    acc
}

/// ω(T_s) for a vertex labelling and weight matrix: −v⁻¹ on vertices whose
/// label contains s, v on the others, and the weights off the diagonal.
pub fn hecke_generator_matrix<K: Ring>(contains_s: &[bool], weights: &Matrix<K>) -> Matrix<LaurentPoly<K>> {
    let n = contains_s.len();
    let mut out = Matrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let entry = if i == j {
                if contains_s[i] {
                    LaurentPoly::monomial(K::one().neg(), -1)
                } else {
                    LaurentPoly::monomial(K::one(), 1)
                }
            } else {
                LaurentPoly::constant(weights.get(i, j).clone())
            };
            out.set(i, j, entry);
        }
    }
    out
}

fn quadratic_defect<K: Ring>(x: &Matrix<LaurentPoly<K>>, zeta: &LaurentPoly<K>) -> Matrix<LaurentPoly<K>> {
    let n = x.rows();
    x.mul(x).sub(&Matrix::identity(n)).sub(&x.scale(zeta))
}

/// Checks the quadratic and braid relations of the Hecke algebra for one
/// matrix per generator.
pub fn check_hecke_rep<K: Ring + Display>(sys: &CoxeterSystem, mats: &[Matrix<LaurentPoly<K>>]) -> Result<HeckeReport, CoxeterError> {
    if mats.len() != sys.rank() {
        return Err(CoxeterError::DimensionMismatch);
    }
    let n = mats[0].rows();
    if mats.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(CoxeterError::DimensionMismatch);
    }
    let zeta = LaurentPoly::<K>::v_minus_vinv();
    let mut relations = Vec::new();
    for (s, x) in mats.iter().enumerate() {
        let g = &sys.generators[s];
        relations.push(RelationCheck::from_difference(format!("T_{g}^2 = 1 + (v - v^-1) T_{g}"), &quadratic_defect(x, &zeta)));
    }
    for s in 0..sys.rank() {
        for t in s + 1..sys.rank() {
            let m = sys.m(s, t);
            let d = braid_commutator(&mats[s], &mats[t], m)?;
            let (a, b) = (&sys.generators[s], &sys.generators[t]);
            relations.push(RelationCheck::from_difference(format!("Delta_{m}(T_{a}, T_{b}) = 0"), &d));
        }
    }
    Ok(HeckeReport { pass: relations.iter().all(|r| r.pass), relations })
}

/// Checks Δ_{r+1}(x,y) = (−1)^r τ_r(x + y − ζ)(x − y) for r = 0..=r_max,
/// given x² = 1 + ζx and y² = 1 + ζy.
pub fn verify_braid_factorization<K: Ring + Display>(
    x: &Matrix<LaurentPoly<K>>,
    y: &Matrix<LaurentPoly<K>>,
    zeta: &LaurentPoly<K>,
    r_max: u32,
) -> Result<BraidFactorizationReport, CoxeterError> {
    if !x.is_square() || (x.rows(), x.cols()) != (y.rows(), y.cols()) {
        return Err(CoxeterError::DimensionMismatch);
    }
    for (name, m) in [("x", x), ("y", y)] {
        if !quadratic_defect(m, zeta).is_zero() {
            return Err(CoxeterError::Precondition(format!("{name}^2 != 1 + zeta {name}")));
        }
    }
    let n = x.rows();
    let shifted = x.add(y).sub(&Matrix::identity(n).scale(zeta));
    let diff = x.sub(y);
    let per_r = (0..=r_max)
        .map(|r| {
            let lhs = braid_commutator(x, y, r + 1).expect("shapes checked");
            let mut rhs = eval_int_poly(&tau_poly(r as i64), &shifted).mul(&diff);
            if r % 2 == 1 {
                rhs = rhs.neg();
            }
            RelationCheck::from_difference(format!("r = {r}"), &lhs.sub(&rhs))
        })
        .collect::<Vec<_>>();
    Ok(BraidFactorizationReport { pass: per_r.iter().all(|c| c.pass), per_r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{sigma, Rational};
    use crate::coxeter::{build_system, TypeTag};

    type L = LaurentPoly<NumberFieldElem>;

    fn scalar(p: L) -> SquareMatrix {
        Matrix::from_rows(vec![vec![p]])
    }

    fn dihedral(m: u32, a: u32) -> (SquareMatrix, SquareMatrix) {
        let s = sigma(a, m).unwrap();
        let mut w1 = Matrix::zero(2, 2);
        w1.set(0, 1, NumberFieldElem::one());
        let mut w2 = Matrix::zero(2, 2);
        w2.set(1, 0, s);
        (hecke_generator_matrix(&[true, false], &w1), hecke_generator_matrix(&[false, true], &w2))
    }

    #[test]
    fn commutator_small_cases() {
        let (x, y) = dihedral(5, 1);
        assert!(braid_commutator(&x, &y, 0).unwrap().is_zero());
        assert_eq!(braid_commutator(&x, &y, 1).unwrap(), x.sub(&y));
        assert_eq!(braid_commutator(&x, &y, 3).unwrap(), x.mul(&y).mul(&x).sub(&y.mul(&x).mul(&y)));
        for m in 0..6 {
            assert!(braid_commutator(&x, &x, m).unwrap().is_zero());
        }
    }

    #[test]
    fn one_dimensional_reps() {
        let sys = build_system(TypeTag::A3).unwrap();
        let triv = vec![scalar(L::v()); 3];
        assert!(check_hecke_rep(&sys, &triv).unwrap().pass);
        let sgn = vec![scalar(L::monomial(NumberFieldElem::from_int(-1), -1)); 3];
        assert!(check_hecke_rep(&sys, &sgn).unwrap().pass);
    }

    #[test]
    fn dihedral_two_vertex_graphs() {
        for m in 3..=8 {
            let sys = build_system(TypeTag::I2(m)).unwrap();
            for a in 1..=(m - 1) / 2 {
                let (x, y) = dihedral(m, a);
                let rep = check_hecke_rep(&sys, &[x.clone(), y.clone()]).unwrap();
                assert!(rep.pass, "m = {m}, a = {a}: {rep:?}");
                let f = verify_braid_factorization(&x, &y, &L::v_minus_vinv(), m).unwrap();
                assert!(f.pass, "m = {m}");
            }
        }
    }

    #[test]
    fn wrong_weight_fails_with_entry() {
        let sys = build_system(TypeTag::I2(5)).unwrap();
        let (x, _) = dihedral(5, 1);
        let mut w2 = Matrix::zero(2, 2);
        w2.set(1, 0, NumberFieldElem::from_rational(&Rational::from_int(5)));
        let y = hecke_generator_matrix(&[false, true], &w2);
        let rep = check_hecke_rep(&sys, &[x, y]).unwrap();
        assert!(!rep.pass);
        assert!(rep.relations.iter().any(|r| !r.pass && r.first_nonzero.is_some()));
    }

    #[test]
    fn factorization_precondition_is_reported() {
        let x = scalar(L::v().add(&L::v()));
        assert!(matches!(verify_braid_factorization(&x, &x, &L::v_minus_vinv(), 2), Err(CoxeterError::Precondition(_))));
    }
}
