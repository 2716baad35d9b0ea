use super::family::{Builder, El};
use super::{transport, DecompError, IdempotentFamily};
use crate::arith::{Rational, Ring};
use crate::coxeter::B3_VANISHING_INCLUSIONS;
use crate::omega::QuotientAlgebra;

type Q = Rational;

pub(crate) fn a3_family(alg: &QuotientAlgebra) -> Result<IdempotentFamily<Q>, DecompError> {
    let mut b: Builder<Q> = Builder::new(alg)?;
    let (x12, x21, x23, x32) = (b.x("1", "2")?, b.x("2", "1")?, b.x("2", "3")?, b.x("3", "2")?);
    let (x2_13, x13_2) = (b.x("2", "13")?, b.x("13", "2")?);
    let (x13_12, x12_13, x13_23, x23_13) = (b.x("13", "12")?, b.x("12", "13")?, b.x("13", "23")?, b.x("23", "13")?);
    let (e1, e2, e3, e13) = (b.e("1")?, b.e("2")?, b.e("3")?, b.e("13")?);

    b.check_eq("E_1 = X_{1,2}X_{2,1}", &e1, &alg.mul(&x12, &x21));
    b.check_eq("E_3 = X_{3,2}X_{2,3}", &e3, &alg.mul(&x32, &x23));
    let f2_22 = alg.mul(&x2_13, &x13_2);
    let f2_31 = alg.mul(&x21, &x12);
    b.check_eq("E_2 = X_{2,1}X_{1,2} + X_{2,13}X_{13,2}", &e2, &f2_31.add(&f2_22));
    b.check_eq("E_2 = X_{2,3}X_{3,2} + X_{2,13}X_{13,2}", &e2, &alg.mul(&x23, &x32).add(&f2_22));
    b.check_zero("X_{1,2}X_{2,13} = 0", &alg.mul(&x12, &x2_13));
    b.check_zero("X_{13,2}X_{2,1} = 0", &alg.mul(&x13_2, &x21));
    b.check_zero("X_{3,2}X_{2,13} = 0", &alg.mul(&x32, &x2_13));
    b.check_zero("X_{13,2}X_{2,3} = 0", &alg.mul(&x13_2, &x23));
    b.check_eq("X_{2,1}X_{1,2} = X_{2,3}X_{3,2}", &f2_31, &alg.mul(&x23, &x32));

    let f13_22 = alg.mul(&x13_2, &x2_13);
    let f13_211 = alg.mul(&x13_12, &x12_13);
    b.check_eq("X_{13,12}X_{12,13} = X_{13,23}X_{23,13}", &f13_211, &alg.mul(&x13_23, &x23_13));
    b.check_eq("E_13 = F_13^(2,2) + F_13^(2,1^2)", &e13, &f13_22.add(&f13_211));
    b.check_eq("δ(F_2^(2,2)) = F_13^(2,2)", &alg.delta(&f2_22), &f13_22);
    b.check_eq("δ(F_2^(3,1)) = F_13^(2,1^2)", &alg.delta(&f2_31), &f13_211);

    b.check_zero("X_{1,2} F_2^(2,2) = 0", &alg.mul(&x12, &f2_22));
    b.check_zero("F_2^(2,2) X_{2,1} = 0", &alg.mul(&f2_22, &x21));
    b.check_zero("X_{3,2} F_2^(2,2) = 0", &alg.mul(&x32, &f2_22));
    b.check_zero("F_2^(2,2) X_{2,3} = 0", &alg.mul(&f2_22, &x23));
    b.check_zero("F_13^(2,2) X_{13,12} = 0", &alg.mul(&f13_22, &x13_12));
    b.check_zero("F_13^(2,2) X_{13,23} = 0", &alg.mul(&f13_22, &x13_23));
    b.check_zero("X_{12,13} F_13^(2,2) = 0", &alg.mul(&x12_13, &f13_22));
    b.check_zero("X_{23,13} F_13^(2,2) = 0", &alg.mul(&x23_13, &f13_22));

    b.chain("(4)", vec![("∅", b.e("∅")?)])?;
    b.chain("(3,1)", vec![("1", e1), ("2", f2_31), ("3", e3)])?;
    // The (2,2) corner has its second diagonal entry at vertex 13.
    b.notes.push("ψ_(2,2)(e_22) is F_13^(2,2); the idempotent at vertex 2 cannot be a diagonal entry twice".into());
    b.chain("(2,2)", vec![("2", f2_22), ("13", f13_22)])?;
    b.chain("(2,1^2)", vec![("12", b.e("12")?), ("13", f13_211), ("23", b.e("23")?)])?;
    b.chain("(1^4)", vec![("123", b.e("123")?)])?;
    b.finish()
}

/// Bipartition conjugation (λ, μ) ↦ (μ', λ') on the labels of B3.
pub(crate) fn b3_conjugate(label: &str) -> &'static str {
    match label {
        "(3),∅" => "∅,(1^3)",
        "∅,(1^3)" => "(3),∅",
        "∅,(3)" => "(1^3),∅",
        "(1^3),∅" => "∅,(3)",
        "(2,1),∅" => "∅,(2,1)",
        "∅,(2,1)" => "(2,1),∅",
        "(2),(1)" => "(1),(1^2)",
        "(1),(1^2)" => "(2),(1)",
        "(1),(2)" => "(1^2),(1)",
        "(1^2),(1)" => "(1),(2)",
        _ => "",
    }
}

pub(crate) fn b3_family(alg: &QuotientAlgebra) -> Result<IdempotentFamily<Q>, DecompError> {
    let mut b: Builder<Q> = Builder::new(alg)?;
    let (x01, x10, x12, x21) = (b.x("0", "1")?, b.x("1", "0")?, b.x("1", "2")?, b.x("2", "1")?);
    let (x1_02, x02_1) = (b.x("1", "02")?, b.x("02", "1")?);
    let (x02_12, x12_02, x02_01, x01_02) = (b.x("02", "12")?, b.x("12", "02")?, b.x("02", "01")?, b.x("01", "02")?);
    let (x02_0, x02_2, x12_1, x01_1) = (b.x("02", "0")?, b.x("02", "2")?, b.x("12", "1")?, b.x("01", "1")?);
    let (e0, e1, e2) = (b.e("0")?, b.e("1")?, b.e("2")?);
    let half = Builder::<Q>::frac(1, 2);
    let two = Builder::<Q>::int(2);

    b.check_eq("E_2 = X_{2,1}X_{1,2}", &e2, &alg.mul(&x21, &x12));
    let f1p = alg.mul(&x12, &x21);
    let f1pp = alg.mul(&x1_02, &x02_1);
    b.check_eq("E_1 = X_{1,2}X_{2,1} + X_{1,02}X_{02,1}", &e1, &f1p.add(&f1pp));
    b.check_eq("F_1' is idempotent", &alg.mul(&f1p, &f1p), &f1p);
    b.check_zero("F_1' F_1'' = 0", &alg.mul(&f1p, &f1pp));

    let lhs1 = b.prod(&[&x01, &x10, &x01]).add(&b.prod(&[&x01, &f1pp])).sub(&x01.scale(&two));
    b.check_zero("X_{0,1}X_{1,0}X_{0,1} + X_{0,1}X_{1,02}X_{02,1} − 2X_{0,1} = 0", &lhs1);
    let lhs2 = b.prod(&[&x10, &x01, &x10]).add(&b.prod(&[&f1pp, &x10])).sub(&x10.scale(&two));
    b.check_zero("X_{1,0}X_{0,1}X_{1,0} + X_{1,02}X_{02,1}X_{1,0} − 2X_{1,0} = 0", &lhs2);

    let f = alg.mul(&x10, &x01);
    let ff = alg.mul(&f, &f);
    b.check_zero("f² + f F_1'' − 2f = 0", &ff.add(&alg.mul(&f, &f1pp)).sub(&f.scale(&two)));
    b.check_zero("f² + F_1'' f − 2f = 0", &ff.add(&alg.mul(&f1pp, &f)).sub(&f.scale(&two)));
    let fpp = alg.mul(&f1pp, &f);
    let fp = alg.mul(&f1p, &f);
    b.check_eq("f F_1'' = F_1'' f", &alg.mul(&f, &f1pp), &fpp);
    b.check_eq("f F_1' = F_1' f", &alg.mul(&f, &f1p), &fp);
    b.check_eq("f''² = f''", &alg.mul(&fpp, &fpp), &fpp);
    b.check_eq("f'² = 2f'", &alg.mul(&fp, &fp), &fp.scale(&two));

    let f1_2_1 = fp.scale(&half);
    let f1_21_e = f1p.sub(&f1_2_1);
    let f1_1_2 = fpp.clone();
    let f1_11_1 = f1pp.sub(&fpp);
    let quartet = [&f1_2_1, &f1_21_e, &f1_1_2, &f1_11_1];
    for (i, p) in quartet.iter().enumerate() {
        b.check_eq(format!("quartet idempotent {i} at 1 is idempotent"), &alg.mul(p, p), p);
        for (j, q) in quartet.iter().enumerate().skip(i + 1) {
            b.check_zero(format!("quartet idempotents {i}, {j} at 1 are orthogonal"), &alg.mul(p, q));
        }
    }
    let sum = quartet.iter().fold(El::zero(), |acc, p| acc.add(p));
    b.check_eq("E_1 = F_1^(2),(1) + F_1^(2,1),∅ + F_1^(1),(2) + F_1^(1^2),(1)", &e1, &sum);
    b.check_eq("X_{1,0}X_{0,1} = 2F_1^(2),(1) + F_1^(1),(2)", &f, &f1_2_1.scale(&two).add(&f1_1_2));

    // Transport along 1 → 0 with σ = 2 for (2),(1) and σ = 1 for (1),(2).
    let t0 = transport(alg, b.set("1")?, b.set("0")?, &[(f1_2_1.clone(), two.clone()), (f1_1_2.clone(), Q::one())])?;
    b.absorb("transport 1 → 0", &t0.checks);
    let f0_2_1 = t0.transported[0].clone();
    let f0_1_2 = t0.transported[1].clone();
    let f0_e_3 = t0.leftover.clone();
    b.check_eq("F_0^(1),(2) = X_{0,1} F_1^(1),(2) X_{1,0}", &f0_1_2, &b.prod(&[&x01, &f1_1_2, &x10]));
    b.check_eq("F_0^(2),(1) = ½ X_{0,1} F_1^(2),(1) X_{1,0}", &f0_2_1, &b.prod(&[&x01, &f1_2_1, &x10]).scale(&half));
    b.check_eq("F_0^∅,(3) = E_0 − F_0^(1),(2) − F_0^(2),(1)", &f0_e_3, &e0.sub(&f0_1_2).sub(&f0_2_1));

    let t2 = transport(alg, b.set("1")?, b.set("2")?, &[(f1_2_1.clone(), Q::one()), (f1_21_e.clone(), Q::one())])?;
    b.absorb("transport 1 → 2", &t2.checks);
    let f2_2_1 = t2.transported[0].clone();
    let f2_21_e = t2.transported[1].clone();
    b.check_zero("transport 1 → 2 leaves nothing at 2", &t2.leftover);

    b.check_zero("X_{0,1} F_1^(2,1),∅ = 0", &alg.mul(&x01, &f1_21_e));
    b.check_zero("X_{0,1} F_1^(1^2),(1) = 0", &alg.mul(&x01, &f1_11_1));
    b.check_zero("F_1^(2,1),∅ X_{1,0} = 0", &alg.mul(&f1_21_e, &x10));
    b.check_zero("F_1^(1^2),(1) X_{1,0} = 0", &alg.mul(&f1_11_1, &x10));
    b.check_zero("F_0^∅,(3) X_{0,1} = 0", &alg.mul(&f0_e_3, &x01));
    b.check_zero("X_{1,0} F_0^∅,(3) = 0", &alg.mul(&x10, &f0_e_3));

    // Vertices 01, 02, 12 are the δ-images of 2, 1, 0 with conjugated labels.
    let at = |v: &str, parts: &[(&str, &El<Q>)]| -> Vec<(String, String, El<Q>)> {
        parts.iter().map(|(l, p)| (b3_conjugate(l).to_string(), v.to_string(), alg.delta(p))).collect()
    };
    let mut images = at("01", &[("(2),(1)", &f2_2_1), ("(2,1),∅", &f2_21_e)]);
    images.extend(at("02", &[("(2),(1)", &f1_2_1), ("(2,1),∅", &f1_21_e), ("(1),(2)", &f1_1_2), ("(1^2),(1)", &f1_11_1)]));
    images.extend(at("12", &[("(1),(2)", &f0_1_2), ("(2),(1)", &f0_2_1), ("∅,(3)", &f0_e_3)]));
    let image = |label: &str, v: &str| images.iter().find(|(l, u, _)| l == label && u == v).map(|t| t.2.clone()).expect("δ-image exists");

    let f02pp = alg.mul(&x02_1, &x1_02);
    b.check_eq("X_{02,1}X_{1,02} = δ(F_1'')", &f02pp, &alg.delta(&f1pp));
    let lhs8 = b
        .prod(&[&x02_1, &x10, &x01])
        .add(&b.prod(&[&x02_1, &x1_02, &x02_1]))
        .add(&b.prod(&[&x02_12, &x12_02, &x02_1]))
        .sub(&x02_1.scale(&two));
    b.check_zero("X_{02,1}X_{1,0}X_{0,1} + X_{02,1}X_{1,02}X_{02,1} + X_{02,12}X_{12,02}X_{02,1} − 2X_{02,1} = 0", &lhs8);
    let f02_11_1 = image("(1^2),(1)", "02");
    let f02_1_11 = image("(1),(1^2)", "02");
    let f02_1_2 = image("(1),(2)", "02");
    b.check_eq("X_{02,12}X_{12,02} = F_02^(1^2),(1) + 2F_02^(1),(1^2)", &alg.mul(&x02_12, &x12_02), &f02_11_1.add(&f02_1_11.scale(&two)));
    b.check_zero("F_02^(1),(1^2) F_02'' = 0", &alg.mul(&f02_1_11, &f02pp));
    b.check_zero("X_{02,1}X_{1,2} = 0", &alg.mul(&x02_1, &x12));
    b.check_zero("X_{02,1} F_1^(2),(1) = 0", &alg.mul(&x02_1, &f1_2_1));
    b.notes.push("F_02^(1),(2) is the transport X_{02,1} F_1^(1),(2) X_{1,02}; the last factor is X_{1,02}".into());
    b.check_eq("F_02^(1),(2) = X_{02,1} F_1^(1),(2) X_{1,02}", &f02_1_2, &b.prod(&[&x02_1, &f1_1_2, &x1_02]));
    b.check_eq("F_02^(1^2),(1) = X_{02,1} F_1^(1^2),(1) X_{1,02}", &f02_11_1, &b.prod(&[&x02_1, &f1_11_1, &x1_02]));

    let beta = b.prod(&[&x02_2, &x21]).add(&b.prod(&[&x02_12, &x12_1])).sub(&b.prod(&[&x02_01, &x01_1]));
    b.check_eq("X_{02,0}X_{0,1} = X_{02,2}X_{2,1} + X_{02,12}X_{12,1} − X_{02,01}X_{01,1}", &alg.mul(&x02_0, &x01), &beta);
    b.check_zero("F_02^(1),(2) X_{02,0} F_0^(1),(2) = 0", &b.prod(&[&f02_1_2, &x02_0, &f0_1_2]));
    let f12_11_1 = image("(1^2),(1)", "12");
    b.check_zero("F_12^(1^2),(1) X_{12,1} F_1^(1^2),(1) = 0", &b.prod(&[&f12_11_1, &x12_1, &f1_11_1]));

    b.chain("(3),∅", vec![("∅", b.e("∅")?)])?;
    b.chain("∅,(1^3)", vec![("012", b.e("012")?)])?;
    b.chain("∅,(3)", vec![("0", f0_e_3)])?;
    b.chain("(1^3),∅", vec![("12", image("(1^3),∅", "12"))])?;
    b.component(
        "(2,1),∅",
        vec![("1", f1_21_e.clone()), ("2", f2_21_e.clone())],
        vec![("1", "2", Q::one(), x12.clone()), ("2", "1", Q::one(), x21.clone())],
    )?;
    b.component(
        "∅,(2,1)",
        vec![("02", image("∅,(2,1)", "02")), ("01", image("∅,(2,1)", "01"))],
        vec![("02", "01", Q::one().neg(), x02_01.clone()), ("01", "02", Q::one().neg(), x01_02.clone())],
    )?;
    b.component(
        "(2),(1)",
        vec![("0", f0_2_1.clone()), ("1", f1_2_1.clone()), ("2", f2_2_1.clone())],
        vec![
            ("0", "1", Q::one(), x01.clone()),
            ("1", "0", half.clone(), x10.clone()),
            ("1", "2", Q::one(), x12.clone()),
            ("2", "1", Q::one(), x21.clone()),
        ],
    )?;
    b.component(
        "(1),(1^2)",
        vec![("12", image("(1),(1^2)", "12")), ("02", f02_1_11.clone()), ("01", image("(1),(1^2)", "01"))],
        vec![
            ("12", "02", Q::one().neg(), x12_02.clone()),
            ("02", "12", half.neg(), x02_12.clone()),
            ("02", "01", Q::one().neg(), x02_01.clone()),
            ("01", "02", Q::one().neg(), x01_02.clone()),
        ],
    )?;
    // F_0^(1),(2) = X_{0,1} F_1^(1),(2) X_{1,0}, so ψ(e_21) is +F X_{1,0} F.
    b.notes.push("ψ_(1),(2)(e_21) = F X_{1,0} F with a plus sign, forced by e_12 e_21 = e_11".into());
    b.component(
        "(1),(2)",
        vec![("0", f0_1_2.clone()), ("1", f1_1_2.clone()), ("02", f02_1_2.clone())],
        vec![
            ("0", "1", Q::one(), x01.clone()),
            ("1", "0", Q::one(), x10.clone()),
            ("1", "02", Q::one(), x1_02.clone()),
            ("02", "1", Q::one(), x02_1.clone()),
        ],
    )?;
    b.component(
        "(1^2),(1)",
        vec![("12", f12_11_1), ("02", f02_11_1), ("1", f1_11_1)],
        vec![
            ("12", "02", Q::one(), x12_02),
            ("02", "12", Q::one(), x02_12),
            ("02", "1", Q::one().neg(), x02_1),
            ("1", "02", Q::one().neg(), x1_02),
        ],
    )?;
    for (l, i, j, m) in B3_VANISHING_INCLUSIONS {
        let sandwich = b.prod(&[&b.part(l, i)?, &b.x(i, j)?, &b.part(m, j)?]);
        b.check_zero(format!("F_{i}^{l} X_{{{i},{j}}} F_{j}^{m} = 0"), &sandwich);
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, TypeTag};
    use crate::omega::{compute_quotient, QuotientOptions};

    fn algebra(t: TypeTag) -> QuotientAlgebra {
        compute_quotient(&build_system(t).unwrap(), &QuotientOptions::default()).unwrap()
    }

    #[test]
    fn a3_loop_at_2_has_two_expressions() {
        let a = algebra(TypeTag::A3);
        let f = a3_family(&a).unwrap();
        assert!(f.identities.iter().any(|c| c.name == "X_{2,1}X_{1,2} = X_{2,3}X_{3,2}" && c.holds));
        assert_eq!(f.len(), 5);
    }

    #[test]
    fn b3_family_builds() {
        let a = algebra(TypeTag::B3);
        let f = b3_family(&a).unwrap();
        assert_eq!(f.len(), 10);
        assert!(f.all_identities_hold());
    }

    #[test]
    fn conjugation_is_an_involution() {
        for l in ["(3),∅", "∅,(3)", "(2,1),∅", "(2),(1)", "(1),(2)"] {
            assert_eq!(b3_conjugate(b3_conjugate(l)), l);
        }
    }
}
