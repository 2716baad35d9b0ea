use super::family::{Builder, El};
use super::{transport, DecompError, IdempotentFamily};
use crate::arith::{Rational, Ring};
use crate::omega::QuotientAlgebra;

type Q = Rational;

/// The diagram automorphism s ↦ 5 − s of A4 on generator indices.
const FLIP: [usize; 4] = [3, 2, 1, 0];

pub(crate) fn a4_family(alg: &QuotientAlgebra) -> Result<IdempotentFamily<Q>, DecompError> {
    let mut b: Builder<Q> = Builder::new(alg)?;
    let flip = |u: &El<Q>| alg.automorphism(&FLIP, u);
    let one = Q::one();

    let (x12, x21, x23, x32, x34, x43) = (b.x("1", "2")?, b.x("2", "1")?, b.x("2", "3")?, b.x("3", "2")?, b.x("3", "4")?, b.x("4", "3")?);
    let (x2_13, x13_2) = (b.x("2", "13")?, b.x("13", "2")?);
    let (x12_13, x13_12) = (b.x("12", "13")?, b.x("13", "12")?);
    let (x13_124, x124_13) = (b.x("13", "124")?, b.x("124", "13")?);
    let (x13_14, x14_13, x13_23, x23_13) = (b.x("13", "14")?, b.x("14", "13")?, b.x("13", "23")?, b.x("23", "13")?);
    let (x14_24, x24_14, x23_24, x24_23) = (b.x("14", "24")?, b.x("24", "14")?, b.x("23", "24")?, b.x("24", "23")?);
    let (e1, e2, e4) = (b.e("1")?, b.e("2")?, b.e("4")?);
    let (e12, e13, e14, e23) = (b.e("12")?, b.e("13")?, b.e("14")?, b.e("23")?);

    // (4,1) and, through δ, (2,1^3).
    b.check_eq("E_1 = X_{1,2}X_{2,1}", &e1, &alg.mul(&x12, &x21));
    let f2_41 = alg.mul(&x21, &x12);
    let f2_32 = alg.mul(&x2_13, &x13_2);
    b.check_eq("E_2 = X_{2,1}X_{1,2} + X_{2,13}X_{13,2}", &e2, &f2_41.add(&f2_32));
    b.check_eq("E_2 = X_{2,3}X_{3,2} + X_{2,13}X_{13,2}", &e2, &alg.mul(&x23, &x32).add(&f2_32));
    b.check_eq("F_2^(4,1) = X_{2,3}X_{3,2}", &f2_41, &alg.mul(&x23, &x32));
    let f3_41 = alg.mul(&x34, &x43);
    b.check_eq("X_{3,4}X_{4,3} = X_{3,2}X_{2,3}", &f3_41, &alg.mul(&x32, &x23));
    b.check_eq("F_3^(4,1) = α(F_2^(4,1))", &f3_41, &flip(&f2_41)?);
    let f134 = b.prod(&[&b.x("134", "234")?, &b.x("234", "134")?]);
    let f124 = b.prod(&[&b.x("124", "123")?, &b.x("123", "124")?]);
    b.check_eq("δ(F_2^(4,1)) = X_{134,234}X_{234,134}", &alg.delta(&f2_41), &f134);
    b.check_eq("δ(F_3^(4,1)) = X_{124,123}X_{123,124}", &alg.delta(&f3_41), &f124);

    // (3,2) at 2 and 13.
    let t12 = transport(alg, b.set("1")?, b.set("2")?, &[(e1.clone(), one.clone())])?;
    b.absorb("transport 1 → 2", &t12.checks);
    b.check_eq("transport of E_1 along 1 → 2 is F_2^(4,1)", &t12.transported[0], &f2_41);
    b.check_eq("leftover of 1 → 2 is X_{2,13}X_{13,2}", &t12.leftover, &f2_32);
    b.check_zero("F_2^(4,1) X_{2,13} = 0", &alg.mul(&f2_41, &x2_13));
    let t2_13 = transport(alg, b.set("2")?, b.set("13")?, &[(f2_32.clone(), one.clone())])?;
    b.absorb("transport 2 → 13", &t2_13.checks);
    let f13_32 = t2_13.transported[0].clone();
    b.check_eq("F_13^(3,2) = X_{13,2}X_{2,13}", &f13_32, &alg.mul(&x13_2, &x2_13));
    b.check_eq("F_13^(3,2) = X_{13,2} F_2^(3,2) X_{2,13}", &f13_32, &b.prod(&[&x13_2, &f2_32, &x2_13]));

    let f13_221 = alg.mul(&x13_124, &x124_13);
    b.notes.push("F_13^(2,2,1) is the image of F_13^(3,2) under δ∘α; δ alone sends vertex 13 to 24".into());
    b.check_eq("δ(α(F_13^(3,2))) = X_{13,124}X_{124,13}", &alg.delta(&flip(&f13_32)?), &f13_221);
    b.check_eq("E_12 = X_{12,13}X_{13,12}", &e12, &alg.mul(&x12_13, &x13_12));
    let f13_311 = alg.mul(&x13_12, &x12_13);
    b.check_eq("E_13 = X_{13,2}X_{2,13} + X_{13,12}X_{12,13} + X_{13,124}X_{124,13}", &e13, &f13_32.add(&f13_311).add(&f13_221));
    let trio = [("(3,2)", &f13_32), ("(3,1^2)", &f13_311), ("(2^2,1)", &f13_221)];
    for (i, (l, p)) in trio.iter().enumerate() {
        b.check_eq(format!("F_13^{l} is idempotent"), &alg.mul(p, p), p);
        for (m, q) in trio.iter().skip(i + 1) {
            b.check_zero(format!("F_13^{l} F_13^{m} = 0"), &alg.mul(p, q));
        }
    }

    let f24_32 = flip(&f13_32)?;
    let f24_311 = flip(&f13_311)?;
    let f24_221 = flip(&f13_221)?;

    // {14} and {23} by transport from {13}.
    b.check_eq("E_13 = X_{13,14}X_{14,13} + X_{13,124}X_{124,13}", &e13, &alg.mul(&x13_14, &x14_13).add(&f13_221));
    b.check_eq("X_{13,14}X_{14,13} = F_13^(3,2) + F_13^(3,1^2)", &alg.mul(&x13_14, &x14_13), &f13_32.add(&f13_311));
    let t14 = transport(alg, b.set("13")?, b.set("14")?, &[(f13_32.clone(), one.clone()), (f13_311.clone(), one.clone())])?;
    b.absorb("transport 13 → 14", &t14.checks);
    let (f14_32, f14_311) = (t14.transported[0].clone(), t14.transported[1].clone());
    b.check_eq("E_14 = X_{14,13}X_{13,14}", &e14, &alg.mul(&x14_13, &x13_14));
    b.check_zero("transport 13 → 14 leaves nothing at 14", &t14.leftover);
    b.check_eq("X_{13,23}X_{23,13} = F_13^(3,1^2) + F_13^(2^2,1)", &alg.mul(&x13_23, &x23_13), &f13_311.add(&f13_221));
    let t23 = transport(alg, b.set("13")?, b.set("23")?, &[(f13_311.clone(), one.clone()), (f13_221.clone(), one.clone())])?;
    b.absorb("transport 13 → 23", &t23.checks);
    let (f23_311, f23_221) = (t23.transported[0].clone(), t23.transported[1].clone());
    b.check_eq("E_23 = X_{23,13}X_{13,23}", &e23, &alg.mul(&x23_13, &x13_23));
    b.check_zero("transport 13 → 23 leaves nothing at 23", &t23.leftover);

    // The transports from {24} give the same idempotents.
    for (l, f14, f24) in [("(3,2)", &f14_32, &f24_32), ("(3,1^2)", &f14_311, &f24_311)] {
        let tilde = b.prod(&[&x14_24, f24, &x24_14]);
        b.check_eq(format!("X_{{14,24}} F_24^{l} X_{{24,14}} = α(F_14^{l})"), &tilde, &flip(f14)?);
        b.check_eq(format!("X_{{14,24}} F_24^{l} X_{{24,14}} = F_14^{l}"), &tilde, f14);
    }
    for (l, f23, f24) in [("(3,1^2)", &f23_311, &f24_311), ("(2^2,1)", &f23_221, &f24_221)] {
        let tilde = b.prod(&[&x23_24, f24, &x24_23]);
        b.check_eq(format!("X_{{23,24}} F_24^{l} X_{{24,23}} = α(F_23^{l})"), &tilde, &flip(f23)?);
        b.check_eq(format!("X_{{23,24}} F_24^{l} X_{{24,23}} = F_23^{l}"), &tilde, f23);
    }

    let (x124_24, x13_3, x3_24, x12_2) = (b.x("124", "24")?, b.x("13", "3")?, b.x("3", "24")?, b.x("12", "2")?);
    let rhs = b.prod(&[&x13_23, &x23_24]).sub(&b.prod(&[&x13_124, &x124_24])).add(&b.prod(&[&x13_3, &x3_24]));
    b.check_eq("X_{13,14}X_{14,24} = X_{13,23}X_{23,24} − X_{13,124}X_{124,24} + X_{13,3}X_{3,24}", &alg.mul(&x13_14, &x14_24), &rhs);
    b.check_eq("X_{12,2}X_{2,3} = X_{12,13}X_{13,3}", &alg.mul(&x12_2, &x23), &alg.mul(&x12_13, &x13_3));
    b.check_zero("X_{2,3}X_{3,24} = 0", &alg.mul(&x23, &x3_24));
    b.check_zero("F_13^(3,2) X_{13,23} = 0", &alg.mul(&f13_32, &x13_23));
    b.check_zero("X_{23,24} F_24^(3,2) = 0", &alg.mul(&x23_24, &f24_32));
    b.check_zero("F_13^(3,2) X_{13,124} = 0", &alg.mul(&f13_32, &x13_124));
    b.check_zero("F_13^(3,1^2) X_{13,124} = 0", &alg.mul(&f13_311, &x13_124));
    b.check_zero("X_{3,24} F_24^(3,1^2) = 0", &alg.mul(&x3_24, &f24_311));
    b.check_zero("F_13^(3,1^2) X_{13,3} X_{3,24} = 0", &b.prod(&[&f13_311, &x13_3, &x3_24]));

    let (x24_2, x24_134, x134_13, x24_3) = (b.x("24", "2")?, b.x("24", "134")?, b.x("134", "13")?, b.x("24", "3")?);
    let rhs = b.prod(&[&x24_14, &x14_13]).add(&b.prod(&[&x24_134, &x134_13])).sub(&b.prod(&[&x24_23, &x23_13]));
    b.check_eq("X_{24,2}X_{2,13} = X_{24,14}X_{14,13} + X_{24,134}X_{134,13} − X_{24,23}X_{23,13}", &alg.mul(&x24_2, &x2_13), &rhs);
    b.check_zero("X_{23,13}X_{13,2} = 0", &alg.mul(&x23_13, &x13_2));
    b.check_zero("X_{3,24}X_{24,134} = 0", &alg.mul(&x3_24, &x24_134));

    let f3_32 = flip(&f2_32)?;
    b.chain("(5)", vec![("∅", b.e("∅")?)])?;
    b.chain("(1^5)", vec![("1234", b.e("1234")?)])?;
    b.chain("(4,1)", vec![("1", e1), ("2", f2_41.clone()), ("3", f3_41.clone()), ("4", e4)])?;
    b.chain("(2,1^3)", vec![("234", b.e("234")?), ("134", f134), ("124", f124), ("123", b.e("123")?)])?;
    b.chain("(3,2)", vec![("2", f2_32.clone()), ("13", f13_32.clone()), ("14", f14_32.clone()), ("24", f24_32.clone()), ("3", f3_32.clone())])?;
    let (f124_221, f134_221) = (alg.delta(&f3_32), alg.delta(&f2_32));
    b.check_eq("δ(F_3^(3,2)) = X_{124,13}X_{13,124} transported", &f124_221, &b.prod(&[&x124_13, &f13_221, &x13_124]));
    b.chain("(2^2,1)", vec![("134", f134_221), ("24", f24_221), ("23", f23_221.clone()), ("13", f13_221), ("124", f124_221)])?;

    // X^λ_{24,2} for λ = (3,2) is a product of chain generators.
    let lam = "(3,2)";
    let sandwich = |u: &str, v: &str, x: &El<Q>| -> Result<El<Q>, DecompError> { Ok(b.prod(&[&b.part(lam, u)?, x, &b.part(lam, v)?])) };
    let lhs = sandwich("24", "2", &x24_2)?;
    let path = [sandwich("24", "3", &x24_3)?, sandwich("3", "24", &x3_24)?, sandwich("24", "14", &x24_14)?, sandwich("14", "13", &x14_13)?, sandwich("13", "2", &x13_2)?];
    let rhs = b.prod(&path.iter().collect::<Vec<_>>());
    b.check_eq("X^(3,2)_{24,2} = X^(3,2)_{24,3} X^(3,2)_{3,24} X^(3,2)_{24,14} X^(3,2)_{14,13} X^(3,2)_{13,2}", &lhs, &rhs);

    // (3,1^2): a chain through 12, 13, 14, 23, 24, 34 with composite steps.
    let f34_311 = flip(&e12)?;
    b.check_eq("α(E_12) = E_34", &f34_311, &b.e("34")?);
    let x24_34 = b.x("24", "34")?;
    let x34_24 = b.x("34", "24")?;
    let lam = "(3,1^2)";
    let corner = [("12", e12.clone()), ("13", f13_311.clone()), ("14", f14_311.clone()), ("23", f23_311.clone()), ("24", f24_311.clone()), ("34", f34_311)];
    let part = |v: &str| corner.iter().find(|c| c.0 == v).map(|c| c.1.clone()).expect("vertex in corner");
    let xl = |u: &str, v: &str, x: &El<Q>| alg.product(&[&part(u), x, &part(v)]);
    let e34 = alg.mul(&xl("14", "13", &x14_13), &xl("13", "23", &x13_23));
    let e43 = alg.mul(&xl("23", "13", &x23_13), &xl("13", "14", &x13_14));
    b.check_eq("X^λ_{14,13}X^λ_{13,23} · X^λ_{23,13}X^λ_{13,14} = F_14^λ", &alg.mul(&e34, &e43), &part("14"));
    b.check_eq("X^λ_{23,13}X^λ_{13,14} · X^λ_{14,13}X^λ_{13,23} = F_23^λ", &alg.mul(&e43, &e34), &part("23"));
    let x24_14l = xl("24", "14", &x24_14);
    b.check_eq("X^λ_{24,14} = X^λ_{24,23}X^λ_{23,13}X^λ_{13,14}", &x24_14l, &b.prod(&[&xl("24", "23", &x24_23), &xl("23", "13", &x23_13), &xl("13", "14", &x13_14)]));
    b.component(
        lam,
        corner.iter().map(|(v, p)| (*v, p.clone())).collect(),
        vec![
            ("12", "13", one.clone(), x12_13),
            ("13", "12", one.clone(), x13_12),
            ("13", "14", one.clone(), x13_14.clone()),
            ("14", "13", one.clone(), x14_13.clone()),
            ("14", "23", one.clone(), e34),
            ("23", "14", one.clone(), e43),
            ("23", "24", one.clone(), x23_24),
            ("24", "23", one.clone(), x24_23),
            ("24", "34", one.clone(), x24_34),
            ("34", "24", one, x34_24),
        ],
    )?;
    b.finish()
}
