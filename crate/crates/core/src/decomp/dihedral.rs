use super::family::{Builder, El};
use super::{transport, DecompError, IdempotentFamily};
use crate::arith::{sigma, Field, NumberFieldElem, Ring};
use crate::coxeter::TypeTag;
use crate::omega::QuotientAlgebra;

type K = NumberFieldElem;

/// The eigen-idempotents of the loops X_12 X_21 and X_21 X_12 of I2(m):
/// `side1[a-1]` = F_{1,a}, `side2[a-1]` = F_{2,a} for 1 ≤ a ≤ ⌊m/2⌋.
#[derive(Clone, Debug)]
pub struct SpectralIdempotents {
    pub m: u32,
    pub sigmas: Vec<K>,
    pub side1: Vec<El<K>>,
    pub side2: Vec<El<K>>,
    /// The differences σ_a − σ_b that were inverted, rendered.
    pub inverted: Vec<String>,
}

fn lagrange(alg: &QuotientAlgebra, loop_elem: &El<K>, unit: &El<K>, sigmas: &[K], a: usize, inverted: &mut Vec<String>) -> Result<El<K>, DecompError> {
    let mut acc = unit.clone();
    for (b, sb) in sigmas.iter().enumerate() {
        if b == a {
            continue;
        }
        let d = sigmas[a].sub(sb);
        let inv = d.inv()?;
        inverted.push(format!("σ_{} − σ_{} = {d}", a + 1, b + 1));
        let factor = loop_elem.sub(&unit.scale(sb)).scale(&inv);
        acc = alg.mul(&acc, &factor);
    }
    Ok(acc)
}

/// F_{i,a} = Π_{b≠a} (L_i − σ_b E_i)/(σ_a − σ_b) with L_1 = X_12 X_21 and
/// L_2 = X_21 X_12.
pub fn spectral_idempotents_i2(alg: &QuotientAlgebra) -> Result<SpectralIdempotents, DecompError> {
    let TypeTag::I2(m) = alg.system().tag else {
        return Err(DecompError::Unsupported(alg.system().tag.to_string()));
    };
    let sigmas: Vec<K> = (1..=m / 2).map(|a| sigma(a, m)).collect::<Result<_, _>>()?;
    let x12: El<K> = alg.edge(0b01, 0b10)?;
    let x21: El<K> = alg.edge(0b10, 0b01)?;
    let l1 = alg.mul(&x12, &x21);
    let l2 = alg.mul(&x21, &x12);
    let (e1, e2) = (alg.vertex(0b01), alg.vertex(0b10));
    let mut inverted = Vec::new();
    let mut side1 = Vec::new();
    let mut side2 = Vec::new();
    for a in 0..sigmas.len() {
        side1.push(lagrange(alg, &l1, &e1, &sigmas, a, &mut inverted)?);
        side2.push(lagrange(alg, &l2, &e2, &sigmas, a, &mut inverted)?);
    }
    inverted.sort();
    inverted.dedup();
    Ok(SpectralIdempotents { m, sigmas, side1, side2, inverted })
}

pub(crate) fn i2_family(alg: &QuotientAlgebra) -> Result<IdempotentFamily<K>, DecompError> {
    let sp = spectral_idempotents_i2(alg)?;
    let m = sp.m;
    let mut b: Builder<K> = Builder::new(alg)?;
    b.inverted = sp.inverted.clone();
    let x12 = b.x("1", "2")?;
    let x21 = b.x("2", "1")?;
    let (e1, e2) = (b.e("1")?, b.e("2")?);

    for (side, (vertex, lp, unit)) in [(&sp.side1, ("1", alg.mul(&x12, &x21), &e1)), (&sp.side2, ("2", alg.mul(&x21, &x12), &e2))] {
        for (a, f) in side.iter().enumerate() {
            b.check_eq(format!("F_{{{vertex},{}}} is idempotent", a + 1), &alg.mul(f, f), f);
            for (c, g) in side.iter().enumerate().skip(a + 1) {
                b.check_zero(format!("F_{{{vertex},{}}} F_{{{vertex},{}}} = 0", a + 1, c + 1), &alg.mul(f, g));
            }
        }
        let sum = side.iter().fold(El::zero(), |acc, f| acc.add(f));
        b.check_eq(format!("Σ_a F_{{{vertex},a}} = E_{vertex}"), &sum, unit);
        let spectral = side.iter().zip(&sp.sigmas).fold(El::zero(), |acc, (f, s)| acc.add(&f.scale(s)));
        b.check_eq(format!("loop at {vertex} = Σ_a σ_a F_{{{vertex},a}}"), &lp, &spectral);
    }

    b.component("1", vec![("∅", b.e("∅")?)], Vec::new())?;
    b.component("sgn", vec![("12", b.e("12")?)], Vec::new())?;
    let nonzero: Vec<(El<K>, K)> = sp.side1.iter().cloned().zip(sp.sigmas.iter().cloned()).filter(|(_, s)| !s.is_zero()).collect();
    let moved_all = transport(alg, 0b01, 0b10, &nonzero)?;
    b.absorb("transport 1 → 2", &moved_all.checks);
    for a in 1..=(m - 1) / 2 {
        let k = a as usize - 1;
        let s = sp.sigmas[k].clone();
        let (f1, f2) = (sp.side1[k].clone(), sp.side2[k].clone());
        let moved = b.prod(&[&x12, &f2, &x21]).scale(&s.inv()?);
        b.check_eq(format!("F_{{1,{a}}} = σ_{a}⁻¹ X_12 F_{{2,{a}}} X_21"), &moved, &f1);
        b.check_eq(format!("transport of F_{{1,{a}}} along 1 → 2 is F_{{2,{a}}}"), &moved_all.transported[k], &f2);
        b.component(&format!("λ_{a}"), vec![("1", f1), ("2", f2)], vec![("1", "2", K::one(), x12.clone()), ("2", "1", s.inv()?, x21.clone())])?;
    }
    if m % 2 == 0 {
        let k = (m / 2) as usize - 1;
        b.check("σ_{m/2} = 0", sp.sigmas[k].is_zero());
        b.check_eq("transport leftover at 2 is F_{2,m/2}", &moved_all.leftover, &sp.side2[k]);
        b.check_zero("X_12 F_{2,m/2} = 0", &alg.mul(&x12, &sp.side2[k]));
        b.check_zero("X_21 F_{1,m/2} = 0", &alg.mul(&x21, &sp.side1[k]));
        b.check_zero("F_{1,m/2} X_12 = 0", &alg.mul(&sp.side1[k], &x12));
        b.check_zero("F_{2,m/2} X_21 = 0", &alg.mul(&sp.side2[k], &x21));
        b.component("ε_1", vec![("1", sp.side1[k].clone())], Vec::new())?;
        b.component("ε_2", vec![("2", sp.side2[k].clone())], Vec::new())?;
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{FieldCtx, Rational};
    use crate::coxeter::build_system;
    use crate::omega::{compute_quotient, QuotientOptions};

    fn algebra(m: u32) -> QuotientAlgebra {
        compute_quotient(&build_system(TypeTag::I2(m)).unwrap(), &QuotientOptions::default()).unwrap()
    }

    #[test]
    fn m3_has_a_single_idempotent_per_side() {
        let a = algebra(3);
        let sp = spectral_idempotents_i2(&a).unwrap();
        assert_eq!(sp.side1, vec![a.vertex::<K>(0b01)]);
        assert!(sp.inverted.is_empty());
    }

    #[test]
    fn m5_eigenvalues_are_roots_of_x2_minus_3x_plus_1() {
        let sp = spectral_idempotents_i2(&algebra(5)).unwrap();
        let ctx = FieldCtx::get(5).unwrap();
        for s in &sp.sigmas {
            let v = s.mul(s).sub(&s.mul(&K::from_int(3))).add(&ctx.from_rational(Rational::one()));
            assert!(v.is_zero());
        }
        assert_eq!(sp.side1.len(), 2);
    }

    #[test]
    fn m4_middle_idempotent_kills_the_edge() {
        let a = algebra(4);
        let sp = spectral_idempotents_i2(&a).unwrap();
        let x12: El<K> = a.edge(0b01, 0b10).unwrap();
        assert!(a.mul(&x12, &sp.side2[1]).is_zero());
        assert!(!sp.side1[1].is_zero());
    }

    #[test]
    fn families_build_for_small_m() {
        for m in 3..=6 {
            let f = i2_family(&algebra(m)).unwrap();
            assert!(f.all_identities_hold());
            assert_eq!(f.len(), if m % 2 == 0 { m as usize / 2 + 3 } else { (m as usize - 1) / 2 + 2 });
        }
    }
}
