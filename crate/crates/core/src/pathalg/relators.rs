use std::collections::BTreeMap;

use serde::Serialize;

use super::{Path, PathElement, PathError, Quiver};
use crate::arith::{tau_poly, LaurentPoly, Rational, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelatorKind {
    Alpha,
    Beta,
    /// A v-coefficient of Δ_m(ι(T_s), ι(T_t)) restricted to one (I, J) block.
    Definitional,
}

/// One relator E_head · r · E_tail with integral coefficients.
#[derive(Clone, Debug)]
pub struct Relator {
    pub kind: RelatorKind,
    pub s: usize,
    pub t: usize,
    pub head: u32,
    pub tail: u32,
    pub element: PathElement<Rational>,
}

/// P^r_IJ(s,t) = E_I x_s x_t x_s ⋯ E_J with r alternating factors.
pub fn p_element(q: &Quiver, head: u32, tail: u32, s: usize, t: usize, r: usize) -> PathElement<Rational> {
    let mut out = PathElement::zero();
    let mut stack: Vec<(u32, Vec<u32>)> = vec![(head, Vec::new())];
    while let Some((v, arrows)) = stack.pop() {
        if arrows.len() == r {
            if v == tail {
                out.add_term(Path { head, tail, arrows }, &Rational::one());
            }
            continue;
        }
        let tag = if arrows.len() % 2 == 0 { s } else { t };
        for &a in q.arrows_with_head(v) {
            let arrow = q.arrow(a);
            if arrow.tag == tag {
                let mut next = arrows.clone();
                next.push(a);
                stack.push((arrow.tail, next));
            }
        }
    }
    out
}

fn has(mask: u32, s: usize) -> bool {
    mask >> s & 1 == 1
}

/// The α family for the ordered pair (s, t): Σ a_i P^i_IJ(s,t), with a_i the
/// coefficients of τ_{m-1}, over the (I, J) whose membership pattern makes the
/// block of τ_{m-1}(A) nonzero. For odd m that is s ∈ I ∩ J, t ∉ I ∪ J; for
/// even m it is s ∈ I \ J, t ∈ J \ I.
pub fn alpha_relators(q: &Quiver, s: usize, t: usize) -> Result<Vec<Relator>, PathError> {
    if s == t {
        return Err(PathError::SameGenerator);
    }
    let sys = q.system();
    let m = sys.m(s, t);
    let tau = tau_poly(m as i64 - 1);
    let mut out = Vec::new();
    for head in sys.subsets() {
        for tail in sys.subsets() {
            let pattern = if m % 2 == 1 {
                has(head, s) && !has(head, t) && has(tail, s) && !has(tail, t)
            } else {
                has(head, s) && !has(head, t) && !has(tail, s) && has(tail, t)
            };
            if !pattern {
                continue;
            }
            let mut element = PathElement::zero();
            for (i, a) in tau.coeffs().iter().enumerate() {
                if a.sign() != num_bigint::Sign::NoSign {
                    element = element.add(&p_element(q, head, tail, s, t, i).scale(&Rational::from_bigint(a.clone())));
                }
            }
            if !element.is_zero() {
                out.push(Relator { kind: RelatorKind::Alpha, s, t, head, tail, element });
            }
        }
    }
    Ok(out)
}

/// The β family for the pair (s, t): P^i_IJ(s,t) − P^i_IJ(t,s) for
/// i = 1..m_st over all (I, J) with s, t ∈ I \ J.
pub fn beta_relators(q: &Quiver, s: usize, t: usize) -> Result<Vec<Relator>, PathError> {
    if s == t {
        return Err(PathError::SameGenerator);
    }
    let sys = q.system();
    let m = sys.m(s, t) as usize;
    let mut out = Vec::new();
    for head in sys.subsets() {
        for tail in sys.subsets() {
            if !(has(head, s) && has(head, t) && !has(tail, s) && !has(tail, t)) {
                continue;
            }
            for i in 1..=m {
                let element = p_element(q, head, tail, s, t, i).sub(&p_element(q, head, tail, t, s, i));
                if !element.is_zero() {
                    out.push(Relator { kind: RelatorKind::Beta, s, t, head, tail, element });
                }
            }
        }
    }
    Ok(out)
}

/// Every α relator (both orientations of each pair) and every β relator.
pub fn all_relators(q: &Quiver) -> Result<Vec<Relator>, PathError> {
    let n = q.system().rank();
    let mut out = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if s != t {
                out.extend(alpha_relators(q, s, t)?);
            }
        }
    }
    for s in 0..n {
        for t in s + 1..n {
            out.extend(beta_relators(q, s, t)?);
        }
    }
    Ok(out)
}

/// ι(T_s) = −v⁻¹ e_s + v (1 − e_s) + x_s.
pub fn iota_t(q: &Quiver, s: usize) -> PathElement<LaurentPoly<Rational>> {
    let v = LaurentPoly::<Rational>::v();
    let vinv = LaurentPoly::monomial(Rational::one(), -1);
    let es: PathElement<LaurentPoly<Rational>> = PathElement::gen_e(q, s);
    let one = PathElement::unit(q);
    es.scale(&vinv.neg()).add(&one.sub(&es).scale(&v)).add(&PathElement::gen_x(q, s))
}

/// The braid relators read off directly from the definition of Ω: every
/// v-coefficient of every (I, J) block of Δ_m(ι(T_s), ι(T_t)).
pub fn definitional_relators(q: &Quiver, s: usize, t: usize) -> Result<Vec<Relator>, PathError> {
    if s == t {
        return Err(PathError::SameGenerator);
    }
    let m = q.system().m(s, t) as usize;
    let (ts, tt) = (iota_t(q, s), iota_t(q, t));
    let alternating = |a: &PathElement<LaurentPoly<Rational>>, b: &PathElement<LaurentPoly<Rational>>| {
        let mut acc = PathElement::unit(q);
        for i in 0..m {
            acc = acc.mul(if i % 2 == 0 { a } else { b });
        }
        acc
    };
    let delta = alternating(&ts, &tt).sub(&alternating(&tt, &ts));
    let mut blocks: BTreeMap<(u32, u32, i32), PathElement<Rational>> = BTreeMap::new();
    for (p, c) in delta.terms() {
        for (k, x) in c.terms() {
            blocks.entry((p.head, p.tail, k)).or_default().add_term(p.clone(), x);
        }
    }
    Ok(blocks
        .into_iter()
        .filter(|(_, e)| !e.is_zero())
        .map(|((head, tail, _), element)| Relator { kind: RelatorKind::Definitional, s, t, head, tail, element })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, TypeTag};

    fn quiver(t: TypeTag) -> Quiver {
        Quiver::full(&build_system(t).unwrap()).unwrap()
    }

    #[test]
    fn p_element_cases() {
        let q = quiver(TypeTag::A3);
        assert_eq!(p_element(&q, 0b001, 0b001, 0, 1, 0), PathElement::vertex_idem(0b001));
        assert!(p_element(&q, 0b001, 0b010, 0, 1, 0).is_zero());
        assert_eq!(p_element(&q, 0b011, 0b010, 0, 1, 1), PathElement::edge_elem(&q, 0b011, 0b010, 0).unwrap());
        let p2 = p_element(&q, 0b001, 0b001, 0, 1, 2);
        let want = PathElement::<Rational>::vertex_idem(0b001).mul(&PathElement::gen_x(&q, 0)).mul(&PathElement::gen_x(&q, 1)).mul(&PathElement::vertex_idem(0b001));
        assert_eq!(p2, want);
    }

    #[test]
    fn alpha_for_m3_is_loop_minus_vertex() {
        let q = quiver(TypeTag::I2(3));
        let rels = alpha_relators(&q, 0, 1).unwrap();
        let x12 = PathElement::<Rational>::edge_elem(&q, 0b01, 0b10, 0).unwrap();
        let x21 = PathElement::edge_elem(&q, 0b10, 0b01, 1).unwrap();
        let e1 = x12.mul(&x21).sub(&PathElement::vertex_idem(0b01));
        assert!(rels.iter().any(|r| r.head == 0b01 && r.tail == 0b01 && r.element == e1));
    }

    #[test]
    fn alpha_for_commuting_pair_kills_the_edge() {
        let q = quiver(TypeTag::A1xN(2));
        let rels = alpha_relators(&q, 0, 1).unwrap();
        let x = PathElement::<Rational>::edge_elem(&q, 0b01, 0b10, 0).unwrap();
        assert!(rels.iter().any(|r| r.element == x));
    }

    #[test]
    fn beta_merges_tags() {
        let q = quiver(TypeTag::I2(5));
        let rels = beta_relators(&q, 0, 1).unwrap();
        let d = PathElement::<Rational>::edge_elem(&q, 0b11, 0, 0).unwrap().sub(&PathElement::edge_elem(&q, 0b11, 0, 1).unwrap());
        assert!(rels.iter().any(|r| r.element == d));
        assert!(rels.iter().all(|r| r.head == 0b11 && r.tail == 0));
    }

    #[test]
    fn iota_satisfies_quadratic_in_free_algebra() {
        let q = quiver(TypeTag::A3);
        let one = PathElement::<LaurentPoly<Rational>>::unit(&q);
        for s in 0..3 {
            let x = iota_t(&q, s);
            let rhs = one.add(&x.scale(&LaurentPoly::v_minus_vinv()));
            assert_eq!(x.mul(&x), rhs);
        }
    }

    #[test]
    fn definitional_relators_are_block_homogeneous() {
        let q = quiver(TypeTag::I2(3));
        let rels = definitional_relators(&q, 0, 1).unwrap();
        assert!(!rels.is_empty());
        for r in &rels {
            assert_eq!(r.element.blocks(), vec![(r.head, r.tail)]);
        }
    }
}
