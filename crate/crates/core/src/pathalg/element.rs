use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::Serialize;

use super::{PathError, Quiver};
use crate::arith::Ring;

/// A path `head ← … ← tail` in the full quiver; length 0 is the vertex
/// idempotent E_head. Arrows are listed left to right, so the path reads as
/// the product X_{head,I_1} X_{I_1,I_2} ⋯ X_{I_{k-1},tail}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub head: u32,
    pub tail: u32,
    pub arrows: Vec<u32>,
}

impl Path {
    pub fn vertex(v: u32) -> Self {
        Path { head: v, tail: v, arrows: Vec::new() }
    }

    /// Builds a path from arrow ids, checking that consecutive arrows meet.
    pub fn from_arrows(q: &Quiver, arrows: Vec<u32>) -> Option<Self> {
        let first = q.arrow(*arrows.first()?);
        let mut tail = first.head;
        for &a in &arrows {
            let a = q.arrow(a);
            if a.head != tail {
                return None;
            }
            tail = a.tail;
        }
        Some(Path { head: first.head, tail, arrows })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation `self · o`, or `None` when the endpoints do not meet.
    pub fn concat(&self, o: &Path) -> Option<Path> {
        if self.tail != o.head {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&o.arrows);
        Some(Path { head: self.head, tail: o.tail, arrows })
    }

    /// Vertex sequence head, I_1, …, tail.
    pub fn vertices(&self, q: &Quiver) -> Vec<u32> {
        let mut v = vec![self.head];
        v.extend(self.arrows.iter().map(|&a| q.arrow(a).tail));
        v
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("E_{{{}}}", q.system().subset_name(self.head));
        }
        self.arrows.iter().map(|&a| q.arrow_name(a)).collect::<Vec<_>>().join("·")
    }
}

impl Ord for Path {
    /// Shortlex: length first, then head, then arrow ids.
    fn cmp(&self, o: &Self) -> Ordering {
        (self.arrows.len(), self.head, &self.arrows, self.tail).cmp(&(o.arrows.len(), o.head, &o.arrows, o.tail))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// A finite linear combination of paths; zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct PathElement<R> {
    terms: BTreeMap<Path, R>,
}

impl<R: Ring> Default for PathElement<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Ring> PathElement<R> {
    pub fn zero() -> Self {
        PathElement { terms: BTreeMap::new() }
    }

    pub fn from_path(p: Path, c: R) -> Self {
        let mut e = Self::zero();
        e.add_term(p, &c);
        e
    }

    /// The unit Σ_I E_I.
    pub fn unit(q: &Quiver) -> Self {
        let mut e = Self::zero();
        for v in q.system().subsets() {
            e.add_term(Path::vertex(v), &R::one());
        }
        e
    }

    /// E_I.
    pub fn vertex_idem(v: u32) -> Self {
        Self::from_path(Path::vertex(v), R::one())
    }

    /// X_IJ^s as a single arrow.
    pub fn edge_elem(q: &Quiver, head: u32, tail: u32, s: usize) -> Result<Self, PathError> {
        let a = q.arrow_id(head, tail, s)?;
        Ok(Self::from_path(Path { head, tail, arrows: vec![a] }, R::one()))
    }

    /// e_s = Σ_{s ∈ I} E_I.
    pub fn gen_e(q: &Quiver, s: usize) -> Self {
        let mut e = Self::zero();
        for v in q.system().subsets().filter(|v| v >> s & 1 == 1) {
            e.add_term(Path::vertex(v), &R::one());
        }
        e
    }

    /// x_s = Σ_{s ∈ I \ J} X_IJ^s.
    pub fn gen_x(q: &Quiver, s: usize) -> Self {
        let mut e = Self::zero();
        for (id, a) in q.arrows().iter().enumerate() {
            if a.tag == s {
                e.add_term(Path { head: a.head, tail: a.tail, arrows: vec![id as u32] }, &R::one());
            }
        }
        e
    }

    pub fn add_term(&mut self, p: Path, c: &R) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&p) {
            Some(x) => {
                x.add_assign(c);
                x.is_zero()
            }
            None => {
                self.terms.insert(p, c.clone());
                false
            }
        };
        if remove {
            self.terms.retain(|_, x| !x.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Path) -> R {
        self.terms.get(p).cloned().unwrap_or_else(R::zero)
    }

    /// Largest path length occurring.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|p| p.len()).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &o.terms {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        PathElement { terms: self.terms.iter().map(|(p, c)| (p.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero();
        for (p, x) in &self.terms {
            out.add_term(p.clone(), &x.mul(c));
        }
        out
    }

    /// Concatenation product, extended bilinearly.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (p, a) in &self.terms {
            for (r, b) in &o.terms {
                if let Some(pr) = p.concat(r) {
                    out.add_term(pr, &a.mul(b));
                }
            }
        }
        out
    }

    /// E_I · self · E_J.
    pub fn restrict(&self, head: u32, tail: u32) -> Self {
        PathElement { terms: self.terms.iter().filter(|(p, _)| p.head == head && p.tail == tail).map(|(p, c)| (p.clone(), c.clone())).collect() }
    }

    /// The (head, tail) pairs that occur.
    pub fn blocks(&self) -> Vec<(u32, u32)> {
        let mut b: Vec<(u32, u32)> = self.terms.keys().map(|p| (p.head, p.tail)).collect();
        b.sort_unstable();
        b.dedup();
        b
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> PathElement<S> {
        let mut out = PathElement::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &f(c));
        }
        out
    }

    pub fn render(&self, q: &Quiver) -> String
    where
        R: fmt::Display,
    {
        if self.is_zero() {
            return "0".into();
        }
        self.terms.iter().map(|(p, c)| format!("({c})·{}", p.render(q))).collect::<Vec<_>>().join(" + ")
    }

    /// JSON form: list of {"coeff", "vertices", "tags"} terms.
    pub fn to_json(&self, q: &Quiver) -> serde_json::Value
    where
        R: Serialize,
    {
        let sys = q.system();
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(p, c)| {
                    serde_json::json!({
                        "coeff": c,
                        "vertices": p.vertices(q).iter().map(|&v| sys.subset_name(v)).collect::<Vec<_>>(),
                        "tags": p.arrows.iter().map(|&a| sys.generators[q.arrow(a).tag].clone()).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

impl<R: Ring> fmt::Debug for PathElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(p, c)| ((p.head, &p.arrows), c))).finish()
    }
}

impl Serialize for Path {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Path", 3)?;
        st.serialize_field("head", &self.head)?;
        st.serialize_field("tail", &self.tail)?;
        st.serialize_field("arrows", &self.arrows)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::coxeter::{build_system, TypeTag};

    type E = PathElement<Rational>;

    #[test]
    fn xi_relations_hold_in_the_path_algebra() {
        for t in [TypeTag::A1xN(2), TypeTag::I2(5), TypeTag::A3, TypeTag::B3, TypeTag::A4] {
            let q = Quiver::full(&build_system(t).unwrap()).unwrap();
            let one = E::unit(&q);
            let mut sum = E::zero();
            for v in q.system().subsets() {
                sum = sum.add(&E::vertex_idem(v));
                for w in q.system().subsets() {
                    let p = E::vertex_idem(v).mul(&E::vertex_idem(w));
                    assert_eq!(p, if v == w { E::vertex_idem(v) } else { E::zero() });
                }
            }
            assert_eq!(sum, one);
            for s in 0..q.system().rank() {
                let (es, xs) = (E::gen_e(&q, s), E::gen_x(&q, s));
                assert_eq!(es.mul(&es), es);
                assert_eq!(es.mul(&xs), xs);
                assert!(xs.mul(&es).is_zero());
                assert_eq!(one.mul(&xs), xs);
                for t in 0..q.system().rank() {
                    let et = E::gen_e(&q, t);
                    assert_eq!(es.mul(&et), et.mul(&es));
                }
            }
        }
    }

    #[test]
    fn edge_elements() {
        let q = Quiver::full(&build_system(TypeTag::A3).unwrap()).unwrap();
        let x = E::edge_elem(&q, 0b011, 0b010, 0).unwrap();
        assert_eq!(x.mul(&E::vertex_idem(0b010)), x);
        assert!(x.mul(&E::vertex_idem(0b011)).is_zero());
        assert!(E::edge_elem(&q, 0b010, 0b011, 0).is_err());
    }
}
