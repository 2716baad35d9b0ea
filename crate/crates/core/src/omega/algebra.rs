use std::collections::HashMap;

use serde::Serialize;

use super::engine::{enumerate, flatten, FlatRelator, Outcome};
use super::OmegaError;
use crate::arith::{Rational, Ring};
use crate::coxeter::CoxeterSystem;
use crate::linalg::{Accumulator, SparseVec};
use crate::pathalg::{all_relators, definitional_relators, Path, PathElement, Quiver};

const MAX_COLLAPSES: usize = 10_000;

/// A basis word: a path whose every prefix is again a basis word.
#[derive(Clone, Debug, Serialize)]
pub struct Word {
    pub path: Path,
    pub parent: Option<u32>,
    pub arrow: Option<u32>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct QuotientStats {
    /// Number of levels run in the final (successful) enumeration.
    pub levels: usize,
    pub candidates: usize,
    pub relations: usize,
    /// Arrows that survive the degree-one relators.
    pub generator_arrows: usize,
    /// Relator products checked in the closing certificate.
    pub certified_products: usize,
    /// Restarts caused by a dependency among already accepted words.
    pub collapses: usize,
    pub relators: usize,
}

/// Which presentation of Ω to quotient by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelatorSource {
    /// The α and β families.
    AlphaBeta,
    /// The v-coefficients of the braid commutators of ι(T_s).
    Definitional,
}

#[derive(Clone, Debug)]
pub struct QuotientOptions {
    pub max_length: usize,
    pub relators: RelatorSource,
}

impl Default for QuotientOptions {
    fn default() -> Self {
        QuotientOptions { max_length: 12, relators: RelatorSource::AlphaBeta }
    }
}

/// kΩ with a basis of paths and the right action of every arrow on it.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    quiver: Quiver,
    pos: Vec<u32>,
    words: Vec<Word>,
    action: Vec<Vec<SparseVec<Rational>>>,
    children: Vec<Vec<u32>>,
    length_bound: usize,
    stats: QuotientStats,
}

/// An element of kΩ in basis coordinates.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraElement<F> {
    coords: SparseVec<F>,
}

impl<F: Ring> AlgebraElement<F> {
    pub fn zero() -> Self {
        AlgebraElement { coords: SparseVec::new() }
    }

    pub fn basis(i: u32) -> Self {
        AlgebraElement { coords: SparseVec::unit(i) }
    }

    pub fn from_coords(coords: SparseVec<F>) -> Self {
        AlgebraElement { coords }
    }

    pub fn coords(&self) -> &SparseVec<F> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn coeff(&self, i: u32) -> F {
        self.coords.get(i)
    }

    pub fn add(&self, o: &Self) -> Self {
        AlgebraElement { coords: self.coords.add(&o.coords) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        AlgebraElement { coords: self.coords.sub(&o.coords) }
    }

    pub fn neg(&self) -> Self {
        AlgebraElement { coords: self.coords.neg() }
    }

    pub fn scale(&self, c: &F) -> Self {
        AlgebraElement { coords: self.coords.scale(c) }
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> AlgebraElement<G> {
        AlgebraElement { coords: self.coords.map(f) }
    }
}

/// Computes kΩ for `sys`. Supported in principle for every rank ≤ 5 system;
/// types outside the certifiable list may fail to stabilize.
pub fn compute_quotient(sys: &CoxeterSystem, opts: &QuotientOptions) -> Result<QuotientAlgebra, OmegaError> {
    let q = Quiver::full(sys)?;
    let rels = match opts.relators {
        RelatorSource::AlphaBeta => all_relators(&q)?,
        RelatorSource::Definitional => {
            let mut out = Vec::new();
            for s in 0..sys.rank() {
                for t in s + 1..sys.rank() {
                    out.extend(definitional_relators(&q, s, t)?);
                }
            }
            out
        }
    };
    let mut flat: Vec<FlatRelator> = flatten(&rels);
    let mut pos = vec![0u32; q.arrows().len()];
    for v in sys.subsets() {
        for (p, &a) in q.arrows_with_head(v).iter().enumerate() {
            pos[a as usize] = p as u32;
        }
    }
    for collapses in 0..MAX_COLLAPSES {
        match enumerate(&q, &pos, &flat, opts.max_length)? {
            Outcome::Done(e) => {
                let mut children = vec![Vec::new(); e.words.len()];
                for (i, w) in e.words.iter().enumerate() {
                    if let Some(p) = w.parent {
                        children[p as usize].push(i as u32);
                    }
                }
                let mut stats = e.stats;
                stats.collapses = collapses;
                stats.relators = rels.len();
                return Ok(QuotientAlgebra { quiver: q, pos, words: e.words, action: e.action, children, length_bound: e.length_bound, stats });
            }
            Outcome::Collapse { head, element } => flat.push(FlatRelator::from_element(head, &element)),
        }
    }
    Err(OmegaError::TooManyCollapses(MAX_COLLAPSES))
}

impl QuotientAlgebra {
    pub fn system(&self) -> &CoxeterSystem {
        self.quiver.system()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, i: u32) -> &Word {
        &self.words[i as usize]
    }

    /// Longest basis word; every longer path reduces.
    pub fn length_bound(&self) -> usize {
        self.length_bound
    }

    pub fn stats(&self) -> &QuotientStats {
        &self.stats
    }

    /// Basis words spanning E_head · kΩ · E_tail.
    pub fn block(&self, head: u32, tail: u32) -> Vec<u32> {
        (0..self.words.len() as u32).filter(|&i| self.words[i as usize].path.head == head && self.words[i as usize].path.tail == tail).collect()
    }

    pub fn unit<F: Ring>(&self) -> AlgebraElement<F> {
        AlgebraElement::from_coords(SparseVec::from_sorted(self.system().subsets().map(|v| (v, F::one())).collect()))
    }

    /// [E_I]; vertex words carry the subset bitmask as their index.
    pub fn vertex<F: Ring>(&self, v: u32) -> AlgebraElement<F> {
        AlgebraElement::basis(v)
    }

    /// [X_IJ], using the smallest generator of I \ J as the tag.
    pub fn edge<F: Ring>(&self, head: u32, tail: u32) -> Result<AlgebraElement<F>, OmegaError> {
        let up = head & !tail;
        if up == 0 {
            let sys = self.system();
            return Err(OmegaError::NoArrow { head: sys.subset_name(head), tail: sys.subset_name(tail) });
        }
        self.edge_tagged(head, tail, up.trailing_zeros() as usize)
    }

    pub fn edge_tagged<F: Ring>(&self, head: u32, tail: u32, s: usize) -> Result<AlgebraElement<F>, OmegaError> {
        let a = self.quiver.arrow_id(head, tail, s)?;
        Ok(self.right_mul_arrow(&self.vertex(head), a))
    }

    /// u · x for a single arrow x.
    pub fn right_mul_arrow<F: Ring>(&self, u: &AlgebraElement<F>, a: u32) -> AlgebraElement<F> {
        let arrow = self.quiver.arrow(a);
        let p = self.pos[a as usize] as usize;
        let mut acc = Accumulator::new();
        for (b, c) in u.coords.iter() {
            if self.words[b as usize].path.tail != arrow.head {
                continue;
            }
            for (w, x) in self.action[b as usize][p].iter() {
                acc.add(w, &c.mul(&F::from_rational(x)));
            }
        }
        AlgebraElement::from_coords(acc.finish())
    }

    /// E_head · u · E_tail.
    pub fn restrict<F: Ring>(&self, u: &AlgebraElement<F>, head: u32, tail: u32) -> AlgebraElement<F> {
        AlgebraElement::from_coords(SparseVec::from_sorted(
            u.coords
                .iter()
                .filter(|(w, _)| {
                    let p = &self.words[*w as usize].path;
                    p.head == head && p.tail == tail
                })
                .map(|(w, c)| (w, c.clone()))
                .collect(),
        ))
    }

    fn right_restrict<F: Ring>(&self, u: &AlgebraElement<F>, tail: u32) -> AlgebraElement<F> {
        AlgebraElement::from_coords(SparseVec::from_sorted(
            u.coords.iter().filter(|(w, _)| self.words[*w as usize].path.tail == tail).map(|(w, c)| (w, c.clone())).collect(),
        ))
    }

    /// u · path.
    pub fn mul_path<F: Ring>(&self, u: &AlgebraElement<F>, path: &Path) -> AlgebraElement<F> {
        let mut acc = self.right_restrict(u, path.head);
        for &a in &path.arrows {
            if acc.is_zero() {
                break;
            }
            acc = self.right_mul_arrow(&acc, a);
        }
        acc
    }

    pub fn mul<F: Ring>(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> AlgebraElement<F> {
        if a.is_zero() || b.is_zero() {
            return AlgebraElement::zero();
        }
        let mut needed: Vec<u32> = Vec::new();
        for (w, _) in b.coords.iter() {
            let mut cur = Some(w);
            while let Some(c) = cur {
                needed.push(c);
                cur = self.words[c as usize].parent;
            }
        }
        needed.sort_unstable();
        needed.dedup();
        let mut memo: HashMap<u32, AlgebraElement<F>> = HashMap::with_capacity(needed.len());
        for &w in &needed {
            let word = &self.words[w as usize];
            let val = match (word.parent, word.arrow) {
                (Some(p), Some(x)) => {
                    let pv = &memo[&p];
                    if pv.is_zero() {
                        AlgebraElement::zero()
                    } else {
                        self.right_mul_arrow(pv, x)
                    }
                }
                _ => self.right_restrict(a, word.path.tail),
            };
            memo.insert(w, val);
        }
        let mut acc = Accumulator::new();
        for (w, c) in b.coords.iter() {
            acc.add_vec(&memo[&w].coords, c);
        }
        AlgebraElement::from_coords(acc.finish())
    }

    /// Product of several elements, left to right.
    pub fn product<F: Ring>(&self, factors: &[&AlgebraElement<F>]) -> AlgebraElement<F> {
        let mut acc = self.unit();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// The image of a path-algebra element under Ξ → Ω.
    pub fn project<F: Ring>(&self, e: &PathElement<F>) -> AlgebraElement<F> {
        let mut acc = Accumulator::new();
        for (p, c) in e.terms() {
            let v = self.mul_path(&self.vertex::<F>(p.head), p);
            acc.add_vec(&v.coords, c);
        }
        AlgebraElement::from_coords(acc.finish())
    }

    /// The representative path combination Σ c_w · path(w).
    pub fn lift<F: Ring>(&self, u: &AlgebraElement<F>) -> PathElement<F> {
        let mut e = PathElement::zero();
        for (w, c) in u.coords.iter() {
            e.add_term(self.words[w as usize].path.clone(), c);
        }
        e
    }

    /// The antiautomorphism δ: E_I ↦ E_{S∖I} and X^s_IJ ↦ −X^s_{S∖J,S∖I}.
    pub fn delta<F: Ring>(&self, u: &AlgebraElement<F>) -> AlgebraElement<F> {
        let full = self.system().full_set();
        let mut acc = Accumulator::new();
        for (w, c) in u.coords.iter() {
            let path = &self.words[w as usize].path;
            let mut arrows = Vec::with_capacity(path.len());
            for &a in path.arrows.iter().rev() {
                let x = self.quiver.arrow(a);
                arrows.push(self.quiver.arrow_id(full & !x.tail, full & !x.head, x.tag).expect("complemented arrow exists"));
            }
            let image = Path { head: full & !path.tail, tail: full & !path.head, arrows };
            let sign = if path.len() % 2 == 0 { c.clone() } else { c.neg() };
            let v = self.mul_path(&self.vertex::<F>(image.head), &image);
            acc.add_vec(&v.coords, &sign);
        }
        AlgebraElement::from_coords(acc.finish())
    }

    /// Applies the generator permutation `perm` (s ↦ perm[s]).
    pub fn automorphism<F: Ring>(&self, perm: &[usize], u: &AlgebraElement<F>) -> Result<AlgebraElement<F>, OmegaError> {
        let sys = self.system();
        if !sys.is_automorphism(perm) {
            return Err(OmegaError::NotAutomorphism(format!("{perm:?}")));
        }
        let map_set = |m: u32| (0..sys.rank()).filter(|s| m >> s & 1 == 1).fold(0u32, |acc, s| acc | 1 << perm[s]);
        let mut acc = Accumulator::new();
        for (w, c) in u.coords.iter() {
            let path = &self.words[w as usize].path;
            let arrows = path
                .arrows
                .iter()
                .map(|&a| {
                    let x = self.quiver.arrow(a);
                    self.quiver.arrow_id(map_set(x.head), map_set(x.tail), perm[x.tag]).expect("permuted arrow exists")
                })
                .collect();
            let image = Path { head: map_set(path.head), tail: map_set(path.tail), arrows };
            let v = self.mul_path(&self.vertex::<F>(image.head), &image);
            acc.add_vec(&v.coords, c);
        }
        Ok(AlgebraElement::from_coords(acc.finish()))
    }

    /// All nonzero products b_i · b_j for fixed i, as (j, coordinates).
    pub fn products_from(&self, i: u32) -> Vec<(u32, SparseVec<Rational>)> {
        let tail = self.words[i as usize].path.tail;
        let mut out = Vec::new();
        let mut stack = vec![(tail, AlgebraElement::<Rational>::basis(i))];
        while let Some((w, val)) = stack.pop() {
            for &c in &self.children[w as usize] {
                let next = self.right_mul_arrow(&val, self.words[c as usize].arrow.expect("child word"));
                if !next.is_zero() {
                    stack.push((c, next));
                }
            }
            out.push((w, val.coords));
        }
        out.sort_unstable_by_key(|x| x.0);
        out
    }

    /// Checks (b_i b_j) b_k = b_i (b_j b_k) on the given triples.
    pub fn check_associativity(&self, triples: &[(u32, u32, u32)]) -> bool {
        triples.iter().all(|&(i, j, k)| {
            let (a, b, c) = (AlgebraElement::<Rational>::basis(i), AlgebraElement::basis(j), AlgebraElement::basis(k));
            self.mul(&self.mul(&a, &b), &c) == self.mul(&a, &self.mul(&b, &c))
        })
    }

    pub fn render<F: Ring + std::fmt::Display>(&self, u: &AlgebraElement<F>) -> String {
        self.lift(u).render(&self.quiver)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, TypeTag};

    fn quotient(t: TypeTag) -> QuotientAlgebra {
        compute_quotient(&build_system(t).unwrap(), &QuotientOptions::default()).unwrap()
    }

    #[test]
    fn rank_one_has_three_basis_words() {
        let a = quotient(TypeTag::A1xN(1));
        assert_eq!(a.dim(), 3);
        let x: AlgebraElement<Rational> = a.edge(1, 0).unwrap();
        assert!(a.mul(&x, &x).is_zero());
        assert_eq!(a.mul(&a.unit(), &x), x);
    }

    #[test]
    fn i2_3_basics() {
        let a = quotient(TypeTag::I2(3));
        let one: AlgebraElement<Rational> = a.unit();
        for i in 0..a.dim() as u32 {
            let b = AlgebraElement::basis(i);
            assert_eq!(a.mul(&one, &b), b);
            assert_eq!(a.mul(&b, &one), b);
        }
        let x12 = a.edge(0b01, 0b10).unwrap();
        let x21 = a.edge(0b10, 0b01).unwrap();
        assert_eq!(a.mul(&x12, &x21), a.vertex::<Rational>(0b01));
        assert_eq!(a.edge_tagged::<Rational>(0b11, 0, 0).unwrap(), a.edge_tagged(0b11, 0, 1).unwrap());
    }

    #[test]
    fn delta_is_an_involutive_antiautomorphism() {
        let a = quotient(TypeTag::I2(4));
        let n = a.dim() as u32;
        for i in 0..n {
            let b = AlgebraElement::<Rational>::basis(i);
            assert_eq!(a.delta(&a.delta(&b)), b);
            for j in 0..n {
                let c = AlgebraElement::basis(j);
                assert_eq!(a.delta(&a.mul(&b, &c)), a.mul(&a.delta(&c), &a.delta(&b)));
            }
        }
    }

    #[test]
    fn automorphism_respects_products() {
        let a = quotient(TypeTag::A3);
        let perm = [2, 1, 0];
        let x = a.edge::<Rational>(0b001, 0b010).unwrap();
        let y = a.edge::<Rational>(0b010, 0b001).unwrap();
        let lhs = a.automorphism(&perm, &a.mul(&x, &y)).unwrap();
        let rhs = a.mul(&a.automorphism(&perm, &x).unwrap(), &a.automorphism(&perm, &y).unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, a.vertex(0b100));
        assert!(a.automorphism(&[1, 0, 2], &x).is_err());
    }
}
